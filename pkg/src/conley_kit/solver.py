"""Exhaustive search for connection matrices.

A connection matrix is a square GF(2) matrix on the direct sum of the Conley
index homologies of the Morse components.  It is strictly upper triangular in
the level order, lowers homological degree by one, squares to zero, and on
every constrained interval its homology reproduces the prescribed Betti
vector.  :func:`solve` enumerates every such matrix, optionally restricted to
matrices invariant under a symmetry of the components, and classifies each
block as forced nonzero, forced zero, or undetermined.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .gf2 import Gf2Matrix, mul, rank
from .morse import (
    IntervalConstraint,
    MorseDecomposition,
    interval_subspace,
    total_space,
    validate,
)

__all__ = [
    "VariableBudgetExceeded",
    "EntryVariable",
    "ConnectionMatrix",
    "HeteroclinicEdge",
    "SolverOptions",
    "SolverReport",
    "enumerate_variables",
    "check_interval",
    "check_symmetry",
    "interval_homology",
    "solve",
]

log = logging.getLogger(__name__)

GUARANTEED = "guaranteed"
POSSIBLE = "possible"


class VariableBudgetExceeded(RuntimeError):
    def __init__(self, count: int, max_vars: int):
        self.count = count
        self.max_vars = max_vars
        super().__init__(
            f"{count} free scalar unknowns exceed the budget of {max_vars}; raise max_vars"
        )


@dataclass(frozen=True)
class EntryVariable:
    """One block ``H_k(source) -> H_{k-1}(target)`` of the connection matrix.

    ``source`` and ``target`` are ``(set_index, component_index)``;
    ``rows``/``cols`` are the block's coordinates in the total space.
    """

    source: tuple[int, int]
    target: tuple[int, int]
    degree: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    source_label: str = field(compare=False)
    target_label: str = field(compare=False)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.cols))

    @property
    def size(self) -> int:
        return len(self.rows) * len(self.cols)

    @property
    def name(self) -> str:
        r, c = self.rows[0], self.cols[0]
        base = f"d{r}{c}" if r < 10 and c < 10 else f"d{r},{c}"
        if self.size == 1:
            return base
        return f"{base}[{len(self.rows)}x{len(self.cols)}]"

    def describe(self) -> str:
        return f"H_{self.degree}({self.source_label}) -> H_{self.degree - 1}({self.target_label})"


def enumerate_variables(d: MorseDecomposition) -> list[EntryVariable]:
    """All blocks allowed by strict upper triangularity and the degree drop.

    Ordered by target level, source level, degree, target component, then
    source component.
    """
    labels = total_space(d)
    coords: dict[tuple[int, int, int], list[int]] = defaultdict(list)
    for pos, lab in enumerate(labels):
        coords[(lab.set_index, lab.comp_index, lab.degree)].append(pos)
    out = []
    n_sets = len(d.sets)
    for ti in range(n_sets):
        for sj in range(ti + 1, n_sets):
            src_set, tgt_set = d.sets[sj], d.sets[ti]
            degrees = sorted({k for comp in src_set.components for k in comp.betti})
            for k in degrees:
                for tc, tcomp in enumerate(tgt_set.components):
                    if tcomp.betti[k - 1] == 0:
                        continue
                    for sc, scomp in enumerate(src_set.components):
                        if scomp.betti[k] == 0:
                            continue
                        out.append(
                            EntryVariable(
                                source=(sj, sc),
                                target=(ti, tc),
                                degree=k,
                                rows=tuple(coords[(ti, tc, k - 1)]),
                                cols=tuple(coords[(sj, sc, k)]),
                                source_label=d.component_label(sj, sc),
                                target_label=d.component_label(ti, tc),
                            )
                        )
    return out


class ConnectionMatrix:
    """A block assignment together with the assembled square matrix."""

    def __init__(self, decomposition: MorseDecomposition, variables: Sequence[EntryVariable],
                 assignment: dict[EntryVariable, Gf2Matrix]):
        self.decomposition = decomposition
        self.variables = tuple(variables)
        self.assignment = dict(assignment)
        n = len(total_space(decomposition))
        rows = [0] * n
        for var, blk in self.assignment.items():
            if blk.shape != var.shape:
                raise ValueError(f"block {var.name} has shape {blk.shape}, expected {var.shape}")
            for bi, r in enumerate(var.rows):
                for bj, c in enumerate(var.cols):
                    if blk[bi, bj]:
                        rows[r] |= 1 << c
        self.assembled = Gf2Matrix(n, n, rows)

    @classmethod
    def from_bits(cls, decomposition: MorseDecomposition, variables: Sequence[EntryVariable],
                  bits: Sequence[int]) -> ConnectionMatrix:
        """Build from scalar entries listed variable by variable, each block row-major."""
        assignment = {}
        it = iter(bits)
        for var in variables:
            nr, nc = var.shape
            assignment[var] = Gf2Matrix.from_rows(
                [[next(it) for _ in range(nc)] for _ in range(nr)], ncols=nc
            )
        return cls(decomposition, variables, assignment)

    @classmethod
    def zero(cls, decomposition: MorseDecomposition) -> ConnectionMatrix:
        variables = enumerate_variables(decomposition)
        return cls.from_bits(decomposition, variables, [0] * sum(v.size for v in variables))

    def block(self, var: EntryVariable) -> Gf2Matrix:
        return self.assignment.get(var, Gf2Matrix.zeros(*var.shape))

    def is_nonzero(self, var: EntryVariable) -> bool:
        return not self.block(var).is_zero()

    @property
    def bits(self) -> tuple[int, ...]:
        out = []
        for var in self.variables:
            blk = self.block(var)
            for i in range(blk.nrows):
                out.extend(blk.row(i))
        return tuple(out)

    def squares_to_zero(self) -> bool:
        return mul(self.assembled, self.assembled).is_zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConnectionMatrix):
            return NotImplemented
        return self.assembled == other.assembled

    def __hash__(self) -> int:
        return hash(self.assembled)

    def __repr__(self) -> str:
        return f"ConnectionMatrix({self.assembled!r})"


def interval_homology(delta: ConnectionMatrix, positions: Sequence[int]) -> dict[int, int]:
    """Per-degree dimension of ``ker / im`` of the restriction to ``positions``."""
    labels = total_space(delta.decomposition)
    by_degree: dict[int, list[int]] = defaultdict(list)
    for p in positions:
        by_degree[labels[p].degree].append(p)
    ranks = {}
    for k in by_degree:
        lower = by_degree.get(k - 1, [])
        ranks[k] = rank(delta.assembled.submatrix(lower, by_degree[k])) if lower else 0
    return {k: len(by_degree[k]) - ranks[k] - ranks.get(k + 1, 0) for k in by_degree}


def check_interval(delta: ConnectionMatrix, constraint: IntervalConstraint) -> bool:
    """Graded homology of the interval's sub-matrix equals the constraint, degree by degree."""
    positions = interval_subspace(delta.decomposition, constraint.interval)
    hom = interval_homology(delta, positions)
    degrees = set(hom) | set(constraint.betti)
    return all(hom.get(k, 0) == constraint.betti[k] for k in degrees)


def _ref_index(d: MorseDecomposition) -> dict[tuple[str, str], tuple[int, int]]:
    return {
        (s.id, c.id): (si, ci)
        for si, s in enumerate(d.sets)
        for ci, c in enumerate(s.components)
    }


def _component_swap(d: MorseDecomposition, pairs) -> dict[tuple[int, int], tuple[int, int]]:
    refs = _ref_index(d)
    swap = {}
    for p, q in pairs:
        a, b = refs[tuple(p)], refs[tuple(q)]
        swap[a] = b
        swap[b] = a
    return swap


def check_symmetry(delta: ConnectionMatrix, pairs: Iterable | None = None) -> bool:
    """Every block equals the block obtained by swapping paired components."""
    if pairs is None:
        pairs = delta.decomposition.symmetry_pairs
    swap = _component_swap(delta.decomposition, pairs)
    if not swap:
        return True
    by_key = {(v.source, v.target, v.degree): v for v in delta.variables}
    for var in delta.variables:
        image = by_key.get(
            (swap.get(var.source, var.source), swap.get(var.target, var.target), var.degree)
        )
        if image is None or delta.block(var) != delta.block(image):
            return False
    return True


@dataclass(frozen=True)
class HeteroclinicEdge:
    source: tuple[int, int]
    target: tuple[int, int]
    source_label: str
    target_label: str
    status: str


@dataclass(frozen=True)
class SolverOptions:
    max_vars: int = 24
    max_admissible: int = 1000
    use_symmetry: bool = True


@dataclass
class SolverReport:
    decomposition: MorseDecomposition
    constraints: tuple[IntervalConstraint, ...]
    variables: tuple[EntryVariable, ...]
    n_free: int
    admissible_count: int
    admissible: list[ConnectionMatrix]
    forced_nonzero: list[EntryVariable]
    forced_zero: list[EntryVariable]
    undetermined: list[EntryVariable]
    heteroclinic_edges: list[HeteroclinicEdge]
    symmetric: bool

    @property
    def inconsistent(self) -> bool:
        return self.admissible_count == 0

    @property
    def truncated(self) -> bool:
        return len(self.admissible) < self.admissible_count

    def status(self, var: EntryVariable) -> str:
        if var in self.forced_nonzero:
            return "forced_nonzero"
        if var in self.forced_zero:
            return "forced_zero"
        return "undetermined"

    def guaranteed_edges(self) -> set[tuple[str, str]]:
        return {(e.source_label, e.target_label) for e in self.heteroclinic_edges if e.status == GUARANTEED}


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


class _Search:
    """Depth-first enumeration over free scalar unknowns with early rejection."""

    def __init__(self, d: MorseDecomposition, variables: list[EntryVariable],
                 constraints: Sequence[IntervalConstraint], use_symmetry: bool):
        self.d = d
        self.variables = variables
        labels = total_space(d)
        self.labels = labels
        # scalar entries in canonical order
        self.scalars: list[tuple[int, int, int]] = []
        for vi, var in enumerate(variables):
            for r in var.rows:
                for c in var.cols:
                    self.scalars.append((vi, r, c))
        where = {(r, c): s for s, (_, r, c) in enumerate(self.scalars)}

        uf = _UnionFind(len(self.scalars))
        if use_symmetry and d.symmetry_pairs:
            swap = _component_swap(d, d.symmetry_pairs)
            coord = {(lab.set_index, lab.comp_index, lab.degree, lab.local): p
                     for p, lab in enumerate(labels)}

            def image(p: int) -> int:
                lab = labels[p]
                si, ci = swap.get((lab.set_index, lab.comp_index), (lab.set_index, lab.comp_index))
                return coord[(si, ci, lab.degree, lab.local)]

            for s, (_, r, c) in enumerate(self.scalars):
                uf.union(s, where[(image(r), image(c))])

        classes: dict[int, list[int]] = defaultdict(list)
        for s in range(len(self.scalars)):
            classes[uf.find(s)].append(s)

        def order_key(root: int):
            vi, r, c = self.scalars[root]
            var = variables[vi]
            return (-var.degree, labels[r].set_index, labels[c].set_index, root)

        roots = sorted(classes, key=order_key)
        self.n_free = len(roots)
        self.free_of_scalar = [0] * len(self.scalars)
        for fi, root in enumerate(roots):
            for s in classes[root]:
                self.free_of_scalar[s] = fi
        self.var_free = [sorted({self.free_of_scalar[s] for s, sc in enumerate(self.scalars) if sc[0] == vi})
                         for vi in range(len(variables))]

        # checks fire once their last free unknown is assigned; -1 means static
        self.checks: dict[int, list] = defaultdict(list)
        self._square_checks(where)
        for con in constraints:
            self._interval_checks(con, where)

    def _square_checks(self, where: dict[tuple[int, int], int]) -> None:
        left_by_col: dict[int, list[int]] = defaultdict(list)
        right_by_row: dict[int, list[int]] = defaultdict(list)
        for s, (_, r, c) in enumerate(self.scalars):
            left_by_col[c].append(s)
            right_by_row[r].append(s)
        products: dict[tuple[int, int], list[tuple[int, int]]] = defaultdict(list)
        for m, lefts in left_by_col.items():
            for sl in lefts:
                for sr in right_by_row.get(m, ()):
                    r, c = self.scalars[sl][1], self.scalars[sr][2]
                    products[(r, c)].append((self.free_of_scalar[sl], self.free_of_scalar[sr]))
        for terms in products.values():
            trigger = max(max(a, b) for a, b in terms)
            self.checks[trigger].append(("square", terms))

    def _interval_checks(self, con: IntervalConstraint, where: dict[tuple[int, int], int]) -> None:
        positions = interval_subspace(self.d, con.interval)
        by_degree: dict[int, list[int]] = defaultdict(list)
        for p in positions:
            by_degree[self.labels[p].degree].append(p)
        local = {p: i for k in by_degree for i, p in enumerate(by_degree[k])}
        # block from degree k to k-1 inside the interval, as (row, col, free) triples
        blocks: dict[int, list[tuple[int, int, int]]] = {}
        for k in by_degree:
            entries = []
            for c in by_degree[k]:
                for r in by_degree.get(k - 1, ()):
                    s = where.get((r, c))
                    if s is not None:
                        entries.append((local[r], local[c], self.free_of_scalar[s]))
            blocks[k] = entries
        for k in set(by_degree) | set(con.betti):
            n_k = len(by_degree.get(k, ()))
            involved = blocks.get(k, []) + blocks.get(k + 1, [])
            trigger = max((f for _, _, f in involved), default=-1)
            self.checks[trigger].append(
                ("homology", n_k, blocks.get(k, []), blocks.get(k + 1, []), con.betti[k])
            )

    @staticmethod
    def _block_rank(entries, x) -> int:
        rows: dict[int, int] = defaultdict(int)
        for r, c, f in entries:
            if x[f]:
                rows[r] ^= 1 << c
        return rank(Gf2Matrix(len(rows), max((v.bit_length() for v in rows.values()), default=0),
                              list(rows.values())))

    def _passes(self, trigger: int, x: list[int]) -> bool:
        for check in self.checks.get(trigger, ()):
            if check[0] == "square":
                acc = 0
                for a, b in check[1]:
                    acc ^= x[a] & x[b]
                if acc:
                    return False
            else:
                _, n_k, here, above, expected = check
                if n_k - self._block_rank(here, x) - self._block_rank(above, x) != expected:
                    return False
        return True

    def run(self):
        """Yield every free assignment passing all checks, in lexicographic order."""
        x = [0] * self.n_free
        if not self._passes(-1, x):
            return
        n = self.n_free
        if n == 0:
            yield list(x)
            return
        i = 0
        x[0] = -1
        while i >= 0:
            x[i] += 1
            if x[i] > 1:
                x[i] = 0
                i -= 1
                continue
            if not self._passes(i, x):
                continue
            if i == n - 1:
                yield list(x)
            else:
                i += 1
                x[i] = -1

    def scalar_bits(self, x: Sequence[int]) -> list[int]:
        return [x[f] for f in self.free_of_scalar]


def solve(d: MorseDecomposition, constraints: Sequence[IntervalConstraint] = (),
          options: SolverOptions | None = None) -> SolverReport:
    """Enumerate all admissible connection matrices and classify their blocks.

    Raises :class:`VariableBudgetExceeded` when the number of free scalar
    unknowns (after symmetry identification) exceeds ``options.max_vars``.
    An empty admissible set is a normal outcome; see
    :attr:`SolverReport.inconsistent`.
    """
    options = options or SolverOptions()
    report = validate(d)
    if not report.ok:
        raise ValueError("invalid Morse decomposition: " + "; ".join(report.errors))
    constraints = tuple(constraints)
    variables = enumerate_variables(d)
    symmetric = options.use_symmetry and bool(d.symmetry_pairs)
    search = _Search(d, variables, constraints, options.use_symmetry)
    if search.n_free > options.max_vars:
        raise VariableBudgetExceeded(search.n_free, options.max_vars)

    pair_vars: dict[tuple[tuple[int, int], tuple[int, int]], list[int]] = defaultdict(list)
    for vi, var in enumerate(variables):
        pair_vars[(var.source, var.target)].append(vi)

    count = 0
    stored: list[ConnectionMatrix] = []
    var_nonzero = [0] * len(variables)
    pair_nonzero: dict = defaultdict(int)
    for x in search.run():
        delta = ConnectionMatrix.from_bits(d, variables, search.scalar_bits(x))
        # the search checks are exhaustive at a leaf; verify the definition anyway
        if not (delta.squares_to_zero()
                and (not symmetric or check_symmetry(delta))
                and all(check_interval(delta, c) for c in constraints)):
            raise AssertionError("search accepted a matrix that fails the admissibility checks")
        count += 1
        if len(stored) < options.max_admissible:
            stored.append(delta)
        nz = [any(x[f] for f in search.var_free[vi]) for vi in range(len(variables))]
        for vi, flag in enumerate(nz):
            var_nonzero[vi] += flag
        for key, vis in pair_vars.items():
            pair_nonzero[key] += any(nz[vi] for vi in vis)
    stored.sort(key=lambda m: m.bits)
    log.debug("solve: %d free unknowns, %d admissible", search.n_free, count)

    forced_nonzero, forced_zero, undetermined = [], [], []
    for vi, var in enumerate(variables):
        if count and var_nonzero[vi] == count:
            forced_nonzero.append(var)
        elif count and var_nonzero[vi] == 0:
            forced_zero.append(var)
        else:
            undetermined.append(var)

    edges = []
    for (src, tgt), vis in pair_vars.items():
        if src[0] != tgt[0] + 1 or not count:
            continue
        hits = pair_nonzero[(src, tgt)]
        if hits == 0:
            continue
        edges.append(HeteroclinicEdge(
            source=src,
            target=tgt,
            source_label=variables[vis[0]].source_label,
            target_label=variables[vis[0]].target_label,
            status=GUARANTEED if hits == count else POSSIBLE,
        ))
    edges.sort(key=lambda e: (-e.source[0], e.source[1], e.target[1]))

    return SolverReport(
        decomposition=d,
        constraints=constraints,
        variables=tuple(variables),
        n_free=search.n_free,
        admissible_count=count,
        admissible=stored,
        forced_nonzero=forced_nonzero,
        forced_zero=forced_zero,
        undetermined=undetermined,
        heteroclinic_edges=edges,
        symmetric=symmetric,
    )
