"""Cellular chain complexes over GF(2) and their homology."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .conley_index import BettiVector
from .gf2 import (
    Gf2Matrix,
    image_basis,
    kernel_basis,
    mul,
    rank,
    solve_int,
)

__all__ = [
    "NotAComplex",
    "CwComplex",
    "ChainComplex",
    "HomologyData",
    "from_cw",
    "homology",
    "reduce",
    "builtin",
    "disjoint_union",
    "BUILTINS",
]


class NotAComplex(ValueError):
    """The boundary maps do not compose to zero."""

    def __init__(self, degree: int, upper_cell, lower_cell):
        self.degree = degree
        self.upper_cell = upper_cell
        self.lower_cell = lower_cell
        super().__init__(
            f"boundary of boundary is nonzero: d_{degree - 1} o d_{degree} maps "
            f"cell {upper_cell!r} onto cell {lower_cell!r}"
        )


@dataclass(frozen=True)
class CwComplex:
    """Cells by dimension plus mod-2 incidence numbers.

    ``incidence`` lists ``(k, k_cell, k_minus_1_cell, parity)``.  Repeated
    pairs are summed mod 2, so a 1-cell glued twice onto one 0-cell can be
    written as two parity-1 entries.
    """

    cells: tuple[tuple[str, ...], ...]
    incidence: tuple[tuple[int, str, str, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(tuple(c) for c in self.cells))
        object.__setattr__(self, "incidence", tuple(tuple(e) for e in self.incidence))
        seen: set[str] = set()
        for cells in self.cells:
            for c in cells:
                if c in seen:
                    raise ValueError(f"duplicate cell id {c!r}")
                seen.add(c)
        for k, hi, lo, parity in self.incidence:
            if k < 1 or k >= len(self.cells):
                raise ValueError(f"incidence degree {k} out of range")
            if hi not in self.cells[k]:
                raise ValueError(f"incidence references unknown {k}-cell {hi!r}")
            if lo not in self.cells[k - 1]:
                raise ValueError(f"incidence references unknown {k - 1}-cell {lo!r}")
            if parity not in (0, 1):
                raise ValueError(f"parity must be 0 or 1, got {parity!r}")

    @property
    def dimension(self) -> int:
        return max((k for k, cs in enumerate(self.cells) if cs), default=-1)


@dataclass(frozen=True, eq=False)
class ChainComplex:
    """Graded GF(2) vector spaces ``C_0 .. C_top`` with boundary maps.

    ``boundaries[k]`` has shape ``dims[k-1] x dims[k]`` for ``1 <= k <= top``.
    Degrees outside that range have dimension 0 and zero boundary.
    """

    dims: tuple[int, ...]
    boundaries: Mapping[int, Gf2Matrix] = field(default_factory=dict)

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        while dims and dims[-1] == 0:
            dims = dims[:-1]
        object.__setattr__(self, "dims", dims)
        bd = {}
        for k in range(1, len(dims)):
            m = self.boundaries.get(k)
            if m is None:
                m = Gf2Matrix.zeros(dims[k - 1], dims[k])
            if m.shape != (dims[k - 1], dims[k]):
                raise ValueError(
                    f"boundary {k} has shape {m.shape}, expected {(dims[k - 1], dims[k])}"
                )
            bd[k] = m
        extra = [k for k in self.boundaries if k not in bd and not self.boundaries[k].is_zero()]
        if extra:
            raise ValueError(f"nonzero boundary in degree {extra[0]} outside the complex")
        object.__setattr__(self, "boundaries", bd)

    @property
    def top_degree(self) -> int:
        return len(self.dims) - 1

    def dim(self, k: int) -> int:
        return self.dims[k] if 0 <= k < len(self.dims) else 0

    def boundary(self, k: int) -> Gf2Matrix:
        """``d_k : C_k -> C_{k-1}``, a zero matrix outside ``1..top``."""
        if k in self.boundaries:
            return self.boundaries[k]
        return Gf2Matrix.zeros(self.dim(k - 1), self.dim(k))

    def check(self) -> tuple[int, int, int] | None:
        """First ``(k, column, row)`` with ``(d_{k-1} d_k)[row, column] != 0``, else None."""
        for k in range(2, len(self.dims)):
            prod = mul(self.boundary(k - 1), self.boundary(k))
            for i, r in enumerate(prod.rows):
                if r:
                    return k, (r & -r).bit_length() - 1, i
        return None

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * d for k, d in enumerate(self.dims))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainComplex):
            return NotImplemented
        return self.dims == other.dims and self.boundaries == other.boundaries

    __hash__ = None


@dataclass(frozen=True)
class _DegreeHomology:
    reps: Gf2Matrix
    # columns: boundaries basis followed by the representatives
    _frame: Gf2Matrix
    _n_boundaries: int

    def project(self, cycle: int) -> int:
        x = solve_int(self._frame, cycle)
        if x is None:
            raise ValueError("vector is not a cycle")
        return x >> self._n_boundaries


class HomologyData:
    """Homology of a chain complex with chosen cycle representatives.

    For each degree ``k``: ``betti[k]``, ``cycle_reps[k]`` (columns are cycles
    in ``C_k``) and :meth:`project`, which writes any cycle in the basis of
    ``cycle_reps[k]`` modulo boundaries.
    """

    def __init__(self, complex_: ChainComplex, per_degree: Mapping[int, _DegreeHomology]):
        self.complex = complex_
        self._per_degree = dict(per_degree)
        self.betti = BettiVector({k: h.reps.ncols for k, h in self._per_degree.items()})
        self.cycle_reps = {k: h.reps for k, h in self._per_degree.items()}

    def reps(self, k: int) -> Gf2Matrix:
        if k in self._per_degree:
            return self._per_degree[k].reps
        return Gf2Matrix.zeros(self.complex.dim(k), 0)

    def project(self, k: int, cycle) -> tuple[int, ...]:
        """Coordinates of the class of ``cycle`` (bits or int) in ``H_k``."""
        value = cycle if isinstance(cycle, int) else sum(b << i for i, b in enumerate(cycle))
        n = self.betti[k]
        if k not in self._per_degree:
            if value:
                raise ValueError("vector is not a cycle")
            return ()
        coords = self._per_degree[k].project(value)
        return tuple((coords >> i) & 1 for i in range(n))

    def project_int(self, k: int, cycle: int) -> int:
        if k not in self._per_degree:
            if cycle:
                raise ValueError("vector is not a cycle")
            return 0
        return self._per_degree[k].project(cycle)

    def induced(self, k: int, chain_matrix: Gf2Matrix, target: HomologyData, target_degree: int | None = None) -> Gf2Matrix:
        """Matrix of the map on ``H_k`` induced by a chain-level map into ``target``."""
        tk = k if target_degree is None else target_degree
        cols = [target.project_int(tk, chain_matrix.apply(z)) for z in self.reps(k).columns()]
        return Gf2Matrix.from_columns(cols, target.betti[tk])


def from_cw(cw: CwComplex) -> ChainComplex:
    """Chain complex of a CW complex; raises :class:`NotAComplex` if d o d != 0."""
    index = [{c: i for i, c in enumerate(cells)} for cells in cw.cells]
    rows = {k: [0] * len(cw.cells[k - 1]) for k in range(1, len(cw.cells))}
    for k, hi, lo, parity in cw.incidence:
        if parity:
            rows[k][index[k - 1][lo]] ^= 1 << index[k][hi]
    dims = [len(c) for c in cw.cells]
    bd = {k: Gf2Matrix(dims[k - 1], dims[k], rows[k]) for k in rows}
    cc = ChainComplex(tuple(dims), bd)
    bad = cc.check()
    if bad is not None:
        k, col, row = bad
        raise NotAComplex(k, cw.cells[k][col], cw.cells[k - 2][row])
    return cc


def homology(c: ChainComplex) -> HomologyData:
    """Homology in every degree with deterministic representatives.

    Representatives are the kernel basis vectors of ``d_k`` that are not
    already in the span of the boundaries and the earlier representatives.
    """
    per_degree = {}
    for k in range(len(c.dims)):
        kern = kernel_basis(c.boundary(k))
        bnd = image_basis(c.boundary(k + 1))
        frame_cols = bnd.columns()
        r = len(frame_cols)
        reps = []
        for z in kern.columns():
            trial = Gf2Matrix.from_columns(frame_cols + [z], c.dims[k])
            if rank(trial) > r:
                frame_cols.append(z)
                reps.append(z)
                r += 1
        per_degree[k] = _DegreeHomology(
            Gf2Matrix.from_columns(reps, c.dims[k]),
            Gf2Matrix.from_columns(frame_cols, c.dims[k]),
            bnd.ncols,
        )
    return HomologyData(c, per_degree)


def reduce(b: Mapping[int, int]) -> BettiVector:
    """Reduced Betti vector: one fewer class in degree 0."""
    b = BettiVector(b)
    if b[0] < 1:
        raise ValueError("reduced homology needs at least one class in degree 0")
    out = dict(b)
    out[0] = b[0] - 1
    return BettiVector(out)


def disjoint_union(*complexes: ChainComplex) -> ChainComplex:
    top = max((c.top_degree for c in complexes), default=-1)
    dims = [sum(c.dim(k) for c in complexes) for k in range(top + 1)]
    bd = {}
    for k in range(1, top + 1):
        rows: list[int] = []
        col_off = 0
        for c in complexes:
            b = c.boundary(k)
            rows.extend(r << col_off for r in b.rows)
            col_off += b.ncols
        bd[k] = Gf2Matrix(dims[k - 1], dims[k], rows)
    return ChainComplex(tuple(dims), bd)


# built-in cell structures ------------------------------------------------

def _point(_params=None) -> CwComplex:
    return CwComplex(cells=(("v",),))


def _interval(_params=None) -> CwComplex:
    return CwComplex(cells=(("v0", "v1"), ("e",)), incidence=((1, "e", "v0", 1), (1, "e", "v1", 1)))


def _circle(_params=None) -> CwComplex:
    # both ends of the 1-cell are glued to the single vertex
    return CwComplex(cells=(("v",), ("e",)), incidence=((1, "e", "v", 1), (1, "e", "v", 1)))


def _sphere_minimal(n: int) -> CwComplex:
    if n < 1:
        raise ValueError("sphere_minimal needs n >= 1")
    cells = [("v",)] + [()] * (n - 1) + [("s",)]
    return CwComplex(cells=tuple(cells))


def _sphere_equator(_params=None) -> CwComplex:
    # the equator carries one vertex so that H_0 is nonzero
    return CwComplex(
        cells=(("v",), ("eq",), ("north", "south")),
        incidence=(
            (1, "eq", "v", 1),
            (1, "eq", "v", 1),
            (2, "north", "eq", 1),
            (2, "south", "eq", 1),
        ),
    )


def _wedge_of_spheres(degrees: Sequence[int]) -> CwComplex:
    degrees = list(degrees)
    if any(d < 1 for d in degrees):
        raise ValueError("wedge_of_spheres needs sphere dimensions >= 1")
    top = max(degrees, default=0)
    cells: list[list[str]] = [["v"]] + [[] for _ in range(top)]
    incidence = []
    for i, d in enumerate(degrees):
        name = f"s{i}"
        cells[d].append(name)
        if d == 1:
            incidence += [(1, name, "v", 1), (1, name, "v", 1)]
    return CwComplex(cells=tuple(tuple(c) for c in cells), incidence=tuple(incidence))


BUILTINS = {
    "point": _point,
    "interval": _interval,
    "circle": _circle,
    "sphere_minimal": _sphere_minimal,
    "sphere_equator": _sphere_equator,
    "wedge_of_spheres": _wedge_of_spheres,
}


def builtin(name: str, params=None) -> CwComplex:
    """Named CW structure; ``sphere_minimal`` takes ``n``, ``wedge_of_spheres`` a list of dims."""
    try:
        factory = BUILTINS[name]
    except KeyError:
        raise ValueError(f"unknown builtin complex {name!r}; choose from {sorted(BUILTINS)}") from None
    return factory(params)
