"""Short exact sequences of chain complexes and the zig-zag lemma.

The connecting homomorphism is computed by an explicit diagram chase:
lift a cycle of ``C`` to ``B``, take its boundary, and pull it back to ``A``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .chain_complex import ChainComplex, HomologyData, homology
from .gf2 import Gf2Matrix, hstack, kernel_basis, mul, rank, solve_int

__all__ = [
    "ChainMap",
    "ShortExactSequence",
    "ValidationReport",
    "LesNode",
    "LongExactSequence",
    "validate_ses",
    "connecting_homomorphism",
    "long_exact_sequence",
    "check_exactness",
    "split_ses",
    "twist_extension",
]


@dataclass(frozen=True, eq=False)
class ChainMap:
    """Degreewise matrices ``f_k : source.C_k -> target.C_k``; missing degrees are zero."""

    source: ChainComplex
    target: ChainComplex
    maps: Mapping[int, Gf2Matrix] = field(default_factory=dict)

    def __post_init__(self):
        top = max(self.source.top_degree, self.target.top_degree)
        full = {}
        for k in range(top + 1):
            m = self.maps.get(k)
            shape = (self.target.dim(k), self.source.dim(k))
            if m is None:
                m = Gf2Matrix.zeros(*shape)
            if m.shape != shape:
                raise ValueError(f"chain map degree {k} has shape {m.shape}, expected {shape}")
            full[k] = m
        object.__setattr__(self, "maps", full)

    @property
    def top_degree(self) -> int:
        return max(self.source.top_degree, self.target.top_degree)

    def at(self, k: int) -> Gf2Matrix:
        if k in self.maps:
            return self.maps[k]
        return Gf2Matrix.zeros(self.target.dim(k), self.source.dim(k))

    def commutes(self) -> int | None:
        """First degree where ``d f != f d`` fails, else None."""
        for k in range(1, self.top_degree + 1):
            left = mul(self.target.boundary(k), self.at(k))
            right = mul(self.at(k - 1), self.source.boundary(k))
            if left != right:
                return k
        return None


@dataclass(frozen=True, eq=False)
class ShortExactSequence:
    """``0 -> a --inc--> b --proj--> c -> 0``."""

    a: ChainComplex
    b: ChainComplex
    c: ChainComplex
    inc: ChainMap
    proj: ChainMap

    @property
    def top_degree(self) -> int:
        return max(self.a.top_degree, self.b.top_degree, self.c.top_degree)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    degree: int | None = None
    law: str | None = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "valid"
        return f"invalid: {self.law} fails in degree {self.degree}"


def _same_column_space(x: Gf2Matrix, y: Gf2Matrix) -> bool:
    rx, ry = rank(x), rank(y)
    return rx == ry == rank(hstack([x, y]))


def validate_ses(s: ShortExactSequence) -> ValidationReport:
    """Check commutation, injectivity, surjectivity and exactness at ``b``."""
    if s.inc.source != s.a or s.inc.target != s.b or s.proj.source != s.b or s.proj.target != s.c:
        return ValidationReport(False, None, "chain maps do not match the complexes")
    k = s.inc.commutes()
    if k is not None:
        return ValidationReport(False, k, "inc commutes with boundary")
    k = s.proj.commutes()
    if k is not None:
        return ValidationReport(False, k, "proj commutes with boundary")
    for k in range(s.top_degree + 1):
        i, p = s.inc.at(k), s.proj.at(k)
        if rank(i) != s.a.dim(k):
            return ValidationReport(False, k, "inc injective")
        if rank(p) != s.c.dim(k):
            return ValidationReport(False, k, "proj surjective")
        if not _same_column_space(i, kernel_basis(p)):
            return ValidationReport(False, k, "image of inc equals kernel of proj")
    return ValidationReport(True)


class ChaseError(RuntimeError):
    """A lift needed by the diagram chase does not exist."""


def connecting_homomorphism(
    s: ShortExactSequence,
    k: int,
    hom_a: HomologyData | None = None,
    hom_c: HomologyData | None = None,
) -> Gf2Matrix:
    """Matrix of ``H_k(c) -> H_{k-1}(a)`` in the representative bases of :func:`homology`."""
    hom_a = hom_a or homology(s.a)
    hom_c = hom_c or homology(s.c)
    proj_k = s.proj.at(k)
    inc_prev = s.inc.at(k - 1)
    d_b = s.b.boundary(k)
    cols = []
    for z in hom_c.reps(k).columns():
        lift = solve_int(proj_k, z)
        if lift is None:
            raise ChaseError(f"cycle of c in degree {k} has no preimage in b")
        down = d_b.apply(lift)
        pulled = solve_int(inc_prev, down)
        if pulled is None:
            raise ChaseError(f"boundary in degree {k - 1} is not in the image of a")
        cols.append(hom_a.project_int(k - 1, pulled))
    return Gf2Matrix.from_columns(cols, hom_a.betti[k - 1])


@dataclass(frozen=True)
class LesNode:
    label: str
    degree: int
    dim: int


@dataclass(frozen=True)
class LongExactSequence:
    """Nodes from ``H_top(a)`` down to ``H_0(c)``; ``maps[i]`` goes from node i to node i+1."""

    nodes: tuple[LesNode, ...]
    maps: tuple[Gf2Matrix, ...]


def long_exact_sequence(s: ShortExactSequence) -> LongExactSequence:
    ha, hb, hc = homology(s.a), homology(s.b), homology(s.c)
    nodes: list[LesNode] = []
    maps: list[Gf2Matrix] = []
    for k in range(s.top_degree, -1, -1):
        nodes += [
            LesNode("a", k, ha.betti[k]),
            LesNode("b", k, hb.betti[k]),
            LesNode("c", k, hc.betti[k]),
        ]
        maps.append(ha.induced(k, s.inc.at(k), hb))
        maps.append(hb.induced(k, s.proj.at(k), hc))
        if k > 0:
            maps.append(connecting_homomorphism(s, k, ha, hc))
    return LongExactSequence(tuple(nodes), tuple(maps))


@dataclass(frozen=True)
class ExactnessReport:
    exact: bool
    failures: tuple[LesNode, ...] = ()

    def __bool__(self) -> bool:
        return self.exact


def check_exactness(les: LongExactSequence) -> ExactnessReport:
    """At every node, image of the incoming map equals kernel of the outgoing one.

    The sequence is padded with zero spaces at both ends.
    """
    failures = []
    for i, node in enumerate(les.nodes):
        incoming = les.maps[i - 1] if i > 0 else Gf2Matrix.zeros(node.dim, 0)
        outgoing = les.maps[i] if i < len(les.maps) else Gf2Matrix.zeros(0, node.dim)
        if not _same_column_space(incoming, kernel_basis(outgoing)):
            failures.append(node)
    return ExactnessReport(not failures, tuple(failures))


# constructions --------------------------------------------------------------

def _direct_sum(a: ChainComplex, c: ChainComplex, twist: Mapping[int, Gf2Matrix]) -> ChainComplex:
    top = max(a.top_degree, c.top_degree)
    dims = [a.dim(k) + c.dim(k) for k in range(top + 1)]
    bd = {}
    for k in range(1, top + 1):
        t = twist.get(k, Gf2Matrix.zeros(a.dim(k - 1), c.dim(k)))
        if t.shape != (a.dim(k - 1), c.dim(k)):
            raise ValueError(f"twist in degree {k} has shape {t.shape}")
        upper = hstack([a.boundary(k), t])
        lower = hstack([Gf2Matrix.zeros(c.dim(k - 1), a.dim(k)), c.boundary(k)])
        bd[k] = Gf2Matrix(dims[k - 1], dims[k], list(upper.rows) + list(lower.rows))
    return ChainComplex(tuple(dims), bd)


def twist_extension(a: ChainComplex, c: ChainComplex, twist: Mapping[int, Gf2Matrix]) -> ShortExactSequence:
    """``b = a (+) c`` with boundary ``[[d_a, t], [0, d_c]]`` and the canonical maps.

    ``twist[k]`` maps ``c_k -> a_{k-1}`` and must satisfy
    ``d_a t_k + t_{k-1} d_c = 0``, otherwise ``b`` is not a complex.
    """
    b = _direct_sum(a, c, twist)
    bad = b.check()
    if bad is not None:
        raise ValueError(f"twist does not give a complex (degree {bad[0]})")
    top = b.top_degree
    inc, proj = {}, {}
    for k in range(top + 1):
        na, nc = a.dim(k), c.dim(k)
        inc[k] = Gf2Matrix(na + nc, na, [1 << i for i in range(na)] + [0] * nc)
        proj[k] = Gf2Matrix(nc, na + nc, [1 << (na + i) for i in range(nc)])
    return ShortExactSequence(a, b, c, ChainMap(a, b, inc), ChainMap(b, c, proj))


def split_ses(a: ChainComplex, c: ChainComplex) -> ShortExactSequence:
    return twist_extension(a, c, {})
