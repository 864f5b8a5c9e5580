"""Morse decompositions ordered by Lyapunov level."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .conley_index import BettiVector, wedge

__all__ = [
    "MorseComponent",
    "MorseSet",
    "MorseDecomposition",
    "Interval",
    "IntervalConstraint",
    "BasisLabel",
    "DecompositionReport",
    "validate",
    "total_space",
    "interval_subspace",
]


@dataclass(frozen=True)
class MorseComponent:
    id: str
    betti: BettiVector

    def __post_init__(self):
        if not isinstance(self.betti, BettiVector):
            object.__setattr__(self, "betti", BettiVector(self.betti))


@dataclass(frozen=True)
class MorseSet:
    id: str
    level: int
    components: tuple[MorseComponent, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    @property
    def betti(self) -> BettiVector:
        out = BettiVector()
        for comp in self.components:
            out = wedge(out, comp.betti)
        return out

    def component(self, comp_id: str) -> MorseComponent:
        for comp in self.components:
            if comp.id == comp_id:
                return comp
        raise KeyError(f"Morse set {self.id!r} has no component {comp_id!r}")


ComponentRef = tuple[str, str]


@dataclass(frozen=True)
class MorseDecomposition:
    """Morse sets in strictly increasing level order.

    ``symmetry_pairs`` holds pairs of ``(set_id, component_id)`` references
    swapped by a symmetry of the flow.  Construction does not validate; call
    :func:`validate`.
    """

    sets: tuple[MorseSet, ...]
    symmetry_pairs: tuple[tuple[ComponentRef, ComponentRef], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(self.sets))
        object.__setattr__(
            self,
            "symmetry_pairs",
            tuple((tuple(p), tuple(q)) for p, q in self.symmetry_pairs),
        )

    def index_of(self, set_id: str) -> int:
        for i, s in enumerate(self.sets):
            if s.id == set_id:
                return i
        raise KeyError(f"no Morse set {set_id!r}")

    def without_symmetry(self) -> MorseDecomposition:
        return MorseDecomposition(self.sets, ())

    def involution(self) -> dict[ComponentRef, ComponentRef]:
        """Component swap induced by the symmetry pairs (identity elsewhere)."""
        swap: dict[ComponentRef, ComponentRef] = {}
        for p, q in self.symmetry_pairs:
            swap[p] = q
            swap[q] = p
        return swap

    def component_label(self, set_index: int, comp_index: int) -> str:
        s = self.sets[set_index]
        if len(s.components) == 1:
            return s.id
        return f"{s.id}.{s.components[comp_index].id}"


@dataclass(frozen=True)
class Interval:
    """Contiguous range of set indices ``lo..hi`` (inclusive)."""

    lo: int
    hi: int

    def __contains__(self, i: int) -> bool:
        return self.lo <= i <= self.hi


@dataclass(frozen=True)
class IntervalConstraint:
    interval: Interval
    betti: BettiVector

    def __post_init__(self):
        if not isinstance(self.betti, BettiVector):
            object.__setattr__(self, "betti", BettiVector(self.betti))


@dataclass(frozen=True)
class BasisLabel:
    set_index: int
    comp_index: int
    degree: int
    local: int
    set_id: str
    comp_id: str


@dataclass
class DecompositionReport:
    errors: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def __bool__(self) -> bool:
        return self.ok


def validate(d: MorseDecomposition) -> DecompositionReport:
    report = DecompositionReport()
    err = report.errors.append
    if not d.sets:
        err("decomposition has no Morse sets")
    seen_ids: set[str] = set()
    prev_level = None
    for s in d.sets:
        if s.id in seen_ids:
            err(f"duplicate Morse set id {s.id!r}")
        seen_ids.add(s.id)
        if prev_level is not None and s.level <= prev_level:
            err(f"level of {s.id!r} ({s.level}) is not above the previous level ({prev_level})")
        prev_level = s.level
        if not s.components:
            err(f"Morse set {s.id!r} has no components")
        comp_ids = [c.id for c in s.components]
        if len(set(comp_ids)) != len(comp_ids):
            err(f"Morse set {s.id!r} has duplicate component ids")
    by_id = {s.id: s for s in d.sets}
    used: set[ComponentRef] = set()
    for p, q in d.symmetry_pairs:
        refs_ok = True
        for ref in (p, q):
            s = by_id.get(ref[0])
            if s is None or ref[1] not in {c.id for c in s.components}:
                err(f"symmetry pair references unknown component {ref!r}")
                refs_ok = False
        if not refs_ok:
            continue
        if p == q:
            err(f"symmetry pair {p!r} pairs a component with itself")
            continue
        if by_id[p[0]].level != by_id[q[0]].level:
            err(f"symmetry pair {p!r} <-> {q!r} joins components of different levels")
            continue
        if by_id[p[0]].component(p[1]).betti != by_id[q[0]].component(q[1]).betti:
            err(f"symmetry pair {p!r} <-> {q!r} joins components with different indices")
        for ref in (p, q):
            if ref in used:
                err(f"component {ref!r} appears in more than one symmetry pair")
            used.add(ref)
    return report


def total_space(d: MorseDecomposition) -> list[BasisLabel]:
    """Coordinates of the direct sum of all component homologies.

    Ordered by level, then component, then degree, then local coordinate.
    """
    labels = []
    for si, s in enumerate(d.sets):
        for ci, comp in enumerate(s.components):
            for k, n in comp.betti.items():
                for local in range(n):
                    labels.append(BasisLabel(si, ci, k, local, s.id, comp.id))
    return labels


def interval_subspace(d: MorseDecomposition, interval: Interval) -> list[int]:
    """Positions in :func:`total_space` belonging to sets in ``interval``."""
    if not (0 <= interval.lo <= interval.hi < len(d.sets)):
        raise IndexError(f"interval {interval.lo}..{interval.hi} outside 0..{len(d.sets) - 1}")
    return [i for i, lab in enumerate(total_space(d)) if lab.set_index in interval]


def total_interval(d: MorseDecomposition) -> Interval:
    return Interval(0, len(d.sets) - 1)


def components(d: MorseDecomposition) -> Sequence[tuple[int, int]]:
    return [(si, ci) for si, s in enumerate(d.sets) for ci in range(len(s.components))]
