"""Homological Conley indices as graded Betti vectors.

All constructors return *reduced* homology: a stable equilibrium has index
``{0: 1}`` and wedge sums compose by degreewise addition.
"""

from __future__ import annotations

from collections.abc import Mapping
from typing import Iterator

__all__ = [
    "BettiVector",
    "hyperbolic_equilibrium_index",
    "periodic_orbit_index",
    "attractor_index",
    "wedge",
]


class BettiVector(Mapping):
    """Finitely supported map ``degree -> dimension``; absent degrees are 0.

    Zero entries are dropped on construction, so two vectors compare equal
    exactly when they agree in every degree.
    """

    __slots__ = ("_dims",)

    def __init__(self, dims: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        for k, v in (dims or {}).items():
            k, v = int(k), int(v)
            if k < 0:
                raise ValueError(f"negative degree {k}")
            if v < 0:
                raise ValueError(f"negative dimension {v} in degree {k}")
            if v:
                clean[k] = v
        self._dims = dict(sorted(clean.items()))

    def __getitem__(self, k: int) -> int:
        return self._dims.get(k, 0)

    def __iter__(self) -> Iterator[int]:
        return iter(self._dims)

    def __len__(self) -> int:
        return len(self._dims)

    def __contains__(self, k: object) -> bool:
        return k in self._dims

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BettiVector):
            return self._dims == other._dims
        if isinstance(other, Mapping):
            return self == BettiVector(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._dims.items()))

    def __add__(self, other: BettiVector) -> BettiVector:
        return wedge(self, other)

    def __repr__(self) -> str:
        return f"BettiVector({self._dims})"

    @property
    def total_dim(self) -> int:
        return sum(self._dims.values())

    @property
    def top_degree(self) -> int:
        return max(self._dims, default=-1)

    def as_tuple(self, length: int | None = None) -> tuple[int, ...]:
        """Dense tuple ``(b_0, b_1, ...)``; length defaults to top degree + 1."""
        n = self.top_degree + 1 if length is None else length
        return tuple(self[k] for k in range(n))

    def to_json(self) -> dict[str, int]:
        return {str(k): v for k, v in self._dims.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> BettiVector:
        return cls({int(k): v for k, v in data.items()})

    @classmethod
    def from_sequence(cls, values) -> BettiVector:
        return cls(dict(enumerate(values)))


def hyperbolic_equilibrium_index(n: int) -> BettiVector:
    """Index of a hyperbolic equilibrium with ``n`` unstable directions: a pointed n-sphere."""
    if n < 0:
        raise ValueError("Morse index must be non-negative")
    return BettiVector({n: 1})


def periodic_orbit_index(n: int) -> BettiVector:
    """Index of a hyperbolic periodic orbit with ``n`` unstable directions.

    The index is a pinched (n+1)-torus, with one class in degrees n and n+1.
    """
    if n < 0:
        raise ValueError("unstable dimension must be non-negative")
    return BettiVector({n: 1, n + 1: 1})


def attractor_index() -> BettiVector:
    # an attractor's index is a pointed ball, the same as a stable point
    return BettiVector({0: 1})


def wedge(a: Mapping[int, int], b: Mapping[int, int]) -> BettiVector:
    """Reduced homology of a wedge sum: degreewise addition."""
    out = dict(BettiVector(a))
    for k, v in BettiVector(b).items():
        out[k] = out.get(k, 0) + v
    return BettiVector(out)
