"""Ready-made Morse decompositions for two model problems.

``delay_scenario`` models a delay equation whose attractor contains a stable
periodic orbit, a periodic orbit with two unstable directions, and an
equilibrium with four.  ``chafee_infante`` models a symmetric bistable
gradient-like system after ``n`` pitchfork bifurcations: pairs of equilibria
``e_i^+, e_i^-`` of Morse index ``i`` for ``i = 0..n`` and a central
equilibrium ``e_N`` of Morse index ``n + 1``.
"""

from __future__ import annotations

from .conley_index import attractor_index, hyperbolic_equilibrium_index, periodic_orbit_index
from .morse import Interval, IntervalConstraint, MorseComponent, MorseDecomposition, MorseSet

__all__ = ["delay_scenario", "chafee_infante", "SCENARIOS", "generate"]

Scenario = tuple[MorseDecomposition, list[IntervalConstraint]]


def _attractor_constraint(d: MorseDecomposition) -> list[IntervalConstraint]:
    return [IntervalConstraint(Interval(0, len(d.sets) - 1), attractor_index())]


def delay_scenario() -> Scenario:
    sets = [
        MorseSet("M0", 0, [MorseComponent("u0", periodic_orbit_index(0))]),
        MorseSet("M1", 1, [MorseComponent("u1", periodic_orbit_index(2))]),
        MorseSet("M2", 2, [MorseComponent("zero", hyperbolic_equilibrium_index(4))]),
    ]
    d = MorseDecomposition(sets)
    return d, _attractor_constraint(d)


def chafee_infante(n: int, with_symmetry: bool = True) -> Scenario:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"number of bifurcations must be a non-negative integer, got {n!r}")
    sets = [
        MorseSet(
            f"M{i}",
            i,
            [
                MorseComponent("+", hyperbolic_equilibrium_index(i)),
                MorseComponent("-", hyperbolic_equilibrium_index(i)),
            ],
        )
        for i in range(n + 1)
    ]
    sets.append(MorseSet("MN", n + 1, [MorseComponent("eN", hyperbolic_equilibrium_index(n + 1))]))
    pairs = [((f"M{i}", "+"), (f"M{i}", "-")) for i in range(n + 1)] if with_symmetry else []
    d = MorseDecomposition(sets, pairs)
    return d, _attractor_constraint(d)


SCENARIOS = {
    "delay": lambda **_: delay_scenario(),
    "chafee-infante": lambda n=1, with_symmetry=True, **_: chafee_infante(n, with_symmetry),
}


def generate(name: str, **params) -> Scenario:
    try:
        factory = SCENARIOS[name]
    except KeyError:
        raise ValueError(f"unknown scenario {name!r}; choose from {sorted(SCENARIOS)}") from None
    return factory(**params)
