"""Discrete probabilistic algorithms over the reals.

A probabilistic algorithm is a finite family of one-argument machines,
each carrying an exact rational mass, the masses summing to one.  This
decomposes nondeterminism (the branch family) from chance (the masses on
the index set), and it represents algorithms no pointwise mass function
can: a mass function continuous in its arguments cannot assign two
distinct outcomes positive mass, while a branch family does so freely.

Outcome masses are only semi-computable from finite-accuracy answers, so
mass queries return a certified lower bound plus the total mass whose
proximity to the target could not be settled at the requested accuracy.

Sampling is deterministic given a seed.  The generator is splitmix64:
state advances by the 64-bit golden-ratio increment 0x9E3779B97F4A7C15
and each output is the state mixed by two xor-shift-multiply rounds
(constants 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB, final shift 31).
Uniform draws are the exact rationals u = k / 2^64 with k the next
64-bit output, so inverse-CDF selection over rational cumulative masses
is exact.  For parallel streams, derive child seeds with spawn_seed(seed,
stream_index) rather than reusing the parent sampler.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .machine import (
    Converged,
    IntervalMachine,
    NoConvergence,
    NoConvergenceError,
    refine,
)
from .oracle import RealOracle
from .rational import as_fraction

__all__ = [
    "MassSumInvalid",
    "ValidationFailed",
    "ProbBranch",
    "DiscreteProbAlgorithm",
    "MassReport",
    "Sampler",
    "spawn_seed",
    "make_prob",
    "decompose",
    "select_index",
    "sample",
    "outcome_mass",
    "empirical_frequency",
    "RepartitionMachine",
    "cdf_algorithm",
]


class MassSumInvalid(ValueError):
    """Branch masses do not sum to exactly one."""


class ValidationFailed(ValueError):
    """A sampled validation found a counterexample."""


@dataclass(frozen=True)
class ProbBranch:
    """One possible behaviour and the exact mass placed on it."""

    machine: IntervalMachine
    mass: Fraction

    def __post_init__(self):
        object.__setattr__(self, "mass", as_fraction(self.mass))
        if not 0 <= self.mass <= 1:
            raise ValueError(f"branch mass must lie in [0, 1], got {self.mass}")
        if self.machine.arity != 1:
            raise ValueError("probabilistic branches take exactly one argument")


@dataclass(frozen=True)
class DiscreteProbAlgorithm:
    branches: tuple

    def __post_init__(self):
        branches = tuple(self.branches)
        if not branches:
            raise ValueError("an algorithm needs at least one branch")
        object.__setattr__(self, "branches", branches)
        total = sum(b.mass for b in branches)
        if total != 1:
            raise MassSumInvalid(f"masses sum to {total}, not 1")

    @property
    def masses(self) -> tuple:
        return tuple(b.mass for b in self.branches)


def make_prob(branches: Sequence[ProbBranch]) -> DiscreteProbAlgorithm:
    """Validate and build; raises MassSumInvalid unless masses sum to 1."""
    return DiscreteProbAlgorithm(tuple(branches))


def decompose(alg: DiscreteProbAlgorithm) -> tuple:
    """Split into the branch-machine family and the mass vector."""
    return tuple(b.machine for b in alg.branches), alg.masses


@dataclass(frozen=True)
class MassReport:
    """Certified lower bound on an outcome's mass, plus the unsettled mass."""

    lower: Fraction
    unknown: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lower", as_fraction(self.lower))
        object.__setattr__(self, "unknown", as_fraction(self.unknown))
        if self.lower < 0 or self.unknown < 0 or self.lower + self.unknown > 1:
            raise ValueError(f"inconsistent mass report: {self}")


class Sampler:
    """Deterministic seedable generator of exact uniform rationals in [0, 1)."""

    _GAMMA = 0x9E3779B97F4A7C15
    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self._state = seed & self._MASK
        self.seed = seed

    def next_u64(self) -> int:
        self._state = (self._state + self._GAMMA) & self._MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def next_unit(self) -> Fraction:
        """The next uniform rational k / 2^64 in [0, 1)."""
        return Fraction(self.next_u64(), 1 << 64)


def spawn_seed(seed: int, stream_index: int) -> int:
    """Child seed for an independent stream; documented and reproducible."""
    child = Sampler(seed ^ (stream_index * 0x9E3779B97F4A7C15))
    return child.next_u64()


def select_index(alg: DiscreteProbAlgorithm, u) -> int:
    """Inverse-CDF selection: the unique branch whose cumulative-mass
    half-open interval contains u.  Preimage lengths equal the masses."""
    u = as_fraction(u)
    if not 0 <= u < 1:
        raise ValueError(f"u must lie in [0, 1), got {u}")
    cumulative = Fraction(0)
    for i, branch in enumerate(alg.branches):
        cumulative += branch.mass
        if u < cumulative:
            return i
    raise AssertionError("unreachable: masses sum to 1")  # pragma: no cover


def sample(
    alg: DiscreteProbAlgorithm,
    x: RealOracle,
    sampler: Sampler,
    accuracy,
    fuel: int,
) -> tuple:
    """One draw: select a branch by inverse CDF, refine it at x.

    Returns (index, value); deterministic given the sampler state and
    inputs.  Raises NoConvergenceError if the chosen branch diverges.
    """
    index = select_index(alg, sampler.next_unit())
    outcome = refine(alg.branches[index].machine, [x], accuracy, fuel)
    if isinstance(outcome, NoConvergence):
        raise NoConvergenceError(outcome.steps_taken, outcome.all_infinite)
    return index, outcome.value


def outcome_mass(
    alg: DiscreteProbAlgorithm,
    x: RealOracle,
    y: RealOracle,
    accuracy,
    fuel: int,
) -> MassReport:
    """Mass of the outcome "within accuracy of y" at input x.

    Per branch, both the branch value and y are refined to a quarter of
    the accuracy; the branch's mass goes to `lower` when the true values
    are certifiably within the accuracy of each other, is dropped when
    they are certifiably farther apart, and goes to `unknown` otherwise
    (including divergent branches).  Exact equality of outcomes is not
    decidable, so this three-way accounting is the computable reading of
    "the probability that the result is y".
    """
    accuracy = as_fraction(accuracy)
    if accuracy <= 0:
        raise ValueError(f"accuracy must be positive, got {accuracy}")
    quarter = accuracy / 4
    y_approx = y(quarter)
    lower = Fraction(0)
    unknown = Fraction(0)
    for branch in alg.branches:
        outcome = refine(branch.machine, [x], quarter, fuel)
        if isinstance(outcome, NoConvergence):
            unknown += branch.mass
            continue
        gap = abs(outcome.value - y_approx)
        slack = outcome.accuracy + quarter
        if gap + slack <= accuracy:
            lower += branch.mass
        elif gap - slack > accuracy:
            pass  # certified to be a different outcome
        else:
            unknown += branch.mass
    return MassReport(lower, unknown)


def empirical_frequency(
    alg: DiscreteProbAlgorithm,
    x: RealOracle,
    n: int,
    sampler: Sampler,
    accuracy,
    fuel: int,
) -> list:
    """Per-branch selection counts over n draws; Monte-Carlo mass check.

    Each selected branch is refined once (the refinement is pure, so the
    cache is invisible) to surface divergence exactly as sample() would.
    """
    if n < 1:
        raise ValueError(f"need at least one sample, got {n}")
    counts = [0] * len(alg.branches)
    refined: dict = {}
    for _ in range(n):
        index = select_index(alg, sampler.next_unit())
        if index not in refined:
            outcome = refine(alg.branches[index].machine, [x], accuracy, fuel)
            if isinstance(outcome, NoConvergence):
                raise NoConvergenceError(outcome.steps_taken, outcome.all_infinite)
            refined[index] = outcome.value
        counts[index] += 1
    return counts


@dataclass(frozen=True)
class RepartitionMachine:
    """A two-argument machine validated to behave as P(result <= y | x)."""

    machine: IntervalMachine

    def evaluate(self, x: RealOracle, y: RealOracle, accuracy, fuel: int) -> Fraction:
        outcome = refine(self.machine, [x, y], accuracy, fuel)
        if isinstance(outcome, NoConvergence):
            raise NoConvergenceError(outcome.steps_taken, outcome.all_infinite)
        return outcome.value


# Deterministic probe grid used to validate repartition machines.
_CDF_PROBE_XS = [Fraction(v) for v in (-2, -1, 0, 1, 2)] + [Fraction(1, 2)]
_CDF_PROBE_YS = [Fraction(v) for v in (-3, -1, 0, 1, 3)] + [
    Fraction(1, 2),
    Fraction(5, 4),
]
_CDF_PROBE_ACCURACY = Fraction(1, 256)


def cdf_algorithm(
    machine: IntervalMachine, fuel: int = 200
) -> RepartitionMachine:
    """Wrap an arity-2 machine as a repartition (cumulative) function.

    Interval outcomes are described by the probability that the result at
    x is at most y; that function of (x, y) is what the machine must
    compute.  Validation refines the machine on a fixed rational probe
    grid and rejects it (ValidationFailed) if any refined value falls
    outside [0, 1] beyond its certified bound, if values ever decrease in
    y beyond the certified bounds, or if any probe fails to converge.
    """
    if machine.arity != 2:
        raise ValueError("a repartition machine takes (x, y)")
    from .oracle import from_rational  # local import to avoid cycles in callers

    acc = _CDF_PROBE_ACCURACY
    for x in _CDF_PROBE_XS:
        x_oracle = from_rational(x)
        previous: Optional[Converged] = None
        for y in sorted(_CDF_PROBE_YS):
            outcome = refine(machine, [x_oracle, from_rational(y)], acc, fuel)
            if isinstance(outcome, NoConvergence):
                raise ValidationFailed(
                    f"no convergence at probe x={x}, y={y}"
                )
            if outcome.value < -outcome.accuracy or outcome.value > 1 + outcome.accuracy:
                raise ValidationFailed(
                    f"value {outcome.value} at x={x}, y={y} leaves [0, 1]"
                )
            if previous is not None:
                slack = previous.accuracy + outcome.accuracy
                if outcome.value < previous.value - slack:
                    raise ValidationFailed(
                        f"decreasing in y at x={x}, y={y}: "
                        f"{previous.value} -> {outcome.value}"
                    )
            previous = outcome
    return RepartitionMachine(machine)
