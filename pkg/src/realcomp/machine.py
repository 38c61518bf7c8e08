"""Interval-query machines: computable (possibly partial) real functions.

A machine is a pure total mapping from rational interval queries to
answers.  A query supplies, per argument, a rational approximation
together with a strictly positive tolerance; the answer is a rational
approximation of the function value together with a certified error
bound, or ``INF`` when nothing can be certified from the query alone.

Soundness contract: whenever the answer to a query is ``(r, eps)`` with
``eps`` finite, every input vector consistent with the query (each
component within its tolerance of its approximation, and inside the
machine's declared domain if any) has its true function value within
``eps`` of ``r``.

Refinement drives a machine along the canonical tolerance schedule
``2^-n`` until the answer accuracy meets a target.  Divergence can only
be observed up to an explicit fuel budget; running out of fuel is
evidence of undefinedness, never proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from .rational import INF, Accuracy, Interval, as_fraction, is_finite

__all__ = [
    "Query",
    "Answer",
    "IntervalMachine",
    "apply",
    "Converged",
    "NoConvergence",
    "RefineOutcome",
    "NoConvergenceError",
    "refine",
    "domain_neighborhood",
    "identity",
    "proj",
    "const_machine",
    "shift_machine",
    "scale_machine",
    "neg_machine",
    "add_machine",
    "sub_machine",
    "mul_machine",
    "min_machine",
    "max_machine",
    "chi_pos",
    "lift_arith",
    "compose",
    "ModulusMachine",
    "modulus_to_machine",
]


@dataclass(frozen=True)
class Query:
    """Per-argument (approximation, tolerance) pairs; tolerances > 0."""

    components: tuple

    def __post_init__(self):
        comps = tuple(
            (as_fraction(q), as_fraction(tol)) for q, tol in self.components
        )
        if not comps:
            raise ValueError("a query needs at least one component")
        for _, tol in comps:
            if tol <= 0:
                raise ValueError(f"query tolerance must be positive, got {tol}")
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, *pairs) -> "Query":
        return cls(tuple(pairs))

    @property
    def arity(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class Answer:
    """Approximation of the result with a certified error bound (or INF)."""

    value: Fraction
    accuracy: Accuracy

    def __post_init__(self):
        object.__setattr__(self, "value", as_fraction(self.value))
        if self.accuracy is not INF:
            acc = as_fraction(self.accuracy)
            if acc <= 0:
                raise ValueError(f"finite accuracy must be positive, got {acc}")
            object.__setattr__(self, "accuracy", acc)


# Per-argument (lower, upper) bounds, exclusive, None meaning unbounded.
# Only consulted by soundness-sampling harnesses when drawing test points.
DomainBounds = tuple


@dataclass(frozen=True)
class IntervalMachine:
    """A pure total transition from queries of a fixed arity to answers."""

    arity: int
    transition: Callable[[Query], Answer]
    name: str = "machine"
    domain: Optional[DomainBounds] = None

    def __repr__(self):
        return f"<machine {self.name}/{self.arity}>"


def apply(machine: IntervalMachine, query: Query) -> Answer:
    """Answer a single query; the arity must match."""
    if query.arity != machine.arity:
        raise ValueError(
            f"arity mismatch: machine {machine.name!r} takes {machine.arity} "
            f"argument(s), query has {query.arity}"
        )
    return machine.transition(query)


@dataclass(frozen=True)
class Converged:
    """Refinement met the target: |true value - value| <= accuracy <= target."""

    value: Fraction
    accuracy: Fraction
    steps: int  # queries issued; the schedule index of the hit is steps - 1


@dataclass(frozen=True)
class NoConvergence:
    """Fuel ran out.  all_infinite means no query ever got a finite bound."""

    steps_taken: int
    all_infinite: bool


RefineOutcome = Union[Converged, NoConvergence]


class NoConvergenceError(RuntimeError):
    """Raised where a refinement result is required but fuel ran out."""

    def __init__(self, steps_taken: int, all_infinite: bool):
        super().__init__(
            f"no convergence after {steps_taken} refinement steps"
            + (" (every answer was infinite)" if all_infinite else "")
        )
        self.steps_taken = steps_taken
        self.all_infinite = all_infinite


Oracle = Callable[[Fraction], Fraction]


def _check_refine_args(machine, oracles, fuel):
    if len(oracles) != machine.arity:
        raise ValueError(
            f"machine {machine.name!r} takes {machine.arity} argument(s), "
            f"got {len(oracles)} oracle(s)"
        )
    if fuel < 1:
        raise ValueError(f"fuel must be >= 1, got {fuel}")


def refine(
    machine: IntervalMachine,
    oracles: Sequence[Oracle],
    target,
    fuel: int,
) -> RefineOutcome:
    """Query with tolerances 2^0, 2^-1, ... until a finite bound <= target.

    Each step n asks every argument oracle for an approximation at
    tolerance 2^-n and feeds the machine the resulting query.  Returns
    Converged at the first step whose answer has a finite accuracy at or
    below the target, NoConvergence once fuel is spent.
    """
    target = as_fraction(target)
    if target <= 0:
        raise ValueError(f"target accuracy must be positive, got {target}")
    _check_refine_args(machine, oracles, fuel)
    all_infinite = True
    for n in range(fuel):
        tol = Fraction(1, 1 << n)
        approxes = [oracle(tol) for oracle in oracles]
        answer = apply(machine, Query(tuple((q, tol) for q in approxes)))
        if is_finite(answer.accuracy):
            all_infinite = False
            if answer.accuracy <= target:
                return Converged(answer.value, answer.accuracy, n + 1)
    return NoConvergence(fuel, all_infinite)


def domain_neighborhood(
    machine: IntervalMachine,
    oracles: Sequence[Oracle],
    fuel: int,
) -> Union[list, NoConvergence]:
    """Certified per-argument neighborhoods on which the machine converges.

    Runs the refinement schedule with doubled tolerances: step n asks the
    oracles at 2^-n but queries the machine at tolerance 2^-(n-1).  At the
    first finite answer the query boxes themselves are neighborhoods of
    the true inputs lying inside the machine's domain of definition, and
    they are returned as one closed interval per argument.
    """
    _check_refine_args(machine, oracles, fuel)
    for n in range(fuel):
        tol = Fraction(1, 1 << n)
        approxes = [oracle(tol) for oracle in oracles]
        answer = apply(machine, Query(tuple((q, 2 * tol) for q in approxes)))
        if is_finite(answer.accuracy):
            return [Interval(q - 2 * tol, q + 2 * tol) for q in approxes]
    # falling through means every doubled-tolerance answer was infinite
    return NoConvergence(fuel, True)


# ---------------------------------------------------------------------------
# Machine catalog


def proj(index: int, arity: int) -> IntervalMachine:
    """Projection onto argument `index`: answers its component unchanged."""
    if not 0 <= index < arity:
        raise ValueError(f"projection index {index} out of range for arity {arity}")

    def transition(query: Query) -> Answer:
        q, tol = query.components[index]
        return Answer(q, tol)

    return IntervalMachine(arity, transition, name=f"proj{index}")


def identity() -> IntervalMachine:
    """The identity on one argument."""
    return proj(0, 1)


def const_machine(value, arity: int = 1) -> IntervalMachine:
    """Constant machine; answers the constant at the finest query tolerance.

    The bound cannot be zero (accuracies are strictly positive), so the
    smallest tolerance in the query stands in for it; it still shrinks to
    zero under refinement.
    """
    value = as_fraction(value)

    def transition(query: Query) -> Answer:
        return Answer(value, min(tol for _, tol in query.components))

    return IntervalMachine(arity, transition, name=f"const({value})")


def shift_machine(offset) -> IntervalMachine:
    """x + offset for an exact rational offset; tolerance passes through."""
    offset = as_fraction(offset)

    def transition(query: Query) -> Answer:
        q, tol = query.components[0]
        return Answer(q + offset, tol)

    return IntervalMachine(1, transition, name=f"shift({offset})")


def scale_machine(factor) -> IntervalMachine:
    """factor * x for an exact rational factor != 0."""
    factor = as_fraction(factor)
    if factor == 0:
        raise ValueError("scale factor must be nonzero; use const_machine(0)")

    def transition(query: Query) -> Answer:
        q, tol = query.components[0]
        return Answer(factor * q, abs(factor) * tol)

    return IntervalMachine(1, transition, name=f"scale({factor})")


def neg_machine() -> IntervalMachine:
    m = scale_machine(Fraction(-1))
    return IntervalMachine(1, m.transition, name="neg")


def add_machine() -> IntervalMachine:
    def transition(query: Query) -> Answer:
        (q1, t1), (q2, t2) = query.components
        return Answer(q1 + q2, t1 + t2)

    return IntervalMachine(2, transition, name="add")


def sub_machine() -> IntervalMachine:
    def transition(query: Query) -> Answer:
        (q1, t1), (q2, t2) = query.components
        return Answer(q1 - q2, t1 + t2)

    return IntervalMachine(2, transition, name="sub")


def mul_machine() -> IntervalMachine:
    """Product with the exact corner bound |q1|t2 + |q2|t1 + t1*t2."""

    def transition(query: Query) -> Answer:
        (q1, t1), (q2, t2) = query.components
        return Answer(q1 * q2, abs(q1) * t2 + abs(q2) * t1 + t1 * t2)

    return IntervalMachine(2, transition, name="mul")


def _endpointwise(pick, name: str) -> IntervalMachine:
    def transition(query: Query) -> Answer:
        (q1, t1), (q2, t2) = query.components
        lo = pick(q1 - t1, q2 - t2)
        hi = pick(q1 + t1, q2 + t2)
        return Answer((lo + hi) / 2, (hi - lo) / 2)

    return IntervalMachine(2, transition, name=name)


def min_machine() -> IntervalMachine:
    """Pointwise minimum; the exact range is the endpointwise minimum."""
    return _endpointwise(min, "min")


def max_machine() -> IntervalMachine:
    return _endpointwise(max, "max")


def chi_pos() -> IntervalMachine:
    """Semi-decision of strict positivity.

    Answers (1, tol) when the whole query interval lies in (0, oo),
    otherwise (1, INF): no finite query can refute positivity, so the
    machine never certifies anything on inputs <= 0 and refinement there
    runs forever.  This is the partial characteristic function of the
    strictly positive reals.
    """

    def transition(query: Query) -> Answer:
        q, tol = query.components[0]
        if q - tol > 0:
            return Answer(Fraction(1), tol)
        return Answer(Fraction(1), INF)

    return IntervalMachine(1, transition, name="chi_pos", domain=((Fraction(0), None),))


def lift_arith(op: str, value=None, arity: int = 1) -> IntervalMachine:
    """Catalog constructor by operation name.

    op is one of "add", "sub", "mul", "neg", "min", "max", "const";
    "const" also takes the constant value and the machine arity.
    """
    if op == "const":
        if value is None:
            raise ValueError("const requires a value")
        return const_machine(value, arity)
    table = {
        "add": add_machine,
        "sub": sub_machine,
        "mul": mul_machine,
        "neg": neg_machine,
        "min": min_machine,
        "max": max_machine,
    }
    if op not in table:
        raise ValueError(f"unknown operation {op!r}")
    return table[op]()


def compose(outer: IntervalMachine, inners: Sequence[IntervalMachine]) -> IntervalMachine:
    """Feed each inner machine's answer to the outer machine as a query.

    Inner answer (r, eps) becomes the outer query component (r, eps); a
    single infinite inner answer makes the composite answer (0, INF)
    immediately, since the outer machine would have nothing to certify.
    """
    inners = tuple(inners)
    if outer.arity != len(inners):
        raise ValueError(
            f"outer machine {outer.name!r} takes {outer.arity} argument(s), "
            f"got {len(inners)} inner machine(s)"
        )
    if not inners:
        raise ValueError("composition needs at least one inner machine")
    arity = inners[0].arity
    for m in inners:
        if m.arity != arity:
            raise ValueError("inner machines must share one arity")

    def transition(query: Query) -> Answer:
        fed = []
        for inner in inners:
            ans = inner.transition(query)
            if not is_finite(ans.accuracy):
                return Answer(Fraction(0), INF)
            fed.append((ans.value, ans.accuracy))
        return outer.transition(Query(tuple(fed)))

    name = f"{outer.name}({', '.join(m.name for m in inners)})"
    return IntervalMachine(arity, transition, name=name)


@dataclass(frozen=True)
class ModulusMachine:
    """A computable real function given with an a priori uniform modulus.

    `modulus` maps a desired output accuracy to the input accuracy that
    suffices for it; `approx` maps (rational approximation, desired
    accuracy) to a rational within that accuracy of the function value,
    provided the input approximation was within modulus(accuracy).
    """

    modulus: Callable[[Fraction], Fraction]
    approx: Callable[[Fraction, Fraction], Fraction]
    name: str = "modulus-machine"


def modulus_to_machine(mm: ModulusMachine, grid_floor_exp: int) -> IntervalMachine:
    """Adapt a modulus-style machine to the interval-query interface.

    The a priori modulus hides how fine an answer a given query supports,
    so the adapter searches the dyadic grid 2^0, 2^-1, ..,
    2^-grid_floor_exp for the smallest output accuracy whose required
    input accuracy the query tolerance already meets.  If no grid point
    qualifies the answer is infinite; a bounded grid keeps the adapter
    total.
    """
    if grid_floor_exp < 1:
        raise ValueError(f"grid_floor_exp must be >= 1, got {grid_floor_exp}")

    def transition(query: Query) -> Answer:
        q, tol = query.components[0]
        best = None
        for k in range(grid_floor_exp + 1):
            eps = Fraction(1, 1 << k)
            if mm.modulus(eps) >= tol and (best is None or eps < best):
                best = eps
        if best is None:
            return Answer(mm.approx(q, Fraction(1)), INF)
        return Answer(mm.approx(q, best), best)

    return IntervalMachine(1, transition, name=f"adapted({mm.name})")
