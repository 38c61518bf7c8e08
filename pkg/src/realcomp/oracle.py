"""Presentations of real numbers and the expression-to-machine compiler.

A real oracle presents a real number x as a pure mapping from a
requested tolerance to a rational within that tolerance of x.  Machines
applied to oracles yield new oracles, so computed reals compose.

Real expressions are a small AST (constants, argument variables, exact
arithmetic, min/max, and the strict-positivity test) that compiles to
interval-query machines.  Subtrees with literal rational operands fold
into exact shift/scale primitives, so e.g. "x + 1" compiles to the
machine answering (q + 1, tol) rather than a looser composition
through a constant machine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .machine import (
    IntervalMachine,
    NoConvergence,
    NoConvergenceError,
    add_machine,
    chi_pos,
    compose,
    const_machine,
    max_machine,
    min_machine,
    mul_machine,
    neg_machine,
    proj,
    refine,
    scale_machine,
    shift_machine,
    sub_machine,
)
from .rational import as_fraction

__all__ = [
    "RealOracle",
    "from_rational",
    "apply_machine",
    "RealExpr",
    "Const",
    "Var",
    "Add",
    "Sub",
    "Mul",
    "Neg",
    "Min",
    "Max",
    "ChiPos",
    "expr_arity",
    "expr_to_machine",
    "Undefined",
    "eval_expr",
]


@dataclass(frozen=True)
class RealOracle:
    """A real number as a tolerance -> rational approximation mapping.

    Contract (checked by tests for the catalog constructions): there is a
    single real x with |x - ask(tol)| <= tol for every positive tol.
    """

    ask: Callable[[Fraction], Fraction]
    name: str = "oracle"

    def __call__(self, tolerance) -> Fraction:
        tolerance = as_fraction(tolerance)
        if tolerance <= 0:
            raise ValueError(f"tolerance must be positive, got {tolerance}")
        return self.ask(tolerance)

    def __repr__(self):
        return f"<oracle {self.name}>"


def from_rational(value) -> RealOracle:
    """The exact presentation of a rational: every request gets the value."""
    value = as_fraction(value)
    return RealOracle(lambda tol: value, name=str(value))


def apply_machine(
    machine: IntervalMachine,
    args: Sequence[RealOracle],
    fuel: int,
) -> RealOracle:
    """The oracle computing machine(args), refined on demand.

    The resulting oracle is partial: a request raises NoConvergenceError
    when refinement does not meet it within the fuel budget.  Answers are
    memoized per tolerance; the memo is invisible (the mapping is pure).
    """
    if len(args) != machine.arity:
        raise ValueError(
            f"machine {machine.name!r} takes {machine.arity} argument(s), "
            f"got {len(args)}"
        )
    args = tuple(args)
    memo: dict = {}

    def ask(tolerance: Fraction) -> Fraction:
        if tolerance in memo:
            return memo[tolerance]
        outcome = refine(machine, args, tolerance, fuel)
        if isinstance(outcome, NoConvergence):
            raise NoConvergenceError(outcome.steps_taken, outcome.all_infinite)
        memo[tolerance] = outcome.value
        return outcome.value

    return RealOracle(ask, name=f"{machine.name}(...)")


# ---------------------------------------------------------------------------
# Expressions


class RealExpr:
    __slots__ = ()


@dataclass(frozen=True)
class Const(RealExpr):
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", as_fraction(self.value))


@dataclass(frozen=True)
class Var(RealExpr):
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"variable index must be >= 0, got {self.index}")


@dataclass(frozen=True)
class Add(RealExpr):
    left: RealExpr
    right: RealExpr


@dataclass(frozen=True)
class Sub(RealExpr):
    left: RealExpr
    right: RealExpr


@dataclass(frozen=True)
class Mul(RealExpr):
    left: RealExpr
    right: RealExpr


@dataclass(frozen=True)
class Min(RealExpr):
    left: RealExpr
    right: RealExpr


@dataclass(frozen=True)
class Max(RealExpr):
    left: RealExpr
    right: RealExpr


@dataclass(frozen=True)
class Neg(RealExpr):
    operand: RealExpr


@dataclass(frozen=True)
class ChiPos(RealExpr):
    operand: RealExpr


_BINARY = {Add: add_machine, Sub: sub_machine, Mul: mul_machine,
           Min: min_machine, Max: max_machine}


def expr_arity(expr: RealExpr) -> int:
    """Smallest arity the expression is well-formed at (at least 1)."""
    if isinstance(expr, Var):
        return expr.index + 1
    if isinstance(expr, Const):
        return 1
    if isinstance(expr, (Neg, ChiPos)):
        return expr_arity(expr.operand)
    return max(expr_arity(expr.left), expr_arity(expr.right))


class Undefined(Exception):
    """Exact evaluation hit a point where the expression has no value."""


def eval_expr(expr: RealExpr, xs: Sequence[Fraction]) -> Fraction:
    """Exact rational evaluation; raises Undefined on chi at a value <= 0."""
    if isinstance(expr, Const):
        return expr.value
    if isinstance(expr, Var):
        return as_fraction(xs[expr.index])
    if isinstance(expr, Neg):
        return -eval_expr(expr.operand, xs)
    if isinstance(expr, ChiPos):
        if eval_expr(expr.operand, xs) > 0:
            return Fraction(1)
        raise Undefined("chi-pos argument is not strictly positive")
    a = eval_expr(expr.left, xs)
    b = eval_expr(expr.right, xs)
    if isinstance(expr, Add):
        return a + b
    if isinstance(expr, Sub):
        return a - b
    if isinstance(expr, Mul):
        return a * b
    if isinstance(expr, Min):
        return min(a, b)
    if isinstance(expr, Max):
        return max(a, b)
    raise TypeError(f"not a real expression: {expr!r}")


def expr_to_machine(expr: RealExpr, arity: int) -> IntervalMachine:
    """Compile an expression to a sound machine of the given arity."""
    if arity < 1:
        raise ValueError(f"arity must be >= 1, got {arity}")
    needed = expr_arity(expr)
    if needed > arity:
        raise ValueError(
            f"unbound variable: expression uses {needed} argument(s), "
            f"declared arity is {arity}"
        )
    return _compile(expr, arity)


def _compile(expr: RealExpr, arity: int) -> IntervalMachine:
    if isinstance(expr, Const):
        return const_machine(expr.value, arity)
    if isinstance(expr, Var):
        return proj(expr.index, arity)
    if isinstance(expr, Neg):
        if isinstance(expr.operand, Const):
            return const_machine(-expr.operand.value, arity)
        return compose(neg_machine(), [_compile(expr.operand, arity)])
    if isinstance(expr, ChiPos):
        return compose(chi_pos(), [_compile(expr.operand, arity)])
    if type(expr) in _BINARY:
        left, right = expr.left, expr.right
        lc, rc = isinstance(left, Const), isinstance(right, Const)
        if lc and rc:
            return const_machine(eval_expr(expr, ()), arity)
        # fold a literal operand of +,-,* into an exact affine primitive
        if isinstance(expr, Add) and (lc or rc):
            c, other = (left.value, right) if lc else (right.value, left)
            return compose(shift_machine(c), [_compile(other, arity)])
        if isinstance(expr, Sub) and rc:
            return compose(shift_machine(-right.value), [_compile(left, arity)])
        if isinstance(expr, Sub) and lc:
            negated = compose(neg_machine(), [_compile(right, arity)])
            return compose(shift_machine(left.value), [negated])
        if isinstance(expr, Mul) and (lc or rc):
            c, other = (left.value, right) if lc else (right.value, left)
            if c == 0:
                return const_machine(0, arity)
            return compose(scale_machine(c), [_compile(other, arity)])
        outer = _BINARY[type(expr)]()
        return compose(outer, [_compile(left, arity), _compile(right, arity)])
    raise TypeError(f"not a real expression: {expr!r}")
