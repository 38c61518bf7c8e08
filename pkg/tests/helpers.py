"""Shared helpers: seeded rational sampling and the soundness harness."""

from __future__ import annotations

import random
from fractions import Fraction

from realcomp import (
    Add,
    Const,
    Max,
    Min,
    Mul,
    Neg,
    Query,
    Sub,
    Var,
    apply,
    eval_expr,
    is_finite,
)

# Machines with exact rational reference functions, as (name, expression)
# pairs; compiled machines must satisfy the soundness inequality against
# exact evaluation of the expression.
SOUNDNESS_CATALOG = [
    ("identity", Var(0)),
    ("neg", Neg(Var(0))),
    ("shift", Add(Var(0), Const(1))),
    ("scale", Mul(Const(2), Var(0))),
    ("const", Const(Fraction(7, 3))),
    ("add", Add(Var(0), Var(1))),
    ("sub", Sub(Var(0), Var(1))),
    ("mul", Mul(Var(0), Var(1))),
    ("min", Min(Var(0), Var(1))),
    ("max", Max(Var(0), Var(1))),
    ("band-product", Mul(Sub(Add(Var(0), Const(1)), Var(1)), Sub(Var(1), Var(0)))),
    ("nested", Min(Var(0), Max(Var(1), Mul(Var(0), Var(1))))),
]


def rand_fraction(rng: random.Random, num_bound: int = 12, den_bound: int = 12) -> Fraction:
    return Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))


def rand_positive(rng: random.Random, num_bound: int = 4, den_bound: int = 12) -> Fraction:
    return Fraction(rng.randint(1, num_bound), rng.randint(1, den_bound))


def rand_query(rng: random.Random, arity: int) -> Query:
    return Query(
        tuple((rand_fraction(rng), rand_positive(rng)) for _ in range(arity))
    )


def point_in_box(rng: random.Random, query: Query) -> list:
    """A rational point consistent with the query, component by component."""
    return [
        q + tol * Fraction(rng.randint(-16, 16), 16)
        for q, tol in query.components
    ]


def in_declared_domain(machine, xs) -> bool:
    """Whether a point respects the machine's declared (exclusive) bounds."""
    if machine.domain is None:
        return True
    for x, (lo, hi) in zip(xs, machine.domain):
        if lo is not None and not x > lo:
            return False
        if hi is not None and not x < hi:
            return False
    return True


def soundness_violations(machine, expr, rng: random.Random, samples: int) -> int:
    """Count query/point pairs violating the soundness inequality.

    The reference value is the exact rational evaluation of `expr`; only
    points inside the machine's declared domain count.  The check is
    exact, so the expected count is always zero.
    """
    violations = 0
    for _ in range(samples):
        query = rand_query(rng, machine.arity)
        answer = apply(machine, query)
        if not is_finite(answer.accuracy):
            continue
        xs = point_in_box(rng, query)
        if not in_declared_domain(machine, xs):
            continue
        if abs(eval_expr(expr, xs) - answer.value) > answer.accuracy:
            violations += 1
    return violations
