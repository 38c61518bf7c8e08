"""Computable real functions as interval-query machines.

A machine never sees a real number.  It sees a rational approximation q
and a tolerance t, and it must answer with a rational r and a certified
error bound: whatever real x hides inside [q - t, q + t], the true
value f(x) lies within the bound of r.  Asking with smaller and smaller
tolerances pins f(x) down to any accuracy you like.
"""

from fractions import Fraction as F

from realcomp import (
    Add, Const, Mul, Sub, Var,
    ModulusMachine,
    Query,
    apply,
    expr_to_machine,
    from_rational,
    modulus_to_machine,
    mul_machine,
    refine,
)

# --- a first machine: f(x, y) = (x + 1 - y) * (y - x) -----------------------

expr = Mul(Sub(Add(Var(0), Const(1)), Var(1)), Sub(Var(1), Var(0)))
machine = expr_to_machine(expr, 2)

print("one query, by hand:")
query = Query.of((F(1, 2), F(1, 16)), (F(3, 4), F(1, 16)))
answer = apply(machine, query)
print(f"  f around (1/2, 3/4) -> {answer.value} within {answer.accuracy}")

print("\nthe same point, refined to 2^-20:")
outcome = refine(machine, [from_rational(F(1, 2)), from_rational(F(3, 4))],
                 F(1, 2**20), fuel=100)
print(f"  r={outcome.value} eps={outcome.accuracy} after {outcome.steps} queries")

# Exact check: at (1/2, 3/4) the product is (3/4)(1/4) = 3/16.
assert abs(outcome.value - F(3, 16)) <= outcome.accuracy

# --- error bounds are exact interval arithmetic ------------------------------

print("\nmultiplication carries the exact corner bound:")
ans = apply(mul_machine(), Query.of((F(2), F(1, 2)), (F(3), F(1, 2))))
print(f"  [3/2, 5/2] * [5/2, 7/2] -> {ans.value} within {ans.accuracy}")
# 11/4 is exactly the worst corner: |5/2 * 7/2 - 6| = 11/4.

# --- machines with an a priori modulus ---------------------------------------

# Some presentations state up front how accurate the input must be for a
# desired output accuracy.  The adapter searches a dyadic grid for the
# finest output accuracy a given query already supports.
doubling = ModulusMachine(
    modulus=lambda eps: eps / 2,   # need the input twice as tight
    approx=lambda q, eps: 2 * q,
    name="doubling",
)
adapted = modulus_to_machine(doubling, grid_floor_exp=40)
ans = apply(adapted, Query.of((F(1), F(1, 4))))
print("\na modulus-style doubling machine, adapted to interval queries:")
print(f"  query (1, 1/4) -> ({ans.value}, {ans.accuracy})")
