# %% [markdown]
# # Discrete probabilistic algorithms over the reals
#
# A probabilistic algorithm is a finite branch family with exact
# rational masses summing to one.  Chance lives on the index set; the
# branches themselves are ordinary machines.  This cleanly represents
# algorithms that no pointwise "probability that the result equals y"
# function can, because such a function would have to be continuous and
# a continuous function cannot put positive mass on two separate
# outcomes.

# %%
from fractions import Fraction as F

from realcomp import (
    Add, Const, Max, Min, Mul, Sub, Var,
    ProbBranch,
    Sampler,
    cdf_algorithm,
    empirical_frequency,
    expr_to_machine,
    from_rational,
    make_prob,
    outcome_mass,
    sample,
)

quarter = F(1, 4)
x = Var(0)
x_plus_1 = Add(Var(0), Const(1))
two_x = Mul(Const(2), Var(0))


def build(exprs):
    return make_prob([ProbBranch(expr_to_machine(e, 1), quarter) for e in exprs])


# x and x+1, each carried by two of four equally likely worlds
half_half = build([x, x, x_plus_1, x_plus_1])
# x and 2x: the outcomes coincide at x = 0
x_or_2x = build([x, x, two_x, two_x])

# %% outcome masses are certified lower bounds
zero = from_rational(0)
accuracy = F(1, 2**6)

print("mass of outcome 0 for the x / x+1 algorithm at x=0:")
print(" ", outcome_mass(half_half, zero, zero, accuracy, fuel=1000))
print("mass of outcome 0 for the x / 2x algorithm at x=0 (branches agree):")
print(" ", outcome_mass(x_or_2x, zero, zero, accuracy, fuel=1000))
print("mass of outcome 5 (certifiably never produced):")
print(" ", outcome_mass(half_half, zero, from_rational(5), accuracy, fuel=1000))

# %% the certified mass is discontinuous in y -- and must be
near_zero = from_rational(F(1, 2**20))
fine = F(1, 2**22)
print("\nmoving the probe from 0 to 2^-20 drops the certified mass:")
print("  at 0:     ", outcome_mass(half_half, zero, zero, fine, 1000).lower)
print("  at 2^-20: ", outcome_mass(half_half, zero, near_zero, fine, 1000).lower)
print("no continuous pointwise mass function could do that.")

# %% sampling is reproducible
sampler = Sampler(seed=42)
draws = [sample(half_half, zero, sampler, accuracy, fuel=1000) for _ in range(8)]
print("\neight seeded draws (world, value):")
print(" ", draws)

counts = empirical_frequency(half_half, zero, 10**4, Sampler(42), accuracy, 1000)
print(f"branch frequencies over 10^4 draws: {counts} (masses are 1/4 each)")

# %% interval outcomes go through repartition functions
# P(result <= y | x) for the uniform outcome on [x, x+1]:
cdf = cdf_algorithm(expr_to_machine(
    Max(Const(0), Min(Const(1), Sub(Var(1), Var(0)))), 2
))
print("\nvalidated repartition machine for uniform-on-[x, x+1]:")
for y in (F(-1), F(1, 2), F(2)):
    value = cdf.evaluate(from_rational(0), from_rational(y), F(1, 256), fuel=1000)
    print(f"  P(result <= {y} | x=0) = {value}")
