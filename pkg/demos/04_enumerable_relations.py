"""Nondeterminism over the reals: enumerable relations.

Characteristic functions fail over the reals: computable ones are
continuous, so even the identity relation y = x has no computable
(total or partial) characteristic function.  What does work is
enumeration: a relation is a family of machines indexed by "possible
worlds", relating x to every value the family can compute at x.

The running example relates x to both x and x + 1.
"""

from fractions import Fraction as F

from realcomp import (
    Add, Const, Query, Var,
    apply,
    cluster_values,
    enumerate_witnesses,
    from_function,
    from_rational,
    identity,
    make_tail_rel,
    member_semi,
    project,
    shift_machine,
)

# index 0 computes x, every other index computes x + 1
rel = make_tail_rel([Var(0)], Add(Var(0), Const(1)))

# --- enumerate the witnesses at x = 1/2 ---------------------------------------

accuracy = F(1, 2**10)
listing = enumerate_witnesses(rel, from_rational(F(1, 2)), accuracy,
                              max_index=6, fuel=1000)
print("witnesses of 1/2 across the first seven worlds:")
for entry in listing.entries:
    print(f"  world {entry.index}: {entry.value} within {entry.accuracy}")

clusters = cluster_values([e.value for e in listing.entries], 2 * accuracy)
centers = [c[0] for c in clusters]
print(f"distinct outcomes (clustered at 2x accuracy): {len(clusters)}, near {centers}")

# --- membership is one-sided ----------------------------------------------------

print("\nis 3/2 related to 1/2?")
found = member_semi(rel, from_rational(F(1, 2)), from_rational(F(3, 2)),
                    accuracy, max_index=10, fuel=1000)
print(f"  yes, witnessed in world {found}")

print("is 1 related to 1/2?")
found = member_semi(rel, from_rational(F(1, 2)), from_rational(F(1)),
                    accuracy, max_index=10, fuel=1000)
print(f"  search exhausted ({found}); that is silence, not a refutation --")
print("  equality of reals cannot be decided from approximations")

# --- functions are exactly the functional relations ------------------------------

lifted = from_function(shift_machine(5))
projected = project(lifted, i0=12)  # any world projects back to the function
sample_query = Query.of((F(2, 3), F(1, 32)))
assert apply(projected, sample_query) == apply(shift_machine(5), sample_query)
print("\nlifting x+5 to a relation and projecting world 12 recovers x+5 exactly")

head = project(rel, 0)
assert apply(head, sample_query) == apply(identity(), sample_query)
print("projecting world 0 of the {x, x+1} relation recovers the identity")
