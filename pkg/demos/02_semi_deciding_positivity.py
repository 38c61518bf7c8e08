"""Partial functions over the reals: the strict-positivity test.

"x > 0" cannot be decided from approximations: no finite-accuracy view
of 0 distinguishes it from a slightly negative number.  It can be
SEMI-decided: if x really is positive, some refinement step certifies
it; if x <= 0, the refinement loop runs forever.  Divergence is the
honest encoding of "undefined".
"""

from fractions import Fraction as F

from realcomp import (
    Converged,
    NoConvergence,
    chi_pos,
    domain_neighborhood,
    from_rational,
    refine,
)

chi = chi_pos()

print("refining the positivity test at a few points (fuel 1000):")
for x in (F(1), F(1, 1000), F(0), F(-1)):
    outcome = refine(chi, [from_rational(x)], F(1, 2**10), fuel=1000)
    if isinstance(outcome, Converged):
        print(f"  x={x}: certified positive after {outcome.steps} steps")
    else:
        print(f"  x={x}: no answer in {outcome.steps_taken} steps "
              f"(every answer infinite: {outcome.all_infinite})")

print("\nno fuel budget changes the story at 0: the machine answers")
print("'no information' at every tolerance, because every interval")
print("around 0 contains negative numbers.")

# --- domains of partial functions are open ------------------------------------

# Where a machine converges, it converges on a whole neighborhood: run
# the schedule with doubled tolerances and keep the first finite query
# box.  Every point of that box is covered by the same certificate.
print("\na certified neighborhood around x=1:")
box = domain_neighborhood(chi, [from_rational(1)], fuel=1000)[0]
print(f"  {box}")

print("spot-checking convergence across the neighborhood:")
for k in range(5):
    point = box.lo + box.width * F(k, 4)
    outcome = refine(chi, [from_rational(point)], F(1, 2**10), fuel=4000)
    assert isinstance(outcome, Converged)
    print(f"  x={point}: converges")

result = domain_neighborhood(chi, [from_rational(0)], fuel=1000)
assert isinstance(result, NoConvergence)
print("\nat x=0 there is no neighborhood to certify; the search reports")
print(f"no convergence after {result.steps_taken} doubled-tolerance steps.")
