"""Decidable, semi-decidable and enumerable relations over the naturals.

Over the naturals the three representations coincide, and the
equivalences are executable:

  decide  ->  semi-decide : compose with "1 maps to 1, undefined at 0"
  semi    ->  enumerate   : dovetail candidate values against step counts
  enumerate -> semi       : sequential search, using decidable equality

This demo runs the full round trip and watches the fuel accounting.
"""

from realcomp import (
    FAIL,
    dec_to_semi,
    enum_to_semi,
    equivalence_report,
    pair,
    relation_by_name,
    semi_to_enum,
    semi_to_enum_nonempty,
    unpair,
)

# --- the dovetailing numbering -----------------------------------------------

print("slot j encodes (candidate value, step budget) via Cantor pairing:")
for j in (0, 5, 8, 100):
    y, i = unpair(j)
    print(f"  slot {j:>3} -> candidate y={y}, steps i={i}")
assert pair(*unpair(100)) == 100

# --- divisibility, round-tripped ------------------------------------------------

divides = relation_by_name("divisibility")
semi = dec_to_semi(divides)
enum = semi_to_enum(semi)
search = enum_to_semi(enum)

print("\nenumerating the multiples of 3 (first FAIL-free slots):")
hits = []
j = 0
while len(hits) < 6:
    value = enum.enumerate(3, j)
    if value is not FAIL:
        hits.append((j, value))
    j += 1
print("  " + ", ".join(f"slot {j}->{v}" for j, v in hits))

print("\nsearching back through the enumeration:")
print(f"  3 | 12 ? {search.program.run((3, 12), fuel=10**4)} (halts with 1)")
print(f"  3 | 13 ? {search.program.run((3, 13), fuel=10**4)} (still running)")

# --- FAIL-free enumeration when rows are never empty ---------------------------

total = semi_to_enum_nonempty(semi, default=lambda x: 0)
values = {total.enumerate(3, j) for j in range(200)}
print(f"\nwith a default witness, no slot fails: first values {sorted(values)[:5]}")

# --- the equivalence at scale ----------------------------------------------------

print("\nround-trip agreement on every pair up to 40, budget 10^6:")
for name in ("divisibility", "equality", "geq"):
    report = equivalence_report(relation_by_name(name), bound=40, fuel=10**6)
    print(f"  {name:>13}: {report.summary()}  "
          f"(deepest positive needed fuel {report.max_fuel_on_positives})")
