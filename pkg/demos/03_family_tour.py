"""Tour of the twisted torus knot family.

Each member (n, m) comes from the (3, 3m+2) torus knot by adding n - 2 full
twists along two adjacent strands.  The demo instantiates the knot group,
checks the longitude's homology class, and confirms that the Fox-calculus
pipeline reproduces the family's closed-form Alexander polynomial.
"""

from knotalex import (
    FamilyParams,
    alexander_polynomial,
    closed_form_alexander,
    format_poly,
    genus,
    knot_group_presentation,
    preferred_longitude,
    slope_bound,
    torus_knot_alexander,
)

print("== the smallest member (1, 1) ==")
params = FamilyParams(1, 1)
presentation = knot_group_presentation(params)
print(presentation.to_text(), end="")
longitude = preferred_longitude(params)
print(f"longitude: {longitude}")
h = longitude.exponent_sum("a") + 2 * longitude.exponent_sum("w")
print(f"homology class of the longitude (should be 0): {h}")

print()
print("== pipeline vs closed form ==")
for n, m in [(1, 1), (2, 1), (3, 2), (4, 3)]:
    p = knot_group_presentation(FamilyParams(n, m))
    pipeline = alexander_polynomial(p)
    closed = closed_form_alexander(n, m)
    marker = "ok" if pipeline == closed else "MISMATCH"
    print(f"({n}, {m}): {format_poly(closed)}   [{marker}]")

print()
print("== landmarks inside the family ==")
print(f"(1, 1) is the (3, 4) torus knot: "
      f"{closed_form_alexander(1, 1) == torus_knot_alexander(3, 4)}")
print(f"(2, m) is the (3, 3m+2) torus knot, e.g. m = 3: "
      f"{closed_form_alexander(2, 3) == torus_knot_alexander(3, 11)}")

print()
print("== genus and polynomial span ==")
print(f"{'(n, m)':8} {'genus':>5} {'span':>5} {'2*genus':>8} {'threshold':>10}")
for n, m in [(1, 1), (2, 1), (2, 2), (5, 3)]:
    params = FamilyParams(n, m)
    span = closed_form_alexander(n, m).span
    print(f"({n}, {m})   {genus(params):>5} {span:>5} {2 * genus(params):>8}"
          f" {slope_bound(params):>10}")
