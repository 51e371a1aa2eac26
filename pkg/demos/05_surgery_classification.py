"""Surgery slope classification.

For family member (n, m), rational surgery with slope p/q at or above
2n + 6m - 3 (= 2*genus - 1) produces a 3-manifold whose fundamental group
is not left-orderable.  Below the threshold this test concludes nothing --
slopes near zero are known to give left-orderable groups, so the
inconclusive region is genuinely mixed, and each NoConclusion verdict
carries a reminder flag.
"""

from knotalex import FamilyParams, SurgerySlope, classify_surgery, slope_bound

print("== thresholds ==")
for n, m in [(1, 1), (2, 1), (3, 1), (2, 2), (5, 5)]:
    print(f"(n, m) = ({n}, {m}): slope threshold {slope_bound(FamilyParams(n, m))}")

print()
print("== verdicts for (3, 1), threshold 9 ==")
params = FamilyParams(3, 1)
for slope in [SurgerySlope(13), SurgerySlope(9), SurgerySlope(35, 4),
              SurgerySlope(17, 2), SurgerySlope(4), SurgerySlope(-7)]:
    result = classify_surgery(params, slope)
    note = "  <- near-zero caveat recorded" if result.near_zero_note else ""
    print(f"  slope {str(slope):>6}: {result.verdict.value}{note}")

print()
print("== the boundary is included ==")
result = classify_surgery(FamilyParams(1, 1), SurgerySlope(5))
print(f"slope 5 on (1, 1) with threshold 5: {result.verdict.value}")
result = classify_surgery(FamilyParams(1, 1), SurgerySlope(4))
print(f"slope 4 on (1, 1): {result.verdict.value} "
      f"(near-zero caveat recorded: {result.near_zero_note})")

print()
print("== slopes are normalized ==")
print(f"SurgerySlope(6, 4)   -> {SurgerySlope(6, 4)}")
print(f"SurgerySlope(3, -2)  -> {SurgerySlope(3, -2)}")
