"""The twisted torus knot family: presentations, longitudes, and surgeries.

The family member with parameters (n, m), both at least 1, is the twisted
torus knot obtained from the (3, 3m+2) torus knot by adding n - 2 full
twists along two adjacent strands.  Its knot group has a two-generator,
one-relator presentation on a meridian ``a`` and a second generator ``w``
whose homology class is twice the meridian's.  Landmarks: (1, 1) is the
(3, 4) torus knot, n = 2 gives the (3, 3m+2) torus knots, and m = 1 gives
the (-2, 3, 2n+1) pretzel knots.

``classify_surgery`` applies the non-left-orderability threshold for this
family: rational surgery with slope p/q >= 2n + 6m - 3 (which equals
2*genus - 1) yields a 3-manifold whose fundamental group is not
left-orderable.  Below the threshold nothing is concluded here; slopes
sufficiently close to zero are known to give left-orderable groups, and the
classification record carries a flag recalling that fact.
"""

from __future__ import annotations

import dataclasses
import enum
import math
from fractions import Fraction

from .words import Presentation, Word


@dataclasses.dataclass(frozen=True)
class FamilyParams:
    """Parameters of a family member; requires n >= 1 and m >= 1."""

    n: int
    m: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.m, int)):
            raise TypeError("n and m must be integers")
        if self.n < 1 or self.m < 1:
            raise ValueError("the family requires n >= 1 and m >= 1")


def knot_group_presentation(params: FamilyParams) -> Presentation:
    """Two-generator, one-relator knot group presentation with meridian ``a``.

    The single relator equates w^n (aw)^m a^-1 (aw)^-m with
    (wa)^-m a (wa)^m w^(n-1).
    """
    n, m = params.n, params.m
    a = Word.generator("a")
    w = Word.generator("w")
    aw = a * w
    wa = w * a
    r1 = w**n * aw**m * a.inverse() * aw**-m
    r2 = wa**-m * a * wa**m * w ** (n - 1)
    return Presentation(("a", "w"), (r1 * r2.inverse(),), meridian="a")


def preferred_longitude(params: FamilyParams) -> Word:
    """Null-homologous longitude commuting with the meridian.

    The meridian exponent -(4n + 9m - 2) exactly cancels the homology of the
    positive part; getting it wrong by any amount leaves a nonzero homology
    class, which the tests assert on the whole parameter grid.
    """
    n, m = params.n, params.m
    a = Word.generator("a")
    w = Word.generator("w")
    aw = a * w
    wa = w * a
    lead = Word.generator("a", -(4 * n + 9 * m - 2))
    return lead * wa**m * w**n * aw ** (m - 1) * a * w**n * aw**m


def genus(params: FamilyParams) -> int:
    """Seifert genus n + 3m - 1 (half the Alexander polynomial span)."""
    return params.n + 3 * params.m - 1


def slope_bound(params: FamilyParams) -> int:
    """Surgery slope threshold 2n + 6m - 3, equal to 2*genus - 1."""
    bound = 2 * params.n + 6 * params.m - 3
    assert bound == 2 * genus(params) - 1
    return bound


@dataclasses.dataclass(frozen=True)
class SurgerySlope:
    """A rational surgery slope p/q in lowest terms with q > 0.

    Any representation with q != 0 is accepted and normalized; q = 0 (the
    trivial filling) is rejected.
    """

    p: int
    q: int = 1

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise TypeError("p and q must be integers")
        if self.q == 0:
            raise ValueError("slope requires q != 0")
        p, q = self.p, self.q
        if q < 0:
            p, q = -p, -q
        common = math.gcd(p, q)
        if common > 1:
            p //= common
            q //= common
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


class Verdict(enum.Enum):
    NOT_LEFT_ORDERABLE = "NotLeftOrderable"
    NO_CONCLUSION = "NoConclusion"


@dataclasses.dataclass(frozen=True)
class SurgeryClassification:
    """Outcome of the slope test for one family member and one slope."""

    verdict: Verdict
    slope_bound: int
    #: Slopes close enough to 0 are known to give left-orderable groups;
    #: set whenever the verdict is NoConclusion, as a reminder that the
    #: inconclusive region is genuinely mixed.
    near_zero_note: bool


def classify_surgery(params: FamilyParams, slope: SurgerySlope) -> SurgeryClassification:
    """Exact rational comparison of the slope against 2n + 6m - 3 (inclusive)."""
    bound = slope_bound(params)
    if slope.value >= bound:
        return SurgeryClassification(Verdict.NOT_LEFT_ORDERABLE, bound, False)
    return SurgeryClassification(Verdict.NO_CONCLUSION, bound, True)
