"""Sparse Laurent polynomials over the integers.

A polynomial is a map from integer exponents to nonzero integer coefficients;
Python integers make every operation exact at arbitrary precision.  The zero
polynomial is the empty map.  Constructors accept mappings or (exponent,
coefficient) pairs and accumulate duplicate exponents additively, which is
what the closed-form builders rely on when exponents collide.

Knot polynomials are defined only up to a unit +-t^k; ``normalize_knot_poly``
picks the representative with minimum degree zero and value +1 at t = 1.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import (
    DivisionByZero,
    NotAKnotPolynomial,
    NotDivisible,
    NotPalindromic,
    OddSpan,
)

CoeffsLike = Union[Mapping[int, int], Iterable[tuple[int, int]]]


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: CoeffsLike = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        data: dict[int, int] = {}
        for exp, coeff in items:
            if not isinstance(exp, int) or not isinstance(coeff, int):
                raise TypeError("exponents and coefficients must be integers")
            if coeff:
                total = data.get(exp, 0) + coeff
                if total:
                    data[exp] = total
                else:
                    del data[exp]
        self._coeffs = data

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls({exp: coeff})

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no degrees")
        return min(self._coeffs)

    @property
    def max_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no degrees")
        return max(self._coeffs)

    @property
    def span(self) -> int:
        return self.max_degree - self.min_degree

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def items(self) -> list[tuple[int, int]]:
        """Coefficients in ascending exponent order."""
        return sorted(self._coeffs.items())

    def evaluate(self, x) -> int | Fraction:
        """Exact value at an integer or Fraction point."""
        if not self._coeffs:
            return 0
        if x == 0:
            if self.min_degree < 0:
                raise ZeroDivisionError("negative exponents cannot be evaluated at 0")
            return self._coeffs.get(0, 0)
        total = Fraction(0)
        for exp, coeff in self._coeffs.items():
            total += coeff * Fraction(x) ** exp
        return int(total) if total.denominator == 1 else total

    def _coerce(self, other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        data = dict(self._coeffs)
        for exp, coeff in other._coeffs.items():
            total = data.get(exp, 0) + coeff
            if total:
                data[exp] = total
            else:
                data.pop(exp, None)
        out = LaurentPoly.zero()
        out._coeffs = data
        return out

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        out = LaurentPoly.zero()
        out._coeffs = {exp: -coeff for exp, coeff in self._coeffs.items()}
        return out

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        data: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                exp = e1 + e2
                total = data.get(exp, 0) + c1 * c2
                if total:
                    data[exp] = total
                else:
                    del data[exp]
        out = LaurentPoly.zero()
        out._coeffs = data
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"


#: The generator t, for building polynomials arithmetically.
t = LaurentPoly.monomial(1)


def exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact quotient p / q; raises NotDivisible on any nonzero remainder."""
    if q.is_zero:
        raise DivisionByZero("division by the zero polynomial")
    if p.is_zero:
        return LaurentPoly.zero()
    shift = p.min_degree - q.min_degree
    p_span = p.span
    q_span = q.span
    if p_span < q_span:
        raise NotDivisible("dividend span is smaller than divisor span")
    p_min = p.min_degree
    q_min = q.min_degree
    rem = [p.coefficient(p_min + i) for i in range(p_span + 1)]
    div = [q.coefficient(q_min + i) for i in range(q_span + 1)]
    lead = div[-1]
    quot = [0] * (p_span - q_span + 1)
    for i in range(p_span - q_span, -1, -1):
        coeff, leftover = divmod(rem[i + q_span], lead)
        if leftover:
            raise NotDivisible("leading coefficient does not divide evenly")
        if coeff:
            quot[i] = coeff
            for j, d in enumerate(div):
                rem[i + j] -= coeff * d
    if any(rem):
        raise NotDivisible("remainder is nonzero")
    return LaurentPoly({i + shift: c for i, c in enumerate(quot) if c})


def normalize_knot_poly(p: LaurentPoly) -> LaurentPoly:
    """Unique representative of +-t^k * p with min degree 0 and value +1 at t=1."""
    if p.is_zero:
        raise NotAKnotPolynomial("the zero polynomial cannot be normalized")
    value = sum(c for _, c in p.items())
    if value not in (1, -1):
        raise NotAKnotPolynomial(f"value at t = 1 is {value}, expected +1 or -1")
    low = p.min_degree
    return LaurentPoly({exp - low: value * coeff for exp, coeff in p.items()})


def is_palindromic(p: LaurentPoly) -> bool:
    """True if coefficient(min + k) == coefficient(max - k) for all k."""
    if p.is_zero:
        raise ValueError("the zero polynomial has no coefficient symmetry")
    low, high = p.min_degree, p.max_degree
    return all(
        p.coefficient(low + k) == p.coefficient(high - k)
        for k in range(p.span // 2 + 1)
    )


def eval_unit_circle(p: LaurentPoly, theta: float) -> complex:
    """Value of p at e^(i*theta)."""
    return sum(
        coeff * cmath.exp(1j * (exp * theta)) for exp, coeff in p.items()
    ) + 0j


def centered_cosine_form(p: LaurentPoly) -> list[int]:
    """Cosine coefficients of a palindromic polynomial of even span.

    Returns (c_0, ..., c_g) such that t^-center * p evaluated at e^(i*theta)
    is the real number c_0 + sum_k 2*c_k*cos(k*theta); center = min + span/2.
    """
    if p.is_zero or not is_palindromic(p):
        raise NotPalindromic("cosine form requires a nonzero palindromic polynomial")
    if p.span % 2:
        raise OddSpan(f"span {p.span} is odd; no integer center exists")
    center = p.min_degree + p.span // 2
    return [p.coefficient(center + k) for k in range(p.span // 2 + 1)]


def centered_cosine_value(coeffs: list[int], theta: float) -> float:
    """Evaluate a centered cosine form at theta."""
    return coeffs[0] + 2.0 * sum(
        c * math.cos(k * theta) for k, c in enumerate(coeffs[1:], start=1)
    )


def format_poly(p: LaurentPoly) -> str:
    """Human-readable text, ascending powers: ``1 - t + t^2``."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for exp, coeff in p.items():
        mag = abs(coeff)
        if exp == 0:
            body = str(mag)
        else:
            power = "t" if exp == 1 else f"t^{exp}"
            body = power if mag == 1 else f"{mag}{power}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts)


def to_json_dict(p: LaurentPoly) -> dict:
    """JSON shape: {"min_degree": k, "coeffs": [decimal strings, ascending]}."""
    if p.is_zero:
        return {"min_degree": 0, "coeffs": []}
    low = p.min_degree
    return {
        "min_degree": low,
        "coeffs": [str(p.coefficient(low + i)) for i in range(p.span + 1)],
    }


def from_json_dict(data: Mapping) -> LaurentPoly:
    low = int(data["min_degree"])
    return LaurentPoly(
        {low + i: int(text) for i, text in enumerate(data["coeffs"])}
    )
