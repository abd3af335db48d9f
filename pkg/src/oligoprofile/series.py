"""Rational generating series with denominators of the form prod (1 - z^d).

Polynomials are dense integer coefficient tuples, constant term first.
All arithmetic is exact; expansion of 1/(1 - z^d) is a strided prefix
sum, so coefficient extraction is linear in the requested length.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .errors import NotDivisible, ZeroAtOne


def poly_trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_add(a, b) -> tuple[int, ...]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return poly_trim(out)


def poly_mul(a, b) -> tuple[int, ...]:
    a, b = poly_trim(a), poly_trim(b)
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return tuple(out)


def poly_divexact(num, den) -> tuple[int, ...]:
    """Quotient num/den when the division is exact; ValueError otherwise."""
    num = list(poly_trim(num))
    den = poly_trim(den)
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num:
        return ()
    dd = len(den) - 1
    if len(num) - 1 < dd:
        raise ValueError("not divisible")
    lead = den[-1]
    quotient = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        if c % lead:
            raise ValueError("not divisible")
        f = c // lead
        quotient[i - dd] = f
        for j, d in enumerate(den):
            num[i - dd + j] -= f * d
    if any(num):
        raise ValueError("not divisible")
    return poly_trim(quotient)


def one_minus_z_power(d: int) -> tuple[int, ...]:
    """The polynomial 1 - z^d."""
    if d < 1:
        raise ValueError("exponent must be positive")
    return (1,) + (0,) * (d - 1) + (-1,)


def expand_denominator(degrees) -> tuple[int, ...]:
    """The product of (1 - z^d) over the given degree multiset."""
    out = (1,)
    for d in degrees:
        out = poly_mul(out, one_minus_z_power(d))
    return out


@dataclass(frozen=True)
class ProfileSeries:
    """N(z) / prod_i (1 - z^{d_i}) with integer numerator coefficients."""

    numerator: tuple[int, ...]
    denominator_degrees: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "numerator", poly_trim(self.numerator))
        degrees = tuple(sorted(self.denominator_degrees))
        for d in degrees:
            if d < 1:
                raise ValueError("denominator degrees must be positive")
        object.__setattr__(self, "denominator_degrees", degrees)

    def is_polynomial(self) -> bool:
        return not self.denominator_degrees


def series_from_polynomial(coeffs) -> ProfileSeries:
    return ProfileSeries(tuple(coeffs), ())


def series_one_over(degrees) -> ProfileSeries:
    return ProfileSeries((1,), tuple(degrees))


def coefficients(series: ProfileSeries, up_to: int) -> list[int]:
    """Exact power series coefficients for z^0 .. z^up_to."""
    if up_to < 0:
        raise ValueError("up_to must be non-negative")
    out = [0] * (up_to + 1)
    for i, c in enumerate(series.numerator[: up_to + 1]):
        out[i] = c
    for d in series.denominator_degrees:
        for i in range(d, up_to + 1):
            out[i] += out[i - d]
    return out


def multiply(a: ProfileSeries, b: ProfileSeries) -> ProfileSeries:
    return ProfileSeries(
        poly_mul(a.numerator, b.numerator),
        a.denominator_degrees + b.denominator_degrees,
    )


def normalize_to_denominator(series: ProfileSeries, degrees) -> ProfileSeries:
    """Rewrite the series over exactly the given denominator degrees.

    The common factors are cancelled first; whatever source factors are
    left must divide the adjusted numerator exactly, otherwise the
    requested denominator does not represent the same series and
    NotDivisible is raised.
    """
    target = tuple(sorted(degrees))
    src = Counter(series.denominator_degrees)
    tgt = Counter(target)
    common = src & tgt
    num = poly_mul(series.numerator, expand_denominator((tgt - common).elements()))
    remaining = expand_denominator((src - common).elements())
    try:
        num = poly_divexact(num, remaining)
    except ValueError:
        raise NotDivisible(
            f"series does not rewrite over denominator degrees {list(target)}"
        ) from None
    return ProfileSeries(num, target)


def asymptotics(series: ProfileSeries) -> tuple[int, Fraction]:
    """Growth exponent k and leading constant a with coefficient(n) ~ a * n^k.

    The factor (1 - z) is divided out of the numerator until the value
    at 1 is non-zero; the pole order p at z = 1 is the number of
    denominator factors minus the number of divisions, k = p - 1 and
    a = N(1) / (k! * prod d_i) over every denominator degree.  For a
    series with no pole (a polynomial, profile eventually zero) k is -1
    and a is the value of the reduced series at 1.
    """
    num = series.numerator
    if not num:
        raise ValueError("the zero series has no growth behaviour")
    shifted = 0
    while True:
        try:
            num = poly_divexact(num, (1, -1))
        except ValueError:
            break
        shifted += 1
    value = sum(num)
    if value == 0:
        raise ZeroAtOne("numerator still vanishes at 1 after reduction")
    pole_order = len(series.denominator_degrees) - shifted
    scale = prod(series.denominator_degrees)
    if pole_order < 0:
        return -1, Fraction(0)
    if pole_order == 0:
        return -1, Fraction(value, scale)
    k = pole_order - 1
    return k, Fraction(value, factorial(k) * scale)


def to_json_dict(series: ProfileSeries) -> dict:
    return {
        "numerator": list(series.numerator),
        "denominator_degrees": list(series.denominator_degrees),
    }


def from_json_dict(data: dict) -> ProfileSeries:
    return ProfileSeries(
        tuple(data["numerator"]), tuple(data["denominator_degrees"])
    )
