"""Cycle index of a finite permutation group and its two substitutions.

x_d <- 1 + z^d counts orbits of subsets; x_d <- 1/(1 - z^d) gives the
Hilbert series of the invariant ring, i.e. the profile of the group
extended by independent infinite symmetric groups inside each point.
Everything is exact rational arithmetic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntegerResult
from .perm import FinitePermGroup, _element_images
from .series import ProfileSeries, expand_denominator, poly_divexact, poly_mul

CycleType = tuple[tuple[int, int], ...]  # sorted (length, multiplicity) pairs


@dataclass(frozen=True)
class CycleIndex:
    """Average of cycle-type monomials over a group.

    terms maps each cycle type to its rational weight; the weights are
    positive and sum to one, and every type covers the full degree.
    """

    degree: int
    terms: dict[CycleType, Fraction]

    def __post_init__(self):
        total = Fraction(0)
        for ctype, coeff in self.terms.items():
            if coeff <= 0:
                raise ValueError(f"coefficient for {ctype} must be positive")
            if sum(d * c for d, c in ctype) != self.degree:
                raise ValueError(f"cycle type {ctype} does not cover degree {self.degree}")
            total += coeff
        if total != 1:
            raise ValueError(f"coefficients sum to {total}, expected 1")


def _cycle_type(images: tuple[int, ...]) -> CycleType:
    counts: dict[int, int] = {}
    seen = [False] * len(images)
    for start in range(len(images)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            length += 1
            x = images[x]
        counts[length] = counts.get(length, 0) + 1
    return tuple(sorted(counts.items()))


def cycle_index(group: FinitePermGroup) -> CycleIndex:
    """Enumerate the group and average the cycle-type monomials."""
    elements = _element_images(group)
    counts = Counter(_cycle_type(im) for im in elements)
    order = len(elements)
    return CycleIndex(
        group.degree, {t: Fraction(c, order) for t, c in counts.items()}
    )


def _one_plus_z_power(d: int) -> tuple[int, ...]:
    return (1,) + (0,) * (d - 1) + (1,)


def subset_count_polynomial(index: CycleIndex) -> tuple[int, ...]:
    """Generating polynomial of subset-orbit counts, via x_d <- 1 + z^d."""
    acc = [Fraction(0)] * (index.degree + 1)
    for ctype, coeff in index.terms.items():
        poly = (1,)
        for d, c in ctype:
            for _ in range(c):
                poly = poly_mul(poly, _one_plus_z_power(d))
        for i, v in enumerate(poly):
            acc[i] += coeff * v
    out = []
    for v in acc:
        if v.denominator != 1:
            raise NonIntegerResult(f"subset count came out non-integral: {v}")
        out.append(int(v))
    return tuple(out)


def molien_series(group: FinitePermGroup) -> ProfileSeries:
    """Hilbert series of the invariant ring, over denominator degrees 1..k.

    Each cycle type contributes D / prod_d (1 - z^d)^{c_d} with
    D = prod_{j=1..k} (1 - z^j); the division is exact because a type of
    total size k has at most floor(k/m) parts divisible by any m.
    """
    index = cycle_index(group)
    k = group.degree
    canonical = expand_denominator(range(1, k + 1))
    acc: list[Fraction] = [Fraction(0)] * len(canonical)
    for ctype, coeff in index.terms.items():
        factor_degrees = [d for d, c in ctype for _ in range(c)]
        try:
            term = poly_divexact(canonical, expand_denominator(factor_degrees))
        except ValueError:
            raise NonIntegerResult(
                f"canonical denominator not divisible for cycle type {ctype}"
            ) from None
        for i, v in enumerate(term):
            acc[i] += coeff * v
    numerator = []
    for v in acc:
        if v.denominator != 1:
            raise NonIntegerResult(f"Molien numerator came out non-integral: {v}")
        numerator.append(int(v))
    return ProfileSeries(tuple(numerator), tuple(range(1, k + 1)))
