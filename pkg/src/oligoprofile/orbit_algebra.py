"""Orbit algebras of finite permutation groups.

Basis elements are orbits of subsets; the product of two orbits counts
the ways members combine disjointly into a representative of each
higher orbit. Includes the change of basis down to a subgroup and the
averaging (Reynolds) projection back onto a group's invariants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import GroupMismatch, NotNormal, NotSubgroup
from .perm import (
    FinitePermGroup,
    Permutation,
    _element_images,
    is_normal,
    is_subgroup,
    SubsetOrbit,
)

Subset = tuple[int, ...]


@lru_cache(maxsize=256)
def _orbit_labels(group: FinitePermGroup, n: int) -> dict[Subset, Subset]:
    """Map each n-subset to the lex-least member of its orbit.

    Subsets are visited in lex order and unlabelled ones start a fresh
    orbit walk, so every starting subset is its orbit's minimum.
    """
    gens = [g.images for g in group.generators]
    labels: dict[Subset, Subset] = {}
    for start in combinations(range(group.degree), n):
        if start in labels:
            continue
        frontier = [start]
        labels[start] = start
        while frontier:
            subset = frontier.pop()
            for g in gens:
                moved = tuple(sorted(g[x] for x in subset))
                if moved not in labels:
                    labels[moved] = start
                    frontier.append(moved)
    return labels


@dataclass(frozen=True)
class OrbitAlgebraElement:
    """Finite rational combination of subset orbits of one group.

    terms holds (orbit representative, coefficient) pairs, sorted by
    grade then representative, zero coefficients dropped.
    """

    group: FinitePermGroup
    terms: tuple[tuple[Subset, Fraction], ...]

    def __post_init__(self):
        for rep, coeff in self.terms:
            if _orbit_labels(self.group, len(rep)).get(rep) != rep:
                raise ValueError(f"{rep} is not a canonical orbit representative")
            if coeff == 0:
                raise ValueError("zero coefficients must be dropped")
        keys = [(len(r), r) for r, _ in self.terms]
        if keys != sorted(set(keys)):
            raise ValueError("terms must be sorted and unique")

    def coefficient(self, rep: Subset) -> Fraction:
        for r, c in self.terms:
            if r == rep:
                return c
        return Fraction(0)

    def grades(self) -> set[int]:
        return {len(r) for r, _ in self.terms}

    def is_zero(self) -> bool:
        return not self.terms


def element(group: FinitePermGroup, mapping) -> OrbitAlgebraElement:
    """Build an element from {subset: coefficient}; subsets are canonicalized."""
    acc: dict[Subset, Fraction] = {}
    for subset, coeff in dict(mapping).items():
        subset = tuple(sorted(subset))
        rep = _orbit_labels(group, len(subset))[subset]
        acc[rep] = acc.get(rep, Fraction(0)) + Fraction(coeff)
    terms = tuple(
        (r, c) for r, c in sorted(acc.items(), key=lambda t: (len(t[0]), t[0])) if c
    )
    return OrbitAlgebraElement(group, terms)


def zero(group: FinitePermGroup) -> OrbitAlgebraElement:
    return OrbitAlgebraElement(group, ())


def unit(group: FinitePermGroup) -> OrbitAlgebraElement:
    """The empty-set orbit, unit of the product."""
    return element(group, {(): 1})


def orbit_element(group: FinitePermGroup, subset) -> OrbitAlgebraElement:
    return element(group, {tuple(subset): 1})


def add(a: OrbitAlgebraElement, b: OrbitAlgebraElement) -> OrbitAlgebraElement:
    if a.group != b.group:
        raise GroupMismatch("elements live over different groups")
    acc = dict(a.terms)
    for rep, coeff in b.terms:
        acc[rep] = acc.get(rep, Fraction(0)) + coeff
    return element(a.group, acc)


def scale(coeff, a: OrbitAlgebraElement) -> OrbitAlgebraElement:
    coeff = Fraction(coeff)
    return element(a.group, {rep: coeff * c for rep, c in a.terms})


def structure_constant(
    group: FinitePermGroup, rep1: Subset, rep2: Subset, rep3: Subset
) -> int:
    """Ordered pairs (S1, S2) from the two orbits with disjoint union rep3."""
    if len(rep3) != len(rep1) + len(rep2):
        return 0
    labels1 = _orbit_labels(group, len(rep1))
    labels2 = _orbit_labels(group, len(rep2))
    count = 0
    for part in combinations(rep3, len(rep1)):
        rest = tuple(x for x in rep3 if x not in part)
        if labels1[part] == rep1 and labels2[rest] == rep2:
            count += 1
    return count


def product(a: OrbitAlgebraElement, b: OrbitAlgebraElement) -> OrbitAlgebraElement:
    """Bilinear extension of the disjoint-union product on orbits."""
    if a.group != b.group:
        raise GroupMismatch("elements live over different groups")
    group = a.group
    acc: dict[Subset, Fraction] = {}
    for rep1, c1 in a.terms:
        for rep2, c2 in b.terms:
            total = len(rep1) + len(rep2)
            if total > group.degree:
                continue
            for rep3 in sorted(set(_orbit_labels(group, total).values())):
                k = structure_constant(group, rep1, rep2, rep3)
                if k:
                    acc[rep3] = acc.get(rep3, Fraction(0)) + c1 * c2 * k
    return element(group, acc)


def _expand_orbit(group: FinitePermGroup, subset: Subset) -> set[Subset]:
    gens = [g.images for g in group.generators]
    seen = {tuple(sorted(subset))}
    frontier = list(seen)
    while frontier:
        s = frontier.pop()
        for g in gens:
            moved = tuple(sorted(g[x] for x in s))
            if moved not in seen:
                seen.add(moved)
                frontier.append(moved)
    return seen


def _require_subgroup(sub: FinitePermGroup, big: FinitePermGroup):
    if sub.degree != big.degree or not is_subgroup(sub, big):
        raise NotSubgroup(f"{sub} is not a subgroup of {big}")


def express_in_subgroup(
    g: FinitePermGroup, k: FinitePermGroup, orbit
) -> OrbitAlgebraElement:
    """A g-orbit as the coefficient-1 sum of the k-orbits it splits into."""
    _require_subgroup(k, g)
    subset = orbit.representative if isinstance(orbit, SubsetOrbit) else tuple(orbit)
    labels = _orbit_labels(k, len(subset))
    reps = {labels[s] for s in _expand_orbit(g, subset)}
    return element(k, {rep: 1 for rep in reps})


def express_element(
    g: FinitePermGroup, k: FinitePermGroup, x: OrbitAlgebraElement
) -> OrbitAlgebraElement:
    """Linear extension of express_in_subgroup to whole elements."""
    if x.group != g:
        raise GroupMismatch("element is not over the bigger group")
    out = zero(k)
    for rep, coeff in x.terms:
        out = add(out, scale(coeff, express_in_subgroup(g, k, rep)))
    return out


@lru_cache(maxsize=256)
def coset_representatives(
    g: FinitePermGroup, k: FinitePermGroup, scheme: str = "lex-min"
) -> tuple[Permutation, ...]:
    """One representative per coset of k in g, picked by the scheme."""
    _require_subgroup(k, g)
    if scheme not in ("lex-min", "lex-max"):
        raise ValueError(f"unknown representative scheme {scheme!r}")
    k_set = set(_element_images(k))
    cosets: dict[Subset, tuple[int, ...]] = {}
    for u in _element_images(g):
        key = min(tuple(u[i] for i in kk) for kk in k_set)
        best = cosets.get(key)
        if best is None or (u < best if scheme == "lex-min" else u > best):
            cosets[key] = u
    return tuple(Permutation(images) for images in sorted(cosets.values()))


def translate(sigma: Permutation, x: OrbitAlgebraElement) -> OrbitAlgebraElement:
    """Apply a permutation to every subset of x, relabelling to orbit reps."""
    acc: dict[Subset, Fraction] = {}
    for rep, coeff in x.terms:
        moved = tuple(sorted(sigma.images[i] for i in rep))
        acc[moved] = acc.get(moved, Fraction(0)) + coeff
    return element(x.group, acc)


def reynolds(
    g: FinitePermGroup,
    k: FinitePermGroup,
    x: OrbitAlgebraElement,
    scheme: str = "lex-min",
) -> OrbitAlgebraElement:
    """Average of the coset-representative translates of x.

    Projects A(k) onto the embedded copy of A(g); the result does not
    depend on the representative scheme, which exists so tests can say
    so.
    """
    if x.group != k:
        raise GroupMismatch("element is not over the subgroup")
    _require_subgroup(k, g)
    if not is_normal(k, g):
        raise NotNormal(f"{k} is not normal in {g}")
    reps = coset_representatives(g, k, scheme)
    out = zero(k)
    for sigma in reps:
        out = add(out, translate(sigma, x))
    return scale(Fraction(1, len(reps)), out)
