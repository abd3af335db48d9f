"""Brute-force ground truth for expression profiles.

Every grammar expression has finite truncations whose orbits of
n-subsets match the infinite group's exactly once n independent block
copies exist. This module builds the smallest sound truncation and
counts subset orbits directly, with no generating-series machinery, so
series coefficients can be checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import TruncationTooLarge
from .oligo import (
    DirectProduct,
    FiniteAtom,
    FiniteBlocks,
    GroupExpr,
    InfiniteBlocks,
    ProfileOneAtom,
)
from .perm import (
    FinitePermGroup,
    Permutation,
    direct_product,
    subset_orbits,
    symmetric_group,
)

DEGREE_BUDGET = 40
SUBSET_BUDGET = 10**7


@dataclass(frozen=True)
class Truncation:
    """A finite stand-in whose profile agrees up to valid_up_to."""

    group: FinitePermGroup
    valid_up_to: int


def _expr_degree(e: GroupExpr, m: int) -> int:
    if isinstance(e, ProfileOneAtom):
        return m
    if isinstance(e, FiniteAtom):
        return e.group.degree
    if isinstance(e, FiniteBlocks):
        return e.base.degree * m
    if isinstance(e, InfiniteBlocks):
        return e.top.degree * m
    if isinstance(e, DirectProduct):
        return sum(_expr_degree(c, m) for c in e.children)
    raise TypeError(f"not a group expression: {e!r}")


def _free_blocks_of(base: FinitePermGroup, m: int) -> FinitePermGroup:
    """base acting on the first of m blocks, plus adjacent block swaps."""
    b = base.degree
    degree = b * m
    gens = [
        Permutation(list(g.images) + list(range(b, degree)))
        for g in base.generators
    ]
    for j in range(m - 1):
        img = list(range(degree))
        for x in range(b):
            lo, hi = j * b + x, (j + 1) * b + x
            img[lo], img[hi] = hi, lo
        gens.append(Permutation(img))
    return FinitePermGroup(degree, tuple(gens))


def _symmetric_copies_under(top: FinitePermGroup, m: int) -> FinitePermGroup:
    """A symmetric group of size m inside each copy, copies moved by top.

    Full symmetric generators go into every copy because top need not
    be transitive on its points.
    """
    k = top.degree
    degree = k * m
    gens = []
    for c in range(k):
        off = c * m
        if m >= 2:
            img = list(range(degree))
            img[off], img[off + 1] = off + 1, off
            gens.append(Permutation(img))
        if m >= 3:
            img = list(range(degree))
            for x in range(m):
                img[off + x] = off + (x + 1) % m
            gens.append(Permutation(img))
    for s in top.generators:
        gens.append(
            Permutation(s.images[x // m] * m + x % m for x in range(degree))
        )
    return FinitePermGroup(degree, tuple(gens))


def _truncated_group(e: GroupExpr, m: int) -> FinitePermGroup:
    if isinstance(e, ProfileOneAtom):
        return symmetric_group(m)
    if isinstance(e, FiniteAtom):
        return e.group
    if isinstance(e, FiniteBlocks):
        return _free_blocks_of(e.base, m)
    if isinstance(e, InfiniteBlocks):
        return _symmetric_copies_under(e.top, m)
    if isinstance(e, DirectProduct):
        return direct_product(_truncated_group(c, m) for c in e.children)
    raise TypeError(f"not a group expression: {e!r}")


def truncate(e: GroupExpr, n: int) -> Truncation:
    """Finite group whose n-subset orbits match the expression's.

    Uses n block copies per infinite component (one point minimum, so
    the count of the single empty subset also comes out right).
    """
    if n < 0:
        raise ValueError("subset size must be non-negative")
    m = max(n, 1)
    degree = _expr_degree(e, m)
    if degree > DEGREE_BUDGET:
        raise TruncationTooLarge(
            f"truncation needs {degree} points, budget is {DEGREE_BUDGET}"
        )
    if comb(degree, n) > SUBSET_BUDGET:
        raise TruncationTooLarge(
            f"{comb(degree, n)} subsets of size {n}, budget is {SUBSET_BUDGET}"
        )
    return Truncation(_truncated_group(e, m), n)


def profile(e: GroupExpr, n: int) -> int:
    """Number of orbits of n-subsets, counted on the truncation."""
    t = truncate(e, n)
    if n > t.group.degree:
        return 0
    return len(subset_orbits(t.group, n))
