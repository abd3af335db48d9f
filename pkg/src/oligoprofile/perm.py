"""Finite permutation groups on points 0..degree-1.

Permutations are stored as dense image tuples.  Products read left to
right: (p * q)(x) = q(p(x)).  Group elements are produced by breadth
first closure of the generators, guarded by an order cap; orbit
computations never require the closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import CapExceeded, ExpressionParseError


class Permutation:
    """A bijection of {0, ..., n-1} held as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images!r}")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> "Permutation":
        """Build a permutation from disjoint cycles given as point sequences."""
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            cycle = list(cycle)
            for point in cycle:
                if not 0 <= point < degree:
                    raise ValueError(f"point {point} out of range for degree {degree}")
                if point in seen:
                    raise ValueError(f"point {point} repeated across cycles")
                seen.add(point)
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # apply self first, then other
        if len(self.images) != len(other.images):
            raise ValueError("degree mismatch")
        o = other.images
        return Permutation(o[i] for i in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == x for x, i in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its minimum, sorted by minimum."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cycle = []
            x = start
            while not seen[x]:
                seen[x] = True
                cycle.append(x)
                x = self.images[x]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple[tuple[int, int], ...]:
        """Sorted (length, multiplicity) pairs covering every point, fixed points included."""
        counts: dict[int, int] = {}
        seen = [False] * len(self.images)
        for start in range(len(self.images)):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = True
                length += 1
                x = self.images[x]
            counts[length] = counts.get(length, 0) + 1
        return tuple(sorted(counts.items()))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)!r})"

    def __str__(self):
        return format_cycles(self)


def format_cycles(p: Permutation) -> str:
    """Canonical cycle notation; the identity prints as ()."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles)


def format_images(p: Permutation) -> str:
    return "[" + ",".join(str(x) for x in p.images) + "]"


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse image notation [1,2,0] or cycle notation (0 1 2)(3 4)."""
    s = text.strip()
    if not s:
        raise ValueError("empty permutation text")
    if s.startswith("["):
        if not s.endswith("]"):
            raise ValueError(f"unterminated image list: {text!r}")
        inner = s[1:-1].strip()
        parts = [p.strip() for p in inner.split(",")] if inner else []
        try:
            images = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"bad image list: {text!r}") from None
        if len(images) != degree:
            raise ValueError(f"expected {degree} images, got {len(images)}: {text!r}")
        return Permutation(images)
    if s.startswith("("):
        cycles = []
        pos = 0
        while pos < len(s):
            if s[pos].isspace():
                pos += 1
                continue
            if s[pos] != "(":
                raise ValueError(f"unexpected {s[pos]!r} in cycle notation: {text!r}")
            end = s.find(")", pos)
            if end < 0:
                raise ValueError(f"unterminated cycle: {text!r}")
            body = s[pos + 1 : end].replace(",", " ").split()
            try:
                cycles.append([int(x) for x in body])
            except ValueError:
                raise ValueError(f"bad cycle contents: {text!r}") from None
            pos = end + 1
        return Permutation.from_cycles(degree, [c for c in cycles if c])
    raise ValueError(f"expected [images] or (cycles), got {text!r}")


@dataclass(frozen=True)
class FinitePermGroup:
    """A finite permutation group given by generators on 0..degree-1.

    The generator sequence is never empty; a group without explicit
    generators gets the identity.  order_cap bounds any element
    enumeration performed on behalf of this group.
    """

    degree: int
    generators: tuple[Permutation, ...]
    order_cap: int = 1_000_000

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be at least 1")
        gens = tuple(self.generators)
        if not gens:
            gens = (Permutation.identity(self.degree),)
        for g in gens:
            if g.degree != self.degree:
                raise ValueError(f"generator degree {g.degree} != group degree {self.degree}")
        object.__setattr__(self, "generators", gens)

    def __repr__(self):
        gens = ", ".join(format_cycles(g) for g in self.generators)
        return f"FinitePermGroup(degree={self.degree}, <{gens}>)"


def identity_group(degree: int) -> FinitePermGroup:
    return FinitePermGroup(degree, (Permutation.identity(degree),))


def cyclic_group(degree: int) -> FinitePermGroup:
    if degree == 1:
        return identity_group(1)
    rot = Permutation((i + 1) % degree for i in range(degree))
    return FinitePermGroup(degree, (rot,))


def symmetric_group(degree: int) -> FinitePermGroup:
    if degree == 1:
        return identity_group(1)
    swap = Permutation.from_cycles(degree, [(0, 1)])
    if degree == 2:
        return FinitePermGroup(2, (swap,))
    rot = Permutation((i + 1) % degree for i in range(degree))
    return FinitePermGroup(degree, (rot, swap))


def direct_product(groups) -> FinitePermGroup:
    """Direct product acting on the disjoint union of the factors' points."""
    groups = list(groups)
    if not groups:
        raise ValueError("need at least one factor")
    degree = sum(g.degree for g in groups)
    gens = []
    offset = 0
    for g in groups:
        for p in g.generators:
            images = list(range(degree))
            for x, y in enumerate(p.images):
                images[offset + x] = offset + y
            gens.append(Permutation(images))
        offset += g.degree
    return FinitePermGroup(degree, tuple(gens))


@lru_cache(maxsize=64)
def _element_images(group: FinitePermGroup) -> tuple[tuple[int, ...], ...]:
    """All element image tuples, sorted lexicographically."""
    gens = [g.images for g in group.generators]
    ident = tuple(range(group.degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        fresh = []
        for p in frontier:
            for q in gens:
                r = tuple(q[i] for i in p)
                if r not in seen:
                    if len(seen) >= group.order_cap:
                        raise CapExceeded(
                            f"group closure exceeded order cap {group.order_cap}"
                        )
                    seen.add(r)
                    fresh.append(r)
        frontier = fresh
    return tuple(sorted(seen))


def enumerate_elements(group: FinitePermGroup) -> tuple[Permutation, ...]:
    """Every element of the group, in lexicographic order of image tuples."""
    return tuple(Permutation(im) for im in _element_images(group))


def group_order(group: FinitePermGroup) -> int:
    return len(_element_images(group))


def point_orbits(group: FinitePermGroup) -> tuple[tuple[int, ...], ...]:
    """Orbit partition of the points, blocks sorted by minimum element."""
    uf = UnionFind(group.degree)
    for g in group.generators:
        for x, y in enumerate(g.images):
            uf.union(x, y)
    return uf.partition()


@dataclass(frozen=True)
class SubsetOrbit:
    """One orbit of n-subsets: its lexicographically least member and its length."""

    representative: tuple[int, ...]
    length: int


def subset_orbits(group: FinitePermGroup, n: int) -> list[SubsetOrbit]:
    """Orbits of n-element subsets, sorted by representative.

    Subsets are addressed by their rank in the lexicographic listing of
    combinations, so the orbit partition is a union-find over integers
    and no group elements are ever enumerated.
    """
    if not 0 <= n <= group.degree:
        raise ValueError(f"subset size {n} out of range for degree {group.degree}")
    if n == 0:
        return [SubsetOrbit((), 1)]
    degree = group.degree
    total = comb(degree, n)
    uf = UnionFind(total)
    gens = [g.images for g in group.generators]
    for rank in range(total):
        subset = _comb_unrank(rank, degree, n)
        for g in gens:
            image = sorted(g[x] for x in subset)
            uf.union(rank, _comb_rank(image, degree))
    first: dict[int, int] = {}
    length: dict[int, int] = {}
    for rank in range(total):
        root = uf.find(rank)
        if root not in first:
            first[root] = rank
        length[root] = length.get(root, 0) + 1
    # lex rank order equals lex order on sorted tuples, so the first rank
    # seen in each class is the canonical representative
    return [
        SubsetOrbit(_comb_unrank(first[root], degree, n), length[root])
        for root in sorted(first, key=first.get)
    ]


def profile_values(group: FinitePermGroup) -> list[int]:
    """Number of subset orbits at every size 0..degree."""
    return [len(subset_orbits(group, n)) for n in range(group.degree + 1)]


def _comb_rank(subset, degree: int) -> int:
    k = len(subset)
    rank = 0
    prev = 0
    for i, x in enumerate(subset):
        for j in range(prev, x):
            rank += comb(degree - 1 - j, k - 1 - i)
        prev = x + 1
    return rank


def _comb_unrank(rank: int, degree: int, k: int) -> tuple[int, ...]:
    out = []
    x = 0
    for i in range(k):
        while True:
            c = comb(degree - 1 - x, k - 1 - i)
            if rank < c:
                out.append(x)
                x += 1
                break
            rank -= c
            x += 1
    return tuple(out)


class UnionFind:
    """Array union-find with path compression and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return True

    def partition(self) -> tuple[tuple[int, ...], ...]:
        classes: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            classes.setdefault(self.find(x), []).append(x)
        return tuple(tuple(sorted(c)) for c in sorted(classes.values(), key=min))


def is_subgroup(sub: FinitePermGroup, big: FinitePermGroup) -> bool:
    """True when every generator of sub lies in big (degrees must match)."""
    if sub.degree != big.degree:
        return False
    elements = set(_element_images(big))
    return all(g.images in elements for g in sub.generators)


def is_normal(sub: FinitePermGroup, big: FinitePermGroup) -> bool:
    """True when sub is a subgroup of big closed under conjugation by big."""
    if not is_subgroup(sub, big):
        return False
    sub_elements = set(_element_images(sub))
    for g in big.generators:
        for conj in (g, g.inverse()):
            c, cinv = conj.images, conj.inverse().images
            for s in sub.generators:
                moved = tuple(c[s.images[cinv[x]]] for x in range(big.degree))
                if moved not in sub_elements:
                    return False
    return True


def subgroup_index(big: FinitePermGroup, sub: FinitePermGroup) -> int:
    return group_order(big) // group_order(sub)


def normal_closure(big: FinitePermGroup, seeds) -> FinitePermGroup:
    """Smallest normal subgroup of big containing the seed permutations."""
    gen_images = {p.images for p in seeds if not p.is_identity()}
    conjugators = []
    for g in big.generators:
        conjugators.append(g)
        conjugators.append(g.inverse())
    conj_pairs = [(c.images, c.inverse().images) for c in conjugators]
    while True:
        probe = FinitePermGroup(
            big.degree,
            tuple(Permutation(im) for im in sorted(gen_images)),
            order_cap=big.order_cap,
        )
        elements = _element_images(probe)
        element_set = set(elements)
        grew = False
        for e in elements:
            for c, cinv in conj_pairs:
                moved = tuple(c[e[cinv[x]]] for x in range(big.degree))
                if moved not in element_set:
                    gen_images.add(moved)
                    grew = True
        if not grew:
            return probe


def parse_group_file(text: str) -> FinitePermGroup:
    """Parse the group file format: degree line, then one generator per line.

    Everything from '#' to end of line is a comment; blank lines are
    skipped.  Errors carry the byte offset of the offending line.
    """
    degree = None
    generators = []
    offset = 0
    for raw in text.splitlines(keepends=True):
        line = raw.split("#", 1)[0].strip()
        line_start = offset + (len(raw) - len(raw.lstrip()))
        offset += len(raw)
        if not line:
            continue
        if degree is None:
            try:
                degree = int(line)
            except ValueError:
                raise ExpressionParseError(line_start, ["integer degree"], line) from None
            if degree < 1:
                raise ExpressionParseError(line_start, ["degree >= 1"], line)
            continue
        try:
            generators.append(parse_permutation(line, degree))
        except ValueError as exc:
            raise ExpressionParseError(line_start, [f"generator ({exc})"], line) from None
    if degree is None:
        raise ExpressionParseError(len(text), ["integer degree"], None)
    return FinitePermGroup(degree, tuple(generators))
