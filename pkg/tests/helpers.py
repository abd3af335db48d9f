"""Independent reference routines used to pin expected values in tests.

Everything here deliberately avoids the library's own algorithms:
closure is a multiply-all-pairs fixpoint, orbits are computed by
applying every group element to every subset.
"""

from __future__ import annotations

import random
from itertools import combinations

from oligoprofile.perm import FinitePermGroup, Permutation


def naive_closure(generators):
    """Fixpoint closure under pairwise products, as image tuples."""
    elems = {tuple(range(generators[0].degree)) if generators else ()}
    elems |= {g.images for g in generators}
    while True:
        fresh = set()
        for p in elems:
            for q in elems:
                r = tuple(q[i] for i in p)
                if r not in elems:
                    fresh.add(r)
        if not fresh:
            return sorted(elems)
        elems |= fresh


def brute_subset_orbits(group, n):
    """Orbits of n-subsets by applying every element to every subset.

    Returns a sorted list of (lex-min representative, orbit length).
    """
    elements = naive_closure(list(group.generators))
    orbits = {}
    for subset in combinations(range(group.degree), n):
        images = {tuple(sorted(e[x] for x in subset)) for e in elements}
        orbits[min(images)] = len(images)
    return sorted(orbits.items())


def brute_profile(group):
    return [len(brute_subset_orbits(group, n)) for n in range(group.degree + 1)]


def burnside_counts(group, n):
    """Average number of fixed n-subsets over all elements, if integral."""
    elements = naive_closure(list(group.generators))
    total = 0
    for e in elements:
        total += sum(1 for s in combinations(range(group.degree), n)
                     if tuple(sorted(e[x] for x in s)) == s)
    if total % len(elements):
        raise AssertionError("Burnside average must be an integer")
    return total // len(elements)


def fraction_rank(rows) -> int:
    """Rank of a matrix of Fractions by plain Gaussian elimination."""
    rows = [list(r) for r in rows]
    rank = 0
    for col in range(len(rows[0]) if rows else 0):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        rows[rank] = [v / lead for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def random_permutation(rng: random.Random, degree: int) -> Permutation:
    images = list(range(degree))
    rng.shuffle(images)
    return Permutation(images)


def _block_layout(block_size: int, copies: int):
    from oligoprofile.blocks import BlockSystem

    return BlockSystem(
        block_size * copies,
        tuple(tuple(range(j * block_size, (j + 1) * block_size)) for j in range(copies)),
    )


def _adjacent_block_swaps(block_size: int, copies: int):
    swaps = []
    for j in range(copies - 1):
        img = list(range(block_size * copies))
        for x in range(block_size):
            a, b = j * block_size + x, (j + 1) * block_size + x
            img[a], img[b] = b, a
        swaps.append(Permutation(img))
    return swaps


def wreath_with_symmetric_top(h: FinitePermGroup, copies: int, cap=2_000_000):
    """h acting independently on each of `copies` blocks, blocks freely permuted."""
    b = h.degree
    gens = [Permutation(list(g.images) + list(range(b, b * copies)))
            for g in h.generators]
    gens += _adjacent_block_swaps(b, copies)
    return (FinitePermGroup(b * copies, tuple(gens), order_cap=cap),
            _block_layout(b, copies))


def diagonal_with_symmetric_top(h: FinitePermGroup, copies: int, cap=2_000_000):
    """h acting the same way on every block at once, blocks freely permuted."""
    b = h.degree
    gens = [Permutation([j * b + g.images[x] for j in range(copies) for x in range(b)])
            for g in h.generators]
    gens += _adjacent_block_swaps(b, copies)
    return (FinitePermGroup(b * copies, tuple(gens), order_cap=cap),
            _block_layout(b, copies))


def even_flip_group():
    """Pairs flipped only two at a time, four blocks of two freely permuted."""
    flip_pair = Permutation([1, 0, 3, 2, 4, 5, 6, 7])
    rotate = Permutation([2, 3, 4, 5, 6, 7, 0, 1])
    swap = Permutation([2, 3, 0, 1, 4, 5, 6, 7])
    return FinitePermGroup(8, (flip_pair, rotate, swap)), _block_layout(2, 4)


def random_group(rng: random.Random, min_degree=2, max_degree=8, max_gens=2) -> FinitePermGroup:
    degree = rng.randint(min_degree, max_degree)
    gens = tuple(random_permutation(rng, degree)
                 for _ in range(rng.randint(1, max_gens)))
    return FinitePermGroup(degree, gens)
