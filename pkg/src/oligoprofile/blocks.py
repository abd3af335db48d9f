"""Block systems of finite permutation groups.

Covers invariant partitions and their lattice, primitivity, the
setwise stabilizer of a block system, the induced action on blocks,
towers of per-block fixator restrictions, and the four-blocks equality
check.  Tower entries are compared by transport: conjugate by a group
element carrying one block onto the other and compare element sets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import factorial

from .errors import (
    CapExceeded,
    DegreeMismatch,
    DegreeTooLarge,
    ExpressionParseError,
    NotFullSymmetricOnBlocks,
    NotTransitive,
)
from .perm import FinitePermGroup, Permutation, UnionFind, _element_images, point_orbits

ALL_SYSTEMS_DEGREE_BOUND = 10


@dataclass(frozen=True)
class BlockSystem:
    """A partition of {0..degree-1}; blocks sorted, ordered by minimum."""

    degree: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        canon = tuple(tuple(sorted(b)) for b in self.blocks)
        canon = tuple(sorted(canon, key=lambda b: b[0] if b else -1))
        covered = [x for b in canon for x in b]
        if sorted(covered) != list(range(self.degree)) or any(not b for b in canon):
            raise ValueError(f"not a partition of 0..{self.degree - 1}: {self.blocks!r}")
        object.__setattr__(self, "blocks", canon)

    def block_of(self, point: int) -> int:
        for i, b in enumerate(self.blocks):
            if point in b:
                return i
        raise ValueError(f"point {point} out of range")

    def is_trivial(self) -> bool:
        return len(self.blocks) in (1, self.degree)

    def __repr__(self):
        return f"BlockSystem({serialize_partition(self)})"


def singleton_system(degree: int) -> BlockSystem:
    return BlockSystem(degree, tuple((x,) for x in range(degree)))


def single_block_system(degree: int) -> BlockSystem:
    return BlockSystem(degree, (tuple(range(degree)),))


def serialize_partition(p: BlockSystem) -> str:
    return json.dumps([list(b) for b in p.blocks], separators=(",", ":"))


def parse_partition(text: str, degree: int) -> BlockSystem:
    """Parse a partition given as a JSON list of lists of points."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ExpressionParseError(exc.pos, ["JSON list of blocks"], text) from None
    if not isinstance(data, list) or not all(
        isinstance(b, list) and all(isinstance(x, int) for x in b) for b in data
    ):
        raise ExpressionParseError(0, ["list of lists of points"], text)
    try:
        return BlockSystem(degree, tuple(tuple(b) for b in data))
    except ValueError as exc:
        raise ExpressionParseError(0, [str(exc)], text) from None


def _point_to_block(p: BlockSystem) -> list[int]:
    out = [0] * p.degree
    for i, b in enumerate(p.blocks):
        for x in b:
            out[x] = i
    return out


def is_block_system(g: FinitePermGroup, p: BlockSystem) -> bool:
    """True iff every generator maps every block onto some block."""
    if g.degree != p.degree:
        raise DegreeMismatch(f"group degree {g.degree} != partition degree {p.degree}")
    owner = _point_to_block(p)
    for gen in g.generators:
        for block in p.blocks:
            targets = {owner[gen.images[x]] for x in block}
            if len(targets) != 1 or len(p.blocks[targets.pop()]) != len(block):
                return False
    return True


def _require_transitive(g: FinitePermGroup):
    if len(point_orbits(g)) != 1:
        raise NotTransitive(f"group is not transitive on 0..{g.degree - 1}")


def minimal_block_system(g: FinitePermGroup, a: int, b: int) -> BlockSystem:
    """Finest g-invariant partition with a and b in a common block.

    Classic congruence refinement: merge a with b, then propagate every
    merge through the generators until the relation is stable.
    """
    _require_transitive(g)
    if a == b:
        raise ValueError("need two distinct points")
    uf = UnionFind(g.degree)
    uf.union(a, b)
    queue = [(a, b)]
    while queue:
        x, y = queue.pop()
        for gen in g.generators:
            u, v = gen.images[x], gen.images[y]
            if uf.union(u, v):
                queue.append((u, v))
    return BlockSystem(g.degree, uf.partition())


def _set_partitions(n: int):
    """All partitions of 0..n-1 via restricted growth strings."""
    assignment = [0] * n

    def rec(i, used):
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(used)]
            for x, c in enumerate(assignment):
                blocks[c].append(x)
            yield tuple(tuple(b) for b in blocks)
            return
        for c in range(used + 1):
            assignment[i] = c
            yield from rec(i + 1, max(used, c + 1))

    yield from rec(0, 0)


def all_block_systems(g: FinitePermGroup) -> list[BlockSystem]:
    """Every g-invariant partition, by exhaustive filtering; small degree only."""
    if g.degree > ALL_SYSTEMS_DEGREE_BOUND:
        raise DegreeTooLarge(
            f"degree {g.degree} beyond brute-force bound {ALL_SYSTEMS_DEGREE_BOUND}"
        )
    found = []
    for blocks in _set_partitions(g.degree):
        p = BlockSystem(g.degree, blocks)
        if is_block_system(g, p):
            found.append(p)
    return sorted(found, key=lambda p: p.blocks)


def join_blocks(p1: BlockSystem, p2: BlockSystem) -> BlockSystem:
    """Lattice join: finest common coarsening."""
    if p1.degree != p2.degree:
        raise DegreeMismatch(f"degrees {p1.degree} and {p2.degree} differ")
    uf = UnionFind(p1.degree)
    for p in (p1, p2):
        for block in p.blocks:
            for x in block[1:]:
                uf.union(block[0], x)
    return BlockSystem(p1.degree, uf.partition())


def meet_blocks(p1: BlockSystem, p2: BlockSystem) -> BlockSystem:
    """Lattice meet: coarsest common refinement."""
    if p1.degree != p2.degree:
        raise DegreeMismatch(f"degrees {p1.degree} and {p2.degree} differ")
    owner1, owner2 = _point_to_block(p1), _point_to_block(p2)
    cells: dict[tuple[int, int], list[int]] = {}
    for x in range(p1.degree):
        cells.setdefault((owner1[x], owner2[x]), []).append(x)
    return BlockSystem(p1.degree, tuple(tuple(c) for c in cells.values()))


def is_primitive(g: FinitePermGroup) -> bool:
    """True iff the transitive group g admits only the trivial block systems."""
    _require_transitive(g)
    if g.degree == 1:
        return True
    return all(
        len(minimal_block_system(g, 0, b).blocks) == 1 for b in range(1, g.degree)
    )


def _compose(p, q):
    return tuple(q[i] for i in p)


def _invert(p):
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[y] = x
    return tuple(out)


def _block_action_data(g: FinitePermGroup, p: BlockSystem):
    """Induced generators on block indices plus a transversal of the kernel.

    The transversal maps each induced image permutation to one group
    element realizing it, found by breadth first search; its size is
    the order of the action on blocks.
    """
    if not is_block_system(g, p):
        raise ValueError("partition is not a block system for the group")
    owner = _point_to_block(p)
    induced = []
    for gen in g.generators:
        induced.append(tuple(owner[gen.images[block[0]]] for block in p.blocks))
    nblocks = len(p.blocks)
    ident_b = tuple(range(nblocks))
    ident_g = tuple(range(g.degree))
    transversal = {ident_b: ident_g}
    frontier = [ident_b]
    pairs = list(zip(induced, [x.images for x in g.generators]))
    while frontier:
        fresh = []
        for sigma in frontier:
            t = transversal[sigma]
            for gi, gg in pairs:
                tau = _compose(sigma, gi)
                if tau not in transversal:
                    if len(transversal) >= g.order_cap:
                        raise CapExceeded(
                            f"block action exceeded order cap {g.order_cap}"
                        )
                    transversal[tau] = _compose(t, gg)
                    fresh.append(tau)
        frontier = fresh
    return induced, transversal


def action_on_blocks(g: FinitePermGroup, p: BlockSystem) -> FinitePermGroup:
    """The permutation group induced on block indices."""
    induced, _ = _block_action_data(g, p)
    return FinitePermGroup(
        len(p.blocks), tuple(Permutation(im) for im in induced), order_cap=g.order_cap
    )


def blockwise_stabilizer(g: FinitePermGroup, p: BlockSystem) -> FinitePermGroup:
    """Subgroup of elements mapping every block onto itself.

    This is the kernel of the action on blocks; its generators come
    from the transversal (Schreier's lemma), then get sifted down to a
    small set, so the full group is never enumerated.
    """
    induced, transversal = _block_action_data(g, p)
    candidates = set()
    ident = tuple(range(g.degree))
    pairs = list(zip(induced, [x.images for x in g.generators]))
    for sigma, t in transversal.items():
        for gi, gg in pairs:
            u = _compose(t, gg)
            s = _compose(u, _invert(transversal[_compose(sigma, gi)]))
            if s != ident:
                candidates.add(s)
    kept: list[Permutation] = []
    known = {ident}
    for s in sorted(candidates):
        if s in known:
            continue
        kept.append(Permutation(s))
        known = set(
            _element_images(
                FinitePermGroup(g.degree, tuple(kept), order_cap=g.order_cap)
            )
        )
    return FinitePermGroup(g.degree, tuple(kept), order_cap=g.order_cap)


@dataclass(frozen=True)
class Tower:
    """Per-block restrictions of nested pointwise fixators.

    entries[i] acts on the points of the block at block_order[i]
    (relabelled to 0..size-1 in increasing point order) and is the
    restriction of the part of the blockwise stabilizer fixing all
    earlier blocks pointwise.
    """

    entries: tuple[FinitePermGroup, ...]
    system: BlockSystem
    block_order: tuple[int, ...]


def _restrict(images, block):
    pos = {pt: i for i, pt in enumerate(block)}
    return tuple(pos[images[pt]] for pt in block)


def tower(g: FinitePermGroup, p: BlockSystem, block_order=None) -> Tower:
    """Tower of the block system, blocks taken in order of minimum point.

    Requires the action on blocks to be the full symmetric group; a
    custom block_order supports the order-invariance checks.
    """
    induced, transversal = _block_action_data(g, p)
    nblocks = len(p.blocks)
    if len(transversal) != factorial(nblocks):
        raise NotFullSymmetricOnBlocks(
            f"action on blocks has order {len(transversal)}, "
            f"expected {factorial(nblocks)}"
        )
    stab = blockwise_stabilizer(g, p)
    elements = _element_images(stab)
    if block_order is None:
        block_order = tuple(range(nblocks))
    else:
        block_order = tuple(block_order)
        if sorted(block_order) != list(range(nblocks)):
            raise ValueError(f"block_order must permute 0..{nblocks - 1}")
    entries = []
    fixed: list[int] = []
    for idx in block_order:
        block = p.blocks[idx]
        restricted = sorted(
            {_restrict(e, block) for e in elements if all(e[x] == x for x in fixed)}
        )
        entries.append(
            FinitePermGroup(
                len(block),
                tuple(Permutation(r) for r in restricted),
                order_cap=g.order_cap,
            )
        )
        fixed.extend(block)
    return Tower(tuple(entries), p, block_order)


def _element_inducing(g, p, partial: dict[int, int]) -> Permutation:
    """Some group element whose block action extends the partial index map."""
    _, transversal = _block_action_data(g, p)
    for sigma in sorted(transversal):
        if all(sigma[src] == dst for src, dst in partial.items()):
            return Permutation(transversal[sigma])
    raise ValueError(f"no group element induces the block map {partial}")


def _conjugated_entry(g, p, entry, src_idx, dst_idx, partial):
    """Entry on block src_idx carried onto block dst_idx by a group element.

    partial pins further blocks of the carrier's action; the carrier is
    the one whose induced block permutation is lexicographically least.
    """
    partial = dict(partial)
    partial[src_idx] = dst_idx
    carrier = _element_inducing(g, p, partial)
    src_block, dst_block = p.blocks[src_idx], p.blocks[dst_idx]
    dst_pos_of = {pt: i for i, pt in enumerate(dst_block)}
    beta = Permutation(dst_pos_of[carrier.images[pt]] for pt in src_block)
    beta_inv = beta.inverse()
    moved = sorted(
        {(beta_inv * Permutation(e) * beta).images for e in _element_images(entry)}
    )
    return FinitePermGroup(
        entry.degree, tuple(Permutation(m) for m in moved), order_cap=g.order_cap
    )


def transported_entry(
    g: FinitePermGroup, t: Tower, src_pos: int, dst_pos: int
) -> FinitePermGroup:
    """Tower entry at src_pos conjugated onto the block at dst_pos.

    The conjugating element is chosen to keep every block before
    min(src_pos, dst_pos) in place, matching how the block order can be
    permuted without changing the tower.
    """
    order = t.block_order
    prefix = {order[j]: order[j] for j in range(min(src_pos, dst_pos))}
    return _conjugated_entry(
        g, t.system, t.entries[src_pos], order[src_pos], order[dst_pos], prefix
    )


def towers_transport_equal(g: FinitePermGroup, t1: Tower, t2: Tower) -> bool:
    """True iff the towers agree entrywise once blocks are matched up.

    Entry i of t2 lives on t2's i-th block; it is carried onto t1's
    i-th block by an element aligning all earlier block pairs, then the
    element sets are compared literally.
    """
    if t1.system != t2.system or len(t1.entries) != len(t2.entries):
        return False
    for i in range(len(t1.entries)):
        prefix = {t2.block_order[j]: t1.block_order[j] for j in range(i)}
        moved = _conjugated_entry(
            g, t1.system, t2.entries[i], t2.block_order[i], t1.block_order[i], prefix
        )
        if not same_permutation_group(moved, t1.entries[i]):
            return False
    return True


def same_permutation_group(a: FinitePermGroup, b: FinitePermGroup) -> bool:
    """Literal equality of element sets."""
    if a.degree != b.degree:
        return False
    return set(_element_images(a)) == set(_element_images(b))


def check_four_blocks_lemma(g: FinitePermGroup, p: BlockSystem) -> bool:
    """Test that the second and third tower entries agree after transport.

    Requires exactly four blocks with the full S4 action on them; the
    underlying claim is that fixing one block pointwise already cuts
    the per-block group down as far as fixing two does.
    """
    if len(p.blocks) != 4:
        raise NotFullSymmetricOnBlocks(f"need exactly 4 blocks, got {len(p.blocks)}")
    t = tower(g, p)
    return same_permutation_group(t.entries[1], transported_entry(g, t, 2, 1))
