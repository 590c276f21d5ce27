"""Structure of finite completely 0-simple inverse semigroups.

Such a semigroup splits into the zero and ``lam**2`` blocks indexed by pairs
of nonzero idempotents, ``x`` lying in block ``(a, b)`` when
``x x^-1 = e_a`` and ``x^-1 x = e_b``.  Picking a transversal element in each
block of the base row recovers an explicit isomorphism with the Brandt
extension of the base block's group.
"""

from dataclasses import dataclass

import numpy as np

from .constructions import brandt_extension, brandt_index
from .core import (
    ElementMap,
    FiniteSemigroup,
    green_relations,
    idempotents,
    inverses,
    is_0_simple,
    is_group,
    is_homomorphism,
    is_inverse_semigroup,
    subsemigroup,
)
from .errors import DomainError, InvariantViolation, MissingZeroError, UnsupportedStructureError


def is_primitive_idempotent(S, e):
    """``e`` is a nonzero idempotent with no idempotent strictly between it and 0."""
    if S.zero is None:
        raise MissingZeroError("primitivity needs a marked zero")
    t = S.table
    if e == S.zero or t[e, e] != e:
        return False
    for f in idempotents(S):
        if f in (e, S.zero):
            continue
        if t[e, f] == f and t[f, e] == f:
            return False
    return True


def is_completely_0_simple_inverse(S):
    """Inverse, 0-simple and every nonzero idempotent primitive."""
    if S.zero is None:
        raise MissingZeroError("complete 0-simplicity needs a marked zero")
    if not is_inverse_semigroup(S) or not is_0_simple(S):
        return False
    return all(is_primitive_idempotent(S, e) for e in idempotents(S) if e != S.zero)


@dataclass(frozen=True)
class BlockPartition:
    """Nonzero elements grouped by ``(x x^-1, x^-1 x)``.

    ``idempotents[a]`` is the nonzero idempotent with coordinate ``a``
    (ascending element index).  ``block_of[x]`` is ``(a, b)``, or
    ``(-1, -1)`` for the zero.  ``transversal[b]`` is the smallest element of
    block ``(0, b)``.
    """

    lam: int
    zero: int
    idempotents: tuple
    block_of: np.ndarray
    transversal: tuple

    def block(self, a, b):
        hits = np.flatnonzero((self.block_of[:, 0] == a) & (self.block_of[:, 1] == b))
        return tuple(int(x) for x in hits)

    def blocks(self):
        return {(a, b): self.block(a, b) for a in range(self.lam) for b in range(self.lam)}

    def block_size(self):
        return len(self.block(0, 0))


def block_partition(S) -> BlockPartition:
    if S.zero is None or not is_completely_0_simple_inverse(S):
        raise UnsupportedStructureError("block partition needs a completely 0-simple inverse semigroup")
    t = S.table
    inv = inverses(S)
    es = tuple(e for e in idempotents(S) if e != S.zero)
    lam = len(es)
    coord = np.full(S.order, -1, dtype=np.int64)
    coord[list(es)] = np.arange(lam)
    ar = np.arange(S.order)
    left = coord[t[ar, inv]]
    right = coord[t[inv, ar]]
    block_of = np.stack([left, right], axis=1)
    block_of[S.zero] = (-1, -1)
    nonzero = ar != S.zero
    if np.any(block_of[nonzero] < 0):
        raise InvariantViolation("a nonzero element has a zero range or domain idempotent")
    block_of.setflags(write=False)
    counts = np.zeros((lam, lam), dtype=np.int64)
    np.add.at(counts, (left[nonzero], right[nonzero]), 1)
    if np.any(counts != counts[0, 0]):
        raise InvariantViolation(f"blocks have unequal sizes: {counts.tolist()}")
    transversal = []
    for b in range(lam):
        hits = np.flatnonzero((left == 0) & (right == b) & nonzero)
        transversal.append(int(hits[0]))
    return BlockPartition(lam, S.zero, es, block_of, tuple(transversal))


def _connector(S, blocks, a, b):
    # element of block (a, b) acting as the unit there: r_a^-1 r_b
    inv = inverses(S)
    r = blocks.transversal
    return int(S.table[inv[r[a]], r[b]])


def block_translation(S, blocks, src, dst):
    """Bijection from block ``src = (a, b)`` onto block ``dst = (c, d)``.

    ``s -> u s v`` where ``u`` is the connector of block ``(c, a)`` and ``v``
    that of block ``(b, d)``; connectors of diagonal blocks are the block
    idempotents, so ``src == dst`` gives the identity.  The map is returned
    on block positions: entry ``i`` is the position in ``blocks.block(*dst)``
    of the image of ``blocks.block(*src)[i]``.
    """
    a, b = src
    c, d = dst
    lam = blocks.lam
    if not all(isinstance(v, (int, np.integer)) and 0 <= v < lam for v in (a, b, c, d)):
        raise DomainError(f"block coordinates must lie in range({lam})")
    u = _connector(S, blocks, c, a)
    v = _connector(S, blocks, b, d)
    t = S.table
    source = blocks.block(a, b)
    target = {x: i for i, x in enumerate(blocks.block(c, d))}
    image = []
    for s in source:
        y = int(t[t[u, s], v])
        if y not in target:
            raise InvariantViolation(f"translation sends {s} outside block {dst}")
        image.append(target[y])
    return ElementMap(image, len(target))


def extract_maximal_subgroup(S, e):
    """The H-class of idempotent ``e`` with its induced multiplication."""
    if S.table[e, e] != e:
        raise DomainError(f"element {e} is not idempotent")
    h = green_relations(S).h_class
    members = np.flatnonzero(h == h[e])
    members_list = [int(x) for x in members]
    G, _ = subsemigroup(S, members_list, identity=members_list.index(e))
    if not is_group(G):
        raise InvariantViolation("H-class of an idempotent is not a group")
    return G


@dataclass(frozen=True)
class BrandtDecomposition:
    """``iso`` maps ``S`` onto ``target = brandt_extension(group, lam)``."""

    lam: int
    group: FiniteSemigroup
    iso: ElementMap
    blocks: BlockPartition
    target: FiniteSemigroup
    group_members: tuple

    def labelled(self, S):
        """``S`` annotated with the Brandt coordinates of its images."""
        labels = [self.target.labels[self.iso(x)] for x in range(S.order)]
        return S.replace(labels=labels)


def decompose_brandt(S) -> BrandtDecomposition:
    """Recover ``(lam, G)`` and an explicit isomorphism ``S -> B_lam(G)``.

    The base idempotent is the smallest nonzero one; ``G`` is its block.
    ``x`` in block ``(b, c)`` goes to ``(b, r_b x r_c^-1, c)``.
    """
    blocks = block_partition(S)
    t = S.table
    inv = inverses(S)
    e0 = blocks.idempotents[0]
    members = blocks.block(0, 0)
    group, _ = subsemigroup(S, members, identity=members.index(e0))
    if not is_group(group):
        raise InvariantViolation("base block is not a group")
    pos = {x: i for i, x in enumerate(members)}
    target = brandt_extension(group, blocks.lam)
    m = group.order
    r = blocks.transversal
    image = np.zeros(S.order, dtype=np.int64)
    for x in range(S.order):
        if x == S.zero:
            continue
        b, c = (int(v) for v in blocks.block_of[x])
        g = int(t[t[r[b], x], inv[r[c]]])
        image[x] = brandt_index(blocks.lam, m, b, pos[g], c)
    image[S.zero] = 0
    iso = ElementMap(image, target.order)
    if not iso.is_bijective():
        raise InvariantViolation("decomposition map is not bijective")
    if not is_homomorphism(S, target, iso):
        raise InvariantViolation("decomposition map is not a homomorphism")
    return BrandtDecomposition(blocks.lam, group, iso, blocks, target, members)
