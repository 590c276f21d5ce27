"""Congruences on finite semigroups.

A congruence is held as a canonical block label per element: blocks are
numbered in order of their smallest member.  Closures run through the
union-find kernels in ``kernels``.
"""

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import config, kernels
from .constructions import matrix_units
from .core import ElementMap, FiniteSemigroup, Verdict, is_homomorphism, is_ideal, subsemigroup
from .errors import DomainError, SizeLimitError, UnsupportedStructureError, ValidationError


def _canonical(labels):
    labels = np.asarray(labels, dtype=np.int64).reshape(-1)
    out = np.empty(labels.size, dtype=np.int64)
    seen = {}
    for i, lab in enumerate(labels.tolist()):
        out[i] = seen.setdefault(lab, len(seen))
    return out


class Congruence:
    """A partition of ``range(order)``; not necessarily compatible until checked.

    Construct from block lists with ``from_blocks`` or from a label array;
    either way the stored labels are canonical, so equal partitions compare
    equal.
    """

    __slots__ = ("labels", "_key")

    def __init__(self, labels):
        arr = _canonical(labels)
        arr.setflags(write=False)
        self.labels = arr
        self._key = tuple(arr.tolist())

    @classmethod
    def from_blocks(cls, blocks, order=None):
        blocks = [sorted(int(x) for x in b) for b in blocks]
        members = [x for b in blocks for x in b]
        n = len(members) if order is None else order
        if any(not b for b in blocks):
            raise ValidationError("partition has an empty block")
        if sorted(members) != list(range(n)):
            raise ValidationError(f"blocks do not partition range({n}) exactly")
        labels = np.empty(n, dtype=np.int64)
        for k, b in enumerate(blocks):
            labels[b] = k
        return cls(labels)

    @classmethod
    def identity(cls, n):
        return cls(np.arange(n))

    @classmethod
    def universal(cls, n):
        return cls(np.zeros(n, dtype=np.int64))

    @property
    def order(self):
        return self.labels.size

    @property
    def num_blocks(self):
        return int(self.labels.max()) + 1

    def blocks(self):
        out = [[] for _ in range(self.num_blocks)]
        for x, b in enumerate(self._key):
            out[b].append(x)
        return [tuple(b) for b in out]

    def block_sizes(self):
        return np.bincount(self.labels).tolist()

    def related(self, x, y):
        return self.labels[x] == self.labels[y]

    def is_identity(self):
        return self.num_blocks == self.order

    def is_universal(self):
        return self.num_blocks == 1

    def __le__(self, other):
        """Refinement: every block of ``self`` lies inside a block of ``other``."""
        pairs = set(zip(self._key, other.labels.tolist()))
        return len(pairs) == self.num_blocks

    def __eq__(self, other):
        if not isinstance(other, Congruence):
            return NotImplemented
        return self._key == other._key

    def __lt__(self, other):
        return self <= other and self != other

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Congruence({[list(b) for b in self.blocks()]})"

    def join(self, other):
        """Transitive closure of the union of the two partitions."""
        if self.order != other.order:
            raise ValidationError("congruences on different orders")
        n = self.order
        ar = np.arange(n, dtype=np.int64)
        first_a = _first_members(self.labels)
        first_b = _first_members(other.labels)
        rep = kernels._merge_edges_numpy(ar, np.concatenate([ar, ar]),
                                         np.concatenate([first_a[self.labels], first_b[other.labels]]))
        return Congruence(rep)


def _first_members(labels):
    first = np.full(int(labels.max()) + 1, -1, dtype=np.int64)
    for x in range(labels.size - 1, -1, -1):
        first[labels[x]] = x
    return first


def _as_congruence(S, partition):
    if isinstance(partition, Congruence):
        if partition.order != S.order:
            raise ValidationError(f"partition covers {partition.order} elements, semigroup has {S.order}")
        return partition
    return Congruence.from_blocks(partition, order=S.order)


def congruence_generated(S, pairs, base=None):
    """Smallest congruence containing ``base`` (default: identity) and merging ``pairs``."""
    seed = np.arange(S.order) if base is None else _as_congruence(S, base).labels
    return Congruence(kernels.closure(S.table, seed, list(pairs)))


def principal_congruence(S, x, y):
    """Smallest congruence with ``x`` related to ``y``."""
    return Congruence(kernels.closure(S.table, np.arange(S.order), [(x, y)]))


def is_congruence(S, partition) -> Verdict:
    """Translation compatibility of a partition.

    The witness is ``((x, y), s, side)``: ``x`` and ``y`` share a block but
    ``s x`` and ``s y`` (side ``"left"``) or ``x s`` and ``y s`` (side
    ``"right"``) do not.
    """
    c = _as_congruence(S, partition)
    lab = c.labels
    t = S.table
    rep = _first_members(lab)[lab]
    # x ~ rep[x]; compatibility of these pairs implies it for all related pairs
    left = lab[t] != lab[t[:, rep]]  # [s, x]: s x vs s rep[x]
    right = lab[t] != lab[t[rep, :]]  # [x, s]: x s vs rep[x] s
    candidates = []
    bad = np.argwhere(left)
    if bad.size:
        s, x = (int(v) for v in bad[0])
        candidates.append((x, s, "left"))
    bad = np.argwhere(right)
    if bad.size:
        x, s = (int(v) for v in bad[0])
        candidates.append((x, s, "right"))
    if not candidates:
        return Verdict(True)
    x, s, side = min(candidates)
    pair = (int(rep[x]), x)
    return Verdict(False, (pair, s, side),
                   f"{pair[0]} ~ {pair[1]} but their {side} translates by {s} are not related")


@dataclass(frozen=True)
class CongruenceLattice:
    """All congruences, finest first, with ``join[i][j]`` the index of their join."""

    congruences: tuple
    join: np.ndarray

    def __len__(self):
        return len(self.congruences)

    def __iter__(self):
        return iter(self.congruences)

    def index(self, c):
        return self.congruences.index(c)


def _all_pairs(n):
    return np.array(list(combinations(range(n), 2)), dtype=np.int64).reshape(-1, 2)


def principal_congruences(S):
    """Distinct principal congruences ``(x, y), x < y``, in order of first seed pair."""
    pairs = _all_pairs(S.order)
    if not pairs.size:
        return []
    rows = kernels.principal_batch(S.table, pairs)
    seen = {}
    for row in rows:
        c = Congruence(row)
        seen.setdefault(c, None)
    return list(seen)


def _lattice_key(c):
    return (-c.num_blocks, c._key)


def all_congruences(S, max_order=None) -> CongruenceLattice:
    """Every congruence on ``S``, as joins of principal congruences."""
    bound = config.max_lattice_order() if max_order is None else max_order
    if S.order > bound:
        raise SizeLimitError(f"congruence lattice refused: order {S.order} > bound {bound}")
    principals = principal_congruences(S)
    found = {Congruence.identity(S.order)}
    found.update(principals)
    frontier = list(found)
    while frontier:
        nxt = []
        for c in frontier:
            for p in principals:
                j = c.join(p)
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    ordered = tuple(sorted(found, key=_lattice_key))
    pos = {c: i for i, c in enumerate(ordered)}
    k = len(ordered)
    join = np.empty((k, k), dtype=np.int64)
    for i in range(k):
        join[i, i] = i
        for j in range(i + 1, k):
            join[i, j] = join[j, i] = pos[ordered[i].join(ordered[j])]
    join.setflags(write=False)
    return CongruenceLattice(ordered, join)


def is_congruence_free(S) -> Verdict:
    """True iff the identity and universal relations are the only congruences.

    Scans seed pairs ``x < y`` lexicographically; the witness is the
    principal congruence of the first seed that is not universal.
    """
    if S.order < 2:
        raise DomainError("congruence-freeness needs at least two elements")
    t = S.table
    n = S.order
    ar = np.arange(n)
    for x in range(n):
        for y in range(x + 1, n):
            c = Congruence(kernels.closure(t, ar, [(x, y)]))
            if not c.is_universal():
                return Verdict(False, c, f"principal congruence of ({x}, {y}) is proper and nontrivial")
    return Verdict(True, None, "every principal congruence is universal")


def rees_congruence(S, ideal):
    """Collapse a two-sided ideal to one block, everything else singleton."""
    members = sorted(set(int(x) for x in ideal))
    if not members or not is_ideal(S, members):
        raise ValidationError("set is not a two-sided ideal")
    labels = np.arange(S.order)
    labels[members] = members[0]
    return Congruence(labels)


def kernel(f):
    """Partition of the source of ``f`` into its fibres."""
    return Congruence(f.image)


def quotient(S, c):
    """``S / c`` and the projection onto it; blocks keep their canonical order."""
    c = _as_congruence(S, c)
    verdict = is_congruence(S, c)
    if not verdict:
        raise ValidationError(f"not a congruence: {verdict.reason}")
    lab = c.labels
    reps = _first_members(lab)
    table = lab[S.table[np.ix_(reps, reps)]]
    names = [f"[{S.name(int(r))}]" for r in reps]
    Q = FiniteSemigroup(
        table,
        zero=None if S.zero is None else int(lab[S.zero]),
        identity=None if S.identity is None else int(lab[S.identity]),
        names=names,
        check=False,
    )
    return Q, ElementMap(lab, Q.order)


def image_of(T, f):
    """The subsemigroup of ``T`` hit by ``f``."""
    img, _ = subsemigroup(T, np.unique(f.image))
    return img


def hom_h(B):
    """The map forgetting the group coordinate of a labelled Brandt extension.

    Sends ``(a, g, b)`` to the matrix unit ``(a, b)`` and zero to zero.
    Returns ``(h, kernel(h))`` with ``h`` into ``matrix_units(lam)``.
    """
    if B.labels is None:
        raise UnsupportedStructureError("hom_h needs a semigroup carrying Brandt labels")
    triples = [lab for lab in B.labels if lab is not None]
    if len(triples) != B.order - 1:
        raise UnsupportedStructureError("Brandt labels need exactly one zero label")
    lam = 1 + max(max(r, c) for r, _, c in triples)
    M = matrix_units(lam)
    image = [0 if lab is None else 1 + lab[0] * lam + lab[2] for lab in B.labels]
    h = ElementMap(image, M.order)
    if not is_homomorphism(B, M, h):
        raise UnsupportedStructureError("Brandt labels are inconsistent with the multiplication")
    return h, kernel(h)
