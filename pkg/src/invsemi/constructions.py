"""Concrete semigroups: Brandt extensions, matrix units, Rees matrix semigroups,
adjunctions and the small groups and monoids used as fixtures.

Constructors put the zero, when there is one, at index 0.  Brandt-type
constructions list their nonzero elements as ``(row, elem, col)`` triples in
lexicographic order and record those triples in ``labels``.
"""

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .core import FiniteSemigroup, check_associativity, find_identity, is_group
from .errors import DomainError, MalformedInputError, ValidationError


class BrandtLabel(NamedTuple):
    row: int
    elem: int
    col: int


def label_of(S, x) -> Optional[BrandtLabel]:
    """Brandt coordinate of ``x``; ``None`` for the zero."""
    if S.labels is None:
        raise DomainError("semigroup carries no Brandt labels")
    lab = S.labels[x]
    return None if lab is None else BrandtLabel(*lab)


def brandt_index(lam, m, row, elem, col):
    """Index of ``(row, elem, col)`` in a Brandt extension over a monoid of order ``m``."""
    return 1 + (row * m + elem) * lam + col


def _fresh_name(base, taken):
    name = base
    while name in taken:
        name += "'"
    return name


def _base_monoid(S):
    if S.identity is not None:
        return S
    e = find_identity(S)
    if e is not None:
        return S.replace(identity=e)
    return adjoin_identity(S)


def brandt_extension(S, lam):
    """The Brandt ``lam``-extension over ``S^1``.

    ``(a, s, b) (c, t, d)`` is ``(a, st, d)`` when ``b == c`` and zero
    otherwise.  A monoid is used as is; otherwise a fresh identity is
    adjoined first.  The result has order ``lam**2 * |S^1| + 1``.
    """
    if isinstance(lam, bool) or not isinstance(lam, (int, np.integer)) or lam < 1:
        raise DomainError(f"lambda must be a positive integer, got {lam!r}")
    base = _base_monoid(S)
    m = base.order
    lam = int(lam)
    idx = np.arange(lam * lam * m)
    row, rest = np.divmod(idx, m * lam)
    elem, col = np.divmod(rest, lam)
    n = idx.size + 1
    table = np.zeros((n, n), dtype=np.int64)
    prod = base.table[elem[:, None], elem[None, :]]
    value = 1 + (row[:, None] * m + prod) * lam + col[None, :]
    table[1:, 1:] = np.where(col[:, None] == row[None, :], value, 0)
    labels = [None] + [BrandtLabel(int(r), int(a), int(c)) for r, a, c in zip(row, elem, col)]
    names = ["0"] + [f"({r},{base.name(a)},{c})" for r, a, c in zip(row, elem, col)]
    return FiniteSemigroup(table, zero=0, names=names, labels=labels, check=False)


def trivial_semigroup():
    return FiniteSemigroup([[0]], names=["e"])


def matrix_units(lam):
    """Semigroup of ``lam x lam`` matrix units plus zero; ``(i, j) (j, k) = (i, k)``."""
    if isinstance(lam, bool) or not isinstance(lam, (int, np.integer)) or lam < 1:
        raise DomainError(f"lambda must be a positive integer, got {lam!r}")
    B = brandt_extension(trivial_semigroup(), lam)
    names = ["0"] + [f"({r},{c})" for r, _, c in B.labels[1:]]
    return B.replace(names=names)


@dataclass(frozen=True)
class SandwichMatrix:
    """``|Lambda| x |I|`` matrix over a group; ``None`` marks a zero entry."""

    entries: tuple

    def __init__(self, entries):
        rows = tuple(tuple(None if v is None else int(v) for v in row) for row in entries)
        if not rows or not rows[0]:
            raise MalformedInputError("sandwich matrix must be non-empty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise MalformedInputError("sandwich matrix rows must have equal length")
        object.__setattr__(self, "entries", rows)

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0])

    def is_regular(self):
        if any(all(v is None for v in row) for row in self.entries):
            return False
        return all(any(row[j] is not None for row in self.entries) for j in range(self.cols))


def rees_matrix(G, P):
    """Rees matrix semigroup ``M0[G; I, Lambda; P]``.

    Nonzero elements ``(i, g, mu)`` with ``i < |I| = P.cols`` and
    ``mu < |Lambda| = P.rows``, ordered lexicographically after the zero;
    ``(i, g, l) (j, h, mu) = (i, g P[l][j] h, mu)`` or zero when ``P[l][j]``
    is zero.
    """
    if not isinstance(P, SandwichMatrix):
        P = SandwichMatrix(P)
    if not is_group(G):
        raise DomainError("Rees matrix construction needs a group")
    if not P.is_regular():
        raise ValidationError("sandwich matrix is not regular: every row and column needs a nonzero entry")
    gsize = G.order
    for row in P.entries:
        for v in row:
            if v is not None and not 0 <= v < gsize:
                raise MalformedInputError(f"sandwich entry {v} is not an element of the group")
    n_i, n_l = P.cols, P.rows
    triples = list(itertools.product(range(n_i), range(gsize), range(n_l)))
    n = len(triples) + 1
    gt = G.table
    table = np.zeros((n, n), dtype=np.int64)
    for a, (i, g, l) in enumerate(triples, start=1):
        for b, (j, h, mu) in enumerate(triples, start=1):
            p = P.entries[l][j]
            if p is None:
                continue
            k = gt[gt[g, p], h]
            table[a, b] = 1 + (i * gsize + k) * n_l + mu
    names = ["0"] + [f"({i},{G.name(g)},{l})" for i, g, l in triples]
    return FiniteSemigroup(table, zero=0, names=names, check=False)


def adjoin_zero(S, reuse=False):
    """``S`` with a fresh absorbing element at index 0 (old ``x`` becomes ``x + 1``).

    With ``reuse=True`` a semigroup that already has a marked zero is
    returned unchanged.
    """
    if reuse and S.zero is not None:
        return S
    n = S.order
    table = np.zeros((n + 1, n + 1), dtype=np.int64)
    table[1:, 1:] = S.table + 1
    names = None
    if S.names is not None:
        names = [_fresh_name("0", set(S.names))] + list(S.names)
    identity = None if S.identity is None else S.identity + 1
    return FiniteSemigroup(table, zero=0, identity=identity, names=names, check=False)


def adjoin_identity(S, reuse=False):
    """``S`` with a fresh neutral element appended at index ``order``.

    With ``reuse=True`` a semigroup that already has a marked identity is
    returned unchanged.
    """
    if reuse and S.identity is not None:
        return S
    n = S.order
    table = np.empty((n + 1, n + 1), dtype=np.int64)
    table[:n, :n] = S.table
    ar = np.arange(n + 1)
    table[n, :] = ar
    table[:, n] = ar
    names = None
    if S.names is not None:
        names = list(S.names) + [_fresh_name("1", set(S.names))]
    return FiniteSemigroup(table, zero=S.zero, identity=n, names=names, check=False)


# ---------------------------------------------------------------------------
# groups
# ---------------------------------------------------------------------------


def group_from_table(table, names=None):
    """Validate a group table and return it with the identity marked.

    Raises ValidationError naming the first failed axiom.
    """
    S = FiniteSemigroup(table, names=names, check=False)
    bad = check_associativity(S.table)
    if bad is not None:
        raise ValidationError(f"not a group: associativity fails at {bad}")
    e = find_identity(S)
    if e is None:
        raise ValidationError("not a group: no identity element")
    has_inverse = np.any((S.table == e) & (S.table.T == e), axis=1)
    if not has_inverse.all():
        x = int(np.flatnonzero(~has_inverse)[0])
        raise ValidationError(f"not a group: element {x} has no inverse")
    return S.replace(identity=e)


def cyclic_group(n):
    """``Z_n`` written additively; element ``k`` is the residue ``k``."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"group order must be a positive integer, got {n!r}")
    ar = np.arange(n)
    return group_from_table((ar[:, None] + ar[None, :]) % n, names=[str(k) for k in range(n)])


def klein_four_group():
    table = [[a ^ b for b in range(4)] for a in range(4)]
    return group_from_table(table, names=["e", "a", "b", "c"])


def _compose_perms(perms):
    index = {p: i for i, p in enumerate(perms)}
    # left-to-right: (p q)(x) = q(p(x))
    return [[index[tuple(q[p[x]] for x in range(len(p)))] for q in perms] for p in perms]


def symmetric_group(n):
    """Permutations of ``range(n)`` in lexicographic order, composed left to right."""
    if n < 1:
        raise DomainError("symmetric group needs n >= 1")
    perms = list(itertools.permutations(range(n)))
    return group_from_table(_compose_perms(perms), names=["".join(map(str, p)) for p in perms])


def dihedral_group(n):
    """Symmetries of the ``n``-gon, order ``2n``; ``r^k s^e`` sits at ``k + n e``."""
    if n < 1:
        raise DomainError("dihedral group needs n >= 1")
    table = np.empty((2 * n, 2 * n), dtype=np.int64)
    for a, e in itertools.product(range(n), range(2)):
        for b, f in itertools.product(range(n), range(2)):
            k = (a + (b if e == 0 else -b)) % n
            table[a + n * e, b + n * f] = k + n * ((e + f) % 2)
    names = [f"r{k}" if e == 0 else f"r{k}s" for e in range(2) for k in range(n)]
    return group_from_table(table, names=names)


_QUAT = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def quaternion_group():
    units = [(s, u) for s in (1, -1) for u in "1ijk"]
    index = {x: i for i, x in enumerate(units)}
    table = []
    for s, u in units:
        row = []
        for t, v in units:
            sign, w = _QUAT[(u, v)]
            row.append(index[(s * t * sign, w)])
        table.append(row)
    names = [("" if s > 0 else "-") + u for s, u in units]
    return group_from_table(table, names=names)


# ---------------------------------------------------------------------------
# other fixtures
# ---------------------------------------------------------------------------


def partial_injections(n):
    """All partial injections of ``range(n)`` as tuples (``-1`` = undefined).

    The empty map comes first, the rest are sorted by domain size then value.
    """
    maps = []
    for f in itertools.product(range(-1, n), repeat=n):
        defined = [v for v in f if v >= 0]
        if len(defined) == len(set(defined)):
            maps.append(f)
    maps.sort(key=lambda f: (sum(v >= 0 for v in f), f))
    return maps


def inverse_symmetric_monoid(n):
    """Symmetric inverse monoid on ``n <= 3`` points, maps composed left to right.

    The empty map is the zero (index 0); the identity map is marked.
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or not 1 <= n <= 3:
        raise DomainError(f"inverse_symmetric_monoid supports 1 <= n <= 3, got {n!r}")
    maps = partial_injections(n)
    index = {f: i for i, f in enumerate(maps)}

    def compose(f, g):
        return tuple(-1 if f[x] < 0 else g[f[x]] for x in range(n))

    table = [[index[compose(f, g)] for g in maps] for f in maps]
    names = ["".join("-" if v < 0 else str(v) for v in f) for f in maps]
    return FiniteSemigroup(table, zero=0, identity=index[tuple(range(n))], names=names)


def left_zero_semigroup(n):
    """``x y = x`` for all ``x, y``."""
    ar = np.arange(n)
    return FiniteSemigroup(np.repeat(ar[:, None], n, axis=1), names=[f"l{k}" for k in range(n)])


def chain_semilattice(n):
    """Chain ``0 < 1 < ... < n-1`` under meet; 0 is the zero, ``n-1`` the identity."""
    ar = np.arange(n)
    return FiniteSemigroup(np.minimum(ar[:, None], ar[None, :]), zero=0, identity=n - 1,
                           names=[f"c{k}" for k in range(n)])
