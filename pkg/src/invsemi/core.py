"""Finite semigroups as Cayley tables, and the predicates built on them."""

from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from . import config, kernels
from .errors import (
    AssociativityError,
    DomainError,
    InvariantViolation,
    MalformedInputError,
    MarkerError,
    MissingIdentityError,
    MissingZeroError,
    SizeLimitError,
    UnsupportedStructureError,
    ValidationError,
)

Label = Optional[tuple]


def as_table(table) -> np.ndarray:
    """Coerce ``table`` to a square ``int64`` array with entries in range.

    Raises MalformedInputError for ragged rows, non-integer entries, an empty
    table or entries outside ``[0, n)``.
    """
    if isinstance(table, np.ndarray):
        arr = table
    else:
        rows = list(table)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise MalformedInputError(f"row {i} has length {len(row)}, expected {n}")
        try:
            arr = np.array(rows)
        except (ValueError, TypeError) as exc:
            raise MalformedInputError(f"table is not a rectangular array: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise MalformedInputError(f"table must be square, got shape {arr.shape}")
    n = arr.shape[0]
    if n == 0:
        raise MalformedInputError("table must have at least one element")
    if arr.dtype == bool or not np.issubdtype(arr.dtype, np.integer):
        raise MalformedInputError(f"table entries must be integers, got dtype {arr.dtype}")
    arr = arr.astype(np.int64, copy=True)
    bad = np.argwhere((arr < 0) | (arr >= n))
    if bad.size:
        i, j = (int(v) for v in bad[0])
        raise MalformedInputError(f"entry [{i}][{j}] = {arr[i, j]} is outside [0, {n})")
    return arr


def check_associativity(table, max_order=None):
    """Return ``None`` if the table is associative, else the first violating ``(x, y, z)``.

    Triples are scanned in lexicographic order.  Tables larger than
    ``max_order`` (default ``INVSEMI_MAX_ASSOC_ORDER``, 256) are refused.
    """
    arr = as_table(table)
    bound = config.max_assoc_order() if max_order is None else max_order
    if arr.shape[0] > bound:
        raise SizeLimitError(f"associativity scan refused: order {arr.shape[0]} > bound {bound}")
    return kernels.assoc_violation(arr)


class FiniteSemigroup:
    """An immutable finite semigroup on the elements ``0 .. order-1``.

    ``table[x, y]`` is the product ``x*y``.  ``zero`` and ``identity`` are
    optional markers, validated on construction.  ``labels`` optionally
    records a Brandt coordinate per element: ``None`` for the zero and a
    ``(row, elem, col)`` triple otherwise.  An order-1 semigroup gets both
    markers automatically.
    """

    def __init__(self, table, zero=None, identity=None, names=None, labels=None, *, check=True):
        arr = as_table(table)
        n = arr.shape[0]
        if check:
            bad = check_associativity(arr)
            if bad is not None:
                raise AssociativityError(bad)
        if n == 1:
            zero = 0 if zero is None else zero
            identity = 0 if identity is None else identity
        ar = np.arange(n)
        if zero is not None:
            zero = _index(zero, n, "zero")
            if not (np.all(arr[zero, :] == zero) and np.all(arr[:, zero] == zero)):
                raise MarkerError(f"zero marker {zero} is not absorbing")
        if identity is not None:
            identity = _index(identity, n, "identity")
            if not (np.array_equal(arr[identity, :], ar) and np.array_equal(arr[:, identity], ar)):
                raise MarkerError(f"identity marker {identity} is not neutral")
        if names is not None:
            names = tuple(str(s) for s in names)
            if len(names) != n:
                raise MalformedInputError(f"expected {n} names, got {len(names)}")
            if len(set(names)) != n:
                dup = next(s for s in names if names.count(s) > 1)
                raise ValidationError(f"element names must be distinct; {dup!r} repeats")
        if labels is not None:
            labels = _check_labels(labels, n)
        arr.setflags(write=False)
        self._table = arr
        self.zero = zero
        self.identity = identity
        self.names = names
        self.labels = labels
        self._cache = {}

    @property
    def table(self) -> np.ndarray:
        return self._table

    @property
    def order(self) -> int:
        return self._table.shape[0]

    def __len__(self):
        return self.order

    def mul(self, x, y):
        return int(self._table[x, y])

    def name(self, x):
        return self.names[x] if self.names is not None else str(x)

    def replace(self, **changes):
        fields = dict(zero=self.zero, identity=self.identity, names=self.names, labels=self.labels)
        fields.update(changes)
        return FiniteSemigroup(self._table, check=False, **fields)

    def _key(self):
        return (self._table.tobytes(), self.order, self.zero, self.identity, self.names, self.labels)

    def __eq__(self, other):
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        extra = []
        if self.zero is not None:
            extra.append(f"zero={self.zero}")
        if self.identity is not None:
            extra.append(f"identity={self.identity}")
        if self.labels is not None:
            extra.append("labelled")
        tail = (", " + ", ".join(extra)) if extra else ""
        return f"FiniteSemigroup(order={self.order}{tail})"

    def cached(self, key, compute):
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]


def _index(value, n, what):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise MalformedInputError(f"{what} marker must be an integer, got {value!r}")
    value = int(value)
    if not 0 <= value < n:
        raise MalformedInputError(f"{what} marker {value} is outside [0, {n})")
    return value


def _check_labels(labels, n):
    labels = list(labels)
    if len(labels) != n:
        raise MalformedInputError(f"expected {n} labels, got {len(labels)}")
    out = []
    for i, lab in enumerate(labels):
        if lab is None:
            out.append(None)
            continue
        lab = tuple(lab)
        if len(lab) != 3 or any(isinstance(v, bool) or not isinstance(v, (int, np.integer)) or v < 0 for v in lab):
            raise MalformedInputError(f"label {i} must be null or three non-negative integers, got {lab!r}")
        out.append(tuple(int(v) for v in lab))
    if len(set(out)) != n:
        raise MalformedInputError("labels must be pairwise distinct")
    return tuple(out)


# ---------------------------------------------------------------------------
# markers and relabelling
# ---------------------------------------------------------------------------


def find_zero(S):
    """Index of the absorbing element, if any."""
    t = S.table
    n = S.order
    for z in range(n):
        if np.all(t[z, :] == z) and np.all(t[:, z] == z):
            return z
    return None


def find_identity(S):
    """Index of the neutral element, if any."""
    t = S.table
    ar = np.arange(S.order)
    for e in range(S.order):
        if np.array_equal(t[e, :], ar) and np.array_equal(t[:, e], ar):
            return e
    return None


def with_markers(S):
    """Copy of ``S`` with any existing zero and identity marked."""
    zero = S.zero if S.zero is not None else find_zero(S)
    identity = S.identity if S.identity is not None else find_identity(S)
    return S.replace(zero=zero, identity=identity)


def relabel(S, perm):
    """Isomorphic copy of ``S`` in which element ``x`` is renamed ``perm[x]``."""
    perm = np.asarray(perm, dtype=np.int64)
    n = S.order
    if perm.shape != (n,) or not np.array_equal(np.sort(perm), np.arange(n)):
        raise MalformedInputError("perm must be a permutation of range(order)")
    inv = np.empty(n, dtype=np.int64)
    inv[perm] = np.arange(n)
    table = perm[S.table[np.ix_(inv, inv)]]

    def move(seq):
        return None if seq is None else tuple(seq[int(i)] for i in inv)

    return FiniteSemigroup(
        table,
        zero=None if S.zero is None else int(perm[S.zero]),
        identity=None if S.identity is None else int(perm[S.identity]),
        names=move(S.names),
        labels=move(S.labels),
        check=False,
    )


def normalize_zero(S):
    """Move a marked zero to index 0 by swapping it with element 0."""
    if S.zero is None or S.zero == 0:
        return S
    perm = np.arange(S.order)
    perm[0], perm[S.zero] = S.zero, 0
    return relabel(S, perm)


def subsemigroup(S, elements, **markers):
    """The subsemigroup on ``elements`` (sorted ascending) with the induced table.

    Returns ``(T, members)`` where ``members[i]`` is the element of ``S``
    that became index ``i`` of ``T``.
    """
    members = sorted(set(int(e) for e in elements))
    if not members:
        raise DomainError("a subsemigroup needs at least one element")
    pos = np.full(S.order, -1, dtype=np.int64)
    pos[members] = np.arange(len(members))
    sub = S.table[np.ix_(members, members)]
    mapped = pos[sub]
    if np.any(mapped < 0):
        raise DomainError("element set is not closed under multiplication")
    names = None if S.names is None else [S.names[m] for m in members]
    return FiniteSemigroup(mapped, names=names, check=False, **markers), members


# ---------------------------------------------------------------------------
# elementary predicates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check.  Truthy iff the property holds.

    ``witness`` carries the counterexample (or the positive evidence, where a
    check has one) and ``reason`` a one-line explanation.
    """

    holds: bool
    witness: Any = None
    reason: str = ""

    def __bool__(self):
        return self.holds


def idempotents(S):
    """Sorted tuple of all ``e`` with ``e*e == e``."""

    def compute():
        ar = np.arange(S.order)
        return tuple(int(e) for e in np.flatnonzero(S.table[ar, ar] == ar))

    return S.cached("idempotents", compute)


def _partner_matrix(S):
    # ok[x, y] iff x y x = x and y x y = y
    t = S.table
    n = S.order
    ar = np.arange(n)
    xyx = t[t, ar[:, None]]
    yxy = t[t.T, ar[None, :]]
    return (xyx == ar[:, None]) & (yxy == ar[None, :])


def is_inverse_semigroup(S) -> Verdict:
    """Every element regular and idempotents pairwise commuting.

    The witness is ``("irregular", x)`` or ``("noncommuting", e, f)`` for the
    first failure found (elements scanned in index order).
    """

    def compute():
        t = S.table
        n = S.order
        ar = np.arange(n)
        regular = np.any(t[t, ar[:, None]] == ar[:, None], axis=1)
        if not regular.all():
            x = int(np.flatnonzero(~regular)[0])
            return Verdict(False, ("irregular", x), f"element {S.name(x)} has no inverse")
        es = np.array(idempotents(S), dtype=np.int64)
        sub = t[np.ix_(es, es)]
        bad = np.argwhere(sub != sub.T)
        if bad.size:
            e, f = (int(es[k]) for k in bad[0])
            return Verdict(False, ("noncommuting", e, f),
                           f"idempotents {S.name(e)} and {S.name(f)} do not commute")
        return Verdict(True, None, "regular with commuting idempotents")

    return S.cached("is_inverse", compute)


def inverses(S) -> np.ndarray:
    """Array mapping each element to its unique inverse.

    Raises UnsupportedStructureError unless ``S`` is an inverse semigroup.
    """

    def compute():
        verdict = is_inverse_semigroup(S)
        if not verdict:
            raise UnsupportedStructureError(f"not an inverse semigroup: {verdict.reason}")
        ok = _partner_matrix(S)
        counts = ok.sum(axis=1)
        if not np.all(counts == 1):
            raise InvariantViolation("inverse semigroup with non-unique inverses")
        inv = np.argmax(ok, axis=1).astype(np.int64)
        inv.setflags(write=False)
        return inv

    return S.cached("inverses", compute)


def inverse_of(S, x):
    """The unique ``y`` with ``x y x = x`` and ``y x y = y``."""
    return int(inverses(S)[x])


# ---------------------------------------------------------------------------
# ideals and Green's relations
# ---------------------------------------------------------------------------


def _first_occurrence_ids(keys):
    """Relabel an integer class array so class ids appear in order 0, 1, 2, ..."""
    out = np.empty(len(keys), dtype=np.int64)
    seen = {}
    for i, k in enumerate(keys):
        k = int(k)
        if k not in seen:
            seen[k] = len(seen)
        out[i] = seen[k]
    return out


def _row_classes(mat):
    _, inverse = np.unique(mat, axis=0, return_inverse=True)
    return _first_occurrence_ids(inverse.reshape(-1))


def _ideal_matrices(S):
    def compute():
        t = S.table
        n = S.order
        ar = np.arange(n)
        right = np.zeros((n, n), dtype=bool)  # right[x, y]: y in x S^1
        right[np.repeat(ar, n), t.reshape(-1)] = True
        right[ar, ar] = True
        left = np.zeros((n, n), dtype=bool)  # left[x, y]: y in S^1 x
        left[np.tile(ar, n), t.reshape(-1)] = True
        left[ar, ar] = True
        # S^1 x S^1 is the union of S^1 u over u in x S^1; counts stay below 2^24
        two = (right.astype(np.float32) @ left.astype(np.float32)) > 0
        return right, left, two

    return S.cached("ideal_matrices", compute)


def principal_ideal(S, x, side="two"):
    """Sorted tuple of the principal right, left or two-sided ideal of ``x``."""
    right, left, two = _ideal_matrices(S)
    mat = {"right": right, "left": left, "two": two}[side]
    return tuple(int(v) for v in np.flatnonzero(mat[x]))


def ideal_generated(S, elements):
    """Smallest two-sided ideal containing ``elements``."""
    _, _, two = _ideal_matrices(S)
    elements = list(elements)
    if not elements:
        return ()
    return tuple(int(v) for v in np.flatnonzero(two[elements].any(axis=0)))


def is_ideal(S, elements):
    members = np.zeros(S.order, dtype=bool)
    members[list(elements)] = True
    if not members.any():
        return False
    t = S.table
    return bool(members[t[members, :]].all() and members[t[:, members]].all())


@dataclass(frozen=True)
class GreenClasses:
    """Class id per element for each of Green's relations.

    Ids are numbered by first occurrence in element order.
    """

    r_class: np.ndarray
    l_class: np.ndarray
    h_class: np.ndarray
    d_class: np.ndarray
    j_class: np.ndarray

    def of(self, relation):
        return getattr(self, relation.lower() + "_class")

    def classes(self, relation):
        ids = self.of(relation)
        out = [[] for _ in range(int(ids.max()) + 1)]
        for x, c in enumerate(ids):
            out[c].append(x)
        return [tuple(c) for c in out]

    def counts(self):
        return {rel: int(self.of(rel).max()) + 1 for rel in "RLHDJ"}

    def sizes(self, relation):
        ids = self.of(relation)
        return np.bincount(ids)


def green_relations(S) -> GreenClasses:
    def compute():
        right, left, two = _ideal_matrices(S)
        r = _row_classes(right)
        l = _row_classes(left)
        h = _first_occurrence_ids(r * S.order + l)
        j = _row_classes(two)
        # D is the join of R and L
        n = S.order
        first_r = np.zeros(n, dtype=np.int64)
        first_l = np.zeros(n, dtype=np.int64)
        for arr, cls in ((first_r, r), (first_l, l)):
            seen = {}
            for x in range(n):
                arr[x] = seen.setdefault(int(cls[x]), x)
        ar = np.arange(n, dtype=np.int64)
        rep = kernels._merge_edges_numpy(ar, np.concatenate([ar, ar]), np.concatenate([first_r, first_l]))
        d = _first_occurrence_ids(rep)
        for arr in (r, l, h, d, j):
            arr.setflags(write=False)
        return GreenClasses(r, l, h, d, j)

    return S.cached("green", compute)


def is_0_simple(S):
    """``S S != {0}`` and the only ideals are ``{0}`` and ``S``."""
    if S.zero is None:
        raise MissingZeroError("0-simplicity needs a marked zero")
    _, _, two = _ideal_matrices(S)
    if np.all(S.table == S.zero):
        return False
    nonzero = np.arange(S.order) != S.zero
    return bool(two[nonzero].all())


def find_bicyclic_witness(S):
    """First pair ``(p, q)`` with ``p q = 1`` and ``q p != 1``, or ``None``.

    In a monoid such a pair generates a copy of the bicyclic monoid, so on a
    finite monoid the answer is always ``None``.
    """
    if S.identity is None:
        raise MissingIdentityError("bicyclic witness search needs a marked identity")
    t = S.table
    one = S.identity
    hits = np.argwhere((t == one) & (t.T != one))
    if hits.size:
        return int(hits[0, 0]), int(hits[0, 1])
    return None


def monogenic_profile(S, x):
    """``(index, period)`` of the cyclic subsemigroup generated by ``x``."""
    seen = {}
    power = x
    k = 1
    while power not in seen:
        seen[power] = k
        power = int(S.table[power, x])
        k += 1
    index = seen[power]
    return index, k - index


# ---------------------------------------------------------------------------
# maps
# ---------------------------------------------------------------------------


class ElementMap:
    """A total map from the elements of one semigroup to those of another."""

    __slots__ = ("source_order", "target_order", "image")

    def __init__(self, image, target_order, source_order=None):
        try:
            image = np.array(image, dtype=np.int64).reshape(-1)
        except (TypeError, ValueError):
            raise MalformedInputError("map image must be a sequence of integers") from None
        if source_order is not None and image.shape[0] != source_order:
            raise MalformedInputError(f"map has {image.shape[0]} entries, source order is {source_order}")
        if image.size and (image.min() < 0 or image.max() >= target_order):
            raise MalformedInputError(f"map image leaves [0, {target_order})")
        image.setflags(write=False)
        self.image = image
        self.source_order = int(image.shape[0])
        self.target_order = int(target_order)

    def __call__(self, x):
        return int(self.image[x])

    def __len__(self):
        return self.source_order

    def __eq__(self, other):
        if not isinstance(other, ElementMap):
            return NotImplemented
        return self.target_order == other.target_order and np.array_equal(self.image, other.image)

    def __hash__(self):
        return hash((self.target_order, self.image.tobytes()))

    def __repr__(self):
        return f"ElementMap({self.image.tolist()}, target_order={self.target_order})"

    def is_bijective(self):
        return self.source_order == self.target_order and len(np.unique(self.image)) == self.source_order

    def then(self, other):
        """``other`` after ``self``."""
        if other.source_order != self.target_order:
            raise MalformedInputError("maps do not compose")
        return ElementMap(other.image[self.image], other.target_order)

    def inverse(self):
        if not self.is_bijective():
            raise DomainError("only a bijection has an inverse")
        inv = np.empty(self.source_order, dtype=np.int64)
        inv[self.image] = np.arange(self.source_order)
        return ElementMap(inv, self.source_order)

    @classmethod
    def identity(cls, n):
        return cls(np.arange(n), n)


def is_homomorphism(S, T, f) -> Verdict:
    """``f(x y) == f(x) f(y)`` for all pairs; the witness is the first failing ``(x, y)``."""
    if not isinstance(f, ElementMap):
        f = ElementMap(f, T.order)
    if f.source_order != S.order or f.target_order != T.order:
        raise MalformedInputError(
            f"map is {f.source_order}->{f.target_order}, semigroups are {S.order}->{T.order}"
        )
    img = f.image
    lhs = img[S.table]
    rhs = T.table[img[:, None], img[None, :]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        x, y = (int(v) for v in bad[0])
        return Verdict(False, (x, y), f"f({x}*{y}) != f({x}) f({y})")
    return Verdict(True)


# ---------------------------------------------------------------------------
# isomorphism search
# ---------------------------------------------------------------------------


def _element_signatures(S):
    def compute():
        t = S.table
        n = S.order
        ar = np.arange(n)
        g = green_relations(S)
        sizes = {rel: g.sizes(rel)[g.of(rel)] for rel in "RLHJ"}
        diag = t[ar, ar]
        square_roots = np.bincount(diag, minlength=n)
        idem = diag == ar
        left_fixed = (t == ar[None, :]).sum(axis=0)  # #{s : s x = x}
        right_fixed = (t == ar[:, None]).sum(axis=1)  # #{s : x s = x}
        sigs = []
        for x in range(n):
            sigs.append((
                bool(idem[x]),
                monogenic_profile(S, x),
                int(sizes["R"][x]), int(sizes["L"][x]), int(sizes["H"][x]), int(sizes["J"][x]),
                int(square_roots[x]), int(left_fixed[x]), int(right_fixed[x]),
            ))
        return sigs

    return S.cached("signatures", compute)


def _generating_set(S, sigs):
    counts = {}
    for s in sigs:
        counts[s] = counts.get(s, 0) + 1
    order = sorted(range(S.order), key=lambda x: (counts[sigs[x]], x))
    t = S.table
    inside = np.zeros(S.order, dtype=bool)
    gens = []
    members = []
    for x in order:
        if inside[x]:
            continue
        gens.append(x)
        queue = [x]
        inside[x] = True
        members.append(x)
        while queue:
            u = queue.pop()
            for v in list(members):
                for p in (int(t[u, v]), int(t[v, u])):
                    if not inside[p]:
                        inside[p] = True
                        members.append(p)
                        queue.append(p)
        if inside.all():
            break
    return gens


def _extend(S, T, sigs_s, sigs_t, fwd, bwd, domain, x, y):
    """Assign ``x -> y`` and propagate through products; False on conflict."""
    if fwd[x] >= 0:
        return fwd[x] == y
    if bwd[y] >= 0 or sigs_s[x] != sigs_t[y]:
        return False
    s_tab = S.table
    t_tab = T.table
    fwd[x] = y
    bwd[y] = x
    domain.append(x)
    queue = [x]
    while queue:
        u = queue.pop()
        for v in list(domain):
            for a, b in ((u, v), (v, u)):
                p = s_tab[a, b]
                q = t_tab[fwd[a], fwd[b]]
                if fwd[p] < 0:
                    if bwd[q] >= 0 or sigs_s[p] != sigs_t[q]:
                        return False
                    fwd[p] = q
                    bwd[q] = p
                    domain.append(int(p))
                    queue.append(int(p))
                elif fwd[p] != q:
                    return False
    return True


def semigroups_isomorphic(S, T, max_order=None):
    """An isomorphism ``S -> T`` as an ElementMap, or ``None``.

    Backtracks over images of a small generating set of ``S``, pruned by
    per-element invariants (idempotency, monogenic index and period, Green
    class sizes, square-root and one-sided-fixer counts).
    """
    bound = config.max_iso_order() if max_order is None else max_order
    if max(S.order, T.order) > bound:
        raise SizeLimitError(f"isomorphism search refused: order {max(S.order, T.order)} > bound {bound}")
    if S.order != T.order:
        return None
    sigs_s = _element_signatures(S)
    sigs_t = _element_signatures(T)
    if sorted(sigs_s) != sorted(sigs_t):
        return None
    gens = _generating_set(S, sigs_s)
    candidates = [[y for y in range(T.order) if sigs_t[y] == sigs_s[g]] for g in gens]
    n = S.order

    def search(level, fwd, bwd, domain):
        if level == len(gens):
            return fwd if len(domain) == n else None
        g = gens[level]
        if fwd[g] >= 0:
            return search(level + 1, fwd, bwd, domain)
        for y in candidates[level]:
            if bwd[y] >= 0:
                continue
            f2, b2, d2 = fwd.copy(), bwd.copy(), list(domain)
            if _extend(S, T, sigs_s, sigs_t, f2, b2, d2, g, y):
                found = search(level + 1, f2, b2, d2)
                if found is not None:
                    return found
        return None

    fwd = np.full(n, -1, dtype=np.int64)
    bwd = np.full(n, -1, dtype=np.int64)
    found = search(0, fwd, bwd, [])
    if found is None:
        return None
    iso = ElementMap(found, T.order)
    if not (iso.is_bijective() and is_homomorphism(S, T, iso)):
        raise InvariantViolation("isomorphism search produced an invalid map")
    return iso


def is_group(S):
    """True iff ``S`` has an identity and every row and column is a permutation."""
    if find_identity(S) is None:
        return False
    ar = np.arange(S.order)
    t = S.table
    return bool(np.all(np.sort(t, axis=1) == ar) and np.all(np.sort(t, axis=0) == ar[:, None]))


def direct_product(S, T):
    """``S x T`` with ``(s, t)`` at index ``s * |T| + t``."""
    m = T.order
    n = S.order * m
    idx = np.arange(n)
    s, t = np.divmod(idx, m)
    table = S.table[s[:, None], s[None, :]] * m + T.table[t[:, None], t[None, :]]

    def pair_marker(a, b):
        return None if a is None or b is None else a * m + b

    names = [f"({S.name(a)},{T.name(b)})" for a, b in zip(s, t)]
    return FiniteSemigroup(table, zero=pair_marker(S.zero, T.zero),
                           identity=pair_marker(S.identity, T.identity), names=names, check=False)
