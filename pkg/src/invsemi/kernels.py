"""Hot table kernels.

Each kernel exists twice: a numba ``@njit`` version built on scalar loops and
a pure-numpy version built on whole-table vectorized passes.  The public
names at the bottom dispatch to one of them according to ``BACKEND``, chosen
once at import from ``INVSEMI_BACKEND`` (falling back to numpy when numba
cannot be imported).  Both families are always importable so tests and the
benchmark can compare them directly.

All tables are ``int64`` arrays of shape ``(n, n)``.
"""

import numpy as np

from . import config

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def decorator(func):
            return func

        return decorator


# ---------------------------------------------------------------------------
# associativity
# ---------------------------------------------------------------------------


@njit(cache=True)
def _assoc_violation_numba(table):
    n = table.shape[0]
    for x in range(n):
        row = table[x]
        for y in range(n):
            xy = row[y]
            left_row = table[xy]
            y_row = table[y]
            for z in range(n):
                if left_row[z] != row[y_row[z]]:
                    return x, y, z
    return -1, -1, -1


def _assoc_violation_numpy(table):
    n = table.shape[0]
    for x in range(n):
        # left[y, z] = (x*y)*z ; right[y, z] = x*(y*z)
        left = table[table[x]]
        right = table[x][table]
        bad = np.flatnonzero(left != right)
        if bad.size:
            y, z = divmod(int(bad[0]), n)
            return x, y, z
    return -1, -1, -1


# ---------------------------------------------------------------------------
# congruence closure
# ---------------------------------------------------------------------------


@njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit(cache=True)
def _canonical_labels(parent):
    n = parent.shape[0]
    labels = np.full(n, -1, dtype=np.int64)
    block_of_root = np.full(n, -1, dtype=np.int64)
    nxt = 0
    for x in range(n):
        r = _find(parent, x)
        if block_of_root[r] < 0:
            block_of_root[r] = nxt
            nxt += 1
        labels[x] = block_of_root[r]
    return labels


@njit(cache=True)
def _closure_numba(table, seed_labels, pairs):
    n = table.shape[0]
    parent = np.arange(n, dtype=np.int64)
    # every successful union pushes one pair, so n + len(pairs) slots suffice
    queue_u = np.empty(n + pairs.shape[0], dtype=np.int64)
    queue_v = np.empty(n + pairs.shape[0], dtype=np.int64)
    head = 0
    tail = 0
    first = np.full(seed_labels.max() + 1, -1, dtype=np.int64)
    for x in range(n):
        b = seed_labels[x]
        if first[b] < 0:
            first[b] = x
        else:
            ru = _find(parent, first[b])
            rv = _find(parent, x)
            if ru != rv:
                parent[rv] = ru
                queue_u[tail] = first[b]
                queue_v[tail] = x
                tail += 1
    for k in range(pairs.shape[0]):
        ru = _find(parent, pairs[k, 0])
        rv = _find(parent, pairs[k, 1])
        if ru != rv:
            parent[rv] = ru
            queue_u[tail] = pairs[k, 0]
            queue_v[tail] = pairs[k, 1]
            tail += 1
    while head < tail:
        u = queue_u[head]
        v = queue_v[head]
        head += 1
        for s in range(n):
            a = table[s, u]
            b = table[s, v]
            ra = _find(parent, a)
            rb = _find(parent, b)
            if ra != rb:
                parent[rb] = ra
                queue_u[tail] = a
                queue_v[tail] = b
                tail += 1
            a = table[u, s]
            b = table[v, s]
            ra = _find(parent, a)
            rb = _find(parent, b)
            if ra != rb:
                parent[rb] = ra
                queue_u[tail] = a
                queue_v[tail] = b
                tail += 1
    return _canonical_labels(parent)


@njit(cache=True)
def _principal_batch_numba(table, pairs):
    n = table.shape[0]
    out = np.empty((pairs.shape[0], n), dtype=np.int64)
    identity = np.arange(n, dtype=np.int64)
    for k in range(pairs.shape[0]):
        out[k] = _closure_numba(table, identity, pairs[k : k + 1])
    return out


def _merge_edges_numpy(rep, a, b):
    """Coarsen ``rep`` (block minimum per element) by the edges ``a[i] ~ b[i]``."""
    rep = rep.copy()
    while True:
        old = rep.copy()
        m = np.minimum(rep[a], rep[b])
        np.minimum.at(rep, a, m)
        np.minimum.at(rep, b, m)
        # pull every element down to the representative of its representative
        while True:
            jumped = rep[rep]
            if np.array_equal(jumped, rep):
                break
            rep = jumped
        if np.array_equal(rep, old):
            return rep


def _labels_from_rep(rep):
    # unique values are block minima, so sorted order is order of minimum member
    _, inverse = np.unique(rep, return_inverse=True)
    return inverse.astype(np.int64).reshape(-1)


def _closure_numpy(table, seed_labels, pairs):
    n = table.shape[0]
    idx = np.arange(n, dtype=np.int64)
    _, first, inverse = np.unique(seed_labels, return_index=True, return_inverse=True)
    rep = first[inverse.reshape(-1)].astype(np.int64)
    if pairs.shape[0]:
        rep = _merge_edges_numpy(rep, pairs[:, 0].astype(np.int64), pairs[:, 1].astype(np.int64))
    while True:
        # x ~ rep[x] must survive every one-sided translation
        left_a = table[:, idx].reshape(-1)
        left_b = table[:, rep].reshape(-1)
        right_a = table[idx, :].reshape(-1)
        right_b = table[rep, :].reshape(-1)
        a = np.concatenate([left_a, right_a])
        b = np.concatenate([left_b, right_b])
        new_rep = _merge_edges_numpy(rep, a, b)
        if np.array_equal(new_rep, rep):
            return _labels_from_rep(rep)
        rep = new_rep


def _principal_batch_numpy(table, pairs):
    n = table.shape[0]
    identity = np.arange(n, dtype=np.int64)
    out = np.empty((pairs.shape[0], n), dtype=np.int64)
    for k in range(pairs.shape[0]):
        out[k] = _closure_numpy(table, identity, pairs[k : k + 1])
    return out


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

KERNELS = {
    "numba": {
        "assoc_violation": _assoc_violation_numba,
        "closure": _closure_numba,
        "principal_batch": _principal_batch_numba,
    },
    "numpy": {
        "assoc_violation": _assoc_violation_numpy,
        "closure": _closure_numpy,
        "principal_batch": _principal_batch_numpy,
    },
}


def _select_backend():
    wanted = config.requested_backend()
    if wanted not in KERNELS:
        raise ValueError(f"INVSEMI_BACKEND must be 'numba' or 'numpy', got {wanted!r}")
    if wanted == "numba" and not NUMBA_AVAILABLE:  # pragma: no cover
        return "numpy"
    return wanted


BACKEND = _select_backend()


def assoc_violation(table):
    """First ``(x, y, z)`` in lexicographic order with ``(xy)z != x(yz)``, else ``None``."""
    x, y, z = KERNELS[BACKEND]["assoc_violation"](table)
    if x < 0:
        return None
    return int(x), int(y), int(z)


def closure(table, seed_labels, pairs):
    """Canonical labels of the smallest congruence coarser than ``seed_labels`` merging ``pairs``."""
    pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    _, seed_labels = np.unique(np.asarray(seed_labels, dtype=np.int64), return_inverse=True)
    seed_labels = seed_labels.astype(np.int64).reshape(-1)
    return KERNELS[BACKEND]["closure"](table, seed_labels, pairs)


def principal_batch(table, pairs):
    """Row ``k`` holds the canonical labels of the congruence generated by ``pairs[k]``."""
    pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    return KERNELS[BACKEND]["principal_batch"](table, pairs)
