"""Finite verification suites for the structure results on Brandt semigroups.

Each suite returns a list of ``Check`` records; ``run`` executes a selection
and the CLI turns the outcome into an exit code.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from . import corpus
from .bicyclic import P, Q, ONE, bicyclic_inverse, bicyclic_mul
from .congruences import hom_h, is_congruence, is_congruence_free
from .constructions import brandt_extension, matrix_units
from .core import (
    find_bicyclic_witness,
    idempotents,
    is_group,
    is_homomorphism,
    is_inverse_semigroup,
    relabel,
    semigroups_isomorphic,
)
from .structure import block_partition, block_translation, decompose_brandt, is_completely_0_simple_inverse


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def suite_brandt_roundtrip(seed=0):
    rng = np.random.default_rng(seed)
    out = []
    for (gname, G), lam in itertools.product(corpus.groups().items(), range(1, 5)):
        B = brandt_extension(G, lam)
        S = relabel(B, rng.permutation(B.order))
        d = decompose_brandt(S)
        ok = (
            d.lam == lam
            and semigroups_isomorphic(d.group, G) is not None
            and d.iso.is_bijective()
            and bool(is_homomorphism(S, d.target, d.iso))
        )
        out.append(Check("brandt-roundtrip", f"B{lam}({gname})", ok, f"lambda={d.lam} |G|={d.group.order}"))
    return out


def suite_matrix_units_free():
    out = []
    for lam in (2, 3, 4):
        M = matrix_units(lam)
        v = is_congruence_free(M)
        out.append(Check("matrix-units-free", f"MU{lam}", v.holds, f"order {M.order}"))
    return out


def suite_brandt_not_free():
    out = []
    for (gname, G), lam in itertools.product(corpus.groups().items(), range(1, 5)):
        if G.order < 2:
            continue
        B = brandt_extension(G, lam)
        v = is_congruence_free(B)
        _, ker = hom_h(B)
        ok = (
            not v.holds
            and bool(is_congruence(B, v.witness))
            and bool(is_congruence(B, ker))
            and ker.num_blocks == lam * lam + 1
        )
        out.append(Check("brandt-not-free", f"B{lam}({gname})", ok, f"kernel of h has {ker.num_blocks} blocks"))
    return out


def suite_blocks():
    out = []
    for name, S in corpus.semigroups().items():
        if S.zero is None or not is_completely_0_simple_inverse(S):
            continue
        bp = block_partition(S)
        sizes = {len(b) for b in bp.blocks().values()}
        ok = len(bp.blocks()) == bp.lam ** 2 and len(sizes) == 1 and len(idempotents(S)) == bp.lam + 1
        coords = list(itertools.product(range(bp.lam), repeat=2))
        for src, dst in itertools.product(coords, coords):
            if not block_translation(S, bp, src, dst).is_bijective():
                ok = False
        out.append(Check("blocks", name, ok, f"lambda={bp.lam} block size {sizes}"))
    return out


def suite_bicyclic():
    out = []
    for name, S in corpus.monoids().items():
        w = find_bicyclic_witness(S)
        out.append(Check("bicyclic", name, w is None, "no pq = 1 with qp != 1" if w is None else f"witness {w}"))
    rel = bicyclic_mul(P, Q) == ONE and bicyclic_mul(Q, P) != ONE
    out.append(Check("bicyclic", "pq = 1, qp != 1", rel))
    elems = [(a, b) for a in range(8) for b in range(8)]
    assoc = all(
        bicyclic_mul(bicyclic_mul(x, y), z) == bicyclic_mul(x, bicyclic_mul(y, z))
        for x in elems for y in elems[::3] for z in elems[::5]
    )
    out.append(Check("bicyclic", "associativity sample", assoc))
    phipsi = all(
        bicyclic_mul(x, bicyclic_inverse(x)) == (x[0], x[0]) and bicyclic_mul(bicyclic_inverse(x), x) == (x[1], x[1])
        for x in elems
    )
    out.append(Check("bicyclic", "x x^-1 = (a, a), x^-1 x = (b, b)", phipsi))
    return out


def suite_unique_idempotent_group():
    out = []
    for name, S in corpus.semigroups().items():
        if is_inverse_semigroup(S) and len(idempotents(S)) == 1:
            out.append(Check("unique-idempotent", name, is_group(S)))
    return out


SUITES = {
    "brandt-roundtrip": suite_brandt_roundtrip,
    "matrix-units-free": suite_matrix_units_free,
    "brandt-not-free": suite_brandt_not_free,
    "blocks": suite_blocks,
    "bicyclic": suite_bicyclic,
    "unique-idempotent": suite_unique_idempotent_group,
}


def run(names=None):
    names = list(SUITES) if not names else names
    results = []
    for name in names:
        results.extend(SUITES[name]())
    return results
