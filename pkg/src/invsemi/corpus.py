"""Named fixture semigroups shared by the verification suites and tests."""

from functools import lru_cache

from .constructions import (
    SandwichMatrix,
    adjoin_identity,
    adjoin_zero,
    brandt_extension,
    chain_semilattice,
    cyclic_group,
    dihedral_group,
    group_from_table,
    inverse_symmetric_monoid,
    klein_four_group,
    left_zero_semigroup,
    matrix_units,
    quaternion_group,
    rees_matrix,
    symmetric_group,
    trivial_semigroup,
)
from .core import direct_product


def _product_group(*factors):
    G = factors[0]
    for H in factors[1:]:
        G = direct_product(G, H)
    return group_from_table(G.table, names=G.names)


@lru_cache(maxsize=None)
def groups():
    """Groups of order 1 to 8, at least one per isomorphism type."""
    out = {f"Z{n}": cyclic_group(n) for n in range(1, 9)}
    z2 = cyclic_group(2)
    out["Klein"] = klein_four_group()
    out["S3"] = symmetric_group(3)
    out["Z2xZ4"] = _product_group(z2, cyclic_group(4))
    out["Z2xZ2xZ2"] = _product_group(z2, z2, z2)
    out["D4"] = dihedral_group(4)
    out["Q8"] = quaternion_group()
    return out


@lru_cache(maxsize=None)
def brandt_semigroups():
    """``B_lam(G)`` for every corpus group and ``lam`` in 1..4."""
    return {f"B{lam}({name})": brandt_extension(G, lam) for name, G in groups().items() for lam in range(1, 5)}


@lru_cache(maxsize=None)
def rees_semigroups():
    z2 = cyclic_group(2)
    return {
        "Rees(Z1;diag2)": rees_matrix(cyclic_group(1), SandwichMatrix([[0, None], [None, 0]])),
        "Rees(Z2;diag2)": rees_matrix(z2, SandwichMatrix([[0, None], [None, 0]])),
        "Rees(Z3;diag3)": rees_matrix(cyclic_group(3), SandwichMatrix([[0, None, None], [None, 0, None], [None, None, 0]])),
        # full sandwich matrix: completely 0-simple but not inverse
        "Rees(Z2;full2)": rees_matrix(z2, SandwichMatrix([[0, 0], [0, 1]])),
    }


@lru_cache(maxsize=None)
def misc_semigroups():
    return {
        "trivial": trivial_semigroup(),
        "LZ2": left_zero_semigroup(2),
        "LZ3": left_zero_semigroup(3),
        "chain2": chain_semilattice(2),
        "chain3": chain_semilattice(3),
        "chain4": chain_semilattice(4),
        "I1": inverse_symmetric_monoid(1),
        "I2": inverse_symmetric_monoid(2),
        "I3": inverse_symmetric_monoid(3),
        "MU1": matrix_units(1),
        "MU2": matrix_units(2),
        "MU3": matrix_units(3),
        "MU4": matrix_units(4),
        "Z3^0": adjoin_zero(cyclic_group(3)),
        "S3^0": adjoin_zero(symmetric_group(3)),
        "LZ2^0": adjoin_zero(left_zero_semigroup(2)),
    }


@lru_cache(maxsize=None)
def semigroups():
    """Every named fixture; Brandt semigroups above order 64 are left out."""
    out = dict(groups())
    out.update(misc_semigroups())
    out.update({k: v for k, v in brandt_semigroups().items() if v.order <= 64})
    out.update(rees_semigroups())
    return out


@lru_cache(maxsize=None)
def monoids():
    """Corpus members carrying an identity, plus every non-monoid with one adjoined."""
    out = {}
    for name, S in semigroups().items():
        if S.identity is not None:
            out[name] = S
        else:
            out[name + "^1"] = adjoin_identity(S)
    return out


def small(max_order):
    return {name: S for name, S in semigroups().items() if S.order <= max_order}
