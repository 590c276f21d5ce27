import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from invsemi import corpus
from invsemi.congruences import (
    Congruence,
    all_congruences,
    congruence_generated,
    hom_h,
    image_of,
    is_congruence,
    is_congruence_free,
    kernel,
    principal_congruence,
    principal_congruences,
    quotient,
    rees_congruence,
)
from invsemi.constructions import brandt_extension, chain_semilattice, cyclic_group, matrix_units
from invsemi.core import FiniteSemigroup, is_homomorphism, semigroups_isomorphic
from invsemi.errors import DomainError, SizeLimitError, UnsupportedStructureError, ValidationError
from invsemi.structure import decompose_brandt

B2_TABLE = [[0, 0, 0, 0, 0], [0, 1, 2, 0, 0], [0, 0, 0, 1, 2], [0, 3, 4, 0, 0], [0, 0, 0, 3, 4]]
SMALL = sorted(corpus.small(8).items())


def b2z2():
    return brandt_extension(cyclic_group(2), 2)


def _blocks(c):
    return sorted(c.blocks())


# --- Congruence value type --------------------------------------------------


def test_canonical_form():
    c = Congruence([5, 5, 2, 5, 2])
    assert c.labels.tolist() == [0, 0, 1, 0, 1]
    assert c.blocks() == [(0, 1, 3), (2, 4)]
    assert c == Congruence.from_blocks([[4, 2], [3, 1, 0]])
    assert c.num_blocks == 2 and c.block_sizes() == [3, 2]


@pytest.mark.parametrize("blocks", [[[0, 1], [1, 2]], [[0], [2]], [[0, 1], [3]], [[]]])
def test_from_blocks_rejects_non_partitions(blocks):
    with pytest.raises(ValidationError):
        Congruence.from_blocks(blocks, order=3)


def test_refinement_and_join():
    a = Congruence.from_blocks([[0, 1], [2], [3]])
    b = Congruence.from_blocks([[0], [1, 2], [3]])
    j = a.join(b)
    assert j.blocks() == [(0, 1, 2), (3,)]
    assert a <= j and b <= j and not j <= a
    assert Congruence.identity(4) <= a <= Congruence.universal(4)


@given(st.lists(st.integers(0, 5), min_size=6, max_size=6), st.lists(st.integers(0, 5), min_size=6, max_size=6))
def test_join_is_least_upper_bound_of_partitions(xs, ys):
    a, b = Congruence(xs), Congruence(ys)
    j = a.join(b)
    assert a <= j and b <= j
    # any partition above both is above the join
    for labels in oracles.set_partitions(6):
        c = Congruence(labels)
        if a <= c and b <= c:
            assert j <= c


# --- principal congruences ---------------------------------------------------


def test_b2_unit_pair_is_universal():
    S = FiniteSemigroup(B2_TABLE, zero=0)
    c = principal_congruence(S, 1, 4)
    assert c.is_universal()
    assert oracles.congruence_closure(B2_TABLE, [(1, 4)]) == [tuple(range(5))]


def test_z4_coset_congruence():
    c = principal_congruence(cyclic_group(4), 0, 2)
    assert c.blocks() == [(0, 2), (1, 3)]


@pytest.mark.parametrize("name,S", SMALL)
def test_diagonal_pair_gives_identity(name, S):
    for x in range(S.order):
        assert principal_congruence(S, x, x).is_identity()


@pytest.mark.parametrize("name,S", SMALL)
def test_principal_closure_matches_fixpoint_oracle(name, S, backend):
    t = oracles.rows(S)
    for x, y in itertools.combinations(range(S.order), 2):
        assert _blocks(principal_congruence(S, x, y)) == oracles.congruence_closure(t, [(x, y)])


@pytest.mark.parametrize("name,S", SMALL)
def test_principal_is_least_congruence_merging_pair(name, S):
    t = oracles.rows(S)
    congs = [p for p in oracles.set_partitions(S.order) if oracles.is_compatible(t, p)]
    for x, y in itertools.combinations(range(S.order), 2):
        c = principal_congruence(S, x, y)
        for p in congs:
            if p[x] == p[y]:
                assert c <= Congruence(p)


def test_generated_with_base():
    Z4 = cyclic_group(4)
    base = principal_congruence(Z4, 0, 2)
    assert congruence_generated(Z4, [(0, 1)], base=base).is_universal()
    assert congruence_generated(Z4, [], base=base) == base


# --- is_congruence ----------------------------------------------------------


def test_kernel_of_h_on_b2z2_is_congruence():
    B = b2z2()
    _, ker = hom_h(B)
    assert is_congruence(B, ker)
    assert _blocks(ker) == [(0,), (1, 3), (2, 4), (5, 7), (6, 8)]


def test_split_partition_on_b2_fails_with_witness():
    S = FiniteSemigroup(B2_TABLE, zero=0)
    v = is_congruence(S, [[1], [0, 2, 3, 4]])
    assert not v
    (x, y), s, side = v.witness
    labels = Congruence.from_blocks([[1], [0, 2, 3, 4]]).labels
    assert labels[x] == labels[y]
    t = B2_TABLE
    a, b = (t[s][x], t[s][y]) if side == "left" else (t[x][s], t[y][s])
    assert labels[a] != labels[b]


@pytest.mark.parametrize("name,S", SMALL)
def test_identity_and_universal_are_congruences(name, S):
    assert is_congruence(S, Congruence.identity(S.order))
    assert is_congruence(S, Congruence.universal(S.order))


def test_wrong_order_partition_rejected():
    with pytest.raises(ValidationError):
        is_congruence(cyclic_group(3), Congruence.identity(4))


@settings(max_examples=120)
@given(st.sampled_from(SMALL), st.data())
def test_is_congruence_matches_compatibility_oracle(item, data):
    _, S = item
    labels = data.draw(st.lists(st.integers(0, S.order - 1), min_size=S.order, max_size=S.order))
    assert bool(is_congruence(S, Congruence(labels))) == oracles.is_compatible(oracles.rows(S), labels)


# --- lattices -----------------------------------------------------------------


@pytest.mark.parametrize("S,count", [
    (cyclic_group(4), 3),
    (FiniteSemigroup(B2_TABLE, zero=0), 2),
    (chain_semilattice(2), 2),
    (b2z2(), 3),
])
def test_lattice_sizes(S, count):
    assert len(all_congruences(S)) == count


def test_z4_lattice_contents():
    lat = all_congruences(cyclic_group(4))
    assert [c.blocks() for c in lat] == [[(0,), (1,), (2,), (3,)], [(0, 2), (1, 3)], [(0, 1, 2, 3)]]
    assert lat.join.tolist() == [[0, 1, 2], [1, 1, 2], [2, 2, 2]]


@pytest.mark.parametrize("name,S", SMALL)
def test_lattice_matches_partition_enumeration(name, S):
    t = oracles.rows(S)
    expected = sorted(oracles.blocks_of(p) for p in oracles.set_partitions(S.order) if oracles.is_compatible(t, p))
    got = sorted(_blocks(c) for c in all_congruences(S))
    assert got == expected


@pytest.mark.parametrize("name,S", [(n, S) for n, S in sorted(corpus.small(20).items())])
def test_lattice_closed_under_join(name, S):
    lat = all_congruences(S)
    cs = list(lat)
    assert cs[0].is_identity() and cs[-1].is_universal()
    for i, j in itertools.product(range(len(cs)), repeat=2):
        joined = cs[i].join(cs[j])
        # join of congruences needs transitive closure only
        assert is_congruence(S, joined)
        assert cs[lat.join[i, j]] == joined


def test_lattice_size_bound(monkeypatch):
    monkeypatch.setenv("INVSEMI_MAX_LATTICE_ORDER", "4")
    with pytest.raises(SizeLimitError):
        all_congruences(matrix_units(2))
    assert len(all_congruences(matrix_units(2), max_order=5)) == 2


def test_principal_congruences_distinct():
    ps = principal_congruences(cyclic_group(4))
    assert len(ps) == len(set(ps)) == 2


# --- congruence-freeness ------------------------------------------------------


@pytest.mark.parametrize("lam", [2, 3, 4])
def test_matrix_units_are_congruence_free(lam):
    assert is_congruence_free(matrix_units(lam))


def test_b2z2_not_free_and_witness_is_kernel_of_h():
    B = b2z2()
    v = is_congruence_free(B)
    assert not v
    assert is_congruence(B, v.witness)
    assert v.witness == hom_h(B)[1]


def test_z4_not_free():
    v = is_congruence_free(cyclic_group(4))
    assert not v and v.witness.blocks() == [(0, 2), (1, 3)]


def test_order_one_rejected():
    with pytest.raises(DomainError):
        is_congruence_free(FiniteSemigroup([[0]]))


@pytest.mark.parametrize("name,S", [(n, S) for n, S in SMALL if S.order >= 2])
def test_freeness_matches_enumeration(name, S):
    t = oracles.rows(S)
    count = sum(oracles.is_compatible(t, p) for p in oracles.set_partitions(S.order))
    assert bool(is_congruence_free(S)) == (count == 2)


def test_witness_is_first_nonuniversal_seed():
    S = chain_semilattice(3)
    v = is_congruence_free(S)
    t = oracles.rows(S)
    first = next((x, y) for x, y in itertools.combinations(range(3), 2)
                 if len(oracles.congruence_closure(t, [(x, y)])) > 1)
    assert v.witness == principal_congruence(S, *first)


NONTRIVIAL_BRANDT = [
    (f"B{lam}({g})", lam, brandt_extension(G, lam))
    for g, G in sorted(corpus.groups().items()) for lam in (1, 2, 3, 4)
    if G.order >= 2 and lam * lam * G.order < 64
]


@pytest.mark.parametrize("name,lam,S", NONTRIVIAL_BRANDT)
def test_brandt_over_nontrivial_group_is_not_free(name, lam, S):
    v = is_congruence_free(S)
    assert not v and is_congruence(S, v.witness)
    _, ker = hom_h(S)
    assert is_congruence(S, ker) and ker.num_blocks == lam * lam + 1
    assert v.witness <= ker or v.witness == ker


# --- Rees congruences -----------------------------------------------------------


def test_rees_congruence_examples():
    C = chain_semilattice(3)
    assert rees_congruence(C, [0, 1]).blocks() == [(0, 1), (2,)]
    assert rees_congruence(C, [0]).is_identity()
    assert rees_congruence(C, range(3)).is_universal()
    with pytest.raises(ValidationError):
        rees_congruence(C, [1])


@pytest.mark.parametrize("name,S", SMALL)
def test_rees_congruences_of_all_ideals(name, S):
    for ideal in oracles.all_ideals(oracles.rows(S)):
        assert is_congruence(S, rees_congruence(S, ideal))


# --- hom_h, kernels and quotients ---------------------------------------------------


def test_hom_h_on_b2z2():
    B = b2z2()
    h, ker = hom_h(B)
    assert h(0) == 0
    for x in range(1, B.order):
        r, _, c = B.labels[x]
        assert matrix_units(2).name(h(x)) == f"({r},{c})"
    assert is_homomorphism(B, matrix_units(2), h)


def test_hom_h_kernel_b2z3():
    _, ker = hom_h(brandt_extension(cyclic_group(3), 2))
    assert sorted(ker.block_sizes()) == [1, 3, 3, 3, 3]


def test_hom_h_needs_labels():
    with pytest.raises(UnsupportedStructureError):
        hom_h(cyclic_group(3))
    B = b2z2()
    bad = list(B.labels)
    bad[1], bad[2] = bad[2], bad[1]
    with pytest.raises(UnsupportedStructureError):
        hom_h(B.replace(labels=bad))


def test_hom_h_on_decomposed_input(rng):
    from invsemi.core import relabel
    B = brandt_extension(cyclic_group(3), 3)
    S = relabel(B, rng.permutation(B.order))
    h, ker = hom_h(decompose_brandt(S).labelled(S))
    assert is_congruence(S, ker) and ker.num_blocks == 10


def test_quotient_by_kernel_of_h_is_matrix_units():
    B = b2z2()
    Q, proj = quotient(B, hom_h(B)[1])
    assert semigroups_isomorphic(Q, matrix_units(2)) is not None
    assert is_homomorphism(B, Q, proj)


@pytest.mark.parametrize("name,S", SMALL)
def test_quotient_by_identity_and_universal(name, S):
    Q, _ = quotient(S, Congruence.identity(S.order))
    assert semigroups_isomorphic(Q, S) is not None
    U, _ = quotient(S, Congruence.universal(S.order))
    assert U.order == 1


def test_quotient_rejects_non_congruence():
    S = FiniteSemigroup(B2_TABLE, zero=0)
    with pytest.raises(ValidationError):
        quotient(S, [[1], [0, 2, 3, 4]])


@pytest.mark.parametrize("name,S", SMALL)
def test_every_congruence_gives_homomorphic_quotient(name, S):
    for c in all_congruences(S):
        Q, proj = quotient(S, c)
        assert is_homomorphism(S, Q, proj)
        assert kernel(proj) == c
        assert semigroups_isomorphic(Q, image_of(Q, proj)) is not None


def test_kernel_quotient_isomorphic_to_image():
    B = brandt_extension(cyclic_group(2), 3)
    h, ker = hom_h(B)
    Q, _ = quotient(B, ker)
    assert semigroups_isomorphic(Q, image_of(matrix_units(3), h)) is not None
    assert np.array_equal(np.sort(np.unique(h.image)), np.arange(10))
