import pytest

from codensity.fincat.category import FinCategory
from codensity.fincat.ordinals import OrdMap, ord_id
from codensity.oracles import chain_count, nerve_level_count
from codensity.simplex.free import (constant_presentation, delta_inj_presentation, free_map_filtration,
                                    horn_annotation_check, ndelta_plus_presentation, validate_presentation,
                                    without_horn_generator)
from codensity.simplex.ndelta import (Chain, closure_check, count_chains, count_factorizations, delta1_simplex,
                                      enumerate_ndelta_plus, f_kn, join_decompose_chain, join_word,
                                      nondegenerate_basis, verify_basis_delta_inj, verify_basis_ndelta_plus,
                                      verify_horn_generators_ndelta_plus)
from codensity.simplex.sset import (TruncatedSSet, boundary, ez_uniqueness, horn, horn_lifting_check,
                                    identity_map, inclusion_map, nerve, point, simplicial_identities,
                                    standard_simplex, terminal_map)

from . import oracles as ref


def z2():
    return FinCategory.from_group([0, 1], lambda a, b: (a + b) % 2, 0, name="Z/2")


# ---- truncated simplicial sets ------------------------------------------------

def test_nerve_sizes_match_oracle():
    X = nerve(FinCategory.chain(["a", "b", "c"]), 3)
    assert [len(L) for L in X.levels] == ref.NERVE_CHAIN3
    assert ref.NERVE_CHAIN3 == [nerve_level_count(3, l) for l in range(4)]


@pytest.mark.parametrize("X,sizes", [
    (lambda: standard_simplex(2, 3), ref.DELTA2),
    (lambda: boundary(2, 3), ref.BOUNDARY_DELTA2),
    (lambda: horn(2, 0, 3), ref.HORN_2_0),
])
def test_standard_shapes(X, sizes):
    X = X()
    assert [len(L) for L in X.levels] == sizes
    assert simplicial_identities(X).ok


def test_point_is_one_simplex_per_level():
    P = point(3)
    assert [len(L) for L in P.levels] == [1, 1, 1, 1]
    assert P.nondegenerate(1) == []


def test_nondegenerate_simplices_of_delta2():
    X = standard_simplex(2, 3)
    assert [len(X.nondegenerate(n)) for n in range(4)] == [3, 3, 1, 0]


def test_identities_and_ez_on_nerves():
    for C in (z2(), FinCategory.chain(["0", "1", "2"])):
        X = nerve(C, 3)
        assert simplicial_identities(X).ok
        assert ez_uniqueness(X).ok


def test_broken_face_is_caught():
    X = standard_simplex(1, 2)
    bad = dict(X.d[(1, 0)])
    k = next(iter(bad))
    bad[k] = next(v for v in X.levels[0] if v != bad[k])
    Y = TruncatedSSet(X.N, X.levels, {**X.d, (1, 0): bad}, X.s, "broken")
    assert not simplicial_identities(Y).ok


def test_round_trip_through_dict():
    X = nerve(z2(), 2)
    Y = TruncatedSSet.from_dict(X.to_dict())
    assert Y.levels == [tuple(L) for L in X.levels]
    assert Y.d == X.d and Y.s == X.s


def test_from_dict_rejects_missing_face():
    doc = standard_simplex(1, 1).to_dict()
    del doc["faces"]["1,0"]
    with pytest.raises(ValueError):
        TruncatedSSet.from_dict(doc)


def test_simplicial_maps_validate():
    X = standard_simplex(2, 2)
    assert inclusion_map(horn(2, 1, 2), X).validate().ok
    assert identity_map(X).validate().ok
    assert terminal_map(X).validate().ok


def test_group_nerve_is_kan():
    rep = horn_lifting_check(terminal_map(nerve(z2(), 3)), "kan", 3)
    assert rep.ok and rep.instances > 0


def test_arrow_nerve_inner_but_not_kan():
    X = nerve(FinCategory.chain(["0", "1"]), 3)
    assert horn_lifting_check(terminal_map(X), "inner", 3).ok
    kan = horn_lifting_check(terminal_map(X), "kan", 2)
    assert kan.fails(2, 0)
    assert any((w["n"], w["i"]) == (2, 0) for w in kan.failures)


def test_identity_map_lifts_everything():
    X = standard_simplex(1, 2)
    assert horn_lifting_check(identity_map(X), "kan", 2).ok


# ---- chains of ordinal maps ---------------------------------------------------

@pytest.mark.parametrize("k", range(3))
@pytest.mark.parametrize("B", range(5))
def test_chain_counts_against_enumeration(k, B):
    assert count_chains(k, B) == ref.CHAIN_COUNTS[k][B] == chain_count(k, B)
    assert count_chains(k, B, True) == ref.INJECTIVE_CHAIN_COUNTS[k][B] == chain_count(k, B, True)
    if B <= 3:
        assert len(enumerate_ndelta_plus(k, B)) == ref.CHAIN_COUNTS[k][B]


def test_level3_chain_count():
    assert count_chains(3, 4) == ref.CHAIN_COUNT_LEVEL3_B4


def test_chain_faces():
    f, g = OrdMap(2, 2, (0, 0)), OrdMap(2, 3, (1, 2))
    c = Chain.of(f, g)
    assert c.level == 2
    assert c.face(0) == Chain.of(g)
    assert c.face(2) == Chain.of(f)
    assert c.face(1) == Chain.of(OrdMap(2, 3, (1, 1)))
    assert c.degen(1).maps[1] == ord_id(2)
    assert c.degen(0).is_degenerate()
    assert not c.is_degenerate()


def test_chain_rejects_mismatched_maps():
    with pytest.raises(ValueError):
        Chain((1, 2), (OrdMap(2, 2, (0, 1)),))


def test_join_decomposition_round_trip():
    for c in enumerate_ndelta_plus(2, 3):
        parts = join_decompose_chain(c)
        assert all(p.is_basis() for p in parts)
        assert join_word(parts, 2) == c
        assert len(parts) == c.cards[-1]


def test_unique_factorization_small_window():
    rep = verify_basis_ndelta_plus(2, 3)
    assert rep.ok, rep.problems
    assert rep.basis_per_level == ref.BASIS_B3


def test_wrong_generators_are_rejected():
    # chains ending at [1] do not generate: [0] itself has no factorization
    rep = verify_basis_ndelta_plus(1, 2, is_generator=lambda c: c.cards[-1] == 2)
    assert not rep.ok


def test_empty_chain_has_one_factorization():
    assert count_factorizations(Chain.const(0, 1), Chain.is_basis) == 1
    assert count_factorizations(Chain.const(2, 1), Chain.is_basis) == 1


def test_window_closed_under_faces_and_degeneracies():
    assert closure_check(2, 3).ok


def test_horn_generators_partition():
    assert [len(nondegenerate_basis(n, 4)) for n in range(3)] == ref.NONDEG_B4
    rep = verify_horn_generators_ndelta_plus(2, 4)
    assert rep.ok, rep.problems
    assert rep.indices == {0}
    assert [rep.levels[n]["H"] for n in range(3)] == ref.HORN_GENS_B4[:3]
    assert rep.levels[2]["H_next"] == ref.HORN_GENS_B4[3]
    assert rep.verdict.startswith("left anodyne")


def test_wrong_horn_index_is_rejected():
    rep = verify_horn_generators_ndelta_plus(1, 3, index=lambda h: h.level)
    assert not rep.ok


def test_injective_basis():
    rep = verify_basis_delta_inj(4)
    assert rep.ok, rep.problems
    assert rep.basis_per_level == {n: n + 1 for n in range(5)}


def test_f_kn_matches_delta1():
    for n in range(4):
        for k in range(n + 2):
            c = f_kn(k, n)
            assert c.cards == delta1_simplex(k, n)
            assert c.is_injective()
    assert f_kn(0, 2) == Chain.const(1, 2)


# ---- free presentations -------------------------------------------------------

def test_ndelta_presentation_valid():
    rep = validate_presentation(ndelta_plus_presentation(2, 2))
    assert rep.ok, rep.problems


def test_horn_annotation():
    P = ndelta_plus_presentation(3, 3)
    assert horn_annotation_check(P, "left").ok
    assert not horn_annotation_check(P, "inner").ok
    assert not horn_annotation_check(without_horn_generator(P), "left").ok


def test_filtration_stage_counts():
    rep = free_map_filtration(ndelta_plus_presentation(3, 3), anodyne=True)
    assert rep.ok, rep.problems
    assert rep.stabilized_at == 3
    for stage in rep.stages:
        assert stage.new_by_level == stage.predicted
        if stage.k in ref.FILTRATION_N3_B3:
            got = [stage.new_by_level[n] for n in range(stage.k, 4)]
            assert got == ref.FILTRATION_N3_B3[stage.k]
    assert [a["H"] for a in rep.anodyne] == ref.ANODYNE_H_N3_B3
    assert all(a["inside_skeleton"] for a in rep.anodyne)


def test_filtration_of_degenerate_cases():
    assert free_map_filtration(constant_presentation(["a", "b"], 3)).stabilized_at == 0
    assert free_map_filtration(delta_inj_presentation(3)).stabilized_at == 1
