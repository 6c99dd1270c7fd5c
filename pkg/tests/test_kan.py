import itertools

import pytest

from codensity.bkshadow.builtins import IdentityMonad, make_monad
from codensity.fincat.category import FinCategory
from codensity.fincat.concrete import FinSetCategory, FinVectF2
from codensity.kan.codensity import (CodensityMonad, codensity_value, d_preserving_check, restriction_map,
                                     retract_closure, retract_witness, terminality_count,
                                     unit_compatible_bijections)
from codensity.kan.cofinal import WitnessError, bk_sketch_witness, cofinality_witness_check, identity_witness
from codensity.kan.localization import codensity_by_limit, reflector_and_localization
from codensity.monadkit.laws import monad_law_check
from codensity.oracles import codensity_families, codensity_unit_is_bijective, double_dual
from codensity.util import FinMap, ResourceLimitError, skeleton

from . import oracles as ref

FINSET = FinSetCategory()


@pytest.mark.parametrize("D", [(2,), (1, 2, 4)])
def test_codensity_of_three(D):
    val = codensity_value(FINSET, D, 3)
    assert len(val) == ref.T_OF_3[D]
    assert set(val.elements) == set(codensity_families(3, D))
    assert all(val.is_natural(phi) for phi in val.elements)


@pytest.mark.parametrize("c", range(4))
@pytest.mark.parametrize("D", [(1,), (2,), (0, 1), (1, 3), (2, 3)])
def test_codensity_against_family_oracle(D, c):
    val = codensity_value(FINSET, D, c)
    assert sorted(val.elements) == sorted(codensity_families(c, D))


def test_unit_bijective_on_members_of_D():
    for r in range(1, 4):
        for D in itertools.combinations(range(4), r):
            for d in D:
                assert codensity_value(FINSET, D, d).unit().is_bijective()
    assert codensity_unit_is_bijective(3, [1, 2, 4])


def test_empty_D_gives_a_point():
    assert len(codensity_value(FINSET, [], 2)) == 1


def test_double_dual_shadow():
    for k in range(3):
        val = codensity_value(FinVectF2(), [1, 2], k)
        V, Vdd, eta = double_dual(k)
        dd = FinMap(tuple(V), tuple(Vdd), tuple(eta[v] for v in V))
        assert len(val) == len(Vdd) == 2 ** k
        assert unit_compatible_bijections(val.unit(), dd, limit=1)


def test_unit_compatible_bijections_respects_units():
    X = (0, 1)
    left = FinMap(X, ("a", "b"), ("a", "b"))
    assert len(unit_compatible_bijections(left, FinMap(X, ("p", "q"), ("q", "p")))) == 1
    assert unit_compatible_bijections(left, FinMap(X, ("p", "q"), ("p", "p"))) == []


def test_restriction_when_D_grows_by_a_retract():
    big, small = codensity_value(FINSET, [1, 2], 2), codensity_value(FINSET, [2], 2)
    assert restriction_map(big, small).is_bijective()


def test_codensity_monad_laws():
    T = CodensityMonad([1, 2])
    assert [len(T.obj(skeleton(n))) for n in range(4)] == [0, 1, 2, 8]
    assert monad_law_check(T, range(0, 3)).ok


def test_terminality():
    for D in ([1], [1, 2]):
        T = CodensityMonad(D)
        assert terminality_count(T, T, range(0, 4)) == 1
        assert terminality_count(IdentityMonad(), T, range(0, 4)) == 1
        assert d_preserving_check(T, [skeleton(d) for d in D])


def test_retracts():
    assert retract_closure(FINSET, [2], range(5)) == [1, 2]
    assert retract_closure(FINSET, [0, 3], range(5)) == [0, 1, 2, 3]
    d, i, r = retract_witness(FINSET, 1, [3])
    assert d == skeleton(3)
    assert FINSET.compose(r, i) == FINSET.identity(skeleton(1))
    assert retract_witness(FINSET, 2, [1]) is None


def test_resource_guard(monkeypatch):
    monkeypatch.setenv("CODENSITY_GUARD", "100")
    with pytest.raises(ResourceLimitError):
        codensity_value(FINSET, [4], 4)


# ---- localization ---------------------------------------------------------------------

def test_reflector_on_a_chain():
    C = FinCategory.chain(["a", "b", "c"])
    loc = reflector_and_localization(C, ["b", "c"])
    assert loc is not None and loc.ok, loc.checks
    assert {x: loc.L.on_obj(x) for x in C.objects} == {"a": "b", "b": "b", "c": "c"}
    for x in C.objects:
        assert codensity_by_limit(C, ["b", "c"], x)[0] == loc.L.on_obj(x)


def test_no_reflector_onto_a_disconnected_piece():
    assert reflector_and_localization(FinCategory.discrete(["x", "y"]), ["x"]) is None


def test_limit_over_an_empty_under_category():
    # nothing maps from c into D = {a}, so the limit is the terminal object
    C = FinCategory.chain(["a", "b", "c"])
    assert codensity_by_limit(C, ["a"], "c")[0] == "c"
    assert codensity_by_limit(C, ["a"], "a")[0] == "a"


# ---- cofinality witnesses ----------------------------------------------------------------

def test_identity_witness():
    C = FinCategory.chain(["a", "b"])
    assert cofinality_witness_check(identity_witness(C)).ok
    with pytest.raises(WitnessError):
        identity_witness(FinCategory.discrete(["x", "y"]))


@pytest.mark.parametrize("name,c,levels", [("powerset", 1, 2), ("maybe", 1, 3), ("identity", 2, 3)])
def test_sketch_witness(name, c, levels):
    rep = cofinality_witness_check(bk_sketch_witness(make_monad(name), c, levels))
    assert rep.ok, rep.problems
    assert rep.data["windowed"] and rep.data["conclusion"]["verdict"] == "1-initial"
