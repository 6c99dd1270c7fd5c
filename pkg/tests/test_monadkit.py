import json

import pytest

from codensity.bkshadow.builtins import PowersetMonad, make_monad
from codensity.monadkit.algebras import (algebra_search, check_algebra, free_algebra, isar_chain_check,
                                         lemma_retraction, retract_membership, split_resolution_search)
from codensity.monadkit.cobar import cobar
from codensity.monadkit.comparison import fakir_vs_codensity, monad_morphisms_from_identity
from codensity.monadkit.explicit import ExplicitMonad, monad_from_document, tabulate
from codensity.monadkit.fakir import FakirFunctor, fakir_oracle, fakir_report
from codensity.monadkit.laws import monad_law_check
from codensity.monadkit.walking import chain_lattice_algebra, walking_functoriality
from codensity.oracles import powerset_fakir
from codensity.util import FinMap, compose, skeleton

from . import oracles as ref

MONADS = [("identity", None), ("powerset", None), ("maybe", None), ("writer", {"n": 2}),
          ("affine", {"ring": "Z/2"}), ("nonempty_powerset", None)]


class IntersectionMonad(PowersetMonad):
    """Powerset with the wrong multiplication."""

    def _mult(self, X, tt):
        out = frozenset(X)
        for t in tt:
            out &= t
        return out


@pytest.mark.parametrize("name,params", MONADS)
def test_laws_on_small_window(name, params):
    rep = monad_law_check(make_monad(name, params), range(0, 3))
    assert rep.ok, rep.summary()


def test_powerset_associativity_needs_too_much_at_size_3():
    rep = monad_law_check(make_monad("powerset"), range(0, 4))
    assert rep.by_name("associativity").status == "resource"
    assert all(c.ok for c in rep.checks if c.name != "associativity")


def test_wrong_multiplication_is_caught():
    rep = monad_law_check(IntersectionMonad(), range(0, 3))
    assert not rep.ok
    # the empty intersection is the whole set, so mu . T(eta) moves the empty subset
    assert rep.by_name("left-unit").status == "fail"
    assert rep.by_name("left-unit").violations


@pytest.mark.parametrize("name", ["powerset", "maybe", "identity"])
def test_monad_sizes(name):
    M = make_monad(name)
    assert [len(M.obj(skeleton(n))) for n in range(5)] == ref.MONAD_SIZES[name]


def test_affine_sizes():
    M = make_monad("affine", {"ring": "Z/2"})
    assert [len(M.obj(skeleton(n))) for n in range(5)] == ref.MONAD_SIZES["affine"]


# ---- algebras -------------------------------------------------------------------

@pytest.mark.parametrize("name", sorted(ref.ALGEBRA_COUNTS))
def test_algebra_counts(name):
    params = {"ring": "Z/2"} if name == "affine" else ({"n": 2} if name == "writer" else None)
    M = make_monad(name, params)
    counts = ref.ALGEBRA_COUNTS[name]
    assert [len(algebra_search(M, n)) for n in range(len(counts))] == counts


def test_found_algebras_satisfy_the_axioms():
    M = make_monad("powerset")
    for alg in algebra_search(M, 3):
        assert check_algebra(M, alg.structure) == []


def test_free_algebra_is_an_algebra():
    M = make_monad("maybe")
    alg = free_algebra(M, skeleton(2))
    assert check_algebra(M, alg.structure) == []


def test_non_algebra_is_rejected():
    M = make_monad("powerset")
    X = skeleton(2)
    const = FinMap(M.obj(X), X, tuple(0 for _ in M.obj(X)))
    assert check_algebra(M, const)


def test_retract_witness_for_maybe():
    M = make_monad("maybe")
    w = retract_membership(M, 2, range(0, 4))
    assert w is not None and w.verified
    r = lemma_retraction(M, w)
    assert compose(r, M.unit(skeleton(2))) == FinMap.identity(skeleton(2))


def test_powerset_has_no_empty_retract():
    assert retract_membership(make_monad("powerset"), 0, range(0, 3)) is None


def test_isar_chain_depth_one():
    rep = isar_chain_check(make_monad("powerset"), range(0, 4), t=1)
    assert rep.status == "pass"
    assert set(rep.I) <= set(rep.A) <= set(rep.S) <= set(rep.R)
    assert rep.I == [1, 2] and rep.A == [1, 2, 3]


def test_isar_chain_reports_resource_honestly():
    rep = isar_chain_check(make_monad("powerset"), [3], t=2)
    assert rep.status == "resource"
    assert 3 in rep.unresolved and "T^3(3)" in rep.unresolved[3]


def test_affine_chain():
    M = make_monad("affine", {"ring": "Z/2"})
    rep = isar_chain_check(M, range(0, 5), t=1)
    assert rep.status == "pass", rep.summary()
    assert rep.A == ref.AFFINE_A and rep.R == ref.AFFINE_R
    deep = isar_chain_check(M, range(0, 5), t=2)
    assert deep.status == "resource" and list(deep.unresolved) == [4]
    assert deep.A == ref.AFFINE_A and not deep.violations


def test_splitting_search_uses_algebras():
    res = split_resolution_search(make_monad("powerset"), 1, t=1)
    assert res.found and res.verified and res.source == "algebra"


# ---- Fakir completion -------------------------------------------------------------

def test_fakir_of_powerset_against_brute_force():
    M = make_monad("powerset")
    F = FakirFunctor(M)
    for n in range(5):
        X = skeleton(n)
        assert set(F.obj(X)) == set(powerset_fakir(n)) == set(fakir_oracle(M, X))


@pytest.mark.parametrize("name,params", MONADS)
def test_fakir_report_is_unit_image(name, params):
    rep = fakir_report(make_monad(name, params), range(0, 4))
    assert rep.ok, rep.problems
    assert all(rep.unit_image_only.values())


def test_fakir_against_codensity_ladder():
    rep = fakir_vs_codensity(make_monad("powerset"), 2, range(0, 5))
    assert rep.ok and rep.stabilized_at == 2
    assert [r.size for r in rep.rungs] == [1, 1, 2, 2, 2]


def test_only_unit_from_identity():
    for name, params in MONADS:
        rep = monad_morphisms_from_identity(make_monad(name, params), range(0, 3))
        assert rep.ok and len(rep.morphisms) == 1 and rep.is_unit == [True]


# ---- cobar and the walking action ---------------------------------------------------

def test_cobar_levels():
    t = cobar(make_monad("powerset"), 2, skeleton(2))
    assert t.ok
    assert {k: len(v) for k, v in t.objects.items()} == {-1: 2, 0: 4, 1: 16, 2: 65536}


def test_walking_action_small():
    M = make_monad("powerset")
    rep = walking_functoriality(M, chain_lattice_algebra(M, 2), 3)
    assert rep.status == "pass" and rep.pairs > 0 and not rep.skipped


def test_walking_action_on_three_exceeds_guard():
    M = make_monad("powerset")
    rep = walking_functoriality(M, chain_lattice_algebra(M, 3), 4)
    assert not rep.violations
    assert rep.status == "resource" and rep.skipped


# ---- explicit tables ------------------------------------------------------------------

def test_tabulated_monad_round_trip():
    E = tabulate(make_monad("maybe"), range(0, 3))
    doc = json.loads(json.dumps(E.to_document()))
    F = monad_from_document(doc)
    assert isinstance(F, ExplicitMonad)
    assert monad_law_check(F, range(0, 3)).ok
    assert [len(F.obj(skeleton(n))) for n in range(3)] == ref.MONAD_SIZES["maybe"][:3]


def test_document_missing_keys():
    with pytest.raises(ValueError):
        ExplicitMonad.from_document({"sets": {}, "T": {}})
