import json

import pytest

from codensity.fincat.category import CategoryError, FinCategory, FinFunctor, NatTransf, validate_category
from codensity.fincat.concrete import FinSetCategory, FinVectF2, finset_window_category
from codensity.fincat.constructions import (comma_under, connected_components, initial_object, is_initial_functor,
                                            limit_in_finite_category, over_fiber, slice_over, terminal_object,
                                            twisted_arrow)
from codensity.fincat.io import category_from_document, dump_category
from codensity.fincat.ordinals import (OrdMap, amax, count_monotone, delta, delta_inj, delta_max, delta_plus,
                                       max_canonical_form, max_compose, monotone_maps, ord_compose, ord_id,
                                       ordinal_join)
from codensity.oracles import monotone_count

from . import oracles as ref


def abc():
    return FinCategory.chain(["a", "b", "c"])


# ---- finite categories --------------------------------------------------------

def test_chain_category_shape():
    C = abc()
    assert validate_category(C).ok
    assert len(C.morphisms) == 6
    assert C.hom("a", "c") and not C.hom("c", "a")
    assert initial_object(C) == "a" and terminal_object(C) == "c"


def test_group_category():
    G = FinCategory.from_group([0, 1, 2], lambda a, b: (a + b) % 3, 0, name="Z/3")
    assert validate_category(G).ok
    assert all(G.is_iso(m) for m in G.morphism_ids)
    assert initial_object(G) is None


def test_bad_composition_table_is_reported():
    C = abc()
    table = dict(C.compose_table)
    key = next(k for k in table if C.src(k[1]) != C.tgt(k[0]))
    table[key] = C.id("a")
    broken = FinCategory(C.objects, C.morphisms, C.identity, table, "broken")
    assert not validate_category(broken).ok


def test_compose_rejects_non_composable():
    C = abc()
    with pytest.raises(CategoryError):
        C.compose(C.hom("a", "b")[0], C.hom("b", "c")[0])


def test_opposite_and_product():
    C = abc()
    Cop = C.opposite()
    assert validate_category(Cop).ok
    assert Cop.hom("c", "a") and not Cop.hom("a", "c")
    P = C.product(FinCategory.chain(["0", "1"]))
    assert validate_category(P).ok
    assert len(P.objects) == 6 and len(P.morphisms) == 18


def test_full_subcategory_and_inclusion():
    C = abc()
    D = C.full_subcategory(["a", "c"])
    assert D.objects == ("a", "c") and len(D.morphisms) == 3
    assert FinFunctor.inclusion(D, C).validate().ok


def test_functor_and_natural_transformation():
    C = abc()
    I = FinFunctor.identity(C)
    assert I.validate().ok and I.is_isomorphism()
    eta = NatTransf(I, I, {x: C.id(x) for x in C.objects})
    assert eta.validate().ok
    bad = NatTransf(I, I, {x: C.id("a") for x in C.objects})
    assert not bad.validate().ok


def test_dict_round_trip_is_byte_stable():
    C = abc()
    text = dump_category(C)
    D = FinCategory.from_dict(json.loads(text))
    assert dump_category(D) == text


def test_poset_document():
    doc = {"poset": {"elements": ["x", "y", "z"], "leq": [["x", "y"], ["y", "z"]]}}
    C = category_from_document(doc)
    assert C.hom("x", "z")


def test_identity_inferred_from_table():
    doc = abc().to_dict()
    del doc["identity"]
    assert FinCategory.from_dict(doc).identity == abc().identity


# ---- constructions ------------------------------------------------------------

def test_comma_under():
    C = abc()
    comma, proj = comma_under(C, ["b", "c"], "a")
    assert len(comma.objects) == 2
    assert validate_category(comma).ok and proj.validate().ok
    assert initial_object(comma) is not None


def test_twisted_arrow_and_fiber():
    C = abc()
    tw, p, q = twisted_arrow(C)
    assert validate_category(tw).ok
    assert len(tw.objects) == len(C.morphisms)
    fiber, compare = over_fiber(C, "b", (tw, p, q))
    assert validate_category(fiber).ok
    assert len(fiber.objects) == len(slice_over(C, "b").objects) == 2
    assert compare.validate().ok and compare.is_isomorphism()


def test_connected_components():
    assert len(connected_components(FinCategory.discrete(["x", "y"]))) == 2
    assert len(connected_components(abc())) == 1


def test_initial_functor():
    C = abc()
    assert is_initial_functor(FinFunctor.inclusion(C.full_subcategory(["a"]), C)).ok
    assert not is_initial_functor(FinFunctor.inclusion(C.full_subcategory(["c"]), C)).ok


def test_limit_of_a_cospan_in_a_poset():
    C = FinCategory.from_poset(["0", "x", "y", "1"],
                               lambda a, b: a == b or a == "0" or b == "1")
    J = C.full_subcategory(["x", "y"])
    found = limit_in_finite_category(FinFunctor.inclusion(J, C))
    assert found is not None and found[0] == "0"


# ---- concrete categories ------------------------------------------------------

def test_finset_homs():
    A = FinSetCategory()
    assert len(A.hom(2, 3)) == 9
    assert len(A.hom(0, 2)) == 1 and len(A.hom(2, 0)) == 0
    assert A.check_functorial([0, 1, 2]).ok


def test_finvect_homs():
    A = FinVectF2()
    assert len(A.hom(2, 2)) == 16
    assert len(A.underlying(3)) == 8
    assert A.check_functorial([0, 1, 2]).ok


def test_finset_window_category():
    C = finset_window_category([0, 1, 2])
    assert validate_category(C).ok
    assert len(C.morphisms) == 1 + 1 + 1 + 0 + 1 + 4 + 0 + 2 + 1


# ---- ordinals ------------------------------------------------------------------

def test_monotone_counts():
    assert [[count_monotone(n, m) for m in range(5)] for n in range(5)] == ref.MONOTONE
    assert [[monotone_count(n, m) for m in range(5)] for n in range(5)] == ref.MONOTONE
    assert len(list(monotone_maps(3, 2))) == 4


def test_ordmap_validation():
    with pytest.raises(ValueError):
        OrdMap(2, 2, (1, 0))
    with pytest.raises(ValueError):
        OrdMap(1, 2, (2,))
    f = OrdMap.parse("2>3:0,2")
    assert f == OrdMap(2, 3, (0, 2)) and OrdMap.parse(f.label()) == f


def test_join_and_compose():
    f, g = OrdMap(1, 2, (1,)), OrdMap(2, 1, (0, 0))
    assert ordinal_join(f, g) == OrdMap(3, 3, (1, 2, 2))
    assert ord_compose(g, f) == OrdMap(1, 1, (0,))
    assert ordinal_join(ord_id(0), f) == f
    assert amax(2) == OrdMap(3, 1, (0, 0, 0))


def test_canonical_form_example():
    g = OrdMap(4, 3, (0, 1, 2, 2))
    f, n = max_canonical_form(g)
    assert f == OrdMap(2, 2, (0, 1)) and n == 1
    with pytest.raises(ValueError):
        max_canonical_form(OrdMap(2, 3, (0, 1)))


def test_max_compose_on_window():
    for k in range(1, 4):
        for m in range(1, 4):
            for q in range(1, 4):
                for g1 in monotone_maps(k, m):
                    for g2 in monotone_maps(m, q):
                        if g1.is_max_preserving() and g2.is_max_preserving():
                            assert max_compose(g2, g1) == ord_compose(g2, g1)


def test_simplex_categories():
    for C in (delta_plus(3), delta(2), delta_max(3), delta_inj(3)):
        assert validate_category(C).ok
    assert len(delta_plus(2).morphisms) == sum(count_monotone(a, b) for a in range(3) for b in range(3))
    assert delta(1).objects == ("[0]", "[1]")
