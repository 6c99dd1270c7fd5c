import pytest

from codensity.bkshadow.builtins import AffineSpanMonad, WriterMonad, builtin_monads, make_monad
from codensity.bkshadow.ring import FiniteRing
from codensity.bkshadow.shadow import (kR_shadow, levelwise_affine, levelwise_affine_check, odd_subset_count,
                                       preserves_monos_and_epis, product_checks, r_product_map)
from codensity.fincat.category import FinCategory
from codensity.monadkit.algebras import algebra_search
from codensity.monadkit.fakir import fakir_report
from codensity.monadkit.laws import monad_law_check
from codensity.oracles import odd_subsets
from codensity.simplex.sset import boundary, nerve, point
from codensity.util import skeleton

from . import oracles as ref


def test_zmod_rings_validate():
    for n in (2, 3, 4, 6):
        R = FiniteRing.zmod(n)
        assert R.validate().ok and R.size == n
    with pytest.raises(ValueError):
        FiniteRing.zmod(1)
    assert FiniteRing.parse("Z/3").mul(2, 2) == 1


def test_ring_from_tables_catches_bad_distributivity():
    add = [[(a + b) % 2 for b in range(2)] for a in range(2)]
    mul = [[1, 1], [1, 1]]
    R = FiniteRing.from_tables([0, 1], add, mul, 0, 1, "bad")
    assert not R.validate().ok


def test_parse_rejects_junk():
    with pytest.raises(ValueError):
        FiniteRing.parse("Q")


def test_catalog():
    assert set(builtin_monads()) == {"identity", "powerset", "nonempty_powerset", "maybe", "writer", "affine"}
    with pytest.raises(KeyError):
        make_monad("list")


def test_trivial_writer_is_identity():
    W = WriterMonad.trivial()
    I = make_monad("identity")
    for n in range(4):
        X = skeleton(n)
        assert len(W.obj(X)) == len(I.obj(X))
        assert W.unit(X).is_bijective()
    assert monad_law_check(W, range(0, 3)).ok


def test_affine_sizes_are_odd_subset_counts():
    M = AffineSpanMonad(FiniteRing.zmod(2))
    for n in range(6):
        assert len(M.obj(skeleton(n))) == odd_subset_count(n) == odd_subsets(n)


def test_affine_over_z3():
    M = make_monad("affine", {"ring": "Z/3"})
    # coefficient vectors with sum 1: 3^(n-1)
    assert [len(M.obj(skeleton(n))) for n in range(4)] == [0, 1, 3, 9]
    assert monad_law_check(M, range(0, 3)).ok


def test_affine_canonical_form():
    M = make_monad("affine", {"ring": "Z/2"})
    assert M.combine([(0, 1), (1, 1), (0, 1)]) == ((1, 1),)
    assert M.combine([(2, 1), (0, 1), (1, 1)]) == ((0, 1), (1, 1), (2, 1))


def test_affine_preserves_monos_and_epis():
    assert preserves_monos_and_epis(make_monad("affine", {"ring": "Z/2"}), range(0, 4)).ok


def test_affine_fakir_contains_unit_image():
    rep = fakir_report(make_monad("affine", {"ring": "Z/2"}), range(0, 5))
    assert rep.ok and all(rep.unit_image_only.values())


def test_product_map():
    rep = product_checks("Z/2", range(2), range(2), range(2))
    assert rep.ok, rep.problems
    assert rep.data == {"pairs": 4, "triples": 8}
    prod = r_product_map("Z/2", (0, 1), ("a",))
    assert prod(((0, 1),), (("a", 1),)) == (((0, "a"), 1),)


def test_shadow_on_z2():
    rep = kR_shadow("Z/2", range(0, 5))
    assert rep.ok and rep.label == "shadow"
    assert rep.A == ref.AFFINE_A and rep.R == ref.AFFINE_R
    assert rep.spectrum == {n: c for n, c in enumerate(ref.ALGEBRA_COUNTS["affine"])}
    assert rep.summary()["sandwich"]


def test_levelwise_affine():
    assert levelwise_affine_check(point(3), "Z/2").data["sizes"] == [1, 1, 1, 1]
    Y = levelwise_affine(boundary(1, 0), "Z/2")
    assert len(Y.levels[0]) == 2
    rep = levelwise_affine_check(nerve(FinCategory.chain(["0", "1"]), 2), "Z/2")
    assert rep.ok and rep.data["sizes"] == [2, 4, 8]


def test_affine_algebra_spectrum_over_z3():
    M = make_monad("affine", {"ring": "Z/3"})
    # affine F3-spaces: sizes 0, 1, 3 only
    assert [bool(algebra_search(M, n)) for n in range(4)] == [True, True, False, True]
