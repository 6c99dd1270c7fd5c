import pytest

from codensity.util import (FinMap, ResourceLimitError, all_maps, check_budget, compose, guard_limit, jname,
                            parse_window, skeleton)


def test_finmap_basics():
    f = FinMap((0, 1), ("a", "b"), ("b", "b"))
    assert f(1) == "b" and not f.is_injective() and not f.is_surjective()
    assert FinMap.identity((0, 1)).is_bijective()
    with pytest.raises(ValueError):
        FinMap((0, 1), ("a",), ("a",))
    assert not FinMap((0,), ("a",), ("z",)).well_typed()


def test_compose_order():
    f = FinMap((0, 1), (0, 1), (1, 1))
    g = FinMap((0, 1), ("x", "y"), ("x", "y"))
    assert compose(g, f).values == ("y", "y")


def test_all_maps_count():
    assert len(list(all_maps(skeleton(2), skeleton(3)))) == 9
    assert len(list(all_maps((), skeleton(3)))) == 1


def test_guard(monkeypatch):
    monkeypatch.delenv("CODENSITY_GUARD", raising=False)
    assert guard_limit() == 10 ** 7
    monkeypatch.setenv("CODENSITY_GUARD", "50")
    assert guard_limit() == 50
    with pytest.raises(ResourceLimitError):
        check_budget(51, "things")
    check_budget(50, "things")
    with pytest.raises(ResourceLimitError):
        list(all_maps(skeleton(3), skeleton(4)))


def test_parse_window_errors():
    with pytest.raises(ValueError):
        parse_window("3..1")
    assert parse_window("2, 5") == [2, 5]


def test_jname_is_unambiguous():
    assert jname("a,b", "c") != jname("a", "b,c")
