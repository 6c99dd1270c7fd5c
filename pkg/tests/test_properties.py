"""Invariants checked on generated inputs."""

import itertools

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from codensity.bkshadow.builtins import make_monad
from codensity.bkshadow.shadow import r_product_map
from codensity.fincat.category import FinCategory
from codensity.fincat.ordinals import (OrdMap, amax, max_canonical_form, max_compose, ord_compose, ordinal_join)
from codensity.simplex.ndelta import Chain, count_factorizations, join_decompose_chain, join_word
from codensity.simplex.sset import ez_decompose, ez_recompose, nerve
from codensity.util import FinMap, FunctionalCSP, compose, parse_window, skeleton

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def ordmaps(draw, dom=None, cod=None, max_card=4):
    d = draw(st.integers(0, max_card)) if dom is None else dom
    c = draw(st.integers(1 if d else 0, max_card)) if cod is None else cod
    vals = sorted(draw(st.lists(st.integers(0, c - 1), min_size=d, max_size=d))) if c else []
    return OrdMap(d, c, tuple(vals))


@st.composite
def chains(draw, max_level=3, max_card=4, level=None):
    level = draw(st.integers(0, max_level)) if level is None else level
    cards = [draw(st.integers(0, max_card))]
    maps = []
    for _ in range(level):
        lo = 1 if cards[-1] else 0
        nxt = draw(st.integers(lo, max_card))
        maps.append(draw(ordmaps(cards[-1], nxt)))
        cards.append(nxt)
    return Chain(tuple(cards), tuple(maps))


@st.composite
def max_preserving(draw, max_card=6):
    d = draw(st.integers(1, max_card))
    c = draw(st.integers(1, max_card))
    vals = sorted(draw(st.lists(st.integers(0, c - 1), min_size=d - 1, max_size=d - 1)))
    return OrdMap(d, c, tuple(vals) + (c - 1,))


# ---- ordinals -----------------------------------------------------------------------

@SETTINGS
@given(max_preserving())
def test_canonical_form_round_trip(g):
    f, n = max_canonical_form(g)
    assert ordinal_join(f, amax(n)) == g


@SETTINGS
@given(st.data())
def test_max_compose_matches_plain_composition(data):
    g1 = data.draw(max_preserving(5))
    vals = sorted(data.draw(st.lists(st.integers(0, 3), min_size=g1.cod - 1, max_size=g1.cod - 1)))
    g2 = OrdMap(g1.cod, 4, tuple(vals) + (3,))
    assert max_compose(g2, g1) == ord_compose(g2, g1)


@SETTINGS
@given(ordmaps(), ordmaps(), ordmaps())
def test_join_is_associative(a, b, c):
    assert ordinal_join(ordinal_join(a, b), c) == ordinal_join(a, ordinal_join(b, c))


@SETTINGS
@given(st.data())
def test_join_is_functorial(data):
    f1 = data.draw(ordmaps())
    f2 = data.draw(ordmaps())
    g1 = data.draw(ordmaps(dom=f1.cod))
    g2 = data.draw(ordmaps(dom=f2.cod))
    assert ord_compose(ordinal_join(g1, g2), ordinal_join(f1, f2)) == ordinal_join(ord_compose(g1, f1),
                                                                                    ord_compose(g2, f2))


# ---- chains ----------------------------------------------------------------------------

@SETTINGS
@given(chains())
def test_chain_simplicial_identities(c):
    k = c.level
    for j in range(k + 1):
        for i in range(j):
            if k >= 2:
                assert c.face(j).face(i) == c.face(i).face(j - 1)
        assert c.degen(j).face(j) == c and c.degen(j).face(j + 1) == c
        for i in range(j + 1):
            assert c.degen(j).degen(i) == c.degen(i).degen(j + 1)


@SETTINGS
@given(chains())
def test_join_decomposition_round_trip(c):
    parts = join_decompose_chain(c)
    assert all(p.is_basis() for p in parts)
    assert join_word(parts, c.level) == c
    assert count_factorizations(c, Chain.is_basis) == 1


@SETTINGS
@given(st.integers(1, 2), st.data())
def test_faces_commute_with_join(level, data):
    a = data.draw(chains(max_card=3, level=level))
    b = data.draw(chains(max_card=3, level=level))
    ab = join_word([a, b], level)
    for i in range(a.level + 1):
        assert ab.face(i) == join_word([a.face(i), b.face(i)], a.level - 1)


# ---- simplicial sets --------------------------------------------------------------------

NERVES = [nerve(FinCategory.chain(["0", "1", "2"]), 3),
          nerve(FinCategory.from_group([0, 1, 2], lambda a, b: (a + b) % 3, 0, name="Z/3"), 3)]


@SETTINGS
@given(st.sampled_from(NERVES), st.integers(0, 3), st.data())
def test_eilenberg_zilber_round_trip(X, n, data):
    x = data.draw(st.sampled_from(X.levels[n]))
    sigma, m, y = ez_decompose(X, n, x)
    assert sigma.is_surjective() and sigma.cod == m + 1
    assert not X.is_degenerate(m, y)
    assert ez_recompose(X, sigma, y) == x


# ---- monads -------------------------------------------------------------------------------

MONADS = [make_monad("powerset"), make_monad("maybe"), make_monad("writer", {"n": 2}),
          make_monad("affine", {"ring": "Z/2"}), make_monad("affine", {"ring": "Z/3"})]


@SETTINGS
@given(st.sampled_from(MONADS), st.integers(1, 3), st.data())
def test_unit_laws_elementwise(M, n, data):
    X = skeleton(n)
    t = data.draw(st.sampled_from(M.obj(X)))
    TX = M.obj(X)
    assert M.mult_elem(X, M.unit_elem(TX, t)) == t
    assert M.mult_elem(X, M.apply(M.unit(X), t)) == t


@SETTINGS
@given(st.sampled_from(MONADS), st.integers(1, 3), st.integers(1, 3), st.data())
def test_functoriality_elementwise(M, n, m, data):
    X, Y, Z = skeleton(n), skeleton(m), skeleton(2)
    f = FinMap(X, Y, tuple(data.draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n))))
    g = FinMap(Y, Z, tuple(data.draw(st.lists(st.integers(0, 1), min_size=m, max_size=m))))
    t = data.draw(st.sampled_from(M.obj(X)))
    assert M.apply(compose(g, f), t) == M.apply(g, M.apply(f, t))
    assert M.apply(f, M.unit_elem(X, 0)) == M.unit_elem(Y, f(0))


@SETTINGS
@given(st.sampled_from(["Z/2", "Z/3", "Z/4"]), st.data())
def test_r_product_is_affine(ring, data):
    M = make_monad("affine", {"ring": ring})
    X, Y = skeleton(2), skeleton(2)
    u = data.draw(st.sampled_from(M.obj(X)))
    v = data.draw(st.sampled_from(M.obj(Y)))
    w = r_product_map(M.R, X, Y)(u, v)
    assert M.coefficient_sum(w) == M.R.one
    assert all(r != M.R.zero for _, r in w)


# ---- utilities ------------------------------------------------------------------------------

@SETTINGS
@given(st.integers(0, 20), st.integers(0, 20))
def test_parse_window(a, b):
    lo, hi = min(a, b), max(a, b)
    assert parse_window(f"{lo}..{hi}") == list(range(lo, hi + 1))
    assert parse_window(",".join(map(str, range(lo, hi)))) == list(range(lo, hi))


@SETTINGS
@given(st.lists(st.integers(2, 3), min_size=1, max_size=4), st.data())
def test_functional_csp_against_brute_force(domains, data):
    n = len(domains)
    edges = []
    for _ in range(data.draw(st.integers(0, 4))):
        u, v = data.draw(st.integers(0, n - 1)), data.draw(st.integers(0, n - 1))
        table = tuple(data.draw(st.integers(0, domains[v] - 1)) for _ in range(domains[u]))
        edges.append((u, v, table))
    csp = FunctionalCSP([range(d) for d in domains])
    for u, v, table in edges:
        csp.add_edge(u, v, table.__getitem__)
    got = list(csp.solutions())
    want = [s for s in itertools.product(*(range(d) for d in domains))
            if all(s[v] == table[s[u]] for u, v, table in edges)]
    assert got == want
