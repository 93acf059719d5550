"""The vertex graph: enumeration, edges, components, descent, decisions."""

import itertools

import pytest

from hurwitz3.braid import Braid, evaluate
from hurwitz3.factorizations import Factor, Factorization, factorization_of_word
from hurwitz3.graph import (
    base_components,
    base_vertices,
    classify_h3,
    classify_h12,
    components_dot,
    components_report,
    decide_equivalence,
    decision_report,
    descend,
    descend_path,
    h_neighbor_words,
    region_components,
    v_neighbor_words,
    vertex_for,
    vertical_neighbors,
    vertices_of_weight,
)
from hurwitz3.words import unhat_word

X4 = Braid((2, 0, 1, 1), 1)


def words_of(vertices):
    return [v.word for v in vertices]


def test_base_vertices_examples():
    assert words_of(base_vertices(Braid((1,), 0))) == [(4,)]
    assert base_vertices(Braid((1, 1, 2), 1)) == ()
    assert words_of(base_vertices(Braid((2, 0, 1), 1))) == [(2, 3, 1)]
    assert sorted(words_of(base_vertices(X4))) == [(2, 3, 1, 4), (2, 3, 4, 1)]
    assert words_of(base_vertices(Braid((1, 1), 0))) == [(4, 4)]
    assert words_of(base_vertices(Braid.identity())) == [()]


def test_base_vertices_match_brute_force(rng):
    for _ in range(25):
        word = tuple(rng.randrange(3) for _ in range(rng.randrange(7)))
        u, q = __import__("hurwitz3").normalize_positive(word)
        for p in (0, 1, 2):
            x = Braid(u, p)
            expected = set()
            for keep in itertools.product((False, True), repeat=len(u)):
                plain = tuple(a for a, k in zip(u, keep) if k)
                if evaluate(tuple((a, 1) for a in plain)) == Braid.delta(p):
                    expected.add(tuple(a if k else a + 3
                                       for a, k in zip(u, keep)))
            assert set(words_of(base_vertices(x))) == expected


def test_base_vertex_hat_count_is_band_length():
    for x in (X4, Braid((2, 0, 1), 1), Braid((1, 1), 0)):
        for v in base_vertices(x):
            assert sum(1 for l in v.word if l >= 3) == x.band_length


def test_h_neighbors_are_vertices_of_equal_weight():
    x = Braid((2, 0, 1), 1)
    for j in (0, 1):
        for v in vertices_of_weight(x, j):
            for nbr, edge in h_neighbor_words(v.word):
                assert edge.kind in ("h1", "h2", "h3")
                assert vertex_for(x, nbr).weight == v.weight


def test_vertex_for_validates():
    v = vertex_for(X4, (2, 3, 1, 4))
    assert v.weight == 0
    with pytest.raises(ValueError):
        vertex_for(X4, (2, 3, 1, 1))  # plain part not a delta power
    with pytest.raises(ValueError):
        vertex_for(X4, (2, 1, 3, 4))  # wrong unhatted value at weight 0


def test_classify_h12_examples():
    e = classify_h12((2, 3, 4, 1), (2, 3, 1, 4))
    assert e is not None and e.kind == "h1" and e.spots == (2, 3)
    assert e.a == (2, 3, 4, 1)
    e2 = classify_h12((4, 5, 0, 4, 2), (1, 5, 0, 4, 5))
    assert e2 is not None and e2.kind == "h2" and e2.spots == (0, 4)
    assert classify_h12((2, 3, 1, 4), (2, 3, 1, 4)) is None
    assert classify_h12((2, 3, 1), (2, 3, 4)) is None


def test_classify_h12_symmetric():
    for a, b in [((2, 3, 4, 1), (2, 3, 1, 4)),
                 ((4, 5, 0, 4, 2), (1, 5, 0, 4, 5))]:
        e1 = classify_h12(a, b)
        e2 = classify_h12(b, a)
        assert e1.kind == e2.kind and e1.a == e2.a and e1.spots == e2.spots


def test_classify_h3():
    e = classify_h3((5, 4), (4, 3))  # hatted s2 s1 ~ hatted s1 s0
    assert e is not None and e.kind == "h3"
    assert classify_h3((5, 4), (5, 4)) is None
    # unequal values are not h3
    assert classify_h3((3, 3), (4, 4)) is None
    # plain letters inside the window are not h3
    assert classify_h3((2, 1), (1, 0)) is None


def test_h3_neighbors_through_runs():
    # replacing a hatted run by another spelling of its value
    word = (2, 5, 4, 1)  # s2 h2 h1 s1: the run h2 h1 has value delta
    nbrs = {w: e for w, e in h_neighbor_words(word) if e.kind == "h3"}
    assert {(2, 4, 3, 1), (2, 3, 5, 1)} <= set(nbrs)
    # a one-letter run is alone in its value class
    assert not any(e.kind == "h3" for _, e in h_neighbor_words((2, 3, 1)))


def test_vertical_neighbors_examples():
    x1 = Braid((1,), 0)
    v = vertex_for(x1, (4, 1, 0))
    down = vertical_neighbors(x1, v)
    assert any(nv.word == (4,) and e.kind == "v1" for nv, e in down)

    x0 = Braid((0,), 0)
    v2 = vertex_for(x0, (2, 4, 1))
    down2 = vertical_neighbors(x0, v2)
    assert [(nv.word, e.kind) for nv, e in down2] == [((3,), "v2")]

    with pytest.raises(ValueError):
        vertical_neighbors(x1, vertex_for(x1, (4,)))


def test_weight_zero_words_have_no_vertical_edges():
    for x in (X4, Braid((2, 0, 1), 1)):
        for v in base_vertices(x):
            assert v_neighbor_words(v.word) == []


def test_components_examples():
    assert base_components(Braid((1,), 0)).component_count == 1
    comps = base_components(X4)
    assert comps.component_count == 1
    assert len(comps.vertices) == 2
    assert comps.representatives[0] == (2, 3, 1, 4)
    split = base_components(Braid((0, 1, 2, 0), 1))
    assert split.component_count == 2
    empty = base_components(Braid((1, 1, 2), 1))
    assert empty.component_count == 0
    assert empty.vertices == ()


def test_vertices_of_weight_matches_raw_filter():
    # independent route: filter every hatted word of the right length
    from hurwitz3.graph import is_vertex_word
    for x, j in ((Braid.identity(), 1), (Braid((1,), 0), 1),
                 (Braid((2, 0), 0), 1), (Braid((2, 0, 1), 1), 0)):
        n = len(x.u) + 2 * j
        expected = {w for w in itertools.product(range(6), repeat=n)
                    if is_vertex_word(x, w) and vertex_for(x, w).weight == j}
        assert {v.word for v in vertices_of_weight(x, j)} == expected


def test_vertices_of_weight_ambient_law():
    x = Braid((2, 0, 1), 1)
    for j in (0, 1):
        for v in vertices_of_weight(x, j):
            assert v.weight == j
            value = Braid.from_positive(unhat_word(v.word))
            assert value * Braid.delta(-(x.p + j)) == x


def test_region_components_connects_levels():
    x = Braid((2, 0, 1), 1)
    region = region_components(x, 1)
    words0 = {v.word for v in vertices_of_weight(x, 0)}
    assert words0 <= set(region)
    # single base vertex: everything reachable downward joins its class
    assert len({region[w] for w in words0}) == 1


def test_descend_examples():
    x = Braid((1,), 0)
    v0 = vertex_for(x, (4,))
    assert descend(x, v0) == v0
    v = vertex_for(x, (4, 1, 0))
    w0, steps = descend_path(x, v)
    assert w0.word == (4,)
    assert len(steps) == 1 and steps[0][2].kind == "v1"


def test_descend_stays_in_component():
    x = X4  # two vertices, one component
    comps = base_components(x)
    for v in base_vertices(x):
        f = factorization_of_word(v.word)
        from hurwitz3.factorizations import to_vertex
        landed = descend(x, to_vertex(f))
        assert comps.component_of[landed.word] == comps.component_of[v.word]


def delta_factorization(*atoms):
    target = Braid.identity()
    for a in atoms:
        target = target * Braid((a,), 0)
    return Factorization(tuple(Factor((), a) for a in atoms), target)


def test_decide_equivalence_examples():
    f = Factorization((Factor((), 1),), Braid((1,), 0))
    assert decide_equivalence(f, f, Braid((1,), 0)).verdict == "equivalent"

    d = decide_equivalence(delta_factorization(1, 0),
                           delta_factorization(0, 2), Braid.delta())
    assert d.verdict == "equivalent" and "p < 0" in d.reason

    f1 = factorization_of_word((2, 3, 1, 4))
    f2 = factorization_of_word((2, 3, 4, 1))
    d2 = decide_equivalence(f1, f2, X4)
    assert d2.verdict == "equivalent"
    assert d2.component_count == 1 and d2.v0_size == 2

    # the two-component target separates its two brackets
    xs = Braid((0, 1, 2, 0), 1)
    g1, g2 = (factorization_of_word(v.word) for v in base_vertices(xs))
    assert decide_equivalence(g1, g2, xs).verdict == "inequivalent"


def test_decide_equivalence_invalid():
    bad = Factorization((Factor((), 1),), Braid.delta())
    d = decide_equivalence(bad, delta_factorization(1, 0), Braid.delta())
    assert d.verdict == "invalid"
    assert "first" in d.reason and "band length" in d.reason

    other = decide_equivalence(delta_factorization(1, 0),
                               delta_factorization(1, 1), Braid.delta())
    assert other.verdict == "invalid"
    assert "second" in other.reason


def test_reports_and_dot():
    comps = base_components(X4)
    rep = components_report(comps)
    assert rep["v0_size"] == 2 and rep["component_count"] == 1
    assert rep["components"][0]["representative"] == "s2 h0 s1 h1"
    dot = components_dot(comps)
    assert "cluster_0" in dot and 'kind="h1"' in dot

    d = decide_equivalence(factorization_of_word((2, 3, 1, 4)),
                           factorization_of_word((2, 3, 4, 1)), X4)
    js = decision_report(d)
    assert js["verdict"] == "equivalent"
    assert set(js) == {"verdict", "reason", "p", "k", "component_a",
                       "component_b", "vertex_a", "vertex_b", "v0_size",
                       "component_count"}
