"""Factorizations, Hurwitz moves, the orbit oracle, move certificates."""

import pytest

from hurwitz3.braid import Braid, TokenError
from hurwitz3.factorizations import (
    Factor,
    Factorization,
    apply_moves,
    edge_to_moves,
    factorization_of_word,
    format_factorization,
    full_certificate,
    hurwitz_connect,
    hurwitz_orbit,
    parse_factorization_file,
    sigma_move,
    to_vertex,
    validate,
)
from hurwitz3.graph import Edge, classify_h12, decide_equivalence

DELTA = Braid.delta()


def plain_factor(atom, *conj):
    return Factor(tuple((a, 1) for a in conj), atom)


def factorization(target, *factors):
    return Factorization(tuple(factors), target)


def test_factor_value():
    assert plain_factor(1).value() == Braid((1,), 0)
    assert Factor(((2, 1),), 0).value() == Braid((2, 0, 1), 1)
    with pytest.raises(ValueError):
        Factor((), 4)


def test_validate_examples():
    ok = factorization(DELTA, plain_factor(1), plain_factor(0))
    assert validate(ok) is None
    short = factorization(DELTA, plain_factor(1))
    assert "band length" in validate(short)
    conj = factorization(Braid((2, 0, 1), 1), Factor(((2, 1),), 0))
    assert validate(conj) is None
    wrong = factorization(DELTA, plain_factor(1), plain_factor(1))
    assert "product" in validate(wrong)


def test_sigma_move_values():
    f = factorization(DELTA, plain_factor(1), plain_factor(0))
    g = sigma_move(f, 1)
    assert [v for v in g.values()] == [Braid((2,), 0), Braid((1,), 0)]
    back = sigma_move(g, 1, -1)
    assert back.canonical() == f.canonical()
    with pytest.raises(IndexError):
        sigma_move(f, 2)
    with pytest.raises(IndexError):
        sigma_move(f, 0)


def test_sigma_moves_preserve_product(rng):
    for _ in range(60):
        k = rng.randint(2, 4)
        factors = [Factor(tuple((rng.randrange(3), rng.choice((1, -1)))
                                for _ in range(rng.randrange(3))),
                          rng.randrange(3))
                   for _ in range(k)]
        target = Braid.identity()
        for fac in factors:
            target = target * fac.value()
        f = factorization(target, *factors)
        i = rng.randint(1, k - 1)
        moved = sigma_move(f, i, rng.choice((1, -1)))
        assert validate(moved) is None


def test_hurwitz_braid_relation(rng):
    # moves at slots 1 and 2 satisfy the braid relation on values
    for _ in range(40):
        factors = [Factor(tuple((rng.randrange(3), rng.choice((1, -1)))
                                for _ in range(rng.randrange(3))),
                          rng.randrange(3))
                   for _ in range(3)]
        target = Braid.identity()
        for fac in factors:
            target = target * fac.value()
        f = factorization(target, *factors)
        lhs = apply_moves(f, ((1, 1), (2, 1), (1, 1)))
        rhs = apply_moves(f, ((2, 1), (1, 1), (2, 1)))
        assert lhs.canonical() == rhs.canonical()


def test_factorization_of_word_examples():
    f = factorization_of_word((4,))
    assert f.target == Braid((1,), 0)
    assert f.factors == (Factor((), 1),)

    g = factorization_of_word((2, 3, 1))
    assert g.target == Braid((2, 0, 1), 1)
    assert g.factors == (Factor(((2, 1),), 0),)
    assert validate(g) is None

    with pytest.raises(ValueError):
        factorization_of_word((1, 4))  # plain part is not a delta power


def test_to_vertex_examples():
    f = factorization(Braid((1,), 0), plain_factor(1))
    assert to_vertex(f).word == (4,)
    g = factorization(Braid((2, 0, 1), 1), plain_factor(0, 2))
    v = to_vertex(g)
    assert v.word == (2, 3, 1)
    assert factorization_of_word(v.word).canonical() == g.canonical()


def test_round_trip_random(rng):
    for _ in range(100):
        k = rng.randint(1, 4)
        factors = [Factor(tuple((rng.randrange(3), rng.choice((1, -1)))
                                for _ in range(rng.randrange(4))),
                          rng.randrange(3))
                   for _ in range(k)]
        target = Braid.identity()
        for fac in factors:
            target = target * fac.value()
        f = factorization(target, *factors)
        back = factorization_of_word(to_vertex(f).word)
        assert back.canonical() == f.canonical()


def test_orbit_examples():
    fixed = factorization(Braid((1, 1), 0), plain_factor(1), plain_factor(1))
    orbit, saturated = hurwitz_orbit(fixed)
    assert saturated and len(orbit) == 1

    fd = factorization(DELTA, plain_factor(1), plain_factor(0))
    orbit, saturated = hurwitz_orbit(fd)
    assert saturated and len(orbit) == 3
    assert (((2,), 0), ((1,), 0)) in orbit
    assert (((0,), 0), ((2,), 0)) in orbit

    orbit0, saturated0 = hurwitz_orbit(fd, budget=0)
    assert orbit0 == {fd.canonical()} and not saturated0


def test_orbit_gives_up_on_growth():
    x = Braid((0, 1, 2, 0), 1)
    f = factorization_of_word((0, 4, 2, 3))
    orbit, saturated = hurwitz_orbit(f)
    assert not saturated


def test_hurwitz_connect():
    fd = factorization(DELTA, plain_factor(1), plain_factor(0))
    target = factorization(DELTA, plain_factor(0), plain_factor(2)).canonical()
    found, complete = hurwitz_connect(fd.canonical(), [target])
    assert target in found


def test_edge_to_moves_degenerate():
    e = classify_h12((2, 3, 4, 1), (2, 3, 1, 4))
    assert edge_to_moves(e) == ()
    fa = factorization_of_word(e.a)
    fb = factorization_of_word(e.b)
    assert fa.canonical() == fb.canonical()


def test_edge_to_moves_block():
    e = classify_h12((4, 5, 0, 4, 2), (1, 5, 0, 4, 5))
    moves = edge_to_moves(e)
    assert moves == ((1, 1), (2, 1))
    fa = factorization_of_word(e.a)
    fb = factorization_of_word(e.b)
    assert apply_moves(fa, moves).canonical() == fb.canonical()


def test_edge_to_moves_rejects_vertical_and_h3():
    with pytest.raises(ValueError):
        edge_to_moves(Edge((4, 1, 0), (4,), "v1", (1,)))
    # an h3 edge whose brackets differ has no horizontal certificate
    with pytest.raises(ValueError):
        edge_to_moves(Edge((5, 4), (4, 3), "h3", (0, 2)))


def test_full_certificate():
    x = Braid((1, 2, 0, 1, 2), 1)
    f1 = factorization_of_word((4, 5, 0, 4, 2))
    f2 = factorization_of_word((1, 5, 0, 4, 5))
    d = decide_equivalence(f1, f2, x)
    assert d.verdict == "equivalent"
    moves = full_certificate(d, f1, f2)
    assert moves is not None
    assert apply_moves(f1, moves).canonical() == f2.canonical()


def test_factorization_file_round_trip():
    f = factorization(Braid((2, 0, 1), 1), Factor(((2, 1), (1, -1)), 0))
    text = format_factorization(f)
    factors, target = parse_factorization_file(text)
    assert target == f.target
    assert factors == f.factors


def test_factorization_file_format():
    factors, target = parse_factorization_file(
        "# a comment\n"
        "target: s2 s0 s1 s1 s1- s2-\n"
        "s2 : s0\n"
        ": s1  # empty conjugator\n")
    assert target == Braid((2, 0, 1, 1), 1)
    assert factors == (Factor(((2, 1),), 0), Factor((), 1))
    with pytest.raises(TokenError):
        parse_factorization_file("s2 s0\n")
    with pytest.raises(TokenError):
        parse_factorization_file(": s1 s2\n")
    with pytest.raises(TokenError):
        parse_factorization_file(": s1-\n")
