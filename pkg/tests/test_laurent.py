import random

import pytest

from heckekit import LaurentPoly, ParseError


def rand_poly(rng, span=5, terms=4):
    return LaurentPoly({rng.randint(-span, span): rng.randint(-9, 9)
                        for _ in range(terms)})


def test_construction_strips_zeros():
    p = LaurentPoly({0: 1, 2: 0, -3: 4})
    assert p.items() == [(-3, 4), (0, 1)]
    assert not LaurentPoly({5: 0})
    assert LaurentPoly(7) == 7


def test_arithmetic_basics():
    v = LaurentPoly.v()
    p = v * v - 1
    assert p == LaurentPoly({2: 1, 0: -1})
    assert p - p == 0
    assert (-p) + p == 0
    assert p * 0 == 0
    assert 3 * v == LaurentPoly({1: 3})
    assert v ** 4 == LaurentPoly.v(4)
    assert (1 + v) ** 2 == LaurentPoly({0: 1, 1: 2, 2: 1})


def test_ring_axioms_random():
    rng = random.Random(11)
    for _ in range(200):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a + b == b + a


def test_bar_is_involutive_ring_map():
    rng = random.Random(5)
    for _ in range(60):
        a, b = rand_poly(rng), rand_poly(rng)
        assert a.bar().bar() == a
        assert (a * b).bar() == a.bar() * b.bar()
        assert (a + b).bar() == a.bar() + b.bar()
    assert LaurentPoly.v().bar() == LaurentPoly.v(-1)


def test_shift_stretch_evaluate():
    p = LaurentPoly({0: 1, 1: 2})
    assert p.shift(3) == LaurentPoly({3: 1, 4: 2})
    assert p.stretch(2) == LaurentPoly({0: 1, 2: 2})
    assert p.evaluate_at_one() == 3
    assert LaurentPoly({-2: 5, 1: -5}).evaluate_at_one() == 0


def test_monomial_unit():
    assert LaurentPoly.v(-4).is_monomial_unit()
    assert (-LaurentPoly.v(2)).is_monomial_unit()
    assert not LaurentPoly({0: 2}).is_monomial_unit()
    assert not LaurentPoly({0: 1, 1: 1}).is_monomial_unit()
    assert not LaurentPoly().is_monomial_unit()


def test_frozen_text_format():
    p = LaurentPoly({-2: 1, 0: 1, 4: 3})
    assert p.format() == "v^-2 + 1 + 3*v^4"
    assert LaurentPoly().format() == "0"
    assert LaurentPoly({1: -1, -1: 1}).format() == "v^-1 - v"
    assert LaurentPoly({0: -2, 3: 1}).format() == "-2 + v^3"
    assert LaurentPoly({1: 1}).format("t") == "t"


@pytest.mark.parametrize("text", [
    "v^-2 + 1 + 3*v^4", "0", "-v", "v^-1 - v", "-2 + v^3", "7", "-v^-3 + 2*v",
])
def test_parse_format_roundtrip(text):
    assert LaurentPoly.parse(text).format() == text


def test_parse_format_roundtrip_random():
    rng = random.Random(23)
    for _ in range(200):
        p = rand_poly(rng)
        assert LaurentPoly.parse(p.format()) == p
        assert LaurentPoly.parse(p.format("q"), "q") == p


def test_parse_rejects_garbage():
    for bad in ["", "v^", "x + 1", "1 +", "v**2"]:
        with pytest.raises(ParseError):
            LaurentPoly.parse(bad)
