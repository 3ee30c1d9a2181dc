import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cayley.rings import (
    Dual,
    PolyRing,
    Q,
    RingDescriptor,
    RingError,
    RingMismatch,
    Z,
    Zmod,
    make_ring,
    parse_ring,
    random_element,
    ring_add,
    ring_mul,
    ring_neg,
)

from conftest import RINGS, RING_IDS, payloads


def test_zmod6_has_six_elements_and_one_is_not_zero():
    R = make_ring(Zmod(6))
    assert {R.random(random.Random(s)) for s in range(200)} == set(range(6))
    assert R(1) != R(0)


@pytest.mark.parametrize("n", [1, 0, -3])
def test_zero_ring_and_bad_moduli_rejected(n):
    with pytest.raises(RingError):
        Zmod(n)


def test_excessive_nesting_rejected():
    Dual(Dual(Z))
    PolyRing(Dual(Z), 1)
    with pytest.raises(RingError):
        Dual(Dual(Dual(Z)))
    with pytest.raises(RingError):
        PolyRing(PolyRing(Dual(Z), 1), 1)


def test_unknown_kind_rejected():
    with pytest.raises(RingError):
        RingDescriptor("F")


def test_arithmetic_examples():
    Z6 = make_ring(Zmod(6))
    assert ring_mul(Z6(2), Z6(3)) == Z6(0)
    QQ = make_ring(Q)
    assert ring_add(QQ(Fraction(1, 2)), QQ(Fraction(1, 3))).payload == Fraction(5, 6)
    ZZ = make_ring(Z)
    assert ring_mul(ZZ(-7), ZZ(8)).payload == -56
    assert ring_neg(ZZ(5)).payload == -5


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        ring_add(make_ring(Z)(1), make_ring(Zmod(6))(1))
    with pytest.raises(RingMismatch):
        make_ring(Z)(1) * make_ring(Q)(1)


def test_dual_numbers_square_eps_to_zero():
    D = make_ring(Dual(Z))
    eps = D((0, 1))
    assert eps * eps == D(0)
    assert (D((2, 3)) * D((5, 7))).payload == (10, 29)


@pytest.mark.parametrize("desc", RINGS, ids=RING_IDS)
def test_random_element_is_deterministic(desc):
    a = [random_element(desc, random.Random(7)) for _ in range(3)]
    b = [random_element(desc, random.Random(7)) for _ in range(3)]
    assert a == b


def test_random_ranges():
    rng = random.Random(3)
    zs = {random_element(Z, rng).payload for _ in range(500)}
    assert zs == set(range(-3, 4))
    qs = {random_element(Q, rng).payload for _ in range(500)}
    assert all(abs(q.numerator) <= 3 and 1 <= q.denominator <= 3 for q in qs)
    assert {random_element(Zmod(6), rng).payload for _ in range(500)} == set(range(6))


@pytest.mark.parametrize("text,expected", [
    ("Z", Z), ("Q", Q), ("Zmod 6", Zmod(6)), ("Zmod6", Zmod(6)),
    ("Dual Z", Dual(Z)), ("DualZmod6", Dual(Zmod(6))), ("Dual Dual Q", Dual(Dual(Q))),
])
def test_parse_ring(text, expected):
    assert parse_ring(text) == expected
    assert parse_ring(str(expected)) == expected
    assert parse_ring(expected.token) == expected


@pytest.mark.parametrize("text", ["", "R", "Zmod", "Zmod 1", "Z Z", "Zmodx"])
def test_parse_ring_errors(text):
    with pytest.raises(RingError):
        parse_ring(text)


@pytest.mark.parametrize("desc", RINGS + [Dual(Q), Dual(Dual(Zmod(5)))], ids=lambda d: d.token)
def test_literal_round_trip(desc):
    R = make_ring(desc)
    rng = random.Random(11)
    for _ in range(100):
        x = R.random(rng)
        assert R.parse(R.format(x)) == x


def test_literal_syntax():
    assert make_ring(Q).parse("-3/6") == Fraction(-1, 2)
    assert make_ring(Zmod(6)).parse("5") == 5
    assert make_ring(Dual(Z)).parse("1+-2*eps") == (1, -2)
    assert make_ring(Dual(Z)).parse("4") == (4, 0)
    with pytest.raises(RingError):
        make_ring(Q).parse("1/0")
    with pytest.raises(RingError):
        make_ring(Z).parse("1.5")


@pytest.mark.parametrize("desc", RINGS, ids=RING_IDS)
def test_ring_axioms_on_random_triples(desc):
    R = make_ring(desc)
    rng = random.Random(desc.token)
    for _ in range(1000):
        x, y, z = (R(R.random(rng)) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x + y == y + x
        assert x * (y + z) == x * y + x * z
        assert R(1) * x == x
        assert x + (-x) == R(0)
        assert x - y == x + (-y)


def _axioms(R, x, y, z):
    add, mul = R.add, R.mul
    assert add(add(x, y), z) == add(x, add(y, z))
    assert mul(mul(x, y), z) == mul(x, mul(y, z))
    assert mul(x, y) == mul(y, x)
    assert mul(x, add(y, z)) == add(mul(x, y), mul(x, z))
    assert mul(R.one, x) == x
    assert add(x, R.neg(x)) == R.zero


@pytest.mark.parametrize("desc", RINGS, ids=RING_IDS)
@given(data=st.data())
def test_ring_axioms_hypothesis(desc, data):
    R = make_ring(desc)
    x, y, z = (data.draw(payloads(desc)) for _ in range(3))
    _axioms(R, x, y, z)


@pytest.mark.parametrize("desc", RINGS, ids=RING_IDS)
@given(data=st.data())
def test_canonical_is_idempotent(desc, data):
    R = make_ring(desc)
    x = data.draw(payloads(desc))
    assert R.canonical(R.canonical(x)) == R.canonical(x)


@given(st.integers(-10**30, 10**30), st.integers(2, 10**6))
def test_zmod_canonical_residue(k, n):
    R = make_ring(Zmod(n))
    assert 0 <= R.from_int(k) < n
    assert R(k) == R(k + n)


@given(st.integers(-100, 100), st.integers(1, 100))
def test_rationals_lowest_terms(p, q):
    x = make_ring(Q).canonical(Fraction(p, q))
    assert x.denominator > 0
    from math import gcd

    assert gcd(x.numerator, x.denominator) == 1


def test_big_integers_stay_exact():
    R = make_ring(Z)
    x = R(3) ** 200
    assert x.payload == 3**200


@pytest.mark.parametrize("desc", [Dual(Zmod(6)), PolyRing(Zmod(4), 1), PolyRing(Z, 2)], ids=lambda d: d.token)
def test_nested_ring_axioms(desc):
    R = make_ring(desc)
    rng = random.Random(5)
    for _ in range(300):
        _axioms(R, R.random(rng), R.random(rng), R.random(rng))


def test_congruence_of_equality():
    R = make_ring(Zmod(6))
    rng = random.Random(1)
    for _ in range(200):
        x, y = R(R.random(rng)), R(R.random(rng))
        x2 = R(x.payload + 6 * rng.randint(-3, 3))
        assert x2 == x
        assert x2 + y == x + y and x2 * y == x * y
        assert hash(x2) == hash(x)
