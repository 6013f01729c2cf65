import random

from hypothesis import given
from hypothesis import strategies as st

from ospkit.polynomial import (
    LaurentPolynomial,
    Monomial,
    geometric_series,
    poly_mul_truncated,
    product_truncated,
)

M, N, Q = 1, 1, 2


def mono(x=0, t=0, y1=0, y2=0):
    return Monomial((x,), (t,), (y1, y2))


monos = st.builds(mono, st.integers(-2, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
polys = st.dictionaries(monos, st.integers(-5, 5), max_size=5).map(LaurentPolynomial)
ONE = LaurentPolynomial.constant(1, M, N, Q)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPolynomial()
    assert a * ONE == a


@given(polys, polys, st.integers(0, 4))
def test_truncated_product_is_truncation(a, b, cap):
    assert poly_mul_truncated(a, b, cap) == (a * b).truncate(cap)


@given(polys)
def test_json_roundtrip(a):
    assert LaurentPolynomial.from_json(a.to_json()) == a


def test_zero_terms_dropped():
    p = LaurentPolynomial({mono(1): 2}) + LaurentPolynomial({mono(1): -2})
    assert not p and len(p) == 0 and str(p) == "0"


def test_degree_cut():
    a = ONE + LaurentPolynomial.monomial(mono(x=1, y1=1))
    b = ONE + LaurentPolynomial.monomial(mono(x=-1, y1=1))
    got = poly_mul_truncated(a, b, 1)
    assert got == ONE + LaurentPolynomial({mono(x=1, y1=1): 1, mono(x=-1, y1=1): 1})


def test_geometric_series():
    g = geometric_series(mono(t=1, y1=1), 2)
    assert g == LaurentPolynomial({mono(): 1, mono(t=1, y1=1): 1, mono(t=2, y1=2): 1})
    g = geometric_series(mono(t=1, y1=1), 3, sign=-1)
    assert g.coefficient(mono(t=3, y1=3)) == -1
    # (1 - v) * 1/(1 - v) = 1 up to the cap
    v = LaurentPolynomial.monomial(mono(x=1, y2=1))
    assert poly_mul_truncated(ONE - v, geometric_series(mono(x=1, y2=1), 5), 5) == ONE


def test_product_order_independent():
    factors = [geometric_series(mono(x=1, y1=1), 4), geometric_series(mono(x=-1, y2=1), 4)]
    factors += [ONE + LaurentPolynomial.monomial(mono(t=1, y1=1)), ONE + LaurentPolynomial.monomial(mono(t=1, y2=1))]
    ref = product_truncated(factors, 4, ONE)
    rng = random.Random(7)
    for _ in range(10):
        rng.shuffle(factors)
        assert product_truncated(factors, 4, ONE) == ref


def test_monomial_str():
    assert str(Monomial((-1,), (1,), (0, 2))) == "x1^-1*t1*y2^2"
    assert str(Monomial.one(1, 1, 1)) == "1"
