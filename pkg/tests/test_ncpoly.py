import pytest
from hypothesis import given, settings, strategies as st

from qcube.cyclo import CycloScalar, ONE, qpow
from qcube.ncpoly import (
    AlphabetError,
    NCPoly,
    TensorPoly,
    poly_text,
    tensor,
    tensor_mul,
    word_text,
)


ABC = ("a", "b", "c")

words = st.lists(st.sampled_from(ABC), min_size=0, max_size=4).map(tuple)
coeffs = st.builds(
    CycloScalar,
    st.fractions(min_value=-9, max_value=9, max_denominator=4),
    st.fractions(min_value=-9, max_value=9, max_denominator=4),
)
polys = st.dictionaries(words, coeffs, max_size=4).map(
    lambda d: NCPoly(d, alphabet=ABC)
)


def gen(x):
    return NCPoly.gen(x, ABC)


def test_product_concatenates_words():
    p = gen("a") * gen("b")
    assert p == NCPoly({("a", "b"): 1}, ABC)


def test_free_algebra_is_noncommutative():
    a, b = gen("a"), gen("b")
    prod = (a + b) * (a - b)
    assert prod == NCPoly(
        {("a", "a"): 1, ("a", "b"): -1, ("b", "a"): 1, ("b", "b"): -1}, ABC
    )
    assert a * b != b * a


def test_scalar_collection():
    b = gen("b")
    assert qpow(1) * b + qpow(2) * b == -1 * b


def test_canonical_form_drops_zeros():
    p = gen("a") - gen("a")
    assert p.is_zero()
    assert p.terms == {}


def test_alphabet_mismatch():
    p = NCPoly.gen("a", ("a", "b"))
    q = NCPoly.gen("x", ("x", "y"))
    with pytest.raises(AlphabetError):
        p + q
    with pytest.raises(AlphabetError):
        p * q
    with pytest.raises(AlphabetError):
        NCPoly({("z",): 1}, alphabet=("a", "b"))


def test_tensor_mul():
    a, b = gen("a"), gen("b")
    x = tensor(a, a)
    y = tensor(b, b)
    assert tensor_mul(x, y) == tensor(a * b, a * b)
    one = NCPoly.one(ABC)
    mixed = tensor(one, a) + tensor(b, one)
    sq = tensor_mul(mixed, mixed)
    assert sq == (
        tensor(one, a * a) + tensor(b, a).scale(2) + tensor(b * b, one)
    )
    assert tensor_mul(tensor(a, one), tensor(one, b)) == tensor(a, b)


def test_tensor_map_slot():
    a, b = gen("a"), gen("b")
    tp = tensor(a, b)
    swapped = tp.map_slot(0, lambda w: NCPoly.monomial(tuple(reversed(w)), alphabet=ABC))
    assert swapped == tensor(a, b)  # single letters unchanged
    doubled = tp.map_slot(1, lambda w: NCPoly.monomial(w + w, alphabet=ABC))
    assert doubled == tensor(a, b * b)


def test_text():
    a, b = gen("a"), gen("b")
    p = qpow(2) * (a * b * b) + NCPoly.one(ABC)
    assert poly_text(p) == "1 + q^-1*a*b^2"
    assert poly_text(p, square_style=True) == "1 + q^2*a*b^2"
    assert word_text(("d", "d"), inverse_of={"d": "a"}) == "a^-2"
    assert poly_text(NCPoly.zero()) == "0"
    assert poly_text(-1 * a) == "-a"


@given(polys, polys, polys)
@settings(max_examples=100, derandomize=True)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) * r == p * r + q * r


@given(polys)
@settings(max_examples=100, derandomize=True)
def test_additive_inverse_exact(p):
    assert (p + p.scale(-1)).is_zero()
    assert (p - p).is_zero()
