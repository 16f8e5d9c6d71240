import pytest
from hypothesis import given
from hypothesis import strategies as st

from stringlinks.errors import CapExceeded, DomainError
from stringlinks.magnus import (
    MAX_BOUND,
    NcPoly,
    cyclize,
    cyclized_vanishing_order,
    filtration_degree,
    format_order,
    magnus,
    magnus_ring,
    necklace,
)
from stringlinks.words import Alphabet, GroupRingElement, GroupWord, invert, parse_element, parse_word

XY = Alphabet.from_names(["x", "y"])
XYZ = Alphabet.from_names(["x", "y", "z"])


def W(t):
    return parse_word(t, XY)


def E(t):
    return parse_element(t, XY)


def P(N, terms):
    """Polynomial from {"XY": c} with X=1, Y=2."""
    idx = {"X": 1, "Y": 2, "Z": 3}
    return NcPoly(N, {tuple(idx[ch] for ch in k): v for k, v in terms.items()}, XY)


BORROMEAN = "x y x^-1 y^-1"

words = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=8).map(
    lambda ls: GroupWord.from_letters(ls, XYZ)
)
bounds = st.integers(0, 5)


def test_magnus_examples():
    assert magnus(W("x"), 3) == P(3, {"": 1, "X": 1})
    assert magnus(W("x^-1"), 2) == P(2, {"": 1, "X": -1, "XX": 1})
    assert magnus(W(BORROMEAN), 2) == P(2, {"": 1, "XY": 1, "YX": -1})
    assert str(magnus(W(BORROMEAN), 2)) == "1 + X.Y - Y.X"


def test_magnus_borromean_degree3_by_hand():
    # (1+X)(1+Y)(1-X+X^2)(1-Y+Y^2), degree-3 part
    d3 = magnus(W(BORROMEAN), 3).homogeneous(3)
    expected = P(3, {"YXX": 1, "YXY": 1, "XYX": -1, "XYY": -1})
    assert d3 == expected
    assert cyclize(expected) == 0


def test_magnus_ring_examples():
    assert magnus_ring(E(BORROMEAN + " - 1"), 2) == P(2, {"XY": 1, "YX": -1})
    assert magnus_ring(GroupRingElement.zero(XY), 4) == P(4, {})
    prod = E(BORROMEAN + " - 1") * E("y - 1")
    assert magnus_ring(prod, 3).homogeneous(3) == P(3, {"XYY": 1, "YXY": -1})


def test_filtration_examples():
    w1 = E(BORROMEAN + " - 1")
    assert filtration_degree(w1, 4) == 2
    assert filtration_degree(w1 * E("y - 1"), 4) == 3
    assert filtration_degree(E("x - 1"), 4) == 1
    assert filtration_degree(E("1 - 1"), 4) is None
    with pytest.raises(DomainError):
        filtration_degree(E("x"), 4)


def test_cyclize_examples():
    assert cyclize(P(2, {"XY": 1, "YX": -1})) == 0
    assert cyclize(P(2, {"XX": 1})).terms == {(1, 1): 1}
    assert necklace((2, 1, 1)) == (1, 1, 2)


def test_cyclized_order_examples():
    w1 = E(BORROMEAN + " - 1")
    assert cyclized_vanishing_order(w1, 3) is None
    assert format_order(cyclized_vanishing_order(w1, 3), 3) == "> 3"
    assert cyclized_vanishing_order(E("x - 1"), 3) == 1
    assert cyclized_vanishing_order(E("x y - y x"), 3) is None
    # the certified bound stops at degree 4
    assert cyclized_vanishing_order(w1, 4) == 4


def test_bounds_enforced():
    with pytest.raises(DomainError):
        magnus(W("x"), -1)
    with pytest.raises(CapExceeded):
        magnus(W("x"), MAX_BOUND + 1)


@given(words, words, bounds)
def test_multiplicativity(u, v, N):
    assert magnus(u * v, N) == magnus(u, N) * magnus(v, N)


@given(words, bounds)
def test_inverse_law(w, N):
    assert magnus(w, N) * magnus(invert(w), N) == NcPoly.one(N, XYZ)


@given(words)
def test_degree_one_is_abelianization(w):
    d1 = magnus(w, 3).homogeneous(1)
    for i in (1, 2, 3):
        assert d1.coefficient((i,)) == w.exponent_sum(i)


@given(words, words, st.integers(1, 4))
def test_cyclize_conjugation_invariant(g, w, N):
    assert cyclize(magnus(g * w * invert(g), N)) == cyclize(magnus(w, N))


polys = st.dictionaries(
    st.lists(st.sampled_from([1, 2]), max_size=3).map(tuple), st.integers(-3, 3), max_size=5
).map(lambda t: NcPoly(3, t, XY))


@given(polys, polys)
def test_cyclize_kills_commutators(p, q):
    assert cyclize(p * q) == cyclize(q * p)


elements = st.lists(
    st.tuples(st.integers(-2, 2), st.lists(st.sampled_from([1, -1, 2, -2]), max_size=5)), max_size=4
).map(
    lambda ts: sum(
        (GroupRingElement.from_word(GroupWord.from_letters(ls, XY), c) for c, ls in ts), GroupRingElement.zero(XY)
    )
)


@given(elements, st.integers(1, 4))
def test_cyclized_order_at_least_filtration(e, N):
    e = e - GroupRingElement.one(XY) * e.augmentation()
    f = filtration_degree(e, N)
    c = cyclized_vanishing_order(e, N)
    if f is None:
        assert c is None
    elif c is not None:
        assert c >= f
