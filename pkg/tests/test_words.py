import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stringlinks.errors import DomainError, ParseError
from stringlinks.words import (
    Alphabet,
    ConjClass,
    GroupRingElement,
    GroupWord,
    commutator,
    conj_canonical,
    cyclically_reduce,
    invert,
    multiply,
    parse_element,
    parse_word,
    power,
    ring_multiply,
    trace,
)

XY = Alphabet.from_names(["x", "y"])
XYZ = Alphabet.from_names(["x", "y", "z"])


def W(text, alpha=XY):
    return parse_word(text, alpha)


def E(text, alpha=XY):
    return parse_element(text, alpha)


letters = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=12)
words = letters.map(lambda ls: GroupWord.from_letters(ls, XY))
elements = st.lists(st.tuples(st.integers(-3, 3), words), max_size=4).map(
    lambda ts: sum((GroupRingElement.from_word(w, c) for c, w in ts), GroupRingElement.zero(XY))
)


# ---------------------------------------------------------------- golden values


def test_parse_examples():
    assert W("x y x^-1 y^-1").letters == (1, 2, -1, -2)
    assert W("x x^-1").letters == ()
    assert W("y^3").letters == (2, 2, 2)
    assert W("1").letters == ()


def test_parse_errors():
    with pytest.raises(ParseError):
        W("x q")
    with pytest.raises(ParseError):
        W("x^")
    with pytest.raises(ParseError):
        W("x^a")


def test_reduced_invariant_enforced():
    with pytest.raises(DomainError):
        GroupWord((1, -1), XY)


def test_multiply_examples():
    assert multiply(W("x"), W("x^-1")).letters == ()
    assert multiply(W("x y"), W("y^-1 x")) == W("x^2")
    assert multiply(GroupWord.identity(XY), W("x y")) == W("x y")


def test_invert_examples():
    assert invert(W("x y")) == W("y^-1 x^-1")
    assert invert(W("1")) == W("1")
    assert invert(W("x^-1")) == W("x")


def test_commutator_examples():
    x, y = W("x"), W("y")
    assert commutator(x, y) == W("x y x^-1 y^-1")
    assert commutator(x, x) == W("1")
    assert commutator(x, W("1")) == W("1")


def test_power():
    assert power(W("x y"), 2) == W("x y x y")
    assert power(W("x y"), -1) == W("y^-1 x^-1")
    assert power(W("x y"), 0) == W("1")


def test_conj_examples():
    assert conj_canonical(W("x y x^-1")) == conj_canonical(W("y"))
    assert conj_canonical(W("x y")) == conj_canonical(W("y x"))
    assert conj_canonical(W("1")).word.letters == ()
    assert conj_canonical(W("x")) != conj_canonical(W("x^-1"))


def test_ring_examples():
    w = GroupRingElement.from_word(commutator(W("x"), W("y")))
    one = GroupRingElement.one(XY)
    y = GroupRingElement.from_word(W("y"))
    wy = GroupRingElement.from_word(commutator(W("x"), W("y")) * W("y"))
    assert ring_multiply(w - one, y - one) == wy - w - y + one
    assert ring_multiply(w, one) == w
    x = GroupRingElement.from_word(W("x"))
    xi = GroupRingElement.from_word(W("x^-1"))
    assert ring_multiply(x - one, xi - one) == one * 2 - x - xi


def test_trace_examples():
    assert not trace(E("x y x^-1 - y"))
    assert str(trace(E("1"))) == "[1]"
    w = E("x y x^-1 y^-1 - 1")
    assert not trace(w + w * E("y - 1"))
    assert trace(w - w * E("y - 1"))


def test_trace_by_hand_expansion():
    # (w - 1) + (w - 1)(y - 1) = w y - y, and w y = x y x^-1 is conjugate to y
    w = E("x y x^-1 y^-1 - 1")
    assert w + w * E("y - 1") == E("x y x^-1 - y")


def test_element_parse_and_print():
    e = E("2*x y - 3*y^-1 + 1")
    assert e.augmentation() == 0
    assert E(str(e)) == e
    assert E(str(-e)) == -e
    assert str(GroupRingElement.zero(XY)) == "0"
    with pytest.raises(ParseError):
        E("2* + x")


# ---------------------------------------------------------------- properties


@given(letters, st.data())
def test_free_reduction_confluence(ls, data):
    w = GroupWord.from_letters(ls, XY)
    noisy = list(w.letters)
    for _ in range(data.draw(st.integers(0, 4))):
        pos = data.draw(st.integers(0, len(noisy)))
        a = data.draw(st.sampled_from([1, -1, 2, -2]))
        noisy[pos:pos] = [a, -a]
    assert GroupWord.from_letters(noisy, XY) == w


def _naive_reduce(ls):
    # reduce from the right end instead of a left-to-right stack
    ls = list(ls)
    changed = True
    while changed:
        changed = False
        for i in range(len(ls) - 1, 0, -1):
            if i < len(ls) and ls[i] == -ls[i - 1]:
                del ls[i - 1 : i + 1]
                changed = True
                break
    return tuple(ls)


@given(letters)
def test_reduction_order_independent(ls):
    assert GroupWord.from_letters(ls, XY).letters == _naive_reduce(ls)


@given(words, words, words)
def test_multiplication_associative(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * invert(a) == GroupWord.identity(XY)


@given(words)
def test_word_roundtrip(w):
    assert W(str(w)) == w


@given(words, words)
def test_conjugacy_soundness(g, w):
    assert conj_canonical(g * w * invert(g)) == conj_canonical(w)


def _rotations(seq):
    return {tuple(seq[i:] + seq[:i]) for i in range(max(len(seq), 1))}


def test_conjugacy_completeness_bruteforce():
    all_words = set()
    for n in range(5):
        for ls in itertools.product([1, -1, 2, -2], repeat=n):
            all_words.add(GroupWord.from_letters(ls, XY))
    all_words = sorted(all_words, key=GroupWord.sort_key)
    classes = {w: conj_canonical(w) for w in all_words}
    rots = {w: _rotations(list(cyclically_reduce(w.letters))) for w in all_words}
    for a in all_words:
        for b in all_words:
            same = tuple(cyclically_reduce(b.letters)) in rots[a]
            assert (classes[a] == classes[b]) == same, (a, b)


@given(elements, elements)
def test_trace_kills_commutators(a, b):
    assert not trace(a * b - b * a)


@given(elements, elements, elements)
def test_ring_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@given(elements)
def test_element_roundtrip(e):
    assert E(str(e)) == e


def test_trace_conjclass_print():
    assert isinstance(conj_canonical(W("x y")), ConjClass)
    assert str(conj_canonical(W("y x"))).startswith("[")


def test_alphabet_errors():
    with pytest.raises(DomainError):
        Alphabet.from_names(["x", "x"])
    with pytest.raises(DomainError):
        multiply(W("x"), W("x", XYZ))
