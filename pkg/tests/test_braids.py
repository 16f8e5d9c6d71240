import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from _braid_gen import random_braid, random_pure_braid
from stringlinks.braids import (
    BraidWord,
    FreeAutomorphism,
    artin_action,
    free_pair_embed,
    is_pure,
    linking_number_oracle,
    longitude,
    milnor,
    parse_braid,
    permutation,
    pure_generator,
)
from stringlinks.errors import CapExceeded, DomainError, ParseError
from stringlinks.magnus import magnus
from stringlinks.words import Alphabet, GroupWord, commutator, parse_word

A3 = Alphabet.standard(3)
XY = Alphabet.from_names(["x", "y"])


def B(text, k):
    return parse_braid(text, k)


def X(text, k):
    return parse_word(text, Alphabet.standard(k))


BORROMEAN = free_pair_embed(commutator(parse_word("x", XY), parse_word("y", XY)))

braids = st.integers(2, 4).flatmap(
    lambda k: st.lists(st.sampled_from([s * i for i in range(1, k) for s in (1, -1)]), max_size=12).map(
        lambda ls: BraidWord(k, tuple(ls))
    )
)


def test_parse_examples():
    assert B("s1 s1", 2).letters == (1, 1)
    with pytest.raises(DomainError):
        B("s2^-1", 2)
    assert B("", 3) == BraidWord(3)
    assert B("s1^-2", 2).letters == (-1, -1)
    assert B("A13", 3) == pure_generator(1, 3, 3)
    assert B("A(1,3)^-1", 3) == pure_generator(1, 3, 3).inverse()
    with pytest.raises(ParseError):
        B("t1", 3)


def test_print_roundtrip():
    b = B("s1 s2^-1 s1", 3)
    assert str(b) == "s1 s2^-1 s1"
    assert B(str(b), 3) == b
    assert str(BraidWord(3)) == "1"


def test_permutation_examples():
    assert not is_pure(B("s1", 2))
    assert permutation(B("s1", 2)) == (2, 1)
    assert is_pure(B("s1 s1", 2))
    assert is_pure(BORROMEAN)


def test_pure_generators():
    assert pure_generator(1, 2, 2) == B("s1 s1", 2)
    assert pure_generator(1, 3, 3) == B("s2 s1 s1 s2^-1", 3)
    assert is_pure(pure_generator(2, 3, 3))
    with pytest.raises(DomainError):
        pure_generator(2, 2, 3)


def test_artin_examples():
    assert artin_action(B("s1", 2)).images[0] == X("x1 x2 x1^-1", 2)
    assert artin_action(B("s1 s1^-1", 2)).is_identity()
    assert artin_action(B("s1 s1", 2)).images[1] == X("x1 x2 x1^-1", 2)


def test_longitude_examples():
    assert longitude(BraidWord(3), 2).word.letters == ()
    w1 = longitude(B("s1 s1", 2), 1).word
    assert w1 == X("x1 x2 x1^-1", 2)
    img = artin_action(B("s1 s1", 2)).images[0]
    assert w1 * X("x1", 2) * w1.inverse() == img
    assert longitude(B("s1 s1", 2), 2).word == X("x1", 2)
    with pytest.raises(DomainError):
        longitude(B("s1", 2), 1)


def test_milnor_examples():
    assert milnor(BraidWord(3), (1, 2), 3, 3) == 0
    assert milnor(B("s1 s1", 2), (1,), 2, 2) == 1
    assert abs(milnor(BORROMEAN, (1, 2), 3, 3)) == 1
    # sign under the fixed conventions
    assert milnor(BORROMEAN, (1, 2), 3, 3) == 1
    assert milnor(BORROMEAN, (2, 1), 3, 3) == -1
    with pytest.raises(DomainError):
        milnor(B("s1", 2), (1,), 2)
    with pytest.raises(DomainError):
        milnor(BORROMEAN, (1, 2), 3, 1)


def test_free_pair_embed_examples():
    assert free_pair_embed(parse_word("x", XY)) == pure_generator(1, 3, 3)
    a13, a23 = pure_generator(1, 3, 3), pure_generator(2, 3, 3)
    assert BORROMEAN == a13 * a23 * a13.inverse() * a23.inverse()
    assert free_pair_embed(parse_word("1", XY)) == BraidWord(3)
    with pytest.raises(DomainError):
        free_pair_embed(X("x1", 2))


def test_linking_oracle_examples():
    assert linking_number_oracle(B("s1 s1", 2), 1, 2) == 1
    assert linking_number_oracle(BraidWord(3), 1, 3) == 0
    for i, j in ((1, 2), (1, 3), (2, 3)):
        assert linking_number_oracle(BORROMEAN, i, j) == 0
        assert milnor(BORROMEAN, (i,), j, 2) == 0
        assert milnor(BORROMEAN, (j,), i, 2) == 0


@given(braids)
def test_product_preserved(b):
    phi = artin_action(b)
    assert phi.preserves_boundary()


@given(braids, braids)
def test_artin_homomorphism(b1, b2):
    if b1.strands != b2.strands:
        b2 = BraidWord(b1.strands, tuple(a for a in b2.letters if abs(a) < b1.strands))
    assert artin_action(b1 * b2) == artin_action(b2) @ artin_action(b1)


@given(braids)
def test_images_are_conjugates(b):
    phi = artin_action(b)
    perm = permutation(b)
    for i, img in enumerate(phi.images, start=1):
        ls = img.letters
        h = len(ls) // 2
        assert len(ls) % 2 == 1
        assert ls[h + 1 :] == tuple(-a for a in reversed(ls[:h]))
        assert abs(ls[h]) in perm


def test_milnor_matches_linking_numbers(rng):
    for _ in range(50):
        k = rng.randint(2, 4)
        b = random_pure_braid(rng, k)
        assert is_pure(b) and len(b) <= 20
        for i in range(1, k + 1):
            for j in range(1, k + 1):
                if i != j:
                    lk = linking_number_oracle(b, i, j)
                    assert milnor(b, (i,), j, 2) == lk
                    assert milnor(b, (j,), i, 2) == lk


def test_pairwise_invariants_conjugation_invariant(rng):
    for _ in range(20):
        k = rng.randint(2, 4)
        b, g = random_pure_braid(rng, k, 12), random_pure_braid(rng, k, 8)
        c = g * b * g.inverse()
        pairs = [(i, j) for i in range(1, k + 1) for j in range(1, k + 1) if i != j]
        assert sorted(milnor(b, (i,), j, 2) for i, j in pairs) == sorted(milnor(c, (i,), j, 2) for i, j in pairs)


def test_longitudes_zero_framed(rng):
    for _ in range(30):
        k = rng.randint(2, 4)
        b = random_pure_braid(rng, k)
        phi = artin_action(b)
        for i in range(1, k + 1):
            w = longitude(b, i).word
            assert w.exponent_sum(i) == 0
            assert w * X(f"x{i}", k) * w.inverse() == phi.images[i - 1]
