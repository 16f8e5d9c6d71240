"""Pure braids as string links: Artin action, longitudes, Milnor invariants.

Conventions (fixed once, checked by the tests):

* ``s_i`` is the positive crossing of strands in positions ``i`` and ``i+1``.
* Braid words are read bottom to top and act on the free group by
  ``s_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i``.
* ``artin_action(b1 * b2) == artin_action(b2) @ artin_action(b1)``,
  where ``f @ g`` means "apply g, then f".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from stringlinks.errors import DomainError, ParseError
from stringlinks.magnus import check_bound, magnus
from stringlinks.words import Alphabet, GroupWord, invert


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise DomainError(f"strand count must be positive, got {self.strands}")
        for a in self.letters:
            if a == 0 or abs(a) > self.strands - 1:
                raise DomainError(f"generator s{abs(a)} out of range for {self.strands} strands")

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise DomainError(f"strand counts differ: {self.strands} vs {other.strands}")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-a for a in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"s{a}" if a > 0 else f"s{-a}^-1" for a in self.letters)


_SIGMA = re.compile(r"^s(\d+)(?:\^(-?\d+))?$")
_PURE = re.compile(r"^A(?:(\d)(\d)|\((\d+),(\d+)\))(?:\^(-?\d+))?$")


def parse_braid(text: str, k: int) -> BraidWord:
    """Parse ``s1 s2^-1 ...``.

    Pure generators may also be written ``A13`` / ``A(1,3)``, optionally with
    an exponent; they expand to their Artin words.  No reduction is done.
    """
    letters: list[int] = []
    for tok in text.split():
        if tok == "1":
            continue
        m = _SIGMA.match(tok)
        if m:
            i = int(m.group(1))
            exp = int(m.group(2)) if m.group(2) is not None else 1
            if exp == 0:
                raise ParseError(f"zero exponent in {tok!r}")
            if not 1 <= i <= k - 1:
                raise DomainError(f"generator {tok!r} out of range for {k} strands")
            letters.extend([i if exp > 0 else -i] * abs(exp))
            continue
        m = _PURE.match(tok)
        if m:
            i, j = (int(m.group(1)), int(m.group(2))) if m.group(1) else (int(m.group(3)), int(m.group(4)))
            exp = int(m.group(5)) if m.group(5) is not None else 1
            if exp == 0:
                raise ParseError(f"zero exponent in {tok!r}")
            a = pure_generator(i, j, k)
            if exp < 0:
                a = a.inverse()
            letters.extend(a.letters * abs(exp))
            continue
        raise ParseError(f"malformed braid token {tok!r}")
    return BraidWord(k, tuple(letters))


def permutation(b: BraidWord) -> tuple[int, ...]:
    """``result[s - 1]`` is the final position of the strand starting at position ``s``."""
    at = list(range(1, b.strands + 1))  # at[p - 1] = strand currently at position p
    for a in b.letters:
        p = abs(a)
        at[p - 1], at[p] = at[p], at[p - 1]
    final = [0] * b.strands
    for pos, strand in enumerate(at, start=1):
        final[strand - 1] = pos
    return tuple(final)


def is_pure(b: BraidWord) -> bool:
    return permutation(b) == tuple(range(1, b.strands + 1))


def _require_pure(b: BraidWord):
    if not is_pure(b):
        raise DomainError(f"braid {b} is not pure (permutation {permutation(b)})")


def pure_generator(i: int, j: int, k: int) -> BraidWord:
    """``A_ij = (s_{j-1} ... s_{i+1}) s_i^2 (s_{i+1}^-1 ... s_{j-1}^-1)``."""
    if not 1 <= i < j <= k:
        raise DomainError(f"need 1 <= i < j <= k, got i={i}, j={j}, k={k}")
    left = tuple(range(j - 1, i, -1))
    right = tuple(-a for a in reversed(left))
    return BraidWord(k, left + (i, i) + right)


@dataclass(frozen=True)
class FreeAutomorphism:
    """Endomorphism of the free group on ``x_1..x_k`` given by generator images."""

    strands: int
    images: tuple[GroupWord, ...]

    @classmethod
    def identity(cls, k: int) -> FreeAutomorphism:
        alpha = Alphabet.standard(k)
        return cls(k, tuple(GroupWord.generator(i, alpha) for i in range(1, k + 1)))

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet.standard(self.strands)

    def __call__(self, w: GroupWord) -> GroupWord:
        inverses = [invert(img).letters for img in self.images]
        letters: list[int] = []
        for a in w.letters:
            letters.extend(self.images[a - 1].letters if a > 0 else inverses[-a - 1])
        return GroupWord.from_letters(letters, self.alphabet)

    def __matmul__(self, other: FreeAutomorphism) -> FreeAutomorphism:
        """``(self @ other)(w) == self(other(w))``."""
        return FreeAutomorphism(self.strands, tuple(self(img) for img in other.images))

    def is_identity(self) -> bool:
        return self == FreeAutomorphism.identity(self.strands)

    def preserves_boundary(self) -> bool:
        """Whether ``x_1 ... x_k`` is fixed."""
        out = GroupWord.identity(self.alphabet)
        for img in self.images:
            out = out * img
        return out.letters == tuple(range(1, self.strands + 1))


def _generator_action(k: int, letter: int) -> FreeAutomorphism:
    alpha = Alphabet.standard(k)
    x = [None] + [GroupWord.generator(i, alpha) for i in range(1, k + 1)]
    images = list(x[1:])
    i = abs(letter)
    if letter > 0:
        images[i - 1] = x[i] * x[i + 1] * invert(x[i])
        images[i] = x[i]
    else:
        images[i - 1] = x[i + 1]
        images[i] = invert(x[i + 1]) * x[i] * x[i + 1]
    return FreeAutomorphism(k, tuple(images))


@lru_cache(maxsize=4096)
def artin_action(b: BraidWord) -> FreeAutomorphism:
    phi = FreeAutomorphism.identity(b.strands)
    for a in b.letters:
        phi = _generator_action(b.strands, a) @ phi
    return phi


@dataclass(frozen=True)
class Longitude:
    strand: int
    word: GroupWord


def longitude(b: BraidWord, i: int) -> Longitude:
    """Zero-framed ``w_i`` with ``artin_action(b)(x_i) = w_i x_i w_i^-1``."""
    _require_pure(b)
    if not 1 <= i <= b.strands:
        raise DomainError(f"strand {i} out of range for {b.strands} strands")
    img = artin_action(b).images[i - 1].letters
    half = len(img) // 2
    conj = img[:half]
    if len(img) % 2 != 1 or img[half] != i or img[half + 1 :] != tuple(-a for a in reversed(conj)):
        raise DomainError(f"image of x{i} is not a conjugate of x{i}")
    w = GroupWord(conj, Alphabet.standard(b.strands))
    e = w.exponent_sum(i)
    w = w * GroupWord.from_letters([-i if e > 0 else i] * abs(e), w.alphabet)
    return Longitude(i, w)


def milnor(b: BraidWord, I: Sequence[int], j: int, N: int | None = None) -> int:
    """Coefficient of ``X_{i1}...X_{im}`` in the Magnus expansion of the ``j``-th longitude.

    Repeated indices are allowed; such invariants carry the usual caveats.
    """
    I = tuple(I)
    if N is None:
        N = max(len(I), 1)
    check_bound(N)
    if len(I) > N:
        raise DomainError(f"sequence of length {len(I)} needs truncation bound >= {len(I)}")
    for a in I + (j,):
        if not 1 <= a <= b.strands:
            raise DomainError(f"index {a} out of range for {b.strands} strands")
    return magnus(longitude(b, j).word, N).coefficient(I)


def free_pair_embed(w: GroupWord) -> BraidWord:
    """Send ``x -> A13``, ``y -> A23`` in the 3-strand pure braid group."""
    if w.alphabet.names != ("x", "y"):
        raise DomainError(f"expected alphabet (x, y), got {w.alphabet.names}")
    gens = {1: pure_generator(1, 3, 3), 2: pure_generator(2, 3, 3)}
    out = BraidWord(3)
    for a in w.letters:
        out = out * (gens[a] if a > 0 else gens[-a].inverse())
    return out


def linking_number_oracle(b: BraidWord, i: int, j: int) -> int:
    """Half the signed number of crossings between strands ``i`` and ``j``."""
    _require_pure(b)
    at = list(range(1, b.strands + 1))
    total = 0
    for a in b.letters:
        p = abs(a)
        if {at[p - 1], at[p]} == {i, j}:
            total += 1 if a > 0 else -1
        at[p - 1], at[p] = at[p], at[p - 1]
    return total // 2
