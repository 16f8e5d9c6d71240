"""Free-group words, integral group-ring elements and conjugacy classes.

Letters are stored Tietze style: generator ``i`` is ``i`` and its inverse
is ``-i`` (indices start at 1).  Every word is kept freely reduced.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from stringlinks.errors import DomainError, ParseError


@dataclass(frozen=True)
class Generator:
    index: int
    display_name: str | None = None

    def __post_init__(self):
        if self.index < 1:
            raise DomainError(f"generator index must be positive, got {self.index}")

    @property
    def name(self) -> str:
        return self.display_name or f"x{self.index}"


@dataclass(frozen=True)
class Alphabet:
    generators: tuple[Generator, ...]

    def __post_init__(self):
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise DomainError(f"duplicate generator names in {names}")
        if [g.index for g in self.generators] != list(range(1, len(names) + 1)):
            raise DomainError("generator indices must be 1..k in order")

    @classmethod
    def from_names(cls, names: Iterable[str]) -> Alphabet:
        return cls(tuple(Generator(i, n) for i, n in enumerate(names, start=1)))

    @classmethod
    def standard(cls, k: int) -> Alphabet:
        """The alphabet ``x1, ..., xk``."""
        return _standard(k)

    def __len__(self):
        return len(self.generators)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def index_of(self, name: str) -> int:
        for g in self.generators:
            if g.name == name:
                return g.index
        raise ParseError(f"unknown generator {name!r}; alphabet is {', '.join(self.names)}")

    def name_of(self, index: int) -> str:
        return self.generators[index - 1].name


@lru_cache(maxsize=64)
def _standard(k: int) -> Alphabet:
    return Alphabet.from_names(f"x{i}" for i in range(1, k + 1))


def letter_key(letter: int) -> tuple[int, int]:
    """Total order on letters: by generator index, then ``x < x^-1``."""
    return (abs(letter), 0 if letter > 0 else 1)


def _free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


@dataclass(frozen=True)
class GroupWord:
    """A freely reduced word in the free group on ``alphabet``."""

    letters: tuple[int, ...]
    alphabet: Alphabet

    def __post_init__(self):
        k = len(self.alphabet)
        for a in self.letters:
            if a == 0 or abs(a) > k:
                raise DomainError(f"letter {a} outside alphabet of size {k}")
        for a, b in zip(self.letters, self.letters[1:]):
            if a == -b:
                raise DomainError("word is not freely reduced")

    @classmethod
    def from_letters(cls, letters: Iterable[int], alphabet: Alphabet) -> GroupWord:
        return cls(_free_reduce(letters), alphabet)

    @classmethod
    def identity(cls, alphabet: Alphabet) -> GroupWord:
        return cls((), alphabet)

    @classmethod
    def generator(cls, index: int, alphabet: Alphabet) -> GroupWord:
        return cls((index,), alphabet)

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Letters as ``(generator index, sign)`` pairs."""
        return tuple((abs(a), 1 if a > 0 else -1) for a in self.letters)

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: GroupWord) -> GroupWord:
        return multiply(self, other)

    def inverse(self) -> GroupWord:
        return invert(self)

    def exponent_sum(self, index: int) -> int:
        return sum(1 if a > 0 else -1 for a in self.letters if abs(a) == index)

    def sort_key(self):
        return (len(self.letters), tuple(letter_key(a) for a in self.letters))

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(
            self.alphabet.name_of(a) if a > 0 else f"{self.alphabet.name_of(-a)}^-1"
            for a in self.letters
        )


def _check_same(a: Alphabet, b: Alphabet):
    if a != b:
        raise DomainError(f"alphabet mismatch: {a.names} vs {b.names}")


_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def parse_word(text: str, alphabet: Alphabet | Sequence[Generator]) -> GroupWord:
    """Parse whitespace-separated ``name``, ``name^-1`` or ``name^k`` tokens.

    A lone ``1`` denotes the empty word.
    """
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(tuple(alphabet))
    letters: list[int] = []
    for tok in text.split():
        if tok == "1":
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise ParseError(f"malformed token {tok!r}")
        idx = alphabet.index_of(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if exp == 0:
            raise ParseError(f"zero exponent in {tok!r}")
        letters.extend([idx if exp > 0 else -idx] * abs(exp))
    return GroupWord.from_letters(letters, alphabet)


def multiply(w1: GroupWord, w2: GroupWord) -> GroupWord:
    _check_same(w1.alphabet, w2.alphabet)
    a, b = list(w1.letters), w2.letters
    i = 0
    while a and i < len(b) and a[-1] == -b[i]:
        a.pop()
        i += 1
    return GroupWord(tuple(a) + b[i:], w1.alphabet)


def invert(w: GroupWord) -> GroupWord:
    return GroupWord(tuple(-a for a in reversed(w.letters)), w.alphabet)


def commutator(a: GroupWord, b: GroupWord) -> GroupWord:
    """``a b a^-1 b^-1``."""
    return a * b * invert(a) * invert(b)


def power(w: GroupWord, k: int) -> GroupWord:
    base = w if k >= 0 else invert(w)
    out = GroupWord.identity(w.alphabet)
    for _ in range(abs(k)):
        out = out * base
    return out


def cyclically_reduce(letters: Sequence[int]) -> tuple[int, ...]:
    i, j = 0, len(letters) - 1
    while i < j and letters[i] == -letters[j]:
        i += 1
        j -= 1
    return tuple(letters[i : j + 1])


def minimal_rotation(seq: Sequence, key=None) -> tuple:
    """Lexicographically least rotation of ``seq`` (brute force; inputs are short)."""
    seq = tuple(seq)
    if not seq:
        return seq
    if key is None:
        return min(seq[i:] + seq[:i] for i in range(len(seq)))
    return min(
        (seq[i:] + seq[:i] for i in range(len(seq))),
        key=lambda r: tuple(key(x) for x in r),
    )


@dataclass(frozen=True)
class ConjClass:
    """Conjugacy class of a free-group element, stored as its canonical cyclic word."""

    word: GroupWord

    def sort_key(self):
        return self.word.sort_key()

    def __str__(self):
        return f"[{self.word}]"


def conj_canonical(w: GroupWord) -> ConjClass:
    letters = minimal_rotation(cyclically_reduce(w.letters), key=letter_key)
    return ConjClass(GroupWord(letters, w.alphabet))


def _clean(terms: Mapping) -> dict:
    return {k: v for k, v in terms.items() if v}


def _format_terms(items, fmt_key) -> str:
    """Render ``(key, coeff)`` pairs as ``a - 2*b + c``; ``fmt_key`` returns None for the unit."""
    if not items:
        return "0"
    parts = []
    for n, (key, c) in enumerate(items):
        body = fmt_key(key)
        mag = abs(c)
        if body is None:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if n == 0:
            parts.append(text if c > 0 else f"- {text}")
        else:
            parts.append(("+ " if c > 0 else "- ") + text)
    return " ".join(parts)


@dataclass(frozen=True, eq=False)
class GroupRingElement:
    """Finite integer combination of group words over a fixed alphabet."""

    terms: dict[GroupWord, int]
    alphabet: Alphabet

    def __post_init__(self):
        object.__setattr__(self, "terms", _clean(self.terms))
        for w in self.terms:
            _check_same(w.alphabet, self.alphabet)

    @classmethod
    def zero(cls, alphabet: Alphabet) -> GroupRingElement:
        return cls({}, alphabet)

    @classmethod
    def one(cls, alphabet: Alphabet) -> GroupRingElement:
        return cls({GroupWord.identity(alphabet): 1}, alphabet)

    @classmethod
    def from_word(cls, w: GroupWord, coeff: int = 1) -> GroupRingElement:
        return cls({w: coeff}, w.alphabet)

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        _check_same(self.alphabet, other.alphabet)
        out = defaultdict(int, self.terms)
        for w, c in other.terms.items():
            out[w] += c
        return GroupRingElement(dict(out), self.alphabet)

    def __neg__(self) -> GroupRingElement:
        return GroupRingElement({w: -c for w, c in self.terms.items()}, self.alphabet)

    def __sub__(self, other: GroupRingElement) -> GroupRingElement:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement({w: c * other for w, c in self.terms.items()}, self.alphabet)
        return ring_multiply(self, other)

    __rmul__ = __mul__

    def augmentation(self) -> int:
        return sum(self.terms.values())

    def __str__(self):
        items = sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())
        return _format_terms(items, lambda w: str(w) if w else None)


def ring_multiply(e1: GroupRingElement, e2: GroupRingElement) -> GroupRingElement:
    _check_same(e1.alphabet, e2.alphabet)
    out: dict[GroupWord, int] = defaultdict(int)
    for w1, c1 in e1.terms.items():
        for w2, c2 in e2.terms.items():
            out[w1 * w2] += c1 * c2
    return GroupRingElement(dict(out), e1.alphabet)


@dataclass(frozen=True, eq=False)
class TraceElement:
    """Integer combination of conjugacy classes: a group-ring element after closure."""

    terms: dict[ConjClass, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", _clean(self.terms))

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, TraceElement):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        items = sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())
        return _format_terms(items, lambda k: str(k))


def trace(e: GroupRingElement) -> TraceElement:
    out: dict[ConjClass, int] = defaultdict(int)
    for w, c in e.terms.items():
        out[conj_canonical(w)] += c
    return TraceElement(dict(out))


def parse_element(text: str, alphabet: Alphabet) -> GroupRingElement:
    """Parse ``c1*W1 + c2*W2 - ...``; words are space separated, ``1`` is the unit.

    ``+`` and ``-`` separators must stand alone between spaces, so ``x^-1`` is
    never split.
    """
    tokens = text.split()
    if not tokens:
        raise ParseError("empty element")
    out = GroupRingElement.zero(alphabet)
    sign = 1
    current: list[str] = []

    def flush():
        nonlocal out
        if not current:
            raise ParseError(f"dangling sign in {text!r}")
        coeff = 1
        first = current[0]
        if "*" in first:
            c_txt, _, rest = first.partition("*")
            try:
                coeff = int(c_txt)
            except ValueError:
                raise ParseError(f"bad coefficient {c_txt!r}") from None
            words = ([rest] if rest else []) + current[1:]
            if not words:
                raise ParseError(f"coefficient without a word in {text!r}")
        elif re.fullmatch(r"\d+", first) and len(current) == 1:
            coeff = int(first)
            words = []
        else:
            words = current
        w = parse_word(" ".join(words), alphabet)
        out = out + GroupRingElement.from_word(w, sign * coeff)

    for n, tok in enumerate(tokens):
        if tok in "+-" and len(tok) == 1:
            if n == 0:
                sign = -1 if tok == "-" else 1
                continue
            flush()
            current = []
            sign = -1 if tok == "-" else 1
        else:
            current.append(tok)
    flush()
    return out
