"""Truncated Magnus expansion and the filtration degrees it detects.

``magnus`` sends ``x_i`` to ``1 + X_i`` in the ring of noncommutative
polynomials truncated above degree ``N``.  An element of the augmentation
ideal lies in the ``d``-th power of that ideal exactly when its expansion
has no terms of degree below ``d``; ``filtration_degree`` reports the first
surviving degree.

``cyclize`` identifies monomials up to rotation.  This is the polynomial
shadow of passing from string links to their closures: conjugate group
elements have expansions that agree after cyclization.  The first degree
surviving cyclization, ``cyclized_vanishing_order``, is a lower bound for
the degree of a closed element, not its exact value.

Note on the Borromean computation, with ``w = x y x^-1 y^-1``: the element
``(w - 1) + (w - 1)(y - 1)`` has zero trace, so after closure ``w - 1``
agrees with ``-(w - 1)(y - 1)`` (a degree 3 element), not with
``+(w - 1)(y - 1)``.  The filtration conclusion is the same either way.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Optional

from stringlinks.errors import CapExceeded, DomainError
from stringlinks.words import (
    Alphabet,
    GroupRingElement,
    GroupWord,
    _clean,
    _format_terms,
    minimal_rotation,
)

DEFAULT_BOUND = 4
MAX_BOUND = 10

Monomial = tuple[int, ...]


def check_bound(N: int, minimum: int = 0) -> int:
    if not isinstance(N, int) or N < minimum:
        raise DomainError(f"truncation bound must be an integer >= {minimum}, got {N!r}")
    if N > MAX_BOUND:
        raise CapExceeded(f"truncation bound {N} exceeds cap {MAX_BOUND}")
    return N


def variable_names(alphabet: Alphabet) -> tuple[str, ...]:
    return tuple(n[:1].upper() + n[1:] for n in alphabet.names)


def _monomial_str(m: Monomial, names) -> Optional[str]:
    if not m:
        return None
    return ".".join(names[i - 1] for i in m)


@dataclass(frozen=True, eq=False)
class NcPoly:
    """Integer noncommutative polynomial in ``X_1..X_k``, truncated above ``bound``."""

    bound: int
    terms: dict[Monomial, int]
    alphabet: Alphabet

    def __post_init__(self):
        object.__setattr__(
            self, "terms", {m: c for m, c in _clean(self.terms).items() if len(m) <= self.bound}
        )

    @classmethod
    def one(cls, bound: int, alphabet: Alphabet) -> NcPoly:
        return cls(bound, {(): 1}, alphabet)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(): other} if other else {})
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.bound == other.bound and self.terms == other.terms

    def __add__(self, other: NcPoly) -> NcPoly:
        out = defaultdict(int, self.terms)
        for m, c in other.terms.items():
            out[m] += c
        return NcPoly(min(self.bound, other.bound), dict(out), self.alphabet)

    def __neg__(self) -> NcPoly:
        return NcPoly(self.bound, {m: -c for m, c in self.terms.items()}, self.alphabet)

    def __sub__(self, other: NcPoly) -> NcPoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return NcPoly(self.bound, {m: c * other for m, c in self.terms.items()}, self.alphabet)
        N = min(self.bound, other.bound)
        out: dict[Monomial, int] = defaultdict(int)
        for m1, c1 in self.terms.items():
            room = N - len(m1)
            for m2, c2 in other.terms.items():
                if len(m2) <= room:
                    out[m1 + m2] += c1 * c2
        return NcPoly(N, dict(out), self.alphabet)

    __rmul__ = __mul__

    def homogeneous(self, d: int) -> NcPoly:
        return NcPoly(self.bound, {m: c for m, c in self.terms.items() if len(m) == d}, self.alphabet)

    def coefficient(self, monomial) -> int:
        return self.terms.get(tuple(monomial), 0)

    def __str__(self):
        names = variable_names(self.alphabet)
        items = sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
        return _format_terms(items, lambda m: _monomial_str(m, names))


def _letter_series(letter: int, N: int) -> list[tuple[Monomial, int]]:
    i = abs(letter)
    if letter > 0:
        return [((), 1), ((i,), 1)]
    return [((i,) * k, (-1) ** k) for k in range(N + 1)]


def magnus(w: GroupWord, N: int = DEFAULT_BOUND) -> NcPoly:
    check_bound(N)
    terms: dict[Monomial, int] = {(): 1}
    for a in w.letters:
        series = _letter_series(a, N)
        out: dict[Monomial, int] = defaultdict(int)
        for m, c in terms.items():
            for s, cs in series:
                if len(m) + len(s) <= N:
                    out[m + s] += c * cs
        terms = {m: c for m, c in out.items() if c}
    return NcPoly(N, terms, w.alphabet)


def magnus_ring(e: GroupRingElement, N: int = DEFAULT_BOUND) -> NcPoly:
    check_bound(N)
    out = NcPoly(N, {}, e.alphabet)
    for w, c in e.terms.items():
        out = out + magnus(w, N) * c
    return out


def _first_nonzero_degree(lengths, N: int) -> Optional[int]:
    present = sorted({d for d in lengths if 1 <= d <= N})
    return present[0] if present else None


def _require_augmentation_zero(e: GroupRingElement):
    if e.augmentation() != 0:
        raise DomainError(
            f"element has augmentation {e.augmentation()}; degree is defined only on the augmentation ideal"
        )


def filtration_degree(e: GroupRingElement, N: int = DEFAULT_BOUND) -> Optional[int]:
    """Lowest degree with a nonzero homogeneous part of ``magnus_ring(e, N)``.

    Returns None when every part up to degree ``N`` vanishes.
    """
    _require_augmentation_zero(e)
    check_bound(N, minimum=1)
    return _first_nonzero_degree((len(m) for m in magnus_ring(e, N).terms), N)


@dataclass(frozen=True, eq=False)
class CyclicPoly:
    """Integer combination of necklaces (monomials up to rotation)."""

    bound: int
    terms: dict[Monomial, int]
    alphabet: Alphabet

    def __post_init__(self):
        object.__setattr__(self, "terms", _clean(self.terms))

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, CyclicPoly):
            return NotImplemented
        return self.bound == other.bound and self.terms == other.terms

    def homogeneous(self, d: int) -> CyclicPoly:
        return CyclicPoly(self.bound, {m: c for m, c in self.terms.items() if len(m) == d}, self.alphabet)

    def __str__(self):
        names = variable_names(self.alphabet)
        items = sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
        return _format_terms(items, lambda m: f"({_monomial_str(m, names)})" if m else None)


def necklace(m: Monomial) -> Monomial:
    return minimal_rotation(m)


def cyclize(p: NcPoly) -> CyclicPoly:
    out: dict[Monomial, int] = defaultdict(int)
    for m, c in p.terms.items():
        out[necklace(m)] += c
    return CyclicPoly(p.bound, dict(out), p.alphabet)


def cyclized_vanishing_order(e: GroupRingElement, N: int = DEFAULT_BOUND) -> Optional[int]:
    """Lowest degree surviving in ``cyclize(magnus_ring(e, N))``, or None if none does.

    A value ``d`` (or None, read as ``> N``) certifies that the closure of
    ``e`` lies in filtration level ``d`` (resp. ``N + 1``); it is a lower bound.
    """
    _require_augmentation_zero(e)
    check_bound(N, minimum=1)
    return _first_nonzero_degree((len(m) for m in cyclize(magnus_ring(e, N)).terms), N)


def format_order(d: Optional[int], N: int) -> str:
    return f"> {N}" if d is None else str(d)
