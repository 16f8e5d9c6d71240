"""Jacobi diagrams on ``l`` strands or ``l`` circles.

A diagram is stored through its half-edges.  With ``u`` legs and ``t``
internal (trivalent) vertices there are ``u + 3t`` half-edges:

* ``0 .. u-1`` are the legs, listed component by component in skeleton
  order (``counts[c]`` legs on component ``c``);
* ``u + 3k + s`` is slot ``s`` of internal vertex ``k``; slots ``0, 1, 2``
  follow the vertex's cyclic order.

``pair[h]`` is the half-edge joined to ``h`` by a dashed edge.

The canonical form is produced by a traversal that starts from the legs in
order and labels internal vertices as they are reached, each rotated so the
slot it was entered through becomes slot 0.  For a fixed orientation that
labelling is forced, so minimizing over AS flips (and circle rotations)
gives a canonical representative.  A diagram reachable from itself by an
odd number of flips is zero and canonicalizes with sign 0.
"""

from __future__ import annotations

import itertools
import json
import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Hashable, Iterable, Mapping, Sequence

from stringlinks.errors import DomainError, ParseError

STRANDS = "strands"
CIRCLES = "circles"


@dataclass(frozen=True, order=True)
class Skeleton:
    kind: str
    count: int

    def __post_init__(self):
        if self.kind not in (STRANDS, CIRCLES):
            raise DomainError(f"skeleton kind must be {STRANDS!r} or {CIRCLES!r}, got {self.kind!r}")
        if self.count < 1:
            raise DomainError(f"skeleton needs at least one component, got {self.count}")

    @classmethod
    def strands(cls, l: int) -> Skeleton:
        return cls(STRANDS, l)

    @classmethod
    def circles(cls, l: int) -> Skeleton:
        return cls(CIRCLES, l)

    @classmethod
    def parse(cls, text: str) -> Skeleton:
        """``strands:3`` or ``circles:2``."""
        kind, _, n = text.partition(":")
        try:
            return cls(kind.strip(), int(n))
        except ValueError:
            raise ParseError(f"bad skeleton {text!r}; expected e.g. strands:3") from None

    @property
    def closed(self) -> bool:
        return self.kind == CIRCLES

    def __str__(self):
        return f"{self.kind}:{self.count}"


@dataclass(frozen=True)
class JacobiDiagram:
    skeleton: Skeleton
    counts: tuple[int, ...]
    pair: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.skeleton.count:
            raise DomainError("leg counts do not match the skeleton")
        u, n = sum(self.counts), len(self.pair)
        if (n - u) % 3 or n < u:
            raise DomainError("half-edge count is not legs + 3 * vertices")
        for h, p in enumerate(self.pair):
            if not 0 <= p < n or p == h or self.pair[p] != h:
                raise DomainError("pairing of half-edges is not an involution without fixed points")

    @property
    def n_legs(self) -> int:
        return sum(self.counts)

    @property
    def n_internal(self) -> int:
        return (len(self.pair) - self.n_legs) // 3

    @property
    def degree(self) -> int:
        return (self.n_legs + self.n_internal) // 2

    def legs_on(self, c: int) -> range:
        """Half-edge ids of the legs on component ``c`` (0-based), in order."""
        start = sum(self.counts[:c])
        return range(start, start + self.counts[c])

    def leg_lists(self) -> list[list[int]]:
        return [list(self.legs_on(c)) for c in range(self.skeleton.count)]

    def sort_key(self):
        return (self.degree, -self.n_internal, self.counts, self.pair)

    def __str__(self):
        return format_diagram(self)


# ---------------------------------------------------------------- canonical forms


def _relabel(pair: Sequence[int], perm: Sequence[int]) -> list[int]:
    out = [0] * len(pair)
    for h, p in enumerate(pair):
        out[perm[h]] = perm[p]
    return out


def _traverse(u: int, pair: Sequence[int]) -> tuple[int, ...]:
    n = len(pair)
    t = (n - u) // 3
    new_of = [-1] * n
    for h in range(u):
        new_of[h] = h
    proc = list(range(u))
    seen: dict[int, int] = {}
    i = 0
    while i < len(proc):
        p = pair[proc[i]]
        if p >= u:
            j, s = divmod(p - u, 3)
            if j not in seen:
                k = len(seen)
                seen[j] = k
                for r in range(3):
                    old = u + 3 * j + (s + r) % 3
                    new_of[old] = u + 3 * k + r
                    proc.append(old)
        i += 1
    if len(seen) != t:
        raise DomainError("diagram has a dashed component not attached to the skeleton")
    return tuple(_relabel(pair, new_of))


@lru_cache(maxsize=None)
def _canonical(kind: str, counts: tuple[int, ...], pair: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    u = sum(counts)
    n = len(pair)
    t = (n - u) // 3
    starts = [sum(counts[:c]) for c in range(len(counts))]
    if kind == CIRCLES:
        rotations = list(itertools.product(*[range(c) if c else (0,) for c in counts]))
    else:
        rotations = [(0,) * len(counts)]
    best = None
    parities: set[int] = set()
    for rot in rotations:
        base = list(range(n))
        for c, r in enumerate(rot):
            for k in range(counts[c]):
                base[starts[c] + k] = starts[c] + (k - r) % counts[c]
        rotated = _relabel(pair, base)
        for flips in itertools.product((0, 1), repeat=t):
            perm = list(range(n))
            for j, f in enumerate(flips):
                if f:
                    a = u + 3 * j
                    perm[a + 1], perm[a + 2] = a + 2, a + 1
            code = _traverse(u, _relabel(rotated, perm))
            parity = sum(flips) & 1
            if best is None or code < best:
                best, parities = code, {parity}
            elif code == best:
                parities.add(parity)
    sign = 0 if len(parities) == 2 else (-1 if 1 in parities else 1)
    return best, sign


def canonicalize(d: JacobiDiagram) -> tuple[JacobiDiagram, int]:
    """Canonical representative and sign with ``d == sign * canonical``.

    Sign 0 means ``d`` is zero by antisymmetry (it is isomorphic to its own
    negative); the returned diagram is still the canonical shape.
    """
    code, sign = _canonical(d.skeleton.kind, d.counts, d.pair)
    return JacobiDiagram(d.skeleton, d.counts, code), sign


# ---------------------------------------------------------------- layouts


def from_layout(
    skeleton: Skeleton,
    legs: Sequence[Sequence[Hashable]],
    vertices: Sequence[Sequence[Hashable]],
    edges: Mapping[Hashable, Hashable] | Iterable[tuple[Hashable, Hashable]],
) -> JacobiDiagram:
    """Build a (non-canonical) diagram from arbitrary end identifiers.

    ``legs[c]`` lists the leg ends on component ``c`` in orientation order,
    ``vertices`` lists each internal vertex's three ends in cyclic order,
    and ``edges`` pairs ends (either as a symmetric mapping or as pairs).
    """
    if len(legs) != skeleton.count:
        raise DomainError(f"{len(legs)} leg lists for a skeleton with {skeleton.count} components")
    label: dict[Hashable, int] = {}
    for comp in legs:
        for e in comp:
            if e in label:
                raise DomainError(f"end {e!r} used twice")
            label[e] = len(label)
    for v in vertices:
        if len(v) != 3:
            raise DomainError(f"internal vertex {list(v)} is not trivalent")
        for e in v:
            if e in label:
                raise DomainError(f"end {e!r} used twice")
            label[e] = len(label)
    pairs = edges.items() if isinstance(edges, Mapping) else edges
    pair = [-1] * len(label)
    for a, b in pairs:
        if a not in label or b not in label:
            raise DomainError(f"edge ({a!r}, {b!r}) uses an unknown end")
        ia, ib = label[a], label[b]
        if ia == ib:
            raise DomainError(f"edge joins end {a!r} to itself")
        for x, y in ((ia, ib), (ib, ia)):
            if pair[x] not in (-1, y):
                raise DomainError("an end lies on two edges")
            pair[x] = y
    if -1 in pair:
        raise DomainError("some end is not on an edge")
    return JacobiDiagram(skeleton, tuple(len(c) for c in legs), tuple(pair))


class Layout:
    """Mutable view of a diagram used to splice legs between skeletons."""

    def __init__(self):
        self.legs: list[list[Hashable]] = []
        self.vertices: list[tuple[Hashable, Hashable, Hashable]] = []
        self.pair: dict[Hashable, Hashable] = {}

    @staticmethod
    def components(d: JacobiDiagram, tag: Hashable) -> tuple[list[list[Hashable]], list[tuple], dict]:
        """Legs per component, vertices and pairing of ``d`` with ends tagged ``(tag, h)``."""
        u = d.n_legs
        legs = [[(tag, h) for h in d.legs_on(c)] for c in range(d.skeleton.count)]
        verts = [tuple((tag, u + 3 * k + s) for s in range(3)) for k in range(d.n_internal)]
        pair = {(tag, h): (tag, p) for h, p in enumerate(d.pair)}
        return legs, verts, pair


def splice(
    skeleton: Skeleton,
    parts: Sequence[tuple[JacobiDiagram, Hashable]],
    route: Sequence[Sequence[tuple[Hashable, int, bool]]],
) -> tuple[JacobiDiagram, int]:
    """Glue diagrams along a new skeleton.

    ``route[c]`` lists ``(tag, component, reversed)`` segments making up new
    component ``c``.  Each reversed segment contributes ``(-1)^(#legs)``.
    Returns the canonical diagram and total sign (0 if it vanishes).
    """
    legs_of: dict[tuple, list] = {}
    vertices: list[tuple] = []
    pair: dict = {}
    for d, tag in parts:
        legs, verts, p = Layout.components(d, tag)
        for c, comp in enumerate(legs):
            legs_of[(tag, c)] = comp
        vertices.extend(verts)
        pair.update(p)
    sign = 1
    new_legs = []
    for segments in route:
        comp: list = []
        for tag, c, rev in segments:
            seg = legs_of[(tag, c)]
            if rev:
                seg = seg[::-1]
                if len(seg) % 2:
                    sign = -sign
            comp.extend(seg)
        new_legs.append(comp)
    canon, s = canonicalize(from_layout(skeleton, new_legs, vertices, pair))
    return canon, sign * s


def stu_resolutions(d: JacobiDiagram) -> list[tuple[JacobiDiagram, int, JacobiDiagram, int]]:
    """All STU resolutions ``d = T - U`` at legs attached to internal vertices.

    Each entry is ``(T, sign_T, U, sign_U)`` with canonical diagrams: with the
    leg's vertex ordered ``(leg, e1, e2)``, T places the new leg of ``e1``
    before that of ``e2`` along the skeleton orientation and U the reverse.
    """
    u = d.n_legs
    out = []
    for h in range(u):
        p = d.pair[h]
        if p < u:
            continue
        j, s = divmod(p - u, 3)
        a = u + 3 * j + (s + 1) % 3
        b = u + 3 * j + (s + 2) % 3
        removed = {h, a, b, u + 3 * j + s}
        results = []
        for first, second in ((a, b), (b, a)):
            legs = []
            for c in range(d.skeleton.count):
                comp: list = []
                for x in d.legs_on(c):
                    comp.extend([("new", first), ("new", second)] if x == h else [x])
                legs.append(comp)
            verts = [
                tuple(u + 3 * k + r for r in range(3)) for k in range(d.n_internal) if k != j
            ]
            pair = {x: d.pair[x] for x in range(len(d.pair)) if x not in removed and d.pair[x] not in removed}
            for x in (a, b):
                px = d.pair[x]
                if px in (a, b):
                    pair[("new", x)] = ("new", px)
                else:
                    pair[("new", x)] = px
                    pair[px] = ("new", x)
            results.append(canonicalize(from_layout(d.skeleton, legs, verts, pair)))
        (T, sT), (U, sU) = results
        out.append((T, sT, U, sU))
    return out


# ---------------------------------------------------------------- expressions


class DiagramExpr:
    """Rational combination of canonical diagrams on a fixed skeleton."""

    __slots__ = ("skeleton", "terms")

    def __init__(self, skeleton: Skeleton, terms: Mapping[JacobiDiagram, object] | None = None):
        self.skeleton = skeleton
        clean: dict[JacobiDiagram, Fraction] = {}
        for d, c in (terms or {}).items():
            if d.skeleton != skeleton:
                raise DomainError(f"diagram on {d.skeleton} in an expression on {skeleton}")
            c = Fraction(c)
            if c:
                clean[d] = c
        self.terms = clean

    @classmethod
    def of(cls, d: JacobiDiagram, coeff: object = 1) -> DiagramExpr:
        canon, s = canonicalize(d)
        return cls(d.skeleton, {canon: Fraction(coeff) * s})

    @classmethod
    def unit(cls, skeleton: Skeleton) -> DiagramExpr:
        return cls.of(empty(skeleton))

    @classmethod
    def zero(cls, skeleton: Skeleton) -> DiagramExpr:
        return cls(skeleton)

    def _check(self, other: DiagramExpr):
        if self.skeleton != other.skeleton:
            raise DomainError(f"skeleton mismatch: {self.skeleton} vs {other.skeleton}")

    def __add__(self, other: DiagramExpr) -> DiagramExpr:
        self._check(other)
        out = defaultdict(Fraction, self.terms)
        for d, c in other.terms.items():
            out[d] += c
        return DiagramExpr(self.skeleton, out)

    def __neg__(self) -> DiagramExpr:
        return DiagramExpr(self.skeleton, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: DiagramExpr) -> DiagramExpr:
        return self + (-other)

    def scale(self, c: object) -> DiagramExpr:
        c = Fraction(c)
        return DiagramExpr(self.skeleton, {d: v * c for d, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, DiagramExpr):
            return NotImplemented
        return self.skeleton == other.skeleton and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda kv: kv[0].sort_key()))

    def truncate(self, n: int) -> DiagramExpr:
        return DiagramExpr(self.skeleton, {d: c for d, c in self.terms.items() if d.degree <= n})

    def homogeneous(self, d: int) -> DiagramExpr:
        return DiagramExpr(self.skeleton, {x: c for x, c in self.terms.items() if x.degree == d})

    @property
    def max_degree(self) -> int:
        return max((d.degree for d in self.terms), default=0)

    def __str__(self):
        return format_expr(self)

    def __repr__(self):
        return f"DiagramExpr({self.skeleton}, {format_expr(self)!r})"


def linear_extension(f, E: DiagramExpr, target: Skeleton) -> DiagramExpr:
    """Extend ``f: diagram -> (diagram, sign) | None`` linearly."""
    out: dict[JacobiDiagram, Fraction] = defaultdict(Fraction)
    for d, c in E.terms.items():
        r = f(d)
        if r is None:
            continue
        img, s = r
        if s:
            out[img] += c * s
    return DiagramExpr(target, out)


# ---------------------------------------------------------------- builders


def empty(skeleton: Skeleton) -> JacobiDiagram:
    return JacobiDiagram(skeleton, (0,) * skeleton.count, ())


def chord(skeleton: Skeleton, i: int, j: int) -> JacobiDiagram:
    """The single chord ``t_ij`` between components ``i`` and ``j`` (1-based).

    For ``i == j`` the two legs are adjacent.  Products such as
    ``t_12 t_13`` are built with ``stack_multiply``.
    """
    for c in (i, j):
        if not 1 <= c <= skeleton.count:
            raise DomainError(f"component {c} out of range for {skeleton}")
    legs: list[list] = [[] for _ in range(skeleton.count)]
    legs[i - 1].append("a")
    legs[j - 1].append("b")
    return canonicalize(from_layout(skeleton, legs, [], [("a", "b")]))[0]


def y_diagram(skeleton: Skeleton | None = None, components: tuple[int, int, int] = (1, 2, 3)) -> JacobiDiagram:
    """Tree with one internal vertex and legs on the three given components.

    The vertex's cyclic order lists the edges towards the legs in the order
    of ``components``.
    """
    skeleton = skeleton or Skeleton.strands(3)
    legs: list[list] = [[] for _ in range(skeleton.count)]
    for name, c in zip("abc", components):
        if not 1 <= c <= skeleton.count:
            raise DomainError(f"component {c} out of range for {skeleton}")
        legs[c - 1].append(name)
    d = from_layout(
        skeleton, legs, [("va", "vb", "vc")], [("a", "va"), ("b", "vb"), ("c", "vc")]
    )
    canon, s = canonicalize(d)
    if s != 1:
        raise DomainError("Y diagram on these components is not in canonical orientation")
    return canon


# ---------------------------------------------------------------- text and JSON formats


def _edge_names(d: JacobiDiagram) -> dict[int, str]:
    names: dict[int, str] = {}
    alphabet = "abcdefghijklmnopqrstuvwxyz"
    for h in range(len(d.pair)):
        if h not in names:
            k = len(names) // 2
            name = alphabet[k] if k < 26 else f"e{k}"
            names[h] = names[d.pair[h]] = name
    return names


def format_diagram(d: JacobiDiagram) -> str:
    """Compact text: ``[a b] [a] [b]`` for strands, ``<...>`` for circles,
    followed by ``(x y z)`` for each internal vertex in cyclic order.
    Matching letters name the two ends of a dashed edge.
    """
    names = _edge_names(d)
    o, c = ("<", ">") if d.skeleton.closed else ("[", "]")
    parts = [o + " ".join(names[h] for h in d.legs_on(k)) + c for k in range(d.skeleton.count)]
    u = d.n_legs
    for k in range(d.n_internal):
        parts.append("(" + " ".join(names[u + 3 * k + s] for s in range(3)) + ")")
    return " ".join(parts)


_GROUP = re.compile(r"\[([^\[\]<>()]*)\]|<([^\[\]<>()]*)>|\(([^\[\]<>()]*)\)")


def parse_diagram(text: str) -> JacobiDiagram:
    """Inverse of ``format_diagram`` (the result is not canonicalized)."""
    text = text.strip()
    pos = 0
    legs: list[list] = []
    verts: list[tuple] = []
    kinds = set()
    for m in _GROUP.finditer(text):
        if text[pos : m.start()].strip():
            raise ParseError(f"unexpected text {text[pos:m.start()]!r} in diagram")
        pos = m.end()
        if m.group(1) is not None:
            kinds.add(STRANDS)
            legs.append(m.group(1).split())
        elif m.group(2) is not None:
            kinds.add(CIRCLES)
            legs.append(m.group(2).split())
        else:
            verts.append(tuple(m.group(3).split()))
    if text[pos:].strip():
        raise ParseError(f"unexpected trailing text {text[pos:]!r} in diagram")
    if len(kinds) != 1:
        raise ParseError(f"diagram {text!r} must use only [..] strands or only <..> circles")
    skeleton = Skeleton(kinds.pop(), len(legs))
    ends: dict[str, list] = defaultdict(list)
    leg_ids, vert_ids = [], []
    for c, comp in enumerate(legs):
        ids = []
        for k, name in enumerate(comp):
            ident = ("L", c, k)
            ends[name].append(ident)
            ids.append(ident)
        leg_ids.append(ids)
    for v, names in enumerate(verts):
        if len(names) != 3:
            raise ParseError(f"vertex ({' '.join(names)}) is not trivalent")
        ids = []
        for s, name in enumerate(names):
            ident = ("V", v, s)
            ends[name].append(ident)
            ids.append(ident)
        vert_ids.append(tuple(ids))
    edges = []
    for name, where in ends.items():
        if len(where) != 2:
            raise ParseError(f"edge label {name!r} appears {len(where)} times, expected 2")
        edges.append(tuple(where))
    try:
        return from_layout(skeleton, leg_ids, vert_ids, edges)
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_expr(E: DiagramExpr) -> str:
    if not E.terms:
        return "0"
    parts = []
    for n, (d, c) in enumerate(E):
        body = format_diagram(d)
        mag = abs(c)
        text = body if mag == 1 else f"{_format_coeff(mag)}*{body}"
        if n == 0:
            parts.append(text if c > 0 else f"- {text}")
        else:
            parts.append(("+ " if c > 0 else "- ") + text)
    return " ".join(parts)


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*)?\s*((?:(?:\[[^\]]*\]|<[^>]*>|\([^)]*\))\s*)+)")


def parse_expr(text: str) -> DiagramExpr:
    """Parse ``c1*D1 + c2*D2 - ...`` with diagrams in the ``format_diagram`` syntax."""
    text = text.strip()
    if text == "0":
        raise ParseError("the zero expression has no skeleton; use JSON instead")
    pos, total = 0, None
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse diagram expression at {text[pos:]!r}")
        if m.group(1) is None and total is not None:
            raise ParseError(f"missing + or - before {m.group(0).strip()!r}")
        coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(1) == "-":
            coeff = -coeff
        term = DiagramExpr.of(parse_diagram(m.group(3)), coeff)
        total = term if total is None else total + term
        pos = m.end()
    if total is None:
        raise ParseError("empty diagram expression")
    return total


def diagram_to_json(d: JacobiDiagram) -> dict:
    """``{skeleton, legs, vertices, edges}`` with string end identifiers."""
    def name(h: int) -> str:
        u = d.n_legs
        if h < u:
            return f"l{h}"
        k, s = divmod(h - u, 3)
        return f"v{k}.{s}"

    return {
        "skeleton": {"kind": d.skeleton.kind, "count": d.skeleton.count},
        "legs": [[name(h) for h in d.legs_on(c)] for c in range(d.skeleton.count)],
        "vertices": [[name(d.n_legs + 3 * k + s) for s in range(3)] for k in range(d.n_internal)],
        "edges": [[name(h), name(p)] for h, p in enumerate(d.pair) if h < p],
    }


def _skeleton_from_json(obj) -> Skeleton:
    try:
        return Skeleton(obj["kind"], int(obj["count"]))
    except (KeyError, TypeError, ValueError):
        raise ParseError(f"bad skeleton field {obj!r}") from None


def diagram_from_json(obj: Mapping, skeleton: Skeleton | None = None) -> JacobiDiagram:
    try:
        if "skeleton" in obj:
            skeleton = _skeleton_from_json(obj["skeleton"])
        if skeleton is None:
            raise ParseError("diagram has no skeleton")
        legs = [[str(e) for e in comp] for comp in obj["legs"]]
        verts = [tuple(str(e) for e in v) for v in obj.get("vertices", [])]
        edges = [tuple(str(e) for e in pr) for pr in obj.get("edges", [])]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed diagram JSON: {exc}") from None
    if any(len(e) != 2 for e in edges):
        raise ParseError("each edge must list exactly two ends")
    try:
        return from_layout(skeleton, legs, verts, edges)
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def expr_to_json(E: DiagramExpr) -> dict:
    return {
        "skeleton": {"kind": E.skeleton.kind, "count": E.skeleton.count},
        "terms": [
            {"coeff": _format_coeff(c), "diagram": {k: v for k, v in diagram_to_json(d).items() if k != "skeleton"}}
            for d, c in E
        ],
    }


def expr_from_json(obj: Mapping) -> DiagramExpr:
    """Accepts an expression object or a bare diagram object."""
    if "terms" not in obj:
        return DiagramExpr.of(diagram_from_json(obj))
    if "skeleton" not in obj:
        raise ParseError("expression has no skeleton")
    skeleton = _skeleton_from_json(obj["skeleton"])
    total = DiagramExpr.zero(skeleton)
    for term in obj["terms"]:
        try:
            coeff = Fraction(str(term.get("coeff", "1")))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad coefficient {term.get('coeff')!r}") from None
        total = total + DiagramExpr.of(diagram_from_json(term["diagram"], skeleton), coeff)
    return total


def load_expr(text: str) -> DiagramExpr:
    """Parse JSON (object) or the compact text syntax."""
    s = text.strip()
    if s.startswith("{"):
        try:
            return expr_from_json(json.loads(s))
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    return parse_expr(s)
