"""Finite-dimensional spaces of Jacobi diagrams modulo STU and AS.

``diagram_space(skeleton, n)`` enumerates every canonical diagram of degree
at most ``n``, writes down all STU relations, and row reduces them.
Columns are ordered so that diagrams with more internal vertices are
eliminated first; the surviving (non-pivot) diagrams form the basis, and
at the sizes used here they are chord diagrams.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterator

from stringlinks.errors import CapExceeded, DomainError
from stringlinks.jacobi.diagrams import (
    DiagramExpr,
    JacobiDiagram,
    Skeleton,
    canonicalize,
    stu_resolutions,
)
from stringlinks.linalg import Echelon, Row, Subspace

log = logging.getLogger(__name__)

CACHE_FORMAT = 1
CACHE_ENV = "STRINGLINKS_CACHE"


@dataclass
class JacobiConfig:
    """Caps and cache settings for diagram-space computations."""

    degree_cap: int = 2
    hard_degree_cap: int = 3
    # Largest l for which the 2l-strand action space is built.
    action_strands_cap: int = 2
    use_cache: bool = True
    cache_dir: Path | None = None

    def resolved_cache_dir(self) -> Path:
        if self.cache_dir is not None:
            return Path(self.cache_dir)
        env = os.environ.get(CACHE_ENV)
        if env:
            return Path(env)
        base = os.environ.get("XDG_DATA_HOME") or os.path.join(os.path.expanduser("~"), ".local", "share")
        return Path(base) / "stringlinks" / "cache"

    def check_degree(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise DomainError(f"degree must be a nonnegative integer, got {n!r}")
        cap = min(self.degree_cap, self.hard_degree_cap)
        if n > cap:
            raise CapExceeded(f"degree {n} exceeds cap {cap} (hard cap {self.hard_degree_cap})")

    def check_action(self, l: int):
        if l < 1:
            raise DomainError(f"need at least one strand, got {l}")
        if l > self.action_strands_cap:
            raise CapExceeded(f"action on {2 * l} strands exceeds cap of l = {self.action_strands_cap}")


DEFAULT_CONFIG = JacobiConfig()


# ---------------------------------------------------------------- enumeration


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _codes(u: int, t: int) -> Iterator[tuple[int, ...]]:
    """Pairings in traversal order: each internal vertex is created when first
    reached and entered through its slot 0, so every oriented diagram appears
    exactly once."""
    n = u + 3 * t
    pair = [-1] * n

    def rec(h: int, made: int):
        allocated = u + 3 * made
        while h < allocated and pair[h] != -1:
            h += 1
        if h >= allocated:
            if made == t and allocated == n:
                yield tuple(pair)
            return
        for p in range(h + 1, allocated):
            if pair[p] == -1:
                pair[h], pair[p] = p, h
                yield from rec(h + 1, made)
                pair[h] = pair[p] = -1
        if made < t:
            p = allocated
            pair[h], pair[p] = p, h
            yield from rec(h + 1, made + 1)
            pair[h] = pair[p] = -1

    yield from rec(0, 0)


def enumerate_diagrams(skeleton: Skeleton, degree: int) -> list[JacobiDiagram]:
    """Canonical nonzero diagrams of exactly the given degree, sorted."""
    if degree == 0:
        return [JacobiDiagram(skeleton, (0,) * skeleton.count, ())]
    found: set[JacobiDiagram] = set()
    for t in range(0, 2 * degree):
        u = 2 * degree - t
        codes = list(_codes(u, t))
        for counts in _compositions(u, skeleton.count):
            for code in codes:
                canon, sign = canonicalize(JacobiDiagram(skeleton, counts, code))
                if sign:
                    found.add(canon)
    return sorted(found, key=JacobiDiagram.sort_key)


def stu_relations(d: JacobiDiagram) -> list[dict[JacobiDiagram, int]]:
    """Vectors ``S - T + U`` for every STU resolution of ``d``."""
    rels = []
    for T, sT, U, sU in stu_resolutions(d):
        rel: dict[JacobiDiagram, int] = {}
        for x, c in ((d, 1), (T, -sT), (U, sU)):
            if c:
                rel[x] = rel.get(x, 0) + c
        rels.append({x: c for x, c in rel.items() if c})
    return rels


# ---------------------------------------------------------------- spaces


@dataclass(eq=False)
class DiagramSpace:
    """``A_{<=n}`` on a skeleton: diagrams, STU+AS relations, reduced basis."""

    skeleton: Skeleton
    max_degree: int
    diagrams: list[JacobiDiagram]
    relations: Echelon
    index: dict[JacobiDiagram, int] = field(init=False)
    basis_columns: list[int] = field(init=False)
    basis_position: dict[int, int] = field(init=False)

    def __post_init__(self):
        self.index = {d: i for i, d in enumerate(self.diagrams)}
        pivots = self.relations.pivots
        self.basis_columns = [i for i in range(len(self.diagrams)) if i not in pivots]
        self.basis_position = {c: k for k, c in enumerate(self.basis_columns)}

    @property
    def dim(self) -> int:
        return len(self.basis_columns)

    @property
    def basis(self) -> list[JacobiDiagram]:
        return [self.diagrams[c] for c in self.basis_columns]

    def basis_expr(self, k: int) -> DiagramExpr:
        return DiagramExpr(self.skeleton, {self.basis[k]: 1})

    def basis_degree(self, k: int) -> int:
        return self.diagrams[self.basis_columns[k]].degree

    def dims_by_degree(self) -> list[int]:
        out = [0] * (self.max_degree + 1)
        for c in self.basis_columns:
            out[self.diagrams[c].degree] += 1
        return out

    def counts_by_degree(self) -> list[int]:
        out = [0] * (self.max_degree + 1)
        for d in self.diagrams:
            out[d.degree] += 1
        return out

    def relation_span(self) -> Subspace:
        return Subspace(len(self.diagrams), tuple(self.relations.rows()))

    def vector(self, E: DiagramExpr) -> Row:
        """Coordinates over all enumerated diagrams (not reduced)."""
        if E.skeleton != self.skeleton:
            raise DomainError(f"expression on {E.skeleton}, space on {self.skeleton}")
        out: Row = {}
        for d, c in E.terms.items():
            if d.degree > self.max_degree:
                continue
            try:
                out[self.index[d]] = c
            except KeyError:
                raise DomainError(f"diagram {d} is not canonical or not in this space") from None
        return out

    def coordinates(self, E: DiagramExpr) -> Row:
        """Coordinates in the reduced basis, dropping parts above ``max_degree``."""
        r = self.relations.reduce(self.vector(E))
        return {self.basis_position[c]: v for c, v in r.items()}

    def from_coordinates(self, coords: Row) -> DiagramExpr:
        return DiagramExpr(self.skeleton, {self.diagrams[self.basis_columns[k]]: v for k, v in coords.items()})

    def normal_form(self, E: DiagramExpr) -> DiagramExpr:
        return self.from_coordinates(self.coordinates(E))

    def is_zero(self, E: DiagramExpr) -> bool:
        return not self.coordinates(E)

    def equal(self, E: DiagramExpr, F: DiagramExpr) -> bool:
        return self.is_zero(E - F)

    def in_relation_span(self, vec: Row) -> bool:
        return not self.relations.reduce(vec)


def _build(skeleton: Skeleton, n: int) -> DiagramSpace:
    diagrams: list[JacobiDiagram] = []
    for d in range(n + 1):
        diagrams.extend(enumerate_diagrams(skeleton, d))
    index = {d: i for i, d in enumerate(diagrams)}
    ech = Echelon(len(diagrams))
    for d in diagrams:
        for rel in stu_relations(d):
            ech.add({index[x]: c for x, c in rel.items()})
    log.info("built %s degree<=%d: %d diagrams, rank %d", skeleton, n, len(diagrams), ech.rank)
    return DiagramSpace(skeleton, n, diagrams, ech)


def _cache_path(cfg: JacobiConfig, skeleton: Skeleton, n: int) -> Path:
    return cfg.resolved_cache_dir() / f"{skeleton.kind}-{skeleton.count}-deg{n}-v{CACHE_FORMAT}.json"


def _dump(space: DiagramSpace) -> dict:
    return {
        "format": CACHE_FORMAT,
        "skeleton": {"kind": space.skeleton.kind, "count": space.skeleton.count},
        "max_degree": space.max_degree,
        "diagrams": [[list(d.counts), list(d.pair)] for d in space.diagrams],
        "relations": [
            [[c, str(v)] for c, v in sorted(space.relations.pivots[p].items())]
            for p in sorted(space.relations.pivots)
        ],
    }


def _load(obj: dict, skeleton: Skeleton, n: int) -> DiagramSpace | None:
    if obj.get("format") != CACHE_FORMAT or obj.get("max_degree") != n:
        return None
    if obj.get("skeleton") != {"kind": skeleton.kind, "count": skeleton.count}:
        return None
    diagrams = [JacobiDiagram(skeleton, tuple(c), tuple(p)) for c, p in obj["diagrams"]]
    ech = Echelon(len(diagrams))
    for row in obj["relations"]:
        r = {c: Fraction(v) for c, v in row}
        ech.pivots[min(r)] = r
    return DiagramSpace(skeleton, n, diagrams, ech)


def _write_atomic(path: Path, payload: dict):
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


@lru_cache(maxsize=None)
def _memo(skeleton: Skeleton, n: int, use_cache: bool, cache_dir: str) -> DiagramSpace:
    cfg = JacobiConfig(use_cache=use_cache, cache_dir=Path(cache_dir))
    path = _cache_path(cfg, skeleton, n)
    if use_cache and path.exists():
        try:
            with open(path) as fh:
                space = _load(json.load(fh), skeleton, n)
            if space is not None:
                return space
        except (OSError, ValueError, KeyError, TypeError):
            log.warning("ignoring unreadable cache file %s", path)
    space = _build(skeleton, n)
    if use_cache:
        try:
            _write_atomic(path, _dump(space))
        except OSError as exc:
            log.warning("could not write cache %s: %s", path, exc)
    return space


def diagram_space(skeleton: Skeleton, n: int, config: JacobiConfig | None = None) -> DiagramSpace:
    """``A_{<=n}(skeleton)``, memoized in process and optionally on disk."""
    cfg = config or DEFAULT_CONFIG
    cfg.check_degree(n)
    return _memo(skeleton, n, cfg.use_cache, str(cfg.resolved_cache_dir()))


def enumerate_basis(skeleton: Skeleton, n: int, config: JacobiConfig | None = None) -> DiagramSpace:
    return diagram_space(skeleton, n, config)
