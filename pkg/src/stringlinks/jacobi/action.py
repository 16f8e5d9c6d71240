"""Stacking, closure and the Habegger-Lin action on diagram spaces.

Skeleton conventions.  A diagram ``D`` on ``2l`` strands is read with its
first ``l`` strands traversed downwards (reversed) and its last ``l``
strands upwards.  Writing ``D_i`` for the leg sequence on strand ``i``,
``rev`` for reversal (which costs ``(-1)^(#legs)``) and juxtaposition for
concatenation from bottom to top:

* ``stack_multiply(E, F)_i  = E_i F_i``                    (E below F)
* ``act_right(E, D)_i       = rev(D_i) E_i D_{l+i}``       (E caps the bottom)
* ``act_left(D, E)_i        = D_{l+i} E_i rev(D_i)``       (E caps the top)
* ``close_triple(E1, D, E2)_i = cyclic(rev(D_i) E1_i D_{l+i} E2_i)``

With these, ``act_left`` is a left action, ``act_right`` a right action,
``act_right(E, 1 (x) F) = E F``, and ``close_triple(E1, D, E2)`` is the
closure of ``act_right(E1, D) E2`` as well as of ``E1 act_left(D, E2)``.

The stabilizer that makes closure invariant under the left action is the
right stabilizer: ``closure(act_left(D, E)) = closure(act_right(1, D) E)``
diagram by diagram, so ``D`` with ``act_right(1, D) = 1`` never changes the
closure of what it acts on.  ``unit_action_kernel`` therefore defaults to
the kernel of ``D -> act_right(1, D)``.  The kernel of ``D -> act_left(D, 1)``
is available as ``side="left"``; it agrees with the right one for ``l = 1``
and gives the same covariant dimensions up to degree 2, but on two strands
in degree 3 it no longer preserves closures.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from stringlinks.errors import DomainError
from stringlinks.jacobi.diagrams import (
    DiagramExpr,
    JacobiDiagram,
    Skeleton,
    canonicalize,
    linear_extension,
    splice,
)
from stringlinks.jacobi.space import DiagramSpace, JacobiConfig, DEFAULT_CONFIG, diagram_space
from stringlinks.linalg import Echelon, Row, SparseMatrix, Subspace, kernel_basis, rank


def _require_strands(E: DiagramExpr, what: str):
    if E.skeleton.closed:
        raise DomainError(f"{what} is defined on strands, not {E.skeleton}")


def _bilinear(E: DiagramExpr, F: DiagramExpr, target: Skeleton, glue, max_degree: int | None) -> DiagramExpr:
    out: dict[JacobiDiagram, Fraction] = {}
    for d, c in E.terms.items():
        for e, k in F.terms.items():
            if max_degree is not None and d.degree + e.degree > max_degree:
                continue
            img, s = glue(d, e)
            if s:
                out[img] = out.get(img, Fraction(0)) + c * k * s
    return DiagramExpr(target, out)


def stack_multiply(E: DiagramExpr, F: DiagramExpr, max_degree: int | None = None) -> DiagramExpr:
    """``E`` below ``F``, truncated above ``max_degree`` if given."""
    _require_strands(E, "stacking")
    E._check(F)
    sk = E.skeleton
    route = [[("E", c, False), ("F", c, False)] for c in range(sk.count)]
    return _bilinear(E, F, sk, lambda d, e: splice(sk, [(d, "E"), (e, "F")], route), max_degree)


def tensor_identity(E: DiagramExpr) -> DiagramExpr:
    """``1_l (x) E``: move strand ``i`` to ``l + i`` and leave ``1..l`` bare."""
    _require_strands(E, "juxtaposition")
    l = E.skeleton.count
    target = Skeleton.strands(2 * l)
    route = [[] for _ in range(l)] + [[("E", c, False)] for c in range(l)]
    return linear_extension(lambda d: splice(target, [(d, "E")], route), E, target)


def _halves(D: DiagramExpr, E: DiagramExpr) -> int:
    _require_strands(D, "the action")
    _require_strands(E, "the action")
    l = E.skeleton.count
    if D.skeleton.count != 2 * l:
        raise DomainError(f"acting diagram on {D.skeleton.count} strands, expected {2 * l}")
    return l


def act_left(D: DiagramExpr, E: DiagramExpr, max_degree: int | None = None) -> DiagramExpr:
    l = _halves(D, E)
    route = [[("D", l + i, False), ("E", i, False), ("D", i, True)] for i in range(l)]
    sk = E.skeleton
    return _bilinear(D, E, sk, lambda d, e: splice(sk, [(d, "D"), (e, "E")], route), max_degree)


def act_right(E: DiagramExpr, D: DiagramExpr, max_degree: int | None = None) -> DiagramExpr:
    l = _halves(D, E)
    route = [[("D", i, True), ("E", i, False), ("D", l + i, False)] for i in range(l)]
    sk = E.skeleton
    return _bilinear(D, E, sk, lambda d, e: splice(sk, [(d, "D"), (e, "E")], route), max_degree)


def close(E: DiagramExpr) -> DiagramExpr:
    """Re-read a strand expression on circles (no reduction)."""
    _require_strands(E, "closure")
    target = Skeleton.circles(E.skeleton.count)
    return linear_extension(
        lambda d: canonicalize(JacobiDiagram(target, d.counts, d.pair)), E, target
    )


def close_triple(
    E1: DiagramExpr, D: DiagramExpr, E2: DiagramExpr, max_degree: int | None = None
) -> DiagramExpr:
    l = _halves(D, E1)
    E1._check(E2)
    target = Skeleton.circles(l)
    route = [
        [("D", i, True), ("A", i, False), ("D", l + i, False), ("B", i, False)] for i in range(l)
    ]
    out: dict[JacobiDiagram, Fraction] = {}
    for a, ca in E1.terms.items():
        for d, cd in D.terms.items():
            for b, cb in E2.terms.items():
                if max_degree is not None and a.degree + d.degree + b.degree > max_degree:
                    continue
                img, s = splice(target, [(d, "D"), (a, "A"), (b, "B")], route)
                if s:
                    out[img] = out.get(img, Fraction(0)) + ca * cd * cb * s
    return DiagramExpr(target, out)


# ---------------------------------------------------------------- linear operators


@dataclass(eq=False)
class LinearOperator:
    """Exact matrix between reduced bases (rows: target, columns: source)."""

    source: DiagramSpace
    target: DiagramSpace
    matrix: SparseMatrix

    def __post_init__(self):
        if (self.matrix.nrows, self.matrix.ncols) != (self.target.dim, self.source.dim):
            raise DomainError("operator matrix does not match the space dimensions")

    @classmethod
    def from_function(cls, source: DiagramSpace, target: DiagramSpace, f) -> LinearOperator:
        cols = [target.coordinates(f(source.basis_expr(k))) for k in range(source.dim)]
        return cls(source, target, SparseMatrix.from_columns(target.dim, cols))

    def rank(self) -> int:
        return rank(self.matrix)

    def kernel(self) -> Subspace:
        return kernel_basis(self.matrix)

    def apply(self, E: DiagramExpr) -> DiagramExpr:
        return self.target.from_coordinates(self.matrix.apply(self.source.coordinates(E)))

    def is_surjective(self) -> bool:
        return self.rank() == self.target.dim


def _spaces(l: int, n: int, config: JacobiConfig | None):
    cfg = config or DEFAULT_CONFIG
    return cfg, diagram_space(Skeleton.strands(l), n, cfg)


def closure_map(l: int, n: int, config: JacobiConfig | None = None) -> LinearOperator:
    """``A_{<=n}(l strands) -> A_{<=n}(l circles)``."""
    cfg, src = _spaces(l, n, config)
    tgt = diagram_space(Skeleton.circles(l), n, cfg)
    return LinearOperator.from_function(src, tgt, close)


def unit_action_map(l: int, n: int, side: str = "right", config: JacobiConfig | None = None) -> LinearOperator:
    """``D -> act_right(1, D)`` (``side="right"``) or ``D -> act_left(D, 1)``, from ``A(2l)`` to ``A(l)``."""
    cfg = config or DEFAULT_CONFIG
    cfg.check_action(l)
    big = diagram_space(Skeleton.strands(2 * l), n, cfg)
    small = diagram_space(Skeleton.strands(l), n, cfg)
    unit = DiagramExpr.unit(small.skeleton)
    if side == "right":
        f = lambda D: act_right(unit, D, n)
    elif side == "left":
        f = lambda D: act_left(D, unit, n)
    else:
        raise DomainError(f"side must be 'left' or 'right', got {side!r}")
    return LinearOperator.from_function(big, small, f)


@dataclass(eq=False)
class StabilizerKernel:
    """Kernel of the unit-action map; the stabilizer of the unit is ``1 + span``."""

    space: DiagramSpace
    side: str
    map: LinearOperator
    subspace: Subspace

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def elements(self) -> list[DiagramExpr]:
        return [self.space.from_coordinates(v) for v in self.subspace.basis]


def unit_action_kernel(l: int, n: int, side: str = "right", config: JacobiConfig | None = None) -> StabilizerKernel:
    op = unit_action_map(l, n, side, config)
    return StabilizerKernel(op.source, side, op, op.kernel())


@dataclass(eq=False)
class CovariantSpace:
    """``A_{<=n}(l) / span{act_left(k, E)}`` and the induced map to circles."""

    strands: DiagramSpace
    circles: DiagramSpace
    relations: Subspace
    closure: LinearOperator
    induced: SparseMatrix
    well_defined: bool

    @property
    def dim(self) -> int:
        return self.strands.dim - self.relations.dim

    def induced_rank(self) -> int:
        return rank(self.induced)

    def is_isomorphism(self) -> bool:
        return self.well_defined and self.dim == self.circles.dim == self.induced_rank()


def covariant_space(l: int, n: int, side: str = "right", config: JacobiConfig | None = None) -> CovariantSpace:
    cfg = config or DEFAULT_CONFIG
    ker = unit_action_kernel(l, n, side, cfg)
    small = diagram_space(Skeleton.strands(l), n, cfg)
    ech = Echelon(small.dim)
    for k in ker.elements():
        for b in range(small.dim):
            ech.add(small.coordinates(act_left(k, small.basis_expr(b), n)))
    rel = Subspace(small.dim, tuple(ech.rows()))
    clo = closure_map(l, n, cfg)
    well_defined = all(not clo.matrix.apply(v) for v in rel.basis)
    # quotient basis: coordinates that are not pivots of the relation span
    pivots = set(rel.pivots)
    free = [c for c in range(small.dim) if c not in pivots]
    cols: list[Row] = [clo.matrix.apply({c: 1}) for c in free]
    induced = SparseMatrix.from_columns(clo.target.dim, cols)
    return CovariantSpace(small, clo.target, rel, clo, induced, well_defined)
