"""Command-line interface.

Exit codes: 0 success, 1 parse error, 2 domain error (or a failed demo
check), 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from stringlinks.braids import free_pair_embed, linking_number_oracle, milnor, parse_braid
from stringlinks.errors import CapExceeded, DomainError, ParseError
from stringlinks.jacobi import (
    DiagramExpr,
    JacobiConfig,
    Skeleton,
    act_left,
    act_right,
    chord,
    close,
    covariant_space,
    diagram_space,
    expr_to_json,
    load_expr,
    stack_multiply,
    y_diagram,
)
from stringlinks.magnus import (
    DEFAULT_BOUND,
    cyclize,
    cyclized_vanishing_order,
    filtration_degree,
    format_order,
    magnus,
    magnus_ring,
)
from stringlinks.words import (
    Alphabet,
    GroupRingElement,
    commutator,
    parse_element,
    parse_word,
    trace,
)

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_CAP = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _alphabet(text: str) -> Alphabet:
    names = [n.strip() for n in text.split(",") if n.strip()]
    if not names:
        raise ParseError(f"empty generator list {text!r}")
    try:
        return Alphabet.from_names(names)
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from None


def _read_expr(arg: str) -> DiagramExpr:
    """An expression given inline, as a file path, or ``-`` for stdin."""
    if arg == "-":
        return load_expr(sys.stdin.read())
    p = Path(arg)
    if p.is_file():
        return load_expr(p.read_text())
    return load_expr(arg)


def _config(args) -> JacobiConfig:
    return JacobiConfig(
        use_cache=not args.no_cache,
        degree_cap=3 if getattr(args, "stretch", False) else 2,
        action_strands_cap=3 if getattr(args, "stretch", False) else 2,
    )


# ---------------------------------------------------------------- subcommands


def cmd_magnus(args):
    alpha = _alphabet(args.gens)
    w = parse_word(args.word, alpha)
    p = magnus(w, args.deg)
    return {"word": str(w), "deg": args.deg, "magnus": str(p)}, str(p)


def cmd_degree(args):
    alpha = _alphabet(args.gens)
    e = parse_element(args.elem, alpha)
    d = filtration_degree(e, args.deg)
    return {"elem": str(e), "deg": args.deg, "degree": d}, format_order(d, args.deg)


def cmd_closed_degree(args):
    alpha = _alphabet(args.gens)
    e = parse_element(args.elem, alpha)
    d = cyclized_vanishing_order(e, args.deg)
    cyc = cyclize(magnus_ring(e, args.deg))
    return (
        {"elem": str(e), "deg": args.deg, "closed_degree_lower_bound": d, "cyclized": str(cyc)},
        format_order(d, args.deg),
    )


def cmd_trace(args):
    alpha = _alphabet(args.gens)
    e = parse_element(args.elem, alpha)
    tr = trace(e)
    return {"elem": str(e), "trace": str(tr), "zero": not tr}, str(tr)


def cmd_milnor(args):
    b = parse_braid(args.braid, args.strands)
    seq = _int_list(args.seq)
    deg = args.deg if args.deg is not None else max(len(seq), 1)
    v = milnor(b, seq, args.target, deg)
    return {"braid": str(b), "seq": seq, "target": args.target, "deg": deg, "mu": v}, str(v)


def borromean_checks(config: JacobiConfig) -> list[tuple[str, object, bool]]:
    alpha = Alphabet.from_names(["x", "y"])
    x, y = parse_word("x", alpha), parse_word("y", alpha)
    w = commutator(x, y)
    one = GroupRingElement.one(alpha)
    wm1 = GroupRingElement.from_word(w) - one
    prod = wm1 * (GroupRingElement.from_word(y) - one)
    before = filtration_degree(wm1, 4)
    tr = trace(wm1 + prod)
    closed = cyclized_vanishing_order(wm1, 3)
    S3 = Skeleton.strands(3)
    circles = diagram_space(Skeleton.circles(3), 2, config)
    Y = DiagramExpr.of(y_diagram(S3))
    closure_y = circles.normal_form(close(Y))
    b = free_pair_embed(w)
    mu = milnor(b, (1, 2), 3, 3)
    lk = [linking_number_oracle(b, i, j) for i, j in ((1, 2), (1, 3), (2, 3))]
    t12, t13 = DiagramExpr.of(chord(S3, 1, 2)), DiagramExpr.of(chord(S3, 1, 3))
    strands = diagram_space(S3, 2, config)
    y_comm = strands.equal(Y, stack_multiply(t12, t13) - stack_multiply(t13, t12))
    return [
        ("degree before closure of w - 1", before, before == 2),
        ("trace of (w - 1) + (w - 1)(y - 1)", str(tr), not tr),
        ("cyclized vanishing order of w - 1 (N = 3)", format_order(closed, 3), closed is None),
        ("Y = t12 t13 - t13 t12 in A(3 strands)", y_comm, y_comm),
        ("closure of Y in A(3 circles)", str(closure_y), not closure_y),
        ("mu(12;3) of A13 A23 A13^-1 A23^-1", mu, abs(mu) == 1),
        ("pairwise linking numbers", lk, lk == [0, 0, 0]),
    ]


def cmd_borromean_demo(args):
    checks = borromean_checks(_config(args))
    ok = all(c[2] for c in checks)
    lines = [f"{'PASS' if good else 'FAIL'}  {name}: {value}" for name, value, good in checks]
    lines.append("all checks passed" if ok else "some checks FAILED")
    payload = {"checks": [{"name": n, "value": v, "pass": g} for n, v, g in checks], "pass": ok}
    return payload, "\n".join(lines), (EXIT_OK if ok else EXIT_DOMAIN)


def cmd_diagram_dim(args):
    sk = Skeleton.parse(args.skeleton)
    space = diagram_space(sk, args.deg, _config(args))
    dims = space.dims_by_degree()
    text = f"{space.dim}\nby degree: " + ", ".join(f"{d}:{v}" for d, v in enumerate(dims))
    return {"skeleton": str(sk), "deg": args.deg, "dim": space.dim, "dims_by_degree": dims}, text


def cmd_closure(args):
    E = _read_expr(args.expr)
    if E.skeleton.closed:
        raise DomainError("closure expects an expression on strands")
    n = args.deg if args.deg is not None else max(E.max_degree, 0)
    cfg = _config(args)
    space = diagram_space(Skeleton.circles(E.skeleton.count), n, cfg)
    img = space.normal_form(close(E.truncate(n)))
    return {"input": expr_to_json(E), "closure": expr_to_json(img), "zero": not img}, str(img)


def cmd_act(args):
    D = _read_expr(args.left)
    E = _read_expr(args.on)
    cfg = _config(args)
    cfg.check_degree(args.deg)
    if args.right:
        out = act_right(E, D, args.deg)
    else:
        out = act_left(D, E, args.deg)
    space = diagram_space(out.skeleton, args.deg, cfg)
    nf = space.normal_form(out)
    return {"result": expr_to_json(out), "normal_form": expr_to_json(nf)}, f"{out}\nnormal form: {nf}"


def cmd_covariants(args):
    cfg = _config(args)
    cov = covariant_space(args.strands, args.deg, args.side, cfg)
    payload = {
        "strands": args.strands,
        "deg": args.deg,
        "side": args.side,
        "dim_strands": cov.strands.dim,
        "dim_covariants": cov.dim,
        "dim_circles": cov.circles.dim,
        "induced_rank": cov.induced_rank(),
        "well_defined": cov.well_defined,
        "isomorphism": cov.is_isomorphism(),
    }
    text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    return payload, text


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stringlinks", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-cache", action="store_true", help="do not read or write the diagram-space cache")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        return sp

    sp = add("magnus", cmd_magnus, "truncated Magnus expansion of a word")
    sp.add_argument("--word", required=True)
    sp.add_argument("--gens", default="x,y")
    sp.add_argument("--deg", type=int, default=DEFAULT_BOUND)

    for name, func, help in (
        ("degree", cmd_degree, "filtration degree of an augmentation-zero element"),
        ("closed-degree", cmd_closed_degree, "first degree surviving cyclization (lower bound after closure)"),
    ):
        sp = add(name, func, help)
        sp.add_argument("--elem", required=True)
        sp.add_argument("--gens", default="x,y")
        sp.add_argument("--deg", type=int, default=DEFAULT_BOUND)

    sp = add("trace", cmd_trace, "group-ring element up to conjugation of its terms")
    sp.add_argument("--elem", required=True)
    sp.add_argument("--gens", default="x,y")

    sp = add("milnor", cmd_milnor, "Milnor invariant of a pure braid")
    sp.add_argument("--braid", required=True)
    sp.add_argument("--strands", type=int, required=True)
    sp.add_argument("--seq", required=True, help="comma-separated indices i1,...,im")
    sp.add_argument("--target", type=int, required=True)
    sp.add_argument("--deg", type=int, default=None)

    add("borromean-demo", cmd_borromean_demo, "run the Borromean rings computations")

    sp = add("diagram-dim", cmd_diagram_dim, "dimension of a Jacobi diagram space")
    sp.add_argument("--skeleton", required=True, help="strands:L or circles:L")
    sp.add_argument("--deg", type=int, required=True)
    sp.add_argument("--stretch", action="store_true", help="allow degree 3")

    sp = add("closure", cmd_closure, "close a strand expression onto circles")
    sp.add_argument("--expr", required=True, help="file (JSON or text), '-' for stdin, or inline text")
    sp.add_argument("--deg", type=int, default=None)
    sp.add_argument("--stretch", action="store_true")

    sp = add("act", cmd_act, "act by a 2l-strand expression on an l-strand expression")
    sp.add_argument("--left", required=True, help="the 2l-strand expression D")
    sp.add_argument("--on", required=True, help="the l-strand expression E")
    sp.add_argument("--right", action="store_true", help="compute act_right(E, D) instead")
    sp.add_argument("--deg", type=int, default=2)
    sp.add_argument("--stretch", action="store_true")

    sp = add("covariants", cmd_covariants, "covariant quotient versus diagrams on circles")
    sp.add_argument("--strands", type=int, required=True)
    sp.add_argument("--deg", type=int, required=True)
    sp.add_argument("--side", choices=("right", "left"), default="right")
    sp.add_argument("--stretch", action="store_true", help="allow l = 3 or degree 3")
    return p


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
        result = args.func(args)
        payload, text = result[0], result[1]
        code = result[2] if len(result) > 2 else EXIT_OK
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
