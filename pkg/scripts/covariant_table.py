"""Dimensions of diagram spaces, stabilizer kernels and covariants.

Degree 3 is reached with --max-deg 3 (slower; raises the degree cap).
"""

import argparse
import time

from stringlinks.jacobi import JacobiConfig, Skeleton, covariant_space, diagram_space, unit_action_kernel


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-deg", type=int, default=2)
    ap.add_argument("--max-strands", type=int, default=2)
    ap.add_argument("--no-cache", action="store_true")
    args = ap.parse_args()
    cfg = JacobiConfig(
        degree_cap=max(2, args.max_deg),
        action_strands_cap=max(2, args.max_strands),
        use_cache=not args.no_cache,
    )

    print("dimensions by degree")
    for l in range(1, 2 * args.max_strands + 1):
        for kind in ("strands", "circles"):
            n = args.max_deg if l <= 2 else min(args.max_deg, 2)
            sp = diagram_space(Skeleton(kind, l), n, cfg)
            print(f"  {kind}:{l:<2} deg<={n}  {sp.dims_by_degree()}")

    print("\nl  n  side   dim A(l)  ker  covariants  circles  rank  well-defined")
    for l in range(1, args.max_strands + 1):
        for n in range(0, args.max_deg + 1):
            for side in ("right", "left"):
                t0 = time.perf_counter()
                ker = unit_action_kernel(l, n, side, cfg)
                cov = covariant_space(l, n, side, cfg)
                dt = time.perf_counter() - t0
                print(
                    f"{l}  {n}  {side:<5}  {cov.strands.dim:>8}  {ker.dim:>3}  {cov.dim:>10}  "
                    f"{cov.circles.dim:>7}  {cov.induced_rank():>4}  {cov.well_defined}  ({dt:.1f}s)"
                )


if __name__ == "__main__":
    main()
