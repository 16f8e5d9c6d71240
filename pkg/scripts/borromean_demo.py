"""Borromean commutator before and after closure, printed as a short report."""

import argparse

from stringlinks.braids import free_pair_embed, longitude, milnor
from stringlinks.cli import borromean_checks
from stringlinks.jacobi import JacobiConfig
from stringlinks.magnus import cyclize, magnus, magnus_ring
from stringlinks.words import Alphabet, GroupRingElement, commutator, parse_word, trace


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--deg", type=int, default=4, help="truncation bound for the expansions")
    args = ap.parse_args()

    alpha = Alphabet.from_names(["x", "y"])
    x, y = parse_word("x", alpha), parse_word("y", alpha)
    w = commutator(x, y)
    one = GroupRingElement.one(alpha)
    wm1 = GroupRingElement.from_word(w) - one
    prod = wm1 * (GroupRingElement.from_word(y) - one)

    print(f"w = {w}")
    print(f"magnus(w)              = {magnus(w, args.deg)}")
    print(f"magnus(w - 1)          = {magnus_ring(wm1, args.deg)}")
    print(f"magnus((w - 1)(y - 1)) = {magnus_ring(prod, args.deg)}")
    print(f"cyclized(w - 1)        = {cyclize(magnus_ring(wm1, args.deg))}")
    print(f"trace((w-1) + (w-1)(y-1)) = {trace(wm1 + prod)}")
    print(f"trace((w-1) - (w-1)(y-1)) = {trace(wm1 - prod)}")

    b = free_pair_embed(w)
    print(f"\nbraid: {b}")
    for j in (1, 2, 3):
        print(f"longitude {j}: {longitude(b, j).word}")
    for I in ((1, 2), (2, 1)):
        print(f"mu({''.join(map(str, I))};3) = {milnor(b, I, 3, 3)}")

    print()
    for name, value, ok in borromean_checks(JacobiConfig()):
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {value}")


if __name__ == "__main__":
    main()
