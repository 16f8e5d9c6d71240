"""Brute-force diagram isomorphism, independent of the library's traversal.

Tries every relabelling of internal vertices, every rotation and AS flip of
each vertex, and every rotation of each circle; the smallest resulting
pairing is the class label.  A class hit with both parities is zero.
"""

import itertools

from stringlinks.jacobi.diagrams import CIRCLES


def _involutions(n):
    if n == 0:
        yield ()
        return
    def rec(pair):
        try:
            h = pair.index(-1)
        except ValueError:
            yield tuple(pair)
            return
        for p in range(h + 1, n):
            if pair[p] == -1:
                pair[h], pair[p] = p, h
                yield from rec(pair)
                pair[h] = pair[p] = -1
    yield from rec([-1] * n)


def _connected_to_legs(u, t, pair):
    n = u + 3 * t
    seen = set()
    stack = list(range(u))
    while stack:
        h = stack.pop()
        if h in seen:
            continue
        seen.add(h)
        stack.append(pair[h])
        if h >= u:
            k = (h - u) // 3
            stack.extend(u + 3 * k + s for s in range(3))
    return len(seen) == n


def raw_diagrams(counts, t):
    """All pairings with the given leg counts and ``t`` internal vertices, no vacuum parts."""
    u = sum(counts)
    for pair in _involutions(u + 3 * t):
        if _connected_to_legs(u, t, pair):
            yield pair


def naive_class(kind, counts, pair):
    u = sum(counts)
    t = (len(pair) - u) // 3
    starts = [sum(counts[:c]) for c in range(len(counts))]
    circle_shifts = (
        itertools.product(*[range(max(c, 1)) for c in counts]) if kind == CIRCLES else [tuple(0 for _ in counts)]
    )
    circle_shifts = list(circle_shifts)
    best, signs = None, set()
    for perm in itertools.permutations(range(t)):
        for rots in itertools.product(range(3), repeat=t):
            for flips in itertools.product((0, 1), repeat=t):
                for shift in circle_shifts:
                    phi = [0] * len(pair)
                    for c, cnt in enumerate(counts):
                        for i in range(cnt):
                            phi[starts[c] + i] = starts[c] + (i + shift[c]) % cnt
                    for k in range(t):
                        for s in range(3):
                            s2 = (0, 2, 1)[s] if flips[k] else s
                            phi[u + 3 * k + s] = u + 3 * perm[k] + (s2 + rots[k]) % 3
                    new = [0] * len(pair)
                    for h, p in enumerate(pair):
                        new[phi[h]] = phi[p]
                    code = tuple(new)
                    sign = -1 if sum(flips) % 2 else 1
                    if best is None or code < best:
                        best, signs = code, {sign}
                    elif code == best:
                        signs.add(sign)
    return best, (0 if len(signs) == 2 else signs.pop())
