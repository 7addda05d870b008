"""Brute-force references that share no code with the package."""
import itertools
import math
from fractions import Fraction


def compositions_by_cuts(n):
    """All compositions of n from the 2**(n-1) subsets of cut points."""
    out = []
    for cuts in itertools.product((0, 1), repeat=n - 1):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return out


def partitions_by_sorting(n):
    return {tuple(sorted(c, reverse=True)) for c in compositions_by_cuts(n)}


def arrangements(multiset):
    return len(set(itertools.permutations(multiset)))


def weight_sum(n, f, g):
    """Sum of g(k) * prod f(part) over compositions listed by cut points."""
    total = Fraction(0)
    for parts in compositions_by_cuts(n):
        total += g(len(parts)) * math.prod((f(p) for p in parts), start=Fraction(1))
    return total


def set_partition_count(n):
    """Count set partitions of {0..n-1} by assigning each element to a block."""
    def grow(i, blocks):
        if i == n:
            return 1
        return sum(grow(i + 1, blocks) for _ in range(blocks)) + grow(i + 1, blocks + 1)
    return grow(0, 0)


def poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_compose(g, f):
    out = [Fraction(0)]
    for c in reversed(g):
        out = poly_mul(out, f)
        out[0] += c
    return out


def poly_derivative_at(p, x0, k):
    for _ in range(k):
        p = [i * c for i, c in enumerate(p)][1:] or [Fraction(0)]
    return sum((c * Fraction(x0) ** i for i, c in enumerate(p)), Fraction(0))
