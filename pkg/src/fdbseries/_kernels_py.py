"""Pure-Python kernels; used when the compiled ``_kernels`` module is unavailable.

Both implementations expose the same three functions and must agree exactly.
"""


def convolve(a, b, length):
    """Truncated Cauchy product of two integer lists: ``c[n] = sum a[i] * b[n-i]``."""
    out = [0] * length
    la = min(len(a), length)
    lb = min(len(b), length)
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        for j in range(min(lb, length - i)):
            out[i + j] += ai * b[j]
    return out


def compositions(n):
    """Yield every composition of ``n`` as a tuple, in lexicographic order."""
    parts = [1] * n
    while True:
        yield tuple(parts)
        if len(parts) == 1:
            return
        last = parts.pop()
        parts[-1] += 1
        parts.extend([1] * (last - 1))


def composition_part_sums(n, weights):
    """Exhaustively sum part-weight products over all compositions of ``n``.

    ``weights[i]`` is the integer weight of a part equal to ``i`` (index 0 unused).
    Returns ``s`` with ``s[k]`` the sum over k-part compositions of the product
    of their part weights. Every composition is visited; no closed form is used.
    """
    sums = [0] * (n + 1)

    def walk(remaining, k, product):
        for part in range(1, remaining + 1):
            p = product * weights[part]
            if part == remaining:
                sums[k + 1] += p
            else:
                walk(remaining - part, k + 1, p)

    walk(n, 0, 1)
    return sums
