"""Integer compositions, partition multiplicity vectors and weighted counts.

A weight function ``f`` assigns a rational weight to every part value and
``g`` assigns one to every part count. The weight of a composition
``(p_1, ..., p_k)`` is ``g(k) * f(p_1) * ... * f(p_k)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from ._backend import kernels
from .errors import DomainError
from .rational import to_rat


def _check_positive(n) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"expected a positive integer, got {n!r}")
    return n


@dataclass(frozen=True)
class WeightFunction:
    """Map from positive integers to rationals with a default value."""

    overrides: Mapping[int, Fraction] = field(default_factory=dict)
    default: Fraction = Fraction(1)

    def __post_init__(self):
        clean = {}
        for key, value in dict(self.overrides).items():
            if isinstance(key, bool) or not isinstance(key, int) or key < 1:
                raise DomainError(f"weight keys must be integers >= 1, got {key!r}")
            clean[key] = to_rat(value)
        object.__setattr__(self, "overrides", clean)
        object.__setattr__(self, "default", to_rat(self.default))

    def __call__(self, i: int) -> Fraction:
        if isinstance(i, bool) or not isinstance(i, int) or i < 1:
            raise DomainError(f"weight functions are defined on i >= 1, got {i!r}")
        return self.overrides.get(i, self.default)

    def __hash__(self):
        return hash((tuple(sorted(self.overrides.items())), self.default))

    @classmethod
    def constant(cls, value=1) -> "WeightFunction":
        return cls({}, value)

    @classmethod
    def from_sequence(cls, coeffs: Sequence) -> "WeightFunction":
        """Weights ``i -> coeffs[i]`` for ``1 <= i < len(coeffs)`` and zero beyond.

        ``coeffs[0]`` is ignored, so a coefficient list of a series can be
        passed as is.
        """
        return cls({i: c for i, c in enumerate(coeffs) if i >= 1}, 0)

    @classmethod
    def from_callable(cls, func, upto: int, default=0) -> "WeightFunction":
        return cls({i: func(i) for i in range(1, upto + 1)}, default)

    def values(self, n: int) -> list:
        """``[None, f(1), ..., f(n)]``, indexed by part value."""
        return [None] + [self(i) for i in range(1, n + 1)]


@dataclass(frozen=True, slots=True)
class Composition:
    n: int
    parts: tuple

    def __post_init__(self):
        if not self.parts or any(p < 1 for p in self.parts) or sum(self.parts) != self.n:
            raise DomainError(f"{self.parts!r} is not a composition of {self.n}")

    def __len__(self):
        return len(self.parts)


@dataclass(frozen=True, slots=True)
class MultiplicityVector:
    """Partition of ``n`` as ``(k_1, ..., k_n)``, ``k_i`` the number of parts equal to ``i``."""

    n: int
    multiplicities: tuple

    def __post_init__(self):
        ks = self.multiplicities
        if len(ks) != self.n or any(k < 0 for k in ks):
            raise DomainError(f"bad multiplicity vector {ks!r} for n={self.n}")
        if sum(i * k for i, k in enumerate(ks, 1)) != self.n:
            raise DomainError(f"{ks!r} does not satisfy sum i*k_i = {self.n}")

    @property
    def r(self) -> int:
        """Number of parts."""
        return sum(self.multiplicities)

    def parts(self) -> tuple:
        """The partition as a weakly decreasing tuple of parts."""
        return tuple(i for i in range(self.n, 0, -1) for _ in range(self.multiplicities[i - 1]))


def multinomial(counts: Sequence[int]) -> int:
    """``(sum counts)! / prod(count!)``, computed exactly."""
    counts = list(counts)
    if not counts:
        raise DomainError("multinomial of an empty list")
    result, total = 1, 0
    for c in counts:
        if isinstance(c, bool) or not isinstance(c, int) or c < 0:
            raise DomainError(f"multinomial entries must be nonnegative integers, got {c!r}")
        total += c
        result *= math.comb(total, c)
    return result


def _partitions(n: int) -> Iterator[list]:
    # reverse lexicographic: (n), (n-1, 1), ..., (1, ..., 1)
    parts = [n]
    while True:
        yield parts
        j = len(parts) - 1
        while j >= 0 and parts[j] == 1:
            j -= 1
        if j < 0:
            return
        rest = len(parts) - j - 1 + parts[j]
        v = parts[j] - 1
        del parts[j:]
        while rest >= v:
            parts.append(v)
            rest -= v
        if rest:
            parts.append(rest)


def enumerate_multiplicity_vectors(n: int) -> Iterator[MultiplicityVector]:
    """Yield every solution of ``k_1 + 2 k_2 + ... + n k_n = n`` once.

    Order follows the partitions in decreasing lexicographic order, so for
    ``n = 4`` the first vector is ``(0, 0, 0, 1)`` and the last ``(4, 0, 0, 0)``.
    """
    _check_positive(n)
    for parts in _partitions(n):
        ks = [0] * n
        for p in parts:
            ks[p - 1] += 1
        yield MultiplicityVector(n, tuple(ks))


def enumerate_compositions(n: int) -> Iterator[Composition]:
    """Lazily yield the ``2**(n-1)`` compositions of ``n`` in lexicographic order."""
    _check_positive(n)
    for parts in kernels.compositions(n):
        yield Composition(n, parts)


def _weight_term(mv: MultiplicityVector, fvals: list) -> Fraction:
    w = Fraction(1)
    for i, k in enumerate(mv.multiplicities, 1):
        if k:
            w *= fvals[i] ** k
    return w


def weighted_partition_weight(n: int, f: WeightFunction) -> Fraction:
    """Total weight of the f-weighted partitions of ``n``."""
    fvals = f.values(_check_positive(n))
    return sum((_weight_term(mv, fvals) for mv in enumerate_multiplicity_vectors(n)), Fraction(0))


def weighted_composition_weight(n: int, f: WeightFunction) -> Fraction:
    """Total weight of the f-weighted compositions of ``n``."""
    fvals = f.values(_check_positive(n))
    total = Fraction(0)
    for mv in enumerate_multiplicity_vectors(n):
        total += multinomial(mv.multiplicities) * _weight_term(mv, fvals)
    return total


def weighted_composition_weight_g(n: int, f: WeightFunction, g: WeightFunction) -> Fraction:
    """Closed-form total weight of the (f, g)-weighted compositions of ``n``.

    Sums ``multinomial(k) * g(r) * prod f(i)**k_i`` over the multiplicity
    vectors of ``n``; ``g`` is consulted only for part counts ``1 <= r <= n``.
    """
    fvals = f.values(_check_positive(n))
    gvals = g.values(n)
    total = Fraction(0)
    for mv in enumerate_multiplicity_vectors(n):
        total += multinomial(mv.multiplicities) * gvals[mv.r] * _weight_term(mv, fvals)
    return total


def oracle_composition_weight(n: int, f: WeightFunction, g: WeightFunction) -> Fraction:
    """Brute-force total weight: visits each of the ``2**(n-1)`` compositions.

    Weights of ``f`` are brought to a common denominator so the enumeration
    kernel works on integers; per part count ``k`` the integer sum is divided
    by ``denominator**k`` and multiplied by ``g(k)``.
    """
    fvals = f.values(_check_positive(n))
    gvals = g.values(n)
    den = math.lcm(*(v.denominator for v in fvals[1:]))
    ints = [0] + [v.numerator * (den // v.denominator) for v in fvals[1:]]
    sums = kernels.composition_part_sums(n, ints)
    total = Fraction(0)
    for k in range(1, n + 1):
        if sums[k]:
            total += gvals[k] * Fraction(sums[k], den**k)
    return total
