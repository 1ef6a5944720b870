"""Exact Schur-basis arithmetic built on Littlewood-Richardson counting."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from math import comb, factorial
from typing import Iterable, Iterator, Mapping

from schurstar import kernels
from schurstar.partition import (
    Partition,
    ShapeMismatch,
    SkewShape,
    WeightMismatch,
    conjugate,
    contains,
    dominates,
    is_ribbon,
    pad,
    part,
    partition,
    partitions,
    skew,
    union,
    add,
)
from schurstar.star import star_direct
from schurstar.tableaux import Tableau

INT64_MAX = 2**63 - 1


class CoefficientOverflow(ArithmeticError):
    pass


class NotARibbon(ValueError):
    pass


def _checked(x: int) -> int:
    if not -INT64_MAX - 1 <= x <= INT64_MAX:
        raise CoefficientOverflow(f"coefficient {x} exceeds the signed 64-bit range")
    return x


class SchurExpansion(Mapping):
    """A homogeneous symmetric function written in the Schur basis.

    Maps partitions to nonzero integer coefficients.  The zero function
    carries an explicit ``degree`` so that differences keep their grading.
    """

    __slots__ = ("_terms", "degree")

    def __init__(self, terms: Mapping[Partition, int] | Iterable[tuple[Partition, int]] = (), degree: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Partition, int] = {}
        for lam, c in items:
            if c:
                lam = partition(lam)
                clean[lam] = _checked(clean.get(lam, 0) + c)
                if not clean[lam]:
                    del clean[lam]
        degrees = {sum(lam) for lam in clean}
        if len(degrees) > 1:
            raise WeightMismatch(f"inhomogeneous expansion, degrees {sorted(degrees)}")
        if degrees:
            d = degrees.pop()
            if degree is not None and degree != d:
                raise WeightMismatch(f"terms of degree {d}, declared {degree}")
            degree = d
        self._terms = dict(sorted(clean.items(), reverse=True))
        self.degree = degree

    @classmethod
    def schur(cls, lam: Partition) -> SchurExpansion:
        return cls({tuple(lam): 1})

    def __getitem__(self, lam):
        return self._terms[tuple(lam)]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def coefficient(self, lam: Partition) -> int:
        return self._terms.get(tuple(lam), 0)

    def __eq__(self, other):
        if isinstance(other, SchurExpansion):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == {tuple(k): v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def _degree_with(self, other: SchurExpansion) -> int | None:
        if self.degree is not None and other.degree is not None and self.degree != other.degree:
            raise WeightMismatch(f"degrees {self.degree} and {other.degree} differ")
        return self.degree if self.degree is not None else other.degree

    def __add__(self, other: SchurExpansion) -> SchurExpansion:
        degree = self._degree_with(other)
        return SchurExpansion(list(self.items()) + list(other.items()), degree)

    def __neg__(self) -> SchurExpansion:
        return SchurExpansion({k: -v for k, v in self.items()}, self.degree)

    def __sub__(self, other: SchurExpansion) -> SchurExpansion:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SchurExpansion({k: v * other for k, v in self.items()}, self.degree)
        return multiply(self, other)

    __rmul__ = __mul__

    def is_positive(self) -> bool:
        return all(c > 0 for c in self.values())

    def conjugate(self) -> SchurExpansion:
        return SchurExpansion({conjugate(k): v for k, v in self.items()}, self.degree)

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*s{k}" for k, c in self.items())


# ---------------------------------------------------------------------------
# LR coefficients


_LR_CACHE: dict[tuple[Partition, Partition, Partition], int] = {}
_LR_NEW: dict[tuple[Partition, Partition, Partition], int] = {}


def lr_key(mu: Partition, nu: Partition, theta: Partition) -> tuple[Partition, Partition, Partition]:
    """Canonical cache key, using the symmetry in the two factors."""
    a, b = sorted((tuple(mu), tuple(nu)))
    return a, b, tuple(theta)


def load_cache(entries: Mapping[tuple[Partition, Partition, Partition], int]) -> None:
    _LR_CACHE.update(entries)


def new_cache_entries() -> dict:
    """Entries computed since the last call; the tracking set is cleared."""
    out = dict(_LR_NEW)
    _LR_NEW.clear()
    return out


def clear_cache() -> None:
    _LR_CACHE.clear()
    _LR_NEW.clear()


def lr_coefficient(mu: Partition, nu: Partition, theta: Partition) -> int:
    """``c^theta_{mu nu}``, the multiplicity of ``s_theta`` in ``s_mu s_nu``."""
    mu, nu, theta = tuple(mu), tuple(nu), tuple(theta)
    if sum(theta) != sum(mu) + sum(nu) or not (contains(mu, theta) and contains(nu, theta)):
        return 0
    key = lr_key(mu, nu, theta)
    c = _LR_CACHE.get(key)
    if c is None:
        # fill as few cells as possible: the heavier factor is the inner shape
        inner, content = (mu, nu) if (sum(mu), mu) >= (sum(nu), nu) else (nu, mu)
        c = _checked(kernels.lr_count(theta, inner, content))
        _LR_CACHE[key] = c
        _LR_NEW[key] = c
    return c


def lr_fillings(outer: Partition, inner: Partition, content: Partition) -> list[Tableau]:
    """All LR fillings of ``outer/inner`` of the given type, sorted by their row entries."""
    shape = SkewShape(tuple(outer), tuple(inner))
    if not contains(shape.inner, shape.outer) or shape.weight != sum(content):
        raise ShapeMismatch(f"cannot fill {shape} with content {tuple(content)}")
    found = [Tableau(shape, tuple(map(tuple, rows))) for rows in kernels.lr_fillings(shape.outer, shape.inner, tuple(content))]
    return sorted(found, key=lambda t: [x for row in t.rows for x in row])


def dominance_interval(low: Partition, high: Partition, floor: Partition = ()) -> Iterator[Partition]:
    """Partitions ``theta`` with ``low <= theta <= high`` in dominance order and ``floor`` inside ``theta``.

    Generated in reverse lexicographic order.
    """
    n = sum(high)
    if sum(low) != n:
        raise WeightMismatch(f"{low} and {high} have different weights")
    length = max(len(low), len(high))
    lo_sums = list(accumulate(pad(low, length)))
    hi_sums = list(accumulate(pad(high, length)))

    def rec(k: int, prev: int, total: int) -> Iterator[list[int]]:
        if total == n:
            if k >= len(floor):
                yield []
            return
        if k >= length:
            return
        top = min(prev, hi_sums[k] - total, n - total)
        bottom = max(lo_sums[k] - total, part(floor, k + 1), 1)
        for x in range(top, bottom - 1, -1):
            for rest in rec(k + 1, x, total + x):
                yield [x] + rest

    for theta in rec(0, n, 0):
        yield tuple(theta)


@lru_cache(maxsize=65536)
def _product_terms(mu: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    floor = tuple(max(a, b) for a, b in zip(pad(mu, max(len(mu), len(nu))), pad(nu, max(len(mu), len(nu)))))
    out = []
    for theta in dominance_interval(union(mu, nu), add(mu, nu), floor):
        c = lr_coefficient(mu, nu, theta)
        if c:
            out.append((theta, c))
    return tuple(out)


def schur_product(mu: Partition, nu: Partition) -> SchurExpansion:
    """``s_mu s_nu`` in the Schur basis."""
    mu, nu = tuple(mu), tuple(nu)
    if mu > nu:
        mu, nu = nu, mu
    return SchurExpansion(_product_terms(mu, nu), sum(mu) + sum(nu))


def skew_schur(s: SkewShape) -> SchurExpansion:
    """``s_{theta/nu}``, whose coefficient of ``s_mu`` is ``c^theta_{mu nu}``."""
    theta, nu = s
    if not contains(nu, theta):
        raise ShapeMismatch(f"{nu} is not contained in {theta}")
    n = sum(theta) - sum(nu)
    terms = {}
    for mu in partitions(n):
        if contains(mu, theta):
            c = lr_coefficient(mu, nu, theta)
            if c:
                terms[mu] = c
    return SchurExpansion(terms, n)


def multiply(a: SchurExpansion, b: SchurExpansion) -> SchurExpansion:
    degree = None if a.degree is None or b.degree is None else a.degree + b.degree
    acc: dict[Partition, int] = {}
    for mu, x in a.items():
        for nu, y in b.items():
            for theta, c in schur_product(mu, nu).items():
                acc[theta] = _checked(acc.get(theta, 0) + x * y * c)
    return SchurExpansion(acc, degree)


@dataclass(frozen=True)
class Witness:
    """A partition where ``a - b`` has a negative coefficient."""

    shape: Partition
    left: int
    right: int


@dataclass(frozen=True)
class DifferenceCheck:
    difference: SchurExpansion
    witness: Witness | None = None

    @property
    def positive(self) -> bool:
        return self.witness is None


def schur_positive_difference(a: SchurExpansion, b: SchurExpansion) -> DifferenceCheck:
    """Check whether ``a - b`` is Schur positive.

    The witness, when there is one, is the lexicographically least partition
    with a negative coefficient.
    """
    if a.degree is not None and b.degree is not None and a.degree != b.degree:
        raise WeightMismatch(f"degrees {a.degree} and {b.degree} differ")
    diff = a - b
    negative = sorted(k for k, c in diff.items() if c < 0)
    if not negative:
        return DifferenceCheck(diff)
    theta = negative[0]
    return DifferenceCheck(diff, Witness(theta, a.coefficient(theta), b.coefficient(theta)))


# ---------------------------------------------------------------------------
# Kostka numbers and complete homogeneous functions


def kostka(beta: Partition, alpha: Iterable[int]) -> int:
    """Number of semistandard tableaux of shape ``beta`` and content ``alpha``."""
    return _kostka(tuple(beta), tuple(alpha))


@lru_cache(maxsize=None)
def _kostka(beta: Partition, alpha: tuple[int, ...]) -> int:
    if sum(beta) != sum(alpha):
        return 0
    if not alpha:
        return 1
    # peel the largest entry: a horizontal strip of alpha[-1] cells
    *rest, k = alpha
    total = 0
    for gamma in _remove_horizontal_strips(beta, k):
        total += _kostka(gamma, tuple(rest))
    return _checked(total)


def _remove_horizontal_strips(beta: Partition, k: int) -> Iterator[Partition]:
    n = len(beta)
    p = list(beta)

    def rec(i: int, left: int) -> Iterator[list[int]]:
        if i == n:
            if left == 0:
                yield []
            return
        nxt = p[i + 1] if i + 1 < n else 0
        for x in range(min(left, p[i] - nxt), -1, -1):
            for rest in rec(i + 1, left - x):
                yield [p[i] - x] + rest

    for q in rec(0, k):
        yield tuple(x for x in q if x)


def h_to_schur(alpha: Iterable[int]) -> SchurExpansion:
    """``h_alpha = sum_beta K_{beta alpha} s_beta``."""
    alpha = tuple(alpha)
    lam = tuple(sorted((x for x in alpha if x), reverse=True))
    n = sum(lam)
    return SchurExpansion({beta: kostka(beta, alpha) for beta in partitions(n) if dominates(beta, lam)}, n)


def h_difference_positive(mu: Partition, nu: Partition) -> bool:
    """Whether ``h_lambda h_rho - h_mu h_nu`` is Schur positive for ``(lambda, rho) = (mu, nu)*``."""
    lam, rho = star_direct(mu, nu)
    return dominates(union(mu, nu), union(lam, rho))


# ---------------------------------------------------------------------------
# Standard tableaux counts


def hook_length_count(mu: Partition, checked: bool = True) -> int:
    """Number of standard tableaux of shape ``mu`` by the hook-length formula.

    With ``checked=False`` the exact (unbounded) integer is returned instead of
    raising CoefficientOverflow.
    """
    conj = conjugate(mu)
    hooks = 1
    for i, row in enumerate(mu):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    f = factorial(sum(mu)) // hooks
    return _checked(f) if checked else f


def pair_count(mu: Partition, nu: Partition, checked: bool = True) -> int:
    """Number of standard pairs of shape ``(mu, nu)``."""
    f = comb(sum(mu) + sum(nu), sum(mu)) * hook_length_count(mu, False) * hook_length_count(nu, False)
    return _checked(f) if checked else f


# ---------------------------------------------------------------------------
# Ribbons


def ribbon_composition(r: SkewShape) -> tuple[int, ...]:
    """Row lengths of a ribbon read from the top row (largest index) down."""
    if not is_ribbon(r):
        raise NotARibbon(f"{r} is not a ribbon")
    return tuple(o - i for i, o in reversed(list(r.rows())) if o > i)


def ribbon_u_set(r: SkewShape) -> tuple[int, frozenset[int]]:
    """``(N, U)``: the cell count and the set of proper partial sums of the row lengths."""
    c = ribbon_composition(r)
    sums = list(accumulate(c))
    return sums[-1], frozenset(sums[:-1])


def ribbon_from_composition(c: Iterable[int]) -> SkewShape:
    """The ribbon whose rows, top to bottom, have lengths ``c``."""
    c = tuple(c)
    if not c or any(x <= 0 for x in c):
        raise NotARibbon(f"not a composition: {c}")
    outer, inner = [], []
    right = 0
    for length in c:
        # the next row down starts under the last cell of the current one
        start = right - 1 if outer else 0
        inner.append(start)
        right = start + length
        outer.append(right)
    outer.reverse()
    inner.reverse()
    return skew(outer, inner)


def ribbon_from_u_set(n: int, u: Iterable[int]) -> SkewShape:
    cuts = sorted(set(u))
    if any(not 0 < x < n for x in cuts):
        raise NotARibbon(f"U-set {cuts} is not inside 1..{n - 1}")
    bounds = [0] + cuts + [n]
    return ribbon_from_composition(b - a for a, b in zip(bounds, bounds[1:]))


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def ribbon_expansion(a: Iterable[int]) -> dict[SkewShape, int]:
    """Ribbons ``T`` with ``U(T)`` inside ``U(A)``, each with coefficient 1.

    Their skew Schur functions sum to ``h_{a_1} h_{a_2} ...``.
    """
    a = tuple(a)
    if not a or any(x <= 0 for x in a):
        raise ValueError(f"need a nonempty list of positive integers, got {a}")
    sums = list(accumulate(a))
    n, cuts = sums[-1], sums[:-1]
    out = {}
    for mask in range(2 ** len(cuts)):
        chosen = [x for i, x in enumerate(cuts) if mask >> i & 1]
        out[ribbon_from_u_set(n, chosen)] = 1
    return dict(sorted(out.items()))

