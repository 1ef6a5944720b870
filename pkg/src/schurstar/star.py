"""The *-operation on pairs of partitions and pairs of skew shapes."""

from __future__ import annotations

from typing import NamedTuple

from schurstar import kernels
from schurstar.partition import (
    Partition,
    ShapeMismatch,
    SkewShape,
    add_cell_col,
    conjugate,
    contains,
    pad,
    partition,
    part,
)


class NoPreimage(ValueError):
    pass


class DiagonalProfile(NamedTuple):
    a: tuple[int, ...]
    b: tuple[int, ...]


def padding(mu: Partition, nu: Partition, n: int | None = None) -> int:
    least = max(len(mu), len(nu))
    if n is None:
        return least
    if n < least:
        raise ValueError(f"padding {n} shorter than the pair ({least})")
    return n


def diagonal_profile(mu: Partition, nu: Partition, n: int | None = None) -> DiagonalProfile:
    """Sizes ``a_k = #{j : nu_j - j >= mu_k - k}`` and ``b_j = #{k : mu_k - k > nu_j - j}``."""
    n = padding(mu, nu, n)
    m = [x - k for k, x in enumerate(pad(mu, n), start=1)]
    v = [x - j for j, x in enumerate(pad(nu, n), start=1)]
    a = tuple(sum(1 for y in v if y >= x) for x in m)
    b = tuple(sum(1 for x in m if x > y) for y in v)
    return DiagonalProfile(a, b)


def star_direct(mu: Partition, nu: Partition, n: int | None = None) -> tuple[Partition, Partition]:
    """``(lambda, rho)`` from the closed formula, computed at padding length ``n``."""
    n = padding(mu, nu, n)
    lam, rho = kernels.star_direct_raw(mu, nu, n)
    try:
        return partition(lam), partition(rho)
    except ValueError as exc:  # pragma: no cover - would be a kernel bug
        raise AssertionError(f"star{(mu, nu)} produced {lam}, {rho}") from exc


star = star_direct


def _grow_right(mu: list[int], beta: list[int], lam: list[int], rho: list[int], i: int) -> None:
    # Adding a cell in row i of the right partition.
    target = beta[i] - i  # new beta_i - (i + 1) in 1-indexed terms
    for j, x in enumerate(mu):
        if x - j - 1 == target:
            lam[j] += 1
            break
    else:
        rho[i] += 1
    beta[i] += 1


def _grow_left(alpha: list[int], nu: list[int], lam: list[int], rho: list[int], i: int) -> None:
    # Adding a cell in row i of the left partition.
    target = alpha[i] - i - 1
    for j, y in enumerate(nu):
        if y - j - 1 == target:
            rho[j] += 1
            break
    else:
        lam[i] += 1
    alpha[i] += 1


def star_recursive(mu: Partition, nu: Partition, *, check_columns: bool = False) -> tuple[Partition, Partition]:
    """``(mu, nu)*`` built one cell at a time from ``((), ())``.

    The right partition is grown first (rows bottom to top, each left to
    right), then the left one.  With ``check_columns`` the column form of
    each first-case step is asserted as well.
    """
    n = max(len(mu), len(nu))
    alpha, beta = [0] * n, [0] * n
    lam, rho = [0] * n, [0] * n
    for i, length in enumerate(nu):
        for _ in range(length):
            _grow_right(alpha, beta, lam, rho, i)
    target_nu = pad(nu, n)
    for i, length in enumerate(mu):
        for _ in range(length):
            old_rho = partition(rho)
            _grow_left(alpha, target_nu, lam, rho, i)
            new_rho = partition(rho)
            if check_columns and new_rho != old_rho:
                assert new_rho == add_cell_col(old_rho, alpha[i]), (mu, nu, i)
    return partition(lam), partition(rho)


def stair(nu: Partition) -> tuple[Partition, Partition]:
    """Closed form of ``((), nu)*``: the pair (nu-bar, nu-underbar)."""
    under = []
    for i, x in enumerate(nu):
        if x - i < 1:
            break
        under.append(x - i)
    conj = conjugate(nu)
    cols = []
    for k, x in enumerate(conj, start=1):
        if x - k < 1:
            break
        cols.append(x - k)
    return conjugate(tuple(cols)), tuple(under)


def star_skew(p: SkewShape, q: SkewShape) -> tuple[SkewShape, SkewShape]:
    """Extension to skew pairs: ``(mu/alpha, nu/beta)* = (mu, nu)* / (alpha, beta)*``."""
    (mu, alpha), (nu, beta) = p, q
    if not (contains(alpha, mu) and contains(beta, nu)):
        raise ShapeMismatch(f"malformed skew pair {p}, {q}")
    lam, rho = star_direct(mu, nu)
    lam0, rho0 = star_direct(alpha, beta)
    assert contains(lam0, lam) and contains(rho0, rho), (p, q)
    return SkewShape(lam, lam0), SkewShape(rho, rho0)


def _interleave(mu: Partition, nu: Partition) -> list[int]:
    n = max(len(mu), len(nu))
    seq = []
    for x, y in zip(pad(mu, n), pad(nu, n)):
        seq += [y, x]
    return seq


def _split(seq: list[int]) -> tuple[Partition, Partition]:
    return partition(seq[1::2]), partition(seq[0::2])


def is_fixed_point(mu: Partition, nu: Partition) -> bool:
    """Interleaving test ``nu_1 >= mu_1 >= nu_2 >= mu_2 >= ...``."""
    seq = _interleave(mu, nu)
    return all(x >= y for x, y in zip(seq, seq[1:]))


def extremal_fixed_points(mu: Partition, nu: Partition) -> tuple[tuple[Partition, Partition], tuple[Partition, Partition]]:
    """Largest fixed pair inside ``(mu, nu)`` and smallest fixed pair containing it.

    A fixed pair is a weakly decreasing interleaved sequence, so the largest
    one below the interleaving of ``(mu, nu)`` is its running minimum and the
    smallest one above is its running maximum taken from the right.
    """
    seq = _interleave(mu, nu)
    low, cur = [], float("inf")
    for x in seq:
        cur = min(cur, x)
        low.append(cur)
    high, cur = [], 0
    for x in reversed(seq):
        cur = max(cur, x)
        high.append(cur)
    return _split(low), _split(high[::-1])


def theta_min(tau: Partition, nu: Partition) -> Partition:
    """Smallest ``mu`` with ``rho(mu, nu) = tau``; raises NoPreimage if there is none."""
    n = max(len(tau), len(nu))
    b = [part(tau, j) - part(nu, j) + j - 1 for j in range(1, n + 1)]
    parts, prev = [], 0
    for j, bj in enumerate(b, start=1):
        if bj < prev:
            raise NoPreimage(f"no mu with rho(mu, {nu}) = {tau}")
        parts += [part(tau, j)] * (bj - prev)
        prev = bj
    theta = partition(parts)
    if star_direct(theta, nu)[1] != tau:
        raise NoPreimage(f"no mu with rho(mu, {nu}) = {tau}")
    return theta
