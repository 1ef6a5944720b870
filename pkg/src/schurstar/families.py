"""Generators for the pair families swept by the verifier.

Every generator returns a sorted list, so sweeps are deterministic.
Straight subjects are ``(mu, nu)`` pairs of partitions; skew subjects are
pairs of ``SkewShape``.
"""

from __future__ import annotations

from itertools import product
from typing import Callable

from schurstar.partition import (
    Partition,
    SkewShape,
    conjugate,
    is_fat_hook,
    is_hook,
    is_horizontal_strip,
    is_near_rectangle,
    is_rectangle,
    is_two_column,
    is_two_row,
    is_weak_ribbon,
    partitions_upto,
    subpartitions,
)

PROVEN = {"hooks", "two_rows", "two_columns", "skew_hooks", "weak_ribbons"}
STRAIGHT = {"all_pairs", "hooks", "two_rows", "two_columns", "stembridge_a", "stembridge_b",
            "stembridge_c", "stembridge_d", "bounded_height"}
SKEW = {"strips", "skew_hooks", "weak_ribbons"}
FAMILIES = sorted(STRAIGHT | SKEW)


def subject_key(subject):
    """Sort key: total (outer) weight first, then the shapes themselves."""
    left, right = subject
    if isinstance(left, SkewShape):
        return (sum(left.outer) + sum(right.outer), left, right)
    return (sum(left) + sum(right), left, right)


def _pairs(max_weight: int, keep: Callable[[Partition], bool] = lambda p: True, both=None):
    shapes = [p for p in partitions_upto(max_weight) if keep(p)]
    out = []
    for mu in shapes:
        for nu in shapes:
            if sum(mu) + sum(nu) <= max_weight and (both is None or both(mu, nu)):
                out.append((mu, nu))
    return sorted(out, key=subject_key)


def all_pairs(max_weight: int):
    return _pairs(max_weight)


def hook_pairs(max_weight: int):
    """Pairs of hooks ``(a, 1^b)``; the empty partition is included as a degenerate hook."""
    return _pairs(max_weight, lambda p: not p or is_hook(p))


def two_row_pairs(max_weight: int):
    return _pairs(max_weight, is_two_row)


def two_column_pairs(max_weight: int):
    return _pairs(max_weight, is_two_column)


def _one_line(p):
    return is_rectangle(p) and (len(p) <= 1 or p[0] == 1)


def _two_line(p):
    return is_rectangle(p) and (len(p) == 2 or (p and p[0] == 2))


def _either(test):
    return lambda mu, nu: test(mu, nu) or test(nu, mu)


STEMBRIDGE = {
    "a": _either(lambda mu, nu: _one_line(mu)),
    "b": _either(lambda mu, nu: _two_line(mu) and is_fat_hook(nu)),
    "c": _either(lambda mu, nu: is_rectangle(mu) and is_near_rectangle(nu)),
    "d": lambda mu, nu: is_rectangle(mu) and is_rectangle(nu),
}


def stembridge_pairs(case: str, max_weight: int):
    """Straight pairs in one of Stembridge's multiplicity-free classes (a)-(d)."""
    return _pairs(max_weight, both=STEMBRIDGE[case])


def _skew_pairs(max_weight: int, keep_outer, keep_inner, keep_skew):
    out = []
    outers = [p for p in partitions_upto(max_weight) if keep_outer(p)]
    for mu in outers:
        for nu in outers:
            if sum(mu) + sum(nu) > max_weight:
                continue
            lefts = [SkewShape(mu, a) for a in subpartitions(mu) if keep_inner(a) and keep_skew(SkewShape(mu, a))]
            rights = [SkewShape(nu, b) for b in subpartitions(nu) if keep_inner(b) and keep_skew(SkewShape(nu, b))]
            out.extend(product(lefts, rights))
    return sorted(out, key=subject_key)


def strip_pairs(max_weight: int):
    """Pairs of horizontal strips ``(mu/alpha, nu/beta)`` with ``|mu| + |nu|`` bounded."""
    yes = lambda _: True
    return _skew_pairs(max_weight, yes, yes, is_horizontal_strip)


def skew_hook_pairs(max_weight: int):
    """Skew pairs whose four partitions are all hooks (or empty)."""
    hook = lambda p: not p or is_hook(p)
    return _skew_pairs(max_weight, hook, hook, lambda s: True)


def weak_ribbon_pairs(max_weight: int):
    """Skew pairs ``(0, nu/beta)`` with ``nu/beta`` a weak ribbon and ``|nu|`` bounded."""
    empty = SkewShape((), ())
    out = []
    for nu in partitions_upto(max_weight):
        for beta in subpartitions(nu):
            s = SkewShape(nu, beta)
            if is_weak_ribbon(s):
                out.append((empty, s))
    return sorted(out, key=subject_key)


def height_bound(nu: Partition, p: int) -> int:
    """Largest first part that needs checking for height-``p`` pairs with ``nu`` fixed."""
    return p * ((nu[0] if nu else 0) + p)


def bounded_partitions(p: int, first_min: int, first_max: int):
    """Partitions with at most ``p`` parts and ``first_min <= first part <= first_max``."""
    out = []
    for first in range(first_min, first_max + 1):
        for rest in _at_most(p - 1, first):
            out.append(((first,) if first else ()) + rest)
    return out


def _at_most(p: int, bound: int):
    if p == 0 or bound == 0:
        return [()]
    out = [()]
    for x in range(1, bound + 1):
        out += [(x,) + rest for rest in _at_most(p - 1, x)]
    return out


def bounded_height_pairs(nu: Partition, p: int):
    if len(nu) > p:
        raise ValueError(f"{nu} has more than {p} parts")
    return sorted(((a, tuple(nu)) for a in bounded_partitions(p, 0, height_bound(nu, p))), key=subject_key)


def generate(family: str, max_weight: int, p: int | None = None, nu: Partition | None = None):
    if family == "all_pairs":
        return all_pairs(max_weight)
    if family == "hooks":
        return hook_pairs(max_weight)
    if family == "two_rows":
        return two_row_pairs(max_weight)
    if family == "two_columns":
        return two_column_pairs(max_weight)
    if family.startswith("stembridge_"):
        return stembridge_pairs(family[-1], max_weight)
    if family == "strips":
        return strip_pairs(max_weight)
    if family == "skew_hooks":
        return skew_hook_pairs(max_weight)
    if family == "weak_ribbons":
        return weak_ribbon_pairs(max_weight)
    if family == "bounded_height":
        if p is None or nu is None:
            raise ValueError("bounded_height needs p and nu")
        return bounded_height_pairs(nu, p)
    raise ValueError(f"unknown family {family!r}")


def conjugate_subject(subject):
    """The subject ``(nu', mu')`` obtained by swapping and conjugating."""
    left, right = subject
    if isinstance(left, SkewShape):
        return right.conjugate(), left.conjugate()
    return conjugate(right), conjugate(left)


def dedupe(subjects):
    """Keep one representative of each ``{(mu, nu), (nu', mu')}`` orbit."""
    out = []
    for s in subjects:
        if subject_key(s) <= subject_key(conjugate_subject(s)):
            out.append(s)
    return out
