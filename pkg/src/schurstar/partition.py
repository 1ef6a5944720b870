"""Integer partitions and skew shapes.

Partitions are plain tuples of positive integers in weakly decreasing order,
with no trailing zeros.  Zero padding is something operations do on the fly,
never part of the stored value.  Skew shapes are ``SkewShape(outer, inner)``
named tuples.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Iterator, NamedTuple

Partition = tuple[int, ...]

MAX_WEIGHT = 64


class NotAPartition(ValueError):
    pass


class WeightMismatch(ValueError):
    pass


class ShapeMismatch(ValueError):
    pass


def partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` to a partition, dropping trailing zeros.

    Raises NotAPartition if the sequence is not weakly decreasing or has
    negative entries.
    """
    p = [int(x) for x in parts]
    while p and p[-1] == 0:
        p.pop()
    for i, x in enumerate(p):
        if x < 0 or (i and x > p[i - 1]):
            raise NotAPartition(f"not a partition: {tuple(p)}")
    return tuple(p)


def pad(p: Partition, n: int) -> list[int]:
    if n < len(p):
        raise ValueError(f"cannot pad {p} to length {n}")
    return list(p) + [0] * (n - len(p))


def weight(p: Iterable[int]) -> int:
    return sum(p)


def part(p: Partition, i: int) -> int:
    """The ``i``-th part (1-indexed), zero beyond the length."""
    return p[i - 1] if 0 < i <= len(p) else 0


class SkewShape(NamedTuple):
    outer: Partition
    inner: Partition = ()

    @property
    def weight(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def rows(self) -> Iterator[tuple[int, int]]:
        """Yield ``(inner_i, outer_i)`` column bounds for each row of the outer shape."""
        for i, o in enumerate(self.outer):
            yield part(self.inner, i + 1), o

    def conjugate(self) -> SkewShape:
        return SkewShape(conjugate(self.outer), conjugate(self.inner))


def skew(outer: Iterable[int], inner: Iterable[int] = ()) -> SkewShape:
    """Build a validated skew shape ``outer/inner``."""
    o, i = partition(outer), partition(inner)
    if not contains(i, o):
        raise ShapeMismatch(f"{i} is not contained in {o}")
    return SkewShape(o, i)


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= k) for k in range(1, p[0] + 1))


def union(mu: Partition, nu: Partition) -> Partition:
    """Multiset union of parts, i.e. the conjugate of the sum of conjugates."""
    return tuple(sorted(mu + nu, reverse=True))


def add(mu: Partition, nu: Partition) -> Partition:
    """Part-wise sum ``mu + nu``."""
    n = max(len(mu), len(nu))
    return tuple(a + b for a, b in zip(pad(mu, n), pad(nu, n)))


def dominates(nu: Partition, mu: Partition) -> bool:
    """True iff ``mu`` is dominated by ``nu`` (both of the same weight)."""
    if sum(mu) != sum(nu):
        raise WeightMismatch(f"{mu} and {nu} have different weights")
    n = max(len(mu), len(nu))
    return all(a <= b for a, b in zip(accumulate(pad(mu, n)), accumulate(pad(nu, n))))


def contains(alpha: Partition, mu: Partition) -> bool:
    """Cell-wise inclusion of diagrams, ``alpha`` inside ``mu``."""
    return len(alpha) <= len(mu) and all(a <= m for a, m in zip(alpha, mu))


def add_cell_row(alpha: Partition, i: int) -> Partition:
    """Add one cell at the end of row ``i`` (1-indexed)."""
    if i < 1 or i > len(alpha) + 1:
        raise NotAPartition(f"cannot add a cell in row {i} of {alpha}")
    p = pad(alpha, max(len(alpha), i))
    p[i - 1] += 1
    return partition(p)


def add_cell_col(alpha: Partition, k: int) -> Partition:
    """Add one cell at the top of column ``k`` (1-indexed)."""
    return conjugate(add_cell_row(conjugate(alpha), k))


def remove_column(p: Partition, k: int) -> Partition:
    """Remove one cell from each of the first ``k`` rows."""
    if k < 1 or k > len(p) or (k < len(p) and p[k - 1] == p[k]):
        raise NotAPartition(f"{p} has no column of height exactly {k}")
    return partition([x - 1 if i < k else x for i, x in enumerate(p)])


# Shape predicates.


def is_hook(p: Partition) -> bool:
    return len(p) > 0 and part(p, 2) <= 1


def is_two_row(p: Partition) -> bool:
    return len(p) <= 2


def is_two_column(p: Partition) -> bool:
    return part(p, 1) <= 2


def is_rectangle(p: Partition) -> bool:
    return len(set(p)) <= 1


def is_fat_hook(p: Partition) -> bool:
    return len(set(p)) == 2


def is_near_rectangle(p: Partition) -> bool:
    """A fat hook ``b^r c^s`` that becomes a rectangle after deleting one row or column."""
    if not is_fat_hook(p):
        return False
    b, c = p[0], p[-1]
    r, s = p.count(b), p.count(c)
    return r == 1 or s == 1 or c == 1 or b - c == 1


def is_horizontal_strip(s: SkewShape) -> bool:
    outer, inner = s
    return all(part(inner, k) >= part(outer, k + 1) for k in range(1, len(outer)))


def is_weak_ribbon(s: SkewShape) -> bool:
    outer, inner = s
    return all(part(outer, k + 1) <= part(inner, k) + 1 for k in range(1, len(outer)))


def _nonempty_rows(s: SkewShape) -> list[int]:
    return [i for i, (lo, hi) in enumerate(s.rows(), start=1) if hi > lo]


def is_connected(s: SkewShape) -> bool:
    rows = _nonempty_rows(s)
    if not rows:
        return False
    if rows != list(range(rows[0], rows[-1] + 1)):
        return False
    return all(part(s.outer, i + 1) > part(s.inner, i) for i in rows[:-1])


def is_ribbon(s: SkewShape) -> bool:
    return is_weak_ribbon(s) and is_connected(s)


# Enumeration.


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None, max_length: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    if max_length == 0:
        return ()
    sub_length = None if max_length is None else max_length - 1
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first, sub_length):
            out.append((first,) + rest)
    return tuple(out)


def partitions_upto(max_weight: int, **kw) -> Iterator[Partition]:
    for n in range(max_weight + 1):
        yield from partitions(n, **kw)


def subpartitions(mu: Partition) -> Iterator[Partition]:
    """All partitions contained in ``mu`` (including ``()`` and ``mu``)."""

    def rec(i: int, bound: int) -> Iterator[list[int]]:
        if i == len(mu):
            yield []
            return
        for x in range(min(bound, mu[i]), -1, -1):
            if x == 0:
                yield []
            else:
                for rest in rec(i + 1, x):
                    yield [x] + rest

    for p in rec(0, mu[0] if mu else 0):
        yield tuple(p)


# Text grammar: "8,6,6,5" for partitions, "" or "0" for the empty one,
# "outer/inner" for skew shapes.


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("()")
    if text in ("", "0"):
        return ()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise NotAPartition(f"cannot parse partition {text!r}") from None
    if any(x <= 0 for x in parts):
        raise NotAPartition(f"parts must be positive: {text!r}")
    return partition(parts)


def parse_skew(text: str) -> SkewShape:
    outer, sep, inner = text.partition("/")
    return skew(parse_partition(outer), parse_partition(inner) if sep else ())


def format_partition(p: Partition) -> str:
    return ",".join(map(str, p))


def format_skew(s: SkewShape) -> str:
    return f"{format_partition(s.outer)}/{format_partition(s.inner)}"


def show(p: Partition | SkewShape) -> str:
    """Human-readable form, ``(2,1)`` or ``(3,1)/(1)``."""
    if isinstance(p, SkewShape):
        return f"{show(p.outer)}/{show(p.inner)}"
    return f"({format_partition(p)})"
