"""Tableaux, chains in the double Young lattice, and the star map on them.

Diagrams use the French convention: row 1 is at the bottom, rows are stored
bottom first, and each row lists the entries of its cells from left to right.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from schurstar.partition import (
    Partition,
    SkewShape,
    conjugate,
    contains,
    is_horizontal_strip,
    part,
    partition,
)
from schurstar.star import is_fixed_point, star_direct

Word = tuple[int, ...]


class InvalidChain(ValueError):
    pass


class BoundExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Tableau:
    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        lengths = [o - i for i, o in self.shape.rows()]
        if [len(r) for r in self.rows] != lengths:
            raise ValueError(f"rows {self.rows} do not fit the shape {self.shape}")

    def entry(self, i: int, j: int) -> int | None:
        """Entry in row ``i``, column ``j`` (1-indexed), None outside the skew shape."""
        if not 1 <= i <= len(self.rows):
            return None
        lo = part(self.shape.inner, i)
        if lo < j <= part(self.shape.outer, i):
            return self.rows[i - 1][j - lo - 1]
        return None

    def cells(self) -> Iterator[tuple[int, int, int]]:
        for i, row in enumerate(self.rows, start=1):
            lo = part(self.shape.inner, i)
            for j, x in enumerate(row, start=lo + 1):
                yield i, j, x

    def is_semistandard(self) -> bool:
        for i, j, x in self.cells():
            right = self.entry(i, j + 1)
            above = self.entry(i + 1, j)
            if x < 1 or (right is not None and right < x) or (above is not None and above <= x):
                return False
        return True

    def is_standard(self) -> bool:
        values = sorted(x for _, _, x in self.cells())
        if values != list(range(1, len(values) + 1)):
            return False
        return self.is_semistandard() and all(len(set(r)) == len(r) for r in self.rows)

    def content(self) -> tuple[int, ...]:
        top = max((x for _, _, x in self.cells()), default=0)
        counts = [0] * top
        for _, _, x in self.cells():
            counts[x - 1] += 1
        return tuple(counts)

    def reading_word(self) -> Word:
        """Rows from the top down, each read left to right."""
        return tuple(x for row in reversed(self.rows) for x in row)

    def reverse_reading_word(self) -> Word:
        return self.reading_word()[::-1]

    def chain(self) -> list[Partition]:
        """Shapes ``inner = c_0 <= c_1 <= ...`` where ``c_k`` holds the cells with entries at most ``k``."""
        top = max((x for _, _, x in self.cells()), default=0)
        out = []
        for k in range(top + 1):
            out.append(partition(
                part(self.shape.inner, i) + sum(1 for x in row if x <= k)
                for i, row in enumerate(self.rows, start=1)
            ))
        return out


def tableau_from_chain(chain: Sequence[Partition]) -> Tableau:
    """Inverse of ``Tableau.chain``: cells added at step ``k`` get entry ``k``."""
    inner, outer = chain[0], chain[-1]
    rows = []
    for i in range(1, len(outer) + 1):
        row = []
        for k in range(1, len(chain)):
            row += [k] * (part(chain[k], i) - part(chain[k - 1], i))
        rows.append(tuple(row))
    return Tableau(SkewShape(tuple(outer), tuple(inner)), tuple(rows))


def natural_filling(mu: Partition) -> Tableau:
    return Tableau(SkewShape(tuple(mu)), tuple((i,) * x for i, x in enumerate(mu, start=1)))


def diagonal_reading(t: Tableau) -> Word:
    """Entries along the diagonals ``row + column = const``, each read from the top down."""
    if t.shape.inner:
        raise ValueError("diagonal reading is defined for straight shapes")
    height = len(t.rows)
    width = part(t.shape.outer, 1)
    word = []
    for d in range(2, height + width + 1):
        for j in range(1, d):
            x = t.entry(d - j, j)
            if x is not None:
                word.append(x)
    return tuple(word)


def is_lattice(w) -> bool:
    """Every prefix has at least as many ``i`` as ``i + 1``, for all ``i``."""
    counts: dict[int, int] = {}
    for x in w:
        x = int(x)
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def word(text: str) -> Word:
    """Parse a word of single-digit letters, e.g. ``"11221312"``."""
    return tuple(int(ch) for ch in text)


# ---------------------------------------------------------------------------
# Chains in the double Young lattice

Pair = tuple[Partition, Partition]

STANDARD = "standard"
SEMISTANDARD = "semistandard"


def _cells(p: Pair) -> int:
    return sum(p[0]) + sum(p[1])


@dataclass(frozen=True)
class TableauPairChain:
    chain: tuple[Pair, ...]
    kind: str = STANDARD

    def __post_init__(self):
        steps = self.chain
        if not steps or steps[0] != ((), ()):
            raise InvalidChain("a chain must start at the empty pair")
        if self.kind not in (STANDARD, SEMISTANDARD):
            raise InvalidChain(f"unknown chain kind {self.kind!r}")
        for (a, b), (mu, nu) in zip(steps, steps[1:]):
            if not (contains(a, mu) and contains(b, nu)):
                raise InvalidChain(f"{(a, b)} is not inside {(mu, nu)}")
            if self.kind == STANDARD and _cells((mu, nu)) - _cells((a, b)) != 1:
                raise InvalidChain(f"{(a, b)} -> {(mu, nu)} is not a single cell")
            if self.kind == SEMISTANDARD and not (
                is_horizontal_strip(SkewShape(mu, a)) and is_horizontal_strip(SkewShape(nu, b))
            ):
                raise InvalidChain(f"{(a, b)} -> {(mu, nu)} is not a horizontal strip pair")

    @property
    def shape(self) -> Pair:
        return self.chain[-1]

    def to_tableaux(self) -> tuple[Tableau, Tableau]:
        """The pair ``(t, r)``; a step adding cells in either coordinate writes its index there."""
        left = tableau_from_chain([p[0] for p in self.chain])
        right = tableau_from_chain([p[1] for p in self.chain])
        return left, right

    def truncate(self, k: int) -> TableauPairChain:
        return TableauPairChain(self.chain[: k + 1], self.kind)


def chain_from_tableaux(t: Tableau, r: Tableau, kind: str = STANDARD) -> TableauPairChain:
    ct, cr = t.chain(), r.chain()
    steps = max(len(ct), len(cr))
    ct += [ct[-1]] * (steps - len(ct))
    cr += [cr[-1]] * (steps - len(cr))
    return TableauPairChain(tuple(zip(ct, cr)), kind)


def star_on_pair(c: TableauPairChain) -> TableauPairChain:
    """Apply the star map to every pair of the chain."""
    image = tuple(star_direct(mu, nu) for mu, nu in c.chain)
    return TableauPairChain(image, c.kind)


def is_fixed_standard_pair(t: Tableau, r: Tableau) -> bool:
    """Fixed shape, and the rows ``r_1, t_1, r_2, t_2, ...`` stack into a standard tableau."""
    mu, nu = t.shape.outer, r.shape.outer
    if not is_fixed_point(mu, nu):
        return False
    rows = []
    for i in range(max(len(mu), len(nu))):
        rows.append(r.rows[i] if i < len(r.rows) else ())
        rows.append(t.rows[i] if i < len(t.rows) else ())
    while rows and not rows[-1]:
        rows.pop()
    shape = tuple(len(x) for x in rows)
    return Tableau(SkewShape(shape), tuple(rows)).is_standard()


def nu_filling(nu: Partition) -> Tableau:
    """LR filling of ``nu / nu_under`` whose reverse reading word is the diagonal reading of ``nu_bar``.

    The natural filling of ``nu_bar`` is pushed up the columns of ``nu``,
    the vacated cells count as zeros, each row is sorted and the zeros are
    dropped.
    """
    nu = tuple(nu)
    bar, under = star_direct((), nu)
    height = conjugate(nu)
    bar_height = conjugate(bar)
    grid = [[0] * x for x in nu]
    for c, h in enumerate(bar_height):
        shift = height[c] - h
        for i in range(1, h + 1):
            grid[shift + i - 1][c] = i
    rows = []
    for r, row in enumerate(grid, start=1):
        row = sorted(row)
        kept = tuple(x for x in row if x)
        assert len(row) - len(kept) == part(under, r), (nu, r)
        rows.append(kept)
    t = Tableau(SkewShape(nu, under), tuple(rows))
    assert t.is_semistandard() and is_lattice(t.reverse_reading_word()), nu
    assert t.reverse_reading_word() == diagonal_reading(natural_filling(bar)), nu
    return t


def _corners(p: Partition) -> Iterator[Partition]:
    for i in range(len(p)):
        if i + 1 == len(p) or p[i] > p[i + 1]:
            yield partition(p[:i] + (p[i] - 1,) + p[i + 1:])


def standard_pairs(mu: Partition, nu: Partition) -> Iterator[TableauPairChain]:
    """Every maximal chain from ``((), ())`` to ``(mu, nu)``."""

    def rec(p: Pair) -> Iterator[list[Pair]]:
        if p == ((), ()):
            yield [p]
            return
        a, b = p
        for smaller in _corners(a):
            for ch in rec((smaller, b)):
                yield ch + [p]
        for smaller in _corners(b):
            for ch in rec((a, smaller)):
                yield ch + [p]

    for ch in rec((tuple(mu), tuple(nu))):
        yield TableauPairChain(tuple(ch), STANDARD)


@lru_cache(maxsize=None)
def _count_chains(a: Partition, b: Partition) -> int:
    if not a and not b:
        return 1
    return sum(_count_chains(s, b) for s in _corners(a)) + sum(_count_chains(a, s) for s in _corners(b))


def enumerate_standard_pairs(mu: Partition, nu: Partition, bound: int = 40) -> int:
    """Number of standard pairs of shape ``(mu, nu)``, counted over the double Young lattice."""
    if sum(mu) + sum(nu) > bound:
        raise BoundExceeded(f"|mu| + |nu| = {sum(mu) + sum(nu)} exceeds the bound {bound}")
    return _count_chains(tuple(mu), tuple(nu))
