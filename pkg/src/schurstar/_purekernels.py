"""Pure-Python hot kernels.

Same signatures and semantics as the compiled ``_kernels`` extension; used
when the extension is unavailable or ``SCHURSTAR_PURE=1`` is set.
"""

from __future__ import annotations

import sys

BACKEND = "python"


def star_direct(mu, nu, n):
    """Unnormalized ``(lambda, rho)`` of the star map at padding length ``n``."""
    m = [mu[k] - k - 1 if k < len(mu) else -k - 1 for k in range(n)]
    v = [nu[j] - j - 1 if j < len(nu) else -j - 1 for j in range(n)]
    lam = [0] * n
    rho = [0] * n
    for k in range(n):
        a = 0
        for j in range(n):
            if v[j] >= m[k]:
                a += 1
        lam[k] = m[k] + a
    for j in range(n):
        b = 0
        for k in range(n):
            if m[k] > v[j]:
                b += 1
        rho[j] = v[j] + 1 + b
    return lam, rho


def _layout(outer, inner):
    """Cells in reverse reading order with neighbour indices.

    Returns ``(row, right, below)`` lists: the 1-indexed row of each cell, the
    index of the cell to its right (-1 if none) and the index of the skew cell
    directly below (-1 if none).
    """
    index = {}
    rows = []
    for r, o in enumerate(outer):
        lo = inner[r] if r < len(inner) else 0
        for c in range(o - 1, lo - 1, -1):
            index[r, c] = len(rows)
            rows.append((r, c))
    right = [index.get((r, c + 1), -1) for r, c in rows]
    below = [index.get((r - 1, c), -1) for r, c in rows]
    return [r + 1 for r, _ in rows], right, below


def _feasible(outer, inner, content):
    if sum(outer) - sum(inner) != sum(content):
        return False
    if len(inner) > len(outer) or any(i > o for i, o in zip(inner, outer)):
        return False
    if len(content) > len(outer) or any(c > o for c, o in zip(content, outer)):
        return False
    return True


def lr_count(outer, inner, content):
    """Number of LR fillings of ``outer/inner`` with the given content."""
    if not _feasible(outer, inner, content):
        return 0
    row, right, below = _layout(outer, inner)
    ncells = len(row)
    if ncells == 0:
        return 1
    m = len(content)
    cap = [0] + list(content)
    count = [sys.maxsize] + [0] * m
    vals = [0] * ncells

    def rec(t):
        if t == ncells:
            return 1
        hi = min(row[t], m)
        if right[t] >= 0 and vals[right[t]] < hi:
            hi = vals[right[t]]
        lo = vals[below[t]] + 1 if below[t] >= 0 else 1
        total = 0
        for v in range(lo, hi + 1):
            cv = count[v]
            if cv < cap[v] and count[v - 1] > cv:
                count[v] = cv + 1
                vals[t] = v
                total += rec(t + 1)
                count[v] = cv
        return total

    return rec(0)


def lr_fillings(outer, inner, content):
    """Yield LR fillings as row lists (bottom row first, left to right)."""
    if not _feasible(outer, inner, content):
        return
    row, right, below = _layout(outer, inner)
    ncells = len(row)
    m = len(content)
    cap = [0] + list(content)
    count = [sys.maxsize] + [0] * m
    vals = [0] * ncells

    def emit():
        out, t = [], 0
        for r, o in enumerate(outer):
            lo = inner[r] if r < len(inner) else 0
            out.append(vals[t:t + o - lo][::-1])
            t += o - lo
        return out

    def rec(t):
        if t == ncells:
            yield emit()
            return
        hi = min(row[t], m)
        if right[t] >= 0 and vals[right[t]] < hi:
            hi = vals[right[t]]
        lo = vals[below[t]] + 1 if below[t] >= 0 else 1
        for v in range(lo, hi + 1):
            cv = count[v]
            if cv < cap[v] and count[v - 1] > cv:
                count[v] = cv + 1
                vals[t] = v
                yield from rec(t + 1)
                count[v] = cv

    yield from rec(0)
