"""Acceptance criteria, one test per criterion.

Each test records a single ``[PASS]`` or ``[FAIL]`` line before asserting;
the lines are printed together in the terminal summary.
"""

import sys
import time
from math import comb

import pytest

from schurstar import cli, families, schur
from schurstar.partition import is_hook, is_horizontal_strip, is_weak_ribbon, partitions, partitions_upto
from schurstar.schur import SchurExpansion, h_to_schur, hook_length_count, lr_coefficient, lr_fillings
from schurstar.star import star_direct, star_recursive, star_skew
from schurstar.tableaux import diagonal_reading, enumerate_standard_pairs, is_lattice, natural_filling, nu_filling, word
from schurstar.verify import SweepSpec, bounded_height_check, full_columns, reduced_coefficients_agree, sweep

RESULTS = []


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}" + (f" ({detail})" if detail else "")
    RESULTS.append(line)
    assert ok, line


def best_time(fn, repeat=50):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def pairs_upto(w):
    return [(mu, nu) for mu in partitions_upto(w) for nu in partitions_upto(w - sum(mu))]


def test_01_worked_example():
    nu = (8, 6, 6, 5, 5, 4, 4, 2, 1)
    ok = star_direct((), nu) == ((4, 4, 4, 3, 2, 2, 1, 1), (8, 5, 4, 2, 1))
    t = best_time(lambda: star_direct((), nu))
    record(1, "star((), 866554421) = (44432211, 85421)", ok and t < 1e-3, f"{t * 1e6:.1f} us")


def test_02_lr_count_4421():
    schur.clear_cache()
    start = time.perf_counter()
    c = lr_coefficient((4, 3, 1), (2, 1), (4, 4, 2, 1))
    elapsed = time.perf_counter() - start
    words = {t.reverse_reading_word() for t in lr_fillings((4, 4, 2, 1), (2, 1), (4, 3, 1))}
    ok = c == 2 and words == {word("11221312"), word("11221213")}
    record(2, "c_{431,21}^{4421} = 2 with words 11221312, 11221213", ok and elapsed < 1e-2,
           f"{elapsed * 1e3:.2f} ms")


def test_03_jacobi_trudi():
    bad = []
    for a in range(2, 8):
        for b in range(1, a):
            diff = schur.schur_positive_difference(schur.schur_product((a - 1,), (b + 1,)),
                                                   schur.schur_product((a,), (b,))).difference
            # s_{(a-1,b+1)} read through its Jacobi-Trudi determinant; it vanishes when b = a - 1
            det = h_to_schur((a - 1, b + 1)) - h_to_schur((a, b))
            target = SchurExpansion.schur((a - 1, b + 1)) if a - 1 >= b + 1 else SchurExpansion({}, a + b)
            if star_direct((a,), (b,)) != ((a - 1,), (b + 1,)) or not (diff == det == target):
                bad.append((a, b))
    record(3, "verify((a),(b)) difference = s_(a-1,b+1), 1 <= b < a <= 7", not bad, f"bad: {bad}" if bad else "21 pairs")


def test_04_exhaustive_sweep():
    start = time.perf_counter()
    reports, summary = sweep(SweepSpec("all_pairs", 12))
    elapsed = time.perf_counter() - start
    diffs = {r.subject: r.difference for r in reports}
    conj_ok = all(diffs[families.conjugate_subject(s)] == d.conjugate() for s, d in diffs.items())
    positive = all(r.verdict == "positive" for r in reports)
    ok = positive and not summary.failures and conj_ok and elapsed < 300
    record(4, "all pairs |mu|+|nu| <= 12 positive with side checks", ok,
           f"{summary.verified} pairs, {len(summary.failures)} failures, {elapsed:.1f} s")


def test_05_cross_validation():
    bad = 0
    for mu, nu in pairs_upto(12):
        d = star_direct(mu, nu)
        n = max(len(mu), len(nu))
        if star_recursive(mu, nu) != d or star_direct(mu, nu, n + 3) != d:
            bad += 1
    record(5, "star_recursive = star_direct, padding n and n+3, |mu|+|nu| <= 12", bad == 0, f"{bad} mismatches")


@pytest.mark.parametrize("family,weight", [
    ("hooks", 16), ("two_rows", 16), ("two_columns", 16), ("skew_hooks", 12), ("weak_ribbons", 12),
])
def test_06_proven_families(family, weight):
    start = time.perf_counter()
    _, summary = sweep(SweepSpec(family, weight))
    record(6, f"proven family {family} to weight {weight}", summary.verified > 0 and not summary.failures,
           f"{summary.verified} subjects, {len(summary.failures)} failures, {time.perf_counter() - start:.1f} s")


def _skew_ok(test, p, q):
    lam, rho = star_skew(p, q)
    return test(lam) and test(rho)


def test_07_family_preservation():
    hook = lambda p: not p or is_hook(p)
    two_row = lambda p: len(p) <= 2
    bad = []
    for mu, nu in families.hook_pairs(12):
        if not all(hook(x) for x in star_direct(mu, nu)):
            bad.append(("hooks", mu, nu))
    for mu, nu in families._pairs(12, two_row):
        if not all(two_row(x) for x in star_direct(mu, nu)):
            bad.append(("two_rows", mu, nu))
    for p, q in families.strip_pairs(12):
        if not _skew_ok(is_horizontal_strip, p, q):
            bad.append(("strips", p, q))
    yes = lambda _: True
    for p, q in families._skew_pairs(12, yes, yes, is_weak_ribbon):
        if not _skew_ok(is_weak_ribbon, p, q):
            bad.append(("weak ribbons", p, q))
    record(7, "star preserves hooks, two rows, horizontal strips, weak ribbons to weight 12", not bad,
           f"{len(bad)} violations")


def test_08_bounded_height():
    start = time.perf_counter()
    bad, base, spot = [], 0, 0
    for nu in partitions_upto(6, max_length=2):
        rep = bounded_height_check(nu, 2, spot_check_extent=6)
        base += rep.base.verified
        spot += rep.spot.verified
        if not rep.ok:
            bad.append(nu)
    elapsed = time.perf_counter() - start
    record(8, "bounded height p = 2, |nu| <= 6: finite base and spot checks to bound + 6",
           not bad and elapsed < 600, f"base {base}, spot {spot}, {elapsed:.1f} s")


def test_09_full_column_invariance():
    checked = bad = 0
    for n in range(11):
        for theta in partitions(n):
            for k in range(n + 1):
                for mu in partitions(k):
                    if not full_columns(mu, theta):
                        continue
                    for nu in partitions(n - k):
                        checked += 1
                        bad += not reduced_coefficients_agree(mu, nu, theta)
    record(9, "full-column removal preserves LR coefficients, |theta| <= 10", bad == 0 and checked > 0,
           f"{checked} triples")


def test_10_tableau_checks():
    lattice = all(is_lattice(diagonal_reading(natural_filling(mu))) for mu in partitions_upto(14))
    filling = True
    for nu in partitions_upto(12):
        bar, under = star_direct((), nu)
        filling &= nu_filling(nu) in lr_fillings(nu, under, bar)
    counts = all(
        enumerate_standard_pairs(mu, nu)
        == comb(sum(mu) + sum(nu), sum(mu)) * hook_length_count(mu) * hook_length_count(nu)
        for mu, nu in pairs_upto(8)
    )
    record(10, "Delta lattice to 14, nu_filling is an LR filling to 12, standard pair counts to 8",
           lattice and filling and counts, f"lattice={lattice} filling={filling} counts={counts}")


def test_11_determinism(tmp_path, monkeypatch, capsys):
    outputs = {}
    cache_path = tmp_path / "lr-cache"
    for name, jobs, use_cache in [("serial", "1", False), ("parallel", "8", False),
                                  ("cold", "1", True), ("warm", "8", True)]:
        schur.clear_cache()
        schur._product_terms.cache_clear()
        out = tmp_path / f"{name}.jsonl"
        argv = ["sweep", "--family", "all_pairs", "--max-weight", "9", "--jobs", jobs, "--out", str(out)]
        if use_cache:
            argv += ["--cache", str(cache_path)]
        code = cli.main(argv)
        capsys.readouterr()
        outputs[name] = (code, out.read_bytes())
    same = len(set(outputs.values())) == 1
    record(11, "sweep output byte-identical for 1 vs 8 workers and cold vs warm cache",
           same and outputs["serial"][0] == 0 and cache_path.exists(), f"{len(outputs['serial'][1])} bytes")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
