import pytest

from schurstar import families, verify
from schurstar.partition import (
    MAX_WEIGHT,
    SkewShape,
    conjugate,
    is_hook,
    is_horizontal_strip,
    is_two_row,
    is_weak_ribbon,
    partitions,
    partitions_upto,
    skew,
)
from schurstar.schur import SchurExpansion, h_to_schur, lr_coefficient, schur_product
from schurstar.star import star_direct
from schurstar.verify import (
    COUNTEREXAMPLE,
    POSITIVE,
    SweepSpec,
    bounded_height_check,
    full_column_reduction,
    full_columns,
    iter_reports,
    reduced_coefficients_agree,
    sweep,
    verify_pair,
    verify_skew_pair,
)

s = SchurExpansion.schur


def test_verify_one_row_pair():
    r = verify_pair((3,), (1,))
    assert r.verdict == POSITIVE and r.ok
    assert r.star_image == ((2,), (2,))
    assert r.difference == s((2, 2))
    assert all(r.checks.values())


# [REF] s_{a-1} s_{b+1} - s_a s_b = s_{a-1,b+1}, the 2x2 Jacobi-Trudi determinant
@pytest.mark.parametrize("a,b", [(a, b) for a in range(2, 8) for b in range(1, a)])
def test_jacobi_trudi(a, b):
    diff = verify_pair((a,), (b,)).difference
    assert diff == h_to_schur((a - 1, b + 1)) - h_to_schur((a, b))
    if a - 1 >= b + 1:
        assert diff == s((a - 1, b + 1))
    else:
        # (a-1, a) is not a partition and the determinant vanishes
        assert not diff


def test_fixed_points_have_zero_difference():
    r = verify_pair((2,), (3, 1))
    assert r.ok and not r.difference and r.difference.degree == 6


def test_zero_difference_only_for_the_same_unordered_pair():
    for mu in partitions_upto(7):
        for nu in partitions_upto(7 - sum(mu)):
            r = verify_pair(mu, nu)
            assert (not r.difference) == (sorted(r.star_image) == sorted((mu, nu)))


def test_verify_skew_pair():
    r = verify_skew_pair(skew((2, 1), (1,)), skew((2,)))
    assert r.ok
    lam, rho = r.star_image
    assert isinstance(lam, SkewShape)
    assert r.difference == (
        verify.skew_product(lam, rho) - verify.skew_product(skew((2, 1), (1,)), skew((2,)))
    )


def test_counterexample_is_reported(monkeypatch):
    monkeypatch.setattr(verify, "star_direct", lambda mu, nu: ((2,), ()))
    r = verify.verify_pair((1,), (1,))
    assert r.verdict == COUNTEREXAMPLE and not r.ok
    assert r.witness.shape == (1, 1) and (r.witness.left, r.witness.right) == (0, 1)


def test_sweep_spec_validation():
    with pytest.raises(ValueError):
        SweepSpec("nope")
    with pytest.raises(ValueError):
        SweepSpec("all_pairs", MAX_WEIGHT + 1)
    assert SweepSpec("hooks").proven and not SweepSpec("all_pairs").proven
    with pytest.raises(ValueError):
        SweepSpec("bounded_height", 4).subjects()


def test_sweep_summary():
    reports, summary = sweep(SweepSpec("all_pairs", 6))
    assert summary.verified == len(reports) == sum(
        len(partitions(a)) * len(partitions(n - a)) for n in range(7) for a in range(n + 1))
    assert not summary.failures
    assert summary.zero_difference == sum(1 for r in reports if not r.difference)


def test_parallel_reports_match_serial():
    subjects = families.all_pairs(6)
    serial = list(iter_reports(subjects, 1))
    parallel = list(iter_reports(subjects, 2, chunksize=7))
    assert [(r.subject, r.star_image, r.difference, r.checks) for r in serial] == [
        (r.subject, r.star_image, r.difference, r.checks) for r in parallel]


def test_sample_is_seeded():
    a = SweepSpec("all_pairs", 8, sample=20, seed=3).subjects()
    b = SweepSpec("all_pairs", 8, sample=20, seed=3).subjects()
    c = SweepSpec("all_pairs", 8, sample=20, seed=4).subjects()
    assert a == b and len(a) == 20 and a != c
    assert a == sorted(a, key=families.subject_key)


def test_dedupe_keeps_one_per_orbit():
    full = families.all_pairs(7)
    kept = families.dedupe(full)
    assert set(kept) <= set(full)
    for subject in full:
        assert subject in kept or families.conjugate_subject(subject) in kept
    skews = families.skew_hook_pairs(5)
    kept = families.dedupe(skews)
    for subject in skews:
        assert subject in kept or families.conjugate_subject(subject) in kept


def test_family_generators_are_canonical():
    for mu, nu in families.hook_pairs(8):
        assert (not mu or is_hook(mu)) and (not nu or is_hook(nu))
    assert ((3, 1), (2,)) in families.hook_pairs(8)
    assert all(is_two_row(mu) or not mu for mu, _ in families.two_row_pairs(8))
    assert all(len(conjugate(mu)) <= 2 for mu, _ in families.two_column_pairs(8))
    for p, q in families.strip_pairs(6):
        assert is_horizontal_strip(p) and is_horizontal_strip(q)
    for p, q in families.weak_ribbon_pairs(6):
        assert p == SkewShape((), ()) and is_weak_ribbon(q)
    for p, q in families.skew_hook_pairs(6):
        assert all(not x or is_hook(x) for x in (*p, *q))
    for fam in ("hooks", "strips"):
        out = families.generate(fam, 6)
        assert out == sorted(out, key=families.subject_key)
    with pytest.raises(ValueError):
        families.generate("nope", 3)


def test_stembridge_classes_are_exactly_multiplicity_free():
    for mu in partitions_upto(10):
        for nu in partitions_upto(10 - sum(mu)):
            in_class = any(families.STEMBRIDGE[c](mu, nu) for c in "abcd")
            free = all(c <= 1 for c in schur_product(mu, nu).values())
            assert in_class == free, (mu, nu)
    for case in "abcd":
        assert families.stembridge_pairs(case, 8)


def test_bounded_partitions():
    assert families.height_bound((2, 1), 2) == 8
    out = families.bounded_partitions(2, 0, 3)
    assert out == [(), (1,), (1, 1), (2,), (2, 1), (2, 2), (3,), (3, 1), (3, 2), (3, 3)]
    assert families.bounded_height_pairs((1,), 2)[0] == ((), (1,))
    with pytest.raises(ValueError):
        families.bounded_height_pairs((1, 1, 1), 2)


def test_bounded_height_check():
    rep = bounded_height_check((1,), 2, spot_check_extent=2)
    assert rep.ok and rep.bound == 6
    assert rep.base.verified == len(families.bounded_partitions(2, 0, 6))
    assert rep.spot.verified == len(families.bounded_partitions(2, 7, 8))
    with pytest.raises(ValueError):
        bounded_height_check((1, 1, 1), 2)


def test_full_columns():
    # both columns of (3,1) are full in (4,1); the lowest is removed
    assert full_columns((3, 1), (4, 1)) == [1, 2]
    k, reduced = full_column_reduction((3, 1), (1,), (4, 1))
    assert k == 1 and reduced == ((2, 1), (1,), (3, 1))
    assert full_column_reduction((2,), (1,), (2, 1)) == (1, ((1,), (1,), (1, 1)))
    assert full_columns((2, 2), (3, 1)) == []
    assert full_column_reduction((2, 2), (1,), (3, 1)) is None


def test_full_column_invariance_small():
    for n in range(9):
        for theta in partitions(n):
            for k in range(n + 1):
                for mu in partitions(k):
                    for nu in partitions(n - k):
                        if full_columns(mu, theta):
                            assert reduced_coefficients_agree(mu, nu, theta)
    assert lr_coefficient((3, 1), (1,), (4, 1)) == lr_coefficient((2, 1), (1,), (3, 1))


def test_star_families_preserved_small():
    for mu, nu in families.hook_pairs(9):
        lam, rho = star_direct(mu, nu)
        assert (not lam or is_hook(lam)) and (not rho or is_hook(rho))
