"""Schur-positivity certification for pairs and skew pairs, and family sweeps."""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from schurstar import families, schur
from schurstar.partition import (
    MAX_WEIGHT,
    Partition,
    SkewShape,
    add,
    conjugate,
    contains,
    dominates,
    part,
    remove_column,
    union,
)
from schurstar.schur import (
    SchurExpansion,
    Witness,
    h_difference_positive,
    lr_coefficient,
    pair_count,
    schur_positive_difference,
    schur_product,
    skew_schur,
)
from schurstar.star import star_direct, star_skew

POSITIVE = "positive"
COUNTEREXAMPLE = "counterexample"


@dataclass
class VerificationReport:
    subject: tuple
    star_image: tuple
    difference: SchurExpansion
    witness: Witness | None
    checks: dict[str, bool]
    seconds: float = field(default=0.0, compare=False)

    @property
    def verdict(self) -> str:
        return POSITIVE if self.witness is None else COUNTEREXAMPLE

    @property
    def ok(self) -> bool:
        return self.witness is None and all(self.checks.values())


def verify_pair(mu: Partition, nu: Partition) -> VerificationReport:
    """Check ``s_lambda s_rho - s_mu s_nu`` for ``(lambda, rho) = (mu, nu)*``, plus side properties."""
    start = time.perf_counter()
    mu, nu = tuple(mu), tuple(nu)
    lam, rho = star_direct(mu, nu)
    result = schur_positive_difference(schur_product(lam, rho), schur_product(mu, nu))
    checks = {
        "weight": sum(lam) + sum(rho) == sum(mu) + sum(nu),
        "dominance": dominates(union(mu, nu), union(lam, rho)) and dominates(add(lam, rho), add(mu, nu)),
        "h_positive": h_difference_positive(mu, nu),
        "conjugate": star_direct(conjugate(nu), conjugate(mu)) == (conjugate(lam), conjugate(rho)),
        "f_count": pair_count(lam, rho, checked=False) >= pair_count(mu, nu, checked=False),
    }
    return VerificationReport((mu, nu), (lam, rho), result.difference, result.witness, checks,
                              time.perf_counter() - start)


def skew_product(p: SkewShape, q: SkewShape) -> SchurExpansion:
    return skew_schur(p) * skew_schur(q)


def verify_skew_pair(p: SkewShape, q: SkewShape) -> VerificationReport:
    """Check ``s_{lambda} s_{rho} - s_{mu/alpha} s_{nu/beta}`` for the skew star image."""
    start = time.perf_counter()
    p, q = SkewShape(*map(tuple, p)), SkewShape(*map(tuple, q))
    lam, rho = star_skew(p, q)
    result = schur_positive_difference(skew_product(lam, rho), skew_product(p, q))
    checks = {
        "weight": lam.weight + rho.weight == p.weight + q.weight,
        "conjugate": star_skew(q.conjugate(), p.conjugate()) == (lam.conjugate(), rho.conjugate()),
    }
    return VerificationReport((p, q), (lam, rho), result.difference, result.witness, checks,
                              time.perf_counter() - start)


def verify_subject(subject) -> VerificationReport:
    left, right = subject
    if isinstance(left, SkewShape):
        return verify_skew_pair(left, right)
    return verify_pair(left, right)


# ---------------------------------------------------------------------------
# Sweeps


@dataclass(frozen=True)
class SweepSpec:
    family: str
    weight_bound: int = 8
    p: int | None = None
    nu: Partition | None = None
    dedupe: bool = False
    sample: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.family not in families.FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {families.FAMILIES}")
        if self.weight_bound > MAX_WEIGHT:
            raise ValueError(f"weight bound {self.weight_bound} exceeds the maximum {MAX_WEIGHT}")

    @property
    def proven(self) -> bool:
        return self.family in families.PROVEN

    def subjects(self) -> list:
        out = families.generate(self.family, self.weight_bound, self.p, self.nu)
        if self.dedupe:
            out = families.dedupe(out)
        if self.sample is not None and self.sample < len(out):
            out = sorted(random.Random(self.seed).sample(out, self.sample), key=families.subject_key)
        return out


@dataclass
class SweepSummary:
    family: str
    verified: int = 0
    zero_difference: int = 0
    failures: list = field(default_factory=list)
    proven: bool = False

    def add(self, report: VerificationReport) -> None:
        self.verified += 1
        if not report.difference:
            self.zero_difference += 1
        if not report.ok:
            self.failures.append(report.subject)


def _init_worker(entries):
    schur.load_cache(entries)


def _work(subject):
    report = verify_subject(subject)
    return report, schur.new_cache_entries()


def iter_reports(subjects: Iterable, jobs: int = 1, chunksize: int = 16) -> Iterator[VerificationReport]:
    """Verify subjects in input order, optionally across ``jobs`` worker processes."""
    subjects = list(subjects)
    if jobs <= 1:
        for s in subjects:
            yield verify_subject(s)
        return
    with ProcessPoolExecutor(jobs, initializer=_init_worker, initargs=(dict(schur._LR_CACHE),)) as pool:
        for report, entries in pool.map(_work, subjects, chunksize=chunksize):
            # workers send back what they computed so the parent can persist it
            schur._LR_CACHE.update(entries)
            schur._LR_NEW.update(entries)
            yield report


def sweep(spec: SweepSpec, jobs: int = 1) -> tuple[list[VerificationReport], SweepSummary]:
    summary = SweepSummary(spec.family, proven=spec.proven)
    reports = []
    for report in iter_reports(spec.subjects(), jobs):
        summary.add(report)
        reports.append(report)
    return reports, summary


# ---------------------------------------------------------------------------
# Bounded height


@dataclass
class BoundedHeightReport:
    nu: Partition
    p: int
    bound: int
    base: SweepSummary
    spot: SweepSummary
    spot_extent: int

    @property
    def ok(self) -> bool:
        return not self.base.failures and not self.spot.failures


def bounded_height_check(nu: Partition, p: int, spot_check_extent: int = 0, jobs: int = 1) -> BoundedHeightReport:
    """Verify the finite base of height-``p`` pairs ``(alpha, nu)``, then spot-check beyond it.

    The spot check covers ``mu`` with at most ``p`` parts and first part in
    ``(bound, bound + spot_check_extent]``; it corroborates, it proves nothing.
    """
    nu = tuple(nu)
    if len(nu) > p:
        raise ValueError(f"{nu} has more than {p} parts")
    bound = families.height_bound(nu, p)
    base = SweepSummary("bounded_height:base")
    for r in iter_reports(families.bounded_height_pairs(nu, p), jobs):
        base.add(r)
    spot = SweepSummary("bounded_height:spot")
    mus = families.bounded_partitions(p, bound + 1, bound + spot_check_extent)
    for r in iter_reports(((mu, nu) for mu in mus), jobs):
        spot.add(r)
    return BoundedHeightReport(nu, p, bound, base, spot, spot_check_extent)


def full_columns(mu: Partition, theta: Partition) -> list[int]:
    """Heights ``k`` with ``theta_k >= mu_k > theta_{k+1}``, i.e. a column of height k shared by both."""
    if not contains(mu, theta):
        return []
    return [k for k in range(1, len(mu) + 1) if part(theta, k) >= part(mu, k) > part(theta, k + 1)]


def full_column_reduction(mu: Partition, nu: Partition, theta: Partition):
    """Remove the lowest full column: ``(k, (mu - 1^k, nu, theta - 1^k))``, or None."""
    ks = full_columns(mu, theta)
    if not ks:
        return None
    k = ks[0]
    return k, (remove_column(mu, k), tuple(nu), remove_column(theta, k))


def reduced_coefficients_agree(mu: Partition, nu: Partition, theta: Partition) -> bool:
    """LR coefficient unchanged by removing any full column of ``mu`` in ``theta``."""
    c = lr_coefficient(mu, nu, theta)
    return all(
        lr_coefficient(remove_column(mu, k), nu, remove_column(theta, k)) == c
        for k in full_columns(mu, theta)
    )
