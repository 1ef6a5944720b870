import os
import subprocess
import sys

import pytest
from hypothesis import given

import _oracle as oracle
from conftest import partitions as P
from schurstar import kernels
from schurstar.partition import contains, partitions

BACKENDS = kernels.available_backends()


@pytest.fixture(params=BACKENDS, ids=lambda m: m.BACKEND)
def backend(request):
    return request.param


def test_python_backend_always_available():
    assert BACKENDS[0].BACKEND == "python"
    assert kernels.BACKEND in {m.BACKEND for m in BACKENDS}


def test_lr_count_against_brute_force(backend):
    for n in range(8):
        for theta in partitions(n):
            for k in range(n + 1):
                for inner in partitions(k):
                    for content in partitions(n - k):
                        got = backend.lr_count(theta, inner, content)
                        assert got == oracle.brute_lr(theta, inner, content), (theta, inner, content)


def test_lr_count_infeasible_is_zero(backend):
    assert backend.lr_count((2,), (3,), ()) == 0
    assert backend.lr_count((2, 1), (1,), (1,)) == 0
    assert backend.lr_count((1, 1), (), (2,)) == 0
    assert backend.lr_count((), (), ()) == 1


def test_lr_count_4421_example(backend):
    assert backend.lr_count((4, 4, 2, 1), (2, 1), (4, 3, 1)) == 2


@given(P(10), P(10))
def test_star_kernel_matches_definition(mu, nu):
    n = max(len(mu), len(nu))
    for backend in BACKENDS:
        lam, rho = backend.star_direct(mu, nu, n + 1)
        strip = lambda p: tuple(x for x in p if x)
        assert (strip(lam), strip(rho)) == oracle.star_by_sets(mu, nu, n + 1)


def test_backends_agree_on_larger_shapes():
    cases = [((6, 5, 3, 2), (3, 2, 1), (5, 3, 2), ), ((7, 5, 4, 3, 1), (4, 3, 1), (5, 3, 2))]
    for theta, inner, content in cases:
        values = {m.lr_count(theta, inner, content) for m in BACKENDS}
        assert len(values) == 1


def test_lr_fillings_generator_matches_count():
    for n in range(8):
        for theta in partitions(n):
            for k in range(n + 1):
                for inner in partitions(k):
                    if not contains(inner, theta):
                        continue
                    for content in partitions(n - k):
                        fills = list(kernels.lr_fillings(theta, inner, content))
                        assert len(fills) == kernels.lr_count(theta, inner, content)


def test_pure_backend_forced_by_environment():
    env = dict(os.environ, SCHURSTAR_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from schurstar import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
