"""Compiled and pure-Python kernels must agree bit for bit."""

import random
from itertools import permutations

import pytest

from checkersurf import _kernel_py

try:
    from checkersurf import _kernel
except ImportError:
    _kernel = None

needs_ext = pytest.mark.skipif(_kernel is None, reason="compiled kernel not built")


@needs_ext
def test_parity_exhaustive_n2():
    perms = [tuple(p) for p in permutations(range(2))]
    for b in perms:
        for r in perms:
            for y in perms:
                for alpha in range(3):
                    for beta in range(3):
                        for strip in (False, True):
                            assert _kernel.canonical_code(
                                2, b, r, y, alpha, beta, strip
                            ) == _kernel_py.canonical_code(2, b, r, y, alpha, beta, strip)


@needs_ext
def test_parity_exhaustive_n3_label_free():
    perms = [tuple(p) for p in permutations(range(3))]
    for b in perms:
        for r in perms:
            for y in perms:
                for strip in (False, True):
                    assert _kernel.canonical_code(
                        3, b, r, y, 0, 0, strip
                    ) == _kernel_py.canonical_code(3, b, r, y, 0, 0, strip)


@needs_ext
def test_parity_randomized():
    rng = random.Random(99)
    for _ in range(1500):
        n = rng.randint(0, 10)
        arrs = []
        for _ in range(3):
            a = list(range(n))
            rng.shuffle(a)
            arrs.append(tuple(a))
        alpha, beta = rng.randint(0, n), rng.randint(0, n)
        strip = rng.random() < 0.5
        assert _kernel.canonical_code(n, *arrs, alpha, beta, strip) == _kernel_py.canonical_code(
            n, *arrs, alpha, beta, strip
        )


def test_backend_selection_reports():
    from checkersurf.kernel import BACKEND

    assert BACKEND in ("c", "python")
