"""The compiled and pure kernels must be byte-for-byte interchangeable."""

import pytest

from hausnum._kernels import _pykernels

fastcore = pytest.importorskip(
    "hausnum._kernels._fastcore",
    reason="compiled kernels were not built in this environment")


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_enumeration_streams_identical(n):
    assert _pykernels.preorder_rows(n) == fastcore.preorder_rows(n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_subtree_restriction_identical(n):
    for first in _pykernels.first_row_candidates(n):
        assert (_pykernels.preorder_rows(n, first)
                == fastcore.preorder_rows(n, first))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_classify_identical(n):
    pure = _pykernels.classify(n)
    fast = fastcore.classify(n)
    assert pure[0] == fast[0]   # Hausdorff histogram
    assert pure[1] == fast[1]   # T0 count
    assert pure[2] == fast[2]   # canonical form -> (H, representative)


@pytest.mark.parametrize("t0_only", [False, True])
def test_classify_filter_identical(t0_only):
    pure = _pykernels.classify(4, t0_only=t0_only)
    fast = fastcore.classify(4, t0_only=t0_only)
    assert pure == fast


def test_canonical_forms_identical(rng):
    from conftest import random_preorder

    for n in range(1, 7):
        for _ in range(40):
            rows = random_preorder(n, rng).rows
            assert (_pykernels.canonical_rows(n, rows)
                    == fastcore.canonical_rows(n, rows))


def test_first_row_candidates_identical():
    for n in range(1, 8):
        assert (_pykernels.first_row_candidates(n)
                == fastcore.first_row_candidates(n))


def test_both_reject_oversized_inputs():
    for kernels in (_pykernels, fastcore):
        with pytest.raises(ValueError):
            kernels.preorder_rows(8)
        with pytest.raises(ValueError):
            kernels.canonical_rows(9, [1] * 9)
