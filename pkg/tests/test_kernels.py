import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ssg import _kernels
from ssg.semigroup import make_full_transformation, make_matrix_semigroup, make_zn_mul

pytestmark = pytest.mark.skipif(_kernels.numba is None, reason="numba not installed")


def _random_table(draw_n, seed):
    rng = np.random.default_rng(seed)
    return rng.integers(0, draw_n, size=(draw_n, draw_n))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7), st.integers(0, 10_000))
def test_nonassociative_backends_agree(n, seed):
    table = _random_table(n, seed)
    assert _kernels.find_nonassociative(table, use_numba=True) == \
        _kernels.find_nonassociative(table, use_numba=False)


def test_first_violation_is_lexicographic():
    table = np.array([[1, 0], [0, 0]])
    hit = _kernels.find_nonassociative(table, use_numba=False)
    i, j, k = hit
    assert table[table[i, j], k] != table[i, table[j, k]]
    for a in range(2):
        for b in range(2):
            for c in range(2):
                if (a, b, c) < hit:
                    assert table[table[a, b], c] == table[a, table[b, c]]


@pytest.mark.parametrize("S", [make_zn_mul(30), make_full_transformation(3), make_matrix_semigroup(2, 2)],
                         ids=lambda S: S.name)
def test_associative_tables_pass_both(S):
    assert _kernels.find_nonassociative(S.table, use_numba=True) is None
    assert _kernels.find_nonassociative(S.table, use_numba=False) is None


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 26), st.lists(st.integers(0, 26), min_size=1, max_size=4))
def test_closure_backends_agree(_, seed):
    S = make_full_transformation(3)
    mask = np.zeros(S.size, dtype=bool)
    mask[seed] = True
    a = _kernels.closure_mask(S.table, mask, use_numba=True)
    b = _kernels.closure_mask(S.table, mask, use_numba=False)
    assert np.array_equal(a, b)
    members = np.flatnonzero(a)
    assert a[S.table[np.ix_(members, members)]].all()


def test_double_coset_rows_agree():
    S = make_full_transformation(3)
    left, right = [5, 7], [5, 11, 21]
    a = _kernels.double_coset_rows(S.table, left, right, use_numba=True)
    b = _kernels.double_coset_rows(S.table, left, right, use_numba=False)
    assert np.array_equal(a, b)


def test_backend_flag(monkeypatch):
    monkeypatch.setenv("SSG_NUMBA", "0")
    assert not _kernels._numba_requested()
    monkeypatch.setenv("SSG_NUMBA", "1")
    assert _kernels._numba_requested()
    assert _kernels.backend() in ("numba", "numpy")


def test_closure_rejects_index_seed():
    table = np.zeros((4, 4), dtype=np.int64)
    with pytest.raises(ValueError, match="boolean mask"):
        _kernels.closure_mask(table, [1, 2], use_numba=True)
