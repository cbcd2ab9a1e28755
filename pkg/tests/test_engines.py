import math

import pytest

from gradedposets import engines, oracle
from gradedposets.series import PowerSeries, named_series


def test_stirling():
    assert engines.stirling2(0, 0) == 1
    assert [engines.stirling2(5, k) for k in range(6)] == [0, 1, 15, 25, 10, 1]


def test_psi_values():
    assert engines.psi_w(2, 3) == 64
    assert engines.psi_s(1, 1) == 1 and engines.psi_s(2, 2) == 7
    assert engines.psi_22(0, 0) == 1 and engines.psi_22(1, 0) == 0
    assert engines.psi_22(2, 2) == 5


def test_all_graded():
    assert engines.all_graded_egf(7).egf_counts() == [1, 1, 3, 13, 111, 1381, 25623, 678133]


def test_all_graded_by_height():
    N = 6
    total = sum((engines.all_graded_egf(N, height=k) for k in range(N + 1)), PowerSeries.zero(N))
    assert total == engines.all_graded_egf(N)
    # height 1 posets are antichains
    assert engines.all_graded_egf(N, height=1) == named_series("exp_minus_one", N)


def test_height_two_is_no_isolated_bipartite():
    got = engines.all_graded_egf(5, height=2).egf_counts()
    want = [sum(math.comb(n, m) * engines.psi_s(m, n - m) for m in range(1, n)) for n in range(6)]
    assert got == want


def test_weakly_graded_counts_rank_functions():
    assert engines.weakly_graded_egf(6).egf_counts() == [1, 1, 5, 49, 737, 15361, 421505]
    assert engines.weakly_graded_egf(5).egf_counts() == oracle.ranked_weak_labeled_counts(5)


def test_graded_semiorder_forms():
    assert engines.graded_semiorder_ogf(12) == engines.graded_semiorder_assembled_ogf(12)
    assert engines.graded_semiorder_ogf(12).ogf_counts()[:9] == [1, 1, 2, 4, 9, 22, 56, 145, 378]
    # o_n - 1 is a Fibonacci number
    o = engines.graded_semiorder_ogf(12).ogf_counts()
    fib = [0, 1]
    while len(fib) < 40:
        fib.append(fib[-1] + fib[-2])
    assert all(v - 1 in fib for v in o[1:])


def test_faceoffs():
    assert engines.faceoff_ogf(6).ogf_counts() == [1, 0, 1, 2, 4, 8, 16]
    T = [sum(engines.faceoff_count(t, n - t) for t in range(n + 1)) for n in range(7)]
    assert T == [1, 0, 1, 2, 4, 8, 16]


def test_semiorder_heights():
    N = 9
    total = sum((engines.graded_semiorder_height_ogf(k, N) for k in range(N + 1)), PowerSeries.zero(N))
    assert total == engines.graded_semiorder_ogf(N)


def test_graded_semiorder_seeds():
    assert engines.graded_semiorder_seed_egf(6).egf_counts() == [1, 1, 2, 6, 48, 360, 3600]


def test_graded_interval():
    assert engines.graded_interval_egf(7).egf_counts() == [1, 1, 3, 13, 99, 1021, 13443, 220333]


@pytest.mark.parametrize("N", range(1, 8))
def test_graded_interval_dimension_stable(N):
    assert engines.graded_interval_egf(N, dim=N + 1) == engines.graded_interval_egf(N, dim=N + 3)


def test_graded_interval_by_height():
    N = 6
    total = sum((engines.graded_interval_egf(N, height=k) for k in range(N + 1)), PowerSeries.zero(N))
    assert total == engines.graded_interval_egf(N)
    assert engines.graded_interval_egf(N, height=1) == named_series("exp_minus_one", N)


def test_graded_31():
    f = engines.graded_31_egf(7).egf_counts()
    assert f[:7] == [1, 1, 3, 13, 111, 1381, 22383]


def test_literature():
    assert engines.literature_gfs("interval_seed", 6).egf_counts() == [
        math.factorial(n) * c for n, c in enumerate([1, 1, 1, 2, 5, 16, 61])
    ]
    assert engines.literature_gfs("bousquet_melou", 7).ogf_counts() == [1, 1, 2, 5, 15, 53, 217, 1014]
    with pytest.raises(ValueError):
        engines.literature_gfs("nope", 3)
