"""Time the numba kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

The numba column is blank when numba is not importable.  The first numba
call per kernel is excluded so compilation does not count.
"""
import argparse
import timeit

import numpy as np

from ssg import _kernels
from ssg.semigroup import make_full_transformation, make_matrix_semigroup, make_zn_mul


def mask(n, members):
    m = np.zeros(n, dtype=np.bool_)
    m[members] = True
    return m


def cases():
    T4 = make_full_transformation(4)
    M3 = make_matrix_semigroup(3, 2)
    Z = make_zn_mul(400)
    seed_t4 = mask(T4.size, [T4.index_of("[2,1,3,4]"), T4.index_of("[2,3,4,1]"), T4.index_of("[1,1,3,4]")])
    seed_m3 = mask(M3.size, [M3.size // 3, M3.size // 5, M3.size // 7])
    a, b = list(range(1, 6)), list(range(2, 40, 7))
    return [
        ("associativity S(4)", lambda nb: _kernels.find_nonassociative(T4.table, nb)),
        ("associativity M_3x3(Z_2)", lambda nb: _kernels.find_nonassociative(M3.table, nb)),
        ("closure S(4)", lambda nb: _kernels.closure_mask(T4.table, seed_t4, nb)),
        ("closure M_3x3(Z_2)", lambda nb: _kernels.closure_mask(M3.table, seed_m3, nb)),
        ("double cosets Z_400", lambda nb: _kernels.double_coset_rows(Z.table, a, b, nb)),
    ]


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    have_numba = _kernels.numba is not None
    print(f"{'kernel':28} {'numpy (ms)':>12} {'numba (ms)':>12} {'agree':>6}")
    for name, run in cases():
        ref = run(False)
        t_np = best(lambda: run(False), args.repeat) * 1e3
        if have_numba:
            got = run(True)
            agree = np.array_equal(np.asarray(ref, dtype=object), np.asarray(got, dtype=object))
            t_nb = f"{best(lambda: run(True), args.repeat) * 1e3:12.2f}"
        else:
            agree, t_nb = "-", f"{'':>12}"
        print(f"{name:28} {t_np:12.2f} {t_nb} {str(agree):>6}")


if __name__ == "__main__":
    main()
