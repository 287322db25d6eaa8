"""Benchmark: compiled kernels vs their pure-Python twins.

Builds the coset poset of the 2-subgroups of S(3)xS(3) (387 elements, 2709
chains) plus its boundary matrices, then times chain counting, chain
enumeration, and Smith reduction under both backends.

Run:  python3 benchmarks/bench_kernels.py
"""

from __future__ import annotations

import time

from cosetchi import coset_poset, parse_group_expression
from cosetchi.homology import boundary_entries
from cosetchi.kernels import BACKEND, _pure
from cosetchi.snf import invariant_factors_sparse

try:
    from cosetchi.kernels import _speedups
except ImportError:
    _speedups = None


def timed(fn, *args, repeat: int = 3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return result, best


def main() -> None:
    G, _ = parse_group_expression("S(3)xS(3)")
    poset = coset_poset(G, 2)
    indptr, indices = poset.successors_csr()
    complex_ = poset.order_complex()
    print(f"poset: {poset.size} elements, {len(indices)} strict relations, "
          f"{complex_.n_simplices} simplices")
    print(f"active backend: {BACKEND}\n")

    rows = []
    cap = 10_000_000

    pure_counts, t_pure = timed(_pure.chain_counts, indptr, indices, cap)
    if _speedups is not None:
        fast_counts, t_fast = timed(_speedups.chain_counts, indptr, indices, cap)
        assert fast_counts == pure_counts
        rows.append(("chain_counts", t_pure, t_fast))
    else:
        rows.append(("chain_counts", t_pure, None))

    pure_chains, t_pure = timed(_pure.enumerate_chains, indptr, indices, cap)
    if _speedups is not None:
        fast_chains, t_fast = timed(_speedups.enumerate_chains, indptr, indices, cap)
        assert fast_chains == pure_chains
        rows.append(("enumerate_chains", t_pure, t_fast))
    else:
        rows.append(("enumerate_chains", t_pure, None))

    for dim in (1, 2):
        entries = boundary_entries(complex_, dim)
        shape = (complex_.counts[dim - 1], complex_.counts[dim])
        pure_factors, t_pure = timed(
            invariant_factors_sparse, entries, *shape, repeat=1)
        if _speedups is not None:
            dense = [[0] * shape[1] for _ in range(shape[0])]
            for (i, j), v in entries.items():
                dense[i][j] = v

            def fast():
                diag, ok = _speedups.snf_diagonal_i64(dense)
                assert ok
                return diag

            diag, t_fast = timed(fast, repeat=1)
            from cosetchi.snf import _fix_divisibility
            assert _fix_divisibility(diag) == pure_factors
            rows.append((f"snf boundary_{dim} {shape[0]}x{shape[1]}",
                         t_pure, t_fast))
        else:
            rows.append((f"snf boundary_{dim} {shape[0]}x{shape[1]}",
                         t_pure, None))

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}")
    for name, t_pure, t_fast in rows:
        if t_fast is None:
            print(f"{name:<{width}}  {t_pure:>9.4f}s  {'-':>10}  {'-':>8}")
        else:
            print(f"{name:<{width}}  {t_pure:>9.4f}s  {t_fast:>9.4f}s  "
                  f"{t_pure / t_fast:>7.1f}x")


if __name__ == "__main__":
    main()
