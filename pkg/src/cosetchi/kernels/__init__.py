"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python twins
are used otherwise.  Set COSETCHI_PURE=1 to force the pure backend (used by
the benchmark and by tests that compare the two).
"""

from __future__ import annotations

import os

from . import _pure

if os.environ.get("COSETCHI_PURE"):
    _impl = _pure
    BACKEND = "pure"
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
        BACKEND = "compiled"
    except ImportError:
        _impl = _pure
        BACKEND = "pure"

chain_counts = _impl.chain_counts
enumerate_chains = _impl.enumerate_chains
snf_diagonal_i64 = _impl.snf_diagonal_i64
HAS_FAST_SNF = _impl.HAS_FAST_SNF

__all__ = ["BACKEND", "HAS_FAST_SNF", "chain_counts", "enumerate_chains",
           "snf_diagonal_i64"]
