"""Backend selection: compiled kernels when built, numpy fallback otherwise.

Set ROMANOFF_PURE_PY=1 to force the fallback (the benchmark and the parity
tests use this to compare both implementations).
"""

import os

if os.environ.get("ROMANOFF_PURE_PY"):
    from romanoff import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from romanoff import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from romanoff import _kernels_py as _impl

        BACKEND = "python"

sieve_odd_segment = _impl.sieve_odd_segment
or_shifted = _impl.or_shifted
add_shifted = _impl.add_shifted
pair_count = _impl.pair_count
moment_stats = _impl.moment_stats
