"""Backend selection for the integer search kernels.

The compiled extension is preferred; set WORKBENCH_PURE_PY=1 to force the
pure-Python fallback (used by the benchmark and in CI sanity runs).
"""

import os

if os.environ.get("WORKBENCH_PURE_PY"):
    from diobench import _kernels_py as _impl
else:
    try:
        from diobench import _kernels_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from diobench import _kernels_py as _impl

BACKEND = _impl.BACKEND
four_squares_raw = _impl.four_squares_raw
mod_scan_soluble = _impl.mod_scan_soluble
