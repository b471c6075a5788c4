"""Selects the rational row-operation kernel at import time.

The compiled extension is preferred when it imported cleanly; otherwise
the pure-Python fallback takes over with identical semantics.  Setting
the environment variable MINPROJ_PURE=1 forces the fallback, which the
benchmark and the kernel-equivalence tests use.
"""

import os

from . import fallback

IMPLEMENTATION: str

if os.environ.get("MINPROJ_PURE", "") not in ("", "0"):
    scale_row = fallback.scale_row
    row_axpy = fallback.row_axpy
    IMPLEMENTATION = "pure (forced by MINPROJ_PURE)"
else:
    try:
        from ._speedups import row_axpy, scale_row
        IMPLEMENTATION = "compiled"
    except ImportError:
        scale_row = fallback.scale_row
        row_axpy = fallback.row_axpy
        IMPLEMENTATION = "pure"
