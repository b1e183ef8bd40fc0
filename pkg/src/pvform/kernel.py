"""Kernel selection: compiled extension when available, pure Python otherwise.

Set PVFORM_PURE=1 to force the pure-Python twin (used by the benchmark and
by tests that exercise both paths).
"""

from __future__ import annotations

import os

from . import _gausskernel_py as _py

if os.environ.get("PVFORM_PURE") == "1":
    _impl = _py
else:
    try:
        from . import _gausskernel as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _py

IMPLEMENTATION = _impl.IMPLEMENTATION
gauss_profile = _impl.gauss_profile
brown_residue_set = _impl.brown_residue_set
brown_from_counts = _impl.brown_from_counts
