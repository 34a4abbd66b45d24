"""Select the enumeration kernel at import time.

The compiled ``_enum`` extension is used when it imports; otherwise the
pure-Python ``_enum_py`` module. Setting ``INTCYC_PURE_PYTHON=1`` forces the
fallback.
"""

from __future__ import annotations

import os

from . import _enum_py

KERNELS = {"python": _enum_py}

try:
    from . import _enum  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on the build
    _enum = None
else:
    KERNELS["compiled"] = _enum

if _enum is not None and os.environ.get("INTCYC_PURE_PYTHON", "") in ("", "0"):
    NAME = "compiled"
else:
    NAME = "python"

kernel = KERNELS[NAME]
