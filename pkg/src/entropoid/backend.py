"""Pick the compiled kernel when it imports, else the pure-Python one.

Set ``ENTROPOID_BACKEND=python`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernel

_KERNELS = {"python": _pykernel}

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None
else:
    _KERNELS["native"] = _ckernel


def available() -> list[str]:
    return sorted(_KERNELS)


def default_name() -> str:
    wanted = os.environ.get("ENTROPOID_BACKEND", "").strip().lower()
    if wanted:
        if wanted not in _KERNELS:
            raise RuntimeError(f"backend {wanted!r} unavailable; have {available()}")
        return wanted
    return "native" if "native" in _KERNELS else "python"


def kernel(name: str | None = None):
    """Kernel module by name; None means the import-time default."""
    return _KERNELS[name or default_name()]
