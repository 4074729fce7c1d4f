"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python
module is the fallback.  Set ``GF2LIGHTS_BACKEND=pure`` or ``compiled``
to force one (the benchmark and backend-parity tests do).
"""

from __future__ import annotations

import os

_requested = os.environ.get("GF2LIGHTS_BACKEND")

if _requested == "pure":
    from . import pure as _impl
elif _requested == "compiled":
    from . import _core as _impl  # type: ignore[no-redef]
elif _requested:
    raise ImportError(f"unknown GF2LIGHTS_BACKEND {_requested!r}")
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import pure as _impl

BACKEND = _impl.BACKEND_NAME
rref = _impl.rref
matvec_into = _impl.matvec_into
exhaustive_count = _impl.exhaustive_count

__all__ = ["BACKEND", "rref", "matvec_into", "exhaustive_count"]
