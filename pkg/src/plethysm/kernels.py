"""Select the compiled kernels when available, else the pure-Python ones.

Set ``PLETHYSM_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("PLETHYSM_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:  # pragma: no cover - depends on the build
        _compiled = None
    if _compiled is not None:
        _impl = _compiled
        BACKEND = "cython"

rank_mod_p = _impl.rank_mod_p
matmul_mod_p = _impl.matmul_mod_p
wedge_expand_mod_p = _impl.wedge_expand_mod_p

__all__ = ["BACKEND", "rank_mod_p", "matmul_mod_p", "wedge_expand_mod_p"]
