"""Kernel backend selection: compiled extension if available, numpy fallback.

Set ``QDOUBLE_PURE_PYTHON=1`` to force the fallback (used by the benchmark).
"""

from __future__ import annotations

import os

if os.environ.get("QDOUBLE_PURE_PYTHON"):
    from . import _kernels_py as kernels
    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as kernels
        BACKEND = "python"

apply_edge_perms = kernels.apply_edge_perms
plaquette_project = kernels.plaquette_project
ribbon_apply = kernels.ribbon_apply
