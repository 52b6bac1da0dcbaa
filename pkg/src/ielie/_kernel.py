"""Select the compiled tree kernels when available.

Set ``IELIE_PURE_PYTHON=1`` to force the pure-Python implementation.
"""

import os

from . import _pykernel

BACKEND = "python"
_impl = _pykernel

if os.environ.get("IELIE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernel as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

canonicalize = _impl.canonicalize
graft = _impl.graft
graft_all = _impl.graft_all
subtree_spans = _impl.subtree_spans
cut_all = _impl.cut_all

__all__ = ["BACKEND", "canonicalize", "graft", "graft_all", "subtree_spans", "cut_all"]
