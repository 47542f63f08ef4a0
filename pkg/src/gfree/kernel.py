"""Kernel selection: compiled extension if available, pure Python otherwise.

Set ``GFREE_PURE=1`` to force the Python implementation.  Both expose the
same functions with identical semantics and node accounting, so results and
budget behavior do not depend on which one is loaded.
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("GFREE_PURE"):
    _impl = _kernel_py
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernel_py

IMPLEMENTATION: str = _impl.IMPLEMENTATION

FOUND = _kernel_py.FOUND
EXHAUSTED = _kernel_py.EXHAUSTED
BUDGET = _kernel_py.BUDGET

search_partition = _impl.search_partition
search_list_coloring = _impl.search_list_coloring
search_choosability = _impl.search_choosability
