"""Kernel backend selection.

The compiled ``_fastcore`` extension and the pure-Python ``_pykernels``
module implement the same four functions with identical outputs; the
compiled one is preferred when importable.  Set ``HAUSNUM_BACKEND=pure`` or
``HAUSNUM_BACKEND=compiled`` to force a choice (the latter raises if the
extension was not built).
"""

import os

from . import _pykernels

_forced = os.environ.get("HAUSNUM_BACKEND", "").strip().lower()

if _forced == "pure":
    backend = _pykernels
    BACKEND_NAME = "pure"
elif _forced == "compiled":
    from . import _fastcore as backend  # noqa: F401  (raises if unbuilt)
    BACKEND_NAME = "compiled"
elif _forced:
    raise ValueError(f"HAUSNUM_BACKEND must be 'pure' or 'compiled', got {_forced!r}")
else:
    try:
        from . import _fastcore as backend
        BACKEND_NAME = "compiled"
    except ImportError:
        backend = _pykernels
        BACKEND_NAME = "pure"

MAX_ENUM_POINTS = _pykernels.MAX_ENUM_POINTS

first_row_candidates = backend.first_row_candidates
preorder_rows = backend.preorder_rows
canonical_rows = backend.canonical_rows
classify = backend.classify
