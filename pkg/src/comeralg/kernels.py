"""Kernel backend selection.

The compiled extension is preferred when it was built; otherwise the
pure-Python twins take over.  Set COMERALG_PURE_PYTHON=1 to force the
fallback (used by the benchmark and the backend-equivalence tests).
"""

import os

from comeralg import _pykernels

if os.environ.get("COMERALG_PURE_PYTHON") == "1":
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from comeralg import _ckernels as _impl

        BACKEND = "c"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

log_table = _impl.log_table
shift_class_masks = _impl.shift_class_masks
check_table_all_pairs = _impl.check_table_all_pairs
