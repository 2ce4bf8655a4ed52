"""Kernel selection: compiled extension if available, pure Python otherwise.

Set TRIWIDTH_KERNEL=pure to force the fallback, TRIWIDTH_KERNEL=fast to
insist on the compiled module (ImportError if it was not built).
"""

import os

from . import pure

_requested = os.environ.get("TRIWIDTH_KERNEL", "")

if _requested == "pure":
    _impl = pure
    kernel_name = "pure"
else:
    try:
        from . import _fast as _impl
        kernel_name = "fast"
    except ImportError:
        if _requested == "fast":
            raise
        _impl = pure
        kernel_name = "pure"

carving_dp = _impl.carving_dp
treewidth_dp = _impl.treewidth_dp
