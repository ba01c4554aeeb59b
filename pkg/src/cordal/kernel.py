"""Select the polynomial kernel at import time.

The compiled extension is used when it was built; set CORDAL_PURE=1 to
force the pure-Python fallback.
"""

import os

if os.environ.get("CORDAL_PURE") == "1":
    from . import _pykernel as impl
else:
    try:
        from . import _ckernel as impl
    except ImportError:
        from . import _pykernel as impl

IMPL = impl.IMPL
add = impl.add
iadd = impl.iadd
scale = impl.scale
scale_by = impl.scale_by
mul = impl.mul
normalize = impl.normalize
substitute = impl.substitute
