"""Backend selection for the counting kernels.

The compiled core is used when it imports; setting ``SMALLCOVER_PURE_PYTHON=1``
forces the pure-Python fallback.
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if os.environ.get("SMALLCOVER_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

_active = compiled_backend or python_backend
BACKEND = "cython" if compiled_backend is not None else "python"


def count(domain, offsets, pairs):
    return _active.count(domain, offsets, pairs)


def collect(domain, offsets, pairs):
    return _active.collect(domain, offsets, pairs)
