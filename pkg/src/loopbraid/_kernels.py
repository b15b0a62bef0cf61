"""Select the word kernels: compiled if importable, else pure Python.

Set ``LOOPBRAID_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

python_kernels = _pykernels

if os.environ.get("LOOPBRAID_PURE_PYTHON"):
    compiled_kernels = None
else:
    try:
        from . import _ckernels as compiled_kernels
    except ImportError:
        compiled_kernels = None

active = compiled_kernels if compiled_kernels is not None else python_kernels
BACKEND = "cython" if compiled_kernels is not None else "python"

reduce_letters = active.reduce_letters
invert_letters = active.invert_letters
substitute = active.substitute
conjugate_letters = active.conjugate_letters
evaluate_codes = active.evaluate_codes
