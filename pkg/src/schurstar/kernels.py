"""Kernel backend selection.

The compiled extension is used when it imports; ``SCHURSTAR_PURE=1`` forces
the pure-Python fallback.
"""

import os

if os.environ.get("SCHURSTAR_PURE") == "1":
    from schurstar import _purekernels as backend
else:
    try:
        from schurstar import _kernels as backend
    except ImportError:
        from schurstar import _purekernels as backend

from schurstar import _purekernels as python_backend

BACKEND = backend.BACKEND
lr_count = backend.lr_count
star_direct_raw = backend.star_direct
lr_fillings = python_backend.lr_fillings


def available_backends():
    """Every importable backend module, pure Python first."""
    mods = [python_backend]
    try:
        from schurstar import _kernels
    except ImportError:
        pass
    else:
        mods.append(_kernels)
    return mods
