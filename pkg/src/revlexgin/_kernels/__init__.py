"""Kernel dispatch: the compiled extension when importable, else pure Python.

Set ``REVLEXGIN_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels as pykernels

ckernels = None
if not os.environ.get("REVLEXGIN_PURE_PYTHON"):
    try:
        from . import _ckernels as ckernels
    except ImportError:  # extension not built
        ckernels = None

_impl = ckernels if ckernels is not None else pykernels
BACKEND = "cython" if ckernels is not None else "python"

desc_key = _impl.desc_key
min_var = _impl.min_var
divides = _impl.divides
expand = _impl.expand
minimalize = _impl.minimalize
sous_escalier_next = _impl.sous_escalier_next
normal_form = _impl.normal_form
rref = _impl.rref

__all__ = [
    "BACKEND",
    "pykernels",
    "ckernels",
    "desc_key",
    "min_var",
    "divides",
    "expand",
    "minimalize",
    "sous_escalier_next",
    "normal_form",
    "rref",
]
