"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
kernels are used.  Both expose ``sais`` and ``RunIndex``.
"""

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

AVAILABLE = {"python": _pykernels}
if _ckernels is not None:
    AVAILABLE["cython"] = _ckernels

DEFAULT = "cython" if _ckernels is not None else "python"


def get(name=None):
    if name is None:
        name = DEFAULT
    try:
        return AVAILABLE[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} is not available "
                         f"(have: {', '.join(sorted(AVAILABLE))})") from None
