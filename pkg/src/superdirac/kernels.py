"""Backend selection for the hot arithmetic kernels.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python ``_kernels_py`` twin.  Both expose ``laurent_mul``,
``laurent_divide`` and ``series_mul`` with identical results.
"""

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_BACKENDS = {"python": _kernels_py}
if _compiled is not None:
    _BACKENDS["cython"] = _compiled

_active = _compiled if _compiled is not None else _kernels_py


def available_backends():
    return sorted(_BACKENDS)


def backend():
    return "cython" if _active is _compiled and _compiled is not None else "python"


def use_backend(name):
    """Switch the process-wide backend; returns the previous name."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} not available; have {available_backends()}")
    previous = backend()
    _active = _BACKENDS[name]
    return previous


def get(name):
    return _BACKENDS[name]


def laurent_mul(a, b):
    return _active.laurent_mul(a, b)


def laurent_divide(f, g):
    return _active.laurent_divide(f, g)


def series_mul(a, b, order):
    return _active.series_mul(a, b, order)
