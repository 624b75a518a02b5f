"""Backend selection for the GF(q) matrix kernels.

The compiled extension (``bsgs._ckernel``) is used when it imports and
the field is supported by it; otherwise the pure-Python kernels in
``bsgs._pykernel`` are used.  Set ``BSGS_PURE_PYTHON=1`` to force the
fallback, or switch at runtime with :func:`use_backend`.
"""

from __future__ import annotations

import contextlib
import os

from . import _pykernel

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

AVAILABLE = ("cython", "python") if _ckernel is not None else ("python",)

_backend = "python" if (_ckernel is None or os.environ.get("BSGS_PURE_PYTHON")) else "cython"
_fields = []


def backend() -> str:
    return _backend


def make_ops(field, name: str | None = None):
    name = name or _backend
    if name == "cython":
        if _ckernel is None:
            raise RuntimeError("compiled kernel is not available")
        if field.r == 1 or field.has_full_tables:
            return _ckernel.FieldOps(field)
    elif name != "python":
        raise ValueError(f"unknown backend {name!r}")
    return _pykernel.make_ops(field)


def attach_ops(field):
    field.ops = make_ops(field)
    _fields.append(field)


def set_backend(name: str):
    global _backend
    if name not in AVAILABLE:
        raise RuntimeError(f"backend {name!r} not available (have {AVAILABLE})")
    _backend = name
    for field in _fields:
        field.ops = make_ops(field)


@contextlib.contextmanager
def use_backend(name: str):
    old = _backend
    set_backend(name)
    try:
        yield
    finally:
        set_backend(old)
