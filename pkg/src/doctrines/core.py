"""Backend selection for the order-decision kernels.

The compiled extension (built from ``_core.pyx``) handles carriers of at
most 64 elements; larger instances, and installs where the extension
failed to build, fall back to ``_core_py``, which implements the same
contract bit for bit.  Set ``DOCTRINES_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _core_py

try:
    from . import _core as _compiled  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on the build
    _compiled = None

if os.environ.get("DOCTRINES_PURE"):
    _compiled = None

HAVE_COMPILED = _compiled is not None
BACKEND = "compiled" if HAVE_COMPILED else "pure"

_MAX_BITS = 64


def ex_witness(na, nb, nc, alpha, beta):
    if _compiled is not None and na * nb <= _MAX_BITS and na * nc <= _MAX_BITS:
        return _compiled.ex_witness(na, nb, nc, alpha, beta)
    return _core_py.ex_witness(na, nb, nc, alpha, beta)


def un_witness(na, nb, nc, alpha, beta):
    if _compiled is not None and na * nb <= _MAX_BITS and na * nc <= _MAX_BITS:
        return _compiled.un_witness(na, nb, nc, alpha, beta)
    return _core_py.un_witness(na, nb, nc, alpha, beta)


def dial_witness(nb, nc, nb2, nc2, alpha, beta):
    if (
        _compiled is not None
        and nb * nc <= _MAX_BITS
        and nb2 * nc2 <= _MAX_BITS
        and nb * nc2 <= _MAX_BITS
    ):
        return _compiled.dial_witness(nb, nc, nb2, nc2, alpha, beta)
    return _core_py.dial_witness(nb, nc, nb2, nc2, alpha, beta)
