"""Bitset kernel dispatch.

Vertex sets and Boolean rows are packed little-endian into uint64 words:
vertex ``v`` (1-based) is bit ``(v - 1) % 64`` of word ``(v - 1) // 64``.
Shapes: a vertex-set matrix is ``(n, n, W)``, a Boolean matrix ``(n, W)``.

The compiled extension is used when it was built; set ``WALKALG_PURE_PYTHON=1``
to force the numpy fallback. ``set_backend`` switches at runtime (benchmarks,
equivalence tests).

Kernels
-------
vset_product(X, Y, clear_diag)
    ``Z[i, j] = OR_b X[i, b] & Y[b, j]``, diagonal zeroed when asked.
vset_row_product(x, Y, skip)
    One row of the above; column ``skip`` (0-based) zeroed, -1 for none.
vset_diag_join(X, Y)
    ``D[i] = OR_b X[i, b] & Y[b, i]``.
bool_product(X, Y)
    ``Z[i] = OR over b in row X[i] of Y[b]``.
bool_row_product(x, Y)
    One row of the above.
"""
from __future__ import annotations

import os
from types import ModuleType

from walkalg import _kernels_py

try:
    from walkalg import _kernels as _compiled
except ImportError:
    _compiled = None

_NAMES = ("vset_product", "vset_row_product", "vset_diag_join", "bool_product", "bool_row_product")

BACKENDS: dict[str, ModuleType] = {"python": _kernels_py}
if _compiled is not None:
    BACKENDS["compiled"] = _compiled

BACKEND = ""


def set_backend(name: str) -> None:
    global BACKEND
    try:
        module = BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}") from None
    for fn in _NAMES:
        globals()[fn] = getattr(module, fn)
    BACKEND = name


set_backend("python" if _compiled is None or os.environ.get("WALKALG_PURE_PYTHON") else "compiled")
