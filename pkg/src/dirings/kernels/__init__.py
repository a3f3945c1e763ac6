"""Hot candidate-scan kernels with a compiled core and a numpy fallback.

Two entry points drive the census inner loops:

  scan_product_pairs(lcands, rcands)            pairs passing D1..D5
  scan_action_pairs(lprod, rprod, lcands, rcands)
                                                pairs passing M3a..M5b

Both take C-contiguous uint8 arrays and return a sorted (p, 2) int64
array of candidate index pairs.  The backends are interchangeable; the
compiled one is used when importable, and DIRINGS_KERNELS=py|c forces a
choice.
"""

from __future__ import annotations

import os

from . import _pykernels


def available_backends() -> dict:
    out = {"py": _pykernels}
    try:
        from . import _ckernels
        out["c"] = _ckernels
    except ImportError:
        pass
    return out


def get_backend(name: str | None = None):
    backends = available_backends()
    if name is None:
        name = os.environ.get("DIRINGS_KERNELS")
    if name is None:
        name = "c" if "c" in backends else "py"
    if name not in backends:
        raise ValueError(f"kernel backend {name!r} unavailable "
                         f"(have: {sorted(backends)})")
    return backends[name]


_BACKEND = get_backend()


def backend_name() -> str:
    return "c" if _BACKEND is not _pykernels else "py"


def scan_product_pairs(lcands, rcands):
    return _BACKEND.scan_product_pairs(lcands, rcands)


def scan_action_pairs(lprod, rprod, lcands, rcands):
    return _BACKEND.scan_action_pairs(lprod, rprod, lcands, rcands)
