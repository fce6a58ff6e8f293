"""Backend selection for the search kernels.

The compiled extension is used when it imports and the graph fits in 64-bit
masks; otherwise the pure-Python module runs. ``QTRD_PURE_PYTHON=1`` forces
the fallback everywhere.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _kernels_py as pure

try:
    from . import _kernels as compiled
except ImportError:  # extension not built
    compiled = None

FORCE_PURE = os.environ.get("QTRD_PURE_PYTHON", "") not in ("", "0")

ROMAN, QUASI_TOTAL, TOTAL_ROMAN = pure.ROMAN, pure.QUASI_TOTAL, pure.TOTAL_ROMAN
DOMINATING, TOTAL_DOMINATING, PACKING, EFFICIENT = (
    pure.DOMINATING,
    pure.TOTAL_DOMINATING,
    pure.PACKING,
    pure.EFFICIENT,
)
RULE_BOUND = pure.RULE_BOUND
RULE_SUPPORT = pure.RULE_SUPPORT
RULE_COVER = pure.RULE_COVER
RULE_COMPLETE = pure.RULE_COMPLETE
ALL_RULES = pure.ALL_RULES


def has_compiled() -> bool:
    return compiled is not None


def backend(n: int, prefer: str | None = None) -> ModuleType:
    """Kernel module for a graph of order ``n``.

    ``prefer`` may be ``"python"`` or ``"compiled"``; asking for the compiled
    kernels when they are unavailable or ``n`` is too large raises.
    """
    if prefer == "python":
        return pure
    if prefer == "compiled":
        if compiled is None:
            raise RuntimeError("compiled kernels are not built")
        if n >= compiled.MAX_BITS:
            raise ValueError(f"compiled kernels support n < {compiled.MAX_BITS}, got {n}")
        return compiled
    if prefer is not None:
        raise ValueError(f"unknown backend {prefer!r}")
    if compiled is not None and not FORCE_PURE and n < compiled.MAX_BITS:
        return compiled
    return pure


def backend_name(n: int) -> str:
    return "compiled" if backend(n) is compiled else "python"
