"""partizeta: partition zeta functions, equal-argument multiple zeta values,
p-adic congruence checks, and Manin zeta polynomials, at arbitrary precision
with cross-validated routes for every evaluable formula.
"""

from __future__ import annotations

import hashlib
import pathlib

__version__ = "0.1.0"

from . import fixedlen, modular, numerics, padic, partitions, pzeta  # noqa: E402,F401

_build_id_cache = None


def build_id() -> str:
    """Stable identifier of the installed source tree (git-style short hash)."""
    global _build_id_cache
    if _build_id_cache is None:
        root = pathlib.Path(__file__).parent
        h = hashlib.sha256()
        for path in sorted(root.rglob("*.py")):
            h.update(path.name.encode())
            h.update(path.read_bytes())
        _build_id_cache = h.hexdigest()[:12]
    return _build_id_cache
