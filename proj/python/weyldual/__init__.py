"""Exact graded D-module computations: de Rham cohomology, Matlis duals, checks.

Module arguments are recipe strings such as ``"E(n=2)"`` or presentation
JSON as returned by :func:`build`.
"""

import json

from . import _core
from ._core import (
    CoarseModeUnsupported,
    IncompatibleSpecs,
    IncompleteWindow,
    ParseError,
    PreconditionFailed,
    WeylDualError,
)

__all__ = [
    "build",
    "derham",
    "koszul",
    "dual",
    "validate",
    "eulerian",
    "verify",
    "run_all",
    "zoo",
    "theorems",
    "totals",
    "WeylDualError",
    "ParseError",
    "IncompatibleSpecs",
    "CoarseModeUnsupported",
    "IncompleteWindow",
    "PreconditionFailed",
]


def _source(module):
    return module if isinstance(module, str) else json.dumps(module)


def build(recipe, window=None, mode=None):
    return json.loads(_core.build(recipe, window=window, mode=mode))


def derham(module, workers=1, window=None, mode=None):
    return json.loads(_core.derham(_source(module), workers=workers, window=window, mode=mode))


def koszul(module, workers=1, window=None, mode=None):
    """Homology of the Koszul complex on -d_1, ..., -d_n."""
    return json.loads(
        _core.derham(_source(module), koszul=True, workers=workers, window=window, mode=mode)
    )


def dual(module, window=None, mode=None):
    return json.loads(_core.dual(_source(module), window=window, mode=mode))


def validate(module):
    return json.loads(_core.validate(_source(module)))


def eulerian(module):
    return json.loads(_core.eulerian(_source(module)))


def verify(theorem, recipe="", workers=1, window=None, mode=None):
    return json.loads(_core.verify(theorem, recipe, workers=workers, window=window, mode=mode))


def run_all(workers=1):
    return json.loads(_core.run_all(workers))


def zoo():
    return list(_core.zoo())


def theorems():
    return list(_core.theorems())


def totals(table):
    """Total dimensions as a list indexed by i, or None if any is incomplete."""
    t = table["totals"]
    if not all(v["complete"] for v in t.values()):
        return None
    return [t[str(i)]["dim"] for i in range(len(t))]
