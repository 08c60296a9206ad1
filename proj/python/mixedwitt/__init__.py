"""Mixed Witt rings of quaternion algebras over number fields.

Forms are comma-separated entries ("1,-1,t"); pure quaternions are i/j/k
text ("i-2j", "(t+1)k"). Mixed elements are dicts with optional keys
"scalar", "herm" and "skew", the same schema as workspace files.

Library errors raise :class:`Error`; ``err.args`` is ``(message, kind)``.
"""

import json

from ._core import (
    DEFAULT_BUDGET,
    Algebra,
    Error,
    Field,
    find_reference,
    hilbert_symbol,
    partition,
    pfister,
    quat_mul,
    signatures,
    symbol_slot,
    weakly_equivalent,
    witt_equal,
)
from . import _core

__all__ = [
    "Algebra",
    "Error",
    "Field",
    "error_kind",
    "find_reference",
    "hilbert_symbol",
    "mixed_mul",
    "partition",
    "pfister",
    "principal_polarization",
    "quat_mul",
    "rdim2",
    "signature_pairs",
    "signatures",
    "spectrum",
    "symbol_slot",
    "weakly_equivalent",
    "witt_equal",
]


def _dump(x):
    return x if isinstance(x, str) else json.dumps(x)


def error_kind(err):
    """The error kind name of an :class:`Error`, e.g. "MissingReference"."""
    return err.args[1] if len(err.args) > 1 else None


def mixed_mul(algebra, x, y):
    """Product in the mixed Witt ring, as a mixed-element dict."""
    return json.loads(_core._mixed_mul(algebra, _dump(x), _dump(y)))


def rdim2(algebra, x):
    return _core._rdim2(algebra, _dump(x))


def signature_pairs(algebra, x, ref="", budget=DEFAULT_BUDGET):
    """(eta=+1, eta=-1) signatures at each ordering.

    ``ref`` chooses the reference at split orderings: "auto", "local" or a
    pure quaternion such as "i".
    """
    return _core._signature_pairs(algebra, _dump(x), ref, budget)


def principal_polarization(algebra, x, ref="", budget=DEFAULT_BUDGET):
    return _core._principal_polarization(algebra, _dump(x), ref, budget)


def spectrum(algebra, primes=()):
    return json.loads(_core._spectrum(algebra, list(primes)))
