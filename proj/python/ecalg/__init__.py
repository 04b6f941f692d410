"""Endo-commutative 2-dimensional algebras over exact fields.

Fields are given as text ("Q", "F5", "F9:x^2+1") and tables as
"a1,b1,a2,b2,a3,b3,a4,b4" with rows e^2, f^2, ef, fe. Every function
returns plain Python data decoded from the library's JSON output.
"""

import json as _json

from . import _core
from ._core import CapExceeded, FieldError, GateError, NotEnumerableError

__all__ = [
    "CapExceeded",
    "FieldError",
    "GateError",
    "NotEnumerableError",
    "canonical_table",
    "check",
    "classify",
    "enumerate",
    "isomorphism",
    "normalize",
    "tilde",
    "transform",
    "verify",
]


def _table(t):
    return t if isinstance(t, str) else ",".join(str(v) for v in t)


def check(field, table, bruteforce=False):
    return _json.loads(_core.check(field, _table(table), bruteforce))


def classify(field, table):
    """Raises GateError naming the first failed gate."""
    return _json.loads(_core.classify(field, _table(table)))


def isomorphism(field, a, b):
    return _json.loads(_core.isomorphism(field, _table(a), _table(b)))


def canonical_table(field, form):
    return _json.loads(_core.canonical_table(field, form))


def transform(field, table, matrix):
    return _json.loads(_core.transform(field, _table(table), _table(matrix)))


def tilde(field, matrix):
    return _json.loads(_core.tilde(field, _table(matrix)))


def normalize(field, table):
    return _json.loads(_core.normalize(field, _table(table)))


def verify(field, suite="all", full=False, seed=20240601, jobs=1, timing=False):
    return _json.loads(_core.verify(field, suite, full, seed, jobs, timing))


def enumerate(field, filter="", jobs=1):
    return _json.loads(_core.enumerate(field, filter, jobs))
