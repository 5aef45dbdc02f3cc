"""Exact computations over the Lie algebras HV(a, b; eps) and their
rank-one free U(h)-modules.

Rationals cross the boundary as ints or "p/q" strings; reports come back as
plain dicts.
"""

import json

from ._hvalgebra import (
    AlgebraParams,
    ConfigError,
    DomainError,
    Element,
    Module,
    ParseError,
    Polynomial,
    act,
    bracket,
    h_on_one,
    is_simple_expected,
    shift_isomorphism,
    suite_names,
)
from . import _hvalgebra as _core

__all__ = [
    "AlgebraParams",
    "ConfigError",
    "DomainError",
    "Element",
    "Module",
    "ParseError",
    "Polynomial",
    "act",
    "bracket",
    "generating_set_report",
    "h_on_one",
    "is_simple_expected",
    "probe",
    "recover",
    "run_suite",
    "shift_isomorphism",
    "suite_names",
]


def run_suite(name, seed=20240601, corrupted=False):
    """Run one verification suite over the default window and grid."""
    return json.loads(_core.run_suite_json(name, seed, corrupted))


def probe(module, seed, degree_cap=None, iter_cap=50):
    """Saturate from `seed` (a Polynomial or its text) and return the report and span."""
    if isinstance(seed, str):
        seed = Polynomial(seed)
    return json.loads(_core.probe_json(module, seed, degree_cap, iter_cap))


def recover(module):
    """Parameters read back off the module's action."""
    return json.loads(_core.recover_json(module))


def generating_set_report(algebra):
    return json.loads(_core.generating_set_json(algebra))
