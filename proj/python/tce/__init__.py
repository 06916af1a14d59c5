"""Exact closure computations for homogeneous ideals over plane-curve cones.

The heavy lifting lives in the compiled extension; this package re-exports it
and adds a couple of JSON conveniences.
"""

import json as _json

from ._core import (
    CaseFileError,
    ResourceCapError,
    Ring,
    bracket_membership,
    chern_polynomial,
    classify,
    find_primary_relation,
    frobenius_action_h1,
    frobenius_closure_test,
    h_line,
    hasse_bracket_vanishes,
    hasse_invariant,
    in_ideal,
    is_primary,
    is_smooth_curve,
    leadno,
    minimal_generator_degrees,
    relation_space,
    run_case_file,
    splitting_type_p1,
    tight_closure_witness,
)

__all__ = [
    "CaseFileError",
    "ResourceCapError",
    "Ring",
    "bracket_membership",
    "chern_polynomial",
    "classify",
    "classify_dict",
    "find_primary_relation",
    "frobenius_action_h1",
    "frobenius_closure_test",
    "h_line",
    "hasse_bracket_vanishes",
    "hasse_invariant",
    "in_ideal",
    "is_primary",
    "is_smooth_curve",
    "leadno",
    "minimal_generator_degrees",
    "relation_space",
    "run_case_file",
    "run_case_file_dict",
    "splitting_type_p1",
    "tight_closure_witness",
]


def classify_dict(ring, generators, candidate, **kwargs):
    """classify(), parsed into a dict."""
    return _json.loads(classify(ring, generators, candidate, **kwargs))


def run_case_file_dict(command, text, **kwargs):
    """run_case_file(), with the report parsed into a dict."""
    code, report = run_case_file(command, text, **kwargs)
    return code, _json.loads(report)
