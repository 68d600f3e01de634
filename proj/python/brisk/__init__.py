"""Analysis of short local algebras of radical-cube zero."""

import json

from ._brisk import (
    Algebra,
    InputError,
    InvariantViolation,
    NotSpecialError,
    PreconditionError,
    bristle_types,
    fixture_dir,
    is_special,
    layout_svg,
    load,
    parse,
    reflexive_atom,
    run_cli,
)
from ._brisk import report_json as _report_json


def report(algebra):
    """Full analysis report as a dictionary."""
    return json.loads(_report_json(algebra))


__all__ = [
    "Algebra",
    "InputError",
    "InvariantViolation",
    "NotSpecialError",
    "PreconditionError",
    "bristle_types",
    "fixture_dir",
    "is_special",
    "layout_svg",
    "load",
    "parse",
    "reflexive_atom",
    "report",
    "run_cli",
]
