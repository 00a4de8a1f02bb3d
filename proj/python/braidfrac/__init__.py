"""Braided and purely braided fractions of digit rewriting systems."""

from ._braidfrac import (
    BudgetExceeded,
    Context,
    Element,
    Error,
    FlavorError,
    InvalidSystem,
    MismatchError,
    ParseError,
    run_cli,
    suite_names,
)

__all__ = [
    "BudgetExceeded",
    "Context",
    "Element",
    "Error",
    "FlavorError",
    "InvalidSystem",
    "MismatchError",
    "ParseError",
    "run_cli",
    "suite_names",
]
