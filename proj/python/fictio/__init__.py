"""Fictional quantities with checkable results.

Cubics solved through the imaginary radical, slopes taken as standard parts
of infinitesimal increment quotients, and checkers that turn "less than any
assignable error" into a finite search.  Scalars cross the boundary as text
("3/4", "0.1") or numbers; exact mode reads 0.1 as 1/10.
"""

from ._core import (
    EngineError,
    ExpressionParseError,
    UsageError,
    __version__,
    bombelli_cbrt,
    canonical,
    depress,
    differentiate,
    evaluate,
    free_variables,
    paraphrase_check,
    proportion,
    set_truncation_order,
    solve_cubic,
    solve_cubic_general,
    solve_quadratic,
    tangent,
    transfer_check,
    trisect,
    truncation_order,
)

__all__ = [
    "EngineError",
    "ExpressionParseError",
    "UsageError",
    "__version__",
    "bombelli_cbrt",
    "canonical",
    "depress",
    "differentiate",
    "evaluate",
    "free_variables",
    "paraphrase_check",
    "proportion",
    "set_truncation_order",
    "solve_cubic",
    "solve_cubic_general",
    "solve_quadratic",
    "tangent",
    "transfer_check",
    "trisect",
    "truncation_order",
]
