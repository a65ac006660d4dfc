from .decide import (
    VerdictStatus,
    Verdict,
    theorem_equation,
    decide_triviality,
    distinct_powers,
    subcritical_crosscheck,
)

__all__ = [
    "VerdictStatus",
    "Verdict",
    "theorem_equation",
    "decide_triviality",
    "distinct_powers",
    "subcritical_crosscheck",
]
