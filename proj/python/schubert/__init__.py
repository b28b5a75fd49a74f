"""Schubert determinantal ideals: Groebner bases, classification, regularity.

The heavy lifting lives in the compiled extension ``_core``; this package
re-exports its functions. Reports are plain dicts with the same fields as
the ``schubert`` CLI's JSON output.
"""

try:
    from ._core import (
        BudgetError,
        InputError,
        SchubertError,
        classify,
        enumerate_avoiders,
        groebner,
        ideal,
        is_binomial,
        is_vexillary,
        max_essential_rank,
        regularity_of_partition,
        regularity_of_permutation,
        rothe_diagram,
        verify,
    )
except ImportError:  # in-tree test runs load the module straight from the build dir
    from _core import (
        BudgetError,
        InputError,
        SchubertError,
        classify,
        enumerate_avoiders,
        groebner,
        ideal,
        is_binomial,
        is_vexillary,
        max_essential_rank,
        regularity_of_partition,
        regularity_of_permutation,
        rothe_diagram,
        verify,
    )

__all__ = [
    "BudgetError",
    "InputError",
    "SchubertError",
    "classify",
    "enumerate_avoiders",
    "groebner",
    "ideal",
    "is_binomial",
    "is_vexillary",
    "max_essential_rank",
    "regularity_of_partition",
    "regularity_of_permutation",
    "rothe_diagram",
    "verify",
]
