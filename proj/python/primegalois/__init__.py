"""Galois groups of prime-degree polynomials over Q.

Exact classification via real-root counts and Frobenius sampling, plus
constructive realization of cyclic and Frobenius groups from Gaussian
periods and radicals.
"""

from primegalois._core import (
    classify,
    cli,
    count_real_roots,
    discriminant,
    find_q,
    group_table_text,
    is_prime,
    parse,
    periods,
    primitive_root,
    realize_cyclic,
    realize_frobenius,
)

__all__ = [
    "classify",
    "cli",
    "count_real_roots",
    "discriminant",
    "find_q",
    "group_table_text",
    "is_prime",
    "parse",
    "periods",
    "primitive_root",
    "realize_cyclic",
    "realize_frobenius",
]

__version__ = "1.0.0"
