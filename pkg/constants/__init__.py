"""
Constants registry: known complexity values and the closed-form constants
(epsilon, alpha, e, gamma, kappa, C_q) the bound routes are built from.
"""

from .registry import Claim, KnownValues, TableEntry, UsedEntry, default_table, load_known_values
from .arithmetic import (
    alpha, c_q_rows, c_q_table, e_const, epsilon, fmt_rational, gamma,
    gamma_with_entries, kappa, parse_rational, shokrollahi_upper,
)

__all__ = [
    'Claim', 'KnownValues', 'TableEntry', 'UsedEntry', 'default_table', 'load_known_values',
    'alpha', 'c_q_rows', 'c_q_table', 'e_const', 'epsilon', 'fmt_rational', 'gamma',
    'gamma_with_entries', 'kappa', 'parse_rational', 'shokrollahi_upper',
]

# Named constant functions, looked up by the `constants` CLI command
CONSTANT_FUNCTIONS = {
    'epsilon': epsilon,
    'alpha': alpha,
    'e': e_const,
    'C_q': c_q_table,
}
