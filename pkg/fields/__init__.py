"""
Exact finite-field arithmetic: prime powers, F_q, F_{q^m}[t]/(t^l), polynomials.
"""

from .prime_power import PrimePower, is_prime, make_prime_power, prime_power
from .finite_field import FiniteField, field_for, is_irreducible, make_field
from .polynomial import Polynomial, interpolate
from .algebra import ExtensionAlgebra, algebra_mul, make_algebra

__all__ = [
    'PrimePower', 'is_prime', 'make_prime_power', 'prime_power',
    'FiniteField', 'field_for', 'is_irreducible', 'make_field',
    'Polynomial', 'interpolate',
    'ExtensionAlgebra', 'algebra_mul', 'make_algebra',
]
