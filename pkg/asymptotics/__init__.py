"""
Asymptotic bounds on M_q from the uniform theorems and the curve-family bound.
"""

from .limits import AsymptoticBound, best_asymptotic, shimura_asymptotic, uniform_asymptotic

__all__ = ['AsymptoticBound', 'best_asymptotic', 'shimura_asymptotic', 'uniform_asymptotic']
