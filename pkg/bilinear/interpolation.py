"""
Evaluation-interpolation algorithms of rank 2n-1 for F_{q^n}/F_q, n <= q/2+1.

Inputs are read as polynomials of degree < n, evaluated at the first 2n-2
elements of F_q in canonical order and at infinity (the leading
coefficient), multiplied pointwise, interpolated back to degree 2n-2 and
reduced modulo the extension modulus.
"""

import logging
from typing import List

from bilinear.decomposition import BilinearDecomposition, Triple
from errors import RangeError
from fields.algebra import ExtensionAlgebra, Vector, make_algebra
from fields.finite_field import Element, elements_ascending, field_for
from fields.polynomial import interpolate
from fields.prime_power import PrimePower

logger = logging.getLogger(__name__)


def _evaluation_form(A: ExtensionAlgebra, point: Element) -> Vector:
    """Coefficients of x -> x(point), i.e. (point^0, ..., point^(n-1))."""
    F = A.ground
    out = []
    acc = F.one
    for _ in range(A.m):
        out.append(acc)
        acc = F.mul(acc, point)
    return tuple(out)


def _leading_form(A: ExtensionAlgebra) -> Vector:
    return A.basis(A.m - 1)


def build_interpolation_algorithm(q: PrimePower, n: int) -> BilinearDecomposition:
    if n < 1:
        raise RangeError(f"n must be >= 1, got {n}")
    if 2 * n - 2 > q.q:
        raise RangeError(f"n={n} exceeds q/2+1 for q={q.q}")

    F = field_for(q)
    A = make_algebra(F, n, 1)
    points = elements_ascending(F, 2 * n - 2)
    top = 2 * n - 2

    triples: List[Triple] = []
    for i, pt in enumerate(points):
        values = [(x, F.one if j == i else F.zero) for j, x in enumerate(points)]
        basis_poly = interpolate(F, values, F.zero, top)
        form = _evaluation_form(A, pt)
        triples.append(Triple(form, form, A.from_polynomial(basis_poly)))

    # point at infinity: product of leading coefficients
    values = [(x, F.zero) for x in points]
    basis_poly = interpolate(F, values, F.one, top)
    form = _leading_form(A)
    triples.append(Triple(form, form, A.from_polynomial(basis_poly)))

    dec = BilinearDecomposition(A, triples, symmetric=True)
    logger.debug(f"🔍 built rank-{dec.rank} interpolation algorithm for F_{q.q}^{n}")
    return dec


def build_truncated_interpolation_algorithm(q: PrimePower) -> BilinearDecomposition:
    """
    Rank-3 algorithm for F_q[t]/(t^2):
    (a0 + a1 t)(b0 + b1 t) = a0 b0 + ((a0+a1)(b0+b1) - a0 b0 - a1 b1) t.
    """
    F = field_for(q)
    A = make_algebra(F, 1, 2)
    one, zero, minus_one = F.one, F.zero, F.neg(F.one)
    e0 = (one, zero)
    e1 = (zero, one)
    both = (one, one)
    triples = [
        Triple(e0, e0, (one, minus_one)),
        Triple(both, both, (zero, one)),
        Triple(e1, e1, (zero, minus_one)),
    ]
    return BilinearDecomposition(A, triples, symmetric=True)
