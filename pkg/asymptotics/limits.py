"""
Upper bounds on M_q = limsup mu_q(n)/n.

Two sources: the slope of the best uniform linear bound, and the
curve-family bound 2 mu_q(t)/t * (1 + 1/(q^(t/2) - 2)) for q^t >= 9 a square.
The curve family itself is not constructed; only its closed-form
consequence is evaluated.
"""

import logging
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import isqrt
from typing import Any, Dict, Optional, Tuple

from bilinear.general_cc import Inapplicable
from bounds.closed_forms import best_slope_form
from bounds.engine import best_bound
from constants.arithmetic import fmt_rational
from constants.registry import KnownValues, default_table
from errors import MissingTableEntryError, NotASquareError, RangeError
from fields.prime_power import PrimePower, is_square

logger = logging.getLogger(__name__)

UNIFORM = "uniform-limit"
FAMILY_PROVENANCE = ("closed-form consequence of a curve family over F_(q^t) with genus ratio "
                     "tending to 1; the family is not constructed")


@dataclass(frozen=True)
class AsymptoticBound:
    q: int
    value: Fraction
    route: str
    mu_qt_used: Optional[Tuple[int, int, str]] = None  # (t, value, provenance)

    def __post_init__(self):
        if self.value <= 2:
            raise RangeError(f"M_{self.q} bound {self.value} is not above 2")

    @property
    def t(self) -> Optional[int]:
        return None if self.mu_qt_used is None else self.mu_qt_used[0]

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["value"] = fmt_rational(self.value)
        return data


def uniform_asymptotic(q: PrimePower) -> AsymptoticBound:
    form = best_slope_form(q)
    if isinstance(form, Inapplicable):
        raise MissingTableEntryError(form.reason)
    return AsymptoticBound(q=q.q, value=form.slope, route=UNIFORM)


def family_value(q: PrimePower, t: int, mu_qt: int) -> Fraction:
    size = q.q ** t
    if size < 9 or not is_square(size):
        raise NotASquareError(f"q^t = {size} must be a square and at least 9")
    return Fraction(2 * mu_qt, t) * (1 + Fraction(1, isqrt(size) - 2))


def shimura_asymptotic(q: PrimePower, t: int, table: Optional[KnownValues] = None,
                       mu_qt: Optional[int] = None, provenance: Optional[str] = None) -> AsymptoticBound:
    """The family bound with mu_q(t) from the table unless given explicitly."""
    if t < 1:
        raise RangeError(f"t must be at least 1, got {t}")
    if mu_qt is None:
        entry = (table or default_table()).mu_upper(q, t)
        mu_qt, provenance = entry.value, entry.provenance
    value = family_value(q, t, mu_qt)
    return AsymptoticBound(q=q.q, value=value, route=f"shimura(t={t})",
                           mu_qt_used=(t, mu_qt, f"{provenance or 'caller supplied'}; {FAMILY_PROVENANCE}"))


def mu_upper_for(q: PrimePower, t: int, table: KnownValues) -> Tuple[int, str]:
    """min(registry bound, best_bound floor) on mu_q(t), with the winner's provenance."""
    cert = best_bound(q, t, table)
    best, source = cert.value_floor, f"best_bound via {cert.kind}"
    if table.has_mu_upper(q, t):
        entry = table.mu_upper(q, t)
        if entry.value <= best:
            best, source = entry.value, f"registry {entry.key}: {entry.provenance}"
    return best, source


def best_asymptotic(q: PrimePower, t_max: int, table: Optional[KnownValues] = None) -> AsymptoticBound:
    if t_max < 1:
        raise RangeError(f"t_max must be at least 1, got {t_max}")
    table = table or default_table()
    best = uniform_asymptotic(q)
    for t in range(1, t_max + 1):
        size = q.q ** t
        if size < 9 or not is_square(size):
            continue
        mu_qt, source = mu_upper_for(q, t, table)
        candidate = shimura_asymptotic(q, t, mu_qt=mu_qt, provenance=source)
        logger.debug(f"🔍 M_{q.q}: t={t} gives {candidate.value}")
        if candidate.value < best.value:
            best = candidate
    logger.info(f"✅ M_{q.q} <= {best.value} via {best.route}")
    return best
