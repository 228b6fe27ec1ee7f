"""
Independent re-validation of a bound certificate.
"""

import logging
from typing import Optional

from bilinear.general_cc import Inapplicable
from bounds.certificate import BoundCertificate
from bounds.engine import rebuild
from constants.registry import KnownValues, default_table
from errors import MuRankError
from fields.prime_power import prime_power

logger = logging.getLogger(__name__)


def recheck(cert: BoundCertificate, table: Optional[KnownValues] = None) -> bool:
    """
    True iff every premise holds on its stored operands, the floor matches the
    value, and rebuilding the route from (kind, q, n, tower, step, branch)
    reproduces the certificate exactly.
    """
    try:
        for p in cert.premises:
            if not p.holds():
                logger.warning(f"⚠️ premise fails: {p.name}")
                return False
        if cert.value_floor != cert.value.numerator // cert.value.denominator:
            logger.warning("⚠️ value_floor does not match value")
            return False
        table = table or default_table()
        rebuilt = rebuild(cert, prime_power(cert.q), table)
        if isinstance(rebuilt, Inapplicable):
            logger.warning(f"⚠️ route no longer applies: {rebuilt.reason}")
            return False
        if rebuilt.to_dict() != cert.to_dict():
            logger.warning(f"⚠️ certificate for mu_{cert.q}({cert.n}) differs from its rebuild")
            return False
    except MuRankError as exc:
        logger.warning(f"⚠️ recheck error: {exc}")
        return False
    return True
