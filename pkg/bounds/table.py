"""
Bound tables: one best_bound row per n, as a pandas frame for CSV export
or as the list of certificates for JSON export.
"""

import logging
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional

import pandas as pd

import config
from bounds.certificate import BoundCertificate
from bounds.engine import best_bound
from constants.arithmetic import fmt_rational
from constants.registry import KnownValues, default_table
from errors import RangeError
from fields.prime_power import PrimePower

logger = logging.getLogger(__name__)

TABLE_COLUMNS = ["q", "n", "bound", "exact", "route"]


@dataclass
class OutputRecord:
    q: int
    n: int
    bound: int
    exact: str
    route: str
    certificate_path: Optional[str] = None

    @classmethod
    def from_certificate(cls, cert: BoundCertificate, path: Optional[str] = None) -> "OutputRecord":
        return cls(q=cert.q, n=cert.n, bound=cert.value_floor, exact=fmt_rational(cert.value),
                   route=cert.kind, certificate_path=path)


def bound_certificates(q: PrimePower, n_to: int, table: Optional[KnownValues] = None,
                       n_from: int = 2) -> List[BoundCertificate]:
    if n_to < n_from or n_to > config.TABLE_N_MAX:
        raise RangeError(f"table range {n_from}..{n_to} is empty or above {config.TABLE_N_MAX}")
    table = table or default_table()
    certs = [best_bound(q, n, table) for n in range(n_from, n_to + 1)]
    logger.info(f"✅ Built {len(certs)} rows for q={q.q}")
    return certs


def table_frame(certs: List[BoundCertificate]) -> pd.DataFrame:
    rows = [asdict(OutputRecord.from_certificate(c)) for c in certs]
    return pd.DataFrame(rows, columns=TABLE_COLUMNS)


def table_csv(certs: List[BoundCertificate]) -> str:
    return table_frame(certs).to_csv(index=False, lineterminator="\n")


def table_json_rows(certs: List[BoundCertificate]) -> List[Dict[str, Any]]:
    return [c.to_dict() for c in certs]
