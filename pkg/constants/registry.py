"""
KnownValues: the single store of imported complexity values.

Loaded from a versioned JSON file (data/known_values.json by default,
MURANK_TABLE or --table to override). Every entry carries a provenance
string that certificates surface verbatim.
"""

import json
import logging
import os
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

import config
from errors import MissingTableEntryError, TableFormatError
from fields.prime_power import PrimePower

logger = logging.getLogger(__name__)

QUANTITIES = ("mu", "mu_sym")
BOUNDS = ("exact", "upper")

INTERPOLATION_PROVENANCE = "evaluation-interpolation at 2m-2 points plus infinity: mu = mu^sym = 2m-1 for m <= q/2+1"


@dataclass(frozen=True)
class TableEntry:
    quantity: str
    bound: str
    m: int
    l: int
    value: int
    provenance: str
    q: Optional[List[int]] = None
    q_min: Optional[int] = None

    def matches(self, q: int) -> bool:
        if self.q is not None:
            return q in self.q
        if self.q_min is not None:
            return q >= self.q_min
        return True


@dataclass(frozen=True)
class UsedEntry:
    """A table value as it was consumed for one specific q."""
    key: str
    value: Union[int, Fraction]
    provenance: str

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        if isinstance(self.value, Fraction):
            data["value"] = f"{self.value.numerator}/{self.value.denominator}"
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "UsedEntry":
        value = data["value"]
        if isinstance(value, str):
            value = Fraction(value)
        return cls(key=str(data["key"]), value=value, provenance=str(data["provenance"]))

    @classmethod
    def from_claim(cls, claim: "Claim") -> "UsedEntry":
        return cls(key=f"{claim.name}(n<={claim.n_max})", value=claim.slope, provenance=claim.provenance)


@dataclass(frozen=True)
class Claim:
    """A published linear bound mu_q(n) <= slope*n for a bounded range of n."""
    name: str
    q: int
    n_max: int
    slope: Fraction
    provenance: str


@dataclass
class KnownValues:
    version: str
    entries: List[TableEntry] = field(default_factory=list)
    claims: List[Claim] = field(default_factory=list)
    source: str = "<memory>"

    # lookups

    def _candidates(self, quantity: str, q: int, m: int, l: int) -> List[TableEntry]:
        return [e for e in self.entries
                if e.quantity == quantity and e.m == m and e.l == l and e.matches(q)]

    @staticmethod
    def _key(quantity: str, q: int, m: int, l: int) -> str:
        return f"{quantity}_{q}({m},{l})"

    def _generated(self, quantity: str, q: int, m: int, l: int) -> Optional[UsedEntry]:
        if l == 1 and 2 * m - 2 <= q:
            return UsedEntry(self._key(quantity, q, m, l), 2 * m - 1, INTERPOLATION_PROVENANCE)
        return None

    def exact(self, quantity: str, q: PrimePower, m: int, l: int = 1) -> Optional[UsedEntry]:
        gen = self._generated(quantity, q.q, m, l)
        if gen is not None:
            return gen
        for e in self._candidates(quantity, q.q, m, l):
            if e.bound == "exact":
                return UsedEntry(self._key(quantity, q.q, m, l), e.value, e.provenance)
        return None

    def _best_upper(self, quantity: str, q: int, m: int, l: int) -> Optional[UsedEntry]:
        best: Optional[UsedEntry] = self._generated(quantity, q, m, l)
        for e in self._candidates(quantity, q, m, l):
            if best is None or e.value < best.value:
                best = UsedEntry(self._key(quantity, q, m, l), e.value, e.provenance)
        return best

    def mu_sym_upper(self, q: PrimePower, m: int) -> UsedEntry:
        found = self._best_upper("mu_sym", q.q, m, 1)
        if found is None:
            raise MissingTableEntryError(f"no entry for mu^sym_{q.q}({m})")
        return found

    def mu_upper(self, q: PrimePower, m: int, l: int = 1) -> UsedEntry:
        """Best upper bound on mu_q(m,l); symmetric values count since mu <= mu^sym."""
        found = self._best_upper("mu", q.q, m, l)
        if l == 1:
            sym = self._best_upper("mu_sym", q.q, m, 1)
            if sym is not None and (found is None or sym.value < found.value):
                found = sym
        if found is None:
            raise MissingTableEntryError(f"no entry for mu_{q.q}({m},{l})")
        return found

    def has_mu_upper(self, q: PrimePower, m: int, l: int = 1) -> bool:
        try:
            self.mu_upper(q, m, l)
        except MissingTableEntryError:
            return False
        return True

    def claim(self, name: str) -> Claim:
        for c in self.claims:
            if c.name == name:
                return c
        raise MissingTableEntryError(f"no claim named {name}")

    def claim_for(self, q: int, n: int) -> Optional[Claim]:
        for c in self.claims:
            if c.q == q and n <= c.n_max:
                return c
        return None

    # integrity

    def validate(self) -> None:
        """Exact never exceeds upper, and small-m l=1 entries agree with 2m-1."""
        for e in self.entries:
            if e.quantity not in QUANTITIES or e.bound not in BOUNDS:
                raise TableFormatError(f"bad entry kind {e.quantity}/{e.bound}")
            if e.m < 1 or e.l < 1 or e.value < 1:
                raise TableFormatError(f"bad entry {self._key(e.quantity, 0, e.m, e.l)}")
        for e in self.entries:
            if e.bound != "exact":
                continue
            for other in self.entries:
                if (other.bound == "upper" and other.quantity == e.quantity
                        and (other.m, other.l) == (e.m, e.l) and other.value < e.value
                        and _overlap(e, other)):
                    raise TableFormatError(
                        f"exact value {e.value} above upper bound {other.value} for "
                        f"{e.quantity}({e.m},{e.l})")
        for e in self.entries:
            if e.l != 1 or e.q is None:
                continue
            for qv in e.q:
                if 2 * e.m - 2 <= qv and e.bound == "exact" and e.value != 2 * e.m - 1:
                    raise TableFormatError(
                        f"{e.quantity}_{qv}({e.m}) must equal {2 * e.m - 1}, table says {e.value}")

    def require(self, q: PrimePower, mu_keys=(), sym_keys=()) -> None:
        """Fail early when a route needs entries the table lacks."""
        for m, l in mu_keys:
            self.mu_upper(q, m, l)
        for m in sym_keys:
            self.mu_sym_upper(q, m)


def _overlap(a: TableEntry, b: TableEntry) -> bool:
    """True when some q satisfies both selectors."""
    if a.q is not None:
        return any(b.matches(qv) for qv in a.q)
    if b.q is not None:
        return any(a.matches(qv) for qv in b.q)
    # "any" and "q >= min" selectors are unbounded above
    return True


def _parse_selector(raw: Dict[str, Any]) -> Dict[str, Any]:
    sel = raw.get("q", "any")
    if sel == "any":
        return {}
    if isinstance(sel, list):
        return {"q": [int(v) for v in sel]}
    if isinstance(sel, dict) and "min" in sel:
        return {"q_min": int(sel["min"])}
    raise TableFormatError(f"unrecognised q selector {sel!r}")


def load_known_values(path: Optional[str] = None) -> KnownValues:
    """Read, parse and validate a constants file."""
    path = config.table_path(path)
    if not os.path.exists(path):
        raise TableFormatError(f"constants file not found: {path}")
    with open(path, "r", encoding="utf-8") as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise TableFormatError(f"{path}: {exc}") from exc

    try:
        entries = [
            TableEntry(
                quantity=item["quantity"],
                bound=item["bound"],
                m=int(item["m"]),
                l=int(item.get("l", 1)),
                value=int(item["value"]),
                provenance=item["provenance"],
                **_parse_selector(item),
            )
            for item in raw["entries"]
        ]
        claims = [
            Claim(
                name=item["name"],
                q=int(item["q"]),
                n_max=int(item["n_max"]),
                slope=Fraction(str(item["slope"])),
                provenance=item["provenance"],
            )
            for item in raw.get("claims", [])
        ]
        table = KnownValues(version=str(raw["version"]), entries=entries, claims=claims, source=path)
    except (KeyError, TypeError, ValueError) as exc:
        raise TableFormatError(f"{path}: malformed entry ({exc})") from exc

    table.validate()
    logger.info(f"✅ Loaded constants table v{table.version} ({len(entries)} entries) from {path}")
    return table


_DEFAULT: Dict[str, KnownValues] = {}


def default_table() -> KnownValues:
    """Process-wide table for the current MURANK_TABLE setting."""
    path = config.table_path()
    if path not in _DEFAULT:
        _DEFAULT[path] = load_known_values(path)
    return _DEFAULT[path]
