"""
Bound certificates: the route taken, every inequality instance it relied on
and every table value it consumed. Serialised as JSON for audit and recheck.
"""

import json
import logging
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

from constants.arithmetic import fmt_rational, parse_rational
from constants.registry import UsedEntry
from errors import TableFormatError
from fields.prime_power import prime_power
from towers.ids import Family, TowerId

logger = logging.getLogger(__name__)

# --- Route kinds ---
EXACT_SMALL_N = "exact-small-n"
SHOKROLLAHI = "shokrollahi-sym-reference"
CLOSED_FORM = "closed-form-theorem"
PHI_ON_TOWER = "phi-on-tower"
GENERAL_CC = "general-cc-direct"

ROUTE_KINDS = (EXACT_SMALL_N, SHOKROLLAHI, CLOSED_FORM, PHI_ON_TOWER, GENERAL_CC)

RELATIONS: Dict[str, Callable[[Fraction, Fraction], bool]] = {
    "<=": operator.le,
    "<": operator.lt,
    ">=": operator.ge,
    ">": operator.gt,
    "==": operator.eq,
}


@dataclass(frozen=True)
class Premise:
    """One named inequality instance lhs <relation> rhs."""
    name: str
    lhs: Fraction
    rhs: Fraction
    relation: str

    def holds(self) -> bool:
        check = RELATIONS.get(self.relation)
        return check is not None and check(self.lhs, self.rhs)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "lhs": fmt_rational(self.lhs),
            "rhs": fmt_rational(self.rhs),
            "relation": self.relation,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Premise":
        return cls(str(data["name"]), parse_rational(data["lhs"]),
                   parse_rational(data["rhs"]), str(data["relation"]))


def premise(name: str, lhs, rhs, relation: str) -> Premise:
    return Premise(name, Fraction(lhs), Fraction(rhs), relation)


@dataclass(frozen=True)
class BoundRoute:
    kind: str
    d: int = 1
    tower: Optional[TowerId] = None
    step: Optional[Tuple[int, Optional[int]]] = None
    branch: Optional[str] = None
    parameters: Dict[str, Fraction] = field(default_factory=dict)
    provenance: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "d": self.d,
            "tower": None if self.tower is None else {"family": self.tower.family.value,
                                                      "q": self.tower.q.q},
            "step": None if self.step is None else list(self.step),
            "branch": self.branch,
            "parameters": {k: fmt_rational(v) for k, v in self.parameters.items()},
            "provenance": self.provenance,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BoundRoute":
        tower = data.get("tower")
        step = data.get("step")
        return cls(
            kind=str(data["kind"]),
            d=int(data.get("d", 1)),
            tower=None if tower is None else TowerId(Family(tower["family"]), prime_power(int(tower["q"]))),
            step=None if step is None else (int(step[0]), None if step[1] is None else int(step[1])),
            branch=data.get("branch"),
            parameters={k: parse_rational(v) for k, v in data.get("parameters", {}).items()},
            provenance=str(data.get("provenance", "")),
        )


@dataclass
class BoundCertificate:
    q: int
    n: int
    value: Fraction
    value_floor: int
    route: BoundRoute
    premises: List[Premise] = field(default_factory=list)
    table_entries_used: List[UsedEntry] = field(default_factory=list)

    @property
    def kind(self) -> str:
        return self.route.kind

    def to_dict(self) -> Dict[str, Any]:
        return {
            "q": self.q,
            "n": self.n,
            "value": fmt_rational(self.value),
            "value_floor": self.value_floor,
            "route": self.route.to_dict(),
            "premises": [p.to_dict() for p in self.premises],
            "table_entries_used": [e.to_dict() for e in self.table_entries_used],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BoundCertificate":
        try:
            return cls(
                q=int(data["q"]),
                n=int(data["n"]),
                value=parse_rational(data["value"]),
                value_floor=int(data["value_floor"]),
                route=BoundRoute.from_dict(data["route"]),
                premises=[Premise.from_dict(p) for p in data.get("premises", [])],
                table_entries_used=[UsedEntry.from_dict(e) for e in data.get("table_entries_used", [])],
            )
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise TableFormatError(f"malformed certificate: {exc}") from exc


def make_certificate(q: int, n: int, value: Fraction, route: BoundRoute,
                     premises: List[Premise], entries: List[UsedEntry]) -> BoundCertificate:
    value = Fraction(value)
    return BoundCertificate(q=q, n=n, value=value, value_floor=value.numerator // value.denominator,
                            route=route, premises=list(premises), table_entries_used=dedupe(entries))


def dedupe(entries: List[UsedEntry]) -> List[UsedEntry]:
    seen = set()
    out = []
    for e in entries:
        if e.key not in seen:
            seen.add(e.key)
            out.append(e)
    return out


def certificate_to_dict(cert: BoundCertificate) -> Dict[str, Any]:
    return cert.to_dict()


def certificate_from_dict(data: Dict[str, Any]) -> BoundCertificate:
    return BoundCertificate.from_dict(data)


def save_certificate(cert: BoundCertificate, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(cert.to_dict(), fh, indent=2)
    logger.info(f"✅ Certificate for mu_{cert.q}({cert.n}) written to {path}")


def load_certificate(path: str) -> BoundCertificate:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise TableFormatError(f"{path}: {exc}") from exc
    return BoundCertificate.from_dict(data)
