"""Cusped census records and the elimination pipeline.

Each record is a two-cusped hyperbolic manifold that might be the exterior
of a pattern link.  The pipeline rules them out one by one with cheap
homological and filling-based tests; whatever is left is a genuine
candidate.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from typing import Iterable, Optional

from .errors import DuplicateName, InconsistentRecord, MalformedRecord
from .homology import FgAbelianGroup, is_finite


@dataclass(frozen=True)
class LinkId:
    link_name: str
    linking_number: int


@dataclass(frozen=True)
class FreeObstruction:
    ab: tuple
    alt_h1: FgAbelianGroup


@dataclass(frozen=True)
class CensusRecord:
    name: str
    volume: str
    h1: FgAbelianGroup
    link: Optional[LinkId] = None
    solid_torus_fillings: tuple = ()
    free_obstruction: Optional[FreeObstruction] = None

    @property
    def volume_value(self):
        return Decimal(self.volume)

    def to_json(self):
        return {
            "name": self.name,
            "volume": self.volume,
            "h1": self.h1.to_json(),
            "link": None if self.link is None else
            {"link_name": self.link.link_name, "linking_number": self.link.linking_number},
            "solid_torus_fillings": [[list(ab) for ab in cusp] for cusp in self.solid_torus_fillings],
            "free_obstruction": None if self.free_obstruction is None else
            {"ab": list(self.free_obstruction.ab), "alt_h1": self.free_obstruction.alt_h1.to_json()},
        }

    def to_line(self):
        return json.dumps(self.to_json(), separators=(",", ":"))


class Rule(enum.Enum):
    SURVIVOR = "survivor"
    TORSION = "torsion"
    LINKING = "linking"
    BERGE_GABAI = "berge_gabai"
    FINITE_FILLING = "finite_filling"
    OUT_OF_RANGE = "out_of_range"


@dataclass(frozen=True)
class Verdict:
    rule: Rule
    linking_number: Optional[int] = None  # |w| for LINKING
    ab: Optional[tuple] = None  # filling used for FINITE_FILLING

    def to_json(self):
        d = {"verdict": self.rule.value}
        if self.linking_number is not None:
            d["linking_number"] = self.linking_number
        if self.ab is not None:
            d["ab"] = list(self.ab)
        return d


def _group(obj, what):
    if not isinstance(obj, dict) or set(obj) != {"rank", "torsion"}:
        raise ValueError(f"{what} must be an object with rank and torsion")
    rank, tors = obj["rank"], obj["torsion"]
    if not isinstance(rank, int) or rank < 0 or not isinstance(tors, list) \
            or not all(isinstance(t, int) and t >= 0 for t in tors):
        raise ValueError(f"bad {what}")
    return FgAbelianGroup(rank, tuple(tors))


def _pair(obj, what):
    if not (isinstance(obj, list) and len(obj) == 2 and all(isinstance(x, int) for x in obj)):
        raise ValueError(f"{what} must be a pair of integers")
    if obj == [0, 0]:
        raise ValueError(f"{what} cannot be (0, 0)")
    return tuple(obj)


def record_from_json(obj):
    if not isinstance(obj, dict):
        raise ValueError("record must be a JSON object")
    required = {"name", "volume", "h1", "link", "solid_torus_fillings", "free_obstruction"}
    missing = required - set(obj)
    if missing:
        raise ValueError(f"missing fields {sorted(missing)}")
    name = obj["name"]
    if not isinstance(name, str) or not name:
        raise ValueError("name must be a non-empty string")
    vol = obj["volume"]
    try:
        if not isinstance(vol, str) or not Decimal(vol) > 0:
            raise ValueError
    except (InvalidOperation, ValueError):
        raise ValueError(f"volume {vol!r} is not a positive decimal string") from None

    link = obj["link"]
    if link is not None:
        if not isinstance(link, dict) or not isinstance(link.get("link_name"), str) \
                or not isinstance(link.get("linking_number"), int):
            raise ValueError("link must be null or {link_name, linking_number}")
        link = LinkId(link["link_name"], link["linking_number"])

    cusps = obj["solid_torus_fillings"]
    if not isinstance(cusps, list) or not all(isinstance(c, list) for c in cusps):
        raise ValueError("solid_torus_fillings must be a list of per-cusp lists")
    fillings = tuple(tuple(_pair(ab, "filling") for ab in c) for c in cusps)

    fo = obj["free_obstruction"]
    if fo is not None:
        if not isinstance(fo, dict) or set(fo) != {"ab", "alt_h1"}:
            raise ValueError("free_obstruction must be null or {ab, alt_h1}")
        fo = FreeObstruction(_pair(fo["ab"], "ab"), _group(fo["alt_h1"], "alt_h1"))

    return CensusRecord(name, vol, _group(obj["h1"], "h1"), link, fillings, fo)


def parse_census(stream: Iterable[str]):
    """Read JSON-lines census records in file order.  Blank lines are skipped."""
    records, seen = [], set()
    for lineno, line in enumerate(stream, 1):
        if not line.strip():
            continue
        try:
            rec = record_from_json(json.loads(line))
        except (json.JSONDecodeError, ValueError) as exc:
            raise MalformedRecord(lineno, str(exc)) from None
        if rec.name in seen:
            raise DuplicateName(rec.name)
        seen.add(rec.name)
        records.append(rec)
    return records


def load_census(path):
    with open(path, encoding="utf-8") as f:
        return parse_census(f)


def eliminate(r: CensusRecord) -> Verdict:
    """Apply the rules in fixed order; the first that fires decides."""
    if r.h1.has_torsion:
        return Verdict(Rule.TORSION)
    if r.link is not None and r.link.linking_number != 0:
        return Verdict(Rule.LINKING, linking_number=abs(r.link.linking_number))
    if any(len(set(cusp)) >= 2 for cusp in r.solid_torus_fillings):
        return Verdict(Rule.BERGE_GABAI)
    fo = r.free_obstruction
    if fo is not None:
        if not is_finite(fo.alt_h1):
            raise InconsistentRecord(
                f"{r.name}: filling {fo.ab} is claimed to obstruct but its homology {fo.alt_h1} is infinite")
        return Verdict(Rule.FINITE_FILLING, ab=fo.ab)
    return Verdict(Rule.SURVIVOR)


@dataclass
class PipelineReport:
    v_cap: str
    verdicts: dict
    survivors: list

    def counts(self):
        out = {}
        for v in self.verdicts.values():
            out[v.rule.value] = out.get(v.rule.value, 0) + 1
        return out

    def to_json(self):
        return {
            "v_cap": self.v_cap,
            "verdicts": {k: v.to_json() for k, v in self.verdicts.items()},
            "survivors": list(self.survivors),
            "counts": self.counts(),
        }


def run_pipeline(records, v_cap):
    """Judge every record with volume strictly below ``v_cap``."""
    cap = Decimal(str(v_cap))
    verdicts = {}
    for r in records:
        verdicts[r.name] = eliminate(r) if r.volume_value < cap else Verdict(Rule.OUT_OF_RANGE)
    by_name = dict(sorted(verdicts.items()))
    vol = {r.name: r.volume_value for r in records}
    survivors = sorted((n for n, v in by_name.items() if v.rule is Rule.SURVIVOR),
                       key=lambda n: (vol[n], n))
    return PipelineReport(str(v_cap), by_name, survivors)


def format_report(report, records=None):
    vol = {r.name: r.volume for r in records or ()}
    rows = []
    for name, v in report.verdicts.items():
        detail = ""
        if v.linking_number is not None:
            detail = f"|w| = {v.linking_number}"
        elif v.ab is not None:
            detail = f"(a,b) = ({v.ab[0]}, {v.ab[1]})"
        rows.append((name, vol.get(name, ""), v.rule.value, detail))
    rows.sort(key=lambda r: (r[1], r[0]))
    w = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(("name", "volume", "verdict", "detail"))]
    lines = ["  ".join(h.ljust(x) for h, x in zip(("name", "volume", "verdict", "detail"), w)).rstrip()]
    lines += ["  ".join(c.ljust(x) for c, x in zip(r, w)).rstrip() for r in rows]
    lines.append(f"survivors below {report.v_cap}: {', '.join(report.survivors) or 'none'}")
    return "\n".join(lines)
