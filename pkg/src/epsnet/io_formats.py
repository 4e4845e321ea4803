"""Exact JSON files: point sets, schema-versioned reports, input digests.

All rationals cross the file boundary as integers or "p/q" strings, never
as binary floats, so a write followed by a read returns the same exact
coordinates.  Every writer is deterministic (sorted keys, fixed indent,
trailing newline) and atomic (temp file plus rename).
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from fractions import Fraction
from typing import Any, Mapping, Optional, Sequence, Union

from .gadgets import CertificationReport, CertifiedClaim, GadgetInstance
from .geometry import Halfspace, HPolytope, Hyperplane, Point, PointSet, SubsetHull
from .ranges import BoxRange, EpsilonProfile, WeightedNet
from .verification import VerificationReport, Violation

REPORT_SCHEMA = "epsnet-report/1"
CLAIMS_SCHEMA = "epsnet-claims/1"

_SCHEMA_FILE = os.path.join(os.path.dirname(__file__), "schemas", "report.schema.json")


# ---------------------------------------------------------------------------
# rationals


def fraction_to_json(x: Fraction) -> Union[int, str]:
    """Integers stay JSON numbers; everything else becomes "p/q"."""
    x = Fraction(x)
    if x.denominator == 1:
        return int(x)
    return f"{x.numerator}/{x.denominator}"


def json_to_fraction(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise ValueError("booleans are not coordinates")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {value!r}") from None
        except ValueError:
            raise ValueError(f"not a rational literal: {value!r}") from None
    if isinstance(value, float):
        # reachable only when a caller bypasses read_pointset's exact parse
        raise ValueError("binary floats are not accepted; use 'p/q' strings")
    raise ValueError(f"not a rational literal: {value!r}")


def point_to_json(p: Point) -> list:
    return [fraction_to_json(c) for c in p]


# ---------------------------------------------------------------------------
# point-set files


def read_pointset(path: str) -> PointSet:
    """Load a {"dim": d, "points": [[...], ...]} document exactly.

    Decimal number literals parse straight to Fraction, so "0.1" in the
    file means one tenth, not the nearest double.
    """
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh, parse_float=Fraction)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise ValueError(f"{path}: expected a JSON object")
    dim = doc.get("dim")
    rows = doc.get("points")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ValueError(f"{path}: 'dim' must be a positive integer")
    if not isinstance(rows, list) or not rows:
        raise ValueError(f"{path}: 'points' must be a nonempty array")
    points = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise ValueError(f"{path}: row {i} does not have {dim} entries")
        try:
            points.append(tuple(json_to_fraction(c) for c in row))
        except ValueError as exc:
            raise ValueError(f"{path}: row {i}: {exc}") from None
    return PointSet(dim, tuple(points))


def pointset_document(P: PointSet, extra: Optional[Mapping[str, Any]] = None) -> dict:
    doc = dict(extra) if extra else {}
    doc["dim"] = P.dim
    doc["points"] = [point_to_json(p) for p in P.points]
    return doc


def write_pointset(
    path: str, P: PointSet, extra: Optional[Mapping[str, Any]] = None
) -> None:
    write_json_atomic(path, pointset_document(P, extra))


def pointset_digest(P: PointSet) -> str:
    """Content digest of the exact coordinates, independent of the file."""
    canonical = dumps_json({"dim": P.dim, "points": [point_to_json(p) for p in P.points]})
    return "sha256:" + hashlib.sha256(canonical.encode("utf-8")).hexdigest()


# ---------------------------------------------------------------------------
# deterministic JSON output


def dumps_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_json_atomic(path: str, obj: Any) -> None:
    write_text_atomic(path, dumps_json(obj))


def write_text_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".epsnet-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# ---------------------------------------------------------------------------
# report fragments


def profile_to_json(profile: EpsilonProfile) -> list:
    return [fraction_to_json(e) for e in profile.eps]


def net_to_json(net: WeightedNet) -> dict:
    return {
        "points": [point_to_json(p) for p in net.points],
        "epsilon": profile_to_json(net.profile),
    }


def _witness_to_json(witness: Union[BoxRange, SubsetHull]) -> dict:
    if isinstance(witness, BoxRange):
        return {
            "kind": "box",
            "intervals": [
                [fraction_to_json(lo), fraction_to_json(hi)]
                for lo, hi in witness.intervals
            ],
        }
    return {"kind": "subset-hull", "indices": list(witness.indices)}


def violation_to_json(v: Violation) -> dict:
    return {
        "level": v.level,
        "net_count": v.net_count,
        "point_count": v.point_count,
        "witness": _witness_to_json(v.witness),
    }


def verification_to_json(rep: VerificationReport, timing: bool = False) -> dict:
    doc = {
        "ranges": rep.kind.value,
        "n": rep.n,
        "epsilon": profile_to_json(rep.profile),
        "verdicts": list(rep.verdicts),
        "passed": rep.passed,
        "violations": [violation_to_json(v) for v in rep.violations],
        "total_violations": rep.total_violations,
        "ranges_examined": rep.ranges_examined,
    }
    if timing:
        doc["elapsed_seconds"] = round(rep.elapsed, 6)
    return doc


def certification_to_json(report: CertificationReport) -> dict:
    return {
        "gadget": report.gadget,
        "passed": report.passed,
        "claims": [
            {
                "kind": r.claim.kind.value,
                "label": r.claim.label,
                "passed": r.passed,
                "detail": r.detail,
            }
            for r in report.results
        ],
    }


def _body_to_json(body) -> dict:
    if isinstance(body, SubsetHull):
        return {"kind": "subset-hull", "indices": list(body.indices)}
    if isinstance(body, HPolytope):
        return {
            "kind": "halfspace-intersection",
            "halfspaces": [
                {
                    "normal": point_to_json(h.normal),
                    "offset": fraction_to_json(h.offset),
                    "closed": h.closed,
                }
                for h in body.halfspaces
            ],
        }
    raise ValueError(f"unknown witness body {body!r}")


def _claim_to_json(claim: CertifiedClaim) -> dict:
    doc: dict[str, Any] = {
        "kind": claim.kind.value,
        "label": claim.label,
        "witnesses": list(claim.witnesses),
    }
    if claim.probes:
        doc["probes"] = [point_to_json(q) for q in claim.probes]
    if claim.hyperplane is not None:
        doc["hyperplane"] = {
            "normal": point_to_json(claim.hyperplane.normal),
            "offset": fraction_to_json(claim.hyperplane.offset),
        }
        doc["side"] = claim.side
    if claim.expected is not None:
        doc["expected"] = claim.expected
    if claim.kind.value == "membership":
        doc["contains"] = claim.contains
    if claim.kind.value == "oracle-threshold":
        doc["threshold"] = claim.threshold
        doc["trials"] = claim.trials
        doc["seed"] = claim.seed
    return doc


def claims_document(instance: GadgetInstance) -> dict:
    """Sidecar describing a gadget's witnesses and claims, for replay."""
    return {
        "schema": CLAIMS_SCHEMA,
        "gadget": instance.name,
        "parameters": {
            k: fraction_to_json(v) if isinstance(v, Fraction) else v
            for k, v in sorted(instance.parameters.items())
        },
        "witnesses": {
            name: _body_to_json(body)
            for name, body in sorted(instance.witnesses.items())
        },
        "claims": [_claim_to_json(c) for c in instance.claims],
    }


# ---------------------------------------------------------------------------
# report documents


def make_report(command: Sequence[str], P: Optional[PointSet] = None, **sections) -> dict:
    doc: dict[str, Any] = {"schema": REPORT_SCHEMA, "command": list(command)}
    if P is not None:
        doc["input"] = {"digest": pointset_digest(P), "n": P.n, "dim": P.dim}
    for key, value in sections.items():
        if value is not None:
            doc[key] = value
    return doc


def load_report_schema() -> dict:
    with open(_SCHEMA_FILE, "r", encoding="utf-8") as fh:
        return json.load(fh)


def validate_report(doc: Mapping[str, Any]) -> None:
    """Raise jsonschema.ValidationError when the document is malformed."""
    import jsonschema

    jsonschema.validate(doc, load_report_schema())
