"""JSON and text rendering of analysis reports.

Orders are decimal strings.  ``timestamp`` is the only field that varies
between runs on the same input.
"""

from __future__ import annotations

import datetime as _dt
import hashlib
import json

from . import __version__
from .autstruct import (
    AutReport,
    FusionData,
    StabilizerSubgroup,
    centralizer_order,
    prime_power_complement_report,
)
from .numtheory import factorize
from .repdecomp import CyclotomicClass, DecompositionData, KernelActionSpec

VOLATILE_KEYS = ("timestamp",)


def stable_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def spec_hash(spec: KernelActionSpec) -> str:
    return hashlib.sha256(stable_json(spec.to_dict()).encode()).hexdigest()


def _utc_now() -> str:
    return _dt.datetime.now(_dt.timezone.utc).replace(microsecond=0).isoformat()


def _component_doc(data: DecompositionData, fu: FusionData, homogeneous: bool, m_irr: bool, cent: int) -> dict:
    return {
        "p": data.p,
        "f": data.f,
        "d": data.d,
        "t": data.t,
        "classes": [{"rep": c.rep, "elements": list(c.elements), "e": e} for c, e in data.classes],
        "notes": list(data.notes),
        "homogeneous": homogeneous,
        "m_irreducible": m_irr,
        "centralizer_order": str(cent),
        "fusion": {
            "ell": fu.ell,
            "s": fu.s,
            "field_auto_order": fu.field_auto_order,
            "orbits": [list(o) for o in fu.orbits],
            "e_per_orbit": list(fu.e_per_orbit),
        },
    }


def render(report: AutReport, timestamp: str | None = None) -> dict:
    doc = {
        "tool": {"name": "frobaut", "version": __version__},
        "spec_sha256": spec_hash(report.spec),
        "timestamp": timestamp if timestamp is not None else _utc_now(),
        "spec": report.spec.to_dict(),
        "components": [
            _component_doc(d, fu, h, m, centralizer_order(d))
            for d, fu, h, m in zip(report.components, report.fusions, report.homogeneous, report.m_irreducible)
        ],
        "stabilizer": {
            "n": report.stabilizer.n,
            "elements": list(report.stabilizer.elements),
            "order": report.stabilizer.order,
            "invariants": list(report.stabilizer.invariants),
        },
        "centralizer_order": str(report.centralizer_order),
        "normalizer_order": str(report.normalizer_order),
        "kernel_order": str(report.kernel_order),
        "aut_order": str(report.aut_order),
        "structure": report.structure,
    }
    if len(report.components) == 1 and len(factorize(report.spec.n)) == 1:
        doc["prime_power"] = str(prime_power_complement_report(report.spec))
    return doc


def parse(doc: dict) -> AutReport:
    """Inverse of :func:`render` (provenance fields are dropped)."""
    spec = KernelActionSpec.from_dict(doc["spec"])
    n = spec.n
    comps, fusions = [], []
    for c in doc["components"]:
        classes = tuple(
            (CyclotomicClass(n, c["p"], k["rep"], tuple(k["elements"])), k["e"]) for k in c["classes"])
        comps.append(DecompositionData(c["p"], n, c["f"], classes, tuple(c["notes"])))
        fu = c["fusion"]
        fusions.append(FusionData(fu["ell"], fu["s"], fu["field_auto_order"],
                                  tuple(tuple(o) for o in fu["orbits"]), tuple(fu["e_per_orbit"])))
    st = doc["stabilizer"]
    return AutReport(
        spec=spec,
        components=tuple(comps),
        fusions=tuple(fusions),
        stabilizer=StabilizerSubgroup(st["n"], tuple(st["elements"])),
        centralizer_order=int(doc["centralizer_order"]),
        normalizer_order=int(doc["normalizer_order"]),
        kernel_order=int(doc["kernel_order"]),
        aut_order=int(doc["aut_order"]),
        homogeneous=tuple(c["homogeneous"] for c in doc["components"]),
        m_irreducible=tuple(c["m_irreducible"] for c in doc["components"]),
        structure=doc["structure"],
    )


def flatten(obj, prefix="") -> list[tuple[str, object]]:
    if isinstance(obj, dict):
        out = []
        for k in sorted(obj):
            out.extend(flatten(obj[k], f"{prefix}.{k}" if prefix else k))
        return out
    if isinstance(obj, list) and any(isinstance(x, (dict, list)) for x in obj):
        out = []
        for i, x in enumerate(obj):
            out.extend(flatten(x, f"{prefix}[{i}]"))
        return out
    return [(prefix, obj)]


def _text_value(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(str(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render_text(doc: dict) -> str:
    """Header with the structure, then one ``key: value`` line per leaf of the document."""
    lines = [f"Aut(G) = {doc['structure']}", f"|Aut(G)| = {doc['aut_order']}", ""]
    lines.extend(f"{k}: {_text_value(v)}" for k, v in flatten(doc))
    return "\n".join(lines) + "\n"


def strip_volatile(doc: dict) -> dict:
    return {k: v for k, v in doc.items() if k not in VOLATILE_KEYS}
