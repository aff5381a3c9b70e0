"""Text and JSON renderings of charsets, decompositions and certifications."""

import json
from dataclasses import dataclass
from fractions import Fraction

from .mzdecomp import TRIANGULAR, UNRESOLVED, Component, Strategy
from .parser import parse_polynomial
from .polyring import VarOrder


def fmt_point(point):
    return "(" + ", ".join(str(Fraction(c)) for c in point) + ")"


def _yes(flag):
    return "yes" if flag else "no"


# ---- charset ---------------------------------------------------------------

def charset_text(outcome):
    lines = []
    if outcome.inconsistent:
        lines.append("inconsistent: the system has no zeros")
        lines.append(f"  contradictory set [{outcome.charset[0]}]")
        return "\n".join(lines) + "\n"
    lines.append("characteristic set:")
    for i, c in enumerate(outcome.charset, start=1):
        lines.append(f"  C{i} = {c}")
    lines.append("initials:")
    for i, init in enumerate(outcome.initials, start=1):
        lines.append(f"  I{i} = {init}")
    return "\n".join(lines) + "\n"


def charset_json(order, outcome):
    return {
        "vars": list(order.names),
        "charset": [str(c) for c in outcome.charset],
        "initials": [str(i) for i in outcome.initials],
        "inconsistent": outcome.inconsistent,
    }


# ---- decomposition ---------------------------------------------------------

def strategy_text(strategy):
    flags = strategy.as_dict()
    return ", ".join(f"{k}={'on' if v else 'off'}" for k, v in flags.items())


def _component_lines(comp, label):
    sym = "T" if comp.kind == TRIANGULAR else "S"
    lines = [f"  [{label}] {sym} = [{', '.join(str(f) for f in comp.polys)}]",
             f"      P = {comp.saturation}"]
    for step in comp.provenance:
        lines.append(f"      via {step}")
    return lines


def decomposition_text(result, verbose=False):
    lines = [f"bound m = {result.bound_used}", f"strategy: {strategy_text(result.strategy)}"]
    lines.append(f"SET2 (triangular components): {len(result.set2)}")
    for k, comp in enumerate(result.set2, start=1):
        lines.extend(_component_lines(comp, k)[: None if verbose else 2])
    lines.append(f"SET3 (unresolved components): {len(result.set3)}")
    for k, comp in enumerate(result.set3, start=len(result.set2) + 1):
        lines.extend(_component_lines(comp, k)[: None if verbose else 2])
    if result.log:
        lines.append("notes:")
        lines.extend(f"  {note}" for note in result.log)
    return "\n".join(lines) + "\n"


def _zero_json(z):
    return {
        "point": [str(Fraction(c)) for c in z.point],
        "multiplicity": z.multiplicity,
        "certified": z.certified,
    }


def decomposition_json(order, result, cert):
    """Document with ``vars, bound, strategy, components, summary``."""
    comps = []
    for rep in cert.components:
        comp = rep.component
        comps.append({
            "kind": comp.kind,
            "polys": [str(f) for f in comp.polys],
            "saturation": str(comp.saturation),
            "provenance": list(comp.provenance),
            "rationalZeros": [_zero_json(z) for z in rep.zeros],
        })
    return {
        "vars": list(order.names),
        "bound": result.bound_used,
        "strategy": result.strategy.as_dict(),
        "components": comps,
        "summary": {
            "certifiedCount": cert.certified_count,
            "completeness": cert.completeness,
            "total": cert.total,
            "disjoint": cert.disjoint,
        },
    }


def dumps(doc):
    return json.dumps(doc, indent=2)


@dataclass
class ParsedZero:
    point: tuple
    multiplicity: int
    certified: bool


@dataclass
class ParsedDocument:
    order: VarOrder
    bound: int
    strategy: Strategy
    components: list
    zeros: list
    """One list of ParsedZero per component."""
    summary: dict


_STRATEGY_KEYS = {"prop3": "prop3", "factorInitials": "factor_initials",
                  "updateBound": "update_bound", "splitComponents": "split_components"}


def parse_decomposition_json(text_or_doc):
    """Inverse of :func:`decomposition_json` (paths are not serialised)."""
    doc = json.loads(text_or_doc) if isinstance(text_or_doc, str) else text_or_doc
    order = VarOrder(doc["vars"])
    strategy = Strategy(**{_STRATEGY_KEYS[k]: bool(v) for k, v in doc["strategy"].items()})
    comps, zeros = [], []
    for entry in doc["components"]:
        if entry["kind"] not in (TRIANGULAR, UNRESOLVED):
            raise ValueError(f"unknown component kind {entry['kind']!r}")
        polys = tuple(parse_polynomial(s, order) for s in entry["polys"])
        sat = parse_polynomial(entry["saturation"], order)
        comps.append(Component(polys, sat, entry["kind"], tuple(entry["provenance"])))
        zeros.append([ParsedZero(tuple(Fraction(c) for c in z["point"]), z["multiplicity"], z["certified"])
                      for z in entry["rationalZeros"]])
    return ParsedDocument(order, doc["bound"], strategy, comps, zeros, dict(doc["summary"]))


# ---- certification ---------------------------------------------------------

def certification_text(cert):
    header = f"{'comp':>4}  {'kind':<10}  {'point':<24}  {'mult(PS)':>8}  {'mult(comp)':>10}  certified"
    lines = [header, "-" * len(header)]
    for rep in cert.components:
        for z in rep.zeros:
            lines.append(f"{rep.index + 1:>4}  {rep.component.kind:<10}  {fmt_point(z.point):<24}  "
                         f"{z.multiplicity:>8}  {z.component_multiplicity:>10}  {_yes(z.certified)}")
    if not cert.zeros:
        lines.append("  (no rational zeros)")
    lines.append("")
    lines.append("per component:")
    for rep in cert.components:
        rational = sum(z.multiplicity for z in rep.zeros)
        parts = [f"rational {rational}"]
        if rep.degree_count is not None:
            parts.append(f"degree count {rep.degree_count}")
            other = rep.degree_count - rational
            if other:
                parts.append(f"{other} non-rational by degree count")
        if not rep.complete:
            parts.append("has factors without rational roots")
        lines.append(f"  [{rep.index + 1}] {rep.component.kind}: " + ", ".join(parts))
    lines.append("")
    total = cert.total
    lines.append(f"certified rational zeros with multiplicity: {cert.certified_count}")
    lines.append(f"total zeros with multiplicity: {total if total is not None else 'unknown'}"
                 f" (bound m = {cert.bound})")
    lines.append(f"all rational zeros certified: {_yes(cert.all_certified)}")
    lines.append(f"rational zeros of PS each in exactly one component: {_yes(cert.disjoint)}")
    lines.append(f"rational enumeration complete: {_yes(cert.completeness)}")
    return "\n".join(lines) + "\n"


def multiplicity_json(db):
    return {
        "point": [str(c) for c in db.point],
        "multiplicity": db.dimension,
        "sigma": db.sigma,
        "dims": db.dims,
    }
