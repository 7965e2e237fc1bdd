"""Facet-list files and report rendering.

A facet file holds one facet per line as whitespace-separated vertex labels.
``#`` starts a comment running to the end of the line; blank lines are
ignored. All lines must have the same width, 3 (a surface) or 4 (a
3-complex).
"""
from __future__ import annotations

import json
from fractions import Fraction

from .complex import SimplicialComplex, from_facets
from .errors import BadDimension, DegenerateFacet, InvalidLabel, MixedDimension, ParseError
from .invariants import AnalysisReport, FVectorStats, MinimalSurfaceFamily
from .normality import NormalityReport


def parse_facet_file(text: str) -> SimplicialComplex:
    rows, lines = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if len(tokens) not in (3, 4):
            if rows and len(tokens) != len(rows[0]):
                raise MixedDimension(
                    f"line {lineno}: {len(tokens)} labels, expected {len(rows[0])}", row=lineno
                )
            raise ParseError(f"{len(tokens)} labels; facets need 3 or 4", line=lineno)
        if rows and len(tokens) != len(rows[0]):
            raise MixedDimension(
                f"line {lineno}: {len(tokens)} labels, expected {len(rows[0])}", row=lineno
            )
        rows.append(tokens)
        lines.append(lineno)
    if not rows:
        raise ParseError("no facets found")
    try:
        return from_facets(rows)
    except DegenerateFacet as exc:
        raise DegenerateFacet(f"line {lines[exc.row]}: {exc}", row=lines[exc.row]) from None
    except (InvalidLabel, BadDimension) as exc:
        raise ParseError(str(exc)) from None


def dump_facets(K: SimplicialComplex) -> str:
    """Facet file text, rows sorted by label sequence."""
    return "".join(" ".join(row) + "\n" for row in K.rows())


def decimal_string(x: Fraction, places: int = 6) -> str:
    """Round half-to-even at ``places`` decimals, computed exactly."""
    scaled = round(x * 10**places)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"


def _rational(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator, "decimal": decimal_string(x)}


def _rational_text(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator} (≈{decimal_string(x)})"


def normality_document(K: SimplicialComplex, report: NormalityReport) -> dict:
    return {
        "verdict": report.verdict.value,
        "connected": report.connected,
        "violations": {
            "ridges": [{"triangle": list(K.labels_of(t)), "facets": c} for t, c in report.ridge_violations],
            "edge_links_disconnected": [list(K.labels_of(e)) for e in report.edge_link_disconnected],
            "vertex_links_disconnected": [K.labels[v] for v in report.vertex_link_disconnected],
        },
    }


def report_document(report: AnalysisReport) -> dict:
    K, f = report.complex, report.fvec
    return {
        "f_vector": {"V": f.V, "E": f.E, "F": f.F, "T": f.T},
        "mu0": _rational(report.mu0),
        "g2": report.g2,
        "g3": report.g3,
        "normality": normality_document(K, report.normality),
        "singular_vertices": [
            {
                "label": K.labels[v],
                "orientable": c.orientable,
                "genus_or_crosscaps": c.genus_or_crosscaps,
                "chi": c.chi,
            }
            for v, c in report.singularities.vertices
        ],
        "identities": [{"name": n, "holds": ok} for n, ok in report.identities],
        "bounds": [{"name": n, "holds": ok} for n, ok in report.bounds],
        "verdict": {
            "case_tag": report.verdict.case_tag.value,
            "tags": [t.value for t in report.verdict.tags],
            "narrative": report.verdict.narrative,
        },
    }


def _check_lines(pairs) -> list[str]:
    return [f"  [{'ok' if ok else 'FAIL'}] {name}" for name, ok in pairs]


def render_report(report: AnalysisReport, format: str = "text") -> str:
    if format == "json":
        return json.dumps(report_document(report), indent=2, ensure_ascii=False) + "\n"
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    K, f = report.complex, report.fvec
    lines = [
        f"f_vector = ({f.V},{f.E},{f.F},{f.T})",
        f"mu0 = {_rational_text(report.mu0)}",
        f"g2 = {report.g2}",
        f"g3 = {report.g3}",
        f"normality: {report.normality.verdict.value}",
        f"singular vertices: {report.singularities.n}",
    ]
    for v, c in report.singularities.vertices:
        kind = f"orientable, genus {c.genus_h}" if c.orientable else f"non-orientable, crosscaps {c.crosscaps_m}"
        lines.append(f"  {K.labels[v]}: {c.name} ({kind}, chi={c.chi})")
    lines.append("identities:")
    lines += _check_lines(report.identities)
    lines.append("bounds:")
    lines += _check_lines(report.bounds)
    tags = " + ".join(t.value for t in report.verdict.tags)
    lines.append(f"verdict: {tags}")
    if report.verdict.narrative:
        lines.append(f"  {report.verdict.narrative}")
    return "\n".join(lines) + "\n"


def render_normality(K: SimplicialComplex, report: NormalityReport, format: str = "text") -> str:
    doc = normality_document(K, report)
    if format == "json":
        return json.dumps(doc, indent=2) + "\n"
    v = doc["violations"]
    lines = [f"verdict: {doc['verdict']}", f"connected: {str(doc['connected']).lower()}"]
    for r in v["ridges"]:
        lines.append(f"  triangle {' '.join(r['triangle'])} in {r['facets']} facets")
    for e in v["edge_links_disconnected"]:
        lines.append(f"  edge {' '.join(e)} has a disconnected link")
    for x in v["vertex_links_disconnected"]:
        lines.append(f"  vertex {x} has a disconnected link")
    return "\n".join(lines) + "\n"


def stats_document(s: FVectorStats) -> dict:
    f = s.fvec
    return {
        "f_vector": {"V": f.V, "E": f.E, "F": f.F, "T": f.T},
        "mu0": _rational(s.mu0),
        "g2": s.g2,
        "g3": s.g3,
        "two_neighborly": s.two_neighborly,
        "three_neighborly": s.three_neighborly,
    }


def render_stats(s: FVectorStats, format: str = "text") -> str:
    if format == "json":
        return json.dumps(stats_document(s), indent=2) + "\n"
    f = s.fvec
    lines = [
        f"f_vector = ({f.V},{f.E},{f.F},{f.T})",
        f"mu0 = {_rational_text(s.mu0)}",
        f"g2 = {s.g2}",
        f"g3 = {s.g3}",
        f"2-neighborly: {str(s.two_neighborly).lower()}",
        f"3-neighborly: {str(s.three_neighborly).lower()}",
    ]
    if s.three_neighborly:
        lines.append(f"mu0 = V - 2 = {f.V - 2}")
    return "\n".join(lines) + "\n"


def render_km(k: MinimalSurfaceFamily) -> str:
    s = k.suspension
    return (
        f"genus = {k.genus}\n"
        f"V_m = {k.V_m}\nE_m = {k.E_m}\nF_m = {k.F_m}\n"
        f"suspension f_vector = ({s.V},{s.E},{s.F},{s.T})\n"
        f"mu0 = {_rational_text(k.mu0)}\n"
    )
