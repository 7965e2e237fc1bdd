"""Checks for normal closed 3-pseudomanifolds and their singular vertices."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .complex import Face, SimplicialComplex, require_dim
from .errors import HasBoundary, NotNormal
from .surfaces import SurfaceClass, classify_surface


class Verdict(str, Enum):
    NORMAL = "NormalClosedPseudomanifold"
    HAS_BOUNDARY = "HasBoundary"
    NOT_NORMAL = "NotNormal"
    NOT_PURE = "NotPure"
    DISCONNECTED = "Disconnected"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class NormalityReport:
    is_pure: bool
    ridge_violations: tuple[tuple[Face, int], ...]
    edge_link_disconnected: tuple[Face, ...]
    vertex_link_disconnected: tuple[int, ...]
    connected: bool
    verdict: Verdict

    @property
    def ok(self) -> bool:
        return self.verdict is Verdict.NORMAL


def ridge_degrees(K: SimplicialComplex) -> dict[Face, int]:
    """Number of facets containing each triangle."""
    require_dim(K, 3)
    counts = Counter(t for f in K.facets for t in itertools.combinations(f, 3))
    return dict(sorted(counts.items()))


def is_normal_pseudomanifold(K: SimplicialComplex) -> NormalityReport:
    require_dim(K, 3)
    # rows of equal width are enforced at construction, so K is pure
    ridges = tuple((t, c) for t, c in ridge_degrees(K).items() if c != 2)
    bad_edges = tuple(e for e in K.skeleton(1) if not K.link(e).is_connected())
    bad_vertices = tuple(v for v in K.vertices if not K.link((v,)).is_connected())
    connected = K.is_connected()

    if not connected:
        verdict = Verdict.DISCONNECTED
    elif bad_edges or bad_vertices or any(c > 2 for _, c in ridges):
        verdict = Verdict.NOT_NORMAL
    elif ridges:
        verdict = Verdict.HAS_BOUNDARY
    else:
        verdict = Verdict.NORMAL
    return NormalityReport(True, ridges, bad_edges, bad_vertices, connected, verdict)


def require_normal(K: SimplicialComplex) -> NormalityReport:
    """Return the normality report, raising unless K is a normal closed 3-pseudomanifold."""
    report = is_normal_pseudomanifold(K)
    if report.verdict is Verdict.HAS_BOUNDARY:
        raise HasBoundary(f"{len(report.ridge_violations)} boundary triangles")
    if not report.ok:
        raise NotNormal(f"verdict {report.verdict}")
    return report


def vertex_link_classes(K: SimplicialComplex) -> dict[int, SurfaceClass]:
    """Classify the link of every vertex (K must already be known to be normal)."""
    return {v: classify_surface(K.link((v,))) for v in K.vertices}


def singular_vertices(K: SimplicialComplex) -> list[tuple[int, SurfaceClass]]:
    require_normal(K)
    return [(v, c) for v, c in vertex_link_classes(K).items() if not c.is_sphere]
