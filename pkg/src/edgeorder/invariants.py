"""Average edge order, g-numbers, singularity profiles and the bound classifier.

All values of the average edge order ``mu0 = 3F/E`` are exact
:class:`fractions.Fraction` objects; equality cases such as 30/7 and 9/2 are
decided exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb, isqrt

from .complex import FVector, SimplicialComplex, require_dim
from .errors import BoundViolated, GenusTooSmall
from .isomorphism import is_canonical_equality_case
from .normality import NormalityReport, require_normal, vertex_link_classes
from .surfaces import SurfaceClass

THIRTY_SEVENTHS = Fraction(30, 7)
NINE_HALVES = Fraction(9, 2)


def mu0_from_counts(E: int, F: int) -> Fraction:
    return Fraction(3 * F, E)


def mu0(K: SimplicialComplex) -> Fraction:
    require_dim(K, 3)
    require_normal(K)
    f = K.f_vector()
    return mu0_from_counts(f.E, f.F)


def g2_g3(K: SimplicialComplex) -> tuple[int, int]:
    f = K.f_vector()
    return f.E - 4 * f.V + 10, f.F - 3 * f.E + 6 * f.V - 10


def surface_g2(L: SimplicialComplex) -> int:
    """g2 of a 2-dimensional complex, ``E - 3V + 6``; equals g2 of any cone over it."""
    f = L.f_vector()
    return f.E - 3 * f.V + 6


@dataclass(frozen=True)
class SingularityProfile:
    n: int
    r: int
    r_prime: int
    h_list: tuple[int, ...]
    m_list: tuple[int, ...]
    h_max: int
    m_max: int
    vertices: tuple[tuple[int, SurfaceClass], ...] = field(default=(), compare=False)

    @classmethod
    def from_classes(cls, classes: dict[int, SurfaceClass]) -> "SingularityProfile":
        sing = tuple((v, c) for v, c in sorted(classes.items()) if not c.is_sphere)
        h = tuple(c.genus_h for _, c in sing if c.orientable)
        m = tuple(c.crosscaps_m for _, c in sing if not c.orientable)
        return cls(len(sing), len(h), len(m), h, m, max(h, default=0), max(m, default=0), sing)


def singularity_profile(K: SimplicialComplex) -> SingularityProfile:
    require_normal(K)
    return SingularityProfile.from_classes(vertex_link_classes(K))


def _mu0_via_chis(E: int, chis) -> Fraction:
    return 6 - Fraction(3 * sum(chis), E)


def mu0_via_links(K: SimplicialComplex) -> Fraction:
    """``6 - 3 * sum(chi(lk v)) / E``, an independent route to mu0."""
    require_normal(K)
    classes = vertex_link_classes(K)
    return _mu0_via_chis(K.f_vector().E, (c.chi for c in classes.values()))


def check_g2_lower_bound(K: SimplicialComplex) -> list[tuple[int, int, bool]]:
    """For each vertex ``v``: ``(v, g2(lk v), g2(K) >= g2(lk v))``.

    The link's g2 is taken in the surface normalisation, which agrees with
    g2 of the vertex star computed as a 3-complex.
    """
    require_normal(K)
    g2 = g2_g3(K)[0]
    out = []
    for v in K.vertices:
        lk = surface_g2(K.link((v,)))
        out.append((v, lk, g2 >= lk))
    return out


class CaseTag(str, Enum):
    NON_SINGULAR = "NonSingularManifold"
    SPHERE_BY_COROLLARY = "SphereByCorollary"
    EQUALITY_CASE_I = "EqualityCase_i"
    CASE_A = "Case_a"
    CASE_C = "Case_c"
    CASE_D = "Case_d"
    ABOVE_NINE_HALVES = "AboveNineHalves"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class TheoremVerdict:
    case_tag: CaseTag
    tags: tuple[CaseTag, ...]
    bounds_checked: tuple[tuple[str, bool], ...]
    narrative: str


_OPS = "connected sums, bistellar 1-moves, edge contractions, edge expansions"

_NARRATIVE = {
    CaseTag.CASE_A: (
        "one singular vertex with a torus link and g2 = 6: built from boundaries "
        f"of 4-simplices by {_OPS} and one vertex folding; |K| is a handlebody "
        "with its boundary coned off"
    ),
    CaseTag.CASE_C: (
        "one singular vertex with a Klein bottle link and g2 = 6: built from "
        f"boundaries of 4-simplices by {_OPS} and one vertex folding; |K| is a "
        "handlebody with its boundary coned off"
    ),
    CaseTag.CASE_D: (
        "two RP^2 singularities and 3 <= g2 <= 6: built from boundaries of "
        f"4-simplices by {_OPS} and one edge folding; |K| is a suspension of RP^2"
    ),
    CaseTag.EQUALITY_CASE_I: (
        "mu0 = 30/7, the minimum over complexes with singularities; K is the "
        "7-vertex one-vertex suspension of RP^2"
    ),
    CaseTag.ABOVE_NINE_HALVES: "singular complex with mu0 > 9/2; no structural conclusion",
}


def _closed_manifold_narrative(m: Fraction) -> str:
    text = "no singular vertices, so |K| is a closed 3-manifold"
    if m == 3:
        text += "; mu0 = 3 is attained only by the boundary of the 4-simplex"
    if m < THIRTY_SEVENTHS:
        text += "; mu0 < 30/7 forces a 3-sphere"
    elif m < NINE_HALVES:
        text += "; mu0 < 9/2 forces a 3-sphere"
    elif m == NINE_HALVES:
        text += "; mu0 = 9/2 allows S^3, S^2 x S^1 or the twisted S^2-bundle over S^1"
    return text


def classify_from_data(
    f: FVector, m: Fraction, profile: SingularityProfile, max_link_g2: int, equality_check
) -> TheoremVerdict:
    """Case analysis on precomputed data; ``equality_check()`` runs the isomorphism test."""
    g2 = f.E - 4 * f.V + 10
    n = profile.n
    bounds = [
        ("mu0 < 6 + n", m < 6 + n),
        ("g2(K) >= g2(lk v) for every vertex", g2 >= max_link_g2),
    ]
    if n == 0:
        bounds.append(("3 <= mu0 < 6 for closed 3-manifolds", 3 <= m < 6))
        tags = [CaseTag.NON_SINGULAR]
        if m < THIRTY_SEVENTHS:
            tags.append(CaseTag.SPHERE_BY_COROLLARY)
        narrative = _closed_manifold_narrative(m)
        tag = CaseTag.NON_SINGULAR
    else:
        bounds.append(("mu0 >= 30/7 when singular", m >= THIRTY_SEVENTHS))
        bounds.append(("g2 <= 10 - 4*sum(h) - 2*sum(m) iff mu0 <= 9/2",
                       (g2 <= 10 - 4 * sum(profile.h_list) - 2 * sum(profile.m_list)) == (m <= NINE_HALVES)))
        if m == THIRTY_SEVENTHS:
            bounds.append(("mu0 = 30/7 only for the canonical 7-vertex complex", equality_check()))
            tag = CaseTag.EQUALITY_CASE_I
            bounds.append(("equality case is Case (d) with g2 = 3, V = 7", g2 == 3 and f.V == 7))
        elif m <= NINE_HALVES:
            if n == 1 and profile.r == 1 and profile.h_list == (1,):
                tag = CaseTag.CASE_A
            elif n == 1 and profile.r_prime == 1 and profile.m_list == (2,):
                tag = CaseTag.CASE_C
            elif n == 2 and profile.m_list == (1, 1):
                tag = CaseTag.CASE_D
            else:
                tag = None
            bounds.append(("mu0 <= 9/2 leaves only cases (a), (c), (d)", tag is not None))
        else:
            tag = CaseTag.ABOVE_NINE_HALVES
        if tag in (CaseTag.CASE_A, CaseTag.CASE_C):
            bounds.append(("cases (a)/(c): g2 = 6 and mu0 = 9/2", g2 == 6 and m == NINE_HALVES))
        if tag is CaseTag.CASE_D:
            bounds.append(("case (d): 3 <= g2 <= 6", 3 <= g2 <= 6))
        tags = [tag] if tag is not None else []
        narrative = _NARRATIVE.get(tag, "")
    failed = [name for name, ok in bounds if not ok]
    if failed:
        raise BoundViolated("; ".join(failed))
    return TheoremVerdict(tag, tuple(tags), tuple(bounds), narrative)


def theorem_classify(K: SimplicialComplex) -> TheoremVerdict:
    require_normal(K)
    classes = vertex_link_classes(K)
    profile = SingularityProfile.from_classes(classes)
    f = K.f_vector()
    max_lk = max(surface_g2(K.link((v,))) for v in K.vertices)
    return classify_from_data(
        f, mu0_from_counts(f.E, f.F), profile, max_lk, lambda: is_canonical_equality_case(K)
    )


@dataclass(frozen=True)
class AnalysisReport:
    complex: SimplicialComplex
    fvec: FVector
    mu0: Fraction
    g2: int
    g3: int
    normality: NormalityReport
    singularities: SingularityProfile
    link_classes: dict[int, SurfaceClass]
    identities: tuple[tuple[str, bool], ...]
    verdict: TheoremVerdict

    @property
    def bounds(self):
        return self.verdict.bounds_checked


def check_identities(K: SimplicialComplex, classes: dict[int, SurfaceClass]) -> list[tuple[str, bool]]:
    f = K.f_vector()
    g2, g3 = g2_g3(K)
    chis = [c.chi for c in classes.values()]
    profile = SingularityProfile.from_classes(classes)
    direct = mu0_from_counts(f.E, f.F)
    from_profile = 6 - Fraction(6 * f.V, f.E) + Fraction(6 * sum(profile.h_list), f.E) \
        + Fraction(3 * sum(profile.m_list), f.E)
    return [
        ("g2 + g3 = F - 2E + 2V", g2 + g3 == f.F - 2 * f.E + 2 * f.V),
        ("g2 + g3 = sum(2 - chi(lk v))", g2 + g3 == sum(2 - c for c in chis)),
        ("3F/E = 6 - 3*sum(chi(lk v))/E", direct == _mu0_via_chis(f.E, chis)),
        ("3F/E = 6 - 6V/E + 6*sum(h)/E + 3*sum(m)/E", direct == from_profile),
        ("sum(chi(lk v)) is even", sum(chis) % 2 == 0),
        ("F = 2T", f.F == 2 * f.T),
    ]


def analyze(K: SimplicialComplex) -> AnalysisReport:
    """Full analysis of a normal closed 3-pseudomanifold.

    Raises :class:`~edgeorder.errors.NotNormal` for other inputs and
    :class:`~edgeorder.errors.BoundViolated` if any identity or bound fails.
    """
    require_dim(K, 3)
    normality = require_normal(K)
    classes = vertex_link_classes(K)
    identities = check_identities(K, classes)
    failed = [name for name, ok in identities if not ok]
    if failed:
        raise BoundViolated("; ".join(failed))
    f = K.f_vector()
    g2, g3 = g2_g3(K)
    profile = SingularityProfile.from_classes(classes)
    max_lk = max(surface_g2(K.link((v,))) for v in K.vertices)
    verdict = classify_from_data(
        f, mu0_from_counts(f.E, f.F), profile, max_lk, lambda: is_canonical_equality_case(K)
    )
    return AnalysisReport(
        K, f, mu0_from_counts(f.E, f.F), g2, g3, normality, profile, classes,
        tuple(identities), verdict,
    )


@dataclass(frozen=True)
class FVectorStats:
    fvec: FVector
    mu0: Fraction
    g2: int
    g3: int
    two_neighborly: bool
    three_neighborly: bool


def stats_from_fvector(fvec: FVector, neighborly_hint: int | None = None) -> FVectorStats:
    """Invariants computable from the face counts alone.

    ``neighborly_hint`` (2 or 3), when given, must be confirmed by the counts.
    """
    V, E, F, T = fvec.as_tuple()
    if E <= 0:
        raise ValueError("need E > 0")
    m = mu0_from_counts(E, F)
    two = E == comb(V, 2)
    three = F == comb(V, 3)
    if three and m != V - 2:
        raise BoundViolated(f"3-neighborly but mu0 = {m} != V - 2 = {V - 2}")
    if neighborly_hint is not None:
        if neighborly_hint not in (2, 3):
            raise ValueError("neighborly_hint must be 2 or 3")
        if not (two if neighborly_hint == 2 else three):
            raise BoundViolated(f"counts are not {neighborly_hint}-neighborly")
    return FVectorStats(fvec, m, E - 4 * V + 10, F - 3 * E + 6 * V - 10, two, three)


def ceil_sqrt(n: int) -> int:
    s = isqrt(n)
    return s if s * s == n else s + 1


@dataclass(frozen=True)
class MinimalSurfaceFamily:
    genus: int
    V_m: int
    E_m: int
    F_m: int
    suspension: FVector
    mu0: Fraction


def km_formula(m: int) -> MinimalSurfaceFamily:
    """Face counts of a minimal genus-``m`` surface and of its suspension.

    The vertex count is ``ceil((7 + sqrt(1 + 48m)) / 2)`` evaluated in
    integers: ``2V - 7`` is the least integer not below the square root.
    """
    if m < 3:
        raise GenusTooSmall(f"genus {m} < 3")
    V = (7 + ceil_sqrt(1 + 48 * m) + 1) // 2
    E = 3 * V + 6 * m - 6
    F = 2 * V + 4 * m - 4
    susp = FVector(V + 2, 2 * V + E, 2 * E + F, 2 * F)
    mu = mu0_from_counts(susp.E, susp.F)
    closed_form = Fraction(24 * V + 48 * m - 48, 5 * V + 6 * m - 6)
    if mu != closed_form:
        raise BoundViolated(f"suspension mu0 {mu} disagrees with closed form {closed_form}")
    return MinimalSurfaceFamily(m, V, E, F, susp, mu)


def km_sweep(max_m: int, start: int = 3) -> tuple[int, Fraction]:
    """Check ``mu0(K_m) < 8`` for every genus in ``start..max_m``.

    Returns the number of genera checked and mu0 at ``max_m``.
    """
    if start < 3:
        raise GenusTooSmall(f"genus {start} < 3")
    for m in range(start, max_m + 1):
        V = (8 + ceil_sqrt(1 + 48 * m)) // 2
        num, den = 24 * V + 48 * m - 48, 5 * V + 6 * m - 6
        if num >= 8 * den:
            raise BoundViolated(f"mu0(K_{m}) = {num}/{den} >= 8")
    return max_m - start + 1, km_formula(max_m).mu0
