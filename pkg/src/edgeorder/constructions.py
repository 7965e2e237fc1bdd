"""Named complexes and the operations that build new complexes from old ones.

Every operation returns a new complex and post-validates it: whatever claims
to be a normal 3-pseudomanifold is run through the normality checker, and
each move asserts its exact f-vector change.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .complex import Face, SimplicialComplex, from_facets, require_dim
from .errors import (
    BadIntersection,
    BadPairing,
    BadParam,
    BadPartition,
    ComplexError,
    EdgeExists,
    LinkConditionFailed,
    NotAFacet,
    NotAVertex,
    NotClosedSurface,
    NotInterior,
    UnknownName,
    ValidationFailed,
)
from .normality import is_normal_pseudomanifold
from .surfaces import classify_surface, is_closed_surface

RP2_6 = [
    (1, 2, 4), (1, 3, 4), (1, 2, 5), (1, 3, 6), (1, 5, 6),
    (2, 4, 6), (2, 3, 5), (2, 3, 6), (3, 4, 5), (4, 5, 6),
]

OVS_RP2_7 = [
    (1, 2, 4, "u"), (1, 3, 4, "u"), (1, 2, 5, "u"), (1, 2, 4, "v"), (1, 3, 4, "v"),
    (1, 2, 5, "v"), (1, 3, "u", "v"), (1, 5, "u", "v"), (2, 4, "u", "v"), (2, 3, 5, "u"),
    (2, 3, 5, "v"), (2, 3, "u", "v"), (3, 4, 5, "u"), (3, 4, 5, "v"), (4, 5, "u", "v"),
]

# Moebius' 7-vertex torus: orbits of {1,2,4} and {1,3,4} under i -> i+1 mod 7
TORUS_7 = [
    (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (1, 5, 6), (2, 6, 7), (1, 3, 7),
    (1, 3, 4), (2, 4, 5), (3, 5, 6), (4, 6, 7), (1, 5, 7), (1, 2, 6), (2, 3, 7),
]

GENERATORS = ("boundary4simplex", "rp2-6", "torus-7", "ovs-rp2-7", "stacked")


def _labeled(K: SimplicialComplex) -> list[tuple[str, ...]]:
    return [K.labels_of(f) for f in K.facets]


def fresh_label(taken, preferred: str) -> str:
    """``preferred`` if unused, otherwise the first unused ``preferred<k>``."""
    taken = set(taken)
    if preferred not in taken:
        return preferred
    k = 1
    while f"{preferred}{k}" in taken:
        k += 1
    return f"{preferred}{k}"


def new_vertex_label(taken) -> str:
    """Label for an interior new vertex: next integer on numeric complexes, else a0, a1, ..."""
    taken = set(taken)
    if taken and all(x.isdigit() for x in taken):
        return str(max(int(x) for x in taken) + 1)
    k = 0
    while f"a{k}" in taken:
        k += 1
    return f"a{k}"


def _validate(rows, what: str) -> SimplicialComplex:
    """Build a complex from rows and insist it is a normal closed 3-pseudomanifold."""
    sets = [frozenset(r) for r in rows]
    if any(len(s) != len(r) for s, r in zip(sets, rows)):
        raise ValidationFailed(f"{what}: identification collapses a facet")
    if len(set(sets)) != len(sets):
        raise ValidationFailed(f"{what}: identification creates duplicate facets")
    K = from_facets(rows)
    report = is_normal_pseudomanifold(K)
    if not report.ok:
        raise ValidationFailed(f"{what}: result is {report.verdict}")
    return K


def _check_delta(before, after, expected, what: str) -> None:
    delta = after.f_vector() - before.f_vector()
    if delta != tuple(expected):
        raise ValidationFailed(f"{what}: f-vector change {delta}, expected {tuple(expected)}")


# generators


def boundary_4_simplex() -> SimplicialComplex:
    return from_facets([[x for x in range(1, 6) if x != i] for i in range(1, 6)])


def rp2_6() -> SimplicialComplex:
    return from_facets(RP2_6)


def one_vertex_suspended_rp2() -> SimplicialComplex:
    return from_facets(OVS_RP2_7)


def torus_7() -> SimplicialComplex:
    L = from_facets(TORUS_7)
    c = classify_surface(L)
    if not (c.orientable and c.chi == 0):
        raise ValidationFailed(f"embedded torus list classifies as {c.name}")
    return L


def stacked_sphere(n: int, rng: random.Random | None = None) -> SimplicialComplex:
    """Stacked 3-sphere on ``n`` vertices.

    Without ``rng`` the last facet in sorted order is always subdivided;
    with ``rng`` a uniformly random facet is chosen at each step.
    """
    if n < 5:
        raise BadParam("a stacked 3-sphere needs at least 5 vertices")
    K = boundary_4_simplex()
    for _ in range(n - 5):
        f = K.facets[-1] if rng is None else rng.choice(K.facets)
        K = bistellar_0_move(K, f)
    return K


def generate(name: str, n: int | None = None, rng: random.Random | None = None) -> SimplicialComplex:
    if name == "boundary4simplex":
        return boundary_4_simplex()
    if name == "rp2-6":
        return rp2_6()
    if name == "torus-7":
        return torus_7()
    if name == "ovs-rp2-7":
        return one_vertex_suspended_rp2()
    if name == "stacked":
        if n is None:
            raise BadParam("stacked needs a vertex count")
        return stacked_sphere(n, rng)
    raise UnknownName(f"unknown complex {name!r}; choose from {', '.join(GENERATORS)}")


# suspensions


def suspension(L: SimplicialComplex) -> SimplicialComplex:
    """Join of a closed surface with two new apex vertices."""
    require_dim(L, 2)
    if not is_closed_surface(L):
        raise NotClosedSurface("suspension needs a closed surface")
    a = fresh_label(L.labels, "u")
    b = fresh_label(L.labels + (a,), "v")
    rows = [t + (apex,) for t in _labeled(L) for apex in (a, b)]
    K = _validate(rows, "suspension")
    fL, fK = L.f_vector(), K.f_vector()
    expected = (fL.V + 2, 2 * fL.V + fL.E, 2 * fL.E + fL.F, 2 * fL.F)
    if fK.as_tuple() != expected:
        raise ValidationFailed(f"suspension: f-vector {fK}, expected {expected}")
    return K


def one_vertex_suspension(L: SimplicialComplex, w: int) -> SimplicialComplex:
    """Replace ``w`` by an edge ``uv``: ``uv * lk(w)`` plus both cones over ``L - w``."""
    require_dim(L, 2)
    if not is_closed_surface(L):
        raise NotClosedSurface("one-vertex suspension needs a closed surface")
    if not 0 <= w < L.num_vertices:
        raise NotAVertex(f"{w} is not a vertex")
    others = [x for i, x in enumerate(L.labels) if i != w]
    u = fresh_label(others, "u")
    v = fresh_label(others + [u], "v")
    lk = L.link((w,))
    rows = [lk.labels_of(e) + (u, v) for e in lk.facets]
    for t in L.facets:
        if w not in t:
            rows.append(L.labels_of(t) + (u,))
            rows.append(L.labels_of(t) + (v,))
    K = _validate(rows, "one-vertex suspension")
    deg = L.degree(w)
    fL = L.f_vector()
    if K.f_vector().V != fL.V + 1 or len(K) != deg + 2 * (fL.F - deg):
        raise ValidationFailed("one-vertex suspension: unexpected counts")
    return K


# connected sum and bistellar moves


def connected_sum(
    K1: SimplicialComplex,
    facet1: Face,
    K2: SimplicialComplex,
    facet2: Face,
    pairing: Mapping[int, int],
) -> SimplicialComplex:
    """Remove a facet from each complex and glue along the boundaries.

    ``pairing`` maps the vertices of ``facet1`` (ids in K1) to those of
    ``facet2`` (ids in K2). Unpaired vertices of K2 whose labels clash with
    K1 are renamed.
    """
    require_dim(K1, 3)
    require_dim(K2, 3)
    facet1, facet2 = tuple(sorted(facet1)), tuple(sorted(facet2))
    if not K1.is_facet(facet1):
        raise NotAFacet(f"{facet1} is not a facet of the first complex")
    if not K2.is_facet(facet2):
        raise NotAFacet(f"{facet2} is not a facet of the second complex")
    if sorted(pairing) != list(facet1) or sorted(pairing.values()) != list(facet2):
        raise BadPairing("pairing must be a bijection between the two facets")

    rename = {K2.labels[y]: K1.labels[x] for x, y in pairing.items()}
    taken = set(K1.labels)
    for i, label in enumerate(K2.labels):
        if i in facet2:
            continue
        new = label if label not in taken else new_vertex_label(taken | set(K2.labels))
        rename[label] = new
        taken.add(new)

    rows = [K1.labels_of(f) for f in K1.facets if f != facet1]
    rows += [tuple(rename[x] for x in K2.labels_of(f)) for f in K2.facets if f != facet2]
    K = _validate(rows, "connected sum")
    f1, f2, f = K1.f_vector(), K2.f_vector(), K.f_vector()
    expected = (f1.V + f2.V - 4, f1.E + f2.E - 6, f1.F + f2.F - 4, f1.T + f2.T - 2)
    if f.as_tuple() != expected:
        raise ValidationFailed(f"connected sum: f-vector {f}, expected {expected}")
    return K


def bistellar_1_move(K: SimplicialComplex, triangle: Face) -> SimplicialComplex:
    """The 2-3 move: two facets ``abc*d``, ``abc*e`` become ``de*ab``, ``de*bc``, ``de*ca``."""
    require_dim(K, 3)
    triangle = tuple(sorted(triangle))
    if len(triangle) != 3:
        raise BadParam("a 2-3 move needs a triangle")
    around = K.facets_containing(triangle)
    if len(around) != 2:
        raise NotInterior(f"triangle lies in {len(around)} facets, not 2")
    (d,), (e,) = (set(f) - set(triangle) for f in around)
    if K.has_face((d, e)):
        raise EdgeExists(f"edge {K.labels_of((d, e))} already present")
    a, b, c = triangle
    rows = [K.labels_of(f) for f in K.facets if f not in around]
    rows += [K.labels_of((d, e, x, y)) for x, y in ((a, b), (b, c), (a, c))]
    out = _validate(rows, "2-3 move")
    _check_delta(K, out, (0, 1, 2, 1), "2-3 move")
    return out


def bistellar_0_move(K: SimplicialComplex, facet: Face) -> SimplicialComplex:
    """The 1-4 move: cone a new vertex over the boundary of ``facet``."""
    require_dim(K, 3)
    facet = tuple(sorted(facet))
    if not K.is_facet(facet):
        raise NotAFacet(f"{facet} is not a facet")
    w = new_vertex_label(K.labels)
    rows = [K.labels_of(f) for f in K.facets if f != facet]
    for x in facet:
        rows.append(K.labels_of(y for y in facet if y != x) + (w,))
    out = from_facets(rows)
    _check_delta(K, out, (1, 4, 6, 3), "1-4 move")
    return out


# edge contraction and expansion


def _closure(L: SimplicialComplex) -> set[frozenset[str]]:
    return {frozenset(L.labels_of(f)) for k in range(L.dim + 1) for f in L.skeleton(k)}


def satisfies_link_condition(K: SimplicialComplex, edge: Face) -> bool:
    u, v = edge
    lu, lv, luv = K.link((u,)), K.link((v,)), K.link(edge)
    return _closure(lu) & _closure(lv) == _closure(luv)


def edge_contraction(K: SimplicialComplex, edge: Face) -> SimplicialComplex:
    """Merge ``v`` into ``u`` for ``edge = (u, v)``, deleting the facets around the edge.

    The first vertex of ``edge`` as given survives.
    """
    require_dim(K, 3)
    u, v = edge
    if not K.has_face(edge):
        raise BadParam(f"{edge} is not an edge")
    if not satisfies_link_condition(K, tuple(sorted(edge))):
        raise LinkConditionFailed(f"lk(u) and lk(v) meet outside lk(uv) for {K.labels_of(edge)}")
    k = K.link(tuple(sorted(edge))).num_vertices
    lu, lv = K.labels[u], K.labels[v]
    rows = [
        tuple(lu if x == lv else x for x in K.labels_of(f))
        for f in K.facets
        if not (u in f and v in f)
    ]
    out = _validate(rows, "edge contraction")
    _check_delta(K, out, (-1, -(k + 1), -2 * k, -k), "edge contraction")
    return out


def edge_expansion(K: SimplicialComplex, u: int, cycle: Sequence[int]) -> SimplicialComplex:
    """Split ``u`` into ``u`` and a new vertex along a separating cycle of ``lk(u)``.

    ``cycle`` lists vertex ids of K in cyclic order; consecutive entries must
    span edges of ``lk(u)``. Triangles of ``lk(u)`` on the side containing the
    smallest triangle stay with ``u``, the rest move to the new vertex, and
    the new edge is coned over the cycle.
    """
    require_dim(K, 3)
    cycle = list(cycle)
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise BadPartition("cycle must list at least 3 distinct vertices")
    star = K.facets_containing((u,))
    link_tris = [tuple(x for x in f if x != u) for f in star]
    link_edges = {tuple(sorted(p)) for t in link_tris for p in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2]))}
    cut = {tuple(sorted((cycle[i], cycle[(i + 1) % len(cycle)]))) for i in range(len(cycle))}
    if not cut <= link_edges:
        raise BadPartition("cycle edges are not all in lk(u)")

    # flood fill over triangles of lk(u) without crossing cycle edges
    by_edge = {}
    for t in link_tris:
        for p in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
            by_edge.setdefault(p, []).append(t)
    side = {}
    for start in sorted(link_tris):
        if start in side:
            continue
        label = len(set(side.values()))
        side[start] = label
        stack = [start]
        while stack:
            t = stack.pop()
            for p in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
                if p in cut:
                    continue
                for s in by_edge[p]:
                    if s not in side:
                        side[s] = label
                        stack.append(s)
    if len(set(side.values())) != 2:
        raise BadPartition("cycle does not separate lk(u) into two pieces")

    new = new_vertex_label(K.labels)
    lu = K.labels[u]
    rows = [K.labels_of(f) for f in K.facets if u not in f]
    for t in link_tris:
        rows.append(K.labels_of(t) + ((lu,) if side[t] == 0 else (new,)))
    for a, b in cut:
        rows.append(K.labels_of((a, b)) + (lu, new))
    out = _validate(rows, "edge expansion")
    k = len(cycle)
    _check_delta(K, out, (1, k + 1, 2 * k, k), "edge expansion")
    return out


# foldings


@dataclass(frozen=True)
class FoldSpec:
    """Two facets meeting exactly in ``apex`` and a pairing of their other vertices.

    ``apex`` is one vertex id for a vertex folding or two for an edge folding.
    ``pairing`` maps each vertex of ``facet_a`` outside the apex to the vertex
    of ``facet_b`` it is identified with; the ``facet_a`` vertex survives.
    """

    apex: tuple[int, ...]
    facet_a: Face
    facet_b: Face
    pairing: Mapping[int, int] = field(hash=False)


def _fold(K: SimplicialComplex, spec: FoldSpec, apex_size: int, what: str) -> SimplicialComplex:
    require_dim(K, 3)
    apex = tuple(sorted(spec.apex))
    fa, fb = tuple(sorted(spec.facet_a)), tuple(sorted(spec.facet_b))
    if len(apex) != apex_size:
        raise BadParam(f"{what} needs an apex of {apex_size} vertices")
    for f in (fa, fb):
        if not K.is_facet(f):
            raise NotAFacet(f"{f} is not a facet")
    if set(fa) & set(fb) != set(apex):
        raise BadIntersection(f"facets meet in {sorted(set(fa) & set(fb))}, not exactly the apex")
    rest_a = sorted(set(fa) - set(apex))
    rest_b = sorted(set(fb) - set(apex))
    if sorted(spec.pairing) != rest_a or sorted(spec.pairing.values()) != rest_b:
        raise BadPairing("pairing must be a bijection between the non-apex vertices")
    ident = {K.labels[y]: K.labels[x] for x, y in spec.pairing.items()}
    rows = [
        tuple(ident.get(x, x) for x in K.labels_of(f))
        for f in K.facets
        if f not in (fa, fb)
    ]
    return _validate(rows, what)


def vertex_folding(K: SimplicialComplex, spec: FoldSpec) -> SimplicialComplex:
    """Delete ``t*abc`` and ``t*def`` and identify ``a=d, b=e, c=f``."""
    out = _fold(K, spec, 1, "vertex folding")
    _check_delta(K, out, (-3, -6, -4, -2), "vertex folding")
    return out


def edge_folding(K: SimplicialComplex, spec: FoldSpec) -> SimplicialComplex:
    """Delete ``uv*ab`` and ``uv*cd`` and identify ``a=c, b=d``."""
    out = _fold(K, spec, 2, "edge folding")
    _check_delta(K, out, (-2, -5, -4, -2), "edge folding")
    return out


def fold_candidates(K: SimplicialComplex, apex_size: int):
    """Every FoldSpec whose facets meet in exactly ``apex_size`` vertices, in a fixed order."""
    from itertools import combinations, permutations

    for fa, fb in combinations(K.facets, 2):
        common = tuple(sorted(set(fa) & set(fb)))
        if len(common) != apex_size:
            continue
        rest_a = [x for x in fa if x not in common]
        rest_b = [x for x in fb if x not in common]
        for perm in permutations(rest_b):
            yield FoldSpec(common, fa, fb, dict(zip(rest_a, perm)))


def find_folding(K: SimplicialComplex, apex_size: int):
    """First admissible folding of K, as ``(spec, result)``, or ``None``."""
    op = vertex_folding if apex_size == 1 else edge_folding
    for spec in fold_candidates(K, apex_size):
        try:
            return spec, op(K, spec)
        except ComplexError:
            continue
    return None
