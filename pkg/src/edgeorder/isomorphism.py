"""Simplicial isomorphism by invariant-screened backtracking."""
from __future__ import annotations

from collections import Counter

from .complex import SimplicialComplex
from .errors import Undecided
from .normality import require_normal

DEFAULT_BUDGET = 10**7


def _edge_degree(K: SimplicialComplex, e) -> int:
    if K.dim < 2:
        return 1
    return len(K.facets_containing(e))


def vertex_invariants(K: SimplicialComplex) -> list[tuple]:
    """Per-vertex data preserved by any isomorphism."""
    edge_deg = {e: _edge_degree(K, e) for e in K.skeleton(1)}
    out = []
    for v in K.vertices:
        incident = sorted(d for e, d in edge_deg.items() if v in e)
        if K.dim > 1:
            link_f = K.link((v,)).f_vector().as_tuple()
        else:
            link_f = ()
        out.append((K.degree(v), len(K.neighbours[v]), tuple(incident), link_f))
    return out


def _screen(K1: SimplicialComplex, K2: SimplicialComplex):
    if K1.dim != K2.dim or K1.f_vector() != K2.f_vector():
        return None
    inv1, inv2 = vertex_invariants(K1), vertex_invariants(K2)
    if Counter(inv1) != Counter(inv2):
        return None
    return inv1, inv2


def is_witness(K1: SimplicialComplex, K2: SimplicialComplex, mapping: dict[int, int]) -> bool:
    """True iff ``mapping`` is a vertex bijection carrying the facets of K1 onto those of K2."""
    if sorted(mapping) != list(K1.vertices) or sorted(mapping.values()) != list(K2.vertices):
        return False
    image = {tuple(sorted(mapping[x] for x in f)) for f in K1.facets}
    return image == set(K2.facets)


def are_isomorphic(
    K1: SimplicialComplex, K2: SimplicialComplex, budget: int = DEFAULT_BUDGET
) -> dict[int, int] | None:
    """A vertex bijection ``K1 -> K2`` mapping facets onto facets, or ``None``.

    Raises :class:`Undecided` when the search visits more than ``budget``
    candidate assignments.
    """
    screened = _screen(K1, K2)
    if screened is None:
        return None
    inv1, inv2 = screened
    classes = Counter(inv1)
    by_inv = {}
    for w in K2.vertices:
        by_inv.setdefault(inv2[w], []).append(w)

    # visit order: rarest class first, then always a vertex with most mapped neighbours
    order = []
    remaining = set(K1.vertices)
    while remaining:
        def rank(v):
            mapped = sum(1 for x in K1.neighbours[v] if x in order)
            return (-mapped, classes[inv1[v]], v)
        v = min(remaining, key=rank)
        order.append(v)
        remaining.discard(v)

    position = {v: i for i, v in enumerate(order)}
    # facets of K1 completed when their last-ordered vertex is assigned
    closing = {v: [] for v in K1.vertices}
    for f in K1.facets:
        closing[max(f, key=position.__getitem__)].append(f)
    facets2 = set(K2.facets)
    nbr1, nbr2 = K1.neighbours, K2.neighbours

    mapping: dict[int, int] = {}
    used: set[int] = set()
    nodes = 0

    def extend(i: int) -> bool:
        nonlocal nodes
        if i == len(order):
            return True
        v = order[i]
        for w in by_inv[inv1[v]]:
            if w in used:
                continue
            nodes += 1
            if nodes > budget:
                raise Undecided(f"isomorphism search exceeded {budget} nodes")
            if any((x in nbr1[v]) != (mapping[x] in nbr2[w]) for x in order[:i]):
                continue
            mapping[v] = w
            if all(tuple(sorted(mapping[x] for x in f)) in facets2 for f in closing[v]):
                used.add(w)
                if extend(i + 1):
                    return True
                used.discard(w)
            del mapping[v]
        return False

    if not extend(0):
        return None
    assert is_witness(K1, K2, mapping)
    return dict(sorted(mapping.items()))


def is_canonical_equality_case(K: SimplicialComplex) -> bool:
    """Whether K is the 7-vertex one-vertex suspension of the 6-vertex RP^2."""
    from .constructions import one_vertex_suspended_rp2

    require_normal(K)
    return are_isomorphic(K, one_vertex_suspended_rp2()) is not None
