"""Classification of closed triangulated surfaces."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .complex import SimplicialComplex, require_dim
from .errors import NotClosedSurface


@dataclass(frozen=True)
class SurfaceClass:
    chi: int
    orientable: bool
    genus_h: int = 0
    crosscaps_m: int = 0

    @property
    def is_sphere(self) -> bool:
        return self.orientable and self.chi == 2

    @property
    def genus_or_crosscaps(self) -> int:
        return self.genus_h if self.orientable else self.crosscaps_m

    @property
    def name(self) -> str:
        if self.orientable:
            h = self.genus_h
            return "S^2" if h == 0 else "T^2" if h == 1 else f"#{h} T^2"
        m = self.crosscaps_m
        return "RP^2" if m == 1 else "Klein bottle" if m == 2 else f"#{m} RP^2"

    @classmethod
    def from_chi(cls, chi: int, orientable: bool) -> "SurfaceClass":
        if orientable:
            if chi % 2 or chi > 2:
                raise ValueError(f"no closed orientable surface has chi={chi}")
            return cls(chi, True, genus_h=(2 - chi) // 2)
        if chi > 1:
            raise ValueError(f"no closed non-orientable surface has chi={chi}")
        return cls(chi, False, crosscaps_m=2 - chi)


def euler_characteristic(L: SimplicialComplex) -> int:
    f = L.f_vector()
    return f.V - f.E + f.F


def is_closed_surface(L: SimplicialComplex) -> bool:
    if L.dim != 2:
        return False
    ridge = {}
    for t in L.facets:
        for e in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
            ridge[e] = ridge.get(e, 0) + 1
    if any(c != 2 for c in ridge.values()):
        return False
    # with every edge in two triangles, a vertex link is a disjoint union of
    # cycles; it is a single cycle iff it is connected
    for v in L.vertices:
        if not L.link((v,)).is_connected():
            return False
    return L.is_connected()


# sign of the edge (f[i], f[j]), i < j, in the boundary of the positively
# oriented sorted triangle f = (f0, f1, f2)
_EDGE_SIGN = {(0, 1): 1, (1, 2): 1, (0, 2): -1}


def orient(L: SimplicialComplex, seed_sign: int = 1) -> dict | None:
    """Try to orient every triangle of a closed surface coherently.

    Returns a map from triangle to +1/-1 (relative to its sorted vertex
    order), or ``None`` if a conflict shows the surface is non-orientable.
    """
    edge_triangles = {}
    for t in L.facets:
        for (i, j) in _EDGE_SIGN:
            edge_triangles.setdefault((t[i], t[j]), []).append(t)
    sign = {L.facets[0]: seed_sign}
    queue = deque([L.facets[0]])
    while queue:
        t = queue.popleft()
        for (i, j), e_sign in _EDGE_SIGN.items():
            induced = sign[t] * e_sign
            for s in edge_triangles[(t[i], t[j])]:
                if s == t:
                    continue
                pos = (s.index(t[i]), s.index(t[j]))
                # neighbour must traverse the shared edge the other way
                wanted = -induced * _EDGE_SIGN[pos]
                if s not in sign:
                    sign[s] = wanted
                    queue.append(s)
                elif sign[s] != wanted:
                    return None
    return sign


def classify_surface(L: SimplicialComplex, seed_sign: int = 1) -> SurfaceClass:
    require_dim(L, 2)
    if not is_closed_surface(L):
        raise NotClosedSurface("not a closed connected surface")
    return SurfaceClass.from_chi(euler_characteristic(L), orient(L, seed_sign) is not None)
