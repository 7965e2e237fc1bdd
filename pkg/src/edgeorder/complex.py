"""Immutable facet-based simplicial complexes.

A complex is stored as a set of facets, each a strictly increasing tuple of
dense integer vertex ids. Lower-dimensional faces are implicit. Text labels
are interned to ids in natural order (numerals by value first, then the
remaining labels lexicographically), so the id assignment depends only on the
set of labels and not on the order in which rows were given.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    BadDimension,
    DegenerateFacet,
    EmptyComplex,
    InvalidLabel,
    MixedDimension,
    NotAFace,
)

Face = tuple[int, ...]


def label_key(label: str):
    """Sort key putting numeric labels first, in numeric order."""
    if label.isdigit():
        return (0, int(label), label)
    return (1, 0, label)


@dataclass(frozen=True)
class FVector:
    V: int
    E: int
    F: int
    T: int = 0

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.V, self.E, self.F, self.T)

    def __sub__(self, other: "FVector") -> tuple[int, int, int, int]:
        return tuple(a - b for a, b in zip(self.as_tuple(), other.as_tuple()))

    def __str__(self):
        return f"({self.V},{self.E},{self.F},{self.T})"


class SimplicialComplex:
    """A pure simplicial complex of dimension 1, 2 or 3.

    Build instances with :func:`from_facets`. All methods take and return
    faces as sorted tuples of vertex ids; use :meth:`face` and
    :meth:`labels_of` to translate from and to text labels.
    """

    def __init__(self, facets: Iterable[Face], labels: Sequence[str]):
        self.facets: tuple[Face, ...] = tuple(sorted(set(facets)))
        self.labels: tuple[str, ...] = tuple(labels)
        self._index = {label: i for i, label in enumerate(self.labels)}

    @property
    def dim(self) -> int:
        return len(self.facets[0]) - 1

    @property
    def num_vertices(self) -> int:
        return len(self.labels)

    @property
    def vertices(self) -> range:
        return range(len(self.labels))

    def __len__(self):
        return len(self.facets)

    def __repr__(self):
        return f"<SimplicialComplex dim={self.dim} V={self.num_vertices} facets={len(self.facets)}>"

    @cached_property
    def labeled_facets(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(self.labels_of(f)) for f in self.facets)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.labeled_facets == other.labeled_facets

    def __hash__(self):
        return hash(self.labeled_facets)

    # labels <-> ids

    def vid(self, label) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise NotAFace(f"no vertex labelled {label!r}") from None

    def face(self, *labels) -> Face:
        """Return the sorted id tuple for the given labels (not checked for membership)."""
        if len(labels) == 1 and isinstance(labels[0], (list, tuple, set, frozenset)):
            labels = tuple(labels[0])
        return tuple(sorted(self.vid(x) for x in labels))

    def labels_of(self, face: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in face)

    def rows(self) -> list[tuple[str, ...]]:
        """Facets as label rows, each row and the row list in natural label order."""
        out = [tuple(sorted(self.labels_of(f), key=label_key)) for f in self.facets]
        return sorted(out, key=lambda row: [label_key(x) for x in row])

    # faces

    @cached_property
    def _vertex_facets(self) -> dict[int, list[Face]]:
        star = defaultdict(list)
        for f in self.facets:
            for v in f:
                star[v].append(f)
        return star

    @cached_property
    def _facet_set(self) -> frozenset[Face]:
        return frozenset(self.facets)

    def skeleton(self, k: int) -> list[Face]:
        """All k-dimensional faces, sorted."""
        if k < 0 or k > self.dim:
            raise BadDimension(f"k={k} outside 0..{self.dim}")
        return self._skeleta[k]

    @cached_property
    def _skeleta(self) -> list[list[Face]]:
        out = []
        for k in range(self.dim + 1):
            faces = set()
            for f in self.facets:
                faces.update(itertools.combinations(f, k + 1))
            out.append(sorted(faces))
        return out

    @cached_property
    def _face_sets(self) -> list[frozenset[Face]]:
        return [frozenset(s) for s in self._skeleta]

    def f_vector(self) -> FVector:
        counts = [len(s) for s in self._skeleta] + [0] * (4 - self.dim - 1)
        return FVector(*counts[:4])

    def has_face(self, face: Sequence[int]) -> bool:
        face = tuple(sorted(face))
        if not face or len(face) > self.dim + 1:
            return False
        return face in self._face_sets[len(face) - 1]

    def is_facet(self, face: Sequence[int]) -> bool:
        return tuple(sorted(face)) in self._facet_set

    def facets_containing(self, face: Sequence[int]) -> list[Face]:
        face = tuple(sorted(face))
        if not face:
            return list(self.facets)
        s = set(face)
        return [f for f in self._vertex_facets.get(face[0], ()) if s.issubset(f)]

    def degree(self, v: int) -> int:
        """Number of facets containing vertex ``v``."""
        return len(self._vertex_facets.get(v, ()))

    @cached_property
    def neighbours(self) -> dict[int, frozenset[int]]:
        nbr = defaultdict(set)
        for a, b in self.skeleton(1) if self.dim >= 1 else ():
            nbr[a].add(b)
            nbr[b].add(a)
        return {v: frozenset(nbr[v]) for v in self.vertices}

    def _check_face(self, face: Sequence[int]) -> Face:
        face = tuple(sorted(face))
        if not self.has_face(face):
            raise NotAFace(f"{face} is not a face")
        return face

    def link(self, face: Sequence[int]) -> "SimplicialComplex":
        """Link of a non-maximal face; a pure complex of dimension ``dim - len(face)``."""
        face = self._check_face(face)
        if len(face) > self.dim:
            raise BadDimension("the link of a facet is empty")
        s = set(face)
        rows = [self.labels_of(x for x in f if x not in s) for f in self.facets_containing(face)]
        return from_facets(rows)

    def star(self, face: Sequence[int]) -> "SimplicialComplex":
        face = self._check_face(face)
        return from_facets([self.labels_of(f) for f in self.facets_containing(face)])

    def is_connected(self) -> bool:
        parent = list(self.vertices)

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for f in self.facets:
            r = find(f[0])
            for v in f[1:]:
                parent[find(v)] = r
        return len({find(v) for v in self.vertices}) == 1


Complex3 = SimplicialComplex
Surface2 = SimplicialComplex


def from_facets(rows: Iterable[Sequence]) -> SimplicialComplex:
    """Build a complex from rows of vertex labels.

    Labels may be any objects; they are converted with ``str``. Duplicate
    rows (as sets) are merged.
    """
    rows = [tuple(str(x) for x in row) for row in rows]
    if not rows:
        raise EmptyComplex("no facets given")
    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise MixedDimension(f"row {i + 1} has {len(row)} vertices, expected {width}", row=i)
        if len(set(row)) != len(row):
            raise DegenerateFacet(f"row {i + 1} repeats a vertex: {' '.join(row)}", row=i)
        for x in row:
            if not x or any(c.isspace() for c in x) or "#" in x:
                raise InvalidLabel(f"invalid vertex label {x!r}")
    if not 2 <= width <= 4:
        raise BadDimension(f"facets must have 2 to 4 vertices, got {width}")
    labels = sorted({x for row in rows for x in row}, key=label_key)
    index = {label: i for i, label in enumerate(labels)}
    facets = [tuple(sorted(index[x] for x in row)) for row in rows]
    return SimplicialComplex(facets, labels)


def require_dim(K: SimplicialComplex, dim: int) -> None:
    if K.dim != dim:
        raise BadDimension(f"expected a {dim}-dimensional complex, got dimension {K.dim}")
