"""The smallest average edge order a singular complex can have.

Cone RP^2 over one of its own vertices, check the result, and confirm that
edge-folding a 9-vertex stacked sphere lands on the same complex.
"""
import random

from edgeorder import analyze, are_isomorphic, is_normal_pseudomanifold
from edgeorder import constructions as C
from edgeorder.io import dump_facets, render_report

L = C.rp2_6()
print("RP^2 on", L.num_vertices, "vertices,", len(L), "triangles")

K = C.one_vertex_suspension(L, L.vid("6"))
print(is_normal_pseudomanifold(K).verdict)
print(render_report(analyze(K)))

# the facet list, in the same format `edgeorder analyze` reads
print(dump_facets(K))

# folding an edge of a stacked sphere creates two RP^2 singularities
S = C.stacked_sphere(9, random.Random(12))
spec, folded = C.find_folding(S, 2)
print("folded edge", S.labels_of(spec.apex), "->", folded.f_vector())

w = are_isomorphic(folded, K)
print("same complex:", w is not None)
for a, b in sorted(w.items()):
    print(f"  {folded.labels[a]} -> {K.labels[b]}")
