"""Local moves on stacked spheres, and a folding that creates a torus link."""
import random

from edgeorder import analyze, g2_g3
from edgeorder import constructions as C

rng = random.Random(7)
K = C.stacked_sphere(8, rng)
print("stacked sphere", K.f_vector().as_tuple(), "g2 =", g2_g3(K)[0])

# 2-3 move on the first triangle whose opposite vertices are not yet joined
for t in K.skeleton(2):
    d, e = (set(f) - set(t) for f in K.facets_containing(t))
    if not K.has_face(tuple(sorted(d | e))):
        break
M = C.bistellar_1_move(K, t)
print("2-3 move on", K.labels_of(t), "->", M.f_vector().as_tuple(), "g2 =", g2_g3(M)[0])

# contraction undoes the 1-4 move
N = C.bistellar_0_move(K, K.facets[0])
new = N.vid(next(x for x in N.labels if x not in K.labels))
back = C.edge_contraction(N, (min(N.neighbours[new]), new))
print("1-4 move then contraction:", back.f_vector().as_tuple())

# identify two facets through a common vertex
S = C.stacked_sphere(11, random.Random(136))
spec, T = C.find_folding(S, 1)
apex = S.labels[spec.apex[0]]
rep = analyze(T)
print("vertex folding at", apex, ":", S.f_vector().as_tuple(), "->", rep.fvec.as_tuple())
print("  mu0 =", rep.mu0, " g2 =", rep.g2, " link of", apex, "is", rep.link_classes[T.vid(apex)].name)
print(" ", rep.verdict.case_tag, "-", rep.verdict.narrative)
