"""Suspensions of surfaces, and how close to 8 the average edge order gets."""
from fractions import Fraction

from edgeorder import analyze, check_g2_lower_bound, km_formula
from edgeorder import constructions as C
from edgeorder.invariants import km_sweep

for name in ("rp2-6", "torus-7"):
    L = C.generate(name)
    K = C.suspension(L)
    rep = analyze(K)
    print(f"{name}: f = {rep.fvec.as_tuple()}  mu0 = {rep.mu0}  g2 = {rep.g2}  -> {rep.verdict.case_tag}")
    for v, lk, ok in check_g2_lower_bound(K):
        if lk:
            print(f"    vertex {K.labels[v]}: g2(link) = {lk} <= {rep.g2}: {ok}")

# minimal triangulations of the genus-m orientable surface, suspended
for m in (3, 4, 10, 100, 1000):
    k = km_formula(m)
    print(f"m = {m:5d}  V_m = {k.V_m:4d}  mu0 = {k.mu0}  ({float(k.mu0):.4f})")

count, last = km_sweep(10**5)
print(f"{count} genera checked, mu0 stays below 8; at 10^5 the gap is {Fraction(8) - last}")
