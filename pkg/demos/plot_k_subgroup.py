"""
Which primes divide K(G)
========================

K(G) is the identity together with the vertices adjacent to everything.
For solvable groups the primes dividing its order can be read off the
Sylow structure, and this script compares both sides.
"""

from enhanced_power import builtin
from enhanced_power.graph import k_subgroup
from enhanced_power.structure import theorem_a_predict, theorem_a_verify

##############################################################################
# C3 x Q8: both primes survive, by different routes

G = builtin("C3xQ8")
print("|K| =", k_subgroup(G).order)
for p in G.primes:
    print(p, theorem_a_predict(G, p).tag.value)

##############################################################################
# SL(2,3) has a quaternion Sylow 2-subgroup but no normal 2-complement

rep = theorem_a_verify(builtin("SL2_3"))
for r in rep.primes:
    print(r.p, r.case, "predicted", r.predicted, "graph", r.actual)

##############################################################################
# Both ways of computing K agree, and D8 has nothing universal

for name in ("D8", "Q16", "S4", "GL2_3_TILDE"):
    G = builtin(name)
    a, b = k_subgroup(G, "universal"), k_subgroup(G, "intersection")
    print(f"{name:12s} |K| = {a.order}  agree = {a.members == b.members}")
