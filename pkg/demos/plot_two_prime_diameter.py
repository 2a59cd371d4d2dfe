"""
Diameter of the graph for groups of order p^a q^b
=================================================

With two prime divisors, the graph has diameter 2 exactly when K(G) is
non-trivial. With three primes the center is the natural guess, and the
scan at the end looks for groups where that guess fails.
"""

from enhanced_power import builtin
from enhanced_power.catalog import generate_catalog
from enhanced_power.structure import open_question_rows, theorem_b_verify

##############################################################################
# Dic12 against S3

for name in ("Dic12", "S3", "C3xS3"):
    rep = theorem_b_verify(builtin(name))
    print(f"{name:8s} diameter {rep.diameter}  |K| {rep.k_order}  agrees {rep.agrees}")

##############################################################################
# Sweep the corpus up to order 120

groups = [e.group for e in generate_catalog(120)]
reps = [theorem_b_verify(G) for G in groups]
applicable = [r for r in reps if r.applicable]
print(len(applicable), "applicable,", sum(not r.agrees for r in applicable), "disagreements")

##############################################################################
# Three-prime groups: does diameter 2 match a non-trivial center?

for row in open_question_rows(groups):
    match = (row.diameter == 2) == (row.center_order > 1)
    print(f"{row.name:14s} {row.order:4d} {row.diameter} |Z|={row.center_order} {'' if match else '<-- mismatch'}")
