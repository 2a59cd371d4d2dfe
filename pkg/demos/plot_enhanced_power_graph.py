"""
The enhanced power graph of a small group
=========================================

Two elements are joined when together they generate a cyclic subgroup.
The graph is a union of cliques, one per maximal cyclic subgroup.
"""

import numpy as np

from enhanced_power import builtin
from enhanced_power.graph import build_graph, diameter, export_dot, maximal_cyclic_subgroups

##############################################################################
# Q8 has three maximal cyclic subgroups of order 4, all containing -1

G = builtin("Q8")
for C in maximal_cyclic_subgroups(G):
    print(sorted(C.members))

##############################################################################
# The identity is left out. -1 sees every other vertex, so the diameter is 2

graph = build_graph(G)
print("edges:", graph.edge_count)
print("universal:", sorted(graph.universal_vertices))
print("diameter:", diameter(graph))
print("degrees:", np.array([graph.degree(v) for v in graph.vertices]))

##############################################################################
# In S3 the involutions are isolated, so the graph is disconnected

S3 = builtin("S3")
print("S3 diameter:", diameter(build_graph(S3)))

##############################################################################
# DOT output for Graphviz

print(export_dot(build_graph(S3)))
