"""Enhanced power graphs of finite groups and the universal-vertex subgroup K(G)."""

from .catalog import GroupSpec, generate_catalog, load_group, save_group, write_report
from .constructions import builtin, direct_product, gl2_3_tilde, matrix_group
from .graph import INFINITE, build_graph, diameter, export_dot, k_subgroup
from .groups import ElementSet, Group, from_cayley_table, from_permutations
from .structure import theorem_a_verify, theorem_b_verify, verify_group

__all__ = [
    "ElementSet",
    "Group",
    "GroupSpec",
    "INFINITE",
    "build_graph",
    "builtin",
    "diameter",
    "direct_product",
    "export_dot",
    "from_cayley_table",
    "from_permutations",
    "generate_catalog",
    "gl2_3_tilde",
    "k_subgroup",
    "load_group",
    "matrix_group",
    "save_group",
    "theorem_a_verify",
    "theorem_b_verify",
    "verify_group",
    "write_report",
]
