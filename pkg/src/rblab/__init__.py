"""Exact tools for Rota-Baxter operators of nonzero weight on F^n.

The package enumerates, verifies, classifies and counts the solutions of
R(x)R(y) = R(R(x)y + xR(y) + w xy) on a direct sum of n copies of a
field, realizes their correspondence with 2-colored rooted trees, and
certifies constructively that the induced product again splits as F^n.
All arithmetic is exact (stdlib fractions).
"""

from .exactlin import Matrix, Rational, rat
from .rbcore import (Classification, RBOperator, atkinson_miller_operator,
                     classify, compose_perms, conjugate, is_inner_splitting,
                     is_splitting, make_operator, make_splitting,
                     normalize_weight, operator_from_dict, operator_to_dict,
                     phi, restrict, triangularize, verify_rb_identity,
                     verify_structure_conditions)
from .structgraph import (StructureDigraph, digraph_from_matrix,
                          from_rooted_tree, is_antisymmetric, is_moral,
                          is_transitive, is_valid, level_function,
                          to_rooted_tree)
from .trees import (ColoredRootedTree, TreeStructureError, canonical_code,
                    count_splitting_labeled_fast,
                    count_unlabeled_all, count_unlabeled_rooted_trees,
                    enumerate_colorings, enumerate_labeled_rooted_trees,
                    flip_colors, is_alternating, is_properly_colored)
from .bijection import RBTreeForm, matrix_to_tree, phi_on_tree, tree_to_matrix
from .induced import (AlgebraStructure, IdempotentBasis, certify,
                      idempotent_basis, induced_product,
                      verify_split_isomorphism)

__version__ = "0.1.0"

__all__ = [
    "AlgebraStructure", "Classification", "ColoredRootedTree",
    "IdempotentBasis", "Matrix", "RBOperator", "RBTreeForm", "Rational",
    "StructureDigraph", "TreeStructureError", "atkinson_miller_operator",
    "canonical_code",
    "certify", "classify", "compose_perms", "conjugate",
    "count_splitting_labeled_fast", "count_unlabeled_all",
    "count_unlabeled_rooted_trees", "digraph_from_matrix",
    "enumerate_colorings", "enumerate_labeled_rooted_trees", "flip_colors",
    "from_rooted_tree", "idempotent_basis", "induced_product",
    "is_alternating", "is_antisymmetric", "is_inner_splitting", "is_moral",
    "is_properly_colored", "is_splitting", "is_transitive", "is_valid",
    "level_function", "make_operator", "make_splitting", "matrix_to_tree",
    "normalize_weight", "operator_from_dict", "operator_to_dict", "phi",
    "phi_on_tree", "rat", "restrict", "to_rooted_tree", "tree_to_matrix",
    "triangularize", "verify_rb_identity", "verify_split_isomorphism",
    "verify_structure_conditions",
]
