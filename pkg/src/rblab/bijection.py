"""Bijection between nonzero-weight operators and 2-colored rooted trees.

A weight-w solution of the identity, normalized to weight 1, has
diagonal entries in {0, -1} and a valid structure digraph; the digraph
folds into a rooted tree and the diagonal paints each vertex white
(r_ii = 0) or black (r_ii = -1).  Conversely a colored tree unfolds into
the digraph joining vertices to their proper ancestors, and every edge
(i, k) receives the entry +1 when i is white and -1 when i is black;
scaling the matrix by w yields the weight-w operator.  The two maps are
mutually inverse, and flipping every color realizes the involution
R -> -R - w*id on the tree side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactlin import Matrix
from .rbcore import RBOperator, normalize_weight, verify_rb_identity
from .structgraph import digraph_from_matrix, from_rooted_tree, to_rooted_tree
from .trees import BLACK, WHITE, ColoredRootedTree, flip_colors, validate_parent


@dataclass(frozen=True)
class RBTreeForm:
    """A colored rooted tree together with the weight it encodes."""

    tree: ColoredRootedTree
    weight: Fraction

    def __post_init__(self):
        if not isinstance(self.weight, Fraction) or self.weight == 0:
            raise ValueError("weight must be a nonzero Fraction")


def matrix_to_tree(op: RBOperator) -> RBTreeForm:
    """Colored-tree form of a nonzero-weight operator satisfying the identity."""
    if op.weight == 0:
        raise ValueError("the tree correspondence needs nonzero weight")
    if not verify_rb_identity(op):
        raise ValueError("not a Rota-Baxter operator")
    w1 = normalize_weight(op)
    parent = to_rooted_tree(digraph_from_matrix(w1))
    color = []
    for i in range(op.n):
        d = w1.matrix.at(i, i)
        if d == 0:
            color.append(WHITE)
        elif d == -1:
            color.append(BLACK)
        else:
            raise ValueError("normalized diagonal outside {0, -1}")
    return RBTreeForm(ColoredRootedTree(op.n, parent, tuple(color)), op.weight)


def tree_to_matrix(form: RBTreeForm) -> RBOperator:
    """Operator encoded by a colored tree at the form's weight."""
    t = form.tree
    validate_parent(t.parent)
    w = form.weight
    g = from_rooted_tree(t.parent)
    n = t.n
    entries = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        entries[i][i] = Fraction(0) if t.color[i] == WHITE else -w
    for (i, k) in g.edges:
        entries[i - 1][k - 1] = w if t.color[i - 1] == WHITE else -w
    return RBOperator(n, w, Matrix.from_rows(entries))


def phi_on_tree(form: RBTreeForm) -> RBTreeForm:
    """Tree-side involution: flip every color, keep the shape and weight."""
    return RBTreeForm(flip_colors(form.tree), form.weight)
