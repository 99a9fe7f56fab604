"""The operator <-> colored-tree dictionary: matrices to trees and back,
color flipping as the phi involution, and equivariance under relabeling.

Round trips are exhaustive for n <= 4 here; the n = 5 sweep lives in the
acceptance suite.
"""

import random
from fractions import Fraction

import pytest

from rblab.bijection import (RBTreeForm, matrix_to_tree, phi_on_tree,
                             tree_to_matrix)
from rblab.exactlin import Matrix
from rblab.rbcore import conjugate, make_operator, phi, verify_rb_identity
from rblab.tables import (FIXTURE_N5, FIXTURE_N5_COLORS, FIXTURE_N5_PARENT)
from rblab.trees import (BLACK, WHITE, ColoredRootedTree, enumerate_colorings,
                         enumerate_labeled_rooted_trees)

W, B = WHITE, BLACK


def _form(parent, color, weight=1):
    tree = ColoredRootedTree(len(parent), tuple(parent), tuple(color))
    return RBTreeForm(tree, Fraction(weight))


def _relabel_tree(tree, sigma):
    n = tree.n
    parent = [0] * n
    color = [None] * n
    for i in range(1, n + 1):
        p = tree.parent[i - 1]
        parent[sigma[i - 1] - 1] = 0 if p == 0 else sigma[p - 1]
        color[sigma[i - 1] - 1] = tree.color[i - 1]
    return ColoredRootedTree(n, tuple(parent), tuple(color))


# -------------------------------------------------------- matrix_to_tree

def test_zero_operator_gives_all_white_star():
    form = matrix_to_tree(make_operator(3, 1, [[0] * 3] * 3))
    assert form.tree == ColoredRootedTree(3, (0, 0, 0), (W, W, W))
    assert form.weight == 1


def test_five_vertex_fixture_tree():
    form = matrix_to_tree(make_operator(5, 1, FIXTURE_N5))
    assert form.tree.parent == FIXTURE_N5_PARENT
    assert form.tree.color == FIXTURE_N5_COLORS


def test_lower_chain_gives_white_path():
    form = matrix_to_tree(make_operator(2, 1, [[0, 1], [0, 0]]))
    assert form.tree == ColoredRootedTree(2, (0, 1), (W, W))


def test_matrix_to_tree_rejects_non_rb():
    with pytest.raises(ValueError):
        matrix_to_tree(make_operator(2, 1, [[0, 1], [1, 0]]))


def test_matrix_to_tree_rejects_weight_zero():
    with pytest.raises(ValueError):
        matrix_to_tree(make_operator(2, 0, [[0, 0], [0, 0]]))


# -------------------------------------------------------- tree_to_matrix

def test_all_white_star_gives_zero_matrix():
    op = tree_to_matrix(_form((0, 0), (W, W)))
    assert op.matrix == Matrix.zero(2, 2)
    assert op.weight == 1


def test_white_path_gives_upper_shift():
    op = tree_to_matrix(_form((0, 1), (W, W)))
    assert op.matrix == Matrix.from_rows([[0, 1], [0, 0]])


def test_five_vertex_fixture_matrix():
    op = tree_to_matrix(_form(FIXTURE_N5_PARENT, FIXTURE_N5_COLORS))
    assert op.matrix == Matrix.from_rows(FIXTURE_N5)


def test_black_source_gets_negative_entries():
    op = tree_to_matrix(_form((0, 1), (B, W)))
    assert op.matrix == Matrix.from_rows([[-1, -1], [0, 0]])
    assert verify_rb_identity(op)


def test_outputs_always_pass_identity():
    for parent in enumerate_labeled_rooted_trees(3):
        for color in enumerate_colorings(parent):
            assert verify_rb_identity(tree_to_matrix(_form(parent, color)))


# ------------------------------------------------------------ round trips

@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_round_trip_tree_side(n):
    w = Fraction(1)
    matrices = set()
    for parent in enumerate_labeled_rooted_trees(n):
        for color in enumerate_colorings(parent):
            form = _form(parent, color)
            op = tree_to_matrix(form)
            matrices.add(op.matrix)
            back = matrix_to_tree(op)
            assert back.tree == form.tree and back.weight == w
    # injectivity: distinct colored trees hit distinct matrices
    assert len(matrices) == 2 ** n * (n + 1) ** (n - 1)


def test_round_trip_nonstandard_weights():
    for w in (Fraction(2), Fraction(-1), Fraction(1, 3), Fraction(-5, 7)):
        form = _form(FIXTURE_N5_PARENT, FIXTURE_N5_COLORS, w)
        op = tree_to_matrix(form)
        assert verify_rb_identity(op)
        assert op.weight == w
        back = matrix_to_tree(op)
        assert back.tree == form.tree and back.weight == w


def test_weight_scales_entries():
    op1 = tree_to_matrix(_form((0, 1), (W, W), 1))
    op3 = tree_to_matrix(_form((0, 1), (W, W), Fraction(3)))
    assert op3.matrix == Matrix.from_rows(
        [[3 * op1.matrix.at(i, k) for k in range(2)] for i in range(2)])


# ------------------------------------------------------------ phi on trees

def test_phi_on_tree_flips_colors():
    form = phi_on_tree(_form((0, 0), (W, W)))
    assert form.tree.color == (B, B)


def test_phi_on_tree_five_vertex_fixture():
    form = phi_on_tree(_form(FIXTURE_N5_PARENT, FIXTURE_N5_COLORS))
    flipped = tuple(B if c == W else W for c in FIXTURE_N5_COLORS)
    assert form.tree.color == flipped


def test_phi_on_tree_involution():
    form = _form((0, 1, 1), (W, B, W))
    assert phi_on_tree(phi_on_tree(form)) == form


@pytest.mark.parametrize("n", [1, 2, 3])
def test_phi_commutes_with_the_bijection(n):
    for parent in enumerate_labeled_rooted_trees(n):
        for color in enumerate_colorings(parent):
            form = _form(parent, color)
            op = tree_to_matrix(form)
            assert matrix_to_tree(phi(op)) == phi_on_tree(form)


# ------------------------------------------------------------- equivariance

def test_relabeling_equivariance():
    rng = random.Random(13)
    n = 4
    trees = [(p, c) for p in enumerate_labeled_rooted_trees(n)
             for c in enumerate_colorings(p)]
    for _ in range(120):
        parent, color = rng.choice(trees)
        form = _form(parent, color)
        sigma = tuple(rng.sample(range(1, n + 1), n))
        op = tree_to_matrix(form)
        # conjugating the operator = relabeling the tree
        inverse = [0] * n
        for i in range(1, n + 1):
            inverse[sigma[i - 1] - 1] = i
        image = conjugate(op, tuple(inverse))
        assert matrix_to_tree(image).tree == _relabel_tree(form.tree, sigma)
