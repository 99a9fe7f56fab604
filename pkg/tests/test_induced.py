"""The induced commutative product x*y = R(x)y + xR(y) + weight*xy and the
constructive certificate that the induced algebra is again a product of
fields: an explicit basis of pairwise-orthogonal idempotents.
"""

from fractions import Fraction
from itertools import product

import pytest

from rblab.induced import (certify, idempotent_basis, induced_product,
                           verify_split_isomorphism)
from rblab.rbcore import atkinson_miller_operator, make_operator, phi
from rblab.tables import FIXTURE_N5, TWELVE_N2, n3_family_matrices

ZERO = Fraction(0)
ONE = Fraction(1)


def _vec(*xs):
    return tuple(Fraction(x) for x in xs)


def _basis_vectors(n):
    return [tuple(ONE if k == i else ZERO for k in range(n)) for i in range(n)]


# --------------------------------------------------------- induced product

def test_zero_operator_weight_one_reproduces_algebra():
    alg = induced_product(make_operator(2, 1, [[0, 0], [0, 0]]))
    e1, e2 = _basis_vectors(2)
    assert alg.product(e1, e1) == e1
    assert alg.product(e2, e2) == e2
    assert alg.product(e1, e2) == _vec(0, 0)


def test_zero_operator_weight_zero_kills_product():
    alg = induced_product(make_operator(2, 0, [[0, 0], [0, 0]]))
    for x in _basis_vectors(2):
        for y in _basis_vectors(2):
            assert alg.product(x, y) == _vec(0, 0)


def test_upper_shift_structure_constants():
    alg = induced_product(make_operator(2, 1, [[0, 1], [0, 0]]))
    e1, e2 = _basis_vectors(2)
    assert alg.product(e1, e1) == e1
    assert alg.product(e1, e2) == e2
    assert alg.product(e2, e2) == e2


def test_product_is_commutative_and_associative_on_solutions():
    vecs = _basis_vectors(3)
    for rows in n3_family_matrices()[:24]:
        alg = induced_product(make_operator(3, 1, rows))
        for x, y, z in product(vecs, repeat=3):
            assert alg.product(x, y) == alg.product(y, x)
            assert alg.product(alg.product(x, y), z) == \
                alg.product(x, alg.product(y, z))


def test_induced_product_rejects_non_rb():
    with pytest.raises(ValueError):
        induced_product(make_operator(2, 1, [[0, 1], [1, 0]]))


# -------------------------------------------------------- idempotent basis

def test_zero_operator_basis_is_standard():
    basis = idempotent_basis(make_operator(2, 1, [[0, 0], [0, 0]]))
    assert set(basis.vectors) == set(_basis_vectors(2))


def test_upper_shift_basis():
    basis = idempotent_basis(make_operator(2, 1, [[0, 1], [0, 0]]))
    assert set(basis.vectors) == {_vec(1, -1), _vec(0, 1)}


def test_black_source_basis_hand_checked():
    # R(e1) = -e1-e2, R(e2) = 0: the corrective sign on the source matters
    op = make_operator(2, 1, [[-1, -1], [0, 0]])
    alg = induced_product(op)
    basis = idempotent_basis(op)
    u1 = _vec(-1, -1)
    assert u1 in basis.vectors
    assert alg.product(u1, u1) == u1
    assert verify_split_isomorphism(alg, basis)


def test_all_n2_and_n3_operators_certify():
    for rows in TWELVE_N2:
        op = make_operator(2, 1, rows)
        assert verify_split_isomorphism(induced_product(op),
                                        idempotent_basis(op))
    for rows in n3_family_matrices():
        op = make_operator(3, 1, rows)
        assert verify_split_isomorphism(induced_product(op),
                                        idempotent_basis(op))


def test_phi_partner_certifies_too():
    for rows in TWELVE_N2:
        op = phi(make_operator(2, 1, rows))
        basis = idempotent_basis(op)
        assert len(basis.vectors) == 2
        assert verify_split_isomorphism(induced_product(op), basis)


def test_source_vector_annihilates_other_components():
    # two weakly connected components: {1, 2} and {3}
    op = make_operator(3, 1, [[0, 1, 0], [0, 0, 0], [0, 0, -1]])
    alg = induced_product(op)
    basis = idempotent_basis(op)
    e3 = _vec(0, 0, 1)
    source = next(v for v in basis.vectors if v[0] != 0)
    assert source[2] == 0
    assert alg.product(source, e3) == _vec(0, 0, 0)


def test_five_vertex_fixture_certifies():
    op = make_operator(5, 1, FIXTURE_N5)
    alg = induced_product(op)
    basis = idempotent_basis(op)
    assert verify_split_isomorphism(alg, basis)
    for v in basis.vectors:
        assert alg.product(v, v) == v


def test_idempotent_basis_rejects_bad_input():
    with pytest.raises(ValueError):
        idempotent_basis(make_operator(2, 1, [[0, 1], [1, 0]]))
    with pytest.raises(ValueError):
        idempotent_basis(make_operator(2, 0, [[0, 0], [0, 0]]))


def test_nonstandard_weights_certify():
    for w in (Fraction(2), Fraction(-1), Fraction(1, 3)):
        op = atkinson_miller_operator(4, 2, weight=w)
        basis = idempotent_basis(op)
        assert verify_split_isomorphism(induced_product(op), basis)


# -------------------------------------------------- isomorphism certificate

def test_standard_basis_certifies_in_plain_algebra():
    alg = induced_product(make_operator(2, 1, [[0, 0], [0, 0]]))
    basis = idempotent_basis(make_operator(2, 1, [[0, 0], [0, 0]]))
    assert verify_split_isomorphism(alg, basis)


def test_repeated_vector_fails_certificate():
    from rblab.induced import IdempotentBasis
    alg = induced_product(make_operator(2, 1, [[0, 0], [0, 0]]))
    e1 = _vec(1, 0)
    assert not verify_split_isomorphism(alg, IdempotentBasis((e1, e1)))


def test_non_orthogonal_pair_fails_certificate():
    from rblab.induced import IdempotentBasis
    alg = induced_product(make_operator(2, 1, [[0, 0], [0, 0]]))
    # e1+e2 is idempotent but not orthogonal to e2
    bad = IdempotentBasis((_vec(1, 1), _vec(0, 1)))
    assert not verify_split_isomorphism(alg, bad)


def test_non_idempotent_vector_fails_certificate():
    from rblab.induced import IdempotentBasis
    alg = induced_product(make_operator(2, 1, [[0, 0], [0, 0]]))
    bad = IdempotentBasis((_vec(2, 0), _vec(0, 1)))
    assert not verify_split_isomorphism(alg, bad)


def test_certify_report_shape():
    report = certify(make_operator(2, 1, [[0, 1], [0, 0]]))
    assert report["certified"] is True
    assert report["n"] == 2
    assert report["matrix"] == [["0", "1"], ["0", "0"]]
    assert len(report["idempotents"]) == 2
    assert all(isinstance(x, str) for row in report["idempotents"] for x in row)
