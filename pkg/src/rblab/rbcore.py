"""Rota-Baxter operators on the split commutative algebra A = F^n.

A carries the basis e_1, ..., e_n of orthogonal idempotents, so
e_i e_j = delta_ij e_i.  A linear operator R is stored row-wise: row i
of the matrix holds the coordinates of R(e_i), i.e. R(e_i) = sum_k
r_ik e_k.  R is a Rota-Baxter operator of weight w when

    R(x) R(y) = R( R(x) y + x R(y) + w x y )   for all x, y in A.

Both sides are bilinear, so checking the identity on all basis pairs
(e_i, e_j) decides it.  For weight 1 the identity is equivalent to four
entry-wise structure conditions on the matrix (SF1, SF2, SF3a, SF3b
below); scaling a weight-1 operator by w gives the general nonzero
weight, and phi(R) = -R - w*id is an involution on the set of solutions.

Indices on the public surface (vertices, supports, permutations) are
1-based; raw matrix access is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactlin import Matrix, inverse, mat_add, mat_mul, rank, rat, scalar_mul


@dataclass(frozen=True)
class RBOperator:
    """A candidate operator: dimension, weight, and its matrix (row convention)."""

    n: int
    weight: Fraction
    matrix: Matrix

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not isinstance(self.weight, Fraction):
            raise ValueError("weight must be a Fraction")
        if (self.matrix.rows, self.matrix.cols) != (self.n, self.n):
            raise ValueError("matrix shape does not match n")


def make_operator(n, weight, rows) -> RBOperator:
    """Convenience constructor coercing weight and entries to rationals."""
    return RBOperator(n, rat(weight), Matrix.from_rows(rows))


@dataclass(frozen=True)
class Classification:
    is_rb: bool
    is_splitting: bool
    is_inner_splitting: bool
    class_label: str


def verify_rb_identity(op: RBOperator) -> bool:
    """Check the Rota-Baxter identity on every basis pair.

    On (e_i, e_j) the k-th coordinate of the left side is r_ik r_jk and
    the right side is R(r_ij e_j + r_ji e_i + w delta_ij e_i).  The
    condition is symmetric in (i, j), so pairs with i <= j suffice.
    """
    m, w, n = op.matrix, op.weight, op.n
    rows = [m.row(i) for i in range(n)]
    for i in range(n):
        ri = rows[i]
        for j in range(i, n):
            rj = rows[j]
            a = ri[j] + (w if i == j else 0)  # coefficient of row j on the right
            b = rj[i]
            for k in range(n):
                if ri[k] * rj[k] != a * rj[k] + b * ri[k]:
                    return False
    return True


def verify_structure_conditions(op: RBOperator):
    """Entry-wise test equivalent to the identity at weight 1.

    Returns (True, None) or (False, tag) where tag names the first
    violated condition in the fixed order SF1, SF2, SF3a, SF3b:

      SF1  row i is either r_ii = 0 with off-diagonal entries in {0, 1},
           or r_ii = -1 with off-diagonal entries in {0, -1};
      SF2  if r_ik = r_ki = 0 for i != k, then r_il r_kl = 0 for every
           l outside {i, k};
      SF3a if r_ik != 0 for i != k, then r_ki = 0;
      SF3b if r_ik != 0 for i != k, then every l outside {i, k} has
           r_kl = 0 or r_il = r_ik.
    """
    if op.weight != 1:
        raise ValueError("structure conditions apply to weight 1; normalize first")
    m, n = op.matrix, op.n
    for i in range(n):
        d = m.at(i, i)
        if d == 0:
            allowed = (0, 1)
        elif d == -1:
            allowed = (0, -1)
        else:
            return False, "SF1"
        for k in range(n):
            if k != i and m.at(i, k) not in allowed:
                return False, "SF1"
    for i in range(n):
        for k in range(i + 1, n):
            if m.at(i, k) == 0 and m.at(k, i) == 0:
                for l in range(n):
                    if l != i and l != k and m.at(i, l) * m.at(k, l) != 0:
                        return False, "SF2"
    for i in range(n):
        for k in range(i + 1, n):
            if m.at(i, k) != 0 and m.at(k, i) != 0:
                return False, "SF3a"
    for i in range(n):
        for k in range(n):
            if k == i or m.at(i, k) == 0:
                continue
            v = m.at(i, k)
            for l in range(n):
                if l != i and l != k and m.at(k, l) != 0 and m.at(i, l) != v:
                    return False, "SF3b"
    return True, None


def phi(op: RBOperator) -> RBOperator:
    """The involution R -> -R - w*id; preserves the identity for weight w."""
    m = mat_add(scalar_mul(Fraction(-1), op.matrix),
                scalar_mul(-op.weight, Matrix.identity(op.n)))
    return RBOperator(op.n, op.weight, m)


def normalize_weight(op: RBOperator) -> RBOperator:
    """Rescale a nonzero-weight operator to weight 1 (divide matrix by w)."""
    if op.weight == 0:
        raise ValueError("cannot normalize weight 0")
    return RBOperator(op.n, Fraction(1),
                      scalar_mul(Fraction(1) / op.weight, op.matrix))


def _check_perm(sigma, n):
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {sigma!r}")
    return sigma


def conjugate(op: RBOperator, sigma) -> RBOperator:
    """Relabel idempotents by sigma (1-based images): new r_im = old r_{sigma(i) sigma(m)}.

    This realizes conjugation by the algebra automorphism e_i -> e_{sigma(i)};
    with composition (sigma tau)(i) = sigma(tau(i)) it satisfies
    conjugate(conjugate(X, sigma), tau) = conjugate(X, compose_perms(sigma, tau)).
    """
    sigma = _check_perm(sigma, op.n)
    m = op.matrix
    rows = [[m.at(sigma[i] - 1, sigma[k] - 1) for k in range(op.n)]
            for i in range(op.n)]
    return RBOperator(op.n, op.weight, Matrix.from_rows(rows))


def compose_perms(sigma, tau):
    """(sigma tau)(i) = sigma(tau(i)), both given as tuples of 1-based images."""
    n = len(sigma)
    sigma = _check_perm(sigma, n)
    tau = _check_perm(tau, n)
    return tuple(sigma[tau[i] - 1] for i in range(n))


def _span_rows(vectors, n):
    if any(len(v) != n for v in vectors):
        raise ValueError("basis vector of wrong length")
    return [tuple(rat(x) for x in v) for v in vectors]


def _closed_under_product(basis, n):
    """Is span(basis) closed under the componentwise product?"""
    if not basis:
        return True
    stack = Matrix.from_rows(basis)
    r0 = rank(stack)
    if r0 != len(basis):
        raise ValueError("basis vectors are linearly dependent")
    for a in range(len(basis)):
        for b in range(a, len(basis)):
            prod = tuple(x * y for x, y in zip(basis[a], basis[b]))
            ext = Matrix.from_rows(list(basis) + [prod])
            if rank(ext) != r0:
                return False
    return True


def make_splitting(n, weight, basis1, basis2) -> RBOperator:
    """Build R = -w * (projection onto A_2 parallel to A_1).

    basis1 and basis2 are rational bases of two subalgebras with
    A = A_1 (+) A_2; the resulting operator satisfies the identity for
    weight w.  Raises ValueError if the spans are not complementary
    subalgebras or w = 0.
    """
    w = rat(weight)
    if w == 0:
        raise ValueError("weight must be nonzero")
    b1 = _span_rows(basis1, n)
    b2 = _span_rows(basis2, n)
    if len(b1) + len(b2) != n:
        raise ValueError("dimensions of the two spans must add up to n")
    if not _closed_under_product(b1, n) or not _closed_under_product(b2, n):
        raise ValueError("a span is not closed under the componentwise product")
    cols = b1 + b2
    try:
        binv = inverse(Matrix.from_rows([[cols[j][i] for j in range(n)]
                                         for i in range(n)]))
    except ValueError:
        raise ValueError("the two spans do not form a direct sum") from None
    k1 = len(b1)
    rows = []
    for i in range(n):
        coord = [binv.at(j, i) for j in range(n)]  # e_i in the mixed basis
        proj = [Fraction(0)] * n
        for j in range(k1, n):
            c = coord[j]
            if c:
                for t in range(n):
                    proj[t] += c * cols[j][t]
        rows.append([-w * x for x in proj])
    return RBOperator(n, w, Matrix.from_rows(rows))


def is_splitting(op: RBOperator) -> bool:
    """True iff A splits as ker(R) (+) ker(R + w*id), via the rank test
    rank(R) + rank(R + w*id) = n.  Assumes verify_rb_identity(op)."""
    if op.weight == 0:
        return op.matrix.is_zero()
    shifted = mat_add(op.matrix, scalar_mul(op.weight, Matrix.identity(op.n)))
    return rank(op.matrix) + rank(shifted) == op.n


def is_inner_splitting(op: RBOperator) -> bool:
    """True iff R(1) is a scalar multiple of 1 = e_1 + ... + e_n, i.e. all
    column sums of the matrix coincide.  Assumes verify_rb_identity(op)."""
    m, n = op.matrix, op.n
    sums = [sum(m.at(i, k) for i in range(n)) for k in range(n)]
    return all(s == sums[0] for s in sums)


def restrict(op: RBOperator, support) -> RBOperator:
    """Restrict to the subalgebra spanned by the given 1-based indices."""
    idx = sorted(set(support))
    if not idx:
        raise ValueError("empty support")
    if idx[0] < 1 or idx[-1] > op.n:
        raise ValueError("support index out of range")
    m = op.matrix
    rows = [[m.at(i - 1, k - 1) for k in idx] for i in idx]
    return RBOperator(len(idx), op.weight, Matrix.from_rows(rows))


def triangularize(op: RBOperator):
    """Sort vertices by level to exhibit an upper triangular conjugate.

    Returns (sigma, conjugate(op, sigma)) where sigma lists the old
    vertex at each new position, ordered by (level, vertex).  The result
    has diagonal in {0, -1} and strictly upper triangular support.
    Requires a weight-1 operator satisfying the identity.
    """
    if op.weight != 1:
        raise ValueError("triangularize expects weight normalized to 1")
    if not verify_rb_identity(op):
        raise ValueError("not a Rota-Baxter operator")
    from .structgraph import digraph_from_matrix, level_function
    f = level_function(digraph_from_matrix(op))
    sigma = tuple(sorted(range(1, op.n + 1), key=lambda v: (f[v], v)))
    return sigma, conjugate(op, sigma)


def classify(op: RBOperator) -> Classification:
    """Full classification; non-RB input yields the label "non-rb"."""
    if not verify_rb_identity(op):
        return Classification(False, False, False, "non-rb")
    if op.weight == 0:
        # Only the zero operator; it arises from A = A (+) 0 and fixes 1.
        return Classification(True, True, True, "inner-splitting")
    sp = is_splitting(op)
    inn = is_inner_splitting(op)
    if sp and inn:
        label = "inner-splitting"
    elif sp:
        label = "splitting"
    else:
        label = "non-splitting"
    return Classification(True, sp, inn, label)


def atkinson_miller_operator(n, s, weight=1) -> RBOperator:
    """Triangular family: R(e_i) = w(e_{i+1}+...+e_s) for i < s, R(e_s) = 0,
    and R(e_i) = -w(e_i+...+e_n) for i > s.  Valid for 1 <= s <= n."""
    if not 1 <= s <= n:
        raise ValueError("need 1 <= s <= n")
    w = rat(weight)
    rows = []
    for i in range(1, n + 1):
        if i < s:
            row = [w if i < l <= s else Fraction(0) for l in range(1, n + 1)]
        elif i == s:
            row = [Fraction(0)] * n
        else:
            row = [-w if l >= i else Fraction(0) for l in range(1, n + 1)]
        rows.append(row)
    return RBOperator(n, w, Matrix.from_rows(rows))


def operator_to_dict(op: RBOperator) -> dict:
    """JSON-ready mapping with entries as exact "p/q" strings."""
    return {
        "n": op.n,
        "weight": str(op.weight),
        "matrix": [[str(x) for x in op.matrix.row(i)] for i in range(op.n)],
    }


def operator_from_dict(d) -> RBOperator:
    """Inverse of operator_to_dict; raises ValueError on malformed input."""
    if not isinstance(d, dict):
        raise ValueError("operator document must be a JSON object")
    try:
        n = d["n"]
        weight = d["weight"]
        matrix = d["matrix"]
    except (KeyError, TypeError):
        raise ValueError("operator document needs keys n, weight, matrix") from None
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    if not isinstance(matrix, list) or len(matrix) != n \
            or any(not isinstance(r, list) or len(r) != n for r in matrix):
        raise ValueError("matrix must be an n x n array")
    try:
        return make_operator(n, rat(weight), matrix)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational entry: {exc}") from None
