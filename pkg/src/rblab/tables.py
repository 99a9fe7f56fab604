"""Frozen reference data: counting tables, closed forms, small fixtures.

The labeled table counts operators of weight 1 on F^n; the unlabeled
table counts them up to relabeling of the idempotents, equivalently
2-colored rooted trees on n+1 vertices up to isomorphism.  OEIS ids are
recorded as plain metadata strings; the values are embedded, nothing is
looked up at runtime.  Closed forms marked conjectural match every
computed value in the supported range but carry no proof; the conjecture
checker treats agreement as evidence only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .trees import count_unlabeled_rooted_trees

CLASS_LABELS = ("all", "splitting", "inner-splitting", "non-splitting")


@dataclass(frozen=True)
class ReferenceTable:
    class_label: str
    labeled: tuple  # n = 1..5
    unlabeled: tuple  # n = 1..5
    labeled_formula: str | None
    unlabeled_formula: str | None
    conjectural: bool
    oeis: str | None


REFERENCE_TABLES = (
    ReferenceTable("all", (2, 12, 128, 2000, 41472), (2, 7, 26, 107, 458),
                   "2^n*(n+1)^(n-1)", "euler-transform recurrence", False,
                   "A097629 labeled / A000151 unlabeled"),
    ReferenceTable("splitting", (2, 8, 50, 432, 4802), (2, 5, 12, 30, 74),
                   "2*(n+2)^(n-1)", "sum r_i*r_j over i+j=n+2", True,
                   "A007830 labeled / A000106 unlabeled (both conjectural)"),
    ReferenceTable("inner-splitting", (2, 6, 32, 250, 2592), (2, 4, 8, 18, 40),
                   "2*(n+1)^(n-1)", "2 * (rooted trees on n+1 vertices)", False,
                   "2*A000272 labeled / 2*A000081 unlabeled"),
    ReferenceTable("non-splitting", (0, 4, 78, 1568, 36670), (0, 2, 14, 77, 384),
                   None, None, False, None),
)

REFERENCE_BY_CLASS = {t.class_label: t for t in REFERENCE_TABLES}

# Unlabeled totals for n = 1..8; the last three extend past the table and
# pin the recurrence.
UNLABELED_ALL_EXTENDED = (2, 7, 26, 107, 458, 2058, 9498, 44947)


def labeled_all_formula(n: int) -> int:
    return 2 ** n * (n + 1) ** (n - 1)


def labeled_inner_splitting_formula(n: int) -> int:
    return 2 * (n + 1) ** (n - 1)


def labeled_splitting_conjecture(n: int) -> int:
    """Conjectured closed form; agreement is checked, never assumed."""
    return 2 * (n + 2) ** (n - 1)


def unlabeled_inner_splitting_formula(n: int) -> int:
    return 2 * count_unlabeled_rooted_trees(n + 1)


def unlabeled_splitting_conjecture(n: int) -> int:
    """Conjectured value: sum of r_i * r_j over i + j = n + 2, where r_m
    counts unlabeled rooted trees on m vertices."""
    r = [count_unlabeled_rooted_trees(m) for m in range(1, n + 2)]
    return sum(r[i - 1] * r[n + 2 - i - 1] for i in range(1, n + 2))


# The 12 weight-1 operators for n = 2, in the fixed fixture order.
TWELVE_N2 = (
    ((0, 0), (0, 0)),
    ((-1, 0), (0, -1)),
    ((0, 0), (1, 0)),
    ((-1, 0), (-1, -1)),
    ((-1, 0), (0, 0)),
    ((0, 0), (0, -1)),
    ((0, 0), (-1, -1)),
    ((-1, 0), (1, 0)),
    ((-1, -1), (0, 0)),
    ((0, 1), (0, -1)),
    ((0, 1), (0, 0)),
    ((-1, -1), (0, -1)),
)


def n3_family_matrices():
    """The 128 weight-1 operators for n = 3: sixteen matrix shapes over
    the diagonal choices a, b, c in {0, -1}, off-diagonal entries either
    0 or 2d+1 for the row's diagonal d (so +1 under 0 and -1 under -1)."""
    out = []
    for a in (0, -1):
        for b in (0, -1):
            for c in (0, -1):
                A, B, C = 2 * a + 1, 2 * b + 1, 2 * c + 1
                out.extend([
                    ((a, 0, 0), (0, b, 0), (0, 0, c)),
                    ((a, 0, 0), (0, b, 0), (C, C, c)),
                    ((a, 0, 0), (0, b, 0), (C, 0, c)),
                    ((a, 0, 0), (0, b, 0), (0, C, c)),
                    ((a, 0, 0), (B, b, 0), (0, 0, c)),
                    ((a, 0, 0), (B, b, 0), (C, C, c)),
                    ((a, A, 0), (0, b, 0), (0, 0, c)),
                    ((a, A, 0), (0, b, 0), (C, C, c)),
                    ((a, A, A), (0, b, 0), (0, 0, c)),
                    ((a, A, A), (0, b, 0), (0, C, c)),
                    ((a, 0, 0), (B, b, B), (0, 0, c)),
                    ((a, 0, 0), (0, b, B), (0, 0, c)),
                    ((a, 0, 0), (B, b, B), (C, 0, c)),
                    ((a, A, A), (0, b, B), (0, 0, c)),
                    ((a, 0, A), (0, b, 0), (0, 0, c)),
                    ((a, 0, A), (B, b, B), (0, 0, c)),
                ])
    return tuple(out)


# Representatives of the equivalence classes (modulo relabeling and the
# color flip phi) of weight-1 operators that are NOT splitting.
NONSPLITTING_REPS = {
    2: (
        ((0, 1), (0, 0)),
    ),
    3: (
        ((0, 1, 1), (0, 0, 1), (0, 0, 0)),
        ((0, 1, 1), (0, 0, 1), (0, 0, -1)),
        ((0, 1, 1), (0, -1, -1), (0, 0, -1)),
        ((0, 1, 1), (0, 0, 0), (0, 0, 0)),
        ((0, 1, 1), (0, -1, 0), (0, 0, 0)),
        ((0, 1, 0), (0, 0, 0), (0, 0, 0)),
        ((0, 1, 0), (0, 0, 0), (0, 0, -1)),
    ),
}

# Representatives of the classes that are splitting but not inner-splitting.
SPLITTING_NOT_INNER_REPS = {
    2: (
        ((-1, 0), (0, 0)),
    ),
    3: (
        ((0, 1, 0), (0, -1, 0), (0, 0, -1)),
        ((-1, 0, 0), (0, 0, 0), (0, 0, 0)),
    ),
}

# A two-component weight-1 fixture on n = 5: a depth-2 tree under vertex 1
# plus the isolated black vertex 5.  Levels are (0, 1, 2, 2, 0) and the
# colors (w, b, b, w, b).
FIXTURE_N5 = (
    (0, 1, 1, 1, 0),
    (0, -1, -1, -1, 0),
    (0, 0, -1, 0, 0),
    (0, 0, 0, 0, 0),
    (0, 0, 0, 0, -1),
)
FIXTURE_N5_LEVELS = {1: 0, 2: 1, 3: 2, 4: 2, 5: 0}
FIXTURE_N5_PARENT = (0, 1, 2, 2, 0)
FIXTURE_N5_COLORS = ("w", "b", "b", "w", "b")
FIXTURE_N5_EDGES = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4))
