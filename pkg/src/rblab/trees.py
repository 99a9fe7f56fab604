"""2-colored rooted trees on {0, 1, ..., n} with uncolored root 0.

A labeled tree is a parent array p of length n: p[i-1] is the parent of
vertex i, with 0 the root sentinel.  Each non-root vertex carries a
color, "w" or "b".  Labeled trees are enumerated through their Prufer
sequences (length n-1 over the alphabet {0..n}) in lexicographic order,
so the enumeration is deterministic and visits (n+1)^(n-1) trees.

The level of a vertex is its root distance minus one; level-0 vertices
are the children of the root.  A coloring is proper when every tree edge
not touching the root joins different colors, and alternating when the
color depends only on the level parity (so all level-0 vertices agree,
all level-1 vertices take the opposite color, and so on).

Unlabeled counting goes through either canonical codes (AHU strings with
color tags, children sorted) or Euler-transform recurrences on the
number of rooted trees: a forest on n vertices is a multiset of rooted
trees, and attaching colors multiplies the tree kinds per size by two.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import product

WHITE = "w"
BLACK = "b"


class TreeStructureError(ValueError):
    """A parent array that is shaped correctly but is not a rooted tree."""


def validate_parent(parent) -> int:
    """Check a parent array (root sentinel 0, acyclic); returns n."""
    n = len(parent)
    for i, p in enumerate(parent, start=1):
        if not isinstance(p, int) or not 0 <= p <= n:
            raise TreeStructureError(f"parent of vertex {i} out of range: {p!r}")
        if p == i:
            raise TreeStructureError(f"vertex {i} is its own parent")
    for i in range(1, n + 1):
        v, steps = i, 0
        while v != 0:
            v = parent[v - 1]
            steps += 1
            if steps > n:
                raise TreeStructureError(f"parent array has a cycle through vertex {i}")
    return n


@dataclass(frozen=True)
class ColoredRootedTree:
    n: int
    parent: tuple
    color: tuple

    def __post_init__(self):
        if len(self.parent) != self.n or len(self.color) != self.n:
            raise ValueError("parent and color must have length n")
        if any(c not in (WHITE, BLACK) for c in self.color):
            raise ValueError("colors must be 'w' or 'b'")
        validate_parent(self.parent)


def levels(parent) -> tuple:
    """Level (root distance minus one) of each vertex, as a tuple."""
    n = len(parent)
    lv = [None] * (n + 1)
    lv[0] = -1
    for i in range(1, n + 1):
        chain = []
        v = i
        while lv[v] is None:
            if len(chain) > n:
                raise TreeStructureError(f"parent array has a cycle through vertex {i}")
            chain.append(v)
            v = parent[v - 1]
        base = lv[v]
        for off, u in enumerate(reversed(chain), start=1):
            lv[u] = base + off
    return tuple(lv[1:])


def children_lists(parent):
    """children[v] for v in 0..n, each ascending."""
    n = len(parent)
    ch = [[] for _ in range(n + 1)]
    for i in range(1, n + 1):
        ch[parent[i - 1]].append(i)
    return ch


def prufer_to_parent(seq, n):
    """Decode a Prufer sequence over {0..n} into a parent array rooted at 0."""
    m = n + 1
    deg = [1] * m
    for v in seq:
        deg[v] += 1
    leaves = [v for v in range(m) if deg[v] == 1]
    heapq.heapify(leaves)
    adj = [[] for _ in range(m)]
    for v in seq:
        leaf = heapq.heappop(leaves)
        adj[leaf].append(v)
        adj[v].append(leaf)
        deg[v] -= 1
        if deg[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    adj[u].append(w)
    adj[w].append(u)
    parent = [None] * m
    parent[0] = -1
    stack = [0]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if parent[u] is None:
                parent[u] = v
                stack.append(u)
    return tuple(parent[1:])


def enumerate_labeled_rooted_trees(n, first=None):
    """Yield parent arrays of all labeled rooted trees on {0..n}, in the
    lexicographic order of their Prufer sequences.

    With first=s only the slice of sequences starting with symbol s is
    produced (n >= 2); slices in s order concatenate to the full order.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        if first is None or first == 0:
            yield (0,)
        return
    if first is None:
        heads = range(n + 1)
    else:
        if not 0 <= first <= n:
            raise ValueError("slice symbol out of range")
        heads = (first,)
    for head in heads:
        for rest in product(range(n + 1), repeat=n - 2):
            yield prufer_to_parent((head,) + rest, n)


def enumerate_colorings(parent):
    """All 2^n color tuples for a tree, in product order over ('w', 'b')."""
    return product((WHITE, BLACK), repeat=len(parent))


def proper_check(parent, color) -> bool:
    """Every edge between non-root vertices joins different colors."""
    for i in range(len(parent)):
        p = parent[i]
        if p != 0 and color[p - 1] == color[i]:
            return False
    return True


def alternating_check(lv, color) -> bool:
    """Color depends only on level parity (lv as returned by levels)."""
    c0 = None
    for i, l in enumerate(lv):
        if l % 2 == 0:
            if c0 is None:
                c0 = color[i]
            elif color[i] != c0:
                return False
    for i, l in enumerate(lv):
        if l % 2 == 1 and color[i] == c0:
            return False
    return True


def is_properly_colored(tree: ColoredRootedTree) -> bool:
    return proper_check(tree.parent, tree.color)


def is_alternating(tree: ColoredRootedTree) -> bool:
    return alternating_check(levels(tree.parent), tree.color)


def flip_colors(tree: ColoredRootedTree) -> ColoredRootedTree:
    swapped = tuple(WHITE if c == BLACK else BLACK for c in tree.color)
    return ColoredRootedTree(tree.n, tree.parent, swapped)


def canonical_code(tree: ColoredRootedTree) -> str:
    """Isomorphism-invariant string: color tag, then sorted child codes.

    Two colored trees get equal codes exactly when some relabeling of
    {1..n} (fixing the root) maps one to the other preserving colors.
    """
    ch = children_lists(tree.parent)

    def code(v):
        subs = sorted(code(c) for c in ch[v])
        tag = "g" if v == 0 else tree.color[v - 1]
        return tag + "(" + "".join(subs) + ")"

    return code(0)


def enumerate_proper_colorings(parent):
    """Yield exactly the proper colorings: one independent binary choice
    per child of the root (the bipartition classes of its subtree)."""
    n = len(parent)
    lv = levels(parent)
    tops = [i for i in range(1, n + 1) if parent[i - 1] == 0]
    comp = {}
    for v in range(1, n + 1):
        u = v
        while parent[u - 1] != 0:
            u = parent[u - 1]
        comp[v] = tops.index(u)
    for choice in product((WHITE, BLACK), repeat=len(tops)):
        color = []
        for v in range(1, n + 1):
            c = choice[comp[v]]
            if lv[v - 1] % 2 == 1:
                c = WHITE if c == BLACK else BLACK
            color.append(c)
        yield tuple(color)


def _forest_counts(n, kinds_mult):
    """c[j] = number of multisets of unlabeled rooted trees with j vertices
    in total, where trees on m vertices come in kinds_mult * c[m-1] kinds.

    Standard Euler-transform recurrence: with b_m the number of tree
    kinds of size m and d_k = sum_{d | k} d b_d, the counts satisfy
    n c_n = sum_{k=1}^{n} d_k c_{n-k}.
    """
    c = [1] + [0] * n
    d = [0] * (n + 1)
    for m in range(1, n + 1):
        b_m = kinds_mult * c[m - 1]
        for k in range(m, n + 1, m):
            d[k] += m * b_m
        total = sum(d[k] * c[m - k] for k in range(1, m + 1))
        if total % m:
            raise AssertionError("Euler transform produced a non-integer")
        c[m] = total // m
    return c


def count_unlabeled_all(n) -> int:
    """Number of 2-colored rooted trees on {0..n} up to isomorphism,
    i.e. multisets of colored rooted trees with n vertices in total."""
    if not 1 <= n <= 64:
        raise ValueError("supported range is 1 <= n <= 64")
    return _forest_counts(n, 2)[n]


def count_unlabeled_rooted_trees(m) -> int:
    """Number of unlabeled (uncolored) rooted trees on m vertices."""
    if not 1 <= m <= 65:
        raise ValueError("supported range is 1 <= m <= 65")
    return _forest_counts(m - 1, 1)[m - 1]


def count_splitting_labeled_fast(n) -> int:
    """Sum of 2^(number of root children) over all labeled rooted trees.

    Each tree admits exactly 2^(root degree) proper colorings, one
    binary choice per bipartition class, so this counts properly
    2-colored labeled trees without enumerating colorings.
    """
    total = 0
    for parent in enumerate_labeled_rooted_trees(n):
        total += 1 << parent.count(0)
    return total


def colored_tree_to_dict(tree: ColoredRootedTree) -> dict:
    return {"n": tree.n, "parent": list(tree.parent), "color": list(tree.color)}


def colored_tree_from_dict(d) -> ColoredRootedTree:
    if not isinstance(d, dict):
        raise ValueError("tree document must be a JSON object")
    try:
        n = d["n"]
        parent = d["parent"]
        color = d["color"]
    except (KeyError, TypeError):
        raise ValueError("tree document needs keys n, parent, color") from None
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    if not isinstance(parent, list) or len(parent) != n \
            or any(not isinstance(p, int) for p in parent):
        raise ValueError("parent must be a list of n integers")
    if not isinstance(color, list) or len(color) != n \
            or any(c not in (WHITE, BLACK) for c in color):
        raise ValueError("color must be a list of 'w'/'b' of length n")
    return ColoredRootedTree(n, tuple(parent), tuple(color))
