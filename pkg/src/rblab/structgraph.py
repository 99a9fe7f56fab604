"""Structure digraphs of weight-1 operators and their rooted-tree encoding.

The digraph of a matrix has an edge (i, k) whenever i != k and
r_ik != 0.  For matrices satisfying the weight-1 identity the digraph is
antisymmetric, transitive and moral (no two nonadjacent vertices point
at a common vertex), hence acyclic, and every weakly connected component
has a unique source.  Such digraphs correspond to rooted trees on the
vertex set extended by a root sentinel 0: sources hang under 0, and a
vertex at level f sits under its unique in-neighbour at level f - 1,
where f(v) is the length of the longest directed path from the
component's source to v.  Conversely the digraph is recovered by joining
every vertex to all of its proper non-root tree ancestors.

Vertices are 1-based throughout; a tree is a parent array p with p[i-1]
being the parent of vertex i (0 for children of the root).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING

from .trees import validate_parent

if TYPE_CHECKING:
    from .rbcore import RBOperator


@dataclass(frozen=True)
class StructureDigraph:
    n: int
    edges: frozenset

    def __post_init__(self):
        for e in self.edges:
            if (not isinstance(e, tuple) or len(e) != 2
                    or not all(isinstance(v, int) for v in e)):
                raise ValueError(f"bad edge {e!r}")
            i, k = e
            if not (1 <= i <= self.n and 1 <= k <= self.n) or i == k:
                raise ValueError(f"edge {e!r} out of range or a loop")

    def sorted_edges(self):
        return sorted(self.edges)


def make_digraph(n, edges) -> StructureDigraph:
    return StructureDigraph(n, frozenset((int(i), int(k)) for i, k in edges))


def digraph_from_matrix(op: "RBOperator") -> StructureDigraph:
    """Edges (i, k) for the nonzero off-diagonal entries; weight must be 1."""
    if op.weight != 1:
        raise ValueError("structure digraph is defined for weight 1; normalize first")
    m, n = op.matrix, op.n
    edges = {(i + 1, k + 1)
             for i in range(n) for k in range(n)
             if i != k and m.at(i, k) != 0}
    return StructureDigraph(n, frozenset(edges))


def is_antisymmetric(g: StructureDigraph) -> bool:
    return not any((k, i) in g.edges for (i, k) in g.edges)


def is_transitive(g: StructureDigraph) -> bool:
    for (i, j) in g.edges:
        for (j2, k) in g.edges:
            if j2 == j and k != i and (i, k) not in g.edges:
                return False
    return True


def is_moral(g: StructureDigraph) -> bool:
    """False iff some 3-vertex induced subgraph is exactly two edges
    into a common head (two nonadjacent parents of one vertex)."""
    for tri in combinations(range(1, g.n + 1), 3):
        induced = [(a, b) for a in tri for b in tri
                   if a != b and (a, b) in g.edges]
        if len(induced) == 2:
            (a1, b1), (a2, b2) = induced
            if b1 == b2 and a1 != a2:
                return False
    return True


def is_valid(g: StructureDigraph) -> bool:
    return is_antisymmetric(g) and is_transitive(g) and is_moral(g)


def _adjacency(g):
    ins = {v: [] for v in range(1, g.n + 1)}
    outs = {v: [] for v in range(1, g.n + 1)}
    for (i, k) in sorted(g.edges):
        outs[i].append(k)
        ins[k].append(i)
    return ins, outs


def level_function(g: StructureDigraph) -> dict:
    """Level of each vertex: length of the longest directed path from the
    unique source of its component.  Returned as {vertex: level}.

    Raises ValueError on a cycle or when two sources reach the same
    vertex (with a witness); both mean g is not a valid structure
    digraph.
    """
    ins, outs = _adjacency(g)
    indeg = {v: len(ins[v]) for v in ins}
    order = []
    queue = sorted(v for v in indeg if indeg[v] == 0)
    pending = dict(indeg)
    while queue:
        v = queue.pop(0)
        order.append(v)
        for k in outs[v]:
            pending[k] -= 1
            if pending[k] == 0:
                queue.append(k)
        queue.sort()
    if len(order) < g.n:
        rest = sorted(v for v in indeg if v not in set(order))
        raise ValueError(f"digraph has a directed cycle through {rest}")
    sources = {v for v in indeg if indeg[v] == 0}
    reach = {}  # vertex -> set of sources with a directed path to it
    f = {}
    for v in order:
        if v in sources:
            reach[v] = {v}
            f[v] = 0
        else:
            reach[v] = set().union(*(reach[i] for i in ins[v]))
            if len(reach[v]) > 1:
                a, b = sorted(reach[v])[:2]
                raise ValueError(
                    f"sources {a} and {b} both reach vertex {v}; "
                    "no level function exists")
            f[v] = max(f[i] for i in ins[v]) + 1
    return f


def to_rooted_tree(g: StructureDigraph) -> tuple:
    """Parent array of the rooted tree encoding a valid structure digraph."""
    if not is_valid(g):
        raise ValueError("digraph is not antisymmetric+transitive+moral")
    f = level_function(g)
    ins, _ = _adjacency(g)
    parent = [None] * g.n
    for v in range(1, g.n + 1):
        if f[v] == 0:
            parent[v - 1] = 0
        else:
            cands = [i for i in ins[v] if f[i] == f[v] - 1]
            if len(cands) != 1:
                raise ValueError(
                    f"vertex {v} has {len(cands)} candidate parents; "
                    "digraph does not encode a tree")
            parent[v - 1] = cands[0]
    return tuple(parent)


def from_rooted_tree(parent) -> StructureDigraph:
    """Digraph whose edges join every vertex to each proper non-root ancestor."""
    n = validate_parent(parent)
    edges = set()
    for j in range(1, n + 1):
        i = parent[j - 1]
        while i != 0:
            edges.add((i, j))
            i = parent[i - 1]
    return StructureDigraph(n, frozenset(edges))


def digraph_to_dict(g: StructureDigraph) -> dict:
    return {"n": g.n, "edges": [[i, k] for (i, k) in g.sorted_edges()]}


def digraph_from_dict(d) -> StructureDigraph:
    if not isinstance(d, dict):
        raise ValueError("digraph document must be a JSON object")
    try:
        n = d["n"]
        edges = d["edges"]
    except (KeyError, TypeError):
        raise ValueError("digraph document needs keys n, edges") from None
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    if not isinstance(edges, list) or any(
            not isinstance(e, list) or len(e) != 2
            or not all(isinstance(v, int) for v in e) for e in edges):
        raise ValueError("edges must be a list of [i, k] integer pairs")
    return make_digraph(n, edges)


def tree_to_dict(parent) -> dict:
    n = validate_parent(parent)
    return {"n": n, "parent": list(parent)}


def tree_from_dict(d) -> tuple:
    if not isinstance(d, dict):
        raise ValueError("tree document must be a JSON object")
    try:
        n = d["n"]
        parent = d["parent"]
    except (KeyError, TypeError):
        raise ValueError("tree document needs keys n, parent") from None
    if not isinstance(n, int) or not isinstance(parent, list) or len(parent) != n:
        raise ValueError("parent must be a list of length n")
    parent = tuple(parent)
    validate_parent(parent)
    return parent
