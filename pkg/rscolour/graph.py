"""
Undirected simple graphs on dense 0-based vertex ids, and the structural queries the colouring algorithms lean on.

Graphs are immutable values: every operation that "changes" a graph returns a new one and leaves its argument alone.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import networkx as nx

from rscolour.errors import InputError

log = logging.getLogger(__name__)


class Graph:
    """
    An undirected simple graph. Vertex ids are the integers 0..n-1; each adjacency list is sorted ascending.
    """

    __slots__ = ("_n", "_adj", "_adj_sets", "_m")

    def __init__(self, n, adjacency):
        """
        Use from_edge_list() unless you already hold symmetric, sorted, loop-free adjacency lists.
        :param n: Number of vertices
        :param adjacency: Sequence of n sorted neighbour sequences
        """
        self._n = n
        self._adj = tuple(tuple(nbrs) for nbrs in adjacency)
        self._adj_sets = None
        self._m = sum(len(nbrs) for nbrs in self._adj) // 2

    @property
    def n(self):
        return self._n

    @property
    def m(self):
        return self._m

    def neighbours(self, v):
        return self._adj[v]

    def adjacent(self, u, v):
        if self._adj_sets is None:
            self._adj_sets = tuple(frozenset(nbrs) for nbrs in self._adj)
        return v in self._adj_sets[u]

    def vertices(self):
        return range(self._n)

    def edges(self):
        """
        :return: Every edge once as (u, v) with u < v, in lexicographic order.
        """
        return [(u, v) for u in range(self._n) for v in self._adj[u] if u < v]

    def __eq__(self, other):
        return isinstance(other, Graph) and self._n == other._n and self._adj == other._adj

    def __hash__(self):
        return hash((self._n, self._adj))

    def __repr__(self):
        return "Graph(n=%d, m=%d)" % (self._n, self._m)


@dataclass(frozen=True)
class RootedTree:
    """
    A tree with a designated root, parent pointers and children lists consistent with a BFS from the root. `order`
    is that BFS order (root first), which the tree tester walks backwards to get children before parents.
    """
    underlying: Graph
    root: int
    parent: Tuple[Optional[int], ...]
    children: Tuple[Tuple[int, ...], ...]
    order: Tuple[int, ...]


def from_edge_list(n, edges):
    """
    Builds a graph from a vertex count and a list of vertex pairs. Repeated pairs (in either orientation) collapse to
    one edge.

    For example, from_edge_list(5, [(0, 1), (1, 2), (1, 3), (1, 4), (3, 2), (4, 2)]) is the dart graph.

    :param n: Number of vertices
    :param edges: Iterable of (u, v) pairs with 0 <= u, v < n
    :return: The graph
    """
    if n < 0:
        raise InputError("vertex count must be nonnegative, got %r" % (n,))
    nbrs = [set() for _ in range(n)]
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise InputError("edge (%r, %r) has an endpoint outside [0, %d)" % (u, v, n))
        if u == v:
            raise InputError("self-loop at vertex %d" % u)
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, [sorted(s) for s in nbrs])


def degree(g, v):
    return len(g.neighbours(v))


def max_degree(g):
    return max((degree(g, v) for v in g.vertices()), default=0)


def connected_components(g):
    """
    :param g: The graph
    :return: A list of components, each a sorted list of vertex ids; components ordered by their smallest vertex.
    """
    return sorted((sorted(c) for c in nx.connected_components(to_networkx(g))), key=lambda c: c[0])


def is_connected(g):
    return g.n == 0 or nx.is_connected(to_networkx(g))


def is_tree(g):
    return g.n > 0 and nx.is_tree(to_networkx(g))


def induced_subgraph(g, vertices):
    """
    Relabels the chosen vertices densely, keeping their relative order.
    :param g: The graph
    :param vertices: The vertices to keep
    :return: (subgraph, old_ids) where old_ids[new_id] is the vertex id in g
    """
    old_ids = sorted(set(vertices))
    new_id = {old: new for new, old in enumerate(old_ids)}
    edges = [(new_id[u], new_id[w]) for u in old_ids for w in g.neighbours(u) if w in new_id and u < w]
    return from_edge_list(len(old_ids), edges), old_ids


def girth(g):
    """
    :return: Length of a shortest cycle, or math.inf when g is a forest
    """
    return nx.girth(to_networkx(g))


def list_triangles(g):
    """
    Every triangle exactly once, as an ascending triple, in lexicographic order. Runs in O(sum of squared degrees).
    """
    triangles = []
    for v in g.vertices():
        higher = [w for w in g.neighbours(v) if w > v]
        for i, a in enumerate(higher):
            for b in higher[i + 1:]:
                if g.adjacent(a, b):
                    triangles.append((v, a, b))
    return triangles


def bipartition(g):
    """
    :param g: The graph
    :return: (left, right) sorted vertex lists when g is bipartite, None otherwise. The lowest vertex of every
             component is on the left.
    """
    nxg = to_networkx(g)
    if not nx.is_bipartite(nxg):
        return None
    side = nx.bipartite.color(nxg)
    left, right = [], []
    for members in connected_components(g):
        base = side[members[0]]
        for v in members:
            (left if side[v] == base else right).append(v)
    return sorted(left), sorted(right)


def is_bipartite(g):
    return nx.is_bipartite(to_networkx(g))


def is_chordal(g):
    return nx.is_chordal(to_networkx(g))


def root_at_3plus(g, root=None):
    """
    Roots a tree at a 3-plus vertex (degree at least three) by BFS.
    :param g: A tree with at least one 3-plus vertex
    :param root: The root to use; defaults to the lowest-indexed 3-plus vertex
    :return: The RootedTree
    """
    if not is_tree(g):
        raise InputError("graph is not a tree")
    if root is None:
        root = next((v for v in g.vertices() if degree(g, v) >= 3), None)
        if root is None:
            raise InputError("no 3-plus vertex: the tree is a path")
    elif degree(g, root) < 3:
        raise InputError("vertex %d is not a 3-plus vertex" % root)

    parent = [None] * g.n
    children = [[] for _ in range(g.n)]
    order = [root]
    for v, w in nx.bfs_edges(to_networkx(g), root):
        parent[w] = v
        children[v].append(w)
        order.append(w)
    log.debug("rooted tree on %d vertices at %d", g.n, root)
    return RootedTree(g, root, tuple(parent), tuple(tuple(c) for c in children), tuple(order))


def attach_pendants(g, v, count):
    """
    :param g: The graph
    :param v: The vertex receiving pendants
    :param count: How many fresh degree-one vertices to hang off v; they get ids n, n+1, ...
    :return: The new graph
    """
    if not 0 <= v < g.n:
        raise InputError("vertex %r out of range" % (v,))
    new_edges = [(v, g.n + i) for i in range(count)]
    return from_edge_list(g.n + count, g.edges() + new_edges)


def subdivide_all_edges(g):
    """
    Replaces every edge uv by a path u, w, v through a fresh vertex w. Fresh vertices are numbered n, n+1, ... in the
    order of g.edges().
    :param g: The graph
    :return: (subdivided graph, {(u, v): w}) with u < v
    """
    edges = []
    middle = {}
    for i, (u, v) in enumerate(g.edges()):
        w = g.n + i
        middle[(u, v)] = w
        edges.append((u, w))
        edges.append((w, v))
    return from_edge_list(g.n + g.m, edges), middle


def degeneracy(g):
    """
    :return: (d, order): the degeneracy (largest core number) and a smallest-last removal order, in which every
             vertex has at most d neighbours removed after it
    """
    if g.n == 0:
        return 0, []
    nxg = to_networkx(g)
    d = max(nx.core_number(nxg).values())
    order = list(nx.algorithms.coloring.strategy_smallest_last(nxg, {}))
    order.reverse()
    return d, order


def path_graph(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(p):
    """K_{1,p} with centre 0."""
    return from_edge_list(p + 1, [(0, i) for i in range(1, p + 1)])


def hypercube(d):
    """Q_d on 2^d vertices; vertices are adjacent when their ids differ in one bit."""
    n = 1 << d
    return from_edge_list(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])


def disjoint_union(*graphs):
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return from_edge_list(offset, edges)


def to_networkx(g):
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices())
    nxg.add_edges_from(g.edges())
    return nxg


def from_networkx(nxg):
    """
    :param nxg: A networkx graph whose nodes are 0..n-1
    """
    return from_edge_list(nxg.number_of_nodes(), [(int(u), int(v)) for u, v in nxg.edges()])


def write_dot(g):
    """
    :return: DOT text for g, one line per edge and no layout attributes.
    """
    lines = ["graph G {"]
    lines.extend("  %d;" % v for v in g.vertices() if degree(g, v) == 0)
    lines.extend("  %d -- %d;" % (u, v) for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
