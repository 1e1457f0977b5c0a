"""
3-rs colourability of chordal graphs.

A triangle whose three vertices all have degree at least three rules out a 3-rs colouring. Any other triangle has a
vertex w of degree two, and removing w while hanging two fresh pendants on each of the other two vertices keeps the
answer unchanged. Repeating that until no triangle is left turns a connected chordal graph into a tree, which the tree
tester then decides.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from rscolour.errors import InputError, NotChordalError
from rscolour.graph import Graph, connected_components, degree, from_edge_list, induced_subgraph, is_chordal
from rscolour.tree3rs import TreeVerdict, test_3rs_tree

log = logging.getLogger(__name__)


class TriangleType(Enum):
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"


@dataclass(frozen=True)
class TriangleKind:
    type: TriangleType
    low_degree_vertex: Optional[int] = None


@dataclass(frozen=True)
class ChordalVerdict:
    """
    `reason` is None when colourable, "type_i_triangle" (with `triangle` set), or the reason of the tree verdict for
    the component's final tree (with `tree_verdict` set; its vertex ids refer to that tree). `trees` holds the final
    tree of every component examined.
    """
    colourable: bool
    reason: Optional[str] = None
    eliminations: int = 0
    trees: Tuple[Graph, ...] = ()
    triangle: Optional[Tuple[int, int, int]] = None
    tree_verdict: Optional[TreeVerdict] = None


def _check_triangle(g, t):
    a, b, c = t
    if len({a, b, c}) != 3 or not (g.adjacent(a, b) and g.adjacent(b, c) and g.adjacent(a, c)):
        raise InputError("%r is not a triangle" % (t,))


def classify_triangle(g, t):
    """
    :param g: The graph
    :param t: Three pairwise adjacent vertices
    :return: TYPE_I when all three have degree at least three, else TYPE_II with a vertex of least degree
    """
    _check_triangle(g, t)
    low = min(sorted(t), key=lambda v: degree(g, v))
    if degree(g, low) >= 3:
        return TriangleKind(TriangleType.TYPE_I)
    return TriangleKind(TriangleType.TYPE_II, low)


def eliminate_type2_triangle(g, t, w):
    """
    Deletes the degree-two vertex w of triangle t and attaches two new pendants to each of the other two vertices.
    Vertex ids above w move down by one; the four pendants are appended, two for the lower remaining vertex of t first.

    :return: The new graph
    """
    _check_triangle(g, t)
    if w not in t or degree(g, w) != 2:
        raise InputError("vertex %r is not a degree-two vertex of triangle %r" % (w, t))
    u, v = sorted(x for x in t if x != w)
    rest, old_ids = induced_subgraph(g, [x for x in g.vertices() if x != w])
    new_id = {old: new for new, old in enumerate(old_ids)}
    n = rest.n
    pendants = [(new_id[u], n), (new_id[u], n + 1), (new_id[v], n + 2), (new_id[v], n + 3)]
    return from_edge_list(n + 4, rest.edges() + pendants)


class _Workspace:
    """
    Mutable copy of one component: adjacency sets keyed by vertex id, fresh ids for new pendants.
    """

    def __init__(self, g):
        self.adj = {v: set(g.neighbours(v)) for v in g.vertices()}
        self.next_id = g.n

    def degree(self, v):
        return len(self.adj[v])

    def triangles(self):
        found = []
        for v in sorted(self.adj):
            higher = sorted(w for w in self.adj[v] if w > v)
            for i, a in enumerate(higher):
                for b in higher[i + 1:]:
                    if b in self.adj[a]:
                        found.append((v, a, b))
        return found

    def eliminate(self, t, w):
        others = [x for x in t if x != w]
        for x in others:
            self.adj[x].discard(w)
        del self.adj[w]
        for x in others:
            for _ in range(2):
                self.adj[x].add(self.next_id)
                self.adj[self.next_id] = {x}
                self.next_id += 1

    def to_graph(self):
        ids = {old: new for new, old in enumerate(sorted(self.adj))}
        return from_edge_list(len(ids), [(ids[u], ids[v]) for u in self.adj for v in self.adj[u] if u < v])


def _reduce_component(g):
    """
    :return: (eliminations, final tree or None, TYPE_I triangle or None)
    """
    work = _Workspace(g)
    eliminations = 0
    triangles = work.triangles()
    while triangles:
        low = {}
        for t in triangles:
            w = min(sorted(t), key=work.degree)
            if work.degree(w) >= 3:
                return eliminations, None, t
            low[t] = w
        t = triangles[0]
        work.eliminate(t, low[t])
        eliminations += 1
        remaining = work.triangles()
        if len(remaining) >= len(triangles):
            raise AssertionError("triangle elimination did not shrink the triangle count")
        if log.isEnabledFor(logging.DEBUG) and not is_chordal(work.to_graph()):
            raise AssertionError("graph stopped being chordal after eliminating %s" % (t,))
        triangles = remaining
    return eliminations, work.to_graph(), None


def test_3rs_chordal(g):
    """
    Decides whether a chordal graph has a 3-rs colouring, component by component.

    :param g: A chordal graph
    :return: A ChordalVerdict
    """
    if not is_chordal(g):
        raise NotChordalError("graph is not chordal")
    eliminations = 0
    trees = []
    for members in connected_components(g):
        component, old_ids = induced_subgraph(g, members)
        done, tree, bad = _reduce_component(component)
        eliminations += done
        if bad is not None:
            triangle = tuple(old_ids[v] for v in bad)
            log.info("triangle %s has every degree >= 3", triangle)
            return ChordalVerdict(False, "type_i_triangle", eliminations, tuple(trees), triangle=triangle)
        trees.append(tree)
        log.debug("component of %d vertices reduced to a %d-vertex tree after %d eliminations",
                  component.n, tree.n, done)
        verdict = test_3rs_tree(tree)
        if not verdict.colourable:
            return ChordalVerdict(False, verdict.reason, eliminations, tuple(trees), tree_verdict=verdict)
    return ChordalVerdict(True, None, eliminations, tuple(trees))


test_3rs_chordal.__test__ = False
