"""
Graph operations that move rs colourability around, and the colourings that come with them: pendant padding (G+),
edge blow-ups from proper colouring, the n - alpha + 1 upper bound, the split graph formula, the 2-rs test, and the
star to ordered relabelling on co-bipartite graphs.
"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, NamedTuple, Tuple

from rscolour.colouring import Colouring, colour_classes, is_proper, is_rs, is_star
from rscolour.errors import InputError
from rscolour.graph import Graph, connected_components, degree, from_edge_list, max_degree

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SplitPartition:
    clique: FrozenSet[int]
    independent: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "clique", frozenset(self.clique))
        object.__setattr__(self, "independent", frozenset(self.independent))

    def validate(self, g):
        _check_partition(g, self.clique, self.independent)
        _check_clique(g, self.clique, "clique side")
        for u in self.independent:
            for w in g.neighbours(u):
                if w in self.independent:
                    raise InputError("independent side has the edge (%d, %d)" % (min(u, w), max(u, w)))


@dataclass(frozen=True)
class CoBipartitePartition:
    a: FrozenSet[int]
    b: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "a", frozenset(self.a))
        object.__setattr__(self, "b", frozenset(self.b))

    def validate(self, g):
        _check_partition(g, self.a, self.b)
        _check_clique(g, self.a, "part A")
        _check_clique(g, self.b, "part B")


class Blowup(NamedTuple):
    """
    Output of edge_blowup: the new graph and, per original edge (u, v) with u < v, the ids of its new vertices.
    """
    graph: Graph
    names: Dict[Tuple[int, int], List[int]]


def _check_partition(g, left, right):
    if left & right or (left | right) != set(g.vertices()):
        raise InputError("the two sides do not partition the %d vertices" % g.n)


def _check_clique(g, members, what):
    members = sorted(members)
    for i, u in enumerate(members):
        for w in members[i + 1:]:
            if not g.adjacent(u, w):
                raise InputError("%s is not a clique: %d and %d are not adjacent" % (what, u, w))


def decide_2_rs(g):
    """
    A graph is 2-rs colourable exactly when every component is a star K_{1,p} (p >= 0).
    """
    for members in connected_components(g):
        size = len(members)
        edges = sum(degree(g, v) for v in members) // 2
        if edges != size - 1:
            return False
        if size > 2 and not any(degree(g, v) == size - 1 for v in members):
            return False
    return True


def g_plus(g):
    """
    Pads every vertex with pendants up to degree max_degree(g) + 1. Original ids are kept; pendants follow in vertex
    order. g is k-rs colourable exactly when g_plus(g) is (k+1)-rs colourable, for k = max_degree(g).
    """
    if g.n == 0:
        raise InputError("G+ needs a nonempty graph")
    target = max_degree(g) + 1
    edges = g.edges()
    fresh = g.n
    for v in g.vertices():
        for _ in range(target - degree(g, v)):
            edges.append((v, fresh))
            fresh += 1
    return from_edge_list(fresh, edges)


def upper_bound_colouring(g, independent_set):
    """
    Gives the vertices outside the independent set I their own colours 0..n-|I|-1 in index order and colours all of I
    with n-|I|. This is an rs colouring with n-|I|+1 colours.
    """
    chosen = set(independent_set)
    if not chosen <= set(g.vertices()):
        raise InputError("independent set names vertices outside the graph")
    for u in chosen:
        for w in g.neighbours(u):
            if w in chosen:
                raise InputError("vertices %d and %d are adjacent" % (min(u, w), max(u, w)))
    top = g.n - len(chosen)
    colour = [top] * g.n
    rest = [v for v in g.vertices() if v not in chosen]
    for c, v in enumerate(rest):
        colour[v] = c
    return Colouring(tuple(colour), top + 1)


def split_independence_number(g, p):
    """
    alpha of a split graph from its partition: I itself, or one clique vertex with its non-neighbours in I.
    """
    p.validate(g)
    best = len(p.independent)
    for v in p.clique:
        best = max(best, 1 + sum(1 for u in p.independent if not g.adjacent(u, v)))
    return best


def split_rs_chromatic(g, p):
    """
    :param g: A split graph
    :param p: Its SplitPartition
    :return: The rs chromatic number, n - alpha + 1
    """
    return g.n - split_independence_number(g, p) + 1


def edge_blowup(g):
    """
    Replaces every edge uv by K_{2,D+1} with D = max_degree(g): u and v stay, lose their edge, and gain D+1 common new
    neighbours. New vertices are numbered from n in edge order. The result is bipartite on n + (D+1)m vertices.
    """
    if g.m == 0:
        raise InputError("edge blow-up needs at least one edge")
    width = max_degree(g) + 1
    edges = []
    names = {}
    fresh = g.n
    for u, v in g.edges():
        names[(u, v)] = list(range(fresh, fresh + width))
        for e in names[(u, v)]:
            edges.append((u, e))
            edges.append((v, e))
        fresh += width
    log.debug("blow-up of %r has %d vertices", g, fresh)
    return Blowup(from_edge_list(fresh, edges), names)


def colouring_lift(g, blowup, pc):
    """
    Turns a proper k-colouring of g into a (k+1)-rs colouring of its blow-up: originals keep their colours and every
    new vertex gets colour k.
    """
    if not is_proper(g, pc):
        raise InputError("colouring to lift is not proper")
    colour = list(pc.assignment) + [pc.k] * (blowup.graph.n - g.n)
    return Colouring(tuple(colour), pc.k + 1)


def greedy_proper_colouring(g, k=None):
    """
    First-fit in vertex order; uses at most max_degree(g) + 1 colours.
    """
    colour = [0] * g.n
    for v in g.vertices():
        taken = {colour[w] for w in g.neighbours(v) if w < v}
        colour[v] = next(c for c in range(g.n + 1) if c not in taken)
    return Colouring.of(colour, k)


def rs_to_proper_extraction(g, blowup, c):
    """
    Recovers a proper k-colouring of g from a (k+1)-rs colouring of its blow-up. With k > max_degree(g) first-fit
    does it outright. Otherwise the restriction to the original vertices is proper: equal colours on an edge would
    need D+1 distinct colours below them. Only isolated vertices can hold colour k, and they are moved to 0.
    """
    if not is_rs(blowup.graph, c):
        raise InputError("colouring is not an rs colouring of the blow-up")
    k = c.k - 1
    if k >= max_degree(g) + 1:
        return greedy_proper_colouring(g, k)
    colour = [c[v] if degree(g, v) else 0 for v in g.vertices()]
    restricted = Colouring(tuple(colour), k)
    if not is_proper(g, restricted):
        raise AssertionError("restriction of an rs colouring of the blow-up is not proper")
    return restricted


def star_to_ordered_cobipartite(g, p, sc):
    """
    Relabels a star colouring of a co-bipartite graph into an ordered colouring with the same k: colour classes of size
    two (one vertex from each clique) take colours 0..t-1, singletons take t and up. Classes are ranked by smallest
    vertex.
    """
    p.validate(g)
    if not is_star(g, sc):
        raise InputError("colouring is not a star colouring")
    classes = [members for members in colour_classes(sc) if members]
    if any(len(members) > 2 for members in classes):
        raise InputError("a colour class has three or more vertices, so the partition cannot be into two cliques")
    pairs = sorted((m for m in classes if len(m) == 2), key=lambda m: m[0])
    singles = sorted((m for m in classes if len(m) == 1), key=lambda m: m[0])
    colour = [0] * g.n
    for new, members in enumerate(pairs + singles):
        for v in members:
            colour[v] = new
    return Colouring(tuple(colour), sc.k)
