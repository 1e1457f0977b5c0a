"""
Colouring values and their verifiers: proper, restricted star (rs), star, ordered and distance-two colourings, plus
the structural consequences every 3-rs colouring must satisfy.

Colours are 0-based and their order matters: in an rs colouring a vertex may have at most one neighbour of each
colour lower than its own.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from networkx.utils import UnionFind

from rscolour.errors import InputError
from rscolour.graph import degree

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Colouring:
    """
    A total assignment of colours 0..k-1 to the vertices 0..n-1.
    """
    assignment: Tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(int(colour) for colour in self.assignment))
        for v, colour in enumerate(self.assignment):
            if not 0 <= colour < self.k:
                raise InputError("vertex %d has colour %r outside [0, %d)" % (v, colour, self.k))

    @classmethod
    def of(cls, colours, k=None):
        """
        :param colours: Per-vertex colours
        :param k: Colour budget; defaults to one more than the largest colour used
        """
        colours = tuple(colours)
        return cls(colours, max(colours, default=-1) + 1 if k is None else k)

    def __getitem__(self, v):
        return self.assignment[v]

    def __len__(self):
        return len(self.assignment)


@dataclass(frozen=True)
class PartialColouring:
    """
    Colours for some of the vertices; None marks an uncoloured vertex.
    """
    assignment: Tuple[Optional[int], ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(self.assignment))
        for v, colour in enumerate(self.assignment):
            if colour is not None and not 0 <= colour < self.k:
                raise InputError("vertex %d is precoloured %r outside [0, %d)" % (v, colour, self.k))

    @classmethod
    def from_dict(cls, n, colours, k):
        """
        :param n: Number of vertices
        :param colours: {vertex: colour} for the precoloured vertices
        :param k: Colour budget
        """
        assignment = [None] * n
        for v, colour in colours.items():
            if not 0 <= v < n:
                raise InputError("precoloured vertex %r out of range" % (v,))
            assignment[v] = colour
        return cls(tuple(assignment), k)

    def __getitem__(self, v):
        return self.assignment[v]

    def __len__(self):
        return len(self.assignment)


@dataclass
class PropertyReport:
    """
    Outcome of check_properties_P: a witness per failed property, None for each property that holds.
    """
    witnesses: Dict[str, Optional[tuple]] = field(default_factory=dict)

    @property
    def passed(self):
        return all(w is None for w in self.witnesses.values())

    def failures(self):
        return {name: w for name, w in self.witnesses.items() if w is not None}


def _check_domain(g, c):
    if len(c) != g.n:
        raise InputError("colouring covers %d vertices but the graph has %d" % (len(c), g.n))


def proper_violation(g, c):
    """
    :return: The first monochromatic edge (u, v) in g.edges() order, or None
    """
    _check_domain(g, c)
    for u, v in g.edges():
        if c[u] == c[v]:
            return u, v
    return None


def is_proper(g, c):
    return proper_violation(g, c) is None


def rs_witness(g, c):
    """
    Finds what keeps c from being an rs colouring of g.

    :param g: The graph
    :param c: A total colouring of g
    :return: None when c is an rs colouring; otherwise the first path (x, y, z) with c(y) > c(x) = c(z), scanning y
             ascending, then colours ascending; failing that, the first monochromatic edge (u, v)
    """
    _check_domain(g, c)
    for y in g.vertices():
        lower = {}
        for x in g.neighbours(y):
            if c[x] < c[y]:
                lower.setdefault(c[x], []).append(x)
        for colour in sorted(lower):
            if len(lower[colour]) > 1:
                x, z = lower[colour][:2]
                return x, y, z
    return proper_violation(g, c)


def is_rs(g, c):
    return rs_witness(g, c) is None


def is_rs_by_paths(g, c):
    """
    The rs condition read off directly: a proper colouring with no path x, y, z where c(y) > c(x) = c(z).
    """
    if not is_proper(g, c):
        return False
    for y in g.vertices():
        nbrs = g.neighbours(y)
        for i, x in enumerate(nbrs):
            for z in nbrs[i + 1:]:
                if c[x] == c[z] and c[y] > c[x]:
                    return False
    return True


def _colour_counts(g, c):
    return [Counter(c[w] for w in g.neighbours(v)) for v in g.vertices()]


def star_witness(g, c):
    """
    A proper colouring is a star colouring when every two colour classes induce a star forest, which is the same as
    having no bicoloured path on four vertices. Such a path a, b, c, d exists exactly when some edge bc has b seeing
    another vertex of c's colour and c seeing another vertex of b's colour.

    :return: None when c is a star colouring, a monochromatic edge, or the first bicoloured P4 (a, b, c, d)
    """
    edge = proper_violation(g, c)
    if edge is not None:
        return edge
    counts = _colour_counts(g, c)
    for b, cc in g.edges():
        for u, w in ((b, cc), (cc, b)):
            if counts[u][c[w]] > 1 and counts[w][c[u]] > 1:
                a = next(x for x in g.neighbours(u) if x != w and c[x] == c[w])
                d = next(x for x in g.neighbours(w) if x != u and c[x] == c[u])
                return a, u, w, d
    return None


def is_star(g, c):
    return star_witness(g, c) is None


def is_ordered(g, c):
    """
    Checks the threshold-component form of an ordered colouring (vertex ranking): for every colour i, each component
    of the subgraph induced by the vertices coloured at most i holds at most one vertex of colour i. Equivalently every
    path between two vertices of the same colour passes through a higher colour.
    """
    if not is_proper(g, c):
        return False
    classes = colour_classes(c)
    components = UnionFind()
    added = [False] * g.n
    for colour, members in enumerate(classes):
        for v in members:
            added[v] = True
            components.union(v)
            for w in g.neighbours(v):
                if added[w]:
                    components.union(v, w)
        roots = [components[v] for v in members]
        if len(set(roots)) != len(roots):
            log.debug("colour %d appears twice in one threshold component", colour)
            return False
    return True


def is_distance_two(g, c):
    """
    True when any two vertices at distance one or two get different colours.
    """
    if not is_proper(g, c):
        return False
    for v in g.vertices():
        seen = [c[w] for w in g.neighbours(v)]
        if len(set(seen)) != len(seen):
            return False
    return True


def extends(c, pre):
    """
    :param c: A total colouring
    :param pre: A partial colouring
    :return: True when c has the same length as pre and agrees with every colour pre assigns
    """
    if len(c) != len(pre):
        return False
    return all(p is None or p == colour for colour, p in zip(c.assignment, pre.assignment))


def colour_classes(c):
    """
    :return: A list of k sorted vertex lists; entry i is the class of colour i (empty when colour i is unused).
    """
    classes = [[] for _ in range(c.k)]
    for v, colour in enumerate(c.assignment):
        classes[colour].append(v)
    return classes


def _paths_from(g, start, length):
    # simple paths with `length` vertices beginning at start
    stack = [(start,)]
    while stack:
        path = stack.pop()
        if len(path) == length:
            yield path
            continue
        for w in g.neighbours(path[-1]):
            if w not in path:
                stack.append(path + (w,))


def check_properties_P(g, c):
    """
    Checks the properties every 3-rs colouring has:

    * P1: every 3-plus vertex (degree at least three) is coloured 0 or 1.
    * P2: adjacent 3-plus vertices get different colours from {0, 1}.
    * P3: no path on three vertices has both ends coloured 0.
    * P4: no path on four vertices has one end coloured 0 and the other coloured 1.
    * P6: no path on six vertices has both ends coloured 0.

    :param g: The graph
    :param c: A 3-rs colouring of g
    :return: A PropertyReport keyed "P1", "P2", "P3", "P4", "P6"
    """
    if any(colour > 2 for colour in c.assignment):
        raise InputError("properties P only apply to colourings with three colours")
    if not is_rs(g, c):
        raise InputError("colouring is not an rs colouring of the graph")

    report = PropertyReport()
    three_plus = [v for v in g.vertices() if degree(g, v) >= 3]

    report.witnesses["P1"] = next(((v,) for v in three_plus if c[v] > 1), None)
    report.witnesses["P2"] = next(((u, w) for u in three_plus for w in g.neighbours(u)
                                   if u < w and degree(g, w) >= 3 and {c[u], c[w]} != {0, 1}), None)

    p3 = None
    for y in g.vertices():
        zeros = [x for x in g.neighbours(y) if c[x] == 0]
        if len(zeros) > 1:
            p3 = (zeros[0], y, zeros[1])
            break
    report.witnesses["P3"] = p3

    p4 = None
    for y, z in g.edges():
        for u, w in ((y, z), (z, y)):
            x = next((a for a in g.neighbours(u) if a != w and c[a] == 0), None)
            d = next((a for a in g.neighbours(w) if a != u and c[a] == 1), None)
            if x is not None and d is not None:
                p4 = (x, u, w, d)
                break
        if p4 is not None:
            break
    report.witnesses["P4"] = p4

    p6 = None
    for start in g.vertices():
        if c[start] != 0:
            continue
        p6 = next((p for p in _paths_from(g, start, 6) if c[p[-1]] == 0), None)
        if p6 is not None:
            break
    report.witnesses["P6"] = p6
    return report


def check_colour_propagation(g, c):
    """
    In a 3-rs colouring, a path u, v, w, x with c(u) = 0 and c(v) = 1 forces c(w) = 2 and c(x) = 0.

    :return: Every path (u, v, w, x) breaking that rule; empty for a valid 3-rs colouring
    """
    _check_domain(g, c)
    broken = []
    for u in g.vertices():
        if c[u] != 0:
            continue
        for path in _paths_from(g, u, 4):
            _, v, w, x = path
            if c[v] == 1 and (c[w] != 2 or c[x] != 0):
                broken.append(path)
    return sorted(broken)
