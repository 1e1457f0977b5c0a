"""
Graphs built from positive 3-CNF formulas whose 3-rs colourings correspond to exactly-one-true ("1-in-3")
assignments.

Each variable x_i is a vertex. Clause j is a cycle through c_j1, c_j2, c_j3 and each c_jk is joined to the k-th variable
of the clause through a middle vertex y_ij. In the basic variant the cycle sides are single middle vertices b_jk, so
the graph is the clause triangles plus variable edges with every edge subdivided once. The girth variant stretches
every side into a longer path with pendants, which keeps the graph bipartite and subcubic but raises its girth.
"""
import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from rscolour.colouring import Colouring
from rscolour.errors import InputError
from rscolour.graph import Graph, from_edge_list, subdivide_all_edges

log = logging.getLogger(__name__)

BASIC = "basic"
GIRTH = "girth"

# Colours of one side path after its c vertex, when c_j1 is the 0-coloured c vertex: the repeated (p, q, a) block,
# then b. Pendants on a vertices always take colour 2.
_SIDE_BLOCKS = {
    1: ((2, 1, 0), 2),
    2: ((0, 2, 1), 0),
    3: ((2, 0, 1), 2),
}


@dataclass(frozen=True)
class PositiveCnf:
    """
    A 3-CNF formula without negations. Variables are 1..num_vars; each clause is a tuple of three distinct variables.
    """
    num_vars: int
    clauses: Tuple[Tuple[int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(clause) for clause in self.clauses))
        if self.num_vars < 1:
            raise InputError("a formula needs at least one variable")
        for j, clause in enumerate(self.clauses, 1):
            if len(clause) != 3 or len(set(clause)) != 3:
                raise InputError("clause %d must have three distinct variables, got %r" % (j, clause))
            for var in clause:
                if not 1 <= var <= self.num_vars:
                    raise InputError("clause %d uses variable %r outside 1..%d" % (j, var, self.num_vars))

    def occurrences(self):
        counts = Counter(var for clause in self.clauses for var in clause)
        return {var: counts[var] for var in range(1, self.num_vars + 1)}

    def is_cubic(self):
        return all(count == 3 for count in self.occurrences().values())

    def exactly_one_true(self, assignment):
        """
        :param assignment: {variable: bool}
        """
        return all(sum(1 for var in clause if assignment[var]) == 1 for clause in self.clauses)


@dataclass
class GadgetGraph:
    """
    The graph plus the vertex behind every named gadget position. Keys are 1-based like the formula: x[i], y[(i, j)],
    c[(j, k)], b[(j, k)]; the girth variant also fills p, q, a and pendant keyed (j, k, t) with t in 1..s.
    """
    graph: Graph
    variant: str
    s: int = 0
    x: Dict[int, int] = field(default_factory=dict)
    y: Dict[Tuple[int, int], int] = field(default_factory=dict)
    c: Dict[Tuple[int, int], int] = field(default_factory=dict)
    b: Dict[Tuple[int, int], int] = field(default_factory=dict)
    p: Dict[Tuple[int, int, int], int] = field(default_factory=dict)
    q: Dict[Tuple[int, int, int], int] = field(default_factory=dict)
    a: Dict[Tuple[int, int, int], int] = field(default_factory=dict)
    pendant: Dict[Tuple[int, int, int], int] = field(default_factory=dict)

    def names(self):
        """
        :return: [(name, vertex)] sorted by vertex, e.g. ("y_2_5", 17)
        """
        named = []
        for prefix in ("x", "y", "c", "b", "p", "q", "a", "pendant"):
            for key, v in getattr(self, prefix).items():
                parts = key if isinstance(key, tuple) else (key,)
                named.append(("_".join([prefix] + [str(part) for part in parts]), v))
        return sorted(named, key=lambda item: item[1])


def _basic(f):
    nv = f.num_vars
    x = {i: i - 1 for i in range(1, nv + 1)}
    c = {(j, k): nv + 3 * (j - 1) + (k - 1) for j in range(1, len(f.clauses) + 1) for k in (1, 2, 3)}
    edges = []
    for j, clause in enumerate(f.clauses, 1):
        for k, var in enumerate(clause, 1):
            edges.append((x[var], c[(j, k)]))
            edges.append((c[(j, k)], c[(j, k % 3 + 1)]))
    intermediate = from_edge_list(nv + 3 * len(f.clauses), edges)
    g, middle = subdivide_all_edges(intermediate)

    def mid(u, v):
        return middle[(min(u, v), max(u, v))]

    gg = GadgetGraph(g, BASIC, 0, x=x, c=c)
    for j, clause in enumerate(f.clauses, 1):
        for k, var in enumerate(clause, 1):
            gg.y[(var, j)] = mid(x[var], c[(j, k)])
            gg.b[(j, k)] = mid(c[(j, k)], c[(j, k % 3 + 1)])
    return gg


def _girth(f, s):
    gg = GadgetGraph(None, GIRTH, s)
    edges = []
    counter = itertools.count()
    for i in range(1, f.num_vars + 1):
        gg.x[i] = next(counter)
    for j in range(1, len(f.clauses) + 1):
        for k in (1, 2, 3):
            gg.c[(j, k)] = next(counter)
    for j, clause in enumerate(f.clauses, 1):
        for k, var in enumerate(clause, 1):
            y = gg.y[(var, j)] = next(counter)
            edges.append((gg.x[var], y))
            edges.append((y, gg.c[(j, k)]))
        for k in (1, 2, 3):
            prev = gg.c[(j, k)]
            for t in range(1, s + 1):
                p = gg.p[(j, k, t)] = next(counter)
                q = gg.q[(j, k, t)] = next(counter)
                a = gg.a[(j, k, t)] = next(counter)
                leaf = gg.pendant[(j, k, t)] = next(counter)
                edges.extend([(prev, p), (p, q), (q, a), (a, leaf)])
                prev = a
            b = gg.b[(j, k)] = next(counter)
            edges.extend([(prev, b), (b, gg.c[(j, k % 3 + 1)])])
    gg.graph = from_edge_list(next(counter), edges)
    return gg


def sat_to_graph(f, variant=BASIC, s=0):
    """
    :param f: A PositiveCnf
    :param variant: BASIC, or GIRTH for side paths of length 3s+2 with a pendant at each a vertex
    :param s: Number of (p, q, a) blocks per side in the GIRTH variant; even and at least 2
    :return: A GadgetGraph
    """
    if variant == BASIC:
        gg = _basic(f)
    elif variant == GIRTH:
        if s < 2 or s % 2:
            raise InputError("the girth variant needs an even s >= 2, got %r" % (s,))
        gg = _girth(f, s)
    else:
        raise InputError("unknown gadget variant %r" % (variant,))
    log.debug("%s gadget graph: %d vertices, %d edges", variant, gg.graph.n, gg.graph.m)
    return gg


def assignment_to_3rs_colouring(f, gg, assignment):
    """
    Colours x_i with 1 when true and 0 when false, every y with 2, and c_jk with the opposite binary colour of its
    variable. The clause cycle follows a fixed scheme, rotated to start at the 0-coloured c vertex.

    :param f: The formula gg was built from
    :param gg: The GadgetGraph
    :param assignment: {variable: bool} with exactly one true variable per clause
    :return: A Colouring with k = 3
    """
    if not f.exactly_one_true(assignment):
        raise InputError("assignment does not make exactly one variable true in every clause")
    colour = [None] * gg.graph.n
    for i, v in gg.x.items():
        colour[v] = 1 if assignment[i] else 0
    for v in gg.y.values():
        colour[v] = 2
    for v in gg.pendant.values():
        colour[v] = 2
    for j, clause in enumerate(f.clauses, 1):
        zero = next(k for k, var in enumerate(clause, 1) if assignment[var])
        for k, var in enumerate(clause, 1):
            colour[gg.c[(j, k)]] = 0 if assignment[var] else 1
            block, b_colour = _SIDE_BLOCKS[(k - zero) % 3 + 1]
            for t in range(1, gg.s + 1):
                for position, v in enumerate((gg.p[(j, k, t)], gg.q[(j, k, t)], gg.a[(j, k, t)])):
                    colour[v] = block[position]
            colour[gg.b[(j, k)]] = b_colour
    return Colouring(tuple(colour), 3)


def colouring_to_assignment(f, gg, c):
    """
    Reads the assignment off a 3-rs colouring: x_i is true when coloured 1. Exactly one true variable per clause is
    guaranteed only for cubic formulas (every variable in three clauses).

    :return: {variable: bool}
    """
    if not f.is_cubic():
        log.warning("formula is not cubic: the assignment may not be exactly-one-true")
    return {i: c[v] == 1 for i, v in gg.x.items()}


def clause_vertex_count(f, variant=BASIC, s=0):
    """
    Expected vertex count of sat_to_graph(f, variant, s): n variables plus, per clause, three y, three c and three b
    vertices, and four more per (p, q, a, pendant) block.
    """
    per_clause = 9 + (12 * s if variant == GIRTH else 0)
    return f.num_vars + per_clause * len(f.clauses)


def four_clause_formula():
    """
    The four-variable cubic formula {1,2,3}, {1,2,4}, {1,3,4}, {2,3,4}; it has no exactly-one-true assignment.
    """
    return PositiveCnf(4, ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)))


def single_clause():
    return PositiveCnf(3, ((1, 2, 3),))


def find_exactly_one_true(f) -> Optional[Dict[int, bool]]:
    """
    Exhaustive search for an exactly-one-true assignment; only for small formulas.
    """
    for mask in range(1 << f.num_vars):
        assignment = {i: bool(mask >> (i - 1) & 1) for i in range(1, f.num_vars + 1)}
        if f.exactly_one_true(assignment):
            return assignment
    return None
