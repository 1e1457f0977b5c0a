"""
Compressed evaluation of sparse symmetric matrices (e.g. Hessians) through an rs colouring of the adjacency graph.

Columns of one colour are summed into a single compressed column. Because every row has at most one off-diagonal
nonzero in each colour class below its own colour, every entry can be read straight back out of the compressed
matrix without solving anything.
"""
import logging
from dataclasses import dataclass
from typing import FrozenSet, Tuple

import numpy as np
from scipy.sparse import coo_matrix

from rscolour.colouring import Colouring, colour_classes, rs_witness
from rscolour.errors import InputError
from rscolour.graph import degree, from_edge_list

log = logging.getLogger(__name__)

NATURAL = "natural"
LARGEST_DEGREE_FIRST = "largest_degree_first"
ORDERS = (NATURAL, LARGEST_DEGREE_FIRST)


@dataclass(frozen=True)
class SparsityPattern:
    """
    Off-diagonal nonzero positions of an n x n symmetric matrix. The diagonal is always taken as present.
    """
    n: int
    offdiag: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "offdiag", frozenset((int(i), int(j)) for i, j in self.offdiag))
        for i, j in self.offdiag:
            if i == j:
                raise InputError("diagonal position (%d, %d) listed as off-diagonal" % (i, j))
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise InputError("position (%d, %d) outside a %d x %d matrix" % (i, j, self.n, self.n))
            if (j, i) not in self.offdiag:
                raise InputError("pattern is not symmetric: (%d, %d) has no mirror" % (i, j))

    @classmethod
    def from_matrix(cls, m, symmetrize=False):
        """
        :param m: Dense array or scipy sparse matrix; its structural nonzeros off the diagonal form the pattern
        :param symmetrize: Mirror every position (for triangular storage such as symmetric Matrix Market files)
        """
        coo = coo_matrix(m)
        if coo.shape[0] != coo.shape[1]:
            raise InputError("matrix is %d x %d, not square" % coo.shape)
        pairs = {(int(i), int(j)) for i, j, value in zip(coo.row, coo.col, coo.data) if i != j and value != 0}
        if symmetrize:
            pairs |= {(j, i) for i, j in pairs}
        return cls(coo.shape[0], frozenset(pairs))

    def conforms(self, h):
        """
        :return: True when h is symmetric and zero off the pattern
        """
        h = np.asarray(h)
        if h.shape != (self.n, self.n) or not np.array_equal(h, h.T):
            return False
        allowed = np.eye(self.n, dtype=bool)
        for i, j in self.offdiag:
            allowed[i, j] = True
        return not np.any(h[~allowed])


@dataclass(frozen=True)
class SeedGrouping:
    """
    Column groups taken from an rs colouring of the pattern's adjacency graph; groups[c] lists the columns of colour c.
    """
    colouring: Colouring
    groups: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_colouring(cls, c, pattern=None):
        """
        :param c: Colouring of the columns
        :param pattern: SparsityPattern; when given, c must be an rs colouring of its adjacency graph
        """
        if pattern is not None:
            _require_rs(pattern, c)
        return cls(c, tuple(tuple(members) for members in colour_classes(c)))

    def seed_matrix(self):
        """
        :return: The n x k indicator matrix S with S[v, colour(v)] = 1
        """
        s = np.zeros((len(self.colouring), self.colouring.k))
        s[np.arange(len(self.colouring)), list(self.colouring.assignment)] = 1.0
        return s


def pattern_to_graph(p):
    return from_edge_list(p.n, [(i, j) for i, j in p.offdiag if i < j])


def _require_rs(p, c):
    g = pattern_to_graph(p)
    witness = rs_witness(g, c)
    if witness is not None:
        raise InputError("grouping is not an rs colouring of the pattern; offending vertices %s" % (witness,))
    return g


def _vertex_order(g, order):
    if order == NATURAL:
        return list(g.vertices())
    if order == LARGEST_DEGREE_FIRST:
        return sorted(g.vertices(), key=lambda v: (-degree(g, v), v))
    raise InputError("unknown vertex order %r, expected one of %s" % (order, ", ".join(ORDERS)))


def greedy_rs_colouring(g, order=NATURAL):
    """
    Gives each vertex, in the chosen order, the smallest colour c such that

    (i) no neighbour has c,
    (ii) the vertex has at most one coloured neighbour of each colour below c, and
    (iii) no neighbour that is still uncoloured or is coloured above c already has another neighbour coloured c.

    Rule (iii) also covering uncoloured neighbours keeps two same-coloured vertices from ever sharing an uncoloured
    neighbour, so a colour is always found and the result is an rs colouring. If the distance-two colouring of the
    same order needs fewer colours, that one is returned instead.
    """
    colour = [None] * g.n
    for v in _vertex_order(g, order):
        below = {}
        for w in g.neighbours(v):
            if colour[w] is not None:
                below[colour[w]] = below.get(colour[w], 0) + 1
        c = 0
        while True:
            if c not in below and all(below[i] <= 1 for i in below if i < c) and not any(
                    (colour[w] is None or colour[w] > c)
                    and any(x != v and colour[x] == c for x in g.neighbours(w))
                    for w in g.neighbours(v)):
                break
            c += 1
        colour[v] = c
    rs = Colouring.of(colour)
    d2 = greedy_distance_two_colouring(g, order)
    if d2.k < rs.k:
        log.debug("distance-two order beats the rs greedy: %d < %d colours", d2.k, rs.k)
        return d2
    return rs


def greedy_distance_two_colouring(g, order=NATURAL):
    """
    Smallest colour not used within distance two, in the chosen order.
    """
    colour = [None] * g.n
    for v in _vertex_order(g, order):
        near = {colour[w] for w in g.neighbours(v)}
        near.update(colour[x] for w in g.neighbours(v) for x in g.neighbours(w))
        colour[v] = next(c for c in range(g.n + 1) if c not in near)
    return Colouring.of(colour)


def compress(h, s, pattern=None):
    """
    :param h: Dense symmetric n x n matrix
    :param s: SeedGrouping
    :param pattern: Optional SparsityPattern that h must conform to
    :return: B = H S, an n x k array with B[v, c] the sum of H[v, u] over columns u of colour c
    """
    h = np.asarray(h, dtype=float)
    if pattern is not None and not pattern.conforms(h):
        raise InputError("matrix has nonzeros outside its sparsity pattern or is not symmetric")
    if h.shape != (len(s.colouring), len(s.colouring)):
        raise InputError("matrix is %s but the grouping covers %d columns" % (h.shape, len(s.colouring)))
    if pattern is not None:
        _require_rs(pattern, s.colouring)
    return h @ s.seed_matrix()


def recover(b, p, s):
    """
    Rebuilds H from B = H S. The diagonal is H[v, v] = B[v, colour(v)]; for an edge uv with colour(u) < colour(v),
    H[u, v] = H[v, u] = B[v, colour(u)], since u is v's only neighbour of that colour.

    :param b: Compressed n x k matrix
    :param p: SparsityPattern of H
    :param s: SeedGrouping; must be an rs colouring of the pattern's graph
    :return: H as a dense array
    """
    c = s.colouring
    g = _require_rs(p, c)
    b = np.asarray(b, dtype=float)
    h = np.zeros((p.n, p.n))
    for v in range(p.n):
        h[v, v] = b[v, c[v]]
    for u, v in g.edges():
        low, high = (u, v) if c[u] < c[v] else (v, u)
        h[low, high] = h[high, low] = b[high, c[low]]
    log.debug("recovered %d x %d matrix from %d compressed columns", p.n, p.n, c.k)
    return h
