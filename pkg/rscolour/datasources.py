"""
Readers and writers for the plain-text files the command line works with.

Graph files::

    c optional comment lines
    p edge <n> <m>
    e <u> <v>          (m lines, 1-based endpoints)

Colouring files hold one "<vertex> <colour>" line per vertex (1-based vertex, 0-based colour). CNF files are DIMACS
"p cnf" files restricted to positive literals, three per clause. Matrices come in as Matrix Market and go out as dense
CSV.
"""
import logging

import numpy as np
from scipy.io import mmread

from rscolour.colouring import Colouring, PartialColouring
from rscolour.errors import FormatError, InputError
from rscolour.gadgets import PositiveCnf
from rscolour.graph import from_edge_list, write_dot as dot_text
from rscolour.hessian import SparsityPattern

log = logging.getLogger(__name__)


class DataFile:
    """
    Line-oriented input file. read() opens the file and feeds it to parse(), which numbers the lines, skips blanks and
    comments, hands each remaining line to parse_line(), then asks validate() for the finished value.
    """

    def __init__(self, path):
        self.path = path

    def read(self):
        try:
            with open(self.path) as f:
                return self.parse(f)
        except OSError as e:
            raise FormatError(self.path, None, "cannot read file: %s" % e.strerror)

    def parse(self, lines):
        """
        :param lines: Iterable of text lines
        :return: Whatever validate() builds
        """
        for number, line in enumerate(lines, 1):
            tokens = line.split()
            if not tokens or self.is_comment(tokens):
                continue
            self.parse_line(number, tokens)
        return self.validate()

    def is_comment(self, tokens):
        return tokens[0] == "c"

    def parse_line(self, number, tokens):
        raise NotImplementedError("Bug! Not implemented in subclass.")

    def validate(self):
        raise NotImplementedError("Bug! Not implemented in subclass.")

    def error(self, number, message):
        return FormatError(self.path, number, message)

    def ints(self, number, tokens):
        try:
            return [int(token) for token in tokens]
        except ValueError:
            raise self.error(number, "expected integers, got %r" % " ".join(tokens))


class GraphFile(DataFile):

    def __init__(self, path):
        DataFile.__init__(self, path)
        self.n = None
        self.m = None
        self.edges = []

    def parse_line(self, number, tokens):
        if tokens[0] == "p":
            if self.n is not None:
                raise self.error(number, "second problem line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise self.error(number, "problem line must read 'p edge <n> <m>'")
            self.n, self.m = self.ints(number, tokens[2:])
            if self.n < 0 or self.m < 0:
                raise self.error(number, "vertex and edge counts must be nonnegative")
        elif tokens[0] == "e":
            if self.n is None:
                raise self.error(number, "edge before the problem line")
            if len(tokens) != 3:
                raise self.error(number, "edge line must read 'e <u> <v>'")
            u, v = self.ints(number, tokens[1:])
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise self.error(number, "endpoint outside 1..%d" % self.n)
            if u == v:
                raise self.error(number, "self-loop at vertex %d" % u)
            self.edges.append((u - 1, v - 1))
        else:
            raise self.error(number, "unknown line type %r" % tokens[0])

    def validate(self):
        if self.n is None:
            raise self.error(None, "missing 'p edge' problem line")
        if len(self.edges) != self.m:
            raise self.error(None, "problem line promises %d edges, found %d" % (self.m, len(self.edges)))
        return from_edge_list(self.n, self.edges)


class ColouringFile(DataFile):

    def __init__(self, path, n=None, k=None, partial=False):
        """
        :param n: Expected number of vertices (usually the graph's); every vertex 1..n must appear exactly once
        :param k: Colour budget; defaults to one more than the largest colour
        :param partial: Read a precolouring: vertices may be left out and a PartialColouring on n vertices comes back
        """
        DataFile.__init__(self, path)
        if partial and n is None:
            raise InputError("a partial colouring needs the vertex count")
        self.n = n
        self.k = k
        self.partial = partial
        self.colours = {}

    def parse_line(self, number, tokens):
        if len(tokens) != 2:
            raise self.error(number, "colouring line must read '<vertex> <colour>'")
        v, colour = self.ints(number, tokens)
        if v < 1 or (self.n is not None and v > self.n):
            raise self.error(number, "vertex %d out of range" % v)
        if colour < 0:
            raise self.error(number, "negative colour %d" % colour)
        if v in self.colours:
            raise self.error(number, "vertex %d coloured twice" % v)
        self.colours[v] = colour

    def validate(self):
        if self.partial:
            k = self.k if self.k is not None else max(self.colours.values(), default=-1) + 1
            try:
                return PartialColouring.from_dict(self.n, {v - 1: colour for v, colour in self.colours.items()}, k)
            except InputError as e:
                raise self.error(None, str(e))
        n = self.n if self.n is not None else max(self.colours, default=0)
        missing = [v for v in range(1, n + 1) if v not in self.colours]
        if missing:
            raise self.error(None, "no colour for vertex %d" % missing[0])
        try:
            return Colouring.of([self.colours[v] for v in range(1, n + 1)], self.k)
        except InputError as e:
            raise self.error(None, str(e))


class CnfFile(DataFile):

    def __init__(self, path):
        DataFile.__init__(self, path)
        self.num_vars = None
        self.num_clauses = None
        self.clauses = []

    def parse_line(self, number, tokens):
        if tokens[0] == "p":
            if len(tokens) != 4 or tokens[1] != "cnf":
                raise self.error(number, "problem line must read 'p cnf <variables> <clauses>'")
            self.num_vars, self.num_clauses = self.ints(number, tokens[2:])
            return
        if self.num_vars is None:
            raise self.error(number, "clause before the problem line")
        literals = self.ints(number, tokens)
        if literals[-1] != 0:
            raise self.error(number, "clause must end with 0")
        literals = literals[:-1]
        if any(lit < 0 for lit in literals):
            raise self.error(number, "negated literal in a positive formula")
        if len(literals) != 3 or len(set(literals)) != 3:
            raise self.error(number, "clause must have exactly three distinct variables")
        if any(lit > self.num_vars for lit in literals):
            raise self.error(number, "variable outside 1..%d" % self.num_vars)
        self.clauses.append(tuple(literals))

    def validate(self):
        if self.num_vars is None:
            raise self.error(None, "missing 'p cnf' problem line")
        if len(self.clauses) != self.num_clauses:
            raise self.error(None, "problem line promises %d clauses, found %d" % (self.num_clauses, len(self.clauses)))
        return PositiveCnf(self.num_vars, tuple(self.clauses))


class MatrixMarketFile(DataFile):
    """
    A square Matrix Market file (coordinate or array; real, integer or pattern). read() returns (dense matrix,
    SparsityPattern).
    """

    def read(self):
        try:
            m = mmread(self.path)
        except (OSError, ValueError) as e:
            raise FormatError(self.path, None, "not a readable Matrix Market file: %s" % e)
        dense = m.toarray() if hasattr(m, "toarray") else np.asarray(m)
        dense = np.asarray(dense, dtype=float)
        return dense, SparsityPattern.from_matrix(dense)


def _write_text(path, text):
    try:
        with open(path, "w") as f:
            f.write(text)
    except OSError as e:
        raise FormatError(path, None, "cannot write file: %s" % e.strerror)


def write_graph(path, g):
    lines = ["p edge %d %d" % (g.n, g.m)]
    lines.extend("e %d %d" % (u + 1, v + 1) for u, v in g.edges())
    _write_text(path, "\n".join(lines) + "\n")


def write_colouring(path, c):
    _write_text(path, "".join("%d %d\n" % (v, colour) for v, colour in enumerate(c.assignment, 1)))


def write_names(path, names):
    """
    :param names: [(name, vertex)] pairs, written as "name vertex_1based"
    """
    _write_text(path, "".join("%s %d\n" % (name, v + 1) for name, v in names))


def write_dot(path, g):
    _write_text(path, dot_text(g))


def write_dense_csv(path, m):
    try:
        np.savetxt(path, np.atleast_2d(m), delimiter=",", fmt="%.17g")
    except OSError as e:
        raise FormatError(path, None, "cannot write file: %s" % e.strerror)


def read_dense_csv(path):
    try:
        return np.loadtxt(path, delimiter=",", ndmin=2)
    except (OSError, ValueError) as e:
        raise FormatError(path, None, "not a dense CSV matrix: %s" % e)
