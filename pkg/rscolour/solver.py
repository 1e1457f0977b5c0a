"""
Exact backtracking oracles for desk-sized graphs: k-colourability under the proper, rs, star and ordered rules, the
matching chromatic numbers, and maximum independent sets.

Every fast algorithm elsewhere in the package is tested against these.
"""
import concurrent.futures
import itertools
import logging
import time
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from rscolour.colouring import Colouring, PartialColouring
from rscolour.errors import BudgetExceeded, InputError
from rscolour.graph import degree

log = logging.getLogger(__name__)

DEFAULT_MAX_NODES = 10 ** 7
DEFAULT_TIME_LIMIT = 120.0
DEFAULT_THREADS = 1

# wall clock is consulted once per this many search nodes
_CLOCK_EVERY = 1024


class Status(Enum):
    YES = "yes"
    NO = "no"
    BUDGET_EXCEEDED = "budget_exceeded"


class Kind(Enum):
    PROPER = "proper"
    RS = "rs"
    STAR = "star"
    ORDERED = "ordered"


@dataclass(frozen=True)
class SolveBudget:
    max_nodes: int = DEFAULT_MAX_NODES
    time_limit: float = DEFAULT_TIME_LIMIT

    def __post_init__(self):
        if self.max_nodes <= 0 or self.time_limit <= 0:
            raise InputError("search budget must be positive")


@dataclass(frozen=True)
class SolveResult:
    """
    Outcome of one decision. `witness` is set only for YES; `nodes` counts search nodes expanded.
    """
    status: Status
    witness: Optional[Colouring] = None
    nodes: int = 0

    @property
    def yes(self):
        return self.status is Status.YES


class _Checker:
    """
    Incremental feasibility of a partial colouring. Subclasses decide whether a vertex may take a colour given what is
    already coloured; `counts[v][c]` is the number of coloured neighbours of v that have colour c.
    """

    def __init__(self, g, k):
        self.g = g
        self.k = k
        self.colour = [-1] * g.n
        self.counts = [[0] * k for _ in range(g.n)]

    def _set(self, v, c):
        self.colour[v] = c
        for w in self.g.neighbours(v):
            self.counts[w][c] += 1

    def unassign(self, v, c):
        self.colour[v] = -1
        for w in self.g.neighbours(v):
            self.counts[w][c] -= 1

    def try_assign(self, v, c):
        """
        :return: True, with v coloured c, when the partial colouring stays feasible; False and no change otherwise.
        """
        raise NotImplementedError("Bug! Not implemented in subclass.")


class _ProperChecker(_Checker):

    def try_assign(self, v, c):
        if self.counts[v][c]:
            return False
        self._set(v, c)
        return True


class _RsChecker(_Checker):

    def try_assign(self, v, c):
        counts = self.counts[v]
        if counts[c]:
            return False
        for lower in range(c):
            if counts[lower] > 1:
                return False
        for w in self.g.neighbours(v):
            # w would see two neighbours of colour c below its own
            if self.colour[w] > c and self.counts[w][c]:
                return False
        self._set(v, c)
        return True


class _StarChecker(_Checker):
    """
    A bicoloured P4 exists exactly when some edge xy has x seeing two vertices of y's colour and y seeing two of x's.
    Colouring v only changes counts around v, so only edges at v and at its neighbours need a look.
    """

    def _bad_edge(self, x, y):
        return self.counts[x][self.colour[y]] > 1 and self.counts[y][self.colour[x]] > 1

    def try_assign(self, v, c):
        if self.counts[v][c]:
            return False
        self._set(v, c)
        for w in self.g.neighbours(v):
            if self.colour[w] < 0 or self.counts[w][c] < 2:
                continue
            for x in self.g.neighbours(w):
                if self.colour[x] == c and self._bad_edge(w, x):
                    self.unassign(v, c)
                    return False
        return True


class _OrderedChecker(_Checker):
    """
    After colouring v with c, only the threshold components containing v can break: for each t >= c, the component of
    v among coloured vertices of colour at most t must hold at most one vertex of colour t.
    """

    def _threshold_clash(self, v, t):
        seen = {v}
        queue = deque([v])
        hits = 0
        while queue:
            u = queue.popleft()
            if self.colour[u] == t:
                hits += 1
                if hits > 1:
                    return True
            for w in self.g.neighbours(u):
                if w not in seen and 0 <= self.colour[w] <= t:
                    seen.add(w)
                    queue.append(w)
        return False

    def try_assign(self, v, c):
        if self.counts[v][c]:
            return False
        self._set(v, c)
        for t in range(c, self.k):
            if self._threshold_clash(v, t):
                self.unassign(v, c)
                return False
        return True


_CHECKERS = {
    Kind.PROPER: _ProperChecker,
    Kind.RS: _RsChecker,
    Kind.STAR: _StarChecker,
    Kind.ORDERED: _OrderedChecker,
}


def search_order(g, first=()):
    """
    Connectivity-first vertex order: `first` as given, then repeatedly the vertex with the most already ordered
    neighbours, ties broken by higher degree, then lower id.
    """
    order = list(first)
    placed = [False] * g.n
    ordered_nbrs = [0] * g.n
    for v in order:
        placed[v] = True
        for w in g.neighbours(v):
            ordered_nbrs[w] += 1
    for _ in range(g.n - len(order)):
        best = max((v for v in g.vertices() if not placed[v]),
                   key=lambda v: (ordered_nbrs[v], degree(g, v), -v))
        placed[best] = True
        order.append(best)
        for w in g.neighbours(best):
            ordered_nbrs[w] += 1
    return order


class _Search:

    def __init__(self, g, k, kind, pre, budget, symmetry):
        self.g = g
        self.k = k
        self.kind = kind
        self.budget = budget
        self.checker = _CHECKERS[kind](g, k)
        self.nodes = 0
        self.deadline = time.monotonic() + budget.time_limit
        self.consistent = True

        precoloured = [v for v in g.vertices() if pre is not None and pre[v] is not None]
        for v in precoloured:
            if not self.checker.try_assign(v, pre[v]):
                log.debug("precolouring is infeasible at vertex %d", v)
                self.consistent = False
                break
        self.order = [v for v in search_order(g, precoloured) if pre is None or pre[v] is None]
        self.symmetry = symmetry and not precoloured

        self.domains = []
        for v in g.vertices():
            colours = list(range(k))
            if kind is Kind.RS and degree(g, v) >= k:
                # a vertex of the top colour has at most one neighbour in each lower class
                colours = colours[:-1]
            self.domains.append(colours)

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise BudgetExceeded("search exceeded %d nodes" % self.budget.max_nodes, self.nodes)
        if self.nodes % _CLOCK_EVERY == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("search exceeded %.1f seconds" % self.budget.time_limit, self.nodes)

    def _extend(self, index, used):
        if index == len(self.order):
            yield Colouring(tuple(self.checker.colour), self.k)
            return
        self._tick()
        v = self.order[index]
        for c in self.domains[v]:
            if self.symmetry and c > used + 1:
                break
            if self.checker.try_assign(v, c):
                yield from self._extend(index + 1, max(used, c))
                self.checker.unassign(v, c)

    def solutions(self):
        if not self.consistent:
            return iter(())
        return self._extend(0, -1)


def _validate(g, k, pre):
    if k < 0:
        raise InputError("colour count must be nonnegative, got %r" % (k,))
    if pre is not None:
        if len(pre) != g.n:
            raise InputError("precolouring covers %d vertices but the graph has %d" % (len(pre), g.n))
        if any(c is not None and c >= k for c in pre.assignment):
            raise InputError("precolouring uses a colour outside [0, %d)" % k)


def clique_degree_obstruction(g, k):
    """
    A k-clique whose members all have degree at least k rules out any k-rs colouring. Only searched for k <= 4.

    :return: The clique as a sorted tuple, or None
    """
    if k < 1 or k > 4:
        return None
    heavy = [v for v in g.vertices() if degree(g, v) >= k]
    for v in heavy:
        higher = [w for w in g.neighbours(v) if w > v and degree(g, w) >= k]
        for rest in itertools.combinations(higher, k - 1):
            if all(g.adjacent(a, b) for a, b in itertools.combinations(rest, 2)):
                return (v,) + rest
    return None


def _decide_one(g, k, kind, pre, budget, symmetry):
    search = _Search(g, k, kind, pre, budget, symmetry)
    try:
        witness = next(search.solutions(), None)
    except BudgetExceeded as e:
        log.info("%s %d-colouring search gave up after %d nodes", kind.value, k, e.nodes)
        return SolveResult(Status.BUDGET_EXCEEDED, None, e.nodes)
    status = Status.YES if witness is not None else Status.NO
    log.debug("%s %d-colouring: %s after %d nodes", kind.value, k, status.value, search.nodes)
    return SolveResult(status, witness, search.nodes)


def _decide_split(g, k, kind, pre, budget, threads):
    first = search_order(g)[0] if pre is None else next(
        (v for v in search_order(g) if pre[v] is None), None)
    if first is None:
        return _decide_one(g, k, kind, pre, budget, False)
    base = list(pre.assignment) if pre is not None else [None] * g.n
    branches = []
    for c in range(k):
        fixed = list(base)
        fixed[first] = c
        branches.append(PartialColouring(tuple(fixed), k))

    results = []
    with concurrent.futures.ProcessPoolExecutor(max_workers=threads) as executor:
        futures = [executor.submit(_decide_one, g, k, kind, branch, budget, False) for branch in branches]
        for future in concurrent.futures.as_completed(futures):
            results.append(future.result())
    nodes = sum(r.nodes for r in results)
    found = [r for r in results if r.yes]
    if found:
        return SolveResult(Status.YES, found[0].witness, nodes)
    if any(r.status is Status.BUDGET_EXCEEDED for r in results):
        return SolveResult(Status.BUDGET_EXCEEDED, None, nodes)
    return SolveResult(Status.NO, None, nodes)


def decide_k(g, k, kind=Kind.RS, pre=None, budget=None, threads=DEFAULT_THREADS, symmetry=True):
    """
    Decides whether g has a colouring of the given kind with colours 0..k-1 that extends `pre`.

    :param g: The graph
    :param k: Number of colours
    :param kind: Which rule the colouring must satisfy
    :param pre: Optional PartialColouring to extend
    :param budget: SolveBudget; defaults to DEFAULT_MAX_NODES nodes and DEFAULT_TIME_LIMIT seconds per worker
    :param threads: Worker processes; above one the choices for the first vertex are searched in parallel
    :param symmetry: Restrict each vertex to at most one colour above those used so far. Only sound for the proper
                     and star kinds (colour values carry meaning for rs and ordered), and ignored for the others.
    :return: A SolveResult; BUDGET_EXCEEDED is never reported as NO
    """
    _validate(g, k, pre)
    budget = budget or SolveBudget()
    symmetry = symmetry and kind in (Kind.PROPER, Kind.STAR)

    if k == 0:
        status = Status.YES if g.n == 0 else Status.NO
        return SolveResult(status, Colouring((), 0) if g.n == 0 else None, 0)
    if kind is Kind.RS:
        clique = clique_degree_obstruction(g, k)
        if clique is not None:
            log.info("no %d-rs colouring: clique %s has every degree >= %d", k, clique, k)
            return SolveResult(Status.NO, None, 0)
    if threads > 1 and g.n > 0:
        return _decide_split(g, k, kind, pre, budget, threads)
    return _decide_one(g, k, kind, pre, budget, symmetry)


def decide_k_rs(g, k, pre=None, budget=None, threads=DEFAULT_THREADS):
    """
    Is g k-rs colourable (optionally extending a precolouring)? A YES witness always passes is_rs and extends `pre`.
    """
    return decide_k(g, k, Kind.RS, pre, budget, threads)


def enumerate_k_rs(g, k, pre=None, limit=None, budget=None):
    """
    Yields every k-rs colouring of g that extends `pre`, at most `limit` of them.
    """
    _validate(g, k, pre)
    search = _Search(g, k, Kind.RS, pre, budget or SolveBudget(), symmetry=False)
    return itertools.islice(search.solutions(), limit)


def _chromatic(g, kind, budget, threads):
    if g.n == 0:
        return 0
    lower = 1 if g.m == 0 else 2
    for k in range(lower, g.n + 1):
        result = decide_k(g, k, kind, budget=budget, threads=threads)
        if result.status is Status.BUDGET_EXCEEDED:
            raise BudgetExceeded("%s chromatic number search ran out of budget at k=%d" % (kind.value, k),
                                 result.nodes)
        if result.yes:
            return k
    raise AssertionError("n colours always suffice")


def rs_chromatic_number(g, budget=None, threads=DEFAULT_THREADS):
    return _chromatic(g, Kind.RS, budget, threads)


def star_chromatic_number(g, budget=None, threads=DEFAULT_THREADS):
    return _chromatic(g, Kind.STAR, budget, threads)


def ordered_chromatic_number(g, budget=None, threads=DEFAULT_THREADS):
    return _chromatic(g, Kind.ORDERED, budget, threads)


def chromatic_number(g, budget=None, threads=DEFAULT_THREADS):
    return _chromatic(g, Kind.PROPER, budget, threads)


def max_independent_set(g, budget=None):
    """
    Branch and bound: vertices of degree at most one in what remains are taken outright, otherwise branch on a
    vertex of largest remaining degree (exclude it, or take it and drop its neighbours).

    :return: A maximum independent set as a sorted list
    """
    budget = budget or SolveBudget()
    deadline = time.monotonic() + budget.time_limit
    nodes = 0
    best = []

    def expand(remaining, chosen):
        nonlocal nodes, best
        nodes += 1
        if nodes > budget.max_nodes or (nodes % _CLOCK_EVERY == 0 and time.monotonic() > deadline):
            raise BudgetExceeded("independent set search ran out of budget", nodes)
        remaining = set(remaining)
        chosen = list(chosen)
        while True:
            low = next((v for v in sorted(remaining)
                        if sum(1 for w in g.neighbours(v) if w in remaining) <= 1), None)
            if low is None:
                break
            chosen.append(low)
            remaining.discard(low)
            remaining.difference_update(g.neighbours(low))
        if len(chosen) + len(remaining) <= len(best):
            return
        if not remaining:
            best = sorted(chosen)
            return
        v = max(sorted(remaining), key=lambda u: sum(1 for w in g.neighbours(u) if w in remaining))
        expand(remaining - {v} - set(g.neighbours(v)), chosen + [v])
        expand(remaining - {v}, chosen)

    expand(set(g.vertices()), [])
    log.debug("independent set of size %d after %d nodes", len(best), nodes)
    return best
