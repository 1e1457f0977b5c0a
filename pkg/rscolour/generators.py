"""
Seeded instance families: labelled trees, caterpillars, chordal, split and co-bipartite graphs, degree-capped random
graphs, positive 3-CNF formulas with planted exactly-one-true assignments, and random sparse symmetric matrices.

Every random generator takes a `random.Random` so that runs are reproducible from a seed.
"""
import itertools
import logging

import networkx as nx
import numpy as np

from rscolour.constructions import CoBipartitePartition, SplitPartition
from rscolour.errors import InputError
from rscolour.gadgets import PositiveCnf
from rscolour.graph import from_edge_list, from_networkx
from rscolour.hessian import SparsityPattern

log = logging.getLogger(__name__)

DEFAULT_SEED = 0


def _from_prufer(sequence, n):
    if n == 1:
        return from_edge_list(1, [])
    if n == 2:
        return from_edge_list(2, [(0, 1)])
    return from_networkx(nx.from_prufer_sequence(list(sequence)))


def all_labelled_trees(n):
    """
    Yields each of the n^(n-2) labelled trees on vertices 0..n-1 once, decoding every Prüfer sequence.
    """
    if n < 1:
        raise InputError("trees need at least one vertex")
    if n <= 2:
        yield _from_prufer((), n)
        return
    for sequence in itertools.product(range(n), repeat=n - 2):
        yield _from_prufer(sequence, n)


def all_unlabelled_trees(n):
    """
    Yields one tree per isomorphism class on n vertices.
    """
    if n < 1:
        raise InputError("trees need at least one vertex")
    if n <= 2:
        yield _from_prufer((), n)
        return
    for t in nx.nonisomorphic_trees(n):
        yield from_networkx(t)


def random_tree(n, rng):
    """
    Uniformly random labelled tree on n vertices.
    """
    if n < 1:
        raise InputError("trees need at least one vertex")
    return _from_prufer([rng.randrange(n) for _ in range(n - 2)], n)


def caterpillar(d, legs):
    """
    A path v_0..v_d of d edges whose two ends each carry `legs` pendants (legs >= 2 makes both ends 3-plus vertices).
    Path vertices are 0..d; pendants follow.
    """
    if d < 1 or legs < 0:
        raise InputError("caterpillar needs d >= 1 and legs >= 0")
    edges = [(i, i + 1) for i in range(d)]
    fresh = d + 1
    for end in (0, d):
        for _ in range(legs):
            edges.append((end, fresh))
            fresh += 1
    return from_edge_list(fresh, edges)


def random_chordal(n, rng, max_clique=4):
    """
    Connected chordal graph grown one simplicial vertex at a time: each new vertex joins a random clique (of at most
    max_clique - 1 vertices) of the graph built so far.
    """
    if n < 1:
        raise InputError("chordal graphs need at least one vertex")
    adj = [set()]
    for v in range(1, n):
        u = rng.randrange(v)
        clique = [u]
        candidates = sorted(adj[u])
        rng.shuffle(candidates)
        for w in candidates:
            if all(w in adj[x] for x in clique):
                clique.append(w)
        size = rng.randint(1, min(len(clique), max_clique - 1))
        chosen = [u] + rng.sample(clique[1:], size - 1)
        adj.append(set(chosen))
        for w in chosen:
            adj[w].add(v)
    return from_edge_list(n, [(u, w) for u in range(n) for w in adj[u] if u < w])


def random_split(n, rng):
    """
    :return: (graph, SplitPartition) with a nonempty clique and each independent vertex joined to a random subset of it
    """
    if n < 1:
        raise InputError("split graphs need at least one vertex")
    order = list(range(n))
    rng.shuffle(order)
    size = rng.randint(1, n)
    clique, independent = order[:size], order[size:]
    edges = list(itertools.combinations(clique, 2))
    for v in independent:
        edges.extend((v, u) for u in clique if rng.random() < 0.5)
    return from_edge_list(n, edges), SplitPartition(frozenset(clique), frozenset(independent))


def random_cobipartite(n, rng, p=0.5):
    """
    :return: (graph, CoBipartitePartition): two cliques with random edges between them
    """
    if n < 2:
        raise InputError("co-bipartite graphs here need at least two vertices")
    order = list(range(n))
    rng.shuffle(order)
    size = rng.randint(1, n - 1)
    a, b = order[:size], order[size:]
    edges = list(itertools.combinations(a, 2)) + list(itertools.combinations(b, 2))
    edges.extend((u, v) for u in a for v in b if rng.random() < p)
    return from_edge_list(n, edges), CoBipartitePartition(frozenset(a), frozenset(b))


def random_graph(n, p, rng):
    return from_networkx(nx.gnp_random_graph(n, p, seed=rng))


def random_graph_with_max_degree(n, k, rng, p=0.5):
    """
    Random graph whose maximum degree is exactly k: pairs are tried in random order and kept with probability p while
    both degrees stay at most k; drawn again until some vertex reaches k.
    """
    if n < k + 1:
        raise InputError("need at least k + 1 = %d vertices for maximum degree %d" % (k + 1, k))
    pairs = list(itertools.combinations(range(n), 2))
    while True:
        rng.shuffle(pairs)
        degree = [0] * n
        edges = []
        for u, v in pairs:
            if degree[u] < k and degree[v] < k and rng.random() < p:
                edges.append((u, v))
                degree[u] += 1
                degree[v] += 1
        if max(degree, default=0) == k:
            return from_edge_list(n, edges)


def random_positive_cnf_with_planted(num_vars, num_clauses, rng):
    """
    Positive 3-CNF with a planted exactly-one-true assignment: every clause takes one true and two false variables.

    :return: (PositiveCnf, {variable: bool})
    """
    if num_vars < 3:
        raise InputError("need at least three variables")
    variables = list(range(1, num_vars + 1))
    rng.shuffle(variables)
    cut = rng.randint(1, num_vars - 2)
    true, false = variables[:cut], variables[cut:]
    clauses = []
    for _ in range(num_clauses):
        clause = [rng.choice(true)] + rng.sample(false, 2)
        rng.shuffle(clause)
        clauses.append(tuple(clause))
    assignment = {var: var in true for var in range(1, num_vars + 1)}
    return PositiveCnf(num_vars, tuple(clauses)), assignment


def random_cubic_cnf(num_vars, rng):
    """
    Positive 3-CNF with num_vars clauses in which every variable occurs exactly three times.
    """
    if num_vars < 3:
        raise InputError("need at least three variables")
    slots = [var for var in range(1, num_vars + 1) for _ in range(3)]
    while True:
        rng.shuffle(slots)
        clauses = [tuple(slots[i:i + 3]) for i in range(0, len(slots), 3)]
        if all(len(set(clause)) == 3 for clause in clauses):
            return PositiveCnf(num_vars, tuple(clauses))


def random_symmetric_matrix(n, density, rng):
    """
    :return: (dense symmetric matrix, SparsityPattern); every pattern position and diagonal entry holds a nonzero
    """
    gen = np.random.default_rng(rng.randrange(2 ** 32))
    pairs = set()
    for i, j in itertools.combinations(range(n), 2):
        if rng.random() < density:
            pairs.update([(i, j), (j, i)])
    h = np.zeros((n, n))
    for i, j in pairs:
        if i < j:
            h[i, j] = h[j, i] = gen.uniform(0.5, 2.0) * gen.choice([-1.0, 1.0])
    h[np.diag_indices(n)] = gen.uniform(1.0, 3.0, size=n)
    return h, SparsityPattern(n, frozenset(pairs))
