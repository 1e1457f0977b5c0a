import itertools
import random
import unittest

import rscolour.generators
import rscolour.solver as solver
from rscolour.colouring import PartialColouring, extends, is_ordered, is_proper, is_rs, is_star
from rscolour.errors import BudgetExceeded, InputError
from rscolour.graph import (complete_graph, cycle_graph, degree, from_edge_list, hypercube, path_graph,
                            star_graph)
from rscolour.solver import Kind, SolveBudget, Status

DART = from_edge_list(5, [(0, 1), (1, 2), (1, 3), (1, 4), (3, 2), (4, 2)])


def _independent(g, vertices):
    return all(not g.adjacent(u, v) for u, v in itertools.combinations(vertices, 2))


def _alpha(g):
    for size in range(g.n, 0, -1):
        if any(_independent(g, s) for s in itertools.combinations(g.vertices(), size)):
            return size
    return 0


class TestDecide(unittest.TestCase):

    def test_dart_three_colours(self):
        result = solver.decide_k_rs(DART, 3)
        self.assertIs(result.status, Status.YES)
        self.assertTrue(is_rs(DART, result.witness))

    def test_p4_two_colours(self):
        self.assertIs(solver.decide_k_rs(path_graph(4), 2).status, Status.NO)

    def test_class_i_representative_has_no_extension(self):
        # K_{1,3} centre coloured 1 with two leaves coloured 0, inside a longer tree
        g = from_edge_list(7, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)])
        pre = PartialColouring.from_dict(7, {0: 1, 1: 0, 2: 0}, 3)
        self.assertIs(solver.decide_k_rs(g, 3, pre).status, Status.NO)

    def test_witness_extends_precolouring(self):
        pre = PartialColouring.from_dict(6, {0: 2, 5: 0}, 3)
        result = solver.decide_k_rs(path_graph(6), 3, pre)
        self.assertTrue(result.yes)
        self.assertTrue(extends(result.witness, pre))
        self.assertTrue(is_rs(path_graph(6), result.witness))

    def test_inconsistent_precolouring(self):
        pre = PartialColouring.from_dict(2, {0: 1, 1: 1}, 3)
        self.assertIs(solver.decide_k_rs(path_graph(2), 3, pre).status, Status.NO)

    def test_precolouring_outside_budget(self):
        with self.assertRaises(InputError):
            solver.decide_k_rs(path_graph(3), 2, PartialColouring.from_dict(3, {0: 2}, 3))

    def test_zero_colours(self):
        self.assertTrue(solver.decide_k_rs(from_edge_list(0, []), 0).yes)
        self.assertIs(solver.decide_k_rs(path_graph(1), 0).status, Status.NO)

    def test_budget_exceeded_is_not_no(self):
        result = solver.decide_k_rs(hypercube(4), 4, budget=SolveBudget(max_nodes=5))
        self.assertIs(result.status, Status.BUDGET_EXCEEDED)
        self.assertIsNone(result.witness)

    def test_budget_must_be_positive(self):
        with self.assertRaises(InputError):
            SolveBudget(max_nodes=0)

    def test_each_kind(self):
        c4 = cycle_graph(4)
        self.assertTrue(solver.decide_k(c4, 2, Kind.PROPER).yes)
        self.assertFalse(solver.decide_k(c4, 2, Kind.STAR).yes)
        witness = solver.decide_k(c4, 3, Kind.STAR).witness
        self.assertTrue(is_star(c4, witness))
        witness = solver.decide_k(c4, 3, Kind.ORDERED).witness
        self.assertTrue(is_ordered(c4, witness))


class TestSolverProperties(unittest.TestCase):

    def test_witnesses_and_top_colour_degree(self):
        rng = random.Random(31)
        for _ in range(60):
            g = rscolour.generators.random_graph(8, 0.3, rng)
            for k in (3, 4):
                result = solver.decide_k_rs(g, k)
                if result.yes:
                    self.assertTrue(is_rs(g, result.witness))
                    for v in g.vertices():
                        if result.witness[v] == k - 1:
                            self.assertLess(degree(g, v), k)

    def test_monotone_in_k(self):
        rng = random.Random(32)
        for _ in range(40):
            g = rscolour.generators.random_graph(7, 0.4, rng)
            answers = [solver.decide_k_rs(g, k).yes for k in range(1, 6)]
            for low, high in zip(answers, answers[1:]):
                self.assertTrue(high or not low)

    def test_symmetry_breaking_is_sound(self):
        rng = random.Random(33)
        for _ in range(40):
            g = rscolour.generators.random_graph(8, 0.35, rng)
            for kind in (Kind.PROPER, Kind.STAR):
                for k in (2, 3):
                    with_symmetry = solver.decide_k(g, k, kind, symmetry=True).status
                    without = solver.decide_k(g, k, kind, symmetry=False).status
                    self.assertIs(with_symmetry, without)

    def test_clique_degree_obstruction(self):
        k4_padded = from_edge_list(8, [(u, v) for u, v in itertools.combinations(range(4), 2)]
                                   + [(v, v + 4) for v in range(4)])
        self.assertEqual(solver.clique_degree_obstruction(k4_padded, 4), (0, 1, 2, 3))
        self.assertIs(solver.decide_k_rs(k4_padded, 4).status, Status.NO)
        self.assertIsNone(solver.clique_degree_obstruction(complete_graph(4), 4))

    def test_obstruction_agrees_with_search(self):
        rng = random.Random(34)
        for _ in range(40):
            g = rscolour.generators.random_graph(7, 0.5, rng)
            for k in (3, 4):
                if solver.clique_degree_obstruction(g, k) is not None:
                    search = solver._decide_one(g, k, Kind.RS, None, SolveBudget(), False)
                    self.assertIs(search.status, Status.NO)

    def test_enumerate(self):
        colourings = list(solver.enumerate_k_rs(path_graph(2), 2))
        self.assertEqual(sorted(c.assignment for c in colourings), [(0, 1), (1, 0)])
        self.assertEqual(len(list(solver.enumerate_k_rs(star_graph(3), 3, limit=2))), 2)

    def test_parallel_matches_serial(self):
        rng = random.Random(35)
        for _ in range(4):
            g = rscolour.generators.random_graph(7, 0.4, rng)
            self.assertIs(solver.decide_k_rs(g, 3, threads=2).status, solver.decide_k_rs(g, 3).status)


class TestChromaticNumbers(unittest.TestCase):

    def test_hypercubes(self):
        self.assertEqual(solver.rs_chromatic_number(hypercube(2)), 3)
        self.assertEqual(solver.rs_chromatic_number(hypercube(3)), 4)

    def test_small_cases(self):
        self.assertEqual(solver.rs_chromatic_number(path_graph(1)), 1)
        self.assertEqual(solver.rs_chromatic_number(from_edge_list(0, [])), 0)
        self.assertEqual(solver.rs_chromatic_number(DART), 3)

    def test_c4(self):
        self.assertEqual(solver.star_chromatic_number(cycle_graph(4)), 3)
        self.assertEqual(solver.ordered_chromatic_number(cycle_graph(4)), 3)
        self.assertEqual(solver.chromatic_number(cycle_graph(4)), 2)

    def test_complete_graphs(self):
        for n in range(1, 6):
            g = complete_graph(n)
            self.assertEqual(solver.star_chromatic_number(g), n)
            self.assertEqual(solver.ordered_chromatic_number(g), n)
            self.assertEqual(solver.rs_chromatic_number(g), n)

    def test_split_graph_with_pendants(self):
        g = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
        self.assertEqual(solver.rs_chromatic_number(g), 4)

    def test_budget_exceeded_raises(self):
        with self.assertRaises(BudgetExceeded):
            solver.rs_chromatic_number(hypercube(3), SolveBudget(max_nodes=3))

    def test_odd_cycle(self):
        c = solver.decide_k(cycle_graph(5), 3, Kind.PROPER).witness
        self.assertTrue(is_proper(cycle_graph(5), c))
        self.assertEqual(solver.chromatic_number(cycle_graph(5)), 3)


class TestIndependentSet(unittest.TestCase):

    def test_known_graphs(self):
        self.assertEqual(len(solver.max_independent_set(cycle_graph(5))), 2)
        self.assertEqual(solver.max_independent_set(star_graph(4)), [1, 2, 3, 4])
        self.assertEqual(len(solver.max_independent_set(DART)), 2)

    def test_against_brute_force(self):
        rng = random.Random(36)
        for _ in range(50):
            g = rscolour.generators.random_graph(9, 0.3, rng)
            chosen = solver.max_independent_set(g)
            self.assertTrue(_independent(g, chosen))
            self.assertEqual(len(chosen), _alpha(g))
