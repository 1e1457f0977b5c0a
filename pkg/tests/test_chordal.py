import os
import random
import unittest

import rscolour.chordal as chordal
import rscolour.generators
import rscolour.solver
from rscolour.chordal import TriangleType
from rscolour.errors import InputError, NotChordalError
from rscolour.graph import (complete_graph, cycle_graph, degree, disjoint_union, from_edge_list, is_chordal, is_tree,
                            list_triangles)

SLOW = os.environ.get("RSCOLOUR_SLOW") == "1"

# x=0, y=1, z=2, v=3, w=4
DART = from_edge_list(5, [(0, 1), (1, 2), (1, 3), (1, 4), (3, 2), (4, 2)])


def oracle(g):
    return rscolour.solver.decide_k_rs(g, 3).yes


class TestTriangles(unittest.TestCase):

    def test_dart_triangle_is_type_ii(self):
        kind = chordal.classify_triangle(DART, (1, 2, 3))
        self.assertIs(kind.type, TriangleType.TYPE_II)
        self.assertEqual(kind.low_degree_vertex, 3)

    def test_k4_triangle_is_type_i(self):
        self.assertIs(chordal.classify_triangle(complete_graph(4), (0, 1, 2)).type, TriangleType.TYPE_I)

    def test_not_a_triangle(self):
        with self.assertRaises(InputError):
            chordal.classify_triangle(DART, (0, 2, 3))

    def test_eliminate(self):
        g = chordal.eliminate_type2_triangle(DART, (1, 2, 3), 3)
        # v removed, w becomes 3, pendants 4, 5 on y and 6, 7 on z
        self.assertEqual(g.n, 8)
        self.assertEqual(g.edges(), [(0, 1), (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 6), (2, 7)])
        self.assertEqual(list_triangles(g), [(1, 2, 3)])

    def test_eliminate_needs_degree_two(self):
        with self.assertRaises(InputError):
            chordal.eliminate_type2_triangle(DART, (1, 2, 3), 1)


class TestChordalTester(unittest.TestCase):

    def test_dart(self):
        verdict = chordal.test_3rs_chordal(DART)
        self.assertTrue(verdict.colourable)
        self.assertEqual(verdict.eliminations, 2)
        self.assertEqual(len(verdict.trees), 1)
        self.assertTrue(is_tree(verdict.trees[0]))

    def test_k4(self):
        verdict = chordal.test_3rs_chordal(complete_graph(4))
        self.assertFalse(verdict.colourable)
        self.assertEqual(verdict.reason, "type_i_triangle")
        self.assertEqual(verdict.triangle, (0, 1, 2))
        self.assertFalse(oracle(complete_graph(4)))

    def test_not_chordal(self):
        with self.assertRaises(NotChordalError):
            chordal.test_3rs_chordal(cycle_graph(4))

    def test_tree_input(self):
        verdict = chordal.test_3rs_chordal(from_edge_list(4, [(0, 1), (0, 2), (0, 3)]))
        self.assertTrue(verdict.colourable)
        self.assertEqual(verdict.eliminations, 0)

    def test_components_reported_in_original_ids(self):
        g = disjoint_union(from_edge_list(2, [(0, 1)]), complete_graph(4))
        verdict = chordal.test_3rs_chordal(g)
        self.assertFalse(verdict.colourable)
        self.assertEqual(verdict.triangle, (2, 3, 4))

    def test_reduced_trees_have_low_degree_pendants(self):
        rng = random.Random(51)
        for _ in range(30):
            g = rscolour.generators.random_chordal(10, rng)
            verdict = chordal.test_3rs_chordal(g)
            if verdict.reason != "type_i_triangle":
                for tree in verdict.trees:
                    self.assertTrue(is_tree(tree))
                    self.assertEqual(list_triangles(tree), [])

    def test_random_chordal_graphs(self):
        rng = random.Random(52)
        for _ in range(150):
            g = rscolour.generators.random_chordal(rng.randint(3, 10), rng)
            self.assertEqual(chordal.test_3rs_chordal(g).colourable, oracle(g), g.edges())

    def test_triangle_degree_bound(self):
        rng = random.Random(53)
        for _ in range(50):
            g = rscolour.generators.random_chordal(9, rng)
            if any(all(degree(g, v) >= 3 for v in t) for t in list_triangles(g)):
                self.assertFalse(chordal.test_3rs_chordal(g).colourable)

    @unittest.skipUnless(SLOW, "set RSCOLOUR_SLOW=1 for the long random sweep")
    def test_many_random_chordal_graphs(self):
        rng = random.Random(54)
        for _ in range(1000):
            g = rscolour.generators.random_chordal(rng.randint(3, 10), rng)
            self.assertEqual(chordal.test_3rs_chordal(g).colourable, oracle(g), g.edges())


class TestElimination(unittest.TestCase):

    def test_triangle_with_two_hanging_edges(self):
        # u=0, v=1, w=2 with u-a and v-b hanging off; w goes, u and v get two pendants each
        g = from_edge_list(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])
        reduced = chordal.eliminate_type2_triangle(g, (0, 1, 2), 2)
        self.assertEqual(reduced.n, 8)
        self.assertEqual(reduced.edges(), [(0, 1), (0, 2), (0, 4), (0, 5), (1, 3), (1, 6), (1, 7)])
        self.assertEqual(oracle(g), oracle(reduced))

    def test_eliminate_keeps_the_answer(self):
        rng = random.Random(55)
        checked = 0
        for _ in range(60):
            g = rscolour.generators.random_chordal(rng.randint(4, 8), rng)
            for t in list_triangles(g):
                kind = chordal.classify_triangle(g, t)
                if kind.type is TriangleType.TYPE_II:
                    reduced = chordal.eliminate_type2_triangle(g, t, kind.low_degree_vertex)
                    self.assertEqual(oracle(g), oracle(reduced), (g.edges(), t))
                    checked += 1
                    break
        self.assertGreater(checked, 0)

    def test_reduction_stays_chordal_and_bounded(self):
        rng = random.Random(56)
        reduced = 0
        with self.assertLogs("rscolour.chordal", level="DEBUG"):
            for _ in range(200):
                g = rscolour.generators.random_chordal(rng.randint(3, 10), rng)
                verdict = chordal.test_3rs_chordal(g)
                self.assertLessEqual(verdict.eliminations, len(list_triangles(g)))
                if verdict.reason == "type_i_triangle":
                    continue
                tree, = verdict.trees
                self.assertTrue(is_tree(tree))
                self.assertTrue(is_chordal(tree))
                self.assertEqual(tree.n, g.n + 3 * verdict.eliminations)
                reduced += 1
        self.assertGreater(reduced, 0)
