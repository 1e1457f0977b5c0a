import random
import unittest

import networkx as nx

import rscolour.generators as generators
from rscolour.errors import InputError
from rscolour.graph import degree, is_chordal, is_connected, is_tree, max_degree, to_networkx


class TestTrees(unittest.TestCase):

    def test_counts(self):
        for n in range(1, 7):
            trees = list(generators.all_labelled_trees(n))
            self.assertEqual(len(trees), max(1, n ** (n - 2)))
            self.assertTrue(all(is_tree(t) for t in trees))

    def test_distinct(self):
        self.assertEqual(len(set(generators.all_labelled_trees(5))), 125)

    def test_unlabelled_counts(self):
        # 1, 1, 1, 2, 3, 6, 11, 23 isomorphism classes
        for n, expected in enumerate((1, 1, 1, 2, 3, 6, 11, 23), 1):
            trees = list(generators.all_unlabelled_trees(n))
            self.assertEqual(len(trees), expected, n)
            self.assertTrue(all(is_tree(t) and t.n == n for t in trees))

    def test_random_tree(self):
        rng = random.Random(91)
        for n in (1, 2, 3, 17):
            self.assertTrue(is_tree(generators.random_tree(n, rng)))
        with self.assertRaises(InputError):
            generators.random_tree(0, rng)

    def test_seeded(self):
        self.assertEqual(generators.random_tree(20, random.Random(5)), generators.random_tree(20, random.Random(5)))

    def test_caterpillar(self):
        g = generators.caterpillar(4, 2)
        self.assertEqual(g.n, 9)
        self.assertTrue(is_tree(g))
        self.assertEqual((degree(g, 0), degree(g, 4)), (3, 3))
        self.assertEqual(degree(g, 2), 2)


class TestGraphFamilies(unittest.TestCase):

    def test_chordal(self):
        rng = random.Random(92)
        for _ in range(30):
            g = generators.random_chordal(rng.randint(1, 12), rng)
            self.assertTrue(is_chordal(g))
            self.assertTrue(nx.is_chordal(to_networkx(g)))
            self.assertTrue(is_connected(g))

    def test_split(self):
        rng = random.Random(93)
        for _ in range(30):
            g, p = generators.random_split(rng.randint(1, 10), rng)
            p.validate(g)

    def test_cobipartite(self):
        rng = random.Random(94)
        for _ in range(30):
            g, p = generators.random_cobipartite(rng.randint(2, 10), rng)
            p.validate(g)

    def test_max_degree(self):
        rng = random.Random(95)
        for k in (2, 3, 4):
            self.assertEqual(max_degree(generators.random_graph_with_max_degree(8, k, rng)), k)
        with self.assertRaises(InputError):
            generators.random_graph_with_max_degree(3, 3, rng)


class TestFormulasAndMatrices(unittest.TestCase):

    def test_planted(self):
        rng = random.Random(96)
        for _ in range(20):
            f, assignment = generators.random_positive_cnf_with_planted(6, 5, rng)
            self.assertEqual(len(f.clauses), 5)
            self.assertTrue(f.exactly_one_true(assignment))

    def test_cubic(self):
        f = generators.random_cubic_cnf(7, random.Random(97))
        self.assertEqual(len(f.clauses), 7)
        self.assertTrue(f.is_cubic())

    def test_symmetric_matrix(self):
        h, p = generators.random_symmetric_matrix(12, 0.3, random.Random(98))
        self.assertEqual(h.shape, (12, 12))
        self.assertTrue(p.conforms(h))
        for i, j in p.offdiag:
            self.assertNotEqual(h[i, j], 0.0)
