import os
import random
import unittest

import rscolour.gadgets as gadgets
import rscolour.generators
import rscolour.solver
from rscolour.colouring import is_rs
from rscolour.errors import InputError
from rscolour.gadgets import BASIC, GIRTH, PositiveCnf
from rscolour.graph import degeneracy, girth, is_bipartite, max_degree
from rscolour.solver import SolveBudget, Status

SLOW = os.environ.get("RSCOLOUR_SLOW") == "1"


class TestFormulas(unittest.TestCase):

    def test_validation(self):
        with self.assertRaises(InputError):
            PositiveCnf(3, ((1, 1, 2),))
        with self.assertRaises(InputError):
            PositiveCnf(3, ((1, 2, 4),))

    def test_four_clause_formula(self):
        f = gadgets.four_clause_formula()
        self.assertTrue(f.is_cubic())
        self.assertIsNone(gadgets.find_exactly_one_true(f))

    def test_single_clause(self):
        f = gadgets.single_clause()
        self.assertFalse(f.is_cubic())
        self.assertEqual(f.occurrences(), {1: 1, 2: 1, 3: 1})
        self.assertIsNotNone(gadgets.find_exactly_one_true(f))


class TestGadgetShape(unittest.TestCase):

    def test_single_clause_basic(self):
        gg = gadgets.sat_to_graph(gadgets.single_clause())
        self.assertEqual((gg.graph.n, gg.graph.m), (12, 12))
        self.assertEqual(gadgets.clause_vertex_count(gadgets.single_clause()), 12)
        self.assertEqual(girth(gg.graph), 6)

    def test_four_clause_basic(self):
        gg = gadgets.sat_to_graph(gadgets.four_clause_formula())
        self.assertEqual((gg.graph.n, gg.graph.m), (40, 48))

    def test_names(self):
        gg = gadgets.sat_to_graph(gadgets.single_clause())
        names = dict(gg.names())
        self.assertEqual(names["x_1"], 0)
        self.assertEqual(names["c_1_1"], 3)
        self.assertEqual(len(names), 12)
        self.assertEqual(sorted(names.values()), list(range(12)))

    def test_girth_variant_counts(self):
        f = gadgets.four_clause_formula()
        gg = gadgets.sat_to_graph(f, GIRTH, 2)
        self.assertEqual(gg.graph.n, gadgets.clause_vertex_count(f, GIRTH, 2))
        self.assertEqual(len(gg.pendant), 4 * 3 * 2)

    def test_girth_variant_needs_even_s(self):
        with self.assertRaises(InputError):
            gadgets.sat_to_graph(gadgets.single_clause(), GIRTH, 3)
        with self.assertRaises(InputError):
            gadgets.sat_to_graph(gadgets.single_clause(), "other")

    def test_structure_of_cubic_formulas(self):
        rng = random.Random(71)
        for _ in range(5):
            f = rscolour.generators.random_cubic_cnf(rng.randint(4, 9), rng)
            for variant, s, min_girth in ((BASIC, 0, 6), (GIRTH, 2, 16)):
                g = gadgets.sat_to_graph(f, variant, s).graph
                self.assertTrue(is_bipartite(g))
                self.assertEqual(max_degree(g), 3)
                self.assertGreaterEqual(girth(g), min_girth)
                self.assertEqual(degeneracy(g)[0], 2)


class TestColourings(unittest.TestCase):

    def test_planted_assignments_colour_both_variants(self):
        rng = random.Random(72)
        for _ in range(50):
            f, assignment = rscolour.generators.random_positive_cnf_with_planted(rng.randint(3, 8),
                                                                                rng.randint(1, 6), rng)
            for variant, s in ((BASIC, 0), (GIRTH, 2)):
                gg = gadgets.sat_to_graph(f, variant, s)
                c = gadgets.assignment_to_3rs_colouring(f, gg, assignment)
                self.assertTrue(is_rs(gg.graph, c), (f, variant))
                self.assertEqual(gadgets.colouring_to_assignment(f, gg, c), assignment)

    def test_rejects_unsatisfying_assignment(self):
        f = gadgets.single_clause()
        gg = gadgets.sat_to_graph(f)
        with self.assertRaises(InputError):
            gadgets.assignment_to_3rs_colouring(f, gg, {1: True, 2: True, 3: False})

    def test_single_clause_is_3rs_colourable(self):
        gg = gadgets.sat_to_graph(gadgets.single_clause())
        self.assertTrue(rscolour.solver.decide_k_rs(gg.graph, 3).yes)

    @unittest.skipUnless(SLOW, "set RSCOLOUR_SLOW=1 for the 40-vertex refutation")
    def test_four_clause_gadget_has_no_3rs_colouring(self):
        gg = gadgets.sat_to_graph(gadgets.four_clause_formula())
        result = rscolour.solver.decide_k_rs(gg.graph, 3, budget=SolveBudget(10 ** 7, 3600.0))
        self.assertIs(result.status, Status.NO)


class TestReadingAssignmentsBack(unittest.TestCase):

    def check_every_colouring(self, f, limit):
        gg = gadgets.sat_to_graph(f)
        seen = 0
        for c in rscolour.solver.enumerate_k_rs(gg.graph, 3, limit=limit):
            self.assertTrue(f.exactly_one_true(gadgets.colouring_to_assignment(f, gg, c)), c)
            seen += 1
        self.assertGreater(seen, 0)

    def test_repeated_clause(self):
        # each variable sits in all three copies, so the formula is cubic
        f = PositiveCnf(3, ((1, 2, 3),) * 3)
        self.assertTrue(f.is_cubic())
        self.check_every_colouring(f, 50)

    @unittest.skipUnless(SLOW, "set RSCOLOUR_SLOW=1 for colourings of larger cubic gadgets")
    def test_random_cubic_formulas(self):
        rng = random.Random(74)
        checked = 0
        while checked < 3:
            f = rscolour.generators.random_cubic_cnf(6, rng)
            if gadgets.find_exactly_one_true(f) is None:
                continue
            self.check_every_colouring(f, 200)
            checked += 1

    def test_non_cubic_formula_warns(self):
        f = gadgets.single_clause()
        gg = gadgets.sat_to_graph(f)
        c = gadgets.assignment_to_3rs_colouring(f, gg, {1: False, 2: True, 3: False})
        with self.assertLogs("rscolour.gadgets", level="WARNING") as logs:
            assignment = gadgets.colouring_to_assignment(f, gg, c)
        self.assertIn("not cubic", logs.output[0])
        self.assertEqual(assignment, {1: False, 2: True, 3: False})
