import os
import tempfile
import unittest

import numpy as np
from scipy.io import mmwrite
from scipy.sparse import coo_matrix

import rscolour.datasources as datasources
from rscolour.colouring import Colouring
from rscolour.errors import FormatError
from rscolour.graph import cycle_graph, from_edge_list


class FileTestCase(unittest.TestCase):

    def setUp(self):
        self._dir = tempfile.TemporaryDirectory()
        self.addCleanup(self._dir.cleanup)

    def path(self, name):
        return os.path.join(self._dir.name, name)

    def write(self, name, text):
        with open(self.path(name), "w") as f:
            f.write(text)
        return self.path(name)


class TestGraphFile(FileTestCase):

    def test_read(self):
        path = self.write("dart.gr", "c dart\np edge 5 6\ne 1 2\ne 2 3\ne 2 4\ne 2 5\ne 4 3\n\ne 5 3\n")
        g = datasources.GraphFile(path).read()
        self.assertEqual(g, from_edge_list(5, [(0, 1), (1, 2), (1, 3), (1, 4), (3, 2), (4, 2)]))

    def test_roundtrip(self):
        datasources.write_graph(self.path("c5.gr"), cycle_graph(5))
        self.assertEqual(datasources.GraphFile(self.path("c5.gr")).read(), cycle_graph(5))

    def test_errors_name_the_line(self):
        cases = [
            ("e 1 2\n", 1, "edge before the problem line"),
            ("p edge 2 1\ne 1 3\n", 2, "endpoint outside 1..2"),
            ("p edge 2 1\ne 2 2\n", 2, "self-loop at vertex 2"),
            ("p edge 2 1\ne 1 x\n", 2, "expected integers"),
            ("p edge 2 1\nq 1\n", 2, "unknown line type"),
        ]
        for text, line, message in cases:
            path = self.write("bad.gr", text)
            with self.assertRaises(FormatError) as caught:
                datasources.GraphFile(path).read()
            self.assertEqual(caught.exception.line, line)
            self.assertIn(message, str(caught.exception))
            self.assertTrue(str(caught.exception).startswith("%s:%d: " % (path, line)))

    def test_edge_count_mismatch(self):
        path = self.write("short.gr", "p edge 3 2\ne 1 2\n")
        with self.assertRaises(FormatError) as caught:
            datasources.GraphFile(path).read()
        self.assertIsNone(caught.exception.line)

    def test_missing_file(self):
        with self.assertRaises(FormatError):
            datasources.GraphFile(self.path("absent.gr")).read()


class TestColouringFile(FileTestCase):

    def test_read(self):
        path = self.write("dart.col", "1 1\n2 0\n3 1\n4 2\n5 2\n")
        c = datasources.ColouringFile(path, 5).read()
        self.assertEqual(c, Colouring((1, 0, 1, 2, 2), 3))

    def test_budget(self):
        path = self.write("p2.col", "2 0\n1 1\n")
        self.assertEqual(datasources.ColouringFile(path, 2, 4).read().k, 4)
        with self.assertRaises(FormatError):
            datasources.ColouringFile(path, 2, 1).read()

    def test_missing_vertex(self):
        path = self.write("gap.col", "1 0\n3 1\n")
        with self.assertRaises(FormatError) as caught:
            datasources.ColouringFile(path, 3).read()
        self.assertIn("no colour for vertex 2", str(caught.exception))

    def test_duplicate_vertex(self):
        path = self.write("dup.col", "1 0\n1 1\n")
        with self.assertRaises(FormatError) as caught:
            datasources.ColouringFile(path, 1).read()
        self.assertEqual(caught.exception.line, 2)

    def test_roundtrip(self):
        datasources.write_colouring(self.path("c.col"), Colouring((2, 0, 1), 3))
        self.assertEqual(datasources.ColouringFile(self.path("c.col"), 3).read().assignment, (2, 0, 1))


class TestCnfFile(FileTestCase):

    def test_read(self):
        path = self.write("f.cnf", "c four clauses\np cnf 4 4\n1 2 3 0\n1 2 4 0\n1 3 4 0\n2 3 4 0\n")
        f = datasources.CnfFile(path).read()
        self.assertEqual(f.num_vars, 4)
        self.assertEqual(f.clauses[3], (2, 3, 4))

    def test_negative_literal(self):
        path = self.write("neg.cnf", "p cnf 3 1\n1 -2 3 0\n")
        with self.assertRaises(FormatError) as caught:
            datasources.CnfFile(path).read()
        self.assertEqual(caught.exception.line, 2)

    def test_clause_width(self):
        path = self.write("wide.cnf", "p cnf 4 1\n1 2 3 4 0\n")
        with self.assertRaises(FormatError):
            datasources.CnfFile(path).read()


class TestMatrices(FileTestCase):

    def test_matrix_market(self):
        h = np.array([[4.0, 1.0, 0.0], [1.0, 4.0, 2.0], [0.0, 2.0, 4.0]])
        mmwrite(self.path("h.mtx"), coo_matrix(h))
        dense, pattern = datasources.MatrixMarketFile(self.path("h.mtx")).read()
        np.testing.assert_array_equal(dense, h)
        self.assertEqual(pattern.offdiag, frozenset({(0, 1), (1, 0), (1, 2), (2, 1)}))

    def test_not_matrix_market(self):
        path = self.write("junk.mtx", "hello\n")
        with self.assertRaises(FormatError):
            datasources.MatrixMarketFile(path).read()

    def test_csv_roundtrip(self):
        m = np.array([[1.0 / 3.0, -2.5], [0.0, 1e-300]])
        datasources.write_dense_csv(self.path("m.csv"), m)
        np.testing.assert_array_equal(datasources.read_dense_csv(self.path("m.csv")), m)


class TestWriters(FileTestCase):

    def test_names(self):
        datasources.write_names(self.path("names.txt"), [("x_1", 0), ("c_1_1", 3)])
        with open(self.path("names.txt")) as f:
            self.assertEqual(f.read(), "x_1 1\nc_1_1 4\n")

    def test_dot(self):
        datasources.write_dot(self.path("g.dot"), from_edge_list(2, [(0, 1)]))
        with open(self.path("g.dot")) as f:
            self.assertEqual(f.read(), "graph G {\n  0 -- 1;\n}\n")

    def test_unwritable_path(self):
        target = os.path.join(self.path("missing"), "g.gr")
        with self.assertRaises(FormatError) as caught:
            datasources.write_graph(target, cycle_graph(3))
        self.assertIsNone(caught.exception.line)
        with self.assertRaises(FormatError):
            datasources.write_dense_csv(target, np.eye(2))
