from itertools import product
from unittest import TestCase

import numpy as np

from PyLRC.Construct.Delta import mtf_edge_colouring
from PyLRC.Core.Colouring import LocalColouringCollection
from PyLRC.Data import Pattern
from PyLRC.Errors import GuardError, InputError
from PyLRC.Search.Budget import SearchBudget, SearchStatus
from PyLRC.Search.Exact import g_exact_min, g_feasible
from PyLRC.Search.PQ import pq_exact_min, pq_feasible
from PyLRC.Verify.Local import verify_local
from PyLRC.Verify.PQ import verify_pq


class TestGFeasible(TestCase):
    def test_triangle_with_five_colours(self):
        result = g_feasible(5, Pattern("K3"), 5)
        self.assertEqual(result.status, SearchStatus.FEASIBLE)
        self.assertIsNone(verify_local(result.witness, Pattern("K3")))

    def test_one_colour(self):
        self.assertEqual(g_feasible(5, Pattern("P3"), 1).status, SearchStatus.INFEASIBLE)

    def test_exact_min(self):
        result = g_exact_min(4, Pattern("K3"))
        self.assertTrue(result.feasible)
        self.assertGreaterEqual(result.k, 3)
        self.assertLessEqual(result.k, 5)
        self.assertIsNone(verify_local(result.witness, Pattern("K3")))
        self.assertEqual(g_feasible(4, Pattern("K3"), result.k - 1).status, SearchStatus.INFEASIBLE)

    def test_symmetry_breaking_agrees(self):
        for name in ("P2", "P3", "K3"):
            H = Pattern(name)
            for n in range(H.vertex_count, 5):
                for k in (1, 2):
                    with self.subTest(pattern=name, n=n, k=k):
                        plain = g_feasible(n, H, k, symmetry=False)
                        broken = g_feasible(n, H, k, symmetry=True)
                        self.assertEqual(plain.status, broken.status)
                        for result in (plain, broken):
                            if result.feasible:
                                self.assertIsNone(verify_local(result.witness, H))

    def test_against_enumeration(self):
        H = Pattern("P2")
        local = any(verify_local(LocalColouringCollection(3, 2, np.array(cells).reshape(3, 3)), H) is None
                    for cells in product(range(2), repeat=9))
        self.assertEqual(g_feasible(3, H, 2).feasible, local)

    def test_budget(self):
        result = g_feasible(5, Pattern("K3"), 5, SearchBudget(nodes=3))
        self.assertEqual(result.status, SearchStatus.UNKNOWN)

    def test_guard(self):
        with self.assertRaises(GuardError):
            g_feasible(300, Pattern("P3"), 3)

    def test_errors(self):
        with self.assertRaises(InputError):
            g_feasible(5, Pattern("P1"), 2)
        with self.assertRaises(InputError):
            g_feasible(3, Pattern("P3"), 2)
        with self.assertRaises(InputError):
            SearchBudget(nodes=0)


class TestPQSearch(TestCase):
    def test_all_pairs_distinct(self):
        result = pq_exact_min(5, 2, 4, 6)
        self.assertEqual(result.k, 10)
        self.assertIsNone(verify_pq(result.witness, 4, 6))

    def test_q1(self):
        self.assertEqual(pq_exact_min(6, 3, 4, 1).k, 1)

    def test_triangle_free_pairs(self):
        result = pq_exact_min(5, 2, 3, 2)
        self.assertEqual(result.k, 2)
        self.assertLessEqual(result.k, mtf_edge_colouring(5).k)
        self.assertIsNone(verify_pq(result.witness, 3, 2))

    def test_single_p_set(self):
        for q in range(1, 7):
            self.assertEqual(pq_exact_min(4, 2, 4, q).k, q)

    def test_nondecreasing_in_q(self):
        # every triangle rainbow means a proper edge colouring of K5
        self.assertEqual([pq_exact_min(5, 2, 3, q).k for q in (1, 2, 3)], [1, 2, 5])
        values = [pq_exact_min(5, 2, 4, q).k for q in (1, 2, 3, 4, 6)]
        self.assertEqual(values, sorted(values))
        self.assertEqual((values[0], values[-1]), (1, 10))

    def test_ramsey_bound(self):
        # every 2-colouring of K6 has a monochromatic triangle
        self.assertEqual(pq_feasible(6, 2, 3, 2, 2).status, SearchStatus.INFEASIBLE)

    def test_symmetry_breaking_agrees(self):
        for n, r, p, q in ((5, 2, 3, 2), (5, 2, 4, 4), (5, 3, 4, 3)):
            for k in range(1, 5):
                plain = pq_feasible(n, r, p, q, k, symmetry=False)
                broken = pq_feasible(n, r, p, q, k)
                self.assertEqual(plain.status, broken.status, (n, r, p, q, k))

    def test_guard_and_errors(self):
        with self.assertRaises(GuardError):
            pq_feasible(200, 4, 5, 4, 3)
        with self.assertRaises(InputError):
            pq_feasible(5, 3, 3, 1, 2)
        with self.assertRaises(InputError):
            pq_feasible(5, 2, 3, 4, 2)
