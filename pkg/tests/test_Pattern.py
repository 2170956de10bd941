from itertools import permutations
from unittest import TestCase

from PyLRC.Core.Pattern import (PatternGraph, are_isomorphic, automorphism_group, contains_subgraph, copy_count,
                                enumerate_copies, is_group, naive_copies, parse_pattern)
from PyLRC.Data import Pattern, pattern_names
from PyLRC.Data.Patterns import CATALOGUE
from PyLRC.Errors import InputError, ParseError


def copy_key(H, copy):
    return (frozenset(frozenset((copy[i], copy[j])) for i, j in H.edges), frozenset(copy))


class TestParsePattern(TestCase):
    def test_path(self):
        H = parse_pattern("n=4; edges=0-1,1-2,2-3")
        self.assertEqual(H.vertex_count, 4)
        self.assertEqual(H.edges, ((0, 1), (1, 2), (2, 3)))

    def test_pendant_triangle(self):
        H = parse_pattern("n=4; edges=1-2,2-3,3-1,0-1")
        self.assertTrue(are_isomorphic(H, Pattern("Tp")))
        self.assertTrue(H.has_triangle())

    def test_edgeless(self):
        H = parse_pattern("n=3; edges=")
        self.assertEqual(H.edge_count, 0)
        self.assertEqual(H.isolated_vertices, [0, 1, 2])

    def test_errors(self):
        for text in ("n=5; edges=0-1,1-0", "n=3; edges=0-0", "n=3; edges=0-3", "edges=0-1", "n=3; edges=0-1,x"):
            with self.subTest(text=text), self.assertRaises(ParseError):
                parse_pattern(text)

    def test_error_position(self):
        with self.assertRaises(ParseError) as context:
            parse_pattern("n=5; edges=0-1,1-0")
        self.assertEqual(context.exception.position, 15)

    def test_str_round_trip(self):
        for name in pattern_names():
            H = Pattern(name)
            self.assertEqual(parse_pattern(str(H)), H)


class TestAutomorphisms(TestCase):
    def test_group_sizes(self):
        sizes = {"P1": 2, "P2": 2, "P3": 2, "K3": 6, "C4": 8, "K4": 24, "Tp": 2, "Te": 12, "K14": 24}
        for name, size in sizes.items():
            group = automorphism_group(Pattern(name))
            self.assertEqual(len(group), size, name)
            self.assertTrue(is_group(group))

    def test_isolated_vertices_permute(self):
        self.assertEqual(len(automorphism_group(Pattern("P3").with_isolated(2))), 4)


class TestCopies(TestCase):
    def test_counts(self):
        self.assertEqual(len(list(enumerate_copies(Pattern("P1"), 4))), 6)
        self.assertEqual(len(list(enumerate_copies(Pattern("P3"), 4))), 12)
        self.assertEqual(len(list(enumerate_copies(Pattern("K3"), 5))), 10)

    def test_against_naive(self):
        for name in CATALOGUE:
            H = Pattern(name)
            for n in range(H.vertex_count, 9):
                copies = list(enumerate_copies(H, n))
                keys = {copy_key(H, c) for c in copies}
                self.assertEqual(len(keys), len(copies), name)
                self.assertEqual(keys, naive_copies(H, n), name)
                self.assertEqual(copy_count(H, n), len(copies), name)

    def test_isolated_vertices_counted(self):
        H = Pattern("P2").with_isolated(1)
        self.assertEqual(len(list(enumerate_copies(H, 5))), 5 * 4 * 3 * 2 // 2)

    def test_too_large(self):
        with self.assertRaises(InputError):
            list(enumerate_copies(Pattern("K4"), 3))
        with self.assertRaises(InputError):
            automorphism_group(PatternGraph(11, ()))


class TestSubgraphs(TestCase):
    def test_contains(self):
        self.assertTrue(contains_subgraph(Pattern("K4"), Pattern("C4")))
        self.assertTrue(contains_subgraph(Pattern("C6"), Pattern("P4")))
        self.assertFalse(contains_subgraph(Pattern("C4"), Pattern("K3")))
        self.assertTrue(contains_subgraph(Pattern("Tp"), Pattern("P2").with_isolated(3)))

    def test_isomorphism_respects_labels(self):
        for perm in permutations(range(4)):
            relabelled = PatternGraph(4, tuple((perm[i], perm[j]) for i, j in Pattern("Tp").edges))
            self.assertTrue(are_isomorphic(relabelled, Pattern("Tp")))
        self.assertFalse(are_isomorphic(Pattern("C4"), Pattern("Tp")))
