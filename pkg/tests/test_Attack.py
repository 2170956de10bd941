from itertools import combinations
from unittest import TestCase

import networkx as nx
import numpy as np

from PyLRC.Attack.AuxGraph import build_aux_graph
from PyLRC.Attack.Cycle import attack_cycle
from PyLRC.Attack.Nice import NiceWitness, attack_nice, is_nice, mono_pair_stats
from PyLRC.Attack.Result import AttackStatus
from PyLRC.Core.Colouring import LocalColouringCollection
from PyLRC.Core.Indexing import edge_list
from PyLRC.Data import Pattern
from PyLRC.Data.Patterns import FOUR_EDGE, NICE_FOUR_EDGE
from PyLRC.Errors import InputError
from PyLRC.Verify.Certificate import validate_certificate
from PyLRC.Verify.Local import verify_local


class TestAuxGraph(TestCase):
    def test_constant_is_clique(self):
        aux = build_aux_graph(LocalColouringCollection.constant(6))
        self.assertEqual(aux.vertex_count, 6)
        self.assertEqual(aux.edge_count, 15)
        self.assertTrue(nx.is_isomorphic(aux.graph, nx.complete_graph(6)))

    def test_one_edge_per_host_edge(self):
        C = LocalColouringCollection.random(7, 3, np.random.default_rng(0))
        aux = build_aux_graph(C)
        self.assertEqual(aux.vertex_count, 21)
        self.assertEqual(aux.edge_count, 21)
        for (u, i), (v, j), host in aux.graph.edges(data="host"):
            self.assertEqual(C.colour(u, u, v), i)
            self.assertEqual(C.colour(v, u, v), j)
            self.assertEqual(set(host), {u, v})

    def test_one_neighbour_over_each_vertex(self):
        rng = np.random.default_rng(4)
        for k in (1, 2, 4):
            C = LocalColouringCollection.random(8, k, rng)
            aux = build_aux_graph(C)
            for node in aux.graph.nodes:
                u, i = node
                for v in range(8):
                    over = aux.neighbours_over(node, v)
                    self.assertLessEqual(len(over), 1)
                    if v != u and C.colour(u, u, v) == i:
                        self.assertEqual(over, [(v, C.colour(v, u, v))])
                    else:
                        self.assertEqual(over, [])


class TestAttackCycle(TestCase):
    def test_constant(self):
        C = LocalColouringCollection.constant(6)
        result = attack_cycle(C, 2)
        self.assertEqual(result.status, AttackStatus.FOUND)
        self.assertTrue(validate_certificate(result.certificate, C, length=4))

    def test_longer_cycle(self):
        C = LocalColouringCollection.constant(7)
        result = attack_cycle(C, 3)
        self.assertTrue(result.found)
        self.assertEqual(len(result.certificate.cycle), 6)

    def test_random_collections(self):
        for seed in range(50):
            C = LocalColouringCollection.random(20, 2, np.random.default_rng(seed))
            result = attack_cycle(C, 2)
            if result.found:
                self.assertTrue(validate_certificate(result.certificate, C, length=4), seed)

    def test_local_collection(self):
        C = LocalColouringCollection.injective(6)
        self.assertIsNone(verify_local(C, Pattern("C4")))
        self.assertEqual(attack_cycle(C, 2).status, AttackStatus.NOT_FOUND)

    def test_limits(self):
        C = LocalColouringCollection.constant(8)
        self.assertEqual(attack_cycle(C, 2, budget=1).status, AttackStatus.BUDGET_EXHAUSTED)
        self.assertEqual(attack_cycle(LocalColouringCollection.constant(5), 3).status, AttackStatus.NOT_FOUND)
        with self.assertRaises(InputError):
            attack_cycle(C, 1)


class TestMonoPairStats(TestCase):
    def test_constant(self):
        stats = mono_pair_stats(LocalColouringCollection.constant(7))
        self.assertEqual(stats.disjoint_count, 3)
        self.assertEqual(stats.intersecting_count, 4)
        self.assertEqual(stats.disjoint_pair, ((0, 1), (2, 3)))
        self.assertEqual(stats.intersecting_pair, ((0, 1), (0, 2)))

    def test_injective(self):
        stats = mono_pair_stats(LocalColouringCollection.injective(6))
        self.assertEqual(stats.disjoint_count, 0)
        self.assertEqual(stats.intersecting_count, 0)

    def test_recount(self):
        C = LocalColouringCollection.random(8, 2, np.random.default_rng(7))
        stats = mono_pair_stats(C, jobs=2)
        edges = [tuple(int(v) for v in e) for e in edge_list(8)]
        best = {True: (-1, None), False: (-1, None)}
        for a, b in combinations(edges, 2):
            count = len(stats.agreeing((a, b)))
            disjoint = not set(a) & set(b)
            if count > best[disjoint][0]:
                best[disjoint] = (count, (a, b))
        self.assertEqual((stats.disjoint_count, stats.disjoint_pair), best[True])
        self.assertEqual((stats.intersecting_count, stats.intersecting_pair), best[False])
        self.assertEqual(len(stats.dataframe()), 2)

    def test_small_host(self):
        with self.assertRaises(InputError):
            mono_pair_stats(LocalColouringCollection.constant(4))


class TestIsNice(TestCase):
    def test_four_edge_graphs(self):
        for name in FOUR_EDGE:
            self.assertEqual(is_nice(Pattern(name)) is not None, name in NICE_FOUR_EDGE, name)

    def test_not_nice(self):
        for name in ("C4", "P4", "Tp", "Te", "K3"):
            self.assertIsNone(is_nice(Pattern(name)), name)

    def test_star_witness(self):
        W = is_nice(Pattern("K14"))
        self.assertEqual((W.e1, W.e2, W.f1, W.f2), (0, 1, 2, 3))

    def test_invalid_witness(self):
        with self.assertRaises(InputError):
            NiceWitness(Pattern("C4"), 0, 1, 2, 3)
        with self.assertRaises(InputError):
            NiceWitness(Pattern("K14"), 0, 0, 2, 3)


class TestAttackNice(TestCase):
    def test_constant(self):
        for name in NICE_FOUR_EDGE:
            H = Pattern(name)
            C = LocalColouringCollection.constant(H.vertex_count + 6)
            result = attack_nice(C, H, is_nice(H))
            self.assertTrue(result.found, name)
            self.assertTrue(validate_certificate(result.certificate, C, pattern=H), name)

    def test_random_collections(self):
        H = Pattern("K14")
        W = is_nice(H)
        for seed in range(50):
            C = LocalColouringCollection.random(20, 2, np.random.default_rng(seed))
            result = attack_nice(C, H, W)
            if result.found:
                self.assertTrue(validate_certificate(result.certificate, C, pattern=H), seed)

    def test_random_collections_all_nice(self):
        for name in NICE_FOUR_EDGE:
            H = Pattern(name)
            C = LocalColouringCollection.random(16, 2, np.random.default_rng(3))
            result = attack_nice(C, H, is_nice(H))
            if result.found:
                self.assertTrue(validate_certificate(result.certificate, C, pattern=H), name)

    def test_local_collection(self):
        H = Pattern("K14")
        C = LocalColouringCollection.injective(11)
        self.assertIsNone(verify_local(C, H))
        self.assertEqual(attack_nice(C, H, is_nice(H)).status, AttackStatus.NOT_FOUND)

    def test_budget(self):
        H = Pattern("M4")
        C = LocalColouringCollection.constant(14)
        self.assertEqual(attack_nice(C, H, is_nice(H), budget=0).status, AttackStatus.BUDGET_EXHAUSTED)

    def test_foreign_witness(self):
        with self.assertRaises(InputError):
            attack_nice(LocalColouringCollection.constant(11), Pattern("Chair"), is_nice(Pattern("K14")))
