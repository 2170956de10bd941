from unittest import TestCase

import numpy as np

from PyLRC.Construct.Gamma import gamma_greedy, gamma_injective
from PyLRC.Core.Colouring import HypergraphColouring, OrderFamily
from PyLRC.EGY.Lift import egy_chain, egy_lift, lift_collision_check
from PyLRC.EGY.Scrambling import (scrambling_exact_min, scrambling_random, verify_scrambling,
                                  verify_scrambling_naive)
from PyLRC.Errors import InputError, PreconditionError
from PyLRC.Search.Budget import SearchBudget, SearchStatus
from PyLRC.Verify.Certificate import validate_certificate
from PyLRC.Verify.PQ import verify_pq


class TestVerifyScrambling(TestCase):
    def test_identity_and_reversal(self):
        F = OrderFamily(4, [[0, 1, 2, 3], [3, 2, 1, 0]])
        self.assertIsNone(verify_scrambling(F, 2))
        self.assertIsNotNone(verify_scrambling(F, 3))

    def test_single_order(self):
        violation = verify_scrambling(OrderFamily.identity(3), 2)
        self.assertEqual(violation.elements, (0, 1))

    def test_arity_one(self):
        self.assertIsNone(verify_scrambling(OrderFamily.identity(5), 1))

    def test_agrees_with_naive(self):
        rng = np.random.default_rng(11)
        for _ in range(60):
            n = int(rng.integers(2, 7))
            k = int(rng.integers(1, n + 1))
            M = int(rng.integers(1, 6))
            F = OrderFamily(n, [rng.permutation(n) for _ in range(M)])
            fast = verify_scrambling(F, k)
            naive = verify_scrambling_naive(F, k)
            self.assertEqual(fast is None, naive is None)
            if fast is not None:
                self.assertTrue(validate_certificate(fast, F, k=k))

    def test_errors(self):
        with self.assertRaises(InputError):
            verify_scrambling(OrderFamily.identity(3), 4)


class TestScramblingRandom(TestCase):
    def test_small(self):
        result = scrambling_random(3, 2, seed=0)
        self.assertTrue(result.success)
        self.assertGreaterEqual(result.M, 2)
        self.assertEqual(scrambling_random(5, 1, seed=3).M, 1)

    def test_within_rounds(self):
        for n, k in ((8, 5), (10, 4)):
            for seed in range(20):
                result = scrambling_random(n, k, seed=seed, max_rounds=64)
                self.assertTrue(result.success, (n, k, seed))
                self.assertIsNone(verify_scrambling(result.family, k))

    def test_seeded(self):
        self.assertEqual(scrambling_random(6, 3, seed=0).family, scrambling_random(6, 3, seed=0).family)
        self.assertIsNone(verify_scrambling(scrambling_random(6, 3, seed=0).family, 3))

    def test_rounds_exhausted(self):
        result = scrambling_random(6, 6, seed=1, max_rounds=2)
        self.assertFalse(result.success)
        self.assertTrue(validate_certificate(result.violation, result.family, k=6))


class TestScramblingExactMin(TestCase):
    def test_values(self):
        for n, k, expected in ((2, 2, 2), (3, 2, 2), (3, 3, 3), (4, 1, 1)):
            result = scrambling_exact_min(n, k, 6)
            self.assertEqual(result.status, SearchStatus.FEASIBLE)
            self.assertEqual(result.k, expected, (n, k))
            self.assertIsNone(verify_scrambling(result.witness, k))
            self.assertIsNone(verify_scrambling_naive(result.witness, k))

    def test_cap(self):
        result = scrambling_exact_min(3, 3, 2)
        self.assertEqual(result.status, SearchStatus.INFEASIBLE)
        self.assertEqual(result.k, 2)

    def test_budget(self):
        result = scrambling_exact_min(6, 4, 12, SearchBudget(nodes=5))
        self.assertEqual(result.status, SearchStatus.UNKNOWN)

    def test_limit(self):
        with self.assertRaises(InputError):
            scrambling_exact_min(9, 2, 3)


class TestEGYLift(TestCase):
    def test_single_order_map(self):
        c = gamma_injective(5, 3)
        lifted = egy_lift(c, OrderFamily.identity(5), check=False)
        self.assertEqual(lifted.r, 4)
        expected = {(0, 1, 2, 3): (0, 1, 2), (0, 1, 2, 4): (0, 1, 2), (0, 1, 3, 4): (0, 1, 3),
                    (0, 2, 3, 4): (0, 2, 3), (1, 2, 3, 4): (1, 2, 3)}
        for edge, face in expected.items():
            for other, other_face in expected.items():
                self.assertEqual(lifted.colour(edge) == lifted.colour(other), face == other_face)
        self.assertEqual(lifted.k, 4)
        self.assertIsNone(verify_pq(lifted, 5, 4))

    def test_lift_is_54(self):
        for n in range(6, 11):
            base = gamma_greedy(n, 3, 4, 3)
            for seed in range(20):
                F = scrambling_random(n, 5, seed=seed, max_rounds=128).family
                lifted = egy_lift(base, F)
                self.assertIsNone(verify_pq(lifted, 5, 4), (n, seed))
                self.assertLessEqual(lifted.k, base.k ** F.M)
                self.assertIsNone(lift_collision_check(base, F, lifted))

    def test_greedy_at_eight(self):
        F = scrambling_random(8, 5, seed=0).family
        self.assertIsNone(verify_pq(egy_lift(gamma_greedy(8, 3, 4, 3), F), 5, 4))

    def test_chain(self):
        families = [scrambling_random(9, 5, seed=1, max_rounds=128).family,
                    scrambling_random(9, 6, seed=2, max_rounds=128).family]
        lifts = egy_chain(gamma_greedy(9, 3, 4, 3), families)
        self.assertEqual([G.r for G in lifts], [4, 5])
        self.assertIsNone(verify_pq(lifts[0], 5, 4))
        self.assertIsNone(verify_pq(lifts[1], 6, 5))

    def test_chain_at_eight(self):
        families = [scrambling_random(8, 5, seed=3, max_rounds=128).family,
                    scrambling_random(8, 6, seed=4, max_rounds=128).family]
        self.assertIsNone(verify_pq(egy_chain(gamma_greedy(8, 3, 4, 3), families)[-1], 6, 5))

    def test_collision_traced_to_base(self):
        c = HypergraphColouring.constant(6, 3)
        F = scrambling_random(6, 5, seed=0).family
        lifted = egy_lift(c, F, check=False)
        poor = lift_collision_check(c, F, lifted)
        self.assertIsNotNone(poor)
        self.assertTrue(validate_certificate(poor, c, p=4, q=3))

    def test_preconditions(self):
        F = scrambling_random(6, 5, seed=0).family
        with self.assertRaises(PreconditionError):
            egy_lift(HypergraphColouring.constant(6, 3), F)
        with self.assertRaises(PreconditionError):
            egy_lift(gamma_injective(6, 3), OrderFamily.identity(6))
        with self.assertRaises(InputError):
            egy_lift(gamma_injective(6, 3), OrderFamily.identity(7))
        with self.assertRaises(InputError):
            egy_lift(gamma_injective(6, 2), F)
