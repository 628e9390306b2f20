import unittest

from kiselman.core.words import Word, is_canonical
from kiselman.semigroup import (
    deletion_property_check,
    deletion_property_report,
    enumerate_semigroup,
    locality_sample,
    trace_is_local,
)
from kiselman.semigroup.deletion import words_avoiding_one


def w(letters, n):
    return Word(tuple(letters), n)


class TestSeparationAfterA1(unittest.TestCase):
    def test_small_ranks(self):
        self.assertTrue(deletion_property_check(2, "prop15"))
        self.assertTrue(deletion_property_check(3, "prop15"))
        self.assertTrue(deletion_property_check(4, "prop15"))

    def test_always_exhaustive(self):
        result = deletion_property_report(enumerate_semigroup(4), "prop15", budget=1)
        self.assertTrue(result.exhaustive)
        self.assertEqual(result.instances, 18)


class TestCancellationAfterA1(unittest.TestCase):
    def test_exhaustive_on_k3(self):
        result = deletion_property_report(enumerate_semigroup(3), "prop16", budget=10_000)
        self.assertTrue(result.exhaustive)
        self.assertGreater(result.instances, 0)
        self.assertTrue(result.passed, f"반례 발견: {result.counterexamples[:3]}")
        self.assertEqual(result.locality_checked, 2 * result.instances)

    def test_exhaustive_on_k4_with_full_budget(self):
        result = deletion_property_report(enumerate_semigroup(4), "prop16", budget=10_000, seed=0)
        self.assertTrue(result.exhaustive)
        self.assertGreater(result.instances, 0)
        self.assertEqual(result.counterexamples, [])
        self.assertEqual(result.locality_violations, [])
        self.assertEqual(result.locality_checked, 2 * result.instances)

    def test_sampled_on_k4(self):
        result = deletion_property_report(enumerate_semigroup(4), "prop16", budget=300, seed=5)
        self.assertFalse(result.exhaustive)
        self.assertGreater(result.instances, 0)
        self.assertLessEqual(result.instances, 300)
        self.assertTrue(result.passed)

    def test_same_seed_same_sample(self):
        table = enumerate_semigroup(4)
        a = deletion_property_report(table, "prop16", budget=100, seed=9)
        b = deletion_property_report(table, "prop16", budget=100, seed=9)
        self.assertEqual((a.instances, a.locality_checked), (b.instances, b.locality_checked))

    def test_bad_arguments(self):
        with self.assertRaises(ValueError):
            deletion_property_check(1, "prop15")
        with self.assertRaises(ValueError):
            deletion_property_report(enumerate_semigroup(2), "prop99")


class TestTraceLocality(unittest.TestCase):
    def test_single_deletion_inside_alpha(self):
        self.assertTrue(is_canonical(w([2, 1, 3, 2], 3)))
        self.assertTrue(trace_is_local(w([2], 3), w([3, 2], 3)))

    def test_all_pairs_on_k3(self):
        table = enumerate_semigroup(3)
        a1 = w([1], 3)
        words = words_avoiding_one(table)
        for alpha in words:
            for beta in words:
                if is_canonical(alpha + a1 + beta):
                    self.assertTrue(trace_is_local(alpha, beta), f"({alpha}, {beta}) 비국소 trace")

    def test_random_sample_on_k4(self):
        checked, violations = locality_sample(enumerate_semigroup(4), 200, seed=0)
        self.assertGreater(checked, 0)
        self.assertEqual(violations, [])


if __name__ == "__main__":
    unittest.main()
