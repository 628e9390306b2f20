import random
import unittest

from kiselman.core.errors import StepNotApplicableError
from kiselman.core.rewrite import (
    ReductionStep,
    StepKind,
    applicable_steps,
    apply_step,
    confluence_check,
    is_irreducible,
    normalize,
    normalize_traced,
    reachable_normal_forms,
)
from kiselman.core.words import Word, content, is_canonical, random_word


def w(letters, n):
    return Word(tuple(letters), n)


class TestReductionSteps(unittest.TestCase):
    def test_square_admits_both_kinds(self):
        steps = applicable_steps(w([1, 1], 1))
        self.assertEqual([s.kind for s in steps], [StepKind.DROP_RIGHT, StepKind.DROP_LEFT])

    def test_canonical_word_has_no_steps(self):
        self.assertEqual(applicable_steps(w([2, 1, 3, 2], 3)), [])

    def test_drop_right_over_smaller_letters(self):
        steps = applicable_steps(w([3, 1, 2, 3], 3))
        self.assertEqual(len(steps), 1)
        self.assertEqual((steps[0].letter, steps[0].kind), (3, StepKind.DROP_RIGHT))

    def test_apply_step_examples(self):
        self.assertEqual(
            apply_step(w([1, 1], 1), ReductionStep(0, 1, 1, StepKind.DROP_RIGHT)).letters, (1,)
        )
        self.assertEqual(
            apply_step(w([1, 2, 1], 2), ReductionStep(0, 2, 1, StepKind.DROP_LEFT)).letters, (2, 1)
        )
        self.assertEqual(
            apply_step(w([3, 2, 1, 3], 3), ReductionStep(0, 3, 3, StepKind.DROP_RIGHT)).letters,
            (3, 2, 1),
        )

    def test_step_that_does_not_match(self):
        with self.assertRaises(StepNotApplicableError):
            apply_step(w([1, 2, 1], 2), ReductionStep(0, 2, 1, StepKind.DROP_RIGHT))
        with self.assertRaises(StepNotApplicableError):
            apply_step(w([1, 2], 2), ReductionStep(0, 1, 1, StepKind.DROP_LEFT))
        with self.assertRaises(StepNotApplicableError):
            apply_step(w([1], 1), ReductionStep(0, 5, 1, StepKind.DROP_LEFT))


class TestNormalize(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(normalize(w([2, 1, 2], 2)).letters, (2, 1))
        self.assertEqual(normalize(w([], 2)).letters, ())
        self.assertEqual(normalize(w([1, 2, 1, 2], 2)).letters, (2, 1))
        self.assertEqual(normalize(w([3, 2, 1, 3], 3)).letters, (3, 2, 1))

    def test_random_words(self):
        rng = random.Random(7)
        for _ in range(300):
            x = random_word(4, 12, rng)
            v = normalize(x)
            self.assertTrue(is_canonical(v))
            self.assertTrue(is_irreducible(v))
            self.assertEqual(normalize(v), v)
            self.assertEqual(content(v), content(x))
            self.assertLessEqual(len(v), len(x))

    def test_traced_examples(self):
        trace = normalize_traced(w([1, 1], 1))
        self.assertEqual(len(trace.steps), 1)
        self.assertEqual(trace.result.letters, (1,))

        trace = normalize_traced(w([2, 1, 2], 2))
        self.assertEqual(len(trace.steps), 1)
        self.assertEqual(trace.result.letters, (2, 1))

        self.assertEqual(normalize_traced(w([2, 1, 3, 2], 3)).steps, ())

    def test_trace_replays_and_origins_point_at_input(self):
        x = w([3, 2, 1, 3, 2, 1], 3)
        for strategy in ("leftmost", "rightmost"):
            trace = normalize_traced(x, strategy=strategy)
            self.assertEqual(trace.replay(), trace.result)
            self.assertEqual(trace.result, normalize(x))
            self.assertEqual(len(set(trace.origins)), len(trace.steps))
            self.assertEqual(len(trace.result) + len(trace.steps), len(x))

    def test_unknown_strategy(self):
        with self.assertRaises(ValueError):
            normalize_traced(w([1, 1], 1), strategy="middle")


class TestConfluence(unittest.TestCase):
    def test_examples(self):
        self.assertTrue(confluence_check(w([1, 2, 1, 2], 2), 100, seed=0))
        self.assertTrue(confluence_check(w([2, 1, 3, 2], 3), 5, seed=1))
        self.assertTrue(confluence_check(w([3, 2, 1, 3, 2, 1], 3), 100, seed=2))

    def test_same_seed_same_answer(self):
        x = w([1, 3, 2, 1, 3, 2, 4, 1], 4)
        self.assertEqual(confluence_check(x, 20, seed=3), confluence_check(x, 20, seed=3))

    def test_ten_thousand_random_words(self):
        rng = random.Random(2024)
        failures = []
        for n in range(1, 6):
            for _ in range(2_000):
                x = random_word(n, 12, rng)
                if not confluence_check(x, 2, seed=rng.randrange(2 ** 32)):
                    failures.append(str(x))
        self.assertEqual(failures, [], f"합류성 실패 {len(failures)}건")

    def test_trials_must_be_positive(self):
        with self.assertRaises(ValueError):
            confluence_check(w([1], 1), 0)

    def test_every_order_reaches_one_word(self):
        rng = random.Random(11)
        for _ in range(60):
            x = random_word(3, 7, rng)
            self.assertEqual(
                reachable_normal_forms(x), frozenset([normalize(x)]),
                f"'{x}' 의 축약 순서에 따라 정규형이 달라집니다."
            )


if __name__ == "__main__":
    unittest.main()
