import os
import unittest

from kiselman.core.errors import LetterOutOfRangeError, NotNilpotentError
from kiselman.core.rewrite import normalize
from kiselman.core.words import Word
from kiselman.representations import (
    KINDS,
    PSI4_WITNESS,
    cyclic_vector_check,
    faithfulness_check,
    height,
    height_decrease_check,
    int_identity,
    kappa,
    kappa_generator,
    kappa_prime,
    kappa_prime_bound_check,
    kiselman_generator,
    matrices_equal,
    matrix_to_json,
    ml_sequences,
    nilpotency_class_of_matrix,
    psi,
    relations_check,
    specialization_check,
)
from kiselman.semigroup import enumerate_semigroup

SLOW = bool(os.environ.get("KISELMAN_SLOW"))


def w(letters, n):
    return Word(tuple(letters), n)


def as_lists(M):
    return [[int(v) for v in row] for row in M]


class TestKiselmanMatrices(unittest.TestCase):
    def test_generators(self):
        self.assertEqual(as_lists(kiselman_generator(2, 1)), [[1, 1], [0, 0]])
        self.assertEqual(as_lists(kiselman_generator(2, 2)), [[0, 0], [0, 1]])
        self.assertEqual(as_lists(kiselman_generator(3, 3)), [[0, 0, 0], [0, 1, 0], [0, 0, 1]])

    def test_generator_out_of_range(self):
        with self.assertRaises(LetterOutOfRangeError):
            kiselman_generator(2, 3)

    def test_psi_examples(self):
        self.assertEqual(as_lists(psi(Word.unit(3))), as_lists(int_identity(3)))
        self.assertEqual(as_lists(psi(w([3, 2, 1], 3))), [[0] * 3] * 3)
        self.assertEqual(as_lists(psi(w([1, 2, 3], 3))), [[0, 1, 1], [0, 0, 1], [0, 0, 0]])

    def test_height(self):
        self.assertEqual(height(Word.unit(2)), 6)
        self.assertEqual(height(w([1], 2)), 4)
        self.assertEqual(height(w([3, 2, 1], 3)), 0)

    def test_nilpotency_class(self):
        zero = psi(w([3, 2, 1], 3))
        self.assertEqual(nilpotency_class_of_matrix(zero), 1)
        self.assertEqual(nilpotency_class_of_matrix(psi(w([1, 2, 3], 3))), 3)
        self.assertEqual(nilpotency_class_of_matrix(psi(w([1, 2], 2))), 2)
        with self.assertRaises(NotNilpotentError):
            nilpotency_class_of_matrix(int_identity(2))

    def test_class_of_increasing_product(self):
        for n in range(1, 7):
            x = Word(tuple(range(1, n + 1)), n)
            self.assertEqual(nilpotency_class_of_matrix(psi(x)), n, f"n={n}")

    def test_matrix_json_uses_decimal_strings(self):
        self.assertEqual(
            matrix_to_json(kiselman_generator(2, 1)),
            {"n": 2, "entries": [["1", "1"], ["0", "0"]]},
        )

    def test_relations_hold_for_every_kind(self):
        for kind in KINDS:
            for n in (1, 2, 3):
                self.assertEqual(relations_check(kind, n), [], f"{kind} (n={n}) 관계식 위반")

    def test_height_decreases_under_left_multiplication(self):
        for n in (2, 3, 4):
            self.assertEqual(height_decrease_check(enumerate_semigroup(n)), [])

    def test_cyclic_vector(self):
        for n in (1, 2, 3):
            self.assertTrue(cyclic_vector_check(enumerate_semigroup(n)))


class TestPsiFaithfulness(unittest.TestCase):
    def test_faithful_up_to_three(self):
        for n in (1, 2, 3):
            self.assertEqual(faithfulness_check(enumerate_semigroup(n), "psi"), (True, None))

    def test_not_faithful_on_k4(self):
        faithful, witness = faithfulness_check(enumerate_semigroup(4), "psi")
        self.assertFalse(faithful)
        u, v = witness
        self.assertNotEqual(u, v)
        self.assertTrue(matrices_equal(psi(u), psi(v)))

    def test_known_collision_on_k4(self):
        u, v = (Word(letters, 4) for letters in PSI4_WITNESS)
        self.assertNotEqual(normalize(u), normalize(v))
        self.assertTrue(matrices_equal(psi(u), psi(v)))

    def test_unknown_kind(self):
        with self.assertRaises(ValueError):
            faithfulness_check(enumerate_semigroup(2), "phi")


class TestKappa(unittest.TestCase):
    def test_generator_has_xi_entries(self):
        data = kappa_generator(2, 1).to_json()
        self.assertEqual(data["entries"][0][0], [{"coeff": "1", "monomial": {}}])
        self.assertEqual(data["entries"][0][1], [{"coeff": "1", "monomial": {"1,2": 1}}])
        self.assertEqual(data["entries"][1], [[], []])

    def test_products_and_evaluation(self):
        # κ(a₁a₂) = [[0, ξ₁₂], [0, 0]], κ(a₂a₁) = 0
        self.assertEqual(as_lists(kappa(w([1, 2], 2)).evaluate({(1, 2): 7})), [[0, 7], [0, 0]])
        self.assertEqual(as_lists(kappa(w([2, 1], 2)).specialize(3)), [[0, 0], [0, 0]])

        values = {(1, 2): 2, (1, 3): 3, (2, 3): 5}
        self.assertEqual(
            as_lists(kappa_generator(3, 1).evaluate(values)),
            [[1, 0, 3], [0, 1, 5], [0, 0, 0]],
        )
        self.assertEqual(
            kappa(w([1, 2], 3)),
            kappa_generator(3, 1) @ kappa_generator(3, 2),
        )

    def test_rank_one_has_no_variables(self):
        self.assertEqual(as_lists(kappa(w([1], 1)).specialize(9)), [[0]])
        self.assertEqual(kappa_generator(1, 1).to_json()["entries"], [[[]]])

    def test_last_generator_has_no_variables(self):
        M = kappa_generator(3, 3)
        self.assertEqual(as_lists(M.specialize(5)), [[0, 0, 0], [0, 1, 0], [0, 0, 1]])

    def test_unit_is_identity(self):
        self.assertEqual(as_lists(kappa(Word.unit(3)).specialize(7)), as_lists(int_identity(3)))

    def test_specialization_gives_psi(self):
        for n in (2, 3):
            self.assertEqual(specialization_check(enumerate_semigroup(n)), [])

    def test_faithful(self):
        for n in (1, 2, 3):
            self.assertEqual(faithfulness_check(enumerate_semigroup(n), "kappa"), (True, None))

    def test_faithful_on_k4(self):
        self.assertEqual(faithfulness_check(enumerate_semigroup(4), "kappa"), (True, None))


class TestKappaPrime(unittest.TestCase):
    def test_sequences(self):
        seq = ml_sequences(3)
        self.assertEqual(seq.m, (1, 2, 4097))
        self.assertEqual(seq.l[:2], (1, 4096))
        self.assertEqual(seq.l[2], 3 ** 8 * 4097 ** 24)

    def test_sequence_argument(self):
        with self.assertRaises(ValueError):
            ml_sequences(0)

    def test_examples(self):
        self.assertEqual(as_lists(kappa_prime(Word.unit(2))), [[1, 0], [0, 1]])
        self.assertEqual(as_lists(kappa_prime(w([1], 2))), [[1, 2], [0, 0]])
        self.assertEqual(as_lists(kappa_prime(w([3, 2, 1], 3))), [[0] * 3] * 3)

    def test_faithful_and_bounded(self):
        for n in (1, 2, 3):
            table = enumerate_semigroup(n)
            self.assertEqual(faithfulness_check(table, "kappa-prime"), (True, None))
            self.assertEqual(kappa_prime_bound_check(table), [])

    @unittest.skipUnless(SLOW, "KISELMAN_SLOW 설정 시에만 실행")
    def test_faithful_on_k4(self):
        table = enumerate_semigroup(4)
        self.assertEqual(faithfulness_check(table, "kappa-prime"), (True, None))
        self.assertEqual(kappa_prime_bound_check(table), [])


if __name__ == "__main__":
    unittest.main()
