import unittest
from fractions import Fraction

import numpy as np

from kiselman.algebra import (
    CORNERS,
    SemigroupAlgebra,
    corner_dimension,
    corner_dimensions,
    idempotent_system_check,
    kiselman_projection,
    linear_psi,
    module_faithfulness_check,
    module_homomorphism_check,
    nonfaithful_projective_check,
    nonfaithful_projective_witness,
    primitive_idempotent,
    primitive_idempotent_recursion_check,
    primitive_idempotents,
    projection_check,
    projective_module,
    projective_module_dimension_check,
    rho,
    rho_on_algebra,
    rho_quotient_count,
    size_recursion_check,
)
from kiselman.core.errors import (
    InvalidContentError,
    LetterOutOfRangeError,
    NotIdempotentError,
    RankMismatchError,
)
from kiselman.core.words import Content, Word, all_contents
from kiselman.semigroup import enumerate_semigroup


def algebra(n):
    return SemigroupAlgebra(enumerate_semigroup(n))


def w(letters, n):
    return Word(tuple(letters), n)


def c(letters, n):
    return Content.from_letters(letters, n)


class TestAlgebraArithmetic(unittest.TestCase):
    def test_basic_products(self):
        A = algebra(1)
        self.assertTrue(((A.one() - A.generator(1)) * A.generator(1)).is_zero())

        A = algebra(2)
        product = A.generator(2) * (A.one() - A.generator(1))
        self.assertEqual(product, A.word(w([2], 2)) - A.word(w([2, 1], 2)))

        x = A.word(w([1, 2], 2))
        self.assertEqual(A.one() * x, x)
        self.assertEqual(x * A.one(), x)

    def test_scalars_are_exact(self):
        A = algebra(2)
        half = Fraction(1, 2) * A.generator(1)
        self.assertEqual(half.coefficient(A.table.generator(1)), Fraction(1, 2))
        self.assertEqual(half + half, A.generator(1))
        self.assertTrue((A.generator(1) * 0).is_zero())

    def test_combination_merges_equal_elements(self):
        A = algebra(2)
        a = A.combination([(w([1, 2, 1], 2), 1), (w([2, 1], 2), 2)])
        self.assertEqual(a, 3 * A.word(w([2, 1], 2)))

    def test_mixed_algebras(self):
        with self.assertRaises(RankMismatchError):
            algebra(2).one() + algebra(3).one()
        with self.assertRaises(RankMismatchError):
            algebra(2).one() * algebra(3).one()

    def test_string_and_json(self):
        A = algebra(2)
        e2 = primitive_idempotent(A, c([2], 2))
        self.assertEqual(str(e2), "1/1*[2] + -1/1*[2,1]")
        self.assertEqual(
            e2.to_json(),
            [{"word": [2], "coeff": "1/1"}, {"word": [2, 1], "coeff": "-1/1"}],
        )
        self.assertEqual(str(A.zero()), "0")


class TestOneDimensionalRepresentations(unittest.TestCase):
    def test_rho_examples(self):
        for X in all_contents(2):
            self.assertEqual(rho(X, Word.unit(2)), 1)
        self.assertEqual(rho(c([1], 2), w([1], 2)), 1)
        self.assertEqual(rho(c([1], 2), w([2], 2)), 0)
        table = enumerate_semigroup(3)
        self.assertTrue(all(rho(Content.full(3), x) == 1 for x in table.elements))

    def test_rho_is_multiplicative_on_the_algebra(self):
        A = algebra(3)
        a = A.one() - A.generator(2)
        b = A.generator(1) + 2 * A.word(w([3, 1], 3))
        for X in all_contents(3):
            self.assertEqual(rho_on_algebra(X, a * b), rho_on_algebra(X, a) * rho_on_algebra(X, b))

    def test_rank_mismatch(self):
        with self.assertRaises(RankMismatchError):
            rho(c([1], 2), w([1], 3))

    def test_quotient_count(self):
        for n in range(1, 7):
            self.assertEqual(rho_quotient_count(n), 2 ** n - 1)


class TestPrimitiveIdempotents(unittest.TestCase):
    def test_examples(self):
        A = algebra(1)
        self.assertEqual(primitive_idempotent(A, c([1], 1)), A.generator(1))
        self.assertEqual(primitive_idempotent(A, Content.empty(1)), A.one() - A.generator(1))

        A = algebra(2)
        self.assertEqual(
            primitive_idempotent(A, c([2], 2)),
            A.word(w([2], 2)) - A.word(w([2, 1], 2)),
        )

    def test_complete_orthogonal_system(self):
        for n in (1, 2, 3):
            self.assertEqual(idempotent_system_check(algebra(n)), [], f"n={n} 멱등원 체계 오류")

    def test_recursion(self):
        self.assertEqual(primitive_idempotent_recursion_check(algebra(1)), [])
        for n in (2, 3):
            self.assertEqual(primitive_idempotent_recursion_check(algebra(n)), [])

    def test_sum_is_unit(self):
        A = algebra(3)
        total = A.zero()
        for e in primitive_idempotents(A):
            total = total + e
        self.assertEqual(total, A.one())

    def test_content_outside_universe(self):
        with self.assertRaises(LetterOutOfRangeError):
            primitive_idempotent(algebra(3), c([3], 3), universe=2)


class TestProjections(unittest.TestCase):
    def test_examples(self):
        A = algebra(3)
        self.assertEqual(kiselman_projection(A, 1), A.one() - A.generator(3))
        A = algebra(2)
        self.assertEqual(kiselman_projection(A, 2), A.generator(2))

    def test_psi_images_are_matrix_units(self):
        for n in (1, 2, 3, 4):
            self.assertEqual(projection_check(algebra(n)), [])

    def test_linear_psi(self):
        A = algebra(2)
        M = linear_psi(kiselman_projection(A, 1))
        self.assertEqual([[v for v in row] for row in M], [[1, 0], [0, 0]])

    def test_index_out_of_range(self):
        with self.assertRaises(LetterOutOfRangeError):
            kiselman_projection(algebra(2), 3)


class TestCorners(unittest.TestCase):
    def test_k2_corners(self):
        data = corner_dimensions(algebra(2))
        self.assertEqual(tuple(data["corners"]), CORNERS)
        self.assertEqual(
            data["corners"],
            {"a_n,a_n": 2, "a_n,e-a_n": 0, "e-a_n,a_n": 1, "e-a_n,e-a_n": 2},
        )
        self.assertEqual((data["size"], data["previous_size"]), (5, 2))

    def test_k1_uses_trivial_previous_monoid(self):
        data = corner_dimensions(algebra(1))
        self.assertEqual(data["previous_size"], 1)
        self.assertEqual(data["corners"]["a_n,e-a_n"], 0)

    def test_mixed_corner_dimension(self):
        A = algebra(3)
        a3 = A.generator(3)
        self.assertEqual(corner_dimension(A.one() - a3, a3), 8)

    def test_size_recursion(self):
        for n in (2, 3, 4):
            self.assertTrue(size_recursion_check(n), f"|K_{n}| 점화식 불일치")
        with self.assertRaises(ValueError):
            size_recursion_check(1)

    def test_factors_must_be_idempotent(self):
        A = algebra(2)
        with self.assertRaises(NotIdempotentError):
            corner_dimension(A.generator(1) + A.generator(2), A.one())


class TestProjectiveModule(unittest.TestCase):
    def test_k2_module(self):
        m = projective_module(enumerate_semigroup(2))
        self.assertEqual([str(b) for b in m.basis_words()], ["2", "1,2"])
        self.assertEqual(m.dimension, 2)
        np.testing.assert_array_equal(m.action(0), np.eye(2, dtype=np.int64))
        zero = m.table.element_of(w([2, 1], 2))
        np.testing.assert_array_equal(m.action(zero), np.zeros((2, 2), dtype=np.int64))

    def test_action_is_a_faithful_representation(self):
        for n in (1, 2, 3):
            m = projective_module(enumerate_semigroup(n))
            self.assertEqual(module_homomorphism_check(m), [])
            self.assertTrue(module_faithfulness_check(m))
            self.assertEqual(projective_module_dimension_check(m), [])

    def test_faithful_on_k4(self):
        self.assertTrue(module_faithfulness_check(projective_module(enumerate_semigroup(4))))

    def test_other_projectives_are_annihilated(self):
        A = algebra(2)
        self.assertTrue(nonfaithful_projective_witness(A, c([1, 2], 2)))
        self.assertTrue(nonfaithful_projective_witness(A, Content.empty(2)))
        self.assertTrue(nonfaithful_projective_witness(algebra(3), c([1], 3)))
        for n in (1, 2, 3):
            self.assertEqual(nonfaithful_projective_check(algebra(n)), [])

    def test_faithful_projective_is_rejected(self):
        with self.assertRaises(InvalidContentError):
            nonfaithful_projective_witness(algebra(2), c([2], 2))


if __name__ == "__main__":
    unittest.main()
