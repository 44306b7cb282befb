# -*- coding: utf-8 -*-

from unittest import TestCase, main

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from tester.oracles import brute_power, brute_product
from tropical_spectra.core.matrix import (
    TropicalMatrix,
    mat_add,
    mat_mul,
    mat_vec,
    power,
    trace,
    vec_mat,
)
from tropical_spectra.core.scalar import TOP, ZERO
from tropical_spectra.exceptions import DimensionMismatchError, InvalidEntryError

entries = st.one_of(st.none(), st.integers(-9, 9))
square3 = st.lists(st.lists(entries, min_size=3, max_size=3), min_size=3, max_size=3)


class MatrixTestCase(TestCase):
    def setUp(self):
        self.a = TropicalMatrix.from_rows([[1, None], [0, 2]])

    def test_entries(self):
        self.assertEqual(2, self.a.n)
        self.assertEqual(3, self.a.nnz)
        self.assertEqual(ZERO, self.a[(0, 1)])
        self.assertEqual(2.0, self.a[(1, 1)])
        expected = [(0, 0, 1.0), (1, 0, 0.0), (1, 1, 2.0)]
        self.assertListEqual(expected, list(self.a.arcs()))

    def test_product(self):
        product = mat_mul(self.a, self.a)
        self.assertListEqual([[2.0, ZERO], [2.0, 4.0]], product.dense.tolist())
        self.assertEqual(product, self.a @ self.a)

    def test_vectors(self):
        self.assertListEqual([1.0, 2.0], mat_vec(self.a, [0.0, 0.0]).tolist())
        self.assertListEqual([1.0, 2.0], vec_mat([0.0, 0.0], self.a).tolist())
        self.assertListEqual([1.0, 0.0], mat_vec(self.a, [0.0, ZERO]).tolist())
        self.assertListEqual([0.0, 2.0], vec_mat([ZERO, 0.0], self.a).tolist())

    def test_sum_and_trace(self):
        other = TropicalMatrix.from_rows([[0, 5], [None, None]])
        total = mat_add(self.a, other)
        self.assertListEqual([[1.0, 5.0], [0.0, 2.0]], total.dense.tolist())
        self.assertEqual(total, self.a | other)
        self.assertEqual(2.0, trace(self.a))

    def test_power(self):
        identity = power(self.a, 0)
        self.assertListEqual([[0.0, ZERO], [ZERO, 0.0]], identity.dense.tolist())
        self.assertEqual(mat_mul(mat_mul(self.a, self.a), self.a), power(self.a, 3))
        self.assertListEqual(brute_power(self.a, 5), power(self.a, 5).dense.tolist())
        with self.assertRaises(ValueError):
            power(self.a, -1)

    def test_shift_restrict_transpose(self):
        shifted = self.a.shift(-1).dense.tolist()
        self.assertListEqual([[0.0, ZERO], [-1.0, 1.0]], shifted)
        self.assertEqual(0, self.a.shift(ZERO).nnz)
        self.assertListEqual([[2.0]], self.a.restrict([1]).dense.tolist())
        transposed = self.a.transpose().dense.tolist()
        self.assertListEqual([[1.0, 0.0], [ZERO, 2.0]], transposed)

    def test_invalid(self):
        with self.assertRaises(InvalidEntryError):
            TropicalMatrix(2, {(0, 0): TOP})
        with self.assertRaises(InvalidEntryError):
            TropicalMatrix(2, {(0, 2): 1.0})
        with self.assertRaises(InvalidEntryError):
            TropicalMatrix(0)
        with self.assertRaises(InvalidEntryError):
            TropicalMatrix.from_dense(np.zeros((2, 3)))
        with self.assertRaises(DimensionMismatchError):
            mat_mul(self.a, TropicalMatrix.zero(3))
        extended = TropicalMatrix(2, {(0, 0): TOP}, extended=True)
        self.assertTrue(extended.extended)
        self.assertFalse(extended.is_finite_valued())

    @settings(max_examples=50)
    @given(square3, square3, square3)
    def test_product_is_associative(self, x, y, z):
        a = TropicalMatrix.from_rows(x)
        b = TropicalMatrix.from_rows(y)
        c = TropicalMatrix.from_rows(z)
        self.assertEqual(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c)))
        expected = brute_product(a.dense.tolist(), b.dense.tolist())
        self.assertListEqual(expected, mat_mul(a, b).dense.tolist())


if __name__ == "__main__":
    main()
