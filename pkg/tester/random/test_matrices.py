# -*- coding: utf-8 -*-

from unittest import TestCase, main

import numpy as np

from tropical_spectra.core.graph import is_irreducible
from tropical_spectra.core.scalar import ZERO
from tropical_spectra.exceptions import SearchCapReachedError
from tropical_spectra.random.matrices import (
    irreducible_suite,
    make_rng,
    random_irreducible,
    random_matrix,
    random_vector,
)


class MatricesTestCase(TestCase):
    def test_reproducible(self):
        first = random_matrix(make_rng(3), 5)
        second = random_matrix(make_rng(3), 5)
        self.assertTrue(np.array_equal(first.dense, second.dense))

    def test_density(self):
        rng = make_rng(1)
        self.assertEqual(0, random_matrix(rng, 4, density=0.0).nnz)

        full = random_matrix(rng, 4, low=-2, high=2, density=1.0)
        self.assertEqual(16, full.nnz)
        self.assertTrue(np.all(full.dense >= -2))
        self.assertTrue(np.all(full.dense <= 2))
        self.assertTrue(np.all(full.dense == np.round(full.dense)))

    def test_irreducible(self):
        rng = make_rng(2)
        for n in (1, 2, 5):
            a = random_irreducible(rng, n)
            self.assertEqual(n, a.n)
            self.assertTrue(is_irreducible(a))
        self.assertNotEqual(ZERO, random_irreducible(rng, 1)[(0, 0)])

        with self.assertRaises(SearchCapReachedError):
            random_irreducible(rng, 2, density=0.0, max_tries=5)

    def test_suite(self):
        suite = list(irreducible_suite(9, 12, n_range=(3, 4)))
        self.assertEqual(12, len(suite))
        self.assertTrue(all(3 <= a.n <= 4 for a in suite))
        self.assertTrue(all(is_irreducible(a) for a in suite))

        again = list(irreducible_suite(9, 12, n_range=(3, 4)))
        for a, b in zip(suite, again):
            self.assertTrue(np.array_equal(a.dense, b.dense))

    def test_vector(self):
        u = random_vector(make_rng(4), 6, low=0, high=3)
        self.assertTupleEqual((6,), u.shape)
        self.assertTrue(np.all((u >= 0) & (u <= 3)))


if __name__ == "__main__":
    main()
