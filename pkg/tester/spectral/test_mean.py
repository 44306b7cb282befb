# -*- coding: utf-8 -*-

from unittest import TestCase, main

import numpy as np

from tester.oracles import circuit_mean
from tester.spectral.examples import chain, three_cycle, two_loops
from tropical_spectra.core.graph import scc
from tropical_spectra.core.matrix import TropicalMatrix
from tropical_spectra.core.scalar import ZERO
from tropical_spectra.random.matrices import irreducible_suite, make_rng, random_matrix
from tropical_spectra.spectral.mean import (
    class_cycle_means,
    karp_cycle_mean,
    max_cycle_mean,
)


class MeanTestCase(TestCase):
    def test_two_cycle(self):
        a = TropicalMatrix.from_rows([[1.5, 1], [3, None]])
        self.assertEqual(2.0, max_cycle_mean(a))

    def test_examples(self):
        self.assertEqual(0.0, max_cycle_mean(two_loops()))
        self.assertEqual(2.0, max_cycle_mean(three_cycle(2.0)))
        self.assertEqual(ZERO, max_cycle_mean(chain()))

    def test_karp_block(self):
        block = np.array([[ZERO, 4.0], [-1.0, ZERO]])
        self.assertEqual(1.5, karp_cycle_mean(block))

    def test_class_means(self):
        a = TropicalMatrix(4, {(0, 0): 5.0, (0, 1): 0.0, (1, 2): -1.0, (2, 1): -3.0})
        means = class_cycle_means(a, scc(a))
        self.assertListEqual([((0,), 5.0), ((1, 2), -2.0)], means)
        self.assertEqual(5.0, max_cycle_mean(a))

    def test_random_against_circuits(self):
        for a in irreducible_suite(7, 40, n_range=(1, 6)):
            self.assertAlmostEqual(circuit_mean(a), max_cycle_mean(a), places=9)

        rng = make_rng(11)
        for _ in range(40):
            a = random_matrix(rng, 5, density=0.3)
            self.assertAlmostEqual(circuit_mean(a), max_cycle_mean(a), places=9)


if __name__ == "__main__":
    main()
