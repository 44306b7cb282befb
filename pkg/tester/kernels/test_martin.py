# -*- coding: utf-8 -*-

from unittest import TestCase, main

import numpy as np

from tester.spectral.examples import two_loops
from tropical_spectra.core.matrix import TropicalMatrix
from tropical_spectra.exceptions import InvalidLambdaError, UnreachableBasepointError
from tropical_spectra.kernels.catalog import BirthDeathKernel, Tight2Kernel
from tropical_spectra.kernels.martin import (
    boundary_column,
    boundary_column_probe,
    martin_kernel,
    martin_matrix,
)


class MartinTestCase(TestCase):
    def test_matrix(self):
        martin = martin_matrix(two_loops(), 0.0)
        self.assertListEqual([0, -2, -2], martin.pi.tolist())
        expected = [[0, 0, 0], [-2, 2, 2], [-4, 0, 2]]
        self.assertListEqual(expected, martin.values.tolist())
        self.assertListEqual([0, 2, 0], martin.column(1).tolist())
        self.assertEqual(0.0, martin.bound_excess())

    def test_matrix_errors(self):
        with self.assertRaises(InvalidLambdaError):
            martin_matrix(two_loops(), -1.0)

        a = TropicalMatrix.from_rows([[0, None], [0, 0]])
        with self.assertRaises(UnreachableBasepointError):
            martin_matrix(a, 0.0, basepoint=0)

    def test_birth_kernel(self):
        kernel = BirthDeathKernel(p=-1.0, q=-3.0)
        martin = martin_kernel(kernel, -1.0, 0, 50)
        ref = np.array(
            [[kernel.martin(-1.0, i, j) for j in range(21)] for i in range(21)]
        )
        self.assertTrue(np.allclose(ref, martin.values[:21, :21], atol=1e-9))

    def test_boundary_probe(self):
        probe = boundary_column_probe(Tight2Kernel(), 0.0, 0, 3, (10, 20, 30), 40)
        self.assertTrue(probe.stabilized)
        self.assertEqual(0.0, probe.limit)
        self.assertListEqual([10, 20, 30], [j for j, _ in probe.samples])

    def test_boundary_column(self):
        kernel = Tight2Kernel()
        column = boundary_column(kernel, 0.0, 0, (10, 20, 30), 40)
        self.assertTrue(column.stabilized)
        self.assertEqual(10, len(column.probes))
        self.assertListEqual([0.0] * 10, column.vector().tolist())
        self.assertTrue(column.check_eigen(kernel).passed)

    def test_invalid_columns(self):
        with self.assertRaises(ValueError):
            boundary_column(Tight2Kernel(), 0.0, 0, (20, 10), 40)
        with self.assertRaises(ValueError):
            boundary_column(Tight2Kernel(), 0.0, 0, (10, 50), 40)
        with self.assertRaises(ValueError):
            boundary_column(Tight2Kernel(), 0.0, 0, (), 40)


if __name__ == "__main__":
    main()
