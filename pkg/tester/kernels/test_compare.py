# -*- coding: utf-8 -*-

from unittest import TestCase, main

from tropical_spectra.kernels.catalog import (
    BirthDeathKernel,
    LadderKernel,
    OscillatingKernel,
    Tight1Kernel,
    Tight2Kernel,
)
from tropical_spectra.kernels.compare import closed_form_gaps
from tropical_spectra.kernels.window import truncate
from tropical_spectra.spectral.closure import kleene_star


class CompareTestCase(TestCase):
    def test_ladder(self):
        gaps = closed_form_gaps(LadderKernel(), 30)
        values = gaps.as_dict()
        self.assertEqual(15, gaps.inner)
        self.assertEqual(15, gaps.closure_block)
        self.assertAlmostEqual(1.0 / 30.0, values["plus"])
        self.assertAlmostEqual(1.0 / 30.0, values["star"])
        self.assertAlmostEqual(1.0 / 930.0, values["rho"])
        self.assertFalse(gaps.within())

    def test_tight1(self):
        gaps = closed_form_gaps(Tight1Kernel(), 40)
        expected = ["rho", "plus", "star", "eigenvector", "martin", "boundary"]
        self.assertListEqual(expected, [name for name, _ in gaps.gaps])
        self.assertEqual(0.0, gaps.lam)
        self.assertTrue(gaps.within())

    def test_tight1_full_window(self):
        gaps = closed_form_gaps(Tight1Kernel(), 50)
        self.assertEqual(50, gaps.closure_block)
        self.assertEqual(0.0, gaps.as_dict()["plus"])
        self.assertEqual(0.0, gaps.as_dict()["star"])

        plus = kleene_star(truncate(Tight1Kernel(), 50).matrix).plus.dense
        self.assertTupleEqual((51, 51), plus.shape)
        for i in range(51):
            for j in range(51):
                self.assertEqual(Tight1Kernel.plus(i, j), plus[i, j], (i, j))

    def test_tight2_frontier(self):
        gaps = closed_form_gaps(Tight2Kernel(), 50)
        self.assertEqual(49, gaps.closure_block)
        self.assertLessEqual(gaps.as_dict()["plus"], 1e-9)
        self.assertLessEqual(gaps.as_dict()["star"], 1e-9)

        plus = kleene_star(truncate(Tight2Kernel(), 50).matrix).plus.dense
        self.assertAlmostEqual(-1.0 / 50.0, plus[50, 50])
        self.assertNotAlmostEqual(Tight2Kernel.plus(50, 50), plus[50, 50])

    def test_birth(self):
        gaps = closed_form_gaps(BirthDeathKernel(p=-1.0, q=-3.0), 60)
        self.assertEqual(-2.0, gaps.lam)
        self.assertTrue(gaps.within())

    def test_oscillating(self):
        gaps = closed_form_gaps(OscillatingKernel(), 60)
        self.assertListEqual(["rho", "power"], [name for name, _ in gaps.gaps])
        self.assertTrue(gaps.within())
        self.assertTrue(gaps.within(skip=("power",)))


if __name__ == "__main__":
    main()
