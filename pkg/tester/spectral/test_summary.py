# -*- coding: utf-8 -*-

from unittest import TestCase, main

from tester.spectral.examples import chain, three_cycle, two_loops
from tropical_spectra.core.scalar import ZERO
from tropical_spectra.spectral.summary import spectral_summary


class SummaryTestCase(TestCase):
    def test_cycle(self):
        summary = spectral_summary(three_cycle())
        self.assertEqual(0.0, summary.rho)
        self.assertTupleEqual((0, 1, 2), summary.critical_nodes)
        self.assertTupleEqual(((0, 1, 2),), summary.critical_classes)
        self.assertEqual(3, summary.gamma)
        self.assertEqual(3, summary.sigma)
        self.assertTrue(summary.has_critical_nodes)

    def test_two_loops(self):
        summary = spectral_summary(two_loops())
        self.assertEqual(0.0, summary.rho)
        self.assertTupleEqual((0, 2), summary.critical_nodes)
        self.assertTupleEqual(((0,), (2,)), summary.critical_classes)
        self.assertEqual(1, summary.gamma)
        self.assertEqual(1, summary.sigma)

    def test_acyclic(self):
        summary = spectral_summary(chain())
        self.assertEqual(ZERO, summary.rho)
        self.assertFalse(summary.has_critical_nodes)
        self.assertEqual(1, summary.sigma)


if __name__ == "__main__":
    main()
