# -*- coding: utf-8 -*-

from unittest import TestCase, main

from tester.spectral.examples import chain, three_cycle, two_loops
from tropical_spectra.asymptotics.transience import (
    INCONCLUSIVE,
    NOT_APPLICABLE,
    PASSED,
    subcritical_bound_check,
    transience_check,
)
from tropical_spectra.core.matrix import TropicalMatrix
from tropical_spectra.exceptions import AcyclicError


class TransienceTestCase(TestCase):
    def test_negative_loop(self):
        a = TropicalMatrix.from_rows([[-1]])
        report = transience_check(a, floor=-50.0, n_max=100)
        self.assertEqual(PASSED, report.verdict)
        self.assertEqual(-1.0, report.rho)
        self.assertEqual(50, report.last_passage)

    def test_short_horizon(self):
        a = TropicalMatrix.from_rows([[-1]])
        report = transience_check(a, floor=-50.0, n_max=20)
        self.assertEqual(INCONCLUSIVE, report.verdict)
        self.assertEqual(-1, report.last_passage)

    def test_acyclic(self):
        report = transience_check(chain(), n_max=10)
        self.assertEqual(PASSED, report.verdict)
        self.assertEqual(3, report.last_passage)
        self.assertEqual(1, int(report.first_passage[2, 0]))

    def test_critical(self):
        report = transience_check(three_cycle(), n_max=10)
        self.assertEqual(NOT_APPLICABLE, report.verdict)
        self.assertIsNone(report.first_passage)
        self.assertEqual(-1, report.last_passage)

    def test_subcritical_bound(self):
        bound = subcritical_bound_check(two_loops(), 20)
        self.assertTrue(bound.passed)
        self.assertIsNone(bound.first_violation)
        self.assertEqual(0.0, bound.worst_excess)

        scaled = subcritical_bound_check(three_cycle(-2.0), 12)
        self.assertTrue(scaled.passed)

    def test_subcritical_bound_acyclic(self):
        with self.assertRaises(AcyclicError):
            subcritical_bound_check(chain(), 5)


if __name__ == "__main__":
    main()
