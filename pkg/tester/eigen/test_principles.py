# -*- coding: utf-8 -*-

from unittest import TestCase, main

from tester.spectral.examples import two_loops
from tropical_spectra.eigen.principles import (
    minimum_principle_check,
    restriction_proportionality_check,
)
from tropical_spectra.exceptions import NotSuperEigenvectorError


class PrinciplesTestCase(TestCase):
    def test_proportionality(self):
        verdicts = restriction_proportionality_check(
            two_loops(), [0, -2, -4], [-2, 0, 0]
        )
        self.assertEqual(2, len(verdicts))
        self.assertTupleEqual((0,), verdicts[0].members)
        self.assertEqual(2.0, verdicts[0].constant)
        self.assertEqual(-4.0, verdicts[1].constant)
        self.assertTrue(all(v.passed for v in verdicts))

    def test_minimum_principle(self):
        verdicts = minimum_principle_check(two_loops(), [0, 0, 0])
        self.assertListEqual([0, 2], [v.node for v in verdicts])
        self.assertTrue(all(v.passed for v in verdicts))

    def test_requires_super_eigenvector(self):
        with self.assertRaises(NotSuperEigenvectorError):
            minimum_principle_check(two_loops(), [0, -5, 0])
        with self.assertRaises(NotSuperEigenvectorError):
            restriction_proportionality_check(two_loops(), [0, 0, 0], [0, -5, 0])


if __name__ == "__main__":
    main()
