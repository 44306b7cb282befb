# -*- coding: utf-8 -*-

from unittest import TestCase, main

from tester.spectral.examples import chain, three_cycle, two_loops
from tropical_spectra.asymptotics.representation import (
    CyclicRepresentation,
    verify_cyclic_representation,
)
from tropical_spectra.core.scalar import ZERO
from tropical_spectra.exceptions import AcyclicError


class RepresentationTestCase(TestCase):
    def test_cycle(self):
        representation = CyclicRepresentation(three_cycle(), 3)
        self.assertEqual(3, representation.sigma)

        reached = representation.check(0, 1, 10)
        self.assertTupleEqual((1, 0), (reached.q, reached.q_prime))
        self.assertEqual(0.0, reached.lhs)
        self.assertTrue(reached.passed)

        unreached = representation.check(0, 1, 11)
        self.assertEqual(ZERO, unreached.lhs)
        self.assertEqual(ZERO, unreached.rhs)
        self.assertTrue(unreached.passed)

    def test_split(self):
        representation = CyclicRepresentation(three_cycle(), 3)
        self.assertTrue(representation.check(0, 1, 10, q=0).passed)
        self.assertEqual(1, representation.check(0, 1, 10, q=0).q_prime)
        self.assertEqual(2, representation.check(0, 1, 10, q_prime=2).q)

    def test_invalid_split(self):
        representation = CyclicRepresentation(three_cycle(), 3)
        with self.assertRaises(ValueError):
            representation.check(0, 1, 10, q=1, q_prime=1)
        with self.assertRaises(ValueError):
            representation.check(0, 1, 10, q=3, q_prime=1)
        with self.assertRaises(ValueError):
            CyclicRepresentation(three_cycle(), 0)

    def test_two_loops(self):
        for n in range(4, 12):
            for i in range(3):
                for j in range(3):
                    check = verify_cyclic_representation(two_loops(), i, j, n, 1)
                    self.assertTrue(check.passed, f"({i}, {j}) at n={n}")

    def test_acyclic(self):
        with self.assertRaises(AcyclicError):
            CyclicRepresentation(chain(), 1)


if __name__ == "__main__":
    main()
