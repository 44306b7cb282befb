# -*- coding: utf-8 -*-

from unittest import TestCase, main

from tester.spectral.examples import chain, three_cycle, two_loops
from tropical_spectra.asymptotics.turnpike import optimal_path, turnpike_profile
from tropical_spectra.exceptions import NoPathError, NotIrreducibleError


class TurnpikeTestCase(TestCase):
    def test_optimal_path(self):
        path = optimal_path(two_loops(), 0, 2, 10)
        self.assertTupleEqual((0,) * 9 + (1, 2), path.nodes)
        self.assertEqual(10, path.length)
        self.assertEqual(-2.0, path.weight)
        self.assertEqual(1, path.noncritical_count)

    def test_explicit_critical_set(self):
        path = optimal_path(two_loops(), 0, 2, 10, critical=[0])
        self.assertEqual(2, path.noncritical_count)

    def test_acyclic(self):
        path = optimal_path(chain(), 0, 2, 2)
        self.assertTupleEqual((0, 1, 2), path.nodes)
        self.assertEqual(3, path.noncritical_count)

    def test_no_path(self):
        with self.assertRaises(NoPathError):
            optimal_path(three_cycle(), 0, 0, 2)
        with self.assertRaises(ValueError):
            optimal_path(three_cycle(), 0, 0, -1)

    def test_profile(self):
        profile = turnpike_profile(two_loops(), 0, 2, [20, 5, 10])
        self.assertTupleEqual(((5, 1), (10, 1), (20, 1)), profile.counts)
        self.assertEqual(1, profile.max_noncritical)

    def test_profile_requires_irreducible(self):
        with self.assertRaises(NotIrreducibleError):
            turnpike_profile(chain(), 0, 2, [2])


if __name__ == "__main__":
    main()
