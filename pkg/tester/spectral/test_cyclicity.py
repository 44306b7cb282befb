# -*- coding: utf-8 -*-

from unittest import TestCase, main

from tester.oracles import circuit_cyclicity
from tropical_spectra.random.matrices import irreducible_suite, make_rng, random_matrix
from tropical_spectra.spectral.cyclicity import cyclicity


class CyclicityTestCase(TestCase):
    def test_single_circuit(self):
        self.assertEqual(3, cyclicity(range(3), [(0, 1), (1, 2), (2, 0)]))
        self.assertEqual(1, cyclicity([5], [(5, 5)]))

    def test_lcm_of_components(self):
        arcs = [(0, 1), (1, 0), (2, 3), (3, 4), (4, 2)]
        self.assertEqual(6, cyclicity(range(5), arcs))

    def test_gcd_within_component(self):
        arcs = [(0, 1), (1, 0), (1, 2), (2, 0)]
        self.assertEqual(1, cyclicity(range(3), arcs))

    def test_acyclic(self):
        self.assertEqual(1, cyclicity(range(3), [(0, 1), (1, 2)]))
        self.assertEqual(1, cyclicity([], []))

    def test_sparse_labels(self):
        self.assertEqual(2, cyclicity([10, 20], [(10, 20), (20, 10)]))

    def test_random_against_circuits(self):
        for a in irreducible_suite(5, 30, n_range=(2, 6), density=0.35):
            arcs = [(i, j) for i, j, _ in a.arcs()]
            self.assertEqual(circuit_cyclicity(a), cyclicity(range(a.n), arcs))

        rng = make_rng(13)
        for _ in range(30):
            a = random_matrix(rng, 6, density=0.25)
            arcs = [(i, j) for i, j, _ in a.arcs()]
            self.assertEqual(circuit_cyclicity(a), cyclicity(range(a.n), arcs))


if __name__ == "__main__":
    main()
