# -*- coding: utf-8 -*-

from unittest import TestCase, main

from tester.oracles import strict_reach
from tropical_spectra.core.graph import (
    is_irreducible,
    partition_digraph,
    reachability,
    scc,
)
from tropical_spectra.core.matrix import TropicalMatrix
from tropical_spectra.random.matrices import make_rng, random_matrix


class GraphTestCase(TestCase):
    def test_partition(self):
        partition = partition_digraph(3, [(0, 1), (1, 0), (1, 2)])
        self.assertTupleEqual(((0, 1), (2,)), partition.classes)
        self.assertTupleEqual((0, 0, 1), partition.class_of)
        self.assertTupleEqual((True, False), partition.cyclic)
        self.assertTupleEqual(((0, 1),), partition.condensation)
        self.assertListEqual([(0, 1)], partition.nontrivial())
        self.assertEqual(2, partition.count)
        self.assertListEqual([(0, 1)], list(partition.condensation_graph().edges()))

    def test_loop_makes_class_cyclic(self):
        partition = partition_digraph(2, [(1, 1)])
        self.assertTupleEqual((False, True), partition.cyclic)

    def test_irreducible(self):
        cycle = TropicalMatrix(3, {(0, 1): 0.0, (1, 2): 0.0, (2, 0): 0.0})
        self.assertTrue(is_irreducible(cycle))
        self.assertEqual(1, scc(cycle).count)

        path = TropicalMatrix(3, {(0, 1): 0.0, (1, 2): 0.0})
        self.assertFalse(is_irreducible(path))
        self.assertTrue(is_irreducible(TropicalMatrix(1)))

    def test_reachability(self):
        path = TropicalMatrix(3, {(0, 1): 0.0, (1, 2): 0.0})
        reach = reachability(path)
        self.assertListEqual(
            [[True, True, True], [False, True, True], [False, False, True]],
            reach.tolist(),
        )

    def test_classes_against_mutual_reachability(self):
        rng = make_rng(23)
        for index in range(500):
            n = int(rng.integers(1, 8, endpoint=True))
            a = random_matrix(rng, n, density=float(rng.uniform(0.05, 0.6)))
            reach = strict_reach(a)
            partition = scc(a)
            for u in range(n):
                cyclic = partition.cyclic[partition.class_of[u]]
                self.assertEqual(reach[u][u], cyclic, (index, u))
                for v in range(n):
                    mutual = u == v or (reach[u][v] and reach[v][u])
                    same = partition.class_of[u] == partition.class_of[v]
                    self.assertEqual(mutual, same, (index, u, v))
            self.assertEqual(len(set(partition.class_of)) == 1, is_irreducible(a))


if __name__ == "__main__":
    main()
