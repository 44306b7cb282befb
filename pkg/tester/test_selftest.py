# -*- coding: utf-8 -*-

from unittest import TestCase, main

from tester.spectral.examples import chain, three_cycle, two_loops
from tropical_spectra.config import default_tolerance
from tropical_spectra.exceptions import AcyclicError
from tropical_spectra.random.matrices import DEFAULT_SEED, make_rng
from tropical_spectra.selftest import (
    DEFAULT_SELFTEST_NMAX,
    REPRESENTATION_PAIRS,
    SELFTEST_CASES,
    decomposition_case,
    example_checks,
    representation_case,
    run_selftest,
)


class SelfTestTestCase(TestCase):
    def test_example_checks(self):
        tol = default_tolerance()
        for name, check in example_checks().items():
            with self.subTest(name=name):
                passed, detail = check(tol)
                self.assertTrue(passed, detail)

    def test_representation_case(self):
        pairs = [(0, 1), (2, 2), (1, 0)]
        passed, detail = representation_case(three_cycle(), pairs, 60)
        self.assertTrue(passed, detail)
        self.assertIn("pairs=3 sigma=3 failures=[]", detail)

    def test_decomposition_case(self):
        passed, detail = decomposition_case(two_loops(), make_rng(5))
        self.assertTrue(passed, detail)
        self.assertIn("spanned=[]", detail)

    def test_run_selftest(self):
        results = run_selftest(seed=3, cases=0)
        self.assertListEqual(list(example_checks()), [r.name for r in results])
        self.assertTrue(all(r.passed for r in results))

    def test_random_cases(self):
        results = run_selftest(seed=3, cases=2, n_max=50)
        names = [r.name for r in results]
        self.assertIn("random-1-decompose", names)
        self.assertEqual(len(example_checks()) + 4, len(results))

    def test_acceptance_suite(self):
        self.assertEqual(500, SELFTEST_CASES)
        self.assertEqual(20, REPRESENTATION_PAIRS)
        self.assertEqual(400, DEFAULT_SELFTEST_NMAX)

        results = run_selftest(seed=DEFAULT_SEED)
        self.assertEqual(len(example_checks()) + 2 * SELFTEST_CASES, len(results))
        failed = {r.name: r.detail for r in results if not r.passed}
        self.assertDictEqual(dict(), failed)

    def test_acyclic_case(self):
        with self.assertRaises(AcyclicError):
            representation_case(chain(), [(0, 1)], 10)


if __name__ == "__main__":
    main()
