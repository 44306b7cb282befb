# -*- coding: utf-8 -*-

import os
from unittest import TestCase, main

from tropical_spectra.config import (
    DEFAULT_EPS,
    ENV_PREFIX,
    Tolerance,
    as_tolerance,
    get_typed_environ_value,
    string_to_boolean,
)

TEST_KEY = "TEST_CONFIG_VALUE"


class ConfigTestCase(TestCase):
    def tearDown(self):
        os.environ.pop(ENV_PREFIX + TEST_KEY, None)

    def test_string_to_boolean(self):
        self.assertTrue(string_to_boolean("Yes"))
        self.assertFalse(string_to_boolean("off"))
        with self.assertRaises(ValueError):
            string_to_boolean("maybe")

    def test_typed_environ_value(self):
        self.assertIsNone(get_typed_environ_value(TEST_KEY))
        self.assertEqual(7, get_typed_environ_value(TEST_KEY, 7))

        os.environ[ENV_PREFIX + TEST_KEY] = "1"
        self.assertEqual("1", get_typed_environ_value(TEST_KEY))
        self.assertTrue(get_typed_environ_value(TEST_KEY, False))
        self.assertEqual(1, get_typed_environ_value(TEST_KEY, 0))
        self.assertEqual(1.0, get_typed_environ_value(TEST_KEY, 0.5))

    def test_invalid_environ_value(self):
        os.environ[ENV_PREFIX + TEST_KEY] = "many"
        with self.assertRaises(ValueError):
            get_typed_environ_value(TEST_KEY, 3)

    def test_tolerance_from_environ(self):
        os.environ[ENV_PREFIX + "MARGINAL_FACTOR"] = "4"
        try:
            tol = Tolerance.from_environ(eps=1e-6)
        finally:
            os.environ.pop(ENV_PREFIX + "MARGINAL_FACTOR")
        self.assertEqual(1e-6, tol.eps)
        self.assertEqual(4.0, tol.marginal_factor)
        self.assertTupleEqual((False, True), tol.classify(3e-6))
        self.assertTupleEqual((False, False), tol.classify(5e-6))

        os.environ[ENV_PREFIX + "EPS"] = "1e-3"
        try:
            self.assertEqual(1e-3, Tolerance.from_environ().eps)
        finally:
            os.environ.pop(ENV_PREFIX + "EPS")

    def test_tolerance(self):
        tol = Tolerance()
        self.assertEqual(DEFAULT_EPS, tol.eps)
        self.assertTupleEqual((True, False), tol.classify(1e-10))
        self.assertTupleEqual((False, True), tol.classify(5e-9))
        self.assertTupleEqual((False, False), tol.classify(1e-7))
        self.assertTupleEqual((False, False), tol.classify(float("-inf")))
        self.assertTrue(tol.is_one(-1e-10))
        self.assertTrue(tol.equal(float("-inf"), float("-inf")))
        self.assertFalse(tol.equal(float("-inf"), 0.0))
        self.assertTrue(tol.leq(1.0 + 1e-10, 1.0))
        self.assertFalse(tol.leq(1.1, 1.0))

    def test_invalid_tolerance(self):
        with self.assertRaises(ValueError):
            Tolerance(eps=-1.0)
        with self.assertRaises(ValueError):
            Tolerance(marginal_factor=0.5)

    def test_as_tolerance(self):
        tol = Tolerance(eps=1e-6)
        self.assertIs(tol, as_tolerance(tol))
        self.assertEqual(1e-3, as_tolerance(1e-3).eps)
        self.assertEqual(DEFAULT_EPS, as_tolerance(None).eps)


if __name__ == "__main__":
    main()
