# -*- coding: utf-8 -*-

import os
from contextlib import redirect_stdout
from io import StringIO
from tempfile import TemporaryDirectory
from typing import List
from unittest import TestCase, main

import numpy as np

from tester.spectral.examples import two_loops
from tropical_spectra.arguments import version
from tropical_spectra.core.matrix import TropicalMatrix
from tropical_spectra.core.textio import read_matrix, write_matrix, write_vector
from tropical_spectra.entrypoint import (
    EXIT_SUCCESS,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
)
from tropical_spectra.entrypoint import main as entrypoint_main
from tropical_spectra.spectral.closure import kleene_star


class EntrypointTestCase(TestCase):
    def setUp(self):
        self.lines: List[str] = list()

    def printer(self, *args, **kwargs) -> None:
        self.lines.append(" ".join(str(a) for a in args))

    def run_main(self, *cmdline: str) -> int:
        return entrypoint_main(["--no-dotenv", *cmdline], printer=self.printer)

    @property
    def output(self) -> str:
        return "".join(self.lines)

    def test_version(self):
        buffer = StringIO()
        code = -1
        with redirect_stdout(buffer):
            try:
                entrypoint_main(["--version"])
            except SystemExit as e:
                code = e.code
        self.assertEqual(0, code)
        self.assertEqual(version(), buffer.getvalue().strip())

    def test_no_command(self):
        self.assertEqual(EXIT_USAGE, self.run_main())

    def test_spectral_kernel(self):
        code = self.run_main("spectral", "--kernel", "tight1", "--window", "10")
        self.assertEqual(EXIT_SUCCESS, code)
        self.assertIn("source: kernel:tight1\n", self.output)
        self.assertIn("window: 10\n", self.output)
        self.assertIn("rho: 0\n", self.output)
        self.assertIn("sigma: 1\n", self.output)
        self.assertIn("dropped_arcs: 1\n", self.output)

    def test_machine_format(self):
        code = self.run_main("spectral", "-k", "tight1", "--format", "machine")
        self.assertEqual(EXIT_SUCCESS, code)
        self.assertIn("rho=0\n", self.output)

    def test_usage_errors(self):
        self.assertEqual(EXIT_USAGE, self.run_main("spectral", "-k", "nowhere"))
        self.assertEqual(EXIT_USAGE, self.run_main("spectral", "-k", "birth x=1"))
        code = self.run_main("spectral", "-k", "tight1", "--nmax", "0")
        self.assertEqual(EXIT_USAGE, code)
        code = self.run_main("powers", "-k", "tight1", "-w", "5", "--i", "6")
        self.assertEqual(EXIT_USAGE, code)

    def test_io_error(self):
        with TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, "missing.trop")
            self.assertEqual(EXIT_USAGE, self.run_main("spectral", "--input", path))

    def test_star_emit(self):
        a = two_loops()
        with TemporaryDirectory() as tmpdir:
            source = os.path.join(tmpdir, "a.trop")
            target = os.path.join(tmpdir, "star.trop")
            write_matrix(source, a)

            code = self.run_main("star", "--input", source, "--emit", target)
            self.assertEqual(EXIT_SUCCESS, code)
            self.assertIn("diverged: false\n", self.output)
            expected = kleene_star(a).star.dense
            self.assertTrue(np.array_equal(expected, read_matrix(target).dense))

    def test_star_emit_diverged(self):
        with TemporaryDirectory() as tmpdir:
            source = os.path.join(tmpdir, "a.trop")
            target = os.path.join(tmpdir, "star.trop")
            write_matrix(source, TropicalMatrix.from_rows([[1, None], [0, None]]))

            code = self.run_main("star", "--input", source, "--emit", target)
            self.assertEqual(EXIT_SUCCESS, code)
            self.assertIn("diverged: true\n", self.output)
            self.assertIn("emitted: false\n", self.output)
            self.assertFalse(os.path.exists(target))

    def test_coupling_normalization(self):
        cmdline = ("coupling", "-k", "tight2", "-w", "80", "--nmax", "60")
        self.assertEqual(EXIT_SUCCESS, self.run_main(*cmdline))
        self.assertIn("normalized: true\n", self.output)
        self.assertNotIn("shift: 0\n", self.output)

        self.lines.clear()
        self.assertEqual(EXIT_SUCCESS, self.run_main(*cmdline, "--raw"))
        self.assertIn("normalized: false\n", self.output)
        self.assertIn("shift: 0\n", self.output)
        self.assertIn("coupling: transient-to-zero\n", self.output)

    def test_eigen_assert(self):
        with TemporaryDirectory() as tmpdir:
            source = os.path.join(tmpdir, "a.trop")
            vector = os.path.join(tmpdir, "u.vec")
            write_matrix(source, two_loops())
            write_vector(vector, [0, -1, -4])

            code = self.run_main("eigen", "--input", source, "--vector", vector)
            self.assertEqual(EXIT_SUCCESS, code)
            self.assertIn("verdict: fail\n", self.output)

            code = self.run_main(
                "eigen", "--input", source, "--vector", vector, "--assert"
            )
            self.assertEqual(EXIT_VERIFICATION_FAILED, code)

            write_vector(vector, [0, -2, -4])
            code = self.run_main(
                "eigen", "--input", source, "--vector", vector, "--assert"
            )
            self.assertEqual(EXIT_SUCCESS, code)

    def test_example(self):
        self.assertEqual(EXIT_SUCCESS, self.run_main("example"))
        self.assertIn("tight1: ", self.output)

        self.lines.clear()
        code = self.run_main("example", "-k", "tight1", "-w", "40")
        self.assertEqual(EXIT_SUCCESS, code)
        self.assertIn("gap.plus: 0\n", self.output)
        self.assertIn("closure_block: 40\n", self.output)

    def test_selftest(self):
        self.assertEqual(EXIT_SUCCESS, self.run_main("selftest", "--cases", "0"))
        self.assertIn("verdict: pass\n", self.output)


if __name__ == "__main__":
    main()
