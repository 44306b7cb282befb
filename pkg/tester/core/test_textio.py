# -*- coding: utf-8 -*-

from pathlib import Path
from tempfile import TemporaryDirectory
from unittest import TestCase, main

from tropical_spectra.core.matrix import TropicalMatrix
from tropical_spectra.core.scalar import TOP, ZERO
from tropical_spectra.core.textio import (
    format_matrix,
    format_vector,
    parse_matrix,
    parse_vector,
    read_matrix,
    read_vector,
    write_matrix,
    write_vector,
)
from tropical_spectra.exceptions import MatrixFormatError
from tropical_spectra.spectral.closure import kleene_star


class TextioTestCase(TestCase):
    def test_parse_matrix(self):
        text = "# example\ntropical 2\n0 0 1\n1 0 -2.5  # comment\n\n0 1 -inf\n"
        matrix = parse_matrix(text)
        self.assertEqual(2, matrix.n)
        self.assertListEqual([[1.0, ZERO], [-2.5, ZERO]], matrix.dense.tolist())

    def test_parse_errors(self):
        with self.assertRaises(MatrixFormatError):
            parse_matrix("")
        with self.assertRaises(MatrixFormatError):
            parse_matrix("matrix 2\n")
        with self.assertRaises(MatrixFormatError):
            parse_matrix("tropical 0\n")
        with self.assertRaises(MatrixFormatError):
            parse_matrix("tropical 2\n0 2 1\n")
        with self.assertRaises(MatrixFormatError):
            parse_matrix("tropical 2\n0 0 1\n0 0 2\n")
        with self.assertRaises(MatrixFormatError):
            parse_matrix("tropical 2\n0 0\n")
        with self.assertRaises(MatrixFormatError) as context:
            parse_matrix("tropical 2\n\n0 0 +inf\n")
        self.assertEqual(3, context.exception.line_number)
        extended = parse_matrix("tropical 1\n0 0 +inf\n", extended=True)
        self.assertEqual(TOP, extended[(0, 0)])

    def test_format_matrix(self):
        matrix = TropicalMatrix.from_rows([[1, None], [-2.5, 0]])
        self.assertEqual(
            "# note\ntropical 2\n0 0 1\n1 0 -2.5\n1 1 0\n",
            format_matrix(matrix, "note"),
        )
        self.assertEqual(matrix, parse_matrix(format_matrix(matrix)))

    def test_closure_round_trip(self):
        finite = kleene_star(TropicalMatrix.from_rows([[-1, 0], [-2, None]])).star
        self.assertTrue(finite.is_finite_valued())
        self.assertEqual(finite, parse_matrix(format_matrix(finite)))

        diverged = kleene_star(TropicalMatrix.from_rows([[1, None], [0, None]])).star
        self.assertFalse(diverged.is_finite_valued())
        text = format_matrix(diverged)
        with self.assertRaises(MatrixFormatError):
            parse_matrix(text)
        self.assertEqual(diverged, parse_matrix(text, extended=True))

    def test_vector(self):
        vector = parse_vector("vec 3\n0 1\n2 -inf\n")
        self.assertListEqual([1.0, ZERO, ZERO], vector.tolist())
        self.assertEqual("vec 2\n1 -3\n", format_vector([ZERO, -3.0]))
        with self.assertRaises(MatrixFormatError):
            parse_vector("vec 2\n0 1\n0 2\n")

    def test_files(self):
        matrix = TropicalMatrix.from_rows([[3, -7], [None, 9]])
        with TemporaryDirectory() as tmpdir:
            matrix_path = Path(tmpdir) / "a.trop"
            write_matrix(matrix_path, matrix)
            self.assertEqual(matrix, read_matrix(matrix_path))

            vector_path = Path(tmpdir) / "u.vec"
            write_vector(vector_path, [0.0, -4.0], "column")
            self.assertListEqual([0.0, -4.0], read_vector(vector_path).tolist())


if __name__ == "__main__":
    main()
