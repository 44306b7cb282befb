# -*- coding: utf-8 -*-

from io import StringIO
from logging import DEBUG, INFO
from unittest import TestCase, main

from tropical_spectra.logging.colored_formatter import stream_supports_colors
from tropical_spectra.logging.logging import SEVERITY_NAME_OFF, convert_level_number


class LoggingTestCase(TestCase):
    def test_convert_level_number(self):
        self.assertEqual(DEBUG, convert_level_number(None))
        self.assertEqual(INFO, convert_level_number("INFO"))
        self.assertEqual(INFO, convert_level_number("20"))
        self.assertLess(50, convert_level_number(SEVERITY_NAME_OFF))
        with self.assertRaises(ValueError):
            convert_level_number("loud")

    def test_piped_stream_has_no_colors(self):
        self.assertFalse(stream_supports_colors(StringIO()))


if __name__ == "__main__":
    main()
