# -*- coding: utf-8 -*-

from unittest import TestCase, main

from tropical_spectra.exceptions import KernelSpecError
from tropical_spectra.kernels.spec import KernelSpec


class KernelSpecTestCase(TestCase):
    def test_from_text(self):
        spec = KernelSpec.from_text("birth  p=-1 q=-3")
        self.assertEqual("birth", spec.name)
        self.assertDictEqual({"p": "-1", "q": "-3"}, spec.kwargs)
        self.assertEqual("birth p=-1 q=-3", str(spec))
        self.assertEqual(KernelSpec("birth", {"p": "-1", "q": "-3"}), spec)
        self.assertNotEqual(KernelSpec("birth"), spec)

    def test_name_only(self):
        spec = KernelSpec.from_text("tight1")
        self.assertEqual("tight1", str(spec))
        self.assertDictEqual({}, spec.kwargs)

    def test_invalid_text(self):
        for text in ("", "   ", "p=1", "birth p", "birth =1", "birth p=1 p=2"):
            with self.subTest(text=text):
                with self.assertRaises(KernelSpecError):
                    KernelSpec.from_text(text)

    def test_get(self):
        spec = KernelSpec.from_text("birth p=-2 flag=true n=4")
        self.assertEqual(-2.0, spec.get("p", -1.0))
        self.assertEqual(-3.0, spec.get("q", -3.0))
        self.assertTrue(spec.get("flag", False))
        self.assertEqual(4, spec.get("n", 0))
        self.assertEqual("-2", spec.get("p"))
        self.assertIsNone(spec.get("q"))

        with self.assertRaises(KernelSpecError):
            KernelSpec.from_text("birth p=abc").get("p", -1.0)

    def test_require_known(self):
        spec = KernelSpec.from_text("birth p=-1 r=2")
        spec.require_known("p", "r")
        with self.assertRaises(KernelSpecError):
            spec.require_known("p", "q")


if __name__ == "__main__":
    main()
