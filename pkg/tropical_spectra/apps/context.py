# -*- coding: utf-8 -*-

from argparse import Namespace
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, List, Optional, Tuple

from tropical_spectra.arguments import PRINTER_ATTR_KEY, version
from tropical_spectra.config import Tolerance
from tropical_spectra.core.matrix import TropicalMatrix
from tropical_spectra.core.scalar import Vector
from tropical_spectra.core.textio import read_matrix, read_vector, write_matrix
from tropical_spectra.exceptions import UsageError
from tropical_spectra.kernels.base import LazyKernel
from tropical_spectra.kernels.catalog import load_kernel
from tropical_spectra.kernels.window import Window, truncate
from tropical_spectra.logging.logging import logger
from tropical_spectra.reports import Report


@dataclass(frozen=True)
class Source:
    matrix: TropicalMatrix
    label: str
    kernel: Optional[LazyKernel] = None
    window: Optional[Window] = None

    @property
    def exempt_rows(self) -> Tuple[int, ...]:
        return self.window.exempt_rows if self.window is not None else ()


class VerbArgs(Namespace):
    cmd: str
    input: Optional[str]
    kernel: Optional[str]
    window: int
    eps: float
    nmax: int
    seed: int
    format: str
    emit: Optional[str]
    assert_pass: bool

    @classmethod
    def from_namespace(cls, args: Namespace):
        return cls(**vars(args))

    def print(self, *args, **kwargs) -> Any:
        return getattr(self, PRINTER_ATTR_KEY, print)(*args, **kwargs)

    def assert_common_properties(self) -> None:
        assert isinstance(self.cmd, str)
        assert isinstance(self.eps, float)
        assert isinstance(self.nmax, int)
        assert isinstance(self.seed, int)
        assert isinstance(self.format, str)
        assert isinstance(self.assert_pass, bool)


class VerbContext:
    """
    Options of one verb, its tolerance and its lazily loaded source.
    """

    def __init__(self, args: Namespace):
        self._args = VerbArgs.from_namespace(args)
        self._args.assert_common_properties()
        if self._args.nmax < 1:
            raise UsageError(f"--nmax must be positive: {self._args.nmax}")
        try:
            self._tol = Tolerance.from_environ(eps=self._args.eps)
        except ValueError as e:
            raise UsageError(str(e)) from e
        self._source: Optional[Source] = None

    @property
    def args(self) -> VerbArgs:
        return self._args

    @property
    def tol(self) -> Tolerance:
        return self._tol

    @property
    def has_source(self) -> bool:
        path = getattr(self._args, "input", None)
        return bool(path or getattr(self._args, "kernel", None))

    @property
    def source(self) -> Source:
        if self._source is None:
            self._source = self._load_source()
        return self._source

    @property
    def matrix(self) -> TropicalMatrix:
        return self.source.matrix

    def require_kernel(self) -> LazyKernel:
        kernel = self.source.kernel
        if kernel is None:
            raise UsageError(f"'{self._args.cmd}' needs a catalog kernel (--kernel)")
        return kernel

    def _load_source(self) -> Source:
        path = getattr(self._args, "input", None)
        spec = getattr(self._args, "kernel", None)
        if path:
            matrix = read_matrix(path)
            logger.info(f"Loaded {matrix.n}x{matrix.n} matrix from '{path}'")
            return Source(matrix, f"file:{path}")
        if spec:
            if self._args.window < 0:
                raise UsageError(f"--window must be nonnegative: {self._args.window}")
            kernel = load_kernel(spec)
            window = truncate(kernel, self._args.window)
            logger.info(f"Truncated kernel '{kernel.spec_text()}' to N={window.n}")
            return Source(window.matrix, f"kernel:{kernel.spec_text()}", kernel, window)
        raise UsageError("Expected a source: --input or --kernel")

    def read_vector(self, path: Optional[str]) -> Vector:
        if not path:
            raise UsageError(f"'{self._args.cmd}' needs a vector (--vector)")
        return read_vector(path)

    def node(self, name: str) -> int:
        value = getattr(self._args, name)
        if not 0 <= value < self.matrix.n:
            raise UsageError(f"--{name} must lie in [0, {self.matrix.n}): {value}")
        return value

    def int_list(self, name: str, text: str) -> List[int]:
        try:
            values = [int(token) for token in text.split(",") if token.strip()]
        except ValueError as e:
            message = f"--{name} expects comma separated integers: '{text}'"
            raise UsageError(message) from e
        if not values:
            raise UsageError(f"--{name} is empty")
        return values

    def new_report(self) -> Report:
        window = None
        if self.has_source and self.source.window is not None:
            window = self.source.window.n
        return Report(
            version=version(),
            eps=self._tol.eps,
            window=window,
            nmax=self._args.nmax,
            seed=self._args.seed,
            source=self.source.label if self.has_source else "",
        )

    def emit(self, write: Callable[[str], Any]) -> Optional[str]:
        path = self._args.emit
        if not path:
            return None
        write(path)
        logger.info(f"Wrote '{path}'")
        return path

    def emit_matrix(self, matrix: TropicalMatrix, comment: str = "") -> Optional[str]:
        return self.emit(lambda path: write_matrix(path, matrix, comment))

    def emit_text(self, text: str) -> Optional[str]:
        return self.emit(lambda path: Path(path).write_text(text, encoding="utf-8"))
