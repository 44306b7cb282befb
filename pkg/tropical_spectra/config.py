# -*- coding: utf-8 -*-

from dataclasses import dataclass
from functools import lru_cache
from math import isinf
from os import environ
from typing import (
    Any,
    Callable,
    Dict,
    Final,
    Optional,
    Sequence,
    Tuple,
    TypeVar,
    Union,
    overload,
)

ENV_PREFIX: Final[str] = "TROPICAL_"

DEFAULT_EPS: Final[float] = 1e-9
DEFAULT_MARGINAL_FACTOR: Final[float] = 10.0

TRUE_LOWERS: Final[Sequence[str]] = ("y", "yes", "true", "on", "1")
FALSE_LOWERS: Final[Sequence[str]] = ("n", "no", "false", "off", "0")

DefaultT = TypeVar("DefaultT", str, bool, int, float)


def string_to_boolean(value: str) -> bool:
    v = value.lower()
    if v in TRUE_LOWERS:
        return True
    elif v in FALSE_LOWERS:
        return False
    raise ValueError(f"could not convert string to bool: '{value}'")


ENVIRON_CONVERTERS: Final[Dict[type, Callable[[str], Any]]] = {
    str: str,
    bool: string_to_boolean,
    int: int,
    float: float,
}


# fmt: off
@overload
def get_typed_environ_value(key: str) -> Optional[str]: ...
@overload
def get_typed_environ_value(key: str, default: str) -> str: ...
@overload
def get_typed_environ_value(key: str, default: bool) -> bool: ...
@overload
def get_typed_environ_value(key: str, default: int) -> int: ...
@overload
def get_typed_environ_value(key: str, default: float) -> float: ...
# fmt: on


def get_typed_environ_value(
    key: str,
    default: Optional[DefaultT] = None,
) -> Optional[Union[str, bool, int, float]]:
    """
    Read ``TROPICAL_<key>`` and convert it to the type of ``default``.
    """

    name = ENV_PREFIX + key
    value = environ.get(name)
    if value is None or default is None:
        return default if value is None else value

    converter = ENVIRON_CONVERTERS.get(type(default))
    if converter is None:
        raise TypeError(f"Unsupported default type: {type(default).__name__}")
    try:
        return converter(value)
    except ValueError as e:
        raise ValueError(f"Invalid {name} value: {e}") from e


@dataclass(frozen=True)
class Tolerance:
    """
    Equality policy for tropical scalars derived from float arithmetic.

    A decision value ``d`` answers an "equals one" test (``d`` is zero in the
    usual notation). It is accepted when ``|d| <= eps`` and reported as marginal
    when ``eps < |d| <= marginal_factor * eps``.
    """

    eps: float = DEFAULT_EPS
    marginal_factor: float = DEFAULT_MARGINAL_FACTOR

    def __post_init__(self):
        if not self.eps >= 0.0:
            raise ValueError(f"eps must be nonnegative: {self.eps}")
        if not self.marginal_factor >= 1.0:
            raise ValueError(f"marginal factor must be >= 1: {self.marginal_factor}")

    @classmethod
    def from_environ(cls, eps: Optional[float] = None):
        """
        ``TROPICAL_EPS`` and ``TROPICAL_MARGINAL_FACTOR``; an explicit ``eps``
        wins over the environment.
        """

        if eps is None:
            eps = get_typed_environ_value("EPS", DEFAULT_EPS)
        factor = get_typed_environ_value("MARGINAL_FACTOR", DEFAULT_MARGINAL_FACTOR)
        return cls(eps=float(eps), marginal_factor=factor)

    @property
    def marginal_eps(self) -> float:
        return self.eps * self.marginal_factor

    def equal(self, a: float, b: float) -> bool:
        if isinf(a) or isinf(b):
            return a == b
        return abs(a - b) <= self.eps

    def is_one(self, d: float) -> bool:
        return not isinf(d) and abs(d) <= self.eps

    def classify(self, d: float) -> Tuple[bool, bool]:
        """
        Return ``(is_one, marginal)`` for the decision value ``d``.
        """

        if isinf(d):
            return False, False
        gap = abs(d)
        return gap <= self.eps, self.eps < gap <= self.marginal_eps

    def leq(self, a: float, b: float) -> bool:
        if a == b:
            return True
        return a <= b + self.eps


@lru_cache
def default_tolerance() -> Tolerance:
    return Tolerance.from_environ()


ToleranceLike = Union[Tolerance, float, None]


def as_tolerance(value: ToleranceLike = None) -> Tolerance:
    if value is None:
        return default_tolerance()
    if isinstance(value, Tolerance):
        return value
    return Tolerance(eps=float(value))
