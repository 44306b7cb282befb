# -*- coding: utf-8 -*-

from typing import Dict, Final, Optional, TypeVar, Union, overload

from tropical_spectra.config import string_to_boolean
from tropical_spectra.exceptions import KernelSpecError

ARGUMENT_SEPERATOR: Final[str] = " "
KV_SEPERATOR: Final[str] = "="

_DefaultT = TypeVar("_DefaultT", str, bool, int, float)


class KernelSpec:
    """
    A catalog name followed by ``key=value`` parameters, e.g. ``birth p=-1 q=-3``.
    """

    name: str
    kwargs: Dict[str, str]

    def __init__(self, name: str, kwargs: Optional[Dict[str, str]] = None):
        self.name = name
        self.kwargs = kwargs if kwargs else dict()

    @classmethod
    def from_text(cls, text: str, kv_seperator=KV_SEPERATOR):
        tokens = text.split()
        if not tokens:
            raise KernelSpecError("Empty kernel specification")

        name = tokens[0]
        if kv_seperator in name:
            raise KernelSpecError(f"Kernel name expected before parameters: '{name}'")

        kwargs = dict()
        for arg in tokens[1:]:
            kv = arg.split(kv_seperator, 1)
            if len(kv) != 2 or not kv[0]:
                raise KernelSpecError(f"Expected 'key{kv_seperator}value': '{arg}'")
            key, value = kv
            if key in kwargs:
                raise KernelSpecError(f"Duplicate kernel parameter '{key}'")
            kwargs[key] = value
        return cls(name, kwargs)

    def __str__(self):
        params = ARGUMENT_SEPERATOR.join(
            f"{k}{KV_SEPERATOR}{v}" for k, v in self.kwargs.items()
        )
        return f"{self.name} {params}" if params else self.name

    def __repr__(self):
        return f"{self.__class__.__name__}<name={self.name},kwargs={self.kwargs}>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, type(self)):
            return False
        return other.name == self.name and other.kwargs == self.kwargs

    def require_known(self, *keys: str) -> None:
        unknown = sorted(set(self.kwargs) - set(keys))
        if unknown:
            raise KernelSpecError(f"Unknown parameters for '{self.name}': {unknown}")

    # fmt: off
    @overload
    def get(self, key: str) -> Optional[str]: ...
    @overload
    def get(self, key: str, default: str) -> str: ...
    @overload
    def get(self, key: str, default: bool) -> bool: ...
    @overload
    def get(self, key: str, default: int) -> int: ...
    @overload
    def get(self, key: str, default: float) -> float: ...
    # fmt: on

    def get(
        self,
        key: str,
        default: Optional[_DefaultT] = None,
    ) -> Optional[Union[str, bool, int, float]]:
        if default is None:
            return self.kwargs.get(key)
        value = self.kwargs.get(key, str(default))
        try:
            if isinstance(default, str):
                return value
            elif isinstance(default, bool):
                return string_to_boolean(value)
            elif isinstance(default, int):
                return int(value)
            elif isinstance(default, float):
                return float(value)
        except ValueError as e:
            raise KernelSpecError(f"Invalid value for '{key}': {e}")
        raise TypeError(f"Unsupported default type: {type(default).__name__}")
