# -*- coding: utf-8 -*-

from types import MappingProxyType
from typing import (
    Dict,
    Iterable,
    Iterator,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import networkx as nx
import numpy as np
from numpy.typing import ArrayLike, NDArray

from tropical_spectra.core.scalar import (
    TOP,
    ZERO,
    TropicalScalar,
    Vector,
    as_vector,
    check_scalar,
    otimes_array,
)
from tropical_spectra.exceptions import DimensionMismatchError, InvalidEntryError

Index = Tuple[int, int]
Arc = Tuple[int, int, float]
RowValue = Union[float, int, None]


class TropicalMatrix:
    """
    Square max-plus matrix over the dense node range ``[0, n)``.

    Only non-zero entries are stored; an absent pair is the semiring zero.
    Ordinary matrices hold finite entries only. Closures of matrices with
    supercritical circuits are ``extended`` and may also hold ``+inf``.
    """

    __slots__ = ("_n", "_entries", "_labels", "_extended", "_dense")

    def __init__(
        self,
        n: int,
        entries: Optional[Mapping[Index, float]] = None,
        labels: Optional[Sequence[str]] = None,
        extended: bool = False,
    ):
        if n < 1:
            raise InvalidEntryError(f"Matrix dimension must be positive: {n}")
        if labels is not None and len(labels) != n:
            raise DimensionMismatchError(n, len(labels), "labels")

        stored: Dict[Index, float] = dict()
        for (i, j), value in (entries or dict()).items():
            if not (0 <= i < n and 0 <= j < n):
                raise InvalidEntryError(f"Index ({i}, {j}) is out of range [0, {n})")
            value = check_scalar(value, extended)
            if value == ZERO:
                continue
            stored[(int(i), int(j))] = value

        self._n = n
        self._entries = stored
        self._labels = tuple(labels) if labels is not None else None
        self._extended = extended
        self._dense: Optional[NDArray[np.float64]] = None

    @classmethod
    def from_dense(
        cls,
        array: ArrayLike,
        labels: Optional[Sequence[str]] = None,
        extended: Optional[bool] = None,
    ):
        dense = np.array(array, dtype=np.float64)
        if dense.ndim != 2 or dense.shape[0] != dense.shape[1]:
            raise InvalidEntryError(f"Expected a square matrix, got {dense.shape}")
        if np.isnan(dense).any():
            raise InvalidEntryError("NaN is not a tropical scalar")
        if extended is None:
            extended = bool((dense == TOP).any())

        rows, cols = np.nonzero(dense != ZERO)
        entries = {(int(i), int(j)): float(dense[i, j]) for i, j in zip(rows, cols)}
        result = cls(dense.shape[0], entries, labels, extended)
        dense.flags.writeable = False
        result._dense = dense
        return result

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RowValue]], **kwargs):
        converted = [[ZERO if v is None else float(v) for v in row] for row in rows]
        return cls.from_dense(converted, **kwargs)

    @classmethod
    def identity(cls, n: int):
        return cls(n, {(i, i): 0.0 for i in range(n)})

    @classmethod
    def zero(cls, n: int):
        return cls(n)

    @property
    def n(self) -> int:
        return self._n

    @property
    def shape(self) -> Tuple[int, int]:
        return self._n, self._n

    @property
    def entries(self) -> Mapping[Index, float]:
        return MappingProxyType(self._entries)

    @property
    def labels(self) -> Optional[Tuple[str, ...]]:
        return self._labels

    @property
    def extended(self) -> bool:
        return self._extended

    @property
    def nnz(self) -> int:
        return len(self._entries)

    @property
    def dense(self) -> NDArray[np.float64]:
        if self._dense is None:
            dense = np.full((self._n, self._n), ZERO, dtype=np.float64)
            for (i, j), value in self._entries.items():
                dense[i, j] = value
            dense.flags.writeable = False
            self._dense = dense
        return self._dense

    def label(self, i: int) -> str:
        return self._labels[i] if self._labels is not None else str(i)

    def __getitem__(self, index: Index) -> TropicalScalar:
        return self._entries.get(index, ZERO)

    def arcs(self) -> Iterator[Arc]:
        for (i, j), value in sorted(self._entries.items()):
            yield i, j, value

    def column(self, j: int) -> Vector:
        return self.dense[:, j].copy()

    def diagonal(self) -> Vector:
        return np.diagonal(self.dense).copy()

    def digraph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self._n))
        graph.add_weighted_edges_from(self.arcs())
        return graph

    def transpose(self):
        return TropicalMatrix(
            self._n,
            {(j, i): w for (i, j), w in self._entries.items()},
            self._labels,
            self._extended,
        )

    def shift(self, scalar: float):
        """
        Multiply every entry by ``scalar``; ``A.shift(-rho)`` is the normalized matrix.
        """

        scalar = check_scalar(scalar)
        if scalar == ZERO:
            return TropicalMatrix(self._n, labels=self._labels)
        return TropicalMatrix(
            self._n,
            {k: (w if w == TOP else w + scalar) for k, w in self._entries.items()},
            self._labels,
            self._extended,
        )

    def restrict(self, nodes: Iterable[int]):
        """
        Principal submatrix on ``nodes``, reindexed in the given order.
        """

        order = list(nodes)
        position = {node: k for k, node in enumerate(order)}
        entries = {
            (position[i], position[j]): w
            for (i, j), w in self._entries.items()
            if i in position and j in position
        }
        labels = [self.label(node) for node in order] if self._labels else None
        return TropicalMatrix(len(order), entries, labels, self._extended)

    def is_finite_valued(self) -> bool:
        return not self._extended or all(w != TOP for w in self._entries.values())

    def __matmul__(self, other):
        if isinstance(other, TropicalMatrix):
            return mat_mul(self, other)
        return mat_vec(self, other)

    def __or__(self, other):
        return mat_add(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TropicalMatrix):
            return False
        return self._n == other._n and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self._n, tuple(sorted(self._entries.items()))))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}<n={self._n},nnz={self.nnz}>"


def _assert_same_dimension(a: TropicalMatrix, b: TropicalMatrix, op: str) -> None:
    if a.n != b.n:
        raise DimensionMismatchError(a.n, b.n, op)


def dense_mul(a: NDArray[np.float64], b: NDArray[np.float64]) -> NDArray[np.float64]:
    """
    Max-plus product of two dense square arrays.
    """

    if np.isposinf(a).any() or np.isposinf(b).any():
        products = otimes_array(a[:, :, None], b[None, :, :])
    else:
        products = a[:, :, None] + b[None, :, :]
    return products.max(axis=1)


def mat_mul(a: TropicalMatrix, b: TropicalMatrix) -> TropicalMatrix:
    _assert_same_dimension(a, b, "mat_mul")
    product = dense_mul(a.dense, b.dense)
    return TropicalMatrix.from_dense(
        product,
        labels=a.labels,
        extended=a.extended or b.extended,
    )


def mat_add(a: TropicalMatrix, b: TropicalMatrix) -> TropicalMatrix:
    _assert_same_dimension(a, b, "mat_add")
    return TropicalMatrix.from_dense(
        np.maximum(a.dense, b.dense),
        labels=a.labels,
        extended=a.extended or b.extended,
    )


def mat_vec(a: TropicalMatrix, u: ArrayLike) -> Vector:
    vector = as_vector(u)
    if vector.shape[0] != a.n:
        raise DimensionMismatchError(a.n, vector.shape[0], "mat_vec")
    return otimes_array(a.dense, vector[None, :]).max(axis=1)


def vec_mat(u: ArrayLike, a: TropicalMatrix) -> Vector:
    """
    Row vector times matrix, ``(uA)_j = max_i u_i + A_ij``.
    """

    vector = as_vector(u)
    if vector.shape[0] != a.n:
        raise DimensionMismatchError(a.n, vector.shape[0], "vec_mat")
    return otimes_array(vector[:, None], a.dense).max(axis=0)


def trace(a: TropicalMatrix) -> TropicalScalar:
    return float(np.max(a.diagonal()))


def power(a: TropicalMatrix, k: int) -> TropicalMatrix:
    if k < 0:
        raise ValueError(f"Negative exponent: {k}")

    result = np.full(a.shape, ZERO)
    np.fill_diagonal(result, 0.0)
    base = a.dense
    while k:
        if k & 1:
            result = dense_mul(result, base)
        k >>= 1
        if k:
            base = dense_mul(base, base)
    return TropicalMatrix.from_dense(result, labels=a.labels, extended=a.extended)
