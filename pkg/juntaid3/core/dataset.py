# The MIT License (MIT)
# Copyright (c) 2024-present juntaid3 developers
#
# Permission is hereby granted, free of charge, to any person obtaining a
# copy of this software and associated documentation files (the "Software"),
# to deal in the Software without restriction, including without limitation
# the rights to use, copy, modify, merge, publish, distribute, sublicense,
# and/or sell copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS
# OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
# FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
# DEALINGS IN THE SOFTWARE.

from __future__ import annotations

import re
from logging import getLogger
from typing import TYPE_CHECKING

import numpy as np

from .errors import DatasetFormatError, DimensionMismatchError, InvalidIndexError

if TYPE_CHECKING:
    from os import PathLike
    from typing import Final, Iterable, Iterator, Pattern, Union

    from numpy.typing import ArrayLike, NDArray

    from .partial_assignment import PartialAssignment

    StrPath = Union[str, PathLike[str]]

logger = getLogger(__name__)

__all__: Final[tuple[str, ...]] = (
    "Example",
    "Dataset",
    "restrict_dataset",
    "dumps_dataset",
    "loads_dataset",
    "read_dataset",
    "write_dataset",
)


class Example:
    """A single labelled input.

    Attributes
    ----------
    bits:
        The input ``x``.
    label:
        The label ``y``.
    """

    __slots__ = ("bits", "label")

    def __init__(self, bits: Iterable[int], label: int) -> None:
        self.bits: tuple[int, ...] = tuple(int(bit) for bit in bits)
        self.label: int = int(label)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Example):
            return NotImplemented
        return self.bits == other.bits and self.label == other.label

    def __hash__(self) -> int:
        return hash((self.bits, self.label))

    def __repr__(self) -> str:
        return f"Example({''.join(map(str, self.bits))!r}, {self.label})"


class Dataset:
    """A sample ``S`` of labelled examples over ``{0,1}^n``.

    Each row is stored packed, eight bits per byte with bit ``i`` in byte ``i // 8``, so a sample of ``m`` examples
    takes ``m * ceil(n / 8)`` bytes. :attr:`features` unpacks to a ``(m, n)`` boolean matrix for vectorized
    statistics, and :meth:`column` reads a single feature straight from the packed rows.

    Parameters
    ----------
    features:
        A ``(m, n)`` array of bits.
    labels:
        A ``(m,)`` array of labels.
    n:
        The dimension. Only needed to build a empty dataset from a empty array.

    Raises
    ------
    DimensionMismatchError
        ``features`` and ``labels`` have different lengths.
    InvalidIndexError
        A bit or label is not 0 or 1.
    """

    __slots__ = ("_n", "_rows", "_labels")

    def __init__(self, features: ArrayLike, labels: ArrayLike, *, n: int | None = None) -> None:
        feature_array = np.asarray(features)
        if feature_array.size == 0:
            if n is None:
                n = feature_array.shape[1] if feature_array.ndim == 2 else 0
            feature_array = feature_array.reshape(0, n)
        if feature_array.ndim != 2:
            raise InvalidIndexError("Features must be a 2 dimensional array")
        if feature_array.dtype != np.bool_:
            if np.any((feature_array != 0) & (feature_array != 1)):
                raise InvalidIndexError("Features must be 0 or 1")
            feature_array = feature_array.astype(np.bool_)
        if n is not None and feature_array.shape[1] != n:
            raise DimensionMismatchError(n, int(feature_array.shape[1]))
        if feature_array.shape[1] < 1:
            raise InvalidIndexError("The dimension must be positive")

        label_array = np.asarray(labels).reshape(-1)
        if label_array.shape[0] != feature_array.shape[0]:
            raise DimensionMismatchError(int(feature_array.shape[0]), int(label_array.shape[0]))
        if np.any((label_array != 0) & (label_array != 1)):
            raise InvalidIndexError("Labels must be 0 or 1")

        self._set(int(feature_array.shape[1]), np.packbits(feature_array, axis=1), label_array.astype(np.uint8))

    def _set(self, n: int, rows: NDArray[np.uint8], labels: NDArray[np.uint8]) -> None:
        rows.setflags(write=False)
        labels.setflags(write=False)
        self._n: int = n
        self._rows: NDArray[np.uint8] = rows
        self._labels: NDArray[np.uint8] = labels

    @classmethod
    def from_packed(cls, n: int, rows: ArrayLike, labels: ArrayLike) -> Dataset:
        """Build a dataset from rows already packed by :func:`numpy.packbits` along the feature axis.

        Raises
        ------
        DimensionMismatchError
            ``rows`` is not ``(m, ceil(n / 8))`` or ``labels`` has a different length.
        InvalidIndexError
            A padding bit or label is not 0.
        """
        width = (n + 7) // 8
        row_array = np.array(rows, dtype=np.uint8, ndmin=2)
        if row_array.size == 0:
            row_array = row_array.reshape(0, width)
        if row_array.ndim != 2 or row_array.shape[1] != width:
            raise DimensionMismatchError(width, int(row_array.shape[-1]))
        label_array = np.array(labels, dtype=np.uint8).reshape(-1)
        if label_array.shape[0] != row_array.shape[0]:
            raise DimensionMismatchError(int(row_array.shape[0]), int(label_array.shape[0]))
        if n % 8 and row_array.size and np.any(row_array[:, -1] & ((1 << (8 - n % 8)) - 1)):
            raise InvalidIndexError("Padding bits must be 0")
        if np.any(label_array > 1):
            raise InvalidIndexError("Labels must be 0 or 1")
        dataset = cls.__new__(cls)
        dataset._set(n, row_array, label_array)
        return dataset

    @classmethod
    def from_examples(cls, n: int, examples: Iterable[Example]) -> Dataset:
        """Build a dataset from :class:`Example` objects.

        Raises
        ------
        DimensionMismatchError
            An example does not have ``n`` bits.
        """
        rows: list[tuple[int, ...]] = []
        labels: list[int] = []
        for example in examples:
            if len(example.bits) != n:
                raise DimensionMismatchError(n, len(example.bits))
            rows.append(example.bits)
            labels.append(example.label)
        return cls(np.array(rows, dtype=np.bool_).reshape(len(rows), n), np.array(labels, dtype=np.uint8), n=n)

    @property
    def n(self) -> int:
        """The ambient dimension."""
        return self._n

    @property
    def m(self) -> int:
        """The number of examples."""
        return int(self._rows.shape[0])

    @property
    def packed(self) -> NDArray[np.uint8]:
        """The read-only ``(m, ceil(n / 8))`` packed rows."""
        return self._rows

    @property
    def features(self) -> NDArray[np.bool_]:
        """A read-only ``(m, n)`` boolean matrix unpacked from the rows."""
        features = np.unpackbits(self._rows, axis=1, count=self._n).view(np.bool_)
        features.setflags(write=False)
        return features

    @property
    def labels(self) -> NDArray[np.uint8]:
        """The read-only label vector."""
        return self._labels

    @property
    def examples(self) -> Iterator[Example]:
        for row, label in zip(self.features, self._labels):
            yield Example(row.tolist(), int(label))

    def column(self, index: int) -> NDArray[np.bool_]:
        """The values of feature ``index`` across the sample.

        Raises
        ------
        InvalidIndexError
            ``index`` is not in ``[0, n)``.
        """
        if not 0 <= index < self._n:
            raise InvalidIndexError(f"Feature {index} is out of range for n={self._n}")
        return ((self._rows[:, index >> 3] >> (7 - (index & 7))) & 1).astype(np.bool_)

    def subset(self, mask: NDArray[np.bool_]) -> Dataset:
        """The examples selected by a boolean mask, in their original order."""
        return Dataset.from_packed(self._n, self._rows[mask], self._labels[mask])

    def consistent_mask(self, assignment: PartialAssignment) -> NDArray[np.bool_]:
        """A mask of the examples inside the subcube of ``assignment``."""
        if assignment.n != self.n:
            raise DimensionMismatchError(self.n, assignment.n)
        mask = np.ones(self.m, dtype=np.bool_)
        for index, value in assignment.fixed_items():
            mask &= self.column(index) == bool(value)
        return mask

    def __len__(self) -> int:
        return self.m

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        return (
            self._n == other._n
            and np.array_equal(self._rows, other._rows)
            and np.array_equal(self._labels, other._labels)
        )

    def __hash__(self) -> int:
        return hash((self._n, self._rows.tobytes(), self._labels.tobytes()))

    def __repr__(self) -> str:
        return f"<Dataset n={self.n} m={self.m}>"


def restrict_dataset(dataset: Dataset, assignment: PartialAssignment) -> Dataset:
    """``S_w``: the examples consistent with every fixed coordinate of ``assignment``, order preserved.

    Raises
    ------
    DimensionMismatchError
        The assignment and dataset have different dimensions.
    """
    return dataset.subset(dataset.consistent_mask(assignment))


_ZERO: Final[int] = ord("0")
_HEADER: Final[Pattern[str]] = re.compile(r"n=(?P<n>0|[1-9][0-9]*) m=(?P<m>0|[1-9][0-9]*)")


def dumps_dataset(dataset: Dataset) -> str:
    """Serialize a dataset to the text format.

    The first line is ``n=<n> m=<m>``, then one ``<bits>,<label>`` line per example. Every line ends with ``\\n``.
    """
    header = f"n={dataset.n} m={dataset.m}\n"
    if dataset.m == 0:
        return header
    body = np.empty((dataset.m, dataset.n + 3), dtype=np.uint8)
    body[:, : dataset.n] = dataset.features.astype(np.uint8) + _ZERO
    body[:, dataset.n] = ord(",")
    body[:, dataset.n + 1] = dataset.labels + _ZERO
    body[:, dataset.n + 2] = ord("\n")
    return header + body.tobytes().decode("ascii")


def loads_dataset(text: str) -> Dataset:
    """Parse the dataset text format.

    Only the canonical form written by :func:`dumps_dataset` is accepted: decimal counts without sign or leading
    zeros, and a ``\\n`` after every line. Parsing and dumping a accepted text gives back the same text.

    Raises
    ------
    DatasetFormatError
        The text is malformed, or the header does not match the body.
    """
    if not text:
        raise DatasetFormatError(1, "missing header")
    if not text.endswith("\n"):
        raise DatasetFormatError(text.count("\n") + 1, "missing final newline")
    lines = text[:-1].split("\n")

    header = _HEADER.fullmatch(lines[0])
    if header is None:
        raise DatasetFormatError(1, f"expected 'n=<n> m=<m>', got {lines[0]!r}")
    n, m = int(header["n"]), int(header["m"])
    if n < 1:
        raise DatasetFormatError(1, "n must be positive")
    if len(lines) - 1 != m:
        raise DatasetFormatError(len(lines), f"header declares {m} examples, found {len(lines) - 1}")

    features = np.zeros((m, n), dtype=np.bool_)
    labels = np.zeros(m, dtype=np.uint8)
    for row, line in enumerate(lines[1:]):
        line_number = row + 2
        if len(line) != n + 2 or line[n] != ",":
            raise DatasetFormatError(line_number, f"expected {n} bits, a comma and a label")
        bits, label = line[:n], line[n + 1]
        if bits.strip("01") or label not in "01":
            raise DatasetFormatError(line_number, "bits and labels must be '0' or '1'")
        features[row] = np.frombuffer(bits.encode("ascii"), dtype=np.uint8) == ord("1")
        labels[row] = label == "1"
    logger.debug("Parsed dataset with n=%s m=%s", n, m)
    return Dataset(features, labels, n=n)


def read_dataset(path: StrPath) -> Dataset:
    """Read a dataset file written by :func:`write_dataset`."""
    with open(path, "r", encoding="ascii", newline="") as file:
        return loads_dataset(file.read())


def write_dataset(dataset: Dataset, path: StrPath) -> None:
    """Write a dataset in the text format."""
    with open(path, "w", encoding="ascii", newline="") as file:
        file.write(dumps_dataset(dataset))
