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

from enum import Enum
from typing import TYPE_CHECKING

import numpy as np
from frozendict import frozendict

from .errors import PolynomialArityError, UnsupportedBasisError

if TYPE_CHECKING:
    from typing import Final, Iterator, Mapping, Sequence

    from numpy.typing import ArrayLike, NDArray

    from .expansion import FourierExpansion

__all__: Final[tuple[str, ...]] = (
    "Basis",
    "MultilinearPolynomial",
    "split_on_coordinate",
    "shift_polynomial",
    "normalize_polynomial",
)


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _submasks(mask: int) -> Iterator[int]:
    """Every ``T ⊆ mask``, including ``mask`` and the empty set."""
    submask = mask
    while True:
        yield submask
        if submask == 0:
            return
        submask = (submask - 1) & mask


class Basis(str, Enum):
    """What the monomial ``I`` of a :class:`MultilinearPolynomial` stands for."""

    CHARACTER = "character"
    """``prod_{i in I} (2 x_i - 1)``, the basis of the Fourier expansion over ``{0, 1}``."""
    MONOMIAL = "monomial"
    """``prod_{i in I} x_i``."""


class MultilinearPolynomial:
    """A multilinear polynomial with real coefficients.

    Parameters
    ----------
    arity:
        The number of variables.
    coeffs:
        Coefficient per monomial bitmask. Exact zeros are dropped.
    basis:
        How a monomial is evaluated.

    Raises
    ------
    PolynomialArityError
        A monomial uses a variable ``>= arity``.
    """

    __slots__ = ("arity", "coeffs", "basis")

    def __init__(self, arity: int, coeffs: Mapping[int, float], basis: Basis = Basis.CHARACTER) -> None:
        for mask in coeffs:
            if mask < 0 or mask >> arity:
                raise PolynomialArityError(arity, int(mask).bit_length())
        self.arity: int = arity
        self.coeffs: frozendict[int, float] = frozendict(
            {int(mask): float(value) for mask, value in sorted(coeffs.items()) if value != 0.0}
        )
        self.basis: Basis = Basis(basis)

    @classmethod
    def zero(cls, arity: int, basis: Basis = Basis.CHARACTER) -> MultilinearPolynomial:
        return cls(arity, {}, basis)

    @property
    def degree(self) -> int:
        """The largest monomial size with a nonzero coefficient, -1 for the zero polynomial."""
        return max((_popcount(mask) for mask in self.coeffs), default=-1)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def top_coefficients(self) -> dict[int, float]:
        """The coefficients of the monomials of maximal degree."""
        degree = self.degree
        return {mask: value for mask, value in self.coeffs.items() if _popcount(mask) == degree}

    def evaluate(self, values: Sequence[float]) -> float:
        """Evaluate at a single point of ``arity`` reals."""
        if len(values) != self.arity:
            raise PolynomialArityError(self.arity, len(values))
        return float(self.evaluate_many(np.asarray(values, dtype=np.float64).reshape(1, -1))[0])

    def evaluate_many(self, points: ArrayLike) -> NDArray[np.float64]:
        """Evaluate at every row of a ``(m, arity)`` array."""
        matrix = np.asarray(points, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape[1] != self.arity:
            raise PolynomialArityError(self.arity, int(matrix.shape[-1]) if matrix.ndim else 0)
        factors = 2.0 * matrix - 1.0 if self.basis is Basis.CHARACTER else matrix
        result = np.zeros(matrix.shape[0], dtype=np.float64)
        for mask, coefficient in self.coeffs.items():
            term = np.full(matrix.shape[0], coefficient)
            for position in range(self.arity):
                if mask >> position & 1:
                    term *= factors[:, position]
            result += term
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultilinearPolynomial):
            return NotImplemented
        return self.arity == other.arity and self.basis is other.basis and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.arity, self.basis, self.coeffs))

    def __repr__(self) -> str:
        return f"MultilinearPolynomial(arity={self.arity}, coeffs={dict(self.coeffs)!r}, basis={self.basis.value!r})"


def split_on_coordinate(
    expansion: FourierExpansion, index: int
) -> tuple[MultilinearPolynomial, MultilinearPolynomial]:
    """Write ``F = (2 x_i - 1) g + h`` where neither ``g`` nor ``h`` depends on ``x_i``.

    ``g`` collects ``alpha_I chi_{I - {i}}`` over ``I ∋ i``, ``h`` collects the remaining terms. Both keep the arity
    of ``F``.

    Raises
    ------
    PolynomialArityError
        ``index`` is not a variable of ``F``.
    """
    if not 0 <= index < expansion.k:
        raise PolynomialArityError(expansion.k, index + 1)
    bit = 1 << index
    derivative: dict[int, float] = {}
    rest: dict[int, float] = {}
    for mask, coefficient in expansion.items():
        if mask & bit:
            derivative[mask ^ bit] = coefficient
        else:
            rest[mask] = coefficient
    return MultilinearPolynomial(expansion.k, derivative), MultilinearPolynomial(expansion.k, rest)


def shift_polynomial(polynomial: MultilinearPolynomial, base: Sequence[float]) -> MultilinearPolynomial:
    """Substitute ``x_i = p_i + delta_i`` into a character basis polynomial and expand it in ``delta``.

    Every ``prod_{i in I} (2 p_i + 2 delta_i - 1)`` contributes
    ``2^|T| prod_{i in I - T} (2 p_i - 1)`` to the monomial ``delta^T`` for every ``T ⊆ I``. The result is in the
    monomial basis.

    Raises
    ------
    PolynomialArityError
        ``base`` does not have one value per variable.
    """
    if len(base) != polynomial.arity:
        raise PolynomialArityError(polynomial.arity, len(base))
    if polynomial.basis is Basis.MONOMIAL:
        shifted_monomials: dict[int, float] = {}
        for mask, coefficient in polynomial.coeffs.items():
            for submask in _submasks(mask):
                factor = coefficient
                for position in range(polynomial.arity):
                    if (mask ^ submask) >> position & 1:
                        factor *= base[position]
                shifted_monomials[submask] = shifted_monomials.get(submask, 0.0) + factor
        return MultilinearPolynomial(polynomial.arity, shifted_monomials, Basis.MONOMIAL)

    centered = [2.0 * float(value) - 1.0 for value in base]
    shifted: dict[int, float] = {}
    for mask, coefficient in polynomial.coeffs.items():
        for submask in _submasks(mask):
            factor = coefficient * 2.0 ** _popcount(submask)
            for position in range(polynomial.arity):
                if (mask ^ submask) >> position & 1:
                    factor *= centered[position]
            shifted[submask] = shifted.get(submask, 0.0) + factor
    return MultilinearPolynomial(polynomial.arity, shifted, Basis.MONOMIAL)


def normalize_polynomial(polynomial: MultilinearPolynomial, c: float, k_prime: int) -> MultilinearPolynomial:
    """``G(xi) = 2^k' / (2c)^k0 * g(c xi)`` where ``k0`` is the degree of ``g``.

    For a shifted restriction of a junta, every top degree coefficient of the result has magnitude at least 1, so
    anti-concentration bounds for polynomials with a unit leading coefficient apply to it.
    The zero polynomial is returned unchanged.

    Raises
    ------
    UnsupportedBasisError
        ``polynomial`` is not in the monomial basis.
    """
    if polynomial.basis is not Basis.MONOMIAL:
        raise UnsupportedBasisError(polynomial.basis.value, Basis.MONOMIAL.value)
    degree = polynomial.degree
    if degree < 0:
        return polynomial
    scale = 2.0**k_prime / (2.0 * c) ** degree
    return MultilinearPolynomial(
        polynomial.arity,
        {mask: value * scale * c ** _popcount(mask) for mask, value in polynomial.coeffs.items()},
        Basis.MONOMIAL,
    )
