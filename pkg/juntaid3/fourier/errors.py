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

from typing import TYPE_CHECKING

from ..common.errors import JuntaError

if TYPE_CHECKING:
    from typing import Final

__all__: Final[tuple[str, ...]] = ("RestrictionOutsideSupportError", "PolynomialArityError", "UnsupportedBasisError")


class RestrictionOutsideSupportError(JuntaError):
    """A restriction fixes a coordinate the junta does not depend on.

    Parameters
    ----------
    index:
        The coordinate.
    """

    def __init__(self, index: int) -> None:
        self.index: int = index
        super().__init__(f"Coordinate {index} is fixed but is not in the junta support")


class PolynomialArityError(JuntaError):
    """A polynomial was combined with something of a different arity.

    Parameters
    ----------
    expected:
        The arity of the polynomial.
    got:
        The arity that was provided.
    """

    def __init__(self, expected: int, got: int) -> None:
        self.expected: int = expected
        self.got: int = got
        super().__init__(f"Expected {expected} variables, got {got}")


class UnsupportedBasisError(JuntaError):
    """A operation only works for polynomials in a specific basis.

    Parameters
    ----------
    basis:
        The basis of the polynomial.
    expected:
        The basis the operation works in.
    """

    def __init__(self, basis: str, expected: str) -> None:
        self.basis: str = basis
        super().__init__(f"Expected a polynomial in the {expected} basis, got {basis}")
