"""Independent fundamental Alexander oracle from the reduced Burau representation.

Used only to cross-validate the trace engine in the fundamental color.  The
braid letters map to exact Laurent matrices in a variable t; the closure's
Alexander polynomial is det(I - B(braid)) / (1 + t + ... + t^(m-1)), read in
the engine's variable via t = q^2 and unit-normalized the same way.
"""

from __future__ import annotations

from .braid import BraidWord, NotAKnotError, closure_is_knot
from .evaluator import unit_normalize
from .laurent import LaurentPoly, exact_div

Matrix = tuple[tuple[LaurentPoly, ...], ...]

_ZERO = LaurentPoly.zero()
_ONE = LaurentPoly.one()
_T = LaurentPoly.monomial(1, 1)
_T_INV = LaurentPoly.monomial(1, -1)


def _identity(n: int) -> list[list[LaurentPoly]]:
    return [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]


def reduced_burau(letter: int, strands: int) -> Matrix:
    """Image of one braid letter in the reduced (m-1)-dimensional representation.

    Generator i sends v(i-1) -> v(i-1) + t*v(i), v(i) -> -t*v(i),
    v(i+1) -> v(i) + v(i+1); the inverse letters are exact.
    """
    if letter == 0 or abs(letter) >= strands:
        raise ValueError(f"letter {letter} invalid on {strands} strands")
    n = strands - 1
    j = abs(letter) - 1
    mat = _identity(n)
    if letter > 0:
        mat[j][j] = -_T
        if j >= 1:
            mat[j][j - 1] = _T
        if j + 1 < n:
            mat[j][j + 1] = _ONE
    else:
        mat[j][j] = -_T_INV
        if j >= 1:
            mat[j][j - 1] = _ONE
        if j + 1 < n:
            mat[j][j + 1] = _T_INV
    return tuple(tuple(row) for row in mat)


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(n)), _ZERO) for j in range(n))
        for i in range(n))


def burau_matrix(b: BraidWord) -> Matrix:
    mat = tuple(tuple(row) for row in _identity(b.strands - 1))
    for g in b.letters:
        mat = _matmul(mat, reduced_burau(g, b.strands))
    return mat


def _det(mat: list[list[LaurentPoly]]) -> LaurentPoly:
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = _ZERO
    sign = 1
    for j in range(n):
        if not mat[0][j].is_zero():
            minor = [[row[c] for c in range(n) if c != j] for row in mat[1:]]
            term = mat[0][j] * _det(minor)
            total = total + (term if sign > 0 else -term)
        sign = -sign
    return total


def burau_alexander(b: BraidWord) -> LaurentPoly:
    """Fundamental Alexander polynomial of the knot closure, in q with t = q^2.

    >>> from .braid import parse_braid
    >>> str(burau_alexander(parse_braid("1 1 1", 2)))
    'q^2 - 1 + q^-2'
    """
    if not closure_is_knot(b):
        raise NotAKnotError(f"closure of '{b}' on {b.strands} strands is not a knot")
    burau = burau_matrix(b)
    n = b.strands - 1
    delta = [[(_ONE if i == j else _ZERO) - burau[i][j] for j in range(n)] for i in range(n)]
    circular = LaurentPoly(0, (1,) * b.strands)  # 1 + t + ... + t^(m-1)
    reduced = exact_div(_det(delta), circular)
    return unit_normalize(reduced.substitute_power(2))
