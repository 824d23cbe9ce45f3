"""Quantum dimensions at the topological locus and their A -> 1 limits.

The quantum dimension of a diagram is a product over boxes: each box with
content ``c`` and hook length ``h`` contributes ``(A q^c - A^-1 q^-c)`` to the
numerator and ``(q^h - q^-h)`` to the denominator.  We keep these as factor
lists rather than expanding a bivariate polynomial; the number of vanishing
numerator factors at A = 1 is exactly the diagonal length, so ratios of
quantum dimensions at A = 1 reduce to cancelling literally identical zero
factors and evaluating what survives.

For a one-hook color ``(a, l)`` against a one-hook summand ``(r, s)`` of its
m-th tensor power the surviving ratio is ``(-1)^(l+s) [N] / [mN]`` with
``N = a + l + 1``; any summand with diagonal length two or more contributes
zero.  The Jacobi-Trudi determinant over complete homogeneous functions built
from the power sums serves as an independent oracle for the factor lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .laurent import LaurentPoly, RationalFunc, qnum
from .young import Hook, Partition


@dataclass(frozen=True)
class TopoFactorList:
    """Factorized quantum dimension: numerator contents, denominator hook lengths."""

    contents: tuple[int, ...]
    hook_lengths: tuple[int, ...]

    def zero_order_at_a1(self) -> int:
        """Vanishing order of the numerator at A = 1 (count of content-0 factors)."""
        return sum(1 for c in self.contents if c == 0)

    def evaluate(self, a: Fraction, q: Fraction) -> Fraction:
        value = Fraction(1)
        for c in self.contents:
            value *= a * q ** c - (a * q ** c) ** -1
        for h in self.hook_lengths:
            value /= q ** h - q ** -h
        return value


def topological_factors(nu: Partition) -> TopoFactorList:
    """One (content, hook length) factor pair per box of ``nu``."""
    return TopoFactorList(nu.contents(), nu.hook_lengths())


def _difference(exp: int) -> LaurentPoly:
    """q^exp - q^-exp as a polynomial (exp may be negative)."""
    return LaurentPoly.monomial(1, exp) - LaurentPoly.monomial(1, -exp)


def ratio_at_A1(color: Hook, mu: Partition) -> RationalFunc:
    """Ratio of quantum dimensions dim(mu)/dim(color) in the A -> 1 limit.

    Requires |mu| to be a multiple of the color size.  Zero when ``mu`` has
    diagonal length > 1; for one-hook ``mu`` the single vanishing factor of
    each side cancels and the rest evaluates at A = 1.

    >>> ratio_at_A1(Hook(0, 0), Partition((2, 1, 1))) == RationalFunc(qnum(1), qnum(4))
    True
    """
    if mu.size % color.size != 0 or mu.size < color.size:
        raise ValueError(f"|{mu}| = {mu.size} is not a positive multiple of {color.size}")
    if mu.diagonal_length > 1:
        return RationalFunc.zero()
    num = LaurentPoly.one()
    den = LaurentPoly.one()
    for c in mu.contents():
        if c != 0:
            num = num * _difference(c)
    for h in mu.hook_lengths():
        den = den * _difference(h)
    for h in color.as_partition().hook_lengths():
        num = num * _difference(h)
    for c in color.as_partition().contents():
        if c != 0:
            den = den * _difference(c)
    return RationalFunc(num, den)


def ratio_closed_form(color: Hook, mu: Hook) -> RationalFunc:
    """The same ratio from the closed form (-1)^(l+s) [N]/[mN]; test reference."""
    m = mu.size // color.size
    sign = -1 if (color.leg + mu.leg) % 2 else 1
    return RationalFunc(qnum(color.size) * sign, qnum(m * color.size))


@dataclass(frozen=True)
class PowerSumSpec:
    """Power-sum values p_1..p_degree feeding the Jacobi-Trudi oracle."""

    values: tuple[RationalFunc, ...]

    @property
    def degree(self) -> int:
        return len(self.values)

    def p(self, k: int) -> RationalFunc:
        if not 1 <= k <= self.degree:
            raise ValueError(f"power sum p_{k} outside degree bound {self.degree}")
        return self.values[k - 1]


def topological_power_sums(a: Fraction, degree: int) -> PowerSumSpec:
    """p_k = (A^k - A^-k)/(q^k - q^-k) at a fixed rational A, as functions of q."""
    values = []
    for k in range(1, degree + 1):
        diff = a ** k - a ** -k
        num = LaurentPoly.constant(diff.numerator)
        den = LaurentPoly.constant(diff.denominator) * _difference(k)
        values.append(RationalFunc(num, den))
    return PowerSumSpec(tuple(values))


def complete_homogeneous(spec: PowerSumSpec, max_degree: int) -> list[RationalFunc]:
    """h_0..h_max_degree from Newton's identity n*h_n = sum_k p_k h_(n-k)."""
    if max_degree > spec.degree:
        raise ValueError(f"need power sums up to p_{max_degree}, have {spec.degree}")
    hs = [RationalFunc.one()]
    for n in range(1, max_degree + 1):
        acc = RationalFunc.zero()
        for k in range(1, n + 1):
            acc = acc + spec.p(k) * hs[n - k]
        hs.append(acc / n)
    return hs


def _determinant(mat: list[list[RationalFunc]]) -> RationalFunc:
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = RationalFunc.zero()
    sign = 1
    for j in range(n):
        if not mat[0][j].is_zero():
            minor = [[row[c] for c in range(n) if c != j] for row in mat[1:]]
            total = total + mat[0][j] * _determinant(minor) * sign
        sign = -sign
    return total


def jacobi_trudi_schur(nu: Partition, spec: PowerSumSpec) -> RationalFunc:
    """Schur value via det(h_(nu_i - i + j)); independent oracle for factor lists.

    >>> ps = topological_power_sums(Fraction(2), 2)
    >>> jacobi_trudi_schur(Partition((1,)), ps) == ps.p(1)
    True
    """
    if not nu.parts:
        return RationalFunc.one()
    rows = len(nu.parts)
    hs = complete_homogeneous(spec, nu.parts[0] + rows - 1)
    zero = RationalFunc.zero()

    def h(k: int) -> RationalFunc:
        return zero if k < 0 else hs[k]

    mat = [[h(nu.parts[i] - (i + 1) + (j + 1)) for j in range(rows)] for i in range(rows)]
    return _determinant(mat)
