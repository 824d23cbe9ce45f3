"""Braiding operators on path bases of the one-hook graph.

Crossing strands colored by a hook ``(a, l)`` acts on each irreducible summand
of the tensor square by a signed monomial: with ``K = 2a^2 + 2a - 2l^2 - 2l``
and ``N = a + l + 1``,

    arm summand:  (-1)^l     q^(K + N)
    leg summand:  (-1)^(l+1) q^(K - N)

On the path basis of the hook graph, the operator for crossing ``(i, i+1)``
splits into singlets (paths stepping arm-arm or leg-leg through level ``i``)
and 2x2 doublets pairing the two paths that differ only at level ``i``.  The
doublet depends only on the level ``n``, never on the horizontal position:

    r11 = (-1)^(l+1) q^K q^(-nN) / [n].      r22 = (-1)^l q^K q^(nN) / [n].

with ``[n].`` the q-number at q -> q^N, and off-diagonal product forced by the
determinant (which must be the product of the two eigenvalues, -q^(2K)):

    r12 * r21 = q^(2K) [n+1]. [n-1]. / [n].^2

The symmetric square-root splitting of that product would leave the rational
field, and every closed trace uses upper and lower entries in equal numbers at
each level, so we keep the rational gauge r12 = q^K [n+1].[n-1]./[n].,
r21 = q^K / [n]. (a diagonal path-basis rescaling away from symmetric; traces,
products, and the Yang-Baxter identity are unchanged).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .laurent import LaurentPoly, RationalFunc, exact_div, qnum_bullet
from .young import Hook, HookGraph, Path, enumerate_paths


@dataclass(frozen=True)
class SignedMonomial:
    """A value of the form ``sign * q**exponent`` with sign +-1; exactly invertible."""

    sign: int
    exponent: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def as_laurent(self) -> LaurentPoly:
        return LaurentPoly.monomial(self.sign, self.exponent)

    def as_rational(self) -> RationalFunc:
        return RationalFunc(self.as_laurent())

    def inverse(self) -> SignedMonomial:
        return SignedMonomial(self.sign, -self.exponent)

    def __mul__(self, other: SignedMonomial) -> SignedMonomial:
        return SignedMonomial(self.sign * other.sign, self.exponent + other.exponent)

    def __pow__(self, n: int) -> SignedMonomial:
        return SignedMonomial(self.sign if n % 2 else 1, self.exponent * n)

    def evaluate(self, q):
        return self.sign * q ** self.exponent

    def __str__(self) -> str:
        return str(self.as_laurent())


@dataclass(frozen=True)
class HookEigenvalues:
    """Crossing eigenvalues on the arm and leg summands of the tensor square."""

    arm: SignedMonomial
    leg: SignedMonomial


def framing_exponent(h: Hook) -> int:
    return 2 * h.arm * h.arm + 2 * h.arm - 2 * h.leg * h.leg - 2 * h.leg


def hook_eigenvalues(h: Hook) -> HookEigenvalues:
    """The two signed monomials acting on the one-hook tensor square.

    >>> ev = hook_eigenvalues(Hook(1, 0))
    >>> str(ev.arm), str(ev.leg)
    ('q^6', '-q^2')
    """
    k = framing_exponent(h)
    sign = -1 if h.leg % 2 else 1
    return HookEigenvalues(arm=SignedMonomial(sign, k + h.size),
                           leg=SignedMonomial(-sign, k - h.size))


def framing_factor(h: Hook) -> SignedMonomial:
    """Per-crossing monomial relating vertical framing to the normalized pair.

    Dividing both eigenvalues by it leaves exactly (q^N, -q^-N) with N the
    hook size, the fundamental pair under q -> q^N.
    """
    return SignedMonomial(-1 if h.leg % 2 else 1, framing_exponent(h))


@dataclass(frozen=True)
class DoubletBlock:
    """A 2x2 block on the two paths through neighboring level-``level`` vertices.

    Row/column 1 is the path through the arm-side vertex (lexicographically
    first), row/column 2 the leg-side path.
    """

    level: int
    r11: RationalFunc
    r12: RationalFunc
    r21: RationalFunc
    r22: RationalFunc

    def trace(self) -> RationalFunc:
        return self.r11 + self.r22

    def trace_of_square(self) -> RationalFunc:
        return self.r11 * self.r11 + self.r22 * self.r22 + 2 * self.r12 * self.r21

    def determinant(self) -> RationalFunc:
        return self.r11 * self.r22 - self.r12 * self.r21

    def inverted(self) -> DoubletBlock:
        det = self.determinant()
        return DoubletBlock(self.level,
                            self.r22 / det, -self.r12 / det,
                            -self.r21 / det, self.r11 / det)


@lru_cache(maxsize=None)
def doublet_block(h: Hook, n: int) -> DoubletBlock:
    """The level-``n`` doublet for base hook ``h``, in the rational gauge (n >= 2).

    >>> from .laurent import qnum
    >>> b = doublet_block(Hook(0, 0), 2)
    >>> b.r11 == RationalFunc(LaurentPoly.monomial(-1, -2), qnum(2))
    True
    >>> b.r12 * b.r21 == RationalFunc(qnum(3), qnum(2) * qnum(2))
    True
    """
    if n < 2:
        raise ValueError(f"doublets start at level 2, got {n}")
    k = framing_exponent(h)
    size = h.size
    sign = -1 if h.leg % 2 else 1
    bullet = RationalFunc(qnum_bullet(n, size))
    r11 = RationalFunc(LaurentPoly.monomial(-sign, k - n * size)) / bullet
    r22 = RationalFunc(LaurentPoly.monomial(sign, k + n * size)) / bullet
    off = RationalFunc(qnum_bullet(n + 1, size) * qnum_bullet(n - 1, size))
    r12 = off * RationalFunc(LaurentPoly.monomial(1, k)) / bullet
    r21 = RationalFunc(LaurentPoly.monomial(1, k)) / bullet
    return DoubletBlock(n, r11, r12, r21, r22)


@lru_cache(maxsize=None)
def doublet_block_inverse(h: Hook, n: int) -> DoubletBlock:
    return doublet_block(h, n).inverted()


@dataclass(frozen=True)
class BlockOperator:
    """A block-diagonal operator on the lexicographic path basis of one target vertex.

    Every basis index appears in exactly one singlet or one doublet pair; each
    row therefore has at most two nonzero entries.  All entries share the
    single denominator ``den`` (the bullet q-number of the doublet level, or 1
    for a purely singlet operator), so products of operators stay in the form
    "integer-polynomial matrix over one polynomial denominator" and never need
    gcd reduction.
    """

    dim: int
    singlets: tuple[tuple[int, RationalFunc], ...]
    doublets: tuple[tuple[tuple[int, int], DoubletBlock], ...]
    den: LaurentPoly

    def rows(self) -> list[dict[int, RationalFunc]]:
        out: list[dict[int, RationalFunc]] = [dict() for _ in range(self.dim)]
        for idx, scalar in self.singlets:
            out[idx][idx] = scalar
        for (i, j), block in self.doublets:
            out[i][i] = block.r11
            out[i][j] = block.r12
            out[j][i] = block.r21
            out[j][j] = block.r22
        return out

    def numerator_rows(self) -> list[dict[int, LaurentPoly]]:
        """Entries as polynomial numerators over the common denominator."""
        out: list[dict[int, LaurentPoly]] = [dict() for _ in range(self.dim)]
        for i, row in enumerate(self.rows()):
            for j, entry in row.items():
                out[i][j] = exact_div(entry.num * self.den, entry.den)
        return out

    def dense(self) -> list[list[RationalFunc]]:
        zero = RationalFunc.zero()
        rows = self.rows()
        return [[rows[i].get(j, zero) for j in range(self.dim)] for i in range(self.dim)]


def _classify(path: Path, i: int) -> tuple[int, int] | int:
    """Step pair of ``path`` around level ``i``; the first crossing sees one step only."""
    if i == 1:
        return path.choices[0]
    return path.choices[i - 2], path.choices[i - 1]


@lru_cache(maxsize=None)
def assemble_R(graph: HookGraph, target_k: int, i: int, inverse: bool = False) -> BlockOperator:
    """The crossing operator for strands ``(i, i+1)`` on the target's path basis.

    Paths stepping arm-arm (resp. leg-leg) through level ``i`` are singlets
    with the arm (resp. leg) eigenvalue; mixed paths pair with their level-i
    toggle partner in the level-``i`` doublet.  ``inverse`` reciprocates the
    singlets and inverts each doublet via its known determinant.
    """
    m = graph.levels
    if not 1 <= i <= m - 1:
        raise ValueError(f"crossing index {i} outside 1..{m - 1}")
    paths = enumerate_paths(graph, target_k)
    index = {p: idx for idx, p in enumerate(paths)}
    ev = hook_eigenvalues(graph.base)
    singlets: list[tuple[int, RationalFunc]] = []
    doublets: list[tuple[tuple[int, int], DoubletBlock]] = []
    for idx, p in enumerate(paths):
        steps = _classify(p, i)
        if steps == 0 or steps == (0, 0):
            e = ev.arm.inverse() if inverse else ev.arm
            singlets.append((idx, e.as_rational()))
        elif steps == 1 or steps == (1, 1):
            e = ev.leg.inverse() if inverse else ev.leg
            singlets.append((idx, e.as_rational()))
        elif steps == (0, 1):
            partner = index[p.toggle(i - 1)]
            block = doublet_block_inverse(graph.base, i) if inverse \
                else doublet_block(graph.base, i)
            doublets.append(((idx, partner), block))
        # the (1, 0) member is recorded by its (0, 1) partner
    den = qnum_bullet(i, graph.base.size) if doublets else LaurentPoly.one()
    return BlockOperator(len(paths), tuple(singlets), tuple(doublets), den)


# -- exact products and traces ------------------------------------------------
#
# Products are carried as sparse integer-polynomial numerator matrices over a
# single running denominator; only the final trace becomes a RationalFunc.

NumeratorRows = list[dict[int, LaurentPoly]]


def _mul_num_rows(a: NumeratorRows, b: NumeratorRows) -> NumeratorRows:
    out: NumeratorRows = [dict() for _ in a]
    for r, row in enumerate(a):
        for k, v in row.items():
            for c, w in b[k].items():
                prev = out[r].get(c)
                prod = v * w
                out[r][c] = prod if prev is None else prev + prod
    return out


def product_numerators(ops: Sequence[BlockOperator]) -> tuple[NumeratorRows, LaurentPoly]:
    """Ordered product as (numerator rows, common denominator)."""
    if not ops:
        raise ValueError("empty operator product")
    dims = {op.dim for op in ops}
    if len(dims) != 1:
        raise ValueError(f"operators act on different path bases: dims {sorted(dims)}")
    rows = ops[0].numerator_rows()
    den = ops[0].den
    for op in ops[1:]:
        rows = _mul_num_rows(rows, op.numerator_rows())
        den = den * op.den
    return rows, den


def product_rows(ops: Sequence[BlockOperator]) -> list[dict[int, RationalFunc]]:
    rows, den = product_numerators(ops)
    return [{c: RationalFunc(v, den) for c, v in row.items()} for row in rows]


def trace_product(ops: Sequence[BlockOperator]) -> RationalFunc:
    """Exact trace of the ordered product of block operators on one path basis."""
    rows, den = product_numerators(ops)
    total = LaurentPoly.zero()
    for i, row in enumerate(rows):
        v = row.get(i)
        if v is not None:
            total = total + v
    return RationalFunc(total, den)


def rows_equal(a: Sequence[dict[int, RationalFunc]],
               b: Sequence[dict[int, RationalFunc]]) -> bool:
    if len(a) != len(b):
        return False
    zero = RationalFunc.zero()
    for ra, rb in zip(a, b):
        for c in set(ra) | set(rb):
            if ra.get(c, zero) != rb.get(c, zero):
                return False
    return True


def _num_rows_equal(ra: NumeratorRows, da: LaurentPoly,
                    rb: NumeratorRows, db: LaurentPoly) -> bool:
    zero = LaurentPoly.zero()
    if len(ra) != len(rb):
        return False
    for rowa, rowb in zip(ra, rb):
        for c in set(rowa) | set(rowb):
            if rowa.get(c, zero) * db != rowb.get(c, zero) * da:
                return False
    return True


def yang_baxter_holds(graph: HookGraph, target_k: int, i: int) -> bool:
    """Check R^(i) R^(i+1) R^(i) == R^(i+1) R^(i) R^(i+1) exactly on one target."""
    a = assemble_R(graph, target_k, i)
    b = assemble_R(graph, target_k, i + 1)
    left = product_numerators([a, b, a])
    right = product_numerators([b, a, b])
    return _num_rows_equal(*left, *right)


def commutation_holds(graph: HookGraph, target_k: int, i: int, j: int) -> bool:
    a = assemble_R(graph, target_k, i)
    b = assemble_R(graph, target_k, j)
    left = product_numerators([a, b])
    right = product_numerators([b, a])
    return _num_rows_equal(*left, *right)


def is_identity(rows: Sequence[dict[int, RationalFunc]]) -> bool:
    one, zero = RationalFunc.one(), RationalFunc.zero()
    for i, row in enumerate(rows):
        for c in set(row) | {i}:
            if row.get(c, zero) != (one if c == i else zero):
                return False
    return True


# -- numeric symmetric gauge (validation only) ---------------------------------

def _qnum_bullet_float(n: int, size: int, q: float) -> float:
    return (q ** (n * size) - q ** (-n * size)) / (q ** size - q ** (-size))


def symmetric_operator_numeric(graph: HookGraph, target_k: int, i: int,
                               q: float, inverse: bool = False) -> list[list[float]]:
    """Float matrix of the crossing operator with symmetric sqrt off-diagonals.

    Used only to validate that the rational gauge changes no closed trace.
    """
    h = graph.base
    op = assemble_R(graph, target_k, i, inverse=False)
    k, size = framing_exponent(h), h.size
    sign = -1.0 if h.leg % 2 else 1.0
    mat = [[0.0] * op.dim for _ in range(op.dim)]
    for idx, scalar in op.singlets:
        mat[idx][idx] = float(scalar.evaluate(q))
    for (a, b), block in op.doublets:
        n = block.level
        bullet = _qnum_bullet_float(n, size, q)
        c = q ** k
        r11 = -sign * c * q ** (-n * size) / bullet
        r22 = sign * c * q ** (n * size) / bullet
        off = c * math.sqrt(_qnum_bullet_float(n + 1, size, q)
                            * _qnum_bullet_float(n - 1, size, q)) / bullet
        if inverse:
            det = -c * c
            r11, r22, off = r22 / det, r11 / det, -off / det
        mat[a][a], mat[a][b], mat[b][a], mat[b][b] = r11, off, off, r22
    if inverse:
        for idx, scalar in op.singlets:
            mat[idx][idx] = 1.0 / mat[idx][idx]
    return mat


def matmul_numeric(a: list[list], b: list[list]) -> list[list]:
    n = len(a)
    return [[sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)] for r in range(n)]


def trace_product_numeric(mats: Sequence[list[list]]):
    prod = mats[0]
    for m in mats[1:]:
        prod = matmul_numeric(prod, m)
    return sum(prod[i][i] for i in range(len(prod)))
