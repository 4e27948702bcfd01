"""Partial fraction decomposition through the block-Toeplitz matrix ``T = V @ H_hat``.

For nodes ``lam_j`` with multiplicities ``m_j`` and ``deg p < d``::

    p(x) / prod (x - lam_j)^{m_j}
        = sum_j (a_{j,0} + a_{j,1}(x - lam_j) + ...) / (x - lam_j)^{m_j}

and the coefficients ``a`` are the coordinates of ``p`` in the hat basis
``(x - lam_j)^m * prod_{k != j} (x - lam_k)^{m_k}``. Applying the
evaluation map turns the hat-basis change of coordinates into ``T``, which
is a direct sum of lower-triangular Toeplitz blocks and so is cheap to
invert.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DegreeTooHigh, FieldMismatch, LengthMismatch, ZeroDiagonal
from .field import Scalar, ScalarLike
from .matrix import DenseMatrix
from .nodes import NodeMultiset, cofactor, hat_basis
from .poly import Poly
from .vandermonde import EvalVector, eval_map


@dataclass(frozen=True)
class HatBasisMatrix:
    matrix: DenseMatrix
    nodes: NodeMultiset


@dataclass(frozen=True)
class TMatrix:
    """Block-diagonal matrix; ``blocks[j]`` is the first column of block j."""

    matrix: DenseMatrix
    blocks: tuple[tuple[Scalar, ...], ...]
    nodes: NodeMultiset


@dataclass(frozen=True)
class PFDecomposition:
    """Hat-basis coordinates of a polynomial, ordered block by block."""

    coefficients: tuple[Scalar, ...]
    nodes: NodeMultiset

    def shifted_numerators(self) -> list[tuple[Scalar, ...]]:
        """Per node, numerator coefficients in ascending powers of ``x - lam_j``."""
        out = []
        for start, (_, m) in zip(self.nodes.offsets(), self.nodes.entries):
            out.append(self.coefficients[start:start + m])
        return out

    def numerators(self) -> list[Poly]:
        """Per node, the numerator over ``(x - lam_j)^{m_j}`` in standard form."""
        f = self.nodes.field
        return [
            Poly.from_shifted(coeffs, lam, f)
            for coeffs, (lam, _) in zip(self.shifted_numerators(), self.nodes.entries)
        ]


def toeplitz_lower(first_column: Sequence[Scalar], field) -> DenseMatrix:
    n = len(first_column)
    return DenseMatrix.from_rows(
        [[first_column[i - j] if i >= j else field.zero for j in range(n)] for i in range(n)],
        field,
    )


def toeplitz_inverse_column(first_column: Sequence[Scalar]) -> list[Scalar]:
    """First column of the inverse of a lower-triangular Toeplitz matrix.

    Solves ``sum_{k<=i} t_k s_{i-k} = [i == 0]`` by forward substitution.
    """
    t = list(first_column)
    if t[0].is_zero():
        raise ZeroDiagonal("Toeplitz block has a zero diagonal")
    inv0 = t[0].inverse()
    s = [inv0]
    for i in range(1, len(t)):
        acc = t[0].field.zero
        for k in range(1, i + 1):
            acc = acc + t[k] * s[i - k]
        s.append(-acc * inv0)
    return s


def hat_matrix(nodes: NodeMultiset) -> HatBasisMatrix:
    d = nodes.d
    cols = [h.padded(d) for h in hat_basis(nodes)]
    return HatBasisMatrix(DenseMatrix.from_columns(cols, nodes.field), nodes)


def build_T(nodes: NodeMultiset) -> TMatrix:
    """Block j's first column is the Taylor expansion of the cofactor at ``lam_j``."""
    f = nodes.field
    blocks = []
    for j, (lam, m) in enumerate(nodes.entries):
        t = cofactor(nodes, j).taylor_at(lam)
        blocks.append(tuple(t[r] if r < len(t) else f.zero for r in range(m)))
    matrix = DenseMatrix.block_diag([toeplitz_lower(b, f) for b in blocks], f)
    return TMatrix(matrix, tuple(blocks), nodes)


def invert_T(t: TMatrix) -> DenseMatrix:
    f = t.nodes.field
    return DenseMatrix.block_diag(
        [toeplitz_lower(toeplitz_inverse_column(b), f) for b in t.blocks], f
    )


def _apply_blocks(columns: Sequence[Sequence[Scalar]], values: Sequence[Scalar], nodes: NodeMultiset) -> list[Scalar]:
    """Multiply a block-diagonal lower-Toeplitz matrix, given by first columns, into a vector."""
    out = []
    zero = nodes.field.zero
    for start, col in zip(nodes.offsets(), columns):
        seg = values[start:start + len(col)]
        for i in range(len(col)):
            acc = zero
            for k in range(i + 1):
                acc = acc + col[i - k] * seg[k]
            out.append(acc)
    return out


def solve_T(t: TMatrix, values: EvalVector | Sequence[ScalarLike]) -> list[Scalar]:
    """``T^{-1} @ values`` using only the blocks' first columns."""
    f = t.nodes.field
    vals = [f(v) for v in values]
    if len(vals) != t.nodes.d:
        raise LengthMismatch(f"expected {t.nodes.d} values, got {len(vals)}")
    inv_cols = [toeplitz_inverse_column(b) for b in t.blocks]
    return _apply_blocks(inv_cols, vals, t.nodes)


def decompose(nodes: NodeMultiset, p: Poly) -> PFDecomposition:
    """Partial fraction coefficients of ``p / prod (x - lam_j)^{m_j}``."""
    if p.field != nodes.field:
        raise FieldMismatch(f"polynomial over {p.field}, nodes over {nodes.field}")
    if p.degree > nodes.d - 1:
        raise DegreeTooHigh(f"degree {p.degree} exceeds d - 1 = {nodes.d - 1}")
    coeffs = solve_T(build_T(nodes), eval_map(nodes, p))
    return PFDecomposition(tuple(coeffs), nodes)


def recombine(dec: PFDecomposition) -> Poly:
    nodes = dec.nodes
    if len(dec.coefficients) != nodes.d:
        raise LengthMismatch(f"expected {nodes.d} coefficients, got {len(dec.coefficients)}")
    acc = Poly.zero(nodes.field)
    for c, h in zip(dec.coefficients, hat_basis(nodes)):
        if not c.is_zero():
            acc = acc + h.scale(c)
    return acc
