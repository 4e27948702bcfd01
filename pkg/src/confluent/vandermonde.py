"""Confluent Vandermonde matrices, the evaluation map, and their LU factors."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeTooHigh, FieldMismatch
from .field import Field, Scalar, ScalarLike, binomial
from .matrix import DenseMatrix, invert_upper_triangular
from .nodes import NodeMultiset, newton_basis
from .poly import Poly


@dataclass(frozen=True)
class ConfluentVandermonde:
    matrix: DenseMatrix
    nodes: NodeMultiset


@dataclass(frozen=True)
class EvalVector:
    """Hasse-derivative evaluations ``D^(r) p(lam_j)``, block j then slot r."""

    values: tuple[Scalar, ...]
    nodes: NodeMultiset

    def __post_init__(self):
        if len(self.values) != self.nodes.d:
            raise ValueError(f"expected {self.nodes.d} values, got {len(self.values)}")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i: int) -> Scalar:
        return self.values[i]

    def block(self, j: int) -> tuple[Scalar, ...]:
        start = self.nodes.offsets()[j]
        return self.values[start:start + self.nodes.entries[j][1]]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)


@dataclass(frozen=True)
class LUFactors:
    """``V = L @ U`` with ``U_inv`` the Newton-basis coefficient matrix."""

    L: DenseMatrix
    U: DenseMatrix
    U_inv: DenseMatrix


def build_block(lam: ScalarLike, m: int, d: int, field: Field | None = None) -> DenseMatrix:
    """The ``m x d`` block with entry ``(r, i) = C(i, r) * lam^(i-r)``.

    ``field`` may be omitted when ``lam`` is already a Scalar.
    """
    if not 1 <= m <= d:
        raise ValueError(f"need 1 <= m <= d, got m={m}, d={d}")
    if field is None:
        if not isinstance(lam, Scalar):
            raise TypeError("field is required unless lam is a Scalar")
        field = lam.field
    lam = field(lam)
    powers = [field.one]
    for _ in range(d - 1):
        powers.append(powers[-1] * lam)
    rows = [
        [binomial(i, r, field) * powers[i - r] if i >= r else field.zero for i in range(d)]
        for r in range(m)
    ]
    return DenseMatrix.from_rows(rows, field)


def build(nodes: NodeMultiset) -> ConfluentVandermonde:
    d, f = nodes.d, nodes.field
    rows: list[list[Scalar]] = []
    for lam, m in nodes:
        rows.extend(build_block(lam, m, d, f).tolist())
    return ConfluentVandermonde(DenseMatrix.from_rows(rows, f), nodes)


def eval_map(nodes: NodeMultiset, p: Poly) -> EvalVector:
    """Stack ``D^(r) p(lam_j)`` for ``r < m_j`` over the nodes.

    Uses Taylor coefficients at each node, so no Hasse derivative is formed
    explicitly.
    """
    if p.field != nodes.field:
        raise FieldMismatch(f"polynomial over {p.field}, nodes over {nodes.field}")
    if p.degree > nodes.d - 1:
        raise DegreeTooHigh(f"degree {p.degree} exceeds d - 1 = {nodes.d - 1}")
    return eval_values(nodes, p)


def eval_values(nodes: NodeMultiset, p: Poly) -> EvalVector:
    """Like :func:`eval_map` without the degree bound."""
    zero = nodes.field.zero
    out: list[Scalar] = []
    for lam, m in nodes:
        t = p.taylor_at(lam)
        out.extend(t[r] if r < len(t) else zero for r in range(m))
    return EvalVector(tuple(out), nodes)


def lu_factorize(nodes: NodeMultiset) -> LUFactors:
    """LU factors assembled from the Newton basis, without elimination.

    Column k of ``U_inv`` is the coefficient vector of ``p_k`` and column k
    of ``L`` is its evaluation vector, so ``V @ U_inv == L``.
    """
    d, f = nodes.d, nodes.field
    basis = newton_basis(nodes)
    u_inv = DenseMatrix.from_columns([p.padded(d) for p in basis], f)
    lower = DenseMatrix.from_columns([eval_map(nodes, p).values for p in basis], f)
    return LUFactors(lower, invert_upper_triangular(u_inv), u_inv)


def det_formula(nodes: NodeMultiset) -> Scalar:
    """``prod_{i<j} (lam_j - lam_i)^(m_i m_j)`` in entry order.

    Reordering the entries can flip the sign when an exponent is odd.
    """
    det = nodes.field.one
    entries = nodes.entries
    for j in range(len(entries)):
        for i in range(j):
            det = det * (entries[j][0] - entries[i][0]) ** (entries[i][1] * entries[j][1])
    return det

