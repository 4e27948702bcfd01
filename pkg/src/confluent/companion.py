"""Companion matrices of split polynomials and their Jordan forms.

With ``p = prod (x - lam_j)^{m_j}`` and ``C`` its companion matrix, the
confluent Vandermonde matrix conjugates ``C`` into block-diagonal Jordan
form: ``V @ C @ V^{-1} = J``. Jordan blocks here are lower triangular,
with ones on the subdiagonal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeTooHigh, FieldMismatch, InternalConsistencyError, PreconditionViolation
from .field import Scalar
from .hermite import vandermonde_inverse
from .matrix import DenseMatrix
from .nodes import NodeMultiset
from .poly import Poly
from .vandermonde import build, det_formula


@dataclass(frozen=True)
class CompanionMatrix:
    matrix: DenseMatrix
    monic_poly: Poly
    nodes: NodeMultiset


@dataclass(frozen=True)
class JordanForm:
    matrix: DenseMatrix
    blocks: tuple[tuple[Scalar, int], ...]


@dataclass(frozen=True)
class Jordanization:
    V: DenseMatrix
    C: DenseMatrix
    H: DenseMatrix
    J: JordanForm
    certificate: bool


def monic_poly(nodes: NodeMultiset) -> Poly:
    return Poly.from_roots(nodes.entries, nodes.field)


def companion_of(p: Poly) -> DenseMatrix:
    """Companion matrix of a monic ``p``: subdiagonal ones, last column ``-c_i``."""
    if not p.is_monic() or p.degree < 1:
        raise ValueError("companion matrix needs a monic polynomial of degree >= 1")
    d, f = p.degree, p.field
    rows = [[f.zero] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = f.one
    for i in range(d):
        rows[i][d - 1] = -p.coeffs[i]
    return DenseMatrix.from_rows(rows, f)


def companion(nodes: NodeMultiset) -> CompanionMatrix:
    p = monic_poly(nodes)
    return CompanionMatrix(companion_of(p), p, nodes)


def jordan_block(lam: Scalar, m: int) -> DenseMatrix:
    f = lam.field
    return DenseMatrix.from_rows(
        [[lam if i == j else f.one if i == j + 1 else f.zero for j in range(m)] for i in range(m)], f
    )


def jordan(nodes: NodeMultiset) -> JordanForm:
    blocks = [jordan_block(lam, m) for lam, m in nodes.entries]
    return JordanForm(DenseMatrix.block_diag(blocks, nodes.field), nodes.entries)


def jordanize(nodes: NodeMultiset) -> Jordanization:
    """Compute ``V``, ``C``, ``H = V^{-1}``, ``J`` and check ``V @ C @ H == J`` exactly.

    Raises InternalConsistencyError if the check fails; for a valid multiset
    that can only mean a bug.
    """
    v = build(nodes).matrix
    c = companion(nodes).matrix
    h = vandermonde_inverse(nodes)
    j = jordan(nodes)
    ok = v @ c @ h == j.matrix
    if not ok:
        raise InternalConsistencyError(f"V C V^-1 != J for nodes {nodes}")
    return Jordanization(v, c, h, j, ok)


def mulx_mod(nodes: NodeMultiset, f: Poly) -> Poly:
    """``x * f mod p`` for the monic ``p`` with root multiset ``nodes``."""
    if f.field != nodes.field:
        raise FieldMismatch(f"polynomial over {f.field}, nodes over {nodes.field}")
    if f.degree > nodes.d - 1:
        raise DegreeTooHigh(f"degree {f.degree} exceeds d - 1 = {nodes.d - 1}")
    xf = f.mul_linear(0)
    return xf % monic_poly(nodes)


@dataclass(frozen=True)
class IntegralityReport:
    det: Scalar
    V: bool
    C: bool
    H: bool
    J: bool

    @property
    def all_integral(self) -> bool:
        return self.V and self.C and self.H and self.J


def integrality_report(nodes: NodeMultiset) -> IntegralityReport:
    """Which of ``V, C, V^{-1}, J`` have only integer entries (rational nodes)."""
    if not nodes.field.is_rational:
        raise PreconditionViolation("integrality only makes sense over Q")
    return IntegralityReport(
        det=det_formula(nodes),
        V=build(nodes).matrix.is_integral(),
        C=companion(nodes).matrix.is_integral(),
        H=vandermonde_inverse(nodes).is_integral(),
        J=jordan(nodes).matrix.is_integral(),
    )


def integer_case_check(nodes: NodeMultiset) -> bool:
    """For one integer node, or two adjacent integer nodes: det V = +-1 and V^{-1} integral.

    Raises PreconditionViolation for any other shape.
    """
    if not nodes.field.is_rational:
        raise PreconditionViolation("integer case needs nodes over Q")
    if not all(lam.is_integer() for lam in nodes.nodes):
        raise PreconditionViolation("integer case needs integer nodes")
    if nodes.q > 2:
        raise PreconditionViolation("integer case needs at most two distinct nodes")
    if nodes.q == 2:
        diff = nodes.nodes[1] - nodes.nodes[0]
        if diff != 1 and diff != -1:
            raise PreconditionViolation("integer case needs the two nodes to differ by 1")
    rep = integrality_report(nodes)
    return (rep.det == 1 or rep.det == -1) and rep.H
