"""Hermite interpolation and the structured inverse of the confluent Vandermonde matrix."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import FieldMismatch, LengthMismatch, ResidueDegreeTooHigh
from .field import ScalarLike
from .matrix import DenseMatrix
from .nodes import NodeMultiset, hat_basis
from .pfd import build_T, toeplitz_inverse_column
from .poly import Poly
from .vandermonde import EvalVector


@dataclass(frozen=True)
class HermiteBasis:
    """``h_{j,m}`` in block order; the evaluation vector of each is a unit vector."""

    polys: tuple[Poly, ...]
    nodes: NodeMultiset

    def __getitem__(self, jm: tuple[int, int]) -> Poly:
        j, m = jm
        if not 0 <= m < self.nodes.entries[j][1]:
            raise IndexError(jm)
        return self.polys[self.nodes.offsets()[j] + m]

    def __iter__(self):
        return iter(self.polys)

    def __len__(self) -> int:
        return len(self.polys)

    def matrix(self) -> DenseMatrix:
        d = self.nodes.d
        return DenseMatrix.from_columns([h.padded(d) for h in self.polys], self.nodes.field)


def hermite_basis(nodes: NodeMultiset) -> HermiteBasis:
    """Columns of ``H_hat @ T^{-1}`` as polynomials.

    Within block j, ``h_{j,m} = sum_{m' >= m} s_{m'-m} * hhat_{j,m'}`` where
    ``s`` is the first column of the inverse Toeplitz block.
    """
    hats = hat_basis(nodes)
    t = build_T(nodes)
    out: list[Poly] = []
    for start, block in zip(nodes.offsets(), t.blocks):
        s = toeplitz_inverse_column(block)
        mj = len(block)
        for m in range(mj):
            acc = Poly.zero(nodes.field)
            for mp in range(m, mj):
                acc = acc + hats[start + mp].scale(s[mp - m])
            out.append(acc)
    return HermiteBasis(tuple(out), nodes)


def vandermonde_inverse(nodes: NodeMultiset) -> DenseMatrix:
    return hermite_basis(nodes).matrix()


def interpolate(nodes: NodeMultiset, values: EvalVector | Sequence[ScalarLike], basis: HermiteBasis | None = None) -> Poly:
    """The unique polynomial of degree < d whose evaluation vector is ``values``."""
    if isinstance(values, EvalVector) and values.nodes != nodes:
        raise FieldMismatch("evaluation vector belongs to a different node multiset")
    f = nodes.field
    vals = [f(v) for v in values]
    if len(vals) != nodes.d:
        raise LengthMismatch(f"expected {nodes.d} values, got {len(vals)}")
    if basis is None:
        basis = hermite_basis(nodes)
    acc = Poly.zero(f)
    for v, h in zip(vals, basis):
        if not v.is_zero():
            acc = acc + h.scale(v)
    return acc


def crt_reconstruct(nodes: NodeMultiset, residues: Sequence[Poly]) -> Poly:
    """The unique ``p`` with ``deg p < d`` and ``p = residue_j mod (x - lam_j)^{m_j}``."""
    if len(residues) != nodes.q:
        raise LengthMismatch(f"expected {nodes.q} residues, got {len(residues)}")
    f = nodes.field
    values = []
    for r, (lam, m) in zip(residues, nodes.entries):
        if r.field != f:
            raise FieldMismatch(f"residue over {r.field}, nodes over {f}")
        if r.degree >= m:
            raise ResidueDegreeTooHigh(
                f"residue modulo (x - {lam})^{m} must have degree < {m}, got {r.degree}"
            )
        t = r.taylor_at(lam)
        values.extend(t[i] if i < len(t) else f.zero for i in range(m))
    return interpolate(nodes, values)
