"""Node multisets and the polynomial bases generated from them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DuplicateNode, EmptyMultiset, FieldMismatch
from .field import Field, Scalar, ScalarLike
from .poly import Poly


@dataclass(frozen=True)
class NodeMultiset:
    """Distinct nodes with positive multiplicities, in caller-supplied order.

    The entry order fixes every row and column ordering downstream. Use
    :func:`new_multiset` to construct one; it validates distinctness in the
    field itself, so ``{1, 3}`` is rejected over GF(2).
    """

    entries: tuple[tuple[Scalar, int], ...]
    field: Field

    @property
    def q(self) -> int:
        return len(self.entries)

    @property
    def d(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def nodes(self) -> tuple[Scalar, ...]:
        return tuple(lam for lam, _ in self.entries)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.entries)

    def __iter__(self) -> Iterator[tuple[Scalar, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return self.q

    def offsets(self) -> list[int]:
        """Starting row/column index of each node's block."""
        out, acc = [], 0
        for _, m in self.entries:
            out.append(acc)
            acc += m
        return out

    def slots(self) -> list[tuple[int, int]]:
        """``(j, r)`` for every slot in block order, j 0-based."""
        return [(j, r) for j, (_, m) in enumerate(self.entries) for r in range(m)]

    def sequence(self) -> list[Scalar]:
        """Each node repeated by its multiplicity, in entry order."""
        return [lam for lam, m in self.entries for _ in range(m)]

    def __str__(self) -> str:
        return ",".join(str(lam) if m == 1 else f"{lam}^{m}" for lam, m in self.entries)


def new_multiset(entries: Iterable[tuple[ScalarLike | str, int]], field: Field) -> NodeMultiset:
    """Validate ``(node, multiplicity)`` pairs into a :class:`NodeMultiset`.

    Raises EmptyMultiset, DuplicateNode, FieldMismatch, or ValueError for a
    nonpositive multiplicity.
    """
    seen: list[tuple[Scalar, str]] = []
    out = []
    for raw, m in entries:
        if isinstance(raw, Scalar) and raw.field != field:
            raise FieldMismatch(f"node {raw} lies in {raw.field}, not {field}")
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"multiplicity must be a positive integer, got {m!r}")
        lam = field(raw)
        label = raw.strip() if isinstance(raw, str) else str(raw)
        for other, other_label in seen:
            if (lam - other).is_zero():
                if label == other_label:
                    raise DuplicateNode(f"duplicate node: {label} in {field}")
                raise DuplicateNode(f"duplicate node: {label} ≡ {other_label} in {field}")
        seen.append((lam, label))
        out.append((lam, m))
    if not out:
        raise EmptyMultiset("node multiset must contain at least one node")
    return NodeMultiset(tuple(out), field)


def newton_basis(nodes: NodeMultiset) -> list[Poly]:
    """``p_0 = 1, p_{k+1} = p_k * (x - lam)`` walking the repeated node sequence.

    Returns ``p_0 .. p_{d-1}``; ``p_i`` is monic of degree ``i``.
    """
    seq = nodes.sequence()
    basis = [Poly.constant(1, nodes.field)]
    for lam in seq[:-1]:
        basis.append(basis[-1].mul_linear(lam))
    return basis


def cofactor(nodes: NodeMultiset, j: int) -> Poly:
    """``prod_{k != j} (x - lam_k)^{m_k}``."""
    return Poly.from_roots(
        (entry for k, entry in enumerate(nodes.entries) if k != j), nodes.field
    )


def hat_basis(nodes: NodeMultiset) -> list[Poly]:
    """``(x - lam_j)^m * cofactor_j`` for each node j and m < m_j, flattened."""
    out = []
    for j, (lam, mj) in enumerate(nodes.entries):
        h = cofactor(nodes, j)
        for _ in range(mj):
            out.append(h)
            h = h.mul_linear(lam)
    return out
