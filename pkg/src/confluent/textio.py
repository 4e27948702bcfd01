"""Text and JSON formats for fields, nodes, polynomials, vectors and matrices.

Text syntax:

* field selector: ``q`` or ``gf:<p>``
* scalar: ``a`` or ``a/b``; over GF(p) any integer is reduced mod p
* nodes: ``1,3^2,6^2`` (node or node^multiplicity)
* polynomial / vector: comma-separated, ascending degree (``54,-99,57,-13,1``)
* residues: polynomials separated by ``;``
* matrix: rows separated by ``;``, entries by ``,`` (``1,0;1,2``)

In JSON every scalar is a string, so rationals survive exactly.
"""

from __future__ import annotations

from typing import Any, Sequence

from .errors import ParseError
from .field import Field, Scalar
from .matrix import DenseMatrix
from .nodes import NodeMultiset, new_multiset
from .poly import Poly


def _split(text: str, sep: str) -> list[str]:
    parts = [t.strip() for t in text.strip().split(sep)]
    if any(not t for t in parts):
        raise ParseError(f"empty item in {text!r}")
    return parts


def parse_nodes(text: str, field: Field) -> NodeMultiset:
    if not text.strip():
        raise ParseError("empty node list")
    entries = []
    for tok in _split(text, ","):
        node, _, mult = tok.partition("^")
        try:
            m = int(mult) if mult else 1
        except ValueError:
            raise ParseError(f"bad multiplicity in {tok!r}") from None
        if m < 1:
            raise ParseError(f"multiplicity must be positive in {tok!r}")
        entries.append((node.strip(), m))
    return new_multiset(entries, field)


def parse_vector(text: str, field: Field) -> list[Scalar]:
    if not text.strip():
        return []
    return [field.parse_scalar(t) for t in _split(text, ",")]


def parse_poly(text: str, field: Field) -> Poly:
    return Poly(parse_vector(text, field), field)


def parse_residues(text: str, field: Field) -> list[Poly]:
    return [parse_poly(t, field) for t in text.strip().split(";")]


def parse_matrix(text: str, field: Field) -> DenseMatrix:
    return DenseMatrix.from_rows([parse_vector(r, field) for r in _split(text, ";")], field)


def format_vector(values: Sequence[Scalar]) -> str:
    return ",".join(str(v) for v in values)


def format_poly(p: Poly) -> str:
    return str(p)


def format_matrix(a: DenseMatrix, row_sep: str = "\n") -> str:
    return row_sep.join(format_vector(a.row(i)) for i in range(a.rows))


def format_node(lam: Scalar, m: int) -> str:
    return str(lam) if m == 1 else f"{lam}^{m}"


# JSON


def scalar_to_json(s: Scalar) -> str:
    return str(s)


def vector_to_json(values: Sequence[Scalar]) -> list[str]:
    return [str(v) for v in values]


def poly_to_json(p: Poly) -> list[str]:
    return vector_to_json(p.coeffs)


def matrix_to_json(a: DenseMatrix) -> list[list[str]]:
    return [vector_to_json(a.row(i)) for i in range(a.rows)]


def nodes_to_json(nodes: NodeMultiset) -> list[list[Any]]:
    return [[str(lam), m] for lam, m in nodes.entries]


def envelope(nodes: NodeMultiset, result: dict) -> dict:
    return {"field": nodes.field.selector, "nodes": nodes_to_json(nodes), "result": result}


def field_from_json(doc: dict) -> Field:
    return Field.parse(doc["field"])


def nodes_from_json(data: list, field: Field) -> NodeMultiset:
    return new_multiset([(str(node), int(m)) for node, m in data], field)


def vector_from_json(data: Sequence[str], field: Field) -> list[Scalar]:
    return [field.parse_scalar(str(x)) for x in data]


def poly_from_json(data: Sequence[str], field: Field) -> Poly:
    return Poly(vector_from_json(data, field), field)


def matrix_from_json(data: Sequence[Sequence[str]], field: Field) -> DenseMatrix:
    return DenseMatrix.from_rows([vector_from_json(r, field) for r in data], field)
