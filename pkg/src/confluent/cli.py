"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (one-line diagnostic on
stderr), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .companion import jordanize
from . import hermite, pfd, vandermonde
from .errors import ConfluentError, LengthMismatch, PreconditionViolation
from .field import Field
from .matrix import DenseMatrix
from .nodes import NodeMultiset
from .textio import (
    envelope,
    format_matrix,
    format_node,
    format_vector,
    matrix_to_json,
    parse_nodes,
    parse_poly,
    parse_residues,
    parse_vector,
    poly_to_json,
    vector_to_json,
)

MAX_D = 64

COMMANDS = {
    "build": "print the confluent Vandermonde matrix V",
    "det": "print det V from the closed product formula",
    "lu": "print L, U and U^-1 with V = L U",
    "eval": "print the evaluation vector of --poly",
    "interp": "print the polynomial with evaluation vector --values",
    "pfd": "print partial fraction numerators of --poly over prod (x - lam)^m",
    "crt": "print the polynomial with the given --residues modulo (x - lam_j)^m_j",
    "jordan": "print V, C, J and the certificate V C V^-1 = J",
    "hermite": "print V^-1 and the Hermite interpolation polynomials",
}

PAYLOAD = {"eval": "poly", "pfd": "poly", "interp": "values", "crt": "residues"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="confluent", description="Exact confluent Vandermonde toolkit over Q and GF(p)."
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, help_text in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--field", default="q", help="'q' (default) or 'gf:<p>'")
        p.add_argument("--nodes", required=True, help="node spec, e.g. 1,3^2,6^2")
        payload = PAYLOAD.get(name)
        if payload == "poly":
            p.add_argument("--poly", required=True, help="ascending coefficients, or '-' for stdin")
        elif payload == "values":
            p.add_argument("--values", required=True, help="evaluations in node-block order, or '-'")
        elif payload == "residues":
            p.add_argument("--residues", required=True, help="one polynomial per node, ';'-separated, or '-'")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    return parser


def _payload(text: str, stdin) -> str:
    return stdin.read().strip() if text.strip() == "-" else text


def _sections(*pairs: tuple[str, DenseMatrix]) -> str:
    return "\n\n".join(f"{label}:\n{format_matrix(m)}" for label, m in pairs)


def execute(args: argparse.Namespace, stdin=None) -> tuple[NodeMultiset, str, dict]:
    """Run one parsed request; return ``(nodes, text, json_result)``.

    Raises ConfluentError subclasses on domain errors.
    """
    stdin = stdin if stdin is not None else sys.stdin
    field = Field.parse(args.field)
    nodes = parse_nodes(args.nodes, field)
    if nodes.d > MAX_D:
        raise PreconditionViolation(f"too many nodes: d = {nodes.d} exceeds {MAX_D}")
    cmd = args.command

    if cmd == "build":
        v = vandermonde.build(nodes).matrix
        return nodes, format_matrix(v), {"V": matrix_to_json(v)}

    if cmd == "det":
        det = vandermonde.det_formula(nodes)
        return nodes, str(det), {"det": str(det)}

    if cmd == "lu":
        lu = vandermonde.lu_factorize(nodes)
        text = _sections(("L", lu.L), ("U", lu.U), ("U^-1", lu.U_inv))
        return nodes, text, {"L": matrix_to_json(lu.L), "U": matrix_to_json(lu.U), "U_inv": matrix_to_json(lu.U_inv)}

    if cmd == "eval":
        p = parse_poly(_payload(args.poly, stdin), field)
        ev = vandermonde.eval_map(nodes, p)
        return nodes, format_vector(ev.values), {"values": vector_to_json(ev.values)}

    if cmd == "interp":
        values = parse_vector(_payload(args.values, stdin), field)
        if len(values) != nodes.d:
            raise LengthMismatch(f"expected {nodes.d} values for d = {nodes.d}, got {len(values)}")
        p = hermite.interpolate(nodes, values)
        return nodes, str(p), {"poly": poly_to_json(p)}

    if cmd == "pfd":
        p = parse_poly(_payload(args.poly, stdin), field)
        dec = pfd.decompose(nodes, p)
        lines, blocks = [], []
        for (lam, m), shifted, num in zip(nodes.entries, dec.shifted_numerators(), dec.numerators()):
            lines.append(f"{format_node(lam, m)}: {format_vector(shifted)}")
            blocks.append(
                {
                    "node": str(lam),
                    "multiplicity": m,
                    "numerator_shifted": vector_to_json(shifted),
                    "numerator": poly_to_json(num),
                }
            )
        return nodes, "\n".join(lines), {"coefficients": vector_to_json(dec.coefficients), "blocks": blocks}

    if cmd == "crt":
        residues = parse_residues(_payload(args.residues, stdin), field)
        p = hermite.crt_reconstruct(nodes, residues)
        return nodes, str(p), {"poly": poly_to_json(p)}

    if cmd == "jordan":
        jz = jordanize(nodes)
        text = _sections(("V", jz.V), ("C", jz.C), ("J", jz.J.matrix))
        text += f"\n\ncertificate: {'true' if jz.certificate else 'false'}"
        return nodes, text, {
            "V": matrix_to_json(jz.V),
            "C": matrix_to_json(jz.C),
            "J": matrix_to_json(jz.J.matrix),
            "certificate": jz.certificate,
        }

    if cmd == "hermite":
        basis = hermite.hermite_basis(nodes)
        h = basis.matrix()
        labels = [f"h[{j + 1},{m}]" for j, m in nodes.slots()]
        lines = [f"{lab}: {poly}" for lab, poly in zip(labels, basis.polys)]
        text = _sections(("H", h)) + "\n\n" + "\n".join(lines)
        return nodes, text, {"H": matrix_to_json(h), "basis": [poly_to_json(p) for p in basis.polys]}

    raise AssertionError(f"unhandled command {cmd!r}")


def main(argv: Sequence[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        nodes, text, result = execute(args, stdin)
    except ConfluentError as exc:
        msg = " ".join(str(exc).split()) or type(exc).__name__
        print(msg, file=stderr)
        return 1
    if args.json:
        print(json.dumps(envelope(nodes, result)), file=stdout)
    else:
        print(text, file=stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
