"""Exact confluent Vandermonde toolkit over the rationals and prime fields."""

from .errors import (
    ConfluentError,
    DegreeTooHigh,
    DimensionMismatch,
    DivisionByZero,
    DuplicateNode,
    EmptyMultiset,
    FieldMismatch,
    InternalConsistencyError,
    LengthMismatch,
    ParseError,
    PreconditionViolation,
    ResidueDegreeTooHigh,
    SingularMatrix,
    ZeroDiagonal,
)
from .field import Field, Scalar, binomial
from .matrix import (
    DenseMatrix,
    det_elimination,
    inverse_elimination,
    solve_lower_triangular,
    solve_upper_triangular,
)
from .nodes import NodeMultiset, hat_basis, new_multiset, newton_basis
from .poly import Poly, from_roots, hasse_derivative, taylor_at
from .vandermonde import (
    ConfluentVandermonde,
    EvalVector,
    LUFactors,
    build,
    build_block,
    det_formula,
    eval_map,
    lu_factorize,
)
from .pfd import HatBasisMatrix, PFDecomposition, TMatrix, build_T, decompose, hat_matrix, invert_T, recombine
from .hermite import HermiteBasis, crt_reconstruct, hermite_basis, interpolate, vandermonde_inverse
from .companion import (
    CompanionMatrix,
    JordanForm,
    Jordanization,
    companion,
    integer_case_check,
    integrality_report,
    jordan,
    jordanize,
    mulx_mod,
)

QQ = Field.rationals()


def GF(p: int) -> Field:
    return Field.gf(p)
