"""Propositional logic compiled three ways: truth vectors, multilinear
integer polynomials, and diagonal projection-operator observables, plus
fuzzy evaluation on superposed interpretation states."""

from .errors import (
    ArityCapError,
    ArityMismatchError,
    DenseCapError,
    DomainError,
    InvariantViolation,
    LogicError,
    NonInterpretableError,
    ParseError,
    UnboundVariableError,
)
from .formula import (
    App,
    Connective,
    Const,
    Formula,
    Not,
    Var,
    VariableOrder,
    format_formula,
    parse,
    variables,
)
from .multilinear import (
    LagrangeBasis,
    MultilinearPoly,
    connective_poly,
    format_canonical,
    from_minterm_list,
    lagrange_basis,
    minterm_poly,
    select_cofactor,
)
from .multilinear import from_truth_vector as poly_from_truth_vector
from .multilinear import to_truth_vector as poly_to_truth_vector
from .operators import (
    DENSE_CAP,
    DiagonalOperator,
    VonNeumannReport,
    kron_mixed_product_check,
    lift_polynomial,
    logical_projector,
    rank1_projector,
    seed,
    trace_select,
    von_neumann_check,
)
from .operators import from_truth_vector as observable_from_truth_vector
from .states import (
    InterpretationState,
    basis_state,
    expectation,
    from_amplitudes,
    is_model,
)
from .truthtable import (
    ARITY_CAP,
    Interpretation,
    TruthVector,
    eval_formula,
    truth_vector,
)

__all__ = [
    "ARITY_CAP",
    "App",
    "ArityCapError",
    "ArityMismatchError",
    "Connective",
    "Const",
    "DENSE_CAP",
    "DenseCapError",
    "DiagonalOperator",
    "DomainError",
    "Formula",
    "Interpretation",
    "InterpretationState",
    "InvariantViolation",
    "LagrangeBasis",
    "LogicError",
    "MultilinearPoly",
    "NonInterpretableError",
    "Not",
    "ParseError",
    "TruthVector",
    "UnboundVariableError",
    "Var",
    "VariableOrder",
    "VonNeumannReport",
    "basis_state",
    "connective_poly",
    "eval_formula",
    "expectation",
    "format_canonical",
    "format_formula",
    "from_amplitudes",
    "from_minterm_list",
    "is_model",
    "kron_mixed_product_check",
    "lagrange_basis",
    "lift_polynomial",
    "logical_projector",
    "minterm_poly",
    "observable_from_truth_vector",
    "parse",
    "poly_from_truth_vector",
    "poly_to_truth_vector",
    "rank1_projector",
    "seed",
    "select_cofactor",
    "trace_select",
    "truth_vector",
    "variables",
    "von_neumann_check",
]
