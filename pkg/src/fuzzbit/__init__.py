"""Fuzzy bits and MV-semiring gates, next to the circuit models they mirror.

The package is organized bottom-up: exact unit-interval scalars and semiring
instances (`algebra`), generic linear algebra over any instance (`linalg`),
the four circuit models (`models`), a line-oriented circuit language
(`circuit`), an independent brute-force law checker (`verify`) and a CLI
(`cli`).
"""

from .algebra import (
    BOOLEAN,
    COMPLEX,
    COMPLEX_TOL,
    FUZZ_MV,
    MAX_MIN,
    ONE,
    PROBABILITY,
    VITERBI,
    ZERO,
    SemiringInstance,
    UnitScalar,
    induced_order,
    make_instance,
    neg,
    odot,
    oplus,
    vee,
    wedge,
)
from .circuit import (
    CircuitProgram,
    SimulationTrace,
    ValidatedCircuit,
    composed_operator,
    equivalence_check,
    lift_gate,
    parse_circuit,
    reversible_circuit_text,
    serialize_circuit,
    simulate,
    validate,
)
from .errors import (
    FuzzbitError,
    InternalCheckError,
    MembershipError,
    ParseError,
    ValidationError,
)
from .linalg import (
    SMatrix,
    SVector,
    add,
    as_vector,
    identity,
    kron_mat,
    kron_vec,
    linear_combination,
    linearly_independent,
    mat_mul,
    mat_vec,
    parse_matrix_text,
    scale,
    serialize_matrix,
)
from .models import (
    MODEL_NAMES,
    GateDescriptor,
    builtin_gate,
    builtin_gate_names,
    gate_violation,
    model_instance,
    state_violation,
)
from .verify import CheckReport, grid_values, run_all

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # algebra
    "UnitScalar", "ZERO", "ONE", "oplus", "wedge", "vee", "odot", "neg",
    "SemiringInstance", "FUZZ_MV", "MAX_MIN", "VITERBI", "BOOLEAN",
    "PROBABILITY", "COMPLEX", "COMPLEX_TOL", "make_instance", "induced_order",
    # linalg
    "SVector", "SMatrix", "add", "scale", "mat_mul", "mat_vec", "kron_mat",
    "kron_vec", "identity", "linear_combination", "linearly_independent",
    "as_vector", "parse_matrix_text", "serialize_matrix",
    # models
    "MODEL_NAMES", "GateDescriptor", "model_instance", "builtin_gate",
    "builtin_gate_names", "gate_violation", "state_violation",
    # circuit
    "CircuitProgram", "ValidatedCircuit", "SimulationTrace", "parse_circuit",
    "serialize_circuit", "validate", "simulate", "lift_gate",
    "composed_operator", "equivalence_check", "reversible_circuit_text",
    # verify
    "CheckReport", "grid_values", "run_all",
    # errors
    "FuzzbitError", "ParseError", "MembershipError", "ValidationError",
    "InternalCheckError",
]
