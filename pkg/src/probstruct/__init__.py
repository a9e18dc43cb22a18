"""Exact probability intervals for propositional formulas.

Two dual ways of attaching partial probabilistic knowledge to a finite
propositional language, a common interval query, translations in both
directions that preserve every formula's interval, and a brute-force
equivalence checker.
"""

from .errors import (
    DocumentError,
    FormulaSyntaxError,
    LanguageMismatchError,
    NotMeasurableError,
    NotTotalError,
    ProbstructError,
    UndefinedIncidenceError,
    UnknownPropositionError,
    ValidationError,
    WrongKindError,
)
from .logic import (
    Atom,
    Formula,
    FormulaAlgebra,
    Language,
    algebra_member,
    atoms_of,
    basis_of,
    complement,
    conjoin,
    disjoin,
    false_formula,
    format_formula,
    full_algebra,
    generate_algebra,
    parse_formula,
    trivial_algebra,
    true_formula,
)
from .measure import (
    MeasureFn,
    ProbabilitySpace,
    Rational,
    SampleSpace,
    SetAlgebra,
    WorldSet,
    complement_measure,
    discrete_algebra,
    format_rational,
    inner_measure,
    measure,
    parse_rational,
)
from .structures import (
    IncidenceMap,
    Interval,
    ProbabilityStructure,
    StructureKind,
    ValidationReport,
    bel,
    incidence,
    interval,
    is_total,
    lower_incidence,
    mobius_mass,
    plb,
    upper_incidence,
    validate,
)
from .translate import (
    EquivalenceReport,
    GenParams,
    ds_to_ic,
    equivalent,
    ic_to_ds,
    random_ic,
    random_total_ds,
    round_trip_check,
)
from .docio import from_json, load, save, to_json
from .fixtures import FIXTURES, coats_ds, coats_ic

__version__ = "0.1.0"

__all__ = [
    "Atom",
    "DocumentError",
    "EquivalenceReport",
    "FIXTURES",
    "Formula",
    "FormulaAlgebra",
    "FormulaSyntaxError",
    "GenParams",
    "IncidenceMap",
    "Interval",
    "Language",
    "LanguageMismatchError",
    "MeasureFn",
    "NotMeasurableError",
    "NotTotalError",
    "ProbabilitySpace",
    "ProbabilityStructure",
    "ProbstructError",
    "Rational",
    "SampleSpace",
    "SetAlgebra",
    "StructureKind",
    "UndefinedIncidenceError",
    "UnknownPropositionError",
    "ValidationError",
    "ValidationReport",
    "WorldSet",
    "WrongKindError",
    "algebra_member",
    "atoms_of",
    "basis_of",
    "bel",
    "coats_ds",
    "coats_ic",
    "complement",
    "complement_measure",
    "conjoin",
    "discrete_algebra",
    "disjoin",
    "ds_to_ic",
    "equivalent",
    "false_formula",
    "format_formula",
    "format_rational",
    "from_json",
    "full_algebra",
    "generate_algebra",
    "ic_to_ds",
    "incidence",
    "inner_measure",
    "interval",
    "is_total",
    "load",
    "lower_incidence",
    "measure",
    "mobius_mass",
    "parse_formula",
    "parse_rational",
    "plb",
    "random_ic",
    "random_total_ds",
    "round_trip_check",
    "save",
    "to_json",
    "trivial_algebra",
    "true_formula",
    "upper_incidence",
    "validate",
]
