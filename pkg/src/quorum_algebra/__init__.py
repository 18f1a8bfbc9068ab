"""Boolean polynomial algebra for deciding quorum system properties.

The library decides consistency, availability and the three/four-set cover
conditions for classical, dissemination and masking quorum systems two
independent ways: by Groebner bases of Boolean polynomial ideals whose
standard monomial counts equal predicted cardinalities, and by a
brute-force set oracle for cross-validation.
"""

from .algebra import (
    BLOCKS,
    BlockLexOrder,
    Monomial,
    ParseError,
    Polynomial,
    Variable,
    format_polynomial,
    parse_polynomial,
)
from .checkers import (
    ThresholdError,
    VariableBudgetError,
    Verdict,
    check_availability,
    check_consistency_classical,
    check_consistency_dissemination,
    check_consistency_masking,
    check_q3,
    check_q4,
    threshold_system,
)
from .encoding import (
    CharPoly,
    ProcessSubset,
    SetSystem,
    char_poly,
    containment_poly,
    cover_poly,
    downset_poly,
    fixed_containment_poly,
    overlap_poly,
    phi,
    phi_inv,
    system_char_poly,
    uncovered_meet_poly,
)
from .groebner import (
    GroebnerCertificate,
    IdealBasis,
    buchberger,
    chain_criterion,
    coprime_criterion,
    elimination_subbasis,
    field_polynomials,
    normal_form,
    reduce_once,
    spoly,
    standard_monomial_count,
    variety_enumerate,
)
from .oracle import (
    OracleReport,
    all_antichain_systems,
    antichain_check,
    fstar_enumerate,
    oracle_availability,
    oracle_consistency_classical,
    oracle_consistency_dissemination,
    oracle_consistency_masking,
    oracle_q3,
    oracle_q4,
)

__all__ = [
    "BLOCKS",
    "BlockLexOrder",
    "CharPoly",
    "GroebnerCertificate",
    "IdealBasis",
    "Monomial",
    "OracleReport",
    "ParseError",
    "Polynomial",
    "ProcessSubset",
    "SetSystem",
    "ThresholdError",
    "Variable",
    "VariableBudgetError",
    "Verdict",
    "all_antichain_systems",
    "antichain_check",
    "buchberger",
    "chain_criterion",
    "char_poly",
    "check_availability",
    "check_consistency_classical",
    "check_consistency_dissemination",
    "check_consistency_masking",
    "check_q3",
    "check_q4",
    "containment_poly",
    "coprime_criterion",
    "cover_poly",
    "downset_poly",
    "elimination_subbasis",
    "field_polynomials",
    "fixed_containment_poly",
    "format_polynomial",
    "fstar_enumerate",
    "normal_form",
    "oracle_availability",
    "oracle_consistency_classical",
    "oracle_consistency_dissemination",
    "oracle_consistency_masking",
    "oracle_q3",
    "oracle_q4",
    "overlap_poly",
    "parse_polynomial",
    "phi",
    "phi_inv",
    "reduce_once",
    "spoly",
    "standard_monomial_count",
    "system_char_poly",
    "threshold_system",
    "uncovered_meet_poly",
    "variety_enumerate",
]
