"""Finite involutory quandles from presentations.

Enumerates the Cayley table of an involutory quandle given by a finite
presentation, builds presentations for the two-bridge-link-with-axis
family L(k, p/q) u C and for planar diagram codes, and verifies the
structural facts (cardinality, components, relation suites, mirror
classification) computationally.
"""

from ._core import (
    CayleyTable,
    CheckResult,
    ComponentReport,
    EnumerationResult,
    FamilyParams,
    GeneratorId,
    IsoResult,
    ParseError,
    PdCode,
    Presentation,
    QuandleOpTable,
    Relation,
    StructureSummary,
    SuiteEntry,
    VerificationReport,
    apply_word,
    check_axioms,
    components,
    enumerate,
    expected_cardinality,
    expected_components,
    full_op_table,
    is_isomorphic,
    lemma_relation_suite,
    mirror_params,
    normalize_params,
    parse_pd,
    parse_presentation,
    quandle_op,
    raw_presentation,
    reduced_presentation,
    secondary_word,
    serialize_presentation,
    structure_summary,
    table_to_dot,
    table_to_json,
    verify_relations,
    wirtinger_presentation,
)
from ._core import __version__

__all__ = [
    "CayleyTable",
    "CheckResult",
    "ComponentReport",
    "EnumerationResult",
    "FamilyParams",
    "GeneratorId",
    "IsoResult",
    "ParseError",
    "PdCode",
    "Presentation",
    "QuandleOpTable",
    "Relation",
    "StructureSummary",
    "SuiteEntry",
    "VerificationReport",
    "apply_word",
    "check_axioms",
    "components",
    "enumerate",
    "expected_cardinality",
    "expected_components",
    "family_quandle",
    "full_op_table",
    "is_isomorphic",
    "lemma_relation_suite",
    "mirror_params",
    "normalize_params",
    "parse_pd",
    "parse_presentation",
    "quandle_from_pd",
    "quandle_op",
    "raw_presentation",
    "reduced_presentation",
    "secondary_word",
    "serialize_presentation",
    "structure_summary",
    "table_to_dot",
    "table_to_json",
    "verify_relations",
    "wirtinger_presentation",
]


def family_quandle(k, p, q, *, raw=False, max_elements=10000, max_steps=10_000_000):
    """Enumerated Cayley table for L(k, p/q) u C.

    Normalizes the parameters, builds the reduced (or raw) presentation
    and enumerates it. Raises RuntimeError if the budget is exhausted.
    """
    params = normalize_params(k, p, q)
    pres = raw_presentation(params) if raw else reduced_presentation(params)
    result = enumerate(pres, max_elements=max_elements, max_steps=max_steps)
    if not result.finite:
        raise RuntimeError(
            f"enumeration budget exhausted at {result.elements_reached} elements"
        )
    return result.table


def quandle_from_pd(code, *, max_elements=10000, max_steps=10_000_000):
    """Enumerated Cayley table for the involutory quandle of a PD code."""
    pres = wirtinger_presentation(parse_pd(code))
    result = enumerate(pres, max_elements=max_elements, max_steps=max_steps)
    if not result.finite:
        raise RuntimeError(
            f"enumeration budget exhausted at {result.elements_reached} elements"
        )
    return result.table
