"""Wronskians, ramification and subfield descent on P^1 over finite fields.

The package answers, constructively and by exhaustive search at small
field sizes, when a rational function with rational ramification points
must be equivalent to one defined over the base field: always in
characteristic 3 for simple ramification, and essentially never otherwise
in characteristics 2 and 3, with explicit counterexamples for every finite
field of characteristic greater than 3.
"""

from .construct import (
    CounterexampleWitness,
    FamilyWitness,
    constant_wronskian_batch,
    constant_wronskian_member,
    cubic_family,
    fourth_point_image,
    fourth_ramification_point,
    search_counterexample,
)
from .gf import (
    FieldElement,
    FiniteField,
    embed,
    enumerate_field,
    make_field,
    project_to_subfield,
)
from .parse import parse_element, parse_field, parse_point, parse_ratfunc
from .poly import (
    Factorization,
    Polynomial,
    factor,
    from_roots,
    gcd,
    is_irreducible,
    powmod,
    random_irreducible,
    roots_in_field,
    squarefree_decomposition,
)
from .ratfunc import (
    INFINITY,
    MobiusTransformation,
    ProjectivePoint,
    RamificationProfile,
    RationalFunction,
    StandardForm,
    embed_ratfunc,
    make_ratfunc,
)
from .scan import (
    ClassRecord,
    EnumerationReport,
    Violation,
    classify_degree3,
    enumerate_classes,
    verify_char3_simple,
    verify_low_char_negative,
    wronskian_fiber,
)

__all__ = [
    "CounterexampleWitness",
    "FamilyWitness",
    "constant_wronskian_batch",
    "constant_wronskian_member",
    "cubic_family",
    "fourth_point_image",
    "fourth_ramification_point",
    "search_counterexample",
    "FieldElement",
    "FiniteField",
    "embed",
    "enumerate_field",
    "make_field",
    "project_to_subfield",
    "parse_element",
    "parse_field",
    "parse_point",
    "parse_ratfunc",
    "Factorization",
    "Polynomial",
    "factor",
    "from_roots",
    "gcd",
    "is_irreducible",
    "powmod",
    "random_irreducible",
    "roots_in_field",
    "squarefree_decomposition",
    "INFINITY",
    "MobiusTransformation",
    "ProjectivePoint",
    "RamificationProfile",
    "RationalFunction",
    "StandardForm",
    "embed_ratfunc",
    "make_ratfunc",
    "ClassRecord",
    "EnumerationReport",
    "Violation",
    "classify_degree3",
    "enumerate_classes",
    "verify_char3_simple",
    "verify_low_char_negative",
    "wronskian_fiber",
]
