"""Generic nominal subtyping constructed from a declared subclassing relation."""

from .construct import SubtypingApprox, build, containment_poset, s0, step
from .errors import OrdgenError
from .judge import check_galois, contains, f_subtypes, f_supertypes, is_admittable, is_valid, subtype
from .operators import ArgPoset, int_op, ppp, wc
from .poset import Poset, bounds, chain, is_embedding, transitive_reduction
from .typesys import ClassTable, erasure, free_type, parse_class_table, parse_type, render

__version__ = "0.1.0"

__all__ = [
    "ArgPoset",
    "ClassTable",
    "OrdgenError",
    "Poset",
    "SubtypingApprox",
    "bounds",
    "build",
    "chain",
    "check_galois",
    "containment_poset",
    "contains",
    "erasure",
    "f_subtypes",
    "f_supertypes",
    "free_type",
    "int_op",
    "is_admittable",
    "is_embedding",
    "is_valid",
    "parse_class_table",
    "parse_type",
    "ppp",
    "render",
    "s0",
    "step",
    "subtype",
    "transitive_reduction",
    "wc",
]
