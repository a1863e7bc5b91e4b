"""Regular Delta-complexes: construction, homology and classification."""

from ._core import (
    FORMAT_VERSION,
    Complex,
    Error,
    ParseError,
    SpecError,
    boundary_coefficient,
    boundary_simplex,
    build,
    classify,
    cone,
    euler_characteristic,
    homology,
    is_isomorphic,
    join,
    link,
    nonsimplicial_sphere,
    quotient,
    skeleton,
    standard_simplex,
    subdivide,
    suspension,
    verify_table,
)

__all__ = [
    "FORMAT_VERSION",
    "Complex",
    "Error",
    "ParseError",
    "SpecError",
    "boundary_coefficient",
    "boundary_simplex",
    "build",
    "classify",
    "cone",
    "euler_characteristic",
    "homology",
    "is_isomorphic",
    "join",
    "link",
    "nonsimplicial_sphere",
    "quotient",
    "skeleton",
    "standard_simplex",
    "subdivide",
    "suspension",
    "verify_table",
]
