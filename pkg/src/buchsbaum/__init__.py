"""h-vectors of 2-dimensional Buchsbaum complexes: predicates, exact homology,
explicit constructions and exhaustive small-case checks."""

from buchsbaum.complex import SimplicialComplex, f_vector, from_facets, h_vector
from buchsbaum.homology import Field, betti_numbers
from buchsbaum.hvec import (
    buchsbaum_decomposition,
    connected_criterion,
    f_to_h,
    h_to_f,
    k_closed_form,
    macaulay_power,
    macaulay_rep,
)
from buchsbaum.properties import is_buchsbaum, is_cohen_macaulay, is_link_acyclic
from buchsbaum.realizer import NotRealizable, realize

__all__ = [
    "Field",
    "NotRealizable",
    "SimplicialComplex",
    "betti_numbers",
    "buchsbaum_decomposition",
    "connected_criterion",
    "f_to_h",
    "f_vector",
    "from_facets",
    "h_to_f",
    "h_vector",
    "is_buchsbaum",
    "is_cohen_macaulay",
    "is_link_acyclic",
    "k_closed_form",
    "macaulay_power",
    "macaulay_rep",
    "realize",
]
