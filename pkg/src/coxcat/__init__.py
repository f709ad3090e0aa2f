"""Exact combinatorics of noncrossing partitions, cluster complexes and
Catalan triangles for finite Coxeter groups."""

from .catalan import catalan, fuss_catalan, positive_catalan
from .cluster import AlmostPositiveRoot, ClusterContext, compatible
from .core import CoxeterSystem, Element, build_system
from .errors import CoxcatError
from .noncrossing import NCContext, nc_lattice
from .nonnesting import RootPoset, nonnesting_antichains, root_poset
from .polynomial import Poly
from .triangles import (
    bold_polynomials,
    catalan_numbers,
    f_triangle,
    full_reflection_count,
    h_triangle,
    i_polynomial,
    identity_suite,
    m_triangle,
)

__all__ = [
    "AlmostPositiveRoot",
    "ClusterContext",
    "CoxcatError",
    "CoxeterSystem",
    "Element",
    "NCContext",
    "Poly",
    "RootPoset",
    "bold_polynomials",
    "build_system",
    "catalan",
    "catalan_numbers",
    "compatible",
    "f_triangle",
    "full_reflection_count",
    "fuss_catalan",
    "h_triangle",
    "i_polynomial",
    "identity_suite",
    "m_triangle",
    "nc_lattice",
    "nonnesting_antichains",
    "positive_catalan",
    "root_poset",
]
