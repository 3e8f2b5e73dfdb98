"""Exact computations on LVMB good systems, their associated simplicial
spheres, toric fans and moment-angle complexes."""

from .combinatorics import (
    FundamentalSet,
    ReplacementGraph,
    SimplicialComplex,
    associated_complex,
    check_SE,
    check_SEU,
    check_SEU_via_ridges,
    decompose_minimal,
    indispensable_elements,
    is_acceptable,
    is_pseudo_manifold,
    replacement_graph,
    validate_fundamental_set,
)
from .goodsystem import GoodSystemCandidate, LVMWitness, Verdict, is_good_system
from .inverse import SphereRealization, augment_circles, inverse_construct, round_trip_check
from .toric import Fan, certify_sphere, kernel_order, project_fan

__version__ = "0.1.0"
