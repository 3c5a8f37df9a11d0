"""Hausdorff numbers of topological spaces.

Exact analysis of finite topologies (validation, separation axioms, the
Hausdorff number with witnesses), exhaustive enumeration classified by
Hausdorff number, named example constructions, and a decidable symbolic
model of the doubled-interval spaces with uncountable carriers.

The enumeration hot paths run on a compiled extension when it was built;
``BACKEND_NAME`` tells which kernels are active.
"""

from ._kernels import BACKEND_NAME
from .constructions import (
    build_example,
    doubled_point_topology,
    export_example,
    filtered_four_point,
    three_point_example,
    two_block_topology,
)
from .core import (
    MAX_POINTS,
    FiniteTopology,
    PointSet,
    Preorder,
    SubspaceResult,
    generate_from_subbasis,
    minimal_neighborhood,
    specialization_preorder,
    subspace,
    topology_from_preorder,
    validate_topology,
)
from .enumeration import (
    CanonicalForm,
    CountsTable,
    StirlingReport,
    canonical_form,
    count_by_hausdorff,
    enumerate_classes,
    enumerate_labeled,
    enumerate_preorders,
    labeled_and_t0_counts,
    naive_counts,
    stirling2,
    stirling_consistency,
)
from .jsonio import load_topology, topology_from_dict, topology_to_dict, topology_to_json
from .separation import (
    AxiomsReport,
    HausdorffNumber,
    SeparationDecision,
    SeparationWitness,
    analysis_report,
    axioms_report,
    hausdorff_number,
    hausdorff_number_oracle,
    is_n_hausdorff,
    is_separable,
    verify_witness,
)
from .symbolic import (
    OMEGA,
    OMEGA_ONE,
    Base,
    BasePoint,
    BasisNeighborhood,
    BugEyedSpace,
    Cardinal,
    Finite,
    SeparabilityVerdict,
    SymbolicPoint,
    Vertical,
    VerticalPoint,
    grid_witness_search,
    hausdorff_number_symbolic,
    intersection_nonempty,
    largest_nonseparable_set,
    membership,
    neighborhood_of,
    parse_point,
    parse_points,
    restrict,
    separable,
    t1_status,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME",
    "MAX_POINTS",
    "PointSet",
    "FiniteTopology",
    "Preorder",
    "SubspaceResult",
    "validate_topology",
    "generate_from_subbasis",
    "minimal_neighborhood",
    "specialization_preorder",
    "topology_from_preorder",
    "subspace",
    "SeparationWitness",
    "SeparationDecision",
    "HausdorffNumber",
    "AxiomsReport",
    "is_separable",
    "verify_witness",
    "hausdorff_number",
    "hausdorff_number_oracle",
    "is_n_hausdorff",
    "axioms_report",
    "analysis_report",
    "CanonicalForm",
    "CountsTable",
    "StirlingReport",
    "enumerate_labeled",
    "enumerate_preorders",
    "enumerate_classes",
    "canonical_form",
    "count_by_hausdorff",
    "labeled_and_t0_counts",
    "stirling2",
    "stirling_consistency",
    "naive_counts",
    "three_point_example",
    "two_block_topology",
    "filtered_four_point",
    "doubled_point_topology",
    "build_example",
    "export_example",
    "load_topology",
    "topology_to_dict",
    "topology_from_dict",
    "topology_to_json",
    "OMEGA",
    "OMEGA_ONE",
    "Base",
    "Vertical",
    "BasePoint",
    "VerticalPoint",
    "SymbolicPoint",
    "BasisNeighborhood",
    "BugEyedSpace",
    "Cardinal",
    "Finite",
    "SeparabilityVerdict",
    "membership",
    "neighborhood_of",
    "intersection_nonempty",
    "separable",
    "hausdorff_number_symbolic",
    "largest_nonseparable_set",
    "t1_status",
    "restrict",
    "grid_witness_search",
    "parse_point",
    "parse_points",
]
