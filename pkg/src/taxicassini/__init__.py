"""Taxicab Cassini sets: construction, classification, and verification.

The curve K(p, q; r) is the locus where the product of taxicab (L1)
distances to the two foci equals r².  This package builds the curve
exactly as a closed chain of guide-line segments and hyperbola arcs,
classifies points and topology, verifies the guide-family set identities,
and cross-checks everything against a grid-sampling oracle.
"""

from .campaign import (
    CampaignResult,
    boundary_suite,
    random_spec,
    run_boundary_campaign,
    run_identity_campaign,
    run_residual_campaign,
    run_topology_campaign,
)
from .cassini import (
    AssemblyError,
    CassiniSpec,
    ClosedCurve,
    DegenerateInput,
    GuideSegment,
    HyperbolaArc,
    PointLocation,
    Topology,
    build_curves,
    classify_point,
    critical_radius,
    curve_polyline,
    halfstrip_pieces,
    product_value,
    quadrant_piece,
    rectangle_pieces,
    sample_curve,
    topology,
)
from .characterization import (
    GuideFamily,
    IdentityMode,
    IdentityReport,
    boundary_check,
    cross_family_contains,
    filled_contains,
    grid_points,
    guide_family,
    intersection_of_unions_contains,
    random_points,
    sampling_box,
    union_of_intersections_contains,
    verify_identity,
)
from .core import (
    FociFrame,
    GeometryError,
    Isometry,
    ORIGIN,
    Point,
    PointGroup,
    RegionId,
    SignPair,
    apply_isometry,
    classify_region,
    closer_to,
    coordinate_signs,
    foci_frame,
    standardize,
    taxicab_distance,
)
from .oracle import (
    BoxTooSmall,
    Contour,
    ScalarGrid,
    component_count,
    extract_contour,
    grid_field,
    hausdorff,
    ring_contains,
)
from .svg import render_svg

__all__ = [
    "AssemblyError",
    "BoxTooSmall",
    "CampaignResult",
    "CassiniSpec",
    "ClosedCurve",
    "Contour",
    "DegenerateInput",
    "FociFrame",
    "GeometryError",
    "GuideFamily",
    "GuideSegment",
    "HyperbolaArc",
    "IdentityMode",
    "IdentityReport",
    "Isometry",
    "ORIGIN",
    "Point",
    "PointGroup",
    "PointLocation",
    "RegionId",
    "ScalarGrid",
    "SignPair",
    "Topology",
    "apply_isometry",
    "boundary_check",
    "boundary_suite",
    "build_curves",
    "classify_point",
    "classify_region",
    "closer_to",
    "component_count",
    "coordinate_signs",
    "critical_radius",
    "cross_family_contains",
    "curve_polyline",
    "extract_contour",
    "filled_contains",
    "foci_frame",
    "grid_field",
    "grid_points",
    "guide_family",
    "halfstrip_pieces",
    "hausdorff",
    "intersection_of_unions_contains",
    "product_value",
    "quadrant_piece",
    "random_points",
    "random_spec",
    "rectangle_pieces",
    "render_svg",
    "ring_contains",
    "run_boundary_campaign",
    "run_identity_campaign",
    "run_residual_campaign",
    "run_topology_campaign",
    "sample_curve",
    "sampling_box",
    "standardize",
    "taxicab_distance",
    "topology",
    "union_of_intersections_contains",
    "verify_identity",
]

__version__ = "0.1.0"
