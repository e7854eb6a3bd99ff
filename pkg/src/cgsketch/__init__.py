"""cgsketch: interactive 3D sketching on the conformal geometric algebra Cl(4,1)."""

from .algebra import (
    ComplexQuat,
    ComplexScalar,
    Multivector,
    basis_constants,
    parse_text,
    scalar,
)
from .entities import (
    CircleParams,
    LineParams,
    PairDecomposition,
    SphereParams,
    Vec3,
    circle_params,
    circle_through,
    decompose_point_pair,
    embed_point,
    extract_point,
    is_collinear,
    is_coplanar,
    is_flat,
    line_params,
    line_through,
    point_distance,
    point_line_distance,
    sphere_from_center_radius,
    sphere_params,
    sphere_through,
)
from .errors import (
    CgaError,
    ConvergenceError,
    DegenerateGeometryError,
    FlatGeometryError,
    IndefiniteMagnitudeError,
    InverseError,
    NormalizationError,
    RepresentationError,
    SceneError,
)
from .incidence import (
    IncidenceResult,
    join,
    meet,
    project,
    sphere_line_intersect,
)
from .scene import Scene, SceneNode
from .svg import export_svg
from .transforms import (
    RotorSpec,
    Versor,
    apply_versor,
    compose_motor,
    make_rotor,
    make_rotor_about,
    make_translator,
    rotor_from_axis_angle,
)

__all__ = [
    "ComplexQuat", "ComplexScalar", "Multivector", "basis_constants",
    "parse_text", "scalar",
    "CircleParams", "LineParams", "PairDecomposition", "SphereParams", "Vec3",
    "circle_params", "circle_through", "decompose_point_pair", "embed_point",
    "extract_point", "is_collinear", "is_coplanar", "is_flat", "line_params",
    "line_through", "point_distance", "point_line_distance",
    "sphere_from_center_radius", "sphere_params", "sphere_through",
    "CgaError", "ConvergenceError", "DegenerateGeometryError",
    "FlatGeometryError", "IndefiniteMagnitudeError", "InverseError",
    "NormalizationError", "RepresentationError", "SceneError",
    "IncidenceResult", "join", "meet", "project", "sphere_line_intersect",
    "Scene", "SceneNode", "export_svg",
    "RotorSpec", "Versor", "apply_versor", "compose_motor", "make_rotor",
    "make_rotor_about", "make_translator", "rotor_from_axis_angle",
]
