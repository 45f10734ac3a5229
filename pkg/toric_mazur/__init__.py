from .cohomology import h0_points, h1_total_topological, phi_cokernel_dim, projected_h0_points
from .divisor import OrthogonalSet, from_weyl_orbit, is_convex, validate
from .fan import Fan, build_weyl_fan
from .lattice import Character, Cocharacter
from .mazur import LeviSpec, g2_counterexample, verify_projection_equality
from .root_system import RootDatum, build_root_datum, parse_datum

__all__ = [
    "Character",
    "Cocharacter",
    "Fan",
    "LeviSpec",
    "OrthogonalSet",
    "RootDatum",
    "build_root_datum",
    "build_weyl_fan",
    "from_weyl_orbit",
    "g2_counterexample",
    "h0_points",
    "h1_total_topological",
    "is_convex",
    "parse_datum",
    "phi_cokernel_dim",
    "projected_h0_points",
    "validate",
    "verify_projection_equality",
]
