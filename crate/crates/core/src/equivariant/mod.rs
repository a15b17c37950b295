//! Involutions on triangulated 3-manifolds and the codes they determine.

mod extract;
mod involution;
mod orbit;
mod regularize;

pub use extract::{
    boundary_map, check_maximal, code_from_boundary_map, extract_code, maximality_from_map,
    maximality_verdict, BoundaryMap, MaximalityReport,
};
pub use involution::{validate_involution, Involution};
pub use orbit::{build_w, simplicial_quotient, BoundaryComponent, OrbitComplexW};
pub use regularize::{regularize, regularize_with, EquivariantManifold, PipelineConfig};
