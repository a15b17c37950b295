//! Simplicial and cellular complexes with mod-2 homology.

mod cells;
mod complex;
mod homology;
mod manifold;
mod reduce;
mod surface;

pub use cells::CellComplex;
pub use complex::{SimplexTable, SimplicialComplex, Subdivision};
pub(crate) use complex::sort_parity;
pub use homology::{
    betti_numbers, betti_numbers_unreduced, betti_numbers_with, cell_betti_numbers, cell_homology,
    homology, induced_h1_map, induced_map_on_cells, total_mod2_dimension, HomologyBasis,
};
pub(crate) use manifold::orient_pseudomanifold;
pub use manifold::{
    orientation, validate_closed_3manifold, validate_closed_3manifold_with, ManifoldDefect,
    Orientation,
};
pub use reduce::{reduce, Reduction};
pub use surface::{classify_cell_surface, classify_surface, SurfaceKind, SurfaceTag};
