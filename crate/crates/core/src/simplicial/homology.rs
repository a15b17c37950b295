use super::cells::CellComplex;
use super::complex::SimplicialComplex;
use super::reduce::reduce;
use crate::error::{Error, Result};
use crate::gf2::{nullspace_basis, EliminationConfig, Gf2Matrix, Gf2Vector, QuotientSpace};

/// Mod-2 homology in one degree, with canonical representatives.
///
/// `cycle_reps` complete `boundary_basis` to a basis of the cycles; they are
/// the rref of the cycle basis after clearing boundary pivots.
#[derive(Debug, Clone)]
pub struct HomologyBasis {
    pub degree: usize,
    pub cycle_reps: Gf2Matrix,
    pub boundary_basis: Gf2Matrix,
    pub betti: usize,
    quotient: QuotientSpace,
}

impl HomologyBasis {
    /// Coordinates of the class of a cycle with respect to `cycle_reps`.
    pub fn class_of(&self, cycle: &Gf2Vector) -> Result<Gf2Vector> {
        self.quotient.coordinates(cycle)
    }
}

/// Homology of a simplicial complex in degree `d`, in canonical simplex indexing.
pub fn homology(c: &SimplicialComplex, d: usize) -> HomologyBasis {
    cell_homology(&c.to_cell_complex(), d)
}

/// Homology of a cell complex in degree `d`.
pub fn cell_homology(cc: &CellComplex, d: usize) -> HomologyBasis {
    let n = cc.count(d);
    let cycles = if d == 0 {
        Gf2Matrix::identity(n)
    } else {
        nullspace_basis(&cc.boundary_matrix(d))
    };
    let boundaries = if cc.top_dim().is_some_and(|t| t > d) {
        cc.boundary_sparse(d + 1).to_dense()
    } else {
        Gf2Matrix::empty(n)
    };
    let quotient =
        QuotientSpace::new(&cycles, &boundaries).expect("boundaries are cycles since ∂∂ = 0");
    HomologyBasis {
        degree: d,
        cycle_reps: quotient.complement_basis().clone(),
        boundary_basis: quotient.subspace_rref().clone(),
        betti: quotient.dim(),
        quotient,
    }
}

fn boundary_rank(cc: &CellComplex, d: usize, config: &EliminationConfig) -> usize {
    if d == 0 || cc.count(d) == 0 || cc.count(d - 1) == 0 {
        return 0;
    }
    let sparse = cc.boundary_sparse(d);
    if config.prefers_sparse(sparse.rows(), sparse.cols(), sparse.nnz()) {
        sparse.rank()
    } else {
        sparse.to_dense().rref_dense(config.execution).1.len()
    }
}

/// Betti numbers from matrix ranks alone, with no pre-reduction.
pub fn betti_numbers_unreduced(cc: &CellComplex, config: &EliminationConfig) -> Vec<usize> {
    let Some(top) = cc.top_dim() else {
        return Vec::new();
    };
    let ranks: Vec<usize> = (0..=top + 1).map(|d| boundary_rank(cc, d, config)).collect();
    (0..=top)
        .map(|d| cc.count(d) - ranks[d] - ranks[d + 1])
        .collect()
}

/// Betti numbers, shrinking the complex by reduction pairs first.
pub fn cell_betti_numbers(cc: &CellComplex, config: &EliminationConfig) -> Vec<usize> {
    let r = reduce(cc, None);
    let mut b = betti_numbers_unreduced(&r.complex, config);
    b.resize(cc.top_dim().map_or(0, |t| t + 1), 0);
    b
}

/// Mod-2 Betti numbers `b_0..=b_dim`.
pub fn betti_numbers(c: &SimplicialComplex) -> Vec<usize> {
    betti_numbers_with(c, &EliminationConfig::default())
}

pub fn betti_numbers_with(c: &SimplicialComplex, config: &EliminationConfig) -> Vec<usize> {
    cell_betti_numbers(&c.to_cell_complex(), config)
}

/// Sum of all mod-2 Betti numbers.
pub fn total_mod2_dimension(c: &SimplicialComplex) -> usize {
    betti_numbers(c).iter().sum()
}

/// Matrix of the map on `degree`-homology induced by a cellular inclusion.
///
/// `cell_map[i]` is the `degree`-cell of `amb` that cell `i` of `sub` maps to.
/// Rows index the homology basis of `amb`, columns that of `sub`.
pub fn induced_map_on_cells(
    sub: &HomologyBasis,
    amb: &HomologyBasis,
    amb_complex: &CellComplex,
    cell_map: &[u32],
) -> Result<Gf2Matrix> {
    let degree = amb.degree;
    let n_amb = amb_complex.count(degree);
    let mut columns = Vec::with_capacity(sub.betti);
    for rep in sub.cycle_reps.row_vectors() {
        let image = Gf2Vector::from_support(n_amb, rep.iter_ones().map(|i| cell_map[i] as usize));
        if degree > 0 {
            let mut bd = Gf2Vector::zeros(amb_complex.count(degree - 1));
            for j in image.iter_ones() {
                for &f in amb_complex.faces(degree, j) {
                    bd.flip(f as usize);
                }
            }
            if !bd.is_zero() {
                return Err(Error::Internal(
                    "image of a cycle is not a cycle in the ambient complex".into(),
                ));
            }
        }
        columns.push(amb.class_of(&image).map_err(|_| {
            Error::Internal("image cycle could not be expressed in ambient homology".into())
        })?);
    }
    let mut m = Gf2Matrix::zeros(amb.betti, sub.betti);
    for (j, col) in columns.iter().enumerate() {
        for i in col.iter_ones() {
            m.set(i, j, true);
        }
    }
    Ok(m)
}

/// Matrix of `H_1(sub) → H_1(amb)` for the subcomplex embedded by `vertex_inclusion`.
pub fn induced_h1_map(
    sub: &SimplicialComplex,
    amb: &SimplicialComplex,
    vertex_inclusion: &[u32],
) -> Result<Gf2Matrix> {
    let mut edge_map = Vec::with_capacity(sub.count(1));
    if sub.dim().is_some_and(|d| d >= 1) {
        for e in sub.simplices(1).iter() {
            let mut image = [
                vertex_inclusion[e[0] as usize],
                vertex_inclusion[e[1] as usize],
            ];
            image.sort_unstable();
            let idx = amb.index_of(&image).ok_or_else(|| {
                Error::Internal(format!("edge {e:?} does not map to an edge of the ambient complex"))
            })?;
            edge_map.push(idx as u32);
        }
    }
    let amb_cells = amb.to_cell_complex();
    induced_map_on_cells(&homology(sub, 1), &cell_homology(&amb_cells, 1), &amb_cells, &edge_map)
}
