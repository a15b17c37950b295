use super::orbit::{build_w, OrbitComplexW};
use super::regularize::EquivariantManifold;
use crate::codes::BinaryCode;
use crate::error::{Error, Result};
use crate::gf2::{nullspace_basis, Gf2Matrix};
use crate::simplicial::{cell_homology, induced_map_on_cells, reduce, HomologyBasis};

/// The map `H_1(∂W) → H_1(W)` in the basis of boundary components.
#[derive(Debug, Clone)]
pub struct BoundaryMap {
    /// Rows index a basis of `H_1(W)`, column `i` is boundary component `i`.
    pub matrix: Gf2Matrix,
    pub h1_w: usize,
    pub rank: usize,
}

/// Computes `H_1(∂W) → H_1(W)` on `W` shrunk with its boundary kept intact.
pub fn boundary_map(w: &OrbitComplexW) -> Result<BoundaryMap> {
    let locked = w.boundary_mask();
    let red = reduce(&w.w, Some(&locked));
    let amb: HomologyBasis = cell_homology(&red.complex, 1);
    let k = w.boundary.len();
    let mut matrix = Gf2Matrix::zeros(amb.betti, k);
    for (i, comp) in w.boundary.iter().enumerate() {
        let h = cell_homology(&comp.complex, 1);
        if h.betti != 1 {
            return Err(Error::BoundaryAnomaly {
                component: i,
                found: format!("a surface with first Betti number {}", h.betti),
            });
        }
        let cell_map: Vec<u32> = comp.cells[1]
            .iter()
            .map(|&e| {
                red.compact_index(1, e as usize)
                    .ok_or_else(|| Error::Internal("a locked boundary edge was removed".into()))
            })
            .collect::<Result<_>>()?;
        let column = induced_map_on_cells(&h, &amb, &red.complex, &cell_map)?;
        for r in 0..amb.betti {
            matrix.set(r, i, column.get(r, 0));
        }
    }
    let rank = matrix.rank();
    Ok(BoundaryMap {
        matrix,
        h1_w: amb.betti,
        rank,
    })
}

/// The kernel of the boundary map, required to be self-dual.
pub fn code_from_boundary_map(map: &BoundaryMap) -> Result<BinaryCode> {
    let code = BinaryCode::new(&nullspace_basis(&map.matrix));
    if !code.is_self_dual() {
        return Err(Error::SelfDualityViolation {
            length: code.length(),
            dimension: code.dimension(),
        });
    }
    Ok(code)
}

/// `Ker(H_1(∂W) → H_1(W))`, coordinates ordered by fixed vertex id.
pub fn extract_code(em: &EquivariantManifold) -> Result<BinaryCode> {
    let w = build_w(em)?;
    code_from_boundary_map(&boundary_map(&w)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaximalityReport {
    pub maximal: bool,
    pub k: usize,
    pub total_mod2_dimension: usize,
    pub map_rank: usize,
    pub h1_w: usize,
}

impl MaximalityReport {
    /// How far `H_1(∂W) → H_1(W)` is from surjective.
    pub fn rank_deficit(&self) -> usize {
        self.h1_w - self.map_rank
    }
}

/// Combines the count criterion `k = Σ b_i(M)` with surjectivity of the
/// boundary map; the two must agree.
pub fn maximality_verdict(
    k: usize,
    total_mod2_dimension: usize,
    map_rank: usize,
    h1_w: usize,
) -> Result<MaximalityReport> {
    let by_count = k == total_mod2_dimension;
    let surjective = map_rank == h1_w;
    if by_count != surjective {
        return Err(Error::Internal(format!(
            "maximality criteria disagree: k = {k}, total Betti number {total_mod2_dimension}, \
             boundary map rank {map_rank} onto dimension {h1_w}"
        )));
    }
    Ok(MaximalityReport {
        maximal: by_count,
        k,
        total_mod2_dimension,
        map_rank,
        h1_w,
    })
}

pub fn maximality_from_map(em: &EquivariantManifold, map: &BoundaryMap) -> Result<MaximalityReport> {
    maximality_verdict(em.k(), em.total_mod2_dimension(), map.rank, map.h1_w)
}

pub fn check_maximal(em: &EquivariantManifold) -> Result<MaximalityReport> {
    let w = build_w(em)?;
    maximality_from_map(em, &boundary_map(&w)?)
}
