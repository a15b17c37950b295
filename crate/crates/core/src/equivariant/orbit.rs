//! The orbit space `W = (M ∖ open stars of fixed vertices) / τ`.
//!
//! After regularization τ moves every simplex of `M` that avoids the fixed
//! vertices, so each orbit `{σ, τσ}` becomes one cell of `W`, represented by
//! the member with the smaller index. A face `f` of the representative is
//! attached to the cell of `f` with sign `(-1)^i`, times the sign of τ on `f`
//! when the representative of that cell is `τf`.

use super::involution::simplex_images;
use super::regularize::EquivariantManifold;
use crate::error::{Error, Result};
use crate::simplicial::{classify_cell_surface, sort_parity, CellComplex, SimplicialComplex, SurfaceKind, SurfaceTag};

/// Image of the link of one fixed vertex, a boundary component of `W`.
#[derive(Debug, Clone)]
pub struct BoundaryComponent {
    pub fixed_vertex: u32,
    pub complex: CellComplex,
    /// Cell of `W` for each cell of `complex`, per dimension.
    pub cells: Vec<Vec<u32>>,
    pub surface: SurfaceKind,
}

#[derive(Debug, Clone)]
pub struct OrbitComplexW {
    pub w: CellComplex,
    /// Boundary components, in the order of the fixed vertices.
    pub boundary: Vec<BoundaryComponent>,
    /// Per dimension, the cell of `W` for each simplex of `M`, or `u32::MAX`
    /// for simplices in the removed open stars.
    pub orbit_map: Vec<Vec<u32>>,
    /// Per dimension, the simplex of `M` representing each cell.
    pub representatives: Vec<Vec<u32>>,
}

impl OrbitComplexW {
    /// Marks, per dimension, the cells lying on the boundary.
    pub fn boundary_mask(&self) -> Vec<Vec<bool>> {
        let mut mask: Vec<Vec<bool>> = self.w.counts().into_iter().map(|n| vec![false; n]).collect();
        for b in &self.boundary {
            for (d, cells) in b.cells.iter().enumerate() {
                for &c in cells {
                    mask[d][c as usize] = true;
                }
            }
        }
        mask
    }
}

pub fn build_w(em: &EquivariantManifold) -> Result<OrbitComplexW> {
    if !em.is_regularized() {
        return Err(Error::NotRegularized);
    }
    let m = em.m();
    let tau = em.tau();
    let exec = em.config().elimination.execution;
    let images = simplex_images(m, tau, exec)?;
    let fixed = em.fixed_vertices();
    let mut is_fixed = vec![false; m.num_vertices()];
    for &x in fixed {
        is_fixed[x as usize] = true;
    }

    let dims = m.dim().map_or(0, |d| d + 1);
    let mut w = CellComplex::new();
    let mut orbit_map: Vec<Vec<u32>> = Vec::with_capacity(dims);
    let mut representatives = Vec::with_capacity(dims);
    for d in 0..dims {
        let table = m.simplices(d);
        let alive: Vec<bool> = exec.map_range(table.len(), |i| {
            table.get(i).iter().all(|&v| !is_fixed[v as usize])
        });
        let reps: Vec<u32> = (0..table.len())
            .filter(|&i| alive[i] && (i as u32) < images[d][i])
            .map(|i| i as u32)
            .collect();
        let mut map = vec![u32::MAX; table.len()];
        for (c, &r) in reps.iter().enumerate() {
            map[r as usize] = c as u32;
            map[images[d][r as usize] as usize] = c as u32;
        }
        let lower = if d == 0 { None } else { Some(m.simplices(d - 1)) };
        let below_map = if d == 0 { None } else { Some(&orbit_map[d - 1]) };
        let below_images = if d == 0 { None } else { Some(&images[d - 1]) };
        let attached: Vec<(Vec<u32>, Vec<i8>)> = exec.map_slice(&reps, |&r| {
            let (Some(lower), Some(below_map), Some(below_images)) = (lower, below_map, below_images) else {
                return (Vec::new(), Vec::new());
            };
            let s = table.get(r as usize);
            let mut faces = Vec::with_capacity(d + 1);
            let mut signs = Vec::with_capacity(d + 1);
            let mut f = Vec::with_capacity(d);
            for skip in 0..=d {
                f.clear();
                f.extend(s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
                let j = lower.index_of(&f).expect("closed complex");
                let mut sign: i8 = if skip % 2 == 0 { 1 } else { -1 };
                if below_images[j] < j as u32 {
                    let image: Vec<u32> = f.iter().map(|&v| tau.image(v)).collect();
                    if sort_parity(&image) {
                        sign = -sign;
                    }
                }
                faces.push(below_map[j]);
                signs.push(sign);
            }
            (faces, signs)
        });
        let (faces, signs): (Vec<Vec<u32>>, Vec<Vec<i8>>) = attached.into_iter().unzip();
        w.push_layer(faces, Some(signs));
        orbit_map.push(map);
        representatives.push(reps);
    }

    let mut boundary = Vec::with_capacity(fixed.len());
    for (component, &x) in fixed.iter().enumerate() {
        let mut keep: Vec<Vec<bool>> = w.counts().into_iter().map(|n| vec![false; n]).collect();
        for t in m.simplices(3).iter().filter(|t| t.contains(&x)) {
            let rest: Vec<u32> = t.iter().copied().filter(|&v| v != x).collect();
            for mask in 1u32..8 {
                let face: Vec<u32> = (0..3).filter(|i| mask >> i & 1 == 1).map(|i| rest[i]).collect();
                let d = face.len() - 1;
                let idx = m.simplices(d).index_of(&face).expect("closed complex");
                keep[d][orbit_map[d][idx] as usize] = true;
            }
        }
        let (complex, cells) = w.subcomplex(&keep);
        let surface = classify_cell_surface(&complex).map_err(|e| Error::BoundaryAnomaly {
            component,
            found: e.to_string(),
        })?;
        if surface.tag != SurfaceTag::ProjectivePlane {
            return Err(Error::BoundaryAnomaly {
                component,
                found: format!(
                    "a surface with euler characteristic {} ({})",
                    surface.euler,
                    if surface.orientable { "orientable" } else { "non-orientable" }
                ),
            });
        }
        boundary.push(BoundaryComponent {
            fixed_vertex: x,
            complex,
            cells,
            surface,
        });
    }

    let out = OrbitComplexW {
        w,
        boundary,
        orbit_map,
        representatives,
    };
    check_pseudomanifold(&out)?;
    Ok(out)
}

/// Interior triangles bound two tetrahedra, boundary triangles one.
fn check_pseudomanifold(w: &OrbitComplexW) -> Result<()> {
    if w.w.top_dim() != Some(3) {
        return Err(Error::Internal("orbit complex is not 3-dimensional".into()));
    }
    let mut degree = vec![0u32; w.w.count(2)];
    for t in 0..w.w.count(3) {
        for &f in w.w.faces(3, t) {
            degree[f as usize] += 1;
        }
    }
    let mask = w.boundary_mask();
    for (i, &n) in degree.iter().enumerate() {
        let want = if mask[2][i] { 1 } else { 2 };
        if n != want {
            return Err(Error::Internal(format!(
                "triangle cell {i} of the orbit complex lies in {n} tetrahedra, expected {want}"
            )));
        }
    }
    Ok(())
}

/// A simplicial model of `W`: one more subdivision, removal of the open stars
/// of the fixed vertices, then identification of vertices along orbits.
pub fn simplicial_quotient(em: &EquivariantManifold) -> Result<SimplicialComplex> {
    if !em.is_regularized() {
        return Err(Error::NotRegularized);
    }
    let fine = em.subdivided()?;
    let m = fine.m();
    let tau = fine.tau();
    let is_fixed = |v: u32| tau.image(v) == v;
    let mut orbit = vec![u32::MAX; m.num_vertices()];
    let mut next = 0u32;
    for v in 0..m.num_vertices() as u32 {
        let image = tau.image(v);
        if v < image {
            orbit[v as usize] = next;
            orbit[image as usize] = next;
            next += 1;
        }
    }
    let facets: Vec<Vec<u32>> = m
        .simplices(3)
        .iter()
        .filter(|t| !t.iter().any(|&v| is_fixed(v)))
        .map(|t| t.iter().map(|&v| orbit[v as usize]).collect())
        .collect();
    SimplicialComplex::from_facets(next as usize, &facets)
        .map_err(|e| Error::Internal(format!("orbit images are not simplices: {e}")))
}
