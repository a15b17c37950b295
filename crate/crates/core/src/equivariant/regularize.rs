use super::involution::{simplex_images, Involution};
use crate::error::{Error, Result};
use crate::gf2::EliminationConfig;
use crate::simplicial::{
    betti_numbers_with, orient_pseudomanifold, sort_parity, validate_closed_3manifold_with,
    SimplicialComplex,
};

/// Knobs shared by every pipeline stage.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PipelineConfig {
    /// Subdivision budget for [`regularize_with`].
    pub max_subdivisions: usize,
    pub elimination: EliminationConfig,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            max_subdivisions: 3,
            elimination: EliminationConfig::default(),
        }
    }
}

/// A closed orientable 3-manifold with an orientation-reversing involution
/// whose fixed points are isolated vertices.
///
/// When `is_regularized` holds: the only setwise-fixed simplices are fixed
/// vertices, no edge joins a vertex to its image, and the closed stars of
/// the fixed vertices are pairwise disjoint and invariant.
#[derive(Debug, Clone)]
pub struct EquivariantManifold {
    m: SimplicialComplex,
    tau: Involution,
    fixed_vertices: Vec<u32>,
    regularized: bool,
    subdivisions: usize,
    betti: Vec<usize>,
    config: PipelineConfig,
}

impl EquivariantManifold {
    /// Validates the pair without subdividing.
    pub fn new(m: SimplicialComplex, tau: Involution) -> Result<Self> {
        Self::new_with(m, tau, &PipelineConfig::default())
    }

    pub fn new_with(m: SimplicialComplex, tau: Involution, config: &PipelineConfig) -> Result<Self> {
        let exec = config.elimination.execution;
        if tau.perm().len() != m.num_vertices() {
            return Err(Error::InvolutionLength {
                expected: m.num_vertices(),
                got: tau.perm().len(),
            });
        }
        validate_closed_3manifold_with(&m, exec)?;
        let orientation = orient_pseudomanifold(&m).ok_or(Error::NotOrientable)?;
        let images = simplex_images(&m, &tau, exec)?;
        check_isolated(&m, &tau)?;
        let tets = m.simplices(3);
        for (t, s) in tets.iter().enumerate() {
            let image: Vec<u32> = s.iter().map(|&v| tau.image(v)).collect();
            let j = images[3][t] as usize;
            let permuted = if sort_parity(&image) { -1 } else { 1 };
            if orientation[t] * permuted == orientation[j] {
                return Err(Error::OrientationPreserving(format!(
                    "tetrahedron {s:?} and its image {:?} carry matching orientations",
                    tets.get(j)
                )));
            }
        }
        let betti = betti_numbers_with(&m, &config.elimination);
        let regularized = regularity_defect(&m, &tau, &images).is_none();
        Ok(Self {
            fixed_vertices: tau.fixed_points(),
            m,
            tau,
            regularized,
            subdivisions: 0,
            betti,
            config: *config,
        })
    }

    pub fn m(&self) -> &SimplicialComplex {
        &self.m
    }

    pub fn tau(&self) -> &Involution {
        &self.tau
    }

    /// Fixed vertices in ascending id order; they index the code coordinates.
    pub fn fixed_vertices(&self) -> &[u32] {
        &self.fixed_vertices
    }

    pub fn k(&self) -> usize {
        self.fixed_vertices.len()
    }

    pub fn is_regularized(&self) -> bool {
        self.regularized
    }

    /// Barycentric subdivisions applied since validation.
    pub fn subdivisions(&self) -> usize {
        self.subdivisions
    }

    /// Mod-2 Betti numbers of the manifold.
    pub fn betti(&self) -> &[usize] {
        &self.betti
    }

    pub fn total_mod2_dimension(&self) -> usize {
        self.betti.iter().sum()
    }

    pub fn config(&self) -> &PipelineConfig {
        &self.config
    }

    /// One barycentric subdivision, transporting the involution.
    pub fn subdivided(&self) -> Result<Self> {
        let exec = self.config.elimination.execution;
        let images = simplex_images(&self.m, &self.tau, exec)?;
        let sd = self.m.barycentric_subdivision_with(exec);
        let mut perm = vec![0u32; sd.complex.num_vertices()];
        for (d, imgs) in images.iter().enumerate() {
            for (i, &j) in imgs.iter().enumerate() {
                perm[sd.vertex_of(d, i) as usize] = sd.vertex_of(d, j as usize);
            }
        }
        let tau = Involution::from_perm_unchecked(perm);
        let m = sd.complex;
        check_isolated(&m, &tau)?;
        let images = simplex_images(&m, &tau, exec)?;
        Ok(Self {
            fixed_vertices: tau.fixed_points(),
            regularized: regularity_defect(&m, &tau, &images).is_none(),
            m,
            tau,
            subdivisions: self.subdivisions + 1,
            betti: self.betti.clone(),
            config: self.config,
        })
    }

    /// Why the regularity invariants fail, if they do.
    pub fn regularity_defect(&self) -> Option<String> {
        let images = simplex_images(&self.m, &self.tau, self.config.elimination.execution)
            .expect("involution was validated");
        regularity_defect(&self.m, &self.tau, &images)
    }
}

/// Rejects pointwise-fixed simplices of positive dimension.
fn check_isolated(m: &SimplicialComplex, tau: &Involution) -> Result<()> {
    let dims = m.dim().map_or(0, |d| d + 1);
    for d in 1..dims {
        if let Some(s) = m
            .simplices(d)
            .iter()
            .find(|s| s.iter().all(|&v| tau.image(v) == v))
        {
            return Err(Error::FixedSetNotIsolated(s.to_vec()));
        }
    }
    Ok(())
}

fn regularity_defect(m: &SimplicialComplex, tau: &Involution, images: &[Vec<u32>]) -> Option<String> {
    for (d, imgs) in images.iter().enumerate().skip(1) {
        if let Some(i) = (0..imgs.len()).find(|&i| imgs[i] as usize == i) {
            return Some(format!("simplex {:?} is mapped to itself", m.simplices(d).get(i)));
        }
    }
    let edges = m.simplices(1);
    if let Some(e) = edges.iter().find(|e| tau.image(e[0]) == e[1]) {
        return Some(format!("edge {e:?} joins a vertex to its image"));
    }
    // owner of every vertex in the closed star of a fixed vertex
    let mut owner = vec![u32::MAX; m.num_vertices()];
    let fixed = tau.fixed_points();
    let is_fixed = |v: u32| tau.image(v) == v;
    for &x in &fixed {
        owner[x as usize] = x;
    }
    for e in edges.iter() {
        for (a, b) in [(e[0], e[1]), (e[1], e[0])] {
            if is_fixed(a) {
                let o = &mut owner[b as usize];
                if *o != u32::MAX && *o != a {
                    return Some(format!(
                        "closed stars of fixed vertices {} and {a} meet at vertex {b}",
                        *o
                    ));
                }
                *o = a;
            }
        }
    }
    for v in 0..m.num_vertices() {
        let o = owner[v];
        if o != u32::MAX && owner[tau.image(v as u32) as usize] != o {
            return Some(format!("closed star of fixed vertex {o} is not invariant"));
        }
    }
    None
}

/// Validates and subdivides until the regularity invariants hold.
pub fn regularize(m: SimplicialComplex, tau: Involution) -> Result<EquivariantManifold> {
    regularize_with(m, tau, &PipelineConfig::default())
}

pub fn regularize_with(
    m: SimplicialComplex,
    tau: Involution,
    config: &PipelineConfig,
) -> Result<EquivariantManifold> {
    let mut em = EquivariantManifold::new_with(m, tau, config)?;
    while !em.regularized {
        if em.subdivisions >= config.max_subdivisions {
            return Err(Error::RegularizationFailed {
                subdivisions: em.subdivisions,
                reason: em.regularity_defect().unwrap_or_default(),
            });
        }
        em = em.subdivided()?;
    }
    let total = em.total_mod2_dimension();
    if em.k() > total {
        return Err(Error::Internal(format!(
            "{} fixed points exceed the total mod-2 Betti number {total}",
            em.k()
        )));
    }
    Ok(em)
}
