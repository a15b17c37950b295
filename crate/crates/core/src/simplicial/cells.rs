use crate::gf2::{Gf2Matrix, SparseGf2Matrix};

/// One dimension of a [`CellComplex`] in compressed row form.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Layer {
    offsets: Vec<usize>,
    faces: Vec<u32>,
    signs: Option<Vec<i8>>,
}

/// A finite chain complex given by cells and their incidences.
///
/// Each d-cell lists the (d-1)-cells in its boundary. Signs, when present,
/// are the integral incidence numbers; mod-2 computations ignore them.
/// Orbit complexes of free involutions and reduced complexes are stored
/// this way.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CellComplex {
    layers: Vec<Layer>,
}

impl CellComplex {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends the next dimension. `faces[i]` holds the boundary of cell `i`.
    pub fn push_layer(&mut self, faces: Vec<Vec<u32>>, signs: Option<Vec<Vec<i8>>>) {
        let d = self.layers.len();
        let below = if d == 0 { 0 } else { self.count(d - 1) };
        let mut layer = Layer {
            offsets: Vec::with_capacity(faces.len() + 1),
            faces: Vec::new(),
            signs: signs.as_ref().map(|_| Vec::new()),
        };
        layer.offsets.push(0);
        for (i, f) in faces.iter().enumerate() {
            debug_assert!(f.iter().all(|&x| (x as usize) < below), "face index out of range");
            layer.faces.extend_from_slice(f);
            if let (Some(dst), Some(src)) = (layer.signs.as_mut(), signs.as_ref()) {
                assert_eq!(src[i].len(), f.len(), "sign list length mismatch");
                dst.extend_from_slice(&src[i]);
            }
            layer.offsets.push(layer.faces.len());
        }
        self.layers.push(layer);
    }

    pub fn top_dim(&self) -> Option<usize> {
        self.layers.len().checked_sub(1)
    }

    pub fn count(&self, d: usize) -> usize {
        self.layers.get(d).map_or(0, |l| l.offsets.len() - 1)
    }

    pub fn counts(&self) -> Vec<usize> {
        (0..self.layers.len()).map(|d| self.count(d)).collect()
    }

    pub fn faces(&self, d: usize, i: usize) -> &[u32] {
        let l = &self.layers[d];
        &l.faces[l.offsets[i]..l.offsets[i + 1]]
    }

    pub fn signs(&self, d: usize, i: usize) -> Option<&[i8]> {
        let l = &self.layers[d];
        l.signs.as_ref().map(|s| &s[l.offsets[i]..l.offsets[i + 1]])
    }

    pub fn has_signs(&self) -> bool {
        self.layers.iter().all(|l| l.signs.is_some())
    }

    pub fn euler_characteristic(&self) -> i64 {
        (0..self.layers.len())
            .map(|d| {
                let n = self.count(d) as i64;
                if d % 2 == 0 { n } else { -n }
            })
            .sum()
    }

    /// Boundary lists of the d-cells (the transposed boundary matrix).
    pub fn boundary_lists(&self, d: usize) -> Vec<Vec<u32>> {
        (0..self.count(d)).map(|i| self.faces(d, i).to_vec()).collect()
    }

    /// Transposed mod-2 boundary: one row per d-cell.
    pub fn boundary_sparse(&self, d: usize) -> SparseGf2Matrix {
        let below = if d == 0 { 0 } else { self.count(d - 1) };
        SparseGf2Matrix::from_rows(below, self.boundary_lists(d))
    }

    /// Mod-2 boundary matrix: rows are (d-1)-cells, columns d-cells.
    pub fn boundary_matrix(&self, d: usize) -> Gf2Matrix {
        assert!(d >= 1, "boundary matrices start at degree 1");
        let mut m = Gf2Matrix::zeros(self.count(d - 1), self.count(d));
        for j in 0..self.count(d) {
            for &f in self.faces(d, j) {
                let cur = m.get(f as usize, j);
                m.set(f as usize, j, !cur);
            }
        }
        m
    }

    /// Subcomplex on the kept cells, re-indexed. Returns the complex and,
    /// per dimension, the original index of each new cell.
    ///
    /// Panics if a kept cell has a face that is not kept.
    pub fn subcomplex(&self, keep: &[Vec<bool>]) -> (CellComplex, Vec<Vec<u32>>) {
        let mut out = CellComplex::new();
        let mut origin = Vec::new();
        let mut new_index: Vec<u32> = Vec::new();
        for d in 0..self.layers.len() {
            let kept: Vec<u32> = (0..self.count(d))
                .filter(|&i| keep.get(d).is_some_and(|k| k[i]))
                .map(|i| i as u32)
                .collect();
            let faces = kept
                .iter()
                .map(|&i| {
                    self.faces(d, i as usize)
                        .iter()
                        .map(|&f| {
                            let n = new_index[f as usize];
                            assert_ne!(n, u32::MAX, "subcomplex is not closed under faces");
                            n
                        })
                        .collect()
                })
                .collect();
            let signs = self.layers[d].signs.as_ref().map(|_| {
                kept.iter()
                    .map(|&i| self.signs(d, i as usize).unwrap().to_vec())
                    .collect()
            });
            out.push_layer(faces, signs);
            new_index = vec![u32::MAX; self.count(d)];
            for (n, &i) in kept.iter().enumerate() {
                new_index[i as usize] = n as u32;
            }
            origin.push(kept);
        }
        // drop trailing empty dimensions
        while out.layers.len() > 1 && out.count(out.layers.len() - 1) == 0 {
            out.layers.pop();
            origin.pop();
        }
        if out.layers.len() == 1 && out.count(0) == 0 {
            out.layers.clear();
            origin.clear();
        }
        (out, origin)
    }
}

#[cfg(test)]
mod tests {
    use crate::simplicial::SimplicialComplex;

    #[test]
    fn matches_simplicial_boundary() {
        let c = SimplicialComplex::from_facets(4, &[[0, 1, 2], [1, 2, 3]]).unwrap();
        let cc = c.to_cell_complex();
        assert_eq!(cc.counts(), vec![4, 5, 2]);
        assert_eq!(cc.boundary_matrix(1), c.boundary_matrix(1));
        assert_eq!(cc.boundary_matrix(2), c.boundary_matrix(2));
        assert_eq!(cc.euler_characteristic(), 1);
    }

    #[test]
    fn subcomplex_reindexes() {
        let c = SimplicialComplex::from_facets(3, &[[0, 1, 2]]).unwrap().to_cell_complex();
        // keep the edge {0,1} and its vertices
        let keep = vec![vec![true, true, false], vec![true, false, false], vec![false]];
        let (sub, origin) = c.subcomplex(&keep);
        assert_eq!(sub.counts(), vec![2, 1]);
        assert_eq!(origin[1], vec![0]);
        // face i omits vertex i
        assert_eq!(sub.faces(1, 0), &[1, 0]);
    }
}
