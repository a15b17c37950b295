use std::cmp::Ordering;

use super::cells::CellComplex;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::gf2::{Gf2Matrix, SparseGf2Matrix};

/// All simplices of one dimension, stored flat and sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplexTable {
    arity: usize,
    data: Vec<u32>,
}

impl SimplexTable {
    fn from_unsorted(arity: usize, mut data: Vec<u32>) -> Self {
        debug_assert_eq!(data.len() % arity, 0);
        let n = data.len() / arity;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_unstable_by(|&a, &b| {
            data[a * arity..(a + 1) * arity].cmp(&data[b * arity..(b + 1) * arity])
        });
        let mut sorted = Vec::with_capacity(data.len());
        let mut last: Option<usize> = None;
        for i in order {
            let row = &data[i * arity..(i + 1) * arity];
            if let Some(l) = last {
                if &data[l * arity..(l + 1) * arity] == row {
                    continue;
                }
            }
            sorted.extend_from_slice(row);
            last = Some(i);
        }
        data.clear();
        Self { arity, data: sorted }
    }

    /// Number of vertices per simplex.
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.data.len() / self.arity
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn get(&self, i: usize) -> &[u32] {
        &self.data[i * self.arity..(i + 1) * self.arity]
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[u32]> + Clone + '_ {
        self.data.chunks_exact(self.arity)
    }

    /// Index of a sorted vertex tuple, if present.
    pub fn index_of(&self, simplex: &[u32]) -> Option<usize> {
        if simplex.len() != self.arity {
            return None;
        }
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(simplex) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Some(mid),
            }
        }
        None
    }
}

/// A finite abstract simplicial complex, closed under faces.
///
/// `simplices(d)` lists the d-simplices as strictly increasing vertex
/// tuples in lexicographic order; positions in these lists are the
/// canonical chain coordinates used by every boundary matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    num_vertices: usize,
    tables: Vec<SimplexTable>,
}

/// Result of a barycentric subdivision.
#[derive(Debug, Clone)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    offsets: Vec<usize>,
}

impl Subdivision {
    /// New vertex standing for simplex `index` of dimension `dim` of the old complex.
    pub fn vertex_of(&self, dim: usize, index: usize) -> u32 {
        (self.offsets[dim] + index) as u32
    }
}

impl SimplicialComplex {
    pub fn empty(num_vertices: usize) -> Self {
        Self {
            num_vertices,
            tables: Vec::new(),
        }
    }

    /// Downward closure of `facets`.
    pub fn from_facets<F: AsRef<[u32]>>(num_vertices: usize, facets: &[F]) -> Result<Self> {
        let mut by_dim: Vec<Vec<u32>> = Vec::new();
        for f in facets {
            let f = f.as_ref();
            let mut s = f.to_vec();
            s.sort_unstable();
            if s.is_empty() {
                return Err(Error::MalformedFacet {
                    facet: f.to_vec(),
                    reason: "empty facet".into(),
                });
            }
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::MalformedFacet {
                    facet: f.to_vec(),
                    reason: "repeated vertex".into(),
                });
            }
            if let Some(&v) = s.iter().find(|&&v| v as usize >= num_vertices) {
                return Err(Error::MalformedFacet {
                    facet: f.to_vec(),
                    reason: format!("vertex {v} out of range 0..{num_vertices}"),
                });
            }
            if s.len() > 16 {
                return Err(Error::MalformedFacet {
                    facet: f.to_vec(),
                    reason: "dimension above 15 is not supported".into(),
                });
            }
            if by_dim.len() < s.len() {
                by_dim.resize(s.len(), Vec::new());
            }
            let n = s.len();
            for mask in 1u32..(1 << n) {
                let k = mask.count_ones() as usize;
                let bucket = &mut by_dim[k - 1];
                for (i, &v) in s.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        bucket.push(v);
                    }
                }
            }
        }
        let tables = by_dim
            .into_iter()
            .enumerate()
            .map(|(d, data)| SimplexTable::from_unsorted(d + 1, data))
            .collect();
        Ok(Self {
            num_vertices,
            tables,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Top dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.tables.len().checked_sub(1)
    }

    /// The d-simplices. Panics if `d` exceeds the top dimension.
    pub fn simplices(&self, d: usize) -> &SimplexTable {
        &self.tables[d]
    }

    pub fn count(&self, d: usize) -> usize {
        self.tables.get(d).map_or(0, SimplexTable::len)
    }

    pub fn total_simplices(&self) -> usize {
        self.tables.iter().map(SimplexTable::len).sum()
    }

    pub fn index_of(&self, simplex: &[u32]) -> Option<usize> {
        let d = simplex.len().checked_sub(1)?;
        self.tables.get(d)?.index_of(simplex)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.tables
            .iter()
            .enumerate()
            .map(|(d, t)| if d % 2 == 0 { t.len() as i64 } else { -(t.len() as i64) })
            .sum()
    }

    /// Maximal simplices, ordered by dimension then lexicographically.
    pub fn facets(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for d in 0..self.tables.len() {
            let mut covered = vec![false; self.count(d)];
            if let Some(up) = self.tables.get(d + 1) {
                let mut face = Vec::with_capacity(d + 1);
                for s in up.iter() {
                    for skip in 0..s.len() {
                        face.clear();
                        face.extend(s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
                        if let Some(i) = self.tables[d].index_of(&face) {
                            covered[i] = true;
                        }
                    }
                }
            }
            out.extend(
                self.tables[d]
                    .iter()
                    .zip(&covered)
                    .filter(|(_, &c)| !c)
                    .map(|(s, _)| s.to_vec()),
            );
        }
        out
    }

    /// Face indices of every d-simplex, face `i` omitting vertex `i`.
    pub fn face_lists(&self, d: usize) -> Vec<Vec<u32>> {
        if d == 0 {
            return vec![Vec::new(); self.count(0)];
        }
        let lower = &self.tables[d - 1];
        let mut face = Vec::with_capacity(d);
        self.tables[d]
            .iter()
            .map(|s| {
                (0..s.len())
                    .map(|skip| {
                        face.clear();
                        face.extend(s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
                        lower.index_of(&face).expect("complex is closed under faces") as u32
                    })
                    .collect()
            })
            .collect()
    }

    /// Mod-2 boundary matrix: rows are (d-1)-simplices, columns d-simplices.
    pub fn boundary_matrix(&self, d: usize) -> Gf2Matrix {
        assert!(d >= 1, "boundary matrices start at degree 1");
        let mut m = Gf2Matrix::zeros(self.count(d - 1), self.count(d));
        if d < self.tables.len() {
            for (j, faces) in self.face_lists(d).into_iter().enumerate() {
                for f in faces {
                    m.set(f as usize, j, true);
                }
            }
        }
        m
    }

    /// Transposed boundary in sparse form: one row per d-simplex listing its faces.
    pub fn boundary_sparse(&self, d: usize) -> SparseGf2Matrix {
        SparseGf2Matrix::from_rows(self.count(d.saturating_sub(1)), self.face_lists(d))
    }

    /// The same complex viewed as a cell complex with oriented incidences.
    pub fn to_cell_complex(&self) -> CellComplex {
        let mut cc = CellComplex::new();
        for d in 0..self.tables.len() {
            let faces = self.face_lists(d);
            let signs = faces
                .iter()
                .map(|f| (0..f.len()).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect())
                .collect();
            cc.push_layer(faces, Some(signs));
        }
        cc
    }

    /// Barycentric subdivision. New vertices enumerate old simplices by
    /// dimension, then by index, so old vertex `v` keeps the id of its
    /// position in the vertex list.
    pub fn barycentric_subdivision(&self) -> Subdivision {
        self.barycentric_subdivision_with(Execution::default())
    }

    pub fn barycentric_subdivision_with(&self, exec: Execution) -> Subdivision {
        let mut offsets = Vec::with_capacity(self.tables.len() + 1);
        let mut total = 0;
        for t in &self.tables {
            offsets.push(total);
            total += t.len();
        }
        offsets.push(total);
        let maximal = self.facets();
        let chains: Vec<Vec<u32>> = exec.map_slice(&maximal, |s| {
            let n = s.len();
            // vertex id of every nonempty vertex subset, by bitmask
            let mut id = vec![0u32; 1 << n];
            let mut sub = Vec::with_capacity(n);
            for mask in 1usize..(1 << n) {
                sub.clear();
                sub.extend((0..n).filter(|i| mask & (1 << i) != 0).map(|i| s[i]));
                let d = sub.len() - 1;
                let idx = self.tables[d].index_of(&sub).expect("closed complex");
                id[mask] = (offsets[d] + idx) as u32;
            }
            let mut out = Vec::new();
            let mut perm: Vec<usize> = (0..n).collect();
            loop {
                let mut mask = 0usize;
                let mut chain: Vec<u32> = perm
                    .iter()
                    .map(|&i| {
                        mask |= 1 << i;
                        id[mask]
                    })
                    .collect();
                chain.sort_unstable();
                out.extend_from_slice(&chain);
                if !next_permutation(&mut perm) {
                    break;
                }
            }
            out
        });
        let mut by_arity: Vec<Vec<u32>> = Vec::new();
        for (s, flat) in maximal.iter().zip(chains) {
            if by_arity.len() < s.len() {
                by_arity.resize(s.len(), Vec::new());
            }
            by_arity[s.len() - 1].extend(flat);
        }
        let mut facets: Vec<Vec<u32>> = Vec::new();
        for (d, flat) in by_arity.into_iter().enumerate() {
            facets.extend(flat.chunks_exact(d + 1).map(<[u32]>::to_vec));
        }
        let complex = Self::from_facets(total, &facets).expect("chains are valid facets");
        Subdivision { complex, offsets }
    }
}

/// Advances `p` to the next permutation in lexicographic order.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Parity of the permutation that sorts `values` (true when odd).
pub(crate) fn sort_parity(values: &[u32]) -> bool {
    let mut odd = false;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] > values[j] {
                odd = !odd;
            }
        }
    }
    odd
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_closure() {
        let c = SimplicialComplex::from_facets(3, &[[0, 1, 2]]).unwrap();
        assert_eq!((c.count(0), c.count(1), c.count(2)), (3, 3, 1));
    }

    #[test]
    fn tetrahedron_boundary() {
        let c = SimplicialComplex::from_facets(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
        assert_eq!((c.count(0), c.count(1), c.count(2)), (4, 6, 4));
        assert_eq!(c.euler_characteristic(), 2);
    }

    #[test]
    fn empty_facet_list() {
        let c = SimplicialComplex::from_facets::<[u32; 1]>(5, &[]).unwrap();
        assert_eq!(c.dim(), None);
        assert_eq!(c.total_simplices(), 0);
    }

    #[test]
    fn malformed_facets() {
        let e = SimplicialComplex::from_facets(3, &[[0, 0, 1]]).unwrap_err();
        assert!(e.to_string().starts_with("malformed facet"));
        let e = SimplicialComplex::from_facets(3, &[[0, 1, 3]]).unwrap_err();
        assert!(e.to_string().starts_with("malformed facet"));
    }

    #[test]
    fn subdivided_edge_is_a_path() {
        let c = SimplicialComplex::from_facets(2, &[[0, 1]]).unwrap();
        let sd = c.barycentric_subdivision().complex;
        assert_eq!((sd.count(0), sd.count(1)), (3, 2));
    }

    #[test]
    fn subdivided_triangle_counts() {
        let c = SimplicialComplex::from_facets(3, &[[0, 1, 2]]).unwrap();
        let sd = c.barycentric_subdivision().complex;
        assert_eq!((sd.count(0), sd.count(1), sd.count(2)), (7, 12, 6));
        assert_eq!(sd.euler_characteristic(), 1);
    }

    #[test]
    fn subdivision_keeps_vertex_ids() {
        let c = SimplicialComplex::from_facets(3, &[[0, 1, 2]]).unwrap();
        let sd = c.barycentric_subdivision();
        for v in 0..3 {
            assert_eq!(sd.vertex_of(0, v), v as u32);
        }
        assert_eq!(sd.vertex_of(2, 0), 6);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let c = SimplicialComplex::from_facets(3, &[[0, 1, 2]]).unwrap();
        let d1 = c.boundary_matrix(1);
        let d2 = c.boundary_matrix(2);
        assert!(d1.mul(&d2).is_zero());
        for j in 0..3 {
            assert_eq!((0..3).filter(|&i| d1.get(i, j)).count(), 2);
        }
    }

    #[test]
    fn permutations_and_parity() {
        let mut p = vec![0, 1, 2];
        let mut n = 1;
        while next_permutation(&mut p) {
            n += 1;
        }
        assert_eq!(n, 6);
        assert!(!sort_parity(&[1, 2, 3]));
        assert!(sort_parity(&[2, 1, 3]));
        assert!(!sort_parity(&[3, 1, 2]));
    }
}
