//! Homology-preserving shrinking of chain complexes.
//!
//! A reduction pair is a cell `b` and a face `a` of it. Removing both and
//! replacing the boundary of every other coface `c` of `a` by `∂c + ∂b` is a
//! chain homotopy equivalence. Free-face collapses and coreductions are the
//! cost-zero cases; the general case is accepted when its fill-in is small.
//! Pairs are taken cheapest first from a lazily updated heap.
//!
//! Locked cells are never paired. When they form a subcomplex, their
//! boundaries are untouched and the projection onto the reduced complex is
//! the identity on their chains, so maps induced by including the locked
//! subcomplex can be computed directly on the reduced complex.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::cells::CellComplex;

/// Pairs whose fill-in cost exceeds this are left for matrix elimination.
const MAX_PAIR_COST: u64 = 1 << 16;

/// A reduced complex together with its cell correspondence.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub complex: CellComplex,
    /// Original index of every surviving cell, per dimension.
    pub kept: Vec<Vec<u32>>,
    index: Vec<Vec<u32>>,
}

impl Reduction {
    /// Index in the reduced complex of an original d-cell, if it survived.
    pub fn compact_index(&self, d: usize, original: usize) -> Option<u32> {
        self.index
            .get(d)
            .and_then(|ix| ix.get(original))
            .copied()
            .filter(|&i| i != u32::MAX)
    }
}

struct Work {
    dim: Vec<u8>,
    bd: Vec<Vec<u32>>,
    cob: Vec<Vec<u32>>,
    alive: Vec<bool>,
    locked: Vec<bool>,
}

fn toggle_sorted(v: &mut Vec<u32>, x: u32) -> bool {
    match v.binary_search(&x) {
        Ok(i) => {
            v.remove(i);
            false
        }
        Err(i) => {
            v.insert(i, x);
            true
        }
    }
}

fn remove_unsorted(v: &mut Vec<u32>, x: u32) {
    if let Some(i) = v.iter().position(|&y| y == x) {
        v.swap_remove(i);
    }
}

impl Work {
    fn best_pair(&self, b: u32) -> Option<(u32, u64)> {
        let bd = &self.bd[b as usize];
        bd.iter()
            .copied()
            .filter(|&a| !self.locked[a as usize])
            .min_by_key(|&a| (self.cob[a as usize].len(), a))
            .map(|a| {
                let cost = (bd.len() as u64 - 1) * (self.cob[a as usize].len() as u64 - 1);
                (a, cost)
            })
    }

    /// Eliminates the pair and returns the cells whose boundary changed.
    fn eliminate(&mut self, a: u32, b: u32) -> Vec<u32> {
        let bb = std::mem::take(&mut self.bd[b as usize]);
        let others: Vec<u32> = self.cob[a as usize]
            .iter()
            .copied()
            .filter(|&c| c != b)
            .collect();
        for &c in &others {
            debug_assert!(!self.locked[c as usize], "locked cells must form a subcomplex");
            for &f in &bb {
                if toggle_sorted(&mut self.bd[c as usize], f) {
                    self.cob[f as usize].push(c);
                } else {
                    remove_unsorted(&mut self.cob[f as usize], c);
                }
            }
        }
        let up = std::mem::take(&mut self.cob[b as usize]);
        for &c in &up {
            if let Ok(i) = self.bd[c as usize].binary_search(&b) {
                self.bd[c as usize].remove(i);
            }
        }
        for &f in &bb {
            remove_unsorted(&mut self.cob[f as usize], b);
        }
        for f in std::mem::take(&mut self.bd[a as usize]) {
            remove_unsorted(&mut self.cob[f as usize], a);
        }
        self.cob[a as usize].clear();
        self.alive[a as usize] = false;
        self.alive[b as usize] = false;
        let mut changed = others;
        changed.extend(up);
        changed
    }
}

/// Reduces `cc`, never pairing cells marked in `locked`.
///
/// `locked`, when given, must mark a subcomplex.
pub fn reduce(cc: &CellComplex, locked: Option<&[Vec<bool>]>) -> Reduction {
    let dims = cc.top_dim().map_or(0, |d| d + 1);
    let mut offsets = Vec::with_capacity(dims + 1);
    let mut total = 0usize;
    for d in 0..dims {
        offsets.push(total);
        total += cc.count(d);
    }
    offsets.push(total);

    let mut w = Work {
        dim: Vec::with_capacity(total),
        bd: Vec::with_capacity(total),
        cob: vec![Vec::new(); total],
        alive: vec![true; total],
        locked: vec![false; total],
    };
    for d in 0..dims {
        for i in 0..cc.count(d) {
            let id = offsets[d] + i;
            let mut faces: Vec<u32> = cc
                .faces(d, i)
                .iter()
                .map(|&f| (offsets[d - 1] + f as usize) as u32)
                .collect();
            faces.sort_unstable();
            let mut clean: Vec<u32> = Vec::with_capacity(faces.len());
            for f in faces {
                if clean.last() == Some(&f) {
                    clean.pop();
                } else {
                    clean.push(f);
                }
            }
            for &f in &clean {
                w.cob[f as usize].push(id as u32);
            }
            w.dim.push(d as u8);
            w.bd.push(clean);
            if let Some(l) = locked {
                w.locked[id] = l.get(d).is_some_and(|v| v[i]);
            }
        }
    }

    let mut heap = BinaryHeap::new();
    for b in 0..total as u32 {
        if w.dim[b as usize] > 0 && !w.locked[b as usize] {
            if let Some((_, cost)) = w.best_pair(b) {
                heap.push(Reverse((cost, b)));
            }
        }
    }
    while let Some(Reverse((key, b))) = heap.pop() {
        if !w.alive[b as usize] {
            continue;
        }
        let Some((a, cost)) = w.best_pair(b) else {
            continue;
        };
        if cost > key {
            if cost <= MAX_PAIR_COST {
                heap.push(Reverse((cost, b)));
            }
            continue;
        }
        if cost > MAX_PAIR_COST {
            continue;
        }
        for c in w.eliminate(a, b) {
            if w.alive[c as usize] && !w.locked[c as usize] {
                if let Some((_, cost)) = w.best_pair(c) {
                    if cost <= MAX_PAIR_COST {
                        heap.push(Reverse((cost, c)));
                    }
                }
            }
        }
    }

    let mut complex = CellComplex::new();
    let mut kept = Vec::with_capacity(dims);
    let mut index = Vec::with_capacity(dims);
    for d in 0..dims {
        let surviving: Vec<u32> = (0..cc.count(d))
            .filter(|&i| w.alive[offsets[d] + i])
            .map(|i| i as u32)
            .collect();
        let mut ix = vec![u32::MAX; cc.count(d)];
        for (n, &i) in surviving.iter().enumerate() {
            ix[i as usize] = n as u32;
        }
        let faces = surviving
            .iter()
            .map(|&i| {
                if d == 0 {
                    return Vec::new();
                }
                let below: &Vec<u32> = &index[d - 1];
                let mut f: Vec<u32> = w.bd[offsets[d] + i as usize]
                    .iter()
                    .map(|&g| below[g as usize - offsets[d - 1]])
                    .collect();
                f.sort_unstable();
                f
            })
            .collect();
        complex.push_layer(faces, None);
        kept.push(surviving);
        index.push(ix);
    }
    Reduction {
        complex,
        kept,
        index,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::SimplicialComplex;

    #[test]
    fn solid_triangle_reduces_to_a_point() {
        let c = SimplicialComplex::from_facets(3, &[[0, 1, 2]]).unwrap().to_cell_complex();
        let r = reduce(&c, None);
        assert_eq!(r.complex.counts(), vec![1, 0, 0]);
    }

    #[test]
    fn locked_circle_survives() {
        let c = SimplicialComplex::from_facets(3, &[[0, 1, 2]]).unwrap().to_cell_complex();
        let locked = vec![vec![true; 3], vec![true; 3], vec![false]];
        let r = reduce(&c, Some(&locked));
        assert_eq!(r.complex.counts(), vec![3, 3, 1]);
        for d in 0..2 {
            for i in 0..3 {
                assert_eq!(r.compact_index(d, i), Some(i as u32));
            }
        }
    }

    #[test]
    fn hollow_tetrahedron_keeps_sphere_homology() {
        let c = SimplicialComplex::from_facets(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
            .unwrap()
            .to_cell_complex();
        let r = reduce(&c, None);
        assert_eq!(r.complex.counts(), vec![1, 0, 1]);
    }
}
