//! Recognition of closed surfaces, simplicial or cellular.

use super::cells::CellComplex;
use super::complex::SimplicialComplex;
use super::manifold::UnionFind;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurfaceTag {
    Sphere,
    ProjectivePlane,
    Other,
}

/// Topological type of a closed connected surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceKind {
    pub tag: SurfaceTag,
    pub euler: i64,
    pub orientable: bool,
}

impl SurfaceKind {
    fn new(euler: i64, orientable: bool) -> Self {
        let tag = match (euler, orientable) {
            (2, true) => SurfaceTag::Sphere,
            (1, false) => SurfaceTag::ProjectivePlane,
            _ => SurfaceTag::Other,
        };
        Self {
            tag,
            euler,
            orientable,
        }
    }
}

/// Classifies a closed combinatorial surface.
///
/// Requires every edge in two triangles, every vertex link a single circle,
/// and connectivity.
pub fn classify_surface(c: &SimplicialComplex) -> Result<SurfaceKind> {
    if c.dim() != Some(2) {
        return Err(Error::NotClosedSurface(format!("dimension {:?}", c.dim())));
    }
    let verts = c.simplices(0);
    // vertex links: edges opposite each vertex in its triangles
    let mut link: Vec<Vec<(u32, u32)>> = vec![Vec::new(); c.count(0)];
    for t in c.simplices(2).iter() {
        for (i, &v) in t.iter().enumerate() {
            let o: Vec<u32> = t.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
            link[verts.index_of(&[v]).unwrap()].push((o[0], o[1]));
        }
    }
    for (vi, edges) in link.iter().enumerate() {
        let v = verts.get(vi)[0];
        let mut ends: Vec<u32> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        ends.sort_unstable();
        let circle = !ends.is_empty() && ends.chunk_by(|a, b| a == b).all(|c| c.len() == 2);
        if !circle {
            return Err(Error::NotClosedSurface(format!("link of vertex {v} is not a circle")));
        }
        ends.dedup();
        let mut uf = UnionFind::new(ends.len());
        let local = |x: u32| ends.binary_search(&x).unwrap() as u32;
        for &(a, b) in edges {
            uf.union(local(a), local(b));
        }
        if (0..ends.len() as u32).any(|i| uf.find(i) != 0) {
            return Err(Error::NotClosedSurface(format!(
                "link of vertex {v} is more than one circle"
            )));
        }
    }
    classify_cell_surface(&c.to_cell_complex())
}

/// Classifies a 2-dimensional cell complex whose edges each bound exactly
/// two faces. Orientability uses the incidence signs.
pub fn classify_cell_surface(cc: &CellComplex) -> Result<SurfaceKind> {
    if cc.top_dim() != Some(2) {
        return Err(Error::NotClosedSurface(format!("dimension {:?}", cc.top_dim())));
    }
    if !cc.has_signs() {
        return Err(Error::Internal("surface classification needs signed incidences".into()));
    }
    let mut edge_faces: Vec<Vec<(u32, i8)>> = vec![Vec::new(); cc.count(1)];
    for t in 0..cc.count(2) {
        let faces = cc.faces(2, t);
        let signs = cc.signs(2, t).unwrap();
        for (&e, &s) in faces.iter().zip(signs) {
            edge_faces[e as usize].push((t as u32, s));
        }
    }
    for (e, fs) in edge_faces.iter().enumerate() {
        if fs.len() != 2 {
            return Err(Error::NotClosedSurface(format!(
                "edge {e} lies in {} faces, expected 2",
                fs.len()
            )));
        }
    }
    let mut uf = UnionFind::new(cc.count(0));
    for e in 0..cc.count(1) {
        if let [a, b] = cc.faces(1, e) {
            uf.union(*a, *b);
        }
    }
    if (0..cc.count(0) as u32).any(|v| uf.find(v) != 0) {
        return Err(Error::NotClosedSurface("disconnected".into()));
    }
    // orient faces so every edge receives opposite signs
    let n = cc.count(2);
    let mut sign = vec![0i8; n];
    let mut orientable = true;
    if n > 0 {
        sign[0] = 1;
        let mut stack = vec![0usize];
        'walk: while let Some(t) = stack.pop() {
            let faces = cc.faces(2, t);
            let signs = cc.signs(2, t).unwrap();
            for (&e, &s) in faces.iter().zip(signs) {
                let fs = &edge_faces[e as usize];
                if fs[0].0 == fs[1].0 {
                    // a face glued to itself along e
                    if fs[0].1 == fs[1].1 {
                        orientable = false;
                        break 'walk;
                    }
                    continue;
                }
                let (u, su) = if fs[0].0 as usize == t { fs[1] } else { fs[0] };
                let want = -sign[t] * s * su;
                let u = u as usize;
                if sign[u] == 0 {
                    sign[u] = want;
                    stack.push(u);
                } else if sign[u] != want {
                    orientable = false;
                    break 'walk;
                }
            }
        }
    }
    Ok(SurfaceKind::new(cc.euler_characteristic(), orientable))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp2() -> SimplicialComplex {
        SimplicialComplex::from_facets(
            6,
            &[
                [0, 1, 2],
                [0, 2, 3],
                [0, 3, 4],
                [0, 4, 5],
                [0, 1, 5],
                [1, 2, 4],
                [2, 3, 5],
                [1, 3, 4],
                [1, 3, 5],
                [2, 4, 5],
            ],
        )
        .unwrap()
    }

    #[test]
    fn recognizes_projective_plane() {
        let k = classify_surface(&rp2()).unwrap();
        assert_eq!(k.tag, SurfaceTag::ProjectivePlane);
        assert_eq!((k.euler, k.orientable), (1, false));
    }

    #[test]
    fn recognizes_sphere() {
        let c = SimplicialComplex::from_facets(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
        assert_eq!(classify_surface(&c).unwrap().tag, SurfaceTag::Sphere);
    }

    #[test]
    fn recognizes_torus_as_other() {
        // 7-vertex torus
        let mut f = Vec::new();
        for i in 0..7u32 {
            f.push([i, (i + 1) % 7, (i + 3) % 7]);
            f.push([i, (i + 2) % 7, (i + 3) % 7]);
        }
        let c = SimplicialComplex::from_facets(7, &f).unwrap();
        let k = classify_surface(&c).unwrap();
        assert_eq!(k, SurfaceKind { tag: SurfaceTag::Other, euler: 0, orientable: true });
    }

    #[test]
    fn disk_is_rejected() {
        let c = SimplicialComplex::from_facets(3, &[[0, 1, 2]]).unwrap();
        assert!(matches!(classify_surface(&c), Err(Error::NotClosedSurface(_))));
    }

    #[test]
    fn pinched_surface_is_rejected() {
        // two tetrahedron boundaries sharing vertex 0
        let mut f = Vec::new();
        for base in [[0u32, 1, 2, 3], [0, 4, 5, 6]] {
            for skip in 0..4 {
                let t: Vec<u32> = (0..4).filter(|&j| j != skip).map(|j| base[j]).collect();
                f.push(t);
            }
        }
        let c = SimplicialComplex::from_facets(7, &f).unwrap();
        assert!(classify_surface(&c).is_err());
    }
}
