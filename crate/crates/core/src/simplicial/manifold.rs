//! Combinatorial checks for closed 3-manifolds and their orientations.

use thiserror::Error;

use super::complex::SimplicialComplex;
use crate::error::Result;
use crate::exec::Execution;

/// First failed condition found by [`validate_closed_3manifold`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ManifoldDefect {
    #[error("complex has dimension {0:?}, expected 3")]
    WrongDimension(Option<usize>),
    #[error("triangle {triangle:?} lies in {tetrahedra} tetrahedra, expected 2")]
    TriangleDegree { triangle: Vec<u32>, tetrahedra: usize },
    #[error("link of vertex {vertex} {reason}")]
    VertexLink { vertex: u32, reason: String },
    #[error("link of edge {edge:?} {reason}")]
    EdgeLink { edge: Vec<u32>, reason: String },
    #[error("complex is disconnected ({components} components)")]
    Disconnected { components: usize },
}

pub(crate) struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    pub(crate) fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb) as usize] = ra.min(rb);
        }
    }
}

/// Compressed lists of tetrahedra per vertex and per edge.
struct Incidence {
    vertex_start: Vec<usize>,
    vertex_tets: Vec<u32>,
    edge_start: Vec<usize>,
    edge_tets: Vec<u32>,
}

const EDGES_OF_TET: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn csr(n: usize, pairs: impl Iterator<Item = (usize, u32)> + Clone) -> (Vec<usize>, Vec<u32>) {
    let mut start = vec![0usize; n + 1];
    for (k, _) in pairs.clone() {
        start[k + 1] += 1;
    }
    for i in 0..n {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut items = vec![0u32; start[n]];
    for (k, v) in pairs {
        items[fill[k]] = v;
        fill[k] += 1;
    }
    (start, items)
}

impl Incidence {
    fn new(c: &SimplicialComplex) -> Self {
        let tets = c.simplices(3);
        let verts = c.simplices(0);
        let edges = c.simplices(1);
        let vpairs = tets.iter().enumerate().flat_map(move |(t, s)| {
            s.iter()
                .map(move |&v| (verts.index_of(&[v]).expect("closed"), t as u32))
        });
        let (vertex_start, vertex_tets) = csr(c.count(0), vpairs);
        let epairs = tets.iter().enumerate().flat_map(move |(t, s)| {
            EDGES_OF_TET.iter().map(move |&(i, j)| {
                (edges.index_of(&[s[i], s[j]]).expect("closed"), t as u32)
            })
        });
        let (edge_start, edge_tets) = csr(c.count(1), epairs);
        Self {
            vertex_start,
            vertex_tets,
            edge_start,
            edge_tets,
        }
    }

    fn tets_at_vertex(&self, v: usize) -> &[u32] {
        &self.vertex_tets[self.vertex_start[v]..self.vertex_start[v + 1]]
    }

    fn tets_at_edge(&self, e: usize) -> &[u32] {
        &self.edge_tets[self.edge_start[e]..self.edge_start[e + 1]]
    }
}

/// Triangle indices of each tetrahedron, face `i` omitting vertex `i`.
pub(crate) fn tet_faces(c: &SimplicialComplex) -> Vec<[u32; 4]> {
    let tris = c.simplices(2);
    c.simplices(3)
        .iter()
        .map(|s| {
            let mut out = [0u32; 4];
            for (skip, slot) in out.iter_mut().enumerate() {
                let mut f = [0u32; 3];
                let mut k = 0;
                for (i, &v) in s.iter().enumerate() {
                    if i != skip {
                        f[k] = v;
                        k += 1;
                    }
                }
                *slot = tris.index_of(&f).expect("closed") as u32;
            }
            out
        })
        .collect()
}

fn check_vertex_link(c: &SimplicialComplex, inc: &Incidence, v: usize) -> Option<ManifoldDefect> {
    let vertex = c.simplices(0).get(v)[0];
    let tets = inc.tets_at_vertex(v);
    if tets.is_empty() {
        return Some(ManifoldDefect::VertexLink {
            vertex,
            reason: "is empty".into(),
        });
    }
    let mut link_verts: Vec<u32> = Vec::new();
    let mut link_edges: Vec<(u32, u32)> = Vec::new();
    let mut tris: Vec<[u32; 3]> = Vec::with_capacity(tets.len());
    for &t in tets {
        let s = c.simplices(3).get(t as usize);
        let mut f = [0u32; 3];
        let mut k = 0;
        for &x in s {
            if x != vertex {
                f[k] = x;
                k += 1;
            }
        }
        link_verts.extend_from_slice(&f);
        link_edges.extend([(f[0], f[1]), (f[0], f[2]), (f[1], f[2])]);
        tris.push(f);
    }
    link_verts.sort_unstable();
    link_verts.dedup();
    link_edges.sort_unstable();
    link_edges.dedup();
    let euler = link_verts.len() as i64 - link_edges.len() as i64 + tris.len() as i64;
    let local = |x: u32| link_verts.binary_search(&x).unwrap() as u32;
    let mut uf = UnionFind::new(link_verts.len());
    for f in &tris {
        uf.union(local(f[0]), local(f[1]));
        uf.union(local(f[0]), local(f[2]));
    }
    let root = uf.find(0);
    if (1..link_verts.len() as u32).any(|i| uf.find(i) != root) {
        return Some(ManifoldDefect::VertexLink {
            vertex,
            reason: "is disconnected".into(),
        });
    }
    if euler != 2 {
        return Some(ManifoldDefect::VertexLink {
            vertex,
            reason: format!("has euler characteristic {euler}, expected 2"),
        });
    }
    None
}

fn check_edge_link(c: &SimplicialComplex, inc: &Incidence, e: usize) -> Option<ManifoldDefect> {
    let edge = c.simplices(1).get(e);
    let fail = |reason: &str| {
        Some(ManifoldDefect::EdgeLink {
            edge: edge.to_vec(),
            reason: reason.into(),
        })
    };
    let tets = inc.tets_at_edge(e);
    if tets.len() < 3 {
        return fail("is not a circle");
    }
    let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(tets.len());
    for &t in tets {
        let s = c.simplices(3).get(t as usize);
        let mut o = s.iter().copied().filter(|x| !edge.contains(x));
        pairs.push((o.next().unwrap(), o.next().unwrap()));
    }
    let mut verts: Vec<u32> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    for chunk in verts.chunk_by(|a, b| a == b) {
        if chunk.len() != 2 {
            return fail("is not a circle");
        }
    }
    verts.dedup();
    let local = |x: u32| verts.binary_search(&x).unwrap() as u32;
    let mut uf = UnionFind::new(verts.len());
    for &(a, b) in &pairs {
        uf.union(local(a), local(b));
    }
    let root = uf.find(0);
    if (1..verts.len() as u32).any(|i| uf.find(i) != root) {
        return fail("is more than one circle");
    }
    None
}

/// Checks that `c` is a connected closed combinatorial 3-manifold.
pub fn validate_closed_3manifold(c: &SimplicialComplex) -> Result<(), ManifoldDefect> {
    validate_closed_3manifold_with(c, Execution::default())
}

pub fn validate_closed_3manifold_with(
    c: &SimplicialComplex,
    exec: Execution,
) -> Result<(), ManifoldDefect> {
    if c.dim() != Some(3) {
        return Err(ManifoldDefect::WrongDimension(c.dim()));
    }
    if c.count(0) != c.num_vertices() {
        let verts = c.simplices(0);
        let unused = (0..c.num_vertices() as u32)
            .find(|&v| verts.index_of(&[v]).is_none())
            .expect("some vertex id is unused");
        return Err(ManifoldDefect::VertexLink {
            vertex: unused,
            reason: "is empty".into(),
        });
    }
    // (a) every triangle in exactly two tetrahedra
    let mut degree = vec![0usize; c.count(2)];
    for faces in tet_faces(c) {
        for f in faces {
            degree[f as usize] += 1;
        }
    }
    if let Some((t, &n)) = degree.iter().enumerate().find(|(_, &n)| n != 2) {
        return Err(ManifoldDefect::TriangleDegree {
            triangle: c.simplices(2).get(t).to_vec(),
            tetrahedra: n,
        });
    }
    let inc = Incidence::new(c);
    // (b) vertex links are connected with euler characteristic 2
    let vertex_defects = exec.map_range(c.count(0), |v| check_vertex_link(c, &inc, v));
    if let Some(d) = vertex_defects.into_iter().flatten().next() {
        return Err(d);
    }
    // (c) edge links are single circles
    let edge_defects = exec.map_range(c.count(1), |e| check_edge_link(c, &inc, e));
    if let Some(d) = edge_defects.into_iter().flatten().next() {
        return Err(d);
    }
    // (d) connected
    let mut uf = UnionFind::new(c.count(0));
    let verts = c.simplices(0);
    for e in c.simplices(1).iter() {
        let a = verts.index_of(&e[..1]).unwrap() as u32;
        let b = verts.index_of(&e[1..]).unwrap() as u32;
        uf.union(a, b);
    }
    let components = {
        let mut roots: Vec<u32> = (0..c.count(0) as u32).map(|i| uf.find(i)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    };
    if components != 1 {
        return Err(ManifoldDefect::Disconnected { components });
    }
    Ok(())
}

/// Per-tetrahedron orientation signs relative to sorted vertex order.
pub type Orientation = Vec<i8>;

/// A consistent orientation with the first tetrahedron positive, if one exists.
///
/// Fails with the validation defect when `c` is not a closed 3-manifold.
pub fn orientation(c: &SimplicialComplex) -> Result<Option<Orientation>> {
    validate_closed_3manifold(c)?;
    Ok(orient_pseudomanifold(c))
}

/// Orientation propagation without validation; requires every triangle
/// to lie in exactly two tetrahedra.
pub(crate) fn orient_pseudomanifold(c: &SimplicialComplex) -> Option<Orientation> {
    let faces = tet_faces(c);
    let mut tri_tets = vec![[u32::MAX; 2]; c.count(2)];
    for (t, fs) in faces.iter().enumerate() {
        for &f in fs {
            let slot = &mut tri_tets[f as usize];
            if slot[0] == u32::MAX {
                slot[0] = t as u32;
            } else {
                slot[1] = t as u32;
            }
        }
    }
    let n = faces.len();
    let mut sign = vec![0i8; n];
    if n == 0 {
        return Some(sign);
    }
    sign[0] = 1;
    let mut stack = vec![0usize];
    while let Some(t) = stack.pop() {
        for (i, &f) in faces[t].iter().enumerate() {
            let [x, y] = tri_tets[f as usize];
            let u = if x as usize == t { y } else { x } as usize;
            let j = faces[u].iter().position(|&g| g == f).unwrap();
            // induced signs on the shared face must be opposite
            let induced_t = sign[t] * if i % 2 == 0 { 1 } else { -1 };
            let want = -induced_t * if j % 2 == 0 { 1 } else { -1 };
            if sign[u] == 0 {
                sign[u] = want;
                stack.push(u);
            } else if sign[u] != want {
                return None;
            }
        }
    }
    Some(sign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error as CrateError;

    fn boundary_of_4_simplex() -> SimplicialComplex {
        let facets: Vec<Vec<u32>> = (0..5u32)
            .map(|skip| (0..5).filter(|&v| v != skip).collect())
            .collect();
        SimplicialComplex::from_facets(5, &facets).unwrap()
    }

    fn cross_polytope() -> SimplicialComplex {
        let mut facets = Vec::new();
        for mask in 0..16u32 {
            facets.push((0..4).map(|i| 2 * i + ((mask >> i) & 1)).collect::<Vec<u32>>());
        }
        SimplicialComplex::from_facets(8, &facets).unwrap()
    }

    #[test]
    fn minimal_sphere_passes() {
        assert_eq!(validate_closed_3manifold(&boundary_of_4_simplex()), Ok(()));
        assert!(orientation(&boundary_of_4_simplex()).unwrap().is_some());
    }

    #[test]
    fn sixteen_cell_passes() {
        let c = cross_polytope();
        assert_eq!(c.count(3), 16);
        assert_eq!(validate_closed_3manifold(&c), Ok(()));
        assert!(orientation(&c).unwrap().is_some());
    }

    #[test]
    fn sixteen_cell_vertex_link_is_octahedron() {
        // hand check for vertex 0: its link has the 6 vertices ±e2, ±e3, ±e4,
        // 12 edges and 8 triangles, the octahedron
        let c = cross_polytope();
        let inc = Incidence::new(&c);
        assert_eq!(inc.tets_at_vertex(0).len(), 8);
        let edges_at_0 = c.simplices(1).iter().filter(|e| e[0] == 0).count();
        let tris_at_0 = c.simplices(2).iter().filter(|t| t[0] == 0).count();
        assert_eq!((edges_at_0, tris_at_0), (6, 12));
        assert_eq!(check_vertex_link(&c, &inc, 0), None);
    }

    #[test]
    fn two_glued_tetrahedra_fail_triangle_condition() {
        let c = SimplicialComplex::from_facets(5, &[[0, 1, 2, 3], [0, 1, 2, 4]]).unwrap();
        assert!(matches!(
            validate_closed_3manifold(&c),
            Err(ManifoldDefect::TriangleDegree { tetrahedra: 1, .. })
        ));
        assert!(orientation(&c).is_err());
    }

    #[test]
    fn two_disjoint_spheres_are_disconnected() {
        let mut facets = Vec::new();
        for base in [0u32, 5] {
            for skip in 0..5u32 {
                facets.push((0..5).filter(|&v| v != skip).map(|v| v + base).collect::<Vec<_>>());
            }
        }
        let c = SimplicialComplex::from_facets(10, &facets).unwrap();
        assert_eq!(
            validate_closed_3manifold(&c),
            Err(ManifoldDefect::Disconnected { components: 2 })
        );
    }

    #[test]
    fn surface_is_wrong_dimension() {
        let c = SimplicialComplex::from_facets(3, &[[0, 1, 2]]).unwrap();
        assert_eq!(validate_closed_3manifold(&c), Err(ManifoldDefect::WrongDimension(Some(2))));
    }

    #[test]
    fn orientation_consistency_on_shared_faces() {
        let c = cross_polytope();
        let o = orientation(&c).unwrap().unwrap();
        assert_eq!(o[0], 1);
        assert!(o.iter().all(|&s| s == 1 || s == -1));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let c = cross_polytope().barycentric_subdivision().complex;
        assert_eq!(
            validate_closed_3manifold_with(&c, Execution::Sequential),
            validate_closed_3manifold_with(&c, Execution::Parallel)
        );
    }

    #[test]
    fn error_conversion() {
        let c = SimplicialComplex::from_facets(3, &[[0, 1, 2]]).unwrap();
        let e: CrateError = validate_closed_3manifold(&c).unwrap_err().into();
        assert!(e.to_string().contains("expected 3"));
    }
}
