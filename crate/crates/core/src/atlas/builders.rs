use crate::equivariant::{validate_involution, Involution};
use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

/// Boundary of the 4-dimensional cross-polytope with the involution negating
/// the first three coordinates.
///
/// Vertex `2i` is `+e_i` and `2i + 1` is `-e_i`; the fixed vertices are `±e_4`,
/// ids 6 and 7.
pub fn sphere_suspension() -> (SimplicialComplex, Involution) {
    let facets: Vec<[u32; 4]> = (0..16u32)
        .map(|signs| std::array::from_fn(|i| 2 * i as u32 + (signs >> i & 1)))
        .collect();
    let c = SimplicialComplex::from_facets(8, &facets).expect("valid facets");
    let tau = validate_involution(&c, &[1, 0, 3, 2, 5, 4, 6, 7]).expect("valid involution");
    (c, tau)
}

/// Kuhn triangulation of the `m × m × m` grid torus with `x ↦ -x`.
///
/// Grid point `(x, y, z)` has id `x + m·y + m²·z`. Each cube contributes the
/// six tetrahedra along monotone paths from its base corner.
pub fn torus_conjugation(m: usize) -> Result<(SimplicialComplex, Involution)> {
    if m < 4 || m % 2 == 1 || m > 1024 {
        return Err(Error::GridResolution(m));
    }
    let id = |p: [usize; 3]| (p[0] + m * p[1] + m * m * p[2]) as u32;
    const AXIS_ORDERS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut facets = Vec::with_capacity(6 * m * m * m);
    for z in 0..m {
        for y in 0..m {
            for x in 0..m {
                for order in AXIS_ORDERS {
                    let mut p = [x, y, z];
                    let mut t = [0u32; 4];
                    t[0] = id(p);
                    for (step, &axis) in order.iter().enumerate() {
                        p[axis] = (p[axis] + 1) % m;
                        t[step + 1] = id(p);
                    }
                    facets.push(t);
                }
            }
        }
    }
    let c = SimplicialComplex::from_facets(m * m * m, &facets)?;
    let perm: Vec<u32> = (0..m * m * m)
        .map(|v| {
            let p = [v % m, v / m % m, v / (m * m)];
            id(p.map(|c| (m - c) % m))
        })
        .collect();
    let tau = validate_involution(&c, &perm)?;
    Ok((c, tau))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::validate_closed_3manifold;

    #[test]
    fn cross_polytope_shape() {
        let (c, tau) = sphere_suspension();
        assert_eq!(c.count(3), 16);
        assert_eq!(c.count(0), 8);
        assert_eq!(tau.fixed_points(), vec![6, 7]);
        assert_eq!(validate_closed_3manifold(&c), Ok(()));
        // no simplex contains an antipodal pair
        assert!(c.simplices(1).iter().all(|e| e[0] / 2 != e[1] / 2));
    }

    #[test]
    fn torus_counts() {
        let (c, tau) = torus_conjugation(4).unwrap();
        assert_eq!(c.count(0), 64);
        assert_eq!(c.count(3), 384);
        assert_eq!(c.euler_characteristic(), 0);
        assert_eq!(tau.fixed_points().len(), 8);
        assert_eq!(validate_closed_3manifold(&c), Ok(()));
    }

    #[test]
    fn torus_fixed_points_have_half_grid_coordinates() {
        let m = 6;
        let (_, tau) = torus_conjugation(m).unwrap();
        for v in tau.fixed_points() {
            let v = v as usize;
            for c in [v % m, v / m % m, v / (m * m)] {
                assert!(c == 0 || c == m / 2);
            }
        }
    }

    #[test]
    fn bad_resolutions() {
        for m in [0, 2, 3, 5] {
            assert!(matches!(torus_conjugation(m), Err(Error::GridResolution(_))));
        }
    }
}
