use std::collections::BTreeSet;

use involcode::atlas::{sphere_suspension, torus_conjugation, ATLAS};
use involcode::gf2::Gf2Matrix;
use involcode::simplicial::{betti_numbers, homology, induced_h1_map, validate_closed_3manifold, SimplicialComplex};
use proptest::prelude::*;

fn complex() -> impl Strategy<Value = SimplicialComplex> {
    (4u32..10).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::btree_set(0..n, 2..=4), 1..10).prop_map(move |facets| {
            let facets: Vec<Vec<u32>> = facets.into_iter().map(|s| s.into_iter().collect()).collect();
            SimplicialComplex::from_facets(n as usize, &facets).unwrap()
        })
    })
}

fn naive_rank(mut rows: Vec<Vec<u8>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] == 1) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] == 1 {
                row.iter_mut().zip(&pivot).for_each(|(a, b)| *a ^= b);
            }
        }
        rank += 1;
    }
    rank
}

/// Betti numbers from byte matrices built by subset tests on the facets' closure.
fn oracle_betti(c: &SimplicialComplex) -> Vec<usize> {
    let mut by_dim: Vec<BTreeSet<Vec<u32>>> = Vec::new();
    for f in c.facets() {
        for mask in 1u32..(1 << f.len()) {
            let s: Vec<u32> = (0..f.len()).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
            if by_dim.len() < s.len() {
                by_dim.resize(s.len(), BTreeSet::new());
            }
            by_dim[s.len() - 1].insert(s);
        }
    }
    let lists: Vec<Vec<Vec<u32>>> = by_dim.into_iter().map(|s| s.into_iter().collect()).collect();
    let top = lists.len() - 1;
    let rank = |d: usize| {
        if d == 0 || d > top {
            return 0;
        }
        naive_rank(
            lists[d - 1]
                .iter()
                .map(|f| lists[d].iter().map(|s| u8::from(f.iter().all(|v| s.contains(v)))).collect())
                .collect(),
        )
    };
    let ranks: Vec<usize> = (0..=top + 1).map(rank).collect();
    (0..=top).map(|d| lists[d].len() - ranks[d] - ranks[d + 1]).collect()
}

fn rp2() -> SimplicialComplex {
    let f: [[u32; 3]; 10] = [
        [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
        [1, 2, 4], [1, 3, 4], [1, 3, 5], [2, 3, 5], [2, 4, 5],
    ];
    SimplicialComplex::from_facets(6, &f).unwrap()
}

/// `K × [0, 1]` for a 2-complex `K`, level-1 copies of vertex `v` numbered `v + n`.
fn thicken(k: &SimplicialComplex) -> SimplicialComplex {
    let n = k.num_vertices() as u32;
    let mut tets = Vec::new();
    for t in k.simplices(2).iter() {
        let (a, b, c) = (t[0], t[1], t[2]);
        tets.push([a, b, c, c + n]);
        tets.push([a, b, b + n, c + n]);
        tets.push([a, a + n, b + n, c + n]);
    }
    SimplicialComplex::from_facets(2 * n as usize, &tets).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn boundary_of_boundary_vanishes(c in complex()) {
        let top = c.dim().unwrap();
        for d in 1..top {
            prop_assert!(c.boundary_matrix(d).mul(&c.boundary_matrix(d + 1)).is_zero());
        }
        let cc = c.to_cell_complex();
        for d in 2..=top {
            for j in 0..cc.count(d) {
                let mut chain = vec![0i64; cc.count(d - 2)];
                for (&f, &s) in cc.faces(d, j).iter().zip(cc.signs(d, j).unwrap()) {
                    for (&g, &t) in cc.faces(d - 1, f as usize).iter().zip(cc.signs(d - 1, f as usize).unwrap()) {
                        chain[g as usize] += i64::from(s) * i64::from(t);
                    }
                }
                prop_assert!(chain.iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn betti_numbers_match_oracle(c in complex()) {
        prop_assert_eq!(betti_numbers(&c), oracle_betti(&c));
    }

    #[test]
    fn euler_poincare(c in complex()) {
        let alternating: i64 = betti_numbers(&c)
            .iter()
            .enumerate()
            .map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        prop_assert_eq!(alternating, c.euler_characteristic());
    }

    #[test]
    fn subdivision_preserves_betti_numbers(c in complex()) {
        let sub = c.barycentric_subdivision().complex;
        prop_assert_eq!(betti_numbers(&sub), betti_numbers(&c));
    }

    #[test]
    fn induced_maps_compose(c in complex(), keep_mid in any::<u16>(), keep_sub in any::<u16>()) {
        let facets = c.facets();
        let n = c.num_vertices();
        let pick = |fs: &[Vec<u32>], mask: u16| -> Vec<Vec<u32>> {
            let mut out: Vec<Vec<u32>> = fs.iter().enumerate().filter(|(i, _)| mask >> (i % 16) & 1 == 1).map(|(_, f)| f.clone()).collect();
            if out.is_empty() {
                out.push(fs[0].clone());
            }
            out
        };
        let mid_f = pick(&facets, keep_mid);
        let sub_f = pick(&mid_f, keep_sub);
        let mid = SimplicialComplex::from_facets(n, &mid_f).unwrap();
        let sub = SimplicialComplex::from_facets(n, &sub_f).unwrap();
        let id: Vec<u32> = (0..n as u32).collect();
        let direct = induced_h1_map(&sub, &c, &id).unwrap();
        let composed = induced_h1_map(&mid, &c, &id).unwrap().mul(&induced_h1_map(&sub, &mid, &id).unwrap());
        prop_assert_eq!(direct, composed);
    }
}

#[test]
fn atlas_manifolds_satisfy_poincare_duality() {
    for entry in &ATLAS {
        let (m, _) = entry.build();
        validate_closed_3manifold(&m).unwrap();
        let b = betti_numbers(&m);
        assert_eq!(b.len(), 4);
        assert!((0..4).all(|i| b[i] == b[3 - i]), "{}: {b:?}", entry.name);
    }
}

#[test]
fn kuhn_torus_matches_oracle() {
    let (m, _) = torus_conjugation(4).unwrap();
    let want = oracle_betti(&m);
    assert_eq!(want, [1, 3, 3, 1]);
    assert_eq!(betti_numbers(&m), want);
}

#[test]
fn sphere_suspension_is_a_sphere() {
    let (m, _) = sphere_suspension();
    assert_eq!(betti_numbers(&m), [1, 0, 0, 1]);
    assert_eq!(m.euler_characteristic(), 0);
}

#[test]
fn thickened_projective_plane() {
    let k = rp2();
    assert_eq!(betti_numbers(&k), [1, 1, 1]);
    let w = thicken(&k);
    assert_eq!(betti_numbers(&w), [1, 1, 1, 0]);
    assert_eq!(betti_numbers(&w), oracle_betti(&w));
    // Each end of the thickening carries the generator of H_1.
    let n = k.num_vertices() as u32;
    for shift in [0, n] {
        let inclusion: Vec<u32> = (0..n).map(|v| v + shift).collect();
        let map = induced_h1_map(&k, &w, &inclusion).unwrap();
        assert_eq!(map, Gf2Matrix::parse_rows(&["1"]).unwrap());
    }
    assert_eq!(homology(&w, 2).betti, 1);
}
