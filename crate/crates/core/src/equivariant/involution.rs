use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::simplicial::SimplicialComplex;

/// A simplicial involution, given by its action on vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Involution {
    perm: Vec<u32>,
}

impl Involution {
    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    pub fn image(&self, v: u32) -> u32 {
        self.perm[v as usize]
    }

    /// Sorted image of a simplex.
    pub fn apply(&self, simplex: &[u32]) -> Vec<u32> {
        let mut out: Vec<u32> = simplex.iter().map(|&v| self.image(v)).collect();
        out.sort_unstable();
        out
    }

    pub fn fixed_points(&self) -> Vec<u32> {
        (0..self.perm.len() as u32).filter(|&v| self.image(v) == v).collect()
    }

    pub(crate) fn from_perm_unchecked(perm: Vec<u32>) -> Self {
        Self { perm }
    }
}

/// Checks that `perm` is an involution of the vertex set mapping simplices to simplices.
pub fn validate_involution(c: &SimplicialComplex, perm: &[u32]) -> Result<Involution> {
    let n = c.num_vertices();
    if perm.len() != n {
        return Err(Error::InvolutionLength {
            expected: n,
            got: perm.len(),
        });
    }
    if let Some((v, &p)) = perm.iter().enumerate().find(|(_, &p)| p as usize >= n) {
        return Err(Error::NotAnInvolution(format!(
            "vertex {v} maps to {p}, outside 0..{n}"
        )));
    }
    if let Some((v, &p)) = perm
        .iter()
        .enumerate()
        .find(|&(v, &p)| perm[p as usize] as usize != v)
    {
        return Err(Error::NotAnInvolution(format!(
            "vertex {v} maps to {p}, which maps to {}",
            perm[p as usize]
        )));
    }
    let tau = Involution {
        perm: perm.to_vec(),
    };
    simplex_images(c, &tau, Execution::default())?;
    Ok(tau)
}

/// For every dimension, the index of the image of each simplex.
pub(crate) fn simplex_images(
    c: &SimplicialComplex,
    tau: &Involution,
    exec: Execution,
) -> Result<Vec<Vec<u32>>> {
    let dims = c.dim().map_or(0, |d| d + 1);
    let mut out = Vec::with_capacity(dims);
    for d in 0..dims {
        let table = c.simplices(d);
        let images = exec.map_range(table.len(), |i| {
            let s = table.get(i);
            let img = tau.apply(s);
            table.index_of(&img).map(|j| j as u32).ok_or_else(|| Error::NotSimplicial {
                simplex: s.to_vec(),
                image: img,
            })
        });
        out.push(images.into_iter().collect::<Result<Vec<u32>>>()?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> SimplicialComplex {
        SimplicialComplex::from_facets(4, &[[0, 1], [1, 2], [2, 3], [0, 3]]).unwrap()
    }

    #[test]
    fn identity_is_valid() {
        let t = validate_involution(&square(), &[0, 1, 2, 3]).unwrap();
        assert_eq!(t.fixed_points(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn reflection_is_valid() {
        let t = validate_involution(&square(), &[0, 3, 2, 1]).unwrap();
        assert_eq!(t.fixed_points(), vec![0, 2]);
        assert_eq!(t.apply(&[0, 1]), vec![0, 3]);
    }

    #[test]
    fn three_cycle_is_rejected() {
        let e = validate_involution(&square(), &[1, 2, 0, 3]).unwrap_err();
        assert!(matches!(e, Error::NotAnInvolution(_)));
    }

    #[test]
    fn non_simplicial_swap_is_rejected() {
        // swapping 0 and 1 sends edge {1,2} to {0,2}, which is missing
        let e = validate_involution(&square(), &[1, 0, 2, 3]).unwrap_err();
        assert!(matches!(e, Error::NotSimplicial { .. }));
    }

    #[test]
    fn wrong_length() {
        assert!(matches!(
            validate_involution(&square(), &[0, 1]),
            Err(Error::InvolutionLength { expected: 4, got: 2 })
        ));
        assert!(matches!(
            validate_involution(&square(), &[0, 1, 2, 9]),
            Err(Error::NotAnInvolution(_))
        ));
    }
}
