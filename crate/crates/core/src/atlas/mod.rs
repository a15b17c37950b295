//! Built-in equivariant manifolds and triangulation files.

mod builders;
mod format;

pub use builders::{sphere_suspension, torus_conjugation};
pub use format::{
    load_triangulation, parse_triangulation, triangulation_to_json, write_triangulation,
    TRIANGULATION_FORMAT,
};

use crate::equivariant::Involution;
use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

/// Resolution used when `torus_conjugation` is named without one.
pub const DEFAULT_TORUS_RESOLUTION: usize = 4;

/// What the pipeline should produce for an atlas entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Expected {
    pub k: usize,
    pub maximal: bool,
    pub doubly_even: bool,
    /// Known code the result is equivalent to.
    pub code: &'static str,
}

#[derive(Debug, Clone, Copy)]
pub struct AtlasEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub expected: Expected,
}

impl AtlasEntry {
    pub fn build(&self) -> (SimplicialComplex, Involution) {
        builtin(self.name).expect("atlas entries build")
    }
}

pub const ATLAS: [AtlasEntry; 2] = [
    AtlasEntry {
        name: "sphere_suspension",
        description: "16-cell boundary S^3, involution negating three coordinates",
        expected: Expected {
            k: 2,
            maximal: true,
            doubly_even: false,
            code: "repetition2",
        },
    },
    AtlasEntry {
        name: "torus_conjugation",
        description: "Kuhn-triangulated 3-torus (m = 4), involution x -> -x",
        expected: Expected {
            k: 8,
            maximal: true,
            doubly_even: true,
            code: "extended_hamming8",
        },
    },
];

pub fn entry(name: &str) -> Option<&'static AtlasEntry> {
    ATLAS.iter().find(|e| e.name == name)
}

/// Builds a named input; `torus_conjugation:M` selects the grid resolution.
pub fn builtin(name: &str) -> Result<(SimplicialComplex, Involution)> {
    match name {
        "sphere_suspension" => Ok(sphere_suspension()),
        "torus_conjugation" => torus_conjugation(DEFAULT_TORUS_RESOLUTION),
        _ => match name.strip_prefix("torus_conjugation:") {
            Some(m) => {
                let m: usize = m
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid grid resolution in {name:?}")))?;
                torus_conjugation(m)
            }
            None => Err(Error::Parse(format!("unknown built-in input {name:?}"))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        for e in &ATLAS {
            let (c, _) = e.build();
            assert_eq!(c.dim(), Some(3));
        }
        assert_eq!(builtin("torus_conjugation:6").unwrap().0.count(3), 6 * 216);
        assert!(builtin("torus_conjugation:5").is_err());
        assert!(builtin("lens_space").is_err());
    }
}
