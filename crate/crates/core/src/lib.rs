//! Binary self-dual codes from orientation-reversing involutions with
//! isolated fixed points on closed triangulated 3-manifolds.
//!
//! The pipeline: [`equivariant::regularize`] subdivides until the fixed
//! points have disjoint invariant stars, [`equivariant::build_w`] forms the
//! orbit space of the complement of those stars, and
//! [`equivariant::extract_code`] returns the kernel of `H_1(∂W) → H_1(W)`
//! over the two-element field. [`codes`] analyzes the result and [`atlas`]
//! holds the built-in examples.
//!
//! ```
//! use involcode::atlas::sphere_suspension;
//! use involcode::equivariant::{extract_code, regularize};
//!
//! let (m, tau) = sphere_suspension();
//! let em = regularize(m, tau).unwrap();
//! let code = extract_code(&em).unwrap();
//! assert_eq!(code.generator_rows(), vec!["11"]);
//! ```
//!
//! With the default `parallel` feature, hot loops run on rayon; every such
//! loop takes an [`Execution`] and produces identical results sequentially.

pub mod atlas;
pub mod codes;
pub mod equivariant;
pub mod error;
pub mod exec;
pub mod gf2;
pub mod simplicial;

pub use error::{Error, ErrorClass, Result};
pub use exec::Execution;
