//! Exact orbifold Chern-number bookkeeping for branched surface pairs over
//! `P²` and the Hirzebruch surfaces, together with the hyperbolicity
//! criteria that consume those numbers.
//!
//! ```
//! use orbigeo::{cyclic_cover_chern, check_segre};
//! let r = cyclic_cover_chern(5, 5).unwrap();
//! assert_eq!((r.c1sq.to_string(), r.c2.to_string()), ("5".into(), "55".into()));
//! assert!(!check_segre(&r).holds());
//! ```

pub mod curves;
pub mod defect;
pub mod error;
pub mod hyperbolicity;
pub mod invariants;
pub mod rational;
pub mod singularity;
pub mod surface;

pub use curves::*;
pub use defect::*;
pub use error::{Error, Result};
pub use hyperbolicity::*;
pub use invariants::*;
pub use rational::Rational;
pub use singularity::*;
pub use surface::*;

pub mod scenario;
