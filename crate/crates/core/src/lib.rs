//! Exact computations in the generalised Taft algebras `H_q(a1, a2, b1, b2)`.
//!
//! Scalars live in `Z[q]` with `q` a primitive `N`-th root of unity. On top of
//! that the crate builds the Hopf algebra on its PBW basis, its dual, integrals,
//! the Drinfeld and anti-Drinfeld doubles, and decides whether a pair in
//! involution exists, both by brute force and by a 2-adic criterion.
//!
//! ```
//! use gentaft::pii::{classify, oracle_pairs};
//! use gentaft::{GtaParameters, TaftAlgebra};
//!
//! let p = GtaParameters::new(8, 1, 2, 1, -2)?;
//! assert_eq!((p.nx(), p.ny(), p.dimension()), (8, 2, 128));
//! assert!(!classify(&p).has_pair);
//! assert!(oracle_pairs(&p).is_empty());
//!
//! let h = TaftAlgebra::new(p);
//! let gx = h.multiply(&h.g(), &h.x())?;
//! println!("{gx}"); // (q)·x g
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod algebra;
pub mod axioms;
pub mod cyclotomic;
pub mod doubles;
pub mod dual;
pub mod linalg;
pub mod params;
pub mod pii;
pub mod rewrite;
pub mod structure;

pub use algebra::{AlgebraElement, AlgebraError, Monomial, TaftAlgebra, TensorElement};
pub use cyclotomic::{gauss_binomial, CyclotomicScalar};
pub use params::{valid_tuples, GtaParameters, ParameterError};
