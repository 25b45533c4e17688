//! Parameter tuples `(N; a1, a2, b1, b2)` of generalised Taft algebras.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

/// The condition a rejected tuple violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Violation {
    /// `a1 * b1 = 0 mod N`
    A1B1Vanishes,
    /// `a2 * b2 = 0 mod N`
    A2B2Vanishes,
    /// `a1 * b2 + a2 * b1 != 0 mod N`
    CrossTermNonzero { value: u64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::A1B1Vanishes => f.write_str("a1*b1 = 0"),
            Violation::A2B2Vanishes => f.write_str("a2*b2 = 0"),
            Violation::CrossTermNonzero { value } => write!(f, "a1*b2 + a2*b1 = {value} != 0"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParameterError {
    #[error("the group of group-likes needs order N >= 2, got {0}")]
    OrderTooSmall(i64),
    #[error("not a parameter tuple: {violation} mod {order}")]
    NotAParameterTuple { order: u32, violation: Violation },
}

/// A validated tuple with its derived nilpotency orders.
///
/// Residues are stored in `[0, N)`; `nx` and `ny` are the additive orders of
/// `a1*b1` and `a2*b2` in `Z_N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GtaParameters {
    order: u32,
    a1: u32,
    a2: u32,
    b1: u32,
    b2: u32,
    nx: u32,
    ny: u32,
}

fn additive_order(value: u64, modulus: u64) -> u32 {
    (modulus / value.gcd(&modulus)) as u32
}

impl GtaParameters {
    /// Validates `(N; a1, a2, b1, b2)`. Negative residues are normalised into `[0, N)`.
    pub fn new(order: i64, a1: i64, a2: i64, b1: i64, b2: i64) -> Result<Self, ParameterError> {
        if order < 2 || order > u32::MAX as i64 {
            return Err(ParameterError::OrderTooSmall(order));
        }
        let n = order as u64;
        let norm = |v: i64| v.rem_euclid(order) as u64;
        let (a1, a2, b1, b2) = (norm(a1), norm(a2), norm(b1), norm(b2));
        let order = order as u32;
        let a1b1 = a1 * b1 % n;
        let a2b2 = a2 * b2 % n;
        if a1b1 == 0 {
            return Err(ParameterError::NotAParameterTuple {
                order,
                violation: Violation::A1B1Vanishes,
            });
        }
        if a2b2 == 0 {
            return Err(ParameterError::NotAParameterTuple {
                order,
                violation: Violation::A2B2Vanishes,
            });
        }
        let cross = (a1 * b2 + a2 * b1) % n;
        if cross != 0 {
            return Err(ParameterError::NotAParameterTuple {
                order,
                violation: Violation::CrossTermNonzero { value: cross },
            });
        }
        // The x-y commutation exponent can be read either way round.
        debug_assert_eq!(a1 * b2 % n, (n - a2 * b1 % n) % n);
        Ok(GtaParameters {
            order,
            a1: a1 as u32,
            a2: a2 as u32,
            b1: b1 as u32,
            b2: b2 as u32,
            nx: additive_order(a1b1, n),
            ny: additive_order(a2b2, n),
        })
    }

    /// Order `N` of the group-like `g` (and of the root of unity `q`).
    pub fn order(&self) -> u32 {
        self.order
    }
    pub fn a1(&self) -> u32 {
        self.a1
    }
    pub fn a2(&self) -> u32 {
        self.a2
    }
    pub fn b1(&self) -> u32 {
        self.b1
    }
    pub fn b2(&self) -> u32 {
        self.b2
    }
    /// Nilpotency order of `x`.
    pub fn nx(&self) -> u32 {
        self.nx
    }
    /// Nilpotency order of `y`.
    pub fn ny(&self) -> u32 {
        self.ny
    }

    /// `(a1, a2, b1, b2)`
    pub fn tuple(&self) -> (u32, u32, u32, u32) {
        (self.a1, self.a2, self.b1, self.b2)
    }

    /// Exponents of the braiding matrix `q_ij = q^(a_i b_j)`.
    pub fn braiding(&self) -> [[u32; 2]; 2] {
        let n = self.order as u64;
        let e = |a: u32, b: u32| (a as u64 * b as u64 % n) as u32;
        [
            [e(self.a1, self.b1), e(self.a1, self.b2)],
            [e(self.a2, self.b1), e(self.a2, self.b2)],
        ]
    }

    /// Exponent `a1*b2` in `xy = q^(a1 b2) yx`.
    pub fn xy_exponent(&self) -> u32 {
        self.braiding()[0][1]
    }

    /// Dimension `N * Nx * Ny` of the algebra.
    pub fn dimension(&self) -> usize {
        self.order as usize * self.nx as usize * self.ny as usize
    }

    /// The tuple `(b1, b2, a1, a2)` presenting the dual Hopf algebra.
    pub fn dual(&self) -> GtaParameters {
        GtaParameters {
            order: self.order,
            a1: self.b1,
            a2: self.b2,
            b1: self.a1,
            b2: self.a2,
            nx: self.nx,
            ny: self.ny,
        }
    }

    /// The same algebra presented with `x` and `y` exchanged: `(a2, a1, b2, b1)`.
    pub fn swapped(&self) -> GtaParameters {
        GtaParameters {
            order: self.order,
            a1: self.a2,
            a2: self.a1,
            b1: self.b2,
            b2: self.b1,
            nx: self.ny,
            ny: self.nx,
        }
    }
}

impl fmt::Display for GtaParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "H(N={}; a1={}, a2={}, b1={}, b2={})",
            self.order, self.a1, self.a2, self.b1, self.b2
        )
    }
}

/// All valid tuples of order `n`, in lexicographic `(a1, a2, b1, b2)` order.
pub fn valid_tuples(n: u32) -> Vec<GtaParameters> {
    let mut out = Vec::new();
    let m = n as i64;
    for a1 in 0..m {
        for a2 in 0..m {
            for b1 in 0..m {
                if a1 * b1 % m == 0 {
                    continue;
                }
                for b2 in 0..m {
                    if a2 * b2 % m == 0 || (a1 * b2 + a2 * b1) % m != 0 {
                        continue;
                    }
                    if let Ok(p) = GtaParameters::new(m, a1, a2, b1, b2) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}
