//! The dual Hopf algebra `H°` as functionals on the PBW basis, multiplied by
//! convolution `(f∗h)(m) = Σ f(m₁) h(m₂)`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError, Monomial, TaftAlgebra};
use crate::cyclotomic::CyclotomicScalar;
use crate::params::GtaParameters;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DualError {
    #[error("functional index (r={r}, s={s}, t={t}) out of range for N={n}, Nx={nx}, Ny={ny}")]
    IndexOutOfRange {
        r: u32,
        s: u32,
        t: u32,
        n: u32,
        nx: u32,
        ny: u32,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A linear functional on `H`, stored as its value on every basis monomial.
#[derive(Clone, PartialEq, Eq)]
pub struct Functional {
    params: GtaParameters,
    values: Vec<CyclotomicScalar>,
}

impl Functional {
    pub fn zero(h: &TaftAlgebra) -> Self {
        Functional {
            params: (**h.params()).clone(),
            values: vec![CyclotomicScalar::zero(h.order()); h.dimension()],
        }
    }

    /// Builds a functional from its values, in basis order.
    pub fn from_fn(h: &TaftAlgebra, f: impl Fn(Monomial) -> CyclotomicScalar) -> Self {
        Functional {
            params: (**h.params()).clone(),
            values: h.basis().map(f).collect(),
        }
    }

    /// The counit `ε`, the unit for convolution.
    pub fn counit(h: &TaftAlgebra) -> Self {
        Self::from_fn(h, |m| {
            CyclotomicScalar::from_integer(h.order(), TaftAlgebra::counit_monomial(&m) as i64)
        })
    }

    /// Point mass at `m`.
    pub fn point_mass(h: &TaftAlgebra, m: Monomial) -> Self {
        let mut f = Self::zero(h);
        f.values[h.index_of(&m)] = CyclotomicScalar::one(h.order());
        f
    }

    pub fn params(&self) -> &GtaParameters {
        &self.params
    }

    /// Values in basis order.
    pub fn values(&self) -> &[CyclotomicScalar] {
        &self.values
    }

    pub fn value(&self, h: &TaftAlgebra, m: &Monomial) -> &CyclotomicScalar {
        &self.values[h.index_of(m)]
    }

    pub fn evaluate(&self, h: &TaftAlgebra, u: &AlgebraElement) -> CyclotomicScalar {
        let mut acc = CyclotomicScalar::zero(h.order());
        for (m, c) in u.terms() {
            acc.add_product(c, self.value(h, m));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(CyclotomicScalar::is_zero)
    }

    pub fn scale(&self, s: &CyclotomicScalar) -> Self {
        Functional {
            params: self.params.clone(),
            values: self.values.iter().map(|v| v * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            self.params, other.params,
            "functionals on different algebras"
        );
        Functional {
            params: self.params.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// First basis monomial where the two functionals differ.
    pub fn first_difference(&self, h: &TaftAlgebra, other: &Self) -> Option<Monomial> {
        self.values
            .iter()
            .zip(&other.values)
            .position(|(a, b)| a != b)
            .map(|k| h.monomial_at(k))
    }

    /// Indices of nonzero values.
    pub fn support(&self, h: &TaftAlgebra) -> Vec<Monomial> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, _)| h.monomial_at(k))
            .collect()
    }
}

impl fmt::Debug for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nonzero = self.values.iter().filter(|v| !v.is_zero()).count();
        write!(f, "Functional({}; {nonzero} nonzero values)", self.params)
    }
}

fn check_params(h: &TaftAlgebra, f: &Functional) -> Result<(), AlgebraError> {
    if **h.params() == f.params {
        Ok(())
    } else {
        Err(AlgebraError::ParameterMismatch {
            left: h.params().to_string(),
            right: f.params.to_string(),
        })
    }
}

/// `ξ`, `ψ`, `φ`: `ξ(x^i y^j g^l) = q^-l [i=j=0]`, `ψ = q^(-b1 l) [i=1, j=0]`,
/// `φ = q^(-b2 l) [i=0, j=1]`.
pub fn dual_generators(h: &TaftAlgebra) -> (Functional, Functional, Functional) {
    let p = h.params().clone();
    let n = h.order();
    let at = |i: u32, j: u32, step: u32| {
        Functional::from_fn(h, move |m| {
            if m.i == i && m.j == j {
                CyclotomicScalar::root_power(n, -((step as i64) * m.l as i64))
            } else {
                CyclotomicScalar::zero(n)
            }
        })
    };
    (at(0, 0, 1), at(1, 0, p.b1()), at(0, 1, p.b2()))
}

pub fn convolve(
    h: &TaftAlgebra,
    f: &Functional,
    g: &Functional,
) -> Result<Functional, AlgebraError> {
    check_params(h, f)?;
    check_params(h, g)?;
    let mut out = Functional::zero(h);
    for (k, m) in h.basis().enumerate() {
        let acc = &mut out.values[k];
        for t in h.coproduct_terms(&m) {
            let a = f.value(h, &t.left);
            if a.is_zero() {
                continue;
            }
            let b = g.value(h, &t.right);
            if b.is_zero() {
                continue;
            }
            acc.add_product(&(a * b), &t.coeff);
        }
    }
    Ok(out)
}

pub fn convolution_power(
    h: &TaftAlgebra,
    f: &Functional,
    k: u32,
) -> Result<Functional, AlgebraError> {
    let mut acc = Functional::counit(h);
    for _ in 0..k {
        acc = convolve(h, &acc, f)?;
    }
    Ok(acc)
}

/// `ξ^r ∗ ψ^s ∗ φ^t`.
pub fn functional_monomial(
    h: &TaftAlgebra,
    r: u32,
    s: u32,
    t: u32,
) -> Result<Functional, DualError> {
    let p = h.params();
    if r >= p.order() || s >= p.nx() || t >= p.ny() {
        return Err(DualError::IndexOutOfRange {
            r,
            s,
            t,
            n: p.order(),
            nx: p.nx(),
            ny: p.ny(),
        });
    }
    let (xi, psi, phi) = dual_generators(h);
    let a = convolution_power(h, &xi, r)?;
    let b = convolve(h, &a, &convolution_power(h, &psi, s)?)?;
    Ok(convolve(h, &b, &convolution_power(h, &phi, t)?)?)
}

/// `e_(i,j,l) = (Σ_m q^(i m) g^m) x^j y^l`, the vectors the basis functionals are paired with.
pub fn pairing_vector(h: &TaftAlgebra, i: u32, j: u32, l: u32) -> AlgebraElement {
    let p = h.params();
    let mut out = h.zero();
    let xy = h.element(Monomial::new(j, l, 0));
    for m in 0..p.order() {
        let term = h
            .multiply(&h.g_power(m as i64), &xy)
            .unwrap()
            .mul_root_power(i as i64 * m as i64);
        out = out.try_add(&term).unwrap();
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationOutcome {
    pub relation: &'static str,
    pub holds: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DualityReport {
    /// `(b1, b2, a1, a2)`
    pub dual_tuple: (u32, u32, u32, u32),
    pub dual_tuple_valid: bool,
    pub relations: Vec<RelationOutcome>,
    /// Every entry `P[(r,s,t),(i,j,l)]` is nonzero exactly when the indices match.
    pub pairing_diagonal_supported: bool,
    pub pairing_witness: Option<String>,
    pub pairing_entries_checked: usize,
    /// `P[(r,s,t),(r,s,t)]`, indexed like the monomial `x^s y^t g^r`.
    #[serde(skip)]
    pub pairing_diagonal: Vec<CyclotomicScalar>,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.dual_tuple_valid
            && self.pairing_diagonal_supported
            && self.relations.iter().all(|r| r.holds)
    }
}

fn relation(
    h: &TaftAlgebra,
    name: &'static str,
    lhs: Functional,
    rhs: Functional,
) -> RelationOutcome {
    let witness = lhs.first_difference(h, &rhs).map(|m| m.to_string());
    RelationOutcome {
        relation: name,
        holds: witness.is_none(),
        witness,
    }
}

/// All basis functionals `ξ^r ψ^s φ^t`, indexed like the monomial `x^s y^t g^r`.
pub fn basis_functionals(h: &TaftAlgebra) -> Vec<Functional> {
    let p = h.params();
    let (xi, psi, phi) = dual_generators(h);
    let mut xi_pows = vec![Functional::counit(h)];
    for r in 1..p.order() as usize {
        xi_pows.push(convolve(h, &xi_pows[r - 1], &xi).unwrap());
    }
    let psi_pows: Vec<Functional> = (0..p.nx())
        .map(|s| convolution_power(h, &psi, s).unwrap())
        .collect();
    let phi_pows: Vec<Functional> = (0..p.ny())
        .map(|t| convolution_power(h, &phi, t).unwrap())
        .collect();
    let mut out = vec![Functional::zero(h); h.dimension()];
    for (s, psi_s) in psi_pows.iter().enumerate() {
        for (t, phi_t) in phi_pows.iter().enumerate() {
            for (r, xi_r) in xi_pows.iter().enumerate() {
                let f = convolve(h, &convolve(h, xi_r, psi_s).unwrap(), phi_t).unwrap();
                out[h.index_of(&Monomial::new(s as u32, t as u32, r as u32))] = f;
            }
        }
    }
    out
}

/// Verifies the relations of `H°` in terms of `ξ, ψ, φ` and that the
/// functionals `ξ^r ψ^s φ^t` pair nondegenerately with the vectors `e_(i,j,l)`.
pub fn check_duality(h: &TaftAlgebra) -> DualityReport {
    let p = h.params().clone();
    let (xi, psi, phi) = dual_generators(h);
    let conv = |a: &Functional, b: &Functional| convolve(h, a, b).unwrap();
    let pow = |a: &Functional, k: u32| convolution_power(h, a, k).unwrap();
    let root = |e: u64| CyclotomicScalar::root_power(p.order(), e as i64);
    let relations = vec![
        relation(h, "xi^N = eps", pow(&xi, p.order()), Functional::counit(h)),
        relation(h, "psi^Nx = 0", pow(&psi, p.nx()), Functional::zero(h)),
        relation(h, "phi^Ny = 0", pow(&phi, p.ny()), Functional::zero(h)),
        relation(
            h,
            "xi psi = q^a1 psi xi",
            conv(&xi, &psi),
            conv(&psi, &xi).scale(&root(p.a1() as u64)),
        ),
        relation(
            h,
            "xi phi = q^a2 phi xi",
            conv(&xi, &phi),
            conv(&phi, &xi).scale(&root(p.a2() as u64)),
        ),
        relation(
            h,
            "psi phi = q^(b1 a2) phi psi",
            conv(&psi, &phi),
            conv(&phi, &psi).scale(&root(p.b1() as u64 * p.a2() as u64)),
        ),
    ];

    let functionals = basis_functionals(h);
    let n = p.order();
    let mut diagonal = vec![CyclotomicScalar::zero(n); h.dimension()];
    let mut witness = None;
    let mut checked = 0usize;
    'outer: for (k, f) in functionals.iter().enumerate() {
        let idx = h.monomial_at(k);
        let (r, s, t) = (idx.l, idx.i, idx.j);
        for j in 0..p.nx() {
            for l in 0..p.ny() {
                // values of f on g^m x^j y^l = q^(m(b1 j + b2 l)) x^j y^l g^m
                let twist = (p.b1() as u64 * j as u64 + p.b2() as u64 * l as u64) % n as u64;
                let values: Vec<CyclotomicScalar> = (0..n)
                    .map(|m| {
                        f.value(h, &Monomial::new(j, l, m))
                            .mul_root_power((m as u64 * twist) as i64)
                    })
                    .collect();
                let all_zero = values.iter().all(CyclotomicScalar::is_zero);
                for i in 0..n {
                    checked += 1;
                    let entry = if all_zero {
                        CyclotomicScalar::zero(n)
                    } else {
                        let mut acc = CyclotomicScalar::zero(n);
                        for (m, v) in values.iter().enumerate() {
                            acc += &v.mul_root_power(i as i64 * m as i64);
                        }
                        acc
                    };
                    let matched = (i, j, l) == (r, s, t);
                    if matched {
                        diagonal[k] = entry.clone();
                    }
                    if entry.is_zero() == matched {
                        witness = Some(format!(
                            "P[(r,s,t)=({r},{s},{t}), (i,j,l)=({i},{j},{l})] = {entry}"
                        ));
                        break 'outer;
                    }
                }
            }
        }
    }

    let dual = p.dual();
    let dual_tuple = dual.tuple();
    let dual_tuple_valid = GtaParameters::new(
        n as i64,
        dual_tuple.0 as i64,
        dual_tuple.1 as i64,
        dual_tuple.2 as i64,
        dual_tuple.3 as i64,
    )
    .is_ok_and(|d| d == dual && d.dual() == *p);
    DualityReport {
        dual_tuple,
        dual_tuple_valid,
        relations,
        pairing_diagonal_supported: witness.is_none(),
        pairing_witness: witness,
        pairing_entries_checked: checked,
        pairing_diagonal: diagonal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(n: i64, a1: i64, a2: i64, b1: i64, b2: i64) -> TaftAlgebra {
        TaftAlgebra::new(GtaParameters::new(n, a1, a2, b1, b2).unwrap())
    }

    #[test]
    fn generator_values() {
        let h = alg(8, 1, 2, 1, 6);
        let (xi, psi, phi) = dual_generators(&h);
        assert_eq!(*xi.value(&h, &Monomial::new(0, 0, 1)), h.root(-1));
        assert!(psi.value(&h, &Monomial::new(1, 0, 0)).is_one());
        assert!(phi.value(&h, &Monomial::ONE).is_zero());
    }

    #[test]
    fn convolution_examples() {
        let h = alg(6, 1, 1, 1, 5);
        let (xi, psi, _) = dual_generators(&h);
        let eps = Functional::counit(&h);
        assert_eq!(convolve(&h, &eps, &psi).unwrap(), psi);
        assert_eq!(convolve(&h, &psi, &eps).unwrap(), psi);
        assert_eq!(convolution_power(&h, &xi, 6).unwrap(), eps);
        assert!(convolution_power(&h, &psi, h.params().nx())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn functional_monomial_examples() {
        let h = alg(8, 1, 2, 1, 6);
        let p = h.params().clone();
        assert_eq!(
            functional_monomial(&h, 0, 0, 0).unwrap(),
            Functional::counit(&h)
        );
        assert_eq!(
            functional_monomial(&h, 1, 0, 0).unwrap(),
            dual_generators(&h).0
        );
        let (_, psi, phi) = dual_generators(&h);
        let phi_psi = convolve(&h, &phi, &psi).unwrap();
        let e = p.b1() as i64 * p.a2() as i64;
        assert_eq!(
            functional_monomial(&h, 0, 1, 1).unwrap(),
            phi_psi.scale(&h.root(e))
        );
        assert!(matches!(
            functional_monomial(&h, 8, 0, 0),
            Err(DualError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn duality_small_cases() {
        let h = alg(8, 1, 2, 1, 6);
        let report = check_duality(&h);
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.dual_tuple, (1, 6, 1, 2));

        let h = alg(2, 1, 1, 1, 1);
        let report = check_duality(&h);
        assert!(report.passed());
        assert_eq!(report.dual_tuple, (1, 1, 1, 1));
        assert_eq!(report.pairing_diagonal[0], h.scalar(2));
        assert_eq!(report.pairing_entries_checked, 64);
    }

    #[test]
    fn evaluate_is_linear() {
        let h = alg(4, 1, 1, 1, 3);
        let (xi, _, _) = dual_generators(&h);
        let u = h.g().try_add(&h.g_power(2)).unwrap();
        assert_eq!(xi.evaluate(&h, &u), h.root(-1) + h.root(-2));
    }
}
