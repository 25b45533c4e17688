//! Integrals, distinguished group-likes, quasitriangularity and Radford's
//! formula for `S⁴`.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraElement, Monomial, TaftAlgebra};
use crate::cyclotomic::CyclotomicScalar;
use crate::dual::{convolution_power, convolve, dual_generators, Functional};
use crate::linalg;
use crate::params::GtaParameters;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("{element} is not a left integral: fails for h = {witness}")]
    NotAnIntegral { element: String, witness: String },
    #[error("right action of {generator} on the integral is not a scalar root of unity")]
    NoCharacter { generator: &'static str },
    #[error(
        "distinguished exponents from the integrals are (e_xi, e_g) = {oracle:?}, \
         closed forms give {closed_form:?}"
    )]
    ClosedFormMismatch {
        oracle: (u32, u32),
        closed_form: (u32, u32),
    },
}

/// `h·u = ε(h)·u` for every `h` in `hs`, or the first failing `h`.
fn left_invariance_witness<'a>(
    h: &TaftAlgebra,
    u: &AlgebraElement,
    hs: impl IntoIterator<Item = (String, &'a AlgebraElement)>,
) -> Option<String> {
    for (name, x) in hs {
        let lhs = h.multiply(x, u).unwrap();
        let rhs = u.scale(&h.counit(x).unwrap());
        if lhs != rhs {
            return Some(name);
        }
    }
    None
}

/// `Λ = (Σ_m g^m) x^(Nx-1) y^(Ny-1)`, checked against the generators.
pub fn left_integral(h: &TaftAlgebra) -> Result<AlgebraElement, StructureError> {
    let p = h.params();
    let mut sum = h.zero();
    for m in 0..p.order() {
        sum.add_monomial(Monomial::new(0, 0, m), h.scalar(1));
    }
    let tail = h.element(Monomial::new(p.nx() - 1, p.ny() - 1, 0));
    let lambda = h.multiply(&sum, &tail).unwrap();
    let gens = [h.g(), h.x(), h.y()];
    let named = ["g", "x", "y"]
        .iter()
        .map(|s| s.to_string())
        .zip(gens.iter());
    if let Some(w) = left_invariance_witness(h, &lambda, named) {
        return Err(StructureError::NotAnIntegral {
            element: lambda.to_string(),
            witness: w,
        });
    }
    Ok(lambda)
}

/// Checks `h·u = ε(h)·u` for every basis monomial `h`; returns the first failure.
pub fn left_integral_witness_full(h: &TaftAlgebra, u: &AlgebraElement) -> Option<Monomial> {
    h.basis().find(|m| {
        let e = h.element(*m);
        let lhs = h.multiply(&e, u).unwrap();
        let rhs = u.scale(&h.counit(&e).unwrap());
        lhs != rhs
    })
}

/// Dimension of `{u : h·u = ε(h) u for h = g, x, y}`, from the rank of the stacked
/// linear maps `u ↦ h·u - ε(h) u`.
pub fn left_integral_space_dimension(h: &TaftAlgebra) -> usize {
    let dim = h.dimension();
    let zero = CyclotomicScalar::zero(h.order());
    let mut rows = vec![vec![zero; dim]; 3 * dim];
    for (block, gen) in [h.g(), h.x(), h.y()].iter().enumerate() {
        let eps = h.counit(gen).unwrap();
        for (col, m) in h.basis().enumerate() {
            let image = h
                .multiply(gen, &h.element(m))
                .unwrap()
                .try_sub(&h.element_with(m, eps.clone()))
                .unwrap();
            for (out, c) in image.terms() {
                rows[block * dim + h.index_of(out)][col] = c.clone();
            }
        }
    }
    dim - linalg::rank(rows)
}

/// The `e` in `0..N` with `lhs = q^-e rhs`.
fn root_ratio<T: PartialEq>(n: u32, lhs: &T, rhs_scaled: impl Fn(i64) -> T) -> Option<u32> {
    (0..n).find(|&e| rhs_scaled(-(e as i64)) == *lhs)
}

/// `Υ = (Σ_m ξ^m) ψ^(Nx-1) φ^(Ny-1)`.
pub fn dual_integral(h: &TaftAlgebra) -> Functional {
    let p = h.params();
    let (xi, psi, phi) = dual_generators(h);
    let mut sum = Functional::zero(h);
    let mut pow = Functional::counit(h);
    for _ in 0..p.order() {
        sum = sum.add(&pow);
        pow = convolve(h, &pow, &xi).unwrap();
    }
    let sum = convolve(h, &sum, &convolution_power(h, &psi, p.nx() - 1).unwrap()).unwrap();
    convolve(h, &sum, &convolution_power(h, &phi, p.ny() - 1).unwrap()).unwrap()
}

/// Checks `f ∗ Υ = f(1) Υ` for `f ∈ {ξ, ψ, φ}`; returns the first failing generator.
pub fn dual_integral_witness(h: &TaftAlgebra, upsilon: &Functional) -> Option<&'static str> {
    let (xi, psi, phi) = dual_generators(h);
    for (name, f) in [("xi", xi), ("psi", psi), ("phi", phi)] {
        let lhs = convolve(h, &f, upsilon).unwrap();
        let rhs = upsilon.scale(f.value(h, &Monomial::ONE));
        if lhs != rhs {
            return Some(name);
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DistinguishedExponents {
    /// `α = ξ^e_xi` with `Λ h = α(h) Λ`.
    pub e_xi: u32,
    /// `g^e_g` with `Υ f = f(g^e_g) Υ`.
    pub e_g: u32,
}

/// Exponents read off the integrals: `Λ g = q^-e_xi Λ` and `Υ ∗ ξ = q^-e_g Υ`.
pub fn distinguished_exponents_oracle(
    h: &TaftAlgebra,
) -> Result<DistinguishedExponents, StructureError> {
    let n = h.order();
    let lambda = left_integral(h)?;
    let lambda_g = h.multiply(&lambda, &h.g()).unwrap();
    let e_xi = root_ratio(n, &lambda_g, |e| lambda.mul_root_power(e))
        .ok_or(StructureError::NoCharacter { generator: "g" })?;
    for (gen, name) in [(h.x(), "x"), (h.y(), "y")] {
        if !h.multiply(&lambda, &gen).unwrap().is_zero() {
            return Err(StructureError::NoCharacter { generator: name });
        }
    }
    let upsilon = dual_integral(h);
    let (xi, _, _) = dual_generators(h);
    let upsilon_xi = convolve(h, &upsilon, &xi).unwrap();
    let e_g = root_ratio(n, &upsilon_xi, |e| upsilon.scale(&h.root(e)))
        .ok_or(StructureError::NoCharacter { generator: "xi" })?;
    Ok(DistinguishedExponents { e_xi, e_g })
}

/// `(-(b1 + b2), -(a1 + a2)) mod N`.
pub fn distinguished_exponents_closed_form(p: &GtaParameters) -> DistinguishedExponents {
    let n = p.order() as u64;
    let neg = |a: u32, b: u32| ((2 * n - a as u64 - b as u64) % n) as u32;
    DistinguishedExponents {
        e_xi: neg(p.b1(), p.b2()),
        e_g: neg(p.a1(), p.a2()),
    }
}

/// Both computations, failing if they disagree.
pub fn distinguished_grouplikes(h: &TaftAlgebra) -> Result<DistinguishedExponents, StructureError> {
    let oracle = distinguished_exponents_oracle(h)?;
    let closed = distinguished_exponents_closed_form(h.params());
    if oracle != closed {
        return Err(StructureError::ClosedFormMismatch {
            oracle: (oracle.e_xi, oracle.e_g),
            closed_form: (closed.e_xi, closed.e_g),
        });
    }
    Ok(oracle)
}

/// `N` even, `Nx = Ny = 2` and `a1 = a2 = N/2`.
pub fn is_quasitriangular(p: &GtaParameters) -> bool {
    let n = p.order();
    n.is_multiple_of(2) && p.nx() == 2 && p.ny() == 2 && p.a1() == n / 2 && p.a2() == n / 2
}

#[derive(Debug, Clone, Serialize)]
pub struct RadfordOutcome {
    pub holds: bool,
    pub exponents: DistinguishedExponents,
    pub checked: usize,
    pub witness: Option<String>,
}

/// Right-hand side of Radford's formula on a basis monomial:
/// `α(h₃) α⁻¹(h₁) g_d⁻¹ h₂ g_d` with `α = ξ^e_xi`, `g_d = g^e_g`.
pub fn radford_rhs(h: &TaftAlgebra, m: &Monomial, e: DistinguishedExponents) -> AlgebraElement {
    let ex = e.e_xi as i64;
    let g_d = h.g_power(e.e_g as i64);
    let g_d_inv = h.g_power(-(e.e_g as i64));
    let mut out = h.zero();
    for outer in h.coproduct_terms(m) {
        // α⁻¹ = ξ^-e_xi vanishes off the group-likes
        if !outer.left.is_grouplike() {
            continue;
        }
        let alpha_inv = h.root(ex * outer.left.l as i64);
        for inner in h.coproduct_terms(&outer.right) {
            if !inner.right.is_grouplike() {
                continue;
            }
            let alpha = h.root(-ex * inner.right.l as i64);
            let coeff = &(&outer.coeff * &inner.coeff) * &(&alpha * &alpha_inv);
            let mid = h.element_with(inner.left, coeff);
            let conj = h.product(&[&g_d_inv, &mid, &g_d]).unwrap();
            out = out.try_add(&conj).unwrap();
        }
    }
    out
}

pub fn verify_radford_s4_with(h: &TaftAlgebra, e: DistinguishedExponents) -> RadfordOutcome {
    let mut checked = 0;
    let mut witness = None;
    for m in h.basis() {
        checked += 1;
        let lhs = h.antipode_power(&h.element(m), 4).unwrap();
        if lhs != radford_rhs(h, &m, e) {
            witness = Some(m.to_string());
            break;
        }
    }
    RadfordOutcome {
        holds: witness.is_none(),
        exponents: e,
        checked,
        witness,
    }
}

/// Radford's formula on the full basis, using the exponents read off the integrals.
pub fn verify_radford_s4(h: &TaftAlgebra) -> Result<RadfordOutcome, StructureError> {
    Ok(verify_radford_s4_with(
        h,
        distinguished_exponents_oracle(h)?,
    ))
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub integral: String,
    pub distinguished: DistinguishedExponents,
    pub closed_form: DistinguishedExponents,
    pub closed_form_agrees: bool,
    /// `α = ε`
    pub unimodular: bool,
    /// `g_d = 1`
    pub dual_unimodular: bool,
    pub quasitriangular: bool,
}

pub fn structure_report(h: &TaftAlgebra) -> Result<StructureReport, StructureError> {
    let lambda = left_integral(h)?;
    let distinguished = distinguished_exponents_oracle(h)?;
    let closed_form = distinguished_exponents_closed_form(h.params());
    Ok(StructureReport {
        integral: lambda.to_string(),
        distinguished,
        closed_form,
        closed_form_agrees: distinguished == closed_form,
        unimodular: distinguished.e_xi == 0,
        dual_unimodular: distinguished.e_g == 0,
        quasitriangular: is_quasitriangular(h.params()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(n: i64, a1: i64, a2: i64, b1: i64, b2: i64) -> TaftAlgebra {
        TaftAlgebra::new(GtaParameters::new(n, a1, a2, b1, b2).unwrap())
    }

    #[test]
    fn integral_of_smallest_algebra() {
        let h = alg(2, 1, 1, 1, 1);
        let lambda = left_integral(&h).unwrap();
        let mut expected = h.zero();
        expected.add_monomial(Monomial::new(1, 1, 0), h.scalar(1));
        expected.add_monomial(Monomial::new(1, 1, 1), h.root(1 + 1));
        // (1 + g) x y = xy + q^(b1+b2) xy g
        assert_eq!(lambda, expected);
        assert_eq!(h.multiply(&h.g(), &lambda).unwrap(), lambda);
        assert!(h.multiply(&h.x(), &lambda).unwrap().is_zero());
        assert_eq!(left_integral_witness_full(&h, &lambda), None);
    }

    #[test]
    fn non_integral_rejected() {
        let h = alg(4, 1, 1, 1, 3);
        assert!(left_integral_witness_full(&h, &h.x()).is_some());
    }

    #[test]
    fn integral_space_is_one_dimensional() {
        for p in crate::params::valid_tuples(4) {
            assert_eq!(left_integral_space_dimension(&TaftAlgebra::new(p)), 1);
        }
    }

    #[test]
    fn oracle_exponents_examples() {
        // b1 Nx = 8 = 0 and b2 Ny = 12 = 0 mod 4: the closed forms apply
        let h = alg(4, 1, 1, 1, 3);
        assert_eq!(
            distinguished_grouplikes(&h).unwrap(),
            DistinguishedExponents { e_xi: 0, e_g: 2 }
        );

        let h = alg(8, 1, 2, 1, 6);
        let oracle = distinguished_exponents_oracle(&h).unwrap();
        assert_eq!(oracle, DistinguishedExponents { e_xi: 5, e_g: 1 });
        assert_eq!(
            distinguished_exponents_closed_form(h.params()),
            DistinguishedExponents { e_xi: 1, e_g: 5 }
        );
        assert!(matches!(
            distinguished_grouplikes(&h),
            Err(StructureError::ClosedFormMismatch { .. })
        ));
    }

    #[test]
    fn exponents_follow_the_top_monomial() {
        // α(g) and the dual character come from moving g past x^(Nx-1) y^(Ny-1)
        for n in 2..=8 {
            for p in crate::params::valid_tuples(n) {
                let e = distinguished_exponents_oracle(&TaftAlgebra::new(p.clone())).unwrap();
                let (nx, ny) = (p.nx() - 1, p.ny() - 1);
                assert_eq!(e.e_xi, (p.b1() * nx + p.b2() * ny) % n, "{p}");
                assert_eq!(e.e_g, (p.a1() * nx + p.a2() * ny) % n, "{p}");
            }
        }
    }

    #[test]
    fn quasitriangular_criterion() {
        assert!(is_quasitriangular(
            &GtaParameters::new(2, 1, 1, 1, 1).unwrap()
        ));
        assert!(!is_quasitriangular(
            &GtaParameters::new(8, 1, 2, 1, 6).unwrap()
        ));
        assert!(is_quasitriangular(
            &GtaParameters::new(4, 2, 2, 1, 1).unwrap()
        ));
    }

    #[test]
    fn radford_small() {
        let h = alg(8, 1, 2, 1, 6);
        let outcome = verify_radford_s4(&h).unwrap();
        assert!(outcome.holds, "{outcome:?}");
        assert_eq!(outcome.checked, 128);
        let x = h.x();
        let e = outcome.exponents;
        assert_eq!(
            radford_rhs(&h, &Monomial::new(1, 0, 0), e),
            x.mul_root_power(2)
        );
        assert_eq!(radford_rhs(&h, &Monomial::new(0, 0, 1), e), h.g());
    }

    #[test]
    fn dual_integral_is_left_integral() {
        let h = alg(6, 1, 1, 1, 5);
        let upsilon = dual_integral(&h);
        assert!(!upsilon.is_zero());
        assert_eq!(dual_integral_witness(&h, &upsilon), None);
    }
}
