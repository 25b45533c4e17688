//! Worked examples, each checked against something computed another way.

use gentaft::cyclotomic::cyclotomic_polynomial;
use gentaft::doubles::{Double, DoubleElement, DoubleKind, DualIndex};
use gentaft::dual::{
    check_duality, convolution_power, convolve, dual_generators, functional_monomial, Functional,
};
use gentaft::pii::{
    classify, odd_part_solution, oracle_pairs, scan, verify_certificate, PiiCertificate,
    ScanConfig, ScanMode,
};
use gentaft::structure::{
    distinguished_exponents_oracle, is_quasitriangular, left_integral, verify_radford_s4,
};
use gentaft::{gauss_binomial, CyclotomicScalar, GtaParameters, Monomial, TaftAlgebra};
use num_bigint::BigInt;

fn params(n: i64, a1: i64, a2: i64, b1: i64, b2: i64) -> GtaParameters {
    GtaParameters::new(n, a1, a2, b1, b2).unwrap()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&c| c.into()).collect()
}

#[test]
fn cyclotomic_polynomials_divide_x_n_minus_one() {
    assert_eq!(cyclotomic_polynomial(4).unwrap(), ints(&[1, 0, 1]));
    assert_eq!(cyclotomic_polynomial(6).unwrap(), ints(&[1, -1, 1]));
    // 1 + q + ... + q^(N-1) = 0 for every N > 1
    for n in 2..40 {
        let sum = (0..n as i64).fold(CyclotomicScalar::zero(n), |acc, e| {
            acc + CyclotomicScalar::root_power(n, e)
        });
        assert!(sum.is_zero(), "N = {n}");
    }
}

#[test]
fn gauss_binomial_against_expanded_polynomial() {
    // [4 choose 2]_t = 1 + t + 2t^2 + t^3 + t^4, then reduce at t = q
    let expanded = CyclotomicScalar::from_polynomial(5, &ints(&[1, 1, 2, 1, 1]));
    assert_eq!(gauss_binomial(4, 2, 1, 5).unwrap(), expanded);
}

#[test]
fn relations_of_the_small_example() {
    let p = params(8, 1, 2, 1, -2);
    assert_eq!(p.tuple(), (1, 2, 1, 6));
    assert_eq!((p.nx(), p.ny(), p.dimension()), (8, 2, 128));
    let h = TaftAlgebra::new(p.clone());
    let gx = h.multiply(&h.g(), &h.x()).unwrap();
    assert_eq!(gx, h.element_with(Monomial::new(1, 0, 1), h.root(1)));
    let x_top = h.power(&h.x(), p.nx()).unwrap();
    assert!(x_top.is_zero());
    let mut u = h.element_with(Monomial::new(2, 1, 3), h.scalar(1));
    u.add_monomial(Monomial::ONE, h.scalar(5));
    assert_eq!(h.counit(&u).unwrap(), h.scalar(5));
    assert!(GtaParameters::new(4, 1, 1, 1, 1).is_err());
    assert_eq!(params(48, 34, 4, 26, 4).nx(), 12);
}

#[test]
fn antipode_powers_on_generators() {
    let h = TaftAlgebra::new(params(8, 1, 2, 1, 6));
    let p = h.params().clone();
    assert_eq!(h.antipode(&h.g()).unwrap(), h.g_power(-1));
    let s2x = h.antipode_power(&h.x(), 2).unwrap();
    assert_eq!(s2x, h.x().mul_root_power((p.a1() * p.b1()) as i64));
    let s4y = h.antipode_power(&h.y(), 4).unwrap();
    assert_eq!(s4y, h.y().mul_root_power(2 * (p.a2() * p.b2()) as i64));
}

#[test]
fn dual_generators_and_their_relations() {
    let h = TaftAlgebra::new(params(8, 1, 2, 1, 6));
    let p = h.params().clone();
    let (xi, psi, phi) = dual_generators(&h);
    assert_eq!(xi.value(&h, &Monomial::new(0, 0, 1)), &h.root(-1));
    assert!(psi.value(&h, &Monomial::new(1, 0, 0)).is_one());
    assert!(phi.value(&h, &Monomial::ONE).is_zero());
    assert!(convolution_power(&h, &psi, p.nx()).unwrap().is_zero());
    let xi_n = convolution_power(&h, &xi, p.order()).unwrap();
    assert!(xi_n.first_difference(&h, &Functional::counit(&h)).is_none());
    let psi_phi = functional_monomial(&h, 0, 1, 1).unwrap();
    let phi_psi = convolve(&h, &phi, &psi).unwrap();
    let twisted = phi_psi.scale(&h.root((p.b1() * p.a2()) as i64));
    assert!(psi_phi == twisted);
    let report = check_duality(&h);
    assert!(report.passed());
    assert_eq!(report.dual_tuple, (1, 6, 1, 2));
}

#[test]
fn integrals_and_radford() {
    let h = TaftAlgebra::new(params(2, 1, 1, 1, 1));
    let lambda = left_integral(&h).unwrap();
    let one_plus_g = h.unit().try_add(&h.g()).unwrap();
    let xy = h.multiply(&h.x(), &h.y()).unwrap();
    assert_eq!(lambda, h.multiply(&one_plus_g, &xy).unwrap());

    let h = TaftAlgebra::new(params(8, 1, 2, 1, 6));
    let radford = verify_radford_s4(&h).unwrap();
    assert!(radford.holds);
    assert_eq!(radford.checked, 128);
    let e = distinguished_exponents_oracle(&h).unwrap();
    // Λ = (Σ g^m) x^7 y, and pushing g left through x^7 y gives Λ g = q^-(7 b1 + b2) Λ
    assert_eq!(e.e_xi, (7 + 6) % 8);
}

#[test]
fn quasitriangular_criterion() {
    assert!(is_quasitriangular(&params(2, 1, 1, 1, 1)));
    assert!(!is_quasitriangular(&params(8, 1, 2, 1, 6)));
    assert!(is_quasitriangular(&params(4, 2, 2, 1, 1)));
}

#[test]
fn pairs_in_involution_examples() {
    assert!(oracle_pairs(&params(8, 1, 2, 1, 6)).is_empty());
    let p = params(6, 1, 1, 1, 5);
    let pairs = oracle_pairs(&p);
    let first_modular = pairs.iter().find(|c| c.modular).unwrap();
    assert_eq!((first_modular.c, first_modular.d), (0, 1));
    let h = TaftAlgebra::new(p.clone());
    assert!(verify_certificate(&h, &PiiCertificate::new(6, 0, 1)).implements_s2);
    let bad = verify_certificate(&h, &PiiCertificate::new(6, 1, 1));
    assert!(!bad.implements_s2);
    assert!(bad.witness.is_some());

    let odd = params(3, 1, 1, 1, 2);
    let cert = odd_part_solution(&odd).unwrap();
    assert_eq!((cert.c, cert.d), (0, 1));
    assert!(odd_part_solution(&params(8, 1, 2, 1, 6)).is_err());
}

#[test]
fn classifier_on_the_order_48_pair() {
    let r = classify(&params(48, 34, 4, 26, 4));
    assert_eq!((r.n, r.j), (4, 3));
    assert_eq!((r.det_mu, r.tau, r.has_pair), (12, 2, false));
    let r = classify(&params(48, 34, 28, 26, 4));
    assert_eq!((r.det_mu, r.tau, r.has_pair), (2, 1, true));
}

#[test]
fn small_scan() {
    let report = scan(&ScanConfig::new(12, ScanMode::Exhaustive)).unwrap();
    assert_eq!(report.disagreements(), 0);
    for row in &report.rows {
        if row.n % 2 == 1 || row.n == 4 {
            assert_eq!(row.pii_free, 0, "N = {}", row.n);
        }
    }
    let row8 = report.rows.iter().find(|r| r.n == 8).unwrap();
    assert!(row8.pii_free >= 1);
}

#[test]
fn drinfeld_double_of_the_smallest_algebra() {
    let h = TaftAlgebra::new(params(2, 1, 1, 1, 1));
    let d = Double::new(&h, false).unwrap();
    let eps = DualIndex::EPSILON;
    let kind = DoubleKind::Drinfeld;
    let g = d.basis_element(kind, eps, Monomial::new(0, 0, 1));
    let x = d.basis_element(kind, eps, Monomial::new(1, 0, 0));
    // with trivial dual legs the product is the one in H: g x = q^b1 x g
    let mut expected = DoubleElement::zero(kind);
    expected.add_term(eps, Monomial::new(1, 0, 1), h.root(1));
    assert!(d.multiply(&g, &x).unwrap() == expected);
    let unit = d.unit(kind);
    assert!(d.multiply(&unit, &x).unwrap() == x);
    let cert = oracle_pairs(h.params())[0];
    assert!(d.pii_isomorphism_check(&cert).unwrap().holds());
}
