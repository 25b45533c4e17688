//! Pairs in involution `(l, β) = (g^d, ξ^-c)`.
//!
//! Such a pair exists iff `a1 c + b1 d = a1 b1` and `a2 c + b2 d = a2 b2` mod N
//! have a solution; it is modular iff moreover `c d = 0`. Existence is decided
//! both by enumerating `Z_N²` and by a 2-adic criterion on the parameters.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraElement, Monomial, TaftAlgebra};
use crate::cyclotomic::CyclotomicScalar;
use crate::params::{valid_tuples, GtaParameters};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PiiError {
    #[error("N = {0} is even; the odd-order solution needs 2 to be invertible")]
    EvenOrder(u32),
    #[error("scan bound must be at least 2, got {0}")]
    BoundTooSmall(u32),
    #[error("classifier and brute force disagree on {0}")]
    Disagreement(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PiiCertificate {
    pub c: u32,
    pub d: u32,
    pub modular: bool,
}

impl PiiCertificate {
    pub fn new(order: u32, c: u32, d: u32) -> Self {
        PiiCertificate {
            c,
            d,
            modular: (c as u64 * d as u64).is_multiple_of(order as u64),
        }
    }
}

impl fmt::Display for PiiCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(c={}, d={}{})",
            self.c,
            self.d,
            if self.modular { ", modular" } else { "" }
        )
    }
}

/// Whether `(c, d)` solves both congruences.
pub fn solves(p: &GtaParameters, c: u32, d: u32) -> bool {
    let n = p.order() as u64;
    let (a1, a2, b1, b2) = p.tuple();
    let (a1, a2, b1, b2, c, d) = (
        a1 as u64, a2 as u64, b1 as u64, b2 as u64, c as u64, d as u64,
    );
    (a1 * c + b1 * d) % n == a1 * b1 % n && (a2 * c + b2 * d) % n == a2 * b2 % n
}

/// All solutions in lexicographic `(c, d)` order.
pub fn oracle_pairs(p: &GtaParameters) -> Vec<PiiCertificate> {
    let n = p.order();
    (0..n)
        .flat_map(|c| (0..n).map(move |d| (c, d)))
        .filter(|&(c, d)| solves(p, c, d))
        .map(|(c, d)| PiiCertificate::new(n, c, d))
        .collect()
}

/// `(has a pair, has a modular pair)`, stopping early when both are found.
pub fn oracle_summary(p: &GtaParameters) -> (bool, bool) {
    let n = p.order();
    let mut any = false;
    for c in 0..n {
        for d in 0..n {
            if solves(p, c, d) {
                any = true;
                if (c as u64 * d as u64).is_multiple_of(n as u64) {
                    return (true, true);
                }
            }
        }
    }
    (any, false)
}

/// `c = (b1 + b2)/2`, `d = (a1 + a2)/2` mod N for odd N.
pub fn odd_part_solution(p: &GtaParameters) -> Result<PiiCertificate, PiiError> {
    let n = p.order() as u64;
    if n.is_multiple_of(2) {
        return Err(PiiError::EvenOrder(p.order()));
    }
    let half = n.div_ceil(2);
    let c = half * ((p.b1() + p.b2()) as u64 % n) % n;
    let d = half * ((p.a1() + p.a2()) as u64 % n) % n;
    Ok(PiiCertificate::new(p.order(), c as u32, d as u32))
}

/// Which branch of the 2-adic criterion decided the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassifierReason {
    /// `N` is odd.
    OddOrder,
    /// Some parameter is `0 mod 2^n`.
    ZeroCoefficient,
    /// `𝔞1 + 𝔟2 >= n`.
    PowerSumAtLeastN,
    /// `𝔞1 = 𝔞2`.
    EqualPowers,
    /// `det μ ≠ 0` and `τ` does not exceed the smallest power.
    TauWithinPowers,
    /// `τ` exceeds the smallest power: no pair.
    TauExceedsPowers,
    /// `det μ = 0 mod 2^n`: no pair.
    DeterminantVanishes,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifierReport {
    /// 2-adic valuation of `N`.
    pub n: u32,
    /// Odd part of `N`.
    pub j: u32,
    /// Whether `(a1, b1)` and `(a2, b2)` were exchanged to get `𝔞1 <= 𝔞2`.
    pub swapped: bool,
    /// `(𝔞1, 𝔞2, 𝔟1, 𝔟2)` after the swap; `None` where the parameter is `0 mod 2^n`.
    pub powers: [Option<u32>; 4],
    /// Odd parts mod `2^n`, rows `(a_i, b_i)`; zero where the parameter is `0 mod 2^n`.
    pub mu: [[u64; 2]; 2],
    pub det_mu: u64,
    pub tau: u32,
    pub nu: u64,
    pub has_pair: bool,
    /// Verdict of the criterion comparing `τ` against `min(𝔞1, 𝔞2)` only.
    pub stated_criterion_has_pair: bool,
    pub reason: ClassifierReason,
}

fn split_power(value: u64) -> (u32, u64) {
    let k = value.trailing_zeros();
    (k, value >> k)
}

/// 2-adic decision of whether a pair in involution exists.
///
/// With `N = 2^n j`, each parameter is written `2^power · μ` mod `2^n` with `μ`
/// odd. There is no pair exactly when all `μ` are nonzero, `𝔞1 + 𝔟2 < n`,
/// `𝔞1 ≠ 𝔞2`, and either `det μ = 0` or `τ > min(𝔞1, 𝔞2, 𝔟1, 𝔟2)`.
pub fn classify(p: &GtaParameters) -> ClassifierReport {
    let order = p.order();
    let n = order.trailing_zeros();
    let j = order >> n;
    let mut report = ClassifierReport {
        n,
        j,
        swapped: false,
        powers: [None; 4],
        mu: [[0; 2]; 2],
        det_mu: 0,
        tau: 0,
        nu: 0,
        has_pair: true,
        stated_criterion_has_pair: true,
        reason: ClassifierReason::OddOrder,
    };
    if n == 0 {
        return report;
    }
    let modulus = 1u64 << n;
    let mut data: Vec<Option<(u32, u64)>> = [p.a1(), p.a2(), p.b1(), p.b2()]
        .iter()
        .map(|&v| {
            let r = v as u64 % modulus;
            (r != 0).then(|| split_power(r))
        })
        .collect();
    if let (Some((pa1, _)), Some((pa2, _))) = (data[0], data[1]) {
        if pa1 > pa2 {
            data.swap(0, 1);
            data.swap(2, 3);
            report.swapped = true;
        }
    }
    report.powers = [0, 1, 2, 3].map(|k| data[k].map(|(pw, _)| pw));
    let mu_of = |k: usize| data[k].map_or(0, |(_, m)| m);
    report.mu = [[mu_of(0), mu_of(2)], [mu_of(1), mu_of(3)]];
    let det = (report.mu[0][0] * report.mu[1][1] % modulus + modulus
        - report.mu[0][1] * report.mu[1][0] % modulus)
        % modulus;
    report.det_mu = det;
    if det != 0 {
        let (tau, nu) = split_power(det);
        report.tau = tau;
        report.nu = nu;
    }
    let [Some(a1), Some(a2), Some(b1), Some(b2)] = report.powers else {
        report.reason = ClassifierReason::ZeroCoefficient;
        return report;
    };
    if a1 + b2 >= n {
        report.reason = ClassifierReason::PowerSumAtLeastN;
        return report;
    }
    if a1 == a2 {
        report.reason = ClassifierReason::EqualPowers;
        return report;
    }
    if det == 0 {
        report.reason = ClassifierReason::DeterminantVanishes;
        report.has_pair = false;
        report.stated_criterion_has_pair = false;
        return report;
    }
    report.stated_criterion_has_pair = report.tau <= a1.min(a2);
    if report.tau > a1.min(a2).min(b1).min(b2) {
        report.reason = ClassifierReason::TauExceedsPowers;
        report.has_pair = false;
    } else {
        report.reason = ClassifierReason::TauWithinPowers;
    }
    report
}

/// Outcome of checking `S²(h) = β(h₃) β⁻¹(h₁) l h₂ l⁻¹` on the whole basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    pub implements_s2: bool,
    pub checked: usize,
    pub witness: Option<String>,
    /// `β(l) = 1`
    pub beta_l_is_one: bool,
    /// `beta_l_is_one` agrees with the certificate's modular flag.
    pub modular_flag_consistent: bool,
}

/// Checks candidate pairs on one algebra.
pub struct CertificateVerifier<'a> {
    h: &'a TaftAlgebra,
}

impl<'a> CertificateVerifier<'a> {
    pub fn new(h: &'a TaftAlgebra) -> Self {
        CertificateVerifier { h }
    }

    /// `ξ^e(m)`. `ξ` is the character with `ξ(g) = q^-1` vanishing on `x` and `y`.
    fn xi_power_value(&self, e: i64, m: &Monomial) -> Option<CyclotomicScalar> {
        m.is_grouplike().then(|| self.h.root(-e * m.l as i64))
    }

    /// `β(h₃) β⁻¹(h₁) l h₂ l⁻¹` for `β = ξ^-c`, `l = g^d`.
    ///
    /// `β` and `β⁻¹` vanish off the group-likes, so only the Sweedler term with
    /// group-like outer legs survives.
    pub fn conjugation(&self, m: &Monomial, c: u32, d: u32) -> AlgebraElement {
        let h = self.h;
        let (c, d) = (c as i64, d as i64);
        let outer = h.coproduct_term(m, 0, 0).expect("m is a basis monomial");
        let inner = h
            .coproduct_term(&outer.right, m.i, m.j)
            .expect("right leg keeps the x and y degrees");
        let (Some(b1), Some(b3)) = (
            self.xi_power_value(c, &outer.left),
            self.xi_power_value(-c, &inner.right),
        ) else {
            return h.zero();
        };
        let coeff = &(&outer.coeff * &inner.coeff) * &(&b1 * &b3);
        let mid = h.element_with(inner.left, coeff);
        h.product(&[&h.g_power(d), &mid, &h.g_power(-d)]).unwrap()
    }

    pub fn verify(&self, cert: &PiiCertificate) -> CertificateCheck {
        let h = self.h;
        let p = h.params();
        let generators = [
            Monomial::new(0, 0, 1),
            Monomial::new(1, 0, 0),
            Monomial::new(0, 1, 0),
        ];
        let mut checked = 0;
        let mut witness = None;
        for m in generators.into_iter().chain(h.basis()) {
            checked += 1;
            let s2 = h.antipode_power(&h.element(m), 2).unwrap();
            if s2 != self.conjugation(&m, cert.c, cert.d) {
                witness = Some(m.to_string());
                break;
            }
        }
        let l = Monomial::new(0, 0, cert.d % p.order());
        let beta_l_is_one = self
            .xi_power_value(-(cert.c as i64), &l)
            .is_some_and(|v| v.is_one());
        CertificateCheck {
            implements_s2: witness.is_none(),
            checked,
            witness,
            beta_l_is_one,
            modular_flag_consistent: beta_l_is_one == cert.modular,
        }
    }
}

/// Checks the pair `(g^d, ξ^-c)` against `S²` on every basis monomial.
pub fn verify_certificate(h: &TaftAlgebra, cert: &PiiCertificate) -> CertificateCheck {
    CertificateVerifier::new(h).verify(cert)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanMode {
    /// Every valid tuple for every order up to the bound.
    Exhaustive,
    /// A fixed-seed uniform sample per order.
    Sampled,
    /// Exhaustive up to [`HYBRID_EXHAUSTIVE_BOUND`], sampled above.
    Hybrid,
}

pub const HYBRID_EXHAUSTIVE_BOUND: u32 = 24;
pub const DEFAULT_SAMPLES_PER_ORDER: usize = 1000;
pub const DEFAULT_SCAN_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScanConfig {
    pub max_n: u32,
    pub mode: ScanMode,
    pub samples_per_order: usize,
    pub seed: u64,
}

impl ScanConfig {
    pub fn new(max_n: u32, mode: ScanMode) -> Self {
        ScanConfig {
            max_n,
            mode,
            samples_per_order: DEFAULT_SAMPLES_PER_ORDER,
            seed: DEFAULT_SCAN_SEED,
        }
    }

    fn exhaustive_for(&self, n: u32) -> bool {
        match self.mode {
            ScanMode::Exhaustive => true,
            ScanMode::Sampled => false,
            ScanMode::Hybrid => n <= HYBRID_EXHAUSTIVE_BOUND,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub n: u32,
    pub exhaustive: bool,
    pub tuples: usize,
    pub pii_free: usize,
    pub modular_free: usize,
    pub disagreements: usize,
    pub stated_criterion_mismatches: usize,
    /// Smallest disagreeing tuple `(a1, a2, b1, b2)`.
    pub first_disagreement: Option<(u32, u32, u32, u32)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub config: ScanConfig,
    pub rows: Vec<ScanRow>,
}

impl ScanReport {
    pub fn disagreements(&self) -> usize {
        self.rows.iter().map(|r| r.disagreements).sum()
    }

    pub fn first_disagreement(&self) -> Option<GtaParameters> {
        self.rows.iter().find_map(|r| {
            r.first_disagreement.map(|(a1, a2, b1, b2)| {
                GtaParameters::new(r.n as i64, a1 as i64, a2 as i64, b1 as i64, b2 as i64)
                    .expect("scanned tuples are valid")
            })
        })
    }

    pub fn tuples(&self) -> usize {
        self.rows.iter().map(|r| r.tuples).sum()
    }
}

/// Uniform sample of valid tuples of order `n`, by rejection from `Z_n^4`.
pub fn sample_tuples(n: u32, count: usize, seed: u64) -> Vec<GtaParameters> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 32));
    let mut out = Vec::with_capacity(count);
    let m = n as i64;
    while out.len() < count {
        let mut draw = || rng.gen_range(0..m);
        let (a1, a2, b1, b2) = (draw(), draw(), draw(), draw());
        if let Ok(p) = GtaParameters::new(m, a1, a2, b1, b2) {
            out.push(p);
        }
    }
    out
}

#[cfg(feature = "parallel")]
fn map_collect<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_collect<T, R>(items: &[T], f: impl Fn(&T) -> R) -> Vec<R> {
    items.iter().map(f).collect()
}

fn scan_order(n: u32, config: &ScanConfig) -> ScanRow {
    let exhaustive = config.exhaustive_for(n);
    let tuples = if exhaustive {
        valid_tuples(n)
    } else {
        sample_tuples(n, config.samples_per_order, config.seed)
    };
    let results = map_collect(&tuples, |p| {
        let (any, modular) = oracle_summary(p);
        let report = classify(p);
        (
            any,
            modular,
            report.has_pair,
            report.stated_criterion_has_pair,
        )
    });
    let mut row = ScanRow {
        n,
        exhaustive,
        tuples: tuples.len(),
        pii_free: 0,
        modular_free: 0,
        disagreements: 0,
        stated_criterion_mismatches: 0,
        first_disagreement: None,
    };
    for (p, (any, modular, classified, stated)) in tuples.iter().zip(results) {
        row.pii_free += !any as usize;
        row.modular_free += !modular as usize;
        row.stated_criterion_mismatches += (stated != any) as usize;
        if classified != any {
            row.disagreements += 1;
            let t = p.tuple();
            if row.first_disagreement.is_none_or(|f| t < f) {
                row.first_disagreement = Some(t);
            }
        }
    }
    row
}

/// Compares [`classify`] with brute force over the tuples selected by `config`.
///
/// The report does not depend on how the work is scheduled.
pub fn scan(config: &ScanConfig) -> Result<ScanReport, PiiError> {
    if config.max_n < 2 {
        return Err(PiiError::BoundTooSmall(config.max_n));
    }
    let orders: Vec<u32> = (2..=config.max_n).collect();
    let rows = map_collect(&orders, |&n| scan_order(n, config));
    Ok(ScanReport {
        config: *config,
        rows,
    })
}

/// [`scan`], failing with the smallest counterexample on any disagreement.
pub fn cross_validate(config: &ScanConfig) -> Result<ScanReport, PiiError> {
    let report = scan(config)?;
    match report.first_disagreement() {
        Some(p) => Err(PiiError::Disagreement(p.to_string())),
        None => Ok(report),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: i64, a1: i64, a2: i64, b1: i64, b2: i64) -> GtaParameters {
        GtaParameters::new(n, a1, a2, b1, b2).unwrap()
    }

    #[test]
    fn xi_powers_match_convolution() {
        use crate::dual::{convolution_power, dual_generators};
        for p in [params(4, 1, 1, 1, 3), params(6, 1, 1, 1, 5)] {
            let h = TaftAlgebra::new(p.clone());
            let v = CertificateVerifier::new(&h);
            let (xi, _, _) = dual_generators(&h);
            for k in 0..p.order() {
                let f = convolution_power(&h, &xi, k).unwrap();
                for m in h.basis() {
                    let direct = v
                        .xi_power_value(k as i64, &m)
                        .unwrap_or_else(|| h.scalar(0));
                    assert_eq!(&direct, f.value(&h, &m), "xi^{k} at {m}");
                }
            }
        }
    }

    #[test]
    fn oracle_examples() {
        assert!(oracle_pairs(&params(8, 1, 2, 1, -2)).is_empty());
        let pairs = oracle_pairs(&params(6, 1, 1, 1, 5));
        assert!(pairs.contains(&PiiCertificate {
            c: 0,
            d: 1,
            modular: true
        }));
        assert!(!oracle_pairs(&params(3, 1, 1, 1, 2)).is_empty());
    }

    #[test]
    fn odd_solution() {
        let p = params(3, 1, 1, 1, 2);
        let cert = odd_part_solution(&p).unwrap();
        assert_eq!((cert.c, cert.d), (0, 1));
        assert!(oracle_pairs(&p).contains(&cert));
        assert_eq!(
            odd_part_solution(&params(8, 1, 2, 1, 6)),
            Err(PiiError::EvenOrder(8))
        );
    }

    #[test]
    fn classifier_order_48() {
        let r = classify(&params(48, 34, 4, 26, 4));
        assert_eq!((r.n, r.j), (4, 3));
        assert_eq!(r.powers, [Some(1), Some(2), Some(1), Some(2)]);
        assert_eq!(r.det_mu, 12);
        assert_eq!(r.tau, 2);
        assert!(!r.has_pair);
        assert!(!r.stated_criterion_has_pair);

        let r = classify(&params(48, 34, 28, 26, 4));
        assert_eq!(r.det_mu, 2);
        assert_eq!(r.tau, 1);
        assert!(r.has_pair);
    }

    #[test]
    fn stated_criterion_counterexample() {
        let p = params(16, 2, 4, 1, 6);
        let r = classify(&p);
        assert!(oracle_pairs(&p).is_empty());
        assert!(!r.has_pair);
        assert!(r.stated_criterion_has_pair);
    }

    #[test]
    fn certificate_checks() {
        let h = TaftAlgebra::new(params(6, 1, 1, 1, 5));
        let good = verify_certificate(&h, &PiiCertificate::new(6, 0, 1));
        assert!(good.implements_s2 && good.beta_l_is_one && good.modular_flag_consistent);
        assert_eq!(good.checked, 3 + h.dimension());
        let bad = verify_certificate(&h, &PiiCertificate::new(6, 1, 1));
        assert!(!bad.implements_s2);
        assert!(bad.witness.is_some());
    }

    #[test]
    fn small_scan() {
        let report = cross_validate(&ScanConfig::new(8, ScanMode::Exhaustive)).unwrap();
        let counts: Vec<usize> = report.rows.iter().map(|r| r.tuples).collect();
        assert_eq!(counts, vec![1, 8, 16, 64, 113, 216, 240]);
        assert_eq!(report.rows[2].pii_free, 0);
        assert!(report.rows[6].pii_free >= 1);
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_tuples(40, 50, 1);
        assert_eq!(a, sample_tuples(40, 50, 1));
        assert_ne!(a, sample_tuples(40, 50, 2));
    }
}
