//! Exact arithmetic in the cyclotomic integers `Z[q] = Z[X]/(Φ_N)`.
//!
//! Every scalar is stored as the unique remainder modulo the cyclotomic
//! polynomial `Φ_N`, so two scalars are equal exactly when their coefficient
//! vectors are equal. Coefficients are arbitrary-precision integers.
//!
//! Arithmetic goes through a per-order [`CyclotomicRing`] that caches `Φ_N` and
//! the reductions of `X^k` for `0 <= k < N`. Products are first accumulated in
//! the group ring `Z[X]/(X^N - 1)` and then folded back with that table.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;
use thiserror::Error;

type Coeffs = SmallVec<[BigInt; 4]>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CyclotomicError {
    #[error("the order of a root of unity must be at least 1")]
    ZeroOrder,
    #[error("gaussian binomial [{n} choose {k}] requires k <= n")]
    BinomialRange { n: u32, k: u32 },
    #[error("division by zero in Z[q] (order {order})")]
    DivisionByZero { order: u32 },
    #[error("{numerator} is not divisible by {denominator} in Z[q] (order {order})")]
    NotDivisible {
        order: u32,
        numerator: String,
        denominator: String,
    },
}

/// Dense integer polynomial, lowest degree first.
pub type IntPolynomial = Vec<BigInt>;

fn polynomial_cache() -> &'static Mutex<HashMap<u32, Arc<IntPolynomial>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<IntPolynomial>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Returns `Φ_N` computed by exact division of `X^N - 1` by the cyclotomic
/// polynomials of the proper divisors of `N`.
pub fn cyclotomic_polynomial(order: u32) -> Result<IntPolynomial, CyclotomicError> {
    if order == 0 {
        return Err(CyclotomicError::ZeroOrder);
    }
    Ok(cyclotomic_polynomial_cached(order).as_ref().clone())
}

fn cyclotomic_polynomial_cached(order: u32) -> Arc<IntPolynomial> {
    if let Some(p) = polynomial_cache().lock().unwrap().get(&order) {
        return Arc::clone(p);
    }
    // X^N - 1
    let mut numerator: IntPolynomial = vec![BigInt::zero(); order as usize + 1];
    numerator[0] = -BigInt::one();
    numerator[order as usize] = BigInt::one();
    for d in 1..order {
        if order.is_multiple_of(d) {
            let divisor = cyclotomic_polynomial_cached(d);
            numerator = divide_monic(&numerator, &divisor);
        }
    }
    let result = Arc::new(numerator);
    polynomial_cache()
        .lock()
        .unwrap()
        .entry(order)
        .or_insert_with(|| Arc::clone(&result));
    result
}

/// Exact quotient of `numerator` by a monic `divisor`; the remainder must vanish.
fn divide_monic(numerator: &[BigInt], divisor: &[BigInt]) -> IntPolynomial {
    let dn = numerator.len() - 1;
    let dd = divisor.len() - 1;
    let mut rem: Vec<BigInt> = numerator.to_vec();
    let mut quotient = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let lead = rem[k + dd].clone();
        if lead.is_zero() {
            continue;
        }
        for (t, c) in divisor.iter().enumerate() {
            rem[k + t] -= &lead * c;
        }
        quotient[k] = lead;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quotient
}

/// Multiplies integer polynomials.
pub fn polynomial_mul(a: &[BigInt], b: &[BigInt]) -> IntPolynomial {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Cached reduction data for one order `N`.
#[derive(Debug)]
pub struct CyclotomicRing {
    order: u32,
    degree: usize,
    modulus: Arc<IntPolynomial>,
    /// `X^k mod Φ_N` for `k in degree..order`, stored sparsely.
    folds: Vec<Vec<(usize, BigInt)>>,
}

impl CyclotomicRing {
    /// Returns the shared ring for `order`, building it on first use.
    pub fn get(order: u32) -> &'static CyclotomicRing {
        assert!(order >= 1, "cyclotomic order must be positive");
        static RINGS: OnceLock<Mutex<HashMap<u32, &'static CyclotomicRing>>> = OnceLock::new();
        let rings = RINGS.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(r) = rings.lock().unwrap().get(&order) {
            return r;
        }
        let ring: &'static CyclotomicRing = Box::leak(Box::new(CyclotomicRing::build(order)));
        rings.lock().unwrap().entry(order).or_insert(ring)
    }

    fn build(order: u32) -> Self {
        let modulus = cyclotomic_polynomial_cached(order);
        let degree = modulus.len() - 1;
        let mut folds = Vec::with_capacity(order as usize - degree.min(order as usize));
        // X^degree = -(lower terms of Φ_N); then multiply by X repeatedly.
        let mut current: Vec<BigInt> = modulus[..degree].iter().map(|c| -c).collect();
        for k in degree..order as usize {
            if k > degree {
                let top = current[degree - 1].clone();
                for t in (1..degree).rev() {
                    current[t] = current[t - 1].clone();
                }
                current[0] = BigInt::zero();
                if !top.is_zero() {
                    for (t, c) in modulus[..degree].iter().enumerate() {
                        current[t] -= &top * c;
                    }
                }
            }
            folds.push(
                current
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(t, c)| (t, c.clone()))
                    .collect(),
            );
        }
        CyclotomicRing {
            order,
            degree,
            modulus,
            folds,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Euler totient of the order, the length of every coefficient vector.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// Folds a group-ring vector (length `order`) into canonical form.
    fn reduce(&self, mut acc: Vec<BigInt>) -> Coeffs {
        let mut out: Coeffs = SmallVec::with_capacity(self.degree);
        for k in (self.degree..acc.len()).rev() {
            let v = std::mem::take(&mut acc[k]);
            if v.is_zero() {
                continue;
            }
            for (t, c) in &self.folds[k - self.degree] {
                if c.is_one() {
                    acc[*t] += &v;
                } else if (-c).is_one() {
                    acc[*t] -= &v;
                } else {
                    acc[*t] += &v * c;
                }
            }
        }
        acc.truncate(self.degree);
        out.extend(acc);
        out
    }

    fn zero_acc(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.order as usize]
    }
}

/// An element of `Z[q]`, `q` a primitive `order`-th root of unity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicScalar {
    order: u32,
    coeffs: Coeffs,
}

impl CyclotomicScalar {
    pub fn zero(order: u32) -> Self {
        let ring = CyclotomicRing::get(order);
        CyclotomicScalar {
            order,
            coeffs: (0..ring.degree).map(|_| BigInt::zero()).collect(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_integer(order, 1)
    }

    pub fn from_integer(order: u32, value: impl Into<BigInt>) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value.into();
        s
    }

    /// `q^exponent`, i.e. `X^(exponent mod N)` reduced modulo `Φ_N`.
    pub fn root_power(order: u32, exponent: i64) -> Self {
        let ring = CyclotomicRing::get(order);
        let e = exponent.rem_euclid(order as i64) as usize;
        let mut acc = ring.zero_acc();
        acc[e] = BigInt::one();
        CyclotomicScalar {
            order,
            coeffs: ring.reduce(acc),
        }
    }

    /// Builds a scalar from an arbitrary integer polynomial in `q`.
    pub fn from_polynomial(order: u32, poly: &[BigInt]) -> Self {
        let ring = CyclotomicRing::get(order);
        let mut acc = ring.zero_acc();
        for (k, c) in poly.iter().enumerate() {
            acc[k % order as usize] += c;
        }
        CyclotomicScalar {
            order,
            coeffs: ring.reduce(acc),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Canonical coefficients in the power basis `1, q, ..., q^(φ(N)-1)`.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Returns the integer if the scalar lies in `Z`.
    pub fn as_integer(&self) -> Option<&BigInt> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn ring(&self) -> &'static CyclotomicRing {
        CyclotomicRing::get(self.order)
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(
            self.order, other.order,
            "mixed cyclotomic orders {} and {}",
            self.order, other.order
        );
    }

    /// `self * q^exponent`, a rotation in the group ring followed by a fold.
    pub fn mul_root_power(&self, exponent: i64) -> Self {
        let n = self.order as usize;
        let e = exponent.rem_euclid(n as i64) as usize;
        if e == 0 {
            return self.clone();
        }
        let ring = self.ring();
        let mut acc = ring.zero_acc();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc[(i + e) % n] = c.clone();
            }
        }
        CyclotomicScalar {
            order: self.order,
            coeffs: ring.reduce(acc),
        }
    }

    pub fn mul_integer(&self, k: &BigInt) -> Self {
        CyclotomicScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// `self += a * b` without an intermediate allocation for the product.
    pub fn add_product(&mut self, a: &Self, b: &Self) {
        self.check_order(a);
        self.check_order(b);
        if a.is_zero() || b.is_zero() {
            return;
        }
        let product = a * b;
        *self += &product;
    }

    /// Applies the Galois automorphism `q -> q^k`; `k` must be coprime to the order.
    pub fn galois_conjugate(&self, k: u32) -> Self {
        let n = self.order as usize;
        debug_assert_eq!((k as usize).gcd(&n), 1);
        let ring = self.ring();
        let mut acc = ring.zero_acc();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc[(i * k as usize) % n] += c;
            }
        }
        CyclotomicScalar {
            order: self.order,
            coeffs: ring.reduce(acc),
        }
    }

    /// Product of the non-trivial Galois conjugates; `self * cofactor` is the norm.
    fn norm_cofactor(&self) -> Self {
        let mut acc = Self::one(self.order);
        for k in 2..self.order.max(2) {
            if k.gcd(&self.order) == 1 {
                acc = &acc * &self.galois_conjugate(k);
            }
        }
        acc
    }

    /// Field norm `N_{Q(q)/Q}(self)`.
    pub fn norm(&self) -> BigInt {
        let n = self * &self.norm_cofactor();
        n.as_integer()
            .cloned()
            .expect("norm of a cyclotomic integer is rational")
    }

    /// Exact quotient in `Z[q]`. Fails when the quotient is not integral.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, CyclotomicError> {
        self.check_order(divisor);
        if divisor.is_zero() {
            return Err(CyclotomicError::DivisionByZero { order: self.order });
        }
        let cofactor = divisor.norm_cofactor();
        let norm = (divisor * &cofactor)
            .as_integer()
            .cloned()
            .expect("norm of a cyclotomic integer is rational");
        let scaled = self * &cofactor;
        let mut coeffs = Coeffs::with_capacity(scaled.coeffs.len());
        for c in scaled.coeffs.iter() {
            let (quot, rem) = c.div_rem(&norm);
            if !rem.is_zero() {
                return Err(CyclotomicError::NotDivisible {
                    order: self.order,
                    numerator: self.to_string(),
                    denominator: divisor.to_string(),
                });
            }
            coeffs.push(quot);
        }
        Ok(CyclotomicScalar {
            order: self.order,
            coeffs,
        })
    }
}

/// Gaussian binomial `[n choose k]_t` at `t = q^exponent`, from
/// `[n,k]_t = [n-1,k-1]_t + t^k [n-1,k]_t`.
pub fn gauss_binomial(
    n: u32,
    k: u32,
    exponent: i64,
    order: u32,
) -> Result<CyclotomicScalar, CyclotomicError> {
    if order == 0 {
        return Err(CyclotomicError::ZeroOrder);
    }
    if k > n {
        return Err(CyclotomicError::BinomialRange { n, k });
    }
    if k == 0 || k == n {
        return Ok(CyclotomicScalar::one(order));
    }
    // row[k] holds [m, k] for the current m.
    let mut row: Vec<CyclotomicScalar> = vec![CyclotomicScalar::one(order)];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for kk in 0..=m {
            let left = if kk >= 1 {
                row[kk as usize - 1].clone()
            } else {
                CyclotomicScalar::zero(order)
            };
            let right = if kk < m {
                row[kk as usize].mul_root_power(exponent * kk as i64)
            } else {
                CyclotomicScalar::zero(order)
            };
            next.push(left + right);
        }
        row = next;
    }
    Ok(row.swap_remove(k as usize))
}

impl fmt::Display for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let magnitude = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let unit = magnitude.is_one();
            match i {
                0 => write!(f, "{magnitude}")?,
                1 if unit => f.write_str("q")?,
                1 => write!(f, "{magnitude}q")?,
                _ if unit => write!(f, "q^{i}")?,
                _ => write!(f, "{magnitude}q^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})_{}", self.order)
    }
}

impl<'a> Add<&'a CyclotomicScalar> for &'a CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn add(self, rhs: &CyclotomicScalar) -> CyclotomicScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn add(mut self, rhs: CyclotomicScalar) -> CyclotomicScalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&CyclotomicScalar> for CyclotomicScalar {
    fn add_assign(&mut self, rhs: &CyclotomicScalar) {
        self.check_order(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&CyclotomicScalar> for CyclotomicScalar {
    fn sub_assign(&mut self, rhs: &CyclotomicScalar) {
        self.check_order(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl<'a> Sub<&'a CyclotomicScalar> for &'a CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn sub(self, rhs: &CyclotomicScalar) -> CyclotomicScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn sub(mut self, rhs: CyclotomicScalar) -> CyclotomicScalar {
        self -= &rhs;
        self
    }
}

impl Neg for &CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn neg(self) -> CyclotomicScalar {
        CyclotomicScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn neg(mut self) -> CyclotomicScalar {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<'a> Mul<&'a CyclotomicScalar> for &'a CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn mul(self, rhs: &CyclotomicScalar) -> CyclotomicScalar {
        self.check_order(rhs);
        let ring = self.ring();
        let n = self.order as usize;
        let mut acc = ring.zero_acc();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc[(i + j) % n] += a * b;
            }
        }
        CyclotomicScalar {
            order: self.order,
            coeffs: ring.reduce(acc),
        }
    }
}

impl Mul for CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn mul(self, rhs: CyclotomicScalar) -> CyclotomicScalar {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2).unwrap(), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4).unwrap(), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6).unwrap(), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12).unwrap(), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(0), Err(CyclotomicError::ZeroOrder));
    }

    #[test]
    fn phi_105_has_a_coefficient_two() {
        let p = cyclotomic_polynomial(105).unwrap();
        assert_eq!(p.len() - 1, 48);
        assert!(p.iter().any(|c| *c == BigInt::from(-2)));
    }

    #[test]
    fn divisor_product_is_x_pow_n_minus_one() {
        for n in 1..=128u32 {
            let mut prod = ints(&[1]);
            for d in 1..=n {
                if n % d == 0 {
                    prod = polynomial_mul(&prod, &cyclotomic_polynomial(d).unwrap());
                }
            }
            let mut expected = vec![BigInt::zero(); n as usize + 1];
            expected[0] = BigInt::from(-1);
            expected[n as usize] = BigInt::one();
            assert_eq!(prod, expected, "N = {n}");
        }
    }

    #[test]
    fn root_power_examples() {
        assert!(CyclotomicScalar::root_power(4, 0).is_one());
        assert_eq!(
            CyclotomicScalar::root_power(4, 2),
            CyclotomicScalar::from_integer(4, -1)
        );
        assert_eq!(
            CyclotomicScalar::root_power(4, 7),
            CyclotomicScalar::root_power(4, 3)
        );
        assert_eq!(
            CyclotomicScalar::root_power(4, -1),
            CyclotomicScalar::root_power(4, 3)
        );
    }

    #[test]
    fn root_power_is_one_exactly_on_multiples() {
        for n in 1..=24u32 {
            for e in 0..(4 * n as i64) {
                let p = CyclotomicScalar::root_power(n, e);
                assert_eq!(p.is_one(), e % n as i64 == 0, "N={n} e={e}");
            }
        }
    }

    #[test]
    fn ring_examples() {
        let one = CyclotomicScalar::one(4);
        assert!((&one + &(-&one)).is_zero());
        let total = (0..4).fold(CyclotomicScalar::zero(4), |acc, e| {
            acc + CyclotomicScalar::root_power(4, e)
        });
        assert!(total.is_zero());
        assert!((CyclotomicScalar::root_power(6, 1) * CyclotomicScalar::root_power(6, 5)).is_one());
    }

    #[test]
    fn gauss_binomial_examples() {
        for n in 0..6 {
            assert!(gauss_binomial(n, 0, 3, 7).unwrap().is_one());
        }
        let expected = CyclotomicScalar::one(9) + CyclotomicScalar::root_power(9, 4);
        assert_eq!(gauss_binomial(2, 1, 4, 9).unwrap(), expected);
        // [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4, reduced mod Φ_5.
        let poly = ints(&[1, 1, 2, 1, 1]);
        assert_eq!(
            gauss_binomial(4, 2, 1, 5).unwrap(),
            CyclotomicScalar::from_polynomial(5, &poly)
        );
        // 1 + q + 2q^2 + q^3 + q^4 = q^2 mod Φ_5
        assert_eq!(
            gauss_binomial(4, 2, 1, 5).unwrap(),
            CyclotomicScalar::root_power(5, 2)
        );
        assert_eq!(
            gauss_binomial(2, 3, 1, 5),
            Err(CyclotomicError::BinomialRange { n: 2, k: 3 })
        );
    }

    #[test]
    fn gaussian_binomial_vanishes_at_primitive_order() {
        // t = q^2 has order 5 when N = 10.
        for k in 1..5 {
            assert!(gauss_binomial(5, k, 2, 10).unwrap().is_zero());
        }
        assert!(!gauss_binomial(4, 2, 2, 10).unwrap().is_zero());
    }

    #[test]
    fn exact_division_round_trip() {
        let a = CyclotomicScalar::from_polynomial(8, &ints(&[3, -1, 0, 2]));
        let b = CyclotomicScalar::from_polynomial(8, &ints(&[1, 1]));
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        // 1 + q^2 with q^4 = -1 has norm 4; 1 is not divisible by it.
        let c = CyclotomicScalar::from_polynomial(8, &ints(&[1, 0, 1]));
        assert!(matches!(
            CyclotomicScalar::one(8).exact_div(&c),
            Err(CyclotomicError::NotDivisible { .. })
        ));
        assert!(CyclotomicScalar::one(8)
            .exact_div(&CyclotomicScalar::zero(8))
            .is_err());
        assert_eq!(
            CyclotomicScalar::from_integer(8, 2).norm(),
            BigInt::from(16)
        );
    }

    #[test]
    fn display_is_readable() {
        let s = CyclotomicScalar::from_polynomial(12, &ints(&[1, -1, 0, 2]));
        assert_eq!(s.to_string(), "1 - q + 2q^3");
        assert_eq!(CyclotomicScalar::zero(5).to_string(), "0");
        assert_eq!(CyclotomicScalar::root_power(6, 3).to_string(), "-1");
    }

    #[test]
    #[should_panic(expected = "mixed cyclotomic orders")]
    fn mixing_orders_panics() {
        let _ = CyclotomicScalar::one(4) + CyclotomicScalar::one(6);
    }
}
