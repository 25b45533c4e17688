//! The Drinfeld double `D(H)` and anti-Drinfeld double `A(H)` on `H° ⊗ H`.
//!
//! Both use the product
//! `(α⊗g)(β⊗h) = α₁(h₁) α₃(S^±1(h₃)) β α₂ ⊗ g h₂`, with `S` for `D(H)` and
//! `S⁻¹` for `A(H)`. The `H°` leg is written in the basis `ξ^r ψ^s φ^t`; a
//! functional is converted back to that basis through the pairing with
//! `e_(r,s,t) = (Σ_m q^(rm) g^m) x^s y^t`, which is diagonal.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, Monomial, TaftAlgebra};
use crate::cyclotomic::{CyclotomicError, CyclotomicScalar};
use crate::dual::{convolution_power, convolve, dual_generators};
use crate::pii::PiiCertificate;

/// Doubles are built by default only up to this order.
pub const DEFAULT_MAX_ORDER: u32 = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DoubleError {
    #[error("doubles of order N = {order} exceed the default bound N <= {DEFAULT_MAX_ORDER}; allow large doubles explicitly")]
    TooLarge { order: u32 },
    #[error("cannot multiply elements of {left:?} and {right:?}")]
    KindMismatch { left: DoubleKind, right: DoubleKind },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("functional is not an integral combination of the basis: {0}")]
    NotIntegral(#[from] CyclotomicError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DoubleKind {
    Drinfeld,
    AntiDrinfeld,
}

/// `(r, s, t)` indexing `ξ^r ψ^s φ^t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DualIndex {
    pub r: u32,
    pub s: u32,
    pub t: u32,
}

impl DualIndex {
    pub const EPSILON: DualIndex = DualIndex { r: 0, s: 0, t: 0 };

    pub const fn new(r: u32, s: u32, t: u32) -> Self {
        DualIndex { r, s, t }
    }
}

impl fmt::Display for DualIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("xi", self.r), ("psi", self.s), ("phi", self.t)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("eps")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

type Key = (DualIndex, Monomial);
type Sparse = BTreeMap<Monomial, CyclotomicScalar>;

fn accumulate<K: Ord + Copy>(
    map: &mut BTreeMap<K, CyclotomicScalar>,
    key: K,
    value: CyclotomicScalar,
) {
    if value.is_zero() {
        return;
    }
    let order = value.order();
    let entry = map
        .entry(key)
        .or_insert_with(|| CyclotomicScalar::zero(order));
    *entry += &value;
    if entry.is_zero() {
        map.remove(&key);
    }
}

/// A sparse element of a double; keys are `(ξ^r ψ^s φ^t, x^i y^j g^l)`.
#[derive(Clone, PartialEq, Eq)]
pub struct DoubleElement {
    kind: DoubleKind,
    terms: BTreeMap<Key, CyclotomicScalar>,
}

impl DoubleElement {
    pub fn zero(kind: DoubleKind) -> Self {
        DoubleElement {
            kind,
            terms: BTreeMap::new(),
        }
    }

    pub fn kind(&self) -> DoubleKind {
        self.kind
    }

    pub fn terms(&self) -> &BTreeMap<Key, CyclotomicScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, f: DualIndex, m: Monomial, coeff: CyclotomicScalar) {
        accumulate(&mut self.terms, (f, m), coeff);
    }

    pub fn add(&mut self, other: &DoubleElement) {
        for ((f, m), c) in &other.terms {
            self.add_term(*f, *m, c.clone());
        }
    }

    /// The same coefficients viewed in the other double.
    pub fn with_kind(&self, kind: DoubleKind) -> Self {
        DoubleElement {
            kind,
            terms: self.terms.clone(),
        }
    }
}

impl fmt::Display for DoubleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, m), c)| {
                if c.is_one() {
                    format!("{a} ⊗ {m}")
                } else {
                    format!("({c})·{a} ⊗ {m}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for DoubleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {self}", self.kind)
    }
}

/// Multiplication context for both doubles of one algebra.
pub struct Double<'a> {
    h: &'a TaftAlgebra,
    /// `(ψ^s φ^t)(x^s y^t)`, indexed by `s * Ny + t`.
    kappa: Vec<CyclotomicScalar>,
}

impl<'a> Double<'a> {
    /// Fails for `N > 4` unless `allow_large` is set.
    pub fn new(h: &'a TaftAlgebra, allow_large: bool) -> Result<Self, DoubleError> {
        if h.order() > DEFAULT_MAX_ORDER && !allow_large {
            return Err(DoubleError::TooLarge { order: h.order() });
        }
        let p = h.params();
        let (_, psi, phi) = dual_generators(h);
        let mut kappa = Vec::with_capacity((p.nx() * p.ny()) as usize);
        for s in 0..p.nx() {
            let psi_s = convolution_power(h, &psi, s)?;
            for t in 0..p.ny() {
                let f = convolve(h, &psi_s, &convolution_power(h, &phi, t)?)?;
                kappa.push(f.value(h, &Monomial::new(s, t, 0)).clone());
            }
        }
        Ok(Double { h, kappa })
    }

    pub fn algebra(&self) -> &TaftAlgebra {
        self.h
    }

    /// `dim(H)²`
    pub fn dimension(&self) -> usize {
        self.h.dimension() * self.h.dimension()
    }

    fn kappa(&self, s: u32, t: u32) -> &CyclotomicScalar {
        &self.kappa[(s * self.h.params().ny() + t) as usize]
    }

    /// Values of `ξ^r ψ^s φ^t`: `κ_(s,t) q^(-(r + b1 s + b2 t) l)` on `x^s y^t g^l`, zero elsewhere.
    pub fn basis_functional(&self, f: DualIndex) -> Sparse {
        let p = self.h.params();
        let step = f.r as i64 + p.b1() as i64 * f.s as i64 + p.b2() as i64 * f.t as i64;
        let kappa = self.kappa(f.s, f.t);
        (0..p.order())
            .map(|l| {
                (
                    Monomial::new(f.s, f.t, l),
                    kappa.mul_root_power(-step * l as i64),
                )
            })
            .collect()
    }

    /// Coordinates of a functional in the basis `ξ^r ψ^s φ^t`.
    fn to_basis(&self, f: &Sparse) -> Result<BTreeMap<DualIndex, CyclotomicScalar>, DoubleError> {
        let p = self.h.params();
        let n = p.order();
        let mut grades: BTreeMap<(u32, u32), Vec<(u32, &CyclotomicScalar)>> = BTreeMap::new();
        for (m, v) in f {
            grades.entry((m.i, m.j)).or_default().push((m.l, v));
        }
        let mut out = BTreeMap::new();
        for ((s, t), values) in grades {
            let shift = p.b1() as i64 * s as i64 + p.b2() as i64 * t as i64;
            let diagonal = self.kappa(s, t).mul_integer(&(n as i64).into());
            for r in 0..n {
                let mut pairing = CyclotomicScalar::zero(n);
                for (l, v) in &values {
                    pairing += &v.mul_root_power((r as i64 + shift) * *l as i64);
                }
                if !pairing.is_zero() {
                    out.insert(DualIndex::new(r, s, t), pairing.exact_div(&diagonal)?);
                }
            }
        }
        Ok(out)
    }

    /// `m ↦ α(a m b)` for monomials `a`, `b` and a scalar on `b`.
    fn sandwich(
        &self,
        alpha: &Sparse,
        a: Monomial,
        b: Monomial,
        b_coeff: &CyclotomicScalar,
    ) -> Sparse {
        let h = self.h;
        let n = h.order();
        let mut out = Sparse::new();
        for (target, v) in alpha {
            let (Some(i), Some(j)) = (
                target.i.checked_sub(a.i + b.i),
                target.j.checked_sub(a.j + b.j),
            ) else {
                continue;
            };
            let l = (target.l + 2 * n - a.l - b.l) % n;
            let m = Monomial::new(i, j, l);
            let Some((e1, am)) = h.monomial_product(a, m) else {
                continue;
            };
            let Some((e2, amb)) = h.monomial_product(am, b) else {
                continue;
            };
            debug_assert_eq!(amb, *target);
            let value = (v * b_coeff).mul_root_power(e1 as i64 + e2 as i64);
            accumulate(&mut out, m, value);
        }
        out
    }

    /// Convolution of sparse functionals.
    fn convolve(&self, f: &Sparse, g: &Sparse) -> Sparse {
        let h = self.h;
        let p = h.params();
        let mut out = Sparse::new();
        for (left, fv) in f {
            for (right, gv) in g {
                let (i, j) = (left.i + right.i, left.j + right.j);
                if i >= p.nx() || j >= p.ny() {
                    continue;
                }
                // left legs of Δ(x^i y^j g^l) carry the full g^l
                let m = Monomial::new(i, j, left.l);
                if let Some(term) = h.coproduct_term_with_left(&m, left) {
                    if term.right == *right {
                        accumulate(&mut out, m, &(fv * gv) * &term.coeff);
                    }
                }
            }
        }
        out
    }

    fn twisted_antipode(&self, kind: DoubleKind, m: &Monomial) -> (Monomial, CyclotomicScalar) {
        let image = match kind {
            DoubleKind::Drinfeld => self.h.antipode_of(m),
            DoubleKind::AntiDrinfeld => self.h.inverse_antipode_of(m),
        };
        let (mono, c) = image
            .single_term()
            .expect("the antipode maps monomials to multiples of monomials");
        (mono, c.clone())
    }

    /// Product of two basis elements `(α⊗a)(β⊗b)`.
    pub fn multiply_basis(
        &self,
        kind: DoubleKind,
        (alpha, a): Key,
        (beta, b): Key,
    ) -> Result<DoubleElement, DoubleError> {
        let h = self.h;
        let alpha_values = self.basis_functional(alpha);
        // Σ over (b₁, b₂, b₃) of α(b₁ · S^±1(b₃)) as functionals, grouped by b₂
        let mut middle: BTreeMap<Monomial, Sparse> = BTreeMap::new();
        for outer in h.coproduct_terms(&b) {
            for inner in h.coproduct_terms(&outer.right) {
                let (s3, c3) = self.twisted_antipode(kind, &inner.right);
                let coeff = &(&outer.coeff * &inner.coeff) * &c3;
                let g = self.sandwich(&alpha_values, outer.left, s3, &coeff);
                let slot = middle.entry(inner.left).or_default();
                for (m, v) in g {
                    accumulate(slot, m, v);
                }
            }
        }
        let beta_values = self.basis_functional(beta);
        let mut out = DoubleElement::zero(kind);
        for (b2, g) in middle {
            let Some((e, ab2)) = h.monomial_product(a, b2) else {
                continue;
            };
            let product = self.convolve(&beta_values, &g);
            for (f, c) in self.to_basis(&product)? {
                out.add_term(f, ab2, c.mul_root_power(e as i64));
            }
        }
        Ok(out)
    }

    pub fn multiply(
        &self,
        u: &DoubleElement,
        v: &DoubleElement,
    ) -> Result<DoubleElement, DoubleError> {
        if u.kind != v.kind {
            return Err(DoubleError::KindMismatch {
                left: u.kind,
                right: v.kind,
            });
        }
        let mut out = DoubleElement::zero(u.kind);
        for (ku, cu) in &u.terms {
            for (kv, cv) in &v.terms {
                let prod = self.multiply_basis(u.kind, *ku, *kv)?;
                let scale = cu * cv;
                for ((f, m), c) in prod.terms {
                    out.add_term(f, m, &c * &scale);
                }
            }
        }
        Ok(out)
    }

    pub fn basis_element(&self, kind: DoubleKind, f: DualIndex, m: Monomial) -> DoubleElement {
        let mut e = DoubleElement::zero(kind);
        e.add_term(f, m, CyclotomicScalar::one(self.h.order()));
        e
    }

    pub fn unit(&self, kind: DoubleKind) -> DoubleElement {
        self.basis_element(kind, DualIndex::EPSILON, Monomial::ONE)
    }

    /// `ε⊗g, ε⊗x, ε⊗y, ξ⊗1, ψ⊗1, φ⊗1`, which generate the double as an algebra.
    pub fn generators(&self) -> Vec<Key> {
        let p = self.h.params();
        let mut gens = vec![
            (DualIndex::EPSILON, Monomial::new(0, 0, 1 % p.order())),
            (DualIndex::EPSILON, Monomial::new(1, 0, 0)),
            (DualIndex::EPSILON, Monomial::new(0, 1, 0)),
            (DualIndex::new(1 % p.order(), 0, 0), Monomial::ONE),
            (DualIndex::new(0, 1, 0), Monomial::ONE),
            (DualIndex::new(0, 0, 1), Monomial::ONE),
        ];
        gens.dedup();
        gens
    }

    /// Basis keys in lexicographic order.
    pub fn basis(&self) -> Vec<Key> {
        let h = self.h;
        let p = h.params();
        let mut out = Vec::with_capacity(self.dimension());
        for r in 0..p.order() {
            for s in 0..p.nx() {
                for t in 0..p.ny() {
                    for m in h.basis() {
                        out.push((DualIndex::new(r, s, t), m));
                    }
                }
            }
        }
        out
    }

    fn random_key(&self, rng: &mut ChaCha8Rng) -> Key {
        let p = self.h.params();
        let f = DualIndex::new(
            rng.gen_range(0..p.order()),
            rng.gen_range(0..p.nx()),
            rng.gen_range(0..p.ny()),
        );
        (f, self.h.monomial_at(rng.gen_range(0..self.h.dimension())))
    }

    /// `(uv)w = u(vw)` on `samples` seeded random triples of basis elements.
    pub fn check_associativity(
        &self,
        kind: DoubleKind,
        samples: usize,
        seed: u64,
    ) -> Result<SampledCheck, DoubleError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for k in 0..samples {
            let (u, v, w) = (
                self.random_key(&mut rng),
                self.random_key(&mut rng),
                self.random_key(&mut rng),
            );
            let be = |key: Key| self.basis_element(kind, key.0, key.1);
            let left = self.multiply(&self.multiply_basis(kind, u, v)?, &be(w))?;
            let right = self.multiply(&be(u), &self.multiply_basis(kind, v, w)?)?;
            if left != right {
                return Ok(SampledCheck {
                    holds: false,
                    checked: k + 1,
                    witness: Some(format!(
                        "({} ⊗ {}), ({} ⊗ {}), ({} ⊗ {})",
                        u.0, u.1, v.0, v.1, w.0, w.1
                    )),
                });
            }
        }
        Ok(SampledCheck {
            holds: true,
            checked: samples,
            witness: None,
        })
    }

    /// `(ε⊗1) u = u = u (ε⊗1)` for every basis element.
    pub fn check_unit(&self, kind: DoubleKind) -> Result<SampledCheck, DoubleError> {
        let unit = (DualIndex::EPSILON, Monomial::ONE);
        let mut checked = 0;
        for key in self.basis() {
            checked += 1;
            let e = self.basis_element(kind, key.0, key.1);
            if self.multiply_basis(kind, unit, key)? != e
                || self.multiply_basis(kind, key, unit)? != e
            {
                return Ok(SampledCheck {
                    holds: false,
                    checked,
                    witness: Some(format!("{} ⊗ {}", key.0, key.1)),
                });
            }
        }
        Ok(SampledCheck {
            holds: true,
            checked,
            witness: None,
        })
    }

    /// `m ↦ α(m g^d)` in the dual basis.
    fn right_translate(
        &self,
        f: DualIndex,
        d: i64,
    ) -> Result<BTreeMap<DualIndex, CyclotomicScalar>, DoubleError> {
        let n = self.h.order();
        let l = Monomial::new(0, 0, d.rem_euclid(n as i64) as u32);
        let one = CyclotomicScalar::one(n);
        let translated = self.sandwich(&self.basis_functional(f), Monomial::ONE, l, &one);
        self.to_basis(&translated)
    }

    /// `α⊗g ↦ α₂(g^d) ξ^e(g₂) α₁ ⊗ g₁`: the map `A(H) → D(H)` of a pair with
    /// `e = c`, and its inverse `D(H) → A(H)` with `(d, e) → (-d, -c)`.
    fn triangular_map(
        &self,
        u: &DoubleElement,
        d: i64,
        e: i64,
        target: DoubleKind,
    ) -> Result<DoubleElement, DoubleError> {
        let h = self.h;
        let mut out = DoubleElement::zero(target);
        for ((f, m), c) in &u.terms {
            let translated = self.right_translate(*f, d)?;
            for term in h.coproduct_terms(m) {
                if !term.right.is_grouplike() {
                    continue;
                }
                let weight = (c * &term.coeff).mul_root_power(-e * term.right.l as i64);
                for (g, v) in &translated {
                    out.add_term(*g, term.left, v * &weight);
                }
            }
        }
        Ok(out)
    }

    /// `f: A(H) → D(H)` for the pair `(g^d, ξ^-c)`.
    pub fn iso_forward(
        &self,
        u: &DoubleElement,
        c: u32,
        d: u32,
    ) -> Result<DoubleElement, DoubleError> {
        self.triangular_map(u, d as i64, c as i64, DoubleKind::Drinfeld)
    }

    /// `f⁻¹: D(H) → A(H)`.
    pub fn iso_backward(
        &self,
        u: &DoubleElement,
        c: u32,
        d: u32,
    ) -> Result<DoubleElement, DoubleError> {
        self.triangular_map(u, -(d as i64), -(c as i64), DoubleKind::AntiDrinfeld)
    }

    fn multiplicative_on(
        &self,
        c: u32,
        d: u32,
        pairs: impl IntoIterator<Item = (Key, Key)>,
    ) -> Result<(usize, Option<String>), DoubleError> {
        let mut checked = 0;
        for (u, v) in pairs {
            checked += 1;
            let a = DoubleKind::AntiDrinfeld;
            let uv = self.multiply_basis(a, u, v)?;
            let lhs = self.iso_forward(&uv, c, d)?;
            let fu = self.iso_forward(&self.basis_element(a, u.0, u.1), c, d)?;
            let fv = self.iso_forward(&self.basis_element(a, v.0, v.1), c, d)?;
            let rhs = self.multiply(&fu, &fv)?;
            if lhs != rhs {
                return Ok((
                    checked,
                    Some(format!("({} ⊗ {}) * ({} ⊗ {})", u.0, u.1, v.0, v.1)),
                ));
            }
        }
        Ok((checked, None))
    }

    fn generator_pairs(&self) -> Vec<(Key, Key)> {
        let gens = self.generators();
        gens.iter()
            .flat_map(|u| gens.iter().map(move |v| (*u, *v)))
            .collect()
    }

    /// Multiplicativity of `f_(c,d)`: first on pairs of generators, then on
    /// all basis pairs when the double is small, otherwise on basis × generators.
    /// The latter suffices since the generators generate and `f` is linear.
    pub fn is_multiplicative(&self, c: u32, d: u32) -> Result<MultiplicativityCheck, DoubleError> {
        let (mut checked, witness) = self.multiplicative_on(c, d, self.generator_pairs())?;
        let scope = if self.dimension() <= ALL_PAIRS_MAX_DIMENSION {
            PairScope::AllPairs
        } else {
            PairScope::BasisTimesGenerators
        };
        if witness.is_some() {
            return Ok(MultiplicativityCheck {
                holds: false,
                scope,
                checked,
                witness,
            });
        }
        let basis = self.basis();
        let (more, witness) = match scope {
            PairScope::AllPairs => self.multiplicative_on(
                c,
                d,
                basis
                    .iter()
                    .flat_map(|u| basis.iter().map(move |v| (*u, *v))),
            )?,
            PairScope::BasisTimesGenerators => {
                let gens = self.generators();
                self.multiplicative_on(
                    c,
                    d,
                    basis
                        .iter()
                        .flat_map(|u| gens.iter().map(move |v| (*u, *v))),
                )?
            }
        };
        checked += more;
        Ok(MultiplicativityCheck {
            holds: witness.is_none(),
            scope,
            checked,
            witness,
        })
    }

    /// Checks that `f` built from `cert` is a unital, multiplicative bijection `A(H) → D(H)`.
    pub fn pii_isomorphism_check(
        &self,
        cert: &PiiCertificate,
    ) -> Result<IsomorphismCheck, DoubleError> {
        let (c, d) = (cert.c, cert.d);
        let unital = self.iso_forward(&self.unit(DoubleKind::AntiDrinfeld), c, d)?
            == self.unit(DoubleKind::Drinfeld);
        let multiplicative = self.is_multiplicative(c, d)?;
        let mut inverse_witness = None;
        for (f, m) in self.basis() {
            let a = self.basis_element(DoubleKind::AntiDrinfeld, f, m);
            let round_trip = self.iso_backward(&self.iso_forward(&a, c, d)?, c, d)?;
            let dd = a.with_kind(DoubleKind::Drinfeld);
            let other_way = self.iso_forward(&self.iso_backward(&dd, c, d)?, c, d)?;
            if round_trip != a || other_way != dd {
                inverse_witness = Some(format!("{f} ⊗ {m}"));
                break;
            }
        }
        Ok(IsomorphismCheck {
            certificate: *cert,
            unital,
            invertible: inverse_witness.is_none(),
            inverse_witness,
            multiplicative,
        })
    }

    /// All `(c, d)` for which the triangular map `f_(g^d, ξ^-c)` is multiplicative.
    pub fn triangular_search(&self) -> Result<Vec<(u32, u32)>, DoubleError> {
        let n = self.h.order();
        let mut found = Vec::new();
        for c in 0..n {
            for d in 0..n {
                if self.is_multiplicative(c, d)?.holds {
                    found.push((c, d));
                }
            }
        }
        Ok(found)
    }
}

/// Doubles up to this dimension are checked on all pairs of basis elements.
pub const ALL_PAIRS_MAX_DIMENSION: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairScope {
    AllPairs,
    BasisTimesGenerators,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampledCheck {
    pub holds: bool,
    pub checked: usize,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplicativityCheck {
    pub holds: bool,
    pub scope: PairScope,
    pub checked: usize,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsomorphismCheck {
    pub certificate: PiiCertificate,
    pub unital: bool,
    pub invertible: bool,
    pub inverse_witness: Option<String>,
    pub multiplicative: MultiplicativityCheck,
}

impl IsomorphismCheck {
    pub fn holds(&self) -> bool {
        self.unital && self.invertible && self.multiplicative.holds
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::functional_monomial;
    use crate::params::{valid_tuples, GtaParameters};
    use crate::pii::oracle_pairs;

    fn alg(n: i64, a1: i64, a2: i64, b1: i64, b2: i64) -> TaftAlgebra {
        TaftAlgebra::new(GtaParameters::new(n, a1, a2, b1, b2).unwrap())
    }

    #[test]
    fn sparse_basis_matches_convolution() {
        for n in [2, 3, 4] {
            for p in valid_tuples(n) {
                let h = TaftAlgebra::new(p);
                let dbl = Double::new(&h, false).unwrap();
                let q = h.params().clone();
                for r in 0..q.order() {
                    for s in 0..q.nx() {
                        for t in 0..q.ny() {
                            let dense = functional_monomial(&h, r, s, t).unwrap();
                            let sparse = dbl.basis_functional(DualIndex::new(r, s, t));
                            for m in h.basis() {
                                let expected = dense.value(&h, &m);
                                let got = sparse.get(&m).cloned().unwrap_or_else(|| h.scalar(0));
                                assert_eq!(&got, expected);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn round_trip_through_basis() {
        let h = alg(4, 1, 1, 1, 3);
        let dbl = Double::new(&h, false).unwrap();
        for (f, _) in dbl.basis().into_iter().step_by(h.dimension()) {
            let coords = dbl.to_basis(&dbl.basis_functional(f)).unwrap();
            assert_eq!(coords.len(), 1);
            assert!(coords[&f].is_one());
        }
    }

    #[test]
    fn size_gate() {
        let h = alg(6, 1, 1, 1, 5);
        assert!(matches!(
            Double::new(&h, false),
            Err(DoubleError::TooLarge { order: 6 })
        ));
        assert!(Double::new(&h, true).is_ok());
    }

    #[test]
    fn group_part_multiplies_like_h() {
        let h = alg(2, 1, 1, 1, 1);
        let dbl = Double::new(&h, false).unwrap();
        let kind = DoubleKind::Drinfeld;
        let g = (DualIndex::EPSILON, Monomial::new(0, 0, 1));
        let x = (DualIndex::EPSILON, Monomial::new(1, 0, 0));
        let mut expected = DoubleElement::zero(kind);
        expected.add_term(DualIndex::EPSILON, Monomial::new(1, 0, 1), h.root(1));
        assert_eq!(dbl.multiply_basis(kind, g, x).unwrap(), expected);
    }

    #[test]
    fn smallest_doubles() {
        let h = alg(2, 1, 1, 1, 1);
        let dbl = Double::new(&h, false).unwrap();
        for kind in [DoubleKind::Drinfeld, DoubleKind::AntiDrinfeld] {
            assert!(dbl.check_unit(kind).unwrap().holds);
            assert!(dbl.check_associativity(kind, 200, 1).unwrap().holds);
        }
        let cert = oracle_pairs(h.params())[0];
        let iso = dbl.pii_isomorphism_check(&cert).unwrap();
        assert!(iso.holds(), "{iso:?}");
        assert_eq!(iso.multiplicative.scope, PairScope::AllPairs);
        assert_eq!(iso.multiplicative.checked, 36 + 64 * 64);
    }

    #[test]
    fn triangular_maps_are_exactly_the_pairs() {
        let h = alg(4, 1, 1, 1, 3);
        let dbl = Double::new(&h, false).unwrap();
        let expected: Vec<(u32, u32)> = oracle_pairs(h.params())
            .iter()
            .map(|c| (c.c, c.d))
            .collect();
        assert_eq!(dbl.triangular_search().unwrap(), expected);
    }
}
