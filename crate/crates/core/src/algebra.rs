//! The Hopf algebra `H_q(a1, a2, b1, b2)` on its PBW basis `x^i y^j g^l`.
//!
//! Relations: `g^N = 1`, `x^Nx = 0`, `y^Ny = 0`, `gx = q^b1 xg`, `gy = q^b2 yg`,
//! `xy = q^(a1 b2) yx`. Coalgebra: `Δ(g) = g⊗g`, `Δ(x) = 1⊗x + x⊗g^a1`,
//! `Δ(y) = 1⊗y + y⊗g^a2`. Antipode: `S(g) = g^-1`, `S(x) = -x g^-a1`,
//! `S(y) = -y g^-a2`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;
use thiserror::Error;

use crate::cyclotomic::{gauss_binomial, CyclotomicScalar};
use crate::params::GtaParameters;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("elements belong to different algebras: {left} and {right}")]
    ParameterMismatch { left: String, right: String },
    #[error("monomial {monomial} lies outside the basis of {params}")]
    OutOfRange { monomial: Monomial, params: String },
}

/// The PBW monomial `x^i y^j g^l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
    pub l: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { i: 0, j: 0, l: 0 };

    pub const fn new(i: u32, j: u32, l: u32) -> Self {
        Monomial { i, j, l }
    }

    /// True for powers of `g`.
    pub fn is_grouplike(&self) -> bool {
        self.i == 0 && self.j == 0
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("x", self.i), ("y", self.j), ("g", self.l)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

fn check_same(a: &Arc<GtaParameters>, b: &Arc<GtaParameters>) -> Result<(), AlgebraError> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(AlgebraError::ParameterMismatch {
            left: a.to_string(),
            right: b.to_string(),
        })
    }
}

fn add_term<K: Ord>(terms: &mut BTreeMap<K, CyclotomicScalar>, key: K, value: CyclotomicScalar) {
    if value.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(value);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += &value;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// A sparse linear combination of basis monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    params: Arc<GtaParameters>,
    terms: BTreeMap<Monomial, CyclotomicScalar>,
}

impl AlgebraElement {
    pub fn zero(params: &Arc<GtaParameters>) -> Self {
        AlgebraElement {
            params: Arc::clone(params),
            terms: BTreeMap::new(),
        }
    }

    pub fn params(&self) -> &Arc<GtaParameters> {
        &self.params
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, CyclotomicScalar> {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> CyclotomicScalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| CyclotomicScalar::zero(self.params.order()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single `(monomial, coefficient)` pair of a one-term element.
    pub fn single_term(&self) -> Option<(Monomial, &CyclotomicScalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c))
        } else {
            None
        }
    }

    pub fn add_monomial(&mut self, m: Monomial, coeff: CyclotomicScalar) {
        add_term(&mut self.terms, m, coeff);
    }

    pub fn scale(&self, s: &CyclotomicScalar) -> Self {
        let mut out = AlgebraElement::zero(&self.params);
        for (m, c) in &self.terms {
            out.add_monomial(*m, c * s);
        }
        out
    }

    pub fn mul_root_power(&self, exponent: i64) -> Self {
        AlgebraElement {
            params: Arc::clone(&self.params),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.mul_root_power(exponent)))
                .collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        check_same(&self.params, &other.params)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_monomial(*m, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        check_same(&self.params, &other.params)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_monomial(*m, -c);
        }
        Ok(out)
    }

    /// First monomial where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<Monomial> {
        let diff = self.try_sub(other).ok()?;
        diff.terms.keys().next().copied()
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if c.is_one() {
                    m.to_string()
                } else {
                    format!("({c})·{m}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.params)
    }
}

/// A sparse element of `H ⊗ H`.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    params: Arc<GtaParameters>,
    terms: BTreeMap<(Monomial, Monomial), CyclotomicScalar>,
}

impl TensorElement {
    pub fn zero(params: &Arc<GtaParameters>) -> Self {
        TensorElement {
            params: Arc::clone(params),
            terms: BTreeMap::new(),
        }
    }

    pub fn params(&self) -> &Arc<GtaParameters> {
        &self.params
    }

    pub fn terms(&self) -> &BTreeMap<(Monomial, Monomial), CyclotomicScalar> {
        &self.terms
    }

    pub fn coefficient(&self, left: Monomial, right: Monomial) -> CyclotomicScalar {
        self.terms
            .get(&(left, right))
            .cloned()
            .unwrap_or_else(|| CyclotomicScalar::zero(self.params.order()))
    }

    pub fn add_term(&mut self, left: Monomial, right: Monomial, coeff: CyclotomicScalar) {
        add_term(&mut self.terms, (left, right), coeff);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b), c)| {
                if c.is_one() {
                    format!("{a} ⊗ {b}")
                } else {
                    format!("({c})·{a} ⊗ {b}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One Sweedler term `coeff · left ⊗ right` of a basis coproduct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoproductTerm {
    pub left: Monomial,
    pub right: Monomial,
    pub coeff: CyclotomicScalar,
}

/// The algebra together with lazily built coproduct and antipode tables.
#[derive(Clone)]
pub struct TaftAlgebra {
    params: Arc<GtaParameters>,
    coproducts: OnceLock<Vec<Vec<CoproductTerm>>>,
    antipodes: OnceLock<Vec<AlgebraElement>>,
    inverse_antipodes: OnceLock<Vec<AlgebraElement>>,
}

impl fmt::Debug for TaftAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TaftAlgebra")
            .field("params", &self.params)
            .finish_non_exhaustive()
    }
}

impl TaftAlgebra {
    pub fn new(params: GtaParameters) -> Self {
        Self::from_arc(Arc::new(params))
    }

    pub fn from_arc(params: Arc<GtaParameters>) -> Self {
        TaftAlgebra {
            params,
            coproducts: OnceLock::new(),
            antipodes: OnceLock::new(),
            inverse_antipodes: OnceLock::new(),
        }
    }

    pub fn params(&self) -> &Arc<GtaParameters> {
        &self.params
    }

    pub fn order(&self) -> u32 {
        self.params.order()
    }

    pub fn dimension(&self) -> usize {
        self.params.dimension()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        m.i < self.params.nx() && m.j < self.params.ny() && m.l < self.params.order()
    }

    /// Basis monomials in lexicographic `(i, j, l)` order.
    pub fn basis(&self) -> impl Iterator<Item = Monomial> + '_ {
        (0..self.dimension()).map(move |k| self.monomial_at(k))
    }

    pub fn index_of(&self, m: &Monomial) -> usize {
        debug_assert!(self.contains(m));
        let p = &self.params;
        ((m.i as usize * p.ny() as usize) + m.j as usize) * p.order() as usize + m.l as usize
    }

    pub fn monomial_at(&self, index: usize) -> Monomial {
        let p = &self.params;
        let n = p.order() as usize;
        let ny = p.ny() as usize;
        Monomial {
            i: (index / (n * ny)) as u32,
            j: ((index / n) % ny) as u32,
            l: (index % n) as u32,
        }
    }

    pub fn scalar(&self, value: i64) -> CyclotomicScalar {
        CyclotomicScalar::from_integer(self.order(), value)
    }

    pub fn root(&self, exponent: i64) -> CyclotomicScalar {
        CyclotomicScalar::root_power(self.order(), exponent)
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(&self.params)
    }

    pub fn element(&self, m: Monomial) -> AlgebraElement {
        self.element_with(m, self.scalar(1))
    }

    pub fn element_with(&self, m: Monomial, coeff: CyclotomicScalar) -> AlgebraElement {
        assert!(
            self.contains(&m),
            "{m} outside the basis of {}",
            self.params
        );
        let mut e = self.zero();
        e.add_monomial(m, coeff);
        e
    }

    pub fn unit(&self) -> AlgebraElement {
        self.element(Monomial::ONE)
    }

    pub fn g(&self) -> AlgebraElement {
        self.g_power(1)
    }

    pub fn g_power(&self, exponent: i64) -> AlgebraElement {
        let l = exponent.rem_euclid(self.order() as i64) as u32;
        self.element(Monomial::new(0, 0, l))
    }

    pub fn x(&self) -> AlgebraElement {
        self.element(Monomial::new(1, 0, 0))
    }

    pub fn y(&self) -> AlgebraElement {
        self.element(Monomial::new(0, 1, 0))
    }

    /// `(x^i y^j g^l)(x^i' y^j' g^l') = q^e x^(i+i') y^(j+j') g^(l+l')`, or `None`
    /// when a nilpotency relation kills the product. The exponent collects one
    /// factor per transposition: `b1` per `g` past `x`, `b2` per `g` past `y`,
    /// `-a1 b2` per `y` past `x`.
    pub fn monomial_product(&self, u: Monomial, v: Monomial) -> Option<(u32, Monomial)> {
        let p = &self.params;
        let i = u.i + v.i;
        let j = u.j + v.j;
        if i >= p.nx() || j >= p.ny() {
            return None;
        }
        let n = p.order() as u64;
        let (ul, vi, vj, uj) = (u.l as u64, v.i as u64, v.j as u64, u.j as u64);
        let swaps = p.b1() as u64 * ul % n * vi
            + p.b2() as u64 * ul % n * vj
            + (n - p.xy_exponent() as u64) % n * uj % n * vi;
        Some((
            (swaps % n) as u32,
            Monomial::new(i, j, ((u.l + v.l) as u64 % n) as u32),
        ))
    }

    pub fn multiply(
        &self,
        u: &AlgebraElement,
        v: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        check_same(&self.params, &u.params)?;
        check_same(&self.params, &v.params)?;
        let mut out = self.zero();
        for (mu, cu) in &u.terms {
            for (mv, cv) in &v.terms {
                if let Some((e, m)) = self.monomial_product(*mu, *mv) {
                    out.add_monomial(m, (cu * cv).mul_root_power(e as i64));
                }
            }
        }
        Ok(out)
    }

    /// Product of several elements, left to right.
    pub fn product(&self, factors: &[&AlgebraElement]) -> Result<AlgebraElement, AlgebraError> {
        let mut acc = self.unit();
        for f in factors {
            acc = self.multiply(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn power(&self, u: &AlgebraElement, k: u32) -> Result<AlgebraElement, AlgebraError> {
        let mut acc = self.unit();
        for _ in 0..k {
            acc = self.multiply(&acc, u)?;
        }
        Ok(acc)
    }

    /// Counit on a basis monomial: `1` on powers of `g`, `0` otherwise.
    pub fn counit_monomial(m: &Monomial) -> bool {
        m.is_grouplike()
    }

    pub fn counit(&self, u: &AlgebraElement) -> Result<CyclotomicScalar, AlgebraError> {
        check_same(&self.params, &u.params)?;
        let mut acc = CyclotomicScalar::zero(self.order());
        for (m, c) in &u.terms {
            if Self::counit_monomial(m) {
                acc += c;
            }
        }
        Ok(acc)
    }

    pub fn tensor_multiply(
        &self,
        s: &TensorElement,
        t: &TensorElement,
    ) -> Result<TensorElement, AlgebraError> {
        check_same(&self.params, &s.params)?;
        check_same(&self.params, &t.params)?;
        let mut out = TensorElement::zero(&self.params);
        for ((a, b), cs) in &s.terms {
            for ((c, d), ct) in &t.terms {
                let Some((e1, ac)) = self.monomial_product(*a, *c) else {
                    continue;
                };
                let Some((e2, bd)) = self.monomial_product(*b, *d) else {
                    continue;
                };
                out.add_term(ac, bd, (cs * ct).mul_root_power(e1 as i64 + e2 as i64));
            }
        }
        Ok(out)
    }

    fn tensor_of(&self, a: Monomial, b: Monomial) -> TensorElement {
        let mut t = TensorElement::zero(&self.params);
        t.add_term(a, b, self.scalar(1));
        t
    }

    /// `Δ` of the three generators.
    pub fn generator_coproducts(&self) -> (TensorElement, TensorElement, TensorElement) {
        let p = &self.params;
        let g = Monomial::new(0, 0, 1);
        let delta_g = self.tensor_of(g, g);
        let mut delta_x = self.tensor_of(Monomial::ONE, Monomial::new(1, 0, 0));
        delta_x.add_term(
            Monomial::new(1, 0, 0),
            Monomial::new(0, 0, p.a1()),
            self.scalar(1),
        );
        let mut delta_y = self.tensor_of(Monomial::ONE, Monomial::new(0, 1, 0));
        delta_y.add_term(
            Monomial::new(0, 1, 0),
            Monomial::new(0, 0, p.a2()),
            self.scalar(1),
        );
        (delta_g, delta_x, delta_y)
    }

    fn build_coproducts(&self) -> Vec<Vec<CoproductTerm>> {
        let p = &self.params;
        let (_, delta_x, delta_y) = self.generator_coproducts();
        let unit = self.tensor_of(Monomial::ONE, Monomial::ONE);
        let mut x_powers = vec![unit.clone()];
        for i in 1..p.nx() as usize {
            let next = self.tensor_multiply(&x_powers[i - 1], &delta_x).unwrap();
            x_powers.push(next);
        }
        let mut y_powers = vec![unit];
        for j in 1..p.ny() as usize {
            let next = self.tensor_multiply(&y_powers[j - 1], &delta_y).unwrap();
            y_powers.push(next);
        }
        let mut table = vec![Vec::new(); self.dimension()];
        for (i, dx) in x_powers.iter().enumerate() {
            for (j, dy) in y_powers.iter().enumerate() {
                let dxy = self.tensor_multiply(dx, dy).unwrap();
                for l in 0..p.order() {
                    // Δ(g^l) = g^l ⊗ g^l; g sits rightmost in the normal form, so
                    // right multiplication only shifts the g-exponents.
                    let shift = |m: &Monomial| Monomial::new(m.i, m.j, (m.l + l) % p.order());
                    let idx = self.index_of(&Monomial::new(i as u32, j as u32, l));
                    let mut terms: Vec<CoproductTerm> = dxy
                        .terms
                        .iter()
                        .map(|((left, right), coeff)| CoproductTerm {
                            left: shift(left),
                            right: shift(right),
                            coeff: coeff.clone(),
                        })
                        .collect();
                    terms.sort_by_key(|a| (a.left, a.right));
                    table[idx] = terms;
                }
            }
        }
        table
    }

    /// Sweedler terms of `Δ(m)` for a basis monomial.
    pub fn coproduct_terms(&self, m: &Monomial) -> &[CoproductTerm] {
        let table = self.coproducts.get_or_init(|| self.build_coproducts());
        &table[self.index_of(m)]
    }

    /// The unique Sweedler term of `Δ(m)` whose left leg is `left`, if any.
    ///
    /// Terms are stored sorted by left leg, and each left leg `x^s y^t g^l`
    /// occurs at most once.
    pub fn coproduct_term_with_left(
        &self,
        m: &Monomial,
        left: &Monomial,
    ) -> Option<&CoproductTerm> {
        let terms = self.coproduct_terms(m);
        terms
            .binary_search_by(|t| t.left.cmp(left))
            .ok()
            .map(|k| &terms[k])
    }

    /// The Sweedler term of `Δ(m)` with left leg `x^s y^t g^l`, from the
    /// q-binomial formula rather than the table.
    pub fn coproduct_term(&self, m: &Monomial, s: u32, t: u32) -> Option<CoproductTerm> {
        if s > m.i || t > m.j || !self.contains(m) {
            return None;
        }
        let p = &self.params;
        let n = p.order();
        let bx = gauss_binomial(m.i, s, (p.a1() * p.b1()) as i64, n).ok()?;
        let by = gauss_binomial(m.j, t, (p.a2() * p.b2()) as i64, n).ok()?;
        let cross = p.a1() as i64 * p.b2() as i64 * s as i64 * (m.j - t) as i64;
        let shift = (m.l as u64 + p.a1() as u64 * s as u64 + p.a2() as u64 * t as u64) % n as u64;
        Some(CoproductTerm {
            left: Monomial::new(s, t, m.l),
            right: Monomial::new(m.i - s, m.j - t, shift as u32),
            coeff: (&bx * &by).mul_root_power(cross),
        })
    }

    pub fn coproduct(&self, u: &AlgebraElement) -> Result<TensorElement, AlgebraError> {
        check_same(&self.params, &u.params)?;
        let mut out = TensorElement::zero(&self.params);
        for (m, c) in &u.terms {
            for t in self.coproduct_terms(m) {
                out.add_term(t.left, t.right, c * &t.coeff);
            }
        }
        Ok(out)
    }

    fn antihomomorphic_image(
        &self,
        sg: &AlgebraElement,
        sx: &AlgebraElement,
        sy: &AlgebraElement,
    ) -> Vec<AlgebraElement> {
        // image(x^i y^j g^l) = image(g)^l image(y)^j image(x)^i
        let p = &self.params;
        let sx_pows: Vec<AlgebraElement> =
            (0..p.nx()).map(|k| self.power(sx, k).unwrap()).collect();
        let sy_pows: Vec<AlgebraElement> =
            (0..p.ny()).map(|k| self.power(sy, k).unwrap()).collect();
        let sg_pows: Vec<AlgebraElement> =
            (0..p.order()).map(|k| self.power(sg, k).unwrap()).collect();
        self.basis()
            .map(|m| {
                self.product(&[
                    &sg_pows[m.l as usize],
                    &sy_pows[m.j as usize],
                    &sx_pows[m.i as usize],
                ])
                .unwrap()
            })
            .collect()
    }

    /// `S` on a basis monomial.
    pub fn antipode_of(&self, m: &Monomial) -> &AlgebraElement {
        let table = self.antipodes.get_or_init(|| {
            let p = &self.params;
            let sg = self.g_power(-1);
            let minus_one = self.scalar(-1);
            let sx = self.element_with(
                Monomial::new(1, 0, (p.order() - p.a1()) % p.order()),
                minus_one.clone(),
            );
            let sy = self.element_with(
                Monomial::new(0, 1, (p.order() - p.a2()) % p.order()),
                minus_one,
            );
            self.antihomomorphic_image(&sg, &sx, &sy)
        });
        &table[self.index_of(m)]
    }

    /// `S^-1` on a basis monomial, from `S^-1(x) = -g^-a1 x`, `S^-1(y) = -g^-a2 y`.
    pub fn inverse_antipode_of(&self, m: &Monomial) -> &AlgebraElement {
        let table = self.inverse_antipodes.get_or_init(|| {
            let p = &self.params;
            let sg = self.g_power(-1);
            let minus_one = self.scalar(-1);
            let sx = self.element_with(
                Monomial::new(1, 0, 0),
                minus_one.mul_root_power(-(p.a1() as i64) * p.b1() as i64),
            );
            let sy = self.element_with(
                Monomial::new(0, 1, 0),
                minus_one.mul_root_power(-(p.a2() as i64) * p.b2() as i64),
            );
            // g^-a x = q^(-a b1) x g^-a, so -g^-a1 x = -q^(-a1 b1) x g^-a1.
            let sx = self.multiply(&sx, &self.g_power(-(p.a1() as i64))).unwrap();
            let sy = self.multiply(&sy, &self.g_power(-(p.a2() as i64))).unwrap();
            self.antihomomorphic_image(&sg, &sx, &sy)
        });
        &table[self.index_of(m)]
    }

    fn apply_linear(
        &self,
        u: &AlgebraElement,
        image: impl Fn(&Monomial) -> AlgebraElement,
    ) -> AlgebraElement {
        let mut out = self.zero();
        for (m, c) in &u.terms {
            for (m2, c2) in image(m).terms() {
                out.add_monomial(*m2, c * c2);
            }
        }
        out
    }

    pub fn antipode(&self, u: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        check_same(&self.params, &u.params)?;
        Ok(self.apply_linear(u, |m| self.antipode_of(m).clone()))
    }

    pub fn inverse_antipode(&self, u: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        check_same(&self.params, &u.params)?;
        Ok(self.apply_linear(u, |m| self.inverse_antipode_of(m).clone()))
    }

    /// `S^k(u)` by iteration.
    pub fn antipode_power(
        &self,
        u: &AlgebraElement,
        k: u32,
    ) -> Result<AlgebraElement, AlgebraError> {
        let mut acc = u.clone();
        for _ in 0..k {
            acc = self.antipode(&acc)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::gauss_binomial;
    use crate::params::valid_tuples;

    fn alg(n: i64, a1: i64, a2: i64, b1: i64, b2: i64) -> TaftAlgebra {
        TaftAlgebra::new(GtaParameters::new(n, a1, a2, b1, b2).unwrap())
    }

    #[test]
    fn generator_relations() {
        let h = alg(8, 1, 2, 1, -2);
        let p = h.params().clone();
        let gx = h.multiply(&h.g(), &h.x()).unwrap();
        assert_eq!(
            gx,
            h.element_with(Monomial::new(1, 0, 1), h.root(p.b1() as i64))
        );
        let x_top = h.power(&h.x(), p.nx() - 1).unwrap();
        assert!(h.multiply(&x_top, &h.x()).unwrap().is_zero());
        let yx = h.multiply(&h.y(), &h.x()).unwrap();
        assert_eq!(
            yx,
            h.element_with(Monomial::new(1, 1, 0), h.root(-(p.xy_exponent() as i64)))
        );
        assert!(h.power(&h.g(), 8).unwrap() == h.unit());
    }

    #[test]
    fn counit_examples() {
        let h = alg(8, 1, 2, 1, -2);
        assert!(h.counit(&h.g_power(5)).unwrap().is_one());
        assert!(h.counit(&h.x()).unwrap().is_zero());
        let mut u = h.element(Monomial::new(2, 1, 3));
        u.add_monomial(Monomial::new(0, 0, 1), h.scalar(5));
        assert_eq!(h.counit(&u).unwrap(), h.scalar(5));
    }

    #[test]
    fn coproduct_examples() {
        let h = alg(8, 1, 2, 1, -2);
        let p = h.params().clone();
        let dg = h.coproduct(&h.g()).unwrap();
        assert_eq!(dg.terms().len(), 1);
        assert!(dg
            .coefficient(Monomial::new(0, 0, 1), Monomial::new(0, 0, 1))
            .is_one());

        let dx = h.coproduct(&h.x()).unwrap();
        assert_eq!(dx, h.generator_coproducts().1);

        // Δ(x²) = 1⊗x² + (1 + q^(a1 b1)) x⊗x g^a1 + x²⊗g^(2 a1)
        let x2 = h.power(&h.x(), 2).unwrap();
        let dx2 = h.coproduct(&x2).unwrap();
        assert_eq!(dx2.terms().len(), 3);
        assert!(dx2
            .coefficient(Monomial::ONE, Monomial::new(2, 0, 0))
            .is_one());
        let middle = dx2.coefficient(Monomial::new(1, 0, 0), Monomial::new(1, 0, p.a1()));
        let e = (p.a1() * p.b1()) as i64;
        assert_eq!(middle, h.scalar(1) + h.root(e));
        assert_eq!(middle, gauss_binomial(2, 1, e, 8).unwrap());
        assert!(dx2
            .coefficient(Monomial::new(2, 0, 0), Monomial::new(0, 0, 2 * p.a1()))
            .is_one());
    }

    #[test]
    fn tensor_multiply_examples() {
        let h = alg(8, 1, 2, 1, -2);
        let p = h.params().clone();
        let one = h.tensor_of(Monomial::ONE, Monomial::ONE);
        let dx = h.coproduct(&h.x()).unwrap();
        assert_eq!(h.tensor_multiply(&one, &dx).unwrap(), dx);
        let a = h.tensor_of(Monomial::ONE, Monomial::new(1, 0, 0));
        let b = h.tensor_of(Monomial::new(1, 0, 0), Monomial::new(0, 0, p.a1()));
        let ab = h.tensor_multiply(&a, &b).unwrap();
        assert_eq!(
            ab,
            h.tensor_of(Monomial::new(1, 0, 0), Monomial::new(1, 0, p.a1()))
        );
        let ba = h.tensor_multiply(&b, &a).unwrap();
        let mut expected = TensorElement::zero(h.params());
        expected.add_term(
            Monomial::new(1, 0, 0),
            Monomial::new(1, 0, p.a1()),
            h.root((p.a1() * p.b1()) as i64),
        );
        assert_eq!(ba, expected);
    }

    #[test]
    fn antipode_examples() {
        let h = alg(8, 1, 2, 1, -2);
        let p = h.params().clone();
        assert_eq!(h.antipode(&h.g()).unwrap(), h.g_power(7));
        let s2x = h.antipode_power(&h.x(), 2).unwrap();
        assert_eq!(s2x, h.x().mul_root_power((p.a1() * p.b1()) as i64));
        let s4y = h.antipode_power(&h.y(), 4).unwrap();
        assert_eq!(s4y, h.y().mul_root_power(2 * (p.a2() * p.b2()) as i64));
    }

    #[test]
    fn inverse_antipode_inverts() {
        for p in valid_tuples(6).into_iter().take(20) {
            let h = TaftAlgebra::new(p);
            for m in h.basis() {
                let e = h.element(m);
                let back = h.antipode(&h.inverse_antipode(&e).unwrap()).unwrap();
                assert_eq!(back, e);
                let back = h.inverse_antipode(&h.antipode(&e).unwrap()).unwrap();
                assert_eq!(back, e);
            }
        }
    }

    #[test]
    fn coproduct_powers_match_gaussian_binomials() {
        for p in valid_tuples(8) {
            let h = TaftAlgebra::new(p.clone());
            let e = (p.a1() as i64) * (p.b1() as i64);
            for n in 0..p.nx() {
                let terms = h.coproduct_terms(&Monomial::new(n, 0, 0));
                for k in 0..=n {
                    let left = Monomial::new(k, 0, 0);
                    let right = Monomial::new(n - k, 0, (p.a1() * k) % p.order());
                    let c = terms
                        .iter()
                        .find(|t| t.left == left && t.right == right)
                        .map(|t| t.coeff.clone())
                        .unwrap_or_else(|| h.scalar(0));
                    assert_eq!(
                        c,
                        gauss_binomial(n, k, e, p.order()).unwrap(),
                        "{p} n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn single_terms_match_table() {
        for n in 2..=6 {
            for p in valid_tuples(n) {
                let h = TaftAlgebra::new(p.clone());
                for m in h.basis() {
                    let terms = h.coproduct_terms(&m);
                    assert_eq!(terms.len() as u32, (m.i + 1) * (m.j + 1));
                    for t in terms {
                        let single = h.coproduct_term(&m, t.left.i, t.left.j).unwrap();
                        assert_eq!(&single, t, "{p} {m}");
                    }
                }
            }
        }
    }

    #[test]
    fn products_stay_in_range() {
        let h = alg(6, 1, 1, 1, 5);
        for u in h.basis() {
            for v in h.basis() {
                if let Some((e, m)) = h.monomial_product(u, v) {
                    assert!(h.contains(&m));
                    assert!(e < 6);
                }
            }
        }
    }

    #[test]
    fn mismatched_parameters_rejected() {
        let h = alg(8, 1, 2, 1, -2);
        let k = alg(6, 1, 1, 1, 5);
        assert!(matches!(
            h.multiply(&h.x(), &k.x()),
            Err(AlgebraError::ParameterMismatch { .. })
        ));
    }

    #[test]
    fn display() {
        let h = alg(8, 1, 2, 1, -2);
        assert_eq!(Monomial::new(2, 1, 3).to_string(), "x^2 y g^3");
        let dx = h.coproduct(&h.x()).unwrap();
        assert_eq!(dx.to_string(), "1 ⊗ x + x ⊗ g");
    }
}
