//! Hopf algebra axioms checked on basis monomials.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{AlgebraElement, Monomial, TaftAlgebra, TensorElement};
use crate::cyclotomic::CyclotomicScalar;

/// Which monomials an axiom is checked on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Scope {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

impl Scope {
    pub const DEFAULT_SAMPLES: usize = 100;
    pub const DEFAULT_SEED: u64 = 2024;

    pub fn sampled(seed: u64) -> Self {
        Scope::Sampled {
            samples: Self::DEFAULT_SAMPLES,
            seed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Coassociativity,
    Counit,
    Antipode,
    CoproductMultiplicative,
    AntipodeSquare,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomOutcome {
    pub axiom: Axiom,
    pub checked: usize,
    pub witness: Option<String>,
}

impl AxiomOutcome {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub outcomes: Vec<AxiomOutcome>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(AxiomOutcome::passed)
    }

    pub fn outcome(&self, axiom: Axiom) -> Option<&AxiomOutcome> {
        self.outcomes.iter().find(|o| o.axiom == axiom)
    }
}

type Triple = BTreeMap<(Monomial, Monomial, Monomial), CyclotomicScalar>;
type MonomialCheck = fn(&TaftAlgebra, &Monomial) -> bool;

fn add_triple(acc: &mut Triple, key: (Monomial, Monomial, Monomial), value: CyclotomicScalar) {
    let entry = acc
        .entry(key)
        .or_insert_with(|| CyclotomicScalar::zero(value.order()));
    *entry += &value;
    if entry.is_zero() {
        acc.remove(&key);
    }
}

/// `(Δ⊗id)Δ(m)` and `(id⊗Δ)Δ(m)`.
pub fn coassociativity_sides(h: &TaftAlgebra, m: &Monomial) -> (Triple, Triple) {
    let mut left = Triple::new();
    let mut right = Triple::new();
    for t in h.coproduct_terms(m) {
        for s in h.coproduct_terms(&t.left) {
            add_triple(&mut left, (s.left, s.right, t.right), &t.coeff * &s.coeff);
        }
        for s in h.coproduct_terms(&t.right) {
            add_triple(&mut right, (t.left, s.left, s.right), &t.coeff * &s.coeff);
        }
    }
    (left, right)
}

pub fn check_coassociativity(h: &TaftAlgebra, m: &Monomial) -> bool {
    let (l, r) = coassociativity_sides(h, m);
    l == r
}

pub fn check_counit(h: &TaftAlgebra, m: &Monomial) -> bool {
    let mut left = h.zero();
    let mut right = h.zero();
    for t in h.coproduct_terms(m) {
        if TaftAlgebra::counit_monomial(&t.left) {
            left.add_monomial(t.right, t.coeff.clone());
        }
        if TaftAlgebra::counit_monomial(&t.right) {
            right.add_monomial(t.left, t.coeff.clone());
        }
    }
    let expected = h.element(*m);
    left == expected && right == expected
}

pub fn check_antipode(h: &TaftAlgebra, m: &Monomial) -> bool {
    let mut left = h.zero();
    let mut right = h.zero();
    for t in h.coproduct_terms(m) {
        let a = h.element_with(t.left, t.coeff.clone());
        let b = h.element(t.right);
        let l = h.multiply(&h.antipode(&a).unwrap(), &b).unwrap();
        let r = h.multiply(&a, &h.antipode(&b).unwrap()).unwrap();
        left = left.try_add(&l).unwrap();
        right = right.try_add(&r).unwrap();
    }
    let expected = if TaftAlgebra::counit_monomial(m) {
        h.unit()
    } else {
        h.zero()
    };
    left == expected && right == expected
}

/// `Δ(uv) = Δ(u)Δ(v)`.
pub fn check_multiplicative(h: &TaftAlgebra, u: &AlgebraElement, v: &AlgebraElement) -> bool {
    let uv = h.multiply(u, v).unwrap();
    let lhs = h.coproduct(&uv).unwrap();
    let rhs: TensorElement = h
        .tensor_multiply(&h.coproduct(u).unwrap(), &h.coproduct(v).unwrap())
        .unwrap();
    lhs == rhs
}

fn monomials_in_scope(h: &TaftAlgebra, scope: &Scope) -> Vec<Monomial> {
    match scope {
        Scope::Exhaustive => h.basis().collect(),
        Scope::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            (0..*samples)
                .map(|_| h.monomial_at(rng.gen_range(0..h.dimension())))
                .collect()
        }
    }
}

fn first_failure<'a>(
    items: impl IntoIterator<Item = &'a Monomial>,
    check: impl Fn(&Monomial) -> bool,
) -> (usize, Option<String>) {
    let mut checked = 0;
    for m in items {
        checked += 1;
        if !check(m) {
            return (checked, Some(m.to_string()));
        }
    }
    (checked, None)
}

fn check_multiplicativity(h: &TaftAlgebra, scope: &Scope, monomials: &[Monomial]) -> AxiomOutcome {
    let generators = [("g", h.g()), ("x", h.x()), ("y", h.y())];
    let mut checked = 0;
    let mut witness = None;
    'outer: for (gn, gen) in &generators {
        for (kn, other) in &generators {
            checked += 1;
            if !check_multiplicative(h, gen, other) {
                witness = Some(format!("{gn} * {kn}"));
                break 'outer;
            }
        }
    }
    if witness.is_none() {
        match scope {
            Scope::Exhaustive => {
                'outer2: for m in monomials {
                    let e = h.element(*m);
                    for (gn, gen) in &generators {
                        checked += 2;
                        if !check_multiplicative(h, &e, gen) {
                            witness = Some(format!("({m}) * {gn}"));
                            break 'outer2;
                        }
                        if !check_multiplicative(h, gen, &e) {
                            witness = Some(format!("{gn} * ({m})"));
                            break 'outer2;
                        }
                    }
                }
            }
            Scope::Sampled { samples, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
                for _ in 0..*samples {
                    let u = h.monomial_at(rng.gen_range(0..h.dimension()));
                    let v = h.monomial_at(rng.gen_range(0..h.dimension()));
                    checked += 1;
                    if !check_multiplicative(h, &h.element(u), &h.element(v)) {
                        witness = Some(format!("({u}) * ({v})"));
                        break;
                    }
                }
            }
        }
    }
    AxiomOutcome {
        axiom: Axiom::CoproductMultiplicative,
        checked,
        witness,
    }
}

/// `S²` fixes `g` and scales `x`, `y` by `q^(a1 b1)`, `q^(a2 b2)`.
pub fn check_antipode_square(h: &TaftAlgebra) -> AxiomOutcome {
    let p = h.params();
    let cases = [
        ("g", h.g(), h.g()),
        ("x", h.x(), h.x().mul_root_power(p.braiding()[0][0] as i64)),
        ("y", h.y(), h.y().mul_root_power(p.braiding()[1][1] as i64)),
    ];
    let witness = cases
        .iter()
        .find(|(_, u, expected)| h.antipode_power(u, 2).unwrap() != *expected)
        .map(|(name, _, _)| name.to_string());
    AxiomOutcome {
        axiom: Axiom::AntipodeSquare,
        checked: cases.len(),
        witness,
    }
}

/// Runs every axiom over the monomials selected by `scope`.
pub fn check_axioms(h: &TaftAlgebra, scope: &Scope) -> AxiomReport {
    let monomials = monomials_in_scope(h, scope);
    let mut outcomes = Vec::new();
    let simple: [(Axiom, MonomialCheck); 3] = [
        (Axiom::Coassociativity, check_coassociativity),
        (Axiom::Counit, check_counit),
        (Axiom::Antipode, check_antipode),
    ];
    for (axiom, check) in simple {
        let (checked, witness) = first_failure(&monomials, |m| check(h, m));
        outcomes.push(AxiomOutcome {
            axiom,
            checked,
            witness,
        });
    }
    outcomes.push(check_multiplicativity(h, scope, &monomials));
    outcomes.push(check_antipode_square(h));
    AxiomReport { outcomes }
}
