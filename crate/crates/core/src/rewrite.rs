//! Word rewriting into PBW normal form, one adjacent transposition at a time.
//!
//! This is deliberately naive and serves as an independent check on the
//! closed-form monomial product in [`crate::algebra`].

use crate::algebra::Monomial;
use crate::params::GtaParameters;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
    G,
}

/// Expands a monomial into its defining word `x..x y..y g..g`.
pub fn word_of(m: &Monomial) -> Vec<Letter> {
    let mut w = Vec::with_capacity((m.i + m.j + m.l) as usize);
    w.extend(std::iter::repeat_n(Letter::X, m.i as usize));
    w.extend(std::iter::repeat_n(Letter::Y, m.j as usize));
    w.extend(std::iter::repeat_n(Letter::G, m.l as usize));
    w
}

/// Bubble-sorts `word` into `x^i y^j g^l`, accumulating the exponent of `q`.
///
/// Returns `None` when the sorted word is zero by `x^Nx = 0` or `y^Ny = 0`.
pub fn normal_form(params: &GtaParameters, word: &[Letter]) -> Option<(u32, Monomial)> {
    let n = params.order() as u64;
    let mut w = word.to_vec();
    let mut exponent = 0u64;
    let mut sorted = false;
    while !sorted {
        sorted = true;
        for k in 0..w.len().saturating_sub(1) {
            if w[k] > w[k + 1] {
                exponent += match (w[k], w[k + 1]) {
                    (Letter::G, Letter::X) => params.b1() as u64,
                    (Letter::G, Letter::Y) => params.b2() as u64,
                    (Letter::Y, Letter::X) => n - params.xy_exponent() as u64,
                    _ => unreachable!("only out-of-order pairs are swapped"),
                };
                w.swap(k, k + 1);
                sorted = false;
            }
        }
    }
    let count = |c: Letter| w.iter().filter(|&&l| l == c).count() as u32;
    let (i, j, l) = (count(Letter::X), count(Letter::Y), count(Letter::G));
    if i >= params.nx() || j >= params.ny() {
        return None;
    }
    Some((
        (exponent % n) as u32,
        Monomial::new(i, j, l % params.order()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TaftAlgebra;
    use crate::params::valid_tuples;

    #[test]
    fn single_swaps() {
        let p = GtaParameters::new(8, 1, 2, 1, 6).unwrap();
        assert_eq!(
            normal_form(&p, &[Letter::G, Letter::X]),
            Some((1, Monomial::new(1, 0, 1)))
        );
        assert_eq!(
            normal_form(&p, &[Letter::Y, Letter::X]),
            Some((8 - 6, Monomial::new(1, 1, 0)))
        );
        assert_eq!(normal_form(&p, &[Letter::Y; 4]), None);
    }

    #[test]
    fn agrees_with_closed_form_product() {
        for n in [2, 4, 6] {
            for p in valid_tuples(n) {
                let h = TaftAlgebra::new(p.clone());
                for u in h.basis() {
                    for v in h.basis() {
                        let mut w = word_of(&u);
                        w.extend(word_of(&v));
                        assert_eq!(
                            normal_form(&p, &w),
                            h.monomial_product(u, v),
                            "{p}: {u} * {v}"
                        );
                    }
                }
            }
        }
    }
}
