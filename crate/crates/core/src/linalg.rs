//! Fraction-free Gaussian elimination over `Z[q]`.

use crate::cyclotomic::CyclotomicScalar;

/// Rank of a matrix over `Q(q)` by Bareiss elimination. Every division is
/// exact in `Z[q]`, so no fractions appear.
pub fn rank(mut rows: Vec<Vec<CyclotomicScalar>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let order = match rows.iter().flatten().next() {
        Some(c) => c.order(),
        None => return 0,
    };
    let mut prev = CyclotomicScalar::one(order);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let p = &pivot_row[col];
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for c in col + 1..ncols {
                let mut v = p * &row[c];
                if !factor.is_zero() {
                    v -= &(&factor * &pivot_row[c]);
                }
                row[c] = v
                    .exact_div(&prev)
                    .expect("Bareiss quotients are exact in an integral domain");
            }
            row[col] = CyclotomicScalar::zero(order);
        }
        prev = p.clone();
        rank += 1;
    }
    rank
}
