//! Exact feasibility of `{x >= 0 : A x = b}` over the rationals.
//!
//! Phase I of the simplex method on a dense tableau, Bland's rule for both
//! entering and leaving variables so the method cannot cycle.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Whether some `x >= 0` satisfies `a x = b`. Rows with negative right-hand
/// side are negated first.
pub(crate) fn feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    let m = a.len();
    assert_eq!(m, b.len(), "row count mismatch");
    if m == 0 {
        return true;
    }
    let n = a[0].len();
    let width = n + m;

    // rows: [original | artificial | rhs]
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        assert_eq!(row.len(), n, "ragged constraint matrix");
        let flip = rhs.is_negative();
        let mut r: Vec<BigRational> = row.iter().map(|v| if flip { -v } else { v.clone() }).collect();
        r.extend((0..m).map(|k| if k == i { one() } else { BigRational::zero() }));
        r.push(if flip { -rhs } else { rhs.clone() });
        rows.push(r);
    }
    let mut basis: Vec<usize> = (n..width).collect();

    // reduced costs of the phase I objective (sum of artificials)
    let mut cost: Vec<BigRational> = vec![BigRational::zero(); width + 1];
    for r in &rows {
        for j in 0..n {
            cost[j] -= &r[j];
        }
        cost[width] -= &r[width];
    }

    while let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, r) in rows.iter().enumerate() {
            if r[enter].is_positive() {
                let ratio = &r[width] / &r[enter];
                let better = match &leave {
                    None => true,
                    Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // phase I objective is bounded below by zero
        let (pivot_row, _) = leave.expect("phase I objective is bounded");
        pivot(&mut rows, &mut cost, pivot_row, enter);
        basis[pivot_row] = enter;
    }
    cost[width].is_zero()
}

fn one() -> BigRational {
    BigRational::from_integer(1.into())
}

fn pivot(rows: &mut [Vec<BigRational>], cost: &mut [BigRational], pr: usize, pc: usize) {
    let p = rows[pr][pc].clone();
    for v in rows[pr].iter_mut() {
        *v /= &p;
    }
    let pivot_row = rows[pr].clone();
    for (i, r) in rows.iter_mut().enumerate() {
        if i == pr || r[pc].is_zero() {
            continue;
        }
        let f = r[pc].clone();
        for (v, pv) in r.iter_mut().zip(&pivot_row) {
            *v -= &f * pv;
        }
    }
    if !cost[pc].is_zero() {
        let f = cost[pc].clone();
        for (v, pv) in cost.iter_mut().zip(&pivot_row) {
            *v -= &f * pv;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }

    #[test]
    fn simple_systems() {
        // x + y = 1, x - y = 0
        assert!(feasible(&mat(&[&[1, 1], &[1, -1]]), &[q(1), q(0)]));
        // x + y = -1 has no nonnegative solution
        assert!(!feasible(&mat(&[&[1, 1]]), &[q(-1)]));
        // x = 1, x = 2
        assert!(!feasible(&mat(&[&[1], &[1]]), &[q(1), q(2)]));
        // redundant rows
        assert!(feasible(&mat(&[&[1, 2], &[2, 4]]), &[q(3), q(6)]));
        assert!(feasible(&[], &[]));
    }

    #[test]
    fn newton_polyhedron_membership() {
        // (1,1) in conv{(2,0),(0,2)} + orthant: l1 + l2 = 1, 2 l1 + s1 = 1, 2 l2 + s2 = 1
        let a = mat(&[&[1, 1, 0, 0], &[2, 0, 1, 0], &[0, 2, 0, 1]]);
        assert!(feasible(&a, &[q(1), q(1), q(1)]));
        // (1,1) against (3,0),(0,3)
        let a = mat(&[&[1, 1, 0, 0], &[3, 0, 1, 0], &[0, 3, 0, 1]]);
        assert!(!feasible(&a, &[q(1), q(1), q(1)]));
    }
}
