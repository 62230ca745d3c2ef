//! Hermite and Smith normal forms with unimodular transforms.
//!
//! Both reductions work purely with elementary unimodular operations on
//! big integers, so intermediate coefficient growth never overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Row Hermite normal form `H = U·M`.
///
/// `H` has the same shape as `M`; its nonzero rows come first, pivots are
/// positive, each pivot lies strictly right of the previous one, and every
/// entry above a pivot is reduced into `[0, pivot)`.
#[derive(Clone, Debug)]
pub struct HermiteForm {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// Column index of the pivot of each nonzero row of `h`, in order.
    pub pivots: Vec<usize>,
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Smith normal form `D = U·M·V`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal of `d` up to `min(rows, cols)`, zeros included.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }
}

pub fn hermite_normal_form(m: &IntMatrix) -> HermiteForm {
    let (h, u, pivots) = hnf_impl(m, true);
    HermiteForm {
        h,
        u: u.expect("transform requested"),
        pivots,
    }
}

/// HNF without the transform; returns `(H, pivot columns)`.
pub(crate) fn hnf_only(m: &IntMatrix) -> (IntMatrix, Vec<usize>) {
    let (h, _, pivots) = hnf_impl(m, false);
    (h, pivots)
}

fn hnf_impl(m: &IntMatrix, track: bool) -> (IntMatrix, Option<IntMatrix>, Vec<usize>) {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut u = track.then(|| IntMatrix::identity(rows));
    let mut pivots = Vec::new();
    let mut pr = 0;

    for col in 0..cols {
        if pr == rows {
            break;
        }
        for i in pr + 1..rows {
            if h.get(i, col).is_zero() {
                continue;
            }
            let a = h.get(pr, col).clone();
            let b = h.get(i, col).clone();
            let eg = a.extended_gcd(&b);
            let g = eg.gcd;
            // [[x, y], [-b/g, a/g]] has determinant (xa + yb)/g = 1.
            let r = -(&b / &g);
            let s = &a / &g;
            h.combine_rows(pr, i, &eg.x, &eg.y, &r, &s);
            if let Some(u) = u.as_mut() {
                u.combine_rows(pr, i, &eg.x, &eg.y, &r, &s);
            }
        }
        if h.get(pr, col).is_zero() {
            continue;
        }
        if h.get(pr, col).is_negative() {
            h.negate_row(pr);
            if let Some(u) = u.as_mut() {
                u.negate_row(pr);
            }
        }
        let pivot = h.get(pr, col).clone();
        for k in 0..pr {
            let q = h.get(k, col).div_floor(&pivot);
            if !q.is_zero() {
                let f = -q;
                h.add_row_multiple(k, pr, &f);
                if let Some(u) = u.as_mut() {
                    u.add_row_multiple(k, pr, &f);
                }
            }
        }
        pivots.push(col);
        pr += 1;
    }
    (h, u, pivots)
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = smallest_nonzero(&d, t) else {
                return SmithForm { d, u, v };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = d.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = d.get(i, t).div_floor(&pivot);
                if !q.is_zero() {
                    let f = -q;
                    d.add_row_multiple(i, t, &f);
                    u.add_row_multiple(i, t, &f);
                }
                clean &= d.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                let q = d.get(t, j).div_floor(&pivot);
                if !q.is_zero() {
                    let f = -q;
                    d.add_col_multiple(j, t, &f);
                    v.add_col_multiple(j, t, &f);
                }
                clean &= d.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            // Pull a non-multiple into row t so the next pass shrinks the pivot.
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !d.get(i, j).is_multiple_of(&pivot))
            });
            match offender {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { d, u, v }
}

fn smallest_nonzero(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = d.get(i, j);
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                best = Some((i, j, a));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_hnf(m: &IntMatrix) -> HermiteForm {
        let f = hermite_normal_form(m);
        assert_eq!(&f.u * m, f.h);
        assert!(f.u.is_unimodular());
        f
    }

    #[test]
    fn hnf_already_reduced() {
        let m = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        let f = check_hnf(&m);
        assert_eq!(f.h, m);
        assert_eq!(f.pivots, vec![0, 1]);
    }

    #[test]
    fn hnf_zero_matrix() {
        let f = check_hnf(&IntMatrix::zeros(2, 2));
        assert_eq!(f.h.nonzero_row_count(), 0);
        assert!(f.pivots.is_empty());
    }

    #[test]
    fn hnf_rank_one() {
        let f = check_hnf(&IntMatrix::from_i64(&[&[4, 6], &[6, 9]]));
        assert_eq!(f.h, IntMatrix::from_i64(&[&[2, 3], &[0, 0]]));
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let f = check_hnf(&IntMatrix::from_i64(&[&[1, 5, 7], &[0, 2, 9], &[0, 0, 4]]));
        assert_eq!(
            f.h,
            IntMatrix::from_i64(&[&[1, 1, 1], &[0, 2, 1], &[0, 0, 4]])
        );
    }

    #[test]
    fn snf_examples() {
        let f = smith_normal_form(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(f.d, IntMatrix::from_i64(&[&[1, 0], &[0, 6]]));
        let f = smith_normal_form(&IntMatrix::identity(3));
        assert_eq!(f.d, IntMatrix::identity(3));
        let m = IntMatrix::from_i64(&[&[2, 4], &[4, 8]]);
        let f = smith_normal_form(&m);
        assert_eq!(f.d, IntMatrix::from_i64(&[&[2, 0], &[0, 0]]));
        assert_eq!(&(&f.u * &m) * &f.v, f.d);
    }

    #[test]
    fn snf_of_empty_shapes() {
        let f = smith_normal_form(&IntMatrix::zeros(0, 3));
        assert_eq!(f.v, IntMatrix::identity(3));
        assert!(f.diagonal().is_empty());
    }
}
