//! Enumeration of all subgroups of a finite abelian group.
//!
//! Subgroups of `Z^r / L` correspond to lattices `L ⊆ M ⊆ Z^r`. Each such
//! `M` has a unique upper-triangular Hermite basis whose diagonal entries
//! divide the diagonal of `L`'s basis. The basis is grown from the bottom
//! row up; after fixing rows `i..r` the sublattice of vectors with leading
//! `i` zeros is determined, and containment of the matching part of `L` is
//! checked immediately so dead branches are cut early.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::group::{FgAbelianGroup, Subgroup};
use super::matrix::IntMatrix;
use super::span::Lattice;
use crate::error::Result;

/// Every subgroup exactly once, sorted by canonical preimage basis.
pub fn enumerate_subgroups(g: &FgAbelianGroup) -> Result<Vec<Subgroup>> {
    g.require_finite()?;
    let r = g.ambient_rank();
    let rel = g.relations().basis();

    // Each partial basis holds rows i..r (bottom-up construction), full width.
    let mut partials: Vec<Vec<Vec<BigInt>>> = vec![Vec::new()];
    for i in (0..r).rev() {
        let target = rel.row(i);
        let divisors = positive_divisors(rel.get(i, i));
        let mut next = Vec::new();
        for part in &partials {
            let below: Vec<&BigInt> = part
                .iter()
                .enumerate()
                .map(|(k, row)| &row[i + 1 + k])
                .collect();
            for h in &divisors {
                let mut offdiag = vec![BigInt::zero(); below.len()];
                loop {
                    let mut row = vec![BigInt::zero(); r];
                    row[i] = h.clone();
                    row[i + 1..].clone_from_slice(&offdiag);
                    if target_in_span(target, i, &row, part) {
                        let mut grown = Vec::with_capacity(part.len() + 1);
                        grown.push(row);
                        grown.extend(part.iter().cloned());
                        next.push(grown);
                    }
                    if !advance(&mut offdiag, &below) {
                        break;
                    }
                }
            }
        }
        partials = next;
    }

    let mut out: Vec<Subgroup> = partials
        .into_iter()
        .map(|rows| Subgroup::from_preimage_unchecked(Lattice::from_matrix(&IntMatrix::from_rows(r, rows))))
        .collect();
    out.sort_by(|a, b| a.preimage().canonical_cmp(b.preimage()));
    Ok(out)
}

/// Is `target` (zero before column `i`) in the span of `row` and `part`,
/// where `row` has pivot at `i` and `part` is upper triangular from `i + 1`?
fn target_in_span(target: &[BigInt], i: usize, row: &[BigInt], part: &[Vec<BigInt>]) -> bool {
    let (c, rem) = target[i].div_rem(&row[i]);
    if !rem.is_zero() {
        return false;
    }
    let mut rest: Vec<BigInt> = target.iter().zip(row).map(|(t, x)| t - &c * x).collect();
    for (k, prow) in part.iter().enumerate() {
        let col = i + 1 + k;
        let (q, rem) = rest[col].div_rem(&prow[col]);
        if !rem.is_zero() {
            return false;
        }
        if !q.is_zero() {
            for (x, p) in rest.iter_mut().zip(prow) {
                *x -= &q * p;
            }
        }
    }
    rest.iter().all(Zero::is_zero)
}

/// Mixed-radix increment; returns false after wrapping around.
fn advance(digits: &mut [BigInt], bounds: &[&BigInt]) -> bool {
    for k in (0..digits.len()).rev() {
        digits[k] += 1;
        if &digits[k] < bounds[k] {
            return true;
        }
        digits[k] = BigInt::zero();
    }
    false
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if n.is_multiple_of(&d) {
            let e = n / &d;
            if e != d {
                large.push(e);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
