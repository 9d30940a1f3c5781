use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::Arith;

/// Reduce `rows` (each of length `ncols`) to reduced row echelon form in
/// place, dropping zero rows. Returns the pivot columns.
pub fn rref<A: Arith>(ar: &A, rows: &mut Vec<Vec<A::E>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !ar.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = ar.inv(&rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = ar.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !ar.is_zero(&row[c]) {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !ar.is_zero(y) {
                        *x = ar.sub(x, &ar.mul(&f, y));
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : Mx = 0}` in reduced form (one vector per free column).
pub fn nullspace<A: Arith>(ar: &A, mut rows: Vec<Vec<A::E>>, ncols: usize) -> Vec<Vec<A::E>> {
    let pivots = rref(ar, &mut rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![ar.zero(); ncols];
            x[f] = ar.one();
            for (row, &p) in rows.iter().zip(&pivots) {
                x[p] = ar.neg(&row[f]);
            }
            x
        })
        .collect()
}

/// Rank of a dense matrix.
pub fn rank<A: Arith>(ar: &A, mut rows: Vec<Vec<A::E>>, ncols: usize) -> usize {
    rref(ar, &mut rows, ncols).len()
}

/// The rational `r/s ≡ a (mod m)` with `|r|, |s| ≤ √(m/2)`, if one exists.
pub fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let a = a.mod_floor(m);
    if a.is_zero() {
        return Some(BigRational::zero());
    }
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a);
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || s1.abs() > bound || !r1.gcd(&s1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, s1))
}

/// Chinese remaindering of `a₁ mod m₁` and `a₂ mod m₂` (coprime moduli).
pub fn crt(a1: &BigInt, m1: &BigInt, a2: &BigInt, m2: &BigInt) -> (BigInt, BigInt) {
    let e = m1.extended_gcd(m2);
    let m = m1 * m2;
    // x = a1 + m1 · ((a2 − a1) · m1⁻¹ mod m2)
    let t = ((a2 - a1) * &e.x).mod_floor(m2);
    ((a1 + m1 * t).mod_floor(&m), m)
}
