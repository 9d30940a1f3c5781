use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::GaussRat;

/// Field arithmetic through a context object, so that modular fields can
/// carry their prime at run time.
pub trait Arith: Sync {
    type E: Clone + Debug + Send + Sync;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    /// Panics on zero.
    fn inv(&self, a: &Self::E) -> Self::E;
}

/// `F_p[i]/(i²+1)` for a prime `p ≡ 3 (mod 4)`, which is the field with `p²`
/// elements. Elements are `[re, im]` with entries in `0..p`.
#[derive(Debug, Clone, Copy)]
pub struct ModP2 {
    pub p: u64,
}

impl ModP2 {
    pub fn new(p: u64) -> Self {
        assert!(p % 4 == 3 && p < (1 << 63));
        ModP2 { p }
    }

    #[inline]
    fn m(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    #[inline]
    fn a(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn s(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn inv_p(&self, a: u64) -> u64 {
        let (mut t, mut nt) = (0i128, 1i128);
        let (mut r, mut nr) = (self.p as i128, a as i128);
        while nr != 0 {
            let q = r / nr;
            (t, nt) = (nt, t - q * nt);
            (r, nr) = (nr, r - q * nr);
        }
        assert_eq!(r, 1, "not invertible mod p");
        if t < 0 {
            t += self.p as i128;
        }
        t as u64
    }

    /// Reduce a signed integer.
    pub fn reduce(&self, x: &num_bigint::BigInt) -> u64 {
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        let p = num_bigint::BigInt::from(self.p);
        x.mod_floor(&p).to_u64().unwrap()
    }
}

impl Arith for ModP2 {
    type E = [u64; 2];
    fn zero(&self) -> [u64; 2] {
        [0, 0]
    }
    fn one(&self) -> [u64; 2] {
        [1, 0]
    }
    #[inline]
    fn is_zero(&self, a: &[u64; 2]) -> bool {
        a[0] == 0 && a[1] == 0
    }
    #[inline]
    fn add(&self, x: &[u64; 2], y: &[u64; 2]) -> [u64; 2] {
        [self.a(x[0], y[0]), self.a(x[1], y[1])]
    }
    #[inline]
    fn sub(&self, x: &[u64; 2], y: &[u64; 2]) -> [u64; 2] {
        [self.s(x[0], y[0]), self.s(x[1], y[1])]
    }
    #[inline]
    fn mul(&self, x: &[u64; 2], y: &[u64; 2]) -> [u64; 2] {
        if x[1] == 0 && y[1] == 0 {
            return [self.m(x[0], y[0]), 0];
        }
        [
            self.s(self.m(x[0], y[0]), self.m(x[1], y[1])),
            self.a(self.m(x[0], y[1]), self.m(x[1], y[0])),
        ]
    }
    #[inline]
    fn neg(&self, x: &[u64; 2]) -> [u64; 2] {
        [self.s(0, x[0]), self.s(0, x[1])]
    }
    fn inv(&self, x: &[u64; 2]) -> [u64; 2] {
        // (a + bi)⁻¹ = (a − bi)/(a² + b²); a² + b² ≠ 0 because −1 is not a square.
        let n = self.a(self.m(x[0], x[0]), self.m(x[1], x[1]));
        let ni = self.inv_p(n);
        [self.m(x[0], ni), self.m(self.s(0, x[1]), ni)]
    }
}

/// Exact arithmetic over `Q(i)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactQi;

impl Arith for ExactQi {
    type E = GaussRat;
    fn zero(&self) -> GaussRat {
        GaussRat::zero()
    }
    fn one(&self) -> GaussRat {
        GaussRat::one()
    }
    fn is_zero(&self, a: &GaussRat) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &GaussRat, b: &GaussRat) -> GaussRat {
        a.clone() + b.clone()
    }
    fn sub(&self, a: &GaussRat, b: &GaussRat) -> GaussRat {
        a.clone() - b.clone()
    }
    fn mul(&self, a: &GaussRat, b: &GaussRat) -> GaussRat {
        a * b
    }
    fn neg(&self, a: &GaussRat) -> GaussRat {
        -a.clone()
    }
    fn inv(&self, a: &GaussRat) -> GaussRat {
        a.inv().expect("inverse of zero")
    }
}

/// Exact arithmetic over `Q`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Rationals;

impl Arith for Rationals {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_field_axioms() {
        let f = ModP2::new(4611686018427387847);
        let x = [123456789, 987654321];
        let y = [f.p - 5, 42];
        let xi = f.inv(&x);
        assert_eq!(f.mul(&x, &xi), [1, 0]);
        assert_eq!(f.sub(&f.add(&x, &y), &y), x);
        assert_eq!(f.add(&x, &f.neg(&x)), [0, 0]);
        // i² = −1
        assert_eq!(f.mul(&[0, 1], &[0, 1]), [f.p - 1, 0]);
        let small = ModP2::new(7);
        for a in 0..7 {
            for b in 0..7 {
                if a + b > 0 {
                    assert_eq!(small.mul(&[a, b], &small.inv(&[a, b])), [1, 0]);
                }
            }
        }
    }
}
