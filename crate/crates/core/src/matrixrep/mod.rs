//! Explicit matrix representations: tensor constructions, commutants, Lie
//! closures and isotypic profiles.
//!
//! Commutant dimensions are complex dimensions; Lie-closure dimensions are
//! real dimensions of the spanned real Lie algebra.

mod closure;
mod commutant;
mod json;
mod profile;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{GaussRat, Mat};

pub use closure::{lie_closure, split_reductive, ClosureResult, ReductiveSplit};
pub use commutant::{
    commutant, commutant_dimension, commutant_dimension_group, exact_commutant, group_commutant,
    Backend, Commutant, CommutantOptions, CommutantResult, ExactCommutant, ExactMethod,
    DEFAULT_TOLERANCE, GAP_THRESHOLD,
};
pub use json::{load_rep, rep_from_json, rep_to_json, MatrixFile, ScalarKind};
pub use profile::{
    isotypic_profile, partial_transpose, partial_transpose_check, IsotypicProfile, ProfileOptions,
    PtCheck, DEFAULT_SEED,
};

/// Generator matrices, either exact or floating point.
#[derive(Debug, Clone, PartialEq)]
pub enum Generators {
    Exact(Vec<Mat<GaussRat>>),
    Float(Vec<Mat<Complex64>>),
}

/// A list of `d×d` matrices generating a matrix Lie algebra (or group).
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixRep {
    dim: usize,
    generators: Generators,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassicalFamily {
    Su,
    So,
    Sp,
}

impl std::str::FromStr for ClassicalFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "su" => Ok(ClassicalFamily::Su),
            "so" => Ok(ClassicalFamily::So),
            "sp" => Ok(ClassicalFamily::Sp),
            _ => Err(Error::InvalidInput(format!("unknown family `{s}`"))),
        }
    }
}

impl std::fmt::Display for ClassicalFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ClassicalFamily::Su => "su",
            ClassicalFamily::So => "so",
            ClassicalFamily::Sp => "sp",
        })
    }
}

fn check_square<S: crate::linalg::Scalar>(gens: &[Mat<S>]) -> Result<usize> {
    let first = gens
        .first()
        .ok_or_else(|| Error::InvalidInput("no generators".into()))?;
    let d = first.rows();
    for (i, g) in gens.iter().enumerate() {
        if g.rows() != d || g.cols() != d {
            return Err(Error::DimensionMismatch(format!(
                "generator {i} is {}x{}, expected {d}x{d}",
                g.rows(),
                g.cols()
            )));
        }
    }
    Ok(d)
}

impl MatrixRep {
    pub fn exact(generators: Vec<Mat<GaussRat>>) -> Result<Self> {
        let dim = check_square(&generators)?;
        Ok(MatrixRep {
            dim,
            generators: Generators::Exact(generators),
        })
    }

    pub fn float(generators: Vec<Mat<Complex64>>) -> Result<Self> {
        let dim = check_square(&generators)?;
        Ok(MatrixRep {
            dim,
            generators: Generators::Float(generators),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        match &self.generators {
            Generators::Exact(g) => g.len(),
            Generators::Float(g) => g.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn generators(&self) -> &Generators {
        &self.generators
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.generators, Generators::Exact(_))
    }

    pub fn exact_generators(&self) -> Option<&[Mat<GaussRat>]> {
        match &self.generators {
            Generators::Exact(g) => Some(g),
            Generators::Float(_) => None,
        }
    }

    pub fn float_generators(&self) -> Vec<Mat<Complex64>> {
        match &self.generators {
            Generators::Exact(g) => g.iter().map(|m| m.to_c64()).collect(),
            Generators::Float(g) => g.clone(),
        }
    }

    /// Keep the generators at the given positions.
    pub fn subset(&self, idx: &[usize]) -> Result<MatrixRep> {
        if idx.is_empty() || idx.iter().any(|&i| i >= self.len()) {
            return Err(Error::InvalidInput("bad generator subset".into()));
        }
        Ok(match &self.generators {
            Generators::Exact(g) => MatrixRep::exact(idx.iter().map(|&i| g[i].clone()).collect())?,
            Generators::Float(g) => MatrixRep::float(idx.iter().map(|&i| g[i].clone()).collect())?,
        })
    }

    fn map_each(
        &self,
        fe: impl Fn(&Mat<GaussRat>) -> Mat<GaussRat>,
        ff: impl Fn(&Mat<Complex64>) -> Mat<Complex64>,
    ) -> MatrixRep {
        let generators = match &self.generators {
            Generators::Exact(g) => Generators::Exact(g.iter().map(fe).collect()),
            Generators::Float(g) => Generators::Float(g.iter().map(ff).collect()),
        };
        let dim = match &generators {
            Generators::Exact(g) => g[0].rows(),
            Generators::Float(g) => g[0].rows(),
        };
        MatrixRep { dim, generators }
    }

    /// Skew-Hermitian check (exact, or within `tol`).
    pub fn is_skew_hermitian(&self, tol: f64) -> bool {
        match &self.generators {
            Generators::Exact(g) => g.iter().all(|m| m.add(&m.adjoint()).is_zero_within(0.0)),
            Generators::Float(g) => g.iter().all(|m| m.add(&m.adjoint()).is_zero_within(tol)),
        }
    }
}

fn kron_sum<S: crate::linalg::Scalar>(a: &Mat<S>, b: &Mat<S>) -> Mat<S> {
    a.kron(&Mat::identity(b.rows()))
        .add(&Mat::identity(a.rows()).kron(b))
}

/// `A ↦ A⊗1 + 1⊗A`.
pub fn tensor_square(r: &MatrixRep) -> MatrixRep {
    r.map_each(|a| kron_sum(a, a), |a| kron_sum(a, a))
}

/// `A ↦ −Aᵀ`.
pub fn dual_rep(r: &MatrixRep) -> MatrixRep {
    r.map_each(|a| a.transpose().neg(), |a| a.transpose().neg())
}

/// `A ↦ A⊗1 − 1⊗Aᵀ`.
pub fn tensor_with_dual(r: &MatrixRep) -> MatrixRep {
    r.map_each(
        |a| kron_sum(a, &a.transpose().neg()),
        |a| kron_sum(a, &a.transpose().neg()),
    )
}

/// Generator-wise `A_i⊗1 + 1⊗B_i`, pairing the i-th generators.
pub fn tensor_product(r1: &MatrixRep, r2: &MatrixRep) -> Result<MatrixRep> {
    if r1.len() != r2.len() {
        return Err(Error::DimensionMismatch("generator counts differ".into()));
    }
    match (&r1.generators, &r2.generators) {
        (Generators::Exact(a), Generators::Exact(b)) => {
            MatrixRep::exact(a.iter().zip(b).map(|(x, y)| kron_sum(x, y)).collect())
        }
        _ => {
            let a = r1.float_generators();
            let b = r2.float_generators();
            MatrixRep::float(a.iter().zip(&b).map(|(x, y)| kron_sum(x, y)).collect())
        }
    }
}

/// Group tensor square `U ↦ U⊗U`.
pub fn group_tensor_square(us: &[Mat<GaussRat>]) -> Vec<Mat<GaussRat>> {
    us.iter().map(|u| u.kron(u)).collect()
}

/// The fixed symplectic form `J = [[0, 1], [−1, 0]]` on `C^{2ℓ}`.
pub fn symplectic_form(l: usize) -> Mat<GaussRat> {
    Mat::from_fn(2 * l, 2 * l, |r, c| {
        if c == r + l {
            GaussRat::from_ints(1, 0)
        } else if r == c + l {
            GaussRat::from_ints(-1, 0)
        } else {
            GaussRat::from_ints(0, 0)
        }
    })
}

/// A skew-Hermitian basis of the defining representation.
///
/// - `su(n)`: `E_jk − E_kj`, `i(E_jk + E_kj)` for `j < k`, and
///   `i(E_jj − E_{j+1,j+1})`.
/// - `so(k)`: `E_jk − E_kj` for `j < k`.
/// - `sp(ℓ)` on `C^{2ℓ}` preserving [`symplectic_form`]: block matrices
///   `[[A, 0], [0, Ā]]` with `A` in the `u(ℓ)` basis, `[[0, B], [−B, 0]]` and
///   `[[0, iB], [iB, 0]]` with `B` running over the real symmetric basis.
pub fn standard_generators(family: ClassicalFamily, size: usize) -> Result<MatrixRep> {
    let g = GaussRat::from_ints;
    let unit = |n: usize, r: usize, c: usize, v: GaussRat| Mat::unit(n, r, c, v);
    let mut out: Vec<Mat<GaussRat>> = Vec::new();
    match family {
        ClassicalFamily::Su => {
            if size < 2 {
                return Err(Error::InvalidInput("su(n) needs n ≥ 2".into()));
            }
            let n = size;
            for j in 0..n {
                for k in j + 1..n {
                    out.push(unit(n, j, k, g(1, 0)).add(&unit(n, k, j, g(-1, 0))));
                    out.push(unit(n, j, k, g(0, 1)).add(&unit(n, k, j, g(0, 1))));
                }
            }
            for j in 0..n - 1 {
                out.push(unit(n, j, j, g(0, 1)).add(&unit(n, j + 1, j + 1, g(0, -1))));
            }
        }
        ClassicalFamily::So => {
            if size < 2 {
                return Err(Error::InvalidInput("so(k) needs k ≥ 2".into()));
            }
            let n = size;
            for j in 0..n {
                for k in j + 1..n {
                    out.push(unit(n, j, k, g(1, 0)).add(&unit(n, k, j, g(-1, 0))));
                }
            }
        }
        ClassicalFamily::Sp => {
            if size < 1 {
                return Err(Error::InvalidInput("sp(ℓ) needs ℓ ≥ 1".into()));
            }
            let l = size;
            let n = 2 * l;
            let block = |a: &Mat<GaussRat>, r0: usize, c0: usize, m: &mut Mat<GaussRat>| {
                for r in 0..l {
                    for c in 0..l {
                        m[(r0 + r, c0 + c)] = a[(r, c)].clone();
                    }
                }
            };
            let u = standard_u(l);
            for a in &u {
                let mut m = Mat::zeros(n, n);
                block(a, 0, 0, &mut m);
                block(&a.conj(), l, l, &mut m);
                out.push(m);
            }
            for j in 0..l {
                for k in j..l {
                    let mut b = unit(l, j, k, g(1, 0));
                    if j != k {
                        b = b.add(&unit(l, k, j, g(1, 0)));
                    }
                    let mut m = Mat::zeros(n, n);
                    block(&b, 0, l, &mut m);
                    block(&b.neg(), l, 0, &mut m);
                    out.push(m);
                    let ib = b.scale(&GaussRat::i());
                    let mut m = Mat::zeros(n, n);
                    block(&ib, 0, l, &mut m);
                    block(&ib, l, 0, &mut m);
                    out.push(m);
                }
            }
        }
    }
    MatrixRep::exact(out)
}

/// Basis of `u(ℓ)`: the `su(ℓ)` basis plus `i·1`.
fn standard_u(l: usize) -> Vec<Mat<GaussRat>> {
    let mut v = if l >= 2 {
        match standard_generators(ClassicalFamily::Su, l)
            .unwrap()
            .generators
        {
            Generators::Exact(g) => g,
            Generators::Float(_) => unreachable!(),
        }
    } else {
        Vec::new()
    };
    v.push(Mat::identity(l).scale(&GaussRat::i()));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn generator_counts() {
        let count = |f, s| standard_generators(f, s).unwrap().len();
        assert_eq!(count(ClassicalFamily::Su, 2), 3);
        assert_eq!(count(ClassicalFamily::Su, 4), 15);
        assert_eq!(count(ClassicalFamily::So, 5), 10);
        assert_eq!(count(ClassicalFamily::Sp, 2), 10);
        assert_eq!(count(ClassicalFamily::Sp, 3), 21);
        assert!(standard_generators(ClassicalFamily::Su, 1).is_err());
    }

    #[test]
    fn standard_bases_lie_in_compact_forms() {
        for (f, s) in [
            (ClassicalFamily::Su, 4),
            (ClassicalFamily::So, 5),
            (ClassicalFamily::Sp, 3),
        ] {
            let r = standard_generators(f, s).unwrap();
            assert!(r.is_skew_hermitian(0.0));
            for m in r.exact_generators().unwrap() {
                match f {
                    ClassicalFamily::Su => assert!(m.trace().is_zero()),
                    ClassicalFamily::So => assert!(m.data().iter().all(|x| x.is_real())),
                    ClassicalFamily::Sp => {
                        let j = symplectic_form(s);
                        assert!(m.transpose().mul(&j).add(&j.mul(m)).is_zero_within(0.0));
                    }
                }
            }
        }
    }

    #[test]
    fn constructions() {
        let one = MatrixRep::exact(vec![
            Mat::from_rows(vec![vec![GaussRat::from_ints(0, 3)]]).unwrap()
        ])
        .unwrap();
        let sq = tensor_square(&one);
        assert_eq!(
            sq.exact_generators().unwrap()[0][(0, 0)],
            GaussRat::from_ints(0, 6)
        );
        let td = tensor_with_dual(&one);
        assert!(td.exact_generators().unwrap()[0][(0, 0)].is_zero());
        let su2 = standard_generators(ClassicalFamily::Su, 2).unwrap();
        // dual of a skew-Hermitian matrix is its entrywise conjugate
        let d = dual_rep(&su2);
        for (a, b) in d
            .exact_generators()
            .unwrap()
            .iter()
            .zip(su2.exact_generators().unwrap())
        {
            assert_eq!(*a, b.conj());
        }
        let so3 = standard_generators(ClassicalFamily::So, 3).unwrap();
        assert_eq!(dual_rep(&so3), so3);
        // σ-type generator i(E11 − E22): tensor square is diag(2i, 0, 0, −2i)
        let sq2 = tensor_square(&su2);
        let h = &sq2.exact_generators().unwrap()[2];
        let want = [(0, 2), (0, 0), (0, 0), (0, -2)];
        for (k, (re, im)) in want.iter().enumerate() {
            assert_eq!(h[(k, k)], GaussRat::from_ints(*re, *im));
        }
        assert_eq!(h.nnz(), 2);
        // E12 − E21: tensor square couples |00> with |01>,|10>
        let x = &sq2.exact_generators().unwrap()[0];
        assert_eq!(x[(0, 1)], GaussRat::from_ints(1, 0));
        assert_eq!(x[(0, 2)], GaussRat::from_ints(1, 0));
        assert_eq!(x[(1, 0)], GaussRat::from_ints(-1, 0));
        assert_eq!(x[(3, 1)], GaussRat::from_ints(-1, 0));
        assert_eq!(x.nnz(), 8);
    }
}
