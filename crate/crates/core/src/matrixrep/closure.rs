use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Backend, Generators, MatrixRep};
use crate::error::{Error, Result};
use crate::linalg::exact::nullspace;
use crate::linalg::field::{Arith, Rationals};
use crate::linalg::{GaussRat, Mat};

/// Real coordinates `(Re X, Im X)` of a complex matrix.
fn realify_exact(m: &Mat<GaussRat>) -> Vec<BigRational> {
    let mut v: Vec<BigRational> = m.data().iter().map(|x| x.re.clone()).collect();
    v.extend(m.data().iter().map(|x| x.im.clone()));
    v
}

fn realify_float(m: &Mat<Complex64>) -> Vec<f64> {
    let mut v: Vec<f64> = m.data().iter().map(|x| x.re).collect();
    v.extend(m.data().iter().map(|x| x.im));
    v
}

/// Incrementally maintained reduced row echelon form over `Q`.
#[derive(Default)]
struct RationalSpan {
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl RationalSpan {
    fn reduce(&self, mut v: Vec<BigRational>) -> Vec<BigRational> {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        v
    }

    fn insert(&mut self, v: Vec<BigRational>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Rationals.inv(&v[p]);
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    fn contains(&self, v: Vec<BigRational>) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }
}

/// Orthonormal basis maintained by Gram–Schmidt with reorthogonalization.
struct FloatSpan {
    q: Vec<Vec<f64>>,
    tol: f64,
}

impl FloatSpan {
    fn new(tol: f64) -> Self {
        FloatSpan { q: Vec::new(), tol }
    }

    /// Residual of `v` normalized by its own norm, and the residual vector.
    fn residual(&self, v: &[f64]) -> (f64, Vec<f64>) {
        let n0 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n0 == 0.0 {
            return (0.0, v.to_vec());
        }
        let mut w: Vec<f64> = v.iter().map(|x| x / n0).collect();
        for _ in 0..2 {
            for b in &self.q {
                let d: f64 = w.iter().zip(b).map(|(x, y)| x * y).sum();
                for (x, y) in w.iter_mut().zip(b) {
                    *x -= d * y;
                }
            }
        }
        (w.iter().map(|x| x * x).sum::<f64>().sqrt(), w)
    }

    fn insert(&mut self, v: &[f64]) -> bool {
        let (r, w) = self.residual(v);
        if r <= self.tol {
            return false;
        }
        self.q.push(w.iter().map(|x| x / r).collect());
        true
    }

    fn contains(&self, v: &[f64]) -> bool {
        self.residual(v).0 <= self.tol
    }
}

/// Basis and real dimension of the Lie algebra generated by a matrix set.
#[derive(Debug, Clone)]
pub struct ClosureResult {
    /// Real dimension.
    pub dim: usize,
    pub basis: Generators,
    pub backend: Backend,
    pub tolerance: Option<f64>,
}

impl ClosureResult {
    /// Whether every matrix of `r` lies in the real span of the closure.
    pub fn contains(&self, r: &MatrixRep) -> bool {
        match (&self.basis, r.generators()) {
            (Generators::Exact(b), Generators::Exact(g)) => {
                let mut span = RationalSpan::default();
                for m in b {
                    span.insert(realify_exact(m));
                }
                g.iter().all(|m| span.contains(realify_exact(m)))
            }
            _ => {
                let tol = self.tolerance.unwrap_or(super::DEFAULT_TOLERANCE);
                let mut span = FloatSpan::new(tol);
                for m in self.basis_float() {
                    span.insert(&realify_float(&m));
                }
                r.float_generators()
                    .iter()
                    .all(|m| span.contains(&realify_float(m)))
            }
        }
    }

    pub fn basis_float(&self) -> Vec<Mat<Complex64>> {
        match &self.basis {
            Generators::Exact(b) => b.iter().map(|m| m.to_c64()).collect(),
            Generators::Float(b) => b.clone(),
        }
    }
}

fn closure_exact(gens: &[Mat<GaussRat>]) -> Vec<Mat<GaussRat>> {
    let mut span = RationalSpan::default();
    let mut basis: Vec<Mat<GaussRat>> = Vec::new();
    for g in gens {
        if span.insert(realify_exact(g)) {
            basis.push(g.clone());
        }
    }
    let mut k = 0;
    while k < basis.len() {
        for j in 0..k {
            let c = basis[j].commutator(&basis[k]);
            if span.insert(realify_exact(&c)) {
                basis.push(c);
            }
        }
        k += 1;
    }
    basis
}

fn normalized(m: &Mat<Complex64>) -> Mat<Complex64> {
    let n = m.frobenius_norm();
    if n == 0.0 {
        m.clone()
    } else {
        m.scale(&Complex64::new(1.0 / n, 0.0))
    }
}

fn closure_float(gens: &[Mat<Complex64>], tol: f64) -> Vec<Mat<Complex64>> {
    let mut span = FloatSpan::new(tol);
    let mut basis: Vec<Mat<Complex64>> = Vec::new();
    for g in gens {
        if span.insert(&realify_float(g)) {
            basis.push(normalized(g));
        }
    }
    let mut k = 0;
    while k < basis.len() {
        for j in 0..k {
            let c = basis[j].commutator(&basis[k]);
            if span.insert(&realify_float(&c)) {
                basis.push(normalized(&c));
            }
        }
        k += 1;
    }
    basis
}

/// Real Lie algebra generated by the matrices of `r`, by repeated brackets.
pub fn lie_closure(r: &MatrixRep, backend: Backend, tol: f64) -> ClosureResult {
    match (backend, r.generators()) {
        (Backend::Exact, Generators::Exact(g)) => {
            let basis = closure_exact(g);
            ClosureResult {
                dim: basis.len(),
                basis: Generators::Exact(basis),
                backend,
                tolerance: None,
            }
        }
        _ => {
            let basis = closure_float(&r.float_generators(), tol);
            ClosureResult {
                dim: basis.len(),
                basis: Generators::Float(basis),
                backend: Backend::Float,
                tolerance: Some(tol),
            }
        }
    }
}

/// Center and derived algebra `[g, g]` of a closed matrix Lie algebra.
#[derive(Debug, Clone)]
pub struct ReductiveSplit {
    pub center: Generators,
    pub semisimple: Generators,
    pub center_dim: usize,
    pub semisimple_dim: usize,
}

fn split_exact(b: &[Mat<GaussRat>]) -> Result<ReductiveSplit> {
    let mut span = RationalSpan::default();
    for m in b {
        if !span.insert(realify_exact(m)) {
            return Err(Error::InvalidInput(
                "closure basis is linearly dependent".into(),
            ));
        }
    }
    let m = b.len();
    let mut derived = RationalSpan::default();
    let mut derived_basis = Vec::new();
    // brackets[k][j] = [b_k, b_j]
    let mut brackets: Vec<Vec<Vec<BigRational>>> = vec![Vec::with_capacity(m); m];
    for k in 0..m {
        for j in 0..m {
            let c = b[k].commutator(&b[j]);
            let v = realify_exact(&c);
            if !span.contains(v.clone()) {
                return Err(Error::NotClosed);
            }
            if j > k && derived.insert(v.clone()) {
                derived_basis.push(c);
            }
            brackets[k].push(v);
        }
    }
    let len = brackets
        .first()
        .and_then(|r| r.first())
        .map_or(0, |v| v.len());
    // Rows: for each j and coordinate t, Σ_k c_k [b_k, b_j]_t = 0.
    let mut rows = Vec::with_capacity(m * len);
    for j in 0..m {
        for t in 0..len {
            let row: Vec<BigRational> = (0..m).map(|k| brackets[k][j][t].clone()).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let kernel = nullspace(&Rationals, rows, m);
    let center: Vec<Mat<GaussRat>> = kernel
        .iter()
        .map(|c| {
            let mut acc = Mat::zeros(b[0].rows(), b[0].cols());
            for (ck, bk) in c.iter().zip(b) {
                if !ck.is_zero() {
                    acc = acc.add(&bk.scale(&GaussRat::new(ck.clone(), BigRational::zero())));
                }
            }
            acc
        })
        .collect();
    Ok(ReductiveSplit {
        center_dim: center.len(),
        semisimple_dim: derived_basis.len(),
        center: Generators::Exact(center),
        semisimple: Generators::Exact(derived_basis),
    })
}

fn split_float(b: &[Mat<Complex64>], tol: f64) -> Result<ReductiveSplit> {
    let b: Vec<Mat<Complex64>> = b.iter().map(normalized).collect();
    let mut span = FloatSpan::new(tol);
    for m in &b {
        span.insert(&realify_float(m));
    }
    let m = b.len();
    let mut derived = FloatSpan::new(tol);
    let mut derived_basis = Vec::new();
    let mut brackets: Vec<Vec<Vec<f64>>> = vec![Vec::with_capacity(m); m];
    for k in 0..m {
        for j in 0..m {
            let c = b[k].commutator(&b[j]);
            let v = realify_float(&c);
            if c.frobenius_norm() > tol && !span.contains(&v) {
                return Err(Error::NotClosed);
            }
            if j > k && c.frobenius_norm() > tol && derived.insert(&v) {
                derived_basis.push(normalized(&c));
            }
            brackets[k].push(v);
        }
    }
    let len = if m == 0 { 0 } else { brackets[0][0].len() };
    let a = DMatrix::<f64>::from_fn((m * len).max(1), m, |row, k| {
        if m * len == 0 {
            0.0
        } else {
            brackets[k][row / len][row % len]
        }
    });
    let center: Vec<Mat<Complex64>> = if m == 0 {
        Vec::new()
    } else {
        // Right singular vectors with negligible singular value.
        let ata = a.transpose() * &a;
        let eig = ata.symmetric_eigen();
        (0..m)
            .filter(|&i| eig.eigenvalues[i].abs().sqrt() <= tol.sqrt())
            .map(|i| {
                let mut acc = Mat::zeros(b[0].rows(), b[0].cols());
                for k in 0..m {
                    acc = acc.add(&b[k].scale(&Complex64::new(eig.eigenvectors[(k, i)], 0.0)));
                }
                acc
            })
            .collect()
    };
    Ok(ReductiveSplit {
        center_dim: center.len(),
        semisimple_dim: derived_basis.len(),
        center: Generators::Float(center),
        semisimple: Generators::Float(derived_basis),
    })
}

/// Split a closed matrix Lie algebra into its center and the span of its
/// brackets. Fails with [`Error::NotClosed`] if the basis is not closed.
pub fn split_reductive(closure: &ClosureResult) -> Result<ReductiveSplit> {
    match &closure.basis {
        Generators::Exact(b) => split_exact(b),
        Generators::Float(b) => {
            split_float(b, closure.tolerance.unwrap_or(super::DEFAULT_TOLERANCE))
        }
    }
}
