use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{Generators, MatrixRep};
use crate::error::{Error, Result};
use crate::linalg::exact::{crt, rational_reconstruct};
use crate::linalg::field::{Arith, ExactQi, ModP2};
use crate::linalg::float::{sylvester_kernel, FloatKernel};
use crate::linalg::sparse::{SparseEchelon, SparseRow};
use crate::linalg::{GaussRat, Mat};
use crate::par::{self, Execution};

/// Primes `p ≡ 3 (mod 4)` just below `2^62`.
const PRIMES: [u64; 8] = [
    4611686018427387847,
    4611686018427387787,
    4611686018427387751,
    4611686018427387631,
    4611686018427387587,
    4611686018427387323,
    4611686018427387271,
    4611686018427387139,
];

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Float results with a smaller singular-value gap ratio are indeterminate.
pub const GAP_THRESHOLD: f64 = 1e3;

/// Largest matrix size for which the exact backend is the default.
const EXACT_DEFAULT_MAX_DIM: usize = 36;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl std::str::FromStr for Backend {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "exact" => Ok(Backend::Exact),
            "float" => Ok(Backend::Float),
            _ => Err(Error::InvalidInput(format!("unknown backend `{s}`"))),
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        })
    }
}

impl Backend {
    /// Default for a problem on `dim×dim` matrices. `LIESQ_BACKEND` overrides.
    pub fn default_for(dim: usize) -> Backend {
        if let Ok(v) = std::env::var("LIESQ_BACKEND") {
            if let Ok(b) = v.parse() {
                return b;
            }
        }
        if dim <= EXACT_DEFAULT_MAX_DIM {
            Backend::Exact
        } else {
            Backend::Float
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CommutantOptions {
    /// `None` picks [`Backend::default_for`], or float for float input.
    pub backend: Option<Backend>,
    pub tolerance: f64,
    pub exec: Execution,
}

impl Default for CommutantOptions {
    fn default() -> Self {
        CommutantOptions {
            backend: None,
            tolerance: DEFAULT_TOLERANCE,
            exec: Execution::default(),
        }
    }
}

impl CommutantOptions {
    pub fn exact() -> Self {
        CommutantOptions {
            backend: Some(Backend::Exact),
            ..Default::default()
        }
    }
    pub fn float() -> Self {
        CommutantOptions {
            backend: Some(Backend::Float),
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ExactMethod {
    /// Kernel computed modulo primes, lifted to `Q(i)` and verified exactly.
    Modular { primes: usize },
    /// Elimination directly over `Q(i)`.
    Rational,
}

#[derive(Debug, Clone)]
pub struct ExactCommutant {
    pub dim: usize,
    pub basis: Vec<Mat<GaussRat>>,
    pub method: ExactMethod,
    /// Kernel dimension after each generator.
    pub steps: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommutantResult {
    /// Complex dimension; `None` when the float backend could not separate
    /// the spectrum.
    pub dim: Option<usize>,
    /// Dimension the float backend would report at the given tolerance.
    pub estimate: usize,
    pub backend: Backend,
    pub tolerance: Option<f64>,
    pub gap: Option<f64>,
    pub method: Option<ExactMethod>,
    pub steps: Vec<usize>,
}

impl CommutantResult {
    pub fn is_determinate(&self) -> bool {
        self.dim.is_some()
    }
}

/// Sylvester rows `vec(MX − XM)` for an `n×n` matrix given by its nonzeros.
fn sylvester_rows<A: Arith>(
    ar: &A,
    n: usize,
    m: &[Vec<(usize, A::E)>],
    mt: &[Vec<(usize, A::E)>],
) -> Vec<SparseRow<A::E>> {
    let mut rows = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let mut row: Vec<(usize, A::E)> = Vec::new();
            // (MX)_{rc} = Σ_k M_rk X_kc
            for (k, v) in &m[r] {
                row.push((k * n + c, v.clone()));
            }
            // (XM)_{rc} = Σ_k X_rk M_kc
            for (k, v) in &mt[c] {
                row.push((r * n + k, ar.neg(v)));
            }
            row.sort_by_key(|x| x.0);
            let mut merged: Vec<(usize, A::E)> = Vec::with_capacity(row.len());
            for (col, v) in row {
                match merged.last_mut() {
                    Some(last) if last.0 == col => last.1 = ar.add(&last.1, &v),
                    _ => merged.push((col, v)),
                }
            }
            merged.retain(|(_, v)| !ar.is_zero(v));
            if !merged.is_empty() {
                rows.push(merged);
            }
        }
    }
    rows
}

/// Row-wise and column-wise nonzeros of a matrix after mapping entries.
fn nonzeros<A: Arith>(
    ar: &A,
    m: &Mat<GaussRat>,
    f: impl Fn(&GaussRat) -> A::E,
) -> (Vec<Vec<(usize, A::E)>>, Vec<Vec<(usize, A::E)>>) {
    let n = m.rows();
    let mut rows = vec![Vec::new(); n];
    let mut cols = vec![Vec::new(); n];
    for r in 0..n {
        for c in 0..n {
            if m[(r, c)].is_zero() {
                continue;
            }
            let v = f(&m[(r, c)]);
            if !ar.is_zero(&v) {
                rows[r].push((c, v.clone()));
                cols[c].push((r, v));
            }
        }
    }
    (rows, cols)
}

/// Scale a matrix to Gaussian-integer entries (the kernel is unchanged).
fn integerize(m: &Mat<GaussRat>) -> Mat<GaussRat> {
    let mut l = BigInt::one();
    for x in m.data() {
        l = num_integer::Integer::lcm(&l, &x.denom_lcm());
    }
    if l.is_one() {
        return m.clone();
    }
    m.scale(&GaussRat::new(
        BigRational::from_integer(l),
        BigRational::zero(),
    ))
}

fn echelon_run<'a, A: Arith>(
    ar: &'a A,
    n: usize,
    gens: &[Mat<GaussRat>],
    f: impl Fn(&GaussRat) -> A::E + Copy,
) -> (SparseEchelon<'a, A>, Vec<usize>) {
    let mut ech = SparseEchelon::new(ar, n * n);
    let mut steps = Vec::with_capacity(gens.len());
    for g in gens {
        let (m, mt) = nonzeros(ar, g, f);
        for row in sylvester_rows(ar, n, &m, &mt) {
            ech.insert(row);
        }
        steps.push(ech.nullity());
    }
    (ech, steps)
}

fn verify(gens: &[Mat<GaussRat>], basis: &[Mat<GaussRat>], exec: Execution) -> bool {
    par::map(exec, basis, |x| {
        gens.iter()
            .all(|a| a.mul(x).sub(&x.mul(a)).is_zero_within(0.0))
    })
    .into_iter()
    .all(|ok| ok)
}

fn to_matrices(n: usize, vecs: Vec<Vec<GaussRat>>) -> Vec<Mat<GaussRat>> {
    vecs.into_iter()
        .map(|v| Mat::from_fn(n, n, |r, c| v[r * n + c].clone()))
        .collect()
}

/// Exact commutant `{X : [A, X] = 0 for every generator A}` with a basis.
///
/// The kernel is computed modulo a large prime in `F_p(i)`, one generator's
/// constraints at a time. Its reduced basis is lifted to `Q(i)` by rational
/// reconstruction (combining primes by CRT when needed) and checked exactly.
/// A verified lift certifies the dimension, since reduction modulo `p` can
/// only enlarge the kernel. If no lift verifies, the elimination is redone
/// over `Q(i)`.
pub fn exact_commutant(gens: &[Mat<GaussRat>], exec: Execution) -> Result<ExactCommutant> {
    let n = super::check_square(gens)?;
    let ints: Vec<Mat<GaussRat>> = gens.iter().map(integerize).collect();
    // Accumulated residues for the current free-column pattern.
    let mut acc: Option<(Vec<usize>, BigInt, Vec<Vec<[BigInt; 2]>>)> = None;
    for (used, &p) in PRIMES.iter().enumerate() {
        let ar = ModP2::new(p);
        let (ech, steps) = echelon_run(&ar, n, &ints, |x| {
            [ar.reduce(x.re.numer()), ar.reduce(x.im.numer())]
        });
        let free = ech.free_columns();
        let kernel = ech.kernel(exec);
        let pb = BigInt::from(p);
        let residues: Vec<Vec<[BigInt; 2]>> = kernel
            .iter()
            .map(|v| {
                v.iter()
                    .map(|e| [BigInt::from(e[0]), BigInt::from(e[1])])
                    .collect()
            })
            .collect();
        acc = match acc.take() {
            Some((f0, m0, r0)) if f0 == free => {
                let combined = r0
                    .iter()
                    .zip(&residues)
                    .map(|(a, b)| {
                        a.iter()
                            .zip(b)
                            .map(|(x, y)| {
                                [crt(&x[0], &m0, &y[0], &pb).0, crt(&x[1], &m0, &y[1], &pb).0]
                            })
                            .collect()
                    })
                    .collect();
                Some((free, &m0 * &pb, combined))
            }
            _ => Some((free, pb, residues)),
        };
        let (_, modulus, res) = acc.as_ref().unwrap();
        let lifted: Option<Vec<Vec<GaussRat>>> = res
            .iter()
            .map(|v| {
                v.iter()
                    .map(|e| {
                        Some(GaussRat::new(
                            rational_reconstruct(&e[0], modulus)?,
                            rational_reconstruct(&e[1], modulus)?,
                        ))
                    })
                    .collect()
            })
            .collect();
        if let Some(vecs) = lifted {
            let basis = to_matrices(n, vecs);
            if verify(gens, &basis, exec) {
                return Ok(ExactCommutant {
                    dim: basis.len(),
                    basis,
                    method: ExactMethod::Modular { primes: used + 1 },
                    steps,
                });
            }
        }
    }
    let ar = ExactQi;
    let (ech, steps) = echelon_run(&ar, n, &ints, |x| x.clone());
    let basis = to_matrices(n, ech.kernel(exec));
    Ok(ExactCommutant {
        dim: basis.len(),
        basis,
        method: ExactMethod::Rational,
        steps,
    })
}

fn float_result(k: &FloatKernel, tol: f64) -> CommutantResult {
    let determinate = k.gap >= GAP_THRESHOLD;
    CommutantResult {
        dim: determinate.then_some(k.dim()),
        estimate: k.dim(),
        backend: Backend::Float,
        tolerance: Some(tol),
        gap: Some(k.gap),
        method: None,
        steps: k.steps.clone(),
    }
}

/// A commutant computation with its basis, for callers that need one.
pub enum Commutant {
    Exact(ExactCommutant),
    Float(FloatKernel, CommutantResult),
}

impl Commutant {
    pub fn result(&self) -> CommutantResult {
        match self {
            Commutant::Exact(e) => CommutantResult {
                dim: Some(e.dim),
                estimate: e.dim,
                backend: Backend::Exact,
                tolerance: None,
                gap: None,
                method: Some(e.method.clone()),
                steps: e.steps.clone(),
            },
            Commutant::Float(_, r) => r.clone(),
        }
    }

    pub fn float_basis(&self, n: usize) -> Vec<Mat<Complex64>> {
        match self {
            Commutant::Exact(e) => e.basis.iter().map(|m| m.to_c64()).collect(),
            Commutant::Float(k, _) => k.matrices(n),
        }
    }
}

/// Commutant of the matrices of `r` with the chosen backend.
pub fn commutant(r: &MatrixRep, opts: &CommutantOptions) -> Result<Commutant> {
    let backend = match opts.backend {
        Some(b) => b,
        None if !r.is_exact() => Backend::Float,
        None => Backend::default_for(r.dim()),
    };
    match (backend, r.generators()) {
        (Backend::Exact, Generators::Exact(g)) => {
            Ok(Commutant::Exact(exact_commutant(g, opts.exec)?))
        }
        (Backend::Exact, Generators::Float(_)) => Err(Error::InvalidInput(
            "exact backend needs gaussian-rational input".into(),
        )),
        (Backend::Float, _) => {
            let k = sylvester_kernel(&r.float_generators(), opts.tolerance);
            let res = float_result(&k, opts.tolerance);
            Ok(Commutant::Float(k, res))
        }
    }
}

/// Dimension of the commutant of the generator matrices.
pub fn commutant_dimension(r: &MatrixRep, opts: &CommutantOptions) -> Result<CommutantResult> {
    Ok(commutant(r, opts)?.result())
}

fn is_unitary_exact(u: &Mat<GaussRat>) -> bool {
    u.mul(&u.adjoint()) == Mat::identity(u.rows())
}

/// Commutant of `{U⊗U}` for a list of unitaries.
pub fn group_commutant(us: &[Mat<GaussRat>], opts: &CommutantOptions) -> Result<Commutant> {
    super::check_square(us)?;
    if let Some(i) = us.iter().position(|u| !is_unitary_exact(u)) {
        return Err(Error::Precondition(format!("matrix {i} is not unitary")));
    }
    let r = MatrixRep::exact(super::group_tensor_square(us))?;
    commutant(&r, opts)
}

pub fn commutant_dimension_group(
    us: &[Mat<GaussRat>],
    opts: &CommutantOptions,
) -> Result<CommutantResult> {
    Ok(group_commutant(us, opts)?.result())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::exact::nullspace;
    use crate::matrixrep::{standard_generators, tensor_square, ClassicalFamily};

    fn g(re: i64, im: i64) -> GaussRat {
        GaussRat::from_ints(re, im)
    }

    /// Independent oracle: dense elimination of the stacked Sylvester matrix.
    fn dense_dim(gens: &[Mat<GaussRat>]) -> usize {
        let n = gens[0].rows();
        let mut rows = Vec::new();
        for a in gens {
            for r in 0..n {
                for c in 0..n {
                    let mut row = vec![GaussRat::zero(); n * n];
                    for k in 0..n {
                        row[k * n + c] = row[k * n + c].clone() + a[(r, k)].clone();
                        row[r * n + k] = row[r * n + k].clone() - a[(k, c)].clone();
                    }
                    rows.push(row);
                }
            }
        }
        nullspace(&ExactQi, rows, n * n).len()
    }

    #[test]
    fn su2_tensor_square() {
        let r = tensor_square(&standard_generators(ClassicalFamily::Su, 2).unwrap());
        let c = exact_commutant(r.exact_generators().unwrap(), Execution::Sequential).unwrap();
        assert_eq!(c.dim, 2);
        assert_eq!(c.method, ExactMethod::Modular { primes: 1 });
        assert_eq!(dense_dim(r.exact_generators().unwrap()), 2);
    }

    #[test]
    fn modular_matches_dense_oracle() {
        let cases: Vec<Vec<Mat<GaussRat>>> = vec![
            vec![Mat::diag(vec![g(1, 0), g(1, 0), g(-2, 0)])],
            vec![Mat::from_rows(vec![vec![g(1, 1), g(2, 0)], vec![g(0, 0), g(1, 1)]]).unwrap()],
            tensor_square(&standard_generators(ClassicalFamily::So, 3).unwrap())
                .exact_generators()
                .unwrap()
                .to_vec(),
            standard_generators(ClassicalFamily::Sp, 2)
                .unwrap()
                .exact_generators()
                .unwrap()[..3]
                .to_vec(),
        ];
        for gens in cases {
            let c = exact_commutant(&gens, Execution::Sequential).unwrap();
            assert_eq!(c.dim, dense_dim(&gens));
            for x in &c.basis {
                for a in &gens {
                    assert_eq!(a.mul(x), x.mul(a));
                }
            }
        }
    }

    #[test]
    fn rational_entries_need_reconstruction() {
        // The reduced kernel of this matrix has entries 1/3 and −2/7 + i/5.
        let a = Mat::from_rows(vec![
            vec![g(0, 0), g(3, 0), g(0, 0)],
            vec![g(0, 0), g(0, 0), g(0, 0)],
            vec![g(0, 0), g(0, 0), g(0, 0)],
        ])
        .unwrap();
        let b = Mat::from_rows(vec![
            vec![g(1, 0), g(0, 0), g(0, 0)],
            vec![g(0, 0), g(1, 0), g(0, 0)],
            vec![GaussRat::from_fracs(-2, 7, 1, 5).unwrap(), g(0, 0), g(2, 0)],
        ])
        .unwrap();
        let gens = vec![a, b];
        let c = exact_commutant(&gens, Execution::Sequential).unwrap();
        assert_eq!(c.dim, dense_dim(&gens));
    }

    #[test]
    fn float_agrees() {
        let r = tensor_square(&standard_generators(ClassicalFamily::Sp, 2).unwrap());
        let f = commutant_dimension(&r, &CommutantOptions::float()).unwrap();
        assert_eq!(f.dim, Some(3));
        assert!(f.gap.unwrap() > GAP_THRESHOLD);
        let e = commutant_dimension(&r, &CommutantOptions::exact()).unwrap();
        assert_eq!(e.dim, Some(3));
    }

    #[test]
    fn group_cases() {
        let opts = CommutantOptions::exact();
        assert_eq!(
            commutant_dimension_group(&[Mat::identity(2)], &opts)
                .unwrap()
                .dim,
            Some(16)
        );
        let z = Mat::diag(vec![g(0, 1), g(0, -1)]);
        // diag(i,−i)⊗diag(i,−i) = diag(−1,1,1,−1): two eigenspaces of size 2
        assert_eq!(
            commutant_dimension_group(&[Mat::identity(2), z.clone()], &opts)
                .unwrap()
                .dim,
            Some(8)
        );
        let sq = crate::matrixrep::group_tensor_square(&[Mat::identity(2), z]);
        assert_eq!(dense_dim(&sq), 8);
        let bad = Mat::diag(vec![g(2, 0), g(1, 0)]);
        assert!(commutant_dimension_group(&[bad], &opts).is_err());
    }
}
