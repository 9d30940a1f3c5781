use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use super::commutant::{commutant, Commutant, CommutantOptions};
use super::{dual_rep, tensor_product, Backend, MatrixRep, DEFAULT_TOLERANCE, GAP_THRESHOLD};
use crate::error::{Error, Result};
use crate::linalg::exact::rank;
use crate::linalg::field::ExactQi;
use crate::linalg::float::{hermitian_eigen, to_na};
use crate::linalg::{GaussRat, Mat};

/// Range of the integer coefficients of the random commutant element.
const COEFF_BOUND: i64 = 1000;

pub const DEFAULT_SEED: u64 = 20250101;

#[derive(Debug, Clone, Copy)]
pub struct ProfileOptions {
    pub seed: u64,
    pub tolerance: f64,
    pub commutant: CommutantOptions,
}

impl Default for ProfileOptions {
    fn default() -> Self {
        ProfileOptions {
            seed: DEFAULT_SEED,
            tolerance: DEFAULT_TOLERANCE,
            commutant: CommutantOptions::default(),
        }
    }
}

/// Irreducible block structure `⊕ 1_{m_i} ⊗ φ_i` read off a random
/// Hermitian element of the commutant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsotypicProfile {
    /// `(irrep dimension, multiplicity)`, largest dimension first. Empty when
    /// indeterminate.
    pub blocks: Vec<(usize, usize)>,
    pub dim: usize,
    pub commutant_dim: Option<usize>,
    pub one_norm: Option<usize>,
    pub backend: Backend,
    pub tolerance: f64,
    pub seed: u64,
    /// Reason the eigenvalue clustering was rejected, if it was.
    pub indeterminate: Option<String>,
}

impl IsotypicProfile {
    pub fn is_determinate(&self) -> bool {
        self.indeterminate.is_none()
    }
}

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut y = x;
    while p[y] != r {
        let next = p[y];
        p[y] = r;
        y = next;
    }
    r
}

/// Random Hermitian `X + X†` for `X` a random complex combination of the basis.
fn random_hermitian_exact(basis: &[Mat<GaussRat>], rng: &mut ChaCha8Rng) -> Mat<GaussRat> {
    let n = basis[0].rows();
    let mut x = Mat::zeros(n, n);
    for b in basis {
        let c = GaussRat::from_ints(
            rng.random_range(-COEFF_BOUND..=COEFF_BOUND),
            rng.random_range(-COEFF_BOUND..=COEFF_BOUND),
        );
        x = x.add(&b.scale(&c));
    }
    x.add(&x.adjoint())
}

fn random_hermitian_float(basis: &[Mat<Complex64>], rng: &mut ChaCha8Rng) -> Mat<Complex64> {
    let n = basis[0].rows();
    let mut x = Mat::zeros(n, n);
    for b in basis {
        let c = Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
        x = x.add(&b.scale(&c));
    }
    x.add(&x.adjoint())
}

/// Group sorted eigenvalues into clusters; errs when the split is ambiguous.
fn clusters(vals: &[f64], tol: f64) -> std::result::Result<Vec<std::ops::Range<usize>>, String> {
    let scale = vals.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let eps = tol * scale;
    let mut out = Vec::new();
    let mut start = 0;
    let mut spread: f64 = 0.0;
    let mut gap = f64::INFINITY;
    for i in 1..=vals.len() {
        if i == vals.len() || vals[i] - vals[i - 1] > eps {
            spread = spread.max(vals[i - 1] - vals[start]);
            if i < vals.len() {
                gap = gap.min(vals[i] - vals[i - 1]);
            }
            out.push(start..i);
            start = i;
        }
    }
    if gap < GAP_THRESHOLD * eps.max(spread) {
        return Err(format!(
            "eigenvalue gap {gap:.3e} too close to cluster width {:.3e}",
            eps.max(spread)
        ));
    }
    Ok(out)
}

/// Isotypic block structure of `r`.
pub fn isotypic_profile(r: &MatrixRep, opts: &ProfileOptions) -> Result<IsotypicProfile> {
    let com = commutant(r, &opts.commutant)?;
    let res = com.result();
    let n = r.dim();
    let mut out = IsotypicProfile {
        blocks: Vec::new(),
        dim: n,
        commutant_dim: res.dim,
        one_norm: None,
        backend: res.backend,
        tolerance: opts.tolerance,
        seed: opts.seed,
        indeterminate: None,
    };
    let Some(cdim) = res.dim else {
        out.indeterminate = Some("commutant dimension is indeterminate".into());
        return Ok(out);
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let basis = com.float_basis(n);
    let h = match &com {
        Commutant::Exact(e) => {
            let h = random_hermitian_exact(&e.basis, &mut rng);
            let gens = r
                .exact_generators()
                .expect("exact backend has exact generators");
            if gens.iter().any(|a| a.mul(&h) != h.mul(a)) {
                out.indeterminate = Some("commutant is not closed under adjoint".into());
                return Ok(out);
            }
            h.to_c64()
        }
        Commutant::Float(..) => {
            let h = random_hermitian_float(&basis, &mut rng);
            let hn = h.frobenius_norm().max(1.0);
            if r.float_generators().iter().any(|a| {
                a.mul(&h).sub(&h.mul(a)).frobenius_norm()
                    > opts.tolerance.sqrt() * hn * a.frobenius_norm().max(1.0)
            }) {
                out.indeterminate = Some("commutant is not closed under adjoint".into());
                return Ok(out);
            }
            h
        }
    };
    let (vals, vecs) = hermitian_eigen(&h);
    let cl = match clusters(&vals, opts.tolerance) {
        Ok(c) => c,
        Err(msg) => {
            out.indeterminate = Some(msg);
            return Ok(out);
        }
    };
    let spaces: Vec<DMatrix<Complex64>> = cl
        .iter()
        .map(|rg| vecs.columns(rg.start, rg.len()).into_owned())
        .collect();
    let mut parent: Vec<usize> = (0..cl.len()).collect();
    let link_tol = opts.tolerance.sqrt();
    for b in &basis {
        let bn = b.frobenius_norm();
        if bn == 0.0 {
            continue;
        }
        let bm = to_na(b) / Complex64::new(bn, 0.0);
        let images: Vec<DMatrix<Complex64>> = spaces.iter().map(|e| &bm * e).collect();
        for (ei, img) in images.iter().enumerate() {
            for (fi, f) in spaces.iter().enumerate() {
                if fi != ei && (f.adjoint() * img).norm() > link_tol {
                    let (a, c) = (find(&mut parent, ei), find(&mut parent, fi));
                    parent[a] = c;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..cl.len() {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(cl[i].len());
    }
    let mut blocks = Vec::new();
    for sizes in groups.values() {
        if sizes.iter().any(|&s| s != sizes[0]) {
            out.indeterminate = Some(format!(
                "isotypic component with unequal cluster sizes {sizes:?}"
            ));
            return Ok(out);
        }
        blocks.push((sizes[0], sizes.len()));
    }
    blocks.sort_by(|a, b| b.cmp(a));
    let sum_sq: usize = blocks.iter().map(|(_, m)| m * m).sum();
    let sum_dm: usize = blocks.iter().map(|(d, m)| d * m).sum();
    if sum_sq != cdim || sum_dm != n {
        out.indeterminate = Some(format!(
            "blocks {blocks:?} give Σm²={sum_sq}, Σdm={sum_dm}; expected {cdim}, {n}"
        ));
        return Ok(out);
    }
    out.one_norm = Some(blocks.iter().map(|(_, m)| m).sum());
    out.blocks = blocks;
    Ok(out)
}

/// Outcome of comparing `com(φ⊗ψ)` with the partial transpose of `com(φ⊗ψ̄)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PtCheck {
    pub holds: bool,
    pub dim_direct: Option<usize>,
    pub dim_transposed: Option<usize>,
    pub rank_union: Option<usize>,
}

/// `X'_{(a,b),(c,d)} = X_{(a,d),(c,b)}` with the second factor of size `q`.
pub fn partial_transpose<S: crate::linalg::Scalar>(x: &Mat<S>, p: usize, q: usize) -> Mat<S> {
    Mat::from_fn(p * q, p * q, |i, j| {
        let (a, b) = (i / q, i % q);
        let (c, d) = (j / q, j % q);
        x[(a * q + d, c * q + b)].clone()
    })
}

fn float_rank(vecs: &[Vec<Complex64>], tol: f64) -> usize {
    if vecs.is_empty() {
        return 0;
    }
    let m = DMatrix::from_fn(vecs[0].len(), vecs.len(), |r, c| vecs[c][r]);
    let sv = m.singular_values();
    let top = sv.iter().cloned().fold(0.0, f64::max);
    sv.iter()
        .filter(|&&s| s > tol.sqrt() * top.max(1.0))
        .count()
}

/// Check `com(φ⊗ψ) = (1⊗τ)[com(φ⊗ψ̄)]`, with generators of the two
/// representations paired by position.
pub fn partial_transpose_check(
    phi: &MatrixRep,
    psi: &MatrixRep,
    opts: &CommutantOptions,
) -> Result<PtCheck> {
    if phi.len() != psi.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} generators against {}",
            phi.len(),
            psi.len()
        )));
    }
    let (p, q) = (phi.dim(), psi.dim());
    let direct = commutant(&tensor_product(phi, psi)?, opts)?;
    let mixed = commutant(&tensor_product(phi, &dual_rep(psi))?, opts)?;
    let (dd, dm) = (direct.result().dim, mixed.result().dim);
    let mut out = PtCheck {
        holds: false,
        dim_direct: dd,
        dim_transposed: dm,
        rank_union: None,
    };
    let (Some(dd), Some(dm)) = (dd, dm) else {
        return Ok(out);
    };
    let rank_union = match (&direct, &mixed) {
        (Commutant::Exact(a), Commutant::Exact(b)) => {
            let rows: Vec<Vec<GaussRat>> = a
                .basis
                .iter()
                .cloned()
                .chain(b.basis.iter().map(|x| partial_transpose(x, p, q)))
                .map(|m| m.data().to_vec())
                .collect();
            rank(&ExactQi, rows, p * p * q * q)
        }
        _ => {
            let vecs: Vec<Vec<Complex64>> = direct
                .float_basis(p * q)
                .into_iter()
                .chain(
                    mixed
                        .float_basis(p * q)
                        .iter()
                        .map(|x| partial_transpose(x, p, q)),
                )
                .map(|m| m.data().to_vec())
                .collect();
            float_rank(&vecs, opts.tolerance)
        }
    };
    out.rank_union = Some(rank_union);
    out.holds = dd == dm && rank_union == dd;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrixrep::{standard_generators, tensor_square, ClassicalFamily};

    fn profile(r: &MatrixRep, opts: CommutantOptions) -> IsotypicProfile {
        isotypic_profile(
            r,
            &ProfileOptions {
                commutant: opts,
                ..Default::default()
            },
        )
        .unwrap()
    }

    #[test]
    fn tensor_square_profiles() {
        for opts in [CommutantOptions::exact(), CommutantOptions::float()] {
            let su2 = tensor_square(&standard_generators(ClassicalFamily::Su, 2).unwrap());
            assert_eq!(profile(&su2, opts).blocks, vec![(3, 1), (1, 1)]);
            let so5 = tensor_square(&standard_generators(ClassicalFamily::So, 5).unwrap());
            assert_eq!(profile(&so5, opts).blocks, vec![(14, 1), (10, 1), (1, 1)]);
        }
    }

    #[test]
    fn multiplicities_show_up() {
        // Eigenvalue i twice, −i and 0 once: commutant M_2 ⊕ M_1 ⊕ M_1.
        let g = |re, im| GaussRat::from_ints(re, im);
        let a = Mat::diag(vec![g(0, 1), g(0, 1), g(0, -1), g(0, 0)]);
        let r = MatrixRep::exact(vec![a]).unwrap();
        let p = profile(&r, CommutantOptions::exact());
        assert_eq!(p.blocks, vec![(1, 2), (1, 1), (1, 1)]);
        assert_eq!(p.commutant_dim, Some(6));
        assert_eq!(p.one_norm, Some(4));
    }

    #[test]
    fn trivial_rep() {
        let r = MatrixRep::exact(vec![Mat::zeros(1, 1)]).unwrap();
        assert_eq!(profile(&r, CommutantOptions::exact()).blocks, vec![(1, 1)]);
    }

    #[test]
    fn partial_transpose_identity() {
        for (f, n) in [
            (ClassicalFamily::Su, 2),
            (ClassicalFamily::So, 5),
            (ClassicalFamily::Su, 1),
        ] {
            let r = if n == 1 {
                MatrixRep::exact(vec![Mat::diag(vec![GaussRat::from_ints(0, 1)])]).unwrap()
            } else {
                standard_generators(f, n).unwrap()
            };
            let c = partial_transpose_check(&r, &r, &CommutantOptions::exact()).unwrap();
            assert!(c.holds, "{f}{n}: {c:?}");
        }
    }
}
