use nalgebra::DMatrix;
use num_complex::Complex64;

use super::Mat;

pub fn to_na(m: &Mat<Complex64>) -> DMatrix<Complex64> {
    DMatrix::from_row_slice(m.rows(), m.cols(), m.data())
}

pub fn from_na(m: &DMatrix<Complex64>) -> Mat<Complex64> {
    Mat::from_fn(m.nrows(), m.ncols(), |r, c| m[(r, c)])
}

/// Result of a floating-point nullspace computation.
#[derive(Debug, Clone)]
pub struct FloatKernel {
    /// Orthonormal basis, one column per kernel vector (row-major `vec(X)`).
    pub basis: DMatrix<Complex64>,
    /// Smallest ratio, over all steps, between the smallest singular value
    /// kept as nonzero and the largest one counted as zero.
    pub gap: f64,
    /// Kernel dimension after each generator.
    pub steps: Vec<usize>,
}

impl FloatKernel {
    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn matrices(&self, n: usize) -> Vec<Mat<Complex64>> {
        (0..self.dim())
            .map(|j| Mat::from_fn(n, n, |r, c| self.basis[(r * n + c, j)]))
            .collect()
    }
}

/// Split singular values at `tol`; returns (indices counted as zero, gap ratio).
fn split_spectrum(sv: &[f64], tol: f64) -> (Vec<usize>, f64) {
    let zero: Vec<usize> = (0..sv.len()).filter(|&i| sv[i] <= tol).collect();
    let max_zero = zero.iter().map(|&i| sv[i]).fold(0.0f64, f64::max);
    let min_nonzero = (0..sv.len())
        .filter(|&i| sv[i] > tol)
        .map(|i| sv[i])
        .fold(f64::INFINITY, f64::min);
    let gap = if zero.is_empty() || min_nonzero.is_infinite() {
        f64::INFINITY
    } else {
        min_nonzero / max_zero.max(f64::MIN_POSITIVE)
    };
    (zero, gap)
}

/// Null vectors of `b` (as columns) together with the gap ratio.
fn svd_null(b: DMatrix<Complex64>, tol: f64) -> (DMatrix<Complex64>, f64) {
    let k = b.ncols();
    // Pad short matrices so that V is square.
    let b = if b.nrows() < k {
        let mut p = DMatrix::zeros(k, k);
        p.view_mut((0, 0), (b.nrows(), k)).copy_from(&b);
        p
    } else {
        b
    };
    let svd = b.svd(false, true);
    let vt = svd.v_t.expect("v_t requested");
    let sv: Vec<f64> = svd.singular_values.iter().copied().collect();
    let (zero, gap) = split_spectrum(&sv, tol);
    let mut out = DMatrix::zeros(k, zero.len());
    for (j, &i) in zero.iter().enumerate() {
        for r in 0..k {
            out[(r, j)] = vt[(i, r)].conj();
        }
    }
    (out, gap)
}

fn sylvester_apply(m: &DMatrix<Complex64>, x: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    m * x - x * m
}

/// Unknowns of `X ↦ MX − XM` grouped into independent blocks.
fn sylvester_blocks(m: &Mat<Complex64>) -> Vec<Vec<usize>> {
    let n = m.rows();
    let mut parent: Vec<usize> = (0..n * n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for r in 0..n {
        for k in 0..n {
            if m[(r, k)].norm() == 0.0 {
                continue;
            }
            // M[r][k] couples (r,c)~(k,c) and (c,r)~(c,k)
            for c in 0..n {
                let (a, b) = (find(&mut parent, r * n + c), find(&mut parent, k * n + c));
                parent[a] = b;
                let (a, b) = (find(&mut parent, c * n + r), find(&mut parent, c * n + k));
                parent[a] = b;
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for u in 0..n * n {
        let r = find(&mut parent, u);
        groups.entry(r).or_default().push(u);
    }
    groups.into_values().collect()
}

/// Kernel of the stacked Sylvester operators of `gens`, one generator at a
/// time. Generators are normalized to unit Frobenius norm first.
pub fn sylvester_kernel(gens: &[Mat<Complex64>], tol: f64) -> FloatKernel {
    let n = gens[0].rows();
    let nn = n * n;
    let mut gap = f64::INFINITY;
    let mut steps = Vec::new();
    let normalized: Vec<Mat<Complex64>> = gens
        .iter()
        .filter(|g| g.frobenius_norm() > 0.0)
        .map(|g| g.scale(&Complex64::new(1.0 / g.frobenius_norm(), 0.0)))
        .collect();
    if normalized.is_empty() {
        return FloatKernel {
            basis: DMatrix::identity(nn, nn),
            gap,
            steps: vec![nn; gens.len()],
        };
    }
    // First generator: solve block by block.
    let first = &normalized[0];
    let mut cols: Vec<Vec<(usize, Complex64)>> = Vec::new();
    for block in sylvester_blocks(first) {
        let pos: std::collections::HashMap<usize, usize> =
            block.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        let b = block.len();
        let mut op = DMatrix::<Complex64>::zeros(b, b);
        for (i, &u) in block.iter().enumerate() {
            let (r, c) = (u / n, u % n);
            for k in 0..n {
                let v = first[(r, k)];
                if v.norm() != 0.0 {
                    op[(i, pos[&(k * n + c)])] += v;
                }
                let w = first[(k, c)];
                if w.norm() != 0.0 {
                    op[(i, pos[&(r * n + k)])] -= w;
                }
            }
        }
        let (null, g) = svd_null(op, tol);
        gap = gap.min(g);
        for j in 0..null.ncols() {
            cols.push((0..b).map(|i| (block[i], null[(i, j)])).collect());
        }
    }
    let mut kmat = DMatrix::<Complex64>::zeros(nn, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for &(u, v) in col {
            kmat[(u, j)] = v;
        }
    }
    steps.push(kmat.ncols());
    for g in &normalized[1..] {
        if kmat.ncols() == 0 {
            steps.push(0);
            continue;
        }
        let m = to_na(g);
        let mut b = DMatrix::<Complex64>::zeros(nn, kmat.ncols());
        for j in 0..kmat.ncols() {
            let x = DMatrix::from_fn(n, n, |r, c| kmat[(r * n + c, j)]);
            let y = sylvester_apply(&m, &x);
            for r in 0..n {
                for c in 0..n {
                    b[(r * n + c, j)] = y[(r, c)];
                }
            }
        }
        let (null, gg) = svd_null(b, tol);
        gap = gap.min(gg);
        kmat = &kmat * null;
        steps.push(kmat.ncols());
    }
    // Re-orthonormalize to clean up accumulated error.
    if kmat.ncols() > 0 {
        kmat = kmat.qr().q();
    }
    while steps.len() < gens.len() {
        steps.push(kmat.ncols());
    }
    FloatKernel {
        basis: kmat,
        gap,
        steps,
    }
}

/// Eigenvalues (ascending) and eigenvectors (columns) of a Hermitian matrix.
pub fn hermitian_eigen(h: &Mat<Complex64>) -> (Vec<f64>, DMatrix<Complex64>) {
    let m = to_na(h);
    let m = (&m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let nrows = m.nrows();
    let eig = m.symmetric_eigen();
    let mut idx: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    idx.sort_by(|&a, &b| eig.eigenvalues[a].partial_cmp(&eig.eigenvalues[b]).unwrap());
    let vals = idx.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vecs = DMatrix::from_fn(nrows, idx.len(), |r, j| eig.eigenvectors[(r, idx[j])]);
    (vals, vecs)
}

/// Numerical rank of the real span of vectors, by Gram–Schmidt with
/// reorthogonalization. Returns the indices of vectors kept.
pub fn real_span_basis(vectors: &[Vec<f64>], tol: f64) -> Vec<usize> {
    let mut q: Vec<Vec<f64>> = Vec::new();
    let mut kept = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        let norm0 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm0 == 0.0 {
            continue;
        }
        let mut w: Vec<f64> = v.iter().map(|x| x / norm0).collect();
        for _ in 0..2 {
            for b in &q {
                let d: f64 = w.iter().zip(b).map(|(x, y)| x * y).sum();
                for (x, y) in w.iter_mut().zip(b) {
                    *x -= d * y;
                }
            }
        }
        let n = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > tol {
            q.push(w.iter().map(|x| x / n).collect());
            kept.push(i);
        }
    }
    kept
}
