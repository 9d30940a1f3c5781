use std::collections::{HashMap, HashSet};
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::Ratio;
use num_traits::{One, Zero};

use super::{cartan_matrix, SimpleType};

#[derive(Debug, Clone)]
pub struct PositiveRoot {
    /// Fundamental-weight coordinates.
    pub weight: Vec<i64>,
    /// Simple-root coordinates.
    pub coords: Vec<i64>,
    /// `form · weight`, so that `(x|α)` scaled is a dot product with `x`.
    pub pairing: Vec<i64>,
    /// Scaled `(ρ|α)`.
    pub rho: i64,
}

/// Precomputed root-system tables for one simple type.
///
/// All pairings are stored scaled by `scale = 6·det(A)` so they are integers.
#[derive(Debug)]
pub struct RootData {
    pub ty: SimpleType,
    pub cartan: Vec<Vec<i64>>,
    /// `3(α_a|α_a)`: 6 for long roots, 3 or 2 for short ones.
    pub norm6: Vec<i64>,
    pub det: i64,
    /// `det · A⁻¹`.
    pub adj: Vec<Vec<i64>>,
    /// `scale · (ω_a|ω_b)`.
    pub form: Vec<Vec<i64>>,
    pub scale: i64,
    pub positive_roots: Vec<PositiveRoot>,
}

impl RootData {
    fn build(ty: SimpleType) -> RootData {
        let cartan = cartan_matrix(ty);
        let l = ty.rank();
        let norm6 = root_norms(&cartan);
        let (det, adj) = adjugate(&cartan);
        let scale = 6 * det;
        let form: Vec<Vec<i64>> = (0..l)
            .map(|a| (0..l).map(|b| adj[a][b] * norm6[b]).collect())
            .collect();
        let mut rd = RootData {
            ty,
            cartan,
            norm6,
            det,
            adj,
            form,
            scale,
            positive_roots: Vec::new(),
        };
        rd.positive_roots = rd.enumerate_positive_roots();
        rd
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Scaled form `scale · (u|v)` for weights in fundamental coordinates.
    pub fn scaled_form(&self, u: &[i64], v: &[i64]) -> i128 {
        let mut s = 0i128;
        for (a, &ua) in u.iter().enumerate() {
            if ua == 0 {
                continue;
            }
            let row = &self.form[a];
            let mut t = 0i128;
            for (b, &vb) in v.iter().enumerate() {
                t += row[b] as i128 * vb as i128;
            }
            s += ua as i128 * t;
        }
        s
    }

    /// Simple-root coordinates of a weight, if it lies in the root lattice.
    pub fn root_coords(&self, w: &[i64]) -> Option<Vec<i64>> {
        let l = self.rank();
        let mut out = Vec::with_capacity(l);
        for b in 0..l {
            let s: i64 = (0..l).map(|a| w[a] * self.adj[a][b]).sum();
            if s % self.det != 0 {
                return None;
            }
            out.push(s / self.det);
        }
        Some(out)
    }

    /// Weight of a combination of simple roots.
    pub fn from_root_coords(&self, c: &[i64]) -> Vec<i64> {
        let l = self.rank();
        let mut w = vec![0; l];
        for (b, &cb) in c.iter().enumerate() {
            if cb != 0 {
                for a in 0..l {
                    w[a] += cb * self.cartan[b][a];
                }
            }
        }
        w
    }

    pub fn highest_root(&self) -> &PositiveRoot {
        self.positive_roots
            .iter()
            .max_by_key(|r| r.coords.iter().sum::<i64>())
            .expect("at least one root")
    }

    fn enumerate_positive_roots(&self) -> Vec<PositiveRoot> {
        let l = self.rank();
        let unit = |a: usize| {
            let mut c = vec![0; l];
            c[a] = 1;
            c
        };
        let mut by_height: Vec<Vec<Vec<i64>>> = vec![(0..l).map(unit).collect()];
        let mut seen: HashSet<Vec<i64>> = by_height[0].iter().cloned().collect();
        loop {
            let mut next = Vec::new();
            for c in by_height.last().unwrap() {
                let w = self.from_root_coords(c);
                for a in 0..l {
                    let mut p = 0;
                    let mut down = c.clone();
                    loop {
                        down[a] -= 1;
                        if down[a] >= 0 && seen.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let q = p - w[a];
                    if q > 0 {
                        let mut up = c.clone();
                        up[a] += 1;
                        if seen.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort();
            by_height.push(next);
        }
        let rho = vec![1i64; l];
        by_height
            .into_iter()
            .flatten()
            .map(|coords| {
                let weight = self.from_root_coords(&coords);
                let pairing: Vec<i64> = (0..l)
                    .map(|a| (0..l).map(|b| self.form[a][b] * weight[b]).sum())
                    .collect();
                let r = rho.iter().zip(&pairing).map(|(x, y)| x * y).sum();
                PositiveRoot {
                    weight,
                    coords,
                    pairing,
                    rho: r,
                }
            })
            .collect()
    }
}

fn root_norms(a: &[Vec<i64>]) -> Vec<i64> {
    let l = a.len();
    let mut len: Vec<Option<Ratio<i64>>> = vec![None; l];
    len[0] = Some(Ratio::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..l {
            if i != j && a[i][j] != 0 && len[j].is_none() {
                // (α_i|α_i)/(α_j|α_j) = A[i][j]/A[j][i]
                len[j] = Some(len[i].unwrap() * Ratio::new(a[j][i], a[i][j]));
                stack.push(j);
            }
        }
    }
    let len: Vec<Ratio<i64>> = len
        .into_iter()
        .map(|x| x.expect("connected diagram"))
        .collect();
    let max = *len.iter().max().unwrap();
    len.iter()
        .map(|x| {
            let v = *x / max * 6;
            assert!(v.is_integer());
            v.to_integer()
        })
        .collect()
}

fn adjugate(a: &[Vec<i64>]) -> (i64, Vec<Vec<i64>>) {
    let l = a.len();
    let mut m: Vec<Vec<Ratio<i64>>> = a
        .iter()
        .map(|r| r.iter().map(|&x| Ratio::from_integer(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Ratio<i64>>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| if i == j { Ratio::one() } else { Ratio::zero() })
                .collect()
        })
        .collect();
    let mut det = Ratio::one();
    for col in 0..l {
        let piv = (col..l)
            .find(|&r| !m[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        if piv != col {
            m.swap(piv, col);
            inv.swap(piv, col);
            det = -det;
        }
        let p = m[col][col];
        det *= p;
        for j in 0..l {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..l {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for j in 0..l {
                    let (mc, ic) = (m[col][j], inv[col][j]);
                    m[r][j] -= f * mc;
                    inv[r][j] -= f * ic;
                }
            }
        }
    }
    assert!(det.is_integer());
    let d = det.to_integer();
    let adj = inv
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    let v = *x * d;
                    assert!(v.is_integer());
                    v.to_integer()
                })
                .collect()
        })
        .collect();
    (d, adj)
}

type Cache = RwLock<HashMap<SimpleType, Arc<RootData>>>;

/// Shared, lazily built tables for `t`.
pub fn root_data(t: SimpleType) -> Arc<RootData> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(rd) = cache.read().unwrap().get(&t) {
        return rd.clone();
    }
    let rd = Arc::new(RootData::build(t));
    cache.write().unwrap().entry(t).or_insert(rd).clone()
}
