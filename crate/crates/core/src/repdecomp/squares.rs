use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{tensor_decompose_simple, Decomposition};
use crate::error::{Error, Result};
use crate::rootsys::{
    check_dominant, dominant_character, dominant_reduce, root_data, weight_system, weyl_dim,
    SemisimpleAlgebra, SimpleType, Weight,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SquareKind {
    Alt,
    Sym,
}

impl fmt::Display for SquareKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SquareKind::Alt => "alt",
            SquareKind::Sym => "sym",
        })
    }
}

impl FromStr for SquareKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "alt" => Ok(SquareKind::Alt),
            "sym" => Ok(SquareKind::Sym),
            _ => Err(Error::InvalidInput(format!("unknown square kind `{s}`"))),
        }
    }
}

fn square_dim(d: u128, kind: SquareKind) -> u128 {
    match kind {
        SquareKind::Alt => d * d.saturating_sub(1) / 2,
        SquareKind::Sym => d * (d + 1) / 2,
    }
}

/// Dominant part of the character of `Alt²` or `Sym²`, built from pairs of
/// weights of `V(λ)`.
fn pair_character(
    t: SimpleType,
    lambda: &Weight,
    kind: SquareKind,
) -> Result<HashMap<Weight, i64>> {
    let ws: Vec<(Weight, u64)> = weight_system(t, lambda)?.into_iter().collect();
    let mut acc: HashMap<Weight, i64> = HashMap::new();
    for (i, (wi, mi)) in ws.iter().enumerate() {
        let m = *mi as i64;
        let diag = match kind {
            SquareKind::Alt => m * (m - 1) / 2,
            SquareKind::Sym => m * (m + 1) / 2,
        };
        let s = wi.scale(2);
        if diag > 0 && s.is_dominant() {
            *acc.entry(s).or_insert(0) += diag;
        }
        for (wj, mj) in &ws[i + 1..] {
            if wi.0.iter().zip(&wj.0).any(|(a, b)| a + b < 0) {
                continue;
            }
            *acc.entry(wi.add(wj)).or_insert(0) += m * *mj as i64;
        }
    }
    Ok(acc)
}

/// Peel off irreducible characters, highest weight first.
///
/// Weights are compared lexicographically in simple-root coordinates, which
/// refines the dominance order, so the chosen weight is always maximal.
fn strip(t: SimpleType, mut acc: HashMap<Weight, i64>) -> Result<BTreeMap<Weight, u64>> {
    let rd = root_data(t);
    let key = |w: &Weight| -> Vec<i64> {
        (0..w.len())
            .map(|b| (0..w.len()).map(|a| w.0[a] * rd.adj[a][b]).sum())
            .collect()
    };
    acc.retain(|_, c| *c != 0);
    let mut out = BTreeMap::new();
    while !acc.is_empty() {
        let top = acc.keys().max_by_key(|w| key(w)).unwrap().clone();
        let c = acc[&top];
        if c < 0 {
            return Err(Error::Inconsistent(format!(
                "negative coefficient at {top}"
            )));
        }
        for (mu, m) in dominant_character(t, &top)?.iter() {
            let e = acc.entry(mu.clone()).or_insert(0);
            *e -= c * *m as i64;
            if *e == 0 {
                acc.remove(mu);
            }
        }
        out.insert(top, c as u64);
    }
    Ok(out)
}

fn square_simple(t: SimpleType, lambda: &Weight, kind: SquareKind) -> Result<Decomposition> {
    check_dominant(t, lambda)?;
    let d = weyl_dim(t, lambda)?;
    let terms = strip(t, pair_character(t, lambda, kind)?)?;
    Decomposition::with_dimension(t.into(), terms, square_dim(d, kind))
}

/// `Alt² V(λ)` by stripping the antisymmetric pair character.
pub fn alt_square(t: SimpleType, lambda: &Weight) -> Result<Decomposition> {
    square_simple(t, lambda, SquareKind::Alt)
}

/// `Sym² V(λ)` by stripping the symmetric pair character.
pub fn sym_square(t: SimpleType, lambda: &Weight) -> Result<Decomposition> {
    square_simple(t, lambda, SquareKind::Sym)
}

/// The same squares through the Adams operation:
/// `Sym² = (V⊗V + ψ²V)/2`, `Alt² = (V⊗V − ψ²V)/2`.
fn square_adams(t: SimpleType, lambda: &Weight, kind: SquareKind) -> Result<Decomposition> {
    let d = weyl_dim(t, lambda)?;
    let tensor = tensor_decompose_simple(t, lambda, lambda)?;
    let mut psi: HashMap<Weight, i64> = HashMap::new();
    for (w, m) in weight_system(t, lambda)? {
        let (k, s) = dominant_reduce(t, &w.scale(2));
        if s != 0 {
            *psi.entry(k).or_insert(0) += s as i64 * m as i64;
        }
    }
    let sign = match kind {
        SquareKind::Sym => 1,
        SquareKind::Alt => -1,
    };
    let mut keys: Vec<Weight> = tensor.keys().cloned().collect();
    keys.extend(psi.keys().cloned());
    keys.sort();
    keys.dedup();
    let mut terms = BTreeMap::new();
    for k in keys {
        let v =
            tensor.get(&k).copied().unwrap_or(0) as i64 + sign * psi.get(&k).copied().unwrap_or(0);
        if v < 0 || v % 2 != 0 {
            return Err(Error::Inconsistent(format!(
                "Adams route gives {v}/2 at {k}"
            )));
        }
        if v > 0 {
            terms.insert(k, (v / 2) as u64);
        }
    }
    Decomposition::with_dimension(t.into(), terms, square_dim(d, kind))
}

pub fn alt_square_adams(t: SimpleType, lambda: &Weight) -> Result<Decomposition> {
    square_adams(t, lambda, SquareKind::Alt)
}

pub fn sym_square_adams(t: SimpleType, lambda: &Weight) -> Result<Decomposition> {
    square_adams(t, lambda, SquareKind::Sym)
}

/// `(Alt², Sym²)` of an outer product over a semisimple algebra.
///
/// Splits off the first factor and recurses:
/// `Alt²(φ⊠ψ) = Sym²φ⊠Alt²ψ ⊕ Alt²φ⊠Sym²ψ`,
/// `Sym²(φ⊠ψ) = Sym²φ⊠Sym²ψ ⊕ Alt²φ⊠Alt²ψ`.
pub fn outer_alt_sym_square(
    g: &SemisimpleAlgebra,
    lambda: &Weight,
) -> Result<(Decomposition, Decomposition)> {
    let parts = g.split(lambda)?;
    let t = g.factors()[0];
    let first = (alt_square(t, &parts[0])?, sym_square(t, &parts[0])?);
    if g.factors().len() == 1 {
        return Ok(first);
    }
    let rest_alg = SemisimpleAlgebra::new(g.factors()[1..].to_vec())?;
    let rest_w = SemisimpleAlgebra::join(&parts[1..]);
    let (a2, s2) = outer_alt_sym_square(&rest_alg, &rest_w)?;
    let (a1, s1) = first;
    let alt = s1.outer(&a2).merge(&a1.outer(&s2))?;
    let sym = s1.outer(&s2).merge(&a1.outer(&a2))?;
    let d = super::dim_semisimple(g, lambda)?;
    let alt = Decomposition::with_dimension(g.clone(), alt.terms, square_dim(d, SquareKind::Alt))?;
    let sym = Decomposition::with_dimension(g.clone(), sym.terms, square_dim(d, SquareKind::Sym))?;
    Ok((alt, sym))
}

/// Alt² or Sym² over any semisimple algebra.
pub fn square(g: &SemisimpleAlgebra, lambda: &Weight, kind: SquareKind) -> Result<Decomposition> {
    if let Some(t) = g.as_simple() {
        return square_simple(t, lambda, kind);
    }
    let (a, s) = outer_alt_sym_square(g, lambda)?;
    Ok(match kind {
        SquareKind::Alt => a,
        SquareKind::Sym => s,
    })
}

pub fn is_irreducible_square(t: SimpleType, lambda: &Weight, kind: SquareKind) -> Result<bool> {
    let d = square_simple(t, lambda, kind)?;
    Ok(d.len() == 1 && d.terms().values().all(|&m| m == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repdecomp::tensor_decompose;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }
    fn st(s: &str) -> SimpleType {
        s.parse().unwrap()
    }
    fn terms(d: &Decomposition) -> Vec<(Vec<i64>, u64)> {
        d.terms().iter().map(|(k, m)| (k.0.clone(), *m)).collect()
    }

    #[test]
    fn printed_squares() {
        assert_eq!(
            terms(&alt_square(st("so10"), &w(&[0, 0, 0, 1, 0])).unwrap()),
            vec![(vec![0, 0, 1, 0, 0], 1)]
        );
        assert_eq!(
            terms(&sym_square(st("sp3"), &w(&[1, 0, 0])).unwrap()),
            vec![(vec![2, 0, 0], 1)]
        );
        assert_eq!(
            terms(&sym_square(st("so9"), &w(&[1, 0, 0, 0])).unwrap()),
            vec![(vec![0, 0, 0, 0], 1), (vec![2, 0, 0, 0], 1)]
        );
        let e6 = alt_square(st("e6"), &w(&[1, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!(terms(&e6), vec![(vec![0, 0, 1, 0, 0, 0], 1)]);
        assert_eq!(e6.dimension().unwrap(), 351);
        assert_eq!(
            terms(&alt_square(st("su2"), &w(&[2])).unwrap()),
            vec![(vec![2], 1)]
        );
        assert_eq!(
            terms(&alt_square(st("sp2"), &w(&[1, 0])).unwrap()),
            vec![(vec![0, 0], 1), (vec![0, 1], 1)]
        );
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible_square(st("so10"), &w(&[0, 0, 0, 1, 0]), SquareKind::Alt).unwrap());
        assert!(!is_irreducible_square(st("su4"), &w(&[0, 1, 0]), SquareKind::Sym).unwrap());
        assert!(is_irreducible_square(st("sp3"), &w(&[1, 0, 0]), SquareKind::Sym).unwrap());
    }

    #[test]
    fn outer_squares() {
        let g: SemisimpleAlgebra = "su2+su2".parse().unwrap();
        let (a, s) = outer_alt_sym_square(&g, &w(&[1, 1])).unwrap();
        assert_eq!(terms(&s), vec![(vec![0, 0], 1), (vec![2, 2], 1)]);
        assert_eq!(terms(&a), vec![(vec![0, 2], 1), (vec![2, 0], 1)]);
        let single: SemisimpleAlgebra = st("su3").into();
        let (a, s) = outer_alt_sym_square(&single, &w(&[1, 1])).unwrap();
        assert_eq!(a, alt_square(st("su3"), &w(&[1, 1])).unwrap());
        assert_eq!(s, sym_square(st("su3"), &w(&[1, 1])).unwrap());
        // Alt² ⊕ Sym² recovers the tensor square on a three-factor sum.
        let g3: SemisimpleAlgebra = "su2+sp2+su3".parse().unwrap();
        let lam = w(&[1, 0, 1, 1, 0]);
        let (a, s) = outer_alt_sym_square(&g3, &lam).unwrap();
        assert_eq!(
            a.merge(&s).unwrap(),
            tensor_decompose(&g3, &lam, &lam).unwrap()
        );
    }

    #[test]
    fn two_routes_agree() {
        for t in SimpleType::all_up_to_rank(5) {
            let l = t.rank();
            for i in 0..l {
                for j in i..l {
                    let mut v = vec![0; l];
                    v[i] += 1;
                    v[j] += 1;
                    let lam = Weight(v);
                    if weyl_dim(t, &lam).unwrap() > 400 {
                        continue;
                    }
                    assert_eq!(
                        alt_square(t, &lam).unwrap(),
                        alt_square_adams(t, &lam).unwrap(),
                        "{t} {lam}"
                    );
                    assert_eq!(
                        sym_square(t, &lam).unwrap(),
                        sym_square_adams(t, &lam).unwrap(),
                        "{t} {lam}"
                    );
                }
            }
        }
    }
}
