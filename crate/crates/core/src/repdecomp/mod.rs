//! Decompositions of tensor products and squares into irreducibles, at the
//! level of highest weights.

mod scan;
mod squares;
mod tensor;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{root_data, weyl_dim, Family, SemisimpleAlgebra, SimpleType, Weight};

pub use scan::{
    canonical_weight, coincidence_note, non_self_dual, scan_tables, scan_tables_with,
    weights_in_box, ScanRow,
};
pub use squares::{
    alt_square, alt_square_adams, is_irreducible_square, outer_alt_sym_square, square, sym_square,
    sym_square_adams, SquareKind,
};
pub use tensor::{tensor_decompose, tensor_decompose_simple};

/// A multiset of highest weights of one (semi)simple algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "DecompositionRepr", try_from = "DecompositionRepr")]
pub struct Decomposition {
    algebra: SemisimpleAlgebra,
    terms: BTreeMap<Weight, u64>,
}

#[derive(Serialize, Deserialize)]
struct DecompositionRepr {
    algebra: String,
    dimension: String,
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    weight: Weight,
    multiplicity: u64,
    dimension: String,
}

impl From<Decomposition> for DecompositionRepr {
    fn from(d: Decomposition) -> Self {
        let terms = d
            .iter_descending()
            .map(|(w, m)| TermRepr {
                weight: w.clone(),
                multiplicity: m,
                dimension: dim_semisimple(&d.algebra, w)
                    .map(|x| x.to_string())
                    .unwrap_or_default(),
            })
            .collect();
        DecompositionRepr {
            algebra: d
                .algebra
                .factors()
                .iter()
                .map(|t| t.label())
                .collect::<Vec<_>>()
                .join("+"),
            dimension: d.dimension().map(|x| x.to_string()).unwrap_or_default(),
            terms,
        }
    }
}

impl TryFrom<DecompositionRepr> for Decomposition {
    type Error = Error;
    fn try_from(r: DecompositionRepr) -> Result<Self> {
        let algebra: SemisimpleAlgebra = r.algebra.parse()?;
        let terms = r
            .terms
            .into_iter()
            .map(|t| (t.weight, t.multiplicity))
            .collect();
        Decomposition::new(algebra, terms)
    }
}

impl Decomposition {
    /// Validates weights and drops nothing: zero multiplicities are rejected.
    pub fn new(algebra: SemisimpleAlgebra, terms: BTreeMap<Weight, u64>) -> Result<Self> {
        for (w, &m) in &terms {
            algebra.check(w)?;
            if !w.is_dominant() {
                return Err(Error::NotDominant(w.clone()));
            }
            if m == 0 {
                return Err(Error::InvalidInput(format!("zero multiplicity for {w}")));
            }
        }
        Ok(Decomposition { algebra, terms })
    }

    /// Like [`Decomposition::new`], and checks the total dimension.
    pub fn with_dimension(
        algebra: SemisimpleAlgebra,
        terms: BTreeMap<Weight, u64>,
        expected: u128,
    ) -> Result<Self> {
        let d = Decomposition::new(algebra, terms)?;
        let got = d.dimension()?;
        if got != expected {
            return Err(Error::Inconsistent(format!(
                "decomposition has dimension {got}, expected {expected}"
            )));
        }
        Ok(d)
    }

    pub fn single(algebra: SemisimpleAlgebra, w: Weight) -> Result<Self> {
        Decomposition::new(algebra, [(w, 1)].into_iter().collect())
    }

    pub fn algebra(&self) -> &SemisimpleAlgebra {
        &self.algebra
    }

    pub fn terms(&self) -> &BTreeMap<Weight, u64> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms with the lexicographically largest weight first.
    pub fn iter_descending(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.terms.iter().rev().map(|(w, &m)| (w, m))
    }

    pub fn dimension(&self) -> Result<u128> {
        let mut total: u128 = 0;
        for (w, &m) in &self.terms {
            let d = dim_semisimple(&self.algebra, w)?;
            total = d
                .checked_mul(m as u128)
                .and_then(|x| x.checked_add(total))
                .ok_or(Error::Overflow)?;
        }
        Ok(total)
    }

    /// Direct sum.
    pub fn merge(&self, other: &Decomposition) -> Result<Decomposition> {
        if self.algebra != other.algebra {
            return Err(Error::InvalidInput(
                "merging decompositions of different algebras".into(),
            ));
        }
        let mut terms = self.terms.clone();
        for (w, &m) in &other.terms {
            *terms.entry(w.clone()).or_insert(0) += m;
        }
        Ok(Decomposition {
            algebra: self.algebra.clone(),
            terms,
        })
    }

    /// Outer product over the direct sum of both algebras.
    pub fn outer(&self, other: &Decomposition) -> Decomposition {
        let mut factors = self.algebra.factors().to_vec();
        factors.extend_from_slice(other.algebra.factors());
        let mut terms = BTreeMap::new();
        for (a, &ma) in &self.terms {
            for (b, &mb) in &other.terms {
                let w = SemisimpleAlgebra::join(&[a.clone(), b.clone()]);
                *terms.entry(w).or_insert(0) += ma * mb;
            }
        }
        Decomposition {
            algebra: SemisimpleAlgebra::new(factors).expect("nonempty"),
            terms,
        }
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .iter_descending()
            .map(|(w, m)| format!("{w} ×{m}"))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(", "))
        }
    }
}

/// Dimension of an irreducible representation of a semisimple algebra.
pub fn dim_semisimple(g: &SemisimpleAlgebra, w: &Weight) -> Result<u128> {
    let mut d: u128 = 1;
    for (t, part) in g.factors().iter().zip(g.split(w)?) {
        d = d.checked_mul(weyl_dim(*t, &part)?).ok_or(Error::Overflow)?;
    }
    Ok(d)
}

/// `Σ m_i`.
pub fn one_norm(d: &Decomposition) -> u64 {
    d.terms.values().sum()
}

/// `Σ m_i²`.
pub fn two_norm(d: &Decomposition) -> u64 {
    d.terms.values().map(|m| m * m).sum()
}

/// Multiplicity of `λ`, zero when absent.
pub fn mult(d: &Decomposition, lambda: &Weight) -> u64 {
    d.terms.get(lambda).copied().unwrap_or(0)
}

/// Highest weight of the dual representation (the action of `−w₀`).
pub fn dual_weight(t: SimpleType, lambda: &Weight) -> Result<Weight> {
    crate::rootsys::check_dominant(t, lambda)?;
    let mut v = lambda.0.clone();
    let l = t.rank();
    match t.family() {
        Family::A => v.reverse(),
        Family::D if l % 2 == 1 => v.swap(l - 2, l - 1),
        Family::E6 => {
            v.swap(0, 5);
            v.swap(2, 4);
        }
        _ => {}
    }
    Ok(Weight(v))
}

pub fn dual_weight_semisimple(g: &SemisimpleAlgebra, lambda: &Weight) -> Result<Weight> {
    let parts = g
        .factors()
        .iter()
        .zip(g.split(lambda)?)
        .map(|(t, w)| dual_weight(*t, &w))
        .collect::<Result<Vec<_>>>()?;
    Ok(SemisimpleAlgebra::join(&parts))
}

pub fn is_self_dual(t: SimpleType, lambda: &Weight) -> Result<bool> {
    Ok(&dual_weight(t, lambda)? == lambda)
}

/// Highest root, i.e. the highest weight of the adjoint representation.
pub fn adjoint_weight(t: SimpleType) -> Weight {
    Weight(root_data(t).highest_root().weight.clone())
}
