//! Root systems and weight lattices of the compact simple Lie algebras.
//!
//! Weights are integer vectors in the basis of fundamental weights. Node
//! numbering follows Bourbaki; see [`cartan`] for the diagrams.

pub mod cartan;
mod data;
mod weights;

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cartan::cartan_matrix;
pub use data::{root_data, RootData};
pub use weights::{
    dominant_character, dominant_reduce, orbit as weyl_orbit, to_dominant, weight_system, weyl_dim,
    weyl_dim_big,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F4,
        Family::G2,
    ];

    /// Rank of an exceptional family, `None` for the classical series.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 => Some(4),
            Family::G2 => Some(2),
            _ => None,
        }
    }

    pub fn min_rank(self) -> usize {
        match self {
            Family::A | Family::C => 1,
            Family::B => 2,
            Family::D => 3,
            f => f.fixed_rank().unwrap(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family.fixed_rank() {
            Some(r) => rank == r,
            None => rank >= family.min_rank(),
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    pub fn exceptional(family: Family) -> Result<Self> {
        match family.fixed_rank() {
            Some(r) => Ok(SimpleType { family, rank: r }),
            None => Err(Error::InvalidRank { family, rank: 0 }),
        }
    }

    pub fn a(rank: usize) -> Self {
        Self::new(Family::A, rank).expect("valid A rank")
    }
    pub fn b(rank: usize) -> Self {
        Self::new(Family::B, rank).expect("valid B rank")
    }
    pub fn c(rank: usize) -> Self {
        Self::new(Family::C, rank).expect("valid C rank")
    }
    pub fn d(rank: usize) -> Self {
        Self::new(Family::D, rank).expect("valid D rank")
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Real dimension of the compact algebra.
    pub fn dim(self) -> usize {
        self.rank + 2 * root_data(self).positive_roots.len()
    }

    /// Name in the `su`/`so`/`sp` convention, e.g. `so10` for D5.
    pub fn compact_name(self) -> String {
        let l = self.rank;
        match self.family {
            Family::A => format!("su{}", l + 1),
            Family::B => format!("so{}", 2 * l + 1),
            Family::C => format!("sp{}", l),
            Family::D => format!("so{}", 2 * l),
            Family::E6 => "e6".into(),
            Family::E7 => "e7".into(),
            Family::E8 => "e8".into(),
            Family::F4 => "f4".into(),
            Family::G2 => "g2".into(),
        }
    }

    /// Cartan-type label, e.g. `D5`.
    pub fn label(self) -> String {
        match self.family {
            Family::A | Family::B | Family::C | Family::D => {
                format!("{:?}{}", self.family, self.rank)
            }
            f => format!("{:?}", f),
        }
    }

    /// Every valid type of rank at most `max_rank`, in family order then rank.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for f in Family::ALL {
            match f.fixed_rank() {
                Some(r) if r <= max_rank => out.push(SimpleType { family: f, rank: r }),
                Some(_) => {}
                None => {
                    for r in f.min_rank()..=max_rank {
                        out.push(SimpleType { family: f, rank: r });
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact_name())
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower: String = s
            .trim()
            .chars()
            .filter(|c| !matches!(c, '(' | ')' | '_' | ' '))
            .collect::<String>()
            .to_ascii_lowercase();
        let unknown = || Error::UnknownAlgebra(s.to_string());
        let split = lower
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(unknown)?;
        let (head, tail) = lower.split_at(split);
        let n: usize = tail.parse().map_err(|_| unknown())?;
        match head {
            "a" => SimpleType::new(Family::A, n),
            "b" => SimpleType::new(Family::B, n),
            "c" => SimpleType::new(Family::C, n),
            "d" => SimpleType::new(Family::D, n),
            "e" => match n {
                6 => Ok(SimpleType {
                    family: Family::E6,
                    rank: 6,
                }),
                7 => Ok(SimpleType {
                    family: Family::E7,
                    rank: 7,
                }),
                8 => Ok(SimpleType {
                    family: Family::E8,
                    rank: 8,
                }),
                _ => Err(unknown()),
            },
            "f" if n == 4 => Ok(SimpleType {
                family: Family::F4,
                rank: 4,
            }),
            "g" if n == 2 => Ok(SimpleType {
                family: Family::G2,
                rank: 2,
            }),
            "su" => {
                if n < 2 {
                    return Err(Error::InvalidRank {
                        family: Family::A,
                        rank: n.saturating_sub(1),
                    });
                }
                SimpleType::new(Family::A, n - 1)
            }
            "sp" => SimpleType::new(Family::C, n),
            "so" => {
                if n % 2 == 1 {
                    SimpleType::new(Family::B, n / 2)
                } else {
                    SimpleType::new(Family::D, n / 2)
                }
            }
            _ => Err(unknown()),
        }
    }
}

impl TryFrom<String> for SimpleType {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SimpleType> for String {
    fn from(t: SimpleType) -> String {
        t.label()
    }
}

/// A direct sum of simple algebras. Weights are concatenated factor by factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemisimpleAlgebra {
    factors: Vec<SimpleType>,
}

impl SemisimpleAlgebra {
    pub fn new(factors: Vec<SimpleType>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidInput(
                "semisimple algebra needs at least one factor".into(),
            ));
        }
        Ok(SemisimpleAlgebra { factors })
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|t| t.rank()).sum()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|t| t.dim()).sum()
    }

    pub fn as_simple(&self) -> Option<SimpleType> {
        match self.factors.as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }

    /// Split a concatenated weight into per-factor weights.
    pub fn split(&self, w: &Weight) -> Result<Vec<Weight>> {
        self.check(w)?;
        let mut out = Vec::with_capacity(self.factors.len());
        let mut at = 0;
        for t in &self.factors {
            out.push(Weight(w.0[at..at + t.rank()].to_vec()));
            at += t.rank();
        }
        Ok(out)
    }

    pub fn join(parts: &[Weight]) -> Weight {
        Weight(parts.iter().flat_map(|p| p.0.iter().copied()).collect())
    }

    pub fn check(&self, w: &Weight) -> Result<()> {
        if w.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: w.len(),
            });
        }
        Ok(())
    }
}

impl From<SimpleType> for SemisimpleAlgebra {
    fn from(t: SimpleType) -> Self {
        SemisimpleAlgebra { factors: vec![t] }
    }
}

impl fmt::Display for SemisimpleAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.factors.iter().map(|t| t.compact_name()).collect();
        f.write_str(&names.join("+"))
    }
}

impl FromStr for SemisimpleAlgebra {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let factors = s
            .split(['+', '⊕'])
            .map(|p| p.parse::<SimpleType>())
            .collect::<Result<Vec<_>>>()?;
        SemisimpleAlgebra::new(factors)
    }
}

/// Integer vector in fundamental-weight coordinates. Highest weights are the
/// dominant ones (all entries non-negative).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn label_sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Err(Error::ParseWeight(s.to_string()));
        }
        inner
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Weight)
            .map_err(|_| Error::ParseWeight(s.to_string()))
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

pub(crate) fn check_rank(t: SimpleType, w: &Weight) -> Result<()> {
    if w.len() != t.rank() {
        return Err(Error::RankMismatch {
            expected: t.rank(),
            got: w.len(),
        });
    }
    Ok(())
}

pub(crate) fn check_dominant(t: SimpleType, w: &Weight) -> Result<()> {
    check_rank(t, w)?;
    if !w.is_dominant() {
        return Err(Error::NotDominant(w.clone()));
    }
    Ok(())
}

/// The invariant form on weights, normalized so long roots have squared length 2.
pub fn inner_product(t: SimpleType, u: &Weight, v: &Weight) -> Result<Ratio<i64>> {
    check_rank(t, u)?;
    check_rank(t, v)?;
    let rd = root_data(t);
    Ok(Ratio::new(rd.scaled_form(&u.0, &v.0) as i64, rd.scale))
}

/// All positive roots in fundamental-weight coordinates, ordered by height.
pub fn positive_roots(t: SimpleType) -> Vec<Weight> {
    root_data(t)
        .positive_roots
        .iter()
        .map(|r| Weight(r.weight.clone()))
        .collect()
}

/// Simple root `a` (0-based) in fundamental-weight coordinates.
pub fn simple_root(t: SimpleType, a: usize) -> Weight {
    Weight(root_data(t).cartan[a].clone())
}
