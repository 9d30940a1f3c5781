use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{dual_weight, square, Decomposition, SquareKind};
use crate::error::Result;
use crate::par::{self, Execution};
use crate::rootsys::{weyl_dim_big, Family, SimpleType, Weight};

/// Squares up to this dimension are decomposed in full to confirm the row.
const VERIFY_CAP: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub algebra: SimpleType,
    pub weight: Weight,
    pub dim: u128,
    pub square_weight: Weight,
    pub square_dim: u128,
    /// Full decomposition, when it was small enough to compute.
    pub square: Option<Decomposition>,
    pub note: Option<String>,
}

/// Diagram-automorphism images of `λ`.
fn automorphic_images(t: SimpleType, lambda: &Weight) -> Vec<Weight> {
    let l = t.rank();
    let v = &lambda.0;
    let mut out = vec![lambda.clone()];
    match t.family() {
        Family::A if l > 1 => out.push(Weight(v.iter().rev().copied().collect())),
        Family::D if l == 4 => {
            let legs = [0usize, 2, 3];
            for p in [
                [0, 2, 3],
                [0, 3, 2],
                [2, 0, 3],
                [2, 3, 0],
                [3, 0, 2],
                [3, 2, 0],
            ] {
                let mut u = v.clone();
                for (k, &leg) in legs.iter().enumerate() {
                    u[leg] = v[p[k]];
                }
                out.push(Weight(u));
            }
        }
        Family::D => {
            let mut u = v.clone();
            u.swap(l - 2, l - 1);
            out.push(Weight(u));
        }
        Family::E6 => {
            let mut u = v.clone();
            u.swap(0, 5);
            u.swap(2, 4);
            out.push(Weight(u));
        }
        _ => {}
    }
    out
}

/// Representative of `λ` up to diagram automorphisms (the lexicographically
/// greatest image).
pub fn canonical_weight(t: SimpleType, lambda: &Weight) -> Weight {
    automorphic_images(t, lambda).into_iter().max().unwrap()
}

/// Low-rank isomorphisms that make a row repeat another one.
pub fn coincidence_note(t: SimpleType) -> Option<&'static str> {
    match (t.family(), t.rank()) {
        (Family::C, 1) => Some("sp1=su2"),
        (Family::B, 2) => Some("so5=sp2"),
        (Family::C, 2) => Some("sp2=so5"),
        (Family::D, 3) => Some("so6=su4"),
        _ => None,
    }
}

/// Nonzero dominant weights of the given rank with label sum at most `max_sum`.
pub fn weights_in_box(rank: usize, max_sum: i64) -> Vec<Weight> {
    fn rec(prefix: &mut Vec<i64>, rank: usize, left: i64, out: &mut Vec<Weight>) {
        if prefix.len() == rank {
            out.push(Weight(prefix.clone()));
            return;
        }
        for x in 0..=left {
            prefix.push(x);
            rec(prefix, rank, left - x, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), rank, max_sum, &mut out);
    out.retain(|w| !w.is_zero());
    out
}

/// Highest weight of the square when it is irreducible.
///
/// `2λ` is the top of `Sym²`; `Alt²` has a maximal weight `2λ − α_j` for every
/// `j` with `λ_j > 0`. The square is irreducible exactly when there is one
/// candidate and its Weyl dimension fills the whole square.
fn irreducible_top(
    t: SimpleType,
    lambda: &Weight,
    kind: SquareKind,
) -> Result<Option<(Weight, BigUint)>> {
    let d = weyl_dim_big(t, lambda)?;
    let (top, want) = match kind {
        SquareKind::Sym => (lambda.scale(2), &d * (&d + 1u32) / 2u32),
        SquareKind::Alt => {
            let support: Vec<usize> = (0..t.rank()).filter(|&j| lambda.0[j] > 0).collect();
            if support.len() != 1 {
                return Ok(None);
            }
            let alpha = crate::rootsys::simple_root(t, support[0]);
            (lambda.scale(2).sub(&alpha), &d * (&d - 1u32) / 2u32)
        }
    };
    Ok((weyl_dim_big(t, &top)? == want).then_some((top, d)))
}

fn scan_one(t: SimpleType, lambda: &Weight, kind: SquareKind) -> Result<Option<ScanRow>> {
    let Some((top, d)) = irreducible_top(t, lambda, kind)? else {
        return Ok(None);
    };
    let dim: u128 = d.try_into().map_err(|_| crate::Error::Overflow)?;
    let square_dim = match kind {
        SquareKind::Alt => dim * (dim - 1) / 2,
        SquareKind::Sym => dim * (dim + 1) / 2,
    };
    let full = if dim <= VERIFY_CAP as u128 {
        let s = square(&t.into(), lambda, kind)?;
        if s.len() != 1 || s.terms().get(&top) != Some(&1) {
            return Err(crate::Error::Inconsistent(format!(
                "{t} {lambda}: dimension test says irreducible, decomposition gives {s}"
            )));
        }
        Some(s)
    } else {
        None
    };
    Ok(Some(ScanRow {
        algebra: t,
        weight: lambda.clone(),
        dim,
        square_weight: top,
        square_dim,
        square: full,
        note: coincidence_note(t).map(str::to_string),
    }))
}

/// All `(t, λ)` with `rank(t) ≤ max_rank`, `0 < Σλ ≤ max_sum` whose square of
/// the given kind is irreducible, one representative per diagram-automorphism
/// class, sorted by family, rank and descending weight.
pub fn scan_tables(kind: SquareKind, max_rank: usize, max_sum: u32) -> Result<Vec<ScanRow>> {
    scan_tables_with(Execution::default(), kind, max_rank, max_sum)
}

pub fn scan_tables_with(
    exec: Execution,
    kind: SquareKind,
    max_rank: usize,
    max_sum: u32,
) -> Result<Vec<ScanRow>> {
    let mut cands: Vec<(SimpleType, Weight)> = Vec::new();
    for t in SimpleType::all_up_to_rank(max_rank) {
        let mut ws = weights_in_box(t.rank(), max_sum as i64);
        ws.retain(|w| canonical_weight(t, w) == *w);
        ws.sort_by(|a, b| b.cmp(a));
        cands.extend(ws.into_iter().map(|w| (t, w)));
    }
    let rows = par::map(exec, &cands, |(t, w)| scan_one(*t, w, kind));
    rows.into_iter().filter_map(|r| r.transpose()).collect()
}

/// Rows whose representation is not self-dual.
pub fn non_self_dual(rows: Vec<ScanRow>) -> Vec<ScanRow> {
    rows.into_iter()
        .filter(|r| {
            dual_weight(r.algebra, &r.weight)
                .map(|d| d != r.weight)
                .unwrap_or(false)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn rank_one_alt() {
        let rows = scan_tables(SquareKind::Alt, 1, 3).unwrap();
        let got: Vec<(String, Weight, Weight)> = rows
            .iter()
            .map(|r| (r.algebra.label(), r.weight.clone(), r.square_weight.clone()))
            .collect();
        assert_eq!(
            got,
            vec![
                ("A1".to_string(), w(&[2]), w(&[2])),
                ("A1".to_string(), w(&[1]), w(&[0])),
                ("C1".to_string(), w(&[2]), w(&[2])),
                ("C1".to_string(), w(&[1]), w(&[0])),
            ]
        );
        assert_eq!(rows[2].note.as_deref(), Some("sp1=su2"));
    }

    #[test]
    fn canonical_representatives() {
        let d4: SimpleType = "D4".parse().unwrap();
        assert_eq!(canonical_weight(d4, &w(&[0, 0, 0, 1])), w(&[1, 0, 0, 0]));
        let d5: SimpleType = "D5".parse().unwrap();
        assert_eq!(
            canonical_weight(d5, &w(&[0, 0, 0, 0, 1])),
            w(&[0, 0, 0, 1, 0])
        );
        let a3: SimpleType = "A3".parse().unwrap();
        assert_eq!(canonical_weight(a3, &w(&[0, 0, 2])), w(&[2, 0, 0]));
        let e6: SimpleType = "E6".parse().unwrap();
        assert_eq!(
            canonical_weight(e6, &w(&[0, 0, 0, 0, 0, 1])),
            w(&[1, 0, 0, 0, 0, 0])
        );
    }

    #[test]
    fn parallel_matches_sequential() {
        let a = scan_tables_with(Execution::Sequential, SquareKind::Sym, 4, 2).unwrap();
        let b = scan_tables_with(Execution::Parallel, SquareKind::Sym, 4, 2).unwrap();
        assert_eq!(a, b);
    }
}
