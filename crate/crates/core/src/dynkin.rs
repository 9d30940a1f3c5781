//! Subordination, parts and minimal chains on Dynkin diagrams.
//!
//! Node indices are 0-based here; the CLI and `Display` use 1-based labels.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{
    cartan_matrix, check_dominant, inner_product, simple_root, Family, SemisimpleAlgebra,
    SimpleType, Weight,
};

/// A sequence of simple roots joining two highest weights.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Chain {
    pub root_indices: Vec<usize>,
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .root_indices
            .iter()
            .map(|j| (j + 1).to_string())
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `λ_k ≤ μ_k` for every label.
pub fn subordinate(lambda: &Weight, mu: &Weight) -> Result<bool> {
    if lambda.len() != mu.len() {
        return Err(Error::RankMismatch {
            expected: mu.len(),
            got: lambda.len(),
        });
    }
    Ok(lambda.0.iter().zip(&mu.0).all(|(a, b)| a <= b))
}

/// Match a connected Cartan submatrix against the simple types of its rank.
///
/// Returns the type and, for each of its Bourbaki nodes, the position in
/// `sub`. Among all matches the lexicographically smallest placement wins,
/// so a component keeps the orientation of the ambient diagram.
fn identify(sub: &[Vec<i64>]) -> (SimpleType, Vec<usize>) {
    let k = sub.len();
    let mut best: Option<(Vec<usize>, SimpleType)> = None;
    for f in Family::ALL {
        let Ok(t) = SimpleType::new(f, k) else {
            continue;
        };
        let target = cartan_matrix(t);
        if let Some(p) = first_embedding(&target, sub) {
            if best.as_ref().map_or(true, |(q, _)| p < *q) {
                best = Some((p, t));
            }
        }
    }
    let (p, t) = best.expect("every connected Cartan submatrix is of finite type");
    (t, p)
}

fn first_embedding(target: &[Vec<i64>], sub: &[Vec<i64>]) -> Option<Vec<usize>> {
    fn rec(target: &[Vec<i64>], sub: &[Vec<i64>], map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len();
        if i == target.len() {
            return true;
        }
        for c in 0..sub.len() {
            if used[c] {
                continue;
            }
            let ok =
                (0..i).all(|j| target[i][j] == sub[c][map[j]] && target[j][i] == sub[map[j]][c]);
            if ok {
                used[c] = true;
                map.push(c);
                if rec(target, sub, map, used) {
                    return true;
                }
                map.pop();
                used[c] = false;
            }
        }
        false
    }
    let mut map = Vec::new();
    let mut used = vec![false; sub.len()];
    rec(target, sub, &mut map, &mut used).then_some(map)
}

/// Components of the diagram left after deleting `deleted`, each with the
/// original node indices listed in the component's own Bourbaki order.
pub fn subdiagram(
    t: SimpleType,
    deleted: &BTreeSet<usize>,
) -> Result<Vec<(SimpleType, Vec<usize>)>> {
    let l = t.rank();
    if let Some(&j) = deleted.iter().find(|&&j| j >= l) {
        return Err(Error::InvalidInput(format!("node {} out of range", j + 1)));
    }
    if deleted.len() >= l {
        return Err(Error::InvalidInput("cannot delete every node".into()));
    }
    let a = cartan_matrix(t);
    let kept: Vec<usize> = (0..l).filter(|j| !deleted.contains(j)).collect();
    let mut seen = vec![false; l];
    let mut out = Vec::new();
    for &start in &kept {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut at = 0;
        while at < comp.len() {
            let i = comp[at];
            for &j in &kept {
                if !seen[j] && a[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            at += 1;
        }
        comp.sort();
        let sub: Vec<Vec<i64>> = comp
            .iter()
            .map(|&i| comp.iter().map(|&j| a[i][j]).collect())
            .collect();
        let (ty, place) = identify(&sub);
        out.push((ty, place.into_iter().map(|p| comp[p]).collect()));
    }
    Ok(out)
}

/// The subalgebra from deleting nodes and the correspondingly shortened weight.
pub fn part_weight(
    t: SimpleType,
    lambda: &Weight,
    deleted: &BTreeSet<usize>,
) -> Result<(SemisimpleAlgebra, Weight)> {
    check_dominant(t, lambda)?;
    let comps = subdiagram(t, deleted)?;
    let factors = comps.iter().map(|(ty, _)| *ty).collect();
    let w = comps
        .iter()
        .flat_map(|(_, nodes)| nodes.iter().map(|&j| lambda.0[j]))
        .collect();
    Ok((SemisimpleAlgebra::new(factors)?, Weight(w)))
}

/// Minimal chains joining `λ` and `μ`, in lexicographic order.
pub fn minimal_chains(t: SimpleType, lambda: &Weight, mu: &Weight) -> Result<Vec<Chain>> {
    check_dominant(t, lambda)?;
    check_dominant(t, mu)?;
    let l = t.rank();
    let roots: Vec<Weight> = (0..l).map(|j| simple_root(t, j)).collect();
    let nz = |u: &Weight, v: &Weight| -> Result<bool> { Ok(*inner_product(t, u, v)?.numer() != 0) };
    let mut with_lambda = vec![false; l];
    let mut with_mu = vec![false; l];
    let mut adj = vec![vec![false; l]; l];
    for j in 0..l {
        with_lambda[j] = nz(lambda, &roots[j])?;
        with_mu[j] = nz(&roots[j], mu)?;
        for k in 0..l {
            adj[j][k] = j != k && nz(&roots[j], &roots[k])?;
        }
    }
    let mut out = Vec::new();
    let mut path = Vec::new();
    fn extend(
        path: &mut Vec<usize>,
        out: &mut Vec<Chain>,
        adj: &[Vec<bool>],
        with_lambda: &[bool],
        with_mu: &[bool],
    ) {
        let last = *path.last().unwrap();
        if with_mu[last] {
            // (c) holds; by (f) nothing may follow.
            out.push(Chain {
                root_indices: path.clone(),
            });
            return;
        }
        for next in 0..adj.len() {
            let fresh = !path.contains(&next);
            // (b) adjacent to the last node, (e) to no earlier one, (d) orthogonal to λ
            let induced = path[..path.len() - 1].iter().all(|&p| !adj[p][next]);
            if fresh && adj[last][next] && induced && !with_lambda[next] {
                path.push(next);
                extend(path, out, adj, with_lambda, with_mu);
                path.pop();
            }
        }
    }
    for start in 0..l {
        if with_lambda[start] {
            path.push(start);
            extend(&mut path, &mut out, &adj, &with_lambda, &with_mu);
            path.pop();
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Highest weights that must occur in `V(λ) ⊗ V(μ)`: `λ+μ` and, for each
/// minimal chain, `λ+μ` minus the chain's roots when that is dominant.
pub fn guaranteed_constituents(
    t: SimpleType,
    lambda: &Weight,
    mu: &Weight,
) -> Result<BTreeSet<Weight>> {
    let top = lambda.add(mu);
    let mut out = BTreeSet::new();
    out.insert(top.clone());
    if lambda.is_zero() || mu.is_zero() {
        check_dominant(t, lambda)?;
        check_dominant(t, mu)?;
        return Ok(out);
    }
    for c in minimal_chains(t, lambda, mu)? {
        let mut w = top.clone();
        for &j in &c.root_indices {
            w = w.sub(&simple_root(t, j));
        }
        if w.is_dominant() {
            out.insert(w);
        }
    }
    Ok(out)
}
