use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::{check_dominant, check_rank, root_data, SimpleType, Weight};
use crate::error::{Error, Result};

/// Dimension of the irreducible representation with highest weight `λ`.
pub fn weyl_dim(t: SimpleType, lambda: &Weight) -> Result<u128> {
    weyl_dim_big(t, lambda)?.to_u128().ok_or(Error::Overflow)
}

/// Weyl dimension formula `Π (λ+ρ|α)/(ρ|α)` in arbitrary precision.
pub fn weyl_dim_big(t: SimpleType, lambda: &Weight) -> Result<BigUint> {
    check_dominant(t, lambda)?;
    let rd = root_data(t);
    let shifted: Vec<i64> = lambda.0.iter().map(|x| x + 1).collect();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for r in &rd.positive_roots {
        let p: i64 = shifted.iter().zip(&r.pairing).map(|(x, y)| x * y).sum();
        num *= p as u64;
        den *= r.rho as u64;
    }
    debug_assert!((&num % &den) == BigUint::from(0u32));
    Ok(num / den)
}

/// Reflect `w` into the dominant chamber.
pub fn to_dominant(t: SimpleType, w: &Weight) -> Weight {
    let rd = root_data(t);
    let mut v = w.0.clone();
    reflect_to_dominant(&rd.cartan, &mut v);
    Weight(v)
}

fn reflect_to_dominant(cartan: &[Vec<i64>], v: &mut [i64]) -> usize {
    let mut count = 0;
    while let Some(a) = v.iter().position(|&x| x < 0) {
        let k = v[a];
        for (vb, cb) in v.iter_mut().zip(&cartan[a]) {
            *vb -= k * cb;
        }
        count += 1;
    }
    count
}

/// Move `w + ρ` into the dominant chamber with the dot action.
///
/// Returns the reflected weight minus `ρ` and the sign of the Weyl element,
/// or sign 0 when `w + ρ` lies on a wall.
pub fn dominant_reduce(t: SimpleType, w: &Weight) -> (Weight, i8) {
    let rd = root_data(t);
    let mut v: Vec<i64> = w.0.iter().map(|x| x + 1).collect();
    let count = reflect_to_dominant(&rd.cartan, &mut v);
    let wall = v.iter().any(|&x| x == 0);
    let out = Weight(v.iter().map(|x| x - 1).collect());
    let sign = if wall {
        0
    } else if count % 2 == 0 {
        1
    } else {
        -1
    };
    (out, sign)
}

type CharCache = RwLock<HashMap<(SimpleType, Weight), Arc<Vec<(Weight, u64)>>>>;

/// Dominant weights of `V(λ)` with multiplicities (Freudenthal), ordered by
/// depth below `λ`.
pub fn dominant_character(t: SimpleType, lambda: &Weight) -> Result<Arc<Vec<(Weight, u64)>>> {
    check_dominant(t, lambda)?;
    static CACHE: OnceLock<CharCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (t, lambda.clone());
    if let Some(c) = cache.read().unwrap().get(&key) {
        return Ok(c.clone());
    }
    let c = Arc::new(freudenthal(t, lambda));
    Ok(cache.write().unwrap().entry(key).or_insert(c).clone())
}

fn dominant_weights(t: SimpleType, lambda: &Weight) -> Vec<Vec<i64>> {
    let rd = root_data(t);
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(lambda.0.clone());
    let mut layer = vec![lambda.0.clone()];
    let mut out = Vec::new();
    let lam_coords = rd.root_coords(&lambda.0).unwrap_or_default();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for mu in &layer {
            for r in &rd.positive_roots {
                let nu: Vec<i64> = mu.iter().zip(&r.weight).map(|(a, b)| a - b).collect();
                if nu.iter().any(|&x| x < 0) || seen.contains(&nu) {
                    continue;
                }
                let diff: Vec<i64> = lambda.0.iter().zip(&nu).map(|(a, b)| a - b).collect();
                let below = rd
                    .root_coords(&diff)
                    .map(|c| c.iter().all(|&x| x >= 0))
                    .unwrap_or(false);
                if below {
                    seen.insert(nu.clone());
                    next.push(nu);
                }
            }
        }
        out.append(&mut layer);
        layer = next;
    }
    let _ = lam_coords;
    // Sort by depth (height of λ − μ) so the recursion only looks upward.
    let depth = |mu: &Vec<i64>| -> i64 {
        let diff: Vec<i64> = lambda.0.iter().zip(mu).map(|(a, b)| a - b).collect();
        rd.root_coords(&diff).unwrap().iter().sum()
    };
    out.sort_by_cached_key(|mu| (depth(mu), std::cmp::Reverse(mu.clone())));
    out
}

fn freudenthal(t: SimpleType, lambda: &Weight) -> Vec<(Weight, u64)> {
    let rd = root_data(t);
    let doms = dominant_weights(t, lambda);
    let norm = |v: &[i64]| -> i128 {
        let shifted: Vec<i64> = v.iter().map(|x| x + 1).collect();
        rd.scaled_form(&shifted, &shifted)
    };
    let top = norm(&lambda.0);
    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    let mut out = Vec::with_capacity(doms.len());
    for mu in doms {
        let m = if mu == lambda.0 {
            1
        } else {
            let mut num: i128 = 0;
            for r in &rd.positive_roots {
                let mut nu = mu.clone();
                loop {
                    for (x, y) in nu.iter_mut().zip(&r.weight) {
                        *x += y;
                    }
                    let mut d = nu.clone();
                    reflect_to_dominant(&rd.cartan, &mut d);
                    let Some(&md) = mult.get(&d) else { break };
                    let pair: i64 = nu.iter().zip(&r.pairing).map(|(x, y)| x * y).sum();
                    num += md as i128 * pair as i128;
                }
            }
            let den = top - norm(&mu);
            assert!(den > 0 && (2 * num) % den == 0, "Freudenthal recursion");
            (2 * num / den) as u64
        };
        if m > 0 {
            mult.insert(mu.clone(), m);
            out.push((Weight(mu), m));
        }
    }
    out
}

/// Every weight of a dominant weight's Weyl orbit.
pub fn orbit(t: SimpleType, mu: &Weight) -> Vec<Weight> {
    let rd = root_data(t);
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(mu.0.clone());
    let mut stack = vec![mu.0.clone()];
    let mut out = Vec::new();
    while let Some(v) = stack.pop() {
        for a in 0..v.len() {
            let k = v[a];
            if k > 0 {
                let w: Vec<i64> = v
                    .iter()
                    .zip(&rd.cartan[a])
                    .map(|(x, c)| x - k * c)
                    .collect();
                if seen.insert(w.clone()) {
                    stack.push(w);
                }
            }
        }
        out.push(Weight(v));
    }
    out
}

/// Full weight multiset of `V(λ)`.
pub fn weight_system(t: SimpleType, lambda: &Weight) -> Result<BTreeMap<Weight, u64>> {
    let dom = dominant_character(t, lambda)?;
    let mut out = BTreeMap::new();
    for (mu, m) in dom.iter() {
        for w in orbit(t, mu) {
            out.insert(w, *m);
        }
    }
    Ok(out)
}

#[allow(dead_code)]
pub(crate) fn check_weight(t: SimpleType, w: &Weight) -> Result<()> {
    check_rank(t, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    fn st(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    #[test]
    fn dimensions_from_tables() {
        assert_eq!(weyl_dim(st("su5"), &w(&[1, 0, 0, 0])).unwrap(), 5);
        assert_eq!(weyl_dim(st("e6"), &w(&[1, 0, 0, 0, 0, 0])).unwrap(), 27);
        assert_eq!(weyl_dim(st("e6"), &w(&[0, 0, 1, 0, 0, 0])).unwrap(), 351);
        assert_eq!(weyl_dim(st("so10"), &w(&[0, 0, 0, 1, 0])).unwrap(), 16);
        assert_eq!(weyl_dim(st("so10"), &w(&[0, 0, 1, 0, 0])).unwrap(), 120);
        assert_eq!(weyl_dim(st("e7"), &w(&[0, 0, 0, 0, 0, 0, 1])).unwrap(), 56);
        assert_eq!(
            weyl_dim(st("e8"), &w(&[0, 0, 0, 0, 0, 0, 0, 1])).unwrap(),
            248
        );
        assert_eq!(weyl_dim(st("f4"), &w(&[0, 0, 0, 1])).unwrap(), 26);
        assert_eq!(weyl_dim(st("g2"), &w(&[1, 0])).unwrap(), 7);
        assert_eq!(weyl_dim(st("sp2"), &w(&[2, 0])).unwrap(), 10);
        assert_eq!(weyl_dim(st("so5"), &w(&[2, 0])).unwrap(), 14);
        assert!(weyl_dim(st("su3"), &w(&[-1, 0])).is_err());
        assert!(weyl_dim(st("su3"), &w(&[1])).is_err());
    }

    #[test]
    fn weight_systems() {
        let ws = weight_system(st("su2"), &w(&[2])).unwrap();
        let expect: BTreeMap<Weight, u64> = [(w(&[2]), 1), (w(&[0]), 1), (w(&[-2]), 1)]
            .into_iter()
            .collect();
        assert_eq!(ws, expect);
        let adj = weight_system(st("su3"), &w(&[1, 1])).unwrap();
        assert_eq!(adj[&w(&[0, 0])], 2);
        assert_eq!(adj.values().sum::<u64>(), 8);
        let triv = weight_system(st("e7"), &Weight::zero(7)).unwrap();
        assert_eq!(triv.len(), 1);
        // E8 adjoint: zero weight has multiplicity equal to the rank
        let e8 = weight_system(st("e8"), &w(&[0, 0, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(e8[&Weight::zero(8)], 8);
        assert_eq!(e8.len(), 241);
    }

    #[test]
    fn weight_counts_match_dimensions() {
        for t in SimpleType::all_up_to_rank(8) {
            let l = t.rank();
            let mut lams = vec![Weight::zero(l)];
            for i in 0..l {
                let mut v = vec![0; l];
                v[i] = 1;
                lams.push(Weight(v.clone()));
                for j in i..l {
                    let mut u = v.clone();
                    u[j] += 1;
                    lams.push(Weight(u));
                }
            }
            for lam in lams {
                let d = weyl_dim(t, &lam).unwrap();
                if d > 20000 {
                    continue;
                }
                let dom = dominant_character(t, &lam).unwrap();
                let total: u128 = dom
                    .iter()
                    .map(|(mu, m)| *m as u128 * orbit(t, mu).len() as u128)
                    .sum();
                assert_eq!(total, d, "{t} {lam}");
            }
        }
    }

    #[test]
    fn weyl_invariance() {
        for (t, lam) in [
            (st("sp3"), w(&[1, 1, 0])),
            (st("g2"), w(&[1, 1])),
            (st("A3"), w(&[1, 0, 2])),
        ] {
            let ws = weight_system(t, &lam).unwrap();
            let dom: BTreeMap<Weight, u64> = dominant_character(t, &lam)
                .unwrap()
                .iter()
                .cloned()
                .collect();
            for (mu, m) in &ws {
                assert_eq!(dom[&to_dominant(t, mu)], *m);
            }
        }
    }

    #[test]
    fn dot_action() {
        let su2 = st("su2");
        assert_eq!(dominant_reduce(su2, &w(&[3])), (w(&[3]), 1));
        assert_eq!(dominant_reduce(su2, &w(&[-1])).1, 0);
        assert_eq!(dominant_reduce(su2, &w(&[-3])), (w(&[1]), -1));
        let g2 = SimpleType::exceptional(Family::G2).unwrap();
        assert_eq!(dominant_reduce(g2, &w(&[0, 0])), (w(&[0, 0]), 1));
    }
}
