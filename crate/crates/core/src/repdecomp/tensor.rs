use std::collections::{BTreeMap, HashMap};

use super::{dim_semisimple, Decomposition};
use crate::error::{Error, Result};
use crate::rootsys::{
    check_dominant, dominant_character, dominant_reduce, weyl_dim, SemisimpleAlgebra, SimpleType,
    Weight,
};

/// `V(λ) ⊗ V(μ)` for a simple algebra, as a map of highest weights.
///
/// Klimyk's formula: each weight `ν` of the smaller factor contributes its
/// multiplicity, with sign, to the dot-reduction of `λ + ν`.
pub fn tensor_decompose_simple(
    t: SimpleType,
    lambda: &Weight,
    mu: &Weight,
) -> Result<BTreeMap<Weight, u64>> {
    check_dominant(t, lambda)?;
    check_dominant(t, mu)?;
    let (big, small) = if weyl_dim(t, lambda)? >= weyl_dim(t, mu)? {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let mut acc: HashMap<Weight, i64> = HashMap::new();
    for (nu_dom, m) in dominant_character(t, small)?.iter() {
        for nu in crate::rootsys::weyl_orbit(t, nu_dom) {
            let (k, s) = dominant_reduce(t, &big.add(&nu));
            if s != 0 {
                *acc.entry(k).or_insert(0) += s as i64 * *m as i64;
            }
        }
    }
    let mut out = BTreeMap::new();
    for (k, c) in acc {
        if c < 0 {
            return Err(Error::Inconsistent(format!("negative multiplicity at {k}")));
        }
        if c > 0 {
            out.insert(k, c as u64);
        }
    }
    Ok(out)
}

/// `V(λ) ⊗ V(μ)` over a semisimple algebra, factor by factor.
pub fn tensor_decompose(
    g: &SemisimpleAlgebra,
    lambda: &Weight,
    mu: &Weight,
) -> Result<Decomposition> {
    let ls = g.split(lambda)?;
    let ms = g.split(mu)?;
    let mut acc: Option<Decomposition> = None;
    for ((t, l), m) in g.factors().iter().zip(&ls).zip(&ms) {
        let d = Decomposition::new((*t).into(), tensor_decompose_simple(*t, l, m)?)?;
        acc = Some(match acc {
            None => d,
            Some(a) => a.outer(&d),
        });
    }
    let d = acc.expect("at least one factor");
    let expected = dim_semisimple(g, lambda)?
        .checked_mul(dim_semisimple(g, mu)?)
        .ok_or(Error::Overflow)?;
    Decomposition::with_dimension(g.clone(), d.terms, expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::positive_roots;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }
    fn g(s: &str) -> SemisimpleAlgebra {
        s.parse().unwrap()
    }
    fn dec(alg: &str, terms: &[(&[i64], u64)]) -> Decomposition {
        Decomposition::new(g(alg), terms.iter().map(|(v, m)| (w(v), *m)).collect()).unwrap()
    }

    #[test]
    fn small_products() {
        assert_eq!(
            tensor_decompose(&g("su2"), &w(&[1]), &w(&[1])).unwrap(),
            dec("su2", &[(&[2], 1), (&[0], 1)])
        );
        assert_eq!(
            tensor_decompose(&g("su4"), &w(&[1, 0, 0]), &w(&[1, 0, 0])).unwrap(),
            dec("su4", &[(&[2, 0, 0], 1), (&[0, 1, 0], 1)])
        );
        assert_eq!(
            tensor_decompose(&g("sp2"), &w(&[1, 0]), &w(&[1, 0])).unwrap(),
            dec("sp2", &[(&[2, 0], 1), (&[0, 1], 1), (&[0, 0], 1)])
        );
        assert_eq!(
            tensor_decompose(&g("su2"), &w(&[2]), &w(&[2])).unwrap(),
            dec("su2", &[(&[4], 1), (&[2], 1), (&[0], 1)])
        );
        // 8 ⊗ 8 of su(3)
        assert_eq!(
            tensor_decompose(&g("su3"), &w(&[1, 1]), &w(&[1, 1])).unwrap(),
            dec(
                "su3",
                &[
                    (&[2, 2], 1),
                    (&[3, 0], 1),
                    (&[0, 3], 1),
                    (&[1, 1], 2),
                    (&[0, 0], 1)
                ]
            )
        );
    }

    #[test]
    fn semisimple_product() {
        let d = tensor_decompose(&g("su2+su2"), &w(&[1, 1]), &w(&[1, 1])).unwrap();
        assert_eq!(
            d,
            dec(
                "su2+su2",
                &[(&[2, 2], 1), (&[2, 0], 1), (&[0, 2], 1), (&[0, 0], 1)]
            )
        );
    }

    #[test]
    fn top_component_and_bound() {
        // λ+μ appears once and every component lies below it.
        for t in SimpleType::all_up_to_rank(4) {
            let l = t.rank();
            let rd = crate::rootsys::root_data(t);
            for i in 0..l {
                for j in 0..l {
                    let mut a = vec![0; l];
                    a[i] = 1;
                    let mut b = vec![0; l];
                    b[j] += 1;
                    let (a, b) = (Weight(a), Weight(b));
                    let d = tensor_decompose(&t.into(), &a, &b).unwrap();
                    let top = a.add(&b);
                    assert_eq!(d.terms()[&top], 1);
                    for k in d.terms().keys() {
                        let c = rd.root_coords(&top.sub(k).0).unwrap();
                        assert!(c.iter().all(|&x| x >= 0), "{t} {k}");
                    }
                }
            }
            assert!(!positive_roots(t).is_empty());
        }
    }
}
