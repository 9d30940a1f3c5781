//! Orthogonal, symplectic and unitary irreducible representations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::repdecomp::{alt_square, is_self_dual, mult, sym_square};
use crate::rootsys::{check_dominant, Family, SimpleType, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepClass {
    Orthogonal,
    Symplectic,
    Unitary,
}

impl fmt::Display for RepClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepClass::Orthogonal => "orthogonal",
            RepClass::Symplectic => "symplectic",
            RepClass::Unitary => "unitary",
        })
    }
}

/// Malcev's rules on the highest weight.
///
/// Labels are 1-based below to match the usual statement of the rules;
/// `x(k)` is `λ_k`. The so(2ℓ+1) rule is also applied at ℓ = 2 and the
/// sp(ℓ) rule at ℓ = 1, where they agree with so(5) ≅ sp(2) and sp(1) ≅ su(2).
pub fn malcev_class(t: SimpleType, lambda: &Weight) -> Result<RepClass> {
    check_dominant(t, lambda)?;
    let l = t.rank();
    let x = |k: usize| lambda.0[k - 1];
    let odd = |v: i64| v % 2 == 1;
    let class = match t.family() {
        Family::A => {
            let symmetric = lambda.0.iter().eq(lambda.0.iter().rev());
            if !symmetric {
                RepClass::Unitary
            } else if l % 4 == 1 && odd(x((l - 1) / 2 + 1)) {
                RepClass::Symplectic
            } else {
                RepClass::Orthogonal
            }
        }
        Family::B => {
            if matches!(l % 4, 1 | 2) && odd(x(l)) {
                RepClass::Symplectic
            } else {
                RepClass::Orthogonal
            }
        }
        Family::C => {
            let s: i64 = (1..=l).step_by(2).map(x).sum();
            if odd(s) {
                RepClass::Symplectic
            } else {
                RepClass::Orthogonal
            }
        }
        Family::D => {
            let tail = x(l - 1) + x(l);
            if l % 2 == 1 {
                if x(l - 1) == x(l) {
                    RepClass::Orthogonal
                } else {
                    RepClass::Unitary
                }
            } else if l % 4 == 2 && odd(tail) {
                RepClass::Symplectic
            } else {
                RepClass::Orthogonal
            }
        }
        Family::G2 | Family::F4 | Family::E8 => RepClass::Orthogonal,
        Family::E6 => {
            if x(1) == x(6) && x(3) == x(5) {
                RepClass::Orthogonal
            } else {
                RepClass::Unitary
            }
        }
        Family::E7 => {
            if odd(x(2) + x(5) + x(7)) {
                RepClass::Symplectic
            } else {
                RepClass::Orthogonal
            }
        }
    };
    Ok(class)
}

/// Locate the invariant bilinear form: it is the trivial constituent of
/// `Sym²` (orthogonal) or of `Alt²` (symplectic).
pub fn fs_oracle(t: SimpleType, lambda: &Weight) -> Result<RepClass> {
    if !is_self_dual(t, lambda)? {
        return Ok(RepClass::Unitary);
    }
    let zero = Weight::zero(t.rank());
    let s = mult(&sym_square(t, lambda)?, &zero);
    let a = mult(&alt_square(t, lambda)?, &zero);
    match (s, a) {
        (1, 0) => Ok(RepClass::Orthogonal),
        (0, 1) => Ok(RepClass::Symplectic),
        _ => Err(Error::Inconsistent(format!(
            "self-dual {t} {lambda} has {s} symmetric and {a} alternating invariant forms"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }
    fn st(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    #[test]
    fn rule_examples() {
        assert_eq!(
            malcev_class(st("su2"), &w(&[1])).unwrap(),
            RepClass::Symplectic
        );
        assert_eq!(
            malcev_class(st("so7"), &w(&[0, 0, 1])).unwrap(),
            RepClass::Orthogonal
        );
        assert_eq!(
            malcev_class(st("e7"), &w(&[0, 0, 0, 0, 0, 0, 1])).unwrap(),
            RepClass::Symplectic
        );
        assert_eq!(
            malcev_class(st("su3"), &w(&[1, 0])).unwrap(),
            RepClass::Unitary
        );
        assert_eq!(
            malcev_class(st("so9"), &w(&[0, 0, 0, 1])).unwrap(),
            RepClass::Orthogonal
        );
        assert_eq!(
            malcev_class(st("so11"), &w(&[0, 0, 0, 0, 1])).unwrap(),
            RepClass::Symplectic
        );
        assert_eq!(
            malcev_class(st("so12"), &w(&[0, 0, 0, 0, 1, 0])).unwrap(),
            RepClass::Symplectic
        );
        assert_eq!(
            malcev_class(st("so10"), &w(&[0, 0, 0, 1, 0])).unwrap(),
            RepClass::Unitary
        );
        assert_eq!(
            malcev_class(st("sp3"), &w(&[0, 1, 0])).unwrap(),
            RepClass::Orthogonal
        );
        assert_eq!(
            malcev_class(st("e6"), &Weight::zero(6)).unwrap(),
            RepClass::Orthogonal
        );
    }

    #[test]
    fn su6_middle_label() {
        // ℓ = 5: the rule reads the third label.
        let su6 = st("su6");
        assert_eq!(
            malcev_class(su6, &w(&[0, 0, 1, 0, 0])).unwrap(),
            RepClass::Symplectic
        );
        assert_eq!(
            malcev_class(su6, &w(&[0, 1, 0, 1, 0])).unwrap(),
            RepClass::Orthogonal
        );
        assert_eq!(
            malcev_class(su6, &w(&[1, 0, 1, 0, 1])).unwrap(),
            RepClass::Symplectic
        );
        assert_eq!(
            fs_oracle(su6, &w(&[0, 0, 1, 0, 0])).unwrap(),
            RepClass::Symplectic
        );
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            fs_oracle(st("sp3"), &w(&[1, 0, 0])).unwrap(),
            RepClass::Symplectic
        );
        assert_eq!(
            fs_oracle(st("so7"), &w(&[1, 0, 0])).unwrap(),
            RepClass::Orthogonal
        );
        assert_eq!(
            fs_oracle(st("g2"), &w(&[0, 0])).unwrap(),
            RepClass::Orthogonal
        );
        assert_eq!(
            fs_oracle(st("su4"), &w(&[1, 0, 0])).unwrap(),
            RepClass::Unitary
        );
    }

    #[test]
    fn rules_agree_with_oracle_small_box() {
        for t in SimpleType::all_up_to_rank(4) {
            let l = t.rank();
            for i in 0..l {
                for j in i..l {
                    let mut v = vec![0; l];
                    v[i] += 1;
                    v[j] += 1;
                    let lam = Weight(v);
                    assert_eq!(
                        malcev_class(t, &lam).unwrap(),
                        fs_oracle(t, &lam).unwrap(),
                        "{t} {lam}"
                    );
                }
            }
        }
    }
}
