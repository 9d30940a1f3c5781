#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;

use liesq::linalg::{GaussRat, Mat};
use liesq::matrixrep::{ClassicalFamily, MatrixRep};
use liesq::rootsys::{SimpleType, Weight};

pub fn g(re: i64, im: i64) -> GaussRat {
    GaussRat::from_ints(re, im)
}

pub fn golden(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

/// Highest weight of the defining representation, for the weight engine.
pub fn defining(family: ClassicalFamily, param: usize) -> (SimpleType, Weight) {
    let (t, l) = match family {
        ClassicalFamily::Su => (SimpleType::a(param - 1), param - 1),
        ClassicalFamily::So if param % 2 == 1 => (SimpleType::b(param / 2), param / 2),
        ClassicalFamily::So => (SimpleType::d(param / 2), param / 2),
        ClassicalFamily::Sp => (SimpleType::c(param), param),
    };
    let mut w = vec![0; l];
    w[0] = 1;
    (t, Weight(w))
}

/// Diagonal generators with integer entries.
pub fn diagonal(entries: &[&[i64]]) -> MatrixRep {
    MatrixRep::exact(
        entries
            .iter()
            .map(|d| Mat::diag(d.iter().map(|&x| g(x, 0)).collect()))
            .collect(),
    )
    .unwrap()
}

/// Commutant dimension of `A⊗1 + 1⊗A` over commuting diagonal `A`s: the sum
/// of squared multiplicities of the joint eigenvalues.
pub fn diagonal_square_commutant(entries: &[&[i64]]) -> usize {
    let n = entries[0].len();
    let mut counts: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let key: Vec<i64> = entries.iter().map(|d| d[i] + d[j]).collect();
            *counts.entry(key).or_default() += 1;
        }
    }
    counts.values().map(|m| m * m).sum()
}

/// The binary tetrahedral group in SU(2): `±1, ±D, ±J, ±K` and the sixteen
/// `½(±1 ± D ± J ± K)`.
pub fn binary_tetrahedral() -> Vec<Mat<GaussRat>> {
    let one = Mat::from_rows(vec![vec![g(1, 0), g(0, 0)], vec![g(0, 0), g(1, 0)]]).unwrap();
    let d = Mat::from_rows(vec![vec![g(0, 1), g(0, 0)], vec![g(0, 0), g(0, -1)]]).unwrap();
    let j = Mat::from_rows(vec![vec![g(0, 0), g(-1, 0)], vec![g(1, 0), g(0, 0)]]).unwrap();
    let k = Mat::from_rows(vec![vec![g(0, 0), g(0, 1)], vec![g(0, 1), g(0, 0)]]).unwrap();
    let mut out = Vec::new();
    for m in [&one, &d, &j, &k] {
        out.push(m.clone());
        out.push(m.neg());
    }
    let half = GaussRat::from_fracs(1, 2, 0, 1).unwrap();
    for signs in 0..16u32 {
        let s = |b: u32, m: &Mat<GaussRat>| {
            if signs >> b & 1 == 1 {
                m.neg()
            } else {
                m.clone()
            }
        };
        out.push(
            s(0, &one)
                .add(&s(1, &d))
                .add(&s(2, &j))
                .add(&s(3, &k))
                .scale(&half),
        );
    }
    out
}

/// `dim com{U⊗U} = (1/|H|) Σ |tr U|⁴` for a finite group `H`.
pub fn character_average(us: &[Mat<GaussRat>]) -> BigRational {
    let mut acc = BigRational::from_integer(BigInt::from(0));
    for u in us {
        let n2 = u.trace().norm_sqr();
        acc += &n2 * &n2;
    }
    acc / BigRational::from_integer(BigInt::from(us.len()))
}

/// `C(n, k)` for small arguments.
pub fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// A closed-form row of the irreducible-square classification.
pub struct TableRow {
    pub name: &'static str,
    pub ranks: std::ops::RangeInclusive<usize>,
    pub family: fn(usize) -> SimpleType,
    pub weight: fn(usize) -> Weight,
    pub dim: fn(usize) -> u128,
    pub square: fn(usize) -> Weight,
    pub square_dim: fn(usize) -> u128,
}

fn unit(l: usize, pos: &[(usize, i64)]) -> Weight {
    let mut w = vec![0; l];
    for &(p, v) in pos {
        w[p - 1] = v;
    }
    Weight(w)
}

/// Rows whose alternating square is irreducible, up to rank `max`.
pub fn alt_rows(max: usize) -> Vec<TableRow> {
    vec![
        TableRow {
            name: "so(2l+1) vector",
            ranks: 3..=max,
            family: SimpleType::b,
            weight: |l| unit(l, &[(1, 1)]),
            dim: |l| 2 * l as u128 + 1,
            square: |l| unit(l, &[(2, 1)]),
            square_dim: |l| (2 * l as u128 + 1) * l as u128,
        },
        TableRow {
            name: "so5 vector",
            ranks: 2..=2,
            family: SimpleType::b,
            weight: |_| Weight(vec![1, 0]),
            dim: |_| 5,
            square: |_| Weight(vec![0, 2]),
            square_dim: |_| 10,
        },
        TableRow {
            name: "so(2l) vector",
            ranks: 4..=max,
            family: SimpleType::d,
            weight: |l| unit(l, &[(1, 1)]),
            dim: |l| 2 * l as u128,
            square: |l| unit(l, &[(2, 1)]),
            square_dim: |l| (2 * l as u128 - 1) * l as u128,
        },
        TableRow {
            name: "so6 vector",
            ranks: 3..=3,
            family: SimpleType::d,
            weight: |_| Weight(vec![1, 0, 0]),
            dim: |_| 6,
            square: |_| Weight(vec![0, 1, 1]),
            square_dim: |_| 15,
        },
        TableRow {
            name: "su(l+1) second exterior",
            ranks: 3..=max,
            family: SimpleType::a,
            weight: |l| unit(l, &[(2, 1)]),
            dim: |l| (l * (l + 1) / 2) as u128,
            square: |l| unit(l, &[(1, 1), (3, 1)]),
            square_dim: |l| 3 * binom(l as u128 + 2, 4),
        },
        TableRow {
            name: "su(l+1) symmetric square",
            ranks: 2..=max,
            family: SimpleType::a,
            weight: |l| unit(l, &[(1, 2)]),
            dim: |l| ((l + 1) * (l + 2) / 2) as u128,
            square: |l| unit(l, &[(1, 2), (2, 1)]),
            square_dim: |l| 3 * binom(l as u128 + 3, 4),
        },
        TableRow {
            name: "su2 adjoint",
            ranks: 1..=1,
            family: SimpleType::a,
            weight: |_| Weight(vec![2]),
            dim: |_| 3,
            square: |_| Weight(vec![2]),
            square_dim: |_| 3,
        },
        TableRow {
            name: "so10 spinor",
            ranks: 5..=5,
            family: SimpleType::d,
            weight: |_| Weight(vec![0, 0, 0, 1, 0]),
            dim: |_| 16,
            square: |_| Weight(vec![0, 0, 1, 0, 0]),
            square_dim: |_| 120,
        },
        TableRow {
            name: "e6 minimal",
            ranks: 6..=6,
            family: |_| "e6".parse().unwrap(),
            weight: |_| Weight(vec![1, 0, 0, 0, 0, 0]),
            dim: |_| 27,
            square: |_| Weight(vec![0, 0, 1, 0, 0, 0]),
            square_dim: |_| 351,
        },
        TableRow {
            name: "su(l+1) defining",
            ranks: 2..=max,
            family: SimpleType::a,
            weight: |l| unit(l, &[(1, 1)]),
            dim: |l| l as u128 + 1,
            square: |l| unit(l, &[(2, 1)]),
            square_dim: |l| (l * (l + 1) / 2) as u128,
        },
        TableRow {
            name: "su2 defining",
            ranks: 1..=1,
            family: SimpleType::a,
            weight: |_| Weight(vec![1]),
            dim: |_| 2,
            square: |_| Weight(vec![0]),
            square_dim: |_| 1,
        },
    ]
}

/// Rows whose symmetric square is irreducible, up to rank `max`.
pub fn sym_rows(max: usize) -> Vec<TableRow> {
    vec![
        TableRow {
            name: "sp(l) defining",
            ranks: 1..=max,
            family: SimpleType::c,
            weight: |l| unit(l, &[(1, 1)]),
            dim: |l| 2 * l as u128,
            square: |l| unit(l, &[(1, 2)]),
            square_dim: |l| (2 * l as u128 + 1) * l as u128,
        },
        TableRow {
            name: "su(l+1) defining",
            ranks: 1..=max,
            family: SimpleType::a,
            weight: |l| unit(l, &[(1, 1)]),
            dim: |l| l as u128 + 1,
            square: |l| unit(l, &[(1, 2)]),
            square_dim: |l| ((l + 1) * (l + 2) / 2) as u128,
        },
    ]
}
