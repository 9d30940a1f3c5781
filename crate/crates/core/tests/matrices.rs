mod common;

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;

use liesq::matrixrep::{
    commutant_dimension, commutant_dimension_group, isotypic_profile, lie_closure,
    standard_generators, tensor_square, tensor_with_dual, Backend, ClassicalFamily,
    CommutantOptions, MatrixRep, ProfileOptions, DEFAULT_TOLERANCE,
};
use liesq::repdecomp::{dual_weight, tensor_decompose, two_norm};
use liesq::rootsys::weyl_dim;

#[test]
fn diagonal_counterexample_dims() {
    let a: &[i64] = &[1, 1, -2];
    let b: &[i64] = &[2, -1, -1];
    let h = diagonal(&[a]);
    let gg = diagonal(&[a, b]);
    let opts = CommutantOptions::exact();
    let dh = commutant_dimension(&tensor_square(&h), &opts)
        .unwrap()
        .dim
        .unwrap();
    let dg = commutant_dimension(&tensor_square(&gg), &opts)
        .unwrap()
        .dim
        .unwrap();
    assert_eq!(dh, diagonal_square_commutant(&[a]));
    assert_eq!(dg, diagonal_square_commutant(&[a, b]));
    assert_eq!((dh, dg), (33, 15));
}

#[test]
fn binary_tetrahedral_is_a_group() {
    let m = binary_tetrahedral();
    assert_eq!(m.len(), 24);
    for x in &m {
        for y in &m {
            let p = x.mul(y);
            assert!(m.contains(&p));
        }
    }
}

#[test]
fn binary_tetrahedral_group_commutant() {
    let m = binary_tetrahedral();
    let expected = character_average(&m);
    assert_eq!(expected, BigRational::from_integer(BigInt::from(2)));
    let got = commutant_dimension_group(&m, &CommutantOptions::exact()).unwrap();
    assert_eq!(got.dim, Some(2));
    // Agrees with the connected group it sits in.
    let su2 = standard_generators(ClassicalFamily::Su, 2).unwrap();
    let full = commutant_dimension(&tensor_square(&su2), &CommutantOptions::exact()).unwrap();
    assert_eq!(full.dim, Some(2));
}

fn cases() -> Vec<(ClassicalFamily, usize)> {
    use ClassicalFamily::*;
    vec![
        (Su, 2),
        (Su, 3),
        (Su, 4),
        (Su, 5),
        (So, 5),
        (So, 6),
        (So, 7),
        (Sp, 1),
        (Sp, 2),
        (Sp, 3),
    ]
}

#[test]
fn sp1_behaves_as_su2() {
    let r = standard_generators(ClassicalFamily::Sp, 1).unwrap();
    let d = commutant_dimension(&tensor_square(&r), &CommutantOptions::exact()).unwrap();
    assert_eq!(d.dim, Some(2));
}

#[test]
fn tensor_square_constants() {
    for (f, p) in cases()
        .into_iter()
        .filter(|c| *c != (ClassicalFamily::Sp, 1))
    {
        let r = standard_generators(f, p).unwrap();
        let d = commutant_dimension(&tensor_square(&r), &CommutantOptions::exact())
            .unwrap()
            .dim
            .unwrap();
        let want = if f == ClassicalFamily::Su { 2 } else { 3 };
        assert_eq!(d, want, "{f:?} {p}");
    }
}

#[test]
fn commutant_matches_weight_engine() {
    for (f, p) in cases() {
        let (t, w) = defining(f, p);
        let r = standard_generators(f, p).unwrap();
        let dual = dual_weight(t, &w).unwrap();
        let constructions = [
            (r.clone(), None),
            (
                tensor_square(&r),
                Some(tensor_decompose(&t.into(), &w, &w).unwrap()),
            ),
            (
                tensor_with_dual(&r),
                Some(tensor_decompose(&t.into(), &w, &dual).unwrap()),
            ),
        ];
        for (rep, dec) in constructions {
            let want = dec.as_ref().map_or(1, |d| two_norm(d) as usize);
            let got = commutant_dimension(&rep, &CommutantOptions::exact()).unwrap();
            assert_eq!(got.dim, Some(want), "{f:?} {p}");

            let prof = isotypic_profile(&rep, &ProfileOptions::default()).unwrap();
            let mut blocks: Vec<(usize, usize)> = match &dec {
                None => vec![(rep.dim(), 1)],
                Some(d) => d
                    .terms()
                    .iter()
                    .map(|(k, m)| (weyl_dim(t, k).unwrap() as usize, *m as usize))
                    .collect(),
            };
            blocks.sort_by(|a, b| b.cmp(a));
            let mut have = prof.blocks.clone();
            have.sort_by(|a, b| b.cmp(a));
            assert_eq!(have, blocks, "{f:?} {p}");
        }
    }
}

#[test]
fn float_agrees_with_exact_small() {
    for (f, p) in cases() {
        let r = standard_generators(f, p).unwrap();
        if r.dim() > 6 {
            continue;
        }
        for rep in [tensor_square(&r), tensor_with_dual(&r)] {
            let e = commutant_dimension(&rep, &CommutantOptions::exact()).unwrap();
            let x = commutant_dimension(&rep, &CommutantOptions::float()).unwrap();
            assert_eq!(x.dim, e.dim, "{f:?} {p}");
            assert!(x.gap.unwrap() > 1e3);
        }
    }
}

#[test]
fn float_input_is_analyzed_in_float() {
    let r = standard_generators(ClassicalFamily::Su, 3).unwrap();
    let fl = MatrixRep::float(r.float_generators()).unwrap();
    let d = commutant_dimension(&tensor_square(&fl), &CommutantOptions::default()).unwrap();
    assert_eq!(d.dim, Some(2));
}

#[test]
fn closure_grows_monotonically() {
    let r = standard_generators(ClassicalFamily::Su, 3).unwrap();
    let mut last = 0;
    for k in 1..=r.len() {
        let idx: Vec<usize> = (0..k).collect();
        let c = lie_closure(&r.subset(&idx).unwrap(), Backend::Exact, DEFAULT_TOLERANCE);
        assert!(c.dim >= last);
        assert!(c.dim <= 8);
        last = c.dim;
    }
    assert_eq!(last, 8);
}

#[test]
fn abelian_closures_differ_in_center_only() {
    // Both are abelian, so their semisimple parts agree (both zero) while
    // the tensor-square commutants do not.
    let a: &[i64] = &[1, 1, -2];
    let b: &[i64] = &[2, -1, -1];
    let ch = lie_closure(&diagonal(&[a]), Backend::Exact, DEFAULT_TOLERANCE);
    let cg = lie_closure(&diagonal(&[a, b]), Backend::Exact, DEFAULT_TOLERANCE);
    assert_eq!((ch.dim, cg.dim), (1, 2));
    let sh = liesq::matrixrep::split_reductive(&ch).unwrap();
    let sg = liesq::matrixrep::split_reductive(&cg).unwrap();
    assert_eq!((sh.semisimple_dim, sg.semisimple_dim), (0, 0));
}
