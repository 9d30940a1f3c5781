//! One line per acceptance criterion. Runs as a plain binary so the lines
//! show up in `cargo test` output; exits non-zero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;

use liesq::checks::{run_check, CheckKind, CheckOptions};
use liesq::cli::tables_text;
use liesq::decide::{closure_suite, SuiteOptions, SuiteSummary};
use liesq::matrixrep::{
    commutant_dimension, commutant_dimension_group, isotypic_profile, standard_generators,
    tensor_square, tensor_with_dual, ClassicalFamily, CommutantOptions, ProfileOptions,
};
use liesq::par::Execution;
use liesq::repdecomp::{
    alt_square, dual_weight, non_self_dual, scan_tables_with, sym_square, tensor_decompose,
    two_norm, SquareKind,
};
use liesq::rootsys::weyl_dim;

/// Time budgets, generous relative to measured runtimes.
const BUDGET_CONSTANTS: Duration = Duration::from_secs(60);
const BUDGET_TABLES: Duration = Duration::from_secs(300);
const BUDGET_SUITE: Duration = Duration::from_secs(600);
const SUITE_CASES: usize = 120;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn constants() -> Outcome {
    use ClassicalFamily::*;
    let start = Instant::now();
    let cases = [
        (Su, 2, 2),
        (Su, 3, 2),
        (Su, 4, 2),
        (Su, 5, 2),
        (So, 5, 3),
        (So, 6, 3),
        (So, 7, 3),
        (Sp, 2, 3),
        (Sp, 3, 3),
    ];
    for (f, p, want) in cases {
        let r = standard_generators(f, p).map_err(|e| e.to_string())?;
        let got = commutant_dimension(&tensor_square(&r), &CommutantOptions::exact())
            .map_err(|e| e.to_string())?;
        ensure(got.dim == Some(want), || {
            format!("{f:?}({p}): {:?}, want {want}", got.dim)
        })?;
    }
    let el = start.elapsed();
    ensure(el < BUDGET_CONSTANTS, || format!("took {el:.1?}"))?;
    Ok(format!("9 algebras exact, {el:.2?}"))
}

fn diagonal_example() -> Outcome {
    let a: &[i64] = &[1, 1, -2];
    let b: &[i64] = &[2, -1, -1];
    let opts = CommutantOptions::exact();
    let dh = commutant_dimension(&tensor_square(&diagonal(&[a])), &opts)
        .map_err(|e| e.to_string())?
        .dim;
    let dg = commutant_dimension(&tensor_square(&diagonal(&[a, b])), &opts)
        .map_err(|e| e.to_string())?
        .dim;
    let oracle = (
        diagonal_square_commutant(&[a]),
        diagonal_square_commutant(&[a, b]),
    );
    ensure((dh, dg) == (Some(33), Some(15)), || {
        format!("got {dh:?}/{dg:?}")
    })?;
    ensure(oracle == (33, 15), || {
        format!("eigenvalue count {oracle:?}")
    })?;
    Ok("33/15".into())
}

fn group_design() -> Outcome {
    let m = binary_tetrahedral();
    let avg = character_average(&m);
    ensure(avg == BigRational::from_integer(BigInt::from(2)), || {
        format!("character average {avg}")
    })?;
    let d = commutant_dimension_group(&m, &CommutantOptions::exact())
        .map_err(|e| e.to_string())?
        .dim;
    ensure(d == Some(2), || format!("got {d:?}"))?;
    Ok(format!("{} matrices, dim 2", m.len()))
}

fn tables() -> Outcome {
    let start = Instant::now();
    let mut rows = 0;
    for (kind, file, nsd) in [
        (SquareKind::Alt, "alt.tsv", false),
        (SquareKind::Sym, "sym.tsv", false),
        (SquareKind::Alt, "alt_non_self_dual.tsv", true),
        (SquareKind::Sym, "sym_non_self_dual.tsv", true),
    ] {
        let scan = scan_tables_with(Execution::default(), kind, 8, 3).map_err(|e| e.to_string())?;
        let text = tables_text(&if nsd { non_self_dual(scan) } else { scan });
        ensure(text == golden(file), || format!("{file} differs"))?;
        rows += text.lines().count() - 1;
    }
    let el = start.elapsed();
    ensure(el < BUDGET_TABLES, || format!("took {el:.1?}"))?;
    Ok(format!("{rows} rows across 4 golden files, {el:.2?}"))
}

fn dimensions() -> Outcome {
    let mut n = 0;
    for (rows, sq) in [
        (alt_rows(12), alt_square as fn(_, &_) -> _),
        (sym_rows(12), sym_square),
    ] {
        for row in rows {
            for l in row.ranks.clone() {
                let t = (row.family)(l);
                let w = (row.weight)(l);
                let s = (row.square)(l);
                let d = weyl_dim(t, &w).map_err(|e| e.to_string())?;
                let ds = weyl_dim(t, &s).map_err(|e| e.to_string())?;
                ensure(d == (row.dim)(l) && ds == (row.square_dim)(l), || {
                    format!("{} l={l}: {d}/{ds}", row.name)
                })?;
                let dec = sq(t, &w).map_err(|e| e.to_string())?;
                ensure(
                    dec.terms().len() == 1 && dec.terms().get(&s) == Some(&1),
                    || format!("{} l={l}: square is {dec}", row.name),
                )?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} rows up to rank 12"))
}

fn oracle_equivalence() -> Outcome {
    use ClassicalFamily::*;
    let mut n = 0;
    for (f, p) in [
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
    ] {
        let (t, w) = defining(f, p);
        let r = standard_generators(f, p).map_err(|e| e.to_string())?;
        let dual = dual_weight(t, &w).map_err(|e| e.to_string())?;
        let g = t.into();
        let built = [
            (r.clone(), None),
            (
                tensor_square(&r),
                Some(tensor_decompose(&g, &w, &w).map_err(|e| e.to_string())?),
            ),
            (
                tensor_with_dual(&r),
                Some(tensor_decompose(&g, &w, &dual).map_err(|e| e.to_string())?),
            ),
        ];
        for (rep, dec) in built {
            let want = dec.as_ref().map_or(1, |d| two_norm(d) as usize);
            let e =
                commutant_dimension(&rep, &CommutantOptions::exact()).map_err(|e| e.to_string())?;
            let x =
                commutant_dimension(&rep, &CommutantOptions::float()).map_err(|e| e.to_string())?;
            ensure(e.dim == Some(want), || {
                format!("{f:?}({p}) d={}: exact {:?}, want {want}", rep.dim(), e.dim)
            })?;
            ensure(x.dim == Some(want), || {
                format!("{f:?}({p}) d={}: float {:?}, want {want}", rep.dim(), x.dim)
            })?;
            let mut blocks: Vec<(usize, usize)> = match &dec {
                None => vec![(rep.dim(), 1)],
                Some(d) => d
                    .terms()
                    .iter()
                    .map(|(k, m)| (weyl_dim(t, k).unwrap() as usize, *m as usize))
                    .collect(),
            };
            blocks.sort_by(|a, b| b.cmp(a));
            let prof =
                isotypic_profile(&rep, &ProfileOptions::default()).map_err(|e| e.to_string())?;
            ensure(prof.blocks == blocks, || {
                format!("{f:?}({p}): profile {:?}, want {blocks:?}", prof.blocks)
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} representations, exact and float"))
}

fn property_suites() -> Outcome {
    let opts = CheckOptions {
        max_rank: 4,
        max_sum: 2,
        spot: true,
        exec: Execution::default(),
    };
    let mut cases = 0;
    for kind in CheckKind::ALL {
        let rep = run_check(kind, &opts).map_err(|e| e.to_string())?;
        ensure(rep.passed(), || {
            format!(
                "{}: {} violations, first {:?}",
                kind.name(),
                rep.violations.len(),
                rep.violations.first()
            )
        })?;
        cases += rep.cases;
    }
    Ok(format!(
        "{} sweeps, {cases} cases, 0 violations",
        CheckKind::ALL.len()
    ))
}

fn closure_agreement() -> Outcome {
    let start = Instant::now();
    let cases = closure_suite(&SuiteOptions {
        cases: SUITE_CASES,
        ..Default::default()
    })
    .map_err(|e| e.to_string())?;
    let s = SuiteSummary::of(&cases);
    let el = start.elapsed();
    ensure(s.cases >= 100, || format!("only {} cases", s.cases))?;
    ensure(s.passed(), || format!("{s:?}"))?;
    ensure(el < BUDGET_SUITE, || format!("took {el:.1?}"))?;
    Ok(format!(
        "{} cases ({} full, {} proper), {} float indeterminate, 0 disagreements, {el:.1?}",
        s.cases, s.full, s.proper, s.float_indeterminate
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("commutant constants", constants),
        ("diagonal counterexample", diagonal_example),
        ("group design", group_design),
        ("table regeneration", tables),
        ("dimension spot checks", dimensions),
        ("weight-vs-matrix oracle", oracle_equivalence),
        ("property suites", property_suites),
        ("decision vs closure", closure_agreement),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {} PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
