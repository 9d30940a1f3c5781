use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{full_dimension, is_full, DecideOptions, Verdict};
use crate::error::Result;
use crate::linalg::{GaussRat, Mat};
use crate::matrixrep::{
    commutant_dimension, isotypic_profile, lie_closure, standard_generators, tensor_with_dual,
    Backend, ClassicalFamily, CommutantOptions, MatrixRep, ProfileOptions,
};
use crate::par::{self, Execution};

const ALGEBRAS: [(ClassicalFamily, usize); 4] = [
    (ClassicalFamily::Su, 3),
    (ClassicalFamily::Su, 4),
    (ClassicalFamily::So, 5),
    (ClassicalFamily::Sp, 2),
];

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub cases: usize,
    pub seed: u64,
    pub exec: Execution,
    /// Also run the float backend on every case.
    pub float: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            cases: 120,
            seed: 7,
            exec: Execution::default(),
            float: true,
        }
    }
}

/// One random generator set and everything computed about it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteCase {
    pub index: usize,
    pub seed: u64,
    pub algebra: String,
    /// Basis elements drawn from the standard basis.
    pub picks: Vec<usize>,
    /// Whether the generators are random integer combinations of the picks.
    pub combined: bool,
    pub closure_dim: usize,
    pub full_dim: usize,
    pub exact_verdict: Verdict,
    pub exact_dim: Option<usize>,
    pub float_verdict: Option<Verdict>,
    pub float_dim: Option<usize>,
    /// Commutant dimension of `φ⊗φ̄` for the same generators.
    pub dual_dim: Option<usize>,
    pub one_norm: Option<usize>,
    pub parent_one_norm: usize,
}

impl SuiteCase {
    fn oracle(&self) -> Verdict {
        if self.closure_dim == self.full_dim {
            Verdict::Full
        } else {
            Verdict::Proper
        }
    }

    pub fn exact_agrees(&self) -> bool {
        self.exact_verdict == Verdict::Indeterminate || self.exact_verdict == self.oracle()
    }

    pub fn float_wrong(&self) -> bool {
        matches!(self.float_verdict, Some(v) if v != Verdict::Indeterminate && v != self.oracle())
    }

    /// `φ⊗φ` and `φ⊗φ̄` have commutants of equal dimension.
    pub fn dual_agrees(&self) -> bool {
        self.dual_dim == self.exact_dim
    }

    /// Proper cases: more components than the parent, and a commutant
    /// at least one larger.
    pub fn norms_ok(&self) -> bool {
        if self.exact_verdict != Verdict::Proper {
            return true;
        }
        let expected = self.parent_one_norm;
        self.one_norm.is_none_or(|n| n > expected) && self.exact_dim.is_some_and(|d| d > expected)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub cases: usize,
    pub full: usize,
    pub proper: usize,
    pub exact_indeterminate: usize,
    pub exact_disagreements: usize,
    pub float_indeterminate: usize,
    pub float_wrong: usize,
    pub dual_mismatches: usize,
    pub norm_violations: usize,
}

impl SuiteSummary {
    pub fn of(cases: &[SuiteCase]) -> Self {
        let count = |f: &dyn Fn(&SuiteCase) -> bool| cases.iter().filter(|c| f(c)).count();
        SuiteSummary {
            cases: cases.len(),
            full: count(&|c| c.exact_verdict == Verdict::Full),
            proper: count(&|c| c.exact_verdict == Verdict::Proper),
            exact_indeterminate: count(&|c| c.exact_verdict == Verdict::Indeterminate),
            exact_disagreements: count(&|c| !c.exact_agrees()),
            float_indeterminate: count(&|c| c.float_verdict == Some(Verdict::Indeterminate)),
            float_wrong: count(&|c| c.float_wrong()),
            dual_mismatches: count(&|c| !c.dual_agrees()),
            norm_violations: count(&|c| !c.norms_ok()),
        }
    }

    pub fn passed(&self) -> bool {
        self.exact_disagreements == 0
            && self.float_wrong == 0
            && self.dual_mismatches == 0
            && self.norm_violations == 0
    }
}

fn draw(rng: &mut ChaCha8Rng, basis: &[Mat<GaussRat>]) -> (Vec<usize>, bool, Vec<Mat<GaussRat>>) {
    let size = rng.random_range(1..=4usize.min(basis.len()));
    let mut picks: Vec<usize> = rand::seq::index::sample(rng, basis.len(), size).into_vec();
    picks.sort_unstable();
    let combined = rng.random_bool(0.5);
    if !combined {
        return (
            picks.clone(),
            false,
            picks.iter().map(|&i| basis[i].clone()).collect(),
        );
    }
    let count = rng.random_range(1..=3usize);
    let mut gens = Vec::new();
    while gens.len() < count {
        let n = basis[0].rows();
        let mut m = Mat::zeros(n, n);
        for &i in &picks {
            let c = rng.random_range(-2..=2i64);
            m = m.add(&basis[i].scale(&GaussRat::from_ints(c, 0)));
        }
        if !m.is_zero_within(0.0) {
            gens.push(m);
        }
    }
    (picks, true, gens)
}

fn run_case(index: usize, seed: u64, float: bool) -> Result<SuiteCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (family, param) = ALGEBRAS[index % ALGEBRAS.len()];
    let full = standard_generators(family, param)?;
    let size = full.dim();
    let basis = full
        .exact_generators()
        .expect("standard generators are exact");
    let (picks, combined, gens) = draw(&mut rng, basis);
    let r = MatrixRep::exact(gens)?;
    let exact = DecideOptions {
        commutant: CommutantOptions {
            exec: Execution::Sequential,
            ..CommutantOptions::exact()
        },
        ..Default::default()
    };
    let er = is_full(family, &r, size, &exact)?;
    let (float_verdict, float_dim) = if float {
        let fo = DecideOptions {
            commutant: CommutantOptions {
                exec: Execution::Sequential,
                ..CommutantOptions::float()
            },
            ..Default::default()
        };
        let fr = is_full(family, &MatrixRep::float(r.float_generators())?, size, &fo)?;
        (Some(fr.verdict), fr.commutant_dim)
    } else {
        (None, None)
    };
    let dual_dim = commutant_dimension(&tensor_with_dual(&r), &exact.commutant)?.dim;
    let one_norm = if er.verdict == Verdict::Proper {
        let p = isotypic_profile(
            &crate::matrixrep::tensor_square(&r),
            &ProfileOptions {
                seed,
                commutant: exact.commutant,
                ..Default::default()
            },
        )?;
        p.one_norm
    } else {
        None
    };
    let parent_one_norm = if family == ClassicalFamily::Su { 2 } else { 3 };
    Ok(SuiteCase {
        index,
        seed,
        algebra: format!("{family}{param}"),
        picks,
        combined,
        closure_dim: lie_closure(&r, Backend::Exact, 0.0).dim,
        full_dim: full_dimension(family, size),
        exact_verdict: er.verdict,
        exact_dim: er.commutant_dim,
        float_verdict,
        float_dim,
        dual_dim,
        one_norm,
        parent_one_norm,
    })
}

/// Random generator subsets of `su(3)`, `su(4)`, `so(5)` and `sp(2)`,
/// decided by the commutant test and by the Lie closure. Case seeds are
/// drawn from the master seed, so results do not depend on scheduling.
pub fn closure_suite(opts: &SuiteOptions) -> Result<Vec<SuiteCase>> {
    let mut master = ChaCha8Rng::seed_from_u64(opts.seed);
    let seeds: Vec<(usize, u64)> = (0..opts.cases).map(|i| (i, master.next_u64())).collect();
    par::map(opts.exec, &seeds, |&(i, s)| run_case(i, s, opts.float))
        .into_iter()
        .collect()
}
