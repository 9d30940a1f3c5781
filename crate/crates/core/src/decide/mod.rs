//! Verdicts on whether a generator set spans a full compact Lie algebra,
//! from the dimension of its tensor-square commutant.

mod suite;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{GaussRat, Mat};
use crate::matrixrep::{
    commutant_dimension, lie_closure, split_reductive, symplectic_form, tensor_square, Backend,
    ClassicalFamily, CommutantOptions, CommutantResult, Generators, MatrixRep,
};
use crate::repdecomp::{adjoint_weight, is_self_dual, mult, tensor_decompose_simple};
use crate::rootsys::{SimpleType, Weight};

pub use suite::{closure_suite, SuiteCase, SuiteOptions, SuiteSummary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Full,
    Proper,
    Indeterminate,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Full => 0,
            Verdict::Proper => 1,
            Verdict::Indeterminate => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Full => "full",
            Verdict::Proper => "proper",
            Verdict::Indeterminate => "indeterminate",
        })
    }
}

/// Real dimension of the generated algebra against the full one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureCheck {
    pub dim: usize,
    pub full_dim: usize,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionReport {
    pub procedure: String,
    /// Complex dimension of the commutant of the tensor square.
    pub commutant_dim: Option<usize>,
    /// Value that certifies a full algebra.
    pub expected_dim: Option<usize>,
    pub verdict: Verdict,
    pub backend: Backend,
    pub tolerance: Option<f64>,
    pub gap: Option<f64>,
    pub seed: Option<u64>,
    pub closure: Option<ClosureCheck>,
    /// Real dimension of the parent's center, when it was computed.
    pub parent_center_dim: Option<usize>,
    pub notes: Vec<String>,
}

impl DecisionReport {
    fn from_commutant(procedure: &str, c: &CommutantResult, expected: Option<usize>) -> Self {
        DecisionReport {
            procedure: procedure.to_string(),
            commutant_dim: c.dim,
            expected_dim: expected,
            verdict: Verdict::Indeterminate,
            backend: c.backend,
            tolerance: c.tolerance,
            gap: c.gap,
            seed: None,
            closure: None,
            parent_center_dim: None,
            notes: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct DecideOptions {
    pub commutant: CommutantOptions,
    /// Also compute the Lie closure and compare.
    pub cross_check: bool,
    /// Skip the closure of the parent in [`equals_parent`] and take its
    /// semisimplicity (and the containment) on trust.
    pub assume_semisimple: bool,
}

fn exact_or_float_check(
    r: &MatrixRep,
    tol: f64,
    what: &str,
    fe: impl Fn(&Mat<GaussRat>) -> Mat<GaussRat>,
    ff: impl Fn(&Mat<num_complex::Complex64>) -> Mat<num_complex::Complex64>,
) -> Result<()> {
    let bad = match r.generators() {
        Generators::Exact(g) => g.iter().position(|m| !fe(m).is_zero_within(0.0)),
        Generators::Float(g) => g
            .iter()
            .position(|m| ff(m).frobenius_norm() > tol * m.frobenius_norm().max(1.0)),
    };
    match bad {
        Some(i) => Err(Error::Precondition(format!("generator {i} is not {what}"))),
        None => Ok(()),
    }
}

fn check_skew_hermitian(r: &MatrixRep, tol: f64) -> Result<()> {
    exact_or_float_check(
        r,
        tol,
        "skew-Hermitian",
        |m| m.add(&m.adjoint()),
        |m| m.add(&m.adjoint()),
    )
}

fn check_in_compact_form(
    family: ClassicalFamily,
    r: &MatrixRep,
    size: usize,
    tol: f64,
) -> Result<()> {
    if r.dim() != size {
        return Err(Error::Precondition(format!(
            "matrices are {0}x{0}, expected {size}x{size}",
            r.dim()
        )));
    }
    check_skew_hermitian(r, tol)?;
    match family {
        ClassicalFamily::Su => exact_or_float_check(
            r,
            tol,
            "traceless",
            |m| Mat::diag(vec![m.trace()]),
            |m| Mat::diag(vec![m.trace()]),
        ),
        ClassicalFamily::So => exact_or_float_check(
            r,
            tol,
            "antisymmetric",
            |m| m.add(&m.transpose()),
            |m| m.add(&m.transpose()),
        ),
        ClassicalFamily::Sp => {
            let j = symplectic_form(size / 2);
            let jf = j.to_c64();
            exact_or_float_check(
                r,
                tol,
                "symplectic",
                |m| m.transpose().mul(&j).add(&j.mul(m)),
                |m| m.transpose().mul(&jf).add(&jf.mul(m)),
            )
        }
    }
}

/// Real dimension of the full algebra `family(size)`.
pub fn full_dimension(family: ClassicalFamily, size: usize) -> usize {
    match family {
        ClassicalFamily::Su => size * size - 1,
        ClassicalFamily::So => size * (size - 1) / 2,
        ClassicalFamily::Sp => size * (size + 1) / 2,
    }
}

fn verdict_for(dim: Option<usize>, expected: usize, notes: &mut Vec<String>) -> Verdict {
    match dim {
        None => Verdict::Indeterminate,
        Some(d) if d == expected => Verdict::Full,
        Some(d) if d > expected => Verdict::Proper,
        Some(d) => {
            notes.push(format!(
                "commutant dimension {d} is below the lower bound {expected}"
            ));
            Verdict::Indeterminate
        }
    }
}

/// Test whether the generators span all of `family(size)` in its defining
/// representation (`size` is the matrix size; `2ℓ` for `sp(ℓ)`).
pub fn is_full(
    family: ClassicalFamily,
    r: &MatrixRep,
    size: usize,
    opts: &DecideOptions,
) -> Result<DecisionReport> {
    let expected = match family {
        ClassicalFamily::Su if size >= 2 => 2,
        ClassicalFamily::So if size >= 5 => 3,
        ClassicalFamily::Sp if size >= 4 && size % 2 == 0 => 3,
        _ => {
            return Err(Error::Precondition(format!(
                "{family} test needs {}",
                match family {
                    ClassicalFamily::Su => "n ≥ 2",
                    ClassicalFamily::So => "k ≥ 5",
                    ClassicalFamily::Sp => "ℓ ≥ 2",
                }
            )))
        }
    };
    check_in_compact_form(family, r, size, opts.commutant.tolerance)?;
    let c = commutant_dimension(&tensor_square(r), &opts.commutant)?;
    let name = match family {
        ClassicalFamily::Sp => format!("is_full_sp({})", size / 2),
        _ => format!("is_full_{family}({size})"),
    };
    let mut rep = DecisionReport::from_commutant(&name, &c, Some(expected));
    rep.verdict = verdict_for(c.dim, expected, &mut rep.notes);
    if opts.cross_check {
        let cl = lie_closure(r, c.backend, opts.commutant.tolerance);
        let full_dim = full_dimension(family, size);
        let agrees = match rep.verdict {
            Verdict::Full => cl.dim == full_dim,
            Verdict::Proper => cl.dim < full_dim,
            Verdict::Indeterminate => true,
        };
        rep.closure = Some(ClosureCheck {
            dim: cl.dim,
            full_dim,
            agrees,
        });
    }
    Ok(rep)
}

pub fn is_full_su(r: &MatrixRep, n: usize, opts: &DecideOptions) -> Result<DecisionReport> {
    is_full(ClassicalFamily::Su, r, n, opts)
}

pub fn is_full_so(r: &MatrixRep, k: usize, opts: &DecideOptions) -> Result<DecisionReport> {
    is_full(ClassicalFamily::So, r, k, opts)
}

pub fn is_full_sp(r: &MatrixRep, l: usize, opts: &DecideOptions) -> Result<DecisionReport> {
    is_full(ClassicalFamily::Sp, r, 2 * l, opts)
}

/// Compare the algebra generated by `h` with the one generated by `g`,
/// assuming `h` lies inside `g`.
///
/// Unequal tensor-square commutant dimensions always prove the inclusion
/// proper. Equal dimensions prove equality only when the parent is
/// semisimple; with a nonzero center they show equal semisimple parts and
/// the verdict stays indeterminate.
pub fn equals_parent(h: &MatrixRep, g: &MatrixRep, opts: &DecideOptions) -> Result<DecisionReport> {
    if h.dim() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{} against {}",
            h.dim(),
            g.dim()
        )));
    }
    let tol = opts.commutant.tolerance;
    let mut notes = Vec::new();
    let center;
    let mut closure = None;
    if opts.assume_semisimple {
        notes.push("parent semisimplicity and containment asserted by caller".into());
        center = Some(0);
    } else {
        let backend = if g.is_exact() && h.is_exact() {
            Backend::Exact
        } else {
            Backend::Float
        };
        let cl = lie_closure(g, backend, tol);
        for i in 0..h.len() {
            if !cl.contains(&h.subset(&[i])?) {
                return Err(Error::NotContained(i));
            }
        }
        let split = split_reductive(&cl)?;
        center = Some(split.center_dim);
        if opts.cross_check {
            let hc = lie_closure(h, backend, tol);
            closure = Some((hc.dim, cl.dim));
        }
    }
    let ch = commutant_dimension(&tensor_square(h), &opts.commutant)?;
    let cg = commutant_dimension(&tensor_square(g), &opts.commutant)?;
    let mut rep = DecisionReport::from_commutant("equals_parent", &ch, cg.dim);
    rep.gap = match (ch.gap, cg.gap) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    rep.parent_center_dim = center;
    rep.verdict = match (ch.dim, cg.dim) {
        (Some(a), Some(b)) if a != b => Verdict::Proper,
        (Some(_), Some(_)) if center == Some(0) => Verdict::Full,
        (Some(_), Some(_)) => {
            notes.push("equal commutants: semisimple parts agree, centers not compared".into());
            Verdict::Indeterminate
        }
        _ => Verdict::Indeterminate,
    };
    if let Some((dh, dg)) = closure {
        let agrees = match rep.verdict {
            Verdict::Full => dh == dg,
            Verdict::Proper => dh < dg,
            Verdict::Indeterminate => true,
        };
        rep.closure = Some(ClosureCheck {
            dim: dh,
            full_dim: dg,
            agrees,
        });
    }
    rep.notes.extend(notes);
    Ok(rep)
}

/// Adjoint multiplicity in the tensor square of a self-dual irreducible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapBound {
    /// Number of nonzero Dynkin labels.
    pub b: usize,
    pub adjoint_multiplicity: u64,
    pub holds: bool,
}

/// Check that the adjoint occurs in `V(λ)⊗V(λ)` exactly as many times as
/// `λ` has nonzero labels.
pub fn gap_bound_check(t: SimpleType, lambda: &Weight) -> Result<GapBound> {
    if !is_self_dual(t, lambda)? {
        return Err(Error::NotSelfDual(lambda.clone()));
    }
    let b = lambda.0.iter().filter(|&&x| x != 0).count();
    let d = crate::repdecomp::Decomposition::new(
        t.into(),
        tensor_decompose_simple(t, lambda, lambda)?,
    )?;
    let m = mult(&d, &adjoint_weight(t));
    Ok(GapBound {
        b,
        adjoint_multiplicity: m,
        holds: m == b as u64,
    })
}

/// Numeric side of the gap bound: for `h` a proper subalgebra of `g`,
/// `dim com(h⊗h) ≥ b² + dim com(g⊗g)`. `None` when either side is
/// indeterminate.
pub fn gap_bound_numeric(
    h: &MatrixRep,
    g: &MatrixRep,
    b: usize,
    opts: &CommutantOptions,
) -> Result<Option<bool>> {
    let ch = commutant_dimension(&tensor_square(h), opts)?;
    let cg = commutant_dimension(&tensor_square(g), opts)?;
    Ok(match (ch.dim, cg.dim) {
        (Some(x), Some(y)) => Some(x >= b * b + y),
        _ => None,
    })
}
