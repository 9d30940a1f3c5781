//! Bounded sweeps of identities relating the weight engine, the matrix
//! engine and the representation-type rules.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynkin::{guaranteed_constituents, subdiagram, subordinate};
use crate::error::{Error, Result};
use crate::matrixrep::{
    dual_rep, partial_transpose_check, standard_generators, tensor_square, ClassicalFamily,
    CommutantOptions, MatrixRep,
};
use crate::par::{self, Execution};
use crate::repdecomp::{
    adjoint_weight, alt_square, alt_square_adams, dual_weight, is_self_dual, mult, one_norm,
    square, sym_square, sym_square_adams, tensor_decompose, tensor_decompose_simple, two_norm,
    weights_in_box, Decomposition, SquareKind,
};
use crate::reptype::{fs_oracle, malcev_class};
use crate::rootsys::{root_data, Family, SemisimpleAlgebra, SimpleType, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    /// `‖λ⊗μ‖₁ = ‖λ⊗μ̄‖₁`.
    Cz,
    /// `‖λ⊗μ‖₂ = ‖λ⊗μ̄‖₂`.
    TwoNorm,
    /// Adjoint multiplicity in `λ⊗λ` equals the number of nonzero labels.
    Kw,
    MalcevFs,
    /// `Alt² ⊕ Sym² = λ⊗λ`, and both square routes agree.
    AltSym,
    Constituents,
    Subordination,
    Parts,
    /// Partial transpose identity on explicit matrices.
    Ptranspose,
}

impl CheckKind {
    pub const ALL: [CheckKind; 9] = [
        CheckKind::Cz,
        CheckKind::TwoNorm,
        CheckKind::Kw,
        CheckKind::MalcevFs,
        CheckKind::AltSym,
        CheckKind::Constituents,
        CheckKind::Subordination,
        CheckKind::Parts,
        CheckKind::Ptranspose,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Cz => "cz",
            CheckKind::TwoNorm => "two-norm",
            CheckKind::Kw => "kw",
            CheckKind::MalcevFs => "malcev-fs",
            CheckKind::AltSym => "alt-sym",
            CheckKind::Constituents => "constituents",
            CheckKind::Subordination => "subordination",
            CheckKind::Parts => "parts",
            CheckKind::Ptranspose => "ptranspose",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for CheckKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown check `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub kind: CheckKind,
    pub cases: usize,
    pub violations: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    pub max_rank: usize,
    pub max_sum: u32,
    /// Add the fixed list of higher-rank cases.
    pub spot: bool,
    pub exec: Execution,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            max_rank: 4,
            max_sum: 2,
            spot: false,
            exec: Execution::default(),
        }
    }
}

/// Fundamental weights checked beyond the exhaustive box.
pub fn spot_cases() -> Vec<(SimpleType, Weight)> {
    let fw = |t: SimpleType, j: usize| {
        let mut v = vec![0; t.rank()];
        v[j - 1] = 1;
        (t, Weight(v))
    };
    let ex = |f| SimpleType::exceptional(f).expect("exceptional type");
    vec![
        fw(ex(Family::E6), 1),
        fw(ex(Family::E6), 2),
        fw(ex(Family::E7), 7),
        fw(ex(Family::E8), 8),
        fw(SimpleType::b(8), 8),
        fw(SimpleType::d(8), 8),
        fw(SimpleType::d(7), 7),
        fw(SimpleType::a(8), 1),
        fw(SimpleType::a(7), 4),
        fw(SimpleType::c(8), 1),
        fw(ex(Family::F4), 4),
        fw(ex(Family::G2), 1),
    ]
}

fn box_cases(opts: &CheckOptions) -> Vec<(SimpleType, Weight)> {
    let mut out: Vec<(SimpleType, Weight)> = SimpleType::all_up_to_rank(opts.max_rank)
        .into_iter()
        .flat_map(|t| {
            weights_in_box(t.rank(), opts.max_sum as i64)
                .into_iter()
                .map(move |w| (t, w))
        })
        .collect();
    if opts.spot {
        out.extend(spot_cases());
    }
    out
}

/// Ordered pairs `(λ, μ)` in the box with `λ ≤ μ`, per type.
fn pair_cases(opts: &CheckOptions) -> Vec<(SimpleType, Weight, Weight)> {
    let mut out = Vec::new();
    for t in SimpleType::all_up_to_rank(opts.max_rank) {
        let ws = weights_in_box(t.rank(), opts.max_sum as i64);
        for (i, l) in ws.iter().enumerate() {
            for m in &ws[i..] {
                out.push((t, l.clone(), m.clone()));
            }
        }
    }
    if opts.spot {
        out.extend(spot_cases().into_iter().map(|(t, w)| (t, w.clone(), w)));
    }
    out
}

fn decomposition(t: SimpleType, l: &Weight, m: &Weight) -> Result<Decomposition> {
    Decomposition::new(t.into(), tensor_decompose_simple(t, l, m)?)
}

type Outcome = Result<Option<String>>;

fn sweep<T: Sync>(
    kind: CheckKind,
    items: &[T],
    exec: Execution,
    f: impl Fn(&T) -> Outcome + Sync + Send,
) -> Result<CheckReport> {
    let results = par::map(exec, items, f);
    let mut violations = Vec::new();
    for r in results {
        if let Some(v) = r? {
            violations.push(v);
        }
    }
    Ok(CheckReport {
        kind,
        cases: items.len(),
        violations,
    })
}

fn cz(t: SimpleType, l: &Weight, m: &Weight) -> Outcome {
    let a = one_norm(&decomposition(t, l, m)?);
    let b = one_norm(&decomposition(t, l, &dual_weight(t, m)?)?);
    Ok((a != b).then(|| format!("{t} {l}⊗{m}: one-norms {a} vs {b}")))
}

fn two(t: SimpleType, l: &Weight, m: &Weight) -> Outcome {
    let a = two_norm(&decomposition(t, l, m)?);
    let b = two_norm(&decomposition(t, l, &dual_weight(t, m)?)?);
    Ok((a != b).then(|| format!("{t} {l}⊗{m}: two-norms {a} vs {b}")))
}

fn kw(t: SimpleType, l: &Weight) -> Outcome {
    if !is_self_dual(t, l)? {
        return Ok(None);
    }
    let b = l.0.iter().filter(|&&x| x != 0).count() as u64;
    let m = mult(&decomposition(t, l, l)?, &adjoint_weight(t));
    Ok((m != b).then(|| format!("{t} {l}: adjoint multiplicity {m}, nonzero labels {b}")))
}

fn malcev(t: SimpleType, l: &Weight) -> Outcome {
    let a = malcev_class(t, l)?;
    let b = fs_oracle(t, l)?;
    Ok((a != b).then(|| format!("{t} {l}: rules say {a:?}, invariant forms say {b:?}")))
}

fn alt_sym(t: SimpleType, l: &Weight) -> Outcome {
    let alt = alt_square(t, l)?;
    let sym = sym_square(t, l)?;
    if alt.merge(&sym)? != decomposition(t, l, l)? {
        return Ok(Some(format!(
            "{t} {l}: Alt² ⊕ Sym² differs from the tensor square"
        )));
    }
    if alt != alt_square_adams(t, l)? || sym != sym_square_adams(t, l)? {
        return Ok(Some(format!("{t} {l}: square routes disagree")));
    }
    Ok(None)
}

fn constituents(t: SimpleType, l: &Weight, m: &Weight) -> Outcome {
    let d = decomposition(t, l, m)?;
    let missing: Vec<String> = guaranteed_constituents(t, l, m)?
        .into_iter()
        .filter(|w| mult(&d, w) == 0)
        .map(|w| w.to_string())
        .collect();
    Ok((!missing.is_empty()).then(|| format!("{t} {l}⊗{m}: missing {}", missing.join(" "))))
}

/// `m(top − Σnα, small) ≤ m(top' − Σnα, big)` for every constituent of `small`.
fn dominated(
    t: SimpleType,
    small: &Decomposition,
    top: &Weight,
    big: &Decomposition,
    top_big: &Weight,
) -> Option<String> {
    let rd = root_data(t);
    for (nu, m) in small.terms() {
        let Some(n) = rd.root_coords(&top.sub(nu).0) else {
            return Some(format!("{nu} is not below {top} in the root lattice"));
        };
        let target = top_big.sub(&Weight(rd.from_root_coords(&n)));
        let mb = if target.is_dominant() {
            mult(big, &target)
        } else {
            0
        };
        if mb < *m {
            return Some(format!("{nu} ×{m} but {target} ×{mb}"));
        }
    }
    None
}

fn subordination(t: SimpleType, l: &Weight, bigger: &[Weight], ws: &[Weight]) -> Outcome {
    for lb in bigger {
        for kind in [SquareKind::Alt, SquareKind::Sym] {
            let s = square(&t.into(), l, kind)?;
            let b = square(&t.into(), lb, kind)?;
            if let Some(v) = dominated(t, &s, &l.scale(2), &b, &lb.scale(2)) {
                return Ok(Some(format!("{t} {kind}² {l} ⊑ {lb}: {v}")));
            }
        }
        for m in ws {
            let s = decomposition(t, l, m)?;
            let b = decomposition(t, lb, m)?;
            if let Some(v) = dominated(t, &s, &l.add(m), &b, &lb.add(m)) {
                return Ok(Some(format!("{t} {l}⊗{m} ⊑ {lb}⊗{m}: {v}")));
            }
        }
    }
    Ok(None)
}

/// Semisimple decomposition of the part, with constituents moved into the
/// root lattice of the parent via the retained nodes.
fn parts_one(t: SimpleType, deleted: &BTreeSet<usize>, l: &Weight, m: &Weight) -> Outcome {
    let comps = subdiagram(t, deleted)?;
    let shorten = |w: &Weight| -> Weight {
        Weight(
            comps
                .iter()
                .flat_map(|(_, nodes)| nodes.iter().map(|&j| w.0[j]))
                .collect(),
        )
    };
    let faithful = |w: &Weight| -> bool {
        let mut at = 0;
        comps.iter().all(|(ty, _)| {
            let seg = &w.0[at..at + ty.rank()];
            at += ty.rank();
            seg.iter().any(|&x| x != 0)
        })
    };
    let (pl, pm) = (shorten(l), shorten(m));
    if !faithful(&pl) || !faithful(&pm) {
        return Ok(None);
    }
    let h = SemisimpleAlgebra::new(comps.iter().map(|(ty, _)| *ty).collect())?;
    let rd_g = root_data(t);
    // Lift a difference of h-weights to a weight of g.
    let lift = |diff: &Weight| -> Option<Weight> {
        let mut coords = vec![0i64; t.rank()];
        let mut at = 0;
        for (ty, nodes) in &comps {
            let seg = &diff.0[at..at + ty.rank()];
            at += ty.rank();
            let c = root_data(*ty).root_coords(seg)?;
            for (k, &j) in nodes.iter().enumerate() {
                coords[j] = c[k];
            }
        }
        Some(Weight(rd_g.from_root_coords(&coords)))
    };
    let check = |small: &Decomposition,
                 top_h: &Weight,
                 big: &Decomposition,
                 top_g: &Weight|
     -> Option<String> {
        for (nu, k) in small.terms() {
            let Some(shift) = lift(&top_h.sub(nu)) else {
                return Some(format!("{nu} not in the root lattice"));
            };
            let target = top_g.sub(&shift);
            let kb = if target.is_dominant() {
                mult(big, &target)
            } else {
                0
            };
            if kb < *k {
                return Some(format!("{nu} ×{k} in {h} but {target} ×{kb}"));
            }
        }
        None
    };
    let nodes: Vec<String> = deleted.iter().map(|j| (j + 1).to_string()).collect();
    let tag = format!("{t} delete [{}]", nodes.join(","));
    let s = tensor_decompose(&h, &pl, &pm)?;
    let b = decomposition(t, l, m)?;
    if let Some(v) = check(&s, &pl.add(&pm), &b, &l.add(m)) {
        return Ok(Some(format!("{tag} {l}⊗{m}: {v}")));
    }
    if l == m {
        for kind in [SquareKind::Alt, SquareKind::Sym] {
            let s = square(&h, &pl, kind)?;
            let b = square(&t.into(), l, kind)?;
            if let Some(v) = check(&s, &pl.scale(2), &b, &l.scale(2)) {
                return Ok(Some(format!("{tag} {kind}² {l}: {v}")));
            }
        }
    }
    Ok(None)
}

fn ptranspose_cases() -> Result<Vec<(String, MatrixRep, MatrixRep)>> {
    let mut out = Vec::new();
    for (f, n) in [
        (ClassicalFamily::Su, 2),
        (ClassicalFamily::Su, 3),
        (ClassicalFamily::So, 4),
        (ClassicalFamily::So, 5),
        (ClassicalFamily::Sp, 2),
    ] {
        let r = standard_generators(f, n)?;
        out.push((format!("{f}{n} ⊗ {f}{n}"), r.clone(), r.clone()));
        out.push((format!("{f}{n} ⊗ dual"), r.clone(), dual_rep(&r)));
    }
    let su2 = standard_generators(ClassicalFamily::Su, 2)?;
    out.push(("su2 ⊗ (su2 ⊗ su2)".into(), su2.clone(), tensor_square(&su2)));
    Ok(out)
}

/// Run one property sweep.
pub fn run_check(kind: CheckKind, opts: &CheckOptions) -> Result<CheckReport> {
    let exec = opts.exec;
    match kind {
        CheckKind::Cz => sweep(kind, &pair_cases(opts), exec, |(t, l, m)| cz(*t, l, m)),
        CheckKind::TwoNorm => sweep(kind, &pair_cases(opts), exec, |(t, l, m)| two(*t, l, m)),
        CheckKind::Constituents => sweep(kind, &pair_cases(opts), exec, |(t, l, m)| {
            constituents(*t, l, m)
        }),
        CheckKind::Kw => sweep(kind, &box_cases(opts), exec, |(t, l)| kw(*t, l)),
        CheckKind::MalcevFs => sweep(kind, &box_cases(opts), exec, |(t, l)| malcev(*t, l)),
        CheckKind::AltSym => sweep(kind, &box_cases(opts), exec, |(t, l)| alt_sym(*t, l)),
        CheckKind::Subordination => {
            let mut items = Vec::new();
            for t in SimpleType::all_up_to_rank(opts.max_rank) {
                let ws = weights_in_box(t.rank(), opts.max_sum as i64);
                for l in &ws {
                    let bigger: Vec<Weight> = ws
                        .iter()
                        .filter(|b| *b != l && subordinate(l, b).unwrap_or(false))
                        .cloned()
                        .collect();
                    if !bigger.is_empty() {
                        items.push((t, l.clone(), bigger, ws.clone()));
                    }
                }
            }
            sweep(kind, &items, exec, |(t, l, b, ws)| {
                subordination(*t, l, b, ws)
            })
        }
        CheckKind::Parts => {
            let mut items = Vec::new();
            for t in SimpleType::all_up_to_rank(opts.max_rank) {
                let r = t.rank();
                let ws = weights_in_box(r, opts.max_sum as i64);
                for mask in 1u32..(1 << r) - 1 {
                    let deleted: BTreeSet<usize> =
                        (0..r).filter(|j| mask & (1 << j) != 0).collect();
                    for (i, l) in ws.iter().enumerate() {
                        for m in &ws[i..] {
                            items.push((t, deleted.clone(), l.clone(), m.clone()));
                        }
                    }
                }
            }
            sweep(kind, &items, exec, |(t, d, l, m)| parts_one(*t, d, l, m))
        }
        CheckKind::Ptranspose => {
            let items = ptranspose_cases()?;
            let copts = CommutantOptions {
                exec: Execution::Sequential,
                ..CommutantOptions::exact()
            };
            sweep(kind, &items, exec, |(name, a, b)| {
                let c = partial_transpose_check(a, b, &copts)?;
                Ok((!c.holds).then(|| format!("{name}: {c:?}")))
            })
        }
    }
}

/// Counts of constituents by highest weight, for reports.
pub fn constituent_counts(d: &Decomposition) -> BTreeMap<String, u64> {
    d.terms().iter().map(|(w, m)| (w.to_string(), *m)).collect()
}
