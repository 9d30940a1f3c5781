use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use super::{Generators, MatrixRep};
use crate::error::{Error, Result};
use crate::linalg::{GaussRat, Mat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScalarKind {
    #[serde(rename = "gaussian-rational")]
    GaussianRational,
    #[serde(rename = "float")]
    Float,
}

/// On-disk matrix list. Exact entries are `[re_num, re_den, im_num, im_den]`,
/// float entries `[re, im]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub dim: usize,
    pub scalars: ScalarKind,
    pub generators: Vec<Vec<Vec<Vec<Number>>>>,
}

fn int(n: &Number) -> Result<i64> {
    n.as_i64()
        .ok_or_else(|| Error::InvalidInput(format!("expected an integer, found {n}")))
}

fn entry_exact(e: &[Number]) -> Result<GaussRat> {
    let [a, b, c, d] = e else {
        return Err(Error::InvalidInput(format!(
            "exact entry needs 4 integers, found {}",
            e.len()
        )));
    };
    GaussRat::from_fracs(int(a)?, int(b)?, int(c)?, int(d)?)
        .ok_or_else(|| Error::InvalidInput("zero denominator".into()))
}

fn entry_float(e: &[Number]) -> Result<Complex64> {
    let [a, b] = e else {
        return Err(Error::InvalidInput(format!(
            "float entry needs 2 numbers, found {}",
            e.len()
        )));
    };
    let f = |n: &Number| {
        n.as_f64()
            .ok_or_else(|| Error::InvalidInput(format!("bad number {n}")))
    };
    Ok(Complex64::new(f(a)?, f(b)?))
}

fn build<S: crate::linalg::Scalar>(
    dim: usize,
    raw: &[Vec<Vec<Vec<Number>>>],
    entry: impl Fn(&[Number]) -> Result<S>,
) -> Result<Vec<Mat<S>>> {
    raw.iter()
        .enumerate()
        .map(|(k, m)| {
            if m.len() != dim || m.iter().any(|row| row.len() != dim) {
                return Err(Error::DimensionMismatch(format!(
                    "generator {k} is not {dim}x{dim}"
                )));
            }
            let rows = m
                .iter()
                .map(|row| row.iter().map(|e| entry(e)).collect::<Result<Vec<S>>>())
                .collect::<Result<Vec<_>>>()?;
            Ok(Mat::from_rows(rows).expect("shape checked"))
        })
        .collect()
}

impl MatrixFile {
    pub fn into_rep(self) -> Result<MatrixRep> {
        if self.dim == 0 || self.generators.is_empty() {
            return Err(Error::InvalidInput(
                "need dim ≥ 1 and at least one generator".into(),
            ));
        }
        match self.scalars {
            ScalarKind::GaussianRational => {
                MatrixRep::exact(build(self.dim, &self.generators, entry_exact)?)
            }
            ScalarKind::Float => MatrixRep::float(build(self.dim, &self.generators, entry_float)?),
        }
    }

    pub fn from_rep(r: &MatrixRep) -> Result<MatrixFile> {
        let generators = match r.generators() {
            Generators::Exact(g) => g
                .iter()
                .map(|m| {
                    (0..m.rows())
                        .map(|i| {
                            m.row(i)
                                .iter()
                                .map(|x| {
                                    let parts =
                                        [x.re.numer(), x.re.denom(), x.im.numer(), x.im.denom()];
                                    parts
                                        .iter()
                                        .map(|p| {
                                            i64::try_from(*p)
                                                .map(Number::from)
                                                .map_err(|_| Error::Overflow)
                                        })
                                        .collect::<Result<Vec<_>>>()
                                })
                                .collect::<Result<Vec<_>>>()
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?,
            Generators::Float(g) => g
                .iter()
                .map(|m| {
                    (0..m.rows())
                        .map(|i| {
                            m.row(i)
                                .iter()
                                .map(|x| {
                                    [x.re, x.im]
                                        .iter()
                                        .map(|v| {
                                            Number::from_f64(*v).ok_or_else(|| {
                                                Error::InvalidInput("non-finite entry".into())
                                            })
                                        })
                                        .collect::<Result<Vec<_>>>()
                                })
                                .collect::<Result<Vec<_>>>()
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?,
        };
        let scalars = if r.is_exact() {
            ScalarKind::GaussianRational
        } else {
            ScalarKind::Float
        };
        Ok(MatrixFile {
            dim: r.dim(),
            scalars,
            generators,
        })
    }
}

pub fn rep_from_json(s: &str) -> Result<MatrixRep> {
    serde_json::from_str::<MatrixFile>(s)?.into_rep()
}

pub fn rep_to_json(r: &MatrixRep) -> Result<String> {
    Ok(serde_json::to_string(&MatrixFile::from_rep(r)?)?)
}

pub fn load_rep(path: impl AsRef<Path>) -> Result<MatrixRep> {
    rep_from_json(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrixrep::{standard_generators, ClassicalFamily};

    #[test]
    fn round_trip() {
        let r = standard_generators(ClassicalFamily::Sp, 2).unwrap();
        assert_eq!(rep_from_json(&rep_to_json(&r).unwrap()).unwrap(), r);
        let f = MatrixRep::float(r.float_generators()).unwrap();
        assert_eq!(rep_from_json(&rep_to_json(&f).unwrap()).unwrap(), f);
    }

    #[test]
    fn parses_documented_layout() {
        let s = r#"{"dim": 2, "scalars": "gaussian-rational",
                    "generators": [[[[0,1,1,2],[0,1,0,1]],[[0,1,0,1],[0,1,-1,2]]]]}"#;
        let r = rep_from_json(s).unwrap();
        let m = &r.exact_generators().unwrap()[0];
        assert_eq!(m[(0, 0)], GaussRat::from_fracs(0, 1, 1, 2).unwrap());
        let f = r#"{"dim": 1, "scalars": "float", "generators": [[[[0.0, 2.5]]]]}"#;
        assert_eq!(
            rep_from_json(f).unwrap().float_generators()[0][(0, 0)],
            Complex64::new(0.0, 2.5)
        );
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(
            rep_from_json(r#"{"dim": 2, "scalars": "float", "generators": [[[[0,0]]]]}"#).is_err()
        );
        assert!(rep_from_json(
            r#"{"dim": 1, "scalars": "gaussian-rational", "generators": [[[[1,0,0,1]]]]}"#
        )
        .is_err());
        assert!(rep_from_json(r#"{"dim": 1, "scalars": "complex", "generators": []}"#).is_err());
    }
}
