//! Building operators by kind and their canonical text serialization.

use std::fmt;
use std::str::FromStr;

use crate::algebra::int;
use crate::covariant::{build_b, build_d, build_h, dropped_scalar, scalar_header, ParamMode};
use crate::error::{Error, Result};
use crate::omega::cayley_omega;
use crate::weyl::{BiDiffOperator, DiffOperator};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    H,
    D,
    B,
    Omega,
}

impl FromStr for OperatorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" | "h" => Ok(OperatorKind::H),
            "D" | "d" => Ok(OperatorKind::D),
            "B" | "b" => Ok(OperatorKind::B),
            "omega" | "Omega" => Ok(OperatorKind::Omega),
            other => Err(Error::Parse(format!("unknown operator kind '{other}'"))),
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OperatorKind::H => "H",
            OperatorKind::D => "D",
            OperatorKind::B => "B",
            OperatorKind::Omega => "omega",
        })
    }
}

/// What to build: `k` only matters for `B`; `params = None` keeps
/// `lambda`, `mu` symbolic as `s`, `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildRequest {
    pub kind: OperatorKind,
    pub m: usize,
    pub k: Option<usize>,
    pub params: Option<(i64, i64)>,
}

/// A built operator of either arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuiltOperator {
    Diff(DiffOperator),
    BiDiff(BiDiffOperator),
}

impl BuiltOperator {
    pub fn len(&self) -> usize {
        match self {
            BuiltOperator::Diff(d) => d.len(),
            BuiltOperator::BiDiff(b) => b.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn mode(params: Option<(i64, i64)>) -> ParamMode {
    match params {
        Some((l, u)) => ParamMode::Specialized(int(l), int(u)),
        None => ParamMode::Symbolic,
    }
}

pub fn build_operator(req: &BuildRequest) -> Result<BuiltOperator> {
    if req.m == 0 {
        return Err(Error::OutOfRange("m must be at least 1".into()));
    }
    Ok(match req.kind {
        OperatorKind::H => {
            let h = build_h(req.m)?;
            BuiltOperator::Diff(match req.params {
                Some((s, t)) => h.specialize(
                    &[(crate::algebra::VarId::S, int(s)), (crate::algebra::VarId::T, int(t))]
                        .into_iter()
                        .collect(),
                ),
                None => h,
            })
        }
        OperatorKind::D => BuiltOperator::Diff(build_d(req.m, &mode(req.params))?),
        OperatorKind::B => {
            let k = req.k.ok_or_else(|| Error::Config("B needs --k".into()))?;
            BuiltOperator::BiDiff(build_b(req.m, k, &mode(req.params))?)
        }
        OperatorKind::Omega => BuiltOperator::Diff(cayley_omega(req.m)),
    })
}

fn header(req: &BuildRequest) -> Vec<(String, String)> {
    let mut h = vec![("kind".to_string(), req.kind.to_string()), ("m".to_string(), req.m.to_string())];
    if req.kind == OperatorKind::B {
        if let Some(k) = req.k {
            h.push(("k".into(), k.to_string()));
        }
    }
    match req.params {
        Some((l, u)) => {
            let (a, b) = if req.kind == OperatorKind::H { ("s", "t") } else { ("lambda", "mu") };
            h.push((a.into(), l.to_string()));
            h.push((b.into(), u.to_string()));
        }
        None if req.kind != OperatorKind::Omega => h.push(("params".into(), "symbolic".into())),
        None => {}
    }
    let factors = match req.kind {
        OperatorKind::H | OperatorKind::D => Some(1),
        OperatorKind::B => req.k,
        OperatorKind::Omega => None,
    };
    if let Some(k) = factors {
        h.extend(scalar_header(&dropped_scalar(req.m, k)));
    }
    h
}

/// Canonical text of the requested operator.
pub fn build_operator_text(req: &BuildRequest) -> Result<String> {
    let h = header(req);
    Ok(match build_operator(req)? {
        BuiltOperator::Diff(d) => d.to_text(&h),
        BuiltOperator::BiDiff(b) => b.to_text(&h),
    })
}

/// Reads a serialized operator back; the `kind` header decides the arity.
pub fn read_operator_text(text: &str) -> Result<(Vec<(String, String)>, BuiltOperator)> {
    let kind = text
        .lines()
        .find_map(|l| l.strip_prefix("# kind: "))
        .ok_or_else(|| Error::Parse("missing kind header".into()))?
        .trim()
        .parse::<OperatorKind>()?;
    if kind == OperatorKind::B {
        let (h, b) = BiDiffOperator::from_text(text)?;
        Ok((h, BuiltOperator::BiDiff(b)))
    } else {
        let (h, d) = DiffOperator::from_text(text)?;
        Ok((h, BuiltOperator::Diff(d)))
    }
}

/// Re-serializes parsed text; equal to the input for canonical files.
pub fn reserialize(text: &str) -> Result<String> {
    let (h, op) = read_operator_text(text)?;
    Ok(match op {
        BuiltOperator::Diff(d) => d.to_text(&h),
        BuiltOperator::BiDiff(b) => b.to_text(&h),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn req(kind: OperatorKind, m: usize, k: Option<usize>, params: Option<(i64, i64)>) -> BuildRequest {
        BuildRequest { kind, m, k, params }
    }

    #[test]
    fn d_m1_text() {
        let text = build_operator_text(&req(OperatorKind::D, 1, None, None)).unwrap();
        let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(body.len(), 3);
        assert!(text.contains("# kind: D"));
        assert_eq!(reserialize(&text).unwrap(), text);
    }

    #[test]
    fn b_m1_k2_text() {
        let text = build_operator_text(&req(OperatorKind::B, 1, Some(2), None)).unwrap();
        let (_, op) = read_operator_text(&text).unwrap();
        match op {
            BuiltOperator::BiDiff(b) => {
                assert_eq!(b.len(), 3);
                assert!(b.has_constant_coefficients());
            }
            _ => panic!("expected a bi-differential operator"),
        }
        assert_eq!(reserialize(&text).unwrap(), text);
    }

    #[test]
    fn round_trips() {
        for r in [
            req(OperatorKind::H, 2, None, None),
            req(OperatorKind::D, 2, None, Some((3, -1))),
            req(OperatorKind::B, 2, Some(1), None),
            req(OperatorKind::Omega, 2, None, None),
        ] {
            let text = build_operator_text(&r).unwrap();
            assert_eq!(reserialize(&text).unwrap(), text, "{r:?}");
            assert_eq!(read_operator_text(&text).unwrap().1, build_operator(&r).unwrap());
        }
    }

    #[test]
    fn b_needs_k() {
        assert!(matches!(build_operator(&req(OperatorKind::B, 1, None, None)), Err(Error::Config(_))));
        assert!("Q".parse::<OperatorKind>().is_err());
    }
}
