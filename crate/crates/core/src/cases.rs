//! Named-case registry: real-form labels resolve to an ambient type, a
//! rank, and the index of the non-compact simple root.

use std::sync::Arc;

use crate::bds::{build_datum, enumerate_bds_orders, BdsDatum, BdsError};
use crate::rootsys::{build_root_system, TypeLabel};

/// A resolved case: ambient type, rank and 0-based index of `nu`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseKey {
    pub label: TypeLabel,
    pub rank: usize,
    pub nu: usize,
}

impl CaseKey {
    pub fn build(&self) -> Result<BdsDatum, BdsError> {
        let sys = build_root_system(self.label, self.rank)
            .map_err(|e| BdsError::Precondition(e.to_string()))?;
        build_datum(sys, self.nu)
    }
}

fn parse_two_args(s: &str) -> Option<(usize, usize)> {
    let inner = s.strip_prefix('(')?.strip_suffix(')')?;
    let (a, b) = inner.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// Resolves a case label.
///
/// Classical families use the real-form notation `so(a,b)` / `sp(p,q)`;
/// the first argument fixes the grading when both orders exist for the
/// same algebra (e.g. `so(4,6)` against `so(6,4)`). Exceptional cases use
/// their table labels (`g2;A1,A1`, `f4;B4`, `e7;A7`, ...); `g2-split` and
/// `f4-split` are accepted as aliases.
pub fn parse_case(name: &str) -> Result<CaseKey, String> {
    let n = name.trim();
    let lower = n.to_ascii_lowercase();
    match lower.as_str() {
        "g2;a1,a1" | "g2-split" => {
            return Ok(CaseKey {
                label: TypeLabel::G,
                rank: 2,
                nu: 1,
            });
        }
        "f4;a1,c3" | "f4-split" => {
            return Ok(CaseKey {
                label: TypeLabel::F,
                rank: 4,
                nu: 0,
            });
        }
        "f4;b4" => {
            return Ok(CaseKey {
                label: TypeLabel::F,
                rank: 4,
                nu: 3,
            })
        }
        "e6;a1,a5,2" => {
            return Ok(CaseKey {
                label: TypeLabel::E,
                rank: 6,
                nu: 1,
            })
        }
        "e6;a1,a5,1" => {
            return Ok(CaseKey {
                label: TypeLabel::E,
                rank: 6,
                nu: 2,
            })
        }
        "e7;a1,d6,1" => {
            return Ok(CaseKey {
                label: TypeLabel::E,
                rank: 7,
                nu: 0,
            })
        }
        "e7;a7" => {
            return Ok(CaseKey {
                label: TypeLabel::E,
                rank: 7,
                nu: 1,
            })
        }
        "e7;a1,d6,2" => {
            return Ok(CaseKey {
                label: TypeLabel::E,
                rank: 7,
                nu: 5,
            })
        }
        "e8;a1,e7" => {
            return Ok(CaseKey {
                label: TypeLabel::E,
                rank: 8,
                nu: 7,
            })
        }
        "e8;d8" => {
            return Ok(CaseKey {
                label: TypeLabel::E,
                rank: 8,
                nu: 0,
            })
        }
        _ => {}
    }

    if let Some(rest) = lower.strip_prefix("so") {
        let (a, b) = parse_two_args(rest).ok_or_else(|| format!("cannot parse case `{n}`"))?;
        let total = a + b;
        if total % 2 == 1 {
            // Exactly one argument even; l = (a+b-1)/2 and nu = even/2.
            let even = if a % 2 == 0 { a } else { b };
            if even == 0 {
                return Err(format!("`{n}` has no even part"));
            }
            let l = (total - 1) / 2;
            let p = even / 2;
            if l < 2 || p < 2 || p > l {
                return Err(format!("`{n}` is not a Borel-de Siebenthal order"));
            }
            Ok(CaseKey {
                label: TypeLabel::B,
                rank: l,
                nu: p - 1,
            })
        } else {
            if a % 2 != 0 {
                return Err(format!("`{n}`: both arguments must be even for type D"));
            }
            let l = total / 2;
            let p = a / 2;
            if l < 4 || p < 2 || p > l - 2 {
                return Err(format!("`{n}` is not a Borel-de Siebenthal order"));
            }
            Ok(CaseKey {
                label: TypeLabel::D,
                rank: l,
                nu: p - 1,
            })
        }
    } else if let Some(rest) = lower.strip_prefix("sp") {
        let (p, qq) = parse_two_args(rest).ok_or_else(|| format!("cannot parse case `{n}`"))?;
        if p == 0 || qq == 0 {
            return Err(format!("`{n}` must have two positive arguments"));
        }
        Ok(CaseKey {
            label: TypeLabel::C,
            rank: p + qq,
            nu: p - 1,
        })
    } else {
        Err(format!("unknown case `{n}`"))
    }
}

/// All gradings with ambient rank at most `rank_max` (every classical
/// family member plus every instantiable exceptional case), one entry per
/// classification row: orders that fold onto the same row under a diagram
/// automorphism are listed once.
pub fn enumerate_cases(rank_max: usize) -> Vec<CaseKey> {
    let mut out = Vec::new();
    let classical = [TypeLabel::B, TypeLabel::C, TypeLabel::D];
    for label in classical {
        let lo = match label {
            TypeLabel::B | TypeLabel::C => 2,
            _ => 4,
        };
        for rank in lo..=rank_max {
            if let Ok(sys) = build_root_system(label, rank) {
                for nu in enumerate_bds_orders(&sys) {
                    out.push(CaseKey { label, rank, nu });
                }
            }
        }
    }
    let exceptional: &[(TypeLabel, usize)] = &[
        (TypeLabel::G, 2),
        (TypeLabel::F, 4),
        (TypeLabel::E, 6),
        (TypeLabel::E, 7),
        (TypeLabel::E, 8),
    ];
    for &(label, rank) in exceptional {
        if rank > rank_max {
            continue;
        }
        let sys = build_root_system(label, rank).unwrap();
        for nu in enumerate_bds_orders(&sys) {
            // E6: psi_5 is the diagram image of psi_3.
            if label == TypeLabel::E && rank == 6 && nu == 4 {
                continue;
            }
            out.push(CaseKey { label, rank, nu });
        }
    }
    out
}

/// The standalone Hermitian pairs exercised by the cascade checks:
/// every classical family at bounded rank plus both exceptional pairs.
pub fn enumerate_hermitian_pairs(rank_max: usize) -> Vec<(TypeLabel, usize, usize)> {
    let mut out = Vec::new();
    for rank in 1..=rank_max {
        for eps in 0..rank {
            // su(p, q) with p = eps + 1.
            out.push((TypeLabel::A, rank, eps));
        }
    }
    for rank in 2..=rank_max {
        out.push((TypeLabel::B, rank, 0)); // so(2, 2rank-1)
        out.push((TypeLabel::C, rank, rank - 1)); // sp(rank, R)
    }
    for rank in 4..=rank_max {
        out.push((TypeLabel::D, rank, 0)); // so(2, 2rank-2)
        out.push((TypeLabel::D, rank, rank - 1)); // so*(2rank)
    }
    if rank_max >= 6 {
        out.push((TypeLabel::E, 6, 0));
    }
    if rank_max >= 7 {
        out.push((TypeLabel::E, 7, 6));
    }
    out
}

pub fn datum_arc(key: &CaseKey) -> Result<Arc<BdsDatum>, BdsError> {
    key.build().map(Arc::new)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_named_cases() {
        assert_eq!(
            parse_case("so(4,1)").unwrap(),
            CaseKey {
                label: TypeLabel::B,
                rank: 2,
                nu: 1
            }
        );
        assert_eq!(
            parse_case("so(4,5)").unwrap(),
            CaseKey {
                label: TypeLabel::B,
                rank: 4,
                nu: 1
            }
        );
        assert_eq!(
            parse_case("so(6,1)").unwrap(),
            CaseKey {
                label: TypeLabel::B,
                rank: 3,
                nu: 2
            }
        );
        assert_eq!(
            parse_case("sp(2,1)").unwrap(),
            CaseKey {
                label: TypeLabel::C,
                rank: 3,
                nu: 1
            }
        );
        assert_eq!(
            parse_case("sp(2,2)").unwrap(),
            CaseKey {
                label: TypeLabel::C,
                rank: 4,
                nu: 1
            }
        );
        // Both D-type orders of so(4,6) ~ so(6,4), separated by argument
        // order.
        assert_eq!(
            parse_case("so(4,6)").unwrap(),
            CaseKey {
                label: TypeLabel::D,
                rank: 5,
                nu: 1
            }
        );
        assert_eq!(
            parse_case("so(6,4)").unwrap(),
            CaseKey {
                label: TypeLabel::D,
                rank: 5,
                nu: 2
            }
        );
        assert_eq!(
            parse_case("g2-split").unwrap(),
            CaseKey {
                label: TypeLabel::G,
                rank: 2,
                nu: 1
            }
        );
        assert_eq!(
            parse_case("e7;A7").unwrap(),
            CaseKey {
                label: TypeLabel::E,
                rank: 7,
                nu: 1
            }
        );
        assert!(parse_case("so(2,5)").is_err()); // Hermitian, not BdS
        assert!(parse_case("su(2,3)").is_err());
        assert!(parse_case("sp(0,3)").is_err());
    }

    #[test]
    fn parsed_cases_build_and_match_labels() {
        for name in [
            "so(4,1)",
            "so(4,5)",
            "so(6,5)",
            "so(8,1)",
            "sp(1,2)",
            "sp(2,2)",
            "so(4,4)",
            "so(6,4)",
            "g2;A1,A1",
            "f4;B4",
            "e6;A1,A5,1",
            "e7;A1,D6,2",
        ] {
            let key = parse_case(name).unwrap();
            let datum = key.build().unwrap();
            let row = crate::bds::classify(&datum);
            assert_eq!(
                row.g0_label.to_ascii_lowercase(),
                name.to_ascii_lowercase(),
                "round trip for {name}"
            );
        }
    }

    #[test]
    fn enumeration_covers_the_exceptional_cases() {
        let cases = enumerate_cases(8);
        let labels: Vec<String> = cases
            .iter()
            .map(|k| crate::bds::classify(&k.build().unwrap()).g0_label)
            .collect();
        for want in [
            "g2;A1,A1",
            "f4;A1,C3",
            "f4;B4",
            "e6;A1,A5,2",
            "e6;A1,A5,1",
            "e7;A1,D6,1",
            "e7;A7",
            "e7;A1,D6,2",
            "e8;A1,E7",
            "e8;D8",
        ] {
            assert!(labels.iter().any(|l| l == want), "missing {want}");
        }
        // No duplicate rows.
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), labels.len());
    }
}
