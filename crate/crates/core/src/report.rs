//! JSON-facing report types. Rationals are serialized as `p/q` strings,
//! weights as coordinate vectors over the simple-root basis, and maps in
//! the lexicographic order of their keys, so output is byte-stable for a
//! fixed input.

use serde::Serialize;

use crate::bds::{BdsDatum, ClassificationRow, InvariantAlgebra};
use crate::decomp::{Algebra, TypeMultiset};
use crate::ratio::format_q;
use crate::rootsys::Weight;
use crate::series::{CommonReport, GrowthReport};
use crate::strongorth::Cascade;

pub fn weight_json(w: &Weight) -> Vec<String> {
    w.coords.iter().map(format_q).collect()
}

/// A path as a list of [direction-coordinates, length] pairs, rationals as
/// strings.
pub fn path_json(path: &crate::lspath::LsPath) -> Vec<(Vec<String>, String)> {
    path.segments()
        .iter()
        .map(|(dir, len)| (weight_json(dir), format_q(len)))
        .collect()
}

#[derive(Serialize)]
pub struct TypeEntryJson {
    pub weight: Vec<String>,
    pub mult: u64,
}

#[derive(Serialize)]
pub struct TypeMultisetJson {
    pub algebra: String,
    pub entries: Vec<TypeEntryJson>,
    pub distinct_types: usize,
}

pub fn multiset_json(ms: &TypeMultiset) -> TypeMultisetJson {
    TypeMultisetJson {
        algebra: ms.tag.to_string(),
        entries: ms
            .entries
            .iter()
            .map(|(w, m)| TypeEntryJson {
                weight: weight_json(w),
                mult: *m,
            })
            .collect(),
        distinct_types: ms.entries.len(),
    }
}

#[derive(Serialize)]
pub struct ClassificationRowJson {
    pub g0: String,
    pub ambient: String,
    pub nu: String,
    pub k1: String,
    pub l1: String,
    pub l2: String,
    pub y: String,
    pub x: String,
    pub invariant_algebra: String,
    pub invariant_degree: Option<usize>,
    pub quaternionic: bool,
    pub tube_type: bool,
}

pub fn classification_row_json(row: &ClassificationRow) -> ClassificationRowJson {
    ClassificationRowJson {
        g0: row.g0_label.clone(),
        ambient: format!("{}{}", row.type_label, row.rank),
        nu: format!("psi_{}", row.nu_index + 1),
        k1: row.k1_label.clone(),
        l1: row.l1_label.clone(),
        l2: row.l2_label.clone(),
        y: row.y_label.clone(),
        x: row.x_label.clone(),
        invariant_algebra: row.invariant_algebra.to_string(),
        invariant_degree: match row.invariant_algebra {
            InvariantAlgebra::Trivial => None,
            InvariantAlgebra::Polynomial(k) => Some(k),
        },
        quaternionic: row.quaternionic,
        tube_type: row.tube_type,
    }
}

pub fn classification_csv_header() -> String {
    "g0,ambient,nu,k1,l1,l2,Y,X,invariant_algebra,quaternionic,tube_type".into()
}

pub fn classification_csv_row(row: &ClassificationRow) -> String {
    let quote = |s: &str| {
        if s.contains(',') {
            format!("\"{s}\"")
        } else {
            s.to_string()
        }
    };
    let j = classification_row_json(row);
    [
        quote(&j.g0),
        j.ambient,
        j.nu,
        j.k1,
        j.l1,
        j.l2,
        j.y,
        j.x,
        quote(&j.invariant_algebra),
        j.quaternionic.to_string(),
        j.tube_type.to_string(),
    ]
    .join(",")
}

#[derive(Serialize)]
pub struct DatumSummaryJson {
    pub case: ClassificationRowJson,
    pub layer_sizes: Vec<usize>,
    pub eps: Vec<String>,
    pub mu: Vec<String>,
    pub nu_star: Vec<String>,
    pub eps_star: Vec<String>,
    pub c: i64,
    pub s: usize,
    pub d: Option<i64>,
    pub spin_structure: bool,
    pub pairing_scale: String,
}

pub fn datum_summary_json(datum: &BdsDatum) -> DatumSummaryJson {
    let row = crate::bds::classify(datum);
    DatumSummaryJson {
        case: classification_row_json(&row),
        layer_sizes: (-2..=2).map(|i| datum.layer(i).len()).collect(),
        eps: weight_json(&datum.eps),
        mu: weight_json(&datum.mu),
        nu_star: weight_json(&datum.nu_star),
        eps_star: weight_json(&datum.eps_star),
        c: datum.c,
        s: datum.s,
        d: datum.d,
        spin_structure: datum.spin_structure(),
        pairing_scale: format_q(&datum.scale),
    }
}

#[derive(Serialize)]
pub struct CascadeReportJson {
    pub case: String,
    pub rank: usize,
    pub gammas: Vec<Vec<String>>,
    pub sum: Vec<String>,
    pub tube_type: bool,
    pub sum_is_minus_two_eps_star: bool,
    pub partial_orthogonality: bool,
}

pub fn cascade_report_json(
    pair: &crate::bds::HermitianPair,
    cascade: &Cascade,
) -> CascadeReportJson {
    let sum = cascade.sum();
    let minus_two = pair.eps_star.scale(&crate::ratio::q(-2));
    CascadeReportJson {
        case: pair.label.clone(),
        rank: cascade.rank(),
        gammas: cascade.gammas.iter().map(weight_json).collect(),
        sum: weight_json(&sum),
        tube_type: pair.tube,
        sum_is_minus_two_eps_star: sum == minus_two,
        partial_orthogonality: crate::strongorth::verify_partial_orthogonality(cascade, pair),
    }
}

#[derive(Serialize)]
pub struct SchmidEntryJson {
    pub partition: Vec<u32>,
    pub weight: Vec<String>,
    pub dim: String,
}

#[derive(Serialize)]
pub struct SchmidReportJson {
    pub m: usize,
    pub entries: Vec<SchmidEntryJson>,
    pub total_dim: String,
    pub expected_dim: String,
}

pub fn schmid_report_json(
    m: usize,
    cascade: &Cascade,
    pair: &crate::bds::HermitianPair,
    levi: &Algebra,
) -> SchmidReportJson {
    let mut entries = Vec::new();
    let mut total = num_bigint::BigInt::from(0);
    for part in crate::decomp::partitions_into(m, cascade.rank()) {
        let w = cascade.weight_of_partition(&part);
        let dim = levi.weyl_dim(&w).expect("partition weights are dominant");
        total += &dim;
        entries.push(SchmidEntryJson {
            partition: part,
            weight: weight_json(&w),
            dim: dim.to_string(),
        });
    }
    SchmidReportJson {
        m,
        entries,
        total_dim: total.to_string(),
        expected_dim: crate::decomp::sym_dim(pair.delta2.len(), m).to_string(),
    }
}

#[derive(Serialize)]
pub struct CommonTypeRowJson {
    pub weight: Vec<String>,
    pub mult_bds_truncated: u64,
    pub mult_holo_truncated: u64,
    pub growth_flag: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certified_j: Vec<u64>,
}

#[derive(Serialize)]
pub struct TruncationJson {
    pub m_max: usize,
    pub r_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j_window: Option<(u64, u64)>,
}

#[derive(Serialize)]
pub struct HypothesesJson {
    pub quaternionic: bool,
    pub tube: bool,
    pub relative_invariant_degree: Option<usize>,
    pub relative_invariant_q: Option<String>,
}

#[derive(Serialize)]
pub struct CommonReportJson {
    pub common_types: Vec<CommonTypeRowJson>,
    pub truncation: TruncationJson,
    pub hypotheses: HypothesesJson,
    pub evidence_note: String,
}

pub fn common_report_json(rep: &CommonReport) -> CommonReportJson {
    CommonReportJson {
        common_types: rep
            .rows
            .iter()
            .map(|r| CommonTypeRowJson {
                weight: weight_json(&r.weight),
                mult_bds_truncated: r.mult_bds_truncated,
                mult_holo_truncated: r.mult_holo_truncated,
                growth_flag: r.growth_flag,
                partition: r.partition.clone(),
                certified_j: r.certified_j.clone(),
            })
            .collect(),
        truncation: TruncationJson {
            m_max: rep.m_max,
            r_max: rep.r_max,
            j_window: rep.j_window,
        },
        hypotheses: HypothesesJson {
            quaternionic: rep.quaternionic,
            tube: rep.tube,
            relative_invariant_degree: rep.relative_invariant_degree,
            relative_invariant_q: rep.relative_invariant_q.as_ref().map(format_q),
        },
        evidence_note: rep.evidence_note.clone(),
    }
}

#[derive(Serialize)]
pub struct GrowthReportJson {
    pub subgroup: String,
    pub windows: Vec<(usize, u64)>,
    pub monotone_growth: bool,
    pub stabilized: bool,
    pub evidence_note: String,
}

pub fn growth_report_json(rep: &GrowthReport) -> GrowthReportJson {
    GrowthReportJson {
        subgroup: rep.subgroup.clone(),
        windows: rep.windows.clone(),
        monotone_growth: rep.monotone_growth,
        stabilized: rep.stabilized,
        evidence_note: rep.evidence_note.clone(),
    }
}

#[derive(Serialize)]
pub struct CheckResultJson {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Serialize)]
pub struct VerifyReportJson {
    pub suite: String,
    pub checks: Vec<CheckResultJson>,
    pub passed: usize,
    pub failed: usize,
}
