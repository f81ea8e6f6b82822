//! Named verification suites bundling the heavyweight cross-checks of
//! every subsystem. The CLI runs them by name; the integration tests run
//! them all. Each check reports pass/fail with a counterexample detail on
//! failure instead of panicking, so a whole suite always completes.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::bds::{classify, HermitianPair, InvariantAlgebra};
use crate::cases::{enumerate_cases, enumerate_hermitian_pairs};
use crate::decomp::{
    algebra_l, branch_oracle, detect_relative_invariants, freudenthal, schmid, sym_dim, Algebra,
};
use crate::lspath::{branch_to_levi, e_op, f_op, verify_restriction_ladder, partition_path, path_model};
use crate::ratio::{q, Q};
use crate::report::{CheckResultJson, VerifyReportJson};
use crate::rootsys::{build_root_system, SimpleSystem, TestRng, TypeLabel, Weight};
use crate::series::{
    bds_k_types, common_l_types_quaternionic, holo_l_types, holo_l_types_quaternionic_closed_form,
    quaternionic_k_types, SeriesParams,
};
use crate::strongorth::{
    cascade, maximality_oracle, strong_orthogonality_equivalence, verify_partial_orthogonality,
    verify_sum, w_action_checks, SumCheck,
};

pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<(String, bool, Option<String>)>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, pass: bool, detail: Option<String>) {
        self.checks.push((name.into(), pass, detail));
    }

    fn ok(&mut self, name: impl Into<String>) {
        self.check(name, true, None);
    }

    fn fail(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.check(name, false, Some(detail.into()));
    }

    fn require(&mut self, name: impl Into<String>, cond: bool, detail: impl Into<String>) {
        if cond {
            self.ok(name);
        } else {
            self.fail(name, detail);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, p, _)| *p)
    }

    pub fn merge(&mut self, other: SuiteReport) {
        for (name, pass, detail) in other.checks {
            self.checks
                .push((format!("{}: {}", other.suite, name), pass, detail));
        }
    }

    pub fn to_json(&self) -> VerifyReportJson {
        let checks: Vec<CheckResultJson> = self
            .checks
            .iter()
            .map(|(name, pass, detail)| CheckResultJson {
                name: name.clone(),
                pass: *pass,
                detail: detail.clone(),
            })
            .collect();
        let passed = checks.iter().filter(|c| c.pass).count();
        VerifyReportJson {
            suite: self.suite.clone(),
            failed: checks.len() - passed,
            passed,
            checks,
        }
    }
}

pub const SUITES: &[&str] = &[
    "rootsys", "bds", "cascade", "schmid", "lspath", "series", "all",
];

pub fn run_suite(name: &str, rank_max: usize, guard: u64) -> Result<SuiteReport, String> {
    match name {
        "rootsys" => Ok(suite_rootsys(rank_max)),
        "bds" => Ok(suite_bds(rank_max)),
        "cascade" => Ok(suite_cascade(rank_max)),
        "schmid" => Ok(suite_schmid(rank_max, guard)),
        "lspath" => Ok(suite_lspath(guard)),
        "series" => Ok(suite_series(rank_max, guard)),
        "all" => {
            let mut all = SuiteReport::new("all");
            for s in ["rootsys", "bds", "cascade", "schmid", "lspath", "series"] {
                all.merge(run_suite(s, rank_max, guard)?);
            }
            Ok(all)
        }
        other => Err(format!("unknown suite `{other}`")),
    }
}

fn sample_systems(rank_max: usize) -> Vec<Arc<crate::rootsys::RootSystem>> {
    let mut out = Vec::new();
    let picks: &[(TypeLabel, usize)] = &[
        (TypeLabel::A, 3),
        (TypeLabel::B, 4),
        (TypeLabel::C, 4),
        (TypeLabel::D, 5),
        (TypeLabel::E, 6),
        (TypeLabel::E, 8),
        (TypeLabel::F, 4),
        (TypeLabel::G, 2),
    ];
    for &(l, r) in picks {
        if r <= rank_max {
            out.push(build_root_system(l, r).unwrap());
        }
    }
    out
}

fn suite_rootsys(rank_max: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("rootsys");
    for sys in sample_systems(rank_max) {
        let tag = format!("{}{}", sys.label, sys.rank);

        let mut bijective = true;
        for alpha in &sys.all_roots {
            let mut image: Vec<Weight> = sys
                .all_roots
                .iter()
                .map(|r| sys.reflect(r, alpha))
                .collect();
            image.sort();
            if image != sys.all_roots {
                bijective = false;
                break;
            }
        }
        rep.require(
            format!("{tag}: reflections permute the roots"),
            bijective,
            tag.clone(),
        );

        let mut rng = TestRng(23);
        let mut composed = true;
        for _ in 0..20 {
            let u = crate::rootsys::WeylWord {
                word: (0..rng.below(5)).map(|_| rng.below(sys.rank)).collect(),
            };
            let v = crate::rootsys::WeylWord {
                word: (0..rng.below(5)).map(|_| rng.below(sys.rank)).collect(),
            };
            let w = Weight {
                coords: (0..sys.rank).map(|_| q(rng.int_in(-4, 4))).collect(),
            };
            if sys.act(&u.compose(&v), &w) != sys.act(&u, &sys.act(&v, &w)) {
                composed = false;
                break;
            }
        }
        rep.require(
            format!("{tag}: word action composes"),
            composed,
            tag.clone(),
        );

        let w0 = sys.longest_element(&sys.full_subset());
        let twice = w0.compose(&w0);
        let involutive = (0..sys.rank).all(|i| {
            sys.act(&twice, &Weight::simple_root(sys.rank, i)) == Weight::simple_root(sys.rank, i)
        });
        rep.require(
            format!("{tag}: longest element squares to one"),
            involutive,
            tag.clone(),
        );

        let mut round = true;
        for _ in 0..10 {
            let w = Weight {
                coords: (0..sys.rank)
                    .map(|_| crate::ratio::qr(rng.int_in(-9, 9), 3))
                    .collect(),
            };
            if sys.from_fundamental(&sys.to_fundamental(&w)) != w {
                round = false;
                break;
            }
        }
        rep.require(format!("{tag}: coordinate round trip"), round, tag);
    }
    rep
}

fn suite_bds(rank_max: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("bds");
    for key in enumerate_cases(rank_max) {
        let datum = match key.build() {
            Ok(d) => d,
            Err(e) => {
                rep.fail(format!("{key:?}: build"), e.to_string());
                continue;
            }
        };
        let row = classify(&datum);
        let tag = row.g0_label.clone();
        let pair = datum.hermitian_pair();

        // The replaced simple system spans the positive part of k.
        let ss = SimpleSystem::new(&datum.sys, datum.k_simples.clone());
        let solver = crate::rootsys::BasisSolver::new(&datum.sys, &datum.k_simples);
        let mut spans = true;
        for r in datum.delta0_pos().iter().chain(datum.layer(2)) {
            match solver.coords(&datum.sys, r, true) {
                Some(cs) => {
                    if !cs
                        .iter()
                        .all(|c| !c.is_negative() && crate::ratio::is_integer(c))
                    {
                        spans = false;
                    }
                }
                None => spans = false,
            }
        }
        rep.require(
            format!("{tag}: k-simples span the positive part of k"),
            spans,
            tag.clone(),
        );
        let _ = ss;

        // w_Y maps the opposite positive system onto the standard one.
        let mut source: Vec<Weight> = datum.delta0_pos();
        source.extend(datum.layer(-2).iter().cloned());
        let mut target: Vec<Weight> = datum.delta0_pos();
        target.extend(datum.layer(2).iter().cloned());
        target.sort();
        let mut image: Vec<Weight> = source.iter().map(|r| pair.apply_w_y(r)).collect();
        image.sort();
        rep.require(
            format!("{tag}: w_Y swaps the non-compact layers"),
            image == target,
            tag.clone(),
        );

        if pair.tube {
            let mut involutive = true;
            for i in 0..datum.sys.rank {
                let e = Weight::simple_root(datum.sys.rank, i);
                if pair.apply_w_y(&pair.apply_w_y(&e)) != e {
                    involutive = false;
                }
            }
            rep.require(
                format!("{tag}: tube w_Y is an involution"),
                involutive,
                tag.clone(),
            );
            rep.require(
                format!("{tag}: tube w_Y negates eps*"),
                pair.apply_w_y(&datum.eps_star) == datum.eps_star.neg(),
                tag.clone(),
            );
        }

        let mut scan = true;
        'outer: for alpha in datum.layer(-1) {
            for beta in datum.layer(2) {
                if datum.pair_s(alpha, beta).is_positive() {
                    scan = false;
                    break 'outer;
                }
            }
        }
        rep.require(
            format!("{tag}: lower-middle layer pairs nonpositively with the top"),
            scan,
            tag.clone(),
        );

        rep.require(
            format!("{tag}: quaternionic column matches the grading"),
            row.quaternionic == (datum.s == 1),
            format!("{tag}: s = {}", datum.s),
        );
        // Quaternionic iff the highest root is orthogonal to every compact
        // simple root.
        let mu_orth = datum.l_subset.iter().all(|&i| {
            datum
                .pair_s(&datum.mu, &datum.sys.simple_roots[i])
                .is_zero()
        });
        rep.require(
            format!("{tag}: quaternionic iff mu central for the Levi"),
            row.quaternionic == mu_orth,
            tag.clone(),
        );
        rep.require(
            format!("{tag}: tube column matches the Weyl computation"),
            row.tube_type == pair.tube,
            tag.clone(),
        );
    }
    rep
}

/// Split rank of the non-compact dual of each classification row.
fn expected_split_rank(row: &crate::bds::ClassificationRow) -> usize {
    if row.quaternionic {
        return 1;
    }
    let l = row.rank;
    let p = row.nu_index + 1;
    match (row.type_label, p) {
        (TypeLabel::B, p) if p == l => l / 2, // SO*(2l)/U(l)
        (TypeLabel::B, p) => p / 2,           // SO*(2p)/U(p)
        (TypeLabel::C, p) => p,               // Sp(p,R)/U(p)
        (TypeLabel::D, p) => p / 2,           // SO*(2p)/U(p)
        (TypeLabel::F, _) => 2,               // SO_0(2,7)
        (TypeLabel::E, 3) | (TypeLabel::E, 5) if l == 6 => 1, // SU(1,5)
        (TypeLabel::E, 2) if l == 7 => 1,     // SU(1,7)
        (TypeLabel::E, 6) if l == 7 => 2,     // SO_0(2,10)
        (TypeLabel::E, 1) if l == 8 => 2,     // SO_0(2,14)
        _ => unreachable!("row outside the classification"),
    }
}

fn expected_standalone_split_rank(label: TypeLabel, rank: usize, eps: usize) -> usize {
    match (label, eps) {
        (TypeLabel::A, e) => (e + 1).min(rank - e), // su(p, q)
        (TypeLabel::B, 0) | (TypeLabel::D, 0) => 2, // so(2, n)
        (TypeLabel::C, e) if e == rank - 1 => rank, // sp(rank, R)
        (TypeLabel::D, e) if e == rank - 1 => rank / 2, // so*(2 rank)
        (TypeLabel::E, 0) if rank == 6 => 2,
        (TypeLabel::E, 6) if rank == 7 => 3,
        _ => unreachable!("not a listed Hermitian pair"),
    }
}

fn cascade_checks_for_pair(rep: &mut SuiteReport, pair: &HermitianPair, expected_rank: usize) {
    let tag = pair.label.clone();
    let c = cascade(pair);

    rep.require(
        format!("{tag}: split rank"),
        c.rank() == expected_rank,
        format!("{tag}: got {}, expected {expected_rank}", c.rank()),
    );

    match verify_sum(&c, pair) {
        SumCheck::Holds => rep.require(
            format!("{tag}: tube sum is -2 eps*"),
            pair.tube,
            tag.clone(),
        ),
        SumCheck::HypothesisNotMet {
            sum_is_eps_star_multiple,
        } => {
            rep.require(
                format!("{tag}: non-tube sum avoids the eps* axis"),
                !pair.tube && !sum_is_eps_star_multiple,
                tag.clone(),
            );
        }
    }

    rep.require(
        format!("{tag}: partial sums orthogonal to their compact support"),
        verify_partial_orthogonality(&c, pair),
        tag.clone(),
    );

    if pair.tube {
        match w_action_checks(&c, pair) {
            Ok(ok) => rep.require(format!("{tag}: Levi reversal identities"), ok, tag.clone()),
            Err(e) => rep.fail(format!("{tag}: Levi reversal identities"), e.to_string()),
        }
    }

    if pair.sys.rank <= 6 {
        rep.require(
            format!("{tag}: cascade is maximal (exhaustive)"),
            maximality_oracle(&c, pair),
            tag.clone(),
        );
        rep.require(
            format!("{tag}: strong orthogonality is orthogonality"),
            strong_orthogonality_equivalence(pair),
            tag.clone(),
        );
    }
}

fn suite_cascade(rank_max: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("cascade");
    for key in enumerate_cases(rank_max) {
        let datum = key.build().expect("enumerated cases build");
        let row = classify(&datum);
        let pair = datum.hermitian_pair();
        cascade_checks_for_pair(&mut rep, &pair, expected_split_rank(&row));
    }
    for (label, rank, eps) in enumerate_hermitian_pairs(rank_max) {
        let pair = HermitianPair::standalone(label, rank, eps).expect("listed pairs build");
        cascade_checks_for_pair(
            &mut rep,
            &pair,
            expected_standalone_split_rank(label, rank, eps),
        );
    }
    rep
}

fn suite_schmid(rank_max: usize, guard: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("schmid");
    for key in enumerate_cases(rank_max.min(6)) {
        let datum = key.build().expect("enumerated cases build");
        let tag = classify(&datum).g0_label;
        let pair = datum.hermitian_pair();
        let c = cascade(&pair);
        let levi = algebra_l(&datum);
        for m in 0..=5usize {
            let sm = schmid(m, &c, &pair);
            let total = match sm.total_dim(&levi) {
                Ok(t) => t,
                Err(e) => {
                    rep.fail(format!("{tag}: m={m} dimension"), e.to_string());
                    continue;
                }
            };
            rep.require(
                format!("{tag}: S^{m} dimensions add up"),
                total == sym_dim(datum.s, m),
                format!("{tag}: got {total}, expected {}", sym_dim(datum.s, m)),
            );
        }
        let _ = guard;
    }
    rep
}

fn suite_lspath(guard: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("lspath");

    // Model sizes, characters, and oracle agreement over a shape sample.
    let mut rng = TestRng(29);
    for (label, rank) in [
        (TypeLabel::A, 3usize),
        (TypeLabel::B, 3),
        (TypeLabel::C, 3),
        (TypeLabel::B, 2),
    ] {
        let alg = Algebra::ambient(build_root_system(label, rank).unwrap());
        let tag = format!("{label}{rank}");
        for trial in 0..3 {
            let coords: Vec<Q> = (0..rank).map(|_| q(rng.int_in(0, 2))).collect();
            let shape = alg.sys.from_fundamental(&coords);
            let dim = alg.weyl_dim(&shape).unwrap();
            if dim > BigInt::from(600) {
                continue;
            }
            let model = match path_model(&alg, &shape, guard) {
                Ok(m) => m,
                Err(e) => {
                    rep.fail(format!("{tag}: model #{trial}"), e.to_string());
                    continue;
                }
            };
            rep.require(
                format!("{tag}: model size #{trial}"),
                BigInt::from(model.paths.len()) == dim,
                format!("{tag}: {} paths vs dim {dim}", model.paths.len()),
            );
            let table = freudenthal(&alg, &shape, guard).unwrap();
            let mut counted: std::collections::BTreeMap<Weight, u64> = Default::default();
            for p in &model.paths {
                *counted.entry(p.endpoint_with_rank(rank)).or_insert(0) += 1;
            }
            rep.require(
                format!("{tag}: endpoints match weight table #{trial}"),
                counted == table.entries,
                tag.clone(),
            );
            let subset: Vec<usize> = (0..rank).filter(|_| rng.below(2) == 0).collect();
            let levi = alg.sub_levi(&subset);
            let via_paths = branch_to_levi(&alg, &shape, &subset, guard).unwrap();
            let via_oracle = branch_oracle(&alg, &shape, &levi, guard).unwrap();
            rep.require(
                format!("{tag}: branching agrees with the oracle #{trial}"),
                via_paths.entries == via_oracle.entries,
                tag.clone(),
            );
        }
    }

    // Operator adjointness over one full model.
    let alg = Algebra::ambient(build_root_system(TypeLabel::B, 2).unwrap());
    let model = path_model(&alg, &alg.sys.rho.clone(), guard).unwrap();
    let mut adjoint = true;
    for p in &model.paths {
        for alpha in &alg.simples {
            if let Some(fp) = f_op(&alg.sys, p, alpha) {
                if e_op(&alg.sys, &fp, alpha).as_ref() != Some(p) {
                    adjoint = false;
                }
            }
            if let Some(ep) = e_op(&alg.sys, p, alpha) {
                if f_op(&alg.sys, &ep, alpha).as_ref() != Some(p) {
                    adjoint = false;
                }
            }
        }
    }
    rep.require(
        "raising and lowering are mutually inverse",
        adjoint,
        "B2 rho model",
    );

    // Restriction ladder on small pairs.
    for (label, rank, eps, name) in [
        (TypeLabel::C, 2usize, 1usize, "C2"),
        (TypeLabel::B, 2, 0, "B2"),
        (TypeLabel::A, 3, 1, "A3"),
    ] {
        let pair = HermitianPair::standalone(label, rank, eps).unwrap();
        let mut ok = true;
        for m in 0..=4usize {
            for p in 0..=m {
                match verify_restriction_ladder(&pair, m, p, guard) {
                    Ok(true) => {}
                    _ => ok = false,
                }
            }
        }
        rep.require(format!("{name}: restriction ladder containments"), ok, name);
    }

    // Explicit dominant paths over the two tube cascades.
    for (rank, name) in [(2usize, "C2"), (3usize, "C3")] {
        let pair = HermitianPair::standalone(TypeLabel::C, rank, rank - 1).unwrap();
        let c = cascade(&pair);
        let mut ok = true;
        for m in 0..=4u64 {
            for p_list in all_p_lists(m, c.rank()) {
                if partition_path(&pair, &c, m, &p_list, guard).is_err() {
                    ok = false;
                }
            }
        }
        rep.require(format!("{name}: explicit dominant paths"), ok, name);
    }
    rep
}

/// All weakly decreasing tuples bounded by `m` of the given length.
pub fn all_p_lists(m: u64, len: usize) -> Vec<Vec<u64>> {
    fn rec(prev: u64, left: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in (0..=prev).rev() {
            cur.push(v);
            rec(v, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, len, &mut Vec::new(), &mut out);
    out
}

fn suite_series(rank_max: usize, guard: u64) -> SuiteReport {
    let mut rep = SuiteReport::new("series");

    // Quaternionic consistency: the two K-type descriptions agree, and the
    // holomorphic side matches its closed form. Truncations adapt to the
    // guard.
    let quaternionic: Vec<(&str, i64)> = vec![
        ("so(4,1)", -4),
        ("sp(1,1)", -4),
        ("sp(1,2)", -8),
        ("so(4,3)", -6),
        ("so(4,5)", -8),
        ("so(4,4)", -8),
        ("g2;A1,A1", -4),
        ("sp(1,5)", -16),
    ];
    for (name, t) in quaternionic {
        let key = match crate::cases::parse_case(name) {
            Ok(k) => k,
            Err(e) => {
                rep.fail(format!("{name}: parse"), e);
                continue;
            }
        };
        if key.rank > rank_max {
            continue;
        }
        let datum = Arc::new(key.build().expect("case builds"));
        let mut m_max = 8usize;
        while m_max > 2 && sym_dim(datum.layer(-1).len(), m_max) > BigInt::from(20_000u64) {
            m_max -= 1;
        }
        let params = SeriesParams::new(
            Arc::clone(&datum),
            Weight::zero(datum.sys.rank),
            q(t),
            m_max,
            8,
            guard,
        )
        .expect("parameters are sufficiently negative");
        let direct = bds_k_types(&params);
        let closed = quaternionic_k_types(&params);
        match (direct, closed) {
            (Ok(a), Ok(b)) => rep.require(
                format!("{name}: layered K-types match the closed form (m <= {m_max})"),
                a.entries == b.entries,
                name,
            ),
            (a, b) => rep.fail(
                format!("{name}: layered K-types"),
                format!(
                    "direct: {:?} closed: {:?}",
                    a.err().map(|e| e.to_string()),
                    b.err().map(|e| e.to_string())
                ),
            ),
        }
        let holo = holo_l_types(&params);
        let holo_closed = holo_l_types_quaternionic_closed_form(&params);
        match (holo, holo_closed) {
            (Ok(a), Ok(b)) => rep.require(
                format!("{name}: holomorphic L-types match the closed form"),
                a.entries == b.entries,
                name,
            ),
            _ => rep.fail(format!("{name}: holomorphic L-types"), name),
        }
    }

    // The invariant-free rank-one cases have empty common-type reports.
    for (name, t) in [("so(4,1)", -4i64), ("sp(1,2)", -8)] {
        let key = crate::cases::parse_case(name).unwrap();
        let datum = Arc::new(key.build().unwrap());
        let params = SeriesParams::new(
            Arc::clone(&datum),
            Weight::zero(datum.sys.rank),
            q(t),
            16,
            10,
            guard,
        )
        .unwrap();
        match common_l_types_quaternionic(&params) {
            Ok(report) => rep.require(
                format!("{name}: no common types"),
                report.rows.is_empty(),
                format!("{name}: {} rows", report.rows.len()),
            ),
            Err(e) => rep.fail(format!("{name}: no common types"), e.to_string()),
        }
    }

    // Relative invariant detection against the classification column.
    for key in enumerate_cases(rank_max.min(6)) {
        let datum = key.build().expect("case builds");
        let row = classify(&datum);
        let tag = row.g0_label.clone();
        let (probe, expect_hit) = match row.invariant_algebra {
            InvariantAlgebra::Polynomial(k) => (k, true),
            InvariantAlgebra::Trivial => (4usize.min(datum.layer(-1).len()), false),
        };
        if sym_dim(datum.layer(-1).len(), probe) > BigInt::from(guard) {
            continue;
        }
        match detect_relative_invariants(&datum, probe, guard) {
            Ok(hits) => {
                let pass = if expect_hit {
                    hits.len() == 1 && hits[0].0 == probe
                } else {
                    hits.is_empty()
                };
                rep.require(
                    format!("{tag}: invariant detection matches the table"),
                    pass,
                    format!(
                        "{tag}: hits {:?}",
                        hits.iter().map(|h| h.0).collect::<Vec<_>>()
                    ),
                );
            }
            Err(e) => rep.fail(format!("{tag}: invariant detection"), e.to_string()),
        }
    }

    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_list_enumeration() {
        let lists = all_p_lists(2, 2);
        assert_eq!(lists.len(), 6); // 22 21 20 11 10 00
        for l in &lists {
            assert!(l[0] >= l[1]);
        }
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nope", 4, 10_000).is_err());
    }
}
