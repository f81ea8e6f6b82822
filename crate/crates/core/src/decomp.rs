//! Brute-force character oracle: Weyl dimensions, Freudenthal weight
//! multiplicities, tensor products by signed weight shifts, Levi branching
//! by iterated stripping, symmetric powers via power sums, and the
//! partition-indexed decomposition of the symmetric algebra of the lower
//! non-compact layer.
//!
//! Everything is exact integer bookkeeping; guards bound the dimensions.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::bds::{BdsDatum, HermitianPair};
use crate::ratio::{is_integer, q, qr, to_bigint, Q};
use crate::rootsys::{RootSystem, SimpleSystem, Weight};
use crate::strongorth::Cascade;

pub const DEFAULT_GUARD: u64 = 1_000_000;

#[derive(Clone, Debug)]
pub enum DecompError {
    NotDominant(Weight),
    NotIntegral(Weight),
    GuardExceeded { needed: BigInt, guard: u64 },
    NotASubalgebra(String),
}

impl fmt::Display for DecompError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompError::NotDominant(w) => write!(f, "weight {w} is not dominant"),
            DecompError::NotIntegral(w) => write!(f, "weight {w} is not integral"),
            DecompError::GuardExceeded { needed, guard } => {
                write!(f, "dimension {needed} exceeds the guard {guard}")
            }
            DecompError::NotASubalgebra(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for DecompError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AlgebraTag {
    G,
    K,
    L,
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraTag::G => write!(f, "g"),
            AlgebraTag::K => write!(f, "k"),
            AlgebraTag::L => write!(f, "l"),
        }
    }
}

/// A reductive acting algebra: a simple system inside the ambient root
/// system together with its positive roots. The center (directions
/// orthogonal to all simples) rides along in the weight coordinates.
#[derive(Clone)]
pub struct Algebra {
    pub sys: Arc<RootSystem>,
    pub tag: AlgebraTag,
    pub simples: Vec<Weight>,
    pub positive: Vec<Weight>,
    pub rho: Weight,
}

impl Algebra {
    pub fn from_parts(
        sys: Arc<RootSystem>,
        tag: AlgebraTag,
        simples: Vec<Weight>,
        positive: Vec<Weight>,
    ) -> Algebra {
        let mut rho2 = Weight::zero(sys.rank);
        for r in &positive {
            rho2 = rho2.add(r);
        }
        let rho = rho2.scale(&qr(1, 2));
        Algebra {
            sys,
            tag,
            simples,
            positive,
            rho,
        }
    }

    pub fn ambient(sys: Arc<RootSystem>) -> Algebra {
        let simples = sys.simple_roots.clone();
        let positive = sys.positive_roots.clone();
        Algebra::from_parts(sys, AlgebraTag::G, simples, positive)
    }

    /// Levi subalgebra spanned by a subset of this algebra's simples.
    pub fn sub_levi(&self, subset: &[usize]) -> Algebra {
        let simples: Vec<Weight> = subset.iter().map(|&i| self.simples[i].clone()).collect();
        let ss = SimpleSystem::new(&self.sys, simples.clone());
        let positive: Vec<Weight> = self
            .positive
            .iter()
            .filter(|r| matches!(ss.coords_in_simples(r), Some(c) if c.iter().all(|x| !x.is_negative())))
            .cloned()
            .collect();
        Algebra::from_parts(Arc::clone(&self.sys), AlgebraTag::L, simples, positive)
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        self.simples
            .iter()
            .all(|s| !self.sys.coroot_pair(w, s).is_negative())
    }

    pub fn is_integral(&self, w: &Weight) -> bool {
        self.simples
            .iter()
            .all(|s| is_integer(&self.sys.coroot_pair(w, s)))
    }

    fn check_dominant_integral(&self, w: &Weight) -> Result<(), DecompError> {
        if !self.is_dominant(w) {
            return Err(DecompError::NotDominant(w.clone()));
        }
        if !self.is_integral(w) {
            return Err(DecompError::NotIntegral(w.clone()));
        }
        Ok(())
    }

    /// Exact Weyl dimension of the irreducible with highest weight `lambda`.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<BigInt, DecompError> {
        self.check_dominant_integral(lambda)?;
        let shifted = lambda.add(&self.rho);
        let mut num = Q::one();
        for alpha in &self.positive {
            num *= self.sys.pair(&shifted, alpha) / self.sys.pair(&self.rho, alpha);
        }
        assert!(is_integer(&num), "Weyl dimension must be an integer");
        Ok(to_bigint(&num))
    }

    /// Moves `w` to the dominant chamber, tracking the sign of the word.
    /// Returns `None` when `w` is singular for this algebra.
    pub fn to_dominant_signed(&self, w: &Weight) -> Option<(Weight, i64)> {
        let mut cur = w.clone();
        let mut sign = 1i64;
        'outer: loop {
            for s in &self.simples {
                let p = self.sys.coroot_pair(&cur, s);
                if p.is_negative() {
                    cur = self.sys.reflect(&cur, s);
                    sign = -sign;
                    continue 'outer;
                }
            }
            break;
        }
        for s in &self.simples {
            if self.sys.coroot_pair(&cur, s).is_zero() {
                return None;
            }
        }
        Some((cur, sign))
    }

    fn dominant_word_parity(&self, w: &Weight) -> Option<(Weight, i64)> {
        self.to_dominant_signed(w)
    }
}

/// Full weight-multiplicity table of one irreducible.
#[derive(Clone, Debug, Default)]
pub struct WeightTable {
    pub entries: BTreeMap<Weight, u64>,
}

impl WeightTable {
    pub fn dim(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for m in self.entries.values() {
            acc += BigInt::from(*m);
        }
        acc
    }

    pub fn mult(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }
}

/// Finite multiset of irreducible highest weights with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeMultiset {
    pub tag: AlgebraTag,
    pub entries: BTreeMap<Weight, u64>,
}

impl TypeMultiset {
    pub fn new(tag: AlgebraTag) -> Self {
        TypeMultiset {
            tag,
            entries: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, w: Weight, mult: u64) {
        if mult > 0 {
            *self.entries.entry(w).or_insert(0) += mult;
        }
    }

    pub fn mult(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn merge(&mut self, other: &TypeMultiset) {
        assert_eq!(self.tag, other.tag);
        for (w, m) in &other.entries {
            self.add(w.clone(), *m);
        }
    }

    /// Shifts every key by `delta` (tensoring with a one-dimensional type).
    pub fn shifted(&self, delta: &Weight) -> TypeMultiset {
        let mut out = TypeMultiset::new(self.tag);
        for (w, m) in &self.entries {
            out.add(w.add(delta), *m);
        }
        out
    }

    /// Multiset containment: every entry of `self` occurs in `other` with
    /// at least the same multiplicity.
    pub fn contained_in(&self, other: &TypeMultiset) -> bool {
        self.entries.iter().all(|(w, m)| other.mult(w) >= *m)
    }

    pub fn total_dim(&self, alg: &Algebra) -> Result<BigInt, DecompError> {
        let mut acc = BigInt::zero();
        for (w, m) in &self.entries {
            acc += alg.weyl_dim(w)? * BigInt::from(*m);
        }
        Ok(acc)
    }
}

fn check_guard(needed: &BigInt, guard: u64) -> Result<(), DecompError> {
    if *needed > BigInt::from(guard) {
        return Err(DecompError::GuardExceeded {
            needed: needed.clone(),
            guard,
        });
    }
    Ok(())
}

/// Freudenthal's recursion: the complete weight table of the irreducible
/// with highest weight `lambda`.
pub fn freudenthal(alg: &Algebra, lambda: &Weight, guard: u64) -> Result<WeightTable, DecompError> {
    let dim = alg.weyl_dim(lambda)?;
    check_guard(&dim, guard)?;

    // Enumerate the weight support top-down: mu is a weight iff its
    // dominant representative lies under lambda in the root order of the
    // algebra's simples. All candidates live in lambda plus the span of
    // the simples, so the prefactored solver skips span verification.
    let ss = SimpleSystem::new(&alg.sys, alg.simples.clone());
    let solver = crate::rootsys::BasisSolver::new(&alg.sys, &alg.simples);
    let in_support = |mu: &Weight| -> bool {
        let (dom, _) = ss.to_dominant(mu);
        let diff = lambda.sub(&dom);
        match solver.coords(&alg.sys, &diff, false) {
            Some(cs) => cs.iter().all(|c| !c.is_negative() && is_integer(c)),
            None => false,
        }
    };

    let mut levels: Vec<Vec<Weight>> = vec![vec![lambda.clone()]];
    let mut seen: BTreeMap<Weight, usize> = BTreeMap::new();
    seen.insert(lambda.clone(), 0);
    loop {
        let last = levels.last().unwrap();
        let mut next: Vec<Weight> = Vec::new();
        for mu in last {
            for s in &alg.simples {
                let cand = mu.sub(s);
                if !seen.contains_key(&cand) && in_support(&cand) {
                    seen.insert(cand.clone(), levels.len());
                    next.push(cand);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }

    let lam_rho = lambda.add(&alg.rho);
    let lam_norm = alg.sys.pair(&lam_rho, &lam_rho);
    let mut table: BTreeMap<Weight, u64> = BTreeMap::new();
    table.insert(lambda.clone(), 1);

    for level in levels.iter().skip(1) {
        for mu in level {
            let mut acc = Q::zero();
            for alpha in &alg.positive {
                let mut k = 1i64;
                loop {
                    let up = mu.add(&alpha.scale(&q(k)));
                    match table.get(&up) {
                        Some(&m) if m > 0 => {
                            acc += q(m as i64) * alg.sys.pair(&up, alpha);
                        }
                        _ => {
                            if !seen.contains_key(&up) {
                                break;
                            }
                        }
                    }
                    k += 1;
                }
            }
            let mu_rho = mu.add(&alg.rho);
            let denom = &lam_norm - alg.sys.pair(&mu_rho, &mu_rho);
            assert!(
                denom.is_positive(),
                "Freudenthal denominator must be positive"
            );
            let m = q(2) * acc / denom;
            assert!(is_integer(&m), "Freudenthal multiplicity must be integral");
            let m = to_bigint(&m).to_u64().expect("multiplicity fits u64");
            if m > 0 {
                table.insert(mu.clone(), m);
            }
        }
    }

    let out = WeightTable { entries: table };
    assert_eq!(
        out.dim(),
        dim,
        "weight table must sum to the Weyl dimension"
    );
    Ok(out)
}

/// Tensor product decomposition by signed weight shifts against the
/// smaller factor's weight table.
pub fn tensor_decompose(
    alg: &Algebra,
    l1: &Weight,
    l2: &Weight,
    guard: u64,
) -> Result<TypeMultiset, DecompError> {
    let d1 = alg.weyl_dim(l1)?;
    let d2 = alg.weyl_dim(l2)?;
    let product = &d1 * &d2;
    check_guard(&product, guard)?;
    let (big, small) = if d2 <= d1 { (l1, l2) } else { (l2, l1) };

    let table = freudenthal(alg, small, guard)?;
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (nu, m) in &table.entries {
        let shifted = big.add(nu).add(&alg.rho);
        if let Some((dom, sign)) = alg.dominant_word_parity(&shifted) {
            let hw = dom.sub(&alg.rho);
            *acc.entry(hw).or_insert(0) += sign * (*m as i64);
        }
    }
    let mut out = TypeMultiset::new(alg.tag);
    for (w, m) in acc {
        assert!(m >= 0, "tensor multiplicities are nonnegative");
        if m > 0 {
            out.add(w, m as u64);
        }
    }
    assert_eq!(
        out.total_dim(alg)?,
        product,
        "tensor decomposition must be dimension-additive"
    );
    Ok(out)
}

/// Restriction of the irreducible `lambda` to a Levi subalgebra of `alg`,
/// by stripping highest weights off the full weight table.
pub fn branch_oracle(
    alg: &Algebra,
    lambda: &Weight,
    levi: &Algebra,
    guard: u64,
) -> Result<TypeMultiset, DecompError> {
    for s in &levi.simples {
        if !alg.simples.contains(s) {
            return Err(DecompError::NotASubalgebra(format!(
                "Levi simple root {s} is not a simple root of the acting algebra"
            )));
        }
    }
    let table = freudenthal(alg, lambda, guard)?;
    branch_table(&table, levi, guard)
}

/// Strips a Levi-invariant weight table into irreducible Levi constituents.
///
/// Weights are visited once, in descending height order; a residual weight
/// reached with positive multiplicity is automatically maximal, hence a
/// highest weight.
pub fn branch_table(
    table: &WeightTable,
    levi: &Algebra,
    guard: u64,
) -> Result<TypeMultiset, DecompError> {
    let height = |w: &Weight| -> Q {
        let mut acc = Q::zero();
        for beta in &levi.positive {
            acc += levi.sys.coroot_pair(w, beta);
        }
        acc
    };

    let mut order: Vec<(Q, Weight)> = table
        .entries
        .keys()
        .map(|w| (height(w), w.clone()))
        .collect();
    order.sort_by(|a, b| b.cmp(a));

    let mut rest: BTreeMap<Weight, i64> = table
        .entries
        .iter()
        .map(|(w, m)| (w.clone(), *m as i64))
        .collect();
    let mut out = TypeMultiset::new(levi.tag);
    for (_, top) in &order {
        let mult = rest.get(top).copied().unwrap_or(0);
        if mult == 0 {
            continue;
        }
        assert!(mult > 0, "stripping must keep multiplicities nonnegative");
        assert!(
            levi.is_dominant(top),
            "a maximal residual weight must be Levi-dominant"
        );
        let ch = freudenthal(levi, top, guard)?;
        for (w, m) in &ch.entries {
            let e = rest.entry(w.clone()).or_insert(0);
            *e -= mult * (*m as i64);
            assert!(*e >= 0, "stripping went negative at {w}");
        }
        out.add(top.clone(), mult as u64);
    }
    assert!(
        rest.values().all(|m| *m == 0),
        "stripping must exhaust the table"
    );
    Ok(out)
}

/// Multiplicity of the irreducible `lambda` inside an invariant character,
/// via the alternating sum over the Weyl orbit of rho. Only support
/// weights are visited.
pub fn irrep_multiplicity_in_table(alg: &Algebra, table: &WeightTable, lambda: &Weight) -> i64 {
    let lam_rho = lambda.add(&alg.rho);
    let rho_norm = alg.sys.pair(&alg.rho, &alg.rho);
    let mut acc = 0i64;
    for (mu, m) in &table.entries {
        // mu = lambda + rho - w(rho) for some w iff lambda + rho - mu is
        // in the rho-orbit; the sign is the parity of the chamber word.
        // Orbit members share the norm of rho, which filters cheaply.
        let cand = lam_rho.sub(mu);
        if alg.sys.pair(&cand, &cand) != rho_norm {
            continue;
        }
        if let Some((dom, sign)) = alg.to_dominant_signed(&cand) {
            if dom == alg.rho {
                acc += sign * (*m as i64);
            }
        }
    }
    acc
}

/// Character tables of symmetric powers `h_m` of a module given by its
/// weight table, via the power-sum recursion `m h_m = sum p_k h_{m-k}`.
pub struct SymPowers {
    module: Vec<(Weight, BigInt)>,
    tables: Vec<BTreeMap<Weight, BigInt>>,
    rank: usize,
}

impl SymPowers {
    pub fn new(module: &WeightTable, rank: usize) -> SymPowers {
        let module: Vec<(Weight, BigInt)> = module
            .entries
            .iter()
            .map(|(w, m)| (w.clone(), BigInt::from(*m)))
            .collect();
        let mut h0 = BTreeMap::new();
        h0.insert(Weight::zero(rank), BigInt::one());
        SymPowers {
            module,
            tables: vec![h0],
            rank,
        }
    }

    /// Weight table of `S^m`, computing the intermediate powers on demand.
    pub fn table(&mut self, m: usize) -> WeightTable {
        while self.tables.len() <= m {
            let k = self.tables.len();
            let mut acc: BTreeMap<Weight, BigInt> = BTreeMap::new();
            for j in 1..=k {
                // p_j has entries (j*w, mult) over the module weights.
                for (w, mw) in &self.module {
                    let jw = w.scale(&q(j as i64));
                    for (v, mv) in &self.tables[k - j] {
                        let key = jw.add(v);
                        let term = mw * mv;
                        *acc.entry(key).or_insert_with(BigInt::zero) += term;
                    }
                }
            }
            let kk = BigInt::from(k);
            let mut hk = BTreeMap::new();
            for (w, v) in acc {
                if v.is_zero() {
                    continue;
                }
                let (quot, rem) = num_integer::Integer::div_rem(&v, &kk);
                assert!(rem.is_zero(), "power-sum recursion must divide exactly");
                hk.insert(w, quot);
            }
            self.tables.push(hk);
        }
        let entries = self.tables[m]
            .iter()
            .map(|(w, v)| (w.clone(), v.to_u64().expect("multiplicity fits u64")))
            .collect();
        WeightTable { entries }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The Levi algebra of a grading datum.
pub fn algebra_l(datum: &BdsDatum) -> Algebra {
    Algebra::from_parts(
        Arc::clone(&datum.sys),
        AlgebraTag::L,
        datum.l_simples(),
        datum.delta0_pos(),
    )
}

/// The compact-factor algebra of a grading datum.
pub fn algebra_k(datum: &BdsDatum) -> Algebra {
    let mut positive = datum.delta0_pos();
    positive.extend(datum.layer(2).iter().cloned());
    Algebra::from_parts(
        Arc::clone(&datum.sys),
        AlgebraTag::K,
        datum.k_simples.clone(),
        positive,
    )
}

pub fn algebra_g(datum: &BdsDatum) -> Algebra {
    Algebra::ambient(Arc::clone(&datum.sys))
}

/// The k-algebra of a Hermitian pair.
pub fn pair_algebra_k(pair: &HermitianPair) -> Algebra {
    let mut positive = pair.delta0_pos.clone();
    positive.extend(pair.delta2.iter().cloned());
    Algebra::from_parts(
        Arc::clone(&pair.sys),
        AlgebraTag::K,
        pair.simples.clone(),
        positive,
    )
}

/// The Levi algebra of a Hermitian pair.
pub fn pair_algebra_l(pair: &HermitianPair) -> Algebra {
    Algebra::from_parts(
        Arc::clone(&pair.sys),
        AlgebraTag::L,
        pair.levi_simples(),
        pair.delta0_pos.clone(),
    )
}

/// Partition-indexed decomposition of `S^m` of the lower non-compact
/// layer: one multiplicity-one constituent per partition of `m` into at
/// most `rank` parts, with highest weight `sum a_i gamma_i`.
pub fn schmid(m: usize, cascade: &Cascade, pair: &HermitianPair) -> TypeMultiset {
    let mut out = TypeMultiset::new(AlgebraTag::L);
    for part in partitions_into(m, cascade.rank()) {
        let hw = cascade.weight_of_partition(&part);
        assert!(
            pair.is_l_dominant(&hw),
            "partition weights are Levi-dominant"
        );
        assert_eq!(out.mult(&hw), 0, "the decomposition is multiplicity-free");
        out.add(hw, 1);
    }
    out
}

/// All partitions `a_1 >= ... >= a_r >= 0` of `m` into at most `r` parts,
/// padded to exactly `r` entries.
pub fn partitions_into(m: usize, r: usize) -> Vec<Vec<u32>> {
    fn rec(
        m: usize,
        slots: usize,
        max: usize,
        prefix: &mut Vec<u32>,
        r: usize,
        out: &mut Vec<Vec<u32>>,
    ) {
        if m == 0 {
            let mut full = prefix.clone();
            full.resize(r, 0);
            out.push(full);
            return;
        }
        if slots == 0 || max == 0 {
            return;
        }
        for a in (1..=m.min(max)).rev() {
            prefix.push(a as u32);
            rec(m - a, slots - 1, a, prefix, r, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    rec(m, r, m, &mut prefix, r, &mut out);
    out
}

/// Weight table of the middle lower layer as a Levi module (each root of
/// the layer once).
pub fn u_minus_one_table(datum: &BdsDatum) -> WeightTable {
    let entries = datum.layer(-1).iter().map(|r| (r.clone(), 1u64)).collect();
    WeightTable { entries }
}

/// Dimension of `S^m` of an `n`-dimensional space.
pub fn sym_dim(n: usize, m: usize) -> BigInt {
    binomial(n + m - 1, m)
}

/// Decomposition of `S^m(u_{-1})` into Levi types.
pub fn sym_power_u1(datum: &BdsDatum, m: usize, guard: u64) -> Result<TypeMultiset, DecompError> {
    let n = datum.layer(-1).len();
    let dim = sym_dim(n, m);
    check_guard(&dim, guard)?;
    let levi = algebra_l(datum);
    let mut powers = SymPowers::new(&u_minus_one_table(datum), datum.sys.rank);
    let table = powers.table(m);
    assert_eq!(table.dim(), dim);
    branch_table(&table, &levi, guard)
}

/// One-dimensional constituents of `S^m(u_{-1})` for `m <= m_max`.
///
/// Each hit is returned as `(degree, weight)`; the weight always equals
/// `q eps*` with `q = -m ||eps||^2 / (4 ||eps*||^2)`.
pub fn detect_relative_invariants(
    datum: &BdsDatum,
    m_max: usize,
    guard: u64,
) -> Result<Vec<(usize, Weight)>, DecompError> {
    let n = datum.layer(-1).len();
    let dim = sym_dim(n, m_max);
    check_guard(&dim, guard)?;

    let levi = algebra_l(datum);
    let eps_norm = datum.norm2(&datum.eps);
    let eps_star_norm = datum.norm2(&datum.eps_star);
    let mut powers = SymPowers::new(&u_minus_one_table(datum), datum.sys.rank);

    let mut hits = Vec::new();
    for m in 1..=m_max {
        let q_m = q(-(m as i64)) * &eps_norm / (q(4) * &eps_star_norm);
        let candidate = datum.eps_star.scale(&q_m);
        if !levi.is_integral(&candidate) {
            continue;
        }
        let table = powers.table(m);
        let mult = irrep_multiplicity_in_table(&levi, &table, &candidate);
        assert!(
            (0..=1).contains(&mult),
            "relative invariants of a fixed degree span at most a line"
        );
        if mult == 1 {
            hits.push((m, candidate));
        }
    }
    Ok(hits)
}
