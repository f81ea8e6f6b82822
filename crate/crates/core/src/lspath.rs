//! The Littelmann path model: piecewise-linear rational paths, root
//! operators, concatenation, model generation and Levi branching.
//!
//! A path is stored as a list of (velocity, duration) segments starting at
//! the origin, normalized so that durations sum to one, zero velocities are
//! dropped and adjacent positively-proportional velocities are merged.
//! Operators act through the height function `h(t) = <path(t), alpha^vee>`
//! with the last-minimum / first-return rule.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::bds::HermitianPair;
use crate::decomp::{
    branch_oracle, pair_algebra_k, pair_algebra_l, Algebra, AlgebraTag, DecompError, TypeMultiset,
};
use crate::ratio::{is_integer, q, qr, Q};
use crate::rootsys::{RootSystem, Weight};
use crate::strongorth::Cascade;

#[derive(Clone, Debug)]
pub enum PathError {
    NotDominant(Weight),
    NotIntegral(Weight),
    Construction(String),
    Hypothesis(String),
    Decomp(DecompError),
}

impl fmt::Display for PathError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathError::NotDominant(w) => write!(f, "shape {w} is not dominant"),
            PathError::NotIntegral(w) => write!(f, "shape {w} is not integral"),
            PathError::Construction(msg) => write!(f, "path construction failed: {msg}"),
            PathError::Hypothesis(msg) => write!(f, "hypothesis not met: {msg}"),
            PathError::Decomp(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for PathError {}

impl From<DecompError> for PathError {
    fn from(e: DecompError) -> Self {
        PathError::Decomp(e)
    }
}

/// A piecewise-linear path from the origin, normalized.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LsPath {
    /// Displacement steps between consecutive vertices; no step is zero
    /// and no two adjacent steps are positively proportional. This is the
    /// canonical form of the path modulo reparametrization; each step is
    /// traversed on an equal parameter share.
    steps: Vec<Weight>,
}

impl fmt::Debug for LsPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "path[")?;
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{s:?}")?;
        }
        write!(f, "]")
    }
}

fn positively_proportional(a: &Weight, b: &Weight) -> bool {
    // Both nonzero; b = c a with c > 0.
    let mut c: Option<Q> = None;
    for (x, y) in a.coords.iter().zip(&b.coords) {
        match (x.is_zero(), y.is_zero()) {
            (true, true) => {}
            (true, false) | (false, true) => return false,
            (false, false) => {
                let r = y / x;
                if !r.is_positive() {
                    return false;
                }
                match &c {
                    None => c = Some(r),
                    Some(c0) => {
                        if *c0 != r {
                            return false;
                        }
                    }
                }
            }
        }
    }
    c.is_some()
}

impl LsPath {
    /// The straight path `t -> t lambda`.
    pub fn straight(lambda: &Weight) -> LsPath {
        LsPath::from_displacements(std::slice::from_ref(lambda))
    }

    /// Path through the given successive displacement steps.
    pub fn from_displacements(steps: &[Weight]) -> LsPath {
        let mut out: Vec<Weight> = Vec::new();
        for s in steps {
            if s.is_zero() {
                continue;
            }
            match out.last_mut() {
                Some(prev) if positively_proportional(prev, s) => {
                    *prev = prev.add(s);
                }
                _ => out.push(s.clone()),
            }
        }
        LsPath { steps: out }
    }

    /// Segment view: (velocity, duration) pairs at the canonical
    /// equal-share parametrization.
    pub fn segments(&self) -> Vec<(Weight, Q)> {
        let n = self.steps.len();
        let dur = Q::one() / q(n.max(1) as i64);
        self.steps
            .iter()
            .map(|s| (s.scale(&q(n as i64)), dur.clone()))
            .collect()
    }

    pub fn is_constant(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn endpoint_with_rank(&self, rank: usize) -> Weight {
        let mut acc = Weight::zero(rank);
        for s in &self.steps {
            acc = acc.add(s);
        }
        acc
    }

    /// Vertices `(t_i, path(t_i))` including both endpoints.
    pub fn vertices(&self, rank: usize) -> Vec<(Q, Weight)> {
        let n = self.steps.len();
        if n == 0 {
            return vec![
                (Q::zero(), Weight::zero(rank)),
                (Q::one(), Weight::zero(rank)),
            ];
        }
        let mut out = vec![(Q::zero(), Weight::zero(rank))];
        let mut p = Weight::zero(rank);
        for (i, s) in self.steps.iter().enumerate() {
            p = p.add(s);
            out.push((qr((i + 1) as i64, n as i64), p.clone()));
        }
        out
    }

    /// Displacement accumulated between absolute times `a <= b`, broken at
    /// original vertices.
    fn portion(&self, a: &Q, b: &Q) -> Vec<Weight> {
        let n = self.steps.len();
        let mut out = Vec::new();
        for (k, s) in self.steps.iter().enumerate() {
            let lo = qr(k as i64, n as i64);
            let hi = qr((k + 1) as i64, n as i64);
            let from = if *a > lo { a.clone() } else { lo };
            let to = if *b < hi { b.clone() } else { hi };
            if to > from {
                out.push(s.scale(&((&to - &from) * q(n as i64))));
            }
        }
        out
    }

    /// True when `point` lies on the image of the path.
    pub fn passes_through(&self, rank: usize, point: &Weight) -> bool {
        let verts = self.vertices(rank);
        for w in verts.windows(2) {
            let (_, a) = &w[0];
            let (_, b) = &w[1];
            if point == a || point == b {
                return true;
            }
            // point = a + s (b - a) for some 0 < s < 1.
            let dir = b.sub(a);
            let off = point.sub(a);
            let mut s: Option<Q> = None;
            let mut ok = true;
            for (x, y) in dir.coords.iter().zip(&off.coords) {
                if x.is_zero() {
                    if !y.is_zero() {
                        ok = false;
                        break;
                    }
                } else {
                    let r = y / x;
                    match &s {
                        None => s = Some(r),
                        Some(s0) => {
                            if *s0 != r {
                                ok = false;
                                break;
                            }
                        }
                    }
                }
            }
            if ok {
                if let Some(s) = s {
                    if s.is_positive() && s < Q::one() {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Concatenation: traverse `p1`, then `p2` from its endpoint.
pub fn concat(p1: &LsPath, p2: &LsPath) -> LsPath {
    let steps: Vec<Weight> = p1.steps.iter().chain(&p2.steps).cloned().collect();
    LsPath::from_displacements(&steps)
}

fn heights(sys: &RootSystem, path: &LsPath, alpha: &Weight) -> Vec<Q> {
    path.vertices(sys.rank)
        .iter()
        .map(|(_, p)| sys.coroot_pair(p, alpha))
        .collect()
}

fn rebuild(sys: &RootSystem, path: &LsPath, alpha: &Weight, t1: &Q, t2: &Q) -> LsPath {
    // Reflect the displacement between t1 and t2; the tail translation is
    // implicit in the displacement representation.
    let mut steps = path.portion(&Q::zero(), t1);
    for s in path.portion(t1, t2) {
        steps.push(sys.reflect(&s, alpha));
    }
    steps.extend(path.portion(t2, &Q::one()));
    LsPath::from_displacements(&steps)
}

/// Littelmann lowering operator for the root `alpha`.
pub fn f_op(sys: &RootSystem, path: &LsPath, alpha: &Weight) -> Option<LsPath> {
    let verts = path.vertices(sys.rank);
    let h = heights(sys, path, alpha);
    let m = h.iter().min().cloned().unwrap();
    if &h[h.len() - 1] - &m < Q::one() {
        return None;
    }
    let i1 = (0..h.len()).rev().find(|&i| h[i] == m).unwrap();
    let t1 = verts[i1].0.clone();
    let target = &m + Q::one();
    let mut t2 = None;
    for j in i1..h.len() {
        if h[j] == target {
            t2 = Some(verts[j].0.clone());
            break;
        }
        if j + 1 < h.len() && h[j] < target && h[j + 1] >= target {
            let frac = (&target - &h[j]) / (&h[j + 1] - &h[j]);
            let t = &verts[j].0 + frac * (&verts[j + 1].0 - &verts[j].0);
            t2 = Some(t);
            break;
        }
    }
    let t2 = t2.expect("first return to m+1 exists when h(1) - m >= 1");
    Some(rebuild(sys, path, alpha, &t1, &t2))
}

/// Littelmann raising operator for the root `alpha`.
pub fn e_op(sys: &RootSystem, path: &LsPath, alpha: &Weight) -> Option<LsPath> {
    let verts = path.vertices(sys.rank);
    let h = heights(sys, path, alpha);
    let m = h.iter().min().cloned().unwrap();
    if -&m < Q::one() {
        return None;
    }
    let i2 = (0..h.len()).find(|&i| h[i] == m).unwrap();
    let t2 = verts[i2].0.clone();
    let target = &m + Q::one();
    let mut t1 = None;
    for j in (0..=i2).rev() {
        if h[j] == target {
            t1 = Some(verts[j].0.clone());
            break;
        }
        if j > 0 && h[j] < target && h[j - 1] >= target {
            let frac = (&target - &h[j]) / (&h[j - 1] - &h[j]);
            let t = &verts[j].0 - frac * (&verts[j].0 - &verts[j - 1].0);
            t1 = Some(t);
            break;
        }
    }
    let t1 = t1.expect("last visit to m+1 before the minimum exists");
    Some(rebuild(sys, path, alpha, &t1, &t2))
}

/// Applies `f_alpha` exactly `n` times, or reports how far it got.
pub fn f_string(sys: &RootSystem, path: &LsPath, alpha: &Weight, n: u64) -> Option<LsPath> {
    let mut cur = path.clone();
    for _ in 0..n {
        cur = f_op(sys, &cur, alpha)?;
    }
    Some(cur)
}

/// Evaluates `f_alpha` on a concatenation via the factor-routing rule and
/// checks it against the direct computation.
pub fn f_on_concat(sys: &RootSystem, p1: &LsPath, p2: &LsPath, alpha: &Weight) -> Option<LsPath> {
    // Count how often f applies to p1 and e applies to p2.
    let mut n1 = 0u64;
    let mut cur = p1.clone();
    while let Some(next) = f_op(sys, &cur, alpha) {
        n1 += 1;
        cur = next;
    }
    let mut n2 = 0u64;
    let mut cur = p2.clone();
    while let Some(next) = e_op(sys, &cur, alpha) {
        n2 += 1;
        cur = next;
    }
    // The first factor absorbs the operator iff some power of f survives
    // on it while the matching power of e dies on the second factor.
    let routed = if n1 > n2 {
        f_op(sys, p1, alpha).map(|fp1| concat(&fp1, p2))
    } else {
        f_op(sys, p2, alpha).map(|fp2| concat(p1, &fp2))
    };
    let direct = f_op(sys, &concat(p1, p2), alpha);
    assert_eq!(
        routed, direct,
        "factor routing must match the direct operator"
    );
    direct
}

/// The set of paths of a given shape, generated from the straight path.
pub struct PathModel {
    pub shape: Weight,
    pub paths: Vec<LsPath>,
}

/// Closure of the straight path of shape `shape` under the lowering
/// operators of the algebra's simple roots. The size always equals the
/// Weyl dimension of the shape.
pub fn path_model(alg: &Algebra, shape: &Weight, guard: u64) -> Result<PathModel, PathError> {
    if !alg.is_dominant(shape) {
        return Err(PathError::NotDominant(shape.clone()));
    }
    if !alg.is_integral(shape) {
        return Err(PathError::NotIntegral(shape.clone()));
    }
    let dim = alg.weyl_dim(shape)?;
    if dim > BigInt::from(guard) {
        return Err(PathError::Decomp(DecompError::GuardExceeded {
            needed: dim,
            guard,
        }));
    }

    let start = LsPath::straight(shape);
    let mut seen: HashSet<LsPath> = HashSet::new();
    seen.insert(start.clone());
    let mut frontier = vec![start];
    while let Some(p) = frontier.pop() {
        for alpha in &alg.simples {
            if let Some(next) = f_op(&alg.sys, &p, alpha) {
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
    }
    let mut paths: Vec<LsPath> = seen.into_iter().collect();
    paths.sort();
    let model = PathModel {
        shape: shape.clone(),
        paths,
    };
    assert_eq!(
        BigInt::from(model.paths.len()),
        dim,
        "model size must equal the Weyl dimension"
    );
    Ok(model)
}

/// Local minima of every height function over a path are integers.
pub fn is_ls_integral(alg: &Algebra, path: &LsPath) -> bool {
    for alpha in &alg.simples {
        let h = heights(&alg.sys, path, alpha);
        for i in 0..h.len() {
            let left_down = i == 0 || h[i - 1] > h[i];
            let right_up = i + 1 == h.len() || h[i + 1] > h[i];
            if left_down && right_up && !is_integer(&h[i]) {
                return false;
            }
        }
    }
    true
}

/// A path is Levi-dominant when every height against the chosen simples
/// stays nonnegative along the whole path.
pub fn is_levi_dominant(sys: &RootSystem, path: &LsPath, levi: &[Weight]) -> bool {
    levi.iter()
        .all(|alpha| heights(sys, path, alpha).iter().all(|v| !v.is_negative()))
}

/// Branching by counting endpoints of Levi-dominant paths in the model.
pub fn branch_to_levi(
    alg: &Algebra,
    shape: &Weight,
    levi_subset: &[usize],
    guard: u64,
) -> Result<TypeMultiset, PathError> {
    let model = path_model(alg, shape, guard)?;
    Ok(branch_model(alg, &model, levi_subset))
}

/// Branching from an already-generated model.
pub fn branch_model(alg: &Algebra, model: &PathModel, levi_subset: &[usize]) -> TypeMultiset {
    let levi: Vec<Weight> = levi_subset
        .iter()
        .map(|&i| alg.simples[i].clone())
        .collect();
    let mut out = TypeMultiset::new(AlgebraTag::L);
    for p in &model.paths {
        if is_levi_dominant(&alg.sys, p, &levi) {
            out.add(p.endpoint_with_rank(alg.sys.rank), 1);
        }
    }
    if levi_subset.len() == alg.simples.len() {
        assert_eq!(out.entries.len(), 1, "full restriction has one constituent");
        assert_eq!(out.mult(&model.shape), 1);
    }
    out
}

/// Both containments of the restriction ladder: the restriction of the
/// shape `m eps*` contains the restriction of `(m-p) eps*` shifted by
/// `p eps*`, and in the tube case also shifted by `-p eps*`.
pub fn verify_restriction_ladder(pair: &HermitianPair, m: usize, p: usize, guard: u64) -> Result<bool, PathError> {
    assert!(p <= m);
    let alg_k = pair_algebra_k(pair);
    let levi: Vec<usize> = (0..pair.simples.len())
        .filter(|&i| i != pair.eps_pos)
        .collect();
    let big = pair.eps_star.scale(&q(m as i64));
    let small = pair.eps_star.scale(&q((m - p) as i64));
    let shift = pair.eps_star.scale(&q(p as i64));

    let big_branch = branch_to_levi(&alg_k, &big, &levi, guard)?;
    let small_branch = branch_to_levi(&alg_k, &small, &levi, guard)?;

    let up = small_branch.shifted(&shift);
    let mut ok = up.contained_in(&big_branch);
    if pair.tube {
        let down = small_branch.shifted(&shift.neg());
        ok = ok && down.contained_in(&big_branch);
    }
    Ok(ok)
}

/// Word of full lowering strings driving the straight dominant path to the
/// straight path of an extreme weight `target`.
fn extreme_monomial(
    sys: &RootSystem,
    simples: &[Weight],
    target: &Weight,
) -> Result<Vec<(usize, u64)>, PathError> {
    // Walk target up to the dominant chamber, then replay downwards.
    let mut cur = target.clone();
    let mut ups: Vec<usize> = Vec::new();
    'outer: loop {
        for (i, s) in simples.iter().enumerate() {
            if sys.coroot_pair(&cur, s).is_negative() {
                cur = sys.reflect(&cur, s);
                ups.push(i);
                continue 'outer;
            }
        }
        break;
    }
    let mut word = Vec::new();
    let mut down = cur;
    for &i in ups.iter().rev() {
        let n = sys.coroot_pair(&down, &simples[i]);
        assert!(is_integer(&n) && !n.is_negative());
        let n = crate::ratio::to_bigint(&n)
            .to_u64()
            .expect("string length fits");
        if n > 0 {
            word.push((i, n));
            down = sys.reflect(&down, &simples[i]);
        }
    }
    if down != *target {
        return Err(PathError::Construction(format!(
            "monomial walk missed its target {target}"
        )));
    }
    Ok(word)
}

/// The explicit Levi-dominant member of the model of shape `m eps*` with
/// endpoint `m eps* + p_1 gamma_1 + ... + p_r gamma_r`.
///
/// The path is produced twice: once as the expected concatenation of
/// straight pieces through the prescribed break-points, and once by the
/// operator monomial; the two must agree.
pub fn partition_path(
    pair: &HermitianPair,
    cascade: &Cascade,
    m: u64,
    p_list: &[u64],
    guard: u64,
) -> Result<LsPath, PathError> {
    let r = cascade.rank();
    assert_eq!(p_list.len(), r, "one p per cascade root");
    for w in p_list.windows(2) {
        if w[0] < w[1] {
            return Err(PathError::Hypothesis(
                "p-list must be non-increasing".into(),
            ));
        }
    }
    if p_list[0] > m {
        return Err(PathError::Hypothesis("p_1 may not exceed m".into()));
    }
    let rank = pair.sys.rank;
    let eps_star = &pair.eps_star;

    // Expected concatenation: pieces indexed j = r, r-1, ..., 2, then the
    // bent eps-piece, then the straight remainder.
    let mut displacements: Vec<Weight> = Vec::new();
    for j in (2..=r).rev() {
        let pj = p_list[j - 1];
        let pj1 = if j == r { 0 } else { p_list[j] };
        let step = p_list[j - 1] - if j == r { 0 } else { p_list[j] };
        let _ = (pj, pj1);
        if step > 0 {
            let dir = eps_star.add(&cascade.partial_sum(j));
            displacements.push(dir.scale(&q(step as i64)));
        }
    }
    let p1 = p_list[0];
    let p2 = if r >= 2 { p_list[1] } else { 0 };
    if p1 > p2 {
        let dir = eps_star.add(&cascade.partial_sum(1));
        displacements.push(dir.scale(&q((p1 - p2) as i64)));
    }
    if m > p1 {
        displacements.push(eps_star.scale(&q((m - p1) as i64)));
    }
    let expected = LsPath::from_displacements(&displacements);

    // Break-points from the construction, in visiting order.
    let mut breaks: Vec<Weight> = Vec::new();
    let mut acc = Weight::zero(rank);
    for d in &displacements {
        acc = acc.add(d);
        breaks.push(acc.clone());
    }

    // Operator route: strings for each straight piece, applied to the
    // straight path of shape m eps*.
    let mut tau = LsPath::straight(&eps_star.scale(&q(m as i64)));
    for j in (2..=r).rev() {
        let step = p_list[j - 1] - if j == r { 0 } else { p_list[j] };
        if step == 0 {
            continue;
        }
        let target = eps_star.add(&cascade.partial_sum(j)).scale(&q(step as i64));
        let word = extreme_monomial(&pair.sys, &pair.simples, &target)?;
        for (i, n) in word {
            tau = f_string(&pair.sys, &tau, &pair.simples[i], n).ok_or_else(|| {
                PathError::Construction(format!(
                    "lowering string died on piece j={j} at simple {i}"
                ))
            })?;
        }
    }
    if p1 > p2 {
        tau = f_string(&pair.sys, &tau, &pair.eps, p1 - p2)
            .ok_or_else(|| PathError::Construction("the eps-string died".into()))?;
    }

    if tau != expected {
        return Err(PathError::Construction(
            "operator monomial disagrees with the prescribed break-point path".into(),
        ));
    }

    // Levi dominance along the whole path, endpoint, and break-points.
    let levi = pair.levi_simples();
    if !is_levi_dominant(&pair.sys, &tau, &levi) {
        return Err(PathError::Construction(
            "constructed path is not Levi-dominant".into(),
        ));
    }
    let mut endpoint = eps_star.scale(&q(m as i64));
    for (pi, g) in p_list.iter().zip(&cascade.gammas) {
        endpoint = endpoint.add(&g.scale(&q(*pi as i64)));
    }
    if tau.endpoint_with_rank(rank) != endpoint {
        return Err(PathError::Construction("endpoint mismatch".into()));
    }
    for b in &breaks {
        if !tau.passes_through(rank, b) {
            return Err(PathError::Construction(format!(
                "break-point {b} is not on the path"
            )));
        }
    }

    // Membership in the model, asserted whenever the guard allows.
    let alg_k = pair_algebra_k(pair);
    let shape = eps_star.scale(&q(m as i64));
    if let Ok(dim) = alg_k.weyl_dim(&shape) {
        if dim <= BigInt::from(guard) {
            let model = path_model(&alg_k, &shape, guard)?;
            if !model.paths.contains(&tau) {
                return Err(PathError::Construction("path escaped its model".into()));
            }
        }
    }
    Ok(tau)
}

/// Transports a Levi constituent of the restriction of `m eps*` by the
/// chamber element: a constituent with highest weight `tau` produces the
/// constituent `phi + w_Y(tau)` of the restriction of `w_Y(phi) + m eps*`.
///
/// Requires the tube hypothesis and `phi` orthogonal to the highest
/// non-compact root. The occurrence is certified against the branching
/// oracle whenever the dimension guard allows.
pub fn transport_constituent(
    pair: &HermitianPair,
    phi: &Weight,
    m: u64,
    tau_weight: &Weight,
    guard: u64,
) -> Result<Weight, PathError> {
    if !pair.tube {
        return Err(PathError::Hypothesis(
            "transport needs the tube hypothesis".into(),
        ));
    }
    if !pair.pair_s(phi, &pair.mu).is_zero() {
        return Err(PathError::Hypothesis("phi must be orthogonal to mu".into()));
    }
    if !pair.is_l_dominant(phi) {
        return Err(PathError::Hypothesis("phi must be Levi-dominant".into()));
    }
    if !pair.is_k_integral(phi) {
        return Err(PathError::Hypothesis("phi must be integral".into()));
    }
    let w_y_phi = pair.apply_w_y(phi);
    if !pair.is_k_dominant(&w_y_phi) {
        return Err(PathError::Hypothesis(
            "w_Y(phi) failed to be dominant".into(),
        ));
    }

    let result = phi.add(&pair.apply_w_y(tau_weight));

    let shape = w_y_phi.add(&pair.eps_star.scale(&q(m as i64)));
    let alg_k = pair_algebra_k(pair);
    let levi = pair_algebra_l(pair);
    if let Ok(dim) = alg_k.weyl_dim(&shape) {
        if dim <= BigInt::from(guard) {
            let branched = branch_oracle(&alg_k, &shape, &levi, guard)?;
            if branched.mult(&result) == 0 {
                return Err(PathError::Construction(format!(
                    "transported type {result} does not occur in the restriction of {shape}"
                )));
            }
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bds::build_datum;
    use crate::decomp::{freudenthal, DEFAULT_GUARD};
    use crate::rootsys::{build_root_system, TestRng, TypeLabel};
    use crate::strongorth::cascade;
    use std::sync::Arc;

    fn ambient(label: TypeLabel, rank: usize) -> Algebra {
        Algebra::ambient(build_root_system(label, rank).unwrap())
    }

    #[test]
    fn a1_two_dimensional_module() {
        let a1 = ambient(TypeLabel::A, 1);
        let omega = a1.sys.fundamental_weights[0].clone();
        let p = LsPath::straight(&omega);
        let fp = f_op(&a1.sys, &p, &a1.simples[0]).unwrap();
        assert_eq!(fp.endpoint_with_rank(1), omega.neg());
        assert!(f_op(&a1.sys, &fp, &a1.simples[0]).is_none());
        // e undoes f.
        assert_eq!(e_op(&a1.sys, &fp, &a1.simples[0]).unwrap(), p);
        assert!(e_op(&a1.sys, &p, &a1.simples[0]).is_none());
    }

    #[test]
    fn model_sizes() {
        let a1 = ambient(TypeLabel::A, 1);
        let two_omega = a1.sys.fundamental_weights[0].scale(&q(2));
        assert_eq!(
            path_model(&a1, &two_omega, DEFAULT_GUARD)
                .unwrap()
                .paths
                .len(),
            3
        );

        let a2 = ambient(TypeLabel::A, 2);
        assert_eq!(
            path_model(&a2, &a2.sys.rho.clone(), DEFAULT_GUARD)
                .unwrap()
                .paths
                .len(),
            8
        );

        let c2 = ambient(TypeLabel::C, 2);
        let eps_star = c2.sys.fundamental_weights[1].clone();
        assert_eq!(
            path_model(&c2, &eps_star, DEFAULT_GUARD)
                .unwrap()
                .paths
                .len(),
            5
        );
        // Non-dominant shapes are rejected.
        assert!(path_model(&c2, &eps_star.neg(), DEFAULT_GUARD).is_err());
    }

    #[test]
    fn endpoint_bookkeeping_and_adjointness() {
        // weight(f(p)) = weight(p) - alpha across generated models, and
        // e/f are mutually inverse where defined.
        let algs = [
            ambient(TypeLabel::A, 2),
            ambient(TypeLabel::G, 2),
            ambient(TypeLabel::C, 3),
        ];
        let mut count = 0usize;
        for alg in &algs {
            let shape = alg.sys.rho.clone();
            let model = path_model(&alg, &shape, DEFAULT_GUARD).unwrap();
            for p in &model.paths {
                let w = p.endpoint_with_rank(alg.sys.rank);
                for alpha in &alg.simples {
                    if let Some(fp) = f_op(&alg.sys, p, alpha) {
                        count += 1;
                        assert_eq!(fp.endpoint_with_rank(alg.sys.rank), w.sub(alpha));
                        assert_eq!(e_op(&alg.sys, &fp, alpha).unwrap(), *p);
                    }
                    if let Some(ep) = e_op(&alg.sys, p, alpha) {
                        count += 1;
                        assert_eq!(ep.endpoint_with_rank(alg.sys.rank), w.add(alpha));
                        assert_eq!(f_op(&alg.sys, &ep, alpha).unwrap(), *p);
                    }
                }
            }
        }
        assert!(count > 1000, "exercised {count} operator applications");
    }

    #[test]
    fn ls_integrality_on_models() {
        for alg in [ambient(TypeLabel::B, 2), ambient(TypeLabel::A, 3)] {
            let shape = alg.sys.rho.clone();
            let model = path_model(&alg, &shape, DEFAULT_GUARD).unwrap();
            for p in &model.paths {
                assert!(is_ls_integral(&alg, p));
            }
        }
    }

    #[test]
    fn weyl_translates_are_reachable() {
        // The straight path to w(lambda) is hit by a monomial of full
        // lowering strings.
        let b2 = ambient(TypeLabel::B, 2);
        let lam = b2.sys.rho.clone();
        let mut orbit = vec![lam.clone()];
        let mut frontier = vec![lam.clone()];
        while let Some(w) = frontier.pop() {
            for s in &b2.simples {
                let r = b2.sys.reflect(&w, s);
                if !orbit.contains(&r) {
                    orbit.push(r.clone());
                    frontier.push(r);
                }
            }
        }
        assert_eq!(orbit.len(), 8);
        for target in &orbit {
            let word = extreme_monomial(&b2.sys, &b2.simples, target).unwrap();
            let mut p = LsPath::straight(&lam);
            for (i, n) in word {
                p = f_string(&b2.sys, &p, &b2.simples[i], n).unwrap();
            }
            assert_eq!(p, LsPath::straight(target));
        }
    }

    #[test]
    fn concatenation_basics() {
        let c2 = ambient(TypeLabel::C, 2);
        let eps_star = c2.sys.fundamental_weights[1].clone();
        let a = LsPath::straight(&eps_star.scale(&q(3)));
        let b = LsPath::straight(&eps_star.scale(&q(2)));
        let ab = concat(&a, &b);
        assert_eq!(ab.endpoint_with_rank(2), eps_star.scale(&q(5)));
        // Collinear pieces merge back into the straight path.
        assert_eq!(ab, LsPath::straight(&eps_star.scale(&q(5))));

        let rho = c2.sys.rho.clone();
        let two = concat(&LsPath::straight(&rho), &LsPath::straight(&eps_star));
        assert_eq!(two.endpoint_with_rank(2), rho.add(&eps_star));
    }

    #[test]
    fn concat_routing_matches_direct_operator() {
        // All pairs from the model of shape eps*, all simple roots.
        for (lbl, rank, eps_pos) in [
            (TypeLabel::C, 2usize, 1usize),
            (TypeLabel::B, 3, 0),
            (TypeLabel::C, 3, 2),
        ] {
            let pair = HermitianPair::standalone(lbl, rank, eps_pos).unwrap();
            let alg = pair_algebra_k(&pair);
            let model = path_model(&alg, &pair.eps_star, DEFAULT_GUARD).unwrap();
            for p1 in &model.paths {
                for p2 in &model.paths {
                    for alpha in &alg.simples {
                        // The equality assert lives inside f_on_concat.
                        let _ = f_on_concat(&alg.sys, p1, p2, alpha);
                    }
                }
            }
        }
    }

    #[test]
    fn model_characters_match_freudenthal() {
        let shapes: Vec<(Algebra, Weight)> = vec![
            {
                let a = ambient(TypeLabel::A, 2);
                let r = a.sys.rho.clone();
                (a, r)
            },
            {
                let a = ambient(TypeLabel::C, 2);
                let w = a.sys.fundamental_weights[1].scale(&q(2));
                (a, w)
            },
            {
                let a = ambient(TypeLabel::B, 2);
                let w = a.sys.fundamental_weights[0].add(&a.sys.fundamental_weights[1]);
                (a, w)
            },
        ];
        for (alg, shape) in &shapes {
            let model = path_model(alg, shape, DEFAULT_GUARD).unwrap();
            let table = freudenthal(alg, shape, DEFAULT_GUARD).unwrap();
            let mut counted: std::collections::BTreeMap<Weight, u64> = Default::default();
            for p in &model.paths {
                *counted
                    .entry(p.endpoint_with_rank(alg.sys.rank))
                    .or_insert(0) += 1;
            }
            assert_eq!(counted, table.entries);
        }
    }

    #[test]
    fn branching_examples() {
        let a2 = ambient(TypeLabel::A, 2);
        let omega1 = a2.sys.fundamental_weights[0].clone();
        // Full Levi.
        let t = branch_to_levi(&a2, &omega1, &[0, 1], DEFAULT_GUARD).unwrap();
        assert_eq!(t.mult(&omega1), 1);
        assert_eq!(t.entries.len(), 1);
        // Restriction to the psi_1 line: dimensions 2 and 1.
        let t = branch_to_levi(&a2, &omega1, &[0], DEFAULT_GUARD).unwrap();
        let levi = a2.sub_levi(&[0]);
        let mut dims: Vec<BigInt> = t
            .entries
            .iter()
            .flat_map(|(w, m)| std::iter::repeat(levi.weyl_dim(w).unwrap()).take(*m as usize))
            .collect();
        dims.sort();
        assert_eq!(dims, vec![BigInt::from(1), BigInt::from(2)]);
    }

    #[test]
    fn branching_agrees_with_oracle() {
        let mut rng = TestRng(17);
        for alg in [
            ambient(TypeLabel::A, 3),
            ambient(TypeLabel::B, 3),
            ambient(TypeLabel::C, 3),
        ] {
            for _ in 0..4 {
                let coords: Vec<Q> = (0..alg.sys.rank).map(|_| q(rng.int_in(0, 2))).collect();
                let shape = alg.sys.from_fundamental(&coords);
                let dim = alg.weyl_dim(&shape).unwrap();
                if dim > BigInt::from(400) {
                    continue;
                }
                let subset: Vec<usize> = (0..alg.sys.rank).filter(|_| rng.below(2) == 0).collect();
                let levi = alg.sub_levi(&subset);
                let via_paths = branch_to_levi(&alg, &shape, &subset, DEFAULT_GUARD).unwrap();
                let via_oracle = branch_oracle(&alg, &shape, &levi, DEFAULT_GUARD).unwrap();
                assert_eq!(via_paths.entries, via_oracle.entries);
            }
        }
    }

    #[test]
    fn ladder_containments() {
        let pair = HermitianPair::standalone(TypeLabel::C, 2, 1).unwrap();
        for m in 0..=4usize {
            for p in 0..=m {
                assert!(verify_restriction_ladder(&pair, m, p, DEFAULT_GUARD).unwrap(), "m={m} p={p}");
            }
        }
        // A non-tube pair only gets the upward half.
        let pair = HermitianPair::standalone(TypeLabel::A, 3, 0).unwrap();
        for m in 0..=3usize {
            for p in 0..=m {
                assert!(verify_restriction_ladder(&pair, m, p, DEFAULT_GUARD).unwrap(), "m={m} p={p}");
            }
        }
    }

    #[test]
    fn explicit_dominant_path_c2() {
        let pair = HermitianPair::standalone(TypeLabel::C, 2, 1).unwrap();
        let casc = cascade(&pair);
        // All p entries zero: the straight path.
        let tau = partition_path(&pair, &casc, 3, &[0, 0], DEFAULT_GUARD).unwrap();
        assert_eq!(tau, LsPath::straight(&pair.eps_star.scale(&q(3))));

        // m = 2, p = (1,1): endpoint 2 eps* + gamma_1 + gamma_2 = 0.
        let tau = partition_path(&pair, &casc, 2, &[1, 1], DEFAULT_GUARD).unwrap();
        assert!(tau.endpoint_with_rank(2).is_zero());

        // Every valid p-list for m <= 4 lands inside the Levi branching.
        let alg_k = pair_algebra_k(&pair);
        let levi_idx: Vec<usize> = (0..pair.simples.len())
            .filter(|&i| i != pair.eps_pos)
            .collect();
        for m in 0..=4u64 {
            let branched = branch_to_levi(
                &alg_k,
                &pair.eps_star.scale(&q(m as i64)),
                &levi_idx,
                DEFAULT_GUARD,
            )
            .unwrap();
            for p1 in 0..=m {
                for p2 in 0..=p1 {
                    let tau = partition_path(&pair, &casc, m, &[p1, p2], DEFAULT_GUARD).unwrap();
                    let end = tau.endpoint_with_rank(2);
                    assert!(branched.mult(&end) >= 1, "m={m} p=({p1},{p2})");
                }
            }
        }
    }

    #[test]
    fn explicit_dominant_path_a3() {
        // su(2,2): tube, rank 2.
        let pair = HermitianPair::standalone(TypeLabel::A, 3, 1).unwrap();
        assert!(pair.tube);
        let casc = cascade(&pair);
        assert_eq!(casc.rank(), 2);
        for m in 0..=3u64 {
            for p1 in 0..=m {
                for p2 in 0..=p1 {
                    let tau = partition_path(&pair, &casc, m, &[p1, p2], DEFAULT_GUARD).unwrap();
                    let mut want = pair.eps_star.scale(&q(m as i64));
                    want = want.add(&casc.gammas[0].scale(&q(p1 as i64)));
                    want = want.add(&casc.gammas[1].scale(&q(p2 as i64)));
                    assert_eq!(tau.endpoint_with_rank(3), want);
                }
            }
        }
    }

    #[test]
    fn path_serialization_shape() {
        let c2 = ambient(TypeLabel::C, 2);
        let eps_star = c2.sys.fundamental_weights[1].clone();
        let bent = f_op(&c2.sys, &LsPath::straight(&eps_star), &c2.simples[1]).unwrap();
        let json = crate::report::path_json(&bent);
        assert_eq!(json.len(), bent.segments().len());
        for (dir, len) in &json {
            assert_eq!(dir.len(), 2);
            assert!(crate::ratio::parse_q(len).is_ok());
        }
        // Lengths sum to one.
        let total: Q = json
            .iter()
            .map(|(_, l)| crate::ratio::parse_q(l).unwrap())
            .sum();
        assert_eq!(total, Q::one());
    }

    #[test]
    fn invalid_p_lists_are_rejected() {
        let pair = HermitianPair::standalone(TypeLabel::C, 2, 1).unwrap();
        let casc = cascade(&pair);
        assert!(partition_path(&pair, &casc, 2, &[1, 2], DEFAULT_GUARD).is_err());
        assert!(partition_path(&pair, &casc, 2, &[3, 0], DEFAULT_GUARD).is_err());
    }

    #[test]
    fn transport_examples() {
        // Tube pair from the sp(2,1) grading.
        let datum = build_datum(build_root_system(TypeLabel::C, 3).unwrap(), 1).unwrap();
        let pair = datum.hermitian_pair();
        assert!(pair.tube);
        let casc = cascade(&pair);

        // phi = 0 transports the partition constituents.
        let zero = Weight::zero(3);
        for m in 1..=2u64 {
            let tau = partition_path(&pair, &casc, m, &[m, 0], DEFAULT_GUARD)
                .unwrap()
                .endpoint_with_rank(3);
            let out = transport_constituent(&pair, &zero, m, &tau, DEFAULT_GUARD).unwrap();
            assert_eq!(out, pair.apply_w_y(&tau));
        }

        // A nonzero phi orthogonal to mu.
        let pair_c2 = HermitianPair::standalone(TypeLabel::C, 2, 1).unwrap();
        let phi = Weight {
            coords: vec![q(0), crate::ratio::qr(-1, 2)],
        };
        assert!(pair_c2.pair_s(&phi, &pair_c2.mu).is_zero());
        let m = 1u64;
        let tau_w = pair_c2.eps_star.clone(); // highest path of the model
        let out = transport_constituent(&pair_c2, &phi, m, &tau_w, DEFAULT_GUARD).unwrap();
        assert_eq!(out, phi.add(&pair_c2.apply_w_y(&tau_w)));

        // Non-tube pair refuses transport.
        let pair_a = HermitianPair::standalone(TypeLabel::A, 4, 1).unwrap();
        assert!(transport_constituent(
            &pair_a,
            &Weight::zero(4),
            1,
            &pair_a.eps_star,
            DEFAULT_GUARD
        )
        .is_err());
        let _ = Arc::clone(&datum.sys);
    }
}
