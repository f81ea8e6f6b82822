//! Strongly orthogonal root cascades for Hermitian symmetric pairs.
//!
//! Within the lower non-compact layer, strong orthogonality coincides with
//! orthogonality, so the cascade is built greedily: start from the highest
//! root of the layer in the lexicographic order of simple-root coordinates,
//! then repeatedly take the highest remaining root orthogonal to everything
//! chosen so far.

use num_traits::Zero;

use crate::bds::{BdsError, HermitianPair};
use crate::ratio::{q, Q};
use crate::rootsys::{SimpleSystem, Weight};

/// Ordered maximal set of pairwise orthogonal roots in the lower layer.
#[derive(Clone, Debug)]
pub struct Cascade {
    pub gammas: Vec<Weight>,
}

impl Cascade {
    pub fn rank(&self) -> usize {
        self.gammas.len()
    }

    pub fn partial_sum(&self, j: usize) -> Weight {
        let rank = self.gammas[0].rank();
        let mut acc = Weight::zero(rank);
        for g in &self.gammas[..j] {
            acc = acc.add(g);
        }
        acc
    }

    pub fn sum(&self) -> Weight {
        self.partial_sum(self.gammas.len())
    }

    /// `a_1 gamma_1 + ... + a_r gamma_r` for a partition `a`.
    pub fn weight_of_partition(&self, a: &[u32]) -> Weight {
        assert!(a.len() <= self.gammas.len());
        let mut acc = Weight::zero(self.gammas[0].rank());
        for (ai, g) in a.iter().zip(&self.gammas) {
            acc = acc.add(&g.scale(&q(*ai as i64)));
        }
        acc
    }
}

/// Lexicographic comparison of simple-root coordinate vectors, read in
/// the ambient Bourbaki index order.
fn lex_less(a: &Weight, b: &Weight) -> bool {
    for (x, y) in a.coords.iter().zip(&b.coords) {
        if x < y {
            return true;
        }
        if x > y {
            return false;
        }
    }
    false
}

/// Greedy cascade in the lower non-compact layer of the pair.
pub fn cascade(pair: &HermitianPair) -> Cascade {
    let lower: Vec<Weight> = pair.delta2.iter().map(Weight::neg).collect();
    let mut chosen: Vec<Weight> = Vec::new();
    loop {
        let mut best: Option<&Weight> = None;
        for cand in &lower {
            if chosen.iter().any(|g| !pair.sys.pair(cand, g).is_zero()) {
                continue;
            }
            if chosen.contains(cand) {
                continue;
            }
            match best {
                None => best = Some(cand),
                Some(b) => {
                    assert_ne!(cand, b);
                    if lex_less(b, cand) {
                        best = Some(cand);
                    }
                }
            }
        }
        match best {
            Some(g) => chosen.push(g.clone()),
            None => break,
        }
    }
    assert_eq!(chosen[0], pair.eps.neg(), "the cascade starts at -eps");
    for g in &chosen {
        assert_eq!(
            pair.norm2(g),
            pair.norm2(&pair.eps),
            "cascade roots all have the length of eps"
        );
    }
    Cascade { gammas: chosen }
}

/// Outcome of the tube-hypothesis sum check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SumCheck {
    /// Tube case: the cascade sums to `-2 eps*` exactly.
    Holds,
    /// Non-tube case: the sum is not a nonzero multiple of `eps*`,
    /// matching the converse direction.
    HypothesisNotMet { sum_is_eps_star_multiple: bool },
}

/// Checks the full-sum identity, or the converse failure mode on a
/// non-tube pair.
pub fn verify_sum(cascade: &Cascade, pair: &HermitianPair) -> SumCheck {
    let sum = cascade.sum();
    if pair.tube {
        assert_eq!(
            sum,
            pair.eps_star.scale(&q(-2)),
            "tube cascade must sum to -2 eps*"
        );
        SumCheck::Holds
    } else {
        let multiple = is_nonzero_multiple(&sum, &pair.eps_star);
        assert!(
            !multiple,
            "non-tube cascade sum may not be a nonzero multiple of eps*"
        );
        SumCheck::HypothesisNotMet {
            sum_is_eps_star_multiple: multiple,
        }
    }
}

fn is_nonzero_multiple(w: &Weight, base: &Weight) -> bool {
    if w.is_zero() {
        return false;
    }
    let mut ratio: Option<Q> = None;
    for (a, b) in w.coords.iter().zip(&base.coords) {
        if b.is_zero() {
            if !a.is_zero() {
                return false;
            }
        } else {
            let r = a / b;
            match &ratio {
                None => ratio = Some(r),
                Some(r0) => {
                    if *r0 != r {
                        return false;
                    }
                }
            }
        }
    }
    ratio.is_some()
}

/// Partial sums are orthogonal to every compact simple root that carries a
/// nonzero coefficient in them. No tube hypothesis is needed.
pub fn verify_partial_orthogonality(cascade: &Cascade, pair: &HermitianPair) -> bool {
    let ss = SimpleSystem::new(&pair.sys, pair.simples.clone());
    for j in 1..=cascade.rank() {
        let sum = cascade.partial_sum(j);
        let coeffs = ss
            .coords_in_simples(&sum)
            .expect("cascade sums lie in the span of the k-simples");
        for (i, alpha) in pair.simples.iter().enumerate() {
            if i == pair.eps_pos {
                continue;
            }
            if !coeffs[i].is_zero() && !pair.sys.pair(&sum, alpha).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Tube-only Weyl identities of the cascade:
/// `w_l^0(gamma_j) = gamma_{r+1-j} = -w_Y(gamma_j)` and `-mu` is a member.
pub fn w_action_checks(cascade: &Cascade, pair: &HermitianPair) -> Result<bool, BdsError> {
    if !pair.tube {
        return Err(BdsError::NotTube);
    }
    let r = cascade.rank();
    for (j, g) in cascade.gammas.iter().enumerate() {
        let lhs = pair.apply_w_l0(g);
        let mirrored = cascade.gammas[r - 1 - j].clone();
        if lhs != mirrored {
            return Ok(false);
        }
        if pair.apply_w_y(g) != mirrored.neg() {
            return Ok(false);
        }
    }
    Ok(cascade.gammas.contains(&pair.mu.neg()))
}

/// Exhaustive check that no strictly larger pairwise-orthogonal subset of
/// the lower layer exists (desk-scale oracle).
pub fn maximality_oracle(cascade: &Cascade, pair: &HermitianPair) -> bool {
    let lower: Vec<Weight> = pair.delta2.iter().map(Weight::neg).collect();
    let target = cascade.rank() + 1;
    !has_orthogonal_subset(pair, &lower, &mut Vec::new(), 0, target)
}

fn has_orthogonal_subset(
    pair: &HermitianPair,
    pool: &[Weight],
    chosen: &mut Vec<Weight>,
    from: usize,
    want: usize,
) -> bool {
    if chosen.len() == want {
        return true;
    }
    for i in from..pool.len() {
        let cand = &pool[i];
        if chosen.iter().all(|g| pair.sys.pair(cand, g).is_zero()) {
            chosen.push(cand.clone());
            if has_orthogonal_subset(pair, pool, chosen, i + 1, want) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// In the lower layer, strong orthogonality (neither sum nor difference is
/// a root) coincides with plain orthogonality.
pub fn strong_orthogonality_equivalence(pair: &HermitianPair) -> bool {
    let lower: Vec<Weight> = pair.delta2.iter().map(Weight::neg).collect();
    for (i, a) in lower.iter().enumerate() {
        for b in lower.iter().skip(i + 1) {
            let orth = pair.sys.pair(a, b).is_zero();
            let strong = !pair.sys.is_root(&a.add(b)) && !pair.sys.is_root(&a.sub(b));
            if orth != strong {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bds::build_datum;
    use crate::rootsys::{build_root_system, TestRng, TypeLabel};

    fn pair_of(label: TypeLabel, rank: usize, nu: usize) -> HermitianPair {
        build_datum(build_root_system(label, rank).unwrap(), nu)
            .unwrap()
            .hermitian_pair()
    }

    #[test]
    fn cascade_c_type() {
        // Sp(2)/U(2) from sp(2,1): the cascade reverses the diagonal
        // long roots.
        let p = pair_of(TypeLabel::C, 3, 1);
        let c = cascade(&p);
        assert_eq!(c.rank(), 2);
        assert_eq!(c.gammas[0], p.eps.neg());
        // Second root: -(2 psi_1 + 2 psi_2 + psi_3).
        assert_eq!(
            c.gammas[1],
            Weight {
                coords: vec![q(-2), q(-2), q(-1)]
            }
        );
    }

    #[test]
    fn cascade_quaternionic_is_minus_mu() {
        for (lbl, rank, nu) in [
            (TypeLabel::B, 3, 1),
            (TypeLabel::G, 2, 1),
            (TypeLabel::C, 4, 0),
        ] {
            let pr = pair_of(lbl, rank, nu);
            let c = cascade(&pr);
            assert_eq!(c.rank(), 1);
            assert_eq!(c.gammas[0], pr.mu.neg());
        }
    }

    #[test]
    fn cascade_ranks_match_split_ranks() {
        // A III: min(p, q); C I: p; D III: floor(p/2); BD I: 2;
        // E III: 2; E VII: 3.
        let cases: Vec<(HermitianPair, usize)> = vec![
            (HermitianPair::standalone(TypeLabel::A, 4, 1).unwrap(), 2), // su(2,3)
            (HermitianPair::standalone(TypeLabel::A, 5, 2).unwrap(), 3), // su(3,3)
            (HermitianPair::standalone(TypeLabel::A, 5, 0).unwrap(), 1), // su(1,5)
            (HermitianPair::standalone(TypeLabel::C, 4, 3).unwrap(), 4),
            (HermitianPair::standalone(TypeLabel::D, 5, 4).unwrap(), 2),
            (HermitianPair::standalone(TypeLabel::D, 6, 5).unwrap(), 3),
            (HermitianPair::standalone(TypeLabel::B, 4, 0).unwrap(), 2),
            (HermitianPair::standalone(TypeLabel::D, 5, 0).unwrap(), 2),
            (HermitianPair::standalone(TypeLabel::E, 6, 0).unwrap(), 2),
            (HermitianPair::standalone(TypeLabel::E, 7, 6).unwrap(), 3),
        ];
        for (pr, want) in &cases {
            let c = cascade(pr);
            assert_eq!(c.rank(), *want, "{}", pr.label);
            assert!(maximality_oracle(&c, pr), "{}", pr.label);
        }
    }

    #[test]
    fn e_vii_sum() {
        let pr = HermitianPair::standalone(TypeLabel::E, 7, 6).unwrap();
        let c = cascade(&pr);
        assert_eq!(c.rank(), 3);
        assert!(pr.tube);
        assert_eq!(verify_sum(&c, &pr), SumCheck::Holds);
    }

    #[test]
    fn a_iii_unbalanced_sum_fails_properly() {
        // su(2,3): not tube, and the sum avoids the eps* axis.
        let pr = HermitianPair::standalone(TypeLabel::A, 4, 1).unwrap();
        let c = cascade(&pr);
        assert!(!pr.tube);
        assert_eq!(
            verify_sum(&c, &pr),
            SumCheck::HypothesisNotMet {
                sum_is_eps_star_multiple: false
            }
        );
    }

    #[test]
    fn c_i_sums_and_partial_orthogonality() {
        for p in 2..=5usize {
            let pr = HermitianPair::standalone(TypeLabel::C, p, p - 1).unwrap();
            let c = cascade(&pr);
            assert_eq!(c.rank(), p);
            assert_eq!(verify_sum(&c, &pr), SumCheck::Holds);
            assert!(verify_partial_orthogonality(&c, &pr));
        }
    }

    #[test]
    fn partial_orthogonality_everywhere() {
        let pairs = vec![
            HermitianPair::standalone(TypeLabel::A, 5, 2).unwrap(),
            HermitianPair::standalone(TypeLabel::D, 6, 5).unwrap(),
            HermitianPair::standalone(TypeLabel::E, 6, 0).unwrap(),
            HermitianPair::standalone(TypeLabel::E, 7, 6).unwrap(),
            pair_of(TypeLabel::C, 4, 1),
            pair_of(TypeLabel::B, 5, 2),
            pair_of(TypeLabel::F, 4, 3),
        ];
        for pr in &pairs {
            let c = cascade(pr);
            assert!(verify_partial_orthogonality(&c, pr), "{}", pr.label);
        }
    }

    #[test]
    fn w_action_reversal() {
        // Quaternionic: r = 1 and w_l0 fixes -mu.
        let pr = pair_of(TypeLabel::G, 2, 1);
        let c = cascade(&pr);
        assert!(w_action_checks(&c, &pr).unwrap());

        // C I with p = 3: w_l0 reverses the cascade list.
        let pr = HermitianPair::standalone(TypeLabel::C, 3, 2).unwrap();
        let c = cascade(&pr);
        assert!(w_action_checks(&c, &pr).unwrap());
        for (j, g) in c.gammas.iter().enumerate() {
            assert_eq!(pr.apply_w_l0(g), c.gammas[c.rank() - 1 - j]);
        }

        // Random Levi words fix the full sum.
        let mut rng = TestRng(5);
        let levi = pr.levi_simples();
        let ss = SimpleSystem::new(&pr.sys, levi.clone());
        let target = pr.eps_star.scale(&q(-2));
        for _ in 0..20 {
            let word: Vec<usize> = (0..rng.below(8)).map(|_| rng.below(levi.len())).collect();
            let mut sum = Weight::zero(pr.sys.rank);
            for g in &c.gammas {
                sum = sum.add(&ss.act(&word, g));
            }
            assert_eq!(sum, target);
        }
    }

    #[test]
    fn non_tube_rejects_w_checks() {
        let pr = HermitianPair::standalone(TypeLabel::A, 4, 1).unwrap();
        let c = cascade(&pr);
        assert!(w_action_checks(&c, &pr).is_err());
    }

    #[test]
    fn strong_orthogonality_is_plain_orthogonality() {
        for pr in [
            HermitianPair::standalone(TypeLabel::A, 5, 2).unwrap(),
            HermitianPair::standalone(TypeLabel::C, 4, 3).unwrap(),
            HermitianPair::standalone(TypeLabel::D, 6, 5).unwrap(),
            pair_of(TypeLabel::B, 4, 2),
        ] {
            assert!(strong_orthogonality_equivalence(&pr), "{}", pr.label);
        }
    }

    #[test]
    fn cascade_is_deterministic() {
        let pr = pair_of(TypeLabel::D, 6, 3);
        let a = cascade(&pr);
        let b = cascade(&pr);
        assert_eq!(a.gammas, b.gammas);
    }
}
