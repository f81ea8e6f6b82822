//! Borel-de Siebenthal data: the five-part root grading attached to a
//! simple root `nu` of coefficient 2 in the highest root, the Hermitian
//! pair it induces, derived constants, and the classification tables.

use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::ratio::{is_integer, q, qr, to_i64, Q};
use crate::rootsys::{RootSystem, SimpleSystem, TypeLabel, Weight};

#[derive(Clone, Debug)]
pub enum BdsError {
    NotBdsOrder { nu: usize, coefficient: Q },
    NotLeviDominant(Weight),
    NotCentral(Weight),
    NotQuaternionic,
    NotTube,
    NoRelativeInvariant,
    NotIntegral(Weight),
    Precondition(String),
}

impl fmt::Display for BdsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BdsError::NotBdsOrder { nu, coefficient } => write!(
                f,
                "simple root psi_{} has coefficient {} in the highest root, need 2",
                nu + 1,
                coefficient
            ),
            BdsError::NotLeviDominant(w) => write!(f, "weight {w} is not Levi-dominant"),
            BdsError::NotCentral(w) => write!(f, "weight {w} is not orthogonal to nu*"),
            BdsError::NotQuaternionic => write!(f, "datum is not quaternionic"),
            BdsError::NotTube => write!(f, "Hermitian pair is not of tube type"),
            BdsError::NoRelativeInvariant => {
                write!(f, "no nontrivial relative invariant exists for this datum")
            }
            BdsError::NotIntegral(w) => write!(f, "weight {w} is not integral"),
            BdsError::Precondition(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for BdsError {}

/// All simple roots whose coefficient in the highest root is exactly 2.
pub fn enumerate_bds_orders(sys: &RootSystem) -> Vec<usize> {
    (0..sys.rank)
        .filter(|&i| sys.highest_root.coords[i] == q(2))
        .collect()
}

/// An irreducible Hermitian symmetric pair: a simple system for `k` with a
/// single non-compact simple root `eps` of coefficient 1 in the highest
/// root of its component.
#[derive(Clone)]
pub struct HermitianPair {
    pub sys: Arc<RootSystem>,
    /// Simple roots of k, in ambient coordinates.
    pub simples: Vec<Weight>,
    /// Position of eps within `simples`.
    pub eps_pos: usize,
    /// Global factor on the ambient pairing (from the grading that produced
    /// the pair, or 1 for standalone pairs).
    pub scale: Q,
    pub eps: Weight,
    /// Highest root of the non-compact layer.
    pub mu: Weight,
    pub eps_star: Weight,
    pub rho_k: Weight,
    pub delta0_pos: Vec<Weight>,
    pub delta2: Vec<Weight>,
    /// Longest element of W(k) as a word over `simples`.
    pub w_k0: Vec<usize>,
    /// Longest element of W(l) as a word over the Levi simples.
    pub w_l0: Vec<usize>,
    pub tube: bool,
    pub label: String,
}

impl HermitianPair {
    /// Builds the pair attached to a simple system with non-compact root at
    /// `eps_pos`. `delta2` must hold the roots whose `eps`-coefficient (in
    /// the `simples` basis) is 1 and `delta0_pos` the positive ones with
    /// coefficient 0.
    fn assemble(
        sys: Arc<RootSystem>,
        simples: Vec<Weight>,
        eps_pos: usize,
        scale: Q,
        delta0_pos: Vec<Weight>,
        delta2: Vec<Weight>,
        label: String,
    ) -> HermitianPair {
        let eps = simples[eps_pos].clone();
        let ss = SimpleSystem::new(&sys, simples.clone());
        let eps_star = ss.fundamental_weight(eps_pos);

        let mut rho2 = Weight::zero(sys.rank);
        for r in delta0_pos.iter().chain(&delta2) {
            rho2 = rho2.add(r);
        }
        let rho_k = rho2.scale(&qr(1, 2));

        let mu = delta2
            .iter()
            .find(|cand| delta2.iter().all(|r| r.leq_root_order(cand)))
            .cloned()
            .expect("the non-compact layer has a highest root");

        let w_k0 = ss.longest_word();
        let levi: Vec<Weight> = simples
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != eps_pos)
            .map(|(_, w)| w.clone())
            .collect();
        let w_l0 = SimpleSystem::new(&sys, levi).longest_word();

        let tube = ss.act(&w_k0, &eps) == eps.neg();

        HermitianPair {
            sys,
            simples,
            eps_pos,
            scale,
            eps,
            mu,
            eps_star,
            rho_k,
            delta0_pos,
            delta2,
            w_k0,
            w_l0,
            tube,
            label,
        }
    }

    /// Standalone pair on a fresh simple system, e.g. (E6, psi_1) or
    /// (C_p, psi_p). The chosen simple root must have coefficient 1 in the
    /// highest root.
    pub fn standalone(
        label: TypeLabel,
        rank: usize,
        eps_index: usize,
    ) -> Result<HermitianPair, BdsError> {
        let sys = crate::rootsys::build_root_system(label, rank)
            .map_err(|e| BdsError::Precondition(e.to_string()))?;
        let coeff = sys.highest_root.coords[eps_index].clone();
        if coeff != q(1) {
            return Err(BdsError::Precondition(format!(
                "psi_{} has coefficient {} in the highest root, need 1",
                eps_index + 1,
                coeff
            )));
        }
        let mut delta0_pos = Vec::new();
        let mut delta2 = Vec::new();
        for r in &sys.positive_roots {
            if r.coords[eps_index].is_zero() {
                delta0_pos.push(r.clone());
            } else {
                delta2.push(r.clone());
            }
        }
        let simples = sys.simple_roots.clone();
        let name = format!("{label}{rank}:eps=psi_{}", eps_index + 1);
        Ok(HermitianPair::assemble(
            sys,
            simples,
            eps_index,
            q(1),
            delta0_pos,
            delta2,
            name,
        ))
    }

    pub fn pair_s(&self, a: &Weight, b: &Weight) -> Q {
        self.sys.pair(a, b) * &self.scale
    }

    pub fn norm2(&self, a: &Weight) -> Q {
        self.pair_s(a, a)
    }

    pub fn levi_simples(&self) -> Vec<Weight> {
        self.simples
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != self.eps_pos)
            .map(|(_, w)| w.clone())
            .collect()
    }

    pub fn apply_w_k0(&self, w: &Weight) -> Weight {
        SimpleSystem::new(&self.sys, self.simples.clone()).act(&self.w_k0, w)
    }

    pub fn apply_w_l0(&self, w: &Weight) -> Weight {
        SimpleSystem::new(&self.sys, self.levi_simples()).act(&self.w_l0, w)
    }

    /// `w_Y = w_k^0 w_l^0` (the Levi part acts first).
    pub fn apply_w_y(&self, w: &Weight) -> Weight {
        self.apply_w_k0(&self.apply_w_l0(w))
    }

    pub fn is_k_dominant(&self, w: &Weight) -> bool {
        self.simples
            .iter()
            .all(|s| !self.sys.coroot_pair(w, s).is_negative())
    }

    pub fn is_l_dominant(&self, w: &Weight) -> bool {
        self.levi_simples()
            .iter()
            .all(|s| !self.sys.coroot_pair(w, s).is_negative())
    }

    pub fn is_k_integral(&self, w: &Weight) -> bool {
        self.simples
            .iter()
            .all(|s| is_integer(&self.sys.coroot_pair(w, s)))
    }
}

/// A Borel-de Siebenthal order `(Psi, nu)` with its grading and constants.
#[derive(Clone)]
pub struct BdsDatum {
    pub sys: Arc<RootSystem>,
    pub nu: usize,
    /// Pairing factor making `<nu, nu> = 2`.
    pub scale: Q,
    /// `delta[i + 2]` holds the roots with nu-coefficient `i`.
    pub delta: [Vec<Weight>; 5],
    pub mu: Weight,
    pub eps: Weight,
    pub nu_star: Weight,
    pub eps_star: Weight,
    pub rho_g: Weight,
    pub rho_k: Weight,
    /// Sum over the top layer equals `c * eps_star`.
    pub c: i64,
    /// Size of the top layer.
    pub s: usize,
    pub k_simples: Vec<Weight>,
    pub l_subset: Vec<usize>,
    /// `mu = d * nu_star` in the quaternionic case.
    pub d: Option<i64>,
    /// Highest root of the middle layer, `w_l^0(nu)`.
    pub delta1_highest: Weight,
}

impl BdsDatum {
    pub fn pair_s(&self, a: &Weight, b: &Weight) -> Q {
        self.sys.pair(a, b) * &self.scale
    }

    pub fn norm2(&self, a: &Weight) -> Q {
        self.pair_s(a, a)
    }

    pub fn layer(&self, i: i32) -> &[Weight] {
        &self.delta[(i + 2) as usize]
    }

    /// Positive part of the Levi layer.
    pub fn delta0_pos(&self) -> Vec<Weight> {
        self.layer(0)
            .iter()
            .filter(|r| r.coords.iter().all(|c| !c.is_negative()))
            .cloned()
            .collect()
    }

    pub fn quaternionic(&self) -> bool {
        self.d.is_some()
    }

    /// K0/L0 admits a spin structure iff `c` is even.
    pub fn spin_structure(&self) -> bool {
        self.c % 2 == 0
    }

    pub fn hermitian_pair(&self) -> HermitianPair {
        HermitianPair::assemble(
            Arc::clone(&self.sys),
            self.k_simples.clone(),
            self.nu,
            self.scale.clone(),
            self.delta0_pos(),
            self.layer(2).to_vec(),
            format!(
                "k of {}{}:nu=psi_{}",
                self.sys.label,
                self.sys.rank,
                self.nu + 1
            ),
        )
    }

    pub fn tube_type(&self) -> bool {
        self.hermitian_pair().tube
    }

    pub fn l_simples(&self) -> Vec<Weight> {
        self.l_subset
            .iter()
            .map(|&i| self.sys.simple_roots[i].clone())
            .collect()
    }

    pub fn is_l_dominant(&self, w: &Weight) -> bool {
        self.l_subset.iter().all(|&i| {
            !self
                .sys
                .coroot_pair(w, &self.sys.simple_roots[i])
                .is_negative()
        })
    }

    pub fn is_g_integral(&self, w: &Weight) -> bool {
        self.sys
            .simple_roots
            .iter()
            .all(|s| is_integer(&self.sys.coroot_pair(w, s)))
    }

    /// Central coordinate of `lambda` along `nu*`: the `a` in
    /// `lambda = lambda' + a nu*` with `lambda'` orthogonal to `nu*`.
    pub fn central_coordinate(&self, lambda: &Weight) -> Q {
        self.pair_s(lambda, &self.nu_star) / self.norm2(&self.nu_star)
    }

    pub fn apply_w_l0(&self, w: &Weight) -> Weight {
        let ss = SimpleSystem::new(&self.sys, self.l_simples());
        let word = ss.longest_word();
        ss.act(&word, w)
    }

    /// Both sufficient-negativity inequalities for `gamma = gamma0 + t nu*`.
    ///
    /// Rejects a `gamma0` that is not Levi-dominant or not orthogonal to
    /// `nu*`. In the quaternionic case the reduced form of the same two
    /// inequalities is evaluated as well and must agree.
    pub fn sufficiently_negative(&self, gamma0: &Weight, t: &Q) -> Result<bool, BdsError> {
        if !self.is_l_dominant(gamma0) {
            return Err(BdsError::NotLeviDominant(gamma0.clone()));
        }
        if !self.pair_s(gamma0, &self.nu_star).is_zero() {
            return Err(BdsError::NotCentral(gamma0.clone()));
        }
        let base = gamma0.add(&self.rho_g);
        let first = *t < -self.pair_s(&base, &self.mu) * qr(1, 2);
        let second = *t < -self.pair_s(&base, &self.delta1_highest);

        if let Some(d) = self.d {
            let n1 = self.layer(1).len() as i64;
            let qa = *t < qr(-d, 4) * q(n1 + 2);
            let mut corr = Q::zero();
            for (i, a) in self.delta1_highest.coords.iter().enumerate() {
                corr += a * self.norm2(&self.sys.simple_roots[i]);
            }
            let qb = *t < -self.pair_s(gamma0, &self.delta1_highest) - corr * qr(1, 2);
            assert_eq!(
                qa && qb,
                first && second,
                "reduced quaternionic negativity test disagrees with the direct one"
            );
        }
        Ok(first && second)
    }
}

/// Builds the full grading for `nu`, which must have coefficient 2 in the
/// highest root.
pub fn build_datum(sys: Arc<RootSystem>, nu: usize) -> Result<BdsDatum, BdsError> {
    if nu >= sys.rank {
        return Err(BdsError::Precondition(format!(
            "simple root index {nu} out of range for rank {}",
            sys.rank
        )));
    }
    let coeff = sys.highest_root.coords[nu].clone();
    if coeff != q(2) {
        return Err(BdsError::NotBdsOrder {
            nu,
            coefficient: coeff,
        });
    }

    let mut delta: [Vec<Weight>; 5] = Default::default();
    for r in &sys.all_roots {
        let n = &r.coords[nu];
        assert!(is_integer(n), "root coordinates are integers");
        let i = to_i64(n);
        assert!((-2..=2).contains(&i), "nu-coefficient out of range");
        delta[(i + 2) as usize].push(r.clone());
    }
    let mu = sys.highest_root.clone();

    // eps is the unique root-order minimum of the top layer.
    let minima: Vec<Weight> = delta[4]
        .iter()
        .filter(|cand| delta[4].iter().all(|r| cand.leq_root_order(r)))
        .cloned()
        .collect();
    assert_eq!(minima.len(), 1, "top layer must have a unique lowest root");
    let eps = minima[0].clone();

    let nu_root = &sys.simple_roots[nu];
    let scale = q(2) / sys.pair(nu_root, nu_root);

    let nu_star = sys.fundamental_weights[nu].clone();
    let mut k_simples = sys.simple_roots.clone();
    k_simples[nu] = eps.clone();
    let eps_star = SimpleSystem::new(&sys, k_simples.clone()).fundamental_weight(nu);

    let rho_g = sys.rho.clone();
    let mut rho2 = Weight::zero(sys.rank);
    for r in delta[2]
        .iter()
        .filter(|r| r.coords.iter().all(|c| !c.is_negative()))
    {
        rho2 = rho2.add(r);
    }
    for r in &delta[4] {
        rho2 = rho2.add(r);
    }
    let rho_k = rho2.scale(&qr(1, 2));

    let s = delta[4].len();

    let pair_s = |a: &Weight, b: &Weight| sys.pair(a, b) * &scale;
    let eps_norm2 = pair_s(&eps, &eps);
    assert_eq!(
        eps_star,
        nu_star.scale(&(eps_norm2.clone() / q(4))),
        "eps* must equal ||eps||^2 nu*/4"
    );

    let mut top_sum = Weight::zero(sys.rank);
    for r in &delta[4] {
        top_sum = top_sum.add(r);
    }
    let c_q = q(s as i64) * &eps_norm2 / (q(2) * pair_s(&eps_star, &eps_star));
    assert!(is_integer(&c_q), "c must be an integer");
    let c = to_i64(&c_q);
    assert_eq!(
        top_sum,
        eps_star.scale(&c_q),
        "top-layer sum must be c * eps*"
    );

    let l_subset: Vec<usize> = (0..sys.rank).filter(|&i| i != nu).collect();

    let d = if s == 1 {
        let ratios: Vec<Q> = mu
            .coords
            .iter()
            .zip(&nu_star.coords)
            .filter(|(_, b)| !b.is_zero())
            .map(|(a, b)| a / b)
            .collect();
        let d0 = ratios[0].clone();
        assert!(ratios.iter().all(|r| *r == d0));
        assert_eq!(mu, nu_star.scale(&d0));
        assert!(is_integer(&d0));
        let d0 = to_i64(&d0);
        assert!(d0 == 1 || d0 == 2, "mu = d nu* requires d in {{1, 2}}");
        Some(d0)
    } else {
        None
    };

    // Highest weight of the middle layer, via the Levi longest element.
    let l_simple_roots: Vec<Weight> = l_subset
        .iter()
        .map(|&i| sys.simple_roots[i].clone())
        .collect();
    let l_ss = SimpleSystem::new(&sys, l_simple_roots);
    let w_l0 = l_ss.longest_word();
    let delta1_highest = l_ss.act(&w_l0, nu_root);
    assert!(
        delta[3].iter().all(|r| r.leq_root_order(&delta1_highest)),
        "w_l^0(nu) must be the highest root of the middle layer"
    );

    Ok(BdsDatum {
        sys,
        nu,
        scale,
        delta,
        mu,
        eps,
        nu_star,
        eps_star,
        rho_g,
        rho_k,
        c,
        s,
        k_simples,
        l_subset,
        d,
        delta1_highest,
    })
}

/// The relative-invariant algebra of the prehomogeneous space `(u_1, L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantAlgebra {
    Trivial,
    Polynomial(usize),
}

impl fmt::Display for InvariantAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantAlgebra::Trivial => write!(f, "C"),
            InvariantAlgebra::Polynomial(k) => write!(f, "C[f], |f|={k}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationRow {
    pub g0_label: String,
    pub type_label: TypeLabel,
    pub rank: usize,
    /// 0-based simple-root index of `nu`.
    pub nu_index: usize,
    pub k1_label: String,
    pub l1_label: String,
    pub l2_label: String,
    pub y_label: String,
    pub x_label: String,
    pub invariant_algebra: InvariantAlgebra,
    pub quaternionic: bool,
    pub tube_type: bool,
}

/// Classification of the order `(Psi, nu)`, keyed by family.
///
/// Orders equivalent under a diagram automorphism share a row (for E6 the
/// two outer nodes of coefficient 2 give the same real form).
pub fn classify(datum: &BdsDatum) -> ClassificationRow {
    use InvariantAlgebra::{Polynomial, Trivial};
    let l = datum.sys.rank;
    let p = datum.nu + 1; // 1-based Bourbaki index
    let t = datum.sys.label;

    let quat = |g0: String, l2: String, alg: InvariantAlgebra| ClassificationRow {
        g0_label: g0,
        type_label: t,
        rank: l,
        nu_index: datum.nu,
        k1_label: "su(2)".into(),
        l1_label: "so(2)".into(),
        l2_label: l2,
        y_label: "P^1".into(),
        x_label: "SU(1,1)/U(1)".into(),
        invariant_algebra: alg,
        quaternionic: true,
        tube_type: true,
    };
    #[allow(clippy::too_many_arguments)]
    let row = |g0: String,
               k1: String,
               l1: String,
               l2: String,
               y: String,
               x: String,
               alg: InvariantAlgebra,
               tube: bool| ClassificationRow {
        g0_label: g0,
        type_label: t,
        rank: l,
        nu_index: datum.nu,
        k1_label: k1,
        l1_label: l1,
        l2_label: l2,
        y_label: y,
        x_label: x,
        invariant_algebra: alg,
        quaternionic: false,
        tube_type: tube,
    };

    match (t, l, p) {
        (TypeLabel::B, 2, 2) => quat("so(4,1)".into(), "sp(1)".into(), Trivial),
        (TypeLabel::B, l, 2) => quat(
            format!("so(4,{})", 2 * l - 3),
            format!("sp(1)+so({})", 2 * l - 3),
            Polynomial(4),
        ),
        (TypeLabel::B, l, p) if p == l => row(
            format!("so({},1)", 2 * l),
            format!("so({})", 2 * l),
            format!("u({l})"),
            "-".into(),
            format!("SO({})/U({})", 2 * l, l),
            format!("SO*({})/U({})", 2 * l, l),
            Trivial,
            l % 2 == 0,
        ),
        (TypeLabel::B, l, p) if 2 < p && p < l => row(
            format!("so({},{})", 2 * p, 2 * l - 2 * p + 1),
            format!("so({})", 2 * p),
            format!("u({p})"),
            format!("so({})", 2 * l - 2 * p + 1),
            format!("SO({})/U({})", 2 * p, p),
            format!("SO*({})/U({})", 2 * p, p),
            // Degree 2p generically; on the square boundary 3p = 2l+1 the
            // generator drops to degree p (its square has degree 2p).
            if 3 * p < 2 * l + 1 {
                Polynomial(2 * p)
            } else if 3 * p == 2 * l + 1 {
                Polynomial(p)
            } else {
                Trivial
            },
            p % 2 == 0,
        ),
        (TypeLabel::C, l, 1) => quat(
            format!("sp(1,{})", l - 1),
            format!("sp({})", l - 1),
            Trivial,
        ),
        (TypeLabel::C, l, p) if 1 < p && p < l => row(
            format!("sp({},{})", p, l - p),
            format!("sp({p})"),
            format!("u({p})"),
            format!("sp({})", l - p),
            format!("Sp({p})/U({p})"),
            format!("Sp({p},R)/U({p})"),
            if p % 2 == 0 && 3 * p <= 2 * l {
                Polynomial(p)
            } else {
                Trivial
            },
            true,
        ),
        (TypeLabel::D, 4, 2) => quat("so(4,4)".into(), "sp(1)+sp(1)+sp(1)".into(), Polynomial(4)),
        (TypeLabel::D, l, 2) => quat(
            format!("so(4,{})", 2 * l - 4),
            format!("sp(1)+so({})", 2 * l - 4),
            Polynomial(4),
        ),
        (TypeLabel::D, l, p) if 2 < p && p <= l - 2 => row(
            format!("so({},{})", 2 * p, 2 * l - 2 * p),
            format!("so({})", 2 * p),
            format!("u({p})"),
            if p == l - 2 {
                "su(2)+su(2)".into()
            } else {
                format!("so({})", 2 * l - 2 * p)
            },
            format!("SO({})/U({})", 2 * p, p),
            format!("SO*({})/U({})", 2 * p, p),
            // Same boundary behaviour as the odd case, at 3p = 2l.
            if 3 * p < 2 * l {
                Polynomial(2 * p)
            } else if 3 * p == 2 * l {
                Polynomial(p)
            } else {
                Trivial
            },
            p % 2 == 0,
        ),
        (TypeLabel::G, 2, 2) => quat("g2;A1,A1".into(), "sp(1)".into(), Polynomial(4)),
        (TypeLabel::F, 4, 1) => quat("f4;A1,C3".into(), "sp(3)".into(), Polynomial(4)),
        (TypeLabel::F, 4, 4) => row(
            "f4;B4".into(),
            "so(9)".into(),
            "iR+so(7)".into(),
            "-".into(),
            "SO(9)/(SO(7)xSO(2))".into(),
            "SO_0(2,7)/(SO(2)xSO(7))".into(),
            Polynomial(2),
            true,
        ),
        (TypeLabel::E, 6, 2) => quat("e6;A1,A5,2".into(), "su(6)".into(), Polynomial(4)),
        (TypeLabel::E, 6, 3) | (TypeLabel::E, 6, 5) => row(
            "e6;A1,A5,1".into(),
            "su(6)".into(),
            "su(5)+iR".into(),
            "su(2)".into(),
            "P^5".into(),
            "SU(1,5)/S(U(1)xU(5))".into(),
            Trivial,
            false,
        ),
        (TypeLabel::E, 7, 1) => quat("e7;A1,D6,1".into(), "so(12)".into(), Polynomial(4)),
        (TypeLabel::E, 7, 2) => row(
            "e7;A7".into(),
            "su(8)".into(),
            "su(7)+iR".into(),
            "-".into(),
            "P^7".into(),
            "SU(1,7)/S(U(1)xU(7))".into(),
            Polynomial(7),
            false,
        ),
        (TypeLabel::E, 7, 6) => row(
            "e7;A1,D6,2".into(),
            "so(12)".into(),
            "so(10)+iR".into(),
            "sp(1)".into(),
            "SO(12)/(SO(2)xSO(10))".into(),
            "SO_0(2,10)/(SO(2)xSO(10))".into(),
            // The middle layer is a pair of half-spinors of so(10); the
            // quartic pairing invariant spans a line in S^4.
            Polynomial(4),
            true,
        ),
        (TypeLabel::E, 8, 8) => quat("e8;A1,E7".into(), "e7".into(), Polynomial(4)),
        (TypeLabel::E, 8, 1) => row(
            "e8;D8".into(),
            "so(16)".into(),
            "iR+so(14)".into(),
            "-".into(),
            "SO(16)/(SO(2)xSO(14))".into(),
            "SO_0(2,14)/(SO(2)xSO(14))".into(),
            Polynomial(8),
            true,
        ),
        _ => unreachable!("valid data always land in the classification"),
    }
}
