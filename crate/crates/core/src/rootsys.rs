//! Finite root systems in the simple-root basis, with exact arithmetic.
//!
//! Weights are vectors of rationals over the simple roots of an ambient
//! system (Bourbaki labelling, Planches I–IX). The bilinear pairing is
//! normalized so that long roots have squared length `2 * bilinear_scale`.
//! Weyl-group elements are words of reflections; equality of group elements
//! is tested by acting on a regular weight, never by matrices.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::ratio::{format_q, q, qr, Q};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            TypeLabel::A => 'A',
            TypeLabel::B => 'B',
            TypeLabel::C => 'C',
            TypeLabel::D => 'D',
            TypeLabel::E => 'E',
            TypeLabel::F => 'F',
            TypeLabel::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl std::str::FromStr for TypeLabel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(TypeLabel::A),
            "B" => Ok(TypeLabel::B),
            "C" => Ok(TypeLabel::C),
            "D" => Ok(TypeLabel::D),
            "E" => Ok(TypeLabel::E),
            "F" => Ok(TypeLabel::F),
            "G" => Ok(TypeLabel::G),
            other => Err(format!("unknown type label `{other}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootError {
    InvalidTypeRank(TypeLabel, usize),
    DimensionMismatch { expected: usize, got: usize },
    IndexOutOfRange(usize),
}

impl fmt::Display for RootError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootError::InvalidTypeRank(t, l) => {
                write!(f, "invalid (type, rank) pair ({t}, {l})")
            }
            RootError::DimensionMismatch { expected, got } => {
                write!(
                    f,
                    "weight has {got} coordinates, system has rank {expected}"
                )
            }
            RootError::IndexOutOfRange(i) => write!(f, "simple root index {i} out of range"),
        }
    }
}

impl std::error::Error for RootError {}

/// A weight, stored as exact rational coordinates in the simple-root basis
/// of its ambient system.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<Q>,
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![Q::zero(); rank],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Q::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, k: &Q) -> Weight {
        Weight {
            coords: self.coords.iter().map(|a| a * k).collect(),
        }
    }

    /// True when `other - self` is a nonnegative integer combination of
    /// simple roots (the root partial order).
    pub fn leq_root_order(&self, other: &Weight) -> bool {
        self.coords.iter().zip(&other.coords).all(|(a, b)| {
            let d = b - a;
            !d.is_negative() && d.denom() == &num_bigint::BigInt::from(1)
        })
    }

    pub fn simple_root(rank: usize, i: usize) -> Weight {
        let mut w = Weight::zero(rank);
        w.coords[i] = q(1);
        w
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_q(c))?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A Weyl-group element as a word of simple-root indices.
/// Acting on a weight applies the reflections right-to-left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylWord {
    pub word: Vec<usize>,
}

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord { word: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Concatenation `self * other` (apply `other` first).
    pub fn compose(&self, other: &WeylWord) -> WeylWord {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylWord { word }
    }
}

/// A finite root system with exact Cartan data.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub label: TypeLabel,
    pub rank: usize,
    /// `cartan[i][j] = 2 <psi_i, psi_j> / <psi_j, psi_j>`.
    pub cartan: Vec<Vec<i64>>,
    /// Gram matrix of the simple roots; long roots have squared length 2.
    gram: Vec<Vec<Q>>,
    pub bilinear_scale: Q,
    pub simple_roots: Vec<Weight>,
    pub all_roots: Vec<Weight>,
    pub positive_roots: Vec<Weight>,
    pub highest_root: Weight,
    pub fundamental_weights: Vec<Weight>,
    pub rho: Weight,
}

/// Cartan matrix and half-square-lengths for the Bourbaki labelling.
fn cartan_data(label: TypeLabel, rank: usize) -> Result<(Vec<Vec<i64>>, Vec<Q>), RootError> {
    let l = rank;
    let valid = match label {
        TypeLabel::A => l >= 1,
        TypeLabel::B | TypeLabel::C => l >= 2,
        TypeLabel::D => l >= 4,
        TypeLabel::E => (6..=8).contains(&l),
        TypeLabel::F => l == 4,
        TypeLabel::G => l == 2,
    };
    if !valid {
        return Err(RootError::InvalidTypeRank(label, rank));
    }

    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    let mut d = vec![q(1); l];

    match label {
        TypeLabel::A => {
            for i in 0..l - 1 {
                chain(&mut a, i, i + 1);
            }
        }
        TypeLabel::B => {
            for i in 0..l - 1 {
                chain(&mut a, i, i + 1);
            }
            a[l - 2][l - 1] = -2;
            d[l - 1] = qr(1, 2);
        }
        TypeLabel::C => {
            for i in 0..l - 1 {
                chain(&mut a, i, i + 1);
            }
            a[l - 1][l - 2] = -2;
            for di in d.iter_mut().take(l - 1) {
                *di = qr(1, 2);
            }
        }
        TypeLabel::D => {
            for i in 0..l - 2 {
                chain(&mut a, i, i + 1);
            }
            chain(&mut a, l - 3, l - 1);
        }
        TypeLabel::E => {
            // Node 2 hangs off node 4; nodes 1,3,4,...,l form a chain.
            chain(&mut a, 0, 2);
            chain(&mut a, 1, 3);
            for i in 2..l - 1 {
                chain(&mut a, i, i + 1);
            }
        }
        TypeLabel::F => {
            chain(&mut a, 0, 1);
            chain(&mut a, 1, 2);
            chain(&mut a, 2, 3);
            a[1][2] = -2;
            d[2] = qr(1, 2);
            d[3] = qr(1, 2);
        }
        TypeLabel::G => {
            a[0][1] = -1;
            a[1][0] = -3;
            d[0] = qr(1, 3);
        }
    }
    Ok((a, d))
}

fn expected_root_count(label: TypeLabel, l: usize) -> usize {
    match label {
        TypeLabel::A => l * (l + 1),
        TypeLabel::B | TypeLabel::C => 2 * l * l,
        TypeLabel::D => 2 * l * (l - 1),
        TypeLabel::E => match l {
            6 => 72,
            7 => 126,
            _ => 240,
        },
        TypeLabel::F => 48,
        TypeLabel::G => 12,
    }
}

/// Builds the full root system for a valid (type, rank) pair.
pub fn build_root_system(label: TypeLabel, rank: usize) -> Result<Arc<RootSystem>, RootError> {
    let (cartan, d) = cartan_data(label, rank)?;
    let mut gram = vec![vec![Q::zero(); rank]; rank];
    for i in 0..rank {
        for j in 0..rank {
            gram[i][j] = q(cartan[i][j]) * &d[j];
        }
    }
    for i in 0..rank {
        for j in 0..rank {
            assert_eq!(gram[i][j], gram[j][i], "Gram matrix must be symmetric");
        }
    }

    let simple_roots: Vec<Weight> = (0..rank).map(|i| Weight::simple_root(rank, i)).collect();

    // Close the simple roots under simple reflections.
    let pair_raw = |a: &Weight, b: &Weight| -> Q {
        let mut acc = Q::zero();
        for i in 0..rank {
            if a.coords[i].is_zero() {
                continue;
            }
            for j in 0..rank {
                if !b.coords[j].is_zero() {
                    acc += &a.coords[i] * &b.coords[j] * &gram[i][j];
                }
            }
        }
        acc
    };
    let mut roots: BTreeSet<Weight> = simple_roots.iter().cloned().collect();
    let mut frontier: Vec<Weight> = simple_roots.clone();
    while let Some(r) = frontier.pop() {
        for s in &simple_roots {
            let coeff = q(2) * pair_raw(&r, s) / pair_raw(s, s);
            let refl = r.sub(&s.scale(&coeff));
            if roots.insert(refl.clone()) {
                frontier.push(refl);
            }
        }
    }
    let all_roots: Vec<Weight> = roots.into_iter().collect();
    assert_eq!(
        all_roots.len(),
        expected_root_count(label, rank),
        "root closure produced the wrong count for {label}{rank}"
    );

    let positive_roots: Vec<Weight> = all_roots
        .iter()
        .filter(|r| r.coords.iter().all(|c| !c.is_negative()))
        .cloned()
        .collect();
    assert_eq!(positive_roots.len() * 2, all_roots.len());

    let highest_root = positive_roots
        .iter()
        .find(|cand| positive_roots.iter().all(|r| r.leq_root_order(cand)))
        .cloned()
        .expect("highest root exists");

    // Fundamental weights: solve <xi_i, psi_j^vee> = delta_ij.
    let mut fundamental_weights = Vec::with_capacity(rank);
    let at: Vec<Vec<Q>> = (0..rank)
        .map(|i| (0..rank).map(|j| q(cartan[j][i])).collect())
        .collect();
    for i in 0..rank {
        let mut rhs = vec![Q::zero(); rank];
        rhs[i] = q(1);
        let coords = solve_linear(&at, &rhs).expect("Cartan matrix is invertible");
        fundamental_weights.push(Weight { coords });
    }

    let mut rho = Weight::zero(rank);
    for xi in &fundamental_weights {
        rho = rho.add(xi);
    }
    let mut half_sum = Weight::zero(rank);
    for r in &positive_roots {
        half_sum = half_sum.add(r);
    }
    assert_eq!(rho, half_sum.scale(&qr(1, 2)), "rho identities disagree");

    Ok(Arc::new(RootSystem {
        label,
        rank,
        cartan,
        gram,
        bilinear_scale: q(1),
        simple_roots,
        all_roots,
        positive_roots,
        highest_root,
        fundamental_weights,
        rho,
    }))
}

impl RootSystem {
    /// The symmetric bilinear form, exact.
    pub fn pair(&self, a: &Weight, b: &Weight) -> Q {
        assert_eq!(a.rank(), self.rank, "pair: rank mismatch");
        assert_eq!(b.rank(), self.rank, "pair: rank mismatch");
        let mut acc = Q::zero();
        for i in 0..self.rank {
            if a.coords[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                if !b.coords[j].is_zero() {
                    acc += &a.coords[i] * &b.coords[j] * &self.gram[i][j];
                }
            }
        }
        acc * &self.bilinear_scale
    }

    /// `2 <w, root> / <root, root>`; independent of the global scale.
    pub fn coroot_pair(&self, w: &Weight, root: &Weight) -> Q {
        q(2) * self.pair(w, root) / self.pair(root, root)
    }

    pub fn reflect(&self, w: &Weight, root: &Weight) -> Weight {
        let c = self.coroot_pair(w, root);
        w.sub(&root.scale(&c))
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.all_roots.binary_search(w).is_ok()
    }

    /// Fundamental-weight coordinates `m_j = <w, psi_j^vee>`.
    pub fn to_fundamental(&self, w: &Weight) -> Vec<Q> {
        (0..self.rank)
            .map(|j| {
                let mut acc = Q::zero();
                for i in 0..self.rank {
                    if !w.coords[i].is_zero() {
                        acc += &w.coords[i] * q(self.cartan[i][j]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn from_fundamental(&self, m: &[Q]) -> Weight {
        assert_eq!(m.len(), self.rank);
        let mut w = Weight::zero(self.rank);
        for (i, mi) in m.iter().enumerate() {
            w = w.add(&self.fundamental_weights[i].scale(mi));
        }
        w
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        self.to_fundamental(w).iter().all(|m| !m.is_negative())
    }

    /// True when every fundamental coordinate is a nonnegative integer.
    pub fn is_dominant_integral(&self, w: &Weight) -> bool {
        self.to_fundamental(w)
            .iter()
            .all(|m| !m.is_negative() && crate::ratio::is_integer(m))
    }

    /// Applies the word's simple reflections right-to-left.
    pub fn act(&self, word: &WeylWord, w: &Weight) -> Weight {
        let mut cur = w.clone();
        for &i in word.word.iter().rev() {
            assert!(i < self.rank, "simple root index out of range");
            cur = self.reflect(&cur, &self.simple_roots[i]);
        }
        cur
    }

    /// Longest element of the parabolic subgroup generated by `subset`.
    pub fn longest_element(&self, subset: &[usize]) -> WeylWord {
        for &i in subset {
            assert!(i < self.rank, "simple root index out of range");
        }
        let mut delta = Weight::zero(self.rank);
        for &i in subset {
            delta = delta.add(&self.fundamental_weights[i]);
        }
        let mut word = Vec::new();
        let mut cur = delta;
        'outer: loop {
            for &i in subset {
                if self.coroot_pair(&cur, &self.simple_roots[i]).is_positive() {
                    cur = self.reflect(&cur, &self.simple_roots[i]);
                    word.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        WeylWord { word }
    }

    /// Dominant representative for the parabolic subgroup, with a word `u`
    /// such that `act(u, w)` is the representative.
    pub fn to_dominant(&self, w: &Weight, subset: &[usize]) -> (Weight, WeylWord) {
        let mut word = Vec::new();
        let mut cur = w.clone();
        'outer: loop {
            for &i in subset {
                if self.coroot_pair(&cur, &self.simple_roots[i]).is_negative() {
                    cur = self.reflect(&cur, &self.simple_roots[i]);
                    word.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        (cur, WeylWord { word })
    }

    pub fn full_subset(&self) -> Vec<usize> {
        (0..self.rank).collect()
    }
}

/// A simple system for a (possibly non-parabolic) reflection subgroup:
/// a list of linearly independent roots of the ambient system. Words are
/// index sequences into `simples`, applied right-to-left.
pub struct SimpleSystem<'a> {
    pub sys: &'a RootSystem,
    pub simples: Vec<Weight>,
}

impl<'a> SimpleSystem<'a> {
    pub fn new(sys: &'a RootSystem, simples: Vec<Weight>) -> Self {
        SimpleSystem { sys, simples }
    }

    pub fn coroot_pair_i(&self, w: &Weight, i: usize) -> Q {
        self.sys.coroot_pair(w, &self.simples[i])
    }

    pub fn reflect_i(&self, w: &Weight, i: usize) -> Weight {
        self.sys.reflect(w, &self.simples[i])
    }

    pub fn act(&self, word: &[usize], w: &Weight) -> Weight {
        let mut cur = w.clone();
        for &i in word.iter().rev() {
            cur = self.reflect_i(&cur, i);
        }
        cur
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        (0..self.simples.len()).all(|i| !self.coroot_pair_i(w, i).is_negative())
    }

    pub fn to_dominant(&self, w: &Weight) -> (Weight, Vec<usize>) {
        let mut word = Vec::new();
        let mut cur = w.clone();
        'outer: loop {
            for i in 0..self.simples.len() {
                if self.coroot_pair_i(&cur, i).is_negative() {
                    cur = self.reflect_i(&cur, i);
                    word.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        (cur, word)
    }

    /// A weight pairing to 1 with every simple coroot of this system
    /// (regular dominant for the subgroup).
    pub fn regular_dominant(&self) -> Weight {
        let k = self.simples.len();
        let m: Vec<Vec<Q>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| self.sys.coroot_pair(&self.simples[j], &self.simples[i]))
                    .collect()
            })
            .collect();
        let rhs = vec![q(1); k];
        let x = solve_linear(&m, &rhs).expect("simple system is linearly independent");
        let mut delta = Weight::zero(self.sys.rank);
        for (j, xj) in x.iter().enumerate() {
            delta = delta.add(&self.simples[j].scale(xj));
        }
        delta
    }

    /// Longest element of the reflection subgroup generated by `simples`.
    pub fn longest_word(&self) -> Vec<usize> {
        let mut cur = self.regular_dominant();
        let mut word = Vec::new();
        'outer: loop {
            for i in 0..self.simples.len() {
                if self.coroot_pair_i(&cur, i).is_positive() {
                    cur = self.reflect_i(&cur, i);
                    word.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        word
    }

    /// All roots of the subsystem: the orbit of the simples under the
    /// subgroup's reflections.
    pub fn subsystem_roots(&self) -> Vec<Weight> {
        let mut set: BTreeSet<Weight> = self.simples.iter().cloned().collect();
        let mut frontier: Vec<Weight> = self.simples.clone();
        while let Some(r) = frontier.pop() {
            for s in &self.simples {
                let refl = self.sys.reflect(&r, s);
                if set.insert(refl.clone()) {
                    frontier.push(refl);
                }
            }
        }
        set.into_iter().collect()
    }

    /// Coordinates of `w` in the basis `simples`, when `w` lies in their span.
    pub fn coords_in_simples(&self, w: &Weight) -> Option<Vec<Q>> {
        let k = self.simples.len();
        let m: Vec<Vec<Q>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| self.sys.pair(&self.simples[i], &self.simples[j]))
                    .collect()
            })
            .collect();
        let rhs: Vec<Q> = (0..k).map(|i| self.sys.pair(&self.simples[i], w)).collect();
        let x = solve_linear(&m, &rhs)?;
        let mut rebuilt = Weight::zero(self.sys.rank);
        for (j, xj) in x.iter().enumerate() {
            rebuilt = rebuilt.add(&self.simples[j].scale(xj));
        }
        if rebuilt == *w {
            Some(x)
        } else {
            None
        }
    }

    /// Fundamental weight of this simple system for the `i`-th simple root:
    /// the element of the span with `<x, simples[j]^vee> = delta_ij`.
    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let k = self.simples.len();
        let m: Vec<Vec<Q>> = (0..k)
            .map(|r| {
                (0..k)
                    .map(|j| self.sys.coroot_pair(&self.simples[j], &self.simples[r]))
                    .collect()
            })
            .collect();
        let mut rhs = vec![Q::zero(); k];
        rhs[i] = q(1);
        let x = solve_linear(&m, &rhs).expect("simple system is linearly independent");
        let mut out = Weight::zero(self.sys.rank);
        for (j, xj) in x.iter().enumerate() {
            out = out.add(&self.simples[j].scale(xj));
        }
        out
    }
}

/// Prefactored coordinate solver for a fixed independent set of weights:
/// inverts the Gram matrix once, then answers coordinate queries in
/// quadratic time.
pub struct BasisSolver {
    simples: Vec<Weight>,
    inv: Vec<Vec<Q>>,
}

impl BasisSolver {
    pub fn new(sys: &RootSystem, simples: &[Weight]) -> BasisSolver {
        let k = simples.len();
        let gram: Vec<Vec<Q>> = (0..k)
            .map(|i| (0..k).map(|j| sys.pair(&simples[i], &simples[j])).collect())
            .collect();
        let inv = invert_matrix(&gram).expect("independent weights have invertible Gram");
        BasisSolver {
            simples: simples.to_vec(),
            inv,
        }
    }

    /// Coordinates of `w` over the basis. Only valid for `w` in the span;
    /// set `verify` to reject other inputs.
    pub fn coords(&self, sys: &RootSystem, w: &Weight, verify: bool) -> Option<Vec<Q>> {
        let k = self.simples.len();
        let rhs: Vec<Q> = (0..k).map(|i| sys.pair(&self.simples[i], w)).collect();
        let x: Vec<Q> = (0..k)
            .map(|i| {
                let mut acc = Q::zero();
                for (j, r) in rhs.iter().enumerate() {
                    if !r.is_zero() && !self.inv[i][j].is_zero() {
                        acc += &self.inv[i][j] * r;
                    }
                }
                acc
            })
            .collect();
        if verify {
            let mut rebuilt = Weight::zero(sys.rank);
            for (j, xj) in x.iter().enumerate() {
                rebuilt = rebuilt.add(&self.simples[j].scale(xj));
            }
            if rebuilt != *w {
                return None;
            }
        }
        Some(x)
    }
}

fn invert_matrix(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j {
                    Q::from_integer(1.into())
                } else {
                    Q::zero()
                });
            }
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].clone();
        for c in col..2 * n {
            a[col][c] = &a[col][c] / &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..2 * n {
                    let sub = &a[col][c] * &f;
                    a[r][c] = &a[r][c] - sub;
                }
            }
        }
    }
    Some((0..n).map(|r| a[r][n..].to_vec()).collect())
}

/// Exact Gaussian elimination; returns `None` for singular/inconsistent input.
pub fn solve_linear(m: &[Vec<Q>], rhs: &[Q]) -> Option<Vec<Q>> {
    let n = m.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let cols = a[0].len() - 1;
    if cols != n {
        return None;
    }
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].clone();
        for c in col..=n {
            a[col][c] = &a[col][c] / &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..=n {
                    let sub = &a[col][c] * &f;
                    a[r][c] = &a[r][c] - sub;
                }
            }
        }
    }
    Some((0..n).map(|r| a[r][n].clone()).collect())
}

/// Small deterministic generator for randomized property checks.
pub struct TestRng(pub u64);

impl TestRng {
    pub fn next_u64(&mut self) -> u64 {
        // splitmix64
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next_u64() % ((hi - lo + 1) as u64)) as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::qr;

    fn sys(label: TypeLabel, rank: usize) -> Arc<RootSystem> {
        build_root_system(label, rank).unwrap()
    }

    #[test]
    fn root_counts_and_highest_roots() {
        let a2 = sys(TypeLabel::A, 2);
        assert_eq!(a2.all_roots.len(), 6);
        assert_eq!(a2.highest_root.coords, vec![q(1), q(1)]);

        let g2 = sys(TypeLabel::G, 2);
        assert_eq!(g2.all_roots.len(), 12);
        assert_eq!(g2.highest_root.coords, vec![q(3), q(2)]);

        let b3 = sys(TypeLabel::B, 3);
        assert_eq!(b3.highest_root.coords, vec![q(1), q(2), q(2)]);

        let e8 = sys(TypeLabel::E, 8);
        assert_eq!(e8.all_roots.len(), 240);
        assert_eq!(
            e8.highest_root.coords,
            vec![q(2), q(3), q(4), q(6), q(5), q(4), q(3), q(2)]
        );
    }

    #[test]
    fn invalid_pairs_rejected() {
        assert!(build_root_system(TypeLabel::D, 3).is_err());
        assert!(build_root_system(TypeLabel::E, 5).is_err());
        assert!(build_root_system(TypeLabel::F, 3).is_err());
        assert!(build_root_system(TypeLabel::G, 3).is_err());
        assert!(build_root_system(TypeLabel::B, 1).is_err());
    }

    #[test]
    fn pairing_normalization() {
        // Long roots have squared length 2 at the default scale.
        let a3 = sys(TypeLabel::A, 3);
        for r in &a3.all_roots {
            assert_eq!(a3.pair(r, r), q(2));
        }
        // Kronecker pattern of fundamental weights against simple coroots.
        for s in [
            sys(TypeLabel::B, 3),
            sys(TypeLabel::G, 2),
            sys(TypeLabel::F, 4),
        ] {
            for i in 0..s.rank {
                for j in 0..s.rank {
                    let expect = if i == j { q(1) } else { q(0) };
                    assert_eq!(
                        s.coroot_pair(&s.fundamental_weights[i], &s.simple_roots[j]),
                        expect
                    );
                }
            }
        }
    }

    #[test]
    fn cartan_integers_recovered_from_pairing() {
        for s in [
            sys(TypeLabel::A, 4),
            sys(TypeLabel::B, 4),
            sys(TypeLabel::C, 4),
            sys(TypeLabel::D, 5),
            sys(TypeLabel::E, 6),
            sys(TypeLabel::F, 4),
            sys(TypeLabel::G, 2),
        ] {
            for i in 0..s.rank {
                for j in 0..s.rank {
                    assert_eq!(
                        s.coroot_pair(&s.simple_roots[i], &s.simple_roots[j]),
                        q(s.cartan[i][j])
                    );
                }
            }
        }
    }

    #[test]
    fn act_basics() {
        let b2 = sys(TypeLabel::B, 2);
        let w = b2.rho.clone();
        assert_eq!(b2.act(&WeylWord::identity(), &w), w);
        for (i, alpha) in b2.simple_roots.iter().enumerate() {
            assert_eq!(b2.act(&WeylWord { word: vec![i] }, alpha), alpha.neg());
        }
    }

    #[test]
    fn longest_element_examples() {
        let a2 = sys(TypeLabel::A, 2);
        assert!(a2.longest_element(&[]).is_empty());
        let w0 = a2.longest_element(&[0, 1]);
        assert_eq!(w0.len(), 3);
        assert_eq!(a2.act(&w0, &a2.rho), a2.rho.neg());

        // -1 lies in the Weyl group of C3: w0 negates every weight.
        let c3 = sys(TypeLabel::C, 3);
        let w0 = c3.longest_element(&c3.full_subset());
        for i in 0..3 {
            let e = Weight::simple_root(3, i);
            assert_eq!(c3.act(&w0, &e), e.neg());
        }

        // The longest element sends every positive root of the subsystem
        // to a negative one.
        let b3 = sys(TypeLabel::B, 3);
        for subset in [vec![0usize, 1], vec![1, 2], vec![0, 2], vec![0, 1, 2]] {
            let w0 = b3.longest_element(&subset);
            let ss = SimpleSystem::new(
                &b3,
                subset.iter().map(|&i| b3.simple_roots[i].clone()).collect(),
            );
            for r in ss.subsystem_roots() {
                if r.coords.iter().all(|c| !c.is_negative()) {
                    let img = b3.act(&w0, &r);
                    assert!(
                        img.coords.iter().all(|c| !c.is_positive()),
                        "w0 must negate {r:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn to_dominant_basics() {
        let b3 = sys(TypeLabel::B, 3);
        let full = b3.full_subset();
        let (d, u) = b3.to_dominant(&b3.rho, &full);
        assert_eq!(d, b3.rho);
        assert!(u.is_empty());
        let (d, u) = b3.to_dominant(&b3.rho.neg(), &full);
        assert_eq!(d, b3.rho);
        assert_eq!(b3.act(&u, &b3.rho.neg()), b3.rho);
    }

    #[test]
    fn to_dominant_matches_orbit_enumeration() {
        // Brute force: the dominant representative is the unique dominant
        // element of the full Weyl orbit (rank <= 3).
        for s in [
            sys(TypeLabel::A, 3),
            sys(TypeLabel::B, 3),
            sys(TypeLabel::C, 3),
            sys(TypeLabel::G, 2),
        ] {
            let mut rng = TestRng(7);
            for _ in 0..5 {
                let w = Weight {
                    coords: (0..s.rank).map(|_| q(rng.int_in(-3, 3))).collect(),
                };
                let mut orbit: BTreeSet<Weight> = BTreeSet::new();
                orbit.insert(w.clone());
                let mut frontier = vec![w.clone()];
                while let Some(x) = frontier.pop() {
                    for r in &s.simple_roots {
                        let y = s.reflect(&x, r);
                        if orbit.insert(y.clone()) {
                            frontier.push(y);
                        }
                    }
                }
                let dominants: Vec<_> = orbit.iter().filter(|x| s.is_dominant(x)).collect();
                assert_eq!(dominants.len(), 1);
                let (d, u) = s.to_dominant(&w, &s.full_subset());
                assert_eq!(&d, dominants[0]);
                assert_eq!(s.act(&u, &w), d);
            }
        }
    }

    #[test]
    fn reflection_permutes_roots() {
        for s in [
            sys(TypeLabel::B, 3),
            sys(TypeLabel::G, 2),
            sys(TypeLabel::F, 4),
        ] {
            for alpha in &s.all_roots {
                let mut image: Vec<Weight> =
                    s.all_roots.iter().map(|r| s.reflect(r, alpha)).collect();
                image.sort();
                assert_eq!(image, s.all_roots);
            }
        }
    }

    #[test]
    fn word_action_is_composition() {
        let d4 = sys(TypeLabel::D, 4);
        let mut rng = TestRng(42);
        for _ in 0..20 {
            let u = WeylWord {
                word: (0..rng.below(6)).map(|_| rng.below(4)).collect(),
            };
            let v = WeylWord {
                word: (0..rng.below(6)).map(|_| rng.below(4)).collect(),
            };
            let w = Weight {
                coords: (0..4).map(|_| qr(rng.int_in(-6, 6), 2)).collect(),
            };
            assert_eq!(d4.act(&u.compose(&v), &w), d4.act(&u, &d4.act(&v, &w)));
        }
    }

    #[test]
    fn longest_element_is_involutive() {
        for s in [
            sys(TypeLabel::A, 2),
            sys(TypeLabel::B, 3),
            sys(TypeLabel::F, 4),
        ] {
            let w0 = s.longest_element(&s.full_subset());
            let twice = w0.compose(&w0);
            for i in 0..s.rank {
                let e = Weight::simple_root(s.rank, i);
                assert_eq!(s.act(&twice, &e), e);
            }
        }
    }

    #[test]
    fn fundamental_coordinate_round_trip() {
        let f4 = sys(TypeLabel::F, 4);
        let mut rng = TestRng(3);
        for _ in 0..10 {
            let w = Weight {
                coords: (0..4).map(|_| qr(rng.int_in(-9, 9), 3)).collect(),
            };
            let m = f4.to_fundamental(&w);
            assert_eq!(f4.from_fundamental(&m), w);
        }
    }
}
