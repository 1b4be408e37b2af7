//! The ∧³ℚ⁹ picture of the grading: weights (ijk), the ≤_G order, closed
//! subsets, the reducibility criteria and the cusp certificates.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rootsys::{pairing, LatticeVector, RootSystem, S0};

pub mod cusp;
pub mod kostant;
pub mod reducible;
pub mod wedge;

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VinbergError {
    #[error("not a weight: {0}")]
    BadWeight(String),
    #[error("{0} is not a root")]
    NotARoot(String),
    #[error("set is not closed under <=_G")]
    NotClosed,
    #[error("linear system has no solution: {0}")]
    NoSolution(&'static str),
    #[error("linear system has a {1}-dimensional solution space: {0}")]
    NotUnique(&'static str, usize),
    #[error("fixture error: {0}")]
    Fixture(String),
}

/// Weight (ijk) of ∧³ℚ⁹, 1 ≤ i < j < k ≤ 9.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub i: u8,
    pub j: u8,
    pub k: u8,
}

impl Weight {
    pub fn new(i: u8, j: u8, k: u8) -> Result<Self, VinbergError> {
        if 1 <= i && i < j && j < k && k <= 9 {
            Ok(Weight { i, j, k })
        } else {
            Err(VinbergError::BadWeight(format!("({i}{j}{k})")))
        }
    }

    /// Position in the lexicographic list of all 84 weights.
    pub fn index(&self) -> usize {
        let (i, j, k) = (self.i as usize, self.j as usize, self.k as usize);
        let mut n = 0;
        for a in 1..i {
            n += (9 - a) * (8 - a) / 2;
        }
        for b in i + 1..j {
            n += 9 - b;
        }
        n + k - j - 1
    }

    pub fn from_index(n: usize) -> Self {
        weights_table()[n]
    }

    pub fn lattice(&self) -> LatticeVector {
        LatticeVector::weight(self.i as usize, self.j as usize, self.k as usize)
    }

    pub fn x_value(&self) -> i64 {
        self.lattice().x_value()
    }

    pub fn indices(&self) -> [usize; 3] {
        [self.i as usize, self.j as usize, self.k as usize]
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}{}{})", self.i, self.j, self.k)
    }
}

/// Parses "267" or "(267)".
impl FromStr for Weight {
    type Err = VinbergError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: Vec<u8> = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| c.to_digit(10).map(|d| d as u8))
            .collect::<Option<_>>()
            .ok_or_else(|| VinbergError::BadWeight(s.to_string()))?;
        if t.len() != 3 {
            return Err(VinbergError::BadWeight(s.to_string()));
        }
        Weight::new(t[0], t[1], t[2]).map_err(|_| VinbergError::BadWeight(s.to_string()))
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}{}{}", self.i, self.j, self.k))
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn weights_table() -> &'static [Weight] {
    static T: OnceLock<Vec<Weight>> = OnceLock::new();
    T.get_or_init(|| {
        let mut v = Vec::with_capacity(84);
        for i in 1..=9u8 {
            for j in i + 1..=9 {
                for k in j + 1..=9 {
                    v.push(Weight { i, j, k });
                }
            }
        }
        v
    })
}

pub fn all_weights() -> Vec<Weight> {
    weights_table().to_vec()
}

/// Shorthand for tests and fixtures: `w(2, 6, 7)`.
pub fn w(i: u8, j: u8, k: u8) -> Weight {
    Weight::new(i, j, k).expect("valid weight")
}

/// S_H = S₀ as weights.
pub fn s_h() -> Vec<Weight> {
    S0.iter().map(|&[i, j, k]| w(i, j, k)).collect()
}

/// n_i(v) = ⟨v, ω̌_{β_i}⟩ for β_i = t_{i+1}/t_i, i = 1..8 (returned 0-based).
pub fn n_coeff(v: &LatticeVector) -> [Q; 8] {
    let c = v.coords();
    let s: i64 = c.iter().sum();
    let mut out: [Q; 8] = Default::default();
    let mut partial = 0i64;
    for i in 0..8 {
        partial += c[i];
        // −Σ_{j≤i} v_j + (i/9)Σv
        out[i] = q(-9 * partial + (i as i64 + 1) * s, 9);
    }
    out
}

/// α ≤_G γ via coordinates.
pub fn leq_g(a: &Weight, b: &Weight) -> bool {
    a.i <= b.i && a.j <= b.j && a.k <= b.k
}

/// α ≤_G γ via coweights: every n_i(γ − α) is a non-negative integer.
pub fn leq_g_coweight(a: &LatticeVector, b: &LatticeVector) -> bool {
    let d = n_coeff(&(*b - *a));
    d.iter().all(|x| x.is_integer() && !x.is_negative())
}

/// Positive roots of G = SL₉: t_j/t_i for i < j.
pub fn phi_g_plus() -> Vec<LatticeVector> {
    let mut v = Vec::new();
    for i in 1..=9 {
        for j in i + 1..=9 {
            v.push(LatticeVector::root_diff(j, i));
        }
    }
    v
}

pub fn is_phi_g_plus(v: &LatticeVector) -> bool {
    phi_g_plus().contains(v)
}

/// n-coefficients of Σ Φ_G⁺.
pub fn sum_phi_g_plus() -> [Q; 8] {
    let mut acc: [Q; 8] = Default::default();
    for r in phi_g_plus() {
        for (a, x) in acc.iter_mut().zip(n_coeff(&r)) {
            *a += x;
        }
    }
    acc
}

/// Φ_V⁺: weights with α(x) > 0.
pub fn phi_v_plus() -> WeightSet {
    WeightSet::from_iter(all_weights().into_iter().filter(|a| a.x_value() > 0))
}

/// Set of weights as a bitmask over the lexicographic order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightSet(pub u128);

impl WeightSet {
    pub fn empty() -> Self {
        WeightSet(0)
    }

    pub fn all() -> Self {
        WeightSet((1u128 << 84) - 1)
    }

    pub fn contains(&self, a: &Weight) -> bool {
        self.0 >> a.index() & 1 == 1
    }

    pub fn insert(&mut self, a: &Weight) {
        self.0 |= 1 << a.index();
    }

    pub fn remove(&mut self, a: &Weight) {
        self.0 &= !(1 << a.index());
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn union(&self, o: &Self) -> Self {
        WeightSet(self.0 | o.0)
    }

    pub fn minus(&self, o: &Self) -> Self {
        WeightSet(self.0 & !o.0)
    }

    pub fn intersect(&self, o: &Self) -> Self {
        WeightSet(self.0 & o.0)
    }

    pub fn is_subset(&self, o: &Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn members(&self) -> Vec<Weight> {
        (0..84).filter(|n| self.0 >> n & 1 == 1).map(Weight::from_index).collect()
    }

    pub fn is_up_closed(&self) -> bool {
        let ms = self.members();
        all_weights()
            .iter()
            .all(|g| self.contains(g) || !ms.iter().any(|a| leq_g(a, g)))
    }

    /// Σ_{α∈M} n(α).
    pub fn n_sum(&self) -> [Q; 8] {
        let mut acc: [Q; 8] = Default::default();
        for a in self.members() {
            for (x, y) in acc.iter_mut().zip(n_coeff(&a.lattice())) {
                *x += y;
            }
        }
        acc
    }
}

impl FromIterator<Weight> for WeightSet {
    fn from_iter<I: IntoIterator<Item = Weight>>(it: I) -> Self {
        let mut s = WeightSet::empty();
        for a in it {
            s.insert(&a);
        }
        s
    }
}

impl fmt::Display for WeightSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members().iter().map(|a| a.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// An up-closed set of weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClosedSet(WeightSet);

impl ClosedSet {
    pub fn new(s: WeightSet) -> Result<Self, VinbergError> {
        if s.is_up_closed() {
            Ok(ClosedSet(s))
        } else {
            Err(VinbergError::NotClosed)
        }
    }

    pub fn set(&self) -> WeightSet {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, a: &Weight) -> bool {
        self.0.contains(a)
    }
}

/// Smallest up-closed set containing `s`.
pub fn closed_closure(s: &[Weight]) -> ClosedSet {
    let set = WeightSet::from_iter(
        all_weights().into_iter().filter(|g| s.iter().any(|a| leq_g(a, g))),
    );
    ClosedSet(set)
}

/// α(x) for every root, and the set where it equals 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct S0Report {
    pub all_nonzero: bool,
    pub unit_roots: Vec<LatticeVector>,
    pub matches_s0: bool,
    pub is_e8_cartan: bool,
}

pub fn verify_s0_basis(rs: &RootSystem) -> S0Report {
    let vals: Vec<i64> = rs.roots.iter().map(|r| r.x_value()).collect();
    let unit_roots: Vec<LatticeVector> =
        rs.roots.iter().zip(&vals).filter(|(_, &v)| v == 1).map(|(r, _)| *r).collect();
    let mut got: Vec<LatticeVector> = unit_roots.clone();
    let mut want: Vec<LatticeVector> = s_h().iter().map(|a| a.lattice()).collect();
    got.sort();
    want.sort();
    let gram: Vec<Vec<i64>> = want
        .iter()
        .map(|a| want.iter().map(|b| pairing(a, b)).collect())
        .collect();
    S0Report {
        all_nonzero: vals.iter().all(|&v| v != 0),
        matches_s0: got == want,
        unit_roots,
        is_e8_cartan: is_e8_cartan(&gram),
    }
}

/// Diagonal 2, off-diagonal 0/−1, the graph a tree with one branch node
/// whose arms have 1, 2 and 4 nodes.
pub fn is_e8_cartan(g: &[Vec<i64>]) -> bool {
    let n = g.len();
    if n != 8 {
        return false;
    }
    let mut edges = 0;
    for i in 0..n {
        if g[i][i] != 2 {
            return false;
        }
        for j in 0..n {
            if i != j {
                if g[i][j] != g[j][i] || !(g[i][j] == 0 || g[i][j] == -1) {
                    return false;
                }
                if j > i && g[i][j] == -1 {
                    edges += 1;
                }
            }
        }
    }
    if edges != 7 {
        return false;
    }
    let nbrs = |i: usize| (0..n).filter(|&j| j != i && g[i][j] == -1).collect::<Vec<_>>();
    // connected
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        if !std::mem::replace(&mut seen[v], true) {
            stack.extend(nbrs(v));
        }
    }
    if seen.iter().any(|s| !s) {
        return false;
    }
    let branch: Vec<usize> = (0..n).filter(|&i| nbrs(i).len() == 3).collect();
    if branch.len() != 1 || (0..n).any(|i| nbrs(i).len() > 3) {
        return false;
    }
    let c = branch[0];
    let mut arms: Vec<usize> = nbrs(c)
        .into_iter()
        .map(|start| {
            let (mut prev, mut cur, mut len) = (c, start, 1);
            loop {
                let next: Vec<usize> = nbrs(cur).into_iter().filter(|&x| x != prev).collect();
                if next.is_empty() {
                    return len;
                }
                prev = cur;
                cur = next[0];
                len += 1;
            }
        })
        .collect();
    arms.sort();
    arms == vec![1, 2, 4]
}

/// The intersection-count description of the pairing on weights.
pub fn intersection_pairing(a: &Weight, b: &Weight) -> i64 {
    let sa = a.indices();
    let common = b.indices().iter().filter(|x| sa.contains(x)).count();
    common as i64 - 1
}

/// Sum bookkeeping for the degrees of the invariant polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub degree_sum: u32,
    pub dim_h1: u32,
    pub slice_weights: Vec<(i32, u32)>,
    pub invariant_second_coords: Vec<u32>,
    pub base_weights: Vec<(i32, u32)>,
    pub b_degrees: Vec<u32>,
    pub ok: bool,
}

/// 12 + 18 + 24 + 30 = 84 = dim 𝔥(1), and the μ₃ × 𝔾_m weight lists of the
/// slice and of the quotient.
pub fn degree_bookkeeping() -> DegreeReport {
    let slice: Vec<(i32, u32)> = vec![
        (1, 4),
        (0, 12),
        (1, 16),
        (-1, 20),
        (0, 24),
        (1, 28),
        (0, 30),
        (0, 36),
        (1, 40),
        (0, 48),
    ];
    let base: Vec<(i32, u32)> =
        vec![(1, 4), (1, 16), (0, 24), (1, 28), (0, 36), (1, 40), (0, 48), (0, 60)];
    // c_i has weight (−i, 2i) for the invariant degrees i
    let derived: Vec<(i32, u32)> = [2u32, 8, 12, 14, 18, 20, 24, 30]
        .iter()
        .map(|&d| ((-(d as i32)).rem_euclid(3), 2 * d))
        .collect();
    let inv: Vec<u32> = slice.iter().filter(|(a, _)| *a == 0).map(|(_, b)| *b).collect();
    let mut bdeg: Vec<u32> =
        base.iter().filter(|(a, _)| *a == 0).map(|(_, b)| *b / 2).collect();
    bdeg.sort();
    let sum: u32 = bdeg.iter().sum();
    let ok = sum == 84 && base == derived && inv == vec![12, 24, 30, 36, 48] && bdeg == vec![12, 18, 24, 30];
    DegreeReport {
        degree_sum: sum,
        dim_h1: 84,
        slice_weights: slice,
        invariant_second_coords: inv,
        base_weights: base,
        b_degrees: bdeg,
        ok,
    }
}

/// Render an n-vector of rationals as "a/b" strings.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn is_zero_q(x: &Q) -> bool {
    x.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;

    #[test]
    fn highest_weight_coefficients() {
        let n = n_coeff(&w(7, 8, 9).lattice());
        let want = [1, 2, 3, 4, 5, 6, 4, 2].map(|a| q(a, 3));
        assert_eq!(n, want);
    }

    #[test]
    fn coweights_dual_to_simple_roots() {
        for i in 1..=8 {
            let b = LatticeVector::root_diff(i + 1, i);
            let n = n_coeff(&b);
            for (k, x) in n.iter().enumerate() {
                assert_eq!(*x, q((k + 1 == i) as i64, 1));
            }
        }
    }

    #[test]
    fn positive_root_sum() {
        let want = [8, 14, 18, 20, 20, 18, 14, 8].map(|a| q(a, 1));
        assert_eq!(sum_phi_g_plus(), want);
    }

    #[test]
    fn orders_agree() {
        let ws = all_weights();
        for a in &ws {
            for b in &ws {
                assert_eq!(leq_g(a, b), leq_g_coweight(&a.lattice(), &b.lattice()), "{a} {b}");
                if leq_g(a, b) && leq_g(b, a) {
                    assert_eq!(a, b);
                }
            }
            assert!(leq_g(a, a));
        }
        assert!(leq_g(&w(1, 2, 3), &w(7, 8, 9)));
        assert!(!leq_g(&w(2, 6, 7), &w(2, 5, 8)));
    }

    #[test]
    fn closures() {
        assert_eq!(closed_closure(&[w(7, 8, 9)]).set().members(), vec![w(7, 8, 9)]);
        let c = closed_closure(&[w(1, 6, 9)]);
        let brute = all_weights().iter().filter(|g| g.i >= 1 && g.j >= 6 && g.k >= 9).count();
        assert_eq!(c.len(), brute);
        assert!(c.set().is_up_closed());
        let sh = closed_closure(&s_h());
        assert!(phi_v_plus().is_subset(&sh.set()));
        assert_eq!(sh.set(), phi_v_plus());
    }

    #[test]
    fn s0_basis() {
        let rs = build_root_system();
        let r = verify_s0_basis(&rs);
        assert!(r.all_nonzero && r.matches_s0 && r.is_e8_cartan);
        assert_eq!(w(2, 6, 7).x_value(), 1);
        assert!(w(7, 8, 9).x_value() > 0);
        assert!(w(1, 2, 3).x_value() < 0);
    }

    #[test]
    fn intersection_table() {
        for a in all_weights() {
            for b in all_weights() {
                assert_eq!(intersection_pairing(&a, &b), pairing(&a.lattice(), &b.lattice()));
            }
        }
    }

    #[test]
    fn weight_parse_roundtrip() {
        for a in all_weights() {
            assert_eq!(a.to_string().parse::<Weight>().unwrap(), a);
            assert_eq!(Weight::from_index(a.index()), a);
        }
        assert!("(129)x".parse::<Weight>().is_err());
        assert!("321".parse::<Weight>().is_err());
    }

    #[test]
    fn degrees() {
        let d = degree_bookkeeping();
        assert!(d.ok);
        assert_eq!(d.slice_weights.len(), 10);
        assert_eq!(d.base_weights.len(), 8);
        assert_eq!(d.degree_sum, 84);
    }
}
