//! The model 𝔰𝔩₉ ⊕ ∧³ℚ⁹ ⊕ ∧⁶ℚ⁹ of the graded algebra, with the bracket on
//! ∧³ × ∧³ given by wedge product. The two remaining brackets are the
//! SL₉-equivariant contractions, scaled so that the Jacobi identity holds.
//!
//! Basis of the 248-dimensional space: E_ij (i ≠ j, lexicographic, 72),
//! H_k = E_kk − E_{k+1,k+1} (8), e_T for the 84 weights T, then the 84
//! ∧⁶ vectors e_{T^c} indexed by the complementary weight T.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{all_weights, Q, Weight};

pub const DIM: usize = 248;
pub const SL: usize = 80;

/// Sign and union mask of e_A ∧ e_B for disjoint index sets (bits 0..9).
fn merge_sign(a: u16, b: u16) -> Option<i32> {
    if a & b != 0 {
        return None;
    }
    // count pairs (s ∈ A, t ∈ B) with s > t
    let mut inv = 0u32;
    for s in 0..9 {
        if a >> s & 1 == 1 {
            inv += (b & ((1 << s) - 1)).count_ones();
        }
    }
    Some(if inv % 2 == 0 { 1 } else { -1 })
}

fn mask_of(t: &Weight) -> u16 {
    t.indices().iter().fold(0u16, |m, &i| m | 1 << (i - 1))
}

fn weight_of_mask(m: u16) -> Weight {
    let idx: Vec<u8> = (0..9).filter(|i| m >> i & 1 == 1).map(|i| i as u8 + 1).collect();
    Weight::new(idx[0], idx[1], idx[2]).expect("three bits")
}

const FULL: u16 = (1 << 9) - 1;

/// Element of the model: a traceless 9×9 matrix and two 84-vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WElem {
    pub g: Vec<Q>,
    pub v: Vec<Q>,
    pub w: Vec<Q>,
}

impl WElem {
    pub fn zero() -> Self {
        WElem { g: vec![Q::zero(); 81], v: vec![Q::zero(); 84], w: vec![Q::zero(); 84] }
    }

    pub fn is_zero(&self) -> bool {
        self.g.iter().chain(&self.v).chain(&self.w).all(|x| x.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        let f = |a: &[Q], b: &[Q]| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>();
        WElem { g: f(&self.g, &o.g), v: f(&self.v, &o.v), w: f(&self.w, &o.w) }
    }

    pub fn scale(&self, c: &Q) -> Self {
        let f = |a: &[Q]| a.iter().map(|x| x * c).collect::<Vec<_>>();
        WElem { g: f(&self.g), v: f(&self.v), w: f(&self.w) }
    }

    /// Basis element number n.
    pub fn basis(n: usize) -> Self {
        let mut e = Self::zero();
        if n < 72 {
            let (i, j) = offdiag_pair(n);
            e.g[9 * i + j] = Q::one();
        } else if n < SL {
            let k = n - 72;
            e.g[10 * k] = Q::one();
            e.g[10 * (k + 1)] = -Q::one();
        } else if n < SL + 84 {
            e.v[n - SL] = Q::one();
        } else {
            e.w[n - SL - 84] = Q::one();
        }
        e
    }

    /// Coordinates in the basis above.
    pub fn coords(&self) -> Vec<Q> {
        let mut out = Vec::with_capacity(DIM);
        for n in 0..72 {
            let (i, j) = offdiag_pair(n);
            out.push(self.g[9 * i + j].clone());
        }
        let mut partial = Q::zero();
        for k in 0..8 {
            partial += &self.g[10 * k];
            out.push(partial.clone());
        }
        out.extend(self.v.iter().cloned());
        out.extend(self.w.iter().cloned());
        out
    }

    pub fn from_coords(c: &[Q]) -> Self {
        let mut e = Self::zero();
        for (n, x) in c.iter().enumerate() {
            if !x.is_zero() {
                e = e.add(&Self::basis(n).scale(x));
            }
        }
        e
    }
}

fn offdiag_pair(n: usize) -> (usize, usize) {
    let i = n / 8;
    let r = n % 8;
    let j = if r < i { r } else { r + 1 };
    (i, j)
}

/// Bracket constants: [u, w] = κ·μ(u, w) and [w₁, w₂] = λ·ν(w₁, w₂).
#[derive(Clone, Debug)]
pub struct WedgeModel {
    pub kappa: Q,
    pub lambda: Q,
    weights: Vec<Weight>,
}

impl WedgeModel {
    /// Fix κ = 1 and solve for λ from the Jacobi identity on one triple
    /// (u₁, u₂, w) where the λ-term is nonzero.
    pub fn new() -> Self {
        let mut m = WedgeModel { kappa: Q::one(), lambda: Q::zero(), weights: all_weights() };
        for a in 0..84 {
            for b in 0..84 {
                for c in 0..84 {
                    let u1 = WElem::basis(SL + a);
                    let u2 = WElem::basis(SL + b);
                    let w = WElem::basis(SL + 84 + c);
                    let unit = WedgeModel { lambda: Q::one(), ..m.clone() };
                    let r = unit.bracket(&w, &unit.bracket(&u1, &u2));
                    if let Some(n) = r.v.iter().position(|x| !x.is_zero()) {
                        // with λ = 0 only the κ-terms survive
                        let p = m.jacobi(&u1, &u2, &w);
                        m.lambda = -p.v[n].clone() / r.v[n].clone();
                        return m;
                    }
                }
            }
        }
        unreachable!("some wedge of two basis vectors pairs with a ∧⁶ vector")
    }

    fn act_vec(&self, g: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); 84];
        for (t, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mask = mask_of(&self.weights[t]);
            for p in 0..9 {
                if mask >> p & 1 == 0 {
                    continue;
                }
                let rest = mask & !(1 << p);
                for m in 0..9 {
                    let a = &g[9 * m + p];
                    if a.is_zero() || rest >> m & 1 == 1 {
                        continue;
                    }
                    // e_p replaced by e_m in place: sign relative to sorted order
                    let s1 = merge_sign(1 << p, rest).unwrap();
                    let Some(s2) = merge_sign(1 << m, rest) else { continue };
                    let idx = weight_of_mask(rest | 1 << m).index();
                    let sgn = Q::from_integer(((s1 * s2) as i64).into());
                    out[idx] += c * a * sgn;
                }
            }
        }
        out
    }

    /// A acting on ∧⁶, using the same index-by-complement convention.
    fn act_vec6(&self, g: &[Q], w: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); 84];
        for (t, c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mask = FULL & !mask_of(&self.weights[t]);
            for p in 0..9 {
                if mask >> p & 1 == 0 {
                    continue;
                }
                let rest = mask & !(1 << p);
                for m in 0..9 {
                    let a = &g[9 * m + p];
                    if a.is_zero() || rest >> m & 1 == 1 {
                        continue;
                    }
                    let s1 = merge_sign(1 << p, rest).unwrap();
                    let Some(s2) = merge_sign(1 << m, rest) else { continue };
                    let idx = weight_of_mask(FULL & !(rest | 1 << m)).index();
                    let sgn = Q::from_integer(((s1 * s2) as i64).into());
                    out[idx] += c * a * sgn;
                }
            }
        }
        out
    }

    fn wedge33(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); 84];
        for (a, x) in u.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let ma = mask_of(&self.weights[a]);
            for (b, y) in v.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let mb = mask_of(&self.weights[b]);
                if let Some(s) = merge_sign(ma, mb) {
                    let idx = weight_of_mask(FULL & !(ma | mb)).index();
                    out[idx] += x * y * Q::from_integer((s as i64).into());
                }
            }
        }
        out
    }

    /// μ(u, w): the traceless matrix M with tr(A M) = coefficient of the
    /// volume form in (A·u) ∧ w.
    fn mu(&self, u: &[Q], w: &[Q]) -> Vec<Q> {
        let mut m = vec![Q::zero(); 81];
        for (t, x) in u.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let mask = mask_of(&self.weights[t]);
            for p in 0..9 {
                if mask >> p & 1 == 0 {
                    continue;
                }
                let rest = mask & !(1 << p);
                let s1 = merge_sign(1 << p, rest).unwrap();
                for j in 0..9 {
                    // A = E_jp sends e_p to e_j
                    let Some(s2) = merge_sign(1 << j, rest) else { continue };
                    let nm = rest | 1 << j;
                    let y = &w[weight_of_mask(nm).index()];
                    if y.is_zero() {
                        continue;
                    }
                    let sg = merge_sign(nm, FULL & !nm).unwrap();
                    m[9 * p + j] += x * y * Q::from_integer(((s1 * s2 * sg) as i64).into());
                }
            }
        }
        let tr: Q = (0..9).map(|i| m[10 * i].clone()).sum();
        let t9 = tr / Q::from_integer(9.into());
        for i in 0..9 {
            m[10 * i] -= &t9;
        }
        m
    }

    /// ν(w₁, w₂) = ⋆⁻¹(⋆w₁ ∧ ⋆w₂).
    fn nu(&self, w1: &[Q], w2: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); 84];
        for (a, x) in w1.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let ta = mask_of(&self.weights[a]);
            let sa = merge_sign(FULL & !ta, ta).unwrap();
            for (b, y) in w2.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let tb = mask_of(&self.weights[b]);
                let sb = merge_sign(FULL & !tb, tb).unwrap();
                let Some(s) = merge_sign(ta, tb) else { continue };
                let t = ta | tb;
                let c = FULL & !t;
                let sc = merge_sign(c, t).unwrap();
                let idx = weight_of_mask(c).index();
                out[idx] += x * y * Q::from_integer(((sa * sb * s * sc) as i64).into());
            }
        }
        out
    }

    pub fn bracket(&self, x: &WElem, y: &WElem) -> WElem {
        let mut out = WElem::zero();
        // 𝔰𝔩₉ × 𝔰𝔩₉
        for i in 0..9 {
            for k in 0..9 {
                let (a, b) = (&x.g[9 * i + k], &y.g[9 * i + k]);
                for j in 0..9 {
                    if !a.is_zero() && !y.g[9 * k + j].is_zero() {
                        out.g[9 * i + j] += a * &y.g[9 * k + j];
                    }
                    if !b.is_zero() && !x.g[9 * k + j].is_zero() {
                        out.g[9 * i + j] -= b * &x.g[9 * k + j];
                    }
                }
            }
        }
        let add = |a: &mut Vec<Q>, b: Vec<Q>, sign: i64| {
            for (p, q) in a.iter_mut().zip(b) {
                if q.is_zero() {
                    continue;
                }
                if sign > 0 {
                    *p += q;
                } else {
                    *p -= q;
                }
            }
        };
        add(&mut out.v, self.act_vec(&x.g, &y.v), 1);
        add(&mut out.v, self.act_vec(&y.g, &x.v), -1);
        add(&mut out.w, self.act_vec6(&x.g, &y.w), 1);
        add(&mut out.w, self.act_vec6(&y.g, &x.w), -1);
        add(&mut out.w, self.wedge33(&x.v, &y.v), 1);
        let k = |v: Vec<Q>| v.into_iter().map(|a| a * &self.kappa).collect::<Vec<_>>();
        add(&mut out.g, k(self.mu(&x.v, &y.w)), 1);
        add(&mut out.g, k(self.mu(&y.v, &x.w)), -1);
        let l = |v: Vec<Q>| v.into_iter().map(|a| a * &self.lambda).collect::<Vec<_>>();
        add(&mut out.v, l(self.nu(&x.w, &y.w)), 1);
        out
    }

    pub fn jacobi(&self, a: &WElem, b: &WElem, c: &WElem) -> WElem {
        self.bracket(a, &self.bracket(b, c))
            .add(&self.bracket(b, &self.bracket(c, a)))
            .add(&self.bracket(c, &self.bracket(a, b)))
    }

    /// Jacobi identity on `n` seeded random basis triples plus the
    /// antisymmetry of the bracket on the same pairs; returns failures.
    pub fn jacobi_sample(&self, n: usize, seed: u64) -> usize {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut bad = 0;
        for _ in 0..n {
            let (i, j, k) = (rng.gen_range(0..DIM), rng.gen_range(0..DIM), rng.gen_range(0..DIM));
            let (a, b, c) = (WElem::basis(i), WElem::basis(j), WElem::basis(k));
            if !self.jacobi(&a, &b, &c).is_zero() {
                bad += 1;
            }
            if !self.bracket(&a, &b).add(&self.bracket(&b, &a)).is_zero() {
                bad += 1;
            }
        }
        bad
    }

    /// Diagonal element of 𝔰𝔩₉ with the given entries.
    pub fn diag(d: &[Q; 9]) -> WElem {
        let mut e = WElem::zero();
        for i in 0..9 {
            e.g[10 * i] = d[i].clone();
        }
        e
    }

    pub fn wedge3(t: &Weight) -> WElem {
        WElem::basis(SL + t.index())
    }

    /// e_{T^c} ∈ ∧⁶ for the complementary weight T.
    pub fn wedge6(t: &Weight) -> WElem {
        WElem::basis(SL + 84 + t.index())
    }
}

impl Default for WedgeModel {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vinberg::w;

    #[test]
    fn coords_roundtrip() {
        for n in 0..DIM {
            let e = WElem::basis(n);
            let c = e.coords();
            for (m, x) in c.iter().enumerate() {
                assert_eq!(x.is_zero(), m != n, "{n} {m}");
            }
            assert_eq!(WElem::from_coords(&c), e);
        }
    }

    #[test]
    fn wedge_of_complementary_triples() {
        let m = WedgeModel::new();
        let a = WedgeModel::wedge3(&w(1, 2, 3));
        let b = WedgeModel::wedge3(&w(4, 5, 6));
        let c = m.bracket(&a, &b);
        assert_eq!(c, WedgeModel::wedge6(&w(7, 8, 9)));
        assert!(m.bracket(&a, &a).is_zero());
    }

    #[test]
    fn jacobi_holds() {
        let m = WedgeModel::new();
        assert!(!m.lambda.is_zero());
        assert_eq!(m.jacobi_sample(3000, 7), 0);
    }

    #[test]
    fn wrong_lambda_breaks_jacobi() {
        let mut m = WedgeModel::new();
        m.lambda = -m.lambda.clone();
        assert!(m.jacobi_sample(3000, 7) > 0);
    }
}
