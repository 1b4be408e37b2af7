//! The Heisenberg extension 1 → μ₃ → ℋ → Λ_θ → 1, the cover Λ̃ of the
//! lattice, and the 9-dimensional Stone–von Neumann representation.
//!
//! Coordinates: a class λ is written `Σ aᵢeᵢ + bᵢfᵢ` in a symplectic basis,
//! the cocycle is `c(λ, μ) = a·b′` and the group law is
//! `(k, λ)(l, μ) = (k + l + c(λ, μ), λ + μ)`.

use std::fmt;

use thiserror::Error;

pub use crate::cyclo::Cyc;
use crate::cyclo::Eis;
use crate::linalg::{self, SparseVec};
use crate::rootsys::{rank_f3, CoinvariantClass, Elliptic, LatticeVector, RootSystem};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HeisError {
    #[error("pairing Gram matrix has rank {0}, expected 4")]
    Degenerate(usize),
}

/// Symplectic basis e₁, e₂, f₁, f₂ of Λ_θ: ⟨eᵢ, fⱼ⟩ = δᵢⱼ, ⟨eᵢ, eⱼ⟩ = ⟨fᵢ, fⱼ⟩ = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticBasis {
    pub e: [CoinvariantClass; 2],
    pub f: [CoinvariantClass; 2],
}

/// Pairing data plus a fixed symplectic basis.
#[derive(Clone, Debug)]
pub struct Heis {
    gram: [[u8; 4]; 4],
    pub basis: SymplecticBasis,
}

fn pair(gram: &[[u8; 4]; 4], l: &CoinvariantClass, m: &CoinvariantClass) -> u8 {
    let mut s = 0u32;
    for i in 0..4 {
        for j in 0..4 {
            s += l.vec[i] as u32 * gram[i][j] as u32 * m.vec[j] as u32;
        }
    }
    (s % 3) as u8
}

/// Deterministic symplectic reduction: scan classes in lexicographic order.
pub fn symplectic_basis(gram: &[[u8; 4]; 4]) -> Result<SymplecticBasis, HeisError> {
    let r = rank_f3(gram);
    if r != 4 {
        return Err(HeisError::Degenerate(r));
    }
    let all = CoinvariantClass::all();
    let mut chosen: Vec<(CoinvariantClass, CoinvariantClass)> = Vec::new();
    for _ in 0..2 {
        let orth = |x: &CoinvariantClass| {
            chosen
                .iter()
                .all(|(e, f)| pair(gram, x, e) == 0 && pair(gram, x, f) == 0)
        };
        let e = *all.iter().find(|x| !x.is_zero() && orth(x)).expect("nondegenerate");
        let f = *all
            .iter()
            .find(|x| orth(x) && pair(gram, &e, x) == 1)
            .expect("nondegenerate");
        chosen.push((e, f));
    }
    Ok(SymplecticBasis {
        e: [chosen[0].0, chosen[1].0],
        f: [chosen[0].1, chosen[1].1],
    })
}

impl Heis {
    pub fn new(ell: &Elliptic) -> Result<Self, HeisError> {
        let basis = symplectic_basis(&ell.gram)?;
        Ok(Heis { gram: ell.gram, basis })
    }

    /// Pairing exponent ⟨λ, μ⟩.
    pub fn pairing(&self, l: &CoinvariantClass, m: &CoinvariantClass) -> u8 {
        pair(&self.gram, l, m)
    }

    /// Symplectic coordinates (a₁, a₂, b₁, b₂).
    pub fn symp_coords(&self, l: &CoinvariantClass) -> [u8; 4] {
        let b = &self.basis;
        [
            self.pairing(l, &b.f[0]),
            self.pairing(l, &b.f[1]),
            (3 - self.pairing(l, &b.e[0])) % 3,
            (3 - self.pairing(l, &b.e[1])) % 3,
        ]
    }

    pub fn from_symp(&self, c: [u8; 4]) -> CoinvariantClass {
        let b = &self.basis;
        b.e[0]
            .scale(c[0] as i64)
            .add(&b.e[1].scale(c[1] as i64))
            .add(&b.f[0].scale(c[2] as i64))
            .add(&b.f[1].scale(c[3] as i64))
    }

    /// Rows e₁, e₂, f₁, f₂ of the change-of-basis matrix, Smith-basis coordinates.
    pub fn basis_matrix(&self) -> [[u8; 4]; 4] {
        let b = &self.basis;
        [b.e[0].vec, b.e[1].vec, b.f[0].vec, b.f[1].vec]
    }

    /// The cocycle c(λ, μ) = Σ aᵢ(λ) bᵢ(μ).
    pub fn cocycle(&self, l: &CoinvariantClass, m: &CoinvariantClass) -> u8 {
        let x = self.symp_coords(l);
        let y = self.symp_coords(m);
        ((x[0] * y[2] + x[1] * y[3]) % 3) as u8
    }

    pub fn mul(&self, g: &HeisElement, h: &HeisElement) -> HeisElement {
        HeisElement {
            k: (g.k + h.k + self.cocycle(&g.cls, &h.cls)) % 3,
            cls: g.cls.add(&h.cls),
        }
    }

    pub fn inv(&self, g: &HeisElement) -> HeisElement {
        HeisElement {
            k: (2 * g.k + self.cocycle(&g.cls, &g.cls)) % 3,
            cls: g.cls.neg(),
        }
    }

    /// g h g⁻¹ h⁻¹
    pub fn commutator(&self, g: &HeisElement, h: &HeisElement) -> HeisElement {
        let gh = self.mul(g, h);
        let t = self.mul(&gh, &self.inv(g));
        self.mul(&t, &self.inv(h))
    }

    /// All 243 elements, ordered by (class, k).
    pub fn elements(&self) -> Vec<HeisElement> {
        CoinvariantClass::all()
            .into_iter()
            .flat_map(|cls| (0..3).map(move |k| HeisElement { k, cls }))
            .collect()
    }

    /// ρ(k, λ) = ω^k M_b T_a on functions on 𝔽₃², where
    /// T_a δ_x = δ_{x−a} and M_b δ_x = ω^{b·x} δ_x. Basis index of x = (s, t)
    /// is 3s + t.
    pub fn svn_rep_eis(&self, h: &HeisElement) -> EisMat9 {
        let c = self.symp_coords(&h.cls);
        let (a, b) = ([c[0], c[1]], [c[2], c[3]]);
        let mut m = [[Eis::ZERO; 9]; 9];
        for s in 0..3u8 {
            for t in 0..3u8 {
                let src = (3 * s + t) as usize;
                let ys = (s + 3 - a[0]) % 3;
                let yt = (t + 3 - a[1]) % 3;
                let dst = (3 * ys + yt) as usize;
                let e = h.k as i64 + (b[0] * ys + b[1] * yt) as i64;
                m[dst][src] = Eis::omega_pow(e);
            }
        }
        m
    }

    pub fn svn_rep(&self, h: &HeisElement) -> RepMatrix {
        RepMatrix::from_eis(&self.svn_rep_eis(h))
    }

    /// π(α̃) ∈ ℋ.
    pub fn project_tilde(&self, ell: &Elliptic, rs: &RootSystem, t: &TildeRoot) -> HeisElement {
        HeisElement { k: t.k, cls: ell.coinvariant_project(rs, &t.root) }
    }

    /// Product in Λ̃ = Λ ×_{Λθ} ℋ.
    pub fn tilde_mul(&self, ell: &Elliptic, rs: &RootSystem, x: &TildeRoot, y: &TildeRoot) -> TildeRoot {
        let c = self.cocycle(&ell.coinvariant_project(rs, &x.root), &ell.coinvariant_project(rs, &y.root));
        TildeRoot { root: x.root + y.root, k: (x.k + y.k + c) % 3 }
    }

    /// Pairs (g, h) of the 243² with ρ(gh) ≠ ρ(g)ρ(h).
    pub fn homomorphism_failures(&self) -> usize {
        let els = self.elements();
        let reps: Vec<EisMat9> = els.iter().map(|g| self.svn_rep_eis(g)).collect();
        els.iter()
            .enumerate()
            .map(|(i, g)| {
                els.iter()
                    .enumerate()
                    .filter(|(j, h)| self.svn_rep_eis(&self.mul(g, h)) != eis_mat_mul(&reps[i], &reps[*j]))
                    .count()
            })
            .sum()
    }

    /// Group-law failures over all of ℋ: associativity on a stride, inverses,
    /// exponent 3, and commutator = pairing on every pair.
    pub fn group_law_failures(&self) -> usize {
        let els = self.elements();
        let mut bad = 0;
        for g in &els {
            bad += (self.mul(g, &self.inv(g)) != HeisElement::IDENTITY) as usize;
            bad += (self.mul(&self.mul(g, g), g) != HeisElement::IDENTITY) as usize;
            for h in &els {
                let c = self.commutator(g, h);
                bad += (c != HeisElement::central(self.pairing(&g.cls, &h.cls))) as usize;
            }
        }
        for g in els.iter().step_by(5) {
            for h in els.iter().step_by(7) {
                for k in els.iter().step_by(11) {
                    bad += (self.mul(&self.mul(g, h), k) != self.mul(g, &self.mul(h, k))) as usize;
                }
            }
        }
        bad
    }

    /// Dimension of the space of 9×9 matrices commuting with every ρ(h),
    /// computed from the generators and the centre.
    pub fn commutant_dimension(&self) -> usize {
        let gens: Vec<HeisElement> = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
            .iter()
            .map(|c| HeisElement { k: 0, cls: self.from_symp(*c) })
            .collect();
        let mut rows: Vec<SparseVec> = Vec::new();
        for g in &gens {
            let r = self.svn_rep_eis(g);
            // (X R − R X)_{ij} = Σ_k X_{ik} R_{kj} − R_{ik} X_{kj}; unknown X_{pq} at 9p+q.
            for i in 0..9 {
                for j in 0..9 {
                    let mut row = SparseVec::new();
                    for k in 0..9 {
                        if !r[k][j].is_zero() {
                            add_entry(&mut row, 9 * i + k, r[k][j].to_cyc());
                        }
                        if !r[i][k].is_zero() {
                            add_entry(&mut row, 9 * k + j, -r[i][k].to_cyc());
                        }
                    }
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
        linalg::kernel(&rows, 81).len()
    }
}

fn add_entry(row: &mut SparseVec, k: usize, c: Cyc) {
    let e = row.entry(k).or_insert_with(Cyc::zero);
    *e += &c;
    if e.is_zero() {
        row.remove(&k);
    }
}

/// Element (ζᵏ, λ) of ℋ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeisElement {
    pub k: u8,
    pub cls: CoinvariantClass,
}

impl HeisElement {
    pub const IDENTITY: HeisElement = HeisElement { k: 0, cls: CoinvariantClass::ZERO };

    pub fn central(k: u8) -> Self {
        HeisElement { k: k % 3, cls: CoinvariantClass::ZERO }
    }
}

/// α̃ = ζᵏ · s(α) in Λ̃, with s(α) = (α, (0, ᾱ)) the canonical section.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TildeRoot {
    pub root: LatticeVector,
    pub k: u8,
}

impl TildeRoot {
    pub fn section(root: LatticeVector) -> Self {
        TildeRoot { root, k: 0 }
    }

    pub fn twist(&self, k: u8) -> Self {
        TildeRoot { root: self.root, k: (self.k + k) % 3 }
    }
}

/// 9×9 matrix over ℤ[ω].
pub type EisMat9 = [[Eis; 9]; 9];

pub fn eis_mat_mul(a: &EisMat9, b: &EisMat9) -> EisMat9 {
    let mut c = [[Eis::ZERO; 9]; 9];
    for i in 0..9 {
        for k in 0..9 {
            let x = a[i][k];
            if x.is_zero() {
                continue;
            }
            for j in 0..9 {
                if !b[k][j].is_zero() {
                    c[i][j] += x * b[k][j];
                }
            }
        }
    }
    c
}

pub fn eis_mat_trace(a: &EisMat9) -> Eis {
    (0..9).fold(Eis::ZERO, |s, i| s + a[i][i])
}

pub fn eis_mat_scale(a: &EisMat9, c: Eis) -> EisMat9 {
    let mut out = *a;
    for row in out.iter_mut() {
        for x in row.iter_mut() {
            *x = *x * c;
        }
    }
    out
}

pub fn eis_identity() -> EisMat9 {
    let mut m = [[Eis::ZERO; 9]; 9];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Eis::ONE;
    }
    m
}

/// 9×9 matrix over ℚ(ω).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrix {
    pub m: Vec<Vec<Cyc>>,
}

impl RepMatrix {
    pub fn from_eis(a: &EisMat9) -> Self {
        RepMatrix { m: a.iter().map(|r| r.iter().map(|x| x.to_cyc()).collect()).collect() }
    }

    pub fn mul(&self, o: &RepMatrix) -> RepMatrix {
        let n = self.m.len();
        let mut out = vec![vec![Cyc::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if self.m[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !o.m[k][j].is_zero() {
                        let t = self.m[i][k].mul_ref(&o.m[k][j]);
                        out[i][j] += &t;
                    }
                }
            }
        }
        RepMatrix { m: out }
    }

    pub fn trace(&self) -> Cyc {
        let mut s = Cyc::zero();
        for i in 0..self.m.len() {
            s += &self.m[i][i];
        }
        s
    }

    pub fn scale(&self, c: &Cyc) -> RepMatrix {
        RepMatrix { m: self.m.iter().map(|r| r.iter().map(|x| x.mul_ref(c)).collect()).collect() }
    }
}

impl fmt::Display for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.m {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, elliptic_order3};

    fn setup() -> Heis {
        let rs = build_root_system();
        let e = elliptic_order3(&rs).unwrap();
        Heis::new(&e).unwrap()
    }

    #[test]
    fn basis_is_symplectic() {
        let h = setup();
        let b = &h.basis;
        assert_eq!(h.pairing(&b.e[0], &b.f[0]), 1);
        assert_eq!(h.pairing(&b.e[1], &b.f[1]), 1);
        assert_eq!(h.pairing(&b.e[0], &b.e[1]), 0);
        assert_eq!(h.pairing(&b.f[0], &b.f[1]), 0);
        assert_eq!(h.pairing(&b.e[0], &b.f[1]), 0);
        for c in CoinvariantClass::all() {
            assert_eq!(h.from_symp(h.symp_coords(&c)), c);
        }
    }

    #[test]
    fn group_axioms() {
        let h = setup();
        let els = h.elements();
        assert_eq!(els.len(), 243);
        for g in &els {
            assert_eq!(h.mul(g, &h.inv(g)), HeisElement::IDENTITY);
            assert_eq!(h.mul(&h.mul(g, g), g), HeisElement::IDENTITY);
        }
        for g in els.iter().step_by(7) {
            for k in els.iter().step_by(5) {
                let c = h.commutator(g, k);
                assert!(c.cls.is_zero());
                assert_eq!(c.k, h.pairing(&g.cls, &k.cls));
            }
        }
    }

    #[test]
    fn svn_center_and_traces() {
        let h = setup();
        let z = h.svn_rep_eis(&HeisElement::central(1));
        assert_eq!(z, eis_mat_scale(&eis_identity(), Eis::OMEGA));
        for g in h.elements() {
            let t = eis_mat_trace(&h.svn_rep_eis(&g));
            if g.cls.is_zero() {
                assert_eq!(t, Eis::omega_pow(g.k as i64).scale(9));
            } else {
                assert_eq!(t, Eis::ZERO);
            }
        }
    }

    #[test]
    fn representation_is_homomorphism() {
        let h = setup();
        assert_eq!(h.homomorphism_failures(), 0);
        assert_eq!(h.group_law_failures(), 0);
    }

    #[test]
    fn irreducible() {
        assert_eq!(setup().commutant_dimension(), 1);
    }
}
