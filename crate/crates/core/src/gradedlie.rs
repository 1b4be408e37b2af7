//! The Lie algebra 𝔥 = 𝔞 ⊕ 𝔥₁ of rank 248 built from the Heisenberg data,
//! its ℤ/3-grading θ_h and the 9-dimensional representation ρ′ of 𝔥(0).
//!
//! Basis order: indices 0..8 are the coroots β̌ₖ of the S₀ roots, index
//! 8 + r is the root vector X_{s(αᵣ)} for root r in [`RootSystem`] order.
//! All structure constants lie in ℤ[ω] and are tabulated once.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::cyclo::{Cyc, Eis};
use crate::heis::{self, EisMat9, Heis, HeisElement, RepMatrix, TildeRoot};
use crate::linalg::{self, Echelon, SparseVec};
use crate::rootsys::{build_root_system, elliptic_order3, Elliptic, RootSystem, NUM_ROOTS};

pub const DIM: usize = 248;
pub const RANK: usize = 8;

/// Sparse element of 𝔥: coroot part over the 8 S₀ coroots and root part
/// over the 240 canonical root vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LieElement {
    pub cartan: BTreeMap<usize, Cyc>,
    pub rootpart: BTreeMap<usize, Cyc>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn coroot(k: usize) -> Self {
        let mut e = Self::zero();
        e.cartan.insert(k, Cyc::one());
        e
    }

    pub fn root_vector(r: usize) -> Self {
        let mut e = Self::zero();
        e.rootpart.insert(r, Cyc::one());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.cartan.is_empty() && self.rootpart.is_empty()
    }

    /// Flatten to a sparse vector over the 248-element basis.
    pub fn to_sparse(&self) -> SparseVec {
        let mut v = SparseVec::new();
        for (k, c) in &self.cartan {
            v.insert(*k, c.clone());
        }
        for (r, c) in &self.rootpart {
            v.insert(RANK + *r, c.clone());
        }
        v
    }

    pub fn from_sparse(v: &SparseVec) -> Self {
        let mut e = Self::zero();
        for (k, c) in v {
            if c.is_zero() {
                continue;
            }
            if *k < RANK {
                e.cartan.insert(*k, c.clone());
            } else {
                e.rootpart.insert(*k - RANK, c.clone());
            }
        }
        e
    }

    pub fn scale(&self, c: &Cyc) -> Self {
        Self::from_sparse(&linalg::scale(&self.to_sparse(), c))
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut v = self.to_sparse();
        linalg::axpy(&mut v, &Cyc::one(), &o.to_sparse());
        Self::from_sparse(&v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut v = self.to_sparse();
        linalg::axpy(&mut v, &(-Cyc::one()), &o.to_sparse());
        Self::from_sparse(&v)
    }
}

/// Sparse ℤ[ω] vector used on the fast path.
pub type EisVec = Vec<(usize, Eis)>;

/// The constructed algebra with all supporting data.
#[derive(Clone, Debug)]
pub struct GradedLie {
    pub rs: RootSystem,
    pub ell: Elliptic,
    pub heis: Heis,
    /// [b_i, b_j] for i, j < 248, row-major
    table: Vec<EisVec>,
}

/// One failed Jacobi or antisymmetry evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub triple: (usize, usize, usize),
    pub residual: EisVec,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JacobiReport {
    pub triples_checked: u64,
    pub pairs_checked: u64,
    pub violations: Vec<Violation>,
}

impl GradedLie {
    pub fn build() -> Self {
        let rs = build_root_system();
        let ell = elliptic_order3(&rs).expect("elliptic element");
        let heis = Heis::new(&ell).expect("nondegenerate pairing");
        Self::from_parts(rs, ell, heis)
    }

    pub fn from_parts(rs: RootSystem, ell: Elliptic, heis: Heis) -> Self {
        let mut g = GradedLie { rs, ell, heis, table: Vec::new() };
        let table: Vec<EisVec> = (0..DIM * DIM)
            .into_par_iter()
            .map(|n| g.bracket_generators(n / DIM, n % DIM))
            .collect();
        g.table = table;
        g
    }

    /// c(ᾱ, β̄) for roots r, s.
    fn cocycle(&self, r: usize, s: usize) -> i64 {
        self.heis.cocycle(&self.ell.root_class[r], &self.ell.root_class[s]) as i64
    }

    /// Bracket of two basis elements straight from the defining table.
    fn bracket_generators(&self, i: usize, j: usize) -> EisVec {
        let rs = &self.rs;
        match (i < RANK, j < RANK) {
            (true, true) => Vec::new(),
            (true, false) => {
                let r = j - RANK;
                let p = rs.pair(rs.s0[i], r);
                if p == 0 { Vec::new() } else { vec![(j, Eis::int(p))] }
            }
            (false, true) => {
                let r = i - RANK;
                let p = rs.pair(rs.s0[j], r);
                if p == 0 { Vec::new() } else { vec![(i, Eis::int(-p))] }
            }
            (false, false) => {
                let (r, s) = (i - RANK, j - RANK);
                if rs.neg_index(r) == s {
                    // −α̃β̃ α̌ with α̃β̃ = ζ^{c(ᾱ, −ᾱ)}
                    let z = Eis::omega_pow(self.cocycle(r, s));
                    rs.root_coords(r)
                        .iter()
                        .enumerate()
                        .filter(|(_, &a)| a != 0)
                        .map(|(k, &a)| (k, -(z.scale(a))))
                        .collect()
                } else if let Some(t) = rs.sum_index(r, s) {
                    let sign = if rs.pair(r, self.ell.perm[s]).rem_euclid(2) == 0 { 1 } else { -1 };
                    let e = self.ell.root_pairing(r, s) as i64 + self.cocycle(r, s);
                    vec![(RANK + t, Eis::omega_pow(e).scale(sign))]
                } else {
                    Vec::new()
                }
            }
        }
    }

    #[cfg(test)]
    fn corrupt(&mut self, i: usize, j: usize) {
        for (_, c) in self.table[i * DIM + j].iter_mut() {
            *c = -*c;
        }
        for (_, c) in self.table[j * DIM + i].iter_mut() {
            *c = -*c;
        }
    }

    /// Structure constants [b_i, b_j].
    pub fn structure(&self, i: usize, j: usize) -> &EisVec {
        &self.table[i * DIM + j]
    }

    /// Bracket of sparse ℤ[ω] vectors.
    pub fn bracket_eis(&self, x: &EisVec, y: &EisVec) -> EisVec {
        let mut acc = vec![Eis::ZERO; DIM];
        for &(i, a) in x {
            for &(j, b) in y {
                let ab = a * b;
                for &(k, c) in self.structure(i, j) {
                    acc[k] += ab * c;
                }
            }
        }
        acc.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Bilinear bracket on [`LieElement`]s.
    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> LieElement {
        let xs = x.to_sparse();
        let ys = y.to_sparse();
        let mut out = SparseVec::new();
        for (i, a) in &xs {
            for (j, b) in &ys {
                let ab = a.mul_ref(b);
                for &(k, c) in self.structure(*i, *j) {
                    let t = ab.mul_ref(&c.to_cyc());
                    let e = out.entry(k).or_insert_with(Cyc::zero);
                    *e += &t;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        LieElement::from_sparse(&out)
    }

    /// Jacobi identity on all unordered triples of distinct basis elements
    /// plus antisymmetry on all ordered pairs. Work is split over the
    /// current rayon pool; the report does not depend on the split.
    pub fn verify_jacobi(&self) -> JacobiReport {
        let mut report = (0..DIM)
            .into_par_iter()
            .map(|i| {
                let mut acc = vec![Eis::ZERO; DIM];
                let mut rep = JacobiReport::default();
                for j in 0..DIM {
                    rep.pairs_checked += 1;
                    let mut sum: BTreeMap<usize, Eis> = BTreeMap::new();
                    for &(k, c) in self.structure(i, j) {
                        *sum.entry(k).or_default() += c;
                    }
                    for &(k, c) in self.structure(j, i) {
                        *sum.entry(k).or_default() += c;
                    }
                    let residual: EisVec = sum.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                    if !residual.is_empty() {
                        rep.violations.push(Violation { triple: (i, j, j), residual });
                    }
                }
                for j in i + 1..DIM {
                    for k in j + 1..DIM {
                        rep.triples_checked += 1;
                        let mut touched: Vec<usize> = Vec::new();
                        for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                            for &(m, c) in self.structure(y, z) {
                                for &(n, d) in self.structure(x, m) {
                                    acc[n] += c * d;
                                    touched.push(n);
                                }
                            }
                        }
                        let mut residual: EisVec = Vec::new();
                        touched.sort_unstable();
                        touched.dedup();
                        for n in touched {
                            if !acc[n].is_zero() {
                                residual.push((n, acc[n]));
                                acc[n] = Eis::ZERO;
                            }
                        }
                        if !residual.is_empty() {
                            rep.violations.push(Violation { triple: (i, j, k), residual });
                        }
                    }
                }
                rep
            })
            .reduce(JacobiReport::default, |mut a, b| {
                a.triples_checked += b.triples_checked;
                a.pairs_checked += b.pairs_checked;
                a.violations.extend(b.violations);
                a
            });
        report.violations.sort_by_key(|v| v.triple);
        report
    }

    /// θ_h applied to basis element i: w on 𝔞, X_{s(α)} ↦ X_{s(wα)}.
    pub fn theta_basis(&self, i: usize) -> EisVec {
        if i < RANK {
            // w β̌_i = Σ_j W[j][i] β̌_j
            (0..RANK)
                .filter(|&j| self.ell.w.matrix[j][i] != 0)
                .map(|j| (j, Eis::int(self.ell.w.matrix[j][i])))
                .collect()
        } else {
            vec![(RANK + self.ell.perm[i - RANK], Eis::ONE)]
        }
    }

    pub fn theta_eis(&self, x: &EisVec, power: u32) -> EisVec {
        let mut cur = x.clone();
        for _ in 0..power % 3 {
            let mut acc: BTreeMap<usize, Eis> = BTreeMap::new();
            for &(i, c) in &cur {
                for (j, d) in self.theta_basis(i) {
                    *acc.entry(j).or_default() += c * d;
                }
            }
            cur = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        cur
    }

    /// θ_h(ζᵏ) as a linear map on [`LieElement`]s.
    pub fn theta_h(&self, k: u32, x: &LieElement) -> LieElement {
        let mut out = SparseVec::new();
        for (i, c) in x.to_sparse() {
            let img = self.theta_eis(&vec![(i, Eis::ONE)], k);
            for (j, d) in img {
                let e = out.entry(j).or_insert_with(Cyc::zero);
                *e += &c.mul_ref(&d.to_cyc());
            }
        }
        out.retain(|_, c| !c.is_zero());
        LieElement::from_sparse(&out)
    }

    /// Number of basis pairs where θ_h fails to commute with the bracket.
    pub fn theta_automorphism_failures(&self) -> usize {
        (0..DIM)
            .into_par_iter()
            .map(|i| {
                let ti = self.theta_basis(i);
                (0..DIM)
                    .filter(|&j| {
                        let lhs = self.theta_eis(self.structure(i, j), 1);
                        let rhs = self.bracket_eis(&ti, &self.theta_basis(j));
                        lhs != rhs
                    })
                    .count()
            })
            .sum()
    }

    /// θ_h³ = 1 and θ_h ≠ 1 on every basis vector.
    pub fn theta_order(&self) -> u32 {
        for k in 1..=3u32 {
            if (0..DIM).all(|i| self.theta_eis(&vec![(i, Eis::ONE)], k) == vec![(i, Eis::ONE)]) {
                return k;
            }
        }
        0
    }

    /// Eigenspace bases for θ_h with eigenvalues ω⁰, ω¹, ω².
    pub fn graded_decomposition(&self) -> GradedDecomposition {
        let mut parts: [Vec<EisVec>; 3] = Default::default();
        for &r in &self.ell.orbit_reps {
            let [a, b, c] = self.ell.orbit_of(r);
            for (i, part) in parts.iter_mut().enumerate() {
                let i = i as i64;
                part.push(vec![
                    (RANK + a, Eis::ONE),
                    (RANK + b, Eis::omega_pow(-i)),
                    (RANK + c, Eis::omega_pow(-2 * i)),
                ]);
            }
        }
        for (i, part) in parts.iter_mut().enumerate() {
            // kernel of (w − ωⁱ) on the coroot lattice
            let lam = Cyc::omega_pow(i as i64);
            let rows: Vec<SparseVec> = (0..RANK)
                .map(|r| {
                    let mut row = SparseVec::new();
                    for c in 0..RANK {
                        let mut x = Cyc::from_ints(self.ell.w.matrix[r][c], 0);
                        if r == c {
                            x = x.sub_ref(&lam);
                        }
                        if !x.is_zero() {
                            row.insert(c, x);
                        }
                    }
                    row
                })
                .collect();
            for v in linalg::kernel(&rows, RANK) {
                part.push(clear_denominators(&v));
            }
        }
        for part in parts.iter_mut() {
            for v in part.iter_mut() {
                v.sort_by_key(|(k, _)| *k);
            }
        }
        GradedDecomposition { parts }
    }

    /// Count of basis pairs (u ∈ 𝔥(i), v ∈ 𝔥(j)) whose bracket is not a
    /// θ_h-eigenvector of eigenvalue ω^{i+j}.
    pub fn grading_failures(&self, d: &GradedDecomposition, i: usize, j: usize) -> usize {
        let target = Eis::omega_pow((i + j) as i64);
        d.parts[i]
            .par_iter()
            .map(|u| {
                d.parts[j]
                    .iter()
                    .filter(|v| {
                        let b = self.bracket_eis(u, v);
                        let tb = self.theta_eis(&b, 1);
                        let scaled: EisVec = b.iter().map(|&(k, c)| (k, c * target)).collect();
                        tb != scaled
                    })
                    .count()
            })
            .sum()
    }

    /// Z_α̃ = X_α̃ + X_{wα̃} + X_{w²α̃} as a ℤ[ω] vector.
    pub fn z_eis(&self, root: usize, k: u8) -> EisVec {
        let z = Eis::omega_pow(k as i64);
        let mut v: EisVec = self.ell.orbit_of(root).iter().map(|&r| (RANK + r, z)).collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    pub fn z_element(&self, t: &TildeRoot) -> LieElement {
        let r = self.rs.index_of(&t.root).expect("tilde root over a root");
        eis_to_lie(&self.z_eis(r, t.k))
    }

    /// 3ρ′(z) for z ∈ 𝔥(0) with ℤ[ω] coefficients; `None` if z is not
    /// θ_h-fixed.
    pub fn rho_prime3_eis(&self, z: &EisVec) -> Option<EisMat9> {
        if self.theta_eis(z, 1) != *z {
            return None;
        }
        let three_c = Eis::new(1, 2); // 3ω(1 − ω⁻¹)⁻¹ = 1 + 2ω
        let mut out = [[Eis::ZERO; 9]; 9];
        for &(i, coeff) in z {
            if i < RANK {
                return None;
            }
            let r = i - RANK;
            if !self.ell.orbit_reps.contains(&r) {
                continue;
            }
            let rho = self.heis.svn_rep_eis(&HeisElement { k: 0, cls: self.ell.root_class[r] });
            let s = coeff * three_c;
            for a in 0..9 {
                for b in 0..9 {
                    out[a][b] += rho[a][b] * s;
                }
            }
        }
        Some(out)
    }

    /// ρ′(z) as an exact matrix over ℚ(ω).
    pub fn rho_prime(&self, z: &LieElement) -> Option<RepMatrix> {
        let ze = lie_to_eis(z)?;
        let m = self.rho_prime3_eis(&ze)?;
        let third = Cyc::new(
            num_rational::BigRational::new(1.into(), 3.into()),
            num_rational::BigRational::from_integer(0.into()),
        );
        Some(RepMatrix::from_eis(&m).scale(&third))
    }

    /// Pairs (α, β) of roots where 9ρ′([Z_α, Z_β]) ≠ [3ρ′(Z_α), 3ρ′(Z_β)].
    pub fn rho_prime_failures(&self) -> Vec<(usize, usize)> {
        let reps: Vec<EisMat9> = (0..NUM_ROOTS)
            .map(|r| self.rho_prime3_eis(&self.z_eis(r, 0)).expect("Z is θ-fixed"))
            .collect();
        let mut fails: Vec<(usize, usize)> = (0..NUM_ROOTS)
            .into_par_iter()
            .flat_map_iter(|a| {
                let za = self.z_eis(a, 0);
                let reps = &reps;
                (0..NUM_ROOTS).filter_map(move |b| {
                    let zb = self.z_eis(b, 0);
                    let br = self.bracket_eis(&za, &zb);
                    let lhs = match self.rho_prime3_eis(&br) {
                        Some(m) => heis::eis_mat_scale(&m, Eis::int(3)),
                        None => return Some((a, b)),
                    };
                    let p = heis::eis_mat_mul(&reps[a], &reps[b]);
                    let q = heis::eis_mat_mul(&reps[b], &reps[a]);
                    let mut rhs = p;
                    for i in 0..9 {
                        for j in 0..9 {
                            rhs[i][j] -= q[i][j];
                        }
                    }
                    (lhs != rhs).then_some((a, b))
                })
            })
            .collect();
        fails.sort_unstable();
        fails
    }

    /// Rank of the 80 matrices ρ′(Z) over ℚ(ω) and whether all are traceless.
    pub fn rho_prime_image(&self) -> (usize, bool) {
        let mut ech = Echelon::new();
        let mut traceless = true;
        for &r in &self.ell.orbit_reps {
            let m = self.rho_prime3_eis(&self.z_eis(r, 0)).unwrap();
            traceless &= heis::eis_mat_trace(&m).is_zero();
            let v: SparseVec = (0..81)
                .filter(|&n| !m[n / 9][n % 9].is_zero())
                .map(|n| (n, m[n / 9][n % 9].to_cyc()))
                .collect();
            ech.insert(v);
        }
        (ech.rank(), traceless)
    }

    /// Pairs (α, β) where conjugating ρ′(Z_β) by ρ(π(s(α))) does not give
    /// ζ^{((1−w)α, β)} ρ′(Z_β).
    pub fn heis_action_mismatches(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..NUM_ROOTS)
            .into_par_iter()
            .flat_map_iter(|a| {
                let g = HeisElement { k: 0, cls: self.ell.root_class[a] };
                let rg = self.heis.svn_rep_eis(&g);
                let rg_inv = self.heis.svn_rep_eis(&self.heis.inv(&g));
                (0..NUM_ROOTS).filter_map(move |b| {
                    let zb = self.rho_prime3_eis(&self.z_eis(b, 0)).unwrap();
                    let conj = heis::eis_mat_mul(&heis::eis_mat_mul(&rg, &zb), &rg_inv);
                    let expected = self.lattice_pairing_exponent(a, b);
                    let pred = heis::eis_mat_scale(&zb, Eis::omega_pow(expected as i64));
                    (conj != pred).then_some((a, b))
                })
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// ((1 − w)α, β) mod 3 computed directly on lattice vectors.
    pub fn lattice_pairing_exponent(&self, a: usize, b: usize) -> u8 {
        let rs = &self.rs;
        let wa = self.ell.perm[a];
        (rs.pair(a, b) - rs.pair(wa, b)).rem_euclid(3) as u8
    }

    /// Killing form on basis pairs: tr(ad b_i ∘ ad b_j).
    pub fn killing_gram(&self) -> Vec<Vec<Eis>> {
        (0..DIM)
            .into_par_iter()
            .map(|i| {
                (0..DIM)
                    .map(|j| {
                        let mut t = Eis::ZERO;
                        for k in 0..DIM {
                            for &(m, c) in self.structure(j, k) {
                                for &(n, d) in self.structure(i, m) {
                                    if n == k {
                                        t += c * d;
                                    }
                                }
                            }
                        }
                        t
                    })
                    .collect()
            })
            .collect()
    }

    /// Rank over ℚ(ω) of a Gram matrix.
    pub fn gram_rank(gram: &[Vec<Eis>]) -> usize {
        let rows: Vec<SparseVec> = gram
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (j, c.to_cyc())).collect())
            .collect();
        linalg::rank(&rows)
    }

    /// Basis pairs (i, j) with K(θb_i, θb_j) ≠ K(b_i, b_j).
    pub fn killing_theta_failures(&self, gram: &[Vec<Eis>]) -> usize {
        let eval = |x: &EisVec, y: &EisVec| {
            let mut t = Eis::ZERO;
            for &(i, a) in x {
                for &(j, b) in y {
                    t += a * b * gram[i][j];
                }
            }
            t
        };
        (0..DIM)
            .into_par_iter()
            .map(|i| {
                let ti = self.theta_basis(i);
                (0..DIM).filter(|&j| eval(&ti, &self.theta_basis(j)) != gram[i][j]).count()
            })
            .sum()
    }

    /// Count of (λ, pair) where X_α̃ ↦ ⟨λ, ᾱ⟩X_α̃ fails to preserve the
    /// bracket, over all 80 nonzero classes λ.
    pub fn twist_automorphism_failures(&self) -> usize {
        let classes: Vec<_> = crate::rootsys::CoinvariantClass::all()
            .into_iter()
            .filter(|c| !c.is_zero())
            .collect();
        classes
            .par_iter()
            .map(|l| {
                let wt = |i: usize| -> i64 {
                    if i < RANK {
                        0
                    } else {
                        self.heis.pairing(l, &self.ell.root_class[i - RANK]) as i64
                    }
                };
                let mut bad = 0;
                for i in 0..DIM {
                    for j in 0..DIM {
                        for &(k, _) in self.structure(i, j) {
                            if (wt(i) + wt(j) - wt(k)).rem_euclid(3) != 0 {
                                bad += 1;
                            }
                        }
                    }
                }
                bad
            })
            .sum()
    }

    /// Canonical text dump: one line `i j k a b` per nonzero coefficient
    /// a + bω of b_k in [b_i, b_j], sorted.
    pub fn structure_dump(&self) -> String {
        let mut s = String::new();
        for i in 0..DIM {
            for j in 0..DIM {
                for &(k, c) in self.structure(i, j) {
                    let _ = writeln!(s, "{i} {j} {k} {} {}", c.a, c.b);
                }
            }
        }
        s
    }

    pub fn structure_digest(&self) -> String {
        hex::encode(Sha256::digest(self.structure_dump().as_bytes()))
    }

    /// ad(x) as sparse rows (row n = coefficient of b_n in [x, b_col]),
    /// restricted to the given source columns.
    pub fn ad_rows(&self, x: &EisVec, cols: &[usize]) -> Vec<SparseVec> {
        let mut rows: Vec<SparseVec> = vec![SparseVec::new(); DIM];
        for (ci, &c) in cols.iter().enumerate() {
            for (n, v) in self.bracket_eis(x, &vec![(c, Eis::ONE)]) {
                rows[n].insert(ci, v.to_cyc());
            }
        }
        rows.into_iter().filter(|r| !r.is_empty()).collect()
    }
}

/// Bases of the three θ_h-eigenspaces, ℤ[ω] coordinates.
#[derive(Clone, Debug)]
pub struct GradedDecomposition {
    pub parts: [Vec<EisVec>; 3],
}

impl GradedDecomposition {
    pub fn dims(&self) -> [usize; 3] {
        [self.parts[0].len(), self.parts[1].len(), self.parts[2].len()]
    }

    /// Rank of all basis vectors together (248 means a direct sum).
    pub fn total_rank(&self) -> usize {
        let mut e = Echelon::new();
        for part in &self.parts {
            for v in part {
                e.insert(eis_to_sparse(v));
            }
        }
        e.rank()
    }
}

pub fn eis_to_sparse(v: &EisVec) -> SparseVec {
    v.iter().map(|&(k, c)| (k, c.to_cyc())).collect()
}

pub fn eis_to_lie(v: &EisVec) -> LieElement {
    LieElement::from_sparse(&eis_to_sparse(v))
}

pub fn lie_to_eis(x: &LieElement) -> Option<EisVec> {
    x.to_sparse().iter().map(|(k, c)| c.to_eis().map(|e| (*k, e))).collect()
}

/// Multiply by the lcm of all denominators to land in ℤ[ω].
fn clear_denominators(v: &SparseVec) -> EisVec {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    let mut l = num_bigint::BigInt::from(1);
    for c in v.values() {
        l = l.lcm(c.a.denom()).lcm(c.b.denom());
    }
    let lq = num_rational::BigRational::from_integer(l);
    v.iter()
        .map(|(k, c)| {
            let a = (&c.a * &lq).to_integer().to_i64().unwrap();
            let b = (&c.b * &lq).to_integer().to_i64().unwrap();
            (*k, Eis::new(a, b))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn lie() -> &'static GradedLie {
        static L: OnceLock<GradedLie> = OnceLock::new();
        L.get_or_init(GradedLie::build)
    }

    #[test]
    fn cartan_action() {
        let g = lie();
        for k in 0..RANK {
            let a = g.rs.s0[k];
            let br = g.bracket(&LieElement::coroot(k), &LieElement::root_vector(a));
            assert_eq!(br, LieElement::root_vector(a).scale(&Cyc::from_ints(2, 0)));
        }
    }

    #[test]
    fn opposite_roots_give_coroot() {
        let g = lie();
        for r in [0usize, 100, 200] {
            let s = g.rs.neg_index(r);
            let br = g.bracket(&LieElement::root_vector(r), &LieElement::root_vector(s));
            let z = Eis::omega_pow(g.cocycle(r, s));
            let mut expect = LieElement::zero();
            for (k, &a) in g.rs.root_coords(r).iter().enumerate() {
                if a != 0 {
                    expect.cartan.insert(k, (-(z.scale(a))).to_cyc());
                }
            }
            assert_eq!(br, expect);
        }
    }

    #[test]
    fn orthogonal_roots_commute() {
        let g = lie();
        let mut seen = 0;
        for r in 0..NUM_ROOTS {
            for s in 0..NUM_ROOTS {
                if g.rs.pair(r, s) == 0 {
                    assert!(g.structure(RANK + r, RANK + s).is_empty());
                    seen += 1;
                }
            }
        }
        assert_eq!(seen, 240 * 126);
    }

    #[test]
    fn zero_sum_triple_residual() {
        let g = lie();
        // pick α, β with α+β a root and γ = −(α+β)
        let (a, b) = (0..NUM_ROOTS)
            .flat_map(|a| (0..NUM_ROOTS).map(move |b| (a, b)))
            .find(|&(a, b)| g.rs.sum_index(a, b).is_some())
            .unwrap();
        let c = g.rs.neg_index(g.rs.sum_index(a, b).unwrap());
        let (x, y, z) = (
            LieElement::root_vector(a),
            LieElement::root_vector(b),
            LieElement::root_vector(c),
        );
        let r = g
            .bracket(&x, &g.bracket(&y, &z))
            .add(&g.bracket(&y, &g.bracket(&z, &x)))
            .add(&g.bracket(&z, &g.bracket(&x, &y)));
        assert!(r.is_zero());
    }

    #[test]
    fn z_elements() {
        let g = lie();
        let rs = &g.rs;
        let mut ech = Echelon::new();
        for r in 0..NUM_ROOTS {
            let t = TildeRoot::section(rs.root(r));
            let z = g.z_element(&t);
            assert_eq!(g.theta_h(1, &z), z);
            let wt = TildeRoot::section(rs.root(g.ell.perm[r]));
            assert_eq!(g.z_element(&wt), z);
            assert_eq!(g.z_element(&t.twist(1)), z.scale(&Cyc::omega()));
            ech.insert(z.to_sparse());
        }
        assert_eq!(ech.rank(), 80);
    }

    #[test]
    fn rho_prime_traceless_and_scalar() {
        let g = lie();
        let z = g.z_element(&TildeRoot::section(g.rs.root(5)));
        let m = g.rho_prime(&z).unwrap();
        assert!(m.trace().is_zero());
        assert!(g.rho_prime(&LieElement::coroot(0)).is_none());
    }

    #[test]
    fn heis_action_diagonal() {
        let g = lie();
        for a in 0..NUM_ROOTS {
            assert_eq!(g.lattice_pairing_exponent(a, a), 0);
        }
        let w = crate::rootsys::LatticeVector::weight;
        let a = g.rs.index_of(&w(1, 2, 3)).unwrap();
        let b = g.rs.index_of(&w(4, 5, 6)).unwrap();
        let e1 = g.lattice_pairing_exponent(a, b);
        let e2 = g.lattice_pairing_exponent(b, a);
        assert_eq!((e1 + e2) % 3, 0);
        assert_eq!(e1, g.ell.root_pairing(a, b));
    }

    #[test]
    fn jacobi_detects_sign_error() {
        let mut g = lie().clone();
        let (a, b) = (0..NUM_ROOTS)
            .flat_map(|a| (0..NUM_ROOTS).map(move |b| (a, b)))
            .find(|&(a, b)| g.rs.sum_index(a, b).is_some())
            .unwrap();
        g.corrupt(RANK + a, RANK + b);
        let rep = g.verify_jacobi();
        assert!(!rep.violations.is_empty());
    }

    #[test]
    fn killing_form() {
        let g = lie();
        let k = g.killing_gram();
        assert_eq!(GradedLie::gram_rank(&k), DIM);
        assert_eq!(g.killing_theta_failures(&k), 0);
        for row in &k {
            for c in row {
                assert!(c.as_int_times_omega().is_some());
            }
        }
        for i in 0..RANK {
            for j in 0..RANK {
                assert_eq!(k[i][j], Eis::int(60 * g.rs.cartan[i][j]));
            }
        }
        for i in 0..DIM {
            for j in 0..DIM {
                assert_eq!(k[i][j], k[j][i]);
            }
        }
    }
}
