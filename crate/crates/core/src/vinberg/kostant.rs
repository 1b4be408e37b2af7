//! The normal sl₂-triple through E = Σ_{S_H} X_α, computed in two
//! realizations: the Heisenberg-built algebra with its principal ℤ/3-grading
//! and the sl₉ ⊕ ∧³ ⊕ ∧⁶ model.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::wedge::{WElem, WedgeModel, SL};
use super::{fmt_q, s_h, VinbergError, Q};
use crate::cyclo::{Cyc, Eis};
use crate::gradedlie::{GradedLie, LieElement, DIM, RANK};
use crate::linalg::{self, Solution, SparseVec};

/// A 248-dimensional algebra given by its basis brackets and a ℤ/3-grading.
pub trait Realization {
    fn name(&self) -> &'static str;
    fn grade(&self, n: usize) -> u8;
    /// [x, b_n].
    fn ad_basis(&self, x: &SparseVec, n: usize) -> SparseVec;
    /// E = Σ of the eight simple root vectors in degree 1.
    fn principal_nilpotent(&self) -> SparseVec;

    fn bracket(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (n, c) in y {
            linalg::axpy(&mut out, c, &self.ad_basis(x, *n));
        }
        out
    }

    fn degree(&self, d: u8) -> Vec<usize> {
        (0..DIM).filter(|&n| self.grade(n) == d).collect()
    }
}

/// Realization backed by the constructed algebra. Root vectors X_α sit in
/// degree α(x) mod 3, coroots in degree 0.
pub struct HeisRealization<'a> {
    pub lie: &'a GradedLie,
}

impl Realization for HeisRealization<'_> {
    fn name(&self) -> &'static str {
        "heisenberg"
    }

    fn grade(&self, n: usize) -> u8 {
        if n < RANK {
            0
        } else {
            self.lie.rs.root(n - RANK).x_value().rem_euclid(3) as u8
        }
    }

    fn ad_basis(&self, x: &SparseVec, n: usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, a) in x {
            for &(k, c) in self.lie.structure(*i, n) {
                let t = a.mul_ref(&c.to_cyc());
                *out.entry(k).or_insert_with(Cyc::zero) += &t;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn principal_nilpotent(&self) -> SparseVec {
        self.lie.rs.s0.iter().map(|&r| (RANK + r, Cyc::one())).collect()
    }
}

/// Realization backed by the ∧³ model over ℚ.
pub struct WedgeRealization<'a> {
    pub model: &'a WedgeModel,
}

fn to_welem(x: &SparseVec) -> WElem {
    let mut c = vec![Q::zero(); DIM];
    for (n, v) in x {
        assert!(v.b.is_zero(), "wedge model is defined over Q");
        c[*n] = v.a.clone();
    }
    WElem::from_coords(&c)
}

fn from_welem(e: &WElem) -> SparseVec {
    e.coords()
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(n, c)| (n, Cyc::from_rational(c)))
        .collect()
}

impl Realization for WedgeRealization<'_> {
    fn name(&self) -> &'static str {
        "wedge"
    }

    fn grade(&self, n: usize) -> u8 {
        if n < SL {
            0
        } else if n < SL + 84 {
            1
        } else {
            2
        }
    }

    fn ad_basis(&self, x: &SparseVec, n: usize) -> SparseVec {
        from_welem(&self.model.bracket(&to_welem(x), &WElem::basis(n)))
    }

    fn principal_nilpotent(&self) -> SparseVec {
        s_h().iter().map(|a| (SL + a.index(), Cyc::one())).collect()
    }
}

/// ad(x) restricted to `cols`, as rows indexed by output coordinate.
fn ad_rows<R: Realization + ?Sized>(r: &R, x: &SparseVec, cols: &[usize]) -> Vec<SparseVec> {
    let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for (ci, &c) in cols.iter().enumerate() {
        for (n, v) in r.ad_basis(x, c) {
            rows.entry(n).or_default().insert(ci, v);
        }
    }
    rows.into_values().collect()
}

fn expand(sol: &SparseVec, cols: &[usize]) -> SparseVec {
    sol.iter().map(|(i, c)| (cols[*i], c.clone())).collect()
}

fn sub(a: &SparseVec, b: &SparseVec) -> SparseVec {
    let mut out = a.clone();
    linalg::axpy(&mut out, &(-Cyc::one()), b);
    out.retain(|_, c| !c.is_zero());
    out
}

fn scaled(a: &SparseVec, k: i64) -> SparseVec {
    let mut out = linalg::scale(a, &Cyc::from_ints(k, 0));
    out.retain(|_, c| !c.is_zero());
    out
}

/// E, X, F as coordinate vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct TripleCoords {
    pub e: SparseVec,
    pub x: SparseVec,
    pub f: SparseVec,
}

/// Solve [X, E] = 2E for X ∈ 𝔥(0), then [E, F] = X together with
/// [X, F] = −2F for F ∈ 𝔥(2). Both solutions must be unique.
pub fn solve_triple<R: Realization + ?Sized>(r: &R) -> Result<TripleCoords, VinbergError> {
    let e = r.principal_nilpotent();
    let g0 = r.degree(0);
    let g2 = r.degree(2);

    // Σ x_c [b_c, E] = 2E, i.e. −Σ x_c [E, b_c] = 2E
    let mut by_out: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for (c_idx, &c) in g0.iter().enumerate() {
        for (n, v) in r.ad_basis(&e, c) {
            by_out.entry(n).or_default().insert(c_idx, -v);
        }
    }
    let targets: Vec<usize> = by_out.keys().copied().chain(e.keys().copied()).collect();
    let mut eq_rows = Vec::new();
    let mut rhs = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for n in targets {
        if !seen.insert(n) {
            continue;
        }
        eq_rows.push(by_out.get(&n).cloned().unwrap_or_default());
        rhs.push(e.get(&n).map(|c| c.clone() + c.clone()).unwrap_or_else(Cyc::zero));
    }
    let x = match linalg::solve(&eq_rows, &rhs, g0.len()) {
        Solution::Unique(s) => expand(&s, &g0),
        Solution::None => return Err(VinbergError::NoSolution("[X, E] = 2E")),
        Solution::Many(_, d) => return Err(VinbergError::NotUnique("[X, E] = 2E", d)),
    };

    // [E, F] = X and [X, F] + 2F = 0 over F ∈ 𝔥(2)
    let mut a: BTreeMap<usize, SparseVec> = BTreeMap::new();
    let mut b: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for (ci, &c) in g2.iter().enumerate() {
        for (n, v) in r.ad_basis(&e, c) {
            a.entry(n).or_default().insert(ci, v);
        }
        let mut xf = r.ad_basis(&x, c);
        *xf.entry(c).or_insert_with(Cyc::zero) += &Cyc::from_ints(2, 0);
        for (n, v) in xf {
            if !v.is_zero() {
                b.entry(n).or_default().insert(ci, v);
            }
        }
    }
    let mut eq_rows = Vec::new();
    let mut rhs = Vec::new();
    let keys: std::collections::BTreeSet<usize> = a.keys().chain(x.keys()).copied().collect();
    for n in keys {
        eq_rows.push(a.get(&n).cloned().unwrap_or_default());
        rhs.push(x.get(&n).cloned().unwrap_or_else(Cyc::zero));
    }
    for row in b.into_values() {
        eq_rows.push(row);
        rhs.push(Cyc::zero());
    }
    let f = match linalg::solve(&eq_rows, &rhs, g2.len()) {
        Solution::Unique(s) => expand(&s, &g2),
        Solution::None => return Err(VinbergError::NoSolution("[E, F] = X, [X, F] = -2F")),
        Solution::Many(_, d) => return Err(VinbergError::NotUnique("[E, F] = X, [X, F] = -2F", d)),
    };
    Ok(TripleCoords { e, x, f })
}

/// Invariants of the triple that do not depend on the realization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KostantReport {
    pub realization: &'static str,
    pub relations_exact: bool,
    pub x_is_diagonal: bool,
    pub ker_ad_e: usize,
    pub zf_in_degree1: usize,
    /// ad X eigenvalues on 𝔷(F) ∩ 𝔥(1), increasing.
    pub eigenvalues: Vec<String>,
    /// 1 − λ/2 for those eigenvalues.
    pub degrees: Vec<i64>,
    /// dim 𝔷_{𝔥(0)}(E + Σ tᵢzᵢ) at sampled integer points.
    pub slice_centralizers: Vec<usize>,
    pub pass: bool,
}

pub fn analyze<R: Realization + ?Sized>(r: &R, t: &TripleCoords, samples: usize, seed: u64) -> KostantReport {
    let xe = r.bracket(&t.x, &t.e);
    let xf = r.bracket(&t.x, &t.f);
    let ef = r.bracket(&t.e, &t.f);
    let relations_exact = sub(&xe, &scaled(&t.e, 2)).is_empty()
        && sub(&xf, &scaled(&t.f, -2)).is_empty()
        && sub(&ef, &t.x).is_empty();

    let all: Vec<usize> = (0..DIM).collect();
    let ker_ad_e = DIM - linalg::rank(&ad_rows(r, &t.e, &all));

    let g1 = r.degree(1);
    let g0 = r.degree(0);
    let zf = linalg::kernel(&ad_rows(r, &t.f, &g1), g1.len());

    // ad X on degree-1 basis vectors: diagonal with rational entries
    let mut x_is_diagonal = true;
    let mut eig: BTreeMap<Q, Vec<usize>> = BTreeMap::new();
    for (ci, &c) in g1.iter().enumerate() {
        let v = r.ad_basis(&t.x, c);
        let lam = v.get(&c).cloned().unwrap_or_else(Cyc::zero);
        if v.len() > usize::from(!lam.is_zero()) || !lam.b.is_zero() {
            x_is_diagonal = false;
        }
        eig.entry(lam.a.clone()).or_default().push(ci);
    }
    let mut eigenvalues = Vec::new();
    for (lam, block) in &eig {
        let cols: Vec<usize> = block.iter().map(|&i| g1[i]).collect();
        let k = linalg::kernel(&ad_rows(r, &t.f, &cols), cols.len()).len();
        for _ in 0..k {
            eigenvalues.push(lam.clone());
        }
    }
    let degrees: Vec<i64> = eigenvalues
        .iter()
        .map(|l| {
            let d: Q = Q::from_integer(1.into()) - l / Q::from_integer(2.into());
            if d.is_integer() {
                i64::try_from(d.to_integer()).unwrap_or(i64::MIN)
            } else {
                i64::MIN
            }
        })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut slice_centralizers = Vec::new();
    for _ in 0..samples {
        let mut v = t.e.clone();
        for z in &zf {
            let c = Cyc::from_ints(rng.gen_range(1..=20) * if rng.gen_bool(0.5) { 1 } else { -1 }, 0);
            linalg::axpy(&mut v, &c, &expand(z, &g1));
        }
        let rows = ad_rows(r, &v, &g0);
        slice_centralizers.push(linalg::kernel(&rows, g0.len()).len());
    }

    let pass = relations_exact
        && x_is_diagonal
        && ker_ad_e == 8
        && zf.len() == 4
        && eigenvalues.len() == 4
        && slice_centralizers.iter().all(|&d| d == 0);
    KostantReport {
        realization: r.name(),
        relations_exact,
        x_is_diagonal,
        ker_ad_e,
        zf_in_degree1: zf.len(),
        eigenvalues: eigenvalues.iter().map(fmt_q).collect(),
        degrees,
        slice_centralizers,
        pass,
    }
}

/// The normal sl₂-triple E ∈ 𝔥(1), X ∈ 𝔥(0), F ∈ 𝔥(2).
#[derive(Clone, Debug, PartialEq)]
pub struct SL2Triple {
    pub e: LieElement,
    pub x: LieElement,
    pub f: LieElement,
}

pub fn kostant_triple(lie: &GradedLie) -> Result<SL2Triple, VinbergError> {
    let t = solve_triple(&HeisRealization { lie })?;
    Ok(SL2Triple {
        e: LieElement::from_sparse(&t.e),
        x: LieElement::from_sparse(&t.x),
        f: LieElement::from_sparse(&t.f),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KostantComparison {
    pub heisenberg: KostantReport,
    pub wedge: KostantReport,
    /// X in the wedge model equals diag(2x) for the grading element x.
    pub wedge_x_is_2x: bool,
    pub agree: bool,
    pub degrees_sum: i64,
    pub pass: bool,
}

/// Both realizations, compared on centralizer dimensions and degrees.
pub fn compare_realizations(lie: &GradedLie, model: &WedgeModel, samples: usize, seed: u64) -> Result<KostantComparison, VinbergError> {
    let hr = HeisRealization { lie };
    let wr = WedgeRealization { model };
    let th = solve_triple(&hr)?;
    let tw = solve_triple(&wr)?;
    let heisenberg = analyze(&hr, &th, samples, seed);
    let wedge = analyze(&wr, &tw, samples, seed);

    // x = 3 diag(0,2,…,9) − 44/3
    const D: [i64; 9] = [0, 2, 3, 4, 5, 6, 7, 8, 9];
    let two_x: [Q; 9] = std::array::from_fn(|i| Q::new((18 * D[i] - 88).into(), 3.into()));
    let expect = from_welem(&WedgeModel::diag(&two_x));
    let wedge_x_is_2x = sub(&tw.x, &expect).is_empty();

    let agree = heisenberg.ker_ad_e == wedge.ker_ad_e
        && heisenberg.zf_in_degree1 == wedge.zf_in_degree1
        && heisenberg.eigenvalues == wedge.eigenvalues
        && heisenberg.degrees == wedge.degrees;
    let degrees_sum = heisenberg.degrees.iter().filter(|d| d.is_positive()).sum();
    let pass = heisenberg.pass && wedge.pass && agree && wedge_x_is_2x && degrees_sum == 84;
    Ok(KostantComparison { heisenberg, wedge, wedge_x_is_2x, agree, degrees_sum, pass })
}

/// Convenience for examples: coefficients of X on the coroot basis.
pub fn x_on_coroots(t: &SL2Triple) -> Vec<(usize, Eis)> {
    t.x.cartan.iter().filter_map(|(k, c)| c.to_eis().map(|e| (*k, e))).collect()
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
    fn heisenberg_triple() {
        let hr = HeisRealization { lie: lie() };
        assert_eq!(hr.degree(0).len(), 80);
        assert_eq!(hr.degree(1).len(), 84);
        let t = solve_triple(&hr).unwrap();
        let r = analyze(&hr, &t, 2, 0);
        assert!(r.pass, "{r:?}");
        assert_eq!(r.eigenvalues, vec!["-58", "-46", "-34", "-22"]);
        assert_eq!(r.degrees, vec![30, 24, 18, 12]);
        // X lies in the Cartan subalgebra
        let tr = kostant_triple(lie()).unwrap();
        assert!(tr.x.rootpart.is_empty());
        assert_eq!(x_on_coroots(&tr).len(), 8);
    }

    #[test]
    fn realizations_agree() {
        let model = WedgeModel::new();
        let c = compare_realizations(lie(), &model, 1, 3).unwrap();
        assert!(c.pass, "{c:?}");
        assert_eq!(c.degrees_sum, 84);
    }

    #[test]
    fn wrong_e_is_not_regular() {
        // dropping one simple root vector gives a non-regular nilpotent
        let hr = HeisRealization { lie: lie() };
        let mut e = hr.principal_nilpotent();
        let first = *e.keys().next().unwrap();
        e.remove(&first);
        let all: Vec<usize> = (0..DIM).collect();
        assert!(DIM - linalg::rank(&ad_rows(&hr, &e, &all)) > 8);
    }
}
