//! The E8 root lattice in the SL₉-torus model, its 240 roots, an elliptic
//! Weyl element of order 3, the coinvariant space Λ/(w−1)Λ ≅ 𝔽₃⁴ and the
//! μ₃-valued symplectic pairing on it.
//!
//! Lattice vectors are integer 9-tuples modulo the all-ones vector with
//! coordinate sum divisible by 3. The pairing is
//! `(u, v) = Σ uᵢvᵢ − (Σuᵢ)(Σvᵢ)/9`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::snf::{self, IntMat, Snf};

/// The ordered root basis S₀ = {(267),(258),(348),(169),(357),(249),(178),(456)}.
pub const S0: [[u8; 3]; 8] = [
    [2, 6, 7],
    [2, 5, 8],
    [3, 4, 8],
    [1, 6, 9],
    [3, 5, 7],
    [2, 4, 9],
    [1, 7, 8],
    [4, 5, 6],
];

pub const NUM_ROOTS: usize = 240;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootSysError {
    #[error("coordinate sum {0} is not divisible by 3")]
    BadCoordinateSum(i64),
    #[error("elliptic element check failed: {0}")]
    EllipticCheck(String),
}

/// Element of the E8 lattice, stored as the canonical representative whose
/// coordinate sum lies in {0, 3, 6}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeVector {
    coords: [i64; 9],
}

impl LatticeVector {
    pub fn new(raw: [i64; 9]) -> Result<Self, RootSysError> {
        let s: i64 = raw.iter().sum();
        if s.rem_euclid(3) != 0 {
            return Err(RootSysError::BadCoordinateSum(s));
        }
        let k = s.div_euclid(9);
        let mut coords = raw;
        for c in coords.iter_mut() {
            *c -= k;
        }
        Ok(LatticeVector { coords })
    }

    fn from_raw(raw: [i64; 9]) -> Self {
        Self::new(raw).expect("sum divisible by 3")
    }

    pub fn zero() -> Self {
        LatticeVector { coords: [0; 9] }
    }

    /// eᵢ − eⱼ (1-based indices).
    pub fn root_diff(i: usize, j: usize) -> Self {
        let mut c = [0i64; 9];
        c[i - 1] += 1;
        c[j - 1] -= 1;
        Self::from_raw(c)
    }

    /// The weight (ijk) = eᵢ + eⱼ + eₖ (1-based, distinct).
    pub fn weight(i: usize, j: usize, k: usize) -> Self {
        let mut c = [0i64; 9];
        c[i - 1] += 1;
        c[j - 1] += 1;
        c[k - 1] += 1;
        Self::from_raw(c)
    }

    pub fn coords(&self) -> [i64; 9] {
        self.coords
    }

    pub fn coord_sum(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn norm(&self) -> i64 {
        pairing(self, self)
    }

    pub fn scaled(&self, k: i64) -> Self {
        let mut c = self.coords;
        for x in c.iter_mut() {
            *x *= k;
        }
        Self::from_raw(c)
    }

    /// Value α(x) for x = 3·diag(0,2,3,4,5,6,7,8,9) − 44/3·1₉.
    pub fn x_value(&self) -> i64 {
        const D: [i64; 9] = [0, 2, 3, 4, 5, 6, 7, 8, 9];
        let lin: i64 = self.coords.iter().zip(D).map(|(v, d)| v * d).sum();
        let s = self.coord_sum();
        debug_assert_eq!((44 * s) % 3, 0);
        3 * lin - 44 * s / 3
    }
}

impl std::ops::Add for LatticeVector {
    type Output = LatticeVector;
    fn add(self, o: LatticeVector) -> LatticeVector {
        let mut c = self.coords;
        for (x, y) in c.iter_mut().zip(o.coords) {
            *x += y;
        }
        LatticeVector::from_raw(c)
    }
}

impl std::ops::Sub for LatticeVector {
    type Output = LatticeVector;
    fn sub(self, o: LatticeVector) -> LatticeVector {
        self + (-o)
    }
}

impl std::ops::Neg for LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        self.scaled(-1)
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coords;
        let ones: Vec<usize> = (0..9).filter(|&i| c[i] == 1).collect();
        match self.coord_sum() {
            3 if ones.len() == 3 && c.iter().all(|&x| x == 0 || x == 1) => {
                write!(f, "({}{}{})", ones[0] + 1, ones[1] + 1, ones[2] + 1)
            }
            6 if ones.len() == 6 && c.iter().all(|&x| x == 0 || x == 1) => {
                let zs: Vec<usize> = (0..9).filter(|&i| c[i] == 0).collect();
                write!(f, "-({}{}{})", zs[0] + 1, zs[1] + 1, zs[2] + 1)
            }
            0 if ones.len() == 1 && c.iter().filter(|&&x| x == -1).count() == 1 && c.iter().all(|&x| x.abs() <= 1) => {
                let m = (0..9).find(|&i| c[i] == -1).unwrap();
                write!(f, "e{}-e{}", ones[0] + 1, m + 1)
            }
            _ => write!(f, "{:?}", c),
        }
    }
}

/// The bilinear form Σuᵢvᵢ − (Σuᵢ)(Σvᵢ)/9.
pub fn pairing(u: &LatticeVector, v: &LatticeVector) -> i64 {
    let dot: i64 = u.coords.iter().zip(v.coords).map(|(a, b)| a * b).sum();
    let p = u.coord_sum() * v.coord_sum();
    debug_assert_eq!(p % 9, 0);
    dot - p / 9
}

/// The 240 roots in a fixed order: eᵢ−eⱼ (i≠j, lexicographic), then the 84
/// weights (ijk), then their negatives, with lookup tables.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub roots: Vec<LatticeVector>,
    index: HashMap<LatticeVector, usize>,
    /// pairing table, row-major 240×240
    gram: Vec<i8>,
    /// index of α+β when it is a root, else u8::MAX
    sums: Vec<u8>,
    /// root indices of S₀ in listed order
    pub s0: [usize; 8],
    /// Cartan matrix of S₀
    pub cartan: IntMat,
    cartan_inv: IntMat,
    /// S₀-coordinates of each root
    basis_coords: Vec<[i64; 8]>,
}

/// Build the root system and its lookup tables.
pub fn build_root_system() -> RootSystem {
    let mut roots = Vec::with_capacity(NUM_ROOTS);
    for i in 1..=9 {
        for j in 1..=9 {
            if i != j {
                roots.push(LatticeVector::root_diff(i, j));
            }
        }
    }
    let mut weights = Vec::with_capacity(84);
    for i in 1..=9 {
        for j in i + 1..=9 {
            for k in j + 1..=9 {
                weights.push(LatticeVector::weight(i, j, k));
            }
        }
    }
    roots.extend(weights.iter().copied());
    roots.extend(weights.iter().map(|w| -*w));
    assert_eq!(roots.len(), NUM_ROOTS);

    let index: HashMap<LatticeVector, usize> =
        roots.iter().enumerate().map(|(i, r)| (*r, i)).collect();
    let mut gram = vec![0i8; NUM_ROOTS * NUM_ROOTS];
    let mut sums = vec![u8::MAX; NUM_ROOTS * NUM_ROOTS];
    for (i, a) in roots.iter().enumerate() {
        for (j, b) in roots.iter().enumerate() {
            gram[i * NUM_ROOTS + j] = pairing(a, b) as i8;
            if let Some(&k) = index.get(&(*a + *b)) {
                sums[i * NUM_ROOTS + j] = k as u8;
            }
        }
    }
    let s0 = S0.map(|[i, j, k]| index[&LatticeVector::weight(i as usize, j as usize, k as usize)]);
    let cartan: IntMat = s0
        .iter()
        .map(|&a| s0.iter().map(|&b| gram[a * NUM_ROOTS + b] as i64).collect())
        .collect();
    // The Cartan matrix is unimodular, so its Smith form is the identity and
    // its inverse is V·U.
    let snf_c = snf::smith(&cartan);
    assert_eq!(snf_c.diagonal(), vec![1; 8], "S0 Gram matrix must be unimodular");
    let cartan_inv = snf::mat_mul(&snf_c.v, &snf_c.u);

    let mut rs = RootSystem {
        roots,
        index,
        gram,
        sums,
        s0,
        cartan,
        cartan_inv,
        basis_coords: Vec::new(),
    };
    rs.basis_coords = rs.roots.iter().map(|r| rs.coords_of(r)).collect();
    rs
}

impl RootSystem {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn index_of(&self, v: &LatticeVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn is_root(&self, v: &LatticeVector) -> bool {
        self.index.contains_key(v)
    }

    pub fn root(&self, i: usize) -> LatticeVector {
        self.roots[i]
    }

    pub fn neg_index(&self, i: usize) -> usize {
        self.index[&(-self.roots[i])]
    }

    /// (α_i, α_j) from the table.
    pub fn pair(&self, i: usize, j: usize) -> i64 {
        self.gram[i * NUM_ROOTS + j] as i64
    }

    /// Index of α_i + α_j if that is a root.
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        let s = self.sums[i * NUM_ROOTS + j];
        (s != u8::MAX).then_some(s as usize)
    }

    /// Coordinates of a lattice vector in the S₀ basis.
    pub fn coords_of(&self, v: &LatticeVector) -> [i64; 8] {
        let p: Vec<i64> = self.s0.iter().map(|&b| pairing(v, &self.roots[b])).collect();
        let a = snf::mat_vec(&self.cartan_inv, &p);
        let mut out = [0i64; 8];
        out.copy_from_slice(&a);
        out
    }

    pub fn root_coords(&self, i: usize) -> [i64; 8] {
        self.basis_coords[i]
    }

    /// Σ aₖ βₖ for S₀-coordinates `a`.
    pub fn vector_of(&self, a: &[i64]) -> LatticeVector {
        let mut raw = [0i64; 9];
        for (k, &ak) in a.iter().enumerate() {
            let c = self.roots[self.s0[k]].coords();
            for t in 0..9 {
                raw[t] += ak * c[t];
            }
        }
        LatticeVector::new(raw).expect("integral combination of roots")
    }

    /// Reflection matrix of the k-th simple root in S₀-coordinates.
    pub fn simple_reflection(&self, k: usize) -> IntMat {
        let mut m = snf::identity(8);
        for j in 0..8 {
            m[k][j] -= self.cartan[k][j];
        }
        m
    }

    /// Coxeter element: product of the S₀ reflections in listed order.
    pub fn coxeter(&self) -> IntMat {
        (0..8).fold(snf::identity(8), |acc, k| snf::mat_mul(&acc, &self.simple_reflection(k)))
    }
}

/// Automorphism of Λ as an 8×8 integer matrix acting on S₀-coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylElement {
    pub matrix: IntMat,
}

impl WeylElement {
    pub fn apply_coords(&self, a: &[i64; 8]) -> [i64; 8] {
        let v = snf::mat_vec(&self.matrix, a);
        let mut out = [0i64; 8];
        out.copy_from_slice(&v);
        out
    }

    pub fn apply(&self, rs: &RootSystem, v: &LatticeVector) -> LatticeVector {
        rs.vector_of(&self.apply_coords(&rs.coords_of(v)))
    }

    pub fn preserves_pairing(&self, rs: &RootSystem) -> bool {
        let mt: IntMat = (0..8).map(|i| (0..8).map(|j| self.matrix[j][i]).collect()).collect();
        snf::mat_mul(&snf::mat_mul(&mt, &rs.cartan), &self.matrix) == rs.cartan
    }

    /// The induced permutation of root indices, if every root maps to a root.
    pub fn root_permutation(&self, rs: &RootSystem) -> Option<Vec<usize>> {
        let perm: Option<Vec<usize>> = (0..rs.len())
            .map(|i| rs.index_of(&rs.vector_of(&self.apply_coords(&rs.root_coords(i)))))
            .collect();
        let perm = perm?;
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if std::mem::replace(&mut seen[p], true) {
                return None;
            }
        }
        Some(perm)
    }
}

/// Class in Λ/(w−1)Λ ≅ 𝔽₃⁴, coordinates in the Smith-form basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoinvariantClass {
    pub vec: [u8; 4],
}

impl CoinvariantClass {
    pub const ZERO: CoinvariantClass = CoinvariantClass { vec: [0; 4] };

    pub fn new(v: [i64; 4]) -> Self {
        CoinvariantClass { vec: v.map(|x| x.rem_euclid(3) as u8) }
    }

    pub fn is_zero(&self) -> bool {
        self.vec == [0; 4]
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut v = [0i64; 4];
        for i in 0..4 {
            v[i] = self.vec[i] as i64 + o.vec[i] as i64;
        }
        Self::new(v)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.vec.map(|x| -(x as i64)))
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.vec.map(|x| x as i64 * k))
    }

    /// All 81 classes in lexicographic order of coordinates.
    pub fn all() -> Vec<Self> {
        (0..81)
            .map(|n| Self::new([n / 27, (n / 9) % 3, (n / 3) % 3, n % 3]))
            .collect()
    }
}

impl fmt::Display for CoinvariantClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}{}{}{}]", self.vec[0], self.vec[1], self.vec[2], self.vec[3])
    }
}

/// The chosen elliptic element with its Smith-form data, root orbits and
/// class labels.
#[derive(Clone, Debug)]
pub struct Elliptic {
    pub w: WeylElement,
    pub snf: Snf,
    /// w acting on root indices
    pub perm: Vec<usize>,
    /// coinvariant class of each root
    pub root_class: Vec<CoinvariantClass>,
    /// smallest root index in each ⟨w⟩-orbit, increasing
    pub orbit_reps: Vec<usize>,
    /// Gram matrix of the pairing exponent on the Smith basis classes
    pub gram: [[u8; 4]; 4],
}

/// w = c¹⁰ for the Coxeter element c over S₀, with its postconditions
/// checked: w³ = 1, Λ^w = 0, Smith form (1,1,1,1,3,3,3,3), pairing
/// preserved and roots permuted.
pub fn elliptic_order3(rs: &RootSystem) -> Result<Elliptic, RootSysError> {
    let c = rs.coxeter();
    let w = WeylElement { matrix: snf::mat_pow(&c, 10) };
    let err = |s: &str| Err(RootSysError::EllipticCheck(s.to_string()));
    if snf::mat_pow(&w.matrix, 3) != snf::identity(8) || w.matrix == snf::identity(8) {
        return err("w does not have order 3");
    }
    let wm1 = snf::mat_sub(&w.matrix, &snf::identity(8));
    if snf::rank_q(&wm1) != 8 {
        return err("w has nonzero fixed vectors");
    }
    let s = snf::smith(&wm1);
    if s.diagonal() != vec![1, 1, 1, 1, 3, 3, 3, 3] {
        return err("unexpected elementary divisors of w - 1");
    }
    if !w.preserves_pairing(rs) {
        return err("w does not preserve the pairing");
    }
    let Some(perm) = w.root_permutation(rs) else {
        return err("w does not permute the roots");
    };
    let mut e = Elliptic {
        w,
        snf: s,
        perm,
        root_class: Vec::new(),
        orbit_reps: Vec::new(),
        gram: [[0; 4]; 4],
    };
    e.root_class = (0..rs.len()).map(|i| e.project_coords(&rs.root_coords(i))).collect();
    e.orbit_reps = (0..rs.len())
        .filter(|&i| i <= e.perm[i] && i <= e.perm[e.perm[i]])
        .collect();
    let basis: Vec<CoinvariantClass> = (0..4)
        .map(|k| {
            let mut v = [0i64; 4];
            v[k] = 1;
            CoinvariantClass::new(v)
        })
        .collect();
    for i in 0..4 {
        for j in 0..4 {
            e.gram[i][j] = e.pairing_on_lifts(rs, &e.lift(&basis[i]), &e.lift(&basis[j])) as u8;
        }
    }
    Ok(e)
}

impl Elliptic {
    /// Class of a vector given in S₀-coordinates.
    pub fn project_coords(&self, a: &[i64; 8]) -> CoinvariantClass {
        let y = snf::mat_vec(&self.snf.u, a);
        CoinvariantClass::new([y[4], y[5], y[6], y[7]])
    }

    pub fn coinvariant_project(&self, rs: &RootSystem, v: &LatticeVector) -> CoinvariantClass {
        self.project_coords(&rs.coords_of(v))
    }

    /// A lattice lift of a class, in S₀-coordinates.
    pub fn lift(&self, c: &CoinvariantClass) -> [i64; 8] {
        let mut y = [0i64; 8];
        for k in 0..4 {
            y[4 + k] = c.vec[k] as i64;
        }
        let a = snf::mat_vec(&self.snf.u_inv, &y);
        let mut out = [0i64; 8];
        out.copy_from_slice(&a);
        out
    }

    /// ((1 − w)λ, μ) mod 3 for lifts given in S₀-coordinates.
    pub fn pairing_on_lifts(&self, rs: &RootSystem, l: &[i64; 8], m: &[i64; 8]) -> i64 {
        let wl = self.w.apply_coords(l);
        let diff: Vec<i64> = l.iter().zip(wl).map(|(a, b)| a - b).collect();
        let cm = snf::mat_vec(&rs.cartan, m);
        diff.iter().zip(cm).map(|(a, b)| a * b).sum::<i64>().rem_euclid(3)
    }

    /// Exponent k with ⟨λ, μ⟩ = ζᵏ.
    pub fn symplectic_pairing(&self, l: &CoinvariantClass, m: &CoinvariantClass) -> u8 {
        let mut s = 0i64;
        for i in 0..4 {
            for j in 0..4 {
                s += l.vec[i] as i64 * self.gram[i][j] as i64 * m.vec[j] as i64;
            }
        }
        s.rem_euclid(3) as u8
    }

    /// Pairing exponent between the classes of two roots.
    pub fn root_pairing(&self, i: usize, j: usize) -> u8 {
        self.symplectic_pairing(&self.root_class[i], &self.root_class[j])
    }

    pub fn orbit_of(&self, i: usize) -> [usize; 3] {
        [i, self.perm[i], self.perm[self.perm[i]]]
    }
}

/// Rank over 𝔽₃ of a small matrix.
pub fn rank_f3(m: &[[u8; 4]; 4]) -> usize {
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
    let mut rank = 0;
    for c in 0..4 {
        let Some(p) = (rank..4).find(|&i| a[i][c] % 3 != 0) else { continue };
        a.swap(rank, p);
        let inv = if a[rank][c].rem_euclid(3) == 1 { 1 } else { 2 };
        for x in a[rank].iter_mut() {
            *x = (*x * inv).rem_euclid(3);
        }
        for i in 0..4 {
            if i != rank {
                let f = a[i][c];
                for j in 0..4 {
                    a[i][j] = (a[i][j] - f * a[rank][j]).rem_euclid(3);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Root pairs where "α + β is a root" (tested on lattice vectors) disagrees
/// with (α, β) = −1.
pub fn sum_rule_failures(rs: &RootSystem) -> Vec<(usize, usize)> {
    let n = rs.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let sum_is_root = rs.is_root(&(rs.root(i) + rs.root(j)));
            if sum_is_root != (pairing(&rs.root(i), &rs.root(j)) == -1) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Number of pairs with α + β ∈ Φ, and those among them where
/// (−1)^{(α,wβ)} + (−1)^{(wα,β)} ≠ 0.
pub fn weyl_negative_exceptions(rs: &RootSystem, ell: &Elliptic) -> (usize, Vec<(usize, usize)>) {
    let n = rs.len();
    let mut checked = 0;
    let mut bad = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if !rs.is_root(&(rs.root(a) + rs.root(b))) {
                continue;
            }
            checked += 1;
            let wa = ell.w.apply(rs, &rs.root(a));
            let wb = ell.w.apply(rs, &rs.root(b));
            let sign = |k: i64| if k.rem_euclid(2) == 0 { 1 } else { -1 };
            if sign(pairing(&rs.root(a), &wb)) + sign(pairing(&wa, &rs.root(b))) != 0 {
                bad.push((a, b));
            }
        }
    }
    (checked, bad)
}

/// Versioned JSON of the roots in order and the matrix of w, used as the
/// on-disk cache image.
pub fn cache_text(rs: &RootSystem, ell: &Elliptic) -> String {
    #[derive(Serialize)]
    struct Image<'a> {
        format: &'a str,
        version: u32,
        roots: Vec<[i64; 9]>,
        s0: [usize; 8],
        w: &'a IntMat,
    }
    let img = Image {
        format: "e8g3-rootsys",
        version: 1,
        roots: rs.roots.iter().map(|r| r.coords()).collect(),
        s0: rs.s0,
        w: &ell.w.matrix,
    };
    let mut s = serde_json::to_string(&img).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (RootSystem, Elliptic) {
        let rs = build_root_system();
        let e = elliptic_order3(&rs).unwrap();
        (rs, e)
    }

    #[test]
    fn canonical_representative() {
        let v = LatticeVector::new([1, 1, 1, 1, 1, 1, 1, 1, 1]).unwrap();
        assert_eq!(v, LatticeVector::zero());
        let v = LatticeVector::new([-1, -1, -1, 0, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(v.coord_sum(), 6);
        assert!(LatticeVector::new([1, 0, 0, 0, 0, 0, 0, 0, 0]).is_err());
    }

    #[test]
    fn root_count_by_box_enumeration() {
        // Oracle: every root has a representative with entries in {-1,0,1}
        // and sum in {-3, 0, 3}; enumerate the whole box.
        let rs = build_root_system();
        let mut found = std::collections::HashSet::new();
        for n in 0..3i64.pow(9) {
            let mut c = [0i64; 9];
            let mut m = n;
            for x in c.iter_mut() {
                *x = m % 3 - 1;
                m /= 3;
            }
            if c.iter().sum::<i64>() % 3 != 0 {
                continue;
            }
            let v = LatticeVector::new(c).unwrap();
            if v.norm() == 2 {
                found.insert(v);
            }
        }
        assert_eq!(found.len(), 240);
        assert!(found.iter().all(|v| rs.is_root(v)));
        let by_sum = |s: i64| rs.roots.iter().filter(|r| r.coord_sum() == s).count();
        assert_eq!((by_sum(0), by_sum(3), by_sum(6)), (72, 84, 84));
    }

    #[test]
    fn pairing_examples() {
        let w = LatticeVector::weight;
        assert_eq!(pairing(&w(1, 2, 3), &w(4, 5, 6)), -1);
        assert_eq!(pairing(&w(1, 2, 3), &w(1, 4, 5)), 0);
        assert_eq!(pairing(&w(1, 2, 3), &w(1, 2, 4)), 1);
        assert_eq!(pairing(&w(1, 2, 3), &w(1, 2, 3)), 2);
        assert_eq!(pairing(&LatticeVector::root_diff(2, 1), &w(1, 3, 4)), -1);
        assert_eq!(LatticeVector::root_diff(1, 2).norm(), 2);
    }

    #[test]
    fn x_values() {
        let rs = build_root_system();
        for (i, r) in rs.roots.iter().enumerate() {
            let x = r.x_value();
            assert_ne!(x, 0);
            assert_eq!(x == 1, rs.s0.contains(&i), "{r}");
        }
        assert_eq!(LatticeVector::weight(7, 8, 9).x_value(), 28);
        assert_eq!(LatticeVector::weight(1, 2, 3).x_value(), -29);
    }

    #[test]
    fn coordinates_roundtrip() {
        let rs = build_root_system();
        for i in 0..rs.len() {
            assert_eq!(rs.vector_of(&rs.root_coords(i)), rs.root(i));
        }
    }

    #[test]
    fn elliptic_element() {
        let (rs, e) = setup();
        assert_eq!(e.orbit_reps.len(), 80);
        let mut classes: Vec<_> = e.orbit_reps.iter().map(|&i| e.root_class[i]).collect();
        assert!(classes.iter().all(|c| !c.is_zero()));
        classes.sort();
        classes.dedup();
        assert_eq!(classes.len(), 80);
        for i in 0..rs.len() {
            let [a, b, c] = e.orbit_of(i);
            assert_eq!(rs.root(a) + rs.root(b) + rs.root(c), LatticeVector::zero());
            assert_eq!(e.root_class[a], e.root_class[b]);
        }
    }

    #[test]
    fn pairing_well_defined_on_lifts() {
        let (rs, e) = setup();
        let mut seed = 12345u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 7) as i64 - 3
        };
        for _ in 0..200 {
            let l: [i64; 8] = std::array::from_fn(|_| next());
            let m: [i64; 8] = std::array::from_fn(|_| next());
            let d: [i64; 8] = std::array::from_fn(|_| next());
            let wd = e.w.apply_coords(&d);
            let shift: [i64; 8] = std::array::from_fn(|k| l[k] + wd[k] - d[k]);
            assert_eq!(e.project_coords(&shift), e.project_coords(&l));
            let p1 = e.pairing_on_lifts(&rs, &l, &m);
            let p2 = e.pairing_on_lifts(&rs, &shift, &m);
            assert_eq!(p1, p2);
            let direct = e.symplectic_pairing(&e.project_coords(&l), &e.project_coords(&m));
            assert_eq!(p1 as u8, direct);
        }
    }

    #[test]
    fn gram_is_symplectic() {
        let (_, e) = setup();
        for i in 0..4 {
            assert_eq!(e.gram[i][i], 0);
            for j in 0..4 {
                assert_eq!((e.gram[i][j] + e.gram[j][i]) % 3, 0);
            }
        }
        assert_eq!(rank_f3(&e.gram), 4);
    }

    #[test]
    fn sum_rule_and_weyl_negative() {
        let (rs, e) = setup();
        assert!(sum_rule_failures(&rs).is_empty());
        let (checked, bad) = weyl_negative_exceptions(&rs, &e);
        // 56 partners β with (α, β) = −1 for each α
        assert_eq!(checked, 240 * 56);
        assert!(bad.is_empty());
    }

    #[test]
    fn weyl_negative_detects_identity() {
        // with w replaced by 1 both terms equal (−1)^{(α,β)} = −1
        let (rs, mut e) = setup();
        e.w.matrix = snf::identity(8);
        let (_, bad) = weyl_negative_exceptions(&rs, &e);
        assert_eq!(bad.len(), 240 * 56);
    }
}
