//! Genus-2 curves y² = f(x) with f(x) = x⁵ + c₁₂x³ + c₁₈x² + c₂₄x + c₃₀.
//!
//! Integer data (discriminant, height, minimality) lives here; finite-field
//! arithmetic, the Jacobian, the elliptic-surface sections and Sp₄(𝔽₃) are in
//! the submodules.

pub mod fp;
pub mod jacobian;
pub mod sections;
pub mod sp4;

use std::fmt;
use std::io::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Genus2Error {
    #[error("degree shape: {0}")]
    DegreeShape(String),
    #[error("x^4 coefficient is {0}, expected 0")]
    NonzeroQuarticCoefficient(BigInt),
    #[error("divisor is not reduced: {0}")]
    NonReducedInput(String),
    #[error("fixture: {0}")]
    Fixture(String),
}

/// The weights i of the coefficients c_i, in order.
pub const WEIGHTS: [u32; 4] = [12, 18, 24, 30];

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quintic {
    pub c12: BigInt,
    pub c18: BigInt,
    pub c24: BigInt,
    pub c30: BigInt,
}

impl Quintic {
    pub fn new(c12: impl Into<BigInt>, c18: impl Into<BigInt>, c24: impl Into<BigInt>, c30: impl Into<BigInt>) -> Self {
        Quintic { c12: c12.into(), c18: c18.into(), c24: c24.into(), c30: c30.into() }
    }

    pub fn coeffs(&self) -> [&BigInt; 4] {
        [&self.c12, &self.c18, &self.c24, &self.c30]
    }

    /// Little-endian coefficients of f, x⁰ through x⁵.
    pub fn poly(&self) -> Vec<BigInt> {
        vec![
            self.c30.clone(),
            self.c24.clone(),
            self.c18.clone(),
            self.c12.clone(),
            BigInt::zero(),
            BigInt::one(),
        ]
    }

    /// Reduction mod p.
    pub fn mod_p(&self, p: u64) -> fp::FpPoly {
        let pb = BigInt::from(p);
        let c = self
            .poly()
            .iter()
            .map(|x| {
                let r = x.mod_floor(&pb);
                u64::try_from(r).expect("residue fits")
            })
            .collect();
        fp::FpPoly::new(p, c)
    }
}

impl fmt::Display for Quintic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^5")?;
        for (c, e) in [(&self.c12, 3), (&self.c18, 2), (&self.c24, 1), (&self.c30, 0)] {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            let a = c.abs();
            let a = if a.is_one() && e > 0 { String::new() } else { a.to_string() };
            match e {
                0 => write!(f, " {sign} {a}")?,
                1 => write!(f, " {sign} {a}x")?,
                _ => write!(f, " {sign} {a}x^{e}")?,
            }
        }
        Ok(())
    }
}

/// disc(f) = Res(f, f′). For a monic quintic the usual factor
/// (−1)^{n(n−1)/2} is +1, so disc(x⁵ − 1) = 3125.
pub fn discriminant(f: &Quintic) -> BigInt {
    let p = f.poly();
    resultant_euclid(&p, &derivative(&p))
}

fn derivative(p: &[BigInt]) -> Vec<BigInt> {
    p.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect()
}

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Resultant over ℚ by Euclidean remainders.
fn resultant_euclid(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let to_q = |v: &[BigInt]| {
        let mut w: Vec<BigRational> = v.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        trim(&mut w);
        w
    };
    let (mut a, mut b) = (to_q(a), to_q(b));
    let mut acc = BigRational::one();
    loop {
        if a.is_empty() || b.is_empty() {
            return BigInt::zero();
        }
        let (da, db) = (a.len() - 1, b.len() - 1);
        let lb = b[db].clone();
        if db == 0 {
            let r = acc * num_traits::pow(lb, da);
            assert!(r.is_integer());
            return r.to_integer();
        }
        // remainder of a by b
        let mut r = a.clone();
        for i in (db..=da).rev() {
            let coef = &r[i] / &lb;
            if coef.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                r[i - db + j] = &r[i - db + j] - &coef * bj;
            }
        }
        trim(&mut r);
        if r.is_empty() {
            return BigInt::zero();
        }
        let dr = r.len() - 1;
        if (da * db) % 2 == 1 {
            acc = -acc;
        }
        acc *= num_traits::pow(lb, da - dr);
        a = b;
        b = r;
    }
}

/// Determinant of the Sylvester matrix by fraction-free elimination.
pub fn resultant_sylvester(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    for i in 0..n {
        for (j, c) in a.iter().rev().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in b.iter().rev().enumerate() {
            rows[n + i][i + j] = c.clone();
        }
    }
    bareiss_det(rows)
}

pub(crate) fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if piv != k {
            m.swap(piv, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * prev
}

/// Reduced exponent pairs (e, k) with |c_i|^e < a^k equivalent to |c_i|^120 < a^i.
const HEIGHT_EXPONENTS: [(u32, u32); 4] = [(10, 1), (20, 3), (5, 1), (4, 1)];

/// Ht(f) < a, i.e. |c_i|^120 < a^i for all i.
pub fn height_lt(f: &Quintic, a: &BigInt) -> bool {
    assert!(a.is_positive());
    f.coeffs()
        .iter()
        .zip(HEIGHT_EXPONENTS)
        .all(|(c, (e, k))| num_traits::pow(c.abs(), e as usize) < num_traits::pow(a.clone(), k as usize))
}

/// Largest |c| allowed in slot `slot` under Ht < a.
fn coefficient_bound(slot: usize, a: &BigInt) -> BigInt {
    let (e, k) = HEIGHT_EXPONENTS[slot];
    let lim = num_traits::pow(a.clone(), k as usize);
    let mut c = BigInt::zero();
    while num_traits::pow(&c + 1u32, e as usize) < lim {
        c += 1u32;
    }
    c
}

/// No prime p with p⁴ | c₁₂, p⁶ | c₁₈, p⁸ | c₂₄, p¹⁰ | c₃₀.
pub fn is_minimal(f: &Quintic) -> bool {
    // Any such p divides g = gcd of the nonzero c_i; all c_i = 0 means p = 2 works.
    let g = f.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return false;
    }
    let mut rest = g;
    let mut p = BigInt::from(2u32);
    while &p * &p <= rest {
        if (&rest % &p).is_zero() {
            if divides_weighted(f, &p) {
                return false;
            }
            while (&rest % &p).is_zero() {
                rest /= &p;
            }
        }
        p += 1u32;
    }
    !(rest > BigInt::one() && divides_weighted(f, &rest))
}

fn divides_weighted(f: &Quintic, n: &BigInt) -> bool {
    f.coeffs()
        .iter()
        .zip([4usize, 6, 8, 10])
        .all(|(c, e)| (*c % num_traits::pow(n.clone(), e)).is_zero())
}

/// c_i ↦ t^i c_i.
pub fn scale_coeffs(f: &Quintic, t: &BigInt) -> Quintic {
    let s = |c: &BigInt, i: u32| c * num_traits::pow(t.clone(), i as usize);
    Quintic { c12: s(&f.c12, 12), c18: s(&f.c18, 18), c24: s(&f.c24, 24), c30: s(&f.c30, 30) }
}

/// Minimal quintics of nonzero discriminant with Ht < a, in lexicographic
/// order of (c₁₂, c₁₈, c₂₄, c₃₀).
pub fn enumerate_min(a: &BigInt) -> Vec<Quintic> {
    use rayon::prelude::*;
    let b: Vec<i64> = (0..4)
        .map(|s| i64::try_from(coefficient_bound(s, a)).expect("bound fits in i64"))
        .collect();
    let outer: Vec<i64> = (-b[0]..=b[0]).collect();
    outer
        .par_iter()
        .flat_map_iter(|&c12| {
            let mut out = Vec::new();
            for c18 in -b[1]..=b[1] {
                for c24 in -b[2]..=b[2] {
                    for c30 in -b[3]..=b[3] {
                        let f = Quintic::new(c12, c18, c24, c30);
                        if is_minimal(&f) && !discriminant(&f).is_zero() {
                            out.push(f);
                        }
                    }
                }
            }
            out
        })
        .collect()
}

/// Definitional enumeration for small a: every |c_i| < a, the full
/// |c_i|^120 < a^i test, minimality by trial over all n ≥ 2 and the
/// Sylvester-determinant discriminant. Independent of [`enumerate_min`].
pub fn enumerate_min_bruteforce(a: u32) -> Vec<Quintic> {
    let a_big = BigInt::from(a);
    let r = a as i64 - 1;
    let mut out = Vec::new();
    for c12 in -r..=r {
        for c18 in -r..=r {
            for c24 in -r..=r {
                for c30 in -r..=r {
                    let cs = [c12, c18, c24, c30];
                    let height_ok = cs.iter().zip(WEIGHTS).all(|(c, i)| {
                        num_traits::pow(BigInt::from(c.abs()), 120) < num_traits::pow(a_big.clone(), i as usize)
                    });
                    if !height_ok {
                        continue;
                    }
                    let top = cs.iter().map(|c| c.abs()).max().unwrap_or(0);
                    if top == 0 {
                        continue;
                    }
                    let scalable = (2..=top).any(|n: i64| {
                        cs.iter()
                            .zip([4usize, 6, 8, 10])
                            .all(|(c, e)| (BigInt::from(*c) % num_traits::pow(BigInt::from(n), e)).is_zero())
                    });
                    if scalable {
                        continue;
                    }
                    let f = Quintic::new(c12, c18, c24, c30);
                    let p = f.poly();
                    let dp: Vec<BigInt> = p.iter().enumerate().skip(1).map(|(k, c)| c * k).collect();
                    if !resultant_sylvester(&p, &dp).is_zero() {
                        out.push(f);
                    }
                }
            }
        }
    }
    out
}

/// One CSV row per quintic: c12, c18, c24, c30, disc, minimal.
pub fn write_csv<W: Write>(out: W, fs: &[Quintic]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["c12", "c18", "c24", "c30", "disc", "minimal"])?;
    for f in fs {
        w.write_record([
            f.c12.to_string(),
            f.c18.to_string(),
            f.c24.to_string(),
            f.c30.to_string(),
            discriminant(f).to_string(),
            is_minimal(f).to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// f = u·v + r² over ℤ, little-endian coefficient vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MumfordTriple {
    pub u: Vec<BigInt>,
    pub v: Vec<BigInt>,
    pub r: Vec<BigInt>,
}

impl MumfordTriple {
    pub fn from_i64(u: &[i64], v: &[i64], r: &[i64]) -> Self {
        let z = |s: &[i64]| {
            let mut w: Vec<BigInt> = s.iter().map(|&c| BigInt::from(c)).collect();
            trim(&mut w);
            w
        };
        MumfordTriple { u: z(u), v: z(v), r: z(r) }
    }

    pub fn nu(&self) -> usize {
        self.u.len().saturating_sub(1)
    }
}

fn mul_z(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    c
}

pub fn mumford_verify(t: &MumfordTriple) -> Result<Quintic, Genus2Error> {
    let monic = |p: &[BigInt]| p.last().is_some_and(|c| c.is_one());
    let nu = t.nu();
    if t.u.is_empty() || !monic(&t.u) || nu > 2 {
        return Err(Genus2Error::DegreeShape(format!("u must be monic of degree ≤ 2, got {} coefficients", t.u.len())));
    }
    if !monic(&t.v) || t.v.len() != 6 - nu {
        return Err(Genus2Error::DegreeShape(format!("v must be monic of degree {}", 5 - nu)));
    }
    if t.r.len() > nu {
        return Err(Genus2Error::DegreeShape(format!("deg r must be below {nu}")));
    }
    let mut f = mul_z(&t.u, &t.v);
    for (i, c) in mul_z(&t.r, &t.r).into_iter().enumerate() {
        f[i] += c;
    }
    if !f[4].is_zero() {
        return Err(Genus2Error::NonzeroQuarticCoefficient(f[4].clone()));
    }
    Ok(Quintic { c12: f[3].clone(), c18: f[2].clone(), c24: f[1].clone(), c30: f[0].clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant(&Quintic::new(0, 0, 0, 0)), bi(0));
        assert_eq!(discriminant(&Quintic::new(0, 0, 0, -1)), bi(3125));
        let f = Quintic::new(0, 0, 1, 0);
        assert_eq!(discriminant(&f), resultant_sylvester(&f.poly(), &derivative(&f.poly())));
        assert_eq!(discriminant(&f), bi(256));
    }

    #[test]
    fn height_examples() {
        let a2 = bi(2);
        assert!(height_lt(&Quintic::new(0, 0, 0, 0), &bi(1)));
        assert!(height_lt(&Quintic::new(1, 0, 0, 0), &a2));
        assert!(!height_lt(&Quintic::new(0, 0, 0, 2), &a2));
        assert!(height_lt(&Quintic::new(0, 0, 0, 1), &a2));
    }

    #[test]
    fn minimality_examples() {
        assert!(is_minimal(&Quintic::new(1, 0, 0, 0)));
        assert!(!is_minimal(&Quintic::new(16, 64, 256, 1024)));
        assert!(is_minimal(&Quintic::new(16, 0, 0, 59049)));
        assert!(!is_minimal(&Quintic::new(0, 0, 0, 0)));
        // a large prime power
        let p = bi(1_000_003);
        let f = Quintic::new(num_traits::pow(p.clone(), 4), 0, 0, num_traits::pow(p, 10));
        assert!(!is_minimal(&f));
    }

    #[test]
    fn mumford_shapes() {
        let f = mumford_verify(&MumfordTriple::from_i64(&[1], &[3, 2, 1, 0, 0, 1], &[])).unwrap();
        assert_eq!(f, Quintic::new(0, 1, 2, 3));
        // (x − 1)(x⁴ + x³ + x² + x + 1) + 1 = x⁵
        let f = mumford_verify(&MumfordTriple::from_i64(&[-1, 1], &[1, 1, 1, 1, 1], &[1])).unwrap();
        assert_eq!(f, Quintic::new(0, 0, 0, 0));
        assert!(mumford_verify(&MumfordTriple::from_i64(&[0, 1], &[0, 0, 0, 0, 1], &[])).is_ok());
        assert!(matches!(
            mumford_verify(&MumfordTriple::from_i64(&[0, 1], &[0, 0, 0, 1, 1], &[])),
            Err(Genus2Error::NonzeroQuarticCoefficient(_))
        ));
        assert!(matches!(
            mumford_verify(&MumfordTriple::from_i64(&[0, 1], &[0, 0, 0, 1], &[])),
            Err(Genus2Error::DegreeShape(_))
        ));
        assert!(matches!(
            mumford_verify(&MumfordTriple::from_i64(&[0, 1], &[0, 0, 0, 0, 1], &[1, 1])),
            Err(Genus2Error::DegreeShape(_))
        ));
    }

    #[test]
    fn scale_is_weighted() {
        let f = scale_coeffs(&Quintic::new(1, 1, 1, 1), &bi(2));
        assert_eq!(f, Quintic::new(1 << 12, 1 << 18, 1 << 24, 1i64 << 30));
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        write_csv(&mut buf, &[Quintic::new(0, 0, 1, 0)]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "c12,c18,c24,c30,disc,minimal\n0,0,1,0,256,true\n");
    }

    proptest! {
        #[test]
        fn routes_agree(c in proptest::collection::vec(-50i64..50, 4)) {
            let f = Quintic::new(c[0], c[1], c[2], c[3]);
            let p = f.poly();
            prop_assert_eq!(discriminant(&f), resultant_sylvester(&p, &derivative(&p)));
        }

        #[test]
        fn trinomial_closed_form(a in -30i64..30, b in -30i64..30) {
            let f = Quintic::new(0, 0, a, b);
            let expect = bi(3125) * bi(b).pow(4) + bi(256) * bi(a).pow(5);
            prop_assert_eq!(discriminant(&f), expect);
        }

        #[test]
        fn disc_commutes_with_reduction(c in proptest::collection::vec(-1000i64..1000, 4), pi in 0usize..6) {
            let p = [7u64, 11, 13, 101, 1009, 65537][pi];
            let f = Quintic::new(c[0], c[1], c[2], c[3]);
            let d = discriminant(&f).mod_floor(&BigInt::from(p));
            let g = f.mod_p(p);
            prop_assert_eq!(d, BigInt::from(g.resultant(&g.derivative())));
        }

        #[test]
        fn minimal_after_scaling_is_not(c in proptest::collection::vec(-20i64..20, 4), n in 2i64..5) {
            // n^{10} f(x / n²) has n^{-10} g(n² x) = f integral
            let g = Quintic::new(c[0] * n.pow(4), c[1] * n.pow(6), c[2] * n.pow(8), c[3] * n.pow(10));
            prop_assert!(!is_minimal(&g));
        }
    }
}
