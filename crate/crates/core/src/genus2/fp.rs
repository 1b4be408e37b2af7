//! Prime fields, polynomials over them and the quadratic extension used for
//! point counts.

use std::fmt;

/// 𝔽_p for an odd prime p < 2³¹.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        assert!(p > 2 && p < 1 << 31 && is_prime(p), "{p} is not an odd prime");
        Fp { p }
    }

    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    /// Legendre symbol as −1, 0, 1.
    pub fn chi(&self, a: u64) -> i64 {
        match self.pow(a, (self.p - 1) / 2) {
            0 => 0,
            1 => 1,
            _ => -1,
        }
    }

    pub fn sqrt(&self, a: u64) -> Option<u64> {
        (0..self.p).find(|&x| self.mul(x, x) == a % self.p)
    }

    /// A primitive cube root of unity, if p ≡ 1 mod 3.
    pub fn zeta3(&self) -> Option<u64> {
        (2..self.p).find(|&x| self.pow(x, 3) == 1)
    }

    pub fn nonresidue(&self) -> u64 {
        (2..self.p).find(|&x| self.chi(x) == -1).expect("odd prime has a nonresidue")
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial over 𝔽_p, little-endian coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpPoly {
    pub p: u64,
    pub c: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, c: Vec<u64>) -> Self {
        let mut f = FpPoly { p, c: c.into_iter().map(|x| x % p).collect() };
        f.trim();
        f
    }

    pub fn from_i64(p: u64, c: &[i64]) -> Self {
        Self::new(p, c.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, c: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        FpPoly { p, c: vec![1] }
    }

    pub fn constant(p: u64, a: u64) -> Self {
        Self::new(p, vec![a])
    }

    /// x − t
    pub fn linear(p: u64, t: u64) -> Self {
        Self::new(p, vec![(p - t % p) % p, 1])
    }

    fn trim(&mut self) {
        while self.c.last() == Some(&0) {
            self.c.pop();
        }
    }

    fn field(&self) -> Fp {
        Fp { p: self.p }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, with −1 for the zero polynomial.
    pub fn deg(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    pub fn lead(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.c.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new(self.p, (0..n).map(|i| (self.coeff(i) + o.coeff(i)) % self.p).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new(self.p, (0..n).map(|i| self.field().sub(self.coeff(i), o.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        Self::zero(self.p).sub(self)
    }

    pub fn scale(&self, a: u64) -> Self {
        Self::new(self.p, self.c.iter().map(|&x| self.field().mul(x, a % self.p)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let mut c = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in o.c.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) % self.p;
            }
        }
        Self::new(self.p, c)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let f = self.field();
        let inv = f.inv(d.lead());
        let mut r = self.c.clone();
        let dd = d.c.len() - 1;
        if r.len() <= dd {
            return (Self::zero(self.p), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for i in (0..q.len()).rev() {
            let coef = f.mul(r[i + dd], inv);
            q[i] = coef;
            if coef != 0 {
                for (j, &b) in d.c.iter().enumerate() {
                    r[i + j] = f.sub(r[i + j], f.mul(coef, b));
                }
            }
        }
        (Self::new(self.p, q), Self::new(self.p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.field().inv(self.lead()))
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// (g, s, t) with g = s·self + t·o monic.
    pub fn xgcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s2 = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = Fp { p }.inv(r0.lead());
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.p, self.c.iter().enumerate().skip(1).map(|(i, &a)| a * (i as u64 % self.p) % self.p).collect())
    }

    pub fn eval(&self, x: u64) -> u64 {
        let f = self.field();
        self.c.iter().rev().fold(0, |acc, &a| f.add(f.mul(acc, x), a))
    }

    /// Squarefree part f / gcd(f, f′); valid for deg f < p.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }

    pub fn roots(&self) -> Vec<u64> {
        (0..self.p).filter(|&x| self.eval(x) == 0).collect()
    }

    /// Resultant via the Euclidean algorithm.
    pub fn resultant(&self, o: &Self) -> u64 {
        let f = self.field();
        let (mut a, mut b) = (self.clone(), o.clone());
        let mut acc = 1u64;
        loop {
            if a.is_zero() || b.is_zero() {
                return 0;
            }
            let (da, db) = (a.deg(), b.deg());
            if db == 0 {
                return f.mul(acc, f.pow(b.lead(), da as u64));
            }
            let r = a.rem(&b);
            if r.is_zero() {
                return 0;
            }
            // Res(a, b) = (−1)^{da·db} lc(b)^{da − dr} Res(b, r)
            let dr = r.deg();
            if (da * db) % 2 == 1 {
                acc = f.neg(acc);
            }
            acc = f.mul(acc, f.pow(b.lead(), (da - dr) as u64));
            a = b;
            b = r;
        }
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &a) in self.c.iter().enumerate().rev() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{a}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{a}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// 𝔽_{p²} = 𝔽_p[s]/(s² − n) for a nonresidue n.
#[derive(Clone, Copy, Debug)]
pub struct Fp2 {
    pub f: Fp,
    pub n: u64,
}

impl Fp2 {
    pub fn new(p: u64) -> Self {
        let f = Fp::new(p);
        Fp2 { f, n: f.nonresidue() }
    }

    pub fn mul(&self, a: (u64, u64), b: (u64, u64)) -> (u64, u64) {
        let f = self.f;
        (
            f.add(f.mul(a.0, b.0), f.mul(self.n, f.mul(a.1, b.1))),
            f.add(f.mul(a.0, b.1), f.mul(a.1, b.0)),
        )
    }

    pub fn add(&self, a: (u64, u64), b: (u64, u64)) -> (u64, u64) {
        (self.f.add(a.0, b.0), self.f.add(a.1, b.1))
    }

    pub fn pow(&self, mut a: (u64, u64), mut e: u64) -> (u64, u64) {
        let mut r = (1, 0);
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Quadratic character on 𝔽_{p²}, through the norm to 𝔽_p.
    pub fn chi(&self, a: (u64, u64)) -> i64 {
        self.f.chi(self.norm(a))
    }

    pub fn norm(&self, a: (u64, u64)) -> u64 {
        let f = self.f;
        f.sub(f.mul(a.0, a.0), f.mul(self.n, f.mul(a.1, a.1)))
    }

    pub fn eval(&self, poly: &FpPoly, x: (u64, u64)) -> (u64, u64) {
        poly.c.iter().rev().fold((0, 0), |acc, &a| self.add(self.mul(acc, x), (a, 0)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn field_basics() {
        let f = Fp::new(7);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), 5);
        assert_eq!(f.chi(2), 1);
        assert_eq!(f.chi(3), -1);
        assert_eq!(f.zeta3(), Some(2));
        assert_eq!(Fp::new(5).zeta3(), None);
    }

    #[test]
    fn resultant_matches_product_of_roots() {
        // Res((x−1)(x−2), x−3) = (1−3)(2−3)·(−1)^{…} computed directly as g evaluated at roots of f
        let p = 101;
        let f = FpPoly::linear(p, 1).mul(&FpPoly::linear(p, 2));
        let g = FpPoly::linear(p, 3);
        // Res(f, g) = Π_{f(α)=0} g(α) for monic f
        let direct = Fp::new(p).mul(g.eval(1), g.eval(2));
        assert_eq!(f.resultant(&g), direct);
    }

    #[test]
    fn fp2_character_by_norm_matches_power() {
        let e = Fp2::new(11);
        let q = 121u64;
        for a in 0..11 {
            for b in 0..11 {
                let by_power = match e.pow((a, b), (q - 1) / 2) {
                    (0, 0) => 0,
                    (1, 0) => 1,
                    _ => -1,
                };
                assert_eq!(e.chi((a, b)), by_power);
            }
        }
    }

    #[test]
    fn fp2_character_counts() {
        let e = Fp2::new(7);
        let mut squares = 0;
        for a in 0..7 {
            for b in 0..7 {
                if e.chi((a, b)) == 1 {
                    squares += 1;
                }
            }
        }
        assert_eq!(squares, (49 - 1) / 2);
    }

    proptest! {
        #[test]
        fn divrem_identity(a in proptest::collection::vec(0u64..13, 0..8), b in proptest::collection::vec(0u64..13, 1..5)) {
            let p = 13;
            let a = FpPoly::new(p, a);
            let b = FpPoly::new(p, b);
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b);
            prop_assert_eq!(q.mul(&b).add(&r), a);
            prop_assert!(r.deg() < b.deg());
        }

        #[test]
        fn xgcd_bezout(a in proptest::collection::vec(0u64..11, 1..6), b in proptest::collection::vec(0u64..11, 1..6)) {
            let p = 11;
            let a = FpPoly::new(p, a);
            let b = FpPoly::new(p, b);
            prop_assume!(!a.is_zero() || !b.is_zero());
            let (g, s, t) = a.xgcd(&b);
            prop_assert_eq!(s.mul(&a).add(&t.mul(&b)), g.clone());
            prop_assert!(a.rem(&g).is_zero() && b.rem(&g).is_zero());
        }

        #[test]
        fn resultant_vanishes_on_common_root(t in 0u64..17, a in proptest::collection::vec(0u64..17, 1..4), b in proptest::collection::vec(0u64..17, 1..4)) {
            let p = 17;
            let l = FpPoly::linear(p, t);
            let f = l.mul(&FpPoly::new(p, a));
            let g = l.mul(&FpPoly::new(p, b));
            prop_assert_eq!(f.resultant(&g), 0);
        }
    }
}
