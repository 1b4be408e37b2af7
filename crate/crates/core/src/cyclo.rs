//! Scalars in ℤ[ω] and ℚ(ω), where ω is a primitive cube root of unity
//! (ω² + ω + 1 = 0).
//!
//! [`Eis`] is the fast fixed-width ring used by the exhaustive sweeps;
//! [`Cyc`] is the exact field used for general linear algebra.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Element `a + b·ω` of the Eisenstein integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Eis {
    pub a: i64,
    pub b: i64,
}

impl Eis {
    pub const ZERO: Eis = Eis { a: 0, b: 0 };
    pub const ONE: Eis = Eis { a: 1, b: 0 };
    pub const OMEGA: Eis = Eis { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Eis { a, b }
    }

    pub const fn int(a: i64) -> Self {
        Eis { a, b: 0 }
    }

    /// ω^k for any integer k.
    pub fn omega_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Eis::ONE,
            1 => Eis::OMEGA,
            _ => Eis::new(-1, -1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Galois conjugate, ω ↦ ω².
    pub fn conj(&self) -> Self {
        Eis::new(self.a - self.b, -self.b)
    }

    pub fn norm(&self) -> i64 {
        self.a * self.a - self.a * self.b + self.b * self.b
    }

    pub fn scale(&self, k: i64) -> Self {
        Eis::new(self.a * k, self.b * k)
    }

    /// If `self = u·ω^k` for an integer `u`, return `(u, k)` with `k` in 0..3.
    pub fn as_int_times_omega(&self) -> Option<(i64, u8)> {
        if self.b == 0 {
            Some((self.a, 0))
        } else if self.a == 0 {
            Some((self.b, 1))
        } else if self.a == self.b {
            // a(1 + ω) = -a·ω²
            Some((-self.a, 2))
        } else {
            None
        }
    }

    /// Exact division by an integer, if it divides both coordinates.
    pub fn div_int(&self, d: i64) -> Option<Self> {
        if d != 0 && self.a % d == 0 && self.b % d == 0 {
            Some(Eis::new(self.a / d, self.b / d))
        } else {
            None
        }
    }

    pub fn to_cyc(&self) -> Cyc {
        Cyc::from_ints(self.a, self.b)
    }
}

impl Add for Eis {
    type Output = Eis;
    fn add(self, o: Eis) -> Eis {
        Eis::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Eis {
    type Output = Eis;
    fn sub(self, o: Eis) -> Eis {
        Eis::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Eis {
    type Output = Eis;
    fn neg(self) -> Eis {
        Eis::new(-self.a, -self.b)
    }
}

impl Mul for Eis {
    type Output = Eis;
    fn mul(self, o: Eis) -> Eis {
        let bd = self.b * o.b;
        Eis::new(self.a * o.a - bd, self.a * o.b + self.b * o.a - bd)
    }
}

impl AddAssign for Eis {
    fn add_assign(&mut self, o: Eis) {
        self.a += o.a;
        self.b += o.b;
    }
}

impl SubAssign for Eis {
    fn sub_assign(&mut self, o: Eis) {
        self.a -= o.a;
        self.b -= o.b;
    }
}

impl MulAssign for Eis {
    fn mul_assign(&mut self, o: Eis) {
        *self = *self * o;
    }
}

impl fmt::Display for Eis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}*w", self.a, self.b)
    }
}

/// Element `a + b·ω` of ℚ(ω) with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyc {
    pub a: BigRational,
    pub b: BigRational,
}

impl Cyc {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Cyc { a, b }
    }

    pub fn zero() -> Self {
        Cyc::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Cyc::from_ints(1, 0)
    }

    pub fn omega() -> Self {
        Cyc::from_ints(0, 1)
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Cyc::new(
            BigRational::from_integer(BigInt::from(a)),
            BigRational::from_integer(BigInt::from(b)),
        )
    }

    pub fn from_rational(a: BigRational) -> Self {
        Cyc::new(a, BigRational::zero())
    }

    pub fn omega_pow(k: i64) -> Self {
        Eis::omega_pow(k).to_cyc()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        Cyc::new(&self.a - &self.b, -&self.b)
    }

    /// Field norm a² − ab + b², a non-negative rational.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(Cyc::new(c.a / &n, c.b / n))
    }

    /// Back to ℤ[ω] when both coordinates are integers that fit in i64.
    pub fn to_eis(&self) -> Option<Eis> {
        use num_traits::ToPrimitive;
        if !self.a.is_integer() || !self.b.is_integer() {
            return None;
        }
        Some(Eis::new(self.a.to_integer().to_i64()?, self.b.to_integer().to_i64()?))
    }

    pub fn mul_ref(&self, o: &Cyc) -> Cyc {
        let bd = &self.b * &o.b;
        Cyc::new(&self.a * &o.a - &bd, &self.a * &o.b + &self.b * &o.a - bd)
    }

    pub fn add_ref(&self, o: &Cyc) -> Cyc {
        Cyc::new(&self.a + &o.a, &self.b + &o.b)
    }

    pub fn sub_ref(&self, o: &Cyc) -> Cyc {
        Cyc::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl Default for Cyc {
    fn default() -> Self {
        Cyc::zero()
    }
}

impl From<Eis> for Cyc {
    fn from(e: Eis) -> Cyc {
        e.to_cyc()
    }
}

impl Add for Cyc {
    type Output = Cyc;
    fn add(self, o: Cyc) -> Cyc {
        self.add_ref(&o)
    }
}

impl Sub for Cyc {
    type Output = Cyc;
    fn sub(self, o: Cyc) -> Cyc {
        self.sub_ref(&o)
    }
}

impl Mul for Cyc {
    type Output = Cyc;
    fn mul(self, o: Cyc) -> Cyc {
        self.mul_ref(&o)
    }
}

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc::new(-self.a, -self.b)
    }
}

impl AddAssign<&Cyc> for Cyc {
    fn add_assign(&mut self, o: &Cyc) {
        self.a += &o.a;
        self.b += &o.b;
    }
}

impl SubAssign<&Cyc> for Cyc {
    fn sub_assign(&mut self, o: &Cyc) {
        self.a -= &o.a;
        self.b -= &o.b;
    }
}

fn fmt_rat(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rat(&self.a));
        }
        let sign = if self.b.is_negative() { "-" } else { "+" };
        write!(f, "{}{}{}*w", fmt_rat(&self.a), sign, fmt_rat(&self.b.abs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn omega_cubed_is_one() {
        let w = Eis::OMEGA;
        assert_eq!(w * w * w, Eis::ONE);
        assert_eq!(Eis::ONE + w + w * w, Eis::ZERO);
        assert_eq!(w.conj(), w * w);
    }

    #[test]
    fn cyc_inverse() {
        let x = Cyc::from_ints(2, -3);
        assert_eq!(x.mul_ref(&x.inv().unwrap()), Cyc::one());
        assert!(Cyc::zero().inv().is_none());
    }

    #[test]
    fn int_times_omega() {
        for k in 0..3 {
            for u in [-2i64, 1, 5] {
                let e = Eis::omega_pow(k).scale(u);
                assert_eq!(e.as_int_times_omega(), Some((u, k as u8)));
            }
        }
        assert_eq!(Eis::new(1, 2).as_int_times_omega(), None);
    }

    fn eis() -> impl Strategy<Value = Eis> {
        (-50i64..50, -50i64..50).prop_map(|(a, b)| Eis::new(a, b))
    }

    proptest! {
        #[test]
        fn eis_ring_axioms(x in eis(), y in eis(), z in eis()) {
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert_eq!(x * (y + z), x * y + x * z);
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!((x * y).norm(), x.norm() * y.norm());
            prop_assert_eq!(x.to_cyc().mul_ref(&y.to_cyc()).to_eis(), Some(x * y));
        }
    }
}
