//! Exact scalar arithmetic.
//!
//! Three fields are provided, all with exact rational coordinates:
//!
//! * [`Scalar`] — the cyclotomic field ℚ(q) with `q² = −1 − q` (hence
//!   `q³ = 1` and `1 + q + q² = 0`). Its distinguished conjugation is the
//!   field automorphism `q ↦ q²`.
//! * [`Rq3`] — the ordered real quadratic field ℚ(√3), with exact sign
//!   determination. Its conjugation is the identity.
//! * [`Cq3`] — the complex field ℚ(√3)(i). It contains ℚ(q) via
//!   `q = −1/2 + (√3/2)·i`, and its conjugation is complex conjugation
//!   (which restricts to `q ↦ q²` on the image of ℚ(q)).
//!
//! [`Cq3`] is what hermitian metric problems are solved over when the
//! solution space is not defined over ℚ(q) itself, and [`Rq3`] is where the
//! entries of "realified" hermitian forms live, so inertia (signature)
//! computations reduce to exact sign determinations in ℚ(√3).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Exact rational number.
pub type Q = BigRational;

/// Convenience constructor for a rational from an integer pair.
pub fn qq(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Commutative ring with a distinguished conjugation, the interface the
/// generic containers (matrices, polynomials) are written against.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// The distinguished (possibly trivial) conjugation of the ring.
    fn conj(&self) -> Self;
    fn from_int(n: i64) -> Self {
        let mut acc = Self::zero();
        let one = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc.add(&one);
        }
        if n < 0 {
            acc.neg()
        } else {
            acc
        }
    }
}

/// Ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse. Panics on zero (a genuine domain error:
    /// callers are expected to test [`Ring::is_zero`] first).
    fn inv(&self) -> Self;
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

// ---------------------------------------------------------------------------
// Scalar: the field ℚ(q), q² = −1 − q
// ---------------------------------------------------------------------------

/// Element `r0 + r1·q` of ℚ(q) with `q² = −1 − q` (a primitive cube root of
/// unity). Conjugation sends `q ↦ q²`, i.e. `(r0, r1) ↦ (r0 − r1, −r1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    /// Coefficient of 1.
    pub r0: Q,
    /// Coefficient of q.
    pub r1: Q,
}

impl Scalar {
    pub fn new(r0: Q, r1: Q) -> Self {
        Scalar { r0, r1 }
    }

    pub fn zero() -> Self {
        Scalar::new(Q::zero(), Q::zero())
    }

    pub fn one() -> Self {
        Scalar::new(Q::one(), Q::zero())
    }

    /// The root of unity q itself.
    pub fn q() -> Self {
        Scalar::new(Q::zero(), Q::one())
    }

    /// q² = −1 − q (equal to q⁻¹ and to the conjugate of q).
    pub fn q2() -> Self {
        Scalar::new(-Q::one(), -Q::one())
    }

    /// q^k for any integer exponent (k is reduced mod 3).
    pub fn q_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Scalar::one(),
            1 => Scalar::q(),
            _ => Scalar::q2(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(Q::from(BigInt::from(n)), Q::zero())
    }

    /// n/d as an element of ℚ ⊂ ℚ(q).
    pub fn rat(n: i64, d: i64) -> Self {
        Scalar::new(qq(n, d), Q::zero())
    }

    pub fn from_q(r: Q) -> Self {
        Scalar::new(r, Q::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.r0.is_zero() && self.r1.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.r0.is_one() && self.r1.is_zero()
    }

    /// True if the element lies in ℚ (these are exactly the elements fixed
    /// by conjugation, i.e. the "real" elements of ℚ(q)).
    pub fn is_rational(&self) -> bool {
        self.r1.is_zero()
    }

    /// Conjugation `q ↦ q²`; an involutive field automorphism.
    pub fn conj(&self) -> Self {
        Scalar::new(&self.r0 - &self.r1, -self.r1.clone())
    }

    /// Field norm `s·conj(s) = r0² − r0·r1 + r1²`; zero only at zero.
    pub fn norm(&self) -> Q {
        &self.r0 * &self.r0 - &self.r0 * &self.r1 + &self.r1 * &self.r1
    }

    /// Multiplicative inverse: `conj(s)/norm(s)`. Panics on zero.
    pub fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "division by zero in Q(q)");
        let c = self.conj();
        Scalar::new(c.r0 / n.clone(), c.r1 / n)
    }

    /// Rational coordinate of the real part under q = (−1 + i√3)/2:
    /// `Re(r0 + r1·q) = r0 − r1/2 ∈ ℚ`.
    pub fn real_part(&self) -> Q {
        &self.r0 - &self.r1 / Q::from(BigInt::from(2))
    }

    /// Scale by a rational.
    pub fn scale(&self, r: &Q) -> Self {
        Scalar::new(&self.r0 * r, &self.r1 * r)
    }

    /// r0/r1 as display-friendly strings in lowest terms.
    pub fn coord_strings(&self) -> (String, String) {
        (self.r0.to_string(), self.r1.to_string())
    }

    /// True when `Display` needs parentheses before being juxtaposed with a
    /// monomial (i.e. when the printed form contains a `+` or binary `-`).
    pub fn is_composite(&self) -> bool {
        !(self.r1.is_zero() || self.r0.is_zero() || self.r0 == self.r1)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn fmt_coeff_times(f: &mut fmt::Formatter<'_>, c: &Q, sym: &str) -> fmt::Result {
    if c.is_one() {
        write!(f, "{sym}")
    } else if *c == -Q::one() {
        write!(f, "-{sym}")
    } else {
        write!(f, "{c}*{sym}")
    }
}

impl fmt::Display for Scalar {
    /// Canonical printed forms: `0`, rationals (`-5/3`), rational multiples
    /// of `q` and of `q^2` (`q`, `-2*q`, `1/3*q^2`), and the generic
    /// two-term form `r0+r1*q` (e.g. `1/2-3*q`). All forms re-parse.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.r1.is_zero() {
            return write!(f, "{}", self.r0);
        }
        if self.r0.is_zero() {
            return fmt_coeff_times(f, &self.r1, "q");
        }
        if self.r0 == self.r1 {
            // c·q² has coordinates (−c, −c).
            return fmt_coeff_times(f, &-self.r0.clone(), "q^2");
        }
        write!(f, "{}", self.r0)?;
        if self.r1.is_positive() {
            write!(f, "+")?;
        }
        fmt_coeff_times(f, &self.r1, "q")
    }
}

macro_rules! forward_binop {
    ($t:ty, $tr:ident, $m:ident) => {
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                <&$t as $tr<&$t>>::$m(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a $t> for $t {
            type Output = $t;
            fn $m(self, rhs: &'a $t) -> $t {
                <&$t as $tr<&$t>>::$m(&self, rhs)
            }
        }
        impl<'a> $tr<$t> for &'a $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                <&$t as $tr<&$t>>::$m(self, &rhs)
            }
        }
    };
}

impl<'a, 'b> Add<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'b Scalar) -> Scalar {
        Scalar::new(&self.r0 + &rhs.r0, &self.r1 + &rhs.r1)
    }
}
impl<'a, 'b> Sub<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'b Scalar) -> Scalar {
        Scalar::new(&self.r0 - &rhs.r0, &self.r1 - &rhs.r1)
    }
}
impl<'a, 'b> Mul<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    // (a + bq)(c + dq) = ac + (ad + bc)q + bd·q² with q² = −1 − q.
    fn mul(self, rhs: &'b Scalar) -> Scalar {
        let ac = &self.r0 * &rhs.r0;
        let bd = &self.r1 * &rhs.r1;
        let ad_bc = &self.r0 * &rhs.r1 + &self.r1 * &rhs.r0;
        Scalar::new(ac - &bd, ad_bc - bd)
    }
}
forward_binop!(Scalar, Add, add);
forward_binop!(Scalar, Sub, sub);
forward_binop!(Scalar, Mul, mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.r0.clone(), -self.r1.clone())
    }
}
impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.r0 += &rhs.r0;
        self.r1 += &rhs.r1;
    }
}
impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.r0 -= &rhs.r0;
        self.r1 -= &rhs.r1;
    }
}
impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn conj(&self) -> Self {
        Scalar::conj(self)
    }
    fn from_int(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Field for Scalar {
    fn inv(&self) -> Self {
        Scalar::inv(self)
    }
}

// JSON form: {"r0": "num/den", "r1": "num/den"} in lowest terms.
impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = ser.serialize_struct("Scalar", 2)?;
        st.serialize_field("r0", &self.r0.to_string())?;
        st.serialize_field("r1", &self.r1.to_string())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            r0: String,
            r1: String,
        }
        let raw = Raw::deserialize(de)?;
        let r0 = Q::from_str(&raw.r0).map_err(D::Error::custom)?;
        let r1 = Q::from_str(&raw.r1).map_err(D::Error::custom)?;
        Ok(Scalar::new(r0, r1))
    }
}

// ---------------------------------------------------------------------------
// Rq3: the ordered real field ℚ(√3)
// ---------------------------------------------------------------------------

/// Element `a + b·√3` of the real quadratic field ℚ(√3), with exact
/// comparison against zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rq3 {
    pub a: Q,
    pub b: Q,
}

impl Rq3 {
    pub fn new(a: Q, b: Q) -> Self {
        Rq3 { a, b }
    }
    pub fn from_q(a: Q) -> Self {
        Rq3::new(a, Q::zero())
    }
    pub fn sqrt3() -> Self {
        Rq3::new(Q::zero(), Q::one())
    }
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign: −1, 0 or 1.
    pub fn sign(&self) -> i32 {
        let sa = if self.a.is_zero() {
            0
        } else if self.a.is_positive() {
            1
        } else {
            -1
        };
        let sb = if self.b.is_zero() {
            0
        } else if self.b.is_positive() {
            1
        } else {
            -1
        };
        match (sa, sb) {
            (0, s) | (s, 0) => s,
            (1, 1) => 1,
            (-1, -1) => -1,
            // Opposite signs: compare a² with 3b²; a + b√3 > 0 ⟺
            // (a > 0 and a² > 3b²) or (b > 0 and 3b² > a²).
            (sa, _) => {
                let a2 = &self.a * &self.a;
                let b23 = &self.b * &self.b * Q::from(BigInt::from(3));
                if a2 == b23 {
                    0
                } else if (a2 > b23) == (sa > 0) {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn inv(&self) -> Self {
        // 1/(a + b√3) = (a − b√3)/(a² − 3b²).
        let d = &self.a * &self.a - &self.b * &self.b * Q::from(BigInt::from(3));
        assert!(!d.is_zero(), "division by zero in Q(sqrt3)");
        Rq3::new(&self.a / &d, -(&self.b / &d))
    }
}

impl fmt::Display for Rq3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return fmt_coeff_times(f, &self.b, "sqrt3");
        }
        write!(f, "{}", self.a)?;
        if self.b.is_positive() {
            write!(f, "+")?;
        }
        fmt_coeff_times(f, &self.b, "sqrt3")
    }
}

impl Ring for Rq3 {
    fn zero() -> Self {
        Rq3::new(Q::zero(), Q::zero())
    }
    fn one() -> Self {
        Rq3::new(Q::one(), Q::zero())
    }
    fn add(&self, o: &Self) -> Self {
        Rq3::new(&self.a + &o.a, &self.b + &o.b)
    }
    fn sub(&self, o: &Self) -> Self {
        Rq3::new(&self.a - &o.a, &self.b - &o.b)
    }
    fn mul(&self, o: &Self) -> Self {
        // (a + b√3)(c + d√3) = ac + 3bd + (ad + bc)√3.
        Rq3::new(
            &self.a * &o.a + &self.b * &o.b * Q::from(BigInt::from(3)),
            &self.a * &o.b + &self.b * &o.a,
        )
    }
    fn neg(&self) -> Self {
        Rq3::new(-self.a.clone(), -self.b.clone())
    }
    fn is_zero(&self) -> bool {
        Rq3::is_zero(self)
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn from_int(n: i64) -> Self {
        Rq3::from_q(Q::from(BigInt::from(n)))
    }
}

impl Field for Rq3 {
    fn inv(&self) -> Self {
        Rq3::inv(self)
    }
}

// ---------------------------------------------------------------------------
// Cq3: the complex field ℚ(√3)(i)
// ---------------------------------------------------------------------------

/// Element `re + i·im` with `re, im ∈ ℚ(√3)`. Contains ℚ(q) via
/// `q ↦ −1/2 + (√3/2)i`, and ℚ(i) via rational re/im parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cq3 {
    pub re: Rq3,
    pub im: Rq3,
}

impl Cq3 {
    pub fn new(re: Rq3, im: Rq3) -> Self {
        Cq3 { re, im }
    }
    pub fn i() -> Self {
        Cq3::new(Rq3::zero(), Rq3::one())
    }
    /// Embed ℚ(q): q = −1/2 + (√3/2)·i.
    pub fn from_scalar(s: &Scalar) -> Self {
        let half = qq(1, 2);
        Cq3::new(
            Rq3::new(&s.r0 - &s.r1 * &half, Q::zero()),
            Rq3::new(Q::zero(), &s.r1 * &half),
        )
    }
    /// Embed a pair (u, v) of ℚ(q)-scalars as u + i·v.
    pub fn from_scalar_pair(u: &Scalar, v: &Scalar) -> Self {
        Cq3::from_scalar(u).add(&Cq3::i().mul(&Cq3::from_scalar(v)))
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    pub fn conj(&self) -> Self {
        Cq3::new(self.re.clone(), self.im.neg())
    }
    /// Squared modulus re² + im² ∈ ℚ(√3).
    pub fn norm(&self) -> Rq3 {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }
}

impl fmt::Display for Cq3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "i*({})", self.im);
        }
        write!(f, "({})+i*({})", self.re, self.im)
    }
}

impl Ring for Cq3 {
    fn zero() -> Self {
        Cq3::new(Rq3::zero(), Rq3::zero())
    }
    fn one() -> Self {
        Cq3::new(Rq3::one(), Rq3::zero())
    }
    fn add(&self, o: &Self) -> Self {
        Cq3::new(self.re.add(&o.re), self.im.add(&o.im))
    }
    fn sub(&self, o: &Self) -> Self {
        Cq3::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }
    fn mul(&self, o: &Self) -> Self {
        Cq3::new(
            self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        )
    }
    fn neg(&self) -> Self {
        Cq3::new(self.re.neg(), self.im.neg())
    }
    fn is_zero(&self) -> bool {
        Cq3::is_zero(self)
    }
    fn conj(&self) -> Self {
        Cq3::conj(self)
    }
}

impl Field for Cq3 {
    fn inv(&self) -> Self {
        let n = self.norm();
        assert!(n.sign() != 0, "division by zero in Q(sqrt3)(i)");
        let ninv = n.inv();
        Cq3::new(self.re.mul(&ninv), self.im.neg().mul(&ninv))
    }
}
