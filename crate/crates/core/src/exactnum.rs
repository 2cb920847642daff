//! Exact arithmetic in the real field Q(√2, √3, √5).
//!
//! Scalars are rational coordinate vectors over the ordered basis
//! {1, √2, √3, √5, √6, √10, √15, √30}. This is the smallest real field
//! containing -cos(π/m) for every bond order m in {1, 2, ..., 6, ∞}, which
//! is all the geometric representation of a Coxeter matrix with entries in
//! that set ever needs. The basis elements are linearly independent over Q,
//! so the representation is unique: a value is zero exactly when all eight
//! coordinates vanish, and equality is plain coefficient equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar; numerator/denominator are kept coprime with a
/// positive denominator by the underlying type.
pub type Rational = BigRational;

/// Radicands of the eight basis elements, in coordinate order.
pub const BASIS_RADICANDS: [u32; 8] = [1, 2, 3, 5, 6, 10, 15, 30];

/// Coxeter-matrix entry that encodes m(s,t) = ∞.
pub const INFINITE_BOND: u32 = 0;

/// Starting precision (bits after the binary point) for interval sign
/// determination; doubled until the enclosure excludes zero.
const SIGN_START_BITS: u32 = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactNumError {
    #[error("unsupported bond order m = {0}; supported orders are 1..=6 and 0 (infinity)")]
    UnsupportedOrder(u32),
}

/// Element of Q(√2, √3, √5) in canonical coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraicNumber {
    coeffs: [Rational; 8],
}

fn zero_coeffs() -> [Rational; 8] {
    std::array::from_fn(|_| Rational::zero())
}

fn basis_index(radicand: u32) -> usize {
    BASIS_RADICANDS
        .iter()
        .position(|&d| d == radicand)
        .expect("radicand must divide 30")
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

impl AlgebraicNumber {
    pub fn zero() -> Self {
        AlgebraicNumber {
            coeffs: zero_coeffs(),
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut coeffs = zero_coeffs();
        coeffs[0] = r;
        AlgebraicNumber { coeffs }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_coeffs(coeffs: [Rational; 8]) -> Self {
        AlgebraicNumber { coeffs }
    }

    /// √d for a squarefree divisor d of 30; `None` otherwise.
    pub fn sqrt_of(radicand: u32) -> Option<Self> {
        BASIS_RADICANDS.iter().position(|&d| d == radicand).map(|i| {
            let mut coeffs = zero_coeffs();
            coeffs[i] = Rational::one();
            AlgebraicNumber { coeffs }
        })
    }

    pub fn coeffs(&self) -> &[Rational; 8] {
        &self.coeffs
    }

    pub fn rational_part(&self) -> &Rational {
        &self.coeffs[0]
    }

    /// True when the value lies in Q.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn double(&self) -> Self {
        self + self
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let coeffs = std::array::from_fn(|i| &self.coeffs[i] * r);
        AlgebraicNumber { coeffs }
    }

    /// Exact sign: -1, 0 or +1.
    ///
    /// Zero is decided by the coefficient vector alone (the basis elements
    /// are linearly independent over Q). Nonzero values are bracketed with
    /// rational interval arithmetic, doubling the precision until the
    /// enclosure excludes zero; this terminates because the value is a
    /// nonzero real.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        // All basis elements are positive reals, so uniformly signed
        // coordinates decide immediately; this covers the rational case too.
        let mut has_pos = false;
        let mut has_neg = false;
        for c in &self.coeffs {
            if c.is_positive() {
                has_pos = true;
            } else if c.is_negative() {
                has_neg = true;
            }
        }
        match (has_pos, has_neg) {
            (true, false) => return 1,
            (false, true) => return -1,
            _ => {}
        }
        let mut bits = SIGN_START_BITS;
        loop {
            if let Some(sign) = self.sign_at_precision(bits) {
                return sign;
            }
            bits *= 2;
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    fn sign_at_precision(&self, bits: u32) -> Option<i32> {
        let mut lo = Rational::zero();
        let mut hi = Rational::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (rlo, rhi) = sqrt_bounds(BASIS_RADICANDS[i], bits);
            if c.is_positive() {
                lo += c * &rlo;
                hi += c * &rhi;
            } else {
                lo += c * &rhi;
                hi += c * &rlo;
            }
        }
        if lo.is_positive() {
            Some(1)
        } else if hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }
}

/// Rational bracket l ≤ √d ≤ u with u - l ≤ 2^-bits, from the integer
/// square root of d·4^bits.
fn sqrt_bounds(radicand: u32, bits: u32) -> (Rational, Rational) {
    if radicand == 1 {
        return (Rational::one(), Rational::one());
    }
    let scale: BigInt = BigInt::one() << bits;
    let n = BigInt::from(radicand) * &scale * &scale;
    let root = n.sqrt();
    let lo = Rational::new(root.clone(), scale.clone());
    let hi = Rational::new(root + 1, scale);
    (lo, hi)
}

impl Add for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn add(self, rhs: &AlgebraicNumber) -> AlgebraicNumber {
        let coeffs = std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]);
        AlgebraicNumber { coeffs }
    }
}

impl Sub for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn sub(self, rhs: &AlgebraicNumber) -> AlgebraicNumber {
        let coeffs = std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]);
        AlgebraicNumber { coeffs }
    }
}

impl Mul for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn mul(self, rhs: &AlgebraicNumber) -> AlgebraicNumber {
        let mut coeffs = zero_coeffs();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                // √d1 · √d2 = g · √(d1 d2 / g²) with g = gcd(d1, d2);
                // the target radicand again divides 30.
                let d1 = BASIS_RADICANDS[i];
                let d2 = BASIS_RADICANDS[j];
                let g = gcd_u32(d1, d2);
                let target = basis_index((d1 / g) * (d2 / g));
                let term = a * b * Rational::from_integer(BigInt::from(g));
                coeffs[target] = &coeffs[target] + &term;
            }
        }
        AlgebraicNumber { coeffs }
    }
}

impl Neg for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> AlgebraicNumber {
        let coeffs = std::array::from_fn(|i| -&self.coeffs[i]);
        AlgebraicNumber { coeffs }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $method(self, rhs: AlgebraicNumber) -> AlgebraicNumber {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&AlgebraicNumber> for AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $method(self, rhs: &AlgebraicNumber) -> AlgebraicNumber {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> AlgebraicNumber {
        -&self
    }
}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicNumber {
    /// Numeric order of the real values, decided exactly.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).signum() {
            0 => Ordering::Equal,
            s if s > 0 => Ordering::Greater,
            _ => Ordering::Less,
        }
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let lead = first;
            first = false;
            if !lead {
                write!(f, "{}", if c.is_positive() { " + " } else { " - " })?;
            }
            let mag = c.abs();
            let sign = if lead && c.is_negative() { "-" } else { "" };
            if i == 0 {
                write!(f, "{sign}{mag}")?;
            } else if mag.is_one() {
                write!(f, "{sign}sqrt({})", BASIS_RADICANDS[i])?;
            } else {
                write!(f, "{sign}{mag}*sqrt({})", BASIS_RADICANDS[i])?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The bilinear-form entry -cos(π/m) of the geometric representation, for a
/// Coxeter-matrix entry m. m = 1 yields 1, m = 0 (infinity) yields -1.
pub fn bilinear_entry(m: u32) -> Result<AlgebraicNumber, ExactNumError> {
    let half = || Rational::new(BigInt::one(), BigInt::from(2));
    let quarter = || Rational::new(BigInt::one(), BigInt::from(4));
    match m {
        INFINITE_BOND => Ok(AlgebraicNumber::from_integer(-1)),
        1 => Ok(AlgebraicNumber::one()),
        2 => Ok(AlgebraicNumber::zero()),
        3 => Ok(AlgebraicNumber::from_rational(-half())),
        4 => Ok(-AlgebraicNumber::sqrt_of(2).unwrap().scale(&half())),
        5 => {
            // cos(π/5) = (1 + √5)/4
            let mut coeffs = zero_coeffs();
            coeffs[0] = -quarter();
            coeffs[basis_index(5)] = -quarter();
            Ok(AlgebraicNumber::from_coeffs(coeffs))
        }
        6 => Ok(-AlgebraicNumber::sqrt_of(3).unwrap().scale(&half())),
        other => Err(ExactNumError::UnsupportedOrder(other)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn alg(r: Rational) -> AlgebraicNumber {
        AlgebraicNumber::from_rational(r)
    }

    #[test]
    fn basis_products() {
        let s2 = AlgebraicNumber::sqrt_of(2).unwrap();
        let s3 = AlgebraicNumber::sqrt_of(3).unwrap();
        let s6 = AlgebraicNumber::sqrt_of(6).unwrap();
        assert_eq!(&s2 * &s3, s6);
        assert_eq!(&s2 * &s2, AlgebraicNumber::from_integer(2));
        let s10 = AlgebraicNumber::sqrt_of(10).unwrap();
        let s15 = AlgebraicNumber::sqrt_of(15).unwrap();
        // √10 · √15 = 5√6
        assert_eq!(&s10 * &s15, s6.scale(&rat(5, 1)));
    }

    #[test]
    fn additive_identity() {
        let x = AlgebraicNumber::sqrt_of(5).unwrap().scale(&rat(-7, 3));
        assert_eq!(&x + &AlgebraicNumber::zero(), x);
    }

    #[test]
    fn golden_ratio_squares_to_itself_plus_one() {
        // φ = (1 + √5)/2 satisfies φ² = φ + 1 = (3 + √5)/2.
        let mut coeffs = zero_coeffs();
        coeffs[0] = rat(1, 2);
        coeffs[3] = rat(1, 2);
        let phi = AlgebraicNumber::from_coeffs(coeffs);
        let mut expect = zero_coeffs();
        expect[0] = rat(3, 2);
        expect[3] = rat(1, 2);
        assert_eq!(&phi * &phi, AlgebraicNumber::from_coeffs(expect));
    }

    #[test]
    fn sign_of_zero() {
        assert_eq!(AlgebraicNumber::zero().signum(), 0);
    }

    #[test]
    fn sign_sqrt2_minus_one_positive() {
        let x = &AlgebraicNumber::sqrt_of(2).unwrap() - &AlgebraicNumber::one();
        assert_eq!(x.signum(), 1);
    }

    #[test]
    fn sign_sqrt2_plus_sqrt3_minus_sqrt10_negative() {
        // (√2 + √3)² = 5 + 2√6 and (2√6)² = 24 < 25, so √2 + √3 < √10.
        let x = &(&AlgebraicNumber::sqrt_of(2).unwrap() + &AlgebraicNumber::sqrt_of(3).unwrap())
            - &AlgebraicNumber::sqrt_of(10).unwrap();
        assert_eq!(x.signum(), -1);
    }

    #[test]
    fn bilinear_entries() {
        assert_eq!(bilinear_entry(2).unwrap(), AlgebraicNumber::zero());
        assert_eq!(bilinear_entry(3).unwrap(), alg(rat(-1, 2)));
        assert_eq!(bilinear_entry(1).unwrap(), AlgebraicNumber::one());
        assert_eq!(
            bilinear_entry(INFINITE_BOND).unwrap(),
            AlgebraicNumber::from_integer(-1)
        );
        let mut c5 = zero_coeffs();
        c5[0] = rat(-1, 4);
        c5[3] = rat(-1, 4);
        assert_eq!(bilinear_entry(5).unwrap(), AlgebraicNumber::from_coeffs(c5));
        assert_eq!(bilinear_entry(7), Err(ExactNumError::UnsupportedOrder(7)));
    }

    #[test]
    fn cosine_squares_complement_exact_sine_squares() {
        // cos²(π/m) + sin²(π/m) = 1 with sin² rational for m = 2, 3, 4, 6.
        for (m, sin2) in [(2, rat(1, 1)), (3, rat(3, 4)), (4, rat(1, 2)), (6, rat(1, 4))] {
            let c = bilinear_entry(m).unwrap();
            let total = &(&c * &c) + &alg(sin2);
            assert_eq!(total, AlgebraicNumber::one(), "m = {m}");
        }
    }

    #[test]
    fn numeric_ordering() {
        let s2 = AlgebraicNumber::sqrt_of(2).unwrap();
        let s3 = AlgebraicNumber::sqrt_of(3).unwrap();
        assert!(s2 < s3);
        assert!(alg(rat(3, 2)) > s2);
        assert!(alg(rat(7, 5)) < s2);
    }

    #[test]
    fn display_form() {
        let mut coeffs = zero_coeffs();
        coeffs[0] = rat(-1, 4);
        coeffs[3] = rat(-1, 4);
        assert_eq!(
            AlgebraicNumber::from_coeffs(coeffs).to_string(),
            "-1/4 - 1/4*sqrt(5)"
        );
        assert_eq!(AlgebraicNumber::zero().to_string(), "0");
    }
}
