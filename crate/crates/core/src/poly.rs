//! Dense polynomials and Laurent polynomials in one variable `q` with
//! arbitrary-precision integer coefficients.
//!
//! Coefficient sums of the polynomials handled here equal continued-fraction
//! numerators, which grow exponentially in the expansion length, so all
//! arithmetic is exact over `BigInt`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Errors raised by polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// `exact_divide` left a nonzero remainder.
    NotDivisible { remainder: IntPoly },
    /// Division by the zero polynomial.
    ZeroDivisor,
    /// Evaluation of a negative power of `q` at `q = 0`.
    NegativePowerAtZero,
    /// A Laurent polynomial with negative exponents cannot become an `IntPoly`.
    NegativeExponent { min_exp: i64 },
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotDivisible { remainder } => {
                write!(f, "not divisible: remainder {remainder}")
            }
            Self::ZeroDivisor => write!(f, "division by the zero polynomial"),
            Self::NegativePowerAtZero => {
                write!(f, "cannot evaluate a negative power of q at q = 0")
            }
            Self::NegativeExponent { min_exp } => {
                write!(f, "minimum exponent {min_exp} is negative")
            }
        }
    }
}

impl std::error::Error for PolyError {}

/// Polynomial in `q` over `BigInt`, stored dense in ascending exponent order.
///
/// `coeffs[i]` is the coefficient of `q^i`. The highest stored coefficient is
/// nonzero; the zero polynomial is the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// Builds a polynomial from ascending coefficients, dropping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `q^exp`.
    pub fn monomial(exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = BigInt::one();
        Self { coeffs }
    }

    /// The q-integer `[a]_q = 1 + q + ... + q^(a-1)`.
    pub fn q_integer(a: u64) -> Self {
        Self {
            coeffs: vec![BigInt::one(); a as usize],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// `Some(exponent)` when the polynomial is a single term with coefficient 1.
    pub fn monic_monomial_exp(&self) -> Option<usize> {
        let nonzero: Vec<usize> = (0..self.coeffs.len())
            .filter(|&i| !self.coeffs[i].is_zero())
            .collect();
        match nonzero.as_slice() {
            [e] if self.coeffs[*e].is_one() => Some(*e),
            _ => None,
        }
    }

    /// Horner evaluation at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Coefficient mirror: `q^deg * p(1/q)`.
    pub fn reversed(&self) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Exact division over `Z[q]`: returns the quotient iff `den` divides
    /// `self` with integer coefficients, otherwise the remainder reached when
    /// division stalls.
    pub fn exact_divide(&self, den: &IntPoly) -> Result<IntPoly, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        let dd = den.coeffs.len() - 1;
        let dlead = &den.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot: Vec<BigInt> = Vec::new();
        while rem.len() > dd || (rem.len() == dd + 1 && dd == 0) {
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
            let shift = rem.len() - 1 - dd;
            let (c, r) = num_integer::div_rem(rem.last().unwrap().clone(), dlead.clone());
            if !r.is_zero() {
                // A fractional quotient coefficient: not divisible over Z[q].
                return Err(PolyError::NotDivisible {
                    remainder: IntPoly::from_coeffs(rem),
                });
            }
            if quot.len() < shift + 1 {
                quot.resize(shift + 1, BigInt::zero());
            }
            quot[shift] = c.clone();
            for (i, dc) in den.coeffs.iter().enumerate() {
                rem[shift + i] -= &c * dc;
            }
        }
        let remainder = IntPoly::from_coeffs(rem);
        if remainder.is_zero() {
            Ok(IntPoly::from_coeffs(quot))
        } else {
            Err(PolyError::NotDivisible { remainder })
        }
    }

    /// True iff the coefficients are nondecreasing and then nonincreasing.
    pub fn is_unimodal(&self) -> bool {
        let mut i = 1;
        let n = self.coeffs.len();
        while i < n && self.coeffs[i - 1] <= self.coeffs[i] {
            i += 1;
        }
        while i < n && self.coeffs[i - 1] >= self.coeffs[i] {
            i += 1;
        }
        i >= n
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn has_positive_coeffs(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(|c| c.is_positive())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, 0, &self.coeffs, false)
    }
}

/// Laurent polynomial in `q`: `coeffs[i]` is the coefficient of
/// `q^(min_exp + i)`.
///
/// Normal form: the zero polynomial stores `min_exp = 0` and no coefficients;
/// otherwise the first and last stored coefficients are nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `q^exp`.
    pub fn monomial(exp: i64) -> Self {
        Self {
            min_exp: exp,
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_parts(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { min_exp, coeffs };
        p.normalize();
        p
    }

    /// The q-integer `[a]_q = (q^a - 1)/(q - 1)` for any integer `a`.
    ///
    /// For `a >= 0` this is `1 + q + ... + q^(a-1)`; for negative `a` it is
    /// `-(q^a + ... + q^-1)`, so that `[a]_q + q^a [b]_q = [a+b]_q` holds for
    /// all integers.
    pub fn q_integer(a: i64) -> Self {
        if a >= 0 {
            Self::from(IntPoly::q_integer(a as u64))
        } else {
            Self {
                min_exp: a,
                coeffs: vec![-BigInt::one(); (-a) as usize],
            }
        }
    }

    /// `[a]_{q^-1}`.
    pub fn q_integer_inv(a: i64) -> Self {
        Self::q_integer(a).subst_q_inverse()
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_exp += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_exp + self.coeffs.len() as i64 - 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let i = exp - self.min_exp;
        if i < 0 {
            return BigInt::zero();
        }
        self.coeffs
            .get(i as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Substitutes `q -> q^-1`.
    pub fn subst_q_inverse(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self {
            min_exp: -(self.min_exp + self.coeffs.len() as i64 - 1),
            coeffs,
        }
    }

    /// `Some((exponent, coefficient))` when the polynomial has one term.
    pub fn single_term(&self) -> Option<(i64, BigInt)> {
        (self.coeffs.len() == 1).then(|| (self.min_exp, self.coeffs[0].clone()))
    }

    pub fn to_int_poly(&self) -> Result<IntPoly, PolyError> {
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        if self.min_exp < 0 {
            return Err(PolyError::NegativeExponent {
                min_exp: self.min_exp,
            });
        }
        let mut coeffs = vec![BigInt::zero(); self.min_exp as usize];
        coeffs.extend(self.coeffs.iter().cloned());
        Ok(IntPoly::from_coeffs(coeffs))
    }

    pub fn eval_rational(&self, x: &BigRational) -> Result<BigRational, PolyError> {
        if self.min_exp < 0 {
            if x.is_zero() {
                return Err(PolyError::NegativePowerAtZero);
            }
            let positive = self.shift(-self.min_exp);
            let v = positive.eval_rational(x)?;
            return Ok(v / pow_rational(x, -self.min_exp));
        }
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        Ok(acc * pow_rational(x, self.min_exp))
    }

    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

fn pow_rational(x: &BigRational, e: i64) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

impl From<IntPoly> for LaurentPoly {
    fn from(p: IntPoly) -> Self {
        Self::from_parts(0, p.coeffs)
    }
}

impl From<&IntPoly> for LaurentPoly {
    fn from(p: &IntPoly) -> Self {
        Self::from_parts(0, p.coeffs.clone())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let min = self.min_exp.min(rhs.min_exp);
        let max =
            (self.min_exp + self.coeffs.len() as i64).max(rhs.min_exp + rhs.coeffs.len() as i64);
        let mut coeffs = vec![BigInt::zero(); (max - min) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_exp - min) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.min_exp - min) as usize + i] += c;
        }
        LaurentPoly::from_parts(min, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_parts(self.min_exp + rhs.min_exp, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.min_exp, &self.coeffs, false)
    }
}

/// Renders coefficients in ascending powers, either plain text or LaTeX.
pub(crate) fn fmt_terms(
    f: &mut fmt::Formatter<'_>,
    min_exp: i64,
    coeffs: &[BigInt],
    latex: bool,
) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let exp = min_exp + i as i64;
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
        } else if latex {
            // LaTeX output is compact
            write!(f, "{}", if c.is_negative() { "-" } else { "+" })?;
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if mag.is_one() && exp != 0 {
            // coefficient 1 is implicit
        } else {
            write!(f, "{mag}")?;
        }
        match exp {
            0 => {}
            1 => write!(f, "q")?,
            e if latex => write!(f, "q^{{{e}}}")?,
            e => write!(f, "q^{e}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Wrapper that displays a polynomial in LaTeX syntax.
pub struct LatexPoly<'a>(pub &'a LaurentPoly);

impl fmt::Display for LatexPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.0.min_exp, &self.0.coeffs, true)
    }
}

/// JSON form of a (Laurent) polynomial. Coefficients travel as decimal
/// strings so 64-bit consumers cannot silently truncate them.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolyJson {
    pub min_exp: i64,
    pub coeffs: Vec<String>,
}

impl From<&LaurentPoly> for PolyJson {
    fn from(p: &LaurentPoly) -> Self {
        Self {
            min_exp: p.min_exp,
            coeffs: p.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }
}

impl From<&IntPoly> for PolyJson {
    fn from(p: &IntPoly) -> Self {
        Self {
            min_exp: 0,
            coeffs: p.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }
}

impl TryFrom<&PolyJson> for LaurentPoly {
    type Error = num_bigint::ParseBigIntError;
    fn try_from(j: &PolyJson) -> Result<Self, Self::Error> {
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LaurentPoly::from_parts(j.min_exp, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn ip(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    #[test]
    fn mul_basic() {
        // (1+q)(1+q+q^2) = 1+2q+2q^2+q^3
        assert_eq!(&ip(&[1, 1]) * &ip(&[1, 1, 1]), ip(&[1, 2, 2, 1]));
    }

    #[test]
    fn three_q_times_two_q_minus_q_squared() {
        // [3]_q [2]_q - q^2, the numerator of the q-deformation of 5/2
        let prod = &ip(&[1, 1, 1]) * &ip(&[1, 1]);
        let diff = &prod - &IntPoly::monomial(2);
        assert_eq!(diff, ip(&[1, 2, 1, 1]));
    }

    #[test]
    fn shift_negative() {
        let p = LaurentPoly::from(ip(&[1, 1])).shift(-1);
        assert_eq!(p.min_exp(), -1);
        assert_eq!(p.max_exp(), Some(0));
    }

    #[test]
    fn evaluate_examples() {
        let p = ip(&[1, 2, 1, 1]);
        assert_eq!(p.eval_int(&BigInt::from(1)), BigInt::from(5));
        assert_eq!(p.eval_int(&BigInt::from(-1)), BigInt::from(-1));
        assert_eq!(ip(&[1, 1]).eval_int(&BigInt::from(-1)), BigInt::zero());
        assert_eq!(IntPoly::zero().eval_int(&BigInt::from(17)), BigInt::zero());
    }

    #[test]
    fn evaluate_negative_power_at_zero_fails() {
        let p = LaurentPoly::monomial(-2);
        assert_eq!(
            p.eval_rational(&BigRational::zero()),
            Err(PolyError::NegativePowerAtZero)
        );
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(
            p.eval_rational(&half).unwrap(),
            BigRational::from_integer(BigInt::from(4))
        );
    }

    #[test]
    fn exact_divide_examples() {
        // (1+q)(1+q^2) = 1+q+q^2+q^3
        assert_eq!(
            ip(&[1, 1, 1, 1]).exact_divide(&ip(&[1, 1])).unwrap(),
            ip(&[1, 0, 1])
        );
        match ip(&[1, 2, 1, 1]).exact_divide(&ip(&[1, 1])) {
            Err(PolyError::NotDivisible { remainder }) => assert!(!remainder.is_zero()),
            other => panic!("expected NotDivisible, got {other:?}"),
        }
        let p = ip(&[3, 1, 4]);
        assert_eq!(p.exact_divide(&IntPoly::one()).unwrap(), p);
        assert_eq!(
            IntPoly::one().exact_divide(&IntPoly::zero()),
            Err(PolyError::ZeroDivisor)
        );
    }

    #[test]
    fn exact_divide_nonmonic() {
        let den = ip(&[2, 2]);
        let quot = ip(&[1, 0, 3]);
        let num = &den * &quot;
        assert_eq!(num.exact_divide(&den).unwrap(), quot);
        assert!(ip(&[1, 1]).exact_divide(&ip(&[2])).is_err());
    }

    #[test]
    fn unimodal_examples() {
        assert!(ip(&[1, 2, 1, 1]).is_unimodal());
        assert!(!ip(&[1, 1, 2, 1, 2]).is_unimodal());
        assert!(ip(&[1]).is_unimodal());
        assert!(IntPoly::zero().is_unimodal());
        assert!(ip(&[1, 3, 3, 2]).is_unimodal());
    }

    #[test]
    fn q_integer_signed() {
        assert_eq!(LaurentPoly::q_integer(3), LaurentPoly::from(ip(&[1, 1, 1])));
        assert_eq!(LaurentPoly::q_integer(0), LaurentPoly::zero());
        // [-1]_q = -q^-1
        let m1 = LaurentPoly::q_integer(-1);
        assert_eq!(m1.single_term(), Some((-1, BigInt::from(-1))));
        // [a]_q + q^a [b]_q = [a+b]_q
        for a in -4i64..=4 {
            for b in -4i64..=4 {
                let lhs = &LaurentPoly::q_integer(a) + &LaurentPoly::q_integer(b).shift(a);
                assert_eq!(lhs, LaurentPoly::q_integer(a + b), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn mul_then_divide_roundtrip_seeded() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..1000 {
            let len_a = rng.gen_range(1..6);
            let len_b = rng.gen_range(1..6);
            let a = IntPoly::from_coeffs(
                (0..len_a)
                    .map(|_| BigInt::from(rng.gen_range(-9i64..=9)))
                    .collect(),
            );
            let b = IntPoly::from_coeffs(
                (0..len_b)
                    .map(|_| BigInt::from(rng.gen_range(-9i64..=9)))
                    .collect(),
            );
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let prod = &a * &b;
            assert_eq!(prod.exact_divide(&b).unwrap(), a);
            assert_eq!(prod.exact_divide(&a).unwrap(), b);
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(ip(&[1, 2, 1, 1]).to_string(), "1 + 2q + q^2 + q^3");
        assert_eq!(ip(&[]).to_string(), "0");
        assert_eq!(ip(&[0, -1, 0, 2]).to_string(), "-q + 2q^3");
        let l = LaurentPoly::from_parts(-1, vec![BigInt::one(), BigInt::one()]);
        assert_eq!(l.to_string(), "q^-1 + 1");
        assert_eq!(format!("{}", LatexPoly(&l)), "q^{-1}+1");
    }

    #[test]
    fn json_roundtrip() {
        let p =
            LaurentPoly::from_parts(-2, vec![BigInt::from(3), BigInt::zero(), BigInt::from(-7)]);
        let j = PolyJson::from(&p);
        let back = LaurentPoly::try_from(&j).unwrap();
        assert_eq!(p, back);
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.contains("\"min_exp\":-2"));
    }

    fn arb_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..=20, 0..8).prop_map(|v| IntPoly::from_i64s(&v))
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
        (prop::collection::vec(-20i64..=20, 0..8), -5i64..=5).prop_map(|(v, m)| {
            LaurentPoly::from_parts(m, v.into_iter().map(BigInt::from).collect())
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, IntPoly::zero());
        }

        #[test]
        fn laurent_ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(a.shift(3).shift(-3), a);
        }

        #[test]
        fn evaluation_is_ring_homomorphism(a in arb_poly(), b in arb_poly(), n in -5i64..=5, d in 1i64..=5) {
            let x = BigRational::new(BigInt::from(n), BigInt::from(d));
            let prod = &a * &b;
            prop_assert_eq!(prod.eval_rational(&x), a.eval_rational(&x) * b.eval_rational(&x));
            let sum = &a + &b;
            prop_assert_eq!(sum.eval_rational(&x), a.eval_rational(&x) + b.eval_rational(&x));
        }

        #[test]
        fn subst_q_inverse_involution(a in arb_laurent()) {
            prop_assert_eq!(a.subst_q_inverse().subst_q_inverse(), a);
        }
    }
}
