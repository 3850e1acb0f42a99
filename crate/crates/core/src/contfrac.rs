//! Rationals and their canonical regular / negative continued-fraction
//! expansions.
//!
//! For `r/s > 1` the regular expansion `[a_1, ..., a_2m]` is canonicalized to
//! even length and the negative expansion `[[c_1, ..., c_k]]` has every
//! coefficient at least 2; both are then unique.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Errors from rational construction and expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CfError {
    /// Numerator and denominator may not both be zero.
    ZeroOverZero,
    /// Negative numerator or denominator.
    Negative,
    /// Expansions exist only for rationals strictly greater than 1.
    NotGreaterThanOne { value: String },
    /// The boundary values 0/1, 1/1 and 1/0 have no expansion.
    Boundary { value: String },
    /// Rejected continued-fraction coefficients.
    InvalidCoefficients { reason: String },
    /// Unparseable textual input.
    Parse { input: String },
}

impl fmt::Display for CfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ZeroOverZero => write!(f, "0/0 is not a rational"),
            Self::Negative => write!(f, "numerator and denominator must be nonnegative"),
            Self::NotGreaterThanOne { value } => {
                write!(
                    f,
                    "{value} requires r/s > 1; values in [0, 1] are served by the farey module"
                )
            }
            Self::Boundary { value } => {
                write!(
                    f,
                    "boundary value {value} has no continued-fraction expansion"
                )
            }
            Self::InvalidCoefficients { reason } => write!(f, "invalid coefficients: {reason}"),
            Self::Parse { input } => write!(f, "cannot parse {input:?}"),
        }
    }
}

impl std::error::Error for CfError {}

/// Nonnegative rational in lowest terms, with the three boundary values
/// 0/1, 1/1 and 1/0 representable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    r: BigInt,
    s: BigInt,
}

impl Rational {
    /// Builds `r/s`, auto-reducing. The boolean reports whether a reduction
    /// took place (non-coprime input).
    pub fn new_reduced(r: BigInt, s: BigInt) -> Result<(Self, bool), CfError> {
        if r.is_negative() || s.is_negative() {
            return Err(CfError::Negative);
        }
        if r.is_zero() && s.is_zero() {
            return Err(CfError::ZeroOverZero);
        }
        let g = r.gcd(&s);
        let reduced = !g.is_one();
        Ok((
            Self {
                r: &r / &g,
                s: &s / &g,
            },
            reduced,
        ))
    }

    pub fn new(r: u64, s: u64) -> Result<Self, CfError> {
        Ok(Self::new_reduced(BigInt::from(r), BigInt::from(s))?.0)
    }

    pub fn from_bigints(r: BigInt, s: BigInt) -> Result<Self, CfError> {
        Ok(Self::new_reduced(r, s)?.0)
    }

    pub fn infinity() -> Self {
        Self {
            r: BigInt::one(),
            s: BigInt::zero(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.r
    }

    pub fn denom(&self) -> &BigInt {
        &self.s
    }

    pub fn is_infinity(&self) -> bool {
        self.s.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.r.is_one() && self.s.is_one()
    }

    /// One of 0/1, 1/1, 1/0.
    pub fn is_boundary(&self) -> bool {
        self.is_zero() || self.is_one() || self.is_infinity()
    }

    pub fn is_greater_than_one(&self) -> bool {
        !self.is_infinity() && self.r > self.s
    }

    /// Farey mediant `(r + r') / (s + s')`.
    pub fn mediant(&self, other: &Self) -> Self {
        Self {
            r: &self.r + &other.r,
            s: &self.s + &other.s,
        }
    }

    /// `r s' - s r'`, the Farey determinant with `other`.
    pub fn farey_det(&self, other: &Self) -> BigInt {
        &self.r * &other.s - &self.s * &other.r
    }

    pub fn to_big_rational(&self) -> Option<BigRational> {
        (!self.is_infinity()).then(|| BigRational::new(self.r.clone(), self.s.clone()))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Cross-multiplication; correct for 1/0 as well since s >= 0.
        (&self.r * &other.s).cmp(&(&other.r * &self.s))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.r, self.s)
    }
}

impl FromStr for Rational {
    type Err = CfError;
    fn from_str(text: &str) -> Result<Self, CfError> {
        let parse_err = || CfError::Parse {
            input: text.to_string(),
        };
        let (r, s) = match text.split_once('/') {
            Some((r, s)) => (r.trim(), s.trim()),
            None => (text.trim(), "1"),
        };
        let r: BigInt = r.parse().map_err(|_| parse_err())?;
        let s: BigInt = s.parse().map_err(|_| parse_err())?;
        Self::from_bigints(r, s)
    }
}

/// Regular (plus-sign) expansion `[a_1, ..., a_2m]`, canonical even length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CFRegular {
    a: Vec<u64>,
}

impl CFRegular {
    pub fn new(a: Vec<u64>) -> Result<Self, CfError> {
        if a.is_empty() || !a.len().is_multiple_of(2) {
            return Err(CfError::InvalidCoefficients {
                reason: format!(
                    "regular expansion needs even positive length, got {}",
                    a.len()
                ),
            });
        }
        if a.contains(&0) {
            return Err(CfError::InvalidCoefficients {
                reason: "regular coefficients must be >= 1".into(),
            });
        }
        Ok(Self { a })
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.a
    }

    pub fn sum(&self) -> u64 {
        self.a.iter().sum()
    }

    pub fn even_position_sum(&self) -> u64 {
        self.a.iter().skip(1).step_by(2).sum()
    }

    pub fn evaluate(&self) -> Rational {
        let mut value = BigRational::from_integer(BigInt::from(*self.a.last().unwrap()));
        for &ai in self.a.iter().rev().skip(1) {
            value = BigRational::from_integer(BigInt::from(ai)) + value.recip();
        }
        Rational {
            r: value.numer().clone(),
            s: value.denom().clone(),
        }
    }
}

impl fmt::Display for CFRegular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.a.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

/// Negative (minus-sign) expansion `[[c_1, ..., c_k]]` with all `c_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CFNegative {
    c: Vec<u64>,
}

impl CFNegative {
    pub fn new(c: Vec<u64>) -> Result<Self, CfError> {
        if c.is_empty() {
            return Err(CfError::InvalidCoefficients {
                reason: "negative expansion must be nonempty".into(),
            });
        }
        if c.iter().any(|&x| x < 2) {
            return Err(CfError::InvalidCoefficients {
                reason: "negative coefficients must be >= 2".into(),
            });
        }
        Ok(Self { c })
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.c.iter().sum()
    }

    pub fn evaluate(&self) -> Rational {
        let mut value = BigRational::from_integer(BigInt::from(*self.c.last().unwrap()));
        for &ci in self.c.iter().rev().skip(1) {
            value = BigRational::from_integer(BigInt::from(ci)) - value.recip();
        }
        Rational {
            r: value.numer().clone(),
            s: value.denom().clone(),
        }
    }
}

impl fmt::Display for CFNegative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[")?;
        for (i, c) in self.c.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]]")
    }
}

fn expansion_domain(x: &Rational) -> Result<(), CfError> {
    if x.is_boundary() {
        return Err(CfError::Boundary {
            value: x.to_string(),
        });
    }
    if !x.is_greater_than_one() {
        return Err(CfError::NotGreaterThanOne {
            value: x.to_string(),
        });
    }
    Ok(())
}

/// Euclidean expansion of `x > 1`, canonicalized to even length by rewriting
/// a trailing `a_k >= 2` of an odd-length expansion into `(a_k - 1, 1)`.
pub fn expand_regular(x: &Rational) -> Result<CFRegular, CfError> {
    expansion_domain(x)?;
    let mut r = x.r.clone();
    let mut s = x.s.clone();
    let mut a: Vec<u64> = Vec::new();
    while !s.is_zero() {
        let (quot, rem) = r.div_rem(&s);
        a.push(u64::try_from(&quot).expect("coefficient fits u64"));
        r = s;
        s = rem;
    }
    if !a.len().is_multiple_of(2) {
        // The natural expansion of x > 1 never ends in 1, so the split is valid.
        let last = a.last_mut().unwrap();
        *last -= 1;
        a.push(1);
    }
    CFRegular::new(a)
}

/// Ceiling-Euclid expansion of `x > 1`: `c_1 = ceil(r/s)`, recurse on
/// `1 / (c_1 - r/s)`.
pub fn expand_negative(x: &Rational) -> Result<CFNegative, CfError> {
    expansion_domain(x)?;
    let mut r = x.r.clone();
    let mut s = x.s.clone();
    let mut c: Vec<u64> = Vec::new();
    loop {
        let ci = num_integer::Integer::div_ceil(&r, &s);
        c.push(u64::try_from(&ci).expect("coefficient fits u64"));
        let rem = &ci * &s - &r;
        if rem.is_zero() {
            return CFNegative::new(c);
        }
        r = s;
        s = rem;
    }
}

/// Conversion `(c_1,...,c_k) = (a_1+1, 2^{a_2-1}, a_3+2, 2^{a_4-1}, ...)`.
pub fn reg_to_neg(a: &CFRegular) -> CFNegative {
    let coeffs = a.coeffs();
    let mut c: Vec<u64> = Vec::new();
    for pair in coeffs.chunks(2) {
        let head = if c.is_empty() {
            pair[0] + 1
        } else {
            pair[0] + 2
        };
        c.push(head);
        c.extend(std::iter::repeat_n(2, pair[1] as usize - 1));
    }
    CFNegative::new(c).expect("conversion preserves validity")
}

/// Inverse of [`reg_to_neg`].
pub fn neg_to_reg(c: &CFNegative) -> CFRegular {
    let coeffs = c.coeffs();
    let mut a: Vec<u64> = vec![coeffs[0] - 1];
    let mut i = 1;
    loop {
        let run = coeffs[i..].iter().take_while(|&&x| x == 2).count();
        a.push(run as u64 + 1);
        i += run;
        if i == coeffs.len() {
            break;
        }
        a.push(coeffs[i] - 2);
        i += 1;
    }
    CFRegular::new(a).expect("conversion preserves validity")
}
