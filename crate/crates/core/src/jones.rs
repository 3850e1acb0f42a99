//! Jones polynomials of rational knots `C(r/s)` by three independent
//! routes, and the signed Laurent form `V(t) = +-t^p J(-1/t)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::closures::{
    build_graph, enumerate_closures, jones_constrained_counts, specialize_gf, ClosureError,
};
use crate::contfrac::{expand_negative, expand_regular, CfError, Rational};
use crate::deform::{continuant_neg, qdeform, ContinuantVar};
use crate::poly::{IntPoly, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JonesError {
    Cf(CfError),
    Closure(ClosureError),
    /// The independent routes disagreed (never expected).
    RouteMismatch {
        detail: String,
    },
}

impl fmt::Display for JonesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cf(e) => write!(f, "{e}"),
            Self::Closure(e) => write!(f, "{e}"),
            Self::RouteMismatch { detail } => write!(f, "route mismatch: {detail}"),
        }
    }
}

impl std::error::Error for JonesError {}

impl From<CfError> for JonesError {
    fn from(e: CfError) -> Self {
        Self::Cf(e)
    }
}

impl From<ClosureError> for JonesError {
    fn from(e: ClosureError) -> Self {
        Self::Closure(e)
    }
}

/// Normalized Jones polynomial of the rational knot `C(r/s)`:
/// positive coefficients, `J(1) = r`, degree `sum(a_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JonesPoly {
    pub j: IntPoly,
    pub knot_fraction: Rational,
}

impl fmt::Display for JonesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.j)
    }
}

/// `J = R - qS` where `R/S` is the q-deformation of `(r+s)/s`.
pub fn jones_polynomial(x: &Rational) -> Result<JonesPoly, JonesError> {
    if !x.is_greater_than_one() {
        return Err(JonesError::Cf(CfError::NotGreaterThanOne {
            value: x.to_string(),
        }));
    }
    let shifted = Rational::from_bigints(x.numer() + x.denom(), x.denom().clone())?;
    let d = qdeform(&shifted)?;
    let j = &d.num - &(&IntPoly::monomial(1) * &d.den);
    Ok(JonesPoly {
        j,
        knot_fraction: x.clone(),
    })
}

/// Continuant route over the negative expansion `[[c_1, ..., c_k]]`:
/// `J = K_k(c_1 + 1, c_2, ..., c_k)_q - q K_{k-1}(c_2, ..., c_k)_q`.
pub fn jones_via_continuant(x: &Rational) -> Result<JonesPoly, JonesError> {
    let c = expand_negative(x)?;
    let mut bumped = c.coeffs().to_vec();
    bumped[0] += 1;
    let head = continuant_neg(&bumped, ContinuantVar::Q);
    let tail = continuant_neg(&c.coeffs()[1..], ContinuantVar::Q).shift(1);
    let j = (&head - &tail)
        .to_int_poly()
        .expect("Jones stays polynomial");
    Ok(JonesPoly {
        j,
        knot_fraction: x.clone(),
    })
}

/// Regular-expansion continuant route: the alternating determinant with
/// modified top-left entry `-q + [a_1 + 1]_q`, scaled by
/// `q^(a_2 + a_4 + ... - 1)`. Expanding the modification,
/// `J = q^(sum even - 1) (K+(a_1 + 1, a_2, ..., a_2m)_q - q K+(a_2, ..., a_2m)_q)`.
pub fn jones_via_continuant_reg(x: &Rational) -> Result<JonesPoly, JonesError> {
    let a = expand_regular(x)?;
    let mut bumped = a.coeffs().to_vec();
    bumped[0] += 1;
    let head = crate::deform::continuant_reg(&bumped, crate::deform::StartParity::Odd);
    let tail =
        crate::deform::continuant_reg(&a.coeffs()[1..], crate::deform::StartParity::Even).shift(1);
    let j = (&head - &tail)
        .shift(a.even_position_sum() as i64 - 1)
        .to_int_poly()
        .expect("Jones stays polynomial");
    Ok(JonesPoly {
        j,
        knot_fraction: x.clone(),
    })
}

/// Counting route; both closure counts must agree.
///
/// Route one counts closures of the Jones graph with the vertex pair
/// `(1, 2)` inside or outside together; route two specializes the closure
/// generating function of the plain graph at weights `(2, 1, ..., 1)`.
pub fn jones_via_closures(x: &Rational) -> Result<JonesPoly, JonesError> {
    let a = expand_regular(x)?;
    let constrained = jones_constrained_counts(&a)?;
    let j1 = IntPoly::from_coeffs(constrained.into_iter().map(BigInt::from).collect());
    let graph = build_graph(&a);
    let (_, gf) = enumerate_closures(&graph)?;
    let mut weights = vec![1u64; graph.vertex_count()];
    weights[0] = 2;
    let j2 = specialize_gf(&gf, &weights)?;
    if j1 != j2 {
        return Err(JonesError::RouteMismatch {
            detail: format!("constrained count {j1} vs weighted closure sum {j2}"),
        });
    }
    Ok(JonesPoly {
        j: j1,
        knot_fraction: x.clone(),
    })
}

/// Sign of the Laurent normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// The signed Laurent polynomial `+-t^p J(-1/t)` with `p` in half-integer
/// units; exponents are stored doubled (in units of `t^(1/2)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedLaurent {
    pub sign: Sign,
    pub p_halves: i64,
    /// The expanded series in the variable `u = t^(1/2)`.
    pub expanded: LaurentPoly,
}

/// Formats the substitution `q -> -t^-1` scaled by `sign * t^(p/2)`.
/// The power and sign are caller-supplied; this is pure formatting.
pub fn to_signed_laurent(j: &JonesPoly, p_halves: i64, sign: Sign) -> SignedLaurent {
    let mut expanded = LaurentPoly::zero();
    for (i, c) in j.j.coeffs().iter().enumerate() {
        let mut term = c.clone();
        if i % 2 == 1 {
            term = -term;
        }
        if sign == Sign::Minus {
            term = -term;
        }
        let exp = p_halves - 2 * i as i64;
        let mono = LaurentPoly::from_parts(exp, vec![term]);
        expanded = &expanded + &mono;
    }
    SignedLaurent {
        sign,
        p_halves,
        expanded,
    }
}

impl fmt::Display for SignedLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.expanded.is_zero() {
            return write!(f, "0");
        }
        let min = self.expanded.min_exp();
        let mut first = true;
        // descending powers of t, the usual knot-table order
        for (i, c) in self.expanded.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let half_exp = min + i as i64;
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if !mag.is_one() || half_exp == 0 {
                write!(f, "{mag}")?;
            }
            match half_exp {
                0 => {}
                2 => write!(f, "t")?,
                e if e % 2 == 0 => write!(f, "t^{}", e / 2)?,
                e => write!(f, "t^({e}/2)")?,
            }
        }
        Ok(())
    }
}
