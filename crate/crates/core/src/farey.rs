//! The weighted Farey graph: weighted mediants, total-positivity
//! certificates, neighbor weights, local surgery on coefficient sequences,
//! and quiddity classification.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::contfrac::{expand_negative, CFNegative, CfError, Rational};
use crate::deform::{matrix_neg_seq, qdeform, QRational};
use crate::poly::{IntPoly, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FareyError {
    /// The two rationals are not joined by an edge of the Farey graph.
    NotNeighbors {
        left: String,
        right: String,
    },
    /// An operation required `x > y` and got the opposite order.
    OrderViolation {
        x: String,
        y: String,
    },
    /// Mediant outside the interval `[1, oo)` served by the weighted tree.
    OutsideTree {
        value: String,
    },
    /// Invalid surgery position or split.
    Surgery {
        reason: String,
    },
    Cf(CfError),
}

impl fmt::Display for FareyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotNeighbors { left, right } => {
                write!(f, "{left} and {right} are not Farey neighbors")
            }
            Self::OrderViolation { x, y } => write!(f, "expected {x} > {y}"),
            Self::OutsideTree { value } => {
                write!(f, "mediant {value} lies outside the tree interval [1, oo)")
            }
            Self::Surgery { reason } => write!(f, "surgery: {reason}"),
            Self::Cf(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FareyError {}

impl From<CfError> for FareyError {
    fn from(e: CfError) -> Self {
        Self::Cf(e)
    }
}

/// Vertex of the weighted Farey graph: a rational together with its
/// q-deformation label and negative expansion (`None` on the boundary).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareyNode {
    pub value: Rational,
    pub label: QRational,
    pub neg_expansion: Option<CFNegative>,
}

impl FareyNode {
    pub fn new(value: Rational) -> Result<Self, FareyError> {
        let label = qdeform(&value)?;
        let neg_expansion = if value.is_boundary() {
            None
        } else {
            Some(expand_negative(&value)?)
        };
        Ok(Self {
            value,
            label,
            neg_expansion,
        })
    }
}

/// Weighted Farey sum of two neighbors `left < right`.
///
/// The child's label is built as `(R_L + q^l R_R) / (S_L + q^l S_R)` where
/// `l` is one less than the last coefficient of the child's negative
/// expansion; the sides of the new triangle carry weights `(1, q^l, q^(l-1))`.
pub fn weighted_mediant(
    left: &FareyNode,
    right: &FareyNode,
) -> Result<(FareyNode, u64), FareyError> {
    if left.value >= right.value {
        return Err(FareyError::OrderViolation {
            x: right.value.to_string(),
            y: left.value.to_string(),
        });
    }
    if right.value.farey_det(&left.value) != BigInt::one() {
        return Err(FareyError::NotNeighbors {
            left: left.value.to_string(),
            right: right.value.to_string(),
        });
    }
    let value = left.value.mediant(&right.value);
    if !value.is_greater_than_one() {
        return Err(FareyError::OutsideTree {
            value: value.to_string(),
        });
    }
    let expansion = expand_negative(&value)?;
    let ell = expansion.coeffs().last().unwrap() - 1;
    let num = laurent_sum(&left.label.num, &right.label.num, ell);
    let den = laurent_sum(&left.label.den, &right.label.den, ell);
    let node = FareyNode {
        label: QRational {
            num,
            den,
            value: value.clone(),
        },
        value,
        neg_expansion: Some(expansion),
    };
    Ok((node, ell))
}

fn laurent_sum(a: &IntPoly, b: &IntPoly, ell: u64) -> IntPoly {
    let sum = &LaurentPoly::from(a) + &LaurentPoly::from(b).shift(ell as i64);
    sum.to_int_poly().expect("weighted sum stays polynomial")
}

/// Node of the breadth-first weighted Stern-Brocot tree on `[1, oo)`.
#[derive(Debug, Clone)]
pub struct FareyTreeNode {
    pub node: FareyNode,
    pub depth: u32,
    pub left_parent: Rational,
    pub right_parent: Rational,
    /// Exponent `l` of the right-edge weight `q^l`; the left edge has
    /// weight 1 and the top edge `q^(l-1)`.
    pub edge_exponent: u64,
}

/// Breadth-first weighted Farey tree rooted at the triangle
/// `(1/1, 2/1, 1/0)`; depth 0 holds the root triangle only.
pub fn farey_tree(depth: u32) -> Vec<FareyTreeNode> {
    let one = FareyNode::new(Rational::new(1, 1).expect("1/1")).expect("boundary node");
    let inf = FareyNode::new(Rational::infinity()).expect("boundary node");
    let (two, ell) = weighted_mediant(&one, &inf).expect("root mediant");
    let mut out = vec![FareyTreeNode {
        node: two.clone(),
        depth: 0,
        left_parent: one.value.clone(),
        right_parent: inf.value.clone(),
        edge_exponent: ell,
    }];
    let mut queue: VecDeque<(FareyNode, FareyNode, u32)> = VecDeque::new();
    queue.push_back((one, two.clone(), 1));
    queue.push_back((two, inf, 1));
    while let Some((left, right, d)) = queue.pop_front() {
        if d > depth {
            continue;
        }
        let (child, ell) = weighted_mediant(&left, &right).expect("tree mediant");
        out.push(FareyTreeNode {
            node: child.clone(),
            depth: d,
            left_parent: left.value.clone(),
            right_parent: right.value.clone(),
            edge_exponent: ell,
        });
        queue.push_back((left, child.clone(), d + 1));
        queue.push_back((child, right, d + 1));
    }
    out
}

/// The total-positivity certificate `X = R_x S_y - S_x R_y` for `x >= y`;
/// equal inputs give the zero polynomial, reversed order is an error.
pub fn positivity_diff(x: &Rational, y: &Rational) -> Result<IntPoly, FareyError> {
    if x < y {
        return Err(FareyError::OrderViolation {
            x: x.to_string(),
            y: y.to_string(),
        });
    }
    if x == y {
        return Ok(IntPoly::zero());
    }
    let qx = qdeform(x)?;
    let qy = qdeform(y)?;
    Ok(&(&qx.num * &qy.den) - &(&qx.den * &qy.num))
}

/// Exponent `alpha` with `positivity_diff(x, y) = q^alpha` for Farey
/// neighbors `x > y`.
///
/// When `r_x > r_y` the larger fraction is the mediant child and
/// `alpha = deg R_x`, the weight `sum(c) - k` of its negative expansion.
/// Otherwise `y` is the child and `x` its truncation, giving
/// `alpha = c_1 + ... + c_(k-1) - k + 1` over `y`'s expansion.
pub fn neighbor_weight(x: &Rational, y: &Rational) -> Result<u64, FareyError> {
    if x <= y {
        return Err(FareyError::OrderViolation {
            x: x.to_string(),
            y: y.to_string(),
        });
    }
    if x.farey_det(y) != BigInt::one() {
        return Err(FareyError::NotNeighbors {
            left: y.to_string(),
            right: x.to_string(),
        });
    }
    if x.numer() > y.numer() {
        if x.is_boundary() {
            return Ok(0);
        }
        let c = expand_negative(x)?;
        Ok(c.sum() - c.len() as u64)
    } else if y.is_boundary() {
        // only (1/0, 1/1) reaches here
        Ok(0)
    } else {
        let c = expand_negative(y)?;
        let coeffs = c.coeffs();
        let partial: u64 = coeffs[..coeffs.len() - 1].iter().sum();
        Ok(partial + 1 - c.len() as u64)
    }
}

/// Inserts a 1 at position `i` (1-based, strictly inside), bumping both
/// neighbors: `(..., c_i + 1, 1, c_{i+1} + 1, ...)`.
///
/// Satisfies `M_q(new) = q M_q(old)`.
pub fn surgery_insert(c: &[u64], position: usize) -> Result<Vec<u64>, FareyError> {
    if position == 0 || position >= c.len() {
        return Err(FareyError::Surgery {
            reason: format!("insert position {position} not in 1..{}", c.len()),
        });
    }
    let mut out = Vec::with_capacity(c.len() + 1);
    out.extend_from_slice(&c[..position - 1]);
    out.push(c[position - 1] + 1);
    out.push(1);
    out.push(c[position] + 1);
    out.extend_from_slice(&c[position + 1..]);
    debug_assert_eq!(
        matrix_neg_seq(&out),
        matrix_neg_seq(c).scale(&LaurentPoly::monomial(1))
    );
    Ok(out)
}

/// Breaks `c_i` into `(c'_i, 1, 1, c''_i)` with `c'_i + c''_i = c_i + 1`.
///
/// Satisfies `M_q(new) = -M_q(old)`.
pub fn surgery_break(c: &[u64], position: usize, split: u64) -> Result<Vec<u64>, FareyError> {
    if position == 0 || position > c.len() {
        return Err(FareyError::Surgery {
            reason: format!("break position {position} not in 1..={}", c.len()),
        });
    }
    let ci = c[position - 1];
    if split == 0 || split > ci {
        return Err(FareyError::Surgery {
            reason: format!("split {split} must satisfy 1 <= split <= {ci}"),
        });
    }
    let other = ci + 1 - split;
    let mut out = Vec::with_capacity(c.len() + 3);
    out.extend_from_slice(&c[..position - 1]);
    out.extend([split, 1, 1, other]);
    out.extend_from_slice(&c[position..]);
    debug_assert_eq!(matrix_neg_seq(&out), matrix_neg_seq(c).neg());
    Ok(out)
}

/// Outcome of testing `M_q(c_1, ..., c_n) = +-q^(n-3) Id`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuiddityClass {
    /// `M_q = -q^(n-3) Id`: the quiddity of a triangulated n-gon.
    Triangulation,
    /// `M_q = +q^(n-3) Id`: the quiddity of a 3d-dissected n-gon.
    ThreeDDissection,
    Neither,
}

impl fmt::Display for QuiddityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Triangulation => write!(f, "Triangulation"),
            Self::ThreeDDissection => write!(f, "ThreeDDissection"),
            Self::Neither => write!(f, "Neither"),
        }
    }
}

/// Classifies a positive integer sequence of length `n >= 3` by comparing
/// `M_q(c)` against `+-q^(n-3) Id`.
pub fn quiddity_classify(c: &[u64]) -> QuiddityClass {
    if c.len() < 3 || c.contains(&0) {
        return QuiddityClass::Neither;
    }
    let m = matrix_neg_seq(c);
    let expected = c.len() as i64 - 3;
    match m.scalar_of_identity() {
        Some((e, coeff)) if e == expected && coeff == BigInt::from(-1) => {
            QuiddityClass::Triangulation
        }
        Some((e, coeff)) if e == expected && coeff == BigInt::one() => {
            QuiddityClass::ThreeDDissection
        }
        _ => QuiddityClass::Neither,
    }
}
