//! The three computation engines for the q-deformation of a rational:
//! convergent recurrences, matrices of convergents over the deformed
//! generators, and q-continuants.

use std::fmt;

use num_bigint::BigInt;

use serde::{Deserialize, Serialize};

use crate::contfrac::{expand_negative, CFNegative, CFRegular, CfError, Rational};
use crate::poly::{IntPoly, LatexPoly, LaurentPoly, PolyJson};

/// A q-deformed rational `R(q) / S(q)` together with its classical value.
///
/// For non-boundary values `R` and `S` are coprime with positive integer
/// coefficients, `R(1) = r` and `S(1) = s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QRational {
    pub num: IntPoly,
    pub den: IntPoly,
    pub value: Rational,
}

impl QRational {
    pub fn latex(&self) -> String {
        format!(
            "\\frac{{{}}}{{{}}}",
            LatexPoly(&LaurentPoly::from(&self.num)),
            LatexPoly(&LaurentPoly::from(&self.den))
        )
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// JSON form of a [`QRational`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QRationalJson {
    pub r: String,
    pub s: String,
    pub num: PolyJson,
    pub den: PolyJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduced: Option<bool>,
}

impl QRationalJson {
    pub fn new(q: &QRational, reduced: Option<bool>) -> Self {
        Self {
            r: q.value.numer().to_string(),
            s: q.value.denom().to_string(),
            num: PolyJson::from(&q.num),
            den: PolyJson::from(&q.den),
            reduced,
        }
    }
}

/// Runs the convergent recurrence
/// `R_{i+1} = [c_{i+1}]_q R_i - q^(c_i - 1) R_{i-1}` on arbitrary positive
/// coefficients, returning the final numerator and denominator polynomials.
///
/// Seeds are `(R_0, R_1) = (1, [c_1]_q)` and `(S_0, S_1) = (0, 1)`.
fn convergent_recurrence(c: &[u64]) -> (IntPoly, IntPoly) {
    let (mut r_prev, mut r_cur) = (IntPoly::one(), IntPoly::q_integer(c[0]));
    let (mut s_prev, mut s_cur) = (IntPoly::zero(), IntPoly::one());
    for i in 1..c.len() {
        let coeff = IntPoly::q_integer(c[i]);
        let back = IntPoly::monomial(c[i - 1] as usize - 1);
        let r_next = &(&coeff * &r_cur) - &(&back * &r_prev);
        let s_next = &(&coeff * &s_cur) - &(&back * &s_prev);
        r_prev = std::mem::replace(&mut r_cur, r_next);
        s_prev = std::mem::replace(&mut s_cur, s_next);
    }
    (r_cur, s_cur)
}

/// q-deformation of a negative continued fraction via the linear recurrence.
pub fn qdeform_neg(c: &CFNegative) -> QRational {
    let (num, den) = convergent_recurrence(c.coeffs());
    QRational {
        num,
        den,
        value: c.evaluate(),
    }
}

/// q-deformation of a regular continued fraction via the normalized matrix
/// of convergents: the first column of `q^(a_2+a_4+...) M+_q` is
/// `(qR, qS)`.
pub fn qdeform_reg(a: &CFRegular) -> QRational {
    let m = matrix_reg_normalized(a);
    let num = m
        .entry(0, 0)
        .shift(-1)
        .to_int_poly()
        .expect("qR has min exponent 1");
    let den = m
        .entry(1, 0)
        .shift(-1)
        .to_int_poly()
        .expect("qS has min exponent 1");
    QRational {
        num,
        den,
        value: a.evaluate(),
    }
}

/// q-deformation of a rational, canonical route. Boundary values map to
/// `1/0 -> 1/0`, `0/1 -> 0/1`, `1/1 -> 1/1`; values in (0, 1) are rejected.
pub fn qdeform(x: &Rational) -> Result<QRational, CfError> {
    if x.is_boundary() {
        let (num, den) = if x.is_infinity() {
            (IntPoly::one(), IntPoly::zero())
        } else if x.is_zero() {
            (IntPoly::zero(), IntPoly::one())
        } else {
            (IntPoly::one(), IntPoly::one())
        };
        return Ok(QRational {
            num,
            den,
            value: x.clone(),
        });
    }
    Ok(qdeform_neg(&expand_negative(x)?))
}

/// 2x2 matrix over Laurent polynomials in `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2 {
    e: [[LaurentPoly; 2]; 2],
}

impl Mat2 {
    pub fn new(e00: LaurentPoly, e01: LaurentPoly, e10: LaurentPoly, e11: LaurentPoly) -> Self {
        Self {
            e: [[e00, e01], [e10, e11]],
        }
    }

    pub fn identity() -> Self {
        Self::new(
            LaurentPoly::one(),
            LaurentPoly::zero(),
            LaurentPoly::zero(),
            LaurentPoly::one(),
        )
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.e[i][j]
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let mut e: [[LaurentPoly; 2]; 2] = Default::default();
        for (i, row) in e.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = &(&self.e[i][0] * &rhs.e[0][j]) + &(&self.e[i][1] * &rhs.e[1][j]);
            }
        }
        Mat2 { e }
    }

    pub fn det(&self) -> LaurentPoly {
        &(&self.e[0][0] * &self.e[1][1]) - &(&self.e[0][1] * &self.e[1][0])
    }

    pub fn scale(&self, c: &LaurentPoly) -> Mat2 {
        Mat2 {
            e: [
                [&self.e[0][0] * c, &self.e[0][1] * c],
                [&self.e[1][0] * c, &self.e[1][1] * c],
            ],
        }
    }

    pub fn neg(&self) -> Mat2 {
        Mat2 {
            e: [
                [-&self.e[0][0], -&self.e[0][1]],
                [-&self.e[1][0], -&self.e[1][1]],
            ],
        }
    }

    /// `Some(scalar)` when the matrix is a scalar multiple of the identity
    /// by a single Laurent term.
    pub fn scalar_of_identity(&self) -> Option<(i64, BigInt)> {
        if !self.e[0][1].is_zero() || !self.e[1][0].is_zero() || self.e[0][0] != self.e[1][1] {
            return None;
        }
        self.e[0][0].single_term()
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.e[0][0], self.e[0][1], self.e[1][0], self.e[1][1]
        )
    }
}

/// One factor `R_q^c S_q = [[ [c]_q, -q^(c-1) ], [1, 0]]` of the negative
/// matrix of convergents; defined for any `c >= 1`.
fn neg_factor(c: u64) -> Mat2 {
    Mat2::new(
        LaurentPoly::q_integer(c as i64),
        -&LaurentPoly::monomial(c as i64 - 1),
        LaurentPoly::one(),
        LaurentPoly::zero(),
    )
}

/// Matrix of convergents `M_q(c_1, ..., c_k)`, accepting any positive
/// coefficients (quiddity sequences contain 1s).
pub fn matrix_neg_seq(c: &[u64]) -> Mat2 {
    let mut m = Mat2::identity();
    for &ci in c {
        m = m.mul(&neg_factor(ci));
    }
    m
}

pub fn matrix_neg(c: &CFNegative) -> Mat2 {
    matrix_neg_seq(c.coeffs())
}

/// Matrix of convergents `M+_q(a_1, ..., a_2m)` with alternating
/// `q`/`q^-1` factors.
pub fn matrix_reg(a: &CFRegular) -> Mat2 {
    let mut m = Mat2::identity();
    for (i, &ai) in a.coeffs().iter().enumerate() {
        let factor = if i % 2 == 0 {
            Mat2::new(
                LaurentPoly::q_integer(ai as i64),
                LaurentPoly::monomial(ai as i64),
                LaurentPoly::one(),
                LaurentPoly::zero(),
            )
        } else {
            Mat2::new(
                LaurentPoly::q_integer_inv(ai as i64),
                LaurentPoly::monomial(-(ai as i64)),
                LaurentPoly::one(),
                LaurentPoly::zero(),
            )
        };
        m = m.mul(&factor);
    }
    m
}

/// `q^(a_2 + a_4 + ...) M+_q(a)`, whose entries are plain polynomials.
pub fn matrix_reg_normalized(a: &CFRegular) -> Mat2 {
    matrix_reg(a).scale(&LaurentPoly::monomial(a.even_position_sum() as i64))
}

/// The q-deformed generators of PSL(2, Z).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    R,
    L,
    S,
}

/// `R_q^a`, `L_q^a` or `S_q^a` for any integer power.
pub fn generator_power(kind: Generator, power: i64) -> Mat2 {
    match kind {
        Generator::R => Mat2::new(
            LaurentPoly::monomial(power),
            LaurentPoly::q_integer(power),
            LaurentPoly::zero(),
            LaurentPoly::one(),
        ),
        Generator::L => Mat2::new(
            LaurentPoly::one(),
            LaurentPoly::zero(),
            LaurentPoly::q_integer_inv(power),
            LaurentPoly::monomial(-power),
        ),
        Generator::S => {
            let s = Mat2::new(
                LaurentPoly::zero(),
                -&LaurentPoly::monomial(-1),
                LaurentPoly::one(),
                LaurentPoly::zero(),
            );
            let s_inv = Mat2::new(
                LaurentPoly::zero(),
                LaurentPoly::one(),
                -&LaurentPoly::monomial(1),
                LaurentPoly::zero(),
            );
            let (base, n) = if power >= 0 {
                (s, power)
            } else {
                (s_inv, -power)
            };
            let mut m = Mat2::identity();
            for _ in 0..n {
                m = m.mul(&base);
            }
            m
        }
    }
}

/// Which variable a continuant is computed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContinuantVar {
    Q,
    QInverse,
}

/// q-continuant `K_k(c_1, ..., c_k)_q`, the tridiagonal determinant with
/// diagonal `[c_i]_q` and corner entries `q^(c_i - 1)` / 1, computed by the
/// three-term recurrence `K_i = [c_i]_q K_{i-1} - q^(c_{i-1}-1) K_{i-2}`.
///
/// Coefficients `c_i >= 1` are accepted; an empty list gives `K_0 = 1`.
pub fn continuant_neg(c: &[u64], var: ContinuantVar) -> LaurentPoly {
    let mut k_prev = LaurentPoly::one();
    let mut k_cur = LaurentPoly::one();
    for (i, &ci) in c.iter().enumerate() {
        let next = if i == 0 {
            LaurentPoly::q_integer(ci as i64)
        } else {
            let back = LaurentPoly::monomial(c[i - 1] as i64 - 1);
            &(&LaurentPoly::q_integer(ci as i64) * &k_cur) - &(&back * &k_prev)
        };
        k_prev = std::mem::replace(&mut k_cur, next);
    }
    match var {
        ContinuantVar::Q => k_cur,
        ContinuantVar::QInverse => k_cur.subst_q_inverse(),
    }
}

/// Position parity of the first coefficient inside the alternating
/// `K+` determinant: odd positions carry `[a]_q`, even carry `[a]_{q^-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StartParity {
    Odd,
    Even,
}

/// q-continuant `K+(a_i, ..., a_j)_q` of the regular expansion, parity-aware.
///
/// The recurrence is `K+_t = d_t K+_{t-1} + u_{t-1} K+_{t-2}` with
/// `d_t = [a_t]` and `u_t = q^(+-a_t)` alternating with position parity.
pub fn continuant_reg(a: &[u64], start: StartParity) -> LaurentPoly {
    let odd_at = |idx: usize| match start {
        StartParity::Odd => idx.is_multiple_of(2),
        StartParity::Even => idx % 2 == 1,
    };
    let mut k_prev = LaurentPoly::one();
    let mut k_cur = LaurentPoly::one();
    for (i, &ai) in a.iter().enumerate() {
        let diag = if odd_at(i) {
            LaurentPoly::q_integer(ai as i64)
        } else {
            LaurentPoly::q_integer_inv(ai as i64)
        };
        let next = if i == 0 {
            diag
        } else {
            let up = if odd_at(i - 1) {
                LaurentPoly::monomial(a[i - 1] as i64)
            } else {
                LaurentPoly::monomial(-(a[i - 1] as i64))
            };
            &(&diag * &k_cur) + &(&up * &k_prev)
        };
        k_prev = std::mem::replace(&mut k_cur, next);
    }
    k_cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contfrac::{expand_regular, reg_to_neg};
    use num_traits::One;

    fn rat(r: u64, s: u64) -> Rational {
        Rational::new(r, s).unwrap()
    }

    fn cfneg(c: &[u64]) -> CFNegative {
        CFNegative::new(c.to_vec()).unwrap()
    }

    fn cfreg(a: &[u64]) -> CFRegular {
        CFRegular::new(a.to_vec()).unwrap()
    }

    fn ip(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    #[test]
    fn qdeform_neg_examples() {
        let q52 = qdeform_neg(&cfneg(&[3, 2]));
        assert_eq!(q52.num, ip(&[1, 2, 1, 1]));
        assert_eq!(q52.den, ip(&[1, 1]));
        let q75 = qdeform_neg(&cfneg(&[2, 2, 3]));
        assert_eq!(q75.num, ip(&[1, 1, 2, 2, 1]));
        assert_eq!(q75.den, ip(&[1, 1, 2, 1]));
        let q6 = qdeform_neg(&cfneg(&[6]));
        assert_eq!(q6.num, IntPoly::q_integer(6));
        assert_eq!(q6.den, IntPoly::one());
    }

    #[test]
    fn qdeform_reg_examples() {
        let q52 = qdeform_reg(&cfreg(&[2, 2]));
        assert_eq!(q52.num, ip(&[1, 2, 1, 1]));
        assert_eq!(q52.den, ip(&[1, 1]));
        let q53 = qdeform_reg(&cfreg(&[1, 1, 1, 1]));
        assert_eq!(q53.num, ip(&[1, 1, 2, 1]));
        assert_eq!(q53.den, ip(&[1, 1, 1]));
        let q2511 = qdeform_reg(&cfreg(&[2, 3, 1, 2]));
        assert_eq!(q2511.num, ip(&[1, 3, 4, 5, 5, 4, 2, 1]));
        assert_eq!(q2511.den, ip(&[1, 2, 2, 3, 2, 1]));
    }

    #[test]
    fn qdeform_boundaries_and_domain() {
        let inf = qdeform(&Rational::infinity()).unwrap();
        assert_eq!((inf.num, inf.den), (IntPoly::one(), IntPoly::zero()));
        let zero = qdeform(&rat(0, 1)).unwrap();
        assert_eq!((zero.num, zero.den), (IntPoly::zero(), IntPoly::one()));
        let one = qdeform(&rat(1, 1)).unwrap();
        assert_eq!((one.num, one.den), (IntPoly::one(), IntPoly::one()));
        assert!(matches!(
            qdeform(&rat(2, 3)),
            Err(CfError::NotGreaterThanOne { .. })
        ));
    }

    #[test]
    fn qdeform_nine_sevenths() {
        // R factors as (1+q+q^2)(1+q^2+q^3)
        let x = qdeform(&rat(9, 7)).unwrap();
        assert_eq!(x.num, &ip(&[1, 1, 1]) * &ip(&[1, 0, 1, 1]));
        assert_eq!(x.den, ip(&[1, 1, 2, 2, 1]));
    }

    #[test]
    fn odd_denominator_two_family() {
        // [(2m+1)/2]_q = (1 + 2q + ... + 2q^(m-1) + q^m + q^(m+1)) / (1+q)
        for m in 1u64..=50 {
            let x = qdeform(&rat(2 * m + 1, 2)).unwrap();
            let mut coeffs = vec![1i64];
            coeffs.extend(std::iter::repeat_n(2, m as usize - 1));
            coeffs.extend([1, 1]);
            assert_eq!(x.num, ip(&coeffs), "m = {m}");
            assert_eq!(x.den, ip(&[1, 1]));
        }
    }

    #[test]
    fn matrix_neg_examples() {
        let m = matrix_neg(&cfneg(&[3, 2]));
        assert_eq!(m.entry(0, 0), &LaurentPoly::from(ip(&[1, 2, 1, 1])));
        assert_eq!(m.entry(0, 1), &-&LaurentPoly::from(ip(&[0, 1, 1, 1])));
        assert_eq!(m.entry(1, 0), &LaurentPoly::from(ip(&[1, 1])));
        assert_eq!(m.entry(1, 1), &-&LaurentPoly::monomial(1));
        assert_eq!(m.det().single_term(), Some((3, BigInt::one())));
        let single = matrix_neg(&cfneg(&[4]));
        assert_eq!(single.entry(0, 0), &LaurentPoly::q_integer(4));
        assert_eq!(single.entry(0, 1), &-&LaurentPoly::monomial(3));
    }

    #[test]
    fn generator_identities() {
        // R_q S_q R_q = q L_q
        let lhs = generator_power(Generator::R, 1)
            .mul(&generator_power(Generator::S, 1))
            .mul(&generator_power(Generator::R, 1));
        let rhs = generator_power(Generator::L, 1).scale(&LaurentPoly::monomial(1));
        assert_eq!(lhs, rhs);
        // R_q^c S_q is the elementary negative factor
        for c in 1..6 {
            let lhs = generator_power(Generator::R, c).mul(&generator_power(Generator::S, 1));
            assert_eq!(lhs, neg_factor(c as u64));
        }
        // S^2 = -q^-1 Id, so S squares to the identity at q = -1
        let s2 = generator_power(Generator::S, 2);
        assert_eq!(s2, Mat2::identity().scale(&-&LaurentPoly::monomial(-1)));
        // inverse powers multiply back to the identity
        for kind in [Generator::R, Generator::L, Generator::S] {
            for p in 1..4 {
                let m = generator_power(kind, p).mul(&generator_power(kind, -p));
                assert_eq!(m, Mat2::identity());
            }
        }
    }

    #[test]
    fn generator_words_give_matrices() {
        // M_q(c) = prod R^c S ; M+_q(a) = prod R^a1 L^a2 ...
        let c = [3u64, 2, 2];
        let mut word = Mat2::identity();
        for &ci in &c {
            word = word
                .mul(&generator_power(Generator::R, ci as i64))
                .mul(&generator_power(Generator::S, 1));
        }
        assert_eq!(word, matrix_neg_seq(&c));

        let a = cfreg(&[2, 3, 1, 2]);
        let mut word = Mat2::identity();
        for (i, &ai) in a.coeffs().iter().enumerate() {
            let kind = if i % 2 == 0 {
                Generator::R
            } else {
                Generator::L
            };
            word = word.mul(&generator_power(kind, ai as i64));
        }
        assert_eq!(word, matrix_reg(&a));
    }

    #[test]
    fn continuant_examples() {
        assert_eq!(
            continuant_neg(&[3, 2], ContinuantVar::Q),
            LaurentPoly::from(ip(&[1, 2, 1, 1]))
        );
        assert_eq!(
            continuant_neg(&[2, 2, 3], ContinuantVar::Q),
            LaurentPoly::from(ip(&[1, 1, 2, 2, 1]))
        );
        assert_eq!(
            continuant_neg(&[7], ContinuantVar::Q),
            LaurentPoly::q_integer(7)
        );
        assert_eq!(continuant_neg(&[], ContinuantVar::Q), LaurentPoly::one());
        // continuants accept 1s (quiddity regime)
        let k3 = continuant_neg(&[1, 1, 1], ContinuantVar::Q);
        assert_eq!(k3, -&LaurentPoly::one());
    }

    #[test]
    fn continuant_reg_recovers_deformation() {
        // q^(a_2 + a_4 - 1) K+_4(1,2,1,1)_q = numerator of the 7/5 deformation
        let k = continuant_reg(&[1, 2, 1, 1], StartParity::Odd);
        let shifted = k.shift(3 - 1);
        assert_eq!(shifted, LaurentPoly::from(ip(&[1, 1, 2, 2, 1])));
        let ks = continuant_reg(&[2, 1, 1], StartParity::Even);
        assert_eq!(ks.shift(3 - 1), LaurentPoly::from(ip(&[1, 1, 2, 1])));
    }

    #[test]
    fn equality_of_the_two_deformations_small() {
        for total in 3u64..=40 {
            for s in 1..total {
                let r = total - s;
                if r <= s || num_integer::gcd(r, s) != 1 {
                    continue;
                }
                let x = rat(r, s);
                let a = expand_regular(&x).unwrap();
                let via_reg = qdeform_reg(&a);
                let via_neg = qdeform_neg(&reg_to_neg(&a));
                assert_eq!(via_reg.num, via_neg.num, "{x}");
                assert_eq!(via_reg.den, via_neg.den, "{x}");
            }
        }
    }
}
