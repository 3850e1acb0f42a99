//! q-Fibonacci polynomials (OEIS A079487 and its mirror A123245) and the
//! q-Pell polynomials, defined canonically as deformation numerators and
//! denominators of consecutive Fibonacci and Pell ratios.

use num_bigint::BigInt;

use crate::contfrac::Rational;
use crate::deform::qdeform;
use crate::poly::IntPoly;

/// Which coefficient triangle to export.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleKind {
    Fib,
    FibMirror,
    Pell,
    PellMirror,
}

fn fibonacci_numbers(upto: usize) -> Vec<BigInt> {
    let mut f = vec![BigInt::from(0), BigInt::from(1)];
    while f.len() <= upto {
        let next = &f[f.len() - 1] + &f[f.len() - 2];
        f.push(next);
    }
    f
}

fn pell_numbers(upto: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::from(0), BigInt::from(1)];
    while p.len() <= upto {
        let next = BigInt::from(2) * &p[p.len() - 1] + &p[p.len() - 2];
        p.push(next);
    }
    p
}

fn deform_ratio(num: &BigInt, den: &BigInt) -> (IntPoly, IntPoly) {
    let x = Rational::from_bigints(num.clone(), den.clone()).expect("valid ratio");
    let d = qdeform(&x).expect("ratio > 1");
    (d.num, d.den)
}

/// The q-Fibonacci pair `(F_n, Ftilde_n)`: row `n-1` of A079487 and of its
/// mirror A123245.
///
/// `Ftilde_{n+1} / F_n` is the q-deformation of `F_{n+1} / F_n`.
pub fn q_fibonacci(n: u64) -> (IntPoly, IntPoly) {
    let n = n as usize;
    assert!(n >= 1, "indexing starts at 1");
    if n <= 2 {
        return (IntPoly::one(), IntPoly::one());
    }
    let f = fibonacci_numbers(n + 1);
    let plain = deform_ratio(&f[n + 1], &f[n]).1;
    let mirror = deform_ratio(&f[n], &f[n - 1]).0;
    (plain, mirror)
}

/// The q-Pell pair `(P_n, Ptilde_n)`: row `n` of the Pell coefficient
/// triangle and its mirror.
///
/// `P_{n+1} / Ptilde_n` is the q-deformation of the silver-ratio convergent
/// `P_{n+1} / P_n`.
pub fn q_pell(n: u64) -> (IntPoly, IntPoly) {
    let n = n as usize;
    assert!(n >= 1, "indexing starts at 1");
    if n == 1 {
        return (IntPoly::one(), IntPoly::one());
    }
    let p = pell_numbers(n + 1);
    let plain = deform_ratio(&p[n], &p[n - 1]).0;
    let mirror = deform_ratio(&p[n + 1], &p[n]).1;
    (plain, mirror)
}

/// Coefficient rows 1..=max_row of the chosen triangle.
pub fn triangle_rows(kind: TriangleKind, max_row: u64) -> Vec<Vec<BigInt>> {
    (1..=max_row)
        .map(|row| {
            let poly = match kind {
                TriangleKind::Fib => q_fibonacci(row + 1).0,
                TriangleKind::FibMirror => q_fibonacci(row + 1).1,
                TriangleKind::Pell => q_pell(row).0,
                TriangleKind::PellMirror => q_pell(row).1,
            };
            poly.coeffs().to_vec()
        })
        .collect()
}

/// Row sums of the triangle: Fibonacci numbers `F_{row+1}` for the
/// Fibonacci triangles, Pell numbers `P_row` for the Pell ones.
pub fn expected_row_sum(kind: TriangleKind, row: u64) -> BigInt {
    match kind {
        TriangleKind::Fib | TriangleKind::FibMirror => {
            fibonacci_numbers(row as usize + 1)[row as usize + 1].clone()
        }
        TriangleKind::Pell | TriangleKind::PellMirror => {
            pell_numbers(row as usize)[row as usize].clone()
        }
    }
}
