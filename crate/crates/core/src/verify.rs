//! Verification suites: each one sweeps a structural identity over a
//! bounded input range and reports every failure with its input and the
//! expected/actual values. The conjecture scans report counterexamples
//! without failing.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::closures::{
    build_graph, build_graph_prime, closure_polynomial, enumerate_closures, specialize_gf,
};
use crate::contfrac::{
    expand_negative, expand_regular, neg_to_reg, reg_to_neg, CFNegative, CFRegular, Rational,
};
use crate::deform::{
    continuant_neg, continuant_reg, generator_power, matrix_neg, matrix_neg_seq, matrix_reg,
    matrix_reg_normalized, qdeform, qdeform_neg, qdeform_reg, ContinuantVar, Generator, Mat2,
    StartParity,
};
use crate::farey::{
    farey_tree, neighbor_weight, positivity_diff, quiddity_classify, surgery_break, surgery_insert,
    QuiddityClass,
};
use crate::jones::{
    jones_polynomial, jones_via_closures, jones_via_continuant, to_signed_laurent, Sign,
};
use crate::poly::{IntPoly, LaurentPoly};
use crate::ptolemy::{fan_polygon_weight, ptolemy_solve};
use crate::sequences::{expected_row_sum, q_fibonacci, q_pell, triangle_rows, TriangleKind};

/// One failed case: the input and the expected/actual pair.
#[derive(Debug, Clone)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one suite run.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: String,
    pub bounds: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub wall: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<12} {:<28} {:>8} cases  {:>5} failures  {:>8.2?}  {}",
            self.name,
            self.bounds,
            self.cases,
            self.failures.len(),
            self.wall,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for fail in self.failures.iter().take(5) {
            write!(
                f,
                "\n    {}: expected {}, got {}",
                fail.input, fail.expected, fail.actual
            )?;
        }
        Ok(())
    }
}

/// Per-suite sweep bounds, defaulting to the acceptance-gate values.
#[derive(Debug, Clone)]
pub struct Bounds {
    /// `r + s` cap for the equality / degrees sweeps.
    pub equality_sum: u64,
    /// `sum(a_i)` cap for the brute-force closure sweep.
    pub closures_a_sum: u64,
    /// `r + s` cap for pairwise positivity.
    pub positivity_sum: u64,
    /// Farey tree depth.
    pub farey_depth: u32,
    /// `r + s` cap for the matrix identity sweep.
    pub matrices_sum: u64,
    /// Number of seeded random sequences in the matrix/continuant suites.
    pub random_sequences: u64,
    /// `r + s` cap for the quiddity sweep.
    pub quiddity_sum: u64,
    /// Number of random ear-insertion triangulations.
    pub random_triangulations: u64,
    /// `r + s` cap for the Ptolemy sweep.
    pub ptolemy_sum: u64,
    /// Fan size cap for the fan-polygon formula.
    pub fan_max: u64,
    /// `r + s` cap for the q = -1 sweep.
    pub qminus1_sum: u64,
    /// `r + s` cap for the Jones three-route sweep.
    pub jones_sum: u64,
    /// Index cap for the Fibonacci-ratio identity.
    pub fibonacci_n: u64,
    /// Index cap for the Pell convergent identity.
    pub pell_n: u64,
    /// `r + s` cap for the conjecture scans.
    pub conjectures_sum: u64,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            equality_sum: 150,
            closures_a_sum: 18,
            positivity_sum: 24,
            farey_depth: 8,
            matrices_sum: 60,
            random_sequences: 500,
            quiddity_sum: 60,
            random_triangulations: 200,
            ptolemy_sum: 20,
            fan_max: 8,
            qminus1_sum: 100,
            jones_sum: 20,
            fibonacci_n: 20,
            pell_n: 15,
            conjectures_sum: 30,
            seed: 42,
        }
    }
}

/// Coprime pairs `r > s >= 1` with `r + s <= max_sum`.
fn coprime_pairs(max_sum: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for total in 3..=max_sum {
        for s in 1..total {
            let r = total - s;
            if r > s && num_integer::gcd(r, s) == 1 {
                out.push((r, s));
            }
        }
    }
    out
}

fn rat(r: u64, s: u64) -> Rational {
    Rational::new(r, s).expect("valid rational")
}

struct Recorder {
    name: &'static str,
    bounds: String,
    cases: u64,
    failures: Vec<Failure>,
    start: Instant,
}

impl Recorder {
    fn new(name: &'static str, bounds: String) -> Self {
        Self {
            name,
            bounds,
            cases: 0,
            failures: Vec::new(),
            start: Instant::now(),
        }
    }

    fn check<T: PartialEq + fmt::Debug>(
        &mut self,
        input: impl fmt::Display,
        expected: T,
        actual: T,
    ) {
        self.cases += 1;
        if expected != actual {
            self.failures.push(Failure {
                input: input.to_string(),
                expected: format!("{expected:?}"),
                actual: format!("{actual:?}"),
            });
        }
    }

    fn assert_with(&mut self, input: impl fmt::Display, ok: bool, expected: &str, actual: String) {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure {
                input: input.to_string(),
                expected: expected.to_string(),
                actual,
            });
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            name: self.name.to_string(),
            bounds: self.bounds,
            cases: self.cases,
            failures: self.failures,
            wall: self.start.elapsed(),
        }
    }
}

/// Equality of the two deformation routes (regular matrix vs negative
/// recurrence) over all coprime `r > s` with `r + s` bounded.
pub fn suite_equality(b: &Bounds) -> SuiteReport {
    let mut rec = Recorder::new("equality", format!("r+s <= {}", b.equality_sum));
    let results: Vec<(String, bool)> = coprime_pairs(b.equality_sum)
        .par_iter()
        .map(|&(r, s)| {
            let x = rat(r, s);
            let a = expand_regular(&x).expect("domain");
            let c = expand_negative(&x).expect("domain");
            let via_reg = qdeform_reg(&a);
            let via_neg = qdeform_neg(&c);
            let ok = via_reg.num == via_neg.num
                && via_reg.den == via_neg.den
                && reg_to_neg(&a) == c
                && neg_to_reg(&c) == a;
            (x.to_string(), ok)
        })
        .collect();
    for (input, ok) in results {
        rec.assert_with(
            &input,
            ok,
            "regular route == negative route",
            "mismatch".into(),
        );
    }
    rec.finish()
}

/// Degree, leading/constant coefficient, positivity and the coprimality
/// determinant of the convergent recurrence.
pub fn suite_degrees(b: &Bounds) -> SuiteReport {
    let mut rec = Recorder::new("degrees", format!("r+s <= {}", b.equality_sum));
    for (r, s) in coprime_pairs(b.equality_sum) {
        let x = rat(r, s);
        let c = expand_negative(&x).expect("domain");
        let a = expand_regular(&x).expect("domain");
        let d = qdeform_neg(&c);
        let k = c.len() as u64;
        let deg_r = c.sum() - k;
        let deg_s: u64 = c.coeffs()[1..].iter().sum::<u64>() + 1 - k;
        let ok = d.num.degree() == Some(deg_r as usize)
            && d.den.degree() == Some(deg_s as usize)
            && deg_r == a.sum() - 1
            && deg_s == a.sum() - a.coeffs()[0] - 1
            && d.num.leading_coeff() == Some(&BigInt::one())
            && d.den.leading_coeff() == Some(&BigInt::one())
            && d.num.coeff(0).is_one()
            && d.den.coeff(0).is_one()
            && d.num.has_positive_coeffs()
            && d.den.has_positive_coeffs()
            && d.num.at_one() == BigInt::from(r)
            && d.den.at_one() == BigInt::from(s);
        rec.assert_with(&x, ok, "degree/coefficient profile", format!("{d}"));

        // coprimality witness: R_k S_{k-1} - S_k R_{k-1} = -q^(c_1+...+c_{k-1}-(k-1))
        if k >= 2 {
            let prev = CFNegative::new(c.coeffs()[..c.len() - 1].to_vec()).expect("prefix");
            let dp = qdeform_neg(&prev);
            let det = &(&d.num * &dp.den) - &(&d.den * &dp.num);
            let exp = c.coeffs()[..c.len() - 1].iter().sum::<u64>() - (k - 1);
            let expected = -&IntPoly::monomial(exp as usize);
            rec.check(format!("{x} determinant"), expected, det);
        }
    }
    rec.finish()
}

/// Values at `q = -1`: membership in {-1, 0, 1}, the parity law, and
/// exact `(1 + q)`-divisibility for even numerators.
pub fn suite_qminus1(b: &Bounds) -> SuiteReport {
    let mut rec = Recorder::new("qminus1", format!("r+s <= {}", b.qminus1_sum));
    let minus_one = BigInt::from(-1);
    let one_plus_q = IntPoly::from_i64s(&[1, 1]);
    for (r, s) in coprime_pairs(b.qminus1_sum) {
        let x = rat(r, s);
        let d = qdeform(&x).expect("domain");
        let rv = d.num.eval_int(&minus_one);
        let sv = d.den.eval_int(&minus_one);
        let ok = rv.magnitude() <= BigInt::one().magnitude()
            && sv.magnitude() <= BigInt::one().magnitude()
            && (rv.is_zero() == (r % 2 == 0))
            && (sv.is_zero() == (s % 2 == 0));
        rec.assert_with(
            &x,
            ok,
            "values at q=-1 in {-1,0,1} with parity law",
            format!("R(-1)={rv}, S(-1)={sv}"),
        );
        if r % 2 == 0 {
            let ok = d.num.exact_divide(&one_plus_q).is_ok();
            rec.assert_with(
                format!("{x} divisibility"),
                ok,
                "(1+q) | R",
                "remainder".into(),
            );
        }
        if s % 2 == 0 {
            let ok = d.den.exact_divide(&one_plus_q).is_ok();
            rec.assert_with(
                format!("{x} divisibility"),
                ok,
                "(1+q) | S",
                "remainder".into(),
            );
        }
    }
    rec.finish()
}

/// Total positivity of `R S' - S R'` over ordered pairs, the monomial
/// criterion for unimodular pairs, and the neighbor-weight closed form.
pub fn suite_positivity(b: &Bounds) -> SuiteReport {
    let mut rec = Recorder::new(
        "positivity",
        format!("r+s <= {} pairwise", b.positivity_sum),
    );
    let mut values: Vec<Rational> = vec![rat(0, 1), rat(1, 1), Rational::infinity()];
    values.extend(
        coprime_pairs(b.positivity_sum)
            .into_iter()
            .map(|(r, s)| rat(r, s)),
    );
    for x in &values {
        for y in &values {
            if x <= y {
                continue;
            }
            let diff = positivity_diff(x, y).expect("ordered");
            let unimodular = x.farey_det(y) == BigInt::one();
            let monomial = diff.monic_monomial_exp();
            let ok = diff.has_nonnegative_coeffs()
                && !diff.is_zero()
                && (monomial.is_some() == unimodular);
            rec.assert_with(
                format!("({x}, {y})"),
                ok,
                "nonnegative, monomial iff unimodular",
                format!("{diff}"),
            );
            if unimodular {
                let alpha = neighbor_weight(x, y).expect("neighbors");
                rec.check(format!("alpha({x}, {y})"), monomial.unwrap() as u64, alpha);
            }
        }
    }
    rec.finish()
}

/// Weighted Farey tree labels against the direct deformation, plus the
/// explicitly labeled fractions of the upper Farey graph picture.
pub fn suite_mediant(b: &Bounds) -> SuiteReport {
    let mut rec = Recorder::new("mediant", format!("depth <= {}", b.farey_depth));
    let nodes = farey_tree(b.farey_depth);
    for entry in &nodes {
        let direct = qdeform(&entry.node.value).expect("tree values deformable");
        let ok = entry.node.label.num == direct.num && entry.node.label.den == direct.den;
        rec.assert_with(
            format!("{} at depth {}", entry.node.value, entry.depth),
            ok,
            "label == qdeform(value)",
            format!("{}", entry.node.label),
        );
    }
    // the eleven labeled fractions of the figure, numerator/denominator verbatim
    let figure: [(u64, u64, &[i64], &[i64]); 11] = [
        (2, 1, &[1, 1], &[1]),
        (3, 2, &[1, 1, 1], &[1, 1]),
        (3, 1, &[1, 1, 1], &[1]),
        (4, 3, &[1, 1, 1, 1], &[1, 1, 1]),
        (7, 5, &[1, 1, 2, 2, 1], &[1, 1, 2, 1]),
        (5, 3, &[1, 1, 2, 1], &[1, 1, 1]),
        (5, 2, &[1, 2, 1, 1], &[1, 1]),
        (4, 1, &[1, 1, 1, 1], &[1]),
        (8, 3, &[1, 2, 2, 2, 1], &[1, 1, 1]),
        (7, 2, &[1, 2, 2, 1, 1], &[1, 1]),
        (8, 5, &[1, 2, 2, 2, 1], &[1, 2, 1, 1]),
    ];
    for (r, s, num, den) in figure {
        let value = rat(r, s);
        let found = nodes.iter().find(|n| n.node.value == value);
        match found {
            Some(entry) => {
                let ok = entry.node.label.num == IntPoly::from_i64s(num)
                    && entry.node.label.den == IntPoly::from_i64s(den);
                rec.assert_with(
                    format!("figure label {value}"),
                    ok,
                    "printed label",
                    format!("{}", entry.node.label),
                );
            }
            None => rec.assert_with(
                format!("figure label {value}"),
                false,
                "present in tree",
                "missing".into(),
            ),
        }
    }
    // spot-check two printed edge weights: right edges of 2/1 and 4/1
    for (r, s, ell) in [(2u64, 1u64, 1u64), (4, 1, 3), (3, 1, 2), (7, 5, 2)] {
        let value = rat(r, s);
        let entry = nodes
            .iter()
            .find(|n| n.node.value == value)
            .expect("present");
        rec.check(format!("edge weight at {value}"), ell, entry.edge_exponent);
    }
    rec.finish()
}

/// Brute-force closure counts against both deformation polynomials for
/// every regular expansion with bounded coefficient sum.
pub fn suite_closures(b: &Bounds) -> SuiteReport {
    let mut rec = Recorder::new("closures", format!("sum(a) <= {}", b.closures_a_sum));
    // even-length compositions of n correspond to gap masks of odd popcount
    let mut expansions: Vec<Vec<u64>> = Vec::new();
    for n in 2..=b.closures_a_sum {
        if n == 2 {
            expansions.push(vec![1, 1]);
            continue;
        }
        let gaps = n - 1;
        for mask in 0u32..(1 << gaps) {
            if mask.count_ones() % 2 == 0 {
                continue;
            }
            let mut comp = Vec::new();
            let mut run = 1u64;
            for g in 0..gaps {
                if mask & (1 << g) != 0 {
                    comp.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            comp.push(run);
            expansions.push(comp);
        }
    }
    let results: Vec<(String, bool)> = expansions
        .par_iter()
        .map(|comp| {
            let a = CFRegular::new(comp.clone()).expect("even composition");
            let d = qdeform_reg(&a);
            let g = closure_polynomial(&build_graph(&a)).expect("within bound");
            let gp = closure_polynomial(&build_graph_prime(&a)).expect("within bound");
            let ok = g == d.num
                && gp == d.den
                && g.at_one() == *d.value.numer()
                && gp.at_one() == *d.value.denom();
            (format!("{a} = {}", d.value), ok)
        })
        .collect();
    for (input, ok) in results {
        rec.assert_with(
            &input,
            ok,
            "closure counts == R, S coefficients",
            "mismatch".into(),
        );
    }
    // all-ones specialization reproduces the plain counts on a sample
    for (r, s) in coprime_pairs(16) {
        let a = expand_regular(&rat(r, s)).expect("domain");
        let g = build_graph(&a);
        let (_, gf) = enumerate_closures(&g).expect("small");
        let ones = vec![1u64; g.vertex_count()];
        rec.check(
            format!("all-ones gf {r}/{s}"),
            closure_polynomial(&g).expect("small"),
            specialize_gf(&gf, &ones).expect("weights"),
        );
    }
    rec.finish()
}

fn entries_equal(m: &Mat2, entries: [[&LaurentPoly; 2]; 2]) -> bool {
    (0..2).all(|i| (0..2).all(|j| m.entry(i, j) == entries[i][j]))
}

/// Matrix calculus: factorization into convergents, generator words, the
/// regular/negative bridge, continuant entries, determinants, surgery.
pub fn suite_matrices(b: &Bounds) -> SuiteReport {
    let mut rec = Recorder::new(
        "matrices",
        format!("r+s <= {}, {} random", b.matrices_sum, b.random_sequences),
    );
    for (r, s) in coprime_pairs(b.matrices_sum) {
        let x = rat(r, s);
        let c = expand_negative(&x).expect("domain");
        let a = expand_regular(&x).expect("domain");
        let m = matrix_neg(&c);
        let d = qdeform_neg(&c);
        let k = c.len();

        // the matrix columns are consecutive convergents
        let tail = LaurentPoly::monomial(*c.coeffs().last().unwrap() as i64 - 1);
        let (prev_num, prev_den) = if k >= 2 {
            let prev = CFNegative::new(c.coeffs()[..k - 1].to_vec()).expect("prefix");
            let dp = qdeform_neg(&prev);
            (dp.num, dp.den)
        } else {
            (IntPoly::one(), IntPoly::zero())
        };
        let ok = entries_equal(
            &m,
            [
                [
                    &LaurentPoly::from(&d.num),
                    &-&(&tail * &LaurentPoly::from(&prev_num)),
                ],
                [
                    &LaurentPoly::from(&d.den),
                    &-&(&tail * &LaurentPoly::from(&prev_den)),
                ],
            ],
        );
        rec.assert_with(
            format!("convergent columns {x}"),
            ok,
            "M_q columns are convergents",
            format!("{m}"),
        );

        // det M_q = q^(sum c - k)
        rec.check(
            format!("det {x}"),
            Some((c.sum() as i64 - k as i64, BigInt::one())),
            m.det().single_term(),
        );

        // bridge: normalized regular matrix = M_q(c) R_q
        let bridge = m.mul(&generator_power(Generator::R, 1));
        rec.check(format!("bridge {x}"), matrix_reg_normalized(&a), bridge);

        // first column of the normalized regular matrix is (qR, qS)
        let mreg = matrix_reg_normalized(&a);
        let ok = mreg.entry(0, 0) == &LaurentPoly::from(&d.num).shift(1)
            && mreg.entry(1, 0) == &LaurentPoly::from(&d.den).shift(1);
        rec.assert_with(
            format!("normalized column {x}"),
            ok,
            "(qR, qS) first column",
            format!("{mreg}"),
        );

        // regular-matrix entries as K+ continuants. The off-diagonal
        // entries carry q^(-a_2m) K+(...)_q: truncating the product by one
        // factor multiplies the second column by q^(-a_2m).
        let am = matrix_reg(&a);
        let coeffs = a.coeffs();
        let two_m = coeffs.len();
        let k_full = continuant_reg(coeffs, StartParity::Odd);
        let k_den = continuant_reg(&coeffs[1..], StartParity::Even);
        let k_top = continuant_reg(&coeffs[..two_m - 1], StartParity::Odd);
        let k_bot = continuant_reg(&coeffs[1..two_m - 1], StartParity::Even);
        let last = *coeffs.last().unwrap() as i64;
        let ok = entries_equal(
            &am,
            [
                [&k_full, &k_top.shift(-last)],
                [&k_den, &k_bot.shift(-last)],
            ],
        );
        rec.assert_with(
            format!("regular continuant entries {x}"),
            ok,
            "M+_q entries are K+ continuants",
            format!("{am}"),
        );
        let shift = a.even_position_sum() as i64 - 1;
        let ok = k_full.shift(shift) == LaurentPoly::from(&d.num)
            && k_den.shift(shift) == LaurentPoly::from(&d.den);
        rec.assert_with(
            format!("regular continuant fractions {x}"),
            ok,
            "q^(k-1) K+ = R, S",
            "mismatch".into(),
        );

        // numerator and denominator as negative continuants
        let ok = continuant_neg(c.coeffs(), ContinuantVar::Q) == LaurentPoly::from(&d.num)
            && continuant_neg(&c.coeffs()[1..], ContinuantVar::Q) == LaurentPoly::from(&d.den);
        rec.assert_with(
            format!("continuant fractions {x}"),
            ok,
            "K_k = R, K_{{k-1}} = S",
            "mismatch".into(),
        );
    }

    // random positive sequences: continuant entries, det, generator words, surgery
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed);
    for _ in 0..b.random_sequences {
        let len = rng.gen_range(1..=8usize);
        let c: Vec<u64> = (0..len).map(|_| rng.gen_range(1..=6)).collect();
        let m = matrix_neg_seq(&c);
        let k = c.len();

        let kk = |seq: &[u64]| continuant_neg(seq, ContinuantVar::Q);
        let tail = LaurentPoly::monomial(*c.last().unwrap() as i64 - 1);
        let bottom_right = if k >= 2 {
            -&(&tail * &kk(&c[1..k - 1]))
        } else {
            LaurentPoly::zero()
        };
        let ok = entries_equal(
            &m,
            [
                [&kk(&c), &-&(&tail * &kk(&c[..k - 1]))],
                [&kk(&c[1..]), &bottom_right],
            ],
        );
        rec.assert_with(
            format!("continuant entries {c:?}"),
            ok,
            "M_q entries are continuants",
            format!("{m}"),
        );

        rec.check(
            format!("det {c:?}"),
            Some((c.iter().sum::<u64>() as i64 - k as i64, BigInt::one())),
            m.det().single_term(),
        );

        let mut word = Mat2::identity();
        for &ci in &c {
            word = word
                .mul(&generator_power(Generator::R, ci as i64))
                .mul(&generator_power(Generator::S, 1));
        }
        rec.check(format!("generator word {c:?}"), m.clone(), word);

        if k >= 2 {
            let pos = rng.gen_range(1..k);
            let inserted = surgery_insert(&c, pos).expect("valid position");
            rec.check(
                format!("insert {c:?} at {pos}"),
                m.scale(&LaurentPoly::monomial(1)),
                matrix_neg_seq(&inserted),
            );
        }
        let pos = rng.gen_range(1..=k);
        let split = rng.gen_range(1..=c[pos - 1]);
        let broken = surgery_break(&c, pos, split).expect("valid split");
        rec.check(
            format!("break {c:?} at {pos} into {split}"),
            m.neg(),
            matrix_neg_seq(&broken),
        );
    }
    rec.finish()
}

/// Mirror formula and the Euler (Ptolemy) identity for q-continuants on
/// seeded random coefficient sequences.
pub fn suite_continuants(b: &Bounds) -> SuiteReport {
    let mut rec = Recorder::new(
        "continuants",
        format!("{} random sequences", b.random_sequences),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed);
    for _ in 0..b.random_sequences {
        let len = rng.gen_range(1..=10usize);
        let c: Vec<u64> = (0..len).map(|_| rng.gen_range(2..=6)).collect();

        // mirror: K(c_1..c_k)_q = q^(sum c - k) K(c_k..c_1)_{q^-1}
        let forward = continuant_neg(&c, ContinuantVar::Q);
        let mut rev = c.clone();
        rev.reverse();
        let mirrored = continuant_neg(&rev, ContinuantVar::QInverse)
            .shift(c.iter().sum::<u64>() as i64 - len as i64);
        rec.check(format!("mirror {c:?}"), forward, mirrored);

        // Euler identity over all quadruples i < j < k < l
        if len < 4 {
            continue;
        }
        let n = len;
        // K^q_{i,j} over 1-based i <= j <= n with the boundary conventions
        let kij = |i: usize, j: usize| -> LaurentPoly {
            if i == j {
                LaurentPoly::zero()
            } else if j == i + 1 {
                LaurentPoly::one()
            } else {
                continuant_neg(&c[i..j - 1], ContinuantVar::Q)
            }
        };
        let mut euler_ok = true;
        let mut detail = String::new();
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    for l in k + 1..=n {
                        let lhs = &kij(i, k) * &kij(j, l);
                        let exp: i64 = c[j - 1..k - 1].iter().sum::<u64>() as i64 - (k - j) as i64;
                        let rhs =
                            &(&kij(i, j) * &kij(k, l)).shift(exp) + &(&kij(j, k) * &kij(i, l));
                        if lhs != rhs {
                            euler_ok = false;
                            detail = format!("quadruple ({i},{j},{k},{l})");
                        }
                    }
                }
            }
        }
        rec.assert_with(
            format!("euler {c:?}"),
            euler_ok,
            "q-Ptolemy identity",
            detail,
        );
    }
    rec.finish()
}

/// Quiddity classification: the decagon of the double-triangulation
/// figure, every snake triangulation, and random ear-grown triangulations.
pub fn suite_quiddity(b: &Bounds) -> SuiteReport {
    let mut rec = Recorder::new(
        "quiddity",
        format!(
            "r+s <= {}, {} random",
            b.quiddity_sum, b.random_triangulations
        ),
    );
    rec.check(
        "decagon (3,3,1,2,4,3,1,2,4,1)",
        QuiddityClass::Triangulation,
        quiddity_classify(&[3, 3, 1, 2, 4, 3, 1, 2, 4, 1]),
    );
    rec.check(
        "triangle (1,1,1)",
        QuiddityClass::Triangulation,
        quiddity_classify(&[1, 1, 1]),
    );
    for (r, s) in coprime_pairs(b.quiddity_sum) {
        let a = expand_regular(&rat(r, s)).expect("domain");
        let tri = crate::ptolemy::triangulation_build(&a);
        rec.check(
            format!("snake {r}/{s}"),
            QuiddityClass::Triangulation,
            tri.classify_quiddity(),
        );
        let k = a.even_position_sum() as usize;
        rec.check(
            format!("vertex label {r}/{s}"),
            rat(r, s),
            tri.vertex_labels[k + 1].clone(),
        );
    }
    // random ear insertions starting from a triangle, with rotations
    let mut rng = ChaCha8Rng::seed_from_u64(b.seed);
    for t in 0..b.random_triangulations {
        let mut quiddity: Vec<u64> = vec![1, 1, 1];
        let target = rng.gen_range(4..=12usize);
        while quiddity.len() < target {
            let rot = rng.gen_range(0..quiddity.len());
            quiddity.rotate_left(rot);
            let pos = rng.gen_range(1..quiddity.len());
            quiddity = surgery_insert(&quiddity, pos).expect("interior position");
        }
        rec.check(
            format!("ear-grown #{t} {quiddity:?}"),
            QuiddityClass::Triangulation,
            quiddity_classify(&quiddity),
        );
    }
    rec.finish()
}

/// The Ptolemy weight system recovers `R` and `S`, all touched quadruples
/// satisfy the Ptolemy relation, and the fan polygon obeys its closed form.
pub fn suite_ptolemy(b: &Bounds) -> SuiteReport {
    let mut rec = Recorder::new(
        "ptolemy",
        format!("r+s <= {}, fan c <= {}", b.ptolemy_sum, b.fan_max),
    );
    for (r, s) in coprime_pairs(b.ptolemy_sum) {
        let x = rat(r, s);
        let sol = ptolemy_solve(&x).expect("domain");
        let d = qdeform(&x).expect("domain");
        let shift = sol.triangulation.n as i64 - 3;
        let ok = sol.x_top.shift(shift) == LaurentPoly::from(&d.num)
            && sol.x_side.shift(shift) == LaurentPoly::from(&d.den);
        rec.assert_with(
            format!("ptolemy {x}"),
            ok,
            "q^(n-3) x = R, S",
            format!("{} / {}", sol.x_top, sol.x_side),
        );
        match sol.weights.check_known_quadruples(sol.triangulation.n) {
            Ok(_) => rec.assert_with(format!("quadruples {x}"), true, "", String::new()),
            Err(quad) => rec.assert_with(
                format!("quadruples {x}"),
                false,
                "Ptolemy relation",
                format!("violated at {quad:?}"),
            ),
        }
    }
    for c in 2..=b.fan_max {
        for beta in 0..=4i64 {
            let got = fan_polygon_weight(c, beta).expect("fan");
            let expected = LaurentPoly::from(IntPoly::q_integer(c)).shift(-(beta + c as i64 - 1));
            rec.check(format!("fan c={c} beta={beta}"), expected, got);
        }
    }
    rec.finish()
}

/// Printed-triangle reproduction, ratio identities, mirrors and row sums
/// for the q-Fibonacci and q-Pell families.
pub fn suite_sequences(b: &Bounds) -> SuiteReport {
    let mut rec = Recorder::new(
        "sequences",
        format!("fib n <= {}, pell n <= {}", b.fibonacci_n, b.pell_n),
    );
    let fib_rows: [&[i64]; 9] = [
        &[1],
        &[1, 1],
        &[1, 1, 1],
        &[1, 2, 1, 1],
        &[1, 2, 2, 2, 1],
        &[1, 3, 3, 3, 2, 1],
        &[1, 3, 4, 5, 4, 3, 1],
        &[1, 4, 6, 7, 7, 5, 3, 1],
        &[1, 4, 7, 10, 11, 10, 7, 4, 1],
    ];
    let fib_mirror_rows: [&[i64]; 9] = [
        &[1],
        &[1, 1],
        &[1, 1, 1],
        &[1, 1, 2, 1],
        &[1, 2, 2, 2, 1],
        &[1, 2, 3, 3, 3, 1],
        &[1, 3, 4, 5, 4, 3, 1],
        &[1, 3, 5, 7, 7, 6, 4, 1],
        &[1, 4, 7, 10, 11, 10, 7, 4, 1],
    ];
    let pell_rows: [&[i64]; 10] = [
        &[1],
        &[1, 1],
        &[1, 2, 1, 1],
        &[1, 2, 3, 3, 2, 1],
        &[1, 3, 5, 6, 6, 5, 2, 1],
        &[1, 3, 7, 11, 13, 13, 11, 7, 3, 1],
        &[1, 4, 10, 18, 25, 29, 29, 24, 16, 9, 3, 1],
        &[1, 4, 12, 25, 41, 56, 65, 65, 56, 41, 25, 12, 4, 1],
        &[
            1, 5, 16, 37, 67, 101, 131, 148, 146, 126, 95, 61, 32, 14, 4, 1,
        ],
        &[
            1, 5, 18, 46, 94, 160, 233, 297, 335, 335, 297, 233, 160, 94, 46, 18, 5, 1,
        ],
    ];
    let rows = triangle_rows(TriangleKind::Fib, 9);
    for (i, expect) in fib_rows.iter().enumerate() {
        let exp: Vec<BigInt> = expect.iter().map(|&x| BigInt::from(x)).collect();
        rec.check(format!("fib row {}", i + 1), exp, rows[i].clone());
    }
    let rows = triangle_rows(TriangleKind::FibMirror, 9);
    for (i, expect) in fib_mirror_rows.iter().enumerate() {
        let exp: Vec<BigInt> = expect.iter().map(|&x| BigInt::from(x)).collect();
        rec.check(format!("fib mirror row {}", i + 1), exp, rows[i].clone());
    }
    let rows = triangle_rows(TriangleKind::Pell, 10);
    for (i, expect) in pell_rows.iter().enumerate() {
        let exp: Vec<BigInt> = expect.iter().map(|&x| BigInt::from(x)).collect();
        rec.check(format!("pell row {}", i + 1), exp, rows[i].clone());
    }

    // ratio identities against the deformation, mirrors, row sums
    let mut fib = vec![BigInt::zero(), BigInt::one()];
    for _ in 0..(b.fibonacci_n + 2) {
        let next = &fib[fib.len() - 1] + &fib[fib.len() - 2];
        fib.push(next);
    }
    for n in 2..=b.fibonacci_n {
        let x = Rational::from_bigints(fib[n as usize + 1].clone(), fib[n as usize].clone())
            .expect("ratio");
        let d = qdeform(&x).expect("ratio > 1");
        let ok = d.num == q_fibonacci(n + 1).1 && d.den == q_fibonacci(n).0;
        rec.assert_with(
            format!("fib ratio n={n}"),
            ok,
            "deformation = Ftilde_{n+1} / F_n",
            "mismatch".into(),
        );
    }
    let mut pell = vec![BigInt::zero(), BigInt::one()];
    for _ in 0..(b.pell_n + 2) {
        let next = BigInt::from(2) * &pell[pell.len() - 1] + &pell[pell.len() - 2];
        pell.push(next);
    }
    for n in 1..=b.pell_n {
        let x = Rational::from_bigints(pell[n as usize + 1].clone(), pell[n as usize].clone())
            .expect("ratio");
        let d = qdeform(&x).expect("ratio > 1");
        let ok = d.num == q_pell(n + 1).0 && d.den == q_pell(n).1;
        rec.assert_with(
            format!("pell ratio n={n}"),
            ok,
            "deformation = P_{n+1} / Ptilde_n",
            "mismatch".into(),
        );
    }
    for n in 1..=b.fibonacci_n {
        let (plain, mirror) = q_fibonacci(n);
        rec.check(format!("fib mirror n={n}"), plain.reversed(), mirror);
        rec.check(
            format!("fib row sum n={n}"),
            expected_row_sum(TriangleKind::Fib, n.max(2) - 1),
            q_fibonacci(n).0.at_one(),
        );
    }
    for n in 1..=b.pell_n {
        let (plain, mirror) = q_pell(n);
        rec.check(format!("pell mirror n={n}"), plain.reversed(), mirror);
        rec.check(
            format!("pell row sum n={n}"),
            expected_row_sum(TriangleKind::Pell, n),
            plain.at_one(),
        );
    }
    // total-closure interpretation of the Pell numbers, brute force
    for n in 2..=8u64 {
        let x = Rational::from_bigints(pell[n as usize].clone(), pell[n as usize - 1].clone())
            .expect("ratio");
        let a = expand_regular(&x).expect("domain");
        let g = build_graph(&a);
        let counts = crate::closures::closure_counts(&g).expect("small");
        let total: u64 = counts.iter().sum();
        rec.check(
            format!("pell closures n={n}"),
            pell[n as usize].clone(),
            BigInt::from(total),
        );
        rec.check(
            format!("pell closure poly n={n}"),
            q_pell(n).0,
            closure_polynomial(&g).expect("small"),
        );
    }
    rec.finish()
}

/// Three-route Jones agreement, value and degree laws, and the printed
/// worked examples with their signed Laurent forms.
pub fn suite_jones(b: &Bounds) -> SuiteReport {
    let mut rec = Recorder::new("jones", format!("r+s <= {}", b.jones_sum));
    for (r, s) in coprime_pairs(b.jones_sum) {
        let x = rat(r, s);
        let j = jones_polynomial(&x).expect("domain");
        let via_k = jones_via_continuant(&x).expect("domain");
        let via_k_reg = crate::jones::jones_via_continuant_reg(&x).expect("domain");
        let via_c = jones_via_closures(&x).expect("within bound");
        let a = expand_regular(&x).expect("domain");
        let ok = j.j == via_k.j
            && j.j == via_k_reg.j
            && j.j == via_c.j
            && j.j.at_one() == BigInt::from(r)
            && j.j.degree() == Some(a.sum() as usize)
            && j.j.coeff(0).is_one()
            && j.j.has_nonnegative_coeffs();
        rec.assert_with(
            format!("jones {x}"),
            ok,
            "three routes, J(1)=r, deg=sum(a)",
            format!("{}", j.j),
        );
    }
    let j154 = jones_polynomial(&rat(15, 4)).expect("domain");
    rec.check(
        "J_{15/4}",
        IntPoly::from_i64s(&[1, 1, 2, 3, 2, 3, 2, 1]),
        j154.j.clone(),
    );
    let v = to_signed_laurent(&j154, 16, Sign::Minus);
    rec.check(
        "V_{15/4}",
        "-t^8 + t^7 - 2t^6 + 3t^5 - 2t^4 + 3t^3 - 2t^2 + t".to_string(),
        v.to_string(),
    );
    let j83 = jones_polynomial(&rat(8, 3)).expect("domain");
    rec.check(
        "J_{8/3}",
        IntPoly::from_i64s(&[1, 1, 2, 1, 2, 1]),
        j83.j.clone(),
    );
    let v = to_signed_laurent(&j83, 3, Sign::Minus);
    rec.check(
        "V_{8/3}",
        "-t^(3/2) + t^(1/2) - 2t^(-1/2) + t^(-3/2) - 2t^(-5/2) + t^(-7/2)".to_string(),
        v.to_string(),
    );
    rec.finish()
}

/// One reported counterexample of a conjecture scan.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub conjecture: String,
    pub input: String,
    pub detail: String,
}

/// Report of the (non-failing) conjecture scans.
#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub bounds: String,
    pub cases: u64,
    pub counterexamples: Vec<Counterexample>,
    pub wall: Duration,
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "conjectures  {:<28} {:>8} cases  {:>5} counterexamples  {:>8.2?}",
            self.bounds,
            self.cases,
            self.counterexamples.len(),
            self.wall
        )?;
        if self.counterexamples.is_empty() {
            write!(f, "    no counterexamples found (conjectures remain open)")
        } else {
            for c in &self.counterexamples {
                writeln!(f, "    {}: {} ({})", c.conjecture, c.input, c.detail)?;
            }
            Ok(())
        }
    }
}

/// Scans the unimodality conjecture for `R` and `S` and the
/// `(1 + q + q^2)`-divisibility of `R` when `3 | r`. Counterexamples are
/// reported, never failed.
pub fn conjectures(max_sum: u64) -> ConjectureReport {
    let start = Instant::now();
    let mut cases = 0;
    let mut counterexamples = Vec::new();
    let q3 = IntPoly::q_integer(3);
    for (r, s) in coprime_pairs(max_sum) {
        let x = rat(r, s);
        let d = qdeform(&x).expect("domain");
        cases += 1;
        if !d.num.is_unimodal() {
            counterexamples.push(Counterexample {
                conjecture: "unimodality of R".to_string(),
                input: x.to_string(),
                detail: format!("{}", d.num),
            });
        }
        if !d.den.is_unimodal() {
            counterexamples.push(Counterexample {
                conjecture: "unimodality of S".to_string(),
                input: x.to_string(),
                detail: format!("{}", d.den),
            });
        }
        if r % 3 == 0 {
            cases += 1;
            if d.num.exact_divide(&q3).is_err() {
                counterexamples.push(Counterexample {
                    conjecture: "(1+q+q^2) | R when 3 | r".to_string(),
                    input: x.to_string(),
                    detail: format!("{}", d.num),
                });
            }
        }
    }
    ConjectureReport {
        bounds: format!("r+s <= {max_sum}"),
        cases,
        counterexamples,
        wall: start.elapsed(),
    }
}

/// The named suites in canonical order.
pub const SUITE_NAMES: [&str; 10] = [
    "equality",
    "degrees",
    "qminus1",
    "positivity",
    "mediant",
    "closures",
    "matrices",
    "quiddity",
    "continuants",
    "ptolemy",
];

/// Runs one suite by name (sequences and jones included via `run_all`).
pub fn run_suite(name: &str, bounds: &Bounds) -> Option<SuiteReport> {
    let report = match name {
        "equality" => suite_equality(bounds),
        "degrees" => suite_degrees(bounds),
        "qminus1" => suite_qminus1(bounds),
        "positivity" => suite_positivity(bounds),
        "mediant" => suite_mediant(bounds),
        "closures" => suite_closures(bounds),
        "matrices" => suite_matrices(bounds),
        "quiddity" => suite_quiddity(bounds),
        "continuants" => suite_continuants(bounds),
        "ptolemy" => suite_ptolemy(bounds),
        "sequences" => suite_sequences(bounds),
        "jones" => suite_jones(bounds),
        _ => return None,
    };
    Some(report)
}

/// Every suite, in order.
pub fn all_suite_names() -> Vec<&'static str> {
    let mut names = SUITE_NAMES.to_vec();
    names.extend(["sequences", "jones"]);
    names
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_bounds() -> Bounds {
        Bounds {
            equality_sum: 30,
            closures_a_sum: 10,
            positivity_sum: 12,
            farey_depth: 4,
            matrices_sum: 20,
            random_sequences: 40,
            quiddity_sum: 20,
            random_triangulations: 20,
            ptolemy_sum: 12,
            fan_max: 5,
            qminus1_sum: 30,
            jones_sum: 12,
            fibonacci_n: 8,
            pell_n: 6,
            conjectures_sum: 15,
            seed: 42,
        }
    }

    #[test]
    fn all_suites_pass_on_small_bounds() {
        let b = small_bounds();
        for name in all_suite_names() {
            let report = run_suite(name, &b).unwrap();
            assert!(
                report.passed(),
                "suite {name} failed: {:?}",
                report.failures.first()
            );
            assert!(report.cases > 0, "suite {name} ran no cases");
        }
    }

    #[test]
    fn unknown_suite_is_none() {
        assert!(run_suite("nonsense", &small_bounds()).is_none());
    }

    #[test]
    fn conjecture_scan_is_clean_in_range() {
        let report = conjectures(15);
        assert!(report.counterexamples.is_empty());
        assert!(report.cases > 0);
    }
}
