//! Snake triangulations of an n-gon and the Ptolemy weight system that
//! recovers the q-deformation numerator and denominator from initial edge
//! weights.

use std::collections::HashMap;
use std::fmt;

use crate::contfrac::{expand_regular, reg_to_neg, CFRegular, CfError, Rational};
use crate::farey::{quiddity_classify, QuiddityClass};
use crate::poly::{LaurentPoly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PtolemyError {
    Cf(CfError),
    /// A propagation step required dividing by a non-monomial weight.
    NonMonomialDivisor {
        edge: (usize, usize),
    },
    /// Exact division failed while propagating.
    Division(PolyError),
}

impl fmt::Display for PtolemyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cf(e) => write!(f, "{e}"),
            Self::NonMonomialDivisor { edge } => {
                write!(f, "weight of edge {edge:?} is not a monomial")
            }
            Self::Division(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for PtolemyError {}

impl From<CfError> for PtolemyError {
    fn from(e: CfError) -> Self {
        Self::Cf(e)
    }
}

/// One triangle of the snake, in polygon vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    pub vertices: [usize; 3],
    /// The base edge: bottom edge of a base-down triangle, top edge of a
    /// base-up one.
    pub base: (usize, usize),
    pub base_down: bool,
}

/// Snake triangulation of an n-gon encoding a regular expansion.
///
/// Vertices are numbered 0 (bottom left), 1..=k+1 across the top, and
/// k+2..=n-1 along the bottom from right to left; vertex labels follow the
/// Farey sum rule from 0/1 at vertex 0 and 1/0 at vertex 1, so vertex k+1
/// carries the encoded rational.
#[derive(Debug, Clone)]
pub struct Triangulation {
    pub n: usize,
    pub vertex_labels: Vec<Rational>,
    pub triangles: Vec<Triangle>,
    /// Triangle incidence counts in vertex order `(1, 2, ..., n-1, 0)`, so
    /// the first k entries are the negative expansion.
    pub quiddity: Vec<u64>,
}

/// Builds the snake of `a_1` base-down, `a_2` base-up, ... triangles and
/// labels its vertices by iterated Farey sums.
pub fn triangulation_build(a: &CFRegular) -> Triangulation {
    let total: u64 = a.sum();
    let n = total as usize + 2;
    // Temporary vertex ids: top vertices get their final index directly
    // (1, 2, ...); bottom vertices are renumbered n-1, n-2, ... afterwards.
    let mut labels: HashMap<usize, Rational> = HashMap::new();
    let zero = Rational::new(0, 1).expect("0/1");
    labels.insert(0, zero);
    labels.insert(1, Rational::infinity());
    let mut next_top = 2usize;
    let mut bottom_created = 0usize;
    let mut cur_top = 1usize;
    let mut cur_bottom = 0usize;
    let mut triangles: Vec<Triangle> = Vec::new();
    let bottom_id = |creation: usize| n - 1 - creation;
    for (group, &count) in a.coeffs().iter().enumerate() {
        let base_down = group % 2 == 0;
        for _ in 0..count {
            if base_down {
                let v = bottom_id(bottom_created);
                bottom_created += 1;
                let label = labels[&cur_bottom].mediant(&labels[&cur_top]);
                labels.insert(v, label);
                triangles.push(Triangle {
                    vertices: [cur_top, cur_bottom, v],
                    base: (cur_bottom, v),
                    base_down: true,
                });
                cur_bottom = v;
            } else {
                let v = next_top;
                next_top += 1;
                let label = labels[&cur_bottom].mediant(&labels[&cur_top]);
                labels.insert(v, label);
                triangles.push(Triangle {
                    vertices: [cur_top, v, cur_bottom],
                    base: (cur_top, v),
                    base_down: false,
                });
                cur_top = v;
            }
        }
    }
    let vertex_labels: Vec<Rational> = (0..n)
        .map(|v| labels.remove(&v).expect("every vertex labeled"))
        .collect();
    let mut incidence = vec![0u64; n];
    for t in &triangles {
        for &v in &t.vertices {
            incidence[v] += 1;
        }
    }
    let quiddity: Vec<u64> = (1..n).chain([0]).map(|v| incidence[v]).collect();
    Triangulation {
        n,
        vertex_labels,
        triangles,
        quiddity,
    }
}

impl Triangulation {
    pub fn classify_quiddity(&self) -> QuiddityClass {
        quiddity_classify(&self.quiddity)
    }
}

/// Symmetric edge-weight table for the Ptolemy system; records every
/// Ptolemy quadruple it uses.
#[derive(Debug, Clone, Default)]
pub struct PtolemyWeights {
    weights: HashMap<(usize, usize), LaurentPoly>,
    quadruples: Vec<[usize; 4]>,
}

impl PtolemyWeights {
    fn key(i: usize, j: usize) -> (usize, usize) {
        (i.min(j), i.max(j))
    }

    pub fn set(&mut self, i: usize, j: usize, w: LaurentPoly) {
        self.weights.insert(Self::key(i, j), w);
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&LaurentPoly> {
        self.weights.get(&Self::key(i, j))
    }

    pub fn known_pairs(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.weights.keys()
    }

    pub fn quadruples(&self) -> &[[usize; 4]] {
        &self.quadruples
    }

    fn weight(&self, i: usize, j: usize) -> LaurentPoly {
        self.weights[&Self::key(i, j)].clone()
    }

    /// Solves the Ptolemy relation of the cyclically ordered quadruple
    /// `(p1, p2, p3, p4)` for the diagonal `x_{p1, p3}`:
    /// `x_{p1,p3} x_{p2,p4} = x_{p1,p2} x_{p3,p4} + x_{p2,p3} x_{p1,p4}`.
    fn solve_diagonal(&mut self, p: [usize; 4]) -> Result<(), PtolemyError> {
        let [p1, p2, p3, p4] = p;
        let rhs = &(&self.weight(p1, p2) * &self.weight(p3, p4))
            + &(&self.weight(p2, p3) * &self.weight(p1, p4));
        let divisor = self.weight(p2, p4);
        let value = divide_by_monomial(&rhs, &divisor)
            .ok_or(PtolemyError::NonMonomialDivisor { edge: (p2, p4) })?;
        self.quadruples.push(p);
        self.set(p1, p3, value);
        Ok(())
    }

    /// Checks the Ptolemy relation on every quadruple `i<j<k<l` whose six
    /// pairwise weights are all known. Returns the number checked.
    pub fn check_known_quadruples(&self, n: usize) -> Result<usize, [usize; 4]> {
        let mut checked = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.get(i, j).is_none() {
                    continue;
                }
                for k in j + 1..n {
                    if self.get(i, k).is_none() || self.get(j, k).is_none() {
                        continue;
                    }
                    for l in k + 1..n {
                        let all = self.get(i, l).is_some()
                            && self.get(j, l).is_some()
                            && self.get(k, l).is_some();
                        if !all {
                            continue;
                        }
                        let lhs = &self.weight(i, k) * &self.weight(j, l);
                        let rhs = &(&self.weight(i, j) * &self.weight(k, l))
                            + &(&self.weight(j, k) * &self.weight(i, l));
                        if lhs != rhs {
                            return Err([i, j, k, l]);
                        }
                        checked += 1;
                    }
                }
            }
        }
        Ok(checked)
    }
}

fn divide_by_monomial(p: &LaurentPoly, m: &LaurentPoly) -> Option<LaurentPoly> {
    let (exp, coeff) = m.single_term()?;
    if coeff == num_bigint::BigInt::from(1) {
        return Some(p.shift(-exp));
    }
    if coeff == num_bigint::BigInt::from(-1) {
        return Some((-p).shift(-exp));
    }
    None
}

/// Result of solving the Ptolemy system on a snake triangulation.
pub struct PtolemySolution {
    pub triangulation: Triangulation,
    pub weights: PtolemyWeights,
    /// `x_{0, k+1}`; satisfies `q^(n-3) x_{0,k+1} = R`.
    pub x_top: LaurentPoly,
    /// `x_{1, k+1}`; satisfies `q^(n-3) x_{1,k+1} = S`.
    pub x_side: LaurentPoly,
    pub k: usize,
}

/// Assigns the initial weights (the base of the l-th triangle carries
/// `q^l` when base-down, `q^-l` when base-up, every other edge 1) and
/// propagates to the weights `x_{0,k+1}` and `x_{1,k+1}`.
pub fn ptolemy_solve(x: &Rational) -> Result<PtolemySolution, PtolemyError> {
    let a = expand_regular(x)?;
    let tri = triangulation_build(&a);
    let k = reg_to_neg(&a).len();
    let mut w = PtolemyWeights::default();
    for t in &tri.triangles {
        let [u, v, z] = t.vertices;
        for (p, r) in [(u, v), (v, z), (u, z)] {
            w.set(p, r, LaurentPoly::one());
        }
    }
    for (ell, t) in tri.triangles.iter().enumerate() {
        let exp = if t.base_down {
            ell as i64
        } else {
            -(ell as i64)
        };
        w.set(t.base.0, t.base.1, LaurentPoly::monomial(exp));
    }
    // Skip diagonals x_{h-1, h+1} around each interior top vertex, by
    // fan propagation along the vertex link (divisors are spokes, which
    // are initial monomial weights).
    for h in 1..=k {
        let link = vertex_link(&tri, h);
        for t in 2..link.len() {
            let quad = cyclic_sort(tri.n, [link[0], link[t - 1], link[t], h]);
            // unknown diagonal is (link[0], link[t])
            let oriented = orient_for(quad, link[0], link[t]);
            w.solve_diagonal(oriented)?;
        }
    }
    let x_top = ptolgen(&w, 1, k)?;
    w.set(0, k + 1, x_top.clone());
    let x_side = if k >= 2 {
        let v = ptolgen(&w, 2, k)?;
        w.set(1, k + 1, v.clone());
        v
    } else {
        w.weight(1, 2)
    };
    Ok(PtolemySolution {
        triangulation: tri,
        weights: w,
        x_top,
        x_side,
        k,
    })
}

/// Closed determinant propagation: computes `x_{i-1, j+1}` from the
/// consecutive weights `x_{h, h+1}` and the skips `x_{h-1, h+1}`,
/// dividing only by the (monomial) product `x_{i,i+1} ... x_{j-1,j}`.
fn ptolgen(w: &PtolemyWeights, i: usize, j: usize) -> Result<LaurentPoly, PtolemyError> {
    let m = j + 1 - i;
    // tridiagonal determinant with diagonal x_{h-1,h+1} for h = i..=j,
    // expanded by the usual three-term recurrence
    let mut d_prev = LaurentPoly::one();
    let mut d_cur = LaurentPoly::one();
    for t in 1..=m {
        let h = i + t - 1;
        let diag = w.weight(h - 1, h + 1);
        let next = if t == 1 {
            diag
        } else {
            let sup = w.weight(i + t - 1, i + t);
            let sub = w.weight(i + t - 3, i + t - 2);
            &(&diag * &d_cur) - &(&(&sup * &sub) * &d_prev)
        };
        d_prev = std::mem::replace(&mut d_cur, next);
    }
    let mut denom = LaurentPoly::one();
    for h in i..j {
        denom = &denom * &w.weight(h, h + 1);
    }
    divide_by_monomial(&d_cur, &denom).ok_or(PtolemyError::NonMonomialDivisor { edge: (i, j) })
}

/// Link of a vertex: its neighbors in the triangulation, chained from one
/// end to the other.
fn vertex_link(tri: &Triangulation, v: usize) -> Vec<usize> {
    let mut adjacency: HashMap<usize, Vec<usize>> = HashMap::new();
    for t in &tri.triangles {
        if !t.vertices.contains(&v) {
            continue;
        }
        let others: Vec<usize> = t.vertices.iter().copied().filter(|&u| u != v).collect();
        adjacency.entry(others[0]).or_default().push(others[1]);
        adjacency.entry(others[1]).or_default().push(others[0]);
    }
    // endpoints have a single link neighbor; start at v-1 (the previous
    // top vertex or 0), which is always an endpoint for top vertices
    let start = v - 1;
    let mut chain = vec![start];
    let mut prev = usize::MAX;
    while let Some(nexts) = adjacency.get(chain.last().unwrap()) {
        let next = match nexts.iter().find(|&&u| u != prev) {
            Some(&u) => u,
            None => break,
        };
        prev = *chain.last().unwrap();
        chain.push(next);
        if adjacency[&next].len() == 1 {
            break;
        }
    }
    chain
}

/// Sorts four polygon indices into cyclic order (here simply ascending,
/// since the polygon is numbered around its boundary).
fn cyclic_sort(_n: usize, mut p: [usize; 4]) -> [usize; 4] {
    p.sort_unstable();
    p
}

/// Rotates the cyclic quadruple so the pair `(a, b)` sits on the diagonal
/// positions 1 and 3.
fn orient_for(p: [usize; 4], a: usize, b: usize) -> [usize; 4] {
    let pos = |x: usize| p.iter().position(|&y| y == x).unwrap();
    let (ia, ib) = (pos(a), pos(b));
    if (ia + 2) % 4 == ib {
        [p[ia], p[(ia + 1) % 4], p[ib], p[(ia + 3) % 4]]
    } else {
        // a and b are adjacent in cyclic order: cannot be a diagonal
        panic!("pair ({a}, {b}) is a side of the quadrilateral {p:?}");
    }
}

/// The fan polygon with `c` triangles around one apex and base offset
/// `beta`: a (c+2)-gon whose bottom edges carry weights
/// `1, q^(beta+1), ..., q^(beta+c-2), 1` and whose apex edges carry
/// `q^-beta, 1, ..., 1, q^-(beta+c-1)`.
///
/// Returns `x_{0,c}`, which equals `[c]_q q^-(beta+c-1)`.
pub fn fan_polygon_weight(c: u64, beta: i64) -> Result<LaurentPoly, PtolemyError> {
    let c = c as usize;
    assert!(c >= 2, "fan needs at least two triangles");
    let apex = c + 1;
    let mut w = PtolemyWeights::default();
    w.set(0, 1, LaurentPoly::one());
    for i in 1..c - 1 {
        w.set(i, i + 1, LaurentPoly::monomial(beta + i as i64));
    }
    w.set(c - 1, c, LaurentPoly::one());
    w.set(0, apex, LaurentPoly::monomial(-beta));
    w.set(c, apex, LaurentPoly::monomial(-(beta + c as i64 - 1)));
    for i in 1..c {
        w.set(i, apex, LaurentPoly::one());
    }
    for t in 2..=c {
        let quad = cyclic_sort(c + 2, [0, t - 1, t, apex]);
        let oriented = orient_for(quad, 0, t);
        w.solve_diagonal(oriented)?;
    }
    Ok(w.weight(0, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contfrac::expand_regular;
    use crate::deform::qdeform;
    use crate::poly::IntPoly;

    fn rat(r: u64, s: u64) -> Rational {
        Rational::new(r, s).unwrap()
    }

    #[test]
    fn hexagon_for_five_halves() {
        let a = expand_regular(&rat(5, 2)).unwrap();
        let tri = triangulation_build(&a);
        assert_eq!(tri.n, 6);
        let labels: Vec<String> = tri.vertex_labels.iter().map(|l| l.to_string()).collect();
        assert_eq!(labels, ["0/1", "1/0", "3/1", "5/2", "2/1", "1/1"]);
        assert_eq!(tri.quiddity, vec![3, 2, 1, 3, 2, 1]);
        assert_eq!(tri.classify_quiddity(), QuiddityClass::Triangulation);
    }

    #[test]
    fn hexagon_for_five_thirds() {
        let a = expand_regular(&rat(5, 3)).unwrap();
        let tri = triangulation_build(&a);
        assert_eq!(tri.n, 6);
        // vertex 3 = k+1 carries 5/3 (k = a_2 + a_4 = 2)
        assert_eq!(tri.vertex_labels[3], rat(5, 3));
    }

    #[test]
    fn quadrilateral_for_two() {
        let a = expand_regular(&rat(2, 1)).unwrap();
        let tri = triangulation_build(&a);
        assert_eq!(tri.n, 4);
        assert_eq!(tri.vertex_labels[2], rat(2, 1));
        assert_eq!(tri.classify_quiddity(), QuiddityClass::Triangulation);
    }

    #[test]
    fn vertex_label_is_the_rational() {
        for total in 3u64..=30 {
            for s in 1..total {
                let r = total - s;
                if r <= s || num_integer::gcd(r, s) != 1 {
                    continue;
                }
                let a = expand_regular(&rat(r, s)).unwrap();
                let tri = triangulation_build(&a);
                let k = a.even_position_sum() as usize;
                assert_eq!(tri.vertex_labels[k + 1], rat(r, s));
                assert_eq!(tri.classify_quiddity(), QuiddityClass::Triangulation);
            }
        }
    }

    #[test]
    fn ptolemy_five_halves() {
        let sol = ptolemy_solve(&rat(5, 2)).unwrap();
        let n = sol.triangulation.n as i64;
        assert_eq!(
            sol.x_top.shift(n - 3).to_int_poly().unwrap(),
            IntPoly::from_i64s(&[1, 2, 1, 1])
        );
        assert_eq!(
            sol.x_side.shift(n - 3).to_int_poly().unwrap(),
            IntPoly::from_i64s(&[1, 1])
        );
    }

    #[test]
    fn ptolemy_matches_qdeform_small() {
        for total in 3u64..=16 {
            for s in 1..total {
                let r = total - s;
                if r <= s || num_integer::gcd(r, s) != 1 {
                    continue;
                }
                let x = rat(r, s);
                let sol = ptolemy_solve(&x).unwrap();
                let shift = sol.triangulation.n as i64 - 3;
                let expected = qdeform(&x).unwrap();
                assert_eq!(
                    sol.x_top.shift(shift).to_int_poly().unwrap(),
                    expected.num,
                    "{x} numerator"
                );
                assert_eq!(
                    sol.x_side.shift(shift).to_int_poly().unwrap(),
                    expected.den,
                    "{x} denominator"
                );
                let checked = sol
                    .weights
                    .check_known_quadruples(sol.triangulation.n)
                    .unwrap();
                assert!(checked >= sol.weights.quadruples().len());
            }
        }
    }

    #[test]
    fn fan_formula() {
        for c in 2u64..=8 {
            for beta in 0i64..=3 {
                let x = fan_polygon_weight(c, beta).unwrap();
                let expected =
                    LaurentPoly::from(IntPoly::q_integer(c)).shift(-(beta + c as i64 - 1));
                assert_eq!(x, expected, "c={c} beta={beta}");
            }
        }
    }
}
