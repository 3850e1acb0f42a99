//! Oriented path quivers dual to the snake triangulations and their
//! closure subsets: vertex sets with no outgoing edge into the complement.
//! Closure counts by cardinality recover the numerator and denominator
//! coefficients of the q-deformation.

use std::fmt;

use num_bigint::BigInt;

use crate::contfrac::CFRegular;
use crate::poly::IntPoly;

/// Largest vertex count accepted by the exhaustive subset scan.
pub const BRUTE_FORCE_LIMIT: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureError {
    /// The graph exceeds the brute-force bound; callers should fall back to
    /// the polynomial engines.
    Capacity { vertices: usize, limit: usize },
    /// `specialize_gf` needs one weight per vertex.
    WeightCount { expected: usize, got: usize },
}

impl fmt::Display for ClosureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Capacity { vertices, limit } => write!(
                f,
                "capacity: {vertices} vertices exceed the brute-force bound {limit}; use the polynomial route"
            ),
            Self::WeightCount { expected, got } => {
                write!(f, "expected {expected} weights, got {got}")
            }
        }
    }
}

impl std::error::Error for ClosureError {}

/// Edge direction in a path quiver. `Left` points toward the smaller
/// vertex index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Left,
    Right,
}

/// Oriented path graph: `vertex_count` vertices in a row, edge `i` joining
/// vertices `i` and `i+1` (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverPath {
    vertex_count: usize,
    directions: Vec<Direction>,
}

impl QuiverPath {
    pub fn new(vertex_count: usize, directions: Vec<Direction>) -> Self {
        assert_eq!(
            directions.len(),
            vertex_count.saturating_sub(1),
            "a path on n vertices has n-1 edges"
        );
        Self {
            vertex_count,
            directions,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    /// Drops the first `count` vertices (and their edges).
    pub fn drop_prefix(&self, count: usize) -> QuiverPath {
        let vertex_count = self.vertex_count.saturating_sub(count);
        let directions = if vertex_count == 0 {
            Vec::new()
        } else {
            self.directions[count..].to_vec()
        };
        QuiverPath {
            vertex_count,
            directions,
        }
    }

    /// Bit masks `(right_sources, left_sources_shifted)` for the closure
    /// predicate.
    fn violation_masks(&self) -> (u32, u32) {
        let mut right = 0u32;
        let mut left = 0u32;
        for (i, d) in self.directions.iter().enumerate() {
            match d {
                Direction::Right => right |= 1 << i,
                Direction::Left => left |= 1 << i,
            }
        }
        (right, left)
    }
}

impl fmt::Display for QuiverPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vertex_count == 0 {
            return write!(f, "(empty)");
        }
        write!(f, "o")?;
        for d in &self.directions {
            match d {
                Direction::Left => write!(f, "<-o")?,
                Direction::Right => write!(f, "->o")?,
            }
        }
        Ok(())
    }
}

/// Builds the graph dual to the snake of `[a_1, ..., a_2m]`: the first
/// `a_1 - 1` edges point left, the next `a_2` right, `a_3` left, and so on,
/// with the final group shortened to `a_2m - 1`; vertex count is
/// `sum(a) - 1`.
pub fn build_graph(a: &CFRegular) -> QuiverPath {
    let coeffs = a.coeffs();
    let mut directions = Vec::new();
    for (i, &ai) in coeffs.iter().enumerate() {
        let mut count = ai as usize;
        if i == 0 {
            count -= 1;
        }
        if i == coeffs.len() - 1 {
            count -= 1;
        }
        let dir = if i % 2 == 0 {
            Direction::Left
        } else {
            Direction::Right
        };
        directions.extend(std::iter::repeat_n(dir, count));
    }
    QuiverPath::new(a.sum() as usize - 1, directions)
}

/// The shorter graph for the denominator: [`build_graph`] with the first
/// `a_1` vertices removed.
pub fn build_graph_prime(a: &CFRegular) -> QuiverPath {
    build_graph(a).drop_prefix(a.coeffs()[0] as usize)
}

/// Every closure of the graph, stored as vertex bit sets.
#[derive(Debug, Clone)]
pub struct ClosureGF {
    vertex_count: usize,
    subsets: Vec<u32>,
}

impl ClosureGF {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn subsets(&self) -> &[u32] {
        &self.subsets
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    /// Closures as sorted 1-based vertex index lists.
    pub fn subsets_as_indices(&self) -> Vec<Vec<usize>> {
        self.subsets
            .iter()
            .map(|&mask| {
                (0..self.vertex_count)
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| i + 1)
                    .collect()
            })
            .collect()
    }
}

/// Exhaustive closure counts by cardinality (no subsets retained).
pub fn closure_counts(g: &QuiverPath) -> Result<Vec<u64>, ClosureError> {
    scan(g, |_| ())
}

/// Exhaustive enumeration: counts by cardinality plus the generating set.
pub fn enumerate_closures(g: &QuiverPath) -> Result<(Vec<u64>, ClosureGF), ClosureError> {
    let mut subsets = Vec::new();
    let counts = scan(g, |mask| subsets.push(mask))?;
    Ok((
        counts,
        ClosureGF {
            vertex_count: g.vertex_count,
            subsets,
        },
    ))
}

fn scan(g: &QuiverPath, mut on_closure: impl FnMut(u32)) -> Result<Vec<u64>, ClosureError> {
    let n = g.vertex_count;
    if n > BRUTE_FORCE_LIMIT {
        return Err(ClosureError::Capacity {
            vertices: n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let (right, left) = g.violation_masks();
    let mut counts = vec![0u64; n + 1];
    for mask in 0u32..(1u32 << n) {
        // right edge i violated: bit i set, bit i+1 clear
        let viol_r = ((mask & right) << 1) & !mask;
        // left edge i violated: bit i+1 set, bit i clear
        let viol_l = ((mask & (left << 1)) >> 1) & !mask;
        if viol_r | viol_l == 0 {
            counts[mask.count_ones() as usize] += 1;
            on_closure(mask);
        }
    }
    while counts.last() == Some(&0) && counts.len() > 1 {
        counts.pop();
    }
    Ok(counts)
}

/// Closure-count polynomial `sum_i counts[i] q^i`; equals the deformation
/// numerator for [`build_graph`] and the denominator for
/// [`build_graph_prime`].
pub fn closure_polynomial(g: &QuiverPath) -> Result<IntPoly, ClosureError> {
    let counts = closure_counts(g)?;
    Ok(IntPoly::from_coeffs(
        counts.into_iter().map(BigInt::from).collect(),
    ))
}

/// Specializes the multilinear closure generating function at
/// `y_i = q^weights[i]`: the sum over closures `C` of
/// `q^(sum of weights over C)`.
pub fn specialize_gf(gf: &ClosureGF, weights: &[u64]) -> Result<IntPoly, ClosureError> {
    if weights.len() != gf.vertex_count {
        return Err(ClosureError::WeightCount {
            expected: gf.vertex_count,
            got: weights.len(),
        });
    }
    let max_exp: u64 = weights.iter().sum();
    let mut coeffs = vec![BigInt::from(0); max_exp as usize + 1];
    for &mask in &gf.subsets {
        let exp: u64 = (0..gf.vertex_count)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| weights[i])
            .sum();
        coeffs[exp as usize] += 1;
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// The Jones counting graph on `sum(a)` vertices: `a_1` left edges, `a_2`
/// right, ..., with only the final group shortened. Counts are restricted
/// to closures containing vertices 1 and 2 together or not at all.
pub fn jones_graph(a: &CFRegular) -> QuiverPath {
    let coeffs = a.coeffs();
    let mut directions = Vec::new();
    for (i, &ai) in coeffs.iter().enumerate() {
        let mut count = ai as usize;
        if i == coeffs.len() - 1 {
            count -= 1;
        }
        let dir = if i % 2 == 0 {
            Direction::Left
        } else {
            Direction::Right
        };
        directions.extend(std::iter::repeat_n(dir, count));
    }
    QuiverPath::new(a.sum() as usize, directions)
}

/// Closure counts of [`jones_graph`] restricted to sets where vertices 1
/// and 2 are both inside or both outside; the counts are the Jones
/// polynomial coefficients.
pub fn jones_constrained_counts(a: &CFRegular) -> Result<Vec<u64>, ClosureError> {
    let g = jones_graph(a);
    let n = g.vertex_count;
    if n > BRUTE_FORCE_LIMIT {
        return Err(ClosureError::Capacity {
            vertices: n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let (right, left) = g.violation_masks();
    let mut counts = vec![0u64; n + 1];
    for mask in 0u32..(1u32 << n) {
        let viol_r = ((mask & right) << 1) & !mask;
        let viol_l = ((mask & (left << 1)) >> 1) & !mask;
        let pair = mask & 0b11;
        if viol_r | viol_l == 0 && (pair == 0 || pair == 0b11) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    while counts.last() == Some(&0) && counts.len() > 1 {
        counts.pop();
    }
    Ok(counts)
}
