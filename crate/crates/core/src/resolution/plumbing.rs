use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::ResolutionError;
use crate::hj::cf_value;
use crate::lattice::{self, Inertia};

/// Star-shaped weighted tree. Position 0 of each arm is adjacent to the
/// center. A chain is a center with at most one arm.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct PlumbingGraph {
    pub center: i64,
    pub arms: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    center: i64,
    arms: Vec<Vec<i64>>,
    matrix: Vec<Vec<i64>>,
}

impl From<PlumbingGraph> for GraphRepr {
    fn from(g: PlumbingGraph) -> Self {
        let matrix = g.matrix();
        GraphRepr {
            center: g.center,
            arms: g.arms,
            matrix,
        }
    }
}

impl TryFrom<GraphRepr> for PlumbingGraph {
    type Error = ResolutionError;

    fn try_from(r: GraphRepr) -> Result<Self, Self::Error> {
        let g = PlumbingGraph::new(r.center, r.arms)?;
        if g.matrix() != r.matrix {
            return Err(ResolutionError::MalformedGraph(
                "matrix does not match center and arms".into(),
            ));
        }
        Ok(g)
    }
}

impl PlumbingGraph {
    pub fn new(center: i64, arms: Vec<Vec<i64>>) -> Result<Self, ResolutionError> {
        if arms.iter().any(|a| a.is_empty()) {
            return Err(ResolutionError::MalformedGraph("empty arm".into()));
        }
        Ok(PlumbingGraph { center, arms })
    }

    /// A chain `w₀ - w₁ - ⋯`, stored as center `w₀` with one arm.
    pub fn chain(weights: &[i64]) -> Result<Self, ResolutionError> {
        let (&first, rest) = weights
            .split_first()
            .ok_or_else(|| ResolutionError::MalformedGraph("empty chain".into()))?;
        let arms = if rest.is_empty() { vec![] } else { vec![rest.to_vec()] };
        PlumbingGraph::new(first, arms)
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.arms.iter().map(Vec::len).sum::<usize>()
    }

    /// Weights in vertex order: center, then each arm from the center outward.
    pub fn weights(&self) -> Vec<i64> {
        std::iter::once(self.center)
            .chain(self.arms.iter().flatten().copied())
            .collect()
    }

    /// Edges as vertex index pairs in the same order as [`Self::weights`].
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        let mut next = 1;
        for arm in &self.arms {
            edges.push((0, next));
            for k in 1..arm.len() {
                edges.push((next + k - 1, next + k));
            }
            next += arm.len();
        }
        edges
    }

    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let w = self.weights();
        let n = w.len();
        let mut m = vec![vec![0; n]; n];
        for (i, &x) in w.iter().enumerate() {
            m[i][i] = x;
        }
        for (a, b) in self.edges() {
            m[a][b] = 1;
            m[b][a] = 1;
        }
        m
    }

    /// Pivots of eliminating each arm from its tip toward the center. The
    /// center pivot is then `center − correction`. `None` if a pivot
    /// vanishes.
    pub fn star_elimination(&self) -> Option<StarElimination> {
        let mut arm_pivots = Vec::new();
        let mut correction = Ratio::<i128>::zero();
        for arm in &self.arms {
            let mut d = Ratio::from_integer(*arm.last()? as i128);
            arm_pivots.push(d);
            for &w in arm.iter().rev().skip(1) {
                if d.is_zero() {
                    return None;
                }
                d = Ratio::from_integer(w as i128) - d.recip();
                arm_pivots.push(d);
            }
            if d.is_zero() {
                return None;
            }
            correction += d.recip();
        }
        Some(StarElimination { arm_pivots, correction })
    }

    /// Inertia of the intersection matrix.
    pub fn inertia(&self) -> Inertia {
        match self.star_elimination().and_then(|s| s.evaluate(self.center)) {
            Some((inertia, _)) => inertia,
            None => lattice::inertia(&self.matrix()),
        }
    }

    pub fn determinant(&self) -> BigInt {
        match self.star_elimination().and_then(|s| s.evaluate(self.center)) {
            Some((_, det)) => BigInt::from(det),
            None => lattice::determinant(&self.matrix()),
        }
    }

    /// Leading principal minors with vertices ordered arm by arm, tip first,
    /// and the center last. `None` if a pivot vanishes.
    pub fn leaf_first_minors(&self) -> Option<Vec<Ratio<i128>>> {
        let elim = self.star_elimination()?;
        let center = Ratio::from_integer(self.center as i128) - elim.correction;
        let mut acc = Ratio::from_integer(1i128);
        Some(
            elim.arm_pivots
                .iter()
                .chain(std::iter::once(&center))
                .map(|d| {
                    acc *= *d;
                    acc
                })
                .collect(),
        )
    }

    /// Sylvester's criterion on [`Self::leaf_first_minors`], falling back
    /// to Bareiss minors in the natural vertex order.
    pub fn is_negative_definite(&self) -> bool {
        match self.leaf_first_minors() {
            Some(minors) => minors.iter().enumerate().all(|(i, d)| {
                if i % 2 == 0 {
                    d.is_negative()
                } else {
                    d.is_positive()
                }
            }),
            None => lattice::is_negative_definite(&self.matrix()),
        }
    }

    /// `center + Σ 1/[|w₁|, |w₂|, …]`, arms read from the center outward.
    pub fn seifert_euler(&self) -> Result<Ratio<i64>, ResolutionError> {
        let mut e = Ratio::from_integer(self.center);
        for arm in &self.arms {
            let abs: Vec<i64> = arm.iter().map(|w| w.abs()).collect();
            if abs.iter().any(|&w| w < 2) {
                return Err(ResolutionError::MalformedGraph(format!(
                    "arm {arm:?} has a weight of absolute value below 2"
                )));
            }
            e += cf_value(&abs).expect("nonempty arm");
        }
        Ok(e)
    }

    pub fn with_center(&self, center: i64) -> PlumbingGraph {
        PlumbingGraph {
            center,
            arms: self.arms.clone(),
        }
    }
}

/// Arm pivots shared by every choice of center weight.
#[derive(Debug, Clone)]
pub struct StarElimination {
    pub arm_pivots: Vec<Ratio<i128>>,
    pub correction: Ratio<i128>,
}

impl StarElimination {
    /// Inertia and determinant with the given center weight.
    pub fn evaluate(&self, center: i64) -> Option<(Inertia, i128)> {
        let mut inertia = Inertia::default();
        let mut det = Ratio::from_integer(1i128);
        let center_pivot = Ratio::from_integer(center as i128) - self.correction;
        for d in self.arm_pivots.iter().chain(std::iter::once(&center_pivot)) {
            if d.is_positive() {
                inertia.positive += 1;
            } else if d.is_negative() {
                inertia.negative += 1;
            } else {
                inertia.zero += 1;
            }
            det *= *d;
        }
        if !det.is_integer() {
            return None;
        }
        Some((inertia, det.to_integer()))
    }
}

/// Disjoint union of plumbing graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Configuration {
    pub components: Vec<PlumbingGraph>,
}

impl Configuration {
    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(PlumbingGraph::vertex_count).sum()
    }

    pub fn weights(&self) -> Vec<i64> {
        self.components.iter().flat_map(PlumbingGraph::weights).collect()
    }

    /// Block-diagonal intersection matrix.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.vertex_count();
        let mut m = vec![vec![0; n]; n];
        let mut off = 0;
        for g in &self.components {
            let block = g.matrix();
            for (i, row) in block.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    m[off + i][off + j] = x;
                }
            }
            off += block.len();
        }
        m
    }

    pub fn inertia(&self) -> Inertia {
        self.components
            .iter()
            .fold(Inertia::default(), |acc, g| acc.add(&g.inertia()))
    }

    pub fn determinant(&self) -> BigInt {
        self.components.iter().map(PlumbingGraph::determinant).product()
    }
}

/// Graphviz text with one node per curve labeled by its weight.
pub fn to_dot(name: &str, components: &[PlumbingGraph]) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{name}\" {{").unwrap();
    let mut off = 0;
    for g in components {
        for (i, w) in g.weights().iter().enumerate() {
            writeln!(out, "  v{} [label=\"{}\"];", off + i, w).unwrap();
        }
        for (a, b) in g.edges() {
            writeln!(out, "  v{} -- v{};", off + a, off + b).unwrap();
        }
        off += g.vertex_count();
    }
    out.push_str("}\n");
    out
}
