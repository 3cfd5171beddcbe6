//! Finite incidence structures built over operator points.
//!
//! An [`IncidenceStructure`] is a list of labeled points and a list of
//! lines, each line a set of point indices with optional metadata: a
//! [`LineKind`] (whether the operators on it commute) and a cyclic
//! orientation, which is how the arrows of the multiplication diagrams are
//! recorded.

mod iso;
mod lines;
mod search;

pub use iso::{are_isomorphic, are_isomorphic_bounded, find_isomorphism, DEFAULT_ISOMORPHISM_BOUND};
pub use lines::{operator_lines, operator_structure, symplectic_polar_space, OperatorLine, MAX_POLAR_SPACE_QUBITS};
pub use search::{find_configuration, KindCensus, SearchOptions};

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Whether the three operators on a line commute pairwise or anticommute pairwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LineKind {
    Commuting,
    Anticommuting,
}

impl LineKind {
    pub fn as_str(self) -> &'static str {
        match self {
            LineKind::Commuting => "commuting",
            LineKind::Anticommuting => "anticommuting",
        }
    }
}

/// A line: sorted point indices plus optional kind and cyclic orientation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line {
    pub points: Vec<usize>,
    pub kind: Option<LineKind>,
    pub orientation: Option<[usize; 3]>,
}

impl Line {
    pub fn new(points: impl IntoIterator<Item = usize>) -> Self {
        let mut points: Vec<usize> = points.into_iter().collect();
        points.sort_unstable();
        Self {
            points,
            kind: None,
            orientation: None,
        }
    }

    /// A three-point line whose arrow runs `a → b → c → a`.
    pub fn oriented(cycle: [usize; 3]) -> Self {
        Self {
            orientation: Some(canonical_cycle(cycle)),
            ..Self::new(cycle)
        }
    }

    pub fn with_kind(mut self, kind: LineKind) -> Self {
        self.kind = Some(kind);
        self
    }

    pub fn contains(&self, p: usize) -> bool {
        self.points.binary_search(&p).is_ok()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Rotates a cycle so it starts at its smallest element.
pub fn canonical_cycle(cycle: [usize; 3]) -> [usize; 3] {
    let start = (0..3).min_by_key(|&k| cycle[k]).unwrap_or(0);
    [cycle[start], cycle[(start + 1) % 3], cycle[(start + 2) % 3]]
}

/// Labeled points and lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceStructure {
    points: Vec<String>,
    lines: Vec<Line>,
}

impl IncidenceStructure {
    /// Validating constructor: labels unique, every line has at least two
    /// distinct in-range points, no repeated lines, orientations are
    /// permutations of their line. Lines are stored in sorted order.
    pub fn new(points: Vec<String>, lines: Vec<Line>) -> Result<Self> {
        let labels: BTreeSet<&String> = points.iter().collect();
        if labels.len() != points.len() {
            return Err(Error::InvalidStructure("duplicate point labels".into()));
        }
        let mut seen = BTreeSet::new();
        for line in &lines {
            if line.points.len() < 2 {
                return Err(Error::InvalidStructure(format!(
                    "line {:?} has fewer than two points",
                    line.points
                )));
            }
            if !seen.insert(line.points.clone()) {
                return Err(Error::InvalidStructure(format!("repeated line {:?}", line.points)));
            }
        }
        Self::new_relaxed(points, lines)
    }

    /// Like [`IncidenceStructure::new`] but allows lines with fewer than two
    /// points and repeated lines, which is what duals of degenerate
    /// structures look like.
    pub fn new_relaxed(points: Vec<String>, mut lines: Vec<Line>) -> Result<Self> {
        for line in &mut lines {
            line.points.sort_unstable();
            if line.points.iter().any(|&p| p >= points.len()) {
                return Err(Error::InvalidStructure(format!(
                    "line {:?} refers to a point outside 0..{}",
                    line.points,
                    points.len()
                )));
            }
            if line.points.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidStructure(format!(
                    "line {:?} repeats a point",
                    line.points
                )));
            }
            if let Some(cycle) = line.orientation {
                let mut sorted = cycle;
                sorted.sort_unstable();
                if sorted.as_slice() != line.points.as_slice() {
                    return Err(Error::InvalidStructure(format!(
                        "orientation {cycle:?} does not match line {:?}",
                        line.points
                    )));
                }
                line.orientation = Some(canonical_cycle(cycle));
            }
        }
        lines.sort();
        Ok(Self { points, lines })
    }

    /// Plain structure from labels and point-index blocks.
    pub fn from_blocks<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        blocks: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self> {
        Self::new(
            labels.into_iter().map(Into::into).collect(),
            blocks.into_iter().map(Line::new).collect(),
        )
    }

    pub fn empty() -> Self {
        Self {
            points: Vec::new(),
            lines: Vec::new(),
        }
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn point_index(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|p| p == label)
    }

    pub fn line_labels(&self, line: &Line) -> Vec<&str> {
        line.points.iter().map(|&p| self.points[p].as_str()).collect()
    }

    /// Number of lines through each point.
    pub fn point_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.points.len()];
        for line in &self.lines {
            for &p in &line.points {
                deg[p] += 1;
            }
        }
        deg
    }

    /// `counts[a][b]` = number of lines containing both `a` and `b`.
    pub fn pair_counts(&self) -> Vec<Vec<usize>> {
        let v = self.points.len();
        let mut counts = vec![vec![0; v]; v];
        for line in &self.lines {
            for (&a, &b) in line.points.iter().tuple_combinations() {
                counts[a][b] += 1;
                counts[b][a] += 1;
            }
        }
        counts
    }

    /// Per-kind count of lines `(commuting, anticommuting, untagged)`.
    pub fn kind_census(&self) -> (usize, usize, usize) {
        self.lines.iter().fold((0, 0, 0), |(c, a, u), l| match l.kind {
            Some(LineKind::Commuting) => (c + 1, a, u),
            Some(LineKind::Anticommuting) => (c, a + 1, u),
            None => (c, a, u + 1),
        })
    }

    /// Sub-structure on the given points (relabeled in the given order),
    /// keeping exactly the lines that lie inside it.
    pub fn restrict(&self, keep: &[usize]) -> Result<Self> {
        let mut index = vec![None; self.points.len()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = Some(new);
        }
        let labels = keep.iter().map(|&p| self.points[p].clone()).collect();
        let lines = self
            .lines
            .iter()
            .filter(|l| l.points.iter().all(|&p| index[p].is_some()))
            .map(|l| Line {
                points: l.points.iter().map(|&p| index[p].unwrap()).collect(),
                kind: l.kind,
                orientation: l.orientation.map(|c| c.map(|p| index[p].unwrap())),
            })
            .collect();
        Self::new_relaxed(labels, lines)
    }
}

/// Basic parameters of an incidence structure. `r`, `k`, `lambda` are set
/// only when constant across the structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignParameters {
    pub v: usize,
    pub b: usize,
    pub r: Option<usize>,
    pub k: Option<usize>,
    pub lambda: Option<usize>,
    pub is_2_design: bool,
    pub is_projective_plane: bool,
    pub is_configuration: bool,
}

fn constant(values: impl IntoIterator<Item = usize>) -> Option<usize> {
    let mut it = values.into_iter();
    let first = it.next()?;
    it.all(|x| x == first).then_some(first)
}

/// Computes `v`, `b`, `r`, `k`, `λ` and the structural flags.
///
/// * `is_2_design`: `k` and `λ ≥ 1` constant, with `2 ≤ k < v`.
/// * `is_configuration`: `r` and `k` constant and no two points share more
///   than one line (a `(v_r, b_k)` configuration).
pub fn design_params(s: &IncidenceStructure) -> DesignParameters {
    let v = s.num_points();
    let b = s.num_lines();
    let r = constant(s.point_degrees());
    let k = constant(s.lines().iter().map(Line::len));
    let pairs = s.pair_counts();
    let lambda = constant((0..v).tuple_combinations().map(|(a, c)| pairs[a][c]));
    let max_pair = (0..v).tuple_combinations().map(|(a, c)| pairs[a][c]).max().unwrap_or(0);
    let is_2_design = matches!((k, lambda), (Some(k), Some(l)) if l >= 1 && k >= 2 && k < v);
    let is_configuration = r.is_some() && k.is_some() && b > 0 && max_pair <= 1;
    DesignParameters {
        v,
        b,
        r,
        k,
        lambda,
        is_2_design,
        is_projective_plane: is_projective_plane(s),
        is_configuration,
    }
}

/// Two points on exactly one common line, two lines meeting in exactly one
/// point, and four points with no three collinear.
pub fn is_projective_plane(s: &IncidenceStructure) -> bool {
    let v = s.num_points();
    if v < 4 || s.num_lines() < 2 {
        return false;
    }
    let pairs = s.pair_counts();
    if !(0..v).tuple_combinations().all(|(a, c)| pairs[a][c] == 1) {
        return false;
    }
    let lines_meet_once = s
        .lines()
        .iter()
        .tuple_combinations()
        .all(|(l, m)| l.points.iter().filter(|&&p| m.contains(p)).count() == 1);
    if !lines_meet_once {
        return false;
    }
    let collinear = |a: usize, b: usize, c: usize| {
        s.lines()
            .iter()
            .any(|l| l.contains(a) && l.contains(b) && l.contains(c))
    };
    (0..v).combinations(4).any(|q| {
        q.iter()
            .copied()
            .tuple_combinations()
            .all(|(a, b, c)| !collinear(a, b, c))
    })
}

/// Point/line dual. The new points are the old lines, labeled by joining
/// their point labels with `-`; each old point becomes the line of old
/// lines through it. Kinds and orientations are dropped.
pub fn dual(s: &IncidenceStructure) -> IncidenceStructure {
    let labels: Vec<String> = s
        .lines()
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let name = s.line_labels(l).join("-");
            if s.lines()[..i].iter().any(|m| m.points == l.points) {
                format!("{name}#{i}")
            } else {
                name
            }
        })
        .collect();
    let lines = (0..s.num_points())
        .map(|p| Line::new((0..s.num_lines()).filter(|&l| s.lines()[l].contains(p))))
        .collect();
    IncidenceStructure::new_relaxed(labels, lines).expect("dual of a valid structure is valid")
}

/// Generalized quadrangle of order (2, 2): three points per line, three
/// lines per point, two points on at most one line, and for every point
/// `P` off a line `L` exactly one point of `L` collinear with `P`.
pub fn gq22_check(s: &IncidenceStructure) -> bool {
    if s.num_points() == 0 || s.num_lines() == 0 {
        return false;
    }
    if s.lines().iter().any(|l| l.len() != 3) || s.point_degrees().iter().any(|&d| d != 3) {
        return false;
    }
    let pairs = s.pair_counts();
    let v = s.num_points();
    if (0..v).tuple_combinations().any(|(a, b)| pairs[a][b] > 1) {
        return false;
    }
    s.lines().iter().all(|line| {
        (0..v)
            .filter(|&p| !line.contains(p))
            .all(|p| line.points.iter().filter(|&&q| pairs[p][q] == 1).count() == 1)
    })
}
