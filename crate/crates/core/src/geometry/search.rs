//! Search for sub-collections of candidate lines with prescribed point
//! degree, line count and per-kind census.
//!
//! Depth-first, branching on the lines through the most constrained point
//! (the one with the fewest usable lines left relative to its deficit).
//! Lines are tried in index order and every solution is produced exactly
//! once: choosing line `l` for a point excludes all earlier usable lines
//! through that point from the subtree.

use super::{IncidenceStructure, LineKind};
use crate::error::{Error, Result};

/// Required number of lines of each kind; `None` leaves a kind unconstrained.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct KindCensus {
    pub commuting: Option<usize>,
    pub anticommuting: Option<usize>,
}

impl KindCensus {
    pub fn exact(commuting: usize, anticommuting: usize) -> Self {
        Self {
            commuting: Some(commuting),
            anticommuting: Some(anticommuting),
        }
    }

    fn limit(&self, kind: Option<LineKind>) -> Option<usize> {
        match kind {
            Some(LineKind::Commuting) => self.commuting,
            Some(LineKind::Anticommuting) => self.anticommuting,
            None => None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Stop after this many solutions.
    pub limit: Option<usize>,
}

impl SearchOptions {
    pub fn first() -> Self {
        Self { limit: Some(1) }
    }

    pub fn all() -> Self {
        Self { limit: None }
    }
}

/// All subsets of `b_target` lines of `candidates` in which every point lies
/// on exactly `r_target` chosen lines and the kind counts match `census`.
///
/// Each solution is a sorted list of indices into `candidates.lines()`; the
/// list of solutions is sorted. Infeasible targets give an empty list.
pub fn find_configuration(
    candidates: &IncidenceStructure,
    b_target: usize,
    r_target: usize,
    census: KindCensus,
    options: SearchOptions,
) -> Result<Vec<Vec<usize>>> {
    let v = candidates.num_points();
    if v > 64 {
        return Err(Error::BoundExceeded {
            what: "points for configuration search",
            value: v,
            bound: 64,
        });
    }
    let lines = candidates.lines();
    if let (Some(c), Some(a)) = (census.commuting, census.anticommuting) {
        let untagged = lines.iter().filter(|l| l.kind.is_none()).count();
        if c + a > b_target || c + a + untagged < b_target {
            return Ok(Vec::new());
        }
    }
    let total_incidences = v * r_target;
    let min_k = lines.iter().map(|l| l.len()).min().unwrap_or(0);
    let max_k = lines.iter().map(|l| l.len()).max().unwrap_or(0);
    if total_incidences < b_target * min_k || total_incidences > b_target * max_k {
        return Ok(Vec::new());
    }
    if b_target == 0 {
        return Ok(if r_target == 0 { vec![Vec::new()] } else { Vec::new() });
    }

    let mut through = vec![Vec::new(); v];
    for (i, l) in lines.iter().enumerate() {
        for &p in &l.points {
            through[p].push(i);
        }
    }
    let mut state = State {
        lines: lines.iter().map(|l| (l.points.clone(), l.kind)).collect(),
        through,
        b_target,
        r_target,
        census,
        limit: options.limit,
        degree: vec![0; v],
        excluded: vec![false; lines.len()],
        chosen: Vec::new(),
        kind_counts: [0; 3],
        solutions: Vec::new(),
    };
    state.dfs();
    let mut solutions = state.solutions;
    for s in &mut solutions {
        s.sort_unstable();
    }
    solutions.sort();
    Ok(solutions)
}

struct State {
    lines: Vec<(Vec<usize>, Option<LineKind>)>,
    through: Vec<Vec<usize>>,
    b_target: usize,
    r_target: usize,
    census: KindCensus,
    limit: Option<usize>,
    degree: Vec<usize>,
    excluded: Vec<bool>,
    chosen: Vec<usize>,
    kind_counts: [usize; 3],
    solutions: Vec<Vec<usize>>,
}

fn kind_slot(kind: Option<LineKind>) -> usize {
    match kind {
        Some(LineKind::Commuting) => 0,
        Some(LineKind::Anticommuting) => 1,
        None => 2,
    }
}

impl State {
    fn done(&self) -> bool {
        self.limit.is_some_and(|l| self.solutions.len() >= l)
    }

    fn usable(&self, l: usize) -> bool {
        if self.excluded[l] {
            return false;
        }
        let (pts, kind) = &self.lines[l];
        if pts.iter().any(|&p| self.degree[p] >= self.r_target) {
            return false;
        }
        match self.census.limit(*kind) {
            Some(max) => self.kind_counts[kind_slot(*kind)] < max,
            None => true,
        }
    }

    fn census_met(&self) -> bool {
        [LineKind::Commuting, LineKind::Anticommuting].into_iter().all(|k| {
            self.census
                .limit(Some(k))
                .is_none_or(|c| self.kind_counts[kind_slot(Some(k))] == c)
        })
    }

    fn dfs(&mut self) {
        if self.done() {
            return;
        }
        let remaining = self.b_target - self.chosen.len();
        if remaining == 0 {
            if self.degree.iter().all(|&d| d == self.r_target) && self.census_met() {
                self.solutions.push(self.chosen.clone());
            }
            return;
        }

        // Most constrained point with a deficit.
        let mut best: Option<(usize, Vec<usize>)> = None;
        for p in 0..self.degree.len() {
            let deficit = self.r_target - self.degree[p];
            if deficit == 0 {
                continue;
            }
            let options: Vec<usize> = self.through[p].iter().copied().filter(|&l| self.usable(l)).collect();
            if options.len() < deficit {
                return;
            }
            let slack = options.len() - deficit;
            if best.as_ref().is_none_or(|(s, _)| slack < *s) {
                best = Some((slack, options));
            }
        }
        let Some((_, options)) = best else {
            return;
        };

        let mut newly_excluded = Vec::new();
        for l in options {
            if self.done() {
                break;
            }
            // a chosen line stays excluded from its own subtree and from the
            // later sibling branches
            let usable = self.usable(l);
            self.excluded[l] = true;
            newly_excluded.push(l);
            if usable {
                self.include(l);
                self.dfs();
                self.remove(l);
            }
        }
        for l in newly_excluded {
            self.excluded[l] = false;
        }
    }

    fn include(&mut self, l: usize) {
        let (pts, kind) = &self.lines[l];
        for &p in pts {
            self.degree[p] += 1;
        }
        self.kind_counts[kind_slot(*kind)] += 1;
        self.chosen.push(l);
    }

    fn remove(&mut self, l: usize) {
        let (pts, kind) = &self.lines[l];
        for &p in pts {
            self.degree[p] -= 1;
        }
        self.kind_counts[kind_slot(*kind)] -= 1;
        self.chosen.pop();
    }
}
