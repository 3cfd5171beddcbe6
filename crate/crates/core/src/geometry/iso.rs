use std::collections::BTreeMap;

use super::IncidenceStructure;
use crate::error::{Error, Result};

/// Default limit on the number of points either structure may have.
pub const DEFAULT_ISOMORPHISM_BOUND: usize = 40;

/// Whether some point bijection carries the lines of `a` onto the lines of `b`.
pub fn are_isomorphic(a: &IncidenceStructure, b: &IncidenceStructure) -> Result<bool> {
    are_isomorphic_bounded(a, b, DEFAULT_ISOMORPHISM_BOUND)
}

pub fn are_isomorphic_bounded(a: &IncidenceStructure, b: &IncidenceStructure, max_points: usize) -> Result<bool> {
    Ok(find_isomorphism_bounded(a, b, max_points)?.is_some())
}

/// A point map `m` with `m[p]` the image in `b` of point `p` of `a`.
pub fn find_isomorphism(a: &IncidenceStructure, b: &IncidenceStructure) -> Result<Option<Vec<usize>>> {
    find_isomorphism_bounded(a, b, DEFAULT_ISOMORPHISM_BOUND)
}

fn find_isomorphism_bounded(
    a: &IncidenceStructure,
    b: &IncidenceStructure,
    max_points: usize,
) -> Result<Option<Vec<usize>>> {
    for s in [a, b] {
        if s.num_points() > max_points {
            return Err(Error::BoundExceeded {
                what: "points for isomorphism search",
                value: s.num_points(),
                bound: max_points,
            });
        }
    }
    if a.num_points() != b.num_points() || a.num_lines() != b.num_lines() {
        return Ok(None);
    }
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return Ok(None);
    }

    let search = Search {
        pairs_a: a.pair_counts(),
        pairs_b: b.pair_counts(),
        order: search_order(a),
        target_lines: line_multiset(b.lines().iter().map(|l| l.points.clone())),
        a,
        sig_a,
        sig_b,
    };
    let v = a.num_points();
    let mut map = vec![usize::MAX; v];
    let mut used = vec![false; v];
    Ok(search.extend(0, &mut map, &mut used).then_some(map))
}

/// Per-point invariant: sorted sizes of the lines through the point.
fn signatures(s: &IncidenceStructure) -> Vec<Vec<usize>> {
    let mut sig = vec![Vec::new(); s.num_points()];
    for line in s.lines() {
        for &p in &line.points {
            sig[p].push(line.len());
        }
    }
    for v in &mut sig {
        v.sort_unstable();
    }
    sig
}

fn line_multiset(lines: impl Iterator<Item = Vec<usize>>) -> BTreeMap<Vec<usize>, usize> {
    let mut out = BTreeMap::new();
    for mut l in lines {
        l.sort_unstable();
        *out.entry(l).or_insert(0) += 1;
    }
    out
}

/// Visits points so that each one shares lines with as many already-placed
/// points as possible, starting from the highest degree.
fn search_order(s: &IncidenceStructure) -> Vec<usize> {
    let v = s.num_points();
    let pairs = s.pair_counts();
    let deg = s.point_degrees();
    let mut placed = vec![false; v];
    let mut order = Vec::with_capacity(v);
    for _ in 0..v {
        let next = (0..v)
            .filter(|&p| !placed[p])
            .max_by_key(|&p| {
                let links: usize = order.iter().map(|&q: &usize| usize::from(pairs[p][q] > 0)).sum();
                (links, deg[p], std::cmp::Reverse(p))
            })
            .expect("unplaced point remains");
        placed[next] = true;
        order.push(next);
    }
    order
}

struct Search<'a> {
    a: &'a IncidenceStructure,
    pairs_a: Vec<Vec<usize>>,
    pairs_b: Vec<Vec<usize>>,
    sig_a: Vec<Vec<usize>>,
    sig_b: Vec<Vec<usize>>,
    order: Vec<usize>,
    target_lines: BTreeMap<Vec<usize>, usize>,
}

impl Search<'_> {
    fn extend(&self, depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if depth == self.order.len() {
            return self.lines_match(map);
        }
        let p = self.order[depth];
        for q in 0..map.len() {
            if used[q] || self.sig_a[p] != self.sig_b[q] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&prev| self.pairs_a[p][prev] == self.pairs_b[q][map[prev]]);
            if !consistent {
                continue;
            }
            map[p] = q;
            used[q] = true;
            if self.extend(depth + 1, map, used) {
                return true;
            }
            used[q] = false;
            map[p] = usize::MAX;
        }
        false
    }

    fn lines_match(&self, map: &[usize]) -> bool {
        let image = line_multiset(
            self.a
                .lines()
                .iter()
                .map(|l| l.points.iter().map(|&p| map[p]).collect()),
        );
        image == self.target_lines
    }
}
