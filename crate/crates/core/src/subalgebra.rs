//! Subsets of the two-qubit Pauli basis that close into subalgebras.
//!
//! For Pauli strings `[a, b]` is zero when they commute and `2ab` when they
//! anticommute, so closure under commutators is closure of anticommuting
//! pairs under the projective product. Closure under multiplication asks
//! the same of every pair.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{operator_lines, operator_structure, IncidenceStructure, LineKind};
use crate::pauli::{all_points, centralizer, PauliString};

/// A set of distinct non-identity Pauli strings on the same number of qubits.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OperatorSet {
    n_qubits: usize,
    members: BTreeSet<PauliString>,
}

impl OperatorSet {
    pub fn new(n_qubits: usize, members: impl IntoIterator<Item = PauliString>) -> Result<Self> {
        let members: BTreeSet<PauliString> = members.into_iter().collect();
        for m in &members {
            if m.n_qubits() != n_qubits {
                return Err(Error::QubitMismatch {
                    left: n_qubits,
                    right: m.n_qubits(),
                });
            }
            if m.is_identity() {
                return Err(Error::InvalidArgument("operator sets exclude the identity".into()));
            }
        }
        Ok(Self { n_qubits, members })
    }

    /// Parses comma-separated labels such as `"XX,YX,ZX"`; the first label fixes `n`.
    pub fn parse(labels: &str) -> Result<Self> {
        let strings: Vec<PauliString> = labels
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect::<Result<_>>()?;
        let n = strings
            .first()
            .map(PauliString::n_qubits)
            .ok_or_else(|| Error::InvalidArgument("empty operator set".into()))?;
        if strings.iter().collect::<BTreeSet<_>>().len() != strings.len() {
            return Err(Error::InvalidArgument(format!("repeated label in {labels:?}")));
        }
        Self::new(n, strings)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn members(&self) -> &BTreeSet<PauliString> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &PauliString) -> bool {
        self.members.contains(p)
    }

    pub fn labels(&self) -> Vec<String> {
        self.members.iter().map(PauliString::label).collect()
    }

    pub fn to_vec(&self) -> Vec<PauliString> {
        self.members.iter().copied().collect()
    }
}

impl fmt::Display for OperatorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(", "))
    }
}

/// Smallest superset of `seed` containing the product of every anticommuting pair.
pub fn lie_closure(seed: &OperatorSet) -> Result<OperatorSet> {
    if seed.is_empty() {
        return Err(Error::InvalidArgument("lie_closure needs a non-empty seed".into()));
    }
    let mut members = seed.members.clone();
    loop {
        let new: Vec<PauliString> = members
            .iter()
            .tuple_combinations()
            .filter(|(a, b)| !a.commutes_with(b))
            .map(|(a, b)| a.projective_product(b))
            .filter(|c| !members.contains(c))
            .collect();
        if new.is_empty() {
            break;
        }
        members.extend(new);
    }
    OperatorSet::new(seed.n_qubits, members)
}

/// Every pairwise product lies in the set or is the identity.
pub fn product_closure_check(s: &OperatorSet) -> bool {
    s.members
        .iter()
        .tuple_combinations()
        .all(|(a, b)| s.contains(&a.projective_product(b)))
}

/// Every anticommuting pair's product lies in the set.
pub fn commutation_closure_check(s: &OperatorSet) -> bool {
    s.members
        .iter()
        .tuple_combinations()
        .filter(|(a, b)| !a.commutes_with(b))
        .all(|(a, b)| s.contains(&a.projective_product(b)))
}

/// Members that commute with every other member.
pub fn center(s: &OperatorSet) -> Vec<PauliString> {
    s.members
        .iter()
        .filter(|a| s.members.iter().all(|b| a.commutes_with(b)))
        .copied()
        .collect()
}

/// Internal line counts by kind.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineCensus {
    pub commuting: usize,
    pub anticommuting: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SubalgebraLabel {
    #[serde(rename = "su2su2u1-heptad")]
    Su2Su2U1Heptad,
    #[serde(rename = "so5-decad")]
    So5Decad,
    #[serde(rename = "full-su4")]
    FullSu4,
    #[serde(rename = "other")]
    Other,
}

impl SubalgebraLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Su2Su2U1Heptad => "su2su2u1-heptad",
            Self::So5Decad => "so5-decad",
            Self::FullSu4 => "full-su4",
            Self::Other => "other",
        }
    }
}

impl fmt::Display for SubalgebraLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraReport {
    pub members: OperatorSet,
    pub closed_under_commutation: bool,
    pub closed_under_product: bool,
    pub line_census: LineCensus,
    pub center: Vec<PauliString>,
    /// Number of internal lines through each member, in member order.
    pub point_degrees: Vec<usize>,
    pub label: SubalgebraLabel,
}

/// Computes closure flags, center and internal line census, and derives the label:
///
/// * 7 members, commutation-closed, one-element center, 4 anticommuting and
///   3 commuting lines: `su2su2u1-heptad`;
/// * 10 members, commutation-closed, empty center, 10 anticommuting lines
///   and no commuting ones, every member on 3 lines: `so5-decad`;
/// * all 15 two-qubit points: `full-su4`;
/// * anything else: `other`.
pub fn classify(s: &OperatorSet) -> SubalgebraReport {
    let points = s.to_vec();
    let lines = operator_lines(&points).expect("operator sets hold valid points");
    let mut census = LineCensus::default();
    let mut degrees = vec![0; points.len()];
    for line in &lines {
        match line.kind {
            LineKind::Commuting => census.commuting += 1,
            LineKind::Anticommuting => census.anticommuting += 1,
        }
        for p in &line.points {
            if let Ok(k) = points.binary_search(p) {
                degrees[k] += 1;
            }
        }
    }
    let closed_under_commutation = commutation_closure_check(s);
    let closed_under_product = product_closure_check(s);
    let center = center(s);

    let label = if s.len() == 7
        && closed_under_commutation
        && center.len() == 1
        && census
            == (LineCensus {
                commuting: 3,
                anticommuting: 4,
            }) {
        SubalgebraLabel::Su2Su2U1Heptad
    } else if s.len() == 10
        && closed_under_commutation
        && center.is_empty()
        && census
            == (LineCensus {
                commuting: 0,
                anticommuting: 10,
            })
        && degrees.iter().all(|&d| d == 3)
    {
        SubalgebraLabel::So5Decad
    } else if s.n_qubits() == 2 && s.len() == 15 {
        SubalgebraLabel::FullSu4
    } else {
        SubalgebraLabel::Other
    };

    SubalgebraReport {
        members: s.clone(),
        closed_under_commutation,
        closed_under_product,
        line_census: census,
        center,
        point_degrees: degrees,
        label,
    }
}

fn require_two_qubits(n: usize) -> Result<()> {
    if n == 2 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("expected 2 qubits, got {n}")))
    }
}

/// The heptad `{c} ∪ centralizer(c)` for a point `c`.
pub fn heptad(center_point: &PauliString) -> Result<SubalgebraReport> {
    require_two_qubits(center_point.n_qubits())?;
    let mut members = centralizer(center_point, 2)?;
    members.push(*center_point);
    Ok(classify(&OperatorSet::new(2, members)?))
}

/// One heptad per two-qubit point, in point order.
pub fn heptads(n: usize) -> Result<Vec<SubalgebraReport>> {
    require_two_qubits(n)?;
    all_points(2)?.iter().map(heptad).collect()
}

fn internal_geometry(r: &SubalgebraReport) -> Result<IncidenceStructure> {
    operator_structure(&r.members.to_vec())
}

/// The 7-point, 7-line internal geometry of a heptad.
pub fn heptad_geometry(r: &SubalgebraReport) -> Result<IncidenceStructure> {
    if r.label != SubalgebraLabel::Su2Su2U1Heptad {
        return Err(Error::WrongLabel {
            expected: SubalgebraLabel::Su2Su2U1Heptad.as_str(),
            found: r.label.as_str(),
        });
    }
    internal_geometry(r)
}

/// Whether the points pairwise anticommute.
pub fn mutually_anticommuting(points: &[PauliString]) -> bool {
    points.iter().tuple_combinations().all(|(a, b)| !a.commutes_with(b))
}

/// All maximal mutually anticommuting sets of two-qubit points, found by
/// exhaustive clique extension; `max_size` is the size they all share.
pub fn anticommuting_cliques(n: usize) -> Result<(usize, Vec<OperatorSet>)> {
    require_two_qubits(n)?;
    let points = all_points(2)?;
    let mut best: Vec<Vec<PauliString>> = Vec::new();
    let mut best_size = 0;
    let mut current = Vec::new();
    extend_clique(&points, 0, &mut current, &mut best, &mut best_size);
    let sets = best
        .into_iter()
        .map(|c| OperatorSet::new(2, c))
        .collect::<Result<Vec<_>>>()?;
    Ok((best_size, sets))
}

fn extend_clique(
    points: &[PauliString],
    start: usize,
    current: &mut Vec<PauliString>,
    best: &mut Vec<Vec<PauliString>>,
    best_size: &mut usize,
) {
    if current.len() > *best_size {
        *best_size = current.len();
        best.clear();
    }
    if current.len() == *best_size && !current.is_empty() {
        best.push(current.clone());
    }
    for k in start..points.len() {
        let p = points[k];
        if current.iter().all(|q| !q.commutes_with(&p)) {
            current.push(p);
            extend_clique(points, k + 1, current, best, best_size);
            current.pop();
        }
    }
}

/// All sets of five mutually anticommuting two-qubit points, canonically ordered.
pub fn pentads(n: usize) -> Result<Vec<OperatorSet>> {
    let (size, sets) = anticommuting_cliques(n)?;
    if size != 5 {
        return Err(Error::InvalidArgument(format!(
            "largest anticommuting set has {size} elements, expected 5"
        )));
    }
    Ok(sets)
}

/// The ten pairwise products of a pentad.
pub fn decad_from_pentad(p: &OperatorSet) -> Result<SubalgebraReport> {
    let members = p.to_vec();
    if p.n_qubits() != 2 || members.len() != 5 || !mutually_anticommuting(&members) {
        return Err(Error::NotAPentad(p.to_string()));
    }
    let products: Vec<PauliString> = members
        .iter()
        .tuple_combinations()
        .map(|(a, b)| a.projective_product(b))
        .collect();
    let decad = OperatorSet::new(2, products.iter().copied())?;
    if decad.len() != 10 {
        return Err(Error::NotAPentad(format!("{p}: pairwise products are not distinct")));
    }
    if decad.members().iter().any(|d| p.contains(d)) {
        return Err(Error::NotAPentad(format!("{p}: products meet the pentad")));
    }
    Ok(classify(&decad))
}

/// The internal 10-point geometry of a decad.
pub fn decad_geometry(r: &SubalgebraReport) -> Result<IncidenceStructure> {
    if r.label != SubalgebraLabel::So5Decad {
        return Err(Error::WrongLabel {
            expected: SubalgebraLabel::So5Decad.as_str(),
            found: r.label.as_str(),
        });
    }
    internal_geometry(r)
}
