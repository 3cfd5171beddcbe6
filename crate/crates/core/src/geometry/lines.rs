use std::collections::{BTreeMap, BTreeSet};

use super::{IncidenceStructure, Line, LineKind};
use crate::error::{Error, Result};
use crate::pauli::{all_points, product_phase, PauliString};

/// Largest qubit count accepted by [`symplectic_polar_space`].
pub const MAX_POLAR_SPACE_QUBITS: usize = 4;

/// A triple `{a, b, c}` of points with `a·b ∝ c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OperatorLine {
    /// Sorted.
    pub points: [PauliString; 3],
    pub kind: LineKind,
    /// For anticommuting lines, the cycle `(a, b, c)` with `a·b = +i·c`
    /// (and hence `b·c = +i·a`, `c·a = +i·b`), rotated to start at the
    /// smallest point. Commuting lines have no orientation.
    pub orientation: Option<[PauliString; 3]>,
}

fn validate(points: &[PauliString]) -> Result<()> {
    let Some(first) = points.first() else {
        return Ok(());
    };
    for p in points {
        if p.n_qubits() != first.n_qubits() {
            return Err(Error::QubitMismatch {
                left: first.n_qubits(),
                right: p.n_qubits(),
            });
        }
        if p.is_identity() {
            return Err(Error::InvalidArgument("the identity is not a geometric point".into()));
        }
    }
    let distinct: BTreeSet<_> = points.iter().collect();
    if distinct.len() != points.len() {
        return Err(Error::InvalidArgument("repeated point".into()));
    }
    Ok(())
}

/// All lines among `points`, in canonical order.
pub fn operator_lines(points: &[PauliString]) -> Result<Vec<OperatorLine>> {
    validate(points)?;
    let set: BTreeSet<PauliString> = points.iter().copied().collect();
    let sorted: Vec<PauliString> = set.iter().copied().collect();
    let mut out = Vec::new();
    for (i, a) in sorted.iter().enumerate() {
        for b in &sorted[i + 1..] {
            let c = a.projective_product(b);
            if c <= *b || !set.contains(&c) {
                continue;
            }
            let (kind, orientation) = if a.commutes_with(b) {
                (LineKind::Commuting, None)
            } else if product_phase(a, b) == 1 {
                (LineKind::Anticommuting, Some([*a, *b, c]))
            } else {
                (LineKind::Anticommuting, Some([*a, c, *b]))
            };
            out.push(OperatorLine {
                points: [*a, *b, c],
                kind,
                orientation,
            });
        }
    }
    Ok(out)
}

/// The points with all their operator lines, as an incidence structure.
pub fn operator_structure(points: &[PauliString]) -> Result<IncidenceStructure> {
    operator_structure_filtered(points, |_| true)
}

fn operator_structure_filtered(
    points: &[PauliString],
    keep: impl Fn(&OperatorLine) -> bool,
) -> Result<IncidenceStructure> {
    let lines = operator_lines(points)?;
    let mut sorted = points.to_vec();
    sorted.sort();
    let index: BTreeMap<PauliString, usize> = sorted.iter().enumerate().map(|(k, p)| (*p, k)).collect();
    let labels = sorted.iter().map(PauliString::label).collect();
    let lines = lines
        .iter()
        .filter(|l| keep(l))
        .map(|l| {
            let base = match l.orientation {
                Some(cycle) => Line::oriented(cycle.map(|p| index[&p])),
                None => Line::new(l.points.iter().map(|p| index[p])),
            };
            base.with_kind(l.kind)
        })
        .collect();
    IncidenceStructure::new(labels, lines)
}

/// `W_{2n−1}(2)`: all non-identity strings with the commuting (totally
/// isotropic) lines. For `n = 2` this is the generalized quadrangle GQ(2,2).
pub fn symplectic_polar_space(n: usize) -> Result<IncidenceStructure> {
    if n > MAX_POLAR_SPACE_QUBITS {
        return Err(Error::BoundExceeded {
            what: "qubit count for the polar space",
            value: n,
            bound: MAX_POLAR_SPACE_QUBITS,
        });
    }
    operator_structure_filtered(&all_points(n)?, |l| l.kind == LineKind::Commuting)
}
