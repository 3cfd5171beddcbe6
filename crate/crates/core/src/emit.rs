//! Text, JSON and DOT renderings of the library's results.
//!
//! JSON for incidence structures:
//!
//! ```text
//! { "points": [label...],
//!   "lines": [{ "points": [...], "kind": "commuting"|"anticommuting"|null,
//!               "orientation": [label,label,label]|null }] }
//! ```
//!
//! DOT for incidence structures is the Levi graph: one round node per point,
//! one small square node per line, an edge for each incidence. Edges of
//! commuting lines are dashed; oriented lines carry their cycle as the
//! square's label.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::GaussianRational;
use crate::geometry::{design_params, IncidenceStructure, LineKind};
use crate::hypercomplex::{Octonion, OctonionTable};
use crate::liealg::StructureConstantAlgebra;
use crate::pauli::CommutationGraph;
use crate::subalgebra::{LineCensus, SubalgebraReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

impl OutputFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Text => "text",
            Self::Json => "json",
            Self::Dot => "dot",
        }
    }
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Self::Text),
            "json" => Ok(Self::Json),
            "dot" => Ok(Self::Dot),
            other => Err(Error::InvalidArgument(format!("unknown output format {other:?}"))),
        }
    }
}

/// Anything [`emit`] knows how to render.
#[derive(Clone, Copy, Debug)]
pub enum Payload<'a> {
    Structure(&'a IncidenceStructure),
    Graph(&'a CommutationGraph),
    Report(&'a SubalgebraReport),
    Algebra(&'a StructureConstantAlgebra),
    Table(&'a OctonionTable),
    Octonion(&'a Octonion),
}

impl Payload<'_> {
    fn name(&self) -> &'static str {
        match self {
            Payload::Structure(_) => "incidence structure",
            Payload::Graph(_) => "commutation graph",
            Payload::Report(_) => "subalgebra report",
            Payload::Algebra(_) => "Lie algebra",
            Payload::Table(_) => "octonion table",
            Payload::Octonion(_) => "octonion",
        }
    }
}

pub fn emit(payload: Payload<'_>, format: OutputFormat) -> Result<String> {
    let incompatible = || Error::IncompatibleFormat {
        format: format.as_str(),
        payload: payload.name(),
    };
    match (payload, format) {
        (Payload::Structure(s), OutputFormat::Json) => to_json(&structure_json(s)),
        (Payload::Structure(s), OutputFormat::Dot) => Ok(structure_dot(s)),
        (Payload::Structure(s), OutputFormat::Text) => Ok(structure_text(s)),
        (Payload::Graph(g), OutputFormat::Json) => to_json(&graph_json(g)),
        (Payload::Graph(g), OutputFormat::Dot) => Ok(graph_dot(g)),
        (Payload::Graph(g), OutputFormat::Text) => Ok(graph_text(g)),
        (Payload::Report(r), OutputFormat::Json) => to_json(&report_json(r)),
        (Payload::Report(r), OutputFormat::Text) => Ok(report_text(r)),
        (Payload::Algebra(a), OutputFormat::Json) => to_json(&algebra_json(a)),
        (Payload::Algebra(a), OutputFormat::Text) => Ok(algebra_text(a)),
        (Payload::Table(t), OutputFormat::Json) => to_json(&table_json(t)),
        (Payload::Table(t), OutputFormat::Text) => Ok(t.to_string()),
        (Payload::Octonion(o), OutputFormat::Json) => to_json(&octonion_json(o)),
        (Payload::Octonion(o), OutputFormat::Text) => Ok(format!("{o}\n")),
        _ => Err(incompatible()),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    Ok(s)
}

#[derive(Serialize)]
pub struct LineJson {
    pub points: Vec<String>,
    pub kind: Option<LineKind>,
    pub orientation: Option<Vec<String>>,
}

#[derive(Serialize)]
pub struct StructureJson {
    pub points: Vec<String>,
    pub lines: Vec<LineJson>,
}

pub fn structure_json(s: &IncidenceStructure) -> StructureJson {
    let name = |p: usize| s.points()[p].clone();
    StructureJson {
        points: s.points().to_vec(),
        lines: s
            .lines()
            .iter()
            .map(|l| LineJson {
                points: l.points.iter().map(|&p| name(p)).collect(),
                kind: l.kind,
                orientation: l.orientation.map(|c| c.iter().map(|&p| name(p)).collect()),
            })
            .collect(),
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn structure_dot(s: &IncidenceStructure) -> String {
    let mut out = String::from("graph levi {\n  node [shape=circle, fontsize=10];\n");
    for p in s.points() {
        let _ = writeln!(out, "  {} [label={}];", quote(&format!("p:{p}")), quote(p));
    }
    for (i, l) in s.lines().iter().enumerate() {
        let label = match l.orientation {
            Some(c) => c.iter().map(|&p| s.points()[p].as_str()).collect::<Vec<_>>().join("→"),
            None => String::new(),
        };
        let _ = writeln!(
            out,
            "  {} [shape=square, width=0.15, height=0.15, fixedsize=true, label=\"\", xlabel={}];",
            quote(&format!("l:{i}")),
            quote(&label)
        );
    }
    for (i, l) in s.lines().iter().enumerate() {
        let style = if l.kind == Some(LineKind::Commuting) {
            "dashed"
        } else {
            "solid"
        };
        for &p in &l.points {
            let _ = writeln!(
                out,
                "  {} -- {} [style={style}];",
                quote(&format!("p:{}", s.points()[p])),
                quote(&format!("l:{i}"))
            );
        }
    }
    out.push_str("}\n");
    out
}

fn structure_text(s: &IncidenceStructure) -> String {
    let p = design_params(s);
    let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
    let mut out = format!(
        "points: {}  lines: {}  r: {}  k: {}  lambda: {}\n",
        p.v,
        p.b,
        opt(p.r),
        opt(p.k),
        opt(p.lambda)
    );
    let _ = writeln!(
        out,
        "2-design: {}  projective plane: {}  configuration: {}",
        p.is_2_design, p.is_projective_plane, p.is_configuration
    );
    for l in s.lines() {
        let pts = s.line_labels(l).join(" ");
        let kind = l.kind.map_or("", LineKind::as_str);
        match l.orientation {
            Some(c) => {
                let cyc: Vec<&str> = c.iter().map(|&q| s.points()[q].as_str()).collect();
                let _ = writeln!(out, "  {{{pts}}} {kind} {}", cyc.join("→"));
            }
            None => {
                let _ = writeln!(out, "  {{{pts}}} {kind}");
            }
        }
    }
    out.lines().map(str::trim_end).collect::<Vec<_>>().join("\n") + "\n"
}

#[derive(Serialize)]
pub struct GraphJson {
    pub points: Vec<String>,
    pub degree: Option<usize>,
    pub adjacency: BTreeMap<String, Vec<String>>,
}

fn graph_json(g: &CommutationGraph) -> GraphJson {
    let labels: Vec<String> = g.points().iter().map(|p| p.label()).collect();
    let adjacency = g
        .adjacency()
        .into_iter()
        .enumerate()
        .map(|(v, nbrs)| (labels[v].clone(), nbrs.into_iter().map(|u| labels[u].clone()).collect()))
        .collect();
    GraphJson {
        degree: g.regular_degree(),
        points: labels,
        adjacency,
    }
}

fn graph_dot(g: &CommutationGraph) -> String {
    let labels: Vec<String> = g.points().iter().map(|p| p.label()).collect();
    let mut out = String::from("graph commutation {\n  node [shape=circle, fontsize=10];\n");
    for l in &labels {
        let _ = writeln!(out, "  {};", quote(l));
    }
    for (v, nbrs) in g.adjacency().into_iter().enumerate() {
        for u in nbrs.into_iter().filter(|&u| u > v) {
            let _ = writeln!(out, "  {} -- {};", quote(&labels[v]), quote(&labels[u]));
        }
    }
    out.push_str("}\n");
    out
}

fn graph_text(g: &CommutationGraph) -> String {
    let mut out = format!(
        "vertices: {}  edges: {}  degree: {}\n",
        g.num_vertices(),
        g.num_edges(),
        g.regular_degree().map_or("irregular".to_string(), |d| d.to_string())
    );
    for (v, nbrs) in g.adjacency().into_iter().enumerate() {
        let names: Vec<String> = nbrs.iter().map(|&u| g.points()[u].label()).collect();
        let _ = writeln!(out, "  {}: {}", g.points()[v].label(), names.join(" "));
    }
    out.lines().map(str::trim_end).collect::<Vec<_>>().join("\n") + "\n"
}

#[derive(Serialize)]
pub struct ReportJson {
    pub members: Vec<String>,
    pub closed_under_commutation: bool,
    pub closed_under_product: bool,
    pub line_census: LineCensus,
    pub center: Vec<String>,
    pub label: String,
}

pub fn report_json(r: &SubalgebraReport) -> ReportJson {
    ReportJson {
        members: r.members.labels(),
        closed_under_commutation: r.closed_under_commutation,
        closed_under_product: r.closed_under_product,
        line_census: r.line_census,
        center: r.center.iter().map(|p| p.label()).collect(),
        label: r.label.to_string(),
    }
}

fn report_text(r: &SubalgebraReport) -> String {
    let center: Vec<String> = r.center.iter().map(|p| p.label()).collect();
    format!(
        "{} {}\n  closed under commutators: {}  closed under products: {}\n  lines: {} commuting, {} anticommuting  center: {{{}}}\n",
        r.label,
        r.members,
        r.closed_under_commutation,
        r.closed_under_product,
        r.line_census.commuting,
        r.line_census.anticommuting,
        center.join(", ")
    )
}

#[derive(Serialize)]
pub struct ConstantJson {
    pub i: String,
    pub j: String,
    pub k: String,
    pub re: String,
    pub im: String,
}

#[derive(Serialize)]
pub struct AlgebraJson {
    pub basis: Vec<String>,
    pub constants: Vec<ConstantJson>,
}

fn algebra_json(a: &StructureConstantAlgebra) -> AlgebraJson {
    let name = |k: usize| a.labels()[k].clone();
    AlgebraJson {
        basis: a.labels().to_vec(),
        constants: a
            .sparse_constants()
            .into_iter()
            .map(|(i, j, k, f)| ConstantJson {
                i: name(i),
                j: name(j),
                k: name(k),
                re: f.re.to_string(),
                im: f.im.to_string(),
            })
            .collect(),
    }
}

/// `a`, `i·b`, or `a+bi` with rationals printed exactly.
pub fn format_gaussian(z: &GaussianRational) -> String {
    use num_traits::{One, Signed, Zero};
    let im = |b: &crate::exact::Rational| {
        if b.is_one() {
            "i".to_string()
        } else if (-b).is_one() {
            "-i".to_string()
        } else {
            format!("{b}i")
        }
    };
    match (z.re.is_zero(), z.im.is_zero()) {
        (true, true) => "0".into(),
        (false, true) => z.re.to_string(),
        (true, false) => im(&z.im),
        (false, false) => {
            let sign = if z.im.is_negative() { "-" } else { "+" };
            format!("{}{sign}{}", z.re, im(&z.im.abs()))
        }
    }
}

fn algebra_text(a: &StructureConstantAlgebra) -> String {
    let mut brackets: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
    for (i, j, k, f) in a.sparse_constants() {
        brackets
            .entry((i, j))
            .or_default()
            .push(format!("({})·{}", format_gaussian(&f), a.labels()[k]));
    }
    let mut out = format!("basis: {}\n", a.labels().join(" "));
    for ((i, j), terms) in brackets {
        let _ = writeln!(out, "  [{}, {}] = {}", a.labels()[i], a.labels()[j], terms.join(" + "));
    }
    out
}

fn table_json(t: &OctonionTable) -> Vec<Vec<String>> {
    t.rows()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect()
}

fn octonion_json(o: &Octonion) -> Vec<String> {
    o.coefficients.iter().map(ToString::to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::symplectic_polar_space;
    use crate::hypercomplex::{fano_from_table, oct_table};
    use crate::liealg::make_so4;
    use crate::pauli::commutation_graph;

    #[test]
    fn fano_json_shape() {
        let f = fano_from_table(&oct_table());
        let text = emit(Payload::Structure(&f), OutputFormat::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["points"].as_array().unwrap().len(), 7);
        let lines = v["lines"].as_array().unwrap();
        assert_eq!(lines.len(), 7);
        assert_eq!(lines[0]["points"], serde_json::json!(["e1", "e2", "e4"]));
        assert!(lines[0]["kind"].is_null());
        assert_eq!(lines[0]["orientation"], serde_json::json!(["e1", "e2", "e4"]));
    }

    #[test]
    fn doily_dot_has_thirty_nodes() {
        let w = symplectic_polar_space(2).unwrap();
        let dot = emit(Payload::Structure(&w), OutputFormat::Dot).unwrap();
        let nodes = dot
            .lines()
            .filter(|l| l.contains("[label=") || l.contains("[shape=square"))
            .count();
        assert_eq!(nodes, 30);
        assert_eq!(dot.matches(" -- ").count(), 45);
        assert!(dot.contains("style=dashed"));
        assert!(!dot.contains("style=solid"));
        assert_eq!(dot, emit(Payload::Structure(&w), OutputFormat::Dot).unwrap());
    }

    #[test]
    fn incompatible_formats() {
        let o = Octonion::one();
        assert!(matches!(
            emit(Payload::Octonion(&o), OutputFormat::Dot),
            Err(Error::IncompatibleFormat { .. })
        ));
        let a = make_so4();
        assert!(emit(Payload::Algebra(&a), OutputFormat::Dot).is_err());
        assert!("svg".parse::<OutputFormat>().is_err());
    }

    #[test]
    fn graph_json_adjacency() {
        let g = commutation_graph(2).unwrap();
        let text = emit(Payload::Graph(&g), OutputFormat::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["degree"], 6);
        assert_eq!(
            v["adjacency"]["ZI"],
            serde_json::json!(["IZ", "ZZ", "IX", "IY", "ZX", "ZY"])
        );
    }

    #[test]
    fn algebra_json_is_sparse() {
        let a = make_so4();
        let v: serde_json::Value =
            serde_json::from_str(&emit(Payload::Algebra(&a), OutputFormat::Json).unwrap()).unwrap();
        // [L,L] and [A,A] give 3 each, [L,A] gives 6
        assert_eq!(v["constants"].as_array().unwrap().len(), 12);
        assert_eq!(v["basis"][0], "Lx");
    }

    #[test]
    fn gaussian_formatting() {
        use crate::exact::{gauss, ratio, Rational};
        assert_eq!(format_gaussian(&gauss(0, 1)), "i");
        assert_eq!(format_gaussian(&gauss(0, -1)), "-i");
        assert_eq!(format_gaussian(&gauss(2, -3)), "2-3i");
        assert_eq!(
            format_gaussian(&GaussianRational::new(ratio(1, 2), Rational::from_integer(0.into()))),
            "1/2"
        );
    }
}
