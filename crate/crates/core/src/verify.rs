//! The end-to-end check suite behind `qgeom verify-all`.
//!
//! Each check renders what it expects and what it observed as short text;
//! a check passes exactly when the two agree. Sampled checks draw from a
//! ChaCha8 stream seeded by the caller, so a report is reproducible from
//! its seed.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geometry::{
    are_isomorphic, design_params, dual, find_configuration, gq22_check, is_projective_plane, operator_lines,
    operator_structure, symplectic_polar_space, KindCensus, LineKind, SearchOptions,
};
use crate::hypercomplex::{
    alternative_laws_hold, associator, fano_from_table, norm_composition_check, oct_table, quat_mul, quat_to_pauli,
    verify_index_rules, verify_sign_balance, Octonion, Quaternion, SignedUnit,
};
use crate::liealg::{
    change_basis, commuting_block_decomposition, fano_arrangement_so4, has_su2_constants, j_plus_minus, jacobi_check,
    make_so4, su2_triples,
};
use crate::pauli::{all_points, all_strings, commutation_graph, commutes, degree, multiply, to_matrix, PauliString};
use crate::subalgebra::{
    anticommuting_cliques, decad_from_pentad, decad_geometry, heptad_geometry, heptads, product_closure_check,
    OperatorSet, SubalgebraLabel,
};

pub const DEFAULT_SEED: u64 = 20_240_601;
pub const OCTONION_SAMPLES: usize = 10_000;
pub const QUATERNION_SAMPLES: usize = 1_000;
/// Coefficients of sampled elements lie in `-SAMPLE_BOUND..=SAMPLE_BOUND`.
pub const SAMPLE_BOUND: i64 = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunReport {
    pub name: &'static str,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
    pub elapsed: Duration,
}

impl RunReport {
    /// `PASS name` or `FAIL name`, followed by the observation (and, on
    /// failure, the expectation) and optionally the elapsed time.
    pub fn line(&self, with_time: bool) -> String {
        let mut s = format!(
            "{} {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.actual
        );
        if !self.passed {
            let _ = write!(s, " (expected: {})", self.expected);
        }
        if with_time {
            let _ = write!(s, " [{:.3} s]", self.elapsed.as_secs_f64());
        }
        s
    }
}

type Check = fn(u64) -> (String, String);

const CHECKS: [(&str, Check); 11] = [
    ("octonion table", octonion_table),
    ("fano plane", fano_plane),
    ("hypercomplex properties", hypercomplex_properties),
    ("pauli oracle", pauli_oracle),
    ("degree table", degree_table),
    ("two-qubit lines", two_qubit_lines),
    ("heptads", heptad_suite),
    ("pentads and decads", pentad_suite),
    ("doily", doily),
    ("mixed 15-line configuration", mixed_configuration),
    ("so(4)", so4_suite),
];

/// Names of the checks, in run order.
pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

/// Runs every check in order.
pub fn verify_all(seed: u64) -> Vec<RunReport> {
    CHECKS.iter().map(|&(name, check)| run(name, check, seed)).collect()
}

/// Runs the check called `name`, if there is one.
pub fn verify_one(name: &str, seed: u64) -> Option<RunReport> {
    CHECKS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|&(n, check)| run(n, check, seed))
}

fn run(name: &'static str, check: Check, seed: u64) -> RunReport {
    let start = Instant::now();
    let (expected, actual) = check(seed);
    RunReport {
        name,
        passed: expected == actual,
        expected,
        actual,
        elapsed: start.elapsed(),
    }
}

/// The report as text, one line per check plus a summary line.
pub fn render(reports: &[RunReport], with_time: bool) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.line(with_time));
        out.push('\n');
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    let _ = writeln!(out, "{passed}/{} checks passed", reports.len());
    out
}

fn yes_no(ok: bool, yes: &str, no: &str) -> String {
    if ok { yes } else { no }.to_string()
}

fn octonion_table(_: u64) -> (String, String) {
    let table = oct_table();
    // e_a e_b = e_c along each cyclic triple (i, i+1, i+3) mod 7, then
    // anticommutativity and e_i² = −1 fill the rest.
    let mut reference = [[SignedUnit { sign: -1, index: 0 }; 7]; 7];
    for i in 0..7 {
        let [a, b, c] = [i, (i + 1) % 7, (i + 3) % 7].map(|x| x as u8 + 1);
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            reference[x as usize - 1][y as usize - 1] = SignedUnit { sign: 1, index: z };
            reference[y as usize - 1][x as usize - 1] = SignedUnit { sign: -1, index: z };
        }
    }
    let matches = (0..7)
        .cartesian_product(0..7)
        .filter(|&(i, j)| table.get(i + 1, j + 1) == reference[i][j])
        .count();
    let expected = "49/49 products match; rows and columns 3+/3-; shift and doubling rules hold".to_string();
    let actual = format!(
        "{matches}/49 products match; {}; {}",
        yes_no(
            verify_sign_balance(&table),
            "rows and columns 3+/3-",
            "sign balance broken"
        ),
        yes_no(
            verify_index_rules(&table),
            "shift and doubling rules hold",
            "index rules broken"
        ),
    );
    (expected, actual)
}

fn fano_plane(_: u64) -> (String, String) {
    let f = fano_from_table(&oct_table());
    let p = design_params(&f);
    let opt = |x: Option<usize>| x.map_or("-".into(), |v| v.to_string());
    let self_dual = are_isomorphic(&f, &dual(&f)).unwrap_or(false);
    let expected = "v=7 b=7 r=3 k=3 lambda=1; projective plane; self-dual".to_string();
    let actual = format!(
        "v={} b={} r={} k={} lambda={}; {}; {}",
        p.v,
        p.b,
        opt(p.r),
        opt(p.k),
        opt(p.lambda),
        yes_no(is_projective_plane(&f), "projective plane", "not a projective plane"),
        yes_no(self_dual, "self-dual", "not self-dual"),
    );
    (expected, actual)
}

fn hypercomplex_properties(seed: u64) -> (String, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut octonion_ok = 0;
    for _ in 0..OCTONION_SAMPLES {
        let x = Octonion::random_integer(&mut rng, SAMPLE_BOUND);
        let y = Octonion::random_integer(&mut rng, SAMPLE_BOUND);
        if alternative_laws_hold(&x, &y) && norm_composition_check(&x, &y) {
            octonion_ok += 1;
        }
    }
    let witness = !associator(&Octonion::unit(1), &Octonion::unit(2), &Octonion::unit(3)).is_zero();

    let hom = |a: &Quaternion, b: &Quaternion| quat_to_pauli(&quat_mul(a, b)) == &quat_to_pauli(a) * &quat_to_pauli(b);
    let basis_ok = (0..4)
        .cartesian_product(0..4)
        .filter(|&(i, j)| hom(&Quaternion::basis(i), &Quaternion::basis(j)))
        .count();
    let random_ok = (0..QUATERNION_SAMPLES)
        .filter(|_| {
            let a = Quaternion::random_integer(&mut rng, SAMPLE_BOUND);
            let b = Quaternion::random_integer(&mut rng, SAMPLE_BOUND);
            hom(&a, &b)
        })
        .count();

    let expected = format!(
        "{OCTONION_SAMPLES}/{OCTONION_SAMPLES} octonion pairs alternative and composing; (e1,e2,e3) nonzero; \
         16/16 basis and {QUATERNION_SAMPLES}/{QUATERNION_SAMPLES} random quaternion products map to matrix products"
    );
    let actual = format!(
        "{octonion_ok}/{OCTONION_SAMPLES} octonion pairs alternative and composing; (e1,e2,e3) {}; \
         {basis_ok}/16 basis and {random_ok}/{QUATERNION_SAMPLES} random quaternion products map to matrix products",
        yes_no(witness, "nonzero", "zero"),
    );
    (expected, actual)
}

fn pauli_oracle(_: u64) -> (String, String) {
    let strings = all_strings(2).expect("two qubits enumerate");
    let matrix = |p: &PauliString| to_matrix(&p.with_phase(0)).expect("two-qubit matrices");
    let mats: Vec<_> = strings.iter().map(matrix).collect();
    let mut products = 0;
    for (i, a) in strings.iter().enumerate() {
        for (j, b) in strings.iter().enumerate() {
            let prod = multiply(&a.with_phase(0), &b.with_phase(0)).expect("same size");
            if to_matrix(&prod).expect("two-qubit matrices") == &mats[i] * &mats[j] {
                products += 1;
            }
        }
    }
    let points: Vec<usize> = (0..strings.len()).filter(|&k| !strings[k].is_identity()).collect();
    let mut commutations = 0;
    for &i in &points {
        for &j in &points {
            if commutes(&strings[i], &strings[j]).expect("same size") == mats[i].commutator(&mats[j]).is_zero() {
                commutations += 1;
            }
        }
    }
    (
        "256/256 products and 225/225 commutations agree with matrices".into(),
        format!("{products}/256 products and {commutations}/225 commutations agree with matrices"),
    )
}

fn degree_table(_: u64) -> (String, String) {
    let mut expected = Vec::new();
    let mut actual = Vec::new();
    for (n, d) in [(1, 0), (2, 6), (3, 30), (4, 126)] {
        expected.push(format!("N={n}: D={d}"));
        let graph = commutation_graph(n).ok().and_then(|g| g.regular_degree());
        let formula = degree(n).ok();
        actual.push(match (graph, formula) {
            (Some(g), Some(f)) if g as u128 == f => format!("N={n}: D={g}"),
            (g, f) => format!("N={n}: graph {g:?} vs formula {f:?}"),
        });
    }
    (expected.join(", "), actual.join(", "))
}

fn two_qubit_lines(_: u64) -> (String, String) {
    let points = all_points(2).expect("two qubits enumerate");
    let lines = operator_lines(&points).expect("valid points");
    let commuting = lines.iter().filter(|l| l.kind == LineKind::Commuting).count();
    let homogeneous = lines.iter().all(|l| {
        let [a, b, c] = l.points;
        let pairs = [a.commutes_with(&b), b.commutes_with(&c), a.commutes_with(&c)];
        pairs.iter().all(|&x| x == (l.kind == LineKind::Commuting))
    });
    let s = operator_structure(&points).expect("valid points");
    let pairs = s.pair_counts();
    let every_pair_once = (0..points.len()).tuple_combinations().all(|(i, j)| pairs[i][j] == 1);
    (
        "35 lines: 15 commuting, 20 anticommuting; homogeneous; every pair on one line".into(),
        format!(
            "{} lines: {commuting} commuting, {} anticommuting; {}; {}",
            lines.len(),
            lines.len() - commuting,
            yes_no(homogeneous, "homogeneous", "mixed lines"),
            yes_no(every_pair_once, "every pair on one line", "pair coverage broken"),
        ),
    )
}

fn heptad_suite(_: u64) -> (String, String) {
    let reports = heptads(2).expect("two qubits");
    let mut good = 0;
    for r in &reports {
        let Ok(g) = heptad_geometry(r) else { continue };
        let c = g.point_index(&r.center[0].label()).expect("center is a member");
        let commuting_through_center = g
            .lines()
            .iter()
            .filter(|l| l.kind == Some(LineKind::Commuting))
            .all(|l| l.contains(c));
        if product_closure_check(&r.members) && commuting_through_center {
            good += 1;
        }
    }
    let yy = PauliString::parse_label("YY").expect("valid label");
    let yy_members = reports
        .iter()
        .find(|r| r.center == [yy])
        .map(|r| r.members.labels().join(","))
        .unwrap_or_default();
    let yy_expected = OperatorSet::parse("YY,YI,IY,XX,XZ,ZX,ZZ")
        .expect("valid set")
        .labels()
        .join(",");
    (
        format!("15/15 heptads product-closed with 3 commuting lines through the center and 4 anticommuting; YY heptad {{{yy_expected}}}"),
        format!(
            "{good}/{} heptads product-closed with 3 commuting lines through the center and 4 anticommuting; YY heptad {{{yy_members}}}",
            reports.len()
        ),
    )
}

fn pentad_suite(_: u64) -> (String, String) {
    let (max, sets) = anticommuting_cliques(2).expect("two qubits");
    let mut good = 0;
    for p in &sets {
        let Ok(r) = decad_from_pentad(p) else { continue };
        let complement = all_points(2)
            .expect("two qubits")
            .into_iter()
            .filter(|q| !p.contains(q))
            .collect::<Vec<_>>();
        let is_complement = r.members.to_vec() == complement;
        let Ok(g) = decad_geometry(&r) else { continue };
        let shape = (g.num_points(), g.num_lines(), g.kind_census());
        if r.label == SubalgebraLabel::So5Decad
            && is_complement
            && shape == (10, 10, (0, 10, 0))
            && g.point_degrees().iter().all(|&d| d == 3)
        {
            good += 1;
        }
    }
    (
        "largest anticommuting set 5; 6 pentads; 6/6 decads are commutation-closed complements with 10 points, 10 anticommuting lines, 3 per point".into(),
        format!(
            "largest anticommuting set {max}; {} pentads; {good}/{} decads are commutation-closed complements with 10 points, 10 anticommuting lines, 3 per point",
            sets.len(),
            sets.len()
        ),
    )
}

fn doily(_: u64) -> (String, String) {
    let w = symplectic_polar_space(2).expect("two qubits");
    let self_dual = are_isomorphic(&w, &dual(&w)).unwrap_or(false);
    (
        "15 points, 15 lines; GQ(2,2); self-dual".into(),
        format!(
            "{} points, {} lines; {}; {}",
            w.num_points(),
            w.num_lines(),
            yes_no(gq22_check(&w), "GQ(2,2)", "not GQ(2,2)"),
            yes_no(self_dual, "self-dual", "not self-dual"),
        ),
    )
}

fn mixed_configuration(_: u64) -> (String, String) {
    let all = operator_structure(&all_points(2).expect("two qubits")).expect("valid points");
    let found = find_configuration(&all, 15, 3, KindCensus::exact(1, 14), SearchOptions::first()).unwrap_or_default();
    let actual = match found.first() {
        Some(sel) => {
            let lines: Vec<_> = sel.iter().map(|&i| &all.lines()[i]).collect();
            let commuting = lines.iter().filter(|l| l.kind == Some(LineKind::Commuting)).count();
            let mut degrees = vec![0; all.num_points()];
            for l in &lines {
                for &p in &l.points {
                    degrees[p] += 1;
                }
            }
            format!(
                "found {} lines, {}, {commuting} commuting + {} anticommuting",
                lines.len(),
                yes_no(degrees.iter().all(|&d| d == 3), "3 per point", "uneven degrees"),
                lines.len() - commuting
            )
        }
        None => "none found".into(),
    };
    (
        "found 15 lines, 3 per point, 1 commuting + 14 anticommuting".into(),
        actual,
    )
}

fn so4_suite(_: u64) -> (String, String) {
    let so4 = make_so4();
    let jacobi = jacobi_check(&so4);
    let split = change_basis(&so4, &j_plus_minus()).expect("matching dimensions");
    let blocks = commuting_block_decomposition(&split);
    let su2_blocks = blocks
        .iter()
        .filter(|b| b.len() == 3 && has_su2_constants(&split, [b[0], b[1], b[2]]))
        .count();
    let block_text = blocks
        .iter()
        .map(|b| b.iter().map(|&k| split.labels()[k].as_str()).join(" "))
        .join(" | ");
    let triples = su2_triples(&so4).len();
    let heptad = heptads(2).expect("two qubits").swap_remove(0);
    let iso = heptad_geometry(&heptad)
        .and_then(|g| are_isomorphic(&fano_arrangement_so4(), &g))
        .unwrap_or(false);
    (
        "Jacobi holds; blocks J+x J+y J+z | J-x J-y J-z, 2 with su(2) constants; 4 su(2) triples; arrangement isomorphic to heptad".into(),
        format!(
            "{}; blocks {block_text}, {su2_blocks} with su(2) constants; {triples} su(2) triples; {}",
            yes_no(jacobi, "Jacobi holds", "Jacobi fails"),
            yes_no(iso, "arrangement isomorphic to heptad", "arrangement not isomorphic to heptad"),
        ),
    )
}
