//! Acceptance suite: twelve criteria, each checked against an oracle that
//! shares no code with the library (character-level Pauli algebra, integer
//! matrices, brute-force enumeration, the octonion table transcribed as
//! printed). Prints one PASS/FAIL line per criterion and exits nonzero if
//! any criterion fails or overruns its time bound.

#![allow(clippy::needless_range_loop, clippy::type_complexity)]

use std::collections::{BTreeMap, BTreeSet};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_complex::Complex;
use qgeom::exact::{GaussianRational, Rational};
use qgeom::geometry::{
    design_params, dual, find_configuration, find_isomorphism, gq22_check, is_projective_plane, operator_lines,
    operator_structure, symplectic_polar_space, IncidenceStructure, KindCensus, LineKind, SearchOptions,
};
use qgeom::hypercomplex::{
    alternative_laws_hold, associator, fano_from_table, norm_composition_check, oct_mul, oct_table, quat_mul,
    quat_to_pauli, verify_index_rules, verify_sign_balance, Octonion, Quaternion,
};
use qgeom::liealg::{
    change_basis, commuting_block_decomposition, fano_arrangement_so4, has_su2_constants, j_plus_minus, jacobi_check,
    make_so4, su2_triples,
};
use qgeom::pauli::{all_points, commutation_graph, commutes, degree, multiply, parse_pauli, PauliString};
use qgeom::subalgebra::{decad_from_pentad, heptad_geometry, heptads, pentads, SubalgebraLabel};
use qgeom::verify::DEFAULT_SEED;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type C = Complex<i64>;
type Mat = Vec<Vec<C>>;

// Time bounds, in seconds, per criterion.
const BOUNDS: [f64; 12] = [1.0, 1.0, 5.0, 5.0, 10.0, 1.0, 1.0, 5.0, 2.0, 60.0, 1.0, 60.0];
const OCTONION_SAMPLES: usize = 10_000;
const QUATERNION_SAMPLES: usize = 1_000;
const SAMPLE_BOUND: i64 = 9;

// ---------------------------------------------------------------------------
// Octonion table as printed
// ---------------------------------------------------------------------------

const PRINTED_TABLE: &str = r"
$e_1$&$-1$&$e_4$&$e_7$&$-e_2$&$e_6$&$-e_5$&$-e_3$
$e_2$&$-e_4$&$-1$&$e_5$&$e_1$&$-e_3$&$e_7$&$-e_6$
$e_3$&$-e_7$&$-e_5$&$-1$&$e_6$&$e_2$&$-e_4$&$e_1$
$e_4$&$e_2$&$-e_1$&$-e_6$&$-1$&$e_7$&$e_3$&$-e_5$
$e_5$&$-e_6$&$e_3$&$-e_2$&$-e_7$&$-1$&$e_1$&$e_4$
$e_6$&$e_5$&$-e_7$&$e_4$&$-e_3$&$-e_1$&$-1$&$e_2$
$e_7$&$e_3$&$e_6$&$-e_1$&$e_5$&$-e_4$&$-e_2$&$-1$
";

/// `t[i][j] = (sign, k)` with `e_i e_j = sign·e_k`, indices 0..=7, `e_0 = 1`.
fn printed_table() -> [[(i64, usize); 8]; 8] {
    let mut t = [[(0, 0); 8]; 8];
    for k in 0..8 {
        t[0][k] = (1, k);
        t[k][0] = (1, k);
    }
    for (row, line) in PRINTED_TABLE.trim().lines().enumerate() {
        for (col, cell) in line.split('&').skip(1).enumerate() {
            let cell = cell.trim_matches('$');
            let (sign, body) = match cell.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, cell),
            };
            let index = if body == "1" {
                0
            } else {
                body.trim_start_matches("e_").parse().unwrap()
            };
            t[row + 1][col + 1] = (sign, index);
        }
    }
    t
}

fn oracle_oct_mul(t: &[[(i64, usize); 8]; 8], x: &[i128; 8], y: &[i128; 8]) -> [i128; 8] {
    let mut out = [0i128; 8];
    for a in 0..8 {
        for b in 0..8 {
            let (s, k) = t[a][b];
            out[k] += i128::from(s) * x[a] * y[b];
        }
    }
    out
}

fn integer(r: &Rational) -> i128 {
    assert!(r.is_integer(), "{r} is not an integer");
    i128::try_from(r.numer()).unwrap()
}

fn gaussian(z: &GaussianRational) -> C {
    C::new(integer(&z.re) as i64, integer(&z.im) as i64)
}

// ---------------------------------------------------------------------------
// Integer complex matrices
// ---------------------------------------------------------------------------

fn zeros(d: usize) -> Mat {
    vec![vec![C::new(0, 0); d]; d]
}

fn matmul(a: &Mat, b: &Mat) -> Mat {
    let d = a.len();
    let mut out = zeros(d);
    for i in 0..d {
        for k in 0..d {
            for j in 0..d {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

fn combine(a: &Mat, ca: C, b: &Mat, cb: C) -> Mat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| ca * x + cb * y).collect())
        .collect()
}

fn commutator(a: &Mat, b: &Mat) -> Mat {
    combine(&matmul(a, b), C::new(1, 0), &matmul(b, a), C::new(-1, 0))
}

fn is_zero(a: &Mat) -> bool {
    a.iter().flatten().all(|z| *z == C::new(0, 0))
}

fn kron(a: &Mat, b: &Mat) -> Mat {
    let (da, db) = (a.len(), b.len());
    let mut out = zeros(da * db);
    for i in 0..da {
        for j in 0..da {
            for k in 0..db {
                for l in 0..db {
                    out[i * db + k][j * db + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

fn sigma(c: char) -> Mat {
    let (o, l, i) = (C::new(0, 0), C::new(1, 0), C::new(0, 1));
    match c {
        'I' => vec![vec![l, o], vec![o, l]],
        'X' => vec![vec![o, l], vec![l, o]],
        'Y' => vec![vec![o, -i], vec![i, o]],
        'Z' => vec![vec![l, o], vec![o, -l]],
        _ => unreachable!(),
    }
}

fn label_matrix(label: &str) -> Mat {
    label.chars().map(sigma).reduce(|a, b| kron(&a, &b)).unwrap()
}

/// Whether `a = c·b` for some nonzero complex `c`.
fn proportional(a: &Mat, b: &Mat) -> bool {
    let entries: Vec<(C, C)> = a.iter().flatten().copied().zip(b.iter().flatten().copied()).collect();
    !is_zero(a)
        && entries
            .iter()
            .all(|&(x, y)| entries.iter().all(|&(u, v)| x * v == u * y))
}

// ---------------------------------------------------------------------------
// Character-level Pauli algebra
// ---------------------------------------------------------------------------

/// `a·b = i^phase · c` for single-qubit labels.
fn mul_char(a: char, b: char) -> (u8, char) {
    match (a, b) {
        ('I', p) | (p, 'I') => (0, p),
        (p, q) if p == q => (0, 'I'),
        ('X', 'Y') => (1, 'Z'),
        ('Y', 'Z') => (1, 'X'),
        ('Z', 'X') => (1, 'Y'),
        ('Y', 'X') => (3, 'Z'),
        ('Z', 'Y') => (3, 'X'),
        ('X', 'Z') => (3, 'Y'),
        _ => unreachable!(),
    }
}

fn mul_labels(a: &str, b: &str) -> (u8, String) {
    let mut phase = 0;
    let mut out = String::new();
    for (x, y) in a.chars().zip(b.chars()) {
        let (p, c) = mul_char(x, y);
        phase = (phase + p) % 4;
        out.push(c);
    }
    (phase, out)
}

fn labels_commute(a: &str, b: &str) -> bool {
    a.chars()
        .zip(b.chars())
        .filter(|&(x, y)| x != 'I' && y != 'I' && x != y)
        .count()
        % 2
        == 0
}

fn oracle_points(n: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for _ in 0..n {
        out = out
            .iter()
            .flat_map(|s| "IXYZ".chars().map(move |c| format!("{s}{c}")))
            .collect();
    }
    out.retain(|s| s.chars().any(|c| c != 'I'));
    out
}

fn oracle_lines(points: &[String]) -> BTreeSet<(BTreeSet<String>, bool)> {
    let set: BTreeSet<&String> = points.iter().collect();
    let mut lines = BTreeSet::new();
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            let (_, c) = mul_labels(a, b);
            if set.contains(&c) {
                let line: BTreeSet<String> = [a.clone(), b.clone(), c].into();
                lines.insert((line, labels_commute(a, b)));
            }
        }
    }
    lines
}

// ---------------------------------------------------------------------------
// Incidence helpers
// ---------------------------------------------------------------------------

fn label_lines(s: &IncidenceStructure) -> BTreeSet<BTreeSet<String>> {
    s.lines()
        .iter()
        .map(|l| l.points.iter().map(|&p| s.points()[p].clone()).collect())
        .collect()
}

/// Checks a point map against both line sets directly.
fn verified_isomorphism(a: &IncidenceStructure, b: &IncidenceStructure) -> bool {
    let Some(map) = find_isomorphism(a, b).unwrap() else {
        return false;
    };
    let bijective = map.iter().collect::<BTreeSet<_>>().len() == b.num_points();
    let image: Vec<Vec<usize>> = a
        .lines()
        .iter()
        .map(|l| {
            let mut v: Vec<usize> = l.points.iter().map(|&p| map[p]).collect();
            v.sort_unstable();
            v
        })
        .collect();
    let mut image = image;
    image.sort();
    let mut target: Vec<Vec<usize>> = b.lines().iter().map(|l| l.points.clone()).collect();
    target.sort();
    bijective && image == target
}

fn pairs_on_exactly_one_line(n_points: usize, lines: &[Vec<usize>]) -> bool {
    (0..n_points)
        .all(|p| (p + 1..n_points).all(|q| lines.iter().filter(|l| l.contains(&p) && l.contains(&q)).count() == 1))
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

fn octonion_table_fidelity() -> Result<(), String> {
    let t = printed_table();
    let lib = oct_table();
    for i in 1..8 {
        for j in 1..8 {
            let u = lib.get(i, j);
            let (s, k) = t[i][j];
            if (i64::from(u.sign), usize::from(u.index)) != (s, k) {
                return Err(format!("e{i}e{j}: library {u}, printed {s}e{k}"));
            }
        }
    }
    for i in 1..8 {
        let row_plus = (1..8).filter(|&j| j != i && t[i][j].0 > 0).count();
        let col_plus = (1..8).filter(|&j| j != i && t[j][i].0 > 0).count();
        if row_plus != 3 || col_plus != 3 {
            return Err(format!("sign balance fails at index {i}"));
        }
    }
    let w = |n: usize| (n - 1) % 7 + 1;
    for i in 1..8 {
        for j in (1..8).filter(|&j| j != i) {
            let (s, k) = t[i][j];
            if t[w(i + 1)][w(j + 1)] != (s, w(k + 1)) || t[w(2 * i)][w(2 * j)] != (s, w(2 * k)) {
                return Err(format!("index rule fails for e{i}e{j}"));
            }
        }
    }
    if !verify_sign_balance(&lib) || !verify_index_rules(&lib) {
        return Err("library table checks disagree".into());
    }
    Ok(())
}

fn fano_plane() -> Result<(), String> {
    let t = printed_table();
    let mut oracle = BTreeSet::new();
    for i in 1..8 {
        for j in (1..8).filter(|&j| j != i) {
            let line: BTreeSet<String> = [i, j, t[i][j].1].iter().map(|k| format!("e{k}")).collect();
            oracle.insert(line);
        }
    }
    let f = fano_from_table(&oct_table());
    if label_lines(&f) != oracle || oracle.len() != 7 {
        return Err("lines differ from the table's triples".into());
    }
    let lines: Vec<Vec<usize>> = f.lines().iter().map(|l| l.points.clone()).collect();
    if !pairs_on_exactly_one_line(7, &lines) {
        return Err("lambda is not 1".into());
    }
    let meet_once = lines.iter().enumerate().all(|(a, l)| {
        lines[a + 1..]
            .iter()
            .all(|m| l.iter().filter(|p| m.contains(p)).count() == 1)
    });
    let p = design_params(&f);
    if (p.v, p.b, p.r, p.k, p.lambda) != (7, 7, Some(3), Some(3), Some(1)) || !p.is_2_design {
        return Err(format!("parameters {p:?}"));
    }
    if !meet_once || !is_projective_plane(&f) {
        return Err("not a projective plane".into());
    }
    if !verified_isomorphism(&f, &dual(&f)) {
        return Err("not self-dual".into());
    }
    Ok(())
}

fn hamilton(a: [i64; 4], b: [i64; 4]) -> [i64; 4] {
    let [a0, a1, a2, a3] = a;
    let [b0, b1, b2, b3] = b;
    [
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ]
}

/// `q0·1 − i(q1σx + q2σy + q3σz)`.
fn quaternion_matrix(q: [i64; 4]) -> Mat {
    let mut m = combine(&sigma('I'), C::new(q[0], 0), &sigma('X'), C::new(0, -q[1]));
    m = combine(&m, C::new(1, 0), &sigma('Y'), C::new(0, -q[2]));
    combine(&m, C::new(1, 0), &sigma('Z'), C::new(0, -q[3]))
}

fn library_matrix(q: &Quaternion) -> Mat {
    let m = quat_to_pauli(q);
    (0..2)
        .map(|r| (0..2).map(|c| gaussian(m.get(r, c))).collect())
        .collect()
}

fn hypercomplex_properties() -> Result<(), String> {
    let t = printed_table();
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let draw =
        |rng: &mut ChaCha8Rng| -> [i64; 8] { std::array::from_fn(|_| rng.random_range(-SAMPLE_BOUND..=SAMPLE_BOUND)) };
    for n in 0..OCTONION_SAMPLES {
        let (xs, ys) = (draw(&mut rng), draw(&mut rng));
        let (x, y) = (Octonion::from_integers(xs), Octonion::from_integers(ys));
        let (xo, yo) = (xs.map(i128::from), ys.map(i128::from));
        let xy = oracle_oct_mul(&t, &xo, &yo);
        if oct_mul(&x, &y).coefficients.iter().map(integer).collect::<Vec<_>>() != xy {
            return Err(format!("product differs from the printed table at sample {n}"));
        }
        let xx = oracle_oct_mul(&t, &xo, &xo);
        let left = oracle_oct_mul(&t, &xx, &yo) == oracle_oct_mul(&t, &xo, &xy);
        let yx = oracle_oct_mul(&t, &yo, &xo);
        let right = oracle_oct_mul(&t, &yo, &xx) == oracle_oct_mul(&t, &yx, &xo);
        let norm = |v: &[i128; 8]| v.iter().map(|c| c * c).sum::<i128>();
        let composes = norm(&xy) == norm(&xo) * norm(&yo);
        let library = alternative_laws_hold(&x, &y) && norm_composition_check(&x, &y);
        if !(left && right && composes && library) {
            return Err(format!("alternativity or composition fails at sample {n}"));
        }
    }
    let e = |k: usize| {
        let mut v = [0i128; 8];
        v[k] = 1;
        v
    };
    let assoc_oracle = oracle_oct_mul(&t, &oracle_oct_mul(&t, &e(1), &e(2)), &e(3))
        != oracle_oct_mul(&t, &e(1), &oracle_oct_mul(&t, &e(2), &e(3)));
    if !assoc_oracle || associator(&Octonion::unit(1), &Octonion::unit(2), &Octonion::unit(3)).is_zero() {
        return Err("(e1,e2,e3) associator vanishes".into());
    }

    let basis = |k: usize| -> [i64; 4] { std::array::from_fn(|i| i64::from(i == k)) };
    let mut pairs: Vec<([i64; 4], [i64; 4])> = (0..4).flat_map(|i| (0..4).map(move |j| (basis(i), basis(j)))).collect();
    for _ in 0..QUATERNION_SAMPLES {
        let mut q = || -> [i64; 4] { std::array::from_fn(|_| rng.random_range(-SAMPLE_BOUND..=SAMPLE_BOUND)) };
        pairs.push((q(), q()));
    }
    for (a, b) in pairs {
        let ab = hamilton(a, b);
        let (qa, qb) = (Quaternion::from_integers(a), Quaternion::from_integers(b));
        let lib_ab = quat_mul(&qa, &qb);
        if lib_ab
            .coefficients
            .iter()
            .map(|c| integer(c) as i64)
            .collect::<Vec<_>>()
            != ab
        {
            return Err(format!("quaternion product {a:?}·{b:?}"));
        }
        let oracle = quaternion_matrix(ab);
        if oracle != matmul(&quaternion_matrix(a), &quaternion_matrix(b)) || library_matrix(&lib_ab) != oracle {
            return Err(format!("matrix map is not multiplicative on {a:?}·{b:?}"));
        }
    }
    Ok(())
}

fn pauli_oracle() -> Result<(), String> {
    let mut strings = vec!["II".to_string()];
    strings.extend(oracle_points(2));
    let i_pow = |k: u8| [C::new(1, 0), C::new(0, 1), C::new(-1, 0), C::new(0, -1)][k as usize];
    for a in &strings {
        for b in &strings {
            let p = multiply(&parse_pauli(a, 2).unwrap(), &parse_pauli(b, 2).unwrap()).unwrap();
            let lib = combine(
                &label_matrix(&p.string.label()),
                i_pow(p.phase_exp()),
                &zeros(4),
                C::new(0, 0),
            );
            if lib != matmul(&label_matrix(a), &label_matrix(b)) {
                return Err(format!("{a}·{b} = {p} disagrees with the matrix product"));
            }
            let (phase, c) = mul_labels(a, b);
            if (phase, c.as_str()) != (p.phase_exp(), p.string.label().as_str()) {
                return Err(format!("{a}·{b}: character rule gives i^{phase}{c}"));
            }
        }
    }
    for a in &strings[1..] {
        for b in &strings[1..] {
            let pa: PauliString = a.parse().unwrap();
            let pb: PauliString = b.parse().unwrap();
            if commutes(&pa, &pb).unwrap() != is_zero(&commutator(&label_matrix(a), &label_matrix(b))) {
                return Err(format!("commutation of {a}, {b}"));
            }
        }
    }
    Ok(())
}

fn degree_table() -> Result<(), String> {
    for (n, d) in [(1, 0), (2, 6), (3, 30), (4, 126)] {
        let points = oracle_points(n);
        let brute: BTreeSet<usize> = points
            .iter()
            .map(|a| points.iter().filter(|b| *b != a && labels_commute(a, b)).count())
            .collect();
        let graph = commutation_graph(n).unwrap();
        if brute != BTreeSet::from([d])
            || graph.num_vertices() != points.len()
            || graph.regular_degree() != Some(d)
            || degree(n).unwrap() != d as u128
        {
            return Err(format!("N={n}: brute {brute:?}, graph {:?}", graph.regular_degree()));
        }
    }
    Ok(())
}

fn two_qubit_lines() -> Result<(), String> {
    let points = oracle_points(2);
    let oracle = oracle_lines(&points);
    let commuting = oracle.iter().filter(|(_, c)| *c).count();
    if (oracle.len(), commuting) != (35, 15) {
        return Err(format!("oracle found {} lines, {commuting} commuting", oracle.len()));
    }
    let lib: BTreeSet<(BTreeSet<String>, bool)> = operator_lines(&all_points(2).unwrap())
        .unwrap()
        .into_iter()
        .map(|l| {
            (
                l.points.iter().map(|p| p.label()).collect(),
                l.kind == LineKind::Commuting,
            )
        })
        .collect();
    if lib != oracle {
        return Err("library lines differ from the oracle".into());
    }
    for (line, kind) in &oracle {
        let v: Vec<&String> = line.iter().collect();
        let pairs = [(0, 1), (1, 2), (0, 2)].map(|(i, j)| labels_commute(v[i], v[j]));
        if pairs.iter().any(|&c| c != *kind) {
            return Err(format!("line {line:?} mixes kinds"));
        }
    }
    let index: BTreeMap<&String, usize> = points.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let lines: Vec<Vec<usize>> = oracle
        .iter()
        .map(|(l, _)| l.iter().map(|p| index[p]).collect())
        .collect();
    if !pairs_on_exactly_one_line(15, &lines) {
        return Err("some pair is not on exactly one line".into());
    }
    Ok(())
}

fn heptads_criterion() -> Result<(), String> {
    let points = oracle_points(2);
    let reports = heptads(2).unwrap();
    if reports.len() != 15 {
        return Err(format!("{} heptads", reports.len()));
    }
    for c in &points {
        let members: BTreeSet<String> = points
            .iter()
            .filter(|p| *p == c || labels_commute(p, c))
            .cloned()
            .collect();
        let closed = members
            .iter()
            .all(|a| members.iter().all(|b| a == b || members.contains(&mul_labels(a, b).1)));
        let lines = oracle_lines(&members.iter().cloned().collect::<Vec<_>>());
        let through_center = lines.iter().filter(|(_, k)| *k).all(|(l, _)| l.contains(c));
        let census = (
            lines.iter().filter(|(_, k)| *k).count(),
            lines.iter().filter(|(_, k)| !*k).count(),
        );
        if !closed || !through_center || census != (3, 4) || members.len() != 7 {
            return Err(format!("oracle heptad around {c} fails"));
        }
        let Some(r) = reports
            .iter()
            .find(|r| r.center.len() == 1 && r.center[0].label() == *c)
        else {
            return Err(format!("no library heptad centered at {c}"));
        };
        let lib: BTreeSet<String> = r.members.labels().into_iter().collect();
        if lib != members || r.label != SubalgebraLabel::Su2Su2U1Heptad || !r.closed_under_product {
            return Err(format!("library heptad around {c} differs"));
        }
    }
    let yy: BTreeSet<String> = ["YY", "YI", "IY", "XX", "XZ", "ZX", "ZZ"].map(String::from).into();
    let lib_yy = reports.iter().find(|r| r.center[0].label() == "YY").unwrap();
    if lib_yy.members.labels().into_iter().collect::<BTreeSet<_>>() != yy {
        return Err("YY heptad differs".into());
    }
    Ok(())
}

fn pentads_decads() -> Result<(), String> {
    let points = oracle_points(2);
    let anti = |set: &[&String]| {
        set.iter()
            .enumerate()
            .all(|(i, a)| set[i + 1..].iter().all(|b| !labels_commute(a, b)))
    };
    let mut oracle_pentads = BTreeSet::new();
    let mut six = 0;
    let idx: Vec<usize> = (0..15).collect();
    for mask in 0u32..(1 << 15) {
        let size = mask.count_ones();
        if size != 5 && size != 6 {
            continue;
        }
        let set: Vec<&String> = idx
            .iter()
            .filter(|&&k| mask & (1 << k) != 0)
            .map(|&k| &points[k])
            .collect();
        if anti(&set) {
            if size == 5 {
                oracle_pentads.insert(set.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>());
            } else {
                six += 1;
            }
        }
    }
    if oracle_pentads.is_empty() || six != 0 {
        return Err(format!("{} pentads, {six} anticommuting 6-sets", oracle_pentads.len()));
    }
    let lib = pentads(2).unwrap();
    let lib_sets: BTreeSet<BTreeSet<String>> = lib.iter().map(|p| p.labels().into_iter().collect()).collect();
    if lib_sets != oracle_pentads {
        return Err("library pentads differ".into());
    }
    for p in &lib {
        let pent: BTreeSet<String> = p.labels().into_iter().collect();
        let complement: BTreeSet<String> = points.iter().filter(|q| !pent.contains(*q)).cloned().collect();
        let closed = complement.iter().all(|a| {
            complement
                .iter()
                .all(|b| labels_commute(a, b) || complement.contains(&mul_labels(a, b).1))
        });
        let members: Vec<String> = complement.iter().cloned().collect();
        let lines = oracle_lines(&members);
        let all_anti = lines.iter().all(|(_, k)| !*k);
        let degrees_three = members
            .iter()
            .all(|m| lines.iter().filter(|(l, _)| l.contains(m)).count() == 3);
        if !closed || lines.len() != 10 || !all_anti || !degrees_three {
            return Err(format!("oracle decad of {pent:?} fails"));
        }
        let r = decad_from_pentad(p).unwrap();
        let lib_members: BTreeSet<String> = r.members.labels().into_iter().collect();
        if lib_members != complement || r.label != SubalgebraLabel::So5Decad || !r.closed_under_commutation {
            return Err(format!("library decad of {pent:?} differs"));
        }
    }
    Ok(())
}

fn doily() -> Result<(), String> {
    let w = symplectic_polar_space(2).unwrap();
    let oracle: BTreeSet<BTreeSet<String>> = oracle_lines(&oracle_points(2))
        .into_iter()
        .filter(|(_, k)| *k)
        .map(|(l, _)| l)
        .collect();
    if (w.num_points(), w.num_lines()) != (15, 15) || label_lines(&w) != oracle {
        return Err("doily lines differ from the commuting lines".into());
    }
    let lines: Vec<Vec<usize>> = w.lines().iter().map(|l| l.points.clone()).collect();
    let collinear = |p: usize, q: usize| lines.iter().any(|l| l.contains(&p) && l.contains(&q));
    for l in &lines {
        for p in (0..15).filter(|p| !l.contains(p)) {
            if l.iter().filter(|&&q| collinear(p, q)).count() != 1 {
                return Err("quadrangle axiom fails".into());
            }
        }
    }
    if !(0..15).all(|p| lines.iter().filter(|l| l.contains(&p)).count() == 3) || !gq22_check(&w) {
        return Err("not of order (2,2)".into());
    }
    if !verified_isomorphism(&w, &dual(&w)) {
        return Err("not self-dual".into());
    }
    Ok(())
}

fn mixed_configuration() -> Result<(), String> {
    let all = operator_structure(&all_points(2).unwrap()).unwrap();
    let found = find_configuration(&all, 15, 3, KindCensus::exact(1, 14), SearchOptions::first()).unwrap();
    let Some(sel) = found.first() else {
        return Err("no configuration found".into());
    };
    let mut degrees = BTreeMap::new();
    let mut commuting = 0;
    for &i in sel {
        let labels: Vec<&str> = all.line_labels(&all.lines()[i]);
        let (_, c) = mul_labels(labels[0], labels[1]);
        if c != labels[2] && mul_labels(labels[0], labels[2]).1 != labels[1] {
            return Err(format!("{labels:?} is not a line"));
        }
        if labels_commute(labels[0], labels[1]) {
            commuting += 1;
        }
        for l in labels {
            *degrees.entry(l.to_string()).or_insert(0) += 1;
        }
    }
    let distinct: BTreeSet<_> = sel.iter().collect();
    if sel.len() != 15 || distinct.len() != 15 || commuting != 1 {
        return Err(format!("{} lines, {commuting} commuting", sel.len()));
    }
    if degrees.len() != 15 || degrees.values().any(|&d| d != 3) {
        return Err("some point is not on 3 lines".into());
    }
    Ok(())
}

/// `(L_i)_jk = −iε_ijk` on the first three coordinates, `A_i` rotating
/// coordinate `i` into the fourth.
fn so4_matrices() -> Vec<Mat> {
    let eps = |i: usize, j: usize, k: usize| -> i64 {
        match (i, j, k) {
            (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
            (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
            _ => 0,
        }
    };
    let mut out = Vec::new();
    for i in 0..3 {
        let mut m = zeros(4);
        for j in 0..3 {
            for k in 0..3 {
                m[j][k] = C::new(0, -eps(i, j, k));
            }
        }
        out.push(m);
    }
    for i in 0..3 {
        let mut m = zeros(4);
        m[i][3] = C::new(0, -1);
        m[3][i] = C::new(0, 1);
        out.push(m);
    }
    out
}

fn so4_suite() -> Result<(), String> {
    let mats = so4_matrices();
    let so4 = make_so4();
    for i in 0..6 {
        for j in 0..6 {
            let mut expected = zeros(4);
            for k in 0..6 {
                expected = combine(&expected, C::new(1, 0), &mats[k], gaussian(&so4.constant(i, j, k)));
            }
            if commutator(&mats[i], &mats[j]) != expected {
                return Err(format!(
                    "[{}, {}] differs from the matrices",
                    so4.labels()[i],
                    so4.labels()[j]
                ));
            }
        }
    }
    if !jacobi_check(&so4) {
        return Err("Jacobi fails".into());
    }

    // 2J± = L ± A keeps the matrices integral.
    let one = C::new(1, 0);
    let jp: Vec<Mat> = (0..3).map(|i| combine(&mats[i], one, &mats[3 + i], one)).collect();
    let jm: Vec<Mat> = (0..3).map(|i| combine(&mats[i], one, &mats[3 + i], -one)).collect();
    for i in 0..3 {
        for j in 0..3 {
            if !is_zero(&commutator(&jp[i], &jm[j])) {
                return Err("J+ and J- blocks do not commute".into());
            }
        }
        let (a, b, c) = (i, (i + 1) % 3, (i + 2) % 3);
        for block in [&jp, &jm] {
            let scaled = combine(&block[c], C::new(0, 2), &zeros(4), one);
            if commutator(&block[a], &block[b]) != scaled {
                return Err("a J block lacks su(2) constants".into());
            }
        }
    }
    let split = change_basis(&so4, &j_plus_minus()).unwrap();
    let blocks = commuting_block_decomposition(&split);
    if blocks != vec![vec![0, 1, 2], vec![3, 4, 5]]
        || !blocks.iter().all(|b| has_su2_constants(&split, [b[0], b[1], b[2]]))
    {
        return Err(format!("blocks {blocks:?}"));
    }

    let mut oracle_triples = Vec::new();
    for x in 0..6 {
        for y in x + 1..6 {
            for z in y + 1..6 {
                if [(x, y, z), (y, z, x), (z, x, y)]
                    .iter()
                    .all(|&(p, q, r)| proportional(&commutator(&mats[p], &mats[q]), &mats[r]))
                {
                    oracle_triples.push([x, y, z]);
                }
            }
        }
    }
    if oracle_triples.len() != 4 || su2_triples(&so4) != oracle_triples {
        return Err(format!("su(2) triples {oracle_triples:?}"));
    }

    let arrangement = fano_arrangement_so4();
    let lines: Vec<Vec<usize>> = arrangement.lines().iter().map(|l| l.points.clone()).collect();
    let census = arrangement.lines().iter().fold((0, 0), |(o, u), l| {
        if l.orientation.is_some() {
            (o + 1, u)
        } else {
            (o, u + 1)
        }
    });
    if arrangement.num_points() != 7 || !pairs_on_exactly_one_line(7, &lines) || census != (4, 3) {
        return Err("arrangement is not a Fano plane with 4 arrowed lines".into());
    }
    let heptad = heptad_geometry(&heptads(2).unwrap()[0]).unwrap();
    if !verified_isomorphism(&arrangement, &heptad) {
        return Err("arrangement is not isomorphic to a heptad".into());
    }
    Ok(())
}

fn verify_all_command() -> Result<(), String> {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_qgeom"))
            .args(["--quiet", "verify-all"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (first, second) = (run()?, run()?);
    if !first.status.success() {
        return Err(format!("exit status {:?}", first.status.code()));
    }
    if first.stdout != second.stdout {
        return Err("output differs between runs".into());
    }
    let text = String::from_utf8_lossy(&first.stdout);
    let passes = text.lines().filter(|l| l.starts_with("PASS ")).count();
    if passes != 11 || !text.contains("N=2: D=6") {
        return Err(format!("{passes} passing checks"));
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Result<(), String>); 12] = [
        ("octonion table fidelity", octonion_table_fidelity),
        ("fano plane", fano_plane),
        ("hypercomplex properties", hypercomplex_properties),
        ("pauli oracle agreement", pauli_oracle),
        ("degree table", degree_table),
        ("two-qubit line census", two_qubit_lines),
        ("heptads", heptads_criterion),
        ("pentads and decads", pentads_decads),
        ("doily", doily),
        ("mixed 15-line configuration", mixed_configuration),
        ("so(4) suite", so4_suite),
        ("verify-all", verify_all_command),
    ];
    let mut failures = 0;
    for (k, ((name, check), bound)) in criteria.iter().zip(BOUNDS).enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let result = match outcome {
            Ok(()) if elapsed <= Duration::from_secs_f64(bound) => Ok(()),
            Ok(()) => Err(format!("took longer than {bound} s")),
            Err(e) => Err(e),
        };
        let secs = elapsed.as_secs_f64();
        match result {
            Ok(()) => println!("PASS {:>2} {name} ({secs:.3} s, bound {bound} s)", k + 1),
            Err(e) => {
                failures += 1;
                println!("FAIL {:>2} {name} ({secs:.3} s, bound {bound} s): {e}", k + 1);
            }
        }
    }
    println!(
        "{}/{} acceptance criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
