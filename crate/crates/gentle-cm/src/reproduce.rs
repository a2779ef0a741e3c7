//! The reproduction suite: every headline computation as one pass/fail
//! criterion with a runtime budget. `run_all` drives the CLI `reproduce`
//! command and the acceptance test target.

use std::time::{Duration, Instant};

use crate::cluster::{
    count_hexagons, derived_equivalent, fz_mutate, is_good_mutation, mutation_defined,
    random_cluster_quiver, ClusterQuiver, MutationSign,
};
use crate::cm::cm_auslander;
use crate::coxeter::{
    asymmetry_matrix, cartan_matrix, coxeter_closed_form, coxeter_polynomial, split_coxeter_check,
};
use crate::error::Result;
use crate::generate::random_gentle_presentation;
use crate::hall::{hall_polynomial, one_sided_vanishing_report, HallContext, IsoClass};
use crate::linalg::{IntPolynomial, RatMatrix};
use crate::quiver::{GentlePresentation, Quiver};
use crate::strings::{
    canonical_string, dim_vector_uniqueness, dimension_vector, enumerate_strings, find_band,
    has_loop, has_two_cycle, is_representation_finite, visits_no_vertex_twice, CmAusMap,
    StringWord,
};

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let budget = match self.budget {
            Some(b) => format!(" (budget {:.0?})", b),
            None => String::new(),
        };
        format!(
            "[{status}] {name}: {detail} in {elapsed:.2?}{budget}",
            name = self.name,
            detail = self.detail,
            elapsed = self.elapsed,
        )
    }
}

fn criterion<F>(name: &'static str, budget: Option<Duration>, body: F) -> CriterionReport
where
    F: FnOnce(&mut Vec<String>) -> Result<String>,
{
    let start = Instant::now();
    let mut failures = Vec::new();
    let summary = match body(&mut failures) {
        Ok(s) => s,
        Err(e) => {
            failures.push(format!("error: {e}"));
            String::new()
        }
    };
    let elapsed = start.elapsed();
    let mut passed = failures.is_empty();
    let mut detail = if passed { summary } else { failures.join("; ") };
    if let Some(b) = budget {
        if elapsed > b {
            passed = false;
            detail = format!("{detail}; exceeded budget {b:.0?}");
        }
    }
    CriterionReport {
        name,
        passed,
        detail,
        elapsed,
        budget,
    }
}

fn parse(text: &str) -> GentlePresentation {
    GentlePresentation::parse(text).expect("fixture parses")
}

pub fn c3() -> GentlePresentation {
    parse(
        "vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 1\nrel b a\nrel c b\nrel a c\n",
    )
}

pub fn a2() -> GentlePresentation {
    parse("vertex 1 2\narrow a: 1 -> 2\n")
}

pub fn twocyc() -> GentlePresentation {
    parse("vertex 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrel a b\nrel b a\n")
}

pub fn loop_algebra() -> GentlePresentation {
    parse("vertex 1\narrow a: 1 -> 1\nrel a a\n")
}

pub fn hex() -> GentlePresentation {
    cm_auslander(&c3()).expect("hexagon construction")
}

/// 1. The three construction examples, by exact structural equality.
pub fn example_reproduction() -> CriterionReport {
    criterion(
        "construction examples",
        Some(Duration::from_secs(1)),
        |failures| {
            let expected_hex = parse(
                "vertex 1 2 3 [a] [b] [c]\n\
                 arrow a+: 1 -> [a]\narrow a-: [a] -> 2\n\
                 arrow b+: 2 -> [b]\narrow b-: [b] -> 3\n\
                 arrow c+: 3 -> [c]\narrow c-: [c] -> 1\n\
                 rel b+ a-\nrel c+ b-\nrel a+ c-\n",
            );
            if cm_auslander(&c3())? != expected_hex {
                failures.push("hexagon construction differs".into());
            }
            let expected_square = parse(
                "vertex 1 2 [a] [b]\n\
                 arrow a+: 1 -> [a]\narrow a-: [a] -> 2\n\
                 arrow b+: 2 -> [b]\narrow b-: [b] -> 1\n\
                 rel b+ a-\nrel a+ b-\n",
            );
            if cm_auslander(&twocyc())? != expected_square {
                failures.push("square construction differs".into());
            }
            let expected_split_loop =
                parse("vertex 1 [a]\narrow a+: 1 -> [a]\narrow a-: [a] -> 1\nrel a+ a-\n");
            if cm_auslander(&loop_algebra())? != expected_split_loop {
                failures.push("split-loop construction differs".into());
            }
            Ok("hexagon, square, and split loop match exactly".into())
        },
    )
}

/// 2. Closed-form Coxeter sweep over (t, s) with random quivers.
pub fn closed_form_sweep() -> CriterionReport {
    criterion(
        "closed-form Coxeter sweep",
        Some(Duration::from_secs(60)),
        |failures| {
            let mut checked = 0;
            for t in 1..=3usize {
                for s in 0..=4usize {
                    let expected = coxeter_closed_form(t, s);
                    for i in 0..5u64 {
                        let seed = 1000 * t as u64 + 10 * s as u64 + i;
                        let q = random_cluster_quiver(t, s, seed);
                        let aus = cm_auslander(&q.cluster_relations())?;
                        let chi = coxeter_polynomial(&aus)?;
                        checked += 1;
                        if chi != expected {
                            failures.push(format!(
                                "t={t} s={s} seed={seed}: got {chi}, expected {expected}"
                            ));
                        }
                    }
                }
            }
            Ok(format!("{checked} random quivers match the closed form"))
        },
    )
}

fn linear_quiver_orientation(n: usize, mask: usize) -> Quiver {
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows = (0..n.saturating_sub(1))
        .map(|i| {
            let (s, t) = if mask >> i & 1 == 0 {
                (i, i + 1)
            } else {
                (i + 1, i)
            };
            (
                format!("a{}", i + 1),
                (s + 1).to_string(),
                (t + 1).to_string(),
            )
        })
        .collect();
    Quiver::new(vertices, arrows).unwrap()
}

/// 3. Hereditary anchors: every orientation of the linear quivers and the
///    pinned 2x2 asymmetry matrix.
pub fn hereditary_anchors() -> CriterionReport {
    criterion("hereditary anchors", None, |failures| {
        let mut checked = 0;
        for n in 1..=6usize {
            let expected = IntPolynomial::geometric(n + 1);
            for mask in 0..(1usize << n.saturating_sub(1)) {
                let q = linear_quiver_orientation(n, mask);
                let p = GentlePresentation::new(q, Vec::new())?;
                let chi = coxeter_polynomial(&p)?;
                checked += 1;
                if chi != expected {
                    failures.push(format!("A{n} orientation {mask}: got {chi}"));
                }
            }
        }
        let s = asymmetry_matrix(&cartan_matrix(&a2())?)?;
        let pinned = RatMatrix::from_int_rows(vec![vec![-1, 1], vec![-1, 0]]);
        if s != pinned {
            failures.push("asymmetry matrix of the two-vertex quiver is off".into());
        }
        Ok(format!(
            "{checked} linear-quiver orientations and the pinned asymmetry matrix"
        ))
    })
}

fn hexagon_with_tail(tail: &[(&str, &str, &str)], extra_vertices: &[&str]) -> GentlePresentation {
    let mut text = String::from(
        "vertex 1 2 3 [a] [b] [c]\n\
         arrow a+: 1 -> [a]\narrow a-: [a] -> 2\n\
         arrow b+: 2 -> [b]\narrow b-: [b] -> 3\n\
         arrow c+: 3 -> [c]\narrow c-: [c] -> 1\n",
    );
    for v in extra_vertices {
        text.push_str(&format!("vertex {v}\n"));
    }
    for (id, s, t) in tail {
        text.push_str(&format!("arrow {id}: {s} -> {t}\n"));
    }
    text.push_str("rel b+ a-\nrel c+ b-\nrel a+ c-\n");
    parse(&text)
}

/// 4. The split identity on the two drawn configurations plus a negative
///    control.
pub fn split_identity() -> CriterionReport {
    criterion("split identity", None, |failures| {
        // one triangle, three lines: cut between the first and second line
        let gamma = hexagon_with_tail(
            &[("d1", "w1", "1"), ("d2", "w2", "w1"), ("d3", "w2", "w3")],
            &["w1", "w2", "w3"],
        );
        let gamma1 = hexagon_with_tail(&[("d1", "w1", "1")], &["w1"]);
        let gamma2 = parse("vertex w2 w3\narrow d3: w2 -> w3\n");
        let b = hex();
        let c_part = parse("vertex w3\n");
        if !split_coxeter_check(&gamma, &gamma1, &gamma2, &b, &c_part)? {
            failures.push("split identity fails on the three-line configuration".into());
        }
        if coxeter_polynomial(&gamma)? != coxeter_closed_form(1, 3) {
            failures.push("glued quiver has the wrong Coxeter polynomial".into());
        }

        // one triangle, four lines: the split where one side is a point
        let gamma = hexagon_with_tail(
            &[
                ("d1", "w1", "1"),
                ("d2", "w2", "w1"),
                ("d3", "w3", "w2"),
                ("d4", "w3", "w4"),
            ],
            &["w1", "w2", "w3", "w4"],
        );
        let gamma1 = hexagon_with_tail(
            &[("d1", "w1", "1"), ("d2", "w2", "w1"), ("d3", "w3", "w2")],
            &["w1", "w2", "w3"],
        );
        let gamma2 = parse("vertex w4\n");
        let b = hexagon_with_tail(&[("d1", "w1", "1"), ("d2", "w2", "w1")], &["w1", "w2"]);
        let empty = parse("");
        if !split_coxeter_check(&gamma, &gamma1, &gamma2, &b, &empty)? {
            failures.push("split identity fails with an empty side".into());
        }
        if coxeter_polynomial(&gamma)? != coxeter_closed_form(1, 4) {
            failures.push("four-line quiver has the wrong Coxeter polynomial".into());
        }

        // negative control: scramble which presentation sits in which slot
        let gamma = hexagon_with_tail(
            &[("d1", "w1", "1"), ("d2", "w2", "w1"), ("d3", "w2", "w3")],
            &["w1", "w2", "w3"],
        );
        let gamma1 = hexagon_with_tail(&[("d1", "w1", "1")], &["w1"]);
        let gamma2 = parse("vertex w2 w3\narrow d3: w2 -> w3\n");
        let b = hex();
        let c_part = parse("vertex w3\n");
        if split_coxeter_check(&gamma, &gamma1, &b, &gamma2, &c_part)? {
            failures.push("scrambled slots were accepted".into());
        }
        Ok("both drawn splits hold; the scrambled control fails".into())
    })
}

/// 5. Transfer theorems over a randomized corpus of gentle presentations.
pub fn transfer_theorems() -> CriterionReport {
    criterion("transfer theorems", None, |failures| {
        let total = 220u64;
        let mut rep_finite = 0usize;
        let mut strings_checked = 0usize;
        for seed in 0..total {
            let p = random_gentle_presentation(8, seed);
            let aus = cm_auslander(&p)?;
            let band_base = find_band(&p).is_some();
            let band_aus = find_band(&aus).is_some();
            if band_base != band_aus {
                failures.push(format!("seed {seed}: band existence disagrees"));
                continue;
            }
            if is_representation_finite(&p) != is_representation_finite(&aus) {
                failures.push(format!("seed {seed}: representation finiteness disagrees"));
                continue;
            }
            if p.is_schurian()? && !aus.is_schurian()? {
                failures.push(format!("seed {seed}: schurian property lost"));
            }
            if band_base {
                continue;
            }
            rep_finite += 1;
            let map = CmAusMap::new(&p, &aus)?;
            for w in enumerate_strings(&p)? {
                strings_checked += 1;
                let img = map.iota(&w)?;
                let w_canon = canonical_string(&p, &w);
                if map.pi_minus(&img)? != w_canon || map.pi_plus(&img)? != w_canon {
                    failures.push(format!(
                        "seed {seed}: projections fail on {}",
                        w.display(p.quiver())
                    ));
                    break;
                }
            }
            if !has_loop(p.quiver()) && dim_vector_uniqueness(&p)? {
                if has_two_cycle(p.quiver()) {
                    failures.push(format!(
                        "seed {seed}: dimension-vector uniqueness with a 2-cycle"
                    ));
                }
                if !dim_vector_uniqueness(&aus)? {
                    failures.push(format!(
                        "seed {seed}: dimension-vector uniqueness not transferred"
                    ));
                }
            }
        }
        Ok(format!(
            "{total} presentations ({rep_finite} representation finite, {strings_checked} strings projected)"
        ))
    })
}

/// 6. Derived equivalence on a fixed-size corpus: triangle counts, Coxeter
///    polynomials of the constructions, and hexagon counts all agree.
pub fn derived_equivalence_corpus() -> CriterionReport {
    criterion(
        "derived equivalence corpus",
        Some(Duration::from_secs(120)),
        |failures| {
            // thirty quivers on ten vertices across all triangle counts
            let mut corpus = Vec::new();
            for i in 0..30u64 {
                let t = (i % 5) as usize;
                let s = 9 - 2 * t;
                corpus.push(random_cluster_quiver(t, s, 500 + i));
            }
            let data: Vec<(ClusterQuiver, IntPolynomial, usize)> = corpus
                .into_iter()
                .map(|q| {
                    let aus = cm_auslander(&q.cluster_relations())?;
                    let chi = coxeter_polynomial(&aus)?;
                    let hexes = count_hexagons(&aus);
                    Ok((q, chi, hexes))
                })
                .collect::<Result<_>>()?;
            let mut pairs = 0;
            for (i, (q1, chi1, hex1)) in data.iter().enumerate() {
                if q1.counts().1 != *hex1 {
                    failures.push(format!("quiver {i}: hexagon count differs from t"));
                }
                for (j, (q2, chi2, hex2)) in data.iter().enumerate().skip(i + 1) {
                    pairs += 1;
                    let de = derived_equivalent(q1, q2)?;
                    if de != (chi1 == chi2) {
                        failures.push(format!(
                            "pair ({i},{j}): derived equivalence vs Coxeter disagree"
                        ));
                    }
                    if de != (hex1 == hex2) {
                        failures.push(format!(
                            "pair ({i},{j}): derived equivalence vs hexagons disagree"
                        ));
                    }
                }
            }
            Ok(format!("{pairs} pairs compared three ways"))
        },
    )
}

struct TableRow {
    name: &'static str,
    left: &'static [(&'static str, &'static str, &'static str)],
    left_vertices: &'static [&'static str],
    left_minus: bool,
    left_plus: bool,
    right_minus: bool,
    right_plus: bool,
    good: bool,
}

const TABLE_ROWS: &[TableRow] = &[
    TableRow {
        name: "1",
        left: &[("a", "v1", "k")],
        left_vertices: &["v1", "k"],
        left_minus: true,
        left_plus: false,
        right_minus: false,
        right_plus: true,
        good: true,
    },
    TableRow {
        name: "2a",
        left: &[("a", "v1", "k"), ("b", "v2", "k")],
        left_vertices: &["v1", "v2", "k"],
        left_minus: true,
        left_plus: false,
        right_minus: false,
        right_plus: true,
        good: true,
    },
    TableRow {
        name: "2b",
        left: &[("a", "v1", "k"), ("b", "k", "v2")],
        left_vertices: &["v1", "v2", "k"],
        left_minus: true,
        left_plus: true,
        right_minus: false,
        right_plus: false,
        good: false,
    },
    TableRow {
        name: "3",
        left: &[
            ("a", "v2", "v3"),
            ("b", "v3", "k"),
            ("c", "k", "v2"),
            ("d", "v1", "k"),
        ],
        left_vertices: &["v1", "v2", "v3", "k"],
        left_minus: true,
        left_plus: false,
        right_minus: false,
        right_plus: true,
        good: true,
    },
    TableRow {
        name: "4",
        left: &[
            ("a", "v2", "v3"),
            ("b", "v3", "k"),
            ("c", "k", "v2"),
            ("d", "k", "v4"),
            ("e", "v4", "v1"),
            ("f", "v1", "k"),
        ],
        left_vertices: &["v1", "v2", "v3", "v4", "k"],
        left_minus: true,
        left_plus: true,
        right_minus: true,
        right_plus: true,
        good: true,
    },
];

/// 7. The drawn neighborhood table plus corpus-wide consequences of good
///    and bad mutations.
pub fn table_one_conformance() -> CriterionReport {
    criterion("neighborhood table", None, |failures| {
        for row in TABLE_ROWS {
            let quiver = Quiver::new(
                row.left_vertices.iter().map(|s| s.to_string()).collect(),
                row.left
                    .iter()
                    .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string()))
                    .collect(),
            )?;
            let cluster = ClusterQuiver::new(quiver)?;
            let algebra = cluster.cluster_relations();
            let mutated = ClusterQuiver::new(fz_mutate(cluster.quiver(), "k")?)?;
            let mutated_algebra = mutated.cluster_relations();
            let got = (
                mutation_defined(&algebra, "k", MutationSign::Minus)?,
                mutation_defined(&algebra, "k", MutationSign::Plus)?,
                mutation_defined(&mutated_algebra, "k", MutationSign::Minus)?,
                mutation_defined(&mutated_algebra, "k", MutationSign::Plus)?,
            );
            let expected = (
                row.left_minus,
                row.left_plus,
                row.right_minus,
                row.right_plus,
            );
            if got != expected {
                failures.push(format!(
                    "row {}: definedness {got:?}, expected {expected:?}",
                    row.name
                ));
            }
            if is_good_mutation(&cluster, "k")? != row.good {
                failures.push(format!("row {}: good/bad classification differs", row.name));
            }
        }

        // corpus sweep: good mutations preserve the construction's
        // Coxeter polynomial, bad ones shift the triangle count by one
        let mut mutations = 0;
        for i in 0..12u64 {
            let t = (i % 4) as usize;
            let s = (i % 3) as usize + 1;
            let q = random_cluster_quiver(t, s, 900 + i);
            if q.quiver().vertex_count() > 8 {
                continue;
            }
            let algebra = q.cluster_relations();
            let aus = cm_auslander(&algebra)?;
            let chi = coxeter_polynomial(&aus)?;
            for w in enumerate_strings(&algebra)? {
                if !visits_no_vertex_twice(&algebra, &w) {
                    failures.push(format!("corpus {i}: string revisits a vertex"));
                }
            }
            for w in enumerate_strings(&aus)? {
                if !visits_no_vertex_twice(&aus, &w) {
                    failures.push(format!("corpus {i}: construction string revisits a vertex"));
                }
            }
            for v in q.quiver().vertices().to_vec() {
                mutations += 1;
                let mutated = ClusterQuiver::new(fz_mutate(q.quiver(), &v)?)?;
                let chi_m = coxeter_polynomial(&cm_auslander(&mutated.cluster_relations())?)?;
                if is_good_mutation(&q, &v)? {
                    if chi != chi_m {
                        failures.push(format!(
                            "corpus {i}: good mutation at {v} changed the polynomial"
                        ));
                    }
                    if q.counts().1 != mutated.counts().1 {
                        failures.push(format!(
                            "corpus {i}: good mutation at {v} changed the triangle count"
                        ));
                    }
                } else {
                    let dt = q.counts().1 as i64 - mutated.counts().1 as i64;
                    if dt.abs() != 1 {
                        failures.push(format!("corpus {i}: bad mutation at {v} changed t by {dt}"));
                    }
                }
            }
        }
        Ok(format!(
            "all five drawn rows and {mutations} corpus mutations conform"
        ))
    })
}

/// 8. Hall numbers, the polynomial fit, one-sided vanishing, and
///    associativity of the product.
pub fn hall_suite() -> CriterionReport {
    criterion("Hall suite", Some(Duration::from_secs(600)), |failures| {
        let p = a2();
        let p1 = vec![StringWord::parse(&p, "a").expect("string literal")];
        let s1 = vec![StringWord::trivial(0)];
        let s2 = vec![StringWord::trivial(1)];
        for q in [2, 3, 5, 7] {
            let ctx = HallContext::new(&p, q, 8)?;
            let (cl, cm, cn) = (
                ctx.iso_class(&p1)?,
                ctx.iso_class(&s1)?,
                ctx.iso_class(&s2)?,
            );
            if ctx.hall_number(&cl, &cm, &cn)? != 1 {
                failures.push(format!("q={q}: filtration count is not 1"));
            }
            if ctx.hall_number(&cl, &cn, &cm)? != 0 {
                failures.push(format!("q={q}: reversed filtration count is not 0"));
            }
        }

        let l = vec![
            StringWord::parse(&p, "a").expect("string literal"),
            StringWord::trivial(1),
        ];
        match hall_polynomial(&p, &l, &p1, &s2, &[2, 3, 5, 7], &[11, 13], 8) {
            Ok(poly) => {
                if poly != IntPolynomial::x() {
                    failures.push(format!("fitted polynomial is {poly}, expected x"));
                }
            }
            Err(e) => failures.push(format!("polynomial fit failed: {e}")),
        }

        for q in [2, 3] {
            for (name, algebra) in [("triangle", c3()), ("hexagon", hex())] {
                let report = one_sided_vanishing_report(&algebra, q, 4)?;
                if !report.is_clean() {
                    failures.push(format!(
                        "{name} q={q}: {} vanishing violations",
                        report.violations.len()
                    ));
                }
            }
        }

        let mut triples = 0;
        for algebra in [a2(), hex()] {
            let ctx = HallContext::new(&algebra, 2, 8)?;
            let n = ctx.strings.len();
            let singleton = |i: usize| -> IsoClass {
                IsoClass {
                    parts: [(i, 1)].into_iter().collect(),
                }
            };
            let dims: Vec<usize> = ctx.modules.iter().map(|m| m.total_dim()).collect();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if dims[i] + dims[j] + dims[k] > 5 {
                            continue;
                        }
                        triples += 1;
                        let (ui, uj, uk) = (singleton(i), singleton(j), singleton(k));
                        let ij = ctx.hall_product(&ui, &uj)?;
                        let jk = ctx.hall_product(&uj, &uk)?;
                        let lhs = ctx.product_of_sums(&ij, &[(uk, 1)].into_iter().collect())?;
                        let rhs = ctx.product_of_sums(&[(ui, 1)].into_iter().collect(), &jk)?;
                        if lhs != rhs {
                            failures.push(format!("associativity fails at triple ({i},{j},{k})"));
                        }
                    }
                }
            }
        }
        Ok(format!(
            "counts, fit, vanishing reports, and {triples} associativity triples"
        ))
    })
}

/// 9. Structural counts for the hexagon and the triangle.
pub fn structural_counts() -> CriterionReport {
    criterion("structural counts", None, |failures| {
        let hex = hex();
        if hex.quiver().vertex_count() != 6 {
            failures.push("construction of the triangle is not on 6 vertices".into());
        }
        let paths = hex.enumerate_nonzero_paths()?;
        if paths.len() != 15 {
            failures.push(format!("hexagon has {} nonzero paths", paths.len()));
        }
        let strings = enumerate_strings(&hex)?;
        if strings.len() != 15 {
            failures.push(format!("hexagon has {} strings", strings.len()));
        }
        let strings = enumerate_strings(&c3())?;
        if strings.len() != 6 {
            failures.push(format!("triangle has {} strings", strings.len()));
        }
        // cross-check: dimension vectors of the 15 hexagon strings are
        // pairwise distinct
        let hex_strings = enumerate_strings(&hex)?;
        let mut dims: Vec<Vec<usize>> = hex_strings
            .iter()
            .map(|w| dimension_vector(&hex, w))
            .collect();
        dims.sort();
        dims.dedup();
        if dims.len() != 15 {
            failures.push("hexagon dimension vectors collide".into());
        }
        Ok("path and string counts are exact".into())
    })
}

pub fn run_all() -> Vec<CriterionReport> {
    vec![
        example_reproduction(),
        closed_form_sweep(),
        hereditary_anchors(),
        split_identity(),
        transfer_theorems(),
        derived_equivalence_corpus(),
        table_one_conformance(),
        hall_suite(),
        structural_counts(),
    ]
}
