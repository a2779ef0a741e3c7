//! Command-line front end: validation, the Cohen-Macaulay Auslander
//! construction, string and band enumeration, Cartan/Coxeter data,
//! type-A mutation, Hall numbers, and the reproduction suite.
//!
//! Exit codes: 0 success, 1 domain violation (reported), 2 I/O or syntax
//! error, 3 resource cap exceeded.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use gentle_cm::cluster::{
    count_hexagons, derived_equivalent, fz_mutate, good_mutation_sequence, is_good_mutation,
    mutation_defined, random_cluster_quiver, ClusterQuiver, MutationSign,
    GOOD_MUTATION_BFS_VERTEX_BOUND,
};
use gentle_cm::cm::{cm_auslander, critical_cycles, gorenstein_projectives, singularity_profile};
use gentle_cm::coxeter::{cartan_matrix, coxeter_closed_form, coxeter_polynomial};
use gentle_cm::hall::{
    hall_polynomial, one_sided_vanishing_report, HallContext, DEFAULT_CHECK_PRIMES,
    DEFAULT_DIM_CAP, DEFAULT_FIT_PRIMES,
};
use gentle_cm::json::{MatrixDoc, PolynomialDoc, PresentationDoc};
use gentle_cm::reproduce;
use gentle_cm::strings::{
    enumerate_strings_capped, find_band, is_representation_finite, StringWord, DEFAULT_STRING_CAP,
};
use gentle_cm::{Error, GentlePresentation};

#[derive(Parser)]
#[command(
    name = "gentle-cm",
    about = "Exact computations for gentle algebras and their Cohen-Macaulay Auslander algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct JsonFlag {
    /// Emit machine-readable JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check the gentle axioms and finite dimensionality of a presentation
    Validate {
        file: String,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Construct the Cohen-Macaulay Auslander presentation
    Cmaus {
        file: String,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Enumerate all strings up to inversion
    Strings {
        file: String,
        /// Abort if more than this many strings are found
        #[arg(long, default_value_t = DEFAULT_STRING_CAP)]
        string_cap: usize,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Search for a band
    Bands {
        file: String,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Decide representation finiteness
    Repfinite {
        file: String,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Print the Cartan matrix and its determinant
    Cartan {
        file: String,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Print the Coxeter polynomial
    Coxeter {
        file: String,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Closed-form Coxeter polynomial for t triangles and s lines
    ClosedForm {
        t: usize,
        s: usize,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Fomin-Zelevinsky mutation at a vertex; relations are regenerated
    Mutate {
        file: String,
        vertex: String,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Classify the mutation at every vertex as good or bad
    GoodMutations {
        file: String,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Compare two class members and search for a good-mutation path
    DerivedClass {
        file1: String,
        file2: String,
        /// Vertex-count bound for the breadth-first witness search
        #[arg(long, default_value_t = GOOD_MUTATION_BFS_VERTEX_BOUND)]
        bfs_bound: usize,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Count oriented chordless 6-cycles
    Hexagons {
        file: String,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Generate a random class member with t triangles and s lines
    Gen {
        t: usize,
        s: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Hall numbers, polynomials, products, and the vanishing report
    Hall {
        #[command(subcommand)]
        command: HallCommand,
    },
    /// Run the full reproduction suite
    Reproduce {
        #[command(flatten)]
        json: JsonFlag,
    },
}

#[derive(Subcommand)]
enum HallCommand {
    /// Count submodules of L isomorphic to N with quotient isomorphic to M
    Number {
        file: String,
        /// Ambient module L as a multiset of strings, ';'-separated
        l: String,
        /// Quotient class M
        m: String,
        /// Submodule class N
        n: String,
        #[arg(short, long)]
        q: u64,
        #[arg(long, default_value_t = DEFAULT_DIM_CAP)]
        dim_cap: usize,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Fit the Hall polynomial through counts at several primes
    Poly {
        file: String,
        l: String,
        m: String,
        n: String,
        /// Interpolation primes
        #[arg(long, default_value = "2,3,5,7", value_parser = parse_primes)]
        primes: std::vec::Vec<u64>,
        /// Verification primes
        #[arg(long, default_value = "11,13", value_parser = parse_primes)]
        check_primes: std::vec::Vec<u64>,
        #[arg(long, default_value_t = DEFAULT_DIM_CAP)]
        dim_cap: usize,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Expand the product u_M · u_N in the Hall algebra
    Product {
        file: String,
        m: String,
        n: String,
        #[arg(short, long)]
        q: u64,
        #[arg(long, default_value_t = DEFAULT_DIM_CAP)]
        dim_cap: usize,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Verify one-sided vanishing over all small modules
    VanishingReport {
        file: String,
        #[arg(short, long)]
        q: u64,
        #[arg(long, default_value_t = 4)]
        dim_cap: usize,
        #[command(flatten)]
        json: JsonFlag,
    },
}

fn parse_primes(text: &str) -> Result<Vec<u64>, String> {
    text.split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|e| e.to_string()))
        .collect()
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn load(path: &str) -> Result<GentlePresentation, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
    GentlePresentation::parse(&text)
}

fn load_cluster(path: &str) -> Result<ClusterQuiver, Error> {
    ClusterQuiver::new(load(path)?.quiver().clone())
}

fn parse_multiset(p: &GentlePresentation, text: &str) -> Result<Vec<StringWord>, Error> {
    if text.trim() == "0" {
        return Ok(Vec::new());
    }
    text.split(';')
        .map(|part| StringWord::parse(p, part))
        .collect()
}

fn run() -> Result<u8, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Validate { file, json } => {
            let p = load(&file)?;
            let report = p.validate_gentle();
            if json.json {
                let doc = json!({
                    "ok": report.is_ok(),
                    "violations": report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                println!("{report}");
            }
            Ok(if report.is_ok() { 0 } else { 1 })
        }
        Command::Cmaus { file, json } => {
            let p = load(&file)?;
            require_gentle(&p)?;
            let aus = cm_auslander(&p)?;
            if json.json {
                let cycles: Vec<Vec<String>> = critical_cycles(&p)
                    .iter()
                    .map(|c| {
                        c.arrows()
                            .iter()
                            .map(|&a| p.quiver().arrow(a).id.clone())
                            .collect()
                    })
                    .collect();
                let gp = gorenstein_projectives(&p);
                let doc = json!({
                    "presentation": PresentationDoc::from(&aus),
                    "cycles": cycles,
                    "singularity_profile": singularity_profile(&p),
                    "gorenstein_projectives": {
                        "projectives": gp.projectives,
                        "radicals": gp.radicals,
                    },
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                print!("{}", aus.serialize());
            }
            Ok(0)
        }
        Command::Strings {
            file,
            string_cap,
            json,
        } => {
            let p = load(&file)?;
            require_gentle(&p)?;
            let strings = enumerate_strings_capped(&p, string_cap)?;
            if json.json {
                let doc = json!({
                    "count": strings.len(),
                    "strings": strings.iter().map(|w| w.display(p.quiver())).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                for w in &strings {
                    println!("{}", w.display(p.quiver()));
                }
                println!("# {} strings", strings.len());
            }
            Ok(0)
        }
        Command::Bands { file, json } => {
            let p = load(&file)?;
            require_gentle(&p)?;
            let band = find_band(&p);
            if json.json {
                let doc = json!({
                    "band": band.as_ref().map(|b| b.display(p.quiver())),
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                match band {
                    Some(b) => println!("{}", b.display(p.quiver())),
                    None => println!("none"),
                }
            }
            Ok(0)
        }
        Command::Repfinite { file, json } => {
            let p = load(&file)?;
            require_gentle(&p)?;
            let band = find_band(&p);
            let finite = band.is_none();
            debug_assert_eq!(finite, is_representation_finite(&p));
            if json.json {
                let doc = json!({
                    "representation_finite": finite,
                    "band": band.as_ref().map(|b| b.display(p.quiver())),
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else if finite {
                println!("representation finite");
            } else {
                println!(
                    "representation infinite (band {})",
                    band.unwrap().display(p.quiver())
                );
            }
            Ok(0)
        }
        Command::Cartan { file, json } => {
            let p = load(&file)?;
            let cartan = cartan_matrix(&p)?;
            if json.json {
                let doc = json!({
                    "cartan": MatrixDoc::from_int_matrix(&cartan.labels, &cartan.matrix),
                    "det": cartan.det.to_string(),
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                for i in 0..cartan.matrix.rows {
                    let row: Vec<String> = (0..cartan.matrix.cols)
                        .map(|j| cartan.matrix[(i, j)].to_string())
                        .collect();
                    println!("{:>4}  [{}]", cartan.labels[i], row.join(", "));
                }
                println!("det = {}", cartan.det);
            }
            Ok(0)
        }
        Command::Coxeter { file, json } => {
            let p = load(&file)?;
            let poly = coxeter_polynomial(&p)?;
            emit_polynomial(&poly, json.json);
            Ok(0)
        }
        Command::ClosedForm { t, s, json } => {
            let poly = coxeter_closed_form(t, s);
            emit_polynomial(&poly, json.json);
            Ok(0)
        }
        Command::Mutate { file, vertex, json } => {
            let c = load_cluster(&file)?;
            let mutated = ClusterQuiver::new(fz_mutate(c.quiver(), &vertex)?)?;
            let p = mutated.cluster_relations();
            if json.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&PresentationDoc::from(&p)).unwrap()
                );
            } else {
                print!("{}", p.serialize());
            }
            Ok(0)
        }
        Command::GoodMutations { file, json } => {
            let c = load_cluster(&file)?;
            let algebra = c.cluster_relations();
            let mut rows = Vec::new();
            for v in c.quiver().vertices().to_vec() {
                let minus = mutation_defined(&algebra, &v, MutationSign::Minus)?;
                let plus = mutation_defined(&algebra, &v, MutationSign::Plus)?;
                let good = is_good_mutation(&c, &v)?;
                rows.push((v, minus, plus, good));
            }
            if json.json {
                let doc: Vec<_> = rows
                    .iter()
                    .map(|(v, minus, plus, good)| {
                        json!({
                            "vertex": v,
                            "minus_defined": minus,
                            "plus_defined": plus,
                            "good": good,
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                for (v, minus, plus, good) in rows {
                    let defined = match (minus, plus) {
                        (true, true) => "mu-,mu+",
                        (true, false) => "mu-",
                        (false, true) => "mu+",
                        (false, false) => "none",
                    };
                    let verdict = if good { "good" } else { "bad" };
                    println!("{v:>6}  {defined:<8} {verdict}");
                }
            }
            Ok(0)
        }
        Command::DerivedClass {
            file1,
            file2,
            bfs_bound,
            json,
        } => {
            let q1 = load_cluster(&file1)?;
            let q2 = load_cluster(&file2)?;
            let equivalent = derived_equivalent(&q1, &q2)?;
            let witness = if equivalent && q1.quiver().vertex_count() <= bfs_bound {
                good_mutation_sequence(&q1, &q2, bfs_bound)?
            } else {
                None
            };
            if json.json {
                let doc = json!({
                    "n": q1.quiver().vertex_count(),
                    "counts": [
                        {"lines": q1.counts().0, "triangles": q1.counts().1},
                        {"lines": q2.counts().0, "triangles": q2.counts().1},
                    ],
                    "derived_equivalent": equivalent,
                    "good_mutation_witness": witness,
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                let (s1, t1) = q1.counts();
                let (s2, t2) = q2.counts();
                println!("first:  s={s1} t={t1}");
                println!("second: s={s2} t={t2}");
                println!(
                    "derived equivalent: {}",
                    if equivalent { "yes" } else { "no" }
                );
                if let Some(seq) = witness {
                    if seq.is_empty() {
                        println!("good-mutation witness: already isomorphic");
                    } else {
                        println!("good-mutation witness: {}", seq.join(" "));
                    }
                } else if equivalent {
                    println!("good-mutation witness: not searched (vertex bound)");
                }
            }
            Ok(0)
        }
        Command::Hexagons { file, json } => {
            let p = load(&file)?;
            let count = count_hexagons(&p);
            if json.json {
                println!("{}", json!({ "hexagons": count }));
            } else {
                println!("{count}");
            }
            Ok(0)
        }
        Command::Gen { t, s, seed, json } => {
            let q = random_cluster_quiver(t, s, seed);
            let p = q.cluster_relations();
            if json.json {
                let doc = json!({
                    "seed": seed,
                    "presentation": PresentationDoc::from(&p),
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                println!("# t={t} s={s} seed={seed}");
                print!("{}", p.serialize());
            }
            Ok(0)
        }
        Command::Hall { command } => run_hall(command),
        Command::Reproduce { json } => {
            let reports = reproduce::run_all();
            let all_passed = reports.iter().all(|r| r.passed);
            if json.json {
                let doc: Vec<_> = reports
                    .iter()
                    .map(|r| {
                        json!({
                            "name": r.name,
                            "passed": r.passed,
                            "detail": r.detail,
                            "elapsed_ms": r.elapsed.as_millis() as u64,
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                for r in &reports {
                    println!("{}", r.line());
                }
                let passed = reports.iter().filter(|r| r.passed).count();
                println!("{passed}/{} criteria passed", reports.len());
            }
            Ok(if all_passed { 0 } else { 1 })
        }
    }
}

fn run_hall(command: HallCommand) -> Result<u8, Error> {
    match command {
        HallCommand::Number {
            file,
            l,
            m,
            n,
            q,
            dim_cap,
            json,
        } => {
            let p = load(&file)?;
            let ctx = HallContext::new(&p, q, dim_cap)?;
            let cl = ctx.iso_class(&parse_multiset(&p, &l)?)?;
            let cm = ctx.iso_class(&parse_multiset(&p, &m)?)?;
            let cn = ctx.iso_class(&parse_multiset(&p, &n)?)?;
            let value = ctx.hall_number(&cl, &cm, &cn)?;
            if json.json {
                let doc = json!({
                    "triple": {"l": l, "m": m, "n": n},
                    "q": q,
                    "value": value,
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                println!("{value}");
            }
            Ok(0)
        }
        HallCommand::Poly {
            file,
            l,
            m,
            n,
            primes,
            check_primes,
            dim_cap,
            json,
        } => {
            let p = load(&file)?;
            let lw = parse_multiset(&p, &l)?;
            let mw = parse_multiset(&p, &m)?;
            let nw = parse_multiset(&p, &n)?;
            let fit: Vec<u64> = if primes.is_empty() {
                DEFAULT_FIT_PRIMES.to_vec()
            } else {
                primes
            };
            let check: Vec<u64> = if check_primes.is_empty() {
                DEFAULT_CHECK_PRIMES.to_vec()
            } else {
                check_primes
            };
            let poly = hall_polynomial(&p, &lw, &mw, &nw, &fit, &check, dim_cap)?;
            if json.json {
                let doc = json!({
                    "triple": {"l": l, "m": m, "n": n},
                    "polynomial": PolynomialDoc::from(&poly),
                    "fit_primes": fit,
                    "verified_at": check,
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                println!("{poly}");
            }
            Ok(0)
        }
        HallCommand::Product {
            file,
            m,
            n,
            q,
            dim_cap,
            json,
        } => {
            let p = load(&file)?;
            let ctx = HallContext::new(&p, q, dim_cap)?;
            let cm = ctx.iso_class(&parse_multiset(&p, &m)?)?;
            let cn = ctx.iso_class(&parse_multiset(&p, &n)?)?;
            let product = ctx.hall_product(&cm, &cn)?;
            if json.json {
                let terms: Vec<_> = product
                    .iter()
                    .map(|(class, coeff)| {
                        json!({
                            "class": ctx.display_class(class),
                            "coefficient": coeff,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "q": q, "terms": terms })).unwrap()
                );
            } else if product.is_empty() {
                println!("0");
            } else {
                for (class, coeff) in &product {
                    println!("{coeff} * [{}]", ctx.display_class(class));
                }
            }
            Ok(0)
        }
        HallCommand::VanishingReport {
            file,
            q,
            dim_cap,
            json,
        } => {
            let p = load(&file)?;
            let report = one_sided_vanishing_report(&p, q, dim_cap)?;
            if json.json {
                let doc = json!({
                    "q": q,
                    "dim_cap": dim_cap,
                    "modules_checked": report.modules_checked,
                    "violations": report.violations,
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                println!("modules checked: {}", report.modules_checked);
                if report.is_clean() {
                    println!("no violations");
                } else {
                    for v in &report.violations {
                        println!("violation: {v}");
                    }
                }
            }
            Ok(if report.is_clean() { 0 } else { 1 })
        }
    }
}

fn require_gentle(p: &GentlePresentation) -> Result<(), Error> {
    let report = p.validate_gentle();
    if report.is_ok() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "presentation is not gentle: {report}"
        )))
    }
}

fn emit_polynomial(poly: &gentle_cm::linalg::IntPolynomial, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&PolynomialDoc::from(poly)).unwrap()
        );
    } else {
        println!("{poly}");
    }
}
