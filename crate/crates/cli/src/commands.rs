use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rees_core::analysis::{self, classify, forbidden_submatrix, retract, MatrixClass};
use rees_core::decide::{Decider, Method, Verdict};
use rees_core::field::Rank1Semigroup;
use rees_core::graphs::{to_dot, AdjacencyGraph, CoordinateGraph};
use rees_core::reductions::{decode_coloring, sigma, structured_witness, SimpleGraph};
use rees_core::text::{format_matrix, parse_matrix};
use rees_core::{Element, Polynomial, ReesSemigroup, StructureMatrix, Symbol};
use serde::Serialize;

use crate::args::{Cli, Command, Format, GenKind, Global, GraphKind, Problem};
use crate::instances::{self, Instance};
use crate::report::VerdictRecord;

pub const POSITIVE: u8 = 0;
pub const NEGATIVE: u8 = 1;
pub const FAILURE: u8 = 2;

pub fn run(cli: &Cli) -> Result<u8> {
    let g = &cli.global;
    match &cli.command {
        Command::TermEq { p, q } => {
            let s = semigroup(g)?;
            let (p, q) = (term(p)?, term(q)?);
            single(g, &s, "term-eq", vec![p.to_string(), q.to_string()], |d| d.term_eq(&p, &q), &[&p, &q])
        }
        Command::PolEq { p, q } => {
            let s = semigroup(g)?;
            let (p, q) = (poly(p, &s)?, poly(q, &s)?);
            single(g, &s, "pol-eq", vec![p.to_string(), q.to_string()], |d| d.pol_eq(&p, &q), &[&p, &q])
        }
        Command::PolZero { p } => {
            let s = semigroup(g)?;
            let p = poly(p, &s)?;
            single(g, &s, "pol-zero", vec![p.to_string()], |d| d.pol_zero(&p), &[&p])
        }
        Command::PolSat { p, b } => {
            let s = semigroup(g)?;
            let p = poly(p, &s)?;
            let b = instances::parse_element(b, &s)?;
            single(g, &s, "pol-sat", vec![p.to_string(), b.to_string()], |d| d.pol_sat(&p, &b), &[&p])
        }
        Command::ZsetEq { p, q } => {
            let s = semigroup(g)?;
            let (p, q) = (poly(p, &s)?, poly(q, &s)?);
            single(g, &s, "zset-eq", vec![p.to_string(), q.to_string()], |d| d.pol_zset_eq(&p, &q), &[&p, &q])
        }
        Command::AnalyzeMatrix => analyze(g),
        Command::Reduce { problem: Problem::ThreeCol, graph, output, map, witness } => {
            reduce_3col(g, graph, output.as_deref(), map.as_deref(), *witness)
        }
        Command::Gen { kind } => {
            print!("{}", format_matrix(&generate(kind)?));
            Ok(POSITIVE)
        }
        Command::Graph { kind, p } => {
            let p = match &g.matrix {
                Some(_) => poly(p, &semigroup(g)?)?,
                None => term(p)?,
            };
            let dot = match kind {
                GraphKind::Adjacency => adjacency_dot(&AdjacencyGraph::of(&p)),
                GraphKind::Bipartite => to_dot(&CoordinateGraph::bipartite(&p), "B"),
                GraphKind::Identified => to_dot(&CoordinateGraph::identified(&p), "B-bar"),
            };
            print!("{}", dot);
            Ok(POSITIVE)
        }
        Command::BruteCheck { instances, random, max_len } => brute_check(g, instances.as_deref(), *random, *max_len),
        Command::Batch { instances } => batch(g, instances),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_matrix(path: &Path) -> Result<ReesSemigroup> {
    parse_matrix(&read(path)?).with_context(|| format!("in matrix file {}", path.display()))
}

fn semigroup(g: &Global) -> Result<ReesSemigroup> {
    let Some(path) = &g.matrix else { bail!("this command needs --matrix FILE") };
    let mut s = load_matrix(path)?;
    if g.adjoin_identity {
        s = s.with_identity();
    }
    if s.order() <= ReesSemigroup::ASSOCIATIVITY_CHECK_BOUND {
        s.check_associative()?;
    }
    Ok(s)
}

fn term(text: &str) -> Result<Polynomial> {
    Polynomial::parse_term(text).with_context(|| format!("bad term `{}`", text))
}

fn poly(text: &str, s: &ReesSemigroup) -> Result<Polynomial> {
    Polynomial::parse(text, s).with_context(|| format!("bad polynomial `{}`", text))
}

fn decider(g: &Global, s: &ReesSemigroup) -> Decider {
    Decider::new(s).with_budget(g.budget).with_seed(g.seed)
}

fn exit_code(v: &Verdict) -> u8 {
    if v.is_positive() {
        POSITIVE
    } else {
        NEGATIVE
    }
}

/// Refuses exhaustive verdicts unless `--brute` was given.
fn gate(g: &Global, d: &Decider, v: Verdict) -> Result<Verdict> {
    if v.method == Method::BruteForce && !g.brute {
        bail!(
            "no fast procedure applies over this {} matrix; pass --brute to allow exhaustive search",
            d.class().name()
        );
    }
    Ok(v)
}

fn single(
    g: &Global,
    s: &ReesSemigroup,
    command: &str,
    inputs: Vec<String>,
    f: impl FnOnce(&Decider) -> rees_core::Result<Verdict>,
    polys: &[&Polynomial],
) -> Result<u8> {
    let d = decider(g, s);
    let v = gate(g, &d, f(&d)?)?;
    let record = VerdictRecord::new(command, inputs, &v, s, polys);
    println!("{}", record.render(g.format, g.explain, &v));
    Ok(exit_code(&v))
}

#[derive(Serialize)]
struct PlanRecord {
    k: usize,
    row_survivors: Vec<usize>,
    column_survivors: Vec<usize>,
    row_classes: Vec<usize>,
    column_classes: Vec<usize>,
}

#[derive(Serialize)]
struct AnalysisRecord {
    rows: usize,
    cols: usize,
    group: String,
    regular: bool,
    class: &'static str,
    totally_balanced: bool,
    /// Rows and columns (1-based) of a 2 × 2 submatrix with exactly one zero.
    forbidden_submatrix: Option<[usize; 4]>,
    plan: Option<PlanRecord>,
    border: Option<[usize; 2]>,
    residual: Vec<String>,
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}

fn analyze(g: &Global) -> Result<u8> {
    let Some(path) = &g.matrix else { bail!("analyze-matrix needs --matrix FILE") };
    let s = load_matrix(path)?;
    let m = s.matrix().shadow();
    let r = retract(&m);
    let class = classify(&m);
    let record = AnalysisRecord {
        rows: m.rows(),
        cols: m.cols(),
        group: s.group().name().to_string(),
        regular: analysis::is_regular(&m),
        class: class.name(),
        totally_balanced: analysis::is_totally_balanced(&m),
        forbidden_submatrix: forbidden_submatrix(&m).map(|(a, b, i, j)| [a + 1, b + 1, i + 1, j + 1]),
        plan: r.plan.as_ref().map(|p| PlanRecord {
            k: p.k,
            row_survivors: one_based(&p.row_survivor),
            column_survivors: one_based(&p.col_survivor),
            row_classes: one_based(&p.row_class),
            column_classes: one_based(&p.col_class),
        }),
        border: match class {
            MatrixClass::Bordered { row, col } => Some([row + 1, col + 1]),
            _ => None,
        },
        residual: r.residual.pattern().split('/').map(str::to_string).collect(),
    };
    match g.format {
        Format::Json => println!("{}", serde_json::to_string(&record)?),
        Format::Plain => {
            let yes = |b: bool| if b { "yes" } else { "no" };
            let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
            println!("size: {} x {}", record.rows, record.cols);
            println!("group: {}", record.group);
            println!("regular: {}", yes(record.regular));
            println!("class: {}", record.class);
            println!("totally balanced: {}", yes(record.totally_balanced));
            if let Some([a, b, i, j]) = record.forbidden_submatrix {
                println!("forbidden submatrix: rows {} {}, columns {} {}", a, b, i, j);
            }
            if let Some([row, col]) = record.border {
                println!("all-ones row: {}, all-ones column: {}", row, col);
            }
            if let Some(p) = &record.plan {
                println!("k: {}", p.k);
                println!("row survivors: {}", list(&p.row_survivors));
                println!("column survivors: {}", list(&p.column_survivors));
                println!("row classes: {}", list(&p.row_classes));
                println!("column classes: {}", list(&p.column_classes));
            }
            println!("residual:");
            for row in &record.residual {
                let cells: Vec<String> = row.chars().map(String::from).collect();
                println!("{}", cells.join(" "));
            }
        }
    }
    Ok(POSITIVE)
}

fn generate(kind: &GenKind) -> Result<ReesSemigroup> {
    let combinatorial = |m: rees_core::Result<StructureMatrix>| -> Result<ReesSemigroup> {
        Ok(ReesSemigroup::combinatorial(m?)?)
    };
    match kind {
        GenKind::Identity { k } => combinatorial(StructureMatrix::identity(*k)),
        GenKind::Hollow { k } => combinatorial(StructureMatrix::hollow(*k)),
        GenKind::AllOnes { m, n } => combinatorial(StructureMatrix::all_ones(*m, *n)),
        GenKind::Border { file } => {
            let s = load_matrix(file)?;
            Ok(ReesSemigroup::new(s.group().clone(), s.matrix().border())?)
        }
        GenKind::DirectSum { first, second } => {
            let (a, b) = (load_matrix(first)?, load_matrix(second)?);
            if a.group() != b.group() {
                bail!("cannot sum matrices over {} and {}", a.group().name(), b.group().name());
            }
            Ok(ReesSemigroup::new(a.group().clone(), a.matrix().direct_sum(b.matrix()))?)
        }
        GenKind::Rank1 { p, n } => Ok(Rank1Semigroup::new(*p, *n)?.semigroup),
        GenKind::HQuotient { file } => Ok(load_matrix(file)?.h_quotient()),
    }
}

fn adjacency_dot(g: &AdjacencyGraph) -> String {
    let mut s = String::from("digraph \"G\" {\n");
    for v in &g.vertices {
        s.push_str(&format!("  \"{}\";\n", v));
    }
    for (a, b) in &g.edges {
        s.push_str(&format!("  \"{}\" -> \"{}\";\n", a, b));
    }
    s.push_str("}\n");
    s
}

/// The 1-based vertex behind a reduction variable `kind#v…`.
fn vertex_of(name: &str) -> Option<usize> {
    name.split('#').nth(1)?.parse().ok()
}

#[derive(Serialize)]
struct ReductionRecord {
    vertices: usize,
    edges: usize,
    length: usize,
    polynomial: String,
    map: BTreeMap<String, usize>,
    /// Present with `--witness`: a colouring decoded from a nonzero evaluation.
    coloring: Option<Option<Vec<usize>>>,
}

fn reduce_3col(g: &Global, graph: &Path, output: Option<&Path>, map: Option<&Path>, witness: bool) -> Result<u8> {
    let graph_text = read(graph)?;
    let gr = SimpleGraph::parse(&graph_text).with_context(|| format!("in graph file {}", graph.display()))?;
    let p = sigma(&gr)?;
    let vars: BTreeMap<String, usize> = p
        .variables()
        .iter()
        .map(|v| (v.name().to_string(), vertex_of(v.name()).expect("reduction variables carry a vertex")))
        .collect();
    let coloring = if witness {
        Some(match structured_witness(&gr)? {
            Some(e) => Some(one_based(&decode_coloring(&gr, &e)?)),
            None => None,
        })
    } else {
        None
    };
    let map_text: String = vars.iter().map(|(v, k)| format!("{} {}\n", v, k)).collect();
    let map_path = map.map(Path::to_path_buf).or_else(|| {
        output.map(|o| {
            let mut name = o.as_os_str().to_owned();
            name.push(".map");
            name.into()
        })
    });
    if let Some(path) = &map_path {
        fs::write(path, &map_text).with_context(|| format!("cannot write {}", path.display()))?;
    }
    if let Some(path) = output {
        fs::write(path, format!("{}\n", p)).with_context(|| format!("cannot write {}", path.display()))?;
    }
    let record = ReductionRecord {
        vertices: gr.vertex_count(),
        edges: gr.edge_count(),
        length: p.len(),
        polynomial: p.to_string(),
        map: vars,
        coloring,
    };
    match g.format {
        Format::Json => println!("{}", serde_json::to_string(&record)?),
        Format::Plain => {
            if output.is_none() {
                println!("{}", record.polynomial);
            }
            eprintln!(
                "graph with {} vertices and {} edges; polynomial of length {} over H3",
                record.vertices, record.edges, record.length
            );
            match &record.coloring {
                Some(Some(c)) => eprintln!("3-coloring: {:?}", c),
                Some(None) => eprintln!("no structured nonzero evaluation: not 3-colorable"),
                None => {}
            }
        }
    }
    Ok(match record.coloring {
        Some(None) => NEGATIVE,
        _ => POSITIVE,
    })
}

#[derive(Serialize)]
struct BatchError<'a> {
    line: usize,
    error: &'a str,
}

fn batch(g: &Global, path: &Path) -> Result<u8> {
    let s = semigroup(g)?;
    let d = decider(g, &s);
    let text = read(path)?;
    let mut code = POSITIVE;
    for (k, line) in text.lines().enumerate() {
        let result = instances::parse_line(line, k + 1, &s).and_then(|i| match i {
            None => Ok(None),
            Some(i) => {
                let v = gate(g, &d, i.decide(&d)?)?;
                Ok(Some((i, v)))
            }
        });
        match result {
            Ok(None) => {}
            Ok(Some((i, v))) => {
                let record = VerdictRecord::new(i.name(), i.inputs(), &v, &s, &i.polynomials());
                match g.format {
                    Format::Json => println!("{}", record.render(g.format, g.explain, &v)),
                    Format::Plain => {
                        let text = record.render(g.format, g.explain, &v).replace('\n', "\n    ");
                        println!("{}: {} {}: {}", k + 1, i.name(), i.inputs().join(" | "), text);
                    }
                }
                code = code.max(exit_code(&v));
            }
            Err(e) => {
                let message = format!("{:#}", e);
                match g.format {
                    Format::Json => println!("{}", serde_json::to_string(&BatchError { line: k + 1, error: &message })?),
                    Format::Plain => println!("{}: error: {}", k + 1, message),
                }
                code = FAILURE;
            }
        }
    }
    Ok(code)
}

fn random_instance(s: &ReesSemigroup, rng: &mut ChaCha8Rng, max_len: usize, k: usize) -> Instance {
    let consts: Vec<Element> = s.nonzero_elements().filter(|e| *e != Element::One).collect();
    let poly = |rng: &mut ChaCha8Rng| {
        let len = rng.gen_range(1..=max_len.max(1));
        let word = (0..len)
            .map(|_| match rng.gen_range(0..3 + consts.len().min(3)) {
                0 => Symbol::var("x"),
                1 => Symbol::var("y"),
                2 => Symbol::var("z"),
                _ => Symbol::Const(consts[rng.gen_range(0..consts.len())]),
            })
            .collect();
        Polynomial::new(word).expect("nonempty")
    };
    match k % 4 {
        0 => Instance::Zero(poly(rng)),
        1 => Instance::Eq(poly(rng), poly(rng)),
        2 => Instance::ZSet(poly(rng), poly(rng)),
        _ => {
            let elements = s.elements();
            let b = elements[rng.gen_range(0..elements.len())];
            Instance::Sat(poly(rng), b)
        }
    }
}

#[derive(Serialize)]
struct CheckRecord {
    problem: &'static str,
    inputs: Vec<String>,
    fast: &'static str,
    method: &'static str,
    oracle: &'static str,
    agree: bool,
}

fn brute_check(g: &Global, path: Option<&Path>, random: usize, max_len: usize) -> Result<u8> {
    let s = semigroup(g)?;
    let d = decider(g, &s);
    let instances = match path {
        Some(path) => instances::parse_file(&read(path)?, &s)?,
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
            (0..random).map(|k| random_instance(&s, &mut rng, max_len, k)).collect()
        }
    };
    let (mut checked, mut disagreements, mut skipped) = (0, 0, 0);
    for i in &instances {
        let oracle = match i.brute(&s, g.budget) {
            Ok(v) => v,
            Err(rees_core::Error::BudgetExceeded { .. }) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        let fast = i.decide(&d)?;
        let agree = fast.outcome.kind() == oracle.outcome.kind();
        checked += 1;
        let record = CheckRecord {
            problem: i.name(),
            inputs: i.inputs(),
            fast: fast.outcome.kind(),
            method: fast.method.name(),
            oracle: oracle.outcome.kind(),
            agree,
        };
        if !agree {
            disagreements += 1;
            eprintln!(
                "DISAGREEMENT {} {}: fast path says {} ({}), oracle says {}",
                record.problem,
                record.inputs.join(" | "),
                record.fast,
                record.method,
                record.oracle
            );
        }
        match g.format {
            Format::Json => println!("{}", serde_json::to_string(&record)?),
            Format::Plain if g.explain || !agree => println!(
                "{} {} {}: {} ({}) vs oracle {}",
                if agree { "agree" } else { "DISAGREE" },
                record.problem,
                record.inputs.join(" | "),
                record.fast,
                record.method,
                record.oracle
            ),
            Format::Plain => {}
        }
    }
    if g.format == Format::Plain {
        println!(
            "{} instances checked, {} disagreements, {} over budget",
            checked, disagreements, skipped
        );
    }
    if disagreements > 0 {
        bail!("{} disagreements between the fast path and the oracle", disagreements);
    }
    Ok(POSITIVE)
}
