use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, Write};

use serde::Serialize;
use wellcover::caps::MAX_ENUMERATION_CAP;
use wellcover::scan::{build_corpus, run_scan, ScanConfig, ScanReport};
use wellcover::theorem::{oriented_witness, Orientation, PairVerdict, WitnessChecks};
use wellcover::{
    cartesian_product, generate_all_graphs, is_well_covered, isolatable_vertices,
    independence::maximal_size_histogram, to_graph6, verify_main_theorem, Caps, Error, Graph,
    IsolatableWitness, ProductIndexMap, VertexSet,
};

use crate::{input, Format, ScanArgs};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_CAP: u8 = 3;
pub const EXIT_NOT_APPLICABLE: u8 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            _ => EXIT_INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::input(e.to_string())
    }
}

fn print_json<T: Serialize>(value: &T, pretty: bool) -> Result<(), CliError> {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("reports serialize");
    writeln!(io::stdout().lock(), "{text}")?;
    Ok(())
}

#[derive(Serialize)]
struct AnalyzeReport {
    graph6: String,
    order: usize,
    edges: usize,
    well_covered: bool,
    alpha: usize,
    min_maximal: usize,
    witness_max: VertexSet,
    witness_min: VertexSet,
    isolatable: Vec<usize>,
    isolatable_certificates: Vec<IsolatableWitness>,
    /// size -> number of maximal independent sets of that size
    maximal_set_sizes: BTreeMap<usize, u64>,
}

fn analyze_one(line: &str, g: &Graph) -> Result<AnalyzeReport, CliError> {
    let caps = Caps::default();
    let report = is_well_covered(g, &caps)?;
    let certificates = isolatable_vertices(g, &caps)?;
    Ok(AnalyzeReport {
        graph6: line.to_string(),
        order: g.order(),
        edges: g.edge_count(),
        well_covered: report.well_covered,
        alpha: report.alpha,
        min_maximal: report.min_maximal,
        witness_max: report.witness_max,
        witness_min: report.witness_min,
        isolatable: certificates.iter().map(|w| w.x).collect(),
        isolatable_certificates: certificates,
        maximal_set_sizes: maximal_size_histogram(g, &caps)?,
    })
}

pub fn analyze(arg: &str) -> Result<u8, CliError> {
    if arg == "-" {
        for (line, g) in input::read_stdin()? {
            print_json(&analyze_one(&line, &g)?, false)?;
        }
    } else {
        let g = input::parse(arg)?;
        print_json(&analyze_one(arg.trim(), &g)?, true)?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ProductReport<'a> {
    g: &'a str,
    h: &'a str,
    product_order: usize,
    product_edges: usize,
    verdict: PairVerdict,
}

pub fn product(g_line: &str, h_line: &str, cap: usize) -> Result<u8, CliError> {
    let g = input::parse(g_line)?;
    let h = input::parse(h_line)?;
    let caps = Caps {
        enumeration: cap.min(MAX_ENUMERATION_CAP),
        ..Caps::default()
    };
    let (p, _) = cartesian_product(&g, &h, &caps)?;
    let verdict = verify_main_theorem(&g, &h, &caps)?;
    let code = if verdict.theorem_consistent {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    };
    print_json(
        &ProductReport {
            g: g_line.trim(),
            h: h_line.trim(),
            product_order: p.order(),
            product_edges: p.edge_count(),
            verdict,
        },
        true,
    )?;
    Ok(code)
}

#[derive(Serialize)]
struct SetView {
    indices: VertexSet,
    pairs: Vec<(usize, usize)>,
}

fn view(map: &ProductIndexMap, s: &VertexSet) -> SetView {
    SetView {
        indices: s.clone(),
        pairs: map.pairs(s),
    }
}

#[derive(Serialize)]
struct WitnessReport<'a> {
    orientation: Orientation,
    /// Factor supplying the isolatable vertex, and the non-well-covered one.
    isolatable_factor: &'a str,
    other_factor: &'a str,
    x: usize,
    i_set: VertexSet,
    a: VertexSet,
    b: VertexSet,
    j: SetView,
    j1: SetView,
    j2: SetView,
    xa: SetView,
    xb: SetView,
    l: SetView,
    m: SetView,
    big: SetView,
    small: SetView,
    big_size: usize,
    small_size: usize,
    checks: WitnessChecks,
    all_checks_pass: bool,
}

pub fn witness(g_line: &str, h_line: &str) -> Result<u8, CliError> {
    let g = input::parse(g_line)?;
    let h = input::parse(h_line)?;
    let caps = Caps::default();
    let Some(found) = oriented_witness(&g, &h, &caps)? else {
        let describe = |name: &str, f: &Graph| -> Result<String, CliError> {
            let iso = !isolatable_vertices(f, &caps)?.is_empty();
            let wc = is_well_covered(f, &caps)?.well_covered;
            Ok(format!(
                "{name} {} isolatable vertex and {} well-covered",
                if iso { "has an" } else { "has no" },
                if wc { "is" } else { "is not" }
            ))
        };
        return Err(CliError {
            code: EXIT_NOT_APPLICABLE,
            message: format!(
                "no orientation pairs a factor with an isolatable vertex and a non-well-covered factor: {}; {}",
                describe("G", &g)?,
                describe("H", &h)?
            ),
        });
    };
    let (first, second) = match found.orientation {
        Orientation::GIsolatable => (g_line.trim(), h_line.trim()),
        Orientation::HIsolatable => (h_line.trim(), g_line.trim()),
    };
    let w = &found.witness;
    let map = &w.map;
    print_json(
        &WitnessReport {
            orientation: found.orientation,
            isolatable_factor: first,
            other_factor: second,
            x: w.x,
            i_set: w.i_set.clone(),
            a: w.a.clone(),
            b: w.b.clone(),
            j: view(map, &w.j),
            j1: view(map, &w.j1),
            j2: view(map, &w.j2),
            xa: view(map, &w.xa),
            xb: view(map, &w.xb),
            l: view(map, &w.l),
            m: view(map, &w.m),
            big: view(map, &w.big),
            small: view(map, &w.small),
            big_size: w.big.len(),
            small_size: w.small.len(),
            checks: found.checks,
            all_checks_pass: found.checks.all(),
        },
        true,
    )?;
    Ok(EXIT_OK)
}

fn write_report(report: &ScanReport, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, report).expect("reports serialize");
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in &report.records {
                w.serialize(r)
                    .map_err(|e| CliError::input(format!("csv: {e}")))?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn scan(args: &ScanArgs) -> Result<u8, CliError> {
    let config = ScanConfig {
        max_factor_order: args.max_n,
        max_product_order: args.product_cap,
        generate_up_to: args
            .gen_up_to
            .unwrap_or(if args.corpus.is_empty() { 5 } else { 0 }),
        connected_only: args.connected_only,
        jobs: args.jobs,
    };
    config.validate().map_err(|e| CliError::input(e.to_string()))?;
    let mut ingested = Vec::new();
    for path in &args.corpus {
        ingested.extend(input::read_file(path)?);
    }
    let corpus = build_corpus(&config, ingested)?;
    let report = run_scan(&config, &corpus)?;

    match &args.out {
        Some(path) => {
            let mut file = File::create(path)
                .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
            write_report(&report, args.format, &mut file)?;
        }
        None => write_report(&report, args.format, &mut io::stdout().lock())?,
    }

    let s = &report.summary;
    eprintln!(
        "{} graphs, {} pairs scanned, {} skipped, {} witnesses, (no,no,yes) = {}",
        s.corpus_size,
        s.pairs_scanned,
        s.pairs_skipped,
        s.witnesses_built,
        s.cell(false, false, true)
    );
    if s.violations.is_empty() {
        Ok(EXIT_OK)
    } else {
        for v in &s.violations {
            eprintln!(
                "VIOLATION {} x {}: {}",
                v.g6_g,
                v.g6_h,
                serde_json::to_string(&v.certificate).expect("reports serialize")
            );
        }
        Ok(EXIT_VIOLATION)
    }
}

pub fn gen(n: usize) -> Result<u8, CliError> {
    let graphs = generate_all_graphs(n)?;
    let mut out = io::stdout().lock();
    for g in &graphs {
        writeln!(out, "{}", to_graph6(g)?)?;
    }
    Ok(EXIT_OK)
}
