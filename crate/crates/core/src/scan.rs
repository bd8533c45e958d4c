//! Pair scans over corpora of small graphs.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::caps::{Caps, MAX_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::generate::{canonical_form, generate_all_graphs, MAX_CANONICAL_ORDER, MAX_GENERATED_ORDER};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::theorem::{disjointness_properties, verify_main_theorem, Orientation, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanConfig {
    pub max_factor_order: usize,
    pub max_product_order: usize,
    /// Generate every graph of order `1..=generate_up_to`; zero disables.
    pub generate_up_to: usize,
    pub connected_only: bool,
    /// Worker count; zero lets the pool decide. Never affects the report.
    #[serde(skip)]
    pub jobs: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            max_factor_order: 5,
            max_product_order: 30,
            generate_up_to: 5,
            connected_only: false,
            jobs: 0,
        }
    }
}

impl ScanConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_factor_order == 0 {
            return Err(Error::OrderOutOfRange(0));
        }
        if self.max_product_order == 0 || self.max_product_order > MAX_ENUMERATION_CAP {
            return Err(Error::CapExceeded {
                what: "product order cap",
                size: self.max_product_order,
                cap: MAX_ENUMERATION_CAP,
            });
        }
        if self.generate_up_to > MAX_GENERATED_ORDER {
            return Err(Error::OrderOutOfRange(self.generate_up_to));
        }
        Ok(())
    }

    fn caps(&self) -> Caps {
        Caps {
            enumeration: self.max_product_order.max(self.max_factor_order).min(MAX_ENUMERATION_CAP),
            ..Caps::default()
        }
    }
}

/// A corpus graph keyed by its canonical graph6 line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub g6: String,
    pub graph: Graph,
}

/// Generated graphs plus `ingested` ones, filtered by the config, relabeled
/// canonically where affordable, deduplicated and sorted by graph6.
pub fn build_corpus(config: &ScanConfig, ingested: Vec<Graph>) -> Result<Vec<CorpusEntry>> {
    config.validate()?;
    let mut graphs = ingested;
    for n in 1..=config.generate_up_to.min(config.max_factor_order) {
        graphs.extend(generate_all_graphs(n)?);
    }
    let mut by_key = BTreeMap::new();
    for g in graphs {
        if g.order() == 0 || g.order() > config.max_factor_order {
            continue;
        }
        if config.connected_only && !g.is_connected() {
            continue;
        }
        let graph = if g.order() <= MAX_CANONICAL_ORDER {
            canonical_form(&g)?
        } else {
            g
        };
        by_key.entry(to_graph6(&graph)?).or_insert(graph);
    }
    Ok(by_key
        .into_iter()
        .map(|(g6, graph)| CorpusEntry { g6, graph })
        .collect())
}

/// One scanned unordered pair. Set contents are summarized by size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub g6_g: String,
    pub g6_h: String,
    pub product_order: usize,
    pub product_edges: usize,
    pub g_well_covered: bool,
    pub g_alpha: usize,
    pub g_min_maximal: usize,
    pub h_well_covered: bool,
    pub h_alpha: usize,
    pub h_min_maximal: usize,
    pub product_well_covered: bool,
    pub product_alpha: usize,
    pub product_min_maximal: usize,
    pub g_isolatable: usize,
    pub h_isolatable: usize,
    pub theorem_consistent: bool,
    pub witness_orientation: Option<Orientation>,
    pub witness_big: Option<usize>,
    pub witness_small: Option<usize>,
    pub witness_verified: Option<bool>,
    pub witness_agrees: Option<bool>,
    /// Set only when neither factor has an isolatable vertex and the product
    /// is well-covered.
    pub lemma_3_2_holds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub g_well_covered: bool,
    pub h_well_covered: bool,
    pub product_well_covered: bool,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ViolationRecord {
    pub g6_g: String,
    pub g6_h: String,
    pub certificate: Violation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub corpus_size: usize,
    pub pairs_scanned: usize,
    /// Pairs whose product exceeds the product cap.
    pub pairs_skipped: usize,
    pub cells: Vec<Cell>,
    pub witnesses_built: usize,
    pub witness_disagreements: usize,
    pub lemma_3_2_checked: usize,
    pub lemma_3_2_failures: usize,
    pub violations: Vec<ViolationRecord>,
}

impl ScanSummary {
    pub fn cell(&self, g: bool, h: bool, product: bool) -> usize {
        self.cells
            .iter()
            .find(|c| (c.g_well_covered, c.h_well_covered, c.product_well_covered) == (g, h, product))
            .map_or(0, |c| c.count)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub config: ScanConfig,
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
}

fn evaluate(g: &CorpusEntry, h: &CorpusEntry, caps: &Caps) -> Result<(ScanRecord, Option<Violation>)> {
    let v = verify_main_theorem(&g.graph, &h.graph, caps)?;
    let lemma = if v.g_isolatable.is_empty() && v.h_isolatable.is_empty() && v.product_report.well_covered {
        let gp = disjointness_properties(&g.graph, caps)?;
        let hp = disjointness_properties(&h.graph, caps)?;
        Some(
            gp.every_set_has_disjoint_partner
                && hp.every_set_has_disjoint_partner
                && (gp.disjoint_pairs_equal_size || hp.disjoint_pairs_equal_size),
        )
    } else {
        None
    };
    let order = g.graph.order() * h.graph.order();
    let record = ScanRecord {
        g6_g: g.g6.clone(),
        g6_h: h.g6.clone(),
        product_order: order,
        product_edges: g.graph.order() * h.graph.edge_count() + h.graph.order() * g.graph.edge_count(),
        g_well_covered: v.g_report.well_covered,
        g_alpha: v.g_report.alpha,
        g_min_maximal: v.g_report.min_maximal,
        h_well_covered: v.h_report.well_covered,
        h_alpha: v.h_report.alpha,
        h_min_maximal: v.h_report.min_maximal,
        product_well_covered: v.product_report.well_covered,
        product_alpha: v.product_report.alpha,
        product_min_maximal: v.product_report.min_maximal,
        g_isolatable: v.g_isolatable.len(),
        h_isolatable: v.h_isolatable.len(),
        theorem_consistent: v.theorem_consistent,
        witness_orientation: v.witness.as_ref().map(|w| w.orientation),
        witness_big: v.witness.as_ref().map(|w| w.witness.big.len()),
        witness_small: v.witness.as_ref().map(|w| w.witness.small.len()),
        witness_verified: v.witness.as_ref().map(|w| w.checks.all()),
        witness_agrees: v.witness_agrees(),
        lemma_3_2_holds: lemma,
    };
    Ok((record, v.violation))
}

/// All unordered pairs `(corpus[i], corpus[j])`, `i <= j`, whose product fits
/// the cap.
pub fn scan_pairs(config: &ScanConfig, corpus: &[CorpusEntry]) -> (Vec<(usize, usize)>, usize) {
    let mut pairs = Vec::new();
    let mut skipped = 0;
    for i in 0..corpus.len() {
        for j in i..corpus.len() {
            if corpus[i].graph.order() * corpus[j].graph.order() <= config.max_product_order {
                pairs.push((i, j));
            } else {
                skipped += 1;
            }
        }
    }
    (pairs, skipped)
}

/// Evaluates every pair in parallel and aggregates in corpus order, so the
/// report does not depend on the worker count.
pub fn run_scan(config: &ScanConfig, corpus: &[CorpusEntry]) -> Result<ScanReport> {
    config.validate()?;
    let caps = config.caps();
    let (pairs, skipped) = scan_pairs(config, corpus);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .expect("thread pool");
    let results: Vec<_> = pool.install(|| {
        pairs
            .par_iter()
            .map(|&(i, j)| evaluate(&corpus[i], &corpus[j], &caps))
            .collect::<Result<Vec<_>>>()
    })?;

    let mut counts = BTreeMap::new();
    let mut violations = Vec::new();
    let mut records = Vec::with_capacity(results.len());
    for (record, violation) in results {
        let key = (!record.g_well_covered, !record.h_well_covered, !record.product_well_covered);
        *counts.entry(key).or_insert(0) += 1;
        if let Some(certificate) = violation {
            violations.push(ViolationRecord {
                g6_g: record.g6_g.clone(),
                g6_h: record.g6_h.clone(),
                certificate,
            });
        }
        records.push(record);
    }
    let mut cells = Vec::new();
    for g in [true, false] {
        for h in [true, false] {
            for p in [true, false] {
                cells.push(Cell {
                    g_well_covered: g,
                    h_well_covered: h,
                    product_well_covered: p,
                    count: counts.get(&(!g, !h, !p)).copied().unwrap_or(0),
                });
            }
        }
    }
    let summary = ScanSummary {
        corpus_size: corpus.len(),
        pairs_scanned: records.len(),
        pairs_skipped: skipped,
        cells,
        witnesses_built: records.iter().filter(|r| r.witness_orientation.is_some()).count(),
        witness_disagreements: records.iter().filter(|r| r.witness_agrees == Some(false)).count(),
        lemma_3_2_checked: records.iter().filter(|r| r.lemma_3_2_holds.is_some()).count(),
        lemma_3_2_failures: records.iter().filter(|r| r.lemma_3_2_holds == Some(false)).count(),
        violations,
    };
    Ok(ScanReport {
        config: config.clone(),
        records,
        summary,
    })
}
