//! The `gmet` command-line interface.
//!
//! Exit codes: 0 = success (all comparisons pass), 1 = a table comparison
//! mismatched, 2 = construction or parse error.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::counting;
use crate::group::{Group, Limits};
use crate::metrics::weight_from_partition;
use crate::partitions::{
    self, bell, count_bi_invariant_metrics, count_invariant_metrics, BlockPartition,
};
use crate::symmetry::{
    colored_automorphism_group_capped, distance_graph, export_dot, identify_group,
};

use super::tables::{
    identification_candidates, report_to_csv, resolve_spec, run_tables, TablesOptions,
};

#[derive(Parser, Debug)]
#[command(
    name = "gmet",
    about = "Invariant metrics on finite groups: partitions, symmetry groups, counts",
    long_about = None
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Group invariants and metric counts for a spec like D6, Q8xC2^2, S4,
    /// GD(C3^2), W(S2,3,S3), file:table.json, or a named semidirect product
    /// such as C4:C4.
    Info { spec: String },
    /// Stream the unitary symmetric (or conjugate) partitions as JSON lines.
    Enumerate {
        spec: String,
        #[arg(long, value_enum, default_value_t = EnumerateKind::Partitions)]
        kind: EnumerateKind,
        /// Stop after this many records.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Symmetry group of the metric class selected by a partition.
    Symmetry {
        spec: String,
        /// 1-based index into the canonical enumeration, one of
        /// "lee", "clee", "ham", or "file:partition.json".
        #[arg(long)]
        partition: String,
        /// Write the distance graph in DOT format to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Rebuild the reference tables and compare against the bundled
    /// expected counts.
    Tables {
        #[arg(long)]
        max_order: Option<usize>,
        /// Directory with Cayley-table files `<label>.json` for rows
        /// without built-in constructions.
        #[arg(long)]
        data_dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = TablesFormat::Csv)]
        format: TablesFormat,
    },
    /// Print the Bell number B_k.
    Bell { k: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumerateKind {
    Partitions,
    Conjugate,
    /// Partitions together with the canonical integral weight.
    Metrics,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TablesFormat {
    Csv,
    Json,
}

/// Limits with the `GMET_ORDER_CAP` environment override applied.
pub fn limits_from_env() -> Limits {
    let mut limits = Limits::default();
    if let Ok(text) = std::env::var("GMET_ORDER_CAP") {
        if let Ok(cap) = text.parse::<usize>() {
            limits.order_cap = cap.min(crate::group::MAX_ORDER);
        }
    }
    limits
}

#[derive(Debug, Serialize)]
pub struct InfoReport {
    pub spec: String,
    pub order: usize,
    pub abelian: bool,
    pub k2: usize,
    pub c: usize,
    pub c2: usize,
    pub k: usize,
    pub kstar: usize,
    #[serde(rename = "M")]
    pub m: String,
    #[serde(rename = "Mstar")]
    pub mstar: String,
    pub b: String,
    pub d: String,
}

pub fn cmd_info(spec: &str, limits: &Limits) -> Result<InfoReport, String> {
    let g = resolve_spec(spec, limits).map_err(|e| e.to_string())?;
    Ok(info_for(spec, &g))
}

pub fn info_for(spec: &str, g: &Group) -> InfoReport {
    let k = partitions::k_invariant(g);
    let kstar = partitions::k_bi_invariant(g);
    InfoReport {
        spec: spec.to_string(),
        order: g.order(),
        abelian: g.is_abelian(),
        k2: g.involution_count(),
        c: g.class_count(),
        c2: g.real_class_count(),
        k,
        kstar,
        m: count_invariant_metrics(g).to_string(),
        mstar: count_bi_invariant_metrics(g).to_string(),
        b: counting::bi_invariance_degree(g).to_string(),
        d: counting::commutativity_degree(g).to_string(),
    }
}

pub fn cmd_enumerate(
    spec: &str,
    kind: EnumerateKind,
    limit: Option<usize>,
    limits: &Limits,
) -> Result<Vec<serde_json::Value>, String> {
    let g = resolve_spec(spec, limits).map_err(|e| e.to_string())?;
    let iter: Box<dyn Iterator<Item = BlockPartition>> = match kind {
        EnumerateKind::Conjugate => {
            Box::new(partitions::enumerate_conjugate_partitions(&g).map_err(|e| e.to_string())?)
        }
        _ => Box::new(
            partitions::enumerate_unitary_symmetric_partitions(&g).map_err(|e| e.to_string())?,
        ),
    };
    let cap = limit.unwrap_or(usize::MAX);
    let mut records = Vec::new();
    for (i, p) in iter.enumerate() {
        if i >= cap {
            break;
        }
        let mut record = json!({
            "index": i + 1,
            "blocks": p.blocks(),
        });
        if kind == EnumerateKind::Metrics {
            let w = weight_from_partition(&g, &p).map_err(|e| e.to_string())?;
            record["weight"] = json!(w
                .values()
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<String>>());
        }
        records.push(record);
    }
    Ok(records)
}

#[derive(Debug, Serialize)]
pub struct SymmetryReport {
    pub spec: String,
    pub partition: Vec<Vec<usize>>,
    pub order: String,
    pub generators: Vec<Vec<usize>>,
    pub identified: Option<String>,
}

/// Resolve a partition selector: a 1-based enumeration index, "lee",
/// "clee" (conjugate Lee), "ham", or "file:<path>".
pub fn select_partition(g: &Group, selector: &str) -> Result<BlockPartition, String> {
    match selector {
        "lee" => Ok(partitions::lee_partition(g)),
        "clee" => Ok(partitions::finest_conjugate_partition(g)),
        "ham" => {
            let blocks = if g.order() == 1 {
                vec![vec![0]]
            } else {
                vec![vec![0], (1..g.order()).collect()]
            };
            BlockPartition::new(g.order(), blocks).map_err(|e| e.to_string())
        }
        _ => {
            if let Some(path) = selector.strip_prefix("file:") {
                let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
                return super::json::partition_from_json(g.order(), &text)
                    .map_err(|e| e.to_string());
            }
            let index: usize = selector
                .parse()
                .map_err(|_| format!("bad partition selector '{selector}'"))?;
            if index == 0 {
                return Err("partition indices are 1-based".into());
            }
            partitions::enumerate_unitary_symmetric_partitions(g)
                .map_err(|e| e.to_string())?
                .nth(index - 1)
                .ok_or_else(|| format!("no partition with index {index}"))
        }
    }
}

pub fn cmd_symmetry(
    spec: &str,
    selector: &str,
    dot_out: Option<&PathBuf>,
    limits: &Limits,
) -> Result<SymmetryReport, String> {
    let g = resolve_spec(spec, limits).map_err(|e| e.to_string())?;
    let p = select_partition(&g, selector)?;
    if !partitions::is_unitary_symmetric(&g, &p) {
        return Err("partition is not unitary symmetric".into());
    }
    let graph = distance_graph(&g, &p).map_err(|e| e.to_string())?;
    if let Some(path) = dot_out {
        std::fs::write(path, export_dot(&graph, g.names()))
            .map_err(|e| format!("{}: {e}", path.display()))?;
    }
    let gamma = colored_automorphism_group_capped(&graph, crate::symmetry::DEFAULT_SEARCH_CAP)
        .map_err(|e| e.to_string())?;
    // Hamming classes are the full symmetric group; everything else goes
    // through the catalog when small enough.
    let identified = if p.num_blocks() <= 2 {
        Some(format!("S{}", g.order()))
    } else {
        let candidates = identification_candidates(
            gamma
                .order()
                .to_string()
                .parse::<usize>()
                .unwrap_or(usize::MAX),
        );
        identify_group(&gamma, &candidates).ok().flatten()
    };
    Ok(SymmetryReport {
        spec: spec.to_string(),
        partition: p.blocks().to_vec(),
        order: gamma.order().to_string(),
        generators: gamma.generators().to_vec(),
        identified,
    })
}

/// Run the CLI; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let limits = limits_from_env();
    match cli.command {
        Command::Info { spec } => match cmd_info(&spec, &limits) {
            Ok(report) => {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Command::Enumerate { spec, kind, limit } => {
            match cmd_enumerate(&spec, kind, limit, &limits) {
                Ok(records) => {
                    for r in records {
                        println!("{r}");
                    }
                    0
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    2
                }
            }
        }
        Command::Symmetry {
            spec,
            partition,
            dot,
        } => match cmd_symmetry(&spec, &partition, dot.as_ref(), &limits) {
            Ok(report) => {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Command::Tables {
            max_order,
            data_dir,
            format,
        } => {
            let options = TablesOptions {
                max_order,
                data_dir,
                limits,
            };
            let report = run_tables(&options, &super::tables::expected_rows());
            match format {
                TablesFormat::Csv => print!("{}", report_to_csv(&report)),
                TablesFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&report).unwrap())
                }
            }
            if report.errors > 0 {
                2
            } else if report.mismatches > 0 {
                1
            } else {
                0
            }
        }
        Command::Bell { k } => {
            println!("{}", bell(k));
            0
        }
    }
}
