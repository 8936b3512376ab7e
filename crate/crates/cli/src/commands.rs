use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use rayon::prelude::*;
use serde_json::{json, Value};

use commgraph_core::classify::{classify_group, VerdictKind};
use commgraph_core::commgraph::{CommutingGraph, Distance, GraphError};
use commgraph_core::finfield::{FieldError, DEFAULT_FIELD_CAP};
use commgraph_core::groups::{GroupError, GroupHandle, DEFAULT_GROUP_CAP};
use commgraph_core::paperfam::{
    run_suite_with_cap, search_params as search, PaperError, ParamTriple,
};

use crate::{Config, Format};

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 1;
pub const EXIT_CAP: u8 = 2;
pub const EXIT_DISCONNECTED_OTHER: u8 = 3;
pub const EXIT_CHECK_FAILED: u8 = 4;

/// Column order of `analyze --format csv`.
pub const ANALYZE_COLUMNS: [&str; 9] = [
    "file",
    "kind",
    "order",
    "kernel_order",
    "K_order",
    "L_order",
    "components",
    "diameter",
    "error",
];
pub const VERIFY_COLUMNS: [&str; 3] = ["name", "status", "detail"];
pub const PARAM_COLUMNS: [&str; 3] = ["q", "r", "t"];
pub const GRAPH_COLUMNS: [&str; 4] = ["class", "size", "rep", "neighbours"];

pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

impl Failure {
    fn new(code: u8, error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code,
            error: error.into(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn group_exit(e: &GroupError) -> u8 {
    match e {
        GroupError::CapExceeded { .. } | GroupError::Field(FieldError::CapExceeded { .. }) => {
            EXIT_CAP
        }
        _ => EXIT_PARSE,
    }
}

fn paper_exit(e: &PaperError) -> u8 {
    match e {
        PaperError::InvalidParams(_) => EXIT_PARSE,
        PaperError::Field(FieldError::CapExceeded { .. }) => EXIT_CAP,
        PaperError::Group(g) => group_exit(g),
        _ => EXIT_CHECK_FAILED,
    }
}

fn load_group(path: &Path, cap: usize) -> Result<GroupHandle, Failure> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(|e| Failure::new(EXIT_PARSE, e))?;
    let handle = GroupHandle::from_json(&text)
        .map_err(|e| Failure::new(group_exit(&e), anyhow!("{}: {e}", path.display())))?;
    Ok(handle.with_cap(cap))
}

fn group_cap(config: &Config) -> usize {
    config
        .cap
        .map_or(DEFAULT_GROUP_CAP, |c| c.min(usize::MAX as u64) as usize)
}

fn emit(config: &Config, text: &str) -> Result<(), Failure> {
    match &config.out {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(|e| Failure::new(EXIT_PARSE, e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .map_err(|e| Failure::new(EXIT_PARSE, e))
        }
    }
}

fn emit_json(config: &Config, value: &Value) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values serialise");
    text.push('\n');
    emit(config, &text)
}

fn emit_csv(config: &Config, header: &[&str], rows: Vec<Vec<String>>) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Failure::new(EXIT_PARSE, e);
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Failure::new(EXIT_PARSE, anyhow!("{e}")))?;
    emit(
        config,
        &String::from_utf8(bytes).expect("CSV of UTF-8 fields"),
    )
}

fn cell(v: Option<&Value>) -> String {
    match v {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(other) => other.to_string(),
    }
}

/// One file's report and the exit code it contributes.
fn analyze_one(path: &Path, cap: usize) -> (Value, u8) {
    let file = path.display().to_string();
    let failed = |f: Failure| {
        let entry = json!({"error": format!("{:#}", f.error), "file": file});
        (entry, f.code)
    };
    let handle = match load_group(path, cap) {
        Ok(h) => h,
        Err(f) => return failed(f),
    };
    let group = match handle.materialize() {
        Ok(g) => g,
        Err(e) => return failed(Failure::new(group_exit(&e), anyhow!("{file}: {e}"))),
    };
    let verdict = classify_group(group);
    let mut entry = match verdict.to_json() {
        Value::Object(m) => m,
        _ => unreachable!("verdicts serialise as objects"),
    };
    entry.insert("file".into(), json!(file));
    if verdict.components.is_none() {
        match CommutingGraph::build(group) {
            Ok(graph) => {
                let summary = graph.summary();
                entry.insert("components".into(), json!(summary.components.len()));
                entry.insert("diameter".into(), json!(summary.diameter));
            }
            Err(GraphError::EmptyGraph) => {
                entry.insert("components".into(), json!(0));
                entry.insert("diameter".into(), json!(Distance::Finite(0)));
            }
            Err(e) => return failed(Failure::new(EXIT_PARSE, e)),
        }
    }
    let code = if verdict.kind == VerdictKind::DisconnectedOther {
        EXIT_DISCONNECTED_OTHER
    } else {
        EXIT_OK
    };
    (Value::Object(entry), code)
}

pub fn analyze(config: &Config, files: &[PathBuf]) -> CmdResult {
    let cap = group_cap(config);
    let results: Vec<(Value, u8)> = files.par_iter().map(|f| analyze_one(f, cap)).collect();
    // The first nonzero code in input order decides the exit status.
    let code = results
        .iter()
        .map(|(_, c)| *c)
        .find(|&c| c != EXIT_OK)
        .unwrap_or(EXIT_OK);
    for (entry, c) in &results {
        if *c != EXIT_OK {
            let reason = entry.get("error").and_then(Value::as_str).unwrap_or(
                "graph is disconnected but the group is neither Frobenius nor 2-Frobenius",
            );
            eprintln!("{}: {reason}", cell(entry.get("file")));
        }
    }
    match config.format {
        Format::Json => {
            let reports: Vec<Value> = results.into_iter().map(|(v, _)| v).collect();
            emit_json(config, &json!({ "reports": reports }))?;
        }
        Format::Csv => {
            let rows = results
                .iter()
                .map(|(v, _)| ANALYZE_COLUMNS.iter().map(|k| cell(v.get(*k))).collect())
                .collect();
            emit_csv(config, &ANALYZE_COLUMNS, rows)?;
        }
    }
    Ok(code)
}

pub fn paper_verify(config: &Config, q: u64, r: u64, t: u64) -> CmdResult {
    let params = ParamTriple { q, r, t };
    let cap = config.cap.unwrap_or(DEFAULT_FIELD_CAP);
    let report = run_suite_with_cap(params, cap).map_err(|e| Failure::new(paper_exit(&e), e))?;
    match config.format {
        Format::Json => {
            let value = serde_json::to_value(&report).expect("report serialises");
            emit_json(config, &value)?;
        }
        Format::Csv => {
            let rows = report
                .checks
                .iter()
                .map(|c| {
                    let status = serde_json::to_value(c.status).expect("status serialises");
                    vec![c.name.clone(), cell(Some(&status)), c.detail.clone()]
                })
                .collect();
            emit_csv(config, &VERIFY_COLUMNS, rows)?;
        }
    }
    match report.first_failure() {
        Some(c) => {
            eprintln!("check {} failed: {}", c.name, c.detail);
            Ok(EXIT_CHECK_FAILED)
        }
        None => Ok(EXIT_OK),
    }
}

pub fn search_params(config: &Config, q_max: u64) -> CmdResult {
    if q_max < 3 {
        return Err(Failure::new(
            EXIT_PARSE,
            anyhow!("--q-max must be at least 3"),
        ));
    }
    let found = search(q_max);
    for (q, r) in &found.unresolved {
        eprintln!("warning: least t for q = {q}, r = {r} not determined");
    }
    match config.format {
        Format::Json => {
            let value = serde_json::to_value(&found).expect("search serialises");
            emit_json(config, &value)?;
        }
        Format::Csv => {
            let rows = found
                .triples
                .iter()
                .map(|p| vec![p.q.to_string(), p.r.to_string(), p.t.to_string()])
                .collect();
            emit_csv(config, &PARAM_COLUMNS, rows)?;
        }
    }
    Ok(EXIT_OK)
}

pub fn graph_export(config: &Config, file: &Path) -> CmdResult {
    let handle = load_group(file, group_cap(config))?;
    let group = handle
        .materialize()
        .map_err(|e| Failure::new(group_exit(&e), anyhow!("{}: {e}", file.display())))?;
    let graph = CommutingGraph::build(group).map_err(|e| Failure::new(EXIT_PARSE, e))?;
    let value = graph.export_json(|e| e.to_json());
    match config.format {
        Format::Json => emit_json(config, &value)?,
        Format::Csv => {
            let rows = (0..graph.num_classes())
                .map(|i| {
                    let class = &value["classes"][i];
                    let neighbours: Vec<String> = graph.class_adjacency()[i]
                        .iter()
                        .map(|j| j.to_string())
                        .collect();
                    vec![
                        i.to_string(),
                        cell(class.get("size")),
                        class["rep"].to_string(),
                        neighbours.join(" "),
                    ]
                })
                .collect();
            emit_csv(config, &GRAPH_COLUMNS, rows)?;
        }
    }
    Ok(EXIT_OK)
}
