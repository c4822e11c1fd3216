//! Campaign tables: one row per grid length with formula predictions,
//! solver values, witnesses, and an agreement verdict.

use crate::cache::{self, Cache};
use crate::AppError;
use clap::ValueEnum;
use gridbond::bondage::total_bondage;
use gridbond::formulas::{bondage_formula, gamma_t_formula, FormulaValue};
use gridbond::grid::{GridGraph, GridSpec};
use gridbond::solver::gamma_t_dp;
use serde_json::{json, Value};
use std::time::Instant;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

pub struct CampaignRow {
    pub n: u32,
    pub m: u32,
    pub gamma_formula: String,
    pub gamma_solver: String,
    pub bondage_formula: String,
    pub bondage_solver: String,
    pub witness: String,
    pub agreement: bool,
    pub note: String,
    pub gamma_ms: u128,
    pub bondage_ms: u128,
}

pub fn campaign(
    m: u32,
    n_from: u32,
    n_to: u32,
    kmax: u32,
    cache: &Cache,
) -> Result<Vec<CampaignRow>, AppError> {
    let mut rows = Vec::new();
    for n in n_from..=n_to {
        rows.push(campaign_row(n, m, kmax, cache)?);
    }
    Ok(rows)
}

fn campaign_row(n: u32, m: u32, kmax: u32, cache: &Cache) -> Result<CampaignRow, AppError> {
    let spec = GridSpec::new(n, m).map_err(|e| AppError::Usage(e.to_string()))?;
    let g = GridGraph::new(spec);

    let gamma_formula = gamma_t_formula(n, m);
    let start = Instant::now();
    let gamma_key = cache::key(&g, "gamma_t/dp");
    let gamma_value: Option<u32> = match cache.lookup(&gamma_key) {
        Some(v) => v["gamma_t"].as_u64().map(|x| x as u32),
        None => {
            let result = gamma_t_dp(&g)?;
            cache.store(&gamma_key, &crate::gamma_payload(&result));
            result.value()
        }
    };
    let gamma_ms = start.elapsed().as_millis();

    let bondage_fml = bondage_formula(n, m);
    let start = Instant::now();
    let bondage_key = cache::key(&g, &format!("bondage/k={kmax}/sym=true"));
    let bondage_payload: Value = match cache.lookup(&bondage_key) {
        Some(v) => v,
        None => {
            let result = total_bondage(&g, kmax, true)?;
            let payload = crate::bondage_payload(&result);
            cache.store(&bondage_key, &payload);
            payload
        }
    };
    let bondage_ms = start.elapsed().as_millis();

    let (gamma_ok, gamma_note) = match (gamma_formula, gamma_value) {
        (FormulaValue::Exact(f), Some(v)) => (f == v, String::new()),
        (FormulaValue::Exact(_), None) => (false, "solver undefined".into()),
        _ => (true, String::new()),
    };
    let (bondage_ok, bondage_note) = judge_bondage(bondage_fml, &bondage_payload);

    let witness = bondage_payload["witness"]
        .as_array()
        .map(|a| {
            a.iter()
                .map(|x| x.as_str().unwrap_or_default().to_string())
                .collect::<Vec<_>>()
                .join(";")
        })
        .unwrap_or_default();

    let mut note = Vec::new();
    if !gamma_note.is_empty() {
        note.push(gamma_note);
    }
    if !bondage_note.is_empty() {
        note.push(bondage_note);
    }

    Ok(CampaignRow {
        n,
        m,
        gamma_formula: formula_string(gamma_formula),
        gamma_solver: gamma_value.map_or("undefined".into(), |v| v.to_string()),
        bondage_formula: formula_string(bondage_fml),
        bondage_solver: bondage_string(&bondage_payload),
        witness,
        agreement: gamma_ok && bondage_ok,
        note: note.join("; "),
        gamma_ms,
        bondage_ms,
    })
}

/// A formula may only disagree with the search in one hard way: an exact
/// value that differs from an exact search result, or a search that
/// exhausts past an upper bound without success. An exact search value
/// strictly below an upper bound is recorded, not failed.
fn judge_bondage(formula: FormulaValue, payload: &Value) -> (bool, String) {
    let status = payload["status"].as_str().unwrap_or_default();
    let solved = payload["b_t"].as_u64().map(|v| v as u32);
    let searched = payload["searched_k"].as_u64().map(|v| v as u32);
    match formula {
        FormulaValue::Exact(f) => match status {
            "exact" => (solved == Some(f), String::new()),
            "infinity" => (false, "search found no witness at any size".into()),
            _ => {
                if searched.is_some_and(|k| k >= f) {
                    (false, "search exhausted the claimed exact size".into())
                } else {
                    (true, "search too shallow to confirm".into())
                }
            }
        },
        FormulaValue::UpperBound(u) => match status {
            "exact" => {
                let v = solved.unwrap_or(u32::MAX);
                if v > u {
                    (false, String::new())
                } else if v < u {
                    (true, "bound-not-tight".into())
                } else {
                    (true, String::new())
                }
            }
            "infinity" => (false, "search found no witness at any size".into()),
            _ => {
                if searched.is_some_and(|k| k >= u) {
                    (false, "search exhausted the claimed bound".into())
                } else {
                    (true, "search too shallow to confirm".into())
                }
            }
        },
        FormulaValue::Unknown => (true, String::new()),
    }
}

fn formula_string(f: FormulaValue) -> String {
    match f {
        FormulaValue::Exact(v) => format!("={v}"),
        FormulaValue::UpperBound(v) => format!("<={v}"),
        FormulaValue::Unknown => "?".into(),
    }
}

fn bondage_string(payload: &Value) -> String {
    match payload["status"].as_str().unwrap_or_default() {
        "exact" => format!("={}", payload["b_t"]),
        "infinity" => "infinity".into(),
        _ => format!(">{}", payload["searched_k"]),
    }
}

pub fn emit(rows: &[CampaignRow], format: Format) {
    match format {
        Format::Csv => {
            println!(
                "n,m,gamma_formula,gamma_solver,bondage_formula,bondage_solver,witness,agreement,note,gamma_ms,bondage_ms"
            );
            for r in rows {
                println!(
                    "{},{},{},{},{},{},{},{},{},{},{}",
                    r.n,
                    r.m,
                    csv_field(&r.gamma_formula),
                    csv_field(&r.gamma_solver),
                    csv_field(&r.bondage_formula),
                    csv_field(&r.bondage_solver),
                    csv_field(&r.witness),
                    r.agreement,
                    csv_field(&r.note),
                    r.gamma_ms,
                    r.bondage_ms
                );
            }
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "m": r.m,
                        "gamma_formula": r.gamma_formula,
                        "gamma_solver": r.gamma_solver,
                        "bondage_formula": r.bondage_formula,
                        "bondage_solver": r.bondage_solver,
                        "witness": r.witness,
                        "agreement": r.agreement,
                        "note": r.note,
                        "gamma_ms": r.gamma_ms,
                        "bondage_ms": r.bondage_ms,
                    })
                })
                .collect();
            println!("{}", Value::Array(rows));
        }
        Format::Text => {
            println!(
                "{:>4} {:>3} {:>9} {:>8} {:>9} {:>8} {:>6}  witness",
                "n", "m", "gt.fml", "gt", "bt.fml", "bt", "agree"
            );
            for r in rows {
                println!(
                    "{:>4} {:>3} {:>9} {:>8} {:>9} {:>8} {:>6}  {}{}",
                    r.n,
                    r.m,
                    r.gamma_formula,
                    r.gamma_solver,
                    r.bondage_formula,
                    r.bondage_solver,
                    r.agreement,
                    r.witness,
                    if r.note.is_empty() { String::new() } else { format!("  [{}]", r.note) }
                );
            }
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
