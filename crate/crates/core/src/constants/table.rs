use super::{d_constants_with, derive_params, theorem_one_with, Accuracy, PRule};
use crate::error::{domain, Error, Result};

use rayon::prelude::*;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    /// Dirichlet L-functions: `C1`, `C2`.
    One,
    /// Dedekind zeta-functions: `D1`, `D2`, `D3`.
    Two,
}

impl Theorem {
    pub fn number(self) -> u8 {
        match self {
            Theorem::One => 1,
            Theorem::Two => 2,
        }
    }
}

impl TryFrom<u8> for Theorem {
    type Error = Error;

    fn try_from(n: u8) -> Result<Self> {
        match n {
            1 => Ok(Theorem::One),
            2 => Ok(Theorem::Two),
            _ => domain(format!("theorem must be 1 or 2, got {n}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Markdown,
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "md" | "markdown" => Ok(TableFormat::Markdown),
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            _ => domain(format!("unknown format {s:?}; expected md, csv or json")),
        }
    }
}

/// Constants of one row at one `T0`, already rounded up, or the error text.
type Cell = std::result::Result<Vec<f64>, String>;

struct Row {
    eta: f64,
    /// `C1` / `D1`, independent of `T0`.
    leading: Cell,
    /// Per `T0`: `[C2]` or `[D2, D3]`.
    per_t0: Vec<Cell>,
}

fn compute_cell(
    theorem: Theorem,
    eta: f64,
    p_rule: PRule,
    t0: f64,
    acc: &Accuracy,
) -> Result<Vec<f64>> {
    let params = derive_params(eta, p_rule, t0)?;
    Ok(match theorem {
        Theorem::One => {
            let c = theorem_one_with(&params, acc)?.rounded_up();
            vec![c.c1, c.c2]
        }
        Theorem::Two => {
            let d = d_constants_with(&params, acc)?.rounded_up();
            vec![d.d1, d.d2, d.d3]
        }
    })
}

fn compute_rows(
    theorem: Theorem,
    t0_list: &[f64],
    eta_grid: &[f64],
    p_rule: PRule,
    acc: &Accuracy,
) -> Vec<Row> {
    eta_grid
        .par_iter()
        .map(|&eta| {
            let cells: Vec<Cell> = t0_list
                .iter()
                .map(|&t0| compute_cell(theorem, eta, p_rule, t0, acc).map_err(|e| e.to_string()))
                .collect();
            let leading = cells
                .iter()
                .find_map(|c| c.as_ref().ok().map(|v| vec![v[0]]))
                .ok_or_else(|| {
                    cells
                        .iter()
                        .find_map(|c| c.clone().err())
                        .unwrap_or_default()
                });
            let per_t0 = cells
                .into_iter()
                .map(|c| c.map(|v| v[1..].to_vec()))
                .collect();
            Row {
                eta,
                leading,
                per_t0,
            }
        })
        .collect()
}

fn fmt3(x: f64) -> String {
    format!("{x:.3}")
}

fn cell_strings(cell: &Cell, width: usize) -> Vec<String> {
    match cell {
        Ok(v) => v.iter().copied().map(fmt3).collect(),
        Err(_) => vec!["ERR".to_string(); width],
    }
}

fn headers(theorem: Theorem, t0_list: &[f64], csv: bool) -> Vec<String> {
    let (lead, tail): (&str, &[&str]) = match theorem {
        Theorem::One => ("C1", &["C2"]),
        Theorem::Two => ("D1", &["D2", "D3"]),
    };
    let mut h = vec!["eta".to_string(), lead.to_string()];
    for t0 in t0_list {
        for name in tail {
            h.push(if csv {
                format!("{name}_T0_{t0}")
            } else {
                format!("{name} (T>={t0})")
            });
        }
    }
    h
}

fn row_fields(theorem: Theorem, row: &Row) -> Vec<String> {
    let width = match theorem {
        Theorem::One => 1,
        Theorem::Two => 2,
    };
    let mut fields = vec![format!("{:.2}", row.eta)];
    fields.extend(cell_strings(&row.leading, 1));
    for cell in &row.per_t0 {
        fields.extend(cell_strings(cell, width));
    }
    fields
}

fn json_rows(theorem: Theorem, t0_list: &[f64], p_rule: PRule, rows: &[Row]) -> Value {
    let envelopes: Vec<Value> = t0_list
        .iter()
        .enumerate()
        .map(|(i, &t0)| {
            let entries: Vec<Value> = rows
                .iter()
                .map(|row| match (&row.leading, &row.per_t0[i]) {
                    (Ok(lead), Ok(rest)) => match theorem {
                        Theorem::One => json!({"eta": row.eta, "C1": lead[0], "C2": rest[0]}),
                        Theorem::Two => json!({
                            "eta": row.eta, "D1": lead[0], "D2": rest[0], "D3": rest[1]
                        }),
                    },
                    (_, Err(e)) | (Err(e), _) => {
                        json!({"eta": row.eta, "error": format!("ERR: {e}")})
                    }
                })
                .collect();
            json!({
                "theorem": theorem.number(),
                "T0": t0,
                "p_rule": p_rule.to_string(),
                "rows": entries,
            })
        })
        .collect();
    Value::Array(envelopes)
}

/// Build the table of constants as a JSON value: one envelope
/// `{theorem, T0, p_rule, rows}` per `T0`, values rounded up to 3 decimals.
pub fn table_json(
    theorem: Theorem,
    t0_list: &[f64],
    eta_grid: &[f64],
    p_rule: PRule,
) -> Result<Value> {
    table_json_with(theorem, t0_list, eta_grid, p_rule, &Accuracy::default())
}

pub fn table_json_with(
    theorem: Theorem,
    t0_list: &[f64],
    eta_grid: &[f64],
    p_rule: PRule,
    acc: &Accuracy,
) -> Result<Value> {
    check_grids(t0_list, eta_grid)?;
    let rows = compute_rows(theorem, t0_list, eta_grid, p_rule, acc);
    Ok(json_rows(theorem, t0_list, p_rule, &rows))
}

fn check_grids(t0_list: &[f64], eta_grid: &[f64]) -> Result<()> {
    if t0_list.is_empty() || eta_grid.is_empty() {
        return domain("T0 list and eta grid must be non-empty");
    }
    Ok(())
}

/// Render one row per `eta`, constants rounded up to 3 decimals. Rows whose
/// evaluation fails are kept and marked `ERR`.
pub fn render_table(
    theorem: Theorem,
    t0_list: &[f64],
    eta_grid: &[f64],
    p_rule: PRule,
    format: TableFormat,
) -> Result<String> {
    render_table_with(
        theorem,
        t0_list,
        eta_grid,
        p_rule,
        format,
        &Accuracy::default(),
    )
}

pub fn render_table_with(
    theorem: Theorem,
    t0_list: &[f64],
    eta_grid: &[f64],
    p_rule: PRule,
    format: TableFormat,
    acc: &Accuracy,
) -> Result<String> {
    check_grids(t0_list, eta_grid)?;
    let rows = compute_rows(theorem, t0_list, eta_grid, p_rule, acc);
    let mut out = String::new();
    match format {
        TableFormat::Markdown => {
            let h = headers(theorem, t0_list, false);
            writeln!(out, "| {} |", h.join(" | ")).unwrap();
            writeln!(out, "|{}", "---|".repeat(h.len())).unwrap();
            for row in &rows {
                writeln!(out, "| {} |", row_fields(theorem, row).join(" | ")).unwrap();
            }
        }
        TableFormat::Csv => {
            writeln!(out, "{}", headers(theorem, t0_list, true).join(",")).unwrap();
            for row in &rows {
                writeln!(out, "{}", row_fields(theorem, row).join(",")).unwrap();
            }
        }
        TableFormat::Json => {
            let v = json_rows(theorem, t0_list, p_rule, &rows);
            out = serde_json::to_string_pretty(&v).expect("table serializes");
            out.push('\n');
        }
    }
    Ok(out)
}
