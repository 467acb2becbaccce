use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use sptk_core::partition::BaseKind;

use crate::config::{OutputFormat, RunConfig};
use crate::error::VerifyError;
use crate::tables::Tables;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableKind {
    #[value(name = "SPTKD")]
    Sptkd,
    #[value(name = "SPTKDO")]
    Sptkdo,
    #[value(name = "B0B1")]
    B0b1,
    #[value(name = "BASE")]
    Base,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub counter: String,
    pub params: BTreeMap<&'static str, u32>,
    pub value: i64,
}

/// Cells in emission order: SPTKD/SPTKDO by (k, n); B0B1 by (k, n) with B0
/// before B1; BASE by counter, then n from 0.
pub fn entries(kind: TableKind, tables: &Tables) -> Vec<TableEntry> {
    let (k_max, n_max) = (tables.k_max(), tables.n_max());
    let kn = |counter: &str, k: u32, n: u32, value: i64| TableEntry {
        counter: counter.to_string(),
        params: BTreeMap::from([("k", k), ("n", n)]),
        value,
    };
    let mut out = Vec::new();
    match kind {
        TableKind::Sptkd | TableKind::Sptkdo => {
            let name = if kind == TableKind::Sptkd { "SPTKD" } else { "SPTKDO" };
            for k in 1..=k_max {
                for n in 1..=n_max {
                    let v = if kind == TableKind::Sptkd { tables.spt_d(k, n as i64) } else { tables.spt_do(k, n as i64) };
                    out.push(kn(name, k, n, v));
                }
            }
        }
        TableKind::B0b1 => {
            for k in 1..=k_max {
                for n in 1..=n_max {
                    out.push(kn("B0", k, n, tables.b0(k, n as i64)));
                    out.push(kn("B1", k, n, tables.b1(k, n as i64)));
                }
            }
        }
        TableKind::Base => {
            for kind in BaseKind::ALL {
                for n in 0..=n_max {
                    out.push(TableEntry {
                        counter: kind.name().to_string(),
                        params: BTreeMap::from([("n", n)]),
                        value: tables.base(kind, n as i64),
                    });
                }
            }
        }
    }
    out
}

pub fn emit_table(kind: TableKind, cfg: &RunConfig) -> Result<String, VerifyError> {
    let tables = Tables::build(cfg.k_max, cfg.n_max)?;
    Ok(render(kind, &tables, cfg.format))
}

pub fn render(kind: TableKind, tables: &Tables, format: OutputFormat) -> String {
    let rows = entries(kind, tables);
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&rows).expect("table serializes");
            s.push('\n');
            s
        }
        OutputFormat::Csv => render_csv(kind, &rows),
        OutputFormat::Text => render_text(kind, tables),
    }
}

fn render_csv(kind: TableKind, rows: &[TableEntry]) -> String {
    let mut out = String::from(match kind {
        TableKind::Sptkd | TableKind::Sptkdo => "k,n,value\n",
        TableKind::B0b1 => "counter,k,n,value\n",
        TableKind::Base => "counter,n,value\n",
    });
    for r in rows {
        let (k, n) = (r.params.get("k"), r.params["n"]);
        match kind {
            TableKind::Sptkd | TableKind::Sptkdo => writeln!(out, "{},{n},{}", k.unwrap(), r.value),
            TableKind::B0b1 => writeln!(out, "{},{},{n},{}", r.counter, k.unwrap(), r.value),
            TableKind::Base => writeln!(out, "{},{n},{}", r.counter, r.value),
        }
        .unwrap();
    }
    out
}

type Column<'a> = (String, Box<dyn Fn(i64) -> i64 + 'a>);

/// One row per n, one right-aligned column per counter.
fn render_text(kind: TableKind, tables: &Tables) -> String {
    let k_max = tables.k_max();
    let (n_min, columns): (u32, Vec<Column>) = match kind {
        TableKind::Sptkd => (1, (1..=k_max).map(|k| (format!("k={k}"), Box::new(move |n| tables.spt_d(k, n)) as _)).collect()),
        TableKind::Sptkdo => (1, (1..=k_max).map(|k| (format!("k={k}"), Box::new(move |n| tables.spt_do(k, n)) as _)).collect()),
        TableKind::B0b1 => (
            1,
            (1..=k_max)
                .flat_map(|k| {
                    [
                        (format!("B0(k={k})"), Box::new(move |n| tables.b0(k, n)) as Box<dyn Fn(i64) -> i64>) as Column,
                        (format!("B1(k={k})"), Box::new(move |n| tables.b1(k, n)) as _),
                    ]
                })
                .collect(),
        ),
        TableKind::Base => (0, BaseKind::ALL.iter().map(|&b| (b.name().to_string(), Box::new(move |n| tables.base(b, n)) as _)).collect()),
    };
    let ns: Vec<u32> = (n_min..=tables.n_max()).collect();
    let mut grid: Vec<Vec<String>> = vec![std::iter::once("n".to_string()).chain(columns.iter().map(|c| c.0.clone())).collect()];
    for &n in &ns {
        grid.push(std::iter::once(n.to_string()).chain(columns.iter().map(|c| (c.1)(n as i64).to_string())).collect());
    }
    let widths: Vec<usize> = (0..grid[0].len()).map(|i| grid.iter().map(|r| r[i].len()).max().unwrap()).collect();
    let mut out = String::new();
    for row in &grid {
        let line: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
        writeln!(out, "{}", line.join("  ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(k_max: u32, n_max: u32, format: OutputFormat) -> RunConfig {
        RunConfig { k_max, n_max, t_max: 1, format }
    }

    #[test]
    fn base_csv_rows() {
        let out = emit_table(TableKind::Base, &cfg(1, 6, OutputFormat::Csv)).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "counter,n,value");
        assert!(lines.contains(&"PD,5,3"));
        assert!(lines.contains(&"PDO_SIGNED,5,-1"));
        assert_eq!(lines.len(), 1 + 4 * 7);
    }

    #[test]
    fn sptkd_cell() {
        let out = emit_table(TableKind::Sptkd, &cfg(2, 4, OutputFormat::Csv)).unwrap();
        assert!(out.starts_with("k,n,value\n"));
        assert!(out.lines().any(|l| l == "2,4,2"));
    }

    #[test]
    fn b0b1_cell() {
        let out = emit_table(TableKind::B0b1, &cfg(1, 5, OutputFormat::Csv)).unwrap();
        assert!(out.contains("B0,1,5,1\nB1,1,5,2\n"));
    }

    #[test]
    fn json_entries() {
        let out = emit_table(TableKind::Sptkd, &cfg(2, 4, OutputFormat::Json)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let cell = v.as_array().unwrap().iter().find(|e| e["params"]["k"] == 2 && e["params"]["n"] == 4).unwrap();
        assert_eq!(cell["value"], 2);
        assert_eq!(cell["counter"], "SPTKD");
    }

    #[test]
    fn text_is_aligned() {
        let out = emit_table(TableKind::Base, &cfg(1, 12, OutputFormat::Text)).unwrap();
        let lens: Vec<usize> = out.lines().map(str::len).collect();
        assert!(lens.windows(2).all(|w| w[0] == w[1]));
        assert!(out.lines().next().unwrap().ends_with("PDO_SIGNED"));
    }
}
