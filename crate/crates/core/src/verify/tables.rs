//! CSV and JSON tables of the structure constants `f`, `g`, `h`.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use super::checks::f_triples;
use super::CheckParams;
use crate::afcomb::{enumerate_theta, PeriodicMatrix, ZVector};
use crate::error::{Error, Result};
use crate::schur::{compute_f, delta_theta};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    F,
    G,
    H,
}

impl std::str::FromStr for TableKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "f" => Ok(TableKind::F),
            "g" => Ok(TableKind::G),
            "h" => Ok(TableKind::H),
            other => Err(Error::InvalidInput(format!("unknown table kind `{other}`"))),
        }
    }
}

/// One nonzero structure constant.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TableRow {
    pub kind: &'static str,
    pub n: usize,
    #[serde(rename = "N")]
    pub big_n: Option<usize>,
    #[serde(rename = "r'")]
    pub rp: usize,
    #[serde(rename = "r''")]
    pub rpp: usize,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "C")]
    pub c: String,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
}

fn row(kind: &'static str, n: usize, rp: usize, rpp: usize, abc: [&PeriodicMatrix; 3], value: String, m: Option<usize>) -> TableRow {
    let [a, b, c] = abc.map(|x| x.compact());
    TableRow { kind, n, big_n: None, rp, rpp, a, b, c, value, m }
}

/// Every nonzero constant of the requested kind within the bounds, sorted.
///
/// `f`: `sigma(A) <= r` (default 2), entries within `spread` (default 1) of the diagonal; `r'`, `r''`
/// record `sigma(B)`, `sigma(C)`. `g`: `A` in `Theta(n, r)` (default `r = 2`) within `spread`, all
/// splits allowed by `rp` / `rpp`. `h`: `A` in `Y(n)` with `sigma(A) + mn <= r` (default 3).
pub fn export_tables(kind: TableKind, p: &CheckParams) -> Result<Vec<TableRow>> {
    let n = p.n.unwrap_or(2);
    let spread = p.spread_or(1);
    let mut rows: Vec<TableRow> = match kind {
        TableKind::F => {
            let triples = f_triples(n, p.r.unwrap_or(2), spread.max(1))?;
            let vals: Vec<_> = triples.par_iter().map(|(a, b, c)| compute_f(a, b, c)).collect::<Result<_>>()?;
            triples
                .iter()
                .zip(vals)
                .filter(|(_, f)| !f.is_zero())
                .map(|((a, b, c), f)| row("f", n, b.sigma(), c.sigma(), [a, b, c], f.to_string(), None))
                .collect()
        }
        TableKind::G => {
            let r = p.r.unwrap_or(2);
            let jobs: Vec<_> = enumerate_theta(n, r, spread).into_iter().flat_map(|a| p.splits(r).into_iter().map(move |rp| (a.clone(), rp))).collect();
            let per: Vec<Vec<TableRow>> = jobs
                .par_iter()
                .map(|(a, rp)| -> Result<Vec<TableRow>> {
                    Ok(delta_theta(a, *rp)?.iter().map(|((b, c), g)| row("g", n, *rp, r - rp, [a, b, c], g.to_string(), None)).collect())
                })
                .collect::<Result<_>>()?;
            per.into_iter().flatten().collect()
        }
        TableKind::H => {
            let max_r = p.r.unwrap_or(3);
            let mut jobs = Vec::new();
            for s in 0..=max_r {
                for a in enumerate_theta(n, s, spread).into_iter().filter(|a| a.in_sy()) {
                    for m in 0..=(max_r - s) / n {
                        for rp in p.splits(s + m * n) {
                            jobs.push((a.clone(), m, rp));
                        }
                    }
                }
            }
            let per: Vec<Vec<TableRow>> = jobs
                .par_iter()
                .map(|(a, m, rp)| -> Result<Vec<TableRow>> {
                    let am = a.add_diag(&ZVector::new(vec![*m as i64; n]))?;
                    let rpp = am.sigma() - rp;
                    Ok(delta_theta(&am, *rp)?
                        .iter()
                        .filter(|((b, c), _)| b.in_sy() && c.in_sy())
                        .map(|((b, c), h)| row("h", n, *rp, rpp, [a, b, c], h.to_string(), Some(*m)))
                        .collect())
                })
                .collect::<Result<_>>()?;
            per.into_iter().flatten().collect()
        }
    };
    rows.sort();
    rows.dedup();
    Ok(rows)
}

/// Writes rows as `json` (an array of records) or `csv`.
pub fn write_tables<W: Write>(rows: &[TableRow], format: &str, out: W) -> Result<()> {
    let io = |e: std::io::Error| Error::InvalidInput(format!("write failed: {e}"));
    match format {
        "json" => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, rows).map_err(|e| Error::InvalidInput(e.to_string()))?;
            writeln!(out).map_err(io)
        }
        "csv" => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["kind", "n", "N", "r'", "r''", "A", "B", "C", "value"]).map_err(|e| Error::InvalidInput(e.to_string()))?;
            for r in rows {
                let big = r.big_n.map(|x| x.to_string()).unwrap_or_default();
                let rec = [r.kind.to_string(), r.n.to_string(), big, r.rp.to_string(), r.rpp.to_string(), r.a.clone(), r.b.clone(), r.c.clone(), r.value.clone()];
                w.write_record(&rec).map_err(|e| Error::InvalidInput(e.to_string()))?;
            }
            w.flush().map_err(io)
        }
        other => Err(Error::InvalidInput(format!("unknown format `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_table_contains_divided_power_value() {
        let p = CheckParams { n: Some(2), r: Some(2), spread: Some(1), ..Default::default() };
        let rows = export_tables(TableKind::F, &p).unwrap();
        let two = PeriodicMatrix::unit(2, 1, 2).scale(2).compact();
        let one = PeriodicMatrix::unit(2, 1, 2).compact();
        assert!(rows.iter().any(|r| r.a == two && r.b == one && r.c == one && r.value == "v"));
    }

    #[test]
    fn g_table_has_two_term_row() {
        let p = CheckParams { n: Some(2), r: Some(2), rp: Some(1), rpp: Some(1), spread: Some(1), ..Default::default() };
        let rows = export_tables(TableKind::G, &p).unwrap();
        let a = PeriodicMatrix::unit(2, 1, 1).add(&PeriodicMatrix::unit(2, 1, 2)).unwrap().compact();
        assert_eq!(rows.iter().filter(|r| r.a == a).count(), 2);
        let mut buf = Vec::new();
        write_tables(&rows, "csv", &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("kind,n,N,r',r'',A,B,C,value\n"));
    }

    #[test]
    fn h_rows_carry_m() {
        let p = CheckParams { n: Some(2), r: Some(2), ..Default::default() };
        let rows = export_tables(TableKind::H, &p).unwrap();
        assert!(rows.iter().all(|r| r.m.is_some()));
        let mut buf = Vec::new();
        write_tables(&rows, "json", &mut buf).unwrap();
        let parsed: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert!(parsed.as_array().unwrap().iter().all(|r| r.get("m").is_some() && r["kind"] == "h"));
    }

    #[test]
    fn empty_window_gives_empty_table() {
        let p = CheckParams { n: Some(2), r: Some(2), rp: Some(3), ..Default::default() };
        assert!(export_tables(TableKind::G, &p).unwrap().is_empty());
    }
}
