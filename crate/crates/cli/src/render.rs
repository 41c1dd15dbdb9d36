use std::io::{self, Write};

use qpolyber::families::{FamilyId, FamilyValue};
use serde_json::json;

use crate::{Failure, TableFormat};

pub struct Table {
    family: FamilyId,
    ks: Vec<i64>,
    /// Row-major, one row per `n`.
    rows: Vec<Vec<FamilyValue>>,
}

impl Table {
    pub fn compute(family: FamilyId, max_n: usize, max_k: usize) -> Result<Self, Failure> {
        let kk = max_k as i64;
        let ks: Vec<i64> = if family.signed_k() { (-kk..=kk).collect() } else { (0..=kk).collect() };
        let rows = (0..=max_n)
            .map(|n| ks.iter().map(|&k| family.value(n, k)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Table { family, ks, rows })
    }

    pub fn write(&self, out: &mut impl Write, format: TableFormat) -> Result<(), Failure> {
        match format {
            TableFormat::Json => self.json(out)?,
            TableFormat::Csv => self.csv(out)?,
            TableFormat::Latex => self.latex(out)?,
        }
        out.flush()?;
        Ok(())
    }

    fn json(&self, out: &mut impl Write) -> io::Result<()> {
        let cells: Vec<_> = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(n, row)| self.ks.iter().zip(row).map(move |(k, v)| json!({ "n": n, "k": k, "value": v })))
            .collect();
        let doc = json!({ "family": self.family.name(), "cells": cells });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))
    }

    fn csv(&self, out: &mut impl Write) -> Result<(), Failure> {
        let mut w = csv::Writer::from_writer(out);
        let csv_err = |e: csv::Error| Failure::Runtime(e.to_string());
        let header = std::iter::once("n\\k".to_string()).chain(self.ks.iter().map(|k| k.to_string()));
        w.write_record(header).map_err(csv_err)?;
        for (n, row) in self.rows.iter().enumerate() {
            let record = std::iter::once(n.to_string()).chain(row.iter().map(|v| v.to_string()));
            w.write_record(record).map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }

    fn latex(&self, out: &mut impl Write) -> io::Result<()> {
        writeln!(out, "\\begin{{tabular}}{{r|{}}}", "c".repeat(self.ks.len()))?;
        let header: Vec<String> = self.ks.iter().map(|k| format!("${k}$")).collect();
        writeln!(out, "$n \\backslash k$ & {} \\\\", header.join(" & "))?;
        writeln!(out, "\\hline")?;
        for (n, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|v| format!("${}$", latex_value(v))).collect();
            writeln!(out, "{n} & {} \\\\", cells.join(" & "))?;
        }
        writeln!(out, "\\end{{tabular}}")
    }
}

fn latex_value(v: &FamilyValue) -> String {
    let s = v.to_string();
    // q^12 -> q^{12}; fractions stay inline
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == '^' {
            out.push('{');
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() || d == '-' {
                    out.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            out.push('}');
        }
    }
    out
}
