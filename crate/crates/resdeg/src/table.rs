//! Table reproduction for real cyclotomic fields.

use std::fmt::Write as _;

use rayon::prelude::*;
use resdeg_core::arith::euler_phi;
use resdeg_core::criteria::{check_cmain, cmain_maximal_f, RCertificate};
use serde::{Deserialize, Serialize};

use crate::data::FieldRecord;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub ell: u64,
    pub h: u64,
    pub phi: u64,
    /// Certified residue degrees above 1, ascending.
    pub r: Vec<u64>,
    pub certificates: Vec<RCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowError {
    pub ell: u64,
    pub message: String,
}

/// The columns that survive a TSV or JSON round trip.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowSummary {
    pub ell: u64,
    pub h: u64,
    pub phi: u64,
    pub r: Vec<u64>,
}

impl TableRow {
    pub fn summary(&self) -> RowSummary {
        RowSummary { ell: self.ell, h: self.h, phi: self.phi, r: self.r.clone() }
    }
}

fn row(rec: &FieldRecord) -> Result<TableRow, RowError> {
    let err = |e: resdeg_core::Error| RowError { ell: rec.ell, message: e.to_string() };
    let field = rec.real_plus_field().map_err(err)?;
    let cert = check_cmain(&field, cmain_maximal_f(&field)).map_err(err)?;
    Ok(TableRow { ell: rec.ell, h: rec.h, phi: euler_phi(rec.h), r: cert.nontrivial(), certificates: vec![cert] })
}

/// One row per record, ordered by `ℓ`; failures are returned in place.
pub fn reproduce_table(records: &[FieldRecord]) -> Vec<Result<TableRow, RowError>> {
    let mut rows: Vec<Result<TableRow, RowError>> = records.par_iter().map(row).collect();
    rows.sort_by_key(|r| match r {
        Ok(row) => row.ell,
        Err(e) => e.ell,
    });
    rows
}

pub const TSV_HEADER: &str = "ell\th\tphi(h)\tR";

fn join(r: &[u64]) -> String {
    if r.is_empty() {
        "-".into()
    } else {
        r.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
    }
}

pub fn to_tsv(rows: &[RowSummary]) -> String {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(out, "{}\t{}\t{}\t{}", r.ell, r.h, r.phi, join(&r.r));
    }
    out
}

pub fn to_json_lines(rows: &[TableRow]) -> serde_json::Result<String> {
    let mut out = String::new();
    for r in rows {
        out.push_str(&serde_json::to_string(r)?);
        out.push('\n');
    }
    Ok(out)
}

/// Inverse of [`to_tsv`].
pub fn parse_tsv(text: &str) -> Result<Vec<RowSummary>, String> {
    let mut lines = text.lines();
    if lines.next() != Some(TSV_HEADER) {
        return Err("missing table header".into());
    }
    lines
        .enumerate()
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| {
            let cols: Vec<&str> = l.split('\t').collect();
            let num = |s: &str| s.trim().parse::<u64>().map_err(|e| format!("line {}: {e}", i + 2));
            if cols.len() != 4 {
                return Err(format!("line {}: expected 4 columns", i + 2));
            }
            let r = if cols[3] == "-" {
                Vec::new()
            } else {
                cols[3].split(',').map(num).collect::<Result<_, _>>()?
            };
            Ok(RowSummary { ell: num(cols[0])?, h: num(cols[1])?, phi: num(cols[2])?, r })
        })
        .collect()
}
