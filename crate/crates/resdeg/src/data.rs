//! Class-number records.
//!
//! CSV with header `ell,h` followed by any of the optional columns `factors`,
//! `shape` and `source`. Group structures are written as cyclic orders joined
//! by `x`, e.g. `2x2` or `2 x 2 x 8`. A record with a `shape` describes the
//! full cyclotomic field of that (possibly composite) conductor with the given
//! Galois group; without one, `ell` must be prime.

use std::collections::BTreeSet;
use std::path::Path;

use resdeg_core::arith::is_prime;
use resdeg_core::criteria::{ClassData, FieldDescriptor, GaloisShape};
use resdeg_core::FiniteAbelianGroup;
use serde::Serialize;

#[derive(Debug, thiserror::Error)]
pub enum DataError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}: {message}")]
    Line { line: u64, message: String },
    #[error("missing required column `{0}`")]
    MissingColumn(&'static str),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldRecord {
    pub ell: u64,
    pub h: u64,
    /// Exact class group, when known.
    pub factors: Option<Vec<u64>>,
    /// Galois group of a full cyclotomic field with composite conductor.
    pub shape: Option<Vec<u64>>,
    pub source: String,
}

impl FieldRecord {
    fn class_data(&self) -> Result<ClassData, resdeg_core::Error> {
        match &self.factors {
            Some(f) if f.is_empty() => Ok(ClassData::Group(FiniteAbelianGroup::trivial())),
            Some(f) => Ok(ClassData::Group(FiniteAbelianGroup::new(f)?)),
            None => Ok(ClassData::Number(self.h)),
        }
    }

    /// The maximal real subfield `Q(ζ_ℓ)^+`.
    pub fn real_plus_field(&self) -> Result<FieldDescriptor, resdeg_core::Error> {
        FieldDescriptor::real_cyclotomic(self.ell, self.class_data()?)
    }

    /// The full cyclotomic field `Q(ζ_ℓ)`, with its recorded Galois shape if any.
    pub fn cyclotomic_field(&self) -> Result<FieldDescriptor, resdeg_core::Error> {
        let label = format!("Q(zeta_{})", self.ell);
        match &self.shape {
            Some(shape) => {
                let degree = shape.iter().product();
                FieldDescriptor::new(label, degree, GaloisShape::Abelian(shape.clone()), self.class_data()?)
            }
            None => FieldDescriptor::cyclic(label, self.ell - 1, self.class_data()?),
        }
    }
}

/// Parses `2x2x8`, `2 x 2 x 8` or `1` (the trivial group).
pub fn parse_factors(s: &str) -> Result<Vec<u64>, String> {
    let s = s.trim();
    if s == "1" {
        return Ok(Vec::new());
    }
    s.split(['x', 'X', '*'])
        .map(|part| {
            let part = part.trim();
            match part.parse::<u64>() {
                Ok(m) if m >= 2 => Ok(m),
                _ => Err(format!("bad cyclic factor `{part}` in `{s}`")),
            }
        })
        .collect()
}

pub fn load_records(path: &Path) -> Result<Vec<FieldRecord>, DataError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| DataError::Io { path: path.display().to_string(), source })?;
    parse_records(&text)
}

pub fn parse_records(text: &str) -> Result<Vec<FieldRecord>, DataError> {
    let mut rdr = csv::ReaderBuilder::new()
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let headers = rdr.headers()?.clone();
    let col = |name: &str| headers.iter().position(|h| h.eq_ignore_ascii_case(name));
    let ell_col = col("ell").ok_or(DataError::MissingColumn("ell"))?;
    let h_col = col("h").ok_or(DataError::MissingColumn("h"))?;
    let (factors_col, shape_col, source_col) = (col("factors"), col("shape"), col("source"));

    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec?;
        let line = rec.position().map_or(0, |p| p.line());
        let err = |message: String| DataError::Line { line, message };
        let field = |c: Option<usize>| c.and_then(|c| rec.get(c)).filter(|s| !s.is_empty());

        let ell: u64 = field(Some(ell_col))
            .ok_or_else(|| err("missing ell".into()))?
            .parse()
            .map_err(|e| err(format!("ell: {e}")))?;
        let h: u64 = field(Some(h_col))
            .ok_or_else(|| err("missing h".into()))?
            .parse()
            .map_err(|e| err(format!("h: {e}")))?;
        if h < 1 {
            return Err(err("class number must be at least 1".into()));
        }
        let factors = field(factors_col).map(parse_factors).transpose().map_err(err)?;
        if let Some(f) = &factors {
            let product: u64 = f.iter().product();
            if product != h {
                return Err(err(format!("factors multiply to {product}, not h = {h}")));
            }
        }
        let shape = field(shape_col).map(parse_factors).transpose().map_err(err)?;
        if shape.is_none() && !is_prime(ell) {
            return Err(err(format!("{ell} is not prime")));
        }
        if !seen.insert(ell) {
            return Err(err(format!("duplicate record for {ell}")));
        }
        out.push(FieldRecord { ell, h, factors, shape, source: field(source_col).unwrap_or("").to_string() });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        let r = parse_records("ell,h\n631,11\n").unwrap();
        assert_eq!(r[0].ell, 631);
        assert_eq!(r[0].h, 11);
        let r = parse_records("ell,h,factors\n163,4,2x2\n").unwrap();
        assert_eq!(r[0].factors, Some(vec![2, 2]));
        let r = parse_records("ell,h,factors,shape\n96,9,,2 x 2 x 8\n").unwrap();
        assert_eq!(r[0].shape, Some(vec![2, 2, 8]));
        assert_eq!(r[0].cyclotomic_field().unwrap().degree, 32);
    }

    #[test]
    fn rejections() {
        let e = parse_records("ell,h\n631,11\n10,3\n").unwrap_err().to_string();
        assert!(e.starts_with("line 3:") && e.contains("not prime"), "{e}");
        assert!(parse_records("ell,h\n7,0\n").is_err());
        assert!(parse_records("ell,h\n7,1\n7,1\n").unwrap_err().to_string().contains("duplicate"));
        assert!(parse_records("ell,h,factors\n163,4,3\n").is_err());
        assert!(matches!(parse_records("h\n3\n"), Err(DataError::MissingColumn("ell"))));
    }
}
