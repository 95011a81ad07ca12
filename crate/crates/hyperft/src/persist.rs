//! On-disk form of a computed transform: a small header plus one CSV
//! coefficient block per branch. A stored transform can be reloaded and
//! evaluated at any number of frequencies without re-integrating anything.

use std::fmt::Write as _;
use std::path::Path;

use crate::confrac::ContinuedFraction;
use crate::error::Error;
use crate::numerics::{BigComplex, PrecisionContext};
use crate::transform::FourierHyperfunction;
use crate::Result;

const MAGIC: &str = "# hyperft transform v1";

/// Header fields carried alongside the coefficient blocks.
#[derive(Debug, Clone)]
pub struct TransformHeader {
    /// Registered function name or "custom".
    pub function: String,
    pub digits: u32,
    pub taylor_terms: usize,
    pub total_evals: usize,
}

/// Writes one continued-fraction coefficient block as CSV rows
/// `index,re,im` with full-precision decimal values.
pub fn write_cf_csv(cf: &ContinuedFraction, out: &mut String) {
    out.push_str("index,re,im\n");
    for (i, a) in cf.coefficients().iter().enumerate() {
        let _ = writeln!(
            out,
            "{},{},{}",
            i + 1,
            a.re.to_canonical_string(),
            a.im.to_canonical_string()
        );
    }
}

/// Parses a CSV coefficient block (header row plus `index,re,im` rows).
pub fn read_cf_csv(
    lines: &[&str],
    center: BigComplex,
    terminated: bool,
    ctx: &PrecisionContext,
) -> Result<ContinuedFraction> {
    let mut rows = lines.iter();
    match rows.next() {
        Some(h) if h.trim() == "index,re,im" => {}
        other => {
            return Err(Error::MalformedFile(format!(
                "expected coefficient header, got {other:?}"
            )))
        }
    }
    let mut a = Vec::new();
    for (i, line) in rows.enumerate() {
        let mut parts = line.trim().splitn(3, ',');
        let idx: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::MalformedFile(format!("bad coefficient row {line:?}")))?;
        if idx != i + 1 {
            return Err(Error::MalformedFile(format!(
                "coefficient indices out of order at row {idx}"
            )));
        }
        let re = parts
            .next()
            .ok_or_else(|| Error::MalformedFile(format!("bad coefficient row {line:?}")))?;
        let im = parts
            .next()
            .ok_or_else(|| Error::MalformedFile(format!("bad coefficient row {line:?}")))?;
        a.push(ctx.complex(ctx.parse_real(re)?, ctx.parse_real(im)?));
    }
    if a.is_empty() {
        return Err(Error::MalformedFile("empty coefficient block".into()));
    }
    Ok(ContinuedFraction::from_parts(center, a, terminated))
}

/// Renders a transform with its header to the persisted text form.
pub fn transform_to_string(fh: &FourierHyperfunction, header: &TransformHeader) -> String {
    let mut out = String::new();
    out.push_str(MAGIC);
    out.push('\n');
    let _ = writeln!(out, "function,{}", header.function);
    let _ = writeln!(out, "digits,{}", header.digits);
    let _ = writeln!(out, "taylor_terms,{}", header.taylor_terms);
    let _ = writeln!(out, "total_evals,{}", header.total_evals);
    let _ = writeln!(
        out,
        "center_plus,{}",
        fh.cf_plus().center().to_canonical_string()
    );
    let _ = writeln!(
        out,
        "center_minus,{}",
        fh.cf_minus().center().to_canonical_string()
    );
    let _ = writeln!(out, "terminated_plus,{}", fh.cf_plus().terminated());
    let _ = writeln!(out, "terminated_minus,{}", fh.cf_minus().terminated());
    out.push_str("[cf_plus]\n");
    write_cf_csv(fh.cf_plus(), &mut out);
    out.push_str("[cf_minus]\n");
    write_cf_csv(fh.cf_minus(), &mut out);
    out
}

fn header_field<'a>(lines: &mut impl Iterator<Item = &'a str>, key: &str) -> Result<String> {
    let line = lines
        .next()
        .ok_or_else(|| Error::MalformedFile(format!("missing {key} line")))?;
    let (k, v) = line
        .split_once(',')
        .ok_or_else(|| Error::MalformedFile(format!("bad {key} line {line:?}")))?;
    if k != key {
        return Err(Error::MalformedFile(format!(
            "expected {key}, found {k}"
        )));
    }
    Ok(v.trim().to_string())
}

/// Parses the persisted text form; the context is rebuilt from the stored
/// digit count so the round trip is value-exact.
pub fn transform_from_str(
    text: &str,
) -> Result<(FourierHyperfunction, TransformHeader, PrecisionContext)> {
    let mut lines = text.lines();
    match lines.next() {
        Some(l) if l.trim() == MAGIC => {}
        other => {
            return Err(Error::MalformedFile(format!(
                "missing file signature, got {other:?}"
            )))
        }
    }
    let function = header_field(&mut lines, "function")?;
    let digits: u32 = header_field(&mut lines, "digits")?
        .parse()
        .map_err(|_| Error::MalformedFile("bad digits value".into()))?;
    let taylor_terms: usize = header_field(&mut lines, "taylor_terms")?
        .parse()
        .map_err(|_| Error::MalformedFile("bad taylor_terms value".into()))?;
    let total_evals: usize = header_field(&mut lines, "total_evals")?
        .parse()
        .map_err(|_| Error::MalformedFile("bad total_evals value".into()))?;
    let ctx = PrecisionContext::new(digits)?;
    let center_plus = ctx.parse_complex(&header_field(&mut lines, "center_plus")?)?;
    let center_minus = ctx.parse_complex(&header_field(&mut lines, "center_minus")?)?;
    let term_plus: bool = header_field(&mut lines, "terminated_plus")?
        .parse()
        .map_err(|_| Error::MalformedFile("bad terminated_plus value".into()))?;
    let term_minus: bool = header_field(&mut lines, "terminated_minus")?
        .parse()
        .map_err(|_| Error::MalformedFile("bad terminated_minus value".into()))?;

    let rest: Vec<&str> = lines.collect();
    let plus_at = rest
        .iter()
        .position(|l| l.trim() == "[cf_plus]")
        .ok_or_else(|| Error::MalformedFile("missing [cf_plus] block".into()))?;
    let minus_at = rest
        .iter()
        .position(|l| l.trim() == "[cf_minus]")
        .ok_or_else(|| Error::MalformedFile("missing [cf_minus] block".into()))?;
    if minus_at <= plus_at {
        return Err(Error::MalformedFile("blocks out of order".into()));
    }
    let cf_plus = read_cf_csv(&rest[plus_at + 1..minus_at], center_plus, term_plus, &ctx)?;
    let cf_minus = read_cf_csv(&rest[minus_at + 1..], center_minus, term_minus, &ctx)?;

    let fh = FourierHyperfunction::from_parts(cf_plus, cf_minus, total_evals)?;
    Ok((
        fh,
        TransformHeader {
            function,
            digits,
            taylor_terms,
            total_evals,
        },
        ctx,
    ))
}

/// Saves a transform to a file.
pub fn save_transform(
    fh: &FourierHyperfunction,
    header: &TransformHeader,
    path: &Path,
) -> Result<()> {
    std::fs::write(path, transform_to_string(fh, header))?;
    Ok(())
}

/// Loads a transform from a file.
pub fn load_transform(
    path: &Path,
) -> Result<(FourierHyperfunction, TransformHeader, PrecisionContext)> {
    let text = std::fs::read_to_string(path)?;
    transform_from_str(&text)
}
