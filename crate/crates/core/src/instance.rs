//! Text instance format.
//!
//! ```text
//! tg <dim> <n>
//! <x> <r>          # 1D, n lines
//! <x> <y> <r>      # 2D, n lines
//! ```
//!
//! Values are plain decimals with at most six fractional digits and magnitude
//! below 2^20. `#` starts a comment. Radii are pre-normalization values.
//! The canonical emitted form trims trailing fractional zeros.

use crate::error::{Error, Result};
use crate::point_set::{PointSet, RawPoint, MAX_MICROS, MICROS_PER_UNIT};

const FRACTION_DIGITS: usize = 6;

/// Parses a decimal into micro-units exactly.
pub fn parse_decimal(s: &str) -> std::result::Result<i64, String> {
    let (neg, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(format!("`{s}` is not a number"));
    }
    if !int.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("`{s}` is not a plain decimal"));
    }
    if frac.len() > FRACTION_DIGITS {
        return Err(format!(
            "`{s}` has more than {FRACTION_DIGITS} fractional digits"
        ));
    }
    let int = int.trim_start_matches('0');
    if int.len() > 8 {
        return Err(format!("`{s}` is out of range"));
    }
    let int: i64 = if int.is_empty() {
        0
    } else {
        int.parse().unwrap()
    };
    let mut f: i64 = if frac.is_empty() {
        0
    } else {
        frac.parse().unwrap()
    };
    for _ in frac.len()..FRACTION_DIGITS {
        f *= 10;
    }
    let v = int * MICROS_PER_UNIT + f;
    if v >= MAX_MICROS {
        return Err(format!("`{s}` is out of range (|v| < 2^20)"));
    }
    Ok(if neg { -v } else { v })
}

/// Canonical decimal rendering of a micro-unit value.
pub fn format_micros(v: i64) -> String {
    let sign = if v < 0 { "-" } else { "" };
    let a = v.unsigned_abs();
    let int = a / MICROS_PER_UNIT as u64;
    let frac = a % MICROS_PER_UNIT as u64;
    if frac == 0 {
        format!("{sign}{int}")
    } else {
        let digits = format!("{frac:06}");
        format!("{sign}{int}.{}", digits.trim_end_matches('0'))
    }
}

pub fn parse_instance(text: &str) -> Result<PointSet> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, msg: String| Error::Parse { line, msg };

    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing header".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 || fields[0] != "tg" {
        return Err(err(hline, "expected header `tg <dim> <n>`".into()));
    }
    let dim: usize = fields[1]
        .parse()
        .ok()
        .filter(|d| *d == 1 || *d == 2)
        .ok_or_else(|| err(hline, format!("dimension `{}` must be 1 or 2", fields[1])))?;
    let n: usize = fields[2]
        .parse()
        .map_err(|_| err(hline, format!("bad point count `{}`", fields[2])))?;

    let mut raw: Vec<(RawPoint, i64)> = Vec::with_capacity(n);
    for (line, body) in lines {
        if raw.len() == n {
            return Err(err(line, format!("more than {n} point lines")));
        }
        let vals = body
            .split_whitespace()
            .map(parse_decimal)
            .collect::<std::result::Result<Vec<i64>, String>>()
            .map_err(|m| err(line, m))?;
        if vals.len() != dim + 1 {
            return Err(err(
                line,
                format!("expected {} values, found {}", dim + 1, vals.len()),
            ));
        }
        let r = vals[dim];
        if r <= 0 {
            return Err(err(line, "radius must be positive".into()));
        }
        let p = if dim == 1 {
            [vals[0], 0]
        } else {
            [vals[0], vals[1]]
        };
        raw.push((p, r));
    }
    if raw.len() != n {
        return Err(err(
            text.lines().count().max(1),
            format!("expected {n} point lines, found {}", raw.len()),
        ));
    }
    PointSet::from_micros(dim, raw)
}

/// Canonical text form of a point set.
pub fn emit_instance(ps: &PointSet) -> String {
    let mut out = format!("tg {} {}\n", ps.dim(), ps.len());
    for (p, r) in ps.raw_points() {
        if ps.dim() == 1 {
            out.push_str(&format!("{} {}\n", format_micros(p[0]), format_micros(r)));
        } else {
            out.push_str(&format!(
                "{} {} {}\n",
                format_micros(p[0]),
                format_micros(p[1]),
                format_micros(r)
            ));
        }
    }
    out
}
