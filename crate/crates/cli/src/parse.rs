//! Parsers for point lists, ranges and key=value config files.

use std::collections::BTreeMap;

use xilab::Complex64;

/// Parses `0.5+14.13i`, `2`, `-3i`, `i`, `1e-3-2.5E2i`.
pub fn complex(text: &str) -> Result<Complex64, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("'{text}' is not a complex number");
    if s.is_empty() {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix(['i', 'j']) else {
        return real(&s).map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re_text, im_text) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let re = if re_text.is_empty() { 0.0 } else { re_text.parse::<f64>().map_err(|_| bad())? };
    let im = match im_text {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse::<f64>().map_err(|_| bad())?,
    };
    if !(re.is_finite() && im.is_finite()) {
        return Err(bad());
    }
    Ok(Complex64::new(re, im))
}

fn real(text: &str) -> Result<f64, String> {
    text.trim()
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| format!("'{text}' is not a finite number"))
}

/// Comma-separated list; errors name the 1-based position of the bad item.
pub fn list<T>(text: &str, item: impl Fn(&str) -> Result<T, String>) -> Result<Vec<T>, String> {
    text.split(',')
        .enumerate()
        .map(|(k, part)| item(part).map_err(|e| format!("item {} of '{text}': {e}", k + 1)))
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexList(pub Vec<Complex64>);

#[derive(Clone, Debug, PartialEq)]
pub struct RealList(pub Vec<f64>);

pub fn complex_list(text: &str) -> Result<ComplexList, String> {
    list(text, complex).map(ComplexList)
}

pub fn real_list(text: &str) -> Result<RealList, String> {
    list(text, real).map(RealList)
}

/// `lo:hi` or `lo:hi:step`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Range {
    pub lo: f64,
    pub hi: f64,
    pub step: Option<f64>,
}

impl Range {
    /// lo, lo + step, … up to and including hi (within rounding).
    pub fn points(&self, default_step: f64) -> Vec<f64> {
        let step = self.step.unwrap_or(default_step);
        let count = ((self.hi - self.lo) / step + 1e-9).floor() as usize;
        (0..=count).map(|k| self.lo + k as f64 * step).collect()
    }
}

pub fn range(text: &str) -> Result<Range, String> {
    let parts: Vec<&str> = text.split(':').collect();
    if !(2..=3).contains(&parts.len()) {
        return Err(format!("'{text}' is not lo:hi or lo:hi:step"));
    }
    let lo = real(parts[0])?;
    let hi = real(parts[1])?;
    let step = parts.get(2).map(|p| real(p)).transpose()?;
    if hi < lo {
        return Err(format!("range '{text}' is empty (hi < lo)"));
    }
    if let Some(step) = step {
        if !(step > 0.0) {
            return Err(format!("step in '{text}' must be positive"));
        }
    }
    Ok(Range { lo, hi, step })
}

/// Integer range `lo:hi`.
pub fn index_range(text: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = text.split_once(':').ok_or_else(|| format!("'{text}' is not lo:hi"))?;
    let parse = |p: &str| p.trim().parse::<i64>().map_err(|_| format!("'{p}' is not an integer"));
    let (lo, hi) = (parse(lo)?, parse(hi)?);
    if hi < lo {
        return Err(format!("range '{text}' is empty (hi < lo)"));
    }
    Ok((lo, hi))
}

/// `key = value` lines; `#` starts a comment.
pub fn config(text: &str) -> Result<BTreeMap<String, String>, String> {
    let mut out = BTreeMap::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key=value, got '{line}'", k + 1))?;
        out.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(out)
}
