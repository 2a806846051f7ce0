//! Text formats: cycle notation, origamis (`x=…; y=…; eps=…` or `mu=…; nu=…`), moduli lists,
//! integer matrices and group words. Positions in syntax errors are character offsets.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::origami::{from_xye, Origami, Sign, Xye};
use crate::perm::{Perm, SPerm};

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

/// Parses cycle notation into cycles of (possibly signed) integers. `()` and the empty string
/// denote the identity.
pub fn parse_cycles(text: &str, offset: usize) -> Result<Vec<Vec<i64>>> {
    let chars: Vec<char> = text.chars().collect();
    let mut cycles = Vec::new();
    let mut i = 0;
    let skip_ws = |i: &mut usize| {
        while *i < chars.len() && chars[*i].is_whitespace() {
            *i += 1;
        }
    };
    loop {
        skip_ws(&mut i);
        if i == chars.len() {
            break;
        }
        if chars[i] != '(' {
            return Err(syntax(offset + i, format!("expected '(', found '{}'", chars[i])));
        }
        i += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut i);
            match chars.get(i) {
                None => return Err(syntax(offset + i, "unterminated cycle")),
                Some(')') => {
                    i += 1;
                    break;
                }
                Some(',') => i += 1,
                Some(_) => {
                    let start = i;
                    if matches!(chars[i], '+' | '-') {
                        i += 1;
                    }
                    let digits_start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i == digits_start {
                        return Err(syntax(offset + start, "expected a number"));
                    }
                    let s: String = chars[start..i].iter().filter(|c| **c != '+').collect();
                    let v: i64 = s.parse().map_err(|_| syntax(offset + start, "number out of range"))?;
                    if v == 0 {
                        return Err(syntax(offset + start, "labels start at 1"));
                    }
                    cycle.push(v);
                }
            }
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
    }
    Ok(cycles)
}

fn max_label(cycles: &[Vec<i64>]) -> usize {
    cycles.iter().flatten().map(|v| v.unsigned_abs() as usize).max().unwrap_or(0)
}

/// A permutation of `{1..degree}` in cycle notation.
pub fn parse_perm(text: &str, degree: usize) -> Result<Perm> {
    let cycles = parse_cycles(text, 0)?;
    to_perm(&cycles, degree)
}

fn to_perm(cycles: &[Vec<i64>], degree: usize) -> Result<Perm> {
    if cycles.iter().flatten().any(|&v| v < 0) {
        return Err(Error::Validation("unsigned permutation expected".into()));
    }
    let c: Vec<Vec<usize>> = cycles.iter().map(|c| c.iter().map(|&v| v as usize - 1).collect()).collect();
    Perm::from_cycles(degree, &c)
}

/// A signed permutation of `{±1..±d}` in cycle notation.
pub fn parse_sperm(text: &str, d: usize) -> Result<SPerm> {
    SPerm::from_cycles(d, &parse_cycles(text, 0)?)
}

/// Splits `key=value; key=value` into trimmed keys and raw values with their offsets.
fn fields(text: &str) -> Result<Vec<(String, String, usize)>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(';') {
        let len = part.chars().count();
        if !part.trim().is_empty() {
            let Some(eq) = part.find('=') else {
                let lead = part.chars().take_while(|c| c.is_whitespace()).count();
                return Err(syntax(offset + lead, "expected key=value"));
            };
            let key = part[..eq].trim().to_string();
            let value_offset = offset + part[..=eq].chars().count();
            out.push((key, part[eq + 1..].to_string(), value_offset));
        }
        offset += len + 1;
    }
    Ok(out)
}

/// Parsed origami text in whichever encoding it was written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrigamiText {
    Xye(Xye),
    Gluings(Origami),
}

impl OrigamiText {
    pub fn into_origami(self) -> Result<Origami> {
        match self {
            OrigamiText::Xye(t) => from_xye(&t),
            OrigamiText::Gluings(o) => Ok(o),
        }
    }
}

pub fn parse_origami_text(text: &str) -> Result<OrigamiText> {
    let fs = fields(text)?;
    let get = |k: &str| fs.iter().find(|(key, _, _)| key == k);
    for (key, _, off) in &fs {
        if !["x", "y", "eps", "mu", "nu", "d"].contains(&key.as_str()) {
            return Err(syntax(*off, format!("unknown key '{key}'")));
        }
    }
    if let Some((_, eps_text, eps_off)) = get("eps") {
        let mut eps = Vec::new();
        for (k, c) in eps_text.chars().enumerate() {
            match c {
                '+' => eps.push(Sign::Plus),
                '-' => eps.push(Sign::Minus),
                c if c.is_whitespace() || c == ',' => {}
                _ => return Err(syntax(eps_off + k, format!("expected '+' or '-', found '{c}'"))),
            }
        }
        let d = eps.len();
        let perm = |k: &str| -> Result<Perm> {
            let (_, t, off) = get(k).ok_or_else(|| syntax(text.chars().count(), format!("missing {k}=")))?;
            let cycles = parse_cycles(t, *off)?;
            if max_label(&cycles) > d {
                return Err(Error::Validation(format!("{k} mentions a square beyond eps length {d}")));
            }
            to_perm(&cycles, d)
        };
        let x = perm("x")?;
        let y = perm("y")?;
        if d == 0 {
            return Err(Error::Validation("eps must list one sign per square".into()));
        }
        return Ok(OrigamiText::Xye(Xye { x, y, eps }));
    }
    let (Some((_, mu_t, mu_off)), Some((_, nu_t, nu_off))) = (get("mu"), get("nu")) else {
        return Err(syntax(0, "expected x=…; y=…; eps=… or mu=…; nu=…"));
    };
    let mu_c = parse_cycles(mu_t, *mu_off)?;
    let nu_c = parse_cycles(nu_t, *nu_off)?;
    let d = match get("d") {
        Some((_, t, off)) => t.trim().parse().map_err(|_| syntax(*off, "expected a degree"))?,
        None => max_label(&mu_c).max(max_label(&nu_c)),
    };
    let mu = SPerm::from_cycles(d, &mu_c)?;
    let nu = SPerm::from_cycles(d, &nu_c)?;
    Ok(OrigamiText::Gluings(Origami::new(mu, nu)?))
}

/// Parses either encoding and returns the origami.
pub fn parse_origami(text: &str) -> Result<Origami> {
    parse_origami_text(text)?.into_origami()
}

/// Comma-separated positive rationals such as `2/3,1,5/2`.
pub fn parse_rationals(text: &str) -> Result<Vec<BigRational>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        let t = part.trim();
        let lead = offset + part.chars().take_while(|c| c.is_whitespace()).count();
        let value = match t.split_once('/') {
            Some((a, b)) => {
                let a: BigInt = a.trim().parse().map_err(|_| syntax(lead, "expected a rational"))?;
                let b: BigInt = b.trim().parse().map_err(|_| syntax(lead, "expected a rational"))?;
                if b.is_zero() {
                    return Err(syntax(lead, "zero denominator"));
                }
                BigRational::new(a, b)
            }
            None => BigRational::from_integer(t.parse().map_err(|_| syntax(lead, "expected a rational"))?),
        };
        if !value.is_positive() {
            return Err(Error::Validation("moduli must be positive".into()));
        }
        out.push(value);
        offset += part.chars().count() + 1;
    }
    Ok(out)
}

/// `[[a,b],[c,d]]`, row-major.
pub fn parse_matrix(text: &str) -> Result<[[i64; 2]; 2]> {
    let nums: Vec<&str> = text
        .split(|c: char| c == '[' || c == ']' || c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    if nums.len() != 4 || !text.trim_start().starts_with('[') {
        return Err(syntax(0, "expected [[a,b],[c,d]]"));
    }
    let mut v = [0i64; 4];
    for (k, s) in nums.iter().enumerate() {
        v[k] = s.parse().map_err(|_| syntax(0, format!("bad matrix entry '{s}'")))?;
    }
    Ok([[v[0], v[1]], [v[2], v[3]]])
}
