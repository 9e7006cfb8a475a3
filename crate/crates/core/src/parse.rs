//! Parsing of K-values written in the (1, ω) basis, e.g. `3`, `-w`, `2-3*w`, `(1+w)/2`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactnum::{FieldDesc, FieldElem, QuadInt};

fn parse_err(s: &str, why: &str) -> Error {
    Error::Parse(format!("{s:?}: {why}"))
}

fn parse_integral_body(body: &str, field: FieldDesc, orig: &str) -> Result<QuadInt> {
    let mut a = BigInt::from(0);
    let mut b = BigInt::from(0);
    let chars: Vec<char> = body.chars().collect();
    if chars.is_empty() {
        return Err(parse_err(orig, "empty"));
    }
    let mut i = 0;
    while i < chars.len() {
        let mut negative = false;
        while i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
            negative ^= chars[i] == '-';
            i += 1;
        }
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let digits: String = chars[start..i].iter().collect();
        let mut is_omega = false;
        if i < chars.len() && chars[i] == '*' {
            i += 1;
            if i < chars.len() && chars[i] == 'w' {
                is_omega = true;
                i += 1;
            } else {
                return Err(parse_err(orig, "expected w after *"));
            }
        } else if i < chars.len() && chars[i] == 'w' {
            is_omega = true;
            i += 1;
        }
        if digits.is_empty() && !is_omega {
            return Err(parse_err(orig, "expected a term"));
        }
        let mut coeff: BigInt = if digits.is_empty() {
            BigInt::from(1)
        } else {
            digits.parse().map_err(|_| parse_err(orig, "bad integer"))?
        };
        if negative {
            coeff = -coeff;
        }
        if is_omega {
            b += coeff;
        } else {
            a += coeff;
        }
        if i < chars.len() && chars[i] != '+' && chars[i] != '-' {
            return Err(parse_err(orig, "unexpected character"));
        }
    }
    Ok(QuadInt::new(a, b, field))
}

/// Parses an element of O_K (no denominator allowed).
pub fn parse_quadint(s: &str, field: FieldDesc) -> Result<QuadInt> {
    let body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if body.contains('/') {
        return Err(parse_err(s, "denominators are not allowed here"));
    }
    let body = body.trim_start_matches('(').trim_end_matches(')');
    parse_integral_body(body, field, s)
}

/// Parses an element of K written as `num` or `num/den`, num in the `a+b*w` syntax.
pub fn parse_field_elem(s: &str, field: FieldDesc) -> Result<FieldElem> {
    let body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (num, den) = match body.rsplit_once('/') {
        Some((n, d)) => {
            let den: BigInt = d.parse().map_err(|_| parse_err(s, "bad denominator"))?;
            if den == BigInt::from(0) {
                return Err(parse_err(s, "zero denominator"));
            }
            (n.to_string(), den)
        }
        None => (body.clone(), BigInt::from(1)),
    };
    let num = num.strip_prefix('(').and_then(|n| n.strip_suffix(')')).unwrap_or(&num);
    let q = parse_integral_body(num, field, s)?;
    Ok(FieldElem::from_quadint(&q).scale(&BigRational::new(1.into(), den)))
}

/// Parses a point written `z0,z1,z2` with integral coordinates.
pub fn parse_point_coords(s: &str, field: FieldDesc) -> Result<[QuadInt; 3]> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(parse_err(s, "expected three comma-separated coordinates"));
    }
    let mut out = Vec::with_capacity(3);
    for p in parts {
        out.push(parse_quadint(p, field)?);
    }
    Ok(out.try_into().expect("three coordinates"))
}
