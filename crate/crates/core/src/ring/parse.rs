//! Text syntax for polynomials: terms joined by `+`/`-`, decimal integer
//! coefficients, variables `x0`..`x4`, `^` for powers, `*` optional.
//! Printing is canonical so that print -> parse -> print round-trips exactly.

use super::field::Fp;
use super::monomial::Monomial;
use super::poly::Poly;
use crate::{Error, Result, NVARS};

pub fn parse_poly(fp: Fp, s: &str) -> Result<Poly> {
    let bytes = s.as_bytes();
    let mut i = 0usize;
    let mut pairs: Vec<(Monomial, u64)> = Vec::new();
    let mut first = true;
    loop {
        skip_ws(bytes, &mut i);
        if i >= bytes.len() {
            break;
        }
        let negative = match bytes[i] {
            b'+' => {
                i += 1;
                false
            }
            b'-' => {
                i += 1;
                true
            }
            _ if first => false,
            c => {
                return Err(Error::Parse(format!(
                    "expected '+' or '-' before term, found {:?} at byte {}",
                    c as char, i
                )))
            }
        };
        first = false;
        skip_ws(bytes, &mut i);
        let (m, c) = parse_term(fp, bytes, &mut i)?;
        let c = if negative { fp.neg(c) } else { c };
        pairs.push((m, c));
    }
    if pairs.is_empty() {
        return Err(Error::Parse("empty polynomial text".into()));
    }
    Ok(Poly::from_pairs(fp, pairs))
}

fn parse_term(fp: Fp, b: &[u8], i: &mut usize) -> Result<(Monomial, u64)> {
    let mut coeff: u64 = 1;
    let mut exps = [0u8; NVARS];
    let mut saw_anything = false;
    loop {
        skip_ws(b, i);
        if *i >= b.len() {
            break;
        }
        match b[*i] {
            b'0'..=b'9' => {
                let v = parse_uint(b, i)?;
                coeff = fp.mul(coeff, v % fp.modulus());
                saw_anything = true;
            }
            b'x' | b'X' => {
                *i += 1;
                if *i >= b.len() || !b[*i].is_ascii_digit() {
                    return Err(Error::Parse("variable index missing after 'x'".into()));
                }
                let v = (b[*i] - b'0') as usize;
                *i += 1;
                if v >= NVARS {
                    return Err(Error::Parse(format!("unknown variable x{}", v)));
                }
                let mut e: u32 = 1;
                skip_ws(b, i);
                if *i < b.len() && b[*i] == b'^' {
                    *i += 1;
                    skip_ws(b, i);
                    e = parse_uint(b, i)? as u32;
                }
                let tot = exps[v] as u32 + e;
                if tot > 255 {
                    return Err(Error::Parse("exponent too large".into()));
                }
                exps[v] = tot as u8;
                saw_anything = true;
            }
            b'*' => {
                *i += 1;
            }
            b'+' | b'-' => break,
            c => {
                return Err(Error::Parse(format!(
                    "unexpected character {:?} at byte {}",
                    c as char, *i
                )))
            }
        }
    }
    if !saw_anything {
        return Err(Error::Parse("empty term".into()));
    }
    Ok((Monomial::from_exps(exps), coeff))
}

fn parse_uint(b: &[u8], i: &mut usize) -> Result<u64> {
    let start = *i;
    let mut v: u64 = 0;
    while *i < b.len() && b[*i].is_ascii_digit() {
        v = v
            .checked_mul(10)
            .and_then(|x| x.checked_add((b[*i] - b'0') as u64))
            .ok_or_else(|| Error::Parse("integer literal overflow".into()))?;
        *i += 1;
    }
    if *i == start {
        return Err(Error::Parse("expected integer".into()));
    }
    Ok(v)
}

fn skip_ws(b: &[u8], i: &mut usize) {
    while *i < b.len() && (b[*i] == b' ' || b[*i] == b'\t') {
        *i += 1;
    }
}

/// Canonical printing: descending grevlex, coefficients printed with minimal
/// magnitude (c <= p/2 as "+ c", otherwise "- (p-c)").
pub fn poly_to_string(fp: Fp, f: &Poly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let half = fp.modulus() / 2;
    let mut out = String::new();
    for (k, t) in f.terms.iter().enumerate() {
        let (neg, mag) = if t.c > half {
            (true, fp.modulus() - t.c)
        } else {
            (false, t.c)
        };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let e = t.m.exps();
        let is_const = e.iter().all(|&x| x == 0);
        if mag != 1 || is_const {
            out.push_str(&mag.to_string());
            if !is_const {
                out.push('*');
            }
        }
        let mut first = true;
        for (v, &ev) in e.iter().enumerate() {
            if ev == 0 {
                continue;
            }
            if !first {
                out.push('*');
            }
            first = false;
            out.push('x');
            out.push_str(&v.to_string());
            if ev > 1 {
                out.push('^');
                out.push_str(&ev.to_string());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_PRIME;

    fn fp() -> Fp {
        Fp::new(DEFAULT_PRIME).unwrap()
    }

    #[test]
    fn parse_and_print_roundtrip() {
        let cases = [
            "x0^2 - x1*x2",
            "x0*x1",
            "x1^2*x2",
            "3*x0^2*x4 + 2*x3 - 1",
            "x4^3 - 15995*x0*x1*x2",
        ];
        for s in cases {
            let f = parse_poly(fp(), s).unwrap();
            let printed = poly_to_string(fp(), &f);
            let g = parse_poly(fp(), &printed).unwrap();
            assert_eq!(f, g, "roundtrip of {}", s);
            assert_eq!(printed, poly_to_string(fp(), &g));
        }
    }

    #[test]
    fn star_is_optional_and_coefficients_reduce() {
        let a = parse_poly(fp(), "2x0x1^2").unwrap();
        let b = parse_poly(fp(), "2*x0*x1^2").unwrap();
        assert_eq!(a, b);
        let c = parse_poly(fp(), "31992*x0").unwrap();
        assert_eq!(c, parse_poly(fp(), "x0").unwrap());
        let z = parse_poly(fp(), "x0 - x0").unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly(fp(), "x5").is_err());
        assert!(parse_poly(fp(), "x0 + + x1").is_err());
        assert!(parse_poly(fp(), "y0").is_err());
        assert!(parse_poly(fp(), "").is_err());
    }

    #[test]
    fn minimal_magnitude_printing() {
        let f = parse_poly(fp(), "x0 - x1").unwrap();
        assert_eq!(poly_to_string(fp(), &f), "x0 - x1");
        let g = parse_poly(fp(), "0 - x1").unwrap();
        assert_eq!(poly_to_string(fp(), &g), "-x1");
    }
}
