//! The polynomial text grammar: terms `c`, `x^i`, `T^j`, `c*x^i*T^j` joined
//! by `+`/`-`, with rational coefficients written `p/q`.
//!
//! Printing is deterministic (terms by `T`-degree descending, then
//! `x`-degree ascending) and everything printed re-parses to an equal value.
//! Series are printed in ascending powers with an explicit `+ O(x^N)` tail
//! so the precision is never ambiguous.

use std::collections::BTreeMap;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::field::{is_display_nonnegative, Field, Scalar};
use crate::series::SeriesTrunc;
use crate::unipoly::UniPoly;

/// A signed monomial: coefficient times a product of named variables.
pub(crate) type Monomial = (Scalar, BTreeMap<String, usize>);

/// Parses a sum of monomials in arbitrary named variables.
pub(crate) fn parse_monomials(input: &str, field: Field) -> Result<Vec<Monomial>> {
    let s: String = input.replace('\u{2212}', "-"); // unicode minus
    let bytes: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out: Vec<Monomial> = Vec::new();
    let err = |msg: &str| Error::Parse(format!("{msg} in `{input}`"));

    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_whitespace() {
            *i += 1;
        }
    };

    skip_ws(&mut i);
    if i == bytes.len() {
        return Err(err("empty polynomial"));
    }
    while i < bytes.len() {
        // sign
        let mut negative = false;
        if bytes[i] == '+' || bytes[i] == '-' {
            negative = bytes[i] == '-';
            i += 1;
            skip_ws(&mut i);
        } else if !out.is_empty() {
            return Err(err("expected `+` or `-` between terms"));
        }
        // one term: factors separated by optional `*`
        let mut coeff = field.one();
        let mut vars: BTreeMap<String, usize> = BTreeMap::new();
        let mut saw_factor = false;
        loop {
            skip_ws(&mut i);
            if i >= bytes.len() || bytes[i] == '+' || bytes[i] == '-' {
                break;
            }
            if bytes[i] == '*' {
                if !saw_factor {
                    return Err(err("unexpected `*`"));
                }
                i += 1;
                skip_ws(&mut i);
                continue;
            }
            if bytes[i].is_ascii_digit() {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == '/' {
                    i += 1;
                    if i >= bytes.len() || !bytes[i].is_ascii_digit() {
                        return Err(err("malformed rational"));
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                let lit: String = bytes[start..i].iter().collect();
                coeff = coeff.mul(&field.parse_scalar(&lit)?);
                saw_factor = true;
            } else if bytes[i].is_ascii_alphabetic() {
                let start = i;
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let name: String = bytes[start..i].iter().collect();
                let mut exp = 1usize;
                if i < bytes.len() && bytes[i] == '^' {
                    i += 1;
                    let estart = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if estart == i {
                        return Err(err("missing exponent after `^`"));
                    }
                    let lit: String = bytes[estart..i].iter().collect();
                    exp = lit.parse().map_err(|_| err("exponent overflow"))?;
                }
                *vars.entry(name).or_insert(0) += exp;
                saw_factor = true;
            } else {
                return Err(err(&format!("unexpected character `{}`", bytes[i])));
            }
        }
        if !saw_factor {
            return Err(err("empty term"));
        }
        if negative {
            coeff = coeff.neg();
        }
        out.push((coeff, vars));
    }
    Ok(out)
}

/// Parses a bivariate polynomial in `x` and `T`.
pub fn parse_bipoly(input: &str, field: Field) -> Result<BiPoly> {
    let monomials = parse_monomials(input, field)?;
    let mut acc = BiPoly::zero(field);
    for (coeff, vars) in monomials {
        let mut i = 0usize;
        let mut j = 0usize;
        for (name, exp) in &vars {
            match name.as_str() {
                "x" => i += exp,
                "T" => j += exp,
                other => {
                    return Err(Error::Parse(format!(
                        "unknown variable `{other}` (expected x, T) in `{input}`"
                    )))
                }
            }
        }
        let mut grid = vec![vec![]; j + 1];
        grid[j] = vec![field.zero(); i + 1];
        grid[j][i] = coeff;
        acc = acc.add(&BiPoly::from_grid(field, grid));
    }
    Ok(acc)
}

/// Parses a univariate polynomial in `x`.
pub fn parse_unipoly(input: &str, field: Field) -> Result<UniPoly> {
    let p = parse_bipoly(input, field)?;
    if p.t_degree() > Some(0) {
        return Err(Error::Parse(format!("`{input}` involves T")));
    }
    Ok(p.t_coeff(0))
}

fn push_term(out: &mut String, coeff: &Scalar, body: &str) {
    let (sign_needed, magnitude) = if is_display_nonnegative(coeff) {
        (false, coeff.clone())
    } else {
        (true, coeff.neg())
    };
    if out.is_empty() {
        if sign_needed {
            out.push('-');
        }
    } else if sign_needed {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    if body.is_empty() {
        out.push_str(&magnitude.to_string());
    } else if magnitude.is_one() {
        out.push_str(body);
    } else {
        out.push_str(&format!("{magnitude}*{body}"));
    }
}

fn power(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

fn body_xt(i: usize, j: usize) -> String {
    let xs = power("x", i);
    let ts = power("T", j);
    match (xs.is_empty(), ts.is_empty()) {
        (true, true) => String::new(),
        (false, true) => xs,
        (true, false) => ts,
        (false, false) => format!("{xs}*{ts}"),
    }
}

pub fn render_bipoly(p: &BiPoly) -> String {
    let Some(d) = p.t_degree() else {
        return "0".to_string();
    };
    let mut out = String::new();
    for j in (0..=d).rev() {
        let c = p.t_coeff(j);
        for (i, a) in c.coeffs().iter().enumerate() {
            if !a.is_zero() {
                push_term(&mut out, a, &body_xt(i, j));
            }
        }
    }
    out
}

pub fn render_unipoly(a: &UniPoly) -> String {
    if a.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in a.coeffs().iter().enumerate() {
        if !c.is_zero() {
            push_term(&mut out, c, &power("x", i));
        }
    }
    out
}

pub fn render_series(f: &SeriesTrunc) -> String {
    let mut out = String::new();
    for (i, c) in f.coeffs().iter().enumerate() {
        if !c.is_zero() {
            push_term(&mut out, c, &power("x", i));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out.push_str(&format!(" + O(x^{})", f.precision()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn parse_examples() {
        let p = parse_bipoly("T^2 + T - x", q()).unwrap();
        assert_eq!(p.coeff(0, 2), q().one());
        assert_eq!(p.coeff(0, 1), q().one());
        assert_eq!(p.coeff(1, 0), q().from_i64(-1));

        let p = parse_bipoly("-1/2*x^2*T + 3", q()).unwrap();
        assert_eq!(p.coeff(2, 1), q().parse_scalar("-1/2").unwrap());
        assert_eq!(p.coeff(0, 0), q().from_i64(3));

        // implicit multiplication and repeated factors
        let p = parse_bipoly("2x*x*T^2", q()).unwrap();
        assert_eq!(p.coeff(2, 2), q().from_i64(2));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_bipoly("", q()).is_err());
        assert!(parse_bipoly("T +", q()).is_err());
        assert!(parse_bipoly("y^2", q()).is_err());
        assert!(parse_bipoly("T ^", q()).is_err());
        assert!(parse_bipoly("1/0", q()).is_err());
    }

    #[test]
    fn render_is_deterministic() {
        let p = parse_bipoly("T^2 + T - x", q()).unwrap();
        assert_eq!(render_bipoly(&p), "T^2 + T - x");
        let p = parse_bipoly("x*T - x*T + T", q()).unwrap();
        assert_eq!(render_bipoly(&p), "T");
        assert_eq!(render_bipoly(&BiPoly::zero(q())), "0");
    }

    #[test]
    fn render_series_marker() {
        let f = SeriesTrunc::from_coeffs(
            q(),
            vec![q().zero(), q().one(), q().from_i64(-1)],
            4,
        );
        assert_eq!(render_series(&f), "x - x^2 + O(x^4)");
        assert_eq!(render_series(&SeriesTrunc::zero(q(), 3)), "0 + O(x^3)");
    }

    #[test]
    fn fp_coefficients_render_canonically() {
        let f5 = Field::prime(5).unwrap();
        let p = parse_bipoly("T - x", f5).unwrap();
        // -1 = 4 mod 5
        assert_eq!(render_bipoly(&p), "T + 4*x");
        let back = parse_bipoly(&render_bipoly(&p), f5).unwrap();
        assert_eq!(back, p);
    }
}
