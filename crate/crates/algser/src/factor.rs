//! Exhaustive bidegree-bounded factorization over finite fields.
//!
//! `trial_factor` searches candidate factors directly. Completeness rests on
//! two exact facts about `k[x][T]` over a field: `T`-degrees and heights are
//! both additive under multiplication, and the leading `T`-coefficient of a
//! factor divides the leading `T`-coefficient of the product in `k[x]`. So
//! every candidate has `T`-degree `d1` with `1 <= d1 < deg_T(P)`, height at
//! most `height(P)`, and a leading coefficient drawn from the monic divisors
//! of `lc_T(P)`. Candidates are normalized (leading coefficient of the
//! leading `T`-coefficient equal to 1) to avoid unit-multiple duplicates.

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::unipoly::UniPoly;

/// All monic polynomials of degree at most `max_deg` dividing `a`, in a
/// deterministic order (degree, then coefficient grid).
fn monic_divisors(a: &UniPoly, max_deg: usize) -> Vec<UniPoly> {
    let field = a.field();
    let elements = field.elements().expect("finite field");
    let mut out = Vec::new();
    let bound = a.degree().unwrap_or(0).min(max_deg);
    for deg in 0..=bound {
        // monic candidates of exact degree `deg`
        let mut digits = vec![0usize; deg];
        loop {
            let mut coeffs: Vec<Scalar> = digits.iter().map(|&d| elements[d].clone()).collect();
            coeffs.push(field.one());
            let cand = UniPoly::from_coeffs(field, coeffs);
            if a.div_exact(&cand).is_some() {
                out.push(cand);
            }
            if !increment(&mut digits, elements.len()) {
                break;
            }
        }
    }
    out
}

/// Base-`q` counter increment; returns false on wrap-around.
fn increment(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Splits a primitive, nonconstant `P` over a finite field into two
/// nonconstant factors if any exist; `None` means `P` is irreducible.
///
/// The search is deterministic, so the returned factorization is reproducible.
pub fn trial_factor(p: &BiPoly) -> Result<Option<(BiPoly, BiPoly)>> {
    let field = p.field();
    if !field.is_finite() {
        return Err(Error::FieldNotFinite);
    }
    assert!(!p.is_constant(), "trial_factor needs a nonconstant input");
    debug_assert!(p.is_primitive(), "trial_factor needs a primitive input");
    let d = p.t_degree().expect("nonzero");
    let h = p.height().unwrap_or(0);
    if d < 2 {
        // A primitive polynomial of T-degree 1 (or a primitive element of
        // k[x], which is a unit times an irreducible) cannot split.
        return Ok(None);
    }
    let elements = field.elements()?;
    let lc_divs = monic_divisors(&p.t_coeff(d), h);
    for d1 in 1..d {
        for lc in &lc_divs {
            // free rows: coefficients of T^0..T^(d1-1), each of x-degree <= h
            let cells = d1 * (h + 1);
            let mut digits = vec![0usize; cells];
            loop {
                let mut rows: Vec<UniPoly> = Vec::with_capacity(d1 + 1);
                for r in 0..d1 {
                    let coeffs = digits[r * (h + 1)..(r + 1) * (h + 1)]
                        .iter()
                        .map(|&k| elements[k].clone())
                        .collect();
                    rows.push(UniPoly::from_coeffs(field, coeffs));
                }
                rows.push(lc.clone());
                let cand = BiPoly::from_t_coeffs(field, rows);
                if let Some(quot) = p.div_exact(&cand) {
                    if !quot.is_constant() {
                        return Ok(Some((cand, quot)));
                    }
                }
                if !increment(&mut digits, elements.len()) {
                    break;
                }
            }
        }
    }
    Ok(None)
}

/// Irreducibility in `k[x, T]` for nonconstant `P` with `deg_T(P) >= 1` over
/// a finite field: a nontrivial content is itself a factorization.
pub fn is_irreducible_finite(p: &BiPoly) -> Result<bool> {
    if !p.field().is_finite() {
        return Err(Error::FieldNotFinite);
    }
    assert!(p.t_degree() >= Some(1));
    let (content, prim) = p.content_x();
    if content.degree() != Some(0) {
        return Ok(false);
    }
    Ok(trial_factor(&prim)?.is_none())
}
