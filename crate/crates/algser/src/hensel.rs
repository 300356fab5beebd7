//! Root lifting for polynomials satisfying the implicit function theorem at
//! the origin: `P(0,0) = 0`, `dP/dT(0,0) != 0`. Such a polynomial has a
//! unique power-series root vanishing at 0, and both lifters below compute
//! its truncation deterministically.
//!
//! `hensel_lift` is the reference implementation: a term-by-term linear
//! solve. It maintains the coefficients of `P(x, f + T)` as truncated series
//! (a running Taylor shift), so the next coefficient of the root is read off
//! the constant `T`-coefficient and each step costs `O(d^2 N)` instead of a
//! full re-evaluation. `hensel_lift_newton` doubles precision per step; the
//! two agree exactly, which the tests exploit as a cross-check.

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::series::{bipoly_eval_series, SeriesTrunc};

/// True iff `a_{0,0} = 0` and `a_{0,1} != 0`.
pub fn ift_check(p: &BiPoly) -> bool {
    p.coeff(0, 0).is_zero() && !p.coeff(0, 1).is_zero()
}

/// The unique root of `P` vanishing at 0, modulo `x^n`, by a term-by-term
/// linear solve: the coefficient of `x^m` in `P(x, f)` is killed by
/// `f_m = -c_m / a_{0,1}` at each step.
pub fn hensel_lift(p: &BiPoly, n: usize) -> Result<SeriesTrunc> {
    if !ift_check(p) {
        return Err(Error::IftViolation);
    }
    assert!(n >= 1, "precision must be at least 1");
    let field = p.field();
    let d = p.t_degree().expect("nonzero by ift_check");
    // state[j][m]: coefficient of x^m in the T^j coefficient of P(x, f + T)
    let mut state: Vec<Vec<Scalar>> = (0..=d)
        .map(|j| {
            let c = p.t_coeff(j);
            (0..n).map(|m| c.coeff(m)).collect()
        })
        .collect();
    let inv = state[1][0].inv();
    let mut root = SeriesTrunc::zero(field, n);
    for m in 1..n {
        let c = state[0][m].clone();
        if c.is_zero() {
            continue;
        }
        let fm = c.neg().mul(&inv);
        root.set_coeff(m, fm.clone());
        // Taylor shift T -> fm * x^m + T via the synthetic cascade.
        for k in 0..d {
            for j in (k..d).rev() {
                for t in m..n {
                    let bump = state[j + 1][t - m].mul(&fm);
                    if !bump.is_zero() {
                        state[j][t] = state[j][t].add(&bump);
                    }
                }
            }
        }
        debug_assert!(state[0][..=m].iter().all(Scalar::is_zero));
    }
    Ok(root)
}

/// Newton doubling: at each step `f <- f - P(x,f) / P'(x,f)`, with the
/// working precision doubled. Identical output to `hensel_lift`.
pub fn hensel_lift_newton(p: &BiPoly, n: usize) -> Result<SeriesTrunc> {
    if !ift_check(p) {
        return Err(Error::IftViolation);
    }
    assert!(n >= 1, "precision must be at least 1");
    let field = p.field();
    let dp = p.deriv_t();
    let mut prec = 1usize;
    let mut f = SeriesTrunc::zero(field, 1);
    while prec < n {
        prec = (2 * prec).min(n);
        f = SeriesTrunc::from_coeffs(field, f.coeffs().to_vec(), prec);
        let value = bipoly_eval_series(p, &f);
        if value.is_zero() {
            continue;
        }
        let slope = bipoly_eval_series(&dp, &f);
        f = f.sub(&value.mul(&slope.invert()));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::textio::parse_bipoly;

    fn q() -> Field {
        Field::Rationals
    }

    /// Independent oracle: re-evaluates P at the partial sum for every
    /// coefficient instead of maintaining the shifted state.
    fn naive_lift(p: &BiPoly, n: usize) -> SeriesTrunc {
        let field = p.field();
        let inv = p.coeff(0, 1).inv();
        let mut f = SeriesTrunc::zero(field, n);
        for m in 1..n {
            let value = bipoly_eval_series(p, &f.truncate(m + 1));
            let c = value.coeff(m);
            f.set_coeff(m, c.neg().mul(&inv));
        }
        f
    }

    #[test]
    fn ift_check_examples() {
        assert!(ift_check(&parse_bipoly("T - x", q()).unwrap()));
        assert!(!ift_check(&parse_bipoly("T^2 - x^2 - x^3", q()).unwrap()));
        assert!(ift_check(&parse_bipoly("T^2 + T - x", q()).unwrap()));
    }

    #[test]
    fn lift_identity_root() {
        let p = parse_bipoly("T - x", q()).unwrap();
        let f = hensel_lift(&p, 6).unwrap();
        let expected: Vec<i64> = vec![0, 1, 0, 0, 0, 0];
        assert_eq!(
            f.coeffs().to_vec(),
            expected.iter().map(|&c| q().from_i64(c)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn lift_signed_catalan() {
        let p = parse_bipoly("T^2 + T - x", q()).unwrap();
        let f = hensel_lift(&p, 6).unwrap();
        let expected: Vec<i64> = vec![0, 1, -1, 2, -5, 14];
        assert_eq!(
            f.coeffs().to_vec(),
            expected.iter().map(|&c| q().from_i64(c)).collect::<Vec<_>>()
        );
        assert_eq!(f, naive_lift(&p, 6));
    }

    #[test]
    fn lift_char2_closed_form() {
        let f2 = Field::prime(2).unwrap();
        let p = parse_bipoly("T^2 + T + x", f2).unwrap();
        let f = hensel_lift(&p, 9).unwrap();
        for m in 0..9 {
            let expected = if m.is_power_of_two() { 1 } else { 0 };
            assert_eq!(f.coeff(m), f2.from_i64(expected), "coefficient of x^{m}");
        }
        assert!(bipoly_eval_series(&p, &f).is_zero());
    }

    #[test]
    fn lift_rejects_non_ift() {
        let p = parse_bipoly("T^2 - x", q()).unwrap();
        assert_eq!(hensel_lift(&p, 4), Err(Error::IftViolation));
        assert_eq!(hensel_lift_newton(&p, 4), Err(Error::IftViolation));
    }

    #[test]
    fn extension_is_prefix_stable() {
        let p = parse_bipoly("T^3 + x*T^2 + 2*T - x + x^2", q()).unwrap();
        let short = hensel_lift(&p, 7).unwrap();
        let long = hensel_lift(&p, 13).unwrap();
        assert_eq!(long.truncate(7), short);
    }

    #[test]
    fn linear_and_newton_agree() {
        for src in ["T^2 + T - x", "T^3 - 2*T + x^2 - x", "T + x*T + x"] {
            let p = parse_bipoly(src, q()).unwrap();
            let a = hensel_lift(&p, 17).unwrap();
            let b = hensel_lift_newton(&p, 17).unwrap();
            assert_eq!(a, b, "disagreement for {src}");
            assert_eq!(a, naive_lift(&p, 17), "oracle disagreement for {src}");
            assert!(bipoly_eval_series(&p, &a).is_zero());
        }
        let f5 = Field::prime(5).unwrap();
        let p = parse_bipoly("T^2 + 3*T + 4*x + x^2", f5).unwrap();
        assert_eq!(
            hensel_lift(&p, 23).unwrap(),
            hensel_lift_newton(&p, 23).unwrap()
        );
    }

    #[test]
    fn lifted_root_order() {
        let p = parse_bipoly("T^2 + T - x", q()).unwrap();
        let f = hensel_lift(&p, 8).unwrap();
        assert_eq!(f.ord_x(), crate::series::SeriesOrder::Known(1));
    }
}
