//! Truncated power series `f mod x^N` with explicit precision `N >= 1`.
//!
//! The coefficient vector always has exactly `N` entries, so precision is
//! never implicit. The order of a series that vanishes to full precision is
//! reported as `SeriesOrder::AtLeast(N)` rather than an error: callers such
//! as the derivative-order computation must distinguish "zero so far" from a
//! known order.

use std::fmt;

use crate::bipoly::BiPoly;
use crate::field::{Field, Scalar};
use crate::unipoly::UniPoly;

/// Result of `ord_x` on a truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOrder {
    /// Least exponent with nonzero coefficient.
    Known(usize),
    /// All coefficients below the precision vanish; the true order is `>= N`.
    AtLeast(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTrunc {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl SeriesTrunc {
    /// The zero series at precision `n`.
    pub fn zero(field: Field, n: usize) -> Self {
        assert!(n >= 1, "precision must be at least 1");
        SeriesTrunc {
            field,
            coeffs: vec![field.zero(); n],
        }
    }

    /// Pads or truncates `coeffs` to precision `n`.
    pub fn from_coeffs(field: Field, mut coeffs: Vec<Scalar>, n: usize) -> Self {
        assert!(n >= 1, "precision must be at least 1");
        coeffs.resize(n, field.zero());
        SeriesTrunc { field, coeffs }
    }

    pub fn from_unipoly(a: &UniPoly, n: usize) -> Self {
        SeriesTrunc::from_coeffs(a.field(), a.coeffs().to_vec(), n)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        assert!(k < self.precision(), "coefficient beyond precision");
        self.coeffs[k].clone()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: Scalar) {
        assert!(k < self.precision(), "coefficient beyond precision");
        self.coeffs[k] = c;
    }

    pub fn truncate(&self, n: usize) -> SeriesTrunc {
        assert!(n >= 1 && n <= self.precision());
        SeriesTrunc {
            field: self.field,
            coeffs: self.coeffs[..n].to_vec(),
        }
    }

    /// Least `i` with nonzero coefficient, or `AtLeast(N)` if none below `N`.
    pub fn ord_x(&self) -> SeriesOrder {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(i) => SeriesOrder::Known(i),
            None => SeriesOrder::AtLeast(self.precision()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, rhs: &SeriesTrunc) -> SeriesTrunc {
        assert_eq!(self.field, rhs.field, "mixed fields");
        let n = self.precision().min(rhs.precision());
        let coeffs = (0..n).map(|i| self.coeffs[i].add(&rhs.coeffs[i])).collect();
        SeriesTrunc { field: self.field, coeffs }
    }

    pub fn sub(&self, rhs: &SeriesTrunc) -> SeriesTrunc {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> SeriesTrunc {
        SeriesTrunc {
            field: self.field,
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> SeriesTrunc {
        SeriesTrunc {
            field: self.field,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Cauchy product truncated to the minimum precision.
    pub fn mul(&self, rhs: &SeriesTrunc) -> SeriesTrunc {
        assert_eq!(self.field, rhs.field, "mixed fields");
        let n = self.precision().min(rhs.precision());
        let mut coeffs = vec![self.field.zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        SeriesTrunc { field: self.field, coeffs }
    }

    /// Multiplication by `x^k`, keeping the precision.
    pub fn shift_up(&self, k: usize) -> SeriesTrunc {
        let n = self.precision();
        let mut coeffs = vec![self.field.zero(); n];
        for i in 0..n.saturating_sub(k) {
            coeffs[i + k] = self.coeffs[i].clone();
        }
        SeriesTrunc { field: self.field, coeffs }
    }

    /// Reciprocal of a unit series (nonzero constant term), to own precision.
    pub fn invert(&self) -> SeriesTrunc {
        let a0 = &self.coeffs[0];
        assert!(!a0.is_zero(), "series is not a unit");
        let n = self.precision();
        let inv0 = a0.inv();
        let mut out = vec![self.field.zero(); n];
        out[0] = inv0.clone();
        for m in 1..n {
            let mut acc = self.field.zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc = acc.add(&self.coeffs[k].mul(&out[m - k]));
                }
            }
            out[m] = acc.neg().mul(&inv0);
        }
        SeriesTrunc { field: self.field, coeffs: out }
    }
}

/// Evaluates `P(x, f)` truncated to the precision of `f`.
pub fn bipoly_eval_series(p: &BiPoly, f: &SeriesTrunc) -> SeriesTrunc {
    assert_eq!(p.field(), f.field(), "mixed fields");
    let n = f.precision();
    let mut acc = SeriesTrunc::zero(f.field(), n);
    for c in p.t_coeffs().iter().rev() {
        acc = acc.mul(f).add(&SeriesTrunc::from_unipoly(c, n));
    }
    acc
}

impl fmt::Display for SeriesTrunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::textio::render_series(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse_bipoly;

    fn q() -> Field {
        Field::Rationals
    }

    fn series(coeffs: &[i64], n: usize) -> SeriesTrunc {
        SeriesTrunc::from_coeffs(q(), coeffs.iter().map(|&c| q().from_i64(c)).collect(), n)
    }

    #[test]
    fn eval_root_by_construction() {
        let p = parse_bipoly("T - x", q()).unwrap();
        let f = series(&[0, 1], 5);
        assert!(bipoly_eval_series(&p, &f).is_zero());
    }

    #[test]
    fn eval_identity() {
        let p = parse_bipoly("T", q()).unwrap();
        let f = series(&[0, 3, -2, 7], 4);
        assert_eq!(bipoly_eval_series(&p, &f), f);
    }

    #[test]
    fn eval_hand_expansion() {
        // (x - x^2 + 2x^3)^2 + (x - x^2 + 2x^3) - x = 0 mod x^4
        let p = parse_bipoly("T^2 + T - x", q()).unwrap();
        let f = series(&[0, 1, -1, 2], 4);
        assert!(bipoly_eval_series(&p, &f).is_zero());
    }

    #[test]
    fn ord_markers() {
        assert_eq!(SeriesTrunc::zero(q(), 5).ord_x(), SeriesOrder::AtLeast(5));
        assert_eq!(series(&[0, 0, 1, 1], 5).ord_x(), SeriesOrder::Known(2));
    }

    #[test]
    fn invert_unit() {
        // 1/(1-x) = 1 + x + x^2 + ...
        let s = series(&[1, -1], 6);
        let inv = s.invert();
        assert_eq!(inv, series(&[1, 1, 1, 1, 1, 1], 6));
        assert_eq!(s.mul(&inv), series(&[1], 6));
    }
}
