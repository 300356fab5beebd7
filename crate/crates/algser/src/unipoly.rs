//! Dense univariate polynomials over the base field, indexed by `x`-exponent.
//!
//! Invariant: the coefficient vector never has a trailing zero, so the zero
//! polynomial is the empty vector and `degree()` returns `None` for it (the
//! conventional "degree -infinity"). Every polynomial carries its field so
//! that the zero polynomial still knows where it lives.

use std::fmt;

use crate::field::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn zero(field: Field) -> Self {
        UniPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: Field) -> Self {
        UniPoly::constant(field.one())
    }

    pub fn constant(c: Scalar) -> Self {
        let field = c.field();
        UniPoly::from_coeffs(field, vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let field = c.field();
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        UniPoly::from_coeffs(field, coeffs)
    }

    pub fn from_coeffs(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    /// Value at x = 0.
    pub fn const_term(&self) -> Scalar {
        self.coeff(0)
    }

    pub fn add(&self, rhs: &UniPoly) -> UniPoly {
        assert_eq!(self.field, rhs.field, "mixed fields");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect();
        UniPoly::from_coeffs(self.field, coeffs)
    }

    pub fn sub(&self, rhs: &UniPoly) -> UniPoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            field: self.field,
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero(self.field);
        }
        UniPoly {
            field: self.field,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &UniPoly) -> UniPoly {
        assert_eq!(self.field, rhs.field, "mixed fields");
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        UniPoly::from_coeffs(self.field, coeffs)
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { field: self.field, coeffs }
    }

    /// Exact division by `x^k`; `None` if any of the low `k` coefficients is nonzero.
    pub fn shift_down(&self, k: usize) -> Option<UniPoly> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.coeffs.len() < k || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(UniPoly {
            field: self.field,
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Least exponent with nonzero coefficient; `None` for the zero polynomial.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Euclidean division: `self = q * rhs + r` with `deg r < deg rhs`.
    pub fn div_rem(&self, rhs: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let field = self.field;
        let d = rhs.degree().unwrap();
        let lc_inv = rhs.leading_coeff().unwrap().inv();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![field.zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let c = rem.last().unwrap().mul(&lc_inv);
            if !c.is_zero() {
                quot[k] = c.clone();
                for (i, b) in rhs.coeffs.iter().enumerate() {
                    rem[k + i] = rem[k + i].sub(&c.mul(b));
                }
            }
            rem.pop();
            while rem.last().is_some_and(Scalar::is_zero) {
                rem.pop();
            }
        }
        (
            UniPoly::from_coeffs(field, quot),
            UniPoly { field, coeffs: rem },
        )
    }

    /// Exact division; `None` if the remainder is nonzero.
    pub fn div_exact(&self, rhs: &UniPoly) -> Option<UniPoly> {
        if self.is_zero() {
            return Some(UniPoly::zero(self.field));
        }
        if rhs.is_zero() || self.degree() < rhs.degree() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, rhs: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scaled so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> UniPoly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::textio::render_unipoly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn poly(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(q(), coeffs.iter().map(|&c| q().from_i64(c)).collect())
    }

    #[test]
    fn zero_conventions() {
        let z = UniPoly::zero(q());
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.order(), None);
        assert_eq!(poly(&[0, 0, 1]).degree(), Some(2));
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = poly(&[-1, 0, 0, 1]); // x^3 - 1
        let b = poly(&[-1, 1]); // x - 1
        let (qt, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(qt, poly(&[1, 1, 1]));
        assert_eq!(a.div_exact(&b), Some(poly(&[1, 1, 1])));
        assert_eq!(poly(&[1, 1]).div_exact(&b), None);
    }

    #[test]
    fn gcd_monic() {
        // gcd(x^2 - 1, x^2 - 2x + 1) = x - 1
        let a = poly(&[-1, 0, 1]);
        let b = poly(&[1, -2, 1]);
        assert_eq!(a.gcd(&b), poly(&[-1, 1]));
        assert_eq!(a.gcd(&UniPoly::zero(q())), a.monic());
    }

    #[test]
    fn shifts() {
        let a = poly(&[0, 0, 3, 1]);
        assert_eq!(a.shift_down(2), Some(poly(&[3, 1])));
        assert_eq!(a.shift_down(3), None);
        assert_eq!(poly(&[3, 1]).shift_up(2), a);
        assert_eq!(a.order(), Some(2));
    }
}
