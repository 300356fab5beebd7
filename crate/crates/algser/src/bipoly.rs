//! Bivariate polynomials `P(x, T)`, stored as a vector of `x`-polynomials
//! indexed by `T`-power.
//!
//! The `height` of `P` is the maximum `x`-degree over its `T`-coefficients
//! and `t_degree` its degree in `T`; both are `None` for the zero polynomial
//! so that bound comparisons in membership tests need no special cases.
//! Degrees are exactly additive under multiplication (the field has no zero
//! divisors), which the factorization search relies on.

use std::fmt;

use crate::field::{Field, Scalar};
use crate::unipoly::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiPoly {
    field: Field,
    /// `coeffs[j]` is the coefficient of `T^j`; the last entry is nonzero.
    coeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn zero(field: Field) -> Self {
        BiPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn from_t_coeffs(field: Field, mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        BiPoly { field, coeffs }
    }

    /// Builds from a coefficient grid: `grid[j]` lists the `x`-coefficients of `T^j`.
    pub fn from_grid(field: Field, grid: Vec<Vec<Scalar>>) -> Self {
        BiPoly::from_t_coeffs(
            field,
            grid.into_iter()
                .map(|row| UniPoly::from_coeffs(field, row))
                .collect(),
        )
    }

    /// The polynomial `T`.
    pub fn t(field: Field) -> Self {
        BiPoly::from_t_coeffs(field, vec![UniPoly::zero(field), UniPoly::one(field)])
    }

    pub fn from_unipoly(a: UniPoly) -> Self {
        let field = a.field();
        BiPoly::from_t_coeffs(field, vec![a])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `T`; `None` for the zero polynomial.
    pub fn t_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Maximum `x`-degree over all `T`-coefficients; `None` for zero.
    pub fn height(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(UniPoly::degree).max()
    }

    /// Coefficient of `T^j` as an `x`-polynomial.
    pub fn t_coeff(&self, j: usize) -> UniPoly {
        self.coeffs
            .get(j)
            .cloned()
            .unwrap_or_else(|| UniPoly::zero(self.field))
    }

    pub fn t_coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    /// Grid entry `a_{i,j}`, the coefficient of `x^i T^j`.
    pub fn coeff(&self, i: usize, j: usize) -> Scalar {
        self.coeffs
            .get(j)
            .map(|c| c.coeff(i))
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_constant(&self) -> bool {
        match self.coeffs.len() {
            0 => true,
            1 => self.coeffs[0].degree() == Some(0),
            _ => false,
        }
    }

    pub fn add(&self, rhs: &BiPoly) -> BiPoly {
        assert_eq!(self.field, rhs.field, "mixed fields");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|j| self.t_coeff(j).add(&rhs.t_coeff(j)))
            .collect();
        BiPoly::from_t_coeffs(self.field, coeffs)
    }

    pub fn sub(&self, rhs: &BiPoly) -> BiPoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly {
            field: self.field,
            coeffs: self.coeffs.iter().map(UniPoly::neg).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero(self.field);
        }
        BiPoly {
            field: self.field,
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &BiPoly) -> BiPoly {
        assert_eq!(self.field, rhs.field, "mixed fields");
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero(self.field);
        }
        let mut coeffs = vec![UniPoly::zero(self.field); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        BiPoly::from_t_coeffs(self.field, coeffs)
    }

    pub fn mul_unipoly(&self, a: &UniPoly) -> BiPoly {
        BiPoly::from_t_coeffs(self.field, self.coeffs.iter().map(|c| c.mul(a)).collect())
    }

    /// Formal derivative with respect to `T`.
    pub fn deriv_t(&self) -> BiPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c.scale(&self.field.from_i64(j as i64)))
            .collect();
        BiPoly::from_t_coeffs(self.field, coeffs)
    }

    /// Substitutes another bivariate polynomial for `T` (Horner scheme).
    pub fn subst_t(&self, u: &BiPoly) -> BiPoly {
        let mut acc = BiPoly::zero(self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(u).add(&BiPoly::from_unipoly(c.clone()));
        }
        acc
    }

    /// Substitutes `T -> T + c` for a scalar `c`; preserves `t_degree` and `height`.
    pub fn shift_t(&self, c: &Scalar) -> BiPoly {
        if c.is_zero() {
            return self.clone();
        }
        // Synthetic Taylor shift: no binomial coefficients, safe in char p.
        let mut coeffs = self.coeffs.clone();
        let d = coeffs.len();
        for k in 0..d {
            for j in (k..d.saturating_sub(1)).rev() {
                let bump = coeffs[j + 1].scale(c);
                coeffs[j] = coeffs[j].add(&bump);
            }
        }
        BiPoly::from_t_coeffs(self.field, coeffs)
    }

    /// Exact division of every coefficient by `x^k`; `None` if not divisible.
    pub fn div_x_pow(&self, k: usize) -> Option<BiPoly> {
        let coeffs: Option<Vec<UniPoly>> =
            self.coeffs.iter().map(|c| c.shift_down(k)).collect();
        Some(BiPoly::from_t_coeffs(self.field, coeffs?))
    }

    pub fn mul_x_pow(&self, k: usize) -> BiPoly {
        BiPoly::from_t_coeffs(
            self.field,
            self.coeffs.iter().map(|c| c.shift_up(k)).collect(),
        )
    }

    /// Exact division in `k[x][T]`; `None` if `rhs` does not divide exactly.
    pub fn div_exact(&self, rhs: &BiPoly) -> Option<BiPoly> {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(BiPoly::zero(self.field));
        }
        let dq = rhs.t_degree().unwrap();
        let lc = rhs.coeffs.last().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![UniPoly::zero(self.field); self.coeffs.len()];
        while let Some(dr) = rem.t_degree() {
            if dr < dq {
                return None;
            }
            let u = rem.coeffs.last().unwrap().div_exact(lc)?;
            let k = dr - dq;
            // rem -= u * T^k * rhs; the T^dr coefficient cancels exactly.
            let mut sub_coeffs = vec![UniPoly::zero(self.field); k];
            sub_coeffs.extend(rhs.coeffs.iter().map(|c| c.mul(&u)));
            rem = rem.sub(&BiPoly::from_t_coeffs(self.field, sub_coeffs));
            quot[k] = u;
            if rem.t_degree().is_some_and(|d| d >= dr) {
                return None; // no progress; not divisible
            }
        }
        Some(BiPoly::from_t_coeffs(self.field, quot))
    }

    /// Content in `k[x]`: the monic gcd of the `T`-coefficients, and the
    /// primitive part, so that `self = content * primitive`.
    pub fn content_x(&self) -> (UniPoly, BiPoly) {
        assert!(!self.is_zero(), "content of zero polynomial");
        let mut g = UniPoly::zero(self.field);
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.degree() == Some(0) {
                break;
            }
        }
        let g = g.monic();
        let prim = BiPoly::from_t_coeffs(
            self.field,
            self.coeffs
                .iter()
                .map(|c| c.div_exact(&g).expect("content divides"))
                .collect(),
        );
        (g, prim)
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && self.content_x().0.degree() == Some(0)
    }

    /// Scaled so the leading `T`-coefficient's leading `x`-coefficient is 1.
    pub fn normalize_leading(&self) -> BiPoly {
        match self.coeffs.last().and_then(UniPoly::leading_coeff) {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    /// If `other = c * self` for some nonzero scalar `c`, returns `c`.
    pub fn scalar_ratio(&self, other: &BiPoly) -> Option<Scalar> {
        if self.is_zero() || other.is_zero() {
            return None;
        }
        if self.t_degree() != other.t_degree() || self.height() != other.height() {
            return None;
        }
        let j = self.t_degree().unwrap();
        let a = self.coeffs[j].leading_coeff().unwrap();
        let b = other.coeffs[j].leading_coeff().unwrap();
        if self.coeffs[j].degree() != other.coeffs[j].degree() {
            return None;
        }
        let c = b.div(a);
        (self.scale(&c) == *other).then_some(c)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::textio::render_bipoly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse_bipoly;

    fn q() -> Field {
        Field::Rationals
    }

    fn p(s: &str) -> BiPoly {
        parse_bipoly(s, q()).unwrap()
    }

    #[test]
    fn degrees() {
        let z = BiPoly::zero(q());
        assert_eq!(z.t_degree(), None);
        assert_eq!(z.height(), None);
        let a = p("T^2 + x^3*T - x");
        assert_eq!(a.t_degree(), Some(2));
        assert_eq!(a.height(), Some(3));
    }

    #[test]
    fn degrees_additive_under_mul() {
        let a = p("T + x");
        let b = p("x^2*T^2 - T + 1");
        let ab = a.mul(&b);
        assert_eq!(ab.t_degree(), Some(3));
        assert_eq!(ab.height(), Some(3));
    }

    #[test]
    fn div_exact_recovers_factor() {
        let a = p("T + 1");
        let b = p("T + x");
        let prod = a.mul(&b);
        assert_eq!(prod, p("T^2 + T + x*T + x"));
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&p("T - 1")), None);
        // divisor with T-degree 0
        let c = p("x^2");
        assert_eq!(prod.mul(&c).div_exact(&c), Some(prod.clone()));
        assert_eq!(prod.div_exact(&c), None);
    }

    #[test]
    fn content_examples() {
        let (a, s) = p("x*T + x^2").content_x();
        assert_eq!(a, p("x").t_coeff(0));
        assert_eq!(s, p("T + x"));

        let (a, s) = p("T + x").content_x();
        assert_eq!(a, UniPoly::one(q()));
        assert_eq!(s, p("T + x"));

        let prod = p("T^2 - x").mul(&p("1 + x"));
        let (a, s) = prod.content_x();
        assert_eq!(a, p("1 + x").t_coeff(0));
        assert_eq!(s, p("T^2 - x"));
    }

    #[test]
    fn shift_t_preserves_bidegree() {
        let a = p("T^2 + x^3*T - x");
        let b = a.shift_t(&q().from_i64(5));
        assert_eq!(b.t_degree(), a.t_degree());
        assert_eq!(b.height(), a.height());
        // (T+5)^2 + x^3(T+5) - x
        assert_eq!(b, p("T^2 + 10*T + 25 + x^3*T + 5*x^3 - x"));
    }

    #[test]
    fn scalar_ratio_detects_multiples() {
        let a = p("T^2 + 2*T - x");
        let b = a.scale(&q().parse_scalar("-3/2").unwrap());
        assert_eq!(a.scalar_ratio(&b), Some(q().parse_scalar("-3/2").unwrap()));
        assert_eq!(a.scalar_ratio(&p("T^2 + T - x")), None);
    }
}
