//! The universal root: the unique power-series solution of the generic
//! normalized polynomial `sum A_ij x^i T^j` (with `A_00 = 0`, `A_01 = 1`),
//! computed with coefficients in the integer polynomial ring on the
//! remaining `dh + d + h - 1` indeterminates. Substituting the normalized
//! coefficients of any concrete IFT polynomial reproduces its Hensel lift,
//! over any base field.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::{One, Zero};

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hensel::ift_check;
use crate::series::SeriesTrunc;

/// Sparse multivariate polynomial over the integers. The exponent vector has
/// one slot per indeterminate, fixed by the enclosing `UniversalPoly`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(vec![0; nvars], BigInt::from(c));
        }
        MPoly { nvars, terms }
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        let mut exps = vec![0u32; nvars];
        exps[k] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exps, BigInt::one());
        MPoly { nvars, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        MPoly { nvars: self.nvars, terms }
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *terms.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MPoly { nvars: self.nvars, terms }
    }

    /// Evaluates at a point of the base field.
    pub fn eval(&self, point: &[Scalar], field: Field) -> Scalar {
        let mut acc = field.zero();
        for (exps, c) in &self.terms {
            let mut term = field.from_bigint(c);
            for (k, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&point[k]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }
}

/// Truncated universal root: `coeffs[k]` is the coefficient of `x^k` as an
/// integer polynomial in the normalized indeterminates.
#[derive(Clone, Debug)]
pub struct UniversalPoly {
    d: usize,
    h: usize,
    /// `(i, j)` index of each indeterminate `A_ij / A_01`, in grid order,
    /// omitting `(0,0)` and `(0,1)`.
    vars: Vec<(usize, usize)>,
    coeffs: Vec<MPoly>,
}

impl UniversalPoly {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn vars(&self) -> &[(usize, usize)] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> &MPoly {
        &self.coeffs[k]
    }

    /// Substitutes the normalized coefficients `a_ij / a_01` of a concrete
    /// IFT polynomial with bidegree within `(d, h)`.
    pub fn specialize(&self, p: &BiPoly) -> Result<SeriesTrunc> {
        if !ift_check(p) {
            return Err(Error::IftViolation);
        }
        if p.t_degree() > Some(self.d) || p.height() > Some(self.h) {
            return Err(Error::Parse(format!(
                "polynomial bidegree exceeds universal bounds ({}, {})",
                self.d, self.h
            )));
        }
        let field = p.field();
        let inv = p.coeff(0, 1).inv();
        let point: Vec<Scalar> = self
            .vars
            .iter()
            .map(|&(i, j)| p.coeff(i, j).mul(&inv))
            .collect();
        let coeffs = self
            .coeffs
            .iter()
            .map(|m| m.eval(&point, field))
            .collect();
        Ok(SeriesTrunc::from_coeffs(field, coeffs, self.precision()))
    }
}

/// First `n` coefficients of the root of the generic normalized polynomial
/// of bidegree `(d, h)`. The linear solve never divides: the normalization
/// `A_01 = 1` keeps every coefficient in the integer polynomial ring.
pub fn universal_root(d: usize, h: usize, n: usize) -> UniversalPoly {
    assert!(d >= 1 && n >= 1);
    let mut vars = Vec::new();
    for i in 0..=h {
        for j in 0..=d {
            if (i, j) != (0, 0) && (i, j) != (0, 1) {
                vars.push((i, j));
            }
        }
    }
    let nv = vars.len();
    debug_assert_eq!(nv, d * h + d + h - 1);
    // state[j][m]: x^m coefficient of the T^j coefficient of P(x, f + T)
    let mut state: Vec<Vec<MPoly>> = vec![vec![MPoly::zero(nv); n]; d + 1];
    for (k, &(i, j)) in vars.iter().enumerate() {
        if i < n {
            state[j][i] = MPoly::var(nv, k);
        }
    }
    state[1][0] = MPoly::constant(nv, 1);
    let mut root = vec![MPoly::zero(nv); n];
    for m in 1..n {
        let fm = state[0][m].neg();
        if fm.is_zero() {
            continue;
        }
        root[m] = fm.clone();
        for k in 0..d {
            for j in (k..d).rev() {
                for t in m..n {
                    if state[j + 1][t - m].is_zero() {
                        continue;
                    }
                    let bump = state[j + 1][t - m].mul(&fm);
                    state[j][t] = state[j][t].add(&bump);
                }
            }
        }
        debug_assert!(state[0][..=m].iter().all(MPoly::is_zero));
    }
    UniversalPoly {
        d,
        h,
        vars,
        coeffs: root,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hensel::hensel_lift;
    use crate::textio::parse_bipoly;

    #[test]
    fn degree_one_closed_form() {
        // (1 + A11 x) f = -A10 x, so the x^k coefficient is
        // (-1)^k A10 A11^(k-1) for k >= 1.
        let u = universal_root(1, 1, 6);
        assert_eq!(u.num_vars(), 2);
        assert_eq!(u.vars(), &[(1, 0), (1, 1)]);
        let a10 = MPoly::var(2, 0);
        let a11 = MPoly::var(2, 1);
        let mut expected = a10.neg();
        for k in 1..6 {
            assert_eq!(u.coeff(k), &expected, "coefficient of x^{k}");
            expected = expected.mul(&a11).neg();
        }
        assert!(u.coeff(0).is_zero());
    }

    #[test]
    fn specializes_to_plain_root() {
        // A10 = -1, A11 = 0 is P = T - x
        let u = universal_root(1, 1, 6);
        let p = parse_bipoly("T - x", Field::Rationals).unwrap();
        let f = u.specialize(&p).unwrap();
        assert_eq!(f, hensel_lift(&p, 6).unwrap());
    }

    #[test]
    fn specialization_matches_hensel_with_denormalized_leading_unit() {
        // a01 = 3 forces genuine normalization before substitution
        let p = parse_bipoly("3*T + x*T^2 - 2*x + x^2", Field::Rationals).unwrap();
        let u = universal_root(2, 1, 9);
        assert_eq!(u.specialize(&p).unwrap(), hensel_lift(&p, 9).unwrap());
    }

    #[test]
    fn specialization_exhaustive_f3_degree_one() {
        let f3 = Field::prime(3).unwrap();
        let u = universal_root(1, 1, 8);
        for a10 in 0..3 {
            for a11 in 0..3 {
                let mut grid = vec![
                    vec![f3.zero(), f3.from_i64(a10)],
                    vec![f3.one(), f3.from_i64(a11)],
                ];
                grid.swap(0, 1); // grid[j][i]: row per T-power
                let p = BiPoly::from_grid(
                    f3,
                    vec![
                        vec![f3.zero(), f3.from_i64(a10)],
                        vec![f3.one(), f3.from_i64(a11)],
                    ],
                );
                assert_eq!(u.specialize(&p).unwrap(), hensel_lift(&p, 8).unwrap());
            }
        }
    }

    #[test]
    fn rejects_oversized_input() {
        let u = universal_root(1, 1, 4);
        let p = parse_bipoly("T^2 + T - x", Field::Rationals).unwrap();
        assert!(u.specialize(&p).is_err());
    }
}
