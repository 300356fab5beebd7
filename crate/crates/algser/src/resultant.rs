//! Sylvester resultants with exact fraction-free elimination.
//!
//! Sign convention, fixed once and documented here: `resultant_t(P, Q)` is
//! `lc_T(P)^{deg_T Q} * prod Q(x, alpha_i)` over the roots `alpha_i` of `P`
//! in `T`. Concretely it is the determinant of the Sylvester matrix whose
//! first `deg_T Q` rows carry the coefficients of `P`. The determinant is
//! computed by Bareiss elimination, whose interior divisions are exact over
//! an integral domain.
//!
//! The same engine runs with bivariate entries to eliminate an auxiliary
//! variable `U` from pairs like `(P_f(x,U), P_g(x,T-U))`; those resultants
//! annihilate sums and products of algebraic series.

use crate::bipoly::BiPoly;
use crate::unipoly::UniPoly;

/// Ring operations needed by the determinant routine.
trait DetEntry: Clone {
    fn zero_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

impl DetEntry for UniPoly {
    fn zero_like(&self) -> Self {
        UniPoly::zero(self.field())
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        UniPoly::mul(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        UniPoly::sub(self, rhs)
    }
    fn neg(&self) -> Self {
        UniPoly::neg(self)
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        UniPoly::div_exact(self, rhs)
    }
}

impl DetEntry for BiPoly {
    fn zero_like(&self) -> Self {
        BiPoly::zero(self.field())
    }
    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        BiPoly::mul(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        BiPoly::sub(self, rhs)
    }
    fn neg(&self) -> Self {
        BiPoly::neg(self)
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        BiPoly::div_exact(self, rhs)
    }
}

/// Bareiss fraction-free determinant with row pivoting.
fn det_bareiss<E: DetEntry>(mut m: Vec<Vec<E>>) -> E {
    let n = m.len();
    assert!(n >= 1 && m.iter().all(|row| row.len() == n));
    let zero = m[0][0].zero_like();
    let mut negate = false;
    let mut prev: Option<E> = None;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return zero;
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = match &prev {
                    None => num,
                    Some(p) => num.div_exact(p).expect("Bareiss division is exact"),
                };
            }
            m[i][k] = zero.clone();
        }
        prev = Some(m[k][k].clone());
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Builds the Sylvester matrix of two coefficient sequences (highest power
/// first) and takes its determinant.
fn sylvester_det<E: DetEntry>(p: &[E], q: &[E], zero: E) -> E {
    let m = p.len() - 1;
    let n = q.len() - 1;
    let size = m + n;
    debug_assert!(size >= 1);
    let mut mat = vec![vec![zero; size]; size];
    for r in 0..n {
        for (c, coef) in p.iter().enumerate() {
            mat[r][r + c] = coef.clone();
        }
    }
    for r in 0..m {
        for (c, coef) in q.iter().enumerate() {
            mat[n + r][r + c] = coef.clone();
        }
    }
    det_bareiss(mat)
}

fn pow_entry<E: DetEntry>(base: &E, exp: usize, one_hint: E) -> E {
    let mut acc = one_hint;
    for _ in 0..exp {
        acc = acc.mul(base);
    }
    acc
}

/// Resultant of `P` and `Q` with respect to `T`.
///
/// Zero iff `P` and `Q` share a common factor of positive `T`-degree over
/// `k(x)`. By convention the zero polynomial yields a zero resultant.
pub fn resultant_t(p: &BiPoly, q: &BiPoly) -> UniPoly {
    let field = p.field();
    assert_eq!(field, q.field(), "mixed fields");
    let (Some(dp), Some(dq)) = (p.t_degree(), q.t_degree()) else {
        return UniPoly::zero(field);
    };
    if dp == 0 && dq == 0 {
        return UniPoly::one(field);
    }
    if dp == 0 {
        return pow_entry(&p.t_coeff(0), dq, UniPoly::one(field));
    }
    if dq == 0 {
        return pow_entry(&q.t_coeff(0), dp, UniPoly::one(field));
    }
    let pc: Vec<UniPoly> = (0..=dp).rev().map(|j| p.t_coeff(j)).collect();
    let qc: Vec<UniPoly> = (0..=dq).rev().map(|j| q.t_coeff(j)).collect();
    sylvester_det(&pc, &qc, UniPoly::zero(field))
}

fn binomial_row(n: usize) -> Vec<i64> {
    let mut row = vec![1i64];
    for k in 0..n {
        row.push(row[k] * (n - k) as i64 / (k + 1) as i64);
    }
    row
}

/// Eliminates `U` from `(P_f(x, U), P_g(x, T - U))`: the result is a nonzero
/// bivariate polynomial vanishing on `f + g` whenever `P_f(x,f) = P_g(x,g) = 0`.
pub(crate) fn resultant_add(p_f: &BiPoly, p_g: &BiPoly) -> BiPoly {
    let field = p_f.field();
    let df = p_f.t_degree().expect("nonzero minimal polynomial");
    let dg = p_g.t_degree().expect("nonzero minimal polynomial");
    // P_f as a polynomial in U (its own T), highest power first.
    let pu: Vec<BiPoly> = (0..=df)
        .rev()
        .map(|j| BiPoly::from_unipoly(p_f.t_coeff(j)))
        .collect();
    // P_g(x, T - U) collected by powers of U: coefficient of U^i is
    // sum_j b_j(x) * C(j, i) * (-1)^i * T^(j-i).
    let mut qu: Vec<BiPoly> = vec![BiPoly::zero(field); dg + 1];
    for j in 0..=dg {
        let b = p_g.t_coeff(j);
        if b.is_zero() {
            continue;
        }
        let binom = binomial_row(j);
        for i in 0..=j {
            let mut c = field.from_i64(binom[i]);
            if i % 2 == 1 {
                c = c.neg();
            }
            let mut grid = vec![UniPoly::zero(field); j - i + 1];
            grid[j - i] = b.scale(&c);
            qu[i] = qu[i].add(&BiPoly::from_t_coeffs(field, grid));
        }
    }
    let qu: Vec<BiPoly> = qu.into_iter().rev().collect();
    if dg == 0 {
        return pow_entry(&qu[0], df, BiPoly::from_unipoly(UniPoly::one(field)));
    }
    if df == 0 {
        return pow_entry(&pu[0], dg, BiPoly::from_unipoly(UniPoly::one(field)));
    }
    sylvester_det(&pu, &qu, BiPoly::zero(field))
}

/// Eliminates `U` from `(P_f(x, U), U^dg * P_g(x, T/U))`: the result vanishes
/// on `f * g`. Requires `P_g(x, 0) != 0` (true for any minimal polynomial of
/// a nonzero series).
pub(crate) fn resultant_mul(p_f: &BiPoly, p_g: &BiPoly) -> BiPoly {
    let field = p_f.field();
    let df = p_f.t_degree().expect("nonzero minimal polynomial");
    let dg = p_g.t_degree().expect("nonzero minimal polynomial");
    let pu: Vec<BiPoly> = (0..=df)
        .rev()
        .map(|j| BiPoly::from_unipoly(p_f.t_coeff(j)))
        .collect();
    // U^dg * P_g(x, T/U) = sum_j b_j(x) T^j U^(dg - j): coefficient of U^i
    // is b_(dg-i)(x) T^(dg-i).
    let mut qu: Vec<BiPoly> = Vec::with_capacity(dg + 1);
    for i in (0..=dg).rev() {
        let j = dg - i;
        let b = p_g.t_coeff(j);
        let mut grid = vec![UniPoly::zero(field); j + 1];
        grid[j] = b;
        qu.push(BiPoly::from_t_coeffs(field, grid));
    }
    debug_assert!(
        !qu.last().unwrap().is_zero(),
        "P_g has zero constant term; factor T out first"
    );
    // Highest power of U first: coefficient of U^dg is b_0(x).
    let qu: Vec<BiPoly> = qu.into_iter().rev().collect();
    if dg == 0 {
        return pow_entry(&qu[0], df, BiPoly::from_unipoly(UniPoly::one(field)));
    }
    if df == 0 {
        return pow_entry(&pu[0], dg, BiPoly::from_unipoly(UniPoly::one(field)));
    }
    sylvester_det(&pu, &qu, BiPoly::zero(field))
}
