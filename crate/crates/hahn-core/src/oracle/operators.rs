//! The two difference operators as exact matrices over the simplex grid.

use rayon::prelude::*;

use crate::error::Error;
use crate::hahn_bi::{p2_raw, simplex, simplex_index, BiParams, DegreePair};
use crate::numeric::{normalize_leading, Rational, RationalMatrix};
use crate::report::{Check, ExactTally};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorLabel {
    L1,
    L2,
}

/// Operator on functions of the grid: `(L f)(g) = Σ_{g'} matrix[g][g'] f(g')`,
/// grid points in k-major order.
#[derive(Clone, Debug)]
pub struct GridOperator {
    pub label: OperatorLabel,
    pub matrix: RationalMatrix,
}

/// Shift coefficients `(c, Δi, Δk)` at `(i, k)`; the operator is `Σ c (T^{Δ} − 1)`.
pub fn shifts(label: OperatorLabel, i: i64, k: i64, p: &BiParams) -> Vec<(Rational, i64, i64)> {
    let (a1, a2, a3) = (&p.alpha1, &p.alpha2, &p.alpha3);
    let r = Rational::integer;
    match label {
        OperatorLabel::L1 => vec![(r(i) * (a2 + (k + 1)), -1, 1), (r(k) * (a1 + (i + 1)), 1, -1)],
        OperatorLabel::L2 => {
            let x3 = p.n as i64 - i - k;
            vec![
                ((a1 + (i + 1)) * r(x3), 1, 0),
                ((a2 + (k + 1)) * r(x3), 0, 1),
                (r(i) * (a3 + (x3 + 1)), -1, 0),
                (r(k) * (a3 + (x3 + 1)), 0, -1),
                (r(k) * (a1 + (i + 1)), 1, -1),
                (r(i) * (a2 + (k + 1)), -1, 1),
            ]
        }
    }
}

fn inside(i: i64, k: i64, level: usize) -> bool {
    i >= 0 && k >= 0 && i + k <= level as i64
}

/// Builds the matrix; a nonzero coefficient pointing off the grid is dropped, and
/// [`boundary_check`] confirms that none exist. `skew` multiplies the first
/// off-diagonal coefficient (fault injection only).
pub fn build_operator_with(label: OperatorLabel, p: &BiParams, skew: &Rational) -> GridOperator {
    let pts = simplex(p.n);
    let mut m = RationalMatrix::zeros(pts.len(), pts.len());
    for (row, &(i, k)) in pts.iter().enumerate() {
        let (i, k) = (i as i64, k as i64);
        for (idx, (c, di, dk)) in shifts(label, i, k, p).into_iter().enumerate() {
            let (ti, tk) = (i + di, k + dk);
            if !inside(ti, tk, p.n) {
                continue;
            }
            let off = if idx == 0 { &c * skew } else { c.clone() };
            m.add_to(row, simplex_index(p.n, ti as usize, tk as usize), &off);
            m.add_to(row, row, &-c);
        }
    }
    GridOperator { label, matrix: m }
}

pub fn build_operator(label: OperatorLabel, p: &BiParams) -> GridOperator {
    build_operator_with(label, p, &Rational::one())
}

/// Every shift leaving the grid carries a zero coefficient.
pub fn boundary_check(p: &BiParams) -> Check {
    let mut tally = ExactTally::new("boundary");
    for label in [OperatorLabel::L1, OperatorLabel::L2] {
        for (i, k) in simplex(p.n) {
            let (i, k) = (i as i64, k as i64);
            for (c, di, dk) in shifts(label, i, k, p) {
                if !inside(i + di, k + dk, p.n) {
                    tally.record(|| format!("{label:?} at ({i},{k}) shift ({di},{dk})"), &c, &Rational::zero());
                }
            }
        }
    }
    tally.finish()
}

/// `−m(m+α₁₂+1)` and `−(m+n)(m+n+α₁₂₃+2)`.
pub fn eigenvalues(d: DegreePair, p: &BiParams) -> (Rational, Rational) {
    let (m, t) = (Rational::from(d.m), Rational::from(d.m + d.n));
    let l1 = -(&m * (&m + p.a12() + 1));
    let l2 = -(&t * (&t + p.a123() + 2));
    (l1, l2)
}

/// Generator of `ker(L₁ − λ₁) ∩ ker(L₂ − λ₂)` for every degree pair, scaled so the
/// first nonzero entry is 1. Errors when some intersection is not a line.
pub fn joint_eigenvectors(l1: &GridOperator, l2: &GridOperator, p: &BiParams) -> Result<Vec<(DegreePair, Vec<Rational>)>, Error> {
    simplex(p.n)
        .into_par_iter()
        .map(|(m, n)| {
            let d = DegreePair { m, n };
            let (e1, e2) = eigenvalues(d, p);
            let stacked = l1.matrix.shift_diagonal(&e1).stack(&l2.matrix.shift_diagonal(&e2));
            let mut basis = stacked.nullspace();
            if basis.len() != 1 {
                return Err(Error::Degenerate(format!(
                    "joint eigenspace of degree ({m},{n}) has dimension {} for {}",
                    basis.len(),
                    p.label()
                )));
            }
            Ok((d, basis.remove(0)))
        })
        .collect()
}

/// `P_{m,n}` on the grid, scaled so the first nonzero entry is 1.
pub fn normalized_p_vector(d: DegreePair, p: &BiParams) -> Vec<Rational> {
    let mut v: Vec<Rational> = simplex(p.n).into_iter().map(|(i, k)| p2_raw(d.m, d.n, i as i64, k as i64, p)).collect();
    normalize_leading(&mut v);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q;

    fn zero3(n: usize) -> BiParams {
        BiParams::new(q(0, 1), q(0, 1), q(0, 1), n).unwrap()
    }

    #[test]
    fn level_zero_is_zero_matrix() {
        let l1 = build_operator(OperatorLabel::L1, &zero3(0));
        assert_eq!(l1.matrix, RationalMatrix::zeros(1, 1));
    }

    #[test]
    fn hand_eigenpair_level_one() {
        let p = zero3(1);
        let l1 = build_operator(OperatorLabel::L1, &p);
        let v = vec![q(0, 1), q(-1, 1), q(1, 1)];
        let expect: Vec<Rational> = v.iter().map(|x| x * q(-2, 1)).collect();
        assert_eq!(l1.matrix.mul_vec(&v), expect);
    }

    #[test]
    fn l2_spectrum_level_one() {
        let p = zero3(1);
        let l2 = build_operator(OperatorLabel::L2, &p);
        assert_eq!(l2.matrix.nullspace().len(), 1);
        assert_eq!(l2.matrix.shift_diagonal(&q(-3, 1)).nullspace().len(), 2);
    }

    #[test]
    fn eigenvectors_match_family() {
        let p = BiParams::new(q(1, 2), q(3, 1), q(-1, 2), 4).unwrap();
        let l1 = build_operator(OperatorLabel::L1, &p);
        let l2 = build_operator(OperatorLabel::L2, &p);
        assert!(l1.matrix.commutator(&l2.matrix).is_zero());
        for (d, v) in joint_eigenvectors(&l1, &l2, &p).unwrap() {
            assert_eq!(v, normalized_p_vector(d, &p), "degree {d:?}");
        }
        let one = &Rational::one();
        assert_eq!(joint_eigenvectors(&l1, &l2, &p).unwrap()[0].1, vec![one.clone(); 15]);
    }

    #[test]
    fn degenerate_spectrum_reported() {
        // with L₂ replaced by zero, the m = 0 eigenspace of L₁ alone has dimension N+1
        let p = BiParams::new(q(0, 1), q(0, 1), q(0, 1), 2).unwrap();
        let l1 = build_operator(OperatorLabel::L1, &p);
        let zero = GridOperator { label: OperatorLabel::L2, matrix: RationalMatrix::zeros(6, 6) };
        assert!(matches!(joint_eigenvectors(&l1, &zero, &p), Err(Error::Degenerate(_))));
    }
}
