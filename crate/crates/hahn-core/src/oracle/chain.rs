//! The overlap matrix factored through the intermediate basis labelled by
//! `(p, q)`, `0 ≤ p ≤ q ≤ N`: first couple the first two coordinates at fixed
//! `q = i + k`, then couple the result with the third.

use crate::hahn_bi::{simplex, BiParams};
use crate::hahn_uni::{hahn_poly, lambda, rho};
use crate::numeric::Rational;

/// Dense row-major `f64` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<f64>,
}

impl FloatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FloatMatrix { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = FloatMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// # Panics
    /// Panics on mismatched shapes.
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = FloatMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0.0 {
                    continue;
                }
                for c in 0..other.cols {
                    out.data[r * other.cols + c] += a * other.get(k, c);
                }
            }
        }
        out
    }

    /// `max |Mᵀ M − I|`.
    pub fn orthogonality_defect(&self) -> f64 {
        let g = self.transpose().matmul(self);
        let mut worst: f64 = 0.0;
        for r in 0..g.rows {
            for c in 0..g.cols {
                let target = if r == c { 1.0 } else { 0.0 };
                worst = worst.max((g.get(r, c) - target).abs());
            }
        }
        worst
    }
}

/// `(p, q)` with `0 ≤ p ≤ q ≤ N`, q-major.
pub fn cylindrical_labels(level: usize) -> Vec<(usize, usize)> {
    (0..=level).flat_map(|q| (0..=q).map(move |p| (p, q))).collect()
}

/// `√(ρ(x)/λ_n) h_n(x)` for the univariate family `(a, b; level)`.
fn orthonormal(n: usize, x: usize, a: &Rational, b: &Rational, level: usize) -> f64 {
    let h = hahn_poly(n, &Rational::from(x), a, b, level as i64);
    if h.is_zero() {
        return 0.0;
    }
    h.to_f64() * (rho(x, a, b, level) / lambda(n, a, b, level)).to_f64().sqrt()
}

/// `(cart_to_cyl, cyl_to_sph)`: rows of the first are grid points `(i, k)`,
/// columns of the second are degree pairs `(m, n)`, both k-major; the shared
/// index is [`cylindrical_labels`]. `skew` scales the second factor (fault injection only).
pub fn chain_matrices_with(params: &BiParams, skew: f64) -> (FloatMatrix, FloatMatrix) {
    let level = params.n;
    let grid = simplex(level);
    let cyl = cylindrical_labels(level);
    let (a1, a2, a3) = (&params.alpha1, &params.alpha2, &params.alpha3);
    let mut first = FloatMatrix::zeros(grid.len(), cyl.len());
    for (r, &(i, k)) in grid.iter().enumerate() {
        for (c, &(p, q)) in cyl.iter().enumerate() {
            if q == i + k {
                first.set(r, c, orthonormal(p, i, a1, a2, q));
            }
        }
    }
    let mut second = FloatMatrix::zeros(cyl.len(), grid.len());
    for (r, &(p, q)) in cyl.iter().enumerate() {
        for (c, &(m, n)) in grid.iter().enumerate() {
            if m == p {
                let a = params.a12() + Rational::from(2 * m + 1);
                second.set(r, c, skew * orthonormal(n, q - m, &a, a3, level - m));
            }
        }
    }
    (first, second)
}

pub fn chain_matrices(params: &BiParams) -> (FloatMatrix, FloatMatrix) {
    chain_matrices_with(params, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hahn_bi::{overlap2, OverlapMode};
    use crate::numeric::q;

    #[test]
    fn level_zero() {
        let p = BiParams::new(q(0, 1), q(0, 1), q(0, 1), 0).unwrap();
        let (a, b) = chain_matrices(&p);
        assert_eq!(a.data, vec![1.0]);
        assert_eq!(b.data, vec![1.0]);
    }

    #[test]
    fn labels_count() {
        for level in 0..6 {
            assert_eq!(cylindrical_labels(level).len(), simplex(level).len());
        }
    }

    #[test]
    fn product_is_overlap() {
        for p in [
            BiParams::new(q(1, 2), q(-1, 2), q(3, 1), 5).unwrap(),
            BiParams::new(q(-1, 2), q(-1, 2), q(-1, 2), 4).unwrap(),
        ] {
            let (a, b) = chain_matrices(&p);
            assert!(a.orthogonality_defect() < 1e-12);
            assert!(b.orthogonality_defect() < 1e-12);
            let prod = a.matmul(&b);
            let o = overlap2(&p, OverlapMode::Float).to_f64();
            for (x, y) in prod.data.iter().zip(&o) {
                assert!((x - y).abs() < 1e-12, "{x} vs {y}");
            }
        }
    }
}
