//! Truncated positive discrete series modules of su(1,1) in the basis
//! `K₊f_n = f_{n+1}`, `K₋f_n = n(n+2ν−1)f_{n−1}`, `K₀f_n = (n+ν)f_n`, which avoids
//! square roots; matrices are indexed `[target][source]`.

use rayon::prelude::*;

use crate::error::Error;
use crate::hahn_bi::{degree_pairs, p2_raw, simplex, simplex_index, BiParams};
use crate::numeric::{factorial, normalize_leading, Rational, RationalMatrix};
use crate::report::{Check, ExactTally, VerificationReport};

use super::operators::eigenvalues;

#[derive(Clone, Debug)]
pub struct Su11Module {
    pub nu: Rational,
    pub nmax: usize,
    pub k0: RationalMatrix,
    pub kplus: RationalMatrix,
    pub kminus: RationalMatrix,
}

/// Basis `f_0 … f_nmax`.
pub fn su11_build(nu: &Rational, nmax: usize) -> Result<Su11Module, Error> {
    if !nu.is_positive() {
        return Err(Error::Parameter { name: "nu".to_string(), value: nu.to_string() });
    }
    let dim = nmax + 1;
    let mut k0 = RationalMatrix::zeros(dim, dim);
    let mut kplus = RationalMatrix::zeros(dim, dim);
    let mut kminus = RationalMatrix::zeros(dim, dim);
    for n in 0..dim {
        let rn = Rational::from(n);
        k0.set(n, n, &rn + nu);
        if n < nmax {
            kplus.set(n + 1, n, Rational::one());
        }
        if n > 0 {
            kminus.set(n - 1, n, &rn * (&rn + nu * 2 - 1));
        }
    }
    Ok(Su11Module { nu: nu.clone(), nmax, k0, kplus, kminus })
}

impl Su11Module {
    /// `K₀² − K₊K₋ − K₀`.
    pub fn casimir(&self) -> RationalMatrix {
        &(&(&self.k0 * &self.k0) - &(&self.kplus * &self.kminus)) - &self.k0
    }
}

fn compare_matrices(tally: &mut ExactTally, what: &str, a: &RationalMatrix, b: &RationalMatrix, cols: usize) {
    for r in 0..a.rows() {
        for c in 0..cols {
            tally.record(|| format!("{what} entry ({r},{c})"), a.get(r, c), b.get(r, c));
        }
    }
}

/// Casimir value, the three commutation relations (the last away from the
/// truncated top state), and the presence of the truncation defect.
pub fn module_checks(m: &Su11Module, perturb: bool) -> Vec<Check> {
    let dim = m.nmax + 1;
    let mut value = &m.nu * (&m.nu - 1);
    if perturb {
        value *= Rational::new(1001, 1000);
    }
    let mut casimir = ExactTally::new("su11-casimir");
    compare_matrices(&mut casimir, "C", &m.casimir(), &RationalMatrix::identity(dim).scale(&value), dim);
    let mut comm = ExactTally::new("su11-commutators");
    compare_matrices(&mut comm, "[K0,K+]", &m.k0.commutator(&m.kplus), &m.kplus, dim);
    compare_matrices(&mut comm, "[K0,K-]", &m.k0.commutator(&m.kminus), &m.kminus.scale(&Rational::integer(-1)), dim);
    let twice = m.k0.scale(&Rational::integer(2));
    compare_matrices(&mut comm, "[K-,K+]", &m.kminus.commutator(&m.kplus), &twice, m.nmax);
    let mut defect = ExactTally::new("su11-truncation");
    let top = m.kminus.commutator(&m.kplus).get(m.nmax, m.nmax) - twice.get(m.nmax, m.nmax);
    let nonzero = Rational::integer(if top.is_zero() { 0 } else { 1 });
    defect.record(|| format!("top defect {top}"), &nonzero, &Rational::one());
    vec![casimir.finish(), comm.finish(), defect.finish()]
}

/// `ν_a = (α_a+1)/2`.
pub fn weights(p: &BiParams) -> [Rational; 3] {
    let h = Rational::new(1, 2);
    [(&p.alpha1 + 1) * &h, (&p.alpha2 + 1) * &h, (&p.alpha3 + 1) * &h]
}

/// Casimirs of `K^{(1)}+K^{(2)}` and `K^{(1)}+K^{(2)}+K^{(3)}` on the span of
/// `f_{n₁}⊗f_{n₂}⊗f_{n₃}` with `n₁+n₂+n₃ = N`, indexed by `(n₁, n₂)` k-major.
pub fn tensor_casimirs(p: &BiParams) -> (RationalMatrix, RationalMatrix) {
    let nu = weights(p);
    let pts = simplex(p.n);
    let build = |parts: &[usize]| {
        let mut c = RationalMatrix::zeros(pts.len(), pts.len());
        for (col, &(i, k)) in pts.iter().enumerate() {
            let occ = [i, k, p.n - i - k];
            let k0: Rational = parts.iter().map(|&a| Rational::from(occ[a]) + &nu[a]).sum();
            c.add_to(col, col, &(&k0 * (&k0 - 1)));
            for &b in parts {
                if occ[b] == 0 {
                    continue;
                }
                let nb = Rational::from(occ[b]);
                let coef = -(&nb * (&nb + &nu[b] * 2 - 1));
                for &a in parts {
                    let mut t = occ;
                    t[b] -= 1;
                    t[a] += 1;
                    c.add_to(simplex_index(p.n, t[0], t[1]), col, &coef);
                }
            }
        }
        c
    };
    (build(&[0, 1]), build(&[0, 1, 2]))
}

/// Joint eigenvectors of the two tensor Casimirs against `P_{m,n}(i,k)/(i! k! (N−i−k)!)`,
/// the grid family rewritten in the unnormalized tensor basis, plus the affine
/// relation between Casimir values and grid-operator eigenvalues.
pub fn su11_spectrum_check(p: &BiParams, perturb: bool) -> VerificationReport {
    let nu = weights(p);
    let (a12, a123) = (p.a12(), p.a123());
    let mut affine = ExactTally::new("su11-spectrum");
    let quarter = Rational::new(1, 4);
    for d in degree_pairs(p.n) {
        let (l1, l2) = eigenvalues(d, p);
        let nu12 = Rational::from(d.m) + &nu[0] + &nu[1];
        let nu123 = Rational::from(d.m + d.n) + &nu[0] + &nu[1] + &nu[2];
        let c12 = &nu12 * (&nu12 - 1) - &a12 * (&a12 + 2) * &quarter;
        let c123 = &nu123 * (&nu123 - 1) - (&a123 + 1) * (&a123 + 3) * &quarter;
        affine.record(|| format!("degree ({},{}) first", d.m, d.n), &-l1, &c12);
        affine.record(|| format!("degree ({},{}) second", d.m, d.n), &-l2, &c123);
    }
    let (c12, c123) = tensor_casimirs(p);
    let tensor: Vec<ExactTally> = degree_pairs(p.n)
        .into_par_iter()
        .map(|d| {
            let mut tally = ExactTally::new("tensor-casimir");
            let nu12 = Rational::from(d.m) + &nu[0] + &nu[1];
            let mut nu123 = Rational::from(d.m + d.n) + &nu[0] + &nu[1] + &nu[2];
            if perturb {
                nu123 += Rational::new(1, 1000);
            }
            let stacked = c12.shift_diagonal(&(&nu12 * (&nu12 - 1))).stack(&c123.shift_diagonal(&(&nu123 * (&nu123 - 1))));
            let basis = stacked.nullspace();
            let dim = Rational::from(basis.len());
            tally.record(|| format!("degree ({},{}) eigenspace dimension", d.m, d.n), &dim, &Rational::one());
            if let Some(v) = basis.first() {
                let mut expect: Vec<Rational> = simplex(p.n)
                    .into_iter()
                    .map(|(i, k)| {
                        p2_raw(d.m, d.n, i as i64, k as i64, p) / (factorial(i) * factorial(k) * factorial(p.n - i - k))
                    })
                    .collect();
                normalize_leading(&mut expect);
                for (g, (x, y)) in v.iter().zip(&expect).enumerate() {
                    tally.record(|| format!("degree ({},{}) component {g}", d.m, d.n), x, y);
                }
            }
            tally
        })
        .collect();
    let mut total = ExactTally::new("tensor-casimir");
    for t in tensor {
        total.absorb(t);
    }
    VerificationReport::new("su11", p.label(), vec![affine.finish(), total.finish()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q;

    #[test]
    fn casimir_value() {
        let m = su11_build(&q(3, 4), 6).unwrap();
        assert_eq!(m.casimir(), RationalMatrix::identity(7).scale(&q(-3, 16)));
        assert!(module_checks(&m, false).iter().all(Check::passed));
        assert!(!module_checks(&m, true)[0].passed());
    }

    #[test]
    fn commutator_rows_and_defect() {
        let m = su11_build(&q(3, 4), 5).unwrap();
        let c = m.kminus.commutator(&m.kplus);
        for n in 0..5 {
            assert_eq!(c.get(n, n), &(q(2, 1) * m.k0.get(n, n)));
        }
        assert_ne!(c.get(5, 5), &(q(2, 1) * m.k0.get(5, 5)));
    }

    #[test]
    fn rejects_nonpositive_weight() {
        assert!(su11_build(&q(0, 1), 3).is_err());
        assert!(su11_build(&q(-1, 2), 3).is_err());
    }

    #[test]
    fn tensor_eigenvectors_match_family() {
        for p in [
            BiParams::new(q(0, 1), q(0, 1), q(0, 1), 3).unwrap(),
            BiParams::new(q(1, 2), q(-1, 2), q(7, 3), 4).unwrap(),
        ] {
            let r = su11_spectrum_check(&p, false);
            assert!(r.passed(), "{:?}", r.checks);
        }
    }
}
