//! Independent realizations of the bivariate family used to cross-check it:
//! exact kernels of the grid difference operators, a two-step factorization of
//! the overlap matrix, and Casimir operators of su(1,1) tensor products.

pub mod chain;
pub mod operators;
pub mod su11;

pub use chain::{chain_matrices, cylindrical_labels, FloatMatrix};
pub use operators::{build_operator, joint_eigenvectors, GridOperator, OperatorLabel};
pub use su11::{su11_build, su11_spectrum_check, Su11Module};

use std::cell::OnceCell;

use crate::error::Error;
use crate::hahn_bi::{overlap2, simplex, BiParams, OverlapMode};
use crate::numeric::Rational;
use crate::report::{Check, ExactTally, FloatTally, VerificationReport};
use crate::VerifyOptions;

pub const ORACLE_CHECKS: [&str; 9] = [
    "annihilate-constants",
    "boundary",
    "commute",
    "joint-eigenvectors",
    "su11-spectrum",
    "tensor-casimir",
    "chain-orthogonal",
    "chain-product",
    "overlap-unitarity",
];

fn operators(p: &BiParams, opts: &VerifyOptions) -> (GridOperator, GridOperator) {
    let skew = if opts.perturb { Rational::new(1001, 1000) } else { Rational::one() };
    (
        operators::build_operator_with(OperatorLabel::L1, p, &skew),
        operators::build_operator_with(OperatorLabel::L2, p, &skew),
    )
}

fn annihilate(l1: &GridOperator, l2: &GridOperator) -> Check {
    let mut tally = ExactTally::new("annihilate-constants");
    let ones = vec![Rational::one(); l1.matrix.cols()];
    for op in [l1, l2] {
        for (g, v) in op.matrix.mul_vec(&ones).iter().enumerate() {
            tally.record(|| format!("{:?} row {g}", op.label), v, &Rational::zero());
        }
    }
    tally.finish()
}

fn commute(l1: &GridOperator, l2: &GridOperator) -> Check {
    let mut tally = ExactTally::new("commute");
    let c = l1.matrix.commutator(&l2.matrix);
    for r in 0..c.rows() {
        for col in 0..c.cols() {
            tally.record(|| format!("entry ({r},{col})"), c.get(r, col), &Rational::zero());
        }
    }
    tally.finish()
}

fn eigen(l1: &GridOperator, l2: &GridOperator, p: &BiParams) -> Check {
    let mut tally = ExactTally::new("joint-eigenvectors");
    match joint_eigenvectors(l1, l2, p) {
        Ok(vecs) => {
            for (d, v) in vecs {
                let expect = operators::normalized_p_vector(d, p);
                for (g, (x, y)) in v.iter().zip(&expect).enumerate() {
                    tally.record(|| format!("degree ({},{}) component {g}", d.m, d.n), x, y);
                }
            }
        }
        Err(e) => tally.record(|| e.to_string(), &Rational::zero(), &Rational::one()),
    }
    tally.finish()
}

fn chain_checks(p: &BiParams, opts: &VerifyOptions) -> (Check, Check) {
    let skew = if opts.perturb { 1.001 } else { 1.0 };
    let (a, b) = chain::chain_matrices_with(p, skew);
    let mut orth = FloatTally::new("chain-orthogonal", opts.tol);
    orth.record(|| "cart_to_cyl".to_string(), a.orthogonality_defect(), 0.0);
    orth.record(|| "cyl_to_sph".to_string(), b.orthogonality_defect(), 0.0);
    let mut prod = FloatTally::new("chain-product", opts.tol);
    let c = a.matmul(&b);
    let o = overlap2(p, OverlapMode::Float).to_f64();
    let cols = c.cols;
    for (idx, (x, y)) in c.data.iter().zip(&o).enumerate() {
        prod.record(|| format!("entry ({},{})", idx / cols, idx % cols), *x, *y);
    }
    (orth.finish(), prod.finish())
}

/// `‖OᵀO − I‖` and `‖OOᵀ − I‖` for the float overlap matrix.
pub fn overlap_unitarity(p: &BiParams, opts: &VerifyOptions) -> Check {
    let n = simplex(p.n).len();
    let mut o = FloatMatrix { rows: n, cols: n, data: overlap2(p, OverlapMode::Float).to_f64() };
    if opts.perturb {
        o.data[0] *= 1.001;
    }
    let mut tally = FloatTally::new("overlap-unitarity", opts.tol);
    tally.record(|| "columns".to_string(), o.orthogonality_defect(), 0.0);
    tally.record(|| "rows".to_string(), o.transpose().orthogonality_defect(), 0.0);
    tally.finish()
}

/// Results shared by pairs of checks, computed on first use.
struct Shared<'a> {
    p: &'a BiParams,
    opts: &'a VerifyOptions,
    ops: OnceCell<(GridOperator, GridOperator)>,
    chain: OnceCell<(Check, Check)>,
    su11: OnceCell<VerificationReport>,
}

impl Shared<'_> {
    fn ops(&self) -> &(GridOperator, GridOperator) {
        self.ops.get_or_init(|| operators(self.p, self.opts))
    }

    fn chain(&self) -> &(Check, Check) {
        self.chain.get_or_init(|| chain_checks(self.p, self.opts))
    }

    fn su11(&self, idx: usize) -> Check {
        self.su11.get_or_init(|| su11_spectrum_check(self.p, self.opts.perturb)).checks[idx].clone()
    }
}

fn run_check(name: &str, sh: &Shared) -> Check {
    let (p, opts) = (sh.p, sh.opts);
    match name {
        "annihilate-constants" => annihilate(&sh.ops().0, &sh.ops().1),
        "boundary" => operators::boundary_check(p),
        "commute" => commute(&sh.ops().0, &sh.ops().1),
        "joint-eigenvectors" => eigen(&sh.ops().0, &sh.ops().1, p),
        "su11-spectrum" => sh.su11(0),
        "tensor-casimir" => sh.su11(1),
        "chain-orthogonal" => sh.chain().0.clone(),
        "chain-product" => sh.chain().1.clone(),
        "overlap-unitarity" => overlap_unitarity(p, opts),
        _ => unreachable!("validated check name"),
    }
}

/// Runs one named oracle check, or all of them when `check` is `None`.
pub fn verify_oracle(check: Option<&str>, p: &BiParams, opts: &VerifyOptions) -> Result<VerificationReport, Error> {
    let names: Vec<&str> = match check {
        Some(c) if ORACLE_CHECKS.contains(&c) => vec![c],
        Some(c) => return Err(Error::UnknownCheck(c.to_string())),
        None => ORACLE_CHECKS.to_vec(),
    };
    verify_oracle_checks(&names, p, opts)
}

/// Runs several named checks, sharing operators and factorizations between them.
pub fn verify_oracle_checks(names: &[&str], p: &BiParams, opts: &VerifyOptions) -> Result<VerificationReport, Error> {
    if let Some(c) = names.iter().find(|c| !ORACLE_CHECKS.contains(c)) {
        return Err(Error::UnknownCheck(c.to_string()));
    }
    let sh = Shared { p, opts, ops: OnceCell::new(), chain: OnceCell::new(), su11: OnceCell::new() };
    let checks = names.iter().map(|c| run_check(c, &sh)).collect();
    Ok(VerificationReport::new("oracle", p.label(), checks))
}

/// Module-level su(1,1) checks for one weight.
pub fn verify_su11_module(nu: &Rational, nmax: usize, opts: &VerifyOptions) -> Result<VerificationReport, Error> {
    let m = su11_build(nu, nmax)?;
    Ok(VerificationReport::new("su11", format!("nu={nu} nmax={nmax}"), su11::module_checks(&m, opts.perturb)))
}
