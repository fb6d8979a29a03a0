//! Terminating generalized hypergeometric series.

use super::Rational;
use crate::error::Error;

/// Exact value of the terminating series `pFq(numerators; denominators; arg)`.
///
/// The series stops at the smallest `n` for which some numerator equals `−n`;
/// that cutoff is fixed before any cancellation. Numerator/denominator entries
/// that are identical cancel pairwise, since their Pochhammer ratio is 1 on the
/// whole range. A surviving denominator that vanishes within the range is an error.
pub fn pfq_terminating(
    numerators: &[Rational],
    denominators: &[Rational],
    arg: &Rational,
) -> Result<Rational, Error> {
    let cutoff = numerators
        .iter()
        .filter_map(Rational::nonpositive_integer)
        .min()
        .ok_or(Error::NonTerminating)? as usize;

    let mut nums: Vec<Rational> = numerators.to_vec();
    let mut dens: Vec<Rational> = Vec::with_capacity(denominators.len());
    for d in denominators {
        match nums.iter().position(|a| a == d) {
            Some(pos) => {
                nums.swap_remove(pos);
            }
            None => dens.push(d.clone()),
        }
    }
    for d in &dens {
        if let Some(m) = d.nonpositive_integer() {
            if (m as usize) < cutoff {
                return Err(Error::VanishingDenominator(d.to_string()));
            }
        }
    }

    let mut term = Rational::one();
    let mut sum = Rational::one();
    for j in 0..cutoff {
        let mut num = arg.clone();
        for a in &nums {
            num *= a + j as i64;
        }
        if num.is_zero() {
            break;
        }
        let mut den = Rational::from(j + 1);
        for b in &dens {
            den *= b + j as i64;
        }
        term = term * num / den;
        sum += &term;
    }
    Ok(sum)
}
