//! Rising factorials and counting coefficients.

use num_bigint::BigInt;
use num_traits::One;

use super::Rational;
use crate::error::Error;

/// Rising factorial `(a)_n = a(a+1)…(a+n−1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut t = a.clone();
    for _ in 0..n {
        if t.is_zero() {
            return Rational::zero();
        }
        acc *= &t;
        t += 1;
    }
    acc
}

/// `(a)_n` for an integer base.
pub fn pochhammer_int(a: i64, n: usize) -> Rational {
    let mut acc = BigInt::one();
    for j in 0..n as i64 {
        let t = a + j;
        if t == 0 {
            return Rational::zero();
        }
        acc *= t;
    }
    Rational::from(acc)
}

pub fn factorial(n: usize) -> Rational {
    pochhammer_int(1, n)
}

/// `C(n, k)` for `0 ≤ k ≤ n`, zero otherwise.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    pochhammer_int((n - k + 1) as i64, k) / factorial(k)
}

/// `N! / (parts! · (N − Σparts)!)`.
pub fn multinomial(n: usize, parts: &[usize]) -> Result<Rational, Error> {
    let used: usize = parts.iter().sum();
    if used > n {
        return Err(Error::Invalid(format!("parts sum {used} exceeds {n}")));
    }
    let mut den = factorial(n - used);
    for &p in parts {
        den *= factorial(p);
    }
    Ok(factorial(n) / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q;

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(&q(3, 1), 0), q(1, 1));
        assert_eq!(pochhammer(&q(1, 2), 3), q(15, 8));
        assert_eq!(pochhammer(&q(-2, 1), 3), q(0, 1));
        assert_eq!(pochhammer_int(-2, 2), q(2, 1));
        assert_eq!(pochhammer_int(-3, 5), q(0, 1));
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(2, &[0, 0]).unwrap(), q(1, 1));
        assert_eq!(multinomial(2, &[1, 0]).unwrap(), q(2, 1));
        assert_eq!(multinomial(4, &[2, 1]).unwrap(), q(12, 1));
        assert!(multinomial(2, &[2, 1]).is_err());
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), q(10, 1));
        assert_eq!(binomial(5, 6), q(0, 1));
        assert_eq!(binomial(0, 0), q(1, 1));
    }
}
