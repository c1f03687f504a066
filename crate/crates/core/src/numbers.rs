//! Small integer helpers: primality, factorization, multiplicative order.

use std::fmt;

use serde::Serialize;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `(prime, exponent)` pairs in increasing prime order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeFactorization(Vec<(u64, u32)>);

impl PrimeFactorization {
    pub fn of(mut n: u64) -> Self {
        assert!(n >= 1, "factorization of zero");
        let mut out = Vec::new();
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                let mut e = 0;
                while n.is_multiple_of(d) {
                    n /= d;
                    e += 1;
                }
                out.push((d, e));
            }
            d += 1;
        }
        if n > 1 {
            out.push((n, 1));
        }
        PrimeFactorization(out)
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|&(p, _)| p)
    }

    pub fn value(&self) -> u64 {
        self.0.iter().map(|&(p, e)| p.pow(e)).product()
    }

    /// The p-part `n_p`.
    pub fn p_part(&self, p: u64) -> u64 {
        self.0.iter().find(|&&(q, _)| q == p).map_or(1, |&(q, e)| q.pow(e))
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.0.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, e)| e)
    }

    /// `Some(p)` when the number is a positive power of the single prime `p`.
    pub fn single_prime(&self) -> Option<u64> {
        match self.0.as_slice() {
            [(p, _)] => Some(*p),
            _ => None,
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }
}

impl fmt::Display for PrimeFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Least k >= 1 with a^k = 1 (mod m), or `None` when gcd(a, m) != 1.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if num_integer::gcd(a % m, m) != 1 {
        return None;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * a % m;
        k += 1;
    }
    Some(k)
}

/// Returns `Some(k)` when `n == p^k`.
pub fn log_exact(n: u64, p: u64) -> Option<u32> {
    if n == 0 || p < 2 {
        return None;
    }
    let mut k = 0;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn primes_and_orders() {
        assert!(is_prime(2) && is_prime(13) && !is_prime(1) && !is_prime(91));
        assert_eq!(multiplicative_order(6, 7), Some(2));
        assert_eq!(multiplicative_order(3, 13), Some(3));
        assert_eq!(multiplicative_order(2, 3), Some(2));
        assert_eq!(multiplicative_order(2, 4), None);
        assert_eq!(log_exact(64, 2), Some(6));
        assert_eq!(log_exact(48, 2), None);
        assert_eq!(PrimeFactorization::of(360).to_string(), "2^3 * 3^2 * 5");
        assert_eq!(PrimeFactorization::of(1).to_string(), "1");
    }

    proptest! {
        #[test]
        fn factorization_reconstructs(n in 1u64..100_000) {
            let f = PrimeFactorization::of(n);
            prop_assert_eq!(f.value(), n);
            let ps: Vec<u64> = f.primes().collect();
            prop_assert!(ps.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(ps.iter().all(|&p| is_prime(p)));
            prop_assert!(f.pairs().iter().all(|&(_, e)| e >= 1));
        }
    }
}
