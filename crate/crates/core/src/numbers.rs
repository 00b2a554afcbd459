//! Exact integer sequences used throughout: binomials, Catalan and Fibonacci numbers.

use num::{BigUint, One, Zero};

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Serializes a big integer as a decimal string.
pub fn serialize_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// `c_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n as u64, n as u64) / (n as u64 + 1)
}

/// Fibonacci numbers with `F_1 = F_2 = 1`, `F_0 = 0`.
pub fn fibonacci(n: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_matches_convolution_recurrence() {
        let mut c = vec![BigUint::one()];
        for n in 1..=20 {
            let next: BigUint = (0..n).map(|i| &c[i] * &c[n - 1 - i]).sum();
            c.push(next);
        }
        for (n, expected) in c.iter().enumerate() {
            assert_eq!(&catalan(n), expected, "n = {n}");
        }
        assert_eq!(catalan(10), BigUint::from(16796u32));
    }

    #[test]
    fn small_values() {
        assert_eq!(binomial(17, 3), BigUint::from(680u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        let fib: Vec<u32> = (0..10).map(|i| u32::try_from(fibonacci(i)).unwrap()).collect();
        assert_eq!(fib, vec![0, 1, 1, 2, 3, 5, 8, 13, 21, 34]);
    }
}
