//! Prime factorization helpers for group orders.

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

/// `D(n)`: the distinct primes dividing `n`, ascending.
pub fn prime_support(mut n: u64) -> Vec<u64> {
    assert!(n >= 1, "prime support of 0");
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `rad(n)`: product of the distinct primes dividing `n`.
pub fn radical(n: u64) -> u64 {
    prime_support(n).into_iter().product()
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    assert!(n >= 1 && p >= 2);
    let mut out = 1;
    while n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

/// Product of the `p`-parts of `n` over `p ∈ pi`.
pub fn pi_part(n: u64, pi: &[u64]) -> u64 {
    pi.iter().map(|&p| p_part(n, p)).product()
}

/// No prime of `pi` divides `n`.
pub fn is_pi_prime_number(n: u64, pi: &[u64]) -> bool {
    pi.iter().all(|&p| !n.is_multiple_of(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radicals() {
        assert_eq!(radical(12), 6);
        assert_eq!(radical(1), 1);
        assert_eq!(radical(360), 30);
        assert_eq!(prime_support(360), vec![2, 3, 5]);
        assert!(prime_support(1).is_empty());
    }

    #[test]
    fn parts() {
        assert_eq!(p_part(60, 2), 4);
        assert_eq!(p_part(60, 7), 1);
        assert_eq!(pi_part(360, &[2, 5]), 40);
        assert!(is_prime(7) && !is_prime(1) && !is_prime(9));
    }
}
