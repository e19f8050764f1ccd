//! Small integer utilities: factorization, prime-power detection, Legendre symbols.

pub use num_integer::{gcd, lcm};

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// increasing prime order. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "cannot factor zero");
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// Returns `(p, m)` with `n = p^m`, `p` prime and `m >= 1`, or `None`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    match factorize(n).as_slice() {
        [(p, m)] => Some((*p, *m)),
        _ => None,
    }
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc = 1u128 % m;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Legendre symbol `(a | p)` for an odd prime `p`, via Euler's criterion.
pub fn legendre(a: u64, p: u64) -> i8 {
    debug_assert!(p > 2 && is_prime(p));
    match pow_mod(a % p, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorizations() {
        assert!(factorize(1).is_empty());
        assert_eq!(factorize(504), vec![(2, 3), (3, 2), (7, 1)]);
        assert_eq!(
            factorize(515_100),
            vec![(2, 2), (3, 1), (5, 2), (17, 1), (101, 1)]
        );
        assert_eq!(factorize(97), vec![(97, 1)]);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(101), Some((101, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(0), None);
    }

    #[test]
    fn phi_and_divisors() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(36), 12);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
    }

    #[test]
    fn legendre_mod_7() {
        let syms: Vec<i8> = (1..7).map(|a| legendre(a, 7)).collect();
        assert_eq!(syms, vec![1, 1, -1, 1, -1, -1]);
    }
}
