//! Small integer helpers.

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Distinct prime divisors by trial division, ascending.
pub fn prime_divisors(mut n: usize) -> Vec<usize> {
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

/// `Some(e)` when `n = baseᵉ`.
pub fn is_power_of(mut n: usize, base: usize) -> Option<u32> {
    if n == 0 || base < 2 {
        return None;
    }
    let mut e = 0;
    while n.is_multiple_of(base) {
        n /= base;
        e += 1;
    }
    (n == 1).then_some(e)
}

/// Exponent of `p` in `n`.
pub fn valuation(mut n: usize, p: usize) -> u32 {
    let mut v = 0;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

pub fn pow_mod(base: usize, mut exp: u64, m: usize) -> usize {
    if m == 1 {
        return 0;
    }
    let m = m as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as usize
}
