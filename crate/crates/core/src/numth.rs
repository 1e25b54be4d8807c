//! Small integer helpers: primality, factorization, gcd/lcm, Euler phi.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

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

/// Prime factorization as ascending `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
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
    out
}

/// Ascending list of the primes dividing `n`.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Largest divisor of `n` whose prime factors all lie in `primes`.
pub fn pi_part(n: u64, primes: &[u64]) -> u64 {
    factorize(n)
        .into_iter()
        .filter(|(p, _)| primes.contains(p))
        .map(|(p, e)| p.pow(e))
        .product()
}

/// Full power of `p` dividing `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    pi_part(n, &[p])
}

pub fn is_power_of(n: u64, p: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Units of Z/n in ascending order (`[0]` for n = 1, where 0 is the unit).
pub fn units_mod(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|&k| gcd(k, n) == 1).collect()
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1 % m;
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

/// Multiplicative order of `a` modulo `m`, `None` when `a` is not a unit.
pub fn mult_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a % m, m) != 1 {
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

/// Inverse of `a` modulo `m` when it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (g, x, _) = ext_gcd(a as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i128) as u64)
}

pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Least generator of the cyclic group (Z/p)^*.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    (2..p)
        .find(|&r| mult_order(r, p) == Some(p - 1))
        .expect("prime modulus has a primitive root")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_and_parts() {
        assert_eq!(factorize(4200), vec![(2, 3), (3, 1), (5, 2), (7, 1)]);
        assert_eq!(pi_part(4200, &[3, 7]), 21);
        assert_eq!(pi_part(4200, &[2, 5]), 200);
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(p_part(24, 5), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(1), 1);
    }

    #[test]
    fn modular_helpers() {
        assert_eq!(mult_order(2, 5), Some(4));
        assert_eq!(mult_order(2, 7), Some(3));
        assert_eq!(mult_order(2, 4), None);
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(5), 2);
        assert_eq!(units_mod(12), vec![1, 5, 7, 11]);
    }
}
