//! Small exact integer helpers.

/// Floor of the square root of `n`.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    // Newton iteration from an upper bound; never touches floating point.
    let mut x = 1u64 << (64 - n.leading_zeros()).div_ceil(2);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Returns `Some(r)` if `n == r * r`.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

/// `base^exp`, or `None` on overflow of `u128`.
pub fn checked_pow(base: u64, exp: u32) -> Option<u128> {
    (base as u128).checked_pow(exp)
}

/// Largest `r` with `r^k <= n` (k >= 1), by binary search.
pub fn kth_root_floor(n: u64, k: u32) -> u64 {
    assert!(k >= 1);
    if k == 1 || n < 2 {
        return n;
    }
    let (mut lo, mut hi) = (1u64, 1u64 << (64 / k + 1).min(63));
    // invariant: lo^k <= n < hi^k
    while checked_pow(hi, k).is_some_and(|p| p <= n as u128) {
        hi = hi.saturating_mul(2);
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        match checked_pow(mid, k) {
            Some(p) if p <= n as u128 => lo = mid,
            _ => hi = mid,
        }
    }
    lo
}

/// Returns `Some(r)` if `n == r^k`.
pub fn exact_root(n: u64, k: u32) -> Option<u64> {
    let r = kth_root_floor(n, k);
    (checked_pow(r, k) == Some(n as u128)).then_some(r)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) == 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_small_and_boundaries() {
        for n in 0..10_000u64 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n, "n = {n}");
        }
        assert_eq!(isqrt(u64::MAX), u32::MAX as u64);
        assert_eq!(isqrt((1 << 62) - 1), (1 << 31) - 1);
    }

    #[test]
    fn kth_roots() {
        assert_eq!(kth_root_floor(2_000_000, 4), 37);
        assert_eq!(kth_root_floor(1_874_161, 4), 37);
        assert_eq!(kth_root_floor(1_874_160, 4), 36);
        assert_eq!(kth_root_floor(2_000_000, 2), 1414);
        assert_eq!(kth_root_floor(0, 3), 0);
        assert_eq!(kth_root_floor(u64::MAX, 4), 65535);
        assert_eq!(exact_root(50625, 4), Some(15));
        assert_eq!(exact_root(50626, 4), None);
    }

    #[test]
    fn modular_helpers() {
        assert_eq!(pow_mod(2, 10, 1000), 24);
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(inv_mod(4, 8), None);
        assert_eq!(gcd(150, 25), 25);
    }
}
