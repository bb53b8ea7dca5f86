//! Binomial coefficients, exact and mod 2.

/// `C(n, k)`, zero unless `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> u128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// `C(n, k) mod 2` by Lucas' theorem: odd iff the bits of `k` are a subset of
/// the bits of `n`.
pub fn binom_mod2(n: i64, k: i64) -> bool {
    n >= 0 && k >= 0 && k <= n && (k & !n) == 0
}
