use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(n, k)` with the convention that it vanishes unless `n >= k >= 0`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    // acc holds C(n - k + i, i) after step i, so every division is exact.
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Machine-word binomial for counting monomials; `None` on overflow.
pub fn binom_usize(n: usize, k: usize) -> Option<usize> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        acc = acc * (n as u128 - k as u128 + i) / i;
        if acc > usize::MAX as u128 {
            return None;
        }
    }
    Some(acc as usize)
}
