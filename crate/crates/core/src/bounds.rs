//! Edge-density thresholds and approximation constants, in exact integers.

/// `b(c, k, n) = c²k + n(c − 1)`: bipartite graphs with this many edges admit a
/// `(c, k)` coloring when `c` is a power of two.
pub fn bipartite(c: usize, k: usize, n: usize) -> u128 {
    let (c, k, n) = (c as u128, k as u128, n as u128);
    c * c * k + n * (c - 1)
}

/// `f(c, k, n) = (2c − 1)ck + 2n(c − 1)`: the same for arbitrary graphs.
pub fn general(c: usize, k: usize, n: usize) -> u128 {
    let (c, k, n) = (c as u128, k as u128, n as u128);
    (2 * c - 1) * c * k + 2 * n * (c - 1)
}

/// Kernel edge factor: `K(1) = 1`, `K(c) = 16c² − 6c`.
pub fn kernel_factor(c: usize) -> u128 {
    let c = c as u128;
    if c <= 1 {
        1
    } else {
        16 * c * c - 6 * c
    }
}

/// `P(c) = prod_{i=1..c} K(i)/i`. Every factor is an integer (`K(i)/i = 16i − 6`
/// for `i >= 2`). `None` on overflow.
pub fn p(c: usize) -> Option<u128> {
    (2..=c as u128).try_fold(1u128, |acc, i| acc.checked_mul(16 * i - 6))
}

/// Guaranteed ratio `2^(c−1)·P(c)` of the general approximation.
pub fn approx_ratio(c: usize) -> Option<u128> {
    let shift = u32::try_from(c.checked_sub(1)?).ok()?;
    p(c)?.checked_mul(1u128.checked_shl(shift)?)
}

/// Smallest power of two `>= c`.
pub fn next_pow2(c: usize) -> usize {
    c.max(1).next_power_of_two()
}
