//! Burning-number upper bounds, all in exact integer arithmetic.

/// Smallest `q` with `q * q >= x`.
pub fn ceil_sqrt(x: u64) -> u64 {
    let r = x.isqrt();
    if r * r == x {
        r
    } else {
        r + 1
    }
}

/// Schedule length for which the decomposition is guaranteed to cover a tree
/// of order `n`: the smallest `k >= 1` with `3k^2 - 16k >= 4n`.
///
/// Returns `None` for `n == 0`.
pub fn burning_bound(n: u64) -> Option<u64> {
    if n == 0 {
        return None;
    }
    let k = burning_bound_search(n);
    debug_assert_eq!(k, burning_bound_closed_form(n));
    Some(k)
}

/// Minimal `k` with `3k^2 - 16k >= 4n`, found by stepping from an integer
/// square-root estimate.
pub fn burning_bound_search(n: u64) -> u64 {
    let fits = |k: u64| 3 * k * k >= 16 * k + 4 * n;
    // 3k^2 >= 4n gives a lower estimate that never overshoots the answer.
    let mut k = ((4 * n) / 3).isqrt().max(1);
    while k > 1 && fits(k - 1) {
        k -= 1;
    }
    while !fits(k) {
        k += 1;
    }
    k
}

/// `ceil((sqrt(12n + 64) + 8) / 3)`. With `q = ceil(sqrt(12n + 64))`, the
/// integer `3k - 8` is at least the real root exactly when it is at least `q`.
pub fn burning_bound_closed_form(n: u64) -> u64 {
    let q = ceil_sqrt(12 * n + 64);
    (q + 8).div_ceil(3)
}

/// `ceil((sqrt(24n + 33) - 3) / 4)`, the previously best known bound.
pub fn land_lu_bound(n: u64) -> u64 {
    let q = ceil_sqrt(24 * n + 33);
    // sqrt(24n + 33) > 3, so the result is at least 1.
    (q - 3).div_ceil(4)
}

/// `ceil((sqrt(8n + 1) + 1) / 2)`, the schedule length for which the
/// elementary one-ancestor-per-radius scheme is guaranteed to cover.
pub fn elementary_bound(n: u64) -> u64 {
    let q = ceil_sqrt(8 * n + 1);
    (q + 1).div_ceil(2)
}

/// Reference values printed next to the new bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReferenceBounds {
    pub land_lu: u64,
    pub ceil_sqrt: u64,
}

pub fn reference_bounds(n: u64) -> ReferenceBounds {
    ReferenceBounds {
        land_lu: land_lu_bound(n),
        ceil_sqrt: ceil_sqrt(n),
    }
}
