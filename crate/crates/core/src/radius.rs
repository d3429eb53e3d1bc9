//! Decoding radii of the form `(n - √D) / 2^j`.
//!
//! Admissibility of an integer `τ` is decided exactly by squaring; the
//! floating-point value is only reported, and is correctly rounded.

use std::cmp::Ordering;

use num_bigint::BigInt;

/// `n - √(n(n-d))`, the Johnson radius of a length `n`, distance `d` code.
pub fn johnson_radius(n: usize, d: usize) -> f64 {
    root_radius(n as i128, (n * (n - d.min(n))) as i128, 0)
}

/// `n/2 - ½√(n(n-4t-2))`, the binary Johnson radius for design distance
/// `2t + 1`; `n/2` when the discriminant is negative.
pub fn binary_johnson_radius(n: usize, t: usize) -> f64 {
    let disc = n as i128 * (n as i128 - 4 * t as i128 - 2);
    if disc < 0 {
        return n as f64 / 2.0;
    }
    root_radius(n as i128, disc, 1)
}

/// Whether `τ < n - √(n(n-d))`.
pub fn within_johnson(n: usize, d: usize, tau: usize) -> bool {
    let (n, d, tau) = (n as i128, d.min(n) as i128, tau as i128);
    tau < n && (n - tau) * (n - tau) > n * (n - d)
}

/// Whether `τ < n/2 - ½√(n(n-4t-2))`.
pub fn within_binary_johnson(n: usize, t: usize, tau: usize) -> bool {
    let (n, t, tau) = (n as i128, t as i128, tau as i128);
    let u = n - 2 * tau;
    u > 0 && u * u > n * (n - 4 * t - 2)
}

/// Largest admissible `τ` for [`within_johnson`], if any.
pub fn johnson_max_tau(n: usize, d: usize) -> Option<usize> {
    (0..n).rev().find(|&tau| within_johnson(n, d, tau))
}

/// Largest admissible `τ` for [`within_binary_johnson`], if any.
pub fn binary_johnson_max_tau(n: usize, t: usize) -> Option<usize> {
    (0..n).rev().find(|&tau| within_binary_johnson(n, t, tau))
}

/// `x = m·2^e` exactly, for finite `x`.
fn dyadic(x: f64) -> (BigInt, i32) {
    let bits = x.to_bits();
    let sign = if bits >> 63 == 1 { -1 } else { 1 };
    let exp = ((bits >> 52) & 0x7ff) as i32;
    let frac = bits & ((1u64 << 52) - 1);
    let (m, e) = if exp == 0 {
        (frac, -1074)
    } else {
        (frac | (1u64 << 52), exp - 1075)
    };
    (BigInt::from(m) * sign, e)
}

/// Compares `num·2^e` against `(n - √disc) / 2^j`.
fn cmp_with_root(num: &BigInt, e: i32, n: i128, disc: i128, j: u32) -> Ordering {
    let (num, shift) = if e >= 0 {
        (num << e as u32, 0u32)
    } else {
        (num.clone(), (-e) as u32)
    };
    // v ≶ (n - √D)/2^j  ⇔  √D ≶ u := n - 2^j·v, with u = unum / 2^shift.
    let unum = (BigInt::from(n) << shift) - (num << j);
    if unum < BigInt::from(0) {
        return Ordering::Greater;
    }
    let lhs = BigInt::from(disc) << (2 * shift);
    let rhs = &unum * &unum;
    // v < R iff D < u².
    rhs.cmp(&lhs).reverse()
}

/// Exact `(a + b) / 2` as `num·2^e`.
fn midpoint(a: f64, b: f64) -> (BigInt, i32) {
    let ((ma, ea), (mb, eb)) = (dyadic(a), dyadic(b));
    let e = ea.min(eb);
    let num = (ma << (ea - e) as u32) + (mb << (eb - e) as u32);
    (num, e - 1)
}

/// Correctly rounded `(n - √disc) / 2^j` for `disc >= 0`.
fn root_radius(n: i128, disc: i128, j: u32) -> f64 {
    let scale = (1u32 << j) as f64;
    let mut x = (n as f64 - (disc as f64).sqrt()) / scale;
    loop {
        let (lo, lo_e) = midpoint(x.next_down(), x);
        let (hi, hi_e) = midpoint(x, x.next_up());
        if cmp_with_root(&lo, lo_e, n, disc, j) == Ordering::Greater {
            x = x.next_down();
        } else if cmp_with_root(&hi, hi_e, n, disc, j) == Ordering::Less {
            x = x.next_up();
        } else {
            return x;
        }
    }
}
