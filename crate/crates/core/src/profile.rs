//! The smooth step profile used by every cutoff and partition function.
//!
//! Built from the classical mollifier ingredient `t -> exp(-1/t)`: the step
//! is `S(t) = phi(t) / (phi(t) + phi(1-t))`, which is C-infinity, equals 0
//! for `t <= 0` and 1 for `t >= 1`, and has all derivatives vanishing at the
//! endpoints. Radial cutoffs rescale it to a transition window
//! `[r_inner, r_outer]`.

use std::sync::OnceLock;

#[inline]
fn phi(t: f64) -> f64 {
    if t > 0.0 {
        (-1.0 / t).exp()
    } else {
        0.0
    }
}

/// C-infinity step: 0 for `t <= 0`, 1 for `t >= 1`, strictly increasing
/// in between.
#[inline]
pub fn smoothstep(t: f64) -> f64 {
    if t <= 0.0 {
        0.0
    } else if t >= 1.0 {
        1.0
    } else {
        let a = phi(t);
        let b = phi(1.0 - t);
        a / (a + b)
    }
}

/// Radial falloff: 1 for `d <= r_inner`, 0 for `d >= r_outer`, smooth
/// transition in between. Requires `r_inner < r_outer`.
#[inline]
pub fn falloff(d: f64, r_inner: f64, r_outer: f64) -> f64 {
    debug_assert!(r_inner < r_outer);
    smoothstep((r_outer - d) / (r_outer - r_inner))
}

/// Complement of [`falloff`]: 0 inside, 1 outside.
#[inline]
pub fn rise(d: f64, r_inner: f64, r_outer: f64) -> f64 {
    1.0 - falloff(d, r_inner, r_outer)
}

/// Sup of |d^k/dt^k smoothstep| over [0,1] for k = 1, 2, 3, computed once by
/// a dense finite-difference scan. Used for gradient bounds of cutoffs and
/// for derivative bounds of manufactured test data.
pub fn step_derivative_sup(k: usize) -> f64 {
    assert!((1..=3).contains(&k), "only k = 1..3 supported");
    static SUPS: OnceLock<[f64; 3]> = OnceLock::new();
    SUPS.get_or_init(|| {
        let n = 200_000usize;
        let dt = 1.0 / n as f64;
        let mut sups = [0.0f64; 3];
        // central differences of increasing order on the open interval
        for i in 2..=(n - 2) {
            let t = i as f64 * dt;
            let f = |j: i64| smoothstep(t + j as f64 * dt);
            let d1 = (f(1) - f(-1)) / (2.0 * dt);
            let d2 = (f(1) - 2.0 * f(0) + f(-1)) / (dt * dt);
            let d3 = (f(2) - 2.0 * f(1) + 2.0 * f(-1) - f(-2)) / (2.0 * dt * dt * dt);
            sups[0] = sups[0].max(d1.abs());
            sups[1] = sups[1].max(d2.abs());
            sups[2] = sups[2].max(d3.abs());
        }
        sups
    })[k - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_endpoints_and_monotonicity() {
        assert_eq!(smoothstep(-0.5), 0.0);
        assert_eq!(smoothstep(0.0), 0.0);
        assert_eq!(smoothstep(1.0), 1.0);
        assert_eq!(smoothstep(2.0), 1.0);
        let mut prev = 0.0;
        for i in 0..=1000 {
            let v = smoothstep(i as f64 / 1000.0);
            assert!(v >= prev - 1e-15);
            assert!((0.0..=1.0).contains(&v));
            prev = v;
        }
        // symmetry S(t) + S(1-t) = 1
        for i in 1..100 {
            let t = i as f64 / 100.0;
            assert!((smoothstep(t) + smoothstep(1.0 - t) - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn falloff_regions() {
        assert_eq!(falloff(0.1, 0.2, 0.4), 1.0);
        assert_eq!(falloff(0.2, 0.2, 0.4), 1.0);
        assert_eq!(falloff(0.4, 0.2, 0.4), 0.0);
        assert_eq!(falloff(0.7, 0.2, 0.4), 0.0);
        let mid = falloff(0.3, 0.2, 0.4);
        assert!(mid > 0.0 && mid < 1.0);
    }

    #[test]
    fn derivative_sups_are_stable() {
        // The first-derivative sup of the two-phi smoothstep is slightly
        // under 2; pin loose brackets so regressions are caught.
        let d1 = step_derivative_sup(1);
        assert!(d1 > 1.5 && d1 < 2.5, "d1 = {d1}");
        let d2 = step_derivative_sup(2);
        assert!(d2 > 4.0 && d2 < 12.0, "d2 = {d2}");
        let d3 = step_derivative_sup(3);
        assert!(d3 > 20.0 && d3 < 120.0, "d3 = {d3}");
    }
}
