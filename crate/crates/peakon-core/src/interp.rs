//! One-sided cubic interpolation of grid functions.
//!
//! Each half-line is interpolated separately and the window never includes
//! the ξ = 0 node: its stored value is the gauge value, not a one-sided
//! limit, and data in Dom(L) ⊂ L² may jump there. Points beyond the
//! truncation radius read as zero.

use num_complex::Complex64;

use crate::grid::GridFunction;

/// 4-point Lagrange interpolation per half-line.
pub struct HalfLineCubic<'a> {
    f: &'a GridFunction,
}

impl<'a> HalfLineCubic<'a> {
    pub fn new(f: &'a GridFunction) -> Self {
        HalfLineCubic { f }
    }

    /// Interpolated value and derivative at x (sign of x picks the half-line).
    pub fn value_and_deriv(&self, x: f64) -> (Complex64, Complex64) {
        let spec = self.f.spec();
        let h = spec.spacing();
        let c = spec.center_index();
        let m = c; // nodes per open half-line
        let u = x.abs() / h;
        if u > m as f64 {
            return (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        }
        let pick = |k: usize| -> Complex64 {
            if x >= 0.0 {
                self.f.values()[c + k]
            } else {
                self.f.values()[c - k]
            }
        };
        // window [w, w+3] in outward node index, clamped inside [1, m−3]
        let j = u.floor() as usize;
        let w = j.saturating_sub(1).clamp(1, m.saturating_sub(3));
        let tau = u - w as f64;
        let mut val = Complex64::new(0.0, 0.0);
        let mut der = Complex64::new(0.0, 0.0);
        for k in 0..4usize {
            let mut lk = 1.0;
            let mut dlk = 0.0;
            for j2 in 0..4usize {
                if j2 == k {
                    continue;
                }
                let denom = k as f64 - j2 as f64;
                dlk = dlk * (tau - j2 as f64) / denom + lk / denom;
                lk *= (tau - j2 as f64) / denom;
            }
            let v = pick(w + k);
            val += v * lk;
            der += v * dlk;
        }
        let sign = if x >= 0.0 { 1.0 } else { -1.0 };
        (val, der * (sign / h))
    }

    pub fn value(&self, x: f64) -> Complex64 {
        self.value_and_deriv(x).0
    }
}
