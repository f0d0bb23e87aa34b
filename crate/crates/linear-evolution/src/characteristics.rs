//! Closed-form characteristics of the linearized flow.
//!
//! The curves q(s, t) solve dq/dt = φ²(q) − 1 with q(s, 0) = s. The transport
//! speed is negative off the peak, so every characteristic drifts left: on
//! ξ > 0 toward the peak, on ξ < 0 toward −∞, and the half-lines never mix.
//! Explicitly
//!
//!   q(s,t) = ½ ln[1 + (e^{2s} − 1)e^{−2t}]   (s > 0)
//!   q(0,t) = 0
//!   q(s,t) = −½ ln[1 + (e^{−2s} − 1)e^{2t}]  (s < 0)
//!
//! and the label map is inverted in closed form by running time backwards:
//! q(·, −t). Both are evaluated through softplus/ln-expm1 so that arguments
//! like e^{2s} never overflow and small-s accuracy is preserved.
//!
//! Along the characteristics the amplitude V(s,t) = ṽ(q(s,t), t) satisfies
//! dV/dt = φφ′(q)·V, giving V = 𝔳₀(s)/√D with the squared denominators
//!
//!   D₊(s,t) = 1 + (e^{2t} − 1)e^{−2s} = (1 − e^{−2s}) + e^{2(t−s)}
//!   D₋(s,t) = 1 + (e^{−2t} − 1)e^{2s} = (1 − e^{2s}) + e^{2(s−t)}
//!
//! written on the right as sums of positive terms (no cancellation). The
//! Jacobian of the label map is q_s = 1/D, so chain-rule derivatives and
//! change-of-variable integrals need nothing beyond D.

/// ln(e^x − 1) for x > 0. expm1 is relative-accurate for any non-overflowing
/// x, and ln of a relative-accurate value has absolute error ~eps, which is
/// what the softplus composition needs.
fn ln_expm1(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x > 700.0 {
        x + (-(-x).exp()).ln_1p()
    } else {
        x.exp_m1().ln()
    }
}

/// log(1 + e^z) without overflow.
fn softplus(z: f64) -> f64 {
    if z <= 0.0 {
        z.exp().ln_1p()
    } else {
        z + (-z).exp().ln_1p()
    }
}

/// q(s, τ) for signed time τ (τ < 0 runs the flow backwards).
fn map_signed(s: f64, tau: f64) -> f64 {
    if s == 0.0 || tau == 0.0 {
        return s;
    }
    if s > 0.0 {
        0.5 * softplus(ln_expm1(2.0 * s) - 2.0 * tau)
    } else {
        -0.5 * softplus(ln_expm1(-2.0 * s) + 2.0 * tau)
    }
}

/// Characteristic position q(s, t) of the label s after time t ≥ 0.
pub fn characteristic_map(s: f64, t: f64) -> f64 {
    debug_assert!(t >= 0.0, "time must be nonnegative");
    map_signed(s, t)
}

/// Label s whose characteristic sits at ξ after time t: the inverse of
/// `characteristic_map` in s, computed by the same closed form with t ↦ −t.
pub fn characteristic_inverse(xi: f64, t: f64) -> f64 {
    debug_assert!(t >= 0.0, "time must be nonnegative");
    map_signed(xi, -t)
}

/// Squared amplitude denominator on the label half-line s > 0.
pub fn d_squared_plus(s: f64, t: f64) -> f64 {
    -(-2.0 * s).exp_m1() + (2.0 * (t - s)).exp()
}

/// Squared amplitude denominator on the label half-line s < 0 (also the
/// correct 0⁻ limit at s = 0).
pub fn d_squared_minus(s: f64, t: f64) -> f64 {
    -(2.0 * s).exp_m1() + (2.0 * (s - t)).exp()
}

fn d_squared(s: f64, t: f64) -> f64 {
    if s > 0.0 {
        d_squared_plus(s, t)
    } else {
        d_squared_minus(s, t)
    }
}

/// V(s,t)/𝔳₀(s) = 1/√D.
pub fn amplitude_factor(s: f64, t: f64) -> f64 {
    1.0 / d_squared(s, t).sqrt()
}

/// ∂q/∂s = 1/D > 0: the label map is a diffeomorphism on each half-line.
pub fn label_jacobian(s: f64, t: f64) -> f64 {
    1.0 / d_squared(s, t)
}

/// The factor r = k/D with k the t-dependent part of D, entering the
/// chain-rule derivative ṽ_ξ(q(s,t), t) = √D·(𝔳₀′(s) + r·𝔳₀(s)).
pub fn derivative_mix_factor(s: f64, t: f64) -> f64 {
    if s > 0.0 {
        let k = (2.0 * t).exp_m1() * (-2.0 * s).exp();
        if k.is_infinite() {
            1.0
        } else {
            k / (1.0 + k)
        }
    } else {
        let k = -(-2.0 * t).exp_m1() * (2.0 * s).exp();
        k / d_squared_minus(s, t)
    }
}
