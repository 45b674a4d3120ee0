//! Hulthen barrier above the peak, via products of Gauss hypergeometric
//! functions evaluated at the screening parameter `q`.
//!
//! The dispersion relations `k² = E² − m²` and `p² = (E + V0/q)² − m²` are
//! kept exactly as they appear in the closed-form amplitudes, even though
//! they have relativistic form.

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::math;
use crate::physics::ScatteringAmplitudes;
use crate::potentials::Hulthen;
use crate::specfun::{gauss_2f1, SeriesControl};

/// The derived parameters `μ = ik/a`, `ν = ip/a`, `λ = iV0/(aq)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HulthenParams {
    pub mu: Complex,
    pub nu: Complex,
    pub lambda: Complex,
    pub p: f64,
    pub k: f64,
    pub energy: f64,
    pub mass: f64,
    pub v0: f64,
    pub q: f64,
    pub a: f64,
}

impl HulthenParams {
    pub fn new(h: &Hulthen, energy: f64, mass: f64) -> Result<Self> {
        let h = Hulthen::new(h.v0, h.a, h.q)?;
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::InvalidInput("mass must be positive"));
        }
        if !(energy.is_finite() && energy > mass) {
            return Err(Error::InvalidEnergy(energy));
        }
        let k = math::sqrt((energy - mass) * (energy + mass));
        let shifted = energy + h.v0 / h.q;
        let p = math::sqrt((shifted - mass) * (shifted + mass));
        Ok(HulthenParams {
            mu: Complex::imag(k / h.a),
            nu: Complex::imag(p / h.a),
            lambda: Complex::imag(h.v0 / (h.a * h.q)),
            p,
            k,
            energy,
            mass,
            v0: h.v0,
            q: h.q,
            a: h.a,
        })
    }
}

/// The six distinct hypergeometric factors, each appearing twice in the
/// amplitudes.
struct Factors {
    /// F(1+λ−μ−ν, 1+λ−μ+ν; 2−2μ; q)
    f_plus_lam_minus_mu_shift: Complex,
    /// F(λ+μ−ν, λ+μ+ν; 1+2μ; q)
    f_lam_plus_mu: Complex,
    /// F(1+λ+μ−ν, 1+λ+μ+ν; 2+2μ; q)
    f_lam_plus_mu_shift: Complex,
    /// F(λ−μ−ν, λ−μ+ν; 1−2μ; q)
    f_lam_minus_mu: Complex,
    /// F(1−λ−μ−ν, 1−λ−μ+ν; 2−2μ; q)
    f_neg_lam_minus_mu_shift: Complex,
    /// F(−λ−μ−ν, −λ−μ+ν; 1−2μ; q)
    f_neg_lam_minus_mu: Complex,
}

impl Factors {
    fn new(hp: &HulthenParams, ctrl: &SeriesControl) -> Result<Self> {
        let (lam, mu, nu, q) = (hp.lambda, hp.mu, hp.nu, hp.q);
        let f = |a: Complex, b: Complex, c: Complex| gauss_2f1(a, b, c, q, ctrl);
        Ok(Factors {
            f_plus_lam_minus_mu_shift: f(1.0 + lam - mu - nu, 1.0 + lam - mu + nu, 2.0 - 2.0 * mu)?,
            f_lam_plus_mu: f(lam + mu - nu, lam + mu + nu, 1.0 + 2.0 * mu)?,
            f_lam_plus_mu_shift: f(1.0 + lam + mu - nu, 1.0 + lam + mu + nu, 2.0 + 2.0 * mu)?,
            f_lam_minus_mu: f(lam - mu - nu, lam - mu + nu, 1.0 - 2.0 * mu)?,
            f_neg_lam_minus_mu_shift: f(1.0 - lam - mu - nu, 1.0 - lam - mu + nu, 2.0 - 2.0 * mu)?,
            f_neg_lam_minus_mu: f(-lam - mu - nu, -lam - mu + nu, 1.0 - 2.0 * mu)?,
        })
    }
}

/// Transmission and reflection amplitudes for `E > m` above the Hulthen
/// barrier, transcribed term by term from the closed form.
pub fn hulthen_amplitudes(
    h: &Hulthen,
    energy: f64,
    mass: f64,
    ctrl: &SeriesControl,
) -> Result<ScatteringAmplitudes> {
    let hp = HulthenParams::new(h, energy, mass)?;
    let (lam, mu, nu, q) = (hp.lambda, hp.mu, hp.nu, hp.q);

    // c-parameters 1 ± 2μ, 2 ± 2μ must avoid the poles of the series.
    for c in [1.0 - 2.0 * mu, 2.0 - 2.0 * mu] {
        if c.im == 0.0 && math::is_non_positive_integer(c.re) {
            return Err(Error::Pole);
        }
    }
    let fs = Factors::new(&hp, ctrl)?;

    let two_mu = 2.0 * mu;
    let one_plus = 1.0 + two_mu;
    let one_minus = 1.0 - two_mu;
    // (λ+μ)² − ν² and (λ−μ)² − ν²
    let sum_sq = lam * lam + 2.0 * lam * mu + mu * mu - nu * nu;
    let diff_sq = lam * lam - 2.0 * lam * mu + mu * mu - nu * nu;

    let t_term1 = q * one_plus * diff_sq * fs.f_plus_lam_minus_mu_shift * fs.f_lam_plus_mu;
    let t_term2 = q * one_minus * sum_sq * fs.f_lam_plus_mu_shift * fs.f_lam_minus_mu;
    let t_term3 = one_minus * two_mu * one_plus * fs.f_lam_plus_mu * fs.f_lam_minus_mu;
    let t_num = t_term1 - t_term2 - t_term3;

    let d_term1 = q * sum_sq * fs.f_neg_lam_minus_mu_shift * fs.f_lam_minus_mu;
    let d_term2 = q * diff_sq * fs.f_plus_lam_minus_mu_shift * fs.f_neg_lam_minus_mu;
    let d_term3 = two_mu * one_minus * fs.f_lam_minus_mu * fs.f_neg_lam_minus_mu;
    let den = d_term1 + d_term2 - d_term3;

    let ln_q = math::ln(q);
    // (1−q)^{2λ} q^{2μ}
    let t_pre = (2.0 * lam).exp_base(1.0 - q) * (two_mu * ln_q).exp() / one_plus;
    let t = t_pre * t_num / den;

    let r_num = one_plus * fs.f_lam_plus_mu * fs.f_neg_lam_minus_mu_shift
        + one_minus * fs.f_lam_plus_mu_shift * fs.f_neg_lam_minus_mu;
    let flux = math::sqrt((hp.energy + hp.k) / (hp.energy - hp.k));
    // −q^{1+2μ} ((λ+μ)² − ν²) / (1+2μ) · √((E+k)/(E−k))
    let r_pre = -(two_mu * ln_q).exp() * q * sum_sq / one_plus * flux;
    let r = r_pre * r_num / den;

    Ok(ScatteringAmplitudes { t, r, k_in: hp.k, k_out: hp.k })
}
