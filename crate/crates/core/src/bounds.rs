//! Explicit inequalities and counting bounds attached to the special
//! values: the exponential regulator lower bound, the four-step chain
//! R <= hR <= wB <= 4d^2 B <= 4B log^2(R/c3)/log^2(c4), derived degree and
//! regulator bounds, discriminant bounds, the CM-field bound, and the
//! field-count bound functions.
//!
//! Only c3 = (11.5)^(-39) and c4 = 1.15 are pinned by the source
//! inequalities. The remaining constants are "absolute, effectively
//! computable" but never numerically specified, so they live in
//! `BoundConstants` as configuration with documented desk-scale defaults;
//! every report embeds the constants it was computed with.

use crate::error::{Error, Result};
use crate::nf::NumberFieldRecord;
use crate::zeta::special_value_zero;
use serde::Serialize;

/// Fixed constants of the regulator bound R >= c3 * c4^d.
pub const C3: f64 = crate::nf::ZIMMERT_C3;
pub const C4: f64 = crate::nf::ZIMMERT_C4;

/// Configurable constants for the bound functions.
///
/// Defaults were chosen by re-running the inequality chain at desk scale
/// (quadratic database, |disc| <= 10^4) and leaving a safety margin; the
/// derivations are recorded next to each default. They are exploration
/// defaults, not certified values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundConstants {
    /// Field-count bound at negative integers. Default calibrated so the
    /// bound dominates the observed |S_{B,-1}| counts at B = 10 and 100
    /// over the quadratic database with a 2x log-margin.
    pub c0: f64,
    /// Field-count bound at zero, outer scale. Default dominates the
    /// observed |S_{B,0}| at B in {5, 10} with wide margin.
    pub c1: f64,
    /// Field-count bound at zero, inner exponent.
    pub c2: f64,
    /// Derived regulator-bound scale (R <= c5 B / log^2 B); recorded for
    /// reports, the solver computes the bound directly.
    pub c5: f64,
    /// Derived degree-bound scale (d <= c6 log B); recorded for reports.
    pub c6: f64,
    /// Scale inside the non-CM discriminant bound.
    pub c7: f64,
    /// Outer scale of the combined discriminant bound; report-only.
    pub c9: f64,
    /// Inner exponent of the combined discriminant bound; report-only.
    pub c10: f64,
    /// Degree-count exponents of the discriminant-counting bound.
    pub a1: f64,
    pub a2: f64,
    /// Base of the Hermite-Minkowski growth |disc| >= a3^d. The smallest
    /// ratio |disc|^(1/d) over actual fields is sqrt(3) (quadratic), so
    /// the default sits just below it.
    pub a3: f64,
    /// Exponent scale of the field-count-by-discriminant bound.
    pub a4: f64,
    /// Placeholder slope for Stark's function c8(eps) = c8_scale * eps;
    /// the CM bound is exposed for exploration, not certification.
    pub c8_scale: f64,
}

impl Default for BoundConstants {
    fn default() -> Self {
        Self {
            c0: 12.0,
            c1: 60.0,
            c2: 2.0,
            c5: 1e9,
            c6: 100.0,
            c7: 1.0,
            c9: 1.0,
            c10: 2.0,
            a1: 1.0,
            a2: 1.0,
            a3: 1.73,
            a4: 1.0,
            c8_scale: 1.0,
        }
    }
}

impl BoundConstants {
    pub fn c8(&self, eps: f64) -> f64 {
        self.c8_scale * eps
    }

    /// Parse a `key=value` constants file; unset keys keep their defaults,
    /// unknown keys are rejected.
    pub fn from_key_values(text: &str) -> Result<Self> {
        let mut c = Self::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("line {}: expected key=value", lineno + 1)))?;
            let v: f64 = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: bad number {value:?}", lineno + 1)))?;
            if !(v > 0.0) {
                return Err(Error::Parse(format!("line {}: constants must be positive", lineno + 1)));
            }
            match key.trim() {
                "c0" => c.c0 = v,
                "c1" => c.c1 = v,
                "c2" => c.c2 = v,
                "c5" => c.c5 = v,
                "c6" => c.c6 = v,
                "c7" => c.c7 = v,
                "c9" => c.c9 = v,
                "c10" => c.c10 = v,
                "a1" => c.a1 = v,
                "a2" => c.a2 = v,
                "a3" => c.a3 = v,
                "a4" => c.a4 = v,
                "c8_scale" => c.c8_scale = v,
                "c3" | "c4" => {
                    return Err(Error::Parse("c3 and c4 are fixed and cannot be configured".into()))
                }
                other => return Err(Error::Parse(format!("unknown constant {other:?}"))),
            }
        }
        Ok(c)
    }

    pub fn load(path: &str) -> Result<Self> {
        Self::from_key_values(&std::fs::read_to_string(path)?)
    }
}

/// Exponential lower bound c3 * c4^d for the regulator.
pub fn regulator_lower_bound(d: u32) -> f64 {
    C3 * C4.powi(d as i32)
}

/// Evaluation of the four-step chain for one field at threshold B.
#[derive(Debug, Clone, Serialize)]
pub struct ChainReport {
    pub label: String,
    pub b: f64,
    pub regulator: f64,
    pub h_times_r: f64,
    pub w_b: f64,
    pub four_d2_b: f64,
    pub log_sq_bound: f64,
    /// Whether |zeta_F^*(0)| <= B actually holds; step (b) is only
    /// asserted under this hypothesis.
    pub hypothesis_met: bool,
    pub pass_a: bool,
    pub pass_b: bool,
    pub pass_c: bool,
    pub pass_d: bool,
}

impl ChainReport {
    pub fn all_pass(&self) -> bool {
        self.pass_a && self.pass_b && self.pass_c && self.pass_d
    }
}

/// Evaluate R <= hR <= wB <= 4 d^2 B <= 4B log^2(R/c3)/log^2(c4) for one
/// record, with step (b) conditional on |zeta_F^*(0)| <= B.
pub fn verify_chain(field: &NumberFieldRecord, b: f64) -> Result<ChainReport> {
    if !(b > 0.0) {
        return Err(Error::Domain("threshold B must be positive".into()));
    }
    let r = field.regulator;
    let hr = field.class_number as f64 * r;
    let wb = field.torsion as f64 * b;
    let d = field.degree as f64;
    let four_d2_b = 4.0 * d * d * b;
    let log_sq_bound = 4.0 * b * (r / C3).ln().powi(2) / C4.ln().powi(2);
    let hypothesis_met = special_value_zero(field)?.leading.abs() <= b;
    Ok(ChainReport {
        label: field.label.clone(),
        b,
        regulator: r,
        h_times_r: hr,
        w_b: wb,
        four_d2_b,
        log_sq_bound,
        hypothesis_met,
        pass_a: r <= hr,
        pass_b: hr <= wb,
        pass_c: wb <= four_d2_b,
        pass_d: four_d2_b <= log_sq_bound,
    })
}

/// Largest R with R <= 4B log^2(R/c3)/log^2(c4), by bisection on the
/// crossing point, and the largest degree d with c3 c4^d <= R_max. Both
/// returned values are certified by direct substitution.
pub fn solve_degree_and_regulator_bounds(b: f64) -> Result<(f64, u32)> {
    if !(b > 1.0) {
        return Err(Error::Domain("needs B > 1".into()));
    }
    let f = |r: f64| 4.0 * b * (r / C3).ln().powi(2) / C4.ln().powi(2) - r;
    let mut hi = 1.0f64;
    while f(hi) > 0.0 {
        hi *= 2.0;
        if hi > 1e300 {
            return Err(Error::Unconverged("regulator bound crossing not found".into()));
        }
    }
    let mut lo = hi / 2.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let r_max = lo;
    // certification: the inequality holds at r_max and fails just above
    if f(r_max) < 0.0 || f(r_max * (1.0 + 1e-6)) > 0.0 {
        return Err(Error::Unconverged("regulator bound certification failed".into()));
    }
    let d_max = ((r_max / C3).ln() / C4.ln()).floor();
    if !(C3 * C4.powf(d_max) <= r_max && C3 * C4.powf(d_max + 1.0) > r_max) {
        return Err(Error::Unconverged("degree bound certification failed".into()));
    }
    Ok((r_max, d_max as u32))
}

/// B^(1/(n + 1/2)): the discriminant cap claimed for fields with
/// |zeta_F^*(-n)| <= B.
pub fn discriminant_bound_left(b: f64, n: u32) -> Result<f64> {
    if !(b >= 1.0) {
        return Err(Error::Domain("needs B >= 1".into()));
    }
    if n == 0 {
        return Err(Error::Domain("needs n >= 1".into()));
    }
    Ok(b.powf(1.0 / (n as f64 + 0.5)))
}

/// Field-count bound at a negative integer n <= -1:
/// exp( (c0/(1/2 - n)) log B log(log B / (1/2 - n)) ), valid for
/// B >= exp(1/2 - n).
pub fn count_bound_negative(b: f64, n: i64, consts: &BoundConstants) -> Result<f64> {
    if n > -1 {
        return Err(Error::Domain("count_bound_negative needs n <= -1".into()));
    }
    let m = 0.5 - n as f64;
    if !(b >= m.exp()) {
        return Err(Error::Domain(format!(
            "validity condition requires B >= exp(1/2 - n) = {}",
            m.exp()
        )));
    }
    Ok(((consts.c0 / m) * b.ln() * (b.ln() / m).ln()).exp())
}

/// Field-count bound at zero: exp(c1 B^(c2 loglog B) (loglog B)^2), valid
/// for B > e.
pub fn count_bound_zero(b: f64, consts: &BoundConstants) -> Result<f64> {
    if !(b > std::f64::consts::E) {
        return Err(Error::Domain("count_bound_zero needs B > e".into()));
    }
    let ll = b.ln().ln();
    Ok((consts.c1 * b.powf(consts.c2 * ll) * ll * ll).exp())
}

/// Discriminant bound for a CM field of degree d with class number h,
/// using the regulator of its maximal totally real subfield:
///
/// |disc| <= ( h d! / c8(eps)^d
///             * ( (d/2)^(d/2) exp(max(1, d^d R+ / (2^d c7))) )^(1/2 - 1/d)
///           )^( d / (d - 3 - eps d) )
pub fn cm_discriminant_bound(
    field: &NumberFieldRecord,
    real_subfield_regulator: f64,
    eps: f64,
    consts: &BoundConstants,
) -> Result<f64> {
    if field.r1 != 0 {
        return Err(Error::Domain(format!("{} is not totally imaginary", field.label)));
    }
    if !(eps > 0.0 && eps <= 0.5) {
        return Err(Error::Domain("eps must lie in (0, 1/2]".into()));
    }
    if !(real_subfield_regulator > 0.0) {
        return Err(Error::Domain("subfield regulator must be positive".into()));
    }
    let d = field.degree as f64;
    let denom = d - 3.0 - eps * d;
    if !(denom > 0.0) {
        return Err(Error::Domain(format!(
            "outer exponent denominator d - 3 - eps d = {denom} must be positive"
        )));
    }
    let d_fact = crate::numeric::gamma(d + 1.0);
    let inner = (d / 2.0).powf(d / 2.0)
        * (1f64.max(d.powf(d) * real_subfield_regulator / (2f64.powf(d) * consts.c7))).exp();
    let base = field.class_number as f64 * d_fact / consts.c8(eps).powf(d)
        * inner.powf(0.5 - 1.0 / d);
    Ok(base.powf(d / denom))
}

/// Non-CM discriminant bound d^d exp(max(1, d^(2d) R / c7)).
pub fn friedman_discriminant_bound(d: u32, r: f64, consts: &BoundConstants) -> Result<f64> {
    if d == 0 {
        return Err(Error::Domain("degree must be positive".into()));
    }
    if !(r > 0.0) {
        return Err(Error::Domain("regulator must be positive".into()));
    }
    let df = d as f64;
    Ok(df.powf(df) * (1f64.max(df.powf(2.0 * df) * r / consts.c7)).exp())
}

/// Count bound for fields of degree d with |disc| <= X:
/// d^(a1 d log(d)^2) X^(a2 log(d)^2); the degree-1 case is exactly 1 via
/// log(1) = 0.
pub fn couveignes_count(x: f64, d: u32, consts: &BoundConstants) -> Result<f64> {
    if !(x >= 1.0) {
        return Err(Error::Domain("needs X >= 1".into()));
    }
    if d == 0 {
        return Err(Error::Domain("degree must be positive".into()));
    }
    let df = d as f64;
    let l2 = df.ln().powi(2);
    Ok(df.powf(consts.a1 * df * l2) * x.powf(consts.a2 * l2))
}
