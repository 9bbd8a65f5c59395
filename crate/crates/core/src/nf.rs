//! Number-field records: generated quadratic fields (class number,
//! regulator, torsion) and arbitrary fields ingested from CSV tables.
//!
//! Imaginary quadratic class numbers come from counting reduced primitive
//! binary quadratic forms. Real quadratic regulators come from the
//! fundamental unit found by the exact integer continued-fraction
//! expansion of the relevant quadratic irrational (a Pell solver for the
//! maximal order), and the class number is recovered from the closed-form
//! log-sine character sum for L(1, chi_D), cross-checked against an
//! independent digamma-based evaluation.

use crate::error::{Error, Result};
use crate::numeric::{digamma, gcd_u64, is_squarefree, KahanSum};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

/// Zimmert-type regulator bound constants, fixed by the source inequality
/// R >= c3 * c4^d.
pub const ZIMMERT_C3: f64 = 1.955_462_205_667_261_5e-42; // (11.5)^(-39)
pub const ZIMMERT_C4: f64 = 1.15;

/// Arithmetic invariants of one number field.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NumberFieldRecord {
    pub label: String,
    pub degree: u32,
    pub r1: u32,
    pub r2: u32,
    pub disc: i64,
    pub class_number: u64,
    pub regulator: f64,
    pub torsion: u64,
}

impl NumberFieldRecord {
    pub fn new(
        label: impl Into<String>,
        degree: u32,
        r1: u32,
        r2: u32,
        disc: i64,
        class_number: u64,
        regulator: f64,
        torsion: u64,
    ) -> Result<Self> {
        let rec = Self {
            label: label.into(),
            degree,
            r1,
            r2,
            disc,
            class_number,
            regulator,
            torsion,
        };
        rec.validate()?;
        Ok(rec)
    }

    /// The record for the rational field.
    pub fn rationals() -> Self {
        Self {
            label: "Q".into(),
            degree: 1,
            r1: 1,
            r2: 0,
            disc: 1,
            class_number: 1,
            regulator: 1.0,
            torsion: 2,
        }
    }

    pub fn unit_rank(&self) -> u32 {
        self.r1 + self.r2 - 1
    }

    pub fn is_quadratic(&self) -> bool {
        self.degree == 2
    }

    /// Checks every record invariant; returns the first violation.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::Contract(format!("{}: {msg}", self.label)));
        if self.degree == 0 {
            return fail("degree must be positive");
        }
        if self.degree != self.r1 + 2 * self.r2 {
            return fail("signature mismatch (d != r1 + 2 r2)");
        }
        if self.disc == 0 {
            return fail("discriminant must be nonzero");
        }
        let expected_sign = if self.r2 % 2 == 0 { 1 } else { -1 };
        if self.disc.signum() != expected_sign {
            return fail("sign of discriminant must be (-1)^r2");
        }
        if self.class_number == 0 {
            return fail("class number must be positive");
        }
        if self.torsion < 2 {
            return fail("torsion must be >= 2");
        }
        if self.torsion > 4 * (self.degree as u64) * (self.degree as u64) {
            return fail("torsion exceeds 4 d^2");
        }
        if !(self.regulator > 0.0) {
            return fail("regulator must be positive");
        }
        if self.regulator < ZIMMERT_C3 * ZIMMERT_C4.powi(self.degree as i32) {
            return fail("regulator below Zimmert bound c3 c4^d");
        }
        if self.unit_rank() == 0 && self.regulator != 1.0 {
            return fail("regulator convention: R = 1 at unit rank 0");
        }
        if self.degree == 1 && (self.disc != 1 || self.r1 != 1) {
            return fail("degree 1 field must be Q with disc 1");
        }
        if self.degree == 2 && !is_fundamental_discriminant(self.disc) {
            return fail("quadratic discriminant must be fundamental");
        }
        Ok(())
    }
}

/// True for discriminants of quadratic fields: D = 1 mod 4 squarefree, or
/// D = 4m with m = 2, 3 mod 4 squarefree; D != 0, 1.
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    let m4 = d.rem_euclid(4);
    if m4 == 1 {
        return is_squarefree(d.unsigned_abs());
    }
    if m4 == 0 {
        let m = d / 4;
        let mm4 = m.rem_euclid(4);
        return (mm4 == 2 || mm4 == 3) && is_squarefree(m.unsigned_abs());
    }
    false
}

/// All fundamental discriminants in the closed interval [lo, hi].
pub fn fundamental_discriminants(lo: i64, hi: i64) -> Vec<i64> {
    (lo..=hi).filter(|&d| is_fundamental_discriminant(d)).collect()
}

/// Jacobi symbol (a/n) for odd n > 0.
fn jacobi_symbol(a: i64, n: u64) -> i64 {
    debug_assert!(n % 2 == 1);
    if n == 1 {
        return 1;
    }
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut sign = 1i64;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// Kronecker symbol chi_D(n) without the fundamental-discriminant check.
pub(crate) fn chi(d: i64, n: u64) -> i64 {
    if n == 0 {
        return if d == 1 || d == -1 { 1 } else { 0 };
    }
    let mut n = n;
    let mut sign = 1i64;
    // factor of 2: (D/2) = 0 if D even, else depends on D mod 8
    while n % 2 == 0 {
        if d % 2 == 0 {
            return 0;
        }
        let r = d.rem_euclid(8);
        if r == 3 || r == 5 {
            sign = -sign;
        }
        n /= 2;
    }
    sign * jacobi_symbol(d, n)
}

/// The quadratic character chi_D(n) for a fundamental discriminant D.
pub fn kronecker_symbol(d: i64, n: u64) -> Result<i64> {
    if !is_fundamental_discriminant(d) {
        return Err(Error::Contract(format!("{d} is not a fundamental discriminant")));
    }
    Ok(chi(d, n))
}

/// Class number of the imaginary quadratic field of discriminant D < 0, by
/// direct counting of reduced primitive forms (a, b, c) with
/// b^2 - 4ac = D, -a < b <= a <= c, gcd = 1, and b >= 0 when a = c.
pub fn class_number_imaginary(d: i64) -> Result<u64> {
    if d >= 0 || !is_fundamental_discriminant(d) {
        return Err(Error::Contract(format!(
            "{d} is not a fundamental imaginary quadratic discriminant"
        )));
    }
    let abs_d = d.unsigned_abs() as i64;
    let mut count = 0u64;
    let a_max = ((abs_d as f64 / 3.0).sqrt() as i64) + 1;
    for a in 1..=a_max {
        if 3 * a * a > abs_d {
            break;
        }
        let parity = d.rem_euclid(2);
        let mut b = -a + 1;
        // align parity of b with D
        if b.rem_euclid(2) != parity {
            b += 1;
        }
        while b <= a {
            let num = b * b + abs_d;
            if num % (4 * a) == 0 {
                let c = num / (4 * a);
                if c >= a {
                    let g = gcd_u64(gcd_u64(a as u64, b.unsigned_abs()), c as u64);
                    if g == 1 && !(a == c && b < 0) {
                        count += 1;
                    }
                }
            }
            b += 2;
        }
    }
    Ok(count)
}

/// Torsion unit count of a quadratic field of discriminant D.
pub fn torsion_quadratic(d: i64) -> u64 {
    match d {
        -3 => 6,
        -4 => 4,
        _ => 2,
    }
}

/// Fundamental unit (t + u sqrt(m)) / 2 of the maximal order of a real
/// quadratic field, with exact Pell-equation verification t^2 - m u^2 = ±4.
/// `m` is the squarefree part underlying the discriminant.
#[derive(Debug, Clone)]
pub struct FundamentalUnit {
    pub m: i64,
    pub t: BigInt,
    pub u: BigInt,
    /// Norm of the unit: +1 or -1.
    pub norm: i8,
    /// log of the unit.
    pub regulator: f64,
}

impl FundamentalUnit {
    /// Trace and norm of the unit as integers of the minimal polynomial
    /// x^2 - trace x + norm, when the trace fits in i64.
    pub fn min_poly_coeffs(&self) -> Option<(i64, i64)> {
        let trace = self.t.to_i64()?;
        Some((trace, self.norm as i64))
    }
}

fn isqrt_i64(n: i64) -> i64 {
    if n < 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as i64;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    while r * r > n {
        r -= 1;
    }
    r
}

/// ln of a positive BigInt, stable for values far beyond f64 range.
fn ln_bigint(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 52 {
        return x.to_f64().unwrap().ln();
    }
    let shift = bits - 52;
    let top = (x >> shift).to_f64().unwrap();
    top.ln() + (shift as f64) * std::f64::consts::LN_2
}

/// Fundamental unit of the real quadratic field of discriminant D > 0, by
/// the integer continued-fraction expansion of sqrt(m) (D = 4m) or
/// (1 + sqrt(m))/2 (D = m, m = 1 mod 4).
///
/// The (P, Q) recurrence uses exact integers only; the period is detected
/// by the state (P_k, Q_k) returning to (P_1, Q_1), and the unit is read
/// off the convergents p_{l-1}, q_{l-1} of the expansion.
pub fn fundamental_unit(d: i64) -> Result<FundamentalUnit> {
    if d <= 0 || !is_fundamental_discriminant(d) {
        return Err(Error::Contract(format!(
            "{d} is not a fundamental real quadratic discriminant"
        )));
    }
    let (m, p0, q0) = if d % 4 == 0 {
        (d / 4, 0i64, 1i64) // omega = sqrt(m)
    } else {
        (d, 1i64, 2i64) // omega = (1 + sqrt(m)) / 2
    };
    let s = isqrt_i64(m);
    assert!(s * s != m, "fundamental discriminant cannot be a square");

    // convergents p_k = a_k p_{k-1} + p_{k-2}, seeded p_{-1} = 1, p_{-2} = 0
    let mut p_prev = BigInt::zero();
    let mut p_curr = BigInt::from(1);
    let mut q_prev = BigInt::from(1);
    let mut q_curr = BigInt::zero();

    let mut pp = p0;
    let mut qq = q0;
    let mut first_state: Option<(i64, i64)> = None;
    let mut period_end: Option<(BigInt, BigInt)> = None;

    for step in 0..100_000 {
        let a = (pp + s).div_euclid(qq);
        let new_p = a * qq - pp;
        let new_q = (m - new_p * new_p) / qq;
        assert!(new_q != 0, "continued fraction of a quadratic irrational stays periodic");

        let p_next = BigInt::from(a) * &p_curr + &p_prev;
        let q_next = BigInt::from(a) * &q_curr + &q_prev;
        p_prev = std::mem::replace(&mut p_curr, p_next);
        q_prev = std::mem::replace(&mut q_curr, q_next);

        if step == 0 {
            first_state = Some((new_p, new_q));
        } else if first_state == Some((new_p, new_q)) {
            // period closed at length `step`; convergent index step - 1
            period_end = Some((p_prev.clone(), q_prev.clone()));
            break;
        }
        pp = new_p;
        qq = new_q;
    }
    let (pl, ql) = period_end
        .ok_or_else(|| Error::Unconverged(format!("continued fraction period not found for {d}")))?;

    // unit = p - q * conj(omega); write it as (t + u sqrt(m)) / 2
    let (t, u): (BigInt, BigInt) = if d % 4 == 0 {
        (2 * &pl, 2 * &ql) // p + q sqrt(m)
    } else {
        (2 * &pl - &ql, ql.clone()) // p - q (1 - sqrt(m))/2
    };

    // exact Pell check: t^2 - m u^2 = ±4
    let pell = &t * &t - BigInt::from(m) * &u * &u;
    let norm = if pell == BigInt::from(4) {
        1i8
    } else if pell == BigInt::from(-4) {
        -1i8
    } else {
        return Err(Error::Contract(format!(
            "unit for discriminant {d} fails the Pell equation (t^2 - {m} u^2 = {pell})"
        )));
    };

    let regulator = if let (Some(tf), Some(uf)) = (t.to_f64(), u.to_f64()) {
        if tf.abs() < 9.0e15 {
            ((tf + uf * (m as f64).sqrt()) / 2.0).ln()
        } else {
            ln_large_unit(&t, norm)
        }
    } else {
        ln_large_unit(&t, norm)
    };

    Ok(FundamentalUnit { m, t, u, norm, regulator })
}

/// log((t + sqrt(t^2 ∓ 4))/2) for huge t: ln t plus a tiny correction.
fn ln_large_unit(t: &BigInt, norm: i8) -> f64 {
    let lt = ln_bigint(&t.abs());
    // unit = t (1 + sqrt(1 ∓ 4/t^2)) / 2; the correction term is
    // ln((1 + sqrt(1 ∓ eps))/2) with eps = 4/t^2, negligible for huge t.
    let tf = t.abs().to_f64().unwrap_or(f64::INFINITY);
    let eps = if tf.is_finite() { 4.0 / (tf * tf) } else { 0.0 };
    let corr = ((1.0 + (1.0 - (norm as f64) * eps).sqrt()) / 2.0).ln();
    lt + corr
}

/// L(1, chi_D) for D > 0 by the closed-form log-sine character sum.
pub fn l_one_log_sine(d: i64) -> f64 {
    debug_assert!(d > 1);
    let q = d as u64;
    let mut acc = KahanSum::new();
    for a in 1..q {
        let c = chi(d, a);
        if c != 0 {
            let x = (std::f64::consts::PI * a as f64 / q as f64).sin().ln();
            acc.add(-(c as f64) * x);
        }
    }
    acc.value() / (d as f64).sqrt()
}

/// L(1, chi_D) for any fundamental D by the digamma character sum
/// L(1, chi) = -(1/q) sum chi(a) psi(a/q).
pub fn l_one_digamma(d: i64) -> f64 {
    let q = d.unsigned_abs();
    let mut acc = KahanSum::new();
    for a in 1..q {
        let c = chi(d, a);
        if c != 0 {
            acc.add(-(c as f64) * digamma(a as f64 / q as f64));
        }
    }
    acc.value() / q as f64
}

/// Tolerance for agreement of the two independent L(1, chi) routes.
const L_ONE_CROSS_CHECK_TOL: f64 = 1e-9;

/// Build the full record of the quadratic field of fundamental
/// discriminant D.
pub fn build_quadratic(d: i64) -> Result<NumberFieldRecord> {
    if !is_fundamental_discriminant(d) {
        return Err(Error::Contract(format!("{d} is not a fundamental discriminant")));
    }
    let label = format!("quad:{d}");
    if d < 0 {
        let h = class_number_imaginary(d)?;
        let w = torsion_quadratic(d);
        // two independent routes: forms count vs analytic L(1, chi)
        let l_analytic = l_one_digamma(d);
        let l_from_h = 2.0 * std::f64::consts::PI * h as f64
            / (w as f64 * (d.unsigned_abs() as f64).sqrt());
        if (l_analytic - l_from_h).abs() > L_ONE_CROSS_CHECK_TOL * (1.0 + l_from_h.abs()) {
            return Err(Error::Unconverged(format!(
                "L(1, chi_{d}) routes disagree: digamma {l_analytic} vs forms {l_from_h}"
            )));
        }
        NumberFieldRecord::new(label, 2, 0, 1, d, h, 1.0, w)
    } else {
        let unit = fundamental_unit(d)?;
        let reg = unit.regulator;
        let l_sine = l_one_log_sine(d);
        let l_dig = l_one_digamma(d);
        if (l_sine - l_dig).abs() > L_ONE_CROSS_CHECK_TOL * (1.0 + l_sine.abs()) {
            return Err(Error::Unconverged(format!(
                "L(1, chi_{d}) routes disagree: log-sine {l_sine} vs digamma {l_dig}"
            )));
        }
        // class number from the residue formula: h = sqrt(D) L(1,chi) / (2R)
        let h_float = (d as f64).sqrt() * l_sine / (2.0 * reg);
        let h = h_float.round();
        if (h_float - h).abs() > 1e-4 || h < 1.0 {
            return Err(Error::Unconverged(format!(
                "class number for {d} not near an integer: {h_float}"
            )));
        }
        NumberFieldRecord::new(label, 2, 2, 0, d, h as u64, reg, 2)
    }
}

/// Where a database came from.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Provenance {
    Generated,
    Ingested(String),
}

/// A collection of number-field records with unique labels.
#[derive(Debug, Clone, Serialize)]
pub struct FieldDatabase {
    pub records: Vec<NumberFieldRecord>,
    pub provenance: Provenance,
}

/// One rejected CSV row with the reason.
#[derive(Debug, Clone, Serialize)]
pub struct RowError {
    pub line: usize,
    pub reason: String,
}

impl FieldDatabase {
    /// Generate records for all fundamental discriminants in [lo, hi],
    /// ordered by |disc| then sign.
    pub fn generate(lo: i64, hi: i64) -> Result<FieldDatabase> {
        let mut ds = fundamental_discriminants(lo, hi);
        ds.sort_by_key(|&d| (d.unsigned_abs(), d.signum()));
        let records = ds
            .into_iter()
            .map(build_quadratic)
            .collect::<Result<Vec<_>>>()?;
        Ok(FieldDatabase { records, provenance: Provenance::Generated })
    }

    pub fn find(&self, label: &str) -> Option<&NumberFieldRecord> {
        self.records.iter().find(|r| r.label == label)
    }

    /// CSV serialization per the fixed schema; `reg` carries 12
    /// significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("label,degree,r1,r2,disc,h,reg,w\n");
        for r in &self.records {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.label,
                r.degree,
                r.r1,
                r.r2,
                r.disc,
                r.class_number,
                crate::format_significant(r.regulator, 12),
                r.torsion
            ));
        }
        out
    }

    /// Parse the CSV schema `label,degree,r1,r2,disc,h,reg,w`. Rows that
    /// fail to parse or violate record invariants are reported, not
    /// silently dropped and never repaired.
    pub fn from_csv(text: &str, source: impl Into<String>) -> Result<(FieldDatabase, Vec<RowError>)> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::Parse("empty file: header required".into()))?;
        if header.trim() != "label,degree,r1,r2,disc,h,reg,w" {
            return Err(Error::Parse(format!("unexpected header: {header}")));
        }
        let mut records: Vec<NumberFieldRecord> = Vec::new();
        let mut errors = Vec::new();
        for (idx, line) in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            match parse_row(line) {
                Ok(rec) => {
                    if records.iter().any(|r| r.label == rec.label) {
                        errors.push(RowError {
                            line: idx + 1,
                            reason: format!("duplicate label {}", rec.label),
                        });
                    } else {
                        records.push(rec);
                    }
                }
                Err(e) => errors.push(RowError { line: idx + 1, reason: e.to_string() }),
            }
        }
        Ok((
            FieldDatabase { records, provenance: Provenance::Ingested(source.into()) },
            errors,
        ))
    }

    pub fn load_csv(path: &str) -> Result<(FieldDatabase, Vec<RowError>)> {
        let text = std::fs::read_to_string(path)?;
        Self::from_csv(&text, path)
    }
}

fn parse_row(line: &str) -> Result<NumberFieldRecord> {
    let parts: Vec<&str> = line.split(',').collect();
    if parts.len() != 8 {
        return Err(Error::Parse(format!("expected 8 columns, got {}", parts.len())));
    }
    let label = parts[0].trim().to_string();
    if label.is_empty() {
        return Err(Error::Parse("empty label".into()));
    }
    let degree: u32 = parse_num(parts[1], "degree")?;
    let r1: u32 = parse_num(parts[2], "r1")?;
    let r2: u32 = parse_num(parts[3], "r2")?;
    let disc: i64 = parse_num(parts[4], "disc")?;
    let h: u64 = parse_num(parts[5], "h")?;
    let reg: f64 = parse_num(parts[6], "reg")?;
    let w: u64 = parse_num(parts[7], "w")?;
    NumberFieldRecord::new(label, degree, r1, r2, disc, h, reg, w)
}

fn parse_num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("invalid {what}: {s:?}")))
}
