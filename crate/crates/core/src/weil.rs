//! Logarithmic Weil height of algebraic numbers from their minimal
//! polynomials, Northcott enumeration at bounded height and degree, and
//! the rank-one sandwich linking Weil heights of fundamental units to
//! zeta_F^*(0).
//!
//! Irreducibility is certified by exhaustive search over bounded-degree
//! integer factors, with factor coefficients bounded through the Mahler
//! inequality M(g) <= M(P) <= ||P||_2; no factorization backend involved.

use crate::error::{Error, Result};
use crate::mahler::{mahler_univariate, LaurentPolynomialZ};
use crate::nf::{fundamental_unit, NumberFieldRecord};
use crate::numeric::binomial;
use crate::zeta::special_value_zero;
use serde::Serialize;

/// A nonzero algebraic number, represented by its primitive irreducible
/// minimal polynomial over Z with positive leading coefficient
/// (coefficients ascending).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraicNumber {
    min_poly: Vec<i64>,
}

impl AlgebraicNumber {
    pub fn new(min_poly: Vec<i64>) -> Result<Self> {
        let p = normalize_trim(&min_poly);
        if p.len() < 2 {
            return Err(Error::Contract("minimal polynomial must have degree >= 1".into()));
        }
        if *p.last().unwrap() < 0 {
            return Err(Error::Contract("leading coefficient must be positive".into()));
        }
        if content(&p) != 1 {
            return Err(Error::Contract("minimal polynomial must be primitive".into()));
        }
        if !is_irreducible_z(&p)? {
            return Err(Error::Contract(format!("{p:?} is reducible over Z")));
        }
        Ok(Self { min_poly: p })
    }

    pub fn from_rational(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::Contract("denominator must be nonzero".into()));
        }
        let g = crate::numeric::gcd_i64(p, q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 {
            p = -p;
            q = -q;
        }
        Self::new(vec![-p, q])
    }

    pub fn min_poly(&self) -> &[i64] {
        &self.min_poly
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    /// True when the minimal polynomial equals +- its own reversal, i.e.
    /// the number is conjugate to its inverse.
    pub fn is_reciprocal(&self) -> bool {
        let mut rev = self.min_poly.clone();
        rev.reverse();
        rev == self.min_poly || rev.iter().map(|c| -c).collect::<Vec<_>>() == self.min_poly
    }
}

fn normalize_trim(p: &[i64]) -> Vec<i64> {
    let mut v = p.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn content(p: &[i64]) -> i64 {
    p.iter().fold(0i64, |g, &c| crate::numeric::gcd_i64(g, c))
}

/// Certified irreducibility over Z by exhaustive bounded factor search.
/// Candidate factor coefficients obey |g_j| <= C(k, j) * ||P||_2 (Landau's
/// bound for M(P) and the Mahler coefficient inequality), with leading and
/// constant coefficients further pinned to divisors.
pub fn is_irreducible_z(p: &[i64]) -> Result<bool> {
    let p = normalize_trim(p);
    let deg = p.len().saturating_sub(1);
    if deg == 0 {
        return Ok(false);
    }
    if deg == 1 {
        return Ok(true);
    }
    if deg > 8 {
        return Err(Error::Domain(format!(
            "irreducibility search supports degree <= 8, got {deg}"
        )));
    }
    if p[0] == 0 {
        // divisible by x
        return Ok(false);
    }
    let norm2 = (p.iter().map(|&c| (c as f64) * (c as f64)).sum::<f64>()).sqrt();
    for k in 1..=deg / 2 {
        let mut factor = vec![0i64; k + 1];
        if search_factor(&p, &mut factor, k, norm2) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn divisors_of(n: i64) -> Vec<i64> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

fn search_factor(p: &[i64], factor: &mut Vec<i64>, k: usize, norm2: f64) -> bool {
    let deg = p.len() - 1;
    let lead_divs = divisors_of(p[deg]);
    let const_divs = divisors_of(p[0]);
    let bounds: Vec<i64> = (0..=k).map(|j| (binomial(k, j) * norm2).floor() as i64).collect();

    fn rec(
        p: &[i64],
        factor: &mut Vec<i64>,
        idx: usize,
        k: usize,
        bounds: &[i64],
        const_divs: &[i64],
        lead_divs: &[i64],
    ) -> bool {
        if idx > k {
            return divide_exact(p, factor).is_some();
        }
        if idx == k {
            for &a in lead_divs {
                if a <= bounds[k] {
                    factor[k] = a;
                    if rec(p, factor, idx + 1, k, bounds, const_divs, lead_divs) {
                        return true;
                    }
                }
            }
            return false;
        }
        if idx == 0 {
            for &c in const_divs {
                for s in [1i64, -1] {
                    if c <= bounds[0] {
                        factor[0] = s * c;
                        if rec(p, factor, 1, k, bounds, const_divs, lead_divs) {
                            return true;
                        }
                    }
                }
            }
            return false;
        }
        for c in -bounds[idx]..=bounds[idx] {
            factor[idx] = c;
            if rec(p, factor, idx + 1, k, bounds, const_divs, lead_divs) {
                return true;
            }
        }
        false
    }
    rec(p, factor, 0, k, &bounds, &const_divs, &lead_divs)
}

/// Exact division of integer polynomials (ascending); None on remainder
/// or overflow.
fn divide_exact(num: &[i64], den: &[i64]) -> Option<Vec<i64>> {
    let dn = num.len() - 1;
    let den = normalize_trim(den);
    if den.is_empty() {
        return None;
    }
    let dd = den.len() - 1;
    if dd == 0 || dd > dn {
        return None;
    }
    let lead = *den.last().unwrap();
    let mut rem = num.to_vec();
    let mut quo = vec![0i64; dn - dd + 1];
    for k in (0..quo.len()).rev() {
        let c = rem[k + dd];
        if c % lead != 0 {
            return None;
        }
        let q = c / lead;
        quo[k] = q;
        for (i, &dc) in den.iter().enumerate() {
            rem[k + i] = rem[k + i].checked_sub(q.checked_mul(dc)?)?;
        }
    }
    if rem.iter().all(|&c| c == 0) {
        Some(quo)
    } else {
        None
    }
}

/// Absolute logarithmic Weil height h(alpha) = m(min_poly) / deg, with the
/// propagated Mahler error bound.
pub fn weil_height(alpha: &AlgebraicNumber, tol: f64) -> Result<crate::zeta::ValueWithError> {
    let p = LaurentPolynomialZ::univariate(alpha.min_poly());
    let m = mahler_univariate(&p, tol)?;
    let d = alpha.degree() as f64;
    Ok(crate::zeta::ValueWithError { value: m.value / d, err_bound: m.err_bound / d })
}

const ENUMERATION_DEGREE_CAP: usize = 5;

/// Enumerate all nonzero algebraic numbers with degree <= d_max and Weil
/// height <= h_max + tol, by exhausting the coefficient boxes
/// |a_j| <= C(d, j) exp(d h_max) and filtering primitive irreducible
/// polynomials. The zero algebraic number (minimal polynomial x) is
/// excluded.
pub fn enumerate_heights(h_max: f64, d_max: usize, tol: f64) -> Result<Vec<AlgebraicNumber>> {
    if d_max == 0 || d_max > ENUMERATION_DEGREE_CAP {
        return Err(Error::Domain(format!(
            "degree must lie in 1..={ENUMERATION_DEGREE_CAP}"
        )));
    }
    if !h_max.is_finite() || h_max < 0.0 {
        return Err(Error::Domain("h_max must be finite and nonnegative".into()));
    }
    let mut out = Vec::new();
    for d in 1..=d_max {
        let m_cap = (d as f64 * h_max).exp() * (1.0 + 1e-12);
        let bounds: Vec<i64> = (0..=d).map(|j| (binomial(d, j) * m_cap).floor() as i64).collect();
        if bounds.iter().any(|&b| b > 40) {
            return Err(Error::Domain(
                "enumeration box too large; reduce h_max or d_max".into(),
            ));
        }
        let mut coeffs = vec![0i64; d + 1];
        enumerate_box(&mut coeffs, 0, &bounds, &mut |c: &[i64]| -> Result<()> {
            if c[d] < 1 {
                return Ok(());
            }
            if c[0] == 0 {
                return Ok(()); // reducible, or the excluded zero
            }
            let trimmed = normalize_trim(c);
            if trimmed.len() != d + 1 || content(&trimmed) != 1 {
                return Ok(());
            }
            if !is_irreducible_z(&trimmed)? {
                return Ok(());
            }
            let poly = LaurentPolynomialZ::univariate(&trimmed);
            let m = mahler_univariate(&poly, 1e-12)?;
            if m.value <= d as f64 * h_max + d as f64 * tol + m.err_bound {
                out.push(AlgebraicNumber { min_poly: trimmed });
            }
            Ok(())
        })?;
    }
    Ok(out)
}

fn enumerate_box(
    coeffs: &mut Vec<i64>,
    idx: usize,
    bounds: &[i64],
    visit: &mut impl FnMut(&[i64]) -> Result<()>,
) -> Result<()> {
    if idx == coeffs.len() {
        return visit(coeffs);
    }
    for c in -bounds[idx]..=bounds[idx] {
        coeffs[idx] = c;
        enumerate_box(coeffs, idx + 1, bounds, visit)?;
    }
    Ok(())
}

/// Both sides of the rank-one height sandwich for a real quadratic field.
#[derive(Debug, Clone, Serialize)]
pub struct AkhtariVaalerReport {
    pub label: String,
    /// h_F d_F^r (2r)! / (2 w_F (r!)^4) * prod h(gamma_i), at r = 1.
    pub lower: f64,
    /// h_F d_F^r / w_F * prod h(gamma_i), at r = 1.
    pub upper: f64,
    pub zeta_star_abs: f64,
    /// Weil height of the fundamental unit, h(gamma_1) = R/2.
    pub unit_height: f64,
    /// |h(gamma_1) - m(min_poly)/2| when the unit's trace fits exactly in
    /// f64; None when the unit is too large to carry into the Mahler path.
    pub mahler_cross_check: Option<f64>,
    pub max_deviation: f64,
}

/// Evaluate the height sandwich at unit rank one: for a real quadratic
/// field both sides collapse to h R / w, which must match |zeta_F^*(0)|.
/// The fundamental unit has conjugate of modulus 1/eps, so
/// h(gamma_1) = log(eps)/2 = R/2.
pub fn akhtari_vaaler_check(field: &NumberFieldRecord) -> Result<AkhtariVaalerReport> {
    if !(field.degree == 2 && field.r1 == 2) {
        return Err(Error::Domain(format!(
            "{} is not a real quadratic field",
            field.label
        )));
    }
    let unit = fundamental_unit(field.disc)?;
    let unit_height = unit.regulator / 2.0;
    let h = field.class_number as f64;
    let w = field.torsion as f64;
    let d = field.degree as f64;
    // r = 1: (2r)! / (r!)^4 = 2
    let lower = h * d * 2.0 / (2.0 * w) * unit_height;
    let upper = h * d / w * unit_height;
    let zeta_star_abs = special_value_zero(field)?.leading.abs();

    let mahler_cross_check = match unit.min_poly_coeffs() {
        Some((trace, norm)) if trace.abs() < (1i64 << 50) => {
            let p = LaurentPolynomialZ::univariate(&[norm, -trace, 1]);
            let m = mahler_univariate(&p, 1e-12)?;
            Some((m.value / 2.0 - unit_height).abs())
        }
        _ => None,
    };

    let max_deviation = (lower - zeta_star_abs)
        .abs()
        .max((upper - zeta_star_abs).abs())
        / zeta_star_abs.max(1e-300);
    if lower > zeta_star_abs * (1.0 + 1e-12) || zeta_star_abs > upper * (1.0 + 1e-12) {
        return Err(Error::Contract(format!(
            "height sandwich violated for {}: {lower} <= {zeta_star_abs} <= {upper}",
            field.label
        )));
    }
    Ok(AkhtariVaalerReport {
        label: field.label.clone(),
        lower,
        upper,
        zeta_star_abs,
        unit_height,
        mahler_cross_check,
        max_deviation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nf::build_quadratic;

    #[test]
    fn heights_of_simple_numbers() {
        // min_poly x - 2: h = log 2
        let two = AlgebraicNumber::new(vec![-2, 1]).unwrap();
        let h = weil_height(&two, 1e-12).unwrap();
        assert!((h.value - 2f64.ln()).abs() < 1e-12);

        // roots of unity have height zero
        for d in [1u64, 2, 3, 4, 6, 12] {
            let phi = crate::mahler::cyclotomic_poly(d);
            let zeta = AlgebraicNumber::new(phi).unwrap();
            let h = weil_height(&zeta, 1e-12).unwrap();
            assert!(h.value.abs() < 1e-10, "root of unity of order {d}");
        }

        // golden ratio: h = log((1+sqrt5)/2) / 2
        let phi = AlgebraicNumber::new(vec![-1, -1, 1]).unwrap();
        let h = weil_height(&phi, 1e-12).unwrap();
        let expect = ((1.0 + 5f64.sqrt()) / 2.0).ln() / 2.0;
        assert!((h.value - expect).abs() < 1e-12);

        // reducible input is rejected
        assert!(AlgebraicNumber::new(vec![1, 2, 1]).is_err()); // (x+1)^2
        assert!(AlgebraicNumber::new(vec![-1, 0, 1]).is_err()); // (x-1)(x+1)
        assert!(AlgebraicNumber::new(vec![2, 4]).is_err()); // content 2
    }

    #[test]
    fn irreducibility_certification() {
        assert!(is_irreducible_z(&[-1, -1, 1]).unwrap()); // x^2-x-1
        assert!(is_irreducible_z(&[1, 1, 1]).unwrap()); // Phi_3
        assert!(is_irreducible_z(&[-1, -1, 0, 1]).unwrap()); // x^3-x-1
        assert!(is_irreducible_z(&[2, 0, 1]).unwrap()); // x^2+2
        assert!(!is_irreducible_z(&[-1, 0, 0, 0, 1]).unwrap()); // x^4-1
        assert!(!is_irreducible_z(&[0, 1, 1]).unwrap()); // x(x+1)
        assert!(!is_irreducible_z(&[1, 2, 1]).unwrap());
        // degree-4 with only quadratic factors: (x^2+1)(x^2+2)
        assert!(!is_irreducible_z(&[2, 0, 3, 0, 1]).unwrap());
        // x^4 + 1 = Phi_8 is irreducible over Z
        assert!(is_irreducible_z(&[1, 0, 0, 0, 1]).unwrap());
    }

    #[test]
    fn enumerate_degree_one_log2() {
        let out = enumerate_heights(2f64.ln(), 1, 1e-9).unwrap();
        let mut polys: Vec<Vec<i64>> = out.iter().map(|a| a.min_poly().to_vec()).collect();
        polys.sort();
        // +-1, +-2, +-1/2 as minimal polynomials
        let mut expected = vec![
            vec![-1i64, 1],
            vec![1, 1],
            vec![-2, 1],
            vec![2, 1],
            vec![-1, 2],
            vec![1, 2],
        ];
        expected.sort();
        assert_eq!(polys, expected);
    }

    #[test]
    fn enumerate_kronecker_set() {
        let out = enumerate_heights(0.0, 2, 1e-9).unwrap();
        let mut polys: Vec<Vec<i64>> = out.iter().map(|a| a.min_poly().to_vec()).collect();
        polys.sort();
        let mut expected = vec![
            vec![-1i64, 1], // 1
            vec![1, 1],     // -1
            vec![1, 1, 1],  // Phi_3
            vec![1, 0, 1],  // Phi_4
            vec![1, -1, 1], // Phi_6
        ];
        expected.sort();
        assert_eq!(polys, expected);
    }

    #[test]
    fn counts_nondecreasing_in_height() {
        let mut prev = 0;
        for h in [0.0, 0.3, 0.5, 0.7] {
            let n = enumerate_heights(h, 2, 1e-9).unwrap().len();
            assert!(n >= prev);
            prev = n;
        }
    }

    #[test]
    fn unit_height_inversion_symmetry() {
        // h(alpha) = h(1/alpha) for units: reverse the minimal polynomial
        let candidates: [&[i64]; 3] = [&[-1, -1, 1], &[-1, 3, 1], &[1, -4, 1]];
        for c in candidates {
            let a = AlgebraicNumber::new(c.to_vec()).unwrap();
            let mut rev = c.to_vec();
            rev.reverse();
            if *rev.last().unwrap() < 0 {
                for x in rev.iter_mut() {
                    *x = -*x;
                }
            }
            let b = AlgebraicNumber::new(rev).unwrap();
            let ha = weil_height(&a, 1e-12).unwrap();
            let hb = weil_height(&b, 1e-12).unwrap();
            assert!((ha.value - hb.value).abs() < 1e-10);
        }
    }

    #[test]
    fn conjugates_share_the_height() {
        // conjugate roots share the minimal polynomial, hence the height;
        // asserted as a normalization property of the representation
        let a = AlgebraicNumber::new(vec![-1, -1, 1]).unwrap();
        let b = AlgebraicNumber::new(vec![-1, -1, 1]).unwrap();
        assert_eq!(a, b);
        let ha = weil_height(&a, 1e-12).unwrap();
        let hb = weil_height(&b, 1e-12).unwrap();
        assert_eq!(ha.value, hb.value);
    }

    #[test]
    fn integer_power_heights() {
        // h(a^n) = n h(a) for rational integers
        for a in [2i64, 3, 5] {
            let base = AlgebraicNumber::new(vec![-a, 1]).unwrap();
            let hb = weil_height(&base, 1e-12).unwrap().value;
            for n in 1..=3u32 {
                let pow = AlgebraicNumber::new(vec![-a.pow(n), 1]).unwrap();
                let hp = weil_height(&pow, 1e-12).unwrap().value;
                assert!((hp - n as f64 * hb).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn smyth_bound_on_smaller_enumeration() {
        // theta_0 = real root of x^3 - x - 1 by bisection
        let f = |x: f64| x * x * x - x - 1.0;
        let (mut lo, mut hi) = (1.0f64, 1.5f64);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if f(mid) > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let theta0 = 0.5 * (lo + hi);
        assert!((theta0 - 1.324_717_957_244_746).abs() < 1e-12);

        let out = enumerate_heights(0.25, 3, 1e-9).unwrap();
        assert!(!out.is_empty());
        for a in &out {
            if !a.is_reciprocal() {
                let h = weil_height(a, 1e-12).unwrap();
                assert!(
                    a.degree() as f64 * h.value >= theta0.ln() - 1e-9,
                    "Smyth violated by {:?}",
                    a.min_poly()
                );
            }
        }
    }

    #[test]
    fn sandwich_for_small_real_quadratics() {
        for d in [5i64, 8, 13, 60, 229] {
            let f = build_quadratic(d).unwrap();
            let rep = akhtari_vaaler_check(&f).unwrap();
            assert!(rep.max_deviation < 1e-12, "d={d}: {}", rep.max_deviation);
            if let Some(dev) = rep.mahler_cross_check {
                assert!(dev < 1e-9, "d={d} mahler cross-check {dev}");
            }
        }
        let qi = build_quadratic(-4).unwrap();
        assert!(akhtari_vaaler_check(&qi).is_err());
    }
}
