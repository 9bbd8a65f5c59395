//! Logarithmic Mahler measure of integer Laurent polynomials.
//!
//! Univariate measures go through Jensen's formula: the measure is
//! log|lead| plus the log of every root modulus above 1, with roots from
//! the companion-matrix eigenvalues (Hessenberg QR) refined by Aberth
//! simultaneous iteration until the scaled residuals sit at the requested
//! tolerance. Multivariate measures are tensor-product torus quadrature
//! with half-step offsets (log|P| is integrable across torus zeros) and
//! Richardson doubling of the per-circle point count.
//!
//! Zero-measure detection is exact: a polynomial measures zero iff it is
//! a monomial times a product of cyclotomics evaluated at monomials, and
//! the divisor sweep certifies that by exact division.

use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::Serialize;
use std::collections::BTreeMap;

/// An integer Laurent polynomial in finitely many variables x1, x2, ...
/// Terms map exponent vectors to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPolynomialZ {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, i64>,
}

impl LaurentPolynomialZ {
    pub fn new(nvars: usize, raw: impl IntoIterator<Item = (Vec<i32>, i64)>) -> Result<Self> {
        let mut terms: BTreeMap<Vec<i32>, i64> = BTreeMap::new();
        for (e, c) in raw {
            if e.len() != nvars {
                return Err(Error::Contract(format!(
                    "exponent vector of arity {} in a {}-variable polynomial",
                    e.len(),
                    nvars
                )));
            }
            *terms.entry(e).or_insert(0) += c;
        }
        terms.retain(|_, c| *c != 0);
        Ok(Self::canonical(nvars, terms))
    }

    /// Normal form: trailing variables that appear in no term are dropped,
    /// so equal polynomials compare equal regardless of construction path.
    fn canonical(nvars: usize, terms: BTreeMap<Vec<i32>, i64>) -> Self {
        let used = terms
            .keys()
            .map(|e| e.iter().rposition(|&x| x != 0).map(|i| i + 1).unwrap_or(0))
            .max()
            .unwrap_or(0);
        if used == nvars {
            return Self { nvars, terms };
        }
        let terms = terms
            .into_iter()
            .map(|(e, c)| (e[..used].to_vec(), c))
            .collect();
        Self { nvars: used, terms }
    }

    pub fn constant(c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Vec::new(), c);
        }
        Self { nvars: 0, terms }
    }

    /// Univariate polynomial from ascending coefficients.
    pub fn univariate(coeffs: &[i64]) -> Self {
        let mut terms = BTreeMap::new();
        for (e, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                terms.insert(vec![e as i32], c);
            }
        }
        Self::canonical(1, terms)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &i64)> {
        self.terms.iter()
    }

    pub fn coefficient_abs_sum(&self) -> f64 {
        self.terms.values().map(|c| c.unsigned_abs() as f64).sum()
    }

    /// Minimal clearing: multiply by the monomial that shifts every
    /// negative exponent up to zero (and nothing more).
    pub fn cleared(&self) -> Self {
        if self.terms.is_empty() {
            return self.clone();
        }
        let mut shift = vec![0i32; self.nvars];
        for e in self.terms.keys() {
            for (i, &ei) in e.iter().enumerate() {
                shift[i] = shift[i].min(ei);
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, &c)| {
                let ne: Vec<i32> = e.iter().zip(&shift).map(|(&ei, &s)| ei - s.min(0)).collect();
                (ne, c)
            })
            .collect();
        Self { nvars: self.nvars, terms }
    }

    /// Degree in variable i (0-based) of the cleared form.
    pub fn degree_in(&self, i: usize) -> i32 {
        if i >= self.nvars {
            return 0;
        }
        let cleared = self.cleared();
        cleared.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    /// delta(P) = sum_i i * deg_{x_i}(cleared P), variables 1-indexed.
    pub fn delta_degree(&self) -> u64 {
        let cleared = self.cleared();
        let mut total = 0u64;
        for i in 0..self.nvars {
            let d = cleared.terms.keys().map(|e| e[i]).max().unwrap_or(0);
            total += (i as u64 + 1) * d as u64;
        }
        total
    }

    /// Ascending coefficient vector, for effectively-univariate input.
    fn univariate_coeffs(&self) -> Option<Vec<i64>> {
        if self.nvars > 1 {
            return None;
        }
        if self.terms.is_empty() {
            return Some(Vec::new());
        }
        let cleared = self.cleared();
        if self.nvars == 0 {
            return Some(vec![cleared.terms[&Vec::new()]]);
        }
        let deg = cleared.terms.keys().map(|e| e[0]).max().unwrap() as usize;
        let mut coeffs = vec![0i64; deg + 1];
        for (e, &c) in &cleared.terms {
            coeffs[e[0] as usize] = c;
        }
        Some(coeffs)
    }

    /// Canonical text form; `parse` round-trips it.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mut t = String::new();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &ei)| ei != 0)
                .map(|(i, &ei)| {
                    if ei == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, ei)
                    }
                })
                .collect();
            if vars.is_empty() {
                t.push_str(&c.to_string());
            } else if *c == 1 {
                t.push_str(&vars.join("*"));
            } else if *c == -1 {
                t.push('-');
                t.push_str(&vars.join("*"));
            } else {
                t.push_str(&format!("{}*{}", c, vars.join("*")));
            }
            parts.push(t);
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(stripped) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }

    /// Parse `c*x1^e1*...*xn^en` terms joined by + or -. Coefficients and
    /// exponents are integers; `^e` defaults to 1, the coefficient to 1.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms_raw: Vec<(i64, String)> = Vec::new();
        let mut sign = 1i64;
        let mut cur = String::new();
        let mut first = true;
        for ch in text.chars() {
            match ch {
                '+' | '-' => {
                    // distinguish a binary sign from an exponent sign (x1^-2)
                    if cur.trim_end().ends_with('^') {
                        cur.push(ch);
                        continue;
                    }
                    if first && cur.trim().is_empty() {
                        sign = if ch == '-' { -1 } else { 1 };
                        first = false;
                        continue;
                    }
                    if !cur.trim().is_empty() {
                        terms_raw.push((sign, std::mem::take(&mut cur)));
                    }
                    sign = if ch == '-' { -1 } else { 1 };
                }
                _ => {
                    if !ch.is_whitespace() || !cur.is_empty() {
                        cur.push(ch);
                    }
                    first = false;
                }
            }
        }
        if !cur.trim().is_empty() {
            terms_raw.push((sign, cur));
        }
        if terms_raw.is_empty() {
            return Err(Error::Parse(format!("no terms in {text:?}")));
        }

        let mut nvars = 0usize;
        let mut parsed: Vec<(i64, Vec<(usize, i32)>)> = Vec::new();
        for (sgn, term) in terms_raw {
            let mut coeff = sgn;
            let mut exps: Vec<(usize, i32)> = Vec::new();
            for factor in term.split('*') {
                let f = factor.trim();
                if f.is_empty() {
                    return Err(Error::Parse(format!("empty factor in term {term:?}")));
                }
                if let Some(rest) = f.strip_prefix('x') {
                    let (var_s, exp_s) = match rest.split_once('^') {
                        Some((v, e)) => (v, Some(e)),
                        None => (rest, None),
                    };
                    let var: usize = var_s
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad variable in {f:?}")))?;
                    if var == 0 {
                        return Err(Error::Parse("variables are numbered from x1".into()));
                    }
                    let exp: i32 = match exp_s {
                        Some(e) => e
                            .trim()
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad exponent in {f:?}")))?,
                        None => 1,
                    };
                    nvars = nvars.max(var);
                    exps.push((var - 1, exp));
                } else {
                    let c: i64 = f
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient {f:?}")))?;
                    coeff *= c;
                }
            }
            parsed.push((coeff, exps));
        }
        let raw: Vec<(Vec<i32>, i64)> = parsed
            .into_iter()
            .map(|(c, exps)| {
                let mut e = vec![0i32; nvars];
                for (v, k) in exps {
                    e[v] += k;
                }
                (e, c)
            })
            .collect();
        Self::new(nvars, raw)
    }
}

/// Result of a Mahler-measure computation.
#[derive(Debug, Clone, Serialize)]
pub struct MahlerResult {
    pub value: f64,
    pub method: MahlerMethod,
    pub err_bound: f64,
    pub cyclotomic_flag: bool,
    /// False when quadrature hit its grid cap before meeting tol.
    pub converged: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MahlerMethod {
    JensenExact,
    Quadrature,
}

const MAX_JENSEN_DEGREE: usize = 64;

/// Mahler measure of a univariate Laurent polynomial by Jensen's formula.
pub fn mahler_univariate(p: &LaurentPolynomialZ, tol: f64) -> Result<MahlerResult> {
    if p.is_zero() {
        return Err(Error::Domain("Mahler measure of the zero polynomial".into()));
    }
    let coeffs = p
        .univariate_coeffs()
        .ok_or_else(|| Error::Domain("mahler_univariate needs one variable".into()))?;
    // roots at the origin contribute log max(1, 0) = 0: strip them
    let first_nonzero = coeffs.iter().position(|&c| c != 0).expect("nonzero polynomial");
    let q: Vec<i64> = coeffs[first_nonzero..].to_vec();
    let deg = q.len() - 1;
    if deg > MAX_JENSEN_DEGREE {
        return Err(Error::Domain(format!(
            "degree {deg} exceeds the univariate cap {MAX_JENSEN_DEGREE}"
        )));
    }
    let lead = *q.last().unwrap();

    let (value, err_bound) = if deg == 0 {
        ((lead.unsigned_abs() as f64).ln(), 2.0 * f64::EPSILON)
    } else {
        let roots = polynomial_roots(&q, tol)?;
        let mut m = (lead.unsigned_abs() as f64).ln();
        let mut err = 4.0 * f64::EPSILON * (deg as f64 + 1.0);
        let qf: Vec<f64> = q.iter().map(|&c| c as f64).collect();
        for r in &roots {
            let modulus = r.norm();
            if modulus > 1.0 {
                m += modulus.ln();
            }
            // Newton-correction estimate of the root error
            let (pv, dv) = horner_with_derivative(&qf, *r);
            let delta = if dv.norm() > 0.0 { (pv / dv).norm() } else { tol };
            if modulus > 0.5 {
                err += delta.min(1.0);
            }
        }
        (m, err)
    };

    let threshold = (4.0 * err_bound).max(1e-8);
    let cyclotomic_flag = value.abs() <= threshold && is_cyclotomic_monomial_product(p);

    Ok(MahlerResult {
        value,
        method: MahlerMethod::JensenExact,
        err_bound,
        cyclotomic_flag,
        converged: true,
    })
}

/// Certified lower bound for exp(m(P)): the coefficient inequality
/// exp(m(P)) >= 2^(-sum_i deg_{x_i}(cleared P)) * sum |a_j|.
pub fn mahler_coefficient_bound(p: &LaurentPolynomialZ) -> Result<f64> {
    if p.is_zero() {
        return Err(Error::Domain("coefficient bound of the zero polynomial".into()));
    }
    let cleared = p.cleared();
    let total_deg: i64 = (0..p.nvars).map(|i| cleared.degree_in(i) as i64).sum();
    Ok(2f64.powi(-total_deg as i32) * cleared.coefficient_abs_sum())
}

/// Grid cap for quadrature doubling (points per circle).
pub const QUADRATURE_CAP: usize = 4096;

/// Mahler measure of a multivariate polynomial by tensor-product torus
/// quadrature with half-step offsets and Richardson doubling. Returns an
/// explicit `converged = false` marker when the cap is hit.
pub fn mahler_multivariate(p: &LaurentPolynomialZ, tol: f64) -> Result<MahlerResult> {
    if p.is_zero() {
        return Err(Error::Domain("Mahler measure of the zero polynomial".into()));
    }
    if p.nvars < 2 {
        return Err(Error::Domain("mahler_multivariate needs at least two variables".into()));
    }
    let cleared = p.cleared();
    let mut n = 16usize;
    let mut prev = torus_quadrature(&cleared, n);
    let mut converged = false;
    let mut delta = f64::INFINITY;
    while n < QUADRATURE_CAP {
        n *= 2;
        let cur = torus_quadrature(&cleared, n);
        delta = (cur - prev).abs();
        prev = cur;
        if delta < tol {
            converged = true;
            break;
        }
    }
    let value = prev;
    let err_bound = if delta.is_finite() { delta } else { tol };
    let threshold = (4.0 * err_bound).max(1e-8);
    let cyclotomic_flag = value.abs() <= threshold && is_cyclotomic_monomial_product(p);
    Ok(MahlerResult {
        value,
        method: MahlerMethod::Quadrature,
        err_bound,
        cyclotomic_flag,
        converged,
    })
}

/// Mean of log|P| over the n-torus sampled at half-offset N-point grids.
fn torus_quadrature(p: &LaurentPolynomialZ, n: usize) -> f64 {
    let nv = p.nvars;
    let (emin, emax): (Vec<i32>, Vec<i32>) = {
        let mut lo = vec![i32::MAX; nv];
        let mut hi = vec![i32::MIN; nv];
        for e in p.terms.keys() {
            for i in 0..nv {
                lo[i] = lo[i].min(e[i]);
                hi[i] = hi[i].max(e[i]);
            }
        }
        (lo, hi)
    };
    // power tables: tables[axis][grid j][exponent - emin]
    let tables: Vec<Vec<Vec<Complex64>>> = (0..nv)
        .map(|axis| {
            (0..n)
                .map(|j| {
                    let theta = 2.0 * std::f64::consts::PI * (j as f64 + 0.5) / n as f64;
                    let z = Complex64::from_polar(1.0, theta);
                    power_range(z, emin[axis], emax[axis])
                })
                .collect()
        })
        .collect();

    let terms: Vec<(&Vec<i32>, f64)> = p.terms.iter().map(|(e, &c)| (e, c as f64)).collect();

    let mut acc = crate::numeric::KahanSum::new();
    let mut idx = vec![0usize; nv];
    loop {
        let mut val = Complex64::new(0.0, 0.0);
        for (e, c) in &terms {
            let mut t = Complex64::new(*c, 0.0);
            for axis in 0..nv {
                t *= tables[axis][idx[axis]][(e[axis] - emin[axis]) as usize];
            }
            val += t;
        }
        let mut modulus = val.norm();
        if modulus < 1e-280 {
            // deterministic quarter-step jitter off the structured zero
            let shift = 0.5 / (n * n) as f64;
            let mut val2 = Complex64::new(0.0, 0.0);
            for (e, c) in &terms {
                let mut t = Complex64::new(*c, 0.0);
                for axis in 0..nv {
                    let theta = 2.0 * std::f64::consts::PI * (idx[axis] as f64 + 0.5 + shift)
                        / n as f64;
                    t *= Complex64::from_polar(1.0, theta * e[axis] as f64);
                }
                val2 += t;
            }
            modulus = val2.norm().max(1e-280);
        }
        acc.add(modulus.ln());

        // odometer over the grid
        let mut k = 0;
        loop {
            if k == nv {
                return acc.value() / (n as f64).powi(nv as i32);
            }
            idx[k] += 1;
            if idx[k] == n {
                idx[k] = 0;
                k += 1;
            } else {
                break;
            }
        }
    }
}

fn power_range(z: Complex64, emin: i32, emax: i32) -> Vec<Complex64> {
    let mut out = Vec::with_capacity((emax - emin + 1) as usize);
    let mut cur = powi_complex(z, emin);
    for _ in emin..=emax {
        out.push(cur);
        cur *= z;
    }
    out
}

fn powi_complex(z: Complex64, e: i32) -> Complex64 {
    if e == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let base = if e < 0 { z.inv() } else { z };
    let mut acc = Complex64::new(1.0, 0.0);
    for _ in 0..e.unsigned_abs() {
        acc *= base;
    }
    acc
}

// ---------------------------------------------------------------------
// root finding: companion matrix eigenvalues + Aberth polish
// ---------------------------------------------------------------------

fn horner_with_derivative(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut d = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        d = d * z + p;
        p = p * z + c;
    }
    (p, d)
}

/// All complex roots of an integer polynomial (ascending coefficients,
/// nonzero leading term), refined until the per-root scaled residual
/// drops below tol.
pub fn polynomial_roots(coeffs: &[i64], tol: f64) -> Result<Vec<Complex64>> {
    let deg = coeffs.len() - 1;
    assert!(deg >= 1 && coeffs[deg] != 0);
    let monic: Vec<f64> = coeffs.iter().map(|&c| c as f64 / coeffs[deg] as f64).collect();
    let mut roots = companion_eigenvalues(&monic);
    let cf: Vec<f64> = coeffs.iter().map(|&c| c as f64).collect();

    // Aberth simultaneous refinement
    let tol_resid = tol.max(1e-14);
    for _iter in 0..200 {
        let mut worst = 0.0f64;
        let snapshot = roots.clone();
        for i in 0..roots.len() {
            let z = roots[i];
            let (pv, dv) = horner_with_derivative(&cf, z);
            let scale = residual_scale(&cf, z.norm());
            worst = worst.max(pv.norm() / scale);
            if pv.norm() == 0.0 {
                continue;
            }
            let newton = if dv.norm() > 0.0 { pv / dv } else { Complex64::new(1e-3, 1e-3) };
            let mut repel = Complex64::new(0.0, 0.0);
            for (j, w) in snapshot.iter().enumerate() {
                if j != i {
                    let diff = z - w;
                    if diff.norm() > 1e-300 {
                        repel += diff.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repel;
            let step = if denom.norm() > 1e-12 { newton / denom } else { newton };
            roots[i] = z - step;
        }
        if worst < tol_resid {
            break;
        }
    }
    // final residual audit
    for z in &roots {
        let (pv, _) = horner_with_derivative(&cf, *z);
        let scale = residual_scale(&cf, z.norm());
        if pv.norm() > 1e-7 * scale {
            return Err(Error::Unconverged(format!(
                "root refinement stalled: residual {} at {z}",
                pv.norm() / scale
            )));
        }
    }
    Ok(roots)
}

fn residual_scale(coeffs: &[f64], r: f64) -> f64 {
    let mut scale = 0.0;
    let mut rp = 1.0;
    for &c in coeffs {
        scale += c.abs() * rp;
        rp *= r.max(1e-6);
    }
    scale.max(1e-300)
}

/// Eigenvalues of the companion matrix of a monic polynomial, by the
/// Francis double-shift QR iteration on the (already Hessenberg) matrix.
fn companion_eigenvalues(monic: &[f64]) -> Vec<Complex64> {
    let n = monic.len() - 1;
    let mut a = vec![vec![0.0f64; n]; n];
    for i in 1..n {
        a[i][i - 1] = 1.0;
    }
    for i in 0..n {
        a[i][n - 1] = -monic[i];
    }
    hqr_eigenvalues(&mut a)
}

/// Classic real-Hessenberg QR eigenvalue iteration with exceptional
/// shifts; returns all eigenvalues as complex numbers. Stalled blocks fall
/// back to the raw diagonal and are mopped up by the Aberth polish.
fn hqr_eigenvalues(a: &mut [Vec<f64>]) -> Vec<Complex64> {
    let n = a.len();
    let mut eig = vec![Complex64::new(0.0, 0.0); n];
    let mut anorm = 0.0f64;
    for i in 0..n {
        for j in i.saturating_sub(1)..n {
            anorm += a[i][j].abs();
        }
    }
    let mut nn = n as isize - 1;
    let mut t = 0.0f64;
    while nn >= 0 {
        let mut its = 0;
        loop {
            // search for a small subdiagonal element
            let mut l = nn;
            while l >= 1 {
                let s = a[(l - 1) as usize][(l - 1) as usize].abs()
                    + a[l as usize][l as usize].abs();
                let s = if s == 0.0 { anorm } else { s };
                if a[l as usize][(l - 1) as usize].abs() <= f64::EPSILON * s {
                    a[l as usize][(l - 1) as usize] = 0.0;
                    break;
                }
                l -= 1;
            }
            let x = a[nn as usize][nn as usize];
            if l == nn {
                eig[nn as usize] = Complex64::new(x + t, 0.0);
                nn -= 1;
                break;
            }
            let y = a[(nn - 1) as usize][(nn - 1) as usize];
            let w = a[nn as usize][(nn - 1) as usize] * a[(nn - 1) as usize][nn as usize];
            if l == nn - 1 {
                let p = 0.5 * (y - x);
                let q = p * p + w;
                let z = q.abs().sqrt();
                let x_t = x + t;
                if q >= 0.0 {
                    let z = p + z.copysign(p);
                    eig[(nn - 1) as usize] = Complex64::new(x_t + z, 0.0);
                    eig[nn as usize] = if z != 0.0 {
                        Complex64::new(x_t - w / z, 0.0)
                    } else {
                        Complex64::new(x_t + z, 0.0)
                    };
                } else {
                    eig[(nn - 1) as usize] = Complex64::new(x_t + p, z);
                    eig[nn as usize] = Complex64::new(x_t + p, -z);
                }
                nn -= 2;
                break;
            }
            if its == 60 {
                eig[nn as usize] = Complex64::new(x + t, 0.0);
                nn -= 1;
                break;
            }
            let (mut x, mut y, mut w) = (x, y, w);
            if its == 10 || its == 20 {
                // exceptional shift
                t += x;
                for i in 0..=nn as usize {
                    a[i][i] -= x;
                }
                let s = a[nn as usize][(nn - 1) as usize].abs()
                    + a[(nn - 1) as usize][(nn - 2) as usize].abs();
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            its += 1;
            // look for two consecutive small subdiagonal elements
            let mut m = nn - 2;
            let (mut p, mut q, mut r) = (0.0f64, 0.0f64, 0.0f64);
            while m >= l {
                let z = a[m as usize][m as usize];
                let rr = x - z;
                let ss = y - z;
                p = (rr * ss - w) / a[(m + 1) as usize][m as usize]
                    + a[m as usize][(m + 1) as usize];
                q = a[(m + 1) as usize][(m + 1) as usize] - z - rr - ss;
                r = a[(m + 2) as usize][(m + 1) as usize];
                let s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if m == l {
                    break;
                }
                let u = a[m as usize][(m - 1) as usize].abs() * (q.abs() + r.abs());
                let v = p.abs()
                    * (a[(m - 1) as usize][(m - 1) as usize].abs()
                        + a[m as usize][m as usize].abs()
                        + a[(m + 1) as usize][(m + 1) as usize].abs());
                if u <= f64::EPSILON * v {
                    break;
                }
                m -= 1;
            }
            for i in (m + 2)..=nn {
                a[i as usize][(i - 2) as usize] = 0.0;
                if i != m + 2 {
                    a[i as usize][(i - 3) as usize] = 0.0;
                }
            }
            // double QR step on rows l..nn, columns m..nn
            for k in m..nn {
                if k != m {
                    p = a[k as usize][(k - 1) as usize];
                    q = a[(k + 1) as usize][(k - 1) as usize];
                    r = if k != nn - 1 { a[(k + 2) as usize][(k - 1) as usize] } else { 0.0 };
                    x = p.abs() + q.abs() + r.abs();
                    if x != 0.0 {
                        p /= x;
                        q /= x;
                        r /= x;
                    }
                }
                let s = (p * p + q * q + r * r).sqrt().copysign(p);
                if s == 0.0 {
                    continue;
                }
                if k == m {
                    if l != m {
                        a[k as usize][(k - 1) as usize] = -a[k as usize][(k - 1) as usize];
                    }
                } else {
                    a[k as usize][(k - 1) as usize] = -s * x;
                }
                p += s;
                let px = p / s;
                let qy = q / s;
                let rz = r / s;
                let qp = q / p;
                let rp = r / p;
                // row modification
                for j in (k as usize)..=(nn as usize) {
                    let mut pp = a[k as usize][j] + qp * a[(k + 1) as usize][j];
                    if k != nn - 1 {
                        pp += rp * a[(k + 2) as usize][j];
                    }
                    a[k as usize][j] -= pp * px;
                    a[(k + 1) as usize][j] -= pp * qy;
                    if k != nn - 1 {
                        a[(k + 2) as usize][j] -= pp * rz;
                    }
                }
                // column modification
                let upper = if nn < k + 3 { nn } else { k + 3 };
                for i in (l as usize)..=(upper as usize) {
                    let mut pp = px * a[i][k as usize] + qy * a[i][(k + 1) as usize];
                    if k != nn - 1 {
                        pp += rz * a[i][(k + 2) as usize];
                    }
                    a[i][k as usize] -= pp;
                    a[i][(k + 1) as usize] -= pp * qp;
                    if k != nn - 1 {
                        a[i][(k + 2) as usize] -= pp * rp;
                    }
                }
            }
        }
    }
    eig
}

// ---------------------------------------------------------------------
// exact cyclotomic-product certification
// ---------------------------------------------------------------------

/// Coefficients of the d-th cyclotomic polynomial, ascending.
pub fn cyclotomic_poly(d: u64) -> Vec<i64> {
    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e
    let mut num = vec![0i64; d as usize + 1];
    num[0] = -1;
    num[d as usize] = 1;
    let mut quotient = num;
    for e in 1..d {
        if d % e == 0 {
            let phi_e = cyclotomic_poly(e);
            quotient = divide_exact_1d(&quotient, &phi_e).expect("cyclotomic division is exact");
        }
    }
    quotient
}

/// Exact division of univariate integer polynomials; None if not exact.
fn divide_exact_1d(num: &[i64], den: &[i64]) -> Option<Vec<i64>> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    if dd > dn {
        return None;
    }
    let mut rem: Vec<i64> = num.to_vec();
    let mut quo = vec![0i64; dn - dd + 1];
    let lead = *den.last().unwrap();
    for k in (0..quo.len()).rev() {
        let c = rem[k + dd];
        if c % lead != 0 {
            return None;
        }
        let q = c / lead;
        quo[k] = q;
        for (i, &dc) in den.iter().enumerate() {
            rem[k + i] -= q * dc;
        }
    }
    if rem.iter().all(|&c| c == 0) {
        Some(quo)
    } else {
        None
    }
}

/// Exact test: is P (up to sign) a monomial times a product of cyclotomic
/// polynomials evaluated at monomials? This is precisely the vanishing
/// locus of the Mahler measure on integer Laurent polynomials.
pub fn is_cyclotomic_monomial_product(p: &LaurentPolynomialZ) -> bool {
    if p.is_zero() {
        return false;
    }
    let cleared = p.cleared();
    if p.nvars <= 1 {
        let coeffs = cleared.univariate_coeffs().expect("checked nvars <= 1");
        return is_cyclotomic_product_1d(&coeffs);
    }
    is_cyclotomic_product_nd(&cleared)
}

fn is_cyclotomic_product_1d(coeffs: &[i64]) -> bool {
    let first = match coeffs.iter().position(|&c| c != 0) {
        Some(i) => i,
        None => return false,
    };
    let mut q: Vec<i64> = coeffs[first..].to_vec();
    loop {
        let deg = q.len() - 1;
        if deg == 0 {
            return q[0] == 1 || q[0] == -1;
        }
        let mut divided = false;
        let mut d = 1u64;
        while d <= 6 * deg as u64 + 6 {
            if crate::numeric::euler_phi(d) as usize <= deg {
                let phi = cyclotomic_poly(d);
                if let Some(quo) = divide_exact_1d(&q, &phi) {
                    q = quo;
                    divided = true;
                    break;
                }
            }
            d += 1;
        }
        if !divided {
            return false;
        }
    }
}

/// Multivariate certification by recursive exact division with candidate
/// factors Phi_d(x^v) over primitive exponent vectors v compatible with
/// the exponent spread.
fn is_cyclotomic_product_nd(p: &LaurentPolynomialZ) -> bool {
    if p.terms.len() == 1 {
        let c = *p.terms.values().next().unwrap();
        return c == 1 || c == -1;
    }
    let nv = p.nvars;
    let spread: Vec<i32> = (0..nv)
        .map(|i| {
            let lo = p.terms.keys().map(|e| e[i]).min().unwrap_or(0);
            let hi = p.terms.keys().map(|e| e[i]).max().unwrap_or(0);
            hi - lo
        })
        .collect();
    let max_spread = *spread.iter().max().unwrap_or(&0);
    if max_spread == 0 {
        return false;
    }
    for d in 1..=(6 * max_spread as u64 + 6) {
        let phi_deg = crate::numeric::euler_phi(d) as i32;
        if phi_deg > max_spread {
            continue;
        }
        let phi = cyclotomic_poly(d);
        // candidate exponent vectors: |v_i| * phi_deg <= spread_i
        let bounds: Vec<i32> = spread.iter().map(|&s| s / phi_deg).collect();
        let mut v = vec![0i32; nv];
        if try_divide_candidates(p, &phi, &bounds, &mut v, 0) {
            return true;
        }
    }
    false
}

fn try_divide_candidates(
    p: &LaurentPolynomialZ,
    phi: &[i64],
    bounds: &[i32],
    v: &mut Vec<i32>,
    axis: usize,
) -> bool {
    if axis == v.len() {
        if v.iter().all(|&x| x == 0) {
            return false;
        }
        // primitive vectors with a fixed sign convention
        let g = v.iter().fold(0i64, |g, &x| crate::numeric::gcd_i64(g, x as i64));
        if g != 1 {
            return false;
        }
        if *v.iter().find(|&&x| x != 0).unwrap() < 0 {
            return false;
        }
        // build the factor without dropping unused trailing variables:
        // the division routine needs matching exponent arities
        let mut factor_terms: BTreeMap<Vec<i32>, i64> = BTreeMap::new();
        for (k, &c) in phi.iter().enumerate() {
            if c != 0 {
                factor_terms.insert(v.iter().map(|&vi| vi * k as i32).collect(), c);
            }
        }
        let factor = LaurentPolynomialZ { nvars: p.nvars, terms: factor_terms };
        if let Some(q) = divide_exact_nd(&p.cleared(), &factor.cleared()) {
            return is_cyclotomic_product_nd(&q.cleared());
        }
        false
    } else {
        for x in -bounds[axis]..=bounds[axis] {
            v[axis] = x;
            if try_divide_candidates(p, phi, bounds, v, axis + 1) {
                return true;
            }
        }
        v[axis] = 0;
        false
    }
}

/// Exact multivariate division by a divisor with unit leading coefficient
/// under graded-lex order; None when the division has a remainder.
fn divide_exact_nd(num: &LaurentPolynomialZ, den: &LaurentPolynomialZ) -> Option<LaurentPolynomialZ> {
    fn grlex_key(e: &[i32]) -> (i64, Vec<i32>) {
        (e.iter().map(|&x| x as i64).sum(), e.to_vec())
    }
    let den_lead = den.terms.keys().max_by_key(|e| grlex_key(e)).cloned()?;
    let den_lc = den.terms[&den_lead];
    if den_lc.abs() != 1 {
        return None;
    }
    let mut rem: BTreeMap<Vec<i32>, i64> = num.terms.clone();
    let mut quo: BTreeMap<Vec<i32>, i64> = BTreeMap::new();
    for _ in 0..100_000 {
        let lead = match rem.keys().max_by_key(|e| grlex_key(e)) {
            Some(e) => e.clone(),
            None => return Some(LaurentPolynomialZ { nvars: num.nvars, terms: quo }),
        };
        let shift: Vec<i32> = lead.iter().zip(&den_lead).map(|(&a, &b)| a - b).collect();
        if shift.iter().any(|&s| s < 0) {
            return None;
        }
        let c = rem[&lead] / den_lc;
        *quo.entry(shift.clone()).or_insert(0) += c;
        for (e, &dc) in &den.terms {
            let target: Vec<i32> = e.iter().zip(&shift).map(|(&a, &s)| a + s).collect();
            let entry = rem.entry(target).or_insert(0);
            *entry -= c * dc;
        }
        rem.retain(|_, x| *x != 0);
    }
    None
}

// ---------------------------------------------------------------------
// bounded enumeration
// ---------------------------------------------------------------------

/// Enumerate all integer polynomials (cleared Laurent form) with
/// delta <= delta_max and Mahler measure <= m_max + tol, complete relative
/// to the Mahler coefficient pre-filter sum|a_j| <= 2^(sum deg_i) exp(m_max).
pub fn enumerate_bounded(m_max: f64, delta_max: u64, tol: f64) -> Result<Vec<LaurentPolynomialZ>> {
    enumerate_bounded_impl(m_max, delta_max, tol, false)
}

/// Same search with the coefficient loops run in the opposite order;
/// exists so tests can confirm the output set does not depend on search
/// order.
pub fn enumerate_bounded_descending(
    m_max: f64,
    delta_max: u64,
    tol: f64,
) -> Result<Vec<LaurentPolynomialZ>> {
    enumerate_bounded_impl(m_max, delta_max, tol, true)
}

const ENUMERATION_DELTA_CAP: u64 = 6;

fn enumerate_bounded_impl(
    m_max: f64,
    delta_max: u64,
    tol: f64,
    descending: bool,
) -> Result<Vec<LaurentPolynomialZ>> {
    if !m_max.is_finite() || m_max < 0.0 {
        return Err(Error::Domain("m_max must be finite and nonnegative".into()));
    }
    if delta_max > ENUMERATION_DELTA_CAP {
        return Err(Error::Domain(format!(
            "delta_max {delta_max} exceeds the exhaustive-search cap {ENUMERATION_DELTA_CAP}"
        )));
    }
    let mut out = Vec::new();
    for profile in degree_profiles(delta_max) {
        enumerate_profile(&profile, m_max, tol, descending, &mut out)?;
    }
    Ok(out)
}

/// All degree vectors (d_1..d_k) with sum i*d_i <= delta_max and positive
/// last entry, plus the empty profile for constants.
fn degree_profiles(delta_max: u64) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    let kmax = delta_max as usize;
    let mut stack: Vec<Vec<u32>> = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        let used: u64 = prefix
            .iter()
            .enumerate()
            .map(|(i, &d)| (i as u64 + 1) * d as u64)
            .sum();
        let k = prefix.len();
        if k == kmax {
            continue;
        }
        let weight = k as u64 + 1;
        let dmax = (delta_max - used) / weight;
        for d in 0..=dmax {
            let mut next = prefix.clone();
            next.push(d as u32);
            if next.last() != Some(&0) {
                out.push(next.clone());
            }
            stack.push(next);
        }
    }
    out.sort();
    out.dedup();
    out
}

fn enumerate_profile(
    profile: &[u32],
    m_max: f64,
    tol: f64,
    descending: bool,
    out: &mut Vec<LaurentPolynomialZ>,
) -> Result<()> {
    let nvars = profile.len();
    // exponent grid of the box [0..d_i] per variable
    let mut grid: Vec<Vec<i32>> = vec![Vec::new()];
    for &d in profile {
        let mut next = Vec::new();
        for g in &grid {
            for e in 0..=d as i32 {
                let mut ng = g.clone();
                ng.push(e);
                next.push(ng);
            }
        }
        grid = next;
    }
    let slots = grid.len();
    let total_deg: u32 = profile.iter().sum();
    let coeff_budget = (2f64.powi(total_deg as i32) * m_max.exp()).floor() as i64;
    if coeff_budget < 1 {
        return Ok(());
    }
    if slots > 12 || coeff_budget > 60 {
        return Err(Error::Domain(
            "enumeration box too large; reduce m_max or delta_max".into(),
        ));
    }

    let mut coeffs = vec![0i64; slots];
    enumerate_coeffs(&mut coeffs, 0, coeff_budget, descending, &mut |cs: &[i64]| -> Result<()> {
        if cs.iter().all(|&c| c == 0) {
            return Ok(());
        }
        let p = LaurentPolynomialZ::new(
            nvars,
            grid.iter().cloned().zip(cs.iter().copied()).filter(|(_, c)| *c != 0),
        )?;
        // the profile must be attained exactly (lower-degree polynomials are
        // enumerated under their own profile)
        for (i, &d) in profile.iter().enumerate() {
            if p.degree_in(i) != d as i32 {
                return Ok(());
            }
        }
        let measure = if nvars <= 1 {
            mahler_univariate(&p, 1e-11)?.value
        } else if is_cyclotomic_monomial_product(&p) {
            0.0
        } else {
            let m = mahler_multivariate(&p, (tol / 4.0).max(1e-7))?;
            if !m.converged {
                return Err(Error::Unconverged(format!(
                    "quadrature cap hit while filtering {}",
                    p.to_text()
                )));
            }
            m.value
        };
        if measure <= m_max + tol {
            out.push(p);
        }
        Ok(())
    })
}

fn enumerate_coeffs(
    coeffs: &mut Vec<i64>,
    idx: usize,
    budget: i64,
    descending: bool,
    visit: &mut impl FnMut(&[i64]) -> Result<()>,
) -> Result<()> {
    if idx == coeffs.len() {
        return visit(coeffs);
    }
    let range: Vec<i64> = if descending {
        (-budget..=budget).rev().collect()
    } else {
        (-budget..=budget).collect()
    };
    for c in range {
        coeffs[idx] = c;
        enumerate_coeffs(coeffs, idx + 1, budget - c.abs(), descending, visit)?;
    }
    coeffs[idx] = 0;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(text: &str) -> LaurentPolynomialZ {
        LaurentPolynomialZ::parse(text).unwrap()
    }

    #[test]
    fn parser_round_trips() {
        for text in [
            "x1 - 2",
            "x1^10 + x1^9 - x1^7 - x1^6 - x1^5 - x1^4 - x1^3 + x1 + 1",
            "x1 + x2 + 1",
            "3*x1^2*x2^-1 - 5",
            "x1^-1 + x2",
        ] {
            let p = poly(text);
            let q = LaurentPolynomialZ::parse(&p.to_text()).unwrap();
            assert_eq!(p, q, "{text}");
        }
        assert!(LaurentPolynomialZ::parse("").is_err());
        assert!(LaurentPolynomialZ::parse("x0 + 1").is_err());
    }

    #[test]
    fn delta_degree_examples() {
        assert_eq!(poly("x1^3").delta_degree(), 3);
        assert_eq!(poly("x1*x2^2").delta_degree(), 1 + 4);
        // 1/x1 + x2 clears to 1 + x1 x2: delta = 1 + 2
        assert_eq!(poly("x1^-1 + x2").delta_degree(), 3);
    }

    #[test]
    fn univariate_measures() {
        let m = mahler_univariate(&poly("x1 - 2"), 1e-12).unwrap();
        assert!((m.value - 2f64.ln()).abs() < 1e-12);
        assert!(!m.cyclotomic_flag);

        let lehmer = poly("x1^10 + x1^9 - x1^7 - x1^6 - x1^5 - x1^4 - x1^3 + x1 + 1");
        let m = mahler_univariate(&lehmer, 1e-12).unwrap();
        assert!(
            m.value > 0.16235 && m.value < 0.16236,
            "Lehmer measure {} outside window",
            m.value
        );
        assert!(!m.cyclotomic_flag);

        let m = mahler_univariate(&poly("x1^5 - 1"), 1e-12).unwrap();
        assert!(m.value.abs() <= m.err_bound.max(1e-10));
        assert!(m.cyclotomic_flag);
    }

    #[test]
    fn multiplicativity_on_random_pairs() {
        let mut seed = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for _ in 0..100 {
            let d1 = 1 + (next() % 4) as usize;
            let d2 = 1 + (next() % 4) as usize;
            let make = |d: usize, next: &mut dyn FnMut() -> u64| {
                let mut c: Vec<i64> = (0..=d).map(|_| (next() % 9) as i64 - 4).collect();
                if c[d] == 0 {
                    c[d] = 1;
                }
                if c[0] == 0 {
                    c[0] = 1;
                }
                c
            };
            let a = make(d1, &mut next);
            let b = make(d2, &mut next);
            let prod = multiply_1d(&a, &b);
            let ma = mahler_univariate(&LaurentPolynomialZ::univariate(&a), 1e-12).unwrap();
            let mb = mahler_univariate(&LaurentPolynomialZ::univariate(&b), 1e-12).unwrap();
            let mp = mahler_univariate(&LaurentPolynomialZ::univariate(&prod), 1e-12).unwrap();
            let tol = 1e-7 + ma.err_bound + mb.err_bound + mp.err_bound;
            assert!(
                (mp.value - ma.value - mb.value).abs() < tol,
                "multiplicativity violated: {a:?} {b:?}"
            );
        }
    }

    fn multiply_1d(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn coefficient_bound_examples() {
        // 3x + 5: bound 2^-1 * 8 = 4 <= exp(m) = 5
        let p = poly("3*x1 + 5");
        assert!((mahler_coefficient_bound(&p).unwrap() - 4.0).abs() < 1e-14);
        let m = mahler_univariate(&p, 1e-12).unwrap();
        assert!((m.value.exp() - 5.0).abs() < 1e-10);

        // x + 1: equality case
        let p = poly("x1 + 1");
        assert!((mahler_coefficient_bound(&p).unwrap() - 1.0).abs() < 1e-14);
        let m = mahler_univariate(&p, 1e-12).unwrap();
        assert!(m.value.abs() < 1e-10);
    }

    #[test]
    fn coefficient_bound_fuzz() {
        let mut seed = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for _ in 0..100 {
            let d = 3;
            let mut c: Vec<i64> = (0..=d).map(|_| (next() % 19) as i64 - 9).collect();
            if c[d] == 0 {
                c[d] = 2;
            }
            if c.iter().all(|&x| x == 0) {
                c[0] = 1;
            }
            let p = LaurentPolynomialZ::univariate(&c);
            if p.is_zero() {
                continue;
            }
            let bound = mahler_coefficient_bound(&p).unwrap();
            let m = mahler_univariate(&p, 1e-12).unwrap();
            assert!(
                m.value.exp() >= bound - 1e-7 - 10.0 * m.err_bound,
                "inequality violated for {c:?}: exp(m)={} bound={bound}",
                m.value.exp()
            );
        }
    }

    #[test]
    fn multivariate_smyth_and_boyd() {
        // Smyth: m(x + y + 1) = 0.3230659...
        let m = mahler_multivariate(&poly("x1 + x2 + 1"), 5e-5).unwrap();
        assert!(m.converged);
        assert!(
            (m.value - 0.323_065_947_219_45).abs() < 5e-4,
            "Smyth measure came out {}",
            m.value
        );

        // monomial invariance: (x-2) * x2^3
        let m = mahler_multivariate(&poly("x1*x2^3 - 2*x2^3"), 1e-6).unwrap();
        assert!((m.value - 2f64.ln()).abs() < 2.0 * m.err_bound.max(1e-9));

        // Boyd family k = 100: within 0.01 of log 100
        let m = mahler_multivariate(&poly("x1 + x1^-1 + x2 + x2^-1 + 100"), 1e-9).unwrap();
        assert!((m.value - 100f64.ln()).abs() < 0.01);
    }

    #[test]
    fn univariate_consistency_through_quadrature() {
        // essentially-one-variable input carried in two variables (the
        // second only through a unit monomial factor)
        let via_jensen = mahler_univariate(&poly("x1^2 - x1 - 1"), 1e-12).unwrap();
        let two_var =
            LaurentPolynomialZ::new(2, [(vec![2, 1], 1i64), (vec![1, 1], -1), (vec![0, 1], -1)])
                .unwrap();
        let via_quad = mahler_multivariate(&two_var, 1e-7).unwrap();
        assert!(
            (via_jensen.value - via_quad.value).abs()
                < via_quad.err_bound.max(1e-6) + via_jensen.err_bound
        );
    }

    #[test]
    fn cyclotomic_certification() {
        for d in 1..=30u64 {
            let phi = cyclotomic_poly(d);
            let p = LaurentPolynomialZ::univariate(&phi);
            assert!(is_cyclotomic_monomial_product(&p), "Phi_{d} not certified");
            let m = mahler_univariate(&p, 1e-12).unwrap();
            assert!(m.cyclotomic_flag, "Phi_{d} flag false");
        }
        assert!(!is_cyclotomic_monomial_product(&poly("x1 - 2")));
        assert!(!is_cyclotomic_monomial_product(&poly("x1^2 - x1 - 1")));
        // multivariate: (x - 1)(y - 1) and Phi_2(x y^2)
        assert!(is_cyclotomic_monomial_product(&poly("x1*x2 - x1 - x2 + 1")));
        assert!(is_cyclotomic_monomial_product(&poly("x1*x2^2 + 1")));
        assert!(!is_cyclotomic_monomial_product(&poly("x1*x2 + x1 + x2 + 2")));
    }

    #[test]
    fn cyclotomic_poly_table_spot() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(30).len() - 1, 8);
    }

    #[test]
    fn enumeration_small_cases() {
        // delta <= 1, m <= log 2
        let out = enumerate_bounded(2f64.ln() + 1e-9, 1, 1e-9).unwrap();
        let texts: Vec<String> = out.iter().map(|p| p.to_text()).collect();
        for want in ["x1 - 2", "x1 + 2", "2*x1 - 1", "2*x1 + 1", "x1", "2", "-2"] {
            assert!(texts.contains(&want.to_string()), "missing {want}: {texts:?}");
        }
        // completeness against an independent brute force
        let brute = brute_force_enumeration(2f64.ln() + 1e-9, 1);
        let mut got = texts.clone();
        got.sort();
        assert_eq!(got, brute);

        // delta_max = 0: constants only; for m_max < log 2 exactly +-1
        let out = enumerate_bounded(0.5, 0, 1e-9).unwrap();
        let mut texts: Vec<String> = out.iter().map(|p| p.to_text()).collect();
        texts.sort();
        assert_eq!(texts, vec!["-1".to_string(), "1".to_string()]);
    }

    #[test]
    fn enumeration_kronecker_locus() {
        // m <= 0, delta <= 2, one variable: +- products of cyclotomics and
        // monomials of degree <= 2
        let out = enumerate_bounded(1e-9, 2, 1e-9).unwrap();
        let univariate: Vec<&LaurentPolynomialZ> =
            out.iter().filter(|p| p.nvars() <= 1).collect();
        for p in &univariate {
            assert!(is_cyclotomic_monomial_product(p), "{} has m > 0", p.to_text());
        }
        // independent construction of the expected set
        let mut expected = std::collections::BTreeSet::new();
        let base = [vec![-1i64, 1], vec![1, 1], vec![1, 1, 1], vec![1, -1, 1], vec![1, 0, 1]];
        let mut products: Vec<Vec<i64>> = vec![vec![1]];
        for _ in 0..2 {
            let mut next_products = products.clone();
            for p in &products {
                for b in &base {
                    let q = multiply_1d(p, b);
                    if q.len() <= 3 {
                        next_products.push(q);
                    }
                }
            }
            products = next_products;
        }
        for p in products {
            for shift in 0..3 {
                if p.len() + shift <= 3 {
                    let mut c = vec![0i64; shift];
                    c.extend(&p);
                    for sgn in [1i64, -1] {
                        let poly = LaurentPolynomialZ::univariate(
                            &c.iter().map(|&x| sgn * x).collect::<Vec<_>>(),
                        );
                        if !poly.is_zero() && poly.delta_degree() <= 2 {
                            expected.insert(poly.to_text());
                        }
                    }
                }
            }
        }
        let got: std::collections::BTreeSet<String> =
            univariate.iter().map(|p| p.to_text()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn enumeration_order_independence() {
        let a = enumerate_bounded(0.2, 2, 1e-9).unwrap();
        let b = enumerate_bounded_descending(0.2, 2, 1e-9).unwrap();
        let mut a_texts: Vec<String> = a.iter().map(|p| p.to_text()).collect();
        let mut b_texts: Vec<String> = b.iter().map(|p| p.to_text()).collect();
        a_texts.sort();
        b_texts.sort();
        assert_eq!(a_texts, b_texts);
    }

    /// Independent brute force over raw coefficient boxes for the
    /// univariate delta <= 1 case.
    fn brute_force_enumeration(m_max: f64, delta_max: u64) -> Vec<String> {
        assert!(delta_max <= 1);
        let cap = (2f64.powi(1) * m_max.exp()).floor() as i64 + 1;
        let mut out = std::collections::BTreeSet::new();
        for a in -cap..=cap {
            for b in -cap..=cap {
                let p = LaurentPolynomialZ::univariate(&[b, a]);
                if p.is_zero() || p.delta_degree() > delta_max {
                    continue;
                }
                let m = mahler_univariate(&p, 1e-12).unwrap();
                if m.value <= m_max + 1e-9 {
                    out.insert(p.to_text());
                }
            }
        }
        out.into_iter().collect()
    }

    proptest::proptest! {
        // Jensen mode is exactly invariant under monomial multiplication:
        // shifting exponents never changes the computed measure
        #[test]
        fn monomial_invariance_exact_in_jensen_mode(
            coeffs in proptest::collection::vec(-6i64..=6, 2..7),
            shift in 0i32..5,
        ) {
            let p = LaurentPolynomialZ::univariate(&coeffs);
            proptest::prop_assume!(p.nvars() == 1);
            let shifted = LaurentPolynomialZ::new(
                1,
                p.terms().map(|(e, &c)| (vec![e[0] + shift], c)),
            )
            .unwrap();
            let a = mahler_univariate(&p, 1e-11).unwrap();
            let b = mahler_univariate(&shifted, 1e-11).unwrap();
            proptest::prop_assert_eq!(a.value, b.value);
        }

        // parser round-trip on randomly generated polynomials
        #[test]
        fn parse_round_trip_random(
            coeffs in proptest::collection::vec(-9i64..=9, 1..6),
        ) {
            let p = LaurentPolynomialZ::univariate(&coeffs);
            proptest::prop_assume!(!p.is_zero());
            let q = LaurentPolynomialZ::parse(&p.to_text()).unwrap();
            proptest::prop_assert_eq!(p, q);
        }
    }

    #[test]
    fn nonnegativity_fuzz() {
        let mut seed = 0xdeadbeefcafef00du64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for _ in 0..200 {
            let d = 1 + (next() % 6) as usize;
            let c: Vec<i64> = (0..=d).map(|_| (next() % 7) as i64 - 3).collect();
            let p = LaurentPolynomialZ::univariate(&c);
            if p.is_zero() {
                continue;
            }
            let m = mahler_univariate(&p, 1e-10).unwrap();
            assert!(m.value >= -m.err_bound, "negative measure for {c:?}");
        }
    }
}
