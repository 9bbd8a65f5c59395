//! Successive minima of a distance function on a full-rank lattice, by
//! exhaustive enumeration over a provably sufficient coefficient box.
//!
//! The box is derived from the smallest singular value of the basis matrix
//! together with a lower bound for the distance function on the Euclidean
//! unit sphere, so every lattice point with g <= radius is enumerated; if
//! the requested radius does not contain n independent points the call
//! fails loudly rather than returning a truncated answer.

use crate::error::{Error, Result};

/// Distance function g with g(t x) = |t| g(x).
pub enum DistanceFn {
    Euclidean,
    Sup,
    L1,
    /// Caller-supplied distance function together with a positive lower
    /// bound for g on the Euclidean unit sphere (needed to convert the
    /// search radius into a finite coefficient box).
    Custom {
        f: Box<dyn Fn(&[f64]) -> f64 + Send + Sync>,
        unit_lower_bound: f64,
    },
}

impl DistanceFn {
    pub fn eval(&self, x: &[f64]) -> f64 {
        match self {
            DistanceFn::Euclidean => x.iter().map(|v| v * v).sum::<f64>().sqrt(),
            DistanceFn::Sup => x.iter().fold(0.0, |m, v| m.max(v.abs())),
            DistanceFn::L1 => x.iter().map(|v| v.abs()).sum(),
            DistanceFn::Custom { f, .. } => f(x),
        }
    }

    /// Lower bound for g on the Euclidean unit sphere in dimension n.
    fn unit_sphere_lower_bound(&self, n: usize) -> f64 {
        match self {
            DistanceFn::Euclidean => 1.0,
            DistanceFn::Sup => 1.0 / (n as f64).sqrt(),
            DistanceFn::L1 => 1.0,
            DistanceFn::Custom { unit_lower_bound, .. } => *unit_lower_bound,
        }
    }
}

/// A full-rank lattice in R^n given by basis row vectors, with a distance
/// function used for successive minima.
pub struct LatticeInstance {
    dimension: usize,
    basis: Vec<Vec<f64>>,
    norm: DistanceFn,
}

impl LatticeInstance {
    pub fn new(basis: Vec<Vec<f64>>, norm: DistanceFn) -> Result<Self> {
        let n = basis.len();
        if n == 0 || basis.iter().any(|row| row.len() != n) {
            return Err(Error::Contract("basis must be a nonempty square matrix".into()));
        }
        let det = determinant(&basis);
        if det.abs() < 1e-12 {
            return Err(Error::Contract("basis determinant is zero".into()));
        }
        if let DistanceFn::Custom { unit_lower_bound, .. } = &norm {
            if !(*unit_lower_bound > 0.0) {
                return Err(Error::Contract(
                    "custom distance function needs a positive unit-sphere lower bound".into(),
                ));
            }
        }
        // spot-check the distance-function axioms on the basis vectors
        let zero = vec![0.0; n];
        if norm.eval(&zero) != 0.0 {
            return Err(Error::Contract("distance function must vanish at 0".into()));
        }
        for row in &basis {
            if !(norm.eval(row) > 0.0) {
                return Err(Error::Contract(
                    "distance function must be positive on nonzero basis vectors".into(),
                ));
            }
        }
        Ok(Self { dimension: n, basis, norm })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// g of the lattice point with integer coefficient vector x.
    pub fn eval_point(&self, coeffs: &[i64]) -> f64 {
        let n = self.dimension;
        let mut v = vec![0.0; n];
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                for j in 0..n {
                    v[j] += c as f64 * self.basis[i][j];
                }
            }
        }
        self.norm.eval(&v)
    }

    /// A radius guaranteed to contain n linearly independent lattice points
    /// (the basis vectors themselves).
    pub fn sufficient_radius(&self) -> f64 {
        let worst = self
            .basis
            .iter()
            .map(|row| self.norm.eval(row))
            .fold(0.0f64, f64::max);
        worst * (1.0 + 1e-12)
    }

    /// Successive minima mu_1 <= ... <= mu_n of g on the lattice, by
    /// exhaustive enumeration of all points with g <= radius.
    ///
    /// mu_j is the least value g(lambda) such that the lattice points with
    /// g <= g(lambda) span a space of dimension >= j. Independence of the
    /// enumerated points is decided exactly on their integer coefficient
    /// vectors (the basis is invertible, so spans agree).
    pub fn minkowski_minima(&self, radius: f64) -> Result<Vec<f64>> {
        if !(radius > 0.0) {
            return Err(Error::Domain("radius must be positive".into()));
        }
        let n = self.dimension;
        let sigma_min = self.smallest_singular_value();
        let m_g = self.norm.unit_sphere_lower_bound(n);
        // every point with g(v) <= radius has ||v||_2 <= radius/m_g and
        // integer coefficients bounded by ||v||_2 / sigma_min
        let coeff_bound = (radius / m_g / sigma_min * (1.0 + 1e-9)).floor() as i64;
        if coeff_bound > 2_000_000 || (coeff_bound + 1).pow(n as u32) > 200_000_000 {
            return Err(Error::Domain(format!(
                "enumeration box too large (coefficient bound {coeff_bound} in dimension {n})"
            )));
        }

        let mut points: Vec<(f64, Vec<i64>)> = Vec::new();
        let mut coeffs = vec![0i64; n];
        enumerate_box(&mut coeffs, 0, coeff_bound, &mut |c| {
            if c.iter().all(|&x| x == 0) {
                return;
            }
            let g = self.eval_point(c);
            if g <= radius {
                points.push((g, c.to_vec()));
            }
        });

        points.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then_with(|| a.1.cmp(&b.1)));

        let mut rank_rows: Vec<Vec<i128>> = Vec::new();
        let mut minima = Vec::with_capacity(n);
        for (g, c) in &points {
            let c128: Vec<i128> = c.iter().map(|&x| x as i128).collect();
            if add_if_independent(&mut rank_rows, c128) {
                minima.push(*g);
                if minima.len() == n {
                    break;
                }
            }
        }
        if minima.len() < n {
            return Err(Error::Domain(format!(
                "radius too small: only {} independent lattice points with g <= {radius}",
                minima.len()
            )));
        }
        Ok(minima)
    }

    fn smallest_singular_value(&self) -> f64 {
        let n = self.dimension;
        // Gram matrix B B^T, symmetric positive definite
        let mut gram = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                gram[i][j] = (0..n).map(|k| self.basis[i][k] * self.basis[j][k]).sum();
            }
        }
        let eigs = symmetric_eigenvalues(gram);
        eigs.into_iter().fold(f64::INFINITY, f64::min).max(0.0).sqrt()
    }
}

fn enumerate_box(coeffs: &mut Vec<i64>, idx: usize, bound: i64, visit: &mut impl FnMut(&[i64])) {
    if idx == coeffs.len() {
        visit(coeffs);
        return;
    }
    for c in -bound..=bound {
        coeffs[idx] = c;
        enumerate_box(coeffs, idx + 1, bound, visit);
    }
}

/// Fraction-free elimination: returns true (and keeps the row) if `row` is
/// independent of the rows already stored.
fn add_if_independent(rows: &mut Vec<Vec<i128>>, mut row: Vec<i128>) -> bool {
    for r in rows.iter() {
        let pivot_col = r.iter().position(|&x| x != 0).expect("stored rows are nonzero");
        if row[pivot_col] != 0 {
            let p = r[pivot_col];
            let q = row[pivot_col];
            let g = gcd_i128(p, q);
            let (mp, mq) = (q / g, p / g);
            for k in 0..row.len() {
                row[k] = row[k] * mq - r[k] * mp;
            }
        }
    }
    if row.iter().all(|&x| x == 0) {
        false
    } else {
        // keep rows small-ish by dividing out content
        let content = row.iter().fold(0i128, |g, &x| gcd_i128(g, x));
        if content > 1 {
            for x in row.iter_mut() {
                *x /= content;
            }
        }
        rows.push(row);
        true
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn determinant(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap());
        let pivot = pivot.unwrap();
        if a[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for i in col + 1..n {
            let f = a[i][col] / a[col][col];
            for j in col..n {
                a[i][j] -= f * a[col][j];
            }
        }
    }
    det
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
fn symmetric_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += a[i][j] * a[i][j];
            }
        }
        if off < 1e-28 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).collect()
}
