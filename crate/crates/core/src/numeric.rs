//! Shared numeric primitives: compensated summation, the real gamma
//! function, Bernoulli numbers and polynomials, Richardson/Neville
//! extrapolation, and small integer helpers.

/// Compensated (Kahan–Neumaier) accumulator. Keeps the summation error of
/// long cancelling sums near one ulp of the running total instead of
/// growing linearly with the term count.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// First Bernoulli numbers B_2, B_4, ..., B_30 (B_1 = -1/2 is handled
/// separately where needed; odd ones above B_1 vanish).
pub const BERNOULLI_EVEN: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// B_{2j} for j in 1..=15.
#[inline]
pub fn bernoulli_2j(j: usize) -> f64 {
    BERNOULLI_EVEN[j - 1]
}

/// Bernoulli number B_n for n in 0..=31 (odd n > 1 gives 0).
pub fn bernoulli(n: usize) -> f64 {
    match n {
        0 => 1.0,
        1 => -0.5,
        _ if n % 2 == 1 => 0.0,
        _ => bernoulli_2j(n / 2),
    }
}

/// Binomial coefficient as f64; exact for the small arguments used here.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc.round()
}

/// Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^{n-k}, for n <= 12.
pub fn bernoulli_poly(n: usize, x: f64) -> f64 {
    assert!(n <= 12, "bernoulli_poly supports n <= 12");
    let mut acc = 0.0;
    for k in 0..=n {
        let b = bernoulli(k);
        if b != 0.0 {
            acc += binomial(n, k) * b * x.powi((n - k) as i32);
        }
    }
    acc
}

/// sin(pi * x) with exact argument reduction: x - round(x) is computed
/// without rounding error, so the result stays accurate near integers where
/// naive sin(PI * x) loses digits.
pub fn sin_pi(x: f64) -> f64 {
    let r = x.round();
    let f = x - r;
    let s = (std::f64::consts::PI * f).sin();
    if (r as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

// Lanczos approximation, g = 7, 9 coefficients. Gives ~15 significant
// digits for real arguments; negative arguments go through reflection.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Real gamma function. Returns infinity at non-positive integers.
pub fn gamma(x: f64) -> f64 {
    if x < 0.5 {
        // reflection: Gamma(x) = pi / (sin(pi x) * Gamma(1 - x))
        let s = sin_pi(x);
        if s == 0.0 {
            return f64::INFINITY;
        }
        std::f64::consts::PI / (s * gamma(1.0 - x))
    } else {
        let x = x - 1.0;
        let mut a = LANCZOS_COEF[0];
        let t = x + LANCZOS_G + 0.5;
        for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
            a += c / (x + i as f64);
        }
        (2.0 * std::f64::consts::PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * a
    }
}

/// ln|Gamma(x)| for x > 0, via the Lanczos form; avoids overflow of
/// gamma() for large arguments.
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma needs positive argument");
    let xm = x - 1.0;
    let mut a = LANCZOS_COEF[0];
    let t = xm + LANCZOS_G + 0.5;
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        a += c / (xm + i as f64);
    }
    0.5 * (2.0 * std::f64::consts::PI).ln() + (xm + 0.5) * t.ln() - t + a.ln()
}

/// Digamma function psi(x) for x > 0, by the asymptotic Euler–Maclaurin
/// expansion after shifting the argument above 10.
pub fn digamma(x: f64) -> f64 {
    assert!(x > 0.0, "digamma needs positive argument");
    let mut acc = KahanSum::new();
    let mut y = x;
    while y < 10.0 {
        acc.add(-1.0 / y);
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    // psi(y) ~ ln y - 1/(2y) - sum B_2j / (2j y^(2j))
    let mut tail = 0.0;
    let mut p = inv2;
    for j in 1..=5 {
        tail += bernoulli_2j(j) / (2 * j) as f64 * p;
        p *= inv2;
    }
    acc.add(y.ln() - 0.5 / y - tail);
    acc.value()
}

/// Neville extrapolation to h = 0 of samples (h_i, g(h_i)).
///
/// Used to extract Laurent leading coefficients from one-sided evaluations:
/// the nodes are a geometric ladder, and the full Neville tableau converges
/// at the product rate of the node ratios.
pub fn neville_to_zero(hs: &[f64], gs: &[f64]) -> f64 {
    let n = hs.len();
    assert_eq!(n, gs.len());
    assert!(n >= 1);
    let mut p = gs.to_vec();
    for level in 1..n {
        for i in 0..n - level {
            let num = hs[i] * p[i + 1] - hs[i + level] * p[i];
            p[i] = num / (hs[i] - hs[i + level]);
        }
    }
    p[0]
}

/// Greatest common divisor of two non-negative integers.
pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// gcd for signed inputs, result non-negative.
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    gcd_u64(a.unsigned_abs(), b.unsigned_abs()) as i64
}

/// Primes up to `limit` inclusive, by sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut is_prime = vec![true; n + 1];
    is_prime[0] = false;
    is_prime[1] = false;
    let mut p = 2usize;
    while p * p <= n {
        if is_prime[p] {
            let mut q = p * p;
            while q <= n {
                is_prime[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    is_prime
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| if b { Some(i as u64) } else { None })
        .collect()
}

/// True if n has no repeated prime factor.
pub fn is_squarefree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Euler's totient by trial division.
pub fn euler_phi(n: u64) -> u64 {
    let mut m = n;
    let mut phi = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            phi -= phi / p;
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}
