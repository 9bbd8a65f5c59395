//! Generic framework for height functions into partially ordered sets:
//! product orders, sublevel sets, growth tables, successive sets of infima
//! over real samples, and Bogomolov/Lehmer analyses.
//!
//! Finite samples cannot realize order-topology components of infinite
//! sets, so "connectedness" of a real sample is parameterized by a
//! clustering radius tau: consecutive sorted values at distance <= tau
//! belong to one component, and tau = 0 gives literal finite-set semantics
//! (every distinct value is its own component).

use crate::error::{Error, Result};

/// Outcome of comparing two values in a partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cmp {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// A height value: a real, an integer, or a tuple ordered componentwise.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Real(f64),
    Int(i64),
    Tuple(Vec<Value>),
}

impl Value {
    pub fn tuple_of_reals(xs: &[f64]) -> Value {
        Value::Tuple(xs.iter().map(|&x| Value::Real(x)).collect())
    }
}

/// Evaluator for a partial order on `Value`s.
///
/// `Real` and `Int` are the usual total orders; `Product` endows tuples
/// with the componentwise product order.
#[derive(Debug, Clone, PartialEq)]
pub enum Order {
    Real,
    Int,
    Product(Vec<Order>),
}

impl Order {
    pub fn compare(&self, a: &Value, b: &Value) -> Result<Cmp> {
        match (self, a, b) {
            (Order::Real, Value::Real(x), Value::Real(y)) => Ok(total_cmp(*x, *y)),
            (Order::Int, Value::Int(x), Value::Int(y)) => Ok(if x < y {
                Cmp::Less
            } else if x > y {
                Cmp::Greater
            } else {
                Cmp::Equal
            }),
            (Order::Product(orders), Value::Tuple(xs), Value::Tuple(ys)) => {
                if xs.len() != orders.len() || ys.len() != orders.len() {
                    return Err(Error::Contract(format!(
                        "arity mismatch: order expects {}, got {} and {}",
                        orders.len(),
                        xs.len(),
                        ys.len()
                    )));
                }
                let mut seen_less = false;
                let mut seen_greater = false;
                for ((o, x), y) in orders.iter().zip(xs).zip(ys) {
                    match o.compare(x, y)? {
                        Cmp::Less => seen_less = true,
                        Cmp::Greater => seen_greater = true,
                        Cmp::Equal => {}
                        Cmp::Incomparable => return Ok(Cmp::Incomparable),
                    }
                }
                Ok(match (seen_less, seen_greater) {
                    (true, true) => Cmp::Incomparable,
                    (true, false) => Cmp::Less,
                    (false, true) => Cmp::Greater,
                    (false, false) => Cmp::Equal,
                })
            }
            _ => Err(Error::Contract(
                "value shape does not match order shape".into(),
            )),
        }
    }

    /// Checks reflexivity, antisymmetry and transitivity by exhaustive scan
    /// over the given finite sample of values.
    pub fn check_axioms(&self, values: &[Value]) -> Result<()> {
        for v in values {
            if self.compare(v, v)? != Cmp::Equal {
                return Err(Error::Contract("order is not reflexive".into()));
            }
        }
        for a in values {
            for b in values {
                let ab = self.compare(a, b)?;
                let ba = self.compare(b, a)?;
                let flipped = match ab {
                    Cmp::Less => Cmp::Greater,
                    Cmp::Greater => Cmp::Less,
                    x => x,
                };
                if ba != flipped {
                    return Err(Error::Contract("order is not antisymmetric".into()));
                }
            }
        }
        for a in values {
            for b in values {
                for c in values {
                    let ab = self.compare(a, b)?;
                    let bc = self.compare(b, c)?;
                    if matches!(ab, Cmp::Less | Cmp::Equal)
                        && matches!(bc, Cmp::Less | Cmp::Equal)
                    {
                        let ac = self.compare(a, c)?;
                        if !matches!(ac, Cmp::Less | Cmp::Equal) {
                            return Err(Error::Contract("order is not transitive".into()));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn total_cmp(x: f64, y: f64) -> Cmp {
    if x < y {
        Cmp::Less
    } else if x > y {
        Cmp::Greater
    } else {
        Cmp::Equal
    }
}

/// Compare two tuples under a list of coordinate orders (product order).
pub fn compare_product(a: &[Value], b: &[Value], orders: &[Order]) -> Result<Cmp> {
    if a.len() != orders.len() || b.len() != orders.len() {
        return Err(Error::Contract(format!(
            "arity mismatch: {} orders, tuples of length {} and {}",
            orders.len(),
            a.len(),
            b.len()
        )));
    }
    Order::Product(orders.to_vec()).compare(&Value::Tuple(a.to_vec()), &Value::Tuple(b.to_vec()))
}

/// A finite sample of (identifier, value) pairs together with its order.
#[derive(Debug, Clone)]
pub struct HeightSample {
    elements: Vec<(String, Value)>,
    order: Order,
}

impl HeightSample {
    pub fn new(elements: Vec<(String, Value)>, order: Order) -> Result<Self> {
        let mut ids: Vec<&str> = elements.iter().map(|(id, _)| id.as_str()).collect();
        ids.sort_unstable();
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Contract("identifiers are not pairwise distinct".into()));
        }
        // Every value must be comparable against every other under the
        // order's type contract; a single compare against the first value
        // catches shape mismatches (mixed arities).
        if let Some((_, first)) = elements.first() {
            for (_, v) in &elements {
                order.compare(first, v)?;
            }
        }
        Ok(Self { elements, order })
    }

    pub fn from_reals(pairs: &[(&str, f64)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .map(|(id, x)| (id.to_string(), Value::Real(*x)))
                .collect(),
            Order::Real,
        )
    }

    pub fn elements(&self) -> &[(String, Value)] {
        &self.elements
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn real_values(&self) -> Result<Vec<f64>> {
        self.elements
            .iter()
            .map(|(_, v)| match v {
                Value::Real(x) => Ok(*x),
                _ => Err(Error::Contract("sample is not real-valued".into())),
            })
            .collect()
    }
}

/// Identifiers whose value compares <= gamma, sorted by identifier.
pub fn sublevel_set(sample: &HeightSample, gamma: &Value) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (id, v) in sample.elements() {
        match sample.order().compare(v, gamma)? {
            Cmp::Less | Cmp::Equal => out.push(id.clone()),
            _ => {}
        }
    }
    out.sort();
    Ok(out)
}

/// Sublevel counts along an ascending grid of thresholds.
pub fn northcott_growth(
    sample: &HeightSample,
    grid: &[Value],
) -> Result<Vec<(Value, usize)>> {
    for w in grid.windows(2) {
        match sample.order().compare(&w[0], &w[1])? {
            Cmp::Less | Cmp::Equal => {}
            _ => {
                return Err(Error::Contract(
                    "grid values must be pairwise comparable and ascending".into(),
                ))
            }
        }
    }
    grid.iter()
        .map(|g| Ok((g.clone(), sublevel_set(sample, g)?.len())))
        .collect()
}

/// Whether a level collects infima or attained minima. Finite real samples
/// always attain the minimum of each component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelKind {
    Infima,
    Minima,
}

/// Successive sets of infima of a finite real sample.
#[derive(Debug, Clone)]
pub struct InfimaReport {
    pub kind: LevelKind,
    /// mu_1..mu_k; singletons for real samples.
    pub levels: Vec<Vec<f64>>,
    /// Members of the component each level was extracted from.
    pub clusters: Vec<Vec<f64>>,
    /// Clustering radius tau.
    pub resolution: f64,
    /// True when components remained after k_max levels.
    pub exhausted: bool,
    /// True when extraction produced a level equal to its predecessor;
    /// the loop stops there (all later levels would coincide). Cannot
    /// happen for distinct-valued real clusters, but the guard is kept.
    pub stabilized: bool,
}

impl InfimaReport {
    pub fn level_min(&self, j: usize) -> f64 {
        self.levels[j][0]
    }
}

/// Extract up to `k_max` successive sets of infima from a real multiset.
///
/// With tau = 0 the levels are the distinct sorted values; with tau > 0
/// maximal chains of gaps <= tau are merged into one component before the
/// next infimum is extracted.
pub fn successive_infima_reals(values: &[f64], tau: f64, k_max: usize) -> Result<InfimaReport> {
    if values.is_empty() {
        return Err(Error::Domain("successive infima of an empty sample".into()));
    }
    if !(tau >= 0.0) {
        return Err(Error::Domain("clustering radius must be >= 0".into()));
    }
    if k_max == 0 {
        return Err(Error::Domain("k_max must be positive".into()));
    }
    let mut sorted: Vec<f64> = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("non-finite height value"));
    sorted.dedup();

    let mut clusters: Vec<Vec<f64>> = Vec::new();
    let mut current = vec![sorted[0]];
    for w in sorted.windows(2) {
        if w[1] - w[0] <= tau {
            current.push(w[1]);
        } else {
            clusters.push(std::mem::take(&mut current));
            current = vec![w[1]];
        }
    }
    clusters.push(current);

    let exhausted = clusters.len() > k_max;
    let kept = clusters.len().min(k_max);
    let mut levels = Vec::with_capacity(kept);
    let mut stabilized = false;
    for c in clusters.iter().take(kept) {
        let mu = c[0];
        if levels.last().is_some_and(|prev: &Vec<f64>| prev[0] == mu) {
            stabilized = true;
            break;
        }
        levels.push(vec![mu]);
    }
    clusters.truncate(levels.len());
    Ok(InfimaReport {
        kind: LevelKind::Minima,
        levels,
        clusters,
        resolution: tau,
        exhausted,
        stabilized,
    })
}

/// Default isolation tolerance for the empirical Bogomolov property.
pub const DEFAULT_ISOLATION_THRESHOLD: f64 = 1e-6;

/// Empirical Bogomolov analysis of a real sample.
#[derive(Debug, Clone)]
pub struct BogomolovReport {
    /// Number of levels found before exhaustion or k_max.
    pub count: usize,
    pub levels: Vec<Vec<f64>>,
    /// Finite samples always attain their minimum (weak Bogomolov).
    pub mu1_attained: bool,
    /// False when the gap above mu_1 is below the isolation threshold.
    /// A single-valued sample is isolated trivially.
    pub mu1_isolated: bool,
    pub isolation_threshold: f64,
}

pub fn bogomolov_number_empirical(
    values: &[f64],
    tau: f64,
    k_max: usize,
    isolation_threshold: f64,
) -> Result<BogomolovReport> {
    let report = successive_infima_reals(values, tau, k_max)?;
    let mut sorted: Vec<f64> = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("non-finite height value"));
    sorted.dedup();
    let mu1_isolated = if sorted.len() == 1 {
        true
    } else {
        sorted[1] - sorted[0] >= isolation_threshold
    };
    Ok(BogomolovReport {
        count: report.levels.len(),
        levels: report.levels,
        mu1_attained: true,
        mu1_isolated,
        isolation_threshold,
    })
}

/// Combine several samples over the same identifiers into one real-valued
/// sample via `combiner` applied to the tuple of values at each identifier.
pub fn lehmer_transform(
    samples: &[HeightSample],
    combiner: impl Fn(&[Value]) -> f64,
) -> Result<HeightSample> {
    let first = samples
        .first()
        .ok_or_else(|| Error::Contract("lehmer_transform needs at least one sample".into()))?;
    for s in samples.iter().skip(1) {
        let mut a: Vec<&str> = first.elements().iter().map(|(id, _)| id.as_str()).collect();
        let mut b: Vec<&str> = s.elements().iter().map(|(id, _)| id.as_str()).collect();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Err(Error::Contract("samples have different identifier sets".into()));
        }
    }
    let mut out = Vec::with_capacity(first.elements().len());
    for (id, v0) in first.elements() {
        let mut tuple = vec![v0.clone()];
        for s in samples.iter().skip(1) {
            let v = s
                .elements()
                .iter()
                .find(|(i, _)| i == id)
                .map(|(_, v)| v.clone())
                .expect("identifier sets checked equal");
            tuple.push(v);
        }
        out.push((id.clone(), Value::Real(combiner(&tuple))));
    }
    HeightSample::new(out, Order::Real)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: f64) -> Value {
        Value::Real(x)
    }

    #[test]
    fn compare_product_examples() {
        let orders = [Order::Real, Order::Real];
        assert_eq!(
            compare_product(&[r(1.0), r(2.0)], &[r(2.0), r(3.0)], &orders).unwrap(),
            Cmp::Less
        );
        assert_eq!(
            compare_product(&[r(1.0), r(2.0)], &[r(2.0), r(1.0)], &orders).unwrap(),
            Cmp::Incomparable
        );
        assert_eq!(
            compare_product(&[r(3.0), r(3.0)], &[r(3.0), r(3.0)], &orders).unwrap(),
            Cmp::Equal
        );
        assert!(compare_product(&[r(1.0)], &[r(2.0), r(1.0)], &orders).is_err());
    }

    #[test]
    fn sublevel_examples() {
        let s = HeightSample::from_reals(&[("a", 1.0), ("b", 2.0), ("c", 3.0)]).unwrap();
        assert_eq!(sublevel_set(&s, &r(2.0)).unwrap(), vec!["a", "b"]);
        assert!(sublevel_set(&s, &r(0.5)).unwrap().is_empty());

        let order = Order::Product(vec![Order::Real, Order::Real]);
        let s = HeightSample::new(
            vec![
                ("a".into(), Value::tuple_of_reals(&[1.0, 1.0])),
                ("b".into(), Value::tuple_of_reals(&[2.0, 0.0])),
            ],
            order,
        )
        .unwrap();
        assert_eq!(
            sublevel_set(&s, &Value::tuple_of_reals(&[1.0, 1.0])).unwrap(),
            vec!["a"]
        );
    }

    #[test]
    fn growth_table_examples() {
        let s = HeightSample::from_reals(&[("a", 1.0), ("b", 2.0), ("c", 3.0)]).unwrap();
        let grid = [r(1.0), r(2.0), r(3.0)];
        let t = northcott_growth(&s, &grid).unwrap();
        let counts: Vec<usize> = t.iter().map(|(_, c)| *c).collect();
        assert_eq!(counts, vec![1, 2, 3]);

        let empty = HeightSample::from_reals(&[]).unwrap();
        let t = northcott_growth(&empty, &grid).unwrap();
        assert!(t.iter().all(|(_, c)| *c == 0));

        let bad_grid = [r(2.0), r(1.0)];
        assert!(northcott_growth(&s, &bad_grid).is_err());
    }

    #[test]
    fn growth_table_weil_sample_matches_brute_force() {
        // All rationals p/q in lowest terms with max(|p|, |q|) <= 3, under
        // the logarithmic Weil height log max(|p|, |q|).
        let mut pairs = Vec::new();
        for p in -3i64..=3 {
            for q in 1i64..=3 {
                if crate::numeric::gcd_i64(p, q) == 1 {
                    pairs.push((format!("{p}/{q}"), p, q));
                }
            }
        }
        let sample = HeightSample::new(
            pairs
                .iter()
                .map(|(id, p, q)| {
                    (id.clone(), Value::Real((p.abs().max(*q) as f64).ln()))
                })
                .collect(),
            Order::Real,
        )
        .unwrap();
        let grid = [r(1f64.ln()), r(2f64.ln()), r(3f64.ln())];
        let t = northcott_growth(&sample, &grid).unwrap();
        // independent brute-force count
        let brute: Vec<usize> = [1i64, 2, 3]
            .iter()
            .map(|&bound| {
                pairs
                    .iter()
                    .filter(|(_, p, q)| p.abs().max(*q) <= bound)
                    .count()
            })
            .collect();
        let got: Vec<usize> = t.iter().map(|(_, c)| *c).collect();
        assert_eq!(got, brute);
        assert_eq!(got, vec![3, 7, 15]);
    }

    #[test]
    fn infima_two_interval_grid() {
        // grid sample of (0,1) union (2,3) with step 0.01
        let mut values = Vec::new();
        let mut x = 0.01;
        while x < 1.0 {
            values.push(x);
            x += 0.01;
        }
        let mut x = 2.01;
        while x < 3.0 {
            values.push(x);
            x += 0.01;
        }
        let rep = successive_infima_reals(&values, 0.05, 2).unwrap();
        assert_eq!(rep.levels.len(), 2);
        assert!((rep.level_min(0) - 0.0).abs() <= 0.011);
        assert!((rep.level_min(1) - 2.0).abs() <= 0.011);
        assert_eq!(rep.kind, LevelKind::Minima);
    }

    #[test]
    fn infima_singleton_and_tau_zero() {
        let rep = successive_infima_reals(&[5.0], 0.0, 3).unwrap();
        assert_eq!(rep.levels, vec![vec![5.0]]);
        assert_eq!(rep.kind, LevelKind::Minima);
        assert!(!rep.exhausted);

        // tau = 0: distinct sorted values, each its own level
        let rep = successive_infima_reals(&[3.0, 1.0, 2.0, 1.0], 0.0, 10).unwrap();
        assert_eq!(rep.levels, vec![vec![1.0], vec![2.0], vec![3.0]]);
    }

    #[test]
    fn infima_harmonic_cluster_gap_scan() {
        // {1/n : 1 <= n <= 100} with {2}; direct gap scan at tau = 0.2:
        // gaps 1/(n(n+1)) stay below 0.2 up to the 1/2 -> 1 gap of 0.5,
        // so the components are [0.01 .. 0.5], {1}, {2}.
        let mut values: Vec<f64> = (1..=100).map(|n| 1.0 / n as f64).collect();
        values.push(2.0);
        let rep = successive_infima_reals(&values, 0.2, 10).unwrap();
        assert_eq!(rep.levels.len(), 3);
        assert!((rep.level_min(0) - 0.01).abs() < 1e-12);
        assert!((rep.level_min(1) - 1.0).abs() < 1e-12);
        assert!((rep.level_min(2) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn infima_chain_is_monotone() {
        let values: Vec<f64> = (0..200)
            .map(|i| ((i * 2654435761u64 % 1000) as f64) / 61.0)
            .collect();
        for tau in [0.0, 0.05, 0.7] {
            let rep = successive_infima_reals(&values, tau, 50).unwrap();
            for w in rep.levels.windows(2) {
                assert!(w[0][0] < w[1][0]);
            }
            assert!(!rep.stabilized);
        }
    }

    #[test]
    fn bogomolov_examples() {
        let rep =
            bogomolov_number_empirical(&[0.0, 0.0, 0.0], 0.0, 5, DEFAULT_ISOLATION_THRESHOLD)
                .unwrap();
        assert_eq!(rep.count, 1);
        assert_eq!(rep.levels, vec![vec![0.0]]);
        assert!(rep.mu1_attained);
        assert!(rep.mu1_isolated); // |h(S)| = 1: isolation trivially true

        // two clusters
        let vals = [0.0, 0.01, 0.02, 2.0, 2.01];
        let rep = bogomolov_number_empirical(&vals, 0.1, 5, DEFAULT_ISOLATION_THRESHOLD).unwrap();
        assert_eq!(rep.count, 2);

        // h(2^(1/n)) = log2 / n for n <= 50: smallest gap is
        // log2/(49*50) ~ 2.8e-4, above the default threshold, below 1e-3.
        let vals: Vec<f64> = (1..=50).map(|n| 2f64.ln() / n as f64).collect();
        let rep = bogomolov_number_empirical(&vals, 0.0, 100, DEFAULT_ISOLATION_THRESHOLD).unwrap();
        assert!((rep.levels[0][0] - 2f64.ln() / 50.0).abs() < 1e-15);
        assert!(rep.mu1_isolated);
        let rep = bogomolov_number_empirical(&vals, 0.0, 100, 1e-3).unwrap();
        assert!(!rep.mu1_isolated);
    }

    #[test]
    fn lehmer_transform_examples() {
        // heights (h, deg) on 2^(1/n): h = log2/n, deg = n
        let ids: Vec<String> = (1..=20).map(|n| format!("2^(1/{n})")).collect();
        let h_sample = HeightSample::new(
            ids.iter()
                .enumerate()
                .map(|(i, id)| (id.clone(), Value::Real(2f64.ln() / (i + 1) as f64)))
                .collect(),
            Order::Real,
        )
        .unwrap();
        let d_sample = HeightSample::new(
            ids.iter()
                .enumerate()
                .map(|(i, id)| (id.clone(), Value::Real((i + 1) as f64)))
                .collect(),
            Order::Real,
        )
        .unwrap();
        let combined = lehmer_transform(&[h_sample.clone(), d_sample.clone()], |vs| {
            match (&vs[0], &vs[1]) {
                (Value::Real(x), Value::Real(d)) => x * d,
                _ => unreachable!(),
            }
        })
        .unwrap();
        for (_, v) in combined.elements() {
            match v {
                Value::Real(x) => assert!((x - 2f64.ln()).abs() < 1e-12),
                _ => unreachable!(),
            }
        }

        // projection to the first coordinate returns the first sample
        let proj = lehmer_transform(&[h_sample.clone(), d_sample.clone()], |vs| match &vs[0] {
            Value::Real(x) => *x,
            _ => unreachable!(),
        })
        .unwrap();
        for ((_, a), (_, b)) in proj.elements().iter().zip(h_sample.elements()) {
            assert_eq!(a, b);
        }

        // Dobrowolski combiner: x * d * (log(3d)/loglog(3d))^3 >= log 2
        let dob = lehmer_transform(&[h_sample, d_sample], |vs| match (&vs[0], &vs[1]) {
            (Value::Real(x), Value::Real(d)) => {
                let l = (3.0 * d).ln();
                x * d * (l / l.ln()).powi(3)
            }
            _ => unreachable!(),
        })
        .unwrap();
        for (_, v) in dob.elements() {
            match v {
                Value::Real(x) => assert!(*x >= 2f64.ln() - 1e-12),
                _ => unreachable!(),
            }
        }

        // identifier mismatch
        let other = HeightSample::from_reals(&[("z", 1.0)]).unwrap();
        let h2 = HeightSample::from_reals(&[("a", 1.0)]).unwrap();
        assert!(lehmer_transform(&[h2, other], |_| 0.0).is_err());
    }

    #[test]
    fn order_axiom_scan() {
        let order = Order::Product(vec![Order::Real, Order::Int]);
        let vals = vec![
            Value::Tuple(vec![r(0.0), Value::Int(1)]),
            Value::Tuple(vec![r(1.0), Value::Int(0)]),
            Value::Tuple(vec![r(1.0), Value::Int(2)]),
        ];
        order.check_axioms(&vals).unwrap();
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(1000))]

        // product order must agree with an independent coordinatewise scan
        #[test]
        fn product_order_matches_coordinatewise_scan(
            a in proptest::collection::vec(-50i64..50, 1..6),
            b in proptest::collection::vec(-50i64..50, 1..6),
        ) {
            let n = a.len().min(b.len());
            let a: Vec<Value> = a[..n].iter().map(|&x| Value::Int(x)).collect();
            let b: Vec<Value> = b[..n].iter().map(|&x| Value::Int(x)).collect();
            let orders = vec![Order::Int; n];
            let got = compare_product(&a, &b, &orders).unwrap();
            // independent scan
            let pairs: Vec<(i64, i64)> = a.iter().zip(&b).map(|(x, y)| match (x, y) {
                (Value::Int(p), Value::Int(q)) => (*p, *q),
                _ => unreachable!(),
            }).collect();
            let all_le = pairs.iter().all(|(p, q)| p <= q);
            let all_ge = pairs.iter().all(|(p, q)| p >= q);
            let expect = match (all_le, all_ge) {
                (true, true) => Cmp::Equal,
                (true, false) => Cmp::Less,
                (false, true) => Cmp::Greater,
                (false, false) => Cmp::Incomparable,
            };
            proptest::prop_assert_eq!(got, expect);
        }

        // sublevel sets grow with the threshold
        #[test]
        fn sublevel_sets_nested_under_threshold_growth(
            values in proptest::collection::vec(-100.0f64..100.0, 1..30),
            lo in -100.0f64..100.0,
            delta in 0.0f64..50.0,
        ) {
            let pairs: Vec<(String, Value)> = values
                .iter()
                .enumerate()
                .map(|(i, &v)| (format!("e{i}"), Value::Real(v)))
                .collect();
            let sample = HeightSample::new(pairs, Order::Real).unwrap();
            let small = sublevel_set(&sample, &Value::Real(lo)).unwrap();
            let large = sublevel_set(&sample, &Value::Real(lo + delta)).unwrap();
            proptest::prop_assert!(small.iter().all(|id| large.contains(id)));
        }
    }

    #[test]
    fn sublevel_monotonicity_property() {
        let s = HeightSample::from_reals(&[
            ("a", 0.3),
            ("b", 1.7),
            ("c", 0.9),
            ("d", 2.4),
            ("e", 0.9),
        ])
        .unwrap();
        let mut prev: Vec<String> = Vec::new();
        for gamma in [0.0, 0.5, 1.0, 1.5, 2.0, 2.5] {
            let cur = sublevel_set(&s, &r(gamma)).unwrap();
            assert!(prev.iter().all(|id| cur.contains(id)));
            prev = cur;
        }
    }
}
