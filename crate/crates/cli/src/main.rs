//! Command-line survey driver: build or ingest number-field databases,
//! compute special values in batch, tabulate Northcott-style counts
//! against the bound functions, emit Brauer-Siegel ratios, and expose the
//! height toolkit (Mahler measures, Weil heights, lattice minima, bound
//! evaluators) on the command line.
//!
//! Output is deterministic: fixed orderings everywhere, floats printed at
//! 12 significant digits in CSV, shortest-round-trip in JSON.

use clap::{Parser, Subcommand, ValueEnum};
use std::collections::BTreeMap;
use std::process::ExitCode;
use zetasurvey_core::bounds::{self, BoundConstants};
use zetasurvey_core::format_significant as sig;
use zetasurvey_core::lattice::{DistanceFn, LatticeInstance};
use zetasurvey_core::mahler::{self, LaurentPolynomialZ};
use zetasurvey_core::nf::{FieldDatabase, NumberFieldRecord};
use zetasurvey_core::weil;
use zetasurvey_core::zeta;
use zetasurvey_core::Error;

#[derive(Parser)]
#[command(name = "zetasurvey", version, about = "special values and height surveys")]
struct Cli {
    /// Constants file (key=value) overriding the documented defaults.
    #[arg(long, global = true)]
    constants: Option<String>,
    /// Output format for tabular commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the quadratic-field database for a discriminant range.
    BuildDb {
        #[arg(long, allow_hyphen_values = true)]
        min: i64,
        #[arg(long, allow_hyphen_values = true)]
        max: i64,
        #[arg(long)]
        out: String,
    },
    /// Count fields with |zeta_F^*(n)| below each grid threshold.
    Survey {
        #[arg(long)]
        db: String,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Ascending comma-separated thresholds.
        #[arg(long)]
        grid: String,
    },
    /// One special value as JSON.
    Special {
        /// Field label from --db, or `quad:D`, or `Q`.
        #[arg(long)]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long)]
        db: Option<String>,
    },
    /// Brauer-Siegel ratios log(hR)/log sqrt|disc| with quantiles.
    BrauerSiegel {
        #[arg(long)]
        db: String,
    },
    /// Mahler measure of an integer Laurent polynomial.
    Mahler {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Weil height of the algebraic number with the given minimal polynomial.
    Weil {
        #[arg(long)]
        poly: String,
    },
    /// Successive minima of a lattice under a distance function.
    Minima {
        /// Basis rows, e.g. "1,0;0,3".
        #[arg(long)]
        basis: String,
        #[arg(long, value_enum, default_value_t = NormArg::Euclidean)]
        norm: NormArg,
        /// Search radius; defaults to a provably sufficient one.
        #[arg(long)]
        radius: Option<f64>,
    },
    /// Evaluate one of the explicit bound functions.
    Bounds {
        #[arg(long)]
        which: String,
        /// Comma-separated key=value arguments, e.g. "b=10,n=-1".
        #[arg(long, default_value = "")]
        args: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NormArg {
    Euclidean,
    Sup,
    L1,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            match e {
                Error::Domain(_) | Error::Contract(_) | Error::Parse(_) => ExitCode::from(2),
                Error::Unconverged(_) => ExitCode::from(3),
                Error::Io(_) => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    let consts = match &cli.constants {
        Some(path) => BoundConstants::load(path)?,
        None => BoundConstants::default(),
    };
    match cli.command {
        Command::BuildDb { min, max, out } => cmd_build_db(min, max, &out),
        Command::Survey { db, n, grid } => cmd_survey(&db, n, &grid, &consts, cli.format),
        Command::Special { field, n, db } => cmd_special(&field, n, db.as_deref()),
        Command::BrauerSiegel { db } => cmd_brauer_siegel(&db, cli.format),
        Command::Mahler { poly, tol } => cmd_mahler(&poly, tol, cli.format),
        Command::Weil { poly } => cmd_weil(&poly),
        Command::Minima { basis, norm, radius } => cmd_minima(&basis, norm, radius, cli.format),
        Command::Bounds { which, args } => cmd_bounds(&which, &args, &consts, cli.format),
    }
}

fn cmd_build_db(min: i64, max: i64, out: &str) -> Result<(), Error> {
    if min > max {
        return Err(Error::Domain(format!("empty range: {min} > {max}")));
    }
    let db = FieldDatabase::generate(min, max)?;
    std::fs::write(out, db.to_csv())?;
    println!("wrote {} records to {out}", db.records.len());
    Ok(())
}

fn load_db(path: &str) -> Result<FieldDatabase, Error> {
    let (db, errors) = FieldDatabase::load_csv(path)?;
    for e in &errors {
        eprintln!("rejected row at line {}: {}", e.line, e.reason);
    }
    Ok(db)
}

fn parse_grid(grid: &str) -> Result<Vec<f64>, Error> {
    let values: Vec<f64> = grid
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("bad grid value {s:?}")))
        })
        .collect::<Result<_, _>>()?;
    if values.is_empty() {
        return Err(Error::Domain("grid must be nonempty".into()));
    }
    if values.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Domain("grid must be ascending".into()));
    }
    Ok(values)
}

struct SurveyRow {
    label: String,
    abs_disc: u64,
    leading: f64,
    order: i64,
}

fn cmd_survey(
    db_path: &str,
    n: i64,
    grid: &str,
    consts: &BoundConstants,
    format: Format,
) -> Result<(), Error> {
    if n > 1 {
        return Err(Error::Domain("survey covers integer points n <= 1".into()));
    }
    let db = load_db(db_path)?;
    let grid = parse_grid(grid)?;

    let mut rows: Vec<SurveyRow> = Vec::new();
    let mut skipped: Vec<(String, String)> = Vec::new();
    for f in &db.records {
        if n <= -1 && f.degree > 2 {
            skipped.push((f.label.clone(), "series evaluation unsupported for degree > 2".into()));
            continue;
        }
        let sv = zeta::special_value(f, n, 1e-8)?;
        rows.push(SurveyRow {
            label: f.label.clone(),
            abs_disc: f.disc.unsigned_abs(),
            leading: sv.leading,
            order: sv.order,
        });
    }
    rows.sort_by(|a, b| a.abs_disc.cmp(&b.abs_disc).then_with(|| a.label.cmp(&b.label)));

    let counts: Vec<usize> = grid
        .iter()
        .map(|&b| rows.iter().filter(|r| r.leading.abs() <= b).count())
        .collect();
    let bound_for = |b: f64| -> Option<f64> {
        if n <= -1 {
            bounds::count_bound_negative(b, n, consts).ok()
        } else if n == 0 {
            bounds::count_bound_zero(b, consts).ok()
        } else {
            None
        }
    };

    match format {
        Format::Csv => {
            println!("# zetasurvey survey n={n} db={db_path}");
            println!("# constants: {}", constants_line(consts));
            println!("B,count,bound");
            for (b, c) in grid.iter().zip(&counts) {
                let bd = match bound_for(*b) {
                    Some(v) => sig(v, 12),
                    None => "n/a".into(),
                };
                println!("{},{},{}", sig(*b, 12), c, bd);
            }
            println!("label,abs_disc,leading,order");
            for r in &rows {
                println!("{},{},{},{}", r.label, r.abs_disc, sig(r.leading, 12), r.order);
            }
            for (label, reason) in &skipped {
                println!("skipped,{label},{reason}");
            }
        }
        Format::Json => {
            let obj = serde_json::json!({
                "n": n,
                "constants": consts,
                "grid": grid,
                "counts": counts,
                "bounds": grid.iter().map(|&b| bound_for(b)).collect::<Vec<_>>(),
                "rows": rows.iter().map(|r| serde_json::json!({
                    "label": r.label,
                    "abs_disc": r.abs_disc,
                    "leading": r.leading,
                    "order": r.order,
                })).collect::<Vec<_>>(),
                "skipped": skipped.iter().map(|(l, r)| serde_json::json!({
                    "label": l, "reason": r,
                })).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&obj).expect("serializable"));
        }
    }
    Ok(())
}

fn constants_line(c: &BoundConstants) -> String {
    format!(
        "c0={} c1={} c2={} c5={} c6={} c7={} c9={} c10={} a1={} a2={} a3={} a4={} c8_scale={}",
        sig(c.c0, 12),
        sig(c.c1, 12),
        sig(c.c2, 12),
        sig(c.c5, 12),
        sig(c.c6, 12),
        sig(c.c7, 12),
        sig(c.c9, 12),
        sig(c.c10, 12),
        sig(c.a1, 12),
        sig(c.a2, 12),
        sig(c.a3, 12),
        sig(c.a4, 12),
        sig(c.c8_scale, 12)
    )
}

fn resolve_field(spec: &str, db: Option<&str>) -> Result<NumberFieldRecord, Error> {
    // a database label wins over the generated fallbacks
    if let Some(path) = db {
        let db = load_db(path)?;
        if let Some(f) = db.find(spec) {
            return Ok(f.clone());
        }
    }
    if spec == "Q" {
        return Ok(NumberFieldRecord::rationals());
    }
    if let Some(d_text) = spec.strip_prefix("quad:") {
        let d: i64 = d_text
            .parse()
            .map_err(|_| Error::Parse(format!("bad discriminant in {spec:?}")))?;
        return zetasurvey_core::nf::build_quadratic(d);
    }
    Err(Error::Domain(format!(
        "unknown field {spec:?}; use a db label with --db, `quad:D`, or `Q`"
    )))
}

fn cmd_special(spec: &str, n: i64, db: Option<&str>) -> Result<(), Error> {
    let field = resolve_field(spec, db)?;
    let sv = zeta::special_value(&field, n, 1e-8)?;
    println!("{}", serde_json::to_string(&sv).expect("serializable"));
    Ok(())
}

fn cmd_brauer_siegel(db_path: &str, format: Format) -> Result<(), Error> {
    let db = load_db(db_path)?;
    let mut rows: Vec<(String, u64, f64)> = Vec::new();
    for f in &db.records {
        if f.disc.unsigned_abs() < 2 {
            continue;
        }
        let hr = f.class_number as f64 * f.regulator;
        let ratio = hr.ln() / (f.disc.unsigned_abs() as f64).sqrt().ln();
        rows.push((f.label.clone(), f.disc.unsigned_abs(), ratio));
    }
    rows.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    let mut sorted: Vec<f64> = rows.iter().map(|r| r.2).collect();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite ratios"));
    let quantile = |q: f64| -> f64 {
        if sorted.is_empty() {
            return f64::NAN;
        }
        let idx = ((sorted.len() - 1) as f64 * q).round() as usize;
        sorted[idx]
    };
    match format {
        Format::Csv => {
            println!("# zetasurvey brauer-siegel db={db_path}");
            println!(
                "# quantiles: min={} q25={} median={} q75={} max={}",
                sig(quantile(0.0), 12),
                sig(quantile(0.25), 12),
                sig(quantile(0.5), 12),
                sig(quantile(0.75), 12),
                sig(quantile(1.0), 12)
            );
            println!("label,abs_disc,ratio");
            for (label, d, ratio) in &rows {
                println!("{label},{d},{}", sig(*ratio, 12));
            }
        }
        Format::Json => {
            let obj = serde_json::json!({
                "quantiles": {
                    "min": quantile(0.0),
                    "q25": quantile(0.25),
                    "median": quantile(0.5),
                    "q75": quantile(0.75),
                    "max": quantile(1.0),
                },
                "rows": rows.iter().map(|(l, d, r)| serde_json::json!({
                    "label": l, "abs_disc": d, "ratio": r,
                })).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&obj).expect("serializable"));
        }
    }
    Ok(())
}

fn cmd_mahler(poly: &str, tol: f64, format: Format) -> Result<(), Error> {
    let p = LaurentPolynomialZ::parse(poly)?;
    let result = if p.nvars() <= 1 {
        mahler::mahler_univariate(&p, tol)?
    } else {
        mahler::mahler_multivariate(&p, tol)?
    };
    match format {
        Format::Csv => {
            println!("poly,value,method,err_bound,cyclotomic,converged");
            println!(
                "{},{},{:?},{},{},{}",
                p.to_text(),
                sig(result.value, 12),
                result.method,
                sig(result.err_bound, 12),
                result.cyclotomic_flag,
                result.converged
            );
        }
        Format::Json => {
            let obj = serde_json::json!({
                "poly": p.to_text(),
                "result": result,
            });
            println!("{}", serde_json::to_string(&obj).expect("serializable"));
        }
    }
    if !result.converged {
        return Err(Error::Unconverged("quadrature cap reached before tolerance".into()));
    }
    Ok(())
}

fn cmd_weil(poly: &str) -> Result<(), Error> {
    let p = LaurentPolynomialZ::parse(poly)?;
    if p.nvars() > 1 {
        return Err(Error::Domain("minimal polynomials are univariate".into()));
    }
    let mut coeffs = vec![0i64; 0];
    let cleared = p.cleared();
    let deg = (0..1).map(|i| cleared.degree_in(i)).max().unwrap_or(0) as usize;
    coeffs.resize(deg + 1, 0);
    for (e, c) in cleared.terms() {
        coeffs[e[0] as usize] = *c;
    }
    let alpha = weil::AlgebraicNumber::new(coeffs)?;
    let h = weil::weil_height(&alpha, 1e-12)?;
    let obj = serde_json::json!({
        "min_poly": alpha.min_poly(),
        "degree": alpha.degree(),
        "height": h.value,
        "err_bound": h.err_bound,
        "reciprocal": alpha.is_reciprocal(),
    });
    println!("{}", serde_json::to_string(&obj).expect("serializable"));
    Ok(())
}

fn cmd_minima(
    basis_text: &str,
    norm: NormArg,
    radius: Option<f64>,
    format: Format,
) -> Result<(), Error> {
    let basis: Vec<Vec<f64>> = basis_text
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<f64>()
                        .map_err(|_| Error::Parse(format!("bad basis entry {x:?}")))
                })
                .collect::<Result<Vec<f64>, Error>>()
        })
        .collect::<Result<_, _>>()?;
    let norm = match norm {
        NormArg::Euclidean => DistanceFn::Euclidean,
        NormArg::Sup => DistanceFn::Sup,
        NormArg::L1 => DistanceFn::L1,
    };
    let lat = LatticeInstance::new(basis, norm)?;
    let radius = radius.unwrap_or_else(|| lat.sufficient_radius());
    let minima = lat.minkowski_minima(radius)?;
    match format {
        Format::Csv => {
            println!("j,mu_j");
            for (j, mu) in minima.iter().enumerate() {
                println!("{},{}", j + 1, sig(*mu, 12));
            }
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string(&serde_json::json!({ "minima": minima, "radius": radius }))
                    .expect("serializable")
            );
        }
    }
    Ok(())
}

fn parse_args_map(args: &str) -> Result<BTreeMap<String, f64>, Error> {
    let mut map = BTreeMap::new();
    for part in args.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got {part:?}")))?;
        let v: f64 = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad number in {part:?}")))?;
        map.insert(k.trim().to_string(), v);
    }
    Ok(map)
}

fn need(map: &BTreeMap<String, f64>, key: &str) -> Result<f64, Error> {
    map.get(key)
        .copied()
        .ok_or_else(|| Error::Domain(format!("missing argument {key}")))
}

fn cmd_bounds(
    which: &str,
    args: &str,
    consts: &BoundConstants,
    format: Format,
) -> Result<(), Error> {
    let map = parse_args_map(args)?;
    let mut out: Vec<(String, f64)> = Vec::new();
    match which {
        "regulator-lower" => {
            let d = need(&map, "d")? as u32;
            out.push(("bound".into(), bounds::regulator_lower_bound(d)));
        }
        "solve" => {
            let b = need(&map, "b")?;
            let (r_max, d_max) = bounds::solve_degree_and_regulator_bounds(b)?;
            out.push(("r_max".into(), r_max));
            out.push(("d_max".into(), d_max as f64));
        }
        "disc-left" => {
            let b = need(&map, "b")?;
            let n = need(&map, "n")? as u32;
            out.push(("bound".into(), bounds::discriminant_bound_left(b, n)?));
        }
        "count-negative" => {
            let b = need(&map, "b")?;
            let n = need(&map, "n")? as i64;
            out.push(("bound".into(), bounds::count_bound_negative(b, n, consts)?));
        }
        "count-zero" => {
            let b = need(&map, "b")?;
            out.push(("bound".into(), bounds::count_bound_zero(b, consts)?));
        }
        "friedman" => {
            let d = need(&map, "d")? as u32;
            let r = need(&map, "r")?;
            out.push(("bound".into(), bounds::friedman_discriminant_bound(d, r, consts)?));
        }
        "couveignes" => {
            let x = need(&map, "x")?;
            let d = need(&map, "d")? as u32;
            out.push(("bound".into(), bounds::couveignes_count(x, d, consts)?));
        }
        "cm" => {
            let d = need(&map, "disc")? as i64;
            let degree = need(&map, "d")? as u32;
            let h = need(&map, "h")? as u64;
            let subreg = need(&map, "subreg")?;
            let eps = need(&map, "eps")?;
            let field = NumberFieldRecord::new(
                format!("cm:{d}"),
                degree,
                0,
                degree / 2,
                d,
                h,
                1.0,
                need(&map, "w").unwrap_or(2.0) as u64,
            )?;
            out.push(("bound".into(), bounds::cm_discriminant_bound(&field, subreg, eps, consts)?));
        }
        "chain" => {
            let d = need(&map, "disc")? as i64;
            let b = need(&map, "b")?;
            let field = zetasurvey_core::nf::build_quadratic(d)?;
            let rep = bounds::verify_chain(&field, b)?;
            println!("{}", serde_json::to_string(&rep).expect("serializable"));
            return Ok(());
        }
        other => {
            return Err(Error::Domain(format!(
                "unknown bound {other:?}; expected one of regulator-lower, solve, disc-left, \
                 count-negative, count-zero, friedman, couveignes, cm, chain"
            )))
        }
    }
    match format {
        Format::Csv => {
            println!("# constants: {}", constants_line(consts));
            println!("name,value");
            for (name, value) in &out {
                println!("{name},{}", sig(*value, 12));
            }
        }
        Format::Json => {
            let obj: serde_json::Map<String, serde_json::Value> = out
                .iter()
                .map(|(k, v)| (k.clone(), serde_json::json!(v)))
                .collect();
            println!(
                "{}",
                serde_json::to_string(&serde_json::json!({
                    "constants": consts,
                    "values": obj,
                }))
                .expect("serializable")
            );
        }
    }
    Ok(())
}
