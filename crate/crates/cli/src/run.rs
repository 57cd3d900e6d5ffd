use std::fmt::Write as _;
use std::time::Instant;

use serde_json::{json, Map, Value};

use schubert_core::asymptotics::{
    closed_form_max, complex_asymptote_table, incidence_asymptote_table, real_asymptote_table,
    torus_scan,
};
use schubert_core::combinatorics::{catalan, feasibility};
use schubert_core::enumerate::{
    catalan_substitution, complex_count, complex_root_poly, cubic_ci_real, incidence_complex,
    incidence_real, real_count, real_root_poly, relative_gap, CountProblem, CountReport,
    Orientability,
};
use schubert_core::schur::{
    numeric_schur_coefficient, real_schur_coefficient, real_schur_polynomial, schur_coefficient,
    schur_polynomial,
};
use schubert_core::{Error, Partition, Regime, RootPolynomial, SparsePoly, ENGINE_VERSION};

use crate::args::{Cli, Command, Family, Format};
use crate::cache::Cache;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

const DEFAULT_SCAN_GRID: usize = 360;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Infeasible(String),
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Infeasible(_) => EXIT_INFEASIBLE,
            Failure::Internal(_) => EXIT_INTERNAL,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Infeasible(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::EvenDegree(_) => Failure::Infeasible(msg),
            Error::NotDivisible | Error::NotAPerfectSquare | Error::DegenerateAlternant(_) => {
                Failure::Internal(msg)
            }
            _ => Failure::Usage(msg),
        }
    }
}

pub struct Output {
    pub stdout: String,
    pub code: i32,
    pub note: Option<String>,
}

pub fn execute(cli: &Cli) -> Result<Output, Failure> {
    let g = &cli.global;
    if g.format == Format::Csv && !cli.command.is_table() {
        return Err(Failure::Usage(format!(
            "--format csv is only available for table commands, not `{}`",
            cli.command.name()
        )));
    }
    let start = Instant::now();
    let params = parameters(cli)?;
    let key = format!(
        "{} {}",
        cli.command.name(),
        serde_json::to_string(&params).map_err(|e| Failure::Internal(e.to_string()))?
    );

    let cache = match (&g.cache_dir, g.no_cache) {
        (Some(dir), false) if !matches!(cli.command, Command::Feasibility { .. }) => {
            Some(Cache::new(dir).map_err(|e| {
                Failure::Usage(format!("cache directory {}: {e}", dir.display()))
            })?)
        }
        _ => None,
    };

    let (mut body, cached) = match cache.as_ref().and_then(|c| c.lookup(&key)) {
        Some(v) => (v, true),
        None => {
            let mut body = compute(cli)?;
            let obj = body.as_object_mut().expect("bodies are objects");
            obj.insert("command".into(), json!(cli.command.name()));
            obj.insert("engine_version".into(), json!(ENGINE_VERSION));
            obj.insert("parameters".into(), Value::Object(params));
            if let Some(c) = &cache {
                // a failed write only costs a recomputation next time
                let _ = c.store(&key, &body);
            }
            (body, false)
        }
    };

    let infeasible = body.get("feasible") == Some(&Value::Bool(false));
    let obj = body.as_object_mut().expect("bodies are objects");
    obj.insert("cached".into(), json!(cached));
    obj.insert(
        "elapsed_ms".into(),
        json!(start.elapsed().as_millis() as u64),
    );

    let stdout = match g.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&body)
                .map_err(|e| Failure::Internal(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Csv => render_csv(&cli.command, &body),
    };
    Ok(Output {
        stdout,
        code: if infeasible { EXIT_INFEASIBLE } else { EXIT_OK },
        note: infeasible.then(|| {
            "infeasible parameters: the divisibility condition on (d, k) fails".to_owned()
        }),
    })
}

fn parse_partition(text: &str) -> Result<Partition, Failure> {
    text.parse::<Partition>().map_err(Failure::from)
}

/// Canonical, validated request parameters; also the cache key payload.
fn parameters(cli: &Cli) -> Result<Map<String, Value>, Failure> {
    let mut p = Map::new();
    match &cli.command {
        Command::Count { regime, d, k } | Command::Feasibility { regime, d, k } => {
            if *d == 0 || *k == 0 {
                return Err(Failure::Usage("-d and -k must be at least 1".into()));
            }
            p.insert("regime".into(), json!(Regime::from(*regime)));
            p.insert("d".into(), json!(d));
            p.insert("k".into(), json!(k));
        }
        Command::Incidence { regime, n } => {
            if *n == 0 {
                return Err(Failure::Usage("-n must be at least 1".into()));
            }
            p.insert("regime".into(), json!(Regime::from(*regime)));
            p.insert("n".into(), json!(n));
        }
        Command::CubicCi { r } => {
            p.insert("r".into(), json!(r));
        }
        Command::Schur { regime, partition } => {
            p.insert("regime".into(), json!(Regime::from(*regime)));
            p.insert("partition".into(), json!(parse_partition(partition)?));
        }
        Command::Lambda {
            regime,
            poly,
            partition,
        } => {
            let alpha = parse_partition(partition)?;
            let f = parse_poly(poly, Regime::from(*regime), &alpha)?;
            p.insert("regime".into(), json!(Regime::from(*regime)));
            p.insert("partition".into(), json!(alpha));
            p.insert("poly".into(), json!(f.to_string()));
        }
        Command::Scan { d } => {
            if d % 2 == 0 {
                return Err(Error::EvenDegree(*d).into());
            }
            p.insert("d".into(), json!(d));
        }
        Command::Asymptote { family, values, k } => {
            if values.is_empty() || values.contains(&0) {
                return Err(Failure::Usage("--values must be positive integers".into()));
            }
            let name = match family {
                Family::Real => "real",
                Family::Complex => "complex",
                Family::Incidence => "incidence",
            };
            p.insert("family".into(), json!(name));
            p.insert("values".into(), json!(values));
            if *family == Family::Complex {
                p.insert("k".into(), json!(k));
            }
        }
    }
    let g = &cli.global;
    if let Some(grid) = g.grid {
        p.insert("grid".into(), json!(grid));
    }
    if g.dump_poly {
        p.insert("dump_poly".into(), json!(true));
    }
    Ok(p)
}

fn parse_poly(text: &str, regime: Regime, alpha: &Partition) -> Result<SparsePoly, Failure> {
    let nvars = match regime {
        Regime::Complex => alpha.len(),
        Regime::Real => {
            if alpha.len() % 2 != 0 {
                return Err(Failure::Usage(
                    "real partitions have even length 2k".into(),
                ));
            }
            alpha.len() / 2
        }
    };
    Ok(SparsePoly::parse(text, nvars)?)
}

fn count_body(report: &CountReport, k: u32) -> Value {
    let Orientability {
        orientable_grassmannian,
        sym_power_orientable,
        euler_number_defined,
    } = report.orientability;
    let mut body = json!({
        "regime": report.regime,
        "k": k,
        "m": report.m,
        "value": report.value.as_ref().map(|v| v.to_string()),
        "feasible": report.feasible,
        "orientable_grassmannian": orientable_grassmannian,
        "sym_power_orientable": sym_power_orientable,
        "euler_number_defined": euler_number_defined,
    });
    if let [d] = report.degrees[..] {
        body["d"] = json!(d);
    } else {
        body["degrees"] = json!(report.degrees);
    }
    body
}

fn add_numeric(body: &mut Value, problem: CountProblem, grid: Option<usize>) -> Result<(), Failure> {
    let Some(grid) = grid else { return Ok(()) };
    let exact = problem.exact()?;
    let (v, grid) = problem.numeric(Some(grid))?;
    body["numeric"] = json!({
        "grid": grid,
        "re": v.re,
        "im": v.im,
        "relative_gap": relative_gap(v, &exact),
    });
    Ok(())
}

fn compute(cli: &Cli) -> Result<Value, Failure> {
    let g = &cli.global;
    match &cli.command {
        Command::Count { regime, d, k } => {
            let (d, k) = (*d, *k);
            let regime = Regime::from(*regime);
            let report = match regime {
                Regime::Complex => complex_count(d, k)?,
                Regime::Real => real_count(d, k)?,
            };
            let f = feasibility(d, k, regime)?;
            let mut body = count_body(&report, k);
            body["feasibility"] = json!(f);
            if report.feasible {
                let problem = match regime {
                    Regime::Complex => CountProblem::Complex { d, k },
                    Regime::Real => CountProblem::Real { d, k },
                };
                add_numeric(&mut body, problem, g.grid)?;
                if g.dump_poly {
                    let f = match regime {
                        Regime::Complex => complex_root_poly(d, k)?,
                        Regime::Real => real_root_poly(d, k)?,
                    };
                    body["poly"] = json!(f.poly().to_string());
                }
            }
            Ok(body)
        }
        Command::Incidence { regime, n } => {
            let n = *n;
            let regime = Regime::from(*regime);
            let (value, problem) = match regime {
                Regime::Complex => (incidence_complex(n)?, CountProblem::IncidenceComplex { n }),
                Regime::Real => (incidence_real(n)?, CountProblem::IncidenceReal { n }),
            };
            let mut body = json!({
                "regime": regime,
                "n": n,
                "k": 4,
                "m": 2 * n,
                "value": value.to_string(),
                "feasible": true,
            });
            if regime == Regime::Real {
                body["catalan"] = json!(catalan(n).to_string());
            }
            add_numeric(&mut body, problem, g.grid)?;
            if g.dump_poly {
                let base = match regime {
                    Regime::Complex => schur_polynomial(&Partition::new(vec![2, 2, 0, 0])?)?.into_poly(),
                    Regime::Real => SparsePoly::from_terms(2, [(vec![2, 0], 1), (vec![0, 2], 1)])?,
                };
                body["poly"] = json!(base.pow(2 * n).to_string());
            }
            Ok(body)
        }
        Command::CubicCi { r } => {
            let r = *r;
            let report = cubic_ci_real(r)?;
            let mut body = count_body(&report, 2);
            body["r"] = json!(r);
            body["catalan_substitution"] = json!(catalan_substitution(r).to_string());
            add_numeric(&mut body, CountProblem::CubicCi { r }, g.grid)?;
            if g.dump_poly {
                body["poly"] = json!(real_root_poly(3, 2)?.poly().pow(r).to_string());
            }
            Ok(body)
        }
        Command::Schur { regime, partition } => {
            let alpha = parse_partition(partition)?;
            let s = match Regime::from(*regime) {
                Regime::Complex => schur_polynomial(&alpha)?,
                Regime::Real => real_schur_polynomial(&alpha)?,
            };
            Ok(json!({
                "regime": s.regime(),
                "partition": alpha,
                "nvars": s.nvars(),
                "poly": s.poly().to_string(),
            }))
        }
        Command::Lambda {
            regime,
            poly,
            partition,
        } => {
            let regime = Regime::from(*regime);
            let alpha = parse_partition(partition)?;
            let f = parse_poly(poly, regime, &alpha)?;
            let root = match regime {
                Regime::Complex => RootPolynomial::complex(f)?,
                Regime::Real => RootPolynomial::real(f)?,
            };
            let c = match regime {
                Regime::Complex => schur_coefficient(&root, &alpha)?,
                Regime::Real => real_schur_coefficient(&root, &alpha)?,
            };
            let mut body = json!({
                "regime": regime,
                "partition": alpha,
                "value": c.value.to_string(),
                "sign_certain": c.sign_certain,
            });
            if let Some(grid) = g.grid {
                let v = numeric_schur_coefficient(&root, &alpha, grid)?;
                body["numeric"] = json!({
                    "grid": grid,
                    "re": v.re,
                    "im": v.im,
                    "relative_gap": relative_gap(v, &c.value),
                });
            }
            if g.dump_poly {
                body["poly"] = json!(root.poly().to_string());
            }
            Ok(body)
        }
        Command::Scan { d } => {
            let grid = g.grid.unwrap_or(DEFAULT_SCAN_GRID);
            let s = torus_scan(*d, grid)?;
            let closed = closed_form_max(*d)?;
            let closed_f: f64 = closed.to_string().parse().unwrap_or(f64::INFINITY);
            let mut body = json!(s);
            body["argmax_on_curve"] = json!(s.argmax_on_curve());
            body["closed_form_max"] = json!(closed.to_string());
            body["relative_gap"] = json!((s.max_modulus - closed_f).abs() / closed_f);
            if g.dump_poly {
                body["poly"] = json!(real_root_poly(*d, 2)?.poly().to_string());
            }
            Ok(body)
        }
        Command::Asymptote { family, values, k } => {
            let rows = match family {
                Family::Real => real_asymptote_table(values)?,
                Family::Complex => complex_asymptote_table(values, *k)?,
                Family::Incidence => incidence_asymptote_table(values)?,
            };
            Ok(json!({ "rows": rows }))
        }
        Command::Feasibility { regime, d, k } => {
            let regime = Regime::from(*regime);
            let f = feasibility(*d, *k, regime)?;
            let o = Orientability::evaluate(&[*d as u64], f.rank() as u64, f.m);
            Ok(json!({
                "regime": regime,
                "d": d,
                "k": k,
                "m": f.m,
                "feasible": f.is_feasible(),
                "feasibility": f,
                "orientable_grassmannian": o.orientable_grassmannian,
                "sym_power_orientable": o.sym_power_orientable,
                "euler_number_defined": o.euler_number_defined,
            }))
        }
    }
}

fn csv_field(v: Option<&Value>) -> String {
    match v {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(other) => other.to_string(),
    }
}

pub const ASYMPTOTE_COLUMNS: [&str; 11] = [
    "family",
    "parameter",
    "value",
    "exact_log",
    "exact_log10",
    "prediction",
    "prediction_log10",
    "ratio",
    "normalized",
    "bound",
    "within_bound",
];

const SCAN_COLUMNS: [&str; 10] = [
    "d",
    "grid",
    "min_modulus",
    "max_modulus",
    "closed_form_max",
    "relative_gap",
    "sign_constant",
    "sign",
    "max_imaginary",
    "argmax_on_curve",
];

fn render_csv(command: &Command, body: &Value) -> String {
    let mut out = String::new();
    match command {
        Command::Asymptote { .. } => {
            out.push_str(&ASYMPTOTE_COLUMNS.join(","));
            out.push('\n');
            for row in body["rows"].as_array().into_iter().flatten() {
                let mut row = row.clone();
                if let Some(p) = row["prediction"].as_f64() {
                    row["prediction_log10"] = json!(p / std::f64::consts::LN_10);
                }
                let fields: Vec<String> = ASYMPTOTE_COLUMNS
                    .iter()
                    .map(|c| csv_field(row.get(*c)))
                    .collect();
                let _ = writeln!(out, "{}", fields.join(","));
            }
        }
        _ => {
            out.push_str(&SCAN_COLUMNS.join(","));
            out.push('\n');
            let fields: Vec<String> = SCAN_COLUMNS.iter().map(|c| csv_field(body.get(*c))).collect();
            let _ = writeln!(out, "{}", fields.join(","));
        }
    }
    out
}
