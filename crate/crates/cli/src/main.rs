mod args;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use serde::{Deserialize, Serialize};

use args::{Cli, Command, PointArgs};
use orthokod_core::exactnum::bernoulli::bernoulli_upto;
use orthokod_core::hmvol::{
    dim_mk_k3_leading, dim_mk_kii_leading, obstruction_ingredients, DeltaOneReading,
    DimensionEstimate,
};
use orthokod_core::jacobi::dim_jacobi_cusp_detailed;
use orthokod_core::lattice::orbit_census;
use orthokod_core::verdict::{
    scan_threshold, verdict, ScanOptions, SeriesPoint, Verdict, VerdictConfig, WPolicy,
};
use orthokod_core::{Rational, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Table,
    Json,
    Csv,
}

/// Failure of a command after its flags were accepted.
struct Failure(String);

impl From<orthokod_core::Error> for Failure {
    fn from(e: orthokod_core::Error) -> Self {
        Failure(e.to_string())
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct JacobiRecord {
    k: i64,
    index: u64,
    dim: u64,
    raw: i64,
    clamped: bool,
}

#[derive(Debug, Serialize, Deserialize)]
struct BernoulliRecord {
    n: u64,
    #[serde(with = "orthokod_core::exactnum::ratio_str")]
    value: Rational,
}

#[derive(Debug, Serialize, Deserialize)]
struct HmdimRecord {
    series: Series,
    m: u32,
    d: u64,
    leading: DimensionEstimate,
}

fn json<T: Serialize>(x: &T) -> Result<String, Failure> {
    serde_json::to_string(x).map_err(|e| Failure(format!("serialisation failed: {e}")))
}

/// Flag combinations clap cannot express; violations exit with status 2.
fn validate(cli: &Cli, fmt: Format) -> Result<(), String> {
    let no_csv = |what: &str| {
        if fmt == Format::Csv {
            Err(format!(
                "{what} has no CSV form; use --json or the default table"
            ))
        } else {
            Ok(())
        }
    };
    match &cli.command {
        Command::Verdict(p) => {
            no_csv("verdict")?;
            point(p).map(|_| ())
        }
        Command::Hmdim { series, d, .. } => {
            no_csv("hmdim")?;
            let series: Series = (*series).into();
            if series != Series::Unimodular && d.is_none() {
                return Err(format!("--d is required for the {series} series"));
            }
            Ok(())
        }
        Command::Ingredients { .. } => no_csv("ingredients"),
        _ => Ok(()),
    }
}

fn point(p: &PointArgs) -> Result<SeriesPoint, String> {
    let series: Series = p.series.into();
    let d = match (series, p.d) {
        (Series::Unimodular, _) => 0,
        (_, Some(d)) => d,
        (_, None) => return Err(format!("--d is required for the {series} series")),
    };
    if series == Series::Spin && d < 2 {
        return Err("the spin series needs --d 2 or larger".into());
    }
    Ok(SeriesPoint::new(series, p.m, d))
}

fn verdict_table(v: &Verdict) -> String {
    let mut lines = vec![
        format!("series   {}  m = {}  d = {}", v.series, v.m, v.d),
        format!("status   {:?}", v.status),
        format!("source   {:?}", v.source),
    ];
    if let Some(w) = &v.witness {
        lines.push(format!(
            "witness  weight a = {}, w = {}, predicate {}",
            w.a, w.w, w.predicate
        ));
        if let Some(b) = &w.beta {
            lines.push(format!("  beta       {}", render::surd(b)));
        }
        if let Some(t) = &w.threshold {
            lines.push(format!("  threshold  {}", render::surd(t)));
        }
    }
    if let Some(r) = &v.reason {
        lines.push(format!("reason   {r}"));
    }
    for c in &v.citations {
        lines.push(format!("cite     {c}"));
    }
    lines.join("\n")
}

fn run(cli: Cli, fmt: Format) -> Result<String, Failure> {
    let config = VerdictConfig {
        mode: cli.mode.into(),
        growth: cli.growth.into(),
    };
    match cli.command {
        Command::Verdict(p) => {
            let pt = point(&p).map_err(Failure)?;
            let v = verdict(pt, config)?;
            match fmt {
                Format::Json => json(&v),
                _ => Ok(verdict_table(&v)),
            }
        }
        Command::Scan {
            m,
            w,
            menu,
            d_min,
            d_max,
            closing,
        } => {
            let policy = match (w, menu) {
                (Some(w), false) => WPolicy::Fixed(w),
                _ => WPolicy::Menu,
            };
            let mut opts = ScanOptions::new(m, policy, d_max);
            opts.d_min = d_min;
            opts.config = config;
            opts.threads = cli.threads.map(|t| t as usize);
            opts.closing = closing.into();
            let report = scan_threshold(&opts)?;
            match fmt {
                Format::Json => json(&report),
                Format::Csv => {
                    // the summary is a diagnostic here; stdout carries the rows
                    eprintln!("{}", json(&report)?);
                    let mut out = String::from("d,predicate");
                    for (i, b) in report.bits.iter().enumerate() {
                        out.push_str(&format!("\n{},{}", report.d_min + i as u64, b));
                    }
                    Ok(out)
                }
                Format::Table => {
                    let opt =
                        |x: Option<u64>| x.map_or_else(|| "none".to_string(), |v| v.to_string());
                    Ok([
                        format!(
                            "m = {m}, policy {:?}, d in [{d_min}, {d_max}]",
                            report.policy
                        ),
                        format!("last failure        {}", opt(report.last_failure_d)),
                        format!("first stable d      {}", opt(report.first_stable_d)),
                        format!("failures            {}", report.failures),
                        format!(
                            "closing display     {}",
                            opt(report.closing_display_threshold)
                        ),
                        format!("quoted constant     {}", opt(report.quoted_constant)),
                        format!("note                {}", report.note),
                    ]
                    .join("\n"))
                }
            }
        }
        Command::Census { d, m } => {
            let c = orbit_census(m, d);
            match fmt {
                Format::Json => json(&c),
                Format::Csv => {
                    let mut out = String::from("complement,orbits,divisors");
                    for e in &c.entries {
                        out.push_str(&format!(
                            "\n{},{},{}",
                            e.complement.as_str(),
                            e.orbits,
                            e.divisors
                        ));
                    }
                    Ok(out)
                }
                Format::Table => {
                    let rows: Vec<Vec<String>> = c
                        .entries
                        .iter()
                        .map(|e| {
                            vec![
                                e.complement.as_str().to_string(),
                                e.orbits.to_string(),
                                e.divisors.to_string(),
                            ]
                        })
                        .collect();
                    Ok(render::table(&["complement", "orbits", "divisors"], &rows))
                }
            }
        }
        Command::Jacobi { k, index } => {
            let j = dim_jacobi_cusp_detailed(k, index)?;
            let rec = JacobiRecord {
                k,
                index,
                dim: j.dim,
                raw: j.raw,
                clamped: j.clamped,
            };
            match fmt {
                Format::Json => json(&rec),
                Format::Csv => Ok(format!("k,index,dim\n{k},{index},{}", rec.dim)),
                Format::Table => Ok(rec.dim.to_string()),
            }
        }
        Command::Bernoulli { n, upto } => {
            let all = bernoulli_upto(n as usize);
            let recs: Vec<BernoulliRecord> = if upto {
                all.into_iter()
                    .enumerate()
                    .map(|(i, value)| BernoulliRecord { n: i as u64, value })
                    .collect()
            } else {
                vec![BernoulliRecord {
                    n,
                    value: all[n as usize].clone(),
                }]
            };
            match fmt {
                Format::Json if upto => json(&recs),
                Format::Json => json(&recs[0]),
                Format::Csv => {
                    let mut out = String::from("n,value");
                    for r in &recs {
                        out.push_str(&format!("\n{},{}", r.n, r.value));
                    }
                    Ok(out)
                }
                Format::Table => {
                    let rows: Vec<Vec<String>> = recs
                        .iter()
                        .map(|r| vec![format!("B_{}", r.n), render::rational(&r.value)])
                        .collect();
                    Ok(render::table(&["n", "value"], &rows))
                }
            }
        }
        Command::Hmdim { series, m, d } => {
            let series: Series = series.into();
            let (d, leading) = match series {
                Series::Unimodular => (0, dim_mk_kii_leading(m)),
                _ => {
                    let d = d.unwrap_or(1);
                    (d, dim_mk_k3_leading(m, d, DeltaOneReading::default()))
                }
            };
            let rec = HmdimRecord {
                series,
                m,
                d,
                leading,
            };
            match fmt {
                Format::Json => json(&rec),
                _ => Ok(format!(
                    "dim M_k ~ c k^{}  with c = {}",
                    rec.leading.degree,
                    render::surd(&rec.leading.coeff)
                )),
            }
        }
        Command::Ingredients { m, d, w, k1 } => {
            let ing = obstruction_ingredients(
                m,
                d,
                w,
                k1,
                config.mode,
                config.growth,
                DeltaOneReading::default(),
            )?;
            match fmt {
                Format::Json => json(&ing),
                _ => Ok(render::table(
                    &["quantity", "value"],
                    &[
                        vec!["E_w".into(), render::rational(&ing.e_w)],
                        vec![
                            format!("growth ({:?})", ing.growth_kind),
                            render::rational(&ing.growth),
                        ],
                        vec!["b_(-2)".into(), render::surd(&ing.b_minus2)],
                        vec!["b_(-2d)".into(), render::surd(&ing.b_minus2d)],
                        vec!["h_d".into(), ing.h_d.to_string()],
                        vec!["c_(m,d,k1,w)".into(), render::surd(&ing.c_mdkw)],
                    ],
                )),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let fmt = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Table
    };
    if let Err(msg) = validate(&cli, fmt) {
        eprintln!("error: {msg}\n\nFor the flag grammar, try '--help'.");
        return ExitCode::from(2);
    }
    match run(cli, fmt) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{out}");
            ExitCode::SUCCESS
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
