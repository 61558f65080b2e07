//! The `hfe` command-line front end.
//!
//! Every set argument is either inline JSON or a path to a JSON file. A THFE
//! is an array of grades (`[0.2, 0.4]`); an interval union is an array of
//! pieces (`[{"point": 0.2}, {"lo": 0.3, "hi": 0.6, "hi_closed": false}]`).
//! Grades are read from their decimal text, so `0.1` is exactly `1/10`.
//!
//! Exit codes: `0` on success, `1` on parse or domain errors, `2` on usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::decision::{evaluate_with, preference_matrix, EvaluationConfig, Mean, RankingReport};
use crate::dominance::{dominance, kernel_matrix, DominanceKind};
use crate::error::{HfeError, Result};
use crate::exact::{render_decimal, ExactJson};
use crate::grade::Grade;
use crate::grid::Grid;
use crate::interval::IntervalUnionHfe;
use crate::lattice::{join0, meet0};
use crate::normative::{
    check_em, check_gardenfors, check_smu, check_wmu, closed_family_equivalence_suite,
    ClosedInterval, IntervalScoreKind, PropertyReport, FAMILY_MAX_POINTS,
};
use crate::orders::OrderKind;
use crate::scores::{score, ScoreKind, ScoreValue};
use crate::thfe::Thfe;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "hfe",
    version,
    about = "Orders, scores and dominance functions on hesitant fuzzy elements"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    out: OutputFormat,
    /// Decimal places used when rendering exact values.
    #[arg(long, global = true, env = "HL_PRECISION", default_value_t = 4)]
    precision: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compare two sets under an order.
    Compare {
        #[arg(long)]
        order: String,
        a: String,
        b: String,
    },
    /// Meet or join under the symmetric order.
    Lattice {
        #[arg(long)]
        op: LatticeOp,
        a: String,
        b: String,
    },
    /// Evaluate a built-in score.
    Score {
        #[arg(long)]
        kind: String,
        a: String,
    },
    /// Check a normative property on the subsets of a grid.
    Check {
        /// smu, wmu, g, wg, em, or suite for the full equivalence check.
        #[arg(long)]
        property: String,
        /// Score on finite sets (mean, gmean, min, max, product).
        #[arg(long, default_value = "mean")]
        score: String,
        /// Score on closed intervals, used by `em` (midpoint, left, right).
        #[arg(long, default_value = "midpoint")]
        interval_score: String,
        /// `start:stop:step` or a comma-separated list of grades.
        #[arg(long, default_value = "0:1:0.25")]
        grid: String,
    },
    /// Dominance of a set relative to a control set.
    Dominance {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        control: String,
        y: String,
        /// Also print the pairwise kernel matrix.
        #[arg(long)]
        matrix: bool,
    },
    /// Preference matrix of a list of alternatives.
    Prefmatrix {
        #[arg(long)]
        kind: String,
        alternatives: String,
    },
    /// Rank alternatives against per-criterion baselines.
    Evaluate {
        /// Overrides the kind stored in the config.
        #[arg(long)]
        kind: Option<String>,
        config: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LatticeOp {
    Meet,
    Join,
}

/// Parses `args` (program name first), writes the document to `out` and
/// diagnostics to `err`, and returns the process exit code.
pub fn run<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(document) => {
            let _ = out.write_all(document.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(cli: &Cli) -> Result<String> {
    let fmt = Formatter {
        out: cli.out,
        precision: cli.precision,
    };
    match &cli.command {
        Command::Compare { order, a, b } => {
            compare(&fmt, order.parse()?, &read_hfe(a)?, &read_hfe(b)?)
        }
        Command::Lattice { op, a, b } => lattice(&fmt, *op, &read_thfe(a)?, &read_thfe(b)?),
        Command::Score { kind, a } => score_cmd(&fmt, kind.parse()?, &read_thfe(a)?),
        Command::Check {
            property,
            score,
            interval_score,
            grid,
        } => check(&fmt, property, score, interval_score, &grid.parse()?),
        Command::Dominance {
            kind,
            control,
            y,
            matrix,
        } => dominance_cmd(
            &fmt,
            kind.parse()?,
            &read_thfe(control)?,
            &read_thfe(y)?,
            *matrix,
        ),
        Command::Prefmatrix { kind, alternatives } => prefmatrix(&fmt, kind.parse()?, alternatives),
        Command::Evaluate { kind, config } => evaluate_cmd(&fmt, kind.as_deref(), config),
    }
}

struct Formatter {
    out: OutputFormat,
    precision: usize,
}

impl Formatter {
    /// Rounded decimal with trailing zeros removed, for tables and CSV.
    fn decimal(&self, v: &BigRational) -> String {
        let text = render_decimal(v, self.precision);
        if text.contains('.') {
            text.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            text
        }
    }

    fn exact(&self, v: &BigRational) -> Value {
        serde_json::to_value(ExactJson::new(v, self.precision)).expect("plain struct")
    }

    fn score_text(&self, v: &ScoreValue) -> String {
        match v {
            ScoreValue::Exact(r) => self.decimal(r),
            ScoreValue::Approx(f) => format!("{f:.*}", self.precision),
        }
    }

    fn score_json(&self, v: &ScoreValue) -> Value {
        match v {
            ScoreValue::Exact(r) => self.exact(r),
            ScoreValue::Approx(f) => json!({ "approx": f }),
        }
    }

    fn json(&self, value: Value) -> String {
        let mut text = serde_json::to_string_pretty(&value).expect("serializable");
        text.push('\n');
        text
    }
}

/// Reads a JSON document given inline or as a path.
fn read_document(arg: &str) -> Result<Value> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('[') || trimmed.starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(Path::new(arg)).map_err(|e| {
            HfeError::parse(arg, format!("not inline JSON and not a readable file: {e}"))
        })?
    };
    serde_json::from_str(&text).map_err(|e| HfeError::parse(arg, e.to_string()))
}

enum Hfe {
    Finite(Thfe),
    Intervals(IntervalUnionHfe),
}

fn from_value<T: for<'de> Deserialize<'de>>(value: Value, arg: &str) -> Result<T> {
    T::deserialize(value).map_err(|e| HfeError::parse(arg, e.to_string()))
}

fn read_hfe(arg: &str) -> Result<Hfe> {
    let value = read_document(arg)?;
    let pieces = value
        .as_array()
        .is_some_and(|items| items.iter().any(Value::is_object));
    if pieces {
        Ok(Hfe::Intervals(from_value(value, arg)?))
    } else {
        Ok(Hfe::Finite(from_value(value, arg)?))
    }
}

fn read_thfe(arg: &str) -> Result<Thfe> {
    match read_hfe(arg)? {
        Hfe::Finite(a) => Ok(a),
        Hfe::Intervals(iu) => iu
            .to_thfe()
            .ok_or_else(|| HfeError::parse(arg, "expected a finite set of grades")),
    }
}

fn compare(fmt: &Formatter, order: OrderKind, a: &Hfe, b: &Hfe) -> Result<String> {
    let comparison = match (a, b) {
        (Hfe::Finite(a), Hfe::Finite(b)) => order.compare(a, b),
        _ => {
            let lift = |h: &Hfe| match h {
                Hfe::Finite(a) => IntervalUnionHfe::from(a),
                Hfe::Intervals(iu) => iu.clone(),
            };
            order.compare_interval(&lift(a), &lift(b))?
        }
    };
    let leq = matches!(
        comparison,
        crate::orders::Comparison::Leq | crate::orders::Comparison::Equal
    );
    let geq = matches!(
        comparison,
        crate::orders::Comparison::Geq | crate::orders::Comparison::Equal
    );
    Ok(match fmt.out {
        OutputFormat::Table => format!("leq={leq} geq={geq} verdict={comparison}\n"),
        OutputFormat::Csv => format!("order,leq,geq,verdict\n{order},{leq},{geq},{comparison}\n"),
        OutputFormat::Json => fmt.json(json!({
            "order": order.to_string(),
            "leq": leq,
            "geq": geq,
            "verdict": comparison.to_string(),
        })),
    })
}

fn set_json(fmt: &Formatter, a: &Thfe) -> Value {
    Value::Array(a.grades().iter().map(|g| fmt.exact(&g.to_big())).collect())
}

fn lattice(fmt: &Formatter, op: LatticeOp, a: &Thfe, b: &Thfe) -> Result<String> {
    let (name, result) = match op {
        LatticeOp::Meet => ("meet", meet0(a, b)),
        LatticeOp::Join => ("join", join0(a, b)),
    };
    Ok(match fmt.out {
        OutputFormat::Table => format!("{result}\n"),
        OutputFormat::Csv => {
            let cells: Vec<String> = result.grades().iter().map(Grade::to_string).collect();
            format!("grade\n{}\n", cells.join("\n"))
        }
        OutputFormat::Json => fmt.json(json!({ "op": name, "result": set_json(fmt, &result) })),
    })
}

fn score_cmd(fmt: &Formatter, kind: ScoreKind, a: &Thfe) -> Result<String> {
    let value = score(kind, a);
    Ok(match fmt.out {
        OutputFormat::Table => format!("{}\n", fmt.score_text(&value)),
        OutputFormat::Csv => format!("score,value\n{kind},{}\n", fmt.score_text(&value)),
        OutputFormat::Json => {
            fmt.json(json!({ "score": kind.to_string(), "value": fmt.score_json(&value) }))
        }
    })
}

fn require_family_budget(grid: &Grid) -> Result<()> {
    if grid.len() > FAMILY_MAX_POINTS {
        return Err(HfeError::OracleBudget(format!(
            "grid has {} points, limit is {FAMILY_MAX_POINTS}",
            grid.len()
        )));
    }
    Ok(())
}

fn check(
    fmt: &Formatter,
    property: &str,
    score_name: &str,
    interval_score: &str,
    grid: &Grid,
) -> Result<String> {
    let property = property.to_ascii_lowercase();
    if property == "suite" {
        return check_suite(fmt, score_name.parse()?, grid);
    }
    let report = match property.as_str() {
        "smu" | "wmu" => {
            require_family_budget(grid)?;
            let family = grid.nonempty_subsets();
            let pairs: Vec<(Thfe, Thfe)> = family
                .iter()
                .flat_map(|x| {
                    family
                        .iter()
                        .filter(|y| x.sup() < y.inf())
                        .map(move |y| (x.clone(), y.clone()))
                })
                .collect();
            let kind: ScoreKind = score_name.parse()?;
            if property == "smu" {
                check_smu(&kind, &pairs)?
            } else {
                check_wmu(&kind, &pairs)?
            }
        }
        "g" | "wg" => {
            require_family_budget(grid)?;
            let sample: Vec<(Thfe, Grade)> = grid
                .nonempty_subsets()
                .into_iter()
                .flat_map(|a| grid.points().iter().map(move |x| (a.clone(), *x)))
                .collect();
            let kind: ScoreKind = score_name.parse()?;
            check_gardenfors(&kind, &sample, property == "g")
        }
        "em" => {
            let kind: IntervalScoreKind = interval_score.parse()?;
            let points = grid.points();
            let intervals: Vec<ClosedInterval> = points
                .iter()
                .enumerate()
                .flat_map(|(i, lo)| {
                    points[i..]
                        .iter()
                        .map(move |hi| ClosedInterval::new(*lo, *hi))
                })
                .collect::<Result<_>>()?;
            let pairs: Vec<(ClosedInterval, ClosedInterval)> = intervals
                .iter()
                .enumerate()
                .flat_map(|(i, p)| intervals[i + 1..].iter().map(move |q| (*p, *q)))
                .collect();
            check_em(&kind, &pairs)
        }
        other => return Err(HfeError::parse(other, "unknown property")),
    };
    Ok(property_document(fmt, &report))
}

fn property_document(fmt: &Formatter, report: &PropertyReport) -> String {
    let counterexample = report.counterexample.as_ref().map(|c| c.to_string());
    match fmt.out {
        OutputFormat::Table => {
            let mut text = format!(
                "property={} holds={} checked={}\n",
                report.property, report.holds_on_sample, report.checked
            );
            if let Some(c) = &counterexample {
                let _ = writeln!(text, "counterexample: {c}");
            }
            text
        }
        OutputFormat::Csv => format!(
            "property,holds,checked,counterexample\n{},{},{},\"{}\"\n",
            report.property,
            report.holds_on_sample,
            report.checked,
            counterexample.unwrap_or_default()
        ),
        OutputFormat::Json => fmt.json(json!({
            "property": report.property.to_string(),
            "holds": report.holds_on_sample,
            "checked": report.checked,
            "counterexample": counterexample,
        })),
    }
}

fn check_suite(fmt: &Formatter, kind: ScoreKind, grid: &Grid) -> Result<String> {
    let r = closed_family_equivalence_suite(&kind, grid)?;
    let verdicts = [
        ("wmu", r.wmu),
        ("monotone", r.monotone),
        ("wg", r.wg),
        ("smu", r.smu),
        ("strictly_monotone", r.strictly_monotone),
        ("g", r.g),
        ("consistent", r.consistent()),
    ];
    Ok(match fmt.out {
        OutputFormat::Table => {
            let mut text = format!("score={kind} family={}\n", r.family_size);
            for (name, v) in verdicts {
                let _ = writeln!(text, "{name}={v}");
            }
            text
        }
        OutputFormat::Csv => {
            let names: Vec<&str> = verdicts.iter().map(|v| v.0).collect();
            let values: Vec<String> = verdicts.iter().map(|v| v.1.to_string()).collect();
            format!(
                "score,family,{}\n{kind},{},{}\n",
                names.join(","),
                r.family_size,
                values.join(",")
            )
        }
        OutputFormat::Json => {
            let mut doc = serde_json::Map::new();
            doc.insert("score".into(), json!(kind.to_string()));
            doc.insert("family".into(), json!(r.family_size));
            for (name, v) in verdicts {
                doc.insert(name.into(), json!(v));
            }
            fmt.json(Value::Object(doc))
        }
    })
}

fn dominance_cmd(
    fmt: &Formatter,
    kind: DominanceKind,
    control: &Thfe,
    y: &Thfe,
    matrix: bool,
) -> Result<String> {
    let value = dominance(kind, control, y);
    let m = matrix.then(|| kernel_matrix(kind, control, y));
    Ok(match fmt.out {
        OutputFormat::Table => {
            let mut text = format!("{}\n", fmt.decimal(&value));
            if let Some(m) = &m {
                for row in &m.entries {
                    let cells: Vec<String> = row.iter().map(|v| fmt.decimal(v)).collect();
                    let _ = writeln!(text, "{}", cells.join("\t"));
                }
            }
            text
        }
        OutputFormat::Csv => match &m {
            Some(m) => csv_matrix(fmt, &m.entries),
            None => format!("kind,value\n{kind},{}\n", fmt.decimal(&value)),
        },
        OutputFormat::Json => {
            let mut doc = json!({ "kind": kind.to_string(), "value": fmt.exact(&value) });
            if let Some(m) = &m {
                doc["matrix"] = matrix_json(fmt, &m.entries);
            }
            fmt.json(doc)
        }
    })
}

fn csv_matrix(fmt: &Formatter, rows: &[Vec<BigRational>]) -> String {
    let mut text = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| fmt.decimal(v)).collect();
        let _ = writeln!(text, "{}", cells.join(","));
    }
    text
}

fn matrix_json(fmt: &Formatter, rows: &[Vec<BigRational>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| Value::Array(row.iter().map(|v| fmt.exact(v)).collect()))
            .collect(),
    )
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AlternativesDocument {
    Plain(Vec<Thfe>),
    Named { alternatives: Vec<NamedAlternative> },
}

#[derive(Deserialize)]
struct NamedAlternative {
    id: String,
    hfe: Thfe,
}

fn prefmatrix(fmt: &Formatter, kind: DominanceKind, arg: &str) -> Result<String> {
    let document: AlternativesDocument = from_value(read_document(arg)?, arg)?;
    let (ids, sets): (Vec<String>, Vec<Thfe>) = match document {
        AlternativesDocument::Plain(sets) => sets
            .into_iter()
            .enumerate()
            .map(|(i, a)| (format!("A{}", i + 1), a))
            .unzip(),
        AlternativesDocument::Named { alternatives } => {
            alternatives.into_iter().map(|a| (a.id, a.hfe)).unzip()
        }
    };
    let matrix = preference_matrix(kind, &sets)?;
    Ok(match fmt.out {
        OutputFormat::Table => {
            let mut text = format!("\t{}\n", ids.join("\t"));
            for (id, row) in ids.iter().zip(matrix.rows()) {
                let cells: Vec<String> = row.iter().map(|v| fmt.decimal(v)).collect();
                let _ = writeln!(text, "{id}\t{}", cells.join("\t"));
            }
            text
        }
        OutputFormat::Csv => {
            let mut text = format!("id,{}\n", ids.join(","));
            for (id, row) in ids.iter().zip(matrix.rows()) {
                let cells: Vec<String> = row.iter().map(|v| fmt.decimal(v)).collect();
                let _ = writeln!(text, "{id},{}", cells.join(","));
            }
            text
        }
        OutputFormat::Json => fmt.json(json!({
            "kind": kind.to_string(),
            "ids": ids,
            "matrix": matrix_json(fmt, matrix.rows()),
        })),
    })
}

fn evaluate_cmd(fmt: &Formatter, kind: Option<&str>, arg: &str) -> Result<String> {
    let config: EvaluationConfig = from_value(read_document(arg)?, arg)?;
    config.validate()?;
    let kind = match kind {
        Some(k) => k.parse()?,
        None => config.kind.ok_or_else(|| {
            HfeError::Config("no dominance kind given on the command line or in the config".into())
        })?,
    };
    let report = evaluate_with(&config, kind, &Mean)?;
    Ok(ranking_document(fmt, &report))
}

fn ranking_document(fmt: &Formatter, report: &RankingReport) -> String {
    let kind = report.kind.to_string().to_uppercase();
    match fmt.out {
        OutputFormat::Table => {
            let mut text = String::new();
            let headers: Vec<String> = report
                .criteria
                .iter()
                .map(|c| format!("{kind} ({c})"))
                .collect();
            let _ = writeln!(text, "Alternative\t{}", headers.join("\t"));
            let mut by_id: Vec<_> = report.rows.iter().collect();
            by_id.sort_by(|a, b| a.id.cmp(&b.id));
            for row in by_id {
                let cells: Vec<String> = row.values.iter().map(|v| fmt.decimal(v)).collect();
                let _ = writeln!(text, "{}\t{}", row.id, cells.join("\t"));
            }
            let _ = writeln!(text);
            let _ = writeln!(text, "Rank ({kind})\tAlternative\tAverage ({kind})");
            for row in &report.rows {
                let tie = if row.tied {
                    "\t(tie, ordered by id)"
                } else {
                    ""
                };
                let _ = writeln!(
                    text,
                    "{}\t{}\t{}{tie}",
                    row.rank,
                    row.id,
                    fmt.decimal(&row.aggregate)
                );
            }
            text
        }
        OutputFormat::Csv => {
            let mut text = format!(
                "rank,id,{},{},tied\n",
                report.criteria.join(","),
                report.aggregation
            );
            for row in &report.rows {
                let cells: Vec<String> = row.values.iter().map(|v| fmt.decimal(v)).collect();
                let _ = writeln!(
                    text,
                    "{},{},{},{},{}",
                    row.rank,
                    row.id,
                    cells.join(","),
                    fmt.decimal(&row.aggregate),
                    row.tied
                );
            }
            text
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|row| {
                    let values: serde_json::Map<String, Value> = report
                        .criteria
                        .iter()
                        .zip(&row.values)
                        .map(|(c, v)| (c.clone(), fmt.exact(v)))
                        .collect();
                    json!({
                        "rank": row.rank,
                        "id": row.id,
                        "values": values,
                        "aggregate": fmt.exact(&row.aggregate),
                        "tied": row.tied,
                    })
                })
                .collect();
            fmt.json(json!({
                "kind": report.kind.to_string(),
                "aggregation": report.aggregation,
                "criteria": report.criteria,
                "ranking": rows,
            }))
        }
    }
}
