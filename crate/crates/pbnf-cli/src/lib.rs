//! Command-line surface: parse, transform, decide, pull back, tabulate, and
//! inspect the operator space, with text and line-delimited JSON output.
//!
//! Exit codes: 0 on success, 2 on usage or parse errors; with `--check`, the
//! decision subcommands (`taut`, `contra`, `equiv`, `entails`) exit 1 when
//! the verdict is negative.

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use pbnf_core::boolmat::{classify_boolean_matrices, selector_generation, Mat2};
use pbnf_core::calculus::{conjugates, decide, entails, equivalent, VerdictKind};
use pbnf_core::families::{atomic_table, fiber, transform, Family, Fiber};
use pbnf_core::formula::Formula;
use pbnf_core::gf2poly::Polynomial;
use pbnf_core::opspace::{
    binary_descriptor, dual_of, find_binary, op_on_selectors, selector_add, vector_of_formula,
    Selector, SelectorSum,
};
use pbnf_core::oracle;

const DEFAULT_MAX_LETTERS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "pbnf",
    version,
    about = "Propositional calculus over multilinear GF(2) polynomials",
    max_term_width = 100
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Exit 1 when a decision subcommand's verdict is negative.
    #[arg(long, global = true)]
    check: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FamilyArg {
    /// Family spec: g(p',q',0)-style or one of
    /// normal|complement|pullback|pullback-complement.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a formula to its canonical polynomial in a family.
    Anf {
        formula: String,
        #[command(flatten)]
        family: FamilyArg,
    },
    /// Decide whether a formula is a tautology.
    Taut {
        formula: String,
        #[command(flatten)]
        family: FamilyArg,
    },
    /// Decide whether a formula is a contradiction.
    Contra {
        formula: String,
        #[command(flatten)]
        family: FamilyArg,
    },
    /// Test two formulas for logical equivalence.
    Equiv { left: String, right: String },
    /// Test whether the first formula entails the second.
    Entails { antecedent: String, consequent: String },
    /// Pull a polynomial back to the operator with its truth vector.
    Pullback {
        polynomial: String,
        #[command(flatten)]
        family: FamilyArg,
        /// Comma-separated letter context (default: first occurrence in the
        /// polynomial text).
        #[arg(long)]
        letters: Option<String>,
    },
    /// Render a formula's disjunctive normal form from its truth vector.
    Dbnf {
        formula: String,
        /// Comma-separated letter order (default: first occurrence).
        #[arg(long)]
        letters: Option<String>,
    },
    /// Print a formula's full truth table.
    Tt {
        formula: String,
        /// Comma-separated letter order (default: first occurrence).
        #[arg(long)]
        letters: Option<String>,
    },
    /// Print the atomic-entry table (all four named families, or one).
    Table {
        #[command(flatten)]
        family: FamilyArg,
    },
    /// Report the four conjugate sentences of an implication.
    Conjugates { formula: String },
    /// Matrix views of the binary operators.
    Matrix {
        /// Show one operator's 2x2 matrix, transpose, determinant, and
        /// idempotency.
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["classify", "generate"])]
        op: Option<String>,
        /// Classify all 16 operators by matrix idempotency.
        #[arg(long, conflicts_with = "generate")]
        classify: bool,
        /// Generate the closure of the left-projection matrix under
        /// transpose, addition, and multiplication.
        #[arg(long)]
        generate: bool,
    },
    /// List the selectors, add two, or apply an operator columnwise.
    Selectors {
        /// Add two selectors: --add p1 q1.
        #[arg(long, num_args = 2, value_names = ["S", "T"], conflicts_with = "apply")]
        add: Option<Vec<String>>,
        /// Apply an operator to two selectors: --apply "->" p3 q2.
        #[arg(long, num_args = 3, value_names = ["OP", "S", "T"], allow_hyphen_values = true)]
        apply: Option<Vec<String>>,
    },
    /// Show the dual of a binary operator.
    Dual {
        #[arg(long, allow_hyphen_values = true)]
        op: String,
    },
}

/// Run the command line; `argv` includes the program name.
pub fn run<I, S, W, E>(argv: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

fn dispatch<W: Write>(cli: &Cli, out: &mut W) -> Result<i32, String> {
    let format = cli.format;
    match &cli.command {
        Command::Anf { formula, family } => {
            let f = parse_formula(formula)?;
            let fam = parse_family(family)?;
            let p = transform(&f, &fam);
            match format {
                Format::Text => writeln_out(out, &p.canonical_text()),
                Format::Json => write_json(
                    out,
                    &json!({
                        "formula": f.to_string(),
                        "family": fam,
                        "polynomial": p,
                        "text": p.canonical_text(),
                    }),
                ),
            }
            Ok(0)
        }
        Command::Taut { formula, family } => {
            let f = parse_formula(formula)?;
            let fam = parse_family(family)?;
            let verdict = decide(&f, &fam);
            print_verdict(out, format, &verdict);
            Ok(check_exit(cli, verdict.kind == VerdictKind::Tautology))
        }
        Command::Contra { formula, family } => {
            let f = parse_formula(formula)?;
            let fam = parse_family(family)?;
            let verdict = decide(&f, &fam);
            print_verdict(out, format, &verdict);
            Ok(check_exit(cli, verdict.kind == VerdictKind::Contradiction))
        }
        Command::Equiv { left, right } => {
            let f = parse_formula(left)?;
            let g = parse_formula(right)?;
            let e = equivalent(&f, &g);
            match format {
                Format::Text => {
                    writeln_out(out, if e.equivalent { "equivalent" } else { "not equivalent" });
                    writeln_out(out, &format!("left: {}", e.left));
                    writeln_out(out, &format!("right: {}", e.right));
                    if !e.equivalent {
                        writeln_out(out, &format!("difference: {}", e.difference));
                    }
                }
                Format::Json => write_json(out, &serde_json::to_value(&e).unwrap()),
            }
            Ok(check_exit(cli, e.equivalent))
        }
        Command::Entails {
            antecedent,
            consequent,
        } => {
            let f = parse_formula(antecedent)?;
            let g = parse_formula(consequent)?;
            let e = entails(&f, &g);
            match format {
                Format::Text => {
                    writeln_out(out, if e.holds { "entails" } else { "does not entail" });
                    writeln_out(out, &format!("certificate: {}", e.certificate));
                    if let Some(countermodel) = &e.countermodel {
                        writeln_out(out, &format!("countermodel: {countermodel}"));
                    }
                }
                Format::Json => write_json(out, &serde_json::to_value(&e).unwrap()),
            }
            Ok(check_exit(cli, e.holds))
        }
        Command::Pullback {
            polynomial,
            family,
            letters,
        } => {
            let (p, occurrence_order) = Polynomial::parse_with_order(polynomial)
                .map_err(|e| e.to_string())?;
            let fam = parse_family(family)?;
            let context = match letters {
                Some(spec) => parse_letters(spec)?,
                None => occurrence_order,
            };
            check_letter_cap(context.len())?;
            let result = fiber(&p, &fam, &context).map_err(|e| e.to_string())?;
            match (&result, format) {
                (Fiber::Operator(d), Format::Text) => writeln_out(out, d.ascii),
                (Fiber::Compound { vector, named }, Format::Text) => {
                    let named = named.map(|op| op.token()).unwrap_or("none");
                    writeln_out(out, &format!("vector {vector}; named {named}"));
                }
                (_, Format::Json) => {
                    let value = match &result {
                        Fiber::Operator(d) => json!({
                            "polynomial": p,
                            "family": fam,
                            "operator": d.ascii,
                            "name": d.name,
                        }),
                        Fiber::Compound { vector, named } => json!({
                            "polynomial": p,
                            "family": fam,
                            "vector": vector,
                            "named": named.map(|op| op.token()),
                        }),
                    };
                    write_json(out, &value);
                }
            }
            Ok(0)
        }
        Command::Dbnf { formula, letters } => {
            let f = parse_formula(formula)?;
            let order = letter_order(&f, letters)?;
            check_letter_cap(order.len())?;
            let tv = vector_of_formula(&f, &order).map_err(|e| e.to_string())?;
            let dbnf = pbnf_core::opspace::dbnf_from_vector(&tv);
            match format {
                Format::Text => {
                    if dbnf.empty {
                        writeln_out(out, &format!("{} (no phrases: all-zero vector)", dbnf.formula));
                    } else {
                        writeln_out(out, &dbnf.formula.to_string());
                    }
                }
                Format::Json => write_json(
                    out,
                    &json!({
                        "formula": f.to_string(),
                        "vector": tv,
                        "dbnf": dbnf.formula.to_string(),
                        "empty": dbnf.empty,
                    }),
                ),
            }
            Ok(0)
        }
        Command::Tt { formula, letters } => {
            let f = parse_formula(formula)?;
            let order = letter_order(&f, letters)?;
            check_letter_cap(order.len())?;
            let table = oracle::truth_table(&f, &order).map_err(|e| e.to_string())?;
            match format {
                Format::Text => {
                    let _ = out.write_all(table.render().as_bytes());
                }
                Format::Json => {
                    let rows: Vec<serde_json::Value> = table
                        .rows
                        .iter()
                        .map(|(a, v)| json!({"assignment": a, "value": u8::from(*v)}))
                        .collect();
                    write_json(out, &json!({"order": table.order, "rows": rows}));
                }
            }
            Ok(0)
        }
        Command::Table { family } => {
            match &family.family {
                Some(_) => {
                    let fam = parse_family(family)?;
                    print_table(out, format, &[fam]);
                }
                None => print_table(out, format, &Family::named()),
            }
            Ok(0)
        }
        Command::Conjugates { formula } => {
            let f = parse_formula(formula)?;
            let report = conjugates(&f).map_err(|e| e.to_string())?;
            for row in &report.rows {
                match format {
                    Format::Text => writeln_out(
                        out,
                        &format!(
                            "{:<14} {}  g(p,q,1): {}  g(p',q',0): {}",
                            row.name, row.formula, row.normal, row.pullback_complement
                        ),
                    ),
                    Format::Json => write_json(
                        out,
                        &json!({
                            "name": row.name,
                            "formula": row.formula.to_string(),
                            "normal": row.normal,
                            "pullbackComplement": row.pullback_complement,
                        }),
                    ),
                }
            }
            Ok(0)
        }
        Command::Matrix { op, classify, generate } => run_matrix(out, format, op, *classify, *generate),
        Command::Selectors { add, apply } => run_selectors(out, format, add, apply),
        Command::Dual { op } => {
            let binary = find_binary(op).ok_or_else(|| format!("unknown binary operator `{op}`"))?;
            let dual = dual_of(binary);
            let d = binary_descriptor(dual);
            match format {
                Format::Text => writeln_out(out, d.ascii),
                Format::Json => write_json(
                    out,
                    &json!({"op": binary_descriptor(binary).ascii, "dual": d.ascii, "name": d.name}),
                ),
            }
            Ok(0)
        }
    }
}

fn parse_formula(text: &str) -> Result<Formula, String> {
    Formula::parse(text).map_err(|e| e.to_string())
}

fn parse_family(arg: &FamilyArg) -> Result<Family, String> {
    match &arg.family {
        None => Ok(Family::normal()),
        Some(spec) => Family::parse(spec).map_err(|e| e.to_string()),
    }
}

fn parse_letters(spec: &str) -> Result<Vec<String>, String> {
    let letters: Vec<String> = spec
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_owned)
        .collect();
    if letters.is_empty() {
        return Err("empty letter list".to_owned());
    }
    Ok(letters)
}

fn letter_order(f: &Formula, letters: &Option<String>) -> Result<Vec<String>, String> {
    match letters {
        Some(spec) => parse_letters(spec),
        None => Ok(f.letters()),
    }
}

fn max_letters() -> usize {
    std::env::var("PBNF_MAX_LETTERS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_LETTERS)
}

fn check_letter_cap(n: usize) -> Result<(), String> {
    let cap = max_letters();
    if n > cap {
        return Err(format!(
            "{n} letters exceed the truth-table cap of {cap}; set PBNF_MAX_LETTERS to raise it"
        ));
    }
    Ok(())
}

fn check_exit(cli: &Cli, positive: bool) -> i32 {
    if cli.check && !positive {
        1
    } else {
        0
    }
}

fn writeln_out<W: Write>(out: &mut W, line: &str) {
    let _ = writeln!(out, "{line}");
}

fn write_json<W: Write>(out: &mut W, value: &serde_json::Value) {
    let _ = writeln!(out, "{value}");
}

fn print_verdict<W: Write>(out: &mut W, format: Format, verdict: &pbnf_core::Verdict) {
    match format {
        Format::Text => {
            let mut line = format!("{}; polynomial {}", verdict.kind, verdict.polynomial);
            if let Some(witness) = &verdict.witness {
                line.push_str(&format!("; witness {witness}"));
            }
            writeln_out(out, &line);
        }
        Format::Json => write_json(out, &serde_json::to_value(verdict).unwrap()),
    }
}

fn print_table<W: Write>(out: &mut W, format: Format, families: &[Family]) {
    let tables: Vec<_> = families.iter().map(atomic_table).collect();
    match format {
        Format::Text => {
            let mut headers = vec!["op".to_owned()];
            headers.extend(families.iter().map(|f| f.to_string()));
            let mut rows: Vec<Vec<String>> = vec![headers];
            for i in 0..tables[0].len() {
                let mut row = vec![tables[0][i].label.to_owned()];
                for table in &tables {
                    row.push(table[i].polynomial.to_string());
                }
                rows.push(row);
            }
            let widths: Vec<usize> = (0..rows[0].len())
                .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap())
                .collect();
            for row in rows {
                let mut line = String::new();
                for (cell, width) in row.iter().zip(&widths) {
                    line.push_str(cell);
                    for _ in 0..width - cell.len() + 2 {
                        line.push(' ');
                    }
                }
                writeln_out(out, line.trim_end());
            }
        }
        Format::Json => {
            for i in 0..tables[0].len() {
                let mut value = serde_json::Map::new();
                value.insert("op".to_owned(), json!(tables[0][i].label));
                let columns: Vec<serde_json::Value> = families
                    .iter()
                    .zip(&tables)
                    .map(|(fam, table)| {
                        json!({
                            "family": fam,
                            "polynomial": table[i].polynomial,
                            "text": table[i].polynomial.canonical_text(),
                        })
                    })
                    .collect();
                value.insert("columns".to_owned(), json!(columns));
                write_json(out, &serde_json::Value::Object(value));
            }
        }
    }
}

fn run_matrix<W: Write>(
    out: &mut W,
    format: Format,
    op: &Option<String>,
    classify: bool,
    generate: bool,
) -> Result<i32, String> {
    if let Some(name) = op {
        let binary =
            find_binary(name).ok_or_else(|| format!("unknown binary operator `{name}`"))?;
        let d = binary_descriptor(binary);
        let m = Mat2::of_op(binary);
        match format {
            Format::Text => writeln_out(
                out,
                &format!(
                    "{} {}; transpose {} ({}); det {}; idempotent {}",
                    d.ascii,
                    m,
                    m.transpose(),
                    binary_descriptor(m.transpose().operator()).ascii,
                    u8::from(m.det()),
                    m.is_idempotent()
                ),
            ),
            Format::Json => write_json(
                out,
                &json!({
                    "op": d.ascii,
                    "matrix": m,
                    "transpose": m.transpose(),
                    "transposeOp": binary_descriptor(m.transpose().operator()).ascii,
                    "det": u8::from(m.det()),
                    "idempotent": m.is_idempotent(),
                }),
            ),
        }
        return Ok(0);
    }
    if classify {
        let report = classify_boolean_matrices();
        let ops: Vec<&str> = report
            .boolean
            .iter()
            .map(|op| binary_descriptor(*op).ascii)
            .collect();
        match format {
            Format::Text => {
                writeln_out(out, &format!("boolean (idempotent): {}", ops.join(" ")));
                for (a, b, c) in &report.addition_failures {
                    writeln_out(
                        out,
                        &format!(
                            "addition leaves the set: {} + {} = {}",
                            binary_descriptor(*a).ascii,
                            binary_descriptor(*b).ascii,
                            binary_descriptor(*c).ascii
                        ),
                    );
                }
                for (a, b) in &report.one_sided_mul_failures {
                    writeln_out(
                        out,
                        &format!(
                            "one-sided multiplication fails: {} x {}",
                            binary_descriptor(*a).ascii,
                            binary_descriptor(*b).ascii
                        ),
                    );
                }
            }
            Format::Json => {
                let additions: Vec<serde_json::Value> = report
                    .addition_failures
                    .iter()
                    .map(|(a, b, c)| {
                        json!([
                            binary_descriptor(*a).ascii,
                            binary_descriptor(*b).ascii,
                            binary_descriptor(*c).ascii
                        ])
                    })
                    .collect();
                write_json(
                    out,
                    &json!({
                        "boolean": ops,
                        "additionFailures": additions,
                        "oneSidedMulFailures": report.one_sided_mul_failures.iter()
                            .map(|(a, b)| json!([
                                binary_descriptor(*a).ascii,
                                binary_descriptor(*b).ascii
                            ]))
                            .collect::<Vec<_>>(),
                    }),
                );
            }
        }
        return Ok(0);
    }
    if generate {
        let report = selector_generation();
        match format {
            Format::Text => {
                writeln_out(
                    out,
                    &format!("closure of p under transpose/add/mul: {} matrices", report.closure.len()),
                );
                for (m, op) in &report.closure {
                    writeln_out(out, &format!("{} {}", m, binary_descriptor(*op).ascii));
                }
            }
            Format::Json => {
                let closure: Vec<serde_json::Value> = report
                    .closure
                    .iter()
                    .map(|(m, op)| json!({"matrix": m, "op": binary_descriptor(*op).ascii}))
                    .collect();
                write_json(out, &json!({"closure": closure}));
            }
        }
        return Ok(0);
    }
    Err("matrix requires one of --op, --classify, --generate".to_owned())
}

fn parse_selector(name: &str) -> Result<Selector, String> {
    Selector::parse(name).ok_or_else(|| {
        format!("unknown selector `{name}` (expected one of p1, p2, p3, p4, q1, q2)")
    })
}

fn run_selectors<W: Write>(
    out: &mut W,
    format: Format,
    add: &Option<Vec<String>>,
    apply: &Option<Vec<String>>,
) -> Result<i32, String> {
    if let Some(args) = add {
        let s = parse_selector(&args[0])?;
        let t = parse_selector(&args[1])?;
        let sum_bits = s.bits().xor(&t.bits());
        let sum = selector_add(s, t);
        match format {
            Format::Text => {
                let label = match sum {
                    SelectorSum::Selector(r) => r.name().to_owned(),
                    SelectorSum::Zero | SelectorSum::One => "constant, invalid as selector".to_owned(),
                };
                writeln_out(out, &format!("{} + {} = {} ({})", s, t, sum_bits, label));
            }
            Format::Json => {
                let value = match sum {
                    SelectorSum::Selector(r) => json!({
                        "left": s.name(), "right": t.name(),
                        "bits": sum_bits.to_string(), "selector": r.name(),
                    }),
                    _ => json!({
                        "left": s.name(), "right": t.name(),
                        "bits": sum_bits.to_string(), "selector": null,
                    }),
                };
                write_json(out, &value);
            }
        }
        return Ok(0);
    }
    if let Some(args) = apply {
        let op = find_binary(&args[0])
            .ok_or_else(|| format!("unknown binary operator `{}`", args[0]))?;
        let s = parse_selector(&args[1])?;
        let t = parse_selector(&args[2])?;
        let bits = op_on_selectors(op, s, t);
        let result_op = pbnf_core::opspace::binary_by_bits(&bits).expect("4-bit lookup is total");
        match format {
            Format::Text => writeln_out(
                out,
                &format!(
                    "{} on ({}, {}) = {} ({})",
                    binary_descriptor(op).ascii,
                    s,
                    t,
                    bits,
                    binary_descriptor(result_op).ascii
                ),
            ),
            Format::Json => write_json(
                out,
                &json!({
                    "op": binary_descriptor(op).ascii,
                    "left": s.name(),
                    "right": t.name(),
                    "bits": bits.to_string(),
                    "operator": binary_descriptor(result_op).ascii,
                }),
            ),
        }
        return Ok(0);
    }
    for s in Selector::ALL {
        match format {
            Format::Text => writeln_out(out, &format!("{} {}", s, s.bits())),
            Format::Json => {
                write_json(out, &json!({"selector": s.name(), "bits": s.bits().to_string()}))
            }
        }
    }
    Ok(0)
}
