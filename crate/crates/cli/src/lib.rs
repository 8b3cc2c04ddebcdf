//! Command-line front end for `arithmat`.
//!
//! Every subcommand reads one JSON file and exits with 0 when all checks pass,
//! 1 when a checked identity or axiom fails (witnesses on stdout) and 2 on
//! input errors (message on stderr).

pub mod input;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use arithmat::geomsl::{roundtrip_semilattice, roundtrip_semimatroid};
use arithmat::subset::format_set;
use arithmat::zmatroid::check_purity;
use arithmat::{
    check_duality, check_zmatroid, complete_square, Error, FinitePoset, QuotientData, Report,
    Subset, ZMatroid, MAX_GROUND,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use input::Input;

#[derive(Parser, Debug)]
#[command(name = "arithmat", version, about = "Arithmetic matroids, semimatroids and toric arrangements")]
struct Cli {
    /// Output format.
    #[arg(long, short, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Print extra detail.
    #[arg(long, short, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Axiom report for a semimatroid, quotient or poset.
    Validate { input: PathBuf },
    /// Tutte polynomial of an arrangement or quotient.
    Tutte { input: PathBuf },
    /// Characteristic polynomial of a poset, of the layers of an arrangement,
    /// or of the layers attached to a quotient.
    Charpoly { input: PathBuf },
    /// Layer poset of a periodic arrangement.
    Layers { input: PathBuf },
    /// Arithmetic axioms of a quotient.
    Arithcheck { input: PathBuf },
    /// Deletion and contraction of one element.
    Delcon {
        input: PathBuf,
        #[arg(long, short)]
        element: String,
    },
    /// Basis-activity decomposition of the Tutte polynomial.
    Crapo {
        input: PathBuf,
        /// Comma-separated total order on the ground set.
        #[arg(long)]
        order: Option<String>,
    },
    /// Round trip between simple semimatroids and geometric semilattices.
    Crypto { input: PathBuf },
    /// Modules of the matroid over Z attached to an integer matrix.
    Zmatroid { input: PathBuf },
    /// Duality between the matroid over Z and the arrangement's arithmetic matroid.
    Duality { input: PathBuf },
    /// Fill the unknown arrows of a square and test each filling.
    Square { input: PathBuf },
}

enum Failure {
    /// A checked property failed; the report is already on stdout.
    Check,
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Input(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Errors from a computation whose precondition is part of what is checked.
fn checked(e: Error, out: &mut String) -> Failure {
    match e {
        Error::Precondition(_) | Error::InexactDivision(_) | Error::AxiomViolation { .. } => {
            let _ = writeln!(out, "{e}");
            Failure::Check
        }
        other => other.into(),
    }
}

/// Runs the command line `argv` (including the program name), writing to the
/// process's stdout and stderr, and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    run_with(argv, &mut out, &mut err)
}

pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
            } else {
                let _ = write!(stdout, "{}", e.render());
            }
            return code;
        }
    };
    let mut out = String::new();
    let result = dispatch(&cli, &mut out);
    let _ = stdout.write_all(out.as_bytes());
    match result {
        Ok(()) => 0,
        Err(Failure::Check) => 1,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

fn ground_cap() -> Result<usize, String> {
    match std::env::var("TT_MAX_GROUND") {
        Err(_) => Ok(MAX_GROUND),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n <= MAX_GROUND => Ok(n),
            _ => Err(format!("TT_MAX_GROUND must be an integer between 0 and {MAX_GROUND}, got {v:?}")),
        },
    }
}

fn load(path: &PathBuf) -> Result<Input, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let parsed = input::parse(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let cap = ground_cap()?;
    let n = match &parsed {
        Input::Semimatroid(s) | Input::Quotient(s) => s.ground.len(),
        Input::Arrangement(a) => a.columns.len(),
        Input::Poset(p) => p.elements.len().min(MAX_GROUND),
        Input::Diagram(_) => 0,
    };
    input::check_ground_cap(n, cap)?;
    Ok(parsed)
}

fn wrong_kind(cmd: &str, got: &Input, expected: &str) -> Failure {
    Failure::Input(format!("{cmd} expects {expected}, got a {}", got.kind()))
}

fn emit_json(out: &mut String, v: &Value) {
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn report_json(r: &Report) -> Value {
    Value::Array(
        r.violations
            .iter()
            .map(|v| json!({"axiom": v.axiom, "witness": v.witness}))
            .collect(),
    )
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn dispatch(cli: &Cli, out: &mut String) -> Outcome {
    let fmt = cli.format;
    if fmt == Format::Dot && !matches!(cli.command, Command::Layers { .. } | Command::Charpoly { .. }) {
        return Err(Failure::Input("dot output is available for layers and charpoly only".into()));
    }
    match &cli.command {
        Command::Validate { input } => validate(&load(input)?, fmt, out),
        Command::Tutte { input } => tutte(&load(input)?, fmt, out),
        Command::Charpoly { input } => charpoly(&load(input)?, fmt, out),
        Command::Layers { input } => layers(&load(input)?, fmt, out),
        Command::Arithcheck { input } => arithcheck(&load(input)?, fmt, cli.verbose, out),
        Command::Delcon { input, element } => delcon(&load(input)?, element, fmt, out),
        Command::Crapo { input, order } => crapo(&load(input)?, order.as_deref(), fmt, out),
        Command::Crypto { input } => crypto(&load(input)?, fmt, out),
        Command::Zmatroid { input } => zmatroid(&load(input)?, fmt, out),
        Command::Duality { input } => duality(&load(input)?, fmt, out),
        Command::Square { input } => square(&load(input)?, fmt, out),
    }
}

fn quotient_of(inp: &Input, cmd: &str) -> Result<QuotientData, Failure> {
    match inp {
        Input::Quotient(s) => Ok(input::quotient(s)?),
        // a plain semimatroid is read with multiplicity one everywhere
        Input::Semimatroid(s) => Ok(QuotientData::trivial(input::triple(s)?)),
        other => Err(wrong_kind(cmd, other, "a quotient or semimatroid")),
    }
}

fn validate(inp: &Input, fmt: Format, out: &mut String) -> Outcome {
    let report = match inp {
        Input::Semimatroid(s) => input::triple(s)?.validate(),
        Input::Quotient(s) => input::quotient(s)?.check_axioms().report,
        Input::Poset(p) => {
            let p = input::poset(p)?;
            if p.top().is_some() {
                p.check_geometric_lattice()
            } else {
                p.check_geometric_semilattice()
            }
        }
        other => return Err(wrong_kind("validate", other, "a semimatroid, quotient or poset")),
    };
    match fmt {
        Format::Json => emit_json(out, &json!({"kind": inp.kind(), "ok": report.is_ok(), "violations": report_json(&report)})),
        _ => {
            let _ = writeln!(out, "{report}");
        }
    }
    verdict(report.is_ok())
}

fn tutte(inp: &Input, fmt: Format, out: &mut String) -> Outcome {
    let poly = match inp {
        Input::Quotient(s) => input::quotient(s)?.g_tutte(),
        Input::Semimatroid(s) => input::triple(s)?.tutte(),
        Input::Arrangement(a) => input::arrangement(a)?.quotient_data()?.g_tutte(),
        other => return Err(wrong_kind("tutte", other, "an arrangement, quotient or semimatroid")),
    };
    match fmt {
        Format::Json => emit_json(out, &json!({"tutte": poly.to_string()})),
        _ => {
            let _ = writeln!(out, "{poly}");
        }
    }
    Ok(())
}

fn charpoly(inp: &Input, fmt: Format, out: &mut String) -> Outcome {
    let (poset, chi, cp) = match inp {
        Input::Poset(p) => {
            let p = input::poset(p)?;
            let chi = p.char_poly(None)?;
            (p, chi, None)
        }
        Input::Quotient(s) => {
            let q = input::quotient(s)?;
            let layers = q.layers().ok_or(Error::MissingLayers)?;
            let chi = q.layer_char_poly()?;
            let cp = q.check_theorem_cp_data().map_err(|e| checked(e, out))?;
            (layers.poset.clone(), chi, Some(cp))
        }
        Input::Arrangement(a) => {
            let arr = input::arrangement(a)?;
            let chi = arr.char_poly()?;
            let cp = if arr.has_loops() { None } else { Some(arr.check_theorem_cp()?) };
            (arr.layer_poset()?.poset, chi, cp)
        }
        other => return Err(wrong_kind("charpoly", other, "a poset, arrangement or quotient with layers")),
    };
    match fmt {
        Format::Json => {
            let mut v = json!({"charpoly": chi.to_string()});
            if let Some(cp) = cp {
                v["cp_identity"] = json!(cp);
            }
            emit_json(out, &v);
        }
        Format::Dot => out.push_str(&poset.to_dot("poset", None)),
        Format::Text => {
            let _ = writeln!(out, "{chi}");
            if let Some(cp) = cp {
                let _ = writeln!(out, "chi(t) = (-1)^r T(1-t, 0): {}", if cp { "holds" } else { "fails" });
            }
        }
    }
    verdict(cp != Some(false))
}

fn layers(inp: &Input, fmt: Format, out: &mut String) -> Outcome {
    let Input::Arrangement(a) = inp else {
        return Err(wrong_kind("layers", inp, "an arrangement"));
    };
    let arr = input::arrangement(a)?;
    let lp = arr.layer_poset()?;
    let labels = arr.labels();
    let id = |i: usize| format!("L{i}");
    let coset = |i: usize| {
        let c: Vec<String> = lp.layers[i].coset.iter().map(|v| v.to_string()).collect();
        format!("({})", c.join(","))
    };
    match fmt {
        Format::Json => {
            let elements: Vec<Value> = lp
                .layers
                .iter()
                .enumerate()
                .map(|(i, l)| {
                    json!({
                        "id": id(i),
                        "rank": l.rank,
                        "support": l.support.iter().map(|e| labels[e].clone()).collect::<Vec<_>>(),
                        "coset": l.coset.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let covers: Vec<Value> = lp.poset.cover_pairs().into_iter().map(|(x, y)| json!([id(x), id(y)])).collect();
            emit_json(out, &json!({"elements": elements, "covers": covers}));
        }
        Format::Dot => {
            let label = |i: usize| format!("{} | {} | {}", id(i), format_set(labels, lp.layers[i].support), coset(i));
            out.push_str(&lp.poset.to_dot("layers", Some(&label)));
        }
        Format::Text => {
            for (i, l) in lp.layers.iter().enumerate() {
                let _ = writeln!(out, "{} rank {} support {} coset {}", id(i), l.rank, format_set(labels, l.support), coset(i));
            }
            for (x, y) in lp.poset.cover_pairs() {
                let _ = writeln!(out, "{} < {}", id(x), id(y));
            }
        }
    }
    Ok(())
}

fn arithcheck(inp: &Input, fmt: Format, verbose: u8, out: &mut String) -> Outcome {
    let q = quotient_of(inp, "arithcheck")?;
    let rep = q.check_axioms();
    let flags = [
        ("locally ranked", rep.locally_ranked),
        ("semimatroid", rep.semimatroid),
        ("matroid", rep.matroid),
        ("P", rep.p),
        ("A.1.1", rep.a11),
        ("A.1.2", rep.a12),
        ("A2", rep.a2),
    ];
    match fmt {
        Format::Json => {
            let mut v = json!({"classification": rep.classification(), "violations": report_json(&rep.report)});
            for (name, ok) in flags {
                v[name] = json!(ok);
            }
            emit_json(out, &v);
        }
        _ => {
            let _ = writeln!(out, "classification: {}", rep.classification());
            if verbose > 0 {
                for (name, ok) in flags {
                    let _ = writeln!(out, "{name}: {}", if ok { "yes" } else { "no" });
                }
            }
            if !rep.report.is_ok() {
                let _ = writeln!(out, "{}", rep.report);
            }
        }
    }
    verdict(rep.all_pass())
}

fn delcon(inp: &Input, element: &str, fmt: Format, out: &mut String) -> Outcome {
    let q = quotient_of(inp, "delcon")?;
    let c = q.check_del_con(element)?;
    let case = format!("{:?}", c.case).to_lowercase();
    match fmt {
        Format::Json => emit_json(
            out,
            &json!({
                "element": element,
                "case": case,
                "tutte": c.tutte.to_string(),
                "deletion": c.deletion.to_string(),
                "contraction": c.contraction.to_string(),
                "combined": c.combined.to_string(),
                "holds": c.holds,
            }),
        ),
        _ => {
            let _ = writeln!(out, "case: {case}");
            let _ = writeln!(out, "T = {}", c.tutte);
            let _ = writeln!(out, "T(delete {element}) = {}", c.deletion);
            let _ = writeln!(out, "T(contract {element}) = {}", c.contraction);
            let _ = writeln!(out, "identity: {}", if c.holds { "holds" } else { "fails" });
        }
    }
    verdict(c.holds)
}

fn crapo(inp: &Input, order: Option<&str>, fmt: Format, out: &mut String) -> Outcome {
    let q = quotient_of(inp, "crapo")?;
    let order: Option<Vec<usize>> = match order {
        None => None,
        Some(s) => Some(
            s.split(',')
                .map(|l| {
                    q.triple()
                        .index_of(l.trim())
                        .ok_or_else(|| Failure::Input(format!("unknown element {l:?} in --order")))
                })
                .collect::<Result<_, _>>()?,
        ),
    };
    let dec = q.crapo_decomposition(order.as_deref()).map_err(|e| checked(e, out))?;
    let tutte = q.g_tutte();
    let ok = dec == tutte;
    match fmt {
        Format::Json => emit_json(
            out,
            &json!({"decomposition": dec.to_string(), "tutte": tutte.to_string(), "equal": ok}),
        ),
        _ => {
            let _ = writeln!(out, "decomposition: {dec}");
            let _ = writeln!(out, "tutte: {tutte}");
            let _ = writeln!(out, "equal: {}", if ok { "yes" } else { "no" });
        }
    }
    verdict(ok)
}

fn crypto(inp: &Input, fmt: Format, out: &mut String) -> Outcome {
    let (kind, pairs) = match inp {
        Input::Semimatroid(s) => {
            let t = input::triple(s)?;
            let map = roundtrip_semimatroid(&t).map_err(|e| checked(e, out))?;
            let pairs: Vec<(String, String)> =
                map.iter().enumerate().map(|(e, &img)| (t.labels()[e].clone(), format!("atom {img}"))).collect();
            ("semimatroid", pairs)
        }
        Input::Poset(p) => {
            let p: FinitePoset = input::poset(p)?;
            let map = roundtrip_semilattice(&p).map_err(|e| checked(e, out))?;
            let pairs: Vec<(String, String)> =
                map.iter().enumerate().map(|(x, &img)| (p.label(x).to_string(), format!("flat {img}"))).collect();
            ("poset", pairs)
        }
        other => return Err(wrong_kind("crypto", other, "a semimatroid or poset")),
    };
    match fmt {
        Format::Json => emit_json(
            out,
            &json!({"kind": kind, "isomorphism": true, "map": pairs.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>()}),
        ),
        _ => {
            let _ = writeln!(out, "round trip: verified isomorphism");
            for (a, b) in pairs {
                let _ = writeln!(out, "{a} -> {b}");
            }
        }
    }
    Ok(())
}

fn matrix_of(inp: &Input, cmd: &str) -> Result<arithmat::IntMatrix, Failure> {
    match inp {
        Input::Arrangement(a) => Ok(input::arrangement_matrix(a)?),
        other => Err(wrong_kind(cmd, other, "an arrangement (only its columns are used)")),
    }
}

fn zmatroid(inp: &Input, fmt: Format, out: &mut String) -> Outcome {
    let m = matrix_of(inp, "zmatroid")?;
    let z = ZMatroid::from_matrix(&m)?;
    let report = check_zmatroid(&z);
    let pure = check_purity(&m)?;
    let mut sets: Vec<Subset> = Subset::full(z.n()).subsets().collect();
    sets.sort_by_key(|s| (s.len(), s.bits()));
    match fmt {
        Format::Json => {
            let modules: Vec<Value> = sets
                .iter()
                .map(|&s| json!({"set": s.iter().map(|e| z.labels()[e].clone()).collect::<Vec<_>>(), "module": z.module_of(s).to_string()}))
                .collect();
            emit_json(out, &json!({"modules": modules, "ok": report.is_ok(), "pure": pure, "violations": report_json(&report)}));
        }
        _ => {
            for s in sets {
                let _ = writeln!(out, "{} {}", format_set(z.labels(), s), z.module_of(s));
            }
            let _ = writeln!(out, "matroid over Z: {report}");
            let _ = writeln!(out, "purity: {}", if pure { "holds" } else { "fails" });
        }
    }
    verdict(report.is_ok() && pure)
}

fn duality(inp: &Input, fmt: Format, out: &mut String) -> Outcome {
    let m = matrix_of(inp, "duality")?;
    let ok = check_duality(&m)?;
    match fmt {
        Format::Json => emit_json(out, &json!({"duality": ok})),
        _ => {
            let _ = writeln!(out, "duality: {}", if ok { "holds" } else { "fails" });
        }
    }
    verdict(ok)
}

fn square(inp: &Input, fmt: Format, out: &mut String) -> Outcome {
    let Input::Diagram(d) = inp else {
        return Err(wrong_kind("square", inp, "a diagram"));
    };
    let sq = input::diagram(d)?;
    let rep = complete_square(&sq)?;
    let rows = |g: &arithmat::GroupMap| -> Vec<Vec<String>> {
        let m = g.matrix();
        (0..m.rows()).map(|i| m.row(i).iter().map(|v| v.to_string()).collect()).collect()
    };
    match fmt {
        Format::Json => {
            let completions: Vec<Value> = rep
                .completions
                .iter()
                .map(|c| {
                    json!({
                        "top": rows(&c.top), "left": rows(&c.left), "right": rows(&c.right), "bottom": rows(&c.bottom),
                        "commutes": c.commutes, "pushout": c.pushout,
                    })
                })
                .collect();
            emit_json(out, &json!({"completions": completions, "satisfiable": rep.satisfiable()}));
        }
        _ => {
            let _ = writeln!(out, "{} candidate filling(s)", rep.completions.len());
            for (i, c) in rep.completions.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "#{} top {:?} left {:?} right {:?} bottom {:?}: commutes {}, pushout {}",
                    i + 1,
                    rows(&c.top),
                    rows(&c.left),
                    rows(&c.right),
                    rows(&c.bottom),
                    if c.commutes { "yes" } else { "no" },
                    if c.pushout { "yes" } else { "no" }
                );
            }
            let _ = writeln!(out, "satisfiable: {}", if rep.satisfiable() { "yes" } else { "no" });
        }
    }
    verdict(rep.satisfiable())
}
