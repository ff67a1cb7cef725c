//! `split33`: exact computations with (3,3)-split Jacobians from the shell.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use split33::algebra::encode::Encode;
use split33::algebra::expr::eval_expr;
use split33::algebra::{with_prime, Field, Fp, Polynomial, QOmega, QSqrt3, RootFinding, Ring, Q};
use split33::coverings::{both_special_families, generic_cover, special_first, special_second};
use split33::gluing::{prop2_invariants, two_torsion_census};
use split33::hesse::{j_hesse, orbit12, weierstrass_to_hesse, HesseCurve, TwoIsogeny};
use split33::invariants::{absolute_invariants, igusa_clebsch, igusa_from_clebsch, wp_equal, IgusaClebsch};
use split33::worked::appendix_checks;

#[derive(Parser, Debug)]
#[command(name = "split33", version, about = "Genus-2 curves with (3,3)-split Jacobians")]
struct Cli {
    /// Q, Q(w), Q(r3) or Fp:<p>
    #[arg(long, global = true, default_value = "Q(w)")]
    field: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generic complementary coverings of y^2 = P(x) Q(x)
    CoverGeneric {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// First map special: f1 = x^3 / (x^2 + a x + b)
    CoverSpecial1 {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Second map special: f2 = (b x + 3c)^3 / Q(x)
    CoverSpecial2 {
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// Classify pairs of special coverings (over Q[a, b])
    CoverBothSpecial,
    /// Igusa-Clebsch invariants of (E_a x E_b)/Gamma
    Glue {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Expected invariants "I2,I4,I6,I10", compared projectively
        #[arg(long, allow_hyphen_values = true)]
        expect: Option<String>,
    },
    /// j-invariant of the Hesse cubic with parameter a
    HesseJ {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// The twelve Hesse parameters isomorphic to a
    HesseOrbit {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Hesse form of y^2 = x^3 + a x + b
    ToHesse {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// The 2-isogeny with kernel generated by [t : t : 1]
    Isogeny2 {
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// Igusa-Clebsch invariants of y^2 = f(x)
    Invariants {
        /// Coefficients of f from the constant term up, comma separated
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// Expected invariants "I2,I4,I6,I10", compared projectively
        #[arg(long, allow_hyphen_values = true)]
        expect: Option<String>,
    },
    /// Census of the 2-torsion of E_a x E_b modulo p
    Census {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        p: u64,
    },
    /// Check every assertion of the three worked examples
    VerifyAppendix,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::CoverGeneric { .. } => "cover-generic",
            Command::CoverSpecial1 { .. } => "cover-special1",
            Command::CoverSpecial2 { .. } => "cover-special2",
            Command::CoverBothSpecial => "cover-both-special",
            Command::Glue { .. } => "glue",
            Command::HesseJ { .. } => "hesse-j",
            Command::HesseOrbit { .. } => "hesse-orbit",
            Command::ToHesse { .. } => "to-hesse",
            Command::Isogeny2 { .. } => "isogeny2",
            Command::Invariants { .. } => "invariants",
            Command::Census { .. } => "census",
            Command::VerifyAppendix => "verify-appendix",
        }
    }
}

#[derive(Debug)]
enum CliError {
    Parse(String),
    Math(String),
}

impl CliError {
    fn math(e: impl ToString) -> Self {
        CliError::Math(e.to_string())
    }
}

struct Report {
    payload: Value,
    checks: Vec<Value>,
    failed: usize,
}

impl Report {
    fn ok(payload: Value) -> Self {
        Report {
            payload,
            checks: Vec::new(),
            failed: 0,
        }
    }

    fn check(mut self, name: &str, pass: bool, expected: String, actual: String) -> Self {
        if !pass {
            self.failed += 1;
        }
        self.checks.push(json!({
            "name": name,
            "result": if pass { "pass" } else { "fail" },
            "expected": expected,
            "actual": actual,
        }));
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FieldKind {
    Rational,
    Omega,
    Sqrt3,
    Prime(u64),
}

impl FieldKind {
    fn parse(s: &str) -> Result<Self, CliError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match t.as_str() {
            "Q" => Ok(FieldKind::Rational),
            "Q(w)" | "Qw" | "Q(ω)" => Ok(FieldKind::Omega),
            "Q(r3)" | "Qr3" | "Q(√3)" => Ok(FieldKind::Sqrt3),
            _ => {
                let p = t
                    .strip_prefix("Fp:")
                    .or_else(|| t.strip_prefix("F:"))
                    .ok_or_else(|| CliError::Parse(format!("unknown field '{s}'")))?;
                p.parse::<u64>()
                    .map(FieldKind::Prime)
                    .map_err(|_| CliError::Parse(format!("bad prime in '{s}'")))
            }
        }
    }

    fn label(&self) -> String {
        match self {
            FieldKind::Rational => "Q".into(),
            FieldKind::Omega => "Q(w)".into(),
            FieldKind::Sqrt3 => "Q(r3)".into(),
            FieldKind::Prime(p) => format!("Fp:{p}"),
        }
    }
}

fn element<F: Field>(s: &str) -> Result<F, CliError> {
    let lookup = |name: &str| -> Option<F> {
        match name {
            "w" | "ω" => F::cube_root_of_unity(),
            "r3" | "√3" | "sqrt3" => F::from_i64(3).sqrt(),
            _ => None,
        }
    };
    eval_expr(s, &lookup).map_err(|e| CliError::Parse(format!("'{s}': {e}")))
}

fn ic_string<R: Ring + Encode>(ic: &IgusaClebsch<R>) -> String {
    let parts: Vec<String> = ic
        .to_array()
        .iter()
        .map(|x| split33::algebra::encode::render(x))
        .collect();
    format!("[{}]", parts.join(" : "))
}

fn expectation<F: Field + Encode>(report: Report, ic: &IgusaClebsch<F>, expect: &Option<String>) -> Result<Report, CliError> {
    let Some(wanted) = expect else { return Ok(report) };
    let parts = wanted
        .trim_matches(|c| c == '[' || c == ']')
        .split([',', ':'])
        .map(|s| element::<F>(s.trim()))
        .collect::<Result<Vec<F>, _>>()?;
    let want: [F; 4] = parts
        .try_into()
        .map_err(|_| CliError::Parse("--expect needs four invariants".into()))?;
    let want = IgusaClebsch::from_array(want);
    let pass = wp_equal(ic, &want).map_err(CliError::math)?;
    Ok(report.check("weighted projective equality", pass, ic_string(&want), ic_string(ic)))
}

fn invariants_payload<F: Field + Encode>(ic: &IgusaClebsch<F>) -> Value {
    let mut v = ic.to_json();
    let j = igusa_from_clebsch(ic);
    v["igusa"] = json!([j.j2.encode(), j.j4.encode(), j.j6.encode(), j.j8.encode(), j.j10.encode()]);
    v["absolute"] = match absolute_invariants(&j) {
        Ok(a) => json!([a.j1.encode(), a.j2.encode(), a.j3.encode()]),
        Err(_) => Value::Null,
    };
    v
}

fn run_in<F: Field + Encode + RootFinding>(cmd: &Command) -> Result<Report, CliError> {
    let el = |s: &String| element::<F>(s);
    Ok(match cmd {
        Command::CoverGeneric { a, b, c } => {
            Report::ok(generic_cover(&el(a)?, &el(b)?, &el(c)?).map_err(CliError::math)?.to_json())
        }
        Command::CoverSpecial1 { a, b } => {
            Report::ok(special_first(&el(a)?, &el(b)?).map_err(CliError::math)?.to_json())
        }
        Command::CoverSpecial2 { b, c } => {
            Report::ok(special_second(&el(b)?, &el(c)?).map_err(CliError::math)?.to_json())
        }
        Command::Glue { a, b, expect } => {
            let (a, b) = (el(a)?, el(b)?);
            let ic = prop2_invariants(&a, &b).map_err(CliError::math)?;
            let mut payload = invariants_payload(&ic);
            payload["degenerate"] = json!(false);
            expectation(Report::ok(payload), &ic, expect)?
        }
        Command::HesseJ { a } => {
            let a = el(a)?;
            let j = j_hesse(&a).map_err(CliError::math)?;
            Report::ok(json!({"a": a.encode(), "j": j.encode()}))
        }
        Command::HesseOrbit { a } => {
            let a = el(a)?;
            HesseCurve::new(a.clone()).map_err(CliError::math)?;
            let orbit = orbit12(&a).map_err(CliError::math)?;
            let entries: Vec<Value> = orbit.iter().map(|e| e.as_ref().map_or(Value::Null, Encode::encode)).collect();
            Report::ok(json!({"a": a.encode(), "orbit": entries}))
        }
        Command::ToHesse { a, b } => {
            let h = weierstrass_to_hesse(&el(a)?, &el(b)?).map_err(CliError::math)?;
            let iso: Vec<Value> = h.iso.iter().map(|r| json!(r.iter().map(Encode::encode).collect::<Vec<_>>())).collect();
            Report::ok(json!({
                "t": h.t.encode(),
                "u": h.u.encode(),
                "roots": h.roots.iter().map(Encode::encode).collect::<Vec<_>>(),
                "iso": iso,
                "j": j_hesse(&h.t).map_err(CliError::math)?.encode(),
            }))
        }
        Command::Isogeny2 { t } => {
            let iso = TwoIsogeny::new(el(t)?).map_err(CliError::math)?;
            let mut v = iso.to_json();
            v["kernel"] = iso.kernel_point().to_json();
            Report::ok(v)
        }
        Command::Invariants { coeffs, expect } => {
            let cs = coeffs.split(',').map(|s| element::<F>(s.trim())).collect::<Result<Vec<F>, _>>()?;
            let ic = igusa_clebsch(&Polynomial::new(cs)).map_err(CliError::math)?;
            expectation(Report::ok(invariants_payload(&ic)), &ic, expect)?
        }
        Command::CoverBothSpecial | Command::Census { .. } | Command::VerifyAppendix => unreachable!("field independent"),
    })
}

fn run_rational(cmd: &Command) -> Result<Report, CliError> {
    Ok(match cmd {
        Command::CoverBothSpecial => {
            let bs = both_special_families().map_err(CliError::math)?;
            Report::ok(json!({
                "r": bs.r.encode(),
                "remainder": bs.remainder.encode(),
                "families": bs.families.iter().map(|f| f.to_json()).collect::<Vec<_>>(),
            }))
        }
        Command::Census { a, b, p } => {
            let c = two_torsion_census(&element::<Q>(a)?, &element::<Q>(b)?, *p).map_err(CliError::math)?;
            Report::ok(c.to_json())
        }
        Command::VerifyAppendix => {
            let checks = appendix_checks();
            let total = checks.len();
            let passed = checks.iter().filter(|c| c.pass).count();
            Report {
                payload: json!({"passed": passed, "total": total}),
                checks: checks.iter().map(|c| c.to_json()).collect(),
                failed: total - passed,
            }
        }
        _ => unreachable!("field dependent"),
    })
}

fn dispatch(field: FieldKind, cmd: &Command) -> Result<Report, CliError> {
    if matches!(cmd, Command::CoverBothSpecial | Command::Census { .. } | Command::VerifyAppendix) {
        return run_rational(cmd);
    }
    match field {
        FieldKind::Rational => run_in::<Q>(cmd),
        FieldKind::Omega => run_in::<QOmega>(cmd),
        FieldKind::Sqrt3 => run_in::<QSqrt3>(cmd),
        FieldKind::Prime(p) => with_prime(p, || run_in::<Fp>(cmd)).map_err(|e| CliError::Parse(e.to_string()))?,
    }
}

fn emit(v: &Value) {
    let mut out = std::io::stdout().lock();
    let _ = serde_json::to_writer_pretty(&mut out, v).and_then(|_| writeln!(out).map_err(serde_json::Error::io));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = FieldKind::parse(&cli.field).and_then(|f| dispatch(f, &cli.command).map(|r| (f, r)));
    match outcome {
        Ok((field, report)) => {
            let status = if report.failed == 0 { "ok" } else { "fail" };
            let out = json!({
                "status": status,
                "command": cli.command.name(),
                "field": field.label(),
                "payload": report.payload,
                "checks": report.checks,
            });
            emit(&out);
            if report.failed == 0 {
                ExitCode::SUCCESS
            } else {
                eprintln!("{} check(s) failed", report.failed);
                ExitCode::from(3)
            }
        }
        Err(e) => {
            let (kind, msg, code) = match e {
                CliError::Parse(m) => ("parse", m, 2),
                CliError::Math(m) => ("math", m, 1),
            };
            let out = json!({"status": "error", "command": cli.command.name(), "kind": kind, "message": msg});
            emit(&out);
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
