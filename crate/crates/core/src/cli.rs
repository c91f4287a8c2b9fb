//! The `faulhaber` command-line front end.
//!
//! Output is assembled in memory and written only once the whole request has
//! succeeded, so a usage error never leaves partial output on stdout.
//!
//! Exit codes: 0 on success, 1 if any verification instance fails, 2 on
//! usage or parse errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Result;
use crate::exact_arith::Rational;
use crate::faulhaber::{
    bernoulli, bernoulli_range, faulhaber_coefficients, infer_odd_bernoulli, power_sum_direct,
    power_sum_poly_n, power_sum_tform, telescoping_check, verify_faulhaber, verify_pascal_identity,
    VerificationReport,
};
use crate::polynomial::Polynomial;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

const MAX_BERNOULLI: u64 = 2000;
const MAX_POWER: u64 = 1000;
const MAX_FORM_INDEX: u64 = 200;
const MAX_SUITE: u64 = 200;
const MAX_TELESCOPING_N: u64 = 10_000;
const MAX_EVAL_N: u64 = 100_000;

#[derive(Debug, Parser)]
#[command(
    name = "faulhaber",
    version,
    about = "Exact power sums, Bernoulli numbers and Faulhaber forms"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    N,
    T,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print B_0 ..= B_K, one `index<TAB>value` per line.
    Bernoulli {
        #[arg(value_parser = clap::value_parser!(u64).range(0..=MAX_BERNOULLI))]
        k: u64,
    },
    /// Print the power sum 1^M + .. + n^M as a polynomial.
    Powersum {
        #[arg(value_parser = clap::value_parser!(u64).range(1..=MAX_POWER))]
        m: u64,
        /// `t` prints the Faulhaber form `(P) * T^2`; odd M >= 3 only.
        #[arg(long, value_enum, default_value_t = Basis::N)]
        basis: Basis,
    },
    /// Print the Faulhaber form of 1^(2M+1) + .. + n^(2M+1).
    Tform {
        #[arg(value_parser = clap::value_parser!(u64).range(1..=MAX_FORM_INDEX))]
        m: u64,
    },
    /// Print the coefficients of P in the Faulhaber form, highest degree first.
    Coeffs {
        #[arg(value_parser = clap::value_parser!(u64).range(1..=MAX_FORM_INDEX))]
        m: u64,
    },
    /// Run an identity suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Compare the closed form against literal summation at one point.
    Eval {
        #[arg(value_parser = clap::value_parser!(u64).range(1..=MAX_POWER))]
        m: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(0..=MAX_EVAL_N))]
        n: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum Suite {
    /// 2^(m-1) T^m against its binomial sum of power sums, m = 2..=MAX.
    Pascal {
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u64).range(2..=MAX_SUITE))]
        max: u64,
    },
    /// Faulhaber form against the Bernoulli power sum, m = 1..=MAX.
    Faulhaber {
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u64).range(1..=MAX_SUITE))]
        max: u64,
    },
    /// B_(2m+1) = 0 read off the Faulhaber form, m = 1..=MAX.
    OddBernoulli {
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u64).range(1..=MAX_SUITE))]
        max: u64,
    },
    /// The telescoping sum for triangular powers, every (m, N) in range.
    Telescoping {
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u64).range(1..=MAX_SUITE))]
        max_m: u64,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..=MAX_TELESCOPING_N))]
        max_n: u64,
    },
}

/// Parses `args` (program name first) and executes the request.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli) {
        Ok(Outcome::Done { text, code }) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Ok(Outcome::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum Outcome {
    Done { text: String, code: u8 },
    Usage(String),
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome::Done {
            text,
            code: EXIT_OK,
        }
    }
}

fn rational_json(x: &Rational) -> Value {
    json!({ "num": x.numer().to_string(), "den": x.denom().to_string() })
}

fn poly_json(p: &Polynomial) -> Value {
    json!({
        "var": p.var().to_string(),
        "coeffs": p.coeffs().iter().map(rational_json).collect::<Vec<_>>(),
        "text": p.to_string(),
    })
}

fn json_line(v: Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Bernoulli { k } => {
            let values = bernoulli_range(*k as usize);
            if json {
                let rows: Vec<_> = values
                    .iter()
                    .enumerate()
                    .map(|(i, b)| json!({ "index": i, "value": rational_json(b) }))
                    .collect();
                return Ok(Outcome::ok(json_line(json!({ "bernoulli": rows }))));
            }
            let mut text = String::new();
            for (i, b) in values.iter().enumerate() {
                let _ = writeln!(text, "{i}\t{b}");
            }
            Ok(Outcome::ok(text))
        }
        Command::Powersum { m, basis } => {
            let m = *m as usize;
            match basis {
                Basis::N => {
                    let s = power_sum_poly_n(m)?;
                    Ok(Outcome::ok(if json {
                        json_line(json!({ "m": m, "basis": "n", "poly": poly_json(&s) }))
                    } else {
                        format!("{s}\n")
                    }))
                }
                Basis::T => {
                    if m < 3 || m.is_multiple_of(2) {
                        return Ok(Outcome::Usage(format!(
                            "--basis t needs an odd exponent >= 3, got {m}"
                        )));
                    }
                    Ok(Outcome::ok(tform_output((m - 1) / 2, json)?))
                }
            }
        }
        Command::Tform { m } => Ok(Outcome::ok(tform_output(*m as usize, json)?)),
        Command::Coeffs { m } => {
            let coeffs = faulhaber_coefficients(*m as usize)?;
            Ok(Outcome::ok(if json {
                json_line(json!({
                    "m": m,
                    "coeffs": coeffs.iter().map(rational_json).collect::<Vec<_>>(),
                }))
            } else {
                let parts: Vec<_> = coeffs.iter().map(Rational::to_string).collect();
                format!("{}\n", parts.join(" "))
            }))
        }
        Command::Eval { m, n } => {
            let formula = power_sum_poly_n(*m as usize)?.eval(&Rational::from_integer(*n));
            let direct = Rational::from_integer(power_sum_direct(*m as u32, *n));
            let agree = formula == direct;
            let text = if json {
                json_line(json!({
                    "m": m,
                    "n": n,
                    "formula": rational_json(&formula),
                    "direct": rational_json(&direct),
                    "agree": agree,
                }))
            } else {
                format!("formula\t{formula}\ndirect\t{direct}\nagree\t{agree}\n")
            };
            Ok(Outcome::Done {
                text,
                code: if agree { EXIT_OK } else { EXIT_FAILED },
            })
        }
        Command::Verify { suite } => run_suite(suite, json),
    }
}

fn tform_output(m: usize, json: bool) -> Result<String> {
    let form = power_sum_tform(m)?;
    Ok(if json {
        json_line(json!({
            "m": m,
            "exponent": form.exponent(),
            "p": poly_json(&form.p),
        }))
    } else {
        format!("({}) * T^2\n", form.p)
    })
}

struct Instance {
    label: String,
    detail: Option<String>,
    value: Option<Rational>,
    holds: bool,
}

impl From<VerificationReport> for Instance {
    fn from(r: VerificationReport) -> Self {
        Instance {
            label: r.label,
            detail: None,
            value: None,
            holds: r.holds,
        }
    }
}

fn run_suite(suite: &Suite, json: bool) -> Result<Outcome> {
    let (name, instances): (&str, Vec<Instance>) = match suite {
        Suite::Pascal { max } => (
            "pascal",
            (2..=*max as usize)
                .map(|m| verify_pascal_identity(m).map(Instance::from))
                .collect::<Result<_>>()?,
        ),
        Suite::Faulhaber { max } => (
            "faulhaber",
            (1..=*max as usize)
                .map(|m| verify_faulhaber(m).map(Instance::from))
                .collect::<Result<_>>()?,
        ),
        Suite::OddBernoulli { max } => {
            let mut v = Vec::new();
            for m in 1..=*max as usize {
                let inferred = infer_odd_bernoulli(m)?;
                let tabulated = bernoulli(2 * m + 1);
                let holds = inferred.is_zero() && inferred == tabulated;
                v.push(Instance {
                    label: format!("odd-bernoulli m={m}"),
                    detail: Some(format!("B_{} = {inferred}", 2 * m + 1)),
                    value: Some(inferred),
                    holds,
                });
            }
            ("odd-bernoulli", v)
        }
        Suite::Telescoping { max_m, max_n } => {
            let mut v = Vec::new();
            for m in 1..=*max_m as usize {
                for n in 1..=*max_n as usize {
                    v.push(telescoping_check(m, n)?.into());
                }
            }
            ("telescoping", v)
        }
    };
    let passed = instances.iter().filter(|i| i.holds).count();
    let total = instances.len();
    let code = if passed == total {
        EXIT_OK
    } else {
        EXIT_FAILED
    };

    let text = if json {
        let rows: Vec<_> = instances
            .iter()
            .map(|i| {
                let mut row = json!({ "label": i.label, "holds": i.holds });
                if let Some(v) = &i.value {
                    row["value"] = rational_json(v);
                }
                row
            })
            .collect();
        json_line(json!({
            "suite": name,
            "results": rows,
            "passed": passed,
            "total": total,
        }))
    } else {
        let mut text = String::new();
        for i in &instances {
            let verdict = if i.holds { "PASS" } else { "FAIL" };
            match &i.detail {
                Some(d) => {
                    let _ = writeln!(text, "{verdict} {}: {d}", i.label);
                }
                None => {
                    let _ = writeln!(text, "{verdict} {}", i.label);
                }
            }
        }
        let _ = writeln!(text, "{name}: {passed}/{total} passed");
        text
    };
    Ok(Outcome::Done { text, code })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("faulhaber").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn tform_text() {
        let (code, out, _) = call(&["tform", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "(4/3*T - 1/3) * T^2\n");
    }

    #[test]
    fn powersum_t_basis() {
        assert_eq!(call(&["powersum", "3", "--basis", "t"]).1, "(1) * T^2\n");
        assert_eq!(
            call(&["powersum", "5", "--basis", "t"]).1,
            "(4/3*T - 1/3) * T^2\n"
        );
    }

    #[test]
    fn powersum_t_basis_rejects_even_exponent() {
        for m in ["4", "1"] {
            let (code, out, err) = call(&["powersum", m, "--basis", "t"]);
            assert_eq!(code, EXIT_USAGE);
            assert!(out.is_empty());
            assert!(err.contains("odd exponent"));
        }
    }

    #[test]
    fn coeffs_text() {
        assert_eq!(call(&["coeffs", "3"]).1, "2 -4/3 1/3\n");
    }

    #[test]
    fn malformed_input() {
        for args in [
            &["bernoulli", "-3"][..],
            &["bernoulli", "x"],
            &["powersum", "0"],
            &["frobnicate"],
            &["verify", "pascal", "--max", "1"],
            &[],
        ] {
            let (code, out, err) = call(args);
            assert_eq!(code, EXIT_USAGE, "{args:?}");
            assert!(out.is_empty(), "{args:?}");
            assert!(!err.is_empty(), "{args:?}");
        }
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, err) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("Usage"));
        assert!(err.is_empty());
    }

    #[test]
    fn verify_summary_line() {
        let (code, out, _) = call(&["verify", "telescoping", "--max-m", "2", "--max-n", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 7);
        assert_eq!(out.lines().last(), Some("telescoping: 6/6 passed"));
    }

    #[test]
    fn json_rationals_are_strings() {
        let (code, out, _) = call(&["--format", "json", "bernoulli", "2"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(
            v["bernoulli"][1]["value"],
            json!({ "num": "-1", "den": "2" })
        );
        assert_eq!(
            v["bernoulli"][2]["value"],
            json!({ "num": "1", "den": "6" })
        );
    }
}
