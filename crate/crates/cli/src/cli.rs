//! Argument parsing and dispatch.

use std::ffi::OsString;
use std::io::{self, Write};
use std::time::Instant;

use clap::{Parser, ValueEnum};
use num_complex::Complex64;
use num_rational::BigRational;
use serde_json::json;
use witten::finite::{
    finite_witten_l, finite_witten_l_exact, haar_average_finite, haar_average_finite_exact,
    CharacterTable,
};
use witten::numerics::riemann_zeta;
use witten::padic::{
    absolute_limit, eval_at_int_s, factorization_check, numeric_limit, q_integer, su3_cong_minus1,
    su3_cong_minus1_at, verify_zero, FamilyId, GroupFamily, PArg, PValue,
};
use witten::polylog::{
    polylog_closed_form, polylog_continued, polylog_eval_neg, polylog_series,
    polylog_via_jonquiere, UnitCirclePoint,
};
use witten::su2::{
    derivative_at_minus2, haar_average_su2, multi_l, special_value_neg_even, witten_l_su2,
    ConjugacyClassSU2,
};
use witten::su3::{
    bernoulli_convolution_check, mt_series, special_value_su3, witten_su3_continued, MBParams,
};
use witten::{Error, PrecisionBudget};

use crate::checks::{self, Suite};
use crate::record::{write_records, Format, ResultRecord};
use crate::table::parse_table;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECKS_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_CONVERGENCE: i32 = 4;

/// Default precision when `--precision` is absent.
pub const PRECISION_ENV: &str = "ZETA_PRECISION";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Module {
    Polylog,
    Su2,
    Su3,
    Padic,
    Finite,
    Verify,
}

/// Witten zeta and L-functions from the command line.
#[derive(Parser, Debug)]
#[command(name = "zeta", version, about, after_help = ACTIONS)]
struct Args {
    module: Module,
    action: Option<String>,
    /// Complex argument `re[,im]`.
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    /// Angle in radians; a comma list for `su2 multi`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "theta_pi")]
    theta: Option<String>,
    /// Angle as a multiple `p/q` of pi; a comma list for `su2 multi`.
    #[arg(long = "theta-pi", allow_hyphen_values = true)]
    theta_pi: Option<String>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    /// `sym` or a rational value.
    #[arg(long)]
    p: Option<String>,
    #[arg(long)]
    family: Option<String>,
    /// Built-in table name (S3, Q8) or a character-table file.
    #[arg(long)]
    table: Option<String>,
    /// Class label or 0-based index; all classes when absent.
    #[arg(long)]
    class: Option<String>,
    #[arg(long, value_enum)]
    suite: Option<Suite>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Significant digits; the budget target is 10^-digits.
    #[arg(long, env = PRECISION_ENV, default_value_t = 10,
          value_parser = clap::value_parser!(u32).range(6..=15))]
    precision: u32,
}

const ACTIONS: &str = "\
Actions:
  polylog eval|series --s --theta     Z(s, e^{i theta})
  polylog jonquiere --s --theta       real s via the functional equation
  polylog closed --m                  Z(-m, x) as a rational function
  polylog neg --m --theta             Z(-m, e^{i theta}) from the closed form
  su2 eval --s --theta                L-function of SU(2) at a class
  su2 special --m --theta             exact value at s = -m, m even
  su2 deriv2 --theta                  derivative at s = -2
  su2 multi --s --theta a,b[,c]       multi-character L-function
  su2 haar --s                        Haar average
  su3 series --s                      double series, Re s > 1
  su3 eval --s [--n]                  Mellin-Barnes continuation, strip n
  su3 special --n                     exact value at s = -n
  su3 lemma --n                       both sides of the Bernoulli convolution
  padic eval --family --m --s [--p]   value at integer s, symbolic or at p
  padic zero --family --m --s         symbolic value with zero test
  padic limit --family --m            p -> 1 limit, a function of s
  padic numlimit --family --m --s     extrapolated p -> 1 value
  padic factor --family               factored vs expanded form
  padic minus1 --m [--p]              SU3_CONG at s = -1
  padic qint --n [--p]                q-integer [n]_p
  finite eval --table --s [--class]   L-function of a finite group
  finite haar --table --s             Haar average
  verify [--suite all|polylog|su2|su3|padic|core]";

enum Failure {
    Usage(String),
    Math(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Math(e)
    }
}

type Out = Result<Vec<ResultRecord>, Failure>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Convergence { .. } => EXIT_CONVERGENCE,
        _ => EXIT_DOMAIN,
    }
}

/// Runs one command; returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let args = match Args::try_parse_from(&argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let query = echo(&argv);
    if args.module == Module::Verify {
        return verify(&args, out, err);
    }
    let digits = args.precision as usize;
    match dispatch(&args, &query) {
        Ok(records) => match write_records(out, &records, args.format, digits) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "zeta: write failed: {e}");
                EXIT_DOMAIN
            }
        },
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "zeta: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Math(e)) => {
            let _ = writeln!(err, "zeta: {e}");
            exit_code(&e)
        }
    }
}

/// The command line without the program name and the output flags.
fn echo(argv: &[OsString]) -> String {
    let mut words = Vec::new();
    let mut skip_value = false;
    for a in argv.iter().skip(1).map(|a| a.to_string_lossy()) {
        if skip_value {
            skip_value = false;
            continue;
        }
        if a == "--format" || a == "--precision" {
            skip_value = true;
            continue;
        }
        if a.starts_with("--format=") || a.starts_with("--precision=") {
            continue;
        }
        words.push(a.into_owned());
    }
    words.join(" ")
}

fn verify(args: &Args, out: &mut impl Write, err: &mut impl Write) -> i32 {
    if let Err(Failure::Usage(msg)) = allow(args, &["suite"]) {
        let _ = writeln!(err, "zeta: {msg}");
        return EXIT_USAGE;
    }
    let suite = match (&args.action, args.suite) {
        (Some(_), Some(_)) => {
            let _ = writeln!(
                err,
                "zeta: give the suite either positionally or with --suite"
            );
            return EXIT_USAGE;
        }
        (Some(a), None) => match Suite::from_str(a, true) {
            Ok(s) => s,
            Err(_) => {
                let _ = writeln!(err, "zeta: unknown suite '{a}'");
                return EXIT_USAGE;
            }
        },
        (None, s) => s.unwrap_or(Suite::All),
    };
    let results = checks::run(suite);
    let written = match args.format {
        Format::Text => write!(out, "{}", checks::render_table(&results)),
        Format::Json => {
            let rows: Vec<_> = results
                .iter()
                .map(|c| {
                    json!({
                        "suite": c.suite.name(), "criterion": c.criterion, "check": c.name,
                        "observed": c.observed, "expected": c.expected,
                        "tolerance": c.tolerance, "pass": c.pass,
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::Value::Array(rows))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let mut res = w.write_record([
                "suite",
                "criterion",
                "check",
                "observed",
                "expected",
                "tolerance",
                "pass",
            ]);
            for c in &results {
                res = res.and_then(|_| {
                    w.write_record([
                        c.suite.name(),
                        &c.criterion.to_string(),
                        &c.name,
                        &c.observed,
                        &c.expected,
                        &c.tolerance,
                        if c.pass { "true" } else { "false" },
                    ])
                });
            }
            res.map_err(io::Error::from).and_then(|_| w.flush())
        }
    };
    if let Err(e) = written {
        let _ = writeln!(err, "zeta: write failed: {e}");
    }
    if results.iter().all(|c| c.pass) {
        EXIT_OK
    } else {
        EXIT_CHECKS_FAILED
    }
}

/// Flags given on the command line, other than format and precision.
fn given(args: &Args) -> Vec<&'static str> {
    let mut v = Vec::new();
    let mut add = |set: bool, name| {
        if set {
            v.push(name)
        }
    };
    add(args.s.is_some(), "s");
    add(args.theta.is_some(), "theta");
    add(args.theta_pi.is_some(), "theta-pi");
    add(args.m.is_some(), "m");
    add(args.n.is_some(), "n");
    add(args.p.is_some(), "p");
    add(args.family.is_some(), "family");
    add(args.table.is_some(), "table");
    add(args.class.is_some(), "class");
    add(args.suite.is_some(), "suite");
    v
}

fn allow(args: &Args, allowed: &[&str]) -> Result<(), Failure> {
    for flag in given(args) {
        let ok = allowed.contains(&flag) || (flag == "theta-pi" && allowed.contains(&"theta"));
        if !ok {
            return usage(format!("--{flag} does not apply to this command"));
        }
    }
    Ok(())
}

fn need<T: Clone>(v: &Option<T>, flag: &str) -> Result<T, Failure> {
    v.clone()
        .ok_or_else(|| Failure::Usage(format!("missing --{flag}")))
}

fn parse_f64(text: &str, what: &str) -> Result<f64, Failure> {
    text.trim()
        .parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| Failure::Usage(format!("{what} '{text}' is not a finite number")))
}

fn parse_s(args: &Args) -> Result<Complex64, Failure> {
    let text = need(&args.s, "s")?;
    let mut parts = text.split(',');
    let re = parse_f64(parts.next().unwrap_or(""), "--s")?;
    let im = match parts.next() {
        Some(t) => parse_f64(t, "--s")?,
        None => 0.0,
    };
    if parts.next().is_some() {
        return usage("--s takes re or re,im");
    }
    Ok(Complex64::new(re, im))
}

fn real_s(args: &Args) -> Result<f64, Failure> {
    let s = parse_s(args)?;
    if s.im != 0.0 {
        return usage("this command needs a real --s");
    }
    Ok(s.re)
}

fn int_s(args: &Args) -> Result<i64, Failure> {
    let s = real_s(args)?;
    if s.fract() != 0.0 || s.abs() > 1e6 {
        return usage("this command needs an integer --s");
    }
    Ok(s as i64)
}

/// An angle as radians or as `(num, den)` multiple of pi.
#[derive(Clone, Copy, Debug)]
enum Angle {
    Radians(f64),
    PiFraction(i64, i64),
}

fn parse_pi_fraction(text: &str) -> Result<Angle, Failure> {
    let bad = || Failure::Usage(format!("--theta-pi '{text}' must be p/q"));
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ),
        None => (t.parse().map_err(|_| bad())?, 1),
    };
    if den <= 0 {
        return Err(bad());
    }
    Ok(Angle::PiFraction(num, den))
}

fn angles(args: &Args) -> Result<Vec<Angle>, Failure> {
    match (&args.theta, &args.theta_pi) {
        (Some(t), None) => t
            .split(',')
            .map(|x| parse_f64(x, "--theta").map(Angle::Radians))
            .collect(),
        (None, Some(t)) => t.split(',').map(parse_pi_fraction).collect(),
        _ => usage("missing --theta or --theta-pi"),
    }
}

fn one_angle(args: &Args) -> Result<Angle, Failure> {
    match angles(args)?[..] {
        [a] => Ok(a),
        _ => usage("expected a single angle"),
    }
}

fn circle_point(a: Angle) -> Result<UnitCirclePoint, Failure> {
    Ok(match a {
        Angle::Radians(t) => UnitCirclePoint::new(t)?,
        Angle::PiFraction(n, d) => UnitCirclePoint::from_pi_fraction(n, d)?,
    })
}

fn su2_class(a: Angle) -> Result<ConjugacyClassSU2, Failure> {
    Ok(match a {
        Angle::Radians(t) => ConjugacyClassSU2::new(t)?,
        Angle::PiFraction(n, d) => ConjugacyClassSU2::from_pi_fraction(n, d)?,
    })
}

fn parse_family(args: &Args) -> Result<GroupFamily, Failure> {
    let name = need(&args.family, "family")?;
    let norm: String = name.chars().filter(|c| *c != '_' && *c != '-').collect();
    FamilyId::ALL
        .into_iter()
        .find(|id| id.name().replace('_', "").eq_ignore_ascii_case(&norm))
        .map(GroupFamily::get)
        .ok_or_else(|| {
            let names: Vec<_> = FamilyId::ALL.iter().map(|f| f.name()).collect();
            Failure::Usage(format!(
                "unknown family '{name}' (one of {})",
                names.join(", ")
            ))
        })
}

fn parse_p(args: &Args) -> Result<PArg, Failure> {
    match args.p.as_deref() {
        None | Some("sym") => Ok(PArg::Symbolic),
        Some(t) => t
            .parse::<BigRational>()
            .map(PArg::Value)
            .map_err(|_| Failure::Usage(format!("--p '{t}' must be 'sym' or a rational number"))),
    }
}

fn level(args: &Args) -> u32 {
    args.m.unwrap_or(1)
}

fn load_table(spec: &str) -> Result<CharacterTable, Failure> {
    match std::fs::read_to_string(spec) {
        Ok(text) => parse_table(&text).map_err(|e| Failure::Usage(format!("{spec}: {e}"))),
        Err(e) => CharacterTable::builtin(spec)
            .ok_or_else(|| Failure::Usage(format!("cannot read table '{spec}': {e}"))),
    }
}

fn timed(f: impl FnOnce() -> Result<ResultRecord, Failure>) -> Result<ResultRecord, Failure> {
    let start = Instant::now();
    let mut r = f()?;
    r.ms = (start.elapsed().as_secs_f64() * 1e6).round() / 1e3;
    Ok(r)
}

fn dispatch(args: &Args, query: &str) -> Out {
    let Some(action) = args.action.as_deref() else {
        return usage("missing action; see --help");
    };
    let budget = PrecisionBudget::from_digits(args.precision);
    let tol = budget.target;
    let q = query.to_string();
    let one = |f: &dyn Fn() -> Result<ResultRecord, Failure>| -> Out { Ok(vec![timed(f)?]) };
    match (args.module, action) {
        (Module::Polylog, "eval" | "series") => {
            allow(args, &["s", "theta"])?;
            let (s, x) = (parse_s(args)?, circle_point(one_angle(args)?)?);
            one(&|| {
                let v = if x.is_one() && action == "eval" {
                    riemann_zeta(s, &budget)?
                } else if action == "eval" {
                    polylog_continued(s, x, &budget)?
                } else {
                    polylog_series(s, x, &budget)?
                };
                Ok(ResultRecord::float(&q, v, tol))
            })
        }
        (Module::Polylog, "jonquiere") => {
            allow(args, &["s", "theta"])?;
            let (s, x) = (real_s(args)?, circle_point(one_angle(args)?)?);
            one(&|| {
                Ok(ResultRecord::float(
                    &q,
                    polylog_via_jonquiere(s, x, &budget)?,
                    tol,
                ))
            })
        }
        (Module::Polylog, "closed") => {
            allow(args, &["m"])?;
            let m = need(&args.m, "m")? as usize;
            one(&|| {
                let (num, den) = polylog_closed_form(m).unit_constant_form();
                Ok(ResultRecord::function_parts(&q, num.variable(), &num, &den))
            })
        }
        (Module::Polylog, "neg") => {
            allow(args, &["m", "theta"])?;
            let m = need(&args.m, "m")? as usize;
            let x = circle_point(one_angle(args)?)?;
            one(&|| Ok(ResultRecord::float(&q, polylog_eval_neg(m, x)?, tol)))
        }
        (Module::Su2, "eval") => {
            allow(args, &["s", "theta"])?;
            let (s, g) = (parse_s(args)?, su2_class(one_angle(args)?)?);
            one(&|| Ok(ResultRecord::float(&q, witten_l_su2(s, g, &budget)?, tol)))
        }
        (Module::Su2, "special") => {
            allow(args, &["m", "theta"])?;
            let m = need(&args.m, "m")?;
            let g = su2_class(one_angle(args)?)?;
            one(&|| Ok(ResultRecord::rational(&q, special_value_neg_even(m, g)?.0)))
        }
        (Module::Su2, "deriv2") => {
            allow(args, &["theta"])?;
            let g = su2_class(one_angle(args)?)?;
            one(&|| {
                Ok(ResultRecord::real(
                    &q,
                    derivative_at_minus2(g, &budget)?,
                    tol,
                ))
            })
        }
        (Module::Su2, "multi") => {
            allow(args, &["s", "theta"])?;
            let s = parse_s(args)?;
            let gs = angles(args)?
                .into_iter()
                .map(su2_class)
                .collect::<Result<Vec<_>, _>>()?;
            one(&|| Ok(ResultRecord::float(&q, multi_l(s, &gs, &budget)?, tol)))
        }
        (Module::Su2, "haar") => {
            allow(args, &["s"])?;
            let s = real_s(args)?;
            one(&|| Ok(ResultRecord::real(&q, haar_average_su2(s, &budget)?, tol)))
        }
        (Module::Su3, "series") => {
            allow(args, &["s"])?;
            let s = parse_s(args)?;
            one(&|| Ok(ResultRecord::float(&q, mt_series(s, &budget)?, tol)))
        }
        (Module::Su3, "eval") => {
            allow(args, &["s", "n"])?;
            let s = parse_s(args)?;
            let params = MBParams::new(args.n.unwrap_or(1), 0.5)?;
            one(&|| {
                Ok(ResultRecord::float(
                    &q,
                    witten_su3_continued(s, params, &budget)?,
                    tol,
                ))
            })
        }
        (Module::Su3, "special") => {
            allow(args, &["n"])?;
            let n = need(&args.n, "n")?;
            if n == 0 {
                return usage("--n must be positive");
            }
            one(&|| Ok(ResultRecord::rational(&q, special_value_su3(n))))
        }
        (Module::Su3, "lemma") => {
            allow(args, &["n"])?;
            let (lhs, rhs) = bernoulli_convolution_check(need(&args.n, "n")?)?;
            Ok(vec![
                ResultRecord::rational(format!("{q} [convolution sum]"), lhs),
                ResultRecord::rational(format!("{q} [zeta(-3n-1) term]"), rhs),
            ])
        }
        (Module::Padic, "eval") => {
            allow(args, &["family", "m", "s", "p"])?;
            let (fam, s, p) = (parse_family(args)?, int_s(args)?, parse_p(args)?);
            one(&|| {
                Ok(match eval_at_int_s(&fam, level(args), s, &p)? {
                    PValue::Symbolic(f) => ResultRecord::function(&q, &f),
                    PValue::Value(v) => ResultRecord::rational(&q, v),
                })
            })
        }
        (Module::Padic, "zero") => {
            allow(args, &["family", "m", "s"])?;
            let (fam, s) = (parse_family(args)?, int_s(args)?);
            one(&|| {
                Ok(ResultRecord::function(
                    &q,
                    &verify_zero(&fam, level(args), s)?.witness,
                ))
            })
        }
        (Module::Padic, "limit") => {
            allow(args, &["family", "m"])?;
            let fam = parse_family(args)?;
            one(&|| {
                Ok(ResultRecord::function(
                    &q,
                    &absolute_limit(&fam, level(args))?,
                ))
            })
        }
        (Module::Padic, "numlimit") => {
            allow(args, &["family", "m", "s"])?;
            let (fam, s) = (parse_family(args)?, int_s(args)?);
            // one Richardson step at h = 1e-4 leaves O(h^2)
            one(&|| {
                Ok(ResultRecord::real(
                    &q,
                    numeric_limit(&fam, level(args), s)?,
                    1e-7,
                ))
            })
        }
        (Module::Padic, "factor") => {
            allow(args, &["family"])?;
            let fam = parse_family(args)?;
            one(&|| {
                let report = factorization_check(&fam)?;
                if !report.holds {
                    return Err(Error::Domain(format!(
                        "factored and expanded forms differ by {}",
                        report.difference
                    ))
                    .into());
                }
                Ok(ResultRecord::rational(
                    &q,
                    BigRational::from_integer(0.into()),
                ))
            })
        }
        (Module::Padic, "minus1") => {
            allow(args, &["m", "p"])?;
            let m = level(args);
            let p = parse_p(args)?;
            one(&|| {
                Ok(match &p {
                    PArg::Symbolic => ResultRecord::function(&q, &su3_cong_minus1(m)?.value),
                    PArg::Value(p) => ResultRecord::rational(&q, su3_cong_minus1_at(m, p)?),
                })
            })
        }
        (Module::Padic, "qint") => {
            allow(args, &["n", "p"])?;
            let n = need(&args.n, "n")?;
            let p = parse_p(args)?;
            one(&|| {
                let poly = q_integer(n)?;
                Ok(match &p {
                    PArg::Symbolic => ResultRecord::function_parts(
                        &q,
                        poly.variable(),
                        &poly,
                        &witten::exact::Polynomial::one(poly.variable()),
                    ),
                    PArg::Value(p) => ResultRecord::rational(&q, poly.eval(p)),
                })
            })
        }
        (Module::Finite, "eval" | "haar") => {
            allow(args, &["table", "s", "class"])?;
            let table = load_table(&need(&args.table, "table")?)?;
            let s = parse_s(args)?;
            let exact_s =
                (s.im == 0.0 && s.re.fract() == 0.0 && s.re.abs() <= 1e3).then_some(s.re as i64);
            if action == "haar" {
                if args.class.is_some() {
                    return usage("--class does not apply to finite haar");
                }
                return one(&|| {
                    Ok(match exact_s {
                        Some(k) => ResultRecord::exact(&q, haar_average_finite_exact(&table, k)?),
                        None => ResultRecord::float(&q, haar_average_finite(&table, s)?, tol),
                    })
                });
            }
            let classes: Vec<usize> = match &args.class {
                Some(c) => vec![table
                    .class_index(c)
                    .or_else(|| {
                        c.parse()
                            .ok()
                            .filter(|&i: &usize| i < table.classes().len())
                    })
                    .ok_or_else(|| Failure::Usage(format!("unknown class '{c}'")))?],
                None => (0..table.classes().len()).collect(),
            };
            let multi = args.class.is_none();
            classes
                .into_iter()
                .map(|c| {
                    let label = if multi {
                        format!("{q} [class {}]", table.classes()[c].label)
                    } else {
                        q.clone()
                    };
                    timed(|| {
                        Ok(match exact_s {
                            Some(k) => ResultRecord::exact(
                                label.clone(),
                                finite_witten_l_exact(&table, k, c)?,
                            ),
                            None => ResultRecord::float(
                                label.clone(),
                                finite_witten_l(&table, s, c)?,
                                tol,
                            ),
                        })
                    })
                })
                .collect()
        }
        (m, a) => usage(format!(
            "unknown action '{a}' for module {}; see --help",
            m.to_possible_value()
                .map(|v| v.get_name().to_string())
                .unwrap_or_default()
        )),
    }
}
