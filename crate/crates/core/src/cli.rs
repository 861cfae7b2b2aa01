//! Command-line front end. [`run`] takes the arguments (without the program
//! name) and returns the exit code together with everything that would be
//! printed, so it can be tested without spawning a process.
//!
//! Exit codes: 0 on success or a passing certificate, 1 on a failing
//! certificate or oracle violations, 2 on usage and parse errors.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::elimination::{discriminant, resultant};
use crate::exactnum::{parse_int, parse_rational, Rational};
use crate::lemmas::{certify_lemmas, sample_spectra, Certificate, LemmaId};
use crate::multipoly::{parse_poly, MultiPoly, VarTable};
use crate::pinching::{
    bracket_at, certify_negative, derived_constants, final_coefficients, optimize_eta,
    PinchingParams, SearchConfig,
};
use crate::realroots::{certify_positive, sturm_sequence, DomainSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "pinchcert", version, about = "Exact certificates for pinching-constant computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build lemma certificates (dependencies are included automatically).
    Certify(CertifyArgs),
    /// Resultant of two polynomials with respect to one variable.
    Resultant(ResultantArgs),
    /// Discriminant of a polynomial with respect to one variable.
    Disc(DiscArgs),
    /// Sturm sequence and real-root count of a univariate polynomial.
    Sturm(SturmArgs),
    /// Exact random check of the eigenvalue inequalities.
    Oracle(OracleArgs),
    /// Pinching coefficients for one parameter choice.
    Pinch(PinchArgs),
    /// Search for the smallest certifiable eta.
    Optimize(OptimizeArgs),
}

#[derive(Args, Debug)]
struct CertifyArgs {
    /// One of ineqef, alineq2, ineqks, alineq1.
    #[arg(long, conflicts_with = "all", required_unless_present = "all", allow_hyphen_values = true)]
    lemma: Option<String>,
    #[arg(long)]
    all: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ResultantArgs {
    #[arg(long, allow_hyphen_values = true)]
    var: String,
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct DiscArgs {
    #[arg(long, allow_hyphen_values = true)]
    var: String,
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct SturmArgs {
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    /// "a,b", "geq a", "leq b" or "all".
    #[arg(long, default_value = "all", allow_hyphen_values = true)]
    domain: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    eta: String,
    #[arg(long)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct PinchArgs {
    #[arg(long, allow_hyphen_values = true)]
    eps: String,
    #[arg(long, allow_hyphen_values = true)]
    sigma: String,
    #[arg(long, allow_hyphen_values = true)]
    kappa: String,
    #[arg(long, allow_hyphen_values = true)]
    eta: String,
    /// Evaluate at one dimension instead of symbolically.
    #[arg(long, conflicts_with = "n_symbolic", allow_hyphen_values = true)]
    n: Option<String>,
    #[arg(long)]
    n_symbolic: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct OptimizeArgs {
    #[arg(long, allow_hyphen_values = true)]
    config: String,
    #[arg(long)]
    json: bool,
}

/// Outcome of a subcommand before it is turned into an exit code.
struct Outcome {
    ok: bool,
    text: String,
}

/// A usage or input error, reported with exit code 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

pub fn run<S: AsRef<str>>(argv: &[S]) -> (i32, String) {
    let args = std::iter::once("pinchcert").chain(argv.iter().map(|s| s.as_ref()));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.to_string());
        }
    };
    let result = match cli.command {
        Command::Certify(a) => cmd_certify(a),
        Command::Resultant(a) => cmd_resultant(a),
        Command::Disc(a) => cmd_disc(a),
        Command::Sturm(a) => cmd_sturm(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Pinch(a) => cmd_pinch(a),
        Command::Optimize(a) => cmd_optimize(a),
    };
    match result {
        Ok(o) => (if o.ok { EXIT_OK } else { EXIT_FAIL }, o.text),
        Err(Usage(msg)) => (EXIT_USAGE, format!("error: {msg}\n")),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

fn cmd_certify(a: CertifyArgs) -> Result<Outcome, Usage> {
    let ids: Vec<LemmaId> = match &a.lemma {
        Some(name) => vec![LemmaId::parse(name)?],
        None => LemmaId::ALL.to_vec(),
    };
    let certs: Vec<Certificate> = if a.all {
        certify_lemmas(&LemmaId::ALL)?
    } else {
        certify_lemmas(&ids)?
    };
    let ok = certs.iter().all(Certificate::passed);
    let text = if a.json {
        if a.all {
            pretty(&Value::Array(certs.iter().map(Certificate::to_json).collect()))
        } else {
            pretty(&certs[0].to_json())
        }
    } else {
        certs.iter().map(Certificate::summary).collect()
    };
    Ok(Outcome { ok, text })
}

/// Variables in order of first appearance across `texts`, with `extra`
/// appended if it never occurs.
fn infer_vars(texts: &[&str], extra: Option<&str>) -> Result<VarTable, Usage> {
    let mut names: Vec<String> = Vec::new();
    for t in texts {
        let bytes = t.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i].is_ascii_alphabetic() {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let name = &t[start..i];
                if !names.iter().any(|n| n == name) {
                    names.push(name.to_string());
                }
            } else if bytes[i].is_ascii_digit() {
                // Skip the digits of a number so `2x` style input fails in the parser.
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
            } else {
                i += 1;
            }
        }
    }
    if let Some(v) = extra {
        if !names.iter().any(|n| n == v) {
            names.push(v.to_string());
        }
    }
    Ok(VarTable::new(names)?)
}

fn parse_with(text: &str, vars: &VarTable) -> Result<MultiPoly, Usage> {
    parse_poly(text, vars).map_err(|e| Usage(format!("cannot parse {text:?}: {e}")))
}

fn cmd_resultant(a: ResultantArgs) -> Result<Outcome, Usage> {
    let vars = infer_vars(&[&a.p, &a.q], Some(&a.var))?;
    let p = parse_with(&a.p, &vars)?;
    let q = parse_with(&a.q, &vars)?;
    let r = resultant(&p, &q, &a.var)?;
    let text = if a.json {
        pretty(&json!({
            "operation": "resultant",
            "var": a.var,
            "degrees": [r.degrees.0, r.degrees.1],
            "value": r.value.to_string(),
        }))
    } else {
        format!("{}\n", r.value)
    };
    Ok(Outcome { ok: true, text })
}

fn cmd_disc(a: DiscArgs) -> Result<Outcome, Usage> {
    let vars = infer_vars(&[&a.p], Some(&a.var))?;
    let p = parse_with(&a.p, &vars)?;
    let d = discriminant(&p, &a.var)?;
    let text = if a.json {
        pretty(&json!({
            "operation": "disc",
            "var": a.var,
            "degree": d.degrees.0,
            "value": d.value.to_string(),
        }))
    } else {
        format!("{}\n", d.value)
    };
    Ok(Outcome { ok: true, text })
}

pub fn parse_domain(text: &str) -> Result<DomainSpec, String> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("all") {
        return Ok(DomainSpec::WholeLine);
    }
    let rat = |s: &str| parse_rational(s.trim()).map_err(|e| format!("bad bound {s:?}: {e}"));
    if let Some(rest) = t.strip_prefix("geq") {
        return Ok(DomainSpec::RayGeq(rat(rest)?));
    }
    if let Some(rest) = t.strip_prefix("leq") {
        return Ok(DomainSpec::RayLeq(rat(rest)?));
    }
    if let Some((a, b)) = t.split_once(',') {
        return DomainSpec::segment(rat(a)?, rat(b)?).map_err(|e| e.to_string());
    }
    Err(format!("unrecognized domain {text:?}"))
}

fn cmd_sturm(a: SturmArgs) -> Result<Outcome, Usage> {
    let vars = infer_vars(&[&a.p], None)?;
    let v = match vars.names() {
        [one] => one.clone(),
        [] => "x".to_string(),
        _ => return Err(Usage(format!("expected a univariate polynomial, found {vars}"))),
    };
    let vars = VarTable::new([v.as_str()])?;
    let p = parse_with(&a.p, &vars)?;
    let dom = parse_domain(&a.domain).map_err(Usage)?;
    let seq = sturm_sequence(&p, &v)?;
    let count = seq.count(&dom);
    let pos = certify_positive(&p, &v, &dom)?;
    let text = if a.json {
        pretty(&json!({
            "operation": "sturm",
            "var": v,
            "domain": dom.to_string(),
            "sequence": seq.polys.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
            "squarefree": seq.is_squarefree(),
            "root_count": count,
            "positivity": pos.to_json(),
        }))
    } else {
        let mut s = String::new();
        for (i, q) in seq.polys.iter().enumerate() {
            let _ = writeln!(s, "p{i} = {q}");
        }
        let _ = writeln!(s, "distinct real roots in {dom}: {count}");
        let verdict = if pos.passed() { "yes" } else { "no" };
        let _ = writeln!(s, "certified positive on {dom}: {verdict}");
        s
    };
    Ok(Outcome { ok: true, text })
}

fn rational_flag(name: &str, text: &str) -> Result<Rational, Usage> {
    parse_rational(text).map_err(|e| Usage(format!("--{name}: {e}")))
}

fn cmd_oracle(a: OracleArgs) -> Result<Outcome, Usage> {
    let eta = rational_flag("eta", &a.eta)?;
    let report = sample_spectra(a.n, &eta, a.trials, a.seed)?;
    let text = if a.json {
        pretty(&report.to_json())
    } else {
        let margin = report
            .min_margin
            .as_ref()
            .map_or("none".to_string(), |m| m.to_string());
        format!(
            "oracle n = {} eta = {} seed = {}\n  trials     {}\n  accepted   {}\n  discarded  {}\n  violations {}\n  min margin {}\n",
            report.n, report.eta, report.seed, report.trials, report.accepted,
            report.discarded, report.violations, margin
        )
    };
    Ok(Outcome {
        ok: report.passed(),
        text,
    })
}

fn cmd_pinch(a: PinchArgs) -> Result<Outcome, Usage> {
    let params = PinchingParams::new(
        rational_flag("eps", &a.eps)?,
        rational_flag("sigma", &a.sigma)?,
        rational_flag("kappa", &a.kappa)?,
        rational_flag("eta", &a.eta)?,
    )?;
    match &a.n {
        Some(n_text) => pinch_at(&params, n_text, a.json),
        None => pinch_symbolic(&params, a.json),
    }
}

fn pinch_symbolic(params: &PinchingParams, json_out: bool) -> Result<Outcome, Usage> {
    let d = derived_constants(params);
    let cert = certify_negative(params)?;
    let text = if json_out {
        let mut v = cert.to_json();
        v["c"] = json!(d.c.split_form());
        v["b"] = json!(d.b.split_form());
        v["tau_coefficient"] = json!(d.tau_coefficient.split_form());
        v["theta_split"] = json!(cert.theta.split_form());
        v["coef_sn_split"] = json!(cert.coef_sn.split_form());
        pretty(&v)
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "theta      = {}", cert.theta.split_form());
        let _ = writeln!(s, "coef_sn    = {}", cert.coef_sn.split_form());
        let _ = writeln!(s, "coef_const = {}", cert.coef_const);
        s.push_str(&cert.certificate.summary());
        s
    };
    Ok(Outcome {
        ok: cert.passed(),
        text,
    })
}

fn pinch_at(params: &PinchingParams, n_text: &str, json_out: bool) -> Result<Outcome, Usage> {
    let n_int = parse_int(n_text).map_err(|e| Usage(format!("--n: {e}")))?;
    let n = Rational::from_integer(n_int);
    if n < Rational::from_integer(6.into()) {
        return Err(Usage("--n must be at least 6".into()));
    }
    let d = derived_constants(params);
    let (sn, cc) = final_coefficients(params);
    let theta = d.theta.eval(&n).expect("no pole for n >= 6");
    let sn_v = sn.eval(&n).expect("no pole for n >= 6");
    let cc_v = cc.eval(&n).expect("no pole for n >= 6");
    // Cross-check against the bracket assembled from its ingredients.
    let consistent = bracket_at(params, &n, &n) == cc_v
        && bracket_at(params, &n, &(&n + Rational::from_integer(1.into()))) == &cc_v + &sn_v;
    let zero = Rational::from_integer(0.into());
    let ok = theta >= zero && sn_v < zero && cc_v < zero && consistent;
    let text = if json_out {
        pretty(&json!({
            "n": n.to_string(),
            "theta": theta.to_string(),
            "coef_sn": sn_v.to_string(),
            "coef_const": cc_v.to_string(),
            "consistent": consistent,
            "status": if ok { "pass" } else { "fail" },
        }))
    } else {
        format!(
            "n = {n}\ntheta      = {theta}\ncoef_sn    = {sn_v}\ncoef_const = {cc_v}\nconsistent = {consistent}\n"
        )
    };
    Ok(Outcome { ok, text })
}

fn cmd_optimize(a: OptimizeArgs) -> Result<Outcome, Usage> {
    let text = std::fs::read_to_string(&a.config)
        .map_err(|e| Usage(format!("cannot read {}: {e}", a.config)))?;
    let cfg = SearchConfig::from_json(&text)?;
    match optimize_eta(&cfg) {
        Ok(res) => {
            let text = if a.json {
                pretty(&res.to_json())
            } else {
                let p = &res.params;
                format!(
                    "best eta = {}\neps = {}, sigma = {}, kappa = {}\ncoef_sn    = {}\ncoef_const = {}\n",
                    res.best_eta, p.eps, p.sig, p.kap, res.cert.coef_sn.split_form(), res.cert.coef_const
                )
            };
            Ok(Outcome {
                ok: res.cert.passed(),
                text,
            })
        }
        Err(crate::pinching::OptimizeError::Infeasible) => Ok(Outcome {
            ok: false,
            text: if a.json {
                pretty(&json!({"status": "infeasible under config"}))
            } else {
                "infeasible under config\n".to_string()
            },
        }),
        Err(e) => Err(Usage(e.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_commands() {
        assert_eq!(run(&["resultant", "--var", "x", "--p", "x-2", "--q", "x-5"]), (0, "-3\n".into()));
        let (code, out) = run(&["disc", "--var", "x", "--p", "a*x^2 + b*x + c"]);
        assert_eq!(code, 0);
        assert_eq!(out, "-4*a*c + b^2\n");
        let (code, out) = run(&["sturm", "--p", "x^3 - x", "--domain", "-2,2"]);
        assert_eq!(code, 0);
        assert!(out.contains("distinct real roots in -2,2: 3"), "{out}");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(&["resultant", "--var", "x", "--p", "x^-2", "--q", "x"]).0, 2);
        assert_eq!(run(&["certify", "--lemma", "nope"]).0, 2);
        assert_eq!(run(&["certify", "--frobnicate"]).0, 2);
        assert_eq!(run(&["sturm", "--p", "x*y"]).0, 2);
        assert_eq!(run(&["sturm", "--p", "x", "--domain", "3,1"]).0, 2);
        assert_eq!(run::<&str>(&[]).0, 2);
        assert_eq!(run(&["--help"]).0, 0);
    }

    #[test]
    fn domains() {
        assert_eq!(parse_domain("all"), Ok(DomainSpec::WholeLine));
        assert!(matches!(parse_domain("geq 1/2"), Ok(DomainSpec::RayGeq(_))));
        assert!(matches!(parse_domain("leq -3"), Ok(DomainSpec::RayLeq(_))));
        assert!(parse_domain("between").is_err());
    }
}
