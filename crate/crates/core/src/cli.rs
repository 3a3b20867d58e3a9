//! Command-line front end. Every subcommand builds a [`Report`] holding both
//! the text rendering and the JSON document, so the two cannot drift apart.

use std::ffi::OsString;
use std::fmt::{self, Display, Write as _};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Map, Value};

use crate::algebraic::{find_rho, minpoly_closed, minpoly_oracle, real_roots, MinPoly};
use crate::error::Error;
use crate::exact::{parse_rational, Rational, UniPoly};
use crate::identity::{
    cheb_identity, cheb_identity_explicit_a, cheb_identity_symbolic, discover, fibo_identity,
    fibpoly_identity, fibpoly_identity_exact, neg_fibo_identity, Family, ProportionalityIdentity,
};
use crate::polynomials::{family_by_recurrence, family_explicit, FamilyKind};
use crate::sequences::{LinearForm, Recurrence};

pub const SCHEMA_VERSION: &str = "1";
/// Largest `p` accepted by `table`.
pub const TABLE_P_MAX: u32 = 99;
/// Bound on `|poly(a)|` for an annihilating polynomial at the numeric root.
pub const MINPOLY_RESIDUAL: f64 = 1e-9;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "recsum", version, about = "Sums of second-order recurrences that collapse to a single term")]
pub struct Cli {
    /// Print a JSON report instead of text
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Sum the first n terms and predict the sum from a single term
    Trick {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_int)]
        x0: BigInt,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_int)]
        x1: BigInt,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = parse_int)]
        a: BigInt,
        #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = parse_int)]
        b: BigInt,
    },
    /// Certify a constructed identity on both basis sequences
    Verify {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// Parameter of the cheb family; symbolic when omitted
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rat)]
        a: Option<Rational>,
        /// Odd parameter of the fibpoly family
        #[arg(long)]
        p: Option<u32>,
    },
    /// Search every m <= m-max for S_n = A x_m
    Discover {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rat)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rat)]
        b: Rational,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m_max: usize,
    },
    /// Roots, parameters and identities for odd p up to p-max
    Table {
        #[arg(long)]
        p_max: u32,
    },
    /// Polynomial equation satisfied by a = rho - 1/rho
    Minpoly {
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value = "both")]
        mode: MinpolyMode,
    },
    /// Real roots of r^{p+1} - r^p - r - 1
    Roots {
        #[arg(long)]
        p: u32,
    },
    /// A member of a polynomial family, by recurrence and explicit sum
    Polys {
        #[arg(long, value_enum, ignore_case = true)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Fibo,
    Negfibo,
    Cheb,
    Fibpoly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MinpolyMode {
    Closed,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    #[value(name = "T")]
    T,
    #[value(name = "U")]
    U,
    #[value(name = "F")]
    F,
    #[value(name = "L")]
    L,
}

impl From<KindArg> for FamilyKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::T => FamilyKind::ChebTildeT,
            KindArg::U => FamilyKind::ChebTildeU,
            KindArg::F => FamilyKind::FibPoly,
            KindArg::L => FamilyKind::LucasPoly,
        }
    }
}

fn parse_int(s: &str) -> Result<BigInt, String> {
    s.trim().parse().map_err(|_| format!("{s:?} is not an integer"))
}

fn parse_rat(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Why a command produced no report.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Bad input; exit code 2.
    Usage(String),
    /// A computation that should succeed did not; exit code 1.
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failure(_) => EXIT_FAILED,
        }
    }
}

impl Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Failure(m) => write!(f, "error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::Parse { .. } | Error::Unsupported(_) => CliError::Usage(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub text: String,
    /// False when a verification inside the command failed.
    pub verified: bool,
}

impl Report {
    fn new(command: &'static str, inputs: Value) -> Self {
        let inputs = match inputs {
            Value::Object(m) => m,
            _ => Map::new(),
        };
        Report { command, inputs, results: Map::new(), text: String::new(), verified: true }
    }

    fn line(&mut self, label: &str, value: impl Display) {
        let _ = writeln!(self.text, "{label:<12}{value}");
    }

    fn set(&mut self, key: &str, value: Value) {
        self.results.insert(key.to_string(), value);
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
        })
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.verified {
            EXIT_OK
        } else {
            EXIT_FAILED
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "VERIFIED"
    } else {
        "FAILED"
    }
}

fn s(v: impl Display) -> Value {
    Value::String(v.to_string())
}

fn poly_text(p: &UniPoly, var: &str) -> String {
    p.display_var(var).to_string()
}

fn poly_json(p: &UniPoly) -> Value {
    Value::Array(p.coeffs().iter().map(s).collect())
}

/// `c0 x_0 + c1 x_1` with parenthesized compound coefficients.
fn form_text(c0: String, c1: String) -> String {
    let wrap = |c: String| {
        if c.trim_start_matches('-').contains([' ', '/']) {
            format!("({c})")
        } else {
            c
        }
    };
    format!("{} x_0 + {} x_1", wrap(c0), wrap(c1))
}

fn recurrence_text(a: impl Display, b: impl Display) -> String {
    let b = b.to_string();
    match b.strip_prefix('-') {
        Some(rest) => format!("x_{{n+2}} = {a}*x_{{n+1}} - {rest}*x_n"),
        None => format!("x_{{n+2}} = {a}*x_{{n+1}} + {b}*x_n"),
    }
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Fibonacci => "fibo",
        Family::NegFibonacci => "negfibo",
        Family::Chebyshev => "cheb",
        Family::FibPoly { .. } => "fibpoly",
        Family::General => "general",
    }
}

pub fn execute(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Trick { x0, x1, n, a, b } => cmd_trick(x0, x1, *n, a, b),
        Command::Verify { family, n, a, p } => cmd_verify(*family, *n, a.as_ref(), *p),
        Command::Discover { a, b, n, m_max } => cmd_discover(a, b, *n, *m_max),
        Command::Table { p_max } => cmd_table(*p_max),
        Command::Minpoly { p, mode } => cmd_minpoly(*p, *mode),
        Command::Roots { p } => cmd_roots(*p),
        Command::Polys { kind, n } => cmd_polys((*kind).into(), *n),
    }
}

/// Output of a full command-line run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if e.use_stderr() {
                Execution { code, stdout: String::new(), stderr: text }
            } else {
                Execution { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli.command) {
        Ok(report) => Execution { code: report.exit_code(), stdout: report.render(cli.json), stderr: String::new() },
        Err(e) => Execution { code: e.exit_code(), stdout: String::new(), stderr: format!("{e}\n") },
    }
}

const TRICK_CLASSES: &str = "a = 1, b = 1 with n = 2 mod 4; a = -1, b = 1 with n = 2 mod 4 and n >= 6; \
b = -1 with odd n; a = 2, b = 1 with n = 0 mod 4";

fn trick_identity(a: &BigInt, b: &BigInt, n: usize) -> Result<(ProportionalityIdentity<BigInt>, &'static str), CliError> {
    let one = BigInt::one();
    let two = BigInt::from(2);
    let none = || usage(format!("no built-in identity for a = {a}, b = {b}, n = {n}; admissible: {TRICK_CLASSES}"));
    if *b == -&one {
        return if n % 2 == 1 { Ok((cheb_identity(n, a.clone())?, "b = -1, odd n")) } else { Err(none()) };
    }
    if *b != one {
        return Err(none());
    }
    if *a == one && n % 4 == 2 {
        Ok((fibo_identity(n)?, "a = b = 1, n = 2 mod 4"))
    } else if *a == -&one && n % 4 == 2 && n >= 6 {
        Ok((neg_fibo_identity(n)?, "a = -1, b = 1, n = 2 mod 4"))
    } else if *a == two && n.is_multiple_of(4) && n > 0 {
        Ok((fibpoly_identity_exact(1, n)?, "a = 2, b = 1, n = 0 mod 4"))
    } else {
        Err(none())
    }
}

fn cmd_trick(x0: &BigInt, x1: &BigInt, n: usize, a: &BigInt, b: &BigInt) -> Result<Report, CliError> {
    let mut r = Report::new("trick", json!({ "x0": s(x0), "x1": s(x1), "n": n, "a": s(a), "b": s(b) }));
    let (id, class) = trick_identity(a, b, n)?;
    let rec = Recurrence::new(a.clone(), b.clone(), x0.clone(), x1.clone());
    let terms = rec.terms(n.max(id.m + 1));
    let sum: BigInt = terms[..n].iter().sum();
    let xm = &terms[id.m];
    let prediction = &id.factor * xm;
    let ok = sum == prediction && id.verify();

    r.line("recurrence", recurrence_text(a, b));
    r.line("identity", format!("S_{} = {} * x_{} ({class})", n, id.factor, id.m));
    let shown: Vec<String> = terms[..n].iter().map(|t| t.to_string()).collect();
    r.line("terms", shown.join(" "));
    r.line("sum", &sum);
    r.line("prediction", format!("{} * x_{} = {} * {} = {}", id.factor, id.m, id.factor, xm, prediction));
    r.line("verdict", verdict(ok));

    r.set(
        "identity",
        json!({ "family": family_name(id.family), "n": n, "m": id.m, "factor": s(&id.factor) }),
    );
    r.set("terms", Value::Array(terms[..n].iter().map(s).collect()));
    r.set("sum", s(&sum));
    r.set("x_m", s(xm));
    r.set("prediction", s(&prediction));
    r.set("verified", Value::Bool(ok));
    r.verified = ok;
    Ok(r)
}

fn cmd_verify(family: FamilyArg, n: usize, a: Option<&Rational>, p: Option<u32>) -> Result<Report, CliError> {
    let mut inputs = json!({ "family": format!("{family:?}").to_lowercase(), "n": n });
    if let Some(a) = a {
        inputs["a"] = s(a);
    }
    if let Some(p) = p {
        inputs["p"] = json!(p);
    }
    let mut r = Report::new("verify", inputs);
    if a.is_some() && family != FamilyArg::Cheb {
        return Err(usage("--a only applies to --family cheb"));
    }
    if p.is_some() && family != FamilyArg::Fibpoly {
        return Err(usage("--p only applies to --family fibpoly"));
    }
    match family {
        FamilyArg::Fibo | FamilyArg::Negfibo => {
            let id = if family == FamilyArg::Fibo { fibo_identity(n)? } else { neg_fibo_identity(n)? };
            let sym = Recurrence::symbolic(id.a.clone(), id.b.clone());
            exact_verify_lines(&mut r, &id, &sym.prefix_sum(n), &sym.term(id.m), |v| v.to_string());
            r.line("verdict", verdict(r.verified));
        }
        FamilyArg::Cheb => match a {
            Some(a) => {
                let id = cheb_identity(n, a.clone())?;
                let sym = Recurrence::symbolic(id.a.clone(), id.b.clone());
                exact_verify_lines(&mut r, &id, &sym.prefix_sum(n), &sym.term(id.m), |v| v.to_string());
                r.line("verdict", verdict(r.verified));
            }
            None => {
                let id = cheb_identity_symbolic(n)?;
                let sym = Recurrence::symbolic(id.a.clone(), id.b.clone());
                exact_verify_lines(&mut r, &id, &sym.prefix_sum(n), &sym.term(id.m), |v| poly_text(v, "a"));
                let explicit = cheb_identity_explicit_a(n)?;
                let agree = explicit == id.factor;
                r.line("explicit A", format!("{} ({})", poly_text(&explicit, "a"), if agree { "MATCH" } else { "MISMATCH" }));
                r.set("factor_coeffs", poly_json(&id.factor));
                r.set("explicit_matches", Value::Bool(agree));
                r.verified &= agree;
                r.set("verified", Value::Bool(r.verified));
                r.line("verdict", verdict(r.verified));
            }
        },
        FamilyArg::Fibpoly => {
            let p = p.ok_or_else(|| usage("--family fibpoly needs --p ODD"))?;
            let root = find_rho(p)?;
            let id = fibpoly_identity(p, n, root.rho)?;
            let ok = id.identity.verify();
            r.line("recurrence", format!("x_{{n+2}} = a*x_{{n+1}} + x_n, a = rho - 1/rho = {:.12}", root.a));
            r.line("rho", format!("{:.12}", root.rho));
            r.line("identity", format!("S_{} = A * x_{}", n, id.identity.m));
            r.line("A (u-sum)", format!("{:.12}", id.factor_usum));
            r.line("A (product)", format!("{:.12}", id.factor_product));
            r.line("A (F/L)", format!("{:.12}", id.factor_poly));
            r.set("rho", json!(root.rho));
            r.set("a", json!(root.a));
            r.set("m", json!(id.identity.m));
            r.set("factor_usum", json!(id.factor_usum));
            r.set("factor_product", json!(id.factor_product));
            r.set("factor_poly", json!(id.factor_poly));
            let mut all = ok;
            if p == 1 || p == 3 {
                let exact = fibpoly_identity_exact(p, n)?;
                let exact_ok = exact.verify();
                r.line("exact A", format!("{} ({})", exact.factor, verdict(exact_ok)));
                r.set("factor_exact", s(&exact.factor));
                all &= exact_ok;
            }
            r.line("verdict", verdict(all));
            r.set("verified", Value::Bool(all));
            r.verified = all;
        }
    }
    Ok(r)
}

fn exact_verify_lines<R: crate::exact::Ring + Display>(
    r: &mut Report,
    id: &ProportionalityIdentity<R>,
    sum: &LinearForm<R>,
    target: &LinearForm<R>,
    show: impl Fn(&R) -> String,
) {
    let ok = id.verify();
    r.line("recurrence", recurrence_text(show(&id.a), show(&id.b)));
    r.line("identity", format!("S_{} = A * x_{}", id.n, id.m));
    r.line("A", show(&id.factor));
    r.line(&format!("S_{}", id.n), form_text(show(&sum.coeff_x0), show(&sum.coeff_x1)));
    r.line(&format!("x_{}", id.m), form_text(show(&target.coeff_x0), show(&target.coeff_x1)));
    r.set("family", s(family_name(id.family)));
    r.set("m", json!(id.m));
    r.set("factor", s(show(&id.factor)));
    r.set("sum", json!({ "x0": show(&sum.coeff_x0), "x1": show(&sum.coeff_x1) }));
    r.set("x_m", json!({ "x0": show(&target.coeff_x0), "x1": show(&target.coeff_x1) }));
    r.set("verified", Value::Bool(ok));
    r.verified = ok;
}

fn cmd_discover(a: &Rational, b: &Rational, n: usize, m_max: usize) -> Result<Report, CliError> {
    let mut r = Report::new("discover", json!({ "a": s(a), "b": s(b), "n": n, "m_max": m_max }));
    if n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    if m_max < n {
        return Err(usage(format!("--m-max = {m_max} must be at least n = {n}")));
    }
    let report = discover(a, b, n, m_max);
    r.line("recurrence", recurrence_text(a, b));
    r.line("search", format!("S_{n} = A * x_m, 0 <= m <= {m_max}"));
    if report.hits.is_empty() {
        r.line("result", "no proportionality identity found");
    }
    let mut hits = Vec::new();
    for h in &report.hits {
        match &h.factor {
            Some(f) => r.line("hit", format!("m = {}, A = {}", h.m, f)),
            None => r.line("hit", format!("m = {}, A unconstrained", h.m)),
        }
        hits.push(json!({ "m": h.m, "factor": h.factor.as_ref().map(s).unwrap_or(Value::Null) }));
    }
    r.set("m_range", json!([0, m_max]));
    r.set("hits", Value::Array(hits));
    r.set("exact", Value::Bool(report.exact));
    Ok(r)
}

/// `v_{(p-1)/2} u_{n/2}`-style label for the table's `A` column.
fn table_factor(p: u32) -> String {
    let k = (p as usize - 1) / 2;
    let (kind, seq) = if k.is_multiple_of(2) { (FamilyKind::LucasPoly, "u") } else { (FamilyKind::FibPoly, "v") };
    let poly = family_by_recurrence(kind, k);
    let head = if poly.degree() == Some(0) {
        let c = poly.coeff(0);
        if c.is_one() {
            String::new()
        } else {
            c.to_string()
        }
    } else {
        format!("({})", poly_text(&poly, "a"))
    };
    format!("{head}{seq}_{{n/2}}")
}

fn cmd_table(p_max: u32) -> Result<Report, CliError> {
    let mut r = Report::new("table", json!({ "p_max": p_max }));
    if p_max.is_multiple_of(2) || p_max > TABLE_P_MAX {
        return Err(usage(format!("--p-max = {p_max} must be odd and at most {TABLE_P_MAX}")));
    }
    let _ = writeln!(r.text, "{:>3}  {:>9}  {:>9}  {:<8}  {:<11}  A", "p", "rho", "a", "m", "n");
    let mut rows = Vec::new();
    for p in (1..=p_max).step_by(2) {
        let root = find_rho(p)?;
        let k = (p - 1) / 2;
        let m = if k == 0 { "n/2".to_string() } else { format!("n/2+{k}") };
        let class = if k % 2 == 0 { "n = 0 mod 4" } else { "n = 2 mod 4" };
        let factor = table_factor(p);
        let _ = writeln!(r.text, "{:>3}  {:>9.6}  {:>9.6}  {:<8}  {:<11}  {}", p, root.rho, root.a, m, class, factor);
        rows.push(json!({
            "p": p, "rho": root.rho, "a": root.a, "residual": root.residual,
            "m": m, "n_class": class, "factor": factor,
        }));
    }
    r.set("rows", Value::Array(rows));
    Ok(r)
}

fn minpoly_json(m: &MinPoly) -> Value {
    json!({ "q": m.q, "case": m.case.name(), "degree": m.degree(), "coeffs": poly_json(&m.poly), "text": poly_text(&m.poly, "a") })
}

fn cmd_minpoly(p: u32, mode: MinpolyMode) -> Result<Report, CliError> {
    let mut r = Report::new("minpoly", json!({ "p": p, "mode": format!("{mode:?}").to_lowercase() }));
    let closed = matches!(mode, MinpolyMode::Closed | MinpolyMode::Both).then(|| minpoly_closed(p)).transpose()?;
    let oracle = matches!(mode, MinpolyMode::Oracle | MinpolyMode::Both).then(|| minpoly_oracle(p)).transpose()?;
    let root = find_rho(p)?;
    let shown = closed.as_ref().or(oracle.as_ref()).expect("at least one mode");
    let (q, case) = (shown.q, shown.case);
    r.line("p", format!("{p} (q = {q}, case {})", case.name()));
    r.line("a", format!("{:.12}", root.a));
    let mut ok = true;
    if let Some(c) = &closed {
        r.line("closed", poly_text(&c.poly, "a"));
        r.set("closed", minpoly_json(c));
    }
    if let Some(o) = &oracle {
        r.line("oracle", poly_text(&o.poly, "a"));
        r.set("oracle", minpoly_json(o));
    }
    if let (Some(c), Some(o)) = (&closed, &oracle) {
        let same = c == o;
        r.line("agreement", if same { "MATCH" } else { "MISMATCH" });
        r.set("match", Value::Bool(same));
        ok &= same;
    }
    let residual = shown.residual_at(root.a);
    let small = residual <= MINPOLY_RESIDUAL;
    r.line("residual", format!("{residual:.3e} ({})", if small { "< 1e-9" } else { "too large" }));
    r.set("a", json!(root.a));
    r.set("residual", json!(residual));
    r.set("residual_bound", json!(MINPOLY_RESIDUAL));
    ok &= small;
    r.line("verdict", verdict(ok));
    r.set("verified", Value::Bool(ok));
    r.verified = ok;
    Ok(r)
}

fn cmd_roots(p: u32) -> Result<Report, CliError> {
    let mut r = Report::new("roots", json!({ "p": p }));
    let root = find_rho(p)?;
    let reals = real_roots(p)?;
    r.line("polynomial", format!("r^{} - r^{} - r - 1", p + 1, p));
    r.line("rho", format!("{:.15}", root.rho));
    r.line("residual", format!("{:.3e}", root.residual));
    r.line("a", format!("{:.15}", root.a));
    r.line("-1/rho", format!("{:.15}", -1.0 / root.rho));
    let listed: Vec<String> = reals.iter().map(|x| format!("{x:.15}")).collect();
    r.line("real roots", listed.join(" "));
    r.set("rho", json!(root.rho));
    r.set("a", json!(root.a));
    r.set("residual", json!(root.residual));
    r.set("real_roots", json!(reals));
    Ok(r)
}

fn cmd_polys(kind: FamilyKind, n: usize) -> Result<Report, CliError> {
    let mut r = Report::new("polys", json!({ "kind": kind.symbol(), "n": n }));
    let rec = family_by_recurrence(kind, n);
    let name = format!("{}_{}(x)", kind.symbol(), n);
    r.line(&name, poly_text(&rec, "x"));
    r.set("recurrence", poly_json(&rec));
    r.set("text", s(poly_text(&rec, "x")));
    match family_explicit(kind, n) {
        Ok(explicit) => {
            let same = explicit == rec;
            r.line("explicit", if same { "MATCH" } else { "MISMATCH" });
            r.set("explicit_matches", Value::Bool(same));
            r.verified = same;
        }
        Err(Error::Unsupported(_)) => {
            r.line("explicit", "none for this family");
            r.set("explicit_matches", Value::Null);
        }
        Err(e) => return Err(e.into()),
    }
    Ok(r)
}
