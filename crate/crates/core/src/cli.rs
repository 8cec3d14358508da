//! The `weylclifford` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a verification fails or an
//! input file cannot be read or parsed, 2 for usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{lame_check, AlgebraSignature, Mode};
use crate::commforms::{
    canonical_form, clifford_form, matrix_l, matrix_lprime, transform_form, RationalMatrix,
};
use crate::cyclotomic::{CyclotomicField, CyclotomicNumber};
use crate::matrep::{
    clifford_generators, fourier, scaled_tolerance, shift, clock, standardize_weyl_pair,
    t_generators_embedded, verify_relations_with, ComplexMatrix, GeneratorSet, OddEmbedding,
    RelationReport, TripleVariant, DEFAULT_TOLERANCE,
};
use crate::qbinom::q_binomial;
use crate::random::{complex, cyclotomic, seeded};

/// Environment variable overriding the default tolerance of every command.
pub const TOLERANCE_ENV: &str = "WEYLCLIFFORD_TOL";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "weylclifford", version, about = "Weyl-Clifford algebras T(n, l): representations, identities and forms")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Numerical tolerance; overrides WEYLCLIFFORD_TOL and the command default.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Tau,
    Taw,
    Pauli,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CliMode {
    Strict,
    Weak,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OddChoice {
    /// Drop the last generator of the next even set (one generator at `l = 2` is `σ₁`).
    Truncated,
    /// Append a diagonal `τ₃` string.
    Diagonal,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Matrix generators of T(n, l) with a relation report.
    Gen(GenArgs),
    /// Check (Σ a_k t_k)^l = Σ a_k^l exactly and numerically.
    VerifyLame(LameArgs),
    /// Gaussian binomial [l k] at a root of unity or at 1.
    Qbinom(QbinomArgs),
    /// Commutator forms h_c, h⁺₋ and the transforms L, L'.
    Forms(FormsArgs),
    /// The discrete Fourier matrix of order l.
    Fourier(FourierArgs),
    /// Standardize the first two matrices of a generator-set file.
    Equiv(EquivArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Number of generators.
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub l: usize,
    #[arg(long, value_enum, default_value_t = Variant::Tau)]
    pub variant: Variant,
    /// Realisation of an odd generator count.
    #[arg(long, value_enum, default_value_t = OddChoice::Truncated)]
    pub odd: OddChoice,
}

#[derive(Debug, Args)]
pub struct LameArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub l: usize,
    #[arg(long, value_enum, default_value_t = CliMode::Strict)]
    pub mode: CliMode,
    #[arg(long, default_value_t = 5)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("lambda").required(true).args(["root", "unit"]))]
pub struct QbinomArgs {
    pub l: usize,
    pub k: usize,
    /// λ = e^{2πi/order}.
    #[arg(long)]
    pub root: Option<usize>,
    /// λ = 1.
    #[arg(long)]
    pub unit: bool,
}

#[derive(Debug, Args)]
pub struct FormsArgs {
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct FourierArgs {
    #[arg(long)]
    pub l: usize,
}

#[derive(Debug, Args)]
pub struct EquivArgs {
    /// JSON generator set; its first two matrices are taken as (U', V').
    pub file: PathBuf,
}

/// What a command produced: a JSON document, its text rendering, and whether
/// its checks passed.
struct Outcome {
    json: String,
    text: String,
    passed: bool,
}

enum Failure {
    Usage(String),
    Input(String),
}

/// Parses `args` (including the program name) and runs the command, writing
/// to standard output or `--out`. Returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    let outcome = match execute(&config) {
        Ok(o) => o,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return EXIT_FAIL;
        }
    };
    let body = match config.format {
        Format::Json => outcome.json,
        Format::Text => outcome.text,
    };
    match &config.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => print!("{body}"),
    }
    if outcome.passed {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn execute(config: &RunConfig) -> Result<Outcome, Failure> {
    let tol = |default: f64| tolerance(config.tol, default);
    match &config.command {
        Command::Gen(a) => cmd_gen(a, tol(DEFAULT_TOLERANCE)?),
        Command::VerifyLame(a) => cmd_verify_lame(a, tol(1e-9)?),
        Command::Qbinom(a) => cmd_qbinom(a),
        Command::Forms(a) => cmd_forms(a),
        Command::Fourier(a) => cmd_fourier(a, tol(1e-11)?),
        Command::Equiv(a) => cmd_equiv(a, tol(1e-7)?),
    }
}

fn tolerance(flag: Option<f64>, default: f64) -> Result<f64, Failure> {
    let value = match flag {
        Some(t) => t,
        None => match std::env::var(TOLERANCE_ENV) {
            Ok(s) => s
                .trim()
                .parse::<f64>()
                .map_err(|_| Failure::Usage(format!("{TOLERANCE_ENV}={s:?} is not a number")))?,
            Err(_) => default,
        },
    };
    if !(value.is_finite() && value > 0.0) {
        return Err(Failure::Usage(format!("tolerance must be positive, got {value}")));
    }
    Ok(value)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

#[derive(Serialize)]
struct GenOutput<'a> {
    n: usize,
    l: usize,
    dim: usize,
    generators: &'a GeneratorSet,
    report: &'a RelationReport,
}

fn cmd_gen(a: &GenArgs, tol: f64) -> Result<Outcome, Failure> {
    if a.n == 0 || a.l < 2 {
        return Err(Failure::Usage(format!("need n >= 1 and l >= 2, got n = {}, l = {}", a.n, a.l)));
    }
    let odd = match a.odd {
        OddChoice::Truncated => OddEmbedding::Truncated,
        OddChoice::Diagonal => OddEmbedding::Diagonal,
    };
    let gens = match a.variant {
        Variant::Pauli => {
            if a.l != 2 {
                return Err(Failure::Usage(format!("the pauli variant needs l = 2, got {}", a.l)));
            }
            if a.n % 2 == 1 && odd == OddEmbedding::Diagonal {
                crate::matrep::clifford_generators_odd(a.n / 2)
            } else {
                clifford_generators(a.n.div_ceil(2)).map(|g| {
                    let zeta = g.zeta();
                    let labeling = g.labeling();
                    let mut mats = g.into_matrices();
                    mats.truncate(a.n);
                    GeneratorSet::new(2, zeta, labeling, mats).expect("nonempty")
                })
            }
        }
        Variant::Tau => t_generators_embedded(a.n, a.l, TripleVariant::Tau, odd),
        Variant::Taw => t_generators_embedded(a.n, a.l, TripleVariant::Taw, odd),
    }
    .map_err(|e| Failure::Usage(e.to_string()))?;
    let report = verify_relations_with(&gens, tol);
    let json = to_json(&GenOutput {
        n: a.n,
        l: a.l,
        dim: gens.dim(),
        generators: &gens,
        report: &report,
    });
    let mut text = String::new();
    let _ = writeln!(text, "T({}, {}) generators, {:?} labeling, dimension {}", a.n, a.l, gens.labeling(), gens.dim());
    for (k, m) in gens.matrices().iter().enumerate() {
        let _ = writeln!(text, "t{}:", k + 1);
        text.push_str(&format_matrix(m));
    }
    text.push_str(&format_report(&report));
    Ok(Outcome { json, text, passed: report.passed })
}

fn format_report(r: &RelationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "max commutation deviation: {}", sig6(r.max_commutation_deviation));
    let _ = writeln!(s, "max power deviation: {}", sig6(r.max_power_deviation));
    let _ = writeln!(s, "tolerance: {}", sig6(r.tolerance));
    if !r.failing_pairs.is_empty() {
        let _ = writeln!(s, "failing pairs: {:?}", r.failing_pairs);
    }
    if !r.failing_powers.is_empty() {
        let _ = writeln!(s, "failing powers: {:?}", r.failing_powers);
    }
    let _ = writeln!(s, "relations: {}", verdict(r.passed));
    s
}

#[derive(Serialize)]
struct LameOutput {
    n: usize,
    l: usize,
    mode: Mode,
    trials: usize,
    seed: u64,
    symbolic: SymbolicSummary,
    numeric: NumericSummary,
    passed: bool,
}

#[derive(Serialize)]
struct SymbolicSummary {
    passed: usize,
    max_residual_terms: usize,
    max_residual_coefficient: f64,
}

#[derive(Serialize)]
struct NumericSummary {
    dim: usize,
    max_relative_deviation: f64,
    tolerance: f64,
    passed: bool,
}

fn cmd_verify_lame(a: &LameArgs, tol: f64) -> Result<Outcome, Failure> {
    if a.n == 0 || a.l < 2 || a.trials == 0 {
        return Err(Failure::Usage(format!(
            "need n >= 1, l >= 2 and trials >= 1, got n = {}, l = {}, trials = {}",
            a.n, a.l, a.trials
        )));
    }
    let mode = match a.mode {
        CliMode::Strict => Mode::Strict,
        CliMode::Weak => Mode::Weak,
    };
    let sig = AlgebraSignature::new(a.n, a.l, mode).map_err(|e| Failure::Usage(e.to_string()))?;
    let mut rng = seeded(a.seed);

    let mut symbolic = SymbolicSummary {
        passed: 0,
        max_residual_terms: 0,
        max_residual_coefficient: 0.0,
    };
    for _ in 0..a.trials {
        let coeffs: Vec<CyclotomicNumber> = (0..a.n).map(|_| cyclotomic(&mut rng, sig.field())).collect();
        let report = lame_check(&sig, &coeffs).expect("coefficients built in the signature field");
        if report.holds {
            symbolic.passed += 1;
        }
        symbolic.max_residual_terms = symbolic.max_residual_terms.max(report.residual.len());
        for (_, c) in report.residual.complex_terms() {
            symbolic.max_residual_coefficient = symbolic.max_residual_coefficient.max(c.norm());
        }
    }

    // Weak mode: rescaled generators c_k t_k keep the phases and make t_k^l = c_k^l central.
    let gens = t_generators_embedded(a.n, a.l, TripleVariant::Tau, OddEmbedding::Diagonal)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let d = gens.dim();
    let mut numeric = NumericSummary {
        dim: d,
        max_relative_deviation: 0.0,
        tolerance: tol,
        passed: true,
    };
    for _ in 0..a.trials {
        let scales: Vec<Complex64> = match mode {
            Mode::Strict => vec![Complex64::new(1.0, 0.0); a.n],
            Mode::Weak => (0..a.n).map(|_| complex(&mut rng)).collect(),
        };
        let xs: Vec<Complex64> = (0..a.n).map(|_| complex(&mut rng)).collect();
        let mut sum = ComplexMatrix::zeros(d);
        let mut rhs = ComplexMatrix::zeros(d);
        for ((t, &c), &x) in gens.matrices().iter().zip(&scales).zip(&xs) {
            let tk = t.scale(c);
            sum = &sum + &tk.scale(x);
            rhs = &rhs + &tk.pow(a.l as u64).scale(x.powu(a.l as u32));
        }
        let lhs = sum.pow(a.l as u64);
        let norm = lhs.frobenius_norm().max(rhs.frobenius_norm()).max(1.0);
        let dev = lhs.distance(&rhs) / norm;
        numeric.max_relative_deviation = numeric.max_relative_deviation.max(dev);
        if !(dev <= tol) {
            numeric.passed = false;
        }
    }

    let passed = symbolic.passed == a.trials && numeric.passed;
    let mut text = String::new();
    let _ = writeln!(text, "Lamé identity in T({}, {}), {} mode, {} trials, seed {}", a.n, a.l, mode_name(mode), a.trials, a.seed);
    let _ = writeln!(
        text,
        "symbolic: {}/{} exact, max residual terms {}, max residual coefficient {}",
        symbolic.passed,
        a.trials,
        symbolic.max_residual_terms,
        sig6(symbolic.max_residual_coefficient)
    );
    let _ = writeln!(
        text,
        "numeric: dimension {}, max relative deviation {} (tolerance {})",
        numeric.dim,
        sig6(numeric.max_relative_deviation),
        sig6(numeric.tolerance)
    );
    let _ = writeln!(text, "lame: {}", verdict(passed));
    let json = to_json(&LameOutput {
        n: a.n,
        l: a.l,
        mode,
        trials: a.trials,
        seed: a.seed,
        symbolic,
        numeric,
        passed,
    });
    Ok(Outcome { json, text, passed })
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Strict => "strict",
        Mode::Weak => "weak",
    }
}

#[derive(Serialize)]
struct QbinomOutput<'a> {
    l: usize,
    k: usize,
    lambda_order: usize,
    value: &'a CyclotomicNumber,
    display: String,
    approx: [f64; 2],
}

fn cmd_qbinom(a: &QbinomArgs) -> Result<Outcome, Failure> {
    if a.k > a.l {
        return Err(Failure::Usage(format!("need 0 <= k <= l, got l = {}, k = {}", a.l, a.k)));
    }
    let order = match (a.root, a.unit) {
        (Some(0), _) => return Err(Failure::Usage("--root needs an order >= 1".into())),
        (Some(q), _) => q,
        (None, _) => 1,
    };
    let lambda = CyclotomicField::new(order).root_of_unity(1);
    let value = q_binomial(a.l, a.k, &lambda).map_err(|e| Failure::Usage(e.to_string()))?;
    let z = value.to_complex();
    let display = value.to_string();
    let mut text = String::new();
    let lambda_name = if order == 1 { "1".to_string() } else { format!("zeta_{order}") };
    let _ = writeln!(text, "[{} {}] at lambda = {}: {}", a.l, a.k, lambda_name, display);
    let _ = writeln!(text, "approx: {}", format_complex(z));
    let json = to_json(&QbinomOutput {
        l: a.l,
        k: a.k,
        lambda_order: order,
        value: &value,
        display,
        approx: [z.re, z.im],
    });
    Ok(Outcome { json, text, passed: true })
}

#[derive(Serialize)]
struct FormsOutput<'a> {
    n: usize,
    canonical: &'a RationalMatrix,
    clifford: &'a RationalMatrix,
    l: &'a RationalMatrix,
    l_prime: &'a RationalMatrix,
    l_transport: bool,
    l_prime_transport: bool,
    passed: bool,
}

fn cmd_forms(a: &FormsArgs) -> Result<Outcome, Failure> {
    let usage = |e: crate::commforms::FormError| Failure::Usage(e.to_string());
    if a.n < 2 {
        return Err(Failure::Usage(format!("need an even n >= 2, got {}", a.n)));
    }
    let hc = canonical_form(a.n).map_err(usage)?;
    let hpm = clifford_form(a.n);
    let l = matrix_l(a.n).map_err(usage)?;
    let lp = matrix_lprime(a.n).map_err(usage)?;
    let l_ok = transform_form(&l, &hc).map_err(usage)? == hpm;
    let lp_ok = transform_form(&lp, &hc).map_err(usage)? == hpm;
    let passed = l_ok && lp_ok;
    let mut text = String::new();
    for (name, m) in [
        ("h_c", hc.matrix()),
        ("h+-", hpm.matrix()),
        ("L", l.matrix()),
        ("L'", lp.matrix()),
    ] {
        let _ = writeln!(text, "{name}:\n{m}");
    }
    let _ = writeln!(text, "L h_c L^T = h+-: {}", verdict(l_ok));
    let _ = writeln!(text, "L' h_c L'^T = h+-: {}", verdict(lp_ok));
    let json = to_json(&FormsOutput {
        n: a.n,
        canonical: hc.matrix(),
        clifford: hpm.matrix(),
        l: l.matrix(),
        l_prime: lp.matrix(),
        l_transport: l_ok,
        l_prime_transport: lp_ok,
        passed,
    });
    Ok(Outcome { json, text, passed })
}

#[derive(Serialize)]
struct FourierOutput<'a> {
    l: usize,
    matrix: &'a ComplexMatrix,
    unitary_deviation: f64,
    intertwining_deviation: f64,
    tolerance: f64,
    passed: bool,
}

fn cmd_fourier(a: &FourierArgs, tol: f64) -> Result<Outcome, Failure> {
    let f = fourier(a.l).map_err(|e| Failure::Usage(e.to_string()))?;
    let ident = ComplexMatrix::identity(a.l);
    let unitary = (&f.adjoint() * &f).distance(&ident);
    // F⁻¹UF = V⁻¹, with F⁻¹ = F† checked above.
    let v_inv = clock(a.l).adjoint();
    let intertwining = (&(&f.adjoint() * &shift(a.l)) * &f).distance(&v_inv);
    let passed = unitary <= tol && intertwining <= tol;
    let mut text = String::new();
    let _ = writeln!(text, "Fourier matrix, l = {}:", a.l);
    text.push_str(&format_matrix(&f));
    let _ = writeln!(text, "unitary deviation: {}", sig6(unitary));
    let _ = writeln!(text, "F^-1 U F = V^-1 deviation: {}", sig6(intertwining));
    let _ = writeln!(text, "fourier: {}", verdict(passed));
    let json = to_json(&FourierOutput {
        l: a.l,
        matrix: &f,
        unitary_deviation: unitary,
        intertwining_deviation: intertwining,
        tolerance: tol,
        passed,
    });
    Ok(Outcome { json, text, passed })
}

/// A generator set, either bare or inside the output of `gen`.
#[derive(Deserialize)]
#[serde(untagged)]
enum EquivInput {
    Bare(GeneratorSet),
    Wrapped { generators: GeneratorSet },
}

#[derive(Serialize)]
struct EquivOutput<'a> {
    l: usize,
    passed: bool,
    error: Option<String>,
    m: Option<&'a ComplexMatrix>,
    mu: Option<[f64; 2]>,
    u_residual: Option<f64>,
    v_residual: Option<f64>,
    tolerance: f64,
}

fn cmd_equiv(a: &EquivArgs, tol: f64) -> Result<Outcome, Failure> {
    let raw = std::fs::read_to_string(&a.file)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", a.file.display())))?;
    let gens = match serde_json::from_str::<EquivInput>(&raw) {
        Ok(EquivInput::Bare(g)) | Ok(EquivInput::Wrapped { generators: g }) => g,
        Err(e) => {
            return Err(Failure::Input(format!("malformed generator set in {}: {e}", a.file.display())));
        }
    };
    if gens.len() < 2 {
        return Err(Failure::Input(format!("{} holds fewer than two matrices", a.file.display())));
    }
    let l = gens.l();
    let (u, v) = (&gens.matrices()[0], &gens.matrices()[1]);
    let mut out = EquivOutput {
        l,
        passed: false,
        error: None,
        m: None,
        mu: None,
        u_residual: None,
        v_residual: None,
        tolerance: tol,
    };
    let mut text = String::new();
    let std = standardize_weyl_pair(u, v, l);
    match &std {
        Ok(s) => {
            let m_inv = s.m.inverse().expect("standardizer returns an invertible matrix");
            let ru = (&(&m_inv * u) * &s.m).distance(&shift(l));
            let rv = (&(&m_inv * v) * &s.m).distance(&clock(l).scale(s.mu));
            let bound = scaled_tolerance(tol, 1, u.max_abs_entry().max(v.max_abs_entry()));
            out.passed = ru <= bound && rv <= bound;
            out.m = Some(&s.m);
            out.mu = Some([s.mu.re, s.mu.im]);
            out.u_residual = Some(ru);
            out.v_residual = Some(rv);
            let _ = writeln!(text, "M with M^-1 U' M = U, M^-1 V' M = mu V (l = {l}):");
            text.push_str(&format_matrix(&s.m));
            let _ = writeln!(text, "mu: {}", format_complex(s.mu));
            let _ = writeln!(text, "residuals: U {}, V {}", sig6(ru), sig6(rv));
        }
        Err(e) => {
            out.error = Some(e.to_string());
            let _ = writeln!(text, "standardization failed: {e}");
        }
    }
    let _ = writeln!(text, "equiv: {}", verdict(out.passed));
    let passed = out.passed;
    Ok(Outcome { json: to_json(&out), text, passed })
}

/// `%g`-style rendering with six significant digits.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..6).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        let s = if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        };
        if s == "-0" {
            "0".into()
        } else {
            s
        }
    } else {
        let s = format!("{x:.5e}");
        let (mantissa, e) = s.split_once('e').expect("scientific format");
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{mantissa}e{e}")
    }
}

/// Entries below this magnitude print as zero in text output.
const TEXT_ZERO: f64 = 1e-12;

pub fn format_complex(z: Complex64) -> String {
    let re = if z.re.abs() < TEXT_ZERO { 0.0 } else { z.re };
    let im = if z.im.abs() < TEXT_ZERO { 0.0 } else { z.im };
    match (re == 0.0, im == 0.0) {
        (_, true) => sig6(re),
        (true, false) => format!("{}i", sig6(im)),
        (false, false) if im < 0.0 => format!("{}-{}i", sig6(re), sig6(-im)),
        (false, false) => format!("{}+{}i", sig6(re), sig6(im)),
    }
}

fn format_matrix(m: &ComplexMatrix) -> String {
    let d = m.dim();
    let cells: Vec<String> = m.row_major().into_iter().map(format_complex).collect();
    let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
    let mut s = String::new();
    for row in cells.chunks(d) {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(s, "  [{}]", line.join("  "));
    }
    s
}
