//! Command dispatch and reporting for the `hopfcoh` binary.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails or an
//! identity breaks, 2 on input errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::calculus::exterior::omega_coaction;
use crate::calculus::{build_exterior, build_omega, check_ideal, extend_coaction, tensor_dga, universal_calculus, CalculusIdeal, Dga};
use crate::cohomology::invariant_forms_check;
use crate::document::AlgebraDocument;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::hopf::builtin::by_name;
use crate::hopf::{left_integral, validate_hopf, FinHopfAlgebra};
use crate::hopf_lie::{build_hopf_lie, hl_cohomology_iso_check, t_map};
use crate::linalg::Mat;
use crate::report::{all_passed, Check};
use crate::spectral::{convergence_check, random_double_complex, spectral_pages, total_complex, van_est_check, Filtration, HopfModuleComplex};

/// Axioms reported by `validate`, in order.
pub const AXIOMS: [&str; 12] = [
    "associativity",
    "left unit",
    "right unit",
    "coassociativity",
    "left counit",
    "right counit",
    "comultiplicativity",
    "comultiplication unital",
    "counit multiplicative",
    "counit unital",
    "left antipode",
    "right antipode",
];

/// Largest form space the universal calculus on `P⊗P` may reach.
const UNIVERSAL_TENSOR_CAP: usize = 20_000;

#[derive(Parser, Debug)]
#[command(name = "hopfcoh", version, about = "Exact cohomology of bicovariant calculi on finite-dimensional Hopf algebras")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Field for builtins and random complexes: `Q` or `F<p>`.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 2024)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// A calculus on `P`: a named ideal or the universal calculus.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct CalculusArg {
    /// Ideal from the document, or `zero` / `augmentation`.
    #[arg(long)]
    pub ideal: Option<String>,
    /// Universal calculus.
    #[arg(long)]
    pub universal: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Hopf axioms, the ideals and the integral of a document.
    Validate { path: String },
    /// De Rham and invariant-form cohomology with the comparison checks.
    Cohomology {
        path: String,
        #[command(flatten)]
        calculus: CalculusArg,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Both spectral sequences of the van Est double complex.
    Vanest {
        path: String,
        #[command(flatten)]
        calculus: CalculusArg,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
    },
    /// The Hopf-Lie algebra, its bracket, `T` and its cohomology.
    Hopflie {
        path: String,
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Write a builtin algebra as a document.
    Export {
        builtin: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convergence of both filtrations on seeded random double complexes.
    Spectral {
        #[arg(long, default_value_t = 20)]
        count: u64,
        #[arg(long, default_value_t = 3)]
        n_cap: usize,
        #[arg(long, default_value_t = 3)]
        m_cap: usize,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub checks: Vec<Check>,
    pub tables: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub exit_code: i32,
    pub timing_ms: u128,
}

impl Report {
    fn new(command: Vec<String>) -> Report {
        Report { command, checks: Vec::new(), tables: BTreeMap::new(), error: None, exit_code: 0, timing_ms: 0 }
    }

    fn table(&mut self, name: &str, value: impl Serialize) {
        self.tables.insert(name.into(), serde_json::to_value(value).expect("tables serialize"));
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("$ {}\n", self.command.join(" "));
        for c in &self.checks {
            out += &format!("{c}\n");
        }
        for (name, v) in &self.tables {
            out += &format!("{name}: {v}\n");
        }
        if let Some(e) = &self.error {
            out += &format!("error: {e}\n");
        }
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        out += &format!("{passed}/{} checks passed, exit {}, {} ms\n", self.checks.len(), self.exit_code, self.timing_ms);
        out
    }
}

/// Exit status for an error that aborted a command.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::Io(_)
        | Error::InvalidIdeal(_)
        | Error::Shape(_)
        | Error::HopfAxioms(_)
        | Error::CapExceeded(_)
        | Error::NotPrime(_)
        | Error::FieldMismatch(..)
        | Error::MissingAntipodeInverse(_)
        | Error::MissingRoot(..)
        | Error::Unsupported(_) => 2,
        _ => 1,
    }
}

/// Errors that are findings about the input rather than bad input.
fn is_finding(e: &Error) -> bool {
    exit_code(e) == 1
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let echo = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned());
    let mut report = Report::new(std::iter::once("hopfcoh".to_string()).chain(echo).collect());
    let start = Instant::now();
    let result = dispatch(&cli, &mut report);
    report.timing_ms = start.elapsed().as_millis();
    match result {
        Ok(Some(raw)) => return Outcome { code: 0, stdout: raw, stderr: String::new() },
        Ok(None) => report.exit_code = if all_passed(&report.checks) { 0 } else { 1 },
        Err(e) => {
            report.exit_code = exit_code(&e);
            report.error = Some(e.to_string());
        }
    }
    let stdout = match cli.format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
    };
    Outcome { code: report.exit_code, stdout, stderr: String::new() }
}

/// Runs the command; `Some` is raw output that replaces the report.
fn dispatch(cli: &Cli, report: &mut Report) -> Result<Option<String>> {
    let field = cli.field.as_deref().map(FieldSpec::from_name).transpose()?;
    match &cli.command {
        Command::Validate { path } => cmd_validate(&load(path, field)?, report)?,
        Command::Cohomology { path, calculus, max_degree } => cmd_cohomology(&load(path, field)?, calculus, *max_degree, report)?,
        Command::Vanest { path, calculus, max_degree } => cmd_vanest(&load(path, field)?, calculus, *max_degree, report)?,
        Command::Hopflie { path, ideal, max_degree } => cmd_hopflie(&load(path, field)?, ideal, *max_degree, report)?,
        Command::Export { builtin, out } => {
            let doc = builtin_document(builtin, field.unwrap_or(FieldSpec::Rationals))?;
            let text = doc.to_json() + "\n";
            let back = AlgebraDocument::from_json(&text)?;
            let same = back == doc && AlgebraDocument::from_hopf(&back.hopf()?).ideals.is_empty();
            match out {
                None => return Ok(Some(text)),
                Some(path) => {
                    std::fs::write(path, &text)?;
                    report.checks.push(Check::expect("document round-trips", same, "re-export differs"));
                    report.table("written", path.display().to_string());
                }
            }
        }
        Command::Spectral { count, n_cap, m_cap } => cmd_spectral(field.unwrap_or(FieldSpec::prime(5)?), cli.seed, *count, *n_cap, *m_cap, report)?,
    }
    Ok(None)
}

/// A builtin document; Sweedler comes with two named calculus ideals.
pub fn builtin_document(name: &str, field: FieldSpec) -> Result<AlgebraDocument> {
    let p = by_name(name, field)?;
    let doc = AlgebraDocument::from_hopf(&p);
    Ok(match name {
        "sweedler" => doc
            .with_ideal("x_plus_gx", &Mat::from_ints(field, &[vec![0], vec![1], vec![0], vec![1]]))
            .with_ideal("one_minus_g", &Mat::from_ints(field, &[vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]])),
        _ => doc,
    })
}

/// A document from a file, or `builtin:NAME`.
pub fn load(source: &str, field: Option<FieldSpec>) -> Result<AlgebraDocument> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return builtin_document(name, field.unwrap_or(FieldSpec::Rationals));
    }
    let doc = AlgebraDocument::read(std::path::Path::new(source))?;
    match field {
        Some(f) if f != doc.field => Err(Error::Parse(format!("{source} is over {}, --field {f} given", doc.field))),
        _ => Ok(doc),
    }
}

fn cmd_validate(doc: &AlgebraDocument, report: &mut Report) -> Result<()> {
    let data = doc.hopf_data()?;
    let violations = data.violations()?;
    for name in AXIOMS {
        match violations.iter().find(|v| v.check == name) {
            None => report.checks.push(Check::pass(name)),
            Some(v) => report.checks.push(Check::fail(name, format!("witness {}", v.witness))),
        }
    }
    if !violations.is_empty() {
        for name in doc.ideal_names() {
            report.checks.push(Check::skipped(format!("ideal {name}"), "axioms fail"));
        }
        return Ok(());
    }
    let p = validate_hopf(data)?;
    for name in doc.ideal_names() {
        let r = doc.ideal_vectors(name).and_then(|v| check_ideal(&p, &v)).map(|_| ());
        report.checks.push(Check::from_result(format!("ideal {name}"), &r));
    }
    let integral = left_integral(&p);
    report.table("dim", p.dim());
    report.table("field", p.field().name());
    report.table("antipode_invertible", p.antipode_inverse().is_some());
    report.table("integral_exists", integral.exists());
    report.table("normalised_integral", integral.is_normalised());
    Ok(())
}

fn named_ideal(doc: &AlgebraDocument, p: &FinHopfAlgebra, name: &str) -> Result<CalculusIdeal> {
    match name {
        "zero" => Ok(CalculusIdeal::zero(p)),
        "augmentation" => Ok(CalculusIdeal::augmentation(p)),
        _ => doc.ideal(p, name),
    }
}

/// Forms on `P` with the coaction `λ̄: Ω^n → P⊗Ω^n`.
fn forms(doc: &AlgebraDocument, p: &FinHopfAlgebra, calculus: &CalculusArg, cap: usize, report: &mut Report) -> Result<(Dga, Vec<Mat>)> {
    if let Some(name) = &calculus.ideal {
        let ideal = named_ideal(doc, p, name)?;
        let ext = build_exterior(p, &ideal, cap)?;
        report.table("calculus", format!("ideal {name}"));
        report.table("lambda_dims", ext.lambda_dims());
        let dga = build_omega(p, &ext)?;
        let lambda_bar = (0..=cap).map(|k| omega_coaction(p, &ext, k)).collect();
        return Ok((dga, lambda_bar));
    }
    let dga = universal_calculus(&p.algebra(), cap, cap)?;
    let dims = dga.dims();
    let worst = (0..=cap).map(|n| (0..=n).map(|r| dims[r] * dims[n - r]).sum::<usize>()).max().unwrap_or(0);
    if worst > UNIVERSAL_TENSOR_CAP {
        return Err(Error::CapExceeded(format!("universal forms on P⊗P reach dimension {worst}; lower --max-degree")));
    }
    report.table("calculus", "universal");
    let t = tensor_dga(&dga, &dga)?;
    let ext = extend_coaction(p, p.comult(), &dga, &t)?;
    Ok((dga, ext.lambda_bar))
}

fn cmd_cohomology(doc: &AlgebraDocument, calculus: &CalculusArg, cap: usize, report: &mut Report) -> Result<()> {
    let p = doc.hopf()?;
    let (dga, lambda_bar) = forms(doc, &p, calculus, cap, report)?;
    report.table("form_dims", dga.dims());
    let r = invariant_forms_check(&p, &dga, &dga, &lambda_bar)?;
    report.checks.extend(r.checks.iter().cloned());
    report.table("de_rham_dims", &r.de_rham_dims);
    report.table("invariant_dims", &r.invariant_dims);
    report.table("coinvariant_class_dims", &r.coinvariant_class_dims);
    report.table("exact_below", r.exact_below);
    report.table("connected", r.p_connected);
    report.table("normalised_integral", r.normalised_integral);
    Ok(())
}

fn cmd_vanest(doc: &AlgebraDocument, calculus: &CalculusArg, cap: usize, report: &mut Report) -> Result<()> {
    let p = doc.hopf()?;
    let (dga, lambda_bar) = forms(doc, &p, calculus, cap, report)?;
    let fc = HopfModuleComplex::from_dga(&dga, &lambda_bar)?;
    let r = van_est_check(&p, &fc, cap)?;
    report.checks.extend(r.checks.iter().cloned());
    report.table("e2_direct", &r.e2_direct);
    report.table("e2_i", &r.e2_i);
    report.table("e2_ii", &r.e2_ii);
    report.table("limit_i", &r.limit_i);
    report.table("limit_ii", &r.limit_ii);
    report.table("invariant_dims", &r.invariant_dims);
    report.table("exact_below", r.exact_below);
    Ok(())
}

fn dense(m: &Mat) -> Vec<Vec<String>> {
    m.to_dense().iter().map(|row| row.iter().map(|s| s.to_string()).collect()).collect()
}

fn cmd_hopflie(doc: &AlgebraDocument, ideal: &str, cap: usize, report: &mut Report) -> Result<()> {
    let p = doc.hopf()?;
    let f = p.field();
    let ext = build_exterior(&p, &named_ideal(doc, &p, ideal)?, cap)?;
    let hl = build_hopf_lie(&p, &ext)?;
    report.checks.extend(hl.checks().iter().cloned());
    report.table("g_dim", hl.dim());
    report.table("wedge_dims", hl.wedge_dims());
    report.table("bracket", dense(hl.bracket()));
    let flip = *hl.sigma() == Mat::flip(f, hl.dim(), hl.dim());
    report.table("sigma_is_flip", flip);
    match t_map(&hl) {
        Ok(t) => {
            report.checks.push(Check::pass("T = [,]∘(id−σ)⁻¹ exists"));
            report.table("t", dense(&t));
            if flip && f.characteristic() != 2 {
                let half = f.int(2).inv().expect("characteristic is not 2");
                let ok = t.mul(hl.wedge(2).projection()) == hl.bracket().scale(&half);
                report.checks.push(Check::expect("T = ½[,]", ok, "T differs from half the bracket"));
            }
        }
        Err(e) => report.checks.push(Check::fail("T = [,]∘(id−σ)⁻¹ exists", e.to_string())),
    }
    match hl_cohomology_iso_check(&p, &hl, &ext) {
        Ok(r) => {
            report.checks.extend(r.checks.iter().cloned());
            report.table("k_dims", &r.k_dims);
            report.table("hl_dims", &r.hl_dims);
            report.table("invariant_dims", &r.invariant_dims);
        }
        Err(e) if is_finding(&e) => report.checks.push(Check::fail("H_HL(𝔤) ≅ H(invariant forms)", e.to_string())),
        Err(e) => return Err(e),
    }
    Ok(())
}

fn cmd_spectral(f: FieldSpec, seed: u64, count: u64, n_cap: usize, m_cap: usize, report: &mut Report) -> Result<()> {
    let mut runs = Vec::new();
    for s in seed..seed + count {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let dc = random_double_complex(f, n_cap, m_cap, &mut rng);
        let total = total_complex(&dc).cohomology();
        let mut run = json!({ "seed": s, "dims": dc.dims(), "total": &total.dims[..=dc.top_degree()] });
        for filt in [Filtration::I, Filtration::II] {
            let name = format!("seed {s}, filtration {filt:?}: pages, D_r² = 0, monotonicity, convergence");
            let outcome = spectral_pages(&dc, filt, n_cap.max(m_cap) + 2).and_then(|pages| {
                convergence_check(&dc, &pages, &total)?;
                Ok(pages.last().expect("pages").dims.clone())
            });
            match outcome {
                Ok(limit) => {
                    run[format!("limit_{filt:?}")] = json!(limit);
                    report.checks.push(Check::pass(name));
                }
                Err(e) if is_finding(&e) => report.checks.push(Check::fail(name, e.to_string())),
                Err(e) => return Err(e),
            }
        }
        runs.push(run);
    }
    report.table("field", f.name());
    report.table("runs", runs);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("hopfcoh").chain(args.iter().copied()))
    }

    fn json_of(o: &Outcome) -> Value {
        serde_json::from_str(&o.stdout).unwrap()
    }

    #[test]
    fn validate_builtins() {
        for name in ["kZ2", "fZ3", "sweedler"] {
            let o = run_args(&["validate", &format!("builtin:{name}")]);
            assert_eq!(o.code, 0, "{}", o.stdout);
        }
        let o = run_args(&["validate", "builtin:taft3", "--field", "F7", "--format", "json"]);
        assert_eq!(o.code, 0);
        assert_eq!(json_of(&o)["tables"]["dim"], 9);
    }

    #[test]
    fn input_errors_exit_two() {
        assert_eq!(run_args(&["validate", "/nonexistent.json"]).code, 2);
        assert_eq!(run_args(&["validate", "builtin:nope"]).code, 2);
        assert_eq!(run_args(&["cohomology", "builtin:fZ2"]).code, 2);
        assert_eq!(run_args(&["cohomology", "builtin:sweedler", "--ideal", "missing"]).code, 2);
        assert_eq!(run_args(&["--help"]).code, 0);
    }

    #[test]
    fn universal_fz2() {
        let o = run_args(&["cohomology", "builtin:fZ2", "--universal", "--max-degree", "2", "--format", "json"]);
        assert_eq!(o.code, 0, "{}", o.stdout);
        let v = json_of(&o);
        assert_eq!(v["tables"]["de_rham_dims"][0], 1);
        assert_eq!(v["tables"]["de_rham_dims"][1], 0);
        assert_eq!(v["tables"]["connected"], true);
        assert_eq!(v["tables"]["normalised_integral"], true);
    }

    #[test]
    fn degree_zero_only() {
        let o = run_args(&["cohomology", "builtin:fZ2", "--ideal", "zero", "--max-degree", "0", "--format", "json"]);
        assert_eq!(o.code, 0, "{}", o.stdout);
        let v = json_of(&o);
        // no differential leaves degree 0, so H^0 is only an upper bound
        assert_eq!(v["tables"]["de_rham_dims"], json!([2]));
        assert_eq!(v["tables"]["exact_below"], 0);
    }

    #[test]
    fn sweedler_part_one_skipped() {
        let o = run_args(&["cohomology", "builtin:sweedler", "--ideal", "one_minus_g", "--max-degree", "2", "--format", "json"]);
        let v = json_of(&o);
        let part1 = v["checks"].as_array().unwrap().iter().find(|c| c["name"].as_str().unwrap().starts_with("part 1")).unwrap().clone();
        assert_eq!(part1["status"], "skipped");
        assert!(part1["detail"].as_str().unwrap().starts_with("no normalised integral"));
    }

    #[test]
    fn hopflie_paths() {
        let o = run_args(&["hopflie", "builtin:fZ3", "--ideal", "zero", "--format", "json"]);
        assert_eq!(o.code, 0, "{}", o.stdout);
        let v = json_of(&o);
        assert!(v["checks"].as_array().unwrap().iter().any(|c| c["name"] == "T = ½[,]" && c["status"] == "pass"));
        let o = run_args(&["hopflie", "builtin:fZ3", "--ideal", "zero", "--field", "F2", "--max-degree", "2"]);
        assert_eq!(o.code, 1);
        assert!(o.stdout.contains(&Error::BraidingDefect.to_string()), "{}", o.stdout);
    }

    #[test]
    fn spectral_is_deterministic() {
        let a = run_args(&["spectral", "--count", "3", "--format", "json"]);
        let b = run_args(&["spectral", "--count", "3", "--format", "json"]);
        assert_eq!(a.code, 0, "{}", a.stdout);
        assert_eq!(json_of(&a)["tables"], json_of(&b)["tables"]);
    }
}
