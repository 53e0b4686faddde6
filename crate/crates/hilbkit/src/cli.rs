//! The `hilbkit` command line. Output is JSON on stdout, or plain text with
//! `--pretty`. Exit codes: 0 success, 1 domain error, 2 usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use hilbkit_core::border_basis::{chart_equations, normal_form, BorderCoefficients};
use hilbkit_core::exactpoly::{format_rational, Polynomial};
use hilbkit_core::fixtures::{border_coeffs_from_points, plucker_fixture};
use hilbkit_core::hilbert_equations::{membership, Kind, LinearForm, Mode, Scope};
use hilbkit_core::monomial::{parse_monomial, Exponent, MonomialBasis, Space};
use hilbkit_core::pluecker::PlueckerPoint;
use hilbkit_core::tangent_space::tangent_system;
use hilbkit_core::Error;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use crate::json::{
    kind_from_name, poly_to_json, BorderCoefficientsJson, ChartEquationsJson, EquationSetJson, ExponentJson,
    FixtureJson, PlueckerPointJson,
};
use crate::parallel;
use crate::sampling::Sampler;

#[derive(Debug, Parser)]
#[command(name = "hilbkit", version, about = "Equations of punctual Hilbert schemes of projective space")]
pub struct Cli {
    /// Human-readable text instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Commutation equations of the border basis chart of a monomial basis.
    ChartEqs(ChartEqsArgs),
    /// Quadratic equations in Plücker coordinates.
    GlobalEqs(GlobalEqsArgs),
    /// Decide whether a Plücker point lies on the Hilbert scheme.
    CheckMembership(CheckMembershipArgs),
    /// Tangent space dimension at a chart point.
    TangentDim(TangentDimArgs),
    /// Seeded point configuration and its Plücker point.
    MakeFixture(MakeFixtureArgs),
    /// Coordinates of the normal form of a polynomial on the basis.
    NormalForm(NormalFormArgs),
}

#[derive(Debug, Args)]
pub struct ChartEqsArgs {
    /// Basis monomials, e.g. "1,x".
    #[arg(long)]
    pub basis: String,
    /// Affine variable names, e.g. "x,y"; fixes the number of variables.
    #[arg(long, conflicts_with = "n")]
    pub vars: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GlobalEqsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub mu: usize,
    #[arg(long)]
    pub d: u32,
    /// Linear form in x0..xn; repeatable. Defaults to x0, .., xn.
    #[arg(long, conflicts_with = "full_k")]
    pub u: Vec<String>,
    /// Coefficients in a symbolic u instead of fixed forms.
    #[arg(long)]
    pub full_k: bool,
    /// Family of mu monomials of degree d-1, e.g. "x0,x1"; repeatable.
    #[arg(long)]
    pub basis: Vec<String>,
    /// commutation, generation or two-grassmannian; repeatable.
    #[arg(long, default_values = ["commutation", "generation"])]
    pub kind: Vec<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckMembershipArgs {
    /// Plücker point JSON, or make-fixture output.
    #[arg(long)]
    pub point: PathBuf,
    /// Evaluate this global-eqs output instead of the built-in test.
    #[arg(long)]
    pub equations: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TangentDimArgs {
    /// Needed when `--z` holds a point configuration.
    #[arg(long)]
    pub basis: Option<String>,
    /// Border coefficients JSON, or make-fixture output.
    #[arg(long)]
    pub z: PathBuf,
    /// Also print a kernel basis.
    #[arg(long)]
    pub kernel: bool,
}

#[derive(Debug, Args)]
pub struct MakeFixtureArgs {
    #[arg(long, required_unless_present = "from")]
    pub n: Option<usize>,
    #[arg(long, required_unless_present = "from")]
    pub mu: Option<usize>,
    /// Degree of the Plücker point; defaults to mu.
    #[arg(long)]
    pub d: Option<u32>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Replace two simple points by one double point.
    #[arg(long)]
    pub double: bool,
    /// Also interpolate border coefficients on this basis.
    #[arg(long)]
    pub basis: Option<String>,
    /// Coordinates are drawn from [-range, range].
    #[arg(long, default_value_t = 5)]
    pub range: i64,
    /// Read the configuration instead of sampling it.
    #[arg(long, conflicts_with_all = ["n", "mu", "double"])]
    pub from: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct NormalFormArgs {
    /// Border coefficients JSON, or make-fixture output.
    #[arg(long)]
    pub z: PathBuf,
    /// Polynomial in the affine variables, e.g. "y^3 - 2*x".
    #[arg(long)]
    pub poly: String,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

pub fn error_code(e: &Error) -> &'static str {
    match e {
        Error::DimensionMismatch { .. } => "dimension_mismatch",
        Error::DegreeOverflow { .. } => "degree_overflow",
        Error::InvalidBasis(_) => "invalid_basis",
        Error::IncompleteCoefficients(_) => "incomplete_coefficients",
        Error::NotCommuting => "not_commuting",
        Error::Codimension { .. } => "codimension",
        Error::DegreeMismatch { .. } => "degree_mismatch",
        Error::SizeMismatch(_) => "size_mismatch",
        Error::NotGrassmannianPoint => "not_grassmannian_point",
        Error::SingularEvaluation => "singular_evaluation",
        Error::DegenerateConfiguration(_) => "degenerate_configuration",
        Error::DegreeBelowLength { .. } => "degree_below_length",
        Error::Parse(_) => "parse",
        Error::InvalidArgument(_) => "invalid_argument",
    }
}

struct Output {
    json: Value,
    text: String,
}

/// Parses `argv` (including the program name) and runs the command.
/// Returns the exit code and what to print on stdout.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, e.to_string()),
                _ => (2, error_json("usage", &e.render().to_string())),
            };
        }
    };
    let result = match &cli.command {
        Command::ChartEqs(a) => chart_eqs(a),
        Command::GlobalEqs(a) => global_eqs(a),
        Command::CheckMembership(a) => check_membership(a),
        Command::TangentDim(a) => tangent_dim(a),
        Command::MakeFixture(a) => make_fixture(a),
        Command::NormalForm(a) => normal_form_cmd(a),
    };
    match result {
        Ok(out) if cli.pretty => (0, out.text),
        Ok(out) => (0, serde_json::to_string(&out.json).expect("values serialize")),
        Err(CliError::Usage(m)) => (2, error_json("usage", &m)),
        Err(CliError::Domain(e)) => (1, error_json(error_code(&e), &e.to_string())),
    }
}

fn error_json(code: &str, message: &str) -> String {
    json!({"error": code, "message": message.trim_end()}).to_string()
}

fn to_value(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("values serialize")
}

fn read_value(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// `v[key]` when `v` is an object wrapping the payload under `key`.
fn unwrap_field(v: Value, key: &str) -> Value {
    match v {
        Value::Object(mut m) if m.contains_key(key) => m.remove(key).expect("key present"),
        other => other,
    }
}

fn decode<T: DeserializeOwned>(v: Value, path: &Path) -> Result<T, CliError> {
    serde_json::from_value(v).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_out(path: &Option<PathBuf>, json: &Value) -> Result<Option<String>, CliError> {
    match path {
        None => Ok(None),
        Some(p) => {
            std::fs::write(p, serde_json::to_string(json).expect("values serialize"))
                .map_err(|e| usage(format!("{}: {e}", p.display())))?;
            Ok(Some(p.display().to_string()))
        }
    }
}

fn parse_vars(vars: &str) -> Result<usize, CliError> {
    let names: Vec<&str> = vars.split(',').map(str::trim).collect();
    let n = names.len();
    for (i, name) in names.iter().enumerate() {
        let e = parse_monomial(name, n, Space::Affine).map_err(usage)?;
        if e != Exponent::unit(n, i) {
            return Err(usage(format!("variable {name:?} out of order in {vars:?}")));
        }
    }
    Ok(n)
}

fn chart_eqs(a: &ChartEqsArgs) -> Result<Output, CliError> {
    let n = match (&a.vars, a.n) {
        (Some(v), _) => parse_vars(v)?,
        (None, Some(n)) => n,
        (None, None) => return Err(usage("one of --vars or --n is required")),
    };
    let basis = MonomialBasis::parse(&a.basis, n).map_err(usage)?;
    let c = chart_equations(&basis);
    let json = to_value(&ChartEquationsJson::from_chart(&c));
    let mut text = String::new();
    let _ = writeln!(text, "basis: {}", basis.render().join(", "));
    let border: Vec<String> = c.border.boundary().iter().map(|e| e.render(Space::Affine)).collect();
    let _ = writeln!(text, "border: {}", border.join(", "));
    let _ = writeln!(text, "{} equations:", c.equations.len());
    for e in &c.equations {
        let _ = writeln!(text, "  {e}");
    }
    Ok(match write_out(&a.out, &json)? {
        Some(p) => Output {
            json: json!({"out": p, "equations": c.equations.len()}),
            text: format!("{text}written to {p}\n"),
        },
        None => Output { json, text },
    })
}

fn global_eqs(a: &GlobalEqsArgs) -> Result<Output, CliError> {
    let mut scope = Scope::new(a.n, a.d, a.mu).map_err(usage)?;
    if !a.basis.is_empty() {
        let families = a
            .basis
            .iter()
            .map(|f| {
                f.split(',')
                    .map(|m| parse_monomial(m, a.n + 1, Space::Projective))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(usage)?;
        scope = scope.with_families(families).map_err(usage)?;
    }
    let kinds = a.kind.iter().map(|k| kind_from_name(k)).collect::<Result<Vec<Kind>, _>>().map_err(usage)?;
    let mode = if a.full_k {
        Mode::FullK
    } else if a.u.is_empty() {
        Mode::UFixed((0..=a.n).map(|i| LinearForm::variable(a.n, i)).collect())
    } else {
        Mode::UFixed(
            a.u.iter()
                .map(|s| LinearForm::parse(s, a.n))
                .collect::<Result<Vec<_>, _>>()
                .map_err(usage)?,
        )
    };
    let set = parallel::generate(&scope, &kinds, &mode);
    let json = to_value(&EquationSetJson::from_set(&set));
    let mut text = String::new();
    let _ = writeln!(
        text,
        "n = {}, d = {}, mu = {}; {} equations, {} trivial generators dropped",
        a.n,
        a.d,
        a.mu,
        set.equations.len(),
        set.dropped_trivial
    );
    for e in &set.equations {
        let _ = writeln!(text, "  {e}");
    }
    Ok(match write_out(&a.out, &json)? {
        Some(p) => Output {
            json: json!({"out": p, "equations": set.equations.len(), "dropped_trivial": set.dropped_trivial}),
            text: format!("{text}written to {p}\n"),
        },
        None => Output { json, text },
    })
}

fn read_point(path: &Path) -> Result<PlueckerPoint, CliError> {
    let v = unwrap_field(read_value(path)?, "point");
    let p: PlueckerPointJson = decode(v, path)?;
    p.to_point().map_err(usage)
}

fn check_membership(a: &CheckMembershipArgs) -> Result<Output, CliError> {
    let p = read_point(&a.point)?;
    let (member, witness) = match &a.equations {
        None => {
            let m = membership(&p)?;
            (m.member, m.witness)
        }
        Some(path) => {
            let set: EquationSetJson = decode(read_value(path)?, path)?;
            let set = set.to_set().map_err(usage)?;
            if (set.scope.n, set.scope.d, set.scope.mu) != (p.n(), p.d(), p.mu()) {
                return Err(usage("equations and point have different n, d or mu"));
            }
            let bad = parallel::first_nonvanishing(&set.equations, &p);
            (bad.is_none(), bad.map(|i| set.equations[i].clone()))
        }
    };
    let text = match &witness {
        None => format!("member: {member}\n"),
        Some(w) => format!("member: {member}\nwitness: {w}\n"),
    };
    Ok(Output {
        json: json!({"member": member, "witness": witness.as_ref().map(poly_to_json)}),
        text,
    })
}

fn read_z(path: &Path, basis: Option<&str>) -> Result<BorderCoefficients, CliError> {
    let v = read_value(path)?;
    let v = match v {
        Value::Object(ref m) if m.get("z").is_some_and(|z| !z.is_null()) => unwrap_field(v, "z"),
        other => unwrap_field(other, "fixture"),
    };
    let z = if v.get("values").is_some() {
        let z: BorderCoefficientsJson = decode(v, path)?;
        z.to_coefficients().map_err(usage)?
    } else {
        let f: FixtureJson = decode(v, path)?;
        let c = f.to_configuration().map_err(usage)?;
        let b = basis.ok_or_else(|| usage("--basis is required to interpolate a point configuration"))?;
        let b = MonomialBasis::parse(b, c.n()).map_err(usage)?;
        border_coeffs_from_points(&b, &c)?
    };
    if let Some(b) = basis {
        let b = MonomialBasis::parse(b, z.basis().n()).map_err(usage)?;
        if &b != z.basis() {
            return Err(usage("--basis differs from the basis of the coefficients"));
        }
    }
    Ok(z)
}

fn rational_strings(v: &[hilbkit_core::Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn tangent_dim(a: &TangentDimArgs) -> Result<Output, CliError> {
    let z = read_z(&a.z, a.basis.as_deref())?;
    let t = tangent_system(z.basis(), &z)?;
    let dimension = t.dimension();
    let mut json = json!({"dimension": dimension, "unknowns": t.unknowns()});
    let mut text = format!("dimension: {dimension} ({} unknowns)\n", t.unknowns());
    if a.kernel {
        let kernel: Vec<Vec<String>> = t.kernel().iter().map(|v| rational_strings(v)).collect();
        for v in &kernel {
            let _ = writeln!(text, "  [{}]", v.join(", "));
        }
        json["kernel"] = to_value(&kernel);
    }
    Ok(Output { json, text })
}

fn make_fixture(a: &MakeFixtureArgs) -> Result<Output, CliError> {
    let (config, seed, d) = match &a.from {
        Some(path) => {
            let f: FixtureJson = decode(unwrap_field(read_value(path)?, "fixture"), path)?;
            let c = f.to_configuration().map_err(usage)?;
            (c, f.seed, a.d.unwrap_or(f.d))
        }
        None => {
            let (n, mu) = (a.n.expect("required by clap"), a.mu.expect("required by clap"));
            let d = a.d.unwrap_or(mu as u32);
            if (d as usize) < mu {
                return Err(usage(format!("--d {d} is below --mu {mu}")));
            }
            if a.double && mu < 2 {
                return Err(usage("--double needs mu >= 2"));
            }
            let c = Sampler::new(a.seed)
                .with_range(a.range)
                .configuration(n, mu, d, a.double)
                .ok_or_else(|| Error::DegenerateConfiguration("no configuration found for this seed".into()))?;
            (c, Some(a.seed), d)
        }
    };
    let point = plucker_fixture(&config, d)?;
    let z = match &a.basis {
        None => None,
        Some(b) => {
            let b = MonomialBasis::parse(b, config.n()).map_err(usage)?;
            Some(border_coeffs_from_points(&b, &config)?)
        }
    };
    let fixture = FixtureJson::from_configuration(&config, d, seed);
    let mut text = format!("n = {}, mu = {}, d = {d}\npoints:\n", config.n(), config.length());
    for p in config.points() {
        let _ = writeln!(text, "  ({})", rational_strings(p.point()).join(" : "));
    }
    let _ = writeln!(text, "{} nonzero Plücker coordinates", point.coords().len());
    if let Some(z) = &z {
        for ((al, be), v) in z.values() {
            let _ = writeln!(
                text,
                "  z[{}|{}] = {}",
                al.render(Space::Affine),
                be.render(Space::Affine),
                format_rational(v)
            );
        }
    }
    Ok(Output {
        json: json!({
            "fixture": to_value(&fixture),
            "point": to_value(&PlueckerPointJson::from_point(&point)),
            "z": z.as_ref().map(|z| to_value(&BorderCoefficientsJson::from_coefficients(z))),
        }),
        text,
    })
}

fn normal_form_cmd(a: &NormalFormArgs) -> Result<Output, CliError> {
    let z = read_z(&a.z, None)?;
    let n = z.basis().n();
    let p = Polynomial::parse(&a.poly, n, Space::Affine).map_err(usage)?;
    let coords = normal_form(&z, &p)?;
    let basis: Vec<ExponentJson> = z.basis().elements().iter().map(ExponentJson::from_exponent).collect();
    let nf = Polynomial::from_coefficients(n, z.basis().elements(), &coords);
    Ok(Output {
        json: json!({"space": "affine", "basis": to_value(&basis), "coords": rational_strings(&coords)}),
        text: format!("{}\n", nf.render(Space::Affine)),
    })
}
