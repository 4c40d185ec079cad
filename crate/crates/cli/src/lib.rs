//! Command dispatch for the invariant calculator: load a group from a
//! preset or config file, run one command against the core library, and
//! print a deterministic report.
//!
//! Exit codes: 0 success, 2 structural validation failure, 3 precondition
//! failure, 4 parse error. Every failure writes a structured JSON
//! diagnostic to stderr naming what was violated.

pub mod config;
pub mod report;

use clap::{Parser, Subcommand, ValueEnum};
use kottwitz_core::adlv::{adlv_pi0, TorsorDescription};
use kottwitz_core::affine_weyl::{admissible_set, length};
use kottwitz_core::kottwitz::{enumerate_b_g_mu, is_basic, is_hn_irreducible, Group, SigmaConjClass};
use kottwitz_core::shtuka::{
    frobenius_orbit_sum, pi0_sht, ArtinNormalization, Level, PresentationMode,
};
use kottwitz_core::tori::{lift_mu, norm_map, z_extension};
use kottwitz_core::RatVec;
use num::{BigInt, BigRational, Zero};
use report::{int_vec_value, int_value, matrix_value, rat_vec_value, usize_vec_value};
use serde_json::{Map, Value};
use std::ffi::OsString;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "kottwitz",
    version,
    about = "Exact invariants of sigma-conjugacy classes and their component sets"
)]
struct Cli {
    /// Preset group, e.g. "GL(3)", "PGL(2)", "Sp(4)", "U(3)", "Res(2)",
    /// or a product like "SL(2)xSL(2)".
    #[arg(long, global = true, conflicts_with = "config")]
    preset: Option<String>,

    /// TOML file with a preset name or explicit
    /// rank/roots/coroots/simple/frobenius data.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Sign convention for the reciprocity identification.
    #[arg(long, global = true, value_enum, default_value_t = ArtinFlag::Arithmetic)]
    artin: ArtinFlag,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ArtinFlag {
    Arithmetic,
    Geometric,
}

impl ArtinFlag {
    fn name(self) -> &'static str {
        match self {
            ArtinFlag::Arithmetic => "arithmetic",
            ArtinFlag::Geometric => "geometric",
        }
    }

    fn normalization(self) -> ArtinNormalization {
        match self {
            ArtinFlag::Arithmetic => ArtinNormalization::Arithmetic,
            ArtinFlag::Geometric => ArtinNormalization::Geometric,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LevelFlag {
    Hyperspecial,
    Infinite,
}

impl LevelFlag {
    fn name(self) -> &'static str {
        match self {
            LevelFlag::Hyperspecial => "hyperspecial",
            LevelFlag::Infinite => "infinite",
        }
    }

    fn level(self) -> Level {
        match self {
            LevelFlag::Hyperspecial => Level::Hyperspecial,
            LevelFlag::Infinite => Level::Infinite,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the structural invariants of the group data.
    Validate,
    /// Fundamental group and its Galois (co)invariants.
    Pi1 {
        /// Report the Galois coinvariants instead of the group itself.
        #[arg(long, conflicts_with = "invariants")]
        coinvariants: bool,
        /// Report the Galois invariants instead of the group itself.
        #[arg(long)]
        invariants: bool,
    },
    /// Enumerate the classes bounded by a dominant cocharacter.
    Bgmu {
        /// Dominant cocharacter: comma-separated integers.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Decide Hodge-Newton irreducibility of a class below mu.
    #[command(name = "hn-irred")]
    HnIrred {
        /// Dominant cocharacter: comma-separated integers.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Newton point: comma-separated rationals "a/b".
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// Kottwitz point in coinvariant coordinates: comma-separated
        /// integers, empty for the trivial group.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        kappa: String,
    },
    /// Component torsor of the affine-flag fiber of a class at
    /// hyperspecial level.
    #[command(name = "adlv-pi0")]
    AdlvPi0 {
        /// Dominant cocharacter: comma-separated integers.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Newton point: comma-separated rationals "a/b".
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// Kottwitz point in coinvariant coordinates.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        kappa: String,
    },
    /// Component description of the moduli space of a class at the chosen
    /// level.
    #[command(name = "sht-pi0")]
    ShtPi0 {
        /// Dominant cocharacter: comma-separated integers.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Newton point: comma-separated rationals "a/b".
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// Kottwitz point in coinvariant coordinates.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        kappa: String,
        /// Level structure to materialize.
        #[arg(long, value_enum)]
        level: LevelFlag,
    },
    /// Admissible set of a dominant cocharacter (split groups).
    Adm {
        /// Dominant cocharacter: comma-separated integers.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Lattice map of the norm morphism along the cocharacter's Frobenius
    /// orbit.
    #[command(name = "norm-map")]
    NormMap {
        /// Cocharacter: comma-separated integers.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Central extension with torsion-free fundamental group.
    Zext,
    /// Lift a dominant cocharacter through the extension.
    #[command(name = "lift-mu")]
    LiftMu {
        /// Dominant cocharacter: comma-separated integers.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
}

pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    stderr: String,
}

fn parse_failure(message: String) -> Failure {
    Failure { code: 4, stderr: report::diagnostic("parse", &message, &[]) }
}

fn core_failure(e: kottwitz_core::Error) -> Failure {
    let (code, kind) = match &e {
        kottwitz_core::Error::Validation(_) => (2, "validation"),
        kottwitz_core::Error::Precondition(_) => (3, "precondition"),
    };
    Failure { code, stderr: report::diagnostic(kind, &e.to_string(), &[]) }
}

pub fn run<I, T>(argv: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => RunOutput {
                    code: 0,
                    stdout: e.to_string(),
                    stderr: String::new(),
                },
                _ => RunOutput {
                    code: 4,
                    stdout: String::new(),
                    stderr: report::diagnostic("parse", &e.to_string(), &[]),
                },
            };
        }
    };
    match execute(&cli) {
        Ok(stdout) => RunOutput { code: 0, stdout, stderr: String::new() },
        Err(f) => RunOutput { code: f.code, stdout: String::new(), stderr: f.stderr },
    }
}

fn execute(cli: &Cli) -> Result<String, Failure> {
    let loaded = match (&cli.preset, &cli.config) {
        (Some(name), None) => config::from_preset(name),
        (None, Some(path)) => config::from_file(path),
        (None, None) => {
            return Err(parse_failure("give a group with --preset or --config".into()))
        }
        (Some(_), Some(_)) => unreachable!("clap rejects the conflict"),
    }
    .map_err(|e| match e {
        config::LoadError::Parse(msg) => parse_failure(msg),
        config::LoadError::Validation(msg) => Failure {
            code: 2,
            stderr: report::diagnostic("validation", &msg, &[]),
        },
    })?;

    let rep = loaded.rd.validate(&loaded.fr);
    if !rep.is_valid() {
        return Err(Failure {
            code: 2,
            stderr: report::diagnostic(
                "validation",
                "group data fails structural validation",
                &rep.violations,
            ),
        });
    }
    let g = Group::new_unchecked(loaded.rd, loaded.fr);
    let fingerprint = report::fingerprint(&g.rd, &g.fr);

    let (command, mut inputs, outputs) = match &cli.command {
        Cmd::Validate => ("validate", Map::new(), cmd_validate()),
        Cmd::Pi1 { coinvariants, invariants } => {
            let (i, o) = cmd_pi1(&g, *coinvariants, *invariants);
            ("pi1", i, o)
        }
        Cmd::Bgmu { mu } => {
            let (i, o) = cmd_bgmu(&g, mu)?;
            ("bgmu", i, o)
        }
        Cmd::HnIrred { mu, nu, kappa } => {
            let (i, o) = cmd_hn_irred(&g, mu, nu, kappa)?;
            ("hn-irred", i, o)
        }
        Cmd::AdlvPi0 { mu, nu, kappa } => {
            let (i, o) = cmd_adlv_pi0(&g, mu, nu, kappa)?;
            ("adlv-pi0", i, o)
        }
        Cmd::ShtPi0 { mu, nu, kappa, level } => {
            let (i, o) = cmd_sht_pi0(&g, mu, nu, kappa, *level, cli.artin)?;
            ("sht-pi0", i, o)
        }
        Cmd::Adm { mu } => {
            let (i, o) = cmd_adm(&g, mu)?;
            ("adm", i, o)
        }
        Cmd::NormMap { mu } => {
            let (i, o) = cmd_norm_map(&g, mu, cli.artin)?;
            ("norm-map", i, o)
        }
        Cmd::Zext => {
            let (i, o) = cmd_zext(&g)?;
            ("zext", i, o)
        }
        Cmd::LiftMu { mu } => {
            let (i, o) = cmd_lift_mu(&g, mu)?;
            ("lift-mu", i, o)
        }
    };
    if let Some(label) = &loaded.label {
        inputs.insert("label".into(), Value::String(label.clone()));
    }

    let value = report::assemble(command, fingerprint, inputs, outputs, cli.artin.name());
    Ok(match cli.format {
        Format::Json => {
            let mut text = value.to_string();
            text.push('\n');
            text
        }
        Format::Pretty => report::pretty(&value),
    })
}

fn parse_int_vec(s: &str, what: &str) -> Result<Vec<BigInt>, Failure> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<BigInt>()
                .map_err(|_| parse_failure(format!("bad integer '{t}' in {what}")))
        })
        .collect()
}

fn parse_rat_vec(s: &str, what: &str) -> Result<RatVec, Failure> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(RatVec::from_components(&[]));
    }
    let comps: Vec<BigRational> = s
        .split(',')
        .map(|t| parse_rat(t.trim(), what))
        .collect::<Result<_, _>>()?;
    Ok(RatVec::from_components(&comps))
}

fn parse_rat(t: &str, what: &str) -> Result<BigRational, Failure> {
    match t.split_once('/') {
        None => t
            .parse::<BigInt>()
            .map(BigRational::from)
            .map_err(|_| parse_failure(format!("bad rational '{t}' in {what}"))),
        Some((a, b)) => {
            let numer = a
                .trim()
                .parse::<BigInt>()
                .map_err(|_| parse_failure(format!("bad rational '{t}' in {what}")))?;
            let denom = b
                .trim()
                .parse::<BigInt>()
                .map_err(|_| parse_failure(format!("bad rational '{t}' in {what}")))?;
            if denom.is_zero() {
                return Err(parse_failure(format!("zero denominator in '{t}' of {what}")));
            }
            Ok(BigRational::new(numer, denom))
        }
    }
}

fn require_len(v_len: usize, rank: usize, what: &str) -> Result<(), Failure> {
    if v_len != rank {
        return Err(core_failure(kottwitz_core::Error::precondition(format!(
            "{what} has {v_len} coordinates, the group has rank {rank}"
        ))));
    }
    Ok(())
}

/// Build the class (nu, kappa) against the group, surfacing the validating
/// constructor's preconditions.
fn class_from_args(
    g: &Group,
    nu_s: &str,
    kappa_s: &str,
) -> Result<(SigmaConjClass, RatVec, Vec<BigInt>), Failure> {
    let nu = parse_rat_vec(nu_s, "--nu")?;
    let kappa = parse_int_vec(kappa_s, "--kappa")?;
    let c = SigmaConjClass::new(g, nu.clone(), kappa.clone()).map_err(core_failure)?;
    Ok((c, nu, kappa))
}

fn cmd_validate() -> Map<String, Value> {
    // Reaching this point means validation already passed.
    let mut outputs = Map::new();
    outputs.insert("valid".into(), Value::Bool(true));
    outputs.insert("violations".into(), Value::Array(vec![]));
    outputs
}

fn cmd_pi1(g: &Group, coinvariants: bool, invariants: bool) -> (Map<String, Value>, Map<String, Value>) {
    let mut inputs = Map::new();
    let mut outputs = Map::new();
    let target = if coinvariants {
        "coinvariants"
    } else if invariants {
        "invariants"
    } else {
        "pi1"
    };
    inputs.insert("target".into(), Value::String(target.into()));
    if invariants {
        let sub = g.pi1.invariants(&g.fr);
        outputs.insert(
            "generators".into(),
            Value::Array(sub.generators.iter().map(|v| int_vec_value(v)).collect()),
        );
        outputs.insert("invariant_factors".into(), int_vec_value(&sub.invariant_factors));
    } else if coinvariants {
        outputs.insert(
            "invariant_factors".into(),
            int_vec_value(&g.pi1.coinvariants.invariant_factors()),
        );
    } else {
        outputs.insert(
            "invariant_factors".into(),
            int_vec_value(&g.pi1.pi1.invariant_factors()),
        );
    }
    (inputs, outputs)
}

/// What every fallible command handler produces: the echoed inputs and the
/// computed outputs of the report.
type CmdResult = Result<(Map<String, Value>, Map<String, Value>), Failure>;

fn cmd_bgmu(g: &Group, mu_s: &str) -> CmdResult {
    let mu = parse_int_vec(mu_s, "--mu")?;
    require_len(mu.len(), g.rd.rank, "--mu")?;
    let classes = enumerate_b_g_mu(g, &mu).map_err(core_failure)?;
    let mut inputs = Map::new();
    inputs.insert("mu".into(), int_vec_value(&mu));
    let mut rows = Vec::new();
    for c in &classes {
        let mut row = Map::new();
        row.insert("basic".into(), Value::Bool(is_basic(g, c)));
        row.insert(
            "hn_irreducible".into(),
            Value::Bool(is_hn_irreducible(g, c, &mu).map_err(core_failure)?),
        );
        row.insert("kappa".into(), int_vec_value(&c.kappa));
        row.insert("newton".into(), rat_vec_value(&c.newton));
        rows.push(Value::Object(row));
    }
    let mut outputs = Map::new();
    outputs.insert("classes".into(), Value::Array(rows));
    outputs.insert("count".into(), Value::from(classes.len() as u64));
    Ok((inputs, outputs))
}

fn cmd_hn_irred(
    g: &Group,
    mu_s: &str,
    nu_s: &str,
    kappa_s: &str,
) -> CmdResult {
    let mu = parse_int_vec(mu_s, "--mu")?;
    require_len(mu.len(), g.rd.rank, "--mu")?;
    let (c, nu, kappa) = class_from_args(g, nu_s, kappa_s)?;
    let hn = is_hn_irreducible(g, &c, &mu).map_err(core_failure)?;
    let mut inputs = Map::new();
    inputs.insert("kappa".into(), int_vec_value(&kappa));
    inputs.insert("mu".into(), int_vec_value(&mu));
    inputs.insert("nu".into(), rat_vec_value(&nu));
    let mut outputs = Map::new();
    outputs.insert("hn_irreducible".into(), Value::Bool(hn));
    outputs.insert("in_b_g_mu".into(), Value::Bool(true));
    Ok((inputs, outputs))
}

fn torsor_value(t: &TorsorDescription) -> Value {
    let mut acting = Map::new();
    acting.insert(
        "generators".into(),
        Value::Array(t.acting_group.generators.iter().map(|v| int_vec_value(v)).collect()),
    );
    acting.insert(
        "invariant_factors".into(),
        int_vec_value(&t.acting_group.invariant_factors),
    );
    let mut m = Map::new();
    m.insert("acting_group".into(), Value::Object(acting));
    m.insert("canonical_choice".into(), Value::Bool(t.canonical_choice));
    m.insert(
        "cardinality".into(),
        t.cardinality.as_ref().map(int_value).unwrap_or(Value::Null),
    );
    m.insert("coset_label".into(), int_vec_value(&t.coset_label));
    Value::Object(m)
}

fn cmd_adlv_pi0(
    g: &Group,
    mu_s: &str,
    nu_s: &str,
    kappa_s: &str,
) -> CmdResult {
    let mu = parse_int_vec(mu_s, "--mu")?;
    require_len(mu.len(), g.rd.rank, "--mu")?;
    let (c, nu, kappa) = class_from_args(g, nu_s, kappa_s)?;
    let torsor = adlv_pi0(g, &c, &mu).map_err(core_failure)?;
    let mut inputs = Map::new();
    inputs.insert("kappa".into(), int_vec_value(&kappa));
    inputs.insert("mu".into(), int_vec_value(&mu));
    inputs.insert("nu".into(), rat_vec_value(&nu));
    let mut outputs = Map::new();
    outputs.insert("torsor".into(), torsor_value(&torsor));
    Ok((inputs, outputs))
}

fn cmd_sht_pi0(
    g: &Group,
    mu_s: &str,
    nu_s: &str,
    kappa_s: &str,
    level: LevelFlag,
    artin: ArtinFlag,
) -> CmdResult {
    let mu = parse_int_vec(mu_s, "--mu")?;
    require_len(mu.len(), g.rd.rank, "--mu")?;
    let (c, nu, kappa) = class_from_args(g, nu_s, kappa_s)?;
    let comps =
        pi0_sht(g, &c, &mu, level.level(), artin.normalization()).map_err(core_failure)?;

    let mut inputs = Map::new();
    inputs.insert("kappa".into(), int_vec_value(&kappa));
    inputs.insert("level".into(), Value::String(level.name().into()));
    inputs.insert("mu".into(), int_vec_value(&mu));
    inputs.insert("nu".into(), rat_vec_value(&nu));

    let mut g_circle = Map::new();
    g_circle.insert("cocenter_rank".into(), Value::from(comps.g_circle.cocenter.rd.rank as u64));
    g_circle.insert(
        "cokernel_factors".into(),
        int_vec_value(&comps.g_circle.cokernel().invariant_factors()),
    );
    g_circle.insert("kernel_map".into(), matrix_value(&comps.g_circle.kernel_map));
    g_circle.insert(
        "mode".into(),
        Value::String(
            match comps.g_circle.mode {
                PresentationMode::Direct => "direct",
                PresentationMode::ViaZExtension => "via_z_extension",
            }
            .into(),
        ),
    );
    g_circle.insert("projection".into(), matrix_value(&comps.g_circle.projection));

    let mut weil = Map::new();
    weil.insert("composite".into(), matrix_value(&comps.weil.composite()));
    weil.insert("lifted_cocharacter".into(), int_vec_value(&comps.weil.lifted_cocharacter));
    weil.insert("norm_lattice_map".into(), matrix_value(&comps.weil.norm_lattice_map));
    weil.insert("reflex_degree".into(), Value::from(comps.weil.reflex_degree as u64));

    let mut jb = Map::new();
    jb.insert("composite".into(), matrix_value(&comps.jb.composite));
    jb.insert("inverse_translation".into(), Value::Bool(comps.jb.inverse_translation));
    jb.insert(
        "levi_shadow_factors".into(),
        int_vec_value(&comps.jb.levi_shadow.invariant_factors()),
    );
    jb.insert(
        "levi_simple_positions".into(),
        usize_vec_value(&comps.jb.levi.simple_positions),
    );
    jb.insert(
        "lifted_levi_simple_positions".into(),
        usize_vec_value(&comps.jb.lifted_levi.simple_positions),
    );

    let mut outputs = Map::new();
    outputs.insert(
        "frobenius_translation".into(),
        comps
            .frobenius_translation
            .as_ref()
            .map(|v| int_vec_value(v))
            .unwrap_or(Value::Null),
    );
    outputs.insert("g_circle".into(), Value::Object(g_circle));
    outputs.insert("jb".into(), Value::Object(jb));
    outputs.insert("level".into(), Value::String(level.name().into()));
    outputs.insert(
        "torsor".into(),
        comps.torsor.as_ref().map(torsor_value).unwrap_or(Value::Null),
    );
    outputs.insert("weil".into(), Value::Object(weil));
    Ok((inputs, outputs))
}

fn cmd_adm(g: &Group, mu_s: &str) -> CmdResult {
    let mu = parse_int_vec(mu_s, "--mu")?;
    require_len(mu.len(), g.rd.rank, "--mu")?;
    let elements = admissible_set(g, &mu).map_err(core_failure)?;
    let mut inputs = Map::new();
    inputs.insert("mu".into(), int_vec_value(&mu));
    let mut rows = Vec::new();
    for x in &elements {
        let mut row = Map::new();
        row.insert("finite_matrix".into(), matrix_value(&x.finite_matrix));
        row.insert("length".into(), Value::from(length(g, x).map_err(core_failure)? as u64));
        row.insert("omega".into(), int_vec_value(&x.omega_component));
        row.insert("translation".into(), int_vec_value(&x.translation));
        rows.push(Value::Object(row));
    }
    let mut outputs = Map::new();
    outputs.insert("count".into(), Value::from(elements.len() as u64));
    outputs.insert("elements".into(), Value::Array(rows));
    Ok((inputs, outputs))
}

fn cmd_norm_map(
    g: &Group,
    mu_s: &str,
    artin: ArtinFlag,
) -> CmdResult {
    let mu = parse_int_vec(mu_s, "--mu")?;
    require_len(mu.len(), g.rd.rank, "--mu")?;
    let matrix = norm_map(&g.fr, &mu).map_err(core_failure)?;
    let orbit_sum = frobenius_orbit_sum(g, &mu);
    let translation = match artin.normalization() {
        ArtinNormalization::Arithmetic => orbit_sum.clone(),
        ArtinNormalization::Geometric => g.pi1.pi1.neg(&orbit_sum),
    };
    let mut inputs = Map::new();
    inputs.insert("mu".into(), int_vec_value(&mu));
    let mut outputs = Map::new();
    outputs.insert("matrix".into(), matrix_value(&matrix));
    outputs.insert("orbit_sum".into(), int_vec_value(&orbit_sum));
    outputs.insert(
        "reflex_degree".into(),
        Value::from(g.rd.reflex_degree(&g.fr, &mu) as u64),
    );
    outputs.insert("translation".into(), int_vec_value(&translation));
    Ok((inputs, outputs))
}

fn cmd_zext(g: &Group) -> CmdResult {
    let z = z_extension(g).map_err(core_failure)?;
    let mut outputs = Map::new();
    outputs.insert("identity".into(), Value::Bool(z.is_identity()));
    outputs.insert(
        "kernel_degrees".into(),
        Value::Array(z.kernel.iter().map(|b| Value::from(b.degree as u64)).collect()),
    );
    outputs.insert("quotient_map".into(), matrix_value(&z.quotient_map));
    outputs.insert(
        "source_pi1_factors".into(),
        int_vec_value(&z.source.pi1.pi1.invariant_factors()),
    );
    outputs.insert("source_rank".into(), Value::from(z.source.rd.rank as u64));
    outputs.insert(
        "target_pi1_factors".into(),
        int_vec_value(&z.target.pi1.pi1.invariant_factors()),
    );
    Ok((Map::new(), outputs))
}

fn cmd_lift_mu(g: &Group, mu_s: &str) -> CmdResult {
    let mu = parse_int_vec(mu_s, "--mu")?;
    require_len(mu.len(), g.rd.rank, "--mu")?;
    g.require_dominant(&mu).map_err(core_failure)?;
    let z = z_extension(g).map_err(core_failure)?;
    let lifted = lift_mu(&z, &mu).map_err(core_failure)?;
    let mut inputs = Map::new();
    inputs.insert("mu".into(), int_vec_value(&mu));
    let mut outputs = Map::new();
    outputs.insert("lifted".into(), int_vec_value(&lifted));
    outputs.insert(
        "projects_back".into(),
        Value::Bool(z.project_cochar(&lifted) == mu),
    );
    outputs.insert(
        "reflex_degree".into(),
        Value::from(z.source.rd.reflex_degree(&z.source.fr, &lifted) as u64),
    );
    Ok((inputs, outputs))
}
