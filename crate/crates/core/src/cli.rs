//! Command-line front end: `energy`, `sweep`, `critical`, `verify`, `convert`.
//!
//! Results go to stdout as one JSON document (or a text table for `verify`);
//! failures go to stderr as `{"code": ..., "message": ...}` with exit status 2.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::backgrounds::{cylinder_drag_velocity, kerr_drag_angular_velocity};
use crate::casimir::casimir_energy_density;
use crate::error::{Error, Result};
use crate::geometry::{BoundaryCondition, CavityConfig, Orientation};
use crate::oracle::verify_all;
use crate::regimes::{CriticalSet, Observer};
use crate::sweep::{self, SweepBackground, SweepSpec};
use crate::units::{self, Direction, QuantityKind, UnitSystem};

/// Exit status for rejected input or failed computation.
pub const EXIT_ERROR: i32 = 2;
/// Exit status when `verify` finds a gap above tolerance.
pub const EXIT_VERIFY_FAILED: i32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "casimir",
    version,
    about = "Casimir energy between plates in stationary spacetimes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Energy density at a single observer.
    Energy(EnergyArgs),
    /// Regime map over a radius/velocity grid, written as CSV.
    Sweep(SweepArgs),
    /// Drag, bound, zero-energy, sign-flip and geodesic velocities.
    Critical(BackgroundArgs),
    /// Dual-path oracle checks.
    Verify(VerifyArgs),
    /// Unit conversion.
    Convert(ConvertArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackgroundKind {
    Flat,
    Cylinder,
    Kerr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrientationArg {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BcArg {
    Dirichlet,
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum UnitsArg {
    Geometric,
    Si,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    MassKg,
    MassSolar,
    AngularVelocitySi,
    LengthM,
    FieldMassKg,
    EnergyDensityGeometric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DirectionArg {
    ToGeometric,
    ToSi,
}

/// A velocity given as a number or as `drag`/`zamo` (the dragging value).
#[derive(Debug, Clone, Copy, PartialEq)]
enum Velocity {
    Value(f64),
    Drag,
}

impl FromStr for Velocity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "drag" | "zamo" => Ok(Velocity::Drag),
            _ => s
                .parse()
                .map(Velocity::Value)
                .map_err(|_| format!("expected a number, `drag` or `zamo`, got `{s}`")),
        }
    }
}

#[derive(Debug, Args)]
struct BackgroundArgs {
    #[arg(long, value_enum, default_value = "flat")]
    background: BackgroundKind,
    /// Cylinder rotation parameter.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<f64>,
    #[arg(long)]
    r: Option<f64>,
    /// Cylinder apparatus velocity.
    #[arg(long, allow_hyphen_values = true)]
    v: Option<Velocity>,
    /// Kerr mass (kg with `--units si`).
    #[arg(long = "M")]
    big_m: Option<f64>,
    /// Kerr spin length.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    /// Kerr apparatus angular velocity (rad/s with `--units si`).
    #[arg(long, allow_hyphen_values = true)]
    omega: Option<Velocity>,
    #[arg(long, value_enum, default_value = "geometric")]
    units: UnitsArg,
}

#[derive(Debug, Args)]
struct CavityArgs {
    #[arg(long, value_enum, default_value = "x")]
    orientation: OrientationArg,
    #[arg(long, value_enum, default_value = "dirichlet")]
    bc: BcArg,
    /// Field mass (inverse length, or kg with `--units si`).
    #[arg(long, default_value_t = 0.0)]
    mass: f64,
    /// Coordinate plate separation.
    #[arg(long = "L", default_value_t = 1.0)]
    plate_separation: f64,
}

#[derive(Debug, Args)]
struct EnergyArgs {
    #[command(flatten)]
    background: BackgroundArgs,
    #[command(flatten)]
    cavity: CavityArgs,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    background: BackgroundKind,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<f64>,
    #[arg(long = "M")]
    big_m: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(long)]
    r_min: f64,
    #[arg(long)]
    r_max: f64,
    #[arg(long, default_value_t = 200)]
    r_steps: usize,
    /// Fixed lower velocity; omit both limits to span each radius's band.
    #[arg(long, allow_hyphen_values = true, requires = "omega_max")]
    omega_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true, requires = "omega_min")]
    omega_max: Option<f64>,
    #[arg(long, default_value_t = 200)]
    omega_steps: usize,
    #[arg(long, value_enum, default_value = "dirichlet")]
    bc: BcArg,
    #[arg(long, default_value_t = 0.0)]
    mass: f64,
    #[arg(long = "L", default_value_t = 1.0)]
    plate_separation: f64,
    #[arg(long, value_enum, default_value = "geometric")]
    units: UnitsArg,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    samples: u64,
}

#[derive(Debug, Args)]
struct ConvertArgs {
    #[arg(long, allow_hyphen_values = true)]
    value: f64,
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long, value_enum, default_value = "to-geometric")]
    direction: DirectionArg,
}

impl From<OrientationArg> for Orientation {
    fn from(o: OrientationArg) -> Self {
        match o {
            OrientationArg::X => Orientation::X,
            OrientationArg::Y => Orientation::Y,
        }
    }
}

impl From<BcArg> for BoundaryCondition {
    fn from(b: BcArg) -> Self {
        match b {
            BcArg::Dirichlet => BoundaryCondition::Dirichlet,
            BcArg::Mixed => BoundaryCondition::Mixed,
        }
    }
}

impl From<UnitsArg> for UnitSystem {
    fn from(u: UnitsArg) -> Self {
        match u {
            UnitsArg::Geometric => UnitSystem::Geometric,
            UnitsArg::Si => UnitSystem::Si,
        }
    }
}

impl From<KindArg> for QuantityKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::MassKg => QuantityKind::MassKg,
            KindArg::MassSolar => QuantityKind::MassSolar,
            KindArg::AngularVelocitySi => QuantityKind::AngularVelocitySi,
            KindArg::LengthM => QuantityKind::LengthM,
            KindArg::FieldMassKg => QuantityKind::FieldMassKg,
            KindArg::EnergyDensityGeometric => QuantityKind::EnergyDensityGeometric,
        }
    }
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::ToGeometric => Direction::ToGeometric,
            DirectionArg::ToSi => Direction::ToSi,
        }
    }
}

/// Converts inputs on the way in and outputs on the way out.
#[derive(Debug, Clone, Copy)]
struct Units(UnitSystem);

impl Units {
    fn input(self, value: f64, kind: QuantityKind) -> Result<f64> {
        match self.0 {
            UnitSystem::Geometric => Ok(value),
            UnitSystem::Si => units::convert(value, kind, Direction::ToGeometric),
        }
    }

    fn output(self, value: f64, kind: QuantityKind) -> f64 {
        match self.0 {
            UnitSystem::Geometric => value,
            UnitSystem::Si => units::convert(value, kind, Direction::ToSi).unwrap_or(value),
        }
    }
}

fn required<T>(value: Option<T>, flag: &str, background: &str) -> Result<T> {
    value.ok_or_else(|| {
        Error::Usage(format!(
            "--{flag} is required for the {background} background"
        ))
    })
}

impl BackgroundArgs {
    fn units(&self) -> Units {
        Units(self.units.into())
    }

    fn observer(&self) -> Result<Observer> {
        let u = self.units();
        match self.background {
            BackgroundKind::Flat => Ok(Observer::Flat),
            BackgroundKind::Cylinder => {
                let k = required(self.k, "k", "cylinder")?;
                let r = required(self.r, "r", "cylinder")?;
                let v = match self.v.unwrap_or(Velocity::Drag) {
                    Velocity::Value(v) => v,
                    Velocity::Drag => cylinder_drag_velocity(k, r)?,
                };
                Ok(Observer::Cylinder { k, r, v })
            }
            BackgroundKind::Kerr => {
                let mass = u.input(required(self.big_m, "M", "kerr")?, QuantityKind::MassKg)?;
                let a = u.input(self.a.unwrap_or(0.0), QuantityKind::LengthM)?;
                let r = u.input(required(self.r, "r", "kerr")?, QuantityKind::LengthM)?;
                let omega = match self.omega.unwrap_or(Velocity::Drag) {
                    Velocity::Value(w) => u.input(w, QuantityKind::AngularVelocitySi)?,
                    Velocity::Drag => kerr_drag_angular_velocity(mass, a, r)?,
                };
                Ok(Observer::Kerr { mass, a, r, omega })
            }
        }
    }
}

fn critical_json(set: &CriticalSet, angular: bool, u: Units) -> Value {
    let conv = |w: f64| {
        if angular {
            u.output(w, QuantityKind::AngularVelocitySi)
        } else {
            w
        }
    };
    let mut m = Map::new();
    m.insert("drag".into(), json!(conv(set.drag)));
    m.insert("bound_minus".into(), json!(conv(set.bounds.0)));
    m.insert("bound_plus".into(), json!(conv(set.bounds.1)));
    m.insert("zero_minus".into(), json!(conv(set.zero_energy.0)));
    m.insert("zero_plus".into(), json!(conv(set.zero_energy.1)));
    if let Some((lo, hi)) = set.sign_flip_unit {
        m.insert("flip_minus".into(), json!(conv(lo)));
        m.insert("flip_plus".into(), json!(conv(hi)));
    }
    if let Some((lo, hi)) = set.geodesic {
        m.insert("geo_minus".into(), json!(conv(lo)));
        m.insert("geo_plus".into(), json!(conv(hi)));
    }
    Value::Object(m)
}

fn emit_json(out: &mut dyn Write, value: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn cmd_energy(args: &EnergyArgs, out: &mut dyn Write) -> Result<i32> {
    let u = args.background.units();
    let observer = args.background.observer()?;
    let metric = observer.local_metric()?;
    let c = &args.cavity;
    let config = CavityConfig::new(
        c.orientation.into(),
        c.bc.into(),
        u.input(c.mass, QuantityKind::FieldMassKg)?,
        u.input(c.plate_separation, QuantityKind::LengthM)?,
    )?;
    let e = casimir_energy_density(&metric, &config)?;
    let critical = observer
        .critical_set()?
        .map(|s| critical_json(&s, matches!(observer, Observer::Kerr { .. }), u))
        .unwrap_or(Value::Null);
    let density = QuantityKind::EnergyDensityGeometric;
    emit_json(
        out,
        &json!({
            "energy_density": u.output(e.energy_density, density),
            "flat_reference_Em": u.output(e.flat_reference, density),
            "prefactor": e.prefactor,
            "proper_length": u.output(e.proper_length, QuantityKind::LengthM),
            "regime": e.regime.as_str(),
            "critical_set": critical,
        }),
    )?;
    Ok(0)
}

fn cmd_critical(args: &BackgroundArgs, out: &mut dyn Write) -> Result<i32> {
    let observer = match args.background {
        BackgroundKind::Flat => {
            return Err(Error::Usage(
                "critical requires --background cylinder or kerr".into(),
            ))
        }
        // the velocity is irrelevant; use the dragging value so it is always admissible
        BackgroundKind::Cylinder | BackgroundKind::Kerr => BackgroundArgs {
            v: None,
            omega: None,
            ..*args
        }
        .observer()?,
    };
    let set = observer.critical_set()?.expect("non-flat background");
    emit_json(
        out,
        &critical_json(
            &set,
            matches!(observer, Observer::Kerr { .. }),
            args.units(),
        ),
    )?;
    Ok(0)
}

fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<i32> {
    let u = Units(args.units.into());
    let angular = args.background == BackgroundKind::Kerr;
    let background = match args.background {
        BackgroundKind::Flat => {
            return Err(Error::Usage(
                "sweep requires --background cylinder or kerr".into(),
            ))
        }
        BackgroundKind::Cylinder => SweepBackground::Cylinder {
            k: required(args.k, "k", "cylinder")?,
        },
        BackgroundKind::Kerr => SweepBackground::Kerr {
            mass: u.input(required(args.big_m, "M", "kerr")?, QuantityKind::MassKg)?,
            a: u.input(args.a.unwrap_or(0.0), QuantityKind::LengthM)?,
        },
    };
    let vel = |w: f64| {
        if angular {
            u.input(w, QuantityKind::AngularVelocitySi)
        } else {
            Ok(w)
        }
    };
    let velocity_range = match (args.omega_min, args.omega_max) {
        (Some(lo), Some(hi)) => Some((vel(lo)?, vel(hi)?)),
        _ => None,
    };
    let spec = SweepSpec {
        background,
        r_range: (
            u.input(args.r_min, QuantityKind::LengthM)?,
            u.input(args.r_max, QuantityKind::LengthM)?,
        ),
        r_steps: args.r_steps,
        velocity_range,
        velocity_steps: args.omega_steps,
        bc: args.bc.into(),
        field_mass: u.input(args.mass, QuantityKind::FieldMassKg)?,
        plate_separation: u.input(args.plate_separation, QuantityKind::LengthM)?,
    };
    let mut result = sweep::sweep(&spec)?;
    if u.0 == UnitSystem::Si {
        let density = QuantityKind::EnergyDensityGeometric;
        let w = |x: f64| {
            if angular {
                u.output(x, QuantityKind::AngularVelocitySi)
            } else {
                x
            }
        };
        for row in &mut result.rows {
            row.omega = w(row.omega);
            row.eps_x = row.eps_x.map(|e| u.output(e, density));
            row.eps_y = row.eps_y.map(|e| u.output(e, density));
        }
        for c in &mut result.curves {
            for field in [
                &mut c.drag,
                &mut c.bound_minus,
                &mut c.bound_plus,
                &mut c.zero_minus,
                &mut c.zero_plus,
            ] {
                *field = w(*field);
            }
            for field in [
                &mut c.flip_minus,
                &mut c.flip_plus,
                &mut c.geo_minus,
                &mut c.geo_plus,
            ] {
                *field = field.map(w);
            }
        }
    }
    sweep::write_outputs(&result, &args.out)?;
    emit_json(
        out,
        &json!({
            "rows": result.rows.len(),
            "allowed": result.rows.iter().filter(|r| r.allowed).count(),
            "csv": args.out.display().to_string(),
            "curves": sweep::curves_path(&args.out).display().to_string(),
        }),
    )?;
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let reports = verify_all(args.seed, args.samples)?;
    let width = reports
        .iter()
        .map(|r| r.quantity_name.len())
        .max()
        .unwrap_or(8)
        .max(8);
    writeln!(
        out,
        "{:<width$}  {:>24}  {:>24}  {:>10}  {:>8}  status",
        "quantity", "main", "oracle", "gap", "tol"
    )?;
    for r in &reports {
        writeln!(
            out,
            "{:<width$}  {:>24.16e}  {:>24.16e}  {:>10.3e}  {:>8.1e}  {}",
            r.quantity_name,
            r.main_value,
            r.oracle_value,
            r.relative_gap,
            r.tolerance,
            if r.passed { "ok" } else { "FAIL" }
        )?;
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    writeln!(
        out,
        "{} checks, {} failed (seed {}, samples {})",
        reports.len(),
        failed,
        args.seed,
        args.samples
    )?;
    Ok(if failed == 0 { 0 } else { EXIT_VERIFY_FAILED })
}

fn cmd_convert(args: &ConvertArgs, out: &mut dyn Write) -> Result<i32> {
    let kind: QuantityKind = args.kind.into();
    let direction: Direction = args.direction.into();
    let result = units::convert(args.value, kind, direction)?;
    emit_json(
        out,
        &json!({ "value": args.value, "kind": kind, "direction": direction, "result": result }),
    )?;
    Ok(0)
}

fn report_error(err: &mut dyn Write, code: &str, message: &str) {
    let doc = json!({ "code": code, "message": message });
    // nothing sensible to do if stderr is gone
    let _ = writeln!(err, "{doc}");
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    report_error(err, "USAGE", e.render().to_string().trim());
                    EXIT_ERROR
                }
            };
        }
    };
    let outcome = match &cli.command {
        Command::Energy(a) => cmd_energy(a, out),
        Command::Sweep(a) => cmd_sweep(a, out),
        Command::Critical(a) => cmd_critical(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Convert(a) => cmd_convert(a, out),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            report_error(err, e.code(), &e.to_string());
            EXIT_ERROR
        }
    }
}
