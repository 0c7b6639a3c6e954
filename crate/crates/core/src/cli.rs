//! Command-line front end: argument parsing, report types and the commands
//! behind the `balanced-bergman` binary.
//!
//! Exit codes: `0` success, `1` I/O failure, `2` invalid input (spec,
//! polynomial, direction, flag values), `3` internal invariant violation
//! (report inconsistency, oracle contradicting the criterion), `4` Siciak
//! target regime unreachable.
//!
//! Randomized commands take `--seed`; it defaults to 0.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    admits_bergman_metric, classify_bergman_space, contains_all_polynomials, hilbert_dimension, is_square_integrable,
    kernel_positive, lelong_spectrum, multiplicity, required_multiplicity, siciak_blend, AllPolynomialsVerdict,
    BergmanClassification, BergmanKind, LelongSpectrum, SiciakRegime,
};
use crate::domain::{rational_string, ElementaryDomainSpec, GaussianRational, HomogeneousPolynomial, ProjectivePoint};
use crate::error::Error;
use crate::kernel::{basis_csv, ray_csv, KernelSeries, DEFAULT_DMAX};
use crate::oracle::{radial_integral, volume_estimate, Budget, HartogsSlice, IntegralVerdict, VerdictKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;
pub const EXIT_UNREACHABLE: i32 = 4;

/// A failed command: message for stderr plus exit code.
#[derive(Debug)]
pub struct CommandError {
    pub code: i32,
    pub message: String,
}

impl CommandError {
    fn invariant(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INVARIANT,
            message: message.into(),
        }
    }
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Io(_) => EXIT_IO,
            Error::UnreachableTarget { .. } => EXIT_UNREACHABLE,
            Error::WitnessSearchExhausted { .. } | Error::BasisVerdict { .. } | Error::DegenerateLadder { .. } => {
                EXIT_INVARIANT
            }
            _ => EXIT_INPUT,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult<T> = std::result::Result<T, CommandError>;

#[derive(Debug, Parser)]
#[command(name = "balanced-bergman", version, about = "Bergman spaces of elementary balanced domains in C²")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Algebraic report: spectrum, dichotomy, kernel/metric criteria, slice dimensions.
    Analyze {
        spec: PathBuf,
        /// Report dimensions for degrees 0..=D.
        #[arg(long, default_value_t = 12)]
        degrees: u32,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Also estimate the volume numerically.
        #[arg(long)]
        volume: bool,
        #[command(flatten)]
        oracle: OracleFlags,
    },
    /// Decide square integrability of one form.
    CheckPoly {
        spec: PathBuf,
        /// Coefficients c0,…,cd of Σ c_k z1^k z2^(d−k), e.g. "0,1/2,1+i".
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Cross-check with the numerical oracle.
        #[arg(long)]
        verify_numeric: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        oracle: OracleFlags,
    },
    /// Kernel partial sums along rays, as CSV.
    Kernel {
        spec: PathBuf,
        /// Direction "z1,z2" (decimal or Gaussian rational entries); repeatable.
        #[arg(long, required = true, allow_hyphen_values = true)]
        direction: Vec<String>,
        /// Comma-separated |λ| values in [0, 1).
        #[arg(long, default_value = "0,0.25,0.5,0.75,0.9")]
        radii: String,
        #[arg(long, default_value_t = DEFAULT_DMAX, allow_hyphen_values = true)]
        dmax: i64,
        /// Ray CSV destination (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the orthonormal basis CSV here.
        #[arg(long)]
        basis_out: Option<PathBuf>,
        #[command(flatten)]
        oracle: OracleFlags,
    },
    /// Blend a base spec with a Siciak-type approximant.
    Siciak {
        /// Number of approximant points.
        #[arg(long)]
        count: usize,
        /// Weight t of the base in h_base^t · h_approx^(1−t).
        #[arg(long, default_value = "1/2")]
        blend: String,
        #[arg(long)]
        base: Option<PathBuf>,
        /// volume-infinite, kernel-only or metric.
        #[arg(long)]
        target: Option<String>,
        /// Spec destination (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Oracle budget and seed flags.
#[derive(Debug, Clone, Args)]
pub struct OracleFlags {
    #[arg(long, default_value_t = 1_000_000)]
    pub samples: usize,
    /// Annuli per decade of the exponent ladder.
    #[arg(long, default_value_t = 12)]
    pub annuli: usize,
    #[arg(long, default_value_t = 0.05)]
    pub margin: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl OracleFlags {
    pub fn budget(&self) -> Budget {
        Budget {
            samples: self.samples,
            annuli_per_decade: self.annuli,
            margin: self.margin,
            ..Budget::default()
        }
    }
}

impl Default for OracleFlags {
    fn default() -> Self {
        Self {
            samples: 1_000_000,
            annuli: 12,
            margin: 0.05,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeDimension {
    pub degree: u32,
    pub dimension: u32,
}

/// Everything the algebraic side decides about one spec.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub spec: ElementaryDomainSpec,
    pub spectrum: LelongSpectrum,
    pub classification: BergmanClassification,
    pub kernel_positive: bool,
    pub admits_bergman_metric: bool,
    pub contains_all_polynomials: AllPolynomialsVerdict,
    pub dimensions: Vec<DegreeDimension>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub volume: Option<IntegralVerdict>,
}

impl AnalysisReport {
    pub fn build(spec: &ElementaryDomainSpec, degrees: u32) -> crate::Result<Self> {
        Ok(Self {
            spec: spec.clone(),
            spectrum: lelong_spectrum(spec),
            classification: classify_bergman_space(spec)?,
            kernel_positive: kernel_positive(spec),
            admits_bergman_metric: admits_bergman_metric(spec),
            contains_all_polynomials: contains_all_polynomials(spec),
            dimensions: (0..=degrees)
                .map(|d| DegreeDimension {
                    degree: d,
                    dimension: hilbert_dimension(spec, d),
                })
                .collect(),
            volume: None,
        })
    }

    /// Cross-field consistency; returns the first violated relation.
    pub fn check(&self) -> std::result::Result<(), String> {
        let dim = |d: u32| self.dimensions.iter().find(|x| x.degree == d).map(|x| x.dimension);
        if self.spectrum.total() != BigRational::from_integer(1.into()) {
            return Err(format!("spectrum sums to {}", self.spectrum.total()));
        }
        if let Some(d0) = dim(0) {
            if self.kernel_positive != (d0 == 1) {
                return Err(format!("kernel_positive = {} but dim H^0 = {d0}", self.kernel_positive));
            }
        }
        if self.admits_bergman_metric && !self.kernel_positive {
            return Err("metric without positive kernel".into());
        }
        match (self.classification.kind, self.classification.witness_degree) {
            (BergmanKind::Trivial, _) => {
                if let Some(x) = self.dimensions.iter().find(|x| x.dimension > 0) {
                    return Err(format!("Trivial but dim H^{} = {}", x.degree, x.dimension));
                }
            }
            (BergmanKind::InfiniteDimensional, Some(w)) => {
                if dim(w) == Some(0) {
                    return Err(format!("witness degree {w} has dimension 0"));
                }
            }
            (BergmanKind::InfiniteDimensional, None) => return Err("missing witness degree".into()),
        }
        if let Some(v) = &self.volume {
            let finite = v.kind == VerdictKind::Finite;
            if v.kind != VerdictKind::Inconclusive && finite != self.kernel_positive {
                return Err(format!("volume verdict {:?} contradicts kernel_positive = {}", v.kind, self.kernel_positive));
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str("Lelong spectrum:\n");
        for (p, nu) in self.spectrum.iter() {
            s.push_str(&format!("  {p}  ν = {nu}\n"));
        }
        s.push_str(&format!(
            "classification: {:?}{}\n",
            self.classification.kind,
            self.classification
                .witness_degree
                .map(|d| format!(" (first nonzero degree {d})"))
                .unwrap_or_default()
        ));
        s.push_str(&format!("kernel_positive: {}\n", self.kernel_positive));
        s.push_str(&format!("admits_bergman_metric: {}\n", self.admits_bergman_metric));
        s.push_str(&format!(
            "contains_all_polynomials: {}{}\n",
            self.contains_all_polynomials.holds,
            self.contains_all_polynomials
                .witness
                .as_ref()
                .map(|p| format!(" (fails at {p})"))
                .unwrap_or_default()
        ));
        let dims: Vec<String> = self.dimensions.iter().map(|d| d.dimension.to_string()).collect();
        s.push_str(&format!("dim H^d, d = 0..{}: {}\n", self.dimensions.len().saturating_sub(1), dims.join(" ")));
        if let Some(v) = &self.volume {
            s.push_str(&format!("volume: {}\n", v.summary()));
        }
        s
    }
}

/// Local data behind one integrability decision.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocusCheck {
    pub point: ProjectivePoint,
    #[serde(with = "rational_string")]
    pub nu: BigRational,
    pub multiplicity: u32,
    pub required: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckPolyReport {
    pub polynomial: HomogeneousPolynomial,
    pub square_integrable: bool,
    pub loci: Vec<LocusCheck>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub numeric: Option<IntegralVerdict>,
    /// Absent when the oracle was not run or was inconclusive.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub agreement: Option<bool>,
}

impl CheckPolyReport {
    pub fn to_text(&self) -> String {
        let mut s = format!("Q = {}\n", self.polynomial);
        for l in &self.loci {
            s.push_str(&format!(
                "  {}  ν = {}  m = {}  required = {}  {}\n",
                l.point,
                l.nu,
                l.multiplicity,
                l.required,
                if l.multiplicity >= l.required { "ok" } else { "FAIL" }
            ));
        }
        s.push_str(&format!("square_integrable: {}\n", self.square_integrable));
        if let Some(v) = &self.numeric {
            s.push_str(&format!("numeric: {}\n", v.summary()));
        }
        if let Some(a) = self.agreement {
            s.push_str(&format!("agreement: {a}\n"));
        }
        s
    }
}

pub fn read_spec(path: &Path) -> CmdResult<ElementaryDomainSpec> {
    let text = fs::read_to_string(path).map_err(|e| CommandError {
        code: EXIT_IO,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    ElementaryDomainSpec::from_json(&text).map_err(|e| CommandError {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    })
}

pub fn cmd_analyze(spec: &ElementaryDomainSpec, degrees: u32, volume: Option<(&Budget, u64)>) -> CmdResult<AnalysisReport> {
    let mut report = AnalysisReport::build(spec, degrees)?;
    if let Some((budget, seed)) = volume {
        report.volume = Some(volume_estimate(spec, budget, seed)?);
    }
    report.check().map_err(CommandError::invariant)?;
    Ok(report)
}

pub fn cmd_check_poly(spec: &ElementaryDomainSpec, poly: &str, numeric: Option<(&Budget, u64)>) -> CmdResult<CheckPolyReport> {
    let q = HomogeneousPolynomial::from_str(poly)?;
    let square_integrable = is_square_integrable(&q, spec)?;
    let d = q.degree() as u32;
    let loci = lelong_spectrum(spec)
        .iter()
        .map(|(p, nu)| {
            Ok(LocusCheck {
                point: p.clone(),
                nu: nu.clone(),
                multiplicity: multiplicity(&q, p)?,
                required: required_multiplicity(nu, d),
            })
        })
        .collect::<crate::Result<Vec<_>>>()?;
    let mut report = CheckPolyReport {
        polynomial: q.clone(),
        square_integrable,
        loci,
        numeric: None,
        agreement: None,
    };
    if let Some((budget, seed)) = numeric {
        let v = radial_integral(&q, &HartogsSlice::new(spec), budget, seed)?;
        report.agreement = match v.kind {
            VerdictKind::Finite => Some(square_integrable),
            VerdictKind::Divergent => Some(!square_integrable),
            VerdictKind::Inconclusive => None,
        };
        report.numeric = Some(v);
        if report.agreement == Some(false) {
            return Err(CommandError::invariant(format!(
                "oracle contradicts the criterion:\n{}",
                report.to_text()
            )));
        }
    }
    Ok(report)
}

/// Parses one complex entry: decimal (`0.5-2i`) or Gaussian rational (`1/3+i`).
fn parse_complex(s: &str) -> crate::Result<Complex64> {
    let s = s.trim();
    if let Ok(g) = GaussianRational::from_str(s) {
        return Ok(g.to_complex());
    }
    Complex64::from_str(s).map_err(|e| Error::Parse {
        what: "complex number",
        input: s.to_string(),
        reason: e.to_string(),
    })
}

pub fn parse_direction(s: &str) -> crate::Result<[Complex64; 2]> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Parse {
            what: "direction",
            input: s.to_string(),
            reason: "expected two comma-separated entries".into(),
        });
    }
    Ok([parse_complex(parts[0])?, parse_complex(parts[1])?])
}

pub fn parse_radii(s: &str) -> crate::Result<Vec<f64>> {
    s.split(',')
        .map(|r| {
            r.trim().parse::<f64>().map_err(|e| Error::Parse {
                what: "radius",
                input: r.to_string(),
                reason: e.to_string(),
            })
        })
        .collect()
}

/// Ray CSV and basis CSV.
pub fn cmd_kernel(
    spec: &ElementaryDomainSpec,
    directions: &[[Complex64; 2]],
    radii: &[f64],
    dmax: i64,
    budget: &Budget,
    seed: u64,
) -> CmdResult<(String, String)> {
    let series = KernelSeries::new(spec, dmax, budget, seed)?;
    let samples = directions
        .iter()
        .map(|z| series.ray(*z, radii))
        .collect::<crate::Result<Vec<_>>>()?;
    Ok((ray_csv(&samples), basis_csv(series.bases())))
}

/// Blended spec plus a text summary of its spectrum and regime.
pub fn cmd_siciak(
    base: Option<&ElementaryDomainSpec>,
    count: usize,
    blend: &str,
    target: Option<&str>,
) -> CmdResult<(ElementaryDomainSpec, String)> {
    let t = crate::domain::gaussian::parse_rational(blend)?;
    let target = target.map(SiciakRegime::from_str).transpose()?;
    let result = siciak_blend(base, count, &t, target)?;
    let mut summary = String::new();
    for (p, nu) in lelong_spectrum(&result.spec).iter() {
        summary.push_str(&format!("{p}  ν = {nu}\n"));
    }
    summary.push_str(&format!("max ν = {}  regime: {}\n", result.max_lelong, result.regime));
    Ok((result.spec, summary))
}

fn write_out(path: Option<&Path>, text: &str) -> CmdResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CommandError {
            code: EXIT_IO,
            message: format!("cannot write {}: {e}", p.display()),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize") + "\n"
}

fn dispatch(cli: Cli) -> CmdResult<()> {
    match cli.command {
        Command::Analyze {
            spec,
            degrees,
            json,
            volume,
            oracle,
        } => {
            let spec = read_spec(&spec)?;
            let budget = oracle.budget();
            let report = cmd_analyze(&spec, degrees, volume.then_some((&budget, oracle.seed)))?;
            write_out(None, &if json { to_json(&report) } else { report.to_text() })
        }
        Command::CheckPoly {
            spec,
            poly,
            verify_numeric,
            json,
            oracle,
        } => {
            let spec = read_spec(&spec)?;
            let budget = oracle.budget();
            let report = cmd_check_poly(&spec, &poly, verify_numeric.then_some((&budget, oracle.seed)))?;
            write_out(None, &if json { to_json(&report) } else { report.to_text() })
        }
        Command::Kernel {
            spec,
            direction,
            radii,
            dmax,
            out,
            basis_out,
            oracle,
        } => {
            let spec = read_spec(&spec)?;
            let directions = direction
                .iter()
                .map(|d| parse_direction(d))
                .collect::<crate::Result<Vec<_>>>()?;
            let radii = parse_radii(&radii)?;
            let (rays, basis) = cmd_kernel(&spec, &directions, &radii, dmax, &oracle.budget(), oracle.seed)?;
            write_out(out.as_deref(), &rays)?;
            if let Some(p) = basis_out {
                write_out(Some(&p), &basis)?;
            }
            Ok(())
        }
        Command::Siciak {
            count,
            blend,
            base,
            target,
            out,
        } => {
            let base = base.as_deref().map(read_spec).transpose()?;
            let (spec, summary) = cmd_siciak(base.as_ref(), count, &blend, target.as_deref())?;
            match out {
                Some(p) => {
                    write_out(Some(&p), &(spec.to_json() + "\n"))?;
                    print!("{summary}");
                }
                None => {
                    println!("{}", spec.to_json());
                    eprint!("{summary}");
                }
            }
            Ok(())
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::spec_from_points;
    use num_bigint::BigInt;

    fn three_lines() -> ElementaryDomainSpec {
        let t = BigRational::new(BigInt::from(1), BigInt::from(3));
        let g = |n| Some(GaussianRational::from_integer(n));
        spec_from_points(&[(g(0), t.clone()), (g(1), t.clone()), (None, t)]).unwrap()
    }

    #[test]
    fn directions_accept_rationals_and_decimals() {
        let z = parse_direction("1/2+i,-3").unwrap();
        assert_eq!(z, [Complex64::new(0.5, 1.0), Complex64::new(-3.0, 0.0)]);
        let z = parse_direction("0.25,1e-3").unwrap();
        assert_eq!(z, [Complex64::new(0.25, 0.0), Complex64::new(1e-3, 0.0)]);
        assert!(parse_direction("1").is_err());
        assert!(parse_direction("1,abc").is_err());
        assert_eq!(parse_radii("0, 0.5,0.9").unwrap(), vec![0.0, 0.5, 0.9]);
        assert!(parse_radii("0,x").is_err());
    }

    #[test]
    fn report_check_catches_inconsistency() {
        let mut report = AnalysisReport::build(&three_lines(), 6).unwrap();
        report.check().unwrap();
        report.kernel_positive = false;
        assert!(report.check().is_err());
        let mut report = AnalysisReport::build(&three_lines(), 6).unwrap();
        report.dimensions[0].dimension = 0;
        assert!(report.check().is_err());
    }

    #[test]
    fn error_codes() {
        assert_eq!(CommandError::from(Error::ZeroPolynomial).code, EXIT_INPUT);
        assert_eq!(CommandError::from(Error::DirectionInZeroSet).code, EXIT_INPUT);
        let io = Error::Io(std::io::Error::other("x"));
        assert_eq!(CommandError::from(io).code, EXIT_IO);
        assert_eq!(run(["balanced-bergman", "--no-such-flag"]), EXIT_INPUT);
        assert_eq!(run(["balanced-bergman", "--help"]), EXIT_OK);
    }

    #[test]
    fn check_poly_reports_every_locus() {
        let r = cmd_check_poly(&three_lines(), "0,-1,1,0", None).unwrap();
        assert!(r.square_integrable);
        assert_eq!(r.loci.len(), 3);
        assert!(r.loci.iter().all(|l| l.multiplicity >= l.required));
        assert!(r.numeric.is_none() && r.agreement.is_none());
        assert_eq!(cmd_check_poly(&three_lines(), "0", None).unwrap_err().code, EXIT_INPUT);
    }
}
