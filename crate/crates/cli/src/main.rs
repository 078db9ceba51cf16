//! Command line front end: construct and validate fans, compute line bundle
//! cohomology, manipulate toric systems, search for cyclic strongly
//! exceptional sequences, emit quivers with relations, and recompute the
//! built-in classification reports.
//!
//! Report commands exit nonzero when the recomputation disagrees with the
//! frozen reference data, so they can serve as a self-check in scripts.

use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::BigInt;
use serde::Serialize;

use exseq::augment::{
    augment, base_system, default_s_range, enumerate_standard_augmentations, replay_tracked,
    BaseKind,
};
use exseq::cohomology::{cohomology_divisor, euler_char_divisor};
use exseq::deform::{algebra_dimension, mk_quiver, parse_points, relation_spaces, specialize_mk};
use exseq::fans::{parse_rays, ToricSurface};
use exseq::picard::SurfaceBasis;
use exseq::quivers::{
    build_cyclic_quiver, build_quiver, mckay_quiver, to_dot, to_json, Quiver, Relation,
};
use exseq::reports;
use exseq::sequences::{
    check_cyclic_strong, check_exceptional, check_strongly_exceptional, decide_cyclic_existence,
    decide_strong_existence, search_cyclic_systems,
};
use exseq::systems::{ToricSystem, ToricSystemJson};

#[derive(Parser)]
#[command(
    name = "exseq",
    version,
    about = "Strongly exceptional sequences of invertible sheaves on rational surfaces"
)]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    #[default]
    Json,
    Dot,
}

#[derive(Args, Clone)]
struct SurfaceArgs {
    /// Fan rays as "x0,y0; x1,y1; ...".
    #[arg(long, conflicts_with = "self_intersections", allow_hyphen_values = true)]
    rays: Option<String>,
    /// Ray self-intersection numbers as "a0, a1, ...".
    #[arg(long, allow_hyphen_values = true)]
    self_intersections: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a fan and print its invariants.
    Fan {
        #[command(flatten)]
        surface: SurfaceArgs,
    },
    /// Cohomology of a torus-invariant divisor, given by ray coefficients.
    Cohomology {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Divisor coefficients "d0, d1, ..." (one per ray).
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
    },
    /// Build, transform, enumerate, and check toric systems.
    #[command(subcommand)]
    System(SystemCmd),
    /// Existence of (cyclic) strongly exceptional sequences on a surface.
    Decide {
        #[command(flatten)]
        surface: SurfaceArgs,
    },
    /// Search a surface for cyclic strongly exceptional toric systems.
    Search {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Hirzebruch parameter window "lo:hi" (defaults to a sound window).
        #[arg(long, allow_hyphen_values = true)]
        s_range: Option<String>,
    },
    /// Quiver with relations of a sequence.
    Quiver {
        /// Base surface: "p2" or "f<a>"; the cyclic quiver of its base system.
        #[arg(long, conflicts_with = "plane_points")]
        base: Option<String>,
        /// Hirzebruch parameter of the base system.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        s: i64,
        /// Instead: the plane blown up in this many torus-fixed points
        /// (at most 3), with the sequence O, R_t, ..., R_1, H, 2H.
        #[arg(long)]
        plane_points: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// McKay quiver of an abelian subgroup of SL(3).
    Mckay {
        /// Orders of the cyclic factors, e.g. "3,3".
        #[arg(long)]
        orders: String,
        /// Three weight vectors, e.g. "1,0; 0,1; 2,2".
        #[arg(long)]
        weights: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The one-parameter family of quivers interpolating the plane blow-up
    /// shapes, with its chain relations; `--s` drops one relation pair.
    Family {
        /// Family parameter: k + 1 middle arrows, chain relations 0..k.
        #[arg(long)]
        k: usize,
        /// Specialize: drop the relation pair at position s (needs 2s + 1 <= k).
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Dimensions attached to a configuration of points in the plane.
    Deform {
        /// Points as "x,y,z; x,y,z; ..." (projective coordinates).
        #[arg(long, allow_hyphen_values = true)]
        points: String,
    },
    /// Recompute a classification report and compare with frozen data.
    #[command(subcommand)]
    Report(ReportCmd),
}

#[derive(Subcommand)]
enum SystemCmd {
    /// The base toric system on a minimal surface.
    Base {
        /// "p2" or "f<a>".
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        s: i64,
    },
    /// Insert one fresh blow-up class at gap `pos`.
    Augment {
        /// System JSON file, or "-" for stdin.
        #[arg(long)]
        file: String,
        #[arg(long)]
        pos: usize,
    },
    /// All standard augmentations over a base, up to rotation and reversal.
    Enumerate {
        #[arg(long)]
        base: String,
        #[arg(long)]
        steps: usize,
        /// Hirzebruch parameter window "lo:hi".
        #[arg(long, allow_hyphen_values = true)]
        s_range: Option<String>,
    },
    /// Check a system on a surface; default strong, `--cyclic` for cyclic
    /// strong, `--weak` for plain exceptionality.
    Check {
        #[arg(long)]
        file: String,
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, conflicts_with = "weak")]
        cyclic: bool,
        #[arg(long)]
        weak: bool,
    },
    /// Gale dual surface of a system.
    Gale {
        #[arg(long)]
        file: String,
    },
    /// Rotate (and optionally reverse) a system.
    Rotate {
        #[arg(long)]
        file: String,
        #[arg(long, default_value_t = 0)]
        by: usize,
        #[arg(long)]
        reverse: bool,
    },
}

#[derive(Subcommand)]
enum ReportCmd {
    /// The complete smooth toric surfaces with nef anticanonical class.
    Census,
    /// Cyclic quivers of the base systems on the minimal surfaces.
    Quivers,
    /// Gale dual types of cyclic strongly exceptional systems per surface.
    Types {
        /// Comma-separated census names (default: all sixteen).
        #[arg(long)]
        surfaces: Option<String>,
    },
    /// Dimension formulas for blow-ups of the plane in `t` points.
    Dims {
        #[arg(long, default_value_t = 5)]
        max_points: usize,
    },
    /// The existence decision across the obstructed family.
    Obstructions,
    /// McKay quivers of abelian quotients against cyclic quivers.
    Mckay {
        #[arg(long)]
        surfaces: Option<String>,
    },
}

fn parse_i64_list(text: &str) -> Result<Vec<i64>, String> {
    text.split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|e| format!("bad integer {:?}: {e}", p.trim())))
        .collect()
}

fn parse_u64_list(text: &str) -> Result<Vec<u64>, String> {
    text.split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|e| format!("bad integer {:?}: {e}", p.trim())))
        .collect()
}

fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<i64>, String> {
    let (lo, hi) = text
        .split_once(':')
        .ok_or_else(|| format!("bad range {text:?}: expected \"lo:hi\""))?;
    let lo: i64 = lo.trim().parse().map_err(|e| format!("bad range start: {e}"))?;
    let hi: i64 = hi.trim().parse().map_err(|e| format!("bad range end: {e}"))?;
    Ok(lo..=hi)
}

fn parse_base(text: &str) -> Result<BaseKind, String> {
    let t = text.trim().to_ascii_lowercase();
    if t == "p2" {
        return Ok(BaseKind::P2);
    }
    if let Some(a) = t.strip_prefix('f') {
        let a: i64 = a.parse().map_err(|e| format!("bad Hirzebruch index: {e}"))?;
        if a < 0 {
            return Err("Hirzebruch index must be nonnegative".into());
        }
        return Ok(BaseKind::Fa(a));
    }
    Err(format!("unknown base {text:?}; expected \"p2\" or \"f<a>\""))
}

impl SurfaceArgs {
    fn build(&self) -> Result<ToricSurface, String> {
        match (&self.rays, &self.self_intersections) {
            (Some(r), None) => {
                let rays = parse_rays(r).map_err(|e| e.to_string())?;
                ToricSurface::from_rays(rays).map_err(|e| e.to_string())
            }
            (None, Some(s)) => {
                let ints = parse_i64_list(s)?;
                ToricSurface::from_self_intersections(&ints).map_err(|e| e.to_string())
            }
            _ => Err("give exactly one of --rays or --self-intersections".into()),
        }
    }
}

fn read_system(file: &str) -> Result<ToricSystem, String> {
    let text = if file == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| e.to_string())?;
        buf
    } else {
        std::fs::read_to_string(file).map_err(|e| format!("{file}: {e}"))?
    };
    let json: ToricSystemJson = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    ToricSystem::from_json(json).map_err(|e| e.to_string())
}

/// A tracked copy of the surface whose class basis matches the system's.
fn tracked_matching(surface: &ToricSurface, basis: SurfaceBasis) -> Result<ToricSurface, String> {
    let plain =
        ToricSurface::from_rays(surface.rays().to_vec()).map_err(|e| e.to_string())?;
    for real in plain.blowup_realizations() {
        let tracked = replay_tracked(&real).map_err(|e| e.to_string())?;
        if tracked.basis().map_err(|e| e.to_string())? == basis {
            return Ok(tracked);
        }
    }
    Err(format!("no blow-up realization of the fan has class basis {}", basis.name()))
}

fn pretty<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string_pretty(value).map_err(|e| e.to_string())
}

fn render_quiver(q: &Quiver, relations: &[Relation], format: Format) -> Result<String, String> {
    match format {
        Format::Json => pretty(&to_json(q, relations)),
        Format::Dot => Ok(to_dot(q, relations)),
    }
}

#[derive(Serialize)]
struct FanInfo {
    rays: Vec<(i64, i64)>,
    self_intersections: Vec<i64>,
    canonical: Vec<i64>,
    picard_rank: usize,
    anticanonical_nef: bool,
}

#[derive(Serialize)]
struct CohomologyInfo {
    h0: usize,
    h1: usize,
    h2: usize,
    chi: String,
}

#[derive(Serialize)]
struct CheckInfo {
    ok: bool,
    failures: Vec<String>,
}

#[derive(Serialize)]
struct RoundInfo {
    removed: Vec<usize>,
    result: Vec<i64>,
}

#[derive(Serialize)]
struct DecideInfo {
    strong_exists: bool,
    cyclic_exists: bool,
    chains: Vec<Vec<RoundInfo>>,
}

#[derive(Serialize)]
struct FoundInfo {
    system: ToricSystemJson,
    base: String,
    dual_canonical: Vec<i64>,
}

#[derive(Serialize)]
struct DeformInfo {
    points: usize,
    algebra_dim: u64,
    point_kernels: Vec<usize>,
    hyperplane_sum_kernel: usize,
    symmetrizer_kernel: usize,
}

fn base_name(base: BaseKind) -> String {
    match base {
        BaseKind::P2 => "p2".into(),
        BaseKind::Fa(a) => format!("f{a}"),
    }
}

/// Output text plus the process-level verdict (reports set it to their
/// comparison result; everything else succeeds by reaching the end).
fn run(command: Command) -> Result<(String, bool), String> {
    match command {
        Command::Fan { surface } => {
            let s = surface.build()?;
            let info = FanInfo {
                rays: s.rays().to_vec(),
                self_intersections: s.self_intersections().to_vec(),
                canonical: s.canonical_form(),
                picard_rank: s.n() - 2,
                anticanonical_nef: s.anticanonical_nef(),
            };
            Ok((pretty(&info)?, true))
        }
        Command::Cohomology { surface, divisor } => {
            let s = surface.build()?;
            let coeffs = parse_i64_list(&divisor)?;
            if coeffs.len() != s.n() {
                return Err(format!("expected {} coefficients, got {}", s.n(), coeffs.len()));
            }
            let d: Vec<BigInt> = coeffs.into_iter().map(BigInt::from).collect();
            let (h0, h1, h2) = cohomology_divisor(&s, &d);
            let chi = euler_char_divisor(&s, &d).to_string();
            Ok((pretty(&CohomologyInfo { h0, h1, h2, chi })?, true))
        }
        Command::System(cmd) => run_system(cmd),
        Command::Decide { surface } => {
            let s = surface.build()?;
            let decision = decide_strong_existence(&s);
            let chains = decision
                .chains
                .iter()
                .map(|chain| {
                    chain
                        .iter()
                        .map(|round| RoundInfo {
                            removed: round.removed.clone(),
                            result: round.result.canonical_form(),
                        })
                        .collect()
                })
                .collect();
            let info = DecideInfo {
                strong_exists: decision.exists,
                cyclic_exists: decide_cyclic_existence(&s),
                chains,
            };
            Ok((pretty(&info)?, true))
        }
        Command::Search { surface, s_range } => {
            let s = surface.build()?;
            let range = s_range.as_deref().map(parse_range).transpose()?;
            let found = search_cyclic_systems(&s, range).map_err(|e| e.to_string())?;
            let rows: Vec<FoundInfo> = found
                .iter()
                .map(|f| FoundInfo {
                    system: f.system.to_json(),
                    base: base_name(f.base),
                    dual_canonical: f.dual.canonical_form(),
                })
                .collect();
            Ok((pretty(&rows)?, true))
        }
        Command::Quiver { base, s, plane_points, format } => {
            let (quiver, relations) = match (base, plane_points) {
                (Some(b), None) => {
                    let kind = parse_base(&b)?;
                    let surface = match kind {
                        BaseKind::P2 => exseq::fans::base_p2(),
                        BaseKind::Fa(a) => exseq::fans::base_fa(a).map_err(|e| e.to_string())?,
                    };
                    let system = base_system(kind, s).map_err(|e| e.to_string())?;
                    build_cyclic_quiver(&surface, &system, true).map_err(|e| e.to_string())?
                }
                (None, Some(t)) => {
                    let (surface, sequence) =
                        reports::toric_blowup_sequence(t).map_err(|e| e.to_string())?;
                    build_quiver(&surface, &sequence, true).map_err(|e| e.to_string())?
                }
                _ => return Err("give exactly one of --base or --plane-points".into()),
            };
            Ok((render_quiver(&quiver, &relations, format)?, true))
        }
        Command::Mckay { orders, weights, format } => {
            let orders = parse_u64_list(&orders)?;
            let chunks: Vec<Vec<u64>> =
                weights.split(';').map(parse_u64_list).collect::<Result<_, _>>()?;
            let [w0, w1, w2]: [Vec<u64>; 3] = chunks
                .try_into()
                .map_err(|_| "expected exactly three weight vectors".to_string())?;
            let q = mckay_quiver(&orders, &[w0, w1, w2]).map_err(|e| e.to_string())?;
            Ok((render_quiver(&q, &[], format)?, true))
        }
        Command::Family { k, s, format } => {
            let (q, relations) = match s {
                None => mk_quiver(k),
                Some(s) => specialize_mk(k, s).map_err(|e| e.to_string())?,
            };
            Ok((render_quiver(&q, &relations, format)?, true))
        }
        Command::Deform { points } => {
            let pts = parse_points(&points).map_err(|e| e.to_string())?;
            let spaces = relation_spaces(&pts).map_err(|e| e.to_string())?;
            let info = DeformInfo {
                points: pts.len(),
                algebra_dim: algebra_dimension(&pts).map_err(|e| e.to_string())?,
                point_kernels: spaces.per_point,
                hyperplane_sum_kernel: spaces.hyperplane_sum,
                symmetrizer_kernel: spaces.symmetrizer,
            };
            Ok((pretty(&info)?, true))
        }
        Command::Report(cmd) => run_report(cmd),
    }
}

fn run_system(cmd: SystemCmd) -> Result<(String, bool), String> {
    match cmd {
        SystemCmd::Base { base, s } => {
            let system = base_system(parse_base(&base)?, s).map_err(|e| e.to_string())?;
            Ok((pretty(&system.to_json())?, true))
        }
        SystemCmd::Augment { file, pos } => {
            let system = read_system(&file)?;
            let bigger = augment(&system, pos).map_err(|e| e.to_string())?;
            Ok((pretty(&bigger.to_json())?, true))
        }
        SystemCmd::Enumerate { base, steps, s_range } => {
            let kind = parse_base(&base)?;
            let range = match s_range.as_deref() {
                Some(r) => parse_range(r)?,
                None => match kind {
                    BaseKind::P2 => 0..=0,
                    BaseKind::Fa(a) => default_s_range(a),
                },
            };
            let systems = enumerate_standard_augmentations(kind, steps, range, false)
                .map_err(|e| e.to_string())?;
            let rows: Vec<ToricSystemJson> = systems.iter().map(ToricSystem::to_json).collect();
            Ok((pretty(&rows)?, true))
        }
        SystemCmd::Check { file, surface, cyclic, weak } => {
            let system = read_system(&file)?;
            let plain = surface.build()?;
            let tracked = tracked_matching(&plain, system.basis)?;
            let report = if cyclic {
                check_cyclic_strong(&tracked, &system)
            } else if weak {
                check_exceptional(&tracked, &system)
            } else {
                check_strongly_exceptional(&tracked, &system)
            }
            .map_err(|e| e.to_string())?;
            let info = CheckInfo {
                ok: report.ok,
                failures: report.failures.iter().map(|w| w.to_string()).collect(),
            };
            Ok((pretty(&info)?, report.ok))
        }
        SystemCmd::Gale { file } => {
            let system = read_system(&file)?;
            let dual = system.gale_dual().map_err(|e| e.to_string())?;
            let info = FanInfo {
                rays: dual.rays().to_vec(),
                self_intersections: dual.self_intersections().to_vec(),
                canonical: dual.canonical_form(),
                picard_rank: dual.n() - 2,
                anticanonical_nef: dual.anticanonical_nef(),
            };
            Ok((pretty(&info)?, true))
        }
        SystemCmd::Rotate { file, by, reverse } => {
            let system = read_system(&file)?;
            let mut out = system.rotate(by);
            if reverse {
                out = out.reverse();
            }
            Ok((pretty(&out.to_json())?, true))
        }
    }
}

fn parse_names(arg: Option<String>) -> Result<Option<Vec<String>>, String> {
    Ok(arg.map(|s| s.split(',').map(|p| p.trim().to_string()).collect()))
}

fn run_report(cmd: ReportCmd) -> Result<(String, bool), String> {
    match cmd {
        ReportCmd::Census => {
            let r = reports::census_report().map_err(|e| e.to_string())?;
            Ok((pretty(&r)?, r.ok))
        }
        ReportCmd::Quivers => {
            let r = reports::small_quiver_report().map_err(|e| e.to_string())?;
            Ok((pretty(&r)?, r.ok))
        }
        ReportCmd::Types { surfaces } => {
            let r = match parse_names(surfaces)? {
                None => reports::system_type_report(),
                Some(names) => {
                    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                    reports::system_type_report_for(&refs)
                }
            }
            .map_err(|e| e.to_string())?;
            Ok((pretty(&r)?, r.ok))
        }
        ReportCmd::Dims { max_points } => {
            let r = reports::dimension_report(max_points).map_err(|e| e.to_string())?;
            Ok((pretty(&r)?, r.ok))
        }
        ReportCmd::Obstructions => {
            let r = reports::obstruction_report().map_err(|e| e.to_string())?;
            Ok((pretty(&r)?, r.ok))
        }
        ReportCmd::Mckay { surfaces } => {
            let r = match parse_names(surfaces)? {
                None => reports::mckay_report(),
                Some(names) => {
                    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                    reports::mckay_report_for(&refs)
                }
            }
            .map_err(|e| e.to_string())?;
            Ok((pretty(&r)?, r.ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, ok)) => {
            match cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text + "\n") {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => {
                    // Tolerate a closed pipe (e.g. `| head`); the verdict
                    // still decides the exit code.
                    use std::io::Write;
                    let _ = writeln!(std::io::stdout().lock(), "{text}");
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
