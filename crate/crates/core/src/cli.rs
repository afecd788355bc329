//! Batch front end: parses arguments, reads one input file and streams a
//! plain-text report.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::braiding::{dynkin_of, parse_braiding, BraidingFile, BraidingMatrix};
use crate::classify::{classify_braiding, ClassifyConfig};
use crate::exec::{with_threads, Exec};
use crate::nichols::{graded_dims, presentation, verify_relation, NicholsConfig, NicholsError, RelationMode};
use crate::scalars::{parse_scalar, SpecializationMap};
use crate::superhopf::{bosonize, parse_presentation, serialize_presentation, SuperHopfError};
use crate::weyl::{
    atlas_to_dot, explore, export_atlas, export_roots, verify_reflection_identities, verify_root_system, AtlasStatus,
    ExploreConfig,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Dot,
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Matches every connected component against the super-type families.
    Classify {
        file: PathBuf,
        /// Also explore each groupoid and compare its root sets with the family's.
        #[arg(long)]
        cross_check: bool,
    },
    /// Positive roots of the seed object.
    Roots {
        file: PathBuf,
        /// Object cap for the groupoid exploration.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// The Weyl groupoid atlas and its root-system axioms.
    Weyl { file: PathBuf },
    /// Graded dimensions of the Nichols algebra.
    Hilbert {
        file: PathBuf,
        #[arg(long)]
        max_degree: usize,
    },
    /// Defining relations of the Nichols algebra.
    Relations {
        file: PathBuf,
        /// Check each relation against the quantum symmetrizer.
        #[arg(long)]
        verify: bool,
        /// Use the reduced power-root-vector sets.
        #[arg(long)]
        minimal: bool,
    },
    /// Bosonization of a Hopf superalgebra presentation.
    Bosonize { file: PathBuf },
    /// The generalized Dynkin diagram in DOT format.
    Dot { file: PathBuf },
}

impl Command {
    fn file(&self) -> &PathBuf {
        match self {
            Command::Classify { file, .. }
            | Command::Roots { file, .. }
            | Command::Weyl { file }
            | Command::Hilbert { file, .. }
            | Command::Relations { file, .. }
            | Command::Bosonize { file }
            | Command::Dot { file } => file,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Parser)]
#[command(name = "nichols", version, about = "Nichols algebras of super type, Weyl groupoids and bosonization")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads (0 = one per core; 1 = sequential).
    #[arg(long, global = true, env = "NICHOLS_THREADS", default_value_t = 0)]
    pub threads: usize,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub object_cap: Option<u64>,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub root_cap: Option<u64>,
    /// Total-degree cap for symmetrizer work. `hilbert` defaults to 8;
    /// `relations` is bounded only by the block cap unless this is given.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub degree_cap: Option<u64>,
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub block_cap: Option<u64>,
    /// Specializes a generic parameter, e.g. `q=z^1/5`.
    #[arg(long = "at", global = true, value_name = "NAME=z^k")]
    pub at: Vec<String>,
    #[arg(long, global = true, value_enum, default_value_t)]
    pub format: OutputFormat,
}

/// A failure carrying its exit code.
struct Fail(i32, String);

type Outcome = Result<i32, Fail>;

fn malformed(msg: impl ToString) -> Fail {
    Fail(EXIT_MALFORMED, msg.to_string())
}

fn nichols_fail(e: NicholsError) -> Fail {
    match e {
        NicholsError::CapExceeded { .. } => Fail(EXIT_CAP, e.to_string()),
        _ => malformed(e),
    }
}

/// Parses `args` (program name first), runs, and returns the exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            code
        }
    }
}

/// Runs one command inside a pool of `cfg.threads` workers.
pub fn run(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut buf = Vec::new();
    let result = with_threads(cfg.threads, || dispatch(cfg, &mut buf));
    let _ = out.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(Fail(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn exec(cfg: &RunConfig) -> Exec {
    if cfg.threads == 1 {
        Exec::Sequential
    } else {
        Exec::Parallel
    }
}

fn explore_config(cfg: &RunConfig) -> ExploreConfig {
    let d = ExploreConfig::default();
    ExploreConfig {
        object_cap: cfg.object_cap.map_or(d.object_cap, |c| c as usize),
        root_cap: cfg.root_cap.map_or(d.root_cap, |c| c as usize),
        cartan_cap: None,
        exec: exec(cfg),
    }
}

fn nichols_config(cfg: &RunConfig, default_degree_cap: usize) -> NicholsConfig {
    let d = NicholsConfig::default();
    NicholsConfig {
        degree_cap: cfg.degree_cap.map_or(default_degree_cap, |c| c as usize),
        block_cap: cfg.block_cap.map_or(d.block_cap, |c| c as usize),
        exec: exec(cfg),
    }
}

/// Builds the specialization map from `NAME=literal` assignments; the target
/// order is the lcm of the file's torsion order and the assigned values.
pub fn specialization(at: &[String], ambient: u64) -> Result<Option<SpecializationMap>, String> {
    if at.is_empty() {
        return Ok(None);
    }
    let mut vals = Vec::new();
    let mut order = ambient;
    for a in at {
        let (name, lit) = a.split_once('=').ok_or_else(|| format!("expected NAME=z^k, got `{a}`"))?;
        let v = parse_scalar(lit.trim(), ambient).map_err(|e| format!("`{a}`: {e}"))?;
        if !v.is_torsion() {
            return Err(format!("`{a}`: value must be a root of unity"));
        }
        order = num_integer::lcm(order, v.torsion_order());
        vals.push((name.trim().to_string(), v));
    }
    let mut m = SpecializationMap::new(order);
    for (name, v) in vals {
        let k = v.with_ambient(order).expect("order divides the lcm").torsion_exp();
        m = m.assign(&name, k as i64);
    }
    Ok(Some(m))
}

fn read(cfg: &RunConfig) -> Result<String, Fail> {
    let path = cfg.command.file();
    std::fs::read_to_string(path).map_err(|e| malformed(format!("{}: {e}", path.display())))
}

fn load_braiding(cfg: &RunConfig) -> Result<BraidingFile, Fail> {
    let text = read(cfg)?;
    let mut f = parse_braiding(&text).map_err(malformed)?;
    if let Some(m) = specialization(&cfg.at, f.matrix.ambient()).map_err(malformed)? {
        f.matrix = f.matrix.specialize(&m).map_err(malformed)?;
    }
    Ok(f)
}

fn w(out: &mut Vec<u8>, s: &str) {
    out.extend_from_slice(s.as_bytes());
}

fn dispatch(cfg: &RunConfig, out: &mut Vec<u8>) -> Outcome {
    match &cfg.command {
        Command::Classify { cross_check, .. } => {
            let f = load_braiding(cfg)?;
            let c = ClassifyConfig {
                cross_check: *cross_check,
                explore: explore_config(cfg),
            };
            let reports = classify_braiding(&f.matrix, &c);
            for r in &reports {
                w(out, &format!("{}\n", r.render(f.matrix.ambient())));
            }
            let mismatch = reports.iter().any(|r| matches!(r.cross_check, crate::classify::CrossCheck::Mismatch(_)));
            Ok(if mismatch { EXIT_VERIFY } else { EXIT_OK })
        }
        Command::Roots { cap, .. } => {
            let f = load_braiding(cfg)?;
            let mut ec = explore_config(cfg);
            if let Some(c) = cap {
                ec.object_cap = *c;
            }
            let atlas = explore(&f.matrix, f.parity.clone(), &ec);
            status_code(&atlas.status)?;
            let roots = atlas.positive_roots(0).map_err(|e| Fail(EXIT_VERIFY, e.to_string()))?;
            w(out, &format!("objects {}\npositive roots {}\n", atlas.objects.len(), roots.len()));
            w(out, &export_roots(&roots));
            Ok(EXIT_OK)
        }
        Command::Weyl { .. } => {
            let f = load_braiding(cfg)?;
            let atlas = explore(&f.matrix, f.parity.clone(), &explore_config(cfg));
            if cfg.format == OutputFormat::Dot {
                w(out, &atlas_to_dot(&atlas));
                return status_code(&atlas.status);
            }
            w(out, &export_atlas(&atlas));
            status_code(&atlas.status)?;
            let rs = verify_root_system(&atlas).map_err(|e| Fail(EXIT_VERIFY, e.to_string()))?;
            let refl = verify_reflection_identities(&atlas);
            for v in rs.violations.iter().chain(&refl.violations) {
                w(out, &format!("FAIL {v}\n"));
            }
            if rs.passed() && refl.passed() {
                w(out, "root system axioms hold\n");
                Ok(EXIT_OK)
            } else {
                Ok(EXIT_VERIFY)
            }
        }
        Command::Hilbert { max_degree, .. } => {
            let f = load_braiding(cfg)?;
            let nc = nichols_config(cfg, NicholsConfig::default().degree_cap);
            let t = graded_dims(&f.matrix, *max_degree, &nc).map_err(nichols_fail)?;
            w(out, &t.to_string());
            if let Some(d) = t.total_dimension() {
                w(out, &format!("total : {d}\n"));
            }
            Ok(EXIT_OK)
        }
        Command::Relations { verify, minimal, .. } => {
            let f = load_braiding(cfg)?;
            relations(cfg, &f.matrix, *verify, *minimal, out)
        }
        Command::Bosonize { .. } => {
            let text = read(cfg)?;
            let h = parse_presentation(&text).map_err(malformed)?;
            match bosonize(&h) {
                Ok(hs) => {
                    w(out, &serialize_presentation(&hs));
                    Ok(EXIT_OK)
                }
                Err(SuperHopfError::Axioms(report)) => {
                    w(out, &format!("{report}\n"));
                    Err(Fail(EXIT_VERIFY, "input is not a Hopf superalgebra".into()))
                }
                Err(e) => Err(malformed(e)),
            }
        }
        Command::Dot { .. } => {
            let f = load_braiding(cfg)?;
            w(out, &dynkin_of(&f.matrix).to_dot(f.matrix.ambient()));
            Ok(EXIT_OK)
        }
    }
}

fn status_code(s: &AtlasStatus) -> Outcome {
    match s {
        AtlasStatus::Complete => Ok(EXIT_OK),
        AtlasStatus::ObjectCapExceeded | AtlasStatus::RootCapExceeded | AtlasStatus::ReflectionUndefined { .. } => {
            Err(Fail(EXIT_CAP, format!("groupoid exploration stopped: {s:?}")))
        }
        AtlasStatus::MixedSignRoot { .. } => Err(Fail(EXIT_VERIFY, format!("not a root system: {s:?}"))),
    }
}

fn relations(cfg: &RunConfig, b: &BraidingMatrix, verify: bool, minimal: bool, out: &mut Vec<u8>) -> Outcome {
    let nc = nichols_config(cfg, usize::MAX);
    let mode = if minimal { RelationMode::Minimal } else { RelationMode::Full };
    let rels = presentation(b, mode, &nc).map_err(nichols_fail)?;
    if !verify {
        for r in &rels {
            w(out, &format!("{}\n", r.label()));
        }
        return Ok(EXIT_OK);
    }
    let verdicts = nc.exec.map(&rels, |r| {
        r.element
            .as_ref()
            .map(|e| verify_relation(b, e, None, &nc))
    });
    let (mut failed, mut skipped) = (false, false);
    for (r, v) in rels.iter().zip(verdicts) {
        match v {
            None => {
                skipped = true;
                w(out, &format!("SKIP {} (over cap)\n", r.label()));
            }
            Some(Ok(v)) if v.holds => w(out, &format!("PASS {}\n", r.label())),
            Some(Ok(v)) => {
                failed = true;
                let witness = v.witness.map(|e| e.render()).unwrap_or_default();
                w(out, &format!("FAIL {} witness {witness}\n", r.label()));
            }
            Some(Err(e)) => return Err(nichols_fail(e)),
        }
    }
    Ok(if failed {
        EXIT_VERIFY
    } else if skipped {
        EXIT_CAP
    } else {
        EXIT_OK
    })
}
