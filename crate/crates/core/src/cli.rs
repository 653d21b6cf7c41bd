//! The `linklab` command line. `run` is the whole program minus process
//! plumbing, so tests can drive it in-process.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::{
    dual_pairs, has_k6_minor, k6, lemma32_pairs, mod2_cycle_basis, suspension, suspension_two_cycle,
    surface_two_cycles, enumerate_one_cycles, AbstractOneCycle, DualPair, Triangle,
};
use crate::geometry::Point3;
use crate::invariants::{
    big_lambda, derive_seed, fuzz_invariance, lambda, moment_curve_k6, random_apex_offset, random_generic_k6, sigma6,
    verify_embedding3, verify_embedding4, InvariantError,
};
use crate::io::{
    parse_document, to_json, EmbeddedSuspensionDocument, EmbeddingDocument, TwoComplexDocument,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "linklab", version, about = "Exact linking invariants of embedded K6 and S(K6)")]
struct Cli {
    /// Write the JSON result here instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the ten dual triangle pairs of K6.
    Pairs,
    /// lambda of an embedded-k6 document (`-` reads stdin).
    Lambda {
        file: String,
        #[arg(long, env = "LINKLAB_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Suspension of a graph document, as a two-complex document.
    Suspend { file: String },
    /// The standard embedding of S(K6) over a moment-curve or random base.
    Sigma6 {
        #[arg(long, value_enum, default_value_t = Base::Moment)]
        base: Base,
        #[arg(long, env = "LINKLAB_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Lambda of an embedded-suspension document.
    Biglambda {
        file: String,
        #[arg(long, env = "LINKLAB_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Check that an embedded-k6 or embedded-suspension document is an embedding.
    Verify { file: String },
    /// Whether a graph document has a K6 minor.
    Minor { file: String },
    /// Exhaustive disjoint (1-cycle, surface 2-cycle) search in S(K6).
    Lemma32,
    /// Random suspension embeddings; fails unless every trial gives lambda = Lambda = 1.
    Fuzz {
        #[arg(long)]
        trials: u64,
        #[arg(long, env = "LINKLAB_SEED", default_value_t = 0)]
        seed: u64,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Base {
    Moment,
    Random,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MinorReport {
    pub has_k6_minor: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclePair {
    pub cycle: AbstractOneCycle,
    /// Oriented faces of the surface, as vertex triples.
    pub surface: Vec<[usize; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Lemma32Report {
    pub one_cycles: usize,
    pub nonzero_two_cycles: u64,
    pub surface_two_cycles: usize,
    /// Number of surface 2-cycles of each genus.
    pub surface_genera: BTreeMap<u32, usize>,
    pub pairs: Vec<CyclePair>,
    /// The pairs are exactly the triangles with the suspensions of their duals.
    pub matches_dual_suspensions: bool,
}

/// Exhaustive search over S(K6), summarized.
pub fn lemma32_report() -> Result<Lemma32Report, InvariantError> {
    let c = suspension(&k6());
    let ones = enumerate_one_cycles(&c)?;
    let rank = mod2_cycle_basis(&c)?.len();
    let surfaces = surface_two_cycles(&c)?;
    let mut surface_genera = BTreeMap::new();
    for z in &surfaces {
        let genus = ((2 - z.euler_characteristic(&c)) / 2) as u32;
        *surface_genera.entry(genus).or_insert(0) += 1;
    }
    let found = lemma32_pairs(&c)?;
    let mut expected = Vec::new();
    for t in Triangle::all() {
        expected.push((AbstractOneCycle::from(t), suspension_two_cycle(&c, t.dual())?));
    }
    expected.sort();
    Ok(Lemma32Report {
        one_cycles: ones.len(),
        nonzero_two_cycles: (1u64 << rank) - 1,
        surface_two_cycles: surfaces.len(),
        surface_genera,
        matches_dual_suspensions: found == expected,
        pairs: found
            .iter()
            .map(|(z1, z2)| CyclePair {
                cycle: z1.clone(),
                surface: z2.oriented_faces(&c),
            })
            .collect(),
    })
}

enum Failure {
    /// Computation ran; the result is a failed check. The document is still emitted.
    Check(String),
    Input(String),
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::InvalidEmbedding(_) => Failure::Check(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<Vec<u8>, Failure> {
    let mut buf = Vec::new();
    if path == "-" {
        stdin
            .read_to_end(&mut buf)
            .map_err(|e| Failure::Input(format!("reading stdin: {e}")))?;
    } else {
        buf = std::fs::read(path).map_err(|e| Failure::Input(format!("reading {path}: {e}")))?;
    }
    Ok(buf)
}

fn load(path: &str, stdin: &mut dyn Read) -> Result<EmbeddingDocument, Failure> {
    let bytes = read_input(path, stdin)?;
    parse_document(&bytes).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

fn wrong_kind(path: &str, doc: &EmbeddingDocument, want: &str) -> Failure {
    Failure::Input(format!("{path}: expected a {want} document, got {}", doc.kind()))
}

/// Run the command line. Returns the process exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return if code == 0 { EXIT_OK } else { EXIT_INPUT };
        }
    };
    let (document, failure) = match execute(&cli.command, stdin) {
        Ok((doc, check)) => (Some(doc), check.map(Failure::Check)),
        Err(f) => (None, Some(f)),
    };
    if let Some(doc) = document {
        let written = match &cli.output {
            Some(path) => std::fs::write(path, doc.as_bytes()).map_err(|e| format!("writing {}: {e}", path.display())),
            None => stdout.write_all(doc.as_bytes()).map_err(|e| format!("writing stdout: {e}")),
        };
        if let Err(e) = written {
            let _ = writeln!(stderr, "linklab: {e}");
            return EXIT_INPUT;
        }
    }
    match failure {
        None => EXIT_OK,
        Some(Failure::Check(m)) => {
            let _ = writeln!(stderr, "linklab: {m}");
            EXIT_FAILURE
        }
        Some(Failure::Input(m)) => {
            let _ = writeln!(stderr, "linklab: {m}");
            EXIT_INPUT
        }
    }
}

/// The emitted document, and a failed check if there was one.
fn execute(command: &Command, stdin: &mut dyn Read) -> Result<(String, Option<String>), Failure> {
    match command {
        Command::Pairs => Ok((to_json(&dual_pairs()), None)),
        Command::Lambda { file, seed } => {
            let doc = load(file, stdin)?;
            let EmbeddingDocument::EmbeddedK6(d) = &doc else {
                return Err(wrong_kind(file, &doc, "embedded-k6"));
            };
            let e = d.to_embedding().map_err(|e| Failure::Input(e.to_string()))?;
            let report = lambda(&e, *seed)?;
            let check = (report.value != Some(1)).then(|| format!("lambda is {:?}, expected 1", report.value));
            Ok((to_json(&report), check))
        }
        Command::Suspend { file } => {
            let doc = load(file, stdin)?;
            let EmbeddingDocument::Graph(d) = &doc else {
                return Err(wrong_kind(file, &doc, "graph"));
            };
            let g = d.to_graph().map_err(|e| Failure::Input(e.to_string()))?;
            Ok((to_json(&TwoComplexDocument::from_complex(&suspension(&g))), None))
        }
        Command::Sigma6 { base, seed } => {
            let s = match base {
                Base::Moment => sigma6(&moment_curve_k6(), &Point3::origin(), &Point3::origin())?,
                Base::Random => {
                    let b = random_generic_k6(derive_seed(*seed, 0), 100)?;
                    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(*seed, 1));
                    let (a, c) = (random_apex_offset(&mut rng), random_apex_offset(&mut rng));
                    sigma6(&b, &a, &c)?
                }
            };
            Ok((to_json(&EmbeddedSuspensionDocument::from_embedding(&s)), None))
        }
        Command::Biglambda { file, seed } => {
            let doc = load(file, stdin)?;
            let EmbeddingDocument::EmbeddedSuspension(d) = &doc else {
                return Err(wrong_kind(file, &doc, "embedded-suspension"));
            };
            let e = d.to_embedding().map_err(|e| Failure::Input(e.to_string()))?;
            let report = big_lambda(&e, *seed)?;
            let check = if report.diagnostics.parity_anomaly {
                Some("odd absolute sum; Lambda is undefined".to_string())
            } else {
                (report.value != Some(1)).then(|| format!("Lambda is {:?}, expected 1", report.value))
            };
            Ok((to_json(&report), check))
        }
        Command::Verify { file } => {
            let doc = load(file, stdin)?;
            let report = match &doc {
                EmbeddingDocument::EmbeddedK6(d) => {
                    verify_embedding3(&d.to_embedding().map_err(|e| Failure::Input(e.to_string()))?)
                }
                EmbeddingDocument::EmbeddedSuspension(d) => {
                    verify_embedding4(&d.to_embedding().map_err(|e| Failure::Input(e.to_string()))?)
                }
                _ => return Err(wrong_kind(file, &doc, "embedded-k6 or embedded-suspension")),
            };
            let check = (!report.valid).then(|| format!("{} violation(s)", report.violations.len()));
            Ok((to_json(&report), check))
        }
        Command::Minor { file } => {
            let doc = load(file, stdin)?;
            let EmbeddingDocument::Graph(d) = &doc else {
                return Err(wrong_kind(file, &doc, "graph"));
            };
            let g = d.to_graph().map_err(|e| Failure::Input(e.to_string()))?;
            let has = has_k6_minor(&g).map_err(|e| Failure::Input(e.to_string()))?;
            Ok((to_json(&MinorReport { has_k6_minor: has }), None))
        }
        Command::Lemma32 => {
            let report = lemma32_report()?;
            let check = (!report.matches_dual_suspensions).then(|| "pairs differ from (T, S(T-bar))".to_string());
            Ok((to_json(&report), check))
        }
        Command::Fuzz { trials, seed, jobs } => {
            let summary = fuzz_invariance(*trials, *seed, *jobs)?;
            let check = (!summary.ok).then(|| "some trial did not give lambda = Lambda = 1".to_string());
            Ok((to_json(&summary), check))
        }
    }
}

/// Parse the records printed by `pairs`.
pub fn parse_pairs(bytes: &[u8]) -> Result<Vec<DualPair>, crate::io::DocumentError> {
    crate::io::parse_report(bytes)
}
