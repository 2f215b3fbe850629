//! Command-line surface. [`run`] returns the text a command emits so that
//! the binary and the tests share one code path.

use crate::formats::{self, FormatError};
use crate::parallel::Parallel;
use crate::sample;
use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use neighborly_core::analysis::is_balanced;
use neighborly_core::enumeration::DEFAULT_BUDGET;
use neighborly_core::realization::{lex_subdivision, lift_and_lower_faces, PointConfig};
use neighborly_core::{
    canonical_type, chirotope_of_points, classify, cyclic, enumerate_family, eval_bounds, facets,
    facets_beyond, facets_separating, gale_sew, lex_extend, primal_double_extension, realize_lex_extension,
    stc, universal_flags, Chirotope, Family, FamilySpec, GaleStep, LexSignature,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::io::Read;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "neighborly", version, about = "Construct, check and count neighborly polytopes as oriented matroids")]
pub struct Cli {
    /// Seed for every randomized choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for enumeration; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a seed configuration.
    #[command(subcommand)]
    Gen(Gen),
    /// Lexicographic single-element extension.
    Extend {
        input: Option<PathBuf>,
        /// Signature such as `0+,1-,2+`; random when omitted.
        #[arg(long)]
        sig: Option<String>,
    },
    /// Sew a new vertex through a flag of faces.
    Sew {
        input: Option<PathBuf>,
        /// Flag such as `0,1 < 0,1,2,3`; a random split universal flag when omitted.
        #[arg(long)]
        flag: Option<String>,
    },
    /// Gale sewing of a balanced chirotope.
    GaleSew {
        input: Option<PathBuf>,
        /// Signature `p` of the step; random when omitted.
        #[arg(long)]
        step: Option<String>,
        /// Treat the input as a neighborly polytope and apply the step to its dual.
        #[arg(long)]
        primal: bool,
    },
    Dual {
        input: Option<PathBuf>,
    },
    Minor {
        input: Option<PathBuf>,
        #[arg(long, default_value = "")]
        delete: String,
        #[arg(long, default_value = "")]
        contract: String,
    },
    /// Validate and classify.
    Check {
        input: Option<PathBuf>,
    },
    /// Facets, one per line.
    Faces {
        input: Option<PathBuf>,
    },
    UniversalFlags {
        input: Option<PathBuf>,
    },
    /// Count the combinatorial types of a family.
    Enumerate {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        /// Extra sewings before deletion, family O only.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Print every type before the count.
        #[arg(long)]
        list: bool,
    },
    /// Lower bounds on the number of neighborly polytopes.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Realize a lexicographic extension of a point configuration.
    Realize {
        input: Option<PathBuf>,
        #[arg(long)]
        sig: Option<String>,
    },
    /// Lexicographic subdivision, cross-checked against the lifting.
    Subdivide {
        input: Option<PathBuf>,
        #[arg(long)]
        sig: Option<String>,
        #[arg(long, value_enum, default_value_t = Method::Lex)]
        method: Method,
    },
    /// Canonical facet list.
    Canon {
        input: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Gen {
    /// Alternating chirotope of C(n, d).
    Cyclic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// The simplex with its negated centroid, rank r.
    Stc {
        #[arg(long)]
        r: usize,
    },
    /// Points (t, t², …, t^d) for t = 1..n.
    Moment {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Placing points one at a time.
    Lex,
    /// Lower faces of the perturbed lifting, with the signature negated.
    Lift,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: neighborly_core::Error| e.to_string())
}

/// Output of a command. `failure` is set when an internal verification
/// failed; the text is still emitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub failure: Option<String>,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome { text, failure: None }
    }
}

struct Session<'a> {
    stdin: &'a mut dyn Read,
    rng: ChaCha8Rng,
}

impl Session<'_> {
    fn text(&mut self, path: &Option<PathBuf>) -> anyhow::Result<String> {
        match path {
            Some(p) if p.as_os_str() != "-" => {
                std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))
            }
            _ => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s).context("cannot read standard input")?;
                Ok(s)
            }
        }
    }

    /// A chirotope file, or a point file read through its orientations.
    fn chirotope(&mut self, path: &Option<PathBuf>) -> anyhow::Result<Chirotope> {
        let text = self.text(path)?;
        if formats::looks_like_chirotope(&text) {
            Ok(formats::read_chirotope(&text)?)
        } else {
            Ok(chirotope_of_points(&formats::read_points(&text)?)?)
        }
    }

    fn points(&mut self, path: &Option<PathBuf>) -> anyhow::Result<PointConfig> {
        Ok(formats::read_points(&self.text(path)?)?)
    }

    fn signature_or_random(&mut self, given: &Option<String>, n: usize, len: usize) -> anyhow::Result<LexSignature> {
        match given {
            Some(s) => Ok(formats::parse_signature(s)?),
            None => Ok(sample::signature(&mut self.rng, n, len)),
        }
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

/// Runs one command, reading standard input from `stdin`.
pub fn run(cli: &Cli, stdin: &mut dyn Read) -> anyhow::Result<Outcome> {
    let mut cx = Session { stdin, rng: ChaCha8Rng::seed_from_u64(cli.seed) };
    let text = match &cli.command {
        Command::Gen(Gen::Cyclic { n, d }) => formats::write_chirotope(&cyclic(*n, *d)?),
        Command::Gen(Gen::Stc { r }) => formats::write_chirotope(&stc(*r)?),
        Command::Gen(Gen::Moment { n, d }) => {
            if *n == 0 || *d == 0 {
                bail!("need n >= 1 and d >= 1");
            }
            formats::write_points(&PointConfig::moment_curve(*n, *d))?
        }
        Command::Extend { input, sig } => {
            let chi = cx.chirotope(input)?;
            let sig = cx.signature_or_random(sig, chi.n(), chi.rank())?;
            formats::write_chirotope(&lex_extend(&chi, &sig)?.extended)
        }
        Command::Sew { input, flag } => return sew(&mut cx, input, flag),
        Command::GaleSew { input, step, primal } => {
            let chi = cx.chirotope(input)?;
            let side = if *primal { chi.dual() } else { chi.clone() };
            let step = GaleStep::new(cx.signature_or_random(step, side.n(), side.rank())?);
            let out = if *primal { primal_double_extension(&chi, &step)? } else { gale_sew(&chi, &step)? };
            formats::write_chirotope(&out)
        }
        Command::Dual { input } => formats::write_chirotope(&cx.chirotope(input)?.dual()),
        Command::Minor { input, delete, contract } => {
            let chi = cx.chirotope(input)?;
            let m = chi.minor(formats::parse_elements(delete)?, formats::parse_elements(contract)?)?;
            formats::write_chirotope(&m.result)
        }
        Command::Check { input } => return check(&mut cx, input),
        Command::Faces { input } => formats::write_facets(&facets(&cx.chirotope(input)?)),
        Command::UniversalFlags { input } => {
            universal_flags(&cx.chirotope(input)?).iter().map(formats::write_flag).collect()
        }
        Command::Enumerate { family, d, n, budget, list } => {
            let spec = FamilySpec::new(*family, *d, *n).with_budget(*budget);
            spec.validate()?;
            let exec = Parallel::new(cli.jobs).map_err(|e| anyhow!("cannot start worker threads: {e}"))?;
            formats::write_type_set(&enumerate_family(&spec, &exec)?, *list)
        }
        Command::Bounds { n, d } => {
            let rep = eval_bounds(*n, *d)?;
            let failure = (!rep.passed()).then(|| format!("bound checks failed for n = {n}, d = {d}"));
            return Ok(Outcome { text: formats::write_bound_report(&rep), failure });
        }
        Command::Realize { input, sig } => {
            let cfg = cx.points(input)?;
            let sig = cx.signature_or_random(sig, cfg.len(), cfg.rank())?;
            let out = realize_lex_extension(&cfg, &sig)?;
            let expected = lex_extend(&chirotope_of_points(&cfg)?, &sig)?.extended;
            if chirotope_of_points(&out)? != expected {
                bail!("internal verification failed: realized points do not have the extended chirotope");
            }
            formats::write_points(&out).map_err(|e: FormatError| {
                anyhow!("{e}; the negated signature gives the affine realization")
            })?
        }
        Command::Subdivide { input, sig, method } => {
            let cfg = cx.points(input)?;
            let sig = cx.signature_or_random(sig, cfg.len(), cfg.len())?;
            let lex = lex_subdivision(&cfg, &sig)?;
            let lift = lift_and_lower_faces(&cfg, &sig.negated())?;
            let text = formats::write_subdivision(if *method == Method::Lex { &lex } else { &lift });
            let failure = (lex != lift).then(|| "placing and lifting subdivisions differ".to_string());
            return Ok(Outcome { text, failure });
        }
        Command::Canon { input } => formats::write_type(&canonical_type(&facets(&cx.chirotope(input)?))),
    };
    Ok(Outcome::ok(text))
}

fn sew(cx: &mut Session<'_>, input: &Option<PathBuf>, flag: &Option<String>) -> anyhow::Result<Outcome> {
    let p = cx.chirotope(input)?;
    let flag = match flag {
        Some(f) => formats::parse_flag(f)?,
        None => {
            sample::split_universal_flag(&mut cx.rng, &p).ok_or_else(|| anyhow!("the input has no universal flag"))?
        }
    };
    let out = neighborly_core::sew(&p, &flag)?.extended;
    let mut beyond = facets_beyond(&p, &flag);
    let mut seen = facets_separating(&p, &out);
    beyond.sort();
    seen.sort();
    let failure = (beyond != seen).then(|| "the new vertex is not beyond exactly the predicted facets".to_string());
    Ok(Outcome { text: formats::write_chirotope(&out), failure })
}

fn check(cx: &mut Session<'_>, input: &Option<PathBuf>) -> anyhow::Result<Outcome> {
    let chi = cx.chirotope(input)?;
    let validity = chi.validate();
    let c = classify(&chi);
    let mut text = String::new();
    text.push_str(&format!("n: {}\nrank: {}\n", chi.n(), chi.rank()));
    text.push_str(&format!("valid: {}\n", verdict(validity.is_ok())));
    text.push_str(&format!("acyclic: {}\n", verdict(c.acyclic)));
    text.push_str(&format!("neighborly: {}\n", verdict(c.neighborly)));
    text.push_str(&format!("balanced: {}\n", verdict(c.balanced)));
    text.push_str(&format!("discrepancy: {}\n", c.discrepancy));
    text.push_str(&format!("balanced(dual): {}\n", verdict(chi.rank() == chi.n() || is_balanced(&chi.dual()))));
    Ok(Outcome { text, failure: validity.err().map(|v| v.to_string()) })
}
