//! Command-line front end for `ybe-core`.
//!
//! Every command produces a [`Report`]; `--format json` prints it verbatim and
//! the default human format renders the same data as text.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use ybe_core::actions::{bijectivity_report, BijectivityReport, CocycleTable};
use ybe_core::atlas::fixtures;
use ybe_core::atlas::{campaign_cocycle, campaign_growth, campaign_main_irr, campaign_rump, CampaignReport};
use ybe_core::cancellative::{
    congruence_checks, eta_window, injective_solution, is_left_cancellative_within, r_bar, CongruenceReport,
    MergeEvent, QuotientMonoid,
};
use ybe_core::words::{relations, GradedQuotient, DEFAULT_MAX_DEGREE};
use ybe_core::{FiniteSolution, FixedPairReport, PresentationKind, PropertyReport, Word};

pub const SCHEMA: &str = "ybe-report/1";

#[derive(Parser, Debug)]
#[command(name = "ybe", version, about = "Finite set-theoretic solutions of the Yang-Baxter equation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Largest word degree considered.
    #[arg(long, global = true)]
    pub max_degree: Option<usize>,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads (default: number of processors).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,

    /// Include wall-clock timings; output is then no longer byte-for-byte reproducible.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Input {
    /// Solution file (JSON with keys n, sigma, gamma).
    pub path: Option<PathBuf>,

    /// Use a built-in fixture instead of a file.
    #[arg(long, conflicts_with = "path")]
    pub example: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Properties of a solution: braid relation, non-degeneracy, Rump conditions, fixed pairs.
    Check {
        #[command(flatten)]
        input: Input,
    },
    /// Relations and growth of M, A or A'.
    Monoid {
        #[arg(long, default_value = "M")]
        kind: PresentationKind,
        /// List the words of every class.
        #[arg(long)]
        classes: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Injectivity and surjectivity of both cocycles per degree.
    Cocycle {
        #[command(flatten)]
        input: Input,
    },
    /// Left cancellative congruence inside a degree window.
    Eta {
        /// Largest witness degree (default: max degree - 1).
        #[arg(long)]
        witness_bound: Option<usize>,
        #[command(flatten)]
        input: Input,
    },
    /// Exhaustive campaigns over small sets.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        campaign: Campaign,
    },
    /// List the built-in fixtures, or print one as a solution file.
    Example { name: Option<String> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Campaign {
    MainIrr,
    Rump,
    Cocycle,
    Growth,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionFile {
    pub n: usize,
    pub sigma: Vec<Vec<usize>>,
    pub gamma: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

impl SolutionFile {
    pub fn solution(&self) -> ybe_core::Result<FiniteSolution> {
        FiniteSolution::validate(self.n, &self.sigma, &self.gamma)
    }

    pub fn from_solution(s: &FiniteSolution, name: Option<String>, notes: Option<String>) -> Self {
        Self {
            n: s.n(),
            sigma: s.sigma_rows(),
            gamma: s.gamma_rows(),
            name,
            notes,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub input: Option<SolutionFile>,
    pub result: Payload,
    /// Statements that should hold and did not.
    pub violations: Vec<String>,
    pub timing_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Payload {
    Check(CheckResult),
    Monoid(MonoidResult),
    Cocycle(BijectivityReport),
    Eta(EtaResult),
    Enumerate(CampaignReport),
    Examples(Vec<FixtureInfo>),
    Example(SolutionFile),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RumpVerdict {
    pub r1: bool,
    pub r2: bool,
    pub r3: bool,
    pub agrees_with_braid: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HFacts {
    /// `h(x) = σ_x⁻¹(x)`.
    pub h: Vec<usize>,
    pub bijective: bool,
    /// `x ↦ γ_x⁻¹(x)` when every `γ_x` is bijective.
    pub gamma_diagonal_inverse: Option<Vec<usize>>,
    /// Whether the second map inverts the first.
    pub inverse_matches: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub properties: PropertyReport,
    pub rump: Option<RumpVerdict>,
    pub h_map: Option<HFacts>,
    pub fixed_pairs: FixedPairReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidResult {
    pub kind: PresentationKind,
    pub relations: Vec<(Word, Word)>,
    pub growth: Vec<usize>,
    pub classes: Option<Vec<Vec<Vec<Word>>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RBarEntry {
    pub a: Word,
    pub b: Word,
    /// Representatives of `r̄(ā, b̄)`, or the reason it is undecided in the window.
    pub value: Result<(Word, Word), String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaResult {
    pub witness_bound: usize,
    pub sweeps: usize,
    pub stable_within_window: bool,
    pub merges: Vec<MergeEvent>,
    /// Per degree, the A-classes merged into one η-class (singletons omitted).
    pub merged_blocks: Vec<Vec<Vec<Word>>>,
    pub growth: Vec<usize>,
    pub left_cancellative: bool,
    pub injective: bool,
    pub congruence: CongruenceReport,
    pub r_bar_on_letters: Vec<RBarEntry>,
    pub restriction_matches_r: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureInfo {
    pub name: String,
    pub n: usize,
    pub summary: String,
    pub facts: Vec<String>,
}

fn load(input: &Input) -> anyhow::Result<(FiniteSolution, SolutionFile)> {
    match (&input.path, &input.example) {
        (_, Some(name)) => {
            let fx = fixtures::fixture(name)?;
            let file = SolutionFile::from_solution(&fx.solution, Some(fx.name.to_string()), None);
            Ok((fx.solution, file))
        }
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let file: SolutionFile =
                serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
            let s = file.solution().with_context(|| format!("invalid solution in {}", path.display()))?;
            Ok((s, file))
        }
        (None, None) => bail!("no input: pass a solution file or --example NAME"),
    }
}

fn param(v: impl Serialize) -> serde_json::Value {
    serde_json::to_value(v).expect("parameters serialize")
}

/// Runs one command. Errors correspond to invalid input or unsupported sizes.
pub fn run(cli: &Cli) -> anyhow::Result<Report> {
    let start = Instant::now();
    let mut parameters = BTreeMap::new();
    let mut violations = Vec::new();
    let mut input_echo = None;
    let (command, result) = match &cli.command {
        Command::Check { input } => {
            let (s, file) = load(input)?;
            input_echo = Some(file);
            let r = check(&s);
            if let Some(v) = &r.rump {
                if !v.agrees_with_braid {
                    violations.push("braid relation differs from the conjunction of the Rump conditions".into());
                }
            }
            let p = &r.properties;
            if p.is_ybe && p.nondegenerate() && p.irretractable_sigma {
                if !p.r_bijective {
                    violations.push("irretractable non-degenerate solution is not bijective".into());
                }
                if r.h_map.as_ref().is_some_and(|h| !h.bijective || h.inverse_matches != Some(true)) {
                    violations.push("h is not a bijection inverted by x -> gamma_x^-1(x)".into());
                }
            }
            ("check", Payload::Check(r))
        }
        Command::Monoid { kind, classes, input } => {
            let (s, file) = load(input)?;
            input_echo = Some(file);
            let d = cli.max_degree.unwrap_or(DEFAULT_MAX_DEGREE);
            parameters.insert("kind".into(), param(kind));
            parameters.insert("max_degree".into(), param(d));
            let q = GradedQuotient::build(*kind, &s, d)?;
            let listing = if *classes {
                Some((0..=d).map(|k| q.classes(k)).collect::<ybe_core::Result<Vec<_>>>()?)
            } else {
                None
            };
            let r = MonoidResult {
                kind: *kind,
                relations: relations(*kind, &s).pairs,
                growth: q.growth(),
                classes: listing,
            };
            ("monoid", Payload::Monoid(r))
        }
        Command::Cocycle { input } => {
            let (s, file) = load(input)?;
            input_echo = Some(file);
            let d = cli.max_degree.unwrap_or(DEFAULT_MAX_DEGREE);
            parameters.insert("max_degree".into(), param(d));
            let r = bijectivity_report(&s, d)?;
            violations.extend(r.inconsistencies.iter().cloned());
            ("cocycle", Payload::Cocycle(r))
        }
        Command::Eta { witness_bound, input } => {
            let (s, file) = load(input)?;
            input_echo = Some(file);
            let d = cli.max_degree.unwrap_or(4);
            let w = witness_bound.unwrap_or(d.saturating_sub(1).max(1));
            parameters.insert("max_degree".into(), param(d));
            parameters.insert("witness_bound".into(), param(w));
            let r = eta(&s, d, w)?;
            if !r.congruence.ok() {
                violations.push("eta is not a congruence compatible with the actions inside the window".into());
            }
            ("eta", Payload::Eta(r))
        }
        Command::Enumerate { n, campaign } => {
            parameters.insert("n".into(), param(n));
            parameters.insert("campaign".into(), param(campaign));
            let mut r = match campaign {
                Campaign::MainIrr => campaign_main_irr(*n)?,
                Campaign::Rump => campaign_rump(*n)?,
                Campaign::Cocycle => {
                    let d = cli.max_degree.unwrap_or(4);
                    parameters.insert("max_degree".into(), param(d));
                    parameters.insert("seed".into(), param(cli.seed));
                    campaign_cocycle(*n, d, cli.seed)?
                }
                Campaign::Growth => {
                    let d = cli.max_degree.unwrap_or(5);
                    parameters.insert("max_degree".into(), param(d));
                    campaign_growth(*n, d)?
                }
            };
            if !cli.timing {
                r.elapsed_ms = None;
            }
            violations.extend(r.violations.iter().map(|v| v.reason.clone()));
            ("enumerate", Payload::Enumerate(r))
        }
        Command::Example { name } => match name {
            None => {
                let list = fixtures::builtin_examples()
                    .into_iter()
                    .map(|f| FixtureInfo {
                        name: f.name.into(),
                        n: f.solution.n(),
                        summary: f.summary.into(),
                        facts: f.facts.iter().map(|s| s.to_string()).collect(),
                    })
                    .collect();
                ("example", Payload::Examples(list))
            }
            Some(name) => {
                let fx = fixtures::fixture(name)?;
                let file = SolutionFile::from_solution(&fx.solution, Some(fx.name.into()), Some(fx.summary.into()));
                parameters.insert("name".into(), param(name));
                ("example", Payload::Example(file))
            }
        },
    };
    Ok(Report {
        schema: SCHEMA.into(),
        command: command.into(),
        parameters,
        input: input_echo,
        result,
        violations,
        timing_ms: cli.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

pub fn check(s: &FiniteSolution) -> CheckResult {
    let properties = s.properties();
    let rump = s.rump_conditions().ok().map(|(r1, r2, r3)| RumpVerdict {
        r1,
        r2,
        r3,
        agrees_with_braid: (r1 && r2 && r3) == properties.is_ybe,
    });
    let h_map = s.h_map().ok().map(|h| {
        let h = h.image().to_vec();
        let mut seen = vec![false; h.len()];
        h.iter().for_each(|&v| seen[v] = true);
        let g = s.gamma_diagonal_inverse().ok().map(|g| g.image().to_vec());
        let inverse_matches = g.as_ref().map(|g| (0..h.len()).all(|x| g[h[x]] == x && h[g[x]] == x));
        HFacts {
            bijective: seen.into_iter().all(|b| b),
            h,
            gamma_diagonal_inverse: g,
            inverse_matches,
        }
    });
    CheckResult {
        properties,
        rump,
        h_map,
        fixed_pairs: s.fixed_pair_report(),
    }
}

pub fn eta(s: &FiniteSolution, max_degree: usize, witness_bound: usize) -> anyhow::Result<EtaResult> {
    let ew = eta_window(s, max_degree, witness_bound)?;
    let congruence = congruence_checks(&ew);
    let injective = injective_solution(&ew);
    let merged_blocks = (0..=max_degree).map(|d| ew.merged_blocks(d)).collect();
    let qm = QuotientMonoid::new(ew);
    let letters: Vec<_> = qm.classes(1).collect();
    let mut r_bar_on_letters = Vec::new();
    for &a in &letters {
        for &b in &letters {
            let value = r_bar(&qm, a, b)
                .map(|(u, v)| (qm.rep(u), qm.rep(v)))
                .map_err(|e| e.to_string());
            r_bar_on_letters.push(RBarEntry {
                a: qm.rep(a),
                b: qm.rep(b),
                value,
            });
        }
    }
    let restriction_matches_r = injective.then(|| {
        let n = s.n();
        (0..n).all(|x| {
            (0..n).all(|y| {
                let (u, v) = s.r(x, y);
                let got = r_bar(&qm, qm.letter(x).unwrap(), qm.letter(y).unwrap());
                matches!(got, Ok(p) if p == (qm.letter(u).unwrap(), qm.letter(v).unwrap()))
            })
        })
    });
    let ew = qm.window();
    Ok(EtaResult {
        witness_bound,
        sweeps: ew.sweeps(),
        stable_within_window: ew.stable_within_window(),
        merges: ew.merges().to_vec(),
        merged_blocks,
        growth: ew.growth(),
        left_cancellative: is_left_cancellative_within(&qm),
        injective,
        congruence,
        r_bar_on_letters,
        restriction_matches_r,
    })
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn words(ws: &[Word]) -> String {
    ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" = ")
}

fn cocycle_lines(out: &mut String, name: &str, t: &CocycleTable) {
    let _ = writeln!(out, "{name}: {}", t.classification());
    for row in &t.rows {
        let _ = write!(
            out,
            "  d={} classes {} -> {} injective={} surjective={}",
            row.degree,
            row.source_classes,
            row.target_classes,
            flag(row.injective),
            flag(row.surjective)
        );
        if let Some((a, b)) = &row.injectivity_witness {
            let _ = write!(out, " collision ({a}, {b})");
        }
        if let Some(w) = &row.surjectivity_witness {
            let _ = write!(out, " missed {w}");
        }
        out.push('\n');
    }
}

/// Text rendering of a report.
pub fn render_human(r: &Report) -> String {
    let mut out = String::new();
    if let Some(f) = &r.input {
        let _ = writeln!(out, "solution {} (n = {})", f.name.as_deref().unwrap_or("<file>"), f.n);
    }
    match &r.result {
        Payload::Check(c) => {
            let p = &c.properties;
            for (k, v) in [
                ("is_ybe", p.is_ybe),
                ("left_nondegenerate", p.left_nondegenerate),
                ("right_nondegenerate", p.right_nondegenerate),
                ("involutive", p.involutive),
                ("r_bijective", p.r_bijective),
                ("irretractable", p.irretractable_sigma),
                ("irretractable_gamma", p.irretractable_gamma),
            ] {
                let _ = writeln!(out, "{k}: {}", flag(v));
            }
            if let Some(ce) = &p.counterexample {
                let _ = writeln!(out, "first failure: {:?} at {:?}", ce.check, ce.indices);
            }
            if let Some(v) = &c.rump {
                let _ = writeln!(
                    out,
                    "rump conditions: R1={} R2={} R3={} (agree with braid relation: {})",
                    flag(v.r1),
                    flag(v.r2),
                    flag(v.r3),
                    flag(v.agrees_with_braid)
                );
            }
            if let Some(h) = &c.h_map {
                let _ = writeln!(out, "h = {:?} bijective={}", h.h, flag(h.bijective));
                if let Some(m) = h.inverse_matches {
                    let _ = writeln!(out, "h inverted by x -> gamma_x^-1(x): {}", flag(m));
                }
            }
            let fp = &c.fixed_pairs;
            let _ = writeln!(out, "fixed pairs: {:?} (unique: {})", fp.pairs, flag(fp.unique));
        }
        Payload::Monoid(m) => {
            let _ = writeln!(out, "monoid {}: {} relations", m.kind, m.relations.len());
            for (a, b) in &m.relations {
                let _ = writeln!(out, "  {a} = {b}");
            }
            let _ = writeln!(out, "growth: {:?}", m.growth);
            if let Some(cl) = &m.classes {
                for (d, cs) in cl.iter().enumerate() {
                    let _ = writeln!(out, "degree {d}:");
                    for c in cs {
                        let _ = writeln!(out, "  {}", words(c));
                    }
                }
            }
        }
        Payload::Cocycle(b) => {
            cocycle_lines(&mut out, "pi", &b.pi);
            cocycle_lines(&mut out, "pi'", &b.pi_prime);
            let _ = writeln!(
                out,
                "sigma maps: injective={} surjective={}; gamma maps: injective={} surjective={}",
                flag(b.sigma_all_injective),
                flag(b.sigma_all_surjective),
                flag(b.gamma_all_injective),
                flag(b.gamma_all_surjective)
            );
        }
        Payload::Eta(e) => {
            let _ = writeln!(
                out,
                "witness bound {}, {} sweeps, stable: {}",
                e.witness_bound,
                e.sweeps,
                flag(e.stable_within_window)
            );
            let _ = writeln!(out, "growth: {:?}", e.growth);
            for (d, blocks) in e.merged_blocks.iter().enumerate() {
                for b in blocks {
                    let _ = writeln!(out, "  d={d}: {}", words(b));
                }
            }
            let _ = writeln!(out, "{} merge events", e.merges.len());
            let _ = writeln!(out, "left cancellative: {}", flag(e.left_cancellative));
            let _ = writeln!(out, "X -> quotient injective: {}", flag(e.injective));
            let _ = writeln!(out, "congruence checks: {}", flag(e.congruence.ok()));
            for entry in &e.r_bar_on_letters {
                match &entry.value {
                    Ok((u, v)) => {
                        let _ = writeln!(out, "  r({}, {}) = ({u}, {v})", entry.a, entry.b);
                    }
                    Err(msg) => {
                        let _ = writeln!(out, "  r({}, {}) undecided: {msg}", entry.a, entry.b);
                    }
                }
            }
            if let Some(m) = e.restriction_matches_r {
                let _ = writeln!(out, "r-bar on letters equals r: {}", flag(m));
            }
        }
        Payload::Enumerate(c) => {
            let _ = writeln!(out, "campaign {} n={} ({})", c.campaign, c.n, c.mode);
            let _ = writeln!(out, "candidates: {}", c.candidates);
            let _ = writeln!(out, "solutions: {}", c.solutions);
            for (k, v) in &c.tallies {
                let _ = writeln!(out, "  {k}: {v}");
            }
            for (k, v) in &c.classifications {
                let _ = writeln!(out, "  [{v}] {k}");
            }
            for (k, v) in &c.fixtures {
                let _ = writeln!(out, "  fixture {k}: {v}");
            }
            let _ = writeln!(out, "violations: {}", c.violations.len());
            for v in &c.violations {
                let _ = writeln!(out, "  {:?}: {} sigma={:?} gamma={:?}", v.index, v.reason, v.sigma, v.gamma);
            }
        }
        Payload::Examples(list) => {
            for f in list {
                let _ = writeln!(out, "{:<16} n={}  {}", f.name, f.n, f.summary);
            }
        }
        Payload::Example(f) => {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(f).expect("solution file serializes"));
        }
    }
    if !matches!(r.result, Payload::Enumerate(_)) && !r.violations.is_empty() {
        let _ = writeln!(out, "violations:");
        for v in &r.violations {
            let _ = writeln!(out, "  {v}");
        }
    }
    if let Some(ms) = r.timing_ms {
        let _ = writeln!(out, "time: {ms} ms");
    }
    out
}

pub fn render(r: &Report, format: Format) -> String {
    match format {
        Format::Human => render_human(r),
        Format::Json => serde_json::to_string_pretty(r).expect("report serializes") + "\n",
    }
}
