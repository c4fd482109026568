//! `schubert`: root systems, Demazure characters and exhaustive sweeps.
//!
//! Words are comma-separated 1-based simple-root indices read as a
//! composition `s_{i1} ∘ … ∘ s_{in}`: the operator of the last letter is
//! applied first. In A2, `demazure --word 2,1 --weight-root 1,1` gives the
//! five weights α1+α2, α1, α2, 0, −α2.
//!
//! Exit status: 0 pass, 1 counterexample, 2 usage or applicability error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use schubert_core::charring::demazure_along_word;
use schubert_core::cohomology::{
    remark_b2_check, verify_cor37, verify_lemma26, verify_lemma61, verify_thm42, verify_thm42_all,
    verify_thm_a, verify_thm_b_criterion, SweepConfig,
};
use schubert_core::coxeter::{
    verify_cor52_53_58, verify_lemma54_55_56, verify_prop51, verify_thm_c_type_a,
};
use schubert_core::report::Labeling;
use schubert_core::{
    CartanType, Character, Error, Family, Report, RootSystem, Weight, Word, DEFAULT_GUARD,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "schubert",
    version,
    about = "Exact Weyl-group sweeps over Demazure characters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Cartan type, e.g. A3, D4, G2.
    #[arg(long = "type")]
    cartan_type: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Largest Weyl group order a sweep may enumerate.
    #[arg(long, env = "SCHUBERT_GUARD", default_value_t = DEFAULT_GUARD)]
    guard: u64,
    /// Worker threads for sweeps (0 = all cores).
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Write the rendered output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a root system.
    Roots {
        #[command(flatten)]
        common: Common,
    },
    /// Apply the Demazure operators of a word to a single weight.
    Demazure {
        #[command(flatten)]
        common: Common,
        /// Comma-separated letters; the last one acts first.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Weight in fundamental-weight coordinates.
        #[arg(
            long,
            allow_hyphen_values = true,
            conflicts_with = "weight_root",
            required_unless_present = "weight_root"
        )]
        weight_fund: Option<String>,
        /// Weight in simple-root coordinates.
        #[arg(long, allow_hyphen_values = true)]
        weight_root: Option<String>,
    },
    /// Run one named check.
    Verify {
        check: Check,
        #[command(flatten)]
        common: Common,
        /// Restrict thm42 to one simple root.
        #[arg(long)]
        alpha: Option<usize>,
    },
    /// Run every check applicable to the type.
    Sweep {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Check {
    #[value(name = "thmA")]
    ThmA,
    #[value(name = "cor37")]
    Cor37,
    #[value(name = "thm42")]
    Thm42,
    #[value(name = "thmB")]
    ThmB,
    #[value(name = "prop51")]
    Prop51,
    #[value(name = "lemma26")]
    Lemma26,
    #[value(name = "lemma54_56")]
    Lemma54_56,
    #[value(name = "thmC_typeA")]
    ThmCTypeA,
    #[value(name = "cor52_53_58")]
    Cor52_53_58,
    #[value(name = "lemma61")]
    Lemma61,
    #[value(name = "remarkB2")]
    RemarkB2,
}

/// Failure modes that map to exit status 2 (or 1 for `Invariant`).
struct Failure(Error);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Invariant(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Roots { common } => {
            let rs = build(&common)?;
            let text = match common.format {
                Format::Table => roots_table(&rs),
                Format::Json => serde_json::to_string_pretty(&roots_json(&rs)).expect("json"),
            };
            emit(&common, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Demazure {
            common,
            word,
            weight_fund,
            weight_root,
        } => {
            let rs = build(&common)?;
            let word: Word = word
                .parse()
                .map_err(|_| Failure(Error::Parse(format!("word {word:?}"))))?;
            let lambda = match (weight_fund, weight_root) {
                (Some(f), _) => {
                    let w = Weight::new(parse_ints(&f)?);
                    check_rank(&rs, &w)?;
                    w
                }
                (None, Some(r)) => rs.from_root_coords(&parse_ints(&r)?)?,
                (None, None) => unreachable!("clap requires one weight"),
            };
            let f = Character::monomial(lambda.clone());
            let out = demazure_along_word(&rs, &word, &f)?;
            let text = match common.format {
                Format::Table => format!("{}\n", out.render(&rs)),
                Format::Json => {
                    let terms: Vec<_> = out
                        .sorted_terms(&rs)
                        .into_iter()
                        .map(|(w, c)| json!({ "weight": w.coords(), "root": rs.format_root_coords(&w), "multiplicity": c }))
                        .collect();
                    serde_json::to_string_pretty(&json!({
                        "type": rs.cartan_type().to_string(),
                        "word": word.to_string(),
                        "weight": lambda.coords(),
                        "terms": terms,
                        "dimension": out.dimension(),
                    }))
                    .expect("json")
                }
            };
            emit(&common, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            check,
            common,
            alpha,
        } => {
            let rs = build(&common)?;
            let cfg = SweepConfig {
                guard: common.guard,
                workers: common.workers,
            };
            let report = verify(&rs, check, alpha, &cfg)?;
            finish(&common, &report)
        }
        Command::Sweep { common } => {
            let rs = build(&common)?;
            let cfg = SweepConfig {
                guard: common.guard,
                workers: common.workers,
            };
            let order = rs.cartan_type().weyl_group_order();
            if order > cfg.guard as u128 {
                return Err(Error::GuardExceeded {
                    order,
                    guard: cfg.guard,
                }
                .into());
            }
            let start = Instant::now();
            let mut report = Report::new("sweep", &rs);
            for check in applicable(&rs) {
                report.push_child(verify(&rs, check, None, &cfg)?);
            }
            finish(&common, &report.finish(start))
        }
    }
}

fn build(common: &Common) -> Result<RootSystem, Failure> {
    let ct: CartanType = common.cartan_type.parse()?;
    Ok(RootSystem::build(ct)?)
}

fn parse_ints(s: &str) -> Result<Vec<i64>, Failure> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Failure(Error::Parse(format!("integer {p:?}"))))
        })
        .collect()
}

fn check_rank(rs: &RootSystem, w: &Weight) -> Result<(), Failure> {
    if w.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            got: w.rank(),
        }
        .into());
    }
    Ok(())
}

fn verify(
    rs: &RootSystem,
    check: Check,
    alpha: Option<usize>,
    cfg: &SweepConfig,
) -> Result<Report, Error> {
    match check {
        Check::ThmA => verify_thm_a(rs, cfg),
        Check::Cor37 => verify_cor37(rs, cfg),
        Check::Thm42 => match alpha {
            Some(a) => verify_thm42(rs, a, cfg),
            None => verify_thm42_all(rs, cfg),
        },
        Check::ThmB => verify_thm_b_criterion(rs, cfg),
        Check::Prop51 => verify_prop51(rs, cfg),
        Check::Lemma26 => verify_lemma26(rs),
        Check::Lemma54_56 => verify_lemma54_55_56(rs, cfg),
        Check::ThmCTypeA => verify_thm_c_type_a(rs),
        Check::Cor52_53_58 => verify_cor52_53_58(rs, cfg),
        Check::Lemma61 => verify_lemma61(rs),
        Check::RemarkB2 => remark_b2_check(rs),
    }
}

fn applicable(rs: &RootSystem) -> Vec<Check> {
    let mut out = Vec::new();
    if rs.is_simply_laced() {
        out.extend([
            Check::Lemma26,
            Check::ThmA,
            Check::Cor37,
            Check::Thm42,
            Check::Lemma54_56,
            Check::Prop51,
        ]);
        out.push(Check::Cor52_53_58);
        if rs.cartan_type().family() == Family::A {
            out.push(Check::ThmCTypeA);
        }
    } else {
        out.extend([Check::ThmB, Check::Lemma61, Check::Prop51]);
        if rs.cartan_type().to_string() == "B2" {
            out.push(Check::RemarkB2);
        }
    }
    out
}

fn finish(common: &Common, report: &Report) -> Result<ExitCode, Failure> {
    let text = match common.format {
        Format::Table => report.render_table(),
        Format::Json => report.to_json() + "\n",
    };
    emit(common, &text)?;
    Ok(if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn emit(common: &Common, text: &str) -> Result<(), Failure> {
    match &common.out {
        Some(path) => fs::write(path, text).map_err(|e| {
            Failure(Error::NotApplicable(format!(
                "cannot write {}: {e}",
                path.display()
            )))
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn roots_table(rs: &RootSystem) -> String {
    let lab = Labeling::of(rs);
    let mut out = format!(
        "type {} (rank {}, Bourbaki labeling)\n",
        rs.cartan_type(),
        rs.rank()
    );
    out.push_str(&format!(
        "diagram: {}\n",
        if lab.diagram.is_empty() {
            "-".into()
        } else {
            lab.diagram.join(", ")
        }
    ));
    out.push_str("cartan matrix (row i: <α_j, α_i∨>):\n");
    for row in rs.cartan_matrix() {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
        out.push_str(&format!("  {}\n", cells.join("")));
    }
    for i in 1..=rs.rank() {
        let r = rs.simple_root(i).expect("in range");
        let len = if rs.is_simply_laced() || r.long {
            "long"
        } else {
            "short"
        };
        out.push_str(&format!("  α{i} = {} ({len})\n", r.weight));
    }
    out.push_str(&format!(
        "roots: {} ({} positive)\n",
        rs.roots().len(),
        rs.num_positive_roots()
    ));
    let hr = rs.highest_root();
    out.push_str(&format!(
        "highest root: {} = {} ({})\n",
        rs.format_root_coords(&hr.weight),
        hr.weight,
        if rs.is_simply_laced() || hr.long {
            "long"
        } else {
            "short"
        }
    ));
    let hs = rs.highest_short_root();
    out.push_str(&format!(
        "highest short root: {} = {}\n",
        rs.format_root_coords(&hs.weight),
        hs.weight
    ));
    out.push_str(&format!("rho: {}\n", rs.rho()));
    out.push_str(&format!("|W| = {}\n", rs.cartan_type().weyl_group_order()));
    out
}

fn roots_json(rs: &RootSystem) -> serde_json::Value {
    let roots: Vec<_> = rs
        .roots()
        .iter()
        .map(|r| json!({ "root": r.root_coords, "weight": r.weight.coords(), "height": r.height, "long": r.long }))
        .collect();
    json!({
        "type": rs.cartan_type().to_string(),
        "rank": rs.rank(),
        "labeling": Labeling::of(rs),
        "cartan_matrix": rs.cartan_matrix(),
        "num_roots": rs.roots().len(),
        "highest_root": rs.highest_root().root_coords,
        "highest_short_root": rs.highest_short_root().root_coords,
        "rho": rs.rho().coords(),
        "weyl_group_order": rs.cartan_type().weyl_group_order().to_string(),
        "roots": roots,
    })
}
