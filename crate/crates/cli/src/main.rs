use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use serde_json::Value;

use latfix::conegeom::{classify_subspace, Subspace};
use latfix::cyclicity::{
    probe_random_contractions, semigroup_imaginary_check, verify_dimension_cyclicity, Verdict,
};
use latfix::fixlattice::{fixed_space_report_raw, sup_in_fixspace, Conformance};
use latfix::gallery::{canonical_json, case_title, failed_checks, run_case, CASE_IDS};
use latfix::opcore::{NormTag, OperatorFamily, PositiveMatrixOperator};
use latfix::par::Execution;
use latfix::{QMatrix, QVector};

#[derive(Parser)]
#[command(name = "latfix", version, about = "Order structure of fixed spaces of positive contractions")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Worked examples with stored expected reports.
    Gallery {
        /// Directory holding the expected reports.
        #[arg(long, global = true)]
        fixtures: Option<PathBuf>,
        #[command(subcommand)]
        action: GalleryAction,
    },
    /// Classify a subspace: lattice subspace, sublattice or neither.
    Classify {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Fixed space of a commuting family and its order structure.
    Fixspace {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Supremum of a set of vectors inside the common fixed space.
    SupInFix {
        #[arg(short, long)]
        input: PathBuf,
        /// JSON array of vectors.
        #[arg(short, long)]
        g: PathBuf,
    },
    /// Root-of-unity spectrum and the dimension estimate.
    Cyclicity {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Imaginary-axis check for a Metzler generator.
    Semigroup {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Random positive contractions checked for cyclicity, written as JSON lines.
    Probe {
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        dim_max: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Run trials on one thread.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Subcommand)]
enum GalleryAction {
    /// Run one case and compare it with its expected report.
    Run { id: String },
    /// Run every case; succeeds iff all match their expected reports.
    All,
    /// Rewrite the expected reports from the current implementation.
    Regen,
}

const DEFECT: u8 = 1;
const INVALID: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let defect = e
                .downcast_ref::<latfix::Error>()
                .is_some_and(latfix::Error::is_defect);
            ExitCode::from(if defect { DEFECT } else { INVALID })
        }
    }
}

fn dispatch(cli: &Cli) -> anyhow::Result<u8> {
    let json = cli.json;
    match &cli.command {
        Command::Gallery { fixtures, action } => {
            let dir = fixtures.clone().unwrap_or_else(default_fixtures);
            match action {
                GalleryAction::Run { id } => gallery_run(&dir, id, json),
                GalleryAction::All => gallery_all(&dir, json),
                GalleryAction::Regen => gallery_regen(&dir),
            }
        }
        Command::Classify { input } => {
            let f: Subspace = read_json(input)?;
            let c = classify_subspace(&f)?;
            if json {
                print_json(&c)?;
            } else {
                println!("subspace of dimension {} in Q^{}", f.dim(), f.ambient_dim());
                println!("verdict: {}", c.verdict.as_str());
                println!("cone generating: {}", c.cone_generating);
                println!("cone simplicial: {}", c.cone_simplicial);
                println!("ray supports disjoint: {}", c.rays_support_disjoint);
                print_vectors("extreme rays", &c.rays);
            }
            Ok(0)
        }
        Command::Fixspace { input } => {
            let (ms, norm) = read_raw_family(input)?;
            let r = fixed_space_report_raw(&ms, &norm)?;
            if json {
                print_json(&r)?;
            } else {
                println!("norm: {}", r.norm);
                println!("family valid: {}", r.family_valid);
                for i in &r.issues {
                    println!("  issue: {i}");
                }
                println!("fixed space dimension: {}", r.fixed_space.dim());
                print_vectors("basis", r.fixed_space.basis());
                match &r.classification {
                    Some(c) => {
                        println!("verdict: {}", c.verdict.as_str());
                        print_vectors("extreme rays", &c.rays);
                    }
                    None => println!("verdict: zero fixed space"),
                }
                for c in &r.norm_checks {
                    let gf = c.norm_g_f.as_deref().unwrap_or("none");
                    println!("  {}: |g_E| = {}, |g_F| = {}, equal = {}", c.description, c.norm_g_e, gf, c.equal);
                }
                println!("conformance: {:?}", r.conformance);
            }
            Ok(if r.conformance == Conformance::Violated { DEFECT } else { 0 })
        }
        Command::SupInFix { input, g } => {
            let family: OperatorFamily = read_json(input)?;
            let g: Vec<QVector> = read_json(g)?;
            let s = sup_in_fixspace(&family, &g)?;
            if json {
                print_json(&s)?;
            } else {
                println!("sup in E: {}", s.g_e);
                println!("sup in fixed space: {}", s.g_f);
            }
            Ok(0)
        }
        Command::Cyclicity { input } => {
            let t: PositiveMatrixOperator = read_json(input)?;
            let r = verify_dimension_cyclicity(&t)?;
            if json {
                print_json(&r)?;
            } else {
                println!("contractive: {}", r.contractive);
                println!("characteristic polynomial: {}", r.spectrum.char_poly);
                for o in &r.spectrum.orders {
                    println!(
                        "  primitive {}-th roots of unity: geometric multiplicity {}, algebraic {}",
                        o.order, o.multiplicity, o.algebraic
                    );
                }
                println!("non-root-of-unity eigenvalues on the unit circle: {}", r.spectrum.non_cyclotomic_boundary);
                for e in r.estimates.iter().filter(|e| !e.holds) {
                    println!("  estimate fails: n = {}, k = {}", e.n, e.k);
                }
                println!("verdict: {:?}", r.verdict);
            }
            Ok(if r.verdict == Verdict::Fail { DEFECT } else { 0 })
        }
        Command::Semigroup { input } => {
            let a: QMatrix = read_json(input)?;
            let r = semigroup_imaginary_check(&a)?;
            if json {
                print_json(&r)?;
            } else {
                println!("metzler: {}", r.metzler);
                println!("logarithmic sup-norm: {}", r.log_norm_sup);
                println!("zero eigenvalue: {}", r.zero_eigenvalue);
                println!("nonzero imaginary eigenvalue pairs: {}", r.imaginary_pairs);
                println!("verdict: {:?}", r.verdict);
            }
            Ok(if r.verdict == Verdict::Fail { DEFECT } else { 0 })
        }
        Command::Probe { trials, dim_max, seed, out, sequential } => {
            let exec = if *sequential { Execution::Sequential } else { Execution::Parallel };
            let summary = probe_random_contractions(*trials, *dim_max, *seed, exec)?;
            let file = fs::File::create(out).with_context(|| format!("creating {}", out.display()))?;
            summary.write_jsonl(std::io::BufWriter::new(file))?;
            if json {
                print_json(&serde_json::json!({
                    "header": summary.header,
                    "violations": summary.violations,
                }))?;
            } else {
                println!("{} trials, dimension up to {}, seed {}", trials, dim_max, seed);
                println!("violations: {}", summary.violations);
                println!("records written to {}", out.display());
            }
            Ok(if summary.violations > 0 { DEFECT } else { 0 })
        }
    }
}

fn default_fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join("gallery")
}

fn fixture_path(dir: &Path, id: &str) -> PathBuf {
    dir.join(format!("{id}.json"))
}

fn check_id(id: &str) -> anyhow::Result<()> {
    if case_title(id).is_none() {
        bail!(latfix::Error::InvalidInput(format!(
            "unknown gallery case {id:?}; known cases: {}",
            CASE_IDS.join(", ")
        )));
    }
    Ok(())
}

/// Runs a case; returns its report and the list of problems found.
fn evaluate(dir: &Path, id: &str) -> anyhow::Result<(Value, Vec<String>)> {
    let report = run_case(id)?;
    let mut problems: Vec<String> = failed_checks(&report)
        .into_iter()
        .map(|c| format!("check failed: {c}"))
        .collect();
    let path = fixture_path(dir, id);
    match fs::read_to_string(&path) {
        Ok(expected) if expected == canonical_json(&report) => {}
        Ok(_) => problems.push(format!("report differs from {}", path.display())),
        Err(e) => problems.push(format!("cannot read {}: {e}", path.display())),
    }
    Ok((report, problems))
}

fn gallery_run(dir: &Path, id: &str, json: bool) -> anyhow::Result<u8> {
    check_id(id)?;
    let (report, problems) = evaluate(dir, id)?;
    if json {
        print!("{}", canonical_json(&report));
    } else {
        println!("{id}: {}", case_title(id).unwrap_or_default());
        if let Some(checks) = report.get("checks").and_then(Value::as_object) {
            for (name, ok) in checks {
                let mark = if ok.as_bool() == Some(true) { "ok" } else { "FAILED" };
                println!("  {name}: {mark}");
            }
        }
        println!("matches expected report: {}", !problems.iter().any(|p| !p.starts_with("check")));
    }
    for p in &problems {
        eprintln!("{id}: {p}");
    }
    Ok(if problems.is_empty() { 0 } else { DEFECT })
}

fn gallery_all(dir: &Path, json: bool) -> anyhow::Result<u8> {
    let mut summary = serde_json::Map::new();
    let mut all_ok = true;
    for id in CASE_IDS {
        let (_, problems) = evaluate(dir, id)?;
        all_ok &= problems.is_empty();
        if !json {
            let status = if problems.is_empty() { "ok" } else { "MISMATCH" };
            println!("{id:<14} {status}");
        }
        for p in &problems {
            eprintln!("{id}: {p}");
        }
        summary.insert(id.into(), Value::Bool(problems.is_empty()));
    }
    if json {
        print!("{}", canonical_json(&Value::Object(summary)));
    }
    Ok(if all_ok { 0 } else { DEFECT })
}

fn gallery_regen(dir: &Path) -> anyhow::Result<u8> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for id in CASE_IDS {
        let report = run_case(id)?;
        let failed = failed_checks(&report);
        if !failed.is_empty() {
            bail!(latfix::Error::InternalInconsistency(format!(
                "refusing to store {id}: failed checks {failed:?}"
            )));
        }
        let path = fixture_path(dir, id);
        fs::write(&path, canonical_json(&report)).with_context(|| format!("writing {}", path.display()))?;
        println!("wrote {}", path.display());
    }
    Ok(0)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Family JSON read without validation so that invalid families can be
/// reported rather than rejected.
fn read_raw_family(path: &Path) -> anyhow::Result<(Vec<QMatrix>, NormTag)> {
    let v: Value = read_json(path)?;
    let members = v
        .get("members")
        .and_then(Value::as_array)
        .context("family JSON needs a \"members\" array")?;
    let mut ms = vec![];
    let mut norm: Option<NormTag> = None;
    for (i, m) in members.iter().enumerate() {
        let matrix = m.get("matrix").with_context(|| format!("member {i} has no matrix"))?;
        ms.push(serde_json::from_value(matrix.clone()).with_context(|| format!("member {i}"))?);
        let tag: NormTag = match m.get("norm") {
            Some(n) => serde_json::from_value(n.clone()).with_context(|| format!("member {i} norm"))?,
            None => bail!("member {i} has no norm"),
        };
        match &norm {
            Some(prev) if *prev != tag => bail!("members use different norms"),
            _ => norm = Some(tag),
        }
    }
    let norm = norm.context("family is empty")?;
    Ok((ms, norm))
}

fn print_json<T: serde::Serialize>(x: &T) -> anyhow::Result<()> {
    let v = serde_json::to_value(x)?;
    print!("{}", canonical_json(&v));
    Ok(())
}

fn print_vectors(label: &str, vs: &[QVector]) {
    println!("{label}:");
    for v in vs {
        println!("  {v}");
    }
}
