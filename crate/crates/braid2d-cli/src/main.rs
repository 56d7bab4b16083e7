mod document;
mod script;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use braid2d::braid::NormalForm;
use braid2d::search::{
    canonical_key, enumerate_tuples, search_equivalence_filtered, verify_trace, MoveFilter,
    SearchBounds, Verdict,
};
use braid2d::surface::{
    abelianization_rank, complement_group, components, count_homs, euler_characteristic_closure,
    genus_list,
};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use document::{parse, serialize, TupleDocument, FORMAT_VERSION};

#[derive(Parser)]
#[command(
    name = "braid2d",
    version,
    about = "Calculus of 2-dimensional braids as band monodromy tuples"
)]
struct Cli {
    /// Emit a stable machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a tuple document parses and closes up (trivial boundary).
    Validate { file: PathBuf },
    /// Closure invariants: Euler characteristic, components, genus,
    /// abelianization rank, and finite hom counts.
    Invariants {
        file: PathBuf,
        /// Count homomorphisms to the symmetric group S_n (repeatable).
        #[arg(long = "hom-n", value_name = "N", default_values_t = [3usize])]
        hom_n: Vec<usize>,
    },
    /// Canonical key: the Garside normal form of every entry expansion.
    NormalForm { file: PathBuf },
    /// Apply a move script and print the resulting document.
    Apply {
        file: PathBuf,
        /// Script such as "H2 H1' C-2 S D".
        #[arg(long)]
        script: String,
    },
    /// Search for a move sequence relating two documents.
    Equiv {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        bounds: BoundsArgs,
        /// Search with Hurwitz moves only.
        #[arg(long)]
        hurwitz_only: bool,
    },
    /// List every valid tuple with the given degree and branch count.
    Enumerate {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        branch_count: usize,
        /// Longest core conjugator to enumerate.
        #[arg(long, default_value_t = 0)]
        max_conj_len: usize,
    },
    /// Partition a directory of tuple documents into bounded
    /// move-equivalence classes.
    Census {
        dir: PathBuf,
        #[command(flatten)]
        bounds: BoundsArgs,
        /// Classify under Hurwitz moves only.
        #[arg(long)]
        hurwitz_only: bool,
    },
}

#[derive(Args)]
struct BoundsArgs {
    /// Longest move trace considered.
    #[arg(long, default_value_t = 8)]
    max_depth: usize,
    /// Degree cap for stabilization; defaults to the largest input degree
    /// plus 2.
    #[arg(long)]
    max_degree: Option<usize>,
    /// Successors with longer core conjugators are pruned.
    #[arg(long, default_value_t = 8)]
    max_conj_len: usize,
    /// Most distinct canonical keys a search may store.
    #[arg(long, default_value_t = 1_000_000)]
    node_budget: u64,
}

impl BoundsArgs {
    fn resolve(&self, largest_degree: usize) -> SearchBounds {
        SearchBounds {
            max_depth: self.max_depth,
            max_degree: self.max_degree.unwrap_or(largest_degree + 2),
            max_conjugator_length: self.max_conj_len,
            node_budget: self.node_budget,
        }
    }
}

struct CliError(String);

impl From<braid2d::Error> for CliError {
    fn from(e: braid2d::Error) -> Self {
        CliError(e.to_string())
    }
}

impl From<document::ParseError> for CliError {
    fn from(e: document::ParseError) -> Self {
        CliError(e.to_string())
    }
}

fn read_document(path: &Path) -> Result<TupleDocument, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError(format!("{}: {}", path.display(), e)))?;
    let doc = parse(&text).map_err(|e| CliError(format!("{}: {}", path.display(), e)))?;
    Ok(doc)
}

fn read_valid_document(path: &Path) -> Result<TupleDocument, CliError> {
    let doc = read_document(path)?;
    doc.tuple
        .validate()
        .map_err(|e| CliError(format!("{}: {}", path.display(), e)))?;
    Ok(doc)
}

fn entry_json(e: &braid2d::surface::BandEntry) -> Value {
    json!({
        "conjugator": e.conjugator().letters(),
        "index": e.index(),
        "exponent": e.exponent(),
    })
}

fn document_json(doc: &TupleDocument) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "label": doc.label,
        "degree": doc.tuple.degree(),
        "entries": doc.tuple.entries().iter().map(entry_json).collect::<Vec<_>>(),
    })
}

fn normal_form_json(nf: &NormalForm) -> Value {
    json!({
        "infimum": nf.infimum(),
        "factors": nf.factors().iter().map(|p| p.images_one_based()).collect::<Vec<_>>(),
    })
}

fn run_validate(file: &Path, as_json: bool) -> Result<(), CliError> {
    let doc = read_valid_document(file)?;
    if as_json {
        println!(
            "{}",
            json!({
                "format_version": FORMAT_VERSION,
                "ok": true,
                "label": doc.label,
                "degree": doc.tuple.degree(),
                "branch_count": doc.tuple.branch_count(),
            })
        );
    } else {
        println!(
            "ok: degree {}, {} branch points",
            doc.tuple.degree(),
            doc.tuple.branch_count()
        );
    }
    Ok(())
}

fn run_invariants(file: &Path, hom_n: &[usize], as_json: bool) -> Result<(), CliError> {
    let doc = read_valid_document(file)?;
    let t = &doc.tuple;
    let g = complement_group(t);
    let genus = genus_list(t)?;
    let rank = abelianization_rank(&g);
    let mut homs = Vec::new();
    for &n in hom_n {
        homs.push((n, count_homs(&g, n)?));
    }
    if as_json {
        let mut hom_map = serde_json::Map::new();
        for (n, count) in &homs {
            hom_map.insert(n.to_string(), json!(count));
        }
        println!(
            "{}",
            json!({
                "format_version": FORMAT_VERSION,
                "label": doc.label,
                "degree": t.degree(),
                "branch_count": t.branch_count(),
                "euler_characteristic": euler_characteristic_closure(t),
                "components": components(t),
                "genus": genus,
                "abelianization_rank": rank,
                "hom_counts": hom_map,
            })
        );
    } else {
        if let Some(label) = &doc.label {
            println!("label {}", label);
        }
        println!("degree {}", t.degree());
        println!("branch points {}", t.branch_count());
        println!("euler characteristic {}", euler_characteristic_closure(t));
        println!("components {}", components(t));
        let genus_strs: Vec<String> = genus.iter().map(u64::to_string).collect();
        println!("genus [{}]", genus_strs.join(", "));
        println!("abelianization rank {}", rank);
        for (n, count) in &homs {
            println!("homs to S{} {}", n, count);
        }
    }
    Ok(())
}

fn run_normal_form(file: &Path, as_json: bool) -> Result<(), CliError> {
    let doc = read_valid_document(file)?;
    let key = canonical_key(&doc.tuple);
    if as_json {
        println!(
            "{}",
            json!({
                "format_version": FORMAT_VERSION,
                "label": doc.label,
                "degree": key.degree(),
                "entries": key.entries().iter().map(normal_form_json).collect::<Vec<_>>(),
            })
        );
    } else {
        println!("degree {}", key.degree());
        for (i, nf) in key.entries().iter().enumerate() {
            println!("entry {} {}", i + 1, nf);
        }
    }
    Ok(())
}

fn run_apply(file: &Path, script_text: &str, as_json: bool) -> Result<(), CliError> {
    let doc = read_valid_document(file)?;
    let moves = script::parse_script(script_text).map_err(CliError)?;
    let tuple = verify_trace(&doc.tuple, &moves)?;
    let out = TupleDocument { label: doc.label, tuple };
    if as_json {
        println!("{}", document_json(&out));
    } else {
        print!("{}", serialize(&out));
    }
    Ok(())
}

fn run_equiv(
    left: &Path,
    right: &Path,
    bounds: &BoundsArgs,
    hurwitz_only: bool,
    as_json: bool,
) -> Result<(), CliError> {
    let a = read_valid_document(left)?;
    let b = read_valid_document(right)?;
    let resolved = bounds.resolve(a.tuple.degree().max(b.tuple.degree()));
    let filter = if hurwitz_only { MoveFilter::HurwitzOnly } else { MoveFilter::All };
    let verdict = search_equivalence_filtered(&a.tuple, &b.tuple, &resolved, filter);
    match &verdict {
        Verdict::Equivalent { trace } => {
            if as_json {
                println!(
                    "{}",
                    json!({
                        "format_version": FORMAT_VERSION,
                        "verdict": "equivalent",
                        "trace": script::format_script(trace),
                        "moves": trace.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                    })
                );
            } else {
                println!("verdict Equivalent");
                println!("trace {}", script::format_script(trace));
            }
        }
        Verdict::Distinct { invariant, left, right } => {
            if as_json {
                println!(
                    "{}",
                    json!({
                        "format_version": FORMAT_VERSION,
                        "verdict": "distinct",
                        "invariant": invariant,
                        "left": left,
                        "right": right,
                    })
                );
            } else {
                println!("verdict Distinct");
                println!("invariant {}", invariant);
                println!("left {}", left);
                println!("right {}", right);
            }
        }
        Verdict::Unknown { explored } => {
            if as_json {
                println!(
                    "{}",
                    json!({
                        "format_version": FORMAT_VERSION,
                        "verdict": "unknown",
                        "explored": explored,
                    })
                );
            } else {
                println!("verdict Unknown");
                println!("explored {}", explored);
            }
        }
    }
    Ok(())
}

fn run_enumerate(
    degree: usize,
    branch_count: usize,
    max_conj_len: usize,
    as_json: bool,
) -> Result<(), CliError> {
    let tuples = enumerate_tuples(degree, branch_count, max_conj_len);
    let docs: Vec<TupleDocument> = tuples
        .into_iter()
        .enumerate()
        .map(|(i, tuple)| TupleDocument {
            label: Some(format!("m{}k{}-{}", degree, branch_count, i + 1)),
            tuple,
        })
        .collect();
    if as_json {
        println!(
            "{}",
            json!({
                "format_version": FORMAT_VERSION,
                "count": docs.len(),
                "tuples": docs.iter().map(document_json).collect::<Vec<_>>(),
            })
        );
    } else {
        for doc in &docs {
            print!("{}\n", serialize(doc));
        }
        println!("total {}", docs.len());
    }
    Ok(())
}

fn run_census(
    dir: &Path,
    bounds: &BoundsArgs,
    hurwitz_only: bool,
    as_json: bool,
) -> Result<(), CliError> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| CliError(format!("{}: {}", dir.display(), e)))?
        .filter_map(|entry| entry.ok())
        .filter(|entry| entry.file_type().map(|t| t.is_file()).unwrap_or(false))
        .map(|entry| entry.path())
        .filter(|p| !p.file_name().unwrap_or_default().to_string_lossy().starts_with('.'))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(CliError(format!("{}: no documents found", dir.display())));
    }
    let mut docs = Vec::new();
    for p in &paths {
        docs.push(read_valid_document(p)?);
    }
    let largest = docs.iter().map(|d| d.tuple.degree()).max().unwrap_or(1);
    let resolved = bounds.resolve(largest);
    let filter = if hurwitz_only { MoveFilter::HurwitzOnly } else { MoveFilter::All };
    // Greedy pairwise classification: each document is matched against the
    // representative of every existing class with a bidirectional search.
    // Unknown counts as unrelated but marks the table as truncated.
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut truncated = false;
    for (i, doc) in docs.iter().enumerate() {
        let mut placed = false;
        for class in classes.iter_mut() {
            let rep = &docs[class[0]].tuple;
            match search_equivalence_filtered(rep, &doc.tuple, &resolved, filter) {
                Verdict::Equivalent { .. } => {
                    class.push(i);
                    placed = true;
                    break;
                }
                Verdict::Unknown { .. } => truncated = true,
                Verdict::Distinct { .. } => {}
            }
        }
        if !placed {
            classes.push(vec![i]);
        }
    }
    let label = |i: usize| {
        docs[i].label.clone().unwrap_or_else(|| {
            paths[i]
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| format!("#{}", i + 1))
        })
    };
    if as_json {
        println!(
            "{}",
            json!({
                "format_version": FORMAT_VERSION,
                "class_count": classes.len(),
                "truncated": truncated,
                "classes": classes
                    .iter()
                    .map(|c| json!({ "members": c.iter().map(|&i| label(i)).collect::<Vec<_>>() }))
                    .collect::<Vec<_>>(),
            })
        );
    } else {
        for (n, class) in classes.iter().enumerate() {
            let members: Vec<String> = class.iter().map(|&i| label(i)).collect();
            println!("class {} ({} members) {}", n + 1, class.len(), members.join(", "));
        }
        println!(
            "{} classes under the given bounds; truncated {}",
            classes.len(),
            if truncated { "yes" } else { "no" }
        );
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Validate { file } => run_validate(file, cli.json),
        Command::Invariants { file, hom_n } => run_invariants(file, hom_n, cli.json),
        Command::NormalForm { file } => run_normal_form(file, cli.json),
        Command::Apply { file, script } => run_apply(file, script, cli.json),
        Command::Equiv { left, right, bounds, hurwitz_only } => {
            run_equiv(left, right, bounds, *hurwitz_only, cli.json)
        }
        Command::Enumerate { degree, branch_count, max_conj_len } => {
            run_enumerate(*degree, *branch_count, *max_conj_len, cli.json)
        }
        Command::Census { dir, bounds, hurwitz_only } => {
            run_census(dir, bounds, *hurwitz_only, cli.json)
        }
    }
}

fn main() -> ExitCode {
    // Die on SIGPIPE like any filter so `braid2d ... | head` stays quiet.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError(message)) => {
            if cli.json {
                println!("{}", json!({ "format_version": FORMAT_VERSION, "error": message }));
            } else {
                eprintln!("error: {}", message);
            }
            ExitCode::from(1)
        }
    }
}
