//! Command line driver: classify structures, sweep the law suites, print
//! operator tables, build horizontal sums, and export the built-in corpus.
//!
//! Exit codes: 0 when every applicable law passes, 1 when any law reports a
//! genuine counterexample, 2 on input problems.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use orthores_core::format::{export, parse_str, StructureBlock};
use orthores_core::laws::{CexItem, LawReport, LawStatus, Suite};
use orthores_core::ortho::Verdict;
use orthores_core::residuation::{OpKind, OpTable};
use orthores_core::sum::{horizontal_sum, Summand};
use orthores_core::{corpus, run_suite, Poset};

#[derive(Parser)]
#[command(name = "orthores", version, about = "Residuation checks for finite bounded posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report the structural classification of each structure in a file
    Classify {
        file: PathBuf,
        /// Only the structure with this name
        #[arg(long)]
        name: Option<String>,
    },
    /// Sweep a law suite and report pass/fail/inapplicable per law
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Only the structure with this name
        #[arg(long)]
        name: Option<String>,
    },
    /// Print one operator table
    Table {
        file: PathBuf,
        #[arg(long, value_enum)]
        op: OpArg,
        /// Only the structure with this name
        #[arg(long)]
        name: Option<String>,
    },
    /// Glue named structures from a file into their horizontal sum
    Hsum {
        file: PathBuf,
        /// Summand names, in order; repetition is allowed
        #[arg(required = true)]
        names: Vec<String>,
        /// Write the sum here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write every built-in example structure to a directory
    Corpus {
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Residuation,
    Lemmas,
    Roundtrip,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Residuation => Suite::Residuation,
            SuiteArg::Lemmas => Suite::Lemmas,
            SuiteArg::Roundtrip => Suite::Roundtrip,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    JsonLines,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpArg {
    Odot,
    Arrow,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    let (text, code) = execute(command)?;
    match io::stdout().write_all(text.as_bytes()) {
        Ok(()) => Ok(code),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(code),
        Err(e) => Err(format!("cannot write output: {e}")),
    }
}

fn execute(command: Command) -> Result<(String, ExitCode), String> {
    let mut out = String::new();
    match command {
        Command::Classify { file, name } => {
            for block in load(&file, name.as_deref())? {
                out.push_str(&render_classification(&block));
            }
            Ok((out, ExitCode::SUCCESS))
        }
        Command::Verify { file, suite, format, name } => {
            let blocks = load(&file, name.as_deref())?;
            let name_width = blocks.iter().map(|b| b.name.len()).max().unwrap_or(0);
            let mut any_fail = false;
            for block in &blocks {
                for report in run_suite(&block.poset, &block.comp, suite.into()) {
                    any_fail |= report.status.failed();
                    let line = match format {
                        OutputFormat::Text => text_line(block, &report, name_width),
                        OutputFormat::JsonLines => json_line(block, &report),
                    };
                    out.push_str(&line);
                    out.push('\n');
                }
            }
            let code = if any_fail { ExitCode::from(1) } else { ExitCode::SUCCESS };
            Ok((out, code))
        }
        Command::Table { file, op, name } => {
            let kind = match op {
                OpArg::Odot => OpKind::Odot,
                OpArg::Arrow => OpKind::Arrow,
            };
            for block in load(&file, name.as_deref())? {
                out.push_str(&render_table(&block, kind));
            }
            Ok((out, ExitCode::SUCCESS))
        }
        Command::Hsum { file, names, out: dest } => {
            let blocks = load(&file, None)?;
            let mut parts = Vec::new();
            for n in &names {
                let block = blocks
                    .iter()
                    .find(|b| &b.name == n)
                    .ok_or_else(|| format!("no structure named {n} in {}", file.display()))?;
                parts.push(Summand { name: &block.name, poset: &block.poset, comp: &block.comp });
            }
            let sum = horizontal_sum(&parts).map_err(|e| e.to_string())?;
            let block = StructureBlock {
                name: format!("hsum-{}", names.join("-")),
                poset: sum.poset,
                comp: sum.comp,
            };
            let text = export(&block);
            match dest {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
                None => out.push_str(&text),
            }
            Ok((out, ExitCode::SUCCESS))
        }
        Command::Corpus { out: dir } => {
            fs::create_dir_all(&dir)
                .map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
            let entries = corpus::all();
            for entry in &entries {
                let block = StructureBlock {
                    name: entry.name.to_string(),
                    poset: entry.poset.clone(),
                    comp: entry.comp.clone(),
                };
                let path = dir.join(format!("{}.oms", entry.name));
                fs::write(&path, export(&block))
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            writeln!(out, "wrote {} structures to {}", entries.len(), dir.display()).unwrap();
            Ok((out, ExitCode::SUCCESS))
        }
    }
}

fn load(file: &Path, name: Option<&str>) -> Result<Vec<StructureBlock>, String> {
    let text =
        fs::read_to_string(file).map_err(|e| format!("cannot read {}: {e}", file.display()))?;
    let blocks = parse_str(&text).map_err(|e| e.to_string())?;
    if blocks.is_empty() {
        return Err(format!("no structures in {}", file.display()));
    }
    match name {
        None => Ok(blocks),
        Some(n) => {
            let picked: Vec<StructureBlock> =
                blocks.into_iter().filter(|b| b.name == n).collect();
            if picked.is_empty() {
                Err(format!("no structure named {n} in {}", file.display()))
            } else {
                Ok(picked)
            }
        }
    }
}

fn verdict_line<W>(v: &Verdict<W>, show: impl Fn(&W) -> String) -> String {
    match v {
        Verdict::Holds => "yes".to_string(),
        Verdict::Fails(w) => format!("no (at {})", show(w)),
    }
}

fn render_classification(block: &StructureBlock) -> String {
    let p = &block.poset;
    let r = orthores_core::classify(p, &block.comp);
    let elem = |x: &usize| p.label(*x).to_string();
    let pair = |w: &(usize, usize)| format!("({}, {})", p.label(w.0), p.label(w.1));
    let flag = |b: bool| if b { "yes" } else { "no" }.to_string();
    let rows = [
        ("lattice", verdict_line(&r.lattice, pair)),
        ("involution", verdict_line(&r.involution, elem)),
        ("antitone", verdict_line(&r.antitone, pair)),
        ("complementation", verdict_line(&r.complementation, elem)),
        ("condition (i)", verdict_line(&r.cond_i, pair)),
        ("condition (ii)", verdict_line(&r.cond_ii, pair)),
        ("condition (A)", verdict_line(&r.cond_a, pair)),
        ("condition (B)", verdict_line(&r.cond_b, pair)),
        ("orthomodular", flag(r.is_orthomodular())),
        ("weakly orthomodular", flag(r.is_weakly_orthomodular())),
        ("dually weakly orthomodular", flag(r.is_dually_weakly_orthomodular())),
    ];
    let mut out = format!("{}: {} elements, height {}\n", block.name, p.n(), p.height());
    for (label, value) in rows {
        writeln!(out, "  {label:<28}{value}").unwrap();
    }
    out
}

fn render_cex_text(p: &Poset, items: &[CexItem]) -> String {
    let parts: Vec<String> = items
        .iter()
        .map(|item| match item {
            CexItem::Elem(x) => p.label(*x).to_string(),
            CexItem::Set(s) => p.format_set(s),
        })
        .collect();
    format!("({})", parts.join(", "))
}

fn text_line(block: &StructureBlock, report: &LawReport, name_width: usize) -> String {
    let head = format!("{:<name_width$}  {:<26}", block.name, report.law.id());
    match &report.status {
        LawStatus::Pass => format!("{head}  PASS  checked={}", report.checked),
        LawStatus::Fail(cex) => format!(
            "{head}  FAIL  at {}  checked={}",
            render_cex_text(&block.poset, &cex.items),
            report.checked
        ),
        LawStatus::Inapplicable(why) => {
            format!("{head}  N/A   {}", why.describe())
        }
    }
}

fn json_line(block: &StructureBlock, report: &LawReport) -> String {
    let mut obj = serde_json::json!({
        "structure": block.name,
        "law": report.law.id(),
        "checked": report.checked,
    });
    let map = obj.as_object_mut().unwrap();
    match &report.status {
        LawStatus::Pass => {
            map.insert("status".into(), "pass".into());
        }
        LawStatus::Fail(cex) => {
            map.insert("status".into(), "fail".into());
            let items: Vec<serde_json::Value> = cex
                .items
                .iter()
                .map(|item| match item {
                    CexItem::Elem(x) => serde_json::json!(block.poset.label(*x)),
                    CexItem::Set(s) => serde_json::json!(s
                        .iter()
                        .map(|x| block.poset.label(x))
                        .collect::<Vec<_>>()),
                })
                .collect();
            map.insert("counterexample".into(), items.into());
        }
        LawStatus::Inapplicable(why) => {
            map.insert("status".into(), "inapplicable".into());
            map.insert("reason".into(), why.describe().into());
        }
    }
    obj.to_string()
}

fn render_table(block: &StructureBlock, kind: OpKind) -> String {
    let p = &block.poset;
    let table = OpTable::build(p, &block.comp, kind);
    let mut grid: Vec<Vec<String>> = Vec::with_capacity(p.n() + 1);
    let mut header = vec![kind.symbol().to_string()];
    header.extend(p.labels().iter().cloned());
    grid.push(header);
    for x in p.elements() {
        let mut row = vec![p.label(x).to_string()];
        for y in p.elements() {
            row.push(match table.cell(x, y) {
                Ok(s) => p.format_set(s),
                Err(u) => format!("UNDEF({})", p.label(u.0)),
            });
        }
        grid.push(row);
    }
    let cols = grid[0].len();
    let widths: Vec<usize> =
        (0..cols).map(|c| grid.iter().map(|row| row[c].len()).max().unwrap()).collect();
    let mut out = format!("{} table for {}\n", kind.symbol(), block.name);
    for row in &grid {
        let line: Vec<String> =
            row.iter().zip(&widths).map(|(cell, w)| format!("{cell:<w$}")).collect();
        writeln!(out, "{}", line.join("  ").trim_end()).unwrap();
    }
    out
}
