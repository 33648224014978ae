//! Batch verifier for diagram files over finitely generated abelian groups
//! and prime-field vector spaces.
//!
//! Exit codes: 0 all assertions pass, 1 at least one assertion fails,
//! 2 input error (syntax, unresolved reference, dimension or congruence
//! violation).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use abchase::diagram::{Mode, NineDirection};
use abchase::genprop::{self, GenConfig, LadderScheme};
use abchase::intlin::{smith_normal_form, IntMatrix};

use abchase_cli::{emit, model, parse, render, run};
use model::Assertion;

#[derive(Parser)]
#[command(name = "abchase", version, about = "Verify exactness and diagram lemmas over concrete abelian categories", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Args)]
struct OutputOptions {
    /// Report renderer.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a diagram file and run its assertion list in order.
    Check {
        file: PathBuf,
        #[command(flatten)]
        output: OutputOptions,
        /// Worker threads for assertion evaluation.
        #[arg(long, default_value = "1")]
        jobs: usize,
    },
    /// Run a specific lemma verifier against a diagram file.
    #[command(subcommand)]
    Lemma(LemmaCommand),
    /// Generate instances in the diagram file format.
    Gen {
        /// Construction scheme: split_split, epi_kernel_top_split_bottom or
        /// conjugated.
        #[arg(long)]
        scheme: String,
        #[arg(long)]
        seed: u64,
        /// Number of instances; more than one requires --out.
        #[arg(long, default_value = "1")]
        count: usize,
        /// Property of the outer verticals: monic, epic or iso.
        #[arg(long, default_value = "monic")]
        mode: String,
        /// Also emit a short_five_trace assertion.
        #[arg(long)]
        trace: bool,
        /// Directory to write the generated files into.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Smith normal form of an integer matrix.
    Snf {
        /// Rows separated by ';', entries by ',' — e.g. "2,4;6,8".
        #[arg(long)]
        matrix: String,
        #[command(flatten)]
        output: OutputOptions,
    },
}

#[derive(Subcommand)]
enum LemmaCommand {
    /// Verify the short-five assertions of a file.
    ShortFive {
        file: PathBuf,
        /// Run the step-by-step pullback proof trace instead of the direct
        /// verifier.
        #[arg(long)]
        trace: bool,
        /// Override the mode of every short-five assertion.
        #[arg(long)]
        mode: Option<String>,
        #[command(flatten)]
        output: OutputOptions,
    },
    /// Verify the nine-lemma assertions of a file.
    Nine {
        file: PathBuf,
        /// Override the direction of every nine-lemma assertion.
        #[arg(long)]
        direction: Option<String>,
        #[command(flatten)]
        output: OutputOptions,
    },
}

fn main() {
    std::process::exit(real_main());
}

/// Writes to stdout, exiting quietly if the consumer closed the pipe
/// (e.g. `abchase snf ... | head`).
fn write_stdout(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).is_err() || out.flush().is_err() {
        std::process::exit(0);
    }
}

fn real_main() -> i32 {
    match Cli::parse().command {
        Command::Check { file, output, jobs } => check_file(&file, output.format, jobs.max(1)),
        Command::Lemma(lemma) => run_lemma(lemma),
        Command::Gen {
            scheme,
            seed,
            count,
            mode,
            trace,
            out,
        } => generate(&scheme, seed, count, &mode, trace, out.as_deref()),
        Command::Snf { matrix, output } => snf_command(&matrix, output.format),
    }
}

fn load(path: &std::path::Path) -> Result<(String, model::DiagramFile), i32> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return Err(2);
        }
    };
    match parse::parse_diagram_file(&text) {
        Ok(df) => Ok((text, df)),
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            Err(2)
        }
    }
}

fn finish(
    df: &model::DiagramFile,
    text: &str,
    format: Format,
    jobs: usize,
) -> i32 {
    match run::run_file(df, text, jobs) {
        Ok(doc) => {
            let rendered = match format {
                Format::Text => render::render_text(&doc),
                Format::Structured => render::render_structured(&doc),
            };
            write_stdout(&rendered);
            match doc.status() {
                run::RunStatus::AllPassed => 0,
                run::RunStatus::AssertionFailed => 1,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn check_file(path: &std::path::Path, format: Format, jobs: usize) -> i32 {
    match load(path) {
        Ok((text, df)) => finish(&df, &text, format, jobs),
        Err(code) => code,
    }
}

fn run_lemma(lemma: LemmaCommand) -> i32 {
    match lemma {
        LemmaCommand::ShortFive {
            file,
            trace,
            mode,
            output,
        } => {
            let (text, mut df) = match load(&file) {
                Ok(x) => x,
                Err(code) => return code,
            };
            let override_mode: Option<Mode> = match mode.as_deref().map(str::parse).transpose() {
                Ok(m) => m,
                Err(e) => {
                    eprintln!("error: {e}");
                    return 2;
                }
            };
            let mut selected = Vec::new();
            for assertion in df.assertions.drain(..) {
                match assertion {
                    Assertion::ShortFive { mode, ladder } => {
                        if trace {
                            selected.push(Assertion::ShortFiveTrace { ladder });
                        } else {
                            selected.push(Assertion::ShortFive {
                                mode: override_mode.unwrap_or(mode),
                                ladder,
                            });
                        }
                    }
                    Assertion::ShortFiveTrace { ladder } => {
                        if trace {
                            selected.push(Assertion::ShortFiveTrace { ladder });
                        } else if let Some(mode) = override_mode {
                            selected.push(Assertion::ShortFive { mode, ladder });
                        } else {
                            selected.push(Assertion::ShortFiveTrace { ladder });
                        }
                    }
                    _ => {}
                }
            }
            if selected.is_empty() {
                eprintln!("error: {}: no short_five assertion in file", file.display());
                return 2;
            }
            df.assertions = selected;
            finish(&df, &text, output.format, 1)
        }
        LemmaCommand::Nine {
            file,
            direction,
            output,
        } => {
            let (text, mut df) = match load(&file) {
                Ok(x) => x,
                Err(code) => return code,
            };
            let override_direction: Option<NineDirection> =
                match direction.as_deref().map(str::parse).transpose() {
                    Ok(d) => d,
                    Err(e) => {
                        eprintln!("error: {e}");
                        return 2;
                    }
                };
            let mut selected = Vec::new();
            for assertion in df.assertions.drain(..) {
                if let Assertion::NineLemma { direction, grid } = assertion {
                    selected.push(Assertion::NineLemma {
                        direction: override_direction.unwrap_or(direction),
                        grid,
                    });
                }
            }
            if selected.is_empty() {
                eprintln!("error: {}: no nine_lemma assertion in file", file.display());
                return 2;
            }
            df.assertions = selected;
            finish(&df, &text, output.format, 1)
        }
    }
}

fn generate(
    scheme: &str,
    seed: u64,
    count: usize,
    mode: &str,
    trace: bool,
    out: Option<&std::path::Path>,
) -> i32 {
    let scheme: LadderScheme = match scheme.parse() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let mode: Mode = match mode.parse() {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    if count == 0 {
        eprintln!("error: --count must be positive");
        return 2;
    }
    if count > 1 && out.is_none() {
        eprintln!("error: --count above 1 requires --out DIR");
        return 2;
    }
    let cfg = GenConfig::new(seed, scheme);
    let mut rng = cfg.rng();
    for index in 0..count {
        let ladder = genprop::gen_ladder(&cfg, mode, &mut rng);
        let text = emit::ladder_file(&ladder, mode, trace);
        match out {
            None => write_stdout(&text),
            Some(dir) => {
                if let Err(e) = std::fs::create_dir_all(dir) {
                    eprintln!("error: cannot create {}: {e}", dir.display());
                    return 2;
                }
                let name = format!("ladder_{}_{seed}_{index:03}.json", scheme.as_str());
                let path = dir.join(name);
                if let Err(e) = std::fs::write(&path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 2;
                }
                write_stdout(&format!("{}\n", path.display()));
            }
        }
    }
    0
}

fn snf_command(matrix: &str, format: Format) -> i32 {
    let rows: Result<Vec<Vec<i64>>, String> = matrix
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|entry| {
                    entry
                        .trim()
                        .parse::<i64>()
                        .map_err(|_| format!("bad integer entry '{}'", entry.trim()))
                })
                .collect()
        })
        .collect();
    let rows = match rows {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
        eprintln!("error: matrix rows must be nonempty and of equal length");
        return 2;
    }
    let a = IntMatrix::from_rows(&rows);
    let snf = smith_normal_form(&a);

    let row_strings = |m: &IntMatrix| -> Vec<Vec<String>> {
        (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| m[(i, j)].to_string()).collect())
            .collect()
    };
    match format {
        Format::Text => {
            let mut text = String::new();
            let mut show = |name: &str, m: &IntMatrix| {
                text.push_str(&format!("{name}:\n"));
                for row in row_strings(m) {
                    text.push_str(&format!("  [{}]\n", row.join(", ")));
                }
            };
            let diag: Vec<String> = snf.diagonal().iter().map(BigInt::to_string).collect();
            let mut out = format!("diagonal: [{}]\n", diag.join(", "));
            show("d", &snf.d);
            show("u", &snf.u);
            show("v", &snf.v);
            out.push_str(&text);
            write_stdout(&out);
        }
        Format::Structured => {
            let doc = serde_json::json!({
                "diagonal": snf.diagonal().iter().map(BigInt::to_string).collect::<Vec<_>>(),
                "d": row_strings(&snf.d),
                "u": row_strings(&snf.u),
                "v": row_strings(&snf.v),
            });
            let mut rendered = serde_json::to_string_pretty(&doc).expect("serializes");
            rendered.push('\n');
            write_stdout(&rendered);
        }
    }
    0
}
