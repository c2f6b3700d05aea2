//! Command-line surface: graphs, components, basis vectors, operators,
//! and the verification suites, with deterministic machine-readable
//! output.
//!
//! Exit codes: 0 success, 1 verification failure (or internal consistency
//! failure), 2 resource cap exceeded, 3 usage error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qcrystal::error::Error;
use qcrystal::gbasis::{gbasis, Transition};
use qcrystal::graph::{
    build_graph, component_of, gl2_split, Mode, COMPONENT_CAP, DEFAULT_GRAPH_CAP,
    DEFAULT_MATRIX_CAP,
};
use qcrystal::ktheory::{apply_operator, BasisTag, KClass, KOperator};
use qcrystal::render::{self, DecompositionView};
use qcrystal::verify::{run_suite, Suite};
use qcrystal::word::Word;

#[derive(Parser)]
#[command(
    name = "qcrystal",
    version,
    about = "Exact crystal combinatorics on words over {1,2}: graphs, components, dual bases, class operators, and exhaustive verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Word-length cap for full-graph commands (env QCRYSTAL_GRAPH_CAP)
    #[arg(long, global = true, env = "QCRYSTAL_GRAPH_CAP")]
    graph_cap: Option<usize>,

    /// Word-length cap for matrix-sized computations (env QCRYSTAL_MATRIX_CAP)
    #[arg(long, global = true, env = "QCRYSTAL_MATRIX_CAP")]
    matrix_cap: Option<usize>,

    /// Write output to this path instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Tsv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the crystal graph on all words of length n
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "q2")]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Label dashed edges "1bar" instead of the combining-macron form
        #[arg(long)]
        ascii: bool,
    },
    /// Report the connected component of a seed word
    Component {
        seed: String,
        #[arg(long, default_value = "q2")]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        ascii: bool,
    },
    /// Print the distinguished basis vector of a word
    Gbasis {
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the simple<->Verma transition matrices at length n
    Transition {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Apply an operator (E, F, H, Ebar, Fbar) to a class expression
    /// such as "[L(22)]" or "+[M(21)] -[M(12)]"
    Apply {
        op: KOperator,
        class: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decompose a lowest word into segments and the index set A
    Decompose {
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a named verification suite
    Verify {
        suite: Suite,
        /// Uniform bound overriding each check's default sweep size
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::SizeLimit { .. } => 2,
        Error::Consistency(_) => 1,
        _ => 3,
    }
}

fn unsupported_format(command: &str, format: Format) -> Error {
    Error::Domain(format!(
        "format {format:?} is not supported by the {command} command"
    ))
}

fn json_line(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

fn run(cli: &Cli) -> Result<(String, u8), Error> {
    let graph_cap = cli.graph_cap.unwrap_or(DEFAULT_GRAPH_CAP);
    let matrix_cap = cli.matrix_cap.unwrap_or(DEFAULT_MATRIX_CAP);
    match &cli.command {
        Command::Graph {
            n,
            mode,
            format,
            ascii,
        } => {
            let g = build_graph(*n, *mode, graph_cap)?;
            let out = match format {
                Format::Dot => render::graph_to_dot(&g, *ascii),
                Format::Json => json_line(&render::graph_to_json(&g)),
                Format::Tsv => render::graph_to_tsv(&g),
                Format::Text => render::graph_to_text(&g),
            };
            Ok((out, 0))
        }
        Command::Component {
            seed,
            mode,
            format,
            ascii,
        } => {
            let seed: Word = seed.parse()?;
            if seed.len() > COMPONENT_CAP {
                return Err(Error::SizeLimit {
                    what: "component search",
                    n: seed.len(),
                    cap: COMPONENT_CAP,
                });
            }
            let comp = component_of(&seed, *mode);
            let split = gl2_split(&comp);
            let out = match format {
                Format::Text => render::component_to_text(&comp, &split),
                Format::Json => json_line(&render::component_to_json(&comp, &split)),
                Format::Dot => render::component_to_dot(&comp, *ascii),
                Format::Tsv => return Err(unsupported_format("component", *format)),
            };
            Ok((out, 0))
        }
        Command::Gbasis { word, format } => {
            let word: Word = word.parse()?;
            if word.len() > COMPONENT_CAP {
                return Err(Error::SizeLimit {
                    what: "basis vector computation",
                    n: word.len(),
                    cap: COMPONENT_CAP,
                });
            }
            let v = gbasis(&word);
            let out = match format {
                Format::Text => format!("{v}\n"),
                Format::Json => json_line(&render::tensor_to_json(&v)),
                Format::Tsv => render::tensor_to_tsv(&v),
                Format::Dot => return Err(unsupported_format("gbasis", *format)),
            };
            Ok((out, 0))
        }
        Command::Transition { n, format } => {
            let trans = Transition::new(*n, matrix_cap)?;
            let out = match format {
                Format::Text => render::transition_to_text(&trans),
                Format::Tsv => render::transition_to_tsv(&trans),
                Format::Json => json_line(&render::transition_to_json(&trans)),
                Format::Dot => return Err(unsupported_format("transition", *format)),
            };
            Ok((out, 0))
        }
        Command::Apply { op, class, format } => {
            let (class, basis) = KClass::parse(class)?;
            let result = match basis {
                BasisTag::Verma => apply_operator(*op, &class),
                BasisTag::Simple => {
                    let trans = Transition::new(class.n(), matrix_cap)?;
                    let verma = trans.to_verma(&class)?;
                    trans.to_simple(&apply_operator(*op, &verma))?
                }
            };
            let out = match format {
                Format::Text => format!("{}\n", result.display(basis)),
                Format::Json => json_line(&render::kclass_to_json(&result, basis)),
                _ => return Err(unsupported_format("apply", *format)),
            };
            Ok((out, 0))
        }
        Command::Decompose { word, format } => {
            let word: Word = word.parse()?;
            let view = DecompositionView::compute(&word)?;
            let out = match format {
                Format::Text => view.to_text(),
                Format::Json => json_line(&view.to_json()),
                _ => return Err(unsupported_format("decompose", *format)),
            };
            Ok((out, 0))
        }
        Command::Verify {
            suite,
            n_max,
            format,
        } => {
            let report = run_suite(*suite, *n_max, matrix_cap);
            let code = if report.passed() { 0 } else { 1 };
            let out = match format {
                Format::Json => json_line(&render::suite_report_to_json(&report)),
                Format::Text => {
                    let mut s = format!(
                        "# {}\nsuite {}: {}\n",
                        render::SCHEMA,
                        report.suite,
                        if report.passed() { "pass" } else { "fail" }
                    );
                    for check in &report.checks {
                        s.push_str(&format!(
                            "{}: {}{}\n",
                            check.check,
                            if check.passed() { "pass" } else { "fail" },
                            check
                                .counterexample
                                .as_ref()
                                .map(|c| format!(" {c}"))
                                .unwrap_or_default()
                        ));
                    }
                    s
                }
                _ => return Err(unsupported_format("verify", *format)),
            };
            Ok((out, code))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((output, code)) => {
            let wrote = match &cli.out {
                Some(path) => std::fs::write(path, output.as_bytes()).map_err(|e| e.to_string()),
                None => std::io::stdout()
                    .write_all(output.as_bytes())
                    .map_err(|e| e.to_string()),
            };
            if let Err(e) = wrote {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
