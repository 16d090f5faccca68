//! Command line front end: validate and canonicalize codes, realize
//! diagrams, compute invariants, build rational and Montesinos knots, and
//! verify the bundled catalog.
//!
//! Exit codes: 0 on success, 1 when a check fails (invalid code under
//! `validate`, a non-realizable code, a failed verification), 2 when the
//! input itself cannot be used.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bridgekit::{
    alexander, builtin_corpus, cf_to_fraction, fraction_to_cf, jones_polynomial_with_guard,
    load_corpus, montesinos_bridge_index, montesinos_diagram, parse_dt, rational_knot, realize,
    verify_all, ContinuedFraction, CorpusEntry, DtCode, Fraction, InvariantError, MontesinosForm,
    PlanarDiagram, TangleError, VerifyLevel,
};

#[derive(Parser)]
#[command(name = "bridgekit", version, about = "Dowker-Thistlethwaite code toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a code is well formed (even, distinct, in-range values)
    Validate {
        /// DT code, e.g. "4 6 2" (quoting optional)
        #[arg(required = true, allow_hyphen_values = true)]
        code: Vec<String>,
    },
    /// Over/under sequence and bridge count of the diagram a code describes
    Bridges {
        #[arg(required = true, allow_hyphen_values = true)]
        code: Vec<String>,
    },
    /// Realize a code as a diagram on the sphere, with signs and PD notation
    Realize {
        #[arg(required = true, allow_hyphen_values = true)]
        code: Vec<String>,
    },
    /// Alexander polynomial and determinant
    Alexander {
        #[arg(required = true, allow_hyphen_values = true)]
        code: Vec<String>,
    },
    /// Knot determinant
    Det {
        #[arg(required = true, allow_hyphen_values = true)]
        code: Vec<String>,
    },
    /// Jones polynomial via the Kauffman bracket state sum
    Jones {
        #[arg(required = true, allow_hyphen_values = true)]
        code: Vec<String>,
        /// Largest crossing number the state sum will attempt
        #[arg(long, default_value_t = 24)]
        guard: usize,
    },
    /// DT code of the two-bridge knot given by a fraction p/q
    Rational {
        /// Fraction, e.g. 3/2
        fraction: String,
    },
    /// Convert a fraction to a continued fraction, or terms to a fraction
    Cf {
        /// Either one fraction like 5/2, or whole terms like 2 2
        #[arg(required = true, allow_hyphen_values = true)]
        input: Vec<String>,
    },
    /// DT code and bridge index of a Montesinos form "(a0; b1/a1, ...)"
    Montesinos {
        form: String,
    },
    /// Least relabeling of a code over all starting points and directions
    Canon {
        #[arg(required = true, allow_hyphen_values = true)]
        code: Vec<String>,
    },
    /// Verify catalog entries (the bundled catalog, or $BRIDGEKIT_CORPUS)
    Verify {
        /// Entry names to verify; all entries when omitted
        names: Vec<String>,
        #[arg(long, default_value = "full", value_parser = parse_level)]
        level: VerifyLevel,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// Worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// Failures in detail plus a summary line
    Human,
    /// One PASS/FAIL line per entry
    Lines,
}

fn parse_level(s: &str) -> Result<VerifyLevel, String> {
    s.parse()
}

enum CliError {
    /// The requested check ran and failed.
    Failed(String),
    /// The input could not be used at all.
    Input(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_code(words: &[String]) -> Result<DtCode, CliError> {
    parse_dt(&words.join(" ")).map_err(|e| CliError::Input(format!("invalid code: {e}")))
}

fn diagram_of(code: &DtCode) -> Result<PlanarDiagram, CliError> {
    let report = realize(code);
    match report.obstruction() {
        Some(o) => Err(CliError::Failed(o.to_string())),
        None => Ok(report.into_diagram().expect("no obstruction means a diagram")),
    }
}

fn parse_fraction(text: &str) -> Result<Fraction, CliError> {
    let bad = || CliError::Input(format!("{text:?} is not a fraction of the form p/q"));
    let (p, q) = text.trim().split_once('/').ok_or_else(bad)?;
    let p: i64 = p.trim().parse().map_err(|_| bad())?;
    let q: i64 = q.trim().parse().map_err(|_| bad())?;
    Fraction::new(p, q).map_err(|e| CliError::Input(e.to_string()))
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Validate { code } => {
            match parse_dt(&code.join(" ")) {
                Ok(c) => println!("valid: {} crossings", c.n()),
                Err(e) => return Err(CliError::Failed(format!("invalid: {e}"))),
            }
        }
        Command::Bridges { code } => {
            let c = parse_code(&code)?;
            let seq = c.over_under_sequence();
            println!("sequence: {seq}");
            println!("bridges: {}", seq.bridge_count());
        }
        Command::Realize { code } => {
            let c = parse_code(&code)?;
            let d = diagram_of(&c)?;
            println!("crossings: {}", d.n());
            println!("writhe: {}", d.writhe());
            print!("{}", d.pd_text());
        }
        Command::Alexander { code } => {
            let c = parse_code(&code)?;
            let d = diagram_of(&c)?;
            let r = alexander(&d).expect("Alexander is defined for realized diagrams");
            println!("alexander: {}", r.polynomial);
            println!("determinant: {}", r.determinant);
        }
        Command::Det { code } => {
            let c = parse_code(&code)?;
            let d = diagram_of(&c)?;
            let r = alexander(&d).expect("Alexander is defined for realized diagrams");
            println!("{}", r.determinant);
        }
        Command::Jones { code, guard } => {
            let c = parse_code(&code)?;
            let d = diagram_of(&c)?;
            match jones_polynomial_with_guard(&d, guard) {
                Ok(p) => println!("jones: {p}"),
                Err(e @ InvariantError::SizeGuardExceeded { .. }) => {
                    return Err(CliError::Input(e.to_string()))
                }
                Err(e) => return Err(CliError::Failed(e.to_string())),
            }
        }
        Command::Rational { fraction } => {
            let f = parse_fraction(&fraction)?;
            let code = rational_knot(f).map_err(|e| CliError::Failed(e.to_string()))?;
            println!("{code}");
        }
        Command::Cf { input } => {
            if input.len() == 1 && input[0].contains('/') {
                let f = parse_fraction(&input[0])?;
                println!("{}", fraction_to_cf(f));
            } else {
                let terms: Vec<i64> = input
                    .iter()
                    .flat_map(|w| w.split([' ', ',']))
                    .filter(|w| !w.is_empty())
                    .map(|w| {
                        w.parse()
                            .map_err(|_| CliError::Input(format!("{w:?} is not an integer term")))
                    })
                    .collect::<Result<_, _>>()?;
                let cf = ContinuedFraction::new(terms);
                let f = cf_to_fraction(&cf).map_err(|e| CliError::Failed(e.to_string()))?;
                println!("{f}");
            }
        }
        Command::Montesinos { form } => {
            let form =
                MontesinosForm::parse(&form).map_err(|e| CliError::Input(e.to_string()))?;
            let code = montesinos_diagram(&form).map_err(|e| CliError::Failed(e.to_string()))?;
            println!("dt: {code}");
            match montesinos_bridge_index(&form) {
                Ok(b) => println!("bridge index: {b}"),
                Err(TangleError::RuleNotApplicable(why)) => println!("bridge index: {why}"),
                Err(e) => return Err(CliError::Failed(e.to_string())),
            }
        }
        Command::Canon { code } => {
            let c = parse_code(&code)?;
            println!("{}", c.canonicalize());
        }
        Command::Verify { names, level, format, jobs } => {
            if let Some(j) = jobs {
                rayon::ThreadPoolBuilder::new().num_threads(j).build_global().ok();
            }
            let entries = load_entries()?;
            let selected: Vec<CorpusEntry> = if names.is_empty() {
                entries
            } else {
                names
                    .iter()
                    .map(|name| {
                        entries.iter().find(|e| &e.name == name).cloned().ok_or_else(|| {
                            CliError::Input(format!("no catalog entry named {name:?}"))
                        })
                    })
                    .collect::<Result<_, _>>()?
            };
            let reports = verify_all(&selected, level);
            let failed = reports.iter().filter(|r| !r.passed()).count();
            match format {
                Format::Lines => {
                    for r in &reports {
                        if r.passed() {
                            println!("{} PASS", r.name);
                        } else {
                            println!("{} FAIL {}", r.name, r.failures.join("; "));
                        }
                    }
                }
                Format::Human => {
                    for r in reports.iter().filter(|r| !r.passed()) {
                        println!("{}: FAIL ({})", r.name, r.failures.join("; "));
                    }
                    println!(
                        "{} entries at level {level}: {} passed, {failed} failed",
                        reports.len(),
                        reports.len() - failed,
                    );
                }
            }
            if failed > 0 {
                return Err(CliError::Failed(format!("{failed} entries failed verification")));
            }
        }
    }
    Ok(())
}

fn load_entries() -> Result<Vec<CorpusEntry>, CliError> {
    match std::env::var_os("BRIDGEKIT_CORPUS") {
        Some(path) => {
            let text = std::fs::read_to_string(&path).map_err(|e| {
                CliError::Input(format!("cannot read {}: {e}", path.to_string_lossy()))
            })?;
            load_corpus(&text).map_err(|e| {
                CliError::Input(format!("{}: {e}", path.to_string_lossy()))
            })
        }
        None => Ok(builtin_corpus().to_vec()),
    }
}
