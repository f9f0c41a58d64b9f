mod checks;
mod render;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dqchar::qchar::{self, q_character};
use dqchar::weights::weight;
use dqchar::{DynkinD, Family};
use similar::TextDiff;

use render::{DimRow, PathDoc, PathListDoc, QCharDoc};

#[derive(Parser)]
#[command(
    name = "dqchar",
    version,
    about = "q-characters of fundamental modules in type D"
)]
struct Cli {
    /// Cap on worker threads.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print chi_q(L(Y[node,shift])).
    Qchar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        node: usize,
        /// Defaults to the smallest nonnegative shift of valid parity.
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List the paths of a family with their weights.
    Paths {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        node: usize,
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Tabulate path counts, monomial counts and dimensions.
    Dims {
        #[arg(long, default_value_t = 4)]
        min_n: usize,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the invariant suite; exit 1 if anything fails.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        node: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<i64>,
        /// Also check that every term is needed for the kernels.
        #[arg(long)]
        deep: bool,
        /// Compare a single character with this file (text, or JSON if it ends in .json).
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<dqchar::Error> for Failure {
    fn from(e: dqchar::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Run = Result<String, (String, Failure)>;

fn usage<T>(r: dqchar::Result<T>) -> Result<T, (String, Failure)> {
    r.map_err(|e| (String::new(), e.into()))
}

fn resolve_shift(n: usize, node: usize, shift: Option<i64>) -> dqchar::Result<i64> {
    DynkinD::new(n)?.check_node(node)?;
    let k = shift.unwrap_or_else(|| qchar::default_shift(n, node));
    qchar::validate(n, node, k)?;
    Ok(k)
}

fn cmd_qchar(n: usize, node: usize, shift: Option<i64>, format: Format) -> Run {
    let k = usage(resolve_shift(n, node, shift))?;
    let qc = usage(q_character(n, node, k))?;
    Ok(match format {
        Format::Text => render::text(qc.terms()),
        Format::Json => {
            let doc = QCharDoc::from_qchar(&qc);
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Latex => render::latex(&qc),
    })
}

fn cmd_paths(n: usize, node: usize, shift: Option<i64>, format: Format) -> Run {
    let k = usage(resolve_shift(n, node, shift))?;
    if node == n {
        return Err((
            String::new(),
            Failure::Usage(format!(
                "node {n} has no path family of its own; its character is the spin swap of node {}",
                n - 1
            )),
        ));
    }
    let fam = usage(Family::new(n, node, k))?;
    let listed: Vec<(String, Vec<Vec<i64>>, dqchar::LaurentPolynomial)> = fam
        .iter()
        .map(|p| {
            let groups = if p.is_spin() {
                vec![p.heights().to_vec()]
            } else {
                vec![p.left().to_vec(), p.right().to_vec()]
            };
            (render::heights(&p), groups, weight(&p))
        })
        .collect();
    let terms: u64 = listed.iter().map(|(_, _, w)| w.len() as u64).sum();
    Ok(match format {
        Format::Json => {
            let doc = PathListDoc {
                n,
                node,
                shift: k,
                count: listed.len(),
                terms,
                paths: listed
                    .into_iter()
                    .map(|(_, heights, w)| PathDoc {
                        heights,
                        weight: w.to_string(),
                    })
                    .collect(),
            };
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Text | Format::Latex => {
            let mut out = String::new();
            for (h, _, w) in &listed {
                writeln!(out, "{h}  {w}").unwrap();
            }
            writeln!(out, "paths: {}  terms: {}", listed.len(), terms).unwrap();
            out
        }
    })
}

fn cmd_dims(min_n: usize, max_n: usize, format: Format) -> Run {
    let mut rows = Vec::new();
    let mut all_match = true;
    for n in min_n..=max_n {
        let d = usage(DynkinD::new(n))?;
        for i in d.nodes() {
            let paths = usage(qchar::path_count_formula(n, i))?;
            let monos = usage(qchar::monomial_count_formula(n, i))?;
            let cp = usage(d.cp_dimension(i))?;
            let ok = monos == cp;
            all_match &= ok;
            rows.push(DimRow {
                n,
                node: i,
                paths: paths.to_string(),
                monomials: monos.to_string(),
                cp_dimension: cp.to_string(),
                status: if ok { "match" } else { "mismatch" },
            });
        }
    }
    let out = match format {
        Format::Json => serde_json::to_string_pretty(&rows).expect("serializable") + "\n",
        Format::Text | Format::Latex => render::dims_text(&rows),
    };
    if all_match {
        Ok(out)
    } else {
        Err((out, Failure::Verification))
    }
}

fn normalize(s: &str) -> String {
    s.lines()
        .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
        .filter(|l| !l.is_empty())
        .map(|l| l + "\n")
        .collect()
}

fn cmd_verify(
    n: usize,
    node: Option<usize>,
    shift: Option<i64>,
    deep: bool,
    golden: Option<PathBuf>,
) -> Run {
    let d = usage(DynkinD::new(n))?;
    let targets: Vec<(usize, i64)> = match node {
        Some(i) => vec![(i, usage(resolve_shift(n, i, shift))?)],
        None => {
            if shift.is_some() {
                return Err((String::new(), Failure::Usage("--shift needs --node".into())));
            }
            d.nodes().map(|i| (i, qchar::default_shift(n, i))).collect()
        }
    };
    if golden.is_some() && targets.len() != 1 {
        return Err((
            String::new(),
            Failure::Usage("--golden needs --node".into()),
        ));
    }

    let mut out = String::new();
    let mut ok = true;
    for &(i, k) in &targets {
        let qc = usage(q_character(n, i, k))?;
        for o in usage(checks::run(&qc, deep))? {
            ok &= o.passed();
            match &o.detail {
                None => writeln!(out, "PASS ({n},{i},{k}) {}", o.name).unwrap(),
                Some(why) => writeln!(out, "FAIL ({n},{i},{k}) {}: {why}", o.name).unwrap(),
            }
        }
        if let Some(path) = &golden {
            let expected = std::fs::read_to_string(path).map_err(|e| {
                (
                    out.clone(),
                    Failure::Usage(format!("cannot read {}: {e}", path.display())),
                )
            })?;
            let expected = if path.extension().is_some_and(|e| e == "json") {
                let doc: QCharDoc = serde_json::from_str(&expected).map_err(|e| {
                    (
                        out.clone(),
                        Failure::Usage(format!("cannot parse {}: {e}", path.display())),
                    )
                })?;
                render::text(&doc.polynomial())
            } else {
                expected
            };
            let expected = normalize(&expected);
            let actual = normalize(&render::text(qc.terms()));
            if expected == actual {
                writeln!(out, "PASS ({n},{i},{k}) golden {}", path.display()).unwrap();
            } else {
                ok = false;
                writeln!(out, "FAIL ({n},{i},{k}) golden {}", path.display()).unwrap();
                let diff = TextDiff::from_lines(&expected, &actual);
                let golden_name = path.display().to_string();
                write!(
                    out,
                    "{}",
                    diff.unified_diff().header(&golden_name, "computed")
                )
                .unwrap();
            }
        }
    }
    if ok {
        Ok(out)
    } else {
        Err((out, Failure::Verification))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.cmd {
        Cmd::Qchar {
            n,
            node,
            shift,
            format,
        } => cmd_qchar(n, node, shift, format),
        Cmd::Paths {
            n,
            node,
            shift,
            format,
        } => cmd_paths(n, node, shift, format),
        Cmd::Dims {
            min_n,
            max_n,
            format,
        } => cmd_dims(min_n, max_n, format),
        Cmd::Verify {
            n,
            node,
            shift,
            deep,
            golden,
        } => cmd_verify(n, node, shift, deep, golden),
    };
    let mut stdout = std::io::stdout().lock();
    match result {
        Ok(out) => {
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err((out, failure)) => {
            let _ = stdout.write_all(out.as_bytes());
            match failure {
                Failure::Verification => ExitCode::from(1),
                Failure::Usage(msg) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(2)
                }
            }
        }
    }
}
