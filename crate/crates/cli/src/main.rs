//! Command-line front end: parse braid words, dispatch to the closure
//! builders and verifiers, and serialize results. Exit codes: 0 on success,
//! 1 on verification failure, 2 on usage errors.

use catbraid::alex::AlexMethod;
use catbraid::braid::BraidWord;
use catbraid::closure;
use catbraid::corpus;
use catbraid::count::{point_count, CountRequest};
use catbraid::group::FiniteGroup;
use catbraid::invariants::{self, InvariantKind};
use catbraid::json;
use catbraid::operators::catalog_operator;
use catbraid::peripheral;
use catbraid::verify;
use clap::{Args, Parser, Subcommand};
use serde_json::Value;
use std::collections::BTreeMap;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "catbraid", version, about = "Braid closures and their link invariants")]
struct Cli {
    /// Emit human-readable text instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    /// Emit JSON (the default).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BraidArgs {
    /// Braid word: `s1 s2^-1` tokens or signed integers (`1 -2`).
    #[arg(long, default_value = "")]
    braid: String,
    /// Strand count; inferred from the letters when omitted.
    #[arg(short = 'n', long)]
    strands: Option<usize>,
}

impl BraidArgs {
    fn parse(&self) -> catbraid::Result<BraidWord> {
        let n = match self.strands {
            Some(n) => n,
            None => {
                let probe = BraidWord::parse(&self.braid, usize::MAX >> 1)?;
                probe
                    .letters()
                    .iter()
                    .map(|k| k.unsigned_abs() as usize + 1)
                    .max()
                    .unwrap_or(1)
            }
        };
        BraidWord::parse(&self.braid, n)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Categorical closure of a braid with respect to a catalog operator.
    Closure {
        #[command(flatten)]
        braid: BraidArgs,
        /// Operator: artin | burau | gmv | gmv_mu_central | humphries_magnus
        /// | wada_n(N) | crisp_paris.
        #[arg(long)]
        op: String,
    },
    /// The knot DG category and its endomorphism DGA at the marked object.
    Dga {
        #[command(flatten)]
        braid: BraidArgs,
    },
    /// The fully noncommutative link DG category.
    Fnc {
        #[command(flatten)]
        braid: BraidArgs,
    },
    /// Degree-0 homology presentation of the knot DGA.
    Hc0 {
        #[command(flatten)]
        braid: BraidArgs,
    },
    /// Alexander polynomial (Burau minors or Fox calculus).
    Alex {
        #[command(flatten)]
        braid: BraidArgs,
        #[arg(long, default_value = "burau")]
        method: String,
    },
    /// Count homomorphisms of the closure's group into a finite group.
    Homcount {
        #[command(flatten)]
        braid: BraidArgs,
        /// Target group: s3 | s4 | z<k>.
        #[arg(long)]
        group: String,
    },
    /// Count F_q points of the degree-0 homology presentation.
    Points {
        #[command(flatten)]
        braid: BraidArgs,
        #[arg(short, long)]
        q: u16,
        /// Pin lambda to a unit value (otherwise enumerated over units).
        #[arg(long)]
        lambda: Option<u16>,
        /// Pin mu to a unit value (otherwise enumerated over units).
        #[arg(long)]
        mu: Option<u16>,
        /// Matrix dimension for generator values.
        #[arg(long, default_value_t = 1)]
        dim: usize,
    },
    /// Peripheral data: group, meridian, longitude, cord relations.
    Peripheral {
        #[command(flatten)]
        braid: BraidArgs,
    },
    /// Verify the structural conditions of a catalog operator.
    Verify {
        #[arg(long)]
        op: String,
    },
    /// Markov-invariance harness over conjugates and stabilizations.
    Invariance {
        #[command(flatten)]
        braid: BraidArgs,
        /// Invariant: alex | hom-s3 | hom-s4 | points-q3 | points-q5 | all.
        #[arg(long, default_value = "all")]
        invariant: String,
        /// Moves to apply: comma-separated from conj, stab+, stab-.
        #[arg(long, default_value = "conj,stab+,stab-")]
        moves: String,
    },
    /// Run a shipped acceptance suite over the corpus.
    Corpus {
        /// structural | invariance | oracles | all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, value: &Value, text: impl FnOnce() -> String) {
    if cli.text {
        println!("{}", text());
    } else {
        println!("{}", serde_json::to_string_pretty(value).unwrap());
    }
}

fn run(cli: &Cli) -> catbraid::Result<ExitCode> {
    match &cli.command {
        Command::Closure { braid, op } => {
            let b = braid.parse()?;
            if op == "burau" {
                let m = catbraid::burau::closure_matrix(&b)?;
                emit(cli, &json::matrix_json(&m), || format!("{m}"));
            } else {
                let operator = catalog_operator(op)?;
                let c = closure::categorical_closure(&operator, &b)?;
                emit(cli, &json::closure_json(&c), || format!("{c:#?}"));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dga { braid } => {
            let b = braid.parse()?;
            let link = closure::knot_dg_category(&b)?;
            let dga = closure::knot_dga_at_1(&link)?;
            let v = serde_json::json!({
                "link_dg_category": json::link_dg_json(&link),
                "endomorphism_dga_at_1": json::presentation_json(&dga),
            });
            emit(cli, &v, || {
                format!(
                    "knot DG category on {} strands; DGA generators: {}",
                    link.strand_component.len(),
                    dga.quiver.arrow_names().count()
                )
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Fnc { braid } => {
            let b = braid.parse()?;
            let link = closure::fnc_link_dg_category(&b)?;
            emit(cli, &json::link_dg_json(&link), || {
                format!(
                    "fully noncommutative link DG category: {} components",
                    link.component_objects.len()
                )
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Hc0 { braid } => {
            let b = braid.parse()?;
            let hc0 = closure::hc0_presentation(&b)?;
            emit(cli, &json::algebra_json(&hc0), || {
                format!(
                    "HC0: {} generators, {} relations",
                    hc0.pres.quiver.arrow_names().count(),
                    hc0.relations.len()
                )
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Alex { braid, method } => {
            let b = braid.parse()?;
            let method = AlexMethod::parse(method)?;
            let out = invariants::alexander(&b, method)?;
            emit(cli, &json::alex_json(&out), || format!("{out:?}"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Homcount { braid, group } => {
            let b = braid.parse()?;
            let target = FiniteGroup::by_name(group)?;
            let report = invariants::finite_hom_count(&b, &target)?;
            emit(cli, &json::count_json(&report), || {
                format!("|Hom(pi, {})| = {}", report.target, report.count)
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Points {
            braid,
            q,
            lambda,
            mu,
            dim,
        } => {
            let b = braid.parse()?;
            let hc0 = closure::hc0_presentation(&b)?;
            let mut pins = BTreeMap::new();
            if let Some(l) = lambda {
                pins.insert("lambda".to_string(), *l);
            }
            if let Some(m) = mu {
                pins.insert("mu".to_string(), *m);
            }
            let req = CountRequest {
                q: *q,
                dim: *dim,
                pins,
            };
            let report = point_count(&hc0, &req)?;
            emit(cli, &json::count_json(&report), || {
                format!("{} points over {}", report.count, report.target)
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Peripheral { braid } => {
            let b = braid.parse()?;
            let peri = peripheral::peripheral_presentation(&b)?;
            emit(cli, &json::peripheral_json(&peri), || {
                format!(
                    "meridian {}, longitude {}",
                    peri.meridian, peri.longitude
                )
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { op } => {
            let report = if op == "burau" {
                catbraid::burau::verify_burau()?
            } else {
                let operator = catalog_operator(op)?;
                let mut report = verify::verify_braid_relations(&operator)?;
                report.merge(verify::verify_reidemeister(&operator)?);
                if let Some(theta) = verify::verify_theta_lambda(&operator)? {
                    report.merge(theta);
                }
                report
            };
            let pass = report.pass();
            emit(cli, &json::check_report_json(&report), || {
                report
                    .items
                    .iter()
                    .map(|i| {
                        format!(
                            "[{}] {} {}",
                            if i.pass { "pass" } else { "FAIL" },
                            i.check,
                            i.generator
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            Ok(if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Invariance {
            braid,
            invariant,
            moves,
        } => {
            let b = braid.parse()?;
            let extra = parse_moves(&b, moves)?;
            let kinds: Vec<InvariantKind> = match invariant.as_str() {
                "alex" => vec![InvariantKind::Alexander],
                "hom-s3" => vec![InvariantKind::HomCount("s3".into())],
                "hom-s4" => vec![InvariantKind::HomCount("s4".into())],
                "points-q3" => vec![InvariantKind::Hc0Points { q: 3 }],
                "points-q5" => vec![InvariantKind::Hc0Points { q: 5 }],
                "all" => vec![
                    InvariantKind::Alexander,
                    InvariantKind::HomCount("s3".into()),
                    InvariantKind::Hc0Points { q: 3 },
                ],
                other => return Err(catbraid::Error::Parse(format!("unknown invariant {other}"))),
            };
            let mut all_equal = true;
            let mut reports = Vec::new();
            for kind in &kinds {
                let report = invariants::invariance_suite(kind, &b, &extra)?;
                all_equal &= report.all_equal;
                reports.push(json::invariance_json(&report));
            }
            emit(cli, &Value::Array(reports.clone()), || {
                format!("{} invariants checked, all_equal = {all_equal}", kinds.len())
            });
            Ok(if all_equal {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Corpus { suite } => {
            let results = corpus::run_suite(suite)?;
            let pass = results.iter().all(|c| c.pass);
            let rows: Vec<Value> = results
                .iter()
                .map(|c| {
                    serde_json::json!({
                        "id": c.id,
                        "name": c.name,
                        "pass": c.pass,
                        "details": c.details,
                    })
                })
                .collect();
            emit(cli, &Value::Array(rows), || {
                results
                    .iter()
                    .map(|c| {
                        format!(
                            "[{}] criterion {:>2}: {}{}",
                            if c.pass { "PASS" } else { "FAIL" },
                            c.id,
                            c.name,
                            if c.details.is_empty() {
                                String::new()
                            } else {
                                format!(" ({})", c.details)
                            }
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            });
            Ok(if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

/// Build the requested extra representatives of a braid.
fn parse_moves(b: &BraidWord, moves: &str) -> catbraid::Result<Vec<BraidWord>> {
    use catbraid::braid::MarkovMove;
    let mut out = Vec::new();
    for m in moves.split(',').filter(|s| !s.is_empty()) {
        let rep = match m {
            "conj" => {
                if b.strand_count() >= 2 {
                    b.markov_move(&MarkovMove::Conjugate(BraidWord::new(
                        b.strand_count(),
                        vec![1],
                    )?))?
                } else {
                    b.clone()
                }
            }
            "stab+" => b.markov_move(&MarkovMove::StabilizePositive)?,
            "stab-" => b.markov_move(&MarkovMove::StabilizeNegative)?,
            other => return Err(catbraid::Error::Parse(format!("unknown move {other}"))),
        };
        out.push(rep);
    }
    Ok(out)
}
