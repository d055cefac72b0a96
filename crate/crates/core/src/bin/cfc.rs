use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use cfc::classify::{enumerate_cfc, enumerate_coxeter, enumerate_fc};
use cfc::conjecture::check_conjecture;
use cfc::heap::{render, RenderFormat};
use cfc::table::{class_table, count, CountKind};
use cfc::{
    build_heap, conjugacy_witness, is_cfc, is_conjugate_cfc, is_fc, CfcError, CfcMethod, FcMethod, Limits, Rank,
    Word,
};

#[derive(Parser)]
#[command(name = "cfc", version, about = "Cyclically fully commutative elements of W(A_n)")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Raise the rank cap for enumeration, class tables and conjecture sweeps.
    #[arg(long, global = true)]
    max_rank: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Fc,
    Cfc,
    Coxeter,
}

impl From<Kind> for CountKind {
    fn from(k: Kind) -> CountKind {
        match k {
            Kind::Fc => CountKind::Fc,
            Kind::Cfc => CountKind::Cfc,
            Kind::Coxeter => CountKind::Coxeter,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Style {
    Ascii,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// List the FC, CFC or Coxeter elements of a rank.
    Enumerate {
        #[arg(long)]
        rank: usize,
        #[arg(long, value_enum, default_value_t = Kind::Cfc)]
        kind: Kind,
    },
    /// FC and CFC verdicts, with witnesses, for a reduced word.
    Classify {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        word: String,
    },
    /// Decide conjugacy of two CFC elements.
    Conj {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        w: String,
        #[arg(long)]
        y: String,
    },
    /// Build and verify a conjugator between two CFC elements.
    Witness {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        w: String,
        #[arg(long)]
        y: String,
    },
    /// Draw the heap of a reduced word.
    Render {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = Style::Ascii)]
        style: Style,
        /// Write the drawing here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Conjugacy, cyclic and commutation classes of CFC elements.
    Classtable {
        #[arg(long)]
        rank: usize,
    },
    /// Compare the cycle-structure predicate with CFC classification on S_{n+1}.
    ConjectureCheck {
        #[arg(long)]
        rank: usize,
    },
    /// Count FC, CFC or Coxeter elements.
    Counts {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        rank: usize,
    },
}

/// What a subcommand produced: JSON for machines, text for people.
struct Output {
    json: Value,
    text: String,
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn word(rank: Rank, text: &str) -> Result<Word, CfcError> {
    Word::parse(rank, text)
}

fn run(cli: &Cli, limits: &Limits) -> Result<Output, CfcError> {
    match &cli.command {
        Command::Enumerate { rank, kind } => {
            let rank = Rank::new(*rank)?;
            let elements = match kind {
                Kind::Fc => enumerate_fc(rank, limits)?,
                Kind::Cfc => enumerate_cfc(rank, limits)?,
                Kind::Coxeter => enumerate_coxeter(rank, limits)?,
            };
            let text = elements.iter().map(|e| format!("{}\n", e.word())).collect();
            Ok(Output { json: json!({ "rank": rank, "count": elements.len(), "elements": elements }), text })
        }
        Command::Classify { rank, word: text } => {
            let w = word(Rank::new(*rank)?, text)?;
            let fc = is_fc(&w, FcMethod::Pattern321)?;
            let cfc = is_cfc(&w, CfcMethod::Pattern3213412)?;
            let p = w.to_permutation();
            let cycles: Vec<String> = p.cycles().iter().map(|c| c.to_string()).collect();
            let text = format!(
                "word {w}\nlength {}\none-line {:?}\ncycles {}\nFC {}\nCFC {}\n",
                w.len(),
                p.one_line(),
                if cycles.is_empty() { "e".to_string() } else { cycles.concat() },
                fc.is_fc,
                cfc.is_cfc
            );
            Ok(Output {
                json: json!({
                    "is_fc": fc.is_fc,
                    "is_cfc": cfc.is_cfc,
                    "length": w.len(),
                    "one_line": p.one_line(),
                    "cycles": cycles,
                    "fc": fc,
                    "cfc": cfc,
                }),
                text,
            })
        }
        Command::Conj { rank, w, y } => {
            let rank = Rank::new(*rank)?;
            let c = is_conjugate_cfc(&word(rank, w)?, &word(rank, y)?)?;
            Ok(Output { json: json!({ "conjugate": c }), text: format!("{c}\n") })
        }
        Command::Witness { rank, w, y } => {
            let rank = Rank::new(*rank)?;
            match conjugacy_witness(&word(rank, w)?, &word(rank, y)?)? {
                Some(cert) => {
                    let text = format!(
                        "x = {}\nx {} x^-1 = {}\nverified {}\n",
                        cert.conjugator,
                        cert.source.word(),
                        cert.target.word(),
                        cert.verified
                    );
                    Ok(Output { json: to_value(&cert), text })
                }
                None => Ok(Output { json: json!({ "conjugate": false }), text: "not conjugate\n".into() }),
            }
        }
        Command::Render { rank, word: text, style, out } => {
            let h = build_heap(&word(Rank::new(*rank)?, text)?)?;
            let format = match style {
                Style::Ascii => RenderFormat::Ascii,
                Style::Svg => RenderFormat::Svg,
            };
            let drawing = render(&h, format);
            match out {
                Some(path) => {
                    std::fs::write(path, &drawing)
                        .map_err(|e| CfcError::OutOfRange(format!("cannot write {}: {e}", path.display())))?;
                    Ok(Output {
                        json: json!({ "written": path.display().to_string() }),
                        text: format!("wrote {}\n", path.display()),
                    })
                }
                None => Ok(Output { json: json!({ "rendering": drawing }), text: drawing }),
            }
        }
        Command::Classtable { rank } => {
            let t = class_table(Rank::new(*rank)?, limits)?;
            let mut text = String::new();
            for c in &t.conjugacy_classes {
                let _ = writeln!(text, "rings {:?}", c.ring_size_multiset);
                for y in &c.cyclic_classes {
                    let _ = writeln!(text, "  cyclic class of {}", y.canonical_word);
                    for cls in &y.commutation_classes {
                        let words: Vec<String> = cls.iter().map(|w| w.to_string()).collect();
                        let _ = writeln!(text, "    {}", words.join(" "));
                    }
                }
            }
            Ok(Output { json: to_value(&t), text })
        }
        Command::ConjectureCheck { rank } => {
            let r = check_conjecture(Rank::new(*rank)?, limits)?;
            let mut text = format!("rank {}: {} elements, agree {}\n", r.rank, r.elements_checked, r.agree);
            for c in &r.counterexamples {
                let _ = writeln!(
                    text,
                    "  {} {:?}: predicate {}, CFC {}",
                    c.word.word(),
                    c.permutation.one_line(),
                    c.predicate,
                    c.is_cfc
                );
            }
            Ok(Output { json: to_value(&r), text })
        }
        Command::Counts { kind, rank } => {
            let n = count((*kind).into(), Rank::new(*rank)?, limits)?;
            Ok(Output { json: json!({ "count": n }), text: format!("{n}\n") })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = match cli.max_rank {
        Some(r) => {
            eprintln!("warning: rank cap raised to {r}; exhaustive sweeps grow like (n+1)!");
            Limits::with_max_rank(r)
        }
        None => Limits::default(),
    };
    match run(&cli, &limits) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", out.json),
                Format::Text => print!("{}", out.text),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            println!("{}", json!({ "error": { "code": e.code(), "message": e.to_string() } }));
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
