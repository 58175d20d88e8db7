//! The `moore` command line.
//!
//! Exit codes: 0 when the command succeeds or the checked law holds, 1 when
//! a law is violated or a report is a failure, 2 on usage or validation
//! errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use moore_core::composition::{associator, j_equalities};
use moore_core::lab::sweep::{random_mealy, random_moore};
use moore_core::lab::{
    check_adjunction_d1, check_counit, check_hom_correspondence, enumerate_homs,
    search_moore_identity, BijectionReport, FailureReason, Side, Transposition,
};
use moore_core::prelude::*;
use moore_core::unitization::{check_triangle, check_upentagon, ucompose, UCell, UMap};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

use crate::format::{read_machine, serialize_cell, write_machine, FormatError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Violated = 1,
    Usage = 2,
}

impl ExitStatus {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, Error)]
enum AppError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] moore_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

type AppResult<T> = std::result::Result<T, AppError>;

#[derive(Debug, Parser)]
#[command(name = "moore", version, about = "Compose, run and law-check Mealy and Moore machines")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate a machine file.
    Validate { file: PathBuf },
    /// Run a machine from a start state and print the final output and trace.
    Run {
        file: PathBuf,
        #[arg(long)]
        start: String,
        /// Input word: symbols separated by spaces or commas, or written
        /// together when every symbol is one character.
        #[arg(long, default_value = "")]
        word: String,
    },
    /// Compose SECOND after FIRST.
    Compose {
        second: PathBuf,
        first: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Convert between machine kinds or build a universal cell.
    Transform {
        #[command(subcommand)]
        which: Transform,
    },
    /// Check a law.
    Check {
        /// Seed for randomized checks.
        #[arg(long, global = true, default_value_t = 0)]
        seed: u64,
        #[command(subcommand)]
        law: Law,
    },
    /// List every homomorphism between two machines of the same kind.
    Homs { source: PathBuf, target: PathBuf },
    /// Transpose homs across Mly(D1 n, m) ≅ Mre(n, moorify m).
    Adjunction { moore: PathBuf, mealy: PathBuf },
    /// Transpose homs across Mly(J n, m) and Mre(n, decapitate m) for soft n.
    Correspondence { moore: PathBuf, mealy: PathBuf },
    /// Look for a Moore machine acting as a two-sided identity.
    SearchIdentity {
        #[arg(long)]
        alphabet: String,
        #[arg(long, default_value_t = 2)]
        max_states: usize,
        #[arg(long = "probe", required = true)]
        probes: Vec<PathBuf>,
    },
    /// Check the unit, triangle and pentagon laws after adding formal identities.
    UnitizeDemo,
}

#[derive(Debug, Subcommand)]
enum Transform {
    /// Moore to Mealy, reading the output before the transition.
    EmbedJ {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Moore to Mealy, reading the output after the transition.
    D1 {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Mealy to Moore by post-composing the one-step register.
    Moorify {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Mealy to soft Moore by post-composing the frozen register.
    Decapitate {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The one-step register on an alphabet.
    U {
        #[arg(long)]
        alphabet: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The frozen register on an alphabet.
    P {
        #[arg(long)]
        alphabet: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum Law {
    /// One transition never changes the output.
    Soft { file: PathBuf },
    /// Every word of exactly N letters leaves the output unchanged.
    NSoft { n: usize, file: PathBuf },
    /// Associators and the pentagon for K ⋄ H ⋄ G ⋄ F, or for random quadruples.
    Pentagon {
        #[arg(num_args = 0..=4)]
        files: Vec<PathBuf>,
        #[arg(long)]
        random: Option<usize>,
    },
    /// Moore word semantics agree with those of its D1 image up to length L.
    ExtensionSquare { len: usize, file: PathBuf },
    /// The projection from D1(moorify m) to m is a homomorphism.
    Counit { file: PathBuf },
    /// The J-equalities that apply to SECOND ⋄ FIRST.
    JCompat { second: PathBuf, first: PathBuf },
}

/// Runs the command line `args` (program name first), writing the report to
/// `out` and errors to `err`.
pub fn execute<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() {
                ExitStatus::Usage
            } else {
                ExitStatus::Success
            };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return status;
        }
    };
    match dispatch(cli.command, out) {
        Ok(true) => ExitStatus::Success,
        Ok(false) => ExitStatus::Violated,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            ExitStatus::Usage
        }
    }
}

fn mealy(path: &Path) -> AppResult<MealyMachine> {
    match read_machine(path)? {
        Cell::Mealy(m) => Ok(m),
        Cell::Moore(_) => Err(AppError::Usage(format!(
            "{}: expected a Mealy machine, found a Moore machine",
            path.display()
        ))),
    }
}

fn moore(path: &Path) -> AppResult<MooreMachine> {
    match read_machine(path)? {
        Cell::Moore(m) => Ok(m),
        Cell::Mealy(_) => Err(AppError::Usage(format!(
            "{}: expected a Moore machine, found a Mealy machine",
            path.display()
        ))),
    }
}

fn parse_alphabet(text: &str) -> AppResult<Alphabet> {
    let symbols: Vec<&str> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    Ok(Alphabet::from_symbols(symbols)?)
}

fn describe(cell: &Cell) -> String {
    format!(
        "{} machine, {} states, input {}, output {}",
        cell.kind(),
        cell.state_count(),
        cell.input(),
        cell.output()
    )
}

fn emit(out: &mut dyn Write, cell: &Cell, path: Option<&Path>) -> AppResult<()> {
    match path {
        Some(p) => {
            write_machine(p, cell)?;
            writeln!(out, "wrote {}: {}", p.display(), describe(cell))?;
        }
        None => write!(out, "{}", serialize_cell(cell))?,
    }
    Ok(())
}

fn render_map(map: &StateMap, source: &[String], target: &[String]) -> String {
    let parts: Vec<String> = map
        .images()
        .iter()
        .enumerate()
        .map(|(e, &t)| format!("{}->{}", source[e], target[t]))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn dispatch(command: Command, out: &mut dyn Write) -> AppResult<bool> {
    match command {
        Command::Validate { file } => {
            let cell = read_machine(&file)?;
            writeln!(out, "valid: {}", describe(&cell))?;
            Ok(true)
        }
        Command::Run { file, start, word } => {
            let cell = read_machine(&file)?;
            let word = cell.input().parse_word(&word)?;
            let p = Pointed::by_name(&cell, &start)?;
            let t = trace(&p, &word)?;
            let last = *t.last().expect("traces are non-empty");
            writeln!(out, "final: {}", cell.output().symbol(last))?;
            writeln!(out, "trace: {}", cell.output().render_word(&t))?;
            Ok(true)
        }
        Command::Compose { second, first, output } => {
            let composite = compose(&read_machine(&second)?, &read_machine(&first)?)?;
            emit(out, &composite, output.as_deref())?;
            Ok(true)
        }
        Command::Transform { which } => transform(which, out),
        Command::Check { seed, law } => check(law, seed, out),
        Command::Homs { source, target } => {
            let (s, t) = (read_machine(&source)?, read_machine(&target)?);
            let set = enumerate_homs(&s, &t)?;
            writeln!(out, "candidates: {}", set.candidates)?;
            writeln!(out, "homs: {}", set.len())?;
            for h in &set.homs {
                writeln!(out, "  {}", render_map(h, s.state_names(), t.state_names()))?;
            }
            Ok(true)
        }
        Command::Adjunction { moore: n, mealy: m } => {
            let (n, m) = (moore(&n)?, mealy(&m)?);
            let report = check_adjunction_d1(&n, &m)?;
            let d1n = apply_d1(&n);
            let mm = moorify(&m);
            print_report(out, &report, ("Mly(D1 n, m)", &d1n, &m), ("Mre(n, moorify m)", &n, &mm))
        }
        Command::Correspondence { moore: n, mealy: m } => {
            let (n, m) = (moore(&n)?, mealy(&m)?);
            let report = check_hom_correspondence(&n, &m)?;
            let jn = embed_j(&n);
            let dm = decapitate(&m);
            print_report(out, &report, ("Mly(J n, m)", &jn, &m), ("Mre(n, decapitate m)", &n, &dm))
        }
        Command::SearchIdentity {
            alphabet,
            max_states,
            probes,
        } => {
            let alphabet = parse_alphabet(&alphabet)?;
            let probes = probes.iter().map(|p| mealy(p)).collect::<AppResult<Vec<_>>>()?;
            let search = search_moore_identity(&alphabet, &probes, max_states)?;
            let passing: Vec<_> = search.passing().collect();
            writeln!(out, "candidates: {}", search.outcomes.len())?;
            writeln!(out, "passing: {}", passing.len())?;
            for m in &passing {
                writeln!(out, "  delta {:?} out {:?}", m.delta_table(), m.out_table())?;
            }
            if !search.letter_dependent_probe {
                writeln!(out, "note: every probe ignores its input letter, so constant candidates pass vacuously")?;
            }
            Ok(passing.is_empty())
        }
        Command::UnitizeDemo => unitize_demo(out),
    }
}

fn transform(which: Transform, out: &mut dyn Write) -> AppResult<bool> {
    let (cell, output): (Cell, Option<PathBuf>) = match which {
        Transform::EmbedJ { file, output } => (embed_j(&moore(&file)?).into(), output),
        Transform::D1 { file, output } => (apply_d1(&moore(&file)?).into(), output),
        Transform::Moorify { file, output } => (moorify(&mealy(&file)?).into(), output),
        Transform::Decapitate { file, output } => (decapitate(&mealy(&file)?).into(), output),
        Transform::U { alphabet, output } => (universal_u(&parse_alphabet(&alphabet)?).into(), output),
        Transform::P { alphabet, output } => (universal_p(&parse_alphabet(&alphabet)?).into(), output),
    };
    emit(out, &cell, output.as_deref())?;
    Ok(true)
}

fn random_cell(rng: &mut StdRng, input: &Alphabet, output: &Alphabet) -> Cell {
    let states = rng.gen_range(1..=3);
    if rng.gen_bool(0.5) {
        random_mealy(rng, input, output, states).into()
    } else {
        random_moore(rng, input, output, states).into()
    }
}

fn coherent(k: &Cell, h: &Cell, g: &Cell, f: &Cell) -> AppResult<bool> {
    let associators = [associator(k, h, g), associator(h, g, f)]
        .into_iter()
        .all(|a| a.is_ok());
    Ok(associators && check_pentagon(k, h, g, f)?)
}

fn check(law: Law, seed: u64, out: &mut dyn Write) -> AppResult<bool> {
    let holds = match law {
        Law::Soft { file } => {
            let holds = is_soft(&moore(&file)?);
            writeln!(out, "soft: {holds}")?;
            holds
        }
        Law::NSoft { n, file } => {
            let holds = is_n_soft(&moore(&file)?, n)?;
            writeln!(out, "{n}-soft: {holds}")?;
            holds
        }
        Law::Pentagon { files, random } => match (files.len(), random) {
            (4, None) => {
                let cells = files.iter().map(|f| read_machine(f)).collect::<std::result::Result<Vec<_>, _>>()?;
                let holds = coherent(&cells[0], &cells[1], &cells[2], &cells[3])?;
                writeln!(out, "pentagon: {holds}")?;
                holds
            }
            (0, Some(count)) => {
                let mut rng = StdRng::seed_from_u64(seed);
                let sizes = [Alphabet::numeric(1)?, Alphabet::binary()];
                let mut holds = true;
                for _ in 0..count {
                    let x: Vec<&Alphabet> = (0..5).map(|_| &sizes[rng.gen_range(0..2)]).collect();
                    let f = random_cell(&mut rng, x[0], x[1]);
                    let g = random_cell(&mut rng, x[1], x[2]);
                    let h = random_cell(&mut rng, x[2], x[3]);
                    let k = random_cell(&mut rng, x[3], x[4]);
                    holds &= coherent(&k, &h, &g, &f)?;
                }
                writeln!(out, "pentagon: {holds} ({count} random quadruples, seed {seed})")?;
                holds
            }
            _ => {
                return Err(AppError::Usage(
                    "pentagon takes four machine files or --random N".into(),
                ))
            }
        },
        Law::ExtensionSquare { len, file } => {
            let holds = check_extension_square(&moore(&file)?, len)?;
            writeln!(out, "extension square up to length {len}: {holds}")?;
            holds
        }
        Law::Counit { file } => {
            let holds = check_counit(&mealy(&file)?);
            writeln!(out, "counit: {holds}")?;
            holds
        }
        Law::JCompat { second, first } => {
            let eqs = j_equalities(&read_machine(&second)?, &read_machine(&first)?)?;
            if eqs.is_empty() {
                writeln!(out, "no J-equalities apply to two Mealy machines")?;
            }
            for eq in &eqs {
                writeln!(out, "{}: {}", eq.law, eq.holds)?;
            }
            eqs.iter().all(|e| e.holds)
        }
    };
    Ok(holds)
}

fn print_report(
    out: &mut dyn Write,
    report: &BijectionReport,
    left: (&str, &dyn Machine, &dyn Machine),
    right: (&str, &dyn Machine, &dyn Machine),
) -> AppResult<bool> {
    let show = |out: &mut dyn Write, side: &(&str, &dyn Machine, &dyn Machine), set: &moore_core::lab::HomSet| -> AppResult<()> {
        writeln!(out, "{}: {} of {} candidates", side.0, set.len(), set.candidates)?;
        for h in &set.homs {
            writeln!(out, "  {}", render_map(h, side.1.state_names(), side.2.state_names()))?;
        }
        Ok(())
    };
    show(out, &left, &report.left)?;
    show(out, &right, &report.right)?;
    match &report.transposition {
        Transposition::Bijection(pairs) => {
            writeln!(out, "SUCCESS: bijection of {} pairs", pairs.len())?;
            for &(l, r) in pairs {
                writeln!(out, "  #{l} <-> #{r}")?;
            }
            Ok(true)
        }
        Transposition::Failure(c) => {
            let (from, to) = match c.side {
                Side::Left => (&left, &right),
                Side::Right => (&right, &left),
            };
            let why = match c.reason {
                FailureReason::NotInOppositeSet => format!("is not in {}", to.0),
                FailureReason::NotInverse => "does not transpose back to it".to_string(),
            };
            writeln!(
                out,
                "FAILURE: {} in {} transposes to {}, which {why}",
                render_map(&c.map, from.1.state_names(), from.2.state_names()),
                from.0,
                render_map(&c.transposed, to.1.state_names(), to.2.state_names()),
            )?;
            Ok(false)
        }
    }
}

fn unitize_demo(out: &mut dyn Write) -> AppResult<bool> {
    let bin = Alphabet::binary();
    let unit = UCell::FormalId(bin);
    let mut named: Vec<(&str, UCell)> = fixtures::corpus()
        .into_iter()
        .filter_map(|(name, c)| c.as_moore().cloned().map(|m| (name, UCell::Cell(m))))
        .collect();
    named.push(("⊥", unit.clone()));
    let names: Vec<&str> = named.iter().map(|(n, _)| *n).collect();
    writeln!(out, "cells: {}", names.join(", "))?;

    let cells: Vec<&UCell> = named.iter().map(|(_, c)| c).collect();
    let units = cells
        .iter()
        .all(|c| ucompose(&unit, c).ok().as_ref() == Some(*c) && ucompose(c, &unit).ok().as_ref() == Some(*c));
    writeln!(out, "strict unit laws: {units}")?;

    let mut triangles = (0, 0);
    for x in &cells {
        for y in &cells {
            triangles.1 += 1;
            triangles.0 += usize::from(check_triangle(x, y)?);
        }
    }
    writeln!(out, "triangles: {} of {} hold", triangles.0, triangles.1)?;

    let mut pentagons = (0, 0);
    for k in &cells {
        for h in &cells {
            for g in &cells {
                for f in &cells {
                    pentagons.1 += 1;
                    pentagons.0 += usize::from(check_upentagon(k, h, g, f)?);
                }
            }
        }
    }
    writeln!(out, "pentagons: {} of {} hold", pentagons.0, pentagons.1)?;

    let machine = cells[0];
    let separated = UMap::new(&unit, machine, None).is_err() && UMap::new(machine, &unit, None).is_err();
    writeln!(out, "no 2-cells between ⊥ and a machine: {separated}")?;
    Ok(units && triangles.0 == triangles.1 && pentagons.0 == pentagons.1 && separated)
}
