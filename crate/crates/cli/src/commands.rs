// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::io::Write;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use trisynth::{
    all_words, gray_sequence, lower_to_ncmt, symbol_count, synthesize_with, verify, Circuit, GateSet, Permutation,
    TernaryWord, Verdict,
};

use crate::error::CliError;
use crate::netlist::{emit_netlist, parse_netlist};
use crate::spec_file::parse_spec;
use crate::{Cli, Command};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Mismatch = 1,
    InputError = 2,
}

impl Status {
    pub fn code(self) -> u8 {
        self as u8
    }
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Status {
    match execute(cli.command, out, err) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            Status::InputError
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn read_netlist(path: &Path) -> Result<Circuit, CliError> {
    parse_netlist(&read(path)?).map_err(|e| annotate(path, e))
}

fn annotate(path: &Path, e: CliError) -> CliError {
    match e {
        CliError::Parse { line, message } => CliError::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    }
}

fn io(e: std::io::Error) -> CliError {
    CliError::Io {
        path: "<output>".into(),
        source: e,
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status, CliError> {
    match command {
        Command::Synth {
            spec,
            gateset,
            output,
            simplify,
        } => {
            let spec_file = parse_spec(&read(&spec)?).map_err(|e| annotate(&spec, e))?;
            let mut report = synthesize_with(&spec_file.permutation, spec_file.width, gateset.into())?;
            if simplify {
                let simplified = report.circuit.cancel_adjacent_inverses();
                if !verify(&simplified, &report.target)?.is_equal() {
                    return Err(trisynth::Error::Internal("simplification changed the circuit".into()).into());
                }
                report.gate_counts = simplified.gate_counts();
                report.circuit = simplified;
            }
            let netlist = emit_netlist(&report.circuit);
            match output {
                Some(path) => {
                    write_file(&path, &netlist)?;
                    write!(out, "{report}").map_err(io)?;
                }
                None => {
                    out.write_all(netlist.as_bytes()).map_err(io)?;
                    write!(err, "{report}").map_err(io)?;
                }
            }
            Ok(Status::Success)
        }
        Command::Verify { netlist, spec } => {
            let circuit = read_netlist(&netlist)?;
            let spec_file = parse_spec(&read(&spec)?).map_err(|e| annotate(&spec, e))?;
            if spec_file.width != circuit.width() {
                return Err(CliError::Usage(format!(
                    "netlist width {} does not match spec width {}",
                    circuit.width(),
                    spec_file.width
                )));
            }
            let verdict = verify(&circuit, &spec_file.permutation)?;
            writeln!(out, "{verdict}").map_err(io)?;
            Ok(match verdict {
                Verdict::Equal => Status::Success,
                Verdict::Mismatch { .. } => Status::Mismatch,
            })
        }
        Command::Sim { netlist, input, all } => {
            let circuit = read_netlist(&netlist)?;
            if all {
                for w in all_words(circuit.width())? {
                    writeln!(out, "{w} {}", circuit.simulate(&w)?).map_err(io)?;
                }
            } else {
                let text = input.unwrap_or_default();
                let w: TernaryWord = text
                    .parse()
                    .map_err(|e| CliError::Usage(format!("input `{text}`: {e}")))?;
                if w.width() != circuit.width() {
                    return Err(CliError::Usage(format!(
                        "input `{text}` has width {}, netlist has width {}",
                        w.width(),
                        circuit.width()
                    )));
                }
                writeln!(out, "{}", circuit.simulate(&w)?).map_err(io)?;
            }
            Ok(Status::Success)
        }
        Command::Lower { netlist, output } => {
            let lowered = emit_netlist(&lower_to_ncmt(&read_netlist(&netlist)?));
            match output {
                Some(path) => write_file(&path, &lowered)?,
                None => out.write_all(lowered.as_bytes()).map_err(io)?,
            }
            Ok(Status::Success)
        }
        Command::Stats { netlist } => {
            let circuit = read_netlist(&netlist)?;
            writeln!(out, "width: {}", circuit.width()).map_err(io)?;
            writeln!(out, "length: {}", circuit.len()).map_err(io)?;
            writeln!(out, "gates: {}", circuit.gate_counts()).map_err(io)?;
            writeln!(out, "parity: {}", circuit.to_permutation().parity()).map_err(io)?;
            Ok(Status::Success)
        }
        Command::Graycode { n } => {
            for w in gray_sequence(n)? {
                writeln!(out, "{w}").map_err(io)?;
            }
            Ok(Status::Success)
        }
        Command::Selftest { n, trials, seed } => {
            let m = symbol_count(n)?;
            let failures: Vec<String> = (0..trials)
                .into_par_iter()
                .filter_map(|trial| selftest_trial(n, m, seed, trial).err())
                .collect();
            for f in &failures {
                writeln!(err, "{f}").map_err(io)?;
            }
            writeln!(out, "trials: {trials} passed: {}", trials - failures.len()).map_err(io)?;
            Ok(if failures.is_empty() {
                Status::Success
            } else {
                Status::Mismatch
            })
        }
    }
}

/// Each trial draws from its own stream so results do not depend on
/// scheduling.
fn selftest_trial(n: usize, m: usize, seed: u64, trial: usize) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    let mut images: Vec<usize> = (1..=m).collect();
    images.shuffle(&mut rng);
    let p = Permutation::from_one_line(images).expect("shuffle is a bijection");
    let sets: &[GateSet] = if n == 1 {
        &[GateSet::Ncmt]
    } else {
        &[GateSet::Snt, GateSet::Ncmt]
    };
    for &set in sets {
        let report = synthesize_with(&p, n, set).map_err(|e| format!("trial {trial} ({set}): {e}"))?;
        if !report.circuit.conforms_to(set) {
            return Err(format!("trial {trial} ({set}): circuit leaves the gate set"));
        }
        match verify(&report.circuit, &p) {
            Ok(Verdict::Equal) => {}
            other => return Err(format!("trial {trial} ({set}): {other:?}")),
        }
    }
    Ok(())
}
