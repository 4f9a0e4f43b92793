// SPDX-License-Identifier: Apache-2.0

//! Command-line frontend for `trisynth`.
//!
//! Exit statuses: 0 on success or equality, 1 on a verification mismatch,
//! 2 on any input error.

pub mod commands;
pub mod error;
pub mod netlist;
pub mod spec_file;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::{run, Status};
pub use error::CliError;
pub use netlist::{emit_netlist, parse_netlist};
pub use spec_file::{parse_spec, SpecFile};

#[derive(Debug, Parser)]
#[command(
    name = "trisynth",
    version,
    about = "Ancilla-free ternary reversible circuit synthesis"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GateSetArg {
    /// Swap, Not, Toffoli
    Snt,
    /// Not, Controlled-Not, Multiply-Two, Toffoli
    Ncmt,
}

impl From<GateSetArg> for trisynth::GateSet {
    fn from(g: GateSetArg) -> Self {
        match g {
            GateSetArg::Snt => trisynth::GateSet::Snt,
            GateSetArg::Ncmt => trisynth::GateSet::Ncmt,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Synthesize a netlist for a specification
    Synth {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "snt")]
        gateset: GateSetArg,
        /// Netlist destination; stdout when omitted
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        /// Cancel adjacent gates that multiply to the identity
        #[arg(long)]
        simplify: bool,
    },
    /// Check a netlist against a specification by exhaustive simulation
    Verify {
        #[arg(long)]
        netlist: PathBuf,
        #[arg(long)]
        spec: PathBuf,
    },
    /// Simulate a netlist on one input word or on every input
    Sim {
        #[arg(long)]
        netlist: PathBuf,
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        input: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Replace every Swap with Multiply-Two and Controlled-Not gates
    Lower {
        #[arg(long)]
        netlist: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Gate counts, length, width and parity of a netlist
    Stats {
        #[arg(long)]
        netlist: PathBuf,
    },
    /// Print the ternary reflected Gray code
    Graycode {
        #[arg(short = 'n')]
        n: usize,
    },
    /// Synthesize and verify random permutations
    #[command(hide = true)]
    Selftest {
        #[arg(short = 'n', default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}
