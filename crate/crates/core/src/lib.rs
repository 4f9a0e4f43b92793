// SPDX-License-Identifier: Apache-2.0

//! Ancilla-free synthesis of ternary reversible circuits.
//!
//! Any bijection on `{0,1,2}^n` (`n >= 2`) is compiled into a cascade of
//! Swap (`E i j`), Not (`N j`) and Toffoli (`T`) gates, and can be lowered
//! further to Not, Controlled-Not (`C j i`), Multiply-Two (`M i`) and
//! Toffoli. Circuits are plain permutations of the `3^n` input words, so
//! every result is checked by exhaustive simulation.

pub mod circuit;
pub mod error;
pub mod gate;
pub mod perm;
pub mod synth;
pub mod word;

pub use circuit::{circuit_parity, circuit_to_permutation, simulate, Circuit, GateCounts};
pub use error::{Error, Result};
pub use gate::{apply_gate, gate_to_permutation, Gate, GateKind, GateSet};
pub use perm::{
    compose, cycle_decomposition, inverse, neighbor_three_cycle_factorization, parity, three_cycle_factorization,
    Cycle, Parity, Permutation,
};
pub use synth::{
    lower_to_ncmt, swap_as_ncmt, synth_case1, synth_case2, synth_three_cycle, synthesize, synthesize_with, verify,
    CaseHistogram, SynthesisReport, Verdict,
};
pub use word::{
    all_words, gray_sequence, hetero_profile, index_to_word, symbol_count, word_to_index, ColumnClass, HeteroProfile,
    TernaryWord, WordIndex,
};
