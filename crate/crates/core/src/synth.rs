// SPDX-License-Identifier: Apache-2.0

//! Synthesis of arbitrary ternary reversible functions over Swap, Not and
//! Toffoli gates, without ancilla lines.
//!
//! A 3-cycle `(u s t)` of words is built by conjugation: forward gates `F`
//! move the three words to `(x,1,...,1)` with the first column a
//! permutation of `{0,1,2}`, one or two Toffolis cycle them there, and the
//! inverse of `F` restores everything. Words outside `{u,s,t}` are
//! untouched.
//!
//! The number of heterogeneous columns of `[u; s; t]` picks the
//! construction:
//!
//! * one column: swap it to line 1, set the remaining lines to 1;
//! * two columns: bring them to lines 1 and 2 and reduce line 2 to all 1s
//!   through one of three subcases;
//! * three or more: walk the ternary Gray code, where any three consecutive
//!   words differ in at most two columns, and chain neighbor 3-cycles.
//!
//! Whole permutations are split into 3-cycles first; odd permutations get
//! a leading `E 1 2`.

use std::fmt;

use crate::circuit::{Circuit, GateCounts};
use crate::error::{Error, Result};
use crate::gate::{Gate, GateSet};
use crate::perm::{neighbor_three_cycle_factorization, three_cycle_factorization, Cycle, Parity, Permutation};
use crate::word::{gray_sequence, index_to_word, profile_of_rows, symbol_count, TernaryWord, WordIndex};

/// Tallies of how many 3-cycles went through each construction. A Gray-code
/// walk counts once under `case3` and once more for each neighbor 3-cycle
/// it spawns.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CaseHistogram {
    pub case1: usize,
    pub case2: usize,
    pub case3: usize,
}

#[derive(Debug, Clone)]
pub struct SynthesisReport {
    pub target: Permutation,
    pub gate_set: GateSet,
    pub circuit: Circuit,
    pub gate_counts: GateCounts,
    pub three_cycle_count: usize,
    pub case_histogram: CaseHistogram,
}

impl fmt::Display for SynthesisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "width: {}", self.circuit.width())?;
        writeln!(f, "gateset: {}", self.gate_set)?;
        writeln!(f, "parity: {}", self.target.parity())?;
        writeln!(f, "three-cycles: {}", self.three_cycle_count)?;
        writeln!(
            f,
            "cases: case1={} case2={} case3={}",
            self.case_histogram.case1, self.case_histogram.case2, self.case_histogram.case3
        )?;
        writeln!(f, "gates: {}", self.gate_counts)?;
        writeln!(f, "length: {}", self.circuit.len())
    }
}

/// Outcome of comparing a circuit with a target permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    /// First disagreeing input in canonical order.
    Mismatch {
        index: WordIndex,
        input: TernaryWord,
        expected: TernaryWord,
        actual: TernaryWord,
    },
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Equal => f.write_str("EQUAL"),
            Verdict::Mismatch {
                index,
                input,
                expected,
                actual,
            } => {
                write!(
                    f,
                    "MISMATCH at {input} (index {index}): expected {expected}, got {actual}"
                )
            }
        }
    }
}

pub fn verify(c: &Circuit, p: &Permutation) -> Result<Verdict> {
    let n = c.width();
    let m = symbol_count(n)?;
    if p.len() != m {
        return Err(Error::SizeMismatch {
            left: m,
            right: p.len(),
        });
    }
    let actual = c.to_permutation();
    for k in 0..m {
        if actual.apply0(k) != p.apply0(k) {
            let index = WordIndex::new(k + 1, n)?;
            let word = |i: usize| index_to_word(WordIndex::new(i + 1, n).expect("in range"), n).expect("in range");
            return Ok(Verdict::Mismatch {
                index,
                input: word(k),
                expected: word(p.apply0(k)),
                actual: word(actual.apply0(k)),
            });
        }
    }
    Ok(Verdict::Equal)
}

/// Replaces every `E i j` with the 12-gate sequence
/// `M i, C j i, C i j, C i j, M j, C i j, C j i, C j i, M i, C j i, C i j, C i j`.
pub fn lower_to_ncmt(c: &Circuit) -> Circuit {
    let mut gates = Vec::with_capacity(c.len());
    for &g in c.gates() {
        match g {
            Gate::Swap { i, j } => gates.extend(swap_as_ncmt(i, j)),
            other => gates.push(other),
        }
    }
    Circuit::from_gates(c.width(), gates).expect("lowering keeps lines in range")
}

pub fn swap_as_ncmt(i: usize, j: usize) -> [Gate; 12] {
    let (mi, mj) = (Gate::mul_two(i), Gate::mul_two(j));
    let (cji, cij) = (Gate::cnot(j, i), Gate::cnot(i, j));
    [mi, cji, cij, cij, mj, cij, cji, cji, mi, cji, cij, cij]
}

/// Tracks the images of `u, s, t` under the forward gates emitted so far.
struct Conjugation {
    width: usize,
    rows: [Vec<u8>; 3],
    // gate and how many times it is repeated
    forward: Vec<(Gate, u8)>,
}

impl Conjugation {
    fn new(u: &TernaryWord, s: &TernaryWord, t: &TernaryWord) -> Self {
        Self {
            width: u.width(),
            rows: [u.trits().to_vec(), s.trits().to_vec(), t.trits().to_vec()],
            forward: Vec::new(),
        }
    }

    fn emit(&mut self, gate: Gate, power: u8) {
        let power = power % gate.order();
        if power == 0 {
            return;
        }
        for row in &mut self.rows {
            for _ in 0..power {
                gate.act(row);
            }
        }
        self.forward.push((gate, power));
    }

    fn col(&self, line: usize) -> [u8; 3] {
        [self.rows[0][line - 1], self.rows[1][line - 1], self.rows[2][line - 1]]
    }

    fn profile(&self) -> crate::word::HeteroProfile {
        profile_of_rows([&self.rows[0], &self.rows[1], &self.rows[2]])
    }

    /// Not-adjust every line from `first` on to hold 1; those lines must be
    /// homogeneous.
    fn normalize_from(&mut self, first: usize) {
        for line in first..=self.width {
            let v = self.rows[0][line - 1];
            self.emit(Gate::not(line), (4 - v) % 3);
        }
    }

    /// Forward gates, the Toffoli core, then the forward gates undone in
    /// reverse. A gate applied `k` times is undone by `order - k` copies.
    fn finish(self) -> Result<Circuit> {
        let first = self.col(1);
        let canonical = self.rows.iter().all(|r| r[1..].iter().all(|&b| b == 1))
            && first[0] != first[1]
            && first[1] != first[2]
            && first[0] != first[2];
        if !canonical {
            return Err(Error::Internal(format!(
                "rows {:?} are not in Toffoli position",
                self.rows
            )));
        }
        // (0,1,2), (1,2,0), (2,0,1) are the Toffoli's own orientation
        let core = if (first[0] + 1) % 3 == first[1] { 1 } else { 2 };
        let mut gates = Vec::new();
        for &(g, k) in &self.forward {
            gates.extend(std::iter::repeat_n(g, k as usize));
        }
        gates.extend(std::iter::repeat_n(Gate::Toffoli, core));
        for &(g, k) in self.forward.iter().rev() {
            gates.extend(std::iter::repeat_n(g, (g.order() - k) as usize));
        }
        Circuit::from_gates(self.width, gates)
    }
}

fn check_triple(u: &TernaryWord, s: &TernaryWord, t: &TernaryWord) -> Result<crate::word::HeteroProfile> {
    let profile = crate::word::hetero_profile(u, s, t)?;
    if u.width() < 2 {
        return Err(Error::UnsupportedWidth(u.width()));
    }
    Ok(profile)
}

/// 3-cycle `(u s t)` when exactly one column of `[u; s; t]` is
/// heterogeneous.
pub fn synth_case1(u: &TernaryWord, s: &TernaryWord, t: &TernaryWord) -> Result<Circuit> {
    let profile = check_triple(u, s, t)?;
    let het = profile.heterogeneous_columns();
    if het.len() != 1 {
        return Err(Error::CaseDispatch(format!(
            "expected one heterogeneous column, found {}",
            het.len()
        )));
    }
    let mut conj = Conjugation::new(u, s, t);
    if het[0] != 1 {
        conj.emit(Gate::swap(1, het[0]), 1);
    }
    conj.normalize_from(2);
    conj.finish()
}

/// 3-cycle `(u s t)` when exactly two columns of `[u; s; t]` are
/// heterogeneous.
pub fn synth_case2(u: &TernaryWord, s: &TernaryWord, t: &TernaryWord) -> Result<Circuit> {
    let profile = check_triple(u, s, t)?;
    let het = profile.heterogeneous_columns();
    if het.len() != 2 {
        return Err(Error::CaseDispatch(format!(
            "expected two heterogeneous columns, found {}",
            het.len()
        )));
    }
    let mut conj = Conjugation::new(u, s, t);

    // lines 1 and 2 heterogeneous, line 1 with no more distinct values
    let (h1, h2) = (het[0], het[1]);
    let lead = if profile.column(h2).distinct_count < profile.column(h1).distinct_count {
        h2
    } else {
        h1
    };
    if lead != 1 {
        conj.emit(Gate::swap(1, lead), 1);
    }
    let other = conj
        .profile()
        .heterogeneous_columns()
        .into_iter()
        .find(|&c| c != 1)
        .expect("two columns");
    if other != 2 {
        conj.emit(Gate::swap(2, other), 1);
    }
    conj.normalize_from(3);

    let profile = conj.profile();
    match (profile.column(1).distinct_count, profile.column(2).distinct_count) {
        (2, 3) => {}
        (2, 2) => equal_pairs_to_mixed(&mut conj),
        (3, 3) => all_distinct_to_mixed(&mut conj),
        (a, b) => return Err(Error::Internal(format!("column counts ({a},{b}) after reordering"))),
    }
    mixed_to_canonical(&mut conj);
    conj.finish()
}

/// Index of the row whose value differs from the other two, and the shared
/// value.
fn lone_row(col: [u8; 3]) -> (usize, u8) {
    if col[0] == col[1] {
        (2, col[0])
    } else if col[0] == col[2] {
        (1, col[0])
    } else {
        (0, col[1])
    }
}

/// Line 1 has two distinct values, line 2 has three: set line 2 of the lone
/// row to 1, let the Toffoli bring its line 1 to the shared value, set
/// line 1 to all 1s and exchange lines 1 and 2.
fn mixed_to_canonical(conj: &mut Conjugation) {
    let (lone, shared) = lone_row(conj.col(1));
    let lone_second = conj.rows[lone][1];
    conj.emit(Gate::not(2), (4 - lone_second) % 3);
    // only the lone row has line 2 = 1 now
    let lone_first = conj.rows[lone][0];
    conj.emit(Gate::Toffoli, (shared + 3 - lone_first) % 3);
    conj.emit(Gate::not(1), (4 - shared) % 3);
    conj.emit(Gate::swap(1, 2), 1);
}

/// Both lines have two distinct values. The two rows agreeing on line 2
/// differ on line 1; bring their line 2 to 1 and let the Toffoli separate
/// all three line-1 values, then exchange lines 1 and 2.
fn equal_pairs_to_mixed(conj: &mut Conjugation) {
    let (lone, shared) = lone_row(conj.col(2));
    conj.emit(Gate::not(2), (4 - shared) % 3);
    let first = conj.col(1);
    let pair: Vec<u8> = (0..3).filter(|&r| r != lone).map(|r| first[r]).collect();
    let missing = 3 - pair[0] - pair[1];
    // exactly one power in {1,2} avoids a collision with the lone row
    conj.emit(Gate::Toffoli, (first[lone] + 3 - missing) % 3);
    conj.emit(Gate::swap(1, 2), 1);
}

/// Both lines have three distinct values: one Toffoli moves the single
/// active row onto another row's line-1 value.
fn all_distinct_to_mixed(conj: &mut Conjugation) {
    conj.emit(Gate::Toffoli, 1);
}

/// Synthesizer state shared across the 3-cycles of one width.
struct Synthesizer {
    width: usize,
    gray: Vec<TernaryWord>,
    // canonical index - 1 -> 1-based Gray position
    gray_position: Vec<usize>,
    histogram: CaseHistogram,
}

impl Synthesizer {
    fn new(width: usize) -> Result<Self> {
        if width < 2 {
            return Err(Error::UnsupportedWidth(width));
        }
        let gray = gray_sequence(width)?;
        let mut gray_position = vec![0; gray.len()];
        for (pos, w) in gray.iter().enumerate() {
            gray_position[w.index().get() - 1] = pos + 1;
        }
        Ok(Self {
            width,
            gray,
            gray_position,
            histogram: CaseHistogram::default(),
        })
    }

    fn three_cycle(&mut self, u: &TernaryWord, s: &TernaryWord, t: &TernaryWord) -> Result<Circuit> {
        let profile = check_triple(u, s, t)?;
        if u.width() != self.width {
            return Err(Error::WidthMismatch {
                expected: self.width,
                found: u.width(),
            });
        }
        match profile.heterogeneous_count() {
            1 => {
                self.histogram.case1 += 1;
                synth_case1(u, s, t)
            }
            2 => {
                self.histogram.case2 += 1;
                synth_case2(u, s, t)
            }
            _ => {
                self.histogram.case3 += 1;
                let pos = |w: &TernaryWord| self.gray_position[w.index().get() - 1];
                let walk = Cycle::three(pos(u), pos(s), pos(t))?;
                let mut out = Circuit::new(self.width)?;
                for step in neighbor_three_cycle_factorization(&walk)? {
                    let h = step.symbols()[0];
                    let [x, y, z] = [&self.gray[h - 1], &self.gray[h], &self.gray[h + 1]].map(Clone::clone);
                    let piece = match crate::word::hetero_profile(&x, &y, &z)?.heterogeneous_count() {
                        1 => {
                            self.histogram.case1 += 1;
                            synth_case1(&x, &y, &z)?
                        }
                        2 => {
                            self.histogram.case2 += 1;
                            synth_case2(&x, &y, &z)?
                        }
                        k => return Err(Error::Internal(format!("Gray triple with {k} heterogeneous columns"))),
                    };
                    out.append(&piece)?;
                }
                Ok(out)
            }
        }
    }

    fn even(&mut self, p: &Permutation) -> Result<(Circuit, usize)> {
        let cycles = three_cycle_factorization(p)?;
        let mut out = Circuit::new(self.width)?;
        for c in &cycles {
            let [u, s, t] = [0, 1, 2].map(|k| {
                index_to_word(
                    WordIndex::new(c.symbols()[k], self.width).expect("in range"),
                    self.width,
                )
                .expect("in range")
            });
            out.append(&self.three_cycle(&u, &s, &t)?)?;
        }
        Ok((out, cycles.len()))
    }
}

/// Circuit for the 3-cycle `(u s t)`, dispatching on the number of
/// heterogeneous columns.
pub fn synth_three_cycle(u: &TernaryWord, s: &TernaryWord, t: &TernaryWord) -> Result<Circuit> {
    check_triple(u, s, t)?;
    Synthesizer::new(u.width())?.three_cycle(u, s, t)
}

/// Synthesizes `p` on `n` lines over Swap, Not and Toffoli gates.
pub fn synthesize(p: &Permutation, n: usize) -> Result<SynthesisReport> {
    synthesize_with(p, n, GateSet::Snt)
}

/// Synthesizes `p` on `n` lines over `gate_set`. The returned circuit has
/// been checked against `p` on every input.
///
/// Swap-free circuits are the Swap, Not, Toffoli result with every Swap
/// lowered. On a single line, where no Swap exists, the Swap-free set is
/// still complete: `M 1` supplies the odd part and `N 1` the 3-cycles.
pub fn synthesize_with(p: &Permutation, n: usize, gate_set: GateSet) -> Result<SynthesisReport> {
    let m = symbol_count(n)?;
    if p.len() != m {
        return Err(Error::SizeMismatch {
            left: m,
            right: p.len(),
        });
    }
    let (circuit, three_cycle_count, case_histogram) = match (gate_set, n) {
        (GateSet::Ncmt, 1) => {
            let mut c = Circuit::new(1)?;
            let mut rest = p.clone();
            if p.parity() == Parity::Odd {
                c.push(Gate::mul_two(1))?;
                rest = Gate::mul_two(1).to_permutation(1)?.then(p)?;
            }
            let cycles = three_cycle_factorization(&rest)?;
            for cycle in &cycles {
                // N 1 is (1 2 3) on a single line
                let times = if cycle.symbols() == [1, 2, 3] { 1 } else { 2 };
                c.extend(std::iter::repeat_n(Gate::not(1), times))?;
            }
            (c, cycles.len(), CaseHistogram::default())
        }
        (_, 1) => return Err(Error::UnsupportedWidth(1)),
        _ => {
            let mut synth = Synthesizer::new(n)?;
            let (mut circuit, count) = if p.parity() == Parity::Even {
                synth.even(p)?
            } else {
                let swap = Gate::swap(1, 2);
                let rest = swap.to_permutation(n)?.then(p)?;
                let mut c = Circuit::from_gates(n, vec![swap])?;
                let (tail, count) = synth.even(&rest)?;
                c.append(&tail)?;
                (c, count)
            };
            if gate_set == GateSet::Ncmt {
                circuit = lower_to_ncmt(&circuit);
            }
            (circuit, count, synth.histogram)
        }
    };

    match verify(&circuit, p)? {
        Verdict::Equal => {}
        mismatch => {
            return Err(Error::Internal(format!(
                "synthesized circuit failed verification: {mismatch}"
            )))
        }
    }
    Ok(SynthesisReport {
        target: p.clone(),
        gate_set,
        gate_counts: circuit.gate_counts(),
        circuit,
        three_cycle_count,
        case_histogram,
    })
}
