// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gate::{Gate, GateKind, GateSet};
use crate::perm::{Parity, Permutation};
use crate::word::{offset_to_trits, symbol_count, trits_to_offset, TernaryWord};

/// An ordered gate cascade on `width` lines. The first gate applies first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    width: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(width: usize) -> Result<Self> {
        symbol_count(width)?;
        Ok(Self {
            width,
            gates: Vec::new(),
        })
    }

    pub fn from_gates(width: usize, gates: Vec<Gate>) -> Result<Self> {
        let mut c = Self::new(width)?;
        c.extend(gates)?;
        Ok(c)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.width)?;
        self.gates.push(gate);
        Ok(())
    }

    pub fn extend<I: IntoIterator<Item = Gate>>(&mut self, gates: I) -> Result<()> {
        for g in gates {
            self.push(g)?;
        }
        Ok(())
    }

    /// Appends `other`, which must have the same width.
    pub fn append(&mut self, other: &Circuit) -> Result<()> {
        if other.width != self.width {
            return Err(Error::WidthMismatch {
                expected: self.width,
                found: other.width,
            });
        }
        self.gates.extend_from_slice(&other.gates);
        Ok(())
    }

    pub fn conforms_to(&self, set: GateSet) -> bool {
        self.gates.iter().all(|g| set.admits(g))
    }

    pub fn gate_counts(&self) -> GateCounts {
        let mut counts = GateCounts::default();
        for g in &self.gates {
            *counts.0.entry(g.kind()).or_default() += 1;
        }
        counts
    }

    pub fn simulate(&self, w: &TernaryWord) -> Result<TernaryWord> {
        if w.width() != self.width {
            return Err(Error::WidthMismatch {
                expected: self.width,
                found: w.width(),
            });
        }
        let mut out = w.clone();
        self.run(out.trits_mut());
        Ok(out)
    }

    pub(crate) fn run(&self, trits: &mut [u8]) {
        for g in &self.gates {
            g.act(trits);
        }
    }

    /// The permutation of `1..=3^n` this circuit denotes.
    pub fn to_permutation(&self) -> Permutation {
        let m = 3usize.pow(self.width as u32);
        let image = (0..m)
            .map(|k| {
                let mut w = offset_to_trits(k, self.width);
                self.run(&mut w);
                trits_to_offset(&w)
            })
            .collect();
        Permutation::from_zero_based_unchecked(image)
    }

    /// Merges runs of equal adjacent gates modulo their order, so `N 1` three
    /// times disappears and `E 1 2` twice disappears. Cancellation cascades:
    /// `M 1, N 2, N 2, N 2, M 1` becomes empty.
    pub fn cancel_adjacent_inverses(&self) -> Circuit {
        let mut stack: Vec<(Gate, u8)> = Vec::with_capacity(self.gates.len());
        for &g in &self.gates {
            match stack.last_mut() {
                Some((top, count)) if *top == g => {
                    *count += 1;
                    if *count == g.order() {
                        stack.pop();
                    }
                }
                _ => stack.push((g, 1)),
            }
        }
        let gates = stack
            .into_iter()
            .flat_map(|(g, k)| std::iter::repeat_n(g, k as usize))
            .collect();
        Circuit {
            width: self.width,
            gates,
        }
    }
}

impl fmt::Display for Circuit {
    /// Netlist form: `width n` followed by one gate per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "width {}", self.width)?;
        for g in &self.gates {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

pub fn simulate(c: &Circuit, w: &TernaryWord) -> Result<TernaryWord> {
    c.simulate(w)
}

pub fn circuit_to_permutation(c: &Circuit) -> Permutation {
    c.to_permutation()
}

/// Parity of the denoted permutation.
pub fn circuit_parity(c: &Circuit) -> Parity {
    c.to_permutation().parity()
}

/// Per-kind gate tallies.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GateCounts(BTreeMap<GateKind, usize>);

impl GateCounts {
    pub fn get(&self, kind: GateKind) -> usize {
        self.0.get(&kind).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }
}

impl fmt::Display for GateCounts {
    /// `E:2 N:5 T:1 C:0 M:0`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, kind) in GateKind::ALL.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}:{}", kind.letter(), self.get(*kind))?;
        }
        Ok(())
    }
}
