// SPDX-License-Identifier: Apache-2.0

//! The five primitive ternary gates.
//!
//! Lines are 1-based. `Not`, `Toffoli` and `CNot` add 1 modulo 3 to their
//! target; `MulTwo` multiplies by 2 modulo 3, which exchanges 1 and 2.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::{offset_to_trits, symbol_count, trits_to_offset, TernaryWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate {
    /// Exchanges lines `i` and `j`, `i < j`.
    Swap {
        i: usize,
        j: usize,
    },
    Not {
        line: usize,
    },
    /// Increments line 1 when every other line holds 1.
    Toffoli,
    /// Increments `target` when `control` holds 1.
    CNot {
        target: usize,
        control: usize,
    },
    MulTwo {
        line: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    Swap,
    Not,
    Toffoli,
    CNot,
    MulTwo,
}

impl GateKind {
    pub const ALL: [GateKind; 5] = [
        GateKind::Swap,
        GateKind::Not,
        GateKind::Toffoli,
        GateKind::CNot,
        GateKind::MulTwo,
    ];

    /// Netlist mnemonic.
    pub fn letter(self) -> char {
        match self {
            GateKind::Swap => 'E',
            GateKind::Not => 'N',
            GateKind::Toffoli => 'T',
            GateKind::CNot => 'C',
            GateKind::MulTwo => 'M',
        }
    }
}

impl Gate {
    /// `Swap` with its lines put in ascending order.
    pub fn swap(a: usize, b: usize) -> Gate {
        Gate::Swap {
            i: a.min(b),
            j: a.max(b),
        }
    }

    pub fn not(line: usize) -> Gate {
        Gate::Not { line }
    }

    pub fn cnot(target: usize, control: usize) -> Gate {
        Gate::CNot { target, control }
    }

    pub fn mul_two(line: usize) -> Gate {
        Gate::MulTwo { line }
    }

    pub fn kind(&self) -> GateKind {
        match self {
            Gate::Swap { .. } => GateKind::Swap,
            Gate::Not { .. } => GateKind::Not,
            Gate::Toffoli => GateKind::Toffoli,
            Gate::CNot { .. } => GateKind::CNot,
            Gate::MulTwo { .. } => GateKind::MulTwo,
        }
    }

    /// Order of the gate as a group element.
    pub fn order(&self) -> u8 {
        match self {
            Gate::Swap { .. } | Gate::MulTwo { .. } => 2,
            Gate::Not { .. } | Gate::Toffoli | Gate::CNot { .. } => 3,
        }
    }

    pub fn validate(&self, width: usize) -> Result<()> {
        let in_range = |l: usize| (1..=width).contains(&l);
        let ok = match *self {
            Gate::Swap { i, j } => i < j && in_range(i) && in_range(j),
            Gate::Not { line } | Gate::MulTwo { line } => in_range(line),
            Gate::Toffoli => width >= 1,
            Gate::CNot { target, control } => target != control && in_range(target) && in_range(control),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidGate {
                gate: self.to_string(),
                width,
            })
        }
    }

    /// In-place action on a trit slice. The gate must be valid for its width.
    pub(crate) fn act(&self, w: &mut [u8]) {
        match *self {
            Gate::Swap { i, j } => w.swap(i - 1, j - 1),
            Gate::Not { line } => w[line - 1] = (w[line - 1] + 1) % 3,
            Gate::Toffoli => {
                if w[1..].iter().all(|&b| b == 1) {
                    w[0] = (w[0] + 1) % 3;
                }
            }
            Gate::CNot { target, control } => {
                if w[control - 1] == 1 {
                    w[target - 1] = (w[target - 1] + 1) % 3;
                }
            }
            Gate::MulTwo { line } => w[line - 1] = (w[line - 1] * 2) % 3,
        }
    }

    pub fn apply(&self, w: &TernaryWord) -> Result<TernaryWord> {
        self.validate(w.width())?;
        let mut out = w.clone();
        self.act(out.trits_mut());
        Ok(out)
    }

    /// Base gates whose left-to-right product is this gate's inverse.
    pub fn expand_inverse(&self) -> Vec<Gate> {
        vec![*self; (self.order() - 1) as usize]
    }

    pub fn to_permutation(&self, n: usize) -> Result<Permutation> {
        self.validate(n)?;
        let m = symbol_count(n)?;
        let image = (0..m)
            .map(|k| {
                let mut w = offset_to_trits(k, n);
                self.act(&mut w);
                trits_to_offset(&w)
            })
            .collect();
        Ok(Permutation::from_zero_based_unchecked(image))
    }
}

impl fmt::Display for Gate {
    /// Netlist form: `E i j`, `N j`, `T`, `C j i` (target first), `M i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gate::Swap { i, j } => write!(f, "E {i} {j}"),
            Gate::Not { line } => write!(f, "N {line}"),
            Gate::Toffoli => f.write_str("T"),
            Gate::CNot { target, control } => write!(f, "C {target} {control}"),
            Gate::MulTwo { line } => write!(f, "M {line}"),
        }
    }
}

pub fn apply_gate(g: &Gate, w: &TernaryWord) -> Result<TernaryWord> {
    g.apply(w)
}

pub fn gate_to_permutation(g: &Gate, n: usize) -> Result<Permutation> {
    g.to_permutation(n)
}

/// Target gate family of a circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateSet {
    /// Swap, Not, Toffoli.
    Snt,
    /// Not, Controlled-Not, Multiply-Two, Toffoli.
    Ncmt,
}

impl GateSet {
    pub fn admits(self, g: &Gate) -> bool {
        match self {
            GateSet::Snt => !matches!(g, Gate::CNot { .. } | Gate::MulTwo { .. }),
            GateSet::Ncmt => !matches!(g, Gate::Swap { .. }),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GateSet::Snt => "snt",
            GateSet::Ncmt => "ncmt",
        }
    }
}

impl fmt::Display for GateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
