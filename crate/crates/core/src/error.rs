// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("trit value {0} is not in {{0,1,2}}")]
    InvalidTrit(u8),
    #[error("width must be at least 1")]
    ZeroWidth,
    #[error("width {0} is too large")]
    WidthTooLarge(usize),
    #[error("index {index} is outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("width mismatch: expected {expected}, found {found}")]
    WidthMismatch { expected: usize, found: usize },
    #[error("size mismatch: {left} symbols vs {right} symbols")]
    SizeMismatch { left: usize, right: usize },
    #[error("not a bijection on 1..={0}")]
    NotABijection(usize),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("words u, s, t must be pairwise distinct")]
    InvalidTriple,
    #[error("permutation is odd; expected an even permutation")]
    OddPermutation,
    #[error("gate {gate} is not valid on width {width}")]
    InvalidGate { gate: String, width: usize },
    #[error("case dispatch: {0}")]
    CaseDispatch(String),
    #[error("width {0} is not supported by this gate set")]
    UnsupportedWidth(usize),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
