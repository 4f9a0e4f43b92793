// SPDX-License-Identifier: Apache-2.0

//! Function specification files. After the `width n` header the mapping is
//! given in exactly one of three forms:
//!
//! ```text
//! width 2
//! 00 00          # truth table: input word, output word
//! 10 10
//! ...
//! ```
//!
//! ```text
//! width 2
//! perm: 1 2 3 5 6 4 7 8 9
//! ```
//!
//! ```text
//! width 2
//! cycles: (4 5 6)(1 2)
//! ```
//!
//! Cycles compose left to right; `cycles:` with nothing after it is the
//! identity.

use trisynth::{symbol_count, Cycle, Permutation, TernaryWord};

use crate::error::CliError;
use crate::netlist::{content_lines, parse_width_header};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecFile {
    pub width: usize,
    pub permutation: Permutation,
}

pub fn parse_spec(text: &str) -> Result<SpecFile, CliError> {
    let mut lines = content_lines(text).peekable();
    let (first, header) = lines
        .next()
        .ok_or_else(|| CliError::parse(1, "missing `width n` header"))?;
    let width = parse_width_header(first, header)?;
    let m = symbol_count(width)?;

    let Some(&(line, body)) = lines.peek() else {
        return Err(CliError::parse(first, "no mapping after header"));
    };
    let permutation = if let Some(rest) = body.strip_prefix("perm:") {
        lines.next();
        let images = rest
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| CliError::parse(line, format!("bad index `{t}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if images.len() != m {
            return Err(CliError::parse(
                line,
                format!("expected {m} images, found {}", images.len()),
            ));
        }
        Permutation::from_one_line(images).map_err(|e| CliError::parse(line, e.to_string()))?
    } else if let Some(rest) = body.strip_prefix("cycles:") {
        lines.next();
        let cycles = parse_cycles(line, rest)?;
        Permutation::from_cycles(m, &cycles).map_err(|e| CliError::parse(line, e.to_string()))?
    } else {
        parse_truth_table(width, &mut lines)?
    };
    if let Some((line, body)) = lines.next() {
        return Err(CliError::parse(line, format!("unexpected `{body}` after mapping")));
    }
    Ok(SpecFile { width, permutation })
}

/// `(a b c)(d e)`; `()` and an empty list mean the identity.
pub fn parse_cycles(line: usize, text: &str) -> Result<Vec<Cycle>, CliError> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| CliError::parse(line, format!("malformed cycle list near `{rest}`")))?;
        let (body, tail) = inner;
        let symbols = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| CliError::parse(line, format!("bad symbol `{t}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        match symbols.len() {
            0 | 1 => {}
            _ => cycles.push(Cycle::new(symbols).map_err(|e| CliError::parse(line, e.to_string()))?),
        }
        rest = tail.trim_start();
    }
    Ok(cycles)
}

fn parse_truth_table<'a>(
    width: usize,
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Result<Permutation, CliError> {
    let m = symbol_count(width)?;
    let mut images = vec![0usize; m];
    let mut last_line = 0;
    for (line, body) in lines {
        last_line = line;
        let words: Vec<&str> = body.split_whitespace().collect();
        let [input, output] = words[..] else {
            return Err(CliError::parse(
                line,
                format!("expected `input output`, found `{body}`"),
            ));
        };
        let word = |s: &str| -> Result<TernaryWord, CliError> {
            let w: TernaryWord = s
                .parse()
                .map_err(|e: trisynth::Error| CliError::parse(line, e.to_string()))?;
            if w.width() != width {
                return Err(CliError::parse(line, format!("word `{s}` does not have width {width}")));
            }
            Ok(w)
        };
        let (input, output) = (word(input)?, word(output)?);
        let slot = &mut images[input.index().get() - 1];
        if *slot != 0 {
            return Err(CliError::parse(line, format!("input {input} listed twice")));
        }
        *slot = output.index().get();
    }
    if let Some(missing) = images.iter().position(|&v| v == 0) {
        let w = trisynth::index_to_word(trisynth::WordIndex::new(missing + 1, width)?, width)?;
        return Err(CliError::parse(
            last_line,
            format!("input {w} is missing from the truth table"),
        ));
    }
    Permutation::from_one_line(images)
        .map_err(|_| CliError::parse(last_line, "outputs of the truth table are not a bijection"))
}
