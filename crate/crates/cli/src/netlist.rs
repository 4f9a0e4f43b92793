// SPDX-License-Identifier: Apache-2.0

//! Netlist files.
//!
//! ```text
//! width 3
//! E 1 2   # swap lines 1 and 2
//! N 2
//! T
//! C 2 1   # target first, then control
//! M 1
//! ```

use trisynth::{Circuit, Gate};

use crate::error::CliError;

/// Splits `text` into `(line number, content)` with comments and blank
/// lines removed.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

pub(crate) fn parse_width_header(line: usize, body: &str) -> Result<usize, CliError> {
    let mut tokens = body.split_whitespace();
    match (tokens.next(), tokens.next(), tokens.next()) {
        (Some("width"), Some(n), None) => {
            let n: usize = n
                .parse()
                .map_err(|_| CliError::parse(line, format!("bad width `{n}`")))?;
            trisynth::symbol_count(n).map_err(|e| CliError::parse(line, e.to_string()))?;
            Ok(n)
        }
        _ => Err(CliError::parse(line, "expected header `width n`")),
    }
}

fn parse_line_number(line: usize, token: &str) -> Result<usize, CliError> {
    token
        .parse()
        .map_err(|_| CliError::parse(line, format!("bad line index `{token}`")))
}

pub fn parse_gate(line: usize, body: &str) -> Result<Gate, CliError> {
    let tokens: Vec<&str> = body.split_whitespace().collect();
    let num = |k: usize| parse_line_number(line, tokens[k]);
    let gate = match (tokens[0], tokens.len()) {
        ("E", 3) => {
            let (i, j) = (num(1)?, num(2)?);
            if i == j {
                return Err(CliError::parse(line, "swap lines must differ"));
            }
            Gate::swap(i, j)
        }
        ("N", 2) => Gate::not(num(1)?),
        ("T", 1) => Gate::Toffoli,
        ("C", 3) => Gate::cnot(num(1)?, num(2)?),
        ("M", 2) => Gate::mul_two(num(1)?),
        _ => return Err(CliError::parse(line, format!("unrecognized gate `{body}`"))),
    };
    Ok(gate)
}

pub fn parse_netlist(text: &str) -> Result<Circuit, CliError> {
    let mut lines = content_lines(text);
    let (first, header) = lines
        .next()
        .ok_or_else(|| CliError::parse(1, "missing `width n` header"))?;
    let width = parse_width_header(first, header)?;
    let mut circuit = Circuit::new(width)?;
    for (line, body) in lines {
        let gate = parse_gate(line, body)?;
        circuit.push(gate).map_err(|e| CliError::parse(line, e.to_string()))?;
    }
    Ok(circuit)
}

pub fn emit_netlist(c: &Circuit) -> String {
    c.to_string()
}
