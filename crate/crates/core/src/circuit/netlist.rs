//! Line-oriented netlist format.
//!
//! ```text
//! # comment
//! input a=1
//! input b          # value may come from an assignment file
//! g1 = AND a b
//! g2 = OR g1 b
//! output g2
//! ```
//!
//! `BUF x` (identity) is accepted so synchronized circuits print and parse
//! back. Assignment files hold one `name=0|1` per line.

use std::fmt::Write;

use thiserror::Error;

use super::{validate, Assignment, Circuit, CircuitError, GateKind, GateSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NetlistError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> NetlistError {
    NetlistError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Tok<'a> {
    text: &'a str,
    col: usize,
}

fn tokenize(line: &str, lineno: usize) -> Result<Vec<Tok<'_>>, NetlistError> {
    let body = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    let mut toks = Vec::new();
    let mut chars = body.char_indices().peekable();
    while let Some(&(i, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
        } else if ch == '=' {
            toks.push(Tok {
                text: &body[i..i + 1],
                col: i + 1,
            });
            chars.next();
        } else if ch.is_ascii_alphanumeric() || ch == '_' {
            let mut end = i;
            while let Some(&(j, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    end = j + c.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            toks.push(Tok {
                text: &body[i..end],
                col: i + 1,
            });
        } else {
            return Err(syntax(lineno, i + 1, format!("unexpected character `{ch}`")));
        }
    }
    Ok(toks)
}

const RESERVED: [&str; 5] = ["input", "output", "and", "or", "buf"];

fn name(tok: Tok<'_>, lineno: usize) -> Result<String, NetlistError> {
    let first = tok.text.chars().next().unwrap();
    if !(first.is_ascii_alphabetic() || first == '_') {
        return Err(syntax(lineno, tok.col, format!("`{}` is not an identifier", tok.text)));
    }
    if RESERVED.contains(&tok.text.to_ascii_lowercase().as_str()) {
        return Err(syntax(lineno, tok.col, format!("`{}` is a reserved word", tok.text)));
    }
    Ok(tok.text.to_string())
}

fn bit(tok: Tok<'_>, lineno: usize) -> Result<bool, NetlistError> {
    match tok.text {
        "0" => Ok(false),
        "1" => Ok(true),
        other => Err(syntax(lineno, tok.col, format!("expected 0 or 1, found `{other}`"))),
    }
}

fn end_col(line: &str) -> usize {
    line.find('#').unwrap_or(line.len()) + 1
}

/// Parses a netlist into a structurally valid circuit (names resolved,
/// arities right, acyclic) and its inline input values. Synchronicity and
/// fan-out are not checked here; see [`parse_circuit`].
pub fn parse_netlist(text: &str) -> Result<(Circuit, Assignment), NetlistError> {
    let mut specs = Vec::new();
    let mut inline: Vec<(String, bool)> = Vec::new();
    let mut output: Option<(String, usize)> = None;
    for (idx, line) in text.lines().enumerate() {
        let ln = idx + 1;
        let toks = tokenize(line, ln)?;
        let Some(&head) = toks.first() else { continue };
        match head.text.to_ascii_lowercase().as_str() {
            "input" => {
                let n = toks
                    .get(1)
                    .ok_or_else(|| syntax(ln, end_col(line), "expected input name"))?;
                let nm = name(*n, ln)?;
                match toks.len() {
                    2 => {}
                    4 if toks[2].text == "=" => inline.push((nm.clone(), bit(toks[3], ln)?)),
                    _ => {
                        let t = toks[2];
                        return Err(syntax(ln, t.col, format!("unexpected `{}` after input name", t.text)));
                    }
                }
                specs.push(GateSpec {
                    name: nm,
                    kind: GateKind::Input,
                    operands: Vec::new(),
                });
            }
            "output" => {
                let n = toks
                    .get(1)
                    .ok_or_else(|| syntax(ln, end_col(line), "expected output name"))?;
                if let Some(t) = toks.get(2) {
                    return Err(syntax(ln, t.col, format!("unexpected `{}`", t.text)));
                }
                if output.is_some() {
                    return Err(syntax(
                        ln,
                        head.col,
                        "second `output` statement; exactly one is allowed",
                    ));
                }
                output = Some((name(*n, ln)?, ln));
            }
            _ => {
                let nm = name(head, ln)?;
                match toks.get(1) {
                    Some(t) if t.text == "=" => {}
                    Some(t) => return Err(syntax(ln, t.col, format!("expected `=`, found `{}`", t.text))),
                    None => return Err(syntax(ln, end_col(line), "expected `=`")),
                }
                let op = toks
                    .get(2)
                    .ok_or_else(|| syntax(ln, end_col(line), "expected AND, OR or BUF"))?;
                let kind = match op.text.to_ascii_uppercase().as_str() {
                    "AND" => GateKind::And,
                    "OR" => GateKind::Or,
                    "BUF" => GateKind::Buffer,
                    _ => return Err(syntax(ln, op.col, format!("unknown gate kind `{}`", op.text))),
                };
                let operands = &toks[3..];
                if operands.len() != kind.arity() {
                    let col = operands.get(kind.arity()).map_or(end_col(line), |t| t.col);
                    return Err(syntax(
                        ln,
                        col,
                        format!(
                            "{} takes {} operand(s), got {}",
                            kind.keyword(),
                            kind.arity(),
                            operands.len()
                        ),
                    ));
                }
                let operands = operands.iter().map(|&t| name(t, ln)).collect::<Result<_, _>>()?;
                specs.push(GateSpec {
                    name: nm,
                    kind,
                    operands,
                });
            }
        }
    }
    let (out, _) = output.ok_or_else(|| syntax(text.lines().count() + 1, 1, "missing `output` statement"))?;
    let circuit = Circuit::from_specs(specs, &out)?;
    let mut a = Assignment::new();
    for (n, v) in inline {
        a.set(circuit.find(&n).expect("declared input"), v);
    }
    Ok((circuit, a))
}

/// Parses a netlist and rejects circuits that fail [`validate`]
/// (fan-out above two, skip-level wires, output with consumers).
pub fn parse_circuit(text: &str) -> Result<(Circuit, Assignment), NetlistError> {
    let (c, a) = parse_netlist(text)?;
    let report = validate(&c);
    if !report.all() {
        return Err(CircuitError::Invalid(report.problems.join("; ")).into());
    }
    Ok((c, a))
}

/// Applies a `name=0|1` assignment file on top of `base`.
pub fn parse_assignment(text: &str, c: &Circuit, base: &Assignment) -> Result<Assignment, NetlistError> {
    let mut a = base.clone();
    for (idx, line) in text.lines().enumerate() {
        let ln = idx + 1;
        let toks = tokenize(line, ln)?;
        if toks.is_empty() {
            continue;
        }
        if toks.len() != 3 || toks[1].text != "=" {
            return Err(syntax(ln, toks[0].col, "expected `name=0|1`"));
        }
        let nm = name(toks[0], ln)?;
        let g = c
            .find(&nm)
            .ok_or_else(|| syntax(ln, toks[0].col, format!("unknown gate `{nm}`")))?;
        if c.gate(g).kind != GateKind::Input {
            return Err(syntax(ln, toks[0].col, format!("`{nm}` is not an input")));
        }
        a.set(g, bit(toks[2], ln)?);
    }
    Ok(a)
}

/// Canonical netlist text: gates in id order, assigned inputs with values.
pub fn print_netlist(c: &Circuit, a: Option<&Assignment>) -> String {
    let mut s = String::new();
    for (id, g) in c.ids().zip(c.gates()) {
        match g.kind {
            GateKind::Input => match a.and_then(|a| a.get(id)) {
                Some(v) => writeln!(s, "input {}={}", g.name, u8::from(v)).unwrap(),
                None => writeln!(s, "input {}", g.name).unwrap(),
            },
            kind => {
                write!(s, "{} = {}", g.name, kind.keyword()).unwrap();
                for p in &g.preds {
                    write!(s, " {}", c.gate(*p).name).unwrap();
                }
                s.push('\n');
            }
        }
    }
    writeln!(s, "output {}", c.gate(c.output()).name).unwrap();
    s
}
