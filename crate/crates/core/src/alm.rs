//! The `.alm` text format.
//!
//! ```text
//! # comments run to end of line
//! algebra chain4
//! elements: 0 a b c
//! zero: 0            # optional, defaults to the first label
//! plus:
//! 0 a b c
//! ...
//! star:
//! ...
//! order:             # or `join:` and `meet:` tables
//! 0 <= a <= b <= c
//! ```
//!
//! Row `i` of a table lists `xᵢ op x₀ … xᵢ op xₙ₋₁`. An `order:` section lists
//! `x <= y` steps (chains `x <= y <= z` allowed); the reflexive-transitive
//! closure is taken and join/meet computed from it.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::algebra::{Elem, FiniteAlgebra, Op, Table};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Section {
    Table(Op),
    Order,
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token { text: &line[s..i], column: line[..s].chars().count() + 1 });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token { text: &line[s..], column: line[..s].chars().count() + 1 });
    }
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

fn valid_label(l: &str) -> bool {
    !l.is_empty() && !l.contains(':') && !l.contains('#') && l != "<="
}

/// Parses an `.alm` document.
pub fn parse_algebra(text: &str) -> Result<FiniteAlgebra> {
    let mut name: Option<String> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut index: HashMap<String, Elem> = HashMap::new();
    let mut zero_label: Option<(String, usize, usize)> = None;
    let mut tables: HashMap<Op, Vec<Vec<Elem>>> = HashMap::new();
    let mut order_pairs: Option<Vec<(Elem, Elem)>> = None;
    let mut current: Option<(Section, usize)> = None;

    let close = |current: &Option<(Section, usize)>, tables: &HashMap<Op, Vec<Vec<Elem>>>, n: usize| {
        if let Some((Section::Table(op), header_line)) = *current {
            let found = tables.get(&op).map_or(0, Vec::len);
            if found != n {
                return Err(Error::RaggedTable {
                    line: header_line,
                    table: op.keyword().into(),
                    expected: n,
                    found,
                });
            }
        }
        Ok(())
    };

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        if toks.is_empty() {
            continue;
        }
        let first = toks[0].text;

        if name.is_none() {
            if first != "algebra" {
                return Err(syntax(lineno, toks[0].column, "expected `algebra <name>`"));
            }
            if toks.len() < 2 {
                return Err(syntax(lineno, toks[0].column + first.len(), "missing algebra name"));
            }
            name = Some(content.trim()["algebra".len()..].trim().to_string());
            continue;
        }

        if first == "elements:" {
            if labels.is_some() {
                return Err(syntax(lineno, toks[0].column, "duplicate `elements:` line"));
            }
            let mut ls = Vec::new();
            for t in &toks[1..] {
                if !valid_label(t.text) {
                    return Err(syntax(lineno, t.column, format!("invalid element label `{}`", t.text)));
                }
                if index.insert(t.text.to_string(), ls.len()).is_some() {
                    return Err(syntax(lineno, t.column, format!("duplicate element label `{}`", t.text)));
                }
                ls.push(t.text.to_string());
            }
            if ls.is_empty() {
                return Err(syntax(lineno, toks[0].column, "no elements listed"));
            }
            labels = Some(ls);
            continue;
        }

        let n = match &labels {
            Some(ls) => ls.len(),
            None => return Err(syntax(lineno, toks[0].column, "expected `elements:` line")),
        };

        if first == "zero:" {
            if toks.len() != 2 {
                return Err(syntax(lineno, toks[0].column, "expected `zero: <label>`"));
            }
            zero_label = Some((toks[1].text.to_string(), lineno, toks[1].column));
            continue;
        }

        let header = match first {
            "plus:" => Some(Section::Table(Op::Plus)),
            "star:" => Some(Section::Table(Op::Star)),
            "join:" => Some(Section::Table(Op::Join)),
            "meet:" => Some(Section::Table(Op::Meet)),
            "order:" => Some(Section::Order),
            _ => None,
        };
        if let Some(section) = header {
            if toks.len() > 1 {
                return Err(syntax(lineno, toks[1].column, "section header must stand alone"));
            }
            close(&current, &tables, n)?;
            let dup = match section {
                Section::Table(op) => tables.insert(op, Vec::new()).is_some(),
                Section::Order => order_pairs.replace(Vec::new()).is_some(),
            };
            if dup {
                return Err(syntax(lineno, toks[0].column, format!("duplicate section `{first}`")));
            }
            current = Some((section, lineno));
            continue;
        }

        let lookup = |t: &Token<'_>| -> Result<Elem> {
            index.get(t.text).copied().ok_or_else(|| Error::UnknownLabel {
                line: lineno,
                column: t.column,
                label: t.text.to_string(),
            })
        };

        match current {
            None => {
                return Err(syntax(lineno, toks[0].column, format!("unexpected `{first}` outside a section")))
            }
            Some((Section::Table(op), _)) => {
                let rows = tables.get_mut(&op).expect("section opened");
                if rows.len() == n {
                    return Err(Error::RaggedTable {
                        line: lineno,
                        table: op.keyword().into(),
                        expected: n,
                        found: n + 1,
                    });
                }
                if toks.len() != n {
                    return Err(Error::RaggedTable {
                        line: lineno,
                        table: op.keyword().into(),
                        expected: n,
                        found: toks.len(),
                    });
                }
                let row = toks.iter().map(lookup).collect::<Result<Vec<_>>>()?;
                rows.push(row);
            }
            Some((Section::Order, _)) => {
                if toks.len() < 3 || toks.len().is_multiple_of(2) {
                    return Err(syntax(lineno, toks[0].column, "expected `x <= y`"));
                }
                let pairs = order_pairs.as_mut().expect("section opened");
                for w in toks.chunks(2).collect::<Vec<_>>().windows(2) {
                    let (lo, op, hi) = (&w[0][0], &w[0][1], &w[1][0]);
                    if op.text != "<=" {
                        return Err(syntax(lineno, op.column, "expected `<=`"));
                    }
                    pairs.push((lookup(lo)?, lookup(hi)?));
                }
            }
        }
    }

    let name = name.ok_or_else(|| syntax(1, 1, "empty document"))?;
    let labels = labels.ok_or_else(|| syntax(1, 1, "missing `elements:` line"))?;
    let n = labels.len();
    close(&current, &tables, n)?;

    let zero = match zero_label {
        None => 0,
        Some((l, line, column)) => *index
            .get(&l)
            .ok_or(Error::UnknownLabel { line, column, label: l.clone() })?,
    };

    let mut take = |op: Op| tables.remove(&op).map(Table::from_rows).transpose();
    let plus = take(Op::Plus)?.ok_or_else(|| syntax(1, 1, "missing `plus:` table"))?;
    let star = take(Op::Star)?.ok_or_else(|| syntax(1, 1, "missing `star:` table"))?;
    let join = take(Op::Join)?;
    let meet = take(Op::Meet)?;

    match (join, meet, order_pairs) {
        (Some(join), Some(meet), None) => FiniteAlgebra::new(name, labels, zero, plus, star, join, meet),
        (None, None, Some(pairs)) => {
            let mut order = vec![false; n * n];
            for (a, b) in pairs {
                order[a * n + b] = true;
            }
            FiniteAlgebra::from_order(name, labels, zero, plus, star, &order)
        }
        (Some(_), Some(_), Some(_)) => Err(syntax(1, 1, "give either `order:` or `join:`/`meet:`, not both")),
        _ => Err(syntax(1, 1, "need both `join:` and `meet:` tables, or an `order:` section")),
    }
}

/// Serializes with explicit join and meet tables.
pub fn to_alm(alg: &FiniteAlgebra) -> String {
    let width = alg.names().iter().map(|l| l.chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    let _ = writeln!(out, "algebra {}", alg.name());
    let _ = writeln!(out, "elements: {}", alg.names().join(" "));
    if alg.zero() != 0 {
        let _ = writeln!(out, "zero: {}", alg.label(alg.zero()));
    }
    for op in Op::ALL {
        let _ = writeln!(out, "{}:", op.keyword());
        for row in alg.table(op).rows() {
            let cells: Vec<String> = row
                .iter()
                .map(|&x| format!("{:<width$}", alg.label(x)))
                .collect();
            let _ = writeln!(out, "{}", cells.join(" ").trim_end());
        }
    }
    out
}
