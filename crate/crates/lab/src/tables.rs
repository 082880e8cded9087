//! Table files:
//!
//! ```text
//! CIRING-TABLE v1
//! order: n
//! add:
//! <n rows of n indices>
//! mul:
//! <n rows of n indices>
//! zero: i
//! one: j
//! ```

use std::fmt::Write as _;

use crate::error::{LabError, Result};
use crate::ring::{FiniteRing, Verification};

pub const TABLE_HEADER: &str = "CIRING-TABLE v1";

pub fn write_tables(ring: &FiniteRing) -> String {
    let n = ring.order();
    let mut s = format!("{TABLE_HEADER}\norder: {n}\n");
    for (name, table) in [("add", ring.add_table()), ("mul", ring.mul_table())] {
        writeln!(s, "{name}:").unwrap();
        for row in table.chunks(n) {
            let row: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(s, "{}", row.join(" ")).unwrap();
        }
    }
    writeln!(s, "zero: {}\none: {}", ring.zero(), ring.one()).unwrap();
    s
}

/// Parses and fully verifies a table file; `cap` bounds the order.
pub fn parse_tables(text: &str, label: &str, cap: usize) -> Result<FiniteRing> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let mut last = 0;
    let mut next = |what: &str| -> Result<(usize, &str)> {
        match lines.next() {
            Some((n, l)) => {
                last = n;
                Ok((n, l))
            }
            None => Err(LabError::Format {
                line: last + 1,
                msg: format!("missing {what}"),
            }),
        }
    };
    let err = |line, msg: String| LabError::Format { line, msg };
    let (n, l) = next("header")?;
    if l != TABLE_HEADER {
        return Err(err(n, format!("expected header {TABLE_HEADER:?}")));
    }
    let field = |(n, l): (usize, &str), key: &str| -> Result<usize> {
        l.strip_prefix(key)
            .and_then(|r| r.strip_prefix(':'))
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| err(n, format!("expected `{key}: <natural>`")))
    };
    let order = field(next("order")?, "order")?;
    if order > cap {
        return Err(LabError::CapExceeded {
            order: order.to_string(),
            cap,
        });
    }
    let mut tables = Vec::new();
    for key in ["add", "mul"] {
        let (n, l) = next(key)?;
        if l != format!("{key}:") {
            return Err(err(n, format!("expected `{key}:`")));
        }
        let mut t = Vec::with_capacity(order * order);
        for _ in 0..order {
            let (n, l) = next("table row")?;
            let row: Vec<u32> = l
                .split_whitespace()
                .map(|x| x.parse::<u32>().ok().filter(|&v| (v as usize) < order))
                .collect::<Option<_>>()
                .ok_or_else(|| err(n, format!("row entries must be indices below {order}")))?;
            if row.len() != order {
                return Err(err(
                    n,
                    format!("row has {} entries, expected {order}", row.len()),
                ));
            }
            t.extend(row);
        }
        tables.push(t);
    }
    let zero_line = next("zero")?;
    let zero = field(zero_line, "zero")?;
    let one_line = next("one")?;
    let one = field(one_line, "one")?;
    for (n, idx) in [(zero_line.0, zero), (one_line.0, one)] {
        if idx >= order {
            return Err(err(n, format!("index {idx} is not below {order}")));
        }
    }
    if let Some((n, _)) = lines.find(|(_, l)| !l.is_empty()) {
        return Err(err(n, "unexpected trailing content".into()));
    }
    let mul = tables.pop().unwrap();
    let add = tables.pop().unwrap();
    FiniteRing::from_tables(label, None, add, mul, zero, one, Verification::Full)
}
