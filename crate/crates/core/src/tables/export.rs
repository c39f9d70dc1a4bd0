use serde_json::{json, Value};

use crate::algebra::Render;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoefficientRing {
    Integer,
    Rational,
    Laurent,
    RationalFunction,
}

impl CoefficientRing {
    pub fn as_str(self) -> &'static str {
        match self {
            CoefficientRing::Integer => "Z",
            CoefficientRing::Rational => "Q",
            CoefficientRing::Laurent => "Z[q,q^-1]",
            CoefficientRing::RationalFunction => "Q(q)",
        }
    }
}

/// Row-major 2D data as JSON, every entry tagged with its indices.
/// `keys` names the row and column index (e.g. `("i", "j")`), `starts` the
/// index of the first row and column.
pub fn triangle_json<C: Render>(
    kind: &str,
    ring: CoefficientRing,
    rows: &[Vec<C>],
    keys: (&str, &str),
    starts: (usize, usize),
) -> Value {
    let rows: Vec<Value> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let entries: Vec<Value> = r
                .iter()
                .enumerate()
                .map(|(j, c)| json!({ keys.1: j + starts.1, "value": c.render() }))
                .collect();
            json!({ keys.0: i + starts.0, "entries": entries })
        })
        .collect();
    json!({ "kind": kind, "coefficient_ring": ring.as_str(), "rows": rows })
}

/// A sequence as JSON; `key` names the index and `start` is the first index.
pub fn values_json<C: Render>(
    kind: &str,
    ring: CoefficientRing,
    values: &[C],
    key: &str,
    start: usize,
    step: usize,
) -> Value {
    let values: Vec<Value> = values
        .iter()
        .enumerate()
        .map(|(i, c)| json!({ key: start + i * step, "value": c.render() }))
        .collect();
    json!({ "kind": kind, "coefficient_ring": ring.as_str(), "values": values })
}

/// `i,j,value` records with a header line.
pub fn triangle_csv<C: Render>(
    rows: &[Vec<C>],
    keys: (&str, &str),
    starts: (usize, usize),
) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([keys.0, keys.1, "value"])
        .expect("in-memory write");
    for (i, r) in rows.iter().enumerate() {
        for (j, c) in r.iter().enumerate() {
            w.write_record([
                (i + starts.0).to_string(),
                (j + starts.1).to_string(),
                c.render_compact(),
            ])
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

/// `key,value` records with a header line.
pub fn values_csv<C: Render>(values: &[C], key: &str, start: usize, step: usize) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([key, "value"]).expect("in-memory write");
    for (i, c) in values.iter().enumerate() {
        w.write_record([(start + i * step).to_string(), c.render_compact()])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn latex_entry(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 8);
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '*' => {}
            '^' => {
                let mut exp = String::new();
                if chars.peek() == Some(&'-') {
                    exp.push(chars.next().unwrap_or('-'));
                }
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    exp.push(*d);
                    chars.next();
                }
                out.push_str(&format!("^{{{exp}}}"));
            }
            _ => out.push(c),
        }
    }
    out
}

/// A `tabular` environment; short rows are padded with `0` to the widest row.
pub fn render_latex<C: Render>(rows: &[Vec<C>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0).max(1);
    let mut out = format!("\\begin{{tabular}}{{{}}}\n", "c".repeat(width));
    for r in rows {
        let cells: Vec<String> = (0..width)
            .map(|j| match r.get(j) {
                Some(c) => format!("${}$", latex_entry(&c.render_compact())),
                None => "$0$".to_string(),
            })
            .collect();
        out.push_str(&cells.join(" & "));
        out.push_str(" \\\\\n");
    }
    out.push_str("\\end{tabular}\n");
    out
}

/// One line per row, compact entries joined by `", "`.
pub fn render_text_rows<C: Render>(rows: &[Vec<C>]) -> String {
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(Render::render_compact).collect();
            cells.join(", ") + "\n"
        })
        .collect()
}
