//! Tree serialization for `fibtree dump`.

use std::io::{self, Write};

use clap::ValueEnum;
use fibtree::navigation::{FibNodeType, GoldenNodeType};
use fibtree::{FibCode, GoldenCode, Status, TreeKind, TreeTable};
use serde_json::json;

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Dot,
    Records,
}

struct Row {
    number: u64,
    status: Status,
    level: usize,
    father: Option<u64>,
    fib_code: FibCode,
    golden_code: GoldenCode,
    /// Black tree only.
    types: Option<(FibNodeType, GoldenNodeType)>,
}

fn rows(table: &TreeTable) -> impl Iterator<Item = Row> + '_ {
    table.nodes().map(move |n| {
        let status = table.status(n).expect("in table");
        Row {
            number: n,
            status,
            level: table.level(n).expect("in table"),
            father: table.father(n),
            fib_code: FibCode::from_u64(n).expect("positive"),
            golden_code: GoldenCode::from_u64(n).expect("positive"),
            types: (table.kind() == TreeKind::BlackRoot).then(|| {
                (
                    FibNodeType::classify(n, status),
                    GoldenNodeType::classify(n, status),
                )
            }),
        }
    })
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |v| v.to_string())
}

pub fn write(out: &mut impl Write, table: &TreeTable, format: Format) -> io::Result<()> {
    match format {
        Format::Text => text(out, table),
        Format::Csv => csv(out, table),
        Format::Dot => dot(out, table),
        Format::Records => records(out, table),
    }
}

fn csv(out: &mut impl Write, table: &TreeTable) -> io::Result<()> {
    writeln!(
        out,
        "number,status,level,father,fib_code,golden_code,fib_type,golden_type"
    )?;
    for r in rows(table) {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.number,
            r.status,
            r.level,
            opt(r.father),
            r.fib_code,
            r.golden_code,
            opt(r.types.map(|t| t.0)),
            opt(r.types.map(|t| t.1)),
        )?;
    }
    Ok(())
}

fn text(out: &mut impl Write, table: &TreeTable) -> io::Result<()> {
    let mut level = usize::MAX;
    for r in rows(table) {
        if r.level != level {
            level = r.level;
            writeln!(out, "level {level}")?;
        }
        let types = r
            .types
            .map_or_else(String::new, |(f, g)| format!("  {f:<4} {g}"));
        writeln!(
            out,
            "  {:>8} {} {:>24} {:>16}{types}",
            r.number,
            r.status.letter(),
            r.fib_code.to_string(),
            r.golden_code.to_string(),
        )?;
    }
    Ok(())
}

fn records(out: &mut impl Write, table: &TreeTable) -> io::Result<()> {
    for r in rows(table) {
        let mut v = json!({
            "record": "node",
            "tree": table.kind().to_string(),
            "number": r.number,
            "status": r.status,
            "level": r.level,
            "father": r.father,
            "sons": table.sons(r.number).map(|s| s.collect::<Vec<_>>()),
            "fib_code": r.fib_code.to_string(),
            "golden_code": r.golden_code.to_string(),
        });
        if let Some((f, g)) = r.types {
            v["fib_type"] = json!(f.name());
            v["golden_type"] = json!(g.name());
        }
        writeln!(out, "{v}")?;
    }
    Ok(())
}

/// Father-to-son edges only. In the white tree the preferred son's edge is
/// bold; in the black tree the edge to the successor is bold when the
/// successor is a son, and otherwise the successor is named in the label.
fn dot(out: &mut impl Write, table: &TreeTable) -> io::Result<()> {
    writeln!(out, "digraph {}_tree {{", table.kind())?;
    writeln!(
        out,
        "  node [shape=circle, style=filled, fontname=\"monospace\"];"
    )?;
    for r in rows(table) {
        let (fill, font) = match r.status {
            Status::Black => ("black", "white"),
            Status::White => ("white", "black"),
        };
        let mut label = format!("{}\\n{}", r.number, r.fib_code);
        if table.kind() == TreeKind::BlackRoot && table.sons(r.number).is_some() {
            let succ = r.fib_code.append_zeros(2).to_u64().expect("fits");
            if table.sons(r.number).is_some_and(|s| !s.contains(&succ)) {
                label.push_str(&format!("\\nsucc {succ}"));
            }
        }
        writeln!(
            out,
            "  n{} [label=\"{label}\", fillcolor={fill}, fontcolor={font}];",
            r.number
        )?;
    }
    for n in table.nodes() {
        let Some(sons) = table.sons(n) else { continue };
        // the son coded [n]00 is the preferred son or the successor
        let marked = FibCode::from_u64(n)
            .expect("positive")
            .append_zeros(2)
            .to_u64()
            .expect("fits");
        for s in sons {
            let style = if s == marked { " [style=bold]" } else { "" };
            writeln!(out, "  n{n} -> n{s}{style};")?;
        }
    }
    writeln!(out, "}}")
}
