//! Writers for one-mode networks: NET, edge-list CSV and DOT.
//!
//! All output uses `\n` line endings and iterates vertices and lines in
//! network order, so the bytes are stable across runs.

use std::fmt::Write as _;

use crate::model::OneModeNetwork;

fn net_quote(text: &str) -> String {
    format!("\"{}\"", text.replace('"', "\"\""))
}

/// `*Vertices n`, one quoted vertex id per line, then `*Edges` with
/// `i j value` lines (1-based, `i < j`).
pub fn write_net_one_mode(net: &OneModeNetwork) -> String {
    let mut out = String::new();
    writeln!(out, "*Vertices {}", net.vertex_count()).unwrap();
    for (i, v) in net.vertices().iter().enumerate() {
        writeln!(out, "{} {}", i + 1, net_quote(&v.id)).unwrap();
    }
    out.push_str("*Edges\n");
    for e in net.edges() {
        writeln!(out, "{} {} {}", e.source + 1, e.target + 1, e.value).unwrap();
    }
    out
}

/// `source,target,value` rows, one per undirected line.
pub fn write_edge_list_csv(net: &OneModeNetwork) -> String {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    writer
        .write_record(["source", "target", "value"])
        .expect("writing to memory");
    for e in net.edges() {
        let value = e.value.to_string();
        writer
            .write_record([
                net.vertices()[e.source].id.as_str(),
                net.vertices()[e.target].id.as_str(),
                value.as_str(),
            ])
            .expect("writing to memory");
    }
    let bytes = writer.into_inner().expect("writing to memory");
    String::from_utf8(bytes).expect("input was UTF-8")
}

fn dot_quote(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 2);
    out.push('"');
    for c in text.chars() {
        match c {
            '"' | '\\' => {
                out.push('\\');
                out.push(c);
            }
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Undirected Graphviz graph. Line values become `weight` and `label`.
pub fn write_dot(net: &OneModeNetwork) -> String {
    let mut out = String::from("graph interlocks {\n");
    for (i, v) in net.vertices().iter().enumerate() {
        writeln!(out, "  n{} [label={}];", i + 1, dot_quote(v.display_name())).unwrap();
    }
    for e in net.edges() {
        writeln!(
            out,
            "  n{} -- n{} [weight={}, label=\"{}\"];",
            e.source + 1,
            e.target + 1,
            e.value,
            e.value
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
