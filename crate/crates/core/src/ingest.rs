//! Readers for affiliation data.
//!
//! * CSV with an `actor,event` header (columns in any order, plus an optional
//!   `label` column carrying the event's display name).
//! * CSV with a `journal,degree` header: a bare degree sequence.
//! * Pajek-style NET files, either two-mode (`*Vertices n nEvents`, events
//!   first) or one-mode (`*Vertices n`, `*Edges` lines `i j value`).
//!
//! Every rejection carries the 1-based line number where it happened.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{ActorId, EventId, NameNormalizer, OneModeNetwork, TwoModeNetwork, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Warning {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ParseDiagnostics {
    pub warnings: Vec<Warning>,
    pub records_read: usize,
    pub duplicates_collapsed: usize,
}

impl ParseDiagnostics {
    fn warn(&mut self, line: usize, message: impl Into<String>) {
        self.warnings.push(Warning {
            line,
            message: message.into(),
        });
    }
}

/// A degree sequence with vertex names, as transcribed from a table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    pub names: Vec<String>,
    pub degrees: Vec<usize>,
}

/// What a CSV input turned out to hold, decided by its header.
#[derive(Debug, Clone)]
pub enum CsvInput {
    Affiliations(TwoModeNetwork, ParseDiagnostics),
    Degrees(DegreeSequence),
}

fn csv_records(text: &str) -> impl Iterator<Item = Result<(usize, Vec<String>)>> + '_ {
    let reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    reader.into_records().map(|r| match r {
        Ok(record) => {
            let line = record.position().map_or(0, |p| p.line() as usize);
            Ok((line, record.iter().map(str::to_owned).collect()))
        }
        Err(e) => {
            let line = e.position().map_or(0, |p| p.line() as usize);
            Err(Error::format(line, e.to_string()))
        }
    })
}

fn header_names(fields: &[String]) -> Vec<String> {
    fields
        .iter()
        .map(|f| f.trim_start_matches('\u{feff}').trim().to_ascii_lowercase())
        .collect()
}

/// Parses any supported CSV, dispatching on the header.
pub fn parse_csv(text: &str, normalizer: &NameNormalizer) -> Result<CsvInput> {
    let header = match csv_records(text).next() {
        Some(r) => header_names(&r?.1),
        None => return Err(Error::format(1, "missing header")),
    };
    if header.iter().any(|h| h == "degree") {
        parse_csv_degree_sequence(text).map(CsvInput::Degrees)
    } else {
        parse_csv_affiliations_with(text, normalizer).map(|(n, d)| CsvInput::Affiliations(n, d))
    }
}

pub fn parse_csv_affiliations(text: &str) -> Result<(TwoModeNetwork, ParseDiagnostics)> {
    parse_csv_affiliations_with(text, &NameNormalizer::default())
}

pub fn parse_csv_affiliations_with(
    text: &str,
    normalizer: &NameNormalizer,
) -> Result<(TwoModeNetwork, ParseDiagnostics)> {
    let mut records = csv_records(text);
    let (header_line, header) = match records.next() {
        Some(r) => {
            let (line, fields) = r?;
            (line, header_names(&fields))
        }
        None => return Err(Error::format(1, "missing header `actor,event`")),
    };

    let mut actor_col = None;
    let mut event_col = None;
    let mut label_col = None;
    for (i, name) in header.iter().enumerate() {
        let slot = match name.as_str() {
            "actor" => &mut actor_col,
            "event" => &mut event_col,
            "label" => &mut label_col,
            other => {
                return Err(Error::format(
                    header_line,
                    format!("unknown column {other:?}; expected actor, event and optionally label"),
                ))
            }
        };
        if slot.replace(i).is_some() {
            return Err(Error::format(header_line, format!("column {name:?} appears twice")));
        }
    }
    let (Some(actor_col), Some(event_col)) = (actor_col, event_col) else {
        return Err(Error::format(header_line, "header must name both actor and event"));
    };

    let mut net = TwoModeNetwork::new();
    let mut diag = ParseDiagnostics::default();
    for record in records {
        let (line, fields) = record?;
        if fields.len() == 1 && fields[0].is_empty() {
            continue;
        }
        if fields.len() != header.len() {
            return Err(Error::format(
                line,
                format!("expected {} fields, found {}", header.len(), fields.len()),
            ));
        }
        diag.records_read += 1;
        let event = EventId::with_normalizer(&fields[event_col], normalizer)
            .map_err(|e| Error::format(line, e.to_string()))?;
        let actor = ActorId::with_normalizer(&fields[actor_col], normalizer)
            .map_err(|e| Error::format(line, e.to_string()))?;

        if !net.add_affiliation(event.clone(), actor.clone()) {
            diag.duplicates_collapsed += 1;
            diag.warn(line, format!("duplicate affiliation {actor} / {event} collapsed"));
        }
        let label = label_col.map_or("", |col| fields[col].as_str());
        if !label.is_empty() {
            let idx = net.event_index(&event).expect("event was just added");
            match &net.events()[idx].label {
                None => net.set_event_label(idx, label),
                Some(existing) if existing != label => diag.warn(
                    line,
                    format!("event {event} relabelled {label:?}; keeping {existing:?}"),
                ),
                Some(_) => {}
            }
        }
    }
    Ok((net, diag))
}

/// Reads a `journal,degree` (or `vertex,degree`) table.
pub fn parse_csv_degree_sequence(text: &str) -> Result<DegreeSequence> {
    let mut records = csv_records(text);
    let (header_line, header) = match records.next() {
        Some(r) => {
            let (line, fields) = r?;
            (line, header_names(&fields))
        }
        None => return Err(Error::format(1, "missing header `journal,degree`")),
    };
    let name_col = header
        .iter()
        .position(|h| h == "journal" || h == "vertex" || h == "event");
    let degree_col = header.iter().position(|h| h == "degree");
    let (Some(name_col), Some(degree_col), 2) = (name_col, degree_col, header.len()) else {
        return Err(Error::format(header_line, "header must be `journal,degree`"));
    };

    let mut seq = DegreeSequence {
        names: Vec::new(),
        degrees: Vec::new(),
    };
    for record in records {
        let (line, fields) = record?;
        if fields.len() == 1 && fields[0].is_empty() {
            continue;
        }
        if fields.len() != 2 {
            return Err(Error::format(
                line,
                format!("expected 2 fields, found {}", fields.len()),
            ));
        }
        if fields[name_col].is_empty() {
            return Err(Error::format(line, "empty vertex name"));
        }
        let degree = fields[degree_col].parse::<usize>().map_err(|_| {
            Error::format(line, format!("degree {:?} is not a count", fields[degree_col]))
        })?;
        seq.names.push(fields[name_col].clone());
        seq.degrees.push(degree);
    }
    Ok(seq)
}

// ---------------------------------------------------------------------------
// NET

/// Lines of a NET file with comments and blanks removed.
fn net_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('%'))
}

/// `1 "Some name" ...` → (1, "Some name"). Inside quotes `""` is a literal
/// quote.
fn parse_vertex_line(line: usize, text: &str) -> Result<(usize, Option<String>)> {
    let (index, rest) = match text.find(char::is_whitespace) {
        Some(p) => (&text[..p], text[p..].trim_start()),
        None => (text, ""),
    };
    let index = parse_index(line, index)?;
    if rest.is_empty() {
        return Ok((index, None));
    }
    if let Some(body) = rest.strip_prefix('"') {
        let mut label = String::new();
        let mut chars = body.chars().peekable();
        loop {
            match chars.next() {
                Some('"') if chars.peek() == Some(&'"') => {
                    chars.next();
                    label.push('"');
                }
                Some('"') => break,
                Some(c) => label.push(c),
                None => return Err(Error::format(line, "unterminated quoted label")),
            }
        }
        Ok((index, Some(label)))
    } else {
        let token = rest.split_whitespace().next().unwrap_or_default();
        Ok((index, Some(token.to_owned())))
    }
}

fn parse_index(line: usize, token: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .ok()
        .filter(|&i| i >= 1)
        .ok_or_else(|| Error::format(line, format!("{token:?} is not a vertex number")))
}

enum Section {
    Preamble,
    Vertices,
    Edges,
}

struct NetFile {
    vertex_count: usize,
    event_count: Option<usize>,
    labels: Vec<Option<String>>,
    // (line, i, j, value) with 0-based vertex indices
    lines: Vec<(usize, usize, usize, u32)>,
}

fn read_net(text: &str) -> Result<NetFile> {
    let mut file = NetFile {
        vertex_count: 0,
        event_count: None,
        labels: Vec::new(),
        lines: Vec::new(),
    };
    let mut section = Section::Preamble;
    let mut saw_vertices = false;

    for (line, content) in net_lines(text) {
        if let Some(keyword) = content.strip_prefix('*') {
            let mut parts = keyword.split_whitespace();
            let name = parts.next().unwrap_or_default().to_ascii_lowercase();
            match name.as_str() {
                "vertices" => {
                    if saw_vertices {
                        return Err(Error::format(line, "second *Vertices section"));
                    }
                    saw_vertices = true;
                    let counts: Vec<usize> = parts
                        .map(|p| {
                            p.parse::<usize>().map_err(|_| {
                                Error::format(line, format!("{p:?} is not a vertex count"))
                            })
                        })
                        .collect::<Result<_>>()?;
                    match counts.as_slice() {
                        [n] => file.vertex_count = *n,
                        [n, k] if k <= n => {
                            file.vertex_count = *n;
                            file.event_count = Some(*k);
                        }
                        [_, _] => {
                            return Err(Error::format(line, "more events than vertices"))
                        }
                        _ => return Err(Error::format(line, "expected `*Vertices n [nEvents]`")),
                    }
                    file.labels = vec![None; file.vertex_count];
                    section = Section::Vertices;
                }
                "edges" => {
                    if !saw_vertices {
                        return Err(Error::format(line, "*Edges before *Vertices"));
                    }
                    section = Section::Edges;
                }
                "arcs" | "arcslist" | "edgeslist" | "matrix" => {
                    return Err(Error::format(
                        line,
                        format!("section *{name} is not supported; use *Edges"),
                    ))
                }
                _ => return Err(Error::format(line, format!("unknown section *{name}"))),
            }
            continue;
        }

        match section {
            Section::Preamble => {
                return Err(Error::format(line, "expected *Vertices"));
            }
            Section::Vertices => {
                let (index, label) = parse_vertex_line(line, content)?;
                if index > file.vertex_count {
                    return Err(Error::format(
                        line,
                        format!("vertex {index} outside 1..={}", file.vertex_count),
                    ));
                }
                if file.labels[index - 1].is_some() {
                    return Err(Error::format(line, format!("vertex {index} listed twice")));
                }
                file.labels[index - 1] = label;
            }
            Section::Edges => {
                let mut tokens = content.split_whitespace();
                let (Some(a), Some(b)) = (tokens.next(), tokens.next()) else {
                    return Err(Error::format(line, "expected `i j [value]`"));
                };
                let (a, b) = (parse_index(line, a)?, parse_index(line, b)?);
                for v in [a, b] {
                    if v > file.vertex_count {
                        return Err(Error::format(
                            line,
                            format!("vertex {v} outside 1..={}", file.vertex_count),
                        ));
                    }
                }
                let value = match tokens.next() {
                    None => 1,
                    Some(t) => t
                        .parse::<f64>()
                        .ok()
                        .filter(|v| v.fract() == 0.0 && *v >= 1.0 && *v <= u32::MAX as f64)
                        .map(|v| v as u32)
                        .ok_or_else(|| {
                            Error::format(line, format!("line value {t:?} is not a positive integer"))
                        })?,
                };
                file.lines.push((line, a - 1, b - 1, value));
            }
        }
    }
    if !saw_vertices {
        return Err(Error::format(1, "missing *Vertices"));
    }
    Ok(file)
}

fn resolve_labels(labels: &[Option<String>]) -> Vec<String> {
    labels
        .iter()
        .enumerate()
        .map(|(i, l)| l.clone().unwrap_or_else(|| (i + 1).to_string()))
        .collect()
}

/// Reads a two-mode NET file: vertices `1..=nEvents` are events, the rest
/// actors; every edge must join an event to an actor.
pub fn parse_net_two_mode(text: &str) -> Result<(TwoModeNetwork, ParseDiagnostics)> {
    parse_net_two_mode_with(text, &NameNormalizer::default())
}

pub fn parse_net_two_mode_with(
    text: &str,
    normalizer: &NameNormalizer,
) -> Result<(TwoModeNetwork, ParseDiagnostics)> {
    let file = read_net(text)?;
    let Some(events) = file.event_count else {
        return Err(Error::format(
            1,
            "not a two-mode file: `*Vertices n nEvents` expected",
        ));
    };
    let names = resolve_labels(&file.labels);
    let mut diag = ParseDiagnostics::default();

    let mut net = TwoModeNetwork::new();
    let mut seen_events = HashMap::new();
    for (i, name) in names[..events].iter().enumerate() {
        let id = EventId::with_normalizer(name, normalizer)
            .map_err(|e| Error::format(1, format!("event {}: {e}", i + 1)))?;
        if seen_events.insert(id.clone(), i).is_some() {
            return Err(Error::format(1, format!("event label {id} used twice")));
        }
        net.add_event(id);
    }
    let mut actor_ids = Vec::with_capacity(names.len() - events);
    let mut seen_actors = HashMap::new();
    for (i, name) in names[events..].iter().enumerate() {
        let id = ActorId::with_normalizer(name, normalizer)
            .map_err(|e| Error::format(1, format!("actor {}: {e}", events + i + 1)))?;
        if seen_actors.insert(id.clone(), i).is_some() {
            return Err(Error::format(1, format!("actor label {id} used twice")));
        }
        actor_ids.push(id);
    }

    // (actor, event, line), so actors enter the network in vertex order.
    let mut memberships = Vec::with_capacity(file.lines.len());
    for &(line, a, b, _) in &file.lines {
        let (event, actor) = match (a < events, b < events) {
            (true, false) => (a, b - events),
            (false, true) => (b, a - events),
            _ => {
                return Err(Error::NotBipartite {
                    line,
                    source_index: a + 1,
                    target_index: b + 1,
                })
            }
        };
        diag.records_read += 1;
        memberships.push((actor, event, line));
    }
    memberships.sort_unstable();
    for &(actor, event, line) in &memberships {
        let event_id = net.events()[event].id.clone();
        if !net.add_affiliation(event_id, actor_ids[actor].clone()) {
            diag.duplicates_collapsed += 1;
            diag.warn(line, "duplicate edge collapsed");
        }
    }
    for (i, id) in actor_ids.iter().enumerate() {
        if net.actor_index(id).is_none() {
            diag.warn(1, format!("actor {} ({id}) has no affiliation; dropped", events + i + 1));
        }
    }
    diag.warnings.sort_by_key(|w| w.line);
    Ok((net, diag))
}

/// Reads a one-mode NET file (`*Vertices n`, `*Edges` lines `i j [value]`).
pub fn parse_net_one_mode(text: &str) -> Result<(OneModeNetwork, ParseDiagnostics)> {
    let file = read_net(text)?;
    if file.event_count.is_some() {
        return Err(Error::format(1, "two-mode file where a one-mode network was expected"));
    }
    let vertices: Vec<Vertex> = resolve_labels(&file.labels)
        .into_iter()
        .map(Vertex::new)
        .collect();
    let mut seen = HashMap::new();
    for &(line, a, b, _) in &file.lines {
        if a == b {
            return Err(Error::format(line, format!("self-loop on vertex {}", a + 1)));
        }
        if let Some(first) = seen.insert((a.min(b), a.max(b)), line) {
            return Err(Error::format(
                line,
                format!("line {}-{} already given on line {first}", a + 1, b + 1),
            ));
        }
    }
    let diag = ParseDiagnostics {
        records_read: file.lines.len(),
        ..Default::default()
    };
    let net = OneModeNetwork::new(vertices, file.lines.iter().map(|&(_, a, b, v)| (a, b, v)))
        .map_err(|e| Error::format(1, e.to_string()))?;
    Ok((net, diag))
}

/// A NET input, one- or two-mode depending on its `*Vertices` line.
#[derive(Debug, Clone)]
pub enum NetInput {
    TwoMode(TwoModeNetwork, ParseDiagnostics),
    OneMode(OneModeNetwork, ParseDiagnostics),
}

pub fn parse_net(text: &str, normalizer: &NameNormalizer) -> Result<NetInput> {
    let two_mode = net_lines(text)
        .find(|(_, l)| l.starts_with('*'))
        .map(|(_, l)| l.split_whitespace().count() == 3)
        .unwrap_or(false);
    if two_mode {
        parse_net_two_mode_with(text, normalizer).map(|(n, d)| NetInput::TwoMode(n, d))
    } else {
        parse_net_one_mode(text).map(|(n, d)| NetInput::OneMode(n, d))
    }
}
