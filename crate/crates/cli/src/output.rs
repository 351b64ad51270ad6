//! Human and machine rendering. The structured format is a stable nested
//! key-value layout (two-space indents, one `key: value` per line, list
//! items introduced by `-`) so downstream scripts can diff certificates.

use std::fmt::Write as _;

use clap::ValueEnum;

use crate::certificate::VerificationCertificate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// aligned human-readable tables
    Table,
    /// stable nested key-value output
    Structured,
}

/// A nested key-value document assembled in order; renders either as an
/// indented table-ish text or as the structured format.
#[derive(Debug, Clone)]
pub enum Node {
    Leaf(String),
    Map(Vec<(String, Node)>),
    List(Vec<Node>),
}

impl Node {
    pub fn leaf(value: impl ToString) -> Node {
        Node::Leaf(value.to_string())
    }

    pub fn map(entries: Vec<(&str, Node)>) -> Node {
        Node::Map(
            entries
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
        )
    }

    pub fn render_structured(&self) -> String {
        let mut out = String::new();
        self.write_structured(&mut out, 0, false);
        out
    }

    fn write_structured(&self, out: &mut String, indent: usize, inline_first: bool) {
        match self {
            Node::Leaf(v) => {
                let _ = writeln!(out, "{v}");
            }
            Node::Map(entries) => {
                for (i, (key, value)) in entries.iter().enumerate() {
                    let pad = if i == 0 && inline_first {
                        String::new()
                    } else {
                        "  ".repeat(indent)
                    };
                    match value {
                        Node::Leaf(v) => {
                            let _ = writeln!(out, "{pad}{key}: {v}");
                        }
                        _ => {
                            let _ = writeln!(out, "{pad}{key}:");
                            value.write_structured(out, indent + 1, false);
                        }
                    }
                }
            }
            Node::List(items) => {
                for item in items {
                    let pad = "  ".repeat(indent);
                    let _ = write!(out, "{pad}- ");
                    match item {
                        Node::Leaf(v) => {
                            let _ = writeln!(out, "{v}");
                        }
                        _ => item.write_structured(out, indent + 1, true),
                    }
                }
            }
        }
    }
}

pub fn certificate_node(cert: &VerificationCertificate) -> Node {
    let mut entries = vec![("example_id", Node::leaf(&cert.example_id))];
    if let Some(seed) = cert.seed {
        entries.push(("seed", Node::leaf(seed)));
    }
    entries.push((
        "overall",
        Node::leaf(if cert.passed() { "pass" } else { "fail" }),
    ));
    entries.push((
        "checks",
        Node::List(
            cert.checks
                .iter()
                .map(|c| {
                    Node::map(vec![
                        ("description", Node::leaf(&c.description)),
                        ("expected", Node::leaf(&c.expected)),
                        ("provenance", Node::leaf(c.provenance)),
                        ("computed", Node::leaf(&c.computed)),
                        ("pass", Node::leaf(c.pass)),
                    ])
                })
                .collect(),
        ),
    ));
    Node::map(entries)
}

pub fn render_certificate(cert: &VerificationCertificate, format: Format) -> String {
    match format {
        Format::Structured => {
            let mut out = String::from("certificate:\n");
            out.push_str(&indent_block(&certificate_node(cert).render_structured()));
            out
        }
        Format::Table => {
            let mut out = String::new();
            match cert.seed {
                Some(seed) => {
                    let _ = writeln!(out, "== certificate {} (seed {seed})", cert.example_id);
                }
                None => {
                    let _ = writeln!(out, "== certificate {}", cert.example_id);
                }
            }
            let width = cert
                .checks
                .iter()
                .map(|c| c.description.chars().count())
                .max()
                .unwrap_or(0);
            for c in &cert.checks {
                let mark = if c.pass { "ok  " } else { "FAIL" };
                let _ = writeln!(
                    out,
                    "{mark} {:width$}  expected {} [{}], computed {}",
                    c.description,
                    c.expected,
                    c.provenance,
                    c.computed,
                    width = width
                );
            }
            let passed = cert.checks.iter().filter(|c| c.pass).count();
            let _ = writeln!(
                out,
                "overall: {} ({passed}/{} checks)",
                if cert.passed() { "pass" } else { "fail" },
                cert.checks.len()
            );
            out
        }
    }
}

fn indent_block(text: &str) -> String {
    text.lines()
        .map(|line| {
            if line.is_empty() {
                String::from("\n")
            } else {
                format!("  {line}\n")
            }
        })
        .collect()
}

/// Renders a flat document in the requested format; table mode prints
/// `key = value` lines with nested sections indented.
pub fn render_report(title: &str, node: &Node, format: Format) -> String {
    match format {
        Format::Structured => {
            let mut out = format!("{title}:\n");
            out.push_str(&indent_block(&node.render_structured()));
            out
        }
        Format::Table => {
            let mut out = format!("== {title}\n");
            out.push_str(&node.render_structured());
            out
        }
    }
}
