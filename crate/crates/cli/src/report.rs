//! Query results and their human and machine renderings. Both renderings are
//! produced from the same entries, in declaration order.

use std::fmt::Write;

use num_bigint::BigInt;
use orbisurf_core::numeric::{fraction_string, Poly};
use orbisurf_core::{Rat, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Rat(Rat),
    Int(BigInt),
    Bool(bool),
    Text(String),
    /// Coefficients, lowest degree first.
    Poly(Poly<Rat>),
    /// `π*base + Σ coeff·D̃_name`
    Class { base: Vec<Rat>, tilde: Vec<(String, Rat)> },
}

fn human_rat(x: &Rat) -> String {
    x.to_string()
}

impl Value {
    pub fn machine(&self) -> String {
        match self {
            Value::Rat(x) => fraction_string(x),
            Value::Int(n) => n.to_string(),
            Value::Bool(b) => b.to_string(),
            Value::Text(t) => t.replace('\n', "\\n"),
            Value::Poly(p) => {
                let parts: Vec<String> = p.coeffs().iter().map(fraction_string).collect();
                format!("[{}]", parts.join(","))
            }
            Value::Class { base, tilde } => {
                let base: Vec<String> = base.iter().map(fraction_string).collect();
                let mut out = format!("[{}]", base.join(","));
                for (name, c) in tilde {
                    let sign = if *c < Rat::from_i64(0) { "" } else { "+" };
                    write!(out, "{sign}{}*{name}~", fraction_string(c)).unwrap();
                }
                out
            }
        }
    }

    pub fn human(&self) -> String {
        match self {
            Value::Rat(x) => human_rat(x),
            Value::Poly(p) => p.to_string(),
            Value::Class { base, tilde } => {
                let base: Vec<String> = base.iter().map(human_rat).collect();
                let mut out = format!("π*({})", base.join(", "));
                let zero = Rat::from_i64(0);
                for (name, c) in tilde.iter().filter(|(_, c)| *c != zero) {
                    if c < &zero {
                        write!(out, " - {}·{name}~", human_rat(&-c.clone())).unwrap();
                    } else {
                        write!(out, " + {}·{name}~", human_rat(c)).unwrap();
                    }
                }
                out
            }
            other => other.machine(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryError {
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryReport {
    pub name: String,
    pub op: String,
    /// Arguments as written, in TOML notation.
    pub args: Vec<(String, String)>,
    /// Hypotheses the scenario asserts rather than the tool checks.
    pub assumed: Vec<(String, String)>,
    pub notes: Vec<String>,
    pub outcome: Result<Vec<(String, Value)>, QueryError>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub queries: Vec<QueryReport>,
}

impl Report {
    pub fn errors(&self) -> usize {
        self.queries.iter().filter(|q| q.outcome.is_err()).count()
    }

    /// `key=value` lines with stable keys; rationals always as `n/d`.
    pub fn machine(&self) -> String {
        let mut out = String::new();
        writeln!(out, "queries={}", self.queries.len()).unwrap();
        for q in &self.queries {
            let n = &q.name;
            writeln!(out, "{n}.op={}", q.op).unwrap();
            for (k, v) in &q.args {
                writeln!(out, "{n}.args.{k}={v}").unwrap();
            }
            for (k, v) in &q.assumed {
                writeln!(out, "{n}.assumed.{k}={v}").unwrap();
            }
            match &q.outcome {
                Ok(entries) => {
                    writeln!(out, "{n}.status=ok").unwrap();
                    for (k, v) in entries {
                        writeln!(out, "{n}.{k}={}", v.machine()).unwrap();
                    }
                }
                Err(e) => {
                    writeln!(out, "{n}.status=error").unwrap();
                    writeln!(out, "{n}.error.kind={}", e.kind).unwrap();
                    writeln!(out, "{n}.error.message={}", e.message).unwrap();
                }
            }
            for note in &q.notes {
                writeln!(out, "{n}.note={note}").unwrap();
            }
        }
        out
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        for (i, q) in self.queries.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let args: Vec<String> = q.args.iter().map(|(k, v)| format!("{k} = {v}")).collect();
            if args.is_empty() {
                writeln!(out, "{}: {}", q.name, q.op).unwrap();
            } else {
                writeln!(out, "{}: {} ({})", q.name, q.op, args.join(", ")).unwrap();
            }
            if !q.assumed.is_empty() {
                let a: Vec<String> = q.assumed.iter().map(|(k, v)| format!("{k} = {v}")).collect();
                writeln!(out, "  assumed, not checked: {}", a.join(", ")).unwrap();
            }
            match &q.outcome {
                Ok(entries) => {
                    let width = entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                    for (k, v) in entries {
                        writeln!(out, "  {k:<width$} = {}", v.human()).unwrap();
                    }
                }
                Err(e) => writeln!(out, "  error {}: {}", e.kind, e.message).unwrap(),
            }
            for note in &q.notes {
                writeln!(out, "  note: {note}").unwrap();
            }
        }
        out
    }
}
