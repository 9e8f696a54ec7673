//! Text and DOT renderers. All output here is deterministic: same query,
//! same bytes.

use std::fmt::{Display, Write as _};
use std::hash::Hash;

use flagfpt::fpt::{Mode, Table1Row, Table2Row};
use flagfpt::lattices::FinitePoset;
use flagfpt::{FlagQuery, FptError, FptResult, WeightSpec};

/// A lattice too large for the requested Hasse diagram, or a failure while
/// building it.
#[derive(Debug)]
pub enum HasseError {
    Cap { size: usize, cap: usize },
    Build(FptError),
}

impl Display for HasseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HasseError::Cap { size, cap } => write!(
                f,
                "lattice has {size} elements, over the cap of {cap}; rerun with --cap {size} or higher"
            ),
            HasseError::Build(e) => e.fmt(f),
        }
    }
}

impl From<FptError> for HasseError {
    fn from(e: FptError) -> Self {
        HasseError::Build(e)
    }
}

impl From<flagfpt::lattices::LatticeError> for HasseError {
    fn from(e: flagfpt::lattices::LatticeError) -> Self {
        HasseError::Build(e.into())
    }
}

pub fn fpt_text(query: &FlagQuery, mode: Mode, result: &FptResult, micros: u128) -> String {
    let mut out = String::new();
    let weight = match query.weight {
        WeightSpec::Natural => "natural weight".to_string(),
        WeightSpec::FundamentalMultiple(m) => format!("fundamental weight times {m}"),
        WeightSpec::RhoMultiple(m) => format!("half-sum weight times {m}"),
    };
    let mode = match mode {
        Mode::Strict => "strict",
        Mode::Fast => "fast",
    };
    writeln!(
        out,
        "query: type {}, rank {}, removed {}, {weight}, {mode} mode",
        query.ty.family(),
        query.ty.rank(),
        query.parab,
    )
    .unwrap();
    writeln!(out, "fpt: {}", result.fpt()).unwrap();
    writeln!(out, "lct: {}", result.lct()).unwrap();
    match result.a_invariant() {
        Some(a) => writeln!(out, "a-invariant: {a}").unwrap(),
        None => writeln!(out, "a-invariant: none (not Gorenstein)").unwrap(),
    }
    writeln!(out, "gorenstein: {}", result.gorenstein()).unwrap();
    writeln!(out, "f-pure: {}", result.f_pure()).unwrap();
    let names: Vec<&str> = result.methods().iter().map(|m| m.name()).collect();
    writeln!(out, "methods: {}", names.join(", ")).unwrap();
    for (method, value) in result.witnesses() {
        writeln!(out, "  {method}: {value}").unwrap();
    }
    writeln!(out, "time: {micros} µs").unwrap();
    out
}

pub fn table1_text(rows: &[Table1Row], bound: usize) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "table 1: thresholds of the minuscule families up to parameter {bound}"
    )
    .unwrap();
    for row in rows {
        writeln!(
            out,
            "{} ({}), {}: fpt = {}",
            row.label, row.space, row.d_description, row.formula
        )
        .unwrap();
        let mut line = String::from(" ");
        for entry in &row.entries {
            write!(line, " n={},d={}:{}", entry.n, entry.d, entry.fpt).unwrap();
        }
        writeln!(out, "{line}").unwrap();
    }
    out
}

pub fn table2_text(rows: &[Table2Row]) -> String {
    let mut out = String::new();
    writeln!(out, "table 2: thresholds at each node of the exceptional types").unwrap();
    let widest = rows.iter().map(|r| r.values.len()).max().unwrap_or(0);
    let mut header = String::from("      ");
    for d in 1..=widest {
        write!(header, " {:>4}", format!("d={d}")).unwrap();
    }
    writeln!(out, "{}", header.trim_end()).unwrap();
    for row in rows {
        let mut line = format!("{:<6}", format!("{}{}", row.family, row.rank));
        for v in &row.values {
            write!(line, " {v:>4}").unwrap();
        }
        writeln!(out, "{}", line.trim_end()).unwrap();
    }
    out
}

/// DOT digraph of the Hasse diagram: edges point from an element to each
/// element covering it, drawn upward, with the principal chain highlighted.
pub fn dot<E>(poset: &FinitePoset<E>, cap: usize) -> Result<String, HasseError>
where
    E: Clone + Ord + Hash + Display,
{
    if poset.len() > cap {
        return Err(HasseError::Cap {
            size: poset.len(),
            cap,
        });
    }
    let chain = poset.principal_chain().map_err(FptError::from)?;
    let mut highlighted = vec![false; poset.len()];
    for element in chain.elements() {
        let idx = poset
            .index_of(element)
            .expect("principal chain stays inside its own poset");
        highlighted[idx] = true;
    }
    let mut out = String::new();
    writeln!(out, "digraph hasse {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box, fontsize=10];").unwrap();
    for (i, element) in poset.elements().iter().enumerate() {
        let label = escape(&element.to_string());
        if highlighted[i] {
            writeln!(
                out,
                "  n{i} [label=\"{label}\", style=filled, fillcolor=gold, penwidth=2];"
            )
            .unwrap();
        } else {
            writeln!(out, "  n{i} [label=\"{label}\"];").unwrap();
        }
    }
    for i in 0..poset.len() {
        for &j in poset.cover_indices(i) {
            writeln!(out, "  n{i} -> n{j};").unwrap();
        }
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
