//! Versioned JSON output. Every rational is an exact integer pair; floats
//! never appear.

use std::collections::BTreeMap;

use num_rational::Rational64;
use serde::Serialize;

use flagfpt::fpt::{Mode, Table1Row, Table2Row, WeightSpec};
use flagfpt::{FlagQuery, FptResult};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct Rat {
    pub num: i64,
    pub den: i64,
}

impl From<Rational64> for Rat {
    fn from(r: Rational64) -> Self {
        Rat {
            num: *r.numer(),
            den: *r.denom(),
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WeightEcho {
    Natural,
    FundamentalMultiple { m: u64 },
    RhoMultiple { m: u64 },
}

#[derive(Serialize)]
pub struct QueryEcho {
    pub family: String,
    pub rank: usize,
    pub removed: Vec<usize>,
    pub weight: WeightEcho,
    pub mode: String,
}

#[derive(Serialize)]
pub struct Timings {
    pub evaluate_micros: u128,
}

#[derive(Serialize)]
pub struct FptReport {
    pub schema_version: u32,
    pub query: QueryEcho,
    pub fpt: Rat,
    pub lct: Rat,
    pub a_invariant: Option<i64>,
    pub gorenstein: bool,
    pub f_pure: bool,
    pub methods: Vec<String>,
    pub witnesses: BTreeMap<String, Rat>,
    pub timings: Timings,
}

pub fn query_echo(query: &FlagQuery, mode: Mode) -> QueryEcho {
    QueryEcho {
        family: query.ty.family().to_string(),
        rank: query.ty.rank(),
        removed: query.parab.removed().iter().copied().collect(),
        weight: match query.weight {
            WeightSpec::Natural => WeightEcho::Natural,
            WeightSpec::FundamentalMultiple(m) => WeightEcho::FundamentalMultiple { m },
            WeightSpec::RhoMultiple(m) => WeightEcho::RhoMultiple { m },
        },
        mode: match mode {
            Mode::Strict => "strict".into(),
            Mode::Fast => "fast".into(),
        },
    }
}

pub fn fpt_report(query: &FlagQuery, mode: Mode, result: &FptResult, micros: u128) -> FptReport {
    FptReport {
        schema_version: SCHEMA_VERSION,
        query: query_echo(query, mode),
        fpt: result.fpt().into(),
        lct: result.lct().into(),
        a_invariant: result.a_invariant(),
        gorenstein: result.gorenstein(),
        f_pure: result.f_pure(),
        methods: result.methods().iter().map(|m| m.name().into()).collect(),
        witnesses: result
            .witnesses()
            .iter()
            .map(|(m, v)| (m.name().to_string(), Rat::from(*v)))
            .collect(),
        timings: Timings {
            evaluate_micros: micros,
        },
    }
}

#[derive(Serialize)]
pub struct Table1EntryReport {
    pub n: usize,
    pub d: usize,
    pub fpt: Rat,
    pub methods: Vec<String>,
}

#[derive(Serialize)]
pub struct Table1RowReport {
    pub family: String,
    pub label: String,
    pub space: String,
    pub d: String,
    pub formula: String,
    pub entries: Vec<Table1EntryReport>,
}

#[derive(Serialize)]
pub struct Table1Report {
    pub schema_version: u32,
    pub table: u8,
    pub rows: Vec<Table1RowReport>,
}

pub fn table1_report(rows: &[Table1Row]) -> Table1Report {
    Table1Report {
        schema_version: SCHEMA_VERSION,
        table: 1,
        rows: rows
            .iter()
            .map(|row| Table1RowReport {
                family: row.family.to_string(),
                label: row.label.to_string(),
                space: row.space.to_string(),
                d: row.d_description.to_string(),
                formula: row.formula.to_string(),
                entries: row
                    .entries
                    .iter()
                    .map(|e| Table1EntryReport {
                        n: e.n,
                        d: e.d,
                        fpt: Rational64::from_integer(e.fpt).into(),
                        methods: e.methods.iter().map(|m| m.name().into()).collect(),
                    })
                    .collect(),
            })
            .collect(),
    }
}

#[derive(Serialize)]
pub struct Table2RowReport {
    pub family: String,
    pub rank: usize,
    /// values[i] is the threshold at the (i+1)-st node
    pub values: Vec<i64>,
}

#[derive(Serialize)]
pub struct Table2Report {
    pub schema_version: u32,
    pub table: u8,
    pub rows: Vec<Table2RowReport>,
}

pub fn table2_report(rows: &[Table2Row]) -> Table2Report {
    Table2Report {
        schema_version: SCHEMA_VERSION,
        table: 2,
        rows: rows
            .iter()
            .map(|row| Table2RowReport {
                family: row.family.to_string(),
                rank: row.rank,
                values: row.values.clone(),
            })
            .collect(),
    }
}
