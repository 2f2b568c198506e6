//! Reference data shipped with the crate: the table of known clique covering
//! numbers, the printed minimal covers, literature values, and a (12,6,5)
//! Steiner system.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Cover, GraphParams};
use crate::io::{parse_blocks, parse_cover, BlockFile};

const THETA_TABLE: &str = include_str!("../fixtures/theta_table.txt");
const CITED: &str = include_str!("../fixtures/cited.txt");
const STEINER_12_6_5: &str = include_str!("../fixtures/steiner_12_6_5.txt");

const COVERS: &[((u32, u32), &str)] = &[
    ((8, 4), include_str!("../fixtures/covers/j_8_4.json")),
    ((9, 4), include_str!("../fixtures/covers/j_9_4.json")),
    ((10, 4), include_str!("../fixtures/covers/j_10_4.json")),
    ((10, 5), include_str!("../fixtures/covers/j_10_5.json")),
    ((11, 4), include_str!("../fixtures/covers/j_11_4.json")),
    ((12, 6), include_str!("../fixtures/covers/j_12_6.json")),
];

/// A known value of θ: exact when `lo == hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaValue {
    pub lo: u64,
    pub hi: u64,
}

impl ThetaValue {
    pub fn exact(v: u64) -> Self {
        ThetaValue { lo: v, hi: v }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, v: u64) -> bool {
        self.lo <= v && v <= self.hi
    }
}

impl std::fmt::Display for ThetaValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_exact() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}-{}", self.lo, self.hi)
        }
    }
}

fn parse_theta(tok: &str, line: usize) -> Result<ThetaValue> {
    let num = |t: &str| {
        t.parse::<u64>().map_err(|_| Error::Parse { line, message: format!("bad value '{tok}'") })
    };
    match tok.split_once('-') {
        Some((a, b)) => {
            let v = ThetaValue { lo: num(a)?, hi: num(b)? };
            if v.lo > v.hi {
                return Err(Error::Parse { line, message: format!("empty interval '{tok}'") });
            }
            Ok(v)
        }
        None => Ok(ThetaValue::exact(num(tok)?)),
    }
}

/// Parses the `N: v_1 ... v_{N-1}` grid; entries are stored as printed.
pub fn parse_theta_table(text: &str) -> Result<BTreeMap<(u32, u32), ThetaValue>> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let (n, rest) = l.split_once(':').ok_or(Error::Parse { line, message: "missing ':'".into() })?;
        let n: u32 = n.trim().parse().map_err(|_| Error::Parse { line, message: "bad N".into() })?;
        let values = rest.split_whitespace().map(|t| parse_theta(t, line)).collect::<Result<Vec<_>>>()?;
        if values.len() + 1 != n as usize {
            return Err(Error::Parse { line, message: format!("row N={n} needs {} entries", n - 1) });
        }
        for (j, v) in values.into_iter().enumerate() {
            out.insert((n, j as u32 + 1), v);
        }
    }
    Ok(out)
}

fn known_table() -> &'static BTreeMap<(u32, u32), ThetaValue> {
    static T: OnceLock<BTreeMap<(u32, u32), ThetaValue>> = OnceLock::new();
    T.get_or_init(|| parse_theta_table(THETA_TABLE).expect("bundled table parses"))
}

/// All table entries `(n, k) -> value` as printed (both halves of each row).
pub fn theta_table() -> &'static BTreeMap<(u32, u32), ThetaValue> {
    known_table()
}

/// Table lookup, falling back to the mirrored entry `(n, n - k)`.
pub fn table_theta(params: GraphParams) -> Option<ThetaValue> {
    let t = known_table();
    t.get(&(params.n(), params.k()))
        .or_else(|| t.get(&(params.n(), params.n() - params.k())))
        .copied()
}

/// A literature value quoted next to the computations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CitedValue {
    pub kind: String,
    pub n: u32,
    pub k: u32,
    pub relation: String,
    pub value: u64,
}

pub fn cited_values() -> Vec<CitedValue> {
    CITED
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            CitedValue {
                kind: f[0].to_string(),
                n: f[1].parse().expect("bundled fixture"),
                k: f[2].parse().expect("bundled fixture"),
                relation: f[3].to_string(),
                value: f[4].parse().expect("bundled fixture"),
            }
        })
        .collect()
}

pub fn cited(kind: &str, n: u32, k: u32) -> Option<CitedValue> {
    cited_values().into_iter().find(|c| c.kind == kind && c.n == n && c.k == k)
}

/// Parameters of the bundled minimal covers.
pub fn minimal_cover_params() -> impl Iterator<Item = (u32, u32)> {
    COVERS.iter().map(|(p, _)| *p)
}

/// One of the bundled minimal covers (`k >= 4`, `n <= 12`).
pub fn minimal_cover(n: u32, k: u32) -> Option<Cover> {
    COVERS
        .iter()
        .find(|(p, _)| *p == (n, k))
        .map(|(_, text)| parse_cover(text).expect("bundled cover parses").cover)
}

/// Raw JSON of a bundled cover.
pub fn minimal_cover_text(n: u32, k: u32) -> Option<&'static str> {
    COVERS.iter().find(|(p, _)| *p == (n, k)).map(|(_, t)| *t)
}

/// The 132 blocks of a (12, 6, 5) Steiner system.
pub fn steiner_12_6_5() -> BlockFile {
    parse_blocks(STEINER_12_6_5).expect("bundled design parses")
}

pub fn steiner_12_6_5_text() -> &'static str {
    STEINER_12_6_5
}
