//! Query operations and their argument tables.

use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::scenario::{ClassSpec, Num, RuleName};

fn one() -> Num {
    Num::int(1)
}

fn one_u32() -> u32 {
    1
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SheafArgs {
    pub sheaf: String,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolarizedArgs {
    pub sheaf: String,
    /// Name of the generating sheaf; the default `⊕ O(iΣD̃)` when absent.
    #[serde(default)]
    pub xi: Option<String>,
    /// Polarization; the surface's `h` when absent.
    #[serde(default)]
    pub h: Option<Vec<Num>>,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BogomolovArgs {
    pub sheaf: String,
    #[serde(default)]
    pub semistable: bool,
    #[serde(default)]
    pub strongly: bool,
    #[serde(default)]
    pub characteristic: u64,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HnArgs {
    pub blocks: Vec<(u32, Num)>,
}

/// Shared by the characteristic-p bound queries; `blocks` only for `thmA1`.
#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundsArgs {
    pub p: u64,
    pub rk: u32,
    #[serde(default = "one")]
    pub rk_xi: Num,
    #[serde(default = "one")]
    pub hd: Num,
    #[serde(default)]
    pub delta: Num,
    #[serde(default)]
    pub slope_terms: Vec<Num>,
    #[serde(default)]
    pub lmax: Option<Num>,
    #[serde(default)]
    pub lmin: Option<Num>,
    #[serde(default)]
    pub mu: Option<Num>,
    #[serde(default)]
    pub mumax: Option<Num>,
    #[serde(default)]
    pub mumin: Option<Num>,
    #[serde(default)]
    pub blocks: Option<Vec<(u32, Num)>>,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct XiArgs {
    pub sub_rank: u32,
    pub sub_c1: ClassSpec,
    pub rank: u32,
    pub c1: ClassSpec,
    #[serde(default = "one")]
    pub rk_xi: Num,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KplusArgs {
    pub d: Vec<Num>,
    #[serde(default)]
    pub h: Option<Vec<Num>>,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HiggsArgs {
    pub rk: u32,
    #[serde(default = "one")]
    pub rk_xi: Num,
    #[serde(default = "one")]
    pub hd: Num,
    /// `H^{d-1}·A`
    pub ha: Num,
    #[serde(default)]
    pub m: Num,
    pub delta: Num,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MiyaokaArgs {
    #[serde(default)]
    pub k_nef: bool,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParabolicArgs {
    pub parabolic: String,
    #[serde(default)]
    pub h: Option<Vec<Num>>,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Thm39Args {
    pub parabolic: String,
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrobeniusArgs {
    pub sheaf: String,
    pub p: u64,
    #[serde(default = "one_u32")]
    pub n: u32,
    #[serde(default)]
    pub rule: RuleName,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Op {
    Chi(SheafArgs),
    Hilbert(PolarizedArgs),
    Slope(PolarizedArgs),
    Delta(SheafArgs),
    Bogomolov(BogomolovArgs),
    Hn(HnArgs),
    Beta(BoundsArgs),
    AlphaBound(BoundsArgs),
    ThmA1(BoundsArgs),
    ThmA3(BoundsArgs),
    ThmA5(BoundsArgs),
    Xi(XiArgs),
    Kplus(KplusArgs),
    RestrictionThreshold(BoundsArgs),
    HiggsMinChar(HiggsArgs),
    MiyaokaYau(MiyaokaArgs),
    PaSlope(ParabolicArgs),
    PaChi(ParabolicArgs),
    Thm39(Thm39Args),
    ConditionStar(SheafArgs),
    Frobenius(FrobeniusArgs),
}

pub const OP_NAMES: &[&str] = &[
    "chi",
    "hilbert",
    "slope",
    "delta",
    "bogomolov",
    "hn",
    "beta",
    "alpha-bound",
    "thmA1",
    "thmA3",
    "thmA5",
    "xi",
    "kplus",
    "restriction-threshold",
    "higgs-minchar",
    "miyaoka-yau",
    "pa-slope",
    "pa-chi",
    "thm39",
    "condition-star",
    "frobenius",
];

/// A name a query reads from the scenario.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reference {
    Sheaf(String),
    Parabolic(String),
}

fn args<T: DeserializeOwned>(table: toml::Table) -> Result<T, (bool, String)> {
    toml::Value::Table(table).try_into().map_err(|e: toml::de::Error| {
        let m = e.message().to_string();
        (m.contains("unknown field"), m)
    })
}

impl Op {
    /// Reads the argument table of operation `op`. The error flag is set for
    /// keys the operation does not know.
    pub fn parse(op: &str, table: toml::Table) -> Result<Self, (bool, String)> {
        let parsed = match op {
            "chi" => Op::Chi(args(table)?),
            "hilbert" => Op::Hilbert(args(table)?),
            "slope" => Op::Slope(args(table)?),
            "delta" => Op::Delta(args(table)?),
            "bogomolov" => Op::Bogomolov(args(table)?),
            "hn" => Op::Hn(args(table)?),
            "beta" => Op::Beta(args(table)?),
            "alpha-bound" => Op::AlphaBound(args(table)?),
            "thmA1" => Op::ThmA1(args(table)?),
            "thmA3" => Op::ThmA3(args(table)?),
            "thmA5" => Op::ThmA5(args(table)?),
            "xi" => Op::Xi(args(table)?),
            "kplus" => Op::Kplus(args(table)?),
            "restriction-threshold" => Op::RestrictionThreshold(args(table)?),
            "higgs-minchar" => Op::HiggsMinChar(args(table)?),
            "miyaoka-yau" => Op::MiyaokaYau(args(table)?),
            "pa-slope" => Op::PaSlope(args(table)?),
            "pa-chi" => Op::PaChi(args(table)?),
            "thm39" => Op::Thm39(args(table)?),
            "condition-star" => Op::ConditionStar(args(table)?),
            "frobenius" => Op::Frobenius(args(table)?),
            other => {
                return Err((
                    false,
                    format!("unknown operation `{other}`; expected one of {}", OP_NAMES.join(", ")),
                ))
            }
        };
        match &parsed {
            Op::ThmA1(b) if b.blocks.is_none() => Err((false, "thmA1 needs `blocks`".into())),
            Op::Beta(b)
            | Op::AlphaBound(b)
            | Op::ThmA3(b)
            | Op::ThmA5(b)
            | Op::RestrictionThreshold(b)
                if b.blocks.is_some() =>
            {
                Err((true, format!("`blocks` is only used by thmA1, not {op}")))
            }
            _ => Ok(parsed),
        }
    }

    pub fn references(&self) -> Vec<Reference> {
        let sheaf = |s: &String| Reference::Sheaf(s.clone());
        match self {
            Op::Chi(a) | Op::Delta(a) | Op::ConditionStar(a) => vec![sheaf(&a.sheaf)],
            Op::Hilbert(a) | Op::Slope(a) => {
                let mut v = vec![sheaf(&a.sheaf)];
                v.extend(a.xi.iter().map(sheaf));
                v
            }
            Op::Bogomolov(a) => vec![sheaf(&a.sheaf)],
            Op::Frobenius(a) => vec![sheaf(&a.sheaf)],
            Op::PaSlope(a) | Op::PaChi(a) => vec![Reference::Parabolic(a.parabolic.clone())],
            Op::Thm39(a) => vec![Reference::Parabolic(a.parabolic.clone())],
            _ => Vec::new(),
        }
    }
}
