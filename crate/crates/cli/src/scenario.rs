//! Scenario files: one TOML document holding a surface, a root stack, named
//! parabolic and orbifold sheaves, and an ordered list of queries.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use orbisurf_core::geometry::{DivClass, RootStackModel, StackyClass, SurfaceModel};
use orbisurf_core::numeric::{fraction_string, parse_fraction};
use orbisurf_core::sheafdata::{
    default_generating_sheaf, frobenius_pullback, line_bundle, parabolic_to_orb, CharacterRule,
    EigenPiece, OrbSheaf, ParabolicPiece, ParabolicSheaf,
};
use orbisurf_core::{Rat, Scalar};
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};
use toml::Spanned;

use crate::query::{Op, Reference};

/// Exact rational read from a TOML integer or an `"a/b"` string.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Num(pub Rat);

impl Num {
    pub fn int(n: i64) -> Self {
        Num(Rat::from_i64(n))
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64_exact() {
            Some(n) => s.serialize_i64(n),
            None => s.serialize_str(&fraction_string(&self.0)),
        }
    }
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct NumVisitor;

        impl Visitor<'_> for NumVisitor {
            type Value = Num;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a fraction string such as \"3/2\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Num, E> {
                Ok(Num::int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Num, E> {
                i64::try_from(v)
                    .map(Num::int)
                    .map_err(|_| E::custom(format!("{v} is too large; write it as a string")))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Num, E> {
                Err(E::custom(format!(
                    "decimal {v} is not exact; write rationals as \"a/b\" strings"
                )))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Num, E> {
                parse_fraction(v)
                    .map(Num)
                    .ok_or_else(|| E::custom(format!("`{v}` is not a fraction a/b")))
            }
        }

        d.deserialize_any(NumVisitor)
    }
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceBlock {
    pub gram: Spanned<Vec<Vec<Num>>>,
    pub h: Vec<Num>,
    pub k: Vec<Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler: Option<Num>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub divisors: BTreeMap<String, Vec<Num>>,
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct CrossingDecl {
    pub pair: Spanned<Vec<String>>,
    pub points: i64,
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct RootStackBlock {
    pub r: Spanned<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub branch: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub crossings: Vec<CrossingDecl>,
}

/// `π*base + Σ tilde[λ]·D̃_λ`; an empty `base` is the zero class.
#[derive(Clone, Debug, Default, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ClassSpec {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub base: Vec<Num>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tilde: BTreeMap<String, Num>,
}

impl ClassSpec {
    pub fn resolve(&self, model: &RootStackModel<Rat>) -> Result<StackyClass<Rat>, String> {
        let base = if self.base.is_empty() {
            DivClass::zero(model.rho())
        } else if self.base.len() != model.rho() {
            return Err(format!(
                "class has {} base coordinates, the Picard lattice has rank {}",
                self.base.len(),
                model.rho()
            ));
        } else {
            DivClass::new(self.base.iter().map(|n| n.0.clone()).collect())
        };
        let mut stacky = vec![Rat::from_i64(0); model.components()];
        for (name, c) in &self.tilde {
            let i = model.component_index(name).map_err(|e| e.to_string())?;
            stacky[i] = c.0.clone();
        }
        Ok(StackyClass::new(base, stacky))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleName {
    #[default]
    Multiply,
    Fixed,
}

impl From<RuleName> for CharacterRule {
    fn from(r: RuleName) -> Self {
        match r {
            RuleName::Multiply => CharacterRule::Multiply,
            RuleName::Fixed => CharacterRule::Fixed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SheafKind {
    Line,
    Sum,
    Tensor,
    Twist,
    Dual,
    Frobenius,
    Explicit,
    Generating,
    Parabolic,
}

impl SheafKind {
    fn name(self) -> &'static str {
        match self {
            SheafKind::Line => "line",
            SheafKind::Sum => "sum",
            SheafKind::Tensor => "tensor",
            SheafKind::Twist => "twist",
            SheafKind::Dual => "dual",
            SheafKind::Frobenius => "frobenius",
            SheafKind::Explicit => "explicit",
            SheafKind::Generating => "generating",
            SheafKind::Parabolic => "parabolic",
        }
    }

    fn fields(self) -> &'static [&'static str] {
        match self {
            SheafKind::Line => &["class"],
            SheafKind::Sum | SheafKind::Tensor => &["of"],
            SheafKind::Twist => &["sheaf", "class"],
            SheafKind::Dual => &["sheaf"],
            SheafKind::Frobenius => &["sheaf", "p", "n", "rule"],
            SheafKind::Explicit => &["rank", "c1", "c2", "curve", "points"],
            SheafKind::Generating => &[],
            SheafKind::Parabolic => &["parabolic"],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    pub ranks: Vec<u32>,
    pub degrees: Vec<Num>,
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct PointSpec {
    pub pair: Vec<String>,
    pub table: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SheafDecl {
    pub name: Spanned<String>,
    pub kind: SheafKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub of: Vec<Spanned<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sheaf: Option<Spanned<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<ClassSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rule: Option<RuleName>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c1: Option<ClassSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c2: Option<Num>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub curve: BTreeMap<String, CurveSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<PointSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parabolic: Option<Spanned<String>>,
}

impl SheafDecl {
    fn present_fields(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let mut mark = |present: bool, name| {
            if present {
                out.push(name);
            }
        };
        mark(!self.of.is_empty(), "of");
        mark(self.sheaf.is_some(), "sheaf");
        mark(self.class.is_some(), "class");
        mark(self.p.is_some(), "p");
        mark(self.n.is_some(), "n");
        mark(self.rule.is_some(), "rule");
        mark(self.rank.is_some(), "rank");
        mark(self.c1.is_some(), "c1");
        mark(self.c2.is_some(), "c2");
        mark(!self.curve.is_empty(), "curve");
        mark(!self.points.is_empty(), "points");
        mark(self.parabolic.is_some(), "parabolic");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct PieceSpec {
    pub weight: Num,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub ranks: BTreeMap<String, u32>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub degrees: BTreeMap<String, Num>,
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ParabolicDecl {
    pub name: Spanned<String>,
    pub rank: u32,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub c1: Vec<Num>,
    #[serde(default)]
    pub c2: Num,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pieces: Vec<PieceSpec>,
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct QueryDecl {
    pub name: Spanned<String>,
    pub op: Spanned<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub args: Option<Spanned<toml::Table>>,
}

/// The document as written, before any geometry is built.
#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub surface: SurfaceBlock,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rootstack: Option<RootStackBlock>,
    #[serde(default, rename = "parabolic", skip_serializing_if = "Vec::is_empty")]
    pub parabolics: Vec<ParabolicDecl>,
    #[serde(default, rename = "sheaf", skip_serializing_if = "Vec::is_empty")]
    pub sheaves: Vec<SheafDecl>,
    #[serde(default, rename = "query", skip_serializing_if = "Vec::is_empty")]
    pub queries: Vec<QueryDecl>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    SyntaxError,
    UnknownKey,
    ForwardReference,
    ValidationError,
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ErrorKind::SyntaxError => "SyntaxError",
            ErrorKind::UnknownKey => "UnknownKey",
            ErrorKind::ForwardReference => "ForwardReference",
            ErrorKind::ValidationError => "ValidationError",
        })
    }
}

/// First problem found in a scenario, with a 1-based position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioError {
    pub kind: ErrorKind,
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ScenarioError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}: {}", self.line, self.col, self.kind, self.message)
    }
}

impl std::error::Error for ScenarioError {}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let offset = offset.min(text.len());
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let start = before.rfind('\n').map_or(0, |i| i + 1);
    (line, before[start..].chars().count() + 1)
}

struct Located<'a> {
    text: &'a str,
}

impl Located<'_> {
    fn err(&self, kind: ErrorKind, span: Range<usize>, message: impl Into<String>) -> ScenarioError {
        let (line, col) = line_col(self.text, span.start);
        ScenarioError {
            kind,
            line,
            col,
            message: message.into(),
        }
    }
}

/// A named query, with arguments already checked against the scenario.
#[derive(Clone, Debug, PartialEq)]
pub struct Query {
    pub name: String,
    pub op_name: String,
    pub args: toml::Table,
    pub op: Op,
}

/// A validated scenario: the document together with the root stack and the
/// sheaves it defines.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub document: Document,
    pub model: Arc<RootStackModel<Rat>>,
    pub sheaves: BTreeMap<String, OrbSheaf<Rat>>,
    pub parabolics: BTreeMap<String, ParabolicSheaf<Rat>>,
    pub queries: Vec<Query>,
}

impl PartialEq for Scenario {
    fn eq(&self, other: &Self) -> bool {
        self.document == other.document
    }
}

/// Renders the document back to TOML. Parsing the output yields an equal
/// scenario.
pub fn render_scenario(s: &Scenario) -> String {
    toml::to_string(&s.document).expect("scenario documents always serialize")
}

pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let at = Located { text };
    if let Err(e) = text.parse::<toml::Table>() {
        return Err(at.err(ErrorKind::SyntaxError, e.span().unwrap_or(0..0), e.message()));
    }
    let document: Document = toml::from_str(text).map_err(|e| {
        let kind = if e.message().contains("unknown field") {
            ErrorKind::UnknownKey
        } else {
            ErrorKind::ValidationError
        };
        at.err(kind, e.span().unwrap_or(0..0), e.message())
    })?;
    build(&at, document)
}

fn nums(v: &[Num]) -> Vec<Rat> {
    v.iter().map(|n| n.0.clone()).collect()
}

fn build(at: &Located, document: Document) -> Result<Scenario, ScenarioError> {
    use ErrorKind::*;
    let surface = &document.surface;
    let gram_span = surface.gram.span();
    let divisors = surface
        .divisors
        .iter()
        .map(|(name, c)| (name.clone(), DivClass::new(nums(c))))
        .collect();
    let base = SurfaceModel::new(
        surface.gram.get_ref().iter().map(|row| nums(row)).collect(),
        DivClass::new(nums(&surface.h)),
        DivClass::new(nums(&surface.k)),
        surface.euler.as_ref().map(|n| n.0.clone()),
        divisors,
    )
    .map_err(|e| at.err(ValidationError, gram_span.clone(), format!("surface: {e}")))?;

    let (r, branch, crossings, rs_span) = match &document.rootstack {
        None => (1, Vec::new(), BTreeMap::new(), gram_span.clone()),
        Some(block) => {
            let mut crossings = BTreeMap::new();
            for c in &block.crossings {
                let pair = c.pair.get_ref();
                if pair.len() != 2 {
                    return Err(at.err(ValidationError, c.pair.span(), "a crossing names exactly two components"));
                }
                crossings.insert((pair[0].clone(), pair[1].clone()), c.points);
            }
            (*block.r.get_ref(), block.branch.clone(), crossings, block.r.span())
        }
    };
    let names: Vec<&str> = branch.iter().map(String::as_str).collect();
    let model = Arc::new(
        RootStackModel::new(base, r, &names, &crossings)
            .map_err(|e| at.err(ValidationError, rs_span, format!("rootstack: {e}")))?,
    );

    let mut parabolics = BTreeMap::new();
    let mut parabolic_pos = BTreeMap::new();
    for decl in &document.parabolics {
        let name = decl.name.get_ref().clone();
        if parabolics.contains_key(&name) {
            return Err(at.err(ValidationError, decl.name.span(), format!("parabolic `{name}` defined twice")));
        }
        let p = build_parabolic(&model, decl)
            .map_err(|m| at.err(ValidationError, decl.name.span(), format!("parabolic `{name}`: {m}")))?;
        parabolics.insert(name.clone(), p);
        parabolic_pos.insert(name, decl.name.span().start);
    }

    let mut sheaves: BTreeMap<String, OrbSheaf<Rat>> = BTreeMap::new();
    let mut sheaf_pos = BTreeMap::new();
    for decl in &document.sheaves {
        let name = decl.name.get_ref().clone();
        let here = decl.name.span();
        if sheaves.contains_key(&name) {
            return Err(at.err(ValidationError, here, format!("sheaf `{name}` defined twice")));
        }
        for field in decl.present_fields() {
            if !decl.kind.fields().contains(&field) {
                return Err(at.err(
                    ValidationError,
                    here,
                    format!("sheaf kind `{}` does not take `{field}`", decl.kind.name()),
                ));
            }
        }
        let lookup = |r: &Spanned<String>| -> Result<&OrbSheaf<Rat>, ScenarioError> {
            sheaves.get(r.get_ref()).ok_or_else(|| {
                at.err(
                    ForwardReference,
                    r.span(),
                    format!("sheaf `{}` is not defined before `{name}`", r.get_ref()),
                )
            })
        };
        let invalid = |m: String| at.err(ValidationError, here.clone(), format!("sheaf `{name}`: {m}"));
        let required = |field: &str| invalid(format!("kind `{}` needs `{field}`", decl.kind.name()));
        let sheaf = match decl.kind {
            SheafKind::Line => {
                let c = decl.class.as_ref().ok_or_else(|| required("class"))?;
                let c = c.resolve(&model).map_err(&invalid)?;
                line_bundle(&model, &c).map_err(|e| invalid(e.to_string()))?
            }
            SheafKind::Sum | SheafKind::Tensor => {
                let (first, rest) = decl.of.split_first().ok_or_else(|| required("of"))?;
                let mut acc = lookup(first)?.clone();
                for other in rest {
                    let other = lookup(other)?;
                    acc = if decl.kind == SheafKind::Sum {
                        acc.direct_sum(other)
                    } else {
                        acc.tensor(other)
                    }
                    .map_err(|e| invalid(e.to_string()))?;
                }
                acc
            }
            SheafKind::Twist => {
                let e = lookup(decl.sheaf.as_ref().ok_or_else(|| required("sheaf"))?)?;
                let c = decl.class.as_ref().ok_or_else(|| required("class"))?;
                let c = c.resolve(&model).map_err(&invalid)?;
                e.twist(&c).map_err(|e| invalid(e.to_string()))?
            }
            SheafKind::Dual => lookup(decl.sheaf.as_ref().ok_or_else(|| required("sheaf"))?)?.dual(),
            SheafKind::Frobenius => {
                let e = lookup(decl.sheaf.as_ref().ok_or_else(|| required("sheaf"))?)?;
                let p = decl.p.ok_or_else(|| required("p"))?;
                frobenius_pullback(e, p, decl.n.unwrap_or(1), decl.rule.unwrap_or_default().into())
                    .map_err(|e| invalid(e.to_string()))?
            }
            SheafKind::Explicit => build_explicit(&model, decl).map_err(&invalid)?,
            SheafKind::Generating => default_generating_sheaf(&model)
                .map_err(|e| invalid(e.to_string()))?
                .sheaf()
                .clone(),
            SheafKind::Parabolic => {
                let r = decl.parabolic.as_ref().ok_or_else(|| required("parabolic"))?;
                let p = match parabolic_pos.get(r.get_ref()) {
                    Some(&pos) if pos < here.start => &parabolics[r.get_ref()],
                    _ => {
                        return Err(at.err(
                            ForwardReference,
                            r.span(),
                            format!("parabolic `{}` is not defined before `{name}`", r.get_ref()),
                        ))
                    }
                };
                parabolic_to_orb(&model, p).map_err(|e| invalid(e.to_string()))?
            }
        };
        sheaves.insert(name.clone(), sheaf);
        sheaf_pos.insert(name, here.start);
    }

    let mut queries = Vec::new();
    let mut seen = BTreeMap::new();
    for decl in &document.queries {
        let name = decl.name.get_ref().clone();
        if seen.insert(name.clone(), ()).is_some() {
            return Err(at.err(ValidationError, decl.name.span(), format!("query `{name}` defined twice")));
        }
        let args_span = decl.args.as_ref().map_or(decl.op.span(), |a| a.span());
        let args = decl.args.as_ref().map(|a| a.get_ref().clone()).unwrap_or_default();
        let op = Op::parse(decl.op.get_ref(), args.clone()).map_err(|(unknown, m)| {
            let kind = if unknown { UnknownKey } else { ValidationError };
            at.err(kind, args_span.clone(), format!("query `{name}`: {m}"))
        })?;
        let query_pos = decl.name.span().start;
        for reference in op.references() {
            let (target, pos) = match &reference {
                Reference::Sheaf(s) => (s, sheaf_pos.get(s)),
                Reference::Parabolic(s) => (s, parabolic_pos.get(s)),
            };
            if !matches!(pos, Some(&p) if p < query_pos) {
                return Err(at.err(
                    ForwardReference,
                    args_span.clone(),
                    format!("query `{name}` refers to `{target}`, which is not defined before it"),
                ));
            }
        }
        queries.push(Query {
            name,
            op_name: decl.op.get_ref().clone(),
            args,
            op,
        });
    }

    Ok(Scenario {
        document,
        model,
        sheaves,
        parabolics,
        queries,
    })
}

fn per_component<V: Clone>(
    model: &RootStackModel<Rat>,
    map: &BTreeMap<String, V>,
    zero: V,
) -> Result<Vec<V>, String> {
    let mut out = vec![zero; model.components()];
    for (name, v) in map {
        let i = model.component_index(name).map_err(|e| e.to_string())?;
        out[i] = v.clone();
    }
    Ok(out)
}

fn build_parabolic(model: &Arc<RootStackModel<Rat>>, decl: &ParabolicDecl) -> Result<ParabolicSheaf<Rat>, String> {
    let c1 = if decl.c1.is_empty() {
        DivClass::zero(model.rho())
    } else {
        DivClass::new(nums(&decl.c1))
    };
    let pieces = decl
        .pieces
        .iter()
        .map(|p| {
            Ok(ParabolicPiece {
                weight: p.weight.0.clone(),
                ranks: per_component(model, &p.ranks, 0)?,
                degrees: nums(&per_component(model, &p.degrees, Num::default())?),
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    ParabolicSheaf::new(model.clone(), decl.rank, c1, decl.c2.0.clone(), pieces).map_err(|e| e.to_string())
}

fn build_explicit(model: &Arc<RootStackModel<Rat>>, decl: &SheafDecl) -> Result<OrbSheaf<Rat>, String> {
    let rank = decl.rank.ok_or("kind `explicit` needs `rank`")?;
    let c1 = decl.c1.clone().unwrap_or_default().resolve(model)?;
    let c2 = decl.c2.clone().unwrap_or_default().0;
    let r = model.r() as usize;
    let mut curve = Vec::with_capacity(model.components());
    for lambda in 0..model.components() {
        let name = model.component_name(lambda);
        let spec = decl
            .curve
            .get(name)
            .ok_or_else(|| format!("no curve data for component `{name}`"))?;
        if spec.ranks.len() != r || spec.degrees.len() != r {
            return Err(format!("curve data for `{name}` must list {r} ranks and {r} degrees"));
        }
        curve.push(
            spec.ranks
                .iter()
                .zip(&spec.degrees)
                .map(|(&l, d)| EigenPiece::new(l, d.0.clone()))
                .collect(),
        );
    }
    for name in decl.curve.keys() {
        model.component_index(name).map_err(|e| e.to_string())?;
    }
    let mut points = BTreeMap::new();
    for p in &decl.points {
        if p.pair.len() != 2 {
            return Err("a point table names exactly two components".into());
        }
        let i = model.component_index(&p.pair[0]).map_err(|e| e.to_string())?;
        let j = model.component_index(&p.pair[1]).map_err(|e| e.to_string())?;
        let table = if i < j {
            p.table.clone()
        } else {
            (0..r).map(|b| p.table.iter().map(|row| row.get(b).copied().unwrap_or(0)).collect()).collect()
        };
        points.insert((i.min(j), i.max(j)), table);
    }
    OrbSheaf::explicit(model.clone(), rank, c1, c2, curve, points).map_err(|e| e.to_string())
}
