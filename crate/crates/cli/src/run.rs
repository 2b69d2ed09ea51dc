//! Query execution.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use orbisurf_core::geometry::{DivClass, StackyClass};
use orbisurf_core::riemannroch::{euler_char, modified_alphas, modified_hilbert};
use orbisurf_core::sheafdata::{condition_star_check, default_generating_sheaf, GeneratingSheafData, OrbSheaf};
use orbisurf_core::stability::{
    alpha_bound, beta, bogomolov_check, delta, hn_sum, higgs_min_char, kplus_membership,
    miyaoka_yau_check, parabolic_euler, parabolic_slope, restriction_threshold, slopes, thm39_check,
    thm_a1_check, thm_a3_check, thm_a5_checks, xi_class, BoundsInput, ClaimStatus, HNPolygon,
    StabilityClaim, Verdict,
};
use orbisurf_core::{Error, Rat};

use crate::query::{BoundsArgs, Op};
use crate::report::{QueryError, QueryReport, Report, Value};
use crate::scenario::{Num, Query, Scenario};

type Entries = Vec<(String, Value)>;

struct Outcome {
    entries: Entries,
    assumed: Vec<(String, String)>,
    notes: Vec<String>,
}

impl Outcome {
    fn of(entries: Entries) -> Self {
        Self {
            entries,
            assumed: Vec::new(),
            notes: Vec::new(),
        }
    }
}

fn entry(key: &str, v: Value) -> (String, Value) {
    (key.to_string(), v)
}

fn rat(key: &str, x: Rat) -> (String, Value) {
    entry(key, Value::Rat(x))
}

fn verdict(prefix: &str, v: Verdict<Rat>) -> Entries {
    let key = |s: &str| if prefix.is_empty() { s.to_string() } else { format!("{prefix}.{s}") };
    vec![
        (key("holds"), Value::Bool(v.holds)),
        (key("residual"), Value::Rat(v.residual)),
    ]
}

fn class_value(s: &Scenario, c: &StackyClass<Rat>) -> Value {
    Value::Class {
        base: c.base.coords().to_vec(),
        tilde: (0..s.model.components())
            .map(|i| (s.model.component_name(i).to_string(), c.stacky[i].clone()))
            .collect(),
    }
}

fn rats(v: &[Num]) -> Vec<Rat> {
    v.iter().map(|n| n.0.clone()).collect()
}

fn polarization(s: &Scenario, h: &Option<Vec<Num>>) -> Result<DivClass<Rat>, Error> {
    match h {
        None => Ok(s.model.base().h().clone()),
        Some(v) if v.len() == s.model.rho() => Ok(DivClass::new(rats(v))),
        Some(v) => Err(Error::DimensionMismatch {
            expected: s.model.rho(),
            found: v.len(),
        }),
    }
}

fn sheaf<'a>(s: &'a Scenario, name: &str) -> &'a OrbSheaf<Rat> {
    &s.sheaves[name]
}

fn generating(s: &Scenario, xi: &Option<String>) -> Result<GeneratingSheafData<Rat>, Error> {
    match xi {
        None => default_generating_sheaf(&s.model),
        Some(name) => GeneratingSheafData::new(sheaf(s, name).clone()),
    }
}

fn polygon(blocks: &[(u32, Num)]) -> Result<HNPolygon<Rat>, Error> {
    HNPolygon::new(blocks.iter().map(|(r, m)| (*r, m.0.clone())).collect())
}

fn bounds(a: &BoundsArgs) -> BoundsInput<Rat> {
    let mut b = BoundsInput::new(a.p, a.rk, a.rk_xi.0.clone(), a.hd.0.clone(), a.delta.0.clone());
    b.slope_terms = rats(&a.slope_terms);
    let opt = |x: &Option<Num>| x.as_ref().map(|n| n.0.clone());
    b.l_max = opt(&a.lmax);
    b.l_min = opt(&a.lmin);
    b.mu = opt(&a.mu);
    b.mu_max = opt(&a.mumax);
    b.mu_min = opt(&a.mumin);
    b
}

fn execute(s: &Scenario, op: &Op) -> Result<Outcome, Error> {
    let out = match op {
        Op::Chi(a) => Outcome::of(vec![rat("chi", euler_char(sheaf(s, &a.sheaf))?)]),
        Op::Hilbert(a) => {
            let e = sheaf(s, &a.sheaf);
            let xi = generating(s, &a.xi)?;
            let h = polarization(s, &a.h)?;
            let (a2, a1) = modified_alphas(e, &xi, &h)?;
            Outcome::of(vec![
                entry("poly", Value::Poly(modified_hilbert(e, &xi, &h)?)),
                rat("alpha2", a2),
                rat("alpha1", a1),
            ])
        }
        Op::Slope(a) => {
            let r = slopes(sheaf(s, &a.sheaf), &generating(s, &a.xi)?, &polarization(s, &a.h)?)?;
            Outcome::of(vec![
                rat("mu_xi", r.mu_xi),
                rat("deg", r.deg),
                rat("mu_orb", r.mu_orb),
                rat("deg_xi", r.deg_xi),
            ])
        }
        Op::Delta(a) => Outcome::of(vec![rat("delta", delta(sheaf(s, &a.sheaf)))]),
        Op::Bogomolov(a) => {
            let claim = StabilityClaim {
                semistable: a.semistable,
                strongly: a.strongly,
                characteristic: a.characteristic,
            };
            let r = bogomolov_check(sheaf(s, &a.sheaf), &claim);
            let status = match r.claim {
                ClaimStatus::NotApplicable => "not-applicable",
                ClaimStatus::Consistent => "consistent",
                ClaimStatus::Refuted => "refuted",
            };
            let mut entries = verdict("", r.verdict);
            entries.push(entry("claim", Value::Text(status.into())));
            let mut notes = Vec::new();
            if !claim.implies_bogomolov() {
                notes.push("the asserted hypotheses do not imply the inequality; the verdict is informational".into());
            }
            Outcome {
                entries,
                assumed: vec![
                    ("semistable".into(), a.semistable.to_string()),
                    ("strongly".into(), a.strongly.to_string()),
                    ("characteristic".into(), a.characteristic.to_string()),
                ],
                notes,
            }
        }
        Op::Hn(a) => Outcome::of(vec![rat("hn_sum", hn_sum(&polygon(&a.blocks)?))]),
        Op::Beta(a) => Outcome::of(vec![rat("beta", beta(&bounds(a))?)]),
        Op::AlphaBound(a) => Outcome::of(vec![rat("alpha_bound", alpha_bound(&bounds(a))?)]),
        Op::ThmA1(a) => {
            let poly = polygon(a.blocks.as_deref().unwrap_or_default())?;
            let mut entries = vec![rat("hn_sum", hn_sum(&poly))];
            entries.extend(verdict("", thm_a1_check(&poly, &bounds(a))?));
            Outcome::of(entries)
        }
        Op::ThmA3(a) => {
            let b = bounds(a);
            let mut entries = vec![rat("beta", beta(&b)?)];
            entries.extend(verdict("", thm_a3_check(&b)?));
            Outcome::of(entries)
        }
        Op::ThmA5(a) => {
            let (first, second) = thm_a5_checks(&bounds(a))?;
            let mut entries = verdict("limit", first);
            entries.extend(verdict("hn", second));
            Outcome::of(entries)
        }
        Op::Xi(a) => {
            let sub = a.sub_c1.resolve(&s.model).map_err(Error::InvalidArgument)?;
            let whole = a.c1.resolve(&s.model).map_err(Error::InvalidArgument)?;
            let xi = xi_class((a.sub_rank, &sub), (a.rank, &whole), &a.rk_xi.0)?;
            let h = s.model.pullback(s.model.base().h());
            Outcome::of(vec![
                rat("xi_h", s.model.stacky_intersect(&xi, &h)?),
                rat("xi_squared", s.model.stacky_intersect(&xi, &xi)?),
                entry("xi", class_value(s, &xi)),
            ])
        }
        Op::Kplus(a) => {
            let base = s.model.base();
            let d = polarization(s, &Some(a.d.clone()))?;
            let h = polarization(s, &a.h)?;
            Outcome::of(vec![
                entry("member", Value::Bool(kplus_membership(base, &d, &h)?)),
                rat("d_squared", base.intersect(&d, &d)?),
                rat("d_h", base.intersect(&d, &h)?),
            ])
        }
        Op::RestrictionThreshold(a) => {
            Outcome::of(vec![entry("m", Value::Int(restriction_threshold(&bounds(a))?))])
        }
        Op::HiggsMinChar(a) => {
            let b = higgs_min_char(a.rk, &a.rk_xi.0, &a.hd.0, &a.ha.0, &a.m.0, &a.delta.0)?;
            Outcome::of(vec![
                entry("min_q", Value::Int(b.min_q)),
                entry("min_prime", Value::Int(b.min_prime)),
                entry("already_nonnegative", Value::Bool(b.already_nonnegative)),
            ])
        }
        Op::MiyaokaYau(a) => {
            let mut notes = Vec::new();
            if !a.k_nef {
                notes.push("K is not asserted nef; the inequality need not hold".into());
            }
            Outcome {
                entries: verdict("", miyaoka_yau_check(s.model.base())?),
                assumed: vec![("k_nef".into(), a.k_nef.to_string())],
                notes,
            }
        }
        Op::PaSlope(a) => {
            let r = parabolic_slope(&s.parabolics[&a.parabolic], &polarization(s, &a.h)?)?;
            Outcome::of(vec![rat("padeg", r.padeg), rat("pamu", r.pamu)])
        }
        Op::PaChi(a) => {
            let p = parabolic_euler(&s.parabolics[&a.parabolic], &polarization(s, &a.h)?)?;
            Outcome::of(vec![entry("poly", Value::Poly(p))])
        }
        Op::Thm39(a) => {
            let r = thm39_check(&s.parabolics[&a.parabolic])?;
            let mut entries = vec![rat("lhs", r.lhs), rat("rhs", r.rhs)];
            entries.extend(verdict("", r.verdict));
            entries.push(rat("delta_w", r.delta_w));
            Outcome::of(entries)
        }
        Op::ConditionStar(a) => {
            Outcome::of(vec![entry("holds", Value::Bool(condition_star_check(sheaf(s, &a.sheaf))))])
        }
        Op::Frobenius(a) => {
            let e = sheaf(s, &a.sheaf);
            let f = e.frobenius_pullback(a.p, a.n, a.rule.into())?;
            let q = BigInt::from(a.p).pow(a.n);
            Outcome::of(vec![
                entry("q", Value::Int(q)),
                entry("rank", Value::Int(BigInt::from(f.rank()))),
                entry("c1", class_value(s, f.c1())),
                rat("c2", f.c2().clone()),
                rat("delta", delta(&f)),
                rat("delta_before", delta(e)),
            ])
        }
    };
    Ok(out)
}

pub fn run_query(s: &Scenario, q: &Query) -> QueryReport {
    let args = q.args.iter().map(|(k, v)| (k.clone(), v.to_string())).collect();
    let (outcome, assumed, notes) = match execute(s, &q.op) {
        Ok(o) => (Ok(o.entries), o.assumed, o.notes),
        Err(e) => (
            Err(QueryError {
                kind: e.kind().to_string(),
                message: match e {
                    Error::MissingField(f) => format!("missing argument `{}`", f.to_lowercase()),
                    e => e.to_string(),
                },
            }),
            Vec::new(),
            Vec::new(),
        ),
    };
    QueryReport {
        name: q.name.clone(),
        op: q.op_name.clone(),
        args,
        assumed,
        notes,
        outcome,
    }
}

/// Runs the selected queries (all when `only` is `None`). Queries are pure, so
/// they are spread over worker threads; the report keeps declaration order.
pub fn run(s: &Scenario, only: Option<&[String]>) -> Report {
    let selected: Vec<&Query> = s
        .queries
        .iter()
        .filter(|q| only.is_none_or(|names| names.contains(&q.name)))
        .collect();
    let slots: Vec<Mutex<Option<QueryReport>>> = selected.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(selected.len());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(q) = selected.get(i) else { break };
                *slots[i].lock().unwrap() = Some(run_query(s, q));
            });
        }
    });
    Report {
        queries: slots
            .into_iter()
            .map(|m| m.into_inner().unwrap().expect("every slot is filled"))
            .collect(),
    }
}
