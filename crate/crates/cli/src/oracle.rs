//! Built-in χ oracle: on the root stack of `(P², lines)` the line bundle
//! `O(Σ a_λ D̃_λ)` pushes forward to `O(Σ ⌊a_λ/r⌋)` on `P²`, whose Euler
//! characteristic is `(f+1)(f+2)/2`.

use orbisurf_core::geometry::standard::plane_root_stack;
use orbisurf_core::geometry::{DivClass, StackyClass};
use orbisurf_core::riemannroch::euler_char;
use orbisurf_core::sheafdata::line_bundle;
use orbisurf_core::{Rat, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCase {
    pub r: u32,
    pub twists: Vec<i64>,
    pub expected: Rat,
    pub computed: Result<Rat, String>,
}

impl OracleCase {
    pub fn passed(&self) -> bool {
        self.computed.as_ref() == Ok(&self.expected)
    }

    pub fn line(&self) -> String {
        let twists: Vec<String> = self.twists.iter().map(i64::to_string).collect();
        let computed = match &self.computed {
            Ok(x) => x.to_string(),
            Err(e) => format!("error: {e}"),
        };
        format!(
            "r={} twists=[{}] expected={} computed={} {}",
            self.r,
            twists.join(","),
            self.expected,
            computed,
            if self.passed() { "ok" } else { "MISMATCH" }
        )
    }
}

pub fn pushforward_chi(r: u32, twists: &[i64]) -> Rat {
    let f: i64 = twists.iter().map(|a| a.div_euclid(i64::from(r))).sum();
    Rat::from_frac((f + 1) * (f + 2), 2)
}

pub fn oracle_case(r: u32, twists: &[i64]) -> OracleCase {
    let computed = plane_root_stack::<Rat>(r, twists.len())
        .and_then(|rs| {
            let c = StackyClass::new(DivClass::zero(1), twists.iter().map(|&a| Rat::from_i64(a)).collect());
            euler_char(&line_bundle(&rs, &c)?)
        })
        .map_err(|e| e.to_string());
    OracleCase {
        r,
        twists: twists.to_vec(),
        expected: pushforward_chi(r, twists),
        computed,
    }
}

/// One line with `r ∈ {1,2,3,5}` and `k ∈ [-2r, 2r]`, then two lines meeting
/// once with `r ∈ {2,3}` and both twists in `[-r, r]`.
pub fn oracle_suite() -> Vec<OracleCase> {
    let mut out = Vec::new();
    for r in [1u32, 2, 3, 5] {
        let ri = i64::from(r);
        for k in -2 * ri..=2 * ri {
            out.push(oracle_case(r, &[k]));
        }
    }
    for r in [2u32, 3] {
        let ri = i64::from(r);
        for a in -ri..=ri {
            for b in -ri..=ri {
                out.push(oracle_case(r, &[a, b]));
            }
        }
    }
    out
}
