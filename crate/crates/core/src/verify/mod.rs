//! Exact checks of the Genocchi/Fibonacci identities.
//!
//! Each registry entry names an identity, the parameters it ranges over and a
//! check that evaluates both sides exactly. A case passes when every
//! difference is the zero element of its ring; otherwise the first nonzero
//! differences are rendered as the witness.

mod classical;
mod context;
mod expansions;
mod outcome;
mod qseidel;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

pub use context::{Context, Perturbation};
pub use qseidel::Q_M_VALUES;

use crate::error::{Error, Result};
use crate::exec::Execution;
use outcome::Outcome;

pub type Params = BTreeMap<String, i64>;

pub(crate) fn arg(p: &Params, name: &str) -> i64 {
    p[name]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Polynomial,
    Functional,
    Series,
    Number,
    Table,
    Matrix,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Polynomial => "polynomial",
            Method::Functional => "functional",
            Method::Series => "series",
            Method::Number => "number",
            Method::Table => "table",
            Method::Matrix => "matrix",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Anomaly,
}

/// Which profile setting caps a parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    /// Classical index `n`.
    Classical,
    /// A sequence index read up to `2n`.
    ClassicalIndex,
    /// q-index `n`.
    Q,
    /// Truncation order of a classical series.
    ClassicalOrder,
    /// Truncation order of a series over Laurent polynomials.
    QOrder,
    /// Declared range only.
    Fixed,
}

#[derive(Clone, Copy, Debug)]
pub struct ParamSpec {
    pub name: &'static str,
    pub min: i64,
    pub max: i64,
    pub bound: Bound,
    pub excluded: &'static [i64],
    /// Upper limit relative to an earlier parameter: `value <= other + offset`.
    pub at_most: Option<(&'static str, i64)>,
}

const fn param(name: &'static str, min: i64, max: i64, bound: Bound) -> ParamSpec {
    ParamSpec {
        name,
        min,
        max,
        bound,
        excluded: &[],
        at_most: None,
    }
}

type CheckFn = fn(&Context, &Params) -> Outcome;

pub struct IdentitySpec {
    pub id: &'static str,
    pub method: Method,
    pub description: &'static str,
    pub params: &'static [ParamSpec],
    check: CheckFn,
}

use Bound::*;

const N_CLASSICAL: i64 = 60;
const N_Q: i64 = 16;

static REGISTRY: &[IdentitySpec] = &[
    IdentitySpec {
        id: "I1_1",
        method: Method::Series,
        description: "EGF 2z/(1+e^z) against g_n and G_2n",
        params: &[param("order", 1, 24, ClassicalOrder)],
        check: classical::i1_1,
    },
    IdentitySpec {
        id: "I1_REL",
        method: Method::Number,
        description: "G_2n = (-1)^n 2 (1 - 2^2n) B_2n",
        params: &[param("n", 1, N_CLASSICAL, Classical)],
        check: classical::i1_rel,
    },
    IdentitySpec {
        id: "I1_6",
        method: Method::Series,
        description: "sum F_n z^n/n! = -e^z sum F_n (-z)^n/n!",
        params: &[param("order", 1, 16, ClassicalOrder)],
        check: classical::i1_6,
    },
    IdentitySpec {
        id: "I1_7",
        method: Method::Series,
        description: "(1+e^z) even part = (e^z-1) odd part",
        params: &[param("order", 2, 16, ClassicalOrder)],
        check: classical::i1_7,
    },
    IdentitySpec {
        id: "I1_9",
        method: Method::Functional,
        description: "L(F_2n) = (-1)^(n-1) G_2n",
        params: &[param("n", 1, N_CLASSICAL, Classical)],
        check: classical::i1_9,
    },
    IdentitySpec {
        id: "I1_10",
        method: Method::Functional,
        description: "g_n = -L(F_n), n != 1",
        params: &[ParamSpec {
            excluded: &[1],
            ..param("n", 0, 2 * N_CLASSICAL, ClassicalIndex)
        }],
        check: classical::i1_10,
    },
    IdentitySpec {
        id: "I1_11",
        method: Method::Polynomial,
        description: "F_2n = sum a(n,k) F_2k+1",
        params: &[param("n", 1, N_CLASSICAL, Classical)],
        check: classical::i1_11,
    },
    IdentitySpec {
        id: "I2_2",
        method: Method::Functional,
        description: "M(F_2n+1) = (2n+1) B_2n",
        params: &[param("n", 0, N_CLASSICAL, Classical)],
        check: classical::i2_2,
    },
    IdentitySpec {
        id: "I2_3",
        method: Method::Polynomial,
        description: "F_2n+1 in the even Fibonacci basis",
        params: &[param("n", 0, N_CLASSICAL, Classical)],
        check: classical::i2_3,
    },
    IdentitySpec {
        id: "I2_4",
        method: Method::Number,
        description: "v. Ettingshausen-Seidel-Kaneko identity",
        params: &[param("n", 0, N_CLASSICAL, Classical)],
        check: classical::i2_4,
    },
    IdentitySpec {
        id: "I2_5",
        method: Method::Polynomial,
        description: "alternating binomial sums of F vanish",
        params: &[param("n", 0, N_CLASSICAL, Classical)],
        check: classical::i2_5,
    },
    IdentitySpec {
        id: "I2_6",
        method: Method::Number,
        description: "sum C(n,2i+1) B_2n-2i-1 = 0, n != 1",
        params: &[ParamSpec {
            excluded: &[1],
            ..param("n", 0, N_CLASSICAL, Classical)
        }],
        check: classical::i2_6,
    },
    IdentitySpec {
        id: "I2_7",
        method: Method::Number,
        description: "Bernoulli difference identity",
        params: &[param("n", 1, N_CLASSICAL, Classical)],
        check: classical::i2_7,
    },
    IdentitySpec {
        id: "I2_9",
        method: Method::Functional,
        description: "V(f(1-x)) = V(f(x))",
        params: &[param("n", 0, context::V_DEGREE as i64, Classical)],
        check: classical::i2_9,
    },
    IdentitySpec {
        id: "I3_34",
        method: Method::Table,
        description: "Seidel triangle rows as partial sums",
        params: &[param("i", 1, N_CLASSICAL, Classical)],
        check: classical::i3_34,
    },
    IdentitySpec {
        id: "I3_56",
        method: Method::Functional,
        description: "triangle entries as L-values",
        params: &[param("n", 0, N_CLASSICAL, Classical)],
        check: classical::i3_56,
    },
    IdentitySpec {
        id: "I3_7",
        method: Method::Functional,
        description: "H_2n+1 = (-1)^n L(s^n)",
        params: &[param("n", 0, N_CLASSICAL, Classical)],
        check: classical::i3_7,
    },
    IdentitySpec {
        id: "I3_8",
        method: Method::Functional,
        description: "sum C(k,j) g_n+j = (-1)^(n+k-1) L(s^k F_n-k)",
        params: &[
            param("n", 0, N_CLASSICAL, Classical),
            ParamSpec {
                at_most: Some(("n", 1)),
                ..param("k", 0, N_CLASSICAL + 1, Fixed)
            },
        ],
        check: classical::i3_8,
    },
    IdentitySpec {
        id: "I3_9",
        method: Method::Number,
        description: "Seidel identity",
        params: &[param("n", 0, N_CLASSICAL, Classical)],
        check: classical::i3_9,
    },
    IdentitySpec {
        id: "I3_10",
        method: Method::Number,
        description: "median Genocchi numbers from g_n and G_2n",
        params: &[param("n", 0, N_CLASSICAL, Classical)],
        check: classical::i3_10,
    },
    IdentitySpec {
        id: "I3_11",
        method: Method::Series,
        description: "ordinary generating function of G_2n via H_2n+1",
        params: &[param("order", 1, 20, ClassicalOrder)],
        check: classical::i3_11,
    },
    IdentitySpec {
        id: "I4_TRI",
        method: Method::Functional,
        description: "q-triangle recursion against q-L values",
        params: &[param("n", 0, N_Q, Q)],
        check: qseidel::i4_tri,
    },
    IdentitySpec {
        id: "I4_89",
        method: Method::Table,
        description: "q-triangle rows as weighted partial sums",
        params: &[param("n", 1, N_Q, Q)],
        check: qseidel::i4_89,
    },
    IdentitySpec {
        id: "I4_12_14",
        method: Method::Functional,
        description: "q-L values of s F_2n, F_2n and s^n",
        params: &[param("n", 1, N_Q, Q)],
        check: qseidel::i4_12_14,
    },
    IdentitySpec {
        id: "I4_15",
        method: Method::Polynomial,
        description: "alternating Gaussian sums of F(s,q) and F(s,1/q) vanish",
        params: &[param("n", 0, N_Q, Q)],
        check: qseidel::i4_15,
    },
    IdentitySpec {
        id: "I4_17",
        method: Method::Polynomial,
        description: "q-Seidel identity",
        params: &[param("n", 1, N_Q, Q)],
        check: qseidel::i4_17,
    },
    IdentitySpec {
        id: "I4_18",
        method: Method::Polynomial,
        description: "generalized alternating Gaussian sum",
        params: &[param("m", -1, 3, Fixed), param("n", 0, 8, Q)],
        check: qseidel::i4_18,
    },
    IdentitySpec {
        id: "I4_19",
        method: Method::Polynomial,
        description: "q-Fibonacci recursion for m in Z",
        params: &[param("m", -1, 6, Fixed)],
        check: qseidel::i4_19,
    },
    IdentitySpec {
        id: "I4_20",
        method: Method::Polynomial,
        description: "H_2n+1(q) from G_2n(q)",
        params: &[param("n", 2, N_Q, Q)],
        check: qseidel::i4_20,
    },
    IdentitySpec {
        id: "I4_21",
        method: Method::Series,
        description: "ordinary generating function of G_2n(q)",
        params: &[param("order", 1, 12, QOrder)],
        check: qseidel::i4_21,
    },
    IdentitySpec {
        id: "I4_SM",
        method: Method::Matrix,
        description: "q-Seidel matrix recursion, closed form and q-L form",
        params: &[param("k", 0, qseidel::SM_DEPTH as i64, Q)],
        check: qseidel::i4_sm,
    },
    IdentitySpec {
        id: "I4_26",
        method: Method::Functional,
        description: "q-analogue of the v. Ettingshausen-Seidel-Kaneko identity",
        params: &[param("n", 0, N_Q, Q)],
        check: qseidel::i4_26,
    },
    IdentitySpec {
        id: "I5_1",
        method: Method::Polynomial,
        description: "vanishing first-column sum",
        params: &[param("n", 1, N_Q, Q)],
        check: expansions::i5_1,
    },
    IdentitySpec {
        id: "I5_2",
        method: Method::Polynomial,
        description: "G_2n(q) from the first column",
        params: &[param("n", 1, N_Q, Q)],
        check: expansions::i5_2,
    },
    IdentitySpec {
        id: "I5_3",
        method: Method::Polynomial,
        description: "F_m+2n(s,q) addition formula",
        params: &[param("m", 0, 4, Fixed), param("n", 0, 8, Q)],
        check: expansions::i5_3,
    },
    IdentitySpec {
        id: "I5_4",
        method: Method::Table,
        description: "q-triangle relation from the F_2n+1 expansion",
        params: &[param("n", 1, N_Q, Q)],
        check: expansions::i5_4,
    },
    IdentitySpec {
        id: "I5_56",
        method: Method::Polynomial,
        description: "Andrews-type expansions in F(s,q)",
        params: &[param("m", -1, 3, Fixed), param("n", 0, 6, Q)],
        check: expansions::i5_56,
    },
    IdentitySpec {
        id: "I5_78",
        method: Method::Polynomial,
        description: "Andrews-type expansions in F(s,1/q)",
        params: &[param("m", -1, 3, Fixed), param("n", 0, 6, Q)],
        check: expansions::i5_78,
    },
    IdentitySpec {
        id: "I5_9",
        method: Method::Polynomial,
        description: "first column against rows 2n and 2n+1",
        params: &[param("m", -1, 3, Fixed), param("n", 0, 6, Q)],
        check: expansions::i5_9,
    },
];

pub fn registry() -> &'static [IdentitySpec] {
    REGISTRY
}

pub fn lookup(id: &str) -> Result<&'static IdentitySpec> {
    REGISTRY
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Parameter caps for a verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Profile {
    pub name: String,
    pub classical_n: i64,
    pub q_n: i64,
    pub series_order: i64,
    pub q_series_order: i64,
}

impl Profile {
    pub fn quick() -> Self {
        Profile {
            name: "quick".into(),
            classical_n: 12,
            q_n: 6,
            series_order: 16,
            q_series_order: 8,
        }
    }

    pub fn full() -> Self {
        Profile {
            name: "full".into(),
            classical_n: 30,
            q_n: 12,
            series_order: 24,
            q_series_order: 12,
        }
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "quick" => Some(Self::quick()),
            "full" => Some(Self::full()),
            _ => None,
        }
    }

    /// Caps every index parameter (not truncation orders) at `n`.
    pub fn with_max_n(mut self, n: i64) -> Self {
        self.classical_n = n;
        self.q_n = n;
        self
    }

    fn cap(&self, p: &ParamSpec) -> i64 {
        let c = match p.bound {
            Classical => self.classical_n,
            ClassicalIndex => 2 * self.classical_n,
            Q => self.q_n,
            ClassicalOrder => self.series_order,
            QOrder => self.q_series_order,
            Fixed => p.max,
        };
        c.min(p.max)
    }
}

impl IdentitySpec {
    /// All parameter sets this profile runs, in lexicographic order.
    pub fn cases(&self, profile: &Profile) -> Vec<Params> {
        let mut out = vec![Params::new()];
        for p in self.params {
            let cap = profile.cap(p);
            out = out
                .into_iter()
                .flat_map(|base| {
                    let hi = match p.at_most {
                        Some((other, off)) => cap.min(base[other] + off),
                        None => cap,
                    };
                    (p.min..=hi)
                        .filter(|v| !p.excluded.contains(v))
                        .map(move |v| {
                            let mut m = base.clone();
                            m.insert(p.name.to_string(), v);
                            m
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
        }
        out
    }

    fn validate(&self, params: &Params) -> Result<()> {
        for name in params.keys() {
            if !self.params.iter().any(|p| p.name == name) {
                return Err(Error::UnknownParam {
                    id: self.id.into(),
                    name: name.clone(),
                });
            }
        }
        for p in self.params {
            let value = *params.get(p.name).ok_or_else(|| Error::MissingParam {
                id: self.id.into(),
                name: p.name.into(),
            })?;
            let max = match p.at_most {
                Some((other, off)) => p.max.min(params[other] + off),
                None => p.max,
            };
            if value < p.min || value > max || p.excluded.contains(&value) {
                return Err(Error::ParamOutOfRange {
                    id: self.id.into(),
                    name: p.name.into(),
                    value,
                    min: p.min,
                    max,
                });
            }
        }
        Ok(())
    }

    fn run(&self, ctx: &Context, params: &Params) -> IdentityCase {
        let outcome = (self.check)(ctx, params);
        let status = if !outcome.failures.is_empty() {
            Status::Fail
        } else if outcome.anomaly.is_some() {
            Status::Anomaly
        } else {
            Status::Pass
        };
        let mut notes = outcome.notes;
        notes.extend(outcome.anomaly);
        IdentityCase {
            id: self.id.to_string(),
            params: params.clone(),
            method: self.method,
            status,
            witness: (!outcome.failures.is_empty()).then(|| outcome.failures.join("; ")),
            note: (!notes.is_empty()).then(|| notes.join("; ")),
        }
    }
}

/// Context bounds `(classical, q)` large enough for the given cases.
fn context_size<'a>(
    cases: impl IntoIterator<Item = (&'a IdentitySpec, &'a Params)>,
) -> (usize, usize) {
    let (mut c, mut q) = (1i64, 1i64);
    for (spec, params) in cases {
        for p in spec.params {
            let v = params[p.name];
            match p.bound {
                Classical => c = c.max(v),
                ClassicalIndex | ClassicalOrder => c = c.max(v / 2 + 1),
                Q => q = q.max(v),
                QOrder => q = q.max(v / 2 + 1),
                Fixed => {}
            }
        }
    }
    (c as usize, q as usize)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCase {
    pub id: String,
    pub params: Params,
    pub method: Method,
    pub status: Status,
    pub witness: Option<String>,
    pub note: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub anomaly: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<IdentityCase>,
    pub totals: Totals,
    pub elapsed_ms: u64,
}

/// Checks one identity at one parameter set.
pub fn verify_identity(id: &str, params: &Params) -> Result<IdentityCase> {
    let spec = lookup(id)?;
    spec.validate(params)?;
    let (c, q) = context_size([(spec, params)]);
    Ok(spec.run(&Context::new(c, q), params))
}

/// Runs every case of `ids` under `profile`, optionally against perturbed
/// tables. Cases are reported in registry order whatever the execution mode.
pub fn verify_suite(
    ids: &[&str],
    profile: &Profile,
    perturbation: Option<Perturbation>,
    exec: Execution,
) -> Result<VerificationReport> {
    if ids.is_empty() {
        return Err(Error::UnknownIdentity(String::new()));
    }
    let wanted: BTreeSet<&str> = ids.iter().copied().collect();
    for id in &wanted {
        lookup(id)?;
    }
    let start = Instant::now();
    let jobs: Vec<(&IdentitySpec, Params)> = REGISTRY
        .iter()
        .filter(|s| wanted.contains(s.id))
        .flat_map(|s| s.cases(profile).into_iter().map(move |p| (s, p)))
        .collect();
    let (c, q) = context_size(jobs.iter().map(|(s, p)| (*s, p)));
    let mut ctx = Context::new(c, q);
    if let Some(p) = perturbation {
        ctx = ctx.with_perturbation(p);
    }
    let cases = exec.map(&jobs, |(spec, params)| spec.run(&ctx, params));
    Ok(VerificationReport::new(profile.name.clone(), cases, start))
}

/// Every registered identity over `profile`.
pub fn verify_all(profile: &Profile, exec: Execution) -> VerificationReport {
    let ids: Vec<&str> = REGISTRY.iter().map(|s| s.id).collect();
    verify_suite(&ids, profile, None, exec).expect("registry ids are valid")
}

impl VerificationReport {
    fn new(suite: String, cases: Vec<IdentityCase>, start: Instant) -> Self {
        let mut totals = Totals {
            total: cases.len(),
            ..Totals::default()
        };
        for c in &cases {
            match c.status {
                Status::Pass => totals.pass += 1,
                Status::Fail => totals.fail += 1,
                Status::Anomaly => totals.anomaly += 1,
            }
        }
        VerificationReport {
            suite,
            cases,
            totals,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.totals.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Per-identity counts, then every failure and anomaly, then distinct notes.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let t = &self.totals;
        let _ = writeln!(
            out,
            "suite {}: {} cases, {} pass, {} fail, {} anomaly ({} ms)",
            self.suite, t.total, t.pass, t.fail, t.anomaly, self.elapsed_ms
        );
        let mut order: Vec<&str> = Vec::new();
        let mut counts: BTreeMap<&str, (Method, Totals)> = BTreeMap::new();
        for c in &self.cases {
            let e = counts.entry(&c.id).or_insert_with(|| {
                order.push(&c.id);
                (c.method, Totals::default())
            });
            e.1.total += 1;
            match c.status {
                Status::Pass => e.1.pass += 1,
                Status::Fail => e.1.fail += 1,
                Status::Anomaly => e.1.anomaly += 1,
            }
        }
        for id in &order {
            let (m, t) = counts[id];
            let _ = writeln!(
                out,
                "{id:<9} {:<10} cases {:>4}  pass {:>4}  fail {:>3}  anomaly {:>3}",
                m.as_str(),
                t.total,
                t.pass,
                t.fail,
                t.anomaly
            );
        }
        for c in &self.cases {
            let tag = match c.status {
                Status::Pass => continue,
                Status::Fail => "FAIL",
                Status::Anomaly => "ANOMALY",
            };
            let detail = c.witness.as_deref().or(c.note.as_deref()).unwrap_or("");
            let _ = writeln!(out, "{tag} {} {}: {detail}", c.id, render_params(&c.params));
        }
        let mut seen = BTreeSet::new();
        for c in &self.cases {
            if let Some(n) = &c.note {
                if c.status == Status::Pass && seen.insert((c.id.as_str(), n.as_str())) {
                    let _ = writeln!(out, "note {}: {n}", c.id);
                }
            }
        }
        out
    }
}

pub fn render_params(p: &Params) -> String {
    p.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests;
