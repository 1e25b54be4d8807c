//! Machine checks of lemma statements on explicit groups and modules.
//!
//! Each registry entry pairs a hypothesis predicate with a conclusion
//! predicate. A check reports one of three outcomes: the hypothesis fails
//! (`hypothesis_not_met`), both hold (`pass`), or the hypothesis holds and
//! the conclusion fails (`FAIL`, always with a counterexample).

mod catalog;
mod checks;
mod explicit;
mod facts;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::arith::GkGraph;
use crate::bounds::Bounds;
use crate::construct::GroupSpec;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

pub use catalog::{
    default_catalog, gk_realizability_scan, run_catalog, Catalog, CatalogError, CatalogReport,
    FlaggedGroup, GraphWitnesses, RealizabilityScan, Summary,
};
pub use explicit::{explicit_computations, vs2_witness_check, Q8_F7_MATRICES};
pub use facts::{word, Counterexample, Fact, SubgroupProperty};

/// Registry of checkable statements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaId {
    Fed,
    FrobFaithful,
    FabSylow,
    HAbelCic,
    GSylowP,
    InducedFpf,
    FittingP,
    AuxPq,
    Vs2,
    /// Items 1 to 6.
    CutOrders(u8),
    /// Items 1 to 3.
    G2Q8(u8),
    V5or7,
    G2C2or21,
    S3Ea,
    RatS2,
}

impl LemmaId {
    pub const ALL: [LemmaId; 22] = [
        LemmaId::Fed,
        LemmaId::FrobFaithful,
        LemmaId::FabSylow,
        LemmaId::HAbelCic,
        LemmaId::GSylowP,
        LemmaId::InducedFpf,
        LemmaId::FittingP,
        LemmaId::AuxPq,
        LemmaId::Vs2,
        LemmaId::CutOrders(1),
        LemmaId::CutOrders(2),
        LemmaId::CutOrders(3),
        LemmaId::CutOrders(4),
        LemmaId::CutOrders(5),
        LemmaId::CutOrders(6),
        LemmaId::G2Q8(1),
        LemmaId::G2Q8(2),
        LemmaId::G2Q8(3),
        LemmaId::V5or7,
        LemmaId::G2C2or21,
        LemmaId::S3Ea,
        LemmaId::RatS2,
    ];

    pub fn name(&self) -> String {
        match self {
            LemmaId::Fed => "L-2.1-FED".into(),
            LemmaId::FrobFaithful => "L-2.2-FrobFaithful".into(),
            LemmaId::FabSylow => "L-2.3-FabSylow".into(),
            LemmaId::HAbelCic => "L-2.4-HAbelCic".into(),
            LemmaId::GSylowP => "L-2.5-GSylowp".into(),
            LemmaId::InducedFpf => "L-2.6-InducedFPF".into(),
            LemmaId::FittingP => "L-2.7-Fittingp".into(),
            LemmaId::AuxPq => "L-2.8-auxpq".into(),
            LemmaId::Vs2 => "T-2.9-VS2".into(),
            LemmaId::CutOrders(k) => format!("L-3.1-CutOrders({k})"),
            LemmaId::G2Q8(k) => format!("L-3.2-G2Q8({k})"),
            LemmaId::V5or7 => "L-3.3-V5or7".into(),
            LemmaId::G2C2or21 => "L-3.4-G2C2or21".into(),
            LemmaId::S3Ea => "L-3.5-S3EA".into(),
            LemmaId::RatS2 => "L-3.6-ratS2".into(),
        }
    }

    /// The conclusion being checked, in words.
    pub fn statement(&self) -> &'static str {
        match self {
            LemmaId::Fed => {
                "solvable, every normal abelian subgroup cyclic => normal E, D with F = ED = C_A(E/Z), \
                 Z = E∩D, D = C_G(E), Sylows of E cyclic of prime order or extraspecial of exponent q or 4, \
                 and D has a cyclic normal U with [D:U] <= 2 and C_D(U) = U"
            }
            LemmaId::FrobFaithful => "Frobenius, faithful module in coprime characteristic => every complement element fixes a nonzero vector",
            LemmaId::FabSylow => {
                "pi(G) = {2,p}, Sylow 2 = Q8, no elements of order 4p, p-elements real => F(G) is an abelian \
                 Sylow p-subgroup inverted by every involution"
            }
            LemmaId::HAbelCic => "V irreducible, V = W^G with H minimal, N normal in H over C_H(W) => W_N homogeneous, and N/C_H(W) cyclic if abelian",
            LemmaId::GSylowP => {
                "non-perfect, generated by p-elements, Sylow p of order p => G = G'⋊<a> with G' a p'-group, \
                 G' = <b : p ∤ |b|, |ab| = p>, and <a> acts fixed-point-freely on abelian G'"
            }
            LemmaId::InducedFpf => "V = Ind_H^S(W), V⋊S without elements of order pq => H contains every element of order q of S",
            LemmaId::FittingP => "solvable, b of prime order p, p ∤ |F(G)| => some x in F(G)\\1 has |bx| = p",
            LemmaId::AuxPq => "{p,q}-group with Sylow <b> of order p, q-elements x, y != 1 with |bx| = |by| = p => bx and y do not commute",
            LemmaId::Vs2 => "nontrivial rational 2-group, faithful F_p-module with the eigenvector property, p >= 5 => p = 5, G = Q8 wr K, V⋊G = MM wr K",
            LemmaId::CutOrders(1) => "cut => p-elements are rational when p = 1 mod 4",
            LemmaId::CutOrders(2) => "cut, G_p abelian => exp(G_p) divides p or 4",
            LemmaId::CutOrders(3) => "cut, G_p normal, no elements of order pq => G_q is Q8 or cyclic of order dividing q or 4",
            LemmaId::CutOrders(4) => "cut, G_2 cyclic => no elements of order 4p",
            LemmaId::CutOrders(5) => "cut, p = 1 mod 4, G_2 cyclic or Q8 => no elements of order 2p",
            LemmaId::CutOrders(_) => "cut, G_3 cyclic => no elements of order 21",
            LemmaId::G2Q8(1) => "cut, G_2 = Q8, |a| = 4p^n => every 2-element of N(<a>) commutes with a_p",
            LemmaId::G2Q8(2) => "cut, G_2 = Q8 => no elements of order 105 or 84",
            LemmaId::G2Q8(_) => "cut, G_2 = Q8, V a normal p-subgroup => C_{G_2}(V) is 1 or G_2",
            LemmaId::V5or7 => {
                "solvable cut, four GK edges, GK(G/N) != GK(G) for N != 1 => every nontrivial normal p-subgroup \
                 is an elementary abelian Sylow subgroup with p in {5, 7}"
            }
            LemmaId::G2C2or21 => "solvable cut, pi = {2,3,7}, G_2 and G_7 cyclic => G_2 = C2 or no elements of order 21",
            LemmaId::S3Ea => {
                "solvable cut with a normal Sylow of order 5 and GK inside 2-3-5 <=> G = (<a> x C)⋊<b>, |a| = 5, \
                 |b| = 4, a^b = a^2, C elementary abelian 3-group inverted by b"
            }
            LemmaId::RatS2 => {
                "solvable cut with a normal Sylow of order 7 and GK inside 3-2-7 => G = <a>⋊(<b> x Q), |a| = 7, \
                 |b| = 3, a^b = a^2, Q a rational 2-group"
            }
        }
    }

    /// Entries that need a module or subgroup supplied by the instance.
    pub fn needs_explicit_instance(&self) -> bool {
        matches!(self, LemmaId::HAbelCic | LemmaId::InducedFpf)
    }

    /// Expands `all` or a comma-separated list of ids; a prefix such as `L-3`,
    /// `L-3.1` or `L-3.1-CutOrders` selects every id it heads.
    pub fn select(list: &str) -> Result<Vec<LemmaId>> {
        let list = list.trim();
        if list.is_empty() || list == "all" {
            return Ok(Self::ALL.to_vec());
        }
        let mut out = Vec::new();
        for token in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let matched: Vec<LemmaId> = Self::ALL
                .iter()
                .copied()
                .filter(|id| {
                    let name = id.name();
                    name == token
                        || name
                            .strip_prefix(token)
                            .is_some_and(|rest| rest.starts_with(['-', '(', '.']))
                })
                .collect();
            if matched.is_empty() {
                return Err(Error::UnknownLemma(token.to_string()));
            }
            for id in matched {
                if !out.contains(&id) {
                    out.push(id);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s.trim())
            .ok_or_else(|| Error::UnknownLemma(s.to_string()))
    }
}

impl Serialize for LemmaId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for LemmaId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "hypothesis_not_met")]
    HypothesisNotMet,
    #[serde(rename = "FAIL")]
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::HypothesisNotMet => "hypothesis_not_met",
            Status::Fail => "FAIL",
        })
    }
}

/// A module for the subject group (or for a designated subgroup, where the
/// entry says so).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModuleSpec {
    /// One matrix per generator, rows acting on row vectors.
    Matrices {
        p: u32,
        matrices: Vec<Vec<Vec<i64>>>,
    },
    /// The natural permutation module on the points.
    Permutation { p: u32 },
}

impl ModuleSpec {
    pub fn p(&self) -> u32 {
        match self {
            ModuleSpec::Matrices { p, .. } | ModuleSpec::Permutation { p } => *p,
        }
    }
}

fn is_false(b: &bool) -> bool {
    !*b
}

/// Entry-specific data. Elements are words in the subject's generators
/// (`g0*g1^-1`), subgroups are lists of generating words.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normal: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleSpec>,
    /// Basis of a subspace of the module, as coordinate rows.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subspace: Option<Vec<Vec<u32>>>,
    /// Evaluate the conclusion even when the hypothesis fails. A `FAIL`
    /// then means only that the conclusion fails on the subject.
    #[serde(skip_serializing_if = "is_false")]
    pub conclusion_only: bool,
}

impl Params {
    pub fn is_empty(&self) -> bool {
        *self == Params::default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaInstance {
    pub lemma_id: LemmaId,
    pub subject: GroupSpec,
    #[serde(default, skip_serializing_if = "Params::is_empty")]
    pub params: Params,
}

impl LemmaInstance {
    pub fn new(lemma_id: LemmaId, subject: GroupSpec) -> Self {
        Self {
            lemma_id,
            subject,
            params: Params::default(),
        }
    }

    pub fn with_params(mut self, params: Params) -> Self {
        self.params = params;
        self
    }
}

/// Identifying data of a subject group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub spec: String,
    pub order: usize,
    pub classes: usize,
    pub gk: GkGraph,
}

impl Fingerprint {
    pub fn of(spec: impl Into<String>, g: &FiniteGroup) -> Self {
        Self {
            spec: spec.into(),
            order: g.order(),
            classes: g.classes().len(),
            gk: GkGraph::of_group(g),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub lemma_id: String,
    pub subject: Fingerprint,
    #[serde(default, skip_serializing_if = "Params::is_empty")]
    pub params: Params,
    pub status: Status,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    /// Computed values backing the verdict.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub evidence: Option<serde_json::Value>,
    /// Present only when timing was requested, so that reports stay reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl CheckReport {
    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Outcome of one evaluation before it is wrapped into a report.
pub(crate) enum Verdict {
    Pass(String),
    NotMet(String),
    Fail(Counterexample),
}

pub(crate) fn report_from(
    lemma_id: String,
    subject: Fingerprint,
    params: Params,
    verdict: Verdict,
    evidence: Option<serde_json::Value>,
) -> CheckReport {
    let (status, detail, counterexample) = match verdict {
        Verdict::Pass(d) => (Status::Pass, d, None),
        Verdict::NotMet(d) => (Status::HypothesisNotMet, d, None),
        Verdict::Fail(c) => (Status::Fail, c.summary.clone(), Some(c)),
    };
    CheckReport {
        lemma_id,
        subject,
        params,
        status,
        detail,
        counterexample,
        evidence,
        runtime_ms: None,
    }
}

/// Evaluates one instance.
pub fn check_lemma(inst: &LemmaInstance, bounds: &Bounds) -> Result<CheckReport> {
    let data = checks::GroupData::build(&inst.subject, bounds)?;
    checks::check_on(&data, inst.lemma_id, &inst.params, bounds)
}

/// Like [`check_lemma`], recording the elapsed time in the report.
pub fn check_lemma_timed(inst: &LemmaInstance, bounds: &Bounds) -> Result<CheckReport> {
    let start = Instant::now();
    let mut r = check_lemma(inst, bounds)?;
    r.runtime_ms = Some(start.elapsed().as_millis() as u64);
    Ok(r)
}

/// Re-verifies a `FAIL` report from its serialized content: every recorded
/// fact is recomputed on a freshly built subject, and search claims are
/// confirmed by re-running the check. Returns `false` if anything disagrees.
pub fn recheck(report: &CheckReport, bounds: &Bounds) -> Result<bool> {
    let Some(cx) = &report.counterexample else {
        return Ok(false);
    };
    if report.status != Status::Fail {
        return Ok(false);
    }
    let id: LemmaId = report.lemma_id.parse()?;
    let subject: GroupSpec = report.subject.spec.parse()?;
    let data = checks::GroupData::build(&subject, bounds)?;
    let module = if cx
        .facts
        .iter()
        .any(|f| matches!(f, Fact::FixedSpaceDim { .. }))
    {
        checks::subject_module(&data, &report.params)?
    } else {
        None
    };
    for fact in &cx.facts {
        if !facts::verify(&data.g, module.as_ref(), fact)? {
            return Ok(false);
        }
    }
    if cx.facts.iter().any(|f| matches!(f, Fact::Search { .. })) {
        let again = checks::check_on(&data, id, &report.params, bounds)?;
        if again.status != Status::Fail || again.counterexample.as_ref() != Some(cx) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in LemmaId::ALL {
            assert_eq!(id.name().parse::<LemmaId>().unwrap(), id);
        }
        assert!("L-9.9-None".parse::<LemmaId>().is_err());
    }

    #[test]
    fn family_selection() {
        assert_eq!(LemmaId::select("L-3.1").unwrap().len(), 6);
        assert_eq!(
            LemmaId::select("L-3.2-G2Q8,L-2.5-GSylowp").unwrap().len(),
            4
        );
        assert_eq!(LemmaId::select("all").unwrap().len(), 22);
        assert_eq!(LemmaId::select("L-3").unwrap().len(), 13);
        assert!(LemmaId::select("L-4").is_err());
        assert!(LemmaId::select("L-3.1-Cut").is_err());
    }

    #[test]
    fn instance_json_shape() {
        let inst = LemmaInstance::new(LemmaId::GSylowP, GroupSpec::Alt(4)).with_params(Params {
            p: Some(3),
            ..Default::default()
        });
        let s = serde_json::to_string(&inst).unwrap();
        assert_eq!(
            s,
            r#"{"lemma_id":"L-2.5-GSylowp","subject":"Alt(4)","params":{"p":3}}"#
        );
        let back: LemmaInstance = serde_json::from_str(&s).unwrap();
        assert_eq!(back, inst);
    }
}
