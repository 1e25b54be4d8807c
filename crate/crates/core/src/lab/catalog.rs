//! Catalog runs: every applicable (group, entry) pair, evaluated in
//! parallel and merged in catalog order.

use std::collections::BTreeMap;
use std::hash::Hasher;
use std::time::Instant;

use rayon::prelude::*;
use rustc_hash::FxHasher;
use serde::{Deserialize, Serialize};

use super::checks::{check_on, vs2_instance_of, GroupData};
use super::{check_lemma, CheckReport, LemmaId, LemmaInstance, ModuleSpec, Params, Status};
use crate::arith::{named_graph, GkGraph, NAMED_GRAPHS};
use crate::bounds::Bounds;
use crate::construct::GroupSpec;
use crate::error::{Error, Result};

/// Groups plus explicit instances for entries that need a module or subgroup.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Catalog {
    #[serde(default)]
    pub groups: Vec<GroupSpec>,
    #[serde(default)]
    pub instances: Vec<LemmaInstance>,
}

impl Catalog {
    pub fn from_groups(groups: Vec<GroupSpec>) -> Self {
        Self {
            groups,
            instances: Vec::new(),
        }
    }

    /// Accepts a JSON object `{"groups": [...], "instances": [...]}`, a JSON
    /// array of spec strings, or one spec per line (`#` starts a comment).
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim_start();
        let json_err = |e: serde_json::Error| Error::InvalidInstance(format!("catalog JSON: {e}"));
        if t.starts_with('{') {
            return serde_json::from_str(t).map_err(json_err);
        }
        if t.starts_with('[') {
            let groups: Vec<GroupSpec> = serde_json::from_str(t).map_err(json_err)?;
            return Ok(Self::from_groups(groups));
        }
        let groups = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<GroupSpec>>>()?;
        Ok(Self::from_groups(groups))
    }
}

const DEFAULT_SPECS: &[&str] = &[
    // cyclic
    "Cyc(1)", "Cyc(2)", "Cyc(3)", "Cyc(4)", "Cyc(5)", "Cyc(6)", "Cyc(7)", "Cyc(8)", "Cyc(9)", "Cyc(10)",
    "Cyc(11)", "Cyc(12)", "Cyc(13)", "Cyc(14)", "Cyc(15)", "Cyc(16)", "Cyc(18)", "Cyc(20)", "Cyc(21)",
    "Cyc(24)", "Cyc(30)", "Cyc(32)", "Cyc(64)",
    // dihedral
    "Dih(4)", "Dih(6)", "Dih(8)", "Dih(10)", "Dih(12)", "Dih(14)", "Dih(16)", "Dih(18)", "Dih(20)",
    "Dih(22)", "Dih(24)", "Dih(26)", "Dih(28)", "Dih(30)", "Dih(32)", "Dih(36)", "Dih(40)", "Dih(42)",
    "Dih(48)", "Dih(64)",
    // quaternion
    "Quat(8)", "Quat(16)", "Quat(32)", "Quat(64)",
    // symmetric and alternating
    "Sym(2)", "Sym(3)", "Sym(4)", "Sym(5)", "Sym(6)", "Alt(3)", "Alt(4)", "Alt(5)", "Alt(6)",
    // elementary abelian
    "EA(2,2)", "EA(2,3)", "EA(2,4)", "EA(3,2)", "EA(3,3)", "EA(5,2)", "EA(7,2)",
    // named
    "MM", "W4200",
    // Frobenius and other semidirect products
    "SD(Cyc(7),Cyc(3),pow=2)",
    "SD(Cyc(5),Cyc(4),pow=2)",
    "SD(Cyc(7),Cyc(6),pow=3)",
    "SD(Cyc(11),Cyc(5),pow=3)",
    "SD(Cyc(13),Cyc(3),pow=3)",
    "SD(Cyc(13),Cyc(4),pow=5)",
    "SD(Cyc(15),Cyc(4),pow=2)",
    "SD(Cyc(9),Cyc(3),pow=4)",
    "SD(Cyc(5),Cyc(2),pow=4)",
    "SD(EA(2,2),Cyc(3),mats=[[[0,1],[1,1]]])",
    "SD(EA(2,3),Cyc(7),mats=[[[0,1,0],[0,0,1],[1,1,0]]])",
    "SD(EA(2,3),SD(Cyc(7),Cyc(3),pow=2),mats=[[[0,1,0],[0,0,1],[1,1,0]],[[1,0,0],[0,0,1],[0,1,1]]])",
    "SD(EA(2,4),Cyc(5),mats=[[[0,1,0,0],[0,0,1,0],[0,0,0,1],[1,1,1,1]]])",
    "SD(EA(3,2),Cyc(2),mats=[[[2,0],[0,2]]])",
    "SD(EA(3,2),Cyc(4),mats=[[[0,2],[1,0]]])",
    "SD(EA(3,2),Quat(8),mats=[[[0,2],[1,0]],[[1,1],[1,2]]])",
    "SD(EA(5,2),Cyc(4),mats=[[[0,4],[1,0]]])",
    "SD(EA(7,2),Quat(8),mats=[[[0,6],[1,0]],[[2,3],[3,5]]])",
    "SD(EA(3,1),SD(Cyc(5),Cyc(4),pow=2),mats=[[[1]],[[2]]])",
    "SD(EA(3,2),SD(Cyc(5),Cyc(4),pow=2),mats=[[[1,0],[0,1]],[[2,0],[0,2]]])",
    "SD(EA(3,3),SD(Cyc(5),Cyc(4),pow=2),mats=[[[1,0,0],[0,1,0],[0,0,1]],[[2,0,0],[0,2,0],[0,0,2]]])",
    "SD(Cyc(3),Quat(8),pow=2)",
    // direct products
    "DP(Quat(8),Cyc(3))",
    "DP(Quat(8),Cyc(2))",
    "DP(Sym(3),Cyc(2))",
    "DP(Sym(3),Cyc(3))",
    "DP(Sym(3),Sym(3))",
    "DP(Sym(3),Quat(8))",
    "DP(Alt(4),Cyc(2))",
    "DP(Sym(4),Cyc(2))",
    "DP(Sym(4),Sym(3))",
    "DP(SD(Cyc(7),Cyc(3),pow=2),Cyc(2))",
    "DP(SD(Cyc(7),Cyc(3),pow=2),Sym(3))",
    "DP(SD(Cyc(5),Cyc(4),pow=2),Sym(3))",
    "DP(MM,Cyc(2))",
    "DP(MM,Cyc(3))",
    "DP(MM,Sym(3))",
    "DP(Sym(5),Cyc(2))",
    "DP(Sym(4),MM)",
    // wreath products
    "Wr(Cyc(2),Cyc(2))",
    "Wr(Cyc(3),Cyc(2))",
    "Wr(Cyc(5),Cyc(2))",
    "Wr(Cyc(2),Cyc(3))",
    "Wr(Cyc(2),Sym(3))",
    "Wr(Sym(3),Cyc(2))",
    "Wr(Cyc(3),Sym(3))",
    "Wr(Quat(8),Cyc(2))",
    "Wr(Cyc(2),Sym(4))",
    "Wr(Alt(4),Cyc(2))",
    "Wr(Sym(3),Cyc(3))",
    "Wr(Sym(4),Cyc(2))",
    "Wr(Sym(3),Sym(3))",
    "Wr(Cyc(2),Quat(8))",
];

fn mats(rows: &[&[&[i64]]]) -> Vec<Vec<Vec<i64>>> {
    rows.iter()
        .map(|m| m.iter().map(|r| r.to_vec()).collect())
        .collect()
}

fn words(ws: &[&str]) -> Option<Vec<String>> {
    Some(ws.iter().map(|w| w.to_string()).collect())
}

/// `C_7 ⋊ C_3` on `F_8 = F_2[t]/(t³+t+1)`: the first generator multiplies by
/// `t`, the second is the Frobenius map.
fn f21_on_f8() -> Vec<Vec<Vec<i64>>> {
    mats(&[
        &[&[0, 1, 0], &[0, 0, 1], &[1, 1, 0]],
        &[&[1, 0, 0], &[0, 0, 1], &[0, 1, 1]],
    ])
}

/// Instances for entries that need explicit modules or subgroups.
fn curated_instances() -> Vec<LemmaInstance> {
    let c7c3 = GroupSpec::c7c3();
    let id3 = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
    vec![
        LemmaInstance::new(LemmaId::FrobFaithful, c7c3.clone()).with_params(Params {
            module: Some(ModuleSpec::Matrices {
                p: 2,
                matrices: f21_on_f8(),
            }),
            ..Default::default()
        }),
        LemmaInstance::new(LemmaId::HAbelCic, c7c3.clone()).with_params(Params {
            module: Some(ModuleSpec::Matrices {
                p: 2,
                matrices: f21_on_f8(),
            }),
            subgroup: words(&["g0", "g1"]),
            subspace: Some(id3),
            normal: words(&["g0"]),
            ..Default::default()
        }),
        LemmaInstance::new(LemmaId::HAbelCic, GroupSpec::Quat(8)).with_params(Params {
            module: Some(ModuleSpec::Matrices {
                p: 5,
                matrices: mats(&[&[&[0, 4], &[1, 0]], &[&[2, 0], &[0, 3]]]),
            }),
            subgroup: words(&["g0"]),
            subspace: Some(vec![vec![1, 2]]),
            normal: words(&["g0"]),
            ..Default::default()
        }),
        LemmaInstance::new(LemmaId::HAbelCic, GroupSpec::Sym(3)).with_params(Params {
            module: Some(ModuleSpec::Matrices {
                p: 7,
                matrices: mats(&[&[&[6, 0], &[1, 1]], &[&[0, 1], &[6, 6]]]),
            }),
            subgroup: words(&["g1"]),
            subspace: Some(vec![vec![3, 1]]),
            normal: words(&["g1"]),
            ..Default::default()
        }),
        LemmaInstance::new(LemmaId::InducedFpf, c7c3.clone()).with_params(Params {
            q: Some(7),
            subgroup: words(&["g0"]),
            module: Some(ModuleSpec::Matrices {
                p: 2,
                matrices: mats(&[&[&[0, 1, 0], &[0, 0, 1], &[1, 1, 0]]]),
            }),
            ..Default::default()
        }),
        LemmaInstance::new(LemmaId::InducedFpf, GroupSpec::Sym(3)).with_params(Params {
            q: Some(3),
            subgroup: words(&["g1"]),
            module: Some(ModuleSpec::Matrices {
                p: 7,
                matrices: mats(&[&[&[2]]]),
            }),
            ..Default::default()
        }),
        LemmaInstance::new(LemmaId::InducedFpf, GroupSpec::Sym(3)).with_params(Params {
            q: Some(2),
            subgroup: words(&["g1"]),
            module: Some(ModuleSpec::Matrices {
                p: 7,
                matrices: mats(&[&[&[2]]]),
            }),
            ..Default::default()
        }),
        LemmaInstance::new(LemmaId::Vs2, GroupSpec::Quat(8)).with_params(Params {
            module: Some(ModuleSpec::Matrices {
                p: 7,
                matrices: mats(&[&[&[0, 6], &[1, 0]], &[&[2, 3], &[3, 5]]]),
            }),
            ..Default::default()
        }),
        LemmaInstance::new(LemmaId::Vs2, GroupSpec::Cyc(2)).with_params(Params {
            module: Some(ModuleSpec::Matrices {
                p: 5,
                matrices: mats(&[&[&[4]]]),
            }),
            ..Default::default()
        }),
        LemmaInstance::new(LemmaId::GSylowP, GroupSpec::Alt(4)).with_params(Params {
            p: Some(3),
            ..Default::default()
        }),
    ]
}

/// The built-in catalog: small cyclic, dihedral, quaternion, symmetric and
/// alternating groups, the named groups, and assorted products of order at
/// most 20000, plus curated module instances.
pub fn default_catalog() -> Catalog {
    Catalog {
        groups: DEFAULT_SPECS
            .iter()
            .map(|s| s.parse().expect("built-in catalog specs parse"))
            .collect(),
        instances: curated_instances(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogError {
    pub spec: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lemma_id: Option<String>,
    pub kind: String,
    pub message: String,
}

impl CatalogError {
    fn new(spec: String, lemma_id: Option<String>, e: &Error) -> Self {
        Self {
            spec,
            lemma_id,
            kind: e.kind().to_string(),
            message: e.to_string(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub groups: usize,
    pub reports: usize,
    pub pass: usize,
    pub hypothesis_not_met: usize,
    #[serde(rename = "FAIL")]
    pub fail: usize,
    pub errors: usize,
    /// Pairs outside an entry's scope: entries needing explicit instances,
    /// or subjects above the entry's size bound.
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogReport {
    pub run_id: String,
    pub bounds: Bounds,
    pub seed: u64,
    pub reports: Vec<CheckReport>,
    pub errors: Vec<CatalogError>,
    pub summary: Summary,
}

impl CatalogReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// True when some report failed or some pair raised an error.
    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0 || self.summary.errors > 0
    }

    /// Reports of one entry with the given status.
    pub fn with_status<'a>(
        &'a self,
        id: LemmaId,
        status: Status,
    ) -> impl Iterator<Item = &'a CheckReport> + 'a {
        let name = id.name();
        self.reports
            .iter()
            .filter(move |r| r.lemma_id == name && r.status == status)
    }
}

#[derive(Default)]
struct Partial {
    reports: Vec<CheckReport>,
    errors: Vec<CatalogError>,
    skipped: usize,
}

fn timed(timing: bool, f: impl FnOnce() -> Result<CheckReport>) -> Result<CheckReport> {
    let start = Instant::now();
    let mut r = f()?;
    if timing {
        r.runtime_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(r)
}

fn run_group(spec: &GroupSpec, ids: &[LemmaId], bounds: &Bounds, timing: bool) -> Partial {
    let mut out = Partial::default();
    let data = match GroupData::build(spec, bounds) {
        Ok(d) => d,
        Err(e) => {
            out.errors
                .push(CatalogError::new(spec.to_string(), None, &e));
            return out;
        }
    };
    for &id in ids {
        let result = match id {
            LemmaId::HAbelCic | LemmaId::InducedFpf => {
                out.skipped += 1;
                continue;
            }
            LemmaId::Fed if data.g.order() > bounds.normal_scan_bound => {
                out.skipped += 1;
                continue;
            }
            LemmaId::Vs2 => match vs2_instance_of(spec) {
                None => {
                    out.skipped += 1;
                    continue;
                }
                Some((sub, module)) => {
                    let inst = LemmaInstance::new(id, sub).with_params(Params {
                        module: Some(module),
                        ..Default::default()
                    });
                    timed(timing, || check_lemma(&inst, bounds))
                }
            },
            _ => timed(timing, || check_on(&data, id, &Params::default(), bounds)),
        };
        match result {
            Ok(r) => out.reports.push(r),
            Err(e) => out
                .errors
                .push(CatalogError::new(spec.to_string(), Some(id.name()), &e)),
        }
    }
    out
}

fn run_id(catalog: &Catalog, ids: &[LemmaId], bounds: &Bounds) -> String {
    let mut h = FxHasher::default();
    let names: Vec<String> = ids.iter().map(LemmaId::name).collect();
    let key = serde_json::to_string(&(catalog, names, bounds)).expect("plain data serializes");
    h.write(key.as_bytes());
    format!("{:016x}", h.finish())
}

/// Runs every applicable pair. Group-level entries are evaluated on each
/// group; explicit instances run when their entry is selected. Errors are
/// recorded per pair and do not stop the run. Without `timing` the JSON
/// output is byte-identical across runs.
pub fn run_catalog(
    catalog: &Catalog,
    ids: &[LemmaId],
    bounds: &Bounds,
    timing: bool,
) -> CatalogReport {
    let mut parts: Vec<Partial> = catalog
        .groups
        .par_iter()
        .map(|spec| run_group(spec, ids, bounds, timing))
        .collect();
    let instance_parts: Vec<Partial> = catalog
        .instances
        .par_iter()
        .filter(|inst| ids.contains(&inst.lemma_id))
        .map(|inst| {
            let mut p = Partial::default();
            match timed(timing, || check_lemma(inst, bounds)) {
                Ok(r) => p.reports.push(r),
                Err(e) => p.errors.push(CatalogError::new(
                    inst.subject.to_string(),
                    Some(inst.lemma_id.name()),
                    &e,
                )),
            }
            p
        })
        .collect();
    parts.extend(instance_parts);

    let mut summary = Summary {
        groups: catalog.groups.len(),
        ..Default::default()
    };
    let mut reports = Vec::new();
    let mut errors = Vec::new();
    for p in parts {
        summary.skipped += p.skipped;
        reports.extend(p.reports);
        errors.extend(p.errors);
    }
    for r in &reports {
        match r.status {
            Status::Pass => summary.pass += 1,
            Status::HypothesisNotMet => summary.hypothesis_not_met += 1,
            Status::Fail => summary.fail += 1,
        }
    }
    summary.reports = reports.len();
    summary.errors = errors.len();
    CatalogReport {
        run_id: run_id(catalog, ids, bounds),
        bounds: *bounds,
        seed: bounds.seed,
        reports,
        errors,
        summary,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphWitnesses {
    pub graph: GkGraph,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub named: Option<String>,
    pub witnesses: Vec<String>,
}

/// A cut group that is not solvable, reported beside the solvable witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlaggedGroup {
    pub spec: String,
    pub graph: GkGraph,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub named: Option<String>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizabilityScan {
    /// Solvable cut groups grouped by prime graph.
    pub classes: Vec<GraphWitnesses>,
    pub flagged: Vec<FlaggedGroup>,
    pub main_witnessed: bool,
    /// Solvable cut witnesses for graphs (s) or (t).
    pub violations: Vec<String>,
    pub errors: Vec<CatalogError>,
}

fn name_of(graph: &GkGraph) -> Option<String> {
    NAMED_GRAPHS
        .iter()
        .find(|id| named_graph(id).is_ok_and(|g| &g == graph))
        .map(|id| id.to_string())
}

enum ScanItem {
    Solvable(String, GkGraph),
    Flagged(FlaggedGroup),
    Skip,
    Error(CatalogError),
}

/// Groups the solvable cut groups of a catalog by prime graph and checks
/// that graph (main) has a witness while (s) and (t) have none.
pub fn gk_realizability_scan(groups: &[GroupSpec], bounds: &Bounds) -> RealizabilityScan {
    let items: Vec<ScanItem> = groups
        .par_iter()
        .map(|spec| {
            let data = match GroupData::build(spec, bounds) {
                Ok(d) => d,
                Err(e) => return ScanItem::Error(CatalogError::new(spec.to_string(), None, &e)),
            };
            let r = data.rationality();
            if !r.is_cut {
                return ScanItem::Skip;
            }
            let graph = data.gk().clone();
            if data.solvable() {
                ScanItem::Solvable(spec.to_string(), graph)
            } else {
                let note = if r.is_rational_group {
                    "rational, not solvable"
                } else {
                    "cut, not solvable"
                };
                ScanItem::Flagged(FlaggedGroup {
                    spec: spec.to_string(),
                    named: name_of(&graph),
                    graph,
                    note: note.into(),
                })
            }
        })
        .collect();
    let mut by_graph: BTreeMap<GkGraph, Vec<String>> = BTreeMap::new();
    let mut flagged = Vec::new();
    let mut errors = Vec::new();
    for item in items {
        match item {
            ScanItem::Solvable(spec, graph) => by_graph.entry(graph).or_default().push(spec),
            ScanItem::Flagged(f) => flagged.push(f),
            ScanItem::Error(e) => errors.push(e),
            ScanItem::Skip => {}
        }
    }
    let classes: Vec<GraphWitnesses> = by_graph
        .into_iter()
        .map(|(graph, witnesses)| GraphWitnesses {
            named: name_of(&graph),
            graph,
            witnesses,
        })
        .collect();
    let main_witnessed = classes.iter().any(|c| c.named.as_deref() == Some("main"));
    let violations = classes
        .iter()
        .filter(|c| matches!(c.named.as_deref(), Some("s") | Some("t")))
        .map(|c| {
            format!(
                "graph ({}) witnessed by {}",
                c.named.as_deref().unwrap_or(""),
                c.witnesses.join(", ")
            )
        })
        .collect();
    RealizabilityScan {
        classes,
        flagged,
        main_witnessed,
        violations,
        errors,
    }
}
