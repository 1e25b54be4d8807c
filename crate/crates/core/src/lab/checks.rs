//! Hypothesis and conclusion predicates for every registry entry.

use std::collections::{BTreeSet, HashSet};
use std::sync::{Arc, OnceLock};

use serde_json::json;

use super::facts::{word, words, Counterexample, Fact, SubgroupProperty};
use super::{report_from, CheckReport, Fingerprint, LemmaId, ModuleSpec, Params, Verdict};
use crate::arith::{
    group_rationality, order_spectrum, rationality_by_classes, GkGraph, GroupRationality,
};
use crate::bounds::Bounds;
use crate::construct::{construct, wreath_product, GroupSpec, MM_MATRICES};
use crate::dsl::eval_word;
use crate::error::{Error, Result};
use crate::fpmod::{right_transversal, ModuleAction, RowSpace};
use crate::group::{FiniteGroup, Subgroup};
use crate::numth::{gcd, is_power_of, is_prime, p_part, prime_divisors};

/// Largest subgroup whose full subgroup list is enumerated.
const SUBGROUP_LIST_LIMIT: usize = 512;

/// A constructed subject with lazily computed invariants shared by all checks.
pub(crate) struct GroupData {
    pub spec: String,
    pub g: Arc<FiniteGroup>,
    rationality: OnceLock<GroupRationality>,
    solvable: OnceLock<bool>,
    fitting: OnceLock<Subgroup>,
    spectrum: OnceLock<BTreeSet<u64>>,
    gk: OnceLock<GkGraph>,
}

impl GroupData {
    pub fn build(spec: &GroupSpec, bounds: &Bounds) -> Result<Self> {
        Ok(Self::from_group(spec.to_string(), construct(spec, bounds)?))
    }

    pub fn from_group(spec: String, g: FiniteGroup) -> Self {
        Self {
            spec,
            g: Arc::new(g),
            rationality: OnceLock::new(),
            solvable: OnceLock::new(),
            fitting: OnceLock::new(),
            spectrum: OnceLock::new(),
            gk: OnceLock::new(),
        }
    }

    pub fn rationality(&self) -> GroupRationality {
        *self.rationality.get_or_init(|| group_rationality(&self.g))
    }

    pub fn is_cut(&self) -> bool {
        self.rationality().is_cut
    }

    pub fn solvable(&self) -> bool {
        *self.solvable.get_or_init(|| self.g.is_solvable())
    }

    pub fn fitting(&self) -> &Subgroup {
        self.fitting.get_or_init(|| self.g.fitting())
    }

    pub fn spectrum(&self) -> &BTreeSet<u64> {
        self.spectrum.get_or_init(|| order_spectrum(&self.g))
    }

    pub fn gk(&self) -> &GkGraph {
        self.gk
            .get_or_init(|| GkGraph::from_spectrum(self.spectrum()))
    }

    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint {
            spec: self.spec.clone(),
            order: self.g.order(),
            classes: self.g.classes().len(),
            gk: self.gk().clone(),
        }
    }

    /// First element whose order is divisible by `n`.
    fn order_divisible_by(&self, n: u64) -> Option<usize> {
        if !self.spectrum().iter().any(|&o| o % n == 0) {
            return None;
        }
        (0..self.g.order()).find(|&i| self.g.element_order(i).is_multiple_of(n))
    }
}

pub(crate) struct Outcome {
    verdict: Verdict,
    evidence: Option<serde_json::Value>,
    /// Parameters with defaults filled in, echoed into the report.
    resolved: Option<Params>,
}

impl From<Verdict> for Outcome {
    fn from(verdict: Verdict) -> Self {
        Outcome {
            verdict,
            evidence: None,
            resolved: None,
        }
    }
}

fn pass(s: impl Into<String>) -> Result<Outcome> {
    Ok(Verdict::Pass(s.into()).into())
}

fn not_met(s: impl Into<String>) -> Result<Outcome> {
    Ok(Verdict::NotMet(s.into()).into())
}

fn fail(c: Counterexample) -> Result<Outcome> {
    Ok(Verdict::Fail(c).into())
}

/// Evaluates one entry on a built subject.
pub(crate) fn check_on(
    d: &GroupData,
    id: LemmaId,
    params: &Params,
    bounds: &Bounds,
) -> Result<CheckReport> {
    let out = match id {
        LemmaId::Fed => fed(d, params, bounds)?,
        LemmaId::FrobFaithful => frob_faithful(d, params)?,
        LemmaId::FabSylow => fab_sylow(d, params)?,
        LemmaId::HAbelCic => h_abel_cic(d, params, bounds)?,
        LemmaId::GSylowP => g_sylow_p(d, params)?,
        LemmaId::InducedFpf => induced_fpf(d, params, bounds)?,
        LemmaId::FittingP => fitting_p(d, params)?,
        LemmaId::AuxPq => aux_pq(d, params)?,
        LemmaId::Vs2 => vs2(d, params, bounds)?,
        LemmaId::CutOrders(k) => cut_orders(d, params, k)?,
        LemmaId::G2Q8(k) => g2_q8(d, params, k)?,
        LemmaId::V5or7 => v5_or_7(d, params)?,
        LemmaId::G2C2or21 => g2_c2_or_21(d, params)?,
        LemmaId::S3Ea => s3_ea(d)?,
        LemmaId::RatS2 => rat_s2(d, params)?,
    };
    let params = out.resolved.unwrap_or_else(|| params.clone());
    Ok(report_from(
        id.name(),
        d.fingerprint(),
        params,
        out.verdict,
        out.evidence,
    ))
}

/// Module for the subject group described by the parameters, if any.
pub(crate) fn subject_module(d: &GroupData, params: &Params) -> Result<Option<ModuleAction>> {
    params
        .module
        .as_ref()
        .map(|m| build_module(d.g.clone(), m))
        .transpose()
}

fn build_module(g: Arc<FiniteGroup>, m: &ModuleSpec) -> Result<ModuleAction> {
    match m {
        ModuleSpec::Matrices { p, matrices } => ModuleAction::from_rows(g, *p, matrices),
        ModuleSpec::Permutation { p } => ModuleAction::permutation_module(g, *p),
    }
}

fn missing(what: &str) -> Error {
    Error::InvalidInstance(format!("missing or malformed parameter: {what}"))
}

fn sub_from_words(g: &FiniteGroup, ws: &[String]) -> Result<Subgroup> {
    let idx = ws
        .iter()
        .map(|w| eval_word(g, w))
        .collect::<Result<Vec<_>>>()?;
    Ok(g.subgroup(&idx))
}

fn is_abelian_sub(g: &FiniteGroup, s: &Subgroup) -> bool {
    let gens = s.generators();
    gens.iter()
        .enumerate()
        .all(|(i, &a)| gens[i + 1..].iter().all(|&b| g.commute(a, b)))
}

fn cyclic_generator(g: &FiniteGroup, s: &Subgroup) -> Option<usize> {
    s.elements()
        .iter()
        .copied()
        .find(|&x| g.element_order(x) as usize == s.order())
}

fn exponent_sub(g: &FiniteGroup, s: &Subgroup) -> u64 {
    s.elements()
        .iter()
        .fold(1, |e, &x| crate::numth::lcm(e, g.element_order(x)))
}

fn is_q8(g: &FiniteGroup, s: &Subgroup) -> bool {
    s.order() == 8
        && !is_abelian_sub(g, s)
        && s.elements()
            .iter()
            .filter(|&&x| g.element_order(x) == 2)
            .count()
            == 1
}

fn is_p_element(g: &FiniteGroup, x: usize, p: u64) -> bool {
    is_power_of(g.element_order(x), p)
}

/// Class representatives whose order satisfies `pred`.
fn reps_where(g: &FiniteGroup, pred: impl Fn(u64) -> bool) -> Vec<usize> {
    g.classes()
        .representatives()
        .filter(|&r| pred(g.element_order(r)))
        .collect()
}

/// Subgroup generated by `elems`, keeping only the elements that enlarge it as generators.
fn generated_by(g: &FiniteGroup, elems: impl IntoIterator<Item = usize>) -> Subgroup {
    let mut s = g.trivial_subgroup();
    for x in elems {
        if !s.contains(x) {
            s = g.extend_subgroup(&s, x);
        }
    }
    s
}

/// Every subgroup of `within`, smallest first.
pub(crate) fn all_subgroups(g: &FiniteGroup, within: &Subgroup) -> Result<Vec<Subgroup>> {
    if within.order() > SUBGROUP_LIST_LIMIT {
        return Err(Error::bound(
            "order of a subgroup whose subgroups are listed",
            SUBGROUP_LIST_LIMIT,
        ));
    }
    let mut found = vec![g.trivial_subgroup()];
    let mut keys: HashSet<Vec<usize>> = HashSet::from([vec![0]]);
    let mut head = 0;
    while head < found.len() {
        let s = found[head].clone();
        for &x in within.elements() {
            if !s.contains(x) {
                let t = g.extend_subgroup(&s, x);
                if keys.insert(t.elements().to_vec()) {
                    found.push(t);
                }
            }
        }
        head += 1;
    }
    found.sort_by_key(|s| (s.order(), s.elements().to_vec()));
    Ok(found)
}

// ---------------------------------------------------------------------------
// Normal structure of groups whose normal abelian subgroups are cyclic

/// A normal abelian subgroup that is not cyclic, if one exists.
///
/// Such a subgroup exists iff one is generated by at most two classes of
/// elements of the same prime order: inside a non-cyclic normal abelian `A`,
/// some `Ω_1(A_p)` has rank at least 2, and either one class of it already
/// closes to rank 2 or a normal subgroup of order `p` plus one more class does.
fn noncyclic_normal_abelian(g: &FiniteGroup) -> Option<Subgroup> {
    let closures: Vec<(u64, Subgroup)> = reps_where(g, is_prime)
        .into_iter()
        .map(|r| (g.element_order(r), g.normal_closure(&[r])))
        .filter(|(_, n)| is_abelian_sub(g, n))
        .collect();
    for (_, n) in &closures {
        if cyclic_generator(g, n).is_none() {
            return Some(n.clone());
        }
    }
    for (i, (p, a)) in closures.iter().enumerate() {
        for (q, b) in &closures[i + 1..] {
            if p != q || a.is_subset_of(b) || b.is_subset_of(a) {
                continue;
            }
            let j = g.join(a, b);
            if is_abelian_sub(g, &j) && cyclic_generator(g, &j).is_none() {
                return Some(j);
            }
        }
    }
    None
}

/// Cyclic of prime order `q`, or extraspecial of exponent `q` or 4.
fn cyclic_or_extraspecial(g: &FiniteGroup, s: &Subgroup, q: u64) -> bool {
    if s.order() as u64 == q {
        return true;
    }
    let z = g.centralizer_in(s.generators(), s);
    if z.order() as u64 != q {
        return false;
    }
    if g.commutator_subgroup(s, s).elements() != z.elements() {
        return false;
    }
    if !s.elements().iter().all(|&x| z.contains(g.pow(x, q as i64))) {
        return false;
    }
    let e = exponent_sub(g, s);
    e == q || e == 4
}

fn fed(d: &GroupData, params: &Params, bounds: &Bounds) -> Result<Outcome> {
    let g = &d.g;
    if g.order() > bounds.normal_scan_bound {
        return Err(Error::bound(
            "group order for the normal abelian subgroup scan",
            bounds.normal_scan_bound,
        ));
    }
    if !params.conclusion_only {
        if !d.solvable() {
            return not_met("not solvable");
        }
        if let Some(a) = noncyclic_normal_abelian(g) {
            return not_met(format!(
                "normal abelian subgroup of order {} is not cyclic",
                a.order()
            ));
        }
    }
    let f = d.fitting();
    let zf = g.centralizer_in(f.generators(), f);
    let socle: Vec<usize> = zf
        .elements()
        .iter()
        .copied()
        .filter(|&x| {
            crate::numth::factorize(g.element_order(x))
                .iter()
                .all(|&(_, e)| e == 1)
        })
        .collect();
    let z = generated_by(g, socle);
    let a = g.centralizer(z.generators());
    for e in g.normal_subgroups_within(f) {
        if !z.is_subset_of(&e) {
            continue;
        }
        let dd = g.centralizer(e.generators());
        if !dd.is_subset_of(f) || g.intersection(&e, &dd).elements() != z.elements() {
            continue;
        }
        if e.order() * dd.order() != f.order() * z.order() {
            continue;
        }
        let ca: Vec<usize> = a
            .elements()
            .iter()
            .copied()
            .filter(|&x| {
                e.generators()
                    .iter()
                    .all(|&y| z.contains(g.commutator(x, y)))
            })
            .collect();
        if ca != f.elements() {
            continue;
        }
        let sylows_ok = prime_divisors(e.order() as u64).into_iter().all(|q| {
            let part: Vec<usize> = e
                .elements()
                .iter()
                .copied()
                .filter(|&x| is_p_element(g, x, q))
                .collect();
            let s = generated_by(g, part);
            cyclic_or_extraspecial(g, &s, q)
        });
        if !sylows_ok {
            continue;
        }
        let u = dd
            .elements()
            .iter()
            .map(|&x| g.cyclic_subgroup(x))
            .find(|u| {
                dd.order() <= 2 * u.order()
                    && g.is_normal(u)
                    && g.centralizer_in(u.generators(), &dd).elements() == u.elements()
            });
        if let Some(u) = u {
            let mut out: Outcome = Verdict::Pass(format!(
                "F = ED with |F| = {}, |E| = {}, |D| = {}, |Z| = {}, cyclic U of order {}",
                f.order(),
                e.order(),
                dd.order(),
                z.order(),
                u.order()
            ))
            .into();
            out.evidence = Some(json!({
                "F": f.order(), "E": e.order(), "D": dd.order(), "Z": z.order(), "U": u.order(),
                "E_generators": words(g, &e), "U_generator": word(g, u.generators().first().copied().unwrap_or(0)),
            }));
            return Ok(out);
        }
    }
    fail(Counterexample::search(format!(
        "no normal E between Z and F(G) satisfies all three items (|F| = {}, |Z| = {})",
        f.order(),
        z.order()
    )))
}

// ---------------------------------------------------------------------------
// Modules

fn least_coprime_prime(n: u64) -> u32 {
    (2..)
        .find(|&p| is_prime(p) && !n.is_multiple_of(p))
        .expect("primes are unbounded") as u32
}

fn frob_faithful(d: &GroupData, params: &Params) -> Result<Outcome> {
    let g = &d.g;
    let Some(dec) = g.frobenius_decomposition() else {
        return not_met("not a Frobenius group");
    };
    let spec = params.module.clone().unwrap_or(ModuleSpec::Permutation {
        p: least_coprime_prime(g.order() as u64),
    });
    let mut resolved = params.clone();
    resolved.module = Some(spec.clone());
    let m = build_module(g.clone(), &spec)?;
    let p = m.p();
    let with = |v: Verdict| Outcome {
        verdict: v,
        evidence: None,
        resolved: Some(resolved.clone()),
    };
    if !params.conclusion_only {
        if (g.order() as u64).is_multiple_of(p as u64) {
            return Ok(with(Verdict::NotMet(format!(
                "characteristic {p} divides the group order"
            ))));
        }
        if !m.is_faithful() {
            return Ok(with(Verdict::NotMet("module is not faithful".into())));
        }
    }
    let mut least = usize::MAX;
    for &x in dec.complement.elements() {
        let dim = m.fixed_space(x).dim();
        if dim == 0 {
            return Ok(with(Verdict::Fail(Counterexample::new(
                "a complement element acts without nonzero fixed vectors",
                vec![Fact::FixedSpaceDim {
                    element: word(g, x),
                    dim: 0,
                }],
            ))));
        }
        least = least.min(dim);
    }
    let mut out = with(Verdict::Pass(format!(
        "kernel of order {}, complement of order {}; every complement element fixes a nonzero vector of F_{p}^{}",
        dec.kernel.order(),
        dec.complement.order(),
        m.dim()
    )));
    out.evidence = Some(json!({
        "kernel": dec.kernel.order(), "complement": dec.complement.order(),
        "p": p, "dim": m.dim(), "least_fixed_dim": least,
    }));
    Ok(out)
}

/// `Σ_t W·t` over a right transversal of `h`.
fn translates(v: &ModuleAction, h: &Subgroup, w: &RowSpace) -> RowSpace {
    let g = v.group();
    let (reps, _) = right_transversal(g, h);
    let mut span = RowSpace::zero(v.p(), v.dim());
    for t in reps {
        for b in w.basis() {
            span.insert(&v.matrix(t).apply(b));
        }
    }
    span
}

/// `V ≅ W^G` for an `H`-invariant subspace `W`: the translates of `W` are
/// independent and fill `V`.
fn induces(v: &ModuleAction, h: &Subgroup, w: &RowSpace) -> bool {
    let index = v.group().order() / h.order();
    w.dim() * index == v.dim() && translates(v, h, w).dim() == v.dim()
}

fn h_abel_cic(d: &GroupData, params: &Params, bounds: &Bounds) -> Result<Outcome> {
    let g = &d.g;
    let Some(spec @ ModuleSpec::Matrices { .. }) = &params.module else {
        return Err(missing("module (matrices for the subject's generators)"));
    };
    let v = build_module(g.clone(), spec)?;
    let (p, dim) = (v.p(), v.dim());
    let h = sub_from_words(
        g,
        params
            .subgroup
            .as_deref()
            .ok_or_else(|| missing("subgroup"))?,
    )?;
    let n = sub_from_words(
        g,
        params.normal.as_deref().ok_or_else(|| missing("normal"))?,
    )?;
    let basis = params.subspace.clone().ok_or_else(|| missing("subspace"))?;
    if basis.iter().any(|b| b.len() != dim) {
        return Err(missing("subspace rows of the module dimension"));
    }
    let w = RowSpace::spanned_by(p, dim, basis);
    if gcd(p as u64, g.order() as u64) != 1 {
        return not_met(format!("characteristic {p} divides the group order"));
    }
    if !v.submodule_analysis(bounds)?.is_irreducible {
        return not_met("module is reducible");
    }
    if !h
        .generators()
        .iter()
        .all(|&x| w.basis().iter().all(|b| w.contains(&v.matrix(x).apply(b))))
    {
        return not_met("subspace is not invariant under the subgroup");
    }
    if !induces(&v, &h, &w) {
        return not_met("module is not induced from the subspace");
    }
    let sub_h = v.restrict(&h)?;
    let w_mod = sub_h.submodule_action(&w)?;
    let induced = w_mod.induce(g.clone(), &h, bounds)?;
    if !crate::fpmod::are_isomorphic(&v, &induced, bounds)? {
        return Err(Error::InvalidInstance(
            "translate criterion and isomorphism test disagree".into(),
        ));
    }
    for h2 in all_subgroups(g, &h)? {
        if h2.order() == h.order() {
            continue;
        }
        let index = g.order() / h2.order();
        if dim % index != 0 {
            continue;
        }
        let r = v.restrict(&h2)?;
        for w2 in r.minimal_submodules(bounds)? {
            if w2.dim() * index == dim && induces(&v, &h2, &w2) {
                return not_met(format!(
                    "module is already induced from a proper subgroup of order {}",
                    h2.order()
                ));
            }
        }
    }
    let k_elems: Vec<usize> = h
        .elements()
        .iter()
        .copied()
        .filter(|&x| w.basis().iter().all(|b| &v.matrix(x).apply(b) == b))
        .collect();
    let k = g.subgroup_from_elements(k_elems)?;
    if !n.is_subset_of(&h) || !k.is_subset_of(&n) || !g.is_normal_in(&n, &h) {
        return not_met("N is not a normal subgroup of H containing C_H(W)");
    }
    let w_n = v.restrict(&n)?.submodule_action(&w)?;
    let analysis = w_n.submodule_analysis(bounds)?;
    if !analysis.is_homogeneous {
        return fail(Counterexample::search(
            "W restricted to N is not homogeneous",
        ));
    }
    let ngens = n.generators();
    let abelian = ngens
        .iter()
        .all(|&a| ngens.iter().all(|&b| k.contains(g.commutator(a, b))));
    let quotient = n.order() / k.order();
    let cyclic = n
        .elements()
        .iter()
        .any(|&x| g.order_modulo(x, &k) as usize == quotient);
    if abelian && !cyclic {
        return fail(Counterexample::search("N/C_H(W) is abelian but not cyclic"));
    }
    let mut out: Outcome = Verdict::Pass(format!(
        "W_N homogeneous with {} minimal submodule(s); N/C_H(W) of order {} is {}",
        analysis.minimal_submodules.len(),
        quotient,
        if abelian { "cyclic" } else { "non-abelian" }
    ))
    .into();
    out.evidence = Some(json!({
        "H": h.order(), "N": n.order(), "C_H(W)": k.order(), "W_dim": w.dim(), "V_dim": dim,
    }));
    Ok(out)
}

fn induced_fpf(d: &GroupData, params: &Params, bounds: &Bounds) -> Result<Outcome> {
    let s = &d.g;
    let Some(ModuleSpec::Matrices { p, matrices }) = &params.module else {
        return Err(missing("module (matrices for the subgroup's generators)"));
    };
    let q = params.q.ok_or_else(|| missing("q"))?;
    if !is_prime(q) || q == *p as u64 {
        return Err(Error::InvalidInstance(format!(
            "q = {q} must be a prime other than p = {p}"
        )));
    }
    let h = sub_from_words(
        s,
        params
            .subgroup
            .as_deref()
            .ok_or_else(|| missing("subgroup"))?,
    )?;
    let hg = Arc::new(s.subgroup_as_group(&h));
    let w = ModuleAction::from_rows(hg, *p, matrices)?;
    let v = w.induce(s.clone(), &h, bounds)?;
    let sd = v.semidirect_perm_group(bounds)?;
    let pq = *p as u64 * q;
    let gg = &sd.group;
    if !params.conclusion_only {
        if let Some(x) = (0..gg.order()).find(|&x| gg.element_order(x) % pq == 0) {
            return not_met(format!(
                "V⋊S has an element of order {}",
                gg.element_order(x)
            ));
        }
    }
    let of_order_q: Vec<usize> = (0..s.order())
        .filter(|&x| s.element_order(x) == q)
        .collect();
    if of_order_q.is_empty() {
        return not_met(format!("S has no elements of order {q}"));
    }
    if let Some(&x) = of_order_q.iter().find(|&&x| !h.contains(x)) {
        return fail(Counterexample::new(
            format!("an element of order {q} lies outside H"),
            vec![
                Fact::ElementOrder {
                    element: word(s, x),
                    order: q,
                },
                Fact::Contains {
                    generators: words(s, &h),
                    element: word(s, x),
                    holds: false,
                },
            ],
        ));
    }
    let mut out: Outcome = Verdict::Pass(format!(
        "V = Ind_H^S(W) of dimension {}, |V⋊S| = {}; H contains all {} elements of order {q}",
        v.dim(),
        gg.order(),
        of_order_q.len()
    ))
    .into();
    out.evidence = Some(
        json!({"induced_dim": v.dim(), "semidirect_order": gg.order(), "faithful": sd.faithful}),
    );
    Ok(out)
}

// ---------------------------------------------------------------------------
// Element-order lemmas

fn fab_sylow(d: &GroupData, params: &Params) -> Result<Outcome> {
    let g = &d.g;
    let primes = g.prime_divisors();
    if primes.len() != 2 || primes[0] != 2 {
        return not_met(format!("prime divisors {primes:?} are not {{2, p}}"));
    }
    let p = primes[1];
    if !params.conclusion_only {
        if !is_q8(g, &g.sylow(2)) {
            return not_met("Sylow 2-subgroup is not Q8");
        }
        if let Some(x) = d.order_divisible_by(4 * p) {
            return not_met(format!("element of order {}", g.element_order(x)));
        }
        let cp = g.classes();
        if let Some(x) = (0..g.order())
            .find(|&x| is_p_element(g, x, p) && cp.class_of(x) != cp.class_of(g.inv(x)))
        {
            return not_met(format!("{p}-element {} is not real", word(g, x)));
        }
    }
    let f = d.fitting();
    let sp = g.sylow(p);
    if f.order() != sp.order() || !is_power_of(f.order() as u64, p) {
        return fail(Counterexample::new(
            "F(G) is not a Sylow p-subgroup",
            vec![
                Fact::SubgroupOrder {
                    generators: words(g, f),
                    order: f.order(),
                },
                Fact::SubgroupOrder {
                    generators: words(g, &sp),
                    order: sp.order(),
                },
            ],
        ));
    }
    if !is_abelian_sub(g, f) {
        return fail(Counterexample::new(
            "F(G) is not abelian",
            vec![Fact::Property {
                generators: words(g, f),
                property: SubgroupProperty::Abelian,
                holds: false,
            }],
        ));
    }
    let involutions: Vec<usize> = (0..g.order())
        .filter(|&x| g.element_order(x) == 2)
        .collect();
    for &x in &involutions {
        for &a in f.elements() {
            if g.conj(a, x) != g.inv(a) {
                return fail(Counterexample::new(
                    "an involution does not invert F(G)",
                    vec![Fact::Conjugate {
                        element: word(g, a),
                        by: word(g, x),
                        equals: word(g, g.inv(a)),
                        holds: false,
                    }],
                ));
            }
        }
    }
    pass(format!(
        "F(G) is the abelian Sylow {p}-subgroup of order {}, inverted by all {} involutions",
        f.order(),
        involutions.len()
    ))
}

fn g_sylow_p(d: &GroupData, params: &Params) -> Result<Outcome> {
    let g = &d.g;
    let n = g.order() as u64;
    let candidates: Vec<u64> = match params.p {
        Some(p) => vec![p],
        None => g.prime_divisors(),
    };
    let derived = g.derived_subgroup();
    let perfect = derived.order() == g.order();
    let mut reasons = Vec::new();
    let mut passed = Vec::new();
    for p in candidates {
        if p_part(n, p) != p {
            reasons.push(format!("Sylow {p}-subgroup does not have order {p}"));
            continue;
        }
        if !params.conclusion_only {
            if perfect {
                reasons.push("group is perfect".into());
                continue;
            }
            let gen = generated_by(g, (0..g.order()).filter(|&x| g.element_order(x) == p));
            if gen.order() != g.order() {
                reasons.push(format!("elements of order {p} generate a proper subgroup"));
                continue;
            }
        }
        let a = g.sylow(p).elements()[1];
        let aw = word(g, a);
        if derived.contains(a)
            || derived.order() as u64 * p != n
            || (derived.order() as u64).is_multiple_of(p)
        {
            return fail(Counterexample::new(
                format!("G is not G'⋊<a> with G' a {p}'-group"),
                vec![
                    Fact::SubgroupOrder {
                        generators: words(g, &derived),
                        order: derived.order(),
                    },
                    Fact::Contains {
                        generators: words(g, &derived),
                        element: aw,
                        holds: derived.contains(a),
                    },
                ],
            ));
        }
        let b = generated_by(
            g,
            (0..g.order()).filter(|&b| {
                !g.element_order(b).is_multiple_of(p) && g.element_order(g.mul(a, b)) == p
            }),
        );
        if b.elements() != derived.elements() {
            return fail(Counterexample::new(
                "G' differs from the subgroup generated by the p'-elements b with |ab| = p",
                vec![
                    Fact::SubgroupOrder {
                        generators: words(g, &derived),
                        order: derived.order(),
                    },
                    Fact::SubgroupOrder {
                        generators: words(g, &b),
                        order: b.order(),
                    },
                ],
            ));
        }
        let abelian = is_abelian_sub(g, &derived);
        if abelian {
            let c = g.centralizer_in(&[a], &derived);
            if c.order() > 1 {
                let x = c.elements()[1];
                return fail(Counterexample::new(
                    "a fixes a nontrivial element of the abelian G'",
                    vec![Fact::Commute {
                        a: word(g, a),
                        b: word(g, x),
                        holds: true,
                    }],
                ));
            }
        }
        passed.push(format!(
            "p = {p}: |G'| = {}, G' = <b : p ∤ |b|, |ab| = p>{}",
            derived.order(),
            if abelian {
                ", a acts fixed-point-freely"
            } else {
                ", G' non-abelian"
            }
        ));
    }
    if passed.is_empty() {
        reasons.dedup();
        return not_met(if reasons.is_empty() {
            "no prime to check".into()
        } else {
            reasons.join("; ")
        });
    }
    pass(passed.join("; "))
}

fn fitting_p(d: &GroupData, params: &Params) -> Result<Outcome> {
    let g = &d.g;
    if !params.conclusion_only && !d.solvable() {
        return not_met("not solvable");
    }
    let f = d.fitting();
    let fo = f.order() as u64;
    let primes: Vec<u64> = match params.p {
        Some(p) => vec![p],
        None => g.prime_divisors(),
    };
    let mut checked = 0;
    for p in primes.into_iter().filter(|&p| !fo.is_multiple_of(p)) {
        for b in reps_where(g, |o| o == p) {
            checked += 1;
            if !f.elements()[1..]
                .iter()
                .any(|&x| g.element_order(g.mul(b, x)) == p)
            {
                return fail(Counterexample::new(
                    format!("no x in F(G)\\1 with |bx| = {p}"),
                    vec![
                        Fact::ElementOrder {
                            element: word(g, b),
                            order: p,
                        },
                        Fact::Search {
                            claim: format!(
                                "no x in F(G)\\1 with |bx| = {p} for b = {}",
                                word(g, b)
                            ),
                        },
                    ],
                ));
            }
        }
    }
    if checked == 0 {
        return not_met("no element of prime order p with p ∤ |F(G)|");
    }
    pass(format!(
        "|F(G)| = {fo}; {checked} class(es) of elements b each have some x with |bx| = |b|"
    ))
}

fn aux_pq(d: &GroupData, params: &Params) -> Result<Outcome> {
    let g = &d.g;
    let primes = g.prime_divisors();
    if primes.len() != 2 {
        return not_met(format!("prime divisors {primes:?} are not two primes"));
    }
    let n = g.order() as u64;
    let mut pairs = 0usize;
    let mut used = Vec::new();
    for (p, q) in [(primes[0], primes[1]), (primes[1], primes[0])] {
        if params.p.is_some_and(|x| x != p) || p_part(n, p) != p {
            continue;
        }
        let q_elems: Vec<usize> = (0..g.order())
            .filter(|&x| is_power_of(g.element_order(x), q))
            .collect();
        for b in reps_where(g, |o| o == p) {
            let xs: Vec<usize> = q_elems
                .iter()
                .copied()
                .filter(|&x| g.element_order(g.mul(b, x)) == p)
                .collect();
            for &x in &xs {
                let bx = g.mul(b, x);
                for &y in xs.iter().filter(|&&y| y != 0) {
                    pairs += 1;
                    if g.commute(bx, y) {
                        return fail(Counterexample::new(
                            "bx commutes with y",
                            vec![
                                Fact::ElementOrder {
                                    element: word(g, bx),
                                    order: p,
                                },
                                Fact::ElementOrder {
                                    element: word(g, g.mul(b, y)),
                                    order: p,
                                },
                                Fact::Commute {
                                    a: word(g, bx),
                                    b: word(g, y),
                                    holds: true,
                                },
                            ],
                        ));
                    }
                }
            }
        }
        used.push(format!("(p, q) = ({p}, {q})"));
    }
    if pairs == 0 {
        return not_met("no q-elements x, y != 1 with |bx| = |by| = p");
    }
    pass(format!(
        "{pairs} pairs (x, y) checked for {}",
        used.join(", ")
    ))
}

// ---------------------------------------------------------------------------
// Rational 2-groups with the eigenvector property

/// Invariants compared in place of an isomorphism test.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub(crate) struct StructureFingerprint {
    pub order: usize,
    pub classes: usize,
    pub gk: GkGraph,
    pub rational: bool,
    pub cut: bool,
}

impl StructureFingerprint {
    pub fn of(g: &FiniteGroup) -> Self {
        let r = group_rationality(g);
        Self {
            order: g.order(),
            classes: g.classes().len(),
            gk: GkGraph::of_group(g),
            rational: r.is_rational_group,
            cut: r.is_cut,
        }
    }
}

/// Largest `n` for which wreath candidates `K ≤ Sym(n)` are enumerated.
const WREATH_DEGREE_LIMIT: usize = 4;

fn vs2(d: &GroupData, params: &Params, bounds: &Bounds) -> Result<Outcome> {
    let g = &d.g;
    let Some(spec @ ModuleSpec::Matrices { .. }) = &params.module else {
        return Err(missing("module (matrices for the subject's generators)"));
    };
    let m = build_module(g.clone(), spec)?;
    let p = m.p();
    if !params.conclusion_only {
        if p < 5 {
            return not_met(format!("p = {p} < 5"));
        }
        if g.order() == 1 || !g.is_p_group(2) {
            return not_met("not a nontrivial 2-group");
        }
        if !d.rationality().is_rational_group {
            return not_met("not a rational group");
        }
        if !m.is_faithful() {
            return not_met("module is not faithful");
        }
        let scan = m.has_eigenvector_property(bounds)?;
        if !scan.holds {
            let (v, alpha) = scan.witness.expect("failing scan has a witness");
            return not_met(format!(
                "eigenvector property fails at v = {v:?}, alpha = {alpha}"
            ));
        }
    }
    if p != 5 || m.dim() % 2 != 0 {
        return fail(Counterexample::search(format!(
            "p = {p}, dim = {} is not 5 and even",
            m.dim()
        )));
    }
    let n = m.dim() / 2;
    if n > WREATH_DEGREE_LIMIT {
        return Err(Error::bound("wreath degree n", WREATH_DEGREE_LIMIT));
    }
    let semidirect = m.semidirect_perm_group(bounds)?.group;
    let target_g = StructureFingerprint::of(g);
    let target_sd = StructureFingerprint::of(&semidirect);
    let sym = construct(&GroupSpec::Sym(n as u64), bounds)?;
    let q8 = construct(&GroupSpec::Quat(8), bounds)?;
    let mm = construct(&GroupSpec::MM, bounds)?;
    let s2 = sym.sylow(2);
    for k in all_subgroups(&sym, &s2)? {
        if g.order() != 8usize.pow(n as u32) * k.order() {
            continue;
        }
        let kg = sym.subgroup_as_group(&k);
        let wq = wreath_product(&q8, &kg, bounds)?;
        if StructureFingerprint::of(&wq) != target_g {
            continue;
        }
        let wm = wreath_product(&mm, &kg, bounds)?;
        if StructureFingerprint::of(&wm) == target_sd {
            let mut out: Outcome = Verdict::Pass(format!(
                "p = 5, dim = {}, G matches Q8 wr K and V⋊G matches MM wr K with |K| = {}",
                m.dim(),
                k.order()
            ))
            .into();
            out.evidence = Some(
                json!({"n": n, "K_order": k.order(), "group": target_g, "semidirect": target_sd}),
            );
            return Ok(out);
        }
    }
    fail(Counterexample::search(format!(
        "no 2-subgroup K of Sym({n}) gives matching fingerprints for Q8 wr K and MM wr K"
    )))
}

/// Module instance carried by a catalog spec whose top group acts on `F_p^k`.
pub(crate) fn vs2_instance_of(spec: &GroupSpec) -> Option<(GroupSpec, ModuleSpec)> {
    match spec {
        GroupSpec::MM => Some((
            GroupSpec::Quat(8),
            ModuleSpec::Matrices {
                p: 5,
                matrices: MM_MATRICES
                    .iter()
                    .map(|m| m.iter().map(|r| r.to_vec()).collect())
                    .collect(),
            },
        )),
        GroupSpec::SD(v, h, crate::construct::SdAction::Mats(mats)) => match **v {
            GroupSpec::EA(p, _) => Some((
                (**h).clone(),
                ModuleSpec::Matrices {
                    p: p as u32,
                    matrices: mats.clone(),
                },
            )),
            _ => None,
        },
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Cut groups

fn cut_gate(d: &GroupData, params: &Params) -> Option<String> {
    if params.conclusion_only {
        return None;
    }
    if !d.is_cut() {
        return Some("not a cut group".into());
    }
    None
}

fn order_fact(g: &FiniteGroup, x: usize) -> Fact {
    Fact::ElementOrder {
        element: word(g, x),
        order: g.element_order(x),
    }
}

fn cut_orders(d: &GroupData, params: &Params, item: u8) -> Result<Outcome> {
    let g = &d.g;
    if let Some(r) = cut_gate(d, params) {
        return not_met(r);
    }
    let primes = g.prime_divisors();
    if primes.len() < 2 {
        return not_met("fewer than two prime divisors");
    }
    match item {
        1 => {
            let ps: Vec<u64> = primes.iter().copied().filter(|p| p % 4 == 1).collect();
            if ps.is_empty() {
                return not_met("no prime divisor p = 1 mod 4");
            }
            let reps = reps_where(g, |o| o > 1 && ps.iter().any(|&p| is_power_of(o, p)));
            for &x in &reps {
                if !rationality_by_classes(g, x).is_rational {
                    return fail(Counterexample::new(
                        "a p-element with p = 1 mod 4 is not rational",
                        vec![
                            order_fact(g, x),
                            Fact::Rationality {
                                element: word(g, x),
                                rational: false,
                            },
                        ],
                    ));
                }
            }
            pass(format!(
                "{} class(es) of p-elements for p in {ps:?} are rational",
                reps.len()
            ))
        }
        2 => {
            let mut checked = Vec::new();
            for &p in &primes {
                let s = g.sylow(p);
                if !is_abelian_sub(g, &s) {
                    continue;
                }
                let e = exponent_sub(g, &s);
                if p % e != 0 && 4 % e != 0 {
                    let x = cyclic_generator_of_order(g, &s, e);
                    return fail(Counterexample::new(
                        format!("abelian Sylow {p}-subgroup has exponent {e}"),
                        vec![
                            order_fact(g, x),
                            Fact::Property {
                                generators: words(g, &s),
                                property: SubgroupProperty::Abelian,
                                holds: true,
                            },
                            Fact::Contains {
                                generators: words(g, &s),
                                element: word(g, x),
                                holds: true,
                            },
                        ],
                    ));
                }
                checked.push(format!("exp(G_{p}) = {e}"));
            }
            if checked.is_empty() {
                return not_met("no abelian Sylow subgroup");
            }
            pass(checked.join(", "))
        }
        3 => {
            let mut checked = Vec::new();
            for &p in &primes {
                let sp = g.sylow(p);
                if !g.is_normal(&sp) {
                    continue;
                }
                for &q in primes.iter().filter(|&&q| q != p) {
                    if d.order_divisible_by(p * q).is_some() {
                        continue;
                    }
                    let sq = g.sylow(q);
                    let o = sq.order() as u64;
                    let cyclic = cyclic_generator(g, &sq).is_some();
                    if !(is_q8(g, &sq) || (cyclic && (q % o == 0 || 4 % o == 0))) {
                        return fail(Counterexample::new(
                            format!("Sylow {q}-subgroup is neither Q8 nor cyclic of order dividing {q} or 4"),
                            vec![
                                Fact::Property {
                                    generators: words(g, &sp),
                                    property: SubgroupProperty::Normal,
                                    holds: true,
                                },
                                Fact::SubgroupOrder {
                                    generators: words(g, &sq),
                                    order: sq.order(),
                                },
                                Fact::Property {
                                    generators: words(g, &sq),
                                    property: SubgroupProperty::Cyclic,
                                    holds: cyclic,
                                },
                            ],
                        ));
                    }
                    checked.push(format!("(p, q) = ({p}, {q}): |G_{q}| = {o}"));
                }
            }
            if checked.is_empty() {
                return not_met(
                    "no normal Sylow p-subgroup with a prime q such that no element has order pq",
                );
            }
            pass(checked.join("; "))
        }
        4 | 5 => {
            if primes[0] != 2 {
                return not_met("group has odd order");
            }
            let s2 = g.sylow(2);
            let cyclic = cyclic_generator(g, &s2).is_some();
            let (ok, mult, ps): (bool, u64, Vec<u64>) = if item == 4 {
                (cyclic, 4, primes[1..].to_vec())
            } else {
                (
                    cyclic || is_q8(g, &s2),
                    2,
                    primes[1..].iter().copied().filter(|p| p % 4 == 1).collect(),
                )
            };
            if !ok {
                return not_met(if item == 4 {
                    "Sylow 2-subgroup is not cyclic"
                } else {
                    "Sylow 2-subgroup is neither cyclic nor Q8"
                });
            }
            if ps.is_empty() {
                return not_met("no suitable odd prime divisor");
            }
            for &p in &ps {
                if let Some(x) = d.order_divisible_by(mult * p) {
                    return fail(Counterexample::new(
                        format!("element of order divisible by {}", mult * p),
                        vec![order_fact(g, x)],
                    ));
                }
            }
            pass(format!("no elements of order {mult}p for p in {ps:?}"))
        }
        _ => {
            if !primes.contains(&3) || !primes.contains(&7) {
                return not_met("3 or 7 does not divide the group order");
            }
            if cyclic_generator(g, &g.sylow(3)).is_none() {
                return not_met("Sylow 3-subgroup is not cyclic");
            }
            if let Some(x) = d.order_divisible_by(21) {
                return fail(Counterexample::new(
                    "element of order divisible by 21",
                    vec![order_fact(g, x)],
                ));
            }
            pass("Sylow 3-subgroup cyclic and no elements of order 21")
        }
    }
}

fn cyclic_generator_of_order(g: &FiniteGroup, s: &Subgroup, e: u64) -> usize {
    s.elements()
        .iter()
        .copied()
        .find(|&x| g.element_order(x) == e)
        .expect("abelian groups realise their exponent")
}

fn g2_q8(d: &GroupData, params: &Params, item: u8) -> Result<Outcome> {
    let g = &d.g;
    if let Some(r) = cut_gate(d, params) {
        return not_met(r);
    }
    let s2 = g.sylow(2);
    if !is_q8(g, &s2) {
        return not_met("Sylow 2-subgroup is not Q8");
    }
    match item {
        1 => {
            let reps = reps_where(g, |o| {
                o % 4 == 0 && o % 8 != 0 && {
                    let ps = prime_divisors(o / 4);
                    ps.len() == 1 && ps[0] != 2
                }
            });
            if reps.is_empty() {
                return not_met("no element of order 4p^n");
            }
            for &a in &reps {
                let p = prime_divisors(g.element_order(a) / 4)[0];
                let ap = g.element_part(a, &[p]);
                let n = g.normalizer(&g.cyclic_subgroup(a))?;
                if let Some(&x) = n
                    .elements()
                    .iter()
                    .find(|&&x| is_power_of(g.element_order(x), 2) && !g.commute(x, ap))
                {
                    return fail(Counterexample::new(
                        "a 2-element of N(<a>) does not commute with a_p",
                        vec![
                            order_fact(g, a),
                            Fact::Contains {
                                generators: vec![word(g, a)],
                                element: word(g, ap),
                                holds: true,
                            },
                            Fact::Conjugate {
                                element: word(g, a),
                                by: word(g, x),
                                equals: word(g, g.conj(a, x)),
                                holds: true,
                            },
                            Fact::Commute {
                                a: word(g, x),
                                b: word(g, ap),
                                holds: false,
                            },
                        ],
                    ));
                }
            }
            pass(format!(
                "{} class(es) of elements of order 4p^n checked",
                reps.len()
            ))
        }
        2 => {
            for n in [105, 84] {
                if let Some(x) = d.order_divisible_by(n) {
                    return fail(Counterexample::new(
                        format!("element of order divisible by {n}"),
                        vec![order_fact(g, x)],
                    ));
                }
            }
            pass("no elements of order 105 or 84")
        }
        _ => {
            let mut checked = Vec::new();
            for &p in g.prime_divisors().iter().filter(|&&p| p != 2) {
                let core = g.p_core(p);
                if core.order() == 1 {
                    continue;
                }
                for v in g
                    .normal_subgroups_within(&core)
                    .into_iter()
                    .filter(|v| v.order() > 1)
                {
                    let c = g.centralizer_in(v.generators(), &s2);
                    if c.order() != 1 && c.order() != 8 {
                        return fail(Counterexample::new(
                            format!("C_{{G_2}}(V) has order {}", c.order()),
                            vec![
                                Fact::Property {
                                    generators: words(g, &v),
                                    property: SubgroupProperty::Normal,
                                    holds: true,
                                },
                                Fact::SubgroupOrder {
                                    generators: words(g, &v),
                                    order: v.order(),
                                },
                                Fact::Search {
                                    claim: format!(
                                        "centralizer of V in the Sylow 2-subgroup has order {}",
                                        c.order()
                                    ),
                                },
                            ],
                        ));
                    }
                    checked.push(format!("|V| = {}: |C| = {}", v.order(), c.order()));
                }
            }
            if checked.is_empty() {
                return not_met("no nontrivial normal p-subgroup for odd p");
            }
            pass(checked.join(", "))
        }
    }
}

fn solvable_cut_gate(d: &GroupData, params: &Params) -> Option<String> {
    if params.conclusion_only {
        return None;
    }
    if !d.solvable() {
        return Some("not solvable".into());
    }
    if !d.is_cut() {
        return Some("not a cut group".into());
    }
    None
}

fn v5_or_7(d: &GroupData, params: &Params) -> Result<Outcome> {
    let g = &d.g;
    if let Some(r) = solvable_cut_gate(d, params) {
        return not_met(r);
    }
    let gk = d.gk();
    let minimal = g.minimal_normal_subgroups();
    if !params.conclusion_only {
        if gk.edge_count() != 4 {
            return not_met(format!("GK graph has {} edges", gk.edge_count()));
        }
        for m in &minimal {
            if &GkGraph::from_spectrum(&g.quotient_order_spectrum(m)) == gk {
                return not_met(format!(
                    "GK(G/N) = GK(G) for a minimal normal N of order {}",
                    m.order()
                ));
            }
        }
    }
    let mut seen = Vec::new();
    for p in g.prime_divisors() {
        let core = g.p_core(p);
        if core.order() == 1 {
            continue;
        }
        let sp = g.sylow(p);
        for v in g
            .normal_subgroups_within(&core)
            .into_iter()
            .filter(|v| v.order() > 1)
        {
            let elementary = is_abelian_sub(g, &v) && exponent_sub(g, &v) == p;
            if !(p == 5 || p == 7) || v.order() != sp.order() || !elementary {
                return fail(Counterexample::new(
                    format!("normal {p}-subgroup of order {} is not an elementary abelian Sylow subgroup for p in {{5, 7}}", v.order()),
                    vec![
                        Fact::Property {
                            generators: words(g, &v),
                            property: SubgroupProperty::Normal,
                            holds: true,
                        },
                        Fact::SubgroupOrder {
                            generators: words(g, &v),
                            order: v.order(),
                        },
                        Fact::Property {
                            generators: words(g, &v),
                            property: SubgroupProperty::Abelian,
                            holds: is_abelian_sub(g, &v),
                        },
                    ],
                ));
            }
            seen.push(format!("order {} (p = {p})", v.order()));
        }
    }
    let mut out: Outcome = Verdict::Pass(format!(
        "nontrivial normal p-subgroups: {}; quotient condition checked on {} minimal normal subgroup(s), \
         which covers every nontrivial normal subgroup since GK(G/N) is a subgraph of GK(G/M) for M ≤ N",
        seen.join(", "),
        minimal.len()
    ))
    .into();
    out.evidence = Some(json!({
        "minimal_normal_orders": minimal.iter().map(Subgroup::order).collect::<Vec<_>>(),
        "readings": {
            "minimal_normal_scan": "hypothesis checked on minimal normal subgroups",
            "all_normal": "implied: every nontrivial normal subgroup contains a minimal one",
        },
    }));
    Ok(out)
}

fn g2_c2_or_21(d: &GroupData, params: &Params) -> Result<Outcome> {
    let g = &d.g;
    if let Some(r) = solvable_cut_gate(d, params) {
        return not_met(r);
    }
    if g.prime_divisors() != [2, 3, 7] {
        return not_met("prime divisors are not {2, 3, 7}");
    }
    let s2 = g.sylow(2);
    let s7 = g.sylow(7);
    if cyclic_generator(g, &s2).is_none() || cyclic_generator(g, &s7).is_none() {
        return not_met("Sylow 2- or 7-subgroup is not cyclic");
    }
    if s2.order() == 2 {
        return pass("Sylow 2-subgroup has order 2");
    }
    match d.order_divisible_by(21) {
        None => pass(format!(
            "Sylow 2-subgroup of order {} and no elements of order 21",
            s2.order()
        )),
        Some(x) => fail(Counterexample::new(
            "Sylow 2-subgroup is larger than C2 and an element of order 21 exists",
            vec![
                Fact::SubgroupOrder {
                    generators: words(g, &s2),
                    order: s2.order(),
                },
                order_fact(g, x),
            ],
        )),
    }
}

fn normal_sylow_of_order(g: &FiniteGroup, p: u64) -> Option<Subgroup> {
    let s = g.sylow(p);
    (s.order() as u64 == p && g.is_normal(&s)).then_some(s)
}

/// `(a, b, |C|)` with `G = (<a> × C)⋊<b>` as in the statement.
fn s3_ea_decomposition(g: &FiniteGroup) -> Option<(usize, usize, usize)> {
    let c = g.sylow(3);
    if g.order() != 20 * c.order()
        || !g.is_normal(&c)
        || !is_abelian_sub(g, &c)
        || exponent_sub(g, &c) > 3
    {
        return None;
    }
    for a in (0..g.order()).filter(|&x| g.element_order(x) == 5) {
        if !c.generators().iter().all(|&y| g.commute(a, y)) {
            continue;
        }
        let a2 = g.pow(a, 2);
        for b in (0..g.order()).filter(|&x| g.element_order(x) == 4) {
            if g.conj(a, b) == a2
                && c.elements().iter().all(|&y| g.conj(y, b) == g.inv(y))
                && g.extend_subgroup(&g.extend_subgroup(&c, a), b).order() == g.order()
            {
                return Some((a, b, c.order()));
            }
        }
    }
    None
}

fn s3_ea(d: &GroupData) -> Result<Outcome> {
    let g = &d.g;
    let box235 = GkGraph::new([2, 3, 5], [(2, 3), (3, 5)]);
    let cond1 = d.solvable()
        && d.is_cut()
        && normal_sylow_of_order(g, 5).is_some()
        && d.gk().is_subgraph_of(&box235);
    match (cond1, s3_ea_decomposition(g)) {
        (true, Some((a, b, c))) => {
            let mut out: Outcome = Verdict::Pass(format!(
                "both sides hold: a = {}, b = {}, |C| = {c}",
                word(g, a),
                word(g, b)
            ))
            .into();
            out.evidence = Some(json!({"a": word(g, a), "b": word(g, b), "C_order": c}));
            Ok(out)
        }
        (false, None) => not_met("neither side holds"),
        (true, None) => fail(Counterexample::search(
            "condition (1) holds but no decomposition (<a> × C)⋊<b> exists",
        )),
        (false, Some((a, b, _))) => fail(Counterexample::new(
            "decomposition (<a> × C)⋊<b> exists but condition (1) fails",
            vec![
                Fact::ElementOrder {
                    element: word(g, a),
                    order: 5,
                },
                Fact::Conjugate {
                    element: word(g, a),
                    by: word(g, b),
                    equals: word(g, g.pow(a, 2)),
                    holds: true,
                },
                Fact::Search {
                    claim: "condition (1) fails".into(),
                },
            ],
        )),
    }
}

fn rat_s2(d: &GroupData, params: &Params) -> Result<Outcome> {
    let g = &d.g;
    if let Some(r) = solvable_cut_gate(d, params) {
        return not_met(r);
    }
    let Some(s7) = normal_sylow_of_order(g, 7) else {
        return not_met("no normal Sylow subgroup of order 7");
    };
    let box327 = GkGraph::new([2, 3, 7], [(2, 3), (2, 7)]);
    if !params.conclusion_only && !d.gk().is_subgraph_of(&box327) {
        return not_met("GK graph is not contained in 3-2-7");
    }
    let a = s7.elements()[1];
    let a2 = g.pow(a, 2);
    let n = g.order();
    if n.is_multiple_of(21) && is_power_of((n / 21) as u64, 2) {
        for b in (0..n).filter(|&x| g.element_order(x) == 3 && g.conj(a, x) == a2) {
            let cb = g.centralizer(&[b]);
            let sub = g.subgroup_as_group(&cb);
            let q = g.lift_subgroup(&sub, &sub.sylow(2));
            if q.order() * 21 != n {
                continue;
            }
            let qg = g.subgroup_as_group(&q);
            let rational = group_rationality(&qg).is_rational_group;
            if !rational {
                return fail(Counterexample::new(
                    "Q is not rational",
                    vec![
                        Fact::SubgroupOrder {
                            generators: words(g, &q),
                            order: q.order(),
                        },
                        Fact::Search {
                            claim: "the Sylow 2-subgroup of C_G(b) is not a rational group".into(),
                        },
                    ],
                ));
            }
            let mut out: Outcome = Verdict::Pass(format!(
                "G = <a>⋊(<b> × Q) with a = {}, b = {}, Q rational of order {}",
                word(g, a),
                word(g, b),
                q.order()
            ))
            .into();
            out.evidence = Some(
                json!({"a": word(g, a), "b": word(g, b), "Q_generators": words(g, &q), "Q_order": q.order()}),
            );
            return Ok(out);
        }
    }
    fail(Counterexample::search(
        "no decomposition <a>⋊(<b> × Q) with a^b = a^2",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(s: &str) -> GroupData {
        GroupData::build(&s.parse().unwrap(), &Bounds::default()).unwrap()
    }

    #[test]
    fn normal_abelian_scan() {
        assert!(noncyclic_normal_abelian(&data("Alt(4)").g).is_some());
        assert!(noncyclic_normal_abelian(&data("Quat(16)").g).is_none());
        assert!(noncyclic_normal_abelian(&data("Dih(14)").g).is_none());
        assert!(noncyclic_normal_abelian(&data("Dih(8)").g).is_some());
    }

    #[test]
    fn subgroup_lists() {
        let s3 = data("Sym(3)");
        assert_eq!(all_subgroups(&s3.g, &s3.g.whole()).unwrap().len(), 6);
        let d8 = data("Dih(8)");
        assert_eq!(all_subgroups(&d8.g, &d8.g.whole()).unwrap().len(), 10);
    }

    #[test]
    fn s3ea_form_groups_decompose() {
        let f20 = data("SD(Cyc(5),Cyc(4),pow=2)");
        assert_eq!(s3_ea_decomposition(&f20.g).map(|t| t.2), Some(1));
        assert!(s3_ea_decomposition(&data("Sym(4)").g).is_none());
    }
}
