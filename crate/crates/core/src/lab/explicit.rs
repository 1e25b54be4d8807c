//! Fixed computations: a pair of 6×6 matrices over F_5, an exponential
//! inequality, and the Q8 ≀ K witness family for the eigenvector property.

use std::sync::Arc;

use num_bigint::BigUint;
use serde_json::json;

use super::checks::StructureFingerprint;
use super::facts::Counterexample;
use super::{report_from, CheckReport, Fingerprint, LemmaId, Params, Verdict};
use crate::bounds::Bounds;
use crate::construct::{construct, wreath_product, GroupSpec, MM_MATRICES};
use crate::error::{Error, Result};
use crate::fpmod::{
    index_of_vector, matrix_group_order, vector_from_index, FpMatrix, ModuleAction,
};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

/// Rows of `A` over F_5.
pub const MATRIX_A: [[i64; 6]; 6] = [
    [2, 0, 0, 0, 0, 0],
    [-2, -2, -2, -2, -2, -2],
    [0, 0, 0, 0, 0, 2],
    [0, 0, 0, 0, 2, 0],
    [0, 0, 0, 2, 0, 0],
    [0, 0, 2, 0, 0, 0],
];

/// Rows of the change of basis `U` over F_5.
pub const MATRIX_U: [[i64; 6]; 6] = [
    [1, -1, -1, -1, -1, -1],
    [1, 2, 0, 0, 0, 0],
    [0, 1, 2, 0, 0, 0],
    [0, 0, 1, 2, 0, 0],
    [0, 0, 0, 1, 2, 0],
    [0, 0, 0, 0, 1, 2],
];

/// `|<A, U⁻¹AU>| = 2²·3²·7`.
pub const EXPECTED_ORDER: usize = 252;

/// Range of `ℓ` for `7^{2ℓ} ≥ 16ℓ⁴`.
pub const INEQUALITY_RANGE: std::ops::RangeInclusive<u32> = 1..=64;

fn rows(m: &[[i64; 6]; 6]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.to_vec()).collect()
}

/// Permutation of the `p^d` vectors induced by `v ↦ v·m`.
fn vector_permutation(m: &FpMatrix) -> Result<Permutation> {
    let (p, d) = (m.p(), m.dim());
    let n = (p as usize).pow(d as u32);
    Permutation::new(
        (0..n)
            .map(|i| index_of_vector(&m.apply(&vector_from_index(i, p, d)), p))
            .collect(),
    )
}

fn big_pow(base: u32, e: u32) -> BigUint {
    BigUint::from(base).pow(e)
}

/// Matrix order, inequality suite and row convention, in one report.
pub fn explicit_computations() -> CheckReport {
    let bounds = Bounds::default();
    let a = FpMatrix::from_rows(5, &rows(&MATRIX_A)).expect("fixed 6x6 matrix");
    let u = FpMatrix::from_rows(5, &rows(&MATRIX_U)).expect("fixed 6x6 matrix");
    let u_inv = u.inverse().expect("U is invertible over F_5");
    let a_conj = u_inv.mul(&a).mul(&u);
    let order =
        matrix_group_order(&[a.clone(), a_conj.clone()], &bounds).expect("small matrix group");

    // same group as permutations of F_5^6, closed independently
    let perms = vec![
        vector_permutation(&a).expect("invertible"),
        vector_permutation(&a_conj).expect("invertible"),
    ];
    let degree = perms[0].degree();
    let as_perms =
        FiniteGroup::from_generators(perms, degree, &bounds).expect("group of order 252");

    let inequality_ok = INEQUALITY_RANGE
        .clone()
        .all(|l| big_pow(7, 2 * l) >= BigUint::from(16u32) * big_pow(l, 4));
    let small: Vec<u32> = (0..7)
        .map(|k| 1u32 << k)
        .filter(|&e| big_pow(7, e) < BigUint::from(16u32) * big_pow(e, 4))
        .collect();
    let first_row: Vec<u32> = a.row(0).to_vec();
    let eigen_2 = a.sub(&FpMatrix::scalar(5, 6, 2)).left_kernel().len();

    let checks = [
        (
            "order of <A, U^-1 A U> is 252",
            order == EXPECTED_ORDER && as_perms.order() == EXPECTED_ORDER,
        ),
        ("7^(2l) >= 16 l^4 for l = 1..64", inequality_ok),
        (
            "7^e < 16 e^4 among powers of two exactly for e <= 4",
            small == [1, 2, 4],
        ),
        (
            "A has first row (2,0,0,0,0,0)",
            first_row == [2, 0, 0, 0, 0, 0],
        ),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    let verdict = if failed.is_empty() {
        Verdict::Pass(format!(
            "|<A, A'>| = {order} = 2^2*3^2*7; inequality holds for l = 1..64; powers of two below the bound: {small:?}"
        ))
    } else {
        Verdict::Fail(Counterexample::search(format!(
            "failed: {}",
            failed.join("; ")
        )))
    };
    let evidence = json!({
        "matrix_group_order": order,
        "permutation_group_order": as_perms.order(),
        "A_conjugate": a_conj.rows(),
        "inequality_range": [1, 64],
        "powers_of_two_below_bound": small,
        "A_first_row": first_row,
        "A_eigenspace_2_dim": eigen_2,
    });
    report_from(
        "explicit".into(),
        Fingerprint::of("<A, U^-1 A U> on F_5^6", &as_perms),
        Params::default(),
        verdict,
        Some(evidence),
    )
}

/// Block action of `Q8 ≀ K` on `F_p^{2n}`: each generator moves block `b`
/// to block `β(b)` through the matrix of its in-block `Q8` element.
fn block_module(g: Arc<FiniteGroup>, q8: &ModuleAction, n: usize) -> Result<ModuleAction> {
    let (p, d) = (q8.p(), 2 * n);
    let mats = g
        .generators()
        .iter()
        .map(|s| {
            let mut e = vec![0u32; d * d];
            for b in 0..n {
                let target = s.image(8 * b) / 8;
                let inner =
                    Permutation::new((0..8).map(|x| s.image(8 * b + x) - 8 * target).collect())?;
                let m = q8.matrix_of(&inner)?;
                for r in 0..2 {
                    for c in 0..2 {
                        e[(2 * b + r) * d + 2 * target + c] = m.get(r, c);
                    }
                }
            }
            FpMatrix::new(p, d, e)
        })
        .collect::<Result<Vec<_>>>()?;
    ModuleAction::certify_with_dim(g, p, d, mats)
}

/// `Q8` generator matrices over F_7 defining a faithful 2-dimensional module.
pub const Q8_F7_MATRICES: [[[i64; 2]; 2]; 2] = [[[0, 6], [1, 0]], [[2, 3], [3, 5]]];

fn q8_module(q8: Arc<FiniteGroup>, p: u32) -> Result<ModuleAction> {
    let mats: &[[[i64; 2]; 2]; 2] = match p {
        5 => &MM_MATRICES,
        7 => &Q8_F7_MATRICES,
        _ => {
            return Err(Error::InvalidInstance(format!(
                "no fixed Q8 matrices over F_{p}"
            )))
        }
    };
    let rows: Vec<Vec<Vec<i64>>> = mats
        .iter()
        .map(|m| m.iter().map(|r| r.to_vec()).collect())
        .collect();
    ModuleAction::from_rows(q8, p, &rows)
}

/// Builds `Q8 ≀ K` on `F_5^{2n}` and compares `V ⋊ (Q8 ≀ K)` with `MM ≀ K`
/// by fingerprint; with `negative_p` the same block action over that prime
/// must fail the eigenvector property.
pub fn vs2_witness_check(
    n: usize,
    k: &FiniteGroup,
    negative_p: Option<u32>,
    bounds: &Bounds,
) -> Result<CheckReport> {
    if k.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: k.degree(),
        });
    }
    let q8 = Arc::new(construct(&GroupSpec::Quat(8), bounds)?);
    let g = Arc::new(wreath_product(&q8, k, bounds)?);
    let module = block_module(g.clone(), &q8_module(q8.clone(), 5)?, n)?;
    let faithful = module.is_faithful();
    let scan = module.has_eigenvector_property(bounds)?;
    let sd = module.semidirect_perm_group(bounds)?.group;
    let mm = construct(&GroupSpec::MM, bounds)?;
    let mm_wr = wreath_product(&mm, k, bounds)?;
    let fp_sd = StructureFingerprint::of(&sd);
    let fp_mm = StructureFingerprint::of(&mm_wr);

    let negative = match negative_p {
        None => None,
        Some(p) => {
            let m = block_module(g.clone(), &q8_module(q8.clone(), p)?, n)?;
            Some((p, m.is_faithful(), m.has_eigenvector_property(bounds)?))
        }
    };

    let mut failed = Vec::new();
    if !faithful {
        failed.push("module is not faithful".to_string());
    }
    if !scan.holds {
        failed.push(format!("eigenvector property fails at {:?}", scan.witness));
    }
    if fp_sd != fp_mm {
        failed.push("V⋊G and MM wr K have different fingerprints".into());
    }
    if let Some((p, _, s)) = &negative {
        if s.holds {
            failed.push(format!(
                "eigenvector property unexpectedly holds over F_{p}"
            ));
        }
    }
    let verdict = if failed.is_empty() {
        Verdict::Pass(format!(
            "faithful, eigenvector property on all {} nonzero vectors, |V⋊G| = {} matches MM wr K{}",
            scan.vectors_scanned,
            sd.order(),
            match &negative {
                Some((p, _, s)) => format!("; over F_{p} fails at {:?}", s.witness.as_ref().expect("failing scan")),
                None => String::new(),
            }
        ))
    } else {
        Verdict::Fail(Counterexample::search(failed.join("; ")))
    };
    let evidence = json!({
        "n": n,
        "K_order": k.order(),
        "module_dim": module.dim(),
        "vectors_scanned": scan.vectors_scanned,
        "semidirect": fp_sd,
        "mm_wreath": fp_mm,
        "negative": negative.map(|(p, f, s)| json!({
            "p": p,
            "faithful": f,
            "holds": s.holds,
            "witness": s.witness.map(|(v, alpha)| json!({"vector": v, "alpha": alpha})),
        })),
    });
    Ok(report_from(
        LemmaId::Vs2.name(),
        Fingerprint::of(format!("Q8 wr K, n = {n}, |K| = {}", k.order()), &g),
        Params::default(),
        verdict,
        Some(evidence),
    ))
}
