//! One-record structural summary of a group.

use serde::{Deserialize, Serialize};

use crate::arith::{group_rationality, GkGraph};
use crate::group::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusOrders {
    pub kernel: usize,
    pub complement: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub spec: String,
    pub order: usize,
    pub degree: usize,
    pub classes: usize,
    pub solvable: bool,
    pub nilpotent: bool,
    /// `None` exactly when the group is not solvable.
    pub fitting_length: Option<usize>,
    pub rational: bool,
    pub cut: bool,
    pub frobenius: Option<FrobeniusOrders>,
    pub gk: GkGraph,
}

impl Classification {
    pub fn of(spec: impl Into<String>, g: &FiniteGroup) -> Self {
        let s = g.solvability_class();
        let r = group_rationality(g);
        Self {
            spec: spec.into(),
            order: g.order(),
            degree: g.degree(),
            classes: g.classes().len(),
            solvable: s.is_solvable,
            nilpotent: s.is_nilpotent,
            fitting_length: s.fitting_length,
            rational: r.is_rational_group,
            cut: r.is_cut,
            frobenius: g.frobenius_decomposition().map(|d| FrobeniusOrders {
                kernel: d.kernel.order(),
                complement: d.complement.order(),
            }),
            gk: GkGraph::of_group(g),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{construct, Bounds, GroupSpec};

    #[test]
    fn mm_record() {
        let g = construct(&GroupSpec::MM, &Bounds::default()).unwrap();
        let c = Classification::of("MM", &g);
        assert_eq!(c.order, 200);
        assert!(c.rational && c.cut && c.solvable && !c.nilpotent);
        assert_eq!(c.fitting_length, Some(2));
        assert_eq!(
            c.frobenius,
            Some(FrobeniusOrders {
                kernel: 25,
                complement: 8
            })
        );
    }

    #[test]
    fn alt5_record() {
        let g = construct(&GroupSpec::Alt(5), &Bounds::default()).unwrap();
        let c = Classification::of("Alt(5)", &g);
        assert!(!c.solvable && c.fitting_length.is_none());
        // 5-elements are real but x^2 is conjugate to neither x nor x^-1
        assert!(!c.rational && !c.cut);
        assert_eq!(c.classes, 5);
    }
}
