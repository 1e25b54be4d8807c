//! Counterexample data that can be recomputed from the subject alone.

use serde::{Deserialize, Serialize};

use crate::arith::rationality_by_classes;
use crate::dsl::eval_word;
use crate::error::{Error, Result};
use crate::fpmod::ModuleAction;
use crate::group::{FiniteGroup, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubgroupProperty {
    Abelian,
    Cyclic,
    Normal,
}

/// One checkable claim about the subject. Elements are generator words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "fact", rename_all = "snake_case")]
pub enum Fact {
    ElementOrder {
        element: String,
        order: u64,
    },
    Rationality {
        element: String,
        rational: bool,
    },
    Commute {
        a: String,
        b: String,
        holds: bool,
    },
    /// `element^by = equals` (or its negation).
    Conjugate {
        element: String,
        by: String,
        equals: String,
        holds: bool,
    },
    SubgroupOrder {
        generators: Vec<String>,
        order: usize,
    },
    Property {
        generators: Vec<String>,
        property: SubgroupProperty,
        holds: bool,
    },
    Contains {
        generators: Vec<String>,
        element: String,
        holds: bool,
    },
    /// Dimension of the fixed space of an element on the instance module.
    FixedSpaceDim {
        element: String,
        dim: usize,
    },
    /// An exhaustive search found nothing; confirmed by re-running the check.
    Search {
        claim: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub summary: String,
    pub facts: Vec<Fact>,
}

impl Counterexample {
    pub(crate) fn new(summary: impl Into<String>, facts: Vec<Fact>) -> Self {
        Self {
            summary: summary.into(),
            facts,
        }
    }

    pub(crate) fn search(summary: impl Into<String>) -> Self {
        let summary = summary.into();
        Self {
            facts: vec![Fact::Search {
                claim: summary.clone(),
            }],
            summary,
        }
    }
}

/// Shortest-path word of an element, with runs collapsed (`g0^2*g1`).
pub fn word(g: &FiniteGroup, i: usize) -> String {
    let w = g.word(i);
    if w.is_empty() {
        return "1".into();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut k = 0;
    while k < w.len() {
        let mut run = 1;
        while k + run < w.len() && w[k + run] == w[k] {
            run += 1;
        }
        parts.push(if run == 1 {
            format!("g{}", w[k])
        } else {
            format!("g{}^{run}", w[k])
        });
        k += run;
    }
    parts.join("*")
}

pub(crate) fn words(g: &FiniteGroup, s: &Subgroup) -> Vec<String> {
    s.generators().iter().map(|&x| word(g, x)).collect()
}

fn subgroup_of(g: &FiniteGroup, gens: &[String]) -> Result<Subgroup> {
    let idx = gens
        .iter()
        .map(|w| eval_word(g, w))
        .collect::<Result<Vec<_>>>()?;
    Ok(g.subgroup(&idx))
}

/// Recomputes a fact; `Search` facts are accepted here and confirmed by the caller.
pub(crate) fn verify(g: &FiniteGroup, module: Option<&ModuleAction>, fact: &Fact) -> Result<bool> {
    Ok(match fact {
        Fact::ElementOrder { element, order } => g.element_order(eval_word(g, element)?) == *order,
        Fact::Rationality { element, rational } => {
            rationality_by_classes(g, eval_word(g, element)?).is_rational == *rational
        }
        Fact::Commute { a, b, holds } => g.commute(eval_word(g, a)?, eval_word(g, b)?) == *holds,
        Fact::Conjugate {
            element,
            by,
            equals,
            holds,
        } => (g.conj(eval_word(g, element)?, eval_word(g, by)?) == eval_word(g, equals)?) == *holds,
        Fact::SubgroupOrder { generators, order } => subgroup_of(g, generators)?.order() == *order,
        Fact::Property {
            generators,
            property,
            holds,
        } => {
            let s = subgroup_of(g, generators)?;
            let value = match property {
                SubgroupProperty::Abelian => s
                    .generators()
                    .iter()
                    .all(|&a| s.generators().iter().all(|&b| g.commute(a, b))),
                SubgroupProperty::Cyclic => s
                    .elements()
                    .iter()
                    .any(|&x| g.element_order(x) as usize == s.order()),
                SubgroupProperty::Normal => g.is_normal(&s),
            };
            value == *holds
        }
        Fact::Contains {
            generators,
            element,
            holds,
        } => subgroup_of(g, generators)?.contains(eval_word(g, element)?) == *holds,
        Fact::FixedSpaceDim { element, dim } => {
            let m = module.ok_or_else(|| Error::InvalidInstance("fact needs a module".into()))?;
            m.fixed_space(eval_word(g, element)?).dim() == *dim
        }
        Fact::Search { .. } => true,
    })
}
