use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphcore::{clique_number, realize, Composition, Kind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConditionClass {
    StrictlySatisfied,
    Equality,
    Violated,
}

/// Which clique-number threshold applies, decided by the distinguished kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Threshold {
    /// Distinguished path power `P^k`: compare against `ω(P^k)`.
    PathClique,
    /// Distinguished cycle power `C^k`: compare against `2k + 1`.
    CycleTwiceKPlusOne,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub class: ConditionClass,
    pub threshold: Threshold,
    pub threshold_value: usize,
    /// Smallest clique number over the non-distinguished cycles; `None` when
    /// there are none, which counts as strictly satisfied.
    pub min_cycle_clique: Option<usize>,
}

/// Compares `min ω` over the non-distinguished cycle powers with the
/// threshold set by the distinguished component.
pub fn check_condition(comp: &Composition) -> Result<ConditionCheck> {
    let omega = |spec| -> usize {
        clique_number(&realize(&Composition::single(spec).expect("valid spec")).expect("small"))
    };
    let mut min_cycle_clique: Option<usize> = None;
    for spec in comp.others() {
        if spec.kind != Kind::Cycle {
            return Err(Error::Hypothesis(format!(
                "non-distinguished component {spec} is not a cycle power"
            )));
        }
        let w = omega(*spec);
        min_cycle_clique = Some(min_cycle_clique.map_or(w, |m| m.min(w)));
    }
    let head = *comp.distinguished();
    let (threshold, threshold_value) = match head.kind {
        Kind::Path => (Threshold::PathClique, omega(head)),
        Kind::Cycle => (Threshold::CycleTwiceKPlusOne, 2 * head.power + 1),
    };
    let class = match min_cycle_clique {
        None => ConditionClass::StrictlySatisfied,
        Some(m) if m > threshold_value => ConditionClass::StrictlySatisfied,
        Some(m) if m == threshold_value => ConditionClass::Equality,
        Some(_) => ConditionClass::Violated,
    };
    Ok(ConditionCheck { class, threshold, threshold_value, min_cycle_clique })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::parse_composition;

    fn class(text: &str) -> ConditionClass {
        check_condition(&parse_composition(text).unwrap()).unwrap().class
    }

    #[test]
    fn examples() {
        assert_eq!(class("P(3)^2 + C(7)^2"), ConditionClass::Equality);
        assert_eq!(class("*C(5)^1 + C(5)^2"), ConditionClass::StrictlySatisfied);
        assert_eq!(class("P(4)^1 + C(5)^2"), ConditionClass::StrictlySatisfied);
        assert_eq!(class("P(4)^2 + C(5)^1"), ConditionClass::Violated);
        assert_eq!(class("C(7)"), ConditionClass::StrictlySatisfied);
        assert_eq!(class("C(6)^1 + C(7)^1"), ConditionClass::Violated);
    }

    #[test]
    fn path_elsewhere_is_rejected() {
        assert!(matches!(
            check_condition(&parse_composition("C(5) + P(3)").unwrap()),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn thresholds() {
        let c = check_condition(&parse_composition("*C(9)^2 + C(7)^3 + C(6)^2").unwrap()).unwrap();
        assert_eq!(c.threshold, Threshold::CycleTwiceKPlusOne);
        assert_eq!(c.threshold_value, 5);
        assert_eq!(c.min_cycle_clique, Some(3));
        assert_eq!(c.class, ConditionClass::Violated);
    }
}
