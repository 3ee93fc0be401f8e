use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    Path,
    Cycle,
}

/// One path or cycle raised to a power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ComponentSpec {
    pub kind: Kind,
    pub size: usize,
    pub power: usize,
}

impl ComponentSpec {
    pub fn path(size: usize, power: usize) -> Self {
        ComponentSpec { kind: Kind::Path, size, power }
    }

    pub fn cycle(size: usize, power: usize) -> Self {
        ComponentSpec { kind: Kind::Cycle, size, power }
    }

    /// `K_n` as the path power `P_n^{n-1}` (power clamped to 1 for `K_1`).
    pub fn complete(size: usize) -> Self {
        ComponentSpec::path(size, size.saturating_sub(1).max(1))
    }

    pub fn validate(&self) -> Result<()> {
        if self.power < 1 {
            return Err(Error::Semantic(format!("{self}: power must be at least 1")));
        }
        match self.kind {
            Kind::Path if self.size < 1 => {
                Err(Error::Semantic(format!("{self}: a path needs at least 1 vertex")))
            }
            Kind::Cycle if self.size < 3 => {
                Err(Error::Semantic(format!("{self}: a cycle needs at least 3 vertices")))
            }
            _ => Ok(()),
        }
    }

    /// Distance between local indices `a` and `b` in the unpowered path/cycle.
    pub fn base_distance(&self, a: usize, b: usize) -> usize {
        let d = a.abs_diff(b);
        match self.kind {
            Kind::Path => d,
            Kind::Cycle => d.min(self.size - d),
        }
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        let d = self.base_distance(a, b);
        d >= 1 && d <= self.power
    }

    pub fn is_complete(&self) -> bool {
        match self.kind {
            Kind::Path => self.power + 1 >= self.size,
            Kind::Cycle => 2 * self.power + 1 >= self.size,
        }
    }

    /// ω of this component alone: the whole component when complete, else `power + 1`.
    pub fn clique_number(&self) -> usize {
        if self.is_complete() {
            self.size
        } else {
            self.power + 1
        }
    }
}

impl fmt::Display for ComponentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            Kind::Path => 'P',
            Kind::Cycle => 'C',
        };
        write!(f, "{k}({})^{}", self.size, self.power)
    }
}

/// A disjoint union of path/cycle powers with one distinguished component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Composition {
    components: Vec<ComponentSpec>,
    distinguished: usize,
}

impl Composition {
    pub fn new(components: Vec<ComponentSpec>, distinguished: usize) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Semantic("a composition needs at least one component".into()));
        }
        if distinguished >= components.len() {
            return Err(Error::Semantic(format!(
                "distinguished index {distinguished} out of range for {} components",
                components.len()
            )));
        }
        for c in &components {
            c.validate()?;
        }
        Ok(Composition { components, distinguished })
    }

    pub fn single(spec: ComponentSpec) -> Result<Self> {
        Composition::new(vec![spec], 0)
    }

    /// `n` isolated vertices, as `n` copies of `P(1)`.
    pub fn edgeless(n: usize) -> Result<Self> {
        Composition::new(vec![ComponentSpec::path(1, 1); n], 0)
    }

    pub fn components(&self) -> &[ComponentSpec] {
        &self.components
    }

    pub fn distinguished_index(&self) -> usize {
        self.distinguished
    }

    pub fn distinguished(&self) -> &ComponentSpec {
        &self.components[self.distinguished]
    }

    /// Non-distinguished components in DSL order.
    pub fn others(&self) -> impl Iterator<Item = &ComponentSpec> + '_ {
        self.components
            .iter()
            .enumerate()
            .filter(move |(i, _)| *i != self.distinguished)
            .map(|(_, c)| c)
    }

    /// Components in global-index order: distinguished first, then the rest.
    pub fn layout_order(&self) -> Vec<ComponentSpec> {
        std::iter::once(*self.distinguished()).chain(self.others().copied()).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(|c| c.size).sum()
    }

    /// Same composition with the distinguished component replaced.
    pub fn with_distinguished(&self, spec: ComponentSpec) -> Result<Self> {
        let mut components = self.components.clone();
        components[self.distinguished] = spec;
        Composition::new(components, self.distinguished)
    }
}

/// Prints DSL that parses back to the same composition.
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if i == self.distinguished && i != 0 {
                f.write_str("*")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn completeness_thresholds() {
        assert!(ComponentSpec::path(4, 3).is_complete());
        assert!(!ComponentSpec::path(4, 2).is_complete());
        assert!(ComponentSpec::cycle(5, 2).is_complete());
        assert!(!ComponentSpec::cycle(6, 2).is_complete());
        assert!(ComponentSpec::cycle(6, 3).is_complete());
        assert!(ComponentSpec::path(1, 1).is_complete());
    }

    #[test]
    fn validation() {
        assert!(ComponentSpec::cycle(2, 1).validate().is_err());
        assert!(ComponentSpec::path(3, 0).validate().is_err());
        assert!(ComponentSpec::path(0, 1).validate().is_err());
        assert!(Composition::new(vec![], 0).is_err());
        assert!(Composition::new(vec![ComponentSpec::path(2, 1)], 1).is_err());
    }

    #[test]
    fn display_marks_non_default_distinguished() {
        let c = Composition::new(vec![ComponentSpec::cycle(5, 2), ComponentSpec::cycle(6, 1)], 1)
            .unwrap();
        assert_eq!(c.to_string(), "C(5)^2 + *C(6)^1");
        assert_eq!(c.layout_order()[0], ComponentSpec::cycle(6, 1));
    }
}
