//! The orbit category of Chow motives modulo the Tate twist.
//!
//! The autoequivalence `T` acts on objects by shifting the twist,
//! `T^i (Y, s, beta) = (Y, s + i, beta)`, and on correspondences trivially.
//! The `i`-th component of a morphism `(X, r, alpha) -> (Y, s, beta)` is
//! therefore a correspondence of degree `s + i - r`; for `M(X) -> M(Y)` it is
//! the degree-`i` part of a graded correspondence.

use std::collections::BTreeMap;

use crate::calculus::{compose_graded, GradedCorrespondence};
use crate::error::{Error, Result};
use crate::motive::chow::{check_sandwich, compose_motive, Motive, MotiveMorphism};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitMorphism {
    source: Motive,
    target: Motive,
    components: BTreeMap<i64, GradedCorrespondence>,
}

impl OrbitMorphism {
    /// Checks each component's degree and sandwich condition; zero components
    /// are dropped.
    pub fn new(
        source: &Motive,
        target: &Motive,
        components: BTreeMap<i64, GradedCorrespondence>,
    ) -> Result<Self> {
        let mut kept = BTreeMap::new();
        for (i, c) in components {
            check_sandwich(source, target, &c, component_degree(source, target, i))?;
            if !c.is_zero() {
                kept.insert(i, c);
            }
        }
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            components: kept,
        })
    }

    /// Splits a graded correspondence into its orbit components.
    pub fn from_graded(source: &Motive, target: &Motive, c: &GradedCorrespondence) -> Result<Self> {
        let shift = target.twist() - source.twist();
        let components = c
            .degrees()
            .into_iter()
            .map(|d| (d - shift, c.degree_part(d)))
            .collect();
        Self::new(source, target, components)
    }

    /// The image of a morphism under the projection `A -> A/T`.
    pub fn project(f: &MotiveMorphism) -> Self {
        let mut components = BTreeMap::new();
        if !f.is_zero() {
            components.insert(0, f.corr().clone());
        }
        Self {
            source: f.source().clone(),
            target: f.target().clone(),
            components,
        }
    }

    pub fn identity(m: &Motive) -> Self {
        Self::project(&m.identity())
    }

    pub fn source(&self) -> &Motive {
        &self.source
    }

    pub fn target(&self) -> &Motive {
        &self.target
    }

    pub fn components(&self) -> &BTreeMap<i64, GradedCorrespondence> {
        &self.components
    }

    pub fn component(&self, i: i64) -> GradedCorrespondence {
        self.components
            .get(&i)
            .cloned()
            .unwrap_or_else(|| GradedCorrespondence::zero(self.source.variety(), self.target.variety()))
    }

    /// Sum of all components as one graded correspondence.
    pub fn to_graded(&self) -> GradedCorrespondence {
        self.components
            .values()
            .fold(
                GradedCorrespondence::zero(self.source.variety(), self.target.variety()),
                |acc, c| acc.try_add(c).expect("parallel"),
            )
    }
}

fn component_degree(source: &Motive, target: &Motive, i: i64) -> i64 {
    target.twist() + i - source.twist()
}

/// `(g o f)^k = sum_{i + j = k} T^i(g^j) o f^i`.
pub fn orbit_compose(f: &OrbitMorphism, g: &OrbitMorphism) -> Result<OrbitMorphism> {
    if f.target != g.source {
        return Err(Error::ObjectMismatch(format!(
            "orbit composition: {} vs {}",
            f.target, g.source
        )));
    }
    let mut components: BTreeMap<i64, GradedCorrespondence> = BTreeMap::new();
    for (i, fi) in &f.components {
        for (j, gj) in &g.components {
            let c = compose_graded(fi, gj)?;
            match components.get_mut(&(i + j)) {
                Some(acc) => *acc = acc.try_add(&c)?,
                None => {
                    components.insert(i + j, c);
                }
            }
        }
    }
    components.retain(|_, c| !c.is_zero());
    Ok(OrbitMorphism {
        source: f.source.clone(),
        target: g.target.clone(),
        components,
    })
}

/// Given mutually inverse `f: M -> N`, `g: N -> M` in the orbit category with
/// no components of negative index, returns the degree-zero components, which
/// are mutually inverse in the category of motives.
pub fn degree_zero_rigidify(
    f: &OrbitMorphism,
    g: &OrbitMorphism,
) -> Result<(MotiveMorphism, MotiveMorphism)> {
    if f.target != g.source || g.target != f.source {
        return Err(Error::ObjectMismatch(
            "rigidification needs f: M -> N and g: N -> M".into(),
        ));
    }
    for h in [f, g] {
        if let Some((&i, _)) = h.components.iter().find(|(&i, _)| i < 0) {
            return Err(Error::SupportCondition(i));
        }
    }
    if orbit_compose(f, g)? != OrbitMorphism::identity(&f.source)
        || orbit_compose(g, f)? != OrbitMorphism::identity(&f.target)
    {
        return Err(Error::NotInverse);
    }
    let f0 = MotiveMorphism::new(&f.source, &f.target, f.component(0))?;
    let g0 = MotiveMorphism::new(&g.source, &g.target, g.component(0))?;
    if compose_motive(&f0, &g0)? != f.source.identity()
        || compose_motive(&g0, &f0)? != f.target.identity()
    {
        return Err(Error::NotInverse);
    }
    Ok((f0, g0))
}
