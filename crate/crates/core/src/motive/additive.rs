//! Formal direct sums of motives. Morphisms are matrices of motive morphisms.

use crate::error::{Error, Result};
use crate::motive::chow::{compose_motive, Motive, MotiveMorphism};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalSum {
    summands: Vec<Motive>,
}

impl FormalSum {
    pub fn new(summands: Vec<Motive>) -> Self {
        Self { summands }
    }

    pub fn summands(&self) -> &[Motive] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn direct_sum(&self, other: &FormalSum) -> FormalSum {
        let mut s = self.summands.clone();
        s.extend_from_slice(&other.summands);
        FormalSum::new(s)
    }
}

/// `entries[i][j]` maps summand `j` of the source to summand `i` of the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumMorphism {
    source: FormalSum,
    target: FormalSum,
    entries: Vec<Vec<MotiveMorphism>>,
}

impl SumMorphism {
    pub fn new(
        source: &FormalSum,
        target: &FormalSum,
        entries: Vec<Vec<MotiveMorphism>>,
    ) -> Result<Self> {
        if entries.len() != target.len() || entries.iter().any(|row| row.len() != source.len()) {
            return Err(Error::ObjectMismatch(format!(
                "matrix shape does not match {} -> {} summands",
                source.len(),
                target.len()
            )));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if e.source() != &source.summands[j] || e.target() != &target.summands[i] {
                    return Err(Error::ObjectMismatch(format!(
                        "entry ({i}, {j}) has the wrong source or target"
                    )));
                }
            }
        }
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            entries,
        })
    }

    pub fn identity(s: &FormalSum) -> Self {
        let entries = (0..s.len())
            .map(|i| {
                (0..s.len())
                    .map(|j| {
                        if i == j {
                            s.summands[i].identity()
                        } else {
                            MotiveMorphism::zero(&s.summands[j], &s.summands[i])
                        }
                    })
                    .collect()
            })
            .collect();
        Self {
            source: s.clone(),
            target: s.clone(),
            entries,
        }
    }

    pub fn source(&self) -> &FormalSum {
        &self.source
    }

    pub fn target(&self) -> &FormalSum {
        &self.target
    }

    pub fn entry(&self, i: usize, j: usize) -> &MotiveMorphism {
        &self.entries[i][j]
    }

    /// `next o self`.
    pub fn compose_then(&self, next: &SumMorphism) -> Result<SumMorphism> {
        if self.target != next.source {
            return Err(Error::ObjectMismatch("matrix composition".into()));
        }
        let mut entries = Vec::with_capacity(next.target.len());
        for i in 0..next.target.len() {
            let mut row = Vec::with_capacity(self.source.len());
            for k in 0..self.source.len() {
                let mut acc =
                    MotiveMorphism::zero(&self.source.summands[k], &next.target.summands[i]);
                for j in 0..self.target.len() {
                    acc = acc.try_add(&compose_motive(&self.entries[j][k], &next.entries[i][j])?)?;
                }
                row.push(acc);
            }
            entries.push(row);
        }
        Ok(SumMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            entries,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && *self == SumMorphism::identity(&self.source)
    }
}
