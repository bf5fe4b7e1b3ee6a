//! Rational K-classes and kernels, represented by their Chern characters.
//!
//! Over `Q` the Chern character identifies `K_0(X)` with `CH*(X)`, so a class
//! is stored as its `ch` cycle. Kernels `X -> Y` are classes on `X x Y`; their
//! composition is transported from graded correspondences through
//! `mu(E) = ch(E) . sqrt(td_{X x Y})`.

use crate::calculus::{
    compose_graded, diagonal_pushforward, pushforward, FactorSelection, GradedCorrespondence,
};
use crate::classes::{
    chern_character, series_inverse, sqrt_todd, tangent_class, todd_class, todd_of_variety,
    BundleClass,
};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::ring::{Cycle, Variety};

/// Sentinel returned by [`support_codim_floor`] for the zero cycle.
pub const NO_SUPPORT: u32 = u32::MAX;

/// A class in `K_0(X) (x) Q`, stored as its Chern character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KClass {
    ch: Cycle,
}

impl KClass {
    pub fn from_ch(ch: Cycle) -> Self {
        Self { ch }
    }

    pub fn from_bundle(e: &BundleClass) -> Self {
        Self::from_ch(chern_character(e))
    }

    pub fn zero(x: &Variety) -> Self {
        Self::from_ch(Cycle::zero(x))
    }

    /// The structure sheaf.
    pub fn structure_sheaf(x: &Variety) -> Self {
        Self::from_ch(Cycle::one(x))
    }

    pub fn variety(&self) -> &Variety {
        self.ch.variety()
    }

    pub fn ch(&self) -> &Cycle {
        &self.ch
    }

    pub fn rank(&self) -> Rational {
        self.ch.constant_term()
    }

    pub fn try_add(&self, other: &KClass) -> Result<KClass> {
        Ok(Self::from_ch(self.ch.try_add(&other.ch)?))
    }

    /// Tensor product; `ch` is multiplicative.
    pub fn try_tensor(&self, other: &KClass) -> Result<KClass> {
        Ok(Self::from_ch(self.ch.try_intersect(&other.ch)?))
    }

    pub fn scale(&self, c: &Rational) -> KClass {
        Self::from_ch(self.ch.scale(c))
    }
}

/// A K-theoretic kernel `X -> Y`: a class on `X x Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KKernel {
    source: Variety,
    target: Variety,
    class: KClass,
}

impl KKernel {
    pub fn new(source: &Variety, target: &Variety, class: KClass) -> Result<Self> {
        let expected = source.product(target);
        if class.variety() != &expected {
            return Err(Error::VarietyMismatch {
                expected,
                found: class.variety().clone(),
            });
        }
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            class,
        })
    }

    pub fn zero(source: &Variety, target: &Variety) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            class: KClass::zero(&source.product(target)),
        }
    }

    pub fn source(&self) -> &Variety {
        &self.source
    }

    pub fn target(&self) -> &Variety {
        &self.target
    }

    pub fn class(&self) -> &KClass {
        &self.class
    }

    pub fn ch(&self) -> &Cycle {
        self.class.ch()
    }

    /// Tensors the kernel with a class on `X x Y`.
    pub fn twisted_by(&self, twist: &KClass) -> Result<KKernel> {
        KKernel::new(&self.source, &self.target, self.class.try_tensor(twist)?)
    }

    /// The kernel whose `mu` image is `c`.
    pub fn from_correspondence(c: &GradedCorrespondence) -> KKernel {
        let xy = c.source().product(c.target());
        let inv = series_inverse(&sqrt_todd(&xy)).expect("sqrt td is a unit");
        KKernel {
            source: c.source().clone(),
            target: c.target().clone(),
            class: KClass::from_ch(c.cycle() * &inv),
        }
    }
}

/// `chi(X, E) = deg(ch(E) . td_X)`.
pub fn euler_characteristic(e: &KClass) -> Rational {
    (e.ch() * &todd_of_variety(e.variety())).degree()
}

/// `mu(E) = ch(E) . sqrt(td_{X x Y})` as a graded correspondence.
pub fn mu(e: &KKernel) -> GradedCorrespondence {
    let xy = e.source.product(&e.target);
    let cycle = e.ch() * &sqrt_todd(&xy);
    GradedCorrespondence::new(&e.source, &e.target, cycle).expect("variety matches")
}

/// Composite `F o E` of kernels `E: X -> Y`, `F: Y -> Z`, defined as the kernel
/// whose `mu` image is `mu(F) o mu(E)`.
pub fn k_compose(e: &KKernel, f: &KKernel) -> Result<KKernel> {
    if e.target != f.source {
        return Err(Error::MiddleMismatch {
            left: e.target.clone(),
            right: f.source.clone(),
        });
    }
    Ok(KKernel::from_correspondence(&compose_graded(&mu(e), &mu(f))?))
}

/// Kernel of the identity, the class of `O_Delta`. By Grothendieck-Riemann-Roch
/// for the diagonal embedding, `ch(O_Delta) = Delta_*(td_X) . td_{X x X}^{-1}`.
pub fn identity_kernel(x: &Variety) -> KKernel {
    let xx = x.square();
    let pushed = diagonal_pushforward(x, &todd_of_variety(x)).expect("variety matches");
    let inv = series_inverse(&todd_class(&tangent_class(&xx))).expect("td is a unit");
    KKernel {
        source: x.clone(),
        target: x.clone(),
        class: KClass::from_ch(&pushed * &inv),
    }
}

/// Smallest codimension carrying a nonzero component, or [`NO_SUPPORT`].
pub fn support_codim_floor(c: &Cycle) -> u32 {
    c.min_codim().unwrap_or(NO_SUPPORT)
}

/// `ch(p_! E)` along a projection `p`, computed by integrating against the
/// Todd class of the fibre factors: `p_*(ch(E) . q^* td_F)`.
pub fn pushforward_class(sel: &FactorSelection, e: &KClass) -> Result<KClass> {
    let fiber = sel.complement();
    let td_fiber = crate::calculus::pullback(&fiber, &todd_of_variety(fiber.target()))?;
    Ok(KClass::from_ch(pushforward(sel, &e.ch().try_intersect(&td_fiber)?)?))
}
