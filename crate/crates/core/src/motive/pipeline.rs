//! From kernels to motives: the derived-equivalence pipeline and the
//! compatibility of the Chow and noncommutative routes.

use crate::calculus::{cartesian, compose_graded, GradedCorrespondence};
use crate::classes::sqrt_todd;
use crate::error::{Error, Result};
use crate::kshadow::{k_compose, mu, support_codim_floor, KClass, KKernel};
use crate::motive::chow::{motive_of, MotiveMorphism};
use crate::motive::orbit::{degree_zero_rigidify, OrbitMorphism};
use crate::ring::Cycle;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrlovVerdict {
    /// `mu(E)` and `mu(F)` are not mutually inverse.
    NotEquivalent,
    /// Isomorphic in the orbit category only.
    TateTwistOnly,
    /// Isomorphic as Chow motives via the degree-zero parts.
    ChowIsomorphism {
        forward: MotiveMorphism,
        backward: MotiveMorphism,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrlovReport {
    pub dimension: u32,
    pub forward: GradedCorrespondence,
    pub backward: GradedCorrespondence,
    pub mutually_inverse: bool,
    pub forward_support_floor: u32,
    pub backward_support_floor: u32,
    pub verdict: OrlovVerdict,
}

impl OrlovReport {
    /// Motives are isomorphic modulo Tate twists.
    pub fn isomorphic_mod_tate(&self) -> bool {
        self.mutually_inverse
    }

    pub fn is_chow_isomorphism(&self) -> bool {
        matches!(self.verdict, OrlovVerdict::ChowIsomorphism { .. })
    }
}

/// Runs a kernel pair `E: X -> Y`, `F: Y -> X` through `mu`, checks that the
/// images are mutually inverse, and, when both have no components below
/// codimension `n = dim X`, rigidifies to an isomorphism of Chow motives.
pub fn orlov_pipeline(e: &KKernel, f: &KKernel) -> Result<OrlovReport> {
    let (x, y) = (e.source(), e.target());
    if f.source() != y || f.target() != x {
        return Err(Error::ObjectMismatch(
            "kernels must go X -> Y and Y -> X".into(),
        ));
    }
    if x.dim() != y.dim() {
        return Err(Error::InvalidInput(format!(
            "dimensions differ: {} vs {}",
            x.dim(),
            y.dim()
        )));
    }
    let n = x.dim();
    let a = mu(e);
    let b = mu(f);
    let mutually_inverse = compose_graded(&a, &b)? == GradedCorrespondence::identity(x)
        && compose_graded(&b, &a)? == GradedCorrespondence::identity(y);
    let fa = support_codim_floor(a.cycle());
    let fb = support_codim_floor(b.cycle());
    let verdict = if !mutually_inverse {
        OrlovVerdict::NotEquivalent
    } else if fa >= n && fb >= n {
        let (mx, my) = (motive_of(x), motive_of(y));
        let of = OrbitMorphism::from_graded(&mx, &my, &a)?;
        let og = OrbitMorphism::from_graded(&my, &mx, &b)?;
        let (forward, backward) = degree_zero_rigidify(&of, &og)?;
        OrlovVerdict::ChowIsomorphism { forward, backward }
    } else {
        OrlovVerdict::TateTwistOnly
    };
    Ok(OrlovReport {
        dimension: n,
        forward: a,
        backward: b,
        mutually_inverse,
        forward_support_floor: fa,
        backward_support_floor: fb,
        verdict,
    })
}

/// The hom-set representative of `NM` at a kernel: its K-class on `X x Y`.
pub fn nc_hom(e: &KKernel) -> KClass {
    e.class().clone()
}

/// Composition of noncommutative-motive morphisms.
pub fn nc_compose(e: &KKernel, f: &KKernel) -> Result<KKernel> {
    k_compose(e, f)
}

/// `sqrt(td_X) x sqrt(td_Y)`, which equals `sqrt(td_{X x Y})`.
pub fn sqrt_todd_by_factors(e: &KKernel) -> Cycle {
    cartesian(&sqrt_todd(e.source()), &sqrt_todd(e.target()))
}

/// Checks that the Chow route `mu(E)` agrees with the noncommutative route,
/// where the K-class of `E` is sent to graded correspondences by
/// `[E] |-> ch(E) . (sqrt(td_X) x sqrt(td_Y))`.
pub fn compatibility_check(e: &KKernel) -> bool {
    compatibility_check_with(e, |k| nc_hom(k).ch() * &sqrt_todd_by_factors(k))
}

/// Same as [`compatibility_check`] with a caller-supplied noncommutative route.
pub fn compatibility_check_with(e: &KKernel, nc_route: impl Fn(&KKernel) -> Cycle) -> bool {
    mu(e).cycle() == &nc_route(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::line_bundle;
    use crate::kshadow::identity_kernel;
    use crate::ring::Variety;

    #[test]
    fn identity_kernel_gives_exact_isomorphism() {
        let p1 = Variety::projective(1);
        let id = identity_kernel(&p1);
        let report = orlov_pipeline(&id, &id).unwrap();
        assert!(report.mutually_inverse);
        match report.verdict {
            OrlovVerdict::ChowIsomorphism { forward, .. } => {
                assert_eq!(forward, motive_of(&p1).identity())
            }
            other => panic!("unexpected verdict {other:?}"),
        }
    }

    #[test]
    fn non_inverse_pair_is_reported() {
        let p1 = Variety::projective(1);
        let z = KKernel::zero(&p1, &p1);
        let report = orlov_pipeline(&z, &z).unwrap();
        assert_eq!(report.verdict, OrlovVerdict::NotEquivalent);
        let p2 = Variety::projective(2);
        let bad = KKernel::zero(&p1, &p2);
        let back = KKernel::zero(&p2, &p1);
        assert!(orlov_pipeline(&bad, &back).is_err());
    }

    #[test]
    fn compatibility_and_negative_control() {
        let v = Variety::new(vec![1, 1]);
        let id = identity_kernel(&v);
        assert!(compatibility_check(&id));
        let xy = Variety::new(vec![1, 2]);
        let e = KKernel::new(
            &Variety::projective(1),
            &Variety::projective(2),
            KClass::from_bundle(&line_bundle(&xy, &[1, -1]).unwrap()),
        )
        .unwrap();
        assert!(compatibility_check(&e));
        assert!(!compatibility_check_with(&e, |k| k.ch().clone()));
    }

    #[test]
    fn nc_hom_identity_and_zero() {
        let p1 = Variety::projective(1);
        let id = identity_kernel(&p1);
        let z = KKernel::zero(&p1, &p1);
        assert!(nc_hom(&z).ch().is_zero());
        assert_eq!(nc_compose(&id, &id).unwrap(), id);
        assert_eq!(nc_compose(&z, &id).unwrap(), z);
    }
}
