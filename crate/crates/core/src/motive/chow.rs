use std::fmt;

use crate::calculus::{
    compose_graded, tensor_correspondences, transpose, GradedCorrespondence,
};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::ring::{Cycle, Variety};

/// A Chow motive `(X, r, alpha)` with `alpha` an idempotent degree-zero
/// correspondence on `X`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Motive {
    variety: Variety,
    twist: i64,
    idempotent: GradedCorrespondence,
}

impl Motive {
    pub fn new(variety: &Variety, twist: i64, idempotent: GradedCorrespondence) -> Result<Self> {
        if idempotent.source() != variety || idempotent.target() != variety {
            return Err(Error::ObjectMismatch(format!(
                "idempotent {} -> {} on motive of {variety}",
                idempotent.source(),
                idempotent.target()
            )));
        }
        if !idempotent.is_of_degree(0) {
            return Err(Error::WrongDegree(0));
        }
        if compose_graded(&idempotent, &idempotent)? != idempotent {
            return Err(Error::NotIdempotent);
        }
        Ok(Self {
            variety: variety.clone(),
            twist,
            idempotent,
        })
    }

    /// Builds a motive from a bare cycle on `X x X`.
    pub fn from_cycle(variety: &Variety, twist: i64, cycle: Cycle) -> Result<Self> {
        Self::new(
            variety,
            twist,
            GradedCorrespondence::new(variety, variety, cycle)?,
        )
    }

    /// The unit motive `1 = M(Spec K)`.
    pub fn unit() -> Self {
        motive_of(&Variety::point())
    }

    /// `(Spec K, 0, 0)`, the chosen zero object.
    pub fn zero() -> Self {
        let k = Variety::point();
        Self {
            variety: k.clone(),
            twist: 0,
            idempotent: GradedCorrespondence::zero(&k, &k),
        }
    }

    /// The Lefschetz motive `(P^1, 0, [P^1 x pt])`.
    pub fn lefschetz() -> Self {
        let p1 = Variety::projective(1);
        let beta = Cycle::monomial(&p1.square(), vec![0, 1], Rational::from_integer(1.into()));
        Self::from_cycle(&p1, 0, beta).expect("beta is a projector")
    }

    /// The Tate motive `(Spec K, -1, 1)`.
    pub fn tate() -> Self {
        let k = Variety::point();
        Self {
            variety: k.clone(),
            twist: -1,
            idempotent: GradedCorrespondence::identity(&k),
        }
    }

    pub fn variety(&self) -> &Variety {
        &self.variety
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn idempotent(&self) -> &GradedCorrespondence {
        &self.idempotent
    }

    pub fn is_zero(&self) -> bool {
        self.idempotent.is_zero()
    }

    pub fn identity(&self) -> MotiveMorphism {
        MotiveMorphism {
            source: self.clone(),
            target: self.clone(),
            corr: self.idempotent.clone(),
        }
    }
}

impl fmt::Display for Motive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.variety,
            self.twist,
            self.idempotent.cycle()
        )
    }
}

/// A morphism `(X, r, alpha) -> (Y, s, beta)`: a correspondence of pure degree
/// `s - r` with `beta o corr o alpha = corr`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MotiveMorphism {
    source: Motive,
    target: Motive,
    corr: GradedCorrespondence,
}

impl MotiveMorphism {
    pub fn new(source: &Motive, target: &Motive, corr: GradedCorrespondence) -> Result<Self> {
        check_sandwich(source, target, &corr, target.twist - source.twist)?;
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            corr,
        })
    }

    pub fn zero(source: &Motive, target: &Motive) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            corr: GradedCorrespondence::zero(&source.variety, &target.variety),
        }
    }

    pub fn source(&self) -> &Motive {
        &self.source
    }

    pub fn target(&self) -> &Motive {
        &self.target
    }

    pub fn corr(&self) -> &GradedCorrespondence {
        &self.corr
    }

    pub fn degree(&self) -> i64 {
        self.target.twist - self.source.twist
    }

    pub fn is_zero(&self) -> bool {
        self.corr.is_zero()
    }

    pub fn try_add(&self, other: &MotiveMorphism) -> Result<MotiveMorphism> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::ObjectMismatch("adding non-parallel morphisms".into()));
        }
        Ok(MotiveMorphism {
            corr: self.corr.try_add(&other.corr)?,
            ..self.clone()
        })
    }

    pub fn scale(&self, c: &Rational) -> MotiveMorphism {
        MotiveMorphism {
            corr: self.corr.scale(c),
            ..self.clone()
        }
    }

    /// `self` and `other` are mutually inverse.
    pub fn is_inverse_of(&self, other: &MotiveMorphism) -> Result<bool> {
        Ok(compose_motive(self, other)? == self.source.identity()
            && compose_motive(other, self)? == self.target.identity())
    }
}

pub(crate) fn check_sandwich(
    source: &Motive,
    target: &Motive,
    corr: &GradedCorrespondence,
    degree: i64,
) -> Result<()> {
    if corr.source() != &source.variety || corr.target() != &target.variety {
        return Err(Error::ObjectMismatch(format!(
            "correspondence {} -> {} between motives of {} and {}",
            corr.source(),
            corr.target(),
            source.variety,
            target.variety
        )));
    }
    if !corr.is_of_degree(degree) {
        return Err(Error::WrongDegree(degree));
    }
    let sandwiched = compose_graded(
        &compose_graded(&source.idempotent, corr)?,
        &target.idempotent,
    )?;
    if &sandwiched != corr {
        return Err(Error::NotSandwiched);
    }
    Ok(())
}

/// `M(X) = (X, 0, Delta_X)`.
pub fn motive_of(x: &Variety) -> Motive {
    Motive {
        variety: x.clone(),
        twist: 0,
        idempotent: GradedCorrespondence::identity(x),
    }
}

/// `g o f` for `f: M -> N`, `g: N -> L`.
pub fn compose_motive(f: &MotiveMorphism, g: &MotiveMorphism) -> Result<MotiveMorphism> {
    if f.target != g.source {
        return Err(Error::ObjectMismatch(format!(
            "target {} of the first morphism is not the source {} of the second",
            f.target, g.source
        )));
    }
    Ok(MotiveMorphism {
        source: f.source.clone(),
        target: g.target.clone(),
        corr: compose_graded(&f.corr, &g.corr)?,
    })
}

/// `(X, r, alpha) (x) (Y, s, beta) = (X x Y, r + s, alpha (x) beta)`.
pub fn tensor(m: &Motive, n: &Motive) -> Motive {
    Motive {
        variety: m.variety.product(&n.variety),
        twist: m.twist + n.twist,
        idempotent: tensor_correspondences(&m.idempotent, &n.idempotent),
    }
}

/// `(X, r, alpha)^dual = (X, dim X - r, alpha^t)`.
pub fn dual(m: &Motive) -> Motive {
    Motive {
        variety: m.variety.clone(),
        twist: m.variety.dim() as i64 - m.twist,
        idempotent: transpose(&m.idempotent),
    }
}

/// `(X, r, alpha)(i) = (X, r - i, alpha)`.
pub fn tate_twist(m: &Motive, i: i64) -> Motive {
    Motive {
        twist: m.twist - i,
        ..m.clone()
    }
}

/// Splits a projector `p` on `M` in the Karoubi envelope.
///
/// Returns `(image, s, t)` with `s: image -> M`, `t: M -> image`,
/// `t o s = id_image` and `s o t = p`. The zero projector splits through
/// [`Motive::zero`].
pub fn split_idempotent(
    m: &Motive,
    p: &MotiveMorphism,
) -> Result<(Motive, MotiveMorphism, MotiveMorphism)> {
    if &p.source != m || &p.target != m {
        return Err(Error::ObjectMismatch("projector must be an endomorphism".into()));
    }
    if compose_motive(p, p)? != *p {
        return Err(Error::InvalidInput("morphism is not idempotent".into()));
    }
    if p.is_zero() {
        let z = Motive::zero();
        return Ok((
            z.clone(),
            MotiveMorphism::zero(&z, m),
            MotiveMorphism::zero(m, &z),
        ));
    }
    let image = Motive {
        variety: m.variety.clone(),
        twist: m.twist,
        idempotent: p.corr.clone(),
    };
    let s = MotiveMorphism {
        source: image.clone(),
        target: m.clone(),
        corr: p.corr.clone(),
    };
    let t = MotiveMorphism {
        source: m.clone(),
        target: image.clone(),
        corr: p.corr.clone(),
    };
    Ok((image, s, t))
}

/// The decomposition `M(P^1) = 1 (+) L`.
///
/// With `h_1`, `h_2` the hyperplane classes of the two factors of
/// `P^1 x P^1`, `alpha = [pt x P^1] = h_1` and `beta = [P^1 x pt] = h_2`.
/// `alpha` factors through the unit via the structure map (class `1` on
/// `Spec K x P^1`) and the point (class `h` on `P^1 x Spec K`).
#[derive(Debug, Clone)]
pub struct LefschetzDecomposition {
    pub alpha: MotiveMorphism,
    pub beta: MotiveMorphism,
    /// `unit -> image(alpha)`, the transposed graph of the structure map.
    pub from_unit: MotiveMorphism,
    /// `image(alpha) -> unit`, the point class.
    pub to_unit: MotiveMorphism,
    /// `M(P^1) -> 1 (+) L`.
    pub split: crate::motive::SumMorphism,
    /// `1 (+) L -> M(P^1)`.
    pub merge: crate::motive::SumMorphism,
}

pub fn lefschetz_decomposition() -> Result<LefschetzDecomposition> {
    use crate::motive::{FormalSum, SumMorphism};

    let p1 = Variety::projective(1);
    let k = Variety::point();
    let q = p1.square();
    let one = Rational::from_integer(1.into());
    let mp1 = motive_of(&p1);
    let alpha = MotiveMorphism::new(
        &mp1,
        &mp1,
        GradedCorrespondence::new(&p1, &p1, Cycle::monomial(&q, vec![1, 0], one.clone()))?,
    )?;
    let beta = MotiveMorphism::new(
        &mp1,
        &mp1,
        GradedCorrespondence::new(&p1, &p1, Cycle::monomial(&q, vec![0, 1], one.clone()))?,
    )?;
    let (a_img, a_s, a_t) = split_idempotent(&mp1, &alpha)?;
    let (l_img, l_s, l_t) = split_idempotent(&mp1, &beta)?;
    let unit = Motive::unit();
    let from_unit = MotiveMorphism::new(
        &unit,
        &a_img,
        GradedCorrespondence::new(&k, &p1, Cycle::one(&p1))?,
    )?;
    let to_unit = MotiveMorphism::new(
        &a_img,
        &unit,
        GradedCorrespondence::new(&p1, &k, Cycle::point_class(&p1))?,
    )?;
    // M(P^1) -> image(alpha) -> 1 and 1 -> image(alpha) -> M(P^1)
    let to_one = compose_motive(&a_t, &to_unit)?;
    let from_one = compose_motive(&from_unit, &a_s)?;
    let whole = FormalSum::new(vec![mp1]);
    let parts = FormalSum::new(vec![unit, l_img]);
    let split = SumMorphism::new(&whole, &parts, vec![vec![to_one], vec![l_t]])?;
    let merge = SumMorphism::new(&parts, &whole, vec![vec![from_one, l_s]])?;
    Ok(LefschetzDecomposition {
        alpha,
        beta,
        from_unit,
        to_unit,
        split,
        merge,
    })
}

/// Mutually inverse morphisms `T -> L` and `L -> T`.
///
/// With morphisms `(X, r) -> (Y, s)` of degree `s - r`, the Tate motive
/// `(Spec K, -1, 1)` is isomorphic to the Lefschetz motive itself.
pub fn tate_lefschetz() -> Result<(MotiveMorphism, MotiveMorphism)> {
    let p1 = Variety::projective(1);
    let k = Variety::point();
    let (t, l) = (Motive::tate(), Motive::lefschetz());
    let forward = MotiveMorphism::new(
        &t,
        &l,
        GradedCorrespondence::new(&k, &p1, Cycle::point_class(&p1))?,
    )?;
    let backward = MotiveMorphism::new(
        &l,
        &t,
        GradedCorrespondence::new(&p1, &k, Cycle::one(&p1))?,
    )?;
    Ok((forward, backward))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::diagonal_class;
    use crate::rational::rat;

    fn p(n: u32) -> Variety {
        Variety::projective(n)
    }

    #[test]
    fn motive_of_examples() {
        let one = motive_of(&Variety::point());
        assert_eq!(one, Motive::unit());
        assert_eq!(one.idempotent().cycle(), &Cycle::one(&Variety::point()));
        let m = motive_of(&p(1));
        assert_eq!(m.twist(), 0);
        assert_eq!(m.idempotent().cycle(), &diagonal_class(&p(1)));
        let m2 = motive_of(&p(2));
        let q = p(2).square();
        let expected = (0..=2).fold(Cycle::zero(&q), |acc, i| {
            &acc + &Cycle::monomial(&q, vec![i, 2 - i], rat(1))
        });
        assert_eq!(m2.idempotent().cycle(), &expected);
    }

    #[test]
    fn construction_checks() {
        let p1 = p(1);
        let q = p1.square();
        assert_eq!(
            Motive::from_cycle(&p1, 0, Cycle::monomial(&q, vec![1, 0], rat(2))),
            Err(Error::NotIdempotent)
        );
        assert_eq!(
            Motive::from_cycle(&p1, 0, Cycle::one(&q)),
            Err(Error::WrongDegree(0))
        );
        let m = motive_of(&p1);
        let l = Motive::lefschetz();
        // alpha = h1 is not a morphism into L = (P1, beta): beta o alpha != alpha
        let alpha = GradedCorrespondence::new(&p1, &p1, Cycle::monomial(&q, vec![1, 0], rat(1))).unwrap();
        assert_eq!(
            MotiveMorphism::new(&m, &l, alpha),
            Err(Error::NotSandwiched)
        );
    }

    #[test]
    fn composition_laws() {
        let m = motive_of(&p(1));
        let d = Motive::lefschetz();
        let beta = MotiveMorphism::new(&m, &d, d.idempotent().clone()).unwrap();
        assert_eq!(compose_motive(&m.identity(), &beta).unwrap(), beta);
        assert_eq!(compose_motive(&beta, &d.identity()).unwrap(), beta);
        let z = MotiveMorphism::zero(&d, &m);
        assert!(compose_motive(&beta, &z).unwrap().is_zero());
        assert!(matches!(
            compose_motive(&beta, &beta),
            Err(Error::ObjectMismatch(_))
        ));
    }

    #[test]
    fn tensor_dual_twist() {
        let m = motive_of(&p(1));
        assert_eq!(dual(&dual(&m)), m);
        assert_eq!(tate_twist(&m, 0), m);
        assert_eq!(tate_twist(&m, 2).twist(), -2);
        assert_eq!(tensor(&Motive::unit(), &m), m);
        assert_eq!(tensor(&m, &Motive::unit()), m);
        let n = Motive::lefschetz();
        let lhs = dual(&tensor(&m, &n));
        let rhs = tensor(&dual(&m), &dual(&n));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn split_examples() {
        let m = motive_of(&p(1));
        let (img, s, t) = split_idempotent(&m, &m.identity()).unwrap();
        assert_eq!(img, m);
        assert_eq!(compose_motive(&s, &t).unwrap(), img.identity());
        let (z, s0, t0) = split_idempotent(&m, &MotiveMorphism::zero(&m, &m)).unwrap();
        assert!(z.is_zero());
        assert_eq!(compose_motive(&s0, &t0).unwrap(), z.identity());
        let not_idem = m.identity().scale(&rat(2));
        assert!(matches!(
            split_idempotent(&m, &not_idem),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn lefschetz_pieces() {
        let dec = lefschetz_decomposition().unwrap();
        let m = motive_of(&p(1));
        assert_eq!(compose_motive(&dec.alpha, &dec.alpha).unwrap(), dec.alpha);
        assert_eq!(compose_motive(&dec.beta, &dec.beta).unwrap(), dec.beta);
        assert!(compose_motive(&dec.alpha, &dec.beta).unwrap().is_zero());
        assert!(compose_motive(&dec.beta, &dec.alpha).unwrap().is_zero());
        assert_eq!(dec.alpha.try_add(&dec.beta).unwrap(), m.identity());
        assert!(dec.from_unit.is_inverse_of(&dec.to_unit).unwrap());
        let split = dec.split.compose_then(&dec.merge).unwrap();
        assert!(split.is_identity());
        assert!(dec.merge.compose_then(&dec.split).unwrap().is_identity());
    }

    #[test]
    fn tate_is_lefschetz_under_these_conventions() {
        let (f, g) = tate_lefschetz().unwrap();
        assert!(f.is_inverse_of(&g).unwrap());
        // Hom(T, L^dual) sits in degree 2 on Spec K x P^1, which is zero.
        let ld = dual(&Motive::lefschetz());
        assert_eq!(ld.twist() - Motive::tate().twist(), 2);
        assert!(MotiveMorphism::new(
            &Motive::tate(),
            &ld,
            GradedCorrespondence::new(&Variety::point(), &p(1), Cycle::point_class(&p(1))).unwrap()
        )
        .is_err());
    }
}
