//! Chern classes, Chern character, Todd class and square-root Todd class.
//!
//! Chern roots are never materialised. Symmetric expressions in the roots are
//! computed from their power sums, which Newton's identities produce from the
//! total Chern class.

use num_traits::Zero;

use crate::calculus::{pullback, FactorSelection};
use crate::error::{Error, Result};
use crate::rational::{factorial, rat, Rational};
use crate::ring::{Cycle, Variety};
use crate::series::{exp_cycle, inverse_cycle, log_cycle, PowerSeries};

/// Rank and total Chern class of a (possibly virtual) vector bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleClass {
    variety: Variety,
    rank: i64,
    total_chern: Cycle,
    is_virtual: bool,
}

impl BundleClass {
    /// An honest bundle class. `c_i` must vanish for `i > rank` when the rank
    /// is nonnegative; a negative rank makes the class virtual.
    pub fn new(variety: &Variety, rank: i64, total_chern: Cycle) -> Result<Self> {
        let class = Self::virtual_class(variety, rank, total_chern)?;
        if rank >= 0 {
            if let Some(k) = class.total_chern.codims().into_iter().find(|&k| k as i64 > rank) {
                return Err(Error::ChernAboveRank { codim: k, rank });
            }
            Ok(Self {
                is_virtual: false,
                ..class
            })
        } else {
            Ok(class)
        }
    }

    /// A virtual class (formal difference of bundles); no rank bound applies.
    pub fn virtual_class(variety: &Variety, rank: i64, total_chern: Cycle) -> Result<Self> {
        if total_chern.variety() != variety {
            return Err(Error::VarietyMismatch {
                expected: variety.clone(),
                found: total_chern.variety().clone(),
            });
        }
        if total_chern.graded_component(0) != Cycle::one(variety) {
            return Err(Error::ChernConstant);
        }
        Ok(Self {
            variety: variety.clone(),
            rank,
            total_chern,
            is_virtual: true,
        })
    }

    pub fn trivial(variety: &Variety, rank: u32) -> Self {
        Self {
            variety: variety.clone(),
            rank: rank as i64,
            total_chern: Cycle::one(variety),
            is_virtual: false,
        }
    }

    pub fn variety(&self) -> &Variety {
        &self.variety
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn total_chern(&self) -> &Cycle {
        &self.total_chern
    }

    pub fn is_virtual(&self) -> bool {
        self.is_virtual
    }

    /// `c_i`.
    pub fn chern(&self, i: u32) -> Cycle {
        self.total_chern.graded_component(i)
    }

    /// Whitney sum: ranks add and total Chern classes multiply.
    pub fn direct_sum(&self, other: &BundleClass) -> Result<BundleClass> {
        Ok(BundleClass {
            variety: self.variety.clone(),
            rank: self.rank + other.rank,
            total_chern: self.total_chern.try_intersect(&other.total_chern)?,
            is_virtual: self.is_virtual || other.is_virtual,
        })
    }

    /// The virtual class `self - other`.
    pub fn difference(&self, other: &BundleClass) -> Result<BundleClass> {
        let inv = series_inverse(&other.total_chern)?;
        Ok(BundleClass {
            variety: self.variety.clone(),
            rank: self.rank - other.rank,
            total_chern: self.total_chern.try_intersect(&inv)?,
            is_virtual: true,
        })
    }

    /// Inverse image along a projection onto some factors.
    pub fn pullback(&self, sel: &FactorSelection) -> Result<BundleClass> {
        Ok(BundleClass {
            variety: sel.source().clone(),
            rank: self.rank,
            total_chern: pullback(sel, &self.total_chern)?,
            is_virtual: self.is_virtual,
        })
    }
}

/// Newton power sums `p_1, ..., p_d` of the Chern roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumVector {
    variety: Variety,
    sums: Vec<Cycle>,
}

impl PowerSumVector {
    pub fn variety(&self) -> &Variety {
        &self.variety
    }

    /// `p_k` for `k >= 1`; zero beyond the computed range.
    pub fn get(&self, k: usize) -> Cycle {
        assert!(k >= 1, "power sums start at p_1");
        self.sums
            .get(k - 1)
            .cloned()
            .unwrap_or_else(|| Cycle::zero(&self.variety))
    }

    pub fn len(&self) -> usize {
        self.sums.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sums.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Cycle> {
        self.sums.iter()
    }
}

/// Power sums up to `p_{dim X}`.
pub fn power_sums(e: &BundleClass) -> PowerSumVector {
    power_sums_up_to(e, e.variety.dim())
}

/// Power sums `p_1..p_cap` via
/// `p_k = sum_{i=1}^{k-1} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k`.
pub fn power_sums_up_to(e: &BundleClass, cap: u32) -> PowerSumVector {
    let cap = cap.min(e.variety.dim());
    let c: Vec<Cycle> = (0..=cap).map(|i| e.chern(i)).collect();
    let mut sums: Vec<Cycle> = Vec::with_capacity(cap as usize);
    for k in 1..=cap as usize {
        let sign = |i: usize| if i % 2 == 1 { rat(1) } else { rat(-1) };
        let mut pk = c[k].scale(&(sign(k) * rat(k as i64)));
        for i in 1..k {
            if c[i].is_zero() {
                continue;
            }
            pk = &pk + &(&c[i] * &sums[k - i - 1]).scale(&sign(i));
        }
        sums.push(pk);
    }
    PowerSumVector {
        variety: e.variety.clone(),
        sums,
    }
}

/// `ch(E) = rank + sum_k p_k / k!`.
pub fn chern_character(e: &BundleClass) -> Cycle {
    chern_character_up_to(e, e.variety.dim())
}

/// The Chern character with components above codimension `cap` dropped.
pub fn chern_character_up_to(e: &BundleClass, cap: u32) -> Cycle {
    let p = power_sums_up_to(e, cap);
    let mut ch = Cycle::constant(&e.variety, rat(e.rank));
    for (k, pk) in p.iter().enumerate() {
        ch = &ch + &pk.scale(&factorial(k as u32 + 1).recip());
    }
    ch
}

/// `td(E) = exp(sum_k lambda_k p_k)` where `log(x / (1 - e^{-x})) = sum lambda_k x^k`.
pub fn todd_class(e: &BundleClass) -> Cycle {
    todd_class_up_to(e, e.variety.dim())
}

/// The Todd class with components above codimension `cap` dropped.
pub fn todd_class_up_to(e: &BundleClass, cap: u32) -> Cycle {
    let cap = cap.min(e.variety.dim());
    let lambda = PowerSeries::log_todd(cap as usize + 1);
    let p = power_sums_up_to(e, cap);
    let mut log_td = Cycle::zero(&e.variety);
    for (k, pk) in p.iter().enumerate() {
        let l = lambda.coeff(k + 1);
        if !l.is_zero() {
            log_td = &log_td + &pk.scale(&l);
        }
    }
    exp_cycle(&log_td, cap).expect("log td has no constant term")
}

/// Multiplicative inverse of a cycle with nonzero constant term.
pub fn series_inverse(u: &Cycle) -> Result<Cycle> {
    inverse_cycle(u, u.variety().dim())
}

/// Tangent bundle class: `prod_i (1 + h_i)^{n_i + 1}` from the Euler sequences.
pub fn tangent_class(x: &Variety) -> BundleClass {
    let mut c = Cycle::one(x);
    for (i, &n) in x.factors().iter().enumerate() {
        let one_plus_h = &Cycle::one(x) + &Cycle::hyperplane(x, i);
        c = &c * &one_plus_h.pow(n + 1);
    }
    BundleClass {
        variety: x.clone(),
        rank: x.dim() as i64,
        total_chern: c,
        is_virtual: false,
    }
}

/// `td_X`, the Todd class of the tangent bundle.
pub fn todd_of_variety(x: &Variety) -> Cycle {
    todd_class(&tangent_class(x))
}

/// `sqrt(td_X) = exp(log(td_X) / 2)`.
pub fn sqrt_todd(x: &Variety) -> Cycle {
    let d = x.dim();
    let log_td = log_cycle(&todd_of_variety(x), d).expect("td has constant term 1");
    exp_cycle(&log_td.scale(&Rational::new(1.into(), 2.into())), d).expect("no constant term")
}

/// `O(d_1, ..., d_k)`, with `c = 1 + sum d_i h_i`.
pub fn line_bundle(x: &Variety, degrees: &[i64]) -> Result<BundleClass> {
    if degrees.len() != x.num_factors() {
        return Err(Error::InvalidInput(format!(
            "{} degrees given for {x} with {} factors",
            degrees.len(),
            x.num_factors()
        )));
    }
    let mut c = Cycle::one(x);
    for (i, &d) in degrees.iter().enumerate() {
        c = &c + &Cycle::hyperplane(x, i).scale(&rat(d));
    }
    Ok(BundleClass {
        variety: x.clone(),
        rank: 1,
        total_chern: c,
        is_virtual: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn h(v: &Variety, i: usize) -> Cycle {
        Cycle::hyperplane(v, i)
    }

    #[test]
    fn bundle_validation() {
        let p2 = Variety::projective(2);
        let c = &Cycle::one(&p2) + &h(&p2, 0).pow(2);
        assert_eq!(
            BundleClass::new(&p2, 1, c.clone()),
            Err(Error::ChernAboveRank { codim: 2, rank: 1 })
        );
        assert!(BundleClass::virtual_class(&p2, 1, c.clone()).is_ok());
        assert!(BundleClass::new(&p2, -1, c).unwrap().is_virtual());
        assert_eq!(
            BundleClass::new(&p2, 1, h(&p2, 0)),
            Err(Error::ChernConstant)
        );
    }

    #[test]
    fn power_sum_examples() {
        let p3 = Variety::projective(3);
        let l = line_bundle(&p3, &[1]).unwrap();
        let p = power_sums(&l);
        assert_eq!(p.len(), 3);
        for k in 1..=3 {
            assert_eq!(p.get(k), h(&p3, 0).pow(k as u32));
        }
        let t = BundleClass::trivial(&p3, 4);
        assert!(power_sums(&t).iter().all(Cycle::is_zero));
        // rank 2 on P^2 x P^2 with c1 = h1 + h2, c2 = h1 h2: p2 = c1^2 - 2 c2
        let v = Variety::new(vec![2, 2]);
        let c1 = &h(&v, 0) + &h(&v, 1);
        let c2 = &h(&v, 0) * &h(&v, 1);
        let e = BundleClass::new(&v, 2, &(&Cycle::one(&v) + &c1) + &c2).unwrap();
        assert_eq!(power_sums(&e).get(2), &(&c1 * &c1) - &c2.scale(&rat(2)));
    }

    #[test]
    fn chern_character_examples() {
        let p1 = Variety::projective(1);
        for d in -3..=3 {
            let l = line_bundle(&p1, &[d]).unwrap();
            assert_eq!(
                chern_character(&l),
                &Cycle::one(&p1) + &h(&p1, 0).scale(&rat(d))
            );
        }
        // additivity on a sum of line bundles
        let v = Variety::new(vec![1, 2]);
        let a = line_bundle(&v, &[1, -1]).unwrap();
        let b = line_bundle(&v, &[2, 3]).unwrap();
        let s = a.direct_sum(&b).unwrap();
        assert_eq!(chern_character(&s), &chern_character(&a) + &chern_character(&b));
    }

    #[test]
    fn todd_examples() {
        let p1 = Variety::projective(1);
        assert_eq!(todd_of_variety(&p1), &Cycle::one(&p1) + &h(&p1, 0));
        let p2 = Variety::projective(2);
        // td(P^2) = 1 + 3/2 h + h^2
        let expected = &(&Cycle::one(&p2) + &h(&p2, 0).scale(&frac(3, 2))) + &h(&p2, 0).pow(2);
        assert_eq!(todd_of_variety(&p2), expected);
        let a = line_bundle(&p2, &[1]).unwrap();
        let b = line_bundle(&p2, &[-2]).unwrap();
        assert_eq!(
            todd_class(&a.direct_sum(&b).unwrap()),
            &todd_class(&a) * &todd_class(&b)
        );
    }

    #[test]
    fn tangent_examples() {
        let k = Variety::point();
        let t = tangent_class(&k);
        assert_eq!(t.rank(), 0);
        assert_eq!(t.total_chern(), &Cycle::one(&k));
        let p1 = Variety::projective(1);
        assert_eq!(
            tangent_class(&p1).total_chern().clone(),
            &Cycle::one(&p1) + &h(&p1, 0).scale(&rat(2))
        );
        let p2 = Variety::projective(2);
        let t2 = tangent_class(&p2);
        assert_eq!(t2.rank(), 2);
        assert_eq!(
            t2.total_chern().clone(),
            &(&Cycle::one(&p2) + &h(&p2, 0).scale(&rat(3))) + &h(&p2, 0).pow(2).scale(&rat(3))
        );
    }

    #[test]
    fn sqrt_todd_examples() {
        assert_eq!(sqrt_todd(&Variety::point()), Cycle::one(&Variety::point()));
        let p1 = Variety::projective(1);
        assert_eq!(
            sqrt_todd(&p1),
            &Cycle::one(&p1) + &h(&p1, 0).scale(&frac(1, 2))
        );
        for f in [vec![1, 2], vec![2, 2]] {
            let v = Variety::new(f);
            let s = sqrt_todd(&v);
            assert_eq!(&s * &s, todd_of_variety(&v));
        }
    }

    #[test]
    fn line_bundle_examples() {
        let v = Variety::new(vec![1, 1]);
        assert_eq!(line_bundle(&v, &[0, 0]).unwrap().total_chern(), &Cycle::one(&v));
        let p2 = Variety::projective(2);
        assert_eq!(
            line_bundle(&p2, &[3]).unwrap().total_chern().clone(),
            &Cycle::one(&p2) + &h(&p2, 0).scale(&rat(3))
        );
        assert_eq!(
            line_bundle(&v, &[1, -2]).unwrap().total_chern().clone(),
            &(&Cycle::one(&v) + &h(&v, 0)) - &h(&v, 1).scale(&rat(2))
        );
        assert!(line_bundle(&v, &[1]).is_err());
    }

    #[test]
    fn series_inverse_examples() {
        let p2 = Variety::projective(2);
        assert_eq!(series_inverse(&Cycle::one(&p2)).unwrap(), Cycle::one(&p2));
        assert_eq!(
            series_inverse(&(&Cycle::one(&p2) + &h(&p2, 0))).unwrap(),
            &(&Cycle::one(&p2) - &h(&p2, 0)) + &h(&p2, 0).pow(2)
        );
        assert_eq!(series_inverse(&h(&p2, 0)), Err(Error::SingularSeries));
    }

    #[test]
    fn virtual_difference_roundtrip() {
        let p2 = Variety::projective(2);
        let a = line_bundle(&p2, &[2]).unwrap();
        let b = line_bundle(&p2, &[-1]).unwrap();
        let d = a.difference(&b).unwrap();
        assert!(d.is_virtual());
        assert_eq!(d.rank(), 0);
        assert_eq!(
            chern_character(&d),
            &chern_character(&a) - &chern_character(&b)
        );
    }
}
