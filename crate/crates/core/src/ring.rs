//! Chow rings of products of projective spaces.
//!
//! For `X = P^{n_1} x ... x P^{n_k}` the rational Chow ring is the truncated
//! polynomial ring `Q[h_1..h_k] / (h_i^{n_i + 1})`, where `h_i` is the pullback
//! of the hyperplane class of the i-th factor. A [`Cycle`] is an element of
//! that ring stored as a sparse map from exponent vectors to coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

/// A finite product of projective spaces, recorded by the factor dimensions.
///
/// The empty product is `Spec K`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Variety {
    factors: Vec<u32>,
}

impl Variety {
    pub fn new(factors: Vec<u32>) -> Self {
        Self { factors }
    }

    pub fn point() -> Self {
        Self::default()
    }

    pub fn projective(n: u32) -> Self {
        Self::new(vec![n])
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn dim(&self) -> u32 {
        self.factors.iter().sum()
    }

    pub fn is_point(&self) -> bool {
        self.factors.is_empty()
    }

    /// The product `self x other`, factors of `self` first.
    pub fn product(&self, other: &Variety) -> Variety {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Variety::new(factors)
    }

    pub fn square(&self) -> Variety {
        self.product(self)
    }

    /// Exponent vector of the point class `h_1^{n_1} ... h_k^{n_k}`.
    pub fn top_exponents(&self) -> Vec<u32> {
        self.factors.clone()
    }

    /// Number of monomials in the additive basis, `prod (n_i + 1)`.
    pub fn basis_size(&self) -> usize {
        self.factors.iter().map(|&n| n as usize + 1).product()
    }

    /// All basis monomials in lexicographic order.
    pub fn basis(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::with_capacity(self.factors.len())];
        for &n in &self.factors {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=n).map(move |e| {
                        let mut v = prefix.clone();
                        v.push(e);
                        v
                    })
                })
                .collect();
        }
        out
    }

    pub fn admits(&self, exps: &[u32]) -> bool {
        exps.len() == self.factors.len() && exps.iter().zip(&self.factors).all(|(e, n)| e <= n)
    }
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("Spec K");
        }
        let parts: Vec<String> = self.factors.iter().map(|n| format!("P^{n}")).collect();
        f.write_str(&parts.join(" x "))
    }
}

/// Builds a variety from signed dimensions, rejecting negative entries.
pub fn make_variety(dims: &[i64]) -> Result<Variety> {
    let factors = dims
        .iter()
        .map(|&d| {
            u32::try_from(d).map_err(|_| Error::InvalidInput(format!("negative dimension {d}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Variety::new(factors))
}

/// An element of `CH*(X, Q)`.
///
/// Terms never carry a zero coefficient and never violate the truncation
/// bounds, so equal cycles have identical term maps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    variety: Variety,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Cycle {
    pub fn zero(variety: &Variety) -> Self {
        Self {
            variety: variety.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(variety: &Variety) -> Self {
        Self::constant(variety, Rational::one())
    }

    pub fn constant(variety: &Variety, c: Rational) -> Self {
        let mut out = Self::zero(variety);
        out.add_term(vec![0; variety.num_factors()], c);
        out
    }

    /// `c * h^exps`, or zero if a truncation bound is exceeded.
    ///
    /// Panics if `exps` has the wrong length.
    pub fn monomial(variety: &Variety, exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), variety.num_factors(), "exponent vector length");
        let mut out = Self::zero(variety);
        if variety.admits(&exps) {
            out.add_term(exps, c);
        }
        out
    }

    /// The hyperplane class of factor `i`.
    pub fn hyperplane(variety: &Variety, i: usize) -> Self {
        let mut exps = vec![0; variety.num_factors()];
        exps[i] = 1;
        Self::monomial(variety, exps, Rational::one())
    }

    /// The class of a point.
    pub fn point_class(variety: &Variety) -> Self {
        Self::monomial(variety, variety.top_exponents(), Rational::one())
    }

    /// Builds a cycle from explicit terms. Repeated exponent vectors are summed.
    pub fn from_terms<I>(variety: &Variety, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut out = Self::zero(variety);
        for (exps, c) in terms {
            if exps.len() != variety.num_factors() {
                return Err(Error::InvalidInput(format!(
                    "exponent vector {exps:?} has length {} but {variety} has {} factors",
                    exps.len(),
                    variety.num_factors()
                )));
            }
            if !variety.admits(&exps) {
                return Err(Error::InvalidInput(format!(
                    "exponent vector {exps:?} exceeds the nilpotency bounds of {variety}"
                )));
            }
            out.add_term(exps, c);
        }
        Ok(out)
    }

    pub(crate) fn from_map_unchecked(variety: Variety, terms: BTreeMap<Vec<u32>, Rational>) -> Self {
        debug_assert!(terms
            .iter()
            .all(|(e, c)| variety.admits(e) && !c.is_zero()));
        Self { variety, terms }
    }

    pub(crate) fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn variety(&self) -> &Variety {
        &self.variety
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.variety.num_factors()])
    }

    /// Codimensions of the nonzero terms, ascending and without repeats.
    pub fn codims(&self) -> Vec<u32> {
        let mut cs: Vec<u32> = self.terms.keys().map(|e| codim_of(e)).collect();
        cs.sort_unstable();
        cs.dedup();
        cs
    }

    /// The codimension of a pure nonzero cycle; `None` for mixed cycles and zero.
    pub fn pure_codim(&self) -> Option<u32> {
        match self.codims().as_slice() {
            [c] => Some(*c),
            _ => None,
        }
    }

    pub fn min_codim(&self) -> Option<u32> {
        self.terms.keys().map(|e| codim_of(e)).min()
    }

    pub fn max_codim(&self) -> Option<u32> {
        self.terms.keys().map(|e| codim_of(e)).max()
    }

    pub fn graded_component(&self, k: u32) -> Cycle {
        self.filter(|e| codim_of(e) == k)
    }

    /// Drops all terms of codimension above `k`.
    pub fn truncate_codim(&self, k: u32) -> Cycle {
        self.filter(|e| codim_of(e) <= k)
    }

    fn filter(&self, keep: impl Fn(&[u32]) -> bool) -> Cycle {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| keep(e))
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Cycle::from_map_unchecked(self.variety.clone(), terms)
    }

    /// Coefficient of the point class.
    pub fn degree(&self) -> Rational {
        self.coeff(&self.variety.top_exponents())
    }

    pub fn scale(&self, c: &Rational) -> Cycle {
        if c.is_zero() {
            return Cycle::zero(&self.variety);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, x)| (e.clone(), x * c))
            .collect();
        Cycle::from_map_unchecked(self.variety.clone(), terms)
    }

    fn check_same(&self, other: &Cycle) -> Result<()> {
        if self.variety != other.variety {
            return Err(Error::VarietyMismatch {
                expected: self.variety.clone(),
                found: other.variety.clone(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Cycle) -> Result<Cycle> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Cycle) -> Result<Cycle> {
        self.try_add(&-other)
    }

    pub fn try_intersect(&self, other: &Cycle) -> Result<Cycle> {
        self.check_same(other)?;
        Ok(self.product_up_to(other, u32::MAX))
    }

    /// Truncated product keeping only terms of codimension `<= max_codim`.
    pub(crate) fn product_up_to(&self, other: &Cycle, max_codim: u32) -> Cycle {
        let bounds = self.variety.factors();
        let mut terms: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            let da = codim_of(ea);
            'inner: for (eb, cb) in &other.terms {
                if da + codim_of(eb) > max_codim {
                    continue;
                }
                let mut e = Vec::with_capacity(ea.len());
                for ((x, y), n) in ea.iter().zip(eb).zip(bounds) {
                    let s = x + y;
                    if s > *n {
                        continue 'inner;
                    }
                    e.push(s);
                }
                let slot = terms.entry(e).or_insert_with(Rational::zero);
                *slot += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Cycle::from_map_unchecked(self.variety.clone(), terms)
    }

    pub fn pow(&self, k: u32) -> Cycle {
        (0..k).fold(Cycle::one(&self.variety), |acc, _| &acc * self)
    }

    /// Applies `f` to every exponent vector, re-housing the cycle on `target`.
    /// Terms mapped to `None` are dropped. `f` must respect `target`'s bounds.
    pub(crate) fn map_exponents(
        &self,
        target: &Variety,
        f: impl Fn(&[u32]) -> Option<Vec<u32>>,
    ) -> Cycle {
        let mut out = Cycle::zero(target);
        for (e, c) in &self.terms {
            if let Some(ne) = f(e) {
                debug_assert!(target.admits(&ne));
                out.add_term(ne, c.clone());
            }
        }
        out
    }
}

pub(crate) fn codim_of(exps: &[u32]) -> u32 {
    exps.iter().sum()
}

/// Sum of two cycles on the same variety.
pub fn cycle_add(a: &Cycle, b: &Cycle) -> Result<Cycle> {
    a.try_add(b)
}

pub fn cycle_scale(c: &Rational, a: &Cycle) -> Cycle {
    a.scale(c)
}

/// Intersection product, truncated by the nilpotency relations.
pub fn intersect(a: &Cycle, b: &Cycle) -> Result<Cycle> {
    a.try_intersect(b)
}

pub fn graded_component(a: &Cycle, k: u32) -> Cycle {
    a.graded_component(k)
}

pub fn degree(a: &Cycle) -> Rational {
    a.degree()
}

// Operator forms panic on a variety mismatch; the `try_*` methods report it.

impl Add for &Cycle {
    type Output = Cycle;
    fn add(self, rhs: &Cycle) -> Cycle {
        self.try_add(rhs).expect("cycle addition across varieties")
    }
}

impl Sub for &Cycle {
    type Output = Cycle;
    fn sub(self, rhs: &Cycle) -> Cycle {
        self.try_sub(rhs).expect("cycle subtraction across varieties")
    }
}

impl Mul for &Cycle {
    type Output = Cycle;
    fn mul(self, rhs: &Cycle) -> Cycle {
        self.try_intersect(rhs)
            .expect("intersection across varieties")
    }
}

impl Neg for &Cycle {
    type Output = Cycle;
    fn neg(self) -> Cycle {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        Cycle::from_map_unchecked(self.variety.clone(), terms)
    }
}

impl Add for Cycle {
    type Output = Cycle;
    fn add(self, rhs: Cycle) -> Cycle {
        &self + &rhs
    }
}

impl Sub for Cycle {
    type Output = Cycle;
    fn sub(self, rhs: Cycle) -> Cycle {
        &self - &rhs
    }
}

impl Mul for Cycle {
    type Output = Cycle;
    fn mul(self, rhs: Cycle) -> Cycle {
        &self * &rhs
    }
}

impl Neg for Cycle {
    type Output = Cycle;
    fn neg(self) -> Cycle {
        -&self
    }
}

impl fmt::Display for Cycle {
    /// Human-readable form, e.g. `2*h1*h2^2 - 1/2*h1 + 3`, highest codimension first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let single = self.variety.num_factors() == 1;
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| codim_of(b).cmp(&codim_of(a)).then_with(|| b.cmp(a)));
        for (idx, (exps, c)) in ordered.into_iter().enumerate() {
            let mut vars = Vec::new();
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = if single { "h".to_string() } else { format!("h{}", i + 1) };
                vars.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            let mag = c.abs();
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let coeff = format_rational(&mag);
            match (vars.is_empty(), mag.is_one()) {
                (true, _) => f.write_str(&coeff)?,
                (false, true) => f.write_str(&vars.join("*"))?,
                (false, false) => write!(f, "{coeff}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    fn h(v: &Variety, i: usize) -> Cycle {
        Cycle::hyperplane(v, i)
    }

    #[test]
    fn make_variety_examples() {
        let k = make_variety(&[]).unwrap();
        assert!(k.is_point());
        assert_eq!(k.dim(), 0);
        assert_eq!(k.basis_size(), 1);
        let p1 = make_variety(&[1]).unwrap();
        assert_eq!(p1.basis(), vec![vec![0], vec![1]]);
        let p12 = make_variety(&[1, 2]).unwrap();
        assert_eq!(p12.dim(), 3);
        assert_eq!(p12.basis_size(), 6);
        // h1^2 = 0, h2^3 = 0
        assert!(h(&p12, 0).pow(2).is_zero());
        assert!(h(&p12, 1).pow(3).is_zero());
        assert!(!h(&p12, 1).pow(2).is_zero());
        assert!(matches!(
            make_variety(&[1, -1]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn add_and_scale() {
        let p1 = Variety::projective(1);
        assert_eq!(&h(&p1, 0) + &h(&p1, 0), h(&p1, 0).scale(&rat(2)));
        let a = &Cycle::one(&p1) + &h(&p1, 0);
        assert!(cycle_scale(&rat(0), &a).is_zero());
        let q = Variety::new(vec![1, 1]);
        let s = &h(&q, 0) + &h(&q, 1);
        let d = &h(&q, 0) - &h(&q, 1);
        let sum = cycle_add(&s.scale(&frac(1, 2)), &d.scale(&frac(1, 2))).unwrap();
        assert_eq!(sum, h(&q, 0));
        assert!(matches!(
            cycle_add(&Cycle::one(&p1), &Cycle::one(&q)),
            Err(Error::VarietyMismatch { .. })
        ));
    }

    #[test]
    fn intersect_examples() {
        let p1 = Variety::projective(1);
        assert!(intersect(&h(&p1, 0), &h(&p1, 0)).unwrap().is_zero());
        let p2 = Variety::projective(2);
        assert_eq!(
            intersect(&h(&p2, 0), &h(&p2, 0)).unwrap(),
            Cycle::monomial(&p2, vec![2], rat(1))
        );
        let q = Variety::new(vec![1, 1]);
        let s = &h(&q, 0) + &h(&q, 1);
        // (h1 + h2)^2 = h1^2 + 2 h1 h2 + h2^2 = 2 h1 h2 after truncation
        assert_eq!(
            intersect(&s, &s).unwrap(),
            Cycle::monomial(&q, vec![1, 1], rat(2))
        );
        assert!(intersect(&s, &Cycle::one(&p1)).is_err());
    }

    #[test]
    fn graded_components() {
        let p1 = Variety::projective(1);
        let a = &Cycle::one(&p1) + &h(&p1, 0);
        assert_eq!(graded_component(&a, 1), h(&p1, 0));
        assert!(graded_component(&Cycle::zero(&p1), 0).is_zero());
        let p2 = Variety::projective(2);
        let b = (&Cycle::one(&p2) + &h(&p2, 0)).pow(3);
        // (1+h)^3 = 1 + 3h + 3h^2 + h^3, h^3 = 0
        assert_eq!(
            graded_component(&b, 2),
            Cycle::monomial(&p2, vec![2], rat(3))
        );
    }

    #[test]
    fn degree_examples() {
        let p1 = Variety::projective(1);
        assert_eq!(degree(&h(&p1, 0)), rat(1));
        assert_eq!(degree(&Cycle::one(&p1)), rat(0));
        let p12 = Variety::new(vec![1, 2]);
        assert_eq!(degree(&Cycle::monomial(&p12, vec![1, 2], rat(3))), rat(3));
        assert_eq!(degree(&Cycle::one(&Variety::point())), rat(1));
    }

    #[test]
    fn from_terms_validation() {
        let p1 = Variety::projective(1);
        assert!(Cycle::from_terms(&p1, [(vec![2], rat(1))]).is_err());
        assert!(Cycle::from_terms(&p1, [(vec![0, 0], rat(1))]).is_err());
        let c = Cycle::from_terms(&p1, [(vec![1], rat(1)), (vec![1], rat(-1))]).unwrap();
        assert!(c.is_zero());
        assert_eq!(c.num_terms(), 0);
    }

    #[test]
    fn display() {
        let q = Variety::new(vec![1, 2]);
        let c = Cycle::from_terms(
            &q,
            [
                (vec![1, 2], rat(2)),
                (vec![1, 0], frac(-1, 2)),
                (vec![0, 0], rat(3)),
            ],
        )
        .unwrap();
        assert_eq!(c.to_string(), "2*h1*h2^2 - 1/2*h1 + 3");
        let p1 = Variety::projective(1);
        assert_eq!((-h(&p1, 0)).to_string(), "-h");
        assert_eq!(Cycle::zero(&p1).to_string(), "0");
    }
}
