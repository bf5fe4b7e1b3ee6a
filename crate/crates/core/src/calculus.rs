//! Correspondence calculus: projections, diagonals, transpose and composition.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::Rational;
use crate::ring::{Cycle, Variety};

/// A projection `source -> prod_{i in selected} source_i` onto some factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSelection {
    source: Variety,
    selected: Vec<usize>,
    target: Variety,
}

impl FactorSelection {
    pub fn new(source: &Variety, selected: Vec<usize>) -> Result<Self> {
        let increasing = selected.windows(2).all(|w| w[0] < w[1]);
        let in_range = selected.iter().all(|&i| i < source.num_factors());
        if !increasing || !in_range {
            return Err(Error::BadSelection {
                source_variety: source.clone(),
                selected,
            });
        }
        let target = Variety::new(selected.iter().map(|&i| source.factors()[i]).collect());
        Ok(Self {
            source: source.clone(),
            selected,
            target,
        })
    }

    /// Projection of `x x y` onto `x`.
    pub fn first(x: &Variety, y: &Variety) -> Self {
        Self::new(&x.product(y), (0..x.num_factors()).collect()).expect("valid block")
    }

    /// Projection of `x x y` onto `y`.
    pub fn second(x: &Variety, y: &Variety) -> Self {
        let k = x.num_factors();
        Self::new(&x.product(y), (k..k + y.num_factors()).collect()).expect("valid block")
    }

    pub fn source(&self) -> &Variety {
        &self.source
    }

    pub fn target(&self) -> &Variety {
        &self.target
    }

    pub fn selected(&self) -> &[usize] {
        &self.selected
    }

    /// Relative dimension of the projection.
    pub fn fiber_dim(&self) -> u32 {
        self.source.dim() - self.target.dim()
    }

    /// The complementary projection onto the fibre factors.
    pub fn complement(&self) -> FactorSelection {
        let rest = (0..self.source.num_factors())
            .filter(|i| !self.selected.contains(i))
            .collect();
        FactorSelection::new(&self.source, rest).expect("complement is valid")
    }
}

fn expect_variety(expected: &Variety, c: &Cycle) -> Result<()> {
    if c.variety() != expected {
        return Err(Error::VarietyMismatch {
            expected: expected.clone(),
            found: c.variety().clone(),
        });
    }
    Ok(())
}

/// Inverse image along a projection. A ring homomorphism of degree zero.
pub fn pullback(sel: &FactorSelection, a: &Cycle) -> Result<Cycle> {
    expect_variety(&sel.target, a)?;
    let n = sel.source.num_factors();
    Ok(a.map_exponents(&sel.source, |e| {
        let mut out = vec![0; n];
        for (&i, &x) in sel.selected.iter().zip(e) {
            out[i] = x;
        }
        Some(out)
    }))
}

/// Direct image along a projection: integrates over the fibre, keeping only
/// terms that carry the point class on every projected-away factor.
pub fn pushforward(sel: &FactorSelection, a: &Cycle) -> Result<Cycle> {
    expect_variety(&sel.source, a)?;
    let bounds = sel.source.factors();
    let mut keep = vec![false; bounds.len()];
    for &i in &sel.selected {
        keep[i] = true;
    }
    Ok(a.map_exponents(&sel.target, |e| {
        let fiber_top = e
            .iter()
            .zip(bounds)
            .zip(&keep)
            .all(|((x, n), k)| *k || x == n);
        fiber_top.then(|| sel.selected.iter().map(|&i| e[i]).collect())
    }))
}

/// Exterior product `a x b` on `X x Y`.
pub fn cartesian(a: &Cycle, b: &Cycle) -> Cycle {
    let v = a.variety().product(b.variety());
    let mut terms = BTreeMap::new();
    for (ea, ca) in a.terms() {
        for (eb, cb) in b.terms() {
            let mut e = ea.clone();
            e.extend_from_slice(eb);
            terms.insert(e, ca * cb);
        }
    }
    Cycle::from_map_unchecked(v, terms)
}

/// Reorders the factors of `c` according to `perm`: factor `i` of the result
/// is factor `perm[i]` of `c`.
pub fn permute_factors(c: &Cycle, perm: &[usize]) -> Result<Cycle> {
    let k = c.variety().num_factors();
    let mut seen = vec![false; k];
    if perm.len() != k || perm.iter().any(|&p| p >= k || std::mem::replace(&mut seen[p], true)) {
        return Err(Error::InvalidInput(format!(
            "{perm:?} is not a permutation of {k} factors"
        )));
    }
    let f = c.variety().factors();
    let target = Variety::new(perm.iter().map(|&p| f[p]).collect());
    Ok(c.map_exponents(&target, |e| Some(perm.iter().map(|&p| e[p]).collect())))
}

/// A graded correspondence from `source` to `target`: any cycle on
/// `source x target`. Its degree-`d` part is the codimension `dim source + d`
/// component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedCorrespondence {
    source: Variety,
    target: Variety,
    cycle: Cycle,
}

impl GradedCorrespondence {
    pub fn new(source: &Variety, target: &Variety, cycle: Cycle) -> Result<Self> {
        expect_variety(&source.product(target), &cycle)?;
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            cycle,
        })
    }

    pub fn zero(source: &Variety, target: &Variety) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            cycle: Cycle::zero(&source.product(target)),
        }
    }

    /// The diagonal, i.e. the identity of `x`.
    pub fn identity(x: &Variety) -> Self {
        Self {
            source: x.clone(),
            target: x.clone(),
            cycle: diagonal_class(x),
        }
    }

    pub fn source(&self) -> &Variety {
        &self.source
    }

    pub fn target(&self) -> &Variety {
        &self.target
    }

    pub fn cycle(&self) -> &Cycle {
        &self.cycle
    }

    pub fn into_cycle(self) -> Cycle {
        self.cycle
    }

    pub fn is_zero(&self) -> bool {
        self.cycle.is_zero()
    }

    pub fn codim_of_degree(&self, d: i64) -> Option<u32> {
        u32::try_from(self.source.dim() as i64 + d).ok()
    }

    pub fn degree_part(&self, d: i64) -> GradedCorrespondence {
        let cycle = match self.codim_of_degree(d) {
            Some(k) => self.cycle.graded_component(k),
            None => Cycle::zero(self.cycle.variety()),
        };
        self.with_cycle(cycle)
    }

    /// Degrees carrying a nonzero component, ascending.
    pub fn degrees(&self) -> Vec<i64> {
        let m = self.source.dim() as i64;
        self.cycle.codims().into_iter().map(|k| k as i64 - m).collect()
    }

    /// `Some(d)` if the correspondence is nonzero and of pure degree `d`.
    pub fn pure_degree(&self) -> Option<i64> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    /// True if zero or concentrated in degree `d`.
    pub fn is_of_degree(&self, d: i64) -> bool {
        self.is_zero() || self.pure_degree() == Some(d)
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.degrees().first().copied()
    }

    pub(crate) fn with_cycle(&self, cycle: Cycle) -> GradedCorrespondence {
        debug_assert_eq!(cycle.variety(), self.cycle.variety());
        GradedCorrespondence {
            source: self.source.clone(),
            target: self.target.clone(),
            cycle,
        }
    }

    pub fn try_add(&self, other: &GradedCorrespondence) -> Result<GradedCorrespondence> {
        self.check_parallel(other)?;
        Ok(self.with_cycle(&self.cycle + &other.cycle))
    }

    pub fn try_sub(&self, other: &GradedCorrespondence) -> Result<GradedCorrespondence> {
        self.check_parallel(other)?;
        Ok(self.with_cycle(&self.cycle - &other.cycle))
    }

    pub fn scale(&self, c: &Rational) -> GradedCorrespondence {
        self.with_cycle(self.cycle.scale(c))
    }

    fn check_parallel(&self, other: &GradedCorrespondence) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::ObjectMismatch(format!(
                "{} -> {} vs {} -> {}",
                self.source, self.target, other.source, other.target
            )));
        }
        Ok(())
    }

    /// Action on classes: `a |-> (p_Y)_*(c . p_X^* a)`.
    pub fn apply(&self, a: &Cycle) -> Result<Cycle> {
        let pulled = pullback(&FactorSelection::first(&self.source, &self.target), a)?;
        pushforward(
            &FactorSelection::second(&self.source, &self.target),
            &(&pulled * &self.cycle),
        )
    }
}

/// Swaps the two factor blocks, turning `X -> Y` into `Y -> X`.
pub fn transpose(c: &GradedCorrespondence) -> GradedCorrespondence {
    let kx = c.source.num_factors();
    let ky = c.target.num_factors();
    let perm: Vec<usize> = (kx..kx + ky).chain(0..kx).collect();
    let cycle = permute_factors(&c.cycle, &perm).expect("block swap is a permutation");
    GradedCorrespondence {
        source: c.target.clone(),
        target: c.source.clone(),
        cycle,
    }
}

/// Class of the diagonal in `X x X`.
///
/// On a single `P^n` this is `sum_i h_1^i h_2^{n-i}`; on a product it is the
/// intersection of the per-factor diagonals pulled back to `X x X`.
pub fn diagonal_class(x: &Variety) -> Cycle {
    let xx = x.square();
    let k = x.num_factors();
    let mut out = Cycle::one(&xx);
    for (i, &n) in x.factors().iter().enumerate() {
        let pn = Variety::projective(n);
        let mut per_factor = Cycle::zero(&pn.square());
        for j in 0..=n {
            per_factor.add_term(vec![j, n - j], Rational::from_integer(1.into()));
        }
        let sel = FactorSelection::new(&xx, vec![i, k + i]).expect("valid pair");
        out = &out * &pullback(&sel, &per_factor).expect("variety matches");
    }
    out
}

/// `Delta_*(g) = p_1^*(g) . [Delta]`.
pub fn diagonal_pushforward(x: &Variety, g: &Cycle) -> Result<Cycle> {
    let pulled = pullback(&FactorSelection::first(x, x), g)?;
    Ok(&pulled * &diagonal_class(x))
}

fn check_middle(f: &GradedCorrespondence, g: &GradedCorrespondence) -> Result<()> {
    if f.target != g.source {
        return Err(Error::MiddleMismatch {
            left: f.target.clone(),
            right: g.source.clone(),
        });
    }
    Ok(())
}

/// Composite `beta o alpha = (p_XZ)_*(p_XY^* alpha . p_YZ^* beta)` of two
/// homogeneous correspondences `alpha: X -> Y`, `beta: Y -> Z`.
///
/// Mixed-codimension inputs are rejected; use [`compose_graded`].
pub fn compose_homogeneous(
    alpha: &GradedCorrespondence,
    beta: &GradedCorrespondence,
) -> Result<GradedCorrespondence> {
    check_middle(alpha, beta)?;
    if alpha.cycle.codims().len() > 1 || beta.cycle.codims().len() > 1 {
        return Err(Error::NotPure);
    }
    let (x, y, z) = (&alpha.source, &alpha.target, &beta.target);
    let xyz = x.product(y).product(z);
    let (kx, ky, kz) = (x.num_factors(), y.num_factors(), z.num_factors());
    let p_xy = FactorSelection::new(&xyz, (0..kx + ky).collect())?;
    let p_yz = FactorSelection::new(&xyz, (kx..kx + ky + kz).collect())?;
    let p_xz = FactorSelection::new(&xyz, (0..kx).chain(kx + ky..kx + ky + kz).collect())?;
    let product = &pullback(&p_xy, &alpha.cycle)? * &pullback(&p_yz, &beta.cycle)?;
    GradedCorrespondence::new(x, z, pushforward(&p_xz, &product)?)
}

/// Composite `g o f` of graded correspondences `f: X -> Y`, `g: Y -> Z`.
///
/// A term `x^a y^b` of `f` pairs with a term `y^c z^d` of `g` exactly when
/// `b + c` is the top exponent of `Y`; then it contributes `x^a z^d`.
pub fn compose_graded(
    f: &GradedCorrespondence,
    g: &GradedCorrespondence,
) -> Result<GradedCorrespondence> {
    check_middle(f, g)?;
    let kx = f.source.num_factors();
    let top_y = f.target.factors();
    // Index g's terms by the complementary middle exponent they need.
    let mut by_middle: BTreeMap<Vec<u32>, Vec<(&[u32], &Rational)>> = BTreeMap::new();
    for (e, c) in g.cycle.terms() {
        let (mid, rest) = e.split_at(top_y.len());
        let need: Vec<u32> = mid.iter().zip(top_y).map(|(m, n)| n - m).collect();
        by_middle.entry(need).or_default().push((rest, c));
    }
    let xz = f.source.product(&g.target);
    let mut terms: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    for (e, c) in f.cycle.terms() {
        let (xs, mid) = e.split_at(kx);
        if let Some(partners) = by_middle.get(mid) {
            for (zs, d) in partners {
                let mut key = xs.to_vec();
                key.extend_from_slice(zs);
                *terms.entry(key).or_insert_with(Rational::zero) += c * *d;
            }
        }
    }
    terms.retain(|_, c| !c.is_zero());
    Ok(GradedCorrespondence {
        source: f.source.clone(),
        target: g.target.clone(),
        cycle: Cycle::from_map_unchecked(xz, terms),
    })
}

/// Reference route for [`compose_graded`]: splits both sides into homogeneous
/// pieces and sums `compose_homogeneous` over all pairs.
pub fn compose_graded_by_parts(
    f: &GradedCorrespondence,
    g: &GradedCorrespondence,
) -> Result<GradedCorrespondence> {
    check_middle(f, g)?;
    let mut out = GradedCorrespondence::zero(&f.source, &g.target);
    for i in f.cycle.codims() {
        let fi = f.with_cycle(f.cycle.graded_component(i));
        for j in g.cycle.codims() {
            let gj = g.with_cycle(g.cycle.graded_component(j));
            out = out.try_add(&compose_homogeneous(&fi, &gj)?)?;
        }
    }
    Ok(out)
}

/// `f (x) g : X x Y -> X' x Y'` for `f: X -> X'`, `g: Y -> Y'`.
pub fn tensor_correspondences(
    f: &GradedCorrespondence,
    g: &GradedCorrespondence,
) -> GradedCorrespondence {
    let (kx, kx2) = (f.source.num_factors(), f.target.num_factors());
    let (ky, ky2) = (g.source.num_factors(), g.target.num_factors());
    // cartesian lives on X x X' x Y x Y'; reorder to X x Y x X' x Y'.
    let base = kx + kx2;
    let perm: Vec<usize> = (0..kx)
        .chain(base..base + ky)
        .chain(kx..base)
        .chain(base + ky..base + ky + ky2)
        .collect();
    let cycle = permute_factors(&cartesian(&f.cycle, &g.cycle), &perm).expect("permutation");
    GradedCorrespondence {
        source: f.source.product(&g.source),
        target: f.target.product(&g.target),
        cycle,
    }
}

/// Two-sided inverse of `f: X -> Y` in graded correspondences, found by
/// solving the linear system `g o f = id_X` and then checking `f o g = id_Y`.
pub fn invert(f: &GradedCorrespondence) -> Result<GradedCorrespondence> {
    let (x, y) = (&f.source, &f.target);
    let yx = y.product(x);
    let unknowns = yx.basis();
    let rows = x.square().basis();
    let row_index: BTreeMap<&Vec<u32>, usize> =
        rows.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut m = Matrix::zeros(rows.len(), unknowns.len());
    for (j, e) in unknowns.iter().enumerate() {
        let g = GradedCorrespondence {
            source: y.clone(),
            target: x.clone(),
            cycle: Cycle::monomial(&yx, e.clone(), Rational::one()),
        };
        for (t, c) in compose_graded(f, &g)?.cycle.terms() {
            m.set(row_index[t], j, c.clone());
        }
    }
    let id = diagonal_class(x);
    let rhs: Vec<Rational> = rows.iter().map(|e| id.coeff(e)).collect();
    let sol = m.solve(&rhs).ok_or(Error::NotInvertible)?;
    let g = GradedCorrespondence {
        source: y.clone(),
        target: x.clone(),
        cycle: Cycle::from_terms(&yx, unknowns.into_iter().zip(sol))?,
    };
    if compose_graded(&g, f)? != GradedCorrespondence::identity(y) {
        return Err(Error::NotInvertible);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn mono(v: &Variety, e: Vec<u32>, c: i64) -> Cycle {
        Cycle::monomial(v, e, rat(c))
    }

    fn corr(x: &Variety, y: &Variety, c: Cycle) -> GradedCorrespondence {
        GradedCorrespondence::new(x, y, c).unwrap()
    }

    #[test]
    fn selection_validation() {
        let v = Variety::new(vec![1, 2, 3]);
        assert!(FactorSelection::new(&v, vec![0, 2]).is_ok());
        assert!(FactorSelection::new(&v, vec![2, 0]).is_err());
        assert!(FactorSelection::new(&v, vec![1, 1]).is_err());
        assert!(FactorSelection::new(&v, vec![3]).is_err());
        let s = FactorSelection::new(&v, vec![0, 2]).unwrap();
        assert_eq!(s.target(), &Variety::new(vec![1, 3]));
        assert_eq!(s.fiber_dim(), 2);
        assert_eq!(s.complement().selected(), &[1]);
    }

    #[test]
    fn pullback_examples() {
        let p1 = Variety::projective(1);
        let p2 = Variety::projective(2);
        let s = FactorSelection::first(&p1, &p2);
        assert_eq!(
            pullback(&s, &Cycle::hyperplane(&p1, 0)).unwrap(),
            mono(&p1.product(&p2), vec![1, 0], 1)
        );
        assert_eq!(
            pullback(&s, &Cycle::one(&p1)).unwrap(),
            Cycle::one(&p1.product(&p2))
        );
        let s2 = FactorSelection::second(&p2, &p2);
        assert_eq!(
            pullback(&s2, &mono(&p2, vec![2], 1)).unwrap(),
            mono(&p2.square(), vec![0, 2], 1)
        );
        assert!(pullback(&s2, &Cycle::one(&p1)).is_err());
    }

    #[test]
    fn pushforward_examples() {
        let p1 = Variety::projective(1);
        let q = p1.square();
        let s = FactorSelection::first(&p1, &p1);
        assert_eq!(
            pushforward(&s, &mono(&q, vec![1, 1], 1)).unwrap(),
            Cycle::hyperplane(&p1, 0)
        );
        assert!(pushforward(&s, &mono(&q, vec![1, 0], 1)).unwrap().is_zero());
        let p2 = Variety::projective(2);
        let s = FactorSelection::first(&p1, &p2);
        assert_eq!(
            pushforward(&s, &mono(&p1.product(&p2), vec![0, 2], 1)).unwrap(),
            Cycle::one(&p1)
        );
        assert!(pushforward(&s, &Cycle::one(&p1)).is_err());
    }

    #[test]
    fn cartesian_examples() {
        let k = Variety::point();
        assert_eq!(cartesian(&Cycle::one(&k), &Cycle::one(&k)), Cycle::one(&k));
        let p1 = Variety::projective(1);
        let h = Cycle::hyperplane(&p1, 0);
        assert_eq!(cartesian(&h, &h), mono(&p1.square(), vec![1, 1], 1));
        let one_h = &Cycle::one(&p1) + &h;
        assert_eq!(
            cartesian(&h, &one_h),
            &mono(&p1.square(), vec![1, 0], 1) + &mono(&p1.square(), vec![1, 1], 1)
        );
    }

    #[test]
    fn transpose_examples() {
        let p1 = Variety::projective(1);
        let p2 = Variety::projective(2);
        let c = corr(&p1, &p2, mono(&p1.product(&p2), vec![1, 0], 1));
        let t = transpose(&c);
        assert_eq!(t.source(), &p2);
        assert_eq!(t.cycle(), &mono(&p2.product(&p1), vec![0, 1], 1));
        assert_eq!(transpose(&t), c);
        let d = GradedCorrespondence::identity(&p1);
        assert_eq!(transpose(&d), d);
    }

    #[test]
    fn diagonal_examples() {
        let k = Variety::point();
        assert_eq!(diagonal_class(&k), Cycle::one(&k));
        let p1 = Variety::projective(1);
        let q = p1.square();
        assert_eq!(
            diagonal_class(&p1),
            &mono(&q, vec![1, 0], 1) + &mono(&q, vec![0, 1], 1)
        );
        // per-factor product oracle: (h1 + h3)(h2 + h4) on (P1 x P1)^2
        let x = Variety::new(vec![1, 1]);
        let xx = x.square();
        let h = |i| Cycle::hyperplane(&xx, i);
        let expected = &(&h(0) + &h(2)) * &(&h(1) + &h(3));
        assert_eq!(diagonal_class(&x), expected);
    }

    #[test]
    fn diagonal_pushforward_examples() {
        let p1 = Variety::projective(1);
        assert_eq!(
            diagonal_pushforward(&p1, &Cycle::one(&p1)).unwrap(),
            diagonal_class(&p1)
        );
        assert_eq!(
            diagonal_pushforward(&p1, &Cycle::hyperplane(&p1, 0)).unwrap(),
            mono(&p1.square(), vec![1, 1], 1)
        );
        let k = Variety::point();
        assert_eq!(
            diagonal_pushforward(&k, &Cycle::one(&k)).unwrap(),
            Cycle::one(&k)
        );
    }

    #[test]
    fn compose_homogeneous_examples() {
        let p1 = Variety::projective(1);
        let q = p1.square();
        let delta = GradedCorrespondence::identity(&p1);
        assert_eq!(compose_homogeneous(&delta, &delta).unwrap(), delta);
        let alpha = corr(&p1, &p1, mono(&q, vec![1, 0], 1));
        let beta = corr(&p1, &p1, mono(&q, vec![0, 1], 1));
        assert_eq!(compose_homogeneous(&beta, &beta).unwrap(), beta);
        assert_eq!(compose_homogeneous(&alpha, &alpha).unwrap(), alpha);
        // alpha then beta: x1 * z1 survives only with y on top, it is not.
        assert!(compose_homogeneous(&alpha, &beta).unwrap().is_zero());
        // beta then alpha: y^2 = 0.
        assert!(compose_homogeneous(&beta, &alpha).unwrap().is_zero());
        let mixed = corr(&p1, &p1, &mono(&q, vec![1, 0], 1) + &Cycle::one(&q));
        assert_eq!(compose_homogeneous(&mixed, &delta), Err(Error::NotPure));
        let p2 = Variety::projective(2);
        let other = GradedCorrespondence::identity(&p2);
        assert!(matches!(
            compose_homogeneous(&delta, &other),
            Err(Error::MiddleMismatch { .. })
        ));
    }

    #[test]
    fn graded_routes_agree_on_mixed_input() {
        let p2 = Variety::projective(2);
        let q = p2.square();
        let f = corr(
            &p2,
            &p2,
            &(&diagonal_class(&p2) + &mono(&q, vec![1, 0], 3)) + &mono(&q, vec![2, 1], -2),
        );
        let g = corr(&p2, &p2, &Cycle::one(&q) + &mono(&q, vec![1, 2], 5));
        assert_eq!(
            compose_graded(&f, &g).unwrap(),
            compose_graded_by_parts(&f, &g).unwrap()
        );
    }

    #[test]
    fn degree_zero_parts_stay_in_degree_zero() {
        let p1 = Variety::projective(1);
        let q = p1.square();
        let f = corr(&p1, &p1, mono(&q, vec![1, 0], 2) + mono(&q, vec![0, 1], 3));
        let g = corr(&p1, &p1, mono(&q, vec![1, 0], -1) + mono(&q, vec![0, 1], 5));
        let fg = compose_graded(&f, &g).unwrap();
        assert!(fg.is_of_degree(0));
    }

    #[test]
    fn apply_and_tensor() {
        let p1 = Variety::projective(1);
        let q = p1.square();
        let beta = corr(&p1, &p1, mono(&q, vec![0, 1], 1));
        // [P^1 x pt] sends a to deg(a) times the point class.
        assert!(beta.apply(&Cycle::one(&p1)).unwrap().is_zero());
        assert_eq!(beta.apply(&Cycle::hyperplane(&p1, 0)).unwrap(), Cycle::hyperplane(&p1, 0));
        let alpha = corr(&p1, &p1, mono(&q, vec![1, 0], 1));
        assert_eq!(alpha.apply(&Cycle::one(&p1)).unwrap(), Cycle::one(&p1));
        let d = GradedCorrespondence::identity(&p1);
        let t = tensor_correspondences(&d, &d);
        assert_eq!(t, GradedCorrespondence::identity(&q));
    }

    #[test]
    fn invert_examples() {
        let p1 = Variety::projective(1);
        let q = p1.square();
        let d = GradedCorrespondence::identity(&p1);
        assert_eq!(invert(&d).unwrap(), d);
        // 2 h1 + 3 h2 inverts to 1/2 h1 + 1/3 h2
        let f = corr(&p1, &p1, mono(&q, vec![1, 0], 2) + mono(&q, vec![0, 1], 3));
        let g = invert(&f).unwrap();
        assert_eq!(compose_graded(&f, &g).unwrap(), d);
        assert_eq!(compose_graded(&g, &f).unwrap(), d);
        let beta = corr(&p1, &p1, mono(&q, vec![0, 1], 1));
        assert_eq!(invert(&beta), Err(Error::NotInvertible));
    }

    #[test]
    fn permutation_validation() {
        let v = Variety::new(vec![1, 2]);
        let c = mono(&v, vec![1, 2], 1);
        assert_eq!(
            permute_factors(&c, &[1, 0]).unwrap(),
            mono(&Variety::new(vec![2, 1]), vec![2, 1], 1)
        );
        assert!(permute_factors(&c, &[0, 0]).is_err());
        assert!(permute_factors(&c, &[0]).is_err());
    }
}
