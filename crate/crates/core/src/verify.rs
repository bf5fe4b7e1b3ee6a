//! The built-in verification suite behind `chowkit verify`.
//!
//! Each check draws from its own generator, seeded from the suite seed and
//! the check's position, so results do not depend on which checks run.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::calculus::{
    compose_graded, compose_graded_by_parts, invert, pullback, pushforward, transpose,
    FactorSelection, GradedCorrespondence,
};
use crate::classes::{
    chern_character, chern_character_up_to, line_bundle, sqrt_todd, todd_class, todd_class_up_to,
    todd_of_variety, BundleClass,
};
use crate::error::{Error, Result};
use crate::json::Interchange;
use crate::kshadow::{
    euler_characteristic, identity_kernel, k_compose, mu, pushforward_class, KClass, KKernel,
};
use crate::linalg::Matrix;
use crate::motive::{
    compatibility_check, compatibility_check_with, degree_zero_rigidify, lefschetz_decomposition,
    motive_of, orlov_pipeline, split_idempotent, sqrt_todd_by_factors, Motive, OrbitMorphism,
    OrlovVerdict,
};
use crate::random::{self, Rng64};
use crate::rational::{factorial, frac, rat, Rational};
use crate::ring::{Cycle, Variety};

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        writeln!(f, "seed {} samples {}", self.seed, self.samples)?;
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag}  {:width$}  {}", c.name, c.detail)?;
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        write!(f, "{passed}/{} checks passed", self.checks.len())
    }
}

type Check = fn(&mut Rng64, usize) -> Result<String>;

/// Names and entry points, in report order.
pub const CHECKS: &[(&str, Check)] = &[
    ("riemann-roch", riemann_roch),
    ("printed-expansions", printed_expansions),
    ("identity-kernel", identity_kernel_laws),
    ("correspondence-algebra", correspondence_algebra),
    ("lefschetz-decomposition", lefschetz),
    ("orbit-rigidification", rigidification),
    ("orlov-pipeline", orlov),
    ("compatibility-triangle", compatibility),
    ("ch-isomorphism", ch_isomorphism),
    ("ring-laws", ring_laws),
    ("json-round-trip", json_round_trip),
    ("whitney-sum", whitney),
    ("sqrt-todd", sqrt_todd_square),
    ("grr-projection", grr_projection),
    ("mu-functoriality", mu_functoriality),
];

/// Runs every check. `samples` sets the number of random instances of the
/// sampled checks (200 gives the default sizes).
pub fn run_suite(seed: u64, samples: usize) -> SuiteReport {
    let checks = CHECKS
        .iter()
        .enumerate()
        .map(|(i, (name, check))| {
            let mut rng = random::rng(seed.wrapping_add(i as u64 * 0x9e37_79b9));
            let (passed, detail) = match check(&mut rng, samples) {
                Ok(d) => (true, d),
                Err(e) => (false, e.to_string()),
            };
            CheckOutcome {
                name: name.to_string(),
                passed,
                detail,
            }
        })
        .collect();
    SuiteReport {
        seed,
        samples,
        checks,
    }
}

fn fail(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(fail(msg()))
    }
}

/// `prod_{i=1..n} (d + i) / n!`, the Hilbert polynomial of `P^n`.
pub fn hilbert_polynomial(n: u32, d: i64) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, i| acc * rat(d + i)) / factorial(n)
}

fn riemann_roch(_: &mut Rng64, _: usize) -> Result<String> {
    let mut count = 0;
    for n in 0..=4 {
        let p = Variety::projective(n);
        for d in -6..=6 {
            let degs: Vec<i64> = vec![d; p.num_factors()];
            let chi = if n == 0 {
                euler_characteristic(&KClass::structure_sheaf(&p))
            } else {
                euler_characteristic(&KClass::from_bundle(&line_bundle(&p, &degs)?))
            };
            let want = hilbert_polynomial(n, d);
            ensure(chi == want, || format!("chi(O({d})) on P^{n} = {chi}, expected {want}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} line bundles"))
}

/// `E = O(e_1) (+) ... (+) O(e_4)` on `(P^4)^4`, whose Chern roots `h_i` are
/// independent up to degree 4.
pub fn generic_split_bundle() -> Result<BundleClass> {
    let x = Variety::new(vec![4; 4]);
    let mut e: Option<BundleClass> = None;
    for i in 0..4 {
        let mut degs = vec![0; 4];
        degs[i] = 1;
        let l = line_bundle(&x, &degs)?;
        e = Some(match e {
            None => l,
            Some(acc) => acc.direct_sum(&l)?,
        });
    }
    Ok(e.expect("four summands"))
}

/// Closed-form expansions in the Chern classes `c_1..c_4`.
pub struct Expansions {
    pub ch: [Cycle; 5],
    pub td: [Cycle; 5],
}

pub fn closed_form_expansions(e: &BundleClass) -> Expansions {
    let c = |i: u32| e.chern(i);
    let (c1, c2, c3, c4) = (c(1), c(2), c(3), c(4));
    let x = e.variety();
    let lin = |terms: &[(Rational, &Cycle)]| {
        terms
            .iter()
            .fold(Cycle::zero(x), |acc, (q, t)| &acc + &t.scale(q))
    };
    let c1_2 = &c1 * &c1;
    let c1_3 = &c1_2 * &c1;
    let c1_4 = &c1_3 * &c1;
    let c1c2 = &c1 * &c2;
    let c1_2c2 = &c1_2 * &c2;
    let c1c3 = &c1 * &c3;
    let c2_2 = &c2 * &c2;
    let ch = [
        Cycle::constant(x, rat(e.rank())),
        c1.clone(),
        lin(&[(frac(1, 2), &c1_2), (rat(-1), &c2)]),
        lin(&[(frac(1, 6), &c1_3), (frac(-1, 2), &c1c2), (frac(1, 2), &c3)]),
        lin(&[
            (frac(1, 24), &c1_4),
            (frac(-1, 6), &c1_2c2),
            (frac(1, 6), &c1c3),
            (frac(1, 12), &c2_2),
            (frac(-1, 6), &c4),
        ]),
    ];
    let td = [
        Cycle::one(x),
        c1.scale(&frac(1, 2)),
        lin(&[(frac(1, 12), &c1_2), (frac(1, 12), &c2)]),
        c1c2.scale(&frac(1, 24)),
        lin(&[
            (frac(-1, 720), &c1_4),
            (frac(4, 720), &c1_2c2),
            (frac(3, 720), &c2_2),
            (frac(1, 720), &c1c3),
            (frac(-1, 720), &c4),
        ]),
    ];
    Expansions { ch, td }
}

fn printed_expansions(_: &mut Rng64, _: usize) -> Result<String> {
    let e = generic_split_bundle()?;
    let forms = closed_form_expansions(&e);
    let ch = chern_character_up_to(&e, 4);
    let td = todd_class_up_to(&e, 4);
    for k in 0..=4u32 {
        ensure(ch.graded_component(k) == forms.ch[k as usize], || {
            format!("ch degree {k} differs from closed form")
        })?;
        ensure(td.graded_component(k) == forms.td[k as usize], || {
            format!("td degree {k} differs from closed form")
        })?;
    }
    Ok("ch and td through degree 4".into())
}

fn standard_varieties() -> Vec<Variety> {
    vec![
        Variety::point(),
        Variety::projective(1),
        Variety::projective(2),
        Variety::new(vec![1, 1]),
    ]
}

fn identity_kernel_laws(rng: &mut Rng64, _: usize) -> Result<String> {
    for x in standard_varieties() {
        let id = identity_kernel(&x);
        ensure(mu(&id) == GradedCorrespondence::identity(&x), || {
            format!("mu(identity kernel) is not the diagonal on {x}")
        })?;
        for _ in 0..5 {
            let e = random::kernel(rng, &x, &x);
            ensure(k_compose(&id, &e)? == e && k_compose(&e, &id)? == e, || {
                format!("identity kernel is not a unit on {x}")
            })?;
        }
    }
    Ok("Spec K, P^1, P^2, P^1 x P^1".into())
}

fn correspondence_algebra(rng: &mut Rng64, samples: usize) -> Result<String> {
    for i in 0..samples {
        let x = random::variety(rng, 2, 2, 2);
        let y = random::variety(rng, 2, 2, 2);
        let z = random::variety(rng, 2, 2, 2);
        let w = random::variety(rng, 1, 2, 2);
        let f = random::correspondence(rng, &x, &y);
        let g = random::correspondence(rng, &y, &z);
        let h = random::correspondence(rng, &z, &w);
        let left = compose_graded(&compose_graded(&f, &g)?, &h)?;
        let right = compose_graded(&f, &compose_graded(&g, &h)?)?;
        ensure(left == right, || format!("associativity fails on sample {i}"))?;
        ensure(compose_graded(&f, &g)? == compose_graded_by_parts(&f, &g)?, || {
            format!("composition routes disagree on sample {i}")
        })?;
        let idx = GradedCorrespondence::identity(&x);
        let idy = GradedCorrespondence::identity(&y);
        ensure(
            compose_graded(&idx, &f)? == f && compose_graded(&f, &idy)? == f,
            || format!("identity law fails on sample {i}"),
        )?;
        ensure(
            transpose(&compose_graded(&f, &g)?)
                == compose_graded(&transpose(&g), &transpose(&f))?,
            || format!("transpose is not an antihomomorphism on sample {i}"),
        )?;
        ensure(transpose(&transpose(&f)) == f, || format!("transpose is not an involution on sample {i}"))?;
        // Projection formula along X x Y -> X.
        let p = FactorSelection::first(&x, &y);
        let a = random::cycle(rng, &x.product(&y));
        let b = random::cycle(rng, &x);
        let lhs = pushforward(&p, &(&pullback(&p, &b)? * &a))?;
        let rhs = &b * &pushforward(&p, &a)?;
        ensure(lhs == rhs, || format!("projection formula fails on sample {i}"))?;
    }
    Ok(format!("{samples} instances"))
}

fn lefschetz(_: &mut Rng64, _: usize) -> Result<String> {
    let d = lefschetz_decomposition()?;
    let mp1 = motive_of(&Variety::projective(1));
    let (a, b) = (&d.alpha, &d.beta);
    use crate::motive::compose_motive;
    ensure(compose_motive(a, a)? == *a && compose_motive(b, b)? == *b, || {
        "alpha or beta not idempotent".into()
    })?;
    let zero = crate::motive::MotiveMorphism::zero(&mp1, &mp1);
    ensure(compose_motive(a, b)? == zero && compose_motive(b, a)? == zero, || {
        "alpha and beta not orthogonal".into()
    })?;
    ensure(a.try_add(b)? == mp1.identity(), || "alpha + beta is not the diagonal".into())?;
    let (a_img, s, t) = split_idempotent(&mp1, a)?;
    ensure(compose_motive(&s, &t)? == a_img.identity(), || "t o s != id on image(alpha)".into())?;
    ensure(compose_motive(&t, &s)? == *a, || "s o t != alpha".into())?;
    let unit = Motive::unit();
    ensure(
        compose_motive(&d.from_unit, &d.to_unit)? == unit.identity()
            && compose_motive(&d.to_unit, &d.from_unit)? == a_img.identity(),
        || "image(alpha) is not isomorphic to the unit".into(),
    )?;
    let (l_img, ls, lt) = split_idempotent(&mp1, b)?;
    ensure(l_img == Motive::lefschetz(), || "image(beta) is not L".into())?;
    ensure(
        compose_motive(&ls, &lt)? == l_img.identity() && compose_motive(&lt, &ls)? == *b,
        || "section/retraction of beta fail".into(),
    )?;
    ensure(
        d.split.compose_then(&d.merge)?.is_identity()
            && d.merge.compose_then(&d.split)?.is_identity(),
        || "M(P^1) -> 1 (+) L -> M(P^1) is not the identity".into(),
    )?;
    Ok("M(P^1) = 1 (+) L".into())
}

fn rigidification(rng: &mut Rng64, samples: usize) -> Result<String> {
    let positives = (samples / 4).max(1);
    let negatives = (samples / 20).max(1);
    for i in 0..positives {
        let n = 1 + (i % 2) as u32;
        let m = motive_of(&Variety::projective(n));
        let (f, g) = random::unipotent_pair(rng, n);
        let of = OrbitMorphism::from_graded(&m, &m, &f)?;
        let og = OrbitMorphism::from_graded(&m, &m, &g)?;
        let (f0, g0) = degree_zero_rigidify(&of, &og)?;
        ensure(f0.corr() == &f.degree_part(0) && g0.corr() == &g.degree_part(0), || {
            format!("rigidified pair {i} is not the degree-zero part")
        })?;
    }
    for i in 0..negatives {
        let n = 1 + (i % 2) as u32;
        let m = motive_of(&Variety::projective(n));
        let (f, g) = random::negative_pair(rng, n);
        let of = OrbitMorphism::from_graded(&m, &m, &f)?;
        let og = OrbitMorphism::from_graded(&m, &m, &g)?;
        match degree_zero_rigidify(&of, &og) {
            Err(Error::SupportCondition(_)) => {}
            other => return Err(fail(format!("negative control {i} gave {other:?}"))),
        }
    }
    Ok(format!("{positives} pairs, {negatives} negative controls"))
}

/// `E = identity kernel of P^1` tensored with `O(d, 0)`, and its transported inverse.
pub fn twisted_identity_pair(d: i64) -> Result<(KKernel, KKernel)> {
    let p1 = Variety::projective(1);
    let twist = KClass::from_bundle(&line_bundle(&p1.square(), &[d, 0])?);
    let e = identity_kernel(&p1).twisted_by(&twist)?;
    let f = KKernel::from_correspondence(&invert(&mu(&e))?);
    Ok((e, f))
}

/// The pair above composed with `1 + h_1 h_2`, which mixes in components of
/// degree -1 and +1.
pub fn tate_shifted_pair(d: i64) -> Result<(KKernel, KKernel)> {
    let p1 = Variety::projective(1);
    let q = p1.square();
    let (e, _) = twisted_identity_pair(d)?;
    let sigma = GradedCorrespondence::new(
        &p1,
        &p1,
        &Cycle::one(&q) + &Cycle::monomial(&q, vec![1, 1], rat(1)),
    )?;
    let shifted = compose_graded(&mu(&e), &sigma)?;
    let e2 = KKernel::from_correspondence(&shifted);
    let f2 = KKernel::from_correspondence(&invert(&shifted)?);
    Ok((e2, f2))
}

fn orlov(_: &mut Rng64, _: usize) -> Result<String> {
    for d in -2..=2 {
        let (e, f) = twisted_identity_pair(d)?;
        let report = orlov_pipeline(&e, &f)?;
        ensure(report.is_chow_isomorphism(), || {
            format!("twist O({d},0): verdict {:?}", report.verdict)
        })?;
        let (e2, f2) = tate_shifted_pair(d)?;
        let report = orlov_pipeline(&e2, &f2)?;
        ensure(report.verdict == OrlovVerdict::TateTwistOnly, || {
            format!("shifted control O({d},0): verdict {:?}", report.verdict)
        })?;
    }
    Ok("5 twists, 5 shifted controls".into())
}

fn compatibility(rng: &mut Rng64, samples: usize) -> Result<String> {
    let spaces = [
        Variety::projective(1),
        Variety::new(vec![1, 1]),
        Variety::projective(2),
    ];
    let count = (samples / 2).max(1);
    for i in 0..count {
        let x = &spaces[i % 3];
        let y = &spaces[(i / 3) % 3];
        let e = random::kernel(rng, x, y);
        ensure(compatibility_check(&e), || format!("kernel {i} on {x} x {y} fails"))?;
    }
    // Corrupted route: multiply by the full Todd class instead of its root.
    let p1 = Variety::projective(1);
    let e = identity_kernel(&p1);
    let corrupted = compatibility_check_with(&e, |k| {
        k.ch() * &todd_of_variety(&k.source().product(k.target()))
    });
    ensure(!corrupted, || "corrupted route was accepted".into())?;
    let _ = sqrt_todd_by_factors(&e);
    Ok(format!("{count} kernels, corrupted route rejected"))
}

fn ch_isomorphism(_: &mut Rng64, _: usize) -> Result<String> {
    for n in 1..=4u32 {
        let p = Variety::projective(n);
        let basis = p.basis();
        let rows = (0..=n as i64)
            .map(|i| {
                let ch = chern_character(&line_bundle(&p, &[-i])?);
                Ok(basis.iter().map(|e| ch.coeff(e)).collect())
            })
            .collect::<Result<Vec<Vec<Rational>>>>()?;
        let rank = Matrix::from_rows(rows).rank();
        ensure(rank == n as usize + 1, || format!("rank {rank} on P^{n}"))?;
    }
    Ok("P^1..P^4".into())
}

fn ring_laws(rng: &mut Rng64, samples: usize) -> Result<String> {
    for i in 0..samples {
        let x = random::variety(rng, 3, 3, 9);
        let (a, b, c) = (
            random::cycle(rng, &x),
            random::cycle(rng, &x),
            random::cycle(rng, &x),
        );
        ensure(&a * &b == &b * &a, || format!("commutativity fails on sample {i}"))?;
        ensure(&(&a * &b) * &c == &a * &(&b * &c), || format!("associativity fails on sample {i}"))?;
        ensure(&a * &Cycle::one(&x) == a, || format!("unit fails on sample {i}"))?;
        let sum = (0..=x.dim()).fold(Cycle::zero(&x), |acc, k| &acc + &a.graded_component(k));
        ensure(sum == a, || format!("graded components do not sum back on sample {i}"))?;
        ensure(
            (&(&a + &c) * &b).degree() == (&a * &b).degree() + (&c * &b).degree(),
            || format!("degree pairing not bilinear on sample {i}"),
        )?;
    }
    Ok(format!("{samples} triples"))
}

fn json_round_trip(rng: &mut Rng64, samples: usize) -> Result<String> {
    for i in 0..samples {
        let x = random::variety(rng, 3, 3, 6);
        let c = random::cycle(rng, &x).scale(&frac(1, 1 + (i % 4) as i64));
        let s = c.to_json_string();
        ensure(Cycle::from_json_str(&s)?.to_json_string() == s, || {
            format!("cycle {i} does not round-trip")
        })?;
        let y = random::variety(rng, 2, 2, 2);
        let k = random::kernel(rng, &y, &y);
        let s = k.to_json_string();
        ensure(KKernel::from_json_str(&s)?.to_json_string() == s, || {
            format!("kernel {i} does not round-trip")
        })?;
    }
    Ok(format!("{samples} cycles and kernels"))
}

fn whitney(rng: &mut Rng64, samples: usize) -> Result<String> {
    let count = (samples / 4).max(1);
    for i in 0..count {
        let x = random::variety(rng, 2, 2, 3);
        let e = random::split_bundle(rng, &x);
        let f = random::split_bundle(rng, &x);
        let s = e.direct_sum(&f)?;
        ensure(s.total_chern() == &(e.total_chern() * f.total_chern()), || {
            format!("c(E + F) != c(E) c(F) on sample {i}")
        })?;
        ensure(chern_character(&s) == &chern_character(&e) + &chern_character(&f), || {
            format!("ch not additive on sample {i}")
        })?;
        ensure(todd_class(&s) == &todd_class(&e) * &todd_class(&f), || {
            format!("td not multiplicative on sample {i}")
        })?;
        let y = random::variety(rng, 1, 2, 2);
        let p = FactorSelection::first(&x, &y);
        ensure(
            chern_character(&e.pullback(&p)?) == pullback(&p, &chern_character(&e))?,
            || format!("ch does not commute with pullback on sample {i}"),
        )?;
    }
    Ok(format!("{count} bundle pairs"))
}

fn sqrt_todd_square(_: &mut Rng64, _: usize) -> Result<String> {
    let mut count = 0;
    for factors in [
        vec![],
        vec![1],
        vec![2],
        vec![3],
        vec![6],
        vec![1, 1],
        vec![2, 2],
        vec![1, 2, 3],
        vec![3, 3],
    ] {
        let x = Variety::new(factors);
        let r = sqrt_todd(&x);
        ensure(&r * &r == todd_of_variety(&x), || format!("sqrt(td)^2 != td on {x}"))?;
        count += 1;
    }
    Ok(format!("{count} varieties"))
}

fn grr_projection(rng: &mut Rng64, samples: usize) -> Result<String> {
    let count = (samples / 10).max(1);
    for i in 0..count {
        let x = random::variety(rng, 2, 2, 2);
        let y = random::variety(rng, 2, 2, 2);
        let xy = x.product(&y);
        let p = FactorSelection::first(&x, &y);
        let e = KClass::from_ch(random::cycle(rng, &xy));
        let lhs = pushforward(&p, &(e.ch() * &todd_of_variety(&xy)))?;
        let rhs = pushforward_class(&p, &e)?.ch() * &todd_of_variety(&x);
        ensure(lhs == rhs, || format!("GRR square fails on sample {i}"))?;
        ensure(
            euler_characteristic(&e) == euler_characteristic(&pushforward_class(&p, &e)?),
            || format!("chi not preserved by pushforward on sample {i}"),
        )?;
    }
    Ok(format!("{count} classes"))
}

fn mu_functoriality(rng: &mut Rng64, samples: usize) -> Result<String> {
    let spaces = [
        Variety::projective(1),
        Variety::new(vec![1, 1]),
        Variety::projective(2),
    ];
    let count = (samples / 4).max(1);
    for i in 0..count {
        let (x, y, z) = (&spaces[i % 3], &spaces[(i + 1) % 3], &spaces[(i / 3) % 3]);
        let e = random::kernel(rng, x, y);
        let f = random::kernel(rng, y, z);
        let g = random::kernel(rng, z, x);
        ensure(mu(&k_compose(&e, &f)?) == compose_graded(&mu(&e), &mu(&f))?, || {
            format!("mu does not respect composition on sample {i}")
        })?;
        ensure(
            k_compose(&k_compose(&e, &f)?, &g)? == k_compose(&e, &k_compose(&f, &g)?)?,
            || format!("kernel composition not associative on sample {i}"),
        )?;
    }
    let zero = KClass::zero(&Variety::projective(1));
    ensure(euler_characteristic(&zero).is_zero(), || "chi(0) != 0".into())?;
    Ok(format!("{count} kernel triples"))
}
