//! Truncated power series over `Q` and their evaluation on nilpotent cycles.
//!
//! Universal coefficients (exp, log, the Todd generating function) are computed
//! here by exact series arithmetic instead of being tabulated.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};
use crate::ring::Cycle;

/// `sum_{k < len} a_k x^k`, truncated at order `len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order, Rational::zero());
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.order().min(other.order());
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                out[i + j] += a * b;
            }
        }
        PowerSeries { coeffs: out }
    }

    pub fn inverse(&self) -> Result<PowerSeries> {
        let a0 = self.coeff(0);
        if a0.is_zero() {
            return Err(Error::SingularSeries);
        }
        let n = self.order();
        let inv0 = a0.recip();
        let mut out = vec![Rational::zero(); n];
        if n > 0 {
            out[0] = inv0.clone();
        }
        for k in 1..n {
            let s: Rational = (1..=k).map(|i| &self.coeffs[i] * &out[k - i]).sum();
            out[k] = -s * &inv0;
        }
        Ok(PowerSeries { coeffs: out })
    }

    fn derivative(&self) -> PowerSeries {
        let n = self.order();
        let mut out = vec![Rational::zero(); n];
        for k in 1..n {
            out[k - 1] = &self.coeffs[k] * rat(k as i64);
        }
        PowerSeries { coeffs: out }
    }

    fn integral(&self) -> PowerSeries {
        let n = self.order();
        let mut out = vec![Rational::zero(); n];
        for k in 1..n {
            out[k] = &self.coeffs[k - 1] / rat(k as i64);
        }
        PowerSeries { coeffs: out }
    }

    /// `log f` for `f(0) = 1`.
    pub fn log(&self) -> Result<PowerSeries> {
        if !self.coeff(0).is_one() {
            return Err(Error::InvalidInput(
                "logarithm needs constant term 1".into(),
            ));
        }
        Ok(self.derivative().mul(&self.inverse()?).integral())
    }

    /// `exp f` for `f(0) = 0`, via `g' = f' g`.
    pub fn exp(&self) -> Result<PowerSeries> {
        if !self.coeff(0).is_zero() {
            return Err(Error::InvalidInput(
                "exponential needs constant term 0".into(),
            ));
        }
        let n = self.order();
        let df = self.derivative();
        let mut g = vec![Rational::zero(); n];
        if n > 0 {
            g[0] = Rational::one();
        }
        for k in 1..n {
            // k g_k = sum_{i=0}^{k-1} df_i g_{k-1-i}
            let s: Rational = (0..k).map(|i| &df.coeffs[i] * &g[k - 1 - i]).sum();
            g[k] = s / rat(k as i64);
        }
        Ok(PowerSeries { coeffs: g })
    }

    /// `exp(x)`.
    pub fn exponential(order: usize) -> PowerSeries {
        let mut x = vec![Rational::zero(); order];
        if order > 1 {
            x[1] = Rational::one();
        }
        PowerSeries { coeffs: x }.exp().expect("zero constant term")
    }

    /// `log(1 + x)`.
    pub fn log1p(order: usize) -> PowerSeries {
        let coeffs = (0..order)
            .map(|k| match k {
                0 => Rational::zero(),
                _ if k % 2 == 1 => rat(1) / rat(k as i64),
                _ => rat(-1) / rat(k as i64),
            })
            .collect();
        PowerSeries { coeffs }
    }

    /// The Todd generating function `x / (1 - e^{-x})`.
    pub fn todd(order: usize) -> PowerSeries {
        // (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
        let mut fact = Rational::one();
        let mut coeffs = Vec::with_capacity(order);
        for k in 0..order {
            fact *= rat(k as i64 + 1);
            let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
            coeffs.push(sign / &fact);
        }
        PowerSeries { coeffs }
            .inverse()
            .expect("constant term is 1")
    }

    /// Coefficients `lambda_k` of `log(x / (1 - e^{-x})) = sum lambda_k x^k`.
    pub fn log_todd(order: usize) -> PowerSeries {
        Self::todd(order).log().expect("constant term is 1")
    }
}

/// Evaluates `sum_k a_k x^k` at a cycle `x` with zero constant term, keeping
/// only codimensions `<= cap`.
pub fn evaluate_nilpotent(series: &PowerSeries, x: &Cycle, cap: u32) -> Cycle {
    debug_assert!(x.constant_term().is_zero());
    let v = x.variety();
    let mut out = Cycle::constant(v, series.coeff(0));
    let mut power = Cycle::one(v);
    for k in 1..series.order() {
        power = power.product_up_to(x, cap);
        if power.is_zero() {
            break;
        }
        out = &out + &power.scale(&series.coeff(k));
    }
    out
}

/// Number of series terms needed to exhaust nilpotency up to codimension `cap`.
pub(crate) fn order_for(cap: u32) -> usize {
    cap as usize + 1
}

/// `exp(x)` for `x` with zero constant term.
pub fn exp_cycle(x: &Cycle, cap: u32) -> Result<Cycle> {
    if !x.constant_term().is_zero() {
        return Err(Error::InvalidInput(
            "exponential needs zero constant term".into(),
        ));
    }
    Ok(evaluate_nilpotent(&PowerSeries::exponential(order_for(cap)), x, cap))
}

/// `log(u)` for `u` with constant term 1.
pub fn log_cycle(u: &Cycle, cap: u32) -> Result<Cycle> {
    if !u.constant_term().is_one() {
        return Err(Error::InvalidInput(
            "logarithm needs constant term 1".into(),
        ));
    }
    let x = u - &Cycle::one(u.variety());
    Ok(evaluate_nilpotent(&PowerSeries::log1p(order_for(cap)), &x, cap))
}

/// The unique `v` with `u . v = 1`, truncated above codimension `cap`.
pub fn inverse_cycle(u: &Cycle, cap: u32) -> Result<Cycle> {
    let c = u.constant_term();
    if c.is_zero() {
        return Err(Error::SingularSeries);
    }
    let cinv = c.recip();
    // u = c (1 + x)  =>  u^{-1} = c^{-1} sum (-x)^k
    let x = &u.scale(&cinv) - &Cycle::one(u.variety());
    let geometric = PowerSeries::new(
        (0..order_for(cap))
            .map(|k| if k % 2 == 0 { rat(1) } else { rat(-1) })
            .collect(),
        order_for(cap),
    );
    Ok(evaluate_nilpotent(&geometric, &x, cap).scale(&cinv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use crate::ring::Variety;

    #[test]
    fn exp_log_roundtrip_univariate() {
        let e = PowerSeries::exponential(8);
        assert_eq!(e.coeff(3), frac(1, 6));
        assert_eq!(e.coeff(5), frac(1, 120));
        let l = e.log().unwrap();
        assert!(l.coeff(0).is_zero());
        assert_eq!(l.coeff(1), rat(1));
        assert!((2..8).all(|k| l.coeff(k).is_zero()));
    }

    #[test]
    fn todd_series_known_coefficients() {
        // x/(1-e^{-x}) = 1 + x/2 + x^2/12 - x^4/720 + ...
        let t = PowerSeries::todd(6);
        assert_eq!(t.coeff(0), rat(1));
        assert_eq!(t.coeff(1), frac(1, 2));
        assert_eq!(t.coeff(2), frac(1, 12));
        assert_eq!(t.coeff(3), rat(0));
        assert_eq!(t.coeff(4), frac(-1, 720));
        assert_eq!(t.coeff(5), rat(0));
    }

    #[test]
    fn inverse_of_geometric() {
        let one_minus_x = PowerSeries::new(vec![rat(1), rat(-1)], 5);
        let inv = one_minus_x.inverse().unwrap();
        assert!(inv.coeffs().iter().all(|c| *c == rat(1)));
        let zero = PowerSeries::new(vec![], 3);
        assert_eq!(zero.inverse(), Err(Error::SingularSeries));
    }

    #[test]
    fn cycle_inverse_examples() {
        let p2 = Variety::projective(2);
        let one = Cycle::one(&p2);
        assert_eq!(inverse_cycle(&one, 2).unwrap(), one);
        let h = Cycle::hyperplane(&p2, 0);
        let u = &one + &h;
        let expected = &(&one - &h) + &h.pow(2);
        assert_eq!(inverse_cycle(&u, 2).unwrap(), expected);
        assert_eq!(inverse_cycle(&h, 2), Err(Error::SingularSeries));
        let w = &one.scale(&rat(3)) + &h;
        assert_eq!(&w * &inverse_cycle(&w, 2).unwrap(), one);
    }

    #[test]
    fn exp_of_log_is_identity() {
        let v = Variety::new(vec![2, 1]);
        let u = &(&Cycle::one(&v) + &Cycle::hyperplane(&v, 0).scale(&rat(3)))
            + &Cycle::monomial(&v, vec![1, 1], frac(-2, 5));
        let back = exp_cycle(&log_cycle(&u, 3).unwrap(), 3).unwrap();
        assert_eq!(back, u);
        assert!(log_cycle(&Cycle::zero(&v), 3).is_err());
        assert!(exp_cycle(&Cycle::one(&v), 3).is_err());
    }
}
