//! Hilbert–Poincaré series as exact rational functions in one variable t.
//!
//! A [`SeriesQuotient`] is a numerator polynomial over a multiset of
//! denominator factors (1 - t^d). Rank computations evaluate such quotients
//! at t = 1 after cancelling every common (1 - t) factor exactly.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Rat;

/// Dense univariate polynomial over Q, ascending coefficients, no trailing
/// zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = UniPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    /// t^k.
    pub fn tpow(k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = Rat::one();
        UniPoly { coeffs }
    }

    /// 1 + t + ... + t^(d-1).
    pub fn geometric(d: u32) -> Self {
        UniPoly {
            coeffs: vec![Rat::one(); d as usize],
        }
    }

    /// 1 - t^d.
    pub fn one_minus_tpow(d: u32) -> Self {
        let mut coeffs = vec![Rat::zero(); d as usize + 1];
        coeffs[0] = Rat::one();
        coeffs[d as usize] = -Rat::one();
        UniPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Rat::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Exact division; `NotDivisible` on a nonzero remainder.
    pub fn exact_div(&self, den: &UniPoly) -> Result<UniPoly> {
        if den.is_zero() {
            return Err(Error::NotDivisible);
        }
        if self.is_zero() {
            return Ok(UniPoly::zero());
        }
        if self.coeffs.len() < den.coeffs.len() {
            return Err(Error::NotDivisible);
        }
        let mut rem = self.coeffs.clone();
        let dd = den.coeffs.len() - 1;
        let lead = den.coeffs.last().unwrap();
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[dd + k] / lead;
            if !c.is_zero() {
                for (i, dc) in den.coeffs.iter().enumerate() {
                    let adj = &c * dc;
                    rem[k + i] -= adj;
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(UniPoly::from_coeffs(quot))
    }

    pub fn eval_one(&self) -> Rat {
        self.coeffs.iter().sum()
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(i.into()))
                .collect(),
        )
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rat::zero();
            let abs = if neg { -c } else { c.clone() };
            let body = match i {
                0 => format!("{abs}"),
                _ => {
                    let var = if i == 1 { "t".to_string() } else { format!("t^{i}") };
                    if abs.is_one() {
                        var
                    } else {
                        format!("{abs}*{var}")
                    }
                }
            };
            if first {
                write!(f, "{}{}", if neg { "-" } else { "" }, body)?;
                first = false;
            } else {
                write!(f, " {} {}", if neg { "-" } else { "+" }, body)?;
            }
        }
        Ok(())
    }
}

/// Cancels all common (1 - t) factors by exact synthetic division, then
/// evaluates num/den at t = 1. `PoleAtOne` when the limit does not exist.
pub fn value_at_one(num: &UniPoly, den: &UniPoly) -> Result<Rat> {
    let one_minus_t = UniPoly::from_ints(&[1, -1]);
    let mut num = num.clone();
    let mut den = den.clone();
    if den.is_zero() {
        return Err(Error::PoleAtOne);
    }
    while den.eval_one().is_zero() {
        if den.is_zero() {
            return Err(Error::PoleAtOne);
        }
        if num.eval_one().is_zero() {
            if num.is_zero() {
                return Ok(Rat::zero());
            }
            num = num.exact_div(&one_minus_t)?;
            den = den.exact_div(&one_minus_t)?;
        } else {
            return Err(Error::PoleAtOne);
        }
    }
    Ok(num.eval_one() / den.eval_one())
}

/// A Hilbert–Poincaré series: numerator over a product of (1 - t^d) factors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesQuotient {
    pub num: UniPoly,
    /// Each entry d stands for one denominator factor (1 - t^d).
    pub den: Vec<u32>,
}

impl SeriesQuotient {
    pub fn new(num: UniPoly, mut den: Vec<u32>) -> Self {
        assert!(den.iter().all(|&d| d >= 1), "denominator exponents must be >= 1");
        den.sort_unstable();
        SeriesQuotient { num, den }
    }

    pub fn den_poly(&self) -> UniPoly {
        self.den
            .iter()
            .fold(UniPoly::one(), |acc, &d| acc.mul(&UniPoly::one_minus_tpow(d)))
    }

    /// Rewrite over a larger denominator multiset (the target must contain
    /// the current denominator as a sub-multiset).
    pub fn with_denominator(&self, target: &[u32]) -> Result<SeriesQuotient> {
        let mut need: Vec<u32> = target.to_vec();
        for d in &self.den {
            match need.iter().position(|x| x == d) {
                Some(k) => {
                    need.remove(k);
                }
                None => {
                    return Err(Error::Internal(
                        "target denominator does not contain current one".into(),
                    ))
                }
            }
        }
        let extra = need
            .iter()
            .fold(UniPoly::one(), |acc, &d| acc.mul(&UniPoly::one_minus_tpow(d)));
        Ok(SeriesQuotient::new(self.num.mul(&extra), target.to_vec()))
    }

    pub fn sub(&self, other: &SeriesQuotient) -> Result<SeriesQuotient> {
        if self.den == other.den {
            return Ok(SeriesQuotient::new(self.num.sub(&other.num), self.den.clone()));
        }
        // merge to the union multiset
        let mut union = self.den.clone();
        for d in &other.den {
            union.push(*d);
        }
        union.sort_unstable();
        // keep it minimal: just use union (correctness over minimality)
        let a = self.with_denominator(&union)?;
        let b = other.with_denominator(&union)?;
        Ok(SeriesQuotient::new(a.num.sub(&b.num), union))
    }

    /// Multiply by t^k (a degree shift).
    pub fn shift(&self, k: usize) -> SeriesQuotient {
        SeriesQuotient::new(self.num.mul(&UniPoly::tpow(k)), self.den.clone())
    }

    /// Power-series coefficients through degree `n`.
    pub fn expand(&self, n: usize) -> Vec<Rat> {
        let mut c = vec![Rat::zero(); n + 1];
        for (i, x) in self.num.coeffs().iter().enumerate() {
            if i <= n {
                c[i] = x.clone();
            }
        }
        // multiply by 1/(1 - t^d) = 1 + t^d + t^2d + ... via prefix sums
        for &d in &self.den {
            let d = d as usize;
            for i in d..=n {
                let prev = c[i - d].clone();
                c[i] += prev;
            }
        }
        c
    }

    /// lim_{t->1} self/other, both as exact rational functions.
    pub fn limit_ratio_at_one(&self, other: &SeriesQuotient) -> Result<Rat> {
        let num = self.num.mul(&other.den_poly());
        let den = other.num.mul(&self.den_poly());
        value_at_one(&num, &den)
    }
}

impl fmt::Display for SeriesQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.num)?;
        if !self.den.is_empty() {
            let factors: Vec<String> = self.den.iter().map(|d| format!("(1-t^{d})")).collect();
            write!(f, " / {}", factors.join(""))?;
        }
        Ok(())
    }
}
