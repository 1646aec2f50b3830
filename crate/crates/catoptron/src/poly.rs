//! Sparse multivariate polynomials over [`Scalar`] with a weighted grading.
//!
//! A [`VarCtx`] fixes the variable names and their integer weights; every
//! polynomial carries a shared handle to its context and two polynomials may
//! only be combined when their contexts agree. Terms are kept in a `BTreeMap`
//! from exponent vectors to nonzero coefficients, so equality of term maps is
//! equality of polynomials. Canonical printing sorts terms graded-lex,
//! highest weighted degree first.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{display_negative, Scalar};

/// A variable context: names plus grading weights.
#[derive(Debug, PartialEq, Eq)]
pub struct VarCtx {
    names: Vec<String>,
    weights: Vec<i64>,
}

pub type CtxRef = Arc<VarCtx>;

impl VarCtx {
    pub fn new<S: Into<String>>(names: Vec<S>, weights: Vec<i64>) -> CtxRef {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        assert_eq!(names.len(), weights.len());
        Arc::new(VarCtx { names, weights })
    }

    /// Standard grading: every variable has weight 1.
    pub fn standard<S: Into<String>>(names: Vec<S>) -> CtxRef {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let weights = vec![1; names.len()];
        Arc::new(VarCtx { names, weights })
    }

    /// x1..xn with weight 1.
    pub fn standard_n(n: usize) -> CtxRef {
        Self::standard((1..=n).map(|i| format!("x{i}")).collect())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn weighted_degree(&self, exps: &[u32]) -> i64 {
        exps.iter()
            .zip(&self.weights)
            .map(|(e, w)| *e as i64 * w)
            .sum()
    }
}

fn same_ctx(a: &CtxRef, b: &CtxRef) {
    assert!(
        Arc::ptr_eq(a, b) || **a == **b,
        "mismatched variable contexts: {:?} vs {:?}",
        a.names(),
        b.names()
    );
}

/// Sparse multivariate polynomial.
#[derive(Clone)]
pub struct Poly {
    ctx: CtxRef,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ctx, &other.ctx) || *self.ctx == *other.ctx)
            && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(ctx: &CtxRef) -> Self {
        Poly {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &CtxRef) -> Self {
        Poly::constant(ctx, Scalar::one())
    }

    pub fn constant(ctx: &CtxRef, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; ctx.len()], c);
        }
        Poly {
            ctx: ctx.clone(),
            terms,
        }
    }

    pub fn var(ctx: &CtxRef, i: usize) -> Self {
        Poly::monomial_scaled(ctx, unit_exp(ctx.len(), i, 1), Scalar::one())
    }

    pub fn monomial_scaled(ctx: &CtxRef, exps: Vec<u32>, c: Scalar) -> Self {
        assert_eq!(exps.len(), ctx.len());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Poly {
            ctx: ctx.clone(),
            terms,
        }
    }

    pub fn from_terms(ctx: &CtxRef, it: impl IntoIterator<Item = (Vec<u32>, Scalar)>) -> Self {
        let mut p = Poly::zero(ctx);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn ctx(&self) -> &CtxRef {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0))
    }

    pub fn constant_term(&self) -> Scalar {
        self.terms
            .get(&vec![0; self.ctx.len()])
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn coeff(&self, exps: &[u32]) -> Scalar {
        self.terms.get(exps).cloned().unwrap_or_else(Scalar::zero)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(cur) => {
                let sum = cur.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *cur = sum;
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        same_ctx(&self.ctx, &other.ctx);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        same_ctx(&self.ctx, &other.ctx);
        let mut out = Poly::zero(&self.ctx);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ctx);
        }
        Poly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), x.mul(c)))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::one(&self.ctx);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Substitute images[i] for variable i. All images must share one context.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.ctx.len());
        let target = images
            .first()
            .map(|p| p.ctx.clone())
            .unwrap_or_else(|| self.ctx.clone());
        let mut out = Poly::zero(&target);
        let mut pow_cache: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(&target), p.clone()]).collect();
        for (e, c) in &self.terms {
            let mut term = Poly::constant(&target, c.clone());
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                while pow_cache[i].len() <= exp as usize {
                    let next = pow_cache[i].last().unwrap().mul(&images[i]);
                    pow_cache[i].push(next);
                }
                term = term.mul(&pow_cache[i][exp as usize]);
            }
            out = out.add(&term);
        }
        out
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let mut out = Poly::zero(&self.ctx);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            out.add_term(e2, c.mul(&Scalar::from_int(e[var] as i64)));
        }
        out
    }

    /// Maximal weighted degree of a term; `None` for the zero polynomial.
    pub fn weighted_degree(&self) -> Option<i64> {
        self.terms
            .keys()
            .map(|e| self.ctx.weighted_degree(e))
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| self.ctx.weighted_degree(e));
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// Leading term under graded lex (weighted degree first, then exponents).
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &Scalar)> {
        self.terms
            .iter()
            .max_by(|(e1, _), (e2, _)| grlex_cmp(&self.ctx, e1, e2))
    }

    /// Leading coefficient under graded lex; the "unit" used when identities
    /// are tracked up to a scalar.
    pub fn leading_coeff(&self) -> Scalar {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    /// Exact division: returns r with q*r = self, or `NotDivisible`.
    pub fn exact_div(&self, q: &Poly) -> Result<Poly> {
        same_ctx(&self.ctx, &q.ctx);
        if q.is_zero() {
            return Err(Error::NotDivisible);
        }
        let (qe, qc) = q.leading_term().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Poly::zero(&self.ctx);
        while !rem.is_zero() {
            let (re, rc) = rem.leading_term().map(|(e, c)| (e.clone(), c.clone())).unwrap();
            if re.iter().zip(&qe).any(|(a, b)| a < b) {
                return Err(Error::NotDivisible);
            }
            let e: Vec<u32> = re.iter().zip(&qe).map(|(a, b)| a - b).collect();
            let c = rc.div(&qc);
            let t = Poly::monomial_scaled(&self.ctx, e, c);
            rem = rem.sub(&t.mul(q));
            quot = quot.add(&t);
        }
        Ok(quot)
    }

    /// Evaluate at scalar arguments.
    pub fn eval(&self, args: &[Scalar]) -> Scalar {
        assert_eq!(args.len(), self.ctx.len());
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    t = t.mul(&args[i]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Terms sorted for canonical output: weighted degree descending, then
    /// exponent vectors lexicographically descending.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, &Scalar)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(e1, _), (e2, _)| grlex_cmp(&self.ctx, e2, e1));
        ts
    }

    /// JSON view: {variables, weights, terms:[{exponents, coefficient}]}.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| {
                serde_json::json!({
                    "exponents": e,
                    "coefficient": c.to_string(),
                })
            })
            .collect();
        serde_json::json!({
            "variables": self.ctx.names(),
            "weights": self.ctx.weights(),
            "terms": terms,
        })
    }
}

pub fn grlex_cmp(ctx: &CtxRef, a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    ctx.weighted_degree(a)
        .cmp(&ctx.weighted_degree(b))
        .then_with(|| a.cmp(b))
}

fn unit_exp(n: usize, i: usize, e: u32) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = e;
    v
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &exp)| exp > 0)
                .map(|(i, &exp)| {
                    if exp == 1 {
                        self.ctx.names[i].clone()
                    } else {
                        format!("{}^{}", self.ctx.names[i], exp)
                    }
                })
                .collect();
            let is_const = mono.is_empty();
            let neg = display_negative(c);
            let cabs = if neg { c.neg() } else { c.clone() };
            let coeff_str = if !c.is_rational() {
                format!("({c})")
            } else if cabs.is_one() && !is_const {
                String::new()
            } else {
                cabs.to_string()
            };
            let body = if is_const {
                if coeff_str.is_empty() {
                    cabs.to_string()
                } else {
                    coeff_str
                }
            } else if coeff_str.is_empty() {
                mono.join("*")
            } else {
                format!("{}*{}", coeff_str, mono.join("*"))
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
                out.push_str(&body);
            } else if neg {
                out.push_str(" - ");
                out.push_str(&body);
            } else {
                out.push_str(" + ");
                out.push_str(&body);
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All exponent vectors in `ctx` of exact weighted degree `deg`, in
/// lexicographically descending order.
pub fn monomials_of_weighted_degree(ctx: &CtxRef, deg: i64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let n = ctx.len();
    let mut cur = vec![0u32; n];
    fn rec(
        ctx: &CtxRef,
        i: usize,
        rem: i64,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        let n = ctx.len();
        if i == n {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = ctx.weights()[i];
        debug_assert!(w > 0);
        let max = rem / w;
        for e in (0..=max).rev() {
            cur[i] = e as u32;
            rec(ctx, i + 1, rem - e * w, cur, out);
        }
        cur[i] = 0;
    }
    if deg >= 0 {
        rec(ctx, 0, deg, &mut cur, &mut out);
    }
    out
}
