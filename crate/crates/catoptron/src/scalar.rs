//! Exact scalars: rational numbers and elements of cyclotomic fields Q(zeta_r).
//!
//! A [`Scalar`] is either an arbitrary-precision rational or an element of
//! Q(zeta_r), stored as a rational-coefficient polynomial in zeta of degree
//! less than deg Phi_r, reduced modulo the r-th cyclotomic polynomial Phi_r.
//! Reducing modulo Phi_r (rather than zeta^r - 1) keeps the quotient a field,
//! so every nonzero scalar is invertible. Values whose zeta-part vanishes are
//! demoted to plain rationals, making structural equality semantic equality.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rational shorthand used throughout the crate.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// An element of the coefficient field: Q or a cyclotomic extension Q(zeta_r).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rat(Rat),
    Cyc(Cyclotomic),
}

/// An element of Q(zeta_r) with coefficient vector of length deg Phi_r.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic {
    order: u32,
    /// Coefficients of 1, zeta, zeta^2, ... ; length = deg Phi_order.
    coeffs: Vec<Rat>,
}

impl Cyclotomic {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Vec<BigInt>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer coefficients of Phi_r, ascending degree.
pub fn cyclotomic_polynomial(order: u32) -> Vec<BigInt> {
    assert!(order >= 1, "cyclotomic order must be positive");
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&order) {
        return p.clone();
    }
    // (z^r - 1) divided by Phi_d for every proper divisor d of r.
    let mut num: Vec<BigInt> = vec![BigInt::zero(); order as usize + 1];
    num[0] = BigInt::from(-1);
    num[order as usize] = BigInt::one();
    for d in 1..order {
        if order % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = int_poly_exact_div(&num, &phi_d);
        }
    }
    cyclotomic_cache()
        .lock()
        .unwrap()
        .insert(order, num.clone());
    num
}

/// Exact division of integer polynomials, panicking on a nonzero remainder.
fn int_poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(dn >= dd);
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[dd + k].clone() / &den[dd];
        for (i, dc) in den.iter().enumerate() {
            rem[i + k] -= &c * dc;
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact division");
    quot
}

/// Degree of Phi_order, i.e. Euler's totient.
pub fn cyclotomic_degree(order: u32) -> usize {
    cyclotomic_polynomial(order).len() - 1
}

/// Reduce a zeta-coefficient vector modulo Phi_order, returning the canonical
/// fixed-length representative.
fn reduce_mod_phi(order: u32, mut coeffs: Vec<Rat>) -> Vec<Rat> {
    let phi = cyclotomic_polynomial(order);
    let deg = phi.len() - 1;
    while coeffs.len() > deg {
        let top = coeffs.pop().unwrap();
        if !top.is_zero() {
            let k = coeffs.len() - deg;
            for (i, pc) in phi.iter().take(deg).enumerate() {
                let adj = &top * Rat::from_integer(pc.clone());
                coeffs[k + i] -= adj;
            }
        }
    }
    coeffs.resize(deg, Rat::zero());
    coeffs
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rat::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(rat_int(n))
    }

    pub fn from_rat(r: Rat) -> Self {
        Scalar::Rat(r)
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rat(rat(n, d))
    }

    /// Build an element of Q(zeta_order); demotes to a rational when the
    /// zeta-part cancels.
    pub fn cyclotomic(order: u32, coeffs: Vec<Rat>) -> Self {
        if order <= 1 {
            return Scalar::Rat(coeffs.into_iter().next().unwrap_or_else(Rat::zero));
        }
        let coeffs = reduce_mod_phi(order, coeffs);
        if coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Scalar::Rat(coeffs.into_iter().next().unwrap_or_else(Rat::zero))
        } else {
            Scalar::Cyc(Cyclotomic { order, coeffs })
        }
    }

    /// zeta_order^power.
    pub fn root_of_unity(order: u32, power: i64) -> Self {
        let p = power.rem_euclid(order as i64) as usize;
        if order == 1 {
            return Scalar::one();
        }
        if order == 2 {
            return Scalar::from_int(if p == 0 { 1 } else { -1 });
        }
        let mut coeffs = vec![Rat::zero(); p + 1];
        coeffs[p] = Rat::one();
        Scalar::cyclotomic(order, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Cyc(_) => false,
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Cyc(_) => None,
        }
    }

    fn promote(&self, order: u32) -> Vec<Rat> {
        let deg = cyclotomic_degree(order);
        match self {
            Scalar::Rat(r) => {
                let mut v = vec![Rat::zero(); deg];
                v[0] = r.clone();
                v
            }
            Scalar::Cyc(c) => {
                assert_eq!(c.order, order, "mixed cyclotomic orders");
                c.coeffs.clone()
            }
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => {
                let order = self.cyc_order().or(other.cyc_order()).unwrap();
                let a = self.promote(order);
                let b = other.promote(order);
                let sum = a.iter().zip(&b).map(|(x, y)| x + y).collect();
                Scalar::cyclotomic(order, sum)
            }
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Cyc(c) => Scalar::Cyc(Cyclotomic {
                order: c.order,
                coeffs: c.coeffs.iter().map(|x| -x).collect(),
            }),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Rat(a), Scalar::Cyc(c)) | (Scalar::Cyc(c), Scalar::Rat(a)) => {
                if a.is_zero() {
                    return Scalar::zero();
                }
                Scalar::Cyc(Cyclotomic {
                    order: c.order,
                    coeffs: c.coeffs.iter().map(|x| x * a).collect(),
                })
            }
            (Scalar::Cyc(a), Scalar::Cyc(b)) => {
                assert_eq!(a.order, b.order, "mixed cyclotomic orders");
                let mut prod = vec![Rat::zero(); a.coeffs.len() + b.coeffs.len() - 1];
                for (i, x) in a.coeffs.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.coeffs.iter().enumerate() {
                        if !y.is_zero() {
                            prod[i + j] += x * y;
                        }
                    }
                }
                Scalar::cyclotomic(a.order, prod)
            }
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => {
                assert!(!r.is_zero(), "division by zero");
                Scalar::Rat(r.recip())
            }
            Scalar::Cyc(c) => {
                // Extended Euclid in Q[z] against Phi_order.
                let phi: Vec<Rat> = cyclotomic_polynomial(c.order)
                    .into_iter()
                    .map(Rat::from_integer)
                    .collect();
                let (g, s) = rat_poly_half_xgcd(&c.coeffs, &phi);
                assert_eq!(g.len(), 1, "cyclotomic element not invertible");
                let ginv = g[0].recip();
                let coeffs = s.into_iter().map(|x| x * &ginv).collect();
                Scalar::cyclotomic(c.order, coeffs)
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    fn cyc_order(&self) -> Option<u32> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Cyc(c) => Some(c.order),
        }
    }
}

/// Returns (gcd, s) with s*a = gcd (mod b), over Q[z]; gcd is normalized
/// to its trailing representation with trailing zeros stripped.
fn rat_poly_half_xgcd(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
        while v.len() > 1 && v.last().unwrap().is_zero() {
            v.pop();
        }
        v
    }
    fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        if a.iter().all(Rat::is_zero) || b.iter().all(Rat::is_zero) {
            return vec![Rat::zero()];
        }
        let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }
    fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let n = a.len().max(b.len());
        let mut out = vec![Rat::zero(); n];
        for (i, x) in a.iter().enumerate() {
            out[i] += x;
        }
        for (i, y) in b.iter().enumerate() {
            out[i] -= y;
        }
        trim(out)
    }
    fn poly_divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
        let mut rem = trim(a.to_vec());
        let b = trim(b.to_vec());
        let db = b.len() - 1;
        if rem.len() < b.len() {
            return (vec![Rat::zero()], rem);
        }
        let mut quot = vec![Rat::zero(); rem.len() - db];
        while rem.len() >= b.len() && !(rem.len() == 1 && rem[0].is_zero()) {
            let k = rem.len() - b.len();
            let c = rem.last().unwrap() / b.last().unwrap();
            for (i, bc) in b.iter().enumerate() {
                let adj = &c * bc;
                rem[k + i] -= adj;
            }
            quot[k] = c;
            rem = trim(rem);
            if rem.len() == 1 && rem[0].is_zero() {
                break;
            }
        }
        (quot, rem)
    }

    let mut r0 = trim(a.to_vec());
    let mut r1 = trim(b.to_vec());
    let mut s0 = vec![Rat::one()];
    let mut s1 = vec![Rat::zero()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    (r0, s0)
}

fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", fmt_rat(r)),
            Scalar::Cyc(c) => {
                let mut parts = Vec::new();
                for (i, x) in c.coeffs.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let zeta = match i {
                        0 => String::new(),
                        1 => format!("z{}", c.order),
                        _ => format!("z{}^{}", c.order, i),
                    };
                    let body = if i == 0 {
                        fmt_rat(x)
                    } else if x.is_one() {
                        zeta
                    } else if (-x).is_one() {
                        format!("-{zeta}")
                    } else {
                        format!("{}*{}", fmt_rat(x), zeta)
                    };
                    parts.push(body);
                }
                let mut s = String::new();
                for (k, p) in parts.iter().enumerate() {
                    if k == 0 {
                        s.push_str(p);
                    } else if let Some(stripped) = p.strip_prefix('-') {
                        s.push_str(" - ");
                        s.push_str(stripped);
                    } else {
                        s.push_str(" + ");
                        s.push_str(p);
                    }
                }
                write!(f, "{s}")
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// True when the rational part is negative; used for pretty-printing signs.
pub fn display_negative(s: &Scalar) -> bool {
    matches!(s, Scalar::Rat(r) if r.is_negative())
}
