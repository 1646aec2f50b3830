//! The swallowtail surface and its classified rank-one matrix
//! factorizations.
//!
//! The swallowtail is the discriminant of the symmetric group S_4 acting on
//! its essential three-dimensional reflection representation, written in
//! coordinates u, v, w of weights 2, 3, 4:
//!
//!   Delta = -v^4 - 2 u^3 v^2 + 9 u^4 w + 6 u v^2 w - 6 u^2 w^2 + w^3.
//!
//! The graded rank-one maximal Cohen–Macaulay modules over the swallowtail
//! are classified by three matrix families (after the free module and two
//! ideals): a 2x2 family M_{2,t} defined for every t and two 3x3 families
//! M_{4,0,t} and M_{4,-3,t} defined for t != 0. Every determinant below is a
//! unit times Delta, with the unit independent of the parameter.
//!
//! `match_swallowtail` solves for the graded change of coordinates
//! u -> alpha u, v -> beta v, w -> gamma w + delta u^2 identifying an
//! arbitrary weighted-homogeneous sextic-discriminant normal form with the
//! swallowtail above, up to one overall scalar. Only even powers of beta
//! occur, so the oracle works with beta^2 and stays in exact rational
//! arithmetic.

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::poly::{CtxRef, Poly, VarCtx};
use crate::scalar::{Rat, Scalar};

/// Variable context u, v, w with weights 2, 3, 4.
pub fn swallowtail_ctx() -> CtxRef {
    VarCtx::new(vec!["u", "v", "w"], vec![2, 3, 4])
}

/// The swallowtail polynomial in the given (u,v,w)-context.
pub fn swallowtail_delta(ctx: &CtxRef) -> Poly {
    let [u, v, w] = [0, 1, 2].map(|i| Poly::var(ctx, i));
    let c = |n: i64| Poly::constant(ctx, Scalar::from_int(n));
    c(-1)
        .mul(&v.pow(4))
        .add(&c(-2).mul(&u.pow(3)).mul(&v.pow(2)))
        .add(&c(9).mul(&u.pow(4)).mul(&w))
        .add(&c(6).mul(&u).mul(&v.pow(2)).mul(&w))
        .add(&c(-6).mul(&u.pow(2)).mul(&w.pow(2)))
        .add(&w.pow(3))
}

/// The three classified matrix families.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HovinenFamily {
    /// 2x2 family, defined for every parameter t.
    M2,
    /// 3x3 family M_{4,0,t}, t != 0.
    M40,
    /// 3x3 family M_{4,-3,t}, t != 0.
    M4m3,
}

impl HovinenFamily {
    pub fn parse(s: &str) -> Result<HovinenFamily> {
        match s {
            "m2" | "M2" => Ok(HovinenFamily::M2),
            "m40" | "M40" => Ok(HovinenFamily::M40),
            "m4m3" | "M4m3" => Ok(HovinenFamily::M4m3),
            _ => Err(Error::InvalidParameter(format!(
                "unknown matrix family '{s}' (expected m2, m40 or m4m3)"
            ))),
        }
    }
}

/// The family matrix at a scalar parameter, over the (u,v,w)-context.
/// The 3x3 families require t != 0.
pub fn hovinen_matrix(family: HovinenFamily, t: &Scalar) -> Result<PolyMatrix> {
    let ctx = swallowtail_ctx();
    let [u, v, w] = [0, 1, 2].map(|i| Poly::var(&ctx, i));
    let s = |x: &Scalar| Poly::constant(&ctx, x.clone());
    let int = |n: i64| Scalar::from_int(n);
    match family {
        HovinenFamily::M2 => {
            // [ w - (t^2-1) u^2            v^2 + (t-2)^2 (t+1) u^3 ]
            // [ v^2 - (t-1)(t+2)^2 u^3     w^2 + 6uv^2 + (t^2-7)u^2 w
            //                                + (t^2-4)^2 u^4        ]
            let t2 = t.mul(t);
            let a = w.sub(&u.pow(2).scale(&t2.sub(&int(1))));
            let c12 = t.sub(&int(2)).mul(&t.sub(&int(2))).mul(&t.add(&int(1)));
            let b = v.pow(2).add(&u.pow(3).scale(&c12));
            let c21 = t.sub(&int(1)).mul(&t.add(&int(2))).mul(&t.add(&int(2)));
            let c = v.pow(2).sub(&u.pow(3).scale(&c21));
            let c22 = t2.sub(&int(4)).mul(&t2.sub(&int(4)));
            let d = w
                .pow(2)
                .add(&u.mul(&v.pow(2)).scale(&int(6)))
                .add(&u.pow(2).mul(&w).scale(&t2.sub(&int(7))))
                .add(&u.pow(4).scale(&c22));
            Ok(PolyMatrix::from_fn(2, 2, |i, j| {
                [[a.clone(), b.clone()], [c.clone(), d.clone()]][i][j].clone()
            }))
        }
        HovinenFamily::M40 => {
            if t.is_zero() {
                return Err(Error::InvalidParameter("M_{4,0,t} needs t != 0".into()));
            }
            let ti = t.inv();
            let ti2 = ti.mul(&ti);
            // row 1: -w + (1-2t)/t^2 u^2, 0, v^2 + (t^2-4t+1)/t uw + 2u^3
            let a11 = w.neg().add(&u.pow(2).scale(&int(1).sub(&t.mul(&int(2))).mul(&ti2)));
            let c13 = t.mul(t).sub(&t.mul(&int(4))).add(&int(1)).mul(&ti);
            let a13 = v
                .pow(2)
                .add(&u.mul(&w).scale(&c13))
                .add(&u.pow(3).scale(&int(2)));
            // row 2: v, -w, 0 ; row 3: -(t+1)^2/t u, v, -w + t(t-2) u^2
            let a31 = u.scale(&t.add(&int(1)).mul(&t.add(&int(1))).mul(&ti).neg());
            let a33 = w.neg().add(&u.pow(2).scale(&t.mul(&t.sub(&int(2)))));
            let zero = Poly::zero(&ctx);
            let rows = [
                [a11, zero.clone(), a13],
                [v.clone(), w.neg(), zero.clone()],
                [a31, v.clone(), a33],
            ];
            Ok(PolyMatrix::from_fn(3, 3, |i, j| rows[i][j].clone()))
        }
        HovinenFamily::M4m3 => {
            if t.is_zero() {
                return Err(Error::InvalidParameter("M_{4,-3,t} needs t != 0".into()));
            }
            let ti = t.inv();
            let ti2 = ti.mul(&ti);
            // row 1: -w + (t+4)(3t+4)/t^2 u^2, 0,
            //        v^2 + (t^2-t+4)/t uw - (t+3)(3t+4)/t u^3
            let c11 = t.add(&int(4)).mul(&t.mul(&int(3)).add(&int(4))).mul(&ti2);
            let a11 = w.neg().add(&u.pow(2).scale(&c11));
            let c13a = t.mul(t).sub(t).add(&int(4)).mul(&ti);
            let c13b = t.add(&int(3)).mul(&t.mul(&int(3)).add(&int(4))).mul(&ti);
            let a13 = v
                .pow(2)
                .add(&u.mul(&w).scale(&c13a))
                .sub(&u.pow(3).scale(&c13b));
            // row 2: v, -w + 3u^2, 0
            let a22 = w.neg().add(&u.pow(2).scale(&int(3)));
            // row 3: -(t+1)(t+4)/t u, v, -w + (t+1)(t+3) u^2
            let a31 = u.scale(&t.add(&int(1)).mul(&t.add(&int(4))).mul(&ti).neg());
            let a33 = w
                .neg()
                .add(&u.pow(2).scale(&t.add(&int(1)).mul(&t.add(&int(3)))));
            let zero = Poly::zero(&ctx);
            let rows = [
                [a11, zero.clone(), a13],
                [v.clone(), a22, zero.clone()],
                [a31, v.clone(), a33],
            ];
            let _ = s;
            Ok(PolyMatrix::from_fn(3, 3, |i, j| rows[i][j].clone()))
        }
    }
}

/// The 2x2 family with a symbolic parameter: entries live in the context
/// (u, v, w, t) where t has weight zero. Its determinant is the swallowtail
/// polynomial on the nose; all t-terms cancel.
pub fn hovinen_m2_symbolic() -> (CtxRef, PolyMatrix) {
    let ctx = VarCtx::new(vec!["u", "v", "w", "t"], vec![2, 3, 4, 0]);
    let [u, v, w, t] = [0, 1, 2, 3].map(|i| Poly::var(&ctx, i));
    let c = |n: i64| Poly::constant(&ctx, Scalar::from_int(n));
    let a = w.sub(&t.pow(2).sub(&c(1)).mul(&u.pow(2)));
    let b = v
        .pow(2)
        .add(&t.sub(&c(2)).pow(2).mul(&t.add(&c(1))).mul(&u.pow(3)));
    let cc = v
        .pow(2)
        .sub(&t.sub(&c(1)).mul(&t.add(&c(2)).pow(2)).mul(&u.pow(3)));
    let d = w
        .pow(2)
        .add(&c(6).mul(&u).mul(&v.pow(2)))
        .add(&t.pow(2).sub(&c(7)).mul(&u.pow(2)).mul(&w))
        .add(&t.pow(2).sub(&c(4)).pow(2).mul(&u.pow(4)));
    let m = PolyMatrix::from_fn(2, 2, |i, j| {
        [[a.clone(), b.clone()], [cc.clone(), d.clone()]][i][j].clone()
    });
    (ctx, m)
}

/// The swallowtail polynomial lifted to the symbolic (u,v,w,t) context.
pub fn swallowtail_delta_in(ctx: &CtxRef) -> Poly {
    let [u, v, w] = [0, 1, 2].map(|i| Poly::var(ctx, i));
    let c = |n: i64| Poly::constant(ctx, Scalar::from_int(n));
    c(-1)
        .mul(&v.pow(4))
        .add(&c(-2).mul(&u.pow(3)).mul(&v.pow(2)))
        .add(&c(9).mul(&u.pow(4)).mul(&w))
        .add(&c(6).mul(&u).mul(&v.pow(2)).mul(&w))
        .add(&c(-6).mul(&u.pow(2)).mul(&w.pow(2)))
        .add(&w.pow(3))
}

/// A successful identification of a weighted (2,3,4)-homogeneous degree-12
/// polynomial with the swallowtail: substituting u -> alpha u, v -> beta v,
/// w -> gamma w + delta u^2 into the swallowtail gives `scale` times the
/// input, with beta^2 = beta_sq.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwallowtailMatch {
    pub alpha: Rat,
    pub beta_sq: Rat,
    pub gamma: Rat,
    pub delta_shift: Rat,
    pub scale: Rat,
}

/// Coefficient-matching oracle: solve for (alpha, beta^2, gamma, delta,
/// scale) such that Delta_swallowtail(alpha u, beta v, gamma w + delta u^2)
/// = scale * input. Returns `None` when no graded identification exists.
pub fn match_swallowtail(input: &Poly) -> Option<SwallowtailMatch> {
    let ctx = input.ctx();
    if ctx.len() != 3 || ctx.weights() != [2, 3, 4] {
        return None;
    }
    if input.weighted_degree() != Some(12) || !input.is_homogeneous() {
        return None;
    }
    let coeff = |a: u32, b: u32, c: u32| -> Option<Rat> {
        let s = input.coeff(&[a, b, c]);
        s.as_rat().cloned().or(if s.is_zero() {
            Some(Rat::from_integer(0.into()))
        } else {
            None
        })
    };
    let c_u6 = coeff(6, 0, 0)?;
    let c_v4 = coeff(0, 4, 0)?;
    let c_u3v2 = coeff(3, 2, 0)?;
    let c_u4w = coeff(4, 0, 1)?;
    let c_uv2w = coeff(1, 2, 1)?;
    let c_u2w2 = coeff(2, 0, 2)?;
    let c_w3 = coeff(0, 0, 3)?;
    let zero = Rat::from_integer(0.into());
    if c_w3 == zero || c_v4 == zero || c_uv2w == zero {
        return None;
    }
    // With B = beta^2 the seven coefficient equations read
    //   -B^2                          = s c_v4
    //   -2 a^3 B + 6 a B d            = s c_u3v2
    //   9 a^4 g - 12 a^2 g d + 3 g d^2 = s c_u4w
    //   6 a B g                       = s c_uv2w
    //   -6 a^2 g^2 + 3 g^2 d          = s c_u2w2
    //   g^3                           = s c_w3
    //   9 a^4 d - 6 a^2 d^2 + d^3     = s c_u6
    // Eliminating through the last equation and the u^2w^2 / u^3v^2 rows
    // pins a^2 = g * k with the constant below; the graded rescaling freedom
    // lets us choose g = k so that everything stays rational.
    let three = Rat::from_integer(3.into());
    let k = (&c_u3v2 / &c_uv2w - &c_u2w2 / (&three * &c_w3)) * Rat::new(3.into(), 5.into());
    if k == zero {
        return None;
    }
    let gamma = k.clone();
    let alpha = k.clone();
    let scale = &gamma * &gamma * &gamma / &c_w3;
    let beta_sq = &gamma * &gamma * &c_uv2w / (Rat::from_integer(6.into()) * &c_w3 * &alpha);
    let delta_shift =
        Rat::from_integer(2.into()) * &alpha * &alpha + &gamma * &c_u2w2 / (&three * &c_w3);
    let m = SwallowtailMatch {
        alpha,
        beta_sq,
        gamma,
        delta_shift,
        scale,
    };
    // verify all seven equations exactly
    let a = &m.alpha;
    let b = &m.beta_sq;
    let g = &m.gamma;
    let d = &m.delta_shift;
    let s = &m.scale;
    let checks = [
        (-(b * b), s * &c_v4),
        (
            Rat::from_integer((-2).into()) * a * a * a * b + Rat::from_integer(6.into()) * a * b * d,
            s * &c_u3v2,
        ),
        (
            Rat::from_integer(9.into()) * a * a * a * a * g
                - Rat::from_integer(12.into()) * a * a * g * d
                + &three * g * d * d,
            s * &c_u4w,
        ),
        (Rat::from_integer(6.into()) * a * b * g, s * &c_uv2w),
        (
            Rat::from_integer((-6i64).into()) * a * a * g * g + &three * g * g * d,
            s * &c_u2w2,
        ),
        (g * g * g, s * &c_w3),
        (
            Rat::from_integer(9.into()) * a * a * a * a * d
                - Rat::from_integer(6.into()) * a * a * d * d
                + d * d * d,
            s * &c_u6,
        ),
    ];
    if checks.iter().all(|(lhs, rhs)| lhs == rhs) {
        Some(m)
    } else {
        None
    }
}
