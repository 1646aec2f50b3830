//! Basic invariants, Reynolds operators, the Jacobian, the arrangement
//! polynomial and the discriminant; rewriting invariants in the basic
//! invariants and coordinates over the coinvariant free-module basis.
//!
//! The invariant ring R = K[f_1,...,f_n] of a reflection group is itself a
//! polynomial ring, and S is a free R-module on any monomial lift of a basis
//! of the coinvariant algebra S/(R_+). Everything downstream (multiplication
//! matrices, isotypical blocks, discriminant identities) runs through the two
//! exact linear-algebra routines here: `rewrite` (invariants into u-variables)
//! and `free_coords` (coordinates over the coinvariant basis).

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::chars::LinearCharacter;
use crate::error::{Error, Result};
use crate::group::{Family, ReflectionGroup};
use crate::matrix::{linear_solve, PolyMatrix, ScalarMatrix};
use crate::poly::{monomials_of_weighted_degree, CtxRef, Poly, VarCtx};
use crate::scalar::Scalar;

/// The Reynolds operator: averages a polynomial over the group.
pub fn reynolds(group: &ReflectionGroup, p: &Poly) -> Poly {
    let mut acc = Poly::zero(group.x_ctx());
    for i in 0..group.order() {
        acc = acc.add(&group.apply(i, p));
    }
    acc.scale(&Scalar::ratio(1, group.order() as i64))
}

/// The twisted Reynolds operator for a linear character chi:
/// (1/|G|) sum_g chi(g^{-1}) (g . p). The result q is a relative invariant:
/// g(q) = chi(g) q for every group element.
pub fn twisted_reynolds(group: &ReflectionGroup, chi: &LinearCharacter, p: &Poly) -> Poly {
    let mut acc = Poly::zero(group.x_ctx());
    for i in 0..group.order() {
        let c = chi.value(group.inverse_index(i));
        if c.is_zero() {
            continue;
        }
        acc = acc.add(&group.apply(i, p).scale(c));
    }
    acc.scale(&Scalar::ratio(1, group.order() as i64))
}

/// A chosen system of basic invariants f_1..f_n with target u-variables.
#[derive(Clone, Debug)]
pub struct InvariantBasis {
    pub polys: Vec<Poly>,
    pub degrees: Vec<u32>,
    pub x_ctx: CtxRef,
    pub u_ctx: CtxRef,
}

/// Family-specific basic invariants:
/// cyclic: x^d; natural symmetric: elementary symmetric polynomials;
/// essential symmetric: power sums pulled back through the sum-zero chart;
/// monomial G(r,1,n): p_i = 1/(ir) sum_j x_j^(ri).
pub fn basic_invariants(group: &ReflectionGroup) -> Result<InvariantBasis> {
    let ctx = group.x_ctx().clone();
    let polys: Vec<Poly> = match group.family {
        Family::Cyclic(d) => {
            vec![Poly::var(&ctx, 0).pow(d)]
        }
        Family::SymNatural(n) => elementary_symmetric(&ctx, n as usize),
        Family::SymEssential(n) => {
            let n = n as usize;
            // the last coordinate of the natural action is -(x_1+...+x_{n-1})
            let mut sum = Poly::zero(&ctx);
            for i in 0..n - 1 {
                sum = sum.add(&Poly::var(&ctx, i));
            }
            let last = sum.neg();
            (2..=n as u32)
                .map(|k| {
                    let mut q = last.pow(k);
                    for i in 0..n - 1 {
                        q = q.add(&Poly::var(&ctx, i).pow(k));
                    }
                    q
                })
                .collect()
        }
        Family::Monomial { r, n } => (1..=n)
            .map(|i| {
                let mut q = Poly::zero(&ctx);
                for j in 0..n as usize {
                    q = q.add(&Poly::var(&ctx, j).pow(r * i));
                }
                q.scale(&Scalar::ratio(1, (i * r) as i64))
            })
            .collect(),
    };

    let degrees = group.degrees.clone();
    for (f, &d) in polys.iter().zip(&degrees) {
        if !f.is_homogeneous() || f.weighted_degree() != Some(d as i64) {
            return Err(Error::Internal(format!(
                "basic invariant has wrong degree (expected {d})"
            )));
        }
        for i in 0..group.order() {
            if &group.apply(i, f) != f {
                return Err(Error::Internal("basic invariant is not invariant".into()));
            }
        }
    }

    let u_ctx = VarCtx::new(
        (1..=degrees.len()).map(|i| format!("u{i}")).collect::<Vec<_>>(),
        degrees.iter().map(|&d| d as i64).collect(),
    );
    let basis = InvariantBasis {
        polys,
        degrees,
        x_ctx: ctx,
        u_ctx,
    };
    let jac = jacobian_poly(&basis);
    if jac.is_zero() {
        return Err(Error::Internal(
            "basic invariants are not algebraically independent".into(),
        ));
    }
    Ok(basis)
}

fn elementary_symmetric(ctx: &CtxRef, n: usize) -> Vec<Poly> {
    // iteratively multiply out prod_i (1 + x_i T)
    let mut es: Vec<Poly> = vec![Poly::one(ctx)];
    for i in 0..n {
        let x = Poly::var(ctx, i);
        let mut next = Vec::with_capacity(es.len() + 1);
        for k in 0..=es.len() {
            let mut term = if k < es.len() {
                es[k].clone()
            } else {
                Poly::zero(ctx)
            };
            if k > 0 {
                term = term.add(&es[k - 1].mul(&x));
            }
            next.push(term);
        }
        es = next;
    }
    es.remove(0);
    es
}

/// det(d f_i / d x_j): a product of the mirror forms with multiplicities
/// rho_H - 1, of degree m.
pub fn jacobian_poly(basis: &InvariantBasis) -> Poly {
    let n = basis.polys.len();
    let jac = PolyMatrix::from_fn(n, n, |i, j| basis.polys[i].derivative(j));
    jac.determinant().expect("square Jacobian")
}

/// The reduced arrangement polynomial: the product of the distinct mirror
/// forms, each exactly once, in the mirror normalization of the group.
pub fn arrangement_poly(group: &ReflectionGroup) -> Poly {
    let mut z = Poly::one(group.x_ctx());
    for i in 0..group.m1() {
        z = z.mul(&group.mirror_form_poly(i));
    }
    z
}

/// A monomial lift of a basis of the coinvariant algebra S/(R_+).
#[derive(Clone, Debug)]
pub struct CoinvariantBasis {
    /// Exponent vectors of the chosen monomials, grouped degree by degree.
    pub monomials: Vec<Vec<u32>>,
    pub degrees: Vec<u32>,
}

impl CoinvariantBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomial_poly(&self, ctx: &CtxRef, i: usize) -> Poly {
        Poly::monomial_scaled(ctx, self.monomials[i].clone(), Scalar::one())
    }

    /// Generating function sum_c t^(deg b_c) as coefficient list.
    pub fn degree_generating_function(&self) -> Vec<u64> {
        let top = self.degrees.iter().copied().max().unwrap_or(0) as usize;
        let mut gf = vec![0u64; top + 1];
        for &d in &self.degrees {
            gf[d as usize] += 1;
        }
        gf
    }
}

/// The discriminant package: J and z in the x-variables, and the exact
/// rewrite of z*J in the u-variables together with its leading coefficient.
#[derive(Clone, Debug)]
pub struct DiscriminantData {
    pub jacobian: Poly,
    pub arrangement: Poly,
    /// The exact rewrite of z*J into the u-variables, not rescaled.
    pub delta: Poly,
    /// Leading coefficient of `delta` under graded lex; identities downstream
    /// are stated up to this recorded unit.
    pub unit: Scalar,
}

/// Per-degree exact solver for coordinates in S_k modulo the ideal (R_+).
struct DegreeSolver {
    monos: Vec<Vec<u32>>,
    mono_index: HashMap<Vec<u32>, usize>,
    /// inverse of the basis matrix [ideal echelon | chosen unit vectors]
    basis_inverse: ScalarMatrix,
    ideal_dim: usize,
    /// global coinvariant indices of the chosen monomials, in column order
    chosen_global: Vec<usize>,
}

/// A reflection group together with its basic invariants and the exact
/// machinery for rewriting and free-module coordinates.
pub struct InvariantRing {
    group: ReflectionGroup,
    basis: InvariantBasis,
    u_expansion: Mutex<HashMap<Vec<u32>, Poly>>,
    coinv: OnceLock<(CoinvariantBasis, Vec<DegreeSolver>)>,
    disc: OnceLock<DiscriminantData>,
}

impl InvariantRing {
    pub fn new(group: ReflectionGroup) -> Result<InvariantRing> {
        let basis = basic_invariants(&group)?;
        Ok(InvariantRing {
            group,
            basis,
            u_expansion: Mutex::new(HashMap::new()),
            coinv: OnceLock::new(),
            disc: OnceLock::new(),
        })
    }

    pub fn build(family: Family) -> Result<InvariantRing> {
        InvariantRing::new(ReflectionGroup::build(family)?)
    }

    pub fn group(&self) -> &ReflectionGroup {
        &self.group
    }

    pub fn basis(&self) -> &InvariantBasis {
        &self.basis
    }

    pub fn x_ctx(&self) -> &CtxRef {
        &self.basis.x_ctx
    }

    pub fn u_ctx(&self) -> &CtxRef {
        &self.basis.u_ctx
    }

    /// Expand a u-monomial into the x-variables, with memoization.
    fn expand_u_monomial(&self, exps: &[u32]) -> Poly {
        if let Some(p) = self.u_expansion.lock().unwrap().get(exps) {
            return p.clone();
        }
        let result = match exps.iter().position(|&e| e > 0) {
            None => Poly::one(&self.basis.x_ctx),
            Some(i) => {
                let mut prev = exps.to_vec();
                prev[i] -= 1;
                self.expand_u_monomial(&prev).mul(&self.basis.polys[i])
            }
        };
        self.u_expansion
            .lock()
            .unwrap()
            .insert(exps.to_vec(), result.clone());
        result
    }

    /// Expand a polynomial in the u-variables into the x-variables.
    pub fn expand(&self, p: &Poly) -> Poly {
        let mut acc = Poly::zero(&self.basis.x_ctx);
        for (e, c) in p.terms() {
            acc = acc.add(&self.expand_u_monomial(e).scale(c));
        }
        acc
    }

    /// Rewrite a homogeneous invariant polynomial as the unique polynomial in
    /// the basic invariants: returns q with q(f_1,...,f_n) = p. Enumerates
    /// u-monomials of the matching weighted degree and solves one dense exact
    /// linear system.
    pub fn rewrite(&self, p: &Poly) -> Result<Poly> {
        if p.is_zero() {
            return Ok(Poly::zero(&self.basis.u_ctx));
        }
        if !p.is_homogeneous() {
            return Err(Error::Precondition("rewrite needs a homogeneous input".into()));
        }
        let deg = p.weighted_degree().unwrap();
        let candidates = monomials_of_weighted_degree(&self.basis.u_ctx, deg);
        if candidates.is_empty() {
            return Err(Error::NotInvariant);
        }
        let expansions: Vec<Poly> = candidates
            .iter()
            .map(|e| self.expand_u_monomial(e))
            .collect();
        // row space: x-monomials of degree `deg`
        let mut row_index: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let mut note = |e: &Vec<u32>| {
            if !row_index.contains_key(e) {
                row_index.insert(e.clone(), rows.len());
                rows.push(e.clone());
            }
        };
        for q in &expansions {
            for (e, _) in q.terms() {
                note(e);
            }
        }
        for (e, _) in p.terms() {
            note(e);
        }
        let mut a = ScalarMatrix::zero(rows.len(), candidates.len());
        for (j, q) in expansions.iter().enumerate() {
            for (e, c) in q.terms() {
                a.set(row_index[e], j, c.clone());
            }
        }
        let mut b = vec![Scalar::zero(); rows.len()];
        for (e, c) in p.terms() {
            b[row_index[e]] = c.clone();
        }
        let x = linear_solve(&a, &b).map_err(|_| Error::NotInvariant)?;
        Ok(Poly::from_terms(
            &self.basis.u_ctx,
            candidates.into_iter().zip(x),
        ))
    }

    fn coinv_data(&self) -> &(CoinvariantBasis, Vec<DegreeSolver>) {
        self.coinv.get_or_init(|| {
            self.compute_coinvariants()
                .expect("coinvariant computation is internally consistent")
        })
    }

    /// The coinvariant monomial basis: graded-lex-greedy monomials outside
    /// the ideal span, degree by degree.
    pub fn coinvariant_basis(&self) -> &CoinvariantBasis {
        &self.coinv_data().0
    }

    fn compute_coinvariants(&self) -> Result<(CoinvariantBasis, Vec<DegreeSolver>)> {
        let x_ctx = &self.basis.x_ctx;
        let group_order = self.group.order();
        let m: i64 = self.basis.degrees.iter().map(|&d| d as i64 - 1).sum();
        let mut monomials = Vec::new();
        let mut degrees = Vec::new();
        let mut solvers = Vec::new();
        for k in 0..=m {
            let monos = monomials_of_weighted_degree(x_ctx, k);
            let dim = monos.len();
            let mono_index: HashMap<Vec<u32>, usize> = monos
                .iter()
                .enumerate()
                .map(|(i, e)| (e.clone(), i))
                .collect();
            // span of (R_+)_k: f_i * (monomials of degree k - d_i)
            let mut echelon: Vec<Vec<Scalar>> = Vec::new();
            let mut pivots: Vec<usize> = Vec::new();
            let mut ideal_basis: Vec<Vec<Scalar>> = Vec::new();
            let reduce = |mut v: Vec<Scalar>, echelon: &Vec<Vec<Scalar>>, pivots: &Vec<usize>| {
                for (row, &p) in echelon.iter().zip(pivots.iter()) {
                    if !v[p].is_zero() {
                        let f = v[p].clone();
                        for (x, r) in v.iter_mut().zip(row.iter()) {
                            *x = x.sub(&f.mul(r));
                        }
                    }
                }
                v
            };
            for (i, f) in self.basis.polys.iter().enumerate() {
                let d = self.basis.degrees[i] as i64;
                if d > k {
                    continue;
                }
                for e in monomials_of_weighted_degree(x_ctx, k - d) {
                    let prod = f.mul(&Poly::monomial_scaled(x_ctx, e, Scalar::one()));
                    let mut v = vec![Scalar::zero(); dim];
                    for (pe, c) in prod.terms() {
                        v[mono_index[pe]] = c.clone();
                    }
                    let mut red = reduce(v.clone(), &echelon, &pivots);
                    if let Some(p) = red.iter().position(|c| !c.is_zero()) {
                        let inv = red[p].inv();
                        for x in red.iter_mut() {
                            *x = x.mul(&inv);
                        }
                        echelon.push(red);
                        pivots.push(p);
                        ideal_basis.push(v);
                    }
                }
            }
            // choose complement monomials greedily in the enumeration order
            let mut chosen_local: Vec<usize> = Vec::new();
            for (mi, _) in monos.iter().enumerate() {
                let mut v = vec![Scalar::zero(); dim];
                v[mi] = Scalar::one();
                let mut red = reduce(v, &echelon, &pivots);
                if let Some(p) = red.iter().position(|c| !c.is_zero()) {
                    let inv = red[p].inv();
                    for x in red.iter_mut() {
                        *x = x.mul(&inv);
                    }
                    echelon.push(red);
                    pivots.push(p);
                    chosen_local.push(mi);
                }
            }
            // basis matrix of S_k: ideal basis columns then chosen unit columns
            let ideal_dim = ideal_basis.len();
            if ideal_dim + chosen_local.len() != dim {
                return Err(Error::Internal("degree component dimension mismatch".into()));
            }
            let bmat = ScalarMatrix::from_fn(dim, dim, |r, c| {
                if c < ideal_dim {
                    ideal_basis[c][r].clone()
                } else if monos[chosen_local[c - ideal_dim]] == monos[r] {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            });
            let basis_inverse = bmat
                .inverse()
                .ok_or_else(|| Error::Internal("degree basis matrix is singular".into()))?;
            let chosen_global: Vec<usize> =
                (0..chosen_local.len()).map(|i| monomials.len() + i).collect();
            for &mi in &chosen_local {
                monomials.push(monos[mi].clone());
                degrees.push(k as u32);
            }
            solvers.push(DegreeSolver {
                monos,
                mono_index,
                basis_inverse,
                ideal_dim,
                chosen_global,
            });
        }
        if monomials.len() != group_order {
            return Err(Error::Internal(format!(
                "coinvariant basis has {} elements, group order is {}",
                monomials.len(),
                group_order
            )));
        }
        Ok((CoinvariantBasis { monomials, degrees }, solvers))
    }

    /// Coordinates of the class of a homogeneous polynomial in the
    /// coinvariant algebra, over the chosen monomial basis. The returned
    /// vector has one entry per coinvariant basis element (zero outside the
    /// degree of `p`).
    pub fn quotient_coords(&self, p: &Poly) -> Result<Vec<Scalar>> {
        let (coinv, solvers) = self.coinv_data();
        let mut out = vec![Scalar::zero(); coinv.len()];
        if p.is_zero() {
            return Ok(out);
        }
        if !p.is_homogeneous() {
            return Err(Error::Precondition("quotient_coords needs homogeneous input".into()));
        }
        let k = p.weighted_degree().unwrap();
        let Some(solver) = solvers.get(k as usize) else {
            // beyond the top coinvariant degree everything lies in the ideal
            return Ok(out);
        };
        let mut v = vec![Scalar::zero(); solver.monos.len()];
        for (e, c) in p.terms() {
            v[solver.mono_index[e]] = c.clone();
        }
        let coords = solver.basis_inverse.mul_vec(&v);
        for (local, &global) in solver.chosen_global.iter().enumerate() {
            out[global] = coords[solver.ideal_dim + local].clone();
        }
        Ok(out)
    }

    /// Coordinates of a homogeneous polynomial over the free-module basis:
    /// the unique r_c in the u-variables with s = sum_c r_c(f) b_c.
    pub fn free_coords(&self, s: &Poly) -> Result<Vec<Poly>> {
        let coinv = self.coinvariant_basis().clone();
        let x_ctx = &self.basis.x_ctx;
        let u_ctx = &self.basis.u_ctx;
        if s.is_zero() {
            return Ok(vec![Poly::zero(u_ctx); coinv.len()]);
        }
        if !s.is_homogeneous() {
            return Err(Error::Precondition("free_coords needs a homogeneous input".into()));
        }
        let deg = s.weighted_degree().unwrap();
        // unknowns: (basis element c, u-monomial e) with deg b_c + wdeg e = deg
        let mut columns: Vec<(usize, Vec<u32>)> = Vec::new();
        let mut col_polys: Vec<Poly> = Vec::new();
        for (c, bexp) in coinv.monomials.iter().enumerate() {
            let rem = deg - coinv.degrees[c] as i64;
            if rem < 0 {
                continue;
            }
            let bc = Poly::monomial_scaled(x_ctx, bexp.clone(), Scalar::one());
            for e in monomials_of_weighted_degree(u_ctx, rem) {
                let expanded = self.expand_u_monomial(&e).mul(&bc);
                columns.push((c, e));
                col_polys.push(expanded);
            }
        }
        let mut row_index: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut nrows = 0usize;
        for q in col_polys.iter().chain(std::iter::once(s)) {
            for (e, _) in q.terms() {
                row_index.entry(e.clone()).or_insert_with(|| {
                    let i = nrows;
                    nrows += 1;
                    i
                });
            }
        }
        let mut a = ScalarMatrix::zero(nrows, columns.len());
        for (j, q) in col_polys.iter().enumerate() {
            for (e, c) in q.terms() {
                a.set(row_index[e], j, c.clone());
            }
        }
        let mut b = vec![Scalar::zero(); nrows];
        for (e, c) in s.terms() {
            b[row_index[e]] = c.clone();
        }
        let x = linear_solve(&a, &b)
            .map_err(|_| Error::Internal("free-module coordinate solve failed".into()))?;
        let mut out = vec![Poly::zero(u_ctx); coinv.len()];
        for ((c, e), coeff) in columns.into_iter().zip(x) {
            if !coeff.is_zero() {
                out[c] = out[c].add(&Poly::monomial_scaled(u_ctx, e, coeff));
            }
        }
        Ok(out)
    }

    /// Reassemble sum_c r_c(f) b_c in the x-variables (the inverse of
    /// `free_coords`).
    pub fn reconstruct(&self, coords: &[Poly]) -> Poly {
        let coinv = self.coinvariant_basis();
        let x_ctx = &self.basis.x_ctx;
        let mut acc = Poly::zero(x_ctx);
        for (c, r) in coords.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            let bc = coinv.monomial_poly(x_ctx, c);
            acc = acc.add(&self.expand(r).mul(&bc));
        }
        acc
    }

    /// J, z and the discriminant as the exact rewrite of z*J.
    pub fn discriminant(&self) -> Result<&DiscriminantData> {
        if let Some(d) = self.disc.get() {
            return Ok(d);
        }
        let jacobian = jacobian_poly(&self.basis);
        let arrangement = arrangement_poly(&self.group);
        let zj = arrangement.mul(&jacobian);
        let delta = self.rewrite(&zj)?;
        let expected = self.group.m() as i64 + self.group.m1() as i64;
        if delta.weighted_degree() != Some(expected) {
            return Err(Error::Internal("discriminant has unexpected degree".into()));
        }
        let unit = delta.leading_coeff();
        let _ = self.disc.set(DiscriminantData {
            jacobian,
            arrangement,
            delta,
            unit,
        });
        Ok(self.disc.get().unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::{det_character, linear_characters};
    use crate::group::Family;

    fn ring(f: Family) -> InvariantRing {
        InvariantRing::build(f).unwrap()
    }

    #[test]
    fn reynolds_basics() {
        let g = ReflectionGroup::build(Family::SymNatural(2)).unwrap();
        let ctx = g.x_ctx();
        let x1 = Poly::var(ctx, 0);
        let avg = reynolds(&g, &x1);
        let expect = x1.add(&Poly::var(ctx, 1)).scale(&Scalar::ratio(1, 2));
        assert_eq!(avg, expect);
        // idempotence on invariants
        assert_eq!(reynolds(&g, &avg), avg);

        // degree 2 is not divisible by 3: the average over mu_3 vanishes
        let c3 = ReflectionGroup::build(Family::Cyclic(3)).unwrap();
        let x = Poly::var(c3.x_ctx(), 0);
        assert!(reynolds(&c3, &x.pow(2)).is_zero());
    }

    #[test]
    fn twisted_reynolds_properties() {
        // trivial character reduces to the plain Reynolds operator
        let g = ReflectionGroup::build(Family::SymNatural(3)).unwrap();
        let chars = linear_characters(&g);
        let triv = chars.iter().find(|c| c.name == "triv").unwrap();
        let p = Poly::var(g.x_ctx(), 0).pow(2).mul(&Poly::var(g.x_ctx(), 1));
        assert_eq!(twisted_reynolds(&g, triv, &p), reynolds(&g, &p));

        // sign-twisted average of x1^2 x2 is a multiple of the Vandermonde
        let sign = chars.iter().find(|c| c.name == "det").unwrap();
        let q = twisted_reynolds(&g, sign, &p);
        assert!(!q.is_zero());
        let ctx = g.x_ctx();
        let [x1, x2, x3] = [0, 1, 2].map(|i| Poly::var(ctx, i));
        let vdm = x1.sub(&x2).mul(&x1.sub(&x3)).mul(&x2.sub(&x3));
        // q = c * vdm for some scalar c
        let lead = vdm.leading_term().unwrap().0.clone();
        let c = q.coeff(&lead).div(&vdm.coeff(&lead));
        assert_eq!(q, vdm.scale(&c));
        // relative invariance: g(q) = det(g) q
        for i in 0..g.order() {
            assert_eq!(g.apply(i, &q), q.scale(&g.det(i)));
        }

        // for the cyclic group, the det-twisted average of x is x itself
        let cd = ReflectionGroup::build(Family::Cyclic(5)).unwrap();
        let dchars = linear_characters(&cd);
        let det = dchars.iter().find(|c| c.name == "det").unwrap();
        let x = Poly::var(cd.x_ctx(), 0);
        assert_eq!(twisted_reynolds(&cd, det, &x), x);
    }

    #[test]
    fn basic_invariants_examples() {
        let c4 = ring(Family::Cyclic(4));
        assert_eq!(c4.basis().polys[0].to_string(), "x1^4");

        let m22 = ring(Family::Monomial { r: 2, n: 2 });
        assert_eq!(m22.basis().polys[0].to_string(), "1/2*x1^2 + 1/2*x2^2");
        assert_eq!(m22.basis().polys[1].to_string(), "1/4*x1^4 + 1/4*x2^4");

        let e4 = ring(Family::SymEssential(4));
        assert_eq!(
            e4.basis().degrees,
            vec![2, 3, 4]
        );
        assert!(!jacobian_poly(e4.basis()).is_zero());
    }

    #[test]
    fn jacobians() {
        let c = ring(Family::Cyclic(5));
        assert_eq!(jacobian_poly(c.basis()).to_string(), "5*x1^4");

        // essential S4: J is a scalar multiple of the product of the six
        // mirror forms
        let e4 = ring(Family::SymEssential(4));
        let j = jacobian_poly(e4.basis());
        let z = arrangement_poly(e4.group());
        let q = j.exact_div(&z).unwrap();
        assert!(q.is_constant(), "J/z should be the constant unit, got {q}");

        // monomial family: J = unit * (x1 x2)^(r-1) * (x1^r - x2^r)
        let m32 = ring(Family::Monomial { r: 3, n: 2 });
        let ctx = m32.x_ctx();
        let [x1, x2] = [0, 1].map(|i| Poly::var(ctx, i));
        let expect = x1
            .pow(2)
            .mul(&x2.pow(2))
            .mul(&x1.pow(3).sub(&x2.pow(3)));
        let j = jacobian_poly(m32.basis());
        let q = j.exact_div(&expect).unwrap();
        assert!(q.is_constant());
    }

    #[test]
    fn arrangement_poly_examples() {
        let c = ring(Family::Cyclic(3));
        assert_eq!(arrangement_poly(c.group()).to_string(), "x1");

        // natural S_n: the Vandermonde, up to the mirror normalization
        let s3 = ring(Family::SymNatural(3));
        let ctx = s3.x_ctx();
        let [x1, x2, x3] = [0, 1, 2].map(|i| Poly::var(ctx, i));
        let vdm = x1.sub(&x2).mul(&x1.sub(&x3)).mul(&x2.sub(&x3));
        let z = arrangement_poly(s3.group());
        let q = z.exact_div(&vdm).unwrap();
        assert!(q.is_constant());

        // monomial: z = unit * x1 x2 (x1^r - x2^r)
        let m32 = ring(Family::Monomial { r: 3, n: 2 });
        let ctx = m32.x_ctx();
        let [x1, x2] = [0, 1].map(|i| Poly::var(ctx, i));
        let expect = x1.mul(&x2).mul(&x1.pow(3).sub(&x2.pow(3)));
        let z = arrangement_poly(m32.group());
        let q = z.exact_div(&expect).unwrap();
        assert!(q.is_constant());
    }

    #[test]
    fn semi_invariance_of_j_and_z() {
        for fam in [
            Family::SymNatural(3),
            Family::SymEssential(3),
            Family::Cyclic(4),
            Family::Monomial { r: 2, n: 2 },
        ] {
            let r = ring(fam);
            let j = jacobian_poly(r.basis());
            let z = arrangement_poly(r.group());
            for i in 0..r.group().order() {
                let d = r.group().det(i);
                // g(J) = det(g)^{-1} J and g(z) = det(g) z
                assert_eq!(r.group().apply(i, &j), j.scale(&d.inv()), "{fam}");
                assert_eq!(r.group().apply(i, &z), z.scale(&d), "{fam}");
            }
        }
    }

    #[test]
    fn rewrite_newton_identity() {
        // x1^2 + x2^2 = e1^2 - 2 e2
        let s2 = ring(Family::SymNatural(2));
        let ctx = s2.x_ctx();
        let p = Poly::var(ctx, 0).pow(2).add(&Poly::var(ctx, 1).pow(2));
        let q = s2.rewrite(&p).unwrap();
        assert_eq!(q.to_string(), "u1^2 - 2*u2");
        // and f_1 itself rewrites to u1
        let f1 = s2.basis().polys[0].clone();
        assert_eq!(s2.rewrite(&f1).unwrap().to_string(), "u1");
        // non-invariant input must fail
        assert!(s2.rewrite(&Poly::var(ctx, 0)).is_err());
    }

    #[test]
    fn discriminants_of_small_families() {
        let c3 = ring(Family::Cyclic(3));
        let d = c3.discriminant().unwrap();
        assert_eq!(d.delta.to_string(), "3*u1");
        assert_eq!(d.unit, Scalar::from_int(3));

        let s2 = ring(Family::SymNatural(2));
        let d = s2.discriminant().unwrap();
        // z*J = (x1-x2)^2 = u1^2 - 4 u2
        assert_eq!(d.delta.to_string(), "u1^2 - 4*u2");
    }

    #[test]
    fn rewrite_round_trip_on_zj() {
        for fam in [
            Family::SymNatural(3),
            Family::SymEssential(4),
            Family::Monomial { r: 2, n: 2 },
            Family::Monomial { r: 3, n: 2 },
            Family::Cyclic(6),
        ] {
            let r = ring(fam);
            let d = r.discriminant().unwrap();
            let back = r.expand(&d.delta);
            assert_eq!(back, d.arrangement.mul(&d.jacobian), "{fam}");
            let expected_deg = (r.group().m() + r.group().m1()) as i64;
            assert_eq!(d.delta.weighted_degree(), Some(expected_deg), "{fam}");
        }
    }

    #[test]
    fn true_reflection_identity_j_equals_z() {
        // for families generated by order-2 reflections J = unit * z and
        // delta = unit * rewrite(J^2)
        for fam in [Family::SymNatural(3), Family::SymEssential(4), Family::Monomial { r: 2, n: 2 }] {
            let r = ring(fam);
            assert!(r.group().is_true_reflection());
            let j = jacobian_poly(r.basis());
            let z = arrangement_poly(r.group());
            let u = j.exact_div(&z).unwrap();
            assert!(u.is_constant(), "{fam}");
            let d = r.discriminant().unwrap();
            let j2 = r.rewrite(&j.mul(&j)).unwrap();
            // j^2 = unit * delta
            let q = j2.exact_div(&d.delta).unwrap();
            assert!(q.is_constant(), "{fam}");
        }
    }

    #[test]
    fn coinvariant_bases() {
        let c4 = ring(Family::Cyclic(4));
        let b = c4.coinvariant_basis();
        assert_eq!(b.len(), 4);
        assert_eq!(b.degrees, vec![0, 1, 2, 3]);

        let s2 = ring(Family::SymNatural(2));
        let b = s2.coinvariant_basis();
        assert_eq!(b.len(), 2);
        // degree 1 basis element is a single variable
        assert_eq!(b.degrees, vec![0, 1]);

        let e4 = ring(Family::SymEssential(4));
        let b = e4.coinvariant_basis();
        assert_eq!(b.len(), 24);
        // generating function (1+t)(1+t+t^2)(1+t+t^2+t^3) = 1,3,5,6,5,3,1
        assert_eq!(b.degree_generating_function(), vec![1, 3, 5, 6, 5, 3, 1]);
    }

    #[test]
    fn free_coords_round_trip() {
        let s2 = ring(Family::SymNatural(2));
        let ctx = s2.x_ctx();
        // x1^2 = u1 * x1 - u2 * 1
        let coords = s2.free_coords(&Poly::var(ctx, 0).pow(2)).unwrap();
        assert_eq!(coords[0].to_string(), "-u2");
        assert_eq!(coords[1].to_string(), "u1");

        // basis elements have unit coordinates
        let coinv = s2.coinvariant_basis().clone();
        for c in 0..coinv.len() {
            let bc = coinv.monomial_poly(ctx, c);
            let coords = s2.free_coords(&bc).unwrap();
            for (i, r) in coords.iter().enumerate() {
                if i == c {
                    assert_eq!(r, &Poly::one(s2.u_ctx()));
                } else {
                    assert!(r.is_zero());
                }
            }
        }

        // cyclic: x^d has coordinate u1 on the basis element 1
        let c3 = ring(Family::Cyclic(3));
        let x = Poly::var(c3.x_ctx(), 0);
        let coords = c3.free_coords(&x.pow(3)).unwrap();
        assert_eq!(coords[0].to_string(), "u1");
        assert!(coords[1].is_zero() && coords[2].is_zero());
    }

    #[test]
    fn free_coords_random_reconstruction() {
        let e3 = ring(Family::SymEssential(3));
        let ctx = e3.x_ctx();
        let mut state = 0x1234_5678_9abc_def0u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for deg in 0..=6i64 {
            for _ in 0..8 {
                let mut p = Poly::zero(ctx);
                for e in monomials_of_weighted_degree(ctx, deg) {
                    let c = (next() % 7) as i64 - 3;
                    p = p.add(&Poly::monomial_scaled(ctx, e, Scalar::from_int(c)));
                }
                let coords = e3.free_coords(&p).unwrap();
                assert_eq!(e3.reconstruct(&coords), p, "degree {deg}");
            }
        }
    }

    #[test]
    fn quotient_coords_match_free_coords_constant_part() {
        let e3 = ring(Family::SymEssential(3));
        let ctx = e3.x_ctx();
        let p = Poly::var(ctx, 0).pow(2).sub(&Poly::var(ctx, 1).pow(2));
        let qc = e3.quotient_coords(&p).unwrap();
        let fc = e3.free_coords(&p).unwrap();
        for (i, r) in fc.iter().enumerate() {
            assert_eq!(qc[i], r.constant_term());
        }
    }

    #[test]
    fn det_twist_of_arrangement() {
        // z is the det-relative invariant: twisted Reynolds reproduces it
        let g = ReflectionGroup::build(Family::Monomial { r: 2, n: 2 }).unwrap();
        let det = det_character(&g);
        let z = arrangement_poly(&g);
        assert_eq!(twisted_reynolds(&g, &det, &z), z);
    }
}
