//! Matrix factorizations of the discriminant: multiplication matrices on the
//! coinvariant free-module basis, their isotypical blocks, difference-quotient
//! matrices, the group matrix, and the logarithmic (exterior-power)
//! factorizations of the monomial family.

use crate::chars::CharacterTable;
use crate::error::{Error, Result};
use crate::group::Family;
use crate::invariant::InvariantRing;
use crate::matrix::{PolyMatrix, ScalarMatrix};
use crate::poly::{CtxRef, Poly, VarCtx};
use crate::scalar::Scalar;

/// A pair of square matrices with U V = V U = f I.
#[derive(Clone, Debug)]
pub struct MatrixFactorization {
    pub u: PolyMatrix,
    pub v: PolyMatrix,
    pub f: Poly,
}

impl MatrixFactorization {
    pub fn new(u: PolyMatrix, v: PolyMatrix, f: Poly) -> Self {
        MatrixFactorization { u, v, f }
    }

    pub fn size(&self) -> usize {
        self.u.rows()
    }

    /// Exact check of U V = V U = f I.
    pub fn verify(&self) -> Result<bool> {
        if self.u.rows() != self.u.cols()
            || self.v.rows() != self.v.cols()
            || self.u.rows() != self.v.rows()
        {
            return Err(Error::InvalidParameter(
                "matrix factorization needs square matrices of equal size".into(),
            ));
        }
        let ctx = self.u.ctx();
        let target = PolyMatrix::scalar(&ctx, self.size(), &self.f);
        Ok(self.u.mul(&self.v) == target && self.v.mul(&self.u) == target)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let grid = |m: &PolyMatrix| -> Vec<Vec<String>> {
            (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect())
                .collect()
        };
        serde_json::json!({
            "size": self.size(),
            "f": self.f.to_string(),
            "U": grid(&self.u),
            "V": grid(&self.v),
            "verified": self.verify().unwrap_or(false),
        })
    }
}

/// Which relative invariant multiplies the free module.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Multiplier {
    /// The Jacobian J (a det^{-1}-relative invariant).
    Jacobian,
    /// The arrangement polynomial z (a det-relative invariant).
    Arrangement,
}

/// The |G| x |G| matrix of multiplication by J or z on S, in the coinvariant
/// basis, with entries in the u-variables. Multiplication by z and by J
/// compose to the discriminant times the identity.
pub fn mult_matrix(ring: &InvariantRing, which: Multiplier) -> Result<PolyMatrix> {
    let disc = ring.discriminant()?;
    let factor = match which {
        Multiplier::Jacobian => disc.jacobian.clone(),
        Multiplier::Arrangement => disc.arrangement.clone(),
    };
    let coinv = ring.coinvariant_basis().clone();
    let n = coinv.len();
    let u_ctx = ring.u_ctx().clone();
    let mut m = PolyMatrix::zero(&u_ctx, n, n);
    for c in 0..n {
        let bc = coinv.monomial_poly(ring.x_ctx(), c);
        let coords = ring.free_coords(&factor.mul(&bc))?;
        for (r, coord) in coords.into_iter().enumerate() {
            m.set(r, c, coord);
        }
    }
    Ok(m)
}

/// One isotypical block of a multiplication matrix: the submatrix mapping the
/// coordinates of the source label to those of the target label in the
/// symmetry-adapted basis.
#[derive(Clone, Debug)]
pub struct LabeledBlock {
    pub source: usize,
    pub target: usize,
    pub block: PolyMatrix,
}

/// The symmetry-adapted basis: per label, projector images of the coinvariant
/// basis, echelonized degree by degree. The change of basis is a graded
/// matrix over the u-variables whose constant part is invertible, so its
/// inverse is again polynomial.
pub struct AdaptedBasis {
    /// Change of basis: columns are the free-module coordinates of the
    /// selected projector images, grouped by label.
    pub change: PolyMatrix,
    pub change_inv: PolyMatrix,
    /// Half-open coordinate ranges per label, in table label order.
    pub ranges: Vec<(usize, usize)>,
}

/// Matrices of the group action on the coinvariant algebra, one per element.
fn quotient_action(ring: &InvariantRing) -> Result<Vec<ScalarMatrix>> {
    let group = ring.group();
    let coinv = ring.coinvariant_basis().clone();
    let n = coinv.len();
    let mut out = Vec::with_capacity(group.order());
    for g in 0..group.order() {
        let mut m = ScalarMatrix::zero(n, n);
        for c in 0..n {
            let image = group.apply(g, &coinv.monomial_poly(ring.x_ctx(), c));
            let coords = ring.quotient_coords(&image)?;
            for (r, s) in coords.into_iter().enumerate() {
                m.set(r, c, s);
            }
        }
        out.push(m);
    }
    Ok(out)
}

/// Central projectors on the coinvariant algebra, one per irreducible label:
/// P_i = (dim V_i / |G|) sum_g chi_i(g^{-1}) g.
pub fn isotypic_projectors(
    ring: &InvariantRing,
    table: &CharacterTable,
) -> Result<Vec<ScalarMatrix>> {
    let group = ring.group();
    let action = quotient_action(ring)?;
    let n = ring.coinvariant_basis().len();
    let mut out = Vec::new();
    for l in 0..table.labels.len() {
        let mut p = ScalarMatrix::zero(n, n);
        for g in 0..group.order() {
            let cls = group.class_of(g);
            let chi_inv = &table.values[l][table.classes[cls].inverse_class];
            if chi_inv.is_zero() {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    let v = p.get(i, j).add(&chi_inv.mul(action[g].get(i, j)));
                    p.set(i, j, v);
                }
            }
        }
        let scale = Scalar::ratio(table.dims[l] as i64, group.order() as i64);
        out.push(ScalarMatrix::from_fn(n, n, |i, j| p.get(i, j).mul(&scale)));
    }
    Ok(out)
}

/// Build the symmetry-adapted basis: apply each isotypical projector to the
/// coinvariant basis vectors, keep a maximal set whose images in the
/// coinvariant algebra are independent (a fixed label order and greedy
/// selection make this deterministic), and express the kept vectors in
/// free-module coordinates.
pub fn adapted_basis(ring: &InvariantRing, table: &CharacterTable) -> Result<AdaptedBasis> {
    let group = ring.group();
    let projectors = isotypic_projectors(ring, table)?;
    let coinv = ring.coinvariant_basis().clone();
    let n = coinv.len();
    let u_ctx = ring.u_ctx().clone();
    let mut selected: Vec<(usize, usize)> = Vec::new();
    let mut ranges = Vec::new();
    // incremental echelon over the quotient coordinates for independence
    let mut echelon: Vec<Vec<Scalar>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for (l, p) in projectors.iter().enumerate() {
        let start = selected.len();
        for c in 0..n {
            let mut red: Vec<Scalar> = (0..n).map(|r| p.get(r, c).clone()).collect();
            for (row, &piv) in echelon.iter().zip(&pivots) {
                if !red[piv].is_zero() {
                    let f = red[piv].clone();
                    for (x, r) in red.iter_mut().zip(row.iter()) {
                        *x = x.sub(&f.mul(r));
                    }
                }
            }
            if let Some(piv) = red.iter().position(|s| !s.is_zero()) {
                let inv = red[piv].inv();
                for x in red.iter_mut() {
                    *x = x.mul(&inv);
                }
                echelon.push(red);
                pivots.push(piv);
                selected.push((l, c));
            }
        }
        ranges.push((start, selected.len()));
    }
    if selected.len() != n {
        return Err(Error::Internal(format!(
            "adapted basis has {} vectors, expected {}",
            selected.len(),
            n
        )));
    }
    // free-module coordinates of the honest projector images in S
    let mut change = PolyMatrix::zero(&u_ctx, n, n);
    for (j, &(l, c)) in selected.iter().enumerate() {
        let bc = coinv.monomial_poly(ring.x_ctx(), c);
        let mut img = Poly::zero(ring.x_ctx());
        for g in 0..group.order() {
            let cls = group.class_of(g);
            let chi_inv = &table.values[l][table.classes[cls].inverse_class];
            if chi_inv.is_zero() {
                continue;
            }
            img = img.add(&group.apply(g, &bc).scale(chi_inv));
        }
        img = img.scale(&Scalar::ratio(table.dims[l] as i64, group.order() as i64));
        let coords = ring.free_coords(&img)?;
        for (r, coord) in coords.into_iter().enumerate() {
            change.set(r, j, coord);
        }
    }
    let change_inv = graded_inverse(&change)?;
    Ok(AdaptedBasis {
        change,
        change_inv,
        ranges,
    })
}

/// Inverse of a graded change-of-basis matrix whose constant part is
/// invertible and whose remaining entries strictly raise the weighted
/// degree. Writing M = C (I + K) with K nilpotent along the degree
/// filtration, the inverse is the finite Neumann sum (I - K + K^2 - ...)
/// C^{-1}.
fn graded_inverse(m: &PolyMatrix) -> Result<PolyMatrix> {
    let n = m.rows();
    let ctx = m.ctx();
    let constant = ScalarMatrix::from_fn(n, n, |i, j| m.get(i, j).constant_term());
    let cinv = constant
        .inverse()
        .ok_or_else(|| Error::Internal("constant part of basis change is singular".into()))?
        .to_poly_matrix(&ctx);
    let cpoly = constant.to_poly_matrix(&ctx);
    let k = cinv.mul(&m.sub(&cpoly));
    let mut term = PolyMatrix::identity(&ctx, n);
    let mut series = PolyMatrix::identity(&ctx, n);
    loop {
        term = term.mul(&k).map(|p| p.neg());
        if (0..n).all(|i| (0..n).all(|j| term.get(i, j).is_zero())) {
            break;
        }
        series = series.add(&term);
    }
    let inv = series.mul(&cinv);
    Ok(inv)
}

/// Conjugate a multiplication matrix into the symmetry-adapted basis and
/// extract the isotypical blocks. Multiplication by J sends the component of
/// V_i into the component of V_i tensor det^{-1}; multiplication by z into
/// V_i tensor det. Entries outside the predicted blocks must vanish.
pub fn isotypic_blocks(
    m: &PolyMatrix,
    ring: &InvariantRing,
    table: &CharacterTable,
    which: Multiplier,
) -> Result<Vec<LabeledBlock>> {
    let basis = adapted_basis(ring, table)?;
    let conj = basis.change_inv.mul(&m.mul(&basis.change));
    let mut blocks = Vec::new();
    for source in 0..table.labels.len() {
        let target = match which {
            Multiplier::Jacobian => table.tensor_det_inv(source),
            Multiplier::Arrangement => table.tensor_det(source),
        };
        let (cs, ce) = basis.ranges[source];
        let (rs, re) = basis.ranges[target];
        if ce == cs {
            continue;
        }
        let block = PolyMatrix::from_fn(re - rs, ce - cs, |i, j| {
            conj.get(rs + i, cs + j).clone()
        });
        // everything outside the target rows must vanish
        for r in 0..conj.rows() {
            if r >= rs && r < re {
                continue;
            }
            for c in cs..ce {
                if !conj.get(r, c).is_zero() {
                    return Err(Error::Internal(format!(
                        "unexpected coupling from label {source} into row {r}"
                    )));
                }
            }
        }
        blocks.push(LabeledBlock {
            source,
            target,
            block,
        });
    }
    Ok(blocks)
}

/// The difference-quotient matrix in doubled variables: entry (i,j) is the
/// telescoping divided difference of f_i in the j-th slot, so that
/// sum_j nabla[i][j] (xb_j - xa_j) = f_i(xb) - f_i(xa) and the diagonal
/// specialization xa = xb = x is the Jacobian matrix.
pub struct NablaMatrix {
    pub mat: PolyMatrix,
    pub ctx: CtxRef,
    pub n: usize,
}

pub fn nabla_matrix(ring: &InvariantRing) -> Result<NablaMatrix> {
    let n = ring.group().dim();
    let names: Vec<String> = (1..=n)
        .map(|i| format!("xa{i}"))
        .chain((1..=n).map(|i| format!("xb{i}")))
        .collect();
    let ctx = VarCtx::standard(names);
    let xa: Vec<Poly> = (0..n).map(|i| Poly::var(&ctx, i)).collect();
    let xb: Vec<Poly> = (0..n).map(|i| Poly::var(&ctx, n + i)).collect();
    let fs = &ring.basis().polys;
    let mut mat = PolyMatrix::zero(&ctx, n, n);
    for (i, f) in fs.iter().enumerate() {
        for j in 0..n {
            // f(xb_1..xb_j, xa_{j+1}..xa_n) - f(xb_1..xb_{j-1}, xa_j..xa_n)
            let hi: Vec<Poly> = (0..n)
                .map(|k| if k <= j { xb[k].clone() } else { xa[k].clone() })
                .collect();
            let lo: Vec<Poly> = (0..n)
                .map(|k| if k < j { xb[k].clone() } else { xa[k].clone() })
                .collect();
            let num = f.substitute(&hi).sub(&f.substitute(&lo));
            let den = xb[j].sub(&xa[j]);
            let q = num.exact_div(&den)?;
            mat.set(i, j, q);
        }
    }
    Ok(NablaMatrix { mat, ctx, n })
}

impl NablaMatrix {
    /// Exact check of the defining telescoping identity.
    pub fn verify(&self, ring: &InvariantRing) -> bool {
        let n = self.n;
        let xa: Vec<Poly> = (0..n).map(|i| Poly::var(&self.ctx, i)).collect();
        let xb: Vec<Poly> = (0..n).map(|i| Poly::var(&self.ctx, n + i)).collect();
        for (i, f) in ring.basis().polys.iter().enumerate() {
            let mut acc = Poly::zero(&self.ctx);
            for j in 0..n {
                acc = acc.add(&self.mat.get(i, j).mul(&xb[j].sub(&xa[j])));
            }
            let expect = f.substitute(&xb).sub(&f.substitute(&xa));
            if acc != expect {
                return false;
            }
        }
        true
    }

    /// Substitute xa = x and xb = g(x), returning an n x n matrix over x.
    pub fn specialize(&self, ring: &InvariantRing, elem: usize) -> PolyMatrix {
        let group = ring.group();
        let x_ctx = ring.x_ctx();
        let n = self.n;
        let g = group.element(elem);
        let mut images: Vec<Poly> = (0..n).map(|i| Poly::var(x_ctx, i)).collect();
        for row in 0..n {
            let mut form = Poly::zero(x_ctx);
            for col in 0..n {
                let c = g.get(row, col);
                if !c.is_zero() {
                    form = form.add(&Poly::var(x_ctx, col).scale(c));
                }
            }
            images.push(form);
        }
        self.mat.map(|p| p.substitute(&images))
    }
}

/// det of the difference-quotient matrix at (x, g(x)): the Jacobian J when
/// g is the identity and zero for every other group element.
pub fn nabla_det_at(ring: &InvariantRing, nabla: &NablaMatrix, elem: usize) -> Result<Poly> {
    nabla.specialize(ring, elem).determinant()
}

/// The group matrix: entry (g, c) is the action of g on the coinvariant
/// basis monomial b_c. Its determinant is a unit times J^(|G|/2) for groups
/// of even order.
pub fn group_matrix(ring: &InvariantRing) -> PolyMatrix {
    let group = ring.group();
    let coinv = ring.coinvariant_basis().clone();
    let n = group.order();
    PolyMatrix::from_fn(n, n, |g, c| {
        group.apply(g, &coinv.monomial_poly(ring.x_ctx(), c))
    })
}

/// The logarithmic factorization data of the monomial family G(r,1,n):
/// the matrix mu = (r (i+j-1) p_(i+j-1)) in the u-variables, its determinant
/// unit against the discriminant, and for each k the exterior-power pair
/// (compound, adjugate-compound/unit) which is a matrix factorization of the
/// discriminant.
pub struct LogFactorization {
    pub mu: PolyMatrix,
    pub det_unit: Scalar,
    pub pairs: Vec<MatrixFactorization>,
}

pub fn monomial_log_mf(ring: &InvariantRing) -> Result<LogFactorization> {
    let Family::Monomial { r, n } = ring.group().family else {
        return Err(Error::Unsupported(
            "logarithmic factorization is defined for the monomial family".into(),
        ));
    };
    let n = n as usize;
    let x_ctx = ring.x_ctx();
    let u_ctx = ring.u_ctx().clone();
    // p_k in u-variables: the basic invariant u_k for k <= n, rewritten
    // through the invariant ring for k > n
    let power_sum_u = |k: u32| -> Result<Poly> {
        if (k as usize) <= n {
            Ok(Poly::var(&u_ctx, k as usize - 1))
        } else {
            let mut q = Poly::zero(x_ctx);
            for j in 0..n {
                q = q.add(&Poly::var(x_ctx, j).pow(r * k));
            }
            ring.rewrite(&q.scale(&Scalar::ratio(1, (k * r) as i64)))
        }
    };
    let mut mu = PolyMatrix::zero(&u_ctx, n, n);
    for i in 1..=n {
        for j in 1..=n {
            let k = (i + j - 1) as u32;
            let entry = power_sum_u(k)?.scale(&Scalar::from_int((r as usize * (i + j - 1)) as i64));
            mu.set(i - 1, j - 1, entry);
        }
    }
    let det = mu.determinant()?;
    let disc = ring.discriminant()?;
    let unit_poly = det.exact_div(&disc.delta)?;
    if !unit_poly.is_constant() {
        return Err(Error::Internal(
            "det(mu) is not a unit multiple of the discriminant".into(),
        ));
    }
    let det_unit = unit_poly.constant_term();
    let unit_inv = Poly::constant(&u_ctx, det_unit.inv());
    let mut pairs = Vec::new();
    for k in 1..=n {
        let u = mu.compound(k)?;
        let v = mu.compound_adjugate(k)?.scale(&unit_inv);
        pairs.push(MatrixFactorization::new(u, v, disc.delta.clone()));
    }
    Ok(LogFactorization {
        mu,
        det_unit,
        pairs,
    })
}

/// A matrix factorization packaged as a representation of the two-vertex
/// quiver with relations u v = f e_+ and v u = f e_-.
#[derive(Clone, Debug)]
pub struct QuiverRepB {
    pub rank_plus: usize,
    pub rank_minus: usize,
    pub map_v: PolyMatrix,
    pub map_u: PolyMatrix,
    pub f: Poly,
}

pub fn as_quiver_rep(mf: &MatrixFactorization) -> Result<QuiverRepB> {
    if !mf.verify()? {
        return Err(Error::Precondition(
            "only verified matrix factorizations define quiver representations".into(),
        ));
    }
    Ok(QuiverRepB {
        rank_plus: mf.size(),
        rank_minus: mf.size(),
        map_v: mf.u.clone(),
        map_u: mf.v.clone(),
        f: mf.f.clone(),
    })
}

impl QuiverRepB {
    /// Re-check the two quiver relations.
    pub fn verify(&self) -> bool {
        let ctx = self.map_u.ctx();
        let plus = PolyMatrix::scalar(&ctx, self.rank_plus, &self.f);
        let minus = PolyMatrix::scalar(&ctx, self.rank_minus, &self.f);
        self.map_v.mul(&self.map_u) == minus && self.map_u.mul(&self.map_v) == plus
    }
}
