//! The supported reflection-group families as explicit matrix groups:
//! cyclic groups, symmetric groups in their natural and essential
//! realizations, and the full monomial groups G(r,1,n).
//!
//! Every group is built as a closed list of exact matrices. Reflections are
//! detected by eigenstructure (fixed hyperplane of codimension one), mirrors
//! carry their linear forms and the orders of their pointwise stabilizers,
//! and degrees come from the family formulas.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::matrix::ScalarMatrix;
use crate::poly::{CtxRef, Poly, VarCtx};
use crate::scalar::Scalar;

/// The supported group families.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    /// mu_d acting on K^1 by a primitive d-th root of unity.
    Cyclic(u32),
    /// S_n permuting the coordinates of K^n.
    SymNatural(u32),
    /// S_n acting on the sum-zero hyperplane, charted on K^(n-1) by dropping
    /// the last coordinate.
    SymEssential(u32),
    /// G(r,1,n): monomial matrices with r-th roots of unity entries.
    Monomial { r: u32, n: u32 },
}

impl Family {
    /// Parse a CLI descriptor: "cyclic:d", "sym:n", "sym-essential:n",
    /// "monomial:r,n".
    pub fn parse(s: &str) -> Result<Family> {
        let bad = || Error::InvalidParameter(format!("cannot parse group descriptor '{s}'"));
        let (head, tail) = s.split_once(':').ok_or_else(bad)?;
        let fam = match head {
            "cyclic" => Family::Cyclic(tail.parse().map_err(|_| bad())?),
            "sym" => Family::SymNatural(tail.parse().map_err(|_| bad())?),
            "sym-essential" => Family::SymEssential(tail.parse().map_err(|_| bad())?),
            "monomial" => {
                let (r, n) = tail.split_once(',').ok_or_else(bad)?;
                Family::Monomial {
                    r: r.trim().parse().map_err(|_| bad())?,
                    n: n.trim().parse().map_err(|_| bad())?,
                }
            }
            _ => return Err(bad()),
        };
        fam.validate()?;
        Ok(fam)
    }

    fn validate(&self) -> Result<()> {
        match *self {
            Family::Cyclic(d) if d < 2 => Err(Error::InvalidParameter(
                "cyclic:d needs d >= 2".into(),
            )),
            Family::SymNatural(n) | Family::SymEssential(n) if n < 2 => Err(
                Error::InvalidParameter("symmetric families need n >= 2".into()),
            ),
            Family::Monomial { r, n } if r < 2 || n < 1 => Err(Error::InvalidParameter(
                "monomial:r,n needs r >= 2 and n >= 1".into(),
            )),
            _ => Ok(()),
        }
    }

    /// Ambient dimension of the matrix realization.
    pub fn dim(&self) -> usize {
        match *self {
            Family::Cyclic(_) => 1,
            Family::SymNatural(n) => n as usize,
            Family::SymEssential(n) => n as usize - 1,
            Family::Monomial { n, .. } => n as usize,
        }
    }

    /// Degrees of the basic invariants.
    pub fn degrees(&self) -> Vec<u32> {
        match *self {
            Family::Cyclic(d) => vec![d],
            Family::SymNatural(n) => (1..=n).collect(),
            Family::SymEssential(n) => (2..=n).collect(),
            Family::Monomial { r, n } => (1..=n).map(|i| i * r).collect(),
        }
    }

    /// Cyclotomic order of the coefficient field needed for the matrices.
    pub fn cyclotomic_order(&self) -> u32 {
        match *self {
            Family::Cyclic(d) => d,
            Family::Monomial { r, .. } => r,
            _ => 1,
        }
    }

    /// Family default for irreducibility of the discriminant over the
    /// invariant ring.
    pub fn delta_irreducible(&self) -> bool {
        match *self {
            Family::Cyclic(_) => true,
            Family::SymNatural(_) | Family::SymEssential(_) => true,
            Family::Monomial { .. } => false,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Cyclic(d) => write!(f, "cyclic:{d}"),
            Family::SymNatural(n) => write!(f, "sym:{n}"),
            Family::SymEssential(n) => write!(f, "sym-essential:{n}"),
            Family::Monomial { r, n } => write!(f, "monomial:{r},{n}"),
        }
    }
}

/// A mirror hyperplane: its normalized linear form and the order of the
/// cyclic subgroup fixing it pointwise.
#[derive(Clone, Debug)]
pub struct Mirror {
    /// Coefficients of the defining linear form, first nonzero entry = 1.
    pub form: Vec<Scalar>,
    /// rho_H: order of the pointwise stabilizer of the mirror.
    pub order: u32,
    /// Indices of the pseudo-reflections fixing this mirror.
    pub reflections: Vec<usize>,
}

/// One conjugacy class.
#[derive(Clone, Debug)]
pub struct ConjClass {
    pub rep: usize,
    pub members: Vec<usize>,
    /// Index of the class containing the inverses of this class.
    pub inverse_class: usize,
}

/// A reflection group, fully enumerated.
pub struct ReflectionGroup {
    pub family: Family,
    dim: usize,
    elements: Vec<ScalarMatrix>,
    index: HashMap<ScalarMatrix, usize>,
    inverse: Vec<usize>,
    identity: usize,
    /// Underlying permutations for the symmetric and monomial families.
    perms: Option<Vec<Vec<usize>>>,
    pub reflections: Vec<usize>,
    pub mirrors: Vec<Mirror>,
    pub degrees: Vec<u32>,
    classes: OnceLock<Vec<ConjClass>>,
    x_ctx: CtxRef,
}

impl ReflectionGroup {
    pub fn build(family: Family) -> Result<ReflectionGroup> {
        family.validate()?;
        let dim = family.dim();
        let (elements, perms) = enumerate_elements(&family);
        let x_ctx = VarCtx::standard_n(dim);

        let mut index = HashMap::new();
        for (i, g) in elements.iter().enumerate() {
            if index.insert(g.clone(), i).is_some() {
                return Err(Error::Internal("duplicate group element".into()));
            }
        }
        let identity = *index
            .get(&ScalarMatrix::identity(dim))
            .ok_or_else(|| Error::Internal("identity not in element list".into()))?;

        // closure under multiplication and inverses
        let mut inverse = vec![usize::MAX; elements.len()];
        for (i, g) in elements.iter().enumerate() {
            for h in &elements {
                let p = g.mul(h);
                if !index.contains_key(&p) {
                    return Err(Error::Internal("element list not closed under product".into()));
                }
            }
            let gi = g
                .inverse()
                .ok_or_else(|| Error::Internal("non-invertible element".into()))?;
            inverse[i] = *index
                .get(&gi)
                .ok_or_else(|| Error::Internal("element list not closed under inverse".into()))?;
        }

        // reflections and mirrors by eigenstructure
        let mut reflections = Vec::new();
        let mut mirror_map: Vec<(Vec<Scalar>, Vec<usize>)> = Vec::new();
        for (i, g) in elements.iter().enumerate() {
            if i == identity {
                continue;
            }
            let gm1 = g.sub(&ScalarMatrix::identity(dim));
            if gm1.rank() == 1 {
                reflections.push(i);
                let form = mirror_form(&gm1);
                match mirror_map.iter_mut().find(|(f, _)| *f == form) {
                    Some((_, refs)) => refs.push(i),
                    None => mirror_map.push((form, vec![i])),
                }
            }
        }
        let mirrors: Vec<Mirror> = mirror_map
            .into_iter()
            .map(|(form, refs)| Mirror {
                form,
                order: refs.len() as u32 + 1,
                reflections: refs,
            })
            .collect();

        let degrees = family.degrees();
        let order_by_degrees: u64 = degrees.iter().map(|&d| d as u64).product();
        if order_by_degrees != elements.len() as u64 {
            return Err(Error::Internal(format!(
                "product of degrees {} does not match group order {}",
                order_by_degrees,
                elements.len()
            )));
        }
        let m_by_degrees: u64 = degrees.iter().map(|&d| d as u64 - 1).sum();
        if m_by_degrees != reflections.len() as u64 {
            return Err(Error::Internal(format!(
                "degree formula predicts {} pseudo-reflections, found {}",
                m_by_degrees,
                reflections.len()
            )));
        }

        Ok(ReflectionGroup {
            family,
            dim,
            elements,
            index,
            inverse,
            identity,
            perms,
            reflections,
            mirrors,
            degrees,
            classes: OnceLock::new(),
            x_ctx,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of pseudo-reflections.
    pub fn m(&self) -> usize {
        self.reflections.len()
    }

    /// Number of mirrors.
    pub fn m1(&self) -> usize {
        self.mirrors.len()
    }

    /// True when every pseudo-reflection has order two, i.e. every mirror
    /// has pointwise stabilizer of order two.
    pub fn is_true_reflection(&self) -> bool {
        self.mirrors.iter().all(|m| m.order == 2)
    }

    pub fn element(&self, i: usize) -> &ScalarMatrix {
        &self.elements[i]
    }

    pub fn elements(&self) -> impl Iterator<Item = &ScalarMatrix> {
        self.elements.iter()
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn index_of(&self, g: &ScalarMatrix) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Variable context x1..xn with the standard grading.
    pub fn x_ctx(&self) -> &CtxRef {
        &self.x_ctx
    }

    /// Underlying permutation (image list) for families that carry one.
    pub fn perm_of(&self, i: usize) -> Option<&[usize]> {
        self.perms.as_ref().map(|p| p[i].as_slice())
    }

    /// Cycle type of the underlying permutation, parts descending.
    pub fn cycle_type(&self, i: usize) -> Option<Vec<u32>> {
        self.perm_of(i).map(|p| {
            let n = p.len();
            let mut seen = vec![false; n];
            let mut cycles = Vec::new();
            for start in 0..n {
                if seen[start] {
                    continue;
                }
                let mut len = 0u32;
                let mut j = start;
                while !seen[j] {
                    seen[j] = true;
                    j = p[j];
                    len += 1;
                }
                cycles.push(len);
            }
            cycles.sort_unstable_by(|a, b| b.cmp(a));
            cycles
        })
    }

    /// Substitution action on polynomials: (g . f)(x) = f(g x).
    pub fn apply(&self, i: usize, p: &Poly) -> Poly {
        let g = &self.elements[i];
        let images: Vec<Poly> = (0..self.dim)
            .map(|row| {
                let mut form = Poly::zero(&self.x_ctx);
                for col in 0..self.dim {
                    let c = g.get(row, col);
                    if !c.is_zero() {
                        form = form.add(&Poly::var(&self.x_ctx, col).scale(c));
                    }
                }
                form
            })
            .collect();
        p.substitute(&images)
    }

    /// det(g) as a scalar.
    pub fn det(&self, i: usize) -> Scalar {
        det_scalar(&self.elements[i])
    }

    /// Conjugacy classes, computed once by direct conjugation orbits.
    pub fn conjugacy_classes(&self) -> &[ConjClass] {
        self.classes.get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![usize::MAX; n];
            let mut classes: Vec<ConjClass> = Vec::new();
            for i in 0..n {
                if class_of[i] != usize::MAX {
                    continue;
                }
                let cid = classes.len();
                let mut members = Vec::new();
                for (g_idx, g) in self.elements.iter().enumerate() {
                    let conj = g
                        .mul(&self.elements[i])
                        .mul(&self.elements[self.inverse[g_idx]]);
                    let j = *self.index.get(&conj).expect("closure");
                    if class_of[j] == usize::MAX {
                        class_of[j] = cid;
                        members.push(j);
                    }
                }
                members.sort_unstable();
                classes.push(ConjClass {
                    rep: members[0],
                    members,
                    inverse_class: usize::MAX,
                });
            }
            for cid in 0..classes.len() {
                let inv_rep = self.inverse[classes[cid].rep];
                classes[cid].inverse_class = class_of[inv_rep];
            }
            classes
        })
    }

    pub fn class_of(&self, elem: usize) -> usize {
        self.conjugacy_classes()
            .iter()
            .position(|c| c.members.binary_search(&elem).is_ok())
            .expect("element in some class")
    }

    /// Orbits of the mirrors under the group action, each orbit listed by
    /// mirror index. Conjugating a reflection moves its mirror within the
    /// orbit.
    pub fn mirror_orbits(&self) -> Vec<Vec<usize>> {
        let mirror_of_reflection: HashMap<usize, usize> = self
            .mirrors
            .iter()
            .enumerate()
            .flat_map(|(mi, m)| m.reflections.iter().map(move |&r| (r, mi)))
            .collect();
        let mut orbit_of = vec![usize::MAX; self.mirrors.len()];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for mi in 0..self.mirrors.len() {
            if orbit_of[mi] != usize::MAX {
                continue;
            }
            let oid = orbits.len();
            let mut members = Vec::new();
            let s = self.mirrors[mi].reflections[0];
            for (g_idx, g) in self.elements.iter().enumerate() {
                let conj = g.mul(&self.elements[s]).mul(&self.elements[self.inverse[g_idx]]);
                let cj = *self.index.get(&conj).expect("closure");
                let mj = mirror_of_reflection[&cj];
                if orbit_of[mj] == usize::MAX {
                    orbit_of[mj] = oid;
                    members.push(mj);
                }
            }
            members.sort_unstable();
            orbits.push(members);
        }
        orbits
    }

    /// The mirror form as a linear polynomial in x.
    pub fn mirror_form_poly(&self, mirror: usize) -> Poly {
        let mut p = Poly::zero(&self.x_ctx);
        for (i, c) in self.mirrors[mirror].form.iter().enumerate() {
            if !c.is_zero() {
                p = p.add(&Poly::var(&self.x_ctx, i).scale(c));
            }
        }
        p
    }
}

fn det_scalar(m: &ScalarMatrix) -> Scalar {
    // small exact determinant by cofactor expansion over the first row
    let n = m.rows();
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let cols: Vec<usize> = (0..n).collect();
    fn rec(m: &ScalarMatrix, rows: &[usize], cols: &[usize]) -> Scalar {
        if rows.len() == 1 {
            return m.get(rows[0], cols[0]).clone();
        }
        let mut acc = Scalar::zero();
        for (k, &c) in cols.iter().enumerate() {
            let e = m.get(rows[0], c);
            if e.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = rec(m, &rows[1..], &sub_cols);
            let term = e.mul(&minor);
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }
    rec(m, &cols, &cols)
}

/// The defining form of the fixed hyperplane: a generator of the row space of
/// g - 1, normalized so its first nonzero coefficient is 1.
fn mirror_form(gm1: &ScalarMatrix) -> Vec<Scalar> {
    let n = gm1.cols();
    for i in 0..gm1.rows() {
        let row: Vec<Scalar> = (0..n).map(|j| gm1.get(i, j).clone()).collect();
        if let Some(first) = row.iter().position(|c| !c.is_zero()) {
            let d = row[first].inv();
            return row.iter().map(|c| c.mul(&d)).collect();
        }
    }
    unreachable!("rank-one matrix has a nonzero row")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

fn enumerate_elements(family: &Family) -> (Vec<ScalarMatrix>, Option<Vec<Vec<usize>>>) {
    match *family {
        Family::Cyclic(d) => {
            let els = (0..d)
                .map(|k| {
                    ScalarMatrix::from_fn(1, 1, |_, _| Scalar::root_of_unity(d, k as i64))
                })
                .collect();
            (els, None)
        }
        Family::SymNatural(n) => {
            let n = n as usize;
            let perms = permutations(n);
            let els = perms
                .iter()
                .map(|p| {
                    // column j maps to row p[j]
                    ScalarMatrix::from_fn(n, n, |i, j| {
                        if p[j] == i {
                            Scalar::one()
                        } else {
                            Scalar::zero()
                        }
                    })
                })
                .collect();
            (els, Some(perms))
        }
        Family::SymEssential(n) => {
            let n = n as usize;
            let perms = permutations(n);
            let els = perms
                .iter()
                .map(|p| {
                    let mut inv = vec![0usize; n];
                    for (k, &v) in p.iter().enumerate() {
                        inv[v] = k;
                    }
                    ScalarMatrix::from_fn(n - 1, n - 1, |i, j| {
                        if inv[i] < n - 1 {
                            if inv[i] == j {
                                Scalar::one()
                            } else {
                                Scalar::zero()
                            }
                        } else {
                            Scalar::from_int(-1)
                        }
                    })
                })
                .collect();
            (els, Some(perms))
        }
        Family::Monomial { r, n } => {
            let n = n as usize;
            let perms = permutations(n);
            let mut els = Vec::new();
            let mut tags = Vec::new();
            let total = (r as u64).pow(n as u32);
            for p in &perms {
                for code in 0..total {
                    let mut a = Vec::with_capacity(n);
                    let mut c = code;
                    for _ in 0..n {
                        a.push((c % r as u64) as i64);
                        c /= r as u64;
                    }
                    els.push(ScalarMatrix::from_fn(n, n, |i, j| {
                        if p[j] == i {
                            Scalar::root_of_unity(r, a[j])
                        } else {
                            Scalar::zero()
                        }
                    }));
                    tags.push(p.clone());
                }
            }
            (els, Some(tags))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_3() {
        let g = ReflectionGroup::build(Family::Cyclic(3)).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.m(), 2);
        assert_eq!(g.m1(), 1);
        assert_eq!(g.degrees, vec![3]);
        assert_eq!(g.conjugacy_classes().len(), 3);
        for c in g.conjugacy_classes() {
            assert_eq!(c.members.len(), 1);
        }
    }

    #[test]
    fn sym_essential_4_matches_swallowtail_data() {
        let g = ReflectionGroup::build(Family::SymEssential(4)).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.degrees, vec![2, 3, 4]);
        assert_eq!(g.m(), 6);
        assert_eq!(g.m1(), 6);
        // mirrors are x-y, x-z, y-z, 2x+y+z, x+2y+z, x+y+2z up to scalar
        let forms: Vec<String> = (0..g.m1()).map(|i| g.mirror_form_poly(i).to_string()).collect();
        let expect = [
            "x1 - x2",
            "x1 - x3",
            "x2 - x3",
            "x1 + 1/2*x2 + 1/2*x3",
            "x1 + 2*x2 + x3",
            "x1 + x2 + 2*x3",
        ];
        for e in expect {
            assert!(forms.contains(&e.to_string()), "missing mirror {e}; got {forms:?}");
        }
    }

    #[test]
    fn monomial_2_2_counts() {
        let g = ReflectionGroup::build(Family::Monomial { r: 2, n: 2 }).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.degrees, vec![2, 4]);
        assert_eq!(g.m(), 4);
        assert_eq!(g.m1(), 4);
        // two mirror orbits of size two each
        let orbits = g.mirror_orbits();
        assert_eq!(orbits.len(), 2);
        assert!(orbits.iter().all(|o| o.len() == 2));
        for m in &g.mirrors {
            assert_eq!(m.order, 2);
        }
    }

    #[test]
    fn monomial_3_2_mirror_orders() {
        let g = ReflectionGroup::build(Family::Monomial { r: 3, n: 2 }).unwrap();
        assert_eq!(g.order(), 18);
        assert_eq!(g.m(), 7); // degrees 3, 6 give m = 2 + 5
        assert!(!g.is_true_reflection());
        // mirrors: x1, x2 with rho = 3; three mirrors x1 - zeta^k x2 with rho = 2
        assert_eq!(g.m1(), 5);
        let mut orders: Vec<u32> = g.mirrors.iter().map(|m| m.order).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![2, 2, 2, 3, 3]);
    }

    #[test]
    fn sym_natural_class_sizes() {
        let g3 = ReflectionGroup::build(Family::SymNatural(3)).unwrap();
        let mut sizes: Vec<usize> = g3.conjugacy_classes().iter().map(|c| c.members.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);

        let g4 = ReflectionGroup::build(Family::SymNatural(4)).unwrap();
        let mut sizes: Vec<usize> = g4.conjugacy_classes().iter().map(|c| c.members.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        assert_eq!(
            g4.conjugacy_classes().iter().map(|c| c.members.len()).sum::<usize>(),
            24
        );
    }

    #[test]
    fn reflection_determinants_and_mirror_eigenform() {
        for fam in [
            Family::SymNatural(3),
            Family::SymEssential(3),
            Family::Monomial { r: 2, n: 2 },
            Family::Cyclic(4),
        ] {
            let g = ReflectionGroup::build(fam).unwrap();
            for &ri in &g.reflections {
                let d = g.det(ri);
                assert!(!d.is_one(), "reflection determinant must differ from 1");
                // the mirror form is an eigenform of the substitution action
                let mirror = g
                    .mirrors
                    .iter()
                    .find(|m| m.reflections.contains(&ri))
                    .expect("every reflection has a mirror");
                let form = {
                    let mut p = Poly::zero(g.x_ctx());
                    for (i, c) in mirror.form.iter().enumerate() {
                        p = p.add(&Poly::var(g.x_ctx(), i).scale(c));
                    }
                    p
                };
                let image = g.apply(ri, &form);
                // image = lambda * form for the non-unit eigenvalue lambda
                let lead = form.leading_term().unwrap().0.clone();
                let lambda = image.coeff(&lead);
                assert!(!lambda.is_one());
                assert_eq!(image, form.scale(&lambda));
            }
        }
    }

    #[test]
    fn descriptor_parsing() {
        assert_eq!(Family::parse("cyclic:5").unwrap(), Family::Cyclic(5));
        assert_eq!(Family::parse("sym:4").unwrap(), Family::SymNatural(4));
        assert_eq!(
            Family::parse("sym-essential:4").unwrap(),
            Family::SymEssential(4)
        );
        assert_eq!(
            Family::parse("monomial:2,3").unwrap(),
            Family::Monomial { r: 2, n: 3 }
        );
        assert!(Family::parse("cyclic:1").is_err());
        assert!(Family::parse("weyl:4").is_err());
        assert!(Family::parse("sym").is_err());
    }
}
