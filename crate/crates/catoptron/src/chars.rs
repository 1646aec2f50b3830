//! Character tables for the symmetric and cyclic families, the
//! Murnaghan–Nakayama recursion, linear characters of all supported
//! families, and the character-based McKay quiver.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::{Family, ReflectionGroup};
use crate::mckay::{partitions_of, Partition, Quiver};
use crate::scalar::Scalar;

/// Label of an irreducible representation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IrrLabel {
    /// V_lambda of a symmetric group.
    Partition(Partition),
    /// The character zeta^k of a cyclic group.
    Power(u32),
}

impl std::fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IrrLabel::Partition(p) => write!(f, "{p}"),
            IrrLabel::Power(k) => write!(f, "zeta^{k}"),
        }
    }
}

/// One conjugacy class as seen by a character table.
#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub name: String,
    pub size: u64,
    pub cycle_type: Option<Partition>,
    pub inverse_class: usize,
}

/// An irreducible character table with exact values.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub labels: Vec<IrrLabel>,
    pub dims: Vec<u64>,
    pub classes: Vec<ClassInfo>,
    /// values[label][class]
    pub values: Vec<Vec<Scalar>>,
}

impl CharacterTable {
    pub fn group_order(&self) -> u64 {
        self.classes.iter().map(|c| c.size).sum()
    }

    pub fn label_index(&self, label: &IrrLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Abstract table of S_n: classes are cycle types in descending
    /// lexicographic order, sizes n!/z_mu, values by Murnaghan–Nakayama.
    pub fn symmetric(n: u32) -> CharacterTable {
        let parts = partitions_of(n);
        let classes: Vec<ClassInfo> = parts
            .iter()
            .enumerate()
            .map(|(i, mu)| ClassInfo {
                name: mu.to_string(),
                size: class_size_sn(n, mu),
                cycle_type: Some(mu.clone()),
                // every permutation is conjugate to its inverse
                inverse_class: i,
            })
            .collect();
        let values: Vec<Vec<Scalar>> = parts
            .iter()
            .map(|lam| {
                parts
                    .iter()
                    .map(|mu| Scalar::from_int(character_value_sn(lam, mu).unwrap()))
                    .collect()
            })
            .collect();
        let dims = parts.iter().map(|l| l.dim()).collect();
        CharacterTable {
            labels: parts.into_iter().map(IrrLabel::Partition).collect(),
            dims,
            classes,
            values,
        }
    }

    /// Table of the cyclic group of order d: classes are the powers of the
    /// generator, chi_k(g^j) = zeta_d^{kj}.
    pub fn cyclic(d: u32) -> CharacterTable {
        let classes: Vec<ClassInfo> = (0..d)
            .map(|j| ClassInfo {
                name: format!("g^{j}"),
                size: 1,
                cycle_type: None,
                inverse_class: ((d - j) % d) as usize,
            })
            .collect();
        let values = (0..d)
            .map(|k| {
                (0..d)
                    .map(|j| Scalar::root_of_unity(d, (k as i64) * (j as i64)))
                    .collect()
            })
            .collect();
        CharacterTable {
            labels: (0..d).map(IrrLabel::Power).collect(),
            dims: vec![1; d as usize],
            classes,
            values,
        }
    }

    /// Table aligned with the conjugacy classes of a built group. Full
    /// irreducible data is available for the symmetric and cyclic families
    /// only.
    pub fn for_group(group: &ReflectionGroup) -> Result<CharacterTable> {
        match group.family {
            Family::SymNatural(n) | Family::SymEssential(n) => {
                let parts = partitions_of(n);
                let classes: Vec<ClassInfo> = group
                    .conjugacy_classes()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        let ct = Partition::new(group.cycle_type(c.rep).expect("symmetric family"));
                        ClassInfo {
                            name: ct.to_string(),
                            size: c.members.len() as u64,
                            cycle_type: Some(ct),
                            inverse_class: i,
                        }
                    })
                    .collect();
                let values: Vec<Vec<Scalar>> = parts
                    .iter()
                    .map(|lam| {
                        classes
                            .iter()
                            .map(|c| {
                                Scalar::from_int(
                                    character_value_sn(lam, c.cycle_type.as_ref().unwrap())
                                        .unwrap(),
                                )
                            })
                            .collect()
                    })
                    .collect();
                let dims = parts.iter().map(|l| l.dim()).collect();
                Ok(CharacterTable {
                    labels: parts.into_iter().map(IrrLabel::Partition).collect(),
                    dims,
                    classes,
                    values,
                })
            }
            Family::Cyclic(d) => {
                // class of g^j is the singleton {zeta^j}; identify the power
                let classes: Vec<ClassInfo> = group
                    .conjugacy_classes()
                    .iter()
                    .map(|c| {
                        let val = group.element(c.rep).get(0, 0).clone();
                        let j = (0..d)
                            .find(|&k| Scalar::root_of_unity(d, k as i64) == val)
                            .expect("cyclic element is a power of the generator");
                        ClassInfo {
                            name: format!("g^{j}"),
                            size: 1,
                            cycle_type: None,
                            inverse_class: usize::MAX,
                        }
                    })
                    .collect();
                let power_of = |name: &str| -> u32 { name[2..].parse().unwrap() };
                let mut classes = classes;
                for i in 0..classes.len() {
                    let j = power_of(&classes[i].name);
                    let inv = (d - j) % d;
                    classes[i].inverse_class = classes
                        .iter()
                        .position(|c| power_of(&c.name) == inv)
                        .unwrap();
                }
                let values = (0..d)
                    .map(|k| {
                        classes
                            .iter()
                            .map(|c| {
                                let j = power_of(&c.name);
                                Scalar::root_of_unity(d, (k as i64) * (j as i64))
                            })
                            .collect()
                    })
                    .collect();
                Ok(CharacterTable {
                    labels: (0..d).map(IrrLabel::Power).collect(),
                    dims: vec![1; d as usize],
                    classes,
                    values,
                })
            }
            Family::Monomial { .. } => Err(Error::Unsupported(
                "full character tables are provided for the symmetric and cyclic families only"
                    .into(),
            )),
        }
    }

    /// The label of V tensor det, given a label.
    pub fn tensor_det(&self, label: usize) -> usize {
        match &self.labels[label] {
            IrrLabel::Partition(p) => {
                let conj = p.conjugate();
                self.label_index(&IrrLabel::Partition(conj)).unwrap()
            }
            IrrLabel::Power(k) => {
                let d = self.labels.len() as u32;
                self.label_index(&IrrLabel::Power((k + 1) % d)).unwrap()
            }
        }
    }

    /// The label of V tensor det^{-1}.
    pub fn tensor_det_inv(&self, label: usize) -> usize {
        match &self.labels[label] {
            // det = sign is an involution for symmetric groups
            IrrLabel::Partition(_) => self.tensor_det(label),
            IrrLabel::Power(k) => {
                let d = self.labels.len() as u32;
                self.label_index(&IrrLabel::Power((k + d - 1) % d)).unwrap()
            }
        }
    }

    /// Exact inner product of two class functions given by rows i and j:
    /// (1/|G|) sum_cl |cl| chi_i(cl) chi_j(cl^{-1}).
    pub fn inner_product(&self, i: usize, j: usize) -> Scalar {
        let mut acc = Scalar::zero();
        for (c, info) in self.classes.iter().enumerate() {
            let term = self.values[i][c]
                .mul(&self.values[j][info.inverse_class])
                .mul(&Scalar::from_int(info.size as i64));
            acc = acc.add(&term);
        }
        acc.div(&Scalar::from_int(self.group_order() as i64))
    }

    /// Character of the defining (reflection) representation, per class:
    /// the standard character for symmetric tables, zeta for cyclic ones.
    pub fn defining_character(&self) -> Vec<Scalar> {
        match &self.labels[0] {
            IrrLabel::Partition(p) => {
                let n = p.sum();
                let std_label = self
                    .label_index(&IrrLabel::Partition(Partition::new(vec![n - 1, 1])))
                    .expect("standard representation label");
                self.values[std_label].clone()
            }
            IrrLabel::Power(_) => {
                let one = self.label_index(&IrrLabel::Power(1)).unwrap();
                self.values[one].clone()
            }
        }
    }
}

/// n!/z_mu with z_mu = prod k^{m_k} m_k!.
pub fn class_size_sn(n: u32, mu: &Partition) -> u64 {
    assert_eq!(mu.sum(), n);
    let mut z: u128 = 1;
    let mut counts: HashMap<u32, u32> = HashMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_insert(0) += 1;
    }
    for (&k, &mk) in &counts {
        for _ in 0..mk {
            z *= k as u128;
        }
        for i in 1..=mk as u128 {
            z *= i;
        }
    }
    let mut fact: u128 = 1;
    for i in 1..=n as u128 {
        fact *= i;
    }
    (fact / z) as u64
}

/// Character value of the irreducible S_n-representation V_lambda on the
/// class with the given cycle type, by the Murnaghan–Nakayama recursion on
/// beta-numbers.
pub fn character_value_sn(lambda: &Partition, cycle_type: &Partition) -> Result<i64> {
    if lambda.sum() != cycle_type.sum() {
        return Err(Error::InvalidParameter(
            "partition sizes must match".into(),
        ));
    }
    let mut memo = HashMap::new();
    Ok(mn(lambda.parts(), cycle_type.parts(), &mut memo))
}

fn mn(lambda: &[u32], mu: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>) -> i64 {
    if lambda.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let strip = mu[0] as i64;
    let k = lambda.len();
    // beta numbers: lambda_i + (k - 1 - i)
    let betas: Vec<i64> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (k - 1 - i) as i64)
        .collect();
    let mut total = 0i64;
    for (i, &b) in betas.iter().enumerate() {
        let nb = b - strip;
        if nb < 0 || betas.contains(&nb) {
            continue;
        }
        // height = number of betas strictly between nb and b
        let height = betas.iter().filter(|&&x| x > nb && x < b).count();
        let mut new_betas = betas.clone();
        new_betas[i] = nb;
        new_betas.sort_unstable_by(|a, c| c.cmp(a));
        let mut new_lambda: Vec<u32> = new_betas
            .iter()
            .enumerate()
            .map(|(idx, &x)| (x - (k - 1 - idx) as i64) as u32)
            .collect();
        new_lambda.retain(|&p| p > 0);
        let sub = mn(&new_lambda, &mu[1..], memo);
        total += if height % 2 == 0 { sub } else { -sub };
    }
    memo.insert(key, total);
    total
}

/// A degree-one character, tabulated on every group element.
#[derive(Clone, Debug)]
pub struct LinearCharacter {
    pub name: String,
    /// values[i] = chi(g_i), indexed like the group's element list.
    pub values: Vec<Scalar>,
}

impl LinearCharacter {
    pub fn value(&self, elem: usize) -> &Scalar {
        &self.values[elem]
    }
}

/// All degree-one characters of the group: trivial and determinant pair for
/// the symmetric families, all d powers of det for the cyclic family, and
/// the 2r characters diag^k * sign^eps of G(r,1,n).
pub fn linear_characters(group: &ReflectionGroup) -> Vec<LinearCharacter> {
    let n = group.order();
    let trivial = LinearCharacter {
        name: "triv".into(),
        values: vec![Scalar::one(); n],
    };
    let det = LinearCharacter {
        name: "det".into(),
        values: (0..n).map(|i| group.det(i)).collect(),
    };
    match group.family {
        Family::SymNatural(_) | Family::SymEssential(_) => vec![trivial, det],
        Family::Cyclic(d) => (0..d)
            .map(|k| LinearCharacter {
                name: if k == 0 {
                    "triv".into()
                } else if k == 1 {
                    "det".into()
                } else {
                    format!("det^{k}")
                },
                values: (0..n).map(|i| det_power(group, i, k)).collect(),
            })
            .collect(),
        Family::Monomial { r, n: mn } => {
            let mut out = Vec::new();
            let diag: Vec<Scalar> = (0..n).map(|i| diag_product(group, i)).collect();
            let sign: Vec<Scalar> = (0..n)
                .map(|i| {
                    let p = group.perm_of(i).expect("monomial carries a permutation");
                    Scalar::from_int(perm_sign(p))
                })
                .collect();
            let eps_range = if mn >= 2 { 2 } else { 1 };
            for k in 0..r {
                for eps in 0..eps_range {
                    let values: Vec<Scalar> = (0..n)
                        .map(|i| {
                            let mut v = Scalar::one();
                            for _ in 0..k {
                                v = v.mul(&diag[i]);
                            }
                            if eps == 1 {
                                v = v.mul(&sign[i]);
                            }
                            v
                        })
                        .collect();
                    let name = match (k, eps) {
                        (0, 0) => "triv".into(),
                        (0, _) => "sign".into(),
                        (k, 0) => format!("diag^{k}"),
                        (k, _) => format!("diag^{k}*sign"),
                    };
                    out.push(LinearCharacter { name, values });
                }
            }
            out
        }
    }
}

fn det_power(group: &ReflectionGroup, elem: usize, k: u32) -> Scalar {
    let d = group.det(elem);
    let mut v = Scalar::one();
    for _ in 0..k {
        v = v.mul(&d);
    }
    v
}

/// Product of the nonzero entries of a monomial matrix (one per column).
fn diag_product(group: &ReflectionGroup, elem: usize) -> Scalar {
    let g = group.element(elem);
    let mut acc = Scalar::one();
    for j in 0..g.cols() {
        for i in 0..g.rows() {
            if !g.get(i, j).is_zero() {
                acc = acc.mul(g.get(i, j));
                break;
            }
        }
    }
    acc
}

fn perm_sign(p: &[usize]) -> i64 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1i64;
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut j = s;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// The trivial character of a group.
pub fn trivial_character(group: &ReflectionGroup) -> LinearCharacter {
    linear_characters(group)
        .into_iter()
        .find(|c| c.name == "triv")
        .unwrap()
}

/// The determinant character of a group, tabulated per element.
pub fn det_character(group: &ReflectionGroup) -> LinearCharacter {
    LinearCharacter {
        name: "det".into(),
        values: (0..group.order()).map(|i| group.det(i)).collect(),
    }
}

/// The inverse determinant character.
pub fn det_inv_character(group: &ReflectionGroup) -> LinearCharacter {
    LinearCharacter {
        name: "det^-1".into(),
        values: (0..group.order())
            .map(|i| group.det(group.inverse_index(i)))
            .collect(),
    }
}

/// McKay quiver from characters: the arrow count from vertex i to vertex j
/// is the multiplicity of V_j inside V tensor V_i, computed as the exact
/// class sum (1/|G|) sum_cl |cl| chi_j(cl^{-1}) chi_V(cl) chi_i(cl).
pub fn mckay_quiver_from_table(table: &CharacterTable, chi_v: &[Scalar]) -> Result<Quiver> {
    let labels: Vec<String> = table.labels.iter().map(|l| l.to_string()).collect();
    let mut q = Quiver::new(labels);
    let order = Scalar::from_int(table.group_order() as i64);
    for i in 0..table.labels.len() {
        for j in 0..table.labels.len() {
            let mut acc = Scalar::zero();
            for (c, info) in table.classes.iter().enumerate() {
                let term = table.values[j][info.inverse_class]
                    .mul(&chi_v[c])
                    .mul(&table.values[i][c])
                    .mul(&Scalar::from_int(info.size as i64));
                acc = acc.add(&term);
            }
            let m = acc.div(&order);
            let mult = scalar_to_u32(&m).ok_or_else(|| {
                Error::Internal(format!("non-integral arrow multiplicity {m}"))
            })?;
            q.add_arrow(i, j, mult);
        }
    }
    Ok(q)
}

/// Character-based McKay quiver of a built group (symmetric or cyclic).
pub fn mckay_quiver_chars(group: &ReflectionGroup) -> Result<Quiver> {
    let table = CharacterTable::for_group(group)?;
    let chi_v = table.defining_character();
    mckay_quiver_from_table(&table, &chi_v)
}

fn scalar_to_u32(s: &Scalar) -> Option<u32> {
    let r = s.as_rat()?;
    if !r.is_integer() {
        return None;
    }
    u32::try_from(r.to_integer()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Family, ReflectionGroup};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn trivial_and_sign_characters() {
        for n in 2..=6u32 {
            for mu in partitions_of(n) {
                assert_eq!(character_value_sn(&p(&[n]), &mu).unwrap(), 1);
                let sign_expected = {
                    // sign of the class = (-1)^(n - number of cycles)
                    let cycles = mu.len() as u32;
                    if (n - cycles) % 2 == 0 {
                        1
                    } else {
                        -1
                    }
                };
                assert_eq!(
                    character_value_sn(&p(&vec![1; n as usize]), &mu).unwrap(),
                    sign_expected
                );
            }
        }
    }

    #[test]
    fn standard_character_of_s3_vs_matrix_traces() {
        // brute-force oracle: traces of the essential 2x2 matrices
        let g = ReflectionGroup::build(Family::SymEssential(3)).unwrap();
        for class in g.conjugacy_classes() {
            let rep = class.rep;
            let m = g.element(rep);
            let trace = m.get(0, 0).add(m.get(1, 1));
            let ct = Partition::new(g.cycle_type(rep).unwrap());
            let chi = character_value_sn(&p(&[2, 1]), &ct).unwrap();
            assert_eq!(trace, Scalar::from_int(chi));
        }
        // explicitly: classes (1,1,1), (2,1), (3) give 2, 0, -1
        assert_eq!(character_value_sn(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(character_value_sn(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0);
        assert_eq!(character_value_sn(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
    }

    #[test]
    fn hook_dimension_agrees_with_identity_class() {
        for n in 2..=6u32 {
            let id = p(&vec![1; n as usize]);
            for lam in partitions_of(n) {
                assert_eq!(
                    character_value_sn(&lam, &id).unwrap(),
                    lam.dim() as i64,
                    "dim of {lam}"
                );
            }
        }
    }

    #[test]
    fn row_orthogonality() {
        for n in 2..=6u32 {
            let t = CharacterTable::symmetric(n);
            for i in 0..t.labels.len() {
                for j in 0..t.labels.len() {
                    let ip = t.inner_product(i, j);
                    let expect = if i == j { Scalar::one() } else { Scalar::zero() };
                    assert_eq!(ip, expect, "n={n} i={i} j={j}");
                }
            }
        }
        let t = CharacterTable::cyclic(5);
        for i in 0..5 {
            for j in 0..5 {
                let ip = t.inner_product(i, j);
                let expect = if i == j { Scalar::one() } else { Scalar::zero() };
                assert_eq!(ip, expect);
            }
        }
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size_sn(4, &p(&[1, 1, 1, 1])), 1);
        assert_eq!(class_size_sn(4, &p(&[2, 1, 1])), 6);
        assert_eq!(class_size_sn(4, &p(&[2, 2])), 3);
        assert_eq!(class_size_sn(4, &p(&[3, 1])), 8);
        assert_eq!(class_size_sn(4, &p(&[4])), 6);
        for n in 2..=6u32 {
            let total: u64 = partitions_of(n).iter().map(|mu| class_size_sn(n, mu)).sum();
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn table_aligned_with_group_classes() {
        let g = ReflectionGroup::build(Family::SymNatural(4)).unwrap();
        let t = CharacterTable::for_group(&g).unwrap();
        // class sizes of the table must match the brute-force classes
        for (c, info) in t.classes.iter().enumerate() {
            assert_eq!(
                info.size as usize,
                g.conjugacy_classes()[c].members.len()
            );
        }
        // trivial column of the identity class gives dims
        let id_class = g.class_of(g.identity_index());
        for (l, dim) in t.dims.iter().enumerate() {
            assert_eq!(t.values[l][id_class], Scalar::from_int(*dim as i64));
        }
    }

    #[test]
    fn linear_character_counts_and_homomorphism() {
        let cases: Vec<(Family, usize)> = vec![
            (Family::SymNatural(3), 2),
            (Family::SymEssential(4), 2),
            (Family::Cyclic(3), 3),
            (Family::Monomial { r: 2, n: 2 }, 4),
            (Family::Monomial { r: 3, n: 2 }, 6),
        ];
        for (fam, expect) in cases {
            let g = ReflectionGroup::build(fam).unwrap();
            let chars = linear_characters(&g);
            assert_eq!(chars.len(), expect, "{fam}");
            // distinct value vectors
            for i in 0..chars.len() {
                for j in i + 1..chars.len() {
                    assert_ne!(chars[i].values, chars[j].values, "{fam}");
                }
            }
            // each is multiplicative
            for ch in &chars {
                for a in 0..g.order() {
                    for b in 0..g.order() {
                        let prod = g.element(a).mul(g.element(b));
                        let ab = g.index_of(&prod).unwrap();
                        assert_eq!(
                            ch.values[ab],
                            ch.values[a].mul(&ch.values[b]),
                            "{fam} {}",
                            ch.name
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn monomial_linear_character_count_is_abelianization_order() {
        // brute-force abelianization: |G| / |[G,G]| with the commutator
        // subgroup generated by all commutators
        let g = ReflectionGroup::build(Family::Monomial { r: 2, n: 2 }).unwrap();
        let mut comm: Vec<usize> = vec![g.identity_index()];
        loop {
            let mut grew = false;
            let mut in_set: Vec<bool> = vec![false; g.order()];
            for &c in &comm {
                in_set[c] = true;
            }
            for a in 0..g.order() {
                for b in 0..g.order() {
                    let c = g
                        .element(a)
                        .mul(g.element(b))
                        .mul(g.element(g.inverse_index(a)))
                        .mul(g.element(g.inverse_index(b)));
                    let ci = g.index_of(&c).unwrap();
                    if !in_set[ci] {
                        in_set[ci] = true;
                        comm.push(ci);
                        grew = true;
                    }
                }
            }
            // close under products
            let snapshot = comm.clone();
            for &x in &snapshot {
                for &y in &snapshot {
                    let z = g.element(x).mul(g.element(y));
                    let zi = g.index_of(&z).unwrap();
                    if !in_set[zi] {
                        in_set[zi] = true;
                        comm.push(zi);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let ab_order = g.order() / comm.len();
        assert_eq!(linear_characters(&g).len(), ab_order);
    }

    #[test]
    fn cyclic_quiver_is_a_cycle() {
        let g = ReflectionGroup::build(Family::Cyclic(4)).unwrap();
        let q = mckay_quiver_chars(&g).unwrap();
        assert_eq!(q.vertices.len(), 4);
        assert_eq!(q.total_arrows(), 4);
        assert_eq!(q.total_loops(), 0);
        // each vertex zeta^k has exactly one outgoing arrow, to zeta^{k+1}
        for k in 0..4usize {
            let to = (k + 1) % 4;
            assert_eq!(q.arrow_mult(k, to), 1, "arrow zeta^{k} -> zeta^{}", to);
        }
    }

    #[test]
    fn character_quiver_matches_combinatorial_for_small_n() {
        for n in 2..=5u32 {
            let table = CharacterTable::symmetric(n);
            let chi_v = table.defining_character();
            let qc = mckay_quiver_from_table(&table, &chi_v).unwrap();
            let qs = crate::mckay::mckay_quiver_sn(n).unwrap();
            assert_eq!(qc, qs, "n = {n}");
        }
    }
}
