//! Hilbert–Poincaré series of isotypical components and the rank formulas
//! over the discriminant hypersurface.
//!
//! For an irreducible label i the series of S_i = Hom(V_i, S) is an exact
//! rational function K_i(t) / prod (1 - t^(d_j)); the numerators K_i are the
//! fake degree polynomials. The component M_i of the arrangement coordinate
//! ring S/(J) has series H_{S_i} - t^m H_{S_i'}, where i' twists by det, and
//! its rank over R/(Delta) is the limit of H_{M_i}/H_{R/(Delta)} at t = 1 or,
//! in closed form,
//!   rank M_i = (m dim V_i' + K_{i'}'(1) - K_i'(1)) / (m + m1).
//! For the symmetric group the same rank is dim(V_lambda) (1/2 + (A-F)/2m)
//! with A and F the total arm and foot lengths of the Young diagram.

use num_traits::Zero;

use crate::chars::CharacterTable;
use crate::error::{Error, Result};
use crate::group::ReflectionGroup;
use crate::matrix::PolyMatrix;
use crate::mckay::Partition;
use crate::poly::{Poly, VarCtx};
use crate::scalar::{rat_int, Rat, Scalar};
use crate::series::{SeriesQuotient, UniPoly};

/// Graded character of the coinvariant algebra at a group element:
/// prod (1 - t^(d_i)) / det(1 - t g), a polynomial in t.
fn coinvariant_character_at(group: &ReflectionGroup, elem: usize) -> Result<Poly> {
    let t_ctx = VarCtx::standard(vec!["t"]);
    let g = group.element(elem);
    let n = group.dim();
    let m = PolyMatrix::from_fn(n, n, |i, j| {
        let linear = Poly::var(&t_ctx, 0).scale(&g.get(i, j).neg());
        if i == j {
            Poly::one(&t_ctx).add(&linear)
        } else {
            linear
        }
    });
    let det = m.determinant()?;
    let mut num = Poly::one(&t_ctx);
    for &d in &group.degrees {
        let f = Poly::one(&t_ctx).sub(&Poly::var(&t_ctx, 0).pow(d));
        num = num.mul(&f);
    }
    num.exact_div(&det)
        .map_err(|_| Error::Internal("coinvariant character division failed".into()))
}

fn poly_t_to_unipoly(p: &Poly) -> Result<UniPoly> {
    let deg = p.weighted_degree().unwrap_or(0).max(0) as usize;
    let mut coeffs = vec![Rat::zero(); deg + 1];
    for (e, c) in p.terms() {
        let r = c
            .as_rat()
            .ok_or_else(|| Error::Internal("series coefficient is not rational".into()))?;
        coeffs[e[0] as usize] = r.clone();
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// The fake degree polynomial K_i(t): the graded multiplicity of label i in
/// the coinvariant algebra, computed as the exact class sum
/// (1/|G|) sum_cl |cl| chi_i(cl^{-1}) prod(1-t^(d_j))/det(1 - t g_cl).
pub fn fake_degree(
    group: &ReflectionGroup,
    table: &CharacterTable,
    label: usize,
) -> Result<UniPoly> {
    let t_ctx = VarCtx::standard(vec!["t"]);
    let mut acc = Poly::zero(&t_ctx);
    for (c, class) in group.conjugacy_classes().iter().enumerate() {
        let p = coinvariant_character_at(group, class.rep)?;
        let chi_inv = &table.values[label][table.classes[c].inverse_class];
        let weight = chi_inv.mul(&Scalar::from_int(class.members.len() as i64));
        acc = acc.add(&p.scale(&weight));
    }
    let k = acc.scale(&Scalar::ratio(1, group.order() as i64));
    poly_t_to_unipoly(&k)
}

/// H_{S_i}(t) = K_i(t) / prod (1 - t^(d_j)).
pub fn molien_isotypic(
    group: &ReflectionGroup,
    table: &CharacterTable,
    label: usize,
) -> Result<SeriesQuotient> {
    let k = fake_degree(group, table, label)?;
    Ok(SeriesQuotient::new(k, group.degrees.clone()))
}

/// Kirillov's product formula for S_n: H_{S_lambda}(t) =
/// prod_cells t^(foot) / (1 - t^(hook)), normalized to the denominator
/// (1-t)(1-t^2)...(1-t^n).
pub fn kirillov_series(lambda: &Partition) -> Result<SeriesQuotient> {
    let n = lambda.sum();
    if n == 0 {
        return Err(Error::InvalidParameter("empty partition".into()));
    }
    let stats = lambda.cell_stats();
    let mut num = UniPoly::tpow(stats.total_foot as usize);
    for d in 1..=n {
        num = num.mul(&UniPoly::one_minus_tpow(d));
    }
    for cell in &stats.cells {
        num = num.exact_div(&UniPoly::one_minus_tpow(cell.hook as u32))?;
    }
    Ok(SeriesQuotient::new(num, (1..=n).collect()))
}

/// H_R(t) = 1 / prod (1 - t^(d_i)).
pub fn invariant_ring_series(degrees: &[u32]) -> SeriesQuotient {
    SeriesQuotient::new(UniPoly::one(), degrees.to_vec())
}

/// H_{R/(Delta)}(t) = (1 - t^(m+m1)) / prod (1 - t^(d_i)).
pub fn discriminant_ring_series(group: &ReflectionGroup) -> SeriesQuotient {
    let deg = (group.m() + group.m1()) as u32;
    SeriesQuotient::new(UniPoly::one_minus_tpow(deg), group.degrees.clone())
}

/// H_{M_i}(t) = H_{S_i}(t) - t^m H_{S_i'}(t) with i' = i tensor det, over the
/// common denominator prod (1 - t^(d_j)).
pub fn m_series(
    group: &ReflectionGroup,
    table: &CharacterTable,
    label: usize,
) -> Result<SeriesQuotient> {
    let k_i = fake_degree(group, table, label)?;
    let k_it = fake_degree(group, table, table.tensor_det(label))?;
    let num = k_i.sub(&k_it.mul(&UniPoly::tpow(group.m())));
    Ok(SeriesQuotient::new(num, group.degrees.clone()))
}

/// Closed-form rank of M_i over R/(Delta):
/// (m dim V_i' + K_{i'}'(1) - K_i'(1)) / (m + m1).
/// The caller asserts that Delta is irreducible over the invariant ring.
pub fn rank_isotypic(
    group: &ReflectionGroup,
    table: &CharacterTable,
    label: usize,
    delta_irreducible: bool,
) -> Result<Rat> {
    if !delta_irreducible {
        return Err(Error::Precondition(
            "rank over R/(Delta) needs an irreducible discriminant; use the per-component rank"
                .into(),
        ));
    }
    let twisted = table.tensor_det(label);
    let k_i = fake_degree(group, table, label)?;
    let k_it = fake_degree(group, table, twisted)?;
    let m = rat_int(group.m() as i64);
    let m1 = rat_int(group.m1() as i64);
    let dim_twisted = rat_int(table.dims[twisted] as i64);
    let val = (m.clone() * dim_twisted + k_it.derivative().eval_one()
        - k_i.derivative().eval_one())
        / (m + m1);
    Ok(val)
}

/// The same rank via the series limit lim_(t->1) H_{M_i}/H_{R/(Delta)}.
pub fn rank_isotypic_series(
    group: &ReflectionGroup,
    table: &CharacterTable,
    label: usize,
    delta_irreducible: bool,
) -> Result<Rat> {
    if !delta_irreducible {
        return Err(Error::Precondition(
            "series rank needs an irreducible discriminant".into(),
        ));
    }
    let hm = m_series(group, table, label)?;
    hm.limit_ratio_at_one(&discriminant_ring_series(group))
}

/// The symmetric-group rank formula:
/// rank M_lambda = dim(V_lambda) (1/2 + (A - F)/(2m)) with m = n(n-1)/2.
pub fn rank_sn(lambda: &Partition) -> Rat {
    let n = lambda.sum() as i64;
    let m = n * (n - 1) / 2;
    let stats = lambda.cell_stats();
    let dim = rat_int(stats.dim as i64);
    let a = rat_int(stats.total_arm as i64);
    let f = rat_int(stats.total_foot as i64);
    dim * (Rat::new(1.into(), 2.into()) + (a - f) / rat_int(2 * m))
}

/// H_Abar(t) = (|G| - prod_i (1 + t + ... + t^(d_i - 1))) / (1-t)^n.
pub fn abar_hilbert_from_degrees(degrees: &[u32]) -> SeriesQuotient {
    let order: u64 = degrees.iter().map(|&d| d as u64).product();
    let mut prod = UniPoly::one();
    for &d in degrees {
        prod = prod.mul(&UniPoly::geometric(d));
    }
    let num = UniPoly::constant(rat_int(order as i64)).sub(&prod);
    SeriesQuotient::new(num, vec![1; degrees.len()])
}

pub fn abar_hilbert(group: &ReflectionGroup) -> SeriesQuotient {
    abar_hilbert_from_degrees(&group.degrees)
}

/// Closed-form rank of Abar over R/(Delta): |G|^2 m / (2 (m + m1)).
pub fn rank_abar(group: &ReflectionGroup) -> Rat {
    let order = rat_int(group.order() as i64);
    let m = rat_int(group.m() as i64);
    let m1 = rat_int(group.m1() as i64);
    order.clone() * order * m.clone() / (rat_int(2) * (m + m1))
}

/// Rank of Abar via the Hilbert-series limit; valid when Delta is
/// irreducible.
pub fn rank_abar_series(group: &ReflectionGroup) -> Result<Rat> {
    abar_hilbert(group).limit_ratio_at_one(&discriminant_ring_series(group))
}

/// Rank of Abar along one component of the discriminant:
/// binomial(r,2) (|G|/r)^2, where r is the order of the pointwise stabilizer
/// of a mirror in the orbit.
pub fn rank_abar_component(order: u64, r: u64) -> Result<Rat> {
    if order == 0 || r == 0 {
        return Err(Error::InvalidParameter(
            "component rank needs positive order and r".into(),
        ));
    }
    let choose2 = rat_int((r * (r - 1) / 2) as i64);
    let q = rat_int(order as i64) / rat_int(r as i64);
    Ok(choose2 * q.clone() * q)
}

/// Per-component data for one mirror orbit.
#[derive(Clone, Debug)]
pub struct ComponentRank {
    /// Order of the pointwise stabilizer along the orbit.
    pub r: u32,
    pub orbit_size: usize,
    pub rank: Rat,
}

/// Rank report: per-label ranks (when a character table is available),
/// the rank of Abar, and the per-component ranks over the mirror orbits.
#[derive(Clone, Debug)]
pub struct RankReport {
    pub group: String,
    pub labels: Vec<(String, u64, Rat)>,
    pub sum_dim_rank: Rat,
    pub rank_abar: Rat,
    pub components: Vec<ComponentRank>,
}

impl RankReport {
    pub fn to_json(&self) -> serde_json::Value {
        let labels: Vec<serde_json::Value> = self
            .labels
            .iter()
            .map(|(name, dim, rank)| {
                serde_json::json!({"name": name, "dim": dim, "rank": rat_string(rank)})
            })
            .collect();
        let components: Vec<serde_json::Value> = self
            .components
            .iter()
            .map(|c| {
                serde_json::json!({
                    "r": c.r,
                    "orbit_size": c.orbit_size,
                    "rank": rat_string(&c.rank),
                })
            })
            .collect();
        serde_json::json!({
            "group": self.group,
            "labels": labels,
            "sum_dim_rank": rat_string(&self.sum_dim_rank),
            "rank_abar": rat_string(&self.rank_abar),
            "components": components,
        })
    }
}

pub fn rat_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Assemble the full rank report for a group. Per-label ranks require a
/// character table (symmetric and cyclic families) and an irreducible
/// discriminant; the per-component ranks work for every family.
pub fn rank_report(group: &ReflectionGroup) -> Result<RankReport> {
    let irreducible = group.family.delta_irreducible();
    let mut labels = Vec::new();
    let mut sum = Rat::zero();
    if irreducible {
        if let Ok(table) = CharacterTable::for_group(group) {
            for l in 0..table.labels.len() {
                let rank = rank_isotypic(group, &table, l, true)?;
                let series_rank = rank_isotypic_series(group, &table, l, true)?;
                if rank != series_rank {
                    return Err(Error::Internal(format!(
                        "closed-form and series ranks disagree for {}",
                        table.labels[l]
                    )));
                }
                if !rank.is_integer() {
                    return Err(Error::Internal(format!(
                        "rank of {} is not integral",
                        table.labels[l]
                    )));
                }
                sum += rat_int(table.dims[l] as i64) * rank.clone();
                labels.push((table.labels[l].to_string(), table.dims[l], rank));
            }
        }
    }
    let orbits = group.mirror_orbits();
    let components = orbits
        .iter()
        .map(|orbit| {
            let r = group.mirrors[orbit[0]].order;
            let rank = rank_abar_component(group.order() as u64, r as u64)?;
            Ok(ComponentRank {
                r,
                orbit_size: orbit.len(),
                rank,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RankReport {
        group: group.family.to_string(),
        labels,
        sum_dim_rank: sum,
        rank_abar: rank_abar(group),
        components,
    })
}
