//! Acceptance suite: one test per criterion, every identity checked in exact
//! arithmetic (equality on the nose, or up to an explicitly computed unit
//! scalar where the quantity is only defined up to a unit). Each test prints
//! a pass line with its runtime; run with `--nocapture` to see them.

use std::time::Instant;

use catoptron::chars::{mckay_quiver_from_table, CharacterTable, IrrLabel};
use catoptron::group::{Family, ReflectionGroup};
use catoptron::hovinen::{
    hovinen_m2_symbolic, hovinen_matrix, match_swallowtail, swallowtail_delta,
    swallowtail_delta_in, HovinenFamily,
};
use catoptron::invariant::InvariantRing;
use catoptron::isotypic::{
    kirillov_series, m_series, molien_isotypic, rank_abar,
    rank_abar_component, rank_abar_series, rank_isotypic, rank_isotypic_series, rank_report,
    rank_sn,
};
use catoptron::matfact::{
    group_matrix, monomial_log_mf, mult_matrix, nabla_det_at, nabla_matrix, MatrixFactorization,
    Multiplier,
};
use catoptron::matrix::PolyMatrix;
use catoptron::mckay::{mckay_quiver_sn, partitions_of, Partition};
use catoptron::poly::Poly;
use catoptron::scalar::{rat_int, Rat, Scalar};

fn pass(n: u32, name: &str, t: Instant, budget_secs: u64) {
    let elapsed = t.elapsed();
    eprintln!("criterion {n} ({name}): PASS in {elapsed:?}");
    assert!(
        elapsed.as_secs() < budget_secs,
        "criterion {n} exceeded its {budget_secs}s budget: {elapsed:?}"
    );
}

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

#[test]
fn criterion_01_swallowtail_geometry() {
    let t = Instant::now();
    let ring = InvariantRing::build(Family::SymEssential(4)).unwrap();
    let disc = ring.discriminant().unwrap();

    // J is a scalar multiple of (x-y)(x-z)(y-z)(2x+y+z)(x+2y+z)(x+y+2z)
    let ctx = ring.x_ctx();
    let [x, y, z] = [0, 1, 2].map(|i| Poly::var(ctx, i));
    let two = |p: &Poly| p.scale(&Scalar::from_int(2));
    let product = x
        .sub(&y)
        .mul(&x.sub(&z))
        .mul(&y.sub(&z))
        .mul(&two(&x).add(&y).add(&z))
        .mul(&x.add(&two(&y)).add(&z))
        .mul(&x.add(&y).add(&two(&z)));
    let quotient = disc.jacobian.exact_div(&product).unwrap();
    assert!(quotient.is_constant(), "J / (mirror product) = {quotient}");
    assert!(!quotient.is_zero());

    // the discriminant matches the swallowtail normal form
    // -v^4 - 2u^3v^2 + 9u^4w + 6uv^2w - 6u^2w^2 + w^3 after a graded change
    // of basic invariants, up to one overall scalar
    let matched = match_swallowtail(&disc.delta).expect("discriminant is the swallowtail");
    assert!(matched.scale != Rat::from_integer(0.into()));
    pass(1, "swallowtail geometry", t, 60);
}

#[test]
fn criterion_02_rank_table() {
    let t = Instant::now();
    let g = ReflectionGroup::build(Family::SymEssential(4)).unwrap();
    let table = CharacterTable::for_group(&g).unwrap();
    let expected: &[(&[u32], i64)] = &[
        (&[4], 1),
        (&[3, 1], 2),
        (&[2, 2], 1),
        (&[2, 1, 1], 1),
        (&[1, 1, 1, 1], 0),
    ];
    let mut sum = rat_int(0);
    for (parts, rank) in expected {
        let lam = p(parts);
        assert_eq!(rank_sn(&lam), rat_int(*rank), "rank_sn {lam}");
        let label = table
            .label_index(&IrrLabel::Partition(lam.clone()))
            .unwrap();
        assert_eq!(
            rank_isotypic(&g, &table, label, true).unwrap(),
            rat_int(*rank),
            "rank_isotypic {lam}"
        );
        sum += rat_int(table.dims[label] as i64) * rat_int(*rank);
    }
    assert_eq!(sum, rat_int(12), "sum dim * rank");
    assert_eq!(rank_abar(&g), rat_int(144));
    pass(2, "rank table", t, 10);
}

#[test]
fn criterion_03_matrix_factorization_identity() {
    let t = Instant::now();
    // true reflection cases: M_J^2 = unit * delta * I with the recorded unit
    // J/z (a constant scalar)
    for fam in [
        Family::SymNatural(2),
        Family::SymEssential(3),
        Family::SymEssential(4),
    ] {
        let ring = InvariantRing::build(fam).unwrap();
        let disc = ring.discriminant().unwrap();
        let junit = disc
            .jacobian
            .exact_div(&disc.arrangement)
            .unwrap()
            .constant_term();
        let mj = mult_matrix(&ring, Multiplier::Jacobian).unwrap();
        let n = ring.group().order();
        let target = PolyMatrix::scalar(&ring.u_ctx().clone(), n, &disc.delta.scale(&junit));
        assert_eq!(mj.mul(&mj), target, "{fam}: M_J^2 = (J/z) delta I");
    }
    // z-J pairing: exactly delta * I
    let mut fams: Vec<Family> = (2..=6).map(Family::Cyclic).collect();
    fams.push(Family::Monomial { r: 2, n: 2 });
    for fam in fams {
        let ring = InvariantRing::build(fam).unwrap();
        let disc = ring.discriminant().unwrap();
        let mj = mult_matrix(&ring, Multiplier::Jacobian).unwrap();
        let mz = mult_matrix(&ring, Multiplier::Arrangement).unwrap();
        let n = ring.group().order();
        let target = PolyMatrix::scalar(&ring.u_ctx().clone(), n, &disc.delta);
        assert_eq!(mz.mul(&mj), target, "{fam}: M_z M_J = delta I");
        assert_eq!(mj.mul(&mz), target, "{fam}: M_J M_z = delta I");
    }
    pass(3, "matrix factorization identity", t, 600);
}

#[test]
fn criterion_04_nabla_identities() {
    let t = Instant::now();
    let mut fams: Vec<Family> = (2..=5).map(Family::Cyclic).collect();
    fams.extend([
        Family::SymNatural(3),
        Family::SymEssential(3),
        Family::SymEssential(4),
    ]);
    for fam in fams {
        let ring = InvariantRing::build(fam).unwrap();
        let nabla = nabla_matrix(&ring).unwrap();
        assert!(nabla.verify(&ring), "{fam}: telescoping identity");
        let id = ring.group().identity_index();
        let j = catoptron::invariant::jacobian_poly(ring.basis());
        for g in 0..ring.group().order() {
            let det = nabla_det_at(&ring, &nabla, g).unwrap();
            if g == id {
                assert_eq!(det, j, "{fam}: det nabla(x,x) = J");
            } else {
                assert!(det.is_zero(), "{fam}: det nabla(x, gx) = 0 for g != 1");
            }
        }
    }
    pass(4, "difference-quotient determinants", t, 300);
}

#[test]
fn criterion_05_group_matrix_determinant() {
    let t = Instant::now();
    let mut fams: Vec<Family> = (2..=5).map(Family::Cyclic).collect();
    fams.extend([Family::SymNatural(3), Family::SymEssential(3)]);
    for fam in fams {
        let ring = InvariantRing::build(fam).unwrap();
        let phi = group_matrix(&ring);
        let det = phi.determinant().unwrap();
        let j = catoptron::invariant::jacobian_poly(ring.basis());
        let order = ring.group().order();
        // det(Phi)^2 = unit * J^{|G|}
        let q = det.mul(&det).exact_div(&j.pow(order as u32)).unwrap();
        assert!(q.is_constant(), "{fam}: det(Phi)^2 / J^|G| = {q}");
        if order % 2 == 0 {
            let q = det.exact_div(&j.pow((order / 2) as u32)).unwrap();
            assert!(q.is_constant(), "{fam}: det(Phi) / J^(|G|/2) = {q}");
        }
    }
    pass(5, "group matrix determinant", t, 300);
}

#[test]
fn criterion_06_hovinen_determinants() {
    let t = Instant::now();
    // symbolic parameter: all t-terms cancel and det is Delta on the nose
    let (sctx, m2) = hovinen_m2_symbolic();
    assert_eq!(m2.determinant().unwrap(), swallowtail_delta_in(&sctx));

    let ctx = catoptron::hovinen::swallowtail_ctx();
    let delta = swallowtail_delta(&ctx);
    for fam in [HovinenFamily::M40, HovinenFamily::M4m3] {
        for tv in [1i64, -2, 3] {
            let m = hovinen_matrix(fam, &Scalar::from_int(tv)).unwrap();
            let det = m.determinant().unwrap();
            let q = det.exact_div(&delta).unwrap();
            assert!(
                q.is_constant() && !q.is_zero(),
                "{fam:?} at t={tv}: det/Delta = {q}"
            );
        }
    }
    // the normalization member M_{4,-3,-2}
    let m = hovinen_matrix(HovinenFamily::M4m3, &Scalar::from_int(-2)).unwrap();
    assert_eq!(m.determinant().unwrap(), delta.neg());
    pass(6, "Hovinen determinants", t, 30);
}

#[test]
fn criterion_07_series_consistency() {
    let t = Instant::now();
    for n in 2..=5u32 {
        let g = ReflectionGroup::build(Family::SymNatural(n)).unwrap();
        let table = CharacterTable::for_group(&g).unwrap();
        let top = 2 * (g.m() + g.m1());
        for (l, lam) in partitions_of(n).iter().enumerate() {
            // Kirillov product formula = Molien class sum
            let ks = kirillov_series(lam).unwrap();
            let ms = molien_isotypic(&g, &table, l).unwrap();
            assert_eq!(ks.num, ms.num, "n={n} {lam}");
            assert_eq!(ks.den, ms.den, "n={n} {lam}");
            // nonnegative power-series coefficients of H_M
            let hm = m_series(&g, &table, l).unwrap();
            for (k, c) in hm.expand(top).iter().enumerate() {
                assert!(
                    c >= &Rat::from_integer(0.into()),
                    "n={n} {lam}: negative H_M coefficient at t^{k}"
                );
            }
            // series-limit rank equals closed-form rank
            let series = rank_isotypic_series(&g, &table, l, true).unwrap();
            let closed = rank_isotypic(&g, &table, l, true).unwrap();
            assert_eq!(series, closed, "n={n} {lam}");
        }
    }
    pass(7, "series consistency", t, 60);
}

#[test]
fn criterion_08_abar_rank_formulas() {
    let t = Instant::now();
    // cyclic closed form
    for d in 2..=8u32 {
        let g = ReflectionGroup::build(Family::Cyclic(d)).unwrap();
        assert_eq!(rank_abar(&g), rat_int((d * (d - 1) / 2) as i64), "d={d}");
    }
    // closed form = series limit for every supported family with an
    // irreducible discriminant
    let mut fams: Vec<Family> = (2..=8).map(Family::Cyclic).collect();
    fams.extend((2..=5).map(Family::SymNatural));
    fams.extend((2..=5).map(Family::SymEssential));
    for fam in fams {
        let g = ReflectionGroup::build(fam).unwrap();
        assert_eq!(rank_abar_series(&g).unwrap(), rank_abar(&g), "{fam}");
    }
    // per-component formula for the monomial group, consistent with the
    // global formula: sum_j rank_j * r_j * |O_j| = |G|^2 m / 2
    let g = ReflectionGroup::build(Family::Monomial { r: 2, n: 2 }).unwrap();
    let report = rank_report(&g).unwrap();
    assert_eq!(report.components.len(), 2);
    let mut weighted = rat_int(0);
    for c in &report.components {
        assert_eq!(
            c.rank,
            rank_abar_component(g.order() as u64, c.r as u64).unwrap()
        );
        assert_eq!(c.rank, rat_int(16));
        weighted += c.rank.clone() * rat_int((c.r as usize * c.orbit_size) as i64);
    }
    assert_eq!(
        weighted,
        rat_int((g.order() * g.order() * g.m() / 2) as i64)
    );
    pass(8, "rank of Abar", t, 10);
}

#[test]
fn criterion_09_mckay_quivers() {
    let t = Instant::now();
    // the S4 quiver: five vertices, arrows both ways along
    // (4)-(3,1)-(2,1,1)-(1^4) and (3,1)-(2,2)-(2,1,1), loops on (3,1) and
    // (2,1,1)
    let q = mckay_quiver_sn(4).unwrap();
    let idx = |s: &str| q.vertex_index(s).unwrap();
    let edges = [
        ("(4)", "(3,1)"),
        ("(3,1)", "(2,2)"),
        ("(3,1)", "(2,1,1)"),
        ("(2,2)", "(2,1,1)"),
        ("(2,1,1)", "(1,1,1,1)"),
    ];
    for (a, b) in edges {
        assert_eq!(q.arrow_mult(idx(a), idx(b)), 1);
        assert_eq!(q.arrow_mult(idx(b), idx(a)), 1);
    }
    assert_eq!(q.total_arrows(), 10);
    assert_eq!(q.loops.get(&idx("(3,1)")), Some(&1));
    assert_eq!(q.loops.get(&idx("(2,1,1)")), Some(&1));
    assert_eq!(q.total_loops(), 2);

    // character-based and combinatorial quivers coincide for n <= 6
    for n in 2..=6u32 {
        let table = CharacterTable::symmetric(n);
        let chi_v = table.defining_character();
        let qc = mckay_quiver_from_table(&table, &chi_v).unwrap();
        assert_eq!(qc, mckay_quiver_sn(n).unwrap(), "n = {n}");
    }

    // deleting the determinant vertex
    let abar = q.remove_vertex("(1,1,1,1)").unwrap();
    assert_eq!(abar.vertices.len(), 4);
    assert_eq!(abar.total_arrows(), 8);
    assert_eq!(abar.total_loops(), 2);
    pass(9, "McKay quivers", t, 30);
}

#[test]
fn criterion_10_logarithmic_factorizations() {
    let t = Instant::now();
    for (r, n) in [(2u32, 2u32), (3, 2), (2, 3)] {
        let ring = InvariantRing::build(Family::Monomial { r, n }).unwrap();
        let log = monomial_log_mf(&ring).unwrap();
        // det(mu), rewritten back to the x-variables, is unit * z * J
        let disc = ring.discriminant().unwrap();
        let det_mu = log.mu.determinant().unwrap();
        let back = ring.expand(&det_mu);
        let zj = disc.arrangement.mul(&disc.jacobian);
        let q = back.exact_div(&zj).unwrap();
        assert!(q.is_constant() && !q.is_zero(), "r={r} n={n}: det mu vs zJ");
        // every exterior-power pair is a matrix factorization of delta
        assert_eq!(log.pairs.len(), n as usize);
        for (k, pair) in log.pairs.iter().enumerate() {
            assert!(pair.verify().unwrap(), "r={r} n={n} k={}", k + 1);
            let _ = MatrixFactorization::new(
                pair.u.clone(),
                pair.v.clone(),
                disc.delta.clone(),
            );
        }
    }
    pass(10, "logarithmic factorizations", t, 300);
}
