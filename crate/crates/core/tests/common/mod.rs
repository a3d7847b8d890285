//! Shared oracles and samplers for the integration and acceptance tests.
#![allow(dead_code)]

use fujita::delpezzo;
use fujita::invariants::{self, Pullback};
use fujita::qlinalg::MatQ;
use fujita::{DelPezzoModel, DivisorClass, VarietyModel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const BUNDLE_SEED: u64 = 0x5eed_f00d;

/// Integer classes with coordinates in `[-5, 10]`, kept if big.
pub fn random_big_bundles(model: &VarietyModel, count: usize, seed: u64) -> Vec<DivisorClass> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rank = model.ns_rank();
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        assert!(attempts < 10_000_000, "sampler starved");
        let coords: Vec<i64> = (0..rank).map(|_| rng.gen_range(-5..=10)).collect();
        let class = DivisorClass::from_ints(&coords);
        if model.is_big(&class).unwrap() {
            out.push(class);
        }
    }
    out
}

/// Big bundles on a del Pezzo surface: `-K` plus a random nonnegative
/// combination of exceptional curves and of `H`, with coefficients in
/// `[0, 5]`. Uniform sampling in a box almost never hits the cone for
/// small degree.
pub fn random_del_pezzo_bundles(m: &DelPezzoModel, count: usize, seed: u64) -> Vec<DivisorClass> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let curves = m.negative_curves();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut l = m.model().anticanonical();
        let scale: i64 = rng.gen_range(1..=3);
        l = l.scale(&fujita::qlinalg::int(scale));
        for _ in 0..rng.gen_range(0..=4) {
            let c = &curves[rng.gen_range(0..curves.len())];
            l = l
                .add(&c.scale(&fujita::qlinalg::int(rng.gen_range(1..=5))))
                .unwrap();
        }
        if rng.gen_bool(0.3) {
            l = l
                .add(
                    &m.hyperplane()
                        .scale(&fujita::qlinalg::int(rng.gen_range(1..=3))),
                )
                .unwrap();
        }
        if m.model().is_big(&l).unwrap() {
            out.push(l);
        }
    }
    out
}

/// A class on a surface is rigid iff the generators of the minimal face
/// containing it span a negative definite lattice.
pub fn rigid_by_face_gram(model: &VarietyModel, class: &DivisorClass) -> bool {
    if class.is_zero() {
        return true;
    }
    let face = model.eff_cone().minimal_face(class.coords()).unwrap();
    let gens: Vec<DivisorClass> = face
        .generators_in_face
        .iter()
        .map(|&i| DivisorClass::new(model.eff_cone().generators()[i].clone()))
        .collect();
    let k = gens.len();
    let gram = MatQ::from_fn(k, k, |i, j| model.intersect(&gens[i], &gens[j]).unwrap());
    gram.inertia() == Some((0, k, 0))
}

/// Outcome of the two b computations and the two rigidity tests.
pub struct DualPath {
    pub b_surface: usize,
    pub b_polyhedral: usize,
    pub balanced: bool,
    pub rigid: bool,
    pub rigid_by_gram: bool,
}

pub fn dual_path(m: &DelPezzoModel, l: &DivisorClass) -> DualPath {
    let surface = delpezzo::surface_b(m, l).unwrap();
    let poly = invariants::b_invariant(m.model(), l).unwrap();
    assert_eq!(surface.a, poly.fujita.a);
    DualPath {
        b_surface: surface.b,
        b_polyhedral: poly.b,
        balanced: delpezzo::surface_balanced(m, l).unwrap().balanced,
        rigid: invariants::is_rigid_class(m.model(), &poly.fujita.boundary_class).unwrap(),
        rigid_by_gram: rigid_by_face_gram(m.model(), &poly.fujita.boundary_class),
    }
}

pub fn plane() -> VarietyModel {
    DelPezzoModel::new(9).unwrap().into_model()
}

/// `P^2 ← Bl_1 P^2` with `H ↦ H`.
pub fn plane_blowup_pair() -> (VarietyModel, VarietyModel, Pullback) {
    let bl = DelPezzoModel::new(8).unwrap().into_model();
    let pullback = Pullback {
        matrix: MatQ::from_int_rows(&[vec![1], vec![0]]),
        exceptional: vec![DivisorClass::from_ints(&[0, 1])],
    };
    (plane(), bl, pullback)
}

/// Degree 6 ← degree 5, blowing up a fourth point.
pub fn degree_six_five_pair() -> (VarietyModel, VarietyModel, Pullback) {
    let six = DelPezzoModel::new(6).unwrap().into_model();
    let five = DelPezzoModel::new(5).unwrap().into_model();
    let pullback = Pullback {
        matrix: MatQ::from_int_rows(&[
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, 0, 0],
        ]),
        exceptional: vec![DivisorClass::from_ints(&[0, 0, 0, 0, 1])],
    };
    (six, five, pullback)
}
