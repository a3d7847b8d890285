//! The toric pipeline and the del Pezzo pipeline on the same surfaces.

use fujita::delpezzo;
use fujita::invariants;
use fujita::qlinalg::int;
use fujita::toric::{self, fans, Fan, ToricDivisor};
use fujita::{DelPezzoModel, DivisorClass};
use proptest::prelude::*;

/// A toric surface with the del Pezzo class of each torus-invariant curve.
struct Pair {
    fan: Fan,
    surface: DelPezzoModel,
    ray_classes: Vec<Vec<i64>>,
}

fn pairs() -> Vec<Pair> {
    vec![
        Pair {
            fan: fans::blown_up_plane(),
            surface: DelPezzoModel::new(8).unwrap(),
            ray_classes: vec![vec![1, -1], vec![1, -1], vec![1, 0], vec![0, 1]],
        },
        Pair {
            fan: fans::p1_times_p1(),
            surface: DelPezzoModel::quadric(),
            ray_classes: vec![vec![1, 0], vec![1, 0], vec![0, 1], vec![0, 1]],
        },
        Pair {
            fan: fans::degree_six_del_pezzo(),
            surface: DelPezzoModel::new(6).unwrap(),
            ray_classes: vec![
                vec![1, -1, 0, -1],
                vec![0, 1, 0, 0],
                vec![1, -1, -1, 0],
                vec![0, 0, 1, 0],
                vec![1, 0, -1, -1],
                vec![0, 0, 0, 1],
            ],
        },
    ]
}

fn surface_class(pair: &Pair, coeffs: &[i64]) -> DivisorClass {
    let rank = pair.ray_classes[0].len();
    let v: Vec<i64> = (0..rank)
        .map(|j| {
            coeffs
                .iter()
                .zip(&pair.ray_classes)
                .map(|(c, r)| c * r[j])
                .sum()
        })
        .collect();
    DivisorClass::from_ints(&v)
}

#[test]
fn anticanonical_divisors_match() {
    for pair in pairs() {
        let ones = vec![1; pair.fan.rays().len()];
        assert_eq!(
            surface_class(&pair, &ones),
            pair.surface.model().anticanonical()
        );
    }
}

#[test]
fn intersection_numbers_of_invariant_curves() {
    // adjacent rays meet once; a ray's self-intersection is -b where
    // v_{i-1} + v_{i+1} = b v_i
    for pair in pairs() {
        let rays = pair.fan.rays();
        let k = rays.len();
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by(|&i, &j| {
            let angle = |r: &[i64]| (r[1] as f64).atan2(r[0] as f64);
            angle(&rays[i]).total_cmp(&angle(&rays[j]))
        });
        for (pos, &i) in order.iter().enumerate() {
            let prev = &rays[order[(pos + k - 1) % k]];
            let next = &rays[order[(pos + 1) % k]];
            let sum = [prev[0] + next[0], prev[1] + next[1]];
            let b = if rays[i][0] != 0 {
                sum[0] / rays[i][0]
            } else {
                sum[1] / rays[i][1]
            };
            let c = DivisorClass::from_ints(&pair.ray_classes[i]);
            assert_eq!(pair.surface.intersect(&c, &c), int(-b));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn invariants_agree(seed in proptest::collection::vec(0i64..=4, 6), which in 0usize..3) {
        let pair = &pairs()[which];
        let coeffs: Vec<i64> = seed[..pair.fan.rays().len()].to_vec();
        let toric_model = toric::toric_model("toric", pair.fan.clone()).unwrap();
        let toric_class = pair.fan.class_of(&ToricDivisor::new(coeffs.clone())).unwrap();
        let class = surface_class(pair, &coeffs);
        let big = pair.surface.model().is_big(&class).unwrap();
        prop_assert_eq!(toric_model.is_big(&toric_class).unwrap(), big);
        prop_assume!(big);

        let t = invariants::b_invariant(&toric_model, &toric_class).unwrap();
        let s = delpezzo::surface_b(&pair.surface, &class).unwrap();
        prop_assert_eq!(&t.fujita.a, &s.a);
        prop_assert_eq!(t.b, s.b);

        let adjoint = toric::adjoint_divisor(&ToricDivisor::new(coeffs), &s.a);
        let polytope = toric::divisor_polytope(&pair.fan, &adjoint).unwrap();
        let toric_rigid = polytope.dim == 0;
        let balanced = delpezzo::surface_balanced(&pair.surface, &class).unwrap().balanced;
        prop_assert_eq!(toric_rigid, balanced);
    }
}
