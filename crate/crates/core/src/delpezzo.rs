//! Del Pezzo surfaces: exceptional curves, Zariski decompositions and the
//! surface-case analysis of the b-invariant.
//!
//! Blow-ups of the plane use the basis `(H, E_1, …, E_r)` with intersection
//! form `diag(1, -1, …, -1)` and canonical class `-3H + ΣE_i`. The quadric
//! uses the basis of the two rulings with the hyperbolic form.

use std::cmp::Reverse;

use num_traits::{One, Signed, Zero};

use crate::cones::ConeQ;
use crate::error::{Error, Result};
use crate::invariants::{self, DivisorClass, Provenance, VarietyModel};
use crate::qlinalg::{format_rat, int, MatQ, Rat, VecQ};

/// Largest `H`-degree searched for exceptional classes.
pub const EXCEPTIONAL_SEARCH_BOUND: i64 = 6;

#[derive(Clone, Debug)]
pub struct DelPezzoModel {
    degree: u8,
    model: VarietyModel,
    negative_curves: Vec<DivisorClass>,
}

impl DelPezzoModel {
    /// Blow-up of the plane in `9 - degree` general points; degree 9 is the
    /// plane and degree 8 the blow-up in one point.
    pub fn new(degree: i64) -> Result<Self> {
        if !(1..=9).contains(&degree) {
            return Err(Error::DegreeOutOfRange(degree));
        }
        let r = (9 - degree) as usize;
        let rank = r + 1;
        let mut canonical = vec![1i64; rank];
        canonical[0] = -3;
        let negative_curves = match degree {
            9 => Vec::new(),
            8 => vec![DivisorClass::from_ints(&[0, 1])],
            _ => enumerate_negative_curves(degree)?,
        };
        let generators: Vec<VecQ> = match degree {
            9 => vec![VecQ::from_ints(&[1])],
            8 => vec![VecQ::from_ints(&[0, 1]), VecQ::from_ints(&[1, -1])],
            _ => negative_curves.iter().map(|c| c.coords().clone()).collect(),
        };
        let mut diag = vec![int(-1); rank];
        diag[0] = int(1);
        let model = VarietyModel::new(
            format!("del Pezzo surface of degree {degree}"),
            DivisorClass::from_ints(&canonical),
            ConeQ::new(rank, generators)?,
            Some(MatQ::diagonal(&diag)),
            Provenance::DelPezzo(degree as u8),
        )?;
        Ok(DelPezzoModel {
            degree: degree as u8,
            model,
            negative_curves,
        })
    }

    /// `P^1 × P^1` in the basis of the two rulings.
    pub fn quadric() -> Self {
        let model = VarietyModel::new(
            "quadric surface",
            DivisorClass::from_ints(&[-2, -2]),
            ConeQ::from_int_rows(2, &[&[1, 0], &[0, 1]]).expect("rank 2"),
            Some(MatQ::from_int_rows(&[vec![0, 1], vec![1, 0]])),
            Provenance::Quadric,
        )
        .expect("quadric model is valid");
        DelPezzoModel {
            degree: 8,
            model,
            negative_curves: Vec::new(),
        }
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    /// Number of blown-up points (0 for the plane and the quadric).
    pub fn blown_up_points(&self) -> usize {
        match self.model.provenance() {
            Provenance::Quadric => 0,
            _ => 9 - self.degree as usize,
        }
    }

    pub fn model(&self) -> &VarietyModel {
        &self.model
    }

    pub fn into_model(self) -> VarietyModel {
        self.model
    }

    pub fn negative_curves(&self) -> &[DivisorClass] {
        &self.negative_curves
    }

    pub fn intersect(&self, a: &DivisorClass, b: &DivisorClass) -> Rat {
        self.model
            .intersect(a, b)
            .expect("del Pezzo models carry a form")
    }

    /// `E_i` in this model's basis (1-based index).
    pub fn exceptional(&self, i: usize) -> DivisorClass {
        DivisorClass::new(VecQ::unit(self.model.ns_rank(), i))
    }

    pub fn hyperplane(&self) -> DivisorClass {
        DivisorClass::new(VecQ::unit(self.model.ns_rank(), 0))
    }
}

/// All classes `aH - Σ b_i E_i` with `a² - Σ b_i² = -1` and
/// `3a - Σ b_i = 1`, for `0 ≤ a ≤ bound`.
pub fn enumerate_with_bound(degree: i64, bound: i64) -> Result<Vec<DivisorClass>> {
    if !(1..=7).contains(&degree) {
        return Err(Error::DegreeOutOfRange(degree));
    }
    let r = (9 - degree) as usize;
    let mut found: Vec<(i64, Vec<i64>)> = Vec::new();
    for a in 0..=bound {
        let mut b = Vec::with_capacity(r);
        search_multiplicities(r, a + 1, 3 * a - 1, a * a + 1, &mut b, &mut |b| {
            found.push((a, b.to_vec()))
        });
    }
    found.sort_by_key(|(a, b)| (*a, Reverse(b.iter().map(|x| x.abs()).collect::<Vec<_>>())));
    Ok(found
        .into_iter()
        .map(|(a, b)| {
            let mut coords = vec![a];
            coords.extend(b.iter().map(|x| -x));
            DivisorClass::from_ints(&coords)
        })
        .collect())
}

fn search_multiplicities(
    remaining: usize,
    limit: i64,
    sum: i64,
    squares: i64,
    prefix: &mut Vec<i64>,
    emit: &mut impl FnMut(&[i64]),
) {
    if remaining == 0 {
        if sum == 0 && squares == 0 {
            emit(prefix);
        }
        return;
    }
    for b in -limit..=limit {
        let sq = b * b;
        if sq > squares {
            continue;
        }
        prefix.push(b);
        search_multiplicities(remaining - 1, limit, sum - b, squares - sq, prefix, emit);
        prefix.pop();
    }
}

/// Exceptional curves on the del Pezzo surface of the given degree.
pub fn enumerate_negative_curves(degree: i64) -> Result<Vec<DivisorClass>> {
    enumerate_with_bound(degree, EXCEPTIONAL_SEARCH_BOUND)
}

/// `D = P + Σ e_i C_i` with `P` nef and the `C_i` spanning a negative
/// definite lattice orthogonal to `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZariskiDecomposition {
    pub positive: DivisorClass,
    pub negative_support: Vec<(DivisorClass, Rat)>,
}

impl ZariskiDecomposition {
    pub fn negative_part(&self) -> DivisorClass {
        let dim = self.positive.dim();
        self.negative_support
            .iter()
            .fold(DivisorClass::zero(dim), |acc, (c, e)| {
                acc.add(&c.scale(e)).expect("same lattice")
            })
    }
}

/// Zariski decomposition against an explicit list of negative curves.
pub fn zariski_with_curves(
    form: &MatQ,
    curves: &[DivisorClass],
    class: &DivisorClass,
) -> Result<ZariskiDecomposition> {
    let dot = |a: &DivisorClass, b: &DivisorClass| -> Rat {
        form.bilinear(a.coords(), b.coords()).expect("form dims")
    };
    let mut support: Vec<usize> = Vec::new();
    let mut weights: Vec<Rat> = Vec::new();
    let mut positive = class.clone();
    loop {
        let violations: Vec<usize> = (0..curves.len())
            .filter(|i| !support.contains(i) && dot(&positive, &curves[*i]).is_negative())
            .collect();
        if violations.is_empty() {
            break;
        }
        support.extend(violations);
        if support.len() > curves.len() {
            return Err(Error::InternalNonTermination);
        }
        let gram = MatQ::from_fn(support.len(), support.len(), |i, j| {
            dot(&curves[support[i]], &curves[support[j]])
        });
        let rhs = VecQ::new(support.iter().map(|&i| dot(class, &curves[i])).collect());
        weights = match gram.solve(&rhs)? {
            crate::qlinalg::Solution::Unique(x) => x.into_entries(),
            _ => return Err(Error::InternalNonTermination),
        };
        positive = class.clone();
        for (&i, w) in support.iter().zip(&weights) {
            positive = positive.sub(&curves[i].scale(w))?;
        }
    }
    let negative_support = support
        .iter()
        .zip(weights)
        .filter(|(_, w)| !w.is_zero())
        .map(|(&i, w)| (curves[i].clone(), w))
        .collect();
    Ok(ZariskiDecomposition {
        positive,
        negative_support,
    })
}

/// Zariski decomposition on any surface model with an intersection form;
/// the candidate negative curves are the effective-cone generators of
/// negative self-intersection.
pub fn zariski_on_model(
    model: &VarietyModel,
    class: &DivisorClass,
) -> Result<ZariskiDecomposition> {
    let form = model
        .intersection_form()
        .ok_or(Error::RigidityUndecidable)?;
    if !model.is_pseudo_effective(class)? {
        return Err(Error::NotPseudoEffective);
    }
    let curves: Vec<DivisorClass> = model
        .eff_cone()
        .generators()
        .iter()
        .map(|g| DivisorClass::new(g.clone()))
        .filter(|c| model.intersect(c, c).is_some_and(|s| s.is_negative()))
        .collect();
    zariski_with_curves(form, &curves, class)
}

pub fn zariski_decompose(m: &DelPezzoModel, class: &DivisorClass) -> Result<ZariskiDecomposition> {
    if !m.model.is_pseudo_effective(class)? {
        return Err(Error::NotPseudoEffective);
    }
    let form = m.model.intersection_form().expect("del Pezzo form");
    zariski_with_curves(form, &m.negative_curves, class)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurfaceCase {
    /// `P = 0`: the adjoint divisor is rigid.
    BasePoint,
    /// `P ≠ 0` with `P² = 0`: a conic fibration over a curve.
    BaseCurve,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceCaseAnalysis {
    pub case: SurfaceCase,
    pub b: usize,
    pub n_components: usize,
    pub a: Rat,
    pub zariski: ZariskiDecomposition,
}

/// b through the Zariski decomposition of `a·L + K`.
pub fn surface_b(m: &DelPezzoModel, bundle: &DivisorClass) -> Result<SurfaceCaseAnalysis> {
    let fujita = invariants::fujita(&m.model, bundle)?;
    let zariski = zariski_decompose(m, &fujita.boundary_class)?;
    let n_components = zariski.negative_support.len();
    let (case, b) = if zariski.positive.is_zero() {
        (SurfaceCase::BasePoint, m.model.ns_rank() - n_components)
    } else {
        let square = m.intersect(&zariski.positive, &zariski.positive);
        if !square.is_zero() {
            return Err(Error::InvalidModel(format!(
                "positive part of a boundary class has P² = {}",
                format_rat(&square)
            )));
        }
        (SurfaceCase::BaseCurve, 1)
    };
    Ok(SurfaceCaseAnalysis {
        case,
        b,
        n_components,
        a: fujita.a,
        zariski,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BalanceWitness {
    /// `a·L + K` is rigid, supported on these curves.
    RigidAdjoint { support: Vec<DivisorClass> },
    /// General fiber of the conic fibration defined by the positive part;
    /// it has the same `(a, b)` as the surface.
    ConicFibre { fibre: DivisorClass },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceBalance {
    pub balanced: bool,
    pub witness: BalanceWitness,
}

/// `L` is balanced iff `a·L + K` is rigid.
pub fn surface_balanced(m: &DelPezzoModel, bundle: &DivisorClass) -> Result<SurfaceBalance> {
    let analysis = surface_b(m, bundle)?;
    Ok(match analysis.case {
        SurfaceCase::BasePoint => SurfaceBalance {
            balanced: true,
            witness: BalanceWitness::RigidAdjoint {
                support: analysis
                    .zariski
                    .negative_support
                    .into_iter()
                    .map(|(c, _)| c)
                    .collect(),
            },
        },
        SurfaceCase::BaseCurve => SurfaceBalance {
            balanced: false,
            witness: BalanceWitness::ConicFibre {
                fibre: DivisorClass::new(analysis.zariski.positive.coords().primitive()),
            },
        },
    })
}

/// `a(C, L|_C) = 2 / deg` for a rational curve.
pub fn curve_fujita(degree: &Rat) -> Result<Rat> {
    if !degree.is_positive() {
        return Err(Error::NonPositiveDegree);
    }
    Ok(int(2) / degree)
}

/// `a(C, L|_C) ≤ a(X, L)` for a rational curve class `C` outside the
/// exceptional locus. For degree 1 the singular anticanonical curves are
/// rejected through `(-K, C) ≥ 2`; any further exclusion is up to the caller.
pub fn weak_balance_curve_check(
    m: &DelPezzoModel,
    bundle: &DivisorClass,
    curve: &DivisorClass,
) -> Result<bool> {
    let self_intersection = m.intersect(curve, curve);
    if self_intersection == -Rat::one() {
        return Err(Error::CurveInExcludedLocus(format!(
            "{curve} has self-intersection -1"
        )));
    }
    let anticanonical_degree = m.intersect(&m.model.anticanonical(), curve);
    if anticanonical_degree < int(2) {
        return Err(Error::CurveInExcludedLocus(format!(
            "{curve} has anticanonical degree {}",
            format_rat(&anticanonical_degree)
        )));
    }
    let a_curve = curve_fujita(&m.intersect(bundle, curve))?;
    let a_surface = invariants::fujita(&m.model, bundle)?.a;
    Ok(a_curve <= a_surface)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::rat;

    #[test]
    fn degree_six_curves() {
        let curves = enumerate_negative_curves(6).unwrap();
        let expected = [
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
            [1, -1, -1, 0],
            [1, -1, 0, -1],
            [1, 0, -1, -1],
        ];
        let expected: Vec<DivisorClass> = expected
            .iter()
            .map(|c| DivisorClass::from_ints(c))
            .collect();
        assert_eq!(curves, expected);
    }

    #[test]
    fn exceptional_classes_have_the_right_numerics() {
        for d in 1..=7 {
            let m = DelPezzoModel::new(d).unwrap();
            let k = m.model().canonical().clone();
            assert_eq!(m.intersect(&k, &k), int(d));
            for c in m.negative_curves() {
                assert_eq!(m.intersect(c, c), int(-1));
                assert_eq!(m.intersect(&k, c), int(-1));
            }
        }
    }

    #[test]
    fn degree_out_of_range() {
        assert_eq!(
            enumerate_negative_curves(8),
            Err(Error::DegreeOutOfRange(8))
        );
        assert!(DelPezzoModel::new(0).is_err());
        assert!(DelPezzoModel::new(10).is_err());
    }

    #[test]
    fn zariski_on_blown_up_plane() {
        let m = DelPezzoModel::new(8).unwrap();
        let e = DivisorClass::from_ints(&[0, 1]);
        let z = zariski_decompose(&m, &e).unwrap();
        assert!(z.positive.is_zero());
        assert_eq!(z.negative_support, vec![(e, int(1))]);

        let h_e = DivisorClass::from_ints(&[1, -1]);
        let z = zariski_decompose(&m, &h_e).unwrap();
        assert_eq!(z.positive, h_e);
        assert!(z.negative_support.is_empty());

        assert_eq!(
            zariski_decompose(&m, &DivisorClass::from_ints(&[-1, 0])),
            Err(Error::NotPseudoEffective)
        );
    }

    #[test]
    fn zariski_degree_six_residuals() {
        let m = DelPezzoModel::new(6).unwrap();
        let d = m
            .model()
            .anticanonical()
            .add(&m.exceptional(1).scale(&int(2)))
            .unwrap();
        let z = zariski_decompose(&m, &d).unwrap();
        assert_eq!(z.positive.add(&z.negative_part()).unwrap(), d);
        for (c, e) in &z.negative_support {
            assert!(e.is_positive());
            assert!(m.intersect(&z.positive, c).is_zero());
        }
        for c in m.negative_curves() {
            assert!(!m.intersect(&z.positive, c).is_negative());
        }
        // -K + 2E1: E1·D = 1 - 2 = -1 < 0, so E1 is in the support
        assert_eq!(z.negative_support, vec![(m.exceptional(1), int(1))]);
    }

    #[test]
    fn case_analysis_examples() {
        let m = DelPezzoModel::new(8).unwrap();
        let r = surface_b(&m, &DivisorClass::from_ints(&[2, -1])).unwrap();
        assert_eq!(r.case, SurfaceCase::BaseCurve);
        assert_eq!(r.b, 1);
        let bal = surface_balanced(&m, &DivisorClass::from_ints(&[2, -1])).unwrap();
        assert!(!bal.balanced);
        assert_eq!(
            bal.witness,
            BalanceWitness::ConicFibre {
                fibre: DivisorClass::from_ints(&[1, -1])
            }
        );

        for d in 1..=9 {
            let m = DelPezzoModel::new(d).unwrap();
            let r = surface_b(&m, &m.model().anticanonical()).unwrap();
            assert_eq!(r.case, SurfaceCase::BasePoint);
            assert_eq!(r.b, m.model().ns_rank());
            assert_eq!(r.a, int(1));
            assert!(
                surface_balanced(&m, &m.model().anticanonical())
                    .unwrap()
                    .balanced
            );
        }
    }

    #[test]
    fn degree_six_rigid_chain() {
        let m = DelPezzoModel::new(6).unwrap();
        let l = m.model().anticanonical().add(&m.exceptional(1)).unwrap();
        let r = surface_b(&m, &l).unwrap();
        let poly = invariants::b_invariant(m.model(), &l).unwrap();
        assert_eq!(r.b, poly.b);
        assert_eq!(r.a, poly.fujita.a);
        let bal = surface_balanced(&m, &l).unwrap();
        assert_eq!(
            bal.balanced,
            invariants::is_rigid_class(m.model(), &poly.fujita.boundary_class).unwrap()
        );
    }

    #[test]
    fn curve_fujita_values() {
        assert_eq!(curve_fujita(&int(1)).unwrap(), int(2));
        assert_eq!(curve_fujita(&int(2)).unwrap(), int(1));
        assert_eq!(curve_fujita(&int(3)).unwrap(), rat(2, 3));
        assert_eq!(curve_fujita(&int(0)), Err(Error::NonPositiveDegree));
    }

    #[test]
    fn weak_balance_examples() {
        let cubic = DelPezzoModel::new(3).unwrap();
        let h = cubic.hyperplane();
        assert!(weak_balance_curve_check(&cubic, &cubic.model().anticanonical(), &h).unwrap());
        let six = DelPezzoModel::new(6).unwrap();
        assert!(
            weak_balance_curve_check(&six, &six.model().anticanonical(), &six.hyperplane())
                .unwrap()
        );
        let eight = DelPezzoModel::new(8).unwrap();
        assert!(weak_balance_curve_check(
            &eight,
            &DivisorClass::from_ints(&[2, -1]),
            &eight.hyperplane()
        )
        .unwrap());
        // exceptional curve is excluded
        assert!(matches!(
            weak_balance_curve_check(
                &cubic,
                &cubic.model().anticanonical(),
                &cubic.exceptional(1)
            ),
            Err(Error::CurveInExcludedLocus(_))
        ));
        // anticanonical curve on degree 1 has (-K, C) = 1
        let one = DelPezzoModel::new(1).unwrap();
        let k = one.model().anticanonical();
        assert!(matches!(
            weak_balance_curve_check(&one, &k, &k),
            Err(Error::CurveInExcludedLocus(_))
        ));
    }

    #[test]
    fn quadric_model() {
        let q = DelPezzoModel::quadric();
        let l = DivisorClass::from_ints(&[11, 1]);
        let r = invariants::b_invariant(q.model(), &l).unwrap();
        assert_eq!(r.fujita.a, int(2));
        assert_eq!(r.b, 1);
        assert_eq!(q.blown_up_points(), 0);
    }
}
