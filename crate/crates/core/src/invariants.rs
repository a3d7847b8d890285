//! The Fujita invariant, the b-invariant, rigidity and balancedness
//! verdicts on a generic [`VarietyModel`].

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_traits::Signed;

use crate::cones::{ConeQ, FaceQ, Location};
use crate::delpezzo;
use crate::error::{Error, Result};
use crate::lp;
use crate::qlinalg::{format_rat, MatQ, Rat, VecQ};
use crate::toric::{self, Fan};

/// A divisor class in the Néron-Severi basis of some model.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass(VecQ);

impl DivisorClass {
    pub fn new(coords: VecQ) -> Self {
        DivisorClass(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        DivisorClass(VecQ::from_ints(coords))
    }

    pub fn zero(dim: usize) -> Self {
        DivisorClass(VecQ::zeros(dim))
    }

    pub fn coords(&self) -> &VecQ {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scale(&self, factor: &Rat) -> DivisorClass {
        DivisorClass(self.0.scale(factor))
    }

    pub fn add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        Ok(DivisorClass(self.0.add(&other.0)?))
    }

    pub fn sub(&self, other: &DivisorClass) -> Result<DivisorClass> {
        Ok(DivisorClass(self.0.sub(&other.0)?))
    }

    pub fn neg(&self) -> DivisorClass {
        DivisorClass(self.0.neg())
    }
}

impl From<VecQ> for DivisorClass {
    fn from(v: VecQ) -> Self {
        DivisorClass(v)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Debug)]
pub enum Provenance {
    Raw,
    /// Blow-up of the plane in general points (degree 9 is the plane itself).
    DelPezzo(u8),
    /// Smooth quadric surface, degree 8.
    Quadric,
    Toric(Arc<Fan>),
}

/// A variety presented by its Néron-Severi lattice.
#[derive(Clone, Debug)]
pub struct VarietyModel {
    name: String,
    canonical: DivisorClass,
    eff_cone: Arc<ConeQ>,
    intersection_form: Option<MatQ>,
    provenance: Provenance,
}

impl VarietyModel {
    /// Checks the dimensions, strictness of the effective cone and, if
    /// present, that the intersection form is symmetric of signature
    /// `(1, rank - 1)`.
    pub fn new(
        name: impl Into<String>,
        canonical: DivisorClass,
        eff_cone: ConeQ,
        intersection_form: Option<MatQ>,
        provenance: Provenance,
    ) -> Result<Self> {
        let rank = eff_cone.ambient_dim();
        if canonical.dim() != rank {
            return Err(Error::InvalidModel(format!(
                "canonical class has dimension {}, lattice rank is {rank}",
                canonical.dim()
            )));
        }
        if eff_cone.generators().is_empty() {
            return Err(Error::InvalidModel(
                "effective cone has no generators".into(),
            ));
        }
        if !eff_cone.is_strict() {
            return Err(Error::InvalidModel("effective cone contains a line".into()));
        }
        if let Some(form) = &intersection_form {
            if form.rows() != rank || form.cols() != rank {
                return Err(Error::InvalidModel(
                    "intersection form has wrong size".into(),
                ));
            }
            match form.inertia() {
                None => {
                    return Err(Error::InvalidModel(
                        "intersection form is not symmetric".into(),
                    ))
                }
                Some((1, neg, 0)) if neg + 1 == rank => {}
                Some(sig) => {
                    return Err(Error::InvalidModel(format!(
                        "intersection form has inertia {sig:?}, expected (1, {}, 0)",
                        rank - 1
                    )))
                }
            }
        }
        Ok(VarietyModel {
            name: name.into(),
            canonical,
            eff_cone: Arc::new(eff_cone),
            intersection_form,
            provenance,
        })
    }

    /// Raw model from integer data.
    pub fn lattice(
        name: impl Into<String>,
        canonical: &[i64],
        generators: &[&[i64]],
        intersection_form: Option<&[Vec<i64>]>,
    ) -> Result<Self> {
        let cone = ConeQ::from_int_rows(canonical.len(), generators)?;
        Self::new(
            name,
            DivisorClass::from_ints(canonical),
            cone,
            intersection_form.map(MatQ::from_int_rows),
            Provenance::Raw,
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ns_rank(&self) -> usize {
        self.eff_cone.ambient_dim()
    }

    pub fn canonical(&self) -> &DivisorClass {
        &self.canonical
    }

    pub fn anticanonical(&self) -> DivisorClass {
        self.canonical.neg()
    }

    pub fn eff_cone(&self) -> &ConeQ {
        &self.eff_cone
    }

    pub fn intersection_form(&self) -> Option<&MatQ> {
        self.intersection_form.as_ref()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn intersect(&self, a: &DivisorClass, b: &DivisorClass) -> Option<Rat> {
        let form = self.intersection_form.as_ref()?;
        form.bilinear(a.coords(), b.coords()).ok()
    }

    fn check_class(&self, class: &DivisorClass) -> Result<()> {
        if class.dim() != self.ns_rank() {
            return Err(Error::Linalg(
                crate::qlinalg::LinalgError::DimensionMismatch {
                    expected: self.ns_rank(),
                    found: class.dim(),
                },
            ));
        }
        Ok(())
    }

    /// Interior membership, by linear programming unless the facets of the
    /// effective cone have already been computed.
    pub fn is_big(&self, class: &DivisorClass) -> Result<bool> {
        self.check_class(class)?;
        Ok(self.eff_cone.locate(class.coords())? == Location::Inside)
    }

    pub fn is_pseudo_effective(&self, class: &DivisorClass) -> Result<bool> {
        self.check_class(class)?;
        Ok(self.eff_cone.locate(class.coords())? != Location::Outside)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FujitaResult {
    pub a: Rat,
    /// The adjoint divisor `a·L + K`, on the boundary of the effective cone.
    pub boundary_class: DivisorClass,
    /// Nonnegative weights on the effective cone generators summing to the
    /// boundary class.
    pub witness: VecQ,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BInvariantResult {
    pub b: usize,
    pub face: FaceQ,
    pub face_generators: Vec<DivisorClass>,
    pub fujita: FujitaResult,
}

/// `min { a : a·L + K ∈ Λ_eff }` for a big `L`.
pub fn fujita(model: &VarietyModel, bundle: &DivisorClass) -> Result<FujitaResult> {
    if !model.is_big(bundle)? {
        return Err(Error::NotBig);
    }
    let found = model
        .eff_cone
        .min_a_on_ray(model.canonical.coords(), bundle.coords())?;
    if !found.a.is_positive() {
        return Err(Error::KPseudoEffective { a: found.a });
    }
    let boundary = model
        .canonical
        .coords()
        .add_scaled(&found.a, bundle.coords())?;
    Ok(FujitaResult {
        a: found.a,
        boundary_class: DivisorClass(boundary),
        witness: found.witness,
    })
}

/// Above this many generators the minimal face is found by linear programming
/// instead of a facet enumeration.
pub const FACET_ENUMERATION_LIMIT: usize = 64;

/// Codimension of the minimal supported face containing `a·L + K`.
pub fn b_invariant(model: &VarietyModel, bundle: &DivisorClass) -> Result<BInvariantResult> {
    let fujita = fujita(model, bundle)?;
    let face = if fujita.boundary_class.is_zero() {
        FaceQ {
            active_facets: None,
            generators_in_face: Vec::new(),
            span_dim: 0,
        }
    } else if model.eff_cone.generators().len() > FACET_ENUMERATION_LIMIT {
        model
            .eff_cone
            .minimal_face_lp(fujita.boundary_class.coords())?
    } else {
        model
            .eff_cone
            .minimal_face(fujita.boundary_class.coords())?
    };
    let face_generators = face
        .generators_in_face
        .iter()
        .map(|&i| DivisorClass(model.eff_cone.generators()[i].clone()))
        .collect();
    Ok(BInvariantResult {
        b: model.ns_rank() - face.span_dim,
        face,
        face_generators,
        fujita,
    })
}

/// Whether `h^0(nD) = 1` for all `n ≥ 1`, decided by the Zariski
/// decomposition on surfaces with an intersection form and by the divisor
/// polytope on toric models.
pub fn is_rigid_class(model: &VarietyModel, class: &DivisorClass) -> Result<bool> {
    if !model.is_pseudo_effective(class)? {
        return Err(Error::NotPseudoEffective);
    }
    match (&model.provenance, &model.intersection_form) {
        (Provenance::Toric(fan), _) => toric::class_is_rigid(fan, class),
        (_, Some(_)) => {
            let zariski = delpezzo::zariski_on_model(model, class)?;
            Ok(zariski.positive.is_zero())
        }
        (_, None) => Err(Error::RigidityUndecidable),
    }
}

/// A uniruled subvariety `Y` together with the restriction `L|_Y`.
#[derive(Clone, Debug)]
pub struct SubvarietyDatum {
    pub name: String,
    pub model: VarietyModel,
    pub restricted_bundle: DivisorClass,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Balance {
    Balanced,
    WeaklyBalancedNotBalanced,
    NotWeaklyBalanced,
}

impl Balance {
    /// Lexicographic comparison of `(a_Y, b_Y)` against `(a_X, b_X)`.
    pub fn classify(pair_x: (&Rat, usize), pair_y: (&Rat, usize)) -> Balance {
        match pair_y.0.cmp(pair_x.0).then(pair_y.1.cmp(&pair_x.1)) {
            Ordering::Greater => Balance::NotWeaklyBalanced,
            Ordering::Equal => Balance::WeaklyBalancedNotBalanced,
            Ordering::Less => Balance::Balanced,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Balance::Balanced => "balanced",
            Balance::WeaklyBalancedNotBalanced => "weakly_balanced_not_balanced",
            Balance::NotWeaklyBalanced => "not_weakly_balanced",
        }
    }
}

impl fmt::Display for Balance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedVerdict {
    pub pair_x: (Rat, usize),
    pub pair_y: (Rat, usize),
    pub classification: Balance,
}

impl fmt::Display for BalancedVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "X: (a={}, b={})  Y: (a={}, b={})  {}",
            format_rat(&self.pair_x.0),
            self.pair_x.1,
            format_rat(&self.pair_y.0),
            self.pair_y.1,
            self.classification
        )
    }
}

pub fn balanced_verdict(
    model: &VarietyModel,
    bundle: &DivisorClass,
    sub: &SubvarietyDatum,
) -> Result<BalancedVerdict> {
    let x = b_invariant(model, bundle)?;
    if !sub.model.is_big(&sub.restricted_bundle)? {
        return Err(Error::BigFailureOnY {
            name: sub.name.clone(),
        });
    }
    let y = b_invariant(&sub.model, &sub.restricted_bundle)?;
    let classification = Balance::classify((&x.fujita.a, x.b), (&y.fujita.a, y.b));
    Ok(BalancedVerdict {
        pair_x: (x.fujita.a, x.b),
        pair_y: (y.fujita.a, y.b),
        classification,
    })
}

/// Linear pullback `NS(X) → NS(X̃)` of a birational morphism `X̃ → X`,
/// together with the exceptional classes on `X̃`.
#[derive(Clone, Debug)]
pub struct Pullback {
    /// `rank(X̃) × rank(X)` matrix; column `j` is the image of basis vector `j`.
    pub matrix: MatQ,
    pub exceptional: Vec<DivisorClass>,
}

impl Pullback {
    pub fn apply(&self, class: &DivisorClass) -> Result<DivisorClass> {
        Ok(DivisorClass(self.matrix.mul_vec(class.coords())?))
    }
}

/// Whether `(a, b)` agree for `(X, L)` and `(X̃, β^*L)`.
pub fn check_birational_invariance(
    model: &VarietyModel,
    blowup: &VarietyModel,
    pullback: &Pullback,
    bundle: &DivisorClass,
) -> Result<bool> {
    let (rows, cols) = (pullback.matrix.rows(), pullback.matrix.cols());
    if rows != blowup.ns_rank() || cols != model.ns_rank() {
        return Err(Error::IncompatibleModels(format!(
            "pullback is {rows}x{cols}, models have ranks {} and {}",
            blowup.ns_rank(),
            model.ns_rank()
        )));
    }
    if pullback
        .exceptional
        .iter()
        .any(|e| e.dim() != blowup.ns_rank())
    {
        return Err(Error::IncompatibleModels(
            "exceptional class dimension".into(),
        ));
    }
    // NS(X̃) = β^*NS(X) ⊕ span(E_i)
    let mut spanning: Vec<VecQ> = (0..cols).map(|j| pullback.matrix.column(j)).collect();
    spanning.extend(pullback.exceptional.iter().map(|e| e.coords().clone()));
    if crate::qlinalg::span_dim(rows, &spanning)? != rows || spanning.len() != rows {
        return Err(Error::IncompatibleModels(
            "pullback and exceptional classes do not form a basis".into(),
        ));
    }
    // K̃ - β^*K must be a nonnegative combination of exceptional classes.
    let discrepancy = blowup.canonical.sub(&pullback.apply(&model.canonical)?)?;
    let exceptional: Vec<VecQ> = pullback
        .exceptional
        .iter()
        .map(|e| e.coords().clone())
        .collect();
    if !discrepancy.is_zero()
        && lp::nonnegative_combination(&exceptional, discrepancy.coords())?.is_none()
    {
        return Err(Error::IncompatibleModels(
            "canonical classes differ by a non-effective exceptional combination".into(),
        ));
    }
    let lifted = pullback.apply(bundle)?;
    let below = b_invariant(model, bundle)?;
    let above = b_invariant(blowup, &lifted)?;
    Ok(below.fujita.a == above.fujita.a && below.b == above.b)
}

/// `(a, b)` pair for a model and bundle.
pub fn ab_pair(model: &VarietyModel, bundle: &DivisorClass) -> Result<(Rat, usize)> {
    let r = b_invariant(model, bundle)?;
    Ok((r.fujita.a, r.b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::{int, rat};

    fn cubic_threefold() -> VarietyModel {
        VarietyModel::lattice("cubic threefold", &[-2], &[&[1]], None).unwrap()
    }

    fn line() -> VarietyModel {
        VarietyModel::lattice("line", &[-2], &[&[1]], None).unwrap()
    }

    fn blown_up_plane() -> VarietyModel {
        VarietyModel::lattice(
            "Bl1P2",
            &[-3, 1],
            &[&[0, 1], &[1, -1]],
            Some(&[vec![1, 0], vec![0, -1]]),
        )
        .unwrap()
    }

    #[test]
    fn cubic_threefold_invariants() {
        let x = cubic_threefold();
        let l = DivisorClass::from_ints(&[1]);
        let r = b_invariant(&x, &l).unwrap();
        assert_eq!(r.fujita.a, int(2));
        assert_eq!(r.b, 1);
        let anti = b_invariant(&x, &x.anticanonical()).unwrap();
        assert_eq!(anti.fujita.a, int(1));
        assert_eq!(anti.b, 1);
    }

    #[test]
    fn blown_up_plane_adjoint() {
        let x = blown_up_plane();
        let l = DivisorClass::from_ints(&[2, -1]);
        let r = b_invariant(&x, &l).unwrap();
        assert_eq!(r.fujita.a, int(2));
        assert_eq!(r.fujita.boundary_class, DivisorClass::from_ints(&[1, -1]));
        assert_eq!(r.b, 1);
        assert_eq!(r.face_generators, vec![DivisorClass::from_ints(&[1, -1])]);
    }

    #[test]
    fn scaling_divides_a() {
        let x = blown_up_plane();
        let l = DivisorClass::from_ints(&[2, -1]);
        let base = b_invariant(&x, &l).unwrap();
        for c in [rat(1, 3), int(2), rat(7, 5)] {
            let scaled = b_invariant(&x, &l.scale(&c)).unwrap();
            assert_eq!(scaled.fujita.a, &base.fujita.a / &c);
            assert_eq!(scaled.b, base.b);
            assert_eq!(scaled.fujita.boundary_class, base.fujita.boundary_class);
        }
    }

    #[test]
    fn not_big_and_k_effective() {
        let x = blown_up_plane();
        assert_eq!(
            fujita(&x, &DivisorClass::from_ints(&[1, -1])),
            Err(Error::NotBig)
        );
        // a surface whose canonical class is effective
        let general = VarietyModel::lattice("K effective", &[1], &[&[1]], None).unwrap();
        assert!(matches!(
            fujita(&general, &DivisorClass::from_ints(&[1])),
            Err(Error::KPseudoEffective { .. })
        ));
    }

    #[test]
    fn verdict_on_cubic_threefold_line() {
        let x = cubic_threefold();
        let y = SubvarietyDatum {
            name: "line".into(),
            model: line(),
            restricted_bundle: DivisorClass::from_ints(&[1]),
        };
        let v = balanced_verdict(&x, &DivisorClass::from_ints(&[1]), &y).unwrap();
        assert_eq!(v.classification, Balance::WeaklyBalancedNotBalanced);
        let not_big = SubvarietyDatum {
            restricted_bundle: DivisorClass::from_ints(&[0]),
            ..y
        };
        assert!(matches!(
            balanced_verdict(&x, &DivisorClass::from_ints(&[1]), &not_big),
            Err(Error::BigFailureOnY { .. })
        ));
    }

    #[test]
    fn classification_is_lexicographic() {
        assert_eq!(
            Balance::classify((&int(1), 2), (&int(1), 7)),
            Balance::NotWeaklyBalanced
        );
        assert_eq!(
            Balance::classify((&int(1), 2), (&rat(1, 2), 7)),
            Balance::Balanced
        );
        assert_eq!(
            Balance::classify((&int(1), 2), (&int(2), 1)),
            Balance::NotWeaklyBalanced
        );
        assert_eq!(
            Balance::classify((&int(1), 2), (&int(1), 2)),
            Balance::WeaklyBalancedNotBalanced
        );
    }

    #[test]
    fn rigidity_on_blown_up_plane() {
        let x = blown_up_plane();
        assert!(is_rigid_class(&x, &DivisorClass::from_ints(&[0, 1])).unwrap());
        assert!(!is_rigid_class(&x, &DivisorClass::from_ints(&[1, -1])).unwrap());
        let p2 = VarietyModel::lattice("P2", &[-3], &[&[1]], Some(&[vec![1]])).unwrap();
        assert!(!is_rigid_class(&p2, &DivisorClass::from_ints(&[1])).unwrap());
        assert_eq!(
            is_rigid_class(&cubic_threefold(), &DivisorClass::from_ints(&[1])),
            Err(Error::RigidityUndecidable)
        );
    }

    #[test]
    fn plane_versus_blown_up_plane() {
        let p2 = VarietyModel::lattice("P2", &[-3], &[&[1]], Some(&[vec![1]])).unwrap();
        let bl = blown_up_plane();
        let pullback = Pullback {
            matrix: MatQ::from_int_rows(&[vec![1], vec![0]]),
            exceptional: vec![DivisorClass::from_ints(&[0, 1])],
        };
        let l = DivisorClass::from_ints(&[1]);
        assert!(check_birational_invariance(&p2, &bl, &pullback, &l).unwrap());
        assert_eq!(ab_pair(&p2, &l).unwrap(), (int(3), 1));
        assert_eq!(
            ab_pair(&bl, &pullback.apply(&l).unwrap()).unwrap(),
            (int(3), 1)
        );
        // identity on itself
        let id = Pullback {
            matrix: MatQ::identity(2),
            exceptional: vec![],
        };
        assert!(
            check_birational_invariance(&bl, &bl, &id, &DivisorClass::from_ints(&[3, -1])).unwrap()
        );
        let bad = Pullback {
            matrix: MatQ::identity(1),
            exceptional: vec![],
        };
        assert!(matches!(
            check_birational_invariance(&p2, &bl, &bad, &l),
            Err(Error::IncompatibleModels(_))
        ));
    }

    #[test]
    fn invalid_models_are_rejected() {
        assert!(
            VarietyModel::lattice("line in cone", &[0, 0], &[&[1, 0], &[-1, 0]], None).is_err()
        );
        assert!(VarietyModel::lattice(
            "bad form",
            &[-3, 1],
            &[&[0, 1], &[1, -1]],
            Some(&[vec![1, 0], vec![0, 1]])
        )
        .is_err());
        assert!(VarietyModel::lattice("bad K", &[-3], &[&[0, 1], &[1, -1]], None).is_err());
    }
}
