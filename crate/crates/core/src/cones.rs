//! Finitely generated rational polyhedral cones.
//!
//! A [`ConeQ`] is given by generators and carries its dual description
//! (facet normals plus equations) computed on demand by the double
//! description method. Membership, minimal faces and ray minimization are
//! available both through the facets and through exact linear programs.
//!
//! For finitely generated cones extremal and supported faces coincide, so
//! only supported faces (cut out by facet normals) are modelled.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::lp::{self, LpOutcome};
use crate::qlinalg::{self, LinalgError, MatQ, Rat, VecQ};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("point lies outside the cone")]
    OutsideCone,
    #[error("cone contains a line")]
    NonStrictCone,
    #[error("the ray never meets the cone")]
    Infeasible,
    #[error("the ray stays in the cone as the parameter goes to -infinity")]
    UnboundedBelow,
}

/// Position of a point relative to a cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Location {
    /// Interior of the cone in the ambient space.
    Inside,
    Boundary,
    Outside,
}

/// Dual description: `c = {v : <e, v> = 0 ∀e ∈ equations, <f, v> ≥ 0 ∀f ∈ facets}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualDescription {
    pub equations: Vec<VecQ>,
    pub facets: Vec<VecQ>,
}

#[derive(Debug)]
pub struct ConeQ {
    ambient_dim: usize,
    generators: Vec<VecQ>,
    dual: OnceLock<DualDescription>,
    lineality: OnceLock<Vec<usize>>,
}

impl Clone for ConeQ {
    fn clone(&self) -> Self {
        ConeQ {
            ambient_dim: self.ambient_dim,
            generators: self.generators.clone(),
            dual: self.dual.clone(),
            lineality: self.lineality.clone(),
        }
    }
}

impl PartialEq for ConeQ {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.generators == other.generators
    }
}

/// `<f, w>` for an integral functional `f` (facet normals and equations are
/// stored as primitive integer vectors).
fn integral_dot(f: &VecQ, w: &[BigInt]) -> BigInt {
    f.entries()
        .iter()
        .zip(w)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .inspect(|(a, _)| debug_assert!(a.denom() == &BigInt::from(1)))
        .map(|(a, b)| a.numer() * b)
        .sum()
}

/// A face of a parent cone, recorded by indices into the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceQ {
    /// Facets of the parent vanishing on the face; `None` when the face was
    /// found without the dual description.
    pub active_facets: Option<Vec<usize>>,
    pub generators_in_face: Vec<usize>,
    pub span_dim: usize,
}

/// Result of minimizing `a` with `base + a·dir` in the cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayMinimum {
    pub a: Rat,
    /// Nonnegative coefficients on the generators reproducing `base + a·dir`.
    pub witness: VecQ,
}

impl ConeQ {
    /// Generators are normalized to primitive integer vectors; zero vectors
    /// and duplicates are dropped, first occurrence order is kept.
    pub fn new(ambient_dim: usize, generators: Vec<VecQ>) -> Result<Self, ConeError> {
        let mut normalized: Vec<VecQ> = Vec::with_capacity(generators.len());
        for g in generators {
            if g.dim() != ambient_dim {
                return Err(LinalgError::DimensionMismatch {
                    expected: ambient_dim,
                    found: g.dim(),
                }
                .into());
            }
            if g.is_zero() {
                continue;
            }
            let p = g.primitive();
            if !normalized.contains(&p) {
                normalized.push(p);
            }
        }
        Ok(ConeQ {
            ambient_dim,
            generators: normalized,
            dual: OnceLock::new(),
            lineality: OnceLock::new(),
        })
    }

    pub fn from_int_rows(ambient_dim: usize, rows: &[&[i64]]) -> Result<Self, ConeError> {
        Self::new(
            ambient_dim,
            rows.iter().map(|r| VecQ::from_ints(r)).collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[VecQ] {
        &self.generators
    }

    /// Dimension of the linear span of the cone.
    pub fn dim(&self) -> usize {
        self.ambient_dim - self.dual().equations.len()
    }

    pub fn is_full_dimensional(&self) -> bool {
        qlinalg::span_dim(self.ambient_dim, &self.generators).expect("generator dims")
            == self.ambient_dim
    }

    pub fn dual(&self) -> &DualDescription {
        self.dual
            .get_or_init(|| dualize_generators(self.ambient_dim, &self.generators))
    }

    pub fn facets(&self) -> &[VecQ] {
        &self.dual().facets
    }

    pub fn equations(&self) -> &[VecQ] {
        &self.dual().equations
    }

    /// Indices of generators lying in the lineality space.
    fn lineality_generators(&self) -> &[usize] {
        self.lineality
            .get_or_init(|| lineality_support(self.ambient_dim, &self.generators))
    }

    pub fn lineality_dim(&self) -> usize {
        let gens: Vec<VecQ> = self
            .lineality_generators()
            .iter()
            .map(|&i| self.generators[i].clone())
            .collect();
        qlinalg::span_dim(self.ambient_dim, &gens).expect("generator dims")
    }

    pub fn is_strict(&self) -> bool {
        self.lineality_generators().is_empty()
    }

    fn check_point(&self, v: &VecQ) -> Result<(), ConeError> {
        if v.dim() != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.dim(),
            }
            .into());
        }
        Ok(())
    }

    /// Classifies `v` by the signs of the facet functionals.
    pub fn contains(&self, v: &VecQ) -> Result<Location, ConeError> {
        self.check_point(v)?;
        let dual = self.dual();
        let w = v.primitive_integer();
        for e in &dual.equations {
            if !integral_dot(e, &w).is_zero() {
                return Ok(Location::Outside);
            }
        }
        let mut strict = dual.equations.is_empty();
        for f in &dual.facets {
            let s = integral_dot(f, &w);
            if s.is_negative() {
                return Ok(Location::Outside);
            }
            if s.is_zero() {
                strict = false;
            }
        }
        Ok(if strict {
            Location::Inside
        } else {
            Location::Boundary
        })
    }

    /// Uses the facets if they are already known, linear programs otherwise.
    pub fn locate(&self, v: &VecQ) -> Result<Location, ConeError> {
        if self.dual.get().is_some() {
            self.contains(v)
        } else {
            self.contains_lp(v)
        }
    }

    /// Classifies `v` with linear programs over the generators only.
    pub fn contains_lp(&self, v: &VecQ) -> Result<Location, ConeError> {
        self.check_point(v)?;
        if lp::nonnegative_combination(&self.generators, v)?.is_none() {
            return Ok(Location::Outside);
        }
        if !self.is_full_dimensional() {
            return Ok(Location::Boundary);
        }
        // v is interior iff v - t·s stays in the cone for some t > 0, where
        // s (the generator sum) is interior.
        let k = self.generators.len();
        let interior = self
            .generators
            .iter()
            .try_fold(VecQ::zeros(self.ambient_dim), |acc, g| acc.add(g))?;
        let mut columns = self.generators.clone();
        columns.push(interior);
        let a = MatQ::from_rows(self.ambient_dim, &columns)?.transpose();
        let mut cost = VecQ::zeros(k + 1).into_entries();
        cost[k] = -Rat::from_integer(1.into());
        let outcome = lp::minimize(&a, v, &VecQ::new(cost))?;
        let t_positive = match outcome {
            LpOutcome::Unbounded => true,
            LpOutcome::Optimal { value, .. } => value.is_negative(),
            LpOutcome::Infeasible => unreachable!("t = 0 is feasible"),
        };
        Ok(if t_positive {
            Location::Inside
        } else {
            Location::Boundary
        })
    }

    /// Minimal supported face containing `v`: the cut of all facets
    /// vanishing at `v`. The zero vector yields the face `{0}`.
    pub fn minimal_face(&self, v: &VecQ) -> Result<FaceQ, ConeError> {
        self.check_point(v)?;
        if !self.is_strict() {
            return Err(ConeError::NonStrictCone);
        }
        if self.contains(v)? == Location::Outside {
            return Err(ConeError::OutsideCone);
        }
        let facets = self.facets();
        let w = v.primitive_integer();
        let active: Vec<usize> = (0..facets.len())
            .filter(|&i| integral_dot(&facets[i], &w).is_zero())
            .collect();
        let mut in_face = Vec::new();
        for (j, g) in self.generators.iter().enumerate() {
            let g = g.primitive_integer();
            if active
                .iter()
                .all(|&i| integral_dot(&facets[i], &g).is_zero())
            {
                in_face.push(j);
            }
        }
        let span_dim = self.span_of(&in_face);
        Ok(FaceQ {
            active_facets: Some(active),
            generators_in_face: in_face,
            span_dim,
        })
    }

    /// Minimal face via linear programs: a generator belongs to it iff it
    /// carries positive weight in some representation of `v`.
    pub fn minimal_face_lp(&self, v: &VecQ) -> Result<FaceQ, ConeError> {
        self.check_point(v)?;
        if !self.is_strict() {
            return Err(ConeError::NonStrictCone);
        }
        let k = self.generators.len();
        let a = MatQ::from_rows(self.ambient_dim, &self.generators)?.transpose();
        let mut in_face = vec![false; k];
        loop {
            let cost: Vec<Rat> = (0..k)
                .map(|i| {
                    if in_face[i] {
                        Rat::zero()
                    } else {
                        -Rat::from_integer(1.into())
                    }
                })
                .collect();
            match lp::minimize(&a, v, &VecQ::new(cost))? {
                LpOutcome::Infeasible => return Err(ConeError::OutsideCone),
                LpOutcome::Unbounded => return Err(ConeError::NonStrictCone),
                LpOutcome::Optimal { x, value } => {
                    if value.is_zero() {
                        break;
                    }
                    for i in 0..k {
                        if x[i].is_positive() {
                            in_face[i] = true;
                        }
                    }
                }
            }
        }
        let in_face: Vec<usize> = (0..k).filter(|&i| in_face[i]).collect();
        let span_dim = self.span_of(&in_face);
        Ok(FaceQ {
            active_facets: None,
            generators_in_face: in_face,
            span_dim,
        })
    }

    fn span_of(&self, indices: &[usize]) -> usize {
        let gens: Vec<VecQ> = indices
            .iter()
            .map(|&i| self.generators[i].clone())
            .collect();
        qlinalg::span_dim(self.ambient_dim, &gens).expect("generator dims")
    }

    /// Least `a` with `base + a·dir` in the cone, by an exact LP over
    /// `base + a·dir = Σ λ_i g_i`, `λ ≥ 0`, `a` free.
    pub fn min_a_on_ray(&self, base: &VecQ, dir: &VecQ) -> Result<RayMinimum, ConeError> {
        self.check_point(base)?;
        self.check_point(dir)?;
        let k = self.generators.len();
        // columns: a+, a-, λ_1..λ_k ; rows: a·dir - Σλ g = -base
        let mut columns = vec![dir.clone(), dir.neg()];
        columns.extend(self.generators.iter().map(VecQ::neg));
        let a = MatQ::from_rows(self.ambient_dim, &columns)?.transpose();
        let mut cost = vec![Rat::zero(); k + 2];
        cost[0] = Rat::from_integer(1.into());
        cost[1] = -Rat::from_integer(1.into());
        match lp::minimize(&a, &base.neg(), &VecQ::new(cost))? {
            LpOutcome::Infeasible => Err(ConeError::Infeasible),
            LpOutcome::Unbounded => Err(ConeError::UnboundedBelow),
            LpOutcome::Optimal { x, value } => Ok(RayMinimum {
                a: value,
                witness: VecQ::new(x.entries()[2..].to_vec()),
            }),
        }
    }
}

/// Facet normals and equations of `cone(generators)`.
pub fn dualize(cone: &ConeQ) -> DualDescription {
    cone.dual().clone()
}

fn lineality_support(dim: usize, generators: &[VecQ]) -> Vec<usize> {
    // Support of any λ ≥ 0 with Σ λ g = 0 lies in the lineality space, and
    // every generator of the lineality space occurs in some such λ.
    let k = generators.len();
    if k == 0 {
        return Vec::new();
    }
    let mut rows: Vec<VecQ> = (0..dim)
        .map(|r| VecQ::new(generators.iter().map(|g| g[r].clone()).collect()))
        .collect();
    // Σλ ≤ 1 via a slack column
    rows.iter_mut().for_each(|row| {
        let mut e = row.clone().into_entries();
        e.push(Rat::zero());
        *row = VecQ::new(e);
    });
    let mut cap = vec![Rat::from_integer(1.into()); k];
    cap.push(Rat::from_integer(1.into()));
    rows.push(VecQ::new(cap));
    let a = MatQ::from_rows(k + 1, &rows).expect("rows have k + 1 entries");
    let mut rhs = vec![Rat::zero(); dim];
    rhs.push(Rat::from_integer(1.into()));
    let rhs = VecQ::new(rhs);
    let mut found = vec![false; k];
    loop {
        let mut cost: Vec<Rat> = (0..k)
            .map(|i| {
                if found[i] {
                    Rat::zero()
                } else {
                    -Rat::from_integer(1.into())
                }
            })
            .collect();
        cost.push(Rat::zero());
        match lp::minimize(&a, &rhs, &VecQ::new(cost)).expect("dims agree") {
            LpOutcome::Optimal { x, value } if value.is_negative() => {
                for i in 0..k {
                    if x[i].is_positive() {
                        found[i] = true;
                    }
                }
            }
            _ => break,
        }
    }
    (0..k).filter(|&i| found[i]).collect()
}

fn dualize_generators(dim: usize, generators: &[VecQ]) -> DualDescription {
    let mut constraints: Vec<Vec<BigInt>> =
        generators.iter().map(VecQ::primitive_integer).collect();
    constraints.sort();
    let (lineality, rays) = double_description(dim, &constraints);

    // Equations span the orthogonal complement of span(cone), which is the
    // lineality space of the dual cone.
    let lineality: Vec<VecQ> = lineality.iter().map(|l| VecQ::from_bigints(l)).collect();
    let equations: Vec<VecQ> = if lineality.is_empty() {
        Vec::new()
    } else {
        let m = MatQ::from_rows(dim, &lineality).expect("lineality dims");
        let (rref, pivots) = m.rref();
        (0..pivots.len()).map(|i| rref.row(i).primitive()).collect()
    };
    let mut facets: Vec<VecQ> = rays
        .iter()
        .map(|r| {
            let r = VecQ::from_bigints(r);
            let along = qlinalg::project_onto_span(&r, &lineality).expect("dims");
            r.sub(&along).expect("dims").primitive()
        })
        .filter(|f| !f.is_zero())
        .collect();
    facets.sort_by_key(|f| f.primitive_integer());
    facets.dedup();
    DualDescription { equations, facets }
}

/// Bit set over constraint indices.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn new(len: usize) -> Self {
        ZeroSet(vec![0; len.div_ceil(64).max(1)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersect(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset_of(&self, other: &ZeroSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
}

fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn make_primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    use num_integer::Integer;
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g == BigInt::from(1) {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

/// Double description for `{x ∈ Q^dim : <a_i, x> ≥ 0}` with constraints
/// inserted in the given order. Returns a lineality basis and the extreme
/// rays of the pointed part, all as primitive integer vectors.
fn double_description(
    dim: usize,
    constraints: &[Vec<BigInt>],
) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let n_cons = constraints.len();
    let mut lineality: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::from(1);
            e
        })
        .collect();
    let mut rays: Vec<(Vec<BigInt>, ZeroSet)> = Vec::new();
    let mut processed = ZeroSet::new(n_cons);

    for (ci, a) in constraints.iter().enumerate() {
        if let Some(pos) = lineality.iter().position(|l| !dot_int(a, l).is_zero()) {
            let mut l0 = lineality.swap_remove(pos);
            let mut s0 = dot_int(a, &l0);
            if s0.is_negative() {
                l0.iter_mut().for_each(|x| *x = -x.clone());
                s0 = -s0;
            }
            for l in lineality.iter_mut() {
                let s = dot_int(a, l);
                if !s.is_zero() {
                    let combined = l.iter().zip(&l0).map(|(x, y)| &s0 * x - &s * y).collect();
                    *l = make_primitive(combined);
                }
            }
            for (r, z) in rays.iter_mut() {
                let s = dot_int(a, r);
                if !s.is_zero() {
                    let combined = r.iter().zip(&l0).map(|(x, y)| &s0 * x - &s * y).collect();
                    *r = make_primitive(combined);
                }
                z.insert(ci);
            }
            // l0 vanishes on every earlier constraint
            rays.push((l0, processed.clone()));
            processed.insert(ci);
            continue;
        }

        let values: Vec<BigInt> = rays.iter().map(|(r, _)| dot_int(a, r)).collect();
        let plus: Vec<usize> = (0..rays.len())
            .filter(|&i| values[i].is_positive())
            .collect();
        let minus: Vec<usize> = (0..rays.len())
            .filter(|&i| values[i].is_negative())
            .collect();
        let pointed_dim = dim - lineality.len();
        let mut fresh: Vec<(Vec<BigInt>, ZeroSet)> = Vec::new();
        for &p in &plus {
            for &m in &minus {
                let common = rays[p].1.intersect(&rays[m].1);
                if pointed_dim >= 2 && (common.count() as usize) + 2 < pointed_dim {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, (_, z))| k == p || k == m || !common.is_subset_of(z));
                if !adjacent {
                    continue;
                }
                let (vp, vm) = (&values[p], &values[m]);
                let combined = rays[m]
                    .0
                    .iter()
                    .zip(&rays[p].0)
                    .map(|(x, y)| vp * x - vm * y)
                    .collect();
                let mut z = common;
                z.insert(ci);
                fresh.push((make_primitive(combined), z));
            }
        }
        let mut next: Vec<(Vec<BigInt>, ZeroSet)> = Vec::with_capacity(rays.len() + fresh.len());
        for (i, (r, mut z)) in rays.into_iter().enumerate() {
            if values[i].is_negative() {
                continue;
            }
            if values[i].is_zero() {
                z.insert(ci);
            }
            next.push((r, z));
        }
        next.extend(fresh);
        rays = next;
        processed.insert(ci);
    }
    (lineality, rays.into_iter().map(|(r, _)| r).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::{int, rat};

    fn orthant() -> ConeQ {
        ConeQ::from_int_rows(2, &[&[1, 0], &[0, 1]]).unwrap()
    }

    #[test]
    fn orthant_facets() {
        assert_eq!(
            orthant().facets(),
            &[VecQ::from_ints(&[0, 1]), VecQ::from_ints(&[1, 0])]
        );
    }

    #[test]
    fn redundant_generator_does_not_add_facets() {
        let c = ConeQ::from_int_rows(2, &[&[1, 0], &[1, 1], &[0, 1]]).unwrap();
        assert_eq!(c.facets(), orthant().facets());
    }

    #[test]
    fn contains_examples() {
        let c = orthant();
        assert_eq!(
            c.contains(&VecQ::from_ints(&[1, 1])).unwrap(),
            Location::Inside
        );
        assert_eq!(
            c.contains(&VecQ::from_ints(&[1, 0])).unwrap(),
            Location::Boundary
        );
        assert_eq!(
            c.contains(&VecQ::from_ints(&[-1, 2])).unwrap(),
            Location::Outside
        );
        assert!(c.contains(&VecQ::from_ints(&[1])).is_err());
    }

    #[test]
    fn minimal_face_examples() {
        let c = orthant();
        let zero = c.minimal_face(&VecQ::from_ints(&[0, 0])).unwrap();
        assert_eq!(zero.span_dim, 0);
        assert!(zero.generators_in_face.is_empty());
        let ray = c.minimal_face(&VecQ::from_ints(&[3, 0])).unwrap();
        assert_eq!(ray.span_dim, 1);
        assert_eq!(ray.generators_in_face, vec![0]);
        assert_eq!(
            c.minimal_face(&VecQ::from_ints(&[-1, 0])),
            Err(ConeError::OutsideCone)
        );
    }

    #[test]
    fn minimal_face_on_blown_up_plane() {
        // basis (H, E): generators E and H - E
        let c = ConeQ::from_int_rows(2, &[&[0, 1], &[1, -1]]).unwrap();
        let face = c.minimal_face(&VecQ::from_ints(&[1, -1])).unwrap();
        assert_eq!(face.generators_in_face, vec![1]);
        assert_eq!(face.span_dim, 1);
        assert_eq!(c.ambient_dim() - face.span_dim, 1);
    }

    #[test]
    fn min_a_examples() {
        let a = orthant()
            .min_a_on_ray(&VecQ::from_ints(&[-3, -3]), &VecQ::from_ints(&[1, 1]))
            .unwrap();
        assert_eq!(a.a, int(3));

        let p2 = ConeQ::from_int_rows(1, &[&[1]]).unwrap();
        let a = p2
            .min_a_on_ray(&VecQ::from_ints(&[-3]), &VecQ::from_ints(&[1]))
            .unwrap();
        assert_eq!(a.a, int(3));

        let bl = ConeQ::from_int_rows(2, &[&[0, 1], &[1, -1]]).unwrap();
        let a = bl
            .min_a_on_ray(&VecQ::from_ints(&[-3, 1]), &VecQ::from_ints(&[2, -1]))
            .unwrap();
        assert_eq!(a.a, int(2));
        assert_eq!(
            bl.contains(&VecQ::from_ints(&[1, -1])).unwrap(),
            Location::Boundary
        );
    }

    #[test]
    fn min_a_errors() {
        let c = orthant();
        assert_eq!(
            c.min_a_on_ray(&VecQ::from_ints(&[-1, 0]), &VecQ::from_ints(&[0, 1])),
            Err(ConeError::Infeasible)
        );
        assert_eq!(
            c.min_a_on_ray(&VecQ::from_ints(&[1, 1]), &VecQ::from_ints(&[-1, 0])),
            Err(ConeError::UnboundedBelow)
        );
    }

    #[test]
    fn strictness() {
        assert!(orthant().is_strict());
        let line = ConeQ::from_int_rows(2, &[&[1, 0], &[-1, 0]]).unwrap();
        assert!(!line.is_strict());
        assert_eq!(line.lineality_dim(), 1);
        let half = ConeQ::from_int_rows(2, &[&[1, 0], &[-1, 0], &[0, 1]]).unwrap();
        assert_eq!(half.lineality_dim(), 1);
        assert_eq!(half.facets(), &[VecQ::from_ints(&[0, 1])]);
        assert_eq!(
            half.minimal_face(&VecQ::from_ints(&[0, 1])),
            Err(ConeError::NonStrictCone)
        );
    }

    #[test]
    fn lower_dimensional_cone_has_equations() {
        let c = ConeQ::from_int_rows(3, &[&[1, 0, 0], &[0, 1, 0]]).unwrap();
        assert_eq!(c.equations(), &[VecQ::from_ints(&[0, 0, 1])]);
        assert_eq!(c.facets().len(), 2);
        assert_eq!(c.dim(), 2);
        assert_eq!(
            c.contains(&VecQ::from_ints(&[1, 1, 0])).unwrap(),
            Location::Boundary
        );
        assert_eq!(
            c.contains(&VecQ::from_ints(&[1, 1, 1])).unwrap(),
            Location::Outside
        );
        assert_eq!(
            c.contains_lp(&VecQ::from_ints(&[1, 1, 0])).unwrap(),
            Location::Boundary
        );
    }

    #[test]
    fn lp_and_facet_routes_agree_on_small_cone() {
        let c =
            ConeQ::from_int_rows(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, -1]]).unwrap();
        for x in -2..=2 {
            for y in -2..=2 {
                for z in -2..=2 {
                    let v = VecQ::new(vec![int(x), rat(y, 2), int(z)]);
                    assert_eq!(c.contains(&v).unwrap(), c.contains_lp(&v).unwrap(), "{v}");
                    if c.contains(&v).unwrap() != Location::Outside {
                        let f = c.minimal_face(&v).unwrap();
                        let g = c.minimal_face_lp(&v).unwrap();
                        assert_eq!(f.generators_in_face, g.generators_in_face);
                    }
                }
            }
        }
    }
}
