//! Complete simplicial toric varieties given by fans.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cones::ConeQ;
use crate::error::{Error, Result};
use crate::invariants::{self, DivisorClass, Provenance, VarietyModel};
use crate::lp::{self, LpOutcome};
use crate::qlinalg::{int, span_dim, MatQ, Rat, Solution, VecQ};

/// Number of fixed sample directions in the completeness check.
pub const SAMPLE_DIRECTIONS: usize = 27;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FanChecks {
    /// Exact completeness (facet pairing across opposite sides plus the
    /// covering degree) and the terminality box test.
    pub strict: bool,
}

/// The quotient `Z^rays / M` in a fixed basis: the classes of the rays not
/// in a distinguished maximal cone.
#[derive(Clone, Debug)]
pub struct NsPresentation {
    pub ns_rank: usize,
    pub distinguished_cone: usize,
    pub basis_rays: Vec<usize>,
    /// `ns_rank × rays` matrix of the class map.
    pub class_matrix: MatQ,
}

#[derive(Clone, Debug)]
pub struct Fan {
    lattice_dim: usize,
    rays: Vec<Vec<i64>>,
    max_cones: Vec<Vec<usize>>,
    smooth: bool,
    presentation: OnceLock<NsPresentation>,
}

impl PartialEq for Fan {
    fn eq(&self, other: &Fan) -> bool {
        self.lattice_dim == other.lattice_dim
            && self.rays == other.rays
            && self.max_cones == other.max_cones
    }
}

impl Eq for Fan {}

fn ray_vec(ray: &[i64]) -> VecQ {
    VecQ::from_ints(ray)
}

fn det_i64(rows: &[&[i64]]) -> Rat {
    let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    let m = MatQ::from_int_rows(&rows);
    determinant(&m)
}

fn determinant(m: &MatQ) -> Rat {
    let n = m.rows();
    let mut a: Vec<Vec<Rat>> = m
        .row_vectors()
        .into_iter()
        .map(|r| r.into_entries())
        .collect();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        det *= &a[col][col];
        for r in col + 1..n {
            let f = &a[r][col] / &a[col][col];
            if f.is_zero() {
                continue;
            }
            let (top, rest) = a.split_at_mut(r);
            for (x, p) in rest[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= &f * p;
            }
        }
    }
    det
}

impl Fan {
    /// Validates with the default (sampling) completeness check.
    pub fn new(lattice_dim: usize, rays: Vec<Vec<i64>>, max_cones: Vec<Vec<usize>>) -> Result<Fan> {
        Fan::with_checks(lattice_dim, rays, max_cones, FanChecks::default())
    }

    pub fn with_checks(
        lattice_dim: usize,
        rays: Vec<Vec<i64>>,
        max_cones: Vec<Vec<usize>>,
        checks: FanChecks,
    ) -> Result<Fan> {
        if lattice_dim == 0 {
            return Err(Error::InvalidFan(
                "lattice dimension must be positive".into(),
            ));
        }
        for (i, r) in rays.iter().enumerate() {
            if r.len() != lattice_dim {
                return Err(Error::InvalidFan(format!("ray {i} has length {}", r.len())));
            }
            let g = r.iter().fold(0i64, |g, x| g.gcd(x));
            if g != 1 {
                return Err(Error::InvalidFan(format!("ray {i} is not primitive")));
            }
            if rays[..i].contains(r) {
                return Err(Error::InvalidFan(format!("ray {i} is repeated")));
            }
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        let mut smooth = true;
        for cone in max_cones {
            let mut sorted = cone.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != cone.len() || sorted.iter().any(|&i| i >= rays.len()) {
                return Err(Error::InvalidFan(format!(
                    "bad ray indices in cone {cone:?}"
                )));
            }
            if sorted.len() != lattice_dim {
                return Err(Error::NonSimplicialCone(sorted));
            }
            let rows: Vec<&[i64]> = sorted.iter().map(|&i| rays[i].as_slice()).collect();
            let det = det_i64(&rows);
            if det.is_zero() {
                return Err(Error::NonSimplicialCone(sorted));
            }
            smooth &= det.abs().is_one();
            cones.push(sorted);
        }
        if cones.is_empty() {
            return Err(Error::IncompleteFan("no maximal cones".into()));
        }
        let fan = Fan {
            lattice_dim,
            rays,
            max_cones: cones,
            smooth,
            presentation: OnceLock::new(),
        };
        fan.check_facet_pairing(checks.strict)?;
        fan.check_samples(checks.strict)?;
        if checks.strict {
            fan.check_terminal()?;
        }
        Ok(fan)
    }

    pub fn lattice_dim(&self) -> usize {
        self.lattice_dim
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    pub fn is_smooth(&self) -> bool {
        self.smooth
    }

    pub fn ns_rank(&self) -> usize {
        self.rays.len() - self.lattice_dim
    }

    fn ray_matrix(&self, cone: &[usize]) -> MatQ {
        let rows: Vec<Vec<i64>> = cone.iter().map(|&i| self.rays[i].clone()).collect();
        MatQ::from_int_rows(&rows)
    }

    /// Coordinates of `v` in the basis of the cone's rays.
    fn cone_coordinates(&self, cone: &[usize], v: &VecQ) -> VecQ {
        match self.ray_matrix(cone).transpose().solve(v) {
            Ok(Solution::Unique(x)) => x,
            _ => unreachable!("simplicial cones have invertible ray matrices"),
        }
    }

    fn check_facet_pairing(&self, strict: bool) -> Result<()> {
        if self.lattice_dim == 1 {
            return Ok(());
        }
        let mut facets: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
        for (c, cone) in self.max_cones.iter().enumerate() {
            for (k, &dropped) in cone.iter().enumerate() {
                let mut facet = cone.clone();
                facet.remove(k);
                facets.entry(facet).or_default().push((c, dropped));
            }
        }
        for (facet, owners) in &facets {
            if owners.len() != 2 {
                return Err(Error::IncompleteFan(format!(
                    "facet {facet:?} lies in {} maximal cones",
                    owners.len()
                )));
            }
            if strict {
                // the two cones must lie on opposite sides of the facet
                let side = |ray: usize| {
                    let mut rows: Vec<&[i64]> =
                        facet.iter().map(|&i| self.rays[i].as_slice()).collect();
                    rows.push(&self.rays[ray]);
                    det_i64(&rows).signum()
                };
                if side(owners[0].1) == side(owners[1].1) {
                    return Err(Error::IncompleteFan(format!(
                        "cones {} and {} overlap across facet {facet:?}",
                        owners[0].0, owners[1].0
                    )));
                }
            }
        }
        Ok(())
    }

    /// Counts the maximal cones containing fixed generic directions. With
    /// `strict` set and facets paired across opposite sides, the covering
    /// number is constant off codimension two, so one generic direction
    /// with exactly one cone proves completeness.
    fn check_samples(&self, strict: bool) -> Result<()> {
        let n = self.lattice_dim;
        let mut tested = 0;
        for k in 0..SAMPLE_DIRECTIONS {
            let dir = sample_direction(n, k);
            let mut containing = 0;
            let mut generic = true;
            for cone in &self.max_cones {
                let x = self.cone_coordinates(cone, &dir);
                if x.entries().iter().any(|c| c.is_negative()) {
                    continue;
                }
                if x.entries().iter().any(|c| c.is_zero()) {
                    generic = false;
                    break;
                }
                containing += 1;
            }
            if !generic {
                continue;
            }
            tested += 1;
            if containing != 1 {
                return Err(Error::IncompleteFan(format!(
                    "direction {dir} lies in {containing} maximal cones"
                )));
            }
            if strict {
                return Ok(());
            }
        }
        if tested == 0 {
            return Err(Error::IncompleteFan("no generic sample direction".into()));
        }
        Ok(())
    }

    /// The only lattice points in `{Σ λ_i v_i : λ ≥ 0, Σ λ_i ≤ 1}` are the
    /// origin and the rays.
    fn check_terminal(&self) -> Result<()> {
        for cone in &self.max_cones {
            let m = self.ray_matrix(cone);
            if determinant(&m).abs().is_one() {
                continue;
            }
            // bounding box of the simplex spanned by 0 and the rays
            let n = self.lattice_dim;
            let lo: Vec<i64> = (0..n)
                .map(|j| cone.iter().map(|&i| self.rays[i][j]).min().unwrap().min(0))
                .collect();
            let hi: Vec<i64> = (0..n)
                .map(|j| cone.iter().map(|&i| self.rays[i][j]).max().unwrap().max(0))
                .collect();
            let mut point = lo.clone();
            loop {
                let is_vertex =
                    point.iter().all(|&x| x == 0) || cone.iter().any(|&i| self.rays[i] == point);
                if !is_vertex {
                    let x = self.cone_coordinates(cone, &VecQ::from_ints(&point));
                    let sum: Rat = x.entries().iter().sum();
                    if x.entries().iter().all(|c| !c.is_negative()) && sum <= Rat::one() {
                        return Err(Error::InvalidFan(format!(
                            "cone {cone:?} is not terminal: contains {point:?}"
                        )));
                    }
                }
                let mut j = 0;
                while j < n {
                    if point[j] < hi[j] {
                        point[j] += 1;
                        break;
                    }
                    point[j] = lo[j];
                    j += 1;
                }
                if j == n {
                    break;
                }
            }
        }
        Ok(())
    }

    /// Memoized class map. The distinguished cone is the first smooth
    /// maximal cone, or the first one if none is smooth; its dual basis
    /// `m_j` gives `D_{σ_j} = -Σ_{ρ∉σ} <m_j, v_ρ> D_ρ`.
    pub fn ns_presentation(&self) -> &NsPresentation {
        self.presentation.get_or_init(|| {
            let distinguished = self
                .max_cones
                .iter()
                .position(|c| determinant(&self.ray_matrix(c)).abs().is_one())
                .unwrap_or(0);
            let sigma = &self.max_cones[distinguished];
            let basis_rays: Vec<usize> = (0..self.rays.len())
                .filter(|i| !sigma.contains(i))
                .collect();
            let rank = basis_rays.len();
            let mut class_matrix = MatQ::zeros(rank, self.rays.len());
            let mut entries: Vec<Vec<Rat>> = vec![vec![Rat::zero(); self.rays.len()]; rank];
            for (row, &rho) in basis_rays.iter().enumerate() {
                entries[row][rho] = Rat::one();
                // coordinates of v_ρ in the basis of σ's rays are <m_j, v_ρ>
                let x = self.cone_coordinates(sigma, &ray_vec(&self.rays[rho]));
                for (j, &s) in sigma.iter().enumerate() {
                    entries[row][s] = -x[j].clone();
                }
            }
            if rank > 0 {
                let rows: Vec<VecQ> = entries.into_iter().map(VecQ::new).collect();
                class_matrix = MatQ::from_rows(self.rays.len(), &rows).expect("row lengths");
            }
            NsPresentation {
                ns_rank: rank,
                distinguished_cone: distinguished,
                basis_rays,
                class_matrix,
            }
        })
    }

    pub fn class_of(&self, d: &ToricDivisor) -> Result<DivisorClass> {
        self.class_of_rational(&d.to_rational())
    }

    pub fn class_of_rational(&self, coeffs: &[Rat]) -> Result<DivisorClass> {
        self.check_length(coeffs.len())?;
        let p = self.ns_presentation();
        Ok(DivisorClass::new(
            p.class_matrix.mul_vec(&VecQ::new(coeffs.to_vec()))?,
        ))
    }

    /// Invariant ℚ-divisor supported on the basis rays with the given class.
    pub fn lift_class(&self, class: &DivisorClass) -> Result<Vec<Rat>> {
        let p = self.ns_presentation();
        if class.dim() != p.ns_rank {
            return Err(Error::Linalg(
                crate::qlinalg::LinalgError::DimensionMismatch {
                    expected: p.ns_rank,
                    found: class.dim(),
                },
            ));
        }
        let mut coeffs = vec![Rat::zero(); self.rays.len()];
        for (k, &rho) in p.basis_rays.iter().enumerate() {
            coeffs[rho] = class.coords()[k].clone();
        }
        Ok(coeffs)
    }

    fn check_length(&self, len: usize) -> Result<()> {
        if len != self.rays.len() {
            return Err(Error::Linalg(
                crate::qlinalg::LinalgError::DimensionMismatch {
                    expected: self.rays.len(),
                    found: len,
                },
            ));
        }
        Ok(())
    }

    pub fn anticanonical_divisor(&self) -> ToricDivisor {
        ToricDivisor::new(vec![1; self.rays.len()])
    }

    /// Fan of the product variety; rays of `self` come first.
    pub fn product(&self, other: &Fan) -> Fan {
        let n = self.lattice_dim + other.lattice_dim;
        let mut rays = Vec::with_capacity(self.rays.len() + other.rays.len());
        for r in &self.rays {
            let mut v = r.clone();
            v.resize(n, 0);
            rays.push(v);
        }
        for r in &other.rays {
            let mut v = vec![0; self.lattice_dim];
            v.extend_from_slice(r);
            rays.push(v);
        }
        let offset = self.rays.len();
        let mut max_cones = Vec::new();
        for a in &self.max_cones {
            for b in &other.max_cones {
                let mut c = a.clone();
                c.extend(b.iter().map(|i| i + offset));
                max_cones.push(c);
            }
        }
        Fan {
            lattice_dim: n,
            rays,
            max_cones,
            smooth: self.smooth && other.smooth,
            presentation: OnceLock::new(),
        }
    }
}

fn sample_direction(n: usize, k: usize) -> VecQ {
    // small deterministic integers with distinct primes per coordinate
    const PRIMES: [i64; 8] = [101, 103, 107, 109, 113, 127, 131, 137];
    VecQ::new(
        (0..n)
            .map(|j| {
                let p = PRIMES[j % PRIMES.len()] + 2 * (j / PRIMES.len()) as i64;
                let v = ((k as i64 + 3) * (j as i64 + 5) * 7919 + 31 * j as i64) % p;
                int(2 * v - p)
            })
            .collect(),
    )
}

/// A torus-invariant divisor `Σ a_ρ D_ρ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ToricDivisor {
    pub coeffs: Vec<i64>,
}

impl ToricDivisor {
    pub fn new(coeffs: Vec<i64>) -> Self {
        ToricDivisor { coeffs }
    }

    pub fn to_rational(&self) -> Vec<Rat> {
        self.coeffs.iter().map(|&c| int(c)).collect()
    }
}

impl fmt::Display for ToricDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

/// `{m ∈ M_ℚ : <m, v_ρ> ≥ -a_ρ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorPolytope {
    pub normals: Vec<VecQ>,
    pub offsets: Vec<Rat>,
    /// `-1` when empty.
    pub dim: i64,
    pub sample: Option<VecQ>,
    /// Inequalities that hold with equality on the whole polytope.
    pub implicit_equalities: Vec<usize>,
}

/// Builds the polytope and finds its implicit equalities by linear
/// programming: an inequality is implicit iff its slack cannot be made
/// positive.
pub fn divisor_polytope(fan: &Fan, coeffs: &[Rat]) -> Result<DivisorPolytope> {
    fan.check_length(coeffs.len())?;
    let n = fan.lattice_dim;
    let k = fan.rays.len();
    let normals: Vec<VecQ> = fan.rays.iter().map(|r| ray_vec(r)).collect();
    // variables m+ (n), m- (n), slack (k); <v, m+ - m-> - s = -a
    let a = MatQ::from_fn(k, 2 * n + k, |row, col| {
        if col < n {
            normals[row][col].clone()
        } else if col < 2 * n {
            -normals[row][col - n].clone()
        } else if col - 2 * n == row {
            -Rat::one()
        } else {
            Rat::zero()
        }
    });
    let b = VecQ::new(coeffs.iter().map(|c| -c.clone()).collect());
    let mut slack_positive = vec![false; k];
    let mut implicit = Vec::new();
    let mut sample = None;
    for i in 0..k {
        if slack_positive[i] {
            continue;
        }
        let mut c = vec![Rat::zero(); 2 * n + k];
        c[2 * n + i] = -Rat::one();
        let outcome = lp::minimize(&a, &b, &VecQ::new(c))?;
        let x = match outcome {
            LpOutcome::Infeasible => {
                return Ok(DivisorPolytope {
                    normals,
                    offsets: coeffs.to_vec(),
                    dim: -1,
                    sample: None,
                    implicit_equalities: Vec::new(),
                })
            }
            LpOutcome::Unbounded => {
                slack_positive[i] = true;
                continue;
            }
            LpOutcome::Optimal { x, value } => {
                if value.is_zero() {
                    implicit.push(i);
                }
                x
            }
        };
        for j in 0..k {
            if x[2 * n + j].is_positive() {
                slack_positive[j] = true;
            }
        }
        if sample.is_none() {
            sample = Some(VecQ::new((0..n).map(|j| &x[j] - &x[n + j]).collect()));
        }
    }
    let sample = match sample {
        Some(s) => s,
        None => interior_sample(&a, &b, n)?,
    };
    let equalities: Vec<VecQ> = implicit.iter().map(|&i| normals[i].clone()).collect();
    let dim = (n - span_dim(n, &equalities)?) as i64;
    Ok(DivisorPolytope {
        normals,
        offsets: coeffs.to_vec(),
        dim,
        sample: Some(sample),
        implicit_equalities: implicit,
    })
}

fn interior_sample(a: &MatQ, b: &VecQ, n: usize) -> Result<VecQ> {
    match lp::minimize(a, b, &VecQ::zeros(a.cols()))? {
        LpOutcome::Optimal { x, .. } => Ok(VecQ::new((0..n).map(|j| &x[j] - &x[n + j]).collect())),
        _ => Err(Error::InternalNonTermination),
    }
}

pub fn polytope_dim(fan: &Fan, d: &ToricDivisor) -> Result<i64> {
    Ok(divisor_polytope(fan, &d.to_rational())?.dim)
}

/// `h^0(nD) = 1` for all `n`: the polytope is a single point. An empty
/// polytope means the class is not effective; translating by `div(χ^m)`
/// only translates the polytope, so no other representative can help.
pub fn toric_rigid(fan: &Fan, d: &ToricDivisor) -> Result<bool> {
    rigid_rational(fan, &d.to_rational())
}

fn rigid_rational(fan: &Fan, coeffs: &[Rat]) -> Result<bool> {
    match divisor_polytope(fan, coeffs)?.dim {
        -1 => Err(Error::NotEffective),
        0 => Ok(true),
        _ => Ok(false),
    }
}

pub fn class_is_rigid(fan: &Fan, class: &DivisorClass) -> Result<bool> {
    rigid_rational(fan, &fan.lift_class(class)?)
}

/// Cone generated by the classes of all boundary divisors.
pub fn effective_cone(fan: &Fan) -> Result<ConeQ> {
    let p = fan.ns_presentation();
    let gens: Vec<VecQ> = (0..fan.rays.len())
        .map(|i| p.class_matrix.column(i))
        .collect();
    Ok(ConeQ::new(p.ns_rank, gens)?)
}

pub fn toric_model(name: impl Into<String>, fan: Fan) -> Result<VarietyModel> {
    let canonical = fan.class_of(&fan.anticanonical_divisor())?.neg();
    let cone = effective_cone(&fan)?;
    VarietyModel::new(
        name,
        canonical,
        cone,
        None,
        Provenance::Toric(Arc::new(fan)),
    )
}

/// `aL + K` as an invariant ℚ-divisor, with `K = -Σ D_ρ`.
pub fn adjoint_divisor(l: &ToricDivisor, a: &Rat) -> Vec<Rat> {
    l.coeffs.iter().map(|&c| a * int(c) - Rat::one()).collect()
}

/// Balanced with respect to every toric subvariety iff `aL + K` is rigid.
pub fn toric_balanced_all_subvarieties(fan: &Fan, l: &ToricDivisor) -> Result<bool> {
    let model = toric_model("toric", fan.clone())?;
    let a = invariants::fujita(&model, &fan.class_of(l)?)?.a;
    let d = adjoint_divisor(l, &a);
    let denominator = d.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled: Vec<i64> = d
        .iter()
        .map(|c| {
            let v = c * Rat::from_integer(denominator.clone());
            i64::try_from(v.to_integer())
                .map_err(|_| Error::InvalidModel("coefficient overflow".into()))
        })
        .collect::<Result<_>>()?;
    toric_rigid(fan, &ToricDivisor::new(scaled))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationData {
    pub projection: Vec<Vec<i64>>,
    pub vertical_ray_indices: Vec<usize>,
    pub ns_pi_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationCrossCheck {
    pub b_via_face: usize,
    pub b_via_fibration: usize,
    pub fibration: FibrationData,
}

/// b twice: as the codimension of the minimal face, and as
/// `rk NS - rk NS_π` for the fibration given by `projection` (rows are the
/// images of the coordinate functionals of `N'`). The polytope of `aL + K`
/// must span exactly the annihilator of the kernel of the projection.
pub fn fibration_b_crosscheck(
    fan: &Fan,
    l: &ToricDivisor,
    projection: &[Vec<i64>],
) -> Result<FibrationCrossCheck> {
    let n = fan.lattice_dim;
    if projection.iter().any(|row| row.len() != n) {
        return Err(Error::ProjectionIncompatible(format!(
            "projection rows must have length {n}"
        )));
    }
    let model = toric_model("toric", fan.clone())?;
    let face = invariants::b_invariant(&model, &fan.class_of(l)?)?;
    let d = adjoint_divisor(l, &face.fujita.a);
    let polytope = divisor_polytope(fan, &d)?;
    if polytope.dim < 0 {
        return Err(Error::ProjectionIncompatible(
            "adjoint polytope is empty".into(),
        ));
    }
    let proj_rows: Vec<VecQ> = projection.iter().map(|r| ray_vec(r)).collect();
    let proj_rank = span_dim(n, &proj_rows)?;
    let spans_inside = proj_rows.iter().all(|w| {
        polytope.implicit_equalities.iter().all(|&i| {
            w.dot(&polytope.normals[i])
                .map(|x| x.is_zero())
                .unwrap_or(false)
        })
    });
    if !spans_inside || polytope.dim != proj_rank as i64 {
        return Err(Error::ProjectionIncompatible(format!(
            "adjoint polytope has dimension {} but the projection has rank {proj_rank}",
            polytope.dim
        )));
    }
    let vertical: Vec<usize> = (0..fan.rays.len())
        .filter(|&i| {
            let v = ray_vec(&fan.rays[i]);
            proj_rows
                .iter()
                .any(|w| !w.dot(&v).map(|x| x.is_zero()).unwrap_or(true))
        })
        .collect();
    let p = fan.ns_presentation();
    let classes: Vec<VecQ> = vertical.iter().map(|&i| p.class_matrix.column(i)).collect();
    let ns_pi_rank = span_dim(p.ns_rank, &classes)?;
    Ok(FibrationCrossCheck {
        b_via_face: face.b,
        b_via_fibration: p.ns_rank - ns_pi_rank,
        fibration: FibrationData {
            projection: projection.to_vec(),
            vertical_ray_indices: vertical,
            ns_pi_rank,
        },
    })
}

/// Standard fans used by examples and fixtures.
pub mod fans {
    use super::Fan;

    pub fn projective_line() -> Fan {
        Fan::new(1, vec![vec![1], vec![-1]], vec![vec![0], vec![1]]).expect("P1")
    }

    pub fn projective_plane() -> Fan {
        Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        )
        .expect("P2")
    }

    /// Projective space of dimension `n`.
    pub fn projective_space(n: usize) -> Fan {
        let mut rays: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        rays.push(vec![-1; n]);
        let max_cones = (0..=n)
            .map(|skip| (0..=n).filter(|&i| i != skip).collect())
            .collect();
        Fan::new(n, rays, max_cones).expect("projective space")
    }

    pub fn p1_times_p1() -> Fan {
        projective_line().product(&projective_line())
    }

    /// Rays `e1, e2, -e1-e2, e1+e2`; the last ray is the exceptional curve.
    pub fn blown_up_plane() -> Fan {
        Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, -1], vec![1, 1]],
            vec![vec![0, 3], vec![3, 1], vec![1, 2], vec![0, 2]],
        )
        .expect("Bl1P2")
    }

    /// Hexagon fan: the plane blown up in the three torus-fixed points.
    pub fn degree_six_del_pezzo() -> Fan {
        smooth_surface(&[[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]])
    }

    /// Hirzebruch surface `F_r`.
    pub fn hirzebruch(r: i64) -> Fan {
        smooth_surface(&[[1, 0], [0, 1], [-1, r], [0, -1]])
    }

    /// Complete surface fan from rays listed in cyclic order.
    pub fn smooth_surface(rays: &[[i64; 2]]) -> Fan {
        let k = rays.len();
        Fan::new(
            2,
            rays.iter().map(|r| r.to_vec()).collect(),
            (0..k).map(|i| vec![i, (i + 1) % k]).collect(),
        )
        .expect("surface fan")
    }

    /// `P^3` blown up along the torus-invariant line `x_0 = x_1 = 0`:
    /// the cone `(e1, e2)` is subdivided by `e1 + e2`.
    pub fn blown_up_p3_along_line() -> Fan {
        Fan::new(
            3,
            vec![
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![0, 0, 1],
                vec![-1, -1, -1],
                vec![1, 1, 0],
            ],
            vec![
                vec![0, 4, 2],
                vec![4, 1, 2],
                vec![0, 4, 3],
                vec![4, 1, 3],
                vec![0, 2, 3],
                vec![1, 2, 3],
            ],
        )
        .expect("Bl_line P3")
    }

    /// `P^3` blown up in three torus-fixed points.
    pub fn p3_blown_up_in_three_points() -> Fan {
        // fixed points of cones {1,2,3}, {0,2,3}, {0,1,3} get rays -e1, -e2, -e3
        let rays = vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![-1, -1, -1],
            vec![-1, 0, 0],
            vec![0, -1, 0],
            vec![0, 0, -1],
        ];
        let mut cones = vec![vec![0, 1, 2]];
        // star subdivision of cone {a, b, 3} ∪ {c} by the new ray
        for (corner, new) in [([1usize, 2, 3], 4usize), ([0, 2, 3], 5), ([0, 1, 3], 6)] {
            for skip in 0..3 {
                let mut c: Vec<usize> = corner
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, &r)| r)
                    .collect();
                c.push(new);
                cones.push(c);
            }
        }
        Fan::new(3, rays, cones).expect("Bl3 P3")
    }
}
