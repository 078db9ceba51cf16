//! Toric systems: cyclic configurations of divisor classes mirroring the
//! intersection pattern of the torus-invariant divisors on a toric surface.
//!
//! A toric system on a surface with Picard rank `r` is a cyclic sequence
//! `A_1, ..., A_n` with `n = r + 2` such that consecutive classes meet in a
//! point (`A_i . A_{i+1} = 1`), non-consecutive classes are disjoint
//! (`A_i . A_j = 0`), and the classes sum to `-K`.  Differences of a full
//! exceptional sequence of invertible sheaves produce one, and conversely a
//! toric system plus a starting sheaf rebuilds the sequence.
//!
//! The Gale dual of a toric system reads off a fan: the cokernel of the
//! pairing map `D -> (A_i . D)` is a rank-two lattice, and the images of the
//! unit vectors of `Z^n` are the rays of a smooth complete toric surface
//! whose self-intersections are the `A_i^2`.

use crate::error::{Error, Result};
use crate::fans::ToricSurface;
use crate::linalg::{smith_normal_form, IMat};
use crate::picard::{canonical_class, coeff_serde, DivisorClass, SurfaceBasis};
use num::bigint::BigInt;
use num::{One, Signed};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ToricSystem {
    pub basis: SurfaceBasis,
    classes: Vec<DivisorClass>,
}

/// One row of coefficients; large values fall back to decimal strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CoeffRow(#[serde(with = "coeff_serde")] pub Vec<BigInt>);

/// JSON form: basis plus one coefficient row per class.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ToricSystemJson {
    pub basis: SurfaceBasis,
    pub classes: Vec<CoeffRow>,
}

impl ToricSystem {
    /// Validate and build.  Reports the first failing pair on rejection.
    pub fn new(classes: Vec<DivisorClass>) -> Result<Self> {
        let basis = match classes.first() {
            None => return Err(Error::InvalidSystem("no classes".into())),
            Some(c) => c.basis,
        };
        for c in &classes {
            if c.basis != basis {
                return Err(Error::BasisMismatch(basis.name(), c.basis.name()));
            }
        }
        let n = classes.len();
        if n != basis.rank() + 2 {
            return Err(Error::InvalidSystem(format!(
                "rank {} needs {} classes, got {n}",
                basis.rank(),
                basis.rank() + 2
            )));
        }
        for i in 0..n {
            for j in i + 1..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                let want = i64::from(adjacent);
                let got = classes[i].dot(&classes[j]);
                if got != BigInt::from(want) {
                    return Err(Error::InvalidSystem(format!(
                        "A{}.A{} = {got}, expected {want}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let sum = classes.iter().fold(basis.zero(), |acc, c| &acc + c);
        let want = -&canonical_class(basis);
        if sum != want {
            return Err(Error::InvalidSystem(format!("classes sum to {sum}, expected {want}")));
        }
        Ok(ToricSystem { basis, classes })
    }

    pub fn n(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[DivisorClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &DivisorClass {
        &self.classes[i]
    }

    /// Sum `A_i + ... + A_{j-1}`; `j` may run past `n` to wrap around the
    /// cycle, each full period adding `-K`.
    pub fn window_sum(&self, i: usize, j: usize) -> DivisorClass {
        debug_assert!(i <= j);
        let mut acc = self.basis.zero();
        for k in i..j {
            acc = &acc + &self.classes[k % self.n()];
        }
        acc
    }

    pub fn rotate(&self, k: usize) -> ToricSystem {
        let n = self.n();
        let classes = (0..n).map(|i| self.classes[(i + k) % n].clone()).collect();
        ToricSystem { basis: self.basis, classes }
    }

    pub fn reverse(&self) -> ToricSystem {
        let mut classes = self.classes.clone();
        classes.reverse();
        ToricSystem { basis: self.basis, classes }
    }

    /// Coefficient matrix minimized over rotations and both orientations;
    /// two systems agree up to cyclic symmetry iff their canonical forms do.
    pub fn canonical_form(&self) -> Vec<Vec<BigInt>> {
        let n = self.n();
        let mut best: Option<Vec<Vec<BigInt>>> = None;
        for start in 0..n {
            for rev in [false, true] {
                let cand: Vec<Vec<BigInt>> = (0..n)
                    .map(|i| {
                        let idx = if rev { (start + n - i) % n } else { (start + i) % n };
                        self.classes[idx].coeffs.clone()
                    })
                    .collect();
                if best.as_ref().map_or(true, |b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        best.expect("nonempty system")
    }

    /// The toric surface read off from the Gale dual.
    ///
    /// Writing the pairing map as an `n x r` integer matrix `M` (row `i` is
    /// `A_i` paired against the basis classes), the Smith form `U M V = S`
    /// exhibits the cokernel of `M`: for a valid system all elementary
    /// divisors are 1, so the last two rows of `U` project `Z^n` onto `Z^2`,
    /// and the unit vectors land on the rays.  A final change of basis puts
    /// the first two rays at `(1,0)` and `(0,1)`, which also orients the fan
    /// counterclockwise.
    pub fn gale_dual(&self) -> Result<ToricSurface> {
        let n = self.n();
        let rank = self.basis.rank();
        let mut m = IMat::zero(n, rank);
        for (i, a) in self.classes.iter().enumerate() {
            for j in 0..rank {
                m.a[i][j] = a.dot(&self.basis.unit(j));
            }
        }
        let snf = smith_normal_form(&m);
        for k in 0..rank {
            if snf.s.a[k][k].abs() != BigInt::one() {
                return Err(Error::InvalidSystem(
                    "pairing matrix does not have unit elementary divisors".into(),
                ));
            }
        }
        let rays_raw: Vec<(BigInt, BigInt)> =
            (0..n).map(|j| (snf.u.a[n - 2][j].clone(), snf.u.a[n - 1][j].clone())).collect();

        let (a, b) = rays_raw[0].clone();
        let (c, d) = rays_raw[1].clone();
        let det = &a * &d - &b * &c;
        if det.abs() != BigInt::one() {
            return Err(Error::InvalidSystem("dual rays do not start with a lattice basis".into()));
        }
        let rays: Vec<(i64, i64)> = rays_raw
            .iter()
            .map(|(x, y)| {
                let nx = (&d * x - &c * y) / &det;
                let ny = (&a * y - &b * x) / &det;
                let nx = i64::try_from(&nx).map_err(|_| Error::Overflow)?;
                let ny = i64::try_from(&ny).map_err(|_| Error::Overflow)?;
                Ok((nx, ny))
            })
            .collect::<Result<_>>()?;
        let surface = ToricSurface::from_rays(rays)?;
        for (i, a_i) in self.classes.iter().enumerate() {
            if BigInt::from(surface.self_intersections()[i]) != a_i.self_intersection() {
                return Err(Error::InvalidSystem(format!(
                    "dual fan self-intersection {i} disagrees with A{}^2",
                    i + 1
                )));
            }
        }
        Ok(surface)
    }

    pub fn to_json(&self) -> ToricSystemJson {
        ToricSystemJson {
            basis: self.basis,
            classes: self.classes.iter().map(|c| CoeffRow(c.coeffs.clone())).collect(),
        }
    }

    pub fn from_json(json: ToricSystemJson) -> Result<Self> {
        let classes = json
            .classes
            .into_iter()
            .map(|row| DivisorClass::new(json.basis, row.0))
            .collect::<Result<Vec<_>>>()?;
        ToricSystem::new(classes)
    }
}

impl std::fmt::Display for ToricSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.classes.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Differences of consecutive sheaves in a sequence, closed up with
/// `-K - (E_n - E_1)`.
pub fn from_sequence(sequence: &[DivisorClass]) -> Result<ToricSystem> {
    let first = sequence.first().ok_or_else(|| Error::InvalidSystem("empty sequence".into()))?;
    let basis = first.basis;
    let mut classes: Vec<DivisorClass> = Vec::with_capacity(sequence.len());
    for w in sequence.windows(2) {
        classes.push(&w[1] - &w[0]);
    }
    let last = sequence.last().unwrap();
    let closing = &(-&canonical_class(basis)) - &(last - first);
    classes.push(closing);
    ToricSystem::new(classes)
}

/// Twists `E_1, E_1 + A_1, ..., E_1 + A_1 + ... + A_{n-1}` rebuilt from a
/// system and a starting class.
pub fn to_sequence(system: &ToricSystem, start: &DivisorClass) -> Result<Vec<DivisorClass>> {
    if start.basis != system.basis {
        return Err(Error::BasisMismatch(system.basis.name(), start.basis.name()));
    }
    let mut out = vec![start.clone()];
    for i in 0..system.n() - 1 {
        let next = &out[i] + system.class(i);
        out.push(next);
    }
    Ok(out)
}
