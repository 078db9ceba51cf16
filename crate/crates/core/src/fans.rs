//! Smooth complete toric surfaces as two-dimensional fans.
//!
//! A surface is stored as its cyclically ordered list of primitive ray
//! generators, counterclockwise, so that consecutive rays span the lattice
//! positively: `det(l_i, l_{i+1}) = 1` for all `i`, indices mod `n`, and the
//! rays wind around the origin exactly once.  The self-intersection numbers
//! of the torus-invariant divisors are determined by
//! `l_{i-1} + l_{i+1} = -a_i l_i`, and every fan satisfies
//! `sum a_i = 12 - 3n`.
//!
//! A surface may optionally carry *ray classes*: the divisor class of each
//! torus-invariant prime divisor in a fixed [`SurfaceBasis`].  Blow-ups keep
//! the tracking up to date; blow-downs drop it, since the basis would lose a
//! generator.  Tracking is what connects the fan picture with the lattice
//! computations in [`crate::picard`] and [`crate::cohomology`].

use crate::error::{Error, Result};
use crate::picard::{canonical_class, DivisorClass, SurfaceBasis};
use num::bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::{HashSet, VecDeque};

/// Raw JSON form of a fan: `{"rays": [[1,0],[0,1],[-1,-1]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FanJson {
    pub rays: Vec<(i64, i64)>,
}

/// Divisor classes of the torus-invariant prime divisors, one per ray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayClasses {
    pub basis: SurfaceBasis,
    pub by_ray: Vec<DivisorClass>,
}

/// A smooth complete toric surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricSurface {
    rays: Vec<(i64, i64)>,
    self_ints: Vec<i64>,
    classes: Option<RayClasses>,
}

fn det(u: (i64, i64), v: (i64, i64)) -> i64 {
    let d = (u.0 as i128) * (v.1 as i128) - (u.1 as i128) * (v.0 as i128);
    // Inputs are i64, so the product fits in i128; the fans this crate
    // builds keep determinants tiny, but clamp defensively for raw input.
    d.clamp(i64::MIN as i128, i64::MAX as i128) as i64
}

fn add_ray(u: (i64, i64), v: (i64, i64)) -> Result<(i64, i64)> {
    Ok((u.0.checked_add(v.0).ok_or(Error::Overflow)?, u.1.checked_add(v.1).ok_or(Error::Overflow)?))
}

/// Validate a counterclockwise list of primitive rays as a complete smooth
/// fan.  A list that is clockwise throughout gets a dedicated error asking
/// for the order to be reversed.
pub fn validate_rays(rays: &[(i64, i64)]) -> Result<()> {
    if rays.len() < 3 {
        return Err(Error::TooFewRays(rays.len()));
    }
    for (i, &r) in rays.iter().enumerate() {
        if num::integer::gcd(r.0, r.1) != 1 {
            return Err(Error::NonPrimitiveRay { index: i, ray: r });
        }
    }
    let n = rays.len();
    let dets: Vec<i64> = (0..n).map(|i| det(rays[i], rays[(i + 1) % n])).collect();
    if dets.iter().all(|&d| d == -1) {
        return Err(Error::ClockwiseFan);
    }
    if let Some(i) = dets.iter().position(|&d| d != 1) {
        return Err(Error::BadCone { index: i, det: dets[i] });
    }
    // Consecutive positive spans make each sector convex; counting the
    // sectors that contain the direction (1,0) gives the winding number.
    let e = (1, 0);
    let winding = (0..n)
        .filter(|&i| det(rays[i], e) >= 0 && det(e, rays[(i + 1) % n]) > 0)
        .count() as i64;
    if winding != 1 {
        return Err(Error::BadWinding(winding));
    }
    Ok(())
}

fn self_ints_of(rays: &[(i64, i64)]) -> Vec<i64> {
    let n = rays.len();
    (0..n).map(|i| det(rays[(i + 1) % n], rays[(i + n - 1) % n])).collect()
}

impl ToricSurface {
    pub fn from_rays(rays: Vec<(i64, i64)>) -> Result<Self> {
        validate_rays(&rays)?;
        let self_ints = self_ints_of(&rays);
        debug_assert_eq!(
            self_ints.iter().sum::<i64>(),
            12 - 3 * rays.len() as i64,
            "self-intersection sum invariant"
        );
        Ok(ToricSurface { rays, self_ints, classes: None })
    }

    /// Reconstruct a fan from its cyclic self-intersection sequence, using
    /// `l_0 = (1,0)`, `l_1 = (0,1)` and the recurrence
    /// `l_{i+1} = -a_i l_i - l_{i-1}`.  Fails if the sequence does not close
    /// up into a fan.
    pub fn from_self_intersections(a: &[i64]) -> Result<Self> {
        if a.len() < 3 {
            return Err(Error::TooFewRays(a.len()));
        }
        let n = a.len();
        let mut rays: Vec<(i64, i64)> = vec![(1, 0), (0, 1)];
        for i in 1..n - 1 {
            let l = rays[i];
            let p = rays[i - 1];
            let s = (
                (-a[i]).checked_mul(l.0).and_then(|x| x.checked_sub(p.0)).ok_or(Error::Overflow)?,
                (-a[i]).checked_mul(l.1).and_then(|x| x.checked_sub(p.1)).ok_or(Error::Overflow)?,
            );
            rays.push(s);
        }
        let surface = ToricSurface::from_rays(rays)?;
        if surface.self_ints != a {
            return Err(Error::Parse(format!(
                "self-intersection sequence {a:?} does not close up into a fan"
            )));
        }
        Ok(surface)
    }

    pub fn n(&self) -> usize {
        self.rays.len()
    }

    pub fn rays(&self) -> &[(i64, i64)] {
        &self.rays
    }

    pub fn self_intersections(&self) -> &[i64] {
        &self.self_ints
    }

    pub fn classes(&self) -> Option<&RayClasses> {
        self.classes.as_ref()
    }

    pub fn basis(&self) -> Result<SurfaceBasis> {
        self.classes.as_ref().map(|c| c.basis).ok_or(Error::MissingClasses)
    }

    pub fn class_of_ray(&self, i: usize) -> Result<&DivisorClass> {
        let c = self.classes.as_ref().ok_or(Error::MissingClasses)?;
        c.by_ray.get(i).ok_or(Error::IndexOutOfRange { index: i, len: self.n() })
    }

    pub fn to_json(&self) -> FanJson {
        FanJson { rays: self.rays.clone() }
    }

    /// `-K` is nef exactly when every self-intersection is at least -2.
    pub fn anticanonical_nef(&self) -> bool {
        self.self_ints.iter().all(|&a| a >= -2)
    }

    /// Lexicographic minimum of the self-intersection sequence over all
    /// rotations and both orientations.  Two surfaces are isomorphic as
    /// abstract toric surfaces iff their canonical forms agree.
    pub fn canonical_form(&self) -> Vec<i64> {
        canonical_cycle(&self.self_ints)
    }

    pub fn isomorphic(&self, other: &ToricSurface) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    /// Blow up the torus-fixed point of the cone spanned by rays `i` and
    /// `i+1`; the new ray is their sum.  Ray class tracking, when present,
    /// extends the basis by a fresh `R` and subtracts it from both
    /// neighbors.
    pub fn blow_up(&self, cone: usize) -> Result<Self> {
        let n = self.n();
        if cone >= n {
            return Err(Error::IndexOutOfRange { index: cone, len: n });
        }
        let j = (cone + 1) % n;
        let new_ray = add_ray(self.rays[cone], self.rays[j])?;
        let mut rays = self.rays.clone();
        rays.insert(cone + 1, new_ray);

        let classes = match &self.classes {
            None => None,
            Some(rc) => {
                let basis = rc.basis.extended();
                let r_new = basis.r(basis.blowups());
                let mut by_ray: Vec<DivisorClass> =
                    rc.by_ray.iter().map(DivisorClass::extended).collect();
                by_ray[cone] = &by_ray[cone] - &r_new;
                by_ray[j] = &by_ray[j] - &r_new;
                by_ray.insert(cone + 1, r_new);
                Some(RayClasses { basis, by_ray })
            }
        };

        let self_ints = self_ints_of(&rays);
        debug_assert!(validate_rays(&rays).is_ok());
        Ok(ToricSurface { rays, self_ints, classes })
    }

    /// Contract the ray `i`, which must have self-intersection -1.  Class
    /// tracking is dropped: the basis would lose a generator.
    pub fn blow_down(&self, i: usize) -> Result<Self> {
        let n = self.n();
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, len: n });
        }
        if self.self_ints[i] != -1 {
            return Err(Error::NotContractible { index: i, self_int: self.self_ints[i] });
        }
        if n == 3 {
            return Err(Error::TooSmallToContract);
        }
        let mut rays = self.rays.clone();
        rays.remove(i);
        let self_ints = self_ints_of(&rays);
        debug_assert!(validate_rays(&rays).is_ok());
        Ok(ToricSurface { rays, self_ints, classes: None })
    }

    /// Contract several pairwise non-adjacent (-1)-rays at once.
    pub fn simultaneous_blow_down(&self, set: &[usize]) -> Result<Self> {
        let n = self.n();
        if set.is_empty() {
            return Err(Error::InvalidStructure("empty contraction set".into()));
        }
        let mut sorted: Vec<usize> = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != set.len() {
            return Err(Error::InvalidStructure("repeated contraction index".into()));
        }
        for &i in &sorted {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, len: n });
            }
            if self.self_ints[i] != -1 {
                return Err(Error::NotContractible { index: i, self_int: self.self_ints[i] });
            }
        }
        for w in 0..sorted.len() {
            let a = sorted[w];
            let b = sorted[(w + 1) % sorted.len()];
            if (a + 1) % n == b || (b + 1) % n == a {
                return Err(Error::AdjacentContraction(a, b));
            }
        }
        if n - sorted.len() < 3 {
            return Err(Error::TooSmallToContract);
        }
        let rays: Vec<(i64, i64)> = (0..n).filter(|i| !sorted.contains(i)).map(|i| self.rays[i]).collect();
        let self_ints = self_ints_of(&rays);
        debug_assert!(validate_rays(&rays).is_ok());
        Ok(ToricSurface { rays, self_ints, classes: None })
    }

    /// Indices of the (-1)-rays.
    pub fn contractible_rays(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.self_ints[i] == -1).collect()
    }

    /// All chains of at most `max_rounds` simultaneous blow-downs ending at
    /// a fan with at most four rays.  A surface that already has at most
    /// four rays yields the empty chain.
    pub fn blow_down_chains(&self, max_rounds: usize) -> Vec<BlowDownChain> {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        chains_rec(self, max_rounds, &mut prefix, &mut out);
        out
    }

    /// Realizations of this surface as an iterated blow-up of a minimal
    /// base: every complete subfan with three or four rays, together with
    /// one order in which the remaining rays can be inserted (the candidate
    /// systems produced downstream do not depend on the order, only on the
    /// base).  The rays of each insertion step are in forward (blow-up)
    /// order.
    pub fn blowup_realizations(&self) -> Vec<Realization> {
        let n = self.n();
        let mut out = Vec::new();
        for size in [3usize, 4] {
            if size > n {
                continue;
            }
            for subset in subsets_in_order(n, size) {
                let rays: Vec<(i64, i64)> = subset.iter().map(|&i| self.rays[i]).collect();
                if validate_rays(&rays).is_err() {
                    continue;
                }
                let keep: HashSet<(i64, i64)> = rays.iter().copied().collect();
                if let Some(inserts) = peel_order(self, &keep) {
                    let bottom = ToricSurface::from_rays(rays).expect("validated subfan");
                    out.push(Realization { bottom, inserts });
                }
            }
        }
        out
    }

    /// Attach ray classes to a minimal surface (three or four rays): the
    /// plane gets `H, H, H`, a Hirzebruch surface gets `P, Q, P, Q - aP`
    /// distributed by self-intersection.
    pub fn with_base_classes(&self) -> Result<Self> {
        let mut s = self.clone();
        match self.n() {
            3 => {
                let basis = SurfaceBasis::p2(0);
                s.classes = Some(RayClasses { basis, by_ray: vec![basis.h(), basis.h(), basis.h()] });
            }
            4 => {
                // Self-intersections of a 4-ray fan read (0, a, 0, -a) up to
                // rotation; put Q on the +a ray.
                let z = (0..4)
                    .find(|&i| self.self_ints[i] == 0 && self.self_ints[(i + 2) % 4] == 0)
                    .ok_or_else(|| {
                        Error::InvalidStructure("4-ray fan without opposite zero rays".into())
                    })?;
                let (q_at, a) = if self.self_ints[(z + 1) % 4] >= 0 {
                    ((z + 1) % 4, self.self_ints[(z + 1) % 4])
                } else {
                    ((z + 3) % 4, self.self_ints[(z + 3) % 4])
                };
                let basis = SurfaceBasis::fa(a, 0);
                let mut by_ray = vec![basis.p(); 4];
                by_ray[q_at] = basis.q();
                by_ray[(q_at + 2) % 4] = DivisorClass::from_i64(basis, &[-a, 1])?;
                s.classes = Some(RayClasses { basis, by_ray });
            }
            n => {
                return Err(Error::InvalidStructure(format!(
                    "base classes need 3 or 4 rays, got {n}"
                )))
            }
        }
        debug_assert!(s.check_tracking().is_ok());
        Ok(s)
    }

    /// Consistency of ray classes: adjacency pairing and `sum D_i = -K`.
    pub fn check_tracking(&self) -> Result<()> {
        let rc = self.classes.as_ref().ok_or(Error::MissingClasses)?;
        let n = self.n();
        for i in 0..n {
            for j in 0..n {
                let want: i64 = if i == j {
                    self.self_ints[i]
                } else if (i + 1) % n == j || (j + 1) % n == i {
                    1
                } else {
                    0
                };
                if rc.by_ray[i].dot(&rc.by_ray[j]) != BigInt::from(want) {
                    return Err(Error::InvalidStructure(format!(
                        "ray classes {i},{j} pair wrongly"
                    )));
                }
            }
        }
        let sum = rc.by_ray.iter().fold(rc.basis.zero(), |acc, d| &acc + d);
        let k = canonical_class(rc.basis);
        if sum != -&k {
            return Err(Error::InvalidStructure("ray classes do not sum to -K".into()));
        }
        Ok(())
    }
}

/// One round of simultaneous blow-downs inside a chain.
#[derive(Debug, Clone)]
pub struct ChainRound {
    /// Indices removed from the fan as it was before this round.
    pub removed: Vec<usize>,
    pub result: ToricSurface,
}

pub type BlowDownChain = Vec<ChainRound>;

fn chains_rec(
    surface: &ToricSurface,
    rounds_left: usize,
    prefix: &mut BlowDownChain,
    out: &mut Vec<BlowDownChain>,
) {
    if surface.n() <= 4 {
        out.push(prefix.clone());
        return;
    }
    if rounds_left == 0 {
        return;
    }
    let minus_ones = surface.contractible_rays();
    for set in antichains(&minus_ones, surface.n()) {
        if surface.n() - set.len() < 3 {
            continue;
        }
        let next = surface.simultaneous_blow_down(&set).expect("antichain of (-1)-rays");
        prefix.push(ChainRound { removed: set, result: next.clone() });
        chains_rec(&next, rounds_left - 1, prefix, out);
        prefix.pop();
    }
}

/// Nonempty subsets of `candidates` that are pairwise non-adjacent mod `n`.
fn antichains(candidates: &[usize], n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let m = candidates.len();
    for mask in 1u32..(1 << m) {
        let set: Vec<usize> =
            (0..m).filter(|&b| mask & (1 << b) != 0).map(|b| candidates[b]).collect();
        let ok = set.iter().all(|&a| {
            set.iter().all(|&b| a == b || ((a + 1) % n != b && (b + 1) % n != a))
        });
        if ok {
            out.push(set);
        }
    }
    out
}

/// A realization of a surface as an iterated blow-up of a minimal base.
#[derive(Debug, Clone)]
pub struct Realization {
    pub bottom: ToricSurface,
    /// Rays to insert, in blow-up order.
    pub inserts: Vec<(i64, i64)>,
}

/// Subsets of `0..n` of the given size, each in increasing (cyclic) order.
fn subsets_in_order(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    rec(0, n, size, &mut cur, &mut out);
    out
}

/// Peel the rays of `surface` not in `keep` one at a time, always removing a
/// current (-1)-ray; returns the removed rays reversed into insertion order.
/// Smooth subdivisions always contain such a ray, so this only fails if
/// `keep` is not a subfan.
fn peel_order(surface: &ToricSurface, keep: &HashSet<(i64, i64)>) -> Option<Vec<(i64, i64)>> {
    let mut current = surface.clone();
    let mut removed = Vec::new();
    while current.n() > keep.len() {
        let pick = (0..current.n())
            .find(|&i| !keep.contains(&current.rays[i]) && current.self_ints[i] == -1)?;
        removed.push(current.rays[pick]);
        current = current.blow_down(pick).ok()?;
    }
    removed.reverse();
    Some(removed)
}

fn canonical_cycle(seq: &[i64]) -> Vec<i64> {
    let n = seq.len();
    let mut best: Option<Vec<i64>> = None;
    let mut consider = |cand: Vec<i64>| {
        if best.as_ref().map_or(true, |b| cand < *b) {
            best = Some(cand);
        }
    };
    for start in 0..n {
        consider((0..n).map(|i| seq[(start + i) % n]).collect());
        consider((0..n).map(|i| seq[(start + n - i) % n]).collect());
    }
    best.unwrap_or_default()
}

/// Parse `"1,0;0,1;-1,-1"` into a ray list.
pub fn parse_rays(text: &str) -> Result<Vec<(i64, i64)>> {
    let mut rays = Vec::new();
    for (i, part) in text.split(';').enumerate() {
        let nums: Vec<&str> = part.split(',').map(str::trim).collect();
        if nums.len() != 2 {
            return Err(Error::Parse(format!("ray {i}: expected two coordinates, got {part:?}")));
        }
        let x = nums[0].parse::<i64>().map_err(|e| Error::Parse(format!("ray {i}: {e}")))?;
        let y = nums[1].parse::<i64>().map_err(|e| Error::Parse(format!("ray {i}: {e}")))?;
        rays.push((x, y));
    }
    Ok(rays)
}

/// The fan of the projective plane, with ray classes `H, H, H`.
pub fn base_p2() -> ToricSurface {
    ToricSurface::from_rays(vec![(1, 0), (0, 1), (-1, -1)])
        .and_then(|s| s.with_base_classes())
        .expect("plane fan")
}

/// The fan of the Hirzebruch surface of parameter `a >= 0`, with ray classes
/// `P, Q - aP, P, Q`.
pub fn base_fa(a: i64) -> Result<ToricSurface> {
    if a < 0 {
        return Err(Error::ParamRange(format!("Hirzebruch parameter must be >= 0, got {a}")));
    }
    ToricSurface::from_rays(vec![(1, 0), (0, 1), (-1, a), (0, -1)])?.with_base_classes()
}

/// Breadth-first enumeration of smooth complete toric surfaces reachable
/// from the plane and the Hirzebruch surfaces of parameter at most 2 by
/// blow-ups, up to isomorphism.  With `require_nef` only surfaces with nef
/// anticanonical class are kept; these all arise this way, and the
/// enumeration closes up at nine rays.
pub fn enumerate_surfaces(max_rays: usize, require_nef: bool) -> Vec<ToricSurface> {
    let bases: Vec<ToricSurface> = [
        base_p2(),
        base_fa(0).unwrap(),
        base_fa(1).unwrap(),
        base_fa(2).unwrap(),
    ]
    .into_iter()
    .map(|s| ToricSurface::from_rays(s.rays().to_vec()).unwrap())
    .collect();

    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut found: Vec<ToricSurface> = Vec::new();
    let mut queue: VecDeque<ToricSurface> = VecDeque::new();
    for b in bases {
        if b.n() <= max_rays && (!require_nef || b.anticanonical_nef()) && seen.insert(b.canonical_form()) {
            found.push(b.clone());
            queue.push_back(b);
        }
    }
    while let Some(s) = queue.pop_front() {
        if s.n() >= max_rays {
            continue;
        }
        for cone in 0..s.n() {
            let child = match s.blow_up(cone) {
                Ok(c) => c,
                Err(_) => continue,
            };
            if require_nef && !child.anticanonical_nef() {
                continue;
            }
            if seen.insert(child.canonical_form()) {
                found.push(child.clone());
                queue.push_back(child);
            }
        }
    }
    found.sort_by_key(|s| (s.n(), s.canonical_form()));
    found
}

/// The census of toric surfaces with nef anticanonical class.
pub fn nef_census() -> Vec<ToricSurface> {
    enumerate_surfaces(usize::MAX >> 1, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_accepts_standard_fans() {
        assert!(validate_rays(&[(1, 0), (0, 1), (-1, -1)]).is_ok());
        assert!(validate_rays(&[(1, 0), (0, 1), (-1, 2), (0, -1)]).is_ok());
    }

    #[test]
    fn validate_rejects_bad_input() {
        assert!(matches!(validate_rays(&[(1, 0), (0, 1)]), Err(Error::TooFewRays(2))));
        assert!(matches!(
            validate_rays(&[(2, 0), (0, 1), (-1, -1)]),
            Err(Error::NonPrimitiveRay { index: 0, .. })
        ));
        // Clockwise listing gets the dedicated hint.
        assert!(matches!(
            validate_rays(&[(-1, -1), (0, 1), (1, 0)]),
            Err(Error::ClockwiseFan)
        ));
        // Doubled plane fan: winds twice.
        assert!(matches!(
            validate_rays(&[(1, 0), (0, 1), (-1, -1), (1, 0), (0, 1), (-1, -1)]),
            Err(Error::BadWinding(2))
        ));
        assert!(matches!(
            validate_rays(&[(1, 0), (1, 1), (0, 1), (-1, -1), (1, -1)]),
            Err(Error::BadCone { .. })
        ));
    }

    #[test]
    fn self_intersections_examples() {
        let p2 = base_p2();
        assert_eq!(p2.self_intersections(), &[1, 1, 1]);
        let f2 = base_fa(2).unwrap();
        assert_eq!(f2.self_intersections(), &[0, -2, 0, 2]);
        assert_eq!(f2.self_intersections().iter().sum::<i64>(), 12 - 3 * 4);
    }

    #[test]
    fn blow_up_inserts_sum_and_tracks_classes() {
        let p2 = base_p2();
        let s = p2.blow_up(0).unwrap();
        assert_eq!(s.rays(), &[(1, 0), (1, 1), (0, 1), (-1, -1)]);
        assert_eq!(s.self_intersections(), &[0, -1, 0, 1]);
        let rc = s.classes().unwrap();
        let b = rc.basis;
        assert_eq!(b, SurfaceBasis::p2(1));
        assert_eq!(rc.by_ray[0], &b.h() - &b.r(1));
        assert_eq!(rc.by_ray[1], b.r(1));
        assert_eq!(rc.by_ray[2], &b.h() - &b.r(1));
        assert_eq!(rc.by_ray[3], b.h());
        s.check_tracking().unwrap();
    }

    #[test]
    fn blow_up_then_down_roundtrips() {
        let f1 = base_fa(1).unwrap();
        for cone in 0..4 {
            let up = f1.blow_up(cone).unwrap();
            let down = up.blow_down(cone + 1).unwrap();
            assert_eq!(down.rays(), f1.rays());
        }
    }

    #[test]
    fn tracking_survives_chains() {
        let mut s = base_p2();
        for cone in [0, 2, 1, 4] {
            s = s.blow_up(cone).unwrap();
            s.check_tracking().unwrap();
        }
        assert_eq!(s.basis().unwrap(), SurfaceBasis::p2(4));
    }

    #[test]
    fn simultaneous_blow_down_rejects_adjacent() {
        // Blowing up twice next to each other yields adjacent (-1)-rays.
        let s = base_p2().blow_up(0).unwrap().blow_up(0).unwrap();
        let minus = s.contractible_rays();
        assert!(minus.contains(&0) && minus.contains(&1), "contractible: {minus:?}");
        assert!(matches!(
            s.simultaneous_blow_down(&[0, 1]),
            Err(Error::AdjacentContraction(0, 1))
        ));
    }

    #[test]
    fn canonical_form_examples() {
        let f1 = base_fa(1).unwrap();
        assert_eq!(f1.canonical_form(), vec![-1, 0, 1, 0]);
        let p2 = base_p2();
        assert_eq!(p2.canonical_form(), vec![1, 1, 1]);
    }

    #[test]
    fn from_self_intersections_roundtrip() {
        let s = ToricSurface::from_self_intersections(&[0, 1, 0, -1]).unwrap();
        assert!(s.isomorphic(&base_fa(1).unwrap()));
        assert!(ToricSurface::from_self_intersections(&[0, 0, 0, 1]).is_err());
    }

    #[test]
    fn census_has_sixteen_members() {
        let census = nef_census();
        assert_eq!(census.len(), 16);
        assert!(census.iter().all(|s| s.anticanonical_nef()));
        assert!(census.iter().all(|s| s.n() <= 9));
        // Rank counts: 1 of 3 rays, 3 of 4, 2 of 5, 4 of 6, 2 of 7, 3 of 8, 1 of 9.
        let by_n: Vec<usize> =
            (3..=9).map(|n| census.iter().filter(|s| s.n() == n).count()).collect();
        assert_eq!(by_n, vec![1, 3, 2, 4, 2, 3, 1]);
    }

    #[test]
    fn census_without_nef_filter_is_larger() {
        let all = enumerate_surfaces(9, false);
        assert!(all.len() > 16);
    }

    #[test]
    fn chains_find_two_round_contraction() {
        // Fan with a (-3)-ray: contractible to a Hirzebruch surface in two
        // rounds but not one.
        let s = ToricSurface::from_self_intersections(&[0, -2, -2, -1, -3, -2, -1, -1]).unwrap();
        let chains = s.blow_down_chains(2);
        assert!(!chains.is_empty());
        assert!(chains.iter().all(|c| c.last().unwrap().result.n() <= 4));
        assert!(s.blow_down_chains(1).is_empty());
    }

    #[test]
    fn realizations_of_f1() {
        let f1 = ToricSurface::from_rays(base_fa(1).unwrap().rays().to_vec()).unwrap();
        let reals = f1.blowup_realizations();
        // F1 itself, and the plane underneath it.
        assert_eq!(reals.len(), 2);
        let bottoms: Vec<usize> = reals.iter().map(|r| r.bottom.n()).collect();
        assert!(bottoms.contains(&3) && bottoms.contains(&4));
    }

    #[test]
    fn parse_rays_roundtrip() {
        assert_eq!(parse_rays("1,0;0,1;-1,-1").unwrap(), vec![(1, 0), (0, 1), (-1, -1)]);
        assert!(parse_rays("1,0;0").is_err());
        assert!(parse_rays("a,b").is_err());
    }
}
