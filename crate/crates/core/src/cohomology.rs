//! Sheaf cohomology of invertible sheaves on smooth complete toric surfaces.
//!
//! A divisor class is first lifted to a torus-invariant divisor
//! `D = sum d_i D_i`.  Then `h^0` is the number of lattice points of the
//! polygon `{m : <m, l_i> >= -d_i}`, `h^2` is `h^0` of the Serre dual
//! `K - D`, which has coefficients `-1 - d_i`, and `h^1` follows from
//! Riemann-Roch.  Everything is exact: polygon vertices are computed in
//! rational arithmetic and points are counted row by row.

use crate::error::{Error, Result};
use crate::fans::ToricSurface;
use crate::linalg::IMat;
use crate::picard::DivisorClass;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use std::collections::HashMap;
use std::sync::Mutex;

/// Lift a divisor class to torus-invariant coefficients `d_i`, normalized so
/// that `d_0 = d_1 = 0`.  The normalized representative of a class is unique
/// because the characters `m` shift `(d_i)` by `(<m, l_i>)` and the first
/// two rays form a lattice basis.
pub fn lift_class(surface: &ToricSurface, class: &DivisorClass) -> Result<Vec<BigInt>> {
    let rc = surface.classes().ok_or(Error::MissingClasses)?;
    if class.basis != rc.basis {
        return Err(Error::BasisMismatch(rc.basis.name(), class.basis.name()));
    }
    let n = surface.n();
    let rank = rc.basis.rank();
    // Columns of `a` are the classes of the prime divisors; solve
    // `a d = class` over the integers.
    let mut a = IMat::zero(rank, n);
    for (j, d) in rc.by_ray.iter().enumerate() {
        for i in 0..rank {
            a.a[i][j] = d.coeffs[i].clone();
        }
    }
    let d = solve_integer(&a, &class.coeffs).ok_or(Error::NotLiftable)?;
    Ok(normalize_rep(surface, &d))
}

fn solve_integer(a: &IMat, b: &[BigInt]) -> Option<Vec<BigInt>> {
    crate::linalg::solve(a, b)
}

/// Shift `d` by a character so the first two coordinates vanish.
pub fn normalize_rep(surface: &ToricSurface, d: &[BigInt]) -> Vec<BigInt> {
    let rays = surface.rays();
    let (x0, y0) = (BigInt::from(rays[0].0), BigInt::from(rays[0].1));
    let (x1, y1) = (BigInt::from(rays[1].0), BigInt::from(rays[1].1));
    // [[x0,y0],[x1,y1]] has determinant 1; invert it exactly.
    let m1 = -&y1 * &d[0] + &y0 * &d[1];
    let m2 = &x1 * &d[0] - &x0 * &d[1];
    let out: Vec<BigInt> = rays
        .iter()
        .zip(d)
        .map(|(&(x, y), di)| di + &m1 * BigInt::from(x) + &m2 * BigInt::from(y))
        .collect();
    debug_assert!(out[0].is_zero() && out[1].is_zero());
    out
}

/// Intersection number `D . E` of two torus-invariant divisors.
pub fn torus_intersection(surface: &ToricSurface, d: &[BigInt], e: &[BigInt]) -> BigInt {
    let n = surface.n();
    let a = surface.self_intersections();
    let mut total = BigInt::zero();
    for i in 0..n {
        let prev = &e[(i + n - 1) % n];
        let next = &e[(i + 1) % n];
        total += &d[i] * (BigInt::from(a[i]) * &e[i] + prev + next);
    }
    total
}

/// Euler characteristic of `O(D)` from the torus-invariant data.
pub fn euler_char_divisor(surface: &ToricSurface, d: &[BigInt]) -> BigInt {
    let n = surface.n();
    let a = surface.self_intersections();
    let d2 = torus_intersection(surface, d, d);
    // K = -sum D_i, and D_i . D = a_i d_i + d_{i-1} + d_{i+1} summed gives
    // K . D = -sum d_i (a_i + 2).
    let kd: BigInt =
        -(0..n).map(|i| &d[i] * BigInt::from(a[i] + 2)).sum::<BigInt>();
    let num = d2 - kd;
    debug_assert!((&num % BigInt::from(2)).is_zero(), "D.D - K.D must be even");
    BigInt::one() + num / BigInt::from(2)
}

/// Lattice points of the polygon `{m : <m, l_i> >= -d_i}`.
///
/// The polygon is bounded because the rays positively span the plane.  Its
/// vertices are intersections of pairs of constraint lines; rows between the
/// extreme vertex heights are scanned with exact ceiling/floor bounds.
pub fn section_points(surface: &ToricSurface, d: &[BigInt]) -> Vec<(BigInt, BigInt)> {
    let rays = surface.rays();
    let n = rays.len();
    let feasible = |mx: &BigRational, my: &BigRational| -> bool {
        (0..n).all(|i| {
            let lhs = BigRational::from(BigInt::from(rays[i].0)) * mx
                + BigRational::from(BigInt::from(rays[i].1)) * my;
            lhs >= BigRational::from(-d[i].clone())
        })
    };

    // Vertex heights bound the row range.
    let mut y_min: Option<BigRational> = None;
    let mut y_max: Option<BigRational> = None;
    for i in 0..n {
        for j in i + 1..n {
            let (xi, yi) = (BigInt::from(rays[i].0), BigInt::from(rays[i].1));
            let (xj, yj) = (BigInt::from(rays[j].0), BigInt::from(rays[j].1));
            let det = &xi * &yj - &yi * &xj;
            if det.is_zero() {
                continue;
            }
            let det = BigRational::from(det);
            let bi = BigRational::from(-d[i].clone());
            let bj = BigRational::from(-d[j].clone());
            let mx = (&bi * BigRational::from(yj.clone()) - &bj * BigRational::from(yi.clone()))
                / det.clone();
            let my = (&bj * BigRational::from(xi.clone()) - &bi * BigRational::from(xj.clone()))
                / det;
            if feasible(&mx, &my) {
                if y_min.as_ref().map_or(true, |v| my < *v) {
                    y_min = Some(my.clone());
                }
                if y_max.as_ref().map_or(true, |v| my > *v) {
                    y_max = Some(my);
                }
            }
        }
    }
    let (y_min, y_max) = match (y_min, y_max) {
        (Some(a), Some(b)) => (a.ceil().to_integer(), b.floor().to_integer()),
        _ => return Vec::new(),
    };

    let mut points = Vec::new();
    let mut y = y_min;
    while y <= y_max {
        // Constraint x*mx >= -d - y*my: a lower bound when x > 0, an upper
        // bound when x < 0, a pure test when x = 0.
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        let mut row_ok = true;
        for i in 0..n {
            let rhs = -&d[i] - BigInt::from(rays[i].1) * &y;
            let x = rays[i].0;
            if x == 0 {
                if rhs > BigInt::zero() {
                    row_ok = false;
                    break;
                }
            } else {
                let bound = BigRational::new(rhs, BigInt::from(x));
                if x > 0 {
                    let b = bound.ceil().to_integer();
                    if lo.as_ref().map_or(true, |v| b > *v) {
                        lo = Some(b);
                    }
                } else {
                    let b = bound.floor().to_integer();
                    if hi.as_ref().map_or(true, |v| b < *v) {
                        hi = Some(b);
                    }
                }
            }
        }
        if row_ok {
            if let (Some(lo), Some(hi)) = (lo, hi) {
                let mut x = lo;
                while x <= hi {
                    points.push((x.clone(), y.clone()));
                    x += BigInt::one();
                }
            }
        }
        y += BigInt::one();
    }
    points
}

pub fn h0_divisor(surface: &ToricSurface, d: &[BigInt]) -> usize {
    section_points(surface, d).len()
}

/// `(h^0, h^1, h^2)` of `O(D)` for a torus-invariant `D`.
pub fn cohomology_divisor(surface: &ToricSurface, d: &[BigInt]) -> (usize, usize, usize) {
    let h0 = h0_divisor(surface, d);
    let serre: Vec<BigInt> = d.iter().map(|di| -BigInt::one() - di).collect();
    let h2 = h0_divisor(surface, &serre);
    let chi = euler_char_divisor(surface, d);
    let h1 = BigInt::from(h0) + BigInt::from(h2) - chi;
    assert!(
        h1 >= BigInt::zero() && h1 <= BigInt::from(usize::MAX / 2),
        "h1 out of range; lattice data corrupted"
    );
    let h1 = usize::try_from(u64::try_from(&h1).expect("checked range")).expect("checked range");
    (h0, h1, h2)
}

/// Cohomology engine for one surface, memoizing by normalized divisor.
pub struct Cohomology<'a> {
    surface: &'a ToricSurface,
    cache: Mutex<HashMap<Vec<BigInt>, (usize, usize, usize)>>,
}

impl<'a> Cohomology<'a> {
    pub fn new(surface: &'a ToricSurface) -> Self {
        Cohomology { surface, cache: Mutex::new(HashMap::new()) }
    }

    pub fn surface(&self) -> &'a ToricSurface {
        self.surface
    }

    pub fn of_divisor(&self, d: &[BigInt]) -> (usize, usize, usize) {
        let key = normalize_rep(self.surface, d);
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return *hit;
        }
        let value = cohomology_divisor(self.surface, &key);
        self.cache.lock().unwrap().insert(key, value);
        value
    }

    pub fn of_class(&self, class: &DivisorClass) -> Result<(usize, usize, usize)> {
        let d = lift_class(self.surface, class)?;
        Ok(self.of_divisor(&d))
    }

    pub fn cached_entries(&self) -> usize {
        self.cache.lock().unwrap().len()
    }
}

/// Integer lattice points of the section polygon of a class, for building
/// morphism spaces between invertible sheaves.  Fails if a coordinate does
/// not fit in an `i64`.
pub fn section_chars(surface: &ToricSurface, class: &DivisorClass) -> Result<Vec<(i64, i64)>> {
    let d = lift_class(surface, class)?;
    section_points(surface, &d)
        .into_iter()
        .map(|(x, y)| {
            let x = i64::try_from(&x).map_err(|_| Error::Overflow)?;
            let y = i64::try_from(&y).map_err(|_| Error::Overflow)?;
            Ok((x, y))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fans::{base_fa, base_p2};
    use crate::picard::{canonical_class, DivisorClass};

    #[test]
    fn plane_sections_match_binomials() {
        let p2 = base_p2();
        let b = p2.basis().unwrap();
        let coh = Cohomology::new(&p2);
        for k in 0i64..6 {
            let class = DivisorClass::from_i64(b, &[k]).unwrap();
            let (h0, h1, h2) = coh.of_class(&class).unwrap();
            assert_eq!(h0 as i64, (k + 1) * (k + 2) / 2);
            assert_eq!((h1, h2), (0, 0));
        }
        let minus = DivisorClass::from_i64(b, &[-1]).unwrap();
        assert_eq!(coh.of_class(&minus).unwrap(), (0, 0, 0));
        let minus3 = DivisorClass::from_i64(b, &[-3]).unwrap();
        assert_eq!(coh.of_class(&minus3).unwrap(), (0, 0, 1));
    }

    #[test]
    fn hirzebruch_sections() {
        let f2 = base_fa(2).unwrap();
        let b = f2.basis().unwrap();
        let coh = Cohomology::new(&f2);
        // O(P): a fiber; two sections.
        assert_eq!(coh.of_class(&b.p()).unwrap(), (2, 0, 0));
        // O(Q): section with Q^2 = 2; h0 = chi = 4.
        assert_eq!(coh.of_class(&b.q()).unwrap(), (4, 0, 0));
        // Q - 2P is the (-2)-curve: chi = 0, so the single section forces h1 = 1.
        let neg = DivisorClass::from_i64(b, &[-2, 1]).unwrap();
        assert_eq!(coh.of_class(&neg).unwrap(), (1, 1, 0));
    }

    #[test]
    fn serre_duality_on_canonical() {
        let p2 = base_p2();
        let b = p2.basis().unwrap();
        let coh = Cohomology::new(&p2);
        let k = canonical_class(b);
        assert_eq!(coh.of_class(&k).unwrap(), (0, 0, 1));
        let mk = -&k;
        assert_eq!(coh.of_class(&mk).unwrap().0, 10);
    }

    #[test]
    fn blown_up_plane_exceptional_classes() {
        let s = base_p2().blow_up(0).unwrap();
        let b = s.basis().unwrap();
        let coh = Cohomology::new(&s);
        let r = b.r(1);
        assert_eq!(coh.of_class(&r).unwrap(), (1, 0, 0));
        assert_eq!(coh.of_class(&(-&r)).unwrap(), (0, 0, 0));
        let h_minus_r = &b.h() - &b.r(1);
        assert_eq!(coh.of_class(&h_minus_r).unwrap(), (2, 0, 0));
    }

    #[test]
    fn lift_is_normalized_and_linear() {
        let s = base_p2().blow_up(1).unwrap().blow_up(0).unwrap();
        let b = s.basis().unwrap();
        let h = b.h();
        let r1 = b.r(1);
        let dh = lift_class(&s, &h).unwrap();
        let dr = lift_class(&s, &r1).unwrap();
        assert!(dh[0].is_zero() && dh[1].is_zero());
        let sum = lift_class(&s, &(&h + &r1)).unwrap();
        let pointwise: Vec<BigInt> = dh.iter().zip(&dr).map(|(a, b)| a + b).collect();
        assert_eq!(sum, pointwise);
        // The lift really represents the class: intersection numbers match.
        let dk = lift_class(&s, &canonical_class(b)).unwrap();
        assert_eq!(torus_intersection(&s, &dh, &dk), BigInt::from(-3));
    }

    #[test]
    fn euler_char_agrees_with_lattice_route() {
        let s = base_fa(1).unwrap().blow_up(2).unwrap();
        let b = s.basis().unwrap();
        for c0 in -2i64..=2 {
            for c1 in -2i64..=2 {
                for c2 in -1i64..=1 {
                    let class = DivisorClass::from_i64(b, &[c0, c1, c2]).unwrap();
                    let d = lift_class(&s, &class).unwrap();
                    assert_eq!(
                        euler_char_divisor(&s, &d),
                        crate::picard::euler_char(&class),
                        "chi mismatch at {class}"
                    );
                }
            }
        }
    }
}
