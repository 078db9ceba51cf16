//! Divisor classes on rational surfaces over two families of fixed bases.
//!
//! `P2(t)` is the Picard lattice of the projective plane blown up in `t`
//! points, with basis `H, R_1, ..., R_t`: `H` the hyperplane class and `R_i`
//! the total transforms of the exceptional divisors, so `H^2 = 1`,
//! `R_i^2 = -1` and all mixed products vanish.  `Fa(a, t)` is the lattice of
//! the Hirzebruch surface of parameter `a` blown up in `t` points, with basis
//! `P, Q, R_1, ..., R_t` where `P^2 = 0`, `P.Q = 1`, `Q^2 = a`.
//!
//! The two families are kept nominally distinct even where abstract
//! isomorphisms exist (`P2(t+1)` and `Fa(1, t)` describe the same surface):
//! every operation requires identical bases, and translation between bases
//! is always an explicit step.  Coefficients are arbitrary-precision
//! integers, so searches never wrap silently.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Basis of the Picard lattice of a rational surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum SurfaceBasis {
    /// Plane blown up in `t` points: `H, R_1, ..., R_t`.
    P2 { t: usize },
    /// Hirzebruch surface of parameter `a` blown up in `t` points:
    /// `P, Q, R_1, ..., R_t`.
    Fa { a: i64, t: usize },
}

impl SurfaceBasis {
    pub fn p2(t: usize) -> Self {
        SurfaceBasis::P2 { t }
    }

    pub fn fa(a: i64, t: usize) -> Self {
        SurfaceBasis::Fa { a, t }
    }

    /// Rank of the lattice.
    pub fn rank(&self) -> usize {
        match *self {
            SurfaceBasis::P2 { t } => 1 + t,
            SurfaceBasis::Fa { t, .. } => 2 + t,
        }
    }

    /// Number of blow-up classes `R_i`.
    pub fn blowups(&self) -> usize {
        match *self {
            SurfaceBasis::P2 { t } | SurfaceBasis::Fa { t, .. } => t,
        }
    }

    /// The same basis with one more blow-up class.
    pub fn extended(&self) -> Self {
        match *self {
            SurfaceBasis::P2 { t } => SurfaceBasis::P2 { t: t + 1 },
            SurfaceBasis::Fa { a, t } => SurfaceBasis::Fa { a, t: t + 1 },
        }
    }

    /// Intersection number of the `i`-th and `j`-th basis classes.
    pub fn gram(&self, i: usize, j: usize) -> i64 {
        match *self {
            SurfaceBasis::P2 { .. } => match (i, j) {
                (0, 0) => 1,
                _ if i == j => -1,
                _ => 0,
            },
            SurfaceBasis::Fa { a, .. } => match (i, j) {
                (0, 0) => 0,
                (0, 1) | (1, 0) => 1,
                (1, 1) => a,
                _ if i == j => -1,
                _ => 0,
            },
        }
    }

    /// Name of the `i`-th basis class, for display.
    fn unit_name(&self, i: usize) -> String {
        match *self {
            SurfaceBasis::P2 { .. } => {
                if i == 0 {
                    "H".into()
                } else {
                    format!("R{i}")
                }
            }
            SurfaceBasis::Fa { .. } => match i {
                0 => "P".into(),
                1 => "Q".into(),
                _ => format!("R{}", i - 1),
            },
        }
    }

    pub fn zero(&self) -> DivisorClass {
        DivisorClass { basis: *self, coeffs: vec![BigInt::zero(); self.rank()] }
    }

    /// The `i`-th basis class as a divisor class (0-indexed).
    pub fn unit(&self, i: usize) -> DivisorClass {
        assert!(i < self.rank());
        let mut d = self.zero();
        d.coeffs[i] = BigInt::one();
        d
    }

    /// Hyperplane class `H` (plane bases only).
    pub fn h(&self) -> DivisorClass {
        assert!(matches!(self, SurfaceBasis::P2 { .. }));
        self.unit(0)
    }

    /// Fiber class `P` (Hirzebruch bases only).
    pub fn p(&self) -> DivisorClass {
        assert!(matches!(self, SurfaceBasis::Fa { .. }));
        self.unit(0)
    }

    /// Section class `Q` (Hirzebruch bases only).
    pub fn q(&self) -> DivisorClass {
        assert!(matches!(self, SurfaceBasis::Fa { .. }));
        self.unit(1)
    }

    /// Blow-up class `R_i`, 1-indexed.
    pub fn r(&self, i: usize) -> DivisorClass {
        assert!(i >= 1 && i <= self.blowups());
        match *self {
            SurfaceBasis::P2 { .. } => self.unit(i),
            SurfaceBasis::Fa { .. } => self.unit(i + 1),
        }
    }

    pub fn name(&self) -> String {
        match *self {
            SurfaceBasis::P2 { t } => format!("P2({t})"),
            SurfaceBasis::Fa { a, t } => format!("Fa({a},{t})"),
        }
    }
}

pub(crate) mod coeff_serde {
    //! Divisor coefficients serialize as plain JSON integers; values outside
    //! the 64-bit range fall back to decimal strings so nothing is lost.
    use num::bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = ser.serialize_seq(Some(v.len()))?;
        for x in v {
            match i64::try_from(x.clone()) {
                Ok(n) => seq.serialize_element(&n)?,
                Err(_) => seq.serialize_element(&x.to_string())?,
            }
        }
        seq.end()
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Coeff {
        Int(i64),
        Big(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<BigInt>, D::Error> {
        let raw = Vec::<Coeff>::deserialize(de)?;
        raw.into_iter()
            .map(|c| match c {
                Coeff::Int(n) => Ok(BigInt::from(n)),
                Coeff::Big(s) => s.parse::<BigInt>().map_err(D::Error::custom),
            })
            .collect()
    }
}

/// An element of the Picard lattice, written in a fixed [`SurfaceBasis`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DivisorClass {
    pub basis: SurfaceBasis,
    #[serde(with = "coeff_serde")]
    pub coeffs: Vec<BigInt>,
}

impl DivisorClass {
    pub fn new(basis: SurfaceBasis, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != basis.rank() {
            return Err(Error::CoeffLength { expected: basis.rank(), got: coeffs.len() });
        }
        Ok(DivisorClass { basis, coeffs })
    }

    pub fn from_i64(basis: SurfaceBasis, coeffs: &[i64]) -> Result<Self> {
        DivisorClass::new(basis, coeffs.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(BigInt::is_zero)
    }

    /// Intersection product.  The bases must be identical; `P2(t+1)` and
    /// `Fa(1, t)` classes never mix implicitly.
    pub fn intersect(&self, other: &DivisorClass) -> Result<BigInt> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(self.basis.name(), other.basis.name()));
        }
        Ok(self.dot(other))
    }

    /// Intersection product for classes known to share a basis.
    pub(crate) fn dot(&self, other: &DivisorClass) -> BigInt {
        debug_assert_eq!(self.basis, other.basis);
        let c = &self.coeffs;
        let d = &other.coeffs;
        let mut acc;
        let first_r;
        match self.basis {
            SurfaceBasis::P2 { .. } => {
                acc = &c[0] * &d[0];
                first_r = 1;
            }
            SurfaceBasis::Fa { a, .. } => {
                acc = &c[0] * &d[1] + &c[1] * &d[0] + BigInt::from(a) * &c[1] * &d[1];
                first_r = 2;
            }
        }
        for i in first_r..c.len() {
            acc -= &c[i] * &d[i];
        }
        acc
    }

    pub fn self_intersection(&self) -> BigInt {
        self.dot(self)
    }

    /// The same class in the basis extended by one more blow-up class.
    pub fn extended(&self) -> DivisorClass {
        let mut coeffs = self.coeffs.clone();
        coeffs.push(BigInt::zero());
        DivisorClass { basis: self.basis.extended(), coeffs }
    }
}

impl std::ops::Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        assert_eq!(self.basis, rhs.basis, "divisor class addition across bases");
        DivisorClass {
            basis: self.basis,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl std::ops::Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        assert_eq!(self.basis, rhs.basis, "divisor class subtraction across bases");
        DivisorClass {
            basis: self.basis,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl std::ops::Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass {
            basis: self.basis,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = self.basis.unit_name(i);
            if first {
                if *c == BigInt::one() {
                    write!(f, "{name}")?;
                } else if *c == -BigInt::one() {
                    write!(f, "-{name}")?;
                } else {
                    write!(f, "{c}{name}")?;
                }
                first = false;
            } else {
                let sign = if c.is_negative() { "-" } else { "+" };
                let abs = c.abs();
                if abs == BigInt::one() {
                    write!(f, " {sign} {name}")?;
                } else {
                    write!(f, " {sign} {abs}{name}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Canonical class in the given basis: `-3H + sum R_i` for the plane,
/// `(a-2)P - 2Q + sum R_i` for Hirzebruch surfaces.
pub fn canonical_class(basis: SurfaceBasis) -> DivisorClass {
    let mut d = basis.zero();
    match basis {
        SurfaceBasis::P2 { t } => {
            d.coeffs[0] = BigInt::from(-3);
            for i in 1..=t {
                d.coeffs[i] = BigInt::one();
            }
        }
        SurfaceBasis::Fa { a, t } => {
            d.coeffs[0] = BigInt::from(a - 2);
            d.coeffs[1] = BigInt::from(-2);
            for i in 2..2 + t {
                d.coeffs[i] = BigInt::one();
            }
        }
    }
    d
}

/// Euler characteristic `chi(D) = 1 + (D.D - K.D) / 2` (Riemann-Roch on a
/// rational surface).
///
/// `D.D - K.D` is even for every integral class; a parity failure would mean
/// a corrupted Gram matrix, so it panics rather than returning an error.
pub fn euler_char(d: &DivisorClass) -> BigInt {
    let k = canonical_class(d.basis);
    let num = d.self_intersection() - k.dot(d);
    let (q, r) = num::Integer::div_rem(&num, &BigInt::from(2));
    assert!(r.is_zero(), "D.D - K.D must be even; Gram data corrupted");
    BigInt::one() + q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(d: &DivisorClass) -> i64 {
        i64::try_from(euler_char(d)).unwrap()
    }

    #[test]
    fn gram_examples() {
        let b = SurfaceBasis::p2(2);
        assert_eq!(b.h().intersect(&b.h()).unwrap(), BigInt::one());
        assert_eq!(b.r(1).intersect(&b.r(1)).unwrap(), BigInt::from(-1));
        assert_eq!(b.h().intersect(&b.r(2)).unwrap(), BigInt::zero());
        let f = SurfaceBasis::fa(3, 1);
        assert_eq!(f.p().intersect(&f.p()).unwrap(), BigInt::zero());
        assert_eq!(f.p().intersect(&f.q()).unwrap(), BigInt::one());
        assert_eq!(f.q().intersect(&f.q()).unwrap(), BigInt::from(3));
        assert_eq!(f.r(1).intersect(&f.q()).unwrap(), BigInt::zero());
    }

    #[test]
    fn basis_mismatch_rejected() {
        let h = SurfaceBasis::p2(1).h();
        let p = SurfaceBasis::fa(1, 0).p();
        assert!(matches!(h.intersect(&p), Err(Error::BasisMismatch(_, _))));
        // Same surface abstractly, still distinct bases.
        let h2 = SurfaceBasis::p2(1).h();
        assert!(h.intersect(&h2).is_ok());
    }

    #[test]
    fn canonical_class_squares() {
        // K^2 = 9 - t on the blown-up plane, 8 - t on blown-up Hirzebruch.
        for t in 0..5 {
            let k = canonical_class(SurfaceBasis::p2(t));
            assert_eq!(k.self_intersection(), BigInt::from(9 - t as i64));
        }
        for a in 0..4 {
            for t in 0..5 {
                let k = canonical_class(SurfaceBasis::fa(a, t));
                assert_eq!(k.self_intersection(), BigInt::from(8 - t as i64));
            }
        }
    }

    #[test]
    fn euler_char_examples() {
        let b = SurfaceBasis::p2(0);
        assert_eq!(chi(&b.zero()), 1);
        assert_eq!(chi(&b.h()), 3);
        let f = SurfaceBasis::fa(2, 0);
        assert_eq!(chi(&f.zero()), 1);
        assert_eq!(chi(&f.p()), 2);
    }

    #[test]
    fn euler_char_symmetries() {
        // chi(D) + chi(-D) = 2 + D.D and chi(D) - chi(-D) = -K.D, over a
        // grid of small classes on both basis families.
        for basis in [SurfaceBasis::p2(2), SurfaceBasis::fa(2, 1)] {
            let k = canonical_class(basis);
            let r = basis.rank();
            let mut c = vec![-2i64; r];
            loop {
                let d = DivisorClass::from_i64(basis, &c).unwrap();
                let plus = euler_char(&d);
                let minus = euler_char(&-&d);
                assert_eq!(&plus + &minus, BigInt::from(2) + d.self_intersection());
                assert_eq!(&plus - &minus, -k.dot(&d));
                // Advance odometer.
                let mut i = 0;
                loop {
                    if i == r {
                        break;
                    }
                    c[i] += 1;
                    if c[i] <= 2 {
                        break;
                    }
                    c[i] = -2;
                    i += 1;
                }
                if i == r {
                    break;
                }
            }
        }
    }

    #[test]
    fn chi_zero_forces_linear_formula() {
        // If chi(-D) = 0 then chi(D) = -K.D = D.D + 2.
        for basis in [SurfaceBasis::p2(2), SurfaceBasis::fa(1, 1)] {
            let k = canonical_class(basis);
            let r = basis.rank();
            let mut c = vec![-3i64; r];
            loop {
                let d = DivisorClass::from_i64(basis, &c).unwrap();
                if euler_char(&-&d).is_zero() {
                    let chi_d = euler_char(&d);
                    assert_eq!(chi_d, -k.dot(&d));
                    assert_eq!(chi_d, d.self_intersection() + BigInt::from(2));
                }
                let mut i = 0;
                loop {
                    if i == r {
                        break;
                    }
                    c[i] += 1;
                    if c[i] <= 3 {
                        break;
                    }
                    c[i] = -3;
                    i += 1;
                }
                if i == r {
                    break;
                }
            }
        }
    }

    #[test]
    fn display_and_json_roundtrip() {
        let b = SurfaceBasis::p2(2);
        let d = &(&b.h() - &b.r(1)) - &b.r(2);
        assert_eq!(d.to_string(), "H - R1 - R2");
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, r#"{"basis":{"kind":"P2","t":2},"coeffs":[1,-1,-1]}"#);
        let back: DivisorClass = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);

        let f = SurfaceBasis::fa(2, 0);
        let e = &f.p() - &f.q();
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(json, r#"{"basis":{"kind":"Fa","a":2,"t":0},"coeffs":[1,-1]}"#);
        let back: DivisorClass = serde_json::from_str(&json).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn huge_coefficients_survive_json() {
        let b = SurfaceBasis::p2(0);
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let d = DivisorClass::new(b, vec![big.clone()]).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        let back: DivisorClass = serde_json::from_str(&json).unwrap();
        assert_eq!(back.coeffs[0], big);
    }
}
