//! Families of finite-dimensional algebras attached to rational surfaces:
//! the algebra of a blow-up of the plane in distinct points, presented by
//! explicit relation spaces depending on the point configuration, and a
//! parametrized path algebra whose specializations recover the Hirzebruch
//! surface algebras of a fixed total dimension.

use crate::error::{Error, Result};
use crate::linalg::QMat;
use crate::quivers::{Arrow, Label, Quiver, Relation};
use num::{BigInt, BigRational, One, Zero};

/// A point of the projective plane with integer homogeneous coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjPoint(pub [BigInt; 3]);

impl ProjPoint {
    pub fn new(coords: [BigInt; 3]) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::BadPointConfig("zero coordinate vector".into()));
        }
        Ok(ProjPoint(coords))
    }

    pub fn from_i64(x: i64, y: i64, z: i64) -> Result<Self> {
        ProjPoint::new([BigInt::from(x), BigInt::from(y), BigInt::from(z)])
    }

    /// Same point of the plane, i.e. proportional coordinates.
    pub fn same_point(&self, other: &ProjPoint) -> bool {
        let a = &self.0;
        let b = &other.0;
        (0..3).all(|i| {
            let j = (i + 1) % 3;
            &a[i] * &b[j] == &a[j] * &b[i]
        })
    }
}

impl std::fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}:{}:{})", self.0[0], self.0[1], self.0[2])
    }
}

/// Parse `"1,0,0; 0,1,0; 1,1,1"` into points.
pub fn parse_points(input: &str) -> Result<Vec<ProjPoint>> {
    let mut out = Vec::new();
    for chunk in input.split(';') {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            continue;
        }
        let coords: Vec<BigInt> = chunk
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad coordinate {c:?}")))
            })
            .collect::<Result<_>>()?;
        let [x, y, z]: [BigInt; 3] = coords
            .try_into()
            .map_err(|_| Error::BadPointConfig("points need three coordinates".into()))?;
        out.push(ProjPoint::new([x, y, z])?);
    }
    if out.is_empty() {
        return Err(Error::BadPointConfig("no points given".into()));
    }
    Ok(out)
}

fn require_distinct(points: &[ProjPoint]) -> Result<()> {
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i].same_point(&points[j]) {
                return Err(Error::BadPointConfig(format!(
                    "points {} and {} coincide: {}",
                    i + 1,
                    j + 1,
                    points[i]
                )));
            }
        }
    }
    Ok(())
}

/// Exponent vectors of the degree-`d` monomials in three variables, in a
/// fixed order.
pub fn monomials(d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            out.push([i, j, d - i - j]);
        }
    }
    out
}

fn eval_monomial(m: &[u32; 3], p: &ProjPoint) -> BigRational {
    let mut v = BigInt::one();
    for (e, c) in m.iter().zip(&p.0) {
        v *= c.pow(*e);
    }
    BigRational::from_integer(v)
}

/// Coefficient vectors of the degree-`d` forms vanishing at all the points.
pub fn vanishing_forms(points: &[ProjPoint], d: u32) -> Vec<Vec<BigRational>> {
    let mons = monomials(d);
    let rows: Vec<Vec<BigRational>> =
        points.iter().map(|p| mons.iter().map(|m| eval_monomial(m, p)).collect()).collect();
    QMat::from_rows(rows).kernel()
}

/// The two-dimensional space of linear forms through one point.
pub fn hyperplane_space(point: &ProjPoint) -> Vec<Vec<BigRational>> {
    vanishing_forms(std::slice::from_ref(point), 1)
}

/// Multiply two linear forms into degree-2 coefficients.
fn multiply_linear(f: &[BigRational], g: &[BigRational]) -> Vec<BigRational> {
    let mons1 = monomials(1);
    let mons2 = monomials(2);
    let index = |m: &[u32; 3]| mons2.iter().position(|x| x == m).unwrap();
    let mut out = vec![BigRational::zero(); mons2.len()];
    for (i, mi) in mons1.iter().enumerate() {
        for (j, mj) in mons1.iter().enumerate() {
            let prod = [mi[0] + mj[0], mi[1] + mj[1], mi[2] + mj[2]];
            let term = &f[i] * &g[j];
            let slot = &mut out[index(&prod)];
            *slot = &*slot + term;
        }
    }
    out
}

/// Dimensions of the three kinds of relation spaces cutting the blow-up
/// algebra out of the free path algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSpaces {
    /// Per point: kernel of multiplying its hyperplane forms with all
    /// linear forms into quadrics.
    pub per_point: Vec<usize>,
    /// Kernel of summing all hyperplane spaces inside the linear forms.
    pub hyperplane_sum: usize,
    /// Kernel of the multiplication of two linear forms into quadrics.
    pub symmetrizer: usize,
}

pub fn relation_spaces(points: &[ProjPoint]) -> Result<RelationSpaces> {
    require_distinct(points)?;
    let lin = monomials(1);
    let quad_len = monomials(2).len();
    let mut per_point = Vec::new();
    let mut sum_cols: Vec<Vec<BigRational>> = Vec::new();
    for p in points {
        let h = hyperplane_space(p);
        // Columns of H_i (x) V* -> S^2 V*.
        let mut cols: Vec<Vec<BigRational>> = Vec::new();
        for hf in &h {
            for k in 0..lin.len() {
                let mut unit = vec![BigRational::zero(); lin.len()];
                unit[k] = BigRational::one();
                cols.push(multiply_linear(hf, &unit));
            }
            sum_cols.push(hf.clone());
        }
        let rows: Vec<Vec<BigRational>> =
            (0..quad_len).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        per_point.push(QMat::from_rows(rows).kernel().len());
    }
    let hyperplane_sum = {
        let rows: Vec<Vec<BigRational>> =
            (0..lin.len()).map(|r| sum_cols.iter().map(|c| c[r].clone()).collect()).collect();
        QMat::from_rows(rows).kernel().len()
    };
    let symmetrizer = {
        let mut cols: Vec<Vec<BigRational>> = Vec::new();
        for i in 0..lin.len() {
            for j in 0..lin.len() {
                let mut f = vec![BigRational::zero(); lin.len()];
                let mut g = vec![BigRational::zero(); lin.len()];
                f[i] = BigRational::one();
                g[j] = BigRational::one();
                cols.push(multiply_linear(&f, &g));
            }
        }
        let rows: Vec<Vec<BigRational>> =
            (0..quad_len).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        QMat::from_rows(rows).kernel().len()
    };
    Ok(RelationSpaces { per_point, hyperplane_sum, symmetrizer })
}

/// Dimension of the algebra of the blow-up in the given distinct points:
/// the sum of all morphism spaces between the sheaves
/// `O, R_t, ..., R_1, H, 2H`, each computed from the configuration.
pub fn algebra_dimension(points: &[ProjPoint]) -> Result<u64> {
    require_distinct(points)?;
    let t = points.len() as u64;
    // Identities, O -> R_i, O -> H, O -> 2H, H -> 2H.
    let mut dim = (t + 3) + t + 3 + 6 + 3;
    for p in points {
        let slice = std::slice::from_ref(p);
        dim += vanishing_forms(slice, 1).len() as u64;
        dim += vanishing_forms(slice, 2).len() as u64;
    }
    Ok(dim)
}

/// Points `(1 : i : i^2)` on a conic: pairwise distinct, no three on a line.
pub fn generic_points(t: usize) -> Vec<ProjPoint> {
    (0..t as i64)
        .map(|i| ProjPoint::from_i64(1, i, i * i).unwrap())
        .collect()
}

/// Transform the points by an invertible integer matrix.
pub fn apply_gl3(points: &[ProjPoint], m: &[[i64; 3]; 3]) -> Result<Vec<ProjPoint>> {
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if det == 0 {
        return Err(Error::BadPointConfig("singular transformation".into()));
    }
    points
        .iter()
        .map(|p| {
            let c: Vec<BigInt> = (0..3)
                .map(|i| (0..3).map(|j| BigInt::from(m[i][j]) * &p.0[j]).sum())
                .collect();
            ProjPoint::new([c[0].clone(), c[1].clone(), c[2].clone()])
        })
        .collect()
}

/// The four-vertex path algebra with `k + 1` middle arrows and chain
/// relations indexed by `0..k`; dropping one index specializes to the
/// algebra of a Hirzebruch surface.
pub fn mk_quiver(k: usize) -> (Quiver, Vec<Relation>) {
    let mut arrows = vec![
        Arrow { src: 0, dst: 1, label: Label::Name("a1".into()) },
        Arrow { src: 0, dst: 1, label: Label::Name("a2".into()) },
    ];
    for j in 0..=k {
        arrows.push(Arrow { src: 1, dst: 2, label: Label::Name(format!("l{j}")) });
    }
    arrows.push(Arrow { src: 2, dst: 3, label: Label::Name("d1".into()) });
    arrows.push(Arrow { src: 2, dst: 3, label: Label::Name("d2".into()) });
    let quiver = Quiver { vertices: 4, arrows };
    let relations = chain_relations(k, None);
    (quiver, relations)
}

fn chain_relations(k: usize, dropped: Option<usize>) -> Vec<Relation> {
    // Arrow ids: a1 = 0, a2 = 1, l_j = 2 + j, d1 = k + 3, d2 = k + 4.
    let l = |j: usize| 2 + j;
    let (d1, d2) = (k + 3, k + 4);
    let mut out = Vec::new();
    for i in 0..k {
        if Some(i) == dropped {
            continue;
        }
        out.push(Relation { lhs: vec![0, l(i)], rhs: vec![1, l(i + 1)] });
        out.push(Relation { lhs: vec![l(i), d1], rhs: vec![l(i + 1), d2] });
    }
    out
}

/// The member of the `k`-family with the relation pair at `s` dropped; its
/// quiver and relation count match the surface of invariant `k - 1 - 2s`.
pub fn specialize_mk(k: usize, s: usize) -> Result<(Quiver, Vec<Relation>)> {
    if 2 * s + 1 > k {
        return Err(Error::ParamRange(format!("need 0 <= {s} < ({k} + 1)/2")));
    }
    let (quiver, _) = mk_quiver(k);
    Ok((quiver, chain_relations(k, Some(s))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::augment::{base_system, BaseKind};
    use crate::fans::base_fa;
    use crate::quivers::{build_quiver, hom_matrix, path_algebra_dim, quiver_isomorphic};
    use crate::systems::to_sequence;

    #[test]
    fn kernel_dimensions_on_generic_points() {
        for t in 1..=5 {
            let pts = generic_points(t);
            let spaces = relation_spaces(&pts).unwrap();
            assert_eq!(spaces.per_point, vec![1; t]);
            assert_eq!(spaces.symmetrizer, 3);
            let expected = if t >= 2 { 2 * t - 3 } else { 0 };
            assert_eq!(spaces.hyperplane_sum, expected);
        }
    }

    #[test]
    fn algebra_dimension_only_needs_distinct_points() {
        for t in 1..=5 {
            assert_eq!(algebra_dimension(&generic_points(t)).unwrap(), 9 * t as u64 + 15);
        }
        // Three distinct points on a line give the same dimension.
        let collinear = parse_points("1,0,0; 0,0,1; 1,0,1").unwrap();
        assert_eq!(algebra_dimension(&collinear).unwrap(), 42);
        // The hyperplane sum kernel is insensitive to collinearity too.
        assert_eq!(relation_spaces(&collinear).unwrap().hyperplane_sum, 3);
    }

    #[test]
    fn coinciding_points_are_rejected() {
        let pts = parse_points("1,0,0; 2,0,0").unwrap();
        assert!(matches!(algebra_dimension(&pts), Err(Error::BadPointConfig(_))));
        assert!(parse_points("0,0,0").is_err());
        assert!(parse_points("1,2").is_err());
    }

    #[test]
    fn dimensions_invariant_under_coordinate_change() {
        let pts = generic_points(4);
        let m = [[1, 1, 0], [0, 1, 2], [1, 0, 1]];
        let moved = apply_gl3(&pts, &m).unwrap();
        assert_eq!(algebra_dimension(&pts).unwrap(), algebra_dimension(&moved).unwrap());
        assert_eq!(relation_spaces(&pts).unwrap(), relation_spaces(&moved).unwrap());
    }

    #[test]
    fn specialization_family_matches_hirzebruch_algebras() {
        for k in 2usize..=6 {
            for s in 0..=(k - 1) / 2 {
                let a = (k - 1 - 2 * s) as i64;
                let surface = base_fa(a).unwrap();
                let system = base_system(BaseKind::Fa(a), s as i64).unwrap();
                let seq = to_sequence(&system, &system.basis.zero()).unwrap();
                let (toric_q, toric_rels) = build_quiver(&surface, &seq, true).unwrap();
                let (family_q, family_rels) = specialize_mk(k, s).unwrap();
                assert!(quiver_isomorphic(&toric_q, &family_q).unwrap(), "k={k} s={s}");
                assert_eq!(family_rels.len(), 2 * (k - 1));
                // At s = 0 the short middle run carries no chain relation,
                // and one length-3 relation is needed on top of the squares.
                let cubic = usize::from(s == 0);
                assert_eq!(toric_rels.len(), 2 * (k - 1) + cubic, "k={k} s={s}");
                // All members of one family share their total dimension.
                let homs = hom_matrix(&surface, &seq, false).unwrap();
                let total: usize = homs.iter().flatten().sum();
                assert_eq!(total, 4 * k + 20);
                assert_eq!(path_algebra_dim(&toric_q).unwrap(), (4 * k + 20) as u128);
            }
        }
    }

    #[test]
    fn full_chain_has_two_more_relations() {
        let (q, rels) = mk_quiver(4);
        assert_eq!(q.arrows.len(), 2 + 5 + 2);
        assert_eq!(rels.len(), 8);
        assert_eq!(specialize_mk(4, 1).unwrap().1.len(), 6);
        assert!(specialize_mk(4, 2).is_err());
    }
}
