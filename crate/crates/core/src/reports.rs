//! Frozen reference data for the classification results this library
//! recomputes, and report builders that recompute each claim and record
//! whether the computation agrees.
//!
//! Every report carries an `ok` flag: honest disagreement is a report with
//! `ok == false`, never a panic.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::augment::{base_system, BaseKind};
use crate::deform::{algebra_dimension, generic_points, relation_spaces};
use crate::error::Result;
use crate::fans::{base_fa, base_p2, nef_census, ToricSurface};
use crate::picard::{DivisorClass, SurfaceBasis};
use crate::quivers::{
    build_cyclic_quiver, build_quiver, mckay_quiver, path_algebra_dim, path_count,
    plane_blowup_shape, quiver_isomorphic, Arrow, Label, Quiver,
};
use crate::sequences::{decide_strong_existence, dual_types, search_cyclic_systems};

pub const SCHEMA_VERSION: u32 = 1;

/// The 16 complete smooth toric surfaces whose anticanonical class is nef,
/// each given by one cyclic presentation of its ray self-intersection
/// numbers.  Names for the non-minimal ones are "<ray count><letter>".
pub const NEF_SURFACES: [(&str, &[i64]); 16] = [
    ("P2", &[1, 1, 1]),
    ("P1xP1", &[0, 0, 0, 0]),
    ("F1", &[0, 1, 0, -1]),
    ("F2", &[0, 2, 0, -2]),
    ("5a", &[0, 0, -1, -1, -1]),
    ("5b", &[0, -2, -1, -1, 1]),
    ("6a", &[-1, -1, -1, -1, -1, -1]),
    ("6b", &[-1, -1, -2, -1, -1, 0]),
    ("6c", &[0, 0, -2, -1, -2, -1]),
    ("6d", &[0, 1, -2, -1, -2, -2]),
    ("7a", &[-1, -1, -2, -1, -2, -1, -1]),
    ("7b", &[-1, -1, 0, -2, -1, -2, -2]),
    ("8a", &[-1, -2, -1, -2, -1, -2, -1, -2]),
    ("8b", &[-1, -2, -2, -1, -2, -1, -1, -2]),
    ("8c", &[-1, -2, -2, -2, -1, -2, 0, -2]),
    ("9", &[-1, -2, -2, -1, -2, -2, -1, -2, -2]),
];

/// For each census surface, which census surfaces occur as the Gale dual
/// ("type") of a cyclic strongly exceptional toric system on it.
pub const SYSTEM_TYPES: [(&str, &[&str]); 16] = [
    ("P2", &["P2"]),
    ("P1xP1", &["P1xP1", "F2"]),
    ("F1", &["F1"]),
    ("F2", &["P1xP1"]),
    ("5a", &["5a", "5b"]),
    ("5b", &["5a"]),
    ("6a", &["6a", "6b", "6c", "6d"]),
    ("6b", &["6a", "6b", "6c"]),
    ("6c", &["6a", "6b"]),
    ("6d", &["6a"]),
    ("7a", &["7a", "7b"]),
    ("7b", &["7a"]),
    ("8a", &["8a", "8b", "8c"]),
    ("8b", &["8a", "8b"]),
    ("8c", &["8a"]),
    ("9", &["9"]),
];

/// A cyclic quiver on a minimal surface: the base, the Hirzebruch parameter
/// of the toric system, and a reference adjacency matrix.  Vertex numbering
/// of the reference may start elsewhere in the cycle, so comparisons go
/// through `quiver_isomorphic`.
#[derive(Debug, Clone, Copy)]
pub struct SmallQuiverCase {
    pub name: &'static str,
    pub base: BaseKind,
    pub s: i64,
    pub adjacency: &'static [&'static [usize]],
}

pub const SMALL_QUIVERS: [SmallQuiverCase; 5] = [
    SmallQuiverCase {
        name: "P2",
        base: BaseKind::P2,
        s: 0,
        adjacency: &[&[0, 3, 0], &[0, 0, 3], &[3, 0, 0]],
    },
    SmallQuiverCase {
        name: "P1xP1",
        base: BaseKind::Fa(0),
        s: 0,
        adjacency: &[&[0, 2, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 2], &[2, 0, 0, 0]],
    },
    SmallQuiverCase {
        name: "P1xP1",
        base: BaseKind::Fa(0),
        s: 1,
        adjacency: &[&[0, 2, 0, 2], &[0, 0, 2, 0], &[4, 0, 0, 0], &[0, 0, 2, 0]],
    },
    SmallQuiverCase {
        name: "F1",
        base: BaseKind::Fa(1),
        s: 0,
        adjacency: &[&[0, 2, 1, 0], &[0, 0, 1, 1], &[0, 0, 0, 2], &[3, 0, 0, 0]],
    },
    SmallQuiverCase {
        name: "F2",
        base: BaseKind::Fa(2),
        s: -1,
        adjacency: &[&[0, 2, 1, 0], &[0, 0, 2, 1], &[1, 0, 0, 2], &[2, 1, 0, 0]],
    },
];

/// An abelian quotient `C^3/G` whose McKay quiver coincides with the cyclic
/// quiver of a system on a census surface: `G` as orders of cyclic factors,
/// the action as the three character weights.
#[derive(Debug, Clone, Copy)]
pub struct McKayCase {
    pub name: &'static str,
    pub orders: &'static [u64],
    pub weights: [&'static [u64]; 3],
}

pub const MCKAY_CASES: [McKayCase; 5] = [
    McKayCase { name: "P2", orders: &[3], weights: [&[1], &[1], &[1]] },
    McKayCase { name: "F2", orders: &[4], weights: [&[1], &[1], &[2]] },
    McKayCase { name: "6d", orders: &[6], weights: [&[1], &[2], &[3]] },
    McKayCase { name: "8c", orders: &[2, 4], weights: [&[0, 1], &[1, 1], &[1, 2]] },
    McKayCase { name: "9", orders: &[3, 3], weights: [&[1, 0], &[0, 1], &[2, 2]] },
];

fn fixture_self_intersections(name: &str) -> &'static [i64] {
    NEF_SURFACES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, ints)| *ints)
        .expect("name comes from a fixture table")
}

fn census_name_map() -> Result<BTreeMap<Vec<i64>, &'static str>> {
    let mut map = BTreeMap::new();
    for (name, ints) in NEF_SURFACES {
        map.insert(ToricSurface::from_self_intersections(ints)?.canonical_form(), name);
    }
    Ok(map)
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusRow {
    pub name: String,
    pub self_intersections: Vec<i64>,
    pub canonical: Vec<i64>,
    pub found: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub schema_version: u32,
    pub rows: Vec<CensusRow>,
    pub census_size: usize,
    pub counts_by_rays: Vec<(usize, usize)>,
    pub ok: bool,
}

/// Enumerate all complete smooth toric surfaces with nef anticanonical class
/// and compare with the frozen sixteen.
pub fn census_report() -> Result<CensusReport> {
    let census = nef_census();
    let computed: BTreeSet<Vec<i64>> = census.iter().map(ToricSurface::canonical_form).collect();
    let mut rows = Vec::new();
    let mut all_found = true;
    for (name, ints) in NEF_SURFACES {
        let canonical = ToricSurface::from_self_intersections(ints)?.canonical_form();
        let found = computed.contains(&canonical);
        all_found &= found;
        rows.push(CensusRow {
            name: name.into(),
            self_intersections: ints.to_vec(),
            canonical,
            found,
        });
    }
    let mut by_rays: BTreeMap<usize, usize> = BTreeMap::new();
    for s in &census {
        *by_rays.entry(s.n()).or_insert(0) += 1;
    }
    let counts_by_rays: Vec<(usize, usize)> = by_rays.into_iter().collect();
    let ok = all_found
        && census.len() == NEF_SURFACES.len()
        && counts_by_rays == [(3, 1), (4, 3), (5, 2), (6, 4), (7, 2), (8, 3), (9, 1)];
    Ok(CensusReport {
        schema_version: SCHEMA_VERSION,
        rows,
        census_size: census.len(),
        counts_by_rays,
        ok,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TypeRow {
    pub surface: String,
    pub types: Vec<String>,
    pub expected: Vec<String>,
    pub systems: usize,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TypeReport {
    pub schema_version: u32,
    pub rows: Vec<TypeRow>,
    pub ok: bool,
}

/// Search the named census surfaces for cyclic strongly exceptional toric
/// systems and compare the set of Gale dual types with the frozen table.
pub fn system_type_report_for(names: &[&str]) -> Result<TypeReport> {
    let name_of = census_name_map()?;
    let order: BTreeMap<&str, usize> =
        NEF_SURFACES.iter().enumerate().map(|(i, (n, _))| (*n, i)).collect();
    let mut rows = Vec::new();
    let mut ok = true;
    for (name, expected) in SYSTEM_TYPES {
        if !names.contains(&name) {
            continue;
        }
        let surface = ToricSurface::from_self_intersections(fixture_self_intersections(name))?;
        let found = search_cyclic_systems(&surface, None)?;
        let mut types: Vec<String> = dual_types(&found)
            .iter()
            .map(|c| name_of.get(c).map_or_else(|| format!("{c:?}"), |n| (*n).into()))
            .collect();
        types.sort_by_key(|n| order.get(n.as_str()).copied().unwrap_or(usize::MAX));
        let expected: Vec<String> = expected.iter().map(|n| (*n).into()).collect();
        let row_ok = types == expected;
        ok &= row_ok;
        rows.push(TypeRow { surface: name.into(), types, expected, systems: found.len(), ok: row_ok });
    }
    Ok(TypeReport { schema_version: SCHEMA_VERSION, rows, ok })
}

pub fn system_type_report() -> Result<TypeReport> {
    let all: Vec<&str> = SYSTEM_TYPES.iter().map(|(n, _)| *n).collect();
    system_type_report_for(&all)
}

#[derive(Debug, Clone, Serialize)]
pub struct SmallQuiverRow {
    pub surface: String,
    pub s: i64,
    pub multiplicities: Vec<Vec<usize>>,
    pub reference: Vec<Vec<usize>>,
    pub arrows: usize,
    pub relations: usize,
    pub isomorphic: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SmallQuiverReport {
    pub schema_version: u32,
    pub rows: Vec<SmallQuiverRow>,
    pub ok: bool,
}

fn quiver_from_matrix(m: &[&[usize]]) -> Quiver {
    let mut arrows = Vec::new();
    for (i, row) in m.iter().enumerate() {
        for (j, &mult) in row.iter().enumerate() {
            for k in 0..mult {
                arrows.push(Arrow { src: i, dst: j, label: Label::Name(format!("x{i}_{j}_{k}")) });
            }
        }
    }
    Quiver { vertices: m.len(), arrows }
}

/// Build the cyclic quivers of the base systems on the minimal surfaces and
/// compare with the frozen adjacency matrices, up to vertex relabeling.
pub fn small_quiver_report() -> Result<SmallQuiverReport> {
    let mut rows = Vec::new();
    let mut ok = true;
    for case in &SMALL_QUIVERS {
        let surface = match case.base {
            BaseKind::P2 => base_p2(),
            BaseKind::Fa(a) => base_fa(a)?,
        };
        let system = base_system(case.base, case.s)?;
        let (quiver, relations) = build_cyclic_quiver(&surface, &system, true)?;
        let reference = quiver_from_matrix(case.adjacency);
        let isomorphic = quiver_isomorphic(&quiver, &reference)?;
        ok &= isomorphic;
        rows.push(SmallQuiverRow {
            surface: case.name.into(),
            s: case.s,
            multiplicities: quiver.multiplicity_matrix(),
            reference: reference.multiplicity_matrix(),
            arrows: quiver.arrows.len(),
            relations: relations.len(),
            isomorphic,
        });
    }
    Ok(SmallQuiverReport { schema_version: SCHEMA_VERSION, rows, ok })
}

#[derive(Debug, Clone, Serialize)]
pub struct McKayRow {
    pub surface: String,
    pub orders: Vec<u64>,
    pub weights: Vec<Vec<u64>>,
    pub systems: usize,
    pub matched: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct McKayReport {
    pub schema_version: u32,
    pub rows: Vec<McKayRow>,
    pub ok: bool,
}

/// For each named quotient case, check that some cyclic strongly exceptional
/// system on the surface has the McKay quiver of the group action.
pub fn mckay_report_for(names: &[&str]) -> Result<McKayReport> {
    let mut rows = Vec::new();
    let mut ok = true;
    for case in &MCKAY_CASES {
        if !names.contains(&case.name) {
            continue;
        }
        let surface = ToricSurface::from_self_intersections(fixture_self_intersections(case.name))?;
        let weights =
            [case.weights[0].to_vec(), case.weights[1].to_vec(), case.weights[2].to_vec()];
        let target = mckay_quiver(case.orders, &weights)?;
        let found = search_cyclic_systems(&surface, None)?;
        let mut matched = false;
        for f in &found {
            let (quiver, _) = build_cyclic_quiver(&f.surface, &f.system, false)?;
            if quiver_isomorphic(&quiver, &target)? {
                matched = true;
                break;
            }
        }
        ok &= matched;
        rows.push(McKayRow {
            surface: case.name.into(),
            orders: case.orders.to_vec(),
            weights: weights.to_vec(),
            systems: found.len(),
            matched,
        });
    }
    Ok(McKayReport { schema_version: SCHEMA_VERSION, rows, ok })
}

pub fn mckay_report() -> Result<McKayReport> {
    let all: Vec<&str> = MCKAY_CASES.iter().map(|c| c.name).collect();
    mckay_report_for(&all)
}

#[derive(Debug, Clone, Serialize)]
pub struct DimensionRow {
    pub points: usize,
    pub shape_paths: u128,
    pub shape_expected: u128,
    pub algebra_dim: u64,
    pub algebra_expected: u64,
    pub point_kernels: Vec<usize>,
    pub sum_kernel: usize,
    pub sum_kernel_expected: usize,
    pub symmetrizer_kernel: usize,
    pub toric_algebra_dim: Option<u128>,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DimensionReport {
    pub schema_version: u32,
    pub rows: Vec<DimensionRow>,
    pub ok: bool,
}

/// The plane blown up in `t <= 3` of its torus-fixed points, with the
/// sequence `O, R_t, ..., R_1, H, 2H` in its tracked basis.
pub fn toric_blowup_sequence(t: usize) -> Result<(ToricSurface, Vec<DivisorClass>)> {
    let mut surface = base_p2();
    for i in 0..t {
        surface = surface.blow_up(2 * i)?;
    }
    let b = SurfaceBasis::p2(t);
    let mut sequence = vec![b.zero()];
    for i in (1..=t).rev() {
        sequence.push(b.r(i));
    }
    sequence.push(b.h());
    sequence.push(&b.h() + &b.h());
    Ok((surface, sequence))
}

/// Dimension bookkeeping for the blow-up of the plane in `t` points: the
/// path count of the shape quiver against `18t + 6`, the dimension of the
/// endomorphism algebra of `O, R_t, ..., R_1, H, 2H` on a configuration of
/// pairwise distinct points against `9t + 15`, the kernels generating the
/// relation ideal, and (for `t <= 3`) the same dimension recomputed on the
/// toric blow-up through paths in its quiver.
pub fn dimension_report(max_points: usize) -> Result<DimensionReport> {
    let mut rows = Vec::new();
    let mut ok = true;
    for t in 1..=max_points {
        let shape_paths = path_count(&plane_blowup_shape(t))?;
        let shape_expected = 18 * t as u128 + 6;
        let points = generic_points(t);
        let algebra_dim = algebra_dimension(&points)?;
        let algebra_expected = 9 * t as u64 + 15;
        let spaces = relation_spaces(&points)?;
        let sum_kernel_expected = if t >= 2 { 2 * t - 3 } else { 0 };
        let toric_algebra_dim = if t <= 3 {
            let (surface, sequence) = toric_blowup_sequence(t)?;
            let (quiver, _) = build_quiver(&surface, &sequence, true)?;
            Some(path_algebra_dim(&quiver)?)
        } else {
            None
        };
        let row_ok = shape_paths == shape_expected
            && algebra_dim == algebra_expected
            && spaces.per_point.iter().all(|&d| d == 1)
            && spaces.hyperplane_sum == sum_kernel_expected
            && spaces.symmetrizer == 3
            && toric_algebra_dim.map_or(true, |d| d == u128::from(algebra_expected));
        ok &= row_ok;
        rows.push(DimensionRow {
            points: t,
            shape_paths,
            shape_expected,
            algebra_dim,
            algebra_expected,
            point_kernels: spaces.per_point,
            sum_kernel: spaces.hyperplane_sum,
            sum_kernel_expected,
            symmetrizer_kernel: spaces.symmetrizer,
            toric_algebra_dim,
            ok: row_ok,
        });
    }
    Ok(DimensionReport { schema_version: SCHEMA_VERSION, rows, ok })
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyRow {
    pub k: i64,
    pub self_intersections: Vec<i64>,
    pub exists: bool,
    pub expected: bool,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EightRayReport {
    pub self_intersections: Vec<i64>,
    pub exists: bool,
    pub two_round_chain_found: bool,
    pub intermediate: Vec<i64>,
    pub final_surface: Vec<i64>,
    pub contraction_reaches_family: bool,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ObstructionReport {
    pub schema_version: u32,
    pub family: Vec<FamilyRow>,
    pub eight_ray: EightRayReport,
    pub ok: bool,
}

/// Self-intersection cycle of the `k`-th member of a family of rank-5
/// surfaces: for `k >= 2` no chain of at most two simultaneous blow-down
/// rounds reaches a minimal surface, so no full strongly exceptional
/// sequence of invertible sheaves exists.
pub fn family_self_intersections(k: i64) -> Vec<i64> {
    vec![0, k - 1, -2, -2, -1, -3, -k]
}

/// Decide strong existence across the family, and on an eight-ray surface
/// that admits a sequence while its blow-down at ray 3 is the `k = 2`
/// family member, which does not.
pub fn obstruction_report() -> Result<ObstructionReport> {
    let mut family = Vec::new();
    let mut ok = true;
    for k in 0..=6 {
        let ints = family_self_intersections(k);
        let surface = ToricSurface::from_self_intersections(&ints)?;
        let exists = decide_strong_existence(&surface).exists;
        let expected = k < 2;
        let row_ok = exists == expected;
        ok &= row_ok;
        family.push(FamilyRow { k, self_intersections: ints, exists, expected, ok: row_ok });
    }

    let ints = vec![-3, -2, -1, -1, 0, -2, -2, -1];
    let surface = ToricSurface::from_self_intersections(&ints)?;
    let decision = decide_strong_existence(&surface);
    let intermediate =
        ToricSurface::from_self_intersections(fixture_self_intersections("6c"))?.canonical_form();
    let final_surface =
        ToricSurface::from_self_intersections(fixture_self_intersections("F1"))?.canonical_form();
    let two_round_chain_found = decision.chains.iter().any(|chain| {
        chain.len() == 2
            && chain[0].result.canonical_form() == intermediate
            && chain[1].result.canonical_form() == final_surface
    });
    let family_two = ToricSurface::from_self_intersections(&family_self_intersections(2))?;
    let contraction_reaches_family = surface.blow_down(3)?.isomorphic(&family_two);
    let eight_ok = decision.exists && two_round_chain_found && contraction_reaches_family;
    ok &= eight_ok;
    let eight_ray = EightRayReport {
        self_intersections: ints,
        exists: decision.exists,
        two_round_chain_found,
        intermediate,
        final_surface,
        contraction_reaches_family,
        ok: eight_ok,
    };
    Ok(ObstructionReport { schema_version: SCHEMA_VERSION, family, eight_ray, ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_has_the_sixteen_surfaces() {
        let r = census_report().unwrap();
        assert!(r.ok, "{r:?}");
    }

    #[test]
    fn small_quivers_match_references() {
        let r = small_quiver_report().unwrap();
        assert!(r.ok, "{r:?}");
    }

    #[test]
    fn types_of_small_surfaces_match() {
        let r = system_type_report_for(&["P2", "P1xP1", "F1", "F2", "5a", "5b"]).unwrap();
        assert!(r.ok, "{r:?}");
        assert_eq!(r.rows.len(), 6);
    }

    #[test]
    fn dimension_rows_match() {
        let r = dimension_report(4).unwrap();
        assert!(r.ok, "{r:?}");
    }

    #[test]
    fn obstruction_family_decided() {
        let r = obstruction_report().unwrap();
        assert!(r.ok, "{r:?}");
    }

    #[test]
    fn minimal_mckay_cases_match() {
        let r = mckay_report_for(&["P2", "F2"]).unwrap();
        assert!(r.ok, "{r:?}");
    }
}
