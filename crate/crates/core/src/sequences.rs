//! Exceptionality of sequences of invertible sheaves, decision procedures,
//! and the search for cyclic strongly exceptional toric systems.
//!
//! For a sequence with toric system `A_1, ..., A_n`, all conditions reduce
//! to cohomology vanishing of window sums `S = A_i + ... + A_j`:
//!
//! * exceptional: `H*(-S) = 0` for every window inside `A_1..A_{n-1}`;
//! * strongly exceptional: additionally `H^{>0}(S) = 0` for those windows;
//! * cyclic strongly exceptional: both conditions for every cyclic window
//!   of length at most `n - 1`, equivalently every rotation is strongly
//!   exceptional.

use crate::augment::{enumerate_standard_augmentations, default_s_range, replay_tracked, BaseKind};
use crate::cohomology::Cohomology;
use crate::error::Result;
use crate::fans::{BlowDownChain, ToricSurface};
use crate::picard::{DivisorClass, SurfaceBasis};
use crate::systems::ToricSystem;
use std::collections::BTreeMap;
use std::ops::RangeInclusive;

/// A failed vanishing condition: the window `A_{start+1}..A_{start+len}`
/// (possibly negated) has nonzero cohomology where zero is required.
#[derive(Debug, Clone)]
pub struct Witness {
    pub start: usize,
    pub len: usize,
    pub negated: bool,
    pub class: DivisorClass,
    pub h: (usize, usize, usize),
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sign = if self.negated { "-" } else { "+" };
        write!(
            f,
            "window start {}, length {}, sign {}: h({}) = {:?}",
            self.start + 1,
            self.len,
            sign,
            self.class,
            self.h
        )
    }
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub ok: bool,
    pub failures: Vec<Witness>,
}

fn window_check(
    coh: &Cohomology<'_>,
    system: &ToricSystem,
    start: usize,
    len: usize,
    cyclic: bool,
    strong: bool,
    failures: &mut Vec<Witness>,
) -> Result<()> {
    debug_assert!(cyclic || start + len < system.n());
    let class = system.window_sum(start, start + len);
    let neg = -&class;
    let hneg = coh.of_class(&neg)?;
    if hneg != (0, 0, 0) {
        failures.push(Witness { start, len, negated: true, class: neg, h: hneg });
    }
    if strong {
        let hpos = coh.of_class(&class)?;
        if hpos.1 != 0 || hpos.2 != 0 {
            failures.push(Witness { start, len, negated: false, class, h: hpos });
        }
    }
    Ok(())
}

fn check(surface: &ToricSurface, system: &ToricSystem, cyclic: bool, strong: bool) -> Result<CheckReport> {
    let coh = Cohomology::new(surface);
    let n = system.n();
    let mut failures = Vec::new();
    let starts = if cyclic { n } else { n - 1 };
    for start in 0..starts {
        let max_len = if cyclic { n - 1 } else { n - 1 - start };
        for len in 1..=max_len {
            window_check(&coh, system, start, len, cyclic, strong, &mut failures)?;
        }
    }
    Ok(CheckReport { ok: failures.is_empty(), failures })
}

/// Is the sequence starting anywhere with these differences exceptional?
pub fn check_exceptional(surface: &ToricSurface, system: &ToricSystem) -> Result<CheckReport> {
    check(surface, system, false, false)
}

pub fn check_strongly_exceptional(
    surface: &ToricSurface,
    system: &ToricSystem,
) -> Result<CheckReport> {
    check(surface, system, false, true)
}

pub fn check_cyclic_strong(surface: &ToricSurface, system: &ToricSystem) -> Result<CheckReport> {
    check(surface, system, true, true)
}

/// Boolean fast path over a shared cohomology cache, bailing at the first
/// failure; used by the search.
fn is_cyclic_strong(coh: &Cohomology<'_>, system: &ToricSystem) -> Result<bool> {
    let n = system.n();
    for len in 1..n {
        for start in 0..n {
            let class = system.window_sum(start, start + len);
            if coh.of_class(&(-&class))? != (0, 0, 0) {
                return Ok(false);
            }
            let hpos = coh.of_class(&class)?;
            if hpos.1 != 0 || hpos.2 != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of the two-round contraction criterion for strongly exceptional
/// sequences: every chain of at most two simultaneous blow-down rounds
/// reaching a minimal surface is a witness.
#[derive(Debug, Clone)]
pub struct Decision {
    pub exists: bool,
    pub chains: Vec<BlowDownChain>,
}

/// A full strongly exceptional sequence of invertible sheaves exists iff the
/// surface contracts to the plane or a Hirzebruch surface in at most two
/// rounds of simultaneous blow-downs.
pub fn decide_strong_existence(surface: &ToricSurface) -> Decision {
    let chains = surface.blow_down_chains(2);
    Decision { exists: !chains.is_empty(), chains }
}

/// A cyclic strongly exceptional sequence exists iff `-K` is nef.
pub fn decide_cyclic_existence(surface: &ToricSurface) -> bool {
    surface.anticanonical_nef()
}

/// A cyclic strongly exceptional toric system found by the search, with the
/// surface its Gale dual describes.
#[derive(Debug, Clone)]
pub struct FoundSystem {
    pub system: ToricSystem,
    pub base: BaseKind,
    /// The realization the system was checked on, with tracked classes in
    /// the same basis as the system coefficients.
    pub surface: ToricSurface,
    pub dual: ToricSurface,
}

/// Enumerate the cyclic strongly exceptional toric systems of standard
/// augmentation type on a toric surface: realize the surface as an iterated
/// blow-up of each minimal base inside its fan, enumerate the standard
/// augmentations over that base (Hirzebruch parameters from `s_range`, or a
/// sound default window), and keep the systems whose cyclic windows all
/// vanish as required.
pub fn search_cyclic_systems(
    surface: &ToricSurface,
    s_range: Option<RangeInclusive<i64>>,
) -> Result<Vec<FoundSystem>> {
    let plain = ToricSurface::from_rays(surface.rays().to_vec())?;
    let mut found: BTreeMap<Vec<Vec<num::BigInt>>, FoundSystem> = BTreeMap::new();
    for real in plain.blowup_realizations() {
        let tracked = replay_tracked(&real)?;
        let (base, steps) = match tracked.basis()? {
            SurfaceBasis::P2 { t } => (BaseKind::P2, t),
            SurfaceBasis::Fa { a, t } => (BaseKind::Fa(a), t),
        };
        let range = match (&s_range, base) {
            (Some(r), _) => r.clone(),
            (None, BaseKind::Fa(a)) => default_s_range(a),
            (None, BaseKind::P2) => 0..=0,
        };
        let candidates = enumerate_standard_augmentations(base, steps, range, true)?;
        let coh = Cohomology::new(&tracked);
        for system in candidates {
            let key = system.canonical_form();
            if found.contains_key(&key) {
                continue;
            }
            if is_cyclic_strong(&coh, &system)? {
                let dual = system.gale_dual()?;
                found.insert(key, FoundSystem { system, base, surface: tracked.clone(), dual });
            }
        }
    }
    Ok(found.into_values().collect())
}

/// Distinct dual surfaces among found systems, by canonical form.
pub fn dual_types(found: &[FoundSystem]) -> Vec<Vec<i64>> {
    let mut types: Vec<Vec<i64>> = found.iter().map(|f| f.dual.canonical_form()).collect();
    types.sort();
    types.dedup();
    types
}
