#![no_main]

//! Untrusted toric-system JSON: decoding, the axiom validator, and the
//! symmetry/Gale-duality invariants on anything that validates.

use exseq::systems::{ToricSystem, ToricSystemJson};
use libfuzzer_sys::fuzz_target;
use num::bigint::BigInt;

fuzz_target!(|data: &[u8]| {
    let input = String::from_utf8_lossy(data);
    let Ok(json) = serde_json::from_str::<ToricSystemJson>(&input) else { return };
    if json.classes.len() > 16 {
        return;
    }
    let Ok(system) = ToricSystem::from_json(json) else { return };

    let canonical = system.canonical_form();
    assert_eq!(system.rotate(1).canonical_form(), canonical);
    assert_eq!(system.reverse().canonical_form(), canonical);

    // The dual fan only stays cheap while the coefficients do.
    let small = system
        .classes()
        .iter()
        .all(|c| c.coeffs.iter().all(|x| x.bits() <= 128));
    if small {
        let dual = system.gale_dual().expect("every valid system has a dual fan");
        assert_eq!(dual.n(), system.n());
        let chi_minus_two: Vec<i64> = dual.self_intersections().to_vec();
        let squares: Vec<BigInt> =
            system.classes().iter().map(|c| c.self_intersection()).collect();
        for (a, sq) in chi_minus_two.iter().zip(&squares) {
            assert_eq!(BigInt::from(*a), *sq);
        }
    }
});
