#![no_main]

//! Point-configuration strings: the `x,y,z;...` parser for projective
//! points, and the exact linear algebra downstream of small inputs.

use exseq::deform::{algebra_dimension, parse_points, relation_spaces};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let input = String::from_utf8_lossy(data);
    let Ok(points) = parse_points(&input) else { return };
    // Exact rational elimination is polynomial but not free; keep the
    // configurations at test scale.
    let small = points.len() <= 6
        && points.iter().all(|p| p.0.iter().all(|c| c.bits() <= 64));
    if small && !points.is_empty() {
        let _ = relation_spaces(&points);
        let _ = algebra_dimension(&points);
    }
});
