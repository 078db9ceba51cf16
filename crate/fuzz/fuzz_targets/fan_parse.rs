#![no_main]

//! Fan input strings: the `x,y;x,y;...` ray parser and the fan validators
//! behind it.  A fan that validates must round-trip through its canonical
//! self-intersection cycle.

use exseq::fans::{parse_rays, ToricSurface};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let input = String::from_utf8_lossy(data);
    let Ok(rays) = parse_rays(&input) else { return };
    if rays.len() > 64 {
        return;
    }
    if let Ok(surface) = ToricSurface::from_rays(rays) {
        let canonical = surface.canonical_form();
        let rebuilt = ToricSurface::from_self_intersections(&canonical)
            .expect("canonical cycle of a valid fan must rebuild");
        assert!(rebuilt.isomorphic(&surface));
    }
});
