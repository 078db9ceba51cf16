#![no_main]

//! Untrusted fan JSON: `{"rays": [[x,y],...]}` decoding plus the fan
//! constructor, and a serialize round-trip on accepted fans.

use exseq::fans::{FanJson, ToricSurface};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let input = String::from_utf8_lossy(data);
    let Ok(json) = serde_json::from_str::<FanJson>(&input) else { return };
    if json.rays.len() > 64 {
        return;
    }
    if let Ok(surface) = ToricSurface::from_rays(json.rays) {
        let text = serde_json::to_string(&surface.to_json()).unwrap();
        let back: FanJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.rays, surface.rays());
    }
});
