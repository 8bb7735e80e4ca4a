#![no_main]

use libfuzzer_sys::fuzz_target;
use udsmap::report::TableFormat;
use udsmap::{BenefitId, Category, Rating, SchemeId};

// Every token parser must round-trip what it accepts through Display.
fuzz_target!(|s: &str| {
    if let Ok(b) = s.parse::<BenefitId>() {
        assert_eq!(b.to_string().parse::<BenefitId>(), Ok(b));
    }
    if let Ok(r) = s.parse::<Rating>() {
        assert_eq!(r.to_string().parse::<Rating>(), Ok(r));
    }
    if let Ok(c) = s.parse::<Category>() {
        assert_eq!(c.to_string().parse::<Category>(), Ok(c));
    }
    if let Ok(id) = SchemeId::new(s) {
        assert_eq!(id.as_str(), s);
    }
    let _ = s.parse::<TableFormat>();
});
