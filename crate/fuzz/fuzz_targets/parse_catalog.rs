#![no_main]

use libfuzzer_sys::fuzz_target;
use udsmap::chart::{render_svg, ChartConfig};
use udsmap::report::{render_placements, render_table, TableFormat, TableSpec};

// Anything that parses must also validate and render without panicking.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(catalog) = udsmap::parse_catalog(text) else {
        return;
    };
    let _ = udsmap::validate(&catalog);
    let _ = render_placements(&catalog).expect("parsed catalogs resolve");
    let _ = render_table(&catalog, TableSpec::new(TableFormat::Csv)).expect("parsed catalogs resolve");
    let config = ChartConfig {
        include_combined: true,
        ..ChartConfig::default()
    };
    let _ = render_svg(&catalog, &config).expect("parsed catalogs resolve");
});
