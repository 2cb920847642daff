//! Fixture loading shared by the benchmarks.

use coxshell::complex::{parse_facet_lines, PureComplex};

pub fn load_data_complex(name: &str) -> PureComplex {
    let path = format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {path}: {e}"));
    PureComplex::from_facets(parse_facet_lines(&text).expect("well-formed facet file"))
        .expect("nonempty complex")
}
