//! Shared fixtures and oracles for the integration suites.

use std::collections::HashSet;

use coxshell::complex::{parse_facet_lines, PureComplex};
use coxshell::coxeter::GroupElement;

pub fn load_data_complex(name: &str) -> PureComplex {
    let path = format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {path}: {e}"));
    PureComplex::from_facets(parse_facet_lines(&text).expect("well-formed facet file"))
        .expect("nonempty complex")
}

/// Independent Bruhat oracle via the subword property: the elements below v
/// are exactly the products of subwords of any fixed reduced word of v.
pub fn subword_products(v: &GroupElement) -> HashSet<GroupElement> {
    let mut reachable: HashSet<GroupElement> = HashSet::new();
    reachable.insert(GroupElement::identity(v.system()));
    for &s in v.word() {
        let mut next = reachable.clone();
        for w in &reachable {
            next.insert(w.mul_gen(s).unwrap());
        }
        reachable = next;
    }
    reachable
}
