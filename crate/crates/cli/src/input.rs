//! Parsing of Coxeter systems, group words and facet files from the
//! command line.

use std::path::Path;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;

use coxshell::complex::{parse_facet_lines, Facet};
use coxshell::coxeter::{CoxeterSystem, GroupElement};

/// JSON form of a system: either a type shorthand or an explicit matrix
/// with 0 encoding an infinite bond.
#[derive(Deserialize)]
struct SystemSpec {
    #[serde(rename = "type")]
    shorthand: Option<String>,
    matrix: Option<Vec<Vec<u32>>>,
}

pub struct SystemInput {
    pub system: Arc<CoxeterSystem>,
    /// Whether the system came from a type shorthand; the `longest` keyword
    /// is only honored then.
    pub from_shorthand: bool,
}

pub fn load_system(shorthand: Option<&str>, file: Option<&Path>) -> Result<SystemInput> {
    match (shorthand, file) {
        (Some(spec), None) => Ok(SystemInput {
            system: CoxeterSystem::from_shorthand(spec)?,
            from_shorthand: true,
        }),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let spec: SystemSpec = serde_json::from_str(&text)
                .with_context(|| format!("parsing {}", path.display()))?;
            match (spec.shorthand, spec.matrix) {
                (Some(s), None) => Ok(SystemInput {
                    system: CoxeterSystem::from_shorthand(&s)?,
                    from_shorthand: true,
                }),
                (None, Some(m)) => Ok(SystemInput {
                    system: CoxeterSystem::new(m)?,
                    from_shorthand: false,
                }),
                _ => bail!("system file must contain exactly one of \"type\" or \"matrix\""),
            }
        }
        (Some(_), Some(_)) => bail!("pass either --type or --system, not both"),
        (None, None) => bail!("a Coxeter system is required: pass --type or --system"),
    }
}

/// Parses a word given as whitespace-separated tokens. Plain integers are
/// 1-based generator positions; `sN` tokens are generator names; `e` or an
/// empty string is the identity; `longest` asks for the longest element and
/// is only valid for systems given by a finite type shorthand.
pub fn parse_word(input: &SystemInput, text: &str) -> Result<GroupElement> {
    let text = text.trim();
    if text.is_empty() || text == "e" {
        return Ok(GroupElement::identity(&input.system));
    }
    if text == "longest" {
        if !input.from_shorthand {
            bail!("`longest` is only valid for systems given by a type shorthand");
        }
        return Ok(GroupElement::longest_element(&input.system, 10_000)?);
    }
    let rank = input.system.rank();
    let mut word = Vec::new();
    for tok in text.split_whitespace() {
        if let Ok(i) = tok.parse::<usize>() {
            if i == 0 || i > rank {
                bail!("generator position {i} out of range 1..={rank}");
            }
            word.push(i - 1);
        } else if let Some(s) = input.system.gen_by_name(tok) {
            word.push(s);
        } else {
            bail!("unknown generator {tok:?}");
        }
    }
    Ok(GroupElement::from_word(&input.system, &word)?)
}

pub fn load_facets(path: &Path) -> Result<Vec<Facet>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let facets =
        parse_facet_lines(&text).with_context(|| format!("parsing {}", path.display()))?;
    if facets.is_empty() {
        return Err(anyhow!("{}: no facets found", path.display()));
    }
    Ok(facets)
}
