//! Text format for group definitions: line 1 `degree N`, then one generator
//! per line in disjoint-cycle notation with 1-based points; `#` starts a
//! comment; blank lines are ignored.

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;

pub fn parse_group(text: &str) -> Result<Group> {
    parse_group_capped(text, crate::group::DEFAULT_ORDER_CAP)
}

pub fn parse_group_capped(text: &str, cap: usize) -> Result<Group> {
    let mut degree: Option<usize> = None;
    let mut gens: Vec<Permutation> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse {
            line: lineno + 1,
            msg,
        };
        match degree {
            None => {
                let rest = line
                    .strip_prefix("degree")
                    .ok_or_else(|| err(format!("expected `degree N`, got `{line}`")))?;
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| err(format!("bad degree in `{line}`")))?;
                if n == 0 || n > u16::MAX as usize {
                    return Err(err(format!("degree must be in 1..={}", u16::MAX)));
                }
                degree = Some(n);
            }
            Some(n) => {
                let p = Permutation::from_cycles(n, line).map_err(|e| err(e.to_string()))?;
                gens.push(p);
            }
        }
    }
    let degree = degree.ok_or(Error::Parse {
        line: 0,
        msg: "missing `degree N` header".into(),
    })?;
    Group::from_generators_capped(degree, gens, cap)
}

pub fn format_group(g: &Group) -> String {
    let mut out = format!("degree {}\n", g.degree());
    for gen in g.generators() {
        out.push_str(&gen.to_string());
        out.push('\n');
    }
    out
}
