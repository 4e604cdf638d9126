//! Parser for the line-oriented group definition format:
//!
//! ```text
//! alphabet 2
//! gen a : 0 -> 1 | e ; 1 -> 0 | e
//! gen b : 0 -> 0 | a ; 1 -> 1 | b
//! rel a a =
//! ```
//!
//! Comments start with `#`. An empty right side of a `rel` line means the
//! identity.

use crate::error::SelfSimError;
use crate::group::{AutomatonGroup, WreathRow};
use crate::word::GroupWord;

pub const BUILTIN_DIHEDRAL: &str = "dihedral-z2-z2";

/// Resolve a built-in group name.
pub fn builtin(name: &str) -> Option<AutomatonGroup> {
    match name {
        BUILTIN_DIHEDRAL => Some(AutomatonGroup::dihedral()),
        _ => None,
    }
}

struct RawGen {
    name: String,
    entries: Vec<(u8, u8, String)>, // (letter, out, restriction text)
}

/// Parse a group definition from text.
pub fn parse_group(text: &str) -> Result<AutomatonGroup, SelfSimError> {
    let mut alphabet: Option<usize> = None;
    let mut raw_gens: Vec<RawGen> = Vec::new();
    let mut raw_rels: Vec<(Vec<String>, Vec<String>)> = Vec::new();

    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| SelfSimError::BadDefinition(format!("line {}: {}", lineno + 1, msg));
        if let Some(rest) = line.strip_prefix("alphabet") {
            let d: usize = rest.trim().parse().map_err(|_| err("bad alphabet size"))?;
            alphabet = Some(d);
        } else if let Some(rest) = line.strip_prefix("gen") {
            let (name, table) = rest
                .split_once(':')
                .ok_or_else(|| err("expected `gen NAME : ...`"))?;
            let name = name.trim().to_string();
            if name.is_empty() {
                return Err(err("empty generator name"));
            }
            let mut entries = Vec::new();
            for part in table.split(';') {
                let (lhs, rhs) = part
                    .split_once("->")
                    .ok_or_else(|| err("expected `x -> y | w`"))?;
                let x: u8 = lhs.trim().parse().map_err(|_| err("bad input letter"))?;
                let (y, w) = rhs
                    .split_once('|')
                    .ok_or_else(|| err("expected `y | w` after ->"))?;
                let y: u8 = y.trim().parse().map_err(|_| err("bad output letter"))?;
                entries.push((x, y, w.trim().to_string()));
            }
            raw_gens.push(RawGen { name, entries });
        } else if let Some(rest) = line.strip_prefix("rel") {
            let (lhs, rhs) = rest
                .split_once('=')
                .ok_or_else(|| err("expected `rel LHS = RHS`"))?;
            let lhs: Vec<String> = lhs.split_whitespace().map(String::from).collect();
            let rhs: Vec<String> = rhs.split_whitespace().map(String::from).collect();
            if lhs.is_empty() {
                return Err(err("empty relation left side"));
            }
            raw_rels.push((lhs, rhs));
        } else {
            return Err(err("unrecognized directive"));
        }
    }

    let alphabet = alphabet.ok_or_else(|| {
        SelfSimError::BadDefinition("missing `alphabet` directive".to_string())
    })?;
    let gen_names: Vec<String> = raw_gens.iter().map(|g| g.name.clone()).collect();
    let gen_index = |name: &str| -> Result<u8, SelfSimError> {
        gen_names
            .iter()
            .position(|n| n == name)
            .map(|i| i as u8)
            .ok_or_else(|| SelfSimError::UnknownGeneratorName(name.to_string()))
    };
    let parse_restriction = |s: &str| -> Result<GroupWord, SelfSimError> {
        if s.is_empty() || s == "e" || s == "-" {
            return Ok(GroupWord::identity());
        }
        let mut syms = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "e" {
                continue;
            }
            if let Ok(i) = gen_index(tok) {
                syms.push(i);
            } else if tok.chars().count() > 1
                && gen_names.iter().all(|n| n.chars().count() == 1)
            {
                for c in tok.chars() {
                    syms.push(gen_index(&c.to_string())?);
                }
            } else {
                return Err(SelfSimError::UnknownGeneratorName(tok.to_string()));
            }
        }
        Ok(GroupWord::from_syms(syms))
    };

    let mut rows = Vec::new();
    for raw in &raw_gens {
        let mut out = vec![None; alphabet];
        let mut rest = vec![None; alphabet];
        for (x, y, w) in &raw.entries {
            let xi = *x as usize;
            if xi >= alphabet {
                return Err(SelfSimError::BadDefinition(format!(
                    "gen {}: letter {} outside alphabet",
                    raw.name, x
                )));
            }
            out[xi] = Some(*y);
            rest[xi] = Some(parse_restriction(w)?);
        }
        let out: Option<Vec<u8>> = out.into_iter().collect();
        let rest: Option<Vec<GroupWord>> = rest.into_iter().collect();
        match (out, rest) {
            (Some(out), Some(rest)) => rows.push(WreathRow { out, rest }),
            _ => {
                return Err(SelfSimError::BadDefinition(format!(
                    "gen {}: incomplete table",
                    raw.name
                )))
            }
        }
    }

    let mut rules = Vec::new();
    for (lhs, rhs) in &raw_rels {
        let l: Vec<u8> = lhs.iter().map(|t| gen_index(t)).collect::<Result<_, _>>()?;
        let r: Vec<u8> = rhs.iter().map(|t| gen_index(t)).collect::<Result<_, _>>()?;
        rules.push((l, r));
    }

    AutomatonGroup::new(None, alphabet, gen_names, rows, rules)
}
