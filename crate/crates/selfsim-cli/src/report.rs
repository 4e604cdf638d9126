//! Machine-readable verification reports: canonical JSON with sorted keys,
//! LF line endings, and no floating-point values anywhere. Exact dyadic
//! rationals are serialized as `{num, log2den}` pairs.

use crate::config::RunConfig;
use anyhow::{Context, Result};
use direct_limit::{ColimitDescriptor, Dyadic};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Undetermined,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Undetermined => "UNDETERMINED",
        }
    }

    pub fn of(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug)]
pub struct Claim {
    pub id: String,
    pub computed: Value,
    pub paper: Value,
    pub status: Status,
    pub witness: String,
}

#[derive(Debug, Default)]
pub struct Report {
    pub claims: Vec<Claim>,
    pub sections: Map<String, Value>,
    pub ops: BTreeSet<&'static str>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn mark_op(&mut self, op: &'static str) {
        self.ops.insert(op);
    }

    pub fn claim(
        &mut self,
        id: &str,
        computed: Value,
        paper: Value,
        status: Status,
        witness: impl Into<String>,
    ) {
        assert!(
            self.claims.iter().all(|c| c.id != id),
            "duplicate claim id {}",
            id
        );
        self.claims.push(Claim {
            id: id.to_string(),
            computed,
            paper,
            status,
            witness: witness.into(),
        });
    }

    pub fn set_section(&mut self, key: &str, value: Value) {
        let entry = self
            .sections
            .entry(key.to_string())
            .or_insert_with(|| Value::Object(Map::new()));
        match (entry, value) {
            (Value::Object(dst), Value::Object(src)) => {
                for (k, v) in src {
                    dst.insert(k, v);
                }
            }
            (slot, v) => *slot = v,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.claims.iter().any(|c| c.status == Status::Fail)
    }

    pub fn status_of(&self, id: &str) -> Option<Status> {
        self.claims.iter().find(|c| c.id == id).map(|c| c.status)
    }

    /// Canonical JSON value: stable key order comes from the BTreeMap-backed
    /// serde_json map, claims sorted by id.
    pub fn to_json(&self, cfg: &RunConfig) -> Value {
        let mut claims: Vec<&Claim> = self.claims.iter().collect();
        claims.sort_by(|a, b| a.id.cmp(&b.id));
        let claims_json: Vec<Value> = claims
            .iter()
            .map(|c| {
                json!({
                    "id": c.id,
                    "computed": c.computed,
                    "paper": c.paper,
                    "status": c.status.as_str(),
                    "witness": c.witness,
                })
            })
            .collect();
        let mut root = Map::new();
        root.insert(
            "meta".to_string(),
            json!({
                "tool": "selfsim",
                "version": env!("CARGO_PKG_VERSION"),
                "config": {
                    "group": cfg.group_source,
                    "depth_bound": cfg.depth_bound,
                    "degree_bound": cfg.degree_bound,
                    "max_word_len": cfg.max_word_len,
                    "seed": cfg.seed,
                },
                "ops_exercised": self.ops.iter().copied().collect::<Vec<_>>(),
            }),
        );
        root.insert("claims".to_string(), Value::Array(claims_json));
        for key in ["homology", "stabilized", "ktheory", "hk", "fullgroup"] {
            root.insert(
                key.to_string(),
                self.sections
                    .get(key)
                    .cloned()
                    .unwrap_or_else(|| Value::Object(Map::new())),
            );
        }
        for (k, v) in &self.sections {
            if !root.contains_key(k) {
                root.insert(k.clone(), v.clone());
            }
        }
        Value::Object(root)
    }

    pub fn emit(&self, cfg: &RunConfig, path: &std::path::Path) -> Result<()> {
        let value = self.to_json(cfg);
        let mut text = serde_json::to_string_pretty(&value).context("serializing report")?;
        text.push('\n');
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
        Ok(())
    }

    pub fn summary(&self) -> String {
        let mut lines = Vec::new();
        let mut claims: Vec<&Claim> = self.claims.iter().collect();
        claims.sort_by(|a, b| a.id.cmp(&b.id));
        for c in claims {
            lines.push(format!("{:<13} {}", c.status.as_str(), c.id));
        }
        let pass = self.claims.iter().filter(|c| c.status == Status::Pass).count();
        let fail = self.claims.iter().filter(|c| c.status == Status::Fail).count();
        let und = self
            .claims
            .iter()
            .filter(|c| c.status == Status::Undetermined)
            .count();
        lines.push(format!(
            "{} claims: {} pass, {} fail, {} undetermined",
            self.claims.len(),
            pass,
            fail,
            und
        ));
        lines.join("\n")
    }
}

/// Exact integers in JSON: plain numbers when they fit, decimal strings
/// otherwise.
pub fn int_value(x: &BigInt) -> Value {
    match i64::try_from(x.clone()) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

pub fn dyadic_value(d: &Dyadic) -> Value {
    json!({
        "num": int_value(d.num()),
        "log2den": d.log2den(),
    })
}

pub fn descriptor_value(d: &ColimitDescriptor) -> Value {
    let generators: Vec<Value> = d
        .all_generators()
        .into_iter()
        .map(|(kind, e)| {
            json!({
                "kind": kind,
                "level": e.level,
                "rep": e.rep.iter().map(int_value).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "group": d.model_string(),
        "dyadic_rank": d.dyadic_rank,
        "free_rank": d.free_rank,
        "torsion": d.torsion.iter().map(int_value).collect::<Vec<_>>(),
        "generators": generators,
        "certified": true,
        "stabilization_exponent": d.cert.t_star,
    })
}
