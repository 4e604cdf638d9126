//! Run configuration shared by the subcommands.

use anyhow::{bail, Context, Result};
use selfsim_core::{builtin, parse_group, AutomatonGroup, BUILTIN_DIHEDRAL};

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub group_source: String,
    pub depth_bound: usize,
    pub degree_bound: usize,
    pub max_word_len: usize,
    pub seed: u64,
    pub out: Option<std::path::PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            group_source: BUILTIN_DIHEDRAL.to_string(),
            depth_bound: 8,
            degree_bound: 6,
            max_word_len: 16,
            seed: 1,
            out: None,
        }
    }
}

impl RunConfig {
    pub fn load_group(&self) -> Result<AutomatonGroup> {
        if let Some(g) = builtin(&self.group_source) {
            return Ok(g);
        }
        let path = std::path::Path::new(&self.group_source);
        if !path.exists() {
            bail!(
                "unknown group `{}`: not a built-in name and not a file",
                self.group_source
            );
        }
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading group definition {}", path.display()))?;
        Ok(parse_group(&text)?)
    }

    pub fn validate(&self) -> Result<()> {
        // degree 0 is a meaningful selector; the other bounds must be positive
        if self.depth_bound == 0 || self.max_word_len == 0 {
            bail!("bounds must be positive");
        }
        Ok(())
    }
}
