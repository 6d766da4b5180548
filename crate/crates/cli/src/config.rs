//! Tiny `key=value` config files for reproducible runs. Recognized keys:
//! `family`, `p`, `q`, `k`, `d`, `n`. Values use the same grammar as the
//! corresponding flags; flags win over config entries.

use std::str::FromStr;

use crate::grid::GridSpec;

#[derive(Debug, Default, Clone)]
pub struct ConfigFile {
    pub family: Option<String>,
    pub p: Option<GridSpec>,
    pub q: Option<GridSpec>,
    pub k: Option<GridSpec>,
    pub d: Option<GridSpec>,
    pub n: Option<GridSpec>,
}

pub fn parse(text: &str) -> Result<ConfigFile, String> {
    let mut cfg = ConfigFile::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key=value", lineno + 1))?;
        let value = value.trim();
        match key.trim() {
            "family" => cfg.family = Some(value.to_string()),
            "p" => cfg.p = Some(GridSpec::from_str(value)?),
            "q" => cfg.q = Some(GridSpec::from_str(value)?),
            "k" => cfg.k = Some(GridSpec::from_str(value)?),
            "d" => cfg.d = Some(GridSpec::from_str(value)?),
            "n" => cfg.n = Some(GridSpec::from_str(value)?),
            other => return Err(format!("line {}: unknown key {other:?}", lineno + 1)),
        }
    }
    Ok(cfg)
}
