//! Optional `key=value` configuration files that mirror command-line flags.
//!
//! Blank lines and lines starting with `#` are ignored. `key=value` becomes
//! `--key value`; `key=true` becomes the bare switch `--key` and `key=false` is
//! dropped. The tokens are inserted right after the subcommand name, so flags
//! given on the command line come later and take precedence.

use std::ffi::OsString;
use std::path::Path;

use crate::error::{CliError, CliResult};

pub fn parse(text: &str) -> CliResult<Vec<OsString>> {
    let mut tokens = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::format(format!("config line {}: expected key=value", lineno + 1))
        })?;
        let key = key.trim().trim_start_matches("--");
        let value = value.trim();
        if key.is_empty() {
            return Err(CliError::format(format!(
                "config line {}: empty key",
                lineno + 1
            )));
        }
        match value {
            "true" => tokens.push(format!("--{key}").into()),
            "false" => {}
            _ => {
                tokens.push(format!("--{key}").into());
                tokens.push(value.into());
            }
        }
    }
    Ok(tokens)
}

pub fn load(path: &Path) -> CliResult<Vec<OsString>> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse(&text)
}

/// Finds `--config PATH` or `--config=PATH` anywhere in `argv`.
pub fn find_config_path(argv: &[OsString]) -> Option<OsString> {
    let mut it = argv.iter();
    while let Some(arg) = it.next() {
        let s = arg.to_string_lossy();
        if s == "--" {
            return None;
        }
        if s == "--config" {
            return it.next().cloned();
        }
        if let Some(rest) = s.strip_prefix("--config=") {
            return Some(rest.into());
        }
    }
    None
}

/// Inserts `extra` after the first token equal to one of `subcommands`.
pub fn inject(argv: Vec<OsString>, subcommands: &[&str], extra: Vec<OsString>) -> Vec<OsString> {
    match argv
        .iter()
        .skip(1)
        .position(|a| subcommands.iter().any(|s| a == s))
    {
        Some(pos) => {
            let at = pos + 2;
            let mut out = argv[..at].to_vec();
            out.extend(extra);
            out.extend_from_slice(&argv[at..]);
            out
        }
        None => argv,
    }
}
