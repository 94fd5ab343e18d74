//! Output negotiation: destination resolution and format selection.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::Args;
use serde::Serialize;

/// Environment variable naming the default directory for relative
/// `--output` paths.
pub const OUTPUT_DIR_ENV: &str = "LUR_OUTPUT_DIR";

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Write to this file instead of stdout. A relative path is resolved
    /// against $LUR_OUTPUT_DIR when that variable is set.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Output format of a command. Single results default to JSON; sweeps
/// default to CSV.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl OutputArgs {
    pub fn write(&self, content: &str) -> anyhow::Result<()> {
        match &self.output {
            None => {
                std::io::stdout()
                    .write_all(content.as_bytes())
                    .context("writing to stdout")?;
                Ok(())
            }
            Some(path) => {
                let path = resolve(path);
                if let Some(parent) = path.parent() {
                    if !parent.as_os_str().is_empty() {
                        fs::create_dir_all(parent)
                            .with_context(|| format!("creating {}", parent.display()))?;
                    }
                }
                fs::write(&path, content).with_context(|| format!("writing {}", path.display()))
            }
        }
    }
}

/// Prefixes relative paths with `$LUR_OUTPUT_DIR` when set.
pub fn resolve(path: &Path) -> PathBuf {
    if path.is_relative() {
        if let Some(dir) = std::env::var_os(OUTPUT_DIR_ENV) {
            return PathBuf::from(dir).join(path);
        }
    }
    path.to_path_buf()
}

/// Pretty JSON with a trailing newline; field order follows the struct
/// definitions, so reruns are byte-identical.
pub fn to_json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value).context("serializing to JSON")?;
    s.push('\n');
    Ok(s)
}
