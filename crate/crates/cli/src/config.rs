//! Run configuration shared by every command.

use std::path::PathBuf;
use std::str::FromStr;

use catbf_core::fock::Window;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Report rendering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
}

/// Integer window given as `R` (meaning `-R..R`), `LO..HI`, or `empty`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowArg(pub Window);

impl FromStr for WindowArg {
    type Err = String;

    fn from_str(s: &str) -> Result<WindowArg, String> {
        let t = s.trim();
        if t == "empty" {
            return Ok(WindowArg(Window::empty()));
        }
        let int = |x: &str| x.trim().parse::<i64>().map_err(|_| format!("bad window `{s}`"));
        match t.split_once("..") {
            Some((lo, hi)) => Ok(WindowArg(Window::new(int(lo)?, int(hi)?))),
            None => {
                let r = int(t)?;
                if r < 0 {
                    return Err(format!("window radius must be nonnegative, got {r}"));
                }
                Ok(WindowArg(Window::symmetric(r)))
            }
        }
    }
}

impl std::fmt::Display for WindowArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            write!(f, "empty")
        } else {
            write!(f, "{}..{}", self.0.lo, self.0.hi)
        }
    }
}

/// Everything a command needs besides its own positional arguments.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: String,
    /// Largest symmetric group degree a computation may reach.
    pub max_degree: usize,
    pub charge_window: Window,
    pub index_window: Window,
    /// `None` disables the on-disk cache.
    pub cache_dir: Option<PathBuf>,
    pub format: OutputFormat,
    pub jobs: usize,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.max_degree == 0 {
            return Err(CliError::Config("--max-degree must be positive".into()));
        }
        if self.jobs == 0 {
            return Err(CliError::Config("--jobs must be positive".into()));
        }
        Ok(())
    }
}

/// `$XDG_CACHE_HOME/catbf`, else `$HOME/.cache/catbf`, else a directory under the system temp dir.
pub fn default_cache_dir() -> PathBuf {
    if let Some(x) = std::env::var_os("XDG_CACHE_HOME").filter(|v| !v.is_empty()) {
        return PathBuf::from(x).join("catbf");
    }
    if let Some(h) = std::env::var_os("HOME").filter(|v| !v.is_empty()) {
        return PathBuf::from(h).join(".cache").join("catbf");
    }
    std::env::temp_dir().join("catbf-cache")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_grammar() {
        assert_eq!("2".parse::<WindowArg>().unwrap().0, Window::new(-2, 2));
        assert_eq!("-1..3".parse::<WindowArg>().unwrap().0, Window::new(-1, 3));
        assert!("empty".parse::<WindowArg>().unwrap().0.is_empty());
        assert!("3..1".parse::<WindowArg>().unwrap().0.is_empty());
        assert!("-2".parse::<WindowArg>().is_err());
        assert!("x".parse::<WindowArg>().is_err());
    }
}
