//! Module specifiers.
//!
//! Grammar: `trivial:N` | `sign:N` | `reg:N` | `S:λ`, where `λ` is a comma-separated
//! weakly decreasing list of positive parts and `S:0` is the trivial `S_0`-module.

use std::fmt;
use std::str::FromStr;

use catbf_core::catbernstein::Seed;
use catbf_core::symrep::RepModule;
use catbf_core::Partition;

use crate::cache::SpechtCache;
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    Trivial(usize),
    Sign(usize),
    Regular(usize),
    Specht(Partition),
}

impl FromStr for ModuleSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<ModuleSpec, String> {
        let (kind, arg) = s.split_once(':').ok_or_else(|| format!("module `{s}`: expected KIND:ARG"))?;
        let n = || arg.trim().parse::<usize>().map_err(|_| format!("module `{s}`: bad degree `{arg}`"));
        match kind.trim() {
            "trivial" => Ok(ModuleSpec::Trivial(n()?)),
            "sign" => Ok(ModuleSpec::Sign(n()?)),
            "reg" => Ok(ModuleSpec::Regular(n()?)),
            "S" => arg.parse::<Partition>().map(ModuleSpec::Specht).map_err(|e| format!("module `{s}`: {e}")),
            k => Err(format!("module `{s}`: unknown kind `{k}` (trivial, sign, reg, S)")),
        }
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleSpec::Trivial(n) => write!(f, "trivial:{n}"),
            ModuleSpec::Sign(n) => write!(f, "sign:{n}"),
            ModuleSpec::Regular(n) => write!(f, "reg:{n}"),
            ModuleSpec::Specht(l) => write!(f, "S:{l}"),
        }
    }
}

impl ModuleSpec {
    pub fn degree(&self) -> usize {
        match self {
            ModuleSpec::Trivial(n) | ModuleSpec::Sign(n) | ModuleSpec::Regular(n) => *n,
            ModuleSpec::Specht(l) => l.size(),
        }
    }

    pub fn resolve(&self, cache: &SpechtCache) -> Result<Seed, CliError> {
        let m = match self {
            ModuleSpec::Trivial(n) => RepModule::trivial(*n),
            ModuleSpec::Sign(n) => RepModule::sign(*n),
            ModuleSpec::Regular(n) => RepModule::regular(*n)?,
            ModuleSpec::Specht(l) => return Ok(Seed { label: self.to_string(), module: cache.get(l)? }),
        };
        Ok(Seed::new(self.to_string(), m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["trivial:0", "sign:3", "reg:2", "S:2,1", "S:0"] {
            assert_eq!(s.parse::<ModuleSpec>().unwrap().to_string(), s);
        }
        for bad in ["S:1,2", "reg", "foo:1", "trivial:-1"] {
            assert!(bad.parse::<ModuleSpec>().is_err(), "{bad}");
        }
    }
}
