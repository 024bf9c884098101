use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Size limits applied before any enumeration that scales badly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest group that may be constructed.
    pub order: usize,
    /// Largest group whose subgroup lattice may be enumerated.
    pub subgroups: usize,
    /// Largest vertex domain for BFS metrics.
    pub metrics: usize,
    /// Largest group for which the swap graph is built.
    pub swap: usize,
    /// Groups up to this order get a dense multiplication table.
    pub table: usize,
    /// Largest product graph explored by exact BFS.
    pub product: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            order: 20_000,
            subgroups: 5_000,
            metrics: 50_000,
            swap: 2_000,
            table: 4_096,
            product: 100_000,
        }
    }
}

impl Caps {
    /// Parses overrides of the form `order=30000,subgroups=6000`.
    pub fn with_overrides(mut self, text: &str) -> Result<Caps> {
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item.split_once('=').ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("cap override `{item}` is not key=value"),
            })?;
            let value: usize = value.trim().parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("cap override `{item}` has a non-integer value"),
            })?;
            match key.trim() {
                "order" => self.order = value,
                "subgroups" => self.subgroups = value,
                "metrics" => self.metrics = value,
                "swap" => self.swap = value,
                "table" => self.table = value,
                "product" => self.product = value,
                other => {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: format!("unknown cap `{other}`"),
                    })
                }
            }
        }
        Ok(self)
    }

    /// Defaults overridden by the `GENGRAPH_CAPS` environment variable.
    pub fn from_env() -> Result<Caps> {
        match std::env::var("GENGRAPH_CAPS") {
            Ok(text) => Caps::default().with_overrides(&text),
            Err(_) => Ok(Caps::default()),
        }
    }

    pub(crate) fn check(limit: usize, actual: usize, what: &'static str) -> Result<()> {
        if actual > limit {
            Err(Error::cap(what, limit, actual))
        } else {
            Ok(())
        }
    }
}
