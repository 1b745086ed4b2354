//! Node budget for the exponential enumerations.

use crate::error::{Error, Result};

/// Counts enumeration nodes and fails once a cap is crossed.
#[derive(Clone, Debug, Default)]
pub struct Budget {
    cap: Option<u64>,
    used: u64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self { cap: None, used: 0 }
    }

    pub fn capped(cap: u64) -> Self {
        Self { cap: Some(cap), used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn cap(&self) -> Option<u64> {
        self.cap
    }

    #[inline]
    pub fn tick(&mut self, nodes: u64) -> Result<()> {
        self.used = self.used.saturating_add(nodes);
        match self.cap {
            Some(cap) if self.used > cap => Err(Error::CostCapExceeded { cap }),
            _ => Ok(()),
        }
    }
}
