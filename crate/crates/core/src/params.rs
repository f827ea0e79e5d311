use crate::error::{Error, Result};

/// Search parameters: `k` is the plex slack, `t` the minimum size of each
/// antagonistic side. Only `t >= 2k-1` is accepted; smaller `t` loses the
/// bounded-diameter guarantee the enumeration relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Params {
    k: u32,
    t: u32,
}

impl Params {
    pub fn new(k: u32, t: u32) -> Result<Self> {
        if k < 1 || (t as i64) < 2 * k as i64 - 1 {
            return Err(Error::InvalidParams { k, t });
        }
        Ok(Params { k, t })
    }

    pub fn k(&self) -> usize {
        self.k as usize
    }

    pub fn t(&self) -> usize {
        self.t as usize
    }
}
