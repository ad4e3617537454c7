use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParamError {
    #[error("k = {k} is too small; need k >= omega + 3 = {}", omega + 3)]
    KTooSmall { k: usize, omega: usize },
}

/// Sizes of the buffer for given `omega`, maximum degree and number of colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BufferParams {
    pub omega: usize,
    pub delta: usize,
    pub k: usize,
    /// `C(omega, 2)`.
    pub big_omega: usize,
    /// Index of the middle waiting region, `3 * C(omega, 2) + 2`.
    pub s: usize,
    /// Number of regions, `s + k - omega + 1`.
    pub n_regions: usize,
}

impl BufferParams {
    pub fn new(omega: usize, delta: usize, k: usize) -> Result<Self, ParamError> {
        if k < omega + 3 {
            return Err(ParamError::KTooSmall { k, omega });
        }
        let big_omega = omega * omega.saturating_sub(1) / 2;
        let s = 3 * big_omega + 2;
        Ok(BufferParams {
            omega,
            delta,
            k,
            big_omega,
            s,
            n_regions: s + k - omega + 1,
        })
    }

    /// Height range covered by one block. An edgeless graph still gets width 1.
    pub fn block_width(&self) -> usize {
        self.delta.max(1)
    }

    pub fn num_blocks(&self) -> usize {
        3 * self.n_regions
    }

    /// Start heights at or beyond this value lie below the buffer.
    pub fn depth(&self) -> usize {
        3 * self.block_width() * self.n_regions
    }

    /// The two temporary colors shared by transposition regions.
    pub fn temps(&self) -> (u32, u32) {
        (self.omega as u32 + 1, self.omega as u32 + 2)
    }

    /// Third non-canonical color, distinct from both temporaries.
    pub fn spare(&self) -> u32 {
        self.omega as u32 + 3
    }

    pub fn is_canonical_color(&self, c: u32) -> bool {
        c >= 1 && c as usize <= self.omega
    }

    /// 0-based block indices of `A_j`, `B_j`, `C_j` for region `j` (1-based).
    pub fn a(j: usize) -> usize {
        3 * (j - 1)
    }

    pub fn b(j: usize) -> usize {
        3 * (j - 1) + 1
    }

    pub fn c(j: usize) -> usize {
        3 * (j - 1) + 2
    }

    /// Region (1-based) holding 0-based block `b`.
    pub fn region_of(b: usize) -> usize {
        b / 3 + 1
    }

    /// 0-based block of a vertex with start height `h`, or `None` below the buffer.
    pub fn block_of_height(&self, h: usize) -> Option<usize> {
        let band = h / self.block_width();
        (band < self.num_blocks()).then(|| self.num_blocks() - 1 - band)
    }
}

/// Number of unordered pairs.
pub fn choose2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}
