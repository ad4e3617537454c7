//! Runs the buffer scripts on bare tuples, without a graph behind them.

use std::sync::OnceLock;

use crate::buffer::{BufferParams, ColorVector, Tuple};
use crate::graph_core::{Graph, Structure};

use super::recorder::Recorder;
use super::state::{Buckets, Buffer};
use super::{Ctx, EngineError, LemmaStats};

fn empty() -> &'static (Graph, Structure) {
    static CELL: OnceLock<(Graph, Structure)> = OnceLock::new();
    CELL.get_or_init(|| {
        let g = Graph::empty(0);
        let st = Structure::new(&g).expect("empty graph is chordal");
        (g, st)
    })
}

/// A tuple together with the scripts that rewrite it. Every change is checked for
/// vectorial properness; `worst` reports the largest number of changes made to a
/// single coordinate by the last call.
pub struct VectorLab {
    params: BufferParams,
    buf: Buffer,
    pub worst: u32,
}

impl VectorLab {
    /// All classes count as internal unless listed in `external`.
    pub fn new(params: BufferParams, nu: Tuple, external: &[usize]) -> Self {
        let nb = params.num_blocks();
        let mut internal = vec![true; params.omega];
        for &p in external {
            internal[p - 1] = false;
        }
        VectorLab {
            params,
            buf: Buffer {
                members: Buckets::empty(nb, params.omega),
                frontier: Buckets::empty(nb, params.omega),
                internal,
                nu,
                coord: vec![0; nb * params.omega],
            },
            worst: 0,
        }
    }

    pub fn tuple(&self) -> &Tuple {
        &self.buf.nu
    }

    pub fn into_tuple(self) -> Tuple {
        self.buf.nu
    }

    fn with<T>(
        &mut self,
        f: impl FnOnce(&mut Ctx<'static>, &mut Buffer) -> Result<T, EngineError>,
    ) -> Result<T, EngineError> {
        let (g, st) = empty();
        let mut ctx = Ctx {
            g,
            st,
            params: self.params,
            rec: Recorder::new(g, &[], &[], false),
            debug: true,
            stats: LemmaStats::default(),
        };
        self.buf.reset_coord();
        let out = f(&mut ctx, &mut self.buf);
        self.worst = self.buf.worst_coord();
        out
    }

    pub fn step1(&mut self, target: &ColorVector) -> Result<(), EngineError> {
        self.with(|c, b| c.step1(b, target))
    }

    pub fn step2(&mut self) -> Result<(), EngineError> {
        self.with(|c, b| c.step2(b))
    }

    pub fn choose_temporary(&mut self, j: usize) -> Result<(), EngineError> {
        self.with(|c, b| c.choose_temporary(b, j))
    }

    pub fn transp_shift(&mut self, i: usize) -> Result<(), EngineError> {
        self.with(|c, b| c.transp_shift(b, i))
    }

    pub fn shift_right(&mut self, i: usize) -> Result<(), EngineError> {
        self.with(|c, b| c.shift_right(b, i))
    }

    pub fn transp_cancel(&mut self, i: usize, j: usize) -> Result<(), EngineError> {
        self.with(|c, b| c.transp_cancel(b, i, j))
    }

    pub fn move_color_region(&mut self, i: usize, j: usize) -> Result<(), EngineError> {
        self.with(|c, b| c.move_color_region(b, i, j))
    }

    pub fn insert_transposition(&mut self, t0: usize, t1: usize, p: usize, q: usize) -> Result<(), EngineError> {
        self.with(|c, b| c.insert_transposition(b, t0, t1, p, q))
    }

    /// Returns true when the two regions cancelled each other.
    pub fn switch_transpo(&mut self, i: usize, a: usize) -> Result<bool, EngineError> {
        self.with(|c, b| c.switch_transpo(b, i, a))
            .map(|s| matches!(s, super::lemmas::Switch::Cancelled))
    }

    pub fn cancel_identity_segment(&mut self, t0: usize, t1: usize) -> Result<(), EngineError> {
        self.with(|c, b| c.cancel_identity_segment(b, t0, t1))
    }

    pub fn make_well_organized(&mut self) -> Result<(), EngineError> {
        self.with(|c, b| c.make_well_organized(b))
    }
}

/// Brings several valid tuples with the same top vector to one common tuple.
/// Returns the common tuple and the largest per-coordinate change count.
pub fn unify_tuples(params: BufferParams, tuples: Vec<Tuple>) -> Result<(Tuple, u32), EngineError> {
    let (g, st) = empty();
    let mut ctx = Ctx {
        g,
        st,
        params,
        rec: Recorder::new(g, &[], &[], false),
        debug: true,
        stats: LemmaStats::default(),
    };
    let mut bufs: Vec<Buffer> = tuples
        .into_iter()
        .map(|nu| VectorLab::new(params, nu, &[]).buf)
        .collect();
    ctx.step3(&mut bufs)?;
    let worst = bufs.iter().map(Buffer::worst_coord).max().unwrap_or(0);
    Ok((bufs.swap_remove(0).nu, worst))
}
