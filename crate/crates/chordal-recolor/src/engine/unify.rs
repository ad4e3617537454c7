//! Bringing the buffers of all children of a clique to one common tuple.

use crate::buffer::{BufferParams as P, RegionKind, Tuple};

use super::state::Buffer;
use super::{Ctx, EngineError};

type R<T = ()> = Result<T, EngineError>;

impl Ctx<'_> {
    /// All buffers are valid with the same top vector; afterwards their tuples agree.
    pub(crate) fn step3(&mut self, bufs: &mut [Buffer]) -> R {
        if bufs.len() <= 1 || bufs.iter().all(|b| b.nu == bufs[0].nu) {
            return Ok(());
        }
        let (first, rest) = bufs.split_first_mut().expect("non-empty");
        for buf in rest.iter_mut() {
            self.align_color_buffer(&first.nu, buf)?;
        }
        self.make_well_organized(first)?;
        for buf in rest.iter_mut() {
            self.make_well_organized(buf)?;
            self.copy_transposition_program(&first.nu, buf)?;
            if buf.nu != first.nu {
                return Err(EngineError::Internal(format!(
                    "children disagree after unification\nreference:\n{}\nother:\n{}",
                    first.nu.dump(self.params.omega),
                    buf.nu.dump(self.params.omega)
                )));
            }
        }
        Ok(())
    }

    /// Makes `C_s` and the color buffer of `buf` equal to the reference.
    fn align_color_buffer(&mut self, reference: &Tuple, buf: &mut Buffer) -> R {
        let s = self.params.s;
        let n = self.params.n_regions;
        let cs = P::c(s);
        while let Some(p) = (1..=self.params.omega).find(|&p| buf.v(cs).at(p) != reference.vecs[cs].at(p)) {
            let c = reference.vecs[cs].at(p);
            self.same_col_buf(buf, p, c)?;
            self.choose_temporary(buf, s)?;
            self.step2(buf)?;
            self.debug_valid(buf, false, "same_col_buf")?;
        }
        for j in s + 1..n {
            let RegionKind::Color { p, .. } = reference.kind(j, self.params.omega) else {
                continue;
            };
            let Some(i) = self.color_region_of(buf, p) else {
                return Err(EngineError::Internal(format!("class {p} lacks a color region")));
            };
            self.move_color_region(buf, i, j)?;
        }
        self.debug_valid(buf, false, "color buffer alignment")
    }

    /// Class `p` gets color `c` on `C_s`, exchanging it with the class that holds it.
    fn same_col_buf(&mut self, buf: &mut Buffer, p: usize, c: u32) -> R {
        let s = self.params.s;
        let cs = P::c(s);
        let Some(l) = buf.v(cs).class_of(c) else {
            return Err(EngineError::Internal("middle vector lacks a canonical color".into()));
        };
        let c_p = buf.v(cs).at(p);
        let (Some(jp), Some(_)) = (self.color_region_of(buf, p), self.color_region_of(buf, l)) else {
            return Err(EngineError::Internal("mismatched classes need color regions".into()));
        };
        self.move_color_region(buf, jp, s + 1)?;
        let jl = self.color_region_of(buf, l).expect("still present");
        self.move_color_region(buf, jl, s + 2)?;
        let zp = buf.v(P::b(s + 1)).at(p);
        let zl = buf.v(P::b(s + 2)).at(l);
        let k = self.params.k as u32;
        let Some(spare) = (self.params.omega as u32 + 1..=k)
            .find(|&y| y != zp && y != zl && (P::a(s)..=P::c(s + 2)).all(|b| !buf.v(b).contains(y)))
        else {
            return Err(EngineError::Internal("no spare color near the middle region".into()));
        };
        self.set_range(buf, P::b(s), P::a(s + 2), l, spare)?;
        self.set(buf, P::b(s), p, zl)?;
        self.set_range(buf, cs, P::a(s + 1), p, c)?;
        self.set_range(buf, cs, P::a(s + 2), l, c_p)
    }

    /// Leaves at most `C(omega, 2)` transpositions, packed against `R_{s-1}`.
    pub(crate) fn make_well_organized(&mut self, buf: &mut Buffer) -> R {
        let s = self.params.s;
        let big = self.params.big_omega;
        loop {
            let count = (2..s).filter(|&j| self.kind(buf, j).is_transposition()).count();
            if count <= big {
                break;
            }
            let Some((i, j)) = self.same_pair(buf, 2, s - 1) else {
                return Err(EngineError::Internal("too many transpositions without a repeat".into()));
            };
            self.transp_cancel(buf, i, j)?;
        }
        for t in (2..s.saturating_sub(1)).rev() {
            if !self.kind(buf, t).is_transposition() {
                continue;
            }
            let mut u = t;
            while u + 1 < s && self.kind(buf, u + 1).is_waiting() {
                self.shift_right(buf, u)?;
                u += 1;
            }
        }
        if (2..2 * big + 2).any(|j| !self.kind(buf, j).is_waiting()) {
            return Err(EngineError::Internal("buffer is not well organized".into()));
        }
        self.debug_valid(buf, false, "make_well_organized")
    }

    /// Both buffers well organized with equal `C_s`: writes the reference program and
    /// its inverse in front of `buf`'s own program, cancels the identity part, then
    /// slides the copy into place.
    fn copy_transposition_program(&mut self, reference: &Tuple, buf: &mut Buffer) -> R {
        let big = self.params.big_omega;
        let s = self.params.s;
        let omega = self.params.omega;
        for j in 0..big {
            if let Some((p, q)) = reference.kind(2 * big + 2 + j, omega).transposed_classes() {
                self.insert_transposition(buf, 2 + j, 2 * big + 1 - j, p, q)?;
            }
        }
        self.debug_valid(buf, false, "write_transposition_program")?;
        self.cancel_identity_segment(buf, big + 2, s - 1)?;
        for t in (2..big + 2).rev() {
            if self.kind(buf, t).is_transposition() {
                for u in t..t + 2 * big {
                    self.shift_right(buf, u)?;
                }
            }
        }
        for j in 2 * big + 2..s {
            if let RegionKind::Transposition { p, z, .. } = reference.kind(j, omega) {
                self.orient_temporaries(buf, j, p, z)?;
            }
        }
        self.debug_valid(buf, false, "transposition program copy")
    }
}
