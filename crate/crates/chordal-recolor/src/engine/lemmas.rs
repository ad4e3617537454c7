//! Vector-level recoloring scripts on a single buffer.
//!
//! Every script is a list of changes "class `p` on blocks `b0..=b1` becomes color
//! `c`". Each change is checked against the neighboring block vectors before the
//! member vertices are recolored.

use crate::buffer::{check_validity, BufferParams as P, RegionKind, Validity};

use super::state::Buffer;
use super::{Ctx, EngineError};

type R<T = ()> = Result<T, EngineError>;

fn internal<T>(msg: impl Into<String>) -> R<T> {
    Err(EngineError::Internal(msg.into()))
}

pub(crate) enum Switch {
    Moved,
    Cancelled,
}

impl Ctx<'_> {
    /// Recolors class `p` on block `b` to `c`, with all member vertices.
    pub(crate) fn set(&mut self, buf: &mut Buffer, b: usize, p: usize, c: u32) -> R {
        let old = buf.v(b).at(p);
        if old == c {
            return Ok(());
        }
        let nb = buf.nu.vecs.len();
        let clash = |bb: usize| buf.v(bb).class_of(c).is_some_and(|q| q != p);
        if clash(b) || (b > 0 && clash(b - 1)) || (b + 1 < nb && clash(b + 1)) {
            return internal(format!(
                "vector change breaks properness: block {b}, class {p}, color {c}\n{}",
                buf.nu.dump(self.params.omega)
            ));
        }
        if b + 1 == nb && !buf.is_internal(p) {
            return internal(format!("class {p} is not internal but its top block changes"));
        }
        if c == 0 || c as usize > self.params.k {
            return internal(format!("color {c} outside 1..=k"));
        }
        buf.nu.vecs[b].set(p, c);
        buf.coord[b * self.params.omega + p - 1] += 1;
        for i in 0..buf.members.get(b, p).len() {
            let v = buf.members.get(b, p)[i];
            self.rec.recolor(v, c)?;
        }
        Ok(())
    }

    pub(crate) fn set_range(&mut self, buf: &mut Buffer, b0: usize, b1: usize, p: usize, c: u32) -> R {
        for b in b0..=b1 {
            self.set(buf, b, p, c)?;
        }
        Ok(())
    }

    pub(crate) fn kind(&self, buf: &Buffer, j: usize) -> RegionKind {
        buf.nu.kind(j, self.params.omega)
    }

    pub(crate) fn debug_valid(&self, buf: &Buffer, allow_almost: bool, what: &str) -> R {
        if !self.debug {
            return Ok(());
        }
        self.require_valid(buf, allow_almost, what)
    }

    pub(crate) fn require_valid(&self, buf: &Buffer, allow_almost: bool, what: &str) -> R {
        match check_validity(&buf.nu, &self.params) {
            Validity::Valid => Ok(()),
            Validity::AlmostValid if allow_almost => Ok(()),
            other => internal(format!(
                "{what} left the buffer {other:?}\n{}",
                buf.nu.dump(self.params.omega)
            )),
        }
    }

    /// Region `s < j < N` holding the color region of class `p`.
    pub(crate) fn color_region_of(&self, buf: &Buffer, p: usize) -> Option<usize> {
        (self.params.s + 1..self.params.n_regions)
            .find(|&j| matches!(self.kind(buf, j), RegionKind::Color { p: q, .. } if q == p))
    }

    /// Makes the temporaries of transposition region `j` the shared pair.
    pub(crate) fn choose_temporary(&mut self, buf: &mut Buffer, j: usize) -> R {
        let RegionKind::Transposition { p, q, z, z2, .. } = self.kind(buf, j) else {
            return Ok(());
        };
        let (t, t2) = self.params.temps();
        let other = |x: u32| if x == t { t2 } else { t };
        let is_temp = |x: u32| x == t || x == t2;
        if is_temp(z) && is_temp(z2) {
            return Ok(());
        }
        let bj = P::b(j);
        if is_temp(z) {
            self.set(buf, bj, q, other(z))
        } else if is_temp(z2) {
            self.set(buf, bj, p, other(z2))
        } else {
            self.set(buf, bj, p, t)?;
            self.set(buf, bj, q, t2)
        }
    }

    /// Puts the first temporary on class `p` of transposition region `j`.
    pub(crate) fn orient_temporaries(&mut self, buf: &mut Buffer, j: usize, p: usize, want: u32) -> R {
        let bj = P::b(j);
        if buf.v(bj).at(p) == want {
            return Ok(());
        }
        let Some((x, y)) = self.kind(buf, j).transposed_classes() else {
            return internal("orienting a region that is not a transposition");
        };
        let q = if x == p { y } else { x };
        let (pz, qz) = (buf.v(bj).at(p), buf.v(bj).at(q));
        let spare = self.params.spare();
        self.set(buf, bj, p, spare)?;
        self.set(buf, bj, q, pz)?;
        self.set(buf, bj, p, qz)
    }

    /// Fixes the smallest class whose top color differs from `target`.
    pub(crate) fn step1(&mut self, buf: &mut Buffer, target: &crate::buffer::ColorVector) -> R {
        let s = self.params.s;
        let n = self.params.n_regions;
        let top = P::c(n);
        let Some(p) = (1..=self.params.omega).find(|&p| buf.v(top).at(p) != target.at(p)) else {
            return Ok(());
        };
        let c = target.at(p);
        let mut holder = None;
        let mut p_has_c = false;
        for b in P::a(s)..=top {
            if let Some(q) = buf.v(b).class_of(c) {
                if q == p {
                    p_has_c = true;
                } else {
                    holder = Some(q);
                }
            }
        }
        match holder {
            None if !p_has_c => self.ccc_fresh(buf, p, c)?,
            None => {
                let Some(i) = self.color_region_of(buf, p) else {
                    return internal("class carries the target color but has no color region");
                };
                self.set_range(buf, P::b(i), top, p, c)?;
            }
            Some(l) if !self.params.is_canonical_color(c) => {
                let Some(j) = self.color_region_of(buf, l) else {
                    return internal("non-canonical color outside a color region");
                };
                let c1 = buf.v(P::a(j)).at(l);
                self.set_range(buf, P::b(j), top, l, c1)?;
                self.ccc_fresh(buf, p, c)?;
            }
            Some(l) => match self.color_region_of(buf, l) {
                Some(j) => self.step1_vanishing(buf, p, l, c, j)?,
                None => self.step1_persistent(buf, p, l, c)?,
            },
        }
        self.choose_temporary(buf, s)
    }

    /// Gives class `p` the color `c`, which is absent from `R_s .. R_N`.
    fn ccc_fresh(&mut self, buf: &mut Buffer, p: usize, c: u32) -> R {
        let top = P::c(self.params.n_regions);
        let i = match self.color_region_of(buf, p) {
            Some(i) => i,
            None => {
                let found = (self.params.s + 1..self.params.n_regions)
                    .find(|&j| self.kind(buf, j).is_waiting());
                match found {
                    Some(i) => i,
                    None => return internal("no waiting region in the color buffer"),
                }
            }
        };
        self.set_range(buf, P::b(i), top, p, c)
    }

    /// Class `l` holds canonical `c` on all of `R_s .. R_N`.
    fn step1_persistent(&mut self, buf: &mut Buffer, p: usize, l: usize, c: u32) -> R {
        let s = self.params.s;
        let top = P::c(self.params.n_regions);
        let c1 = buf.v(P::a(s)).at(p);
        if let Some(j) = self.color_region_of(buf, p) {
            self.set_range(buf, P::b(j), top, p, c1)?;
        }
        let (z, z2) = self.params.temps();
        let free = (1..=self.params.k as u32)
            .filter(|&y| y != z && y != z2)
            .find(|&y| (P::b(s)..=top).all(|b| !buf.v(b).contains(y)));
        let (y, lender) = match free {
            Some(y) => (y, None),
            None => {
                let lender = (s + 1..self.params.n_regions).find_map(|j| match self.kind(buf, j) {
                    RegionKind::Color { p: q, c1: y, z: zq } if q != p && q != l && zq != z && zq != z2 => {
                        Some((j, q, y, zq))
                    }
                    _ => None,
                });
                match lender {
                    Some((j, q, y, zq)) => {
                        self.set_range(buf, P::b(s), P::a(j), q, zq)?;
                        (y, Some((j, q)))
                    }
                    None => return internal("no free color and no class to lend one"),
                }
            }
        };
        self.set(buf, P::b(s), p, z)?;
        self.set(buf, P::b(s), l, z2)?;
        self.set_range(buf, P::c(s), top, l, y)?;
        self.set_range(buf, P::c(s), top, p, c)?;
        self.set_range(buf, P::c(s), top, l, c1)?;
        if let Some((j, q)) = lender {
            self.set_range(buf, P::b(s), P::a(j), q, y)?;
        }
        Ok(())
    }

    /// Canonical `c` held by `l` disappears in `l`'s color region `R_j`.
    fn step1_vanishing(&mut self, buf: &mut Buffer, p: usize, l: usize, c: u32, j: usize) -> R {
        let s = self.params.s;
        let top = P::c(self.params.n_regions);
        let c1 = buf.v(P::a(s)).at(p);
        let w = buf.v(P::b(j)).at(l);
        let (z, z2) = self.params.temps();
        let zp = if w == z { z2 } else { z };
        self.set_range(buf, P::b(s), P::a(j), l, w)?;
        self.set(buf, P::b(s), p, zp)?;
        self.set_range(buf, P::c(s), top, p, c)?;
        self.set_range(buf, P::c(s), P::a(j), l, c1)
    }

    /// Turns an almost valid buffer into a valid one.
    pub(crate) fn step2(&mut self, buf: &mut Buffer) -> R {
        let s = self.params.s;
        if !self.kind(buf, s).is_transposition() {
            return Ok(());
        }
        self.choose_temporary(buf, s)?;
        let i = match (2..s).rev().find(|&i| self.kind(buf, i).is_waiting()) {
            Some(i) => i,
            None => {
                let Some((a, b)) = self.same_pair(buf, 2, s - 1) else {
                    return internal("transposition buffer full without repeated pair");
                };
                self.transp_cancel(buf, a, b)?;
                b
            }
        };
        for t in i..s {
            self.transp_shift(buf, t)?;
        }
        Ok(())
    }

    /// Color pair exchanged by transposition region `j`.
    fn color_pair(&self, buf: &Buffer, j: usize) -> Option<(u32, u32)> {
        match self.kind(buf, j) {
            RegionKind::Transposition { c1, c2, .. } => Some((c1.min(c2), c1.max(c2))),
            _ => None,
        }
    }

    /// Two transposition regions in `lo..=hi` exchanging the same colors, latest pair first.
    pub(crate) fn same_pair(&self, buf: &Buffer, lo: usize, hi: usize) -> Option<(usize, usize)> {
        let pairs: Vec<_> = (lo..=hi).map(|j| self.color_pair(buf, j)).collect();
        for b in (0..pairs.len()).rev() {
            let Some(pb) = pairs[b] else { continue };
            for a in (0..b).rev() {
                if pairs[a] == Some(pb) {
                    return Some((lo + a, lo + b));
                }
            }
        }
        None
    }

    /// `R_i` waiting, `R_{i+1}` a transposition: moves the transposition to `R_i`.
    pub(crate) fn transp_shift(&mut self, buf: &mut Buffer, i: usize) -> R {
        let RegionKind::Transposition { p, q, c1, c2, z, z2 } = self.kind(buf, i + 1) else {
            return internal("shift source is not a transposition");
        };
        if !self.kind(buf, i).is_waiting() {
            return internal("shift target is not waiting");
        }
        self.set_range(buf, P::b(i), P::a(i + 1), p, z)?;
        self.set_range(buf, P::b(i), P::a(i + 1), q, z2)?;
        self.set_range(buf, P::c(i), P::b(i + 1), p, c2)?;
        self.set_range(buf, P::c(i), P::b(i + 1), q, c1)
    }

    /// `R_i` a transposition, `R_{i+1}` waiting: moves the transposition to `R_{i+1}`.
    pub(crate) fn shift_right(&mut self, buf: &mut Buffer, i: usize) -> R {
        let RegionKind::Transposition { p, q, c1, c2, z, z2 } = self.kind(buf, i) else {
            return internal("shift source is not a transposition");
        };
        if !self.kind(buf, i + 1).is_waiting() {
            return internal("shift target is not waiting");
        }
        self.set_range(buf, P::c(i), P::b(i + 1), p, z)?;
        self.set_range(buf, P::c(i), P::b(i + 1), q, z2)?;
        self.set_range(buf, P::b(i), P::a(i + 1), p, c1)?;
        self.set_range(buf, P::b(i), P::a(i + 1), q, c2)
    }

    /// Two transposition regions `i < j` exchanging the same colors both become waiting.
    pub(crate) fn transp_cancel(&mut self, buf: &mut Buffer, i: usize, j: usize) -> R {
        let (Some((pi, li)), Some((pj, lj))) = (
            self.kind(buf, i).transposed_classes(),
            self.kind(buf, j).transposed_classes(),
        ) else {
            return internal("cancel needs two transposition regions");
        };
        let (ai, aj) = (P::a(i), P::a(j));
        let c1 = buf.v(ai).at(pi);
        let c2 = buf.v(ai).at(li);
        let (p_j, l_j) = if buf.v(aj).at(pj) == c2 { (pj, lj) } else { (lj, pj) };
        if buf.v(aj).at(p_j) != c2 || buf.v(aj).at(l_j) != c1 {
            return internal("cancelled regions exchange different colors");
        }
        let spare = self.params.spare();
        let mut held_c1 = Vec::new();
        for b in P::c(i)..=aj {
            if let Some(x) = buf.v(b).class_of(c1) {
                held_c1.push((b, x));
                self.set(buf, b, x, spare)?;
            }
        }
        for b in P::c(i)..=aj {
            if let Some(x) = buf.v(b).class_of(c2) {
                self.set(buf, b, x, c1)?;
            }
        }
        for (b, x) in held_c1 {
            self.set(buf, b, x, c2)?;
        }
        self.set(buf, P::b(i), pi, c1)?;
        self.set(buf, P::b(j), p_j, c1)?;
        self.set(buf, P::b(i), li, c2)?;
        self.set(buf, P::b(j), l_j, c2)
    }

    /// Moves the color region at `R_i` to `R_j`; whatever sat at `R_j` moves to `R_i`.
    pub(crate) fn move_color_region(&mut self, buf: &mut Buffer, i: usize, j: usize) -> R {
        if i == j {
            return Ok(());
        }
        let RegionKind::Color { p, c1, z } = self.kind(buf, i) else {
            return internal("moving a region that is not a color region");
        };
        let (lo, hi) = (i.min(j), i.max(j));
        match self.kind(buf, j) {
            RegionKind::Waiting => {
                let c = if i < j { c1 } else { z };
                self.set_range(buf, P::b(lo), P::a(hi), p, c)
            }
            RegionKind::Color { p: l, c1: cl, z: zl } => {
                if i < j {
                    self.set_range(buf, P::b(lo), P::a(hi), l, zl)?;
                    self.set_range(buf, P::b(lo), P::a(hi), p, c1)
                } else {
                    self.set_range(buf, P::b(lo), P::a(hi), p, z)?;
                    self.set_range(buf, P::b(lo), P::a(hi), l, cl)
                }
            }
            _ => internal("color region target is neither waiting nor a color region"),
        }
    }

    /// Puts a transposition of classes `p`, `q` on both `R_t0` and `R_t1`,
    /// all regions in between being waiting.
    pub(crate) fn insert_transposition(&mut self, buf: &mut Buffer, t0: usize, t1: usize, p: usize, q: usize) -> R {
        if !(t0..=t1).all(|t| self.kind(buf, t).is_waiting()) {
            return internal("insertion span is not waiting");
        }
        let (z, z2) = self.params.temps();
        let c1 = buf.v(P::a(t0)).at(p);
        let c2 = buf.v(P::a(t0)).at(q);
        self.set_range(buf, P::b(t0), P::b(t1), p, z)?;
        self.set(buf, P::b(t0), q, z2)?;
        self.set(buf, P::b(t1), q, z2)?;
        self.set_range(buf, P::c(t0), P::a(t1), q, c1)?;
        self.set_range(buf, P::c(t0), P::a(t1), p, c2)
    }

    /// Rewrites transposition regions `R_i`, `R_{i+1}` (the latter permuting `a`)
    /// so that `R_i` permutes `a` and `R_{i+1}` does not, keeping the product.
    pub(crate) fn switch_transpo(&mut self, buf: &mut Buffer, i: usize, a: usize) -> R<Switch> {
        let Some((x1, x2)) = self.kind(buf, i + 1).transposed_classes() else {
            return internal("switch needs a transposition on the right");
        };
        if a != x1 && a != x2 {
            return internal("switched class is not permuted on the right");
        }
        let left = self.kind(buf, i);
        if left.is_waiting() {
            self.transp_shift(buf, i)?;
            return Ok(Switch::Moved);
        }
        let Some((y1, y2)) = left.transposed_classes() else {
            return internal("switch needs a transposition or waiting region on the left");
        };
        if (y1, y2) == (x1, x2) {
            self.transp_cancel(buf, i, i + 1)?;
            return Ok(Switch::Cancelled);
        }
        self.choose_temporary(buf, i)?;
        self.choose_temporary(buf, i + 1)?;
        let shared = [y1, y2].into_iter().find(|&y| y == x1 || y == x2);
        match shared {
            Some(m) => self.switch_three(buf, i, a, m, y1 + y2 - m, x1 + x2 - m)?,
            None => self.switch_four(buf, i, a, (y1, y2), (x1, x2))?,
        }
        Ok(Switch::Moved)
    }

    /// `R_i` permutes `m`, `r`; `R_{i+1}` permutes `m`, `t`.
    fn switch_three(&mut self, buf: &mut Buffer, i: usize, a: usize, m: usize, r: usize, t: usize) -> R {
        let (z, z2) = self.params.temps();
        let spare = self.params.spare();
        let other = |x: u32| if x == z { z2 } else { z };
        let alpha = buf.v(P::a(i)).clone();
        let sigma_i = |x: usize| if x == m { r } else if x == r { m } else { x };
        let sigma_n = |x: usize| if x == m { t } else if x == t { m } else { x };
        let pi = |x: usize| sigma_i(sigma_n(x));
        let trio = [m, r, t];
        let rest: Vec<usize> = trio.iter().copied().filter(|&x| x != a).collect();
        let (u1, u2) = (rest[0], rest[1]);
        let new_n = |x: usize| if x == u1 { u2 } else if x == u2 { u1 } else { x };
        let new_i = |x: usize| pi(new_n(x));
        let fixed = trio.iter().copied().find(|&x| new_i(x) == x);
        let Some(x_out) = fixed else {
            return internal("three-class switch has no fixed class");
        };
        let (bi, bn) = (P::b(i), P::b(i + 1));
        self.set_range(buf, bi, bn, m, spare)?;
        let tr = buf.v(bi).at(r);
        let tt = buf.v(bn).at(t);
        if tr != tt {
            self.set_range(buf, P::c(i), bn, r, tr)?;
            self.set_range(buf, bi, P::a(i + 1), t, tt)?;
        } else {
            self.set(buf, bi, r, other(tr))?;
            self.set_range(buf, P::c(i), bn, r, other(tr))?;
            self.set_range(buf, bi, P::a(i + 1), t, tt)?;
        }
        for x in trio {
            self.set_range(buf, P::c(i), P::a(i + 1), x, alpha.at(new_i(x)))?;
        }
        self.set(buf, bi, x_out, alpha.at(x_out))?;
        self.settle_spare(buf, bi)?;
        let c_top = buf.v(P::c(i + 1)).at(a);
        self.set(buf, bn, a, c_top)?;
        self.settle_spare(buf, bn)
    }

    /// Replaces the spare color on block `b` by whichever temporary is free there.
    fn settle_spare(&mut self, buf: &mut Buffer, b: usize) -> R {
        let spare = self.params.spare();
        let Some(x) = buf.v(b).class_of(spare) else {
            return Ok(());
        };
        let (z, z2) = self.params.temps();
        let free = if buf.v(b).contains(z) { z2 } else { z };
        self.set(buf, b, x, free)
    }

    /// `R_i` permutes `c`, `d`; `R_{i+1}` permutes `a`, `b`; the four are distinct.
    fn switch_four(&mut self, buf: &mut Buffer, i: usize, _a: usize, cd: (usize, usize), ab: (usize, usize)) -> R {
        let (z, z2) = self.params.temps();
        let spare = self.params.spare();
        let (bi, bn) = (P::b(i), P::b(i + 1));
        let (c, d) = if buf.v(bi).at(cd.0) == z { cd } else { (cd.1, cd.0) };
        let (a, b) = if buf.v(bn).at(ab.0) == z { ab } else { (ab.1, ab.0) };
        let alpha = buf.v(P::a(i)).clone();
        let (c1, c2, c3, c4) = (alpha.at(a), alpha.at(b), alpha.at(c), alpha.at(d));
        let (ci, an) = (P::c(i), P::a(i + 1));
        self.set_range(buf, bi, bn, a, spare)?;
        self.set_range(buf, ci, bn, c, z)?;
        self.set_range(buf, ci, bn, b, c1)?;
        self.set_range(buf, ci, bn, d, z2)?;
        self.set_range(buf, bi, an, c, c3)?;
        self.set_range(buf, bi, an, d, c4)?;
        self.set(buf, bi, b, z)?;
        self.set_range(buf, ci, bn, a, c2)?;
        self.settle_spare(buf, bi)
    }

    /// Product of the transpositions on `R_t0 .. R_t1` is the identity: makes them all waiting.
    pub(crate) fn cancel_identity_segment(&mut self, buf: &mut Buffer, t0: usize, t1: usize) -> R {
        loop {
            let Some(r) = (t0..=t1).rev().find(|&t| self.kind(buf, t).is_transposition()) else {
                return Ok(());
            };
            let (a, _) = self.kind(buf, r).transposed_classes().expect("transposition");
            let mut i = r;
            loop {
                if i <= t0 {
                    return internal("segment product is not the identity");
                }
                i -= 1;
                match self.switch_transpo(buf, i, a)? {
                    Switch::Cancelled => break,
                    Switch::Moved => {}
                }
                self.debug_valid(buf, false, "switch_transpo")?;
            }
        }
    }
}
