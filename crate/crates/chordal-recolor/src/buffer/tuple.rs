use std::fmt;

use super::{classify_region, BufferParams, ColorVector, RegionKind};

/// The `3N` block vectors of a buffer, ordered from `A_1` (deepest) to `C_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tuple {
    pub vecs: Vec<ColorVector>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    /// `C_j` and `A_{j+1}` carry the same vector.
    Continuity,
    /// `R_1` is canonical.
    CanonicalBottom,
    /// `R_2 .. R_{s-1}` are waiting or transposition regions sharing temporaries.
    TranspositionBuffer,
    /// `R_{s+1} .. R_{N-1}` are waiting or color regions.
    ColorBuffer,
    /// `R_s` and `R_N` are waiting.
    Waiting,
}

impl Property {
    pub fn id(self) -> &'static str {
        match self {
            Property::Continuity => "P1",
            Property::CanonicalBottom => "P2",
            Property::TranspositionBuffer => "P3",
            Property::ColorBuffer => "P4",
            Property::Waiting => "P5",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    /// Valid except that `R_s` is a transposition region.
    AlmostValid,
    Invalid { property: Property, region: usize },
}

impl Tuple {
    pub fn region(&self, j: usize) -> (&ColorVector, &ColorVector, &ColorVector) {
        (
            &self.vecs[BufferParams::a(j)],
            &self.vecs[BufferParams::b(j)],
            &self.vecs[BufferParams::c(j)],
        )
    }

    pub fn kind(&self, j: usize, omega: usize) -> RegionKind {
        let (a, b, c) = self.region(j);
        classify_region(a, b, c, omega)
    }

    pub fn top(&self) -> &ColorVector {
        self.vecs.last().expect("non-empty tuple")
    }

    pub fn n_regions(&self) -> usize {
        self.vecs.len() / 3
    }

    /// One line per region: `R<j> <kind> A=<vec> B=<vec> C=<vec>`.
    pub fn dump(&self, omega: usize) -> String {
        let mut out = String::new();
        for j in 1..=self.n_regions() {
            let (a, b, c) = self.region(j);
            out.push_str(&format!(
                "R{j} {} A={a} B={b} C={c}\n",
                classify_region(a, b, c, omega).name()
            ));
        }
        out
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let omega = self.vecs.first().map_or(0, ColorVector::omega);
        f.write_str(&self.dump(omega))
    }
}

pub fn check_validity(nu: &Tuple, params: &BufferParams) -> Validity {
    let n = params.n_regions;
    let omega = params.omega;
    assert_eq!(nu.vecs.len(), 3 * n, "tuple length must be 3N");
    let invalid = |property, region| Validity::Invalid { property, region };
    for j in 1..n {
        if nu.vecs[BufferParams::c(j)] != nu.vecs[BufferParams::a(j + 1)] {
            return invalid(Property::Continuity, j);
        }
    }
    let (a, b, c) = nu.region(1);
    if !(a.is_canonical() && b.is_canonical() && c.is_canonical()) {
        return invalid(Property::CanonicalBottom, 1);
    }
    let mut temps: Option<(u32, u32)> = None;
    for j in 2..params.s {
        match nu.kind(j, omega) {
            RegionKind::Waiting => {}
            RegionKind::Transposition { z, z2, .. } => {
                let pair = (z.min(z2), z.max(z2));
                if *temps.get_or_insert(pair) != pair {
                    return invalid(Property::TranspositionBuffer, j);
                }
            }
            _ => return invalid(Property::TranspositionBuffer, j),
        }
    }
    for j in params.s + 1..n {
        match nu.kind(j, omega) {
            RegionKind::Waiting | RegionKind::Color { .. } => {}
            _ => return invalid(Property::ColorBuffer, j),
        }
    }
    if !nu.kind(n, omega).is_waiting() {
        return invalid(Property::Waiting, n);
    }
    match nu.kind(params.s, omega) {
        RegionKind::Waiting => Validity::Valid,
        RegionKind::Transposition { .. } => Validity::AlmostValid,
        _ => invalid(Property::Waiting, params.s),
    }
}

/// Vector of a clique: classes present in `bag` take their current colors, the
/// remaining classes take the smallest unused colors in class order.
pub fn clique_vector(
    bag: &[usize],
    coloring: &[u32],
    class_of: &[u32],
    omega: usize,
    k: usize,
) -> ColorVector {
    let mut entries = vec![0u32; omega];
    let mut used = vec![false; k.max(omega) + 2];
    for &v in bag {
        let c = coloring[v];
        entries[class_of[v] as usize - 1] = c;
        used[c as usize] = true;
    }
    let mut next = 1usize;
    for e in entries.iter_mut().filter(|e| **e == 0) {
        while used[next] {
            next += 1;
        }
        *e = next as u32;
        used[next] = true;
    }
    ColorVector(entries)
}

/// A valid tuple ending in `target`: the permutation of canonical colors is
/// factored into transpositions placed from `R_2` on, and each non-canonical entry
/// gets a color region from `R_{s+1}` on.
pub fn construct_valid_tuple(target: &ColorVector, params: &BufferParams) -> Tuple {
    let omega = params.omega;
    let n = params.n_regions;
    let (z, z2) = params.temps();
    let mut free: Vec<u32> = (1..=omega as u32).filter(|&c| !target.contains(c)).collect();
    free.reverse();
    let mut perm = target.clone();
    let mut color_regions = Vec::new();
    for p in 1..=omega {
        let c = target.at(p);
        if !params.is_canonical_color(c) {
            let c1 = free.pop().expect("enough canonical colors");
            perm.set(p, c1);
            color_regions.push((p, c1, c));
        }
    }

    let mut vecs = Vec::with_capacity(3 * n);
    let mut cur = ColorVector::canonical(omega);
    vecs.extend([cur.clone(), cur.clone(), cur.clone()]);
    for _ in 2..params.s {
        let Some(p) = (1..=omega).find(|&p| cur.at(p) != perm.at(p)) else {
            vecs.extend([cur.clone(), cur.clone(), cur.clone()]);
            continue;
        };
        let q = cur.class_of(perm.at(p)).expect("permutation of canonical colors");
        let mut mid = cur.clone();
        mid.set(p.min(q), z);
        mid.set(p.max(q), z2);
        let next = super::swap_coordinates(&cur, p, q);
        vecs.extend([cur.clone(), mid, next.clone()]);
        cur = next;
    }
    debug_assert_eq!(cur, perm);
    vecs.extend([cur.clone(), cur.clone(), cur.clone()]);
    let mut pending = color_regions.into_iter();
    for _ in params.s + 1..n {
        match pending.next() {
            Some((p, _, c)) => {
                let mut next = cur.clone();
                next.set(p, c);
                vecs.extend([cur.clone(), next.clone(), next.clone()]);
                cur = next;
            }
            None => vecs.extend([cur.clone(), cur.clone(), cur.clone()]),
        }
    }
    vecs.extend([cur.clone(), cur.clone(), cur]);
    Tuple { vecs }
}
