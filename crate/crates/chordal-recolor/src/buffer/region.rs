use std::fmt;

use super::ColorVector;

/// Shape of a region `(A, B, C)`. Classes are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegionKind {
    Waiting,
    /// Class `p` moves from canonical `c1` (on `A`) to non-canonical `z` (on `B`, `C`).
    Color { p: usize, c1: u32, z: u32 },
    /// Classes `p < q` exchange canonical colors `c1`, `c2` through `z`, `z2` on `B`.
    Transposition {
        p: usize,
        q: usize,
        c1: u32,
        c2: u32,
        z: u32,
        z2: u32,
    },
    Irregular(String),
}

impl RegionKind {
    pub fn name(&self) -> &'static str {
        match self {
            RegionKind::Waiting => "waiting",
            RegionKind::Color { .. } => "color",
            RegionKind::Transposition { .. } => "transposition",
            RegionKind::Irregular(_) => "irregular",
        }
    }

    pub fn is_waiting(&self) -> bool {
        matches!(self, RegionKind::Waiting)
    }

    pub fn is_transposition(&self) -> bool {
        matches!(self, RegionKind::Transposition { .. })
    }

    /// The pair of classes permuted by a transposition region.
    pub fn transposed_classes(&self) -> Option<(usize, usize)> {
        match *self {
            RegionKind::Transposition { p, q, .. } => Some((p, q)),
            _ => None,
        }
    }
}

impl fmt::Display for RegionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegionKind::Waiting => write!(f, "waiting"),
            RegionKind::Color { p, c1, z } => write!(f, "color(p={p},c1={c1},z={z})"),
            RegionKind::Transposition {
                p,
                q,
                c1,
                c2,
                z,
                z2,
            } => write!(f, "transposition(p={p},q={q},c1={c1},c2={c2},z={z},z'={z2})"),
            RegionKind::Irregular(why) => write!(f, "irregular({why})"),
        }
    }
}

pub fn classify_region(
    a: &ColorVector,
    b: &ColorVector,
    c: &ColorVector,
    omega: usize,
) -> RegionKind {
    let canon = |x: u32| x >= 1 && x as usize <= omega;
    let w = a.omega();
    let mut moving = [0usize; 2];
    let mut count = 0;
    for p in 1..=w {
        if a.at(p) != b.at(p) || b.at(p) != c.at(p) {
            if count < 2 {
                moving[count] = p;
            }
            count += 1;
        }
    }
    match (count, moving) {
        (0, _) => RegionKind::Waiting,
        (1, [p, _]) => {
            let (c1, z) = (a.at(p), b.at(p));
            if canon(c1) && !canon(z) && c.at(p) == z {
                RegionKind::Color { p, c1, z }
            } else {
                RegionKind::Irregular(format!("class {p} changes without a color-region shape"))
            }
        }
        (2, [p, q]) => {
            let (c1, c2, z, z2) = (a.at(p), a.at(q), b.at(p), b.at(q));
            let shape = canon(c1)
                && canon(c2)
                && !canon(z)
                && !canon(z2)
                && c.at(p) == c2
                && c.at(q) == c1;
            let others_canonical = (1..=w)
                .filter(|&m| m != p && m != q)
                .all(|m| canon(a.at(m)));
            if shape && others_canonical {
                RegionKind::Transposition {
                    p,
                    q,
                    c1,
                    c2,
                    z,
                    z2,
                }
            } else {
                RegionKind::Irregular(format!("classes {p},{q} change without a transposition shape"))
            }
        }
        (more, _) => RegionKind::Irregular(format!("{more} classes change")),
    }
}
