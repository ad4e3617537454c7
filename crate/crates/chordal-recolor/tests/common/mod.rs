#![allow(dead_code)]

use chordal_recolor::buffer::{BufferParams, ColorVector, Tuple};
use chordal_recolor::generators::{generate, GenSpec, Model};
use chordal_recolor::graph_core::{RootedTree, Structure};
use chordal_recolor::{Graph, RecolorStep};

pub fn gen(model: Model, n: usize, omega: usize, max_degree: usize, seed: u64) -> Graph {
    generate(&GenSpec { model, n, omega, max_degree, seed }).expect("feasible spec").0
}

/// Independent replay: every step proper, colors in range, ends at `end`.
pub fn replay_ok(g: &Graph, start: &[u32], steps: &[RecolorStep], end: &[u32], k: usize) -> bool {
    let mut cur = start.to_vec();
    for s in steps {
        if cur[s.v] != s.from || s.to == 0 || s.to as usize > k {
            return false;
        }
        cur[s.v] = s.to;
        if (0..g.n()).any(|u| u != s.v && g.has_edge(u, s.v) && cur[u] == s.to) {
            return false;
        }
    }
    cur == end
}

pub fn is_proper(g: &Graph, c: &[u32]) -> bool {
    g.edges().iter().all(|&(u, v)| c[u] != c[v])
}

/// True when the vertices of `set` induce a single cycle.
fn induces_cycle(g: &Graph, set: &[usize]) -> bool {
    let inside = |v: usize| set.contains(&v);
    if set.iter().any(|&v| g.neighbors(v).iter().filter(|&&w| inside(w)).count() != 2) {
        return false;
    }
    let mut seen = vec![set[0]];
    let mut stack = vec![set[0]];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if inside(w) && !seen.contains(&w) {
                seen.push(w);
                stack.push(w);
            }
        }
    }
    seen.len() == set.len()
}

/// Chordality by searching every vertex subset for an induced cycle of length >= 4.
pub fn brute_chordal(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 16);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() < 4 {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if induces_cycle(g, &set) {
            return false;
        }
    }
    true
}

/// Start height of `v` in the subtree of `u`, by walking the subtree.
pub fn naive_start_height(t: &RootedTree, u: usize, v: usize) -> Option<usize> {
    let mut best = None;
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        if t.bags[x].contains(&v) {
            let h = t.height[x] - t.height[u];
            best = Some(best.map_or(h, |b: usize| b.max(h)));
        }
        stack.extend(t.children[x].iter().copied());
    }
    best
}

/// Block index (0-based, top block is `3N - 1`) of each vertex below node `u`;
/// `None` for vertices outside the subtree, `Some(usize::MAX)` for the canonical zone.
pub fn blocks_below(st: &Structure, p: &BufferParams, u: usize, n: usize) -> Vec<Option<usize>> {
    let w = p.delta.max(1);
    let nb = 3 * p.n_regions;
    (0..n)
        .map(|v| {
            naive_start_height(&st.tree, u, v).map(|e| {
                if e >= w * nb {
                    usize::MAX
                } else {
                    nb - 1 - e / w
                }
            })
        })
        .collect()
}

pub fn canonical(c: u32, omega: usize) -> bool {
    c >= 1 && c as usize <= omega
}

/// Region kind re-derived straight from the definitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Naive {
    Waiting,
    Color { p: usize, c1: u32, z: u32 },
    Transposition { p: usize, q: usize, z: u32, z2: u32 },
    Irregular,
}

pub fn naive_kind(a: &ColorVector, b: &ColorVector, c: &ColorVector, omega: usize) -> Naive {
    let w = a.0.len();
    if a == b && b == c {
        return Naive::Waiting;
    }
    for p in 1..=w {
        let (c1, z) = (a.at(p), b.at(p));
        if !canonical(c1, omega) || canonical(z, omega) || c.at(p) != z {
            continue;
        }
        let rest = (1..=w).filter(|&m| m != p).all(|m| {
            let x = a.at(m);
            x == b.at(m) && x == c.at(m) && x != c1 && x != z
        });
        if rest {
            return Naive::Color { p, c1, z };
        }
    }
    for p in 1..=w {
        for q in p + 1..=w {
            let (c1, c2, z, z2) = (a.at(p), a.at(q), b.at(p), b.at(q));
            if !(canonical(c1, omega) && canonical(c2, omega) && c1 != c2) {
                continue;
            }
            if canonical(z, omega) || canonical(z2, omega) || z == z2 {
                continue;
            }
            if c.at(p) != c2 || c.at(q) != c1 {
                continue;
            }
            let rest = (1..=w).filter(|&m| m != p && m != q).all(|m| {
                let x = a.at(m);
                x == b.at(m) && x == c.at(m) && canonical(x, omega) && ![c1, c2, z, z2].contains(&x)
            });
            if rest {
                return Naive::Transposition { p, q, z, z2 };
            }
        }
    }
    Naive::Irregular
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NaiveValidity {
    Valid,
    AlmostValid,
    Invalid,
}

/// Properties 1-5 and 5' checked one by one, without early structure sharing.
pub fn naive_validity(nu: &Tuple, p: &BufferParams) -> NaiveValidity {
    let n = p.n_regions;
    let w = p.omega;
    let v = |i: usize| &nu.vecs[i];
    let kind = |j: usize| naive_kind(v(3 * (j - 1)), v(3 * (j - 1) + 1), v(3 * (j - 1) + 2), w);
    let continuity = (1..n).all(|j| v(3 * (j - 1) + 2) == v(3 * j));
    let bottom = (0..3).all(|i| v(i).0.iter().enumerate().all(|(m, &c)| c as usize == m + 1));
    let mut temps = None;
    let mut tbuf = true;
    for j in 2..p.s {
        match kind(j) {
            Naive::Waiting => {}
            Naive::Transposition { z, z2, .. } => {
                let pair = (z.min(z2), z.max(z2));
                if *temps.get_or_insert(pair) != pair {
                    tbuf = false;
                }
            }
            _ => tbuf = false,
        }
    }
    let cbuf = (p.s + 1..n).all(|j| matches!(kind(j), Naive::Waiting | Naive::Color { .. }));
    let top_waiting = kind(n) == Naive::Waiting;
    if !(continuity && bottom && tbuf && cbuf && top_waiting) {
        return NaiveValidity::Invalid;
    }
    match kind(p.s) {
        Naive::Waiting => NaiveValidity::Valid,
        Naive::Transposition { .. } => NaiveValidity::AlmostValid,
        _ => NaiveValidity::Invalid,
    }
}

/// `nu_{C_{s-1}}`: the canonical vector pushed through every transposition region.
pub fn after_transpositions<'a>(nu: &'a Tuple, p: &BufferParams) -> &'a ColorVector {
    &nu.vecs[3 * (p.s - 2) + 2]
}

/// Small deterministic generator for test data.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

/// Random vector with distinct entries in `1..=k`.
pub fn random_vector(rng: &mut Lcg, omega: usize, k: usize) -> ColorVector {
    let mut colors: Vec<u32> = (1..=k as u32).collect();
    for i in (1..colors.len()).rev() {
        colors.swap(i, rng.below(i + 1));
    }
    ColorVector(colors[..omega].to_vec())
}
