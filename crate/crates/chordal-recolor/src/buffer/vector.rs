use std::fmt;

/// One color per canonical class; entry `p` (1-based) is the color of class `X_p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColorVector(pub Vec<u32>);

impl ColorVector {
    pub fn canonical(omega: usize) -> Self {
        ColorVector((1..=omega as u32).collect())
    }

    pub fn omega(&self) -> usize {
        self.0.len()
    }

    pub fn at(&self, p: usize) -> u32 {
        self.0[p - 1]
    }

    pub fn set(&mut self, p: usize, c: u32) {
        self.0[p - 1] = c;
    }

    /// Class carrying color `c`, if any.
    pub fn class_of(&self, c: u32) -> Option<usize> {
        self.0.iter().position(|&x| x == c).map(|i| i + 1)
    }

    pub fn contains(&self, c: u32) -> bool {
        self.0.contains(&c)
    }

    /// Distinct entries, all within `1..=k`.
    pub fn is_well_formed(&self, k: usize) -> bool {
        let mut seen = vec![false; k + 1];
        for &c in &self.0 {
            if c == 0 || c as usize > k || seen[c as usize] {
                return false;
            }
            seen[c as usize] = true;
        }
        true
    }

    pub fn is_canonical(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &c)| c as usize == i + 1)
    }
}

impl fmt::Display for ColorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Number of classes on which the two vectors disagree.
pub fn border_distance(a: &ColorVector, b: &ColorVector) -> usize {
    a.0.iter().zip(&b.0).filter(|(x, y)| x != y).count()
}

/// Exchanges the entries of classes `p` and `l`.
pub fn swap_coordinates(nu: &ColorVector, p: usize, l: usize) -> ColorVector {
    let mut out = nu.clone();
    out.0.swap(p - 1, l - 1);
    out
}

/// A color shared by consecutive vectors must sit on the same class in both.
pub fn is_vectorially_proper(seq: &[ColorVector]) -> bool {
    seq.windows(2).all(|w| {
        w[0].0
            .iter()
            .enumerate()
            .all(|(i, &c)| w[1].0.iter().position(|&x| x == c).is_none_or(|j| i == j))
    })
}
