//! Permutations of {0, …, n−1} stored by image arrays.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of the points 0..degree. The derived `Ord` (lexicographic on
/// the image array) is the canonical total order used for witnesses and class
/// representatives throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            let i = img as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "image array {:?} is not a bijection on 0..{}",
                    images, n
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint cycles with 1-based points, e.g. `(1 2 3)(4 5)`.
    pub fn from_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let bad = |msg: &str| Error::InvalidPermutation(format!("{msg}: {text}"));
        let mut rest = text.trim();
        if rest == "()" {
            return Ok(Permutation { images });
        }
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(bad("expected '('"));
            }
            let close = rest.find(')').ok_or_else(|| bad("unbalanced '('"))?;
            let inner = &rest[1..close];
            let pts: Vec<usize> = inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| bad("bad point")))
                .collect::<Result<_>>()?;
            for &p in &pts {
                if p == 0 || p > degree {
                    return Err(bad(&format!("point {p} out of range 1..={degree}")));
                }
            }
            for w in 0..pts.len() {
                let from = pts[w] - 1;
                let to = pts[(w + 1) % pts.len()] - 1;
                if images[from] != from as u16 {
                    return Err(bad("cycles are not disjoint"));
                }
                images[from] = to as u16;
            }
            rest = rest[close + 1..].trim_start();
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    /// Function composition: `(self.compose(other))(x) = self(other(x))`,
    /// i.e. `other` acts first. Matches the matrix convention so that
    /// matrix-to-permutation maps are homomorphisms.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        let images = other
            .images
            .iter()
            .map(|&x| self.images[x as usize])
            .collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u16; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u16;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &img)| i == img as usize)
    }

    /// Order as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut ord: u64 = 1;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            ord = num::integer::lcm(ord, len);
        }
        ord
    }

    pub fn pow(&self, k: u64) -> Self {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base.clone());
            k >>= 1;
        }
        acc
    }

    /// Nontrivial cycles (1-based points), sorted by least moved point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cyc);
        }
        out
    }
}

fn fmt_cycles(p: &Permutation, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let cycles = p.cycles();
    if cycles.is_empty() {
        return write!(f, "()");
    }
    for cyc in cycles {
        write!(f, "(")?;
        for (i, pt) in cyc.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{pt}")?;
        }
        write!(f, ")")?;
    }
    Ok(())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_cycles(self, f)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_cycles(self, f)
    }
}
