use std::collections::BTreeMap;
use std::fmt;

use crate::error::{domain, Error, Result};
use crate::labels::{bits, Ground, Mask};

/// A bijection of a label set onto itself, stored as an image table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    ground: Ground,
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(ground: &Ground) -> Self {
        Permutation { ground: ground.clone(), images: (0..ground.len() as u8).collect() }
    }

    pub fn from_images(ground: &Ground, images: Vec<usize>) -> Result<Self> {
        let n = ground.len();
        if images.len() != n {
            return Err(domain!("image table has {} entries for {n} labels", images.len()));
        }
        let mut hit = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut hit[i], true) {
                return Err(domain!("image table is not a bijection"));
            }
        }
        Ok(Permutation { ground: ground.clone(), images: images.into_iter().map(|i| i as u8).collect() })
    }

    /// Cycle notation such as `"(a c)(b d)"`; `"()"` or `""` is the identity.
    pub fn parse_cycles(ground: &Ground, s: &str) -> Result<Self> {
        let mut images: Vec<usize> = (0..ground.len()).collect();
        let mut moved = vec![false; ground.len()];
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::Parse(format!("malformed cycle notation {s:?}")))?;
            rest = body.1.trim_start();
            let cycle = body
                .0
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| ground.index(t))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
            for (k, &x) in cycle.iter().enumerate() {
                if std::mem::replace(&mut moved[x], true) {
                    return Err(Error::Parse(format!("{s:?}: label {:?} appears twice", ground.label(x))));
                }
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_images(ground, images)
    }

    /// Explicit map; labels absent from the map are fixed.
    pub fn from_map(ground: &Ground, map: &BTreeMap<String, String>) -> Result<Self> {
        let mut images: Vec<usize> = (0..ground.len()).collect();
        for (k, v) in map {
            images[ground.index(k)?] = ground.index(v)?;
        }
        Permutation::from_images(ground, images)
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub(crate) fn images_key(&self) -> Vec<u8> {
        self.images.clone()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    #[inline]
    pub fn apply_mask(&self, m: Mask) -> Mask {
        bits(m).fold(0, |acc, i| acc | 1 << self.images[i])
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            ground: self.ground.clone(),
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Permutation { ground: self.ground.clone(), images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// Nontrivial cycles, each starting at its smallest index, sorted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| num_integer::lcm(acc, c.len()))
    }

    /// +1 or −1.
    pub fn sign(&self) -> i32 {
        if self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The image of a coloring under this permutation: `(g·f)(g(i)) = f(i)`.
    pub fn act_on_values<T: Clone>(&self, values: &[T]) -> Vec<T> {
        let mut out = values.to_vec();
        for (i, v) in values.iter().enumerate() {
            out[self.apply(i)] = v.clone();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let ls: Vec<&str> = c.iter().map(|&i| self.ground.label(i)).collect();
            write!(f, "({})", ls.join(" "))?;
        }
        Ok(())
    }
}
