//! Label universes and the bitmask encoding of label subsets.

use std::fmt;
use std::sync::Arc;

use crate::error::{domain, Error, Result};

/// A subset of a [`Ground`], bit `i` standing for the `i`-th label.
pub type Mask = u32;

/// Largest supported label set. Everything is exponential long before this.
pub const MAX_LABELS: usize = 30;

const RESERVED: &[char] = &[',', '|', '{', '}', '(', ')', '<', '[', ']', '"'];

/// A finite set of opaque string labels kept in lexicographic order.
///
/// Index `i` is the `i`-th label in that order, so comparing index sequences
/// is the same as comparing label sequences.
#[derive(Clone)]
pub struct Ground(Arc<[String]>);

impl Ground {
    pub fn new<I, S>(labels: I) -> Result<Ground>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut v: Vec<String> = labels.into_iter().map(Into::into).collect();
        for l in &v {
            if l.is_empty() {
                return Err(Error::Parse("empty label".into()));
            }
            if l.chars().any(|c| c.is_whitespace() || RESERVED.contains(&c)) {
                return Err(Error::Parse(format!("label {l:?} contains a reserved character")));
            }
        }
        v.sort();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(domain!("duplicate label {:?}", w[0]));
        }
        if v.len() > MAX_LABELS {
            return Err(Error::Resource(format!(
                "{} labels; at most {MAX_LABELS} are supported",
                v.len()
            )));
        }
        Ok(Ground(v.into()))
    }

    pub fn labels(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    pub fn index(&self, label: &str) -> Result<usize> {
        self.index_of(label).ok_or_else(|| domain!("unknown label {label:?}"))
    }

    pub fn full_mask(&self) -> Mask {
        full_mask(self.len())
    }

    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Mask> {
        let mut m = 0;
        for l in labels {
            let i = self.index(l.as_ref())?;
            if m & (1 << i) != 0 {
                return Err(domain!("label {:?} repeated", l.as_ref()));
            }
            m |= 1 << i;
        }
        Ok(m)
    }

    pub fn labels_of(&self, m: Mask) -> Vec<&str> {
        bits(m).map(|i| self.label(i)).collect()
    }

    /// `"a,c"`
    pub fn fmt_set(&self, m: Mask) -> String {
        self.labels_of(m).join(",")
    }
}

impl PartialEq for Ground {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for Ground {}

impl std::hash::Hash for Ground {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl fmt::Debug for Ground {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ground{:?}", &self.0[..])
    }
}

pub fn full_mask(n: usize) -> Mask {
    if n >= 32 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

/// Indices of the set bits, ascending.
pub fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// Nonempty submasks of `m`, in decreasing numeric order.
pub fn nonempty_submasks(m: Mask) -> impl Iterator<Item = Mask> {
    let mut s = m;
    let mut done = m == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = s;
        s = (s.wrapping_sub(1)) & m;
        if s == 0 {
            done = true;
        }
        Some(cur)
    })
}
