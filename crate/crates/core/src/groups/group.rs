use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{domain, Error, Result};
use crate::labels::Ground;

use super::Permutation;

/// Default cap on the number of group elements produced by closure.
pub const DEFAULT_GROUP_CAP: usize = 10080;

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub size: usize,
}

/// A permutation group given by generators, with its full element list and
/// conjugacy classes.
///
/// Elements and classes are sorted by the cycle-notation key of
/// [`cycle_key`], so the identity comes first and the order never depends
/// on the order of the generators.
#[derive(Debug)]
pub struct PermGroup {
    ground: Ground,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Vec<u8>, usize>,
    class_of: Vec<usize>,
    classes: Vec<ConjugacyClass>,
}

/// Cycles as index lists, each starting at its minimum, sorted; `()` is `[]`.
pub fn cycle_key(p: &Permutation) -> Vec<Vec<usize>> {
    p.cycles()
}

impl PermGroup {
    pub fn generate(ground: &Ground, generators: Vec<Permutation>) -> Result<Arc<PermGroup>> {
        Self::generate_capped(ground, generators, DEFAULT_GROUP_CAP)
    }

    pub fn trivial(ground: &Ground) -> Arc<PermGroup> {
        Self::generate(ground, vec![]).expect("trivial group")
    }

    pub fn generate_capped(ground: &Ground, generators: Vec<Permutation>, cap: usize) -> Result<Arc<PermGroup>> {
        if let Some(g) = generators.iter().find(|g| g.ground() != ground) {
            return Err(domain!("generator {g} lives on a different label set"));
        }
        let id = Permutation::identity(ground);
        let mut seen: HashMap<Vec<u8>, ()> = HashMap::new();
        seen.insert(id.images_key(), ());
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for s in &generators {
                let y = s.compose(&x);
                if seen.insert(y.images_key(), ()).is_none() {
                    if elements.len() >= cap {
                        return Err(Error::Resource(format!("group order exceeds the cap of {cap}")));
                    }
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        elements.sort_by_cached_key(|p| (cycle_key(p), p.images_key()));
        let index: HashMap<Vec<u8>, usize> =
            elements.iter().enumerate().map(|(i, p)| (p.images_key(), i)).collect();

        // conjugacy classes: orbits of conjugation by the generators
        let n = elements.len();
        let mut class_of = vec![usize::MAX; n];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        let inverses: Vec<Permutation> = generators.iter().map(|s| s.inverse()).collect();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let c = orbits.len();
            class_of[start] = c;
            let mut members = vec![start];
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for (s, si) in generators.iter().zip(&inverses) {
                    let conj = s.compose(&elements[i]).compose(si);
                    let j = index[conj.images()];
                    if class_of[j] == usize::MAX {
                        class_of[j] = c;
                        members.push(j);
                        stack.push(j);
                    }
                }
            }
            orbits.push(members);
        }
        // elements are sorted, so each orbit's minimum is its canonical
        // representative and orbits were discovered in representative order
        let classes = orbits
            .iter()
            .map(|m| ConjugacyClass {
                representative: elements[*m.iter().min().unwrap()].clone(),
                size: m.len(),
            })
            .collect();
        Ok(Arc::new(PermGroup { ground: ground.clone(), generators, elements, index, class_of, classes }))
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn element_index(&self, p: &Permutation) -> Option<usize> {
        if p.ground() != &self.ground {
            return None;
        }
        self.index.get(p.images()).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.element_index(p).is_some()
    }

    /// Class index of the element at position `i` of [`elements`](Self::elements).
    pub fn class_of_element(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_of(&self, p: &Permutation) -> Option<usize> {
        self.element_index(p).map(|i| self.class_of[i])
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.elements.len()
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.elements.iter().fold(1, |acc, p| num_integer::lcm(acc, p.order()))
    }

    /// Same ground and same element set.
    pub fn same_as(&self, other: &PermGroup) -> bool {
        std::ptr::eq(self, other) || (self.ground == other.ground && self.elements == other.elements)
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}
impl Eq for PermGroup {}
