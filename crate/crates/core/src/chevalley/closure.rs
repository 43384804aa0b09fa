//! Breadth-first product closure of a finite generating set.

use std::hash::Hash;

use indexmap::IndexSet;

use super::ChevalleyError;

pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

pub trait GroupElem: Clone + Eq + Hash {
    fn mul(&self, other: &Self) -> Self;
    fn identity_like(&self) -> Self;
}

#[derive(Debug, Clone)]
pub struct Closure<E> {
    /// Elements in discovery order, identity first.
    pub elements: IndexSet<E>,
}

impl<E> Closure<E> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Right-multiplies every discovered element by every generator, in order,
/// until nothing new appears. Fails once more than `cap` elements are found.
pub fn bfs_closure<E: GroupElem>(generators: &[E], cap: usize) -> Result<Closure<E>, ChevalleyError> {
    let first = generators.first().ok_or(ChevalleyError::NoGenerators)?;
    if cap == 0 {
        return Err(ChevalleyError::CapExceeded { partial: 0 });
    }
    let mut elements = IndexSet::new();
    elements.insert(first.identity_like());
    let mut next = 0;
    while next < elements.len() {
        let current = elements[next].clone();
        next += 1;
        for g in generators {
            let p = current.mul(g);
            if !elements.contains(&p) {
                if elements.len() == cap {
                    return Err(ChevalleyError::CapExceeded { partial: cap });
                }
                elements.insert(p);
            }
        }
    }
    Ok(Closure { elements })
}
