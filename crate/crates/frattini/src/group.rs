//! Finite permutation groups generated by explicit permutations.
//!
//! A [`Group`] always carries its full element table in canonical
//! (lexicographic image-sequence) order, so order, membership and
//! enumeration are exact. Construction walks the closure breadth-first
//! and refuses to grow past a configurable cap.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::perm::Permutation;

/// Default ceiling on the number of elements a closure may reach.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("generator has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("closure exceeds the enumeration cap of {cap} elements")]
    CapExceeded { cap: usize },
}

struct GroupData {
    degree: usize,
    generators: Vec<Permutation>,
    /// All elements in canonical order; the identity is always first.
    elements: Vec<Permutation>,
}

/// A finite permutation group `⟨generators⟩` on the points `1..=degree`.
///
/// `Group` is a cheap handle (internally reference-counted); cloning never
/// copies the element table. Values are immutable after construction.
#[derive(Clone)]
pub struct Group(Arc<GroupData>);

impl Group {
    /// The closure of `generators` under composition, with the default
    /// enumeration cap.
    pub fn build(degree: usize, generators: Vec<Permutation>) -> Result<Group, GroupError> {
        Group::build_with_cap(degree, generators, DEFAULT_ENUMERATION_CAP)
    }

    /// As [`Group::build`], but with an explicit cap on the element count.
    pub fn build_with_cap(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Group, GroupError> {
        if degree == 0 {
            return Err(GroupError::ZeroDegree);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let elements = closure(degree, &generators, cap)?;
        Ok(Group(Arc::new(GroupData {
            degree,
            generators,
            elements,
        })))
    }

    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Group {
        Group::build(degree, Vec::new()).expect("trivial group always builds")
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.0.generators
    }

    /// All elements in canonical order. Deterministic across builds.
    pub fn elements(&self) -> &[Permutation] {
        &self.0.elements
    }

    pub fn order(&self) -> usize {
        self.0.elements.len()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.0.degree)
    }

    /// Membership in the element table.
    ///
    /// Panics if `p` has the wrong degree; that is always a caller bug,
    /// never a legitimate "not a member".
    pub fn contains(&self, p: &Permutation) -> bool {
        assert_eq!(
            p.degree(),
            self.0.degree,
            "degree mismatch in membership test"
        );
        self.0.elements.binary_search(p).is_ok()
    }

    /// True iff every generator of `self` lies in `other`.
    ///
    /// Panics if the degrees differ.
    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        assert_eq!(
            self.0.degree,
            other.0.degree,
            "degree mismatch in subgroup test"
        );
        self.0.generators.iter().all(|g| other.contains(g))
    }

    /// True iff `self` and `other` denote the same set of permutations.
    pub fn same_group(&self, other: &Group) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.degree == other.0.degree && self.0.elements == other.0.elements)
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(degree {}, order {})", self.degree(), self.order())
    }
}

/// Breadth-first closure of `gens` starting from the identity. FIFO order
/// with generators applied in their given order keeps discovery
/// deterministic; the result is then sorted into canonical order.
fn closure(
    degree: usize,
    gens: &[Permutation],
    cap: usize,
) -> Result<Vec<Permutation>, GroupError> {
    let identity = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(identity.clone());
    let mut queue = VecDeque::from([identity]);
    while let Some(current) = queue.pop_front() {
        for g in gens {
            let next = current.compose(g);
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(GroupError::CapExceeded { cap });
                }
                queue.push_back(next);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(elements)
}
