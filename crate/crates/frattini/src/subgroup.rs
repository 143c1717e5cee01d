//! Subgroups of a parent [`Group`]: construction, normalizers, product
//! sets, normality tests, conjugation, and exhaustive enumeration.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::group::{Group, GroupError};
use crate::perm::Permutation;

/// Ceiling on `|G|` for [`all_subgroups`]; the breadth-first enumeration is
/// exhaustive but only sensible for small groups.
pub const DEFAULT_SUBGROUP_ENUMERATION_CAP: usize = 200;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubgroupError {
    #[error("generator {gen} is not an element of the parent group")]
    GeneratorOutsideGroup { gen: String },
    #[error("element {element} is outside the parent group")]
    ElementOutsideGroup { element: String },
    #[error("subgroup is not contained in the given group")]
    NotContained,
    #[error("subgroups have different parent groups")]
    ParentMismatch,
    #[error("group order {order} exceeds the subgroup-enumeration cap of {cap}")]
    EnumerationCapExceeded { order: usize, cap: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A subgroup handle: a closed set of elements tied to a parent [`Group`].
#[derive(Clone)]
pub struct Subgroup {
    parent: Group,
    generators: Vec<Permutation>,
    /// Full element table in canonical order; identity first.
    elements: Vec<Permutation>,
}

impl Subgroup {
    /// The closure `⟨gens⟩` inside `parent`. Every generator must be a
    /// member of `parent`.
    pub fn generated(parent: &Group, gens: &[Permutation]) -> Result<Subgroup, SubgroupError> {
        for g in gens {
            if g.degree() != parent.degree() || !parent.contains(g) {
                return Err(SubgroupError::GeneratorOutsideGroup { gen: g.to_string() });
            }
        }
        let closed = Group::build_with_cap(parent.degree(), gens.to_vec(), parent.order())?;
        Ok(Subgroup {
            parent: parent.clone(),
            generators: gens.to_vec(),
            elements: closed.elements().to_vec(),
        })
    }

    /// `parent` viewed as a subgroup of itself.
    pub fn whole(parent: &Group) -> Subgroup {
        Subgroup {
            parent: parent.clone(),
            generators: parent.generators().to_vec(),
            elements: parent.elements().to_vec(),
        }
    }

    /// The trivial subgroup of `parent`.
    pub fn trivial(parent: &Group) -> Subgroup {
        Subgroup {
            parent: parent.clone(),
            generators: Vec::new(),
            elements: vec![parent.identity()],
        }
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.parent.degree()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        assert_eq!(
            p.degree(),
            self.degree(),
            "degree mismatch in membership test"
        );
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// True iff this subgroup is the whole parent group.
    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.parent.order()
    }

    /// Re-roots this subgroup inside `group`, which must contain it.
    pub fn in_group(&self, group: &Group) -> Result<Subgroup, SubgroupError> {
        if group.degree() != self.degree()
            || !self.generators.iter().all(|g| group.contains(g))
        {
            return Err(SubgroupError::NotContained);
        }
        Ok(Subgroup {
            parent: group.clone(),
            generators: self.generators.clone(),
            elements: self.elements.clone(),
        })
    }

    /// A short hex digest of the canonical element table. Two subgroups of
    /// the same parent get equal digests iff their element sets are equal
    /// (up to 64-bit hash collisions, which only affect display).
    pub fn fingerprint(&self) -> String {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut feed = |byte: u8| {
            h ^= byte as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        };
        for byte in (self.degree() as u32).to_le_bytes() {
            feed(byte);
        }
        for e in &self.elements {
            for &img in e.images() {
                for byte in img.to_le_bytes() {
                    feed(byte);
                }
            }
        }
        format!("{h:016x}")
    }

    /// True iff both handles denote the same element set of the same parent.
    pub fn same_subgroup(&self, other: &Subgroup) -> bool {
        self.parent.same_group(&other.parent) && self.elements == other.elements
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, gens ", self.order())?;
        if self.generators.is_empty() {
            f.write_str("⟨⟩")?;
        } else {
            for (i, g) in self.generators.iter().enumerate() {
                if i > 0 {
                    f.write_str("; ")?;
                }
                write!(f, "{g}")?;
            }
        }
        f.write_str(")")
    }
}

/// The normalizer `N_G(H) = { g ∈ G : H^g = H }`.
///
/// Scans every element of `G`, conjugating each generator of `H`; the scan
/// is exact and doubles as the reference point for any faster strategy.
pub fn normalizer(g: &Group, h: &Subgroup) -> Result<Subgroup, SubgroupError> {
    require_contained(g, h)?;
    let elements: Vec<Permutation> = g
        .elements()
        .iter()
        .filter(|cand| h.generators().iter().all(|x| h.contains(&x.conjugate(cand))))
        .cloned()
        .collect();
    let generators = reduce_generators(g.degree(), &elements);
    Ok(Subgroup {
        parent: g.clone(),
        generators,
        elements,
    })
}

/// The product set `A·B = { a·b : a ∈ A, b ∈ B }` of two subgroups with the
/// same parent. Generally not a subgroup; the interesting question is
/// whether it covers the whole parent.
pub struct ProductSet {
    elements: Vec<Permutation>,
    parent_order: usize,
}

impl ProductSet {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn covers_parent(&self) -> bool {
        self.elements.len() == self.parent_order
    }
}

pub fn product_set(a: &Subgroup, b: &Subgroup) -> Result<ProductSet, SubgroupError> {
    if !a.parent.same_group(&b.parent) {
        return Err(SubgroupError::ParentMismatch);
    }
    let mut set = BTreeSet::new();
    for x in a.elements() {
        for y in b.elements() {
            set.insert(x.compose(y));
        }
    }
    Ok(ProductSet {
        elements: set.into_iter().collect(),
        parent_order: a.parent.order(),
    })
}

/// Order of `A ∩ B`: the smaller table filtered through the larger one.
pub fn intersection_order(a: &Subgroup, b: &Subgroup) -> Result<usize, SubgroupError> {
    if !a.parent.same_group(&b.parent) {
        return Err(SubgroupError::ParentMismatch);
    }
    let (small, large) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    Ok(small.elements().iter().filter(|e| large.contains(e)).count())
}

/// True iff `K ◁ G`: every generator of `G` conjugates every generator of
/// `K` back into `K`. Sufficient because conjugation by a fixed element is
/// an automorphism and the group is finite.
pub fn is_normal(g: &Group, k: &Subgroup) -> Result<bool, SubgroupError> {
    require_contained(g, k)?;
    Ok(g.generators()
        .iter()
        .all(|gg| k.generators().iter().all(|kk| k.contains(&kk.conjugate(gg)))))
}

/// The conjugate subgroup `H^g`. `g` must lie in `H`'s parent.
pub fn conjugate_subgroup(h: &Subgroup, g: &Permutation) -> Result<Subgroup, SubgroupError> {
    if g.degree() != h.degree() || !h.parent.contains(g) {
        return Err(SubgroupError::ElementOutsideGroup { element: g.to_string() });
    }
    // Conjugation is an automorphism, so the conjugated table is already
    // closed; no fresh closure is needed.
    let mut elements: Vec<Permutation> = h.elements.iter().map(|e| e.conjugate(g)).collect();
    elements.sort_unstable();
    let generators = h.generators.iter().map(|e| e.conjugate(g)).collect();
    Ok(Subgroup {
        parent: h.parent.clone(),
        generators,
        elements,
    })
}

/// Every subgroup of `G`, exactly once, sorted by (order, element table).
///
/// Breadth-first over the subgroup lattice: seed with all cyclic subgroups,
/// then repeatedly extend each known subgroup by one further element of `G`,
/// deduplicating by the canonical element table. Every subgroup is reachable
/// this way because it can be built one generator at a time.
pub fn all_subgroups(g: &Group) -> Result<Vec<Subgroup>, SubgroupError> {
    all_subgroups_with_cap(g, DEFAULT_SUBGROUP_ENUMERATION_CAP)
}

pub fn all_subgroups_with_cap(g: &Group, cap: usize) -> Result<Vec<Subgroup>, SubgroupError> {
    if g.order() > cap {
        return Err(SubgroupError::EnumerationCapExceeded { order: g.order(), cap });
    }
    let mut known: BTreeMap<Vec<Permutation>, Subgroup> = BTreeMap::new();
    let mut queue: VecDeque<Subgroup> = VecDeque::new();
    let mut admit = |sub: Subgroup, queue: &mut VecDeque<Subgroup>| {
        if !known.contains_key(sub.elements()) {
            known.insert(sub.elements().to_vec(), sub.clone());
            queue.push_back(sub);
        }
    };
    admit(Subgroup::trivial(g), &mut queue);
    for x in g.elements() {
        if !x.is_identity() {
            admit(Subgroup::generated(g, std::slice::from_ref(x))?, &mut queue);
        }
    }
    while let Some(current) = queue.pop_front() {
        if current.is_whole() {
            continue;
        }
        for x in g.elements() {
            if current.contains(x) {
                continue;
            }
            let mut gens = current.generators().to_vec();
            gens.push(x.clone());
            admit(Subgroup::generated(g, &gens)?, &mut queue);
        }
    }
    let mut subs: Vec<Subgroup> = known.into_values().collect();
    subs.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements().cmp(b.elements()))
    });
    Ok(subs)
}

/// Greedy generating set for a known-closed element table: walk the table in
/// canonical order and keep each element that grows the closure. Keeps
/// normalizer output and certificates readable.
pub(crate) fn reduce_generators(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut closed: BTreeSet<Permutation> = BTreeSet::new();
    closed.insert(Permutation::identity(degree));
    for e in elements {
        if closed.contains(e) {
            continue;
        }
        gens.push(e.clone());
        // Rebuild the closure of the enlarged generating set.
        let grown = Group::build_with_cap(degree, gens.clone(), elements.len())
            .expect("closure of a subset of a closed table stays within it");
        closed = grown.elements().iter().cloned().collect();
        if closed.len() == elements.len() {
            break;
        }
    }
    gens
}

fn require_contained(g: &Group, h: &Subgroup) -> Result<(), SubgroupError> {
    if h.degree() != g.degree() || !h.generators().iter().all(|x| g.contains(x)) {
        return Err(SubgroupError::NotContained);
    }
    Ok(())
}
